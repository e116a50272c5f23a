use crate::error::{Error, Result};
use crate::exact::{Matrix, Perm, Subspace};
use crate::freeop::{
    comp_count, quotient_dims_from, s3_action_matrix, w2_dim, w2_index, w2_unindex, DimRow,
    FreeOperad, GenSpace, Kind, Weight2Vector,
};

/// Quadratic presentation `P = F(V)/(R)`: a generating space of binary
/// operations together with a canonical subspace of the weight-2 part of
/// the free operad. For the symmetric kind the relation subspace must be
/// stable under the S3 action; this is validated on construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadPresentation {
    name: String,
    gen: GenSpace,
    relations: Subspace,
}

impl QuadPresentation {
    /// Builds a presentation from an already-canonical relation subspace,
    /// validating ambient dimension and S3 stability.
    pub fn new(name: impl Into<String>, gen: GenSpace, relations: Subspace) -> Result<Self> {
        if relations.ambient() != w2_dim(&gen) {
            return Err(Error::RelationOutsideAmbient);
        }
        if gen.kind() == Kind::Symmetric {
            for sigma in Perm::adjacent_transpositions(3) {
                let m = s3_action_matrix(&gen, &sigma)?;
                if !relations.contains_space(&relations.map_by(&m)?) {
                    return Err(Error::NotS3Stable);
                }
            }
        }
        Ok(QuadPresentation {
            name: name.into(),
            gen,
            relations,
        })
    }

    /// Builds a presentation from any spanning set of relation vectors.
    /// For the symmetric kind the span is closed under the S3 action first
    /// (presentations are often given by one relation per orbit).
    pub fn from_spanning(
        name: impl Into<String>,
        gen: GenSpace,
        rows: Vec<Weight2Vector>,
    ) -> Result<Self> {
        let ambient = w2_dim(&gen);
        let mut rel = Subspace::zero(ambient);
        for r in &rows {
            if r.gen() != &gen {
                return Err(Error::RelationOutsideAmbient);
            }
            rel.insert(r.coords().to_vec());
        }
        if gen.kind() == Kind::Symmetric {
            let matrices: Vec<Matrix> = Perm::all(3)
                .iter()
                .map(|s| s3_action_matrix(&gen, s))
                .collect::<Result<_>>()?;
            let mut closed = Subspace::zero(ambient);
            for row in rel.basis_rows() {
                for m in &matrices {
                    closed.insert(m.apply(&row)?);
                }
            }
            rel = closed;
        }
        QuadPresentation::new(name, gen, rel)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn kind(&self) -> Kind {
        self.gen.kind()
    }

    pub fn gen(&self) -> &GenSpace {
        &self.gen
    }

    pub fn relations(&self) -> &Subspace {
        &self.relations
    }

    pub fn relation_dim(&self) -> usize {
        self.relations.dim()
    }

    /// Quotient dimension table for arities 1..=n_max.
    pub fn quotient_dims(&self, n_max: usize) -> Result<Vec<DimRow>> {
        let fo = FreeOperad::new(&self.gen, n_max.max(2));
        quotient_dims_from(&fo, &self.relations, n_max)
    }
}

/// Induced map on the weight-2 space of a generator map `G : V -> W`
/// (columns = coordinates): `(comp, a, b) -> (comp, G a, G b)` blockwise.
pub fn weight2_map(src: &GenSpace, dst: &GenSpace, gen_map: &Matrix) -> Result<Matrix> {
    if src.kind() != dst.kind() {
        return Err(Error::KindMismatch {
            expected: src.kind().label(),
            got: dst.kind().label(),
        });
    }
    if gen_map.rows() != dst.dim() || gen_map.cols() != src.dim() {
        return Err(Error::DimensionMismatch {
            expected: dst.dim(),
            got: gen_map.rows(),
        });
    }
    let comps = comp_count(src.kind());
    let mut out = Matrix::zeros(w2_dim(dst), w2_dim(src));
    for comp in 0..comps {
        for a in 0..src.dim() {
            for b in 0..src.dim() {
                let j = w2_index(src, comp, a, b);
                for ai in 0..dst.dim() {
                    for bi in 0..dst.dim() {
                        let c = gen_map.at(ai, a) * gen_map.at(bi, b);
                        if !num_traits::Zero::is_zero(&c) {
                            out.set(w2_index(dst, comp, ai, bi), j, c);
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Equality of presentations under an explicit generator map: true iff the
/// map is an invertible, equivariant isomorphism of generating spaces that
/// carries the relation subspace of `p` exactly onto the one of `q`.
pub fn presentation_equal(
    p: &QuadPresentation,
    q: &QuadPresentation,
    gen_map: &Matrix,
) -> Result<bool> {
    if p.kind() != q.kind() {
        return Err(Error::KindMismatch {
            expected: p.kind().label(),
            got: q.kind().label(),
        });
    }
    if p.gen().dim() != q.gen().dim()
        || gen_map.rows() != q.gen().dim()
        || gen_map.cols() != p.gen().dim()
    {
        return Err(Error::DimensionMismatch {
            expected: p.gen().dim(),
            got: gen_map.cols(),
        });
    }
    if gen_map.inverse().is_none() {
        return Err(Error::NotInvertible);
    }
    if p.kind() == Kind::Symmetric {
        let ap = p.gen().action12().expect("symmetric");
        let aq = q.gen().action12().expect("symmetric");
        if gen_map.mul(ap)? != aq.mul(gen_map)? {
            return Err(Error::NotEquivariant);
        }
    }
    let w2 = weight2_map(p.gen(), q.gen(), gen_map)?;
    Ok(p.relations().map_by(&w2)? == *q.relations())
}

/// Symmetrization of a regular presentation: the generating space doubles
/// to `V' (x) k[S2]` (each operation gains its transpose, with the swap
/// action) and the non-symmetric relations embed as the planar words with
/// identity labelling, closed under the S3 action.
pub fn symmetrize(p: &QuadPresentation) -> Result<QuadPresentation> {
    if p.kind() != Kind::Regular {
        return Err(Error::KindMismatch {
            expected: "regular",
            got: p.kind().label(),
        });
    }
    let d = p.gen().dim();
    let mut names = Vec::with_capacity(2 * d);
    for n in p.gen().names() {
        names.push(n.clone());
        names.push(format!("{n}'"));
    }
    let mut action = Matrix::zeros(2 * d, 2 * d);
    for i in 0..d {
        action.set(2 * i, 2 * i + 1, crate::exact::rat_i(1));
        action.set(2 * i + 1, 2 * i, crate::exact::rat_i(1));
    }
    let sym_gen = GenSpace::symmetric(names, action)?;

    // Embed (comp, a, b) of the regular ambient into the symmetric one:
    // o1 -> type I with plain labels, o2 = a(x, b(y,z)) -> type II with the
    // root transposed.
    let mut rows = Vec::new();
    for row in p.relations().basis_rows() {
        let mut coords = vec![crate::exact::Rat::from_integer(0.into()); w2_dim(&sym_gen)];
        for (i, c) in row.iter().enumerate() {
            if num_traits::Zero::is_zero(c) {
                continue;
            }
            let (comp, a, b) = w2_unindex(p.gen(), i);
            let target = match comp {
                0 => w2_index(&sym_gen, 0, 2 * a, 2 * b),
                _ => w2_index(&sym_gen, 1, 2 * a + 1, 2 * b),
            };
            coords[target] += c;
        }
        rows.push(Weight2Vector::new(sym_gen.clone(), coords)?);
    }
    QuadPresentation::from_spanning(format!("Sym({})", p.name()), sym_gen, rows)
}
