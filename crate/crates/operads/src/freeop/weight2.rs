use super::genspace::{GenSpace, Kind};
use crate::error::{Error, Result};
use crate::exact::{rat_i, Matrix, Perm, Rat};
use num_traits::Zero;

/// Number of composition patterns in the weight-2 basis.
pub fn comp_count(kind: Kind) -> usize {
    match kind {
        // types I = a(b(x,y),z), II = a(b(y,z),x), III = a(b(z,x),y)
        Kind::Symmetric => 3,
        // o1 = a(b(x,y),z), o2 = a(x,b(y,z))
        Kind::Regular => 2,
    }
}

/// Dimension of the weight-2 space F(V)(3): 3d^2 symmetric, 2d^2 regular.
pub fn w2_dim(gen: &GenSpace) -> usize {
    comp_count(gen.kind()) * gen.dim() * gen.dim()
}

/// Index of the basis element `root o_comp upper`.
pub fn w2_index(gen: &GenSpace, comp: usize, root: usize, upper: usize) -> usize {
    let d = gen.dim();
    debug_assert!(comp < comp_count(gen.kind()) && root < d && upper < d);
    comp * d * d + root * d + upper
}

/// Inverse of `w2_index`.
pub fn w2_unindex(gen: &GenSpace, i: usize) -> (usize, usize, usize) {
    let d = gen.dim();
    (i / (d * d), (i / d) % d, i % d)
}

/// Element of the weight-2 part of the free operad on `gen`, with exact
/// rational coordinates over the canonical `(comp, root, upper)` basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Weight2Vector {
    gen: GenSpace,
    coords: Vec<Rat>,
}

impl Weight2Vector {
    pub fn new(gen: GenSpace, coords: Vec<Rat>) -> Result<Self> {
        if coords.len() != w2_dim(&gen) {
            return Err(Error::DimensionMismatch {
                expected: w2_dim(&gen),
                got: coords.len(),
            });
        }
        Ok(Weight2Vector { gen, coords })
    }

    pub fn zero(gen: GenSpace) -> Self {
        let dim = w2_dim(&gen);
        Weight2Vector {
            gen,
            coords: vec![Rat::zero(); dim],
        }
    }

    pub fn basis(gen: GenSpace, comp: usize, root: usize, upper: usize) -> Self {
        let mut v = Weight2Vector::zero(gen);
        let i = w2_index(&v.gen, comp, root, upper);
        v.coords[i] = rat_i(1);
        v
    }

    pub fn gen(&self) -> &GenSpace {
        &self.gen
    }

    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<Rat> {
        self.coords
    }

    pub fn add(&self, other: &Weight2Vector) -> Result<Weight2Vector> {
        if self.gen != other.gen {
            return Err(Error::ContextMismatch);
        }
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Weight2Vector {
            gen: self.gen.clone(),
            coords,
        })
    }

    pub fn scale(&self, s: &Rat) -> Weight2Vector {
        Weight2Vector {
            gen: self.gen.clone(),
            coords: self.coords.iter().map(|x| x * s).collect(),
        }
    }
}

/// Matrix of the S3 action on the weight-2 space, for the symmetric kind.
///
/// Permutations act by relabelling the three leaves, `leaf l -> s(l)`. On
/// the basis this is generated by the transposition (1 2), which fixes type
/// I, swaps types II and III and acts on the upper label through action12,
/// and by the 3-cycle 1->2->3->1, which shifts the type cyclically
/// I -> II -> III -> I and leaves the labels alone.
pub fn s3_action_matrix(gen: &GenSpace, sigma: &Perm) -> Result<Matrix> {
    if gen.kind() != Kind::Symmetric {
        return Err(Error::KindMismatch {
            expected: "symmetric",
            got: gen.kind().label(),
        });
    }
    assert_eq!(sigma.degree(), 3, "weight-2 action needs a permutation of 3");
    let dim = w2_dim(gen);
    let d = gen.dim();

    let mut transposition = Matrix::zeros(dim, dim);
    for comp in 0..3 {
        let comp_img = match comp {
            0 => 0,
            1 => 2,
            _ => 1,
        };
        for root in 0..d {
            for upper in 0..d {
                let j = w2_index(gen, comp, root, upper);
                for (k, a) in gen.act12_col(upper) {
                    let i = w2_index(gen, comp_img, root, k);
                    transposition.set(i, j, transposition.at(i, j) + a);
                }
            }
        }
    }

    let mut cycle = Matrix::zeros(dim, dim);
    for comp in 0..3 {
        for root in 0..d {
            for upper in 0..d {
                let j = w2_index(gen, comp, root, upper);
                let i = w2_index(gen, (comp + 1) % 3, root, upper);
                cycle.set(i, j, rat_i(1));
            }
        }
    }

    // Walk S3 from the identity, multiplying generator matrices on the left;
    // relabelling is a left action, so M(s . t) = M(s) M(t).
    let t = Perm::transposition(3, 0, 1);
    let c = Perm::cycle(3);
    let mut found: Vec<(Perm, Matrix)> = vec![(Perm::identity(3), Matrix::identity(dim))];
    let mut frontier = found.clone();
    while let Some((p, m)) = frontier.pop() {
        if &p == sigma {
            return Ok(m);
        }
        for (g, gm) in [(&t, &transposition), (&c, &cycle)] {
            let np = g.compose(&p);
            if found.iter().all(|(q, _)| q != &np) {
                let nm = gm.mul(&m)?;
                found.push((np.clone(), nm.clone()));
                frontier.push((np, nm));
            }
        }
    }
    let (_, m) = found
        .into_iter()
        .find(|(p, _)| p == sigma)
        .expect("S3 walk is exhaustive");
    Ok(m)
}

/// Applies a permutation of S3 to a symmetric weight-2 vector.
pub fn s3_action(v: &Weight2Vector, sigma: &Perm) -> Result<Weight2Vector> {
    let m = s3_action_matrix(v.gen(), sigma)?;
    Weight2Vector::new(v.gen().clone(), m.apply(v.coords())?)
}

/// Matrix of the weight-2 bilinear form pairing F(V)(3) with F(V^)(3),
/// written in the parallel `(comp, root, upper)` coordinates.
///
/// Symmetric kind: `<a o_c b, x o_e y> = 1` iff the indices agree, so the
/// form is the identity. Regular kind: the `o_1` block pairs with +1 and
/// the `o_2` block with -1.
pub fn pairing_form(kind: Kind, d: usize) -> Matrix {
    let dim = comp_count(kind) * d * d;
    let mut m = Matrix::zeros(dim, dim);
    for i in 0..dim {
        let sign = match kind {
            Kind::Symmetric => 1,
            Kind::Regular => {
                if i < d * d {
                    1
                } else {
                    -1
                }
            }
        };
        m.set(i, i, rat_i(sign));
    }
    m
}

/// The weight-2 pairing `<v, w>` of a vector over V with a vector over the
/// dual space.
pub fn weight2_pairing(v: &Weight2Vector, w: &Weight2Vector) -> Result<Rat> {
    if v.gen().kind() != w.gen().kind() || v.gen().dim() != w.gen().dim() {
        return Err(Error::KindMismatch {
            expected: v.gen().kind().label(),
            got: w.gen().kind().label(),
        });
    }
    let d = v.gen().dim();
    let mut acc = Rat::zero();
    for (i, (a, b)) in v.coords().iter().zip(w.coords()).enumerate() {
        if a.is_zero() || b.is_zero() {
            continue;
        }
        let negative = v.gen().kind() == Kind::Regular && i >= d * d;
        if negative {
            acc -= a * b;
        } else {
            acc += a * b;
        }
    }
    Ok(acc)
}
