use super::multilinear::MultiMap;
use crate::error::{Error, Result};
use crate::exact::{fmt_rat, parse_rat, Matrix, Perm, Rat};
use crate::freeop::{w2_unindex, Kind};
use crate::presentations::QuadPresentation;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

/// Finite-dimensional algebra over a quadratic presentation: one structure
/// map `A (x) A -> A` per generator basis element. Construction validates
/// that the induced map on the weight-2 space kills the relation subspace,
/// i.e. that the tables really define an algebra.
#[derive(Debug, Clone)]
pub struct AlgebraStructure {
    pres: QuadPresentation,
    dim: usize,
    ops: Vec<MultiMap>,
}

impl AlgebraStructure {
    pub fn new(pres: QuadPresentation, dim: usize, ops: Vec<MultiMap>) -> Result<Self> {
        if ops.len() != pres.gen().dim() {
            return Err(Error::DimensionMismatch {
                expected: pres.gen().dim(),
                got: ops.len(),
            });
        }
        for op in &ops {
            if op.dim() != dim || op.arity() != 2 {
                return Err(Error::BadAlgebraFile(
                    "structure maps must be binary on the algebra space".into(),
                ));
            }
        }
        let alg = AlgebraStructure { pres, dim, ops };
        // The structure map V -> Hom(A^2, A) must be S2-equivariant.
        if let Some(action) = alg.pres.gen().action12() {
            let swap = Perm::transposition(2, 0, 1);
            for j in 0..alg.ops.len() {
                let mut acted = MultiMap::zero(dim, 2);
                for k in 0..alg.ops.len() {
                    let c = action.at(k, j);
                    if !c.is_zero() {
                        acted = acted.add(&alg.ops[k].scale(c))?;
                    }
                }
                if alg.ops[j].permute_inputs(&swap) != acted {
                    return Err(Error::NotAnAlgebra(format!(
                        "generator {} is not equivariant",
                        alg.pres.gen().names()[j]
                    )));
                }
            }
        }
        for (i, row) in alg.pres.relations().basis_rows().into_iter().enumerate() {
            if !alg.weight2_eval(&row).is_zero() {
                return Err(Error::NotAnAlgebra(format!("relation {i}")));
            }
        }
        Ok(alg)
    }

    pub fn presentation(&self) -> &QuadPresentation {
        &self.pres
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn ops(&self) -> &[MultiMap] {
        &self.ops
    }

    /// Evaluates a weight-2 coordinate vector as a trilinear map. For the
    /// symmetric kind the three composition types permute the arguments:
    /// type I is r(u(x,y),z), type II is r(u(y,z),x), type III is
    /// r(u(z,x),y); the regular types are the two planar patterns.
    pub fn weight2_eval(&self, coords: &[Rat]) -> MultiMap {
        let mut acc = MultiMap::zero(self.dim, 3);
        for (i, c) in coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (comp, root, upper) = w2_unindex(self.pres.gen(), i);
            let left_comb = self.ops[root]
                .compose_at(1, &self.ops[upper])
                .expect("arities match");
            let pattern = match (self.pres.kind(), comp) {
                (_, 0) => left_comb,
                (Kind::Regular, 1) => self.ops[root]
                    .compose_at(2, &self.ops[upper])
                    .expect("arities match"),
                // (y,z,x): feed a_2, a_3, a_1 into the left comb
                (Kind::Symmetric, 1) => {
                    left_comb.permute_inputs(&Perm::from_images(vec![1, 2, 0]).unwrap())
                }
                // (z,x,y)
                (Kind::Symmetric, 2) => {
                    left_comb.permute_inputs(&Perm::from_images(vec![2, 0, 1]).unwrap())
                }
                _ => unreachable!(),
            };
            acc = acc.add(&pattern.scale(c)).expect("same shape");
        }
        acc
    }
}

/// JSON file format:
/// `{ "dim": m, "generators": [ { "name": .., "table": m x m^2 rows of
/// rational strings } ] }`. The table column order is big-endian in the
/// inputs: column index = i*m + j for the value of op(e_i, e_j).
#[derive(Debug, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub dim: usize,
    pub generators: Vec<AlgebraOpFile>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct AlgebraOpFile {
    pub name: String,
    pub table: Vec<Vec<String>>,
}

pub fn algebra_to_file(a: &AlgebraStructure) -> AlgebraFile {
    AlgebraFile {
        dim: a.dim(),
        generators: a
            .presentation()
            .gen()
            .names()
            .iter()
            .zip(a.ops())
            .map(|(name, op)| AlgebraOpFile {
                name: name.clone(),
                table: (0..op.dim())
                    .map(|r| {
                        (0..op.dim() * op.dim())
                            .map(|c| fmt_rat(op.matrix().at(r, c)))
                            .collect()
                    })
                    .collect(),
            })
            .collect(),
    }
}

pub fn algebra_from_file(pres: QuadPresentation, f: &AlgebraFile) -> Result<AlgebraStructure> {
    let m = f.dim;
    if f.generators.len() != pres.gen().dim() {
        return Err(Error::BadAlgebraFile(format!(
            "expected {} generator tables, found {}",
            pres.gen().dim(),
            f.generators.len()
        )));
    }
    let mut ops = Vec::new();
    for g in &f.generators {
        if g.table.len() != m || g.table.iter().any(|r| r.len() != m * m) {
            return Err(Error::BadAlgebraFile(format!(
                "table for `{}` must be {m} x {}",
                g.name,
                m * m
            )));
        }
        let mut mat = Matrix::zeros(m, m * m);
        for (r, row) in g.table.iter().enumerate() {
            for (c, s) in row.iter().enumerate() {
                mat.set(r, c, parse_rat(s)?);
            }
        }
        ops.push(MultiMap::from_matrix(m, 2, mat)?);
    }
    AlgebraStructure::new(pres, m, ops)
}

/// Builds a structure map from triple entries `(out, in1, in2, value)`.
pub fn op_from_entries(dim: usize, entries: &[(usize, usize, usize, i64)]) -> MultiMap {
    let mut mat = Matrix::zeros(dim, dim * dim);
    for &(out, a, b, v) in entries {
        mat.set(out, a * dim + b, crate::exact::rat_i(v));
    }
    MultiMap::from_matrix(dim, 2, mat).unwrap()
}

/// Named test algebras over the associative presentations (dims 1..3).
pub fn associative_examples(pres: &QuadPresentation) -> Vec<(String, AlgebraStructure)> {
    let mk = |name: &str, dim: usize, entries: &[(usize, usize, usize, i64)]| {
        (
            name.to_string(),
            AlgebraStructure::new(pres.clone(), dim, vec![op_from_entries(dim, entries)])
                .unwrap_or_else(|e| panic!("{name}: {e}")),
        )
    };
    vec![
        mk("ground field", 1, &[(0, 0, 0, 1)]),
        mk("2-dim zero algebra", 2, &[]),
        mk(
            "dual numbers k[e]/e^2",
            2,
            &[(0, 0, 0, 1), (1, 0, 1, 1), (1, 1, 0, 1)],
        ),
        mk("k x k", 2, &[(0, 0, 0, 1), (1, 1, 1, 1)]),
        mk(
            "k[x]/x^3",
            3,
            &[
                (0, 0, 0, 1),
                (1, 0, 1, 1),
                (1, 1, 0, 1),
                (2, 0, 2, 1),
                (2, 2, 0, 1),
                (2, 1, 1, 1),
            ],
        ),
        mk(
            "upper triangular 2x2",
            3,
            // basis: e11, e12, e22
            &[
                (0, 0, 0, 1),
                (1, 0, 1, 1),
                (1, 1, 2, 1),
                (2, 2, 2, 1),
            ],
        ),
    ]
}

/// A 2-dimensional dendriform algebra: the Zinbiel algebra with a * a = b
/// (all other products zero), viewed as dendriform with x < y = x * y and
/// x > y = y * x.
pub fn dendriform_example(pres: &QuadPresentation) -> Result<AlgebraStructure> {
    let prec = op_from_entries(2, &[(1, 0, 0, 1)]);
    let succ = op_from_entries(2, &[(1, 0, 0, 1)]);
    AlgebraStructure::new(pres.clone(), 2, vec![prec, succ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentations::zoo_get;

    #[test]
    fn associative_examples_validate() {
        let pres = zoo_get("AsNs").unwrap();
        let list = associative_examples(&pres);
        assert_eq!(list.len(), 6);
    }

    #[test]
    fn non_associative_table_is_rejected() {
        let pres = zoo_get("AsNs").unwrap();
        // e0 e0 = e1, e1 e0 = e0: (e0 e0) e0 = e0 but e0 (e0 e0) = 0
        let bad = op_from_entries(2, &[(1, 0, 0, 1), (0, 1, 0, 1)]);
        assert!(matches!(
            AlgebraStructure::new(pres, 2, vec![bad]),
            Err(Error::NotAnAlgebra(_))
        ));
    }

    #[test]
    fn dendriform_example_validates() {
        let pres = zoo_get("Dend").unwrap();
        assert!(dendriform_example(&pres).is_ok());
    }

    #[test]
    fn symmetric_validation_uses_permuted_patterns() {
        // The commutative algebra k[e]/e^2 is a Com-algebra; its transpose
        // trick exercises the type II/III argument permutations.
        let pres = zoo_get("Com").unwrap();
        let op = op_from_entries(2, &[(0, 0, 0, 1), (1, 0, 1, 1), (1, 1, 0, 1)]);
        assert!(AlgebraStructure::new(pres.clone(), 2, vec![op]).is_ok());
        // a noncommutative table is not a Com-algebra
        let bad = op_from_entries(2, &[(0, 0, 0, 1), (1, 0, 1, 1)]);
        assert!(AlgebraStructure::new(pres, 2, vec![bad]).is_err());
    }

    #[test]
    fn algebra_file_round_trip() {
        let pres = zoo_get("Dend").unwrap();
        let a = dendriform_example(&pres).unwrap();
        let f = algebra_to_file(&a);
        let json = serde_json::to_string(&f).unwrap();
        let back: AlgebraFile = serde_json::from_str(&json).unwrap();
        let b = algebra_from_file(pres, &back).unwrap();
        assert_eq!(a.ops(), b.ops());
        assert_eq!(a.dim(), b.dim());
    }
}
