use crate::error::{Error, Result};
use crate::exact::{Matrix, Perm, Rat};
use num_traits::Zero;

/// Multilinear map `A^(x)n -> A` on an m-dimensional space, stored as an
/// m x m^n matrix. Input tuples are indexed big-endian: the tuple
/// (t_1, .., t_n) is the column `t_1 m^(n-1) + .. + t_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiMap {
    dim: usize,
    arity: usize,
    mat: Matrix,
}

impl MultiMap {
    pub fn zero(dim: usize, arity: usize) -> Self {
        MultiMap {
            dim,
            arity,
            mat: Matrix::zeros(dim, dim.pow(arity as u32)),
        }
    }

    pub fn identity(dim: usize) -> Self {
        MultiMap {
            dim,
            arity: 1,
            mat: Matrix::identity(dim),
        }
    }

    pub fn from_matrix(dim: usize, arity: usize, mat: Matrix) -> Result<Self> {
        if mat.rows() != dim || mat.cols() != dim.pow(arity as u32) {
            return Err(Error::DimensionMismatch {
                expected: dim * dim.pow(arity as u32),
                got: mat.rows() * mat.cols(),
            });
        }
        Ok(MultiMap { dim, arity, mat })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn matrix(&self) -> &Matrix {
        &self.mat
    }

    pub fn entry(&self, out: usize, tuple: &[usize]) -> &Rat {
        debug_assert_eq!(tuple.len(), self.arity);
        self.mat.at(out, self.tuple_index(tuple))
    }

    pub fn tuple_index(&self, tuple: &[usize]) -> usize {
        tuple.iter().fold(0, |acc, &t| acc * self.dim + t)
    }

    pub fn is_zero(&self) -> bool {
        self.mat.is_zero()
    }

    pub fn add(&self, other: &MultiMap) -> Result<MultiMap> {
        if self.dim != other.dim || self.arity != other.arity {
            return Err(Error::ContextMismatch);
        }
        Ok(MultiMap {
            dim: self.dim,
            arity: self.arity,
            mat: self.mat.add(&other.mat)?,
        })
    }

    pub fn scale(&self, s: &Rat) -> MultiMap {
        MultiMap {
            dim: self.dim,
            arity: self.arity,
            mat: self.mat.scale(s),
        }
    }

    /// Partial composition `self o_slot other` (1-based slot): plugs the
    /// output of `other` into the given input of `self`.
    pub fn compose_at(&self, slot: usize, other: &MultiMap) -> Result<MultiMap> {
        if self.dim != other.dim {
            return Err(Error::ContextMismatch);
        }
        if slot == 0 || slot > self.arity {
            return Err(Error::SlotOutOfRange {
                slot,
                arity: self.arity,
            });
        }
        let m = self.dim;
        let (p, q) = (self.arity, other.arity);
        let n = p + q - 1;
        let mut out = Matrix::zeros(m, m.pow(n as u32));
        let mut tuple = vec![0usize; n];
        let mut inner = vec![0usize; q];
        let mut outer = vec![0usize; p];
        for col in 0..m.pow(n as u32) {
            // decode the big tuple
            let mut rest = col;
            for k in (0..n).rev() {
                tuple[k] = rest % m;
                rest /= m;
            }
            inner.copy_from_slice(&tuple[slot - 1..slot - 1 + q]);
            outer[..slot - 1].copy_from_slice(&tuple[..slot - 1]);
            outer[slot..].copy_from_slice(&tuple[slot - 1 + q..]);
            let inner_idx = other.tuple_index(&inner);
            for s in 0..m {
                let g = other.mat.at(s, inner_idx);
                if g.is_zero() {
                    continue;
                }
                outer[slot - 1] = s;
                let outer_idx = self.tuple_index(&outer);
                for r in 0..m {
                    let f = self.mat.at(r, outer_idx);
                    if !f.is_zero() {
                        let v = out.at(r, col) + f * g;
                        out.set(r, col, v);
                    }
                }
            }
        }
        Ok(MultiMap {
            dim: m,
            arity: n,
            mat: out,
        })
    }

    /// Input permutation: `g(a_1, .., a_n) = self(a_sigma(1), .., a_sigma(n))`.
    pub fn permute_inputs(&self, sigma: &Perm) -> MultiMap {
        assert_eq!(sigma.degree(), self.arity);
        let m = self.dim;
        let n = self.arity;
        let mut out = Matrix::zeros(m, m.pow(n as u32));
        let mut tuple = vec![0usize; n];
        let mut permuted = vec![0usize; n];
        for col in 0..m.pow(n as u32) {
            let mut rest = col;
            for k in (0..n).rev() {
                tuple[k] = rest % m;
                rest /= m;
            }
            for k in 0..n {
                permuted[k] = tuple[sigma.apply(k)];
            }
            let src = self.tuple_index(&permuted);
            for r in 0..m {
                let v = self.mat.at(r, src);
                if !v.is_zero() {
                    out.set(r, col, v.clone());
                }
            }
        }
        MultiMap {
            dim: m,
            arity: n,
            mat: out,
        }
    }
}
