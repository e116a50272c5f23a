use super::Rat;
use crate::error::{Error, Result};
use num_traits::{One, Zero};

/// Dense matrix over the rationals. Dimensions are fixed at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rat::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rat) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        for r in &rows {
            assert_eq!(r.len(), ncols, "ragged rows");
        }
        Matrix {
            rows: nrows,
            cols: ncols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Convenience constructor from integer literals.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| super::rat_i(x)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Rat {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rat) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Rat] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Rat>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn col_vec(&self, c: usize) -> Vec<Rat> {
        (0..self.rows).map(|r| self.at(r, c).clone()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |r, c| self.at(c, r).clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: other.rows,
            });
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.at(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.at(r, c) + a * b;
                    out.set(r, c, v);
                }
            }
        }
        Ok(out)
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[Rat]) -> Result<Vec<Rat>> {
        if self.cols != v.len() {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: v.len(),
            });
        }
        let mut out = vec![Rat::zero(); self.rows];
        for r in 0..self.rows {
            for c in 0..self.cols {
                let a = self.at(r, c);
                if !a.is_zero() && !v[c].is_zero() {
                    out[r] += a * &v[c];
                }
            }
        }
        Ok(out)
    }

    /// Kronecker product: (A (x) B)[(i,k),(j,l)] = A[i,j] * B[k,l].
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.at(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.at(k, l);
                        if !b.is_zero() {
                            out.set(i * other.rows + k, j * other.cols + l, a * b);
                        }
                    }
                }
            }
        }
        out
    }

    pub fn scale(&self, s: &Rat) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                expected: self.rows * self.cols,
                got: other.rows * other.cols,
            });
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn rank(&self) -> usize {
        rref(self).1.len()
    }

    /// Inverse of a square matrix, if it exists.
    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        // Gauss-Jordan on [A | I].
        let mut aug = Matrix::zeros(n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.at(r, c).clone());
            }
            aug.set(r, n + r, Rat::one());
        }
        let (red, pivots) = rref(&aug);
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(Matrix::from_fn(n, n, |r, c| red.at(r, n + c).clone()))
    }
}

/// Reduced row-echelon form. Returns the canonical form with zero rows
/// dropped, together with the pivot column of each remaining row.
pub fn rref(m: &Matrix) -> (Matrix, Vec<usize>) {
    let mut rows = m.row_vecs();
    let pivots = rref_in_place(&mut rows, m.cols());
    rows.truncate(pivots.len());
    (Matrix::from_rows(rows), pivots)
}

/// In-place RREF over a list of rows of a fixed width. Rows end up sorted by
/// pivot column with zero rows at the bottom; returns the pivot columns.
pub(crate) fn rref_in_place(rows: &mut [Vec<Rat>], cols: usize) -> Vec<usize> {
    let nrows = rows.len();
    let mut pivots = Vec::new();
    let mut next_row = 0;
    for col in 0..cols {
        if next_row == nrows {
            break;
        }
        // Prefer a +-1 pivot to keep entries small.
        let mut choice: Option<usize> = None;
        for r in next_row..nrows {
            if rows[r][col].is_zero() {
                continue;
            }
            if choice.is_none() {
                choice = Some(r);
            }
            if rows[r][col].numer().magnitude() == rows[r][col].denom().magnitude() {
                choice = Some(r);
                break;
            }
        }
        let Some(pr) = choice else { continue };
        rows.swap(next_row, pr);
        // Normalize the pivot to 1.
        let inv = {
            let p = &rows[next_row][col];
            p.recip()
        };
        if !inv.is_one() {
            for x in rows[next_row][col..].iter_mut() {
                if !x.is_zero() {
                    *x *= &inv;
                }
            }
        }
        // Eliminate the column everywhere else.
        for r in 0..nrows {
            if r == next_row || rows[r][col].is_zero() {
                continue;
            }
            let factor = std::mem::replace(&mut rows[r][col], Rat::zero());
            let (head, tail) = rows.split_at_mut(next_row.max(r));
            let (src, dst) = if r < next_row {
                (&tail[0], &mut head[r])
            } else {
                (&head[next_row], &mut tail[0])
            };
            for c in col + 1..cols {
                if !src[c].is_zero() {
                    dst[c] -= &factor * &src[c];
                }
            }
        }
        pivots.push(col);
        next_row += 1;
    }
    pivots
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat_i;

    #[test]
    fn rref_rank_one() {
        let m = Matrix::from_i64(&[&[2, 4], &[1, 2]]);
        let (r, pivots) = rref(&m);
        assert_eq!(r, Matrix::from_i64(&[&[1, 2]]));
        assert_eq!(pivots, vec![0]);
    }

    #[test]
    fn rref_identity_fixed() {
        let id = Matrix::identity(3);
        let (r, pivots) = rref(&id);
        assert_eq!(r, id);
        assert_eq!(pivots, vec![0, 1, 2]);
    }

    #[test]
    fn rref_permuted_identity() {
        let m = Matrix::from_i64(&[&[0, 1], &[1, 0]]);
        let (r, _) = rref(&m);
        assert_eq!(r, Matrix::identity(2));
    }

    #[test]
    fn rref_idempotent() {
        let m = Matrix::from_i64(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]);
        let (r1, p1) = rref(&m);
        let (r2, p2) = rref(&r1);
        assert_eq!(r1, r2);
        assert_eq!(p1, p2);
    }

    #[test]
    fn kron_and_mul() {
        let a = Matrix::from_i64(&[&[1, 2], &[3, 4]]);
        let b = Matrix::from_i64(&[&[0, 1], &[1, 0]]);
        let k = a.kron(&b);
        assert_eq!(k.rows(), 4);
        assert_eq!(*k.at(0, 1), rat_i(1));
        assert_eq!(*k.at(0, 3), rat_i(2));
        let ab = a.mul(&b).unwrap();
        assert_eq!(ab, Matrix::from_i64(&[&[2, 1], &[4, 3]]));
    }

    #[test]
    fn inverse_round_trip() {
        let a = Matrix::from_i64(&[&[1, 2], &[3, 5]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv).unwrap(), Matrix::identity(2));
        let sing = Matrix::from_i64(&[&[1, 2], &[2, 4]]);
        assert!(sing.inverse().is_none());
    }
}
