use super::matrix::Matrix;
use super::Rat;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Linear subspace of `Q^ambient` in a canonical form.
///
/// The basis is kept fraction-free: integer rows, each primitive (content 1)
/// with a positive pivot entry, pivot columns cleared in all other rows and
/// pivots strictly increasing. This is the reduced row-echelon form up to
/// scaling each row by its pivot, so it is still unique: two subspaces are
/// equal iff their stored bases are identical, and `PartialEq` is exactly
/// that comparison. Keeping integers avoids the gcd churn of rational
/// arithmetic during large eliminations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    rows: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        let mut s = Subspace::zero(ambient);
        for i in 0..ambient {
            let mut row = vec![BigInt::zero(); ambient];
            row[i] = BigInt::one();
            s.rows.push(row);
            s.pivots.push(i);
        }
        s
    }

    /// Span of the given rational vectors.
    pub fn span(ambient: usize, vectors: impl IntoIterator<Item = Vec<Rat>>) -> Self {
        let mut s = Subspace::zero(ambient);
        for v in vectors {
            s.insert(v);
        }
        s
    }

    pub fn from_matrix_rows(m: &Matrix) -> Self {
        Subspace::span(m.cols(), m.row_vecs())
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_rows_int(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    /// Basis as exact RREF rows (pivot entries scaled to 1).
    pub fn basis_rows(&self) -> Vec<Vec<Rat>> {
        self.rows
            .iter()
            .zip(&self.pivots)
            .map(|(row, &p)| {
                let d = row[p].clone();
                row.iter()
                    .map(|x| Rat::new(x.clone(), d.clone()))
                    .collect()
            })
            .collect()
    }

    /// Basis matrix in RREF.
    pub fn basis_matrix(&self) -> Matrix {
        let rows = self.basis_rows();
        if rows.is_empty() {
            Matrix::zeros(0, self.ambient)
        } else {
            Matrix::from_rows(rows)
        }
    }

    /// Inserts a rational vector into the span. Returns true if the
    /// dimension grew.
    pub fn insert(&mut self, v: Vec<Rat>) -> bool {
        self.insert_int(clear_denominators(&v))
    }

    /// Inserts an integer vector into the span.
    pub fn insert_int(&mut self, mut v: Vec<BigInt>) -> bool {
        assert_eq!(v.len(), self.ambient, "ambient mismatch");
        // Forward reduction, fraction-free: v <- v*(r[p]/g) - r*(v[p]/g).
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let g = v[p].gcd(&row[p]);
            let cv = &row[p] / &g;
            let cr = &v[p] / &g;
            for c in 0..self.ambient {
                if row[c].is_zero() {
                    if !(cv.is_one() || v[c].is_zero()) {
                        v[c] *= &cv;
                    }
                } else {
                    let t = &v[c] * &cv - &row[c] * &cr;
                    v[c] = t;
                }
            }
        }
        let Some(pivot) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        primitivize(&mut v, pivot);
        // Back-substitution to clear the new pivot column above and below.
        for (row, &p) in self.rows.iter_mut().zip(&self.pivots) {
            if row[pivot].is_zero() {
                continue;
            }
            let g = row[pivot].gcd(&v[pivot]);
            let cr = &v[pivot] / &g;
            let cv = &row[pivot] / &g;
            for c in 0..self.ambient {
                if v[c].is_zero() {
                    if !(cr.is_one() || row[c].is_zero()) {
                        row[c] *= &cr;
                    }
                } else {
                    let t = &row[c] * &cr - &v[c] * &cv;
                    row[c] = t;
                }
            }
            primitivize(row, p);
        }
        let pos = self.pivots.partition_point(|&p| p < pivot);
        self.pivots.insert(pos, pivot);
        self.rows.insert(pos, v);
        true
    }

    /// Reduces `v` modulo the basis; afterwards `v` has zeros in all pivot
    /// columns (the canonical representative of `v` in the quotient).
    pub fn reduce_rat(&self, v: &mut [Rat]) {
        assert_eq!(v.len(), self.ambient, "ambient mismatch");
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let factor = std::mem::replace(&mut v[p], Rat::zero())
                / Rat::from_integer(row[p].clone());
            for c in p + 1..self.ambient {
                if !row[c].is_zero() {
                    v[c] -= &factor * Rat::from_integer(row[c].clone());
                }
            }
        }
    }

    pub fn contains(&self, v: &[Rat]) -> bool {
        let mut w = clear_denominators(v);
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if w[p].is_zero() {
                continue;
            }
            let g = w[p].gcd(&row[p]);
            let cv = &row[p] / &g;
            let cr = &w[p] / &g;
            for c in 0..self.ambient {
                if row[c].is_zero() {
                    if !(cv.is_one() || w[c].is_zero()) {
                        w[c] *= &cv;
                    }
                } else {
                    let t = &w[c] * &cv - &row[c] * &cr;
                    w[c] = t;
                }
            }
        }
        w.iter().all(|x| x.is_zero())
    }

    pub fn contains_space(&self, other: &Subspace) -> bool {
        other
            .rows
            .iter()
            .all(|r| self.contains(&int_row_to_rat(r)))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let mut s = self.clone();
        for r in &other.rows {
            s.insert_int(r.clone());
        }
        Ok(s)
    }

    /// Intersection, computed through annihilators: a vector lies in both
    /// spaces iff it is killed by both annihilators.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let mut constraints = self.annihilator_rows();
        constraints.extend(other.annihilator_rows());
        Ok(kernel_of_int_rows(constraints, self.ambient))
    }

    /// Basis of `{ y | y . u = 0 for all u in self }` under the standard
    /// dot product, as rational RREF rows.
    pub fn annihilator(&self) -> Matrix {
        kernel_of_int_rows(self.rows.clone(), self.ambient).basis_matrix()
    }

    fn annihilator_rows(&self) -> Vec<Vec<BigInt>> {
        kernel_of_int_rows(self.rows.clone(), self.ambient).rows
    }

    /// Null space of a matrix: `{ x | m x = 0 }`.
    pub fn kernel(m: &Matrix) -> Subspace {
        let rows = m.row_vecs().iter().map(|r| clear_denominators(r)).collect();
        kernel_of_int_rows(rows, m.cols())
    }

    /// Column space of a matrix, as a subspace of `Q^rows`.
    pub fn image(m: &Matrix) -> Subspace {
        Subspace::span(m.rows(), m.transpose().row_vecs())
    }

    /// Image of this subspace under a linear map (columns = coordinates).
    pub fn map_by(&self, m: &Matrix) -> Result<Subspace> {
        let mut out = Subspace::zero(m.rows());
        for r in &self.rows {
            out.insert(m.apply(&int_row_to_rat(r))?);
        }
        Ok(out)
    }

    /// Preimage `{ x | m x in self }`.
    pub fn preimage_under(&self, m: &Matrix) -> Result<Subspace> {
        if m.rows() != self.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                got: m.rows(),
            });
        }
        // x is in the preimage iff Q m x = 0 where ker Q = self.
        let q = self.annihilator();
        let qm = q.mul(m)?;
        Ok(Subspace::kernel(&qm))
    }

    /// Orthogonal complement with respect to a non-degenerate bilinear form:
    /// `{ x | <u, x> = u^T F x = 0 for all u in self }`.
    pub fn orth_complement(&self, form: &Matrix) -> Result<Subspace> {
        if form.rows() != self.ambient || form.cols() != self.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                got: form.rows(),
            });
        }
        if form.rank() != self.ambient {
            return Err(Error::DegenerateForm);
        }
        let bf = self.basis_matrix().mul(form)?;
        Ok(Subspace::kernel(&bf))
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                got: other.ambient,
            });
        }
        Ok(())
    }
}

/// Scales a rational vector to a primitive integer vector (same line).
fn clear_denominators(v: &[Rat]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for x in v {
        if !x.is_zero() {
            lcm = lcm.lcm(x.denom());
        }
    }
    v.iter()
        .map(|x| {
            if x.is_zero() {
                BigInt::zero()
            } else {
                x.numer() * (&lcm / x.denom())
            }
        })
        .collect()
}

fn int_row_to_rat(row: &[BigInt]) -> Vec<Rat> {
    row.iter().map(|x| Rat::from_integer(x.clone())).collect()
}

/// Divides by the content and makes the pivot entry positive.
fn primitivize(v: &mut [BigInt], pivot: usize) {
    let mut content = BigInt::zero();
    for x in v.iter() {
        if !x.is_zero() {
            content = content.gcd(x);
            if content.is_one() {
                break;
            }
        }
    }
    if content.is_zero() {
        return;
    }
    if v[pivot].is_negative() {
        content = -content;
    }
    if !content.is_one() {
        for x in v.iter_mut() {
            if !x.is_zero() {
                *x /= &content;
            }
        }
    }
}

/// Null space of the linear map given by stacked integer constraint rows.
fn kernel_of_int_rows(rows: Vec<Vec<BigInt>>, cols: usize) -> Subspace {
    // Canonicalize the constraints first.
    let mut constraints = Subspace::zero(cols);
    for r in rows {
        constraints.insert_int(r);
    }
    let pivot_set: std::collections::HashSet<usize> =
        constraints.pivots.iter().copied().collect();
    let mut out = Subspace::zero(cols);
    for free in 0..cols {
        if pivot_set.contains(&free) {
            continue;
        }
        let mut v = vec![Rat::zero(); cols];
        v[free] = Rat::one();
        for (row, &p) in constraints.rows.iter().zip(&constraints.pivots) {
            if !row[free].is_zero() {
                v[p] = -Rat::new(row[free].clone(), row[p].clone());
            }
        }
        out.insert(v);
    }
    out
}
