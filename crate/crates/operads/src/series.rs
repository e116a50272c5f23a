//! Truncated Poincare series, compositional inversion and the
//! generating-series test for the Koszul property.
//!
//! The Poincare series of an operad is `f_P(x) = sum dim P(n)/n! x^n`.
//! When P is Koszul the series of P and of its dual are compositional
//! inverses up to signs: `f_{P!}(-f_P(-x)) = x`. The test inverts
//! `-f_P(-x)` order by order; a negative or non-integer candidate dual
//! dimension `n! [x^n]` proves that P is not Koszul. The converse does not
//! hold, so a clean run only reports consistency up to the chosen order.

use crate::error::{Error, Result};
use crate::exact::{fmt_rat, Rat};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

/// Power series truncated at order K with zero constant term:
/// `a_1 x + a_2 x^2 + ... + a_K x^K`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<Rat>, // coeffs[n-1] = a_n
}

impl TruncatedSeries {
    pub fn new(coeffs: Vec<Rat>) -> Self {
        TruncatedSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![Rat::zero(); order],
        }
    }

    /// The identity series x.
    pub fn x(order: usize) -> Self {
        let mut s = TruncatedSeries::zero(order);
        if order >= 1 {
            s.coeffs[0] = Rat::one();
        }
        s
    }

    /// Poincare series of a dimension table: `a_n = dims[n-1] / n!`.
    pub fn from_dims(dims: &[usize]) -> Result<Self> {
        if dims.is_empty() || dims[0] == 0 {
            return Err(Error::MissingDimension(1));
        }
        let mut fact = BigInt::one();
        let coeffs = dims
            .iter()
            .enumerate()
            .map(|(i, &d)| {
                fact *= BigInt::from(i as u64 + 1);
                Rat::new(BigInt::from(d), fact.clone())
            })
            .collect();
        Ok(TruncatedSeries { coeffs })
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    /// Coefficient of x^n (1-based); zero beyond the truncation order.
    pub fn coeff(&self, n: usize) -> Rat {
        if n == 0 || n > self.coeffs.len() {
            Rat::zero()
        } else {
            self.coeffs[n - 1].clone()
        }
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn truncate(&self, order: usize) -> TruncatedSeries {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(order, Rat::zero());
        TruncatedSeries { coeffs }
    }

    /// `-f(-x)`: flips the sign of the even coefficients.
    pub fn neg_flip(&self) -> TruncatedSeries {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, a)| if i % 2 == 1 { -a.clone() } else { a.clone() })
            .collect();
        TruncatedSeries { coeffs }
    }

    fn mul(&self, other: &TruncatedSeries, order: usize) -> TruncatedSeries {
        let mut out = TruncatedSeries::zero(order);
        for i in 1..=self.coeffs.len().min(order) {
            let a = &self.coeffs[i - 1];
            if a.is_zero() {
                continue;
            }
            for j in 1..=other.coeffs.len() {
                if i + j > order {
                    break;
                }
                let b = &other.coeffs[j - 1];
                if !b.is_zero() {
                    out.coeffs[i + j - 1] += a * b;
                }
            }
        }
        out
    }

    /// Composition `self(other(x))` truncated at the smaller order.
    /// `other` must have no constant term (guaranteed by the type).
    pub fn compose(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(other.order());
        let mut out = TruncatedSeries::zero(order);
        let mut power = TruncatedSeries::x(order);
        // power = other^k, built iteratively
        let mut first = true;
        for k in 1..=order {
            power = if first {
                first = false;
                other.truncate(order)
            } else {
                power.mul(other, order)
            };
            let a = self.coeff(k);
            if a.is_zero() {
                continue;
            }
            for n in 1..=order {
                let c = &power.coeffs[n - 1];
                if !c.is_zero() {
                    out.coeffs[n - 1] += &a * c;
                }
            }
        }
        out
    }

    /// Compositional inverse g with `self(g(x)) = x` mod `x^(K+1)`,
    /// computed order by order with undetermined coefficients.
    pub fn comp_inverse(&self) -> Result<TruncatedSeries> {
        let order = self.order();
        let a1 = self.coeff(1);
        if a1.is_zero() {
            return Err(Error::NoLinearTerm);
        }
        let mut g = TruncatedSeries::zero(order);
        g.coeffs[0] = a1.recip();
        for m in 2..=order {
            // [x^m] self(g) with the current g (whose b_m = 0) must be
            // cancelled by a1 * b_m.
            let c = self.compose(&g).coeff(m);
            g.coeffs[m - 1] = -c / &a1;
        }
        Ok(g)
    }

    /// Pretty rational-coefficient form, e.g. "x + x^2 + 3/2x^3".
    pub fn display(&self) -> String {
        let mut parts: Vec<String> = Vec::new();
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let n = i + 1;
            let var = if n == 1 { "x".to_string() } else { format!("x^{n}") };
            let mag = a.abs();
            let body = if mag.is_one() {
                var
            } else {
                format!("{}{var}", fmt_rat(&mag))
            };
            if parts.is_empty() {
                parts.push(if a.is_negative() {
                    format!("-{body}")
                } else {
                    body
                });
            } else {
                parts.push(format!("{} {body}", if a.is_negative() { "-" } else { "+" }));
            }
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" ")
        }
    }
}

/// One line of a Koszulity report: the candidate dual dimension at each
/// arity, flagged when it fails to be a non-negative integer.
#[derive(Debug, Clone, Serialize)]
pub struct GkRow {
    pub arity: usize,
    /// series coefficient of the inverse of -f_P(-x)
    pub coeff: String,
    /// n! times the coefficient: the candidate dim P!(n)
    pub dual_dim: String,
    pub flagged: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct GkReport {
    pub order: usize,
    pub rows: Vec<GkRow>,
    /// first arity whose candidate dual dimension is negative or
    /// non-integer, if any
    pub first_flag: Option<usize>,
    /// false = proven not Koszul; true only means no obstruction was found
    /// up to this order
    pub consistent: bool,
    /// whether the candidate dual dimensions reproduce a supplied table of
    /// actual dual dimensions (None when none was supplied)
    pub identity_holds: Option<bool>,
}

impl GkReport {
    pub fn verdict(&self) -> String {
        match self.first_flag {
            Some(n) => format!("not Koszul (obstruction at arity {n})"),
            None => format!("consistent with Koszulity up to order {}", self.order),
        }
    }
}

/// Runs the generating-series test on a dimension table
/// `dims[n-1] = dim P(n)` (dimensions of the symmetric-group components).
pub fn gk_test_dims(dims: &[usize], order: usize) -> Result<GkReport> {
    if dims.len() < order {
        return Err(Error::MissingDimension(dims.len() + 1));
    }
    let f = TruncatedSeries::from_dims(&dims[..order])?;
    let g = f.neg_flip().comp_inverse()?;
    let mut rows = Vec::new();
    let mut first_flag = None;
    let mut fact = BigInt::one();
    for n in 1..=order {
        fact *= BigInt::from(n as u64);
        let coeff = g.coeff(n);
        let dual = &coeff * Rat::from_integer(fact.clone());
        let flagged = dual.is_negative() || !dual.denom().is_one();
        if flagged && first_flag.is_none() {
            first_flag = Some(n);
        }
        rows.push(GkRow {
            arity: n,
            coeff: fmt_rat(&coeff),
            dual_dim: fmt_rat(&dual),
            flagged,
        });
    }
    Ok(GkReport {
        order,
        rows,
        first_flag,
        consistent: first_flag.is_none(),
        identity_holds: None,
    })
}

/// Like [`gk_test_dims`], additionally checking the candidate dual
/// dimensions against a real dual table: the series identity holds iff the
/// two sides are compositional inverses up to signs.
pub fn gk_test_with_dual(dims: &[usize], dual_dims: &[usize], order: usize) -> Result<GkReport> {
    let mut report = gk_test_dims(dims, order)?;
    report.identity_holds = Some(gk_identity(dims, dual_dims, order)?);
    Ok(report)
}

/// Pads a dimension table out to `order` entries. Once two consecutive
/// components vanish, all later ones do: every tree with enough leaves has
/// a subtree whose arity falls on one of the two vanishing values, so the
/// zero-padding is exact rather than a guess.
pub fn pad_dims(dims: &[usize], order: usize) -> Result<Vec<usize>> {
    let mut out = dims.to_vec();
    if out.len() >= order {
        out.truncate(order);
        return Ok(out);
    }
    let k = out.len();
    if k >= 2 && out[k - 1] == 0 && out[k - 2] == 0 {
        out.resize(order, 0);
        return Ok(out);
    }
    Err(Error::MissingDimension(k + 1))
}

/// Symmetric-group component dimensions of a presentation, computed from
/// its ideal span; regular presentations store per-arity dimensions, which
/// get multiplied by n!.
pub fn symmetric_dims(
    p: &crate::presentations::QuadPresentation,
    max_arity: usize,
) -> Result<Vec<usize>> {
    let computed: Vec<usize> = p
        .quotient_dims(max_arity)?
        .into_iter()
        .map(|r| r.quotient_dim)
        .collect();
    Ok(match p.kind() {
        crate::freeop::Kind::Symmetric => computed,
        crate::freeop::Kind::Regular => {
            let mut fact: usize = 1;
            computed
                .iter()
                .enumerate()
                .map(|(i, d)| {
                    if i > 0 {
                        fact *= i + 1;
                    }
                    d * fact
                })
                .collect()
        }
    })
}

/// Runs the generating-series test for a presentation. Dimensions come
/// from the ideal span up to `max_arity` and are zero-padded to the order
/// when that is exact (two consecutive vanishing components); when the
/// Koszul dual's table fits the same bound, the report also carries the
/// two-sided series identity.
pub fn gk_test(
    p: &crate::presentations::QuadPresentation,
    order: usize,
    max_arity: usize,
) -> Result<GkReport> {
    let dims = symmetric_dims(p, max_arity.min(order))?;
    let padded = pad_dims(&dims, order)?;
    let dual_padded = crate::manin::koszul_dual(p)
        .ok()
        .and_then(|d| symmetric_dims(&d, max_arity.min(order)).ok())
        .and_then(|dd| pad_dims(&dd, order).ok());
    match &dual_padded {
        Some(dd) => gk_test_with_dual(&padded, dd, order),
        None => gk_test_dims(&padded, order),
    }
}

/// Checks the two-sided identity `f_{P!}(-f_P(-x)) = x` up to the given
/// order, for explicitly supplied dimension tables.
pub fn gk_identity(dims_p: &[usize], dims_dual: &[usize], order: usize) -> Result<bool> {
    if dims_p.len() < order {
        return Err(Error::MissingDimension(dims_p.len() + 1));
    }
    if dims_dual.len() < order {
        return Err(Error::MissingDimension(dims_dual.len() + 1));
    }
    let f = TruncatedSeries::from_dims(&dims_p[..order])?;
    let g = TruncatedSeries::from_dims(&dims_dual[..order])?;
    Ok(g.compose(&f.neg_flip()) == TruncatedSeries::x(order))
}

/// Closed-form dimension of the component of the quadri-algebra operad:
/// `dim Quad(n) = (n-1)! * sum_{j=n}^{2n-1} C(3n, n+1+j) C(j-1, j-n)`.
pub fn quad_dimension(n: usize) -> BigInt {
    let mut total = BigInt::zero();
    for j in n..=2 * n - 1 {
        total += binomial(3 * n, n + 1 + j) * binomial(j - 1, j - n);
    }
    let mut fact = BigInt::one();
    for k in 2..n {
        fact *= BigInt::from(k as u64);
    }
    total * fact
}

fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut out = BigInt::one();
    for i in 0..k.min(n - k) {
        out = out * BigInt::from((n - i) as u64) / BigInt::from((i + 1) as u64);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, rat_i};

    fn series(v: &[(i64, i64)]) -> TruncatedSeries {
        TruncatedSeries::new(v.iter().map(|&(p, q)| rat(p, q)).collect())
    }

    #[test]
    fn inverse_of_x_is_x() {
        let x = TruncatedSeries::x(6);
        assert_eq!(x.comp_inverse().unwrap(), x);
    }

    #[test]
    fn inverse_of_geometric_series() {
        // inverse of x/(1-x) = sum x^n is x/(1+x) = sum (-1)^(n+1) x^n
        let f = TruncatedSeries::new((0..8).map(|_| rat_i(1)).collect());
        let g = f.comp_inverse().unwrap();
        let expect =
            TruncatedSeries::new((0..8).map(|n| rat_i(if n % 2 == 0 { 1 } else { -1 })).collect());
        assert_eq!(g, expect);
    }

    #[test]
    fn counterexample_series_inverse() {
        // inverse of x - x^2 + 1/2 x^3: the tenth coefficient is negative.
        let mut coeffs = vec![rat_i(1), rat_i(-1), rat(1, 2)];
        coeffs.resize(10, Rat::zero());
        let f = TruncatedSeries::new(coeffs);
        let g = f.comp_inverse().unwrap();
        let expect = [
            rat_i(1),
            rat_i(1),
            rat(3, 2),
            rat(5, 2),
            rat(17, 4),
            rat_i(7),
            rat(21, 2),
            rat(99, 8),
            rat(55, 16),
            rat(-715, 16),
        ];
        for (n, e) in expect.iter().enumerate() {
            assert_eq!(g.coeff(n + 1), e.clone(), "coefficient of x^{}", n + 1);
        }
    }

    #[test]
    fn from_dims_of_the_counterexample() {
        let f = TruncatedSeries::from_dims(&[1, 2, 3, 0, 0]).unwrap();
        assert_eq!(f.coeffs()[..3], [rat_i(1), rat_i(1), rat(1, 2)]);
        assert_eq!(f.neg_flip().display(), "x - x^2 + 1/2x^3");
    }

    #[test]
    fn gk_flags_the_counterexample_at_order_ten() {
        let dims = pad_dims(&[1, 2, 3, 0, 0], 10).unwrap();
        let report = gk_test_dims(&dims, 10).unwrap();
        assert_eq!(report.first_flag, Some(10));
        assert!(!report.consistent);
        assert_eq!(report.rows[9].coeff, "-715/16");
        assert!(report.verdict().starts_with("not Koszul"));
        // all earlier candidates are fine
        assert!(report.rows[..9].iter().all(|r| !r.flagged));
        assert_eq!(report.rows[8].coeff, "55/16");
    }

    #[test]
    fn pad_requires_two_consecutive_zeros() {
        assert!(pad_dims(&[1, 2, 3, 0], 10).is_err());
        assert_eq!(
            pad_dims(&[1, 2, 3, 0, 0], 7).unwrap(),
            vec![1, 2, 3, 0, 0, 0, 0]
        );
    }

    #[test]
    fn com_lie_identity() {
        // dim Com(n) = 1, dim Lie(n) = (n-1)!
        let com = [1, 1, 1, 1, 1];
        let lie = [1, 1, 2, 6, 24];
        assert!(gk_identity(&com, &lie, 5).unwrap());
        assert!(gk_identity(&lie, &com, 5).unwrap());
        // and it fails for a wrong pair
        assert!(!gk_identity(&com, &com, 5).unwrap());
    }

    #[test]
    fn inverse_round_trips() {
        let f = series(&[(1, 1), (3, 2), (-2, 1), (1, 3), (5, 7), (0, 1), (2, 5)]);
        let g = f.comp_inverse().unwrap();
        let order = f.order();
        assert_eq!(f.compose(&g), TruncatedSeries::x(order));
        assert_eq!(g.compose(&f), TruncatedSeries::x(order));
        assert_eq!(g.comp_inverse().unwrap(), f);
    }

    #[test]
    fn no_linear_term_is_an_error() {
        let f = series(&[(0, 1), (1, 1)]);
        assert!(matches!(f.comp_inverse(), Err(Error::NoLinearTerm)));
    }

    #[test]
    fn presentation_level_test_includes_the_dual_identity() {
        let com = crate::presentations::zoo_get("Com").unwrap();
        let report = gk_test(&com, 5, 5).unwrap();
        assert!(report.consistent);
        assert_eq!(report.identity_holds, Some(true));
        // candidate dual dims of Com are the Lie dims
        let dims: Vec<&str> = report.rows.iter().map(|r| r.dual_dim.as_str()).collect();
        assert_eq!(dims, vec!["1", "1", "2", "6", "24"]);

        let bad = crate::presentations::zoo_get("PreLieNilBlack").unwrap();
        let report = gk_test(&bad, 10, 5).unwrap();
        assert_eq!(report.first_flag, Some(10));
        // the dual table cannot be padded, so no identity is reported
        assert_eq!(report.identity_holds, None);
    }

    #[test]
    fn quad_dimension_formula_values() {
        assert_eq!(quad_dimension(1), BigInt::from(1));
        assert_eq!(quad_dimension(2), BigInt::from(8));
        assert_eq!(quad_dimension(3), BigInt::from(138));
    }

    #[test]
    fn quad_gk_identity_to_order_six() {
        // dim Quad!(n) = n^2 n!; dim Quad(n) from the closed formula.
        let mut fact: u64 = 1;
        let mut dual = Vec::new();
        let mut quad = Vec::new();
        for n in 1..=6u64 {
            fact *= n;
            dual.push((n * n * fact) as usize);
            let q: BigInt = quad_dimension(n as usize);
            quad.push(q.try_into().unwrap());
        }
        assert!(gk_identity(&dual, &quad, 6).unwrap());
        assert!(gk_identity(&quad, &dual, 6).unwrap());
    }
}
