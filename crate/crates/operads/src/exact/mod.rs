//! Exact rational scalars, dense matrices, canonical subspaces and
//! symmetric-group permutations.
//!
//! Every other module builds on this one. All values are immutable after
//! construction and all operations are pure, so sharing across threads is
//! safe. Subspaces are kept in reduced row-echelon form, which is a unique
//! canonical form: two subspaces are equal iff their basis matrices are
//! identical.

mod matrix;
mod perm;
mod subspace;

pub use matrix::{rref, Matrix};
pub use perm::Perm;
pub use subspace::Subspace;

use crate::error::{Error, Result};
use num_bigint::BigInt;

/// Exact rational scalar; the ground field of every computation.
pub type Rat = num_rational::BigRational;

/// Rational from an integer.
pub fn rat_i(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Rational p/q.
pub fn rat(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// Parses "p/q" or "p".
pub fn parse_rat(s: &str) -> Result<Rat> {
    let bad = || Error::BadRational(s.to_string());
    let s = s.trim();
    match s.split_once('/') {
        None => s.parse::<BigInt>().map(Rat::from_integer).map_err(|_| bad()),
        Some((p, q)) => {
            let p = p.trim().parse::<BigInt>().map_err(|_| bad())?;
            let q = q.trim().parse::<BigInt>().map_err(|_| bad())?;
            if q == BigInt::from(0) {
                return Err(bad());
            }
            Ok(Rat::new(p, q))
        }
    }
}

/// Formats as "p/q", or "p" when the denominator is 1.
pub fn fmt_rat(r: &Rat) -> String {
    if r.denom() == &BigInt::from(1) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn rational_parse_and_format_round_trip() {
        for s in ["0", "5", "-3", "2/3", "-7/4", "22/7"] {
            let r = parse_rat(s).unwrap();
            assert_eq!(fmt_rat(&r), s);
        }
        // reduction happens on parse
        assert_eq!(fmt_rat(&parse_rat("4/6").unwrap()), "2/3");
        assert_eq!(fmt_rat(&parse_rat("3/-6").unwrap()), "-1/2");
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
    }

    #[test]
    fn rational_arithmetic_is_exact() {
        let mut acc = Rat::zero();
        for _ in 0..10 {
            acc += rat(1, 10);
        }
        assert_eq!(acc, rat_i(1));
    }
}
