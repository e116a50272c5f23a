//! Textbook Hochschild complex of an associative algebra, written directly
//! on multilinear maps with the classical formulas. This is the reference
//! implementation the test suite compares the convolution complex against;
//! it deliberately shares nothing with the cooperad machinery.

use super::multilinear::MultiMap;
use crate::error::{Error, Result};
use crate::exact::rat_i;

pub struct Hochschild {
    mult: MultiMap,
}

impl Hochschild {
    pub fn new(mult: MultiMap) -> Result<Self> {
        if mult.arity() != 2 {
            return Err(Error::ContextMismatch);
        }
        if mult.compose_at(1, &mult)? != mult.compose_at(2, &mult)? {
            return Err(Error::NotAnAlgebra("multiplication".into()));
        }
        Ok(Hochschild { mult })
    }

    pub fn mult(&self) -> &MultiMap {
        &self.mult
    }

    /// Cosimplicial faces of an n-cochain: `d^0 f = a_1 f(..)`,
    /// `d^i f = f(.., a_i a_(i+1), ..)`, `d^(n+1) f = f(..) a_(n+1)`.
    pub fn faces(&self, f: &MultiMap) -> Result<Vec<MultiMap>> {
        let n = f.arity();
        let mut out = Vec::with_capacity(n + 2);
        out.push(self.mult.compose_at(2, f)?);
        for i in 1..=n {
            out.push(f.compose_at(i, &self.mult)?);
        }
        out.push(self.mult.compose_at(1, f)?);
        Ok(out)
    }

    /// The Hochschild differential, the alternating sum of the faces.
    pub fn delta(&self, f: &MultiMap) -> Result<MultiMap> {
        let mut acc = MultiMap::zero(f.dim(), f.arity() + 1);
        for (i, face) in self.faces(f)?.into_iter().enumerate() {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            acc = acc.add(&face.scale(&rat_i(sign)))?;
        }
        Ok(acc)
    }

    /// The composition product `f o g = sum_i (-1)^((i-1)(q-1)) f o_i g`.
    pub fn circle(&self, f: &MultiMap, g: &MultiMap) -> Result<MultiMap> {
        let (p, q) = (f.arity(), g.arity());
        let mut acc = MultiMap::zero(f.dim(), p + q - 1);
        for i in 1..=p {
            let sign = if (i - 1) * (q - 1) % 2 == 1 { -1 } else { 1 };
            acc = acc.add(&f.compose_at(i, g)?.scale(&rat_i(sign)))?;
        }
        Ok(acc)
    }

    /// The classical bracket `[f, g] = f o g - (-1)^((p-1)(q-1)) g o f`.
    pub fn bracket(&self, f: &MultiMap, g: &MultiMap) -> Result<MultiMap> {
        let (p, q) = (f.arity(), g.arity());
        let sign = if (p - 1) * (q - 1) % 2 == 1 { 1 } else { -1 };
        self.circle(f, g)?
            .add(&self.circle(g, f)?.scale(&rat_i(sign)))
    }

    /// Cup product `(f u g)(a_1..a_(p+q)) = f(a_1..a_p) g(a_(p+1)..)`.
    pub fn cup(&self, f: &MultiMap, g: &MultiMap) -> Result<MultiMap> {
        self.mult.compose_at(2, g)?.compose_at(1, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::defcomplex::algebra::op_from_entries;

    fn dual_numbers() -> Hochschild {
        Hochschild::new(op_from_entries(
            2,
            &[(0, 0, 0, 1), (1, 0, 1, 1), (1, 1, 0, 1)],
        ))
        .unwrap()
    }

    #[test]
    fn delta_squares_to_zero() {
        let h = dual_numbers();
        let f = op_from_entries(2, &[(0, 1, 1, 3), (1, 0, 1, -2)]);
        let d = h.delta(&f).unwrap();
        assert!(h.delta(&d).unwrap().is_zero());
    }

    #[test]
    fn delta_of_the_multiplication_vanishes() {
        let h = dual_numbers();
        let m = h.mult().clone();
        assert!(h.delta(&m).unwrap().is_zero());
    }

    #[test]
    fn bracket_with_mult_reproduces_delta_up_to_sign() {
        // delta f = (-1)^(|f|) [m, f]
        let h = dual_numbers();
        let f = op_from_entries(2, &[(1, 1, 1, 1), (0, 0, 1, 5)]);
        let lhs = h.delta(&f).unwrap();
        let rhs = h.bracket(h.mult(), &f).unwrap().scale(&rat_i(-1));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn non_associative_multiplication_rejected() {
        let bad = op_from_entries(2, &[(1, 0, 0, 1), (0, 1, 0, 1)]);
        assert!(Hochschild::new(bad).is_err());
    }
}
