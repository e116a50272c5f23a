use crate::error::{Error, Result};
use crate::exact::{Rat, Subspace};
use crate::freeop::{ideal_spans, FreeOperad, GenSpace};
use crate::presentations::QuadPresentation;
use num_traits::Zero;

/// Truncated linear model of a quotient operad `F(V)/(R)`: for every arity
/// up to the bound, a basis of the quotient (the tree basis elements at the
/// non-pivot columns of the ideal, i.e. greedy pivot selection in
/// row-reduction order) and the partial-composition structure constants in
/// that basis.
#[derive(Debug, Clone)]
pub struct QuotientTrunc {
    gen: GenSpace,
    fo: FreeOperad,
    ideals: Vec<Subspace>,           // arities 3..=n_max
    complements: Vec<Vec<usize>>,    // complements[n-2] = tree indices, arities 2..=n_max
    n_max: usize,
}

impl QuotientTrunc {
    pub fn build(p: &QuadPresentation, n_max: usize) -> Result<QuotientTrunc> {
        assert!(n_max >= 2);
        let fo = FreeOperad::new(p.gen(), n_max);
        let ideals = ideal_spans(&fo, p.relations(), n_max)?;
        let mut complements = Vec::new();
        for n in 2..=n_max {
            let dim = fo.span(n)?.dim();
            let indices: Vec<usize> = if n == 2 {
                (0..dim).collect()
            } else {
                let pivots: std::collections::HashSet<usize> =
                    ideals[n - 3].pivots().iter().copied().collect();
                (0..dim).filter(|i| !pivots.contains(i)).collect()
            };
            complements.push(indices);
        }
        Ok(QuotientTrunc {
            gen: p.gen().clone(),
            fo,
            ideals,
            complements,
            n_max,
        })
    }

    pub fn gen(&self) -> &GenSpace {
        &self.gen
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    /// Dimension of the quotient at each arity (arity 1 is the identity).
    pub fn dim(&self, arity: usize) -> usize {
        if arity == 1 {
            1
        } else {
            self.complements[arity - 2].len()
        }
    }

    /// Canonical coordinates of a dense span vector in the quotient basis:
    /// reduce modulo the ideal, then read off the complement columns.
    pub fn reduce(&self, arity: usize, mut dense: Vec<Rat>) -> Vec<Rat> {
        if arity >= 3 {
            self.ideals[arity - 3].reduce_rat(&mut dense);
        }
        self.complements[arity - 2]
            .iter()
            .map(|&i| dense[i].clone())
            .collect()
    }

    /// Structure constants of the partial composition
    /// `e_j o_slot e_l = sum_k c_k e_k` in the quotient bases; `j` and `l`
    /// index the complement bases at the two arities. Arity-1 factors are
    /// the operad identity.
    pub fn compose(&self, p: usize, j: usize, slot: usize, q: usize, l: usize) -> Result<Vec<Rat>> {
        if p == 1 {
            if slot != 1 {
                return Err(Error::SlotOutOfRange { slot, arity: 1 });
            }
            let mut out = vec![Rat::zero(); self.dim(q)];
            out[l] = crate::exact::rat_i(1);
            return Ok(out);
        }
        if q == 1 {
            if slot == 0 || slot > p {
                return Err(Error::SlotOutOfRange { slot, arity: p });
            }
            let mut out = vec![Rat::zero(); self.dim(p)];
            out[j] = crate::exact::rat_i(1);
            return Ok(out);
        }
        let n = p + q - 1;
        if n > self.n_max {
            return Err(Error::ArityBound {
                arity: n,
                max: self.n_max,
            });
        }
        let x = vec![(self.complements[p - 2][j], crate::exact::rat_i(1))];
        let y = vec![(self.complements[q - 2][l], crate::exact::rat_i(1))];
        let composed = self.fo.compose(p, &x, slot, q, &y)?;
        let dense = self.fo.span(n)?.to_dense(&composed);
        Ok(self.reduce(n, dense))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat_i;
    use crate::presentations::zoo_get;

    #[test]
    fn associative_quotient_is_one_dimensional_with_unit_constants() {
        let p = zoo_get("AsNs").unwrap();
        let q = QuotientTrunc::build(&p, 5).unwrap();
        for n in 1..=5 {
            assert_eq!(q.dim(n), 1, "arity {n}");
        }
        // every composition of basis classes is again the basis class
        for (p_ar, q_ar) in [(2, 2), (2, 3), (3, 2), (2, 4), (3, 3), (4, 2)] {
            for slot in 1..=p_ar {
                assert_eq!(q.compose(p_ar, 0, slot, q_ar, 0).unwrap(), vec![rat_i(1)]);
            }
        }
    }

    #[test]
    fn dias_quotient_has_linear_dims() {
        let p = zoo_get("Dias").unwrap();
        let q = QuotientTrunc::build(&p, 5).unwrap();
        assert_eq!((1..=5).map(|n| q.dim(n)).collect::<Vec<_>>(), vec![1, 2, 3, 4, 5]);
    }

    #[test]
    fn lie_quotient_matches_factorials() {
        let p = crate::manin::koszul_dual(&zoo_get("Com").unwrap()).unwrap();
        let q = QuotientTrunc::build(&p, 5).unwrap();
        assert_eq!(
            (1..=5).map(|n| q.dim(n)).collect::<Vec<_>>(),
            vec![1, 1, 2, 6, 24]
        );
    }

    #[test]
    fn composition_with_identity_is_trivial() {
        let p = zoo_get("Dend").unwrap();
        let q = QuotientTrunc::build(&p, 4).unwrap();
        let out = q.compose(1, 0, 1, 3, 2).unwrap();
        assert_eq!(out[2], rat_i(1));
        let out = q.compose(3, 1, 2, 1, 0).unwrap();
        assert_eq!(out[1], rat_i(1));
    }

    #[test]
    fn operad_axioms_hold_in_the_quotient() {
        // sequential and parallel partial-composition axioms, checked on
        // the diassociative quotient at small arities.
        let p = zoo_get("Dias").unwrap();
        let q = QuotientTrunc::build(&p, 4).unwrap();
        let d2 = q.dim(2);
        // (a o_1 b) o_s c for s inside b vs composing in the other order
        for a in 0..d2 {
            for b in 0..d2 {
                for c in 0..d2 {
                    // sequential: (a o_1 b) o_1 c = a o_1 (b o_1 c)
                    let mut lhs = vec![Rat::zero(); q.dim(4)];
                    for (k, ck) in q.compose(2, a, 1, 2, b).unwrap().into_iter().enumerate() {
                        if ck.is_zero() {
                            continue;
                        }
                        for (t, ct) in q.compose(3, k, 1, 2, c).unwrap().into_iter().enumerate() {
                            lhs[t] += &ck * ct;
                        }
                    }
                    let mut rhs = vec![Rat::zero(); q.dim(4)];
                    for (k, ck) in q.compose(2, b, 1, 2, c).unwrap().into_iter().enumerate() {
                        if ck.is_zero() {
                            continue;
                        }
                        for (t, ct) in q.compose(2, a, 1, 3, k).unwrap().into_iter().enumerate() {
                            rhs[t] += &ck * ct;
                        }
                    }
                    assert_eq!(lhs, rhs, "sequential axiom at ({a},{b},{c})");
                    // parallel: (a o_1 b) o_3 c = (a o_2 c) o_1 b
                    let mut lhs = vec![Rat::zero(); q.dim(4)];
                    for (k, ck) in q.compose(2, a, 1, 2, b).unwrap().into_iter().enumerate() {
                        if ck.is_zero() {
                            continue;
                        }
                        for (t, ct) in q.compose(3, k, 3, 2, c).unwrap().into_iter().enumerate() {
                            lhs[t] += &ck * ct;
                        }
                    }
                    let mut rhs = vec![Rat::zero(); q.dim(4)];
                    for (k, ck) in q.compose(2, a, 2, 2, c).unwrap().into_iter().enumerate() {
                        if ck.is_zero() {
                            continue;
                        }
                        for (t, ct) in q.compose(3, k, 1, 2, b).unwrap().into_iter().enumerate() {
                            rhs[t] += &ck * ct;
                        }
                    }
                    assert_eq!(lhs, rhs, "parallel axiom at ({a},{b},{c})");
                }
            }
        }
    }
}
