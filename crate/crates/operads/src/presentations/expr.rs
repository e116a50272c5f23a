//! Translation of algebraic words in three variables into weight-2 vectors.
//!
//! A quadratic relation is usually written as an identity between words
//! like `(x*y)*z` and `x*(z*y)`. This module turns such words into exact
//! coordinates over the canonical `(comp, root, upper)` basis, so the
//! built-in presentations can be transcribed literally.

use crate::error::{Error, Result};
use crate::exact::{rat_i, Rat};
use crate::freeop::{GenSpace, Kind, Weight2Vector, w2_index, w2_dim};
use num_traits::Zero;

/// Formal linear combination of generator basis indices.
pub type OpCombo = Vec<(usize, Rat)>;

pub fn op(i: usize) -> OpCombo {
    vec![(i, rat_i(1))]
}

pub fn op_sum(indices: &[usize]) -> OpCombo {
    indices.iter().map(|&i| (i, rat_i(1))).collect()
}

/// Word in the variables x, y, z (0, 1, 2), built from binary operations.
#[derive(Debug, Clone)]
pub enum Expr {
    Var(usize),
    App(OpCombo, Box<Expr>, Box<Expr>),
}

pub const X: Expr = Expr::Var(0);
pub const Y: Expr = Expr::Var(1);
pub const Z: Expr = Expr::Var(2);

/// `ops(a, b)` with a single generator.
pub fn app(o: usize, a: Expr, b: Expr) -> Expr {
    Expr::App(op(o), Box::new(a), Box::new(b))
}

/// Application of a linear combination of generators.
pub fn app_combo(o: OpCombo, a: Expr, b: Expr) -> Expr {
    Expr::App(o, Box::new(a), Box::new(b))
}

fn swap_combo(gen: &GenSpace, combo: &OpCombo) -> OpCombo {
    let mut out: Vec<(usize, Rat)> = Vec::new();
    for (i, c) in combo {
        for (k, a) in gen.act12_col(*i) {
            match out.iter_mut().find(|(j, _)| j == &k) {
                Some((_, e)) => *e += c * &a,
                None => out.push((k, c * &a)),
            }
        }
    }
    out
}

/// Weight-2 vector of a linear combination of words.
pub fn words_to_w2(gen: &GenSpace, words: &[(i64, Expr)]) -> Result<Weight2Vector> {
    let mut coords = vec![Rat::zero(); w2_dim(gen)];
    for (c, e) in words {
        accumulate(gen, e, &rat_i(*c), &mut coords)?;
    }
    Weight2Vector::new(gen.clone(), coords)
}

/// The relation `lhs - rhs = 0` as a weight-2 vector.
pub fn relation(
    gen: &GenSpace,
    lhs: &[(i64, Expr)],
    rhs: &[(i64, Expr)],
) -> Result<Weight2Vector> {
    let l = words_to_w2(gen, lhs)?;
    let r = words_to_w2(gen, rhs)?;
    l.add(&r.scale(&rat_i(-1)))
}

fn accumulate(gen: &GenSpace, e: &Expr, coeff: &Rat, coords: &mut [Rat]) -> Result<()> {
    let bad = || Error::BadPresentationFile("word is not quadratic in x, y, z".into());
    let Expr::App(root, l, r) = e else {
        return Err(bad());
    };
    match (l.as_ref(), r.as_ref()) {
        // left comb a(b(u,v), w)
        (Expr::App(upper, lu, lv), Expr::Var(w)) => {
            let (Expr::Var(u), Expr::Var(v)) = (lu.as_ref(), lv.as_ref()) else {
                return Err(bad());
            };
            left_comb(gen, root, upper, (*u, *v, *w), coeff, coords)
        }
        // right comb a(u, b(v,w)) = a^(12)(b(v,w), u)
        (Expr::Var(u), Expr::App(upper, rv, rw)) => {
            let (Expr::Var(v), Expr::Var(w)) = (rv.as_ref(), rw.as_ref()) else {
                return Err(bad());
            };
            match gen.kind() {
                Kind::Regular => {
                    if (*u, *v, *w) != (0, 1, 2) {
                        return Err(bad());
                    }
                    for (a, ca) in root {
                        for (b, cb) in upper {
                            coords[w2_index(gen, 1, *a, *b)] += coeff * ca * cb;
                        }
                    }
                    Ok(())
                }
                Kind::Symmetric => {
                    let swapped = swap_combo(gen, root);
                    left_comb(gen, &swapped, upper, (*v, *w, *u), coeff, coords)
                }
            }
        }
        _ => Err(bad()),
    }
}

fn left_comb(
    gen: &GenSpace,
    root: &OpCombo,
    upper: &OpCombo,
    vars: (usize, usize, usize),
    coeff: &Rat,
    coords: &mut [Rat],
) -> Result<()> {
    let bad = || Error::BadPresentationFile("word is not quadratic in x, y, z".into());
    let (comp, swap_upper) = match gen.kind() {
        Kind::Regular => {
            if vars != (0, 1, 2) {
                return Err(bad());
            }
            (0, false)
        }
        Kind::Symmetric => match vars {
            // I = a(b(x,y),z), II = a(b(y,z),x), III = a(b(z,x),y)
            (0, 1, 2) => (0, false),
            (1, 2, 0) => (1, false),
            (2, 0, 1) => (2, false),
            (1, 0, 2) => (0, true),
            (2, 1, 0) => (1, true),
            (0, 2, 1) => (2, true),
            _ => return Err(bad()),
        },
    };
    let upper = if swap_upper {
        swap_combo(gen, upper)
    } else {
        upper.clone()
    };
    for (a, ca) in root {
        for (b, cb) in &upper {
            coords[w2_index(gen, comp, *a, *b)] += coeff * ca * cb;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freeop::Weight2Vector;

    #[test]
    fn associativity_in_one_dimensional_space() {
        let gen = GenSpace::trivial_1d("*");
        // (xy)z - x(yz) = t1 - t2
        let v = relation(&gen, &[(1, app(0, app(0, X, Y), Z))], &[(1, app(0, X, app(0, Y, Z)))])
            .unwrap();
        let t1 = Weight2Vector::basis(gen.clone(), 0, 0, 0);
        let t2 = Weight2Vector::basis(gen.clone(), 1, 0, 0);
        assert_eq!(v, t1.add(&t2.scale(&rat_i(-1))).unwrap());
    }

    #[test]
    fn right_comb_picks_up_the_sign_action() {
        // For the sign representation, x(yz) = -(b(y,z), x)-comb.
        let gen = GenSpace::sign_1d("b");
        let v = words_to_w2(&gen, &[(1, app(0, X, app(0, Y, Z)))]).unwrap();
        let t2 = Weight2Vector::basis(gen.clone(), 1, 0, 0);
        assert_eq!(v, t2.scale(&rat_i(-1)));
    }

    #[test]
    fn v_table_words_match_triples() {
        // Spot-check the permutoassociahedron labelling against words:
        // v2 = x(yz) should be (II, m', m) for the regular representation.
        let gen = GenSpace::regular_rep("m");
        let v = words_to_w2(&gen, &[(1, app(0, X, app(0, Y, Z)))]).unwrap();
        assert_eq!(v, Weight2Vector::basis(gen.clone(), 1, 1, 0));
        // v4 = (xz)y = (III, m, m')
        let v = words_to_w2(&gen, &[(1, app(0, app(0, X, Z), Y))]).unwrap();
        assert_eq!(v, Weight2Vector::basis(gen.clone(), 2, 0, 1));
        // v9 = (yz)x = (II, m, m)
        let v = words_to_w2(&gen, &[(1, app(0, app(0, Y, Z), X))]).unwrap();
        assert_eq!(v, Weight2Vector::basis(gen.clone(), 1, 0, 0));
    }

    #[test]
    fn regular_kind_rejects_permuted_variables() {
        let gen = GenSpace::regular(vec!["m".into()]);
        assert!(words_to_w2(&gen, &[(1, app(0, app(0, Y, X), Z))]).is_err());
        assert!(words_to_w2(&gen, &[(1, app(0, app(0, X, Y), Z))]).is_ok());
    }
}
