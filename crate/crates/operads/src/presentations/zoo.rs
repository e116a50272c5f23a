//! Built-in presentations of the classical binary quadratic operads.
//!
//! Symmetric entries: Com, Lie, As, PreLie, Perm, Nil, Zinb, Leib,
//! PreLiePerm (the dendriform-with-right-symmetry operad) and
//! PreLieNilBlack (the non-Koszul counterexample). Regular entries: AsNs,
//! Dend, Dias, Quad, plus Trias and TriDend whose relations come from the
//! wider literature (flagged `external`).

use super::expr::{app, app_combo, op_sum, relation, Expr, X, Y, Z};
use super::presentation::QuadPresentation;
use crate::error::{Error, Result};
use crate::exact::{Matrix, Rat, Subspace};
use crate::freeop::{w2_dim, w2_index, GenSpace};
use num_traits::Zero;

/// A zoo presentation with its reference data.
#[derive(Debug, Clone)]
pub struct ZooEntry {
    pub presentation: QuadPresentation,
    /// What the algebras over this operad are.
    pub note: &'static str,
    /// Expected quotient dimensions for arities 1..=4 (for regular entries
    /// these are the non-symmetric, per-arity dimensions).
    pub expected_dims: Vec<usize>,
    /// Relations taken from outside sources rather than derived here;
    /// external entries are excluded from the reproduction suite.
    pub external: bool,
}

pub fn zoo_names() -> Vec<&'static str> {
    vec![
        "Com", "Lie", "As", "PreLie", "Perm", "Nil", "Zinb", "Leib", "PreLiePerm",
        "PreLieNilBlack", "AsNs", "Dend", "Dias", "Quad", "Trias", "TriDend",
    ]
}

pub fn zoo_get(name: &str) -> Result<QuadPresentation> {
    Ok(zoo_entry(name)?.presentation)
}

pub fn zoo_entry(name: &str) -> Result<ZooEntry> {
    let e = match name {
        "Com" => ZooEntry {
            presentation: com()?,
            note: "commutative associative algebras",
            expected_dims: vec![1, 1, 1, 1],
            external: false,
        },
        "Lie" => ZooEntry {
            presentation: lie()?,
            note: "Lie algebras",
            expected_dims: vec![1, 1, 2, 6],
            external: false,
        },
        "As" => ZooEntry {
            presentation: as_sym()?,
            note: "associative algebras",
            expected_dims: vec![1, 2, 6, 24],
            external: false,
        },
        "PreLie" => ZooEntry {
            presentation: prelie()?,
            note: "right preLie algebras (right-symmetric associator)",
            expected_dims: vec![1, 2, 9, 64],
            external: false,
        },
        "Perm" => ZooEntry {
            presentation: perm()?,
            note: "associative algebras, symmetric in the last two arguments",
            expected_dims: vec![1, 2, 3, 4],
            external: false,
        },
        "Nil" => ZooEntry {
            presentation: nil()?,
            note: "skew-symmetric operation with all compositions zero",
            expected_dims: vec![1, 1, 0, 0],
            external: false,
        },
        "Zinb" => ZooEntry {
            presentation: zinb()?,
            note: "Zinbiel algebras (dual Leibniz)",
            expected_dims: vec![1, 2, 6, 24],
            external: false,
        },
        "Leib" => ZooEntry {
            presentation: leib()?,
            note: "(right) Leibniz algebras",
            expected_dims: vec![1, 2, 6, 24],
            external: false,
        },
        "PreLiePerm" => ZooEntry {
            presentation: prelie_perm()?,
            note: "dendriform algebras with two extra right-symmetry relations",
            expected_dims: vec![1, 4, 21, 136],
            external: false,
        },
        "PreLieNilBlack" => ZooEntry {
            presentation: prelie_nil_black()?,
            note: "(x<>y)<>z = 0 and x<>(y<>z) = x<>(z<>y); not Koszul",
            expected_dims: vec![1, 2, 3, 0],
            external: false,
        },
        "AsNs" => ZooEntry {
            presentation: as_ns()?,
            note: "associative algebras (non-symmetric presentation)",
            expected_dims: vec![1, 1, 1, 1],
            external: false,
        },
        "Dend" => ZooEntry {
            presentation: dend()?,
            note: "dendriform algebras",
            expected_dims: vec![1, 2, 5, 14],
            external: false,
        },
        "Dias" => ZooEntry {
            presentation: dias()?,
            note: "(di)associative algebras with two operations, x -| y and x |- y",
            expected_dims: vec![1, 2, 3, 4],
            external: false,
        },
        "Quad" => ZooEntry {
            presentation: quad()?,
            note: "quadri-algebras: four operations splitting an associative product",
            expected_dims: vec![1, 4, 23, 156],
            external: false,
        },
        "Trias" => ZooEntry {
            presentation: trias()?,
            note: "triassociative algebras (corollas with an emphasized leaf subset)",
            expected_dims: vec![1, 3, 7, 15],
            external: true,
        },
        "TriDend" => ZooEntry {
            presentation: tridend()?,
            note: "tridendriform algebras",
            expected_dims: vec![1, 3, 11, 45],
            external: true,
        },
        other => {
            return Err(Error::UnknownZooEntry {
                name: other.to_string(),
                available: zoo_names().join(", "),
            })
        }
    };
    Ok(e)
}

fn com() -> Result<QuadPresentation> {
    let gen = GenSpace::trivial_1d("*");
    // (x*y)*z = (y*z)*x : with commutativity this is associativity.
    let r = relation(
        &gen,
        &[(1, app(0, app(0, X, Y), Z))],
        &[(1, app(0, app(0, Y, Z), X))],
    )?;
    QuadPresentation::from_spanning("Com", gen, vec![r])
}

fn lie() -> Result<QuadPresentation> {
    let gen = GenSpace::sign_1d("[,]");
    // Jacobi: [[x,y],z] + [[y,z],x] + [[z,x],y] = 0
    let r = relation(
        &gen,
        &[
            (1, app(0, app(0, X, Y), Z)),
            (1, app(0, app(0, Y, Z), X)),
            (1, app(0, app(0, Z, X), Y)),
        ],
        &[],
    )?;
    QuadPresentation::from_spanning("Lie", gen, vec![r])
}

fn as_sym() -> Result<QuadPresentation> {
    let gen = GenSpace::regular_rep("m");
    let r = relation(
        &gen,
        &[(1, app(0, app(0, X, Y), Z))],
        &[(1, app(0, X, app(0, Y, Z)))],
    )?;
    QuadPresentation::from_spanning("As", gen, vec![r])
}

fn prelie() -> Result<QuadPresentation> {
    let gen = GenSpace::regular_rep("m");
    // (xy)z - x(yz) = (xz)y - x(zy)
    let r = relation(
        &gen,
        &[
            (1, app(0, app(0, X, Y), Z)),
            (-1, app(0, X, app(0, Y, Z))),
        ],
        &[
            (1, app(0, app(0, X, Z), Y)),
            (-1, app(0, X, app(0, Z, Y))),
        ],
    )?;
    QuadPresentation::from_spanning("PreLie", gen, vec![r])
}

fn perm() -> Result<QuadPresentation> {
    let gen = GenSpace::regular_rep("m");
    let r1 = relation(
        &gen,
        &[(1, app(0, app(0, X, Y), Z))],
        &[(1, app(0, X, app(0, Y, Z)))],
    )?;
    let r2 = relation(
        &gen,
        &[(1, app(0, X, app(0, Y, Z)))],
        &[(1, app(0, X, app(0, Z, Y)))],
    )?;
    QuadPresentation::from_spanning("Perm", gen, vec![r1, r2])
}

fn nil() -> Result<QuadPresentation> {
    let gen = GenSpace::sign_1d("n");
    // every composition vanishes: the relations are the whole weight-2 part
    let r = relation(&gen, &[(1, app(0, app(0, X, Y), Z))], &[])?;
    QuadPresentation::from_spanning("Nil", gen, vec![r])
}

fn zinb() -> Result<QuadPresentation> {
    let gen = GenSpace::regular_rep("z");
    // (xz)y = x(zy) + x(yz) and (xy)z = (xz)y
    let r1 = relation(
        &gen,
        &[(1, app(0, app(0, X, Z), Y))],
        &[
            (1, app(0, X, app(0, Z, Y))),
            (1, app(0, X, app(0, Y, Z))),
        ],
    )?;
    let r2 = relation(
        &gen,
        &[(1, app(0, app(0, X, Y), Z))],
        &[(1, app(0, app(0, X, Z), Y))],
    )?;
    QuadPresentation::from_spanning("Zinb", gen, vec![r1, r2])
}

fn leib() -> Result<QuadPresentation> {
    let gen = GenSpace::regular_rep("l");
    // right Leibniz: [[x,y],z] = [[x,z],y] + [x,[y,z]]
    let r = relation(
        &gen,
        &[(1, app(0, app(0, X, Y), Z))],
        &[
            (1, app(0, app(0, X, Z), Y)),
            (1, app(0, X, app(0, Y, Z))),
        ],
    )?;
    QuadPresentation::from_spanning("Leib", gen, vec![r])
}

/// Generating space with two operations and their transposes:
/// basis (a, a', b, b') with the blockwise swap action.
fn two_op_space(a: &str, b: &str) -> GenSpace {
    GenSpace::symmetric(
        vec![
            a.to_string(),
            format!("{a}'"),
            b.to_string(),
            format!("{b}'"),
        ],
        Matrix::from_i64(&[
            &[0, 1, 0, 0],
            &[1, 0, 0, 0],
            &[0, 0, 0, 1],
            &[0, 0, 1, 0],
        ]),
    )
    .unwrap()
}

fn prelie_perm() -> Result<QuadPresentation> {
    // operations: 0 = x<y, 2 = x>y (1, 3 their transposes); * = < + >
    let gen = two_op_space("≺", "≻");
    let star = || op_sum(&[0, 2]);
    let rels = vec![
        // (x<y)<z = x<(y*z)
        relation(
            &gen,
            &[(1, app(0, app(0, X, Y), Z))],
            &[(1, app_combo(op_sum(&[0]), X, app_combo(star(), Y, Z)))],
        )?,
        // (x>y)<z = x>(y<z)
        relation(
            &gen,
            &[(1, app(0, app(2, X, Y), Z))],
            &[(1, app(2, X, app(0, Y, Z)))],
        )?,
        // (x*y)>z = x>(y>z)
        relation(
            &gen,
            &[(1, app_combo(op_sum(&[2]), app_combo(star(), X, Y), Z))],
            &[(1, app(2, X, app(2, Y, Z)))],
        )?,
        // x<(y*z) = x<(z*y)
        relation(
            &gen,
            &[(1, app_combo(op_sum(&[0]), X, app_combo(star(), Y, Z)))],
            &[(1, app_combo(op_sum(&[0]), X, app_combo(star(), Z, Y)))],
        )?,
        // x>(y<z) = x>(z>y)
        relation(
            &gen,
            &[(1, app(2, X, app(0, Y, Z)))],
            &[(1, app(2, X, app(2, Z, Y)))],
        )?,
    ];
    QuadPresentation::from_spanning("PreLiePerm", gen, rels)
}

fn prelie_nil_black() -> Result<QuadPresentation> {
    let gen = GenSpace::regular_rep("⋄");
    let r1 = relation(&gen, &[(1, app(0, app(0, X, Y), Z))], &[])?;
    let r2 = relation(
        &gen,
        &[(1, app(0, X, app(0, Y, Z)))],
        &[(1, app(0, X, app(0, Z, Y)))],
    )?;
    QuadPresentation::from_spanning("PreLieNilBlack", gen, vec![r1, r2])
}

fn as_ns() -> Result<QuadPresentation> {
    let gen = GenSpace::regular(vec!["m".into()]);
    let r = relation(
        &gen,
        &[(1, app(0, app(0, X, Y), Z))],
        &[(1, app(0, X, app(0, Y, Z)))],
    )?;
    QuadPresentation::from_spanning("AsNs", gen, vec![r])
}

fn dend() -> Result<QuadPresentation> {
    let gen = GenSpace::regular(vec!["≺".into(), "≻".into()]);
    let rels = vec![
        // (x<y)<z = x<(y<z) + x<(y>z)
        relation(
            &gen,
            &[(1, app(0, app(0, X, Y), Z))],
            &[
                (1, app(0, X, app(0, Y, Z))),
                (1, app(0, X, app(1, Y, Z))),
            ],
        )?,
        // (x>y)<z = x>(y<z)
        relation(
            &gen,
            &[(1, app(0, app(1, X, Y), Z))],
            &[(1, app(1, X, app(0, Y, Z)))],
        )?,
        // (x<y)>z + (x>y)>z = x>(y>z)
        relation(
            &gen,
            &[
                (1, app(1, app(0, X, Y), Z)),
                (1, app(1, app(1, X, Y), Z)),
            ],
            &[(1, app(1, X, app(1, Y, Z)))],
        )?,
    ];
    QuadPresentation::from_spanning("Dend", gen, rels)
}

fn dias() -> Result<QuadPresentation> {
    let gen = GenSpace::regular(vec!["⊣".into(), "⊢".into()]);
    let lhs_rhs: [(Expr, Expr); 5] = [
        // (x-|y)-|z = x-|(y-|z)
        (app(0, app(0, X, Y), Z), app(0, X, app(0, Y, Z))),
        // x-|(y-|z) = x-|(y|-z)
        (app(0, X, app(0, Y, Z)), app(0, X, app(1, Y, Z))),
        // (x|-y)-|z = x|-(y-|z)
        (app(0, app(1, X, Y), Z), app(1, X, app(0, Y, Z))),
        // (x-|y)|-z = (x|-y)|-z
        (app(1, app(0, X, Y), Z), app(1, app(1, X, Y), Z)),
        // (x|-y)|-z = x|-(y|-z)
        (app(1, app(1, X, Y), Z), app(1, X, app(1, Y, Z))),
    ];
    let rels = lhs_rhs
        .into_iter()
        .map(|(l, r)| relation(&gen, &[(1, l)], &[(1, r)]))
        .collect::<Result<Vec<_>>>()?;
    QuadPresentation::from_spanning("Dias", gen, rels)
}

/// Image of an elementary relation tensor under the explicit black-square
/// map: split each relation by composition pattern, r = r1 + r2 and
/// s = s1 + s2, then the image is the (o1, o1)-matched product minus the
/// (o2, o2)-matched product, read inside F(V'(x)W')(3).
pub fn black_square_rows(
    p_rel: &Subspace,
    dp: usize,
    q_rel: &Subspace,
    dq: usize,
) -> Vec<Vec<Rat>> {
    let d = dp * dq;
    let ambient = 2 * d * d;
    let mut rows = Vec::new();
    for r in p_rel.basis_rows() {
        for s in q_rel.basis_rows() {
            let mut row = vec![Rat::zero(); ambient];
            for comp in 0..2usize {
                let sign = if comp == 0 { Rat::from_integer(1.into()) } else { Rat::from_integer((-1).into()) };
                for a in 0..dp {
                    for b in 0..dp {
                        let rc = &r[comp * dp * dp + a * dp + b];
                        if rc.is_zero() {
                            continue;
                        }
                        for c in 0..dq {
                            for e in 0..dq {
                                let sc = &s[comp * dq * dq + c * dq + e];
                                if sc.is_zero() {
                                    continue;
                                }
                                let idx = comp * d * d + (a * dq + c) * d + (b * dq + e);
                                row[idx] += &sign * rc * sc;
                            }
                        }
                    }
                }
            }
            rows.push(row);
        }
    }
    rows
}

fn quad() -> Result<QuadPresentation> {
    let dend = dend()?;
    let gen = dend.gen().tensor(dend.gen(), false)?;
    let rows = black_square_rows(dend.relations(), 2, dend.relations(), 2);
    let rel = Subspace::span(w2_dim(&gen), rows);
    QuadPresentation::new("Quad", gen, rel)
}

/// Relations of the triassociative operad, generated from its set-operad
/// model: arity-2 operations are corollas with a nonempty emphasized subset
/// of the two leaves (-| = {1}, |- = {2}, perp = {1,2}), and a weight-2
/// composite equals the corolla whose emphasized subset follows the
/// emphasized branches. Relations = kernel of the evaluation onto subsets.
fn trias() -> Result<QuadPresentation> {
    let gen = GenSpace::regular(vec!["⊣".into(), "⊢".into(), "⊥".into()]);
    let subset_of = |i: usize| -> u8 {
        match i {
            0 => 0b01, // {1}
            1 => 0b10, // {2}
            _ => 0b11, // {1,2}
        }
    };
    // Evaluation matrix: rows = subsets of {1,2,3} (7 classes), columns =
    // weight-2 basis.
    let mut m = Matrix::zeros(7, w2_dim(&gen));
    for comp in 0..2usize {
        for root in 0..3 {
            for upper in 0..3 {
                let t = subset_of(root);
                let s = subset_of(upper);
                let u: u8 = if comp == 0 {
                    // (x y) z : root sees {block, 3}, block expands to s
                    (if t & 0b01 != 0 { s } else { 0 }) | (if t & 0b10 != 0 { 0b100 } else { 0 })
                } else {
                    // x (y z) : root sees {1, block}, block expands to s<<1
                    (if t & 0b01 != 0 { 0b001 } else { 0 }) | (if t & 0b10 != 0 { s << 1 } else { 0 })
                };
                debug_assert!(u != 0);
                m.set(
                    (u - 1) as usize,
                    w2_index(&gen, comp, root, upper),
                    crate::exact::rat_i(1),
                );
            }
        }
    }
    let rel = Subspace::kernel(&m);
    QuadPresentation::new("Trias", gen, rel)
}

fn tridend() -> Result<QuadPresentation> {
    // operations: 0 = x<y, 1 = x>y, 2 = x.y; * = < + > + .
    let gen = GenSpace::regular(vec!["≺".into(), "≻".into(), "·".into()]);
    let star = || op_sum(&[0, 1, 2]);
    let rels = vec![
        // (x<y)<z = x<(y*z)
        relation(
            &gen,
            &[(1, app(0, app(0, X, Y), Z))],
            &[(1, app_combo(op_sum(&[0]), X, app_combo(star(), Y, Z)))],
        )?,
        // (x>y)<z = x>(y<z)
        relation(
            &gen,
            &[(1, app(0, app(1, X, Y), Z))],
            &[(1, app(1, X, app(0, Y, Z)))],
        )?,
        // (x*y)>z = x>(y>z)
        relation(
            &gen,
            &[(1, app_combo(op_sum(&[1]), app_combo(star(), X, Y), Z))],
            &[(1, app(1, X, app(1, Y, Z)))],
        )?,
        // (x>y).z = x>(y.z)
        relation(
            &gen,
            &[(1, app(2, app(1, X, Y), Z))],
            &[(1, app(1, X, app(2, Y, Z)))],
        )?,
        // (x<y).z = x.(y>z)
        relation(
            &gen,
            &[(1, app(2, app(0, X, Y), Z))],
            &[(1, app(2, X, app(1, Y, Z)))],
        )?,
        // (x.y)<z = x.(y<z)
        relation(
            &gen,
            &[(1, app(0, app(2, X, Y), Z))],
            &[(1, app(2, X, app(0, Y, Z)))],
        )?,
        // (x.y).z = x.(y.z)
        relation(
            &gen,
            &[(1, app(2, app(2, X, Y), Z))],
            &[(1, app(2, X, app(2, Y, Z)))],
        )?,
    ];
    QuadPresentation::from_spanning("TriDend", gen, rels)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zoo_names_all_resolve() {
        for n in zoo_names() {
            let e = zoo_entry(n).unwrap_or_else(|err| panic!("{n}: {err}"));
            assert_eq!(e.presentation.name(), n);
        }
        assert!(matches!(
            zoo_get("NoSuchOperad"),
            Err(Error::UnknownZooEntry { .. })
        ));
    }

    #[test]
    fn relation_dims_match_the_classical_counts() {
        for (name, dim) in [
            ("Com", 2),
            ("Lie", 1),
            ("As", 6),
            ("PreLie", 3),
            ("Perm", 9),
            ("Nil", 3),
            ("Zinb", 6),
            ("Leib", 6),
            ("PreLieNilBlack", 9),
            ("AsNs", 1),
            ("Dend", 3),
            ("Dias", 5),
            ("Quad", 9),
            ("Trias", 11),
            ("TriDend", 7),
        ] {
            assert_eq!(zoo_get(name).unwrap().relation_dim(), dim, "{name}");
        }
    }

    #[test]
    fn dias_relations_match_their_set_model() {
        // Dias is also a set operad: corollas with one emphasized leaf.
        // Its evaluation-kernel relations must agree with the listed five.
        let gen = GenSpace::regular(vec!["⊣".into(), "⊢".into()]);
        let mut m = Matrix::zeros(3, w2_dim(&gen));
        for comp in 0..2usize {
            for root in 0..2 {
                for upper in 0..2 {
                    let leaf = if comp == 0 {
                        match (root, upper) {
                            (0, u) => u,            // block emphasized: leaf u+1 of (xy)
                            (1, _) => 2,            // z emphasized
                            _ => unreachable!(),
                        }
                    } else {
                        match (root, upper) {
                            (0, _) => 0,            // x emphasized
                            (1, u) => 1 + u,        // block: leaf of (yz)
                            _ => unreachable!(),
                        }
                    };
                    m.set(leaf, w2_index(&gen, comp, root, upper), crate::exact::rat_i(1));
                }
            }
        }
        let from_model = Subspace::kernel(&m);
        assert_eq!(&from_model, zoo_get("Dias").unwrap().relations());
    }

    #[test]
    fn classical_v_coordinate_relation_lists() {
        // As: v_i - v_(i+1) for odd i; PreLie: v_i - v_(i+1) + v_(i+2) - v_(i+3)
        // and Perm: v_i = .. = v_(i+3), for i = 1, 5, 9.
        use crate::presentations::vtable::v_to_index;
        let gen = GenSpace::regular_rep("m");
        let row = |terms: &[(usize, i64)]| -> Vec<Rat> {
            let mut v = vec![Rat::zero(); 12];
            for &(i, c) in terms {
                v[v_to_index(&gen, i)] = crate::exact::rat_i(c);
            }
            v
        };
        let as_span = Subspace::span(
            12,
            (0..6).map(|k| row(&[(2 * k + 1, 1), (2 * k + 2, -1)])),
        );
        assert_eq!(&as_span, zoo_get("As").unwrap().relations());
        let prelie_span = Subspace::span(
            12,
            [1usize, 5, 9]
                .into_iter()
                .map(|i| row(&[(i, 1), (i + 1, -1), (i + 2, 1), (i + 3, -1)])),
        );
        assert_eq!(&prelie_span, zoo_get("PreLie").unwrap().relations());
        let perm_span = Subspace::span(
            12,
            [1usize, 5, 9].into_iter().flat_map(|i| {
                (0..3).map(move |k| (i + k, i + k + 1))
            })
            .map(|(a, b)| row(&[(a, 1), (b, -1)])),
        );
        assert_eq!(&perm_span, zoo_get("Perm").unwrap().relations());
    }

    #[test]
    fn quotient_dim_tables_match_metadata() {
        for name in zoo_names() {
            let e = zoo_entry(name).unwrap();
            let dims: Vec<usize> = e
                .presentation
                .quotient_dims(4)
                .unwrap()
                .into_iter()
                .map(|r| r.quotient_dim)
                .collect();
            assert_eq!(dims, e.expected_dims, "{name}");
        }
    }

    #[test]
    fn prelie_and_perm_dims_at_arity_five() {
        let dims = |n: &str| -> Vec<usize> {
            zoo_get(n)
                .unwrap()
                .quotient_dims(5)
                .unwrap()
                .into_iter()
                .map(|r| r.quotient_dim)
                .collect()
        };
        assert_eq!(dims("PreLie"), vec![1, 2, 9, 64, 625]);
        assert_eq!(dims("Perm"), vec![1, 2, 3, 4, 5]);
        assert_eq!(dims("As"), vec![1, 2, 6, 24, 120]);
        assert_eq!(dims("AsNs"), vec![1, 1, 1, 1, 1]);
    }
}
