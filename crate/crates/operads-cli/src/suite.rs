//! The built-in reproduction suite: every classical identity and table the
//! engine is expected to reproduce, run end to end with exact arithmetic.
//! Each check returns pass/fail; the CLI prints one line per check and the
//! acceptance tests call the same functions.

use num_bigint::BigInt;
use operads::defcomplex::{
    associative_examples, bracket as conv_bracket, cosimplicial_d, cup, dendriform_example,
    differential, face_maps, hochschild::Hochschild, minus_one_bracket, mult_differential,
    multiplication, star, twisting_cochain, ConvolutionElement, DeformationContext, MultiMap,
};
use operads::exact::{rat, rat_i, Matrix, Perm, Rat};
use operads::freeop::{
    pairing_form, s3_action, w2_dim, GenSpace, Weight2Vector,
};
use operads::manin::{
    black_product, bsquare, bsquare_via_duality, canonical_bracket_check, canonical_mult_check,
    duality_check, epi_check, koszul_dual, maps, phi, white_product, wsquare,
};
use operads::presentations::{presentation_equal, symmetrize, zoo_get, zoo_names};
use operads::series::{gk_identity, gk_test_dims, pad_dims, quad_dimension, TruncatedSeries};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::time::Instant;

#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub seconds: f64,
}

fn run_check(
    name: &'static str,
    f: impl FnOnce() -> Result<String, String>,
) -> CheckResult {
    let start = Instant::now();
    let (passed, detail) = match f() {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    CheckResult {
        name,
        passed,
        detail,
        seconds: start.elapsed().as_secs_f64(),
    }
}

fn ensure(cond: bool, msg: &str) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.to_string())
    }
}

fn quotient_dim_list(p: &operads::QuadPresentation, n: usize) -> Result<Vec<usize>, String> {
    Ok(p.quotient_dims(n)
        .map_err(|e| e.to_string())?
        .into_iter()
        .map(|r| r.quotient_dim)
        .collect())
}

/// Koszul duals of the classical pairs, plus double-dual identity.
pub fn check_koszul_duals() -> CheckResult {
    run_check("koszul duals (Com, Lie, Perm, PreLie, Dend) and dual o dual = id", || {
        let e = |s: operads::Error| s.to_string();
        let pairs: Vec<(&str, &str, Matrix)> = vec![
            ("Com", "Lie", maps::one_dim()),
            ("Lie", "Com", maps::one_dim()),
            ("Perm", "PreLie", maps::dual_regular_rep()),
            ("PreLie", "Perm", maps::dual_regular_rep()),
            ("Dend", "Dias", Matrix::identity(2)),
        ];
        for (a, b, m) in pairs {
            let dual = koszul_dual(&zoo_get(a).map_err(e)?).map_err(e)?;
            ensure(
                presentation_equal(&dual, &zoo_get(b).map_err(e)?, &m).map_err(e)?,
                &format!("{a}! != {b}"),
            )?;
        }
        for name in zoo_names() {
            let p = zoo_get(name).map_err(e)?;
            let dd = koszul_dual(&koszul_dual(&p).map_err(e)?).map_err(e)?;
            ensure(
                presentation_equal(&dd, &p, &Matrix::identity(p.gen().dim())).map_err(e)?,
                &format!("{name}!! != {name}"),
            )?;
        }
        Ok("5 dual pairs + double dual on 16 zoo entries".into())
    })
}

/// The worked white and black products.
pub fn check_worked_products() -> CheckResult {
    run_check("worked products (white and black) against their zoo targets", || {
        let e = |s: operads::Error| s.to_string();
        let perm = zoo_get("Perm").map_err(e)?;
        let prelie = zoo_get("PreLie").map_err(e)?;

        let prod = white_product(&perm, &zoo_get("As").map_err(e)?).map_err(e)?;
        let dias = symmetrize(&zoo_get("Dias").map_err(e)?).map_err(e)?;
        ensure(
            presentation_equal(&prod, &dias, &maps::perm_as_to_dias()).map_err(e)?,
            "Perm o As != Dias",
        )?;

        let prod = white_product(&perm, &zoo_get("Lie").map_err(e)?).map_err(e)?;
        ensure(
            presentation_equal(&prod, &zoo_get("Leib").map_err(e)?, &maps::perm_lie_to_leib())
                .map_err(e)?,
            "Perm o Lie != Leib",
        )?;

        let prod = black_product(&prelie, &zoo_get("Com").map_err(e)?).map_err(e)?;
        ensure(
            presentation_equal(&prod, &zoo_get("Zinb").map_err(e)?, &maps::tensor_com_sign())
                .map_err(e)?,
            "PreLie . Com != Zinb",
        )?;

        let prod = black_product(&prelie, &zoo_get("As").map_err(e)?).map_err(e)?;
        let dend = symmetrize(&zoo_get("Dend").map_err(e)?).map_err(e)?;
        ensure(
            presentation_equal(&prod, &dend, &maps::prelie_as_to_dend()).map_err(e)?,
            "PreLie . As != Dend",
        )?;

        let prod = black_product(&prelie, &perm).map_err(e)?;
        ensure(
            presentation_equal(
                &prod,
                &zoo_get("PreLiePerm").map_err(e)?,
                &maps::prelie_perm_to_zoo(),
            )
            .map_err(e)?,
            "PreLie . Perm != the five-relation presentation",
        )?;

        let prod = black_product(&prelie, &zoo_get("Nil").map_err(e)?).map_err(e)?;
        ensure(
            presentation_equal(
                &prod,
                &zoo_get("PreLieNilBlack").map_err(e)?,
                &maps::prelie_nil_to_zoo(),
            )
            .map_err(e)?,
            "PreLie . Nil != its two-orbit presentation",
        )?;

        for name in ["As", "Com", "Lie", "Perm"] {
            let q = zoo_get(name).map_err(e)?;
            let id = Matrix::identity(q.gen().dim());
            let w = white_product(&zoo_get("Com").map_err(e)?, &q).map_err(e)?;
            ensure(
                presentation_equal(&w, &q, &id).map_err(e)?,
                &format!("Com o {name} != {name}"),
            )?;
            let b = black_product(&zoo_get("Lie").map_err(e)?, &q).map_err(e)?;
            ensure(
                presentation_equal(&b, &q, &id).map_err(e)?,
                &format!("Lie . {name} != {name}"),
            )?;
        }
        Ok("6 named products + 8 unit laws, exact subspace equality".into())
    })
}

/// The non-Koszul counterexample: dimension table, series and flag.
pub fn check_counterexample() -> CheckResult {
    run_check("counterexample: series inverse flags arity 10", || {
        let e = |s: operads::Error| s.to_string();
        let p = zoo_get("PreLieNilBlack").map_err(e)?;
        let dims = quotient_dim_list(&p, 5)?;
        ensure(dims == vec![1, 2, 3, 0, 0], &format!("dims {dims:?}"))?;
        let f = TruncatedSeries::from_dims(&dims).map_err(e)?;
        ensure(
            f.neg_flip().display() == "x - x^2 + 1/2x^3",
            &format!("series {}", f.neg_flip().display()),
        )?;
        let padded = pad_dims(&dims, 10).map_err(e)?;
        let report = gk_test_dims(&padded, 10).map_err(e)?;
        let expect = [
            "1", "1", "3/2", "5/2", "17/4", "7", "21/2", "99/8", "55/16", "-715/16",
        ];
        for (row, want) in report.rows.iter().zip(expect) {
            ensure(
                row.coeff == want,
                &format!("coefficient at arity {} is {}", row.arity, row.coeff),
            )?;
        }
        ensure(report.first_flag == Some(10), "flag not at arity 10")?;
        ensure(!report.consistent, "verdict should be: not Koszul")?;
        Ok("dims 1,2,3,0,0; inverse coefficients through -715/16; not Koszul".into())
    })
}

/// The quadri-algebra suite.
pub fn check_quad_suite() -> CheckResult {
    run_check("quadri-algebra suite (relations, 23, duals, n^2 table, series)", || {
        let e = |s: operads::Error| s.to_string();
        let dend = zoo_get("Dend").map_err(e)?;
        let quad = bsquare(&dend, &dend).map_err(e)?;
        ensure(quad.relation_dim() == 9, "relation dim != 9")?;
        let dims = quotient_dim_list(&quad, 3)?;
        ensure(dims == vec![1, 4, 23], &format!("Quad' dims {dims:?}"))?;
        ensure(
            duality_check(&dend, &dend).map_err(e)?,
            "(Dend # Dend)! != Dias □ Dias",
        )?;
        let dias = zoo_get("Dias").map_err(e)?;
        let dsq = wsquare(&dias, &dias).map_err(e)?;
        let dd = quotient_dim_list(&dsq, 4)?;
        ensure(dd == vec![1, 4, 9, 16], &format!("(Dias□Dias)' dims {dd:?}"))?;
        ensure(
            quad_dimension(2) == BigInt::from(8) && quad_dimension(3) == BigInt::from(138),
            "closed formula values",
        )?;
        let mut fact: u64 = 1;
        let mut dual_dims = Vec::new();
        let mut quad_dims = Vec::new();
        for n in 1..=6u64 {
            fact *= n;
            dual_dims.push((n * n * fact) as usize);
            let q: usize = quad_dimension(n as usize).try_into().map_err(|_| "overflow")?;
            quad_dims.push(q);
        }
        ensure(
            gk_identity(&dual_dims, &quad_dims, 6).map_err(e)?
                && gk_identity(&quad_dims, &dual_dims, 6).map_err(e)?,
            "series identity to order 6",
        )?;
        Ok("9 relations, dim 23 at arity 3, dual = Dias□Dias, n^2 per-arity dims, series identity to order 6".into())
    })
}

/// Relation-dimension triple and the canonical surjection.
pub fn check_relation_triple() -> CheckResult {
    run_check("relation triple 15 (black) inside 17 (white) for (Dend, Dias)", || {
        let e = |s: operads::Error| s.to_string();
        let dend = zoo_get("Dend").map_err(e)?;
        let dias = zoo_get("Dias").map_err(e)?;
        let black = bsquare(&dend, &dias).map_err(e)?;
        let white = wsquare(&dend, &dias).map_err(e)?;
        ensure(black.relation_dim() == 15, "black relation dim != 15")?;
        ensure(white.relation_dim() == 17, "white relation dim != 17")?;
        ensure(
            white.relations().contains_space(black.relations()),
            "black relations not inside white relations",
        )?;
        ensure(epi_check(&dend, &dias).map_err(e)?, "epi check failed")?;
        Ok("dims 15 < 17 with strict inclusion".into())
    })
}

fn catalan_by_tree_enumeration(leaves: usize) -> usize {
    // brute force: enumerate all planar binary trees with the given number
    // of leaves and count them
    fn count(n: usize) -> usize {
        if n == 1 {
            return 1;
        }
        (1..n).map(|k| count(k) * count(n - k)).sum()
    }
    count(leaves)
}

/// Dimension tables at arity up to five.
pub fn check_dimension_tables() -> CheckResult {
    run_check("dimension tables: Perm, PreLie, Dias', Dend' to arity 5", || {
        let e = |s: operads::Error| s.to_string();
        let d = quotient_dim_list(&zoo_get("Perm").map_err(e)?, 5)?;
        ensure(d == vec![1, 2, 3, 4, 5], &format!("Perm dims {d:?}"))?;
        let d = quotient_dim_list(&zoo_get("PreLie").map_err(e)?, 5)?;
        ensure(d == vec![1, 2, 9, 64, 625], &format!("PreLie dims {d:?}"))?;
        let d = quotient_dim_list(&zoo_get("Dias").map_err(e)?, 5)?;
        ensure(d == vec![1, 2, 3, 4, 5], &format!("Dias' dims {d:?}"))?;
        let d = quotient_dim_list(&zoo_get("Dend").map_err(e)?, 5)?;
        let catalans: Vec<usize> = (1..=5).map(|n| catalan_by_tree_enumeration(n + 1)).collect();
        ensure(
            d == catalans,
            &format!("Dend' dims {d:?} vs tree-enumeration oracle {catalans:?}"),
        )?;
        ensure(d == vec![1, 2, 5, 14, 42], "catalan values")?;
        Ok("n, n^(n-1), n, Catalan(n) all confirmed to arity 5".into())
    })
}

/// Bilinear form equivariance, injectivity of the canonical map, and the
/// two black-square routes.
pub fn check_bilinear_suite() -> CheckResult {
    run_check("bilinear form suite: equivariance, injectivity, two black routes", || {
        let e = |s: operads::Error| s.to_string();
        let mut rng = ChaCha8Rng::seed_from_u64(2024);
        let spaces = [
            GenSpace::trivial_1d("a"),
            GenSpace::sign_1d("b"),
            GenSpace::regular_rep("m"),
        ];
        let all_s3 = Perm::all(3);
        let mut pairs_done = 0;
        'outer: for _ in 0..40 {
            for g in &spaces {
                let dim = w2_dim(g);
                let rand_vec = |rng: &mut ChaCha8Rng| -> Vec<Rat> {
                    (0..dim).map(|_| rat(rng.gen_range(-5..=5), rng.gen_range(1..=3))).collect()
                };
                let v = Weight2Vector::new(g.clone(), rand_vec(&mut rng)).map_err(e)?;
                let w = Weight2Vector::new(g.dual(), rand_vec(&mut rng)).map_err(e)?;
                let base = operads::freeop::weight2_pairing(&v, &w).map_err(e)?;
                for s in &all_s3 {
                    let lhs = operads::freeop::weight2_pairing(
                        &s3_action(&v, s).map_err(e)?,
                        &s3_action(&w, s).map_err(e)?,
                    )
                    .map_err(e)?;
                    ensure(
                        lhs == base.clone() * rat_i(s.sign() as i64),
                        "pairing equivariance",
                    )?;
                }
                pairs_done += 1;
                if pairs_done >= 100 {
                    break 'outer;
                }
            }
        }
        ensure(pairs_done >= 100, "not enough random pairs")?;

        for (v, w) in [
            (GenSpace::trivial_1d("a"), GenSpace::sign_1d("b")),
            (GenSpace::regular_rep("a"), GenSpace::regular_rep("b")),
            (GenSpace::regular(vec!["x".into(), "y".into()]), GenSpace::regular(vec!["u".into(), "v".into()])),
        ] {
            let (tensor, m) = phi(&v, &w).map_err(e)?;
            ensure(m.rank() == w2_dim(&tensor), "phi injectivity")?;
        }

        let regular = ["AsNs", "Dend", "Dias", "Quad"];
        for a in regular {
            for b in regular {
                let p = zoo_get(a).map_err(e)?;
                let q = zoo_get(b).map_err(e)?;
                let explicit = bsquare(&p, &q).map_err(e)?;
                let dual_route = bsquare_via_duality(&p, &q).map_err(e)?;
                ensure(
                    explicit.relations() == dual_route.relations(),
                    &format!("black square routes differ on ({a}, {b})"),
                )?;
            }
        }
        // the signed pairing itself is non-degenerate by construction
        ensure(
            pairing_form(operads::Kind::Regular, 2).rank() == 8,
            "regular form degenerate",
        )?;
        Ok("100 sign-equivariant pairs, injective canonical maps, 16 route agreements".into())
    })
}

/// Canonical multiplication and bracket checks.
pub fn check_canonical_structures() -> CheckResult {
    run_check("canonical multiplication (As, Dend, Dias) and bracket (As, Com, Leib)", || {
        let e = |s: operads::Error| s.to_string();
        for name in ["AsNs", "Dend", "Dias"] {
            ensure(
                canonical_mult_check(&zoo_get(name).map_err(e)?).map_err(e)?,
                &format!("multiplication fails for {name}"),
            )?;
        }
        for name in ["As", "Com", "Leib"] {
            ensure(
                canonical_bracket_check(&zoo_get(name).map_err(e)?).map_err(e)?,
                &format!("bracket fails for {name}"),
            )?;
        }
        Ok("identity tensors are associative / satisfy Jacobi modulo relations".into())
    })
}

fn random_multimap(r: &mut ChaCha8Rng, dim: usize, arity: usize) -> MultiMap {
    let mut mat = Matrix::zeros(dim, dim.pow(arity as u32));
    for row in 0..dim {
        for col in 0..dim.pow(arity as u32) {
            if r.gen_range(0..3) == 0 {
                mat.set(row, col, rat(r.gen_range(-4..=4), r.gen_range(1..=3)));
            }
        }
    }
    MultiMap::from_matrix(dim, arity, mat).unwrap()
}

fn random_homogeneous(r: &mut ChaCha8Rng, ctx: &DeformationContext, arity: usize) -> ConvolutionElement {
    let m = ctx.algebra().dim();
    let values = (0..ctx.dual().dim(arity))
        .map(|_| random_multimap(r, m, arity))
        .collect();
    ConvolutionElement::homogeneous(ctx, arity, values).unwrap()
}

/// Deformation complex: oracle equality for the associative presentation
/// and the identity suite for both presentations.
pub fn check_deformation_complex() -> CheckResult {
    run_check("deformation complex: oracle equality and 50-pair identity suite", || {
        let e = |s: operads::Error| s.to_string();
        let as_pres = zoo_get("AsNs").map_err(e)?;
        // a missing component is the zero map
        let take = |x: &ConvolutionElement, arity: usize, m: usize| -> MultiMap {
            x.component(arity)
                .map(|v| v[0].clone())
                .unwrap_or_else(|| MultiMap::zero(m, arity))
        };
        // oracle equality on every sample algebra of dim <= 3
        for (name, alg) in associative_examples(&as_pres) {
            let oracle = Hochschild::new(alg.ops()[0].clone()).map_err(e)?;
            let ctx = DeformationContext::new(alg, 8).map_err(e)?;
            let mut r = ChaCha8Rng::seed_from_u64(97);
            let m = ctx.algebra().dim();
            for p in 1..=4usize {
                let f = random_multimap(&mut r, m, p);
                let fe = ConvolutionElement::homogeneous(&ctx, p, vec![f.clone()]).map_err(e)?;
                let ours = differential(&ctx, &fe).map_err(e)?;
                ensure(
                    take(&ours, p + 1, m) == oracle.delta(&f).map_err(e)?,
                    &format!("differential differs from the oracle on {name}"),
                )?;
                let faces = face_maps(&ctx, p, std::slice::from_ref(&f)).map_err(e)?;
                let oracle_faces = oracle.faces(&f).map_err(e)?;
                ensure(
                    faces.iter().map(|v| v[0].clone()).collect::<Vec<_>>() == oracle_faces,
                    &format!("faces differ from the oracle on {name}"),
                )?;
                for q in 1..=4usize {
                    let g = random_multimap(&mut r, m, q);
                    let ge = ConvolutionElement::homogeneous(&ctx, q, vec![g.clone()]).map_err(e)?;
                    let s = star(&ctx, &fe, &ge).map_err(e)?;
                    ensure(
                        take(&s, p + q - 1, m) == oracle.circle(&f, &g).map_err(e)?,
                        &format!("star differs from the circle product on {name}"),
                    )?;
                    let b = conv_bracket(&ctx, &fe, &ge).map_err(e)?;
                    ensure(
                        take(&b, p + q - 1, m) == oracle.bracket(&f, &g).map_err(e)?,
                        &format!("bracket differs on {name}"),
                    )?;
                    if p + q <= ctx.n_max() {
                        let c = cup(&ctx, &fe, &ge).map_err(e)?;
                        ensure(
                            take(&c, p + q, m) == oracle.cup(&f, &g).map_err(e)?,
                            &format!("cup differs on {name}"),
                        )?;
                    }
                }
            }
        }

        // identity suite on 50 random pairs for As and Dend
        let contexts = vec![
            (
                "As",
                DeformationContext::new(associative_examples(&as_pres).remove(2).1, 6)
                    .map_err(e)?,
            ),
            (
                "Dend",
                DeformationContext::new(
                    dendriform_example(&zoo_get("Dend").map_err(e)?).map_err(e)?,
                    6,
                )
                .map_err(e)?,
            ),
        ];
        for (name, ctx) in contexts {
            let alpha = twisting_cochain(&ctx);
            ensure(
                star(&ctx, &alpha, &alpha).map_err(e)?.is_zero(),
                &format!("Maurer-Cartan fails for {name}"),
            )?;
            let mut r = ChaCha8Rng::seed_from_u64(1234);
            for k in 0..50usize {
                let p = 1 + k % 4;
                let q = 1 + (k / 4) % 4;
                let f = random_homogeneous(&mut r, &ctx, p);
                let g = random_homogeneous(&mut r, &ctx, q);
                // square of the differential
                ensure(
                    differential(&ctx, &differential(&ctx, &f).map_err(e)?)
                        .map_err(e)?
                        .is_zero(),
                    &format!("differential square fails for {name}"),
                )?;
                // right symmetry of the associator in (g, h = g)
                let s = 2 + (p + q) % 3;
                let h = random_homogeneous(&mut r, &ctx, s);
                let assoc = |a: &ConvolutionElement, b: &ConvolutionElement, c: &ConvolutionElement| {
                    star(&ctx, &star(&ctx, a, b).unwrap(), c)
                        .unwrap()
                        .add(&star(&ctx, a, &star(&ctx, b, c).unwrap()).unwrap().scale(&rat_i(-1)))
                        .unwrap()
                };
                let sign = if (q - 1) * (s - 1) % 2 == 1 { -1 } else { 1 };
                ensure(
                    assoc(&f, &g, &h)
                        .add(&assoc(&f, &h, &g).scale(&rat_i(-sign)))
                        .map_err(e)?
                        .is_zero(),
                    &format!("preLie right symmetry fails for {name}"),
                )?;
                // boundary formula for the shift bracket
                if p + q <= ctx.n_max() {
                    let lhs = minus_one_bracket(&ctx, &f, &g).map_err(e)?;
                    let sg = if (q - 1) % 2 == 1 { -1 } else { 1 };
                    let rhs = star(&ctx, &differential(&ctx, &f).map_err(e)?, &g)
                        .map_err(e)?
                        .add(
                            &star(&ctx, &f, &differential(&ctx, &g).map_err(e)?)
                                .map_err(e)?
                                .scale(&rat_i(sg)),
                        )
                        .map_err(e)?
                        .add(
                            &differential(&ctx, &star(&ctx, &f, &g).map_err(e)?)
                                .map_err(e)?
                                .scale(&rat_i(-sg)),
                        )
                        .map_err(e)?;
                    ensure(lhs == rhs, &format!("boundary formula fails for {name}"))?;
                }
                // the two differentials agree up to the degree sign
                let sp = if (p - 1) % 2 == 1 { -1 } else { 1 };
                ensure(
                    differential(&ctx, &f).map_err(e)?
                        == mult_differential(&ctx, &f).map_err(e)?.scale(&rat_i(sp)),
                    &format!("differential comparison fails for {name}"),
                )?;
                ensure(
                    cosimplicial_d(&ctx, &f).map_err(e)? == differential(&ctx, &f).map_err(e)?,
                    &format!("face sum differs from the differential for {name}"),
                )?;
            }
            // the multiplication is a cocycle
            ensure(
                differential(&ctx, &multiplication(&ctx)).map_err(e)?.is_zero(),
                &format!("multiplication not closed for {name}"),
            )?;
        }
        Ok("oracle equality on 6 algebras; 50-pair identity suite for As and Dend".into())
    })
}

/// Runs every check in order.
pub fn run_all() -> Vec<CheckResult> {
    vec![
        check_koszul_duals(),
        check_worked_products(),
        check_counterexample(),
        check_quad_suite(),
        check_relation_triple(),
        check_dimension_tables(),
        check_bilinear_suite(),
        check_canonical_structures(),
        check_deformation_complex(),
    ]
}
