//! The canonical weight-2 map between free operads and the four Manin
//! products built on it, together with Koszul duals and the structural
//! checks that tie them together.
//!
//! White product (symmetric): `P o Q = F(V(x)W)/(Phi^-1(R(x)F(W) + F(V)(x)S))`.
//! Black product (symmetric): `P . Q = F(V(x)W(x)sgn)/(Psi(R(x)S))`, computed
//! here through the orthogonality `Psi(R(x)S) = Phi^-1(R^perp (x) F(W^) +
//! F(V^) (x) S^perp)^perp`, which is the sign-unambiguous route.
//! The square products are the regular (non-symmetric) analogues; the black
//! square is computed both through duality and through the explicit
//! split-composition formula, and the two routes are cross-checked in the
//! test suite.

use crate::error::{Error, Result};
use crate::exact::{rat_i, Matrix, Rat, Subspace};
use crate::freeop::{
    comp_count, pairing_form, w2_dim, w2_index, GenSpace, Kind,
};
use crate::presentations::{black_square_rows, QuadPresentation};
use num_traits::Zero;

/// The injective morphism `Phi : F(V(x)W)(3) -> F(V)(3) (x) F(W)(3)`, the
/// componentwise projection: a composition of tensor-labelled vertices maps
/// to the same composition of the V-labels tensored with the same
/// composition of the W-labels. Returns the tensor generating space and the
/// matrix (columns = weight-2 coordinates of F(V(x)W)(3), rows indexed by
/// pairs (i, j) -> i * w2dim(W) + j).
pub fn phi(v: &GenSpace, w: &GenSpace) -> Result<(GenSpace, Matrix)> {
    let tensor = v.tensor(w, false)?;
    let m = phi_onto(v, w, &tensor)?;
    Ok((tensor, m))
}

fn phi_onto(v: &GenSpace, w: &GenSpace, tensor: &GenSpace) -> Result<Matrix> {
    let (dv, dw) = (v.dim(), w.dim());
    let ww = w2_dim(w);
    let mut m = Matrix::zeros(w2_dim(v) * ww, w2_dim(tensor));
    for comp in 0..comp_count(tensor.kind()) {
        for a in 0..dv {
            for c in 0..dw {
                for b in 0..dv {
                    for d in 0..dw {
                        let col = w2_index(tensor, comp, a * dw + c, b * dw + d);
                        let row = w2_index(v, comp, a, b) * ww + w2_index(w, comp, c, d);
                        m.set(row, col, rat_i(1));
                    }
                }
            }
        }
    }
    Ok(m)
}

/// Koszul dual presentation `P! = F(V^)/(R^perp)` under the signed
/// weight-2 pairing.
pub fn koszul_dual(p: &QuadPresentation) -> Result<QuadPresentation> {
    let dual_gen = p.gen().dual();
    let form = pairing_form(p.kind(), p.gen().dim());
    let rel = p.relations().orth_complement(&form)?;
    QuadPresentation::new(dual_name(p.name()), dual_gen, rel)
}

fn dual_name(name: &str) -> String {
    match name.strip_suffix('!') {
        Some(base) => base.to_string(),
        None => format!("{name}!"),
    }
}

/// `R (x) F(W)(3) + F(V)(3) (x) S` inside the tensor of the two weight-2
/// spaces, with pair coordinates as in [`phi`].
fn two_sided_span(p: &QuadPresentation, q: &QuadPresentation) -> Subspace {
    let (wv, ww) = (w2_dim(p.gen()), w2_dim(q.gen()));
    let mut u = Subspace::zero(wv * ww);
    for r in p.relations().basis_rows() {
        for k in 0..ww {
            let mut row = vec![Rat::zero(); wv * ww];
            for (i, c) in r.iter().enumerate() {
                if !c.is_zero() {
                    row[i * ww + k] = c.clone();
                }
            }
            u.insert(row);
        }
    }
    for s in q.relations().basis_rows() {
        for k in 0..wv {
            let mut row = vec![Rat::zero(); wv * ww];
            for (j, c) in s.iter().enumerate() {
                if !c.is_zero() {
                    row[k * ww + j] = c.clone();
                }
            }
            u.insert(row);
        }
    }
    u
}

fn require_kind(p: &QuadPresentation, kind: Kind) -> Result<()> {
    if p.kind() != kind {
        return Err(Error::KindMismatch {
            expected: kind.label(),
            got: p.kind().label(),
        });
    }
    Ok(())
}

fn white_like(
    p: &QuadPresentation,
    q: &QuadPresentation,
    tensor: &GenSpace,
    name: String,
) -> Result<QuadPresentation> {
    let phi_m = phi_onto(p.gen(), q.gen(), tensor)?;
    let u = two_sided_span(p, q);
    let rel = u.preimage_under(&phi_m)?;
    QuadPresentation::new(name, tensor.clone(), rel)
}

/// White product of symmetric presentations.
pub fn white_product(p: &QuadPresentation, q: &QuadPresentation) -> Result<QuadPresentation> {
    require_kind(p, Kind::Symmetric)?;
    require_kind(q, Kind::Symmetric)?;
    let tensor = p.gen().tensor(q.gen(), false)?;
    white_like(p, q, &tensor, format!("{}∘{}", p.name(), q.name()))
}

/// Black product of symmetric presentations, on generators
/// `V (x) W (x) sgn`. The relation space is the orthogonal of the white
/// relations of the duals, under the identification
/// `(e_i (x) f_j (x) 1)^ = e_i^ (x) f_j^` of the dual generating spaces.
pub fn black_product(p: &QuadPresentation, q: &QuadPresentation) -> Result<QuadPresentation> {
    require_kind(p, Kind::Symmetric)?;
    require_kind(q, Kind::Symmetric)?;
    let pd = koszul_dual(p)?;
    let qd = koszul_dual(q)?;
    let dual_tensor = pd.gen().tensor(qd.gen(), false)?;
    let white_dual = white_like(&pd, &qd, &dual_tensor, String::new())?;
    let tensor = p.gen().tensor(q.gen(), true)?;
    let form = pairing_form(Kind::Symmetric, tensor.dim());
    let rel = white_dual.relations().orth_complement(&form)?;
    QuadPresentation::new(format!("{}•{}", p.name(), q.name()), tensor, rel)
}

/// White square product of regular presentations.
pub fn wsquare(p: &QuadPresentation, q: &QuadPresentation) -> Result<QuadPresentation> {
    require_kind(p, Kind::Regular)?;
    require_kind(q, Kind::Regular)?;
    let tensor = p.gen().tensor(q.gen(), false)?;
    white_like(p, q, &tensor, format!("{}□{}", p.name(), q.name()))
}

/// Black square product of regular presentations, through the explicit
/// formula: split each relation by composition pattern, r = r1 + r2, and
/// map `r (x) s` to `Phi^-1(r1 (x) s1) - Phi^-1(r2 (x) s2)`.
pub fn bsquare(p: &QuadPresentation, q: &QuadPresentation) -> Result<QuadPresentation> {
    require_kind(p, Kind::Regular)?;
    require_kind(q, Kind::Regular)?;
    let tensor = p.gen().tensor(q.gen(), false)?;
    let rows = black_square_rows(
        p.relations(),
        p.gen().dim(),
        q.relations(),
        q.gen().dim(),
    );
    let rel = Subspace::span(w2_dim(&tensor), rows);
    QuadPresentation::new(format!("{}■{}", p.name(), q.name()), tensor, rel)
}

/// Black square product computed through Koszul duality:
/// the orthogonal of the white square relations of the duals under the
/// signed non-symmetric pairing. Must agree with [`bsquare`].
pub fn bsquare_via_duality(
    p: &QuadPresentation,
    q: &QuadPresentation,
) -> Result<QuadPresentation> {
    require_kind(p, Kind::Regular)?;
    require_kind(q, Kind::Regular)?;
    let pd = koszul_dual(p)?;
    let qd = koszul_dual(q)?;
    let white_dual = wsquare(&pd, &qd)?;
    let tensor = p.gen().tensor(q.gen(), false)?;
    let form = pairing_form(Kind::Regular, tensor.dim());
    let rel = white_dual.relations().orth_complement(&form)?;
    QuadPresentation::new(format!("{}■{}", p.name(), q.name()), tensor, rel)
}

/// Checks `(P.Q)! = P! o Q!` (symmetric) or the square analogue (regular)
/// as exact presentation equalities under the canonical identification of
/// the dual tensor generating spaces.
pub fn duality_check(p: &QuadPresentation, q: &QuadPresentation) -> Result<bool> {
    if p.kind() != q.kind() {
        return Err(Error::KindMismatch {
            expected: p.kind().label(),
            got: q.kind().label(),
        });
    }
    let (lhs, rhs) = match p.kind() {
        Kind::Symmetric => (
            koszul_dual(&black_product(p, q)?)?,
            white_product(&koszul_dual(p)?, &koszul_dual(q)?)?,
        ),
        Kind::Regular => (
            koszul_dual(&bsquare(p, q)?)?,
            wsquare(&koszul_dual(p)?, &koszul_dual(q)?)?,
        ),
    };
    crate::presentations::presentation_equal(&lhs, &rhs, &Matrix::identity(lhs.gen().dim()))
}

/// Checks the canonical surjection from the black square onto the white
/// square of regular presentations: true iff the black-square relations
/// are contained in the white-square relations.
pub fn epi_check(p: &QuadPresentation, q: &QuadPresentation) -> Result<bool> {
    let black = bsquare(p, q)?;
    let white = wsquare(p, q)?;
    Ok(white.relations().contains_space(black.relations()))
}

/// The identity tensor `sum_i e_i^ (x) e_i` in the generators of
/// `P! (x) P`, as a coordinate vector over the tensor basis.
fn identity_tensor(d: usize) -> Vec<Rat> {
    let mut m = vec![Rat::zero(); d * d];
    for i in 0..d {
        m[i * d + i] = rat_i(1);
    }
    m
}

/// Expands the composition `u o_comp w` of two generator-space vectors in
/// weight-2 coordinates (root labelled by `u`, upper vertex by `w`).
fn compose_vectors(gen: &GenSpace, comp: usize, u: &[Rat], w: &[Rat]) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); w2_dim(gen)];
    for (a, ca) in u.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for (b, cb) in w.iter().enumerate() {
            if !cb.is_zero() {
                out[w2_index(gen, comp, a, b)] += ca * cb;
            }
        }
    }
    out
}

/// Checks that the canonical element `m = sum_i e_i^ (x) e_i` of the
/// generators of `P! □ P` is associative modulo the white-square
/// relations, i.e. that `m o_1 m - m o_2 m` lies in the relation subspace.
/// This realizes the canonical multiplicative structure carried by the
/// deformation complex of algebras over a regular presentation.
pub fn canonical_mult_check(p: &QuadPresentation) -> Result<bool> {
    require_kind(p, Kind::Regular)?;
    let pd = koszul_dual(p)?;
    let square = wsquare(&pd, p)?;
    let m = identity_tensor(p.gen().dim());
    let left = compose_vectors(square.gen(), 0, &m, &m);
    let right = compose_vectors(square.gen(), 1, &m, &m);
    let diff: Vec<Rat> = left.iter().zip(&right).map(|(a, b)| a - b).collect();
    Ok(square.relations().contains(&diff))
}

/// Checks the canonical Lie bracket in `P! o P` for a symmetric
/// presentation: the identity tensor `beta = sum_i e_i^ (x) e_i` must be
/// antisymmetric (`beta^(12) = -beta`) and its Jacobi expansion
/// `beta o_I beta + beta o_II beta + beta o_III beta` must lie in the
/// white-product relations.
pub fn canonical_bracket_check(p: &QuadPresentation) -> Result<bool> {
    require_kind(p, Kind::Symmetric)?;
    let pd = koszul_dual(p)?;
    let circle = white_product(&pd, p)?;
    let beta = identity_tensor(p.gen().dim());
    let action = circle
        .gen()
        .action12()
        .expect("symmetric tensor space has an action");
    let acted = action.apply(&beta)?;
    let minus: Vec<Rat> = beta.iter().map(|x| -x.clone()).collect();
    if acted != minus {
        return Ok(false);
    }
    let mut jacobi = vec![Rat::zero(); w2_dim(circle.gen())];
    for comp in 0..3 {
        for (i, c) in compose_vectors(circle.gen(), comp, &beta, &beta)
            .into_iter()
            .enumerate()
        {
            jacobi[i] += c;
        }
    }
    Ok(circle.relations().contains(&jacobi))
}

/// Frozen generator maps realizing the classical identifications, shipped
/// as explicit matrices. Columns are coordinates of the constructed
/// product/dual generating space, rows coordinates of the zoo target.
pub mod maps {
    use crate::exact::Matrix;

    /// `Com! = Lie` and `Lie! = Com`: the one-dimensional identity.
    pub fn one_dim() -> Matrix {
        Matrix::identity(1)
    }

    /// `Perm! = PreLie` (and back): `m^ -> m`, `m'^ -> -m'`.
    pub fn dual_regular_rep() -> Matrix {
        Matrix::from_i64(&[&[1, 0], &[0, -1]])
    }

    /// Identification of `V (x) Com (x) sgn` with a two-dimensional `V`:
    /// `m (x) n (x) 1 -> g`, `m' (x) n (x) 1 -> -g'`.
    pub fn tensor_com_sign() -> Matrix {
        Matrix::from_i64(&[&[1, 0], &[0, -1]])
    }

    /// `Perm o Lie = Leib`: emphasized-argument times bracket.
    pub fn perm_lie_to_leib() -> Matrix {
        Matrix::from_i64(&[&[1, 0], &[0, -1]])
    }

    /// `Perm o As = Sym(Dias)` on the tensor basis (e (x) m, e (x) m',
    /// e' (x) m, e' (x) m'): emphasizing the first argument of the product
    /// gives -|, emphasizing the second gives |-, and transposing the
    /// product transposes the operation: `e (x) m -> -|`, `e (x) m' -> |-'`,
    /// `e' (x) m -> |-`, `e' (x) m' -> -|'`.
    pub fn perm_as_to_dias() -> Matrix {
        Matrix::from_i64(&[
            &[1, 0, 0, 0],
            &[0, 0, 0, 1],
            &[0, 0, 1, 0],
            &[0, 1, 0, 0],
        ])
    }

    /// `PreLie . Nil = PreLieNilBlack`: the Nil generator already carries
    /// the sign action, so the black product's sign twist cancels and the
    /// identification is the identity.
    pub fn prelie_nil_to_zoo() -> Matrix {
        Matrix::identity(2)
    }

    /// `PreLie . As = Sym(Dend)` with the sign pattern of the black
    /// product: `m (x) n (x) 1 -> ≺`, `m' (x) n (x) 1 -> -≻`,
    /// `m (x) n' (x) 1 -> ≻'`, `m' (x) n' (x) 1 -> -≺'`.
    pub fn prelie_as_to_dend() -> Matrix {
        Matrix::from_i64(&[
            &[1, 0, 0, 0],
            &[0, 0, 0, -1],
            &[0, 0, -1, 0],
            &[0, 1, 0, 0],
        ])
    }

    /// `PreLie . Perm = PreLiePerm` with the same sign pattern.
    pub fn prelie_perm_to_zoo() -> Matrix {
        Matrix::from_i64(&[
            &[1, 0, 0, 0],
            &[0, 0, 0, -1],
            &[0, 0, -1, 0],
            &[0, 1, 0, 0],
        ])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentations::{presentation_equal, symmetrize, zoo_get};

    #[test]
    fn phi_is_injective() {
        for (v, w) in [
            (GenSpace::trivial_1d("a"), GenSpace::trivial_1d("b")),
            (GenSpace::trivial_1d("a"), GenSpace::sign_1d("b")),
            (GenSpace::regular_rep("a"), GenSpace::regular_rep("b")),
        ] {
            let (tensor, m) = phi(&v, &w).unwrap();
            assert_eq!(m.rank(), w2_dim(&tensor), "phi not injective");
        }
        // regular case: rank 2 d^2 into 4 d^2
        let v = GenSpace::regular(vec!["a".into(), "b".into()]);
        let w = GenSpace::regular(vec!["c".into(), "d".into()]);
        let (tensor, m) = phi(&v, &w).unwrap();
        assert_eq!(w2_dim(&tensor), 32);
        assert_eq!(m.rank(), 32);
        assert_eq!(m.rows(), 64);
    }

    #[test]
    fn koszul_dual_of_com_is_lie() {
        let com = zoo_get("Com").unwrap();
        let lie = zoo_get("Lie").unwrap();
        let dual = koszul_dual(&com).unwrap();
        assert!(presentation_equal(&dual, &lie, &maps::one_dim()).unwrap());
        let back = koszul_dual(&dual).unwrap();
        assert!(presentation_equal(&back, &com, &maps::one_dim()).unwrap());
    }

    #[test]
    fn koszul_dual_of_perm_is_prelie() {
        let perm = zoo_get("Perm").unwrap();
        let prelie = zoo_get("PreLie").unwrap();
        let dual = koszul_dual(&perm).unwrap();
        assert!(presentation_equal(&dual, &prelie, &maps::dual_regular_rep()).unwrap());
        let dual2 = koszul_dual(&prelie).unwrap();
        assert!(presentation_equal(&dual2, &perm, &maps::dual_regular_rep()).unwrap());
    }

    #[test]
    fn koszul_dual_of_dend_is_dias() {
        let dual = koszul_dual(&zoo_get("Dend").unwrap()).unwrap();
        let dias = zoo_get("Dias").unwrap();
        assert!(presentation_equal(&dual, &dias, &Matrix::identity(2)).unwrap());
    }

    #[test]
    fn double_dual_is_identity_on_the_zoo() {
        for name in crate::presentations::zoo_names() {
            let p = zoo_get(name).unwrap();
            let dd = koszul_dual(&koszul_dual(&p).unwrap()).unwrap();
            let id = Matrix::identity(p.gen().dim());
            assert!(presentation_equal(&dd, &p, &id).unwrap(), "{name}");
        }
    }

    #[test]
    fn white_product_perm_as_is_dias() {
        let prod = white_product(&zoo_get("Perm").unwrap(), &zoo_get("As").unwrap()).unwrap();
        let dias = symmetrize(&zoo_get("Dias").unwrap()).unwrap();
        assert!(presentation_equal(&prod, &dias, &maps::perm_as_to_dias()).unwrap());
    }

    #[test]
    fn white_product_perm_lie_is_leib() {
        let prod = white_product(&zoo_get("Perm").unwrap(), &zoo_get("Lie").unwrap()).unwrap();
        let leib = zoo_get("Leib").unwrap();
        assert!(presentation_equal(&prod, &leib, &maps::perm_lie_to_leib()).unwrap());
    }

    #[test]
    fn black_product_prelie_com_is_zinb() {
        let prod = black_product(&zoo_get("PreLie").unwrap(), &zoo_get("Com").unwrap()).unwrap();
        let zinb = zoo_get("Zinb").unwrap();
        assert!(presentation_equal(&prod, &zinb, &maps::tensor_com_sign()).unwrap());
    }

    #[test]
    fn black_product_prelie_as_is_dend() {
        let prod = black_product(&zoo_get("PreLie").unwrap(), &zoo_get("As").unwrap()).unwrap();
        let dend = symmetrize(&zoo_get("Dend").unwrap()).unwrap();
        assert!(presentation_equal(&prod, &dend, &maps::prelie_as_to_dend()).unwrap());
    }

    #[test]
    fn black_product_prelie_perm_is_the_five_relation_operad() {
        let prod = black_product(&zoo_get("PreLie").unwrap(), &zoo_get("Perm").unwrap()).unwrap();
        let target = zoo_get("PreLiePerm").unwrap();
        assert!(presentation_equal(&prod, &target, &maps::prelie_perm_to_zoo()).unwrap());
    }

    #[test]
    fn black_product_prelie_nil_is_the_counterexample() {
        let prod = black_product(&zoo_get("PreLie").unwrap(), &zoo_get("Nil").unwrap()).unwrap();
        let target = zoo_get("PreLieNilBlack").unwrap();
        assert!(presentation_equal(&prod, &target, &maps::prelie_nil_to_zoo()).unwrap());
    }

    #[test]
    fn com_is_neutral_for_white() {
        for name in ["As", "Com", "Lie", "Perm"] {
            let q = zoo_get(name).unwrap();
            let prod = white_product(&zoo_get("Com").unwrap(), &q).unwrap();
            let id = Matrix::identity(q.gen().dim());
            assert!(presentation_equal(&prod, &q, &id).unwrap(), "Com o {name}");
        }
    }

    #[test]
    fn lie_is_neutral_for_black() {
        for name in ["As", "Com", "Lie", "Perm"] {
            let q = zoo_get(name).unwrap();
            let prod = black_product(&zoo_get("Lie").unwrap(), &q).unwrap();
            let id = Matrix::identity(q.gen().dim());
            assert!(presentation_equal(&prod, &q, &id).unwrap(), "Lie . {name}");
        }
    }

    #[test]
    fn as_is_neutral_for_white_square() {
        for name in ["AsNs", "Dend", "Dias"] {
            let q = zoo_get(name).unwrap();
            let prod = wsquare(&zoo_get("AsNs").unwrap(), &q).unwrap();
            let id = Matrix::identity(q.gen().dim());
            assert!(presentation_equal(&prod, &q, &id).unwrap(), "As □ {name}");
        }
    }

    #[test]
    fn quad_suite() {
        let dend = zoo_get("Dend").unwrap();
        let quad = bsquare(&dend, &dend).unwrap();
        assert_eq!(quad.relation_dim(), 9);
        let dims: Vec<usize> = quad
            .quotient_dims(3)
            .unwrap()
            .into_iter()
            .map(|r| r.quotient_dim)
            .collect();
        assert_eq!(dims, vec![1, 4, 23]);
        // matches the zoo construction exactly
        assert_eq!(quad.relations(), zoo_get("Quad").unwrap().relations());
        // (Dend # Dend)! = Dias □ Dias
        assert!(duality_check(&dend, &dend).unwrap());
        let dias = zoo_get("Dias").unwrap();
        let dual_quad = koszul_dual(&quad).unwrap();
        let dsq = wsquare(&dias, &dias).unwrap();
        assert!(presentation_equal(&dual_quad, &dsq, &Matrix::identity(4)).unwrap());
        // dim (Dias □ Dias)'(n) = n^2
        let dims: Vec<usize> = dsq
            .quotient_dims(4)
            .unwrap()
            .into_iter()
            .map(|r| r.quotient_dim)
            .collect();
        assert_eq!(dims, vec![1, 4, 9, 16]);
    }

    #[test]
    fn relation_dimension_triple_for_dend_dias() {
        let dend = zoo_get("Dend").unwrap();
        let dias = zoo_get("Dias").unwrap();
        let black = bsquare(&dend, &dias).unwrap();
        let white = wsquare(&dend, &dias).unwrap();
        assert_eq!(black.relation_dim(), 15);
        assert_eq!(white.relation_dim(), 17);
        assert!(epi_check(&dend, &dias).unwrap());
        assert!(white.relations().contains_space(black.relations()));
        assert!(!black.relations().contains_space(white.relations()));
    }

    #[test]
    fn epi_check_holds_on_regular_pairs() {
        for (a, b) in [("Dend", "Dend"), ("AsNs", "AsNs"), ("Dias", "Dend")] {
            assert!(
                epi_check(&zoo_get(a).unwrap(), &zoo_get(b).unwrap()).unwrap(),
                "{a} # {b} ->> {a} □ {b}"
            );
        }
    }

    #[test]
    fn black_square_routes_agree() {
        let names = ["AsNs", "Dend", "Dias"];
        for a in names {
            for b in names {
                let p = zoo_get(a).unwrap();
                let q = zoo_get(b).unwrap();
                let explicit = bsquare(&p, &q).unwrap();
                let dual_route = bsquare_via_duality(&p, &q).unwrap();
                assert_eq!(explicit.relations(), dual_route.relations(), "{a} # {b}");
            }
        }
    }

    #[test]
    fn duality_check_symmetric_cases() {
        let lie = zoo_get("Lie").unwrap();
        assert!(duality_check(&lie, &lie).unwrap());
        let prelie = zoo_get("PreLie").unwrap();
        let as_ = zoo_get("As").unwrap();
        assert!(duality_check(&prelie, &as_).unwrap());
    }

    #[test]
    fn hadamard_criterion_for_perm() {
        // dim (Perm o Q)(n) = n * dim Q(n) for n <= 4.
        let perm = zoo_get("Perm").unwrap();
        for name in ["As", "Lie", "Com"] {
            let q = zoo_get(name).unwrap();
            let prod = white_product(&perm, &q).unwrap();
            let pd: Vec<usize> = prod
                .quotient_dims(4)
                .unwrap()
                .into_iter()
                .map(|r| r.quotient_dim)
                .collect();
            let qd: Vec<usize> = q
                .quotient_dims(4)
                .unwrap()
                .into_iter()
                .map(|r| r.quotient_dim)
                .collect();
            for n in 1..=4 {
                assert_eq!(pd[n - 1], n * qd[n - 1], "Perm o {name} at arity {n}");
            }
        }
    }

    #[test]
    fn canonical_multiplication_for_regular_presentations() {
        for name in ["AsNs", "Dend", "Dias"] {
            assert!(
                canonical_mult_check(&zoo_get(name).unwrap()).unwrap(),
                "{name}"
            );
        }
    }

    #[test]
    fn canonical_bracket_for_symmetric_presentations() {
        for name in ["As", "Com", "Leib"] {
            assert!(
                canonical_bracket_check(&zoo_get(name).unwrap()).unwrap(),
                "{name}"
            );
        }
    }

    #[test]
    fn products_of_quadratic_inputs_stay_quadratic() {
        let p = zoo_get("PreLie").unwrap();
        let q = zoo_get("Perm").unwrap();
        let w = white_product(&p, &q).unwrap();
        assert_eq!(w.relations().ambient(), 3 * 16);
        let b = black_product(&p, &q).unwrap();
        assert_eq!(b.relations().ambient(), 3 * 16);
    }

    #[test]
    fn kind_mismatch_is_rejected() {
        let sym = zoo_get("Com").unwrap();
        let reg = zoo_get("AsNs").unwrap();
        assert!(white_product(&sym, &reg).is_err());
        assert!(wsquare(&sym, &reg).is_err());
        assert!(canonical_mult_check(&sym).is_err());
        assert!(canonical_bracket_check(&reg).is_err());
    }
}
