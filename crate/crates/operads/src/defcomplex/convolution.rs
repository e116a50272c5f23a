use super::algebra::AlgebraStructure;
use super::multilinear::MultiMap;
use super::quotient::QuotientTrunc;
use crate::error::{Error, Result};
use crate::exact::{rat_i, Rat};
use crate::freeop::Kind;
use crate::presentations::QuadPresentation;
use num_traits::Zero;
use std::collections::BTreeMap;

/// Truncated model of the Koszul dual cooperad of P, realized as the
/// twisted linear dual of P!: the component at arity n is the dual of
/// P!(n), and the partial coproduct tables are the structure constants of
/// the partial compositions of P!, read backwards. Built from the
/// presentation by row-reducing the ideal of P! at each arity and taking
/// the complementary tree classes as the basis.
#[derive(Debug, Clone)]
pub struct DualCooperad {
    dual_quotient: QuotientTrunc,
}

impl DualCooperad {
    pub fn dim(&self, arity: usize) -> usize {
        self.dual_quotient.dim(arity)
    }

    pub fn n_max(&self) -> usize {
        self.dual_quotient.n_max()
    }

    /// Partial coproduct constants: the coefficient of
    /// `xi_p^j (x) xi_q^l` (at slot `slot`) in `Delta'(xi_n^k)` equals the
    /// coefficient of `e_n^k` in `e_p^j o_slot e_q^l`.
    pub fn delta_constant(
        &self,
        p: usize,
        j: usize,
        slot: usize,
        q: usize,
        l: usize,
    ) -> Result<Vec<Rat>> {
        self.dual_quotient.compose(p, j, slot, q, l)
    }
}

/// Builds the truncated dual cooperad of a presentation.
pub fn build_dual_cooperad(p: &QuadPresentation, n_max: usize) -> Result<DualCooperad> {
    let dual = crate::manin::koszul_dual(p)?;
    Ok(DualCooperad {
        dual_quotient: QuotientTrunc::build(&dual, n_max)?,
    })
}

/// Shared context of a deformation complex: the algebra and the truncated
/// dual cooperad of its presentation.
#[derive(Debug, Clone)]
pub struct DeformationContext {
    algebra: AlgebraStructure,
    dual: DualCooperad,
}

impl DeformationContext {
    pub fn new(algebra: AlgebraStructure, n_max: usize) -> Result<Self> {
        let dual = build_dual_cooperad(algebra.presentation(), n_max)?;
        Ok(DeformationContext { algebra, dual })
    }

    pub fn algebra(&self) -> &AlgebraStructure {
        &self.algebra
    }

    pub fn dual(&self) -> &DualCooperad {
        &self.dual
    }

    pub fn n_max(&self) -> usize {
        self.dual.n_max()
    }

    pub fn presentation(&self) -> &QuadPresentation {
        self.algebra.presentation()
    }

    /// Dimension of the degree-(n-1) component
    /// `Hom(P_dual(n), Hom(A^n, A))`.
    pub fn component_dim(&self, arity: usize) -> usize {
        let m = self.algebra.dim();
        self.dual.dim(arity) * m * m.pow(arity as u32)
    }
}

/// Element of the convolution complex `Hom(P_dual, End(A))`: for each arity
/// n, a linear map from the dual cooperad component into the multilinear
/// maps, stored by its values on the dual basis. The cohomological degree
/// of the arity-n part is n - 1.
#[derive(Debug, Clone)]
pub struct ConvolutionElement {
    /// components[arity] = values on the dual basis of that arity
    components: BTreeMap<usize, Vec<MultiMap>>,
}

impl PartialEq for ConvolutionElement {
    /// Mathematical equality: an absent component counts as zero.
    fn eq(&self, other: &Self) -> bool {
        let keys: std::collections::BTreeSet<usize> = self
            .components
            .keys()
            .chain(other.components.keys())
            .copied()
            .collect();
        keys.into_iter().all(|n| {
            match (self.components.get(&n), other.components.get(&n)) {
                (None, None) => true,
                (Some(vs), None) | (None, Some(vs)) => vs.iter().all(|v| v.is_zero()),
                (Some(a), Some(b)) => a == b,
            }
        })
    }
}

impl Eq for ConvolutionElement {}

impl ConvolutionElement {
    pub fn zero() -> Self {
        ConvolutionElement {
            components: BTreeMap::new(),
        }
    }

    /// A homogeneous element concentrated in one arity.
    pub fn homogeneous(ctx: &DeformationContext, arity: usize, values: Vec<MultiMap>) -> Result<Self> {
        if values.len() != ctx.dual.dim(arity) {
            return Err(Error::DimensionMismatch {
                expected: ctx.dual.dim(arity),
                got: values.len(),
            });
        }
        for v in &values {
            if v.arity() != arity || v.dim() != ctx.algebra.dim() {
                return Err(Error::ContextMismatch);
            }
        }
        let mut components = BTreeMap::new();
        components.insert(arity, values);
        Ok(ConvolutionElement { components })
    }

    pub fn is_zero(&self) -> bool {
        self.components
            .values()
            .all(|vs| vs.iter().all(|v| v.is_zero()))
    }

    pub fn arities(&self) -> Vec<usize> {
        self.components.keys().copied().collect()
    }

    pub fn component(&self, arity: usize) -> Option<&Vec<MultiMap>> {
        self.components.get(&arity)
    }

    pub fn add(&self, other: &ConvolutionElement) -> Result<ConvolutionElement> {
        let mut out = self.components.clone();
        for (&n, vs) in &other.components {
            match out.get_mut(&n) {
                None => {
                    out.insert(n, vs.clone());
                }
                Some(mine) => {
                    if mine.len() != vs.len() {
                        return Err(Error::ContextMismatch);
                    }
                    for (a, b) in mine.iter_mut().zip(vs) {
                        *a = a.add(b)?;
                    }
                }
            }
        }
        Ok(ConvolutionElement { components: out })
    }

    pub fn scale(&self, s: &Rat) -> ConvolutionElement {
        ConvolutionElement {
            components: self
                .components
                .iter()
                .map(|(&n, vs)| (n, vs.iter().map(|v| v.scale(s)).collect()))
                .collect(),
        }
    }

    fn accumulate(&mut self, arity: usize, values: Vec<MultiMap>) {
        match self.components.get_mut(&arity) {
            None => {
                self.components.insert(arity, values);
            }
            Some(mine) => {
                for (a, b) in mine.iter_mut().zip(values) {
                    *a = a.add(&b).expect("same shape");
                }
            }
        }
    }

    /// Drops zero components (for canonical comparisons).
    pub fn normalized(mut self) -> ConvolutionElement {
        self.components.retain(|_, vs| vs.iter().any(|v| !v.is_zero()));
        self
    }
}

/// Suspension sign of the term `f_p o_slot g_q` inside the convolution
/// product: `(-1)^((slot-1)(q-1))`. For the associative presentation this
/// reproduces the classical brace/composition signs on Hochschild cochains.
fn star_sign(slot: usize, q: usize) -> Rat {
    if (slot - 1) * (q - 1) % 2 == 1 {
        rat_i(-1)
    } else {
        rat_i(1)
    }
}

/// One bi-homogeneous block of the convolution product: components of
/// arity p of `f` composed with components of arity q of `g`, landing in
/// arity p+q-1. Returns None when the target exceeds the truncation.
fn star_block(
    ctx: &DeformationContext,
    p: usize,
    fp: &[MultiMap],
    q: usize,
    gq: &[MultiMap],
) -> Result<Option<(usize, Vec<MultiMap>)>> {
    let n = p + q - 1;
    if n > ctx.n_max() {
        return Ok(None);
    }
    let m = ctx.algebra.dim();
    let mut out = vec![MultiMap::zero(m, n); ctx.dual.dim(n)];
    for slot in 1..=p {
        let sign = star_sign(slot, q);
        for (j, fj) in fp.iter().enumerate() {
            if fj.is_zero() {
                continue;
            }
            for (l, gl) in gq.iter().enumerate() {
                if gl.is_zero() {
                    continue;
                }
                let constants = ctx.dual.delta_constant(p, j, slot, q, l)?;
                if constants.iter().all(|c| c.is_zero()) {
                    continue;
                }
                let composed = fj.compose_at(slot, gl)?;
                for (k, c) in constants.into_iter().enumerate() {
                    if !c.is_zero() {
                        out[k] = out[k].add(&composed.scale(&(&c * &sign)))?;
                    }
                }
            }
        }
    }
    Ok(Some((n, out)))
}

/// Convolution preLie product `f * g`, built from the partial coproduct of
/// the dual cooperad and composition in `End(A)`.
///
/// Only regular presentations are supported: in the symmetric case the
/// decomposition of the dual cooperad carries shuffle placements beyond the
/// plain partial coproducts, and the product below would fail the
/// Maurer-Cartan equation on non-equivariant elements. The symmetric
/// complex lives on the equivariant subspace, which this model does not
/// represent.
pub fn star(
    ctx: &DeformationContext,
    f: &ConvolutionElement,
    g: &ConvolutionElement,
) -> Result<ConvolutionElement> {
    require_regular(ctx)?;
    let mut out = ConvolutionElement::zero();
    for (&p, fp) in &f.components {
        for (&q, gq) in &g.components {
            if let Some((n, vs)) = star_block(ctx, p, fp, q, gq)? {
                out.accumulate(n, vs);
            }
        }
    }
    Ok(out.normalized())
}

/// Intrinsic bracket `[f, g] = f*g - (-1)^(|f||g|) g*f`, degrees read off
/// the arities (|f| = p - 1 on the arity-p component).
pub fn bracket(
    ctx: &DeformationContext,
    f: &ConvolutionElement,
    g: &ConvolutionElement,
) -> Result<ConvolutionElement> {
    require_regular(ctx)?;
    let mut out = ConvolutionElement::zero();
    for (&p, fp) in &f.components {
        for (&q, gq) in &g.components {
            if let Some((n, vs)) = star_block(ctx, p, fp, q, gq)? {
                out.accumulate(n, vs);
            }
            if let Some((n, vs)) = star_block(ctx, q, gq, p, fp)? {
                let sign = if (p - 1) * (q - 1) % 2 == 1 { 1 } else { -1 };
                out.accumulate(n, vs.into_iter().map(|v| v.scale(&rat_i(sign))).collect());
            }
        }
    }
    Ok(out.normalized())
}

/// The twisting cochain: the arity-2, degree-1 element carrying the dual
/// basis to minus the structure maps. The global sign is the convention
/// that makes the differential of the associative presentation equal the
/// classical Hochschild differential; all other sign-sensitive identities
/// hold with the same choice.
pub fn twisting_cochain(ctx: &DeformationContext) -> ConvolutionElement {
    let values = ctx
        .algebra
        .ops()
        .iter()
        .map(|op| op.scale(&rat_i(-1)))
        .collect();
    ConvolutionElement::homogeneous(ctx, 2, values).expect("arity-2 component matches generators")
}

/// The canonical multiplication: the same arity-2 element with the plain
/// sign, the image of the associative operation under the canonical map
/// into the convolution operad (regular presentations).
pub fn multiplication(ctx: &DeformationContext) -> ConvolutionElement {
    let values = ctx.algebra.ops().to_vec();
    ConvolutionElement::homogeneous(ctx, 2, values).expect("arity-2 component matches generators")
}

/// Differential `d(f) = [f, alpha]`. Squares to zero by the Maurer-Cartan
/// equation `alpha * alpha = 0`.
pub fn differential(
    ctx: &DeformationContext,
    f: &ConvolutionElement,
) -> Result<ConvolutionElement> {
    let alpha = twisting_cochain(ctx);
    bracket(ctx, f, &alpha)
}

fn require_regular(ctx: &DeformationContext) -> Result<()> {
    if ctx.presentation().kind() != Kind::Regular {
        return Err(Error::KindMismatch {
            expected: "regular",
            got: ctx.presentation().kind().label(),
        });
    }
    Ok(())
}

/// Convolution partial composition without suspension signs, used by the
/// cosimplicial face maps.
fn plain_compose(
    ctx: &DeformationContext,
    p: usize,
    fp: &[MultiMap],
    slot: usize,
    q: usize,
    gq: &[MultiMap],
) -> Result<Vec<MultiMap>> {
    let n = p + q - 1;
    let m = ctx.algebra.dim();
    let mut out = vec![MultiMap::zero(m, n); ctx.dual.dim(n)];
    for (j, fj) in fp.iter().enumerate() {
        if fj.is_zero() {
            continue;
        }
        for (l, gl) in gq.iter().enumerate() {
            if gl.is_zero() {
                continue;
            }
            let constants = ctx.dual.delta_constant(p, j, slot, q, l)?;
            if constants.iter().all(|c| c.is_zero()) {
                continue;
            }
            let composed = fj.compose_at(slot, gl)?;
            for (k, c) in constants.into_iter().enumerate() {
                if !c.is_zero() {
                    out[k] = out[k].add(&composed.scale(&c))?;
                }
            }
        }
    }
    Ok(out)
}

/// Cosimplicial face maps of a homogeneous arity-n element, for a regular
/// presentation with its canonical multiplication m:
/// `d^0 f = m o_2 f`, `d^i f = f o_i m` for 0 < i < n+1, `d^(n+1) f = m o_1 f`.
pub fn face_maps(
    ctx: &DeformationContext,
    arity: usize,
    f: &[MultiMap],
) -> Result<Vec<Vec<MultiMap>>> {
    require_regular(ctx)?;
    let m = multiplication(ctx);
    let m2 = m.component(2).expect("multiplication is an arity-2 element");
    let mut faces = Vec::with_capacity(arity + 2);
    faces.push(plain_compose(ctx, 2, m2, 2, arity, f)?);
    for i in 1..=arity {
        faces.push(plain_compose(ctx, arity, f, i, 2, m2)?);
    }
    faces.push(plain_compose(ctx, 2, m2, 1, arity, f)?);
    Ok(faces)
}

/// Alternating sum of the face maps, `sum (-1)^i d^i`. Agrees with the
/// twisting-cochain differential.
pub fn cosimplicial_d(
    ctx: &DeformationContext,
    f: &ConvolutionElement,
) -> Result<ConvolutionElement> {
    require_regular(ctx)?;
    let mut out = ConvolutionElement::zero();
    for (&n, fs) in &f.components {
        if n + 1 > ctx.n_max() {
            continue;
        }
        let faces = face_maps(ctx, n, fs)?;
        for (i, face) in faces.into_iter().enumerate() {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            out.accumulate(
                n + 1,
                face.into_iter().map(|v| v.scale(&rat_i(sign))).collect(),
            );
        }
    }
    Ok(out.normalized())
}

/// The bracket-style differential `d(f) = [m, f] = m*f - (-1)^|f| f*m`
/// carried by the multiplication. Related to the twisting-cochain
/// differential by `diff(f) = (-1)^|f| d(f)`.
pub fn mult_differential(
    ctx: &DeformationContext,
    f: &ConvolutionElement,
) -> Result<ConvolutionElement> {
    require_regular(ctx)?;
    let m = multiplication(ctx);
    bracket(ctx, &m, f)
}

/// Cup product `f u g`: the composite of the multiplication with f and g
/// side by side, `m o (f (x) g)`.
pub fn cup(
    ctx: &DeformationContext,
    f: &ConvolutionElement,
    g: &ConvolutionElement,
) -> Result<ConvolutionElement> {
    require_regular(ctx)?;
    let m = multiplication(ctx);
    cup_with(ctx, &m, f, g)
}

/// The shift bracket built from the twisting cochain: the antisymmetrized
/// composite of alpha with the two elements side by side, with suspension
/// signs riding on the arities,
/// `{f, g} = (-1)^(pq) alphacup(f, g) - alphacup(g, f)`
/// for homogeneous components of arities p and q. The normalization is
/// pinned by the boundary identity
/// `{f, g} = diff(f)*g + (-1)^|g| f*diff(g) - (-1)^|g| diff(f*g)`,
/// which also shows the bracket vanishes on cohomology.
pub fn minus_one_bracket(
    ctx: &DeformationContext,
    f: &ConvolutionElement,
    g: &ConvolutionElement,
) -> Result<ConvolutionElement> {
    require_regular(ctx)?;
    let alpha = twisting_cochain(ctx);
    let mut out = ConvolutionElement::zero();
    for (&p, fp) in &f.components {
        for (&q, gq) in &g.components {
            let fh = homog(p, fp);
            let gh = homog(q, gq);
            let sign = if p * q % 2 == 1 { -1 } else { 1 };
            let first = cup_with(ctx, &alpha, &fh, &gh)?.scale(&rat_i(sign));
            let second = cup_with(ctx, &alpha, &gh, &fh)?.scale(&rat_i(-1));
            out = out.add(&first)?.add(&second)?;
        }
    }
    Ok(out.normalized())
}

fn homog(arity: usize, values: &[MultiMap]) -> ConvolutionElement {
    let mut components = BTreeMap::new();
    components.insert(arity, values.to_vec());
    ConvolutionElement { components }
}

/// Composite `head o (f (x) g)`: plugs g into slot 2 of the arity-2 head,
/// then f into slot 1.
fn cup_with(
    ctx: &DeformationContext,
    head: &ConvolutionElement,
    f: &ConvolutionElement,
    g: &ConvolutionElement,
) -> Result<ConvolutionElement> {
    let h2 = head.component(2).expect("binary head");
    let mut out = ConvolutionElement::zero();
    for (&p, fp) in &f.components {
        for (&q, gq) in &g.components {
            let n = p + q;
            if n > ctx.n_max() {
                continue;
            }
            // head o_2 g first (keeps slot 1 in place), then f in slot 1
            let partial = plain_compose(ctx, 2, h2, 2, q, gq)?;
            let full = plain_compose(ctx, q + 1, &partial, 1, p, fp)?;
            out.accumulate(n, full);
        }
    }
    Ok(out.normalized())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::defcomplex::algebra::{associative_examples, dendriform_example};
    use crate::presentations::zoo_get;

    fn as_ctx() -> DeformationContext {
        let pres = zoo_get("AsNs").unwrap();
        let (_, a) = associative_examples(&pres).remove(2); // dual numbers
        DeformationContext::new(a, 6).unwrap()
    }

    #[test]
    fn dual_cooperad_dims() {
        // As: one class per arity; Dend: the diassociative dims n;
        // Com: the Lie dims (n-1)!.
        let d = build_dual_cooperad(&zoo_get("AsNs").unwrap(), 5).unwrap();
        assert_eq!((1..=5).map(|n| d.dim(n)).collect::<Vec<_>>(), vec![1; 5]);
        let d = build_dual_cooperad(&zoo_get("Dend").unwrap(), 5).unwrap();
        assert_eq!(
            (1..=5).map(|n| d.dim(n)).collect::<Vec<_>>(),
            vec![1, 2, 3, 4, 5]
        );
        let d = build_dual_cooperad(&zoo_get("Com").unwrap(), 5).unwrap();
        assert_eq!(
            (1..=5).map(|n| d.dim(n)).collect::<Vec<_>>(),
            vec![1, 1, 2, 6, 24]
        );
    }

    #[test]
    fn maurer_cartan_for_associative_algebras() {
        let pres = zoo_get("AsNs").unwrap();
        for (name, a) in associative_examples(&pres) {
            let ctx = DeformationContext::new(a, 5).unwrap();
            let alpha = twisting_cochain(&ctx);
            assert!(star(&ctx, &alpha, &alpha).unwrap().is_zero(), "{name}");
        }
    }

    #[test]
    fn maurer_cartan_for_the_dendriform_example() {
        let pres = zoo_get("Dend").unwrap();
        let a = dendriform_example(&pres).unwrap();
        let ctx = DeformationContext::new(a, 5).unwrap();
        let alpha = twisting_cochain(&ctx);
        assert!(star(&ctx, &alpha, &alpha).unwrap().is_zero());
    }

    #[test]
    fn star_with_zero_is_zero() {
        let ctx = as_ctx();
        let alpha = twisting_cochain(&ctx);
        let zero = ConvolutionElement::zero();
        assert!(star(&ctx, &zero, &alpha).unwrap().is_zero());
        assert!(star(&ctx, &alpha, &zero).unwrap().is_zero());
    }

    #[test]
    fn differential_squares_to_zero_on_alpha_itself() {
        let ctx = as_ctx();
        let alpha = twisting_cochain(&ctx);
        let d = differential(&ctx, &alpha).unwrap();
        // d(alpha) = [alpha, alpha] = 2 alpha*alpha = 0 already
        assert!(d.is_zero());
    }
}
