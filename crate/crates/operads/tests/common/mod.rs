use operads::defcomplex::{ConvolutionElement, DeformationContext, MultiMap};
use operads::exact::{rat, Matrix};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_multimap(r: &mut ChaCha8Rng, dim: usize, arity: usize) -> MultiMap {
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

/// Random homogeneous element of the convolution complex at one arity.
pub fn random_homogeneous(
    r: &mut ChaCha8Rng,
    ctx: &DeformationContext,
    arity: usize,
) -> ConvolutionElement {
    let m = ctx.algebra().dim();
    let values = (0..ctx.dual().dim(arity))
        .map(|_| random_multimap(r, m, arity))
        .collect();
    ConvolutionElement::homogeneous(ctx, arity, values).unwrap()
}

/// Random element with components at the given arities.
#[allow(dead_code)]
pub fn random_element(
    r: &mut ChaCha8Rng,
    ctx: &DeformationContext,
    arities: &[usize],
) -> ConvolutionElement {
    let mut out = ConvolutionElement::zero();
    for &n in arities {
        out = out.add(&random_homogeneous(r, ctx, n)).unwrap();
    }
    out
}
