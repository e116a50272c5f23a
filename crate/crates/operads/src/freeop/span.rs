use super::genspace::{GenSpace, Kind};
use super::weight2::{w2_dim, w2_unindex, Weight2Vector};
use crate::error::{Error, Result};
use crate::exact::{Rat, Perm};
use num_traits::{One, Zero};
use std::collections::{BTreeMap, HashMap};

/// Binary tree with decorated internal vertices and labelled leaves.
/// Labels are 1-based. For the symmetric kind a tree is canonical when the
/// children of every vertex are ordered by minimal leaf label; for the
/// regular kind trees are planar and the leaves read 1..n left to right.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Tree {
    Leaf(usize),
    Node {
        dec: usize,
        left: Box<Tree>,
        right: Box<Tree>,
    },
}

impl Tree {
    pub fn node(dec: usize, left: Tree, right: Tree) -> Tree {
        Tree::Node {
            dec,
            left: Box::new(left),
            right: Box::new(right),
        }
    }

    /// Single generator vertex with leaves (1, 2).
    pub fn corolla(dec: usize) -> Tree {
        Tree::node(dec, Tree::Leaf(1), Tree::Leaf(2))
    }

    pub fn arity(&self) -> usize {
        match self {
            Tree::Leaf(_) => 1,
            Tree::Node { left, right, .. } => left.arity() + right.arity(),
        }
    }

    pub fn min_leaf(&self) -> usize {
        match self {
            Tree::Leaf(l) => *l,
            Tree::Node { left, right, .. } => left.min_leaf().min(right.min_leaf()),
        }
    }

    pub fn relabel(&self, f: &impl Fn(usize) -> usize) -> Tree {
        match self {
            Tree::Leaf(l) => Tree::Leaf(f(*l)),
            Tree::Node { dec, left, right } => {
                Tree::node(*dec, left.relabel(f), right.relabel(f))
            }
        }
    }

    /// Grafts `y` into the leaf labelled `slot` with the standard shift
    /// convention: the leaves of `y` occupy `slot .. slot+q-1` and the later
    /// leaves of `self` move up by `q - 1`.
    pub fn graft(&self, slot: usize, y: &Tree) -> Tree {
        let q = y.arity();
        match self {
            Tree::Leaf(l) => {
                if *l == slot {
                    y.relabel(&|m| m + slot - 1)
                } else if *l > slot {
                    Tree::Leaf(*l + q - 1)
                } else {
                    Tree::Leaf(*l)
                }
            }
            Tree::Node { dec, left, right } => Tree::node(
                *dec,
                left.graft(slot, y),
                right.graft(slot, y),
            ),
        }
    }
}

/// Sparse linear combination of basis trees, indexed into a `FreeSpan`.
pub type SpanVec = Vec<(usize, Rat)>;

/// Basis and linear model of F(V)(n) at a fixed arity.
#[derive(Debug, Clone)]
pub struct FreeSpan {
    gen: GenSpace,
    arity: usize,
    trees: Vec<Tree>,
    index: HashMap<Tree, usize>,
}

impl FreeSpan {
    pub fn new(gen: &GenSpace, arity: usize) -> FreeSpan {
        assert!(arity >= 1);
        let trees = match gen.kind() {
            Kind::Symmetric => {
                let leaves: Vec<usize> = (1..=arity).collect();
                enum_symmetric(&leaves, gen.dim())
            }
            Kind::Regular => enum_regular(1, arity + 1, gen.dim()),
        };
        let index = trees
            .iter()
            .enumerate()
            .map(|(i, t)| (t.clone(), i))
            .collect();
        FreeSpan {
            gen: gen.clone(),
            arity,
            trees,
            index,
        }
    }

    pub fn gen(&self) -> &GenSpace {
        &self.gen
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn dim(&self) -> usize {
        self.trees.len()
    }

    pub fn tree(&self, i: usize) -> &Tree {
        &self.trees[i]
    }

    pub fn trees(&self) -> &[Tree] {
        &self.trees
    }

    /// Canonical expansion of an arbitrary decorated tree over the basis.
    /// For the symmetric kind a child swap during canonicalization applies
    /// action12 to the vertex decoration, so the result is in general a
    /// linear combination.
    pub fn canonicalize(&self, t: &Tree) -> SpanVec {
        debug_assert_eq!(t.arity(), self.arity);
        match self.gen.kind() {
            Kind::Regular => {
                let i = *self
                    .index
                    .get(t)
                    .expect("planar tree outside basis (bad leaf order?)");
                vec![(i, Rat::one())]
            }
            Kind::Symmetric => {
                let mut acc: BTreeMap<Tree, Rat> = BTreeMap::new();
                expand_canonical(&self.gen, t, Rat::one(), &mut acc);
                acc.into_iter()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(tree, c)| {
                        let i = *self.index.get(&tree).expect("canonical tree in basis");
                        (i, c)
                    })
                    .collect()
            }
        }
    }

    /// Relabels the leaves of a basis vector by a permutation
    /// (`leaf l -> sigma(l)`, 1-based via the 0-based `Perm`).
    pub fn perm_action(&self, v: &SpanVec, sigma: &Perm) -> SpanVec {
        assert_eq!(sigma.degree(), self.arity);
        let mut out: BTreeMap<usize, Rat> = BTreeMap::new();
        for (i, c) in v {
            let t = self.trees[*i].relabel(&|l| sigma.apply(l - 1) + 1);
            for (j, e) in self.canonicalize(&t) {
                let entry = out.entry(j).or_insert_with(Rat::zero);
                *entry += c * &e;
            }
        }
        out.into_iter().filter(|(_, c)| !c.is_zero()).collect()
    }

    pub fn to_dense(&self, v: &SpanVec) -> Vec<Rat> {
        let mut out = vec![Rat::zero(); self.dim()];
        for (i, c) in v {
            out[*i] += c;
        }
        out
    }
}

fn expand_canonical(gen: &GenSpace, t: &Tree, coeff: Rat, acc: &mut BTreeMap<Tree, Rat>) {
    match t {
        Tree::Leaf(_) => {
            *acc.entry(t.clone()).or_insert_with(Rat::zero) += coeff;
        }
        Tree::Node { dec, left, right } => {
            let mut lacc = BTreeMap::new();
            expand_canonical(gen, left, Rat::one(), &mut lacc);
            let mut racc = BTreeMap::new();
            expand_canonical(gen, right, Rat::one(), &mut racc);
            for (lt, lc) in &lacc {
                for (rt, rc) in &racc {
                    let c = &coeff * lc * rc;
                    if lt.min_leaf() < rt.min_leaf() {
                        *acc.entry(Tree::node(*dec, lt.clone(), rt.clone()))
                            .or_insert_with(Rat::zero) += c;
                    } else {
                        for (k, a) in gen.act12_col(*dec) {
                            *acc.entry(Tree::node(k, rt.clone(), lt.clone()))
                                .or_insert_with(Rat::zero) += &c * &a;
                        }
                    }
                }
            }
        }
    }
}

/// Canonical symmetric trees on a sorted leaf set: the child containing the
/// minimal leaf goes first, so recursing on subsets that keep the minimum on
/// the left enumerates exactly the canonical forms.
fn enum_symmetric(leaves: &[usize], d: usize) -> Vec<Tree> {
    if leaves.len() == 1 {
        return vec![Tree::Leaf(leaves[0])];
    }
    let mut out = Vec::new();
    let rest = &leaves[1..];
    // Choose the subset of `rest` that joins the minimal leaf on the left.
    for mask in 0..(1u32 << rest.len()) {
        if mask == (1 << rest.len()) - 1 {
            continue; // right child must be nonempty
        }
        let mut left_leaves = vec![leaves[0]];
        let mut right_leaves = Vec::new();
        for (k, &l) in rest.iter().enumerate() {
            if mask & (1 << k) != 0 {
                left_leaves.push(l);
            } else {
                right_leaves.push(l);
            }
        }
        for lt in enum_symmetric(&left_leaves, d) {
            for rt in enum_symmetric(&right_leaves, d) {
                for dec in 0..d {
                    out.push(Tree::node(dec, lt.clone(), rt.clone()));
                }
            }
        }
    }
    out.sort();
    out
}

/// Planar trees with leaves lo..hi-1 in order.
fn enum_regular(lo: usize, hi: usize, d: usize) -> Vec<Tree> {
    if hi - lo == 1 {
        return vec![Tree::Leaf(lo)];
    }
    let mut out = Vec::new();
    for split in lo + 1..hi {
        for lt in enum_regular(lo, split, d) {
            for rt in enum_regular(split, hi, d) {
                for dec in 0..d {
                    out.push(Tree::node(dec, lt.clone(), rt.clone()));
                }
            }
        }
    }
    out.sort();
    out
}

/// Free operad context: the spans at every arity up to a bound, with
/// composition between them.
#[derive(Debug, Clone)]
pub struct FreeOperad {
    gen: GenSpace,
    max_arity: usize,
    spans: Vec<FreeSpan>, // spans[k] has arity k+1
}

impl FreeOperad {
    /// Builds spans for arities 1..=max_arity.
    pub fn new(gen: &GenSpace, max_arity: usize) -> FreeOperad {
        let spans = (1..=max_arity).map(|n| FreeSpan::new(gen, n)).collect();
        FreeOperad {
            gen: gen.clone(),
            max_arity,
            spans,
        }
    }

    pub fn gen(&self) -> &GenSpace {
        &self.gen
    }

    pub fn max_arity(&self) -> usize {
        self.max_arity
    }

    pub fn span(&self, arity: usize) -> Result<&FreeSpan> {
        if arity == 0 || arity > self.max_arity {
            return Err(Error::ArityBound {
                arity,
                max: self.max_arity,
            });
        }
        Ok(&self.spans[arity - 1])
    }

    /// Partial composition x o_slot y of span vectors, bilinear over the
    /// tree bases, landing in arity p+q-1.
    pub fn compose(
        &self,
        p: usize,
        x: &SpanVec,
        slot: usize,
        q: usize,
        y: &SpanVec,
    ) -> Result<SpanVec> {
        if slot == 0 || slot > p {
            return Err(Error::SlotOutOfRange { slot, arity: p });
        }
        let xs = self.span(p)?;
        let ys = self.span(q)?;
        let target = self.span(p + q - 1)?;
        let mut out: BTreeMap<usize, Rat> = BTreeMap::new();
        for (i, a) in x {
            let xt = xs.tree(*i);
            for (j, b) in y {
                let grafted = xt.graft(slot, ys.tree(*j));
                let c = a * b;
                for (k, e) in target.canonicalize(&grafted) {
                    *out.entry(k).or_insert_with(Rat::zero) += &c * &e;
                }
            }
        }
        Ok(out.into_iter().filter(|(_, c)| !c.is_zero()).collect())
    }

    /// Conversion from weight-2 coordinates to the arity-3 span basis.
    pub fn w2_to_span3(&self, v: &Weight2Vector) -> Result<Vec<Rat>> {
        debug_assert_eq!(v.gen(), &self.gen);
        let span3 = self.span(3)?;
        let mut out = vec![Rat::zero(); span3.dim()];
        for (i, c) in v.coords().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (comp, root, upper) = w2_unindex(&self.gen, i);
            let t = w2_basis_tree(&self.gen, comp, root, upper);
            for (k, e) in span3.canonicalize(&t) {
                out[k] += c * &e;
            }
        }
        Ok(out)
    }

    /// Inverse conversion: expands an arity-3 span vector in the canonical
    /// weight-2 basis.
    pub fn span3_to_w2(&self, dense: &[Rat]) -> Result<Weight2Vector> {
        let span3 = self.span(3)?;
        if dense.len() != span3.dim() {
            return Err(Error::DimensionMismatch {
                expected: span3.dim(),
                got: dense.len(),
            });
        }
        let mut coords = vec![Rat::zero(); w2_dim(&self.gen)];
        for (i, c) in dense.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (j, e) in span3_tree_to_w2(&self.gen, span3.tree(i)) {
                coords[j] += c * &e;
            }
        }
        Weight2Vector::new(self.gen.clone(), coords)
    }
}

/// Composition-pattern tree of the weight-2 basis element
/// `root o_comp upper`.
///
/// Symmetric types: I = a(b(1,2),3), II = a(b(2,3),1), III = a(b(3,1),2).
/// Regular: o1 = a(b(1,2),3), o2 = a(1,b(2,3)).
pub fn w2_basis_tree(gen: &GenSpace, comp: usize, root: usize, upper: usize) -> Tree {
    let (l1, l2, l3) = match (gen.kind(), comp) {
        (Kind::Symmetric, 0) | (Kind::Regular, 0) => (1, 2, 3),
        (Kind::Symmetric, 1) => (2, 3, 1),
        (Kind::Symmetric, 2) => (3, 1, 2),
        (Kind::Regular, 1) => {
            return Tree::node(
                root,
                Tree::Leaf(1),
                Tree::node(upper, Tree::Leaf(2), Tree::Leaf(3)),
            )
        }
        _ => unreachable!("bad comp index"),
    };
    Tree::node(
        root,
        Tree::node(upper, Tree::Leaf(l1), Tree::Leaf(l2)),
        Tree::Leaf(l3),
    )
}

/// Weight-2 expansion of a canonical arity-3 basis tree.
fn span3_tree_to_w2(gen: &GenSpace, t: &Tree) -> Vec<(usize, Rat)> {
    let d = gen.dim();
    let idx = |comp: usize, r: usize, u: usize| comp * d * d + r * d + u;
    let Tree::Node { dec, left, right } = t else {
        panic!("arity-3 tree expected")
    };
    match (left.as_ref(), right.as_ref()) {
        // a(b(l1,l2), l3)
        (
            Tree::Node {
                dec: upper,
                left: l1,
                right: l2,
            },
            Tree::Leaf(l3),
        ) => {
            let (a, b) = (
                match l1.as_ref() {
                    Tree::Leaf(l) => *l,
                    _ => unreachable!(),
                },
                match l2.as_ref() {
                    Tree::Leaf(l) => *l,
                    _ => unreachable!(),
                },
            );
            match (a, b, l3) {
                // type I as written
                (1, 2, 3) => vec![(idx(0, *dec, *upper), Rat::one())],
                // cherry (1,3): type III has cherry (3,1), so the canonical
                // tree carries upper^(12)
                (1, 3, 2) => gen
                    .act12_col(*upper)
                    .into_iter()
                    .map(|(k, c)| (idx(2, *dec, k), c))
                    .collect(),
                _ => panic!("non-canonical arity-3 tree"),
            }
        }
        // leaf-first pattern a(1, b(2,3))
        (
            Tree::Leaf(1),
            Tree::Node {
                dec: upper,
                left: l2,
                right: l3,
            },
        ) => {
            debug_assert!(matches!(
                (l2.as_ref(), l3.as_ref()),
                (Tree::Leaf(2), Tree::Leaf(3))
            ));
            match gen.kind() {
                // the regular o2 composition
                Kind::Regular => vec![(idx(1, *dec, *upper), Rat::one())],
                // a(1, b(2,3)) = a^(12)(b(2,3), 1), i.e. type II with the
                // root decoration acted on
                Kind::Symmetric => gen
                    .act12_col(*dec)
                    .into_iter()
                    .map(|(k, c)| (idx(1, k, *upper), c))
                    .collect(),
            }
        }
        _ => panic!("non-canonical arity-3 tree"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat_i, rat};
    use crate::freeop::weight2::{s3_action, w2_index};

    fn double_factorial_odd(n: usize) -> usize {
        // (2n-3)!! for n >= 2
        (1..=2 * n - 3).step_by(2).product()
    }

    fn catalan(n: usize) -> usize {
        // number of planar binary trees with n+1 leaves
        let mut c = vec![0usize; n + 1];
        c[0] = 1;
        for m in 1..=n {
            c[m] = (0..m).map(|k| c[k] * c[m - 1 - k]).sum();
        }
        c[n]
    }

    #[test]
    fn symmetric_dims_match_formula() {
        for d in 1..=2usize {
            let gen = if d == 1 {
                GenSpace::trivial_1d("m")
            } else {
                GenSpace::regular_rep("m")
            };
            for n in 2..=5 {
                let span = FreeSpan::new(&gen, n);
                assert_eq!(
                    span.dim(),
                    double_factorial_odd(n) * d.pow(n as u32 - 1),
                    "sym d={d} n={n}"
                );
            }
        }
    }

    #[test]
    fn regular_dims_match_catalan() {
        for d in 1..=2usize {
            let gen = GenSpace::regular((0..d).map(|i| format!("g{i}")).collect());
            for n in 2..=5 {
                let span = FreeSpan::new(&gen, n);
                assert_eq!(
                    span.dim(),
                    catalan(n - 1) * d.pow(n as u32 - 1),
                    "reg d={d} n={n}"
                );
            }
        }
    }

    #[test]
    fn symmetric_d1_arity4_has_15_trees() {
        let span = FreeSpan::new(&GenSpace::trivial_1d("m"), 4);
        assert_eq!(span.dim(), 15);
    }

    #[test]
    fn symmetric_d2_arity3_has_12_trees() {
        let span = FreeSpan::new(&GenSpace::regular_rep("m"), 3);
        assert_eq!(span.dim(), 12);
    }

    #[test]
    fn canonicalize_handles_child_swap_with_sign() {
        // In the sign representation, swapping the cherry (2,1) -> (1,2)
        // multiplies by -1.
        let gen = GenSpace::sign_1d("b");
        let span = FreeSpan::new(&gen, 3);
        let t = Tree::node(
            0,
            Tree::node(0, Tree::Leaf(2), Tree::Leaf(1)),
            Tree::Leaf(3),
        );
        let v = span.canonicalize(&t);
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].1, rat_i(-1));
    }

    #[test]
    fn graft_shift_convention() {
        // x = m(1,2), graft m(1,2) into slot 1: m(m(1,2),3)
        let x = Tree::corolla(0);
        let y = Tree::corolla(0);
        let g = x.graft(1, &y);
        assert_eq!(
            g,
            Tree::node(0, Tree::node(0, Tree::Leaf(1), Tree::Leaf(2)), Tree::Leaf(3))
        );
        // graft into slot 2: m(1, m(2,3))
        let g2 = x.graft(2, &y);
        assert_eq!(
            g2,
            Tree::node(0, Tree::Leaf(1), Tree::node(0, Tree::Leaf(2), Tree::Leaf(3)))
        );
        assert_eq!(g.arity(), 3);
    }

    #[test]
    fn compose_lands_in_weight2_type_one() {
        // generator o_1 generator (symmetric single generator) equals the
        // type-I basis element m o_I m.
        let gen = GenSpace::trivial_1d("m");
        let fo = FreeOperad::new(&gen, 3);
        let unit = vec![(0usize, rat_i(1))];
        let v = fo.compose(2, &unit, 1, 2, &unit).unwrap();
        let w2 = fo.span3_to_w2(&fo.span(3).unwrap().to_dense(&v)).unwrap();
        let expect = Weight2Vector::basis(gen.clone(), 0, 0, 0);
        assert_eq!(w2, expect);
    }

    #[test]
    fn regular_right_comb_is_second_composition() {
        let gen = GenSpace::regular(vec!["m".into()]);
        let fo = FreeOperad::new(&gen, 3);
        let unit = vec![(0usize, rat_i(1))];
        let v = fo.compose(2, &unit, 2, 2, &unit).unwrap();
        let w2 = fo.span3_to_w2(&fo.span(3).unwrap().to_dense(&v)).unwrap();
        assert_eq!(w2, Weight2Vector::basis(gen.clone(), 1, 0, 0));
    }

    #[test]
    fn slot_out_of_range_rejected() {
        let gen = GenSpace::trivial_1d("m");
        let fo = FreeOperad::new(&gen, 4);
        let unit = vec![(0usize, rat_i(1))];
        assert!(fo.compose(2, &unit, 3, 2, &unit).is_err());
        assert!(fo.compose(2, &unit, 0, 2, &unit).is_err());
    }

    #[test]
    fn w2_span3_round_trip() {
        for gen in [
            GenSpace::trivial_1d("m"),
            GenSpace::sign_1d("b"),
            GenSpace::regular_rep("m"),
        ] {
            let fo = FreeOperad::new(&gen, 3);
            let dim = w2_dim(&gen);
            let v = Weight2Vector::new(
                gen.clone(),
                (0..dim).map(|i| rat(2 * i as i64 - 5, 3)).collect(),
            )
            .unwrap();
            let span = fo.w2_to_span3(&v).unwrap();
            let back = fo.span3_to_w2(&span).unwrap();
            assert_eq!(back, v);
        }
        let gen = GenSpace::regular(vec!["a".into(), "b".into()]);
        let fo = FreeOperad::new(&gen, 3);
        let v = Weight2Vector::basis(gen.clone(), 1, 1, 0);
        let back = fo.span3_to_w2(&fo.w2_to_span3(&v).unwrap()).unwrap();
        assert_eq!(back, v);
    }

    #[test]
    fn span3_action_intertwines_weight2_action() {
        // Relabelling leaves of arity-3 trees matches the stated S3 rules
        // on the weight-2 basis.
        for gen in [
            GenSpace::trivial_1d("m"),
            GenSpace::sign_1d("b"),
            GenSpace::regular_rep("m"),
        ] {
            let fo = FreeOperad::new(&gen, 3);
            let span3 = fo.span(3).unwrap();
            let dim = w2_dim(&gen);
            for sigma in Perm::all(3) {
                for i in 0..dim {
                    let mut coords = vec![Rat::zero(); dim];
                    coords[i] = Rat::one();
                    let v = Weight2Vector::new(gen.clone(), coords).unwrap();
                    let via_w2 = s3_action(&v, &sigma).unwrap();
                    let sp = fo.w2_to_span3(&v).unwrap();
                    let sparse: SpanVec = sp
                        .iter()
                        .enumerate()
                        .filter(|(_, c)| !c.is_zero())
                        .map(|(k, c)| (k, c.clone()))
                        .collect();
                    let acted = span3.perm_action(&sparse, &sigma);
                    let via_span = fo.span3_to_w2(&span3.to_dense(&acted)).unwrap();
                    assert_eq!(via_span, via_w2, "gen={:?} sigma={sigma} i={i}", gen.names());
                }
            }
        }
    }

    #[test]
    fn w2_index_unindex_consistency() {
        let gen = GenSpace::regular_rep("m");
        for comp in 0..3 {
            for r in 0..2 {
                for u in 0..2 {
                    let i = w2_index(&gen, comp, r, u);
                    assert_eq!(w2_unindex(&gen, i), (comp, r, u));
                }
            }
        }
    }
}
