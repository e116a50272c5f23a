use super::genspace::Kind;
use super::span::{FreeOperad, FreeSpan, SpanVec, Tree};
use super::weight2::{w2_dim, Weight2Vector};
use crate::error::{Error, Result};
use crate::exact::{Rat, Subspace};
use num_traits::Zero;
use serde::Serialize;
use std::collections::BTreeMap;

/// One row of a dimension table.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct DimRow {
    pub arity: usize,
    pub free_dim: usize,
    pub ideal_dim: usize,
    pub quotient_dim: usize,
}

/// The weight-graded pieces `(R)(n)` of the ideal generated by a space of
/// quadratic relations, for `3 <= n <= n_max` (index 0 is arity 3).
///
/// The recursion grafts one generator onto a spanning set of `(R)(n-1)`:
/// below (replacing a leaf by a cherry) or at the root (adding a vertex
/// with one leaf child). Any tree containing a two-vertex relation pattern
/// decomposes this way by stripping a cherry or the root disjoint from the
/// pattern, so the recursion is complete. In the symmetric case the cherry
/// legs and the root leaf range over all label positions, which realizes
/// the S_n-orbit closure directly.
pub fn ideal_spans(
    fo: &FreeOperad,
    relations: &Subspace,
    n_max: usize,
) -> Result<Vec<Subspace>> {
    if relations.ambient() != w2_dim(fo.gen()) {
        return Err(Error::RelationOutsideAmbient);
    }
    if n_max < 3 {
        return Ok(Vec::new());
    }
    let span3 = fo.span(3)?;
    let mut current = Subspace::zero(span3.dim());
    for row in relations.basis_rows() {
        let v = Weight2Vector::new(fo.gen().clone(), row)?;
        current.insert(fo.w2_to_span3(&v)?);
    }
    let mut out = vec![current];
    for n in 4..=n_max {
        let prev = out.last().unwrap();
        let next = match fo.gen().kind() {
            Kind::Symmetric => grow_symmetric(fo, prev, n)?,
            Kind::Regular => grow_regular(fo, prev, n)?,
        };
        out.push(next);
    }
    Ok(out)
}

/// The single piece `(R)(n)`.
pub fn ideal_span(fo: &FreeOperad, relations: &Subspace, n: usize) -> Result<Subspace> {
    let mut spans = ideal_spans(fo, relations, n)?;
    spans.pop().ok_or(Error::ArityBound {
        arity: n,
        max: fo.max_arity(),
    })
}

/// Dimension table `dim P(n) = dim F(V)(n) - dim (R)(n)` for n = 1..n_max.
pub fn quotient_dims_from(
    fo: &FreeOperad,
    relations: &Subspace,
    n_max: usize,
) -> Result<Vec<DimRow>> {
    let spans = ideal_spans(fo, relations, n_max)?;
    let mut rows = Vec::new();
    for n in 1..=n_max {
        let free_dim = if n == 1 { 1 } else { fo.span(n)?.dim() };
        let ideal_dim = if n >= 3 { spans[n - 3].dim() } else { 0 };
        rows.push(DimRow {
            arity: n,
            free_dim,
            ideal_dim,
            quotient_dim: free_dim - ideal_dim,
        });
    }
    Ok(rows)
}

fn sparse_rows(prev: &Subspace) -> Vec<SpanVec> {
    prev.basis_rows()
        .into_iter()
        .map(|r| {
            r.into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .collect()
        })
        .collect()
}

fn grow_symmetric(fo: &FreeOperad, prev: &Subspace, n: usize) -> Result<Subspace> {
    let span_prev = fo.span(n - 1)?;
    let span_next = fo.span(n)?;
    let d = fo.gen().dim();
    let mut next = Subspace::zero(span_next.dim());
    for x in sparse_rows(prev) {
        // Cherry graft: replace leaf 1 by a generator cherry with legs at
        // labels (a, b); remaining leaves keep their relative order.
        for a in 1..=n {
            for b in a + 1..=n {
                let others: Vec<usize> =
                    (1..=n).filter(|&t| t != a && t != b).collect();
                for g in 0..d {
                    let cherry = Tree::node(g, Tree::Leaf(a), Tree::Leaf(b));
                    let row = transform_row(span_prev, span_next, &x, |t| {
                        subst_leaf(t, 1, &cherry, &|j| others[j - 2])
                    });
                    next.insert(row);
                }
            }
        }
        // Root graft: a new root vertex with one leaf child at label l.
        for l in 1..=n {
            let others: Vec<usize> = (1..=n).filter(|&t| t != l).collect();
            for g in 0..d {
                let row = transform_row(span_prev, span_next, &x, |t| {
                    Tree::node(g, t.relabel(&|j| others[j - 1]), Tree::Leaf(l))
                });
                next.insert(row);
            }
        }
    }
    Ok(next)
}

fn grow_regular(fo: &FreeOperad, prev: &Subspace, n: usize) -> Result<Subspace> {
    let span_next = fo.span(n)?;
    let d = fo.gen().dim();
    let mut next = Subspace::zero(span_next.dim());
    for x in sparse_rows(prev) {
        for g in 0..d {
            let corolla: SpanVec = vec![(corolla_index(fo, g)?, Rat::from_integer(1.into()))];
            for slot in 1..=n - 1 {
                let row = fo.compose(n - 1, &x, slot, 2, &corolla)?;
                next.insert(span_next.to_dense(&row));
            }
            for slot in 1..=2usize {
                let row = fo.compose(2, &corolla, slot, n - 1, &x)?;
                next.insert(span_next.to_dense(&row));
            }
        }
    }
    Ok(next)
}

fn corolla_index(fo: &FreeOperad, g: usize) -> Result<usize> {
    let span2 = fo.span(2)?;
    let v = span2.canonicalize(&Tree::corolla(g));
    debug_assert_eq!(v.len(), 1);
    Ok(v[0].0)
}

/// Applies a tree transformation linearly to a sparse row and returns the
/// canonicalized dense result in the target span.
fn transform_row(
    src: &FreeSpan,
    dst: &FreeSpan,
    x: &SpanVec,
    f: impl Fn(&Tree) -> Tree,
) -> Vec<Rat> {
    let mut acc: BTreeMap<usize, Rat> = BTreeMap::new();
    for (i, c) in x {
        let t = f(src.tree(*i));
        for (k, e) in dst.canonicalize(&t) {
            *acc.entry(k).or_insert_with(Rat::zero) += c * &e;
        }
    }
    let mut dense = vec![Rat::zero(); dst.dim()];
    for (k, c) in acc {
        dense[k] = c;
    }
    dense
}

/// Replaces the leaf labelled `target` by `repl` and relabels the other
/// leaves through `map`.
fn subst_leaf(t: &Tree, target: usize, repl: &Tree, map: &impl Fn(usize) -> usize) -> Tree {
    match t {
        Tree::Leaf(l) => {
            if *l == target {
                repl.clone()
            } else {
                Tree::Leaf(map(*l))
            }
        }
        Tree::Node { dec, left, right } => Tree::node(
            *dec,
            subst_leaf(left, target, repl, map),
            subst_leaf(right, target, repl, map),
        ),
    }
}
