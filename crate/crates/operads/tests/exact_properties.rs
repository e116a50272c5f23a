//! Property tests for the exact linear-algebra core and the series layer.

use operads::exact::{rat, rat_i, rref, Matrix, Rat, Subspace};
use operads::series::TruncatedSeries;
use proptest::prelude::*;

fn small_matrix() -> impl Strategy<Value = Matrix> {
    ((1usize..5, 1usize..6), proptest::collection::vec(-6i64..=6, 30)).prop_map(
        |((rows, cols), data)| {
            Matrix::from_fn(rows, cols, |r, c| rat_i(data[(r * cols + c) % data.len()]))
        },
    )
}

fn small_vectors(ambient: usize) -> impl Strategy<Value = Vec<Vec<Rat>>> {
    proptest::collection::vec(
        proptest::collection::vec((-5i64..=5, 1i64..=3), ambient),
        1..5,
    )
    .prop_map(|rows| {
        rows.into_iter()
            .map(|r| r.into_iter().map(|(p, q)| rat(p, q)).collect())
            .collect()
    })
}

proptest! {
    #[test]
    fn rref_is_idempotent(m in small_matrix()) {
        let (r1, p1) = rref(&m);
        if r1.rows() == 0 {
            prop_assert!(m.is_zero());
        } else {
            let (r2, p2) = rref(&r1);
            prop_assert_eq!(r1, r2);
            prop_assert_eq!(p1, p2);
        }
    }

    #[test]
    fn span_is_order_and_scaling_independent(rows in small_vectors(4), seed in 0u64..1000) {
        let a = Subspace::span(4, rows.clone());
        // shuffle deterministically by the seed and mix in a random sum
        let mut mixed = rows.clone();
        mixed.rotate_left((seed as usize) % rows.len().max(1));
        let total: Vec<Rat> = (0..4)
            .map(|c| rows.iter().fold(rat_i(0), |acc, r| acc + &r[c]))
            .collect();
        mixed.push(total);
        let b = Subspace::span(4, mixed);
        prop_assert_eq!(a, b);
    }

    #[test]
    fn double_orthogonal_is_identity(rows in small_vectors(4), signs in proptest::collection::vec(prop_oneof![Just(1i64), Just(-1)], 4)) {
        let form = Matrix::from_fn(4, 4, |r, c| if r == c { rat_i(signs[r]) } else { rat_i(0) });
        let u = Subspace::span(4, rows);
        let perp = u.orth_complement(&form).unwrap();
        prop_assert_eq!(u.dim() + perp.dim(), 4);
        let back = perp.orth_complement(&form).unwrap();
        prop_assert_eq!(back, u);
    }

    #[test]
    fn sum_and_intersection_dimensions(a in small_vectors(5), b in small_vectors(5)) {
        let u = Subspace::span(5, a);
        let w = Subspace::span(5, b);
        let s = u.sum(&w).unwrap();
        let i = u.intersect(&w).unwrap();
        prop_assert_eq!(s.dim() + i.dim(), u.dim() + w.dim());
        prop_assert!(s.contains_space(&u));
        prop_assert!(u.contains_space(&i));
    }

    #[test]
    fn series_inverse_round_trips(coeffs in proptest::collection::vec((-4i64..=4, 1i64..=3), 1..8)) {
        let mut v: Vec<Rat> = coeffs.into_iter().map(|(p, q)| rat(p, q)).collect();
        v[0] = rat_i(1); // unit linear term
        let f = TruncatedSeries::new(v);
        let g = f.comp_inverse().unwrap();
        let order = f.order();
        prop_assert_eq!(f.compose(&g), TruncatedSeries::x(order));
        prop_assert_eq!(g.compose(&f), TruncatedSeries::x(order));
        prop_assert_eq!(g.comp_inverse().unwrap(), f);
    }
}
