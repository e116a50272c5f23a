//! The classical v1..v12 labelling of the twelve weight-2 basis elements
//! for a two-dimensional generating space `m.k + m'.k` with the swap
//! action (`m' = m^(12)`), following the permutoassociahedron.
//!
//! With m written infix and m'(a, b) = m(b, a):
//!
//! | v    | word    | triple         | v    | word    | triple         |
//! |------|---------|----------------|------|---------|----------------|
//! | v1   | (xy)z   | (I,   m,  m )  | v7   | z(yx)   | (I,   m', m')  |
//! | v2   | x(yz)   | (II,  m', m )  | v8   | (zy)x   | (II,  m,  m')  |
//! | v3   | x(zy)   | (II,  m', m')  | v9   | (yz)x   | (II,  m,  m )  |
//! | v4   | (xz)y   | (III, m,  m')  | v10  | y(zx)   | (III, m', m )  |
//! | v5   | (zx)y   | (III, m,  m )  | v11  | y(xz)   | (III, m', m')  |
//! | v6   | z(xy)   | (I,   m', m )  | v12  | (yx)z   | (I,   m,  m')  |

use crate::exact::{fmt_rat, Rat};
use crate::freeop::{w2_index, GenSpace, Kind};
use num_traits::{One, Signed, Zero};

/// `(comp, root, upper)` triple of `v_i` (1-based `i`), for a generating
/// space with basis (m, m') where comp 0, 1, 2 are the types I, II, III.
pub const V_TRIPLES: [(usize, usize, usize); 12] = [
    (0, 0, 0), // v1  = (xy)z
    (1, 1, 0), // v2  = x(yz)
    (1, 1, 1), // v3  = x(zy)
    (2, 0, 1), // v4  = (xz)y
    (2, 0, 0), // v5  = (zx)y
    (0, 1, 0), // v6  = z(xy)
    (0, 1, 1), // v7  = z(yx)
    (1, 0, 1), // v8  = (zy)x
    (1, 0, 0), // v9  = (yz)x
    (2, 1, 0), // v10 = y(zx)
    (2, 1, 1), // v11 = y(xz)
    (0, 0, 1), // v12 = (yx)z
];

/// Whether the v-coordinates apply: symmetric kind, one generator with its
/// transpose (dim 2, swap action).
pub fn has_v_coordinates(gen: &GenSpace) -> bool {
    gen.kind() == Kind::Symmetric
        && gen.dim() == 2
        && gen
            .action12()
            .map(|a| {
                a.at(0, 0).is_zero()
                    && a.at(1, 1).is_zero()
                    && a.at(0, 1).is_one()
                    && a.at(1, 0).is_one()
            })
            .unwrap_or(false)
}

/// Weight-2 ambient index of `v_i` (1-based).
pub fn v_to_index(gen: &GenSpace, i: usize) -> usize {
    let (c, r, u) = V_TRIPLES[i - 1];
    w2_index(gen, c, r, u)
}

/// Renders a weight-2 coordinate vector in v-coordinates, e.g.
/// "v1 - v2 + v3 - v4".
pub fn format_v_linear(gen: &GenSpace, coords: &[Rat]) -> String {
    let mut parts: Vec<String> = Vec::new();
    for i in 1..=12 {
        let c = &coords[v_to_index(gen, i)];
        if c.is_zero() {
            continue;
        }
        let sign = if c < &Rat::zero() { "-" } else { "+" };
        let mag = {
            let a = c.abs();
            if a.is_one() {
                String::new()
            } else {
                fmt_rat(&a).to_string()
            }
        };
        if parts.is_empty() && sign == "+" {
            parts.push(format!("{mag}v{i}"));
        } else {
            parts.push(format!("{sign} {mag}v{i}"));
        }
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" ").replace("- +", "-")
    }
}
