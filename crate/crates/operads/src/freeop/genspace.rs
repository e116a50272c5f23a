use crate::error::{Error, Result};
use crate::exact::{rat_i, Matrix, Rat};
use num_traits::Zero;

/// Whether a generating space carries an S2 action (symmetric operads) or
/// none (regular operads, i.e. symmetrizations of non-symmetric ones).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Symmetric,
    Regular,
}

impl Kind {
    pub fn label(&self) -> &'static str {
        match self {
            Kind::Symmetric => "symmetric",
            Kind::Regular => "regular",
        }
    }
}

/// Finite-dimensional space of binary generators. For the symmetric kind the
/// transposition acts through `action12`, which must be an involution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenSpace {
    kind: Kind,
    names: Vec<String>,
    action12: Option<Matrix>,
}

impl GenSpace {
    pub fn symmetric(names: Vec<String>, action12: Matrix) -> Result<Self> {
        let d = names.len();
        assert!(d >= 1, "empty generating space");
        if action12.rows() != d || action12.cols() != d {
            return Err(Error::DimensionMismatch {
                expected: d,
                got: action12.rows(),
            });
        }
        if action12.mul(&action12)? != Matrix::identity(d) {
            return Err(Error::NotEquivariant);
        }
        Ok(GenSpace {
            kind: Kind::Symmetric,
            names,
            action12: Some(action12),
        })
    }

    pub fn regular(names: Vec<String>) -> Self {
        assert!(!names.is_empty(), "empty generating space");
        GenSpace {
            kind: Kind::Regular,
            names,
            action12: None,
        }
    }

    /// One-dimensional space with trivial action (e.g. the Com generator).
    pub fn trivial_1d(name: &str) -> Self {
        GenSpace::symmetric(vec![name.to_string()], Matrix::identity(1)).unwrap()
    }

    /// One-dimensional space with the sign action (e.g. the Lie bracket).
    pub fn sign_1d(name: &str) -> Self {
        GenSpace::symmetric(vec![name.to_string()], Matrix::from_i64(&[&[-1]])).unwrap()
    }

    /// The regular representation k[S2]: one operation with no symmetry,
    /// stored with its transpose `name'` and the swap action.
    pub fn regular_rep(name: &str) -> Self {
        GenSpace::symmetric(
            vec![name.to_string(), format!("{name}'")],
            Matrix::from_i64(&[&[0, 1], &[1, 0]]),
        )
        .unwrap()
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn action12(&self) -> Option<&Matrix> {
        self.action12.as_ref()
    }

    /// Expansion of `e_j^(12)` over the basis: pairs `(i, coeff)`.
    pub fn act12_col(&self, j: usize) -> Vec<(usize, Rat)> {
        match &self.action12 {
            None => vec![(j, rat_i(1))],
            Some(a) => (0..self.dim())
                .filter(|&i| !a.at(i, j).is_zero())
                .map(|i| (i, a.at(i, j).clone()))
                .collect(),
        }
    }

    /// Dual generating space. The symmetric kind picks up a sign twist:
    /// the action on the dual basis is `-A^T`. The regular kind is the
    /// plain dual basis.
    pub fn dual(&self) -> GenSpace {
        let names = self.names.iter().map(|n| dual_name(n)).collect();
        match &self.action12 {
            None => GenSpace::regular(names),
            Some(a) => GenSpace::symmetric(names, a.transpose().scale(&rat_i(-1))).unwrap(),
        }
    }

    /// Tensor product of generating spaces, basis ordered (i, j)
    /// lexicographically. For the symmetric kind, `sign_twist` multiplies
    /// the S2 action by -1 (tensoring with the sign representation).
    pub fn tensor(&self, other: &GenSpace, sign_twist: bool) -> Result<GenSpace> {
        if self.kind != other.kind {
            return Err(Error::KindMismatch {
                expected: self.kind.label(),
                got: other.kind.label(),
            });
        }
        let mut names = Vec::with_capacity(self.dim() * other.dim());
        for a in &self.names {
            for b in &other.names {
                names.push(format!("{a}(x){b}"));
            }
        }
        match (&self.action12, &other.action12) {
            (Some(a), Some(b)) => {
                let mut m = a.kron(b);
                if sign_twist {
                    m = m.scale(&rat_i(-1));
                }
                GenSpace::symmetric(names, m)
            }
            _ => Ok(GenSpace::regular(names)),
        }
    }
}

fn dual_name(n: &str) -> String {
    match n.strip_suffix('*') {
        Some(base) => base.to_string(),
        None => format!("{n}*"),
    }
}
