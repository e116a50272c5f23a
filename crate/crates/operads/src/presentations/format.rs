//! Canonical JSON file format for presentations.
//!
//! ```json
//! {
//!   "name": "Com",
//!   "kind": "symmetric",
//!   "generators": { "dim": 1, "names": ["*"], "action12": [["1"]] },
//!   "relations": [
//!     [ {"comp": "I", "lower": 0, "upper": 0, "coeff": "1"},
//!       {"comp": "II", "lower": 0, "upper": 0, "coeff": "-1"} ]
//!   ]
//! }
//! ```
//!
//! `comp` is "I" | "II" | "III" for the symmetric kind and "1" | "2" for
//! the regular kind; `lower` is the root label index and `upper` the upper
//! label index, both 0-based into `names`; rationals are "p/q" strings
//! ("p" when the denominator is 1). Relations are stored as the rows of the
//! canonical (row-reduced) basis, so serialize -> parse is the identity on
//! canonical presentations.

use super::presentation::QuadPresentation;
use crate::error::{Error, Result};
use crate::exact::{fmt_rat, parse_rat, Matrix, Rat, Subspace};
use crate::freeop::{w2_dim, w2_index, w2_unindex, GenSpace, Kind};
use num_traits::Zero;
use serde::{Deserialize, Serialize};

#[derive(Debug, Serialize, Deserialize)]
pub struct PresentationFile {
    pub name: String,
    pub kind: String,
    pub generators: GeneratorsFile,
    pub relations: Vec<Vec<RelationTerm>>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct GeneratorsFile {
    pub dim: usize,
    pub names: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub action12: Option<Vec<Vec<String>>>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct RelationTerm {
    pub comp: String,
    pub lower: usize,
    pub upper: usize,
    pub coeff: String,
}

fn comp_name(kind: Kind, comp: usize) -> &'static str {
    match (kind, comp) {
        (Kind::Symmetric, 0) => "I",
        (Kind::Symmetric, 1) => "II",
        (Kind::Symmetric, 2) => "III",
        (Kind::Regular, 0) => "1",
        (Kind::Regular, 1) => "2",
        _ => unreachable!(),
    }
}

fn comp_index(kind: Kind, name: &str) -> Result<usize> {
    let out = match (kind, name) {
        (Kind::Symmetric, "I") => 0,
        (Kind::Symmetric, "II") => 1,
        (Kind::Symmetric, "III") => 2,
        (Kind::Regular, "1") => 0,
        (Kind::Regular, "2") => 1,
        _ => {
            return Err(Error::BadPresentationFile(format!(
                "invalid comp `{name}` for {} kind",
                kind.label()
            )))
        }
    };
    Ok(out)
}

pub fn to_file(p: &QuadPresentation) -> PresentationFile {
    let gen = p.gen();
    let relations = p
        .relations()
        .basis_rows()
        .into_iter()
        .map(|row| {
            row.iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| {
                    let (comp, lower, upper) = w2_unindex(gen, i);
                    RelationTerm {
                        comp: comp_name(gen.kind(), comp).to_string(),
                        lower,
                        upper,
                        coeff: fmt_rat(c),
                    }
                })
                .collect()
        })
        .collect();
    PresentationFile {
        name: p.name().to_string(),
        kind: gen.kind().label().to_string(),
        generators: GeneratorsFile {
            dim: gen.dim(),
            names: gen.names().to_vec(),
            action12: gen.action12().map(|a| {
                (0..a.rows())
                    .map(|r| (0..a.cols()).map(|c| fmt_rat(a.at(r, c))).collect())
                    .collect()
            }),
        },
        relations,
    }
}

pub fn from_file(f: &PresentationFile) -> Result<QuadPresentation> {
    let kind = match f.kind.as_str() {
        "symmetric" => Kind::Symmetric,
        "regular" => Kind::Regular,
        other => {
            return Err(Error::BadPresentationFile(format!(
                "unknown kind `{other}`"
            )))
        }
    };
    if f.generators.names.len() != f.generators.dim {
        return Err(Error::BadPresentationFile(
            "generator names do not match dim".into(),
        ));
    }
    let gen = match kind {
        Kind::Regular => GenSpace::regular(f.generators.names.clone()),
        Kind::Symmetric => {
            let rows = f.generators.action12.as_ref().ok_or_else(|| {
                Error::BadPresentationFile("symmetric kind requires action12".into())
            })?;
            let d = f.generators.dim;
            if rows.len() != d || rows.iter().any(|r| r.len() != d) {
                return Err(Error::BadPresentationFile("action12 must be dim x dim".into()));
            }
            let mut m = Matrix::zeros(d, d);
            for (r, row) in rows.iter().enumerate() {
                for (c, s) in row.iter().enumerate() {
                    m.set(r, c, parse_rat(s)?);
                }
            }
            GenSpace::symmetric(f.generators.names.clone(), m)?
        }
    };
    let ambient = w2_dim(&gen);
    let mut rel = Subspace::zero(ambient);
    for terms in &f.relations {
        let mut v = vec![Rat::zero(); ambient];
        for t in terms {
            if t.lower >= gen.dim() || t.upper >= gen.dim() {
                return Err(Error::BadPresentationFile(format!(
                    "label index out of range in relation term ({}, {})",
                    t.lower, t.upper
                )));
            }
            let comp = comp_index(kind, &t.comp)?;
            v[w2_index(&gen, comp, t.lower, t.upper)] += parse_rat(&t.coeff)?;
        }
        rel.insert(v);
    }
    QuadPresentation::new(f.name.clone(), gen, rel)
}

pub fn to_json(p: &QuadPresentation) -> Result<String> {
    Ok(serde_json::to_string_pretty(&to_file(p))?)
}

pub fn from_json(s: &str) -> Result<QuadPresentation> {
    let f: PresentationFile = serde_json::from_str(s)?;
    from_file(&f)
}
