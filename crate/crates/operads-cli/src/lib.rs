//! Shared plumbing of the `operads` command-line tool: presentation
//! references, generator-map files and display helpers. The reproduction
//! suite lives in [`suite`] and is reused by the acceptance tests.

pub mod suite;

use operads::exact::{fmt_rat, parse_rat, Matrix};
use operads::presentations::{
    format_v_linear, has_v_coordinates, to_json, zoo_get, QuadPresentation,
};
use operads::{Error, Result};
use std::path::Path;

/// Resolves a presentation reference: `zoo:Name` or a file path.
pub fn resolve_ref(s: &str) -> Result<QuadPresentation> {
    if let Some(name) = s.strip_prefix("zoo:") {
        return zoo_get(name);
    }
    let text = std::fs::read_to_string(s)?;
    operads::presentations::from_json(&text)
}

/// Loads a generator map: a JSON 2D array of rational strings
/// (rows of the matrix carrying source coordinates to target coordinates).
pub fn load_map(path: &Path) -> Result<Matrix> {
    let text = std::fs::read_to_string(path)?;
    let rows: Vec<Vec<String>> = serde_json::from_str(&text)?;
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, |r| r.len());
    if nrows == 0 || rows.iter().any(|r| r.len() != ncols) {
        return Err(Error::BadPresentationFile(
            "generator map must be a rectangular 2D array".into(),
        ));
    }
    let mut m = Matrix::zeros(nrows, ncols);
    for (r, row) in rows.iter().enumerate() {
        for (c, s) in row.iter().enumerate() {
            m.set(r, c, parse_rat(s)?);
        }
    }
    Ok(m)
}

/// Human-readable presentation summary with the relation list, printed in
/// v-coordinates when the generators are one operation plus its transpose.
pub fn presentation_summary(p: &QuadPresentation) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "{}  [{} kind, {} generators: {}]\n",
        p.name(),
        p.kind().label(),
        p.gen().dim(),
        p.gen().names().join(", ")
    ));
    out.push_str(&format!(
        "relation space: dim {} of {}\n",
        p.relation_dim(),
        p.relations().ambient()
    ));
    if has_v_coordinates(p.gen()) {
        for row in p.relations().basis_rows() {
            out.push_str(&format!("  {} = 0\n", format_v_linear(p.gen(), &row)));
        }
    } else {
        for row in p.relations().basis_rows() {
            let terms: Vec<String> = row
                .iter()
                .enumerate()
                .filter(|(_, c)| !num_traits::Zero::is_zero(*c))
                .map(|(i, c)| {
                    let (comp, root, upper) = operads::freeop::w2_unindex(p.gen(), i);
                    let comp_name = match (p.kind(), comp) {
                        (operads::Kind::Symmetric, 0) => "I",
                        (operads::Kind::Symmetric, 1) => "II",
                        (operads::Kind::Symmetric, 2) => "III",
                        (operads::Kind::Regular, 0) => "1",
                        _ => "2",
                    };
                    format!(
                        "{}·({} o_{} {})",
                        fmt_rat(c),
                        p.gen().names()[root],
                        comp_name,
                        p.gen().names()[upper]
                    )
                })
                .collect();
            out.push_str(&format!("  {} = 0\n", terms.join(" + ")));
        }
    }
    out
}

/// Writes a presentation to a file or stdout in the canonical format.
pub fn emit_presentation(p: &QuadPresentation, out: Option<&Path>, json: bool) -> Result<()> {
    if let Some(path) = out {
        std::fs::write(path, to_json(p)?)?;
        return Ok(());
    }
    if json {
        println!("{}", to_json(p)?);
    } else {
        print!("{}", presentation_summary(p));
    }
    Ok(())
}

/// Result of an `--expect` comparison.
pub enum ExpectOutcome {
    ExactlyEqual,
    Different(String),
    /// no map given: invariants only
    InvariantsMatch,
    InvariantsDiffer(String),
}

/// Compares a computed presentation against an expected one, exactly when a
/// generator map is supplied, otherwise by invariants (relation dimension
/// and quotient dimensions up to arity 4).
pub fn compare_expect(
    computed: &QuadPresentation,
    expected: &QuadPresentation,
    gen_map: Option<&Matrix>,
) -> Result<ExpectOutcome> {
    match gen_map {
        Some(m) => {
            if operads::presentations::presentation_equal(computed, expected, m)? {
                Ok(ExpectOutcome::ExactlyEqual)
            } else {
                Ok(ExpectOutcome::Different(
                    "relation subspaces differ under the supplied map".into(),
                ))
            }
        }
        None => {
            if computed.kind() != expected.kind() {
                return Ok(ExpectOutcome::InvariantsDiffer("kinds differ".into()));
            }
            if computed.gen().dim() != expected.gen().dim() {
                return Ok(ExpectOutcome::InvariantsDiffer(format!(
                    "generator dims {} vs {}",
                    computed.gen().dim(),
                    expected.gen().dim()
                )));
            }
            if computed.relation_dim() != expected.relation_dim() {
                return Ok(ExpectOutcome::InvariantsDiffer(format!(
                    "relation dims {} vs {}",
                    computed.relation_dim(),
                    expected.relation_dim()
                )));
            }
            let a = computed.quotient_dims(4)?;
            let b = expected.quotient_dims(4)?;
            if a != b {
                return Ok(ExpectOutcome::InvariantsDiffer(
                    "quotient dimension tables differ".into(),
                ));
            }
            Ok(ExpectOutcome::InvariantsMatch)
        }
    }
}
