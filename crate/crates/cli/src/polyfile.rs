//! Multivariate Laurent polynomials as text: a `# vars:` header, then one
//! term per line, exponents first and the rational coefficient last.
//!
//! ```text
//! # vars: p q
//! 2 2 1
//! -1 0 -1/2
//! ```

use std::collections::BTreeSet;
use std::path::Path;

use lgkit::lorentzian::LaurentMPoly;
use lgkit::{Error, Rational};

use crate::{read_text, CliError};

#[derive(Clone, Debug)]
pub struct PolyFile {
    pub vars: Vec<String>,
    pub poly: LaurentMPoly,
}

fn parse_err(line: usize, msg: impl std::fmt::Display) -> Error {
    Error::Parse(format!("line {line}: {msg}"))
}

impl PolyFile {
    pub fn parse(text: &str) -> Result<Self, Error> {
        let mut vars: Option<Vec<String>> = None;
        let mut terms = Vec::new();
        let mut seen = BTreeSet::new();
        for (k, raw) in text.lines().enumerate() {
            let n = k + 1;
            let line = raw.trim();
            if line.is_empty() {
                continue;
            }
            if let Some(header) = line.strip_prefix('#') {
                if let Some(("vars", v)) = header.split_once(':').map(|(a, b)| (a.trim(), b)) {
                    vars = Some(v.split_whitespace().map(String::from).collect());
                }
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            let Some((c, exps)) = fields.split_last() else {
                continue;
            };
            let m = vars
                .get_or_insert_with(|| (0..exps.len()).map(|i| format!("x{i}")).collect())
                .len();
            if exps.len() != m {
                return Err(parse_err(
                    n,
                    format!("expected {m} exponents and a coefficient"),
                ));
            }
            let e = exps
                .iter()
                .map(|x| {
                    x.parse::<i64>()
                        .map_err(|_| parse_err(n, format!("bad exponent `{x}`")))
                })
                .collect::<Result<Vec<i64>, Error>>()?;
            let c: Rational = c
                .parse()
                .map_err(|_| parse_err(n, format!("bad coefficient `{c}`")))?;
            if !seen.insert(e.clone()) {
                return Err(parse_err(n, format!("duplicate exponent {e:?}")));
            }
            terms.push((e, c));
        }
        let vars = vars.ok_or_else(|| Error::Parse("no variables and no terms".into()))?;
        Ok(PolyFile {
            poly: LaurentMPoly::from_terms(vars.len(), terms),
            vars,
        })
    }

    pub fn read(path: &Path) -> Result<Self, CliError> {
        let text = read_text(path)?;
        Self::parse(&text).map_err(|e| CliError::in_file(path, e))
    }
}
