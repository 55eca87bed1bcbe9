//! Line-oriented coefficient tables.
//!
//! ```text
//! # vars: t0 t1
//! # offset_i: -1
//! # offset_j: -1
//! # mu: 1
//! # source: braid n=3 1 -2 1 -2
//! 0 0 2
//! 0 1 -3
//! ```
//!
//! Entry `i j c` is the coefficient of `t0^(offset_i + i) t1^(offset_j + j)`.
//! Unknown header keys and free-text comments are ignored.

use std::collections::BTreeMap;
use std::path::Path;

use lgkit::{ArbInt, CoeffTable, Error};

use crate::{read_text, write_atomic, CliError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableFile {
    pub vars: [String; 2],
    pub source: Option<String>,
    pub table: CoeffTable,
}

fn parse_err(line: usize, msg: impl std::fmt::Display) -> Error {
    Error::Parse(format!("line {line}: {msg}"))
}

impl TableFile {
    pub fn new(table: CoeffTable, source: Option<String>) -> Self {
        TableFile {
            vars: ["t0".into(), "t1".into()],
            source,
            table,
        }
    }

    pub fn parse(text: &str) -> Result<Self, Error> {
        let mut vars = ["t0".to_string(), "t1".to_string()];
        let (mut offset_i, mut offset_j) = (0i64, 0i64);
        let mut mu = None;
        let mut source = None;
        let mut entries: BTreeMap<(i64, i64), ArbInt> = BTreeMap::new();
        for (k, raw) in text.lines().enumerate() {
            let n = k + 1;
            let line = raw.trim();
            if line.is_empty() {
                continue;
            }
            if let Some(header) = line.strip_prefix('#') {
                let Some((key, value)) = header.split_once(':') else {
                    continue;
                };
                let value = value.trim();
                let int = |v: &str| {
                    v.parse::<i64>()
                        .map_err(|_| parse_err(n, format!("bad integer `{v}`")))
                };
                match key.trim() {
                    "vars" => {
                        let names: Vec<&str> = value.split_whitespace().collect();
                        let [a, b] = names[..] else {
                            return Err(parse_err(n, "expected two variable names"));
                        };
                        vars = [a.to_string(), b.to_string()];
                    }
                    "offset_i" => offset_i = int(value)?,
                    "offset_j" => offset_j = int(value)?,
                    "mu" if value == "none" => mu = None,
                    "mu" => {
                        mu = Some(
                            value
                                .parse::<u32>()
                                .map_err(|_| parse_err(n, format!("bad mu `{value}`")))?,
                        )
                    }
                    "source" => source = Some(value.to_string()),
                    _ => {}
                }
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            let [i, j, c] = fields[..] else {
                return Err(parse_err(n, format!("expected `i j coeff`, got `{line}`")));
            };
            let i: i64 = i
                .parse()
                .map_err(|_| parse_err(n, format!("bad index `{i}`")))?;
            let j: i64 = j
                .parse()
                .map_err(|_| parse_err(n, format!("bad index `{j}`")))?;
            let c: ArbInt = c
                .strip_prefix('+')
                .unwrap_or(c)
                .parse()
                .map_err(|_| parse_err(n, format!("bad coefficient `{c}`")))?;
            if entries.insert((i, j), c).is_some() {
                return Err(parse_err(n, format!("duplicate entry ({i}, {j})")));
            }
        }
        let table = CoeffTable::from_entries(
            entries
                .into_iter()
                .map(|((i, j), c)| ((i + offset_i, j + offset_j), c)),
            mu,
        );
        Ok(TableFile {
            vars,
            source,
            table,
        })
    }

    /// Canonical text: fixed header order, entries sorted, zero entries dropped.
    pub fn render(&self) -> String {
        let t = &self.table;
        let entries: Vec<((i64, i64), &ArbInt)> = t.entries().collect();
        let oi = entries.iter().map(|(p, _)| p.0).min().unwrap_or(0);
        let oj = entries.iter().map(|(p, _)| p.1).min().unwrap_or(0);
        let mut s = format!("# vars: {} {}\n", self.vars[0], self.vars[1]);
        s += &format!("# offset_i: {oi}\n# offset_j: {oj}\n");
        match t.mu {
            Some(mu) => s += &format!("# mu: {mu}\n"),
            None => s += "# mu: none\n",
        }
        if let Some(src) = &self.source {
            s += &format!("# source: {src}\n");
        }
        for ((i, j), c) in entries {
            s += &format!("{} {} {c}\n", i - oi, j - oj);
        }
        s
    }

    pub fn read(path: &Path) -> Result<Self, CliError> {
        let text = read_text(path)?;
        Self::parse(&text).map_err(|e| CliError::in_file(path, e))
    }

    pub fn write(&self, path: &Path) -> Result<(), CliError> {
        write_atomic(path, self.render().as_bytes())
    }

    /// `t0, t1 -> t0^-1, t1^-1`.
    pub fn invert_vars(&self) -> Self {
        TableFile {
            table: self.table.invert_vars(),
            ..self.clone()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const TREFOIL: &str = "\
# vars: t0 t1
# offset_i: 0
# offset_j: 0
# mu: 1
# source: braid n=2 1 1 1
0 0 1
0 1 -1
0 2 1
1 0 -1
1 1 2
1 2 -1
2 0 1
2 1 -1
";

    #[test]
    fn canonical_text_round_trips() {
        let f = TableFile::parse(TREFOIL).unwrap();
        assert_eq!(f.table.mu, Some(1));
        assert_eq!(f.source.as_deref(), Some("braid n=2 1 1 1"));
        assert_eq!(f.render(), TREFOIL);
    }

    #[test]
    fn offsets_and_order_are_normalized() {
        let f = TableFile::parse("# offset_i: -1\n1 1 5\n0 0 -2\n# comment\n0 1 +3\n").unwrap();
        assert_eq!(f.table.get(-1, 0), ArbInt::from(-2));
        assert_eq!(f.table.get(0, 1), ArbInt::from(5));
        assert_eq!(
            f.render(),
            "# vars: t0 t1\n# offset_i: -1\n# offset_j: 0\n# mu: none\n0 0 -2\n0 1 3\n1 1 5\n"
        );
    }

    #[test]
    fn big_coefficients_survive() {
        let big = "123456789012345678901234567890";
        let f = TableFile::parse(&format!("0 0 {big}\n")).unwrap();
        assert!(f.render().ends_with(&format!("0 0 {big}\n")));
    }

    #[test]
    fn malformed_input_is_rejected() {
        for bad in [
            "0 0 1\n0 0 2\n",
            "0 0\n",
            "0 x 1\n",
            "0 0 1.5\n",
            "# mu: -1\n",
        ] {
            let e = TableFile::parse(bad).unwrap_err();
            assert_eq!(e.code(), "PARSE_ERROR", "{bad:?}");
        }
        assert!(TableFile::parse("0 0 1\n0 0 2\n")
            .unwrap_err()
            .to_string()
            .contains("duplicate entry (0, 0)"));
    }

    #[test]
    fn inversion_is_an_involution() {
        let f = TableFile::parse(TREFOIL).unwrap();
        assert_ne!(f.invert_vars(), f);
        assert_eq!(f.invert_vars().invert_vars(), f);
    }
}
