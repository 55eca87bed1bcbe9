//! `key: value` reports. Keys are emitted in insertion order, which every
//! command fixes, so two runs on the same input differ only in `elapsed-ms`.

use std::fmt::Write as _;
use std::time::Duration;

use lgkit::checks::{SeqReport, Verdict};
use lgkit::lorentzian::LorentzVerdict;
use sha2::{Digest, Sha256};

pub const SCHEMA: &str = "lgkit-report/1";

#[derive(Clone, Debug, Default)]
pub struct Report {
    lines: Vec<(String, String)>,
    pass: bool,
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes)
        .iter()
        .fold(String::new(), |mut s, b| {
            let _ = write!(s, "{b:02x}");
            s
        })
}

impl Report {
    pub fn new(command: &str, input: &str, canonical: &[u8]) -> Self {
        let mut r = Report {
            lines: Vec::new(),
            pass: true,
        };
        r.field("schema", SCHEMA);
        r.field("command", command);
        r.field("input", input);
        r.field("input-sha256", sha256_hex(canonical));
        r
    }

    pub fn field(&mut self, key: &str, value: impl ToString) {
        self.lines.push((key.to_string(), value.to_string()));
    }

    pub fn fail(&mut self) {
        self.pass = false;
    }

    pub fn pass(&self) -> bool {
        self.pass
    }

    pub fn verdict(&mut self, name: &str, v: &Verdict) {
        self.field(name, if v.pass { "pass" } else { "fail" });
        if !v.pass {
            self.fail();
            self.field(&format!("{name}.violations"), v.total);
            for w in &v.witnesses {
                self.field(&format!("{name}.witness"), w);
            }
        }
    }

    pub fn seq(&mut self, r: &SeqReport) {
        for (name, v) in r.verdicts() {
            self.verdict(&format!("seq.{name}"), v);
        }
    }

    pub fn lorentz(&mut self, v: &LorentzVerdict) {
        self.field("lorentzian", if v.pass { "pass" } else { "fail" });
        if !v.pass {
            self.fail();
        }
        self.field("lorentzian.degree", v.degree);
        self.field("lorentzian.negative-coefficients", v.negative.len());
        for e in &v.negative {
            self.field("lorentzian.negative", format!("{e:?}"));
        }
        self.field("lorentzian.m-convex", &v.m_convex);
        for w in &v.m_convex.witnesses {
            self.field("lorentzian.m-convex.witness", w);
        }
        self.field("lorentzian.hessians-checked", v.hessians_checked);
        self.field("lorentzian.hessian-failures", v.hessian_failure_count);
        for h in &v.hessian_failures {
            self.field(
                "lorentzian.hessian",
                format!("alpha {:?} positive {} {}", h.alpha, h.positive, h.hessian),
            );
        }
    }

    pub fn render(&self, elapsed: Option<Duration>) -> String {
        let mut s = String::new();
        for (k, v) in &self.lines {
            let _ = writeln!(s, "{k}: {v}");
        }
        let _ = writeln!(s, "result: {}", if self.pass { "pass" } else { "fail" });
        if let Some(d) = elapsed {
            let _ = writeln!(s, "elapsed-ms: {}", d.as_millis());
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digest_of_empty_input() {
        assert_eq!(
            sha256_hex(b""),
            "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855"
        );
    }

    #[test]
    fn failing_verdict_marks_report() {
        let mut r = Report::new("check", "x", b"");
        r.verdict("conjecture.sign", &Verdict::ok());
        assert!(r.pass());
        let bad = Verdict {
            pass: false,
            witnesses: Vec::new(),
            total: 3,
        };
        r.verdict("conjecture.zeros", &bad);
        assert!(!r.pass());
        let text = r.render(None);
        assert!(text.starts_with("schema: lgkit-report/1\ncommand: check\n"));
        assert!(text.contains("conjecture.zeros: fail\nconjecture.zeros.violations: 3\n"));
        assert!(text.ends_with("result: fail\n"));
    }
}
