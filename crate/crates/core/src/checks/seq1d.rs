use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::{Verdict, Witnesses};
use crate::error::{Error, Result};

/// One-variable checks on a nonnegative sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeqReport {
    pub log_concave: Verdict,
    pub no_internal_zeros: Verdict,
    pub trapezoidal: Verdict,
    pub unimodal: Verdict,
    pub generalized_log_concave: Verdict,
}

impl SeqReport {
    pub fn verdicts(&self) -> [(&'static str, &Verdict); 5] {
        [
            ("log_concave", &self.log_concave),
            ("no_internal_zeros", &self.no_internal_zeros),
            ("trapezoidal", &self.trapezoidal),
            ("unimodal", &self.unimodal),
            ("generalized_log_concave", &self.generalized_log_concave),
        ]
    }
}

impl fmt::Display for SeqReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (name, v) in self.verdicts() {
            writeln!(f, "{name}: {v}")?;
        }
        Ok(())
    }
}

fn idx(i: usize) -> i64 {
    i as i64
}

fn log_concave(a: &[BigInt]) -> Verdict {
    let mut w = Witnesses::default();
    for i in 1..a.len().saturating_sub(1) {
        if &a[i - 1] * &a[i + 1] > &a[i] * &a[i] {
            w.push(vec![idx(i)], || {
                format!(
                    "a[{}] * a[{}] = {} > a[{i}]^2 = {}",
                    i - 1,
                    i + 1,
                    &a[i - 1] * &a[i + 1],
                    &a[i] * &a[i]
                )
            });
        }
    }
    w.finish()
}

fn generalized_log_concave(a: &[BigInt]) -> Verdict {
    let mut w = Witnesses::default();
    for i in 0..a.len() {
        for k in 1..=i.min(a.len() - 1 - i) {
            let lhs = &a[i - k] * &a[i + k];
            if lhs > &a[i] * &a[i] {
                w.push(vec![idx(i), idx(k)], || {
                    format!(
                        "a[{}] * a[{}] = {lhs} > a[{i}]^2 = {}",
                        i - k,
                        i + k,
                        &a[i] * &a[i]
                    )
                });
            }
        }
    }
    w.finish()
}

/// Bounds of the nonzero part, `lo..hi`.
fn trimmed(a: &[BigInt]) -> (usize, usize) {
    let lo = a.iter().position(|x| !x.is_zero()).unwrap_or(a.len());
    let hi = a.iter().rposition(|x| !x.is_zero()).map_or(lo, |k| k + 1);
    (lo, hi)
}

fn no_internal_zeros(a: &[BigInt]) -> Verdict {
    let (lo, hi) = trimmed(a);
    let mut w = Witnesses::default();
    for i in lo..hi {
        if a[i].is_zero() {
            w.push(vec![idx(i)], || {
                format!("a[{i}] = 0 between nonzero entries")
            });
        }
    }
    w.finish()
}

/// Non-decreasing then non-increasing; a rise after the first descent is a violation.
fn unimodal(a: &[BigInt]) -> Verdict {
    let (lo, hi) = trimmed(a);
    let mut w = Witnesses::default();
    let mut descending = false;
    for i in lo + 1..hi {
        if a[i] < a[i - 1] {
            descending = true;
        } else if descending && a[i] > a[i - 1] {
            w.push(vec![idx(i)], || {
                format!("a[{i}] = {} rises after a descent", a[i])
            });
        }
    }
    w.finish()
}

/// Strictly increasing, then constant, then strictly decreasing.
fn trapezoidal(a: &[BigInt]) -> Verdict {
    #[derive(PartialEq, PartialOrd)]
    enum Phase {
        Up,
        Flat,
        Down,
    }
    let (lo, hi) = trimmed(a);
    let mut w = Witnesses::default();
    let mut phase = Phase::Up;
    for i in lo + 1..hi {
        let step = match a[i].cmp(&a[i - 1]) {
            std::cmp::Ordering::Greater => Phase::Up,
            std::cmp::Ordering::Equal => Phase::Flat,
            std::cmp::Ordering::Less => Phase::Down,
        };
        if step < phase {
            w.push(vec![idx(i)], || {
                format!(
                    "a[{}] -> a[{i}] = {} -> {} breaks the trapezoid",
                    i - 1,
                    a[i - 1],
                    a[i]
                )
            });
        } else {
            phase = step;
        }
    }
    w.finish()
}

/// Runs the one-variable checks. Entries must be nonnegative.
pub fn seq_checks_1d(a: &[BigInt]) -> Result<SeqReport> {
    if let Some(index) = a.iter().position(|x| x.is_negative()) {
        return Err(Error::NegativeEntry { index });
    }
    Ok(SeqReport {
        log_concave: log_concave(a),
        no_internal_zeros: no_internal_zeros(a),
        trapezoidal: trapezoidal(a),
        unimodal: unimodal(a),
        generalized_log_concave: generalized_log_concave(a),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn passes(v: &[i64]) -> [bool; 5] {
        let r = seq_checks_1d(&s(v)).unwrap();
        r.verdicts().map(|(_, v)| v.pass)
    }

    #[test]
    fn v8_10_fails_unimodality_and_log_concavity() {
        let r = seq_checks_1d(&s(&[1, 2, 4, 5, 4, 5, 3, 2, 1])).unwrap();
        assert!(!r.unimodal.pass);
        assert!(!r.log_concave.pass);
        assert!(r.log_concave.witnesses.iter().any(|w| w.index == vec![4]));
        assert!(r.no_internal_zeros.pass);
    }

    #[test]
    fn small_examples() {
        assert_eq!(passes(&[1, 1, 1]), [true; 5]);
        assert_eq!(passes(&[1, 2, 1]), [true; 5]);
        let [lc, nz, _, _, _] = passes(&[1, 0, 1]);
        assert!(!lc && !nz);
        assert_eq!(passes(&[]), [true; 5]);
    }

    #[test]
    fn trapezoid_shapes() {
        assert!(passes(&[1, 2, 3, 3, 3, 2])[2]);
        assert!(!passes(&[1, 2, 2, 3])[2]);
        assert!(!passes(&[3, 2, 2, 1])[2]);
        assert!(passes(&[0, 0, 3, 2, 1, 0])[2]);
        // unimodal but not trapezoidal
        let r = passes(&[1, 2, 2, 3, 1]);
        assert!(r[3] && !r[2]);
    }

    #[test]
    fn negative_entry_rejected() {
        assert_eq!(
            seq_checks_1d(&s(&[1, -1])).unwrap_err(),
            Error::NegativeEntry { index: 1 }
        );
    }
}
