//! Coefficient-table properties: alternating signs, no interior zeros,
//! 2d log-concavity and 2d unimodality, plus their one-variable analogues.

mod hull;
mod seq1d;

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::algebra::CoeffTable;
use crate::error::{Error, Result};

pub use hull::{convex_hull, Hull, Point};
pub use seq1d::{seq_checks_1d, SeqReport};

/// Maximum number of witnesses kept per verdict.
pub const WITNESS_CAP: usize = 16;

/// A violation: its index tuple and the instantiated inequality.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Witness {
    pub index: Vec<i64>,
    pub detail: String,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let idx: Vec<String> = self.index.iter().map(i64::to_string).collect();
        write!(f, "({}) {}", idx.join(", "), self.detail)
    }
}

/// Outcome of a check. `pass` holds iff `total == 0`; `witnesses` keeps the
/// lexicographically smallest violations, at most [`WITNESS_CAP`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub pass: bool,
    pub witnesses: Vec<Witness>,
    pub total: usize,
}

impl Verdict {
    pub fn ok() -> Self {
        Verdict {
            pass: true,
            witnesses: Vec::new(),
            total: 0,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", if self.pass { "pass" } else { "fail" })?;
        if !self.pass {
            write!(f, " ({} violations)", self.total)?;
        }
        Ok(())
    }
}

/// Collects witnesses, keeping only the smallest few.
#[derive(Debug, Default)]
pub(crate) struct Witnesses {
    kept: BTreeSet<Witness>,
    total: usize,
}

impl Witnesses {
    pub(crate) fn push(&mut self, index: Vec<i64>, detail: impl FnOnce() -> String) {
        self.total += 1;
        if self.kept.len() == WITNESS_CAP {
            let last = self.kept.last().expect("cap is nonzero");
            if index >= last.index {
                return;
            }
        }
        self.kept.insert(Witness {
            index,
            detail: detail(),
        });
        if self.kept.len() > WITNESS_CAP {
            self.kept.pop_last();
        }
    }

    pub(crate) fn finish(self) -> Verdict {
        Verdict {
            pass: self.total == 0,
            witnesses: self.kept.into_iter().collect(),
            total: self.total,
        }
    }
}

fn support(t: &CoeffTable) -> Vec<Point> {
    t.entries().map(|(p, _)| p).collect()
}

/// Lattice points of `Conv(points)` not in `points`, which must be sorted.
fn holes(points: &[Point]) -> Vec<Point> {
    let Ok(h) = convex_hull(points) else {
        return Vec::new();
    };
    h.lattice_points()
        .into_iter()
        .filter(|p| points.binary_search(p).is_err())
        .collect()
}

/// Every lattice point in the convex hull of the support has a nonzero coefficient.
pub fn interior_zeros(t: &CoeffTable) -> Result<Verdict> {
    if t.is_zero() {
        return Err(Error::EmptyTable);
    }
    let mut w = Witnesses::default();
    for (i, j) in holes(&support(t)) {
        w.push(vec![i, j], || {
            format!("a[{i},{j}] = 0 inside the hull of the support")
        });
    }
    Ok(w.finish())
}

/// `a_ij = (-1)^(mu + i + j + 1) |a_ij|` for every nonzero entry.
pub fn sign_pattern(t: &CoeffTable) -> Result<Verdict> {
    let mu = t.mu.ok_or(Error::MissingMu)?;
    let mut w = Witnesses::default();
    for ((i, j), c) in t.entries() {
        let want_positive = (i64::from(mu) + i + j + 1).rem_euclid(2) == 0;
        if c.is_positive() != want_positive {
            w.push(vec![i, j], || {
                let s = if want_positive { '+' } else { '-' };
                format!("a[{i},{j}] = {c}, expected sign {s}")
            });
        }
    }
    Ok(w.finish())
}

enum Mags {
    Small(Vec<u128>),
    Big(Vec<BigInt>),
}

/// `|a_p| |a_q| <= a_c^2` whenever `p + q = 2c`, for all `p`, `q` in the plane.
///
/// Only pairs of support points matter: any other pair has a zero factor.
pub fn log_concave_2d(t: &CoeffTable) -> Verdict {
    let pts = support(t);
    let mags = {
        let abs: Vec<BigInt> = t.entries().map(|(_, c)| c.abs()).collect();
        match abs
            .iter()
            .map(|c| c.to_u64().map(u128::from))
            .collect::<Option<Vec<_>>>()
        {
            Some(v) => Mags::Small(v),
            None => Mags::Big(abs),
        }
    };
    let mut w = Witnesses::default();
    for (a, p) in pts.iter().enumerate() {
        for (b, q) in pts.iter().enumerate().skip(a + 1) {
            let (sx, sy) = (p.0 + q.0, p.1 + q.1);
            if sx % 2 != 0 || sy % 2 != 0 {
                continue;
            }
            let c = (sx / 2, sy / 2);
            let k = (q.0 - c.0, q.1 - c.1);
            let centre = pts.binary_search(&c).ok();
            let bad = match &mags {
                Mags::Small(m) => {
                    let mc = centre.map_or(0, |x| m[x]);
                    m[a] * m[b] > mc * mc
                }
                Mags::Big(m) => {
                    let mc = centre.map_or_else(BigInt::zero, |x| m[x].clone());
                    &m[a] * &m[b] > &mc * &mc
                }
            };
            if bad {
                w.push(vec![c.0, c.1, k.0, k.1], || {
                    format!(
                        "|a[{},{}]| * |a[{},{}]| = {} > a[{},{}]^2 = {}",
                        q.0,
                        q.1,
                        p.0,
                        p.1,
                        t.get(q.0, q.1).abs() * t.get(p.0, p.1).abs(),
                        c.0,
                        c.1,
                        t.get(c.0, c.1).pow(2)
                    )
                });
            }
        }
    }
    w.finish()
}

/// For each attained `K = |a_ij|`, the super-level set `{|a_ij| >= K}` has no interior zeros.
pub fn unimodal_2d(t: &CoeffTable) -> Verdict {
    let entries: Vec<(Point, BigInt)> = t.entries().map(|(p, c)| (p, c.abs())).collect();
    let levels: BTreeSet<&BigInt> = entries.iter().map(|(_, c)| c).collect();
    let mut w = Witnesses::default();
    for k in levels {
        let pts: Vec<Point> = entries
            .iter()
            .filter(|(_, c)| c >= k)
            .map(|(p, _)| *p)
            .collect();
        let kk = k.to_i64().unwrap_or(i64::MAX);
        for (i, j) in holes(&pts) {
            w.push(vec![kk, i, j], || {
                format!(
                    "|a[{i},{j}]| = {} < {k} inside the hull of the level set",
                    t.get(i, j).abs()
                )
            });
        }
    }
    w.finish()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Conjecture {
    Sign,
    Zeros,
    LogConcave2d,
    Unimodal2d,
}

impl Conjecture {
    pub const ALL: [Conjecture; 4] = [
        Conjecture::Sign,
        Conjecture::Zeros,
        Conjecture::LogConcave2d,
        Conjecture::Unimodal2d,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Conjecture::Sign => "sign",
            Conjecture::Zeros => "zeros",
            Conjecture::LogConcave2d => "logconcave2d",
            Conjecture::Unimodal2d => "unimodal2d",
        }
    }

    pub fn check(&self, t: &CoeffTable) -> Result<Verdict> {
        match self {
            Conjecture::Sign => sign_pattern(t),
            Conjecture::Zeros => interior_zeros(t),
            Conjecture::LogConcave2d => Ok(log_concave_2d(t)),
            Conjecture::Unimodal2d => Ok(unimodal_2d(t)),
        }
    }
}

impl std::str::FromStr for Conjecture {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Conjecture::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown check `{s}`")))
    }
}

/// Runs every 2d check; the verdicts come in [`Conjecture::ALL`] order.
pub fn check_all(t: &CoeffTable) -> Result<Vec<(Conjecture, Verdict)>> {
    Conjecture::ALL
        .into_iter()
        .map(|c| c.check(t).map(|v| (c, v)))
        .collect()
}
