//! Closed forms for the (2, n)-torus links and twist knots, and the
//! Alexander polynomial read off from LG by specialization.

use std::fmt;

use num_bigint::BigInt;

use crate::algebra::{CoeffTable, LPoly, Laurent1, SquareRoot};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyKind {
    Torus,
    Twist,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FamilySpec {
    pub kind: FamilyKind,
    pub n: i64,
}

impl FamilySpec {
    pub fn torus(n: i64) -> Self {
        FamilySpec {
            kind: FamilyKind::Torus,
            n,
        }
    }

    pub fn twist(n: i64) -> Self {
        FamilySpec {
            kind: FamilyKind::Twist,
            n,
        }
    }

    pub fn lg(&self) -> Result<CoeffTable> {
        match self.kind {
            FamilyKind::Torus => torus_lg(self.n),
            FamilyKind::Twist => twist_lg(self.n),
        }
    }

    /// A braid word whose closure is this family member, where one is known.
    pub fn braid_word(&self) -> Option<String> {
        match (self.kind, self.n) {
            (FamilyKind::Torus, n) if n >= 1 => Some(vec!["1"; n as usize].join(" ")),
            (FamilyKind::Twist, 0) => Some(String::new()),
            (FamilyKind::Twist, -1) => Some("n=3 1 -2 1 -2".into()),
            (FamilyKind::Twist, 1) => Some("-1 -1 -1".into()),
            (FamilyKind::Twist, 2) => Some("-1 -1 -1 -2 1 -2".into()),
            _ => None,
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            FamilyKind::Torus => write!(f, "torus({})", self.n),
            FamilyKind::Twist => write!(f, "twist({})", self.n),
        }
    }
}

fn p(terms: &[((i32, i32), i64)]) -> LPoly {
    LPoly::from_int_terms(terms.iter().copied())
}

fn sign(k: i64) -> i64 {
    if k.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// `LG(T(2, n))`, the closure of `σ_1^n`.
pub fn torus_lg(n: i64) -> Result<CoeffTable> {
    if n < 1 {
        return Err(Error::Domain(format!("torus link T(2,{n}) needs n >= 1")));
    }
    let mut terms: Vec<((i32, i32), i64)> = vec![((0, 0), sign(n - 1))];
    for k in 2..=n {
        for l in 0..=k - 2 {
            terms.push((((1 + l) as i32, (n - k) as i32), sign(k - 2 - l)));
        }
        for m in 0..=k - 1 {
            terms.push(((m as i32, (n - k + 1) as i32), -sign(k - 1 - m)));
        }
    }
    let mu = if n % 2 == 0 { 2 } else { 1 };
    CoeffTable::from_lpoly(&p(&terms), Some(mu))
}

/// `Σ_{k=0}^{len-1} weight(k) (t0 t1)^k`.
fn diagonal_sum(len: i64, weight: impl Fn(i64) -> i64) -> LPoly {
    LPoly::from_int_terms((0..len).map(|k| ((k as i32, k as i32), weight(k))))
}

/// `LG(K_n)` for the twist knot with `2n - 1` half twists.
pub fn twist_lg(n: i64) -> Result<CoeffTable> {
    let poly = match n {
        0 => LPoly::one(),
        _ if n < 0 => {
            let l = -n;
            let green = p(&[
                ((0, 0), 2),
                ((1, 0), -1),
                ((0, 1), -1),
                ((-1, 0), -1),
                ((0, -1), -1),
                ((1, 1), 1),
                ((-1, -1), 1),
            ]);
            let blue = p(&[
                ((0, 0), 4),
                ((1, 0), -2),
                ((0, 1), -2),
                ((-1, 0), -2),
                ((0, -1), -2),
                ((1, 1), 1),
                ((-1, -1), 1),
                ((1, -1), 1),
                ((-1, 1), 1),
            ]);
            let g = &green * &diagonal_sum(l, |_| 1);
            let b = &blue * &diagonal_sum(l, |k| 2 * l - 2 * k - 1);
            &(&LPoly::one() + &g) + &b
        }
        _ => {
            let red = p(&[
                ((2, 1), -1),
                ((1, 2), -1),
                ((2, 0), 1),
                ((0, 2), 1),
                ((1, 1), 2),
                ((1, 0), -1),
                ((0, 1), -1),
                ((0, 0), 1),
            ]);
            let green = p(&[
                ((2, 2), 1),
                ((2, 1), -3),
                ((1, 2), -3),
                ((2, 0), 2),
                ((0, 2), 2),
                ((1, 1), 5),
                ((1, 0), -3),
                ((0, 1), -3),
                ((0, 0), 2),
            ]);
            let blue = p(&[
                ((2, 2), 1),
                ((2, 1), -2),
                ((1, 2), -2),
                ((2, 0), 1),
                ((0, 2), 1),
                ((1, 1), 4),
                ((1, 0), -2),
                ((0, 1), -2),
                ((0, 0), 1),
            ]);
            let r = &LPoly::monomial(1, (n - 1) as i32, (n - 1) as i32) * &red;
            let g = &green * &diagonal_sum(n - 1, |_| 1);
            let b = &blue * &diagonal_sum(n - 1, |k| 2 * n - 2 * k - 3);
            (&(&r + &g) + &b).invert_vars()
        }
    };
    CoeffTable::from_lpoly(&poly, Some(1))
}

/// `Δ_L(t0^2)` as a Laurent polynomial in `t0`.
///
/// All exponents share one parity: even for knots, and for links with an odd
/// number of components; odd otherwise, where `Δ_L(t)` has half-integer powers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlexanderPoly {
    pub doubled: Laurent1,
}

impl AlexanderPoly {
    /// `Δ_L(t)`, when every exponent of the doubled form is even.
    pub fn halved(&self) -> Option<Laurent1> {
        if self
            .doubled
            .terms()
            .iter()
            .any(|(e, _)| e.rem_euclid(2) != 0)
        {
            return None;
        }
        Some(Laurent1::from_terms(
            self.doubled.terms().iter().map(|(e, c)| (e / 2, c.clone())),
        ))
    }

    /// Coefficients of `Δ_L` in order, gaps included, leading and trailing zeros excluded.
    pub fn coefficients(&self) -> Vec<BigInt> {
        match (self.doubled.min_exp(), self.doubled.max_exp()) {
            (Some(lo), Some(hi)) => (lo..=hi)
                .step_by(2)
                .map(|e| self.doubled.coeff(e))
                .collect(),
            _ => Vec::new(),
        }
    }
}

impl fmt::Display for AlexanderPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.halved() {
            Some(h) => write!(f, "{h}"),
            None => write!(f, "{} (in t^1/2)", self.doubled),
        }
    }
}

/// Specializes `t1 := -t0^-1`, giving `Δ_L(t0^2)` up to a unit.
pub fn alexander_from_lg(t: &CoeffTable) -> Result<AlexanderPoly> {
    let d = t.to_lpoly().specialize(-1, -1)?;
    let mut parities = d.terms().iter().map(|(e, _)| e.rem_euclid(2));
    if let Some(first) = parities.next() {
        if parities.any(|q| q != first) {
            return Err(Error::OddExponent);
        }
    }
    Ok(AlexanderPoly { doubled: d })
}

/// Result of testing that `LG(t0, t0^-1)` is a perfect square.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquareCheck {
    pub pass: bool,
    pub specialized: Laurent1,
    pub root: Option<SquareRoot>,
}

pub fn square_specialization_check(t: &CoeffTable) -> SquareCheck {
    let specialized = t
        .to_lpoly()
        .specialize(1, -1)
        .expect("tables have integer exponents");
    let root = specialized.is_perfect_square();
    SquareCheck {
        pass: root.is_some(),
        specialized,
        root,
    }
}
