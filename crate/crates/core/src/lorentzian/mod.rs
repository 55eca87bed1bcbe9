//! Exact tests for (denormalized) Lorentzian polynomials.
//!
//! A homogeneous `P` of degree `d` with nonnegative coefficients is Lorentzian
//! when its support is M-convex and, for every `α` with `|α| = d - 2`, the
//! quadratic form `∂^α P` has at most one positive eigenvalue. `P` is
//! denormalized Lorentzian when `N(P)` is, where `N` divides `c_α` by `α!`.

mod fixtures;
mod mpoly;
mod symmat;

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::checks::{Verdict, WITNESS_CAP};
use crate::error::{Error, Result};
use crate::families::AlexanderPoly;

pub use fixtures::{fixture, fixtures, Fixture};
pub use mpoly::{
    clear_denominators, denormalize, diagonal_restrict, homogenize, normalize, shift_to_poly,
    LaurentMPoly, MPoly,
};
pub use symmat::{positive_eigenvalues, SymMat};

use mpoly::multi_factorial;

/// M-convexity by the exchange property, checked exhaustively.
pub fn is_m_convex(support: &[Vec<u32>]) -> Result<Verdict> {
    let set: BTreeSet<&Vec<u32>> = support.iter().collect();
    let degs: BTreeSet<u32> = set.iter().map(|e| e.iter().sum()).collect();
    if degs.len() > 1 {
        return Err(Error::MixedDegree);
    }
    let mut w = crate::checks::Witnesses::default();
    for a in &set {
        for b in &set {
            for i in 0..a.len() {
                if a[i] <= b[i] {
                    continue;
                }
                let exchange = (0..a.len()).any(|j| {
                    if a[j] >= b[j] {
                        return false;
                    }
                    let mut a2 = (*a).clone();
                    a2[i] -= 1;
                    a2[j] += 1;
                    let mut b2 = (*b).clone();
                    b2[j] -= 1;
                    b2[i] += 1;
                    set.contains(&a2) && set.contains(&b2)
                });
                if !exchange {
                    let mut index: Vec<i64> = a.iter().map(|&x| i64::from(x)).collect();
                    index.extend(b.iter().map(|&x| i64::from(x)));
                    index.push(i as i64);
                    w.push(index, || {
                        format!("no exchange for alpha = {a:?}, beta = {b:?}, i = {i}")
                    });
                }
            }
        }
    }
    Ok(w.finish())
}

/// Multi-indices `α` in `m` variables with `|α| = d`, lexicographically ascending.
pub fn simplex(m: usize, d: u32) -> Vec<Vec<u32>> {
    fn rec(m: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if m == 1 {
            prefix.push(d);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for a in 0..=d {
            prefix.push(a);
            rec(m - 1, d - a, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if m > 0 {
        rec(m, d, &mut Vec::new(), &mut out);
    }
    out
}

/// Hessian of `∂^α p`: entry `(i, j)` is `c_β β!` with `β = α + e_i + e_j`.
pub fn hessian(p: &MPoly, alpha: &[u32]) -> SymMat {
    let m = p.nvars();
    let rows = (0..m)
        .map(|i| {
            (0..m)
                .map(|j| {
                    let mut beta = alpha.to_vec();
                    beta[i] += 1;
                    beta[j] += 1;
                    let c = p.coeff(&beta);
                    if c.is_zero() {
                        c
                    } else {
                        c * BigRational::from_integer(multi_factorial(&beta))
                    }
                })
                .collect()
        })
        .collect();
    SymMat::new(rows).expect("Hessians are symmetric")
}

/// A derivative whose Hessian has more than one positive eigenvalue.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HessianWitness {
    pub alpha: Vec<u32>,
    pub hessian: SymMat,
    pub positive: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LorentzVerdict {
    pub pass: bool,
    pub degree: u32,
    /// Exponents carrying a negative coefficient.
    pub negative: Vec<Vec<u32>>,
    pub m_convex: Verdict,
    /// Failing derivatives in lexicographic `α` order, at most [`WITNESS_CAP`].
    pub hessian_failures: Vec<HessianWitness>,
    pub hessian_failure_count: usize,
    pub hessians_checked: usize,
}

impl fmt::Display for LorentzVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "lorentzian: {}", if self.pass { "pass" } else { "fail" })?;
        writeln!(f, "degree: {}", self.degree)?;
        writeln!(f, "negative_coefficients: {}", self.negative.len())?;
        writeln!(f, "m_convex: {}", self.m_convex)?;
        writeln!(f, "hessians_checked: {}", self.hessians_checked)?;
        writeln!(f, "hessian_failures: {}", self.hessian_failure_count)?;
        for h in &self.hessian_failures {
            writeln!(
                f,
                "  alpha: {:?} positive_eigenvalues: {} hessian: {}",
                h.alpha, h.positive, h.hessian
            )?;
        }
        Ok(())
    }
}

/// Lorentzian test of a homogeneous polynomial; every failure is collected.
pub fn is_lorentzian(p: &MPoly) -> Result<LorentzVerdict> {
    let d = p.homogeneous_degree().ok_or(Error::NotHomogeneous)?;
    let negative: Vec<Vec<u32>> = p
        .terms()
        .filter(|(_, c)| c.is_negative())
        .map(|(e, _)| e.clone())
        .collect();
    let mut m_convex = Verdict::ok();
    let mut failures = Vec::new();
    let mut count = 0;
    let mut checked = 0;
    if d >= 2 {
        if d > 2 {
            m_convex = is_m_convex(&p.support())?;
        }
        for alpha in simplex(p.nvars(), d - 2) {
            let h = hessian(p, &alpha);
            checked += 1;
            let pos = positive_eigenvalues(&h);
            if pos > 1 {
                count += 1;
                if failures.len() < WITNESS_CAP {
                    failures.push(HessianWitness {
                        alpha,
                        hessian: h,
                        positive: pos,
                    });
                }
            }
        }
    }
    Ok(LorentzVerdict {
        pass: negative.is_empty() && m_convex.pass && count == 0,
        degree: d,
        negative,
        m_convex,
        hessian_failures: failures,
        hessian_failure_count: count,
        hessians_checked: checked,
    })
}

/// `is_lorentzian(normalize(p))`.
pub fn is_denorm_lorentzian(p: &MPoly) -> Result<LorentzVerdict> {
    is_lorentzian(&normalize(p)?)
}

/// `Homog(Δ(-t))` from the Alexander coefficients, as a polynomial in `(t, z)`.
pub fn alexander_homog(a: &AlexanderPoly) -> MPoly {
    let lp = LaurentMPoly::from_terms(
        1,
        a.coefficients()
            .into_iter()
            .enumerate()
            .map(|(k, c)| (vec![k as i64], BigRational::from_integer(c))),
    );
    homogenize(&shift_to_poly(&lp, &[-1]))
}

/// One-variable polynomial `Σ c_k t^k` from nonnegative integer coefficients.
pub fn univariate(coeffs: &[BigInt]) -> MPoly {
    MPoly::from_terms(
        1,
        coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| (vec![k as u32], BigRational::from_integer(c.clone()))),
    )
}
