use std::collections::BTreeMap;
use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::algebra::{LPoly, Laurent1};
use crate::error::{Error, Result};

/// Polynomial in `m` variables with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, BigRational>,
}

/// Laurent polynomial in `m` variables with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentMPoly {
    nvars: usize,
    terms: BTreeMap<Vec<i64>, BigRational>,
}

fn accumulate<K: Ord>(
    nvars: usize,
    terms: impl IntoIterator<Item = (K, BigRational)>,
    len: impl Fn(&K) -> usize,
) -> BTreeMap<K, BigRational> {
    let mut acc: BTreeMap<K, BigRational> = BTreeMap::new();
    for (e, c) in terms {
        assert_eq!(len(&e), nvars, "exponent vector length");
        *acc.entry(e).or_insert_with(BigRational::zero) += c;
    }
    acc.retain(|_, c| !c.is_zero());
    acc
}

pub(crate) fn factorial(k: u32) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, x| acc * BigInt::from(x))
}

/// `α! = Π α_i!`
pub(crate) fn multi_factorial(alpha: &[u32]) -> BigInt {
    alpha
        .iter()
        .fold(BigInt::one(), |acc, &a| acc * factorial(a))
}

impl MPoly {
    pub fn zero(nvars: usize) -> Self {
        MPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms<I>(nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<u32>, BigRational)>,
    {
        MPoly {
            nvars,
            terms: accumulate(nvars, terms, Vec::len),
        }
    }

    pub fn from_int_terms(nvars: usize, terms: &[(&[u32], i64)]) -> Self {
        Self::from_terms(
            nvars,
            terms
                .iter()
                .map(|(e, c)| (e.to_vec(), BigRational::from_integer((*c).into()))),
        )
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigRational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, alpha: &[u32]) -> BigRational {
        self.terms
            .get(alpha)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn support(&self) -> Vec<Vec<u32>> {
        self.terms.keys().cloned().collect()
    }

    /// Largest total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// The common total degree of all terms, if there is one. Zero has degree 0.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<u32>());
        match degs.next() {
            None => Some(0),
            Some(d) => degs.all(|x| x == d).then_some(d),
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneous_degree().is_some()
    }

    fn require_homogeneous(&self) -> Result<u32> {
        self.homogeneous_degree().ok_or(Error::NotHomogeneous)
    }

    /// `p / w_k`, when `w_k` divides every term.
    pub fn divide_by_var(&self, k: usize) -> Option<MPoly> {
        if self.terms.keys().any(|e| e[k] == 0) {
            return None;
        }
        Some(MPoly::from_terms(
            self.nvars,
            self.terms.iter().map(|(e, c)| {
                let mut e = e.clone();
                e[k] -= 1;
                (e, c.clone())
            }),
        ))
    }

    pub fn display_with(&self, names: &[&str]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let mag = c.abs();
            let mut factors: Vec<String> = Vec::new();
            for (v, &a) in e.iter().enumerate() {
                let name = names
                    .get(v)
                    .map_or_else(|| format!("w{v}"), |s| s.to_string());
                match a {
                    0 => {}
                    1 => factors.push(name),
                    _ => factors.push(format!("{name}^{a}")),
                }
            }
            let body = match (factors.is_empty(), mag.is_one()) {
                (true, _) => mag.to_string(),
                (false, true) => factors.join("*"),
                (false, false) => format!("{mag}*{}", factors.join("*")),
            };
            match (k, c.is_negative()) {
                (0, true) => out.push_str(&format!("-{body}")),
                (0, false) => out.push_str(&body),
                (_, true) => out.push_str(&format!(" - {body}")),
                (_, false) => out.push_str(&format!(" + {body}")),
            }
        }
        out
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with(&[]))
    }
}

impl Mul for &MPoly {
    type Output = MPoly;

    fn mul(self, rhs: &MPoly) -> MPoly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut acc = Vec::with_capacity(self.len() * rhs.len());
        for (a, c) in &self.terms {
            for (b, d) in &rhs.terms {
                let e: Vec<u32> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                acc.push((e, c * d));
            }
        }
        MPoly::from_terms(self.nvars, acc)
    }
}

impl LaurentMPoly {
    pub fn from_terms<I>(nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<i64>, BigRational)>,
    {
        LaurentMPoly {
            nvars,
            terms: accumulate(nvars, terms, Vec::len),
        }
    }

    pub fn from_int_terms(nvars: usize, terms: &[(&[i64], i64)]) -> Self {
        Self::from_terms(
            nvars,
            terms
                .iter()
                .map(|(e, c)| (e.to_vec(), BigRational::from_integer((*c).into()))),
        )
    }

    /// Two-variable view of an integer-exponent `LPoly` in `(t0, t1)`.
    pub fn from_lpoly(p: &LPoly) -> Result<Self> {
        if !p.has_integer_exponents() {
            return Err(Error::HalfExponent(format!("{p}")));
        }
        Ok(Self::from_terms(
            2,
            p.terms().iter().map(|((a, b), c)| {
                (
                    vec![i64::from(a / 2), i64::from(b / 2)],
                    BigRational::from_integer(c.clone()),
                )
            }),
        ))
    }

    pub fn from_laurent1(p: &Laurent1) -> Self {
        Self::from_terms(
            1,
            p.terms()
                .iter()
                .map(|(e, c)| (vec![*e], BigRational::from_integer(c.clone()))),
        )
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &BigRational)> {
        self.terms.iter()
    }
}

/// Applies `w_i -> s_i w_i` and multiplies by the unit `±w^k` that makes every
/// minimal exponent zero and leaves some coefficient positive. Missing signs
/// count as `+`.
pub fn shift_to_poly(p: &LaurentMPoly, signs: &[i8]) -> MPoly {
    substitute(p, signs, |lo| lo)
}

/// Like [`shift_to_poly`], but only clears negative exponents: variables
/// dividing every term are kept.
pub fn clear_denominators(p: &LaurentMPoly, signs: &[i8]) -> MPoly {
    substitute(p, signs, |lo| lo.min(0))
}

fn substitute(p: &LaurentMPoly, signs: &[i8], shift: impl Fn(i64) -> i64) -> MPoly {
    let m = p.nvars;
    let mins: Vec<i64> = (0..m)
        .map(|v| shift(p.terms.keys().map(|e| e[v]).min().unwrap_or(0)))
        .collect();
    let out = MPoly::from_terms(
        m,
        p.terms.iter().map(|(e, c)| {
            let flips: i64 = e
                .iter()
                .zip(0..)
                .filter(|&(_, v)| signs.get(v).is_some_and(|&s| s < 0))
                .map(|(x, _)| x.rem_euclid(2))
                .sum();
            let c = if flips % 2 == 1 { -c } else { c.clone() };
            let e: Vec<u32> = e.iter().zip(&mins).map(|(x, lo)| (x - lo) as u32).collect();
            (e, c)
        }),
    );
    if !out.is_zero() && out.terms().all(|(_, c)| c.is_negative()) {
        return MPoly::from_terms(m, out.terms().map(|(e, c)| (e.clone(), -c)));
    }
    out
}

/// Appends a variable `z` and pads every term to the top total degree.
pub fn homogenize(p: &MPoly) -> MPoly {
    let d = p.degree().unwrap_or(0);
    MPoly::from_terms(
        p.nvars + 1,
        p.terms.iter().map(|(e, c)| {
            let mut e = e.clone();
            let deg: u32 = e.iter().sum();
            e.push(d - deg);
            (e, c.clone())
        }),
    )
}

/// `c_α -> c_α / α!`
pub fn normalize(p: &MPoly) -> Result<MPoly> {
    p.require_homogeneous()?;
    Ok(MPoly::from_terms(
        p.nvars,
        p.terms
            .iter()
            .map(|(e, c)| (e.clone(), c / BigRational::from_integer(multi_factorial(e)))),
    ))
}

/// `c_α -> c_α α!`, the inverse of [`normalize`].
pub fn denormalize(p: &MPoly) -> Result<MPoly> {
    p.require_homogeneous()?;
    Ok(MPoly::from_terms(
        p.nvars,
        p.terms
            .iter()
            .map(|(e, c)| (e.clone(), c * BigRational::from_integer(multi_factorial(e)))),
    ))
}

/// Substitutes `w_m := w_{m-1}`.
pub fn diagonal_restrict(p: &MPoly) -> Result<MPoly> {
    p.require_homogeneous()?;
    if p.nvars < 2 {
        return Err(Error::Domain(
            "diagonal restriction needs two variables".into(),
        ));
    }
    Ok(MPoly::from_terms(
        p.nvars - 1,
        p.terms.iter().map(|(e, c)| {
            let mut e = e.clone();
            let last = e.pop().expect("two variables");
            *e.last_mut().expect("two variables") += last;
            (e, c.clone())
        }),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn shift_examples() {
        let delta = LaurentMPoly::from_int_terms(1, &[(&[-1], 1), (&[0], -1), (&[1], 1)]);
        let p = shift_to_poly(&delta, &[-1]);
        assert_eq!(
            p,
            MPoly::from_int_terms(1, &[(&[0], 1), (&[1], 1), (&[2], 1)])
        );
        let lin = LaurentMPoly::from_int_terms(2, &[(&[1, 0], 1), (&[0, 1], 1)]);
        assert_eq!(
            shift_to_poly(&lin, &[]),
            MPoly::from_int_terms(2, &[(&[1, 0], 1), (&[0, 1], 1)])
        );
        let neg = LaurentMPoly::from_int_terms(1, &[(&[1], -1)]);
        assert_eq!(
            shift_to_poly(&neg, &[-1]),
            MPoly::from_int_terms(1, &[(&[0], 1)])
        );
    }

    #[test]
    fn clear_denominators_keeps_common_factors() {
        let p = LaurentMPoly::from_int_terms(2, &[(&[2, 1], 1), (&[-1, 1], 1)]);
        let cleared = clear_denominators(&p, &[]);
        assert_eq!(
            cleared,
            MPoly::from_int_terms(2, &[(&[3, 1], 1), (&[0, 1], 1)])
        );
        assert_eq!(
            shift_to_poly(&p, &[]),
            MPoly::from_int_terms(2, &[(&[3, 0], 1), (&[0, 0], 1)])
        );
    }

    #[test]
    fn homogenize_examples() {
        let p = MPoly::from_int_terms(1, &[(&[0], 1), (&[1], 1), (&[2], 1)]);
        let h = homogenize(&p);
        assert_eq!(
            h,
            MPoly::from_int_terms(2, &[(&[0, 2], 1), (&[1, 1], 1), (&[2, 0], 1)])
        );
        let already = MPoly::from_int_terms(2, &[(&[1, 1], 3)]);
        assert_eq!(
            homogenize(&already),
            MPoly::from_int_terms(3, &[(&[1, 1, 0], 3)])
        );
    }

    #[test]
    fn normalize_divides_by_factorials() {
        let h = MPoly::from_int_terms(2, &[(&[0, 2], 1), (&[1, 1], 1), (&[2, 0], 1)]);
        let n = normalize(&h).unwrap();
        assert_eq!(n.coeff(&[2, 0]), q(1, 2));
        assert_eq!(n.coeff(&[1, 1]), q(1, 1));
        assert_eq!(denormalize(&n).unwrap(), h);
        let bad = MPoly::from_int_terms(1, &[(&[0], 1), (&[1], 1)]);
        assert_eq!(normalize(&bad).unwrap_err(), Error::NotHomogeneous);
    }

    #[test]
    fn trefoil_normalized_homogenization() {
        let lg: LPoly = "-t0^2*t1 + t0^2 - t0*t1^2 + 2*t0*t1 - t0 + t1^2 - t1 + 1"
            .parse()
            .unwrap();
        let p = shift_to_poly(&LaurentMPoly::from_lpoly(&lg).unwrap(), &[-1, -1]);
        let h = homogenize(&p);
        assert_eq!(h.len(), 8);
        let n = normalize(&h).unwrap();
        let expect = [
            ([2, 1, 0], q(1, 2)),
            ([2, 0, 1], q(1, 2)),
            ([1, 2, 0], q(1, 2)),
            ([1, 1, 1], q(2, 1)),
            ([1, 0, 2], q(1, 2)),
            ([0, 2, 1], q(1, 2)),
            ([0, 1, 2], q(1, 2)),
            ([0, 0, 3], q(1, 6)),
        ];
        assert_eq!(
            n,
            MPoly::from_terms(3, expect.into_iter().map(|(e, c)| (e.to_vec(), c)))
        );
    }

    #[test]
    fn diagonal_restrict_examples() {
        let tz = MPoly::from_int_terms(2, &[(&[1, 1], 1)]);
        assert_eq!(
            diagonal_restrict(&tz).unwrap(),
            MPoly::from_int_terms(1, &[(&[2], 1)])
        );
        let sq = MPoly::from_int_terms(2, &[(&[2, 0], 1), (&[1, 1], 2), (&[0, 2], 1)]);
        assert_eq!(
            diagonal_restrict(&sq).unwrap(),
            MPoly::from_int_terms(1, &[(&[2], 4)])
        );
    }

    #[test]
    fn divide_by_var() {
        let p = MPoly::from_int_terms(2, &[(&[1, 1], 1), (&[2, 0], 1)]);
        assert_eq!(
            p.divide_by_var(0).unwrap(),
            MPoly::from_int_terms(2, &[(&[0, 1], 1), (&[1, 0], 1)])
        );
        assert!(p.divide_by_var(1).is_none());
    }

    #[test]
    fn display() {
        let p = MPoly::from_terms(2, [(vec![2, 0], q(1, 2)), (vec![0, 0], q(-3, 1))]);
        assert_eq!(p.display_with(&["t", "z"]), "1/2*t^2 - 3");
    }
}
