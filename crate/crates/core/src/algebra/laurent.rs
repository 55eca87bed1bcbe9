use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// One-variable Laurent polynomial in `t` with integer coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Laurent1 {
    terms: Vec<(i64, BigInt)>,
}

/// `p = t^shift * root^2`, with `root` an ordinary polynomial whose constant term is nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquareRoot {
    pub root: Laurent1,
    pub shift: i64,
}

impl Laurent1 {
    pub fn zero() -> Self {
        Laurent1 { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    pub fn monomial(c: impl Into<BigInt>, e: i64) -> Self {
        Self::from_terms([(e, c.into())])
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, BigInt)>>(terms: I) -> Self {
        let mut v: Vec<(i64, BigInt)> = terms.into_iter().collect();
        v.sort_unstable_by_key(|t| t.0);
        let mut out: Vec<(i64, BigInt)> = Vec::with_capacity(v.len());
        for (e, c) in v {
            match out.last_mut() {
                Some((le, lc)) if *le == e => *lc += c,
                _ => out.push((e, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Laurent1 { terms: out }
    }

    /// Coefficients listed from exponent `min_exp` upward with no gaps.
    pub fn from_coeffs(min_exp: i64, coeffs: &[BigInt]) -> Self {
        Self::from_terms(
            coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| (min_exp + k as i64, c.clone())),
        )
    }

    pub fn terms(&self) -> &[(i64, BigInt)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.first().map(|t| t.0)
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.last().map(|t| t.0)
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        match self.terms.binary_search_by_key(&e, |t| t.0) {
            Ok(k) => self.terms[k].1.clone(),
            Err(_) => BigInt::zero(),
        }
    }

    /// Dense coefficient list from the lowest to the highest exponent.
    pub fn dense_coeffs(&self) -> Vec<BigInt> {
        match (self.min_exp(), self.max_exp()) {
            (Some(lo), Some(hi)) => (lo..=hi).map(|e| self.coeff(e)).collect(),
            _ => Vec::new(),
        }
    }

    pub fn shift(&self, by: i64) -> Laurent1 {
        Laurent1 {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e + by, c.clone()))
                .collect(),
        }
    }

    /// Square root up to a monomial factor.
    ///
    /// Shifts to an ordinary polynomial with nonzero constant term, requires a
    /// perfect-square leading coefficient, then recovers the root coefficients
    /// top-down and verifies the square exactly.
    pub fn is_perfect_square(&self) -> Option<SquareRoot> {
        let Some(lo) = self.min_exp() else {
            return Some(SquareRoot {
                root: Laurent1::zero(),
                shift: 0,
            });
        };
        let p = self.shift(-lo).dense_coeffs();
        let deg = p.len() - 1;
        if deg % 2 == 1 {
            return None;
        }
        let m = deg / 2;
        let lead = &p[deg];
        if lead.is_negative() {
            return None;
        }
        let r = lead.sqrt();
        if &(&r * &r) != lead {
            return None;
        }
        // q[m] = r; coefficient of t^(m+k) in q^2 fixes q[k] for k = m-1 down to 0
        let mut q = vec![BigInt::zero(); m + 1];
        q[m] = r;
        let two_lead = &q[m] * 2;
        for k in (0..m).rev() {
            let mut rest = p[m + k].clone();
            for i in (k + 1)..=m {
                let j = m + k - i;
                if j > k && j <= m {
                    rest -= &q[i] * &q[j];
                }
            }
            let (quot, rem) = rest.div_rem(&two_lead);
            if !rem.is_zero() {
                return None;
            }
            q[k] = quot;
        }
        let root = Laurent1::from_coeffs(0, &q);
        if &root * &root == self.shift(-lo) {
            Some(SquareRoot { root, shift: lo })
        } else {
            None
        }
    }
}

impl<'a> Add<&'a Laurent1> for &'a Laurent1 {
    type Output = Laurent1;
    fn add(self, rhs: &'a Laurent1) -> Laurent1 {
        Laurent1::from_terms(self.terms.iter().chain(rhs.terms.iter()).cloned())
    }
}

impl<'a> Sub<&'a Laurent1> for &'a Laurent1 {
    type Output = Laurent1;
    fn sub(self, rhs: &'a Laurent1) -> Laurent1 {
        self + &(-rhs)
    }
}

impl Neg for &Laurent1 {
    type Output = Laurent1;
    fn neg(self) -> Laurent1 {
        Laurent1 {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl<'a> Mul<&'a Laurent1> for &'a Laurent1 {
    type Output = Laurent1;
    fn mul(self, rhs: &'a Laurent1) -> Laurent1 {
        let mut acc = Vec::with_capacity(self.terms.len() * rhs.terms.len());
        for (e, c) in &self.terms {
            for (f, d) in &rhs.terms {
                acc.push((e + f, c * d));
            }
        }
        Laurent1::from_terms(acc)
    }
}

impl fmt::Display for Laurent1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            let var = if *e == 1 {
                "t".to_string()
            } else {
                format!("t^{e}")
            };
            let body = match *e {
                0 => mag.to_string(),
                _ if mag.is_one() => var,
                _ => format!("{mag}*{var}"),
            };
            match (k, c.is_negative()) {
                (0, true) => write!(f, "-{body}")?,
                (0, false) => write!(f, "{body}")?,
                (_, true) => write!(f, " - {body}")?,
                (_, false) => write!(f, " + {body}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(terms: &[(i64, i64)]) -> Laurent1 {
        Laurent1::from_terms(terms.iter().map(|&(e, c)| (e, BigInt::from(c))))
    }

    #[test]
    fn square_of_t_minus_one() {
        let sq = l(&[(2, 1), (1, -2), (0, 1)]).is_perfect_square().unwrap();
        assert_eq!(sq.shift, 0);
        let r = sq.root;
        assert!(r == l(&[(1, 1), (0, -1)]) || r == l(&[(1, -1), (0, 1)]));
    }

    #[test]
    fn t_squared_plus_one_is_not_a_square() {
        assert!(l(&[(2, 1), (0, 1)]).is_perfect_square().is_none());
    }

    #[test]
    fn square_up_to_odd_monomial() {
        // t - 2 + t^-1 = t^-1 (t - 1)^2
        let sq = l(&[(1, 1), (0, -2), (-1, 1)]).is_perfect_square().unwrap();
        assert_eq!(sq.shift, -1);
        assert_eq!(&sq.root * &sq.root, l(&[(2, 1), (1, -2), (0, 1)]));
    }

    #[test]
    fn trefoil_alexander_squared() {
        // (t^-1 - 1 + t)^2 expanded by hand
        let p = l(&[(-2, 1), (-1, -2), (0, 3), (1, -2), (2, 1)]);
        let sq = p.is_perfect_square().unwrap();
        assert_eq!(sq.shift, -2);
        assert_eq!(sq.root, l(&[(0, 1), (1, -1), (2, 1)]));
    }

    #[test]
    fn negative_and_odd_degree_rejected() {
        assert!(l(&[(0, -1)]).is_perfect_square().is_none());
        assert!(l(&[(3, 1), (0, 1)]).is_perfect_square().is_none());
        assert!(l(&[(2, 2), (0, 2)]).is_perfect_square().is_none());
    }

    #[test]
    fn display() {
        assert_eq!(l(&[(-1, 1), (0, -1), (1, 1)]).to_string(), "t^-1 - 1 + t");
    }
}
