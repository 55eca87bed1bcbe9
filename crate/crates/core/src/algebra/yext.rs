use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;

use super::lpoly::LPoly;

/// `even + odd * Y` with `Y^2 = (t0 - 1)(1 - t1)`.
///
/// `Y` is never expanded; products reduce `Y^2` to `t0 + t1 - t0 t1 - 1`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct YExt {
    pub even: LPoly,
    pub odd: LPoly,
}

/// `Y^2 = t0 + t1 - t0 t1 - 1`.
pub fn y_squared() -> LPoly {
    LPoly::from_int_terms([((1, 0), 1), ((0, 1), 1), ((1, 1), -1), ((0, 0), -1)])
}

impl YExt {
    pub fn new(even: LPoly, odd: LPoly) -> Self {
        YExt { even, odd }
    }

    pub fn zero() -> Self {
        YExt::default()
    }

    pub fn one() -> Self {
        YExt::from(LPoly::one())
    }

    pub fn y() -> Self {
        YExt::new(LPoly::zero(), LPoly::one())
    }

    pub fn is_zero(&self) -> bool {
        self.even.is_zero() && self.odd.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.odd.is_zero() && self.even.is_one()
    }

    pub fn scale(&self, c: &BigInt) -> YExt {
        YExt::new(self.even.scale(c), self.odd.scale(c))
    }

    pub fn mul_poly(&self, p: &LPoly) -> YExt {
        YExt::new(&self.even * p, &self.odd * p)
    }

    /// Inverse of `±t0^a t1^b` (no odd part).
    pub fn unit_inverse(&self) -> Option<YExt> {
        if !self.odd.is_zero() {
            return None;
        }
        self.even.unit_inverse().map(YExt::from)
    }

    pub fn add_assign_ref(&mut self, rhs: &YExt) {
        if rhs.is_zero() {
            return;
        }
        self.even = &self.even + &rhs.even;
        self.odd = &self.odd + &rhs.odd;
    }
}

impl From<LPoly> for YExt {
    fn from(even: LPoly) -> Self {
        YExt::new(even, LPoly::zero())
    }
}

impl<'a> Add<&'a YExt> for &'a YExt {
    type Output = YExt;
    fn add(self, rhs: &'a YExt) -> YExt {
        YExt::new(&self.even + &rhs.even, &self.odd + &rhs.odd)
    }
}

impl<'a> Sub<&'a YExt> for &'a YExt {
    type Output = YExt;
    fn sub(self, rhs: &'a YExt) -> YExt {
        YExt::new(&self.even - &rhs.even, &self.odd - &rhs.odd)
    }
}

impl Neg for &YExt {
    type Output = YExt;
    fn neg(self) -> YExt {
        YExt::new(-&self.even, -&self.odd)
    }
}

impl<'a> Mul<&'a YExt> for &'a YExt {
    type Output = YExt;
    fn mul(self, rhs: &'a YExt) -> YExt {
        let mut even = &self.even * &rhs.even;
        if !self.odd.is_zero() && !rhs.odd.is_zero() {
            even = even + (&self.odd * &rhs.odd) * y_squared();
        }
        let odd = &self.even * &rhs.odd + &self.odd * &rhs.even;
        YExt::new(even, odd)
    }
}

impl Add for YExt {
    type Output = YExt;
    fn add(self, rhs: YExt) -> YExt {
        &self + &rhs
    }
}

impl Sub for YExt {
    type Output = YExt;
    fn sub(self, rhs: YExt) -> YExt {
        &self - &rhs
    }
}

impl Mul for YExt {
    type Output = YExt;
    fn mul(self, rhs: YExt) -> YExt {
        &self * &rhs
    }
}

impl fmt::Display for YExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.even.is_zero(), self.odd.is_zero()) {
            (_, true) => write!(f, "{}", self.even),
            (true, false) => write!(f, "({})*Y", self.odd),
            (false, false) => write!(f, "{} + ({})*Y", self.even, self.odd),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn y_squared_reduces() {
        let y = YExt::y();
        let sq = &y * &y;
        assert!(sq.odd.is_zero());
        assert_eq!(sq.even, y_squared());
    }

    #[test]
    fn one_minus_y_squared() {
        let p = YExt::new(LPoly::one(), LPoly::one());
        let m = YExt::new(LPoly::one(), -LPoly::one());
        let expect = LPoly::from_int_terms([((0, 0), 2), ((1, 0), -1), ((0, 1), -1), ((1, 1), 1)]);
        assert_eq!(&p * &m, YExt::from(expect));
    }

    #[test]
    fn identity() {
        let x = YExt::new(LPoly::monomial(3, 1, -1), LPoly::monomial2(-2, (1, 1)));
        assert_eq!(&YExt::one() * &x, x);
    }
}
