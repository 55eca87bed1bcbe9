use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::laurent::Laurent1;
use crate::error::{Error, Result};

/// Exponent pair `(2i, 2j)` of a monomial `t0^i t1^j`; half-integer exponents
/// become odd entries.
pub type Exp2 = (i32, i32);

/// Sparse Laurent polynomial in `t0^(1/2)`, `t1^(1/2)` with integer coefficients.
///
/// Terms are kept sorted lexicographically on the doubled exponents and never
/// hold a zero coefficient.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LPoly {
    terms: Vec<(Exp2, BigInt)>,
}

/// Substitution mode for [`LPoly::swap_or_invert`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VarMap {
    /// `t0 <-> t1`
    Swap,
    /// `t0 -> t0^-1`, `t1 -> t1^-1`
    Invert,
}

impl LPoly {
    pub fn zero() -> Self {
        LPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial2(c, (0, 0))
    }

    /// `c * t0^e0 * t1^e1` with integer exponents.
    pub fn monomial(c: impl Into<BigInt>, e0: i32, e1: i32) -> Self {
        Self::monomial2(c, (2 * e0, 2 * e1))
    }

    /// Monomial from doubled exponents, so `(1, 0)` is `t0^(1/2)`.
    pub fn monomial2(c: impl Into<BigInt>, exp: Exp2) -> Self {
        let c = c.into();
        if c.is_zero() {
            return Self::zero();
        }
        LPoly {
            terms: vec![(exp, c)],
        }
    }

    pub fn t0() -> Self {
        Self::monomial(1, 1, 0)
    }

    pub fn t1() -> Self {
        Self::monomial(1, 0, 1)
    }

    /// Builds a polynomial from arbitrary terms, merging duplicates and dropping zeros.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Exp2, BigInt)>,
    {
        let mut v: Vec<(Exp2, BigInt)> = terms.into_iter().collect();
        v.sort_unstable_by_key(|a| a.0);
        let mut out: Vec<(Exp2, BigInt)> = Vec::with_capacity(v.len());
        for (e, c) in v {
            match out.last_mut() {
                Some((le, lc)) if *le == e => *lc += c,
                _ => {
                    if let Some((_, lc)) = out.last() {
                        if lc.is_zero() {
                            out.pop();
                        }
                    }
                    out.push((e, c));
                }
            }
        }
        if let Some((_, lc)) = out.last() {
            if lc.is_zero() {
                out.pop();
            }
        }
        LPoly { terms: out }
    }

    /// Integer-exponent terms `((i, j), c)`.
    pub fn from_int_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = ((i32, i32), C)>,
        C: Into<BigInt>,
    {
        Self::from_terms(
            terms
                .into_iter()
                .map(|((i, j), c)| ((2 * i, 2 * j), c.into())),
        )
    }

    pub fn terms(&self) -> &[(Exp2, BigInt)] {
        &self.terms
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

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == (0, 0) && self.terms[0].1.is_one()
    }

    /// Coefficient of the monomial with doubled exponents `exp`.
    pub fn coeff2(&self, exp: Exp2) -> BigInt {
        match self.terms.binary_search_by(|t| t.0.cmp(&exp)) {
            Ok(k) => self.terms[k].1.clone(),
            Err(_) => BigInt::zero(),
        }
    }

    /// Coefficient of `t0^i t1^j`.
    pub fn coeff(&self, i: i32, j: i32) -> BigInt {
        self.coeff2((2 * i, 2 * j))
    }

    pub fn has_integer_exponents(&self) -> bool {
        self.terms
            .iter()
            .all(|((a, b), _)| a % 2 == 0 && b % 2 == 0)
    }

    pub fn scale(&self, c: &BigInt) -> LPoly {
        if c.is_zero() {
            return LPoly::zero();
        }
        LPoly {
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    /// Multiplies by the monomial with doubled exponents `exp`.
    pub fn shift2(&self, exp: Exp2) -> LPoly {
        LPoly {
            terms: self
                .terms
                .iter()
                .map(|((a, b), c)| ((a + exp.0, b + exp.1), c.clone()))
                .collect(),
        }
    }

    /// If this is `±t0^a t1^b`, returns its inverse.
    pub fn unit_inverse(&self) -> Option<LPoly> {
        match self.terms.as_slice() {
            [((a, b), c)] if c.abs().is_one() => Some(LPoly::monomial2(c.clone(), (-a, -b))),
            _ => None,
        }
    }

    pub fn pow(&self, k: u32) -> LPoly {
        let mut acc = LPoly::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn swap_or_invert(&self, mode: VarMap) -> LPoly {
        let map = |(a, b): Exp2| match mode {
            VarMap::Swap => (b, a),
            VarMap::Invert => (-a, -b),
        };
        LPoly::from_terms(self.terms.iter().map(|(e, c)| (map(*e), c.clone())))
    }

    pub fn swap_vars(&self) -> LPoly {
        self.swap_or_invert(VarMap::Swap)
    }

    pub fn invert_vars(&self) -> LPoly {
        self.swap_or_invert(VarMap::Invert)
    }

    /// Substitutes `t1 := sign * t0^k`, giving a Laurent polynomial in `t0`.
    ///
    /// The coefficient of `t0^m` is the sum of `a_ij * sign^j` over `i + k j = m`.
    pub fn specialize(&self, sign: i8, k: i64) -> Result<Laurent1> {
        if !self.has_integer_exponents() {
            return Err(Error::HalfExponent(format!("cannot specialize {self}")));
        }
        let terms = self.terms.iter().map(|((a, b), c)| {
            let (i, j) = (i64::from(a / 2), i64::from(b / 2));
            let c = if sign < 0 && j.rem_euclid(2) == 1 {
                -c
            } else {
                c.clone()
            };
            (i + k * j, c)
        });
        Ok(Laurent1::from_terms(terms))
    }

    /// Maximum of `|coefficient|`, zero for the zero polynomial.
    pub fn max_abs_coeff(&self) -> BigInt {
        self.terms
            .iter()
            .map(|(_, c)| c.abs())
            .max()
            .unwrap_or_default()
    }

    fn merge(a: &[(Exp2, BigInt)], b: &[(Exp2, BigInt)], negate_b: bool) -> LPoly {
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        let nb = |c: &BigInt| if negate_b { -c } else { c.clone() };
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push((b[j].0, nb(&b[j].1)));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let s = if negate_b {
                        &a[i].1 - &b[j].1
                    } else {
                        &a[i].1 + &b[j].1
                    };
                    if !s.is_zero() {
                        out.push((a[i].0, s));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend(b[j..].iter().map(|(e, c)| (*e, nb(c))));
        LPoly { terms: out }
    }

    fn mul_impl(a: &LPoly, b: &LPoly) -> LPoly {
        if a.is_zero() || b.is_zero() {
            return LPoly::zero();
        }
        let (small, large) = if a.len() <= b.len() { (a, b) } else { (b, a) };
        if small.len() == 1 {
            let (e, c) = &small.terms[0];
            // a single monomial keeps the order of the other factor
            return LPoly {
                terms: large
                    .terms
                    .iter()
                    .map(|((x, y), d)| ((x + e.0, y + e.1), d * c))
                    .collect(),
            };
        }
        let mut acc = Vec::with_capacity(small.len() * large.len());
        for (e, c) in &small.terms {
            for ((x, y), d) in &large.terms {
                acc.push(((x + e.0, y + e.1), d * c));
            }
        }
        LPoly::from_terms(acc)
    }
}

impl<'a> Add<&'a LPoly> for &'a LPoly {
    type Output = LPoly;
    fn add(self, rhs: &'a LPoly) -> LPoly {
        LPoly::merge(&self.terms, &rhs.terms, false)
    }
}

impl<'a> Sub<&'a LPoly> for &'a LPoly {
    type Output = LPoly;
    fn sub(self, rhs: &'a LPoly) -> LPoly {
        LPoly::merge(&self.terms, &rhs.terms, true)
    }
}

impl<'a> Mul<&'a LPoly> for &'a LPoly {
    type Output = LPoly;
    fn mul(self, rhs: &'a LPoly) -> LPoly {
        LPoly::mul_impl(self, rhs)
    }
}

impl Neg for &LPoly {
    type Output = LPoly;
    fn neg(self) -> LPoly {
        LPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<LPoly> for LPoly {
            type Output = LPoly;
            fn $m(self, rhs: LPoly) -> LPoly {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a LPoly> for LPoly {
            type Output = LPoly;
            fn $m(self, rhs: &'a LPoly) -> LPoly {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<LPoly> for &'a LPoly {
            type Output = LPoly;
            fn $m(self, rhs: LPoly) -> LPoly {
                self.$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LPoly {
    type Output = LPoly;
    fn neg(self) -> LPoly {
        -&self
    }
}

fn fmt_half(e: i32) -> String {
    if e % 2 == 0 {
        (e / 2).to_string()
    } else {
        format!("{e}/2")
    }
}

fn fmt_monomial(c: &BigInt, (a, b): Exp2) -> String {
    let mut factors = Vec::new();
    for (name, e) in [("t0", a), ("t1", b)] {
        match e {
            0 => {}
            2 => factors.push(name.to_string()),
            _ => factors.push(format!("{name}^{}", fmt_half(e))),
        }
    }
    if factors.is_empty() {
        return c.to_string();
    }
    let body = factors.join("*");
    if c.is_one() {
        body
    } else if (-c).is_one() {
        format!("-{body}")
    } else {
        format!("{c}*{body}")
    }
}

/// Terms `c*t0^a*t1^b` in lexicographic order of `(2a, 2b)`; half exponents print as `k/2`.
impl fmt::Display for LPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().enumerate() {
            if k == 0 {
                write!(f, "{}", fmt_monomial(c, *e))?;
            } else if c.is_negative() {
                write!(f, " - {}", fmt_monomial(&-c, *e))?;
            } else {
                write!(f, " + {}", fmt_monomial(c, *e))?;
            }
        }
        Ok(())
    }
}

fn parse_half(s: &str) -> Result<i32> {
    let bad = || Error::Parse(format!("bad exponent '{s}'"));
    match s.split_once('/') {
        Some((num, "2")) => num.parse::<i32>().map_err(|_| bad()),
        Some(_) => Err(bad()),
        None => s.parse::<i32>().map(|e| 2 * e).map_err(|_| bad()),
    }
}

fn parse_term(tok: &str) -> Result<(Exp2, BigInt)> {
    let (neg, body) = match tok.strip_prefix('-') {
        Some(b) => (true, b),
        None => (false, tok),
    };
    let mut c = BigInt::one();
    let mut exp = (0, 0);
    for (k, p) in body.split('*').enumerate() {
        if k == 0 && p.starts_with(|ch: char| ch.is_ascii_digit()) {
            c = p
                .parse()
                .map_err(|_| Error::Parse(format!("bad coefficient in '{tok}'")))?;
            continue;
        }
        let (var, e) = match p.split_once('^') {
            Some((v, e)) => (v, parse_half(e)?),
            None => (p, 2),
        };
        match var {
            "t0" => exp.0 += e,
            "t1" => exp.1 += e,
            _ => return Err(Error::Parse(format!("bad factor '{p}' in '{tok}'"))),
        }
    }
    Ok((exp, if neg { -c } else { c }))
}

impl FromStr for LPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let toks: Vec<&str> = s.split_whitespace().collect();
        if toks.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut terms = vec![parse_term(toks[0])?];
        let mut rest = toks[1..].chunks(2);
        for pair in &mut rest {
            let [op, tok] = pair else {
                return Err(Error::Parse("dangling operator".into()));
            };
            let (e, c) = parse_term(tok)?;
            match *op {
                "+" => terms.push((e, c)),
                "-" => terms.push((e, -c)),
                _ => return Err(Error::Parse(format!("expected + or -, got '{op}'"))),
            }
        }
        Ok(LPoly::from_terms(terms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trefoil() -> LPoly {
        LPoly::from_int_terms([
            ((2, 1), -1),
            ((2, 0), 1),
            ((1, 2), -1),
            ((1, 1), 2),
            ((1, 0), -1),
            ((0, 2), 1),
            ((0, 1), -1),
            ((0, 0), 1),
        ])
    }

    #[test]
    fn additive_inverse() {
        let t0 = LPoly::t0();
        assert!((&t0 + &(-&t0)).is_zero());
    }

    #[test]
    fn half_powers_multiply() {
        let s = LPoly::monomial2(1, (1, 0));
        assert_eq!(&s * &s, LPoly::t0());
    }

    #[test]
    fn difference_of_squares() {
        let (t0, t1) = (LPoly::t0(), LPoly::t1());
        let lhs = (&t0 + &t1) * (&t0 - &t1);
        let rhs = LPoly::from_int_terms([((2, 0), 1), ((0, 2), -1)]);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn specialize_trefoil_to_alexander() {
        let a = trefoil().specialize(-1, -1).unwrap();
        assert_eq!(
            a,
            Laurent1::from_terms([(-2, 1.into()), (0, (-1).into()), (2, 1.into())])
        );
    }

    #[test]
    fn specialize_hopf() {
        let hopf = LPoly::from_int_terms([((1, 0), 1), ((0, 1), 1), ((1, 1), -1), ((0, 0), -1)]);
        // by hand: t0 + t0^-1 - 1 - 1
        let expect = Laurent1::from_terms([(1, 1.into()), (-1, 1.into()), (0, (-2).into())]);
        assert_eq!(hopf.specialize(1, -1).unwrap(), expect);
    }

    #[test]
    fn specialize_constant_and_half() {
        assert_eq!(LPoly::one().specialize(-1, 3).unwrap(), Laurent1::one());
        let err = LPoly::monomial2(1, (1, 0)).specialize(1, 1).unwrap_err();
        assert_eq!(err.code(), "HALF_EXPONENT");
    }

    #[test]
    fn swap_and_invert() {
        assert_eq!(
            LPoly::monomial(1, 2, 1).swap_vars(),
            LPoly::monomial(1, 1, 2)
        );
        let hopf = LPoly::from_int_terms([((1, 0), 1), ((0, 1), 1), ((1, 1), -1), ((0, 0), -1)]);
        let inv = LPoly::from_int_terms([((-1, 0), 1), ((0, -1), 1), ((-1, -1), -1), ((0, 0), -1)]);
        assert_eq!(hopf.invert_vars(), inv);
        assert_eq!(trefoil().swap_vars(), trefoil());
    }

    #[test]
    fn display_format() {
        let p = LPoly::from_terms([((1, -2), BigInt::from(3)), ((0, 0), BigInt::from(-2))]);
        assert_eq!(p.to_string(), "-2 + 3*t0^1/2*t1^-1");
        assert_eq!(LPoly::zero().to_string(), "0");
        let q: LPoly = "1 - t1 + 2*t0*t1 - t0^2*t1".parse().unwrap();
        assert_eq!(q.to_string(), "1 - t1 + 2*t0*t1 - t0^2*t1");
        assert_eq!("-2 + 3*t0^1/2*t1^-1".parse::<LPoly>().unwrap(), p);
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!("1 +".parse::<LPoly>().is_err());
        assert!("1*x^2".parse::<LPoly>().is_err());
        assert!("1*t0^1/3".parse::<LPoly>().is_err());
    }

    #[test]
    fn unit_inverse_only_for_signed_monomials() {
        let m = LPoly::monomial(-1, 1, 2);
        assert_eq!(&m * &m.unit_inverse().unwrap(), LPoly::one());
        assert!(LPoly::monomial(2, 0, 0).unit_inverse().is_none());
        assert!(trefoil().unit_inverse().is_none());
    }
}
