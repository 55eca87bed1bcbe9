use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use super::lpoly::LPoly;
use super::yext::YExt;
use crate::error::{Error, Result};

/// Dense coefficient table `a_ij` of an integer Laurent polynomial in `t0`, `t1`.
///
/// Entry `(r, c)` is the coefficient of `t0^(offset_i + r) t1^(offset_j + c)`.
/// Nonzero tables have a tight bounding box; the zero polynomial is the empty table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoeffTable {
    pub offset_i: i64,
    pub offset_j: i64,
    rows: Vec<Vec<BigInt>>,
    /// Number of link components, when known.
    pub mu: Option<u32>,
}

impl CoeffTable {
    pub fn zero() -> Self {
        CoeffTable {
            offset_i: 0,
            offset_j: 0,
            rows: Vec::new(),
            mu: None,
        }
    }

    /// Builds a table from `((i, j), a_ij)` entries with absolute exponents.
    /// Repeated positions are summed.
    pub fn from_entries<I>(entries: I, mu: Option<u32>) -> Self
    where
        I: IntoIterator<Item = ((i64, i64), BigInt)>,
    {
        let mut acc: BTreeMap<(i64, i64), BigInt> = BTreeMap::new();
        for (e, c) in entries {
            *acc.entry(e).or_default() += c;
        }
        acc.retain(|_, c| !c.is_zero());
        if acc.is_empty() {
            return CoeffTable { mu, ..Self::zero() };
        }
        let imin = acc.keys().map(|e| e.0).min().unwrap();
        let imax = acc.keys().map(|e| e.0).max().unwrap();
        let jmin = acc.keys().map(|e| e.1).min().unwrap();
        let jmax = acc.keys().map(|e| e.1).max().unwrap();
        let mut rows =
            vec![vec![BigInt::zero(); (jmax - jmin + 1) as usize]; (imax - imin + 1) as usize];
        for ((i, j), c) in acc {
            rows[(i - imin) as usize][(j - jmin) as usize] = c;
        }
        CoeffTable {
            offset_i: imin,
            offset_j: jmin,
            rows,
            mu,
        }
    }

    /// Dense construction; trims zero border rows and columns.
    pub fn from_rows(
        offset_i: i64,
        offset_j: i64,
        rows: Vec<Vec<BigInt>>,
        mu: Option<u32>,
    ) -> Self {
        let mut entries = Vec::new();
        for (r, row) in rows.into_iter().enumerate() {
            for (c, v) in row.into_iter().enumerate() {
                entries.push(((offset_i + r as i64, offset_j + c as i64), v));
            }
        }
        Self::from_entries(entries, mu)
    }

    pub fn from_lpoly(p: &LPoly, mu: Option<u32>) -> Result<Self> {
        if !p.has_integer_exponents() {
            return Err(Error::HalfExponent(format!("non-integer exponent in {p}")));
        }
        Ok(Self::from_entries(
            p.terms()
                .iter()
                .map(|((a, b), c)| ((i64::from(a / 2), i64::from(b / 2)), c.clone())),
            mu,
        ))
    }

    pub fn to_lpoly(&self) -> LPoly {
        LPoly::from_int_terms(
            self.entries()
                .map(|((i, j), c)| ((i as i32, j as i32), c.clone())),
        )
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.rows.first().map_or(0, |r| r.len())
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    /// Coefficient at absolute exponents `(i, j)`; zero outside the box.
    pub fn get(&self, i: i64, j: i64) -> BigInt {
        let (r, c) = (i - self.offset_i, j - self.offset_j);
        if r < 0 || c < 0 || r as usize >= self.nrows() || c as usize >= self.ncols() {
            return BigInt::zero();
        }
        self.rows[r as usize][c as usize].clone()
    }

    /// Nonzero entries with absolute exponents, row-major.
    pub fn entries(&self) -> impl Iterator<Item = ((i64, i64), &BigInt)> + '_ {
        self.rows.iter().enumerate().flat_map(move |(r, row)| {
            row.iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(move |(c, v)| ((self.offset_i + r as i64, self.offset_j + c as i64), v))
        })
    }

    pub fn with_mu(mut self, mu: Option<u32>) -> Self {
        self.mu = mu;
        self
    }

    /// Multiplication by `t0^di t1^dj`.
    pub fn shifted(&self, di: i64, dj: i64) -> Self {
        CoeffTable {
            offset_i: self.offset_i + di,
            offset_j: self.offset_j + dj,
            ..self.clone()
        }
    }

    pub fn swap_vars(&self) -> Self {
        Self::from_entries(
            self.entries().map(|((i, j), c)| ((j, i), c.clone())),
            self.mu,
        )
    }

    pub fn invert_vars(&self) -> Self {
        Self::from_entries(
            self.entries().map(|((i, j), c)| ((-i, -j), c.clone())),
            self.mu,
        )
    }
}

/// Converts an engine value to a table; the odd part must vanish and all exponents be integral.
pub fn to_coeff_table(v: &YExt, mu: Option<u32>) -> Result<CoeffTable> {
    if !v.odd.is_zero() {
        return Err(Error::ResidualY);
    }
    CoeffTable::from_lpoly(&v.even, mu)
}

impl fmt::Display for CoeffTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "offsets: ({}, {})", self.offset_i, self.offset_j)?;
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|c| c.to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    #[test]
    fn unit_table() {
        let t = to_coeff_table(&YExt::one(), Some(1)).unwrap();
        assert_eq!(t.rows(), ints(&[&[1]]).as_slice());
        assert_eq!((t.offset_i, t.offset_j), (0, 0));
    }

    #[test]
    fn trefoil_table() {
        let p = LPoly::from_int_terms([
            ((2, 1), -1),
            ((2, 0), 1),
            ((1, 2), -1),
            ((1, 1), 2),
            ((1, 0), -1),
            ((0, 2), 1),
            ((0, 1), -1),
            ((0, 0), 1),
        ]);
        let t = to_coeff_table(&YExt::from(p), Some(1)).unwrap();
        assert_eq!(
            t.rows(),
            ints(&[&[1, -1, 1], &[-1, 2, -1], &[1, -1, 0]]).as_slice()
        );
        assert_eq!((t.offset_i, t.offset_j), (0, 0));
    }

    #[test]
    fn half_exponent_and_residual_y() {
        let half = YExt::from(LPoly::monomial2(1, (1, 0)));
        assert_eq!(
            to_coeff_table(&half, None).unwrap_err().code(),
            "HALF_EXPONENT"
        );
        assert_eq!(
            to_coeff_table(&YExt::y(), None).unwrap_err(),
            Error::ResidualY
        );
    }

    #[test]
    fn from_rows_trims_borders() {
        let t = CoeffTable::from_rows(0, 0, ints(&[&[0, 0, 0], &[0, 5, 0], &[0, 0, 0]]), None);
        assert_eq!(t.rows(), ints(&[&[5]]).as_slice());
        assert_eq!((t.offset_i, t.offset_j), (1, 1));
    }

    #[test]
    fn cancelling_border_is_trimmed() {
        let t = CoeffTable::from_entries(
            [
                ((0, 0), BigInt::from(1)),
                ((3, 0), BigInt::from(2)),
                ((3, 0), BigInt::from(-2)),
            ],
            None,
        );
        assert_eq!(t.nrows(), 1);
    }

    #[test]
    fn zero_table() {
        let t = to_coeff_table(&YExt::zero(), Some(2)).unwrap();
        assert!(t.is_zero());
        assert_eq!(t.mu, Some(2));
    }
}
