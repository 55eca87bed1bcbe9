use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exactly symmetric rational matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymMat {
    n: usize,
    data: Vec<BigRational>,
}

impl SymMat {
    pub fn new(rows: Vec<Vec<BigRational>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Domain("matrix is not square".into()));
        }
        for i in 0..n {
            for j in i + 1..n {
                if rows[i][j] != rows[j][i] {
                    return Err(Error::NotSymmetric { row: i, col: j });
                }
            }
        }
        Ok(SymMat {
            n,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_ints(rows: &[&[i64]]) -> Result<Self> {
        Self::new(
            rows.iter()
                .map(|r| {
                    r.iter()
                        .map(|&x| BigRational::from_integer(x.into()))
                        .collect()
                })
                .collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.data[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<BigRational>> {
        self.data
            .chunks(self.n.max(1))
            .take(self.n)
            .map(<[_]>::to_vec)
            .collect()
    }

    /// Coefficients `c_0, ..., c_n` of `det(x I - H) = Σ c_k x^k` (Faddeev–LeVerrier).
    pub fn char_poly(&self) -> Vec<BigRational> {
        let n = self.n;
        let mut c = vec![BigRational::zero(); n + 1];
        c[n] = BigRational::one();
        // m = A M_{k-1} + c_{n-k+1} I, starting from M_0 = 0
        let mut m = vec![BigRational::zero(); n * n];
        for k in 1..=n {
            let mut next = vec![BigRational::zero(); n * n];
            for i in 0..n {
                for j in 0..n {
                    let mut s = BigRational::zero();
                    for l in 0..n {
                        if !m[l * n + j].is_zero() {
                            s += self.get(i, l) * &m[l * n + j];
                        }
                    }
                    if i == j {
                        s += &c[n - k + 1];
                    }
                    next[i * n + j] = s;
                }
            }
            m = next;
            let mut tr = BigRational::zero();
            for i in 0..n {
                for l in 0..n {
                    tr += self.get(i, l) * &m[l * n + i];
                }
            }
            c[n - k] = -tr / BigRational::from_integer((k as i64).into());
        }
        c
    }
}

impl fmt::Display for SymMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows()
            .iter()
            .map(|r| {
                let cells: Vec<String> = r.iter().map(|x| x.to_string()).collect();
                format!("[{}]", cells.join(", "))
            })
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

/// Number of positive eigenvalues, with multiplicity.
///
/// The characteristic polynomial of a symmetric matrix is real-rooted, so
/// Descartes' rule of signs is exact once zero roots are factored out.
pub fn positive_eigenvalues(h: &SymMat) -> usize {
    let c = h.char_poly();
    let nonzero: Vec<&BigRational> = c.iter().filter(|x| !x.is_zero()).collect();
    nonzero
        .windows(2)
        .filter(|w| w[0].is_positive() != w[1].is_positive())
        .count()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(x: i64) -> BigRational {
        BigRational::from_integer(x.into())
    }

    #[test]
    fn char_poly_of_2x2() {
        let h = SymMat::from_ints(&[&[2, 1], &[1, 3]]).unwrap();
        assert_eq!(h.char_poly(), vec![q(5), q(-5), q(1)]);
    }

    #[test]
    fn trefoil_hessian_has_two_positive() {
        let h = SymMat::from_ints(&[&[1, 2, 1], &[2, 1, 1], &[1, 1, 1]]).unwrap();
        // eigenvalues -1, 2 ± √3: (x + 1)(x^2 - 4x + 1)
        assert_eq!(h.char_poly(), vec![q(1), q(-3), q(-3), q(1)]);
        assert_eq!(positive_eigenvalues(&h), 2);
    }

    #[test]
    fn small_examples() {
        let count = |rows: &[&[i64]]| positive_eigenvalues(&SymMat::from_ints(rows).unwrap());
        assert_eq!(count(&[&[0, 1], &[1, 0]]), 1);
        assert_eq!(count(&[&[2, 0], &[0, 2]]), 2);
        assert_eq!(count(&[&[0, 0], &[0, 0]]), 0);
        assert_eq!(count(&[&[2, 2], &[2, 2]]), 1);
        assert_eq!(count(&[]), 0);
    }

    #[test]
    fn asymmetric_rejected() {
        let err = SymMat::from_ints(&[&[1, 2], &[3, 4]]).unwrap_err();
        assert_eq!(err, Error::NotSymmetric { row: 0, col: 1 });
    }
}
