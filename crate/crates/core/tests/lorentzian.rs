use lgkit::checks::seq_checks_1d;
use lgkit::lorentzian::{
    denormalize, diagonal_restrict, homogenize, is_lorentzian, normalize, univariate,
};
use lgkit::{is_denorm_lorentzian, positive_eigenvalues, MPoly, SymMat};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use proptest::prelude::*;

/// Cyclic Jacobi rotations; returns approximate eigenvalues.
fn jacobi_eigenvalues(a: &[Vec<f64>]) -> Vec<f64> {
    let n = a.len();
    let mut m = a.to_vec();
    for _ in 0..100 {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| m[i][j] * m[i][j])
            .sum();
        if off < 1e-24 {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                if m[p][q].abs() < 1e-300 {
                    continue;
                }
                let theta = (m[q][q] - m[p][p]) / (2.0 * m[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let (c, s) = (1.0 / (t * t + 1.0).sqrt(), t / (t * t + 1.0).sqrt());
                for k in 0..n {
                    let (mkp, mkq) = (m[k][p], m[k][q]);
                    m[k][p] = c * mkp - s * mkq;
                    m[k][q] = s * mkp + c * mkq;
                }
                for k in 0..n {
                    let (mpk, mqk) = (m[p][k], m[q][k]);
                    m[p][k] = c * mpk - s * mqk;
                    m[q][k] = s * mpk + c * mqk;
                }
            }
        }
    }
    (0..n).map(|i| m[i][i]).collect()
}

/// Exact rank by fraction-free elimination.
fn rank(a: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<BigInt>> = a
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let (rows, cols) = (m.len(), m.first().map_or(0, Vec::len));
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..rows {
            let f = m[i][c].clone();
            let g = m[r][c].clone();
            for k in 0..cols {
                m[i][k] = &m[i][k] * &g - &m[r][k] * &f;
            }
        }
        r += 1;
    }
    r
}

fn symmetric(n: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(-5i64..=5, n * n).prop_map(move |v| {
        let mut m = vec![vec![0; n]; n];
        for i in 0..n {
            for j in i..n {
                m[i][j] = v[i * n + j];
                m[j][i] = v[i * n + j];
            }
        }
        m
    })
}

fn q(x: u64) -> BigRational {
    BigRational::from_integer(x.into())
}

fn binomial(n: u64, k: u64) -> BigInt {
    (0..k).fold(BigInt::from(1), |acc, i| acc * (n - i) / (i + 1))
}

/// `Σ c_k x^k y^(d-k)`.
fn bivariate(c: &[u64]) -> MPoly {
    let d = c.len() as u32 - 1;
    MPoly::from_terms(
        2,
        c.iter()
            .enumerate()
            .map(|(k, &x)| (vec![k as u32, d - k as u32], q(x))),
    )
}

fn linear_form(c: &[u64]) -> MPoly {
    MPoly::from_terms(
        c.len(),
        c.iter().enumerate().map(|(i, &x)| {
            let mut e = vec![0; c.len()];
            e[i] = 1;
            (e, q(x))
        }),
    )
}

proptest! {
    #[test]
    fn eigenvalue_count_matches_jacobi(m in (1usize..=5).prop_flat_map(symmetric)) {
        let rows: Vec<&[i64]> = m.iter().map(Vec::as_slice).collect();
        let h = SymMat::from_ints(&rows).unwrap();
        let f: Vec<Vec<f64>> = m.iter().map(|r| r.iter().map(|&x| x as f64).collect()).collect();
        // nonzero eigenvalues of these matrices exceed 25^-4 in magnitude
        let ev = jacobi_eigenvalues(&f);
        let zeros = ev.iter().filter(|x| x.abs() < 1e-8).count();
        prop_assert_eq!(zeros, m.len() - rank(&m));
        let pos = ev.iter().filter(|&&x| x >= 1e-8).count();
        prop_assert_eq!(positive_eigenvalues(&h), pos, "{:?} {:?}", m, ev);
    }

    #[test]
    fn bivariate_lorentzian_iff_ultra_log_concave(c in prop::collection::vec(0u64..=12, 1..=7)) {
        prop_assume!(c.iter().any(|&x| x > 0));
        let d = c.len() as u64 - 1;
        // c_k / C(d,k) log-concave, cleared by lcm of binomials
        let l = (0..=d).fold(BigInt::from(1), |acc, k| acc.lcm(&binomial(d, k)));
        let scaled: Vec<BigInt> = c
            .iter()
            .enumerate()
            .map(|(k, &x)| BigInt::from(x) * &l / binomial(d, k as u64))
            .collect();
        let r = seq_checks_1d(&scaled).unwrap();
        let ulc = r.log_concave.pass && r.no_internal_zeros.pass;
        prop_assert_eq!(is_lorentzian(&bivariate(&c)).unwrap().pass, ulc, "{:?}", c);
    }

    #[test]
    fn products_of_linear_forms_are_lorentzian(
        forms in prop::collection::vec(prop::collection::vec(0u64..=4, 3), 1..=4)
    ) {
        prop_assume!(forms.iter().all(|f| f.iter().any(|&x| x > 0)));
        let p = forms
            .iter()
            .map(|f| linear_form(f))
            .reduce(|a, b| &a * &b)
            .unwrap();
        prop_assert!(is_lorentzian(&p).unwrap().pass, "{}", p);
        let r = diagonal_restrict(&p).unwrap();
        prop_assert!(is_lorentzian(&r).unwrap().pass, "{}", r);
        let x = linear_form(&[1, 0, 0]);
        let xp = &x * &p;
        prop_assert!(is_lorentzian(&xp).unwrap().pass);
        prop_assert_eq!(xp.divide_by_var(0).unwrap(), p);
    }

    #[test]
    fn normalize_round_trips(c in prop::collection::vec(0u64..=20, 1..=8)) {
        let seq: Vec<BigInt> = c.iter().map(|&x| BigInt::from(x)).collect();
        let p = homogenize(&univariate(&seq));
        prop_assert_eq!(denormalize(&normalize(&p).unwrap()).unwrap(), p);
    }

    #[test]
    fn lorentzian_restriction_keeps_verdict(c in prop::collection::vec(0u64..=6, 1..=5)) {
        // a two-variable Lorentzian polynomial pulled back along x -> x + y stays Lorentzian
        let p = bivariate(&c);
        prop_assume!(is_lorentzian(&p).unwrap().pass);
        let d = c.len() as u32 - 1;
        let lifted = MPoly::from_terms(
            3,
            p.terms().map(|(e, v)| (vec![e[0], 0, e[1]], v.clone())),
        );
        let spread = MPoly::from_terms(
            3,
            (0..=d).flat_map(|k| {
                let c = p.coeff(&[k, d - k]);
                (0..=k).map(move |a| {
                    let b = binomial(u64::from(k), u64::from(a));
                    (vec![a, k - a, d - k], &c * BigRational::from_integer(b))
                })
            }),
        );
        prop_assert!(is_lorentzian(&spread).unwrap().pass);
        prop_assert_eq!(diagonal_restrict(&lifted).unwrap().len(), p.len());
    }
}

#[test]
fn denormalized_alexander_examples() {
    let hom = |c: &[i64]| {
        homogenize(&univariate(
            &c.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>(),
        ))
    };
    // trefoil, figure-eight, 5_1 after t -> -t
    assert!(is_denorm_lorentzian(&hom(&[1, 1, 1])).unwrap().pass);
    assert!(is_denorm_lorentzian(&hom(&[1, 3, 1])).unwrap().pass);
    assert!(is_denorm_lorentzian(&hom(&[1, 1, 1, 1, 1])).unwrap().pass);
    // internal zero
    assert!(!is_denorm_lorentzian(&hom(&[1, 0, 0, 1])).unwrap().pass);
    // 1 + 4t + t^2 is log-concave; 1 + t + 4 t^2 is not
    assert!(is_denorm_lorentzian(&hom(&[1, 4, 1])).unwrap().pass);
    assert!(!is_denorm_lorentzian(&hom(&[1, 1, 4])).unwrap().pass);
}

#[test]
fn jacobi_oracle_sanity() {
    let ev = jacobi_eigenvalues(&[vec![2.0, 1.0], vec![1.0, 2.0]]);
    let mut ev: Vec<i64> = ev.iter().map(|x| x.round().to_i64().unwrap()).collect();
    ev.sort();
    assert_eq!(ev, vec![1, 3]);
}
