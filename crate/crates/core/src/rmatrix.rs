//! The Links–Gould enhanced R-matrix on the 4-dimensional space `V`, its
//! inverse, the enhancement `h`, and a symbolic check of the enhanced
//! R-matrix axioms.
//!
//! Basis vectors of `V ⊗ V` are indexed `4*(i-1) + (j-1)` for `w_i ⊗ w_j`.
//! Matrix entry `(row, col)` is the coefficient of basis vector `row` in the
//! image of basis vector `col`.

use std::fmt;
use std::ops::Mul;

use crate::algebra::{y_squared, LPoly, YExt};
use crate::error::{Error, Result};

/// Dense square matrix over `YExt`, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YMatrix {
    dim: usize,
    data: Vec<YExt>,
}

impl YMatrix {
    pub fn zeros(dim: usize) -> Self {
        YMatrix {
            dim,
            data: vec![YExt::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for k in 0..dim {
            m.set(k, k, YExt::one());
        }
        m
    }

    pub fn diagonal(diag: &[YExt]) -> Self {
        let mut m = Self::zeros(diag.len());
        for (k, d) in diag.iter().enumerate() {
            m.set(k, k, d.clone());
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> &YExt {
        &self.data[row * self.dim + col]
    }

    pub fn set(&mut self, row: usize, col: usize, v: YExt) {
        self.data[row * self.dim + col] = v;
    }

    pub fn scale(&self, c: &YExt) -> YMatrix {
        YMatrix {
            dim: self.dim,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    pub fn add(&self, other: &YMatrix) -> YMatrix {
        assert_eq!(self.dim, other.dim);
        YMatrix {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kron(&self, other: &YMatrix) -> YMatrix {
        let d = self.dim * other.dim;
        let mut m = YMatrix::zeros(d);
        for a in 0..self.dim {
            for b in 0..self.dim {
                let x = self.get(a, b);
                if x.is_zero() {
                    continue;
                }
                for c in 0..other.dim {
                    for e in 0..other.dim {
                        let y = other.get(c, e);
                        if !y.is_zero() {
                            m.set(a * other.dim + c, b * other.dim + e, x * y);
                        }
                    }
                }
            }
        }
        m
    }

    /// First `(row, col)` where the two matrices differ, row-major.
    pub fn first_difference(&self, other: &YMatrix) -> Option<(usize, usize)> {
        (0..self.dim * self.dim)
            .find(|&k| self.data[k] != other.data[k])
            .map(|k| (k / self.dim, k % self.dim))
    }

    pub fn nonzero_count(&self) -> usize {
        self.data.iter().filter(|x| !x.is_zero()).count()
    }
}

impl<'a> Mul<&'a YMatrix> for &'a YMatrix {
    type Output = YMatrix;

    fn mul(self, rhs: &'a YMatrix) -> YMatrix {
        assert_eq!(self.dim, rhs.dim);
        let n = self.dim;
        let mut out = YMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.data[i * n + j].add_assign_ref(&(a * b));
                    }
                }
            }
        }
        out
    }
}

/// A two-site operator: a 16×16 matrix on `V ⊗ V`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gate(pub YMatrix);

impl Gate {
    pub fn identity() -> Self {
        Gate(YMatrix::identity(16))
    }

    pub fn matrix(&self) -> &YMatrix {
        &self.0
    }

    /// Coefficient of `w_k ⊗ w_l` in the image of `w_i ⊗ w_j` (indices 1..=4).
    pub fn coeff(&self, (k, l): (usize, usize), (i, j): (usize, usize)) -> &YExt {
        self.0.get(idx(k, l), idx(i, j))
    }

    /// Nonzero entries `(row, value)` of column `col`.
    pub fn column(&self, col: usize) -> impl Iterator<Item = (usize, &YExt)> + '_ {
        (0..16)
            .map(move |row| (row, self.0.get(row, col)))
            .filter(|(_, v)| !v.is_zero())
    }
}

/// Diagonal enhancement `h` on `V`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Enhancement(pub [YExt; 4]);

impl Enhancement {
    pub fn identity() -> Self {
        Enhancement(std::array::from_fn(|_| YExt::one()))
    }

    pub fn entry(&self, k: usize) -> &YExt {
        &self.0[k]
    }

    pub fn matrix(&self) -> YMatrix {
        YMatrix::diagonal(&self.0)
    }

    pub fn determinant(&self) -> YExt {
        self.0.iter().fold(YExt::one(), |acc, x| &acc * x)
    }

    pub fn trace(&self) -> YExt {
        self.0.iter().fold(YExt::zero(), |acc, x| &acc + x)
    }

    /// Inverse, defined when every diagonal entry is a signed monomial.
    pub fn inverse(&self) -> Option<Enhancement> {
        let inv: Option<Vec<YExt>> = self.0.iter().map(YExt::unit_inverse).collect();
        inv.map(|v| Enhancement(v.try_into().expect("four entries")))
    }
}

fn idx(i: usize, j: usize) -> usize {
    4 * (i - 1) + (j - 1)
}

fn mono2(c: i64, a: i32, b: i32) -> LPoly {
    LPoly::monomial2(c, (a, b))
}

/// The Links–Gould R-matrix. Each array cell `(i, j)` lists `R(w_ij)` as a
/// combination of the `w_kl`.
pub fn build_r() -> Gate {
    let t0 = LPoly::t0();
    let t1 = LPoly::t1();
    let one = LPoly::one();
    let s0 = mono2(1, 1, 0);
    let s1 = mono2(1, 0, 1);
    let s01 = mono2(1, 1, 1);
    let y = |p: LPoly| YExt::new(LPoly::zero(), p);
    let e = YExt::from;

    let cells: Vec<((usize, usize), Vec<((usize, usize), YExt)>)> = vec![
        ((1, 1), vec![((1, 1), e(t0.clone()))]),
        ((1, 2), vec![((2, 1), e(s0.clone()))]),
        ((1, 3), vec![((3, 1), e(s0.clone()))]),
        ((1, 4), vec![((4, 1), e(one.clone()))]),
        (
            (2, 1),
            vec![((1, 2), e(s0.clone())), ((2, 1), e(&t0 - &one))],
        ),
        ((2, 2), vec![((2, 2), e(-&one))]),
        (
            (2, 3),
            vec![
                ((2, 3), e(&(&t0 * &t1) - &one)),
                ((3, 2), e(-&s01)),
                ((4, 1), y(-&s01)),
            ],
        ),
        ((2, 4), vec![((4, 2), e(s1.clone()))]),
        (
            (3, 1),
            vec![((1, 3), e(s0.clone())), ((3, 1), e(&t0 - &one))],
        ),
        ((3, 2), vec![((2, 3), e(-&s01)), ((4, 1), y(one.clone()))]),
        ((3, 3), vec![((3, 3), e(-&one))]),
        ((3, 4), vec![((4, 3), e(s1.clone()))]),
        (
            (4, 1),
            vec![
                ((1, 4), e(one.clone())),
                ((2, 3), y(-&s01)),
                ((3, 2), y(one.clone())),
                ((4, 1), e(y_squared())),
            ],
        ),
        (
            (4, 2),
            vec![((2, 4), e(s1.clone())), ((4, 2), e(&t1 - &one))],
        ),
        (
            (4, 3),
            vec![((3, 4), e(s1.clone())), ((4, 3), e(&t1 - &one))],
        ),
        ((4, 4), vec![((4, 4), e(t1.clone()))]),
    ];

    let mut m = YMatrix::zeros(16);
    for ((i, j), image) in cells {
        for ((k, l), c) in image {
            m.set(idx(k, l), idx(i, j), c);
        }
    }
    Gate(m)
}

/// `h = diag(t0^-1, -t1, -t0^-1, t1)`.
pub fn build_h() -> Enhancement {
    Enhancement([
        YExt::from(LPoly::monomial(1, -1, 0)),
        YExt::from(LPoly::monomial(-1, 0, 1)),
        YExt::from(LPoly::monomial(-1, -1, 0)),
        YExt::from(LPoly::monomial(1, 0, 1)),
    ])
}

/// Eigenvalues `t0, t1, -1` of the LG R-matrix.
pub fn r_eigenvalues() -> [LPoly; 3] {
    [LPoly::t0(), LPoly::t1(), LPoly::constant(-1)]
}

/// Eigenvalues `t0^-1, t1^-1, -1` of the inverse.
pub fn r_inverse_eigenvalues() -> [LPoly; 3] {
    [
        LPoly::monomial(1, -1, 0),
        LPoly::monomial(1, 0, -1),
        LPoly::constant(-1),
    ]
}

/// Inverse of a gate annihilated by `(x - l1)(x - l2)(x - l3)`.
///
/// With `e1, e2, e3` the elementary symmetric functions of the eigenvalues,
/// `g^-1 = (g^2 - e1 g + e2 Id) / e3`; `e3` must be a signed monomial. The
/// candidate is returned only if `g * cand = cand * g = Id` exactly.
pub fn invert_gate(g: &Gate, eigenvalues: &[LPoly; 3]) -> Result<Gate> {
    let [l1, l2, l3] = eigenvalues;
    let e1 = &(l1 + l2) + l3;
    let e2 = &(&(l1 * l2) + &(l1 * l3)) + &(l2 * l3);
    let e3 = &(l1 * l2) * l3;
    let inv_e3 = e3
        .unit_inverse()
        .ok_or(Error::InverseVerificationFailed { row: 0, col: 0 })?;

    let m = g.matrix();
    let m2 = m * m;
    let cand = m2
        .add(&m.scale(&YExt::from(-&e1)))
        .add(&YMatrix::identity(16).scale(&YExt::from(e2)))
        .scale(&YExt::from(inv_e3));

    let id = YMatrix::identity(16);
    for prod in [m * &cand, &cand * m] {
        if let Some((row, col)) = prod.first_difference(&id) {
            return Err(Error::InverseVerificationFailed { row, col });
        }
    }
    Ok(Gate(cand))
}

pub fn invert_r(r: &Gate) -> Result<Gate> {
    invert_gate(r, &r_eigenvalues())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rotation {
    Left,
    Right,
}

/// Index rotations of a two-site operator.
///
/// Writing `A_(i,j)^(k,l)` for the coefficient of `w_k ⊗ w_l` in `A(w_i ⊗ w_j)`:
/// left gives `B_(k,i)^(l,j) = A_(i,j)^(k,l)`, right gives `B_(j,l)^(i,k) = A_(i,j)^(k,l)`.
pub fn rotate(a: &Gate, dir: Rotation) -> Gate {
    let mut m = YMatrix::zeros(16);
    for i in 1..=4 {
        for j in 1..=4 {
            for k in 1..=4 {
                for l in 1..=4 {
                    let v = a.coeff((k, l), (i, j));
                    if v.is_zero() {
                        continue;
                    }
                    match dir {
                        Rotation::Left => m.set(idx(l, j), idx(k, i), v.clone()),
                        Rotation::Right => m.set(idx(i, k), idx(j, l), v.clone()),
                    }
                }
            }
        }
    }
    Gate(m)
}

/// `tr_2((id ⊗ weight) A)`: entry `(a, b)` is `Σ_s weight_s A_(b,s)^(a,s)`.
pub fn partial_trace2(a: &Gate, weight: &Enhancement) -> YMatrix {
    let mut out = YMatrix::zeros(4);
    for x in 0..4 {
        for y in 0..4 {
            let mut acc = YExt::zero();
            for s in 0..4 {
                let v = a.0.get(4 * x + s, 4 * y + s);
                if !v.is_zero() {
                    acc.add_assign_ref(&(weight.entry(s) * v));
                }
            }
            out.set(x, y, acc);
        }
    }
    out
}

/// Outcome of one axiom check; `witness` is the first differing entry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomResult {
    pub name: &'static str,
    pub pass: bool,
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub results: Vec<AxiomResult>,
}

impl AxiomReport {
    pub fn all_pass(&self) -> bool {
        self.results.iter().all(|r| r.pass)
    }

    pub fn get(&self, name: &str) -> Option<&AxiomResult> {
        self.results.iter().find(|r| r.name == name)
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.results {
            writeln!(f, "axiom: {}", r.name)?;
            writeln!(f, "  pass: {}", r.pass)?;
            if let Some(w) = &r.witness {
                writeln!(f, "  witness: {w}")?;
            }
        }
        Ok(())
    }
}

fn compare(name: &'static str, lhs: &YMatrix, rhs: &YMatrix) -> AxiomResult {
    match lhs.first_difference(rhs) {
        None => AxiomResult {
            name,
            pass: true,
            witness: None,
        },
        Some((r, c)) => AxiomResult {
            name,
            pass: false,
            witness: Some(format!(
                "entry ({r}, {c}): lhs = {}, rhs = {}",
                lhs.get(r, c),
                rhs.get(r, c)
            )),
        },
    }
}

fn failed(name: &'static str, why: String) -> AxiomResult {
    AxiomResult {
        name,
        pass: false,
        witness: Some(why),
    }
}

/// Checks the four enhanced R-matrix identities exactly:
///
/// * `commute`: `R (h⊗h) = (h⊗h) R`
/// * `trace`: `tr_2((id⊗h) R^±1) = id`
/// * `rotation`: `(R^-1)^left ∘ ((id⊗h) R (h^-1⊗id))^right = id`
/// * `yang-baxter`: `(R⊗id)(id⊗R)(R⊗id) = (id⊗R)(R⊗id)(id⊗R)`
pub fn verify_axioms(r: &Gate, h: &Enhancement) -> AxiomReport {
    let hm = h.matrix();
    let id4 = YMatrix::identity(4);
    let hh = hm.kron(&hm);
    let rm = r.matrix();
    let mut results = Vec::with_capacity(4);

    results.push(compare("commute", &(rm * &hh), &(&hh * rm)));

    let inverse = invert_r(r);
    let mut trace = compare("trace", &partial_trace2(r, h), &id4);
    if trace.pass {
        trace = match &inverse {
            Ok(ri) => compare("trace", &partial_trace2(ri, h), &id4),
            Err(e) => failed("trace", format!("no inverse: {e}")),
        };
    }
    results.push(trace);

    let rotation = match (&inverse, h.inverse()) {
        (Ok(ri), Some(hinv)) => {
            let inner = &(&id4.kron(&hm) * rm) * &hinv.matrix().kron(&id4);
            let lhs = rotate(ri, Rotation::Left).0;
            let rhs = rotate(&Gate(inner), Rotation::Right).0;
            compare("rotation", &(&lhs * &rhs), &YMatrix::identity(16))
        }
        (Err(e), _) => failed("rotation", format!("no inverse: {e}")),
        (_, None) => failed("rotation", "enhancement is not invertible".into()),
    };
    results.push(rotation);

    let left = rm.kron(&id4);
    let right = id4.kron(rm);
    let lhs = &(&left * &right) * &left;
    let rhs = &(&right * &left) * &right;
    results.push(compare("yang-baxter", &lhs, &rhs));

    AxiomReport { results }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn displayed_cells() {
        let r = build_r();
        assert_eq!(r.coeff((1, 1), (1, 1)), &YExt::from(LPoly::t0()));
        assert_eq!(r.coeff((4, 4), (4, 4)), &YExt::from(LPoly::t1()));
        assert_eq!(r.coeff((4, 1), (4, 1)), &YExt::from(y_squared()));
        assert_eq!(r.coeff((4, 1), (1, 4)), &YExt::one());
        assert_eq!(r.0.nonzero_count(), 26);
    }

    #[test]
    fn enhancement_entries() {
        let h = build_h();
        assert_eq!(h.entry(0), &YExt::from(LPoly::monomial(1, -1, 0)));
        assert_eq!(h.entry(1), &YExt::from(LPoly::monomial(-1, 0, 1)));
        assert_eq!(h.determinant(), YExt::from(LPoly::monomial(1, -2, 2)));
        assert!(h.trace().is_zero());
    }

    #[test]
    fn inverse_is_two_sided_and_involutive() {
        let r = build_r();
        let ri = invert_r(&r).unwrap();
        assert_eq!(&r.0 * &ri.0, YMatrix::identity(16));
        let back = invert_gate(&ri, &r_inverse_eigenvalues()).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn wrong_spectrum_is_rejected() {
        let r = build_r();
        let bogus = [LPoly::t0(), LPoly::t0(), LPoly::constant(-1)];
        let err = invert_gate(&r, &bogus).unwrap_err();
        assert_eq!(err.code(), "INVERSE_VERIFICATION_FAILED");
    }

    #[test]
    fn rotate_elementary_unit() {
        // E with A_(1,2)^(3,4) = 1
        let mut m = YMatrix::zeros(16);
        m.set(idx(3, 4), idx(1, 2), YExt::one());
        let left = rotate(&Gate(m), Rotation::Left);
        assert_eq!(left.coeff((4, 2), (3, 1)), &YExt::one());
        assert_eq!(left.0.nonzero_count(), 1);
    }

    #[test]
    fn rotate_identity_left() {
        let left = rotate(&Gate::identity(), Rotation::Left);
        // A_(i,j)^(k,l) = δ_ik δ_jl lands at input (k,i) = (i,i), output (l,j) = (j,j)
        for i in 1..=4 {
            for j in 1..=4 {
                assert_eq!(left.coeff((j, j), (i, i)), &YExt::one());
            }
        }
        assert_eq!(left.0.nonzero_count(), 16);
    }

    #[test]
    fn rotations_are_inverse_bijections() {
        let r = build_r();
        assert_eq!(rotate(&rotate(&r, Rotation::Left), Rotation::Right), r);
        assert_eq!(rotate(&rotate(&r, Rotation::Right), Rotation::Left), r);
    }

    #[test]
    fn partial_trace_of_identity_is_trace_of_weight() {
        let p = partial_trace2(&Gate::identity(), &build_h());
        assert_eq!(p, YMatrix::zeros(4));
    }

    #[test]
    fn partial_trace_of_elementary_tensor() {
        // f = E_{21} (w1 -> w2), g = diag(2, 3, 5, 7); tr_2(f ⊗ g) = 17 f
        let f = {
            let mut m = YMatrix::zeros(4);
            m.set(1, 0, YExt::one());
            m
        };
        let g = YMatrix::diagonal(&[2, 3, 5, 7].map(|c| YExt::from(LPoly::constant(c))));
        let p = partial_trace2(&Gate(f.kron(&g)), &Enhancement::identity());
        assert_eq!(p, f.scale(&YExt::from(LPoly::constant(17))));
    }

    #[test]
    fn lg_pair_satisfies_all_axioms() {
        let rep = verify_axioms(&build_r(), &build_h());
        assert!(rep.all_pass(), "{rep}");
    }

    #[test]
    fn identity_gate_fails_trace_axiom() {
        let rep = verify_axioms(&Gate::identity(), &build_h());
        assert!(!rep.get("trace").unwrap().pass);
    }

    #[test]
    fn trivial_enhancement_fails_trace_axiom() {
        let rep = verify_axioms(&build_r(), &Enhancement::identity());
        let t = rep.get("trace").unwrap();
        assert!(!t.pass);
        assert!(t.witness.is_some());
    }
}
