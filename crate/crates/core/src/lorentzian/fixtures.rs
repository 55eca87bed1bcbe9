//! The trefoil under several choices of variables. None of them is
//! denormalized Lorentzian; each comes with a derivative whose Hessian has two
//! positive eigenvalues.

use super::mpoly::{clear_denominators, homogenize, LaurentMPoly, MPoly};
use super::symmat::SymMat;

#[derive(Clone, Debug)]
pub struct Fixture {
    pub name: &'static str,
    pub description: &'static str,
    /// Variable names, the homogenizing variable last.
    pub vars: [&'static str; 3],
    pub poly: LaurentMPoly,
    pub signs: [i8; 2],
    /// A derivative order whose Hessian fails, and that Hessian.
    pub alpha: [u32; 3],
    pub hessian: [[i64; 3]; 3],
}

impl Fixture {
    /// `Homog(P(s_0 x, s_1 y))` after clearing negative exponents.
    pub fn prepared(&self) -> MPoly {
        homogenize(&clear_denominators(&self.poly, &self.signs))
    }

    pub fn expected_hessian(&self) -> SymMat {
        let rows: Vec<&[i64]> = self.hessian.iter().map(|r| r.as_slice()).collect();
        SymMat::from_ints(&rows).expect("fixture Hessians are symmetric")
    }
}

fn trefoil_lg() -> Vec<(&'static [i64], i64)> {
    vec![
        (&[2, 1], -1),
        (&[2, 0], 1),
        (&[1, 2], -1),
        (&[1, 1], 2),
        (&[1, 0], -1),
        (&[0, 2], 1),
        (&[0, 1], -1),
        (&[0, 0], 1),
    ]
}

pub fn fixtures() -> Vec<Fixture> {
    vec![
        Fixture {
            name: "trefoil-t0t1",
            description: "LG(t0, t1) of the trefoil, signs (-, -)",
            vars: ["t0", "t1", "z"],
            poly: LaurentMPoly::from_int_terms(2, &trefoil_lg()),
            signs: [-1, -1],
            alpha: [0, 0, 1],
            hessian: [[1, 2, 1], [2, 1, 1], [1, 1, 1]],
        },
        Fixture {
            name: "trefoil-t0-t1inv",
            description: "t1^2 LG(t0, t1^-1) of the trefoil, signs (-, -)",
            vars: ["t0", "t1", "z"],
            poly: LaurentMPoly::from_int_terms(
                2,
                &[
                    (&[2, 2], 1),
                    (&[2, 1], -1),
                    (&[1, 2], -1),
                    (&[1, 1], 2),
                    (&[1, 0], -1),
                    (&[0, 2], 1),
                    (&[0, 1], -1),
                    (&[0, 0], 1),
                ],
            ),
            signs: [-1, -1],
            alpha: [1, 0, 1],
            hessian: [[0, 1, 0], [1, 1, 2], [0, 2, 1]],
        },
        Fixture {
            name: "v1",
            description: "V1(p, q) of the trefoil, signs (-, +), shifted by p^2",
            vars: ["p", "q", "z"],
            poly: LaurentMPoly::from_int_terms(
                2,
                &[
                    (&[2, 2], 1),
                    (&[1, 2], -1),
                    (&[1, 1], -1),
                    (&[0, 1], 2),
                    (&[0, 0], 1),
                    (&[-1, 1], -1),
                    (&[-1, 0], -1),
                    (&[-2, 0], 1),
                ],
            ),
            signs: [-1, 1],
            alpha: [3, 1, 0],
            hessian: [[0, 1, 0], [1, 0, 1], [0, 1, 1]],
        },
        Fixture {
            name: "v1-tilde",
            description: "V1 in u = p + 1/(pq) and q, signs (-, -)",
            vars: ["u", "q", "z"],
            poly: LaurentMPoly::from_int_terms(
                2,
                &[
                    (&[2, 2], 1),
                    (&[1, 3], 2),
                    (&[1, 2], -1),
                    (&[1, 1], 1),
                    (&[0, 4], 1),
                    (&[0, 3], -1),
                    (&[0, 2], 1),
                    (&[0, 1], -1),
                    (&[0, 0], 1),
                ],
            ),
            signs: [-1, -1],
            alpha: [1, 1, 0],
            hessian: [[0, 1, 0], [1, 2, 1], [0, 1, 1]],
        },
        Fixture {
            name: "v1-hat",
            description: "V1 in v = p + 1/(pq) - q - 1/q and q, signs (-, +)",
            vars: ["v", "q", "z"],
            poly: LaurentMPoly::from_int_terms(2, &[(&[2, 2], 1), (&[1, 2], -1), (&[1, 1], -1)]),
            signs: [-1, 1],
            alpha: [1, 1, 0],
            hessian: [[0, 1, 0], [1, 0, 1], [0, 1, 1]],
        },
    ]
}

pub fn fixture(name: &str) -> Option<Fixture> {
    fixtures().into_iter().find(|f| f.name == name)
}
