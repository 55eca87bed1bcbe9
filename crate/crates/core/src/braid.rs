//! Braid words, their representation on `V^⊗n`, and the closure invariant.

use std::fmt;
use std::sync::OnceLock;

use crate::algebra::{to_coeff_table, CoeffTable, YExt};
use crate::error::{Error, Result};
use crate::rmatrix::{build_h, build_r, invert_r, Enhancement, Gate};

pub const MAX_STRANDS: usize = 8;
pub const MAX_LENGTH: usize = 64;

/// A word in the braid group `B_n`; letter `±k` stands for `σ_k^{±1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::Parse("a braid needs at least one strand".into()));
        }
        for &l in &letters {
            if l == 0 {
                return Err(Error::Parse("generator index 0".into()));
            }
            if l.unsigned_abs() as usize >= strands {
                return Err(Error::Parse(format!(
                    "letter {l} needs more than {strands} strands"
                )));
            }
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Reversed word with every sign flipped; its closure is the mirror image.
    pub fn mirror(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| -l).collect(),
        }
    }

    /// Concatenation `self · other` in the larger of the two braid groups.
    pub fn concat(&self, other: &BraidWord) -> BraidWord {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        BraidWord {
            strands: self.strands.max(other.strands),
            letters,
        }
    }

    /// Markov stabilization `b · σ_n^{±1}` in `B_{n+1}`.
    pub fn stabilize(&self, positive: bool) -> BraidWord {
        let n = self.strands as i32;
        let mut letters = self.letters.clone();
        letters.push(if positive { n } else { -n });
        BraidWord {
            strands: self.strands + 1,
            letters,
        }
    }

    /// Image of each strand position under the underlying permutation.
    pub fn permutation(&self) -> Vec<usize> {
        let mut perm: Vec<usize> = (0..self.strands).collect();
        for &l in &self.letters {
            let k = l.unsigned_abs() as usize - 1;
            perm.swap(k, k + 1);
        }
        perm
    }

    /// Number of components of the closure: cycles of the permutation.
    pub fn components(&self) -> u32 {
        let perm = self.permutation();
        let mut seen = vec![false; perm.len()];
        let mut cycles = 0;
        for start in 0..perm.len() {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut k = start;
            while !seen[k] {
                seen[k] = true;
                k = perm[k];
            }
        }
        cycles
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}", self.strands)?;
        for l in &self.letters {
            write!(f, " {l}")?;
        }
        Ok(())
    }
}

impl std::str::FromStr for BraidWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_braid(s)
    }
}

/// Parses `"[n=<strands>] l1 l2 ..."` with whitespace or comma separators.
pub fn parse_braid(text: &str) -> Result<BraidWord> {
    let mut strands = None;
    let mut letters = Vec::new();
    for (pos, tok) in text
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .enumerate()
    {
        if let Some(v) = tok.strip_prefix("n=") {
            if pos != 0 {
                return Err(Error::Parse(format!(
                    "strand count `{tok}` must come first"
                )));
            }
            let n: usize = v
                .parse()
                .map_err(|_| Error::Parse(format!("bad strand count `{tok}`")))?;
            strands = Some(n);
            continue;
        }
        let l: i32 = tok
            .parse()
            .map_err(|_| Error::Parse(format!("bad braid letter `{tok}`")))?;
        if l == 0 {
            return Err(Error::Parse("generator index 0".into()));
        }
        letters.push(l);
    }
    let n = strands.unwrap_or_else(|| {
        1 + letters
            .iter()
            .map(|l| l.unsigned_abs() as usize)
            .max()
            .unwrap_or(0)
    });
    BraidWord::new(n, letters)
}

/// Sparse operator on `V^⊗n`, stored by column.
///
/// Basis index of `w_{i1} ⊗ ... ⊗ w_{in}` is the base-4 number `i1 ... in`
/// (digits `i - 1`), so site 1 is the most significant digit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseOp {
    strands: usize,
    cols: Vec<Vec<(usize, YExt)>>,
}

impl SparseOp {
    pub fn identity(strands: usize) -> Self {
        let dim = 1usize << (2 * strands);
        SparseOp {
            strands,
            cols: (0..dim).map(|c| vec![(c, YExt::one())]).collect(),
        }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn dim(&self) -> usize {
        self.cols.len()
    }

    pub fn get(&self, row: usize, col: usize) -> YExt {
        let c = &self.cols[col];
        match c.binary_search_by_key(&row, |e| e.0) {
            Ok(k) => c[k].1.clone(),
            Err(_) => YExt::zero(),
        }
    }

    /// Stored entries of column `col`, sorted by row.
    pub fn column(&self, col: usize) -> &[(usize, YExt)] {
        &self.cols[col]
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }

    pub fn is_identity(&self) -> bool {
        self.cols
            .iter()
            .enumerate()
            .all(|(c, col)| col.len() == 1 && col[0].0 == c && col[0].1.is_one())
    }
}

/// Left-multiplies `op` by the gate acting on sites `site`, `site + 1`.
pub fn apply_gate(op: &SparseOp, g: &Gate, site: usize) -> Result<SparseOp> {
    let n = op.strands;
    if site == 0 || site >= n {
        return Err(Error::SiteOutOfRange { site, strands: n });
    }
    let gate_cols: Vec<Vec<(usize, &YExt)>> = (0..16).map(|c| g.column(c).collect()).collect();
    // digits of sites `site` and `site + 1` sit at this place value
    let low = 1usize << (2 * (n - site - 1));
    let cols = op
        .cols
        .iter()
        .map(|col| {
            let mut acc: Vec<(usize, YExt)> = Vec::with_capacity(col.len() * 2);
            for (row, v) in col {
                let pair = (row / low) % 16;
                let base = row - pair * low;
                for (q, gv) in &gate_cols[pair] {
                    acc.push((base + q * low, *gv * v));
                }
            }
            merge_sorted(acc)
        })
        .collect();
    Ok(SparseOp { strands: n, cols })
}

fn merge_sorted(mut acc: Vec<(usize, YExt)>) -> Vec<(usize, YExt)> {
    acc.sort_unstable_by_key(|e| e.0);
    let mut out: Vec<(usize, YExt)> = Vec::with_capacity(acc.len());
    for (r, v) in acc {
        match out.last_mut() {
            Some((lr, lv)) if *lr == r => lv.add_assign_ref(&v),
            _ => out.push((r, v)),
        }
    }
    out.retain(|(_, v)| !v.is_zero());
    out
}

/// R-matrix, its inverse and enhancement used by the braid engine.
#[derive(Clone, Debug)]
pub struct Engine {
    pub r: Gate,
    pub r_inv: Gate,
    pub h: Enhancement,
}

impl Engine {
    pub fn new(r: Gate, r_inv: Gate, h: Enhancement) -> Self {
        Engine { r, r_inv, h }
    }

    /// The Links–Gould engine, built once per process.
    pub fn links_gould() -> &'static Engine {
        static LG: OnceLock<Engine> = OnceLock::new();
        LG.get_or_init(|| {
            let r = build_r();
            let r_inv = invert_r(&r).expect("LG R-matrix is invertible");
            Engine::new(r, r_inv, build_h())
        })
    }

    pub fn rho(&self, b: &BraidWord) -> Result<SparseOp> {
        check_limits(b)?;
        let mut op = SparseOp::identity(b.strands);
        for &l in &b.letters {
            let g = if l > 0 { &self.r } else { &self.r_inv };
            op = apply_gate(&op, g, l.unsigned_abs() as usize)?;
        }
        Ok(op)
    }

    /// `tr_{2..n}((id ⊗ h^{⊗(n-1)}) op)` as a 4×4 array.
    pub fn closure_trace(&self, op: &SparseOp) -> [[YExt; 4]; 4] {
        let n = op.strands;
        let block = 1usize << (2 * (n - 1));
        let weights: Vec<YExt> = (0..block).map(|s| self.weight(s, n - 1)).collect();
        let mut out: [[YExt; 4]; 4] =
            std::array::from_fn(|_| std::array::from_fn(|_| YExt::zero()));
        for (b, row) in (0..4).map(|b| (b, b * block)) {
            for (s, w) in weights.iter().enumerate() {
                for (r, v) in &op.cols[row + s] {
                    if r % block == s {
                        out[r / block][b].add_assign_ref(&(w * v));
                    }
                }
            }
        }
        out
    }

    fn weight(&self, mut s: usize, sites: usize) -> YExt {
        let mut w = YExt::one();
        for _ in 0..sites {
            w = &w * self.h.entry(s % 4);
            s /= 4;
        }
        w
    }

    /// The scalar `N` with `tr_{2..n}((id ⊗ h^{⊗(n-1)}) ρ(b)) = N · Id`.
    pub fn evaluate(&self, b: &BraidWord) -> Result<YExt> {
        let op = self.rho(b)?;
        let n = self.closure_trace(&op);
        for (a, row) in n.iter().enumerate() {
            for (c, v) in row.iter().enumerate() {
                let bad = if a == c { v != &n[0][0] } else { !v.is_zero() };
                if bad {
                    return Err(Error::NotScalar { row: a, col: c });
                }
            }
        }
        Ok(n[0][0].clone())
    }
}

fn check_limits(b: &BraidWord) -> Result<()> {
    if b.strands > MAX_STRANDS {
        return Err(Error::ResourceLimit(format!(
            "{} strands exceeds the limit of {MAX_STRANDS}",
            b.strands
        )));
    }
    if b.len() > MAX_LENGTH {
        return Err(Error::ResourceLimit(format!(
            "word length {} exceeds the limit of {MAX_LENGTH}",
            b.len()
        )));
    }
    Ok(())
}

/// `ρ_R(b)` for the Links–Gould R-matrix.
pub fn rho(b: &BraidWord) -> Result<SparseOp> {
    Engine::links_gould().rho(b)
}

/// Links–Gould invariant of the closure of `b`, with `mu` set to its component count.
pub fn lg_of_braid(b: &BraidWord) -> Result<CoeffTable> {
    let v = Engine::links_gould().evaluate(b)?;
    to_coeff_table(&v, Some(b.components()))
}
