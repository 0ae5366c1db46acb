//! Integer Smith normal form and finitely generated abelian groups.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

/// Dense integer matrix, row major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_rows<T: Into<BigInt> + Clone>(cols: usize, rows: &[Vec<T>]) -> Self {
        let mut m = IntMatrix::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "ragged row {i}");
            for (j, v) in r.iter().enumerate() {
                m[(i, j)] = v.clone().into();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let prod = a * &other[(k, j)];
                    out[(i, j)] += prod;
                }
            }
        }
        out
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[(k, k)].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !a[(i, k)].is_zero()) else {
                    return BigInt::zero();
                };
                a.swap_rows(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)]) / &prev;
                    a[(i, j)] = v;
                }
            }
            prev = a[(k, k)].clone();
        }
        sign * &a[(n - 1, n - 1)]
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// `row[dst] += q · row[src]`
    fn add_row(&mut self, dst: usize, src: usize, q: &BigInt) {
        for j in 0..self.cols {
            let v = &self[(src, j)] * q;
            self[(dst, j)] += v;
        }
    }

    /// `col[dst] += q · col[src]`
    fn add_col(&mut self, dst: usize, src: usize, q: &BigInt) {
        for i in 0..self.rows {
            let v = &self[(i, src)] * q;
            self[(i, dst)] += v;
        }
    }

    fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            let v = -&self[(r, j)];
            self[(r, j)] = v;
        }
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

/// `u · a · v = s` with `u`, `v` unimodular and `s` diagonal, each diagonal
/// entry dividing the next, nonnegative.
#[derive(Debug, Clone)]
pub struct SmithForm {
    pub s: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

impl SmithForm {
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.s.rows.min(self.s.cols)).map(|i| self.s[(i, i)].clone()).collect()
    }
}

struct Transforms {
    u: IntMatrix,
    v: IntMatrix,
}

fn reduce(mut a: IntMatrix, mut tr: Option<&mut Transforms>) -> IntMatrix {
    let (rows, cols) = (a.rows, a.cols);
    for t in 0..rows.min(cols) {
        loop {
            // Pivot: nonzero entry of least absolute value in the trailing block.
            let mut pivot: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    let e = &a[(i, j)];
                    if !e.is_zero() && pivot.is_none_or(|(pi, pj)| e.abs() < a[(pi, pj)].abs()) {
                        pivot = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = pivot else {
                return finish(a, tr);
            };
            a.swap_rows(t, pi);
            a.swap_cols(t, pj);
            if let Some(tr) = tr.as_deref_mut() {
                tr.u.swap_rows(t, pi);
                tr.v.swap_cols(t, pj);
            }
            let p = a[(t, t)].clone();
            let mut clean = true;
            for i in t + 1..rows {
                if a[(i, t)].is_zero() {
                    continue;
                }
                let q = -a[(i, t)].div_floor(&p);
                a.add_row(i, t, &q);
                if let Some(tr) = tr.as_deref_mut() {
                    tr.u.add_row(i, t, &q);
                }
                clean &= a[(i, t)].is_zero();
            }
            for j in t + 1..cols {
                if a[(t, j)].is_zero() {
                    continue;
                }
                let q = -a[(t, j)].div_floor(&p);
                a.add_col(j, t, &q);
                if let Some(tr) = tr.as_deref_mut() {
                    tr.v.add_col(j, t, &q);
                }
                clean &= a[(t, j)].is_zero();
            }
            if !clean {
                continue;
            }
            let bad_row = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !a[(i, j)].is_multiple_of(&p)));
            match bad_row {
                Some(i) => {
                    let one = BigInt::one();
                    a.add_row(t, i, &one);
                    if let Some(tr) = tr.as_deref_mut() {
                        tr.u.add_row(t, i, &one);
                    }
                }
                None => break,
            }
        }
    }
    finish(a, tr)
}

fn finish(mut a: IntMatrix, mut tr: Option<&mut Transforms>) -> IntMatrix {
    for t in 0..a.rows.min(a.cols) {
        if a[(t, t)].is_negative() {
            a.negate_row(t);
            if let Some(tr) = tr.as_deref_mut() {
                tr.u.negate_row(t);
            }
        }
    }
    a
}

pub fn smith_normal_form(a: &IntMatrix) -> SmithForm {
    let mut tr = Transforms { u: IntMatrix::identity(a.rows), v: IntMatrix::identity(a.cols) };
    let s = reduce(a.clone(), Some(&mut tr));
    SmithForm { s, u: tr.u, v: tr.v }
}

/// Diagonal of the Smith normal form without tracking transforms.
pub fn smith_diagonal(a: &IntMatrix) -> Vec<BigInt> {
    let s = reduce(a.clone(), None);
    (0..s.rows.min(s.cols)).map(|i| s[(i, i)].clone()).collect()
}

/// `Z^rank ⊕ Z_{d₁} ⊕ …` with `d₁ | d₂ | …` and every `dᵢ > 1`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AbelianGroup {
    pub rank: usize,
    pub torsion: Vec<BigUint>,
}

impl AbelianGroup {
    /// Panics unless `torsion` is a divisibility chain of entries > 1.
    pub fn new(rank: usize, torsion: &[u64]) -> Self {
        let torsion: Vec<BigUint> = torsion.iter().map(|&d| BigUint::from(d)).collect();
        assert!(torsion.iter().all(|d| *d > BigUint::one()), "torsion entries must exceed 1");
        assert!(torsion.windows(2).all(|p| (&p[1] % &p[0]).is_zero()), "torsion must form a divisibility chain");
        AbelianGroup { rank, torsion }
    }

    pub fn free(rank: usize) -> Self {
        AbelianGroup { rank, torsion: Vec::new() }
    }

    /// The group `Z^generators / ⟨rows of m⟩`.
    pub fn from_relation_matrix(generators: usize, m: &IntMatrix) -> Self {
        assert_eq!(m.cols, generators);
        let diag = smith_diagonal(m);
        let nonzero: Vec<&BigInt> = diag.iter().filter(|d| !d.is_zero()).collect();
        AbelianGroup {
            rank: generators - nonzero.len(),
            torsion: nonzero
                .into_iter()
                .map(|d| d.magnitude().clone())
                .filter(|d| *d > BigUint::one())
                .collect(),
        }
    }

    /// Order of the torsion subgroup.
    pub fn torsion_product(&self) -> BigUint {
        self.torsion.iter().product()
    }

    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    /// Parses `Z^4 + Z_3 + Z_3`, `Z`, `0`, also `Z^4+Z_9`.
    pub fn parse(text: &str) -> Option<Self> {
        let text = text.trim();
        if text == "0" {
            return Some(AbelianGroup::free(0));
        }
        let mut rank = 0;
        let mut torsion = Vec::new();
        for part in text.split('+').map(str::trim) {
            if part == "Z" {
                rank += 1;
            } else if let Some(r) = part.strip_prefix("Z^") {
                rank += r.trim_matches(['{', '}']).parse::<usize>().ok()?;
            } else {
                let d = part.strip_prefix("Z_")?;
                let (d, e) = match d.split_once('^') {
                    Some((d, e)) => (d, e.parse::<usize>().ok()?),
                    None => (d, 1),
                };
                let d: u64 = d.trim_matches(['{', '}']).parse().ok()?;
                torsion.extend(std::iter::repeat_n(d, e));
            }
        }
        torsion.sort_unstable();
        let ok = torsion.iter().all(|&d| d > 1) && torsion.windows(2).all(|p| p[1] % p[0] == 0);
        ok.then(|| AbelianGroup::new(rank, &torsion))
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        for d in &self.torsion {
            parts.push(format!("Z_{d}"));
        }
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

impl Serialize for AbelianGroup {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}
