//! Coset tables and the low-index subgroup search.
//!
//! Columns are indexed by [`Letter::index`] (`x, x⁻¹, y, y⁻¹, …`); coset 0 is
//! the subgroup itself. A table is standardized when scanning rows in order
//! and columns in order, cosets first appear as `1, 2, 3, …`.

use thiserror::Error;

use crate::presentation::Presentation;
use crate::words::Letter;

const EMPTY: usize = usize::MAX;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TableError {
    #[error("entry ({coset}, {column}) is undefined")]
    Incomplete { coset: usize, column: usize },
    #[error("columns {column} and its inverse disagree at coset {coset}")]
    NotInverse { coset: usize, column: usize },
    #[error("relator {relator} does not close at coset {coset}")]
    RelatorOpen { relator: usize, coset: usize },
    #[error("table is not standardized")]
    NotStandard,
    #[error("rank mismatch")]
    RankMismatch,
}

/// A complete coset table of a finite-index subgroup.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CosetTable {
    rank: usize,
    index: usize,
    entries: Vec<usize>,
}

impl CosetTable {
    /// The trivial table of index 1.
    pub fn trivial(rank: usize) -> Self {
        CosetTable { rank, index: 1, entries: vec![0; 2 * rank] }
    }

    /// Builds a table from rows of `2·rank` entries; no validity checks.
    pub fn from_rows(rank: usize, rows: &[Vec<usize>]) -> Self {
        CosetTable { rank, index: rows.len(), entries: rows.concat() }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn index(&self) -> usize {
        self.index
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn act(&self, coset: usize, letter: Letter) -> usize {
        self.entries[coset * 2 * self.rank + letter.index()]
    }

    pub fn row(&self, coset: usize) -> &[usize] {
        &self.entries[coset * 2 * self.rank..(coset + 1) * 2 * self.rank]
    }

    /// Renumbers cosets by first appearance when scanning from `base`.
    pub fn standardize_from(&self, base: usize) -> CosetTable {
        let cols = 2 * self.rank;
        let mut order = vec![base];
        let mut label = vec![EMPTY; self.index];
        label[base] = 0;
        let mut i = 0;
        while i < order.len() {
            let c = order[i];
            for col in 0..cols {
                let d = self.entries[c * cols + col];
                if label[d] == EMPTY {
                    label[d] = order.len();
                    order.push(d);
                }
            }
            i += 1;
        }
        let mut entries = vec![0; self.entries.len()];
        for (new, &old) in order.iter().enumerate() {
            for col in 0..cols {
                entries[new * cols + col] = label[self.entries[old * cols + col]];
            }
        }
        CosetTable { rank: self.rank, index: self.index, entries }
    }

    pub fn is_standard(&self) -> bool {
        self.standardize_from(0) == *self
    }

    /// Checks completeness, inverse columns, relator closure and standard
    /// numbering.
    pub fn validate(&self, p: &Presentation) -> Result<(), TableError> {
        if p.rank() != self.rank {
            return Err(TableError::RankMismatch);
        }
        let cols = 2 * self.rank;
        for c in 0..self.index {
            for col in 0..cols {
                let d = self.entries[c * cols + col];
                if d >= self.index {
                    return Err(TableError::Incomplete { coset: c, column: col });
                }
                if self.entries[d * cols + (col ^ 1)] != c {
                    return Err(TableError::NotInverse { coset: c, column: col });
                }
            }
        }
        for (ri, r) in p.relators().iter().enumerate() {
            for c in 0..self.index {
                let end = r.letters().iter().fold(c, |cur, &l| self.act(cur, l));
                if end != c {
                    return Err(TableError::RelatorOpen { relator: ri, coset: c });
                }
            }
        }
        if !self.is_standard() {
            return Err(TableError::NotStandard);
        }
        Ok(())
    }

    /// Number of subgroups conjugate to this one: distinct standardized
    /// tables over all base cosets.
    pub fn conjugacy_class_size(&self) -> usize {
        let mut seen: Vec<CosetTable> = (0..self.index).map(|b| self.standardize_from(b)).collect();
        seen.sort();
        seen.dedup();
        seen.len()
    }

    /// True when this table is the least among its conjugates.
    pub fn is_class_representative(&self) -> bool {
        (1..self.index).all(|b| *self <= self.standardize_from(b))
    }

    /// Cosets fixed by the subgroup's normalizer, i.e. bases giving the same
    /// standardized table.
    pub fn normalizer_index(&self) -> usize {
        (0..self.index).filter(|&b| self.standardize_from(b) == *self).count()
    }
}

/// Partial table used during the search.
#[derive(Clone)]
struct Partial {
    cols: usize,
    cosets: usize,
    entries: Vec<usize>,
}

impl Partial {
    fn get(&self, c: usize, col: usize) -> usize {
        self.entries[c * self.cols + col]
    }

    fn set(&mut self, c: usize, col: usize, d: usize) {
        self.entries[c * self.cols + col] = d;
        self.entries[d * self.cols + (col ^ 1)] = c;
    }

    fn first_gap(&self) -> Option<(usize, usize)> {
        let pos = self.entries[..self.cosets * self.cols].iter().position(|&e| e == EMPTY)?;
        Some((pos / self.cols, pos % self.cols))
    }

    /// Scans every relator rotation from every coset, filling forced entries.
    /// Returns false on a contradiction.
    fn deduce(&mut self, rels: &[Vec<usize>]) -> bool {
        loop {
            let mut changed = false;
            for c in 0..self.cosets {
                for r in rels {
                    let n = r.len();
                    let (mut f, mut i) = (c, 0);
                    while i < n {
                        let next = self.get(f, r[i]);
                        if next == EMPTY {
                            break;
                        }
                        f = next;
                        i += 1;
                    }
                    if i == n {
                        if f != c {
                            return false;
                        }
                        continue;
                    }
                    let (mut b, mut j) = (c, n);
                    while j > i {
                        let prev = self.get(b, r[j - 1] ^ 1);
                        if prev == EMPTY {
                            break;
                        }
                        b = prev;
                        j -= 1;
                    }
                    if j == i {
                        if f != b {
                            return false;
                        }
                    } else if j == i + 1 {
                        self.set(f, r[i], b);
                        changed = true;
                    }
                }
            }
            if !changed {
                return true;
            }
        }
    }

    fn into_table(self, rank: usize) -> CosetTable {
        let index = self.cosets;
        CosetTable { rank, index, entries: self.entries[..index * self.cols].to_vec() }
    }
}

/// All standardized relator-closed complete tables with at most `max_index`
/// cosets, in search order.
pub fn enumerate_tables(p: &Presentation, max_index: usize) -> Vec<CosetTable> {
    let rank = p.rank();
    let cols = 2 * rank;
    if max_index == 0 {
        return Vec::new();
    }
    if rank == 0 {
        return vec![CosetTable { rank, index: 1, entries: Vec::new() }];
    }
    let rels: Vec<Vec<usize>> = p
        .relators()
        .iter()
        .flat_map(|r| r.rotations())
        .map(|r| r.letters().iter().map(|l| l.index()).collect())
        .collect();

    fn search(t: Partial, rels: &[Vec<usize>], max: usize, rank: usize, out: &mut Vec<CosetTable>) {
        let Some((c, col)) = t.first_gap() else {
            out.push(t.into_table(rank));
            return;
        };
        for d in 0..t.cosets {
            if t.get(d, col ^ 1) != EMPTY {
                continue;
            }
            let mut next = t.clone();
            next.set(c, col, d);
            if next.deduce(rels) {
                search(next, rels, max, rank, out);
            }
        }
        if t.cosets < max {
            let mut next = t.clone();
            let d = next.cosets;
            next.cosets += 1;
            next.set(c, col, d);
            if next.deduce(rels) {
                search(next, rels, max, rank, out);
            }
        }
    }

    let start = Partial { cols, cosets: 1, entries: vec![EMPTY; max_index * cols] };
    let mut out = Vec::new();
    let mut start = start;
    if start.deduce(&rels) {
        search(start, &rels, max_index, rank, &mut out);
    }
    out
}
