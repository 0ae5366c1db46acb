//! Reidemeister–Schreier rewriting over a standardized coset table.
//!
//! The spanning tree is the one implied by standard numbering: coset `d > 0`
//! hangs off the slot where it first appears. Every other edge `c --g--> c·g`
//! (positive `g`) becomes a Schreier generator.

use std::collections::HashMap;

use crate::lowindex::abelian::{AbelianGroup, IntMatrix};
use crate::lowindex::coset_table::CosetTable;
use crate::presentation::Presentation;
use crate::words::{Letter, Word};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgroupPresentation {
    pub generators: usize,
    pub relators: Vec<Word>,
}

impl SubgroupPresentation {
    pub fn deficiency(&self) -> isize {
        self.generators as isize - self.relators.len() as isize
    }

    pub fn exponent_matrix(&self) -> IntMatrix {
        let rows: Vec<Vec<i64>> = self.relators.iter().map(Word::exponent_vector).collect();
        IntMatrix::from_rows(self.generators, &rows)
    }

    pub fn abelianization(&self) -> AbelianGroup {
        AbelianGroup::from_relation_matrix(self.generators, &self.exponent_matrix())
    }
}

/// Labels of the positive edges `(coset, generator)`; tree edges map to `None`.
fn edge_labels(t: &CosetTable) -> (HashMap<(usize, u16), usize>, usize) {
    let rank = t.rank();
    let mut tree = vec![false; t.index() * rank];
    let mut seen = vec![false; t.index()];
    seen[0] = true;
    for c in 0..t.index() {
        for col in 0..2 * rank {
            let l = Letter::from_index(col);
            let d = t.act(c, l);
            if seen[d] {
                continue;
            }
            seen[d] = true;
            // Tree edge c --l--> d, stored by its positive orientation.
            let (src, g) = if l.inverse { (d, l.generator) } else { (c, l.generator) };
            tree[src * rank + g as usize] = true;
        }
    }
    let mut labels = HashMap::new();
    for c in 0..t.index() {
        for g in 0..rank as u16 {
            if !tree[c * rank + g as usize] {
                let next = labels.len();
                labels.insert((c, g), next);
            }
        }
    }
    let n = labels.len();
    (labels, n)
}

/// Presentation of the subgroup described by `t`: `k(n−1)+1` generators and
/// one rewritten relator per (coset, relator) pair.
pub fn schreier_presentation(p: &Presentation, t: &CosetTable) -> SubgroupPresentation {
    let (labels, generators) = edge_labels(t);
    let mut relators = Vec::with_capacity(t.index() * p.relators().len());
    for r in p.relators() {
        for c in 0..t.index() {
            let mut cur = c;
            let mut letters = Vec::new();
            for &l in r.letters() {
                if l.inverse {
                    let d = t.act(cur, l);
                    if let Some(&s) = labels.get(&(d, l.generator)) {
                        letters.push(Letter::neg(s as u16));
                    }
                    cur = d;
                } else {
                    if let Some(&s) = labels.get(&(cur, l.generator)) {
                        letters.push(Letter::pos(s as u16));
                    }
                    cur = t.act(cur, l);
                }
            }
            relators.push(Word::new(generators, letters).expect("labels below generator count"));
        }
    }
    SubgroupPresentation { generators, relators }
}
