//! Exhaustive search for normalized relators whose star-graph is `K_{n,n}`.
//!
//! Candidates are built depth first in letter order with the occurrence and
//! sign budgets, the fixed prefixes and free reduction enforced as the word
//! grows, so the output is already sorted.

use serde::{Deserialize, Serialize};

use crate::presentation::Presentation;
use crate::stargraph::StarGraph;
use crate::words::{Letter, Word};

/// Normalization applied to candidate relators.
///
/// Each generator occurs exactly `occurrences` times counting both signs,
/// strictly more often positively than negatively, and the word starts with
/// one of `prefixes`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CandidateConstraints {
    pub rank: usize,
    pub occurrences: usize,
    pub prefixes: Vec<Vec<Letter>>,
}

impl Default for CandidateConstraints {
    /// Rank 3, length 9, prefix `x²y` or `x²y⁻¹`.
    fn default() -> Self {
        let x = Letter::pos(0);
        CandidateConstraints {
            rank: 3,
            occurrences: 3,
            prefixes: vec![vec![x, x, Letter::pos(1)], vec![x, x, Letter::neg(1)]],
        }
    }
}

impl CandidateConstraints {
    pub fn length(&self) -> usize {
        self.rank * self.occurrences
    }

    fn max_negative(&self) -> usize {
        (self.occurrences - 1) / 2
    }

    /// Checks a complete word against every constraint.
    pub fn admits(&self, w: &Word) -> bool {
        let l = w.letters();
        l.len() == self.length()
            && w.rank() == self.rank
            && w.is_cyclically_reduced()
            && self.prefixes.iter().any(|p| l.starts_with(p))
            && (0..self.rank as u16).all(|g| {
                let pos = l.iter().filter(|&&c| c == Letter::pos(g)).count();
                let neg = l.iter().filter(|&&c| c == Letter::neg(g)).count();
                pos + neg == self.occurrences && pos > neg
            })
    }
}

/// Every cyclically reduced word satisfying `c`, each once, in lexicographic
/// letter order.
pub fn candidates(c: &CandidateConstraints) -> Vec<Word> {
    struct Dfs<'a> {
        c: &'a CandidateConstraints,
        word: Vec<Letter>,
        used: Vec<usize>,
        negative: Vec<usize>,
        out: Vec<Word>,
    }

    impl Dfs<'_> {
        fn go(&mut self) {
            let depth = self.word.len();
            if depth == self.c.length() {
                if depth <= 1 || self.word[0] != self.word[depth - 1].inv() {
                    self.out.push(Word::raw(self.c.rank, self.word.clone()).expect("letters in range"));
                }
                return;
            }
            for idx in 0..2 * self.c.rank {
                let l = Letter::from_index(idx);
                let g = l.generator as usize;
                if self.used[g] == self.c.occurrences {
                    continue;
                }
                if l.inverse && self.negative[g] == self.c.max_negative() {
                    continue;
                }
                if self.word.last() == Some(&l.inv()) {
                    continue;
                }
                let prefix_ok = self.c.prefixes.iter().any(|p| match p.get(depth) {
                    Some(&want) => want == l && p[..depth] == self.word[..],
                    None => self.word.starts_with(p),
                });
                if !prefix_ok {
                    continue;
                }
                self.word.push(l);
                self.used[g] += 1;
                self.negative[g] += l.inverse as usize;
                self.go();
                self.negative[g] -= l.inverse as usize;
                self.used[g] -= 1;
                self.word.pop();
            }
        }
    }

    let mut dfs = Dfs {
        c,
        word: Vec::with_capacity(c.length()),
        used: vec![0; c.rank],
        negative: vec![0; c.rank],
        out: Vec::new(),
    };
    dfs.go();
    dfs.out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum FilterMode {
    /// Girth 4 and diameter 2.
    Proxy,
    /// Exact `K_{n,n}` recognition.
    Exact,
}

fn star_graph(w: &Word) -> StarGraph {
    StarGraph::build(&Presentation::one_relator(w.clone()).expect("cyclically reduced candidate"))
}

pub fn passes(w: &Word, mode: FilterMode) -> bool {
    let g = star_graph(w);
    match mode {
        FilterMode::Proxy => {
            let s = g.simple_graph();
            s.girth() == Some(4) && s.analyze().diameter == Some(2)
        }
        FilterMode::Exact => g.is_knn(w.rank()),
    }
}

/// Keeps the words passing `mode`, sorted.
pub fn filter_special<I: IntoIterator<Item = Word>>(ws: I, mode: FilterMode) -> Vec<Word> {
    let mut out: Vec<Word> = ws.into_iter().filter(|w| passes(w, mode)).collect();
    out.sort();
    out
}

/// The admissible relators of length 9 over rank 3.
pub fn enumerate_29_special() -> Vec<Word> {
    filter_special(candidates(&CandidateConstraints::default()), FilterMode::Exact)
}

/// Sizes at each filter stage.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationReport {
    pub candidates: usize,
    pub proxy: usize,
    pub exact: usize,
    pub filters_agree: bool,
    pub words: Vec<String>,
}

pub fn enumeration_report(c: &CandidateConstraints, mode: FilterMode) -> EnumerationReport {
    let cands = candidates(c);
    let proxy = filter_special(cands.iter().cloned(), FilterMode::Proxy);
    let exact = filter_special(cands.iter().cloned(), FilterMode::Exact);
    let chosen = match mode {
        FilterMode::Proxy => &proxy,
        FilterMode::Exact => &exact,
    };
    EnumerationReport {
        candidates: cands.len(),
        proxy: proxy.len(),
        exact: exact.len(),
        filters_agree: proxy == exact,
        words: chosen.iter().map(Word::to_compact).collect(),
    }
}
