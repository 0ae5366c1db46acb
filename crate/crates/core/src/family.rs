//! The one-relator family `P(n, α) = ⟨x₁,…,xₙ ∣ wₙ^α⟩` with
//! `w₁ = x₁` and `wₙ = wₙ₋₁ xₙ ∏_{j=1}^{n-1} (xₙ x_{n-j})`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::presentation::Presentation;
use crate::stargraph::StarGraph;
use crate::words::{Letter, Word};

#[derive(Debug, Error, Clone, Copy, PartialEq, Eq)]
pub enum FamilyError {
    #[error("n must be at least 1")]
    ZeroRank,
    #[error("alpha must be at least 1")]
    ZeroPower,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyParams {
    pub n: usize,
    pub alpha: usize,
}

impl FamilyParams {
    pub fn new(n: usize, alpha: usize) -> Result<Self, FamilyError> {
        if n == 0 {
            return Err(FamilyError::ZeroRank);
        }
        if alpha == 0 {
            return Err(FamilyError::ZeroPower);
        }
        Ok(FamilyParams { n, alpha })
    }
}

/// The positive word `wₙ` of length `n²`, built iteratively.
pub fn w(n: usize) -> Word {
    let mut letters = Vec::with_capacity(n * n);
    if n >= 1 {
        letters.push(Letter::pos(0));
    }
    for m in 2..=n {
        let xm = Letter::pos((m - 1) as u16);
        letters.push(xm);
        for j in 1..m {
            letters.push(xm);
            letters.push(Letter::pos((m - 1 - j) as u16));
        }
    }
    Word::raw(n, letters).expect("generators below n")
}

pub fn presentation(p: FamilyParams) -> Presentation {
    let relator = w(p.n).power(p.alpha).expect("alpha ≥ 1");
    Presentation::one_relator(relator).expect("positive words are cyclically reduced")
}

/// Ordered pairs `(i, j)` realised as `(xᵢ, xⱼ⁻¹)` by cyclic adjacencies
/// `xᵢ xⱼ` of a positive word.
pub fn adjacency_pairs(word: &Word) -> BTreeSet<(u16, u16)> {
    let l = word.letters();
    (0..l.len()).map(|i| (l[i].generator, l[(i + 1) % l.len()].generator)).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KnnVerdict {
    pub ok: bool,
    pub distinct_pairs: usize,
    /// Sorted distinct edge multiplicities of the star-graph.
    pub multiplicities: Vec<usize>,
}

/// Star-graph of `P(n, α)` is `K_{n,n}` with every edge of multiplicity `α`.
pub fn verify_knn(n: usize, alpha: usize) -> Result<KnnVerdict, FamilyError> {
    let params = FamilyParams::new(n, alpha)?;
    let g = StarGraph::build(&presentation(params));
    let multiplicities: BTreeSet<usize> = g.multiplicity().values().copied().collect();
    let ok = if alpha == 1 {
        g.is_knn(n)
    } else {
        g.multiplicity().len() == n * n
            && multiplicities.len() == 1
            && multiplicities.contains(&alpha)
            && g.simple_graph().is_complete_bipartite(n)
    };
    Ok(KnnVerdict {
        ok,
        distinct_pairs: adjacency_pairs(&w(n)).len(),
        multiplicities: multiplicities.into_iter().collect(),
    })
}

/// One row of the inductive pair count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairCountRow {
    pub n: usize,
    pub pairs: usize,
    pub new_pairs: usize,
    pub expected_new: usize,
}

/// Rows for `2..=n`: distinct pairs of `w_k`, the increment over `w_{k-1}`
/// and the predicted increment `2k − 1`.
pub fn pair_count_table(n: usize) -> Vec<PairCountRow> {
    let mut prev = adjacency_pairs(&w(1)).len();
    (2..=n)
        .map(|k| {
            let pairs = adjacency_pairs(&w(k)).len();
            let row = PairCountRow { n: k, pairs, new_pairs: pairs - prev, expected_new: 2 * k - 1 };
            prev = pairs;
            row
        })
        .collect()
}
