use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::words::{Word, WordError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PresentationError {
    #[error("relator {0} is empty")]
    EmptyRelator(usize),
    #[error("relator {0} is not cyclically reduced")]
    NotCyclicallyReduced(usize),
    #[error("relator {index} has rank {found}, expected {expected}")]
    RankMismatch { index: usize, found: usize, expected: usize },
    #[error(transparent)]
    Word(#[from] WordError),
}

/// A finite presentation `⟨x₁,…,x_rank ∣ relators⟩`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Presentation {
    rank: usize,
    relators: Vec<Word>,
}

impl Presentation {
    /// Every relator must be nonempty and cyclically reduced.
    pub fn new(rank: usize, relators: Vec<Word>) -> Result<Self, PresentationError> {
        for (i, r) in relators.iter().enumerate() {
            if r.rank() != rank {
                return Err(PresentationError::RankMismatch { index: i, found: r.rank(), expected: rank });
            }
            if r.is_empty() {
                return Err(PresentationError::EmptyRelator(i));
            }
            if !r.is_cyclically_reduced() {
                return Err(PresentationError::NotCyclicallyReduced(i));
            }
        }
        Ok(Presentation { rank, relators })
    }

    /// Builds a presentation from raw relators, reducing each cyclically and
    /// dropping the ones that become trivial.
    pub fn from_reduced(rank: usize, relators: Vec<Word>) -> Result<Self, PresentationError> {
        let relators = relators.iter().map(Word::cyclic_reduce).filter(|r| !r.is_empty()).collect();
        Presentation::new(rank, relators)
    }

    pub fn one_relator(relator: Word) -> Result<Self, PresentationError> {
        Presentation::new(relator.rank(), vec![relator])
    }

    /// Parses relators separated by commas, semicolons or newlines, each in
    /// compact or exponent notation.
    pub fn parse(text: &str, rank: usize) -> Result<Self, PresentationError> {
        let relators = text
            .split([',', '\n', ';'])
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|s| Word::parse(s, rank))
            .collect::<Result<Vec<_>, _>>()?;
        Presentation::from_reduced(rank, relators)
    }

    pub fn free(rank: usize) -> Self {
        Presentation { rank, relators: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = if self.rank <= 3 {
            ["x", "y", "z"][..self.rank].iter().map(|s| s.to_string()).collect()
        } else {
            (1..=self.rank).map(|i| format!("x{i}")).collect()
        };
        let rels: Vec<String> = self.relators.iter().map(Word::to_compact).collect();
        if rels.is_empty() {
            write!(f, "< {} | >", gens.join(", "))
        } else {
            write!(f, "< {} | {} >", gens.join(", "), rels.join(", "))
        }
    }
}
