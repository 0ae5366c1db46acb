//! Free-group words over a fixed rank.
//!
//! A [`Word`] is a value: every operation here returns a new word and leaves
//! its input untouched. Letters are ordered `x < x⁻¹ < y < y⁻¹ < …`, which is
//! the order used for canonical cyclic forms and for every sorted output.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Names used by the short text format (rank ≤ 3).
const SHORT_NAMES: [char; 3] = ['x', 'y', 'z'];

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WordError {
    #[error("unknown character {ch:?} at position {pos} for rank {rank}")]
    UnknownCharacter { ch: char, pos: usize, rank: usize },
    #[error("generator index {index} out of range for rank {rank}")]
    GeneratorOutOfRange { index: usize, rank: usize },
    #[error("malformed factor {0:?}")]
    MalformedFactor(String),
    #[error("zero exponent in factor {0:?}")]
    ZeroExponent(String),
    #[error("power must be at least 1")]
    ZeroPower,
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
}

/// A generator or its inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Letter {
    pub generator: u16,
    pub inverse: bool,
}

impl Letter {
    pub const fn pos(generator: u16) -> Self {
        Letter { generator, inverse: false }
    }

    pub const fn neg(generator: u16) -> Self {
        Letter { generator, inverse: true }
    }

    pub fn inv(self) -> Self {
        Letter { generator: self.generator, inverse: !self.inverse }
    }

    /// +1 or -1.
    pub fn sign(self) -> i64 {
        if self.inverse {
            -1
        } else {
            1
        }
    }

    /// Dense index into `0..2·rank`: `2·generator + inverse`.
    pub fn index(self) -> usize {
        2 * self.generator as usize + self.inverse as usize
    }

    pub fn from_index(index: usize) -> Self {
        Letter { generator: (index / 2) as u16, inverse: index % 2 == 1 }
    }

    pub fn short_name(self) -> Option<char> {
        let c = *SHORT_NAMES.get(self.generator as usize)?;
        Some(if self.inverse { c.to_ascii_uppercase() } else { c })
    }

    pub fn indexed_name(self) -> String {
        format!("x{}{}", self.generator + 1, if self.inverse { "'" } else { "" })
    }
}

/// A finite sequence of letters over a free group of the given rank.
///
/// Constructors other than [`Word::raw`] and the parsers freely reduce their
/// output; use [`Word::is_freely_reduced`] when the distinction matters.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Word {
    rank: usize,
    letters: Vec<Letter>,
}

impl Word {
    pub fn empty(rank: usize) -> Self {
        Word { rank, letters: Vec::new() }
    }

    /// Builds a word without applying free reduction.
    pub fn raw(rank: usize, letters: Vec<Letter>) -> Result<Self, WordError> {
        if let Some(l) = letters.iter().find(|l| l.generator as usize >= rank) {
            return Err(WordError::GeneratorOutOfRange { index: l.generator as usize, rank });
        }
        Ok(Word { rank, letters })
    }

    /// Builds a freely reduced word.
    pub fn new(rank: usize, letters: Vec<Letter>) -> Result<Self, WordError> {
        Ok(Word::raw(rank, letters)?.free_reduce())
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Exponent notation when `text` contains `^`, compact otherwise.
    pub fn parse(text: &str, rank: usize) -> Result<Self, WordError> {
        if text.contains('^') {
            Self::parse_exponent(text, rank)
        } else {
            Self::parse_compact(text, rank)
        }
    }

    /// Parses the compact format. For rank ≤ 3 this is `x,y,z` with
    /// uppercase for inverses; otherwise (or whenever the text contains a
    /// digit) the indexed format `x1 x2' …` is expected.
    pub fn parse_compact(text: &str, rank: usize) -> Result<Self, WordError> {
        if rank > SHORT_NAMES.len() || text.chars().any(|c| c.is_ascii_digit()) {
            return Self::parse_indexed(text, rank);
        }
        let mut letters = Vec::with_capacity(text.len());
        for (pos, ch) in text.chars().filter(|c| !c.is_whitespace()).enumerate() {
            let lower = ch.to_ascii_lowercase();
            let gen = SHORT_NAMES[..rank]
                .iter()
                .position(|&n| n == lower)
                .ok_or(WordError::UnknownCharacter { ch, pos, rank })?;
            letters.push(Letter { generator: gen as u16, inverse: ch.is_ascii_uppercase() });
        }
        Ok(Word { rank, letters })
    }

    fn parse_indexed(text: &str, rank: usize) -> Result<Self, WordError> {
        let chars: Vec<char> = text.chars().collect();
        let mut letters = Vec::new();
        let mut i = 0;
        while i < chars.len() {
            let ch = chars[i];
            if ch.is_whitespace() {
                i += 1;
                continue;
            }
            if ch != 'x' {
                return Err(WordError::UnknownCharacter { ch, pos: i, rank });
            }
            let start = i + 1;
            let mut end = start;
            while end < chars.len() && chars[end].is_ascii_digit() {
                end += 1;
            }
            let digits: String = chars[start..end].iter().collect();
            let index: usize = digits
                .parse()
                .map_err(|_| WordError::UnknownCharacter { ch, pos: i, rank })?;
            if index == 0 || index > rank {
                return Err(WordError::GeneratorOutOfRange { index, rank });
            }
            let inverse = end < chars.len() && chars[end] == '\'';
            letters.push(Letter { generator: (index - 1) as u16, inverse });
            i = if inverse { end + 1 } else { end };
        }
        Ok(Word { rank, letters })
    }

    /// Parses whitespace separated factors `g`, `g^k`, `g^-k`. Generator
    /// names are `x,y,z` for rank ≤ 3 and `x1,x2,…` otherwise. No free
    /// reduction is applied.
    pub fn parse_exponent(text: &str, rank: usize) -> Result<Self, WordError> {
        let mut letters = Vec::new();
        for factor in text.split_whitespace() {
            let (base, exp) = match factor.split_once('^') {
                Some((b, e)) => {
                    let e: i64 = e
                        .trim_start_matches('{')
                        .trim_end_matches('}')
                        .parse()
                        .map_err(|_| WordError::MalformedFactor(factor.to_string()))?;
                    (b, e)
                }
                None => (factor, 1),
            };
            if exp == 0 {
                return Err(WordError::ZeroExponent(factor.to_string()));
            }
            let base = Word::parse_compact(base, rank)
                .map_err(|_| WordError::MalformedFactor(factor.to_string()))?;
            let [letter] = base.letters[..] else {
                return Err(WordError::MalformedFactor(factor.to_string()));
            };
            let letter = if exp < 0 { letter.inv() } else { letter };
            letters.extend(std::iter::repeat_n(letter, exp.unsigned_abs() as usize));
        }
        Ok(Word { rank, letters })
    }

    /// Short names for rank ≤ 3 (bit-exact `xxyXzyzYz` style), otherwise
    /// space separated indexed names.
    pub fn to_compact(&self) -> String {
        if self.rank <= SHORT_NAMES.len() {
            self.letters.iter().filter_map(|l| l.short_name()).collect()
        } else {
            self.to_indexed()
        }
    }

    pub fn to_indexed(&self) -> String {
        self.letters.iter().map(|l| l.indexed_name()).collect::<Vec<_>>().join(" ")
    }

    /// Exponent notation with runs collapsed, e.g. `x^2 y x^-1 z`.
    pub fn to_exponent(&self) -> String {
        let mut out: Vec<String> = Vec::new();
        let mut i = 0;
        while i < self.letters.len() {
            let l = self.letters[i];
            let mut j = i;
            while j < self.letters.len() && self.letters[j] == l {
                j += 1;
            }
            let run = (j - i) as i64 * l.sign();
            let name = if self.rank <= SHORT_NAMES.len() {
                SHORT_NAMES[l.generator as usize].to_string()
            } else {
                format!("x{}", l.generator + 1)
            };
            out.push(if run == 1 { name } else { format!("{name}^{run}") });
            i = j;
        }
        out.join(" ")
    }

    pub fn is_freely_reduced(&self) -> bool {
        self.letters.windows(2).all(|p| p[0] != p[1].inv())
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        self.is_freely_reduced()
            && match (self.letters.first(), self.letters.last()) {
                (Some(&a), Some(&b)) => self.letters.len() == 1 || a != b.inv(),
                _ => true,
            }
    }

    pub fn free_reduce(&self) -> Word {
        let mut out: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if out.last() == Some(&l.inv()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word { rank: self.rank, letters: out }
    }

    /// Strips mutually inverse first/last letters from the freely reduced form.
    pub fn cyclic_reduce(&self) -> Word {
        let reduced = self.free_reduce();
        let l = &reduced.letters;
        let (mut i, mut j) = (0, l.len());
        while j - i >= 2 && l[i] == l[j - 1].inv() {
            i += 1;
            j -= 1;
        }
        Word { rank: self.rank, letters: l[i..j].to_vec() }
    }

    pub fn invert(&self) -> Word {
        Word { rank: self.rank, letters: self.letters.iter().rev().map(|l| l.inv()).collect() }
    }

    /// Left cyclic shift: `rotate(s)` starts at position `s`.
    pub fn rotate(&self, shift: usize) -> Word {
        if self.letters.is_empty() {
            return self.clone();
        }
        let mut letters = self.letters.clone();
        letters.rotate_left(shift % self.letters.len());
        Word { rank: self.rank, letters }
    }

    /// All `|w|` cyclic shifts in shift order, duplicates kept.
    pub fn rotations(&self) -> Vec<Word> {
        (0..self.letters.len()).map(|s| self.rotate(s)).collect()
    }

    /// Concatenation followed by free reduction.
    pub fn concat(&self, other: &Word) -> Result<Word, WordError> {
        if self.rank != other.rank {
            return Err(WordError::RankMismatch(self.rank, other.rank));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Word { rank: self.rank, letters }.free_reduce())
    }

    pub fn power(&self, n: usize) -> Result<Word, WordError> {
        if n == 0 {
            return Err(WordError::ZeroPower);
        }
        let mut letters = Vec::with_capacity(self.letters.len() * n);
        for _ in 0..n {
            letters.extend_from_slice(&self.letters);
        }
        Ok(Word { rank: self.rank, letters }.free_reduce())
    }

    /// Least word among all rotations of `w` and of `w⁻¹`.
    pub fn canonical_cyclic(&self) -> Word {
        let inv = self.invert();
        let n = self.letters.len();
        let mut best: Option<Vec<Letter>> = None;
        for src in [&self.letters, &inv.letters] {
            for s in 0..n.max(1) {
                let cand: Vec<Letter> = src[s.min(n)..].iter().chain(&src[..s.min(n)]).copied().collect();
                if best.as_ref().is_none_or(|b| cand < *b) {
                    best = Some(cand);
                }
            }
        }
        Word { rank: self.rank, letters: best.unwrap_or_default() }
    }

    /// Signed letter counts per generator.
    pub fn exponent_vector(&self) -> Vec<i64> {
        let mut v = vec![0i64; self.rank];
        for l in &self.letters {
            v[l.generator as usize] += l.sign();
        }
        v
    }

    /// Occurrences of each generator counting both signs.
    pub fn occurrence_counts(&self) -> Vec<usize> {
        let mut v = vec![0usize; self.rank];
        for l in &self.letters {
            v[l.generator as usize] += 1;
        }
        v
    }

    /// True when some cyclic subword is `t t` for a letter `t`.
    pub fn has_cyclic_square(&self) -> bool {
        let n = self.letters.len();
        n >= 2 && (0..n).any(|i| self.letters[i] == self.letters[(i + 1) % n])
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_compact())
    }
}

/// A signed permutation of the generators, acting on words letterwise.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SignedPermutation {
    image: Vec<Letter>,
}

impl SignedPermutation {
    pub fn identity(rank: usize) -> Self {
        SignedPermutation { image: (0..rank as u16).map(Letter::pos).collect() }
    }

    /// `image[g]` is the image of generator `g`. Fails unless the underlying
    /// index map is a bijection.
    pub fn new(image: Vec<Letter>) -> Result<Self, WordError> {
        let rank = image.len();
        let mut seen = vec![false; rank];
        for l in &image {
            let g = l.generator as usize;
            if g >= rank || seen[g] {
                return Err(WordError::GeneratorOutOfRange { index: g, rank });
            }
            seen[g] = true;
        }
        Ok(SignedPermutation { image })
    }

    pub fn rank(&self) -> usize {
        self.image.len()
    }

    pub fn image(&self) -> &[Letter] {
        &self.image
    }

    /// Fixes generator `t` and swaps the other two (rank 3).
    pub fn phi(t: u16) -> Self {
        let mut image: Vec<Letter> = (0..3).map(Letter::pos).collect();
        let others: Vec<u16> = (0..3).filter(|&g| g != t).collect();
        image[others[0] as usize] = Letter::pos(others[1]);
        image[others[1] as usize] = Letter::pos(others[0]);
        SignedPermutation { image }
    }

    /// Inverts generator `t` and fixes the rest.
    pub fn rho(t: u16, rank: usize) -> Self {
        let mut p = Self::identity(rank);
        p.image[t as usize] = Letter::neg(t);
        p
    }

    pub fn map_letter(&self, l: Letter) -> Letter {
        let img = self.image[l.generator as usize];
        if l.inverse {
            img.inv()
        } else {
            img
        }
    }

    /// Left-to-right composition: `a.then(b)` applies `a` first, then `b`.
    pub fn then(&self, next: &SignedPermutation) -> SignedPermutation {
        SignedPermutation { image: self.image.iter().map(|&l| next.map_letter(l)).collect() }
    }

    pub fn inverse(&self) -> SignedPermutation {
        let mut image = vec![Letter::pos(0); self.image.len()];
        for (g, l) in self.image.iter().enumerate() {
            image[l.generator as usize] = Letter { generator: g as u16, inverse: l.inverse };
        }
        SignedPermutation { image }
    }

    pub fn apply(&self, w: &Word) -> Word {
        Word { rank: w.rank, letters: w.letters.iter().map(|&l| self.map_letter(l)).collect() }.free_reduce()
    }

    /// Image of an exponent vector under this permutation.
    pub fn apply_vector(&self, v: &[i64]) -> Vec<i64> {
        let mut out = vec![0; v.len()];
        for (g, &e) in v.iter().enumerate() {
            let l = self.image[g];
            out[l.generator as usize] += e * l.sign();
        }
        out
    }
}
