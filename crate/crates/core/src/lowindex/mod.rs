//! Finite-index subgroups and their abelianizations.

pub mod abelian;
pub mod coset_table;
pub mod schreier;

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

pub use abelian::{smith_normal_form, AbelianGroup, IntMatrix, SmithForm};
pub use coset_table::{CosetTable, TableError};
pub use schreier::{schreier_presentation, SubgroupPresentation};

use crate::presentation::Presentation;

/// Largest index searched unless a caller raises it.
pub const DEFAULT_MAX_INDEX: usize = 6;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LowIndexError {
    #[error("index {requested} exceeds the configured bound {bound}")]
    IndexBound { requested: usize, bound: usize },
    #[error("index must be at least 1")]
    ZeroIndex,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum SubgroupMode {
    /// Every subgroup.
    All,
    /// One subgroup per conjugacy class.
    ConjugacyClasses,
}

/// Search bounds.
#[derive(Debug, Clone, Copy)]
pub struct Limits {
    pub max_index_bound: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_index_bound: DEFAULT_MAX_INDEX }
    }
}

fn check_bound(max_index: usize, limits: Limits) -> Result<(), LowIndexError> {
    if max_index == 0 {
        return Err(LowIndexError::ZeroIndex);
    }
    if max_index > limits.max_index_bound {
        return Err(LowIndexError::IndexBound { requested: max_index, bound: limits.max_index_bound });
    }
    Ok(())
}

/// Subgroups of index at most `max_index` as standardized coset tables,
/// sorted by index then table.
pub fn low_index(p: &Presentation, max_index: usize, mode: SubgroupMode) -> Result<Vec<CosetTable>, LowIndexError> {
    low_index_with(p, max_index, mode, Limits::default())
}

pub fn low_index_with(
    p: &Presentation,
    max_index: usize,
    mode: SubgroupMode,
    limits: Limits,
) -> Result<Vec<CosetTable>, LowIndexError> {
    check_bound(max_index, limits)?;
    let mut tables = coset_table::enumerate_tables(p, max_index);
    if mode == SubgroupMode::ConjugacyClasses {
        tables.retain(CosetTable::is_class_representative);
    }
    tables.sort_by(|a, b| a.index().cmp(&b.index()).then_with(|| a.cmp(b)));
    Ok(tables)
}

/// Multiset of abelian invariants, keyed by invariant.
pub type InvariantMultiset = BTreeMap<AbelianGroup, usize>;

/// Abelianizations for every index `1..=max_index`, counted both per
/// subgroup and per conjugacy class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantProfile {
    pub max_index: usize,
    /// `subgroups[k-1]` holds index `k`.
    pub subgroups: Vec<InvariantMultiset>,
    pub classes: Vec<InvariantMultiset>,
}

impl InvariantProfile {
    pub fn at(&self, k: usize) -> &InvariantMultiset {
        &self.subgroups[k - 1]
    }

    pub fn classes_at(&self, k: usize) -> &InvariantMultiset {
        &self.classes[k - 1]
    }

    pub fn count(&self, k: usize, g: &AbelianGroup) -> usize {
        self.at(k).get(g).copied().unwrap_or(0)
    }

    pub fn class_count(&self, k: usize, g: &AbelianGroup) -> usize {
        self.classes_at(k).get(g).copied().unwrap_or(0)
    }

    pub fn subgroup_count(&self, k: usize) -> usize {
        self.at(k).values().sum()
    }

    /// The multisets reported under `mode`.
    pub fn multisets(&self, mode: SubgroupMode) -> &[InvariantMultiset] {
        match mode {
            SubgroupMode::All => &self.subgroups,
            SubgroupMode::ConjugacyClasses => &self.classes,
        }
    }
}

/// In `All` mode every subgroup is abelianized; in `ConjugacyClasses` mode
/// only class representatives are, and subgroup counts are recovered from
/// class sizes. Both produce the same profile.
pub fn invariant_profile(p: &Presentation, max_index: usize, mode: SubgroupMode) -> Result<InvariantProfile, LowIndexError> {
    invariant_profile_with(p, max_index, mode, Limits::default())
}

pub fn invariant_profile_with(
    p: &Presentation,
    max_index: usize,
    mode: SubgroupMode,
    limits: Limits,
) -> Result<InvariantProfile, LowIndexError> {
    let tables = low_index_with(p, max_index, mode, limits)?;
    let mut subgroups = vec![InvariantMultiset::new(); max_index];
    let mut classes = vec![InvariantMultiset::new(); max_index];
    for t in &tables {
        let ab = schreier_presentation(p, t).abelianization();
        let k = t.index() - 1;
        let (weight, rep) = match mode {
            SubgroupMode::All => (1, t.is_class_representative()),
            SubgroupMode::ConjugacyClasses => (t.conjugacy_class_size(), true),
        };
        if rep {
            *classes[k].entry(ab.clone()).or_insert(0) += 1;
        }
        *subgroups[k].entry(ab).or_insert(0) += weight;
    }
    Ok(InvariantProfile { max_index, subgroups, classes })
}

/// Abelianizations of all subgroups of index exactly `k`.
pub fn invariant_multiset(p: &Presentation, k: usize) -> Result<InvariantMultiset, LowIndexError> {
    Ok(invariant_profile(p, k, SubgroupMode::All)?.subgroups.pop().unwrap_or_default())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeparationWitness {
    pub index: usize,
    pub invariant: AbelianGroup,
    /// Subgroups of this index with this abelianization.
    pub count_g: usize,
    pub count_h: usize,
    /// The same, counted up to conjugacy.
    pub classes_g: usize,
    pub classes_h: usize,
}

impl fmt::Display for SeparationWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "index {}: {} occurs {} vs {} times ({} vs {} up to conjugacy)",
            self.index, self.invariant, self.count_g, self.count_h, self.classes_g, self.classes_h
        )
    }
}

/// Smallest index where the multisets differ, with one differing invariant.
///
/// Among differing invariants, one occurring in only one of the groups is
/// preferred, then the largest torsion subgroup, then the largest invariant.
pub fn separate_profiles(g: &InvariantProfile, h: &InvariantProfile) -> Option<SeparationWitness> {
    let max = g.max_index.min(h.max_index);
    (1..=max).find_map(|k| {
        let (a, b) = (g.at(k), h.at(k));
        a.keys()
            .chain(b.keys())
            .map(|inv| SeparationWitness {
                index: k,
                invariant: inv.clone(),
                count_g: g.count(k, inv),
                count_h: h.count(k, inv),
                classes_g: g.class_count(k, inv),
                classes_h: h.class_count(k, inv),
            })
            .filter(|w| w.count_g != w.count_h)
            .max_by(|x, y| {
                let exclusive = |w: &SeparationWitness| w.count_g == 0 || w.count_h == 0;
                exclusive(x)
                    .cmp(&exclusive(y))
                    .then_with(|| x.invariant.torsion_product().cmp(&y.invariant.torsion_product()))
                    .then_with(|| x.invariant.cmp(&y.invariant))
            })
    })
}

/// Absence of a witness means the invariants agree up to `max_index`; it
/// does not prove isomorphism.
pub fn distinguish(p: &Presentation, q: &Presentation, max_index: usize) -> Result<Option<SeparationWitness>, LowIndexError> {
    let g = invariant_profile(p, max_index, SubgroupMode::All)?;
    let h = invariant_profile(q, max_index, SubgroupMode::All)?;
    Ok(separate_profiles(&g, &h))
}

/// Witnesses for every unordered pair `i < j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeparationMatrix {
    pub size: usize,
    pub max_index: usize,
    pub cells: BTreeMap<(usize, usize), Option<SeparationWitness>>,
}

impl SeparationMatrix {
    pub fn get(&self, i: usize, j: usize) -> Option<&SeparationWitness> {
        let key = (i.min(j), i.max(j));
        self.cells.get(&key).and_then(Option::as_ref)
    }

    pub fn unseparated(&self) -> Vec<(usize, usize)> {
        self.cells.iter().filter(|(_, w)| w.is_none()).map(|(&k, _)| k).collect()
    }

    pub fn is_complete(&self) -> bool {
        self.unseparated().is_empty()
    }
}

/// Profiles for several presentations, computed on separate threads.
pub fn profiles(ps: &[Presentation], max_index: usize, mode: SubgroupMode) -> Result<Vec<InvariantProfile>, LowIndexError> {
    profiles_with(ps, max_index, mode, Limits::default())
}

pub fn profiles_with(
    ps: &[Presentation],
    max_index: usize,
    mode: SubgroupMode,
    limits: Limits,
) -> Result<Vec<InvariantProfile>, LowIndexError> {
    check_bound(max_index, limits)?;
    std::thread::scope(|s| {
        let handles: Vec<_> =
            ps.iter().map(|p| s.spawn(move || invariant_profile_with(p, max_index, mode, limits))).collect();
        handles.into_iter().map(|h| h.join().expect("profile worker panicked")).collect()
    })
}

pub fn separation_matrix(ps: &[Presentation], max_index: usize) -> Result<SeparationMatrix, LowIndexError> {
    let profs = profiles(ps, max_index, SubgroupMode::All)?;
    Ok(matrix_from_profiles(&profs, max_index))
}

pub fn matrix_from_profiles(profs: &[InvariantProfile], max_index: usize) -> SeparationMatrix {
    let mut cells = BTreeMap::new();
    for i in 0..profs.len() {
        for j in i + 1..profs.len() {
            cells.insert((i, j), separate_profiles(&profs[i], &profs[j]));
        }
    }
    SeparationMatrix { size: profs.len(), max_index, cells }
}
