//! Equivalence of relators under signed permutations of the generators,
//! cyclic permutation and inversion.
//!
//! Compositions are written and applied left to right: `phi_x.phi_y` means
//! `phi_x` first. Witness strings use `;` between moves, e.g.
//! `rho_x.rho_y.rho_z;invert;phi_z;rot 3`.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::registry;
use crate::words::{Letter, SignedPermutation, Word};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClassifyError {
    #[error("duplicate word {0}")]
    Duplicate(String),
    #[error("unknown move {0:?}")]
    UnknownMove(String),
}

/// All `rank!·2^rank` signed permutations, sorted.
pub fn symmetry_group(rank: usize) -> Vec<SignedPermutation> {
    fn perms(rest: &mut Vec<u16>, acc: &mut Vec<u16>, out: &mut Vec<Vec<u16>>) {
        if rest.is_empty() {
            out.push(acc.clone());
            return;
        }
        for i in 0..rest.len() {
            let g = rest.remove(i);
            acc.push(g);
            perms(rest, acc, out);
            acc.pop();
            rest.insert(i, g);
        }
    }
    let mut orders = Vec::new();
    perms(&mut (0..rank as u16).collect(), &mut Vec::new(), &mut orders);
    let mut out = Vec::new();
    for order in orders {
        for signs in 0..1u32 << rank {
            let image = order
                .iter()
                .enumerate()
                .map(|(i, &g)| Letter { generator: g, inverse: signs >> i & 1 == 1 })
                .collect();
            out.push(SignedPermutation::new(image).expect("bijection"));
        }
    }
    out.sort();
    out
}

/// The named generators `phi_x, phi_y, phi_z, rho_x, rho_y, rho_z`.
pub fn named_generators() -> Vec<(&'static str, SignedPermutation)> {
    let mut out = Vec::new();
    for t in 0..3u16 {
        out.push((["phi_x", "phi_y", "phi_z"][t as usize], SignedPermutation::phi(t)));
    }
    for t in 0..3u16 {
        out.push((["rho_x", "rho_y", "rho_z"][t as usize], SignedPermutation::rho(t, 3)));
    }
    out
}

/// Closure of `gens` under left-to-right composition.
pub fn generated_group(gens: &[SignedPermutation]) -> Vec<SignedPermutation> {
    let Some(first) = gens.first() else {
        return Vec::new();
    };
    let id = SignedPermutation::identity(first.rank());
    let mut seen: HashSet<SignedPermutation> = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(p) = queue.pop_front() {
        for g in gens {
            let q = p.then(g);
            if seen.insert(q.clone()) {
                queue.push_back(q);
            }
        }
    }
    let mut out: Vec<_> = seen.into_iter().collect();
    out.sort();
    out
}

fn permutation_names() -> &'static HashMap<SignedPermutation, String> {
    static NAMES: OnceLock<HashMap<SignedPermutation, String>> = OnceLock::new();
    NAMES.get_or_init(|| {
        let gens = named_generators();
        let id = SignedPermutation::identity(3);
        let mut names = HashMap::from([(id.clone(), "id".to_string())]);
        let mut queue = VecDeque::from([id]);
        while let Some(p) = queue.pop_front() {
            let base = names[&p].clone();
            for (n, g) in &gens {
                let q = p.then(g);
                if !names.contains_key(&q) {
                    let name = if base == "id" { n.to_string() } else { format!("{base}.{n}") };
                    names.insert(q.clone(), name);
                    queue.push_back(q);
                }
            }
        }
        names
    })
}

/// Shortest left-to-right product of named generators equal to `p`.
pub fn permutation_name(p: &SignedPermutation) -> String {
    permutation_names().get(p).cloned().unwrap_or_else(|| {
        p.image().iter().map(|l| l.short_name().map(String::from).unwrap_or_else(|| l.indexed_name())).collect()
    })
}

fn parse_permutation(text: &str) -> Result<SignedPermutation, ClassifyError> {
    let gens = named_generators();
    let mut p = SignedPermutation::identity(3);
    for part in text.split('.') {
        let part = part.trim();
        if part == "id" {
            continue;
        }
        let (_, g) = gens
            .iter()
            .find(|(n, _)| *n == part)
            .ok_or_else(|| ClassifyError::UnknownMove(part.to_string()))?;
        p = p.then(g);
    }
    Ok(p)
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Move {
    Permute(SignedPermutation),
    Invert,
    /// Left cyclic shift.
    Rotate(usize),
}

impl Move {
    pub fn apply(&self, w: &Word) -> Word {
        match self {
            Move::Permute(p) => p.apply(w),
            Move::Invert => w.invert(),
            Move::Rotate(s) => w.rotate(*s),
        }
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Move::Permute(p) => f.write_str(&permutation_name(p)),
            Move::Invert => f.write_str("invert"),
            Move::Rotate(s) => write!(f, "rot {s}"),
        }
    }
}

/// A sequence of moves applied in order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Witness {
    pub steps: Vec<Move>,
}

impl Witness {
    pub fn replay(&self, w: &Word) -> Word {
        self.steps.iter().fold(w.clone(), |acc, m| m.apply(&acc))
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.steps.is_empty() {
            return f.write_str("id");
        }
        let parts: Vec<String> = self.steps.iter().map(Move::to_string).collect();
        f.write_str(&parts.join(";"))
    }
}

impl Serialize for Witness {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// One move of a possibly incomplete witness: `rot` without an amount is open.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MoveSpec {
    Fixed(Move),
    AnyRotation,
}

pub fn parse_steps(text: &str) -> Result<Vec<MoveSpec>, ClassifyError> {
    let mut out = Vec::new();
    for seg in text.split(';').map(str::trim).filter(|s| !s.is_empty()) {
        if seg == "invert" {
            out.push(MoveSpec::Fixed(Move::Invert));
        } else if seg == "rot" {
            out.push(MoveSpec::AnyRotation);
        } else if let Some(n) = seg.strip_prefix("rot ") {
            let s = n.trim().parse().map_err(|_| ClassifyError::UnknownMove(seg.to_string()))?;
            out.push(MoveSpec::Fixed(Move::Rotate(s)));
        } else {
            out.push(MoveSpec::Fixed(Move::Permute(parse_permutation(seg)?)));
        }
    }
    Ok(out)
}

/// Applies `spec` to `w`, trying every shift for each open rotation, and
/// returns the first concrete witness reaching `target`.
pub fn complete_witness(w: &Word, spec: &[MoveSpec], target: &Word) -> Option<Witness> {
    fn go(cur: &Word, spec: &[MoveSpec], target: &Word, acc: &mut Vec<Move>) -> bool {
        let Some((head, rest)) = spec.split_first() else {
            return cur == target;
        };
        let choices: Vec<Move> = match head {
            MoveSpec::Fixed(m) => vec![m.clone()],
            MoveSpec::AnyRotation => (0..cur.len().max(1)).map(Move::Rotate).collect(),
        };
        for m in choices {
            let next = m.apply(cur);
            acc.push(m);
            if go(&next, rest, target, acc) {
                return true;
            }
            acc.pop();
        }
        false
    }
    let mut acc = Vec::new();
    go(w, spec, target, &mut acc).then_some(Witness { steps: acc })
}

fn generating_moves(w: &Word) -> Vec<Move> {
    let mut moves: Vec<Move> = symmetry_group(w.rank()).into_iter().map(Move::Permute).collect();
    moves.push(Move::Invert);
    if w.len() > 1 {
        moves.push(Move::Rotate(1));
    }
    moves
}

/// Closure of `{w}` under signed permutations, rotation and inversion.
pub fn orbit(w: &Word) -> HashSet<Word> {
    let moves = generating_moves(w);
    let mut seen = HashSet::from([w.clone()]);
    let mut canon = HashSet::from([w.canonical_cyclic()]);
    let mut queue = VecDeque::from([w.clone()]);
    while let Some(u) = queue.pop_front() {
        for m in &moves {
            let v = m.apply(&u);
            if seen.insert(v.clone()) {
                canon.insert(v.canonical_cyclic());
                queue.push_back(v);
            }
        }
    }
    debug_assert!(canon.len() <= seen.len());
    seen
}

/// Shortest move sequence taking `w` to `target`, at most `max_steps` long.
pub fn find_witness(w: &Word, target: &Word, max_steps: usize) -> Option<Witness> {
    if w == target {
        return Some(Witness::default());
    }
    let mut moves: Vec<Move> = symmetry_group(w.rank())
        .into_iter()
        .filter(|p| *p != SignedPermutation::identity(w.rank()))
        .map(Move::Permute)
        .collect();
    moves.push(Move::Invert);
    moves.extend((1..w.len()).map(Move::Rotate));

    let mut parent: HashMap<Word, (Word, Move)> = HashMap::new();
    let mut frontier = vec![w.clone()];
    let mut seen = HashSet::from([w.clone()]);
    for _ in 0..max_steps {
        let mut next = Vec::new();
        for u in &frontier {
            for m in &moves {
                let v = m.apply(u);
                if !seen.insert(v.clone()) {
                    continue;
                }
                parent.insert(v.clone(), (u.clone(), m.clone()));
                if &v == target {
                    let mut steps = Vec::new();
                    let mut cur = v;
                    while let Some((p, m)) = parent.get(&cur) {
                        steps.push(m.clone());
                        cur = p.clone();
                    }
                    steps.reverse();
                    return Some(Witness { steps });
                }
                next.push(v);
            }
        }
        frontier = next;
    }
    None
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EquivalenceClass {
    #[serde(serialize_with = "ser_word")]
    pub representative: Word,
    #[serde(serialize_with = "ser_words")]
    pub members: Vec<Word>,
    #[serde(serialize_with = "ser_witnesses")]
    pub witnesses: BTreeMap<Word, Witness>,
}

fn ser_word<S: Serializer>(w: &Word, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&w.to_compact())
}

fn ser_words<S: Serializer>(ws: &[Word], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(ws.iter().map(Word::to_compact))
}

fn ser_witnesses<S: Serializer>(m: &BTreeMap<Word, Witness>, s: S) -> Result<S::Ok, S::Error> {
    s.collect_map(m.iter().map(|(w, wit)| (w.to_compact(), wit.to_string())))
}

/// Bound on witness length used by [`partition`].
pub const MAX_WITNESS_STEPS: usize = 6;

/// Splits `ws` into orbit classes, sorted by their lex-least member.
pub fn partition(ws: &[Word]) -> Result<Vec<EquivalenceClass>, ClassifyError> {
    let mut unique = HashSet::new();
    for w in ws {
        if !unique.insert(w.clone()) {
            return Err(ClassifyError::Duplicate(w.to_compact()));
        }
    }
    let mut assigned: HashSet<Word> = HashSet::new();
    let mut classes = Vec::new();
    for w in ws {
        if assigned.contains(w) {
            continue;
        }
        let orb = orbit(w);
        let mut members: Vec<Word> = ws.iter().filter(|u| orb.contains(*u)).cloned().collect();
        members.sort();
        assigned.extend(members.iter().cloned());
        let representative = members[0].clone();
        let witnesses = members
            .iter()
            .map(|m| {
                let wit = find_witness(m, &representative, MAX_WITNESS_STEPS).expect("members share an orbit");
                (m.clone(), wit)
            })
            .collect();
        classes.push(EquivalenceClass { representative, members, witnesses });
    }
    classes.sort_by(|a, b| a.representative.cmp(&b.representative));
    Ok(classes)
}

/// Outcome of replaying one row of the identification table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RowCheck {
    pub class: usize,
    #[serde(serialize_with = "ser_word")]
    pub word: Word,
    #[serde(serialize_with = "ser_word")]
    pub target: Word,
    /// The composition as tabulated; `None` for a member without a row.
    pub stated: Option<&'static str>,
    /// The concrete witness found, if the row validates as stated.
    pub witness: Option<Witness>,
    /// For a row that fails as stated: the witness obtained by inserting a
    /// word inversion before the final rotation, if that validates.
    pub amended: Option<Witness>,
}

impl RowCheck {
    pub fn ok(&self) -> bool {
        self.witness.as_ref().is_some_and(|w| w.replay(&self.word) == self.target)
    }
}

/// Replays every tabulated composition, filling open rotations, and searches
/// a witness for the class-one member that has no row.
pub fn check_table_rows() -> Vec<RowCheck> {
    let mut out: Vec<RowCheck> = registry::TABLE_ROWS
        .iter()
        .map(|row| {
            let word = registry::parse_row_word(row.word);
            let target = registry::parse_row_word(row.target);
            let spec = parse_steps(row.steps).expect("tabulated steps parse");
            let witness = complete_witness(&word, &spec, &target);
            let amended = if witness.is_some() {
                None
            } else {
                let mut spec = spec;
                let at = spec.len().saturating_sub(1);
                spec.insert(at, MoveSpec::Fixed(Move::Invert));
                complete_witness(&word, &spec, &target)
            };
            RowCheck { class: row.class, word, target, stated: Some(row.steps), witness, amended }
        })
        .collect();
    let word = registry::parse_row_word(registry::UNTABULATED_R1);
    let target = registry::parse_row_word(registry::TABLE_ROWS[0].target);
    let witness = find_witness(&word, &target, MAX_WITNESS_STEPS);
    out.push(RowCheck { class: 1, word, target, stated: None, witness, amended: None });
    out
}
