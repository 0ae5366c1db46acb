//! Builtin relators: the 32 admissible words, their twelve classes, the
//! table of identifying compositions and the twelve groups `G₁ … G₁₂`.

use crate::presentation::Presentation;
use crate::words::Word;

/// The admissible length-9 relators whose star-graph is `K_{3,3}`.
pub const ADMISSIBLE_WORDS: [&str; 32] = [
    "xxyxzyyzz", "xxyxzzyyz", "xxyyxzyzz", "xxyyxzzyz", "xxyyzxzzy",
    "xxyyzyxzz", "xxyyzzxzy", "xxyyzzyxz", "xxyzxzzyy", "xxyzxYzyZ",
    "xxyzyyxzz", "xxyzyXzYz", "xxyzyZxYz", "xxyzyZyXz", "xxyzzxzyy",
    "xxyzzyyxz", "xxyzYzyXz", "xxyzYzyXZ", "xxyzYZyXz", "xxyXzyzYz",
    "xxyXzyZyz", "xxyXzyZYz", "xxyXzYzyz", "xxyXzYZyz", "xxyZxYzyz",
    "xxyZyzyXz", "xxyZyXzyz", "xxyZYzyXz", "xxYzxyzyZ", "xxYzyzxyZ",
    "xxYzyZxyz", "xxYXzyZyz",
];

/// The twelve classes `R₁ … R₁₂` in exponent notation, members in their
/// published order. The first member of each class defines `Gᵢ`.
pub const CLASSES: [&[&str]; 12] = [
    &[
        "x^2 y x z y^2 z^2", "x^2 y z x z^2 y^2", "x^2 y^2 x z y z^2",
        "x^2 y^2 z y x z^2", "x^2 y^2 z^2 y x z", "x^2 y^2 z^2 x z y",
    ],
    &[
        "x^2 y z y^2 x z^2", "x^2 y z^2 x z y^2", "x^2 y z^2 y^2 x z",
        "x^2 y^2 x z^2 y z", "x^2 y^2 z x z^2 y", "x^2 y x z^2 y^2 z",
    ],
    &["x^2 y x^-1 z y z^-1 y z", "x^2 y z y^-1 z y x^-1 z"],
    &["x^2 y x^-1 z y z^-1 y^-1 z", "x^2 y z^-1 y^-1 z y x^-1 z"],
    &["x^2 y x^-1 z y^-1 z y z", "x^2 y z y z^-1 y x^-1 z"],
    &["x^2 y x^-1 z y^-1 z^-1 y z", "x^2 y z y^-1 z^-1 y x^-1 z"],
    &["x^2 y z^-1 x y^-1 z y z", "x^2 y z y z^-1 x y^-1 z"],
    &["x^2 y z^-1 y z y x^-1 z", "x^2 y x^-1 z y z y^-1 z"],
    &["x^2 y z^-1 y x^-1 z y z", "x^2 y z y x^-1 z y^-1 z"],
    &["x^2 y^-1 z x y z y z^-1", "x^2 y^-1 z y z x y z^-1"],
    &["x^2 y^-1 z y z^-1 x y z", "x^2 y z x y^-1 z y z^-1"],
    &["x^2 y^-1 x^-1 z y z^-1 y z", "x^2 y z y^-1 z y x^-1 z^-1"],
];

/// The customary relator for each of the twelve groups, one per class.
pub const GROUP_RELATORS: [&str; 12] = [
    "x^2 y^2 z^2 x z y",
    "x^2 y x z^2 y^2 z",
    "x^2 y x^-1 z y z^-1 y z",
    "x^2 y x^-1 z y z^-1 y^-1 z",
    "x^2 y x^-1 z y^-1 z y z",
    "x^2 y x^-1 z y^-1 z^-1 y z",
    "x^2 y z^-1 x y^-1 z y z",
    "x^2 y z^-1 y z y x^-1 z",
    "x^2 y z^-1 y x^-1 z y z",
    "x^2 y^-1 z x y z y z^-1",
    "x^2 y^-1 z y z^-1 x y z",
    "x^2 y^-1 x^-1 z y z^-1 y z",
];

/// One non-trivial row of the identification table: `word` is carried to `target` by
/// `steps`, written left to right. A bare `rot` leaves the shift open.
#[derive(Debug, Clone, Copy)]
pub struct TableRow {
    pub class: usize,
    pub word: &'static str,
    pub target: &'static str,
    pub steps: &'static str,
}

const INV_PHI: &str = "phi_x.rho_z.rho_y.rho_x;invert;rot";

macro_rules! row {
    ($c:expr, $w:expr, $t:expr, $s:expr) => {
        TableRow { class: $c, word: $w, target: $t, steps: $s }
    };
}

pub const TABLE_ROWS: [TableRow; 19] = [
    row!(1, "x^2 y x z y^2 z^2", "x^2 y^2 z^2 x z y", "phi_x.phi_y;rot"),
    row!(1, "x^2 y^2 x z y z^2", "x^2 y^2 z^2 x z y", "rho_x.rho_y.rho_z;invert;phi_z;rot"),
    row!(1, "x^2 y^2 z y x z^2", "x^2 y^2 z^2 x z y", "phi_x.phi_z;rot"),
    row!(1, "x^2 y^2 z^2 y x z", "x^2 y^2 z^2 x z y", "phi_y.rho_x.rho_y.rho_z;rot"),
    row!(2, "x^2 y z y^2 x z^2", "x^2 y x z^2 y^2 z", "phi_x.phi_y.rho_x.rho_y.rho_z;rot"),
    row!(2, "x^2 y z^2 x z y^2", "x^2 y x z^2 y^2 z", "phi_x.phi_z;rot"),
    row!(2, "x^2 y z^2 y^2 x z", "x^2 y x z^2 y^2 z", "rho_x.rho_y.rho_z;invert;phi_x;rot"),
    row!(2, "x^2 y^2 x z^2 y z", "x^2 y x z^2 y^2 z", "phi_y;rot"),
    row!(2, "x^2 y^2 z x z^2 y", "x^2 y x z^2 y^2 z", "phi_x.phi_z.rho_x.rho_y.rho_z;rot"),
    row!(3, "x^2 y z y^-1 z y x^-1 z", "x^2 y x^-1 z y z^-1 y z", INV_PHI),
    row!(4, "x^2 y z^-1 y^-1 z y x^-1 z", "x^2 y x^-1 z y z^-1 y^-1 z", INV_PHI),
    row!(5, "x^2 y z y z^-1 y x^-1 z", "x^2 y x^-1 z y^-1 z y z", INV_PHI),
    row!(6, "x^2 y z y^-1 z^-1 y x^-1 z", "x^2 y x^-1 z y^-1 z^-1 y z", INV_PHI),
    row!(7, "x^2 y z y z^-1 x y^-1 z", "x^2 y z^-1 x y^-1 z y z", INV_PHI),
    row!(8, "x^2 y x^-1 z y z y^-1 z", "x^2 y z^-1 y z y x^-1 z", INV_PHI),
    row!(9, "x^2 y z y x^-1 z y^-1 z", "x^2 y z^-1 y x^-1 z y z", INV_PHI),
    row!(10, "x^2 y^-1 z y z x y z^-1", "x^2 y^-1 z x y z y z^-1", INV_PHI),
    row!(11, "x^2 y z x y^-1 z y z^-1", "x^2 y^-1 z y z^-1 x y z", INV_PHI),
    row!(12, "x^2 y z y^-1 z y x^-1 z^-1", "x^2 y^-1 x^-1 z y z^-1 y z", INV_PHI),
];

/// The class-one member that has no row in the table.
pub const UNTABULATED_R1: &str = "x^2 y z x z^2 y^2";

fn word(text: &str) -> Word {
    Word::parse_exponent(text, 3).expect("builtin relator")
}

pub fn admissible_words() -> Vec<Word> {
    ADMISSIBLE_WORDS.iter().map(|w| Word::parse_compact(w, 3).expect("builtin word")).collect()
}

pub fn class_members(i: usize) -> Vec<Word> {
    CLASSES[i].iter().map(|w| word(w)).collect()
}

pub fn group_relator(i: usize) -> Word {
    word(GROUP_RELATORS[i])
}

/// `G_{i+1} = ⟨x,y,z ∣ r⟩` with `r` the first listed member of its class.
pub fn group(i: usize) -> Presentation {
    Presentation::one_relator(class_members(i)[0].clone()).expect("builtin relator")
}

pub fn groups() -> Vec<Presentation> {
    (0..12).map(group).collect()
}

pub fn parse_row_word(text: &str) -> Word {
    word(text)
}
