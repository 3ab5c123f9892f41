//! Classical reference tables for the simple Lie algebras. These are
//! independent of the root-generation and eigenvalue code and serve as the
//! oracle that code is checked against.

use crate::root_systems::{AlgebraId, Family};

/// Exponents, ascending.
pub fn exponents(id: AlgebraId) -> Vec<u32> {
    let l = id.rank() as u32;
    let mut e: Vec<u32> = match id.family() {
        Family::A => (1..=l).collect(),
        Family::B | Family::C => (1..=l).map(|k| 2 * k - 1).collect(),
        Family::D => (1..l).map(|k| 2 * k - 1).chain([l - 1]).collect(),
        Family::E => match l {
            6 => vec![1, 4, 5, 7, 8, 11],
            7 => vec![1, 5, 7, 9, 11, 13, 17],
            _ => vec![1, 7, 11, 13, 17, 19, 23, 29],
        },
        Family::F => vec![1, 5, 7, 11],
        Family::G => vec![1, 5],
    };
    e.sort_unstable();
    e
}

pub fn coxeter_number(id: AlgebraId) -> usize {
    let l = id.rank();
    match id.family() {
        Family::A => l + 1,
        Family::B | Family::C => 2 * l,
        Family::D => 2 * l - 2,
        Family::E => [12, 18, 30][l - 6],
        Family::F => 12,
        Family::G => 6,
    }
}

pub fn positive_root_count(id: AlgebraId) -> usize {
    let l = id.rank();
    match id.family() {
        Family::A => l * (l + 1) / 2,
        Family::B | Family::C => l * l,
        Family::D => l * (l - 1),
        Family::E => [36, 63, 120][l - 6],
        Family::F => 24,
        Family::G => 6,
    }
}
