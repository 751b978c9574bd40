//! Rational types of compact connected simple Lie groups.

use std::fmt;
use std::str::FromStr;

use crate::csym::{crosswise_criterion, CriterionResult, DegreeTuple};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub const ALL: [Family; 7] =
        [Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G];

    fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    fn rank_ok(self, rank: u32) -> bool {
        match self {
            Family::A | Family::B | Family::C => rank >= 1,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LieType {
    family: Family,
    rank: u32,
}

impl LieType {
    pub fn new(family: Family, rank: u32) -> Result<Self> {
        if !family.rank_ok(rank) {
            return Err(Error::Precondition(format!(
                "no simple type {}{rank}",
                family.letter()
            )));
        }
        Ok(LieType { family, rank })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    /// Every valid type with rank in `lo..=hi`, ordered by family then rank.
    pub fn all_in_ranks(lo: u32, hi: u32) -> Vec<LieType> {
        Family::ALL
            .iter()
            .flat_map(|&f| (lo..=hi).filter_map(move |r| LieType::new(f, r).ok()))
            .collect()
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for LieType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => return Err(Error::Parse(format!("unknown Lie type {s:?}"))),
        };
        let rest = chars.as_str().trim_start_matches('_');
        let rank = rest
            .parse::<u32>()
            .map_err(|_| Error::Parse(format!("bad rank in Lie type {s:?}")))?;
        LieType::new(family, rank)
    }
}

/// Degrees of the exterior generators of the rational cohomology.
pub fn rational_type(g: LieType) -> DegreeTuple {
    let n = g.rank;
    let degrees: Vec<u32> = match g.family {
        Family::A => (1..=n).map(|i| 2 * i + 1).collect(),
        Family::B | Family::C => (1..=n).map(|i| 4 * i - 1).collect(),
        Family::D => (1..n).map(|i| 4 * i - 1).chain([2 * n - 1]).collect(),
        Family::G => vec![3, 11],
        Family::F => vec![3, 11, 15, 23],
        Family::E => match n {
            6 => vec![3, 9, 11, 15, 17, 23],
            7 => vec![3, 11, 15, 19, 23, 27, 35],
            _ => vec![3, 15, 23, 27, 35, 39, 47, 59],
        },
    };
    DegreeTuple::new(degrees).expect("table degrees are odd and at least 3")
}

/// Runs the crosswise criterion on the rational type; rank 1 is out of scope.
pub fn classify_with_certificate(g: LieType) -> Result<CriterionResult> {
    if g.rank < 2 {
        return Err(Error::Precondition(format!("{g} has rank 1; rank at least 2 required")));
    }
    Ok(crosswise_criterion(&rational_type(g)))
}

pub fn classify(g: LieType) -> Result<bool> {
    Ok(classify_with_certificate(g)?.holds)
}
