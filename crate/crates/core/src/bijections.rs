//! Dyck paths and the correspondence between Dyck paths of length `2n+2` and
//! valid type-`ae` walks of length `n`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::exactmath::Natural;
use crate::oracle::Guards;
use crate::walks::{validate, Direction, Walk, WalkType, EAST, NORTH, SOUTH, WEST};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DyckStep {
    Up,
    Down,
}

impl DyckStep {
    pub fn letter(self) -> char {
        match self {
            DyckStep::Up => 'N',
            DyckStep::Down => 'S',
        }
    }
}

/// A balanced up/down word whose prefixes never dip below zero.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DyckPath {
    word: Vec<DyckStep>,
}

impl DyckPath {
    pub fn new(word: Vec<DyckStep>) -> Result<Self> {
        let mut height = 0i64;
        for (position, step) in word.iter().enumerate() {
            height += match step {
                DyckStep::Up => 1,
                DyckStep::Down => -1,
            };
            if height < 0 {
                return Err(Error::InvalidDyck {
                    position,
                    reason: "more downs than ups",
                });
            }
        }
        if height != 0 {
            return Err(Error::InvalidDyck {
                position: word.len(),
                reason: "does not end at height zero",
            });
        }
        Ok(DyckPath { word })
    }

    pub fn word(&self) -> &[DyckStep] {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// Heights after each step, starting with the initial 0.
    pub fn heights(&self) -> Vec<i64> {
        let mut h = 0;
        let mut out = vec![0];
        for s in &self.word {
            h += if *s == DyckStep::Up { 1 } else { -1 };
            out.push(h);
        }
        out
    }
}

impl FromStr for DyckPath {
    type Err = Error;

    /// Reads a word over `N`/`S`, ignoring case and whitespace.
    fn from_str(s: &str) -> Result<Self> {
        let mut word = Vec::with_capacity(s.len());
        for (offset, c) in s.char_indices() {
            match c.to_ascii_uppercase() {
                'N' => word.push(DyckStep::Up),
                'S' => word.push(DyckStep::Down),
                c if c.is_whitespace() => {}
                _ => return Err(Error::UnknownToken { offset }),
            }
        }
        DyckPath::new(word)
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.word
            .iter()
            .try_for_each(|s| write!(f, "{}", s.letter()))
    }
}

fn touchard_type() -> WalkType {
    "ae".parse().expect("static type")
}

fn check_touchard(walk: &Walk) -> Result<()> {
    if let Some(d) = walk.steps().iter().find(|d| d.dim > 1) {
        return Err(Error::WrongWalkType { dim: d.dim });
    }
    match validate(walk, &touchard_type()).violation() {
        None => Ok(()),
        Some(v) => Err(Error::InvalidWalk(format!(
            "step {}: {}",
            v.step_index, v.reason
        ))),
    }
}

/// Drops the leading up and trailing down, then reads the rest in disjoint
/// pairs from the left: `NN -> N`, `SS -> S`, `NS -> E`, `SN -> W`.
pub fn dyck_to_touchard(path: &DyckPath) -> Result<Walk> {
    if path.is_empty() {
        return Err(Error::InvalidDyck {
            position: 0,
            reason: "empty path has no walk",
        });
    }
    let inner = &path.word()[1..path.len() - 1];
    Ok(inner
        .chunks_exact(2)
        .map(|pair| match (pair[0], pair[1]) {
            (DyckStep::Up, DyckStep::Up) => NORTH,
            (DyckStep::Down, DyckStep::Down) => SOUTH,
            (DyckStep::Up, DyckStep::Down) => EAST,
            (DyckStep::Down, DyckStep::Up) => WEST,
        })
        .collect())
}

/// Inverse of [`dyck_to_touchard`].
pub fn touchard_to_dyck(walk: &Walk) -> Result<DyckPath> {
    check_touchard(walk)?;
    use DyckStep::{Down, Up};
    let mut word = Vec::with_capacity(2 * walk.len() + 2);
    word.push(Up);
    for &d in walk.steps() {
        let pair = match d {
            NORTH => [Up, Up],
            SOUTH => [Down, Down],
            EAST => [Up, Down],
            _ => [Down, Up],
        };
        word.extend(pair);
    }
    word.push(Down);
    DyckPath::new(word)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MotzkinStep {
    Up,
    Down,
    /// Flat step of the first color (east).
    Flat1,
    /// Flat step of the second color (west).
    Flat2,
}

/// Relabels a valid type-`ae` walk as a two-colored Motzkin path.
pub fn to_two_colored_motzkin(walk: &Walk) -> Result<Vec<MotzkinStep>> {
    check_touchard(walk)?;
    Ok(walk
        .steps()
        .iter()
        .map(|&d: &Direction| match d {
            NORTH => MotzkinStep::Up,
            SOUTH => MotzkinStep::Down,
            EAST => MotzkinStep::Flat1,
            _ => MotzkinStep::Flat2,
        })
        .collect())
}

/// Nonnegative prefix heights and a final height of zero.
pub fn is_motzkin(path: &[MotzkinStep]) -> bool {
    let mut h = 0i64;
    for s in path {
        h += match s {
            MotzkinStep::Up => 1,
            MotzkinStep::Down => -1,
            _ => 0,
        };
        if h < 0 {
            return false;
        }
    }
    h == 0
}

/// All Dyck words of the given even length, lexicographic with `N < S`.
pub fn enumerate_dyck(length: usize, guards: &Guards) -> Result<Vec<DyckPath>> {
    if !length.is_multiple_of(2) {
        return Err(Error::OddLength {
            what: "enumerate_dyck",
            n: length as u64,
        });
    }
    let candidates = Natural::pow(2, length as u64);
    if candidates > guards.max_brute {
        return Err(Error::BruteForceGuard {
            candidates: candidates.to_string(),
            limit: guards.max_brute,
        });
    }
    let total: u64 = 1 << length;
    let out = (0..total)
        .filter_map(|code| {
            // most significant bit is the first letter; a set bit is a down step
            let word = (0..length)
                .map(|p| {
                    if code >> (length - 1 - p) & 1 == 0 {
                        DyckStep::Up
                    } else {
                        DyckStep::Down
                    }
                })
                .collect();
            DyckPath::new(word).ok()
        })
        .collect();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::walks::parse_walk;

    const SAMPLE_WALK: &str = "NEWWNNEESENNSSSSEE";
    const SAMPLE_DYCK: &str = "NNNNSSNSNNNNNNSNSSSNSNNNNSSSSSSSSNSNSS";

    fn walk(s: &str) -> Walk {
        parse_walk(s, &touchard_type()).unwrap()
    }

    fn dyck(s: &str) -> DyckPath {
        s.parse().unwrap()
    }

    #[test]
    fn decode_small() {
        assert!(dyck_to_touchard(&dyck("NS")).unwrap().is_empty());
        assert_eq!(dyck_to_touchard(&dyck("NNSS")).unwrap().to_text(), "E");
        assert_eq!(dyck_to_touchard(&dyck("NSNS")).unwrap().to_text(), "W");
        assert!(dyck_to_touchard(&dyck("")).is_err());
    }

    #[test]
    fn encode_small() {
        assert_eq!(touchard_to_dyck(&Walk::empty()).unwrap().to_string(), "NS");
        assert_eq!(touchard_to_dyck(&walk("E")).unwrap().to_string(), "NNSS");
        assert!(matches!(
            touchard_to_dyck(&walk("SN")),
            Err(Error::InvalidWalk(_))
        ));
        assert_eq!(
            touchard_to_dyck(&Walk::new(vec![Direction::plus(2)])),
            Err(Error::WrongWalkType { dim: 2 })
        );
    }

    #[test]
    fn sample_pair() {
        assert_eq!(SAMPLE_DYCK.len(), 38);
        assert_eq!(
            touchard_to_dyck(&walk(SAMPLE_WALK)).unwrap().to_string(),
            SAMPLE_DYCK
        );
        assert_eq!(
            dyck_to_touchard(&dyck(SAMPLE_DYCK)).unwrap().to_text(),
            SAMPLE_WALK
        );
        assert_eq!(*dyck(SAMPLE_DYCK).heights().iter().max().unwrap(), 9);
    }

    #[test]
    fn parse_errors() {
        assert_eq!(
            "NSS".parse::<DyckPath>(),
            Err(Error::InvalidDyck {
                position: 2,
                reason: "more downs than ups"
            })
        );
        assert_eq!(
            "NN".parse::<DyckPath>(),
            Err(Error::InvalidDyck {
                position: 2,
                reason: "does not end at height zero"
            })
        );
        assert_eq!(
            "NxS".parse::<DyckPath>(),
            Err(Error::UnknownToken { offset: 1 })
        );
        assert_eq!(dyck(" n s ").to_string(), "NS");
    }

    #[test]
    fn motzkin_relabeling() {
        use MotzkinStep::*;
        assert_eq!(
            to_two_colored_motzkin(&walk("NNSS")).unwrap(),
            vec![Up, Up, Down, Down]
        );
        assert_eq!(
            to_two_colored_motzkin(&walk("EW")).unwrap(),
            vec![Flat1, Flat2]
        );
        assert_eq!(
            to_two_colored_motzkin(&walk("NEWS")).unwrap(),
            vec![Up, Flat1, Flat2, Down]
        );
        assert!(to_two_colored_motzkin(&walk("S")).is_err());
        assert!(is_motzkin(
            &to_two_colored_motzkin(&walk(SAMPLE_WALK)).unwrap()
        ));
    }

    #[test]
    fn dyck_listing() {
        let g = Guards::default();
        let names = |l| -> Vec<String> {
            enumerate_dyck(l, &g)
                .unwrap()
                .iter()
                .map(|p| p.to_string())
                .collect()
        };
        assert_eq!(names(0), vec![""]);
        assert_eq!(names(2), vec!["NS"]);
        assert_eq!(names(4), vec!["NNSS", "NSNS"]);
        assert_eq!(names(6).len(), 5);
        assert!(enumerate_dyck(5, &g).is_err());
        let tight = Guards {
            max_brute: 1 << 9,
            ..g
        };
        assert!(matches!(
            enumerate_dyck(10, &tight),
            Err(Error::BruteForceGuard { .. })
        ));
    }
}
