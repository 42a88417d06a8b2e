//! Walk model: per-dimension constraint classes, step alphabets, parsing and
//! the incremental validity check.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub const MAX_DIMENSIONS: usize = 4;

/// Constraint class of a single dimension, written as one of the letters
/// `a`..`e`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DimKind {
    /// `a`: never below zero, ends at zero.
    Excursion,
    /// `b`: ends at zero.
    Bridge,
    /// `c`: never below zero.
    Meander,
    /// `d`: only the positive direction exists.
    OneWay,
    /// `e`: both directions, unconstrained.
    Free,
}

impl DimKind {
    pub fn letter(self) -> char {
        match self {
            DimKind::Excursion => 'a',
            DimKind::Bridge => 'b',
            DimKind::Meander => 'c',
            DimKind::OneWay => 'd',
            DimKind::Free => 'e',
        }
    }

    pub fn from_letter(c: char) -> Option<Self> {
        match c {
            'a' => Some(DimKind::Excursion),
            'b' => Some(DimKind::Bridge),
            'c' => Some(DimKind::Meander),
            'd' => Some(DimKind::OneWay),
            'e' => Some(DimKind::Free),
            _ => None,
        }
    }

    /// Height must never drop below zero.
    pub fn floors_at_zero(self) -> bool {
        matches!(self, DimKind::Excursion | DimKind::Meander)
    }

    /// Height must be zero after the last step.
    pub fn returns_to_zero(self) -> bool {
        matches!(self, DimKind::Excursion | DimKind::Bridge)
    }

    /// Dimensions whose height matters for validity.
    pub fn is_constrained(self) -> bool {
        self.floors_at_zero() || self.returns_to_zero()
    }

    /// Number of step directions this dimension offers.
    pub fn direction_count(self) -> u64 {
        match self {
            DimKind::OneWay => 1,
            _ => 2,
        }
    }
}

/// A multiset of dimension classes, kept sorted `a < b < c < d < e`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WalkType {
    dims: Vec<DimKind>,
}

impl WalkType {
    pub fn new(mut dims: Vec<DimKind>) -> Result<Self> {
        if dims.is_empty() {
            return Err(Error::EmptyType);
        }
        if dims.len() > MAX_DIMENSIONS {
            return Err(Error::TooManyDimensions {
                got: dims.len(),
                max: MAX_DIMENSIONS,
            });
        }
        dims.sort();
        Ok(WalkType { dims })
    }

    pub fn dims(&self) -> &[DimKind] {
        &self.dims
    }

    pub fn dimension_count(&self) -> usize {
        self.dims.len()
    }

    /// Number of unconstrained directions: one per `d`, two per `e`.
    pub fn free_direction_count(&self) -> u64 {
        self.dims
            .iter()
            .filter(|k| !k.is_constrained())
            .map(|k| k.direction_count())
            .sum()
    }

    pub fn count_of(&self, kind: DimKind) -> usize {
        self.dims.iter().filter(|&&k| k == kind).count()
    }

    /// True when every dimension is an excursion or a bridge.
    pub fn returns_to_origin(&self) -> bool {
        self.dims.iter().all(|k| k.returns_to_zero())
    }

    pub fn letters(&self) -> String {
        self.dims.iter().map(|k| k.letter()).collect()
    }
}

impl FromStr for WalkType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let dims = s
            .chars()
            .map(|c| DimKind::from_letter(c).ok_or(Error::UnknownTypeLetter(c)))
            .collect::<Result<Vec<_>>>()?;
        WalkType::new(dims)
    }
}

impl fmt::Display for WalkType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.letters())
    }
}

/// Parses and canonicalizes a type string such as `"ea"` into `ae`.
pub fn canonicalize_type(letters: &str) -> Result<WalkType> {
    letters.parse()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn delta(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

/// One unit step: a dimension index and a direction along it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Direction {
    pub dim: usize,
    pub sign: Sign,
}

impl Direction {
    pub const fn new(dim: usize, sign: Sign) -> Self {
        Direction { dim, sign }
    }

    pub const fn plus(dim: usize) -> Self {
        Direction::new(dim, Sign::Plus)
    }

    pub const fn minus(dim: usize) -> Self {
        Direction::new(dim, Sign::Minus)
    }

    pub fn token(self) -> &'static str {
        let (pos, neg) = TOKENS[self.dim];
        match self.sign {
            Sign::Plus => pos,
            Sign::Minus => neg,
        }
    }
}

// (positive, negative) token per dimension index
const TOKENS: [(&str, &str); MAX_DIMENSIONS] = [("N", "S"), ("E", "W"), ("U", "D"), ("+3", "-3")];

pub const NORTH: Direction = Direction::plus(0);
pub const SOUTH: Direction = Direction::minus(0);
pub const EAST: Direction = Direction::plus(1);
pub const WEST: Direction = Direction::minus(1);

/// The printable tokens available for `walk_type`, dimension by dimension.
/// One-way dimensions only expose their positive token.
pub fn step_alphabet(walk_type: &WalkType) -> Vec<(&'static str, Direction)> {
    let mut out = Vec::with_capacity(2 * walk_type.dimension_count());
    for (dim, kind) in walk_type.dims().iter().enumerate() {
        out.push((TOKENS[dim].0, Direction::plus(dim)));
        if *kind != DimKind::OneWay {
            out.push((TOKENS[dim].1, Direction::minus(dim)));
        }
    }
    out
}

/// A finite sequence of unit steps.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Walk {
    steps: Vec<Direction>,
}

impl Walk {
    pub fn new(steps: Vec<Direction>) -> Self {
        Walk { steps }
    }

    pub fn empty() -> Self {
        Walk::default()
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn steps(&self) -> &[Direction] {
        &self.steps
    }

    pub fn push(&mut self, d: Direction) {
        self.steps.push(d);
    }

    /// Concatenated step tokens.
    pub fn to_text(&self) -> String {
        self.steps.iter().map(|d| d.token()).collect()
    }

    pub fn count(&self, d: Direction) -> usize {
        self.steps.iter().filter(|&&s| s == d).count()
    }
}

impl FromIterator<Direction> for Walk {
    fn from_iter<I: IntoIterator<Item = Direction>>(iter: I) -> Self {
        Walk::new(iter.into_iter().collect())
    }
}

/// Parses whitespace- and case-insensitive walk text against the alphabet of
/// `walk_type`.
pub fn parse_walk(text: &str, walk_type: &WalkType) -> Result<Walk> {
    let alphabet = step_alphabet(walk_type);
    let bytes = text.as_bytes();
    let mut steps = Vec::new();
    let mut pos = 0;
    'outer: while pos < bytes.len() {
        if bytes[pos].is_ascii_whitespace() {
            pos += 1;
            continue;
        }
        for (token, dir) in &alphabet {
            let tb = token.as_bytes();
            if bytes.len() - pos >= tb.len() && bytes[pos..pos + tb.len()].eq_ignore_ascii_case(tb)
            {
                steps.push(*dir);
                pos += tb.len();
                continue 'outer;
            }
        }
        return Err(Error::UnknownToken { offset: pos });
    }
    Ok(Walk { steps })
}

/// Running height per dimension.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HeightState {
    heights: Vec<i64>,
}

impl HeightState {
    pub fn origin(dimensions: usize) -> Self {
        HeightState {
            heights: vec![0; dimensions],
        }
    }

    pub fn heights(&self) -> &[i64] {
        &self.heights
    }

    pub fn apply(&mut self, d: Direction) {
        self.heights[d.dim] += d.sign.delta();
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ViolationReason {
    BelowZero { dim: usize },
    NonzeroFinal { dim: usize, height: i64 },
    IllegalStep { dim: usize },
}

impl fmt::Display for ViolationReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ViolationReason::BelowZero { dim } => {
                write!(f, "height below zero in dimension {dim}")
            }
            ViolationReason::NonzeroFinal { dim, .. } => {
                write!(f, "nonzero final height in dimension {dim}")
            }
            ViolationReason::IllegalStep { dim } => {
                write!(f, "step not available in dimension {dim}")
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Violation {
    /// Index of the offending step, or the walk length for an end-condition
    /// failure.
    pub step_index: usize,
    pub reason: ViolationReason,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Valid,
    Violation(Violation),
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, Verdict::Valid)
    }

    pub fn violation(&self) -> Option<Violation> {
        match self {
            Verdict::Valid => None,
            Verdict::Violation(v) => Some(*v),
        }
    }
}

/// Checks `walk` against the constraints of `walk_type`, reporting the first
/// step that takes a floored dimension below zero, or else the first
/// returning dimension that does not end at zero.
pub fn validate(walk: &Walk, walk_type: &WalkType) -> Verdict {
    let dims = walk_type.dims();
    let mut state = HeightState::origin(dims.len());
    for (index, &step) in walk.steps().iter().enumerate() {
        let legal = step.dim < dims.len()
            && !(dims[step.dim] == DimKind::OneWay && step.sign == Sign::Minus);
        if !legal {
            return Verdict::Violation(Violation {
                step_index: index,
                reason: ViolationReason::IllegalStep { dim: step.dim },
            });
        }
        state.apply(step);
        if dims[step.dim].floors_at_zero() && state.heights[step.dim] < 0 {
            return Verdict::Violation(Violation {
                step_index: index,
                reason: ViolationReason::BelowZero { dim: step.dim },
            });
        }
    }
    for (dim, kind) in dims.iter().enumerate() {
        let height = state.heights[dim];
        if kind.returns_to_zero() && height != 0 {
            return Verdict::Violation(Violation {
                step_index: walk.len(),
                reason: ViolationReason::NonzeroFinal { dim, height },
            });
        }
    }
    Verdict::Valid
}

/// Indices of every step after which some floored dimension sits below
/// zero. For type `ae` these are the underlined steps of the classic
/// length-4 listing.
pub fn submerged_steps(walk: &Walk, walk_type: &WalkType) -> Vec<usize> {
    let dims = walk_type.dims();
    let mut state = HeightState::origin(dims.len());
    let mut out = Vec::new();
    for (index, &step) in walk.steps().iter().enumerate() {
        if step.dim >= dims.len() {
            break;
        }
        state.apply(step);
        let below = dims
            .iter()
            .zip(state.heights())
            .any(|(k, &h)| k.floors_at_zero() && h < 0);
        if below {
            out.push(index);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ty(s: &str) -> WalkType {
        s.parse().unwrap()
    }

    fn walk(s: &str, t: &WalkType) -> Walk {
        parse_walk(s, t).unwrap()
    }

    #[test]
    fn canonical_forms() {
        let ae = canonicalize_type("ae").unwrap();
        assert_eq!(ae.dims(), &[DimKind::Excursion, DimKind::Free]);
        assert_eq!(ae.free_direction_count(), 2);
        assert_eq!(canonicalize_type("ea").unwrap(), ae);
        assert_eq!(ae.to_string(), "ae");

        let ace = canonicalize_type("ace").unwrap();
        assert_eq!(ace.free_direction_count(), 2);
        assert_eq!(canonicalize_type("dde").unwrap().free_direction_count(), 4);
        assert_eq!(canonicalize_type("cab").unwrap().to_string(), "abc");
    }

    #[test]
    fn canonical_errors() {
        assert_eq!(canonicalize_type(""), Err(Error::EmptyType));
        assert_eq!(canonicalize_type("af"), Err(Error::UnknownTypeLetter('f')));
        assert_eq!(canonicalize_type("A"), Err(Error::UnknownTypeLetter('A')));
        assert_eq!(
            canonicalize_type("abcde"),
            Err(Error::TooManyDimensions { got: 5, max: 4 })
        );
        assert!(canonicalize_type("abcd").is_ok());
    }

    #[test]
    fn alphabets() {
        let ae = step_alphabet(&ty("ae"));
        assert_eq!(
            ae,
            vec![("N", NORTH), ("S", SOUTH), ("E", EAST), ("W", WEST)]
        );
        let ace = step_alphabet(&ty("ace"));
        assert_eq!(ace.len(), 6);
        assert_eq!(ace[4], ("U", Direction::plus(2)));
        assert_eq!(ace[5], ("D", Direction::minus(2)));
        assert_eq!(step_alphabet(&ty("d")), vec![("N", NORTH)]);
        let four = step_alphabet(&ty("abce"));
        assert_eq!(four[6], ("+3", Direction::plus(3)));
        assert_eq!(four[7], ("-3", Direction::minus(3)));
    }

    #[test]
    fn parse_long_walk() {
        let t = ty("ae");
        let w = walk("NEWWNNEESENNSSSSEE", &t);
        assert_eq!(w.len(), 18);
        assert_eq!(w.count(NORTH), 5);
        assert_eq!(w.count(SOUTH), 5);
        assert_eq!(w.count(EAST), 6);
        assert_eq!(w.count(WEST), 2);
        assert_eq!(w.to_text(), "NEWWNNEESENNSSSSEE");
        assert_eq!(walk(" nE w\n", &t).to_text(), "NEW");
    }

    #[test]
    fn parse_edge_cases() {
        let t = ty("ae");
        assert!(walk("", &t).is_empty());
        assert_eq!(
            parse_walk("NXS", &t),
            Err(Error::UnknownToken { offset: 1 })
        );
        assert_eq!(
            parse_walk("N S Q", &t),
            Err(Error::UnknownToken { offset: 4 })
        );
        // one-way dimension has no negative token
        assert_eq!(
            parse_walk("NEW", &ty("ad")),
            Err(Error::UnknownToken { offset: 2 })
        );
        let four = ty("aaab");
        assert_eq!(walk("+3N-3S", &four).len(), 4);
        assert_eq!(
            parse_walk("+4", &four),
            Err(Error::UnknownToken { offset: 0 })
        );
    }

    #[test]
    fn validate_table_rows() {
        let t = ty("ae");
        assert_eq!(validate(&walk("NNSS", &t), &t), Verdict::Valid);
        let v = validate(&walk("SNNS", &t), &t).violation().unwrap();
        assert_eq!(v.step_index, 0);
        assert_eq!(v.reason, ViolationReason::BelowZero { dim: 0 });
        assert_eq!(
            validate(&walk("ESNW", &t), &t)
                .violation()
                .unwrap()
                .step_index,
            1
        );
        let v = validate(&walk("N", &t), &t).violation().unwrap();
        assert_eq!(v.step_index, 1);
        assert_eq!(v.reason.to_string(), "nonzero final height in dimension 0");
        assert_eq!(validate(&Walk::empty(), &t), Verdict::Valid);
    }

    #[test]
    fn validate_illegal_steps() {
        let d = ty("d");
        let v = validate(&Walk::new(vec![SOUTH]), &d).violation().unwrap();
        assert_eq!(v.reason, ViolationReason::IllegalStep { dim: 0 });
        let v = validate(&Walk::new(vec![EAST]), &d).violation().unwrap();
        assert_eq!(v.reason, ViolationReason::IllegalStep { dim: 1 });
    }

    #[test]
    fn underline_sets() {
        let t = ty("ae");
        assert_eq!(submerged_steps(&walk("NSSN", &t), &t), vec![2]);
        assert_eq!(submerged_steps(&walk("SSNN", &t), &t), vec![0, 1, 2]);
        assert_eq!(submerged_steps(&walk("SNSN", &t), &t), vec![0, 2]);
        assert_eq!(submerged_steps(&walk("ESWN", &t), &t), vec![1, 2]);
        assert!(submerged_steps(&walk("NEWS", &t), &t).is_empty());
    }

    #[test]
    fn length_four_census() {
        let t = ty("ae");
        let letters = ['N', 'S', 'E', 'W'];
        let mut valid = 0;
        for code in 0..256u32 {
            let s: String = (0..4)
                .map(|p| letters[((code >> (2 * p)) & 3) as usize])
                .collect();
            if validate(&walk(&s, &t), &t).is_valid() {
                valid += 1;
            }
        }
        assert_eq!(valid, 42);
    }

    fn arb_walk(dims: usize, max_len: usize) -> impl Strategy<Value = Walk> {
        proptest::collection::vec((0..dims, any::<bool>()), 0..max_len).prop_map(|v| {
            v.into_iter()
                .map(|(dim, p)| Direction::new(dim, if p { Sign::Plus } else { Sign::Minus }))
                .collect()
        })
    }

    proptest! {
        #[test]
        fn valid_walks_have_clean_prefixes(w in arb_walk(2, 12)) {
            let t = ty("ae");
            if validate(&w, &t).is_valid() {
                for k in 0..=w.len() {
                    let prefix = Walk::new(w.steps()[..k].to_vec());
                    if let Some(v) = validate(&prefix, &t).violation() {
                        let is_end = matches!(v.reason, ViolationReason::NonzeroFinal { .. });
                        prop_assert!(is_end);
                    }
                }
            }
        }

        #[test]
        fn bridge_reversal_symmetry(w in arb_walk(2, 12)) {
            let t = ty("bb");
            let mirrored: Walk = w
                .steps()
                .iter()
                .rev()
                .map(|d| Direction::new(d.dim, d.sign.flip()))
                .collect();
            prop_assert_eq!(validate(&w, &t).is_valid(), validate(&mirrored, &t).is_valid());
        }

        #[test]
        fn text_round_trip(w in arb_walk(3, 16)) {
            let t = ty("bbb");
            prop_assert_eq!(parse_walk(&w.to_text().to_lowercase(), &t).unwrap(), w);
        }
    }
}
