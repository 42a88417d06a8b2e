//! Ground-truth counts that do not depend on any closed form: exhaustive
//! enumeration for tiny lengths and a memoized height-state recursion for
//! everything else.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::exactmath::Natural;
use crate::walks::{step_alphabet, validate, DimKind, Direction, Walk, WalkType};

pub const DEFAULT_MAX_BRUTE: u64 = 10_000_000;
pub const DEFAULT_MAX_STATES: usize = 100_000_000;

/// Ceilings that make oversized requests fail instead of running away.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Guards {
    /// Largest number of candidate strings `enumerate` will scan.
    pub max_brute: u64,
    /// Largest memo table `count_dp` will build.
    pub max_states: usize,
}

impl Default for Guards {
    fn default() -> Self {
        Guards {
            max_brute: DEFAULT_MAX_BRUTE,
            max_states: DEFAULT_MAX_STATES,
        }
    }
}

/// Alphabet sorted by token text, the order used for enumeration output.
fn sorted_alphabet(walk_type: &WalkType) -> Vec<(&'static str, Direction)> {
    let mut alphabet = step_alphabet(walk_type);
    alphabet.sort_by(|a, b| a.0.cmp(b.0));
    alphabet
}

/// Every valid walk of length `n`, in lexicographic token order, found by
/// scanning all candidate strings.
pub fn enumerate(walk_type: &WalkType, n: usize, guards: &Guards) -> Result<Vec<Walk>> {
    let alphabet = sorted_alphabet(walk_type);
    let base = alphabet.len();
    let candidates = Natural::pow(base as u64, n as u64);
    if candidates > guards.max_brute {
        return Err(Error::BruteForceGuard {
            candidates: candidates.to_string(),
            limit: guards.max_brute,
        });
    }

    let mut digits = vec![0usize; n];
    let mut out = Vec::new();
    loop {
        let walk: Walk = digits.iter().map(|&d| alphabet[d].1).collect();
        if validate(&walk, walk_type).is_valid() {
            out.push(walk);
        }
        // odometer with the last position varying fastest
        let mut pos = n;
        loop {
            if pos == 0 {
                return Ok(out);
            }
            pos -= 1;
            digits[pos] += 1;
            if digits[pos] < base {
                break;
            }
            digits[pos] = 0;
        }
    }
}

/// Memoized completion counts over the heights of the constrained dimensions.
struct DpCounter {
    kinds: Vec<DimKind>,
    free: u64,
    memo: HashMap<(usize, Vec<i64>), Natural>,
    limit: usize,
}

impl DpCounter {
    fn new(walk_type: &WalkType, limit: usize) -> Self {
        DpCounter {
            kinds: walk_type
                .dims()
                .iter()
                .copied()
                .filter(|k| k.is_constrained())
                .collect(),
            free: walk_type.free_direction_count(),
            memo: HashMap::new(),
            limit,
        }
    }

    fn dead(&self, remaining: usize, heights: &[i64]) -> bool {
        self.kinds
            .iter()
            .zip(heights)
            .any(|(k, &h)| k.returns_to_zero() && h.unsigned_abs() as usize > remaining)
    }

    /// Number of ways to finish from `heights` with `remaining` steps left.
    fn count(&mut self, remaining: usize, heights: &mut Vec<i64>) -> Result<Natural> {
        if remaining == 0 {
            let home = self
                .kinds
                .iter()
                .zip(heights.iter())
                .all(|(k, &h)| !k.returns_to_zero() || h == 0);
            return Ok(if home {
                Natural::one()
            } else {
                Natural::zero()
            });
        }
        if let Some(v) = self.memo.get(&(remaining, heights.clone())) {
            return Ok(v.clone());
        }

        let mut total = Natural::zero();
        if self.free > 0 {
            let mut rest = self.count(remaining - 1, heights)?;
            rest *= self.free;
            total += rest;
        }
        for dim in 0..self.kinds.len() {
            for delta in [1i64, -1] {
                heights[dim] += delta;
                let blocked = (self.kinds[dim].floors_at_zero() && heights[dim] < 0)
                    || self.dead(remaining - 1, heights);
                if !blocked {
                    total += self.count(remaining - 1, heights)?;
                }
                heights[dim] -= delta;
            }
        }

        if self.memo.len() >= self.limit {
            return Err(Error::StateGuard { limit: self.limit });
        }
        self.memo
            .insert((remaining, heights.clone()), total.clone());
        Ok(total)
    }

    fn count_from_origin(&mut self, n: usize) -> Result<Natural> {
        let mut heights = vec![0i64; self.kinds.len()];
        self.count(n, &mut heights)
    }
}

/// Exact number of valid walks of length `n`.
pub fn count_dp(walk_type: &WalkType, n: usize, guards: &Guards) -> Result<Natural> {
    DpCounter::new(walk_type, guards.max_states).count_from_origin(n)
}

/// Counts for every length `0..=n_max`, sharing one memo table.
pub fn sequence_dp(walk_type: &WalkType, n_max: usize, guards: &Guards) -> Result<Vec<Natural>> {
    let mut counter = DpCounter::new(walk_type, guards.max_states);
    (0..=n_max).map(|n| counter.count_from_origin(n)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::catalan;

    fn ty(s: &str) -> WalkType {
        s.parse().unwrap()
    }

    fn dp(s: &str, n: usize) -> Natural {
        count_dp(&ty(s), n, &Guards::default()).unwrap()
    }

    fn texts(walks: &[Walk]) -> Vec<String> {
        walks.iter().map(|w| w.to_text()).collect()
    }

    #[test]
    fn enumerate_small() {
        let g = Guards::default();
        let four = enumerate(&ty("ae"), 4, &g).unwrap();
        assert_eq!(four.len(), 42);
        assert_eq!(four[0].to_text(), "EEEE");
        let first_vertical = four.iter().find(|w| w.to_text().contains('N')).unwrap();
        assert_eq!(first_vertical.to_text(), "EENS");
        assert_eq!(four.last().unwrap().to_text(), "WWWW");
        let mut sorted = texts(&four);
        sorted.sort();
        assert_eq!(sorted, texts(&four));

        assert_eq!(texts(&enumerate(&ty("ae"), 0, &g).unwrap()), vec![""]);
        assert_eq!(texts(&enumerate(&ty("ae"), 1, &g).unwrap()), vec!["E", "W"]);
    }

    #[test]
    fn enumerate_guard() {
        let g = Guards {
            max_brute: 255,
            ..Guards::default()
        };
        match enumerate(&ty("ae"), 4, &g) {
            Err(Error::BruteForceGuard { candidates, limit }) => {
                assert_eq!(candidates, "256");
                assert_eq!(limit, 255);
            }
            other => panic!("expected guard refusal, got {other:?}"),
        }
        let g = Guards {
            max_brute: 256,
            ..Guards::default()
        };
        assert!(enumerate(&ty("ae"), 4, &g).is_ok());
    }

    #[test]
    fn count_examples() {
        assert_eq!(dp("ae", 4), 42);
        assert_eq!(dp("ace", 5), 842);
        assert_eq!(dp("aaa", 4), 24);
        assert_eq!(dp("ee", 3), 64);
        assert_eq!(dp("e", 0), 1);
    }

    #[test]
    fn sequences() {
        let g = Guards::default();
        let add: Vec<String> = sequence_dp(&ty("add"), 5, &g)
            .unwrap()
            .iter()
            .map(|v| v.to_string())
            .collect();
        assert_eq!(add, ["1", "2", "5", "14", "42", "132"]);
        assert_eq!(
            sequence_dp(&ty("ab"), 4, &g).unwrap(),
            [1u64, 0, 3, 0, 20].map(Natural::from)
        );
        assert_eq!(
            sequence_dp(&ty("e"), 3, &g).unwrap(),
            [1u64, 2, 4, 8].map(Natural::from)
        );
    }

    #[test]
    fn state_guard() {
        let g = Guards {
            max_states: 3,
            ..Guards::default()
        };
        assert_eq!(
            count_dp(&ty("aa"), 10, &g),
            Err(Error::StateGuard { limit: 3 })
        );
    }

    #[test]
    fn catalan_walk_count() {
        for n in 0..=12u64 {
            assert_eq!(dp("ae", n as usize), catalan(n + 1), "n={n}");
        }
    }

    #[test]
    fn odd_lengths_vanish_without_free_directions() {
        for t in ["a", "b", "ab", "aab", "bb", "abb", "aaab"] {
            for n in (1..=9).step_by(2) {
                assert!(dp(t, n).is_zero(), "{t} n={n}");
            }
        }
    }

    #[test]
    fn relaxing_constraints_never_loses_walks() {
        for other in ["a", "b", "c", "d", "e", "ab", "ce"] {
            for n in 0..=8 {
                let a = dp(&format!("a{other}"), n);
                let c = dp(&format!("c{other}"), n);
                let e = dp(&format!("e{other}"), n);
                assert!(a <= c && c <= e, "{other} n={n}");
            }
        }
    }

    #[test]
    fn dp_agrees_with_enumeration_on_two_dims() {
        let g = Guards::default();
        let letters = ['a', 'b', 'c', 'd', 'e'];
        for (i, &x) in letters.iter().enumerate() {
            for &y in &letters[i..] {
                let t = ty(&format!("{x}{y}"));
                for n in 0..=6 {
                    let listed = enumerate(&t, n, &g).unwrap().len();
                    assert_eq!(count_dp(&t, n, &g).unwrap(), listed as u64, "{t} n={n}");
                }
            }
        }
    }
}
