//! Brute-force reference implementations.
//!
//! Everything in this module is deliberately naive and shares nothing with
//! the fast analysis modules beyond the word primitives. The oracles serve
//! as ground truth for the test suite and for `verify` runs.

use std::sync::Arc;

use crate::alphabet::Alphabet;
use crate::error::{Error, Result};
use crate::word::{self, Word, DEFAULT_CANDIDATE_GUARD};

/// Resource limits for oracle runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Cap on enumerated candidate words (`sigma^k`). Above it the
    /// universality oracle falls back from the definition-level scattered
    /// factor enumeration to naive arch counting.
    pub max_candidates: u64,
    /// Cap on the length of a materialized power.
    pub max_power_length: usize,
    /// Cap on the length of a word accepted by the oracles at all.
    pub max_word_length: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_candidates: DEFAULT_CANDIDATE_GUARD,
            max_power_length: 1_000_000,
            max_word_length: 1 << 20,
        }
    }
}

impl Budget {
    /// A budget that forces the arch-counting route except on tiny words.
    pub fn tight() -> Self {
        Budget {
            max_candidates: 256,
            ..Budget::default()
        }
    }
}

/// Which route the universality oracle took.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OracleMethod {
    /// Definition-level: enumerated every word of length k and tested
    /// embedding.
    ScatteredFactorEnumeration,
    /// Counted arches with an independent naive scan.
    ArchCounting,
}

fn check_word_length(w: &Word, budget: &Budget) -> Result<()> {
    if w.len() > budget.max_word_length {
        return Err(Error::BudgetExceeded {
            what: "oracle word length",
            required: w.len() as u128,
            allowed: budget.max_word_length as u128,
        });
    }
    Ok(())
}

/// Naive greedy arch scan with plain bookkeeping; returns the arch count and
/// the start of the remainder.
pub(crate) fn naive_arch_scan(letters: &[u8], sigma: usize) -> (u64, usize) {
    let mut seen = vec![false; sigma];
    let mut distinct = 0usize;
    let mut arches = 0u64;
    let mut remainder_start = 0usize;
    for (i, &c) in letters.iter().enumerate() {
        if !seen[c as usize] {
            seen[c as usize] = true;
            distinct += 1;
            if distinct == sigma {
                arches += 1;
                remainder_start = i + 1;
                seen.iter_mut().for_each(|s| *s = false);
                distinct = 0;
            }
        }
    }
    (arches, remainder_start)
}

/// Largest k such that every word of length k over the alphabet is a
/// scattered factor of `w`, found by increasing k from zero.
pub fn iota_oracle(w: &Word, budget: &Budget) -> Result<u64> {
    iota_oracle_detailed(w, budget).map(|(k, _)| k)
}

/// Like [`iota_oracle`] but also reports which route was used.
pub fn iota_oracle_detailed(w: &Word, budget: &Budget) -> Result<(u64, OracleMethod)> {
    check_word_length(w, budget)?;
    let sigma = w.sigma();
    // k is at most |w| / sigma, so the largest enumeration has sigma^(k+1)
    // candidates. Fall back to arch counting when that exceeds the budget.
    let k_bound = w.len() / sigma + 1;
    let enumerable = (sigma as u64)
        .checked_pow(u32::try_from(k_bound).unwrap_or(u32::MAX))
        .is_some_and(|c| c <= budget.max_candidates);
    if !enumerable {
        let (arches, _) = naive_arch_scan(w.letters(), sigma);
        return Ok((arches, OracleMethod::ArchCounting));
    }

    let mut k = 0u64;
    for len in 1..=k_bound {
        let mut candidate = vec![0u8; len];
        let mut all_embed = true;
        loop {
            if !word::embeds(&candidate, w.letters()) {
                all_embed = false;
                break;
            }
            if !word::advance(&mut candidate, sigma as u8) {
                break;
            }
        }
        if !all_embed {
            break;
        }
        k = len as u64;
    }
    Ok((k, OracleMethod::ScatteredFactorEnumeration))
}

/// Maximal universality over all conjugates of `w`.
pub fn zeta_oracle(w: &Word, budget: &Budget) -> Result<u64> {
    check_word_length(w, budget)?;
    let mut best = iota_oracle(w, budget)?;
    for offset in 1..w.len() {
        let rotated = w.conjugate(offset).expect("offset in range");
        best = best.max(iota_oracle(&rotated, budget)?);
    }
    Ok(best)
}

/// Materializes `w^n` and factorizes it naively: the universality index of
/// the power and its remainder.
pub fn power_oracle(w: &Word, n: usize, budget: &Budget) -> Result<(u64, Word)> {
    check_word_length(w, budget)?;
    let p = w.power_guarded(n, budget.max_power_length)?;
    let (arches, remainder_start) = naive_arch_scan(p.letters(), w.sigma());
    let remainder = p.subword(remainder_start..p.len());
    Ok((arches, remainder))
}

/// Ground truth for one power of `w`.
#[derive(Debug, Clone)]
pub struct PowerTruth {
    pub iota: u64,
    pub remainder: Word,
}

/// Ground truth for every power `w^s`, `s = 0..=n_max`, from a single
/// materialization. The greedy factorization is prefix-stable: the arches of
/// `w^s` are exactly the arches of `w^n` that end within the first `s * |w|`
/// letters.
pub fn power_oracle_sweep(w: &Word, n_max: usize, budget: &Budget) -> Result<Vec<PowerTruth>> {
    check_word_length(w, budget)?;
    let p = w.power_guarded(n_max, budget.max_power_length)?;
    let sigma = w.sigma();

    let mut arch_ends = Vec::new();
    let mut seen = vec![false; sigma];
    let mut distinct = 0usize;
    for (i, &c) in p.letters().iter().enumerate() {
        if !seen[c as usize] {
            seen[c as usize] = true;
            distinct += 1;
            if distinct == sigma {
                arch_ends.push(i + 1);
                seen.iter_mut().for_each(|s| *s = false);
                distinct = 0;
            }
        }
    }

    let mut truths = Vec::with_capacity(n_max + 1);
    for s in 0..=n_max {
        let prefix = s * w.len();
        let arches = arch_ends.partition_point(|&e| e <= prefix);
        let remainder_start = if arches == 0 { 0 } else { arch_ends[arches - 1] };
        truths.push(PowerTruth {
            iota: arches as u64,
            remainder: p.subword(remainder_start..prefix),
        });
    }
    Ok(truths)
}

/// Enumerates every word over the canonical alphabet of size `sigma` that
/// contains all `sigma` letters, lengths up to `max_len`, ordered by length
/// and then lexicographically.
pub fn enumerate_words(sigma: usize, max_len: usize, budget: &Budget) -> Result<WordEnumerator> {
    let alphabet = Arc::new(Alphabet::canonical(sigma)?);
    let candidates = (sigma as u64).checked_pow(u32::try_from(max_len).unwrap_or(u32::MAX));
    if !candidates.is_some_and(|c| c <= budget.max_candidates) {
        return Err(Error::BudgetExceeded {
            what: "word enumeration",
            required: candidates.map_or(u128::MAX, u128::from),
            allowed: budget.max_candidates as u128,
        });
    }
    Ok(WordEnumerator {
        alphabet,
        sigma,
        max_len,
        current: None,
    })
}

/// Iterator produced by [`enumerate_words`].
pub struct WordEnumerator {
    alphabet: Arc<Alphabet>,
    sigma: usize,
    max_len: usize,
    // Odometer for the current length; None before the first word of a
    // length is emitted.
    current: Option<Vec<u8>>,
}

impl Iterator for WordEnumerator {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        loop {
            let advanced = match &mut self.current {
                None => {
                    // Words shorter than sigma cannot contain every letter.
                    if self.sigma > self.max_len {
                        return None;
                    }
                    self.current = Some(vec![0u8; self.sigma]);
                    true
                }
                Some(digits) => {
                    if word::advance(digits, self.sigma as u8) {
                        true
                    } else if digits.len() < self.max_len {
                        let len = digits.len() + 1;
                        *digits = vec![0u8; len];
                        true
                    } else {
                        false
                    }
                }
            };
            if !advanced {
                return None;
            }
            let digits = self.current.as_ref().expect("set above");
            let mut mask = 0u128;
            for &d in digits {
                mask |= 1 << d;
            }
            if mask.count_ones() as usize == self.sigma {
                return Some(
                    Word::from_indices(digits.clone(), Arc::clone(&self.alphabet))
                        .expect("indices in range"),
                );
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(text: &str) -> Word {
        Word::new(text).unwrap()
    }

    #[test]
    fn iota_oracle_examples() {
        let b = Budget::default();
        assert_eq!(iota_oracle(&w("anana"), &b).unwrap(), 2);
        assert_eq!(iota_oracle(&w("abccbbacaaaba"), &b).unwrap(), 3);
        let ab = Arc::new(Alphabet::inferred("ab").unwrap());
        let empty = Word::with_alphabet("", ab).unwrap();
        assert_eq!(iota_oracle(&empty, &b).unwrap(), 0);
    }

    #[test]
    fn iota_oracle_routes() {
        let b = Budget::tight();
        let (_, method) = iota_oracle_detailed(&w("ab"), &b).unwrap();
        assert_eq!(method, OracleMethod::ScatteredFactorEnumeration);
        let long = w("ab").power(40).unwrap();
        let (k, method) = iota_oracle_detailed(&long, &b).unwrap();
        assert_eq!(k, 40);
        assert_eq!(method, OracleMethod::ArchCounting);
    }

    #[test]
    fn zeta_oracle_examples() {
        let b = Budget::default();
        assert_eq!(zeta_oracle(&w("aabb"), &b).unwrap(), 2);
        assert_eq!(zeta_oracle(&w("babccaabc"), &b).unwrap(), 2);
        assert_eq!(zeta_oracle(&w("aaa"), &b).unwrap(), 3);
    }

    #[test]
    fn power_oracle_examples() {
        let b = Budget::default();
        let (k, r) = power_oracle(&w("babccaabc"), 2, &b).unwrap();
        assert_eq!((k, r.glyph_string().as_str()), (5, ""));
        let (k, r) = power_oracle(&w("acabb"), 3, &b).unwrap();
        assert_eq!((k, r.glyph_string().as_str()), (3, "abb"));
        let (k, r) = power_oracle(&w("abc"), 0, &b).unwrap();
        assert_eq!((k, r.len()), (0, 0));
    }

    #[test]
    fn sweep_matches_single_powers() {
        let b = Budget::default();
        let word = w("babcca");
        let sweep = power_oracle_sweep(&word, 8, &b).unwrap();
        for (s, truth) in sweep.iter().enumerate() {
            let (k, r) = power_oracle(&word, s, &b).unwrap();
            assert_eq!(truth.iota, k, "power {s}");
            assert_eq!(truth.remainder, r, "power {s}");
        }
    }

    #[test]
    fn enumeration_examples() {
        let b = Budget::default();
        let all: Vec<String> = enumerate_words(2, 2, &b)
            .unwrap()
            .map(|w| w.glyph_string())
            .collect();
        assert_eq!(all, ["ab", "ba"]);

        let count3 = enumerate_words(2, 3, &b).unwrap().count();
        assert_eq!(count3, 8);
        let count32 = enumerate_words(3, 2, &b).unwrap().count();
        assert_eq!(count32, 0);
        let count33 = enumerate_words(3, 3, &b).unwrap().count();
        assert_eq!(count33, 6);
    }

    #[test]
    fn enumeration_guard() {
        let b = Budget {
            max_candidates: 100,
            ..Budget::default()
        };
        assert!(matches!(
            enumerate_words(3, 10, &b),
            Err(Error::BudgetExceeded { .. })
        ));
    }
}
