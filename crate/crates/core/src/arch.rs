//! Arch factorization.
//!
//! The arch factorization splits a word greedily from the left into minimal
//! blocks (arches) that each contain every letter of the alphabet, plus a
//! final remainder that misses at least one letter. The number of arches
//! equals the universality index: the largest k such that every length-k
//! word over the alphabet is a scattered factor.
//!
//! Arches and remainders are kept as index ranges into the analyzed word;
//! nothing is copied until a caller asks for a materialized piece. That
//! matters for the power analysis, where consecutive remainders are
//! suffixes of the same base word and are compared through offsets alone.

use crate::alphabet::LetterSet;
use crate::error::{Error, Result};
use crate::word::Word;

/// The arch factorization of a word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArchFactorisation {
    word: Word,
    /// Exclusive end offset of each arch; arch `i` spans
    /// `arch_ends[i-1]..arch_ends[i]` with an implicit leading 0.
    arch_ends: Vec<usize>,
}

impl ArchFactorisation {
    /// Factorizes a word in a single left-to-right scan.
    pub fn of(word: &Word) -> Self {
        let sigma = word.sigma();
        let mut arch_ends = Vec::new();
        let mut seen = LetterSet::EMPTY;
        let mut missing = sigma;
        for (i, &c) in word.letters().iter().enumerate() {
            if !seen.contains(c) {
                seen.insert(c);
                missing -= 1;
                if missing == 0 {
                    arch_ends.push(i + 1);
                    seen = LetterSet::EMPTY;
                    missing = sigma;
                }
            }
        }
        ArchFactorisation {
            word: word.clone(),
            arch_ends,
        }
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    /// Number of arches; equals the universality index of the word.
    pub fn arch_count(&self) -> usize {
        self.arch_ends.len()
    }

    pub fn arch_ends(&self) -> &[usize] {
        &self.arch_ends
    }

    /// Index range of the i-th arch (0-based).
    pub fn arch_range(&self, i: usize) -> std::ops::Range<usize> {
        let start = if i == 0 { 0 } else { self.arch_ends[i - 1] };
        start..self.arch_ends[i]
    }

    pub fn arch(&self, i: usize) -> Word {
        self.word.subword(self.arch_range(i))
    }

    /// Offset where the remainder begins.
    pub fn remainder_start(&self) -> usize {
        self.arch_ends.last().copied().unwrap_or(0)
    }

    /// The remainder: everything after the last arch.
    pub fn remainder(&self) -> Word {
        self.word.subword(self.remainder_start()..self.word.len())
    }

    pub fn remainder_letters(&self) -> LetterSet {
        self.word.letters()[self.remainder_start()..]
            .iter()
            .copied()
            .collect()
    }

    /// The word formed by the final letter of each arch. Each such letter is
    /// unique within its arch.
    pub fn modus(&self) -> Word {
        let letters: Vec<u8> = self
            .arch_ends
            .iter()
            .map(|&e| self.word.letters()[e - 1])
            .collect();
        Word::from_indices(letters, std::sync::Arc::clone(self.word.alphabet()))
            .expect("letters come from the word itself")
    }

    /// Bracket rendering: arches parenthesized, remainder after a vertical
    /// bar, e.g. `(babc)(caab)|c`.
    pub fn render(&self) -> String {
        let mut out = String::with_capacity(self.word.len() + 2 * self.arch_count() + 1);
        for i in 0..self.arch_count() {
            out.push('(');
            out.push_str(&self.arch(i).glyph_string());
            out.push(')');
        }
        out.push('|');
        out.push_str(&self.remainder().glyph_string());
        out
    }
}

/// The universality index of a word: its arch count.
pub fn universality_index(w: &Word) -> usize {
    ArchFactorisation::of(w).arch_count()
}

/// The remainder of the arch factorization of `w`.
pub fn remainder(w: &Word) -> Word {
    ArchFactorisation::of(w).remainder()
}

/// The modus of `w`: the arch-final letters.
pub fn modus(w: &Word) -> Word {
    ArchFactorisation::of(w).modus()
}

/// The remainder of the factorization of the reversed word, returned as the
/// factorization produced it (not re-reversed).
pub fn remainder_of_reversal(w: &Word) -> Word {
    ArchFactorisation::of(&w.reverse()).remainder()
}

/// The longest prefix `p` of `w` whose removal keeps the universality index
/// unchanged. Removing even one more letter drops the index by exactly one.
pub fn longest_removable_prefix(w: &Word) -> Result<Word> {
    if universality_index(w) == 0 {
        return Err(Error::NotUniversal);
    }
    Ok(remainder_of_reversal(w).reverse())
}

/// Result of a seeded factorization, see [`arch_factorize_seeded`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeededFactorisation {
    /// Offset in `w` where the virtual first arch closes, or `None` when the
    /// seed and the whole of `w` together still miss a letter.
    pub first_arch_end: Option<usize>,
    /// Total arches of the simulated word `u . w`, counting the virtual one.
    pub arch_count: usize,
    /// Offset in `w` where the remainder of `u . w` begins. Zero when no
    /// arch closes; the remainder is then all of `u . w`.
    pub remainder_start: usize,
    /// Letters of the remainder of `u . w`. When no arch closes this is the
    /// seed joined with every letter of `w`.
    pub remainder_letters: LetterSet,
}

/// Factorizes `u . w` for any word `u` with `alph(u) = seed` without
/// materializing `u`. Only the letter set of `u` influences the outcome:
/// the first arch of `u . w` is `u` plus the shortest prefix of `w` that
/// completes the alphabet, and everything after that prefix factorizes as
/// usual.
pub fn arch_factorize_seeded(seed: LetterSet, w: &Word) -> Result<SeededFactorisation> {
    let sigma = w.sigma();
    let full = w.alphabet().full_set();
    if seed == full {
        return Err(Error::SeedCoversAlphabet);
    }
    debug_assert!(seed.is_subset(full));

    let letters = w.letters();
    let mut seen = seed;
    let mut missing = sigma - seen.len();
    let mut first_arch_end = None;
    for (i, &c) in letters.iter().enumerate() {
        if !seen.contains(c) {
            seen.insert(c);
            missing -= 1;
            if missing == 0 {
                first_arch_end = Some(i + 1);
                break;
            }
        }
    }

    let Some(end) = first_arch_end else {
        return Ok(SeededFactorisation {
            first_arch_end: None,
            arch_count: 0,
            remainder_start: 0,
            remainder_letters: seen,
        });
    };

    // Standard factorization of the rest of w.
    let mut arch_count = 1;
    let mut remainder_start = end;
    seen = LetterSet::EMPTY;
    missing = sigma;
    for (i, &c) in letters.iter().enumerate().skip(end) {
        if !seen.contains(c) {
            seen.insert(c);
            missing -= 1;
            if missing == 0 {
                arch_count += 1;
                remainder_start = i + 1;
                seen = LetterSet::EMPTY;
                missing = sigma;
            }
        }
    }
    Ok(SeededFactorisation {
        first_arch_end: Some(end),
        arch_count,
        remainder_start,
        remainder_letters: seen,
    })
}

/// Predicted growth of the universality index under concatenation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConcatGrowth {
    /// Predicted universality index of `w . u`.
    pub predicted: usize,
    /// Whether the remainders of `w` and of the reversed `u` join into an
    /// extra arch.
    pub bonus: bool,
}

/// Predicts the universality index of `w . u` from the two parts alone:
/// it is `iota(w) + iota(u)`, plus one exactly when the remainder of `w`
/// and the remainder of the reversal of `u` together cover the alphabet.
pub fn concat_growth(w: &Word, u: &Word) -> Result<ConcatGrowth> {
    if !w.same_alphabet(u) {
        return Err(Error::AlphabetMismatch);
    }
    let full = w.alphabet().full_set();
    let fw = ArchFactorisation::of(w);
    // A word and its reversal have the same arch count, so one factorization
    // of the reversal supplies both iota(u) and the remainder letters.
    let fu_rev = ArchFactorisation::of(&u.reverse());
    let bonus = fw
        .remainder_letters()
        .union(fu_rev.remainder_letters())
        == full;
    let predicted = fw.arch_count() + fu_rev.arch_count() + usize::from(bonus);
    Ok(ConcatGrowth { predicted, bonus })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Alphabet;
    use std::sync::Arc;

    fn w(text: &str) -> Word {
        Word::new(text).unwrap()
    }

    #[test]
    fn factorize_three_arches() {
        let f = ArchFactorisation::of(&w("abccbbacaaaba"));
        assert_eq!(f.arch_count(), 3);
        assert_eq!(f.render(), "(abc)(cbba)(caaab)|a");
        assert_eq!(f.modus().glyph_string(), "cab");
        assert_eq!(f.remainder().glyph_string(), "a");
    }

    #[test]
    fn factorize_two_arches() {
        let f = ArchFactorisation::of(&w("babccaabc"));
        assert_eq!(f.arch_count(), 2);
        assert_eq!(f.render(), "(babc)(caab)|c");
        assert_eq!(f.remainder().glyph_string(), "c");
    }

    #[test]
    fn factorize_empty_word() {
        let ab = Arc::new(Alphabet::inferred("ab").unwrap());
        let e = Word::with_alphabet("", ab).unwrap();
        let f = ArchFactorisation::of(&e);
        assert_eq!(f.arch_count(), 0);
        assert!(f.remainder().is_empty());
        assert_eq!(f.render(), "|");
    }

    #[test]
    fn single_letter_alphabet() {
        let f = ArchFactorisation::of(&w("aaa"));
        assert_eq!(f.arch_count(), 3);
        assert!(f.remainder().is_empty());
        assert_eq!(f.render(), "(a)(a)(a)|");
    }

    #[test]
    fn universality_examples() {
        assert_eq!(universality_index(&w("anana")), 2);
        assert_eq!(universality_index(&w("banana")), 1);
        assert_eq!(universality_index(&w("babccaabc")), 2);
    }

    #[test]
    fn remainder_of_reversal_is_not_re_reversed() {
        // babccaabc reversed is cbaaccbab = (cba)(accb)|ab.
        assert_eq!(remainder_of_reversal(&w("babccaabc")).glyph_string(), "ab");
        assert_eq!(remainder_of_reversal(&w("nabananab")).glyph_string(), "an");
    }

    #[test]
    fn removable_prefix_of_nabananab() {
        let word = w("nabananab");
        let p = longest_removable_prefix(&word).unwrap();
        assert_eq!(p.glyph_string(), "na");
        let rest = word.subword(p.len()..word.len());
        assert_eq!(rest.glyph_string(), "bananab");
        assert_eq!(universality_index(&rest), universality_index(&word));
        // One more letter removed drops the index by exactly one.
        let shorter = word.subword(p.len() + 1..word.len());
        assert_eq!(universality_index(&shorter), universality_index(&word) - 1);
    }

    #[test]
    fn removable_prefix_can_be_empty() {
        let word = w("ab");
        let p = longest_removable_prefix(&word).unwrap();
        assert!(p.is_empty());
    }

    #[test]
    fn removable_prefix_needs_an_arch() {
        let abc = Arc::new(Alphabet::inferred("abc").unwrap());
        let word = Word::with_alphabet("ab", abc).unwrap();
        assert_eq!(longest_removable_prefix(&word), Err(Error::NotUniversal));
    }

    #[test]
    fn seeded_factorization_examples() {
        let word = w("babccaabc");
        let seed = LetterSet::singleton(word.alphabet().index_of('c').unwrap());
        let s = arch_factorize_seeded(seed, &word).unwrap();
        assert_eq!(s.first_arch_end, Some(2)); // virtual arch closes after "ba"
        assert_eq!(s.arch_count, 3);
        assert_eq!(s.remainder_start, word.len());
        assert!(s.remainder_letters.is_empty());

        // An empty seed reproduces the plain factorization.
        let plain = ArchFactorisation::of(&word);
        let s = arch_factorize_seeded(LetterSet::EMPTY, &word).unwrap();
        assert_eq!(s.arch_count, plain.arch_count());
        assert_eq!(s.remainder_start, plain.remainder_start());

        let abc = Arc::new(Alphabet::inferred("abc").unwrap());
        let acabb = Word::with_alphabet("acabb", Arc::clone(&abc)).unwrap();
        let ab: LetterSet = [0u8, 1].into_iter().collect();
        let s = arch_factorize_seeded(ab, &acabb).unwrap();
        assert_eq!(s.first_arch_end, Some(2)); // closes at "ac"
        assert_eq!(s.arch_count, 1);
        assert_eq!(acabb.subword(s.remainder_start..acabb.len()).glyph_string(), "abb");
    }

    #[test]
    fn seeded_factorization_rejects_full_seed() {
        let word = w("abc");
        let full = word.alphabet().full_set();
        assert_eq!(
            arch_factorize_seeded(full, &word),
            Err(Error::SeedCoversAlphabet)
        );
    }

    #[test]
    fn seeded_factorization_reports_open_remainder() {
        let abc = Arc::new(Alphabet::inferred("abc").unwrap());
        let word = Word::with_alphabet("abab", abc).unwrap();
        let s = arch_factorize_seeded(LetterSet::singleton(0), &word).unwrap();
        assert_eq!(s.first_arch_end, None);
        assert_eq!(s.arch_count, 0);
        assert_eq!(s.remainder_start, 0);
        assert_eq!(s.remainder_letters.len(), 2); // {a, b}
    }

    #[test]
    fn concat_growth_examples() {
        let word = w("babccaabc");
        let g = concat_growth(&word, &word).unwrap();
        assert!(g.bonus);
        assert_eq!(g.predicted, 5);
        let square = word.concat(&word).unwrap();
        assert_eq!(universality_index(&square), 5);

        let acabb = w("acabb");
        let g = concat_growth(&acabb, &acabb).unwrap();
        assert!(!g.bonus);
        assert_eq!(g.predicted, 2);
        let square = acabb.concat(&acabb).unwrap();
        assert_eq!(universality_index(&square), 2);

        // Both remainders empty can never cover the alphabet.
        let arch_only = w("abc");
        let g = concat_growth(&w("abccba"), &arch_only).unwrap();
        assert!(!g.bonus);
        assert_eq!(g.predicted, 3);
    }

    #[test]
    fn arch_minimality_and_last_letter_uniqueness() {
        for text in ["abccbbacaaaba", "babccaabc", "aabbcc", "acabb", "nabananab"] {
            let word = w(text);
            let f = ArchFactorisation::of(&word);
            let full = word.alphabet().full_set();
            let mut rebuilt = Vec::new();
            for i in 0..f.arch_count() {
                let arch = f.arch(i);
                rebuilt.extend_from_slice(arch.letters());
                assert_eq!(arch.alph(), full, "arch covers the alphabet");
                let last = *arch.letters().last().unwrap();
                let body = &arch.letters()[..arch.len() - 1];
                assert!(!body.contains(&last), "arch-final letter is unique");
                let body_set: LetterSet = body.iter().copied().collect();
                assert!(body_set.is_strict_subset(full), "arch is minimal");
            }
            rebuilt.extend_from_slice(f.remainder().letters());
            assert_eq!(rebuilt, word.letters(), "factorization reconstructs the word");
            assert!(f.remainder_letters().is_strict_subset(full));
        }
    }
}
