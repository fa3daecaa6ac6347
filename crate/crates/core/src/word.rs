//! Words over an alphabet and the scattered-factor primitives.
//!
//! A word stores its letters as dense indices into a shared [`Alphabet`];
//! cloning is cheap (two reference-count bumps). A word `u` is a scattered
//! factor of `w` when `u` can be obtained from `w` by deleting letters.

use std::sync::Arc;

use crate::alphabet::{Alphabet, LetterSet};
use crate::error::{Error, Result};

/// Default cap on the number of candidate words enumerated by
/// [`scatfact_k`].
pub const DEFAULT_CANDIDATE_GUARD: u64 = 1 << 22;

/// Default cap on the length of a materialized power, see [`Word::power`].
pub const DEFAULT_POWER_GUARD: usize = 1 << 26;

/// An immutable word over a fixed alphabet.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word {
    letters: Arc<[u8]>,
    alphabet: Arc<Alphabet>,
}

impl Word {
    /// Builds a word from text, inferring the alphabet from the distinct
    /// letters of the text. The empty word has no inferable alphabet and is
    /// refused; use [`Word::with_alphabet`] for it.
    pub fn new(text: &str) -> Result<Self> {
        let alphabet = Arc::new(Alphabet::inferred(text)?);
        Self::with_alphabet(text, alphabet)
    }

    /// Builds a word from text over the given alphabet. Every letter of the
    /// text must belong to the alphabet.
    pub fn with_alphabet(text: &str, alphabet: Arc<Alphabet>) -> Result<Self> {
        let mut letters = Vec::with_capacity(text.len());
        for (position, glyph) in text.chars().enumerate() {
            match alphabet.index_of(glyph) {
                Some(i) => letters.push(i),
                None => {
                    return Err(Error::LetterOutsideAlphabet {
                        letter: glyph,
                        position: position + 1,
                    })
                }
            }
        }
        Ok(Word {
            letters: letters.into(),
            alphabet,
        })
    }

    /// Builds a word directly from letter indices.
    pub fn from_indices(indices: Vec<u8>, alphabet: Arc<Alphabet>) -> Result<Self> {
        let sigma = alphabet.size();
        if let Some(&bad) = indices.iter().find(|&&i| i as usize >= sigma) {
            return Err(Error::IndexOutOfRange { index: bad, sigma });
        }
        Ok(Word {
            letters: indices.into(),
            alphabet,
        })
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    /// Alphabet size sigma.
    pub fn sigma(&self) -> usize {
        self.alphabet.size()
    }

    pub fn same_alphabet(&self, other: &Word) -> bool {
        Arc::ptr_eq(&self.alphabet, &other.alphabet) || self.alphabet == other.alphabet
    }

    /// The set of letters occurring in the word.
    pub fn alph(&self) -> LetterSet {
        self.letters.iter().map(|&i| i).collect()
    }

    /// The reversal of the word.
    pub fn reverse(&self) -> Word {
        let mut letters: Vec<u8> = self.letters.to_vec();
        letters.reverse();
        Word {
            letters: letters.into(),
            alphabet: Arc::clone(&self.alphabet),
        }
    }

    /// The conjugate obtained by rotating `offset` letters to the back:
    /// for `w = xy` with `|x| = offset`, returns `yx`. Valid offsets are
    /// `0..=len`, and both extremes return the word itself.
    pub fn conjugate(&self, offset: usize) -> Result<Word> {
        if offset > self.len() {
            return Err(Error::RotationOutOfRange {
                offset,
                len: self.len(),
            });
        }
        let mut letters = Vec::with_capacity(self.len());
        letters.extend_from_slice(&self.letters[offset..]);
        letters.extend_from_slice(&self.letters[..offset]);
        Ok(Word {
            letters: letters.into(),
            alphabet: Arc::clone(&self.alphabet),
        })
    }

    /// Materializes the power `w^s`, refusing if the result would exceed
    /// [`DEFAULT_POWER_GUARD`] letters.
    pub fn power(&self, s: usize) -> Result<Word> {
        self.power_guarded(s, DEFAULT_POWER_GUARD)
    }

    pub fn power_guarded(&self, s: usize, max_len: usize) -> Result<Word> {
        let total = self
            .len()
            .checked_mul(s)
            .filter(|&t| t <= max_len)
            .ok_or(Error::BudgetExceeded {
                what: "power materialization",
                required: self.len() as u128 * s as u128,
                allowed: max_len as u128,
            })?;
        let mut letters = Vec::with_capacity(total);
        for _ in 0..s {
            letters.extend_from_slice(&self.letters);
        }
        Ok(Word {
            letters: letters.into(),
            alphabet: Arc::clone(&self.alphabet),
        })
    }

    /// Concatenation of two words over the same alphabet.
    pub fn concat(&self, other: &Word) -> Result<Word> {
        if !self.same_alphabet(other) {
            return Err(Error::AlphabetMismatch);
        }
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Ok(Word {
            letters: letters.into(),
            alphabet: Arc::clone(&self.alphabet),
        })
    }

    /// Copies a contiguous range out as a word over the same alphabet.
    pub fn subword(&self, range: std::ops::Range<usize>) -> Word {
        Word {
            letters: self.letters[range].to_vec().into(),
            alphabet: Arc::clone(&self.alphabet),
        }
    }

    /// Renders the word back to glyphs.
    pub fn glyph_string(&self) -> String {
        self.letters
            .iter()
            .map(|&i| self.alphabet.glyph(i))
            .collect()
    }
}

impl std::fmt::Display for Word {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.glyph_string())
    }
}

/// Greedy left-to-right embedding test: true iff `u` is a scattered factor
/// of `w`. The greedy leftmost embedding exists exactly when any embedding
/// does.
pub fn is_scattered_factor(u: &Word, w: &Word) -> Result<bool> {
    if !u.same_alphabet(w) {
        return Err(Error::AlphabetMismatch);
    }
    Ok(embeds(u.letters(), w.letters()))
}

pub(crate) fn embeds(u: &[u8], w: &[u8]) -> bool {
    let mut it = w.iter();
    u.iter().all(|&c| it.any(|&x| x == c))
}

/// All scattered factors of `w` of length exactly `k`, i.e. every word of
/// `Sigma^k` that embeds into `w`, in lexicographic order of the alphabet.
/// Enumerates all `sigma^k` candidates and is guarded accordingly.
pub fn scatfact_k(w: &Word, k: usize) -> Result<Vec<Word>> {
    scatfact_k_guarded(w, k, DEFAULT_CANDIDATE_GUARD)
}

pub fn scatfact_k_guarded(w: &Word, k: usize, max_candidates: u64) -> Result<Vec<Word>> {
    let sigma = w.sigma() as u64;
    let candidates = sigma
        .checked_pow(u32::try_from(k).unwrap_or(u32::MAX))
        .filter(|&c| c <= max_candidates)
        .ok_or(Error::BudgetExceeded {
            what: "scattered-factor enumeration",
            required: (w.sigma() as u128).pow(k.min(u32::MAX as usize) as u32),
            allowed: max_candidates as u128,
        })?;
    let _ = candidates;

    let mut found = Vec::new();
    let mut candidate = vec![0u8; k];
    loop {
        if embeds(&candidate, w.letters()) {
            found.push(Word {
                letters: candidate.clone().into(),
                alphabet: Arc::clone(w.alphabet()),
            });
        }
        if !advance(&mut candidate, w.sigma() as u8) {
            break;
        }
    }
    Ok(found)
}

/// Odometer step in lexicographic order; false once the last word was seen.
pub(crate) fn advance(digits: &mut [u8], base: u8) -> bool {
    for d in digits.iter_mut().rev() {
        if *d + 1 < base {
            *d += 1;
            return true;
        }
        *d = 0;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(text: &str) -> Word {
        Word::new(text).unwrap()
    }

    #[test]
    fn banana_infers_sorted_alphabet() {
        let word = w("banana");
        assert_eq!(word.alphabet().glyphs(), &['a', 'b', 'n']);
        assert_eq!(word.sigma(), 3);
        assert_eq!(word.glyph_string(), "banana");
    }

    #[test]
    fn empty_word_needs_explicit_alphabet() {
        assert_eq!(Word::new(""), Err(Error::EmptyAlphabet));
        let ab = Arc::new(Alphabet::inferred("ab").unwrap());
        let e = Word::with_alphabet("", ab).unwrap();
        assert_eq!(e.len(), 0);
        assert!(e.alph().is_empty());
    }

    #[test]
    fn letters_outside_alphabet_are_named() {
        let an = Arc::new(Alphabet::inferred("an").unwrap());
        assert_eq!(
            Word::with_alphabet("anxna", an.clone()),
            Err(Error::LetterOutsideAlphabet {
                letter: 'x',
                position: 3
            })
        );
        let word = Word::with_alphabet("anana", an).unwrap();
        assert_eq!(word.sigma(), 2);
    }

    #[test]
    fn scattered_factor_examples() {
        let dal = w("dalmatian");
        let latin = Word::with_alphabet("latin", Arc::clone(dal.alphabet())).unwrap();
        let lama = Word::with_alphabet("lama", Arc::clone(dal.alphabet())).unwrap();
        let empty = Word::with_alphabet("", Arc::clone(dal.alphabet())).unwrap();
        assert!(is_scattered_factor(&latin, &dal).unwrap());
        assert!(!is_scattered_factor(&lama, &dal).unwrap());
        assert!(is_scattered_factor(&empty, &dal).unwrap());

        let other = w("zzz");
        assert_eq!(
            is_scattered_factor(&other, &dal),
            Err(Error::AlphabetMismatch)
        );
    }

    #[test]
    fn scatfact_k_of_anana_is_full() {
        let word = w("anana");
        let f = scatfact_k(&word, 2).unwrap();
        assert_eq!(f.len(), 4);
        let rendered: Vec<String> = f.iter().map(Word::glyph_string).collect();
        assert_eq!(rendered, ["aa", "an", "na", "nn"]);
    }

    #[test]
    fn scatfact_k_longer_than_word_is_empty() {
        let word = w("ab");
        assert!(scatfact_k(&word, 3).unwrap().is_empty());
    }

    #[test]
    fn scatfact_k_of_banana() {
        // Of the 9 candidates over {a,b,n}, the single b blocks ab, bb and nb.
        let word = w("banana");
        let f = scatfact_k(&word, 2).unwrap();
        let rendered: Vec<String> = f.iter().map(Word::glyph_string).collect();
        assert_eq!(rendered, ["aa", "an", "ba", "bn", "na", "nn"]);
    }

    #[test]
    fn scatfact_guard_refuses_with_required_budget() {
        let word = w("abcdefghij");
        match scatfact_k_guarded(&word, 10, 1000) {
            Err(Error::BudgetExceeded { required, allowed, .. }) => {
                assert_eq!(required, 10u128.pow(10));
                assert_eq!(allowed, 1000);
            }
            other => panic!("expected budget refusal, got {other:?}"),
        }
    }

    #[test]
    fn reverse_conjugate_power() {
        assert_eq!(w("nabananab").reverse().glyph_string(), "bananaban");
        assert_eq!(w("abc").conjugate(1).unwrap().glyph_string(), "bca");
        assert_eq!(w("ab").power(3).unwrap().glyph_string(), "ababab");

        let word = w("abc");
        assert_eq!(word.conjugate(0).unwrap(), word);
        assert_eq!(word.conjugate(3).unwrap(), word);
        assert_eq!(
            word.conjugate(4),
            Err(Error::RotationOutOfRange { offset: 4, len: 3 })
        );
    }

    #[test]
    fn power_guard_refuses() {
        let word = w("ab");
        assert!(matches!(
            word.power_guarded(100, 50),
            Err(Error::BudgetExceeded { .. })
        ));
    }
}
