//! Alphabets and letter sets.
//!
//! An [`Alphabet`] maps between human-readable glyphs and the dense letter
//! indices `0..sigma` that every inner loop works on. A [`LetterSet`] is a
//! bitmask over those indices, so unions and coverage tests are single
//! machine operations.

use crate::error::{Error, Result};

/// Largest supported alphabet; letter sets are stored in a `u128`.
pub const MAX_ALPHABET: usize = 128;

/// An ordered set of distinct letters. The ordering is fixed at construction
/// and determines the letter indices used by [`crate::word::Word`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    glyphs: Box<[char]>,
}

impl Alphabet {
    /// Builds an alphabet from glyphs in the given order.
    pub fn new(glyphs: impl IntoIterator<Item = char>) -> Result<Self> {
        let glyphs: Vec<char> = glyphs.into_iter().collect();
        if glyphs.is_empty() {
            return Err(Error::EmptyAlphabet);
        }
        if glyphs.len() > MAX_ALPHABET {
            return Err(Error::AlphabetTooLarge {
                size: glyphs.len(),
                max: MAX_ALPHABET,
            });
        }
        for (i, &g) in glyphs.iter().enumerate() {
            if glyphs[..i].contains(&g) {
                return Err(Error::DuplicateLetter { letter: g });
            }
        }
        Ok(Alphabet {
            glyphs: glyphs.into_boxed_slice(),
        })
    }

    /// Infers an alphabet from a text: the distinct letters, sorted, so that
    /// equal texts always produce identical alphabets.
    pub fn inferred(text: &str) -> Result<Self> {
        let mut glyphs: Vec<char> = text.chars().collect();
        glyphs.sort_unstable();
        glyphs.dedup();
        Self::new(glyphs)
    }

    /// The canonical alphabet `a, b, c, ...` of the given size.
    pub fn canonical(sigma: usize) -> Result<Self> {
        if sigma == 0 {
            return Err(Error::EmptyAlphabet);
        }
        if sigma > 26 {
            return Err(Error::AlphabetTooLarge { size: sigma, max: 26 });
        }
        Self::new((0..sigma).map(|i| (b'a' + i as u8) as char))
    }

    /// Alphabet size, usually written sigma.
    pub fn size(&self) -> usize {
        self.glyphs.len()
    }

    pub fn glyphs(&self) -> &[char] {
        &self.glyphs
    }

    pub fn glyph(&self, index: u8) -> char {
        self.glyphs[index as usize]
    }

    /// Index of a glyph, if it belongs to the alphabet.
    pub fn index_of(&self, glyph: char) -> Option<u8> {
        self.glyphs.iter().position(|&g| g == glyph).map(|i| i as u8)
    }

    /// The set containing every letter of this alphabet.
    pub fn full_set(&self) -> LetterSet {
        let mut s = LetterSet::EMPTY;
        for i in 0..self.size() {
            s.insert(i as u8);
        }
        s
    }
}

impl std::fmt::Display for Alphabet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (i, g) in self.glyphs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, "}}")
    }
}

/// A subset of an alphabet, stored as a bitmask over letter indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct LetterSet(u128);

impl LetterSet {
    pub const EMPTY: LetterSet = LetterSet(0);

    pub fn singleton(index: u8) -> Self {
        LetterSet(1u128 << index)
    }

    pub fn insert(&mut self, index: u8) {
        debug_assert!((index as usize) < MAX_ALPHABET);
        self.0 |= 1u128 << index;
    }

    pub fn contains(self, index: u8) -> bool {
        self.0 >> index & 1 == 1
    }

    #[must_use]
    pub fn union(self, other: LetterSet) -> LetterSet {
        LetterSet(self.0 | other.0)
    }

    #[must_use]
    pub fn intersection(self, other: LetterSet) -> LetterSet {
        LetterSet(self.0 & other.0)
    }

    /// Number of letters in the set.
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: LetterSet) -> bool {
        self.0 & other.0 == self.0
    }

    pub fn is_strict_subset(self, other: LetterSet) -> bool {
        self != other && self.is_subset(other)
    }

    /// Letter indices in ascending order.
    pub fn iter(self) -> impl Iterator<Item = u8> {
        let bits = self.0;
        (0..MAX_ALPHABET as u8).filter(move |&i| bits >> i & 1 == 1)
    }

    /// Renders the set as the contained glyphs in alphabet order.
    pub fn render(self, alphabet: &Alphabet) -> String {
        self.iter()
            .take_while(|&i| (i as usize) < alphabet.size())
            .map(|i| alphabet.glyph(i))
            .collect()
    }
}

impl FromIterator<u8> for LetterSet {
    fn from_iter<T: IntoIterator<Item = u8>>(iter: T) -> Self {
        let mut s = LetterSet::EMPTY;
        for i in iter {
            s.insert(i);
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inferred_is_sorted_and_deduplicated() {
        let a = Alphabet::inferred("banana").unwrap();
        assert_eq!(a.glyphs(), &['a', 'b', 'n']);
        assert_eq!(a.size(), 3);
    }

    #[test]
    fn explicit_order_is_kept() {
        let a = Alphabet::new(['n', 'a']).unwrap();
        assert_eq!(a.glyphs(), &['n', 'a']);
        assert_eq!(a.index_of('n'), Some(0));
    }

    #[test]
    fn construction_errors() {
        assert_eq!(Alphabet::inferred(""), Err(Error::EmptyAlphabet));
        assert_eq!(
            Alphabet::new(['a', 'a']),
            Err(Error::DuplicateLetter { letter: 'a' })
        );
        assert!(matches!(
            Alphabet::new((0..200u32).map(|i| char::from_u32(0x100 + i).unwrap())),
            Err(Error::AlphabetTooLarge { size: 200, .. })
        ));
    }

    #[test]
    fn letter_set_operations() {
        let a = Alphabet::inferred("abc").unwrap();
        let full = a.full_set();
        assert_eq!(full.len(), 3);
        let mut s = LetterSet::EMPTY;
        assert!(s.is_empty());
        s.insert(1);
        assert!(s.contains(1));
        assert!(!s.contains(0));
        assert!(s.is_strict_subset(full));
        assert_eq!(s.union(LetterSet::singleton(0)).len(), 2);
        assert_eq!(s.render(&a), "b");
        assert_eq!(full.render(&a), "abc");
    }
}
