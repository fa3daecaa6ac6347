use thiserror::Error;

/// Errors reported by this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A letter of the input text does not belong to the supplied alphabet.
    /// Positions are 1-based.
    #[error("letter '{letter}' at position {position} is not in the alphabet")]
    LetterOutsideAlphabet { letter: char, position: usize },

    /// An alphabet needs at least one letter; inferring one from the empty
    /// word is refused.
    #[error("alphabet would be empty")]
    EmptyAlphabet,

    /// Letter sets are fixed-width bitmasks, which caps the alphabet size.
    #[error("alphabet has {size} letters, at most {max} are supported")]
    AlphabetTooLarge { size: usize, max: usize },

    #[error("duplicate letter '{letter}' in alphabet")]
    DuplicateLetter { letter: char },

    /// The operation requires both words to live over the same alphabet.
    #[error("words use different alphabets")]
    AlphabetMismatch,

    #[error("rotation offset {offset} out of range for word of length {len}")]
    RotationOutOfRange { offset: usize, len: usize },

    #[error("letter index {index} out of range for alphabet of size {sigma}")]
    IndexOutOfRange { index: u8, sigma: usize },

    /// An enumeration or materialization would exceed its configured budget.
    /// `required` is the budget that would be needed to proceed.
    #[error("{what} needs a budget of {required} but only {allowed} is allowed")]
    BudgetExceeded {
        what: &'static str,
        required: u128,
        allowed: u128,
    },

    /// The word does not contain every letter of its alphabet, so the
    /// requested analysis is undefined.
    #[error("word is not 1-universal over its alphabet")]
    NotUniversal,

    /// Seeded factorization is only defined for seeds that miss at least one
    /// letter.
    #[error("seed letter set covers the whole alphabet")]
    SeedCoversAlphabet,

    /// A cross-check that must hold for every word failed. This always
    /// indicates an implementation bug, never bad input.
    #[error("{check} falsified by '{word}': {detail}")]
    Falsified {
        check: String,
        word: String,
        detail: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
