use thiserror::Error;

use crate::word::Letter;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("letter {letter} is outside the alphabet of size {alphabet_size}")]
    LetterOutOfAlphabet { letter: Letter, alphabet_size: usize },

    #[error("image of letter {0} is empty (morphism must be non-erasing)")]
    ErasingImage(Letter),

    #[error("alphabet size must be between 1 and 256, got {0}")]
    BadAlphabetSize(usize),

    #[error("image of {seed} does not start with {seed} or has length < 2; not a substitution")]
    NotASubstitution { seed: Letter },

    #[error("digit string is empty")]
    EmptyDigits,

    #[error("last digit is zero; simple expansions omit ending zeros")]
    TrailingZero,

    #[error("digit string (1) corresponds to beta = 1")]
    UnitBase,

    #[error("Parry condition violated: suffix starting at index {index} is not smaller than the whole string")]
    ParryViolation { index: usize },

    #[error("integer base (single digit) is out of scope: fixed point is periodic")]
    IntegerBase,

    #[error("invalid confluent parameters t={t}, s={s}, m={m} (need t >= s >= 1, m >= 2)")]
    BadParams { t: u32, s: u32, m: usize },

    #[error("beta must be a finite real number greater than 1")]
    BadBeta,

    #[error("digit {index} is ambiguous: beta*T^(i-1)(1) lies inside the guard band; supply a more precise beta")]
    Precision { index: usize },

    #[error("integer overflow in numeration basis at index {0}")]
    Overflow(usize),

    #[error("word length {requested} exceeds the cap {cap}")]
    LengthCap { requested: u128, cap: usize },

    #[error("palindrome of length {len} needs horizon >= {needed}, have {horizon}")]
    InsufficientHorizon { len: usize, needed: usize, horizon: usize },

    #[error("word is not a palindrome")]
    NotAPalindrome,

    #[error("word does not occur in the indexed prefix")]
    NotAFactor,

    #[error("no infinite palindromic branch with center {center}: {reason}")]
    BranchAbsent { center: String, reason: &'static str },

    #[error("t odd and s even: no palindromic branch with center epsilon, so no psi")]
    NoEpsilonBranch,

    #[error("conjugator is not a prefix of the conjugated image of letter {0}")]
    ConjugatorNotPrefix(Letter),

    #[error("operation requires {0}")]
    Unsupported(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
