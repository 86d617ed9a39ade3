//! Combinatorics of the infinite words `u_β` attached to simple Parry
//! numbers: generation, factor and palindromic complexity, the `U`/`V`
//! palindrome ladders, infinite palindromic branches, and checks of the
//! known closed forms against brute-force counts.
//!
//! Floating-point code is generic over [`num_traits::Float`] and the
//! numeration basis over any checked integer type; the aliases below fix
//! the usual choices.

pub mod branches;
pub mod complexity;
pub mod eertree;
pub mod error;
pub mod numeration;
pub mod palindromes;
pub mod parry;
pub mod profile;
pub mod verify;
pub mod word;

pub use branches::{
    branch_central_factor, branch_spec, mechanical_word, psi_substitution, verify_psi, BranchSpec, PsiReport,
    PsiResult,
};
pub use complexity::{factor_profile, special_factors, ComplexityProfile, SuffixAutomaton};
pub use eertree::Eertree;
pub use error::{Error, Result};
pub use numeration::{numeration_basis, uv_lengths, LadderLengths, NumerationBasis};
pub use palindromes::{
    center_of, classify_all_palindromes, closed_form_p, defect_series, longest_palindromic_suffix,
    palindrome_profile, palindromic_extensions, uv_words, Center, DefectSeries, PalindromeClass, PalindromeKind,
    PalindromeProfile,
};
pub use parry::{
    canonical_substitution, check_parry, classify, dominant_root, renyi_digits, Classification, ConfluentParams,
    RenyiDigits, RenyiExpansion, Termination,
};
pub use profile::{default_prefix_len, word_profile, WordProfile};
pub use verify::{analyze, sweep, Analysis, Check, Verdict, VerifyOptions};
pub use word::{Letter, Morphism, Word};

/// Exact numeration basis.
pub type Basis = NumerationBasis<num_bigint::BigUint>;
/// Machine-word numeration basis; overflow is reported as an error.
pub type Basis64 = NumerationBasis<u64>;
/// Real scalar used by the CLI and the checks.
pub type Real = f64;
