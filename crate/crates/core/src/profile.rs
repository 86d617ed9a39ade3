//! Joint factor and palindromic profile of a prefix with a shared horizon.

use crate::complexity::{clamp_n_max, stable_prefix, ComplexityProfile, SuffixAutomaton};
use crate::eertree::Eertree;
use crate::numeration::uv_lengths;
use crate::palindromes::PalindromeProfile;
use crate::parry::Classification;
use crate::word::Letter;

pub const MIN_PREFIX_LEN: usize = 100_000;
pub const MAX_PREFIX_LEN: usize = 10_000_000;
pub const DEFAULT_N_MAX: usize = 500;

/// `max(10^5, 4·|U^(6)|)`, capped at `10^7`; `10^5` without confluent
/// parameters.
pub fn default_prefix_len(class: &Classification) -> usize {
    let u6 = class
        .params()
        .and_then(|p| uv_lengths::<u64>(&p, 6).ok())
        .map_or(0, |(_, u)| u.saturating_mul(4));
    (u6.min(MAX_PREFIX_LEN as u64) as usize).max(MIN_PREFIX_LEN)
}

#[derive(Clone, Debug)]
pub struct WordProfile {
    pub prefix_len: usize,
    pub complexity: ComplexityProfile,
    pub palindromes: PalindromeProfile,
    /// Largest `n` where both `C` and `P` agree between the prefix and its
    /// first half.
    pub horizon: usize,
    /// Palindromic tree of the whole prefix.
    pub tree: Eertree,
}

impl WordProfile {
    pub fn n_max(&self) -> usize {
        self.complexity.n_max()
    }

    pub fn c(&self) -> &[u64] {
        &self.complexity.c
    }

    pub fn p(&self) -> &[u64] {
        &self.palindromes.p
    }
}

pub fn word_profile(prefix: &[Letter], n_max: usize) -> WordProfile {
    let (n_max, truncated) = clamp_n_max(n_max, prefix.len());
    let half = &prefix[..prefix.len() / 2];
    let c_full = SuffixAutomaton::build(prefix).counts_by_length(n_max);
    let c_half = SuffixAutomaton::build(half).counts_by_length(n_max);
    let tree = Eertree::build(prefix);
    let p_full = tree.counts_by_length(n_max);
    let p_half = Eertree::build(half).counts_by_length(n_max);
    let c_horizon = stable_prefix(&c_full, &c_half);
    let p_horizon = stable_prefix(&p_full, &p_half);
    WordProfile {
        prefix_len: prefix.len(),
        complexity: ComplexityProfile::from_counts(c_full, c_horizon, truncated),
        palindromes: PalindromeProfile { p: p_full, horizon: p_horizon, truncated },
        horizon: c_horizon.min(p_horizon),
        tree,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parry::{check_parry, classify, ConfluentParams};

    #[test]
    fn default_lengths() {
        let d = check_parry(&[1, 1]).unwrap();
        assert_eq!(default_prefix_len(&classify(&d).unwrap()), MIN_PREFIX_LEN);
        let d = check_parry(&[3, 1, 1]).unwrap();
        assert_eq!(default_prefix_len(&classify(&d).unwrap()), MIN_PREFIX_LEN);
    }

    #[test]
    fn fibonacci_profile() {
        let p = ConfluentParams::new(1, 1, 2).unwrap();
        let u = p.substitution().fixed_point_prefix(0, 10_000).unwrap();
        let prof = word_profile(&u, 50);
        assert_eq!(prof.horizon, 50);
        assert!(prof.c().iter().enumerate().all(|(n, &c)| c == n as u64 + 1));
        assert_eq!(&prof.p()[..4], &[1, 2, 1, 2]);
    }

    #[test]
    fn tiny_prefix_is_truncated() {
        let prof = word_profile(&[0, 1], 10);
        assert!(prof.complexity.truncated);
        assert_eq!(prof.n_max(), 1);
        let empty = word_profile(&[], 0);
        assert_eq!(empty.c(), &[1]);
        assert_eq!(empty.p(), &[1]);
    }
}
