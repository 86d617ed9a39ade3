//! Palindromic complexity, palindromic extensions and their classification
//! against the `U`/`V` ladders, closed-form `P(n)`, centers, and defect.

use std::fmt;

use crate::complexity::{clamp_n_max, stable_prefix};
use crate::eertree::Eertree;
use crate::error::{Error, Result};
use crate::numeration::{uv_lengths, LadderLengths};
use crate::parry::ConfluentParams;
use crate::word::{is_palindrome, Letter, Word};

/// Default cap on explicitly constructed ladder words.
pub const DEFAULT_LENGTH_CAP: usize = 10_000_000;

/// `P(0..=n_max)` trusted up to `horizon`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PalindromeProfile {
    pub p: Vec<u64>,
    pub horizon: usize,
    pub truncated: bool,
}

/// Palindromic complexity of `prefix`, with the horizon taken as the largest
/// `n` where `prefix` and its first half give the same counts.
pub fn palindrome_profile(prefix: &[Letter], n_max: usize) -> PalindromeProfile {
    let (n_max, truncated) = clamp_n_max(n_max, prefix.len());
    let full = Eertree::build(prefix).counts_by_length(n_max);
    let half = Eertree::build(&prefix[..prefix.len() / 2]).counts_by_length(n_max);
    let horizon = stable_prefix(&full, &half);
    PalindromeProfile { p: full, horizon, truncated }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PalindromeKind {
    /// No palindromic extension.
    Maximal,
    UniqueExtension,
    TwoExtensions,
    /// Three or more; never expected for `u_β`.
    Many,
}

impl PalindromeKind {
    pub fn from_count(n: usize) -> Self {
        match n {
            0 => PalindromeKind::Maximal,
            1 => PalindromeKind::UniqueExtension,
            2 => PalindromeKind::TwoExtensions,
            _ => PalindromeKind::Many,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PalindromeClass {
    pub word: Word,
    pub extensions: Vec<Letter>,
    pub kind: PalindromeKind,
}

/// Letters `a` with `a·p·a` in the language of the indexed prefix. Every
/// such `a·p·a` is a palindrome, so it is a child of `p` in the eertree.
pub fn palindromic_extensions(p: &[Letter], tree: &Eertree, horizon: usize) -> Result<PalindromeClass> {
    if p.len() + 2 > horizon {
        return Err(Error::InsufficientHorizon { len: p.len(), needed: p.len() + 2, horizon });
    }
    if !is_palindrome(p) {
        return Err(Error::NotAPalindrome);
    }
    let v = tree.find(p).ok_or(Error::NotAFactor)?;
    let extensions = tree.extensions(v);
    Ok(PalindromeClass {
        word: Word::from(p),
        kind: PalindromeKind::from_count(extensions.len()),
        extensions,
    })
}

/// `φ(p)·0^t`.
pub fn lift(params: &ConfluentParams, p: &[Letter]) -> Result<Word> {
    let phi = params.substitution();
    Ok(phi.apply(p)?.concat(&Word::zeros(params.t as usize)))
}

/// `(V^(k), U^(k))` from `V^(1) = 0^t`, `U^(1) = 0^{t+s-1}` and
/// `X^(k) = φ(X^(k-1))·0^t`.
pub fn uv_words(params: &ConfluentParams, k: usize, cap: usize) -> Result<(Word, Word)> {
    assert!(k >= 1, "ladder index starts at 1");
    let (_, u_len) = uv_lengths::<u128>(params, k)?;
    if u_len > cap as u128 {
        return Err(Error::LengthCap { requested: u_len, cap });
    }
    let mut v = Word::zeros(params.t as usize);
    let mut u = Word::zeros((params.t + params.s - 1) as usize);
    for _ in 1..k {
        v = lift(params, &v)?;
        u = lift(params, &u)?;
    }
    Ok((v, u))
}

/// All `(V^(k), U^(k))` with `|V^(k)| <= max_len`, in order of `k`.
pub fn uv_ladder(params: &ConfluentParams, max_len: usize) -> Result<Vec<(Word, Word)>> {
    let mut out = Vec::new();
    let mut v = Word::zeros(params.t as usize);
    let mut u = Word::zeros((params.t + params.s - 1) as usize);
    while v.len() <= max_len {
        let next = (lift(params, &v)?, lift(params, &u)?);
        out.push((v, u));
        (v, u) = next;
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassifiedPalindrome {
    pub class: PalindromeClass,
    /// The kind predicted from ladder membership.
    pub expected: PalindromeKind,
}

impl ClassifiedPalindrome {
    pub fn matches(&self) -> bool {
        self.class.kind == self.expected
    }
}

/// Classifies every palindromic factor of length `<= max_len` (and
/// `<= horizon - 2`) and pairs it with the kind predicted by the ladders:
/// `Maximal` iff some `U^(k)`, `TwoExtensions` iff some `V^(k)`, otherwise
/// `UniqueExtension`. For `s = 1` every palindrome is predicted to have a
/// unique extension. Output is sorted by (length, word).
pub fn classify_all_palindromes(
    tree: &Eertree,
    horizon: usize,
    params: &ConfluentParams,
    max_len: usize,
) -> Result<Vec<ClassifiedPalindrome>> {
    let limit = max_len.min(horizon.saturating_sub(2));
    let ladder = if params.s >= 2 { uv_ladder(params, limit)? } else { Vec::new() };
    let ladder_lengths = LadderLengths::up_to(params, limit as u64);
    let mut out = Vec::new();
    let mut words: Vec<&[Letter]> = std::iter::once(&[][..])
        .chain(tree.nodes().map(|v| tree.node_word(v)))
        .filter(|w| w.len() <= limit)
        .collect();
    words.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
    for w in words {
        let class = palindromic_extensions(w, tree, horizon)?;
        let n = w.len() as u64;
        let expected = if params.s == 1 {
            PalindromeKind::UniqueExtension
        } else if ladder_lengths.is_u_length(n) && ladder.iter().any(|(_, u)| u.as_slice() == w) {
            PalindromeKind::Maximal
        } else if ladder_lengths.is_v_length(n) && ladder.iter().any(|(v, _)| v.as_slice() == w) {
            PalindromeKind::TwoExtensions
        } else {
            PalindromeKind::UniqueExtension
        };
        out.push(ClassifiedPalindrome { class, expected });
    }
    Ok(out)
}

/// Closed-form palindromic complexity `P(n)`.
///
/// For `s = 1` (Arnoux-Rauzy): `1` for even `n`, `m` for odd `n`. For
/// `s >= 2` the four parity cases of `(s, t)` below, with windows
/// `|V^(k)| < n <= |U^(k)|`.
pub fn closed_form_p(params: &ConfluentParams, n: u64) -> u64 {
    let bound = n.max(1) + 1;
    let ladder = LadderLengths::up_to(params, bound);
    closed_form_p_with(&ladder, n)
}

/// As [`closed_form_p`], reusing ladder lengths that extend beyond `n`.
pub fn closed_form_p_with(ladder: &LadderLengths, n: u64) -> u64 {
    let ConfluentParams { t, s, m } = ladder.params;
    let m = m as u64;
    let even = n % 2 == 0;
    if s == 1 {
        return if even { 1 } else { m };
    }
    let window = ladder.window_of(n);
    match (s % 2 == 1, t % 2 == 1) {
        // s odd, t even
        (true, false) => {
            if !even {
                m
            } else if window.is_some() {
                2
            } else {
                1
            }
        }
        // s odd, t odd
        (true, true) => {
            let period = m as usize + 1;
            if !even {
                if window.is_some_and(|k| k % period != 0) {
                    m + 1
                } else {
                    m
                }
            } else if window.is_some_and(|k| k % period == 0) {
                2
            } else {
                1
            }
        }
        // s even, t odd
        (false, true) => {
            if !even {
                if window.is_some_and(|k| k >= 2) {
                    m + 2
                } else if n <= ladder.v(1) {
                    m
                } else {
                    m + 1
                }
            } else if n <= ladder.u(1) {
                1
            } else {
                0
            }
        }
        // s even, t even
        (false, false) => {
            let mm = m as usize;
            if !even {
                if n <= ladder.u_or_max(mm) {
                    (1..=mm).filter(|&k| n <= ladder.u_or_max(k)).count() as u64
                } else {
                    0
                }
            } else if window.is_some_and(|k| k > mm) {
                m + 2
            } else if n <= ladder.v_or_max(mm + 1) {
                (1..=mm).filter(|&k| n > ladder.v_or_max(k)).count() as u64 + 1
            } else {
                m + 1
            }
        }
    }
}

/// The center of a palindrome: its middle letter, or ε for even length.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Center {
    Empty,
    Letter(Letter),
}

impl fmt::Display for Center {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Center::Empty => write!(f, "eps"),
            Center::Letter(a) => write!(f, "{}", a),
        }
    }
}

pub fn center_of(p: &[Letter]) -> Result<Center> {
    if !is_palindrome(p) {
        return Err(Error::NotAPalindrome);
    }
    Ok(if p.len() % 2 == 1 {
        Center::Letter(p[p.len() / 2])
    } else {
        Center::Empty
    })
}

/// Center of `φ(p)·0^t` as a function of the center of `p`:
/// `a ↦ a+1` for `a < m-1`; `m-1 ↦ 0` if `s+t` odd, `ε` if even;
/// `ε ↦ ε` if `t` even, `0` if `t` odd.
pub fn transported_center(params: &ConfluentParams, c: Center) -> Center {
    let m = params.m as Letter;
    match c {
        Center::Letter(a) if a + 1 < m => Center::Letter(a + 1),
        Center::Letter(_) => {
            if (params.s + params.t) % 2 == 1 {
                Center::Letter(0)
            } else {
                Center::Empty
            }
        }
        Center::Empty => {
            if params.t % 2 == 0 {
                Center::Empty
            } else {
                Center::Letter(0)
            }
        }
    }
}

/// Predicted center of `V^(n)`: ε for `t` even; `n-1 mod m` for `t` odd and
/// `s` even; for `t`, `s` odd ε when `n ≡ 0 (mod m+1)` and `n-1 mod (m+1)`
/// otherwise.
pub fn predicted_v_center(params: &ConfluentParams, n: usize) -> Center {
    let m = params.m;
    if params.t % 2 == 0 {
        Center::Empty
    } else if params.s % 2 == 0 {
        Center::Letter(((n - 1) % m) as Letter)
    } else if n % (m + 1) == 0 {
        Center::Empty
    } else {
        Center::Letter(((n - 1) % (m + 1)) as Letter)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DefectSeries {
    /// `defects[k]` = defect of the prefix of length `k`, `k = 0..=|w|`.
    pub defects: Vec<u32>,
    pub full: bool,
}

impl DefectSeries {
    pub fn max_defect(&self) -> u32 {
        self.defects.iter().copied().max().unwrap_or(0)
    }

    /// Length of the shortest prefix with positive defect.
    pub fn first_defective_prefix(&self) -> Option<usize> {
        self.defects.iter().position(|&d| d > 0)
    }
}

/// `defect(w_1..w_k) = k + 1 - P(w_1..w_k)` for every prefix.
pub fn defect_series(prefix: &[Letter]) -> DefectSeries {
    defect_series_of(&Eertree::build(prefix))
}

pub fn defect_series_of(tree: &Eertree) -> DefectSeries {
    let defects: Vec<u32> = tree
        .prefix_palindrome_counts()
        .iter()
        .enumerate()
        .map(|(k, &count)| (k + 1 - count) as u32)
        .collect();
    let full = defects.iter().all(|&d| d == 0);
    DefectSeries { defects, full }
}

/// Longest palindromic suffix of `w` and whether it is unioccurrent in `w`.
pub fn longest_palindromic_suffix(w: &[Letter]) -> Result<(Word, bool)> {
    Eertree::build(w)
        .longest_palindromic_suffix()
        .ok_or(Error::Unsupported("a non-empty word"))
}

/// A maximal block of zeros `X 0^n Y` with `X, Y` non-zero that is not one
/// of `X0^t1`, `10^tX` or `10^{t+s}1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZeroBlockViolation {
    pub position: usize,
    pub left: Letter,
    pub zeros: usize,
    pub right: Letter,
}

/// Scans every maximal zero block flanked by non-zero letters.
pub fn check_zero_blocks(prefix: &[Letter], params: &ConfluentParams) -> std::result::Result<(), ZeroBlockViolation> {
    let t = params.t as usize;
    let ts = t + params.s as usize;
    let mut prev: Option<usize> = None;
    for (i, &a) in prefix.iter().enumerate() {
        if a == 0 {
            continue;
        }
        if let Some(j) = prev {
            let (x, y, n) = (prefix[j], a, i - j - 1);
            let ok = (n == t && (y == 1 || x == 1)) || (n == ts && x == 1 && y == 1);
            if !ok {
                return Err(ZeroBlockViolation { position: j, left: x, zeros: n, right: y });
            }
        }
        prev = Some(i);
    }
    Ok(())
}
