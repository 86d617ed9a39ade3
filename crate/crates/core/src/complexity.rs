//! Factor complexity `C(n)` of a prefix, its differences, special factors,
//! and the closed form of `ΔC` for confluent parameters.

use std::collections::{BTreeMap, BTreeSet};

use crate::numeration::LadderLengths;
use crate::parry::ConfluentParams;
use crate::word::{Letter, Word};

const NONE: u32 = u32::MAX;

/// Suffix automaton of a word over `{0, .., k-1}`.
///
/// Every non-root state represents the substrings of lengths
/// `len(link(v)) + 1 ..= len(v)`, and distinct states represent disjoint
/// sets, so summing these ranges counts distinct factors by length.
pub struct SuffixAutomaton {
    stride: usize,
    len: Vec<u32>,
    link: Vec<u32>,
    next: Vec<u32>,
    last: u32,
}

impl SuffixAutomaton {
    pub fn new(alphabet_size: usize) -> Self {
        let stride = alphabet_size.max(1);
        SuffixAutomaton {
            stride,
            len: vec![0],
            link: vec![NONE],
            next: vec![NONE; stride],
            last: 0,
        }
    }

    pub fn build(w: &[Letter]) -> Self {
        let k = w.iter().map(|&a| a as usize + 1).max().unwrap_or(1);
        let mut sa = Self::new(k);
        sa.len.reserve(2 * w.len());
        sa.link.reserve(2 * w.len());
        sa.next.reserve(2 * w.len() * k);
        for &a in w {
            sa.push(a);
        }
        sa
    }

    fn add_state(&mut self, len: u32, link: u32) -> u32 {
        self.len.push(len);
        self.link.push(link);
        self.next.extend(std::iter::repeat(NONE).take(self.stride));
        (self.len.len() - 1) as u32
    }

    fn go(&self, v: u32, a: Letter) -> u32 {
        self.next[v as usize * self.stride + a as usize]
    }

    fn set(&mut self, v: u32, a: Letter, to: u32) {
        self.next[v as usize * self.stride + a as usize] = to;
    }

    pub fn push(&mut self, a: Letter) {
        assert!((a as usize) < self.stride, "letter outside automaton alphabet");
        let cur = self.add_state(self.len[self.last as usize] + 1, NONE);
        let mut p = self.last;
        while p != NONE && self.go(p, a) == NONE {
            self.set(p, a, cur);
            p = self.link[p as usize];
        }
        if p == NONE {
            self.link[cur as usize] = 0;
        } else {
            let q = self.go(p, a);
            if self.len[p as usize] + 1 == self.len[q as usize] {
                self.link[cur as usize] = q;
            } else {
                let clone = self.add_state(self.len[p as usize] + 1, self.link[q as usize]);
                let (src, dst) = (q as usize * self.stride, clone as usize * self.stride);
                self.next.copy_within(src..src + self.stride, dst);
                while p != NONE && self.go(p, a) == q {
                    self.set(p, a, clone);
                    p = self.link[p as usize];
                }
                self.link[q as usize] = clone;
                self.link[cur as usize] = clone;
            }
        }
        self.last = cur;
    }

    pub fn state_count(&self) -> usize {
        self.len.len()
    }

    /// `C(0..=n_max)` of the indexed word.
    pub fn counts_by_length(&self, n_max: usize) -> Vec<u64> {
        let mut diff = vec![0i64; n_max + 2];
        for v in 1..self.len.len() {
            let lo = self.len[self.link[v] as usize] as usize + 1;
            let hi = (self.len[v] as usize).min(n_max);
            if lo <= hi {
                diff[lo] += 1;
                diff[hi + 1] -= 1;
            }
        }
        let mut out = Vec::with_capacity(n_max + 1);
        out.push(1);
        let mut run = 0i64;
        for d in diff.iter().take(n_max + 1).skip(1) {
            run += d;
            out.push(run as u64);
        }
        out
    }
}

/// Largest `n` such that `a[0..=n] == b[0..=n]`.
pub fn stable_prefix(a: &[u64], b: &[u64]) -> usize {
    let n = a.len().min(b.len());
    let first_diff = (0..n).find(|&i| a[i] != b[i]).unwrap_or(n);
    first_diff.saturating_sub(1)
}

/// `C(n)`, `ΔC(n)`, `Δ²C(n)` over `0..=n_max`, trusted up to `horizon`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexityProfile {
    pub c: Vec<u64>,
    pub delta: Vec<i64>,
    pub delta2: Vec<i64>,
    pub horizon: usize,
    /// Set when the requested `n_max` had to be clamped below `|prefix|`.
    pub truncated: bool,
}

impl ComplexityProfile {
    pub fn from_counts(c: Vec<u64>, horizon: usize, truncated: bool) -> Self {
        let delta: Vec<i64> = c.windows(2).map(|w| w[1] as i64 - w[0] as i64).collect();
        let delta2: Vec<i64> = delta.windows(2).map(|w| w[1] - w[0]).collect();
        ComplexityProfile { c, delta, delta2, horizon, truncated }
    }

    pub fn n_max(&self) -> usize {
        self.c.len() - 1
    }
}

/// Clamps `n_max` below `len`; returns (n_max, truncated).
pub(crate) fn clamp_n_max(n_max: usize, len: usize) -> (usize, bool) {
    if len == 0 {
        (0, n_max > 0)
    } else if n_max >= len {
        (len - 1, true)
    } else {
        (n_max, false)
    }
}

/// Factor complexity of `prefix` for `n <= n_max`. The horizon is the
/// largest `n` where the counts of `prefix` and of its first half agree.
pub fn factor_profile(prefix: &[Letter], n_max: usize) -> ComplexityProfile {
    let (n_max, truncated) = clamp_n_max(n_max, prefix.len());
    let full = SuffixAutomaton::build(prefix).counts_by_length(n_max);
    let half = SuffixAutomaton::build(&prefix[..prefix.len() / 2]).counts_by_length(n_max);
    let horizon = stable_prefix(&full, &half);
    ComplexityProfile::from_counts(full, horizon, truncated)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecialFactorReport {
    pub n: usize,
    pub left_specials: Vec<(Word, Vec<Letter>)>,
    pub right_specials: Vec<(Word, Vec<Letter>)>,
}

impl SpecialFactorReport {
    /// `Σ (#Lext(w) - 1)` over left special factors.
    pub fn left_excess(&self) -> u64 {
        self.left_specials.iter().map(|(_, e)| e.len() as u64 - 1).sum()
    }

    pub fn right_excess(&self) -> u64 {
        self.right_specials.iter().map(|(_, e)| e.len() as u64 - 1).sum()
    }
}

/// Left and right special factors of length `n` among the length-`n+1`
/// windows of `prefix`, in lexicographic order.
pub fn special_factors(prefix: &[Letter], n: usize) -> SpecialFactorReport {
    let mut left: BTreeMap<&[Letter], BTreeSet<Letter>> = BTreeMap::new();
    let mut right: BTreeMap<&[Letter], BTreeSet<Letter>> = BTreeMap::new();
    if prefix.len() > n {
        for win in prefix.windows(n + 1) {
            left.entry(&win[1..]).or_default().insert(win[0]);
            right.entry(&win[..n]).or_default().insert(win[n]);
        }
    }
    let specials = |map: BTreeMap<&[Letter], BTreeSet<Letter>>| {
        map.into_iter()
            .filter(|(_, ext)| ext.len() >= 2)
            .map(|(w, ext)| (Word::from(w), ext.into_iter().collect()))
            .collect()
    };
    SpecialFactorReport { n, left_specials: specials(left), right_specials: specials(right) }
}

/// `ΔC(n) = m` if `|V^(k)| < n <= |U^(k)|` for some `k`, else `m - 1`.
/// For `s = 1` the windows are empty and this is the Arnoux-Rauzy value.
pub fn closed_form_delta_c(p: &ConfluentParams, n: u64) -> u64 {
    closed_form_delta_c_with(&LadderLengths::up_to(p, n), n)
}

pub fn closed_form_delta_c_with(ladder: &LadderLengths, n: u64) -> u64 {
    let m = ladder.params.m as u64;
    if ladder.window_of(n).is_some() {
        m
    } else {
        m - 1
    }
}

/// `Δ²C(n)`: `+1` at `|V^(k)|`, `-1` at `|U^(k)|`, `0` elsewhere.
pub fn closed_form_delta2_c_with(ladder: &LadderLengths, n: u64) -> i64 {
    closed_form_delta_c_with(ladder, n + 1) as i64 - closed_form_delta_c_with(ladder, n) as i64
}
