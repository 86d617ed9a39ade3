//! Online palindromic tree (eertree).
//!
//! Node 0 is the imaginary root of length -1, node 1 the empty palindrome.
//! Each appended letter creates at most one node: the new longest
//! palindromic suffix, if it has not occurred before.

use crate::word::{Letter, Word};

const NONE: u32 = 0;
const IMAGINARY: u32 = 0;
const EMPTY: u32 = 1;

#[derive(Clone, Debug)]
pub struct Eertree {
    stride: usize,
    text: Vec<Letter>,
    len: Vec<i32>,
    link: Vec<u32>,
    /// `next[v * stride + a]` is the node `a·v·a`, or `NONE`.
    next: Vec<u32>,
    /// End position (exclusive) of the first occurrence of each node.
    first_end: Vec<usize>,
    /// `created[k]`: the prefix of length `k+1` has a new palindrome.
    created: Vec<bool>,
    last: u32,
}

impl Eertree {
    pub fn new(alphabet_size: usize) -> Self {
        let stride = alphabet_size.max(1);
        Eertree {
            stride,
            text: Vec::new(),
            len: vec![-1, 0],
            link: vec![IMAGINARY, IMAGINARY],
            next: vec![NONE; 2 * stride],
            first_end: vec![0, 0],
            created: Vec::new(),
            last: EMPTY,
        }
    }

    pub fn build(w: &[Letter]) -> Self {
        let k = w.iter().map(|&a| a as usize + 1).max().unwrap_or(1);
        let mut tree = Self::new(k);
        tree.text.reserve(w.len());
        tree.created.reserve(w.len());
        for &a in w {
            tree.push(a);
        }
        tree
    }

    pub fn alphabet_size(&self) -> usize {
        self.stride
    }

    pub fn text(&self) -> &[Letter] {
        &self.text
    }

    fn child(&self, v: u32, a: Letter) -> u32 {
        self.next[v as usize * self.stride + a as usize]
    }

    /// Walks suffix links from `v` until `a·x·a` is a suffix of the text.
    fn fit(&self, mut v: u32, a: Letter) -> u32 {
        let i = self.text.len() - 1;
        loop {
            let l = self.len[v as usize];
            let j = i as isize - 1 - l as isize;
            if j >= 0 && self.text[j as usize] == a {
                return v;
            }
            v = self.link[v as usize];
        }
    }

    /// Appends a letter; returns `true` if a new palindrome appeared.
    pub fn push(&mut self, a: Letter) -> bool {
        assert!((a as usize) < self.stride, "letter outside eertree alphabet");
        self.text.push(a);
        let v = self.fit(self.last, a);
        let existing = self.child(v, a);
        if existing != NONE {
            self.last = existing;
            self.created.push(false);
            return false;
        }
        let node = self.len.len() as u32;
        let node_len = self.len[v as usize] + 2;
        let link = if node_len == 1 {
            EMPTY
        } else {
            let w = self.fit(self.link[v as usize], a);
            self.child(w, a)
        };
        self.len.push(node_len);
        self.link.push(link);
        self.next.extend(std::iter::repeat(NONE).take(self.stride));
        self.first_end.push(self.text.len());
        self.next[v as usize * self.stride + a as usize] = node;
        self.last = node;
        self.created.push(true);
        true
    }

    /// Number of nodes including the two roots.
    pub fn node_count(&self) -> usize {
        self.len.len()
    }

    /// Distinct non-empty palindromic factors.
    pub fn distinct_count(&self) -> usize {
        self.len.len() - 2
    }

    /// Per-prefix flags: entry `k` is set when the prefix of length `k+1`
    /// contains a palindrome absent from the prefix of length `k`.
    pub fn new_palindrome_flags(&self) -> &[bool] {
        &self.created
    }

    /// Palindromes (with ε) in each prefix: entry `k` counts the prefix of
    /// length `k`, for `k = 0..=|w|`.
    pub fn prefix_palindrome_counts(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.created.len() + 1);
        let mut acc = 1;
        out.push(acc);
        for &c in &self.created {
            acc += c as usize;
            out.push(acc);
        }
        out
    }

    /// Node ids of the non-empty palindromes.
    pub fn nodes(&self) -> impl Iterator<Item = u32> + '_ {
        2..self.len.len() as u32
    }

    pub fn node_len(&self, v: u32) -> usize {
        self.len[v as usize].max(0) as usize
    }

    pub fn suffix_link(&self, v: u32) -> u32 {
        self.link[v as usize]
    }

    /// The palindrome of node `v` as a slice of its first occurrence.
    pub fn node_word(&self, v: u32) -> &[Letter] {
        let end = self.first_end[v as usize];
        &self.text[end - self.node_len(v)..end]
    }

    /// Letters `a` such that `a·p·a` occurs, where `p` is node `v`.
    pub fn extensions(&self, v: u32) -> Vec<Letter> {
        (0..self.stride)
            .filter(|&a| self.child(v, a as Letter) != NONE)
            .map(|a| a as Letter)
            .collect()
    }

    /// Node of the palindrome `p` (`Some(1)` for ε), or `None` if `p` is not
    /// a palindromic factor of the text.
    pub fn find(&self, p: &[Letter]) -> Option<u32> {
        let n = p.len();
        if p.iter().any(|&a| a as usize >= self.stride) {
            return None;
        }
        let (mut v, start) = if n % 2 == 1 {
            let c = self.child(IMAGINARY, p[n / 2]);
            if c == NONE {
                return None;
            }
            (c, n / 2 + 1)
        } else {
            (EMPTY, n / 2)
        };
        for i in start..n {
            if p[n - 1 - i] != p[i] {
                return None;
            }
            v = self.child(v, p[i]);
            if v == NONE {
                return None;
            }
        }
        Some(v)
    }

    /// `P(0..=n_max)`: distinct palindromic factors by length.
    pub fn counts_by_length(&self, n_max: usize) -> Vec<u64> {
        let mut out = vec![0u64; n_max + 1];
        out[0] = 1;
        for v in self.nodes() {
            let l = self.node_len(v);
            if l <= n_max {
                out[l] += 1;
            }
        }
        out
    }

    /// Longest palindromic suffix of the whole text and whether it occurs
    /// exactly once (it is new at the last position). `None` for ε text.
    pub fn longest_palindromic_suffix(&self) -> Option<(Word, bool)> {
        let unique = *self.created.last()?;
        Some((Word::from(self.node_word(self.last)), unique))
    }

    pub fn longest_suffix_node(&self) -> u32 {
        self.last
    }
}
