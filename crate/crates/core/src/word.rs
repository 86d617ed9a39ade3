//! Finite words over a small integer alphabet, morphisms, and streaming
//! fixed points of substitutions.

use std::fmt;
use std::ops::{Deref, DerefMut};
use std::str::FromStr;

use crate::error::{Error, Result};

/// A letter of the alphabet `{0, .., m-1}`.
pub type Letter = u8;

/// A finite word stored contiguously.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new() -> Self {
        Word(Vec::new())
    }

    pub fn with_capacity(cap: usize) -> Self {
        Word(Vec::with_capacity(cap))
    }

    /// `letter^k`.
    pub fn repeat(letter: Letter, k: usize) -> Self {
        Word(vec![letter; k])
    }

    pub fn zeros(k: usize) -> Self {
        Self::repeat(0, k)
    }

    pub fn into_vec(self) -> Vec<Letter> {
        self.0
    }

    pub fn as_slice(&self) -> &[Letter] {
        &self.0
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn is_palindrome(&self) -> bool {
        is_palindrome(&self.0)
    }

    /// Concatenation `self · other`.
    pub fn concat(mut self, other: &[Letter]) -> Word {
        self.0.extend_from_slice(other);
        self
    }

    /// Removes `prefix` from the front, i.e. `prefix^{-1} self`. `None` if
    /// `prefix` is not a prefix.
    pub fn strip_prefix(&self, prefix: &[Letter]) -> Option<Word> {
        self.0.strip_prefix(prefix).map(|rest| Word(rest.to_vec()))
    }

    /// The central factor of length `len` (same parity as `self.len()` required).
    pub fn central(&self, len: usize) -> Option<&[Letter]> {
        if len > self.len() || (self.len() - len) % 2 != 0 {
            return None;
        }
        let cut = (self.len() - len) / 2;
        Some(&self.0[cut..cut + len])
    }
}

/// `w == reverse(w)`.
pub fn is_palindrome(w: &[Letter]) -> bool {
    let n = w.len();
    (0..n / 2).all(|i| w[i] == w[n - 1 - i])
}

impl Deref for Word {
    type Target = Vec<Letter>;
    fn deref(&self) -> &Vec<Letter> {
        &self.0
    }
}

impl DerefMut for Word {
    fn deref_mut(&mut self) -> &mut Vec<Letter> {
        &mut self.0
    }
}

impl From<Vec<Letter>> for Word {
    fn from(v: Vec<Letter>) -> Self {
        Word(v)
    }
}

impl From<&[Letter]> for Word {
    fn from(v: &[Letter]) -> Self {
        Word(v.to_vec())
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl AsRef<[Letter]> for Word {
    fn as_ref(&self) -> &[Letter] {
        &self.0
    }
}

/// Parses a string of decimal digits, one letter per character (`"0102"`).
impl FromStr for Word {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| {
                c.to_digit(10)
                    .map(|d| d as Letter)
                    .ok_or(Error::LetterOutOfAlphabet { letter: Letter::MAX, alphabet_size: 10 })
            })
            .collect()
    }
}

/// Letters below 10 print as single digits; larger alphabets print as a
/// dot-separated list.
impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.iter().all(|&a| a < 10) {
            for &a in &self.0 {
                write!(f, "{}", a)?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.0.iter().map(|a| a.to_string()).collect();
            write!(f, "{}", parts.join("."))
        }
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({})", self)
    }
}

/// A non-erasing morphism on `{0, .., m-1}^*`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Morphism {
    images: Vec<Word>,
}

impl Morphism {
    pub fn new(images: Vec<Word>) -> Result<Self> {
        let m = images.len();
        if m == 0 || m > 256 {
            return Err(Error::BadAlphabetSize(m));
        }
        for (a, img) in images.iter().enumerate() {
            if img.is_empty() {
                return Err(Error::ErasingImage(a as Letter));
            }
            if let Some(&bad) = img.iter().find(|&&b| b as usize >= m) {
                return Err(Error::LetterOutOfAlphabet { letter: bad, alphabet_size: m });
            }
        }
        Ok(Morphism { images })
    }

    /// Builds from digit strings, e.g. `["01", "0"]`.
    pub fn from_strs(images: &[&str]) -> Result<Self> {
        Self::new(images.iter().map(|s| s.parse()).collect::<Result<_>>()?)
    }

    pub fn alphabet_size(&self) -> usize {
        self.images.len()
    }

    pub fn image(&self, a: Letter) -> &Word {
        &self.images[a as usize]
    }

    pub fn images(&self) -> &[Word] {
        &self.images
    }

    fn check_letters(&self, w: &[Letter]) -> Result<()> {
        match w.iter().find(|&&a| a as usize >= self.alphabet_size()) {
            Some(&letter) => Err(Error::LetterOutOfAlphabet {
                letter,
                alphabet_size: self.alphabet_size(),
            }),
            None => Ok(()),
        }
    }

    /// Image of a word: concatenation of the letter images in order.
    pub fn apply(&self, w: &[Letter]) -> Result<Word> {
        self.check_letters(w)?;
        let len = w.iter().map(|&a| self.images[a as usize].len()).sum();
        let mut out = Word::with_capacity(len);
        for &a in w {
            out.extend_from_slice(&self.images[a as usize]);
        }
        Ok(out)
    }

    /// Composition `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &Morphism) -> Result<Morphism> {
        let images = other
            .images
            .iter()
            .map(|img| self.apply(img))
            .collect::<Result<Vec<_>>>()?;
        Morphism::new(images)
    }

    /// `self^k`; `k = 0` gives the identity.
    pub fn power(&self, k: u32) -> Morphism {
        let mut acc = Morphism {
            images: (0..self.alphabet_size()).map(|a| Word::repeat(a as Letter, 1)).collect(),
        };
        for _ in 0..k {
            acc = self.compose(&acc).expect("same alphabet");
        }
        acc
    }

    /// Applies `self` `k` times to `w`.
    pub fn iterate(&self, w: &[Letter], k: u32) -> Result<Word> {
        let mut cur = Word::from(w);
        for _ in 0..k {
            cur = self.apply(&cur)?;
        }
        Ok(cur)
    }

    /// Streams the fixed point beginning with `seed`.
    pub fn fixed_point(&self, seed: Letter) -> Result<FixedPoint<'_>> {
        if seed as usize >= self.alphabet_size() {
            return Err(Error::LetterOutOfAlphabet { letter: seed, alphabet_size: self.alphabet_size() });
        }
        let img = self.image(seed);
        if img.len() < 2 || img[0] != seed {
            return Err(Error::NotASubstitution { seed });
        }
        Ok(FixedPoint {
            mor: self,
            seed,
            tail: &img[1..],
            started: false,
            level: 0,
            stack: Vec::new(),
        })
    }

    /// First `n` letters of the fixed point beginning with `seed`.
    pub fn fixed_point_prefix(&self, seed: Letter, n: usize) -> Result<Word> {
        let mut out = Word::with_capacity(n);
        out.extend(self.fixed_point(seed)?.take(n));
        Ok(out)
    }

    /// Primitivity of the incidence matrix: some power is entrywise positive.
    /// Boolean squaring until the exponent reaches `2 m^2`, which exceeds the
    /// Wielandt bound `(m-1)^2 + 1`.
    pub fn is_primitive(&self) -> bool {
        let m = self.alphabet_size();
        let mut mat = vec![vec![false; m]; m];
        for (a, img) in self.images.iter().enumerate() {
            for &b in img.iter() {
                mat[a][b as usize] = true;
            }
        }
        let target = 2 * m * m;
        let mut exponent = 1;
        while exponent < target {
            mat = bool_square(&mat);
            exponent *= 2;
        }
        mat.iter().all(|row| row.iter().all(|&x| x))
    }
}

fn bool_square(a: &[Vec<bool>]) -> Vec<Vec<bool>> {
    let m = a.len();
    let mut out = vec![vec![false; m]; m];
    for i in 0..m {
        for k in 0..m {
            if a[i][k] {
                for j in 0..m {
                    out[i][j] |= a[k][j];
                }
            }
        }
    }
    out
}

impl fmt::Debug for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .images
            .iter()
            .enumerate()
            .map(|(a, w)| format!("{}->{}", a, w))
            .collect();
        write!(f, "Morphism{{{}}}", parts.join(", "))
    }
}

/// Demand-driven generator of a substitution fixed point.
///
/// With `φ(seed) = seed·w` the fixed point is `seed · w · φ(w) · φ²(w) ⋯`.
/// Each block `φ^k(w)` is expanded depth-first with a stack of at most
/// `k + 1` frames, so memory is `O(depth)` beyond what the caller keeps.
pub struct FixedPoint<'a> {
    mor: &'a Morphism,
    seed: Letter,
    tail: &'a [Letter],
    started: bool,
    level: usize,
    stack: Vec<(&'a [Letter], usize)>,
}

impl<'a> Iterator for FixedPoint<'a> {
    type Item = Letter;

    fn next(&mut self) -> Option<Letter> {
        if !self.started {
            self.started = true;
            return Some(self.seed);
        }
        loop {
            if self.stack.is_empty() {
                self.stack.push((self.tail, 0));
                self.level += 1;
            }
            let depth = self.stack.len() - 1;
            let top = self.stack.last_mut().expect("non-empty");
            if top.1 == top.0.len() {
                self.stack.pop();
                continue;
            }
            let a = top.0[top.1];
            top.1 += 1;
            // Frame at stack index d expands φ^(level-1-d) of its letters.
            if depth + 1 == self.level {
                return Some(a);
            }
            self.stack.push((self.mor.image(a).as_slice(), 0));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn apply_examples() {
        let fib = Morphism::from_strs(&["01", "0"]).unwrap();
        assert_eq!(fib.apply(&w("01")).unwrap(), w("010"));
        assert_eq!(fib.apply(&[]).unwrap(), Word::new());
        let trib = Morphism::from_strs(&["01", "02", "0"]).unwrap();
        assert_eq!(trib.apply(&w("010")).unwrap(), w("010201"));
    }

    #[test]
    fn apply_rejects_foreign_letter() {
        let fib = Morphism::from_strs(&["01", "0"]).unwrap();
        assert_eq!(
            fib.apply(&[0, 2]),
            Err(Error::LetterOutOfAlphabet { letter: 2, alphabet_size: 2 })
        );
    }

    #[test]
    fn morphism_validation() {
        assert!(matches!(Morphism::from_strs(&["01", ""]), Err(Error::ErasingImage(1))));
        assert!(matches!(Morphism::from_strs(&["02", "0"]), Err(Error::LetterOutOfAlphabet { .. })));
        assert!(matches!(Morphism::new(vec![]), Err(Error::BadAlphabetSize(0))));
    }

    #[test]
    fn fixed_point_examples() {
        let fib = Morphism::from_strs(&["01", "0"]).unwrap();
        // direct iteration: φ^5(0) = 0100101001001
        let direct = fib.iterate(&[0], 5).unwrap();
        assert_eq!(direct, w("0100101001001"));
        assert_eq!(fib.fixed_point_prefix(0, 9).unwrap(), w("010010100"));
        assert_eq!(fib.fixed_point_prefix(0, 1).unwrap(), w("0"));
        let m22 = Morphism::from_strs(&["001", "00"]).unwrap();
        assert_eq!(m22.fixed_point_prefix(0, 8).unwrap(), w("00100100"));
        assert_eq!(m22.iterate(&[0], 2).unwrap(), w("00100100"));
    }

    #[test]
    fn fixed_point_requires_substitution() {
        let fib = Morphism::from_strs(&["01", "0"]).unwrap();
        assert!(matches!(fib.fixed_point(1), Err(Error::NotASubstitution { seed: 1 })));
        let id = Morphism::from_strs(&["0"]).unwrap();
        assert!(matches!(id.fixed_point(0), Err(Error::NotASubstitution { .. })));
    }

    #[test]
    fn fixed_point_matches_iteration_with_unit_images() {
        // φ(2) = 0 has length one; the stack must pass through it.
        let trib = Morphism::from_strs(&["01", "02", "0"]).unwrap();
        for k in 0..9 {
            let direct = trib.iterate(&[0], k).unwrap();
            assert_eq!(trib.fixed_point_prefix(0, direct.len()).unwrap(), direct);
        }
    }

    #[test]
    fn primitivity() {
        assert!(Morphism::from_strs(&["01", "0"]).unwrap().is_primitive());
        assert!(Morphism::from_strs(&["00"]).unwrap().is_primitive());
        assert!(!Morphism::from_strs(&["01", "1"]).unwrap().is_primitive());
        // irreducible but periodic
        assert!(!Morphism::from_strs(&["1", "0"]).unwrap().is_primitive());
    }

    #[test]
    fn palindromes() {
        assert!(w("010010").is_palindrome());
        assert!(Word::new().is_palindrome());
        assert!(!w("01").is_palindrome());
    }

    #[test]
    fn power_and_central() {
        let trib = Morphism::from_strs(&["01", "02", "0"]).unwrap();
        assert_eq!(trib.power(3).image(0), &w("0102010"));
        assert_eq!(trib.power(0).image(2), &w("2"));
        assert_eq!(w("0102010").central(3), Some(&[0, 2, 0][..]));
        assert_eq!(w("0110").central(1), None);
    }
}
