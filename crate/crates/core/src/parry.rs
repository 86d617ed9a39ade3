//! Rényi expansions of 1, the Parry condition, classification of simple
//! Parry numbers, and their canonical substitutions.

use std::cmp::Ordering;
use std::fmt;

use num_traits::Float;

use crate::error::{Error, Result};
use crate::word::{Letter, Morphism, Word};

/// A validated finite Rényi expansion `d_β(1) = t_1 ⋯ t_m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RenyiDigits {
    digits: Vec<u32>,
}

impl RenyiDigits {
    pub fn new(digits: Vec<u32>) -> Result<Self> {
        check_parry(&digits)
    }

    pub fn digits(&self) -> &[u32] {
        &self.digits
    }

    /// `m`, the number of digits (alphabet size of the substitution).
    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

impl fmt::Display for RenyiDigits {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.digits.iter().map(|d| d.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Compares `a·0^ω` with `b·0^ω` lexicographically.
fn cmp_zero_padded(a: &[u32], b: &[u32]) -> Ordering {
    let n = a.len().max(b.len());
    for i in 0..n {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        match x.cmp(&y) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    Ordering::Equal
}

/// Validates a digit string as the Rényi expansion of 1 of a simple Parry
/// number: last digit non-zero, and every proper suffix (zero padded) is
/// strictly smaller than the whole string. Violations report the 1-based
/// index `i` of the offending suffix `t_i t_{i+1} ⋯`.
pub fn check_parry(digits: &[u32]) -> Result<RenyiDigits> {
    let Some(&last) = digits.last() else {
        return Err(Error::EmptyDigits);
    };
    if last == 0 {
        return Err(Error::TrailingZero);
    }
    if digits == [1] {
        return Err(Error::UnitBase);
    }
    for i in 1..digits.len() {
        if cmp_zero_padded(&digits[i..], digits) != Ordering::Less {
            return Err(Error::ParryViolation { index: i + 1 });
        }
    }
    Ok(RenyiDigits { digits: digits.to_vec() })
}

/// Parameters of a confluent expansion `t t ⋯ t s` of length `m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ConfluentParams {
    pub t: u32,
    pub s: u32,
    pub m: usize,
}

impl ConfluentParams {
    pub fn new(t: u32, s: u32, m: usize) -> Result<Self> {
        if s == 0 || t < s || m < 2 || m > 256 {
            return Err(Error::BadParams { t, s, m });
        }
        Ok(ConfluentParams { t, s, m })
    }

    pub fn digits(&self) -> RenyiDigits {
        let mut d = vec![self.t; self.m - 1];
        d.push(self.s);
        RenyiDigits { digits: d }
    }

    pub fn substitution(&self) -> Morphism {
        canonical_substitution(&self.digits())
    }

    pub fn is_arnoux_rauzy(&self) -> bool {
        self.s == 1
    }

    /// All confluent parameter sets with `m` in `ms`, `1 <= s <= t <= t_max`.
    pub fn sweep(ms: impl IntoIterator<Item = usize>, t_max: u32) -> Vec<ConfluentParams> {
        let mut out = Vec::new();
        for m in ms {
            for t in 1..=t_max {
                for s in 1..=t {
                    out.push(ConfluentParams { t, s, m });
                }
            }
        }
        out
    }
}

impl fmt::Display for ConfluentParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(t={}, s={}, m={})", self.t, self.s, self.m)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Classification {
    /// Confluent with `s = 1`.
    ArnouxRauzy(ConfluentParams),
    /// Confluent with `s >= 2`.
    ConfluentNonUnit(ConfluentParams),
    NonConfluent,
}

impl Classification {
    pub fn params(&self) -> Option<ConfluentParams> {
        match *self {
            Classification::ArnouxRauzy(p) | Classification::ConfluentNonUnit(p) => Some(p),
            Classification::NonConfluent => None,
        }
    }

    pub fn tag(&self) -> &'static str {
        match self {
            Classification::ArnouxRauzy(_) => "ArnouxRauzy",
            Classification::ConfluentNonUnit(_) => "ConfluentNonUnit",
            Classification::NonConfluent => "NonConfluent",
        }
    }
}

/// Confluent iff `t_1 = ⋯ = t_{m-1}`; Arnoux-Rauzy iff moreover `t_m = 1`.
pub fn classify(d: &RenyiDigits) -> Result<Classification> {
    let digits = d.digits();
    let m = digits.len();
    if m < 2 {
        return Err(Error::IntegerBase);
    }
    let t = digits[0];
    if digits[..m - 1].iter().any(|&x| x != t) {
        return Ok(Classification::NonConfluent);
    }
    let params = ConfluentParams::new(t, digits[m - 1], m)?;
    Ok(if params.s == 1 {
        Classification::ArnouxRauzy(params)
    } else {
        Classification::ConfluentNonUnit(params)
    })
}

/// `φ(i) = 0^{t_{i+1}} (i+1)` for `i < m-1` and `φ(m-1) = 0^{t_m}`.
pub fn canonical_substitution(d: &RenyiDigits) -> Morphism {
    let m = d.len();
    let images = d
        .digits()
        .iter()
        .enumerate()
        .map(|(i, &ti)| {
            let mut img = Word::zeros(ti as usize);
            if i + 1 < m {
                img.push((i + 1) as Letter);
            }
            img
        })
        .collect();
    Morphism::new(images).expect("valid Rényi digits give a valid morphism")
}

/// `x^m - t_1 x^{m-1} - ⋯ - t_m` by Horner, with its derivative.
fn parry_poly<T: Float>(d: &[u32], x: T) -> (T, T) {
    let mut p = T::one();
    let mut dp = T::zero();
    for &ti in d {
        dp = dp * x + p;
        p = p * x - T::from(ti).expect("digit fits in float");
    }
    (p, dp)
}

/// The root `β > 1` of `x^m = t_1 x^{m-1} + ⋯ + t_m`. Bisection on
/// `(1, 1 + t_1]` down to `tol`, then Newton steps to polish.
pub fn dominant_root<T: Float>(d: &RenyiDigits, tol: T) -> T {
    let digits = d.digits();
    let mut lo = T::one();
    let mut hi = T::one() + T::from(digits[0]).expect("digit fits in float");
    // f(lo) < 0 < f(hi) except for the integer base, where hi is the root
    let two = T::one() + T::one();
    while hi - lo > tol {
        let mid = (lo + hi) / two;
        if mid <= lo || mid >= hi {
            break;
        }
        if parry_poly(digits, mid).0 < T::zero() {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let mut x = (lo + hi) / two;
    for _ in 0..8 {
        let (p, dp) = parry_poly(digits, x);
        if dp == T::zero() {
            break;
        }
        let next = x - p / dp;
        if !(next > lo - tol && next < hi + tol) {
            break;
        }
        if next == x {
            break;
        }
        x = next;
    }
    x
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Termination {
    /// The orbit of 1 reached 0: the expansion is finite.
    Finite,
    /// `max_len` digits emitted without reaching 0.
    Undecided,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RenyiExpansion {
    pub digits: Vec<u32>,
    pub termination: Termination,
}

/// Guard band around integers inside which a digit is not trusted.
fn guard_band<T: Float>() -> T {
    let g = T::from(1e-9).expect("float");
    g.max(T::epsilon() * T::from(1e3).expect("float"))
}

/// Digits `t_i = ⌊β T_β^{i-1}(1)⌋` by iterating `T_β(x) = βx - ⌊βx⌋`.
///
/// Rounding error in `T_β^i(1)` grows like `β^i ε`. A value of `βx` within
/// `1000 β^i ε` of an integer is read as the orbit hitting 0 (finite
/// expansion); a value inside the wider 1e-9 guard band but outside that
/// is ambiguous and reported as a precision error.
pub fn renyi_digits<T: Float>(beta: T, max_len: usize) -> Result<RenyiExpansion> {
    if !beta.is_finite() || beta <= T::one() {
        return Err(Error::BadBeta);
    }
    let guard = guard_band::<T>();
    let eps_scale = T::epsilon() * T::from(1e3).expect("float");
    let mut hit_tol = eps_scale;
    let mut x = T::one();
    let mut digits = Vec::new();
    for i in 1..=max_len {
        let y = beta * x;
        hit_tol = hit_tol * beta;
        let near = y.round();
        let dist = (y - near).abs();
        if dist <= hit_tol.min(guard) {
            digits.push(near.to_u32().ok_or(Error::BadBeta)?);
            if check_parry(&digits).is_err() {
                return Err(Error::Precision { index: i });
            }
            return Ok(RenyiExpansion { digits, termination: Termination::Finite });
        }
        if dist < guard {
            return Err(Error::Precision { index: i });
        }
        let k = y.floor();
        digits.push(k.to_u32().ok_or(Error::BadBeta)?);
        x = y - k;
    }
    Ok(RenyiExpansion { digits, termination: Termination::Undecided })
}
