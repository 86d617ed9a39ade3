//! The confluent linear numeration system `(G_n)` and the lengths of the
//! `U`/`V` palindrome ladders derived from it.
//!
//! Everything here is generic over the integer type: `BigUint` for exact
//! values at any index, `u64`/`u128` with overflow reported as an error.

use std::ops::Sub;

use num_traits::{CheckedAdd, CheckedMul, FromPrimitive, One, Zero};

use crate::error::{Error, Result};
use crate::parry::ConfluentParams;

/// Integer types usable as numeration-basis values.
pub trait BasisInt:
    Clone + Ord + Zero + One + CheckedAdd + CheckedMul + FromPrimitive + Sub<Output = Self>
{
}

impl<T> BasisInt for T where
    T: Clone + Ord + Zero + One + CheckedAdd + CheckedMul + FromPrimitive + Sub<Output = T>
{
}

/// `G_0, G_1, .., G_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NumerationBasis<T> {
    values: Vec<T>,
}

impl<T: BasisInt> NumerationBasis<T> {
    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn into_values(self) -> Vec<T> {
        self.values
    }
}

fn lift<T: FromPrimitive>(x: u32) -> T {
    T::from_u32(x).expect("u32 fits every basis integer type")
}

/// `G_0 = 1`; `G_n = t(G_{n-1} + ⋯ + G_0) + 1` for `1 <= n <= m-1`;
/// `G_n = t(G_{n-1} + ⋯ + G_{n-m+1}) + s G_{n-m}` for `n >= m`.
pub fn numeration_basis<T: BasisInt>(p: &ConfluentParams, k: usize) -> Result<NumerationBasis<T>> {
    let t: T = lift(p.t);
    let s: T = lift(p.s);
    let m = p.m;
    let mut values: Vec<T> = Vec::with_capacity(k + 1);
    values.push(T::one());
    // running sum of the last (m-1) values, or of all values while n < m
    let mut window = T::one();
    for n in 1..=k {
        let g = if n < m {
            t.checked_mul(&window)
                .and_then(|x| x.checked_add(&T::one()))
                .ok_or(Error::Overflow(n))?
        } else {
            let oldest = &values[n - m];
            // window holds G_{n-1} + ⋯ + G_{n-m+1}
            t.checked_mul(&window)
                .and_then(|x| s.checked_mul(oldest).and_then(|y| x.checked_add(&y)))
                .ok_or(Error::Overflow(n))?
        };
        window = window.checked_add(&g).ok_or(Error::Overflow(n))?;
        if n + 1 >= m {
            // drop G_{n+1-m} so the window is G_n + ⋯ + G_{n-m+2}
            window = window - values[n + 1 - m].clone();
        }
        values.push(g);
    }
    Ok(NumerationBasis { values })
}

/// `(|V^(k)|, |U^(k)|)` with `|V^(k)| = t Σ_{i<k} G_i` and
/// `|U^(k)| = |V^(k)| + (s-1) G_{k-1}`.
pub fn uv_lengths<T: BasisInt>(p: &ConfluentParams, k: usize) -> Result<(T, T)> {
    assert!(k >= 1, "ladder index starts at 1");
    let basis = numeration_basis::<T>(p, k - 1)?;
    let mut sum = T::zero();
    for g in basis.values() {
        sum = sum.checked_add(g).ok_or(Error::Overflow(k))?;
    }
    let v = lift::<T>(p.t).checked_mul(&sum).ok_or(Error::Overflow(k))?;
    let extra = lift::<T>(p.s - 1)
        .checked_mul(&basis.values()[k - 1])
        .ok_or(Error::Overflow(k))?;
    let u = v.checked_add(&extra).ok_or(Error::Overflow(k))?;
    Ok((v, u))
}

/// Ladder lengths `(|V^(k)|, |U^(k)|)` for `k = 1, 2, ..` up to the first
/// `k` with `|V^(k)| > bound`, which is included so callers can test
/// window membership up to `bound`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LadderLengths {
    pub params: ConfluentParams,
    /// `lengths[k-1] = (|V^(k)|, |U^(k)|)`.
    pub lengths: Vec<(u64, u64)>,
}

impl LadderLengths {
    pub fn up_to(p: &ConfluentParams, bound: u64) -> Self {
        let mut lengths = Vec::new();
        for k in 1.. {
            match uv_lengths::<u64>(p, k) {
                Ok((v, u)) => {
                    lengths.push((v, u));
                    if v > bound {
                        break;
                    }
                }
                Err(_) => break,
            }
        }
        LadderLengths { params: *p, lengths }
    }

    /// `Some(k)` if `|V^(k)| < n <= |U^(k)|`.
    pub fn window_of(&self, n: u64) -> Option<usize> {
        self.lengths
            .iter()
            .position(|&(v, u)| v < n && n <= u)
            .map(|i| i + 1)
    }

    pub fn v(&self, k: usize) -> u64 {
        self.lengths[k - 1].0
    }

    pub fn u(&self, k: usize) -> u64 {
        self.lengths[k - 1].1
    }

    /// `|V^(k)|`, extending past the stored range with `u64::MAX`.
    pub fn v_or_max(&self, k: usize) -> u64 {
        self.lengths.get(k - 1).map_or(u64::MAX, |x| x.0)
    }

    pub fn u_or_max(&self, k: usize) -> u64 {
        self.lengths.get(k - 1).map_or(u64::MAX, |x| x.1)
    }

    pub fn is_v_length(&self, n: u64) -> bool {
        self.lengths.iter().any(|&(v, _)| v == n)
    }

    pub fn is_u_length(&self, n: u64) -> bool {
        self.lengths.iter().any(|&(_, u)| u == n)
    }
}
