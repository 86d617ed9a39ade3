//! Brute-force oracles shared by the integration tests. Nothing here uses
//! the library's data structures.

#![allow(dead_code)]

use std::collections::HashSet;

/// `φ(i) = 0^{t_{i+1}}(i+1)`, last letter `0^{t_m}`.
pub fn phi_images(digits: &[u32]) -> Vec<Vec<u8>> {
    let m = digits.len();
    (0..m)
        .map(|i| {
            let mut img = vec![0u8; digits[i] as usize];
            if i + 1 < m {
                img.push(i as u8 + 1);
            }
            img
        })
        .collect()
}

pub fn apply(images: &[Vec<u8>], w: &[u8]) -> Vec<u8> {
    w.iter().flat_map(|&a| images[a as usize].iter().copied()).collect()
}

/// Prefix of the fixed point by iterating from `0` until long enough.
pub fn fixed_point(digits: &[u32], n: usize) -> Vec<u8> {
    let images = phi_images(digits);
    let mut w = vec![0u8];
    while w.len() < n {
        w = apply(&images, &w);
    }
    w.truncate(n);
    w
}

/// `X^(k)` from `X^(1)` by `X ↦ φ(X)0^t`, for `k = 1..` while `|X| <= max_len`.
pub fn ladder(digits: &[u32], first: Vec<u8>, max_len: usize) -> Vec<Vec<u8>> {
    let images = phi_images(digits);
    let t = digits[0] as usize;
    let mut out = Vec::new();
    let mut x = first;
    while x.len() <= max_len {
        let mut next = apply(&images, &x);
        next.extend(std::iter::repeat(0).take(t));
        out.push(x);
        x = next;
    }
    out
}

pub fn is_pal(w: &[u8]) -> bool {
    w.iter().eq(w.iter().rev())
}

/// Distinct non-empty palindromic factors, by expanding around each of
/// the `2n - 1` centers.
pub fn naive_palindromes(w: &[u8]) -> HashSet<&[u8]> {
    let mut out = HashSet::new();
    let n = w.len() as isize;
    for c in 0..(2 * n - 1).max(0) {
        let (mut l, mut r) = (c / 2, (c + 1) / 2);
        while l >= 0 && r < n && w[l as usize] == w[r as usize] {
            out.insert(&w[l as usize..=r as usize]);
            l -= 1;
            r += 1;
        }
    }
    out
}

/// Distinct factors of length `n`.
pub fn factors(w: &[u8], n: usize) -> HashSet<&[u8]> {
    if n > w.len() {
        return HashSet::new();
    }
    if n == 0 {
        return HashSet::from([&w[..0]]);
    }
    w.windows(n).collect()
}

/// Root of `x^m - Σ t_i x^{m-i}` in `(1, 1 + t_1]` by plain bisection.
pub fn bisect_root(digits: &[u32]) -> f64 {
    let f = |x: f64| {
        let mut acc = 1.0;
        for &d in digits {
            acc = acc * x - d as f64;
        }
        acc
    };
    let (mut lo, mut hi) = (1.0f64, 1.0 + digits[0] as f64);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if f(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}
