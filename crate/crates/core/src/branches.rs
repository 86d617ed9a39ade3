//! Infinite palindromic branches, the `ψ` substitution fixing the
//! ε-centered branch, and the Sturmian (mechanical word) description of
//! `u_β` for `d_β(1) = t1`.

use crate::error::{Error, Result};
use crate::palindromes::{lift, Center, DEFAULT_LENGTH_CAP};
use crate::parry::ConfluentParams;
use crate::word::{is_palindrome, Letter, Morphism, Word};

/// The palindrome ladder whose two-sided limit gives a branch.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Ladder {
    /// `V^(1) = 0^t`, `V^(k+1) = φ(V^(k))0^t`.
    V,
    /// `W^(1) = 0`, `W^(k+1) = φ(W^(k))0^t`.
    W,
}

/// The branch is the limit of `ladder^(first + period·n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BranchGenerator {
    pub ladder: Ladder,
    pub first: usize,
    pub period: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchSpec {
    pub center: Center,
    pub exists: bool,
    pub generator: Option<BranchGenerator>,
    /// Why the branch is absent, when it is.
    pub reason: Option<&'static str>,
}

/// Existence of the branch with the given center and the ladder feeding it.
pub fn branch_spec(p: &ConfluentParams, center: Center) -> BranchSpec {
    let m = p.m;
    let (t_odd, s_odd) = (p.t % 2 == 1, p.s % 2 == 1);
    let gen = |ladder, first, period| BranchGenerator { ladder, first, period };
    let found = match center {
        Center::Empty => match (t_odd, s_odd) {
            (false, _) => Ok(gen(Ladder::V, 1, 1)),
            (true, true) => Ok(gen(Ladder::V, m + 1, m + 1)),
            (true, false) => Err("t odd and s even: every even palindrome is a central factor of 0^(t+s-1)"),
        },
        Center::Letter(a) => {
            let a = a as usize;
            match (t_odd, s_odd) {
                _ if a >= m => Err("letter outside the alphabet"),
                (true, true) => Ok(gen(Ladder::V, a + 1, m + 1)),
                (false, true) => Ok(gen(Ladder::W, a + 1, m)),
                (true, false) => Ok(gen(Ladder::V, a + 1, m)),
                (false, false) => Err("t and s even: every odd palindrome is a central factor of some U^(k), k <= m"),
            }
        }
    };
    match found {
        Ok(g) => BranchSpec { center, exists: true, generator: Some(g), reason: None },
        Err(r) => BranchSpec { center, exists: false, generator: None, reason: Some(r) },
    }
}

/// A palindromic central factor of the branch with the given center, of
/// length at least `min_len` (rounded up to the parity of the center).
pub fn branch_central_factor(p: &ConfluentParams, center: Center, min_len: usize) -> Result<Word> {
    branch_central_factor_capped(p, center, min_len, DEFAULT_LENGTH_CAP)
}

pub fn branch_central_factor_capped(
    p: &ConfluentParams,
    center: Center,
    min_len: usize,
    cap: usize,
) -> Result<Word> {
    let spec = branch_spec(p, center);
    let g = spec.generator.ok_or_else(|| Error::BranchAbsent {
        center: center.to_string(),
        reason: spec.reason.unwrap_or(""),
    })?;
    let odd = matches!(center, Center::Letter(_));
    let len = if (min_len % 2 == 1) == odd { min_len } else { min_len + 1 };
    if len > cap {
        return Err(Error::LengthCap { requested: len as u128, cap });
    }
    let mut x = match g.ladder {
        Ladder::V => Word::zeros(p.t as usize),
        Ladder::W => Word::zeros(1),
    };
    let mut k = 1;
    loop {
        if k >= g.first && (k - g.first) % g.period == 0 && x.len() >= len {
            let out = x.central(len).expect("ladder word is long enough");
            return Ok(Word::from(out));
        }
        if x.len() > cap {
            return Err(Error::LengthCap { requested: x.len() as u128, cap });
        }
        x = lift(p, &x)?;
        k += 1;
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PsiResult {
    pub psi: Morphism,
    pub conjugator: Word,
    pub images_palindromic: bool,
}

/// `ψ(a) = w⁻¹φ(a)w` with `w = 0^{t/2}` for `t` even, and
/// `ψ(a) = w⁻¹φ^{m+1}(a)w` with `w = φ^m(0^{(t+1)/2})0^{(t-s)/2}` for
/// `t`, `s` odd.
pub fn psi_substitution(p: &ConfluentParams) -> Result<PsiResult> {
    let phi = p.substitution();
    let (t, s) = (p.t as usize, p.s as usize);
    let (base, w) = if t % 2 == 0 {
        (phi, Word::zeros(t / 2))
    } else if s % 2 == 1 {
        let w = phi.iterate(&Word::zeros((t + 1) / 2), p.m as u32)?.concat(&Word::zeros((t - s) / 2));
        (phi.power(p.m as u32 + 1), w)
    } else {
        return Err(Error::NoEpsilonBranch);
    };
    let images = (0..p.m)
        .map(|a| {
            let a = a as Letter;
            base.image(a)
                .clone()
                .concat(&w)
                .strip_prefix(&w)
                .ok_or(Error::ConjugatorNotPrefix(a))
        })
        .collect::<Result<Vec<_>>>()?;
    let images_palindromic = images.iter().all(|x| x.is_palindrome());
    Ok(PsiResult { psi: Morphism::new(images)?, conjugator: w, images_palindromic })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PsiReport {
    pub psi: PsiResult,
    /// Letters of `ṽ` compared.
    pub checked: usize,
    /// First position where `ψ̃(ṽ)` and `ṽ` differ.
    pub mismatch: Option<usize>,
}

impl PsiReport {
    pub fn passed(&self) -> bool {
        self.mismatch.is_none()
    }
}

/// Checks on `depth` letters that `ṽ`, the right half of the ε-centered
/// branch, is fixed by `a ↦ reverse(ψ(a))`.
pub fn verify_psi(p: &ConfluentParams, depth: usize) -> Result<PsiReport> {
    let psi = psi_substitution(p)?;
    let factor = branch_central_factor(p, Center::Empty, 2 * depth)?;
    let v_tilde = &factor[factor.len() / 2..];
    let reversed = Morphism::new(psi.psi.images().iter().map(|x| x.reversed()).collect())?;
    let image = reversed.apply(&v_tilde[..depth])?;
    let mismatch = (0..depth).find(|&i| image[i] != v_tilde[i]);
    Ok(PsiReport { psi, checked: depth, mismatch })
}

/// `⌊k(√(t²+4) + t - 2) / (2t)⌋ = ⌊k·β/(β+1)⌋` for `β² = tβ + 1`, exact
/// because `t² + 4` is never a perfect square.
fn floor_k_alpha(k: u64, t: u64) -> i128 {
    let d = (t * t + 4) as u128;
    let k = k as u128;
    let root = (k * k * d).isqrt() as i128;
    (k as i128 * (t as i128 - 2) + root).div_euclid(2 * t as i128)
}

/// The first `n_len` letters of `1 - μ`, where
/// `μ(n) = ⌊(n+1)α + ρ⌋ - ⌊nα + ρ⌋` and `α = ρ = β/(β+1)`.
pub fn mechanical_word(p: &ConfluentParams, n_len: usize) -> Result<Word> {
    if p.m != 2 || p.s != 1 {
        return Err(Error::Unsupported("m = 2 and s = 1"));
    }
    let t = p.t as u64;
    let mut prev = floor_k_alpha(1, t);
    let mut out = Word::with_capacity(n_len);
    for n in 0..n_len as u64 {
        let next = floor_k_alpha(n + 2, t);
        out.push(1 - (next - prev) as Letter);
        prev = next;
    }
    Ok(out)
}

/// Checks that every central factor of `outer` is a palindrome and that
/// `inner` is its central factor of the same length.
pub fn is_nested_central(inner: &[Letter], outer: &[Letter]) -> bool {
    is_palindrome(outer)
        && inner.len() <= outer.len()
        && (outer.len() - inner.len()) % 2 == 0
        && Word::from(outer).central(inner.len()) == Some(inner)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn params(t: u32, s: u32, m: usize) -> ConfluentParams {
        ConfluentParams::new(t, s, m).unwrap()
    }

    fn images(r: &PsiResult) -> Vec<String> {
        r.psi.images().iter().map(|x| x.to_string()).collect()
    }

    #[test]
    fn psi_fibonacci() {
        let r = psi_substitution(&params(1, 1, 2)).unwrap();
        assert_eq!(images(&r), ["01010", "010"]);
        assert_eq!(r.conjugator, w("010"));
    }

    #[test]
    fn psi_tribonacci() {
        let r = psi_substitution(&params(1, 1, 3)).unwrap();
        assert_eq!(r.conjugator, w("0102010"));
        assert_eq!(images(&r), ["0102010102010", "01020102010", "0102010"]);
        assert!(r.images_palindromic);
    }

    #[test]
    fn psi_even_t() {
        let r = psi_substitution(&params(2, 2, 2)).unwrap();
        assert_eq!(r.conjugator, w("0"));
        // 0⁻¹·00·0 = 00
        assert_eq!(images(&r), ["010", "00"]);
        assert!(r.images_palindromic);
        assert_eq!(psi_substitution(&params(3, 2, 2)), Err(Error::NoEpsilonBranch));
    }

    #[test]
    fn psi_fixes_branch() {
        for p in [params(1, 1, 2), params(1, 1, 3), params(2, 2, 2), params(3, 1, 3), params(4, 3, 2)] {
            let r = verify_psi(&p, 10_000).unwrap();
            assert!(r.passed(), "{} at {:?}", p, r.mismatch);
        }
    }

    #[test]
    fn branch_table() {
        let p = params(2, 1, 2);
        let f = branch_central_factor(&p, Center::Empty, 10).unwrap();
        assert!(f.len() >= 10 && f.len() % 2 == 0 && f.is_palindrome());
        assert!(matches!(
            branch_central_factor(&params(2, 2, 2), Center::Letter(0), 5),
            Err(Error::BranchAbsent { .. })
        ));
        assert!(matches!(
            branch_central_factor(&params(3, 2, 2), Center::Empty, 4),
            Err(Error::BranchAbsent { .. })
        ));
        assert!(matches!(
            branch_central_factor(&params(1, 1, 2), Center::Empty, 20_000_000),
            Err(Error::LengthCap { .. })
        ));
    }

    #[test]
    fn branch_factors_are_nested_with_right_center() {
        for p in ConfluentParams::sweep(2..=3, 3) {
            for c in std::iter::once(Center::Empty).chain((0..p.m as Letter).map(Center::Letter)) {
                if !branch_spec(&p, c).exists {
                    continue;
                }
                let mut prev = Word::new();
                for len in [5, 40, 300, 2000] {
                    let f = branch_central_factor(&p, c, len).unwrap();
                    assert!(f.len() >= len);
                    assert_eq!(crate::palindromes::center_of(&f), Ok(c), "{} {}", p, c);
                    assert!(prev.is_empty() || is_nested_central(&prev, &f), "{} {} len {}", p, c, len);
                    prev = f;
                }
            }
        }
    }

    #[test]
    fn mechanical_word_examples() {
        let fib = params(1, 1, 2);
        assert_eq!(mechanical_word(&fib, 9).unwrap(), w("010010100"));
        assert_eq!(mechanical_word(&fib, 1).unwrap(), w("0"));
        let p = params(2, 1, 2);
        let u = p.substitution().fixed_point_prefix(0, 10_000).unwrap();
        assert_eq!(mechanical_word(&p, 10_000).unwrap(), u);
        assert!(mechanical_word(&params(2, 2, 2), 4).is_err());
    }

    #[test]
    fn floor_matches_float_for_small_k() {
        for t in 1..=4u64 {
            let tf = t as f64;
            let beta = (tf + (tf * tf + 4.0).sqrt()) / 2.0;
            let alpha = beta / (beta + 1.0);
            for k in 0..1000u64 {
                assert_eq!(floor_k_alpha(k, t), (k as f64 * alpha).floor() as i128, "t={} k={}", t, k);
            }
        }
    }
}
