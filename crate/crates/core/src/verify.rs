//! The theorem suite: every closed-form statement about `u_β` checked
//! against the empirical profile of a prefix, with the first
//! counterexample on failure. Also the parallel sweep over parameter sets.

use std::fmt;
use std::time::{Duration, Instant};

use crate::branches::{branch_central_factor, branch_spec, mechanical_word, verify_psi};
use crate::complexity::{closed_form_delta2_c_with, closed_form_delta_c_with};
use crate::eertree::Eertree;
use crate::error::Result;
use crate::numeration::{uv_lengths, LadderLengths};
use crate::palindromes::{
    center_of, check_zero_blocks, classify_all_palindromes, closed_form_p_with, defect_series_of, lift,
    palindromic_extensions, predicted_v_center, transported_center, uv_ladder, uv_words, Center,
    DEFAULT_LENGTH_CAP,
};
use crate::parry::{classify, dominant_root, renyi_digits, Classification, ConfluentParams, RenyiDigits, Termination};
use crate::profile::{default_prefix_len, word_profile, WordProfile, DEFAULT_N_MAX};
use crate::word::{is_palindrome, Letter, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Check {
    ClosedFormP,
    PalindromeSumIdentity,
    DeltaCWindows,
    SecondDifference,
    ExtensionClassification,
    Fullness,
    ZeroBlocks,
    PalindromeLifting,
    CenterTransport,
    VCenters,
    LadderLengths,
    BranchTable,
    PsiInvariance,
    RenyiRoundTrip,
    MechanicalWord,
    EventuallyNoPalindromes,
}

impl Check {
    pub fn name(&self) -> &'static str {
        match self {
            Check::ClosedFormP => "closed_form_p",
            Check::PalindromeSumIdentity => "palindrome_sum_identity",
            Check::DeltaCWindows => "delta_c_windows",
            Check::SecondDifference => "second_difference",
            Check::ExtensionClassification => "extension_classification",
            Check::Fullness => "fullness",
            Check::ZeroBlocks => "zero_blocks",
            Check::PalindromeLifting => "palindrome_lifting",
            Check::CenterTransport => "center_transport",
            Check::VCenters => "v_centers",
            Check::LadderLengths => "ladder_lengths",
            Check::BranchTable => "branch_table",
            Check::PsiInvariance => "psi_invariance",
            Check::RenyiRoundTrip => "renyi_round_trip",
            Check::MechanicalWord => "mechanical_word",
            Check::EventuallyNoPalindromes => "eventually_no_palindromes",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub check: Check,
    pub passed: bool,
    /// Number of individual comparisons made.
    pub checked: u64,
    pub counterexample: Option<String>,
}

impl Verdict {
    fn from_scan(check: Check, checked: u64, counterexample: Option<String>) -> Self {
        Verdict { check, passed: counterexample.is_none(), checked, counterexample }
    }
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    /// Defaults to [`default_prefix_len`].
    pub prefix_len: Option<usize>,
    pub n_max: usize,
    /// Longest palindrome whose extensions are classified.
    pub classify_max_len: usize,
    pub psi_depth: usize,
    /// Ladder words are compared with their predicted lengths up to this.
    pub ladder_len_limit: usize,
    pub mechanical_len: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            prefix_len: None,
            n_max: DEFAULT_N_MAX,
            classify_max_len: 60,
            psi_depth: 10_000,
            ladder_len_limit: 1_000_000,
            mechanical_len: 10_000,
        }
    }
}

/// Closed-form `P`, `ΔC` and `Δ²C` over `0..=n_max`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedForms {
    pub p: Vec<u64>,
    pub delta_c: Vec<u64>,
    pub delta2_c: Vec<i64>,
}

impl ClosedForms {
    pub fn new(params: &ConfluentParams, n_max: usize) -> Self {
        let ladder = LadderLengths::up_to(params, n_max as u64 + 2);
        let range = 0..=n_max as u64;
        ClosedForms {
            p: range.clone().map(|n| closed_form_p_with(&ladder, n)).collect(),
            delta_c: range.clone().map(|n| closed_form_delta_c_with(&ladder, n)).collect(),
            delta2_c: range.map(|n| closed_form_delta2_c_with(&ladder, n)).collect(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Analysis {
    pub digits: RenyiDigits,
    pub classification: Classification,
    pub prefix: Word,
    pub profile: WordProfile,
    pub closed_forms: Option<ClosedForms>,
    pub verdicts: Vec<Verdict>,
    pub timings: Vec<(&'static str, Duration)>,
}

impl Analysis {
    pub fn all_passed(&self) -> bool {
        self.verdicts.iter().all(|v| v.passed)
    }

    pub fn horizon(&self) -> usize {
        self.profile.horizon
    }
}

/// Builds the prefix and its profile, then runs every check that applies
/// to the classification of `digits`.
pub fn analyze(digits: &RenyiDigits, opts: &VerifyOptions) -> Result<Analysis> {
    let classification = classify(digits)?;
    let mut timings = Vec::new();
    let mut clock = Instant::now();
    let mut lap = |name, timings: &mut Vec<(&'static str, Duration)>| {
        timings.push((name, clock.elapsed()));
        clock = Instant::now();
    };
    let len = opts.prefix_len.unwrap_or_else(|| default_prefix_len(&classification));
    let prefix = crate::parry::canonical_substitution(digits).fixed_point_prefix(0, len)?;
    lap("generate", &mut timings);
    let profile = word_profile(&prefix, opts.n_max);
    lap("profile", &mut timings);
    let mut verdicts = Vec::new();
    let closed_forms = match classification.params() {
        Some(p) => {
            let closed = ClosedForms::new(&p, profile.n_max());
            verdicts.extend(profile_checks(&profile, &closed));
            lap("profile_checks", &mut timings);
            verdicts.extend(structural_checks(&p, &prefix, &profile, opts)?);
            lap("structural_checks", &mut timings);
            verdicts.extend(branch_checks(&p, &profile, opts)?);
            lap("branch_checks", &mut timings);
            Some(closed)
        }
        None => {
            verdicts.push(check_eventually_no_palindromes(&profile));
            None
        }
    };
    verdicts.push(check_round_trip(digits));
    verdicts.sort_by_key(|v| v.check);
    Ok(Analysis { digits: digits.clone(), classification, prefix, profile, closed_forms, verdicts, timings })
}

/// Closed-form `P`, the `P(n) + P(n+1)` identity, `ΔC` windows and `Δ²C`,
/// each at every `n` inside the horizon.
pub fn profile_checks(prof: &WordProfile, closed: &ClosedForms) -> Vec<Verdict> {
    let h = prof.horizon.min(prof.n_max());
    let (c, pal) = (prof.c(), prof.p());
    let first = |range: std::ops::RangeInclusive<usize>, bad: &dyn Fn(usize) -> Option<String>| {
        let n = range.clone().count() as u64;
        (n, range.into_iter().find_map(bad))
    };

    let (n1, cx1) = first(0..=h, &|n| {
        (pal[n] != closed.p[n]).then(|| format!("n={}: P={} closed form {}", n, pal[n], closed.p[n]))
    });
    let (n2, cx2) = first(0..=h.saturating_sub(1), &|n| {
        if h == 0 {
            return None;
        }
        let lhs = pal[n + 1] + pal[n];
        let rhs = c[n + 1] - c[n] + 2;
        (lhs != rhs).then(|| format!("n={}: P(n+1)+P(n)={} but ΔC(n)+2={}", n, lhs, rhs))
    });
    let (n3, cx3) = first(0..=h.saturating_sub(1), &|n| {
        if h == 0 {
            return None;
        }
        let d = c[n + 1] - c[n];
        (d != closed.delta_c[n]).then(|| format!("n={}: ΔC={} closed form {}", n, d, closed.delta_c[n]))
    });
    let (n4, cx4) = first(0..=h.saturating_sub(2), &|n| {
        if h < 2 {
            return None;
        }
        let d2 = prof.complexity.delta2[n];
        (d2 != closed.delta2_c[n]).then(|| format!("n={}: Δ²C={} closed form {}", n, d2, closed.delta2_c[n]))
    });
    vec![
        Verdict::from_scan(Check::ClosedFormP, n1, cx1),
        Verdict::from_scan(Check::PalindromeSumIdentity, n2, cx2),
        Verdict::from_scan(Check::DeltaCWindows, n3, cx3),
        Verdict::from_scan(Check::SecondDifference, n4, cx4),
    ]
}

/// Palindromes of the tree with length `<= max_len`, sorted by length.
fn palindromes_up_to(tree: &Eertree, max_len: usize) -> Vec<&[Letter]> {
    let mut out: Vec<&[Letter]> = std::iter::once(&[][..])
        .chain(tree.nodes().map(|v| tree.node_word(v)))
        .filter(|w| w.len() <= max_len)
        .collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
    out
}

/// Extension classification, fullness, zero blocks, lifting, center
/// transport, centers of `V^(n)` and ladder lengths.
pub fn structural_checks(
    p: &ConfluentParams,
    prefix: &[Letter],
    prof: &WordProfile,
    opts: &VerifyOptions,
) -> Result<Vec<Verdict>> {
    let mut out = Vec::new();
    let tree = &prof.tree;
    let h = prof.horizon;

    if p.s >= 2 {
        let classes = classify_all_palindromes(tree, h, p, opts.classify_max_len)?;
        let bad = classes.iter().find(|c| !c.matches()).map(|c| {
            format!("{}: {:?} with extensions {:?}, expected {:?}", c.class.word, c.class.kind, c.class.extensions, c.expected)
        });
        out.push(Verdict::from_scan(Check::ExtensionClassification, classes.len() as u64, bad));
    }

    let defects = defect_series_of(tree);
    let bad = defects
        .first_defective_prefix()
        .map(|k| format!("prefix of length {} has defect {}", k, defects.defects[k]));
    out.push(Verdict::from_scan(Check::Fullness, prefix.len() as u64, bad));

    let bad = check_zero_blocks(prefix, p).err().map(|v| {
        format!("{}0^{}{} at position {}", v.left, v.zeros, v.right, v.position)
    });
    out.push(Verdict::from_scan(Check::ZeroBlocks, prefix.len() as u64, bad));

    // Lift palindromes whose image still fits in the horizon.
    let (mut lifted, mut lift_bad, mut center_bad) = (0u64, None, None);
    let max_src = h.saturating_sub(2) / (p.t as usize + 1);
    for src in palindromes_up_to(tree, max_src) {
        let img = lift(p, src)?;
        if img.len() + 2 > h {
            continue;
        }
        lifted += 1;
        // ε lifts to V^(1) = 0^t, which gains an extension when s >= 2
        if lift_bad.is_none() && !src.is_empty() {
            let before = palindromic_extensions(src, tree, h)?.extensions.len();
            let after = if is_palindrome(&img) {
                palindromic_extensions(&img, tree, h).map(|c| c.extensions.len()).ok()
            } else {
                None
            };
            if after != Some(before) {
                lift_bad = Some(format!("{} has {} extensions, its lift {} has {:?}", Word::from(src), before, img, after));
            }
        }
        if center_bad.is_none() && is_palindrome(&img) {
            let c = center_of(src)?;
            let expected = transported_center(p, c);
            let got = center_of(&img)?;
            if got != expected {
                center_bad = Some(format!("{} (center {}) lifts to center {}, expected {}", Word::from(src), c, got, expected));
            }
        }
    }
    out.push(Verdict::from_scan(Check::PalindromeLifting, lifted, lift_bad));
    out.push(Verdict::from_scan(Check::CenterTransport, lifted, center_bad));

    let ladder = uv_ladder(p, prefix.len())?;
    let bad = ladder.iter().enumerate().find_map(|(i, (v, _))| {
        let n = i + 1;
        let got = center_of(v).ok();
        let want = predicted_v_center(p, n);
        (got != Some(want)).then(|| format!("V^({}) has center {:?}, expected {}", n, got, want))
    });
    out.push(Verdict::from_scan(Check::VCenters, ladder.len() as u64, bad));

    let (mut count, mut bad) = (0u64, None);
    for k in 1.. {
        let (vl, ul) = uv_lengths::<u128>(p, k)?;
        if ul > opts.ladder_len_limit as u128 {
            break;
        }
        count += 1;
        let (v, u) = uv_words(p, k, DEFAULT_LENGTH_CAP)?;
        if (v.len() as u128, u.len() as u128) != (vl, ul) {
            bad = Some(format!("k={}: |V|={} |U|={}, formula gives {} and {}", k, v.len(), u.len(), vl, ul));
            break;
        }
    }
    out.push(Verdict::from_scan(Check::LadderLengths, count, bad));
    Ok(out)
}

/// Every center from ε then `0, .., m-1`.
pub fn all_centers(p: &ConfluentParams) -> impl Iterator<Item = Center> {
    std::iter::once(Center::Empty).chain((0..p.m as Letter).map(Center::Letter))
}

/// Existing branches: growing central factors are nested palindromes with
/// the right center and occur in the prefix. Absent branches: the
/// palindromes that would feed them stay bounded in the prefix. Then `ψ`
/// and, for `m = 2, s = 1`, the mechanical word.
pub fn branch_checks(p: &ConfluentParams, prof: &WordProfile, opts: &VerifyOptions) -> Result<Vec<Verdict>> {
    let mut out = Vec::new();
    let tree = &prof.tree;
    let (mut count, mut bad) = (0u64, None);
    for c in all_centers(p) {
        count += 1;
        let err = if branch_spec(p, c).exists {
            existing_branch_problem(p, c, tree, prof.horizon)?
        } else {
            absent_branch_problem(p, c, tree)
        };
        if bad.is_none() {
            bad = err.map(|e| format!("center {}: {}", c, e));
        }
    }
    out.push(Verdict::from_scan(Check::BranchTable, count, bad));

    if branch_spec(p, Center::Empty).exists {
        let r = verify_psi(p, opts.psi_depth)?;
        let bad = r.mismatch.map(|i| format!("reversed psi image differs from the branch at position {}", i));
        out.push(Verdict::from_scan(Check::PsiInvariance, r.checked as u64, bad));
    }

    if p.m == 2 && p.s == 1 {
        let mech = mechanical_word(p, opts.mechanical_len)?;
        let u = p.substitution().fixed_point_prefix(0, opts.mechanical_len)?;
        let bad = (0..u.len()).find(|&i| mech[i] != u[i]).map(|i| format!("letter {}: mechanical {} vs {}", i, mech[i], u[i]));
        out.push(Verdict::from_scan(Check::MechanicalWord, u.len() as u64, bad));
    }
    Ok(out)
}

fn existing_branch_problem(p: &ConfluentParams, c: Center, tree: &Eertree, horizon: usize) -> Result<Option<String>> {
    let top = horizon.saturating_sub(2).max(1);
    let lens = [top / 8, top / 4, top / 2, top];
    let mut prev = Word::new();
    for len in lens {
        let f = branch_central_factor(p, c, len.max(1))?;
        if f.len() > horizon {
            break;
        }
        if center_of(&f).ok() != Some(c) {
            return Ok(Some(format!("factor of length {} has the wrong center", f.len())));
        }
        if !prev.is_empty() && f.central(prev.len()) != Some(prev.as_slice()) {
            return Ok(Some(format!("factors of lengths {} and {} are not nested", prev.len(), f.len())));
        }
        if tree.find(&f).is_none() {
            return Ok(Some(format!("central factor of length {} is not a palindrome of the prefix", f.len())));
        }
        prev = f;
    }
    Ok(None)
}

/// Longest palindrome of the given length parity in the tree.
pub fn longest_palindrome_with_parity(tree: &Eertree, odd: bool) -> usize {
    tree.nodes()
        .map(|v| tree.node_len(v))
        .filter(|l| (l % 2 == 1) == odd)
        .max()
        .unwrap_or(0)
}

/// `t` odd, `s` even: even palindromes are central factors of
/// `U^(1) = 0^{t+s-1}`. `t`, `s` even: odd palindromes are central
/// factors of `U^(1..=m)`.
fn absent_branch_problem(p: &ConfluentParams, c: Center, tree: &Eertree) -> Option<String> {
    let odd = matches!(c, Center::Letter(_));
    let bound = if odd {
        uv_lengths::<u64>(p, p.m).map(|(_, u)| u).unwrap_or(u64::MAX)
    } else {
        (p.t + p.s - 1) as u64
    };
    let longest = longest_palindrome_with_parity(tree, odd) as u64;
    (longest > bound).then(|| format!("palindrome of length {} exceeds the bound {}", longest, bound))
}

pub fn check_eventually_no_palindromes(prof: &WordProfile) -> Verdict {
    let h = prof.palindromes.horizon.min(prof.n_max());
    let pal = prof.p();
    let range = h / 2 + 1..=h;
    let bad = range.clone().find(|&n| pal[n] != 0).map(|n| format!("n={}: P={}", n, pal[n]));
    Verdict::from_scan(Check::EventuallyNoPalindromes, range.count() as u64, bad)
}

/// `renyi_digits(dominant_root(d)) = d`.
pub fn check_round_trip(d: &RenyiDigits) -> Verdict {
    let beta: f64 = dominant_root(d, 1e-12);
    let bad = match renyi_digits(beta, d.len() + 8) {
        Ok(e) if e.digits == d.digits() && e.termination == Termination::Finite => None,
        Ok(e) => Some(format!("beta={} expands to {:?} ({:?})", beta, e.digits, e.termination)),
        Err(e) => Some(format!("beta={}: {}", beta, e)),
    };
    Verdict::from_scan(Check::RenyiRoundTrip, d.len() as u64, bad)
}

/// Runs `f` over `items` on up to `workers` threads, preserving order.
pub fn parallel_map<I, O, F>(items: &[I], workers: usize, f: F) -> Vec<O>
where
    I: Sync,
    O: Send,
    F: Fn(&I) -> O + Sync,
{
    let workers = workers.clamp(1, items.len().max(1));
    let next = std::sync::atomic::AtomicUsize::new(0);
    let mut slots: Vec<Option<O>> = (0..items.len()).map(|_| None).collect();
    let results = std::sync::Mutex::new(&mut slots);
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
                if i >= items.len() {
                    break;
                }
                let r = f(&items[i]);
                results.lock().expect("no worker panicked")[i] = Some(r);
            });
        }
    });
    slots.into_iter().map(|o| o.expect("every item processed")).collect()
}

#[derive(Clone, Debug)]
pub struct SweepEntry {
    pub params: ConfluentParams,
    pub horizon: usize,
    pub verdicts: Vec<Verdict>,
}

impl SweepEntry {
    pub fn passed(&self) -> bool {
        self.verdicts.iter().all(|v| v.passed)
    }
}

/// [`analyze`] over every parameter set, keeping only the verdicts.
pub fn sweep(cases: &[ConfluentParams], opts: &VerifyOptions, workers: usize) -> Result<Vec<SweepEntry>> {
    parallel_map(cases, workers, |p| {
        let a = analyze(&p.digits(), opts)?;
        Ok(SweepEntry { params: *p, horizon: a.horizon(), verdicts: a.verdicts })
    })
    .into_iter()
    .collect()
}
