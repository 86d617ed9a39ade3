//! Machine-readable reports. Field order is the serialized key order.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use parry_words::verify::{Analysis, Verdict};
use parry_words::{Classification, PsiResult};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub t: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub s: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub m: Option<usize>,
}

impl From<&Classification> for ClassificationReport {
    fn from(c: &Classification) -> Self {
        let p = c.params();
        ClassificationReport {
            kind: c.tag().to_string(),
            t: p.map(|p| p.t),
            s: p.map(|p| p.s),
            m: p.map(|p| p.m),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosedFormsReport {
    pub p: Vec<u64>,
    pub delta_c: Vec<u64>,
    pub delta2_c: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictReport {
    pub check: String,
    pub passed: bool,
    pub checked: u64,
    pub counterexample: Option<String>,
}

impl From<&Verdict> for VerdictReport {
    fn from(v: &Verdict) -> Self {
        VerdictReport {
            check: v.check.name().to_string(),
            passed: v.passed,
            checked: v.checked,
            counterexample: v.counterexample.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub digits: Vec<u32>,
    pub classification: ClassificationReport,
    pub horizon: usize,
    pub c: Vec<u64>,
    pub delta_c: Vec<i64>,
    pub p: Vec<u64>,
    pub closed_forms: Option<ClosedFormsReport>,
    pub verdicts: Vec<VerdictReport>,
    /// Milliseconds per phase; empty unless requested.
    pub timings: BTreeMap<String, f64>,
}

impl AnalysisReport {
    /// Report of `a` with every table cut at `n_max`.
    pub fn new(a: &Analysis, n_max: usize, with_timings: bool) -> Self {
        let n = n_max.min(a.profile.n_max());
        let c = a.profile.c()[..=n].to_vec();
        let delta_c = c.windows(2).map(|w| w[1] as i64 - w[0] as i64).collect();
        AnalysisReport {
            digits: a.digits.digits().to_vec(),
            classification: (&a.classification).into(),
            horizon: a.horizon(),
            c,
            delta_c,
            p: a.profile.p()[..=n].to_vec(),
            closed_forms: a.closed_forms.as_ref().map(|f| ClosedFormsReport {
                p: f.p[..=n].to_vec(),
                delta_c: f.delta_c[..=n].to_vec(),
                delta2_c: f.delta2_c[..=n].to_vec(),
            }),
            verdicts: a.verdicts.iter().map(VerdictReport::from).collect(),
            timings: if with_timings {
                a.timings.iter().map(|(k, d)| (k.to_string(), d.as_secs_f64() * 1e3)).collect()
            } else {
                BTreeMap::new()
            },
        }
    }

    pub fn all_passed(&self) -> bool {
        self.verdicts.iter().all(|v| v.passed)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// One row per `n`: `n, C, ΔC, Δ²C, P, P_closed, ΔC_closed`. Cells that
    /// need values past the last `n` are left empty.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,C,ΔC,Δ²C,P,P_closed,ΔC_closed\n");
        let cell = |x: Option<String>| x.unwrap_or_default();
        for n in 0..self.c.len() {
            let d = self.delta_c.get(n).copied();
            let d2 = self.delta_c.get(n + 1).zip(d).map(|(b, a)| b - a);
            let closed = self.closed_forms.as_ref();
            let _ = writeln!(
                out,
                "{},{},{},{},{},{},{}",
                n,
                self.c[n],
                cell(d.map(|x| x.to_string())),
                cell(d2.map(|x| x.to_string())),
                self.p[n],
                cell(closed.map(|f| f.p[n].to_string())),
                cell(closed.map(|f| f.delta_c[n].to_string())),
            );
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PsiReport {
    pub conjugator: String,
    pub images: Vec<String>,
    pub images_palindromic: bool,
}

impl From<&PsiResult> for PsiReport {
    fn from(r: &PsiResult) -> Self {
        PsiReport {
            conjugator: r.conjugator.to_string(),
            images: r.psi.images().iter().map(|w| w.to_string()).collect(),
            images_palindromic: r.images_palindromic,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub digits: Vec<u32>,
    pub classification: ClassificationReport,
    pub horizon: usize,
    pub passed: bool,
    pub verdicts: Vec<VerdictReport>,
    pub psi: Option<PsiReport>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepCase {
    pub t: u32,
    pub s: u32,
    pub m: usize,
    pub horizon: usize,
    pub passed: bool,
    pub failures: Vec<VerdictReport>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub passed: bool,
    pub cases: Vec<SweepCase>,
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serializes");
    s.push('\n');
    s
}
