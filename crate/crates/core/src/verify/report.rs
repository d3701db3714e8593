use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::Error;
use crate::lattice::PrimeInterval;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Lemma {
    /// Spreading iff SPS projectivity, on slim planar semimodular lattices.
    Swing,
    /// Spreading iff alternating SPS/switch sequences iff PS^c sequences.
    Gsl,
    /// Restriction of `con_L(α)` to `L − {m}` for a tab `m`.
    Tab,
    /// A tab's diamond is collapsed iff some prime below its top is.
    Sml,
    /// Prime-perspectivities inside `L − {m}` agree with those of `L`.
    Simp,
    /// Covering pairs of join-irreducible congruences are realized by swings.
    CoveringSwing,
    /// The extended quasi-coloring after an eye insertion.
    Eye,
    /// Prime-projectivity closure equals spreading.
    Pp,
    /// The stripped sublattice satisfies the Swing Lemma and `L` the GSL.
    Reduction,
    /// Removing doubly-irreducible elements keeps semimodularity; stripping
    /// is unique up to isomorphism.
    Strip,
    /// Every positive witness implies spreading, on any lattice.
    Soundness,
}

impl Lemma {
    pub const ALL: [Lemma; 11] = [
        Lemma::Swing,
        Lemma::Gsl,
        Lemma::Tab,
        Lemma::Sml,
        Lemma::Simp,
        Lemma::CoveringSwing,
        Lemma::Eye,
        Lemma::Pp,
        Lemma::Reduction,
        Lemma::Strip,
        Lemma::Soundness,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Lemma::Swing => "swing",
            Lemma::Gsl => "gsl",
            Lemma::Tab => "tab",
            Lemma::Sml => "sml",
            Lemma::Simp => "simp",
            Lemma::CoveringSwing => "covering-swing",
            Lemma::Eye => "eye",
            Lemma::Pp => "pp",
            Lemma::Reduction => "reduction",
            Lemma::Strip => "strip",
            Lemma::Soundness => "soundness",
        }
    }
}

impl fmt::Display for Lemma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
    PreconditionViolated,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Failure {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<PrimeInterval>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q: Option<PrimeInterval>,
    pub expected: String,
    pub got: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub lemma: Lemma,
    pub lattice: String,
    pub pairs_checked: usize,
    pub witnesses_checked: usize,
    pub invalid_witnesses: usize,
    pub failures: Vec<Failure>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl VerificationReport {
    pub(crate) fn new(lemma: Lemma) -> Self {
        VerificationReport {
            lemma,
            lattice: String::new(),
            pairs_checked: 0,
            witnesses_checked: 0,
            invalid_witnesses: 0,
            failures: Vec::new(),
            status: Status::Pass,
            note: None,
        }
    }

    /// A report for a check that could not run; `SizeLimit` becomes
    /// `Skipped`, anything else `PreconditionViolated`.
    pub fn not_run(lemma: Lemma, err: &Error) -> Self {
        let mut r = VerificationReport::new(lemma);
        r.status = match err {
            Error::SizeLimit(_) => Status::Skipped,
            _ => Status::PreconditionViolated,
        };
        r.note = Some(err.to_string());
        r
    }

    pub fn named(mut self, name: &str) -> Self {
        self.lattice = name.to_string();
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub(crate) fn fail(
        &mut self,
        p: Option<PrimeInterval>,
        q: Option<PrimeInterval>,
        expected: impl Into<String>,
        got: impl Into<String>,
        witness: Option<Value>,
    ) {
        self.failures.push(Failure {
            p,
            q,
            expected: expected.into(),
            got: got.into(),
            witness,
        });
    }

    /// Counts a re-validated witness; an invalid one is also a failure.
    pub(crate) fn witness<W: Serialize>(&mut self, valid: bool, p: PrimeInterval, q: PrimeInterval, w: &W) {
        self.witnesses_checked += 1;
        if !valid {
            self.invalid_witnesses += 1;
            self.fail(Some(p), Some(q), "valid witness", "invalid witness", to_value(w));
        }
    }

    /// Folds `other` into `self`, keeping `self`'s lemma and name.
    pub(crate) fn absorb(&mut self, other: VerificationReport) {
        self.pairs_checked += other.pairs_checked;
        self.witnesses_checked += other.witnesses_checked;
        self.invalid_witnesses += other.invalid_witnesses;
        self.failures.extend(other.failures);
        if other.status == Status::Skipped || other.status == Status::PreconditionViolated {
            self.status = other.status;
            self.note = other.note;
        }
    }

    pub(crate) fn finish(mut self) -> Self {
        if !self.failures.is_empty() {
            self.status = Status::Fail;
        }
        self
    }
}

pub(crate) fn to_value<W: Serialize>(w: &W) -> Option<Value> {
    serde_json::to_value(w).ok()
}

/// Totals over a list of reports.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub reports: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub precondition_violated: usize,
    pub pairs_checked: usize,
    pub witnesses_checked: usize,
    pub invalid_witnesses: usize,
}

impl Summary {
    pub fn of(reports: &[VerificationReport]) -> Summary {
        let mut s = Summary::default();
        for r in reports {
            s.reports += 1;
            match r.status {
                Status::Pass => s.passed += 1,
                Status::Fail => s.failed += 1,
                Status::Skipped => s.skipped += 1,
                Status::PreconditionViolated => s.precondition_violated += 1,
            }
            s.pairs_checked += r.pairs_checked;
            s.witnesses_checked += r.witnesses_checked;
            s.invalid_witnesses += r.invalid_witnesses;
        }
        s
    }
}

/// A fixed-width table, one row per report.
pub fn render_table(reports: &[VerificationReport]) -> String {
    let width = reports.iter().map(|r| r.lattice.len()).max().unwrap_or(0).max(7);
    let mut out = format!(
        "{:<15} {:<width$} {:>8} {:>9} {:>8}  status\n",
        "lemma", "lattice", "checked", "witnesses", "failures"
    );
    for r in reports {
        let status = serde_json::to_value(r.status)
            .ok()
            .and_then(|v| v.as_str().map(str::to_owned))
            .unwrap_or_default();
        out.push_str(&format!(
            "{:<15} {:<width$} {:>8} {:>9} {:>8}  {status}\n",
            r.lemma.name(),
            r.lattice,
            r.pairs_checked,
            r.witnesses_checked,
            r.failures.len(),
        ));
    }
    out
}
