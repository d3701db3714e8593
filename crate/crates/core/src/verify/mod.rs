//! Lemma verification suites.
//!
//! Each check compares a sequence-based characterization of congruence
//! spreading with the brute-force oracle in [`crate::congruence`], or
//! re-derives a structural statement, and returns a [`VerificationReport`].
//! Checks with hypotheses return `Err(PreconditionViolated)` when a lattice
//! does not meet them; [`run_suite`] turns those into report rows.

mod checks;
mod report;

pub use checks::{
    verify_covering_swing, verify_eye, verify_eye_insertion, verify_general_swing_lemma,
    verify_lemma33, verify_prime_projectivity, verify_reduction, verify_simp, verify_sml,
    verify_soundness, verify_strip, verify_swing_lemma, verify_tab_lemma,
};
pub use report::{render_table, Failure, Lemma, Status, Summary, VerificationReport};

use rayon::prelude::*;

use crate::constructions::{insert_eye, CorpusEntry, Tag};
use crate::error::{Error, Result};
use crate::lattice::Lattice;

/// Random stripping orders tried by [`Lemma::Strip`].
pub const STRIP_ORDERS: usize = 5;

fn settle(lemma: Lemma, name: &str, r: Result<VerificationReport>) -> VerificationReport {
    r.unwrap_or_else(|e| VerificationReport::not_run(lemma, &e)).named(name)
}

fn strip_seed(name: &str) -> u64 {
    // FNV-1a, so the orders depend only on the member's name
    name.bytes()
        .fold(0xcbf2_9ce4_8422_2325, |h, b| (h ^ u64::from(b)).wrapping_mul(0x100_0000_01b3))
}

/// Runs `lemma` on a single lattice, one report per tab for the tab checks.
pub fn verify_lattice(l: &Lattice, name: &str, lemma: Lemma) -> Vec<VerificationReport> {
    let per_tab = |f: fn(&Lattice, usize) -> Result<VerificationReport>| {
        let tabs = l.tabs();
        if tabs.is_empty() {
            let err = Error::PreconditionViolated("lattice has no tabs".into());
            return vec![VerificationReport::not_run(lemma, &err).named(name)];
        }
        tabs.into_iter()
            .map(|m| settle(lemma, &format!("{name}#{m}"), f(l, m)))
            .collect()
    };
    match lemma {
        Lemma::Swing => vec![settle(lemma, name, verify_swing_lemma(l))],
        Lemma::Gsl => vec![settle(lemma, name, verify_general_swing_lemma(l))],
        Lemma::Tab => per_tab(verify_tab_lemma),
        Lemma::Sml => per_tab(verify_sml),
        Lemma::Simp => per_tab(verify_simp),
        Lemma::CoveringSwing => vec![settle(lemma, name, verify_covering_swing(l))],
        Lemma::Eye => vec![settle(lemma, name, verify_eye(l))],
        Lemma::Pp => vec![verify_prime_projectivity(l).named(name)],
        Lemma::Reduction => vec![settle(lemma, name, verify_reduction(l))],
        Lemma::Strip => vec![verify_strip(l, STRIP_ORDERS, strip_seed(name)).named(name)],
        Lemma::Soundness => vec![verify_soundness(l).named(name)],
    }
}

/// Whether `lemma` is run on a corpus member; members outside a lemma's
/// hypotheses are left out rather than reported as violations.
pub fn applies(entry: &CorpusEntry, lemma: Lemma) -> bool {
    let planar = matches!(entry.tag, Tag::Sps | Tag::Ps);
    match lemma {
        Lemma::Swing => entry.tag == Tag::Sps,
        Lemma::Gsl | Lemma::CoveringSwing | Lemma::Reduction => planar,
        Lemma::Tab | Lemma::Sml | Lemma::Simp => planar && !entry.lattice.tabs().is_empty(),
        Lemma::Eye => entry.eye.is_some(),
        Lemma::Pp | Lemma::Strip | Lemma::Soundness => true,
    }
}

/// The recorded eye insertion of `entry`, rechecked against its base.
fn verify_recorded_eye(corpus: &[CorpusEntry], entry: &CorpusEntry) -> Result<VerificationReport> {
    let eye = entry.eye.as_ref().expect("applies() checked the record");
    let base = corpus
        .iter()
        .find(|b| b.name == eye.base)
        .ok_or_else(|| Error::PreconditionViolated(format!("base {} is not in the corpus", eye.base)))?;
    let (rebuilt, e) = insert_eye(&base.lattice, eye.cell)?;
    if e != eye.e || rebuilt != entry.lattice {
        return Err(Error::CellMismatch { cell: eye.cell, e: eye.e });
    }
    verify_eye_insertion(&base.lattice, eye.cell, &entry.lattice, eye.e)
}

/// Runs every applicable `(member, lemma)` job in parallel. Reports come
/// back in corpus order, then in the order of `lemmas`.
pub fn run_suite(corpus: &[CorpusEntry], lemmas: &[Lemma]) -> Vec<VerificationReport> {
    let jobs: Vec<(&CorpusEntry, Lemma)> = corpus
        .iter()
        .flat_map(|e| lemmas.iter().filter(|&&l| applies(e, l)).map(move |&l| (e, l)))
        .collect();
    jobs.par_iter()
        .map(|&(entry, lemma)| match lemma {
            Lemma::Eye => vec![settle(lemma, &entry.name, verify_recorded_eye(corpus, entry))],
            _ => verify_lattice(&entry.lattice, &entry.name, lemma),
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{generate_corpus, CorpusSpec};
    use crate::lattice::catalog;

    fn small() -> Vec<CorpusEntry> {
        generate_corpus(&CorpusSpec {
            grids: vec![(2, 2), (2, 3)],
            chains: vec![3],
            forks: 1,
            eyes: 2,
            variants: 1,
            ..CorpusSpec::default()
        })
        .unwrap()
    }

    #[test]
    fn suite_on_a_small_corpus() {
        let corpus = small();
        let reports = run_suite(&corpus, &Lemma::ALL);
        let summary = Summary::of(&reports);
        assert_eq!(summary.failed, 0, "{}", render_table(&reports));
        assert_eq!(summary.skipped + summary.precondition_violated, 0);
        assert!(summary.witnesses_checked > 0);
        assert_eq!(summary.invalid_witnesses, 0);
        assert!(reports.iter().any(|r| r.lemma == Lemma::Eye));
        assert_eq!(reports, run_suite(&corpus, &Lemma::ALL));
    }

    #[test]
    fn preconditions_become_rows() {
        let r = verify_lattice(&catalog::n5(), "n5", Lemma::Swing);
        assert_eq!(r.len(), 1);
        assert_eq!(r[0].status, Status::PreconditionViolated);
        let r = verify_lattice(&catalog::m_n(3), "m3", Lemma::Tab);
        assert_eq!(r.len(), 3);
        assert!(r.iter().all(VerificationReport::passed));
        let json = serde_json::to_string(&r[0]).unwrap();
        assert!(json.contains("\"lemma\":\"tab\"") && json.contains("\"status\":\"PASS\""));
    }

    #[test]
    fn tampered_eye_record() {
        let mut corpus = small();
        let idx = corpus.iter().position(|e| e.eye.is_some()).unwrap();
        corpus[idx].eye.as_mut().unwrap().e += 1;
        let reports = run_suite(&corpus[..=idx], &[Lemma::Eye]);
        assert_eq!(reports.len(), 1);
        assert_eq!(reports[0].status, Status::PreconditionViolated);
    }

    #[test]
    fn table_has_one_row_per_report() {
        let reports = verify_lattice(&catalog::m_n(4), "m4", Lemma::Tab);
        assert_eq!(render_table(&reports).lines().count(), reports.len() + 1);
    }
}
