use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use super::report::{to_value, Lemma, VerificationReport};
use crate::congruence::{
    congruence_lattice, extend_quasicoloring_for_eye, generate, join_in, natural_quasicoloring,
    prime_congruence, principal_congruence, restrict, Congruence, PrimeCongruences,
};
use crate::constructions::{insert_eye, strip_all, strip_all_random, strip_tab_mapped};
use crate::error::{Error, Result};
use crate::lattice::{iso, Lattice, PrimeInterval};
use crate::projectivity::search::StepGraph;
use crate::projectivity::{
    construct_s7, is_prime_persp_down, is_prime_persp_up, is_swing, is_swing_via, is_switch, Discipline, Step,
    StepKind, Witness,
};

fn require(holds: bool, what: &str) -> Result<()> {
    if holds {
        Ok(())
    } else {
        Err(Error::PreconditionViolated(what.to_string()))
    }
}

fn require_ps(l: &Lattice) -> Result<()> {
    require(l.is_semimodular(), "lattice is not semimodular")?;
    require(l.planar_asserted(), "lattice is not asserted planar")
}

fn spread_label(spreads: bool) -> &'static str {
    if spreads {
        "spreads"
    } else {
        "does not spread"
    }
}

/// Spreading against SPS projectivity for all pairs of prime intervals.
pub fn verify_swing_lemma(l: &Lattice) -> Result<VerificationReport> {
    require_ps(l)?;
    require(l.is_slim(), "lattice is not slim")?;
    let g = StepGraph::new(l);
    let table = PrimeCongruences::new(l);
    let primes = g.primes();
    let mut r = VerificationReport::new(Lemma::Swing);
    for s in 0..primes.len() {
        let reach = g.sps_reachable(s);
        for t in 0..primes.len() {
            let (p, q) = (primes[s], primes[t]);
            r.pairs_checked += 1;
            let seq = reach[t].then(|| g.sps_sequence(s, t).expect("reachable"));
            if let Some(seq) = &seq {
                r.witness(seq.certifies(l, p, q, Discipline::Sps), p, q, seq);
            }
            let spreads = table.spreads(s, t);
            if spreads != seq.is_some() {
                let got = if seq.is_some() { "SPS projective" } else { "not SPS projective" };
                r.fail(Some(p), Some(q), spread_label(spreads), got, seq.as_ref().and_then(to_value));
            }
        }
    }
    Ok(r.finish())
}

/// Three-way agreement of spreading, alternating SPS/switch sequences and
/// PS^c sequences.
pub fn verify_general_swing_lemma(l: &Lattice) -> Result<VerificationReport> {
    require_ps(l)?;
    let g = StepGraph::new(l);
    let table = PrimeCongruences::new(l);
    let primes = g.primes();
    let mut r = VerificationReport::new(Lemma::Gsl);
    for s in 0..primes.len() {
        let gsl = g.gsl_witnesses_from(s);
        let psc = g.psc_sequences_from(s);
        for t in 0..primes.len() {
            let (p, q) = (primes[s], primes[t]);
            r.pairs_checked += 1;
            if let Some(w) = &gsl[t] {
                r.witness(w.certifies(l, p, q), p, q, w);
            }
            if let Some(seq) = &psc[t] {
                r.witness(seq.certifies(l, p, q, Discipline::Psc), p, q, seq);
            }
            let spreads = table.spreads(s, t);
            if spreads != gsl[t].is_some() || spreads != psc[t].is_some() {
                r.fail(
                    Some(p),
                    Some(q),
                    spread_label(spreads),
                    format!("gsl={}, psc={}", gsl[t].is_some(), psc[t].is_some()),
                    to_value(&json!({ "gsl": gsl[t], "psc": psc[t] })),
                );
            }
        }
    }
    Ok(r.finish())
}

struct Stripped {
    k: Lattice,
    keep: Vec<usize>,
    o: usize,
    i: usize,
}

impl Stripped {
    fn new(l: &Lattice, m: usize) -> Result<Stripped> {
        let (k, keep) = strip_tab_mapped(l, m)?;
        Ok(Stripped {
            k,
            keep,
            o: l.lower_covers(m)[0],
            i: l.upper_covers(m)[0],
        })
    }

    fn to_k(&self, x: usize) -> usize {
        self.keep.binary_search(&x).expect("element of K")
    }

    fn to_l(&self, p: PrimeInterval) -> PrimeInterval {
        PrimeInterval::new(self.keep[p.lo], self.keep[p.hi])
    }
}

/// For every congruence `α` of `K = L − {m}`, compares `con_L(α)↾K` with the
/// two-case formula.
pub fn verify_tab_lemma(l: &Lattice, m: usize) -> Result<VerificationReport> {
    let st = Stripped::new(l, m)?;
    let k = &st.k;
    let con_k = congruence_lattice(k)?;
    let (ko, ki) = (st.to_k(st.o), st.to_k(st.i));
    let con_oi = principal_congruence(k, ko, ki);
    let mut r = VerificationReport::new(Lemma::Tab);
    for alpha in &con_k.members {
        r.pairs_checked += 1;
        let pairs = k
            .covers()
            .iter()
            .filter(|&&(a, b)| alpha.related(a, b))
            .map(|&(a, b)| (st.keep[a], st.keep[b]));
        let beta = generate(l, pairs);
        let restricted = restrict(&beta, l, &st.keep)?;
        let collapsed = beta.related(st.o, st.i);
        let expected = if collapsed {
            join_in(k, alpha, &con_oi)
        } else {
            alpha.clone()
        };
        if restricted != expected {
            r.fail(
                None,
                None,
                format!("{:?}", expected.blocks()),
                format!("{:?}", restricted.blocks()),
                Some(json!({ "alpha": alpha.blocks(), "o_collapsed": collapsed })),
            );
        }
    }
    Ok(r.finish())
}

/// The semimodular criterion for collapsing a tab's diamond, and the swing
/// from each lower cover of its top outside the diamond.
pub fn verify_sml(l: &Lattice, m: usize) -> Result<VerificationReport> {
    require(l.is_semimodular(), "lattice is not semimodular")?;
    let st = Stripped::new(l, m)?;
    let k = &st.k;
    let ki = st.to_k(st.i);
    let mut r = VerificationReport::new(Lemma::Sml);
    for p in k.prime_intervals() {
        r.pairs_checked += 1;
        let pl = st.to_l(p);
        let in_l = prime_congruence(l, pl).related(st.o, st.i);
        let con_p = prime_congruence(k, p);
        let below_top = k.lower_covers(ki).iter().find(|&&x| con_p.related(x, ki)).copied();
        if in_l != below_top.is_some() {
            let got = match below_top {
                Some(x) => format!("prime [{}, {}] of K collapsed", st.keep[x], st.i),
                None => "no prime of K below the top collapsed".into(),
            };
            r.fail(Some(pl), None, format!("diamond collapsed: {in_l}"), got, None);
        }
    }
    for &x in k.lower_covers(ki) {
        let xl = st.keep[x];
        if l.leq(st.o, xl) {
            continue;
        }
        r.pairs_checked += 1;
        let q = PrimeInterval::new(xl, st.i);
        match construct_s7(l, st.o, st.i, m, xl) {
            Ok(cfg) => {
                let target = PrimeInterval::new(cfg.a, st.i);
                let inside = cfg.a != m && l.leq(st.o, cfg.a);
                r.witness(inside && is_swing_via(l, q, target, m), q, target, &cfg);
                if is_swing(l, q, target).is_none() {
                    r.fail(Some(q), Some(target), "swing", "no swing", to_value(&cfg));
                }
            }
            Err(e) => r.fail(Some(q), None, "S7 configuration", e.to_string(), None),
        }
    }
    Ok(r.finish())
}

/// Prime-perspectivities between primes of `K = L − {m}` are the same in
/// `K` and in `L`.
pub fn verify_simp(l: &Lattice, m: usize) -> Result<VerificationReport> {
    let st = Stripped::new(l, m)?;
    let k = &st.k;
    let primes = k.prime_intervals();
    let mut r = VerificationReport::new(Lemma::Simp);
    for &p in &primes {
        for &q in &primes {
            r.pairs_checked += 1;
            let (pl, ql) = (st.to_l(p), st.to_l(q));
            let down = (is_prime_persp_down(l, pl, ql), is_prime_persp_down(k, p, q));
            let up = (is_prime_persp_up(l, pl, ql), is_prime_persp_up(k, p, q));
            if down.0 != down.1 || up.0 != up.1 {
                r.fail(
                    Some(pl),
                    Some(ql),
                    format!("down={}, up={} in L", down.0, up.0),
                    format!("down={}, up={} in K", down.1, up.1),
                    None,
                );
            }
        }
    }
    Ok(r.finish())
}

/// For `β < α` join-irreducible, a swing `p → q` with
/// `β ≤ con q < con p ≤ α` and `con p` covering `con q` among the
/// join-irreducibles.
pub fn verify_covering_swing(l: &Lattice) -> Result<VerificationReport> {
    require_ps(l)?;
    let cl = congruence_lattice(l)?;
    let ji: Vec<&Congruence> = cl.join_irreducible_members();
    let lt = |a: usize, b: usize| a != b && ji[a].leq(ji[b]);
    let covers = |a: usize, b: usize| lt(a, b) && !(0..ji.len()).any(|c| lt(a, c) && lt(c, b));
    let table = PrimeCongruences::new(l);
    let g = StepGraph::new(l);
    let mut r = VerificationReport::new(Lemma::CoveringSwing);

    // (index of con p, index of con q, swing)
    let mut swings = Vec::new();
    for step in g.swings() {
        r.witness(step.validate(l), step.from, step.to, step);
        let find = |p: PrimeInterval| {
            let c = &table.cons[table.index(p).expect("prime")];
            ji.iter().position(|j| *j == c)
        };
        match (find(step.from), find(step.to)) {
            (Some(a), Some(b)) => swings.push((a, b, *step)),
            _ => r.fail(
                Some(step.from),
                Some(step.to),
                "join-irreducible principal congruences",
                "missing from Con_J",
                to_value(step),
            ),
        }
    }
    for beta in 0..ji.len() {
        for alpha in 0..ji.len() {
            if !lt(beta, alpha) {
                continue;
            }
            r.pairs_checked += 1;
            let found = swings.iter().any(|&(p, q, _)| {
                covers(q, p) && ji[beta].leq(ji[q]) && ji[p].leq(ji[alpha])
            });
            if !found {
                r.fail(
                    None,
                    None,
                    "covering swing",
                    "none",
                    Some(json!({ "alpha": ji[alpha].blocks(), "beta": ji[beta].blocks() })),
                );
            }
        }
    }
    Ok(r.finish())
}

/// The interval-class congruence test: every class is an interval, and
/// `x ≺ y, z` with `y ≠ z` and `x ≡ y` force `z ≡ y ∨ z`, and dually.
pub fn verify_lemma33(l: &Lattice, theta: &Congruence) -> bool {
    if theta.len() != l.len() {
        return false;
    }
    let intervals = theta.blocks().iter().all(|block| {
        let lo = l.meet_all(block.iter().copied());
        let hi = l.join_all(block.iter().copied());
        let span = l.elements().filter(|&x| l.leq(lo, x) && l.leq(x, hi)).count();
        block.contains(&lo) && block.contains(&hi) && span == block.len()
    });
    if !intervals {
        return false;
    }
    l.elements().all(|x| {
        let ups = l.upper_covers(x);
        let downs = l.lower_covers(x);
        let up_ok = ups.iter().all(|&y| {
            !theta.related(x, y) || ups.iter().all(|&z| z == y || theta.related(z, l.join(y, z)))
        });
        let down_ok = downs.iter().all(|&y| {
            !theta.related(x, y) || downs.iter().all(|&z| z == y || theta.related(z, l.meet(y, z)))
        });
        up_ok && down_ok
    })
}

/// The stripped sublattice against the Swing Lemma and `l` against the GSL.
pub fn verify_reduction(l: &Lattice) -> Result<VerificationReport> {
    require_ps(l)?;
    let stripped = strip_all(l);
    let mut r = VerificationReport::new(Lemma::Reduction);
    match verify_swing_lemma(&stripped) {
        Ok(swing) => r.absorb(swing),
        Err(e) => r.fail(None, None, "stripped sublattice satisfies the Swing Lemma", e.to_string(), None),
    }
    r.absorb(verify_general_swing_lemma(l)?);
    let note = format!("stripped sublattice has {} of {} elements", stripped.len(), l.len());
    Ok(r.finish().with_note(note))
}

/// (C1) and (C2) for the extension of the natural quasi-coloring of `l` to
/// `le`, which is `l` with the eye `e` inserted into `cell`.
pub fn verify_eye_insertion(l: &Lattice, cell: [usize; 4], le: &Lattice, e: usize) -> Result<VerificationReport> {
    let gamma = natural_quasicoloring(l);
    let ext = extend_quasicoloring_for_eye(&gamma, l, cell, le, e)?;
    let mut r = VerificationReport::new(Lemma::Eye);
    let n = ext.primes().len();
    r.pairs_checked = n * n;
    for v in ext.violations(le) {
        r.fail(None, None, "quasi-coloring", format!("{v:?}"), Some(json!({ "cell": cell, "e": e })));
    }
    Ok(r.finish())
}

/// [`verify_eye_insertion`] for an eye in every 4-cell of `l`.
pub fn verify_eye(l: &Lattice) -> Result<VerificationReport> {
    let mut r = VerificationReport::new(Lemma::Eye);
    for cell in l.four_cells() {
        let (le, e) = insert_eye(l, cell)?;
        r.absorb(verify_eye_insertion(l, cell, &le, e)?);
    }
    Ok(r.finish())
}

/// Prime-projectivity closure against spreading; holds in every finite
/// lattice.
pub fn verify_prime_projectivity(l: &Lattice) -> VerificationReport {
    let g = StepGraph::new(l);
    let table = PrimeCongruences::new(l);
    let primes = g.primes();
    let mut r = VerificationReport::new(Lemma::Pp);
    for s in 0..primes.len() {
        let seqs = g.pp_sequences_from(s);
        for t in 0..primes.len() {
            let (p, q) = (primes[s], primes[t]);
            r.pairs_checked += 1;
            if let Some(seq) = &seqs[t] {
                r.witness(seq.certifies(l, p, q, Discipline::PrimeProjective), p, q, seq);
            }
            let spreads = table.spreads(s, t);
            if spreads != seqs[t].is_some() {
                let got = if seqs[t].is_some() { "prime-projective" } else { "not prime-projective" };
                r.fail(Some(p), Some(q), spread_label(spreads), got, seqs[t].as_ref().and_then(to_value));
            }
        }
    }
    r.finish()
}

/// One-directional checks that hold in any finite lattice: swings, SPS,
/// PS^c and alternating sequences imply spreading, and switches preserve the
/// principal congruence.
pub fn verify_soundness(l: &Lattice) -> VerificationReport {
    let g = StepGraph::new(l);
    let table = PrimeCongruences::new(l);
    let primes = g.primes();
    let mut r = VerificationReport::new(Lemma::Soundness);
    let claim = |r: &mut VerificationReport, s: usize, t: usize, what: &str| {
        r.pairs_checked += 1;
        if !table.spreads(s, t) {
            r.fail(Some(primes[s]), Some(primes[t]), "spreads", format!("{what} without spreading"), None);
        }
    };
    for s in 0..primes.len() {
        let sps = g.sps_reachable(s);
        let psc = g.psc_sequences_from(s);
        let gsl = g.gsl_witnesses_from(s);
        for t in 0..primes.len() {
            let (p, q) = (primes[s], primes[t]);
            if sps[t] {
                let seq = g.sps_sequence(s, t).expect("reachable");
                r.witness(seq.certifies(l, p, q, Discipline::Sps), p, q, &seq);
                claim(&mut r, s, t, "SPS sequence");
            }
            if let Some(seq) = &psc[t] {
                r.witness(seq.certifies(l, p, q, Discipline::Psc), p, q, seq);
                claim(&mut r, s, t, "PS^c sequence");
            }
            if let Some(w) = &gsl[t] {
                r.witness(w.certifies(l, p, q), p, q, w);
                claim(&mut r, s, t, "alternating sequence");
            }
        }
    }
    for step in g.swings() {
        r.witness(step.validate(l), step.from, step.to, step);
        let (s, t) = (g.index(step.from).unwrap(), g.index(step.to).unwrap());
        claim(&mut r, s, t, "swing");
    }
    for s in 0..primes.len() {
        for t in 0..primes.len() {
            if let Some(m3) = is_switch(l, primes[s], primes[t]) {
                let step = Step::new(StepKind::Switch, primes[s], primes[t]).with_witness(Witness::M3(m3));
                r.witness(step.validate(l), primes[s], primes[t], &step);
                r.pairs_checked += 1;
                if table.cons[s] != table.cons[t] {
                    r.fail(Some(primes[s]), Some(primes[t]), "equal congruences", "different", to_value(&step));
                }
            }
        }
    }
    r.finish()
}

/// Removing each doubly-irreducible element keeps semimodularity, and
/// `orders` random stripping orders give isomorphic stripped sublattices.
pub fn verify_strip(l: &Lattice, orders: usize, seed: u64) -> VerificationReport {
    let mut r = VerificationReport::new(Lemma::Strip);
    if l.is_semimodular() {
        for m in l.elements().filter(|&m| l.is_doubly_irreducible(m)) {
            r.pairs_checked += 1;
            match l.remove_doubly_irreducible(m) {
                Ok((k, _)) if k.is_semimodular() => {}
                Ok(_) => r.fail(None, None, format!("L - {{{m}}} semimodular"), "not semimodular", None),
                Err(e) => r.fail(None, None, format!("L - {{{m}}} a sublattice"), e.to_string(), None),
            }
        }
    }
    let baseline = strip_all(l);
    if l.planar_asserted() && l.is_semimodular() {
        r.pairs_checked += 1;
        if !baseline.covering_multidiamonds().is_empty() || !baseline.is_slim() {
            r.fail(None, None, "slim stripped sublattice", "covering multi-diamond left", None);
        }
    }
    if !l.tabs().is_empty() {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let results: Vec<Lattice> = (0..orders).map(|_| strip_all_random(l, &mut rng)).collect();
        for (a, x) in results.iter().enumerate() {
            for y in &results[a + 1..] {
                r.pairs_checked += 1;
                if !iso::is_isomorphic(x, y) {
                    r.fail(
                        None,
                        None,
                        "isomorphic stripped sublattices",
                        format!("{} vs {} covers", x.covers().len(), y.covers().len()),
                        None,
                    );
                }
            }
            r.pairs_checked += 1;
            if !iso::is_isomorphic(x, &baseline) {
                r.fail(None, None, "isomorphic to the least-tab stripping", "not isomorphic", None);
            }
        }
    }
    r.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::fork_insert;
    use crate::constructions::Diagram;
    use crate::lattice::catalog;

    fn planar(l: Lattice) -> Lattice {
        l.with_planar(true)
    }

    #[test]
    fn swing_lemma_small() {
        let r = verify_swing_lemma(&planar(catalog::grid(2, 2))).unwrap();
        assert_eq!((r.pairs_checked, r.failures.len()), (16, 0));
        let r = verify_swing_lemma(&planar(catalog::s7())).unwrap();
        assert_eq!((r.pairs_checked, r.failures.len()), (81, 0));
        assert!(r.witnesses_checked > 0 && r.invalid_witnesses == 0);
        assert!(matches!(
            verify_swing_lemma(&planar(catalog::n5())),
            Err(Error::PreconditionViolated(_))
        ));
        assert!(verify_swing_lemma(&catalog::grid(2, 2)).is_err());
        assert!(verify_swing_lemma(&planar(catalog::m_n(3))).is_err());
    }

    #[test]
    fn gsl_small() {
        let m3 = planar(catalog::m_n(3));
        let r = verify_general_swing_lemma(&m3).unwrap();
        assert_eq!((r.pairs_checked, r.failures.len()), (36, 0));
        let g = Diagram::grid(3, 3).into_lattice();
        let (ge, _) = insert_eye(&g, g.four_cells()[0]).unwrap();
        assert!(verify_general_swing_lemma(&ge).unwrap().passed());
        let s7 = planar(catalog::s7());
        let a = verify_general_swing_lemma(&s7).unwrap();
        let b = verify_swing_lemma(&s7).unwrap();
        assert_eq!(a.pairs_checked, b.pairs_checked);
        assert!(a.passed() && b.passed());
    }

    #[test]
    fn tab_lemma_small() {
        let m3 = catalog::m_n(3);
        let r = verify_tab_lemma(&m3, 1).unwrap();
        assert_eq!(r.pairs_checked, 4);
        assert!(r.passed());
        let m4 = catalog::m_n(4);
        for m in m4.tabs() {
            assert!(verify_tab_lemma(&m4, m).unwrap().passed());
        }
        assert!(matches!(verify_tab_lemma(&catalog::grid(2, 2), 1), Err(Error::NotATab(1))));
    }

    #[test]
    fn tab_lemma_formula_on_m3() {
        // con_K(0, 2) on the square left after stripping 1
        let m3 = catalog::m_n(3);
        let (k, keep) = strip_tab_mapped(&m3, 1).unwrap();
        assert_eq!(keep, vec![0, 2, 3, 4]);
        let alpha = principal_congruence(&k, 0, 1);
        let beta = generate(&m3, [(0, 2)]);
        assert!(beta.is_full());
        let joined = join_in(&k, &alpha, &principal_congruence(&k, 0, 3));
        assert!(joined.is_full());
        assert_eq!(restrict(&beta, &m3, &keep).unwrap(), joined);
    }

    #[test]
    fn sml_and_simp_small() {
        let m3 = catalog::m_n(3);
        let r = verify_sml(&m3, 1).unwrap();
        assert!(r.passed());
        assert_eq!(r.pairs_checked, 4);
        for l in [catalog::m_n(4), {
            let g = catalog::grid(3, 3);
            insert_eye(&g, g.four_cells()[3]).unwrap().0
        }] {
            for m in l.tabs() {
                assert!(verify_sml(&l, m).unwrap().passed());
                assert!(verify_simp(&l, m).unwrap().passed());
            }
        }
    }

    #[test]
    fn sml_swings_from_outside_the_diamond() {
        let d = fork_insert(&Diagram::grid(2, 2), [0, 1, 2, 3]).unwrap();
        let s7 = d.into_lattice();
        let mut swings = 0;
        for cell in s7.four_cells() {
            let (le, e) = insert_eye(&s7, cell).unwrap();
            let r = verify_sml(&le, e).unwrap();
            assert!(r.passed());
            swings += r.witnesses_checked;
        }
        assert!(swings > 0);
    }

    #[test]
    fn covering_swing_small() {
        let s7 = planar(catalog::s7());
        let r = verify_covering_swing(&s7).unwrap();
        assert!(r.pairs_checked > 0);
        assert!(r.passed());
        let b2 = verify_covering_swing(&planar(catalog::grid(2, 2))).unwrap();
        assert_eq!((b2.pairs_checked, b2.failures.len()), (0, 0));
    }

    #[test]
    fn lemma33_examples() {
        let b2 = catalog::grid(2, 2);
        let bad = Congruence::from_blocks(4, &[vec![0, 1], vec![2], vec![3]]).unwrap();
        assert!(!verify_lemma33(&b2, &bad));
        let not_interval = Congruence::from_blocks(4, &[vec![0, 3], vec![1], vec![2]]).unwrap();
        assert!(!verify_lemma33(&b2, &not_interval));
        for l in [b2, catalog::n5(), catalog::m_n(3), catalog::s7()] {
            for theta in congruence_lattice(&l).unwrap().members {
                assert!(verify_lemma33(&l, &theta));
            }
        }
    }

    #[test]
    fn reduction_small() {
        let r = verify_reduction(&planar(catalog::m_n(3))).unwrap();
        assert!(r.passed(), "{r:?}");
        assert!(r.note.unwrap().starts_with("stripped sublattice has 4 of 5"));
        let s7 = planar(catalog::s7());
        assert!(verify_reduction(&s7).unwrap().passed());
    }

    #[test]
    fn eye_small() {
        let r = verify_eye(&catalog::grid(3, 3)).unwrap();
        assert!(r.passed());
        assert!(r.pairs_checked > 0);
    }

    #[test]
    fn pp_and_soundness_on_controls() {
        for l in [catalog::boolean(3), catalog::n5(), catalog::product(&catalog::m_n(3), &catalog::chain(2))] {
            assert!(verify_prime_projectivity(&l).passed());
            let s = verify_soundness(&l);
            assert!(s.passed(), "{s:?}");
            assert!(s.witnesses_checked > 0);
        }
    }

    #[test]
    fn strip_small() {
        for l in [catalog::m_n(4), catalog::n5(), planar(catalog::m_n(3))] {
            assert!(verify_strip(&l, 5, 1).passed());
        }
    }
}
