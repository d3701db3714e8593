use std::sync::OnceLock;

use proptest::prelude::*;

use swinglat::congruence::{generate, spreads, Congruence, PrimeCongruences};
use swinglat::constructions::{generate_corpus, insert_eye, strip_tab, CorpusEntry, CorpusSpec};
use swinglat::projectivity::{is_cell_perspective, is_swing, is_switch};
use swinglat::verify::{verify_lemma33, verify_simp};
use swinglat::Lattice;

fn corpus() -> &'static [CorpusEntry] {
    static CORPUS: OnceLock<Vec<CorpusEntry>> = OnceLock::new();
    CORPUS.get_or_init(|| generate_corpus(&CorpusSpec::default()).unwrap())
}

fn member() -> impl Strategy<Value = &'static Lattice> {
    (0..corpus().len()).prop_map(|i| &corpus()[i].lattice)
}

/// A corpus member with three elements drawn from it.
fn member_with_elements() -> impl Strategy<Value = (&'static Lattice, usize, usize, usize)> {
    member().prop_flat_map(|l| {
        let n = l.len();
        (Just(l), 0..n, 0..n, 0..n)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn lattice_laws((l, a, b, c) in member_with_elements()) {
        prop_assert_eq!(l.join(a, b), l.join(b, a));
        prop_assert_eq!(l.meet(a, b), l.meet(b, a));
        prop_assert_eq!(l.join(l.join(a, b), c), l.join(a, l.join(b, c)));
        prop_assert_eq!(l.meet(l.meet(a, b), c), l.meet(a, l.meet(b, c)));
        prop_assert_eq!(l.join(a, l.meet(a, b)), a);
        prop_assert_eq!(l.meet(a, l.join(a, b)), a);
        prop_assert_eq!(l.leq(a, b), l.join(a, b) == b);
        prop_assert!(l.leq(l.bottom(), a) && l.leq(a, l.top()));
    }

    #[test]
    fn spreading_is_a_quasiorder(l in member(), picks in proptest::collection::vec(any::<prop::sample::Index>(), 3)) {
        let t = PrimeCongruences::new(l);
        let n = t.primes.len();
        let [i, j, k] = [picks[0].index(n), picks[1].index(n), picks[2].index(n)];
        prop_assert!(t.spreads(i, i));
        if t.spreads(i, j) && t.spreads(j, k) {
            prop_assert!(t.spreads(i, k));
        }
    }

    #[test]
    fn generated_partitions_round_trip(
        (l, a, b, _) in member_with_elements(),
        extra in proptest::collection::vec((0usize..40, 0usize..40), 0..3),
    ) {
        let n = l.len();
        let pairs = std::iter::once((a, b)).chain(extra.into_iter().map(|(x, y)| (x % n, y % n)));
        let theta = generate(l, pairs);
        prop_assert!(theta.has_substitution_property(l));
        prop_assert!(verify_lemma33(l, &theta));
        let back = Congruence::from_json(n, &theta.to_json()).unwrap();
        prop_assert_eq!(back, theta);
    }

    #[test]
    fn lattice_files_round_trip(l in member()) {
        prop_assert_eq!(&Lattice::from_json(&l.to_json()).unwrap(), l);
    }

    #[test]
    fn step_relation_shapes(l in member(), picks in proptest::collection::vec(any::<prop::sample::Index>(), 2)) {
        let primes = l.prime_intervals();
        let p = primes[picks[0].index(primes.len())];
        let q = primes[picks[1].index(primes.len())];
        prop_assert!(is_swing(l, p, p).is_none());
        prop_assert_eq!(is_switch(l, p, q).is_some(), is_switch(l, q, p).is_some());
        prop_assert_eq!(is_cell_perspective(l, p, q).is_some(), is_cell_perspective(l, q, p).is_some());
        if is_swing(l, p, q).is_some() {
            prop_assert!(spreads(l, p, q));
        }
    }

    #[test]
    fn tabs_and_eyes(l in member(), pick in any::<prop::sample::Index>()) {
        for m in l.tabs() {
            let r = verify_simp(l, m).unwrap();
            prop_assert!(r.passed(), "{:?}", r.failures);
        }
        let cells = l.four_cells();
        if !cells.is_empty() {
            let cell = cells[pick.index(cells.len())];
            let (le, e) = insert_eye(l, cell).unwrap();
            prop_assert!(le.is_semimodular() || !l.is_semimodular());
            prop_assert_eq!(&strip_tab(&le, e).unwrap(), l);
        }
    }
}
