//! DOT rendering of Hasse diagrams.

use std::fmt::Write;

use crate::congruence::natural_quasicoloring;
use crate::lattice::{Lattice, PrimeInterval};

const PALETTE: [&str; 8] = [
    "red", "blue", "darkgreen", "orange", "purple", "brown", "deeppink", "cyan4",
];

/// Renders `l` bottom to top, one rank per height and one edge per cover.
///
/// With `color_by_congruence`, edges with equal principal congruences share
/// a color and a `class` attribute; palette colors repeat past eight classes.
pub fn to_dot(l: &Lattice, color_by_congruence: bool) -> String {
    let coloring = color_by_congruence.then(|| natural_quasicoloring(l));
    let mut out = String::from("digraph lattice {\n  rankdir=BT;\n  node [shape=circle];\n");
    let top = l.height(l.top());
    for h in 0..=top {
        let rank: Vec<String> = l
            .elements()
            .filter(|&x| l.height(x) == h)
            .map(|x| x.to_string())
            .collect();
        writeln!(out, "  {{ rank=same; {}; }}", rank.join("; ")).unwrap();
    }
    for &(a, b) in l.covers() {
        match &coloring {
            Some(g) => {
                let c = g
                    .color_of(PrimeInterval::new(a, b))
                    .expect("covers are prime");
                writeln!(
                    out,
                    "  {a} -> {b} [color={}, class=\"con{c}\"];",
                    PALETTE[c % PALETTE.len()]
                )
                .unwrap();
            }
            None => writeln!(out, "  {a} -> {b};").unwrap(),
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::catalog;
    use std::collections::BTreeSet;

    fn classes(dot: &str) -> BTreeSet<&str> {
        dot.lines()
            .filter_map(|line| line.split("class=\"").nth(1))
            .collect()
    }

    #[test]
    fn square_and_diamond() {
        let b2 = to_dot(&catalog::grid(2, 2), true);
        assert_eq!(b2.matches("->").count(), 4);
        assert_eq!(classes(&b2).len(), 2);
        let m3 = to_dot(&catalog::m_n(3), true);
        assert_eq!(m3.matches("->").count(), 6);
        assert_eq!(classes(&m3).len(), 1);
        assert!(m3.contains("rankdir=BT"));
        assert!(m3.contains("{ rank=same; 1; 2; 3; }"));
    }

    #[test]
    fn plain_and_deterministic() {
        let s = catalog::s7();
        let plain = to_dot(&s, false);
        assert!(!plain.contains("color"));
        assert_eq!(plain, to_dot(&s, false));
        assert_eq!(to_dot(&s, true), to_dot(&s, true));
    }
}
