use std::collections::BTreeSet;

use crate::congruence::{Congruence, PrimeCongruences};
use crate::error::{Error, Result};
use crate::lattice::{Lattice, PrimeInterval};

/// A map from prime intervals onto color ids `0..colors`, together with a
/// quasiorder on the colors stored as a full relation matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiColoring {
    primes: Vec<PrimeInterval>,
    color: Vec<usize>,
    colors: usize,
    order: Vec<bool>,
}

/// A failed quasi-coloring condition between two prime intervals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ColoringViolation {
    NotSurjective(usize),
    NotQuasiorder,
    /// `(γa, γb) ∈ ν` but `b` does not spread to `a`.
    C1 { a: PrimeInterval, b: PrimeInterval },
    /// `b` spreads to `a` but `(γa, γb) ∉ ν`.
    C2 { a: PrimeInterval, b: PrimeInterval },
    DomainMismatch,
}

impl QuasiColoring {
    pub fn color_count(&self) -> usize {
        self.colors
    }

    pub fn primes(&self) -> &[PrimeInterval] {
        &self.primes
    }

    pub fn color_of(&self, p: PrimeInterval) -> Option<usize> {
        self.primes.binary_search(&p).ok().map(|i| self.color[i])
    }

    /// `(c, d) ∈ ν`.
    pub fn related(&self, c: usize, d: usize) -> bool {
        self.order[c * self.colors + d]
    }

    /// Rechecks surjectivity, the quasiorder axioms, (C1) and (C2) over all
    /// pairs of prime intervals of `l`.
    pub fn violations(&self, l: &Lattice) -> Vec<ColoringViolation> {
        let table = PrimeCongruences::new(l);
        if table.primes != self.primes {
            return vec![ColoringViolation::DomainMismatch];
        }
        let mut out = Vec::new();
        let mut hit = vec![false; self.colors];
        for &c in &self.color {
            hit[c] = true;
        }
        out.extend(
            hit.iter()
                .enumerate()
                .filter(|(_, &h)| !h)
                .map(|(c, _)| ColoringViolation::NotSurjective(c)),
        );
        if !is_quasiorder(&self.order, self.colors) {
            out.push(ColoringViolation::NotQuasiorder);
        }
        for (ia, &a) in self.primes.iter().enumerate() {
            for (ib, &b) in self.primes.iter().enumerate() {
                let ordered = self.related(self.color[ia], self.color[ib]);
                let spread = table.spreads(ib, ia);
                if ordered && !spread {
                    out.push(ColoringViolation::C1 { a, b });
                }
                if spread && !ordered {
                    out.push(ColoringViolation::C2 { a, b });
                }
            }
        }
        out
    }

    pub fn is_quasicoloring_of(&self, l: &Lattice) -> bool {
        self.violations(l).is_empty()
    }
}

fn is_quasiorder(order: &[bool], k: usize) -> bool {
    (0..k).all(|c| order[c * k + c])
        && (0..k).all(|a| {
            (0..k).all(|b| !order[a * k + b] || (0..k).all(|c| !order[b * k + c] || order[a * k + c]))
        })
}

fn reflexive_transitive_closure(order: &mut [bool], k: usize) {
    for c in 0..k {
        order[c * k + c] = true;
    }
    for m in 0..k {
        for a in 0..k {
            if order[a * k + m] {
                for b in 0..k {
                    if order[m * k + b] {
                        order[a * k + b] = true;
                    }
                }
            }
        }
    }
}

/// Colors each prime by its principal congruence, ordered by containment.
pub fn natural_quasicoloring(l: &Lattice) -> QuasiColoring {
    let table = PrimeCongruences::new(l);
    let palette: Vec<&Congruence> = table.cons.iter().collect::<BTreeSet<_>>().into_iter().collect();
    let colors = palette.len();
    let color = table
        .cons
        .iter()
        .map(|c| palette.binary_search(&c).expect("palette holds every color"))
        .collect();
    let mut order = vec![false; colors * colors];
    for (a, ca) in palette.iter().enumerate() {
        for (b, cb) in palette.iter().enumerate() {
            order[a * colors + b] = ca.leq(cb);
        }
    }
    QuasiColoring {
        primes: table.primes,
        color,
        colors,
        order,
    }
}

/// Extends a quasi-coloring of `l` to `le`, the lattice obtained by inserting
/// the eye `e` into the 4-cell `(o, v, w, i)`.
///
/// Both new prime intervals get the color of `[v, i]`, and the quasiorder
/// becomes the least one containing the old order and both pairs between
/// the colors of `[v, i]` and `[w, i]`.
pub fn extend_quasicoloring_for_eye(
    gamma: &QuasiColoring,
    l: &Lattice,
    cell: [usize; 4],
    le: &Lattice,
    e: usize,
) -> Result<QuasiColoring> {
    let [o, v, w, i] = cell;
    if !l.is_four_cell(cell) {
        return Err(Error::NotAFourCell(cell));
    }
    let mut expected: Vec<(usize, usize)> = l.covers().to_vec();
    expected.extend([(o, e), (e, i)]);
    expected.sort_unstable();
    if e != l.len() || le.len() != l.len() + 1 || le.covers() != expected.as_slice() {
        return Err(Error::CellMismatch { cell, e });
    }
    if gamma.primes != l.prime_intervals() {
        return Err(Error::PreconditionViolated(
            "coloring domain differs from the prime intervals of the base lattice".into(),
        ));
    }

    let alpha = gamma
        .color_of(PrimeInterval::new(v, i))
        .expect("cell sides are prime");
    let beta = gamma
        .color_of(PrimeInterval::new(w, i))
        .expect("cell sides are prime");
    let k = gamma.colors;
    let mut order = gamma.order.clone();
    order[alpha * k + beta] = true;
    order[beta * k + alpha] = true;
    reflexive_transitive_closure(&mut order, k);

    let primes = le.prime_intervals();
    let color = primes
        .iter()
        .map(|&p| gamma.color_of(p).unwrap_or(alpha))
        .collect();
    Ok(QuasiColoring {
        primes,
        color,
        colors: k,
        order,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::catalog::*;

    #[test]
    fn natural_colorings() {
        let c3 = natural_quasicoloring(&chain(3));
        assert_eq!(c3.color_count(), 2);
        assert!(c3.related(0, 0) && c3.related(1, 1));
        assert!(!c3.related(0, 1) && !c3.related(1, 0));
        assert_eq!(natural_quasicoloring(&m_n(3)).color_count(), 1);
        let b2 = natural_quasicoloring(&grid(2, 2));
        assert_eq!(b2.color_count(), 2);
        assert!(!b2.related(0, 1) && !b2.related(1, 0));
        for l in [chain(3), m_n(3), grid(2, 2), s7(), n5(), grid(3, 3)] {
            assert!(natural_quasicoloring(&l).is_quasicoloring_of(&l));
        }
    }

    #[test]
    fn eye_in_the_square() {
        let b2 = grid(2, 2);
        let gamma = natural_quasicoloring(&b2);
        let m3 = Lattice::new(5, &[(0, 1), (0, 2), (1, 3), (2, 3), (0, 4), (4, 3)]).unwrap();
        let ext = extend_quasicoloring_for_eye(&gamma, &b2, [0, 1, 2, 3], &m3, 4).unwrap();
        assert!(ext.related(0, 1) && ext.related(1, 0));
        for p in b2.prime_intervals() {
            assert_eq!(ext.color_of(p), gamma.color_of(p));
        }
        assert_eq!(ext.primes().len(), 6);
        assert!(ext.is_quasicoloring_of(&m3));
        // wrong eye id
        assert!(extend_quasicoloring_for_eye(&gamma, &b2, [0, 1, 2, 3], &m3, 3).is_err());
    }
}
