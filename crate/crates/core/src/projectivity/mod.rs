//! Step relations between intervals and the witness sequences built from
//! them.
//!
//! Every relation here is a plain predicate over join/meet tables. The
//! searches in [`search`] chain them into sequences whose steps carry enough
//! witness data to be re-checked independently with [`Step::validate`].

mod s7;
pub mod search;

pub use s7::{construct_s7, S7Config};
pub use search::{
    gsl_reachable, prime_projectivity_closure, prime_projectivity_sequence, psc_sequence,
    sps_projective, GslWitness, StepGraph,
};

use serde::{Deserialize, Serialize};

use crate::lattice::{catalog, iso, Interval, Lattice, PrimeInterval};

/// Anything with a bottom and a top.
pub trait Endpoints {
    fn lo(&self) -> usize;
    fn hi(&self) -> usize;
}

impl Endpoints for PrimeInterval {
    fn lo(&self) -> usize {
        self.lo
    }
    fn hi(&self) -> usize {
        self.hi
    }
}

impl Endpoints for Interval {
    fn lo(&self) -> usize {
        self.lo
    }
    fn hi(&self) -> usize {
        self.hi
    }
}

impl Endpoints for (usize, usize) {
    fn lo(&self) -> usize {
        self.0
    }
    fn hi(&self) -> usize {
        self.1
    }
}

/// `I ↘ J`: `0_I ∨ 1_J = 1_I` and `0_I ∧ 1_J = 0_J`.
pub fn is_down_perspective(l: &Lattice, i: &impl Endpoints, j: &impl Endpoints) -> bool {
    l.join(i.lo(), j.hi()) == i.hi() && l.meet(i.lo(), j.hi()) == j.lo()
}

/// `I ↗ J`: `1_I ∧ 0_J = 0_I` and `1_I ∨ 0_J = 1_J`.
pub fn is_up_perspective(l: &Lattice, i: &impl Endpoints, j: &impl Endpoints) -> bool {
    l.meet(i.hi(), j.lo()) == i.lo() && l.join(i.hi(), j.lo()) == j.hi()
}

/// `0_p ∨ 1_q = 1_p` and `0_p ∧ 1_q ≤ 0_q`.
pub fn is_prime_persp_down(l: &Lattice, p: PrimeInterval, q: PrimeInterval) -> bool {
    l.join(p.lo, q.hi) == p.hi && l.leq(l.meet(p.lo, q.hi), q.lo)
}

/// `1_p ∧ 0_q = 0_p` and `1_p ∨ 0_q ≥ 1_q`.
pub fn is_prime_persp_up(l: &Lattice, p: PrimeInterval, q: PrimeInterval) -> bool {
    l.meet(p.hi, q.lo) == p.lo && l.leq(q.hi, l.join(p.hi, q.lo))
}

/// `p` swings to `q` using the lower cover `a` of the common top.
pub fn is_swing_via(l: &Lattice, p: PrimeInterval, q: PrimeInterval, a: usize) -> bool {
    if p == q || p.hi != q.hi || !l.is_prime(p) || !l.is_prime(q) {
        return false;
    }
    if a >= l.len() || a == p.lo || a == q.lo || !l.is_cover(a, p.hi) {
        return false;
    }
    let s = l.generate(&[p.lo, q.lo, a]);
    if s.len() != 7 {
        return false;
    }
    let (sub, map) = l.sublattice(&s).expect("generated sets are sublattices");
    if !iso::is_isomorphic(&sub, &catalog::s7()) {
        return false;
    }
    let proper: Vec<usize> = sub
        .lower_covers(sub.top())
        .iter()
        .copied()
        .filter(|&d| sub.lower_covers(d).len() >= 2)
        .collect();
    proper.len() == 1 && map[proper[0]] == q.lo
}

/// The least witness for `p` swinging to `q`.
pub fn is_swing(l: &Lattice, p: PrimeInterval, q: PrimeInterval) -> Option<usize> {
    if p == q || p.hi != q.hi || !l.is_prime(p) || !l.is_prime(q) {
        return None;
    }
    l.lower_covers(p.hi)
        .iter()
        .copied()
        .find(|&a| is_swing_via(l, p, q, a))
}

/// Some `{o, a, b, c, i}` with `o ≺ a, b, c ≺ i` whose covering pairs
/// include both `p` and `q`, returned as `[o, a, b, c, i]` with `a < b < c`.
pub fn is_switch(l: &Lattice, p: PrimeInterval, q: PrimeInterval) -> Option<[usize; 5]> {
    if p == q || !l.is_prime(p) || !l.is_prime(q) {
        return None;
    }
    let mut frames: Vec<(usize, usize)> = l
        .upper_covers(p.hi)
        .iter()
        .map(|&i| (p.lo, i))
        .chain(l.lower_covers(p.lo).iter().map(|&o| (o, p.hi)))
        .collect();
    frames.sort_unstable();
    for (o, i) in frames {
        let atoms: Vec<usize> = l
            .upper_covers(o)
            .iter()
            .copied()
            .filter(|&t| l.is_cover(t, i))
            .collect();
        if atoms.len() < 3 {
            continue;
        }
        let middle = |r: PrimeInterval| {
            if r.lo == o && atoms.contains(&r.hi) {
                Some(r.hi)
            } else if r.hi == i && atoms.contains(&r.lo) {
                Some(r.lo)
            } else {
                None
            }
        };
        let (Some(tp), Some(tq)) = (middle(p), middle(q)) else {
            continue;
        };
        let mut chosen = vec![tp];
        if tq != tp {
            chosen.push(tq);
        }
        for &t in &atoms {
            if chosen.len() == 3 {
                break;
            }
            if !chosen.contains(&t) {
                chosen.push(t);
            }
        }
        chosen.sort_unstable();
        return Some([o, chosen[0], chosen[1], chosen[2], i]);
    }
    None
}

fn switch_witness_holds(l: &Lattice, p: PrimeInterval, q: PrimeInterval, m3: [usize; 5]) -> bool {
    let [o, a, b, c, i] = m3;
    if p == q || m3.iter().any(|&x| x >= l.len()) || a == b || b == c || a == c {
        return false;
    }
    let atoms = [a, b, c];
    if !atoms.iter().all(|&t| l.is_cover(o, t) && l.is_cover(t, i)) {
        return false;
    }
    let inside = |r: PrimeInterval| {
        atoms
            .iter()
            .any(|&t| r == PrimeInterval::new(o, t) || r == PrimeInterval::new(t, i))
    };
    inside(p) && inside(q)
}

/// The 4-cell whose opposite sides are `p` and `q`, as `[o, v, w, i]` with
/// `v < w`.
pub fn is_cell_perspective(l: &Lattice, p: PrimeInterval, q: PrimeInterval) -> Option<[usize; 4]> {
    if !l.is_prime(p) || !l.is_prime(q) {
        return None;
    }
    let try_cell = |bottom_side: PrimeInterval, top_side: PrimeInterval| {
        let (o, v, w, i) = (bottom_side.lo, bottom_side.hi, top_side.lo, top_side.hi);
        let cell = [o, v.min(w), v.max(w), i];
        (v != w && l.is_cover(o, w) && l.is_cover(v, i) && l.is_four_cell(cell)).then_some(cell)
    };
    try_cell(p, q).or_else(|| try_cell(q, p))
}

fn cell_witness_holds(l: &Lattice, p: PrimeInterval, q: PrimeInterval, cell: [usize; 4]) -> bool {
    if !l.is_four_cell(cell) {
        return false;
    }
    let [o, v, w, i] = cell;
    let sides = [
        (PrimeInterval::new(o, v), PrimeInterval::new(w, i)),
        (PrimeInterval::new(o, w), PrimeInterval::new(v, i)),
    ];
    sides
        .iter()
        .any(|&(a, b)| (p, q) == (a, b) || (p, q) == (b, a))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum StepKind {
    UpPerspective,
    DownPerspective,
    PrimePerspUp,
    PrimePerspDown,
    CellPerspective,
    Swing,
    Switch,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Witness {
    /// The third lower cover of a swing.
    LowerCover(usize),
    /// `[o, a, b, c, i]` of a switch.
    M3([usize; 5]),
    /// `[o, v, w, i]` of a cell-perspectivity.
    Cell([usize; 4]),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Step {
    pub kind: StepKind,
    pub from: PrimeInterval,
    pub to: PrimeInterval,
    pub witness: Option<Witness>,
}

impl Step {
    pub fn new(kind: StepKind, from: PrimeInterval, to: PrimeInterval) -> Self {
        Step {
            kind,
            from,
            to,
            witness: None,
        }
    }

    pub fn with_witness(mut self, w: Witness) -> Self {
        self.witness = Some(w);
        self
    }

    /// Re-checks the relation named by `kind`, using the stored witness.
    pub fn validate(&self, l: &Lattice) -> bool {
        let (p, q) = (self.from, self.to);
        if !l.is_prime(p) || !l.is_prime(q) {
            return false;
        }
        match (self.kind, self.witness) {
            (StepKind::UpPerspective, None) => is_up_perspective(l, &p, &q),
            (StepKind::DownPerspective, None) => is_down_perspective(l, &p, &q),
            (StepKind::PrimePerspUp, None) => is_prime_persp_up(l, p, q),
            (StepKind::PrimePerspDown, None) => is_prime_persp_down(l, p, q),
            (StepKind::CellPerspective, Some(Witness::Cell(c))) => cell_witness_holds(l, p, q, c),
            (StepKind::Swing, Some(Witness::LowerCover(a))) => is_swing_via(l, p, q, a),
            (StepKind::Switch, Some(Witness::M3(m))) => switch_witness_holds(l, p, q, m),
            _ => false,
        }
    }
}

/// Which step kinds a sequence may use.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Discipline {
    /// One up-perspectivity, then down-perspectivities and swings.
    Sps,
    /// Cell-perspectivities, swings and switches.
    Psc,
    /// Prime-perspectivities up or down.
    PrimeProjective,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct StepSequence {
    pub steps: Vec<Step>,
}

impl StepSequence {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Chains from `p` to `q`, every step re-validates, and the kinds follow
    /// `discipline`.
    pub fn certifies(&self, l: &Lattice, p: PrimeInterval, q: PrimeInterval, discipline: Discipline) -> bool {
        if self.steps.is_empty() {
            return p == q;
        }
        let chained = self.steps.first().map(|s| s.from) == Some(p)
            && self.steps.last().map(|s| s.to) == Some(q)
            && self.steps.windows(2).all(|w| w[0].to == w[1].from);
        let kinds_ok = match discipline {
            Discipline::Sps => {
                self.steps[0].kind == StepKind::UpPerspective
                    && self.steps[1..]
                        .iter()
                        .all(|s| matches!(s.kind, StepKind::DownPerspective | StepKind::Swing))
            }
            Discipline::Psc => self.steps.iter().all(|s| {
                matches!(
                    s.kind,
                    StepKind::CellPerspective | StepKind::Swing | StepKind::Switch
                )
            }),
            Discipline::PrimeProjective => self
                .steps
                .iter()
                .all(|s| matches!(s.kind, StepKind::PrimePerspUp | StepKind::PrimePerspDown)),
        };
        chained && kinds_ok && self.steps.iter().all(|s| s.validate(l))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("steps serialize")
    }
}
