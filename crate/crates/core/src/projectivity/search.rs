//! Breadth-first witness searches over the step relations.
//!
//! [`StepGraph`] evaluates every relation once for all pairs of prime
//! intervals; the searches then run over adjacency lists sorted by target, so
//! the first witness found is a shortest one and ties break toward the
//! lexicographically smaller interval.

use std::collections::{BTreeSet, VecDeque};
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use super::{
    is_cell_perspective, is_down_perspective, is_prime_persp_down, is_prime_persp_up, is_swing,
    is_switch, is_up_perspective, Discipline, Step, StepKind, StepSequence, Witness,
};
use crate::lattice::{Lattice, PrimeInterval};

#[derive(Clone, Copy, Debug)]
struct Link {
    prev: Option<usize>,
    step: Option<Step>,
}

type Tree = Vec<Option<Link>>;

fn bfs(
    n: usize,
    seeds: Vec<(usize, Link)>,
    neighbors: impl Fn(usize) -> Vec<(usize, Option<Step>)>,
) -> Tree {
    let mut tree: Tree = vec![None; n];
    let mut queue = VecDeque::new();
    for (node, link) in seeds {
        if tree[node].is_none() {
            tree[node] = Some(link);
            queue.push_back(node);
        }
    }
    while let Some(x) = queue.pop_front() {
        for (y, step) in neighbors(x) {
            if tree[y].is_none() {
                tree[y] = Some(Link {
                    prev: Some(x),
                    step,
                });
                queue.push_back(y);
            }
        }
    }
    tree
}

fn some_steps(moves: &[(usize, Step)]) -> Vec<(usize, Option<Step>)> {
    moves.iter().map(|&(t, s)| (t, Some(s))).collect()
}

fn path(tree: &Tree, target: usize) -> Option<Vec<Step>> {
    let mut steps = Vec::new();
    let mut cur = target;
    loop {
        let link = tree[cur]?;
        steps.extend(link.step);
        match link.prev {
            Some(p) => cur = p,
            None => break,
        }
    }
    steps.reverse();
    Some(steps)
}

fn all_paths(tree: &Tree) -> Vec<Option<StepSequence>> {
    (0..tree.len())
        .map(|t| path(tree, t).map(|steps| StepSequence { steps }))
        .collect()
}

/// SPS witnesses `p_k ⇒ q_k` interleaved with switches `q_k → p_{k+1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GslWitness {
    pub sps: Vec<StepSequence>,
    pub switches: Vec<Step>,
}

impl GslWitness {
    pub fn certifies(&self, l: &Lattice, p: PrimeInterval, q: PrimeInterval) -> bool {
        if self.sps.len() != self.switches.len() + 1 {
            return false;
        }
        let mut start = p;
        for (k, seq) in self.sps.iter().enumerate() {
            let end = match self.switches.get(k) {
                Some(sw) => sw.from,
                None => q,
            };
            if !seq.certifies(l, start, end, Discipline::Sps) {
                return false;
            }
            if let Some(sw) = self.switches.get(k) {
                if sw.kind != StepKind::Switch || !sw.validate(l) {
                    return false;
                }
                start = sw.to;
            }
        }
        true
    }

    pub fn steps(&self) -> impl Iterator<Item = &Step> {
        self.sps
            .iter()
            .flat_map(|s| s.steps.iter())
            .chain(self.switches.iter())
    }
}

/// All step relations of one lattice, indexed by prime interval.
pub struct StepGraph<'a> {
    lattice: &'a Lattice,
    primes: Vec<PrimeInterval>,
    up: Vec<Vec<usize>>,
    sps_moves: Vec<Vec<(usize, Step)>>,
    psc_moves: Vec<Vec<(usize, Step)>>,
    pp_moves: Vec<Vec<(usize, Step)>>,
    switches: Vec<Vec<(usize, Step)>>,
    sps_trees: Vec<OnceLock<Tree>>,
}

impl<'a> StepGraph<'a> {
    pub fn new(lattice: &'a Lattice) -> Self {
        let primes = lattice.prime_intervals();
        let n = primes.len();
        let mut up = vec![Vec::new(); n];
        let mut sps_moves = vec![Vec::new(); n];
        let mut psc_moves = vec![Vec::new(); n];
        let mut pp_moves = vec![Vec::new(); n];
        let mut switches = vec![Vec::new(); n];
        for (i, &p) in primes.iter().enumerate() {
            for (j, &q) in primes.iter().enumerate() {
                if is_up_perspective(lattice, &p, &q) {
                    up[i].push(j);
                }
                if i != j && is_down_perspective(lattice, &p, &q) {
                    sps_moves[i].push((j, Step::new(StepKind::DownPerspective, p, q)));
                }
                if let Some(a) = is_swing(lattice, p, q) {
                    let step = Step::new(StepKind::Swing, p, q).with_witness(Witness::LowerCover(a));
                    sps_moves[i].push((j, step));
                    psc_moves[i].push((j, step));
                }
                if i != j {
                    if let Some(cell) = is_cell_perspective(lattice, p, q) {
                        psc_moves[i].push((
                            j,
                            Step::new(StepKind::CellPerspective, p, q).with_witness(Witness::Cell(cell)),
                        ));
                    }
                }
                if let Some(m3) = is_switch(lattice, p, q) {
                    let step = Step::new(StepKind::Switch, p, q).with_witness(Witness::M3(m3));
                    psc_moves[i].push((j, step));
                    switches[i].push((j, step));
                }
                if i != j {
                    if is_prime_persp_up(lattice, p, q) {
                        pp_moves[i].push((j, Step::new(StepKind::PrimePerspUp, p, q)));
                    } else if is_prime_persp_down(lattice, p, q) {
                        pp_moves[i].push((j, Step::new(StepKind::PrimePerspDown, p, q)));
                    }
                }
            }
        }
        for moves in sps_moves.iter_mut().chain(psc_moves.iter_mut()) {
            moves.sort_by_key(|(j, s)| (*j, s.kind));
        }
        StepGraph {
            lattice,
            primes,
            up,
            sps_moves,
            psc_moves,
            pp_moves,
            switches,
            sps_trees: (0..n).map(|_| OnceLock::new()).collect(),
        }
    }

    pub fn lattice(&self) -> &Lattice {
        self.lattice
    }

    pub fn primes(&self) -> &[PrimeInterval] {
        &self.primes
    }

    pub fn index(&self, p: PrimeInterval) -> Option<usize> {
        self.primes.binary_search(&p).ok()
    }

    /// Every swing of the lattice with its witness.
    pub fn swings(&self) -> impl Iterator<Item = &Step> {
        self.sps_moves
            .iter()
            .flat_map(|m| m.iter().map(|(_, s)| s))
            .filter(|s| s.kind == StepKind::Swing)
    }

    fn sps_tree(&self, s: usize) -> &Tree {
        self.sps_trees[s].get_or_init(|| {
            let p = self.primes[s];
            let seeds = self.up[s]
                .iter()
                .map(|&r| {
                    let step = Step::new(StepKind::UpPerspective, p, self.primes[r]);
                    (
                        r,
                        Link {
                            prev: None,
                            step: Some(step),
                        },
                    )
                })
                .collect();
            bfs(self.primes.len(), seeds, |x| some_steps(&self.sps_moves[x]))
        })
    }

    /// Targets `q` with `primes[s]` SPS projective to `q`.
    pub fn sps_reachable(&self, s: usize) -> Vec<bool> {
        self.sps_tree(s).iter().map(Option::is_some).collect()
    }

    pub fn sps_sequence(&self, s: usize, t: usize) -> Option<StepSequence> {
        if s == t {
            return Some(StepSequence::default());
        }
        path(self.sps_tree(s), t).map(|steps| StepSequence { steps })
    }

    fn rooted(&self, s: usize, moves: &[Vec<(usize, Step)>]) -> Tree {
        let seed = Link {
            prev: None,
            step: None,
        };
        bfs(self.primes.len(), vec![(s, seed)], |x| some_steps(&moves[x]))
    }

    pub fn psc_reachable(&self, s: usize) -> Vec<bool> {
        self.rooted(s, &self.psc_moves)
            .iter()
            .map(Option::is_some)
            .collect()
    }

    pub fn psc_sequence(&self, s: usize, t: usize) -> Option<StepSequence> {
        path(&self.rooted(s, &self.psc_moves), t).map(|steps| StepSequence { steps })
    }

    /// [`StepGraph::psc_sequence`] for every target at once.
    pub fn psc_sequences_from(&self, s: usize) -> Vec<Option<StepSequence>> {
        all_paths(&self.rooted(s, &self.psc_moves))
    }

    pub fn pp_reachable(&self, s: usize) -> Vec<bool> {
        self.rooted(s, &self.pp_moves)
            .iter()
            .map(Option::is_some)
            .collect()
    }

    pub fn pp_sequence(&self, s: usize, t: usize) -> Option<StepSequence> {
        path(&self.rooted(s, &self.pp_moves), t).map(|steps| StepSequence { steps })
    }

    pub fn pp_sequences_from(&self, s: usize) -> Vec<Option<StepSequence>> {
        all_paths(&self.rooted(s, &self.pp_moves))
    }

    /// Alternating search: state `2k` means prime `k` in the role of some
    /// `p_j`, state `2k + 1` the role of some `q_j`. SPS projectivity leads
    /// from the first kind to the second and switches lead back. SPS edges
    /// carry no step; their segments are rebuilt from the SPS trees.
    fn gsl_tree(&self, s: usize) -> Tree {
        let n = self.primes.len();
        let seed = Link {
            prev: None,
            step: None,
        };
        bfs(2 * n, vec![(2 * s, seed)], |state| {
            let k = state / 2;
            if state % 2 == 0 {
                self.sps_reachable(k)
                    .iter()
                    .enumerate()
                    .filter(|(_, &r)| r)
                    .map(|(t, _)| (2 * t + 1, None))
                    .collect()
            } else {
                self.switches[k]
                    .iter()
                    .map(|&(t, step)| (2 * t, Some(step)))
                    .collect()
            }
        })
    }

    pub fn gsl_reachable_set(&self, s: usize) -> Vec<bool> {
        let tree = self.gsl_tree(s);
        (0..self.primes.len()).map(|t| tree[2 * t + 1].is_some()).collect()
    }

    pub fn gsl_witness(&self, s: usize, t: usize) -> Option<GslWitness> {
        self.gsl_witness_in(&self.gsl_tree(s), t)
    }

    pub fn gsl_witnesses_from(&self, s: usize) -> Vec<Option<GslWitness>> {
        let tree = self.gsl_tree(s);
        (0..self.primes.len())
            .map(|t| self.gsl_witness_in(&tree, t))
            .collect()
    }

    fn gsl_witness_in(&self, tree: &Tree, t: usize) -> Option<GslWitness> {
        let mut states = vec![2 * t + 1];
        let mut cur = 2 * t + 1;
        tree[cur]?;
        while let Some(prev) = tree[cur].and_then(|l| l.prev) {
            states.push(prev);
            cur = prev;
        }
        states.reverse();
        let mut sps = Vec::new();
        let mut switches = Vec::new();
        for pair in states.windows(2) {
            let (a, b) = (pair[0], pair[1]);
            if a % 2 == 0 {
                sps.push(self.sps_sequence(a / 2, b / 2).expect("reachable by construction"));
            } else {
                let step = tree[b].and_then(|l| l.step).expect("switch edge carries its step");
                switches.push(step);
            }
        }
        Some(GslWitness { sps, switches })
    }
}

fn indices(g: &StepGraph, p: PrimeInterval, q: PrimeInterval) -> Option<(usize, usize)> {
    Some((g.index(p)?, g.index(q)?))
}

/// A shortest SPS sequence from `p` to `q`, empty when `p = q`.
pub fn sps_projective(l: &Lattice, p: PrimeInterval, q: PrimeInterval) -> Option<StepSequence> {
    let g = StepGraph::new(l);
    let (s, t) = indices(&g, p, q)?;
    g.sps_sequence(s, t)
}

/// A shortest chain of cell-perspectivities, swings and switches.
pub fn psc_sequence(l: &Lattice, p: PrimeInterval, q: PrimeInterval) -> Option<StepSequence> {
    let g = StepGraph::new(l);
    let (s, t) = indices(&g, p, q)?;
    g.psc_sequence(s, t)
}

pub fn gsl_reachable(l: &Lattice, p: PrimeInterval, q: PrimeInterval) -> Option<GslWitness> {
    let g = StepGraph::new(l);
    let (s, t) = indices(&g, p, q)?;
    g.gsl_witness(s, t)
}

/// Prime intervals reachable from `p` by prime-perspectivities, `p` included.
pub fn prime_projectivity_closure(l: &Lattice, p: PrimeInterval) -> BTreeSet<PrimeInterval> {
    let g = StepGraph::new(l);
    let Some(s) = g.index(p) else {
        return BTreeSet::new();
    };
    g.pp_reachable(s)
        .iter()
        .zip(g.primes())
        .filter(|(r, _)| **r)
        .map(|(_, &q)| q)
        .collect()
}

pub fn prime_projectivity_sequence(l: &Lattice, p: PrimeInterval, q: PrimeInterval) -> Option<StepSequence> {
    let g = StepGraph::new(l);
    let (s, t) = indices(&g, p, q)?;
    g.pp_sequence(s, t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::catalog::{self, s7_labels::*};

    fn pi(a: usize, b: usize) -> PrimeInterval {
        PrimeInterval::new(a, b)
    }

    #[test]
    fn pp_closures() {
        let c3 = catalog::chain(3);
        assert_eq!(prime_projectivity_closure(&c3, pi(0, 1)), [pi(0, 1)].into());
        let b2 = catalog::grid(2, 2);
        assert_eq!(
            prime_projectivity_closure(&b2, pi(0, 1)),
            [pi(0, 1), pi(2, 3)].into()
        );
        let m3 = catalog::m_n(3);
        for p in m3.prime_intervals() {
            assert_eq!(prime_projectivity_closure(&m3, p).len(), 6);
        }
    }

    #[test]
    fn sps_examples() {
        let s = catalog::s7();
        assert_eq!(sps_projective(&s, pi(X, I), pi(X, I)), Some(StepSequence::default()));
        let seq = sps_projective(&s, pi(X, I), pi(A, I)).unwrap();
        let kinds: Vec<StepKind> = seq.steps.iter().map(|s| s.kind).collect();
        assert_eq!(kinds, vec![StepKind::UpPerspective, StepKind::Swing]);
        assert_eq!(seq.steps[0].from, seq.steps[0].to);
        assert!(seq.certifies(&s, pi(X, I), pi(A, I), Discipline::Sps));
        let b2 = catalog::grid(2, 2);
        assert_eq!(sps_projective(&b2, pi(0, 1), pi(0, 2)), None);
    }

    #[test]
    fn psc_examples() {
        let m3 = catalog::m_n(3);
        let seq = psc_sequence(&m3, pi(0, 1), pi(2, 4)).unwrap();
        assert_eq!(seq.len(), 1);
        assert_eq!(seq.steps[0].kind, StepKind::Switch);
        assert!(psc_sequence(&m3, pi(0, 1), pi(0, 1)).unwrap().is_empty());
        let b2 = catalog::grid(2, 2);
        let seq = psc_sequence(&b2, pi(0, 1), pi(2, 3)).unwrap();
        assert_eq!(seq.len(), 1);
        assert_eq!(seq.steps[0].kind, StepKind::CellPerspective);
    }

    #[test]
    fn gsl_examples() {
        let m3 = catalog::m_n(3);
        let w = gsl_reachable(&m3, pi(0, 1), pi(0, 1)).unwrap();
        assert_eq!((w.sps.len(), w.switches.len()), (1, 0));
        assert!(w.sps[0].is_empty());

        let w = gsl_reachable(&m3, pi(0, 1), pi(0, 2)).unwrap();
        assert!(w.certifies(&m3, pi(0, 1), pi(0, 2)));
        // up to [3, 4], then down to [0, 2]: no switch needed
        assert!(w.switches.is_empty());
        assert_eq!(w.sps[0].len(), 2);

        // B2 with an eye in its cell.
        let eyed = Lattice::new(5, &[(0, 1), (0, 2), (1, 3), (2, 3), (0, 4), (4, 3)]).unwrap();
        let w = gsl_reachable(&eyed, pi(0, 1), pi(4, 3)).unwrap();
        assert!(w.certifies(&eyed, pi(0, 1), pi(4, 3)));

        let b2 = catalog::grid(2, 2);
        assert!(gsl_reachable(&b2, pi(0, 1), pi(0, 2)).is_none());
    }

    #[test]
    fn pp_sequences_certify() {
        let s = catalog::s7();
        for p in s.prime_intervals() {
            for q in prime_projectivity_closure(&s, p) {
                let seq = prime_projectivity_sequence(&s, p, q).unwrap();
                assert!(seq.certifies(&s, p, q, Discipline::PrimeProjective));
            }
        }
    }
}
