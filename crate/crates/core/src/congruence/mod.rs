//! Congruences of finite lattices.
//!
//! This is the ground truth the projectivity searches are checked against:
//! principal congruences are computed by closing a partition under the
//! substitution property until nothing changes.

mod coloring;

pub use coloring::{
    extend_quasicoloring_for_eye, natural_quasicoloring, ColoringViolation, QuasiColoring,
};

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{Lattice, PrimeInterval};

/// Default bound on the size of a computed congruence lattice.
pub const DEFAULT_MEMBER_LIMIT: usize = 10_000;

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false when `a` and `b` were already together.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }

    fn into_partition(mut self) -> Congruence {
        let n = self.parent.len();
        let mut least = vec![usize::MAX; n];
        let rep = (0..n)
            .map(|x| {
                let r = self.find(x);
                if least[r] == usize::MAX {
                    least[r] = x;
                }
                least[r]
            })
            .collect();
        Congruence { rep }
    }
}

/// A partition of `0..n`, stored as the least member of each element's
/// block. Equal partitions are equal values.
///
/// Values built by [`principal_congruence`], [`generate`] and friends are
/// congruences; [`Congruence::from_blocks`] accepts arbitrary candidates.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Congruence {
    rep: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CongruenceFile {
    pub blocks: Vec<Vec<usize>>,
}

impl Congruence {
    pub fn identity(n: usize) -> Self {
        Congruence {
            rep: (0..n).collect(),
        }
    }

    pub fn full(n: usize) -> Self {
        Congruence { rep: vec![0; n] }
    }

    /// An equivalence from explicit blocks; elements not listed are
    /// singletons. Not checked for the substitution property.
    pub fn from_blocks(n: usize, blocks: &[Vec<usize>]) -> Result<Self> {
        let mut uf = UnionFind::new(n);
        let mut seen = vec![false; n];
        for block in blocks {
            for &x in block {
                if x >= n {
                    return Err(Error::ElementOutOfRange(x, n));
                }
                if seen[x] {
                    return Err(Error::Parse(format!("element {x} appears in two blocks")));
                }
                seen[x] = true;
                uf.union(block[0], x);
            }
        }
        Ok(uf.into_partition())
    }

    /// Least element of each element's block.
    pub fn from_representatives(rep: &[usize]) -> Result<Self> {
        let n = rep.len();
        let mut uf = UnionFind::new(n);
        for (x, &r) in rep.iter().enumerate() {
            if r >= n {
                return Err(Error::ElementOutOfRange(r, n));
            }
            uf.union(x, r);
        }
        Ok(uf.into_partition())
    }

    pub fn len(&self) -> usize {
        self.rep.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rep.is_empty()
    }

    pub fn representative(&self, x: usize) -> usize {
        self.rep[x]
    }

    pub fn related(&self, x: usize, y: usize) -> bool {
        self.rep[x] == self.rep[y]
    }

    pub fn collapses(&self, p: PrimeInterval) -> bool {
        self.related(p.lo, p.hi)
    }

    pub fn block_of(&self, x: usize) -> Vec<usize> {
        let r = self.rep[x];
        (0..self.len()).filter(|&y| self.rep[y] == r).collect()
    }

    /// Blocks sorted by least element.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        let mut slot = vec![usize::MAX; self.len()];
        for x in 0..self.len() {
            let r = self.rep[x];
            if slot[r] == usize::MAX {
                slot[r] = blocks.len();
                blocks.push(Vec::new());
            }
            blocks[slot[r]].push(x);
        }
        blocks
    }

    pub fn block_count(&self) -> usize {
        (0..self.len()).filter(|&x| self.rep[x] == x).count()
    }

    pub fn is_identity(&self) -> bool {
        self.rep.iter().enumerate().all(|(x, &r)| x == r)
    }

    pub fn is_full(&self) -> bool {
        self.rep.iter().all(|&r| r == 0)
    }

    /// Refinement: every block of `self` lies inside a block of `other`.
    pub fn leq(&self, other: &Congruence) -> bool {
        (0..self.len()).all(|x| other.rep[x] == other.rep[self.rep[x]])
    }

    /// Block intersection.
    pub fn meet(&self, other: &Congruence) -> Congruence {
        let n = self.len();
        let mut uf = UnionFind::new(n);
        let mut first = std::collections::HashMap::new();
        for x in 0..n {
            let key = (self.rep[x], other.rep[x]);
            let r = *first.entry(key).or_insert(x);
            uf.union(r, x);
        }
        uf.into_partition()
    }

    /// Transitive closure of the union of the two relations.
    pub fn join_equivalence(&self, other: &Congruence) -> Congruence {
        let mut uf = UnionFind::new(self.len());
        for x in 0..self.len() {
            uf.union(x, self.rep[x]);
            uf.union(x, other.rep[x]);
        }
        uf.into_partition()
    }

    /// Pairs `(x, rep(x))` for every non-representative `x`.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rep
            .iter()
            .enumerate()
            .filter(|(x, r)| x != *r)
            .map(|(x, &r)| (r, x))
    }

    pub fn has_substitution_property(&self, l: &Lattice) -> bool {
        if self.len() != l.len() {
            return false;
        }
        self.pairs().all(|(x, y)| {
            l.elements().all(|z| {
                self.related(l.join(x, z), l.join(y, z)) && self.related(l.meet(x, z), l.meet(y, z))
            })
        })
    }

    pub fn to_file(&self) -> CongruenceFile {
        CongruenceFile {
            blocks: self.blocks(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_file()).expect("congruence serializes")
    }

    pub fn from_json(n: usize, s: &str) -> Result<Self> {
        let file: CongruenceFile = serde_json::from_str(s)?;
        Congruence::from_blocks(n, &file.blocks)
    }
}

/// The smallest congruence of `l` collapsing every pair in `pairs`.
///
/// Each merge is queued; processing a queued pair `(x, y)` merges `x∨z`
/// with `y∨z` and `x∧z` with `y∧z` for all `z`. Every block stays connected
/// by queued pairs, so the fixpoint has the substitution property.
pub fn generate(l: &Lattice, pairs: impl IntoIterator<Item = (usize, usize)>) -> Congruence {
    let n = l.len();
    let mut uf = UnionFind::new(n);
    let mut queue: Vec<(usize, usize)> = Vec::new();
    for (a, b) in pairs {
        if uf.union(a, b) {
            queue.push((a, b));
        }
    }
    while let Some((x, y)) = queue.pop() {
        for z in 0..n {
            for (s, t) in [(l.join(x, z), l.join(y, z)), (l.meet(x, z), l.meet(y, z))] {
                if uf.union(s, t) {
                    queue.push((s, t));
                }
            }
        }
    }
    uf.into_partition()
}

/// `con⟨a, b⟩`.
pub fn principal_congruence(l: &Lattice, a: usize, b: usize) -> Congruence {
    generate(l, [(a, b)])
}

pub fn prime_congruence(l: &Lattice, p: PrimeInterval) -> Congruence {
    principal_congruence(l, p.lo, p.hi)
}

/// `con⟨p⟩ ≥ con⟨q⟩`.
pub fn spreads(l: &Lattice, p: PrimeInterval, q: PrimeInterval) -> bool {
    prime_congruence(l, p).collapses(q)
}

/// Smallest congruence of `k` containing both arguments.
pub fn join_in(k: &Lattice, a: &Congruence, b: &Congruence) -> Congruence {
    let eq = a.join_equivalence(b);
    generate(k, eq.pairs().collect::<Vec<_>>())
}

/// The partition `θ` induces on a sublattice, with elements renumbered by
/// ascending id as in [`Lattice::sublattice`].
pub fn restrict(theta: &Congruence, l: &Lattice, elements: &[usize]) -> Result<Congruence> {
    let mut keep = elements.to_vec();
    keep.sort_unstable();
    keep.dedup();
    if !l.is_sublattice(&keep) {
        return Err(Error::NotASublattice(keep));
    }
    let mut uf = UnionFind::new(keep.len());
    let mut first = std::collections::HashMap::new();
    for (k, &x) in keep.iter().enumerate() {
        let r = *first.entry(theta.representative(x)).or_insert(k);
        uf.union(r, k);
    }
    Ok(uf.into_partition())
}

/// Principal congruences of all prime intervals, indexed like
/// [`Lattice::prime_intervals`].
#[derive(Clone, Debug)]
pub struct PrimeCongruences {
    pub primes: Vec<PrimeInterval>,
    pub cons: Vec<Congruence>,
}

impl PrimeCongruences {
    pub fn new(l: &Lattice) -> Self {
        let primes = l.prime_intervals();
        let cons = primes.iter().map(|&p| prime_congruence(l, p)).collect();
        PrimeCongruences { primes, cons }
    }

    pub fn index(&self, p: PrimeInterval) -> Option<usize> {
        self.primes.binary_search(&p).ok()
    }

    /// Prime `i` spreads to prime `j`.
    pub fn spreads(&self, i: usize, j: usize) -> bool {
        self.cons[i].collapses(self.primes[j])
    }
}

/// All congruences of a lattice ordered by refinement.
#[derive(Clone, Debug)]
pub struct CongruenceLattice {
    /// Sorted; the identity comes first.
    pub members: Vec<Congruence>,
    /// Indices into `members`.
    pub join_irreducibles: Vec<usize>,
}

impl CongruenceLattice {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.members[i].leq(&self.members[j])
    }

    pub fn index_of(&self, theta: &Congruence) -> Option<usize> {
        self.members.binary_search(theta).ok()
    }

    pub fn contains(&self, theta: &Congruence) -> bool {
        self.index_of(theta).is_some()
    }

    pub fn join_irreducible_members(&self) -> Vec<&Congruence> {
        self.join_irreducibles.iter().map(|&i| &self.members[i]).collect()
    }
}

pub fn congruence_lattice(l: &Lattice) -> Result<CongruenceLattice> {
    congruence_lattice_bounded(l, DEFAULT_MEMBER_LIMIT)
}

/// Join-closure of the principal congruences of covering pairs.
pub fn congruence_lattice_bounded(l: &Lattice, limit: usize) -> Result<CongruenceLattice> {
    let gens: Vec<Congruence> = PrimeCongruences::new(l)
        .cons
        .into_iter()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let mut members: BTreeSet<Congruence> = BTreeSet::new();
    let identity = Congruence::identity(l.len());
    members.insert(identity.clone());
    let mut frontier = vec![identity];
    while let Some(theta) = frontier.pop() {
        for g in &gens {
            let next = theta.join_equivalence(g);
            if !members.contains(&next) {
                if members.len() >= limit {
                    return Err(Error::SizeLimit(limit));
                }
                members.insert(next.clone());
                frontier.push(next);
            }
        }
    }
    let members: Vec<Congruence> = members.into_iter().collect();

    // Every member is a join of generators, so only a generator can be
    // join-irreducible, and it is exactly when the generators strictly below
    // it do not join up to it.
    let n = l.len();
    let mut join_irreducibles: Vec<usize> = gens
        .iter()
        .filter(|g| {
            let below = gens
                .iter()
                .filter(|h| h != g && h.leq(g))
                .fold(Congruence::identity(n), |acc, h| acc.join_equivalence(h));
            &below != *g
        })
        .map(|g| members.binary_search(g).expect("generators are members"))
        .collect();
    join_irreducibles.sort_unstable();
    Ok(CongruenceLattice {
        members,
        join_irreducibles,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::catalog::*;

    fn blocks(theta: &Congruence) -> Vec<Vec<usize>> {
        theta.blocks()
    }

    #[test]
    fn principal_examples() {
        assert!(principal_congruence(&m_n(3), 0, 1).is_full());
        assert_eq!(
            blocks(&principal_congruence(&chain(3), 0, 1)),
            vec![vec![0, 1], vec![2]]
        );
        assert_eq!(
            blocks(&principal_congruence(&grid(2, 2), 0, 1)),
            vec![vec![0, 1], vec![2, 3]]
        );
    }

    #[test]
    fn spreads_examples() {
        let m3 = m_n(3);
        for p in m3.prime_intervals() {
            for q in m3.prime_intervals() {
                assert!(spreads(&m3, p, q));
            }
        }
        let b2 = grid(2, 2);
        assert!(!spreads(&b2, PrimeInterval::new(0, 1), PrimeInterval::new(0, 2)));
        for p in b2.prime_intervals() {
            assert!(spreads(&b2, p, p));
        }
    }

    #[test]
    fn congruence_lattice_sizes() {
        let c2 = congruence_lattice(&chain(2)).unwrap();
        assert_eq!(c2.len(), 2);
        let b2 = congruence_lattice(&grid(2, 2)).unwrap();
        assert_eq!((b2.len(), b2.join_irreducibles.len()), (4, 2));
        let m3 = congruence_lattice(&m_n(3)).unwrap();
        assert_eq!((m3.len(), m3.join_irreducibles.len()), (2, 1));
        assert!(matches!(
            congruence_lattice_bounded(&chain(6), 10),
            Err(Error::SizeLimit(10))
        ));
    }

    #[test]
    fn join_irreducibles_have_one_lower_cover() {
        for l in [grid(3, 3), s7(), n5(), boolean(3), m_n(4)] {
            let con = congruence_lattice(&l).unwrap();
            let literal: Vec<usize> = (0..con.len())
                .filter(|&i| {
                    let below: Vec<usize> =
                        (0..con.len()).filter(|&j| j != i && con.leq(j, i)).collect();
                    let maximal = below
                        .iter()
                        .filter(|&&j| !below.iter().any(|&k| k != j && con.leq(j, k)))
                        .count();
                    maximal == 1
                })
                .collect();
            assert_eq!(con.join_irreducibles, literal);
        }
    }

    #[test]
    fn restriction_examples() {
        let m3 = m_n(3);
        let full = Congruence::full(5);
        assert!(restrict(&full, &m3, &[0, 2, 3, 4]).unwrap().is_full());
        assert!(restrict(&Congruence::identity(5), &m3, &[0, 1, 4])
            .unwrap()
            .is_identity());
        let r = restrict(&principal_congruence(&m3, 0, 4), &m3, &[0, 2, 4]).unwrap();
        assert_eq!(r.blocks(), vec![vec![0, 1, 2]]);
        assert!(matches!(
            restrict(&full, &m3, &[1, 2]),
            Err(Error::NotASublattice(_))
        ));
    }

    #[test]
    fn join_examples() {
        let b2 = grid(2, 2);
        let a = principal_congruence(&b2, 0, 1);
        let b = principal_congruence(&b2, 0, 2);
        assert!(join_in(&b2, &a, &b).is_full());
        assert_eq!(join_in(&b2, &a, &Congruence::identity(4)), a);
        assert_eq!(join_in(&b2, &a, &a), a);
    }

    #[test]
    fn partition_json() {
        let theta = Congruence::from_blocks(4, &[vec![3, 1]]).unwrap();
        assert_eq!(theta.to_json(), r#"{"blocks":[[0],[1,3],[2]]}"#);
        assert_eq!(Congruence::from_json(4, &theta.to_json()).unwrap(), theta);
        assert!(Congruence::from_blocks(3, &[vec![0, 1], vec![1, 2]]).is_err());
    }
}
