//! Finite lattices given by their covering relation.
//!
//! A [`Lattice`] is built from an element count and a list of cover pairs
//! `(a, b)` meaning `a ≺ b`. Construction derives the order relation and the
//! full join and meet tables, and rejects inputs that are not lattices.
//! Values are immutable afterwards; every other module only reads them.

pub mod catalog;
pub mod iso;

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A covering pair `lo ≺ hi`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "[usize; 2]", into = "[usize; 2]")]
pub struct PrimeInterval {
    pub lo: usize,
    pub hi: usize,
}

impl PrimeInterval {
    pub fn new(lo: usize, hi: usize) -> Self {
        PrimeInterval { lo, hi }
    }

    pub fn contains(&self, x: usize) -> bool {
        self.lo == x || self.hi == x
    }

    pub fn as_interval(&self) -> Interval {
        Interval {
            lo: self.lo,
            hi: self.hi,
            elements: vec![self.lo.min(self.hi), self.lo.max(self.hi)],
        }
    }
}

impl From<[usize; 2]> for PrimeInterval {
    fn from(p: [usize; 2]) -> Self {
        PrimeInterval::new(p[0], p[1])
    }
}

impl From<PrimeInterval> for [usize; 2] {
    fn from(p: PrimeInterval) -> Self {
        [p.lo, p.hi]
    }
}

impl fmt::Display for PrimeInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.lo, self.hi)
    }
}

/// A closed interval `[lo, hi]` together with its members.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Interval {
    pub lo: usize,
    pub hi: usize,
    pub elements: Vec<usize>,
}

impl Interval {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.binary_search(&x).is_ok()
    }
}

/// On-disk form of a lattice.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeFile {
    pub n: usize,
    pub covers: Vec<[usize; 2]>,
    #[serde(default)]
    pub planar_asserted: bool,
}

#[derive(Clone, PartialEq, Eq)]
pub struct Lattice {
    n: usize,
    covers: Vec<(usize, usize)>,
    leq: Vec<bool>,
    join: Vec<usize>,
    meet: Vec<usize>,
    lower: Vec<Vec<usize>>,
    upper: Vec<Vec<usize>>,
    height: Vec<usize>,
    bottom: usize,
    top: usize,
    planar_asserted: bool,
}

impl fmt::Debug for Lattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Lattice")
            .field("n", &self.n)
            .field("covers", &self.covers)
            .field("planar_asserted", &self.planar_asserted)
            .finish()
    }
}

impl Lattice {
    /// Validates the covering relation and derives order, join and meet.
    pub fn new(n: usize, covers: &[(usize, usize)]) -> Result<Lattice> {
        if n == 0 {
            return Err(Error::NotALattice("the empty poset has no bottom".into()));
        }
        let mut seen = HashSet::with_capacity(covers.len());
        for &(a, b) in covers {
            for x in [a, b] {
                if x >= n {
                    return Err(Error::ElementOutOfRange(x, n));
                }
            }
            if a == b {
                return Err(Error::NotAPoset(format!("self-cover at {a}")));
            }
            if !seen.insert((a, b)) {
                return Err(Error::DuplicateCover(a, b));
            }
        }
        let mut sorted: Vec<(usize, usize)> = covers.to_vec();
        sorted.sort_unstable();

        let mut upper = vec![Vec::new(); n];
        let mut lower = vec![Vec::new(); n];
        for &(a, b) in &sorted {
            upper[a].push(b);
            lower[b].push(a);
        }

        // Kahn's algorithm; leftovers mean a cycle.
        let mut indeg: Vec<usize> = lower.iter().map(Vec::len).collect();
        let mut queue: VecDeque<usize> = (0..n).filter(|&x| indeg[x] == 0).collect();
        let mut topo = Vec::with_capacity(n);
        while let Some(x) = queue.pop_front() {
            topo.push(x);
            for &y in &upper[x] {
                indeg[y] -= 1;
                if indeg[y] == 0 {
                    queue.push_back(y);
                }
            }
        }
        if topo.len() != n {
            return Err(Error::NotAPoset("the covering relation has a cycle".into()));
        }

        let mut leq = vec![false; n * n];
        for &x in topo.iter().rev() {
            leq[x * n + x] = true;
            for &y in &upper[x] {
                for z in 0..n {
                    if leq[y * n + z] {
                        leq[x * n + z] = true;
                    }
                }
            }
        }

        for &(a, b) in &sorted {
            if let Some(_c) = (0..n).find(|&c| c != a && c != b && leq[a * n + c] && leq[c * n + b]) {
                return Err(Error::RedundantCover(a, b));
            }
        }

        let mut height = vec![0usize; n];
        for &x in &topo {
            for &y in &upper[x] {
                height[y] = height[y].max(height[x] + 1);
            }
        }

        let le = |a: usize, b: usize| leq[a * n + b];
        let mut join = vec![0usize; n * n];
        let mut meet = vec![0usize; n * n];
        for a in 0..n {
            for b in a..n {
                let ubs: Vec<usize> = (0..n).filter(|&c| le(a, c) && le(b, c)).collect();
                let lub = ubs.iter().copied().find(|&c| ubs.iter().all(|&d| le(c, d)));
                let Some(lub) = lub else {
                    return Err(Error::NotALattice(format!(
                        "{a} and {b} have no least upper bound"
                    )));
                };
                let lbs: Vec<usize> = (0..n).filter(|&c| le(c, a) && le(c, b)).collect();
                let glb = lbs.iter().copied().find(|&c| lbs.iter().all(|&d| le(d, c)));
                let Some(glb) = glb else {
                    return Err(Error::NotALattice(format!(
                        "{a} and {b} have no greatest lower bound"
                    )));
                };
                join[a * n + b] = lub;
                join[b * n + a] = lub;
                meet[a * n + b] = glb;
                meet[b * n + a] = glb;
            }
        }
        let bottom = (0..n).fold(0, |acc, x| meet[acc * n + x]);
        let top = (0..n).fold(0, |acc, x| join[acc * n + x]);

        Ok(Lattice {
            n,
            covers: sorted,
            leq,
            join,
            meet,
            lower,
            upper,
            height,
            bottom,
            top,
            planar_asserted: false,
        })
    }

    pub fn with_planar(mut self, planar: bool) -> Lattice {
        self.planar_asserted = planar;
        self
    }

    pub fn planar_asserted(&self) -> bool {
        self.planar_asserted
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.n + b]
    }

    #[inline]
    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b)
    }

    #[inline]
    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.leq(a, b) || self.leq(b, a)
    }

    #[inline]
    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.n + b]
    }

    #[inline]
    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.n + b]
    }

    pub fn join_all(&self, xs: impl IntoIterator<Item = usize>) -> usize {
        xs.into_iter().fold(self.bottom, |acc, x| self.join(acc, x))
    }

    pub fn meet_all(&self, xs: impl IntoIterator<Item = usize>) -> usize {
        xs.into_iter().fold(self.top, |acc, x| self.meet(acc, x))
    }

    /// `b` covers `a`.
    pub fn is_cover(&self, a: usize, b: usize) -> bool {
        self.upper[a].binary_search(&b).is_ok()
    }

    pub fn lower_covers(&self, x: usize) -> &[usize] {
        &self.lower[x]
    }

    pub fn upper_covers(&self, x: usize) -> &[usize] {
        &self.upper[x]
    }

    /// Length of the longest chain from the bottom to `x`.
    pub fn height(&self, x: usize) -> usize {
        self.height[x]
    }

    pub fn is_join_irreducible(&self, x: usize) -> bool {
        self.lower[x].len() == 1
    }

    pub fn is_meet_irreducible(&self, x: usize) -> bool {
        self.upper[x].len() == 1
    }

    pub fn is_doubly_irreducible(&self, x: usize) -> bool {
        self.is_join_irreducible(x) && self.is_meet_irreducible(x)
    }

    pub fn prime(&self, lo: usize, hi: usize) -> Result<PrimeInterval> {
        let p = PrimeInterval::new(lo, hi);
        if lo < self.n && hi < self.n && self.is_cover(lo, hi) {
            Ok(p)
        } else {
            Err(Error::not_prime(p))
        }
    }

    pub fn is_prime(&self, p: PrimeInterval) -> bool {
        p.lo < self.n && p.hi < self.n && self.is_cover(p.lo, p.hi)
    }

    /// All prime intervals in lexicographic order.
    pub fn prime_intervals(&self) -> Vec<PrimeInterval> {
        self.covers
            .iter()
            .map(|&(a, b)| PrimeInterval::new(a, b))
            .collect()
    }

    pub fn interval(&self, lo: usize, hi: usize) -> Option<Interval> {
        if !self.leq(lo, hi) {
            return None;
        }
        let elements = (0..self.n)
            .filter(|&x| self.leq(lo, x) && self.leq(x, hi))
            .collect();
        Some(Interval { lo, hi, elements })
    }

    /// Cover criterion: `a ∧ b ≺ a` implies `b ≺ a ∨ b`.
    pub fn is_semimodular(&self) -> bool {
        self.elements().all(|a| {
            self.elements().all(|b| {
                let m = self.meet(a, b);
                !self.is_cover(m, a) || self.is_cover(b, self.join(a, b))
            })
        })
    }

    /// No three pairwise incomparable elements span an `M3` sublattice.
    pub fn is_slim(&self) -> bool {
        self.find_m3().is_none()
    }

    /// Some `M3` sublattice `[bottom, a, b, c, top]`, if one exists.
    pub fn find_m3(&self) -> Option<[usize; 5]> {
        let n = self.n;
        for a in 0..n {
            for b in a + 1..n {
                if self.comparable(a, b) {
                    continue;
                }
                let j = self.join(a, b);
                let m = self.meet(a, b);
                for c in b + 1..n {
                    if self.comparable(a, c) || self.comparable(b, c) {
                        continue;
                    }
                    if self.join(a, c) == j
                        && self.join(b, c) == j
                        && self.meet(a, c) == m
                        && self.meet(b, c) == m
                    {
                        return Some([m, a, b, c, j]);
                    }
                }
            }
        }
        None
    }

    /// Covering squares `(o, v, w, i)` with `v < w` whose interval has
    /// exactly four elements.
    pub fn four_cells(&self) -> Vec<[usize; 4]> {
        let mut cells = Vec::new();
        for o in self.elements() {
            let ups = &self.upper[o];
            for (k, &v) in ups.iter().enumerate() {
                for &w in &ups[k + 1..] {
                    if let Some(cell) = self.cell_on(o, v, w) {
                        cells.push(cell);
                    }
                }
            }
        }
        cells.sort_unstable();
        cells
    }

    fn cell_on(&self, o: usize, v: usize, w: usize) -> Option<[usize; 4]> {
        let i = self.join(v, w);
        if !(self.is_cover(v, i) && self.is_cover(w, i) && self.meet(v, w) == o) {
            return None;
        }
        let size = self
            .elements()
            .filter(|&x| self.leq(o, x) && self.leq(x, i))
            .count();
        (size == 4).then_some([o, v, w, i])
    }

    /// True if `(o, v, w, i)` (in either side order) is a 4-cell.
    pub fn is_four_cell(&self, cell: [usize; 4]) -> bool {
        let [o, v, w, i] = cell;
        if cell.iter().any(|&x| x >= self.n) || v == w {
            return false;
        }
        self.is_cover(o, v)
            && self.is_cover(o, w)
            && self.cell_on(o, v, w).is_some_and(|c| c[3] == i)
    }

    /// Intervals isomorphic to some `M_k` with `k ≥ 3`.
    pub fn covering_multidiamonds(&self) -> Vec<Interval> {
        let mut out = Vec::new();
        for o in self.elements() {
            let tops: BTreeSet<usize> = self.upper[o]
                .iter()
                .flat_map(|&t| self.upper[t].iter().copied())
                .collect();
            for i in tops {
                if let Some(iv) = self.multidiamond(o, i) {
                    out.push(iv);
                }
            }
        }
        out
    }

    /// `[o, i]` when it is a covering multi-diamond.
    pub fn multidiamond(&self, o: usize, i: usize) -> Option<Interval> {
        let iv = self.interval(o, i)?;
        let atoms = iv.len().checked_sub(2)?;
        if atoms < 3 || o == i {
            return None;
        }
        let ok = iv
            .elements
            .iter()
            .filter(|&&x| x != o && x != i)
            .all(|&x| self.is_cover(o, x) && self.is_cover(x, i));
        ok.then_some(iv)
    }

    /// Doubly-irreducible atoms of covering multi-diamonds.
    pub fn tabs(&self) -> Vec<usize> {
        self.elements().filter(|&m| self.is_tab(m)).collect()
    }

    pub fn is_tab(&self, m: usize) -> bool {
        m < self.n
            && self.is_doubly_irreducible(m)
            && self
                .multidiamond(self.lower[m][0], self.upper[m][0])
                .is_some()
    }

    /// Closure of `seed` under join and meet, sorted.
    pub fn generate(&self, seed: &[usize]) -> Vec<usize> {
        let mut members: BTreeSet<usize> = seed.iter().copied().collect();
        let mut frontier: Vec<usize> = members.iter().copied().collect();
        while let Some(x) = frontier.pop() {
            let current: Vec<usize> = members.iter().copied().collect();
            for y in current {
                for z in [self.join(x, y), self.meet(x, y)] {
                    if members.insert(z) {
                        frontier.push(z);
                    }
                }
            }
        }
        members.into_iter().collect()
    }

    pub fn is_sublattice(&self, elements: &[usize]) -> bool {
        if elements.is_empty() || elements.iter().any(|&x| x >= self.n) {
            return false;
        }
        let set: HashSet<usize> = elements.iter().copied().collect();
        elements.iter().all(|&a| {
            elements
                .iter()
                .all(|&b| set.contains(&self.join(a, b)) && set.contains(&self.meet(a, b)))
        })
    }

    /// The sublattice on `elements`, renumbered by ascending id. The returned
    /// vector maps each new id back to its id in `self`.
    pub fn sublattice(&self, elements: &[usize]) -> Result<(Lattice, Vec<usize>)> {
        let mut keep: Vec<usize> = elements.to_vec();
        keep.sort_unstable();
        keep.dedup();
        if !self.is_sublattice(&keep) {
            return Err(Error::NotASublattice(keep));
        }
        let mut index = vec![usize::MAX; self.n];
        for (k, &x) in keep.iter().enumerate() {
            index[x] = k;
        }
        let mut covers = Vec::new();
        for &a in &keep {
            for &b in &keep {
                if self.lt(a, b)
                    && !keep
                        .iter()
                        .any(|&c| c != a && c != b && self.leq(a, c) && self.leq(c, b))
                {
                    covers.push((index[a], index[b]));
                }
            }
        }
        let sub = Lattice::new(keep.len(), &covers)?.with_planar(self.planar_asserted);
        Ok((sub, keep))
    }

    /// `L − {m}` for a doubly-irreducible `m`.
    pub fn remove_doubly_irreducible(&self, m: usize) -> Result<(Lattice, Vec<usize>)> {
        if m >= self.n || !self.is_doubly_irreducible(m) {
            return Err(Error::PreconditionViolated(format!(
                "element {m} is not doubly irreducible"
            )));
        }
        let keep: Vec<usize> = self.elements().filter(|&x| x != m).collect();
        self.sublattice(&keep)
    }

    pub fn to_file(&self) -> LatticeFile {
        LatticeFile {
            n: self.n,
            covers: self.covers.iter().map(|&(a, b)| [a, b]).collect(),
            planar_asserted: self.planar_asserted,
        }
    }

    pub fn from_file(file: &LatticeFile) -> Result<Lattice> {
        let covers: Vec<(usize, usize)> = file.covers.iter().map(|c| (c[0], c[1])).collect();
        Ok(Lattice::new(file.n, &covers)?.with_planar(file.planar_asserted))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_file()).expect("lattice file serializes")
    }

    pub fn from_json(s: &str) -> Result<Lattice> {
        let file: LatticeFile = serde_json::from_str(s)?;
        Lattice::from_file(&file)
    }
}
