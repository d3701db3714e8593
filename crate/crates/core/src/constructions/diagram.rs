use crate::error::{Error, Result};
use crate::lattice::Lattice;

/// A planar diagram: a lattice whose cover lists are ordered left to right.
#[derive(Clone, Debug, PartialEq)]
pub struct Diagram {
    lower: Vec<Vec<usize>>,
    upper: Vec<Vec<usize>>,
    lattice: Lattice,
}

impl Diagram {
    /// Builds a diagram from ordered cover lists; the lattice is marked planar.
    pub fn from_ordered(lower: Vec<Vec<usize>>, upper: Vec<Vec<usize>>) -> Result<Diagram> {
        let covers: Vec<(usize, usize)> = upper
            .iter()
            .enumerate()
            .flat_map(|(a, ups)| ups.iter().map(move |&b| (a, b)))
            .collect();
        let lattice = Lattice::new(upper.len(), &covers)?.with_planar(true);
        for x in lattice.elements() {
            let mut l = lower[x].clone();
            l.sort_unstable();
            let mut u = upper[x].clone();
            u.sort_unstable();
            if l != lattice.lower_covers(x) || u != lattice.upper_covers(x) {
                return Err(Error::PreconditionViolated(format!(
                    "cover lists of {x} are inconsistent"
                )));
            }
        }
        Ok(Diagram { lower, upper, lattice })
    }

    pub fn chain(n: usize) -> Diagram {
        Diagram::grid(n, 1)
    }

    /// The grid `C_m × C_n` with the same ids as [`catalog::grid`]; the first
    /// coordinate grows to the upper left.
    ///
    /// [`catalog::grid`]: crate::lattice::catalog::grid
    pub fn grid(m: usize, n: usize) -> Diagram {
        assert!(m >= 1 && n >= 1, "grid sides must be positive");
        let id = |a: usize, b: usize| a * n + b;
        let mut lower = vec![Vec::new(); m * n];
        let mut upper = vec![Vec::new(); m * n];
        for a in 0..m {
            for b in 0..n {
                let x = id(a, b);
                if a + 1 < m {
                    upper[x].push(id(a + 1, b));
                }
                if b + 1 < n {
                    upper[x].push(id(a, b + 1));
                }
                if b > 0 {
                    lower[x].push(id(a, b - 1));
                }
                if a > 0 {
                    lower[x].push(id(a - 1, b));
                }
            }
        }
        Diagram::from_ordered(lower, upper).expect("grids are planar lattices")
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn into_lattice(self) -> Lattice {
        self.lattice
    }

    pub fn lower(&self, x: usize) -> &[usize] {
        &self.lower[x]
    }

    pub fn upper(&self, x: usize) -> &[usize] {
        &self.upper[x]
    }

    /// 4-cells `(o, v, w, i)` of the diagram with `v` to the left of `w`.
    pub fn cells(&self) -> Vec<[usize; 4]> {
        let mut out = Vec::new();
        for o in self.lattice.elements() {
            for pair in self.upper[o].windows(2) {
                let (v, w) = (pair[0], pair[1]);
                let i = self.lattice.join(v, w);
                if self.lattice.is_four_cell([o, v, w, i]) {
                    out.push([o, v, w, i]);
                }
            }
        }
        out
    }

    fn oriented(&self, cell: [usize; 4]) -> Option<[usize; 4]> {
        let [o, v, w, i] = cell;
        if !self.lattice.is_four_cell(cell) {
            return None;
        }
        let ups = &self.upper[o];
        let pv = ups.iter().position(|&x| x == v)?;
        let pw = ups.iter().position(|&x| x == w)?;
        match pw.checked_sub(pv) {
            Some(1) => Some([o, v, w, i]),
            _ if pv == pw + 1 => Some([o, w, v, i]),
            _ => None,
        }
    }
}

fn replace(list: &mut [usize], old: usize, new: usize) {
    let slot = list.iter_mut().find(|x| **x == old).expect("cover is listed");
    *slot = new;
}

fn common_lower_cover(lower: &[Vec<usize>], a: usize, b: usize) -> Option<usize> {
    lower[a].iter().copied().find(|x| lower[b].contains(x))
}

/// Adds a fork to the 4-cell `cell` of `diag`.
///
/// A new element `s` goes inside the cell below its top. Then, walking down
/// to the left from the left side and to the right from the right side, every
/// edge on the lower boundary of the next 4-cell is subdivided by a new
/// element covered by the previous one, until the walk leaves the diagram.
/// The result is rechecked to be a slim semimodular lattice.
pub fn fork_insert(diag: &Diagram, cell: [usize; 4]) -> Result<Diagram> {
    let [o, v, w, i] = diag.oriented(cell).ok_or(Error::NotAFourCell(cell))?;
    let mut lower = diag.lower.clone();
    let mut upper = diag.upper.clone();
    let s = lower.len();
    lower.push(Vec::new());
    upper.push(Vec::new());
    let at = lower[i].iter().position(|&x| x == w).expect("w covered by i");
    lower[i].insert(at, s);
    upper[s].push(i);

    for left in [true, false] {
        let (mut c, mut d) = (o, if left { v } else { w });
        let mut prev = s;
        loop {
            let t = lower.len();
            lower.push(vec![c]);
            upper.push(Vec::new());
            replace(&mut upper[c], d, t);
            replace(&mut lower[d], c, t);
            if left {
                upper[t] = vec![d, prev];
                lower[prev].insert(0, t);
            } else {
                upper[t] = vec![prev, d];
                lower[prev].push(t);
            }
            let pos = lower[d].iter().position(|&x| x == t).expect("just inserted");
            let next = if left {
                pos.checked_sub(1).map(|p| lower[d][p])
            } else {
                lower[d].get(pos + 1).copied()
            };
            let Some(c2) = next else { break };
            let b = common_lower_cover(&lower, c, c2).ok_or_else(|| {
                Error::ValidationFailed(format!("{c} and {c2} have no common lower cover"))
            })?;
            prev = t;
            c = b;
            d = c2;
        }
    }

    let out = Diagram::from_ordered(lower, upper)?;
    let l = &out.lattice;
    if !l.is_semimodular() || !l.is_slim() {
        return Err(Error::ValidationFailed(
            "fork insertion did not yield a slim semimodular lattice".into(),
        ));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{catalog, iso};

    #[test]
    fn grid_matches_catalog() {
        for (m, n) in [(1, 1), (2, 2), (3, 2), (3, 4)] {
            assert_eq!(Diagram::grid(m, n).lattice(), &catalog::grid(m, n).with_planar(true));
        }
        assert_eq!(Diagram::grid(2, 2).cells(), vec![[0, 2, 1, 3]]);
        assert_eq!(Diagram::grid(3, 3).cells().len(), 4);
        assert!(Diagram::chain(4).cells().is_empty());
    }

    #[test]
    fn fork_in_the_square_is_s7() {
        let d = fork_insert(&Diagram::grid(2, 2), [0, 1, 2, 3]).unwrap();
        assert_eq!(d.lattice().len(), 7);
        assert!(iso::is_isomorphic(d.lattice(), &catalog::s7()));
        assert!(d.lattice().planar_asserted());
    }

    #[test]
    fn forks_in_larger_grids() {
        let g = Diagram::grid(3, 3);
        for cell in g.cells() {
            let d = fork_insert(&g, cell).unwrap();
            let l = d.lattice();
            assert!(l.is_slim() && l.is_semimodular());
            assert!(l.len() > 9);
            // the forked cell alone splits into three
            assert!(d.cells().len() > g.cells().len());
        }
        let d = fork_insert(&g, g.cells()[0]).unwrap();
        let again = fork_insert(&d, d.cells()[d.cells().len() - 1]).unwrap();
        assert!(again.lattice().is_slim());
    }

    #[test]
    fn rejects_non_cells() {
        let g = Diagram::grid(3, 3);
        assert!(matches!(fork_insert(&g, [0, 1, 2, 4]), Err(Error::NotAFourCell(_))));
        assert!(matches!(
            fork_insert(&Diagram::chain(3), [0, 1, 1, 2]),
            Err(Error::NotAFourCell(_))
        ));
    }
}
