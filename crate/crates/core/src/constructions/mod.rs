//! Lattice-transforming constructions: eyes, tabs, forks and corpora.

mod corpus;
mod diagram;

pub use corpus::{generate_corpus, CorpusEntry, CorpusSpec, EyeRecord, ManifestEntry, Tag};
pub use diagram::{fork_insert, Diagram};

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::lattice::Lattice;

/// Inserts a new element `e = n` into the 4-cell `(o, v, w, i)`, turning it
/// into an `M3`. Returns the new lattice and `e`.
pub fn insert_eye(l: &Lattice, cell: [usize; 4]) -> Result<(Lattice, usize)> {
    if !l.is_four_cell(cell) {
        return Err(Error::NotAFourCell(cell));
    }
    let [o, _, _, i] = cell;
    let e = l.len();
    let mut covers = l.covers().to_vec();
    covers.push((o, e));
    covers.push((e, i));
    let le = Lattice::new(e + 1, &covers)?.with_planar(l.planar_asserted());
    Ok((le, e))
}

/// `L − {m}` for a tab `m`, with the map from new ids to old ones.
pub fn strip_tab_mapped(l: &Lattice, m: usize) -> Result<(Lattice, Vec<usize>)> {
    if !l.is_tab(m) {
        return Err(Error::NotATab(m));
    }
    l.remove_doubly_irreducible(m)
}

pub fn strip_tab(l: &Lattice, m: usize) -> Result<Lattice> {
    strip_tab_mapped(l, m).map(|(k, _)| k)
}

/// Strips the least tab until none is left.
pub fn strip_all(l: &Lattice) -> Lattice {
    let mut cur = l.clone();
    while let Some(&m) = cur.tabs().first() {
        cur = strip_tab(&cur, m).expect("tabs can be stripped");
    }
    cur
}

/// Strips tabs chosen uniformly at random until none is left.
pub fn strip_all_random(l: &Lattice, rng: &mut impl Rng) -> Lattice {
    let mut cur = l.clone();
    loop {
        let tabs = cur.tabs();
        let Some(&m) = tabs.choose(rng) else {
            return cur;
        };
        cur = strip_tab(&cur, m).expect("tabs can be stripped");
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{catalog, iso};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn eye_in_the_square_is_m3() {
        let b2 = catalog::grid(2, 2);
        let (m3, e) = insert_eye(&b2, [0, 1, 2, 3]).unwrap();
        assert_eq!(e, 4);
        assert_eq!(m3.len(), b2.len() + 1);
        assert_eq!(m3.covers().len(), b2.covers().len() + 2);
        assert!(iso::is_isomorphic(&m3, &catalog::m_n(3)));
        let atoms = m3.interval(0, 3).unwrap().elements;
        assert_eq!(atoms, vec![0, 1, 2, 3, 4]);
        assert!(matches!(
            insert_eye(&m3, [0, 1, 2, 3]),
            Err(Error::NotAFourCell(_))
        ));
    }

    #[test]
    fn eyes_in_both_cells_of_a_strip() {
        let g = catalog::grid(3, 2);
        let cells = g.four_cells();
        assert_eq!(cells.len(), 2);
        let (g1, _) = insert_eye(&g, cells[0]).unwrap();
        let (g2, _) = insert_eye(&g1, cells[1]).unwrap();
        let md = g2.covering_multidiamonds();
        assert_eq!(md.len(), 2);
        let shared = md[0].elements.iter().filter(|x| md[1].elements.contains(x)).count();
        assert_eq!(shared, 2);
        assert!(g2.is_semimodular());
        assert_eq!(g2.tabs().len(), 4);
    }

    #[test]
    fn stripping_tabs() {
        let m3 = catalog::m_n(3);
        assert!(iso::is_isomorphic(&strip_tab(&m3, 1).unwrap(), &catalog::grid(2, 2)));
        let m4 = catalog::m_n(4);
        assert!(iso::is_isomorphic(&strip_tab(&m4, 1).unwrap(), &m3));
        assert!(matches!(
            strip_tab(&catalog::grid(2, 2), 1),
            Err(Error::NotATab(1))
        ));
        assert!(iso::is_isomorphic(&strip_all(&m3), &catalog::grid(2, 2)));
        assert_eq!(strip_all(&catalog::grid(2, 2)), catalog::grid(2, 2));
        assert!(iso::is_isomorphic(&strip_all(&m4), &catalog::grid(2, 2)));
    }

    #[test]
    fn strip_then_reinsert() {
        let m3 = catalog::m_n(3);
        let k = strip_tab(&m3, 1).unwrap();
        let cell = k.four_cells()[0];
        let (again, _) = insert_eye(&k, cell).unwrap();
        assert!(iso::is_isomorphic(&again, &m3));
    }

    #[test]
    fn eye_then_strip_is_identity() {
        let g = catalog::grid(3, 3).with_planar(true);
        for cell in g.four_cells() {
            let (le, e) = insert_eye(&g, cell).unwrap();
            assert_eq!(strip_tab(&le, e).unwrap(), g);
        }
    }

    #[test]
    fn random_strips_agree() {
        let m4 = catalog::m_n(4);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..5 {
            assert!(iso::is_isomorphic(&strip_all_random(&m4, &mut rng), &catalog::grid(2, 2)));
        }
    }
}
