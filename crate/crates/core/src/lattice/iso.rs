//! Lattice isomorphism by backtracking over cover-preserving bijections.
//!
//! Candidates are pruned by a vertex invariant (height, co-height, cover
//! degrees) refined once by the invariants of neighbouring covers. Elements
//! are assigned bottom-up so every step is checked against the covers of
//! already-placed elements.

use super::Lattice;

type Signature = (usize, usize, usize, usize);

fn coheight(l: &Lattice) -> Vec<usize> {
    let mut order: Vec<usize> = l.elements().collect();
    order.sort_by_key(|&x| std::cmp::Reverse(l.height(x)));
    let mut co = vec![0usize; l.len()];
    for &x in &order {
        for &y in l.lower_covers(x) {
            co[y] = co[y].max(co[x] + 1);
        }
    }
    co
}

fn invariants(l: &Lattice) -> Vec<(Signature, Vec<Signature>, Vec<Signature>)> {
    let co = coheight(l);
    let base: Vec<Signature> = l
        .elements()
        .map(|x| {
            (
                l.height(x),
                co[x],
                l.lower_covers(x).len(),
                l.upper_covers(x).len(),
            )
        })
        .collect();
    l.elements()
        .map(|x| {
            let mut down: Vec<Signature> = l.lower_covers(x).iter().map(|&y| base[y]).collect();
            let mut up: Vec<Signature> = l.upper_covers(x).iter().map(|&y| base[y]).collect();
            down.sort_unstable();
            up.sort_unstable();
            (base[x], down, up)
        })
        .collect()
}

/// A bijection `f` with `x ≺ y ⇔ f(x) ≺ f(y)`, as `f[x]`.
pub fn isomorphism(a: &Lattice, b: &Lattice) -> Option<Vec<usize>> {
    if a.len() != b.len() || a.covers().len() != b.covers().len() {
        return None;
    }
    let ia = invariants(a);
    let ib = invariants(b);
    let mut sa = ia.clone();
    let mut sb = ib.clone();
    sa.sort();
    sb.sort();
    if sa != sb {
        return None;
    }

    let mut order: Vec<usize> = a.elements().collect();
    order.sort_by_key(|&x| (a.height(x), x));
    let candidates: Vec<Vec<usize>> = a
        .elements()
        .map(|x| b.elements().filter(|&y| ib[y] == ia[x]).collect())
        .collect();

    let mut map = vec![usize::MAX; a.len()];
    let mut used = vec![false; b.len()];
    if extend(a, b, &order, 0, &candidates, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

fn extend(
    a: &Lattice,
    b: &Lattice,
    order: &[usize],
    depth: usize,
    candidates: &[Vec<usize>],
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    let Some(&x) = order.get(depth) else {
        return true;
    };
    for &y in &candidates[x] {
        if used[y] {
            continue;
        }
        let consistent = order[..depth].iter().all(|&z| {
            let fz = map[z];
            a.is_cover(z, x) == b.is_cover(fz, y) && a.is_cover(x, z) == b.is_cover(y, fz)
        });
        if !consistent {
            continue;
        }
        map[x] = y;
        used[y] = true;
        if extend(a, b, order, depth + 1, candidates, map, used) {
            return true;
        }
        used[y] = false;
        map[x] = usize::MAX;
    }
    false
}

pub fn is_isomorphic(a: &Lattice, b: &Lattice) -> bool {
    isomorphism(a, b).is_some()
}

#[cfg(test)]
mod tests {
    use super::super::catalog::*;
    use super::*;

    #[test]
    fn relabelled_s7_is_isomorphic() {
        let s = s7();
        // reverse the ids
        let covers: Vec<(usize, usize)> = s.covers().iter().map(|&(a, b)| (6 - a, 6 - b)).collect();
        let t = Lattice::new(7, &covers).unwrap();
        let f = isomorphism(&s, &t).unwrap();
        for &(x, y) in s.covers() {
            assert!(t.is_cover(f[x], f[y]));
        }
    }

    #[test]
    fn distinct_shapes() {
        assert!(!is_isomorphic(&n5(), &m_n(3)));
        assert!(!is_isomorphic(&grid(2, 3), &grid(3, 3)));
        assert!(is_isomorphic(&grid(2, 3), &grid(3, 2)));
        assert!(is_isomorphic(&boolean(2), &grid(2, 2)));
    }
}
