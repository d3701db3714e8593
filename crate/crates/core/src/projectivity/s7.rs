use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{catalog, iso, Lattice};

/// The seven elements of a generated `S7`. `a` is the dual atom that is a
/// proper join; `x`, `a`, `m` are the lower covers of `i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct S7Config {
    pub u: usize,
    pub y: usize,
    pub o: usize,
    pub x: usize,
    pub a: usize,
    pub m: usize,
    pub i: usize,
}

impl S7Config {
    pub fn elements(&self) -> [usize; 7] {
        let mut e = [self.u, self.y, self.o, self.x, self.a, self.m, self.i];
        e.sort_unstable();
        e
    }
}

fn violated(msg: impl Into<String>) -> Error {
    Error::PreconditionViolated(msg.into())
}

/// Builds the `S7` generated by `x`, `m` and a third lower cover `a` of `i`.
///
/// Requires a semimodular `l`, an interval `[o, i]` of length 2, an atom `m`
/// of it that is join-irreducible in `l`, and a lower cover `x ∉ [o, i]` of
/// `i`. With `u = x ∧ m`, an upper cover `v ≤ x` of `u` with `v ≰ o`, the
/// result has `a = v ∨ o` and `y = x ∧ a`.
pub fn construct_s7(l: &Lattice, o: usize, i: usize, m: usize, x: usize) -> Result<S7Config> {
    let n = l.len();
    if [o, i, m, x].iter().any(|&e| e >= n) {
        return Err(violated("element out of range"));
    }
    if !l.is_semimodular() {
        return Err(violated("lattice is not semimodular"));
    }
    let iv = l
        .interval(o, i)
        .ok_or_else(|| violated(format!("{o} is not below {i}")))?;
    let inner: Vec<usize> = iv.elements.iter().copied().filter(|&t| t != o && t != i).collect();
    if inner.is_empty() || !inner.iter().all(|&t| l.is_cover(o, t) && l.is_cover(t, i)) {
        return Err(violated(format!("[{o},{i}] does not have length 2")));
    }
    if !inner.contains(&m) {
        return Err(violated(format!("{m} is not an atom of [{o},{i}]")));
    }
    if !l.is_join_irreducible(m) {
        return Err(violated(format!("{m} is not join-irreducible")));
    }
    if !l.is_cover(x, i) || iv.contains(x) {
        return Err(violated(format!("{x} is not a lower cover of {i} outside [{o},{i}]")));
    }

    let u = l.meet(x, m);
    let v = l
        .upper_covers(u)
        .iter()
        .copied()
        .find(|&v| l.leq(v, x) && !l.leq(v, o))
        .ok_or_else(|| Error::ValidationFailed(format!("no upper cover of {u} below {x} avoids {o}")))?;
    let a = l.join(v, o);
    let y = l.meet(x, a);
    let config = S7Config { u, y, o, x, a, m, i };

    let generated = l.generate(&[x, a, m]);
    if generated != config.elements() {
        return Err(Error::ValidationFailed(format!(
            "{{x, a, m}} generates {generated:?}, expected {:?}",
            config.elements()
        )));
    }
    let (sub, _) = l.sublattice(&generated)?;
    if !iso::is_isomorphic(&sub, &catalog::s7()) {
        return Err(Error::ValidationFailed("generated sublattice is not S7".into()));
    }
    Ok(config)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::catalog::s7_labels::*;
    use crate::lattice::PrimeInterval;
    use crate::projectivity::is_swing_via;

    #[test]
    fn s7_rebuilds_itself() {
        let s = catalog::s7();
        let c = construct_s7(&s, O, I, M, X).unwrap();
        assert_eq!((c.u, c.y, c.o, c.x, c.a, c.m, c.i), (U, Y, O, X, A, M, I));
        assert_eq!(c.elements(), [0, 1, 2, 3, 4, 5, 6]);
        let mut tops = [c.x, c.a, c.m];
        tops.sort_unstable();
        tops.iter().for_each(|&t| assert!(s.is_cover(t, c.i)));
        assert!(c.x != c.a && c.a != c.m && c.x != c.m);
        assert!(is_swing_via(
            &s,
            PrimeInterval::new(c.x, c.i),
            PrimeInterval::new(c.a, c.i),
            c.m
        ));
    }

    #[test]
    fn square_has_no_such_configuration() {
        let b2 = catalog::grid(2, 2);
        for (o, i, m, x) in [(0, 3, 1, 2), (0, 3, 2, 1), (0, 1, 1, 2)] {
            assert!(matches!(
                construct_s7(&b2, o, i, m, x),
                Err(Error::PreconditionViolated(_))
            ));
        }
    }

    #[test]
    fn not_semimodular() {
        assert!(matches!(
            construct_s7(&catalog::n5(), 0, 4, 3, 2),
            Err(Error::PreconditionViolated(_))
        ));
    }
}
