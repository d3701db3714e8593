//! Small named lattices used as building blocks and test fixtures.

use super::Lattice;

/// Element ids of [`s7`], named as in the swing configuration.
pub mod s7_labels {
    pub const U: usize = 0;
    pub const Y: usize = 1;
    pub const O: usize = 2;
    pub const X: usize = 3;
    pub const A: usize = 4;
    pub const M: usize = 5;
    pub const I: usize = 6;
}

/// The chain `0 ≺ 1 ≺ … ≺ n−1`.
pub fn chain(n: usize) -> Lattice {
    assert!(n >= 1, "a chain needs at least one element");
    let covers: Vec<(usize, usize)> = (1..n).map(|k| (k - 1, k)).collect();
    Lattice::new(n, &covers).expect("chains are lattices")
}

/// Direct product; element `(a, b)` gets id `a * |right| + b`.
pub fn product(left: &Lattice, right: &Lattice) -> Lattice {
    let nr = right.len();
    let mut covers = Vec::new();
    for a in left.elements() {
        for b in right.elements() {
            for &a2 in left.upper_covers(a) {
                covers.push((a * nr + b, a2 * nr + b));
            }
            for &b2 in right.upper_covers(b) {
                covers.push((a * nr + b, a * nr + b2));
            }
        }
    }
    Lattice::new(left.len() * nr, &covers).expect("products of lattices are lattices")
}

/// `C_m × C_n`.
pub fn grid(m: usize, n: usize) -> Lattice {
    product(&chain(m), &chain(n))
}

/// The Boolean lattice `C_2^k`.
pub fn boolean(k: usize) -> Lattice {
    (0..k).fold(chain(1), |acc, _| product(&acc, &chain(2)))
}

/// `M_k`: bottom `0`, atoms `1..=k`, top `k + 1`.
pub fn m_n(k: usize) -> Lattice {
    let top = k + 1;
    let covers: Vec<(usize, usize)> = (1..=k).flat_map(|a| [(0, a), (a, top)]).collect();
    Lattice::new(k + 2, &covers).expect("M_k is a lattice")
}

/// Pentagon `0 ≺ a ≺ b ≺ 1`, `0 ≺ c ≺ 1` with ids `0, 1, 2, 4` and `3`.
pub fn n5() -> Lattice {
    Lattice::new(5, &[(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)]).expect("N5 is a lattice")
}

/// The seven-element slim semimodular lattice; see [`s7_labels`].
pub fn s7() -> Lattice {
    use s7_labels::*;
    Lattice::new(
        7,
        &[
            (U, Y),
            (U, O),
            (Y, X),
            (Y, A),
            (O, A),
            (O, M),
            (X, I),
            (A, I),
            (M, I),
        ],
    )
    .expect("S7 is a lattice")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        assert_eq!(grid(3, 4).len(), 12);
        assert_eq!(boolean(3).len(), 8);
        assert_eq!(boolean(3).prime_intervals().len(), 12);
        assert_eq!(m_n(4).len(), 6);
        assert_eq!(chain(1).len(), 1);
    }

    #[test]
    fn s7_tables() {
        use s7_labels::*;
        let s = s7();
        assert_eq!(s.join(Y, O), A);
        assert_eq!(s.meet(X, M), U);
        assert_eq!(s.meet(X, A), Y);
        assert_eq!(s.meet(A, M), O);
        assert_eq!(s.join(X, M), I);
    }
}
