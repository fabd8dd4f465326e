//! Small named groups.

use std::collections::HashMap;
use std::sync::Arc;

use crate::group::FiniteGroup;

/// Closes a set of permutations under composition. The identity comes
/// first and the remaining elements are sorted, so the labelling is
/// deterministic. Product `a·b` applies `b` first.
pub fn from_permutations(name: &str, degree: usize, gens: &[Vec<usize>]) -> Arc<FiniteGroup> {
    let id: Vec<usize> = (0..degree).collect();
    let mut elems = vec![id.clone()];
    let mut seen: HashMap<Vec<usize>, ()> = HashMap::from([(id, ())]);
    let mut i = 0;
    while i < elems.len() {
        for g in gens {
            let p: Vec<usize> = (0..degree).map(|x| elems[i][g[x]]).collect();
            if seen.insert(p.clone(), ()).is_none() {
                elems.push(p);
            }
        }
        i += 1;
    }
    elems[1..].sort();
    let index: HashMap<&Vec<usize>, usize> = elems.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let mult = elems
        .iter()
        .map(|a| {
            elems
                .iter()
                .map(|b| {
                    let ab: Vec<usize> = (0..degree).map(|x| a[b[x]]).collect();
                    index[&ab]
                })
                .collect()
        })
        .collect();
    FiniteGroup::new(name, mult).expect("permutation groups are groups")
}

pub fn cyclic(n: usize) -> Arc<FiniteGroup> {
    let mult = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
    FiniteGroup::new(format!("C{n}"), mult).expect("cyclic group")
}

pub fn trivial() -> Arc<FiniteGroup> {
    cyclic(1)
}

/// Direct product with index `a * |h| + b` for `(a, b)`.
pub fn product(g: &FiniteGroup, h: &FiniteGroup) -> Arc<FiniteGroup> {
    let (ng, nh) = (g.order(), h.order());
    let mult = (0..ng * nh)
        .map(|s| {
            (0..ng * nh)
                .map(|t| g.mul(s / nh, t / nh) * nh + h.mul(s % nh, t % nh))
                .collect()
        })
        .collect();
    FiniteGroup::new(format!("{}x{}", g.name(), h.name()), mult).expect("direct product")
}

pub fn klein() -> Arc<FiniteGroup> {
    product(&cyclic(2), &cyclic(2)).renamed("V4")
}

pub fn symmetric3() -> Arc<FiniteGroup> {
    from_permutations("S3", 3, &[vec![1, 0, 2], vec![0, 2, 1]])
}

/// Dihedral group of order `2n`, the symmetries of an `n`-gon.
pub fn dihedral(n: usize) -> Arc<FiniteGroup> {
    let rot: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
    let refl: Vec<usize> = (0..n).map(|i| (n - i) % n).collect();
    from_permutations(&format!("D{n}"), n, &[rot, refl])
}

/// Quaternion group `{±1, ±i, ±j, ±k}`; index `2u + s` is sign `s` on unit
/// `u ∈ {1, i, j, k}`.
pub fn quaternion() -> Arc<FiniteGroup> {
    // unit products: (unit, sign)
    let table = [
        [(0, 0), (1, 0), (2, 0), (3, 0)],
        [(1, 0), (0, 1), (3, 0), (2, 1)],
        [(2, 0), (3, 1), (0, 1), (1, 0)],
        [(3, 0), (2, 0), (1, 1), (0, 1)],
    ];
    let mult = (0..8)
        .map(|a: usize| {
            (0..8)
                .map(|b: usize| {
                    let (u, s) = table[a / 2][b / 2];
                    2 * u + (s + a % 2 + b % 2) % 2
                })
                .collect()
        })
        .collect();
    FiniteGroup::new("Q8", mult).expect("quaternion group")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s3_from_two_transpositions() {
        let s3 = symmetric3();
        assert_eq!(s3.order(), 6);
        assert!(!s3.is_abelian());
        // FiniteGroup::new already scanned all 216 triples for associativity
        let orders: Vec<usize> = (0..6).map(|x| s3.element_order(x)).collect();
        assert_eq!(orders.iter().filter(|&&o| o == 2).count(), 3);
        assert_eq!(orders.iter().filter(|&&o| o == 3).count(), 2);
    }

    #[test]
    fn quaternion_shape() {
        let q = quaternion();
        assert_eq!((0..8).filter(|&x| q.element_order(x) == 4).count(), 6);
        assert_eq!((0..8).filter(|&x| q.element_order(x) == 2).count(), 1);
    }

    #[test]
    fn dihedral_shape() {
        let d = dihedral(4);
        assert_eq!(d.order(), 8);
        assert_eq!((0..8).filter(|&x| d.element_order(x) == 2).count(), 5);
        assert_eq!(dihedral(3).order(), 6);
    }
}
