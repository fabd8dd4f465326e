//! Brute-force searches over small groups: homomorphisms, isomorphisms and
//! automorphism groups.

use std::collections::HashMap;
use std::sync::Arc;

use super::{FiniteGroup, GroupMorphism};

/// A small generating set, preferring elements of large order.
pub fn generating_set(g: &FiniteGroup) -> Vec<usize> {
    let mut cand: Vec<usize> = (1..g.order()).collect();
    cand.sort_by_key(|&x| (std::cmp::Reverse(g.element_order(x)), x));
    let mut gens = Vec::new();
    let mut sub = g.trivial_subgroup();
    for x in cand {
        if !sub.contains(x) {
            gens.push(x);
            sub = g.subgroup_generate(&gens).expect("in range");
            if sub.len() == g.order() {
                break;
            }
        }
    }
    gens
}

/// Extends generator images to a full map, or `None` if the assignment is
/// not a homomorphism.
fn extend(src: &FiniteGroup, tgt: &FiniteGroup, gens: &[usize], imgs: &[usize]) -> Option<Vec<usize>> {
    let n = src.order();
    let mut map = vec![usize::MAX; n];
    map[0] = 0;
    let mut queue = vec![0];
    while let Some(h) = queue.pop() {
        for (&s, &t) in gens.iter().zip(imgs) {
            let hs = src.mul(h, s);
            let val = tgt.mul(map[h], t);
            if map[hs] == usize::MAX {
                map[hs] = val;
                queue.push(hs);
            } else if map[hs] != val {
                return None;
            }
        }
    }
    Some(map)
}

/// All homomorphisms `src → tgt` whose generator images pass `admissible`,
/// in lexicographic order of generator images, stopping after `limit`.
pub fn homomorphisms_with(
    src: &Arc<FiniteGroup>,
    tgt: &Arc<FiniteGroup>,
    limit: usize,
    admissible: impl Fn(usize, usize) -> bool,
) -> Vec<GroupMorphism> {
    let gens = generating_set(src);
    let cands: Vec<Vec<usize>> = gens
        .iter()
        .map(|&s| {
            let os = src.element_order(s);
            (0..tgt.order())
                .filter(|&t| os.is_multiple_of(tgt.element_order(t)) && admissible(s, t))
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    if cands.iter().any(Vec::is_empty) {
        return out;
    }
    let mut pos = vec![0usize; gens.len()];
    loop {
        if out.len() >= limit {
            break;
        }
        let imgs: Vec<usize> = pos.iter().zip(&cands).map(|(&p, c)| c[p]).collect();
        if let Some(map) = extend(src, tgt, &gens, &imgs) {
            out.push(GroupMorphism {
                source: src.clone(),
                target: tgt.clone(),
                map,
            });
        }
        // odometer
        let mut k = gens.len();
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            pos[k] += 1;
            if pos[k] < cands[k].len() {
                break;
            }
            pos[k] = 0;
        }
    }
    out
}

pub fn homomorphisms(src: &Arc<FiniteGroup>, tgt: &Arc<FiniteGroup>) -> Vec<GroupMorphism> {
    homomorphisms_with(src, tgt, usize::MAX, |_, _| true)
}

/// Up to `limit` isomorphisms `a → b`.
pub fn isomorphisms(a: &Arc<FiniteGroup>, b: &Arc<FiniteGroup>, limit: usize) -> Vec<GroupMorphism> {
    if a.order() != b.order() {
        return Vec::new();
    }
    let mut out = Vec::new();
    for f in homomorphisms_with(a, b, usize::MAX, |s, t| a.element_order(s) == b.element_order(t)) {
        if f.is_injective() {
            out.push(f);
            if out.len() >= limit {
                break;
            }
        }
    }
    out
}

/// `Aut(g)` as a group under composition (`σ·τ = σ∘τ`), with the identity
/// automorphism at index 0. The second component lists each automorphism
/// as a permutation of `g`.
pub fn automorphism_group(g: &Arc<FiniteGroup>) -> (Arc<FiniteGroup>, Vec<Vec<usize>>) {
    let mut perms: Vec<Vec<usize>> = isomorphisms(g, g, usize::MAX)
        .into_iter()
        .map(|f| f.map)
        .collect();
    perms.sort();
    let id: Vec<usize> = (0..g.order()).collect();
    let pos = perms.iter().position(|p| *p == id).expect("identity is an automorphism");
    perms.swap(0, pos);
    let index: HashMap<&Vec<usize>, usize> = perms.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let mult = perms
        .iter()
        .map(|s| {
            perms
                .iter()
                .map(|t| {
                    let st: Vec<usize> = t.iter().map(|&x| s[x]).collect();
                    index[&st]
                })
                .collect()
        })
        .collect();
    let aut = FiniteGroup::new(format!("Aut({})", g.name()), mult).expect("automorphisms form a group");
    (aut, perms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::groups::{cyclic, dihedral, klein, quaternion, symmetric3};

    #[test]
    fn hom_counts() {
        // |Hom(C_m, C_n)| = gcd(m, n)
        assert_eq!(homomorphisms(&cyclic(4), &cyclic(6)).len(), 2);
        assert_eq!(homomorphisms(&cyclic(6), &cyclic(4)).len(), 2);
        // Hom(V4, V4) = 2x2 matrices over F2
        assert_eq!(homomorphisms(&klein(), &klein()).len(), 16);
        // Hom(S3, C2): trivial and sign
        assert_eq!(homomorphisms(&symmetric3(), &cyclic(2)).len(), 2);
        // Hom(C2, S3): trivial + three transpositions
        assert_eq!(homomorphisms(&cyclic(2), &symmetric3()).len(), 4);
    }

    #[test]
    fn automorphism_orders() {
        assert_eq!(automorphism_group(&cyclic(4)).0.order(), 2);
        assert_eq!(automorphism_group(&cyclic(5)).0.order(), 4);
        assert_eq!(automorphism_group(&klein()).0.order(), 6);
        assert_eq!(automorphism_group(&symmetric3()).0.order(), 6);
        assert_eq!(automorphism_group(&dihedral(4)).0.order(), 8);
        assert_eq!(automorphism_group(&quaternion()).0.order(), 24);
    }

    #[test]
    fn d4_and_q8_are_not_isomorphic() {
        assert!(isomorphisms(&dihedral(4), &quaternion(), 1).is_empty());
        assert_eq!(isomorphisms(&dihedral(4), &dihedral(4), 100).len(), 8);
    }
}
