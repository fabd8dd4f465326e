use std::sync::Arc;

use super::{ElementSet, FiniteGroup, GroupMorphism};
use crate::error::{Error, Result};
use crate::limits;

/// A left action of `acting` on `acted` by automorphisms:
/// `table[b][x]` is `ᵇx`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupAction {
    pub acting: Arc<FiniteGroup>,
    pub acted: Arc<FiniteGroup>,
    pub table: Vec<Vec<usize>>,
}

impl GroupAction {
    /// Checks `¹x = x`, `ᵇ(xx') = ᵇx ᵇx'` and `ᵇ(ᵇ'x) = ⁽ᵇᵇ'⁾x`.
    pub fn new(acting: Arc<FiniteGroup>, acted: Arc<FiniteGroup>, table: Vec<Vec<usize>>) -> Result<Self> {
        let (nb, nx) = (acting.order(), acted.order());
        if table.len() != nb || table.iter().any(|r| r.len() != nx) {
            return Err(Error::malformed(format!(
                "action table must be {nb}x{nx}"
            )));
        }
        if table.iter().flatten().any(|&y| y >= nx) {
            return Err(Error::malformed("action table entry out of range"));
        }
        let a = GroupAction { acting, acted, table };
        a.check()?;
        Ok(a)
    }

    fn check(&self) -> Result<()> {
        let (b, x) = (&self.acting, &self.acted);
        for e in 0..x.order() {
            if self.table[0][e] != e {
                return Err(Error::axiom("identity acts trivially", format!("x={e}")));
            }
        }
        for g in 0..b.order() {
            for e in 0..x.order() {
                for f in 0..x.order() {
                    if self.act(g, x.mul(e, f)) != x.mul(self.act(g, e), self.act(g, f)) {
                        return Err(Error::axiom(
                            "action by homomorphisms ᵇ(xx') = ᵇx ᵇx'",
                            format!("(b={g}, x={e}, x'={f})"),
                        ));
                    }
                }
            }
        }
        for g in 0..b.order() {
            for h in 0..b.order() {
                for e in 0..x.order() {
                    if self.act(g, self.act(h, e)) != self.act(b.mul(g, h), e) {
                        return Err(Error::axiom(
                            "composition ᵇ(ᵇ'x) = ⁽ᵇᵇ'⁾x",
                            format!("(b={g}, b'={h}, x={e})"),
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    #[inline]
    pub fn act(&self, b: usize, x: usize) -> usize {
        self.table[b][x]
    }

    pub fn trivial(acting: &Arc<FiniteGroup>, acted: &Arc<FiniteGroup>) -> Self {
        GroupAction {
            acting: acting.clone(),
            acted: acted.clone(),
            table: vec![(0..acted.order()).collect(); acting.order()],
        }
    }

    /// Conjugation action of a group on itself.
    pub fn conjugation(g: &Arc<FiniteGroup>) -> Self {
        let n = g.order();
        GroupAction {
            acting: g.clone(),
            acted: g.clone(),
            table: (0..n).map(|a| (0..n).map(|x| g.conj(a, x)).collect()).collect(),
        }
    }

    /// Conjugation action of `g` on a normal subgroup, materialized as its
    /// own group. Returns the inclusion alongside.
    pub fn conjugation_on(g: &Arc<FiniteGroup>, normal: &ElementSet) -> Result<(Self, GroupMorphism)> {
        if let Some((a, n)) = g.normality_witness(normal) {
            return Err(Error::axiom(
                "normality",
                format!("conjugate of {n} by {a} leaves the subgroup"),
            ));
        }
        let incl = g.subgroup_object(normal)?;
        let act = GroupAction::conjugation(g).restrict(&incl)?;
        Ok((act, incl))
    }

    /// `(a, x) ↦ ^{f(a)}x`
    pub fn pullback(&self, f: &GroupMorphism) -> Result<Self> {
        if *f.target != *self.acting {
            return Err(Error::mismatch("pullback morphism must land in the acting group"));
        }
        Ok(GroupAction {
            acting: f.source.clone(),
            acted: self.acted.clone(),
            table: f.map.iter().map(|&b| self.table[b].clone()).collect(),
        })
    }

    /// Restricts the action to a stable subgroup given by its inclusion.
    pub fn restrict(&self, incl: &GroupMorphism) -> Result<Self> {
        if *incl.target != *self.acted {
            return Err(Error::mismatch("restriction needs a subobject of the acted group"));
        }
        let image = &incl.map;
        let mut table = Vec::with_capacity(self.acting.order());
        for b in 0..self.acting.order() {
            let mut row = Vec::with_capacity(image.len());
            for (k, &x) in image.iter().enumerate() {
                let y = self.act(b, x);
                match image.iter().position(|&z| z == y) {
                    Some(p) => row.push(p),
                    None => {
                        return Err(Error::axiom(
                            "stability under the action",
                            format!("b={b} moves sub-element {k} (= {x}) to {y}"),
                        ))
                    }
                }
            }
            table.push(row);
        }
        Ok(GroupAction {
            acting: self.acting.clone(),
            acted: incl.source.clone(),
            table,
        })
    }

    /// Induced action on a quotient, computed on coset representatives and
    /// verified on every fiber.
    pub fn descend(&self, proj: &GroupMorphism) -> Result<Self> {
        if *proj.source != *self.acted {
            return Err(Error::mismatch("projection must start at the acted group"));
        }
        let reps = section(proj);
        let table: Vec<Vec<usize>> = (0..self.acting.order())
            .map(|b| reps.iter().map(|&r| proj.apply(self.act(b, r))).collect())
            .collect();
        for (b, row) in table.iter().enumerate() {
            for x in 0..self.acted.order() {
                if proj.apply(self.act(b, x)) != row[proj.apply(x)] {
                    return Err(Error::axiom(
                        "action passes to the quotient",
                        format!("b={b}, x={x}"),
                    ));
                }
            }
        }
        Ok(GroupAction {
            acting: self.acting.clone(),
            acted: proj.target.clone(),
            table,
        })
    }

    /// First `(b, x)` where the two actions disagree.
    pub fn difference(&self, other: &GroupAction) -> Option<(usize, usize)> {
        for b in 0..self.acting.order() {
            for x in 0..self.acted.order() {
                if self.act(b, x) != other.act(b, x) {
                    return Some((b, x));
                }
            }
        }
        None
    }
}

/// Smallest preimage of every target element; panics on non-surjective maps.
pub fn section(f: &GroupMorphism) -> Vec<usize> {
    let mut reps = vec![usize::MAX; f.target.order()];
    for (x, &y) in f.map.iter().enumerate() {
        if reps[y] == usize::MAX {
            reps[y] = x;
        }
    }
    assert!(reps.iter().all(|&r| r != usize::MAX), "section of a non-surjective map");
    reps
}

/// `X ⋊ Y` with the canonical maps. Element `(x, y)` has index
/// `x * |Y| + y`.
#[derive(Debug, Clone)]
pub struct GroupSemidirect {
    pub group: Arc<FiniteGroup>,
    /// `x ↦ (x, 1)`
    pub j: GroupMorphism,
    /// `y ↦ (1, y)`
    pub i: GroupMorphism,
    /// `(x, y) ↦ y`
    pub p: GroupMorphism,
}

impl GroupSemidirect {
    pub fn pair(&self, x: usize, y: usize) -> usize {
        x * self.i.source.order() + y
    }

    pub fn split(&self, s: usize) -> (usize, usize) {
        let ny = self.i.source.order();
        (s / ny, s % ny)
    }
}

/// Semidirect product for `act`: `Y` acting on `X`, with
/// `(x, y)(x', y') = (x ʸx', y y')`.
pub fn semidirect(act: &GroupAction) -> Result<GroupSemidirect> {
    let (x, y) = (&act.acted, &act.acting);
    let (nx, ny) = (x.order(), y.order());
    limits::check_order(nx * ny)?;
    let idx = |a: usize, b: usize| a * ny + b;
    let mut mult = vec![vec![0; nx * ny]; nx * ny];
    for a in 0..nx {
        for b in 0..ny {
            for c in 0..nx {
                for d in 0..ny {
                    mult[idx(a, b)][idx(c, d)] = idx(x.mul(a, act.act(b, c)), y.mul(b, d));
                }
            }
        }
    }
    let group = FiniteGroup::new(format!("({})x|({})", x.name(), y.name()), mult)?;
    Ok(GroupSemidirect {
        j: GroupMorphism {
            source: x.clone(),
            target: group.clone(),
            map: (0..nx).map(|a| idx(a, 0)).collect(),
        },
        i: GroupMorphism {
            source: y.clone(),
            target: group.clone(),
            map: (0..ny).map(|b| idx(0, b)).collect(),
        },
        p: GroupMorphism {
            source: group.clone(),
            target: y.clone(),
            map: (0..nx * ny).map(|s| s % ny).collect(),
        },
        group,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::groups::{cyclic, dihedral, symmetric3};
    use crate::group::isomorphisms;

    fn inversion(b: &Arc<FiniteGroup>, x: &Arc<FiniteGroup>) -> Vec<Vec<usize>> {
        vec![(0..x.order()).collect(), (0..x.order()).map(|e| x.inv(e)).collect()]
            .into_iter()
            .take(b.order())
            .collect()
    }

    #[test]
    fn trivial_action_is_valid() {
        let (c2, s3) = (cyclic(2), symmetric3());
        let t = GroupAction::trivial(&c2, &s3);
        assert!(GroupAction::new(c2, s3, t.table).is_ok());
    }

    #[test]
    fn inversion_on_c4() {
        let (c2, c4) = (cyclic(2), cyclic(4));
        assert!(GroupAction::new(c2.clone(), c4.clone(), inversion(&c2, &c4)).is_ok());
    }

    #[test]
    fn squaring_is_not_an_automorphism() {
        let (c2, c4) = (cyclic(2), cyclic(4));
        let table = vec![vec![0, 1, 2, 3], (0..4).map(|x| c4.mul(x, x)).collect()];
        let err = GroupAction::new(c2, c4, table).unwrap_err();
        // x ↦ x² is an endomorphism of C4, so the scan first trips on
        // the composition law: ᵗ(ᵗ1) = 0 but ᵗᵗ1 = 1
        assert_eq!(
            err,
            Error::axiom("composition ᵇ(ᵇ'x) = ⁽ᵇᵇ'⁾x", "(b=1, b'=1, x=1)")
        );
    }

    #[test]
    fn pullback_along_surjection() {
        let (c2, c4) = (cyclic(2), cyclic(4));
        let inv = GroupAction::new(c2.clone(), c4.clone(), inversion(&c2, &c4)).unwrap();
        let delta = GroupMorphism::new(c4.clone(), c2.clone(), vec![0, 1, 0, 1]).unwrap();
        let pb = inv.pullback(&delta).unwrap();
        assert_eq!(pb.table[1], vec![0, 3, 2, 1]);
        assert_eq!(pb.table[2], vec![0, 1, 2, 3]);
        assert!(GroupAction::new(pb.acting.clone(), pb.acted.clone(), pb.table.clone()).is_ok());
        assert_eq!(inv.pullback(&GroupMorphism::identity(&c2)).unwrap(), inv);
        let zero = inv.pullback(&GroupMorphism::trivial(&c4, &c2)).unwrap();
        assert_eq!(zero, GroupAction::trivial(&c4, &c4));
    }

    #[test]
    fn c4_by_c2_is_dihedral() {
        let (c2, c4) = (cyclic(2), cyclic(4));
        let inv = GroupAction::new(c2.clone(), c4.clone(), inversion(&c2, &c4)).unwrap();
        let sd = semidirect(&inv).unwrap();
        let g = &sd.group;
        assert_eq!(g.order(), 8);
        assert!(!g.is_abelian());
        assert_eq!((0..8).filter(|&x| g.element_order(x) == 4).count(), 2);
        assert!(!isomorphisms(g, &dihedral(4), 1).is_empty());
        // the action becomes conjugation
        for y in 0..2 {
            for x in 0..4 {
                assert_eq!(g.conj(sd.i.apply(y), sd.j.apply(x)), sd.j.apply(inv.act(y, x)));
            }
        }
    }

    #[test]
    fn trivial_action_gives_direct_product() {
        let (c2, c3) = (cyclic(2), cyclic(3));
        let sd = semidirect(&GroupAction::trivial(&c2, &c3)).unwrap();
        assert!(sd.group.is_abelian());
        assert_eq!(sd.group.order(), 6);
        assert_eq!(sd.p.kernel(), sd.j.image());
    }

    #[test]
    fn conjugation_on_three_cycles() {
        let s3 = symmetric3();
        let a3 = s3.normal_closure(&[(1..6).find(|&x| s3.element_order(x) == 3).unwrap()]).unwrap();
        let (act, incl) = GroupAction::conjugation_on(&s3, &a3).unwrap();
        for b in 0..6 {
            for k in 0..3 {
                let img = incl.apply(act.act(b, k));
                if s3.element_order(b) == 2 {
                    assert_eq!(img, s3.inv(incl.apply(k)));
                } else {
                    assert_eq!(img, incl.apply(k));
                }
            }
        }
        let c4 = cyclic(4);
        assert_eq!(GroupAction::conjugation(&c4), GroupAction::trivial(&c4, &c4));
    }
}
