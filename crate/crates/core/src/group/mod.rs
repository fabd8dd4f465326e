//! Finite groups given by multiplication tables.
//!
//! Elements are indices `0..n` and index 0 is always the identity. Subgroups
//! are sorted index sets, so equality of subgroups is equality of
//! representations.

mod action;
pub mod search;

pub use action::{section, semidirect, GroupAction, GroupSemidirect};
pub use search::{automorphism_group, generating_set, homomorphisms, isomorphisms};

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::limits;

#[derive(Debug, Clone)]
pub struct FiniteGroup {
    name: String,
    mult: Vec<Vec<usize>>,
    inv: Vec<usize>,
}

// Names are labels only; two groups are equal when their tables are.
impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.mult == other.mult
    }
}

impl Eq for FiniteGroup {}

impl std::hash::Hash for FiniteGroup {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.mult.hash(state);
    }
}

/// A subgroup (or plain subset) of a finite group as a sorted index list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementSet(Vec<usize>);

impl ElementSet {
    pub fn new(elems: impl IntoIterator<Item = usize>) -> Self {
        let set: BTreeSet<usize> = elems.into_iter().collect();
        ElementSet(set.into_iter().collect())
    }

    pub fn elements(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.0.binary_search(&x).is_ok()
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.0.iter().all(|&x| other.contains(x))
    }
}

impl FiniteGroup {
    /// Validates a multiplication table: square, in range, identity at
    /// index 0, inverses, associativity.
    pub fn new(name: impl Into<String>, mult: Vec<Vec<usize>>) -> Result<Arc<Self>> {
        let n = mult.len();
        if n == 0 {
            return Err(Error::malformed("empty multiplication table"));
        }
        limits::check_order(n)?;
        for (i, row) in mult.iter().enumerate() {
            if row.len() != n {
                return Err(Error::malformed(format!(
                    "table is not square: row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            if let Some(&bad) = row.iter().find(|&&x| x >= n) {
                return Err(Error::malformed(format!(
                    "index {bad} in row {i} is out of range 0..{n}"
                )));
            }
        }
        for x in 0..n {
            if mult[0][x] != x || mult[x][0] != x {
                return Err(Error::axiom(
                    "identity (index 0 must be a two-sided identity)",
                    format!("element {x}"),
                ));
            }
        }
        let mut inv = vec![0; n];
        for x in 0..n {
            match (0..n).find(|&y| mult[x][y] == 0 && mult[y][x] == 0) {
                Some(y) => inv[x] = y,
                None => {
                    return Err(Error::axiom(
                        "inverse",
                        format!("index {x} has no inverse"),
                    ))
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = mult[a][b];
                for c in 0..n {
                    if mult[ab][c] != mult[a][mult[b][c]] {
                        return Err(Error::axiom(
                            "associativity",
                            format!("triple ({a}, {b}, {c})"),
                        ));
                    }
                }
            }
        }
        Ok(Arc::new(FiniteGroup {
            name: name.into(),
            mult,
            inv,
        }))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn renamed(&self, name: impl Into<String>) -> Arc<Self> {
        Arc::new(FiniteGroup {
            name: name.into(),
            ..self.clone()
        })
    }

    pub fn order(&self) -> usize {
        self.mult.len()
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.mult
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a][b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    /// `a b a^-1`
    #[inline]
    pub fn conj(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(a, b), self.inv(a))
    }

    /// `a b a^-1 b^-1`
    #[inline]
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.conj(a, b), self.inv(b))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut k = 1;
        let mut x = a;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    fn check_elems(&self, elems: &[usize]) -> Result<()> {
        match elems.iter().find(|&&x| x >= self.order()) {
            Some(x) => Err(Error::malformed(format!(
                "element {x} is out of range for {} of order {}",
                self.name,
                self.order()
            ))),
            None => Ok(()),
        }
    }

    pub fn whole(&self) -> ElementSet {
        ElementSet((0..self.order()).collect())
    }

    pub fn trivial_subgroup(&self) -> ElementSet {
        ElementSet(vec![0])
    }

    /// Smallest subgroup containing `gens`.
    pub fn subgroup_generate(&self, gens: &[usize]) -> Result<ElementSet> {
        self.check_elems(gens)?;
        let gens: Vec<usize> = ElementSet::new(gens.iter().copied().filter(|&g| g != 0)).0;
        let mut seen = vec![false; self.order()];
        seen[0] = true;
        let mut queue = vec![0];
        while let Some(x) = queue.pop() {
            for &g in &gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    queue.push(y);
                }
            }
        }
        Ok(ElementSet(
            (0..self.order()).filter(|&i| seen[i]).collect(),
        ))
    }

    /// Smallest subgroup containing `elems` that is normalized by every
    /// element of `container`. With `container` the whole group this is the
    /// normal closure.
    pub fn normal_closure_within(&self, container: &ElementSet, elems: &[usize]) -> Result<ElementSet> {
        self.check_elems(elems)?;
        let mut conj: BTreeSet<usize> = elems.iter().copied().collect();
        let mut frontier: Vec<usize> = conj.iter().copied().collect();
        while let Some(s) = frontier.pop() {
            for &g in container.elements() {
                let c = self.conj(g, s);
                if conj.insert(c) {
                    frontier.push(c);
                }
            }
        }
        let gens: Vec<usize> = conj.into_iter().collect();
        self.subgroup_generate(&gens)
    }

    pub fn normal_closure(&self, elems: &[usize]) -> Result<ElementSet> {
        self.normal_closure_within(&self.whole(), elems)
    }

    /// Checks that `set` contains the identity and is closed under products
    /// and inverses.
    pub fn check_subgroup(&self, set: &ElementSet) -> Result<()> {
        self.check_elems(set.elements())?;
        if !set.contains(0) {
            return Err(Error::axiom("subgroup", "identity missing"));
        }
        for &a in set.elements() {
            if !set.contains(self.inv(a)) {
                return Err(Error::axiom("subgroup", format!("inverse of {a} missing")));
            }
            for &b in set.elements() {
                if !set.contains(self.mul(a, b)) {
                    return Err(Error::axiom("subgroup", format!("product {a}*{b} missing")));
                }
            }
        }
        Ok(())
    }

    /// `None` if `set` is normal, otherwise a witness `(g, n)` with
    /// `g n g^-1` outside the set.
    pub fn normality_witness(&self, set: &ElementSet) -> Option<(usize, usize)> {
        for g in 0..self.order() {
            for &n in set.elements() {
                if !set.contains(self.conj(g, n)) {
                    return Some((g, n));
                }
            }
        }
        None
    }

    /// Materializes a subgroup as a group in its own right, together with
    /// the inclusion. Element `k` of the new group is the `k`-th smallest
    /// element of `set`.
    pub fn subgroup_object(self: &Arc<Self>, set: &ElementSet) -> Result<GroupMorphism> {
        self.check_subgroup(set)?;
        let elems = set.elements();
        let index = |x: usize| elems.binary_search(&x).expect("closed");
        let mult = elems
            .iter()
            .map(|&a| elems.iter().map(|&b| index(self.mul(a, b))).collect())
            .collect();
        let sub = FiniteGroup::new(format!("{}|sub{}", self.name, elems.len()), mult)?;
        Ok(GroupMorphism {
            source: sub,
            target: self.clone(),
            map: elems.to_vec(),
        })
    }

    /// Quotient by a normal subgroup. Cosets are labelled in order of their
    /// smallest element, which serves as representative.
    pub fn quotient(self: &Arc<Self>, normal: &ElementSet) -> Result<GroupMorphism> {
        self.check_subgroup(normal)?;
        if let Some((g, n)) = self.normality_witness(normal) {
            return Err(Error::axiom(
                "normality",
                format!("conjugate of {n} by {g} leaves the subgroup"),
            ));
        }
        let n = self.order();
        let mut label = vec![usize::MAX; n];
        let mut reps = Vec::new();
        for g in 0..n {
            if label[g] == usize::MAX {
                let k = reps.len();
                reps.push(g);
                for &h in normal.elements() {
                    label[self.mul(g, h)] = k;
                }
            }
        }
        let mult = reps
            .iter()
            .map(|&a| reps.iter().map(|&b| label[self.mul(a, b)]).collect())
            .collect();
        let q = FiniteGroup::new(format!("{}/{}", self.name, normal.len()), mult)?;
        Ok(GroupMorphism {
            source: self.clone(),
            target: q,
            map: label,
        })
    }
}

/// A homomorphism between finite groups, stored as the image of each
/// source index.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupMorphism {
    pub source: Arc<FiniteGroup>,
    pub target: Arc<FiniteGroup>,
    pub map: Vec<usize>,
}

impl GroupMorphism {
    pub fn new(source: Arc<FiniteGroup>, target: Arc<FiniteGroup>, map: Vec<usize>) -> Result<Self> {
        if map.len() != source.order() {
            return Err(Error::malformed(format!(
                "map has {} entries, source has order {}",
                map.len(),
                source.order()
            )));
        }
        if let Some(&bad) = map.iter().find(|&&y| y >= target.order()) {
            return Err(Error::malformed(format!("image {bad} out of range")));
        }
        let f = GroupMorphism { source, target, map };
        if f.map[0] != 0 {
            return Err(Error::axiom("homomorphism", "identity is not mapped to identity"));
        }
        let n = f.source.order();
        for a in 0..n {
            for b in 0..n {
                if f.map[f.source.mul(a, b)] != f.target.mul(f.map[a], f.map[b]) {
                    return Err(Error::axiom("homomorphism", format!("pair ({a}, {b})")));
                }
            }
        }
        Ok(f)
    }

    pub fn identity(g: &Arc<FiniteGroup>) -> Self {
        GroupMorphism {
            source: g.clone(),
            target: g.clone(),
            map: (0..g.order()).collect(),
        }
    }

    pub fn trivial(source: &Arc<FiniteGroup>, target: &Arc<FiniteGroup>) -> Self {
        GroupMorphism {
            source: source.clone(),
            target: target.clone(),
            map: vec![0; source.order()],
        }
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    /// `self ∘ first`
    pub fn after(&self, first: &GroupMorphism) -> Result<GroupMorphism> {
        if *first.target != *self.source {
            return Err(Error::mismatch("composable morphisms need matching objects"));
        }
        Ok(GroupMorphism {
            source: first.source.clone(),
            target: self.target.clone(),
            map: first.map.iter().map(|&x| self.map[x]).collect(),
        })
    }

    pub fn kernel(&self) -> ElementSet {
        ElementSet((0..self.source.order()).filter(|&x| self.map[x] == 0).collect())
    }

    pub fn image(&self) -> ElementSet {
        ElementSet::new(self.map.iter().copied())
    }

    pub fn image_of(&self, set: &ElementSet) -> ElementSet {
        ElementSet::new(set.elements().iter().map(|&x| self.map[x]))
    }

    pub fn is_injective(&self) -> bool {
        self.kernel().len() == 1
    }

    pub fn is_surjective(&self) -> bool {
        self.image().len() == self.target.order()
    }
}
