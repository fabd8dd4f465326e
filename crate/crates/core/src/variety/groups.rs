use std::sync::Arc;

use super::{Defect, Semidirect, Variety};
use crate::error::{Error, Result};
use crate::group::{self, search, ElementSet, FiniteGroup, GroupAction, GroupMorphism};
use crate::pxmod::{px_map_witness, PreCrossedModule};

/// Finite groups given by multiplication tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Groups;

fn from_sd(sd: group::GroupSemidirect) -> Semidirect<Groups> {
    Semidirect {
        object: sd.group,
        j: sd.j,
        i: sd.i,
        p: sd.p,
    }
}

impl Variety for Groups {
    type Object = Arc<FiniteGroup>;
    type Elem = usize;
    type Sub = ElementSet;
    type Map = GroupMorphism;
    type Action = GroupAction;

    fn tag(_: &Self::Object) -> &'static str {
        "group"
    }

    fn name(o: &Self::Object) -> String {
        o.name().to_string()
    }

    fn size(o: &Self::Object) -> usize {
        o.order()
    }

    fn elem_text(_: &Self::Object, e: &usize) -> String {
        e.to_string()
    }

    fn is_neutral(_: &Self::Object, e: &usize) -> bool {
        *e == 0
    }

    fn whole(o: &Self::Object) -> ElementSet {
        o.whole()
    }

    fn bottom(o: &Self::Object) -> ElementSet {
        o.trivial_subgroup()
    }

    fn sub_le(a: &ElementSet, b: &ElementSet) -> bool {
        a.is_subset(b)
    }

    fn sub_size(s: &ElementSet) -> usize {
        s.len()
    }

    fn sub_contains(s: &ElementSet, e: &usize) -> bool {
        s.contains(*e)
    }

    fn spanning(s: &ElementSet) -> Vec<usize> {
        s.elements().to_vec()
    }

    fn sub_text(_: &Self::Object, s: &ElementSet) -> String {
        format!("{:?}", s.elements())
    }

    fn generate(o: &Self::Object, elems: &[usize]) -> Result<ElementSet> {
        o.subgroup_generate(elems)
    }

    fn join(o: &Self::Object, a: &ElementSet, b: &ElementSet) -> Result<ElementSet> {
        let gens: Vec<usize> = a.elements().iter().chain(b.elements()).copied().collect();
        o.subgroup_generate(&gens)
    }

    fn closure_within(o: &Self::Object, container: &ElementSet, elems: &[usize]) -> Result<ElementSet> {
        o.normal_closure_within(container, elems)
    }

    fn check_sub(o: &Self::Object, s: &ElementSet) -> Result<()> {
        o.check_subgroup(s)
    }

    fn normality_witness(o: &Self::Object, s: &ElementSet) -> Option<String> {
        o.normality_witness(s)
            .map(|(g, n)| format!("conjugating {n} by {g} leaves the subgroup"))
    }

    fn inclusion(o: &Self::Object, s: &ElementSet) -> Result<GroupMorphism> {
        o.subgroup_object(s)
    }

    fn quotient(o: &Self::Object, s: &ElementSet) -> Result<GroupMorphism> {
        o.quotient(s)
    }

    fn source(m: &GroupMorphism) -> Self::Object {
        m.source.clone()
    }

    fn target(m: &GroupMorphism) -> Self::Object {
        m.target.clone()
    }

    fn identity(o: &Self::Object) -> GroupMorphism {
        GroupMorphism::identity(o)
    }

    fn zero_map(a: &Self::Object, b: &Self::Object) -> GroupMorphism {
        GroupMorphism::trivial(a, b)
    }

    fn compose(g: &GroupMorphism, f: &GroupMorphism) -> Result<GroupMorphism> {
        g.after(f)
    }

    fn apply(m: &GroupMorphism, e: &usize) -> usize {
        m.apply(*e)
    }

    fn kernel(m: &GroupMorphism) -> ElementSet {
        m.kernel()
    }

    fn image(m: &GroupMorphism) -> ElementSet {
        m.image()
    }

    fn image_of(m: &GroupMorphism, s: &ElementSet) -> ElementSet {
        m.image_of(s)
    }

    fn is_injective(m: &GroupMorphism) -> bool {
        m.is_injective()
    }

    fn is_surjective(m: &GroupMorphism) -> bool {
        m.is_surjective()
    }

    fn map_difference(f: &GroupMorphism, g: &GroupMorphism) -> Option<String> {
        if *f.source != *g.source || *f.target != *g.target {
            return Some("different source or target".into());
        }
        (0..f.source.order())
            .find(|&x| f.map[x] != g.map[x])
            .map(|x| format!("element {x}: {} vs {}", f.map[x], g.map[x]))
    }

    fn equalizer(f: &GroupMorphism, g: &GroupMorphism) -> Result<ElementSet> {
        if *f.source != *g.source || *f.target != *g.target {
            return Err(Error::mismatch("equalizer of non-parallel maps"));
        }
        Ok(ElementSet::new((0..f.source.order()).filter(|&x| f.map[x] == g.map[x])))
    }

    fn corestrict(m: &GroupMorphism, mono: &GroupMorphism) -> Result<GroupMorphism> {
        if *m.target != *mono.target {
            return Err(Error::mismatch("corestriction needs a common target"));
        }
        let mut back = vec![usize::MAX; mono.target.order()];
        for (w, &z) in mono.map.iter().enumerate() {
            back[z] = w;
        }
        let map = m
            .map
            .iter()
            .enumerate()
            .map(|(x, &z)| {
                if back[z] == usize::MAX {
                    Err(Error::axiom("factors through the subobject", format!("element {x}")))
                } else {
                    Ok(back[z])
                }
            })
            .collect::<Result<Vec<_>>>()?;
        GroupMorphism::new(m.source.clone(), mono.source.clone(), map)
    }

    fn descend(m: &GroupMorphism, proj: &GroupMorphism) -> Result<GroupMorphism> {
        if *m.source != *proj.source {
            return Err(Error::mismatch("descent needs a common source"));
        }
        if !proj.is_surjective() {
            return Err(Error::mismatch("descent needs a surjection"));
        }
        let mut map = vec![usize::MAX; proj.target.order()];
        for s in 0..m.source.order() {
            let c = proj.map[s];
            if map[c] == usize::MAX {
                map[c] = m.map[s];
            } else if map[c] != m.map[s] {
                return Err(Error::axiom("well defined on the quotient", format!("class {c} at element {s}")));
            }
        }
        GroupMorphism::new(proj.target.clone(), m.target.clone(), map)
    }

    fn copair(sd: &Semidirect<Self>, f: &GroupMorphism, g: &GroupMorphism) -> Result<GroupMorphism> {
        let ny = sd.i.source.order();
        let z = f.target.clone();
        if *g.target != *z || *f.source != *sd.j.source || *g.source != *sd.i.source {
            return Err(Error::mismatch("copair legs must match the factors and share a target"));
        }
        let map = (0..sd.object.order())
            .map(|s| z.mul(f.map[s / ny], g.map[s % ny]))
            .collect();
        GroupMorphism::new(sd.object.clone(), z, map)
    }

    fn direct_product(x: &Self::Object, y: &Self::Object) -> Result<(Semidirect<Self>, GroupMorphism)> {
        let sd = group::semidirect(&GroupAction::trivial(y, x))?;
        let ny = y.order();
        let p1 = GroupMorphism {
            source: sd.group.clone(),
            target: x.clone(),
            map: (0..sd.group.order()).map(|s| s / ny).collect(),
        };
        Ok((from_sd(sd), p1))
    }

    fn acting(a: &GroupAction) -> Self::Object {
        a.acting.clone()
    }

    fn acted(a: &GroupAction) -> Self::Object {
        a.acted.clone()
    }

    fn check_action(a: &GroupAction) -> Result<()> {
        GroupAction::new(a.acting.clone(), a.acted.clone(), a.table.clone()).map(|_| ())
    }

    fn conjugation(o: &Self::Object) -> GroupAction {
        GroupAction::conjugation(o)
    }

    fn trivial_action(acting: &Self::Object, acted: &Self::Object) -> GroupAction {
        GroupAction::trivial(acting, acted)
    }

    fn pullback_action(a: &GroupAction, f: &GroupMorphism) -> Result<GroupAction> {
        a.pullback(f)
    }

    fn restrict_action(a: &GroupAction, incl: &GroupMorphism) -> Result<GroupAction> {
        a.restrict(incl)
    }

    fn descend_action(a: &GroupAction, proj: &GroupMorphism) -> Result<GroupAction> {
        a.descend(proj)
    }

    fn action_difference(a: &GroupAction, b: &GroupAction) -> Option<String> {
        if *a.acting != *b.acting || *a.acted != *b.acted {
            return Some("actions between different objects".into());
        }
        a.difference(b)
            .map(|(g, x)| format!("(b={g}, x={x}): {} vs {}", a.act(g, x), b.act(g, x)))
    }

    fn act_images(a: &GroupAction, elems: &[usize]) -> Vec<usize> {
        let mut out = Vec::new();
        for b in 0..a.acting.order() {
            for &x in elems {
                out.push(a.act(b, x));
            }
        }
        out
    }

    fn equivariance_witness(f: &GroupMorphism, on_src: &GroupAction, on_tgt: &GroupAction) -> Option<String> {
        for b in 0..on_src.acting.order() {
            for x in 0..f.source.order() {
                if f.apply(on_src.act(b, x)) != on_tgt.act(b, f.apply(x)) {
                    return Some(format!("(b={b}, x={x})"));
                }
            }
        }
        None
    }

    fn semidirect(a: &GroupAction) -> Result<Semidirect<Self>> {
        group::semidirect(a).map(from_sd)
    }

    fn pair_action(carrier: &Self::Object, on_x: &GroupAction, on_y: &GroupAction) -> Result<GroupAction> {
        let (nx, ny) = (on_x.acted.order(), on_y.acted.order());
        if carrier.order() != nx * ny || *on_x.acting != *on_y.acting {
            return Err(Error::mismatch("componentwise action needs a pair carrier and one acting group"));
        }
        let table = (0..on_x.acting.order())
            .map(|b| {
                (0..nx * ny)
                    .map(|s| on_x.act(b, s / ny) * ny + on_y.act(b, s % ny))
                    .collect()
            })
            .collect();
        GroupAction::new(on_x.acting.clone(), carrier.clone(), table)
    }

    fn defects(
        o: &Self::Object,
        delta: &GroupMorphism,
        act: &GroupAction,
        us: &[usize],
        vs: &[usize],
    ) -> Vec<Defect<usize>> {
        let mut out = Vec::with_capacity(us.len() * vs.len());
        for (iu, &u) in us.iter().enumerate() {
            for (iv, &v) in vs.iter().enumerate() {
                let word = o.mul(o.conj(u, v), o.inv(act.act(delta.apply(u), v)));
                out.push(Defect {
                    u: iu,
                    v: iv,
                    form: "u v u^-1 (^(du) v)^-1",
                    word,
                });
            }
        }
        out
    }

    fn enumerate_px_maps(
        src: &PreCrossedModule<Self>,
        tgt: &PreCrossedModule<Self>,
        limit: usize,
    ) -> Result<Vec<GroupMorphism>> {
        if *src.b != *tgt.b {
            return Err(Error::mismatch("pre-crossed modules over different bases"));
        }
        let cands = search::homomorphisms_with(&src.x, &tgt.x, usize::MAX, |s, t| {
            tgt.delta.apply(t) == src.delta.apply(s)
        });
        Ok(cands
            .into_iter()
            .filter(|f| px_map_witness(src, tgt, f).is_none())
            .take(limit)
            .collect())
    }

    fn isomorphism_search(
        src: &PreCrossedModule<Self>,
        tgt: &PreCrossedModule<Self>,
        _pairs: &[(usize, usize)],
    ) -> Result<Option<GroupMorphism>> {
        if *src.b != *tgt.b {
            return Err(Error::mismatch("pre-crossed modules over different bases"));
        }
        Ok(search::isomorphisms(&src.x, &tgt.x, usize::MAX)
            .into_iter()
            .find(|f| px_map_witness(src, tgt, f).is_none()))
    }
}
