//! Pre-crossed modules over a fixed base and their morphisms, subobjects,
//! kernels, images, pullbacks, joins and cokernels.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::variety::Variety;

/// `δ: X → B` with an action `ξ` of `B` on `X` such that `δ` is equivariant
/// for conjugation on `B`.
#[derive(Clone)]
pub struct PreCrossedModule<V: Variety> {
    pub name: String,
    pub x: V::Object,
    pub b: V::Object,
    pub delta: V::Map,
    pub xi: V::Action,
}

impl<V: Variety> PartialEq for PreCrossedModule<V> {
    fn eq(&self, other: &Self) -> bool {
        self.x == other.x && self.b == other.b && self.delta == other.delta && self.xi == other.xi
    }
}

impl<V: Variety> fmt::Debug for PreCrossedModule<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} -> {}", self.name, V::name(&self.x), V::name(&self.b))
    }
}

pub type Pcm<V> = Arc<PreCrossedModule<V>>;

/// Checks the components and the pre-crossed condition.
pub fn pcm_validate<V: Variety>(
    name: impl Into<String>,
    x: V::Object,
    b: V::Object,
    delta: V::Map,
    xi: V::Action,
) -> Result<Pcm<V>> {
    if V::source(&delta) != x || V::target(&delta) != b {
        return Err(Error::mismatch("delta must go from X to B"));
    }
    if V::acting(&xi) != b || V::acted(&xi) != x {
        return Err(Error::mismatch("the action must be of B on X"));
    }
    if V::tag(&x) != V::tag(&b) {
        return Err(Error::mismatch("X and B belong to different varieties"));
    }
    V::check_action(&xi)?;
    if let Some(w) = V::equivariance_witness(&delta, &xi, &V::conjugation(&b)) {
        return Err(Error::axiom("pre-crossed condition", w));
    }
    Ok(Arc::new(PreCrossedModule {
        name: name.into(),
        x,
        b,
        delta,
        xi,
    }))
}

impl<V: Variety> PreCrossedModule<V> {
    /// `1_B` with conjugation, a crossed module.
    pub fn identity(b: &V::Object) -> Pcm<V> {
        Arc::new(PreCrossedModule {
            name: format!("id({})", V::name(b)),
            x: b.clone(),
            b: b.clone(),
            delta: V::identity(b),
            xi: V::conjugation(b),
        })
    }

    /// The zero object over `b`.
    pub fn zero(b: &V::Object) -> Result<Pcm<V>> {
        let z = V::target(&V::quotient(b, &V::whole(b))?);
        pcm_validate(
            format!("0->{}", V::name(b)),
            z.clone(),
            b.clone(),
            V::zero_map(&z, b),
            V::trivial_action(b, &z),
        )
    }

    pub fn renamed(&self, name: impl Into<String>) -> Pcm<V> {
        let mut p = self.clone();
        p.name = name.into();
        Arc::new(p)
    }

    /// `None` when the Peiffer identity holds, otherwise the first pair
    /// where `x` acting on `x'` through `δ` differs from conjugation.
    pub fn crossed_witness(&self) -> Option<String> {
        let through = V::pullback_action(&self.xi, &self.delta).expect("delta lands in B");
        V::action_difference(&through, &V::conjugation(&self.x))
    }

    pub fn is_crossed(&self) -> bool {
        self.crossed_witness().is_none()
    }

    pub fn whole(self: &Arc<Self>) -> SubPcm<V> {
        SubPcm {
            ambient: self.clone(),
            sub: V::whole(&self.x),
        }
    }

    pub fn bottom(self: &Arc<Self>) -> SubPcm<V> {
        SubPcm {
            ambient: self.clone(),
            sub: V::bottom(&self.x),
        }
    }
}

/// `None` if `map` is a morphism of pre-crossed modules `src → tgt`.
pub fn px_map_witness<V: Variety>(src: &PreCrossedModule<V>, tgt: &PreCrossedModule<V>, map: &V::Map) -> Option<String> {
    if V::source(map) != src.x || V::target(map) != tgt.x {
        return Some("map does not go between the carriers".into());
    }
    let over = V::compose(&tgt.delta, map).expect("composable");
    if let Some(w) = V::map_difference(&over, &src.delta) {
        return Some(format!("not over B at {w}"));
    }
    V::equivariance_witness(map, &src.xi, &tgt.xi).map(|w| format!("not equivariant at {w}"))
}

/// A map of pre-crossed modules over the same base.
#[derive(Clone)]
pub struct PxMorphism<V: Variety> {
    pub source: Pcm<V>,
    pub target: Pcm<V>,
    pub map: V::Map,
}

impl<V: Variety> fmt::Debug for PxMorphism<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} => {:?}: {:?}", self.source, self.target, self.map)
    }
}

impl<V: Variety> PartialEq for PxMorphism<V> {
    fn eq(&self, other: &Self) -> bool {
        self.source == other.source && self.target == other.target && self.map == other.map
    }
}

impl<V: Variety> PxMorphism<V> {
    pub fn new(source: Pcm<V>, target: Pcm<V>, map: V::Map) -> Result<Self> {
        if source.b != target.b {
            return Err(Error::mismatch("pre-crossed modules over different bases"));
        }
        if V::source(&map) != source.x || V::target(&map) != target.x {
            return Err(Error::mismatch("map does not go between the carriers"));
        }
        let over = V::compose(&target.delta, &map)?;
        if let Some(w) = V::map_difference(&over, &source.delta) {
            return Err(Error::axiom("over B", w));
        }
        if let Some(w) = V::equivariance_witness(&map, &source.xi, &target.xi) {
            return Err(Error::axiom("equivariance", w));
        }
        Ok(PxMorphism { source, target, map })
    }

    pub fn identity(p: &Pcm<V>) -> Self {
        PxMorphism {
            source: p.clone(),
            target: p.clone(),
            map: V::identity(&p.x),
        }
    }

    /// `self ∘ first`
    pub fn after(&self, first: &PxMorphism<V>) -> Result<Self> {
        if first.target != self.source {
            return Err(Error::mismatch("composable morphisms need matching objects"));
        }
        PxMorphism::new(first.source.clone(), self.target.clone(), V::compose(&self.map, &first.map)?)
    }

    pub fn is_injective(&self) -> bool {
        V::is_injective(&self.map)
    }

    pub fn is_surjective(&self) -> bool {
        V::is_surjective(&self.map)
    }

    pub fn is_iso(&self) -> bool {
        self.is_injective() && self.is_surjective()
    }
}

/// A `B`-stable subobject of a pre-crossed module.
#[derive(Clone)]
pub struct SubPcm<V: Variety> {
    pub ambient: Pcm<V>,
    pub sub: V::Sub,
}

impl<V: Variety> fmt::Debug for SubPcm<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in {:?}", V::sub_text(&self.ambient.x, &self.sub), self.ambient)
    }
}

impl<V: Variety> PartialEq for SubPcm<V> {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.sub == other.sub
    }
}

fn stability_witness<V: Variety>(ambient: &PreCrossedModule<V>, sub: &V::Sub) -> Option<String> {
    let span = V::spanning(sub);
    V::act_images(&ambient.xi, &span)
        .iter()
        .find(|e| !V::sub_contains(sub, e))
        .map(|e| format!("image {} leaves the subobject", V::elem_text(&ambient.x, e)))
}

impl<V: Variety> SubPcm<V> {
    pub fn new(ambient: Pcm<V>, sub: V::Sub) -> Result<Self> {
        V::check_sub(&ambient.x, &sub)?;
        if let Some(w) = stability_witness(&ambient, &sub) {
            return Err(Error::axiom("stability under the action", w));
        }
        Ok(SubPcm { ambient, sub })
    }

    /// The smallest `B`-stable subobject containing `elems`.
    pub fn generated(ambient: Pcm<V>, elems: &[V::Elem]) -> Result<Self> {
        let mut sub = V::generate(&ambient.x, elems)?;
        loop {
            let span = V::spanning(&sub);
            let more: Vec<V::Elem> = V::act_images(&ambient.xi, &span)
                .into_iter()
                .filter(|e| !V::sub_contains(&sub, e))
                .collect();
            if more.is_empty() {
                return Ok(SubPcm { ambient, sub });
            }
            let all: Vec<V::Elem> = span.into_iter().chain(more).collect();
            sub = V::generate(&ambient.x, &all)?;
        }
    }

    pub fn size(&self) -> usize {
        V::sub_size(&self.sub)
    }

    pub fn is_trivial(&self) -> bool {
        self.sub == V::bottom(&self.ambient.x)
    }

    pub fn is_whole(&self) -> bool {
        self.sub == V::whole(&self.ambient.x)
    }

    pub fn le(&self, other: &SubPcm<V>) -> bool {
        self.ambient == other.ambient && V::sub_le(&self.sub, &other.sub)
    }

    pub fn spanning(&self) -> Vec<V::Elem> {
        V::spanning(&self.sub)
    }

    pub fn text(&self) -> String {
        V::sub_text(&self.ambient.x, &self.sub)
    }

    /// The subobject as a pre-crossed module with its inclusion.
    pub fn materialize(&self) -> Result<PxMorphism<V>> {
        let incl = V::inclusion(&self.ambient.x, &self.sub)?;
        let s = V::source(&incl);
        let pcm = pcm_validate(
            format!("sub({})", self.ambient.name),
            s,
            self.ambient.b.clone(),
            V::compose(&self.ambient.delta, &incl)?,
            V::restrict_action(&self.ambient.xi, &incl)?,
        )?;
        PxMorphism::new(pcm, self.ambient.clone(), incl)
    }
}

fn internal(e: Error) -> Error {
    match e {
        Error::Axiom { axiom, witness } => Error::internal(format!("{axiom} fails at {witness}")),
        other => other,
    }
}

pub fn px_kernel<V: Variety>(f: &PxMorphism<V>) -> Result<SubPcm<V>> {
    SubPcm::new(f.source.clone(), V::kernel(&f.map)).map_err(internal)
}

pub fn px_image<V: Variety>(f: &PxMorphism<V>) -> Result<SubPcm<V>> {
    SubPcm::new(f.target.clone(), V::image(&f.map)).map_err(internal)
}

/// Image of a subobject of `f.source` in `f.target`.
pub fn px_image_of<V: Variety>(f: &PxMorphism<V>, s: &SubPcm<V>) -> Result<SubPcm<V>> {
    if s.ambient != f.source {
        return Err(Error::mismatch("subobject of a different pre-crossed module"));
    }
    SubPcm::new(f.target.clone(), V::image_of(&f.map, &s.sub)).map_err(internal)
}

/// `f = m ∘ e` with `e` surjective onto the image and `m` injective.
pub fn px_factorize<V: Variety>(f: &PxMorphism<V>) -> Result<(PxMorphism<V>, PxMorphism<V>)> {
    let mono = px_image(f)?.materialize()?;
    let epi = PxMorphism::new(f.source.clone(), mono.source.clone(), V::corestrict(&f.map, &mono.map)?)?;
    Ok((epi, mono))
}

/// `X ×_A Y` with its two projections.
#[derive(Debug, Clone)]
pub struct Pullback<V: Variety> {
    pub object: Pcm<V>,
    pub p1: PxMorphism<V>,
    pub p2: PxMorphism<V>,
}

pub fn px_pullback<V: Variety>(f: &PxMorphism<V>, g: &PxMorphism<V>) -> Result<Pullback<V>> {
    if f.target != g.target {
        return Err(Error::mismatch("pullback needs a common target"));
    }
    let (x, y) = (&f.source, &g.source);
    let (sd, p1) = V::direct_product(&x.x, &y.x)?;
    let p2 = sd.p.clone();
    let eq = V::equalizer(&V::compose(&f.map, &p1)?, &V::compose(&g.map, &p2)?)?;
    let incl = V::inclusion(&sd.object, &eq)?;
    let on_pairs = V::pair_action(&sd.object, &x.xi, &y.xi)?;
    let q1 = V::compose(&p1, &incl)?;
    let q2 = V::compose(&p2, &incl)?;
    let object = pcm_validate(
        format!("{}x_{}", x.name, y.name),
        V::source(&incl),
        x.b.clone(),
        V::compose(&x.delta, &q1)?,
        V::restrict_action(&on_pairs, &incl)?,
    )?;
    Ok(Pullback {
        p1: PxMorphism::new(object.clone(), x.clone(), q1)?,
        p2: PxMorphism::new(object.clone(), y.clone(), q2)?,
        object,
    })
}

pub fn px_join<V: Variety>(a: &SubPcm<V>, b: &SubPcm<V>) -> Result<SubPcm<V>> {
    if a.ambient != b.ambient {
        return Err(Error::mismatch("join of subobjects of different pre-crossed modules"));
    }
    let sub = V::join(&a.ambient.x, &a.sub, &b.sub)?;
    SubPcm::new(a.ambient.clone(), sub).map_err(internal)
}

/// The quotient by a normal subobject on which `δ` vanishes, with its
/// projection.
pub fn px_cokernel_of_kernel<V: Variety>(k: &SubPcm<V>) -> Result<PxMorphism<V>> {
    let a = &k.ambient;
    if let Some(w) = V::normality_witness(&a.x, &k.sub) {
        return Err(Error::axiom("normal subobject", w));
    }
    let img = V::image_of(&a.delta, &k.sub);
    if img != V::bottom(&a.b) {
        return Err(Error::axiom(
            "delta vanishes on the subobject",
            format!("image {}", V::sub_text(&a.b, &img)),
        ));
    }
    let proj = V::quotient(&a.x, &k.sub)?;
    let q = pcm_validate(
        format!("{}/{}", a.name, k.text()),
        V::target(&proj),
        a.b.clone(),
        V::descend(&a.delta, &proj)?,
        V::descend_action(&a.xi, &proj)?,
    )?;
    PxMorphism::new(a.clone(), q, proj)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::groups::{cyclic, klein};
    use crate::catalog::instances::{c4_inversion, dual_numbers_augmentation, zero_trivial_group};
    use crate::field::FieldSpec;
    use crate::group::{ElementSet, GroupAction};
    use crate::variety::Groups;

    fn delta_as_morphism(p: &Pcm<Groups>) -> PxMorphism<Groups> {
        PxMorphism::new(p.clone(), PreCrossedModule::identity(&p.b), p.delta.clone()).unwrap()
    }

    #[test]
    fn validation_examples() {
        let c2 = cyclic(2);
        assert!(PreCrossedModule::<Groups>::identity(&c2).is_crossed());
        c4_inversion();
        dual_numbers_augmentation(FieldSpec::Prime(2));
        let bad = crate::catalog::instances::corrupted_identity();
        let err = pcm_validate::<Groups>("bad", bad.x.clone(), bad.b.clone(), bad.delta.clone(), bad.xi.clone());
        assert!(matches!(err, Err(Error::Axiom { .. })));
    }

    #[test]
    fn non_equivariant_map_is_rejected() {
        let p = c4_inversion();
        let plain = pcm_validate::<Groups>(
            "C4->C2 trivial",
            p.x.clone(),
            p.b.clone(),
            p.delta.clone(),
            GroupAction::trivial(&p.b, &p.x),
        )
        .unwrap();
        let err = PxMorphism::new(plain, p.clone(), Groups::identity(&p.x)).unwrap_err();
        assert_eq!(err, Error::axiom("equivariance", "(b=1, x=1)"));
    }

    #[test]
    fn kernels() {
        let p = c4_inversion();
        assert!(px_kernel(&PxMorphism::identity(&p)).unwrap().is_trivial());
        assert_eq!(px_kernel(&delta_as_morphism(&p)).unwrap().sub, ElementSet::new([0, 2]));
        let a = zero_trivial_group(&klein(), &cyclic(2));
        let z = PreCrossedModule::<Groups>::zero(&a.b).unwrap();
        let to_zero = PxMorphism::new(a.clone(), z.clone(), Groups::zero_map(&a.x, &z.x)).unwrap();
        assert!(px_kernel(&to_zero).unwrap().is_whole());
    }

    #[test]
    fn factorization_of_delta() {
        let f = delta_as_morphism(&c4_inversion());
        let (e, m) = px_factorize(&f).unwrap();
        assert!(e.is_surjective() && m.is_injective() && m.is_iso());
        assert_eq!(m.after(&e).unwrap().map, f.map);
        let id = PxMorphism::identity(&c4_inversion());
        let (e, m) = px_factorize(&id).unwrap();
        assert!(e.is_iso() && m.is_iso());
    }

    #[test]
    fn pullback_of_delta_with_itself() {
        let f = delta_as_morphism(&c4_inversion());
        let pb = px_pullback(&f, &f).unwrap();
        assert_eq!(pb.object.x.order(), 8);
        let id = PxMorphism::identity(&c4_inversion());
        assert_eq!(px_pullback(&id, &id).unwrap().object.x.order(), 4);
    }

    #[test]
    fn join_of_two_lines() {
        let a = zero_trivial_group(&klein(), &cyclic(2));
        let x = SubPcm::new(a.clone(), ElementSet::new([0, 1])).unwrap();
        let y = SubPcm::new(a.clone(), ElementSet::new([0, 2])).unwrap();
        assert!(px_join(&x, &y).unwrap().is_whole());
        assert_eq!(px_join(&x, &a.bottom()).unwrap(), x);
        assert_eq!(px_join(&x, &x).unwrap(), x);
    }

    #[test]
    fn cokernel_of_the_square_subgroup() {
        let p = c4_inversion();
        let k = SubPcm::new(p.clone(), ElementSet::new([0, 2])).unwrap();
        let q = px_cokernel_of_kernel(&k).unwrap();
        let r = &q.target;
        assert_eq!(r.x.order(), 2);
        assert_eq!(r.delta.map, vec![0, 1]);
        assert_eq!(r.xi, GroupAction::trivial(&r.b, &r.x));
        assert!(px_cokernel_of_kernel(&p.bottom()).unwrap().is_iso());
        // delta does not vanish on the whole of C4
        assert!(matches!(px_cokernel_of_kernel(&p.whole()), Err(Error::Axiom { .. })));
    }

    #[test]
    fn unstable_subobject_is_rejected() {
        let p = crate::catalog::instances::s3_sign();
        // a transposition other than the conjugating one
        let err = SubPcm::new(p, ElementSet::new([0, 2])).unwrap_err();
        assert!(matches!(err, Error::Axiom { ref axiom, .. } if axiom == "stability under the action"));
    }
}
