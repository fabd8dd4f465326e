//! Peiffer words and commutators, the Peiffer product, the reflection onto
//! crossed modules and the coproduct of crossed modules.

use std::fmt;

use crate::error::{Error, Result};
use crate::pxmod::{
    pcm_validate, px_cokernel_of_kernel, px_image, px_join, Pcm, PreCrossedModule, PxMorphism, SubPcm,
};
use crate::variety::{Defect, Semidirect, Variety};

/// Turns a failed theorem-backed postcondition into an internal error.
/// Size caps and mismatches pass through unchanged.
fn guard(context: &str) -> impl Fn(Error) -> Error + '_ {
    move |e| match e {
        Error::Axiom { axiom, witness } => Error::internal(format!("{context}: {axiom} fails at {witness}")),
        Error::Internal(m) => Error::internal(format!("{context}: {m}")),
        other => other,
    }
}

/// Which factor the acting element comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    /// `u ∈ X` acting on `v ∈ Y`
    XonY,
    YonX,
}

#[derive(Clone)]
pub struct PeifferWord<V: Variety> {
    pub x: V::Elem,
    pub y: V::Elem,
    pub orientation: Orientation,
    pub form: &'static str,
    pub word: V::Elem,
}

impl<V: Variety> fmt::Debug for PeifferWord<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} {} at x={:?}, y={:?}: {:?}", self.orientation, self.form, self.x, self.y, self.word)
    }
}

fn tag<'a, V: Variety>(
    ds: Vec<Defect<V::Elem>>,
    xs: &'a [V::Elem],
    ys: &'a [V::Elem],
    orientation: Orientation,
) -> impl Iterator<Item = PeifferWord<V>> + 'a {
    ds.into_iter().map(move |d| {
        let (x, y) = match orientation {
            Orientation::XonY => (xs[d.u].clone(), ys[d.v].clone()),
            Orientation::YonX => (xs[d.v].clone(), ys[d.u].clone()),
        };
        PeifferWord {
            x,
            y,
            orientation,
            form: d.form,
            word: d.word,
        }
    })
}

fn same_ambient<V: Variety>(x: &SubPcm<V>, y: &SubPcm<V>) -> Result<()> {
    if x.ambient != y.ambient {
        return Err(Error::mismatch("subobjects of different pre-crossed modules"));
    }
    Ok(())
}

/// The Peiffer words of `X` and `Y` in both orientations, over all element
/// pairs (groups) or basis pairs (algebras). Each word is checked to lie in
/// the kernel of `δ`.
pub fn peiffer_words<V: Variety>(x: &SubPcm<V>, y: &SubPcm<V>) -> Result<Vec<PeifferWord<V>>> {
    same_ambient(x, y)?;
    let a = &x.ambient;
    let (xs, ys) = (x.spanning(), y.spanning());
    let mut words: Vec<PeifferWord<V>> =
        tag::<V>(V::defects(&a.x, &a.delta, &a.xi, &xs, &ys), &xs, &ys, Orientation::XonY).collect();
    words.extend(tag::<V>(V::defects(&a.x, &a.delta, &a.xi, &ys, &xs), &xs, &ys, Orientation::YonX));
    for w in &words {
        let d = V::apply(&a.delta, &w.word);
        if !V::is_neutral(&a.b, &d) {
            return Err(Error::internal(format!(
                "Peiffer word {} at x={}, y={} has nonzero image {} under delta",
                V::elem_text(&a.x, &w.word),
                V::elem_text(&a.x, &w.x),
                V::elem_text(&a.x, &w.y),
                V::elem_text(&a.b, &d)
            )));
        }
    }
    Ok(words)
}

/// `⟨X, Y⟩`: the normal closure (groups) or ideal (algebras) generated by the
/// Peiffer words inside `X ∨ Y`.
pub fn peiffer_commutator<V: Variety>(x: &SubPcm<V>, y: &SubPcm<V>) -> Result<SubPcm<V>> {
    let words = peiffer_words(x, y)?;
    commutator_from_words(x, y, &words)
}

pub(crate) fn commutator_from_words<V: Variety>(
    x: &SubPcm<V>,
    y: &SubPcm<V>,
    words: &[PeifferWord<V>],
) -> Result<SubPcm<V>> {
    let a = &x.ambient;
    let join = px_join(x, y)?;
    let elems: Vec<V::Elem> = words.iter().map(|w| w.word.clone()).collect();
    let sub = V::closure_within(&a.x, &join.sub, &elems)?;
    let c = SubPcm::new(a.clone(), sub).map_err(guard("Peiffer commutator"))?;
    if V::image_of(&a.delta, &c.sub) != V::bottom(&a.b) {
        return Err(Error::internal("Peiffer commutator is not in the kernel of delta"));
    }
    Ok(c)
}

/// `X ⋈ Y` as a quotient of `X ⋊ Y`, with the intermediate data.
#[derive(Clone)]
pub struct PeifferProduct<V: Variety> {
    pub result: Pcm<V>,
    pub lx: PxMorphism<V>,
    pub ly: PxMorphism<V>,
    pub semidirect: Semidirect<V>,
    /// `X ⋊ Y` as a pre-crossed module, with `B` acting componentwise.
    pub presented: Pcm<V>,
    /// The normal subobject generated by the relations.
    pub relations: SubPcm<V>,
    /// `X ⋊ Y → X ⋈ Y`
    pub quotient: PxMorphism<V>,
}

impl<V: Variety> fmt::Debug for PeifferProduct<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PeifferProduct({:?})", self.result)
    }
}

/// `X ⋊ Y` for `Y` acting on `X` through `δ_Y`, as a pre-crossed module
/// with `δ(x, y) = δx δy` and `B` acting componentwise.
pub fn semidirect_pcm<V: Variety>(xp: &Pcm<V>, yp: &Pcm<V>) -> Result<(Pcm<V>, Semidirect<V>)> {
    if xp.b != yp.b {
        return Err(Error::mismatch("pre-crossed modules over different bases"));
    }
    let g = guard("semidirect pre-crossed module");
    let y_on_x = V::pullback_action(&xp.xi, &yp.delta)?;
    let sd = V::semidirect(&y_on_x)?;
    let presented = pcm_validate(
        format!("{}x|{}", xp.name, yp.name),
        sd.object.clone(),
        xp.b.clone(),
        V::copair(&sd, &xp.delta, &yp.delta).map_err(&g)?,
        V::pair_action(&sd.object, &xp.xi, &yp.xi).map_err(&g)?,
    )
    .map_err(&g)?;
    Ok((presented, sd))
}

/// The Peiffer product of two pre-crossed modules over the same base.
///
/// `Y` acts on `X` through `δ_Y`, so in `X ⋊ Y` that action is already
/// conjugation; the quotient imposes the `X`-on-`Y` relations
/// `j(x) i(y) j(x)⁻¹ i(ᵟˣy)⁻¹` (groups) or
/// `j(x·δy) - i(δx·y)` and `j(δy·x) - i(y·δx)` (algebras).
pub fn peiffer_product<V: Variety>(xp: &Pcm<V>, yp: &Pcm<V>) -> Result<PeifferProduct<V>> {
    if xp.b != yp.b {
        return Err(Error::mismatch("Peiffer product of pre-crossed modules over different bases"));
    }
    let g = guard("Peiffer product");
    let (presented, sd) = semidirect_pcm(xp, yp)?;
    let jx = PxMorphism::new(xp.clone(), presented.clone(), sd.j.clone()).map_err(&g)?;
    let iy = PxMorphism::new(yp.clone(), presented.clone(), sd.i.clone()).map_err(&g)?;
    let xs: Vec<V::Elem> = V::spanning(&V::whole(&xp.x)).iter().map(|e| V::apply(&sd.j, e)).collect();
    let ys: Vec<V::Elem> = V::spanning(&V::whole(&yp.x)).iter().map(|e| V::apply(&sd.i, e)).collect();
    let rel: Vec<V::Elem> = V::defects(&sd.object, &presented.delta, &presented.xi, &xs, &ys)
        .into_iter()
        .map(|d| d.word)
        .collect();
    let closure = V::closure_within(&sd.object, &V::whole(&sd.object), &rel)?;
    let relations = SubPcm::new(presented.clone(), closure).map_err(&g)?;
    let quotient = px_cokernel_of_kernel(&relations).map_err(&g)?;
    let result = quotient.target.renamed(format!("{}><{}", xp.name, yp.name));
    let quotient = PxMorphism {
        source: quotient.source,
        target: result.clone(),
        map: quotient.map,
    };
    let lx = quotient.after(&jx).map_err(&g)?;
    let ly = quotient.after(&iy).map_err(&g)?;
    let p = PeifferProduct {
        result,
        lx,
        ly,
        semidirect: sd,
        presented,
        relations,
        quotient,
    };
    if let Some(w) = conjugation_witness(&p) {
        return Err(Error::internal(format!("Peiffer product: action not realized by conjugation at {w}")));
    }
    let joint = px_join(&px_image(&p.lx)?, &px_image(&p.ly)?)?;
    if !joint.is_whole() {
        return Err(Error::internal("Peiffer product: l_X and l_Y do not generate the result"));
    }
    Ok(p)
}

/// `None` if both actions become conjugation in the product:
/// `l_Y(y) l_X(x) l_Y(y)⁻¹ = l_X(ᵟʸx)` and `l_X(x) l_Y(y) l_X(x)⁻¹ = l_Y(ᵟˣy)`
/// (products in place of conjugates for algebras).
pub fn conjugation_witness<V: Variety>(p: &PeifferProduct<V>) -> Option<String> {
    let r = &p.result;
    let xs: Vec<V::Elem> = V::spanning(&V::whole(&p.lx.source.x)).iter().map(|e| V::apply(&p.lx.map, e)).collect();
    let ys: Vec<V::Elem> = V::spanning(&V::whole(&p.ly.source.x)).iter().map(|e| V::apply(&p.ly.map, e)).collect();
    for (us, vs, which) in [(&xs, &ys, "X on Y"), (&ys, &xs, "Y on X")] {
        if let Some(d) = V::defects(&r.x, &r.delta, &r.xi, us, vs)
            .into_iter()
            .find(|d| !V::is_neutral(&r.x, &d.word))
        {
            return Some(format!("{which}, pair ({}, {}), {}", d.u, d.v, d.form));
        }
    }
    None
}

/// Result of asking for the map out of a Peiffer product.
#[derive(Debug, Clone)]
pub enum Induced<V: Variety> {
    Morphism(PxMorphism<V>),
    /// `⟨f(X), g(Y)⟩` is nonzero, so no such map exists.
    Obstructed(SubPcm<V>),
}

impl<V: Variety> Induced<V> {
    pub fn morphism(self) -> Option<PxMorphism<V>> {
        match self {
            Induced::Morphism(m) => Some(m),
            Induced::Obstructed(_) => None,
        }
    }
}

/// The unique `φ: X ⋈ Y → Z` with `φ l_X = f` and `φ l_Y = g`, when
/// `⟨f(X), g(Y)⟩` vanishes.
pub fn induced_morphism<V: Variety>(p: &PeifferProduct<V>, f: &PxMorphism<V>, g: &PxMorphism<V>) -> Result<Induced<V>> {
    if f.source != p.lx.source || g.source != p.ly.source {
        return Err(Error::mismatch("legs must start at the factors of the product"));
    }
    if f.target != g.target {
        return Err(Error::mismatch("legs must share a target"));
    }
    let c = peiffer_commutator(&px_image(f)?, &px_image(g)?)?;
    if !c.is_trivial() {
        return Ok(Induced::Obstructed(c));
    }
    let gd = guard("induced morphism");
    let on_s = V::copair(&p.semidirect, &f.map, &g.map).map_err(&gd)?;
    let phi = V::descend(&on_s, &p.quotient.map).map_err(&gd)?;
    let phi = PxMorphism::new(p.result.clone(), f.target.clone(), phi).map_err(&gd)?;
    if V::map_difference(&V::compose(&phi.map, &p.lx.map)?, &f.map).is_some()
        || V::map_difference(&V::compose(&phi.map, &p.ly.map)?, &g.map).is_some()
    {
        return Err(Error::internal("induced morphism does not restrict to the legs"));
    }
    Ok(Induced::Morphism(phi))
}

/// The crossed module reflection of a pre-crossed module.
#[derive(Debug, Clone)]
pub struct Reflection<V: Variety> {
    pub commutator: SubPcm<V>,
    /// `η: A → A/⟨A, A⟩`
    pub eta: PxMorphism<V>,
}

impl<V: Variety> Reflection<V> {
    pub fn crossed(&self) -> &Pcm<V> {
        &self.eta.target
    }
}

pub fn reflect<V: Variety>(a: &Pcm<V>) -> Result<Reflection<V>> {
    let commutator = peiffer_commutator(&a.whole(), &a.whole())?;
    let eta = px_cokernel_of_kernel(&commutator).map_err(guard("reflection"))?;
    let crossed = eta.target.renamed(format!("{}^xmod", a.name));
    let eta = PxMorphism {
        source: eta.source,
        target: crossed,
        map: eta.map,
    };
    if let Some(w) = eta.target.crossed_witness() {
        return Err(Error::internal(format!("reflection is not crossed at {w}")));
    }
    Ok(Reflection { commutator, eta })
}

/// The coproduct of two crossed modules: their Peiffer product, which is
/// checked to be crossed. Mediators come from [`induced_morphism`].
pub fn coproduct_xmod<V: Variety>(x: &Pcm<V>, y: &Pcm<V>) -> Result<PeifferProduct<V>> {
    for f in [x, y] {
        if let Some(w) = f.crossed_witness() {
            return Err(Error::axiom(format!("{} is a crossed module", f.name), w));
        }
    }
    let p = peiffer_product(x, y)?;
    if let Some(w) = p.result.crossed_witness() {
        return Err(Error::internal(format!("coproduct is not crossed at {w}")));
    }
    Ok(p)
}

/// `X ⋈ Y` against `Y ⋈ X`.
#[derive(Debug, Clone)]
pub struct Symmetry<V: Variety> {
    pub swapped: PeifferProduct<V>,
    /// `X ⋈ Y → Y ⋈ X` induced by the swapped legs; an isomorphism.
    pub comparison: PxMorphism<V>,
}

pub fn symmetric_comparison<V: Variety>(p: &PeifferProduct<V>) -> Result<Symmetry<V>> {
    let swapped = peiffer_product(&p.ly.source, &p.lx.source)?;
    let phi = induced_morphism(p, &swapped.ly, &swapped.lx)?
        .morphism()
        .ok_or_else(|| Error::internal("swapped legs do not induce a comparison"))?;
    if !phi.is_iso() {
        return Err(Error::internal("comparison X><Y -> Y><X is not an isomorphism"));
    }
    Ok(Symmetry {
        swapped,
        comparison: phi,
    })
}

/// An isomorphism `X ⋈ Y ≅ Y ⋈ X` over `B` found by the variety's own search,
/// without the Peiffer machinery.
pub fn symmetric_isomorphism_search<V: Variety>(p: &PeifferProduct<V>, swapped: &PeifferProduct<V>) -> Result<Option<V::Map>> {
    let mut pairs = Vec::new();
    for (mine, theirs) in [(&p.lx, &swapped.ly), (&p.ly, &swapped.lx)] {
        for e in V::spanning(&V::whole(&mine.source.x)) {
            pairs.push((V::apply(&mine.map, &e), V::apply(&theirs.map, &e)));
        }
    }
    V::isomorphism_search(&p.result, &swapped.result, &pairs)
}

/// `⟨A, A⟩ = 0`
pub fn commutator_vanishes<V: Variety>(a: &Pcm<V>) -> Result<bool> {
    Ok(peiffer_commutator(&a.whole(), &a.whole())?.is_trivial())
}

impl<V: Variety> PreCrossedModule<V> {
    pub fn peiffer_commutator(self: &std::sync::Arc<Self>) -> Result<SubPcm<V>> {
        peiffer_commutator(&self.whole(), &self.whole())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::algebras::ground_field;
    use crate::catalog::groups::{cyclic, klein, product, symmetric3};
    use crate::catalog::instances::{c4_inversion, dual_numbers_augmentation, zero_trivial_group};
    use crate::field::FieldSpec;
    use crate::group::{ElementSet, GroupAction};
    use crate::linalg::Subspace;
    use crate::variety::{Algebras, Groups};

    #[test]
    fn words_of_the_inversion_instance() {
        let p = c4_inversion();
        let words = peiffer_words(&p.whole(), &p.whole()).unwrap();
        let w = words
            .iter()
            .find(|w| w.x == 1 && w.y == 1 && w.orientation == Orientation::XonY)
            .unwrap();
        assert_eq!(w.word, 2);
        assert!(words.iter().all(|w| w.word == 0 || w.word == 2));
    }

    #[test]
    fn words_vanish_in_crossed_modules() {
        let a = PreCrossedModule::<Groups>::identity(&symmetric3());
        assert!(peiffer_words(&a.whole(), &a.whole()).unwrap().iter().all(|w| w.word == 0));
        let z = zero_trivial_group(&symmetric3(), &cyclic(2));
        for w in peiffer_words(&z.whole(), &z.whole()).unwrap() {
            let (u, v) = match w.orientation {
                Orientation::XonY => (w.x, w.y),
                Orientation::YonX => (w.y, w.x),
            };
            assert_eq!(w.word, z.x.commutator(u, v));
        }
    }

    #[test]
    fn commutator_examples() {
        assert!(PreCrossedModule::<Groups>::identity(&symmetric3()).peiffer_commutator().unwrap().is_trivial());
        assert_eq!(c4_inversion().peiffer_commutator().unwrap().sub, ElementSet::new([0, 2]));
        let d = dual_numbers_augmentation(FieldSpec::Prime(2));
        let f = FieldSpec::Prime(2);
        assert_eq!(
            d.peiffer_commutator().unwrap().sub,
            Subspace::span(f, 2, [vec![f.zero(), f.one()]])
        );
    }

    #[test]
    fn product_of_trivial_factors_is_direct() {
        let (c2, c3) = (cyclic(2), cyclic(3));
        let p = peiffer_product(&zero_trivial_group(&c2, &c2), &zero_trivial_group(&c3, &c2)).unwrap();
        assert_eq!(*p.result.x, *product(&c2, &c3));
        assert!(p.relations.is_trivial());
    }

    #[test]
    fn product_of_identity_with_itself() {
        let c2 = cyclic(2);
        let id = PreCrossedModule::<Groups>::identity(&c2);
        let p = peiffer_product(&id, &id).unwrap();
        assert_eq!(p.result.x.order(), 4);
        assert_eq!(p.result.delta.map, vec![0, 1, 1, 0]);
        assert_eq!(p.result.xi, GroupAction::trivial(&c2, &p.result.x));
        assert!(p.result.is_crossed());
    }

    #[test]
    fn product_with_zero_is_the_other_factor() {
        let y = c4_inversion();
        let z = PreCrossedModule::<Groups>::zero(&y.b).unwrap();
        let p = peiffer_product(&z, &y).unwrap();
        assert!(p.ly.is_iso());
        let f = FieldSpec::Prime(2);
        let y = dual_numbers_augmentation(f);
        let z = PreCrossedModule::<Algebras>::zero(&y.b).unwrap();
        assert!(peiffer_product(&z, &y).unwrap().ly.is_iso());
    }

    #[test]
    fn induced_morphisms() {
        let c2 = cyclic(2);
        let id = PreCrossedModule::<Groups>::identity(&c2);
        let p = peiffer_product(&id, &id).unwrap();
        let phi = induced_morphism(&p, &p.lx, &p.ly).unwrap().morphism().unwrap();
        assert_eq!(phi.map, Groups::identity(&p.result.x));
        // into a crossed module
        let psi = induced_morphism(&p, &PxMorphism::identity(&id), &PxMorphism::identity(&id)).unwrap();
        assert_eq!(psi.morphism().unwrap().map.map, vec![0, 1, 1, 0]);
        // into the non-crossed inversion instance
        let a = c4_inversion();
        let q = peiffer_product(&a, &a).unwrap();
        match induced_morphism(&q, &PxMorphism::identity(&a), &PxMorphism::identity(&a)).unwrap() {
            Induced::Obstructed(c) => assert_eq!(c.sub, ElementSet::new([0, 2])),
            Induced::Morphism(_) => panic!("expected an obstruction"),
        }
    }

    #[test]
    fn reflections() {
        let id = PreCrossedModule::<Groups>::identity(&symmetric3());
        assert!(reflect(&id).unwrap().eta.is_iso());
        let r = reflect(&c4_inversion()).unwrap();
        let c = r.crossed();
        assert_eq!((c.x.order(), c.delta.map.clone()), (2, vec![0, 1]));
        assert_eq!(c.xi, GroupAction::trivial(&c.b, &c.x));
        let f = FieldSpec::Prime(2);
        let r = reflect(&dual_numbers_augmentation(f)).unwrap();
        let c = r.crossed();
        assert_eq!(*c.x, *ground_field(f));
        assert!(c.delta.is_injective() && c.delta.is_surjective());
    }

    #[test]
    fn coproducts() {
        let c2 = cyclic(2);
        let id = PreCrossedModule::<Groups>::identity(&c2);
        let p = coproduct_xmod(&id, &id).unwrap();
        assert_eq!(p.result.delta.map, vec![0, 1, 1, 0]);
        let z = PreCrossedModule::<Groups>::zero(&c2).unwrap();
        assert!(coproduct_xmod(&id, &z).unwrap().lx.is_iso());
        let (a, b) = (zero_trivial_group(&klein(), &c2), zero_trivial_group(&cyclic(3), &c2));
        let p = coproduct_xmod(&a, &b).unwrap();
        assert_eq!(*p.result.x, *product(&klein(), &cyclic(3)));
        assert!(p.result.delta.map.iter().all(|&v| v == 0));
        assert!(matches!(coproduct_xmod(&c4_inversion(), &id), Err(Error::Axiom { .. })));
    }

    #[test]
    fn symmetry() {
        let a = c4_inversion();
        let p = peiffer_product(&a, &PreCrossedModule::identity(&a.b)).unwrap();
        let s = symmetric_comparison(&p).unwrap();
        assert!(s.comparison.is_iso());
        assert!(symmetric_isomorphism_search(&p, &s.swapped).unwrap().is_some());
        let d = dual_numbers_augmentation(FieldSpec::Prime(2));
        let p = peiffer_product(&d, &PreCrossedModule::identity(&d.b)).unwrap();
        let s = symmetric_comparison(&p).unwrap();
        let t = symmetric_isomorphism_search(&p, &s.swapped).unwrap().unwrap();
        assert_eq!(t, s.comparison.map);
    }
}
