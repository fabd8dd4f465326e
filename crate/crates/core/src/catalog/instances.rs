//! Named pre-crossed modules.

use std::sync::Arc;

use super::algebras::{
    dual_numbers, ground_field, heisenberg, leibniz_half, leibniz_square, nilpotent_chain, nonabelian_lie2,
    truncated_polynomials, upper_triangular, zero_algebra,
};
use super::groups::{cyclic, dihedral, klein, product, quaternion, symmetric3};
use crate::algebra::{AlgebraAction, AlgebraKind, LinearMap, StructAlgebra};
use crate::field::FieldSpec;
use crate::group::{ElementSet, FiniteGroup, GroupAction, GroupMorphism};
use crate::linalg::{Matrix, Subspace};
use crate::pxmod::{pcm_validate, Pcm, PreCrossedModule};
use crate::variety::{Algebras, Groups};

fn hom(src: &Arc<FiniteGroup>, tgt: &Arc<FiniteGroup>, map: Vec<usize>) -> GroupMorphism {
    GroupMorphism::new(src.clone(), tgt.clone(), map).expect("catalog morphism")
}

/// `C4 → C2` reducing mod 2, with the generator of `C2` inverting `C4`.
/// Pre-crossed, not crossed.
pub fn c4_inversion() -> Pcm<Groups> {
    let (c4, c2) = (cyclic(4), cyclic(2));
    let act = GroupAction::new(c2.clone(), c4.clone(), vec![vec![0, 1, 2, 3], vec![0, 3, 2, 1]]).expect("inversion");
    pcm_validate("C4->C2 inv", c4.clone(), c2.clone(), hom(&c4, &c2, vec![0, 1, 0, 1]), act).expect("C4->C2")
}

/// Inclusion of a normal subgroup with the conjugation action; crossed.
pub fn normal_inclusion(g: &Arc<FiniteGroup>, normal: &ElementSet, name: &str) -> Pcm<Groups> {
    let (act, incl) = GroupAction::conjugation_on(g, normal).expect("normal subgroup");
    pcm_validate(name, incl.source.clone(), g.clone(), incl, act).expect("normal inclusion")
}

/// `G → G/Z(G)` with `G/Z(G)` acting by conjugation through a section;
/// crossed.
pub fn inner_automorphisms(g: &Arc<FiniteGroup>, name: &str) -> Pcm<Groups> {
    let centre = ElementSet::new((0..g.order()).filter(|&z| (0..g.order()).all(|x| g.mul(z, x) == g.mul(x, z))));
    let proj = g.quotient(&centre).expect("centre is normal");
    let inn = proj.target.clone();
    let rep = crate::group::section(&proj);
    let table = (0..inn.order()).map(|c| (0..g.order()).map(|x| g.conj(rep[c], x)).collect()).collect();
    let act = GroupAction::new(inn.clone(), g.clone(), table).expect("inner action");
    pcm_validate(name, g.clone(), inn, proj, act).expect("inner automorphisms")
}

/// `δ = 0` with the trivial action: crossed exactly when `X` is abelian.
pub fn zero_trivial_group(x: &Arc<FiniteGroup>, b: &Arc<FiniteGroup>) -> Pcm<Groups> {
    pcm_validate(
        format!("{}-0->{}", x.name(), b.name()),
        x.clone(),
        b.clone(),
        GroupMorphism::trivial(x, b),
        GroupAction::trivial(b, x),
    )
    .expect("zero pre-crossed module")
}

/// `S3 → C2` by sign, with `C2` acting by conjugation with a transposition.
/// Pre-crossed, not crossed.
pub fn s3_sign() -> Pcm<Groups> {
    let (s3, c2) = (symmetric3(), cyclic(2));
    let sign: Vec<usize> = (0..6).map(|x| if s3.element_order(x) == 2 { 1 } else { 0 }).collect();
    let t = 1;
    let act = GroupAction::new(c2.clone(), s3.clone(), vec![(0..6).collect(), (0..6).map(|x| s3.conj(t, x)).collect()])
        .expect("conjugation by a transposition");
    pcm_validate("S3->C2 sign", s3.clone(), c2.clone(), hom(&s3, &c2, sign), act).expect("sign")
}

/// `1_{S3}` with the trivial action. This is not pre-crossed, and is built
/// without validation so that checks can be run against a bad instance.
pub fn corrupted_identity() -> Pcm<Groups> {
    let s3 = symmetric3();
    Arc::new(PreCrossedModule {
        name: "S3->S3 id, trivial action".into(),
        x: s3.clone(),
        b: s3.clone(),
        delta: GroupMorphism::identity(&s3),
        xi: GroupAction::trivial(&s3, &s3),
    })
}

pub fn group_catalog() -> Vec<Pcm<Groups>> {
    let (c2, c3, c4, v4, s3) = (cyclic(2), cyclic(3), cyclic(4), klein(), symmetric3());
    let d4 = dihedral(4);
    let a3 = ElementSet::new([0, 3, 4]);
    let mut out = vec![
        c4_inversion(),
        s3_sign(),
        normal_inclusion(&s3, &a3, "A3<S3"),
        normal_inclusion(&c4, &ElementSet::new([0, 2]), "C2<C4"),
        normal_inclusion(&v4, &ElementSet::new([0, 1]), "C2<V4"),
        inner_automorphisms(&quaternion(), "Q8->V4"),
        inner_automorphisms(&d4, "D4->V4"),
        inner_automorphisms(&s3, "S3->S3 inn"),
        zero_trivial_group(&v4, &c2),
        zero_trivial_group(&c3, &c2),
        zero_trivial_group(&s3, &c2),
        zero_trivial_group(&c2, &cyclic(1)),
        zero_trivial_group(&s3, &cyclic(1)),
        zero_trivial_group(&c2, &v4),
        zero_trivial_group(&product(&c2, &c2), &s3),
    ];
    for b in [cyclic(1), c2.clone(), c3, c4, v4, s3, d4] {
        out.push(PreCrossedModule::identity(&b));
        out.push(PreCrossedModule::zero(&b).expect("zero object"));
    }
    out
}

fn lin(src: &Arc<StructAlgebra>, tgt: &Arc<StructAlgebra>, cols: &[Vec<i64>]) -> LinearMap {
    let f = src.field();
    let cols: Vec<_> = cols.iter().map(|c| c.iter().map(|&v| f.from_i64(v)).collect()).collect();
    LinearMap::new(src.clone(), tgt.clone(), Matrix::from_columns(f, tgt.dim(), &cols)).expect("catalog map")
}

/// `k[t]/(t^2) → k`, `a + bt ↦ a`, with `k` acting by multiplication.
/// Pre-crossed, not crossed.
pub fn dual_numbers_augmentation(field: FieldSpec) -> Pcm<Algebras> {
    let (d, k) = (dual_numbers(field), ground_field(field));
    let delta = lin(&d, &k, &[vec![1], vec![0]]);
    let unit = lin(&k, &d, &[vec![1, 0]]);
    let act = AlgebraAction::conjugation(&d).pullback(&unit).expect("unit action");
    pcm_validate("k[t]/(t^2)->k", d, k, delta, act).expect("augmentation")
}

/// Inclusion of an ideal with the multiplication action; crossed.
pub fn ideal_inclusion(a: &Arc<StructAlgebra>, ideal: &Subspace, name: &str) -> Pcm<Algebras> {
    let (act, incl) = AlgebraAction::conjugation_on(a, ideal).expect("ideal");
    pcm_validate(name, incl.source.clone(), a.clone(), incl, act).expect("ideal inclusion")
}

/// `δ = 0` with zero action: crossed exactly when `X` has zero product.
pub fn zero_trivial_algebra(x: &Arc<StructAlgebra>, b: &Arc<StructAlgebra>) -> Pcm<Algebras> {
    pcm_validate(
        format!("{}-0->{}", x.name(), b.name()),
        x.clone(),
        b.clone(),
        LinearMap::zero(x, b),
        AlgebraAction::trivial(b, x),
    )
    .expect("zero pre-crossed module")
}

fn span(field: FieldSpec, n: usize, vecs: &[Vec<i64>]) -> Subspace {
    Subspace::span(field, n, vecs.iter().map(|v| v.iter().map(|&x| field.from_i64(x)).collect()))
}

pub fn algebra_catalog() -> Vec<Pcm<Algebras>> {
    let mut out = Vec::new();
    for f in [FieldSpec::Prime(2), FieldSpec::Rationals] {
        let (k, d) = (ground_field(f), dual_numbers(f));
        let (aff, h3) = (nonabelian_lie2(f), heisenberg(f));
        let t3 = truncated_polynomials(f, 3);
        out.push(dual_numbers_augmentation(f));
        out.push(ideal_inclusion(&d, &span(f, 2, &[vec![0, 1]]), "(t)<k[t]/(t^2)"));
        out.push(ideal_inclusion(&t3, &span(f, 3, &[vec![0, 1, 0], vec![0, 0, 1]]), "(t)<k[t]/(t^3)"));
        out.push(ideal_inclusion(&aff, &span(f, 2, &[vec![1, 0]]), "[aff,aff]<aff"));
        out.push(ideal_inclusion(&h3, &span(f, 3, &[vec![0, 0, 1]]), "z(h3)<h3"));
        out.push(zero_trivial_algebra(&zero_algebra(f, AlgebraKind::Associative, 2), &k));
        out.push(zero_trivial_algebra(&d, &k));
        out.push(zero_trivial_algebra(&zero_algebra(f, AlgebraKind::Leibniz, 1), &aff));
        out.push(zero_trivial_algebra(&aff, &zero_algebra(f, AlgebraKind::Leibniz, 0)));
        out.push(zero_trivial_algebra(&leibniz_half(f), &zero_algebra(f, AlgebraKind::Leibniz, 1)));
        for b in [k, d, aff, h3, leibniz_half(f), leibniz_square(f), nilpotent_chain(f, 2), upper_triangular(f)] {
            out.push(PreCrossedModule::identity(&b));
            out.push(PreCrossedModule::zero(&b).expect("zero object"));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn crossedness_of_named_instances() {
        assert!(!c4_inversion().is_crossed());
        assert_eq!(c4_inversion().crossed_witness().unwrap(), "(b=1, x=1): 3 vs 1");
        assert!(!s3_sign().is_crossed());
        assert!(inner_automorphisms(&quaternion(), "q").is_crossed());
        assert!(zero_trivial_group(&klein(), &cyclic(2)).is_crossed());
        assert!(!zero_trivial_group(&symmetric3(), &cyclic(2)).is_crossed());
        assert!(!dual_numbers_augmentation(FieldSpec::Prime(2)).is_crossed());
    }

    #[test]
    fn catalogs_validate() {
        for p in group_catalog() {
            pcm_validate::<Groups>(p.name.clone(), p.x.clone(), p.b.clone(), p.delta.clone(), p.xi.clone()).unwrap();
        }
        for p in algebra_catalog() {
            pcm_validate::<Algebras>(p.name.clone(), p.x.clone(), p.b.clone(), p.delta.clone(), p.xi.clone()).unwrap();
        }
    }

    #[test]
    fn corrupted_instance_fails_validation() {
        let p = corrupted_identity();
        let err = pcm_validate::<Groups>("bad", p.x.clone(), p.b.clone(), p.delta.clone(), p.xi.clone()).unwrap_err();
        assert!(matches!(err, crate::Error::Axiom { ref axiom, .. } if axiom == "pre-crossed condition"));
    }
}
