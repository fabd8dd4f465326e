//! Executable versions of the main statements, run on concrete instances.
//!
//! Each check returns the number of configurations it verified, or a
//! witness describing the first failure. [`run_suite`] applies every check
//! to the catalog plus seeded random instances and yields one report per
//! check and instance, in a fixed order.

use std::collections::BTreeMap;
use std::sync::Arc;
use std::time::Instant;

use serde::Serialize;

use crate::algebra::StructAlgebra;
use crate::catalog::instances::{algebra_catalog, corrupted_identity, group_catalog};
use crate::error::{Error, Result};
use crate::generate::{generate, GenConfig, VarietyChoice};
use crate::group::FiniteGroup;
use crate::io::{pcm_to_file, AnyPcm, Codec, PcmFile};
use crate::linalg::{Subspace, Vector};
use crate::peiffer::{
    coproduct_xmod, induced_morphism, peiffer_commutator, peiffer_product, reflect, symmetric_comparison,
    symmetric_isomorphism_search, Induced,
};
use crate::pxmod::{px_cokernel_of_kernel, px_image_of, px_map_witness, Pcm, PxMorphism, SubPcm};
use crate::variety::{Algebras, Groups, Variety};

/// Configurations verified, or the first failure.
pub type Outcome = std::result::Result<usize, String>;

/// Upper bound on maps enumerated for a universal-property check.
const MAP_LIMIT: usize = 4096;
/// Subobjects sampled per instance.
const SUBS_PER_INSTANCE: usize = 6;

fn text(e: Error) -> String {
    e.to_string()
}

/// Variety-specific helpers for the checks: candidate generators for
/// subobjects and the classical commutators computed without Peiffer words.
pub trait Probe: Codec {
    /// Elements whose generated subobjects are sampled.
    fn candidates(o: &Self::Object) -> Vec<Self::Elem>;
    /// Normal closure of `{[x, y]}` (groups) or ideal generated by `xy, yx`
    /// (algebras) inside `container`.
    fn higgins(o: &Self::Object, container: &Self::Sub, xs: &[Self::Elem], ys: &[Self::Elem]) -> Result<Self::Sub>;
    /// Derived subgroup, or span of all products.
    fn derived(o: &Self::Object) -> Result<Self::Sub>;
    /// Whether every map out of `p` can be enumerated for a
    /// universal-property check.
    fn enumerable(p: &Pcm<Self>) -> bool;
    /// Whether brute-force isomorphism search applies to the carrier.
    fn searchable(p: &Pcm<Self>) -> bool;
}

impl Probe for Groups {
    fn candidates(o: &Arc<FiniteGroup>) -> Vec<usize> {
        (1..o.order()).collect()
    }

    fn higgins(o: &Arc<FiniteGroup>, container: &crate::group::ElementSet, xs: &[usize], ys: &[usize]) -> Result<crate::group::ElementSet> {
        let comms: Vec<usize> = xs.iter().flat_map(|&x| ys.iter().map(move |&y| o.commutator(x, y))).collect();
        o.normal_closure_within(container, &comms)
    }

    fn derived(o: &Arc<FiniteGroup>) -> Result<crate::group::ElementSet> {
        let n = o.order();
        let comms: Vec<usize> = (0..n).flat_map(|x| (0..n).map(move |y| o.commutator(x, y))).collect();
        o.subgroup_generate(&comms)
    }

    fn enumerable(p: &Pcm<Groups>) -> bool {
        p.x.order() <= 8
    }

    fn searchable(p: &Pcm<Groups>) -> bool {
        p.x.order() <= 16
    }
}

impl Probe for Algebras {
    fn candidates(o: &Arc<StructAlgebra>) -> Vec<Vector> {
        let n = o.dim();
        let field = o.field();
        match field.elements() {
            Some(els) if els.len().pow(n as u32) <= 64 => {
                let mut out: Vec<Vector> = vec![Vec::new()];
                for _ in 0..n {
                    out = out
                        .into_iter()
                        .flat_map(|v| els.iter().map(move |s| [v.clone(), vec![s.clone()]].concat()))
                        .collect();
                }
                out.into_iter().filter(|v| !crate::linalg::is_zero_vec(v)).collect()
            }
            _ => {
                let mut out: Vec<Vector> = (0..n).map(|i| o.unit(i)).collect();
                for i in 0..n {
                    for j in i + 1..n {
                        out.push(crate::linalg::add_vec(&o.unit(i), &o.unit(j)));
                    }
                }
                out
            }
        }
    }

    fn higgins(o: &Arc<StructAlgebra>, container: &Subspace, xs: &[Vector], ys: &[Vector]) -> Result<Subspace> {
        let prods: Vec<Vector> = xs
            .iter()
            .flat_map(|x| ys.iter().flat_map(move |y| [o.mul(x, y), o.mul(y, x)]))
            .collect();
        o.ideal_closure_within(container, &prods)
    }

    fn derived(o: &Arc<StructAlgebra>) -> Result<Subspace> {
        let n = o.dim();
        let prods = (0..n).flat_map(|i| (0..n).map(move |j| o.basis_product(i, j).clone()));
        Ok(Subspace::span(o.field(), n, prods))
    }

    fn enumerable(p: &Pcm<Algebras>) -> bool {
        p.x.field().order().is_some() && p.x.dim() <= 4
    }

    fn searchable(_: &Pcm<Algebras>) -> bool {
        true
    }
}

/// Up to `limit` distinct `B`-stable subobjects: `0`, `A`, `ker δ`, then
/// those generated by single candidates.
pub fn sample_subobjects<V: Probe>(a: &Pcm<V>, limit: usize) -> Vec<SubPcm<V>> {
    let mut out = vec![a.bottom(), a.whole()];
    let push = |s: SubPcm<V>, out: &mut Vec<SubPcm<V>>| {
        if out.len() < limit && !out.contains(&s) {
            out.push(s);
        }
    };
    if let Ok(k) = SubPcm::new(a.clone(), V::kernel(&a.delta)) {
        push(k, &mut out);
    }
    for e in V::candidates(&a.x) {
        if out.len() >= limit {
            break;
        }
        if let Ok(s) = SubPcm::generated(a.clone(), &[e]) {
            push(s, &mut out);
        }
    }
    out.truncate(limit);
    out
}

/// `⟨S_i, S_j⟩` for every pair of sampled subobjects.
struct Commutators<V: Variety> {
    subs: Vec<SubPcm<V>>,
    table: BTreeMap<(usize, usize), SubPcm<V>>,
}

impl<V: Variety> Commutators<V> {
    fn new(subs: Vec<SubPcm<V>>) -> std::result::Result<Self, String> {
        let mut table = BTreeMap::new();
        for i in 0..subs.len() {
            for j in 0..subs.len() {
                let c = peiffer_commutator(&subs[i], &subs[j])
                    .map_err(|e| format!("<{}, {}>: {e}", subs[i].text(), subs[j].text()))?;
                table.insert((i, j), c);
            }
        }
        Ok(Commutators { subs, table })
    }

    fn get(&self, i: usize, j: usize) -> &SubPcm<V> {
        &self.table[&(i, j)]
    }
}

/// `A` is crossed exactly when `⟨A, A⟩ = 0`.
pub fn check_characterization<V: Variety>(a: &Pcm<V>) -> Outcome {
    let crossed = a.crossed_witness();
    let c = peiffer_commutator(&a.whole(), &a.whole()).map_err(text)?;
    match (&crossed, c.is_trivial()) {
        (None, true) | (Some(_), false) => Ok(1),
        (None, false) => Err(format!("crossed, but <A,A> = {}", c.text())),
        (Some(w), true) => Err(format!("<A,A> = 0, but not crossed: {w}")),
    }
}

/// In a crossed module every `⟨X, Y⟩` vanishes.
pub fn check_crossed_vanishing<V: Probe>(a: &Pcm<V>) -> Outcome {
    if !a.is_crossed() {
        return Ok(0);
    }
    let subs = sample_subobjects(a, SUBS_PER_INSTANCE);
    let c = Commutators::new(subs)?;
    for ((i, j), s) in &c.table {
        if !s.is_trivial() {
            return Err(format!("crossed, but <{}, {}> = {}", c.subs[*i].text(), c.subs[*j].text(), s.text()));
        }
    }
    Ok(c.table.len())
}

/// `δ` vanishes on every `⟨X, Y⟩`.
pub fn check_delta_vanishing<V: Probe>(a: &Pcm<V>) -> Outcome {
    let c = Commutators::new(sample_subobjects(a, SUBS_PER_INSTANCE))?;
    for ((i, j), s) in &c.table {
        let img = V::image_of(&a.delta, &s.sub);
        if img != V::bottom(&a.b) {
            return Err(format!(
                "delta(<{}, {}>) = {}",
                c.subs[*i].text(),
                c.subs[*j].text(),
                V::sub_text(&a.b, &img)
            ));
        }
    }
    Ok(c.table.len())
}

/// `X ≤ X'` and `Y ≤ Y'` give `⟨X, Y⟩ ≤ ⟨X', Y'⟩`. Counts the triples
/// checked.
pub fn check_monotonicity<V: Probe>(a: &Pcm<V>) -> Outcome {
    let c = Commutators::new(sample_subobjects(a, SUBS_PER_INSTANCE))?;
    let n = c.subs.len();
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| c.subs[i].le(&c.subs[j]))
        .collect();
    let mut count = 0;
    for &(x, x2) in &pairs {
        for &(y, y2) in &pairs {
            if !c.get(x, y).le(c.get(x2, y2)) {
                return Err(format!(
                    "X={} <= X'={}, Y={} <= Y'={}, but <X,Y>={} is not in <X',Y'>={}",
                    c.subs[x].text(),
                    c.subs[x2].text(),
                    c.subs[y].text(),
                    c.subs[y2].text(),
                    c.get(x, y).text(),
                    c.get(x2, y2).text()
                ));
            }
            count += 1;
        }
    }
    Ok(count)
}

/// The cokernel of `⟨X, Y⟩ → A`, as the quotient by its normal closure in `A`.
pub fn commutator_cokernel<V: Variety>(c: &SubPcm<V>) -> Result<PxMorphism<V>> {
    let a = &c.ambient;
    let closure = V::closure_within(&a.x, &V::whole(&a.x), &c.spanning())?;
    px_cokernel_of_kernel(&SubPcm::new(a.clone(), closure)?)
}

/// With `q` the cokernel of `⟨X, Y⟩ → A`, `⟨q(X), q(Y)⟩ = 0`.
pub fn check_image_vanishing<V: Probe>(a: &Pcm<V>) -> Outcome {
    let c = Commutators::new(sample_subobjects(a, SUBS_PER_INSTANCE))?;
    let keys: Vec<(usize, usize)> = c.table.keys().copied().collect();
    for &(i, j) in &keys {
        let q = commutator_cokernel(c.get(i, j)).map_err(text)?;
        let qx = px_image_of(&q, &c.subs[i]).map_err(text)?;
        let qy = px_image_of(&q, &c.subs[j]).map_err(text)?;
        let d = peiffer_commutator(&qx, &qy).map_err(text)?;
        if !d.is_trivial() {
            return Err(format!(
                "X={}, Y={}: <q(X), q(Y)> = {} in {}",
                c.subs[i].text(),
                c.subs[j].text(),
                d.text(),
                q.target.name
            ));
        }
    }
    Ok(keys.len())
}

fn compare_images<V: Variety>(
    h: &PxMorphism<V>,
    x: &SubPcm<V>,
    y: &SubPcm<V>,
    inner: &SubPcm<V>,
    injective: bool,
) -> std::result::Result<(), String> {
    let hx = px_image_of(h, x).map_err(text)?;
    let hy = px_image_of(h, y).map_err(text)?;
    let outer = peiffer_commutator(&hx, &hy).map_err(text)?;
    let img = px_image_of(h, inner).map_err(text)?;
    if img != outer {
        return Err(format!(
            "X={}, Y={}: h<X,Y> = {} but <hX,hY> = {}",
            x.text(),
            y.text(),
            img.text(),
            outer.text()
        ));
    }
    if injective && img.size() != inner.size() {
        return Err(format!("X={}, Y={}: <X,Y> -> <hX,hY> is not injective", x.text(), y.text()));
    }
    Ok(())
}

/// Surjective `h: A → A'` maps `⟨X, Y⟩` onto `⟨hX, hY⟩`. Tested on the
/// reflection and on the quotient by `ker δ`.
pub fn check_factorization_surjective<V: Probe>(a: &Pcm<V>) -> Outcome {
    let c = Commutators::new(sample_subobjects(a, SUBS_PER_INSTANCE))?;
    let kernel = SubPcm::new(a.clone(), V::kernel(&a.delta)).map_err(text)?;
    let quotients = [
        reflect(a).map_err(text)?.eta,
        px_cokernel_of_kernel(&kernel).map_err(text)?,
    ];
    let n = c.subs.len();
    let mut count = 0;
    for h in &quotients {
        if !h.is_surjective() {
            return Err(format!("{} is not surjective", h.target.name));
        }
        for i in 0..n {
            for j in 0..n {
                compare_images(h, &c.subs[i], &c.subs[j], c.get(i, j), false)?;
                count += 1;
            }
        }
    }
    Ok(count)
}

/// Injective `m: S → A` maps `⟨X, Y⟩` computed in `S` injectively onto
/// `⟨mX, mY⟩` computed in `A`. Tested on sampled subobjects `S`.
pub fn check_factorization_injective<V: Probe>(a: &Pcm<V>) -> Outcome {
    let mut count = 0;
    for s in sample_subobjects(a, SUBS_PER_INSTANCE).iter().filter(|s| !s.is_whole()).take(3) {
        let m = s.materialize().map_err(text)?;
        if !m.is_injective() {
            return Err(format!("inclusion of {} is not injective", s.text()));
        }
        let c = Commutators::new(sample_subobjects(&m.source, 4))?;
        let n = c.subs.len();
        for i in 0..n {
            for j in 0..n {
                compare_images(&m, &c.subs[i], &c.subs[j], c.get(i, j), true)?;
                count += 1;
            }
        }
    }
    Ok(count)
}

/// `A/⟨A, A⟩` is crossed and `η` is a morphism of pre-crossed modules.
pub fn check_reflection<V: Variety>(a: &Pcm<V>) -> Outcome {
    let r = reflect(a).map_err(text)?;
    if let Some(w) = r.crossed().crossed_witness() {
        return Err(format!("reflection is not crossed: {w}"));
    }
    if let Some(w) = px_map_witness(a, r.crossed(), &r.eta.map) {
        return Err(format!("eta: {w}"));
    }
    if !r.eta.is_surjective() {
        return Err("eta is not surjective".into());
    }
    Ok(1)
}

/// Every `f: A → Z` into a crossed `Z` factors uniquely through `η`.
/// Counts the maps `f` checked.
pub fn check_reflection_universal<V: Probe>(a: &Pcm<V>, probes: &[Pcm<V>]) -> Outcome {
    if !V::enumerable(a) {
        return Ok(0);
    }
    let r = reflect(a).map_err(text)?;
    let mut count = 0;
    for z in probes.iter().filter(|z| z.b == a.b && z.is_crossed()) {
        let fs = V::enumerate_px_maps(a, z, MAP_LIMIT).map_err(text)?;
        let phis = V::enumerate_px_maps(r.crossed(), z, MAP_LIMIT).map_err(text)?;
        for f in &fs {
            let phi = V::descend(f, &r.eta.map).map_err(|e| format!("into {}: no factorization: {e}", z.name))?;
            PxMorphism::new(r.crossed().clone(), z.clone(), phi).map_err(|e| format!("into {}: {e}", z.name))?;
            let mut matching = 0;
            for g in &phis {
                if V::map_difference(&V::compose(g, &r.eta.map).map_err(text)?, f).is_none() {
                    matching += 1;
                }
            }
            if matching != 1 {
                return Err(format!("into {}: {matching} factorizations of {f:?}", z.name));
            }
            count += 1;
        }
    }
    Ok(count)
}

/// Both actions are realized by conjugation in `X ⋈ Y`.
pub fn check_conjugation_realization<V: Variety>(x: &Pcm<V>, y: &Pcm<V>) -> Outcome {
    let p = peiffer_product(x, y).map_err(text)?;
    match crate::peiffer::conjugation_witness(&p) {
        None => Ok(1),
        Some(w) => Err(w),
    }
}

/// `X ⋈ Y ≅ Y ⋈ X` over `B`, both through the induced comparison and by an
/// independent search.
pub fn check_product_symmetry<V: Probe>(x: &Pcm<V>, y: &Pcm<V>) -> Outcome {
    let p = peiffer_product(x, y).map_err(text)?;
    let sym = symmetric_comparison(&p).map_err(text)?;
    if !V::searchable(&p.result) {
        return Ok(1);
    }
    match symmetric_isomorphism_search(&p, &sym.swapped).map_err(text)? {
        Some(_) => Ok(2),
        None => Err(format!("no isomorphism {} -> {} found by search", p.result.name, sym.swapped.result.name)),
    }
}

/// For crossed `X`, `Y`: `X ⋈ Y` is crossed, and every pair of maps into
/// a crossed probe has exactly one mediator. Counts the cospans checked.
pub fn check_coproduct<V: Probe>(x: &Pcm<V>, y: &Pcm<V>, probes: &[Pcm<V>]) -> Outcome {
    let p = coproduct_xmod(x, y).map_err(text)?;
    if let Some(w) = p.result.crossed_witness() {
        return Err(format!("X><Y is not crossed: {w}"));
    }
    let mut count = 0;
    for z in probes.iter().filter(|z| z.b == x.b && z.is_crossed()) {
        if !V::enumerable(x) || !V::enumerable(y) {
            continue;
        }
        let fs = V::enumerate_px_maps(x, z, MAP_LIMIT).map_err(text)?;
        let gs = V::enumerate_px_maps(y, z, MAP_LIMIT).map_err(text)?;
        let phis = match V::enumerate_px_maps(&p.result, z, MAP_LIMIT) {
            Ok(v) => v,
            Err(Error::Cap { .. }) => continue,
            Err(e) => return Err(text(e)),
        };
        for f in &fs {
            let f = PxMorphism::new(x.clone(), z.clone(), f.clone()).map_err(text)?;
            for g in &gs {
                let g = PxMorphism::new(y.clone(), z.clone(), g.clone()).map_err(text)?;
                let phi = match induced_morphism(&p, &f, &g).map_err(text)? {
                    Induced::Morphism(m) => m,
                    Induced::Obstructed(c) => {
                        return Err(format!("into {}: mediator obstructed by {}", z.name, c.text()));
                    }
                };
                let mut matching = Vec::new();
                for m in &phis {
                    let on_x = V::compose(m, &p.lx.map).map_err(text)?;
                    let on_y = V::compose(m, &p.ly.map).map_err(text)?;
                    if V::map_difference(&on_x, &f.map).is_none() && V::map_difference(&on_y, &g.map).is_none() {
                        matching.push(m);
                    }
                }
                if matching.len() != 1 || V::map_difference(matching[0], &phi.map).is_some() {
                    return Err(format!("into {}: {} mediators, expected exactly the induced one", z.name, matching.len()));
                }
                count += 1;
            }
        }
    }
    Ok(count)
}

/// For trivial `δ` and action: `⟨X, Y⟩` is the classical commutator and
/// `X ⋈ Y ≅ X × Y`. `x` and `y` must be such instances over the same base.
pub fn check_degeneration_higgins<V: Probe>(x: &Pcm<V>, y: &Pcm<V>) -> Outcome {
    let mut count = 0;
    for a in [x, y] {
        let c = Commutators::new(sample_subobjects(a, SUBS_PER_INSTANCE))?;
        let n = c.subs.len();
        for i in 0..n {
            for j in 0..n {
                let (s, t) = (&c.subs[i], &c.subs[j]);
                let join = V::join(&a.x, &s.sub, &t.sub).map_err(text)?;
                let classical = V::higgins(&a.x, &join, &s.spanning(), &t.spanning()).map_err(text)?;
                if classical != c.get(i, j).sub {
                    return Err(format!(
                        "X={}, Y={}: <X,Y> = {} but the classical commutator is {}",
                        s.text(),
                        t.text(),
                        c.get(i, j).text(),
                        V::sub_text(&a.x, &classical)
                    ));
                }
                count += 1;
            }
        }
    }
    let p = peiffer_product(x, y).map_err(text)?;
    let (dp, _) = V::direct_product(&x.x, &y.x).map_err(text)?;
    if dp.object != p.semidirect.object || !p.relations.is_trivial() {
        return Err(format!("{} is not presented by X x Y", p.result.name));
    }
    let cmp = V::copair(&dp, &p.lx.map, &p.ly.map).map_err(text)?;
    if !(V::is_injective(&cmp) && V::is_surjective(&cmp)) {
        return Err(format!("X x Y -> {} is not bijective", p.result.name));
    }
    Ok(count + 1)
}

/// Over the trivial base, `⟨X, X⟩` is the derived subobject.
pub fn check_degeneration_derived<V: Probe>(a: &Pcm<V>) -> Outcome {
    let c = peiffer_commutator(&a.whole(), &a.whole()).map_err(text)?;
    let d = V::derived(&a.x).map_err(text)?;
    if c.sub != d {
        return Err(format!("<X,X> = {} but the derived subobject is {}", c.text(), V::sub_text(&a.x, &d)));
    }
    Ok(1)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

/// One line of the suite's output.
#[derive(Debug, Clone, Serialize)]
pub struct TheoremReport {
    pub check: &'static str,
    pub instance: String,
    pub verdict: Verdict,
    /// Configurations verified.
    pub checked: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    /// The offending instance, in the input file format.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<PcmFile>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ms: Option<u64>,
}

impl TheoremReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

#[derive(Debug, Clone)]
#[derive(Default)]
pub struct SuiteConfig {
    pub generate: GenConfig,
    /// Random instances on top of the catalog; `0` runs the catalog only.
    pub random: usize,
    pub inject_corrupt: bool,
    pub timings: bool,
}


struct Runner {
    timings: bool,
    reports: Vec<TheoremReport>,
}

impl Runner {
    fn run<V: Codec>(&mut self, check: &'static str, subject: &Pcm<V>, instance: String, f: impl FnOnce() -> Outcome) {
        let start = Instant::now();
        let outcome = f();
        let ms = self.timings.then(|| start.elapsed().as_millis() as u64);
        let (verdict, checked, witness, counterexample) = match outcome {
            Ok(n) => (Verdict::Pass, n, None, None),
            Err(w) => (Verdict::Fail, 0, Some(w), Some(pcm_to_file(subject))),
        };
        self.reports.push(TheoremReport {
            check,
            instance,
            verdict,
            checked,
            witness,
            counterexample,
            ms,
        });
    }

    fn single<V: Probe>(&mut self, a: &Pcm<V>, probes: &[Pcm<V>]) {
        let id = a.name.clone();
        self.run("characterization", a, id.clone(), || check_characterization(a));
        self.run("crossed-vanishing", a, id.clone(), || check_crossed_vanishing(a));
        self.run("delta-vanishing", a, id.clone(), || check_delta_vanishing(a));
        self.run("monotonicity", a, id.clone(), || check_monotonicity(a));
        self.run("image-vanishing", a, id.clone(), || check_image_vanishing(a));
        self.run("factorization-surjective", a, id.clone(), || check_factorization_surjective(a));
        self.run("factorization-injective", a, id.clone(), || check_factorization_injective(a));
        self.run("reflection", a, id.clone(), || check_reflection(a));
        self.run("reflection-universal", a, id, || check_reflection_universal(a, probes));
        if V::whole(&a.b) == V::bottom(&a.b) {
            self.run("degeneration-derived", a, a.name.clone(), || check_degeneration_derived(a));
        }
    }

    fn pair<V: Probe>(&mut self, x: &Pcm<V>, y: &Pcm<V>, probes: &[Pcm<V>]) {
        let id = format!("{} & {}", x.name, y.name);
        // the semidirect product stands in for the counterexample file
        let subject = crate::peiffer::semidirect_pcm(x, y).map(|(s, _)| s);
        let Ok(subject) = subject else { return };
        self.run("conjugation-realization", &subject, id.clone(), || check_conjugation_realization(x, y));
        self.run("product-symmetry", &subject, id.clone(), || check_product_symmetry(x, y));
        if x.is_crossed() && y.is_crossed() {
            self.run("coproduct", &subject, id.clone(), || check_coproduct(x, y, probes));
        }
        if is_zero_trivial(x) && is_zero_trivial(y) {
            self.run("degeneration-higgins", &subject, id, || check_degeneration_higgins(x, y));
        }
    }

    fn family<V: Probe>(&mut self, instances: &[Pcm<V>], probes: &[Pcm<V>], pairs: &[(usize, usize)]) {
        for a in instances {
            self.single(a, probes);
        }
        for &(i, j) in pairs {
            self.pair(&instances[i], &instances[j], probes);
        }
    }
}

pub fn is_zero_trivial<V: Variety>(a: &Pcm<V>) -> bool {
    a.delta == V::zero_map(&a.x, &a.b) && a.xi == V::trivial_action(&a.b, &a.x)
}

/// Pairs `(i, j)`, `i ≤ j`, over a common base whose semidirect product
/// stays within `max` (order or dimension).
pub fn product_pairs<V: Variety>(instances: &[Pcm<V>], max: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..instances.len() {
        for j in i..instances.len() {
            let (x, y) = (&instances[i], &instances[j]);
            let size = if V::tag(&x.x) == "group" { V::size(&x.x) * V::size(&y.x) } else { V::size(&x.x) + V::size(&y.x) };
            if x.b == y.b && size <= max {
                out.push((i, j));
            }
        }
    }
    out
}

/// Crossed catalog instances, used as targets for universal properties.
pub fn group_probes() -> Vec<Pcm<Groups>> {
    group_catalog().into_iter().filter(|p| p.is_crossed()).collect()
}

pub fn algebra_probes() -> Vec<Pcm<Algebras>> {
    algebra_catalog()
        .into_iter()
        .filter(|p| p.x.field().order().is_some() && p.is_crossed())
        .collect()
}

/// Runs every check on the catalog, then on `random` generated instances.
/// The report order depends only on the configuration.
pub fn run_suite(cfg: &SuiteConfig) -> Vec<TheoremReport> {
    let mut runner = Runner {
        timings: cfg.timings,
        reports: Vec::new(),
    };
    let variety = cfg.generate.variety;
    let want_groups = variety != VarietyChoice::Algebras;
    let want_algebras = variety != VarietyChoice::Groups;
    let gprobes = group_probes();
    let aprobes = algebra_probes();

    if cfg.inject_corrupt {
        runner.single(&corrupted_identity(), &gprobes);
    }
    if want_groups {
        let cat = group_catalog();
        let pairs = product_pairs(&cat, 64);
        runner.family(&cat, &gprobes, &pairs);
    }
    if want_algebras {
        let cat = algebra_catalog();
        let pairs = product_pairs(&cat, 8);
        runner.family(&cat, &aprobes, &pairs);
    }
    if cfg.random > 0 {
        let gen = generate(&GenConfig {
            count: cfg.random,
            ..cfg.generate.clone()
        });
        let (mut gs, mut als) = (Vec::new(), Vec::new());
        for p in gen.instances {
            match p {
                AnyPcm::Group(g) => gs.push(g),
                AnyPcm::Algebra(a) => als.push(a),
            }
        }
        // consecutive instances over a common base form the random pairs
        let gpairs: Vec<(usize, usize)> = product_pairs(&gs, 16).into_iter().filter(|&(i, j)| j == i + 1).collect();
        let apairs: Vec<(usize, usize)> = product_pairs(&als, 6).into_iter().filter(|&(i, j)| j == i + 1).collect();
        runner.family(&gs, &gprobes, &gpairs);
        runner.family(&als, &aprobes, &apairs);
    }
    runner.reports
}

/// Counts of passed and failed reports.
pub fn tally(reports: &[TheoremReport]) -> (usize, usize) {
    let passed = reports.iter().filter(|r| r.passed()).count();
    (passed, reports.len() - passed)
}
