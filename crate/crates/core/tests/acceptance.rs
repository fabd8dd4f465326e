//! Acceptance run: one line per criterion, every tolerance zero.

use std::io::Write;
use std::sync::Arc;
use std::time::{Duration, Instant};

use peiffer::algebra::{AlgebraKind, StructAlgebra};
use peiffer::catalog::algebras::{
    dual_numbers, ground_field, heisenberg, leibniz_half, leibniz_square, nilpotent_chain, nonabelian_lie2,
    truncated_polynomials, upper_triangular, zero_algebra,
};
use peiffer::catalog::groups::{cyclic, dihedral, klein, product, quaternion, symmetric3, trivial};
use peiffer::catalog::instances::{
    algebra_catalog, c4_inversion, dual_numbers_augmentation, group_catalog, zero_trivial_algebra, zero_trivial_group,
};
use peiffer::field::FieldSpec;
use peiffer::generate::{generate, revalidate, GenConfig};
use peiffer::group::FiniteGroup;
use peiffer::io::AnyPcm;
use peiffer::linalg::Subspace;
use peiffer::theorems::{
    algebra_probes, check_coproduct, check_degeneration_derived, check_degeneration_higgins,
    check_delta_vanishing, check_factorization_injective, check_factorization_surjective, check_image_vanishing,
    check_monotonicity, check_product_symmetry, group_probes, product_pairs, Probe,
};
use peiffer::{
    pcm_validate, peiffer_commutator, peiffer_product, reflect, Algebras, Groups, Pcm, PxMorphism, Variety,
};

/// Disagreements allowed by every criterion.
const TOLERANCE: usize = 0;
/// Seeded random instances for the first criterion.
const RANDOM_INSTANCES: usize = 200;
const SEED: u64 = 0;
const TIME_TARGET: Duration = Duration::from_secs(60);
const MIN_DEGENERATE: usize = 20;
const MIN_TRIPLES: usize = 100;

struct Line {
    id: usize,
    name: &'static str,
    failures: Vec<String>,
    detail: String,
}

impl Line {
    // the tolerance is pinned at zero, which clippy reads as an absurd bound
    #[allow(clippy::absurd_extreme_comparisons)]
    fn passed(&self) -> bool {
        self.failures.len() <= TOLERANCE
    }
}

fn report(lines: &[Line]) {
    // written past the test harness capture so the lines show in every run
    let mut err = std::io::stderr().lock();
    for l in lines {
        let verdict = if l.passed() { "PASS" } else { "FAIL" };
        let _ = writeln!(
            err,
            "criterion {} [{}] {verdict}: {}; {} failures (tolerance {TOLERANCE})",
            l.id,
            l.name,
            l.detail,
            l.failures.len()
        );
        for f in l.failures.iter().take(5) {
            let _ = writeln!(err, "    {f}");
        }
    }
}

struct Instances {
    groups: Vec<Pcm<Groups>>,
    algebras: Vec<Pcm<Algebras>>,
    random: usize,
}

fn instances() -> Instances {
    let gen = generate(&GenConfig {
        seed: SEED,
        count: RANDOM_INSTANCES,
        ..GenConfig::default()
    });
    let random = gen.instances.len();
    let (mut groups, mut algebras) = (group_catalog(), algebra_catalog());
    for p in gen.instances {
        revalidate(&p).expect("generated instances revalidate");
        match p {
            AnyPcm::Group(g) => groups.push(g),
            AnyPcm::Algebra(a) => algebras.push(a),
        }
    }
    Instances {
        groups,
        algebras,
        random,
    }
}

fn characterization<V: Variety>(ps: &[Pcm<V>], failures: &mut Vec<String>) {
    for p in ps {
        let crossed = p.crossed_witness().is_none();
        match peiffer_commutator(&p.whole(), &p.whole()) {
            Ok(c) if c.is_trivial() == crossed => {}
            Ok(c) => failures.push(format!("{}: crossed {crossed}, <A,A> = {}", p.name, c.text())),
            Err(e) => failures.push(format!("{}: {e}", p.name)),
        }
    }
}

fn criterion_1(inst: &Instances) -> Line {
    let start = Instant::now();
    let mut failures = Vec::new();
    characterization(&inst.groups, &mut failures);
    characterization(&inst.algebras, &mut failures);
    let elapsed = start.elapsed();
    if inst.random < RANDOM_INSTANCES {
        failures.push(format!("only {} random instances", inst.random));
    }
    if elapsed > TIME_TARGET {
        failures.push(format!("took {elapsed:?}"));
    }
    Line {
        id: 1,
        name: "crossed iff <A,A> = 0",
        detail: format!(
            "{} instances ({} random), {:.2}s",
            inst.groups.len() + inst.algebras.len(),
            inst.random,
            elapsed.as_secs_f64()
        ),
        failures,
    }
}

/// Reflection is crossed, `η` is a morphism, and for small groups every map
/// into a crossed probe has exactly one `φ` with `φ η = f` among all maps out
/// of the reflection.
fn reflection<V: Probe>(ps: &[Pcm<V>], probes: &[Pcm<V>], universal: bool, failures: &mut Vec<String>) -> usize {
    let mut maps = 0;
    for a in ps {
        let r = match reflect(a) {
            Ok(r) => r,
            Err(e) => {
                failures.push(format!("{}: {e}", a.name));
                continue;
            }
        };
        let x = r.crossed();
        if let Err(e) = pcm_validate::<V>(x.name.clone(), x.x.clone(), x.b.clone(), x.delta.clone(), x.xi.clone()) {
            failures.push(format!("{}: reflection invalid: {e}", a.name));
        }
        if !x.is_crossed() {
            failures.push(format!("{}: reflection not crossed", a.name));
        }
        if let Err(e) = PxMorphism::new(a.clone(), x.clone(), r.eta.map.clone()) {
            failures.push(format!("{}: eta: {e}", a.name));
        }
        if !universal || V::size(&a.x) > 8 {
            continue;
        }
        for z in probes.iter().filter(|z| z.b == a.b) {
            let (Ok(fs), Ok(phis)) = (V::enumerate_px_maps(a, z, 1 << 12), V::enumerate_px_maps(x, z, 1 << 12)) else {
                failures.push(format!("{}: enumeration into {} failed", a.name, z.name));
                continue;
            };
            for f in &fs {
                let n = phis
                    .iter()
                    .filter(|phi| V::map_difference(&V::compose(phi, &r.eta.map).unwrap(), f).is_none())
                    .count();
                if n != 1 {
                    failures.push(format!("{} -> {}: {n} factorizations", a.name, z.name));
                }
                maps += 1;
            }
        }
    }
    maps
}

fn criterion_2(inst: &Instances) -> Line {
    let mut failures = Vec::new();
    let maps = reflection(&inst.groups, &group_probes(), true, &mut failures);
    reflection(&inst.algebras, &algebra_probes(), false, &mut failures);
    if maps == 0 {
        failures.push("no maps enumerated".into());
    }
    Line {
        id: 2,
        name: "reflection and its universal property",
        detail: format!("{} instances, {maps} maps factored", inst.groups.len() + inst.algebras.len()),
        failures,
    }
}

fn coproducts<V: Probe>(ps: &[Pcm<V>], probes: &[Pcm<V>], max: usize, failures: &mut Vec<String>) -> (usize, usize) {
    let crossed: Vec<Pcm<V>> = ps.iter().filter(|p| p.is_crossed()).cloned().collect();
    let pairs = product_pairs(&crossed, max);
    let mut cospans = 0;
    for &(i, j) in &pairs {
        let (x, y) = (&crossed[i], &crossed[j]);
        match check_coproduct(x, y, probes) {
            Ok(n) => cospans += n,
            Err(w) => failures.push(format!("{} & {}: {w}", x.name, y.name)),
        }
    }
    (pairs.len(), cospans)
}

fn criterion_3() -> Line {
    let mut failures = Vec::new();
    let (gp, gc) = coproducts(&group_catalog(), &group_probes(), 64, &mut failures);
    let (ap, ac) = coproducts(&algebra_catalog(), &algebra_probes(), 8, &mut failures);
    if gc == 0 || ac == 0 {
        failures.push("no cospans enumerated".into());
    }
    Line {
        id: 3,
        name: "coproduct of crossed modules",
        detail: format!("{} pairs, {} cospans with unique mediator", gp + ap, gc + ac),
        failures,
    }
}

fn group_pool() -> Vec<Arc<FiniteGroup>> {
    vec![
        cyclic(2),
        cyclic(3),
        cyclic(4),
        klein(),
        symmetric3(),
        dihedral(4),
        quaternion(),
        cyclic(6),
        product(&symmetric3(), &cyclic(2)),
        product(&cyclic(2), &klein()),
        dihedral(3),
        cyclic(5),
    ]
}

fn algebra_pool(field: FieldSpec) -> Vec<Arc<StructAlgebra>> {
    vec![
        dual_numbers(field),
        ground_field(field),
        truncated_polynomials(field, 3),
        nilpotent_chain(field, 3),
        upper_triangular(field),
        zero_algebra(field, AlgebraKind::Associative, 2),
    ]
}

fn leibniz_pool(field: FieldSpec) -> Vec<Arc<StructAlgebra>> {
    vec![
        nonabelian_lie2(field),
        heisenberg(field),
        leibniz_half(field),
        leibniz_square(field),
        zero_algebra(field, AlgebraKind::Leibniz, 1),
    ]
}

/// Each instance paired with its neighbour, or with the first instance when
/// the product would exceed the size cap.
fn degeneration_pairs<V: Probe>(xs: &[Pcm<V>], failures: &mut Vec<String>) -> usize {
    let mut n = 0;
    for i in 0..xs.len() {
        let next = &xs[(i + 1) % xs.len()];
        let fits = product_pairs(&[xs[i].clone(), next.clone()], 64).contains(&(0, 1));
        let y = if fits { next } else { &xs[0] };
        match check_degeneration_higgins(&xs[i], y) {
            Ok(_) => n += 1,
            Err(e) => failures.push(format!("{} & {}: {e}", xs[i].name, y.name)),
        }
    }
    n
}

fn derived<V: Probe>(xs: &[Pcm<V>], failures: &mut Vec<String>) -> usize {
    for x in xs {
        if let Err(e) = check_degeneration_derived(x) {
            failures.push(format!("{}: {e}", x.name));
        }
    }
    xs.len()
}

fn criterion_4() -> Line {
    let mut failures = Vec::new();
    let mut higgins = 0;
    for b in [trivial(), cyclic(2), cyclic(3)] {
        let xs: Vec<Pcm<Groups>> = group_pool().iter().map(|x| zero_trivial_group(x, &b)).collect();
        higgins += degeneration_pairs(&xs, &mut failures);
    }
    for field in [FieldSpec::Prime(2), FieldSpec::Prime(3), FieldSpec::Rationals] {
        let k = ground_field(field);
        let xs: Vec<Pcm<Algebras>> = algebra_pool(field).iter().map(|x| zero_trivial_algebra(x, &k)).collect();
        higgins += degeneration_pairs(&xs, &mut failures);
        let l = zero_algebra(field, AlgebraKind::Leibniz, 1);
        let xs: Vec<Pcm<Algebras>> = leibniz_pool(field).iter().map(|x| zero_trivial_algebra(x, &l)).collect();
        higgins += degeneration_pairs(&xs, &mut failures);
    }

    let one = trivial();
    let gs: Vec<Pcm<Groups>> = group_pool().iter().map(|x| zero_trivial_group(x, &one)).collect();
    let mut derived_count = derived(&gs, &mut failures);
    // frozen derived subgroup orders
    for (g, order) in [(symmetric3(), 3), (dihedral(4), 2), (quaternion(), 2), (klein(), 1)] {
        let c = zero_trivial_group(&g, &one).peiffer_commutator().unwrap();
        if c.size() != order {
            failures.push(format!("<{0},{0}> has order {1}, expected {order}", g.name(), c.size()));
        }
    }
    for field in [FieldSpec::Prime(2), FieldSpec::Rationals] {
        let z = zero_algebra(field, AlgebraKind::Associative, 0);
        let xs: Vec<Pcm<Algebras>> = algebra_pool(field).iter().map(|x| zero_trivial_algebra(x, &z)).collect();
        derived_count += derived(&xs, &mut failures);
        let z = zero_algebra(field, AlgebraKind::Leibniz, 0);
        let xs: Vec<Pcm<Algebras>> = leibniz_pool(field).iter().map(|x| zero_trivial_algebra(x, &z)).collect();
        derived_count += derived(&xs, &mut failures);
    }
    if higgins < MIN_DEGENERATE || derived_count < MIN_DEGENERATE {
        failures.push(format!("only {higgins} / {derived_count} degenerate instances"));
    }
    Line {
        id: 4,
        name: "degenerations to classical commutators",
        detail: format!("{higgins} trivial-action pairs, {derived_count} trivial-base instances"),
        failures,
    }
}

type Check<V> = fn(&Pcm<V>) -> peiffer::theorems::Outcome;

fn corollaries<V: Probe>(ps: &[Pcm<V>], failures: &mut Vec<String>) -> usize {
    let mut triples = 0;
    for a in ps {
        match check_monotonicity(a) {
            Ok(n) => triples += n,
            Err(w) => failures.push(format!("{} monotonicity: {w}", a.name)),
        }
        let checks: [(&str, Check<V>); 4] = [
            ("image vanishing", check_image_vanishing),
            ("delta vanishing", check_delta_vanishing),
            ("surjective half", check_factorization_surjective),
            ("injective half", check_factorization_injective),
        ];
        for (name, check) in checks {
            if let Err(w) = check(a) {
                failures.push(format!("{} {name}: {w}", a.name));
            }
        }
    }
    triples
}

fn criterion_5(inst: &Instances) -> Line {
    let mut failures = Vec::new();
    let triples = corollaries(&inst.groups, &mut failures) + corollaries(&inst.algebras, &mut failures);
    if triples < MIN_TRIPLES {
        failures.push(format!("only {triples} triples"));
    }
    Line {
        id: 5,
        name: "monotonicity, image and delta vanishing, factorization",
        detail: format!("{triples} triples X <= X', Y <= Y'"),
        failures,
    }
}

fn self_consistency<V: Probe>(ps: &[Pcm<V>], pairs: &[(usize, usize)], failures: &mut Vec<String>) -> (usize, usize) {
    let (mut products, mut searched) = (0, 0);
    for &(i, j) in pairs {
        let (x, y) = (&ps[i], &ps[j]);
        let p = match peiffer_product(x, y) {
            Ok(p) => p,
            Err(e) => {
                failures.push(format!("{} & {}: {e}", x.name, y.name));
                continue;
            }
        };
        if let Some(w) = peiffer::peiffer::conjugation_witness(&p) {
            failures.push(format!("{}: {w}", p.result.name));
        }
        match check_product_symmetry(x, y) {
            Ok(2) => searched += 1,
            Ok(_) => {}
            Err(w) => failures.push(format!("{}: {w}", p.result.name)),
        }
        products += 1;
    }
    (products, searched)
}

fn criterion_6(inst: &Instances) -> Line {
    let mut failures = Vec::new();
    let gcat = group_catalog();
    let acat = algebra_catalog();
    let consecutive = |v: Vec<(usize, usize)>| v.into_iter().filter(|&(i, j)| j == i + 1).collect::<Vec<_>>();
    let (p1, s1) = self_consistency(&gcat, &product_pairs(&gcat, 64), &mut failures);
    let (p2, s2) = self_consistency(&acat, &product_pairs(&acat, 8), &mut failures);
    let (p3, s3) = self_consistency(&inst.groups, &consecutive(product_pairs(&inst.groups, 16)), &mut failures);
    let (p4, s4) = self_consistency(&inst.algebras, &consecutive(product_pairs(&inst.algebras, 6)), &mut failures);
    Line {
        id: 6,
        name: "conjugation realization and symmetry",
        detail: format!("{} products, {} isomorphisms found by search", p1 + p2 + p3 + p4, s1 + s2 + s3 + s4),
        failures,
    }
}

fn criterion_7() -> Line {
    let mut failures = Vec::new();
    let c4 = c4_inversion();
    let c = c4.peiffer_commutator().unwrap();
    if Groups::spanning(&c.sub) != vec![0, 2] {
        failures.push(format!("C4: <X,X> = {}", c.text()));
    }
    let r = reflect(&c4).unwrap();
    let x = r.crossed();
    if !(x.x.order() == 2 && x.b.order() == 2 && Groups::is_injective(&x.delta) && x.is_crossed()) {
        failures.push(format!("C4: reflection {:?}", x));
    }

    let f2 = FieldSpec::Prime(2);
    let d = dual_numbers_augmentation(f2);
    let c = d.peiffer_commutator().unwrap();
    if c.sub != Subspace::span(f2, 2, [vec![f2.zero(), f2.one()]]) {
        failures.push(format!("dual numbers: <X,X> = {}", c.text()));
    }
    let r = reflect(&d).unwrap();
    let x = r.crossed();
    if !(x.x.dim() == 1 && x.b.dim() == 1 && Algebras::is_injective(&x.delta) && x.is_crossed()) {
        failures.push(format!("dual numbers: reflection {:?}", x));
    }
    Line {
        id: 7,
        name: "worked examples",
        detail: "C4 -> C2 inversion and dual numbers".into(),
        failures,
    }
}

#[test]
fn acceptance() {
    let inst = instances();
    let lines = vec![
        criterion_1(&inst),
        criterion_2(&inst),
        criterion_3(),
        criterion_4(),
        criterion_5(&inst),
        criterion_6(&inst),
        criterion_7(),
    ];
    report(&lines);
    let failed: Vec<usize> = lines.iter().filter(|l| !l.passed()).map(|l| l.id).collect();
    assert!(failed.is_empty(), "criteria failed: {failed:?}");
}
