use proptest::prelude::*;

use peiffer::generate::{generate, GenConfig, VarietyChoice};
use peiffer::io::{load_pcm_file, pcm_to_file, to_json, AnyPcm};
use peiffer::theorems::{commutator_cokernel, sample_subobjects, Probe};
use peiffer::{peiffer_commutator, px_join, reflect, Pcm, Variety};

fn instances(seed: u64, variety: VarietyChoice) -> Vec<AnyPcm> {
    generate(&GenConfig {
        seed,
        count: 3,
        variety,
        budget: 500,
        ..GenConfig::default()
    })
    .instances
}

fn for_each(seed: u64, mut g: impl FnMut(&AnyPcm)) {
    for p in instances(seed, VarietyChoice::Mixed) {
        g(&p);
    }
}

/// `⟨X, Y⟩ = ⟨Y, X⟩ ≤ X ∨ Y`, closed under re-closure.
fn commutator_shape<V: Probe>(a: &Pcm<V>) {
    let subs = sample_subobjects(a, 4);
    for x in &subs {
        for y in &subs {
            let c = peiffer_commutator(x, y).unwrap();
            assert_eq!(c, peiffer_commutator(y, x).unwrap());
            let join = px_join(x, y).unwrap();
            assert!(c.le(&join));
            let again = V::closure_within(&a.x, &join.sub, &c.spanning()).unwrap();
            assert_eq!(again, c.sub);
            assert!(V::image_of(&a.delta, &c.sub) == V::bottom(&a.b));
        }
    }
}

/// The quotient by a closed commutator has the expected size.
fn quotient_size<V: Probe>(a: &Pcm<V>) {
    let c = peiffer_commutator(&a.whole(), &a.whole()).unwrap();
    let q = commutator_cokernel(&c).unwrap();
    let (n, k, m) = (V::size(&a.x), c.size(), V::size(&q.target.x));
    if V::tag(&a.x) == "group" {
        assert_eq!(n, k * m);
    } else {
        assert_eq!(n, k + m);
    }
}

/// The reflection of a crossed module is itself, and reflecting twice
/// changes nothing.
fn reflection_idempotent<V: Variety>(a: &Pcm<V>) {
    let r = reflect(a).unwrap();
    let rr = reflect(r.crossed()).unwrap();
    assert!(rr.commutator.is_trivial());
    assert!(rr.eta.is_iso());
    if a.is_crossed() {
        assert!(r.eta.is_iso());
    }
}

/// Pulling an action back along `f ∘ g` is pulling back along `f`, then
/// `g`; along the identity it changes nothing.
fn pullback_functorial<V: Variety>(a: &Pcm<V>) {
    let along_id = V::pullback_action(&a.xi, &V::identity(&a.b)).unwrap();
    assert_eq!(V::action_difference(&along_id, &a.xi), None);
    let ker = V::inclusion(&a.x, &V::kernel(&a.delta)).unwrap();
    let on_x = V::pullback_action(&a.xi, &a.delta).unwrap();
    let stepwise = V::pullback_action(&on_x, &ker).unwrap();
    let direct = V::pullback_action(&a.xi, &V::compose(&a.delta, &ker).unwrap()).unwrap();
    assert_eq!(V::action_difference(&stepwise, &direct), None);
    // δ vanishes on its kernel, so the kernel acts trivially
    assert_eq!(V::action_difference(&direct, &V::trivial_action(&V::source(&ker), &a.x)), None);
}

fn round_trip(p: &AnyPcm) {
    let text = to_json(&p.to_file());
    let back = load_pcm_file(&serde_json::from_str(&text).unwrap(), std::path::Path::new(".")).unwrap();
    assert_eq!(to_json(&back.to_file()), text);
}

macro_rules! both {
    ($p:expr, $f:ident) => {
        match $p {
            AnyPcm::Group(g) => $f(g),
            AnyPcm::Algebra(a) => $f(a),
        }
    };
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn commutators_are_symmetric_closed_and_in_ker_delta(seed in 0u64..10_000) {
        for_each(seed, |p| both!(p, commutator_shape));
    }

    #[test]
    fn quotients_have_the_expected_size(seed in 0u64..10_000) {
        for_each(seed, |p| both!(p, quotient_size));
    }

    #[test]
    fn reflection_is_idempotent(seed in 0u64..10_000) {
        for_each(seed, |p| both!(p, reflection_idempotent));
    }

    #[test]
    fn pullback_of_actions_is_functorial(seed in 0u64..10_000) {
        for_each(seed, |p| both!(p, pullback_functorial));
    }

    #[test]
    fn files_round_trip(seed in 0u64..10_000) {
        for_each(seed, round_trip);
    }

    #[test]
    fn generation_is_deterministic(seed in 0u64..10_000) {
        let a: Vec<String> = instances(seed, VarietyChoice::Mixed).iter().map(|p| to_json(&p.to_file())).collect();
        let b: Vec<String> = instances(seed, VarietyChoice::Mixed).iter().map(|p| to_json(&p.to_file())).collect();
        prop_assert_eq!(a, b);
    }
}

#[test]
fn pcm_files_keep_the_variety() {
    for p in instances(1, VarietyChoice::Algebras) {
        assert_ne!(p.to_file().variety, "group");
    }
    for p in instances(1, VarietyChoice::Groups) {
        if let AnyPcm::Group(g) = &p {
            assert_eq!(pcm_to_file(g).variety, "group");
        }
    }
}
