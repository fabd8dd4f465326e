//! A common interface over the two backends, so that the category layer and
//! the Peiffer constructions are written once.

use std::fmt::Debug;

use crate::error::Result;
use crate::pxmod::PreCrossedModule;

mod algebras;
mod groups;

pub use algebras::Algebras;
pub use groups::Groups;

/// `X ⋊ Y` with `j: X → X⋊Y`, `i: Y → X⋊Y` and `p: X⋊Y → Y`.
#[derive(Debug, Clone)]
pub struct Semidirect<V: Variety> {
    pub object: V::Object,
    pub j: V::Map,
    pub i: V::Map,
    pub p: V::Map,
}

/// One Peiffer-type word `word` built from `us[u]` and `vs[v]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Defect<E> {
    pub u: usize,
    pub v: usize,
    pub form: &'static str,
    pub word: E,
}

pub trait Variety: Sized + Clone + Copy + Debug + PartialEq + Send + Sync + 'static {
    type Object: Clone + PartialEq + Debug + Send + Sync;
    type Elem: Clone + PartialEq + Debug + Send + Sync;
    type Sub: Clone + PartialEq + Debug + Send + Sync;
    type Map: Clone + PartialEq + Debug + Send + Sync;
    type Action: Clone + PartialEq + Debug + Send + Sync;

    /// "group", "assoc" or "leibniz".
    fn tag(o: &Self::Object) -> &'static str;
    fn name(o: &Self::Object) -> String;
    /// Order or dimension.
    fn size(o: &Self::Object) -> usize;
    fn elem_text(o: &Self::Object, e: &Self::Elem) -> String;
    fn is_neutral(o: &Self::Object, e: &Self::Elem) -> bool;

    // subobjects
    fn whole(o: &Self::Object) -> Self::Sub;
    fn bottom(o: &Self::Object) -> Self::Sub;
    fn sub_le(a: &Self::Sub, b: &Self::Sub) -> bool;
    fn sub_size(s: &Self::Sub) -> usize;
    fn sub_contains(s: &Self::Sub, e: &Self::Elem) -> bool;
    /// Every element (groups) or a basis (algebras).
    fn spanning(s: &Self::Sub) -> Vec<Self::Elem>;
    fn sub_text(o: &Self::Object, s: &Self::Sub) -> String;
    fn generate(o: &Self::Object, elems: &[Self::Elem]) -> Result<Self::Sub>;
    fn join(o: &Self::Object, a: &Self::Sub, b: &Self::Sub) -> Result<Self::Sub>;
    /// Normal closure (groups) or ideal closure (algebras) of `elems`
    /// inside the subobject `container`.
    fn closure_within(o: &Self::Object, container: &Self::Sub, elems: &[Self::Elem]) -> Result<Self::Sub>;
    fn check_sub(o: &Self::Object, s: &Self::Sub) -> Result<()>;
    fn normality_witness(o: &Self::Object, s: &Self::Sub) -> Option<String>;
    fn inclusion(o: &Self::Object, s: &Self::Sub) -> Result<Self::Map>;
    fn quotient(o: &Self::Object, s: &Self::Sub) -> Result<Self::Map>;

    // morphisms
    fn source(m: &Self::Map) -> Self::Object;
    fn target(m: &Self::Map) -> Self::Object;
    fn identity(o: &Self::Object) -> Self::Map;
    fn zero_map(a: &Self::Object, b: &Self::Object) -> Self::Map;
    /// `g ∘ f`
    fn compose(g: &Self::Map, f: &Self::Map) -> Result<Self::Map>;
    fn apply(m: &Self::Map, e: &Self::Elem) -> Self::Elem;
    fn kernel(m: &Self::Map) -> Self::Sub;
    fn image(m: &Self::Map) -> Self::Sub;
    fn image_of(m: &Self::Map, s: &Self::Sub) -> Self::Sub;
    fn is_injective(m: &Self::Map) -> bool;
    fn is_surjective(m: &Self::Map) -> bool;
    fn map_difference(f: &Self::Map, g: &Self::Map) -> Option<String>;
    /// Where two parallel maps agree.
    fn equalizer(f: &Self::Map, g: &Self::Map) -> Result<Self::Sub>;
    /// Factor `m` through the injective `mono`.
    fn corestrict(m: &Self::Map, mono: &Self::Map) -> Result<Self::Map>;
    /// Factor `m` through the surjective `proj`, checking well-definedness.
    fn descend(m: &Self::Map, proj: &Self::Map) -> Result<Self::Map>;
    /// The map `X ⋊ Y → Z` restricting to `f` and `g`, validated.
    fn copair(sd: &Semidirect<Self>, f: &Self::Map, g: &Self::Map) -> Result<Self::Map>;
    /// `X × Y` laid out as `X ⋊ Y` for the trivial action, plus the first
    /// projection.
    fn direct_product(x: &Self::Object, y: &Self::Object) -> Result<(Semidirect<Self>, Self::Map)>;

    // actions
    fn acting(a: &Self::Action) -> Self::Object;
    fn acted(a: &Self::Action) -> Self::Object;
    fn check_action(a: &Self::Action) -> Result<()>;
    fn conjugation(o: &Self::Object) -> Self::Action;
    fn trivial_action(acting: &Self::Object, acted: &Self::Object) -> Self::Action;
    /// Action of `f.source` through `f`.
    fn pullback_action(a: &Self::Action, f: &Self::Map) -> Result<Self::Action>;
    fn restrict_action(a: &Self::Action, incl: &Self::Map) -> Result<Self::Action>;
    fn descend_action(a: &Self::Action, proj: &Self::Map) -> Result<Self::Action>;
    fn action_difference(a: &Self::Action, b: &Self::Action) -> Option<String>;
    /// All `ᵇe` (groups) or `b·e`, `e·b` for basis `b` (algebras).
    fn act_images(a: &Self::Action, elems: &[Self::Elem]) -> Vec<Self::Elem>;
    /// First failure of `f(ᵇx) = ᵇf(x)`.
    fn equivariance_witness(f: &Self::Map, on_src: &Self::Action, on_tgt: &Self::Action) -> Option<String>;
    fn semidirect(a: &Self::Action) -> Result<Semidirect<Self>>;
    /// `ᵇ(x, y) = (ᵇx, ᵇy)` on a carrier laid out as `X ⋊ Y`.
    fn pair_action(carrier: &Self::Object, on_x: &Self::Action, on_y: &Self::Action) -> Result<Self::Action>;
    /// The failures of `u` acting on `v` by conjugation as it does through
    /// `delta`: `u v u⁻¹ (ᵟᵘv)⁻¹` for groups, `uv - δu·v` and `vu - v·δu`
    /// for algebras.
    fn defects(
        o: &Self::Object,
        delta: &Self::Map,
        act: &Self::Action,
        us: &[Self::Elem],
        vs: &[Self::Elem],
    ) -> Vec<Defect<Self::Elem>>;

    // searches
    /// All morphisms of pre-crossed modules `src → tgt`, up to `limit`.
    fn enumerate_px_maps(
        src: &PreCrossedModule<Self>,
        tgt: &PreCrossedModule<Self>,
        limit: usize,
    ) -> Result<Vec<Self::Map>>;
    /// An isomorphism of pre-crossed modules found independently of the
    /// Peiffer machinery. Groups search all isomorphisms; algebras solve
    /// the linear system sending each `pairs.0` to `pairs.1`.
    fn isomorphism_search(
        src: &PreCrossedModule<Self>,
        tgt: &PreCrossedModule<Self>,
        pairs: &[(Self::Elem, Self::Elem)],
    ) -> Result<Option<Self::Map>>;
}
