use std::sync::Arc;

use super::{Defect, Semidirect, Variety};
use crate::algebra::{self, AlgebraAction, LinearMap, StructAlgebra};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::{is_zero_vec, solve, sub_vec, Matrix, Subspace, Vector};
use crate::pxmod::{px_map_witness, PreCrossedModule};

/// Associative or Leibniz algebras given by structure constants.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Algebras;

/// Largest solution set `enumerate_px_maps` will walk.
const ENUMERATION_CAP: usize = 1 << 20;

fn from_sd(sd: algebra::AlgebraSemidirect) -> Semidirect<Algebras> {
    Semidirect {
        object: sd.algebra,
        j: sd.j,
        i: sd.i,
        p: sd.p,
    }
}

fn vec_text(v: &[Scalar]) -> String {
    let parts: Vec<String> = v.iter().map(Scalar::to_text).collect();
    format!("[{}]", parts.join(", "))
}

/// Matrix of `v ↦ t[b][·] applied to v` for one acting basis vector, as
/// columns indexed by the acted basis.
fn action_matrix(t: &[Vec<Vector>], b: usize, field: crate::field::FieldSpec, n: usize) -> Matrix {
    Matrix::from_columns(field, n, &t[b])
}

impl Variety for Algebras {
    type Object = Arc<StructAlgebra>;
    type Elem = Vector;
    type Sub = Subspace;
    type Map = LinearMap;
    type Action = AlgebraAction;

    fn tag(o: &Self::Object) -> &'static str {
        o.kind().tag()
    }

    fn name(o: &Self::Object) -> String {
        o.name().to_string()
    }

    fn size(o: &Self::Object) -> usize {
        o.dim()
    }

    fn elem_text(_: &Self::Object, e: &Vector) -> String {
        vec_text(e)
    }

    fn is_neutral(_: &Self::Object, e: &Vector) -> bool {
        is_zero_vec(e)
    }

    fn whole(o: &Self::Object) -> Subspace {
        o.whole()
    }

    fn bottom(o: &Self::Object) -> Subspace {
        o.zero_subspace()
    }

    fn sub_le(a: &Subspace, b: &Subspace) -> bool {
        a.le(b)
    }

    fn sub_size(s: &Subspace) -> usize {
        s.dim()
    }

    fn sub_contains(s: &Subspace, e: &Vector) -> bool {
        s.contains(e)
    }

    fn spanning(s: &Subspace) -> Vec<Vector> {
        s.basis().to_vec()
    }

    fn sub_text(_: &Self::Object, s: &Subspace) -> String {
        let rows: Vec<String> = s.basis().iter().map(|v| vec_text(v)).collect();
        format!("span{{{}}}", rows.join(", "))
    }

    fn generate(o: &Self::Object, elems: &[Vector]) -> Result<Subspace> {
        o.subalgebra_generate(elems)
    }

    fn join(o: &Self::Object, a: &Subspace, b: &Subspace) -> Result<Subspace> {
        let gens: Vec<Vector> = a.basis().iter().chain(b.basis()).cloned().collect();
        o.subalgebra_generate(&gens)
    }

    fn closure_within(o: &Self::Object, container: &Subspace, elems: &[Vector]) -> Result<Subspace> {
        o.ideal_closure_within(container, elems)
    }

    fn check_sub(o: &Self::Object, s: &Subspace) -> Result<()> {
        o.check_subalgebra(s)
    }

    fn normality_witness(o: &Self::Object, s: &Subspace) -> Option<String> {
        o.ideal_witness(s)
            .map(|(e, k)| format!("basis vector {e} times ideal vector {k} leaves the subspace"))
    }

    fn inclusion(o: &Self::Object, s: &Subspace) -> Result<LinearMap> {
        o.subalgebra_object(s)
    }

    fn quotient(o: &Self::Object, s: &Subspace) -> Result<LinearMap> {
        o.quotient(s)
    }

    fn source(m: &LinearMap) -> Self::Object {
        m.source.clone()
    }

    fn target(m: &LinearMap) -> Self::Object {
        m.target.clone()
    }

    fn identity(o: &Self::Object) -> LinearMap {
        LinearMap::identity(o)
    }

    fn zero_map(a: &Self::Object, b: &Self::Object) -> LinearMap {
        LinearMap::zero(a, b)
    }

    fn compose(g: &LinearMap, f: &LinearMap) -> Result<LinearMap> {
        g.after(f)
    }

    fn apply(m: &LinearMap, e: &Vector) -> Vector {
        m.apply(e)
    }

    fn kernel(m: &LinearMap) -> Subspace {
        m.kernel()
    }

    fn image(m: &LinearMap) -> Subspace {
        m.image()
    }

    fn image_of(m: &LinearMap, s: &Subspace) -> Subspace {
        m.image_of(s)
    }

    fn is_injective(m: &LinearMap) -> bool {
        m.is_injective()
    }

    fn is_surjective(m: &LinearMap) -> bool {
        m.is_surjective()
    }

    fn map_difference(f: &LinearMap, g: &LinearMap) -> Option<String> {
        if *f.source != *g.source || *f.target != *g.target {
            return Some("different source or target".into());
        }
        (0..f.source.dim())
            .find(|&c| f.matrix.column(c) != g.matrix.column(c))
            .map(|c| {
                format!(
                    "basis vector {c}: {} vs {}",
                    vec_text(&f.matrix.column(c)),
                    vec_text(&g.matrix.column(c))
                )
            })
    }

    fn equalizer(f: &LinearMap, g: &LinearMap) -> Result<Subspace> {
        if *f.source != *g.source || *f.target != *g.target {
            return Err(Error::mismatch("equalizer of non-parallel maps"));
        }
        let d = f.matrix.sub(&g.matrix);
        Ok(Subspace::span(f.source.field(), f.source.dim(), d.kernel()))
    }

    fn corestrict(m: &LinearMap, mono: &LinearMap) -> Result<LinearMap> {
        if *m.target != *mono.target {
            return Err(Error::mismatch("corestriction needs a common target"));
        }
        let cols: Vec<Vector> = (0..m.source.dim()).map(|c| m.matrix.column(c)).collect();
        let pre = mono
            .preimages(&cols)
            .map_err(|c| Error::axiom("factors through the subobject", format!("basis vector {c}")))?;
        LinearMap::new(
            m.source.clone(),
            mono.source.clone(),
            Matrix::from_columns(m.source.field(), mono.source.dim(), &pre),
        )
    }

    fn descend(m: &LinearMap, proj: &LinearMap) -> Result<LinearMap> {
        if *m.source != *proj.source {
            return Err(Error::mismatch("descent needs a common source"));
        }
        if !proj.is_surjective() {
            return Err(Error::mismatch("descent needs a surjection"));
        }
        let phi = m.matrix.mul(&proj.section()?);
        let back = phi.mul(&proj.matrix);
        if let Some(c) = (0..m.source.dim()).find(|&c| back.column(c) != m.matrix.column(c)) {
            return Err(Error::axiom("well defined on the quotient", format!("basis vector {c}")));
        }
        LinearMap::new(proj.target.clone(), m.target.clone(), phi)
    }

    fn copair(sd: &Semidirect<Self>, f: &LinearMap, g: &LinearMap) -> Result<LinearMap> {
        if *g.target != *f.target || *f.source != *sd.j.source || *g.source != *sd.i.source {
            return Err(Error::mismatch("copair legs must match the factors and share a target"));
        }
        let cols: Vec<Vector> = (0..f.source.dim())
            .map(|c| f.matrix.column(c))
            .chain((0..g.source.dim()).map(|c| g.matrix.column(c)))
            .collect();
        LinearMap::new(
            sd.object.clone(),
            f.target.clone(),
            Matrix::from_columns(f.target.field(), f.target.dim(), &cols),
        )
    }

    fn direct_product(x: &Self::Object, y: &Self::Object) -> Result<(Semidirect<Self>, LinearMap)> {
        let sd = algebra::semidirect(&AlgebraAction::trivial(y, x))?;
        let (nx, n) = (x.dim(), sd.algebra.dim());
        let mut m = Matrix::zero(x.field(), nx, n);
        for k in 0..nx {
            m.data[k][k] = x.field().one();
        }
        let p1 = LinearMap {
            source: sd.algebra.clone(),
            target: x.clone(),
            matrix: m,
        };
        Ok((from_sd(sd), p1))
    }

    fn acting(a: &AlgebraAction) -> Self::Object {
        a.acting.clone()
    }

    fn acted(a: &AlgebraAction) -> Self::Object {
        a.acted.clone()
    }

    fn check_action(a: &AlgebraAction) -> Result<()> {
        a.check()
    }

    fn conjugation(o: &Self::Object) -> AlgebraAction {
        AlgebraAction::conjugation(o)
    }

    fn trivial_action(acting: &Self::Object, acted: &Self::Object) -> AlgebraAction {
        AlgebraAction::trivial(acting, acted)
    }

    fn pullback_action(a: &AlgebraAction, f: &LinearMap) -> Result<AlgebraAction> {
        a.pullback(f)
    }

    fn restrict_action(a: &AlgebraAction, incl: &LinearMap) -> Result<AlgebraAction> {
        a.restrict(incl)
    }

    fn descend_action(a: &AlgebraAction, proj: &LinearMap) -> Result<AlgebraAction> {
        a.descend(proj)
    }

    fn action_difference(a: &AlgebraAction, b: &AlgebraAction) -> Option<String> {
        if *a.acting != *b.acting || *a.acted != *b.acted {
            return Some("actions between different objects".into());
        }
        a.difference(b).map(|(side, g, x)| {
            let (l, r) = if side == "left" {
                (&a.left[g][x], &b.left[g][x])
            } else {
                (&a.right[g][x], &b.right[g][x])
            };
            format!("{side} (b={g}, x={x}): {} vs {}", vec_text(l), vec_text(r))
        })
    }

    fn act_images(a: &AlgebraAction, elems: &[Vector]) -> Vec<Vector> {
        let mut out = Vec::new();
        for b in 0..a.acting.dim() {
            let eb = a.acting.unit(b);
            for v in elems {
                out.push(a.left_vec(&eb, v));
                out.push(a.right_vec(v, &eb));
            }
        }
        out
    }

    fn equivariance_witness(f: &LinearMap, on_src: &AlgebraAction, on_tgt: &AlgebraAction) -> Option<String> {
        for b in 0..on_src.acting.dim() {
            let eb = on_src.acting.unit(b);
            for x in 0..f.source.dim() {
                let fx = f.matrix.column(x);
                if f.apply(&on_src.left[b][x]) != on_tgt.left_vec(&eb, &fx) {
                    return Some(format!("left (b={b}, x={x})"));
                }
                if f.apply(&on_src.right[b][x]) != on_tgt.right_vec(&fx, &eb) {
                    return Some(format!("right (b={b}, x={x})"));
                }
            }
        }
        None
    }

    fn semidirect(a: &AlgebraAction) -> Result<Semidirect<Self>> {
        algebra::semidirect(a).map(from_sd)
    }

    fn pair_action(carrier: &Self::Object, on_x: &AlgebraAction, on_y: &AlgebraAction) -> Result<AlgebraAction> {
        algebra::componentwise(carrier, on_x, on_y)
    }

    fn defects(
        o: &Self::Object,
        delta: &LinearMap,
        act: &AlgebraAction,
        us: &[Vector],
        vs: &[Vector],
    ) -> Vec<Defect<Vector>> {
        let mut out = Vec::with_capacity(2 * us.len() * vs.len());
        for (iu, u) in us.iter().enumerate() {
            let du = delta.apply(u);
            for (iv, v) in vs.iter().enumerate() {
                out.push(Defect {
                    u: iu,
                    v: iv,
                    form: "uv - du.v",
                    word: sub_vec(&o.mul(u, v), &act.left_vec(&du, v)),
                });
                out.push(Defect {
                    u: iu,
                    v: iv,
                    form: "vu - v.du",
                    word: sub_vec(&o.mul(v, u), &act.right_vec(v, &du)),
                });
            }
        }
        out
    }

    fn enumerate_px_maps(
        src: &PreCrossedModule<Self>,
        tgt: &PreCrossedModule<Self>,
        limit: usize,
    ) -> Result<Vec<LinearMap>> {
        if *src.b != *tgt.b {
            return Err(Error::mismatch("pre-crossed modules over different bases"));
        }
        let field = src.x.field();
        let (n, m, nb) = (src.x.dim(), tgt.x.dim(), src.b.dim());
        // unknown F[r][c] at r * n + c; over-B and equivariance are linear
        let var = |r: usize, c: usize| r * n + c;
        let mut rows: Vec<Vector> = Vec::new();
        let mut rhs: Vec<Scalar> = Vec::new();
        for k in 0..nb {
            for c in 0..n {
                let mut row = vec![field.zero(); m * n];
                for r in 0..m {
                    row[var(r, c)] = tgt.delta.matrix.data[k][r].clone();
                }
                rows.push(row);
                rhs.push(src.delta.matrix.data[k][c].clone());
            }
        }
        for (ts, tt) in [(&src.xi.left, &tgt.xi.left), (&src.xi.right, &tgt.xi.right)] {
            for b in 0..nb {
                let act_t = action_matrix(tt, b, field, m);
                for x in 0..n {
                    // F · t_src[b][x] - T_b · F e_x = 0
                    for k in 0..m {
                        let mut row = vec![field.zero(); m * n];
                        for c in 0..n {
                            row[var(k, c)] = &row[var(k, c)] + &ts[b][x][c];
                        }
                        for r in 0..m {
                            row[var(r, x)] = &row[var(r, x)] - &act_t.data[k][r];
                        }
                        rows.push(row);
                        rhs.push(field.zero());
                    }
                }
            }
        }
        let a = Matrix {
            field,
            rows: rows.len(),
            cols: m * n,
            data: rows,
        };
        let b = Matrix::from_columns(field, rhs.len(), &[rhs]);
        let Some((part, null)) = solve(&a, &b) else {
            return Ok(Vec::new());
        };
        let base = part.column(0);
        let combos: Vec<Vec<Scalar>> = if null.is_empty() {
            vec![Vec::new()]
        } else {
            let elems = field
                .elements()
                .ok_or_else(|| Error::mismatch("enumerating maps over Q needs a unique candidate"))?;
            let total = (elems.len() as u128).checked_pow(null.len() as u32).unwrap_or(u128::MAX);
            if total > ENUMERATION_CAP as u128 {
                return Err(Error::Cap {
                    what: "candidate map enumeration",
                    size: total.min(usize::MAX as u128) as usize,
                    cap: ENUMERATION_CAP,
                });
            }
            let mut out = vec![Vec::new()];
            for _ in 0..null.len() {
                out = out
                    .into_iter()
                    .flat_map(|pre: Vec<Scalar>| {
                        elems.iter().map(move |e| {
                            let mut v = pre.clone();
                            v.push(e.clone());
                            v
                        })
                    })
                    .collect();
            }
            out
        };
        let mut found = Vec::new();
        for coeffs in combos {
            let mut f = base.clone();
            for (c, v) in coeffs.iter().zip(&null) {
                crate::linalg::axpy(&mut f, c, v);
            }
            let mut mat = Matrix::zero(field, m, n);
            for r in 0..m {
                for c in 0..n {
                    mat.data[r][c] = f[var(r, c)].clone();
                }
            }
            if let Ok(map) = LinearMap::new(src.x.clone(), tgt.x.clone(), mat) {
                if px_map_witness(src, tgt, &map).is_none() {
                    found.push(map);
                    if found.len() >= limit {
                        break;
                    }
                }
            }
        }
        Ok(found)
    }

    fn isomorphism_search(
        src: &PreCrossedModule<Self>,
        tgt: &PreCrossedModule<Self>,
        pairs: &[(Vector, Vector)],
    ) -> Result<Option<LinearMap>> {
        if *src.b != *tgt.b {
            return Err(Error::mismatch("pre-crossed modules over different bases"));
        }
        let field = src.x.field();
        let (n, m) = (src.x.dim(), tgt.x.dim());
        if n != m {
            return Ok(None);
        }
        // T P = Q  ⇔  Pᵀ Tᵀ = Qᵀ
        let p = Matrix::from_columns(field, n, &pairs.iter().map(|(a, _)| a.clone()).collect::<Vec<_>>());
        let q = Matrix::from_columns(field, m, &pairs.iter().map(|(_, b)| b.clone()).collect::<Vec<_>>());
        let Some((tt, _)) = solve(&p.transpose(), &q.transpose()) else {
            return Ok(None);
        };
        let t = tt.transpose();
        if t.inverse().is_none() {
            return Ok(None);
        }
        let Ok(map) = LinearMap::new(src.x.clone(), tgt.x.clone(), t) else {
            return Ok(None);
        };
        Ok(px_map_witness(src, tgt, &map).is_none().then_some(map))
    }
}
