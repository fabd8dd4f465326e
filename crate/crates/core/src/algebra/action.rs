use std::sync::Arc;

use super::{AlgebraKind, LinearMap, StructAlgebra};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::limits;
use crate::linalg::{add_vec, axpy, zero_vec, Matrix, Vector};

/// An action of `acting` (B) on `acted` (X) as a pair of bilinear maps:
/// `left[b][x]` is `e_b · e_x` and `right[b][x]` is `e_x · e_b` (brackets
/// `[b, x]` and `[x, b]` for Leibniz algebras). Both tensors are indexed
/// `dim B × dim X × dim X`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraAction {
    pub acting: Arc<StructAlgebra>,
    pub acted: Arc<StructAlgebra>,
    pub left: Vec<Vec<Vector>>,
    pub right: Vec<Vec<Vector>>,
}

/// Which tensors an identity mentions, used to prune searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Involves {
    Left,
    Right,
    Both,
}

/// One of the six action identities of a variety.
pub struct ActionIdentity {
    pub name: &'static str,
    pub involves: Involves,
    check: fn(&AlgebraAction) -> Option<String>,
}

impl ActionIdentity {
    pub fn first_violation(&self, act: &AlgebraAction) -> Option<String> {
        (self.check)(act)
    }
}

fn scan3(n1: usize, n2: usize, n3: usize, ok: impl Fn(usize, usize, usize) -> bool) -> Option<String> {
    for i in 0..n1 {
        for j in 0..n2 {
            for k in 0..n3 {
                if !ok(i, j, k) {
                    return Some(format!("basis triple ({i}, {j}, {k})"));
                }
            }
        }
    }
    None
}

macro_rules! ident {
    ($name:expr, $inv:expr, |$a:ident| $body:expr) => {
        ActionIdentity {
            name: $name,
            involves: $inv,
            check: |$a: &AlgebraAction| $body,
        }
    };
}

/// Ring actions: `(bb')·a = b·(b'·a)`, `(b·a)a' = b·(aa')`,
/// `(b·a)·b' = b·(a·b')`, `(a·b)a' = a(b·a')`, `(a·b)·b' = a·(bb')`,
/// `(aa')·b = a(a'·b)`.
pub static RING_IDENTITIES: [ActionIdentity; 6] = [
    ident!("(bb')·a = b·(b'·a)", Involves::Left, |s| {
        let (nb, nx) = (s.acting.dim(), s.acted.dim());
        scan3(nb, nb, nx, |b, b2, a| {
            s.left_vec(s.acting.basis_product(b, b2), &s.xe(a)) == s.left_vec(&s.be(b), s.left_basis(b2, a))
        })
    }),
    ident!("(b·a)a' = b·(aa')", Involves::Left, |s| {
        let (nb, nx) = (s.acting.dim(), s.acted.dim());
        scan3(nb, nx, nx, |b, a, a2| {
            s.acted.mul(s.left_basis(b, a), &s.xe(a2)) == s.left_vec(&s.be(b), s.acted.basis_product(a, a2))
        })
    }),
    ident!("(b·a)·b' = b·(a·b')", Involves::Both, |s| {
        let (nb, nx) = (s.acting.dim(), s.acted.dim());
        scan3(nb, nx, nb, |b, a, b2| {
            s.right_vec(s.left_basis(b, a), &s.be(b2)) == s.left_vec(&s.be(b), s.right_basis(a, b2))
        })
    }),
    ident!("(a·b)a' = a(b·a')", Involves::Both, |s| {
        let (nb, nx) = (s.acting.dim(), s.acted.dim());
        scan3(nx, nb, nx, |a, b, a2| {
            s.acted.mul(s.right_basis(a, b), &s.xe(a2)) == s.acted.mul(&s.xe(a), s.left_basis(b, a2))
        })
    }),
    ident!("(a·b)·b' = a·(bb')", Involves::Right, |s| {
        let (nb, nx) = (s.acting.dim(), s.acted.dim());
        scan3(nx, nb, nb, |a, b, b2| {
            s.right_vec(s.right_basis(a, b), &s.be(b2)) == s.right_vec(&s.xe(a), s.acting.basis_product(b, b2))
        })
    }),
    ident!("(aa')·b = a(a'·b)", Involves::Right, |s| {
        let (nb, nx) = (s.acting.dim(), s.acted.dim());
        scan3(nx, nx, nb, |a, a2, b| {
            s.right_vec(s.acted.basis_product(a, a2), &s.be(b)) == s.acted.mul(&s.xe(a), s.right_basis(a2, b))
        })
    }),
];

/// Leibniz actions, all instances of `[[p,q],r] = [[p,r],q] + [p,[q,r]]`
/// with two or more letters from the acted algebra or the acting one.
pub static LEIBNIZ_IDENTITIES: [ActionIdentity; 6] = [
    ident!("[[a,a'],b] = [[a,b],a'] + [a,[a',b]]", Involves::Right, |s| {
        let (nb, nx) = (s.acting.dim(), s.acted.dim());
        scan3(nx, nx, nb, |a, a2, b| {
            s.right_vec(s.acted.basis_product(a, a2), &s.be(b))
                == add_vec(
                    &s.acted.mul(s.right_basis(a, b), &s.xe(a2)),
                    &s.acted.mul(&s.xe(a), s.right_basis(a2, b)),
                )
        })
    }),
    ident!("[[a,b],b'] = [[a,b'],b] + [a,[b,b']]", Involves::Right, |s| {
        let (nb, nx) = (s.acting.dim(), s.acted.dim());
        scan3(nx, nb, nb, |a, b, b2| {
            s.right_vec(s.right_basis(a, b), &s.be(b2))
                == add_vec(
                    &s.right_vec(s.right_basis(a, b2), &s.be(b)),
                    &s.right_vec(&s.xe(a), s.acting.basis_product(b, b2)),
                )
        })
    }),
    ident!("[[a,b],a'] = [[a,a'],b] + [a,[b,a']]", Involves::Both, |s| {
        let (nb, nx) = (s.acting.dim(), s.acted.dim());
        scan3(nx, nb, nx, |a, b, a2| {
            s.acted.mul(s.right_basis(a, b), &s.xe(a2))
                == add_vec(
                    &s.right_vec(s.acted.basis_product(a, a2), &s.be(b)),
                    &s.acted.mul(&s.xe(a), s.left_basis(b, a2)),
                )
        })
    }),
    ident!("[[b,a],b'] = [[b,b'],a] + [b,[a,b']]", Involves::Both, |s| {
        let (nb, nx) = (s.acting.dim(), s.acted.dim());
        scan3(nb, nx, nb, |b, a, b2| {
            s.right_vec(s.left_basis(b, a), &s.be(b2))
                == add_vec(
                    &s.left_vec(s.acting.basis_product(b, b2), &s.xe(a)),
                    &s.left_vec(&s.be(b), s.right_basis(a, b2)),
                )
        })
    }),
    ident!("[[b,a],a'] = [[b,a'],a] + [b,[a,a']]", Involves::Left, |s| {
        let (nb, nx) = (s.acting.dim(), s.acted.dim());
        scan3(nb, nx, nx, |b, a, a2| {
            s.acted.mul(s.left_basis(b, a), &s.xe(a2))
                == add_vec(
                    &s.acted.mul(s.left_basis(b, a2), &s.xe(a)),
                    &s.left_vec(&s.be(b), s.acted.basis_product(a, a2)),
                )
        })
    }),
    ident!("[[b,b'],a] = [[b,a],b'] + [b,[b',a]]", Involves::Both, |s| {
        let (nb, nx) = (s.acting.dim(), s.acted.dim());
        scan3(nb, nb, nx, |b, b2, a| {
            s.left_vec(s.acting.basis_product(b, b2), &s.xe(a))
                == add_vec(
                    &s.right_vec(s.left_basis(b, a), &s.be(b2)),
                    &s.left_vec(&s.be(b), s.left_basis(b2, a)),
                )
        })
    }),
];

pub fn identities(kind: AlgebraKind) -> &'static [ActionIdentity; 6] {
    match kind {
        AlgebraKind::Associative => &RING_IDENTITIES,
        AlgebraKind::Leibniz => &LEIBNIZ_IDENTITIES,
    }
}

impl AlgebraAction {
    pub fn new(
        acting: Arc<StructAlgebra>,
        acted: Arc<StructAlgebra>,
        left: Vec<Vec<Vector>>,
        right: Vec<Vec<Vector>>,
    ) -> Result<Self> {
        let act = Self::unchecked(acting, acted, left, right)?;
        act.check()?;
        Ok(act)
    }

    /// Shape-checked but not axiom-checked; used by searches that test the
    /// identities selectively.
    pub fn unchecked(
        acting: Arc<StructAlgebra>,
        acted: Arc<StructAlgebra>,
        left: Vec<Vec<Vector>>,
        right: Vec<Vec<Vector>>,
    ) -> Result<Self> {
        if acting.field() != acted.field() {
            return Err(Error::mismatch("action between algebras over different fields"));
        }
        if acting.kind() != acted.kind() {
            return Err(Error::mismatch("action between algebras of different varieties"));
        }
        let (nb, nx) = (acting.dim(), acted.dim());
        let ok = |t: &Vec<Vec<Vector>>| {
            t.len() == nb
                && t.iter()
                    .all(|r| r.len() == nx && r.iter().all(|v| v.len() == nx && v.iter().all(|s| acted.field().contains(s))))
        };
        if !ok(&left) || !ok(&right) {
            return Err(Error::malformed(format!(
                "action tensors must be {nb}x{nx}x{nx} over {}",
                acted.field().name()
            )));
        }
        Ok(AlgebraAction {
            acting,
            acted,
            left,
            right,
        })
    }

    pub fn check(&self) -> Result<()> {
        for id in identities(self.acted.kind()) {
            if let Some(w) = id.first_violation(self) {
                return Err(Error::axiom(id.name, w));
            }
        }
        Ok(())
    }

    fn be(&self, b: usize) -> Vector {
        self.acting.unit(b)
    }

    fn xe(&self, x: usize) -> Vector {
        self.acted.unit(x)
    }

    fn left_basis(&self, b: usize, x: usize) -> &Vector {
        &self.left[b][x]
    }

    fn right_basis(&self, x: usize, b: usize) -> &Vector {
        &self.right[b][x]
    }

    /// `b · x`
    pub fn left_vec(&self, b: &[Scalar], x: &[Scalar]) -> Vector {
        bilinear(&self.left, b, x, self.acted.dim(), self)
    }

    /// `x · b`
    pub fn right_vec(&self, x: &[Scalar], b: &[Scalar]) -> Vector {
        bilinear(&self.right, b, x, self.acted.dim(), self)
    }

    pub fn trivial(acting: &Arc<StructAlgebra>, acted: &Arc<StructAlgebra>) -> Self {
        let z = vec![vec![acted.zero_vector(); acted.dim()]; acting.dim()];
        AlgebraAction {
            acting: acting.clone(),
            acted: acted.clone(),
            left: z.clone(),
            right: z,
        }
    }

    /// Multiplication of an algebra on itself.
    pub fn conjugation(a: &Arc<StructAlgebra>) -> Self {
        let n = a.dim();
        AlgebraAction {
            acting: a.clone(),
            acted: a.clone(),
            left: (0..n).map(|b| (0..n).map(|x| a.basis_product(b, x).clone()).collect()).collect(),
            right: (0..n).map(|b| (0..n).map(|x| a.basis_product(x, b).clone()).collect()).collect(),
        }
    }

    /// Multiplication of `a` on one of its ideals, materialized.
    pub fn conjugation_on(a: &Arc<StructAlgebra>, ideal: &crate::linalg::Subspace) -> Result<(Self, LinearMap)> {
        if let Some((e, k)) = a.ideal_witness(ideal) {
            return Err(Error::axiom(
                "two-sided ideal",
                format!("product of basis vector {e} with ideal vector {k}"),
            ));
        }
        let incl = a.subalgebra_object(ideal)?;
        let act = AlgebraAction::conjugation(a).restrict(&incl)?;
        Ok((act, incl))
    }

    /// Action of `f.source` through `f`.
    pub fn pullback(&self, f: &LinearMap) -> Result<Self> {
        if *f.target != *self.acting {
            return Err(Error::mismatch("pullback map must land in the acting algebra"));
        }
        let na = f.source.dim();
        let nx = self.acted.dim();
        let col = |a: usize| f.matrix.column(a);
        Ok(AlgebraAction {
            acting: f.source.clone(),
            acted: self.acted.clone(),
            left: (0..na)
                .map(|a| (0..nx).map(|x| self.left_vec(&col(a), &self.xe(x))).collect())
                .collect(),
            right: (0..na)
                .map(|a| (0..nx).map(|x| self.right_vec(&self.xe(x), &col(a))).collect())
                .collect(),
        })
    }

    /// Restriction to a stable subalgebra given by its (injective)
    /// inclusion.
    pub fn restrict(&self, incl: &LinearMap) -> Result<Self> {
        if *incl.target != *self.acted {
            return Err(Error::mismatch("restriction needs a subobject of the acted algebra"));
        }
        let (nb, ns) = (self.acting.dim(), incl.source.dim());
        let mut images = Vec::with_capacity(2 * nb * ns);
        for b in 0..nb {
            for k in 0..ns {
                let v = incl.matrix.column(k);
                images.push(self.left_vec(&self.be(b), &v));
                images.push(self.right_vec(&v, &self.be(b)));
            }
        }
        let coords = incl.preimages(&images).map_err(|bad| {
            let (b, k) = (bad / 2 / ns, bad / 2 % ns);
            Error::axiom(
                "stability under the action",
                format!("acting basis {b} moves sub-basis vector {k} out of the subobject"),
            )
        })?;
        let mut left = vec![Vec::with_capacity(ns); nb];
        let mut right = vec![Vec::with_capacity(ns); nb];
        for (idx, c) in coords.into_iter().enumerate() {
            let b = idx / 2 / ns;
            if idx % 2 == 0 {
                left[b].push(c);
            } else {
                right[b].push(c);
            }
        }
        Ok(AlgebraAction {
            acting: self.acting.clone(),
            acted: incl.source.clone(),
            left,
            right,
        })
    }

    /// Induced action on a quotient, verified on the whole basis.
    pub fn descend(&self, proj: &LinearMap) -> Result<Self> {
        if *proj.source != *self.acted {
            return Err(Error::mismatch("projection must start at the acted algebra"));
        }
        let s = proj.section()?;
        let (nb, nq) = (self.acting.dim(), proj.target.dim());
        let left: Vec<Vec<Vector>> = (0..nb)
            .map(|b| (0..nq).map(|c| proj.apply(&self.left_vec(&self.be(b), &s.column(c)))).collect())
            .collect();
        let right: Vec<Vec<Vector>> = (0..nb)
            .map(|b| (0..nq).map(|c| proj.apply(&self.right_vec(&s.column(c), &self.be(b)))).collect())
            .collect();
        let out = AlgebraAction {
            acting: self.acting.clone(),
            acted: proj.target.clone(),
            left,
            right,
        };
        for b in 0..nb {
            for x in 0..self.acted.dim() {
                let qx = proj.apply(&self.xe(x));
                if proj.apply(&self.left_vec(&self.be(b), &self.xe(x))) != out.left_vec(&self.be(b), &qx)
                    || proj.apply(&self.right_vec(&self.xe(x), &self.be(b))) != out.right_vec(&qx, &self.be(b))
                {
                    return Err(Error::axiom(
                        "action passes to the quotient",
                        format!("acting basis {b}, basis vector {x}"),
                    ));
                }
            }
        }
        Ok(out)
    }

    /// First `(side, b, x)` where the two actions disagree.
    pub fn difference(&self, other: &AlgebraAction) -> Option<(&'static str, usize, usize)> {
        for b in 0..self.acting.dim() {
            for x in 0..self.acted.dim() {
                if self.left[b][x] != other.left[b][x] {
                    return Some(("left", b, x));
                }
                if self.right[b][x] != other.right[b][x] {
                    return Some(("right", b, x));
                }
            }
        }
        None
    }
}

fn bilinear(t: &[Vec<Vector>], b: &[Scalar], x: &[Scalar], n: usize, act: &AlgebraAction) -> Vector {
    let mut out = zero_vec(&act.acted.field(), n);
    for (i, bi) in b.iter().enumerate() {
        if bi.is_zero() {
            continue;
        }
        for (j, xj) in x.iter().enumerate() {
            if xj.is_zero() {
                continue;
            }
            axpy(&mut out, &(bi * xj), &t[i][j]);
        }
    }
    out
}

/// `X ⋊ Y` on the block basis (X-basis, then Y-basis).
#[derive(Debug, Clone)]
pub struct AlgebraSemidirect {
    pub algebra: Arc<StructAlgebra>,
    pub j: LinearMap,
    pub i: LinearMap,
    pub p: LinearMap,
}

/// `(x, y)(x', y') = (xx' + y·x' + x·y', yy')`, bracket form for Leibniz
/// algebras.
pub fn semidirect(act: &AlgebraAction) -> Result<AlgebraSemidirect> {
    let (x, y) = (&act.acted, &act.acting);
    let (nx, ny) = (x.dim(), y.dim());
    let n = nx + ny;
    limits::check_dim(n)?;
    let field = x.field();
    let embed_x = |v: &Vector| -> Vector {
        v.iter().cloned().chain(std::iter::repeat_n(field.zero(), ny)).collect()
    };
    let embed_y = |v: &Vector| -> Vector {
        std::iter::repeat_n(field.zero(), nx).chain(v.iter().cloned()).collect()
    };
    let algebra = StructAlgebra::from_products(
        format!("({})x|({})", x.name(), y.name()),
        field,
        x.kind(),
        n,
        |a, b| match (a < nx, b < nx) {
            (true, true) => embed_x(x.basis_product(a, b)),
            (false, true) => embed_x(&act.left[a - nx][b]),
            (true, false) => embed_x(&act.right[b - nx][a]),
            (false, false) => embed_y(y.basis_product(a - nx, b - nx)),
        },
    )?;
    let cols_j: Vec<Vector> = (0..nx).map(|a| embed_x(&x.unit(a))).collect();
    let cols_i: Vec<Vector> = (0..ny).map(|b| embed_y(&y.unit(b))).collect();
    let mut p = Matrix::zero(field, ny, n);
    for b in 0..ny {
        p.data[b][nx + b] = field.one();
    }
    Ok(AlgebraSemidirect {
        j: LinearMap {
            source: x.clone(),
            target: algebra.clone(),
            matrix: Matrix::from_columns(field, n, &cols_j),
        },
        i: LinearMap {
            source: y.clone(),
            target: algebra.clone(),
            matrix: Matrix::from_columns(field, n, &cols_i),
        },
        p: LinearMap {
            source: algebra.clone(),
            target: y.clone(),
            matrix: p,
        },
        algebra,
    })
}

/// `b · (x, y) = (b·x, b·y)` and likewise on the right, on a carrier laid
/// out as blocks `(X, Y)`.
pub fn componentwise(
    carrier: &Arc<StructAlgebra>,
    on_x: &AlgebraAction,
    on_y: &AlgebraAction,
) -> Result<AlgebraAction> {
    let (nx, ny) = (on_x.acted.dim(), on_y.acted.dim());
    if carrier.dim() != nx + ny || *on_x.acting != *on_y.acting {
        return Err(Error::mismatch("componentwise action needs a pair carrier and one acting algebra"));
    }
    let field = carrier.field();
    let block = |t: &Vec<Vec<Vector>>, u: &Vec<Vec<Vector>>, b: usize| -> Vec<Vector> {
        (0..nx)
            .map(|a| t[b][a].iter().cloned().chain(std::iter::repeat_n(field.zero(), ny)).collect())
            .chain((0..ny).map(|c| std::iter::repeat_n(field.zero(), nx).chain(u[b][c].iter().cloned()).collect()))
            .collect()
    };
    let nb = on_x.acting.dim();
    AlgebraAction::new(
        on_x.acting.clone(),
        carrier.clone(),
        (0..nb).map(|b| block(&on_x.left, &on_y.left, b)).collect(),
        (0..nb).map(|b| block(&on_x.right, &on_y.right, b)).collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::algebras::{dual_numbers, ground_field, heisenberg, nonabelian_lie2};
    use crate::field::FieldSpec;

    #[test]
    fn trivial_and_conjugation_actions_validate() {
        for a in [dual_numbers(FieldSpec::Prime(2)), heisenberg(FieldSpec::Rationals)] {
            AlgebraAction::conjugation(&a).check().unwrap();
            AlgebraAction::trivial(&a, &a).check().unwrap();
        }
    }

    #[test]
    fn broken_action_is_reported() {
        let f = FieldSpec::Prime(2);
        let k = ground_field(f);
        let d = dual_numbers(f);
        // 1 · 1 = t breaks (1·1)t = 1·(1t)
        let mut left = AlgebraAction::conjugation(&d).pullback(&unit_map(&k, &d)).unwrap().left;
        left[0][0] = d.unit(1);
        let right = AlgebraAction::conjugation(&d).pullback(&unit_map(&k, &d)).unwrap().right;
        let err = AlgebraAction::new(k, d, left, right).unwrap_err();
        assert!(matches!(err, Error::Axiom { ref axiom, .. } if axiom == "(b·a)a' = b·(aa')"));
    }

    fn unit_map(k: &Arc<StructAlgebra>, d: &Arc<StructAlgebra>) -> LinearMap {
        LinearMap::new(k.clone(), d.clone(), Matrix::from_columns(k.field(), 2, &[d.unit(0)])).unwrap()
    }

    #[test]
    fn semidirect_with_zero_acted_is_acting() {
        let f = FieldSpec::Rationals;
        let l = nonabelian_lie2(f);
        let z = StructAlgebra::zero(f, AlgebraKind::Leibniz, 0).unwrap();
        let sd = semidirect(&AlgebraAction::trivial(&l, &z)).unwrap();
        assert_eq!(*sd.algebra, *l);
    }

    #[test]
    fn semidirect_realizes_the_action() {
        let f = FieldSpec::Rationals;
        let h = heisenberg(f);
        let act = AlgebraAction::conjugation(&h);
        let sd = semidirect(&act).unwrap();
        for b in 0..3 {
            for x in 0..3 {
                let prod = sd.algebra.mul(&sd.i.matrix.column(b), &sd.j.matrix.column(x));
                assert_eq!(prod, sd.j.apply(&act.left[b][x]));
                let prod = sd.algebra.mul(&sd.j.matrix.column(x), &sd.i.matrix.column(b));
                assert_eq!(prod, sd.j.apply(&act.right[b][x]));
            }
        }
    }
}
