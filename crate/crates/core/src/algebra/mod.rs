//! Finite-dimensional algebras given by structure constants over an exact
//! field: associative (not necessarily unital) rings and right Leibniz
//! algebras, with Lie algebras as the antisymmetric Leibniz ones.

mod action;

pub use action::{componentwise, identities, semidirect, ActionIdentity, AlgebraAction, AlgebraSemidirect, Involves};

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::limits;
use crate::linalg::{self, axpy, solve, unit_vec, zero_vec, Matrix, Subspace, Vector};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AlgebraKind {
    Associative,
    Leibniz,
}

impl AlgebraKind {
    pub fn tag(&self) -> &'static str {
        match self {
            AlgebraKind::Associative => "assoc",
            AlgebraKind::Leibniz => "leibniz",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "assoc" => Ok(AlgebraKind::Associative),
            "leibniz" => Ok(AlgebraKind::Leibniz),
            _ => Err(Error::malformed(format!("unknown algebra variety {s:?}"))),
        }
    }
}

impl fmt::Display for AlgebraKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// `e_i e_j = Σ_k c[i][j][k] e_k`
#[derive(Debug, Clone)]
pub struct StructAlgebra {
    name: String,
    field: FieldSpec,
    kind: AlgebraKind,
    lie: bool,
    c: Vec<Vec<Vector>>,
}

// Equality is structural; the name and the Lie flag (a property of `c`)
// do not take part.
impl PartialEq for StructAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.kind == other.kind && self.c == other.c
    }
}

impl Eq for StructAlgebra {}

fn triple_witness(i: usize, j: usize, k: usize) -> String {
    format!("basis triple ({i}, {j}, {k})")
}

impl StructAlgebra {
    pub fn new(
        name: impl Into<String>,
        field: FieldSpec,
        kind: AlgebraKind,
        lie: bool,
        c: Vec<Vec<Vector>>,
    ) -> Result<Arc<Self>> {
        let n = c.len();
        limits::check_dim(n)?;
        for (i, row) in c.iter().enumerate() {
            if row.len() != n || row.iter().any(|v| v.len() != n) {
                return Err(Error::malformed(format!(
                    "structure constants must be {n}x{n}x{n} (slice {i})"
                )));
            }
            if row.iter().flatten().any(|s| !field.contains(s)) {
                return Err(Error::malformed(format!("entry in slice {i} is not in {}", field.name())));
            }
        }
        if lie && kind != AlgebraKind::Leibniz {
            return Err(Error::malformed("the lie flag only applies to leibniz algebras"));
        }
        let a = StructAlgebra {
            name: name.into(),
            field,
            kind,
            lie,
            c,
        };
        a.check()?;
        Ok(Arc::new(a))
    }

    /// Builds the structure constants by evaluating `prod` on basis pairs.
    pub fn from_products(
        name: impl Into<String>,
        field: FieldSpec,
        kind: AlgebraKind,
        n: usize,
        prod: impl Fn(usize, usize) -> Vector,
    ) -> Result<Arc<Self>> {
        let c: Vec<Vec<Vector>> = (0..n).map(|i| (0..n).map(|j| prod(i, j)).collect()).collect();
        let lie = kind == AlgebraKind::Leibniz && is_alternating(&c);
        Self::new(name, field, kind, lie, c)
    }

    pub fn zero(field: FieldSpec, kind: AlgebraKind, n: usize) -> Result<Arc<Self>> {
        Self::from_products(format!("zero{n}"), field, kind, n, |_, _| zero_vec(&field, n))
    }

    fn check(&self) -> Result<()> {
        let n = self.dim();
        let e = |i| unit_vec(&self.field, n, i);
        if self.lie && !is_alternating(&self.c) {
            for i in 0..n {
                for j in 0..n {
                    let sum = linalg::add_vec(&self.c[i][j], &self.c[j][i]);
                    if !linalg::is_zero_vec(&sum) || (i == j && !linalg::is_zero_vec(&self.c[i][i])) {
                        return Err(Error::axiom(
                            "antisymmetry [e_i, e_j] = -[e_j, e_i]",
                            format!("basis pair ({i}, {j})"),
                        ));
                    }
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    match self.kind {
                        AlgebraKind::Associative => {
                            let l = self.mul(&self.c[i][j], &e(k));
                            let r = self.mul(&e(i), &self.c[j][k]);
                            if l != r {
                                return Err(Error::axiom("associativity", triple_witness(i, j, k)));
                            }
                        }
                        AlgebraKind::Leibniz => {
                            // [[a,b],c] = [[a,c],b] + [a,[b,c]]
                            let l = self.mul(&self.c[i][j], &e(k));
                            let r = linalg::add_vec(
                                &self.mul(&self.c[i][k], &e(j)),
                                &self.mul(&e(i), &self.c[j][k]),
                            );
                            if l != r {
                                return Err(Error::axiom("Leibniz identity", triple_witness(i, j, k)));
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn renamed(&self, name: impl Into<String>) -> Arc<Self> {
        Arc::new(StructAlgebra {
            name: name.into(),
            ..self.clone()
        })
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn kind(&self) -> AlgebraKind {
        self.kind
    }

    pub fn is_lie(&self) -> bool {
        self.lie
    }

    pub fn dim(&self) -> usize {
        self.c.len()
    }

    pub fn constants(&self) -> &[Vec<Vector>] {
        &self.c
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &Vector {
        &self.c[i][j]
    }

    pub fn unit(&self, i: usize) -> Vector {
        unit_vec(&self.field, self.dim(), i)
    }

    pub fn zero_vector(&self) -> Vector {
        zero_vec(&self.field, self.dim())
    }

    /// Bilinear product of two coordinate vectors.
    pub fn mul(&self, u: &[Scalar], v: &[Scalar]) -> Vector {
        let mut out = self.zero_vector();
        for (i, ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for (j, vj) in v.iter().enumerate() {
                if vj.is_zero() {
                    continue;
                }
                axpy(&mut out, &(ui * vj), &self.c[i][j]);
            }
        }
        out
    }

    pub fn is_abelian(&self) -> bool {
        self.c.iter().flatten().all(|v| linalg::is_zero_vec(v))
    }

    fn check_vecs(&self, vecs: &[Vector]) -> Result<()> {
        match vecs.iter().find(|v| v.len() != self.dim()) {
            Some(v) => Err(Error::malformed(format!(
                "vector of length {} in an algebra of dimension {}",
                v.len(),
                self.dim()
            ))),
            None => Ok(()),
        }
    }

    pub fn whole(&self) -> Subspace {
        Subspace::full(self.field, self.dim())
    }

    pub fn zero_subspace(&self) -> Subspace {
        Subspace::zero(self.field, self.dim())
    }

    /// Smallest subspace containing `vecs` and closed under left and right
    /// multiplication by every element of `container`.
    pub fn ideal_closure_within(&self, container: &Subspace, vecs: &[Vector]) -> Result<Subspace> {
        self.check_vecs(vecs)?;
        let mut s = Subspace::span(self.field, self.dim(), vecs.iter().cloned());
        loop {
            let mut new = Vec::new();
            for v in s.basis() {
                for c in container.basis() {
                    new.push(self.mul(c, v));
                    new.push(self.mul(v, c));
                }
            }
            let next = s.with(new);
            if next.dim() == s.dim() {
                return Ok(s);
            }
            s = next;
        }
    }

    pub fn ideal_closure(&self, vecs: &[Vector]) -> Result<Subspace> {
        self.ideal_closure_within(&self.whole(), vecs)
    }

    /// Smallest subalgebra containing `vecs`.
    pub fn subalgebra_generate(&self, vecs: &[Vector]) -> Result<Subspace> {
        self.check_vecs(vecs)?;
        let mut s = Subspace::span(self.field, self.dim(), vecs.iter().cloned());
        loop {
            let mut new = Vec::new();
            for u in s.basis() {
                for v in s.basis() {
                    new.push(self.mul(u, v));
                }
            }
            let next = s.with(new);
            if next.dim() == s.dim() {
                return Ok(s);
            }
            s = next;
        }
    }

    pub fn check_subalgebra(&self, s: &Subspace) -> Result<()> {
        for (a, u) in s.basis().iter().enumerate() {
            for (b, v) in s.basis().iter().enumerate() {
                if !s.contains(&self.mul(u, v)) {
                    return Err(Error::axiom(
                        "subalgebra",
                        format!("product of basis vectors {a} and {b} leaves the subspace"),
                    ));
                }
            }
        }
        Ok(())
    }

    /// `None` if `s` is a two-sided ideal, otherwise `(ambient basis index,
    /// subspace basis index)` of a product that leaves it.
    pub fn ideal_witness(&self, s: &Subspace) -> Option<(usize, usize)> {
        for a in 0..self.dim() {
            let e = self.unit(a);
            for (k, v) in s.basis().iter().enumerate() {
                if !s.contains(&self.mul(&e, v)) || !s.contains(&self.mul(v, &e)) {
                    return Some((a, k));
                }
            }
        }
        None
    }

    /// The subalgebra as an algebra on its echelon basis, with the
    /// inclusion.
    pub fn subalgebra_object(self: &Arc<Self>, s: &Subspace) -> Result<LinearMap> {
        self.check_subalgebra(s)?;
        let basis = s.basis();
        // coordinates of a vector of `s` in the echelon basis are its
        // entries in the pivot columns
        let coords = |v: &Vector| -> Vector { s.pivots.iter().map(|&p| v[p].clone()).collect() };
        let sub = StructAlgebra::from_products(
            format!("{}|sub{}", self.name, basis.len()),
            self.field,
            self.kind,
            basis.len(),
            |a, b| coords(&self.mul(&basis[a], &basis[b])),
        )?;
        Ok(LinearMap {
            source: sub,
            target: self.clone(),
            matrix: Matrix::from_columns(self.field, self.dim(), basis),
        })
    }

    /// Quotient by a two-sided ideal on the complement spanned by the
    /// non-pivot coordinates.
    pub fn quotient(self: &Arc<Self>, ideal: &Subspace) -> Result<LinearMap> {
        self.check_vecs(ideal.basis())?;
        if let Some((a, k)) = self.ideal_witness(ideal) {
            return Err(Error::axiom(
                "two-sided ideal",
                format!("product of basis vector {a} with ideal vector {k}"),
            ));
        }
        let free = ideal.free_columns();
        let project = |v: &Vector| -> Vector {
            let r = ideal.reduce(v);
            free.iter().map(|&c| r[c].clone()).collect()
        };
        let q = StructAlgebra::from_products(
            format!("{}/{}", self.name, ideal.dim()),
            self.field,
            self.kind,
            free.len(),
            |a, b| project(&self.c[free[a]][free[b]]),
        )?;
        let cols: Vec<Vector> = (0..self.dim()).map(|k| project(&self.unit(k))).collect();
        Ok(LinearMap {
            source: self.clone(),
            target: q,
            matrix: Matrix::from_columns(self.field, free.len(), &cols),
        })
    }
}

fn is_alternating(c: &[Vec<Vector>]) -> bool {
    let n = c.len();
    (0..n).all(|i| {
        linalg::is_zero_vec(&c[i][i])
            && (0..n).all(|j| linalg::is_zero_vec(&linalg::add_vec(&c[i][j], &c[j][i])))
    })
}

/// A multiplicative linear map; `matrix` is target-dim × source-dim.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearMap {
    pub source: Arc<StructAlgebra>,
    pub target: Arc<StructAlgebra>,
    pub matrix: Matrix,
}

impl LinearMap {
    pub fn new(source: Arc<StructAlgebra>, target: Arc<StructAlgebra>, matrix: Matrix) -> Result<Self> {
        if source.field != target.field || matrix.field != source.field {
            return Err(Error::mismatch("linear map between algebras over different fields"));
        }
        if matrix.rows != target.dim() || matrix.cols != source.dim() {
            return Err(Error::malformed(format!(
                "matrix must be {}x{}",
                target.dim(),
                source.dim()
            )));
        }
        let f = LinearMap { source, target, matrix };
        let n = f.source.dim();
        for i in 0..n {
            for j in 0..n {
                let l = f.apply(f.source.basis_product(i, j));
                let r = f.target.mul(&f.matrix.column(i), &f.matrix.column(j));
                if l != r {
                    return Err(Error::axiom(
                        "multiplicativity f(e_i e_j) = f(e_i) f(e_j)",
                        format!("basis pair ({i}, {j})"),
                    ));
                }
            }
        }
        Ok(f)
    }

    pub fn identity(a: &Arc<StructAlgebra>) -> Self {
        LinearMap {
            source: a.clone(),
            target: a.clone(),
            matrix: Matrix::identity(a.field, a.dim()),
        }
    }

    pub fn zero(source: &Arc<StructAlgebra>, target: &Arc<StructAlgebra>) -> Self {
        LinearMap {
            source: source.clone(),
            target: target.clone(),
            matrix: Matrix::zero(source.field, target.dim(), source.dim()),
        }
    }

    pub fn apply(&self, v: &[Scalar]) -> Vector {
        self.matrix.apply(v)
    }

    /// `self ∘ first`
    pub fn after(&self, first: &LinearMap) -> Result<LinearMap> {
        if *first.target != *self.source {
            return Err(Error::mismatch("composable maps need matching algebras"));
        }
        Ok(LinearMap {
            source: first.source.clone(),
            target: self.target.clone(),
            matrix: self.matrix.mul(&first.matrix),
        })
    }

    pub fn kernel(&self) -> Subspace {
        Subspace::span(self.source.field, self.source.dim(), self.matrix.kernel())
    }

    pub fn image(&self) -> Subspace {
        Subspace::span(
            self.source.field,
            self.target.dim(),
            (0..self.matrix.cols).map(|j| self.matrix.column(j)),
        )
    }

    pub fn image_of(&self, s: &Subspace) -> Subspace {
        Subspace::span(
            self.source.field,
            self.target.dim(),
            s.basis().iter().map(|v| self.apply(v)),
        )
    }

    pub fn is_injective(&self) -> bool {
        self.matrix.rank() == self.source.dim()
    }

    pub fn is_surjective(&self) -> bool {
        self.matrix.rank() == self.target.dim()
    }

    /// A linear right inverse of a surjective map.
    pub(crate) fn section(&self) -> Result<Matrix> {
        let id = Matrix::identity(self.source.field, self.target.dim());
        solve(&self.matrix, &id)
            .map(|(s, _)| s)
            .ok_or_else(|| Error::internal("section of a non-surjective map"))
    }

    /// Coordinates of each column of `vs` in the source, for an injective
    /// map; the index of the first vector outside the image on failure.
    pub(crate) fn preimages(&self, vs: &[Vector]) -> std::result::Result<Vec<Vector>, usize> {
        let rhs = Matrix::from_columns(self.source.field, self.target.dim(), vs);
        match solve(&self.matrix, &rhs) {
            Some((x, _)) => Ok((0..vs.len()).map(|j| x.column(j)).collect()),
            None => {
                let img = self.image();
                Err(vs.iter().position(|v| !img.contains(v)).unwrap_or(0))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::algebras::{dual_numbers, ground_field, heisenberg, nonabelian_lie2};

    fn f2() -> FieldSpec {
        FieldSpec::Prime(2)
    }

    fn v(field: FieldSpec, xs: &[i64]) -> Vector {
        xs.iter().map(|&x| field.from_i64(x)).collect()
    }

    #[test]
    fn ground_field_is_associative() {
        let k = ground_field(FieldSpec::Rationals);
        assert_eq!(k.dim(), 1);
        assert!(k.basis_product(0, 0)[0].is_one());
    }

    #[test]
    fn dual_numbers_over_f2() {
        let d = dual_numbers(f2());
        assert_eq!(d.kind(), AlgebraKind::Associative);
        let one_plus_t = v(f2(), &[1, 1]);
        assert_eq!(d.mul(&one_plus_t, &one_plus_t), v(f2(), &[1, 0]));
    }

    #[test]
    fn lie_examples_validate() {
        let l = nonabelian_lie2(FieldSpec::Rationals);
        assert!(l.is_lie());
        assert!(heisenberg(FieldSpec::Rationals).is_lie());
    }

    #[test]
    fn broken_constants_name_the_triple() {
        let f = FieldSpec::Rationals;
        // e0 e0 = e1, e1 e0 = e1, everything else zero: (e0 e0) e0 = e1 but
        // e0 (e0 e0) = 0
        let err = StructAlgebra::from_products("bad", f, AlgebraKind::Associative, 2, |i, j| match (i, j) {
            (0, 0) | (1, 0) => v(f, &[0, 1]),
            _ => v(f, &[0, 0]),
        })
        .unwrap_err();
        assert_eq!(err, Error::axiom("associativity", "basis triple (0, 0, 0)"));
        let c = vec![vec![v(f, &[0]) ]];
        assert!(StructAlgebra::new("x", f, AlgebraKind::Associative, true, c).is_err());
        let asym = vec![
            vec![v(f, &[0, 0]), v(f, &[1, 0])],
            vec![v(f, &[1, 0]), v(f, &[0, 0])],
        ];
        assert!(matches!(
            StructAlgebra::new("x", f, AlgebraKind::Leibniz, true, asym),
            Err(Error::Axiom { .. })
        ));
    }

    #[test]
    fn malformed_constants() {
        let f = FieldSpec::Rationals;
        let c = vec![vec![v(f, &[0, 0])]];
        assert!(matches!(
            StructAlgebra::new("x", f, AlgebraKind::Associative, false, c),
            Err(Error::Malformed(_))
        ));
        let mixed = vec![vec![v(f2(), &[1])]];
        assert!(matches!(
            StructAlgebra::new("x", f, AlgebraKind::Associative, false, mixed),
            Err(Error::Malformed(_))
        ));
    }

    #[test]
    fn ideal_closures() {
        let d = dual_numbers(f2());
        let t = v(f2(), &[0, 1]);
        assert_eq!(d.ideal_closure(&[]).unwrap(), d.zero_subspace());
        assert_eq!(
            d.ideal_closure(std::slice::from_ref(&t)).unwrap(),
            Subspace::span(f2(), 2, vec![t])
        );
        let l = nonabelian_lie2(FieldSpec::Rationals);
        let e1 = l.unit(0);
        assert_eq!(l.ideal_closure(std::slice::from_ref(&e1)).unwrap().dim(), 1);
        assert!(l.ideal_closure(&[v(FieldSpec::Rationals, &[1])]).is_err());
    }

    #[test]
    fn subalgebra_generation() {
        let d = dual_numbers(f2());
        assert_eq!(d.subalgebra_generate(&[v(f2(), &[1, 1])]).unwrap(), d.whole());
        assert_eq!(d.subalgebra_generate(&[d.unit(0), d.unit(1)]).unwrap(), d.whole());
        assert_eq!(d.subalgebra_generate(&[]).unwrap(), d.zero_subspace());
    }

    #[test]
    fn quotients() {
        let d = dual_numbers(f2());
        let t = Subspace::span(f2(), 2, vec![v(f2(), &[0, 1])]);
        let q = d.quotient(&t).unwrap();
        assert_eq!(q.target.dim(), 1);
        assert!(q.target.basis_product(0, 0)[0].is_one());
        assert_eq!(q.apply(&v(f2(), &[1, 1])), v(f2(), &[1]));
        assert_eq!(q.apply(&v(f2(), &[0, 1])), v(f2(), &[0]));
        assert_eq!(q.kernel(), t);
        let id = d.quotient(&d.zero_subspace()).unwrap();
        assert_eq!(*id.target, *d);
        assert_eq!(id.matrix, Matrix::identity(f2(), 2));
        assert_eq!(d.quotient(&d.whole()).unwrap().target.dim(), 0);
        // span{1} is not an ideal: 1 * t = t
        let not_ideal = Subspace::span(f2(), 2, vec![v(f2(), &[1, 0])]);
        assert!(d.quotient(&not_ideal).is_err());
    }

    #[test]
    fn kernels_and_images() {
        let d = dual_numbers(f2());
        let k = ground_field(f2());
        let eps = LinearMap::new(d.clone(), k.clone(), Matrix {
            field: f2(),
            rows: 1,
            cols: 2,
            data: vec![v(f2(), &[1, 0])],
        })
        .unwrap();
        assert_eq!(eps.kernel(), Subspace::span(f2(), 2, vec![v(f2(), &[0, 1])]));
        assert!(eps.is_surjective());
        assert_eq!(LinearMap::zero(&d, &k).image(), k.zero_subspace());
        assert_eq!(LinearMap::identity(&d).kernel(), d.zero_subspace());
        // t ↦ 1 is not multiplicative
        let bad = Matrix {
            field: f2(),
            rows: 1,
            cols: 2,
            data: vec![v(f2(), &[0, 1])],
        };
        assert!(LinearMap::new(d, k, bad).is_err());
    }
}
