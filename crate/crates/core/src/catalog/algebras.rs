//! Small named algebras.

use std::sync::Arc;

use crate::algebra::{AlgebraKind, StructAlgebra};
use crate::field::FieldSpec;
use crate::linalg::{unit_vec, zero_vec, Vector};

fn build(name: &str, field: FieldSpec, kind: AlgebraKind, n: usize, prod: impl Fn(usize, usize) -> Vector) -> Arc<StructAlgebra> {
    StructAlgebra::from_products(name, field, kind, n, prod).expect("catalog algebra")
}

/// Signed multiple of a basis vector.
fn e(field: FieldSpec, n: usize, i: usize, sign: i64) -> Vector {
    let mut v = zero_vec(&field, n);
    v[i] = field.from_i64(sign);
    v
}

/// The field itself as a one-dimensional associative algebra.
pub fn ground_field(field: FieldSpec) -> Arc<StructAlgebra> {
    build("k", field, AlgebraKind::Associative, 1, |_, _| unit_vec(&field, 1, 0))
}

/// `k[t]/(t^n)` on the basis `1, t, ..., t^(n-1)`.
pub fn truncated_polynomials(field: FieldSpec, n: usize) -> Arc<StructAlgebra> {
    build(&format!("k[t]/(t^{n})"), field, AlgebraKind::Associative, n, |i, j| {
        if i + j < n {
            unit_vec(&field, n, i + j)
        } else {
            zero_vec(&field, n)
        }
    })
}

/// `k[t]/(t^2)` on the basis `1, t`.
pub fn dual_numbers(field: FieldSpec) -> Arc<StructAlgebra> {
    truncated_polynomials(field, 2).renamed("k[t]/(t^2)")
}

/// `t k[t]/(t^(n+1))`: the non-unital algebra spanned by `t, ..., t^n`.
pub fn nilpotent_chain(field: FieldSpec, n: usize) -> Arc<StructAlgebra> {
    build(&format!("tk[t]/(t^{})", n + 1), field, AlgebraKind::Associative, n, |i, j| {
        if i + j + 1 < n {
            unit_vec(&field, n, i + j + 1)
        } else {
            zero_vec(&field, n)
        }
    })
}

/// Upper triangular 2x2 matrices on `e11, e12, e22`.
pub fn upper_triangular(field: FieldSpec) -> Arc<StructAlgebra> {
    build("T2", field, AlgebraKind::Associative, 3, |i, j| match (i, j) {
        (0, 0) => unit_vec(&field, 3, 0),
        (0, 1) | (1, 2) => unit_vec(&field, 3, 1),
        (2, 2) => unit_vec(&field, 3, 2),
        _ => zero_vec(&field, 3),
    })
}

pub fn zero_algebra(field: FieldSpec, kind: AlgebraKind, n: usize) -> Arc<StructAlgebra> {
    StructAlgebra::zero(field, kind, n).expect("zero algebra")
}

/// `[e0, e1] = e0`.
pub fn nonabelian_lie2(field: FieldSpec) -> Arc<StructAlgebra> {
    build("aff", field, AlgebraKind::Leibniz, 2, |i, j| match (i, j) {
        (0, 1) => e(field, 2, 0, 1),
        (1, 0) => e(field, 2, 0, -1),
        _ => zero_vec(&field, 2),
    })
}

/// `[e0, e1] = e2`.
pub fn heisenberg(field: FieldSpec) -> Arc<StructAlgebra> {
    build("h3", field, AlgebraKind::Leibniz, 3, |i, j| match (i, j) {
        (0, 1) => e(field, 3, 2, 1),
        (1, 0) => e(field, 3, 2, -1),
        _ => zero_vec(&field, 3),
    })
}

/// Leibniz but not Lie: `[e0, e1] = e0` and `[e1, e0] = 0`.
pub fn leibniz_half(field: FieldSpec) -> Arc<StructAlgebra> {
    build("lb2", field, AlgebraKind::Leibniz, 2, |i, j| match (i, j) {
        (0, 1) => e(field, 2, 0, 1),
        _ => zero_vec(&field, 2),
    })
}

/// Leibniz but not Lie: `[e1, e1] = e0`.
pub fn leibniz_square(field: FieldSpec) -> Arc<StructAlgebra> {
    build("lsq2", field, AlgebraKind::Leibniz, 2, |i, j| match (i, j) {
        (1, 1) => e(field, 2, 0, 1),
        _ => zero_vec(&field, 2),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lie_flags() {
        let f = FieldSpec::Rationals;
        assert!(nonabelian_lie2(f).is_lie());
        assert!(heisenberg(f).is_lie());
        assert!(!leibniz_half(f).is_lie());
        assert!(!leibniz_square(f).is_lie());
        // over F2 alternating and antisymmetric differ
        assert!(!leibniz_square(FieldSpec::Prime(2)).is_lie());
    }

    #[test]
    fn associative_examples_validate() {
        for f in [FieldSpec::Rationals, FieldSpec::Prime(2), FieldSpec::Prime(3)] {
            truncated_polynomials(f, 3);
            nilpotent_chain(f, 3);
            upper_triangular(f);
        }
        assert!(!upper_triangular(FieldSpec::Rationals).is_abelian());
    }
}
