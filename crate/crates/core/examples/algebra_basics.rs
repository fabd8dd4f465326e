//! Structure-constant algebras over a prime field or the rationals: ideals,
//! quotients and the identities checked on construction.

use peiffer::algebra::{AlgebraKind, StructAlgebra};
use peiffer::catalog::algebras::{dual_numbers, heisenberg, leibniz_half};
use peiffer::field::FieldSpec;
use peiffer::linalg::unit_vec;

fn main() -> peiffer::Result<()> {
    let f2 = FieldSpec::Prime(2);
    let d = dual_numbers(f2);
    let t = d.unit(1);
    let ideal = d.ideal_closure(std::slice::from_ref(&t))?;
    let q = d.quotient(&ideal)?;
    println!("(t) in {} has dim {}; the quotient has dim {}", d.name(), ideal.dim(), q.target.dim());

    let h = heisenberg(FieldSpec::Rationals);
    let centre = h.ideal_closure(&[h.mul(&h.unit(0), &h.unit(1))])?;
    println!("[h3, h3] has dim {}, lie: {}", centre.dim(), h.is_lie());

    let lb = leibniz_half(f2);
    println!("{} is Leibniz but not Lie: {}", lb.name(), !lb.is_lie());

    // e0 e0 = e1 and e1 e0 = e0 is not associative
    let bad = StructAlgebra::from_products("bad", f2, AlgebraKind::Associative, 2, |i, j| match (i, j) {
        (0, 0) => unit_vec(&f2, 2, 1),
        (1, 0) => unit_vec(&f2, 2, 0),
        _ => vec![f2.zero(), f2.zero()],
    });
    match bad {
        Err(e) => println!("rejected: {e}"),
        Ok(_) => println!("unexpectedly accepted"),
    }
    Ok(())
}
