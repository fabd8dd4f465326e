//! The Peiffer product of two pre-crossed modules over the same base, and
//! its comparison with the product taken in the other order.

use peiffer::catalog::groups::{cyclic, klein};
use peiffer::catalog::instances::{c4_inversion, zero_trivial_group};
use peiffer::peiffer::{conjugation_witness, symmetric_comparison};
use peiffer::{peiffer_product, Variety};

fn main() -> peiffer::Result<()> {
    let c4 = c4_inversion();
    let p = peiffer_product(&c4, &c4)?;
    println!(
        "{}: |X x| Y| = {}, relations of order {}, |X >< Y| = {}",
        p.result.name,
        peiffer::Groups::size(&p.semidirect.object),
        p.relations.size(),
        p.result.x.order()
    );
    println!("actions realized by conjugation: {}", conjugation_witness(&p).is_none());

    let c2 = cyclic(2);
    let x = zero_trivial_group(&klein(), &c2);
    let y = zero_trivial_group(&cyclic(3), &c2);
    let q = peiffer_product(&x, &y)?;
    println!("{} has order {} (the direct product)", q.result.name, q.result.x.order());
    let sym = symmetric_comparison(&q)?;
    println!("{} ~ {}: {}", q.result.name, sym.swapped.result.name, sym.comparison.is_iso());
    Ok(())
}
