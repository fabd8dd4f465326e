//! Coproducts of crossed modules and the mediating morphism out of them.

use peiffer::catalog::groups::{cyclic, klein};
use peiffer::catalog::instances::normal_inclusion;
use peiffer::group::ElementSet;
use peiffer::{coproduct_xmod, induced_morphism, Induced, PreCrossedModule, PxMorphism};

fn main() -> peiffer::Result<()> {
    let v4 = klein();
    let x = normal_inclusion(&v4, &ElementSet::new([0, 1]), "C2<V4");
    let y = normal_inclusion(&v4, &ElementSet::new([0, 2]), "C2'<V4");
    let p = coproduct_xmod(&x, &y)?;
    println!("{}: order {}, crossed = {}", p.result.name, p.result.x.order(), p.result.is_crossed());

    let z = PreCrossedModule::identity(&v4);
    let f = PxMorphism::new(x.clone(), z.clone(), x.delta.clone())?;
    let g = PxMorphism::new(y.clone(), z.clone(), y.delta.clone())?;
    match induced_morphism(&p, &f, &g)? {
        Induced::Morphism(m) => println!("mediator into {}: {:?}", z.name, m.map.map),
        Induced::Obstructed(c) => println!("obstructed by {}", c.text()),
    }

    // a crossed and a non-crossed module do not have a coproduct here
    let c4 = peiffer::catalog::instances::c4_inversion();
    let c2 = PreCrossedModule::identity(&cyclic(2));
    println!("{}", coproduct_xmod(&c4, &c2).err().map(|e| e.to_string()).unwrap_or_default());
    Ok(())
}
