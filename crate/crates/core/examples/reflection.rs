//! The crossed-module reflection `A -> A/<A,A>` and its universal property
//! against a crossed target.

use peiffer::catalog::instances::{c4_inversion, dual_numbers_augmentation};
use peiffer::field::FieldSpec;
use peiffer::{reflect, Groups, PreCrossedModule, Variety};

fn main() -> peiffer::Result<()> {
    let a = c4_inversion();
    let r = reflect(&a)?;
    let x = r.crossed();
    println!(
        "{}: <A,A> = {}, reflection {} -> {} crossed = {}",
        a.name,
        r.commutator.text(),
        x.x.order(),
        x.b.order(),
        x.is_crossed()
    );

    // every map into the identity crossed module factors through eta
    let z = PreCrossedModule::<Groups>::identity(&a.b);
    let maps = Groups::enumerate_px_maps(&a, &z, 100)?;
    for f in &maps {
        let phi = Groups::descend(f, &r.eta.map)?;
        println!("  {:?} factors as {:?} after eta", f.map, phi.map);
    }

    let d = dual_numbers_augmentation(FieldSpec::Prime(2));
    let rd = reflect(&d)?;
    println!("{}: reflection has dim {} over dim {}", d.name, rd.crossed().x.dim(), rd.crossed().b.dim());
    Ok(())
}
