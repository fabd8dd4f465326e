//! Validating pre-crossed modules and testing the Peiffer identity.

use peiffer::catalog::instances::{c4_inversion, corrupted_identity, dual_numbers_augmentation, group_catalog};
use peiffer::field::FieldSpec;
use peiffer::pcm_validate;
use peiffer::Groups;

fn main() {
    let c4 = c4_inversion();
    println!("{}: crossed = {}", c4.name, c4.is_crossed());
    if let Some(w) = c4.crossed_witness() {
        println!("  Peiffer identity fails at {w}");
    }
    let d = dual_numbers_augmentation(FieldSpec::Prime(2));
    println!("{}: crossed = {}", d.name, d.is_crossed());

    let bad = corrupted_identity();
    let checked = pcm_validate::<Groups>(bad.name.clone(), bad.x.clone(), bad.b.clone(), bad.delta.clone(), bad.xi.clone());
    println!("{}: {}", bad.name, checked.err().map(|e| e.to_string()).unwrap_or_default());

    let crossed = group_catalog().iter().filter(|p| p.is_crossed()).count();
    println!("{crossed} of {} catalog group instances are crossed", group_catalog().len());
}
