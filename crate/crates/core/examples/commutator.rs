//! Peiffer words and the Peiffer commutator of two sub-pre-crossed modules.

use peiffer::catalog::instances::{c4_inversion, dual_numbers_augmentation};
use peiffer::field::FieldSpec;
use peiffer::{peiffer_commutator, peiffer_words, SubPcm};

fn main() -> peiffer::Result<()> {
    let a = c4_inversion();
    let words = peiffer_words(&a.whole(), &a.whole())?;
    for w in words.iter().filter(|w| w.word != 0).take(4) {
        println!("x={} y={} {:?}: {} = {}", w.x, w.y, w.orientation, w.form, w.word);
    }
    let c = peiffer_commutator(&a.whole(), &a.whole())?;
    println!("<A,A> = {} in {}", c.text(), a.name);

    // a smaller pair: X generated by 2, Y everything
    let x = SubPcm::generated(a.clone(), &[2])?;
    println!("<{}, A> = {}", x.text(), peiffer_commutator(&x, &a.whole())?.text());

    let d = dual_numbers_augmentation(FieldSpec::Prime(2));
    println!("<D,D> = {} in {}", d.peiffer_commutator()?.text(), d.name);
    Ok(())
}
