//! Finite groups from multiplication tables: subgroups, normal closures,
//! quotients and semidirect products.

use peiffer::catalog::groups::{cyclic, dihedral, symmetric3};
use peiffer::group::{semidirect, GroupAction};

fn main() -> peiffer::Result<()> {
    let s3 = symmetric3();
    let t = (0..s3.order()).find(|&g| s3.element_order(g) == 2).expect("a transposition");
    let sub = s3.subgroup_generate(&[t])?;
    let closure = s3.normal_closure(&[t])?;
    println!("<{t}> in S3 has order {}, its normal closure {}", sub.len(), closure.len());

    let a3 = s3.normal_closure(&[(0..6).find(|&g| s3.element_order(g) == 3).unwrap()])?;
    let q = s3.quotient(&a3)?;
    println!("S3 / A3 has order {}", q.target.order());

    let (c4, c2) = (cyclic(4), cyclic(2));
    let inversion = GroupAction::new(c2.clone(), c4.clone(), vec![vec![0, 1, 2, 3], vec![0, 3, 2, 1]])?;
    let sd = semidirect(&inversion)?;
    let d4 = dihedral(4);
    println!(
        "C4 x| C2 has order {}, abelian: {}; D4 abelian: {}",
        sd.group.order(),
        sd.group.is_abelian(),
        d4.is_abelian()
    );
    Ok(())
}
