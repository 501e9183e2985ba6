//! The universal R of 1 + h psi⊗psi pushed to W^(1|1), with the super QYBE
//! in both formulations and the braid relation for S = PR.

use supertwist::liesuper::LieSuperalgebra;
use supertwist::rep::{check_braid, check_super_qybe, matrix_r, GradedMatrix, GradedSpace, Representation};
use supertwist::scalar::int;
use supertwist::twist::Twist;
use supertwist::ug::Ug;

fn main() -> supertwist::Result<()> {
    let ug = Ug::new(LieSuperalgebra::odd_abelian(&["psi"]), 4);
    let f = Twist::from_words(&ug, &[(1, "psi", "psi", int(1))])?;
    let space = GradedSpace::new(1, 1)?;
    let e12 = GradedMatrix::from_rows(space.parities(), ug.order(), &[vec![int(0), int(1)], vec![int(0), int(0)]])?;
    let rho = Representation::new(space, vec![e12])?;
    let r = matrix_r(&ug, &f, &rho, false)?;
    println!("R =\n{r}");
    let qybe = check_super_qybe(&r, space)?;
    println!("embedded QYBE: {}", qybe.embedded.holds);
    println!("component QYBE: {}", qybe.component.holds);
    println!("formulations agree: {}", qybe.agreement.holds);
    let braid = check_braid(&r, space)?;
    println!("S = PR =\n{}", braid.s);
    println!("braid relation: {}", braid.braid.holds);
    Ok(())
}
