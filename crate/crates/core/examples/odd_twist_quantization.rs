//! Quantizing the odd-abelian algebra with F = 1 + h psi⊗psi and running the
//! quasitriangularity suite.

use supertwist::liesuper::LieSuperalgebra;
use supertwist::scalar::int;
use supertwist::twist::{check_cocycle, QuantizedHopf, Twist};
use supertwist::ug::Ug;

fn main() -> supertwist::Result<()> {
    let ug = Ug::new(LieSuperalgebra::odd_abelian(&["psi"]), 4);
    let f = Twist::from_words(&ug, &[(1, "psi", "psi", int(1))])?;
    println!("cocycle: {}", check_cocycle(&ug, &f)?.holds);
    let q = QuantizedHopf::new(&ug, f, false)?;
    println!("R   = {}", ug.display_tensor(q.r()));
    println!("u   = {}", ug.display(q.u()));
    println!("S_F(psi) = {}", ug.display(&q.twisted_antipode(&ug.generator(0))?));
    for r in q.verify_quasitriangular()? {
        let verdict = if r.comparison.holds { "pass" } else { "FAIL" };
        println!("{verdict}  {}", r.label);
    }
    Ok(())
}
