//! PBW normal forms, products and the undeformed Hopf maps in U(gl(1|1)).

use supertwist::liesuper::LieSuperalgebra;
use supertwist::ug::Ug;

fn main() -> supertwist::Result<()> {
    let ug = Ug::new(LieSuperalgebra::gl(1, 1), 4);
    for word in ["E21*E12", "E12*E12", "E12*E11", "E21*E12*E21"] {
        let x = ug.parse(word)?;
        println!("{word:>12} = {}", ug.display(&x));
    }
    let x = ug.parse("E11*E12")?;
    println!("Δ0(E11 E12) = {}", ug.display_tensor(&ug.coproduct0(&x)));
    println!("S0(E11 E12) = {}", ug.display(&ug.antipode0(&x)?));
    println!("monomials of degree <= 2: {}", ug.pbw_basis(2).len());
    Ok(())
}
