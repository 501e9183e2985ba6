//! Gauge transform of 1 + h psi⊗psi on {H, psi} by E = 1 + h H.

use supertwist::liesuper::LieSuperalgebra;
use supertwist::scalar::{int, HSeries};
use supertwist::twist::{check_hat_twist, gauge_relations, Twist};
use supertwist::ug::Ug;

fn main() -> supertwist::Result<()> {
    let ug = Ug::new(LieSuperalgebra::h_psi(), 4);
    let f = Twist::from_words(&ug, &[(1, "psi", "psi", int(1))])?;
    let e = ug.one().add(&ug.generator(0).scale_series(&HSeries::monomial(ug.order(), 1, int(1))));
    let g = gauge_relations(&ug, &f, &e, false)?;
    println!("F' = {}", ug.display_tensor(g.gauged.element()));
    println!("F' is a twist: {}", g.cocycle.holds);
    println!("Δ_F' conjugate to Δ_F: {}", g.coproduct.holds);
    println!("R_F' = (E^-1⊗E^-1) R_F (E⊗E): {}", g.r_matrix.holds);
    println!("S_F' = E^-1 S_F(E · E^-1) E: {}", g.antipode.holds);
    let hat = check_hat_twist(&ug, &f, &g.gauged, false)?;
    println!("G = F^-1 F' = {}", ug.display_tensor(&hat.hat));
    println!("Δ_F' = G^-1 Δ_F G: {}", hat.coproduct.holds);
    println!("R_F' = G21^-1 R_F G: {}", hat.r_matrix.holds);
    Ok(())
}
