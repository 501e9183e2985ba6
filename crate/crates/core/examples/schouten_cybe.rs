//! Schouten brackets of classical r-matrices and the coboundary cobracket.

use supertwist::liesuper::{check_cybe, coboundary_cobracket, schouten_bracket, validate_cobracket};
use supertwist::liesuper::{LieSuperalgebra, RMatrix};
use supertwist::scalar::int;
use supertwist::ug::Ug;

fn r_of(alg: &LieSuperalgebra, a: &str, b: &str) -> supertwist::Result<RMatrix> {
    Ok(RMatrix::new([((alg.index_of(a)?, alg.index_of(b)?), int(1))]))
}

fn main() -> supertwist::Result<()> {
    let psi = Ug::new(LieSuperalgebra::odd_abelian(&["psi"]), 4);
    let r = r_of(psi.algebra(), "psi", "psi")?;
    println!("[[psi⊗psi, psi⊗psi]] = 0: {}", check_cybe(&psi, &r)?.holds);

    let gl = Ug::new(LieSuperalgebra::gl(1, 1), 4);
    let r = r_of(gl.algebra(), "E12", "E21")?;
    println!("[[E12⊗E21, E12⊗E21]] = {}", gl.display_tensor(&schouten_bracket(&gl, &r)?));
    let delta = coboundary_cobracket(gl.algebra(), &r)?;
    let report = validate_cobracket(gl.algebra(), &delta);
    println!("δ = dr is a cobracket: {}", report.is_valid());
    if let Some(v) = report.first() {
        println!("  first violation: {v}");
    }
    Ok(())
}
