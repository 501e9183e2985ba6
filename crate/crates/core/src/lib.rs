//! Exact symbolic kernel for twist quantization of Lie superalgebras.
//!
//! Everything is computed over the rationals in `U(g)[[h]]`, truncated at a
//! fixed order in `h`. The layers build on one another:
//!
//! - [`scalar`]: rationals and truncated `h`-series.
//! - [`liesuper`]: finite-dimensional Lie superalgebras, classical r-matrices
//!   and cobrackets.
//! - [`ug`]: the universal enveloping algebra in PBW normal form.
//! - [`tensor`]: tensor powers of `U(g)` with Koszul signs.
//! - [`twist`]: twists, the quantized Hopf structure and gauge equivalence.
//! - [`rep`]: graded matrix representations and the matrix Yang-Baxter and
//!   braid relations.
//! - [`cli`]: spec files, check orchestration and reports.
//!
//! ```
//! use supertwist::liesuper::LieSuperalgebra;
//! use supertwist::scalar::int;
//! use supertwist::twist::{QuantizedHopf, Twist};
//! use supertwist::ug::Ug;
//!
//! let ug = Ug::new(LieSuperalgebra::odd_abelian(&["psi"]), 4);
//! let f = Twist::from_words(&ug, &[(1, "psi", "psi", int(1))])?;
//! let q = QuantizedHopf::new(&ug, f, false)?;
//! assert_eq!(ug.display_tensor(q.r()).to_string(), "(1) 1⊗1 + (2h) psi⊗psi");
//! for r in q.verify_quasitriangular()? {
//!     assert!(r.comparison.holds, "{}", r.label);
//! }
//! # Ok::<(), supertwist::Error>(())
//! ```

pub mod cli;
pub mod error;
pub mod identity;
pub mod liesuper;
pub mod rep;
pub mod scalar;
pub mod tensor;
pub mod twist;
pub mod ug;
pub mod validation;

pub use error::{Error, Result};
