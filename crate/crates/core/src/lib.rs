//! Arithmetic of `F_q[t]` for Fermat quotients, Wieferich and Wilson
//! primes, and the Carlitz quantities `[n]`, `L_n`, `D_n`, `F_d`.

pub mod carlitz;
pub mod congruence;
pub mod deriv;
pub mod error;
pub mod factor;
pub mod gf;
pub mod irr;
pub mod poly;
pub mod survey;

pub use error::{Error, Result};
pub use factor::Factorization;
pub use gf::{Field, FieldElement};
pub use irr::PrimeContext;
pub use poly::{Degree, Poly};
