//! Numerical geometric algebra for spacetime, conformal space and twistors.
//!
//! The crate provides a dense Clifford-algebra kernel for any signature
//! (p,q) with p+q ≤ 6, the spacetime algebra Cl(1,3) with its spinor
//! machinery, 1-valence twistors realised as translated 4-d spinors, the
//! conformal algebra Cl(2,4) with its rotor group, the induced spinor
//! representation of the restricted conformal group, and the geometry of
//! the Robinson congruence. Every identity the construction rests on is
//! checked numerically in the test suite; `verify`-style sweeps are also
//! reachable from the companion command-line tool.
//!
//! Units follow the relativistic convention c = 1, ħ = 1 throughout.

pub mod algebra;
pub mod book;
pub mod conformal;
pub mod congruence;
pub mod error;
pub mod matrix_rep;
pub mod spinor_rep;
pub mod sta;
pub mod twistor;

pub use algebra::{Multivector, Rotor, Signature, DEFAULT_TOL};
pub use error::{Error, Result};
