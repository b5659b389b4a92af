//! Dense real Clifford-algebra kernel for signatures (p,q) with p+q ≤ 6.

mod multivector;
mod rotor;
mod signature;

pub use multivector::{Multivector, DEFAULT_TOL};
pub use rotor::Rotor;
pub use signature::{Signature, MAX_DIM};

