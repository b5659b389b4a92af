//! The guide's chapters, attached as documentation so that
//! `cargo test --doc` compiles and runs every code block in the book.
//! mdbook itself cannot run snippets against the crate; this keeps the
//! prose and the library from drifting apart.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/geometric-algebra.md")]
pub mod geometric_algebra {}

#[doc = include_str!("../../../book/src/spacetime-spinors.md")]
pub mod spacetime_spinors {}

#[doc = include_str!("../../../book/src/twistors.md")]
pub mod twistors {}

#[doc = include_str!("../../../book/src/conformal-space.md")]
pub mod conformal_space {}

#[doc = include_str!("../../../book/src/spinor-representation.md")]
pub mod spinor_representation {}

#[doc = include_str!("../../../book/src/robinson-congruence.md")]
pub mod robinson_congruence {}

#[doc = include_str!("../../../book/src/command-line.md")]
pub mod command_line {}
