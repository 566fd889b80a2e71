//! Exact K-theory engine for rotation algebra crossed products.
//!
//! The crate mechanically re-derives, in exact integer and cyclotomic
//! arithmetic, the K-groups of crossed products of the rotation algebra
//! by free and amalgamated products of the cyclic groups Z2, Z3, Z4, Z6,
//! together with the kernel/image/direct-summand structure of the
//! induced K0-maps between the cyclic crossed products.
//!
//! Modules:
//! - [`scalar`]: rationals, Q(zeta_12), theta-linear scalars, formal traces
//! - [`lattice`]: HNF/SNF, kernels, integral solving, summand tests
//! - [`rotation`]: rotation-algebra monomials, automorphisms, functionals
//! - [`ktables`]: the xi/eta/mu/lambda character basis tables and JSON I/O
//! - [`sequences`]: induced K0-maps and the six-term rank solver
//! - [`verify`]: the claim-checking engine behind the `rotk` CLI

pub mod ktables;
pub mod lattice;
pub mod oracle;
pub mod rotation;
pub mod scalar;
pub mod sequences;
pub mod verify;
