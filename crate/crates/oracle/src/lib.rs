//! Brute-force cohomology oracle: explicit modules, the cochain complex and
//! exact ranks, named cocycles and an enveloping-algebra witness.
//!
//! All arithmetic is over arbitrary precision rationals.

pub mod cocycles;
pub mod complex;
pub mod highest;
pub mod kac;
pub mod module;
pub mod pbw;
pub mod rank;

use num_bigint::BigInt;
use num_rational::BigRational;
use supercoh_core::Rat;
pub use cocycles::{
    build_named_cocycle, verify_cocycle, CocycleKind, CocycleReport, NamedCocycle,
};
pub use complex::{
    cochain_complex, cohomology_dims, contraction_and_theta, differential, Cochain, CochainComplex,
    ComplexOptions,
};
pub use highest::{build_g0_irreducible, build_irreducible_direct, weyl_dimension};
pub use kac::{build_irreducible, build_kac_module};
pub use module::{multiplicity_of_g0_hw, SuperModule};
pub use pbw::{pbw_ad_witness, PbwElement, PbwWitness};

/// Exact scalar used throughout the oracle.
pub type Q = BigRational;

pub fn q(r: Rat) -> Q {
    Q::new(BigInt::from(*r.numer()), BigInt::from(*r.denom()))
}

pub fn qi(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// `(-1)^k` for a parity flag.
pub(crate) fn sign(odd: bool) -> i64 {
    if odd {
        -1
    } else {
        1
    }
}
