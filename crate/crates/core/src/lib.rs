//! Tower normal forms for the symmetric group `W(A_m) = Sym_{m+1}` and two
//! representations of its Iwahori-Hecke algebra `H(A_m)`: dense coefficient
//! vectors indexed by the group ([`SimpleElement`]) and nested coefficient
//! lists over the parabolic chain ([`NestedElement`]).
//!
//! The algebra code is generic over the coefficient ring ([`HeckeRing`]).
//! The aliases at the crate root fix the exact default, polynomials in `q`
//! over arbitrary precision integers.

pub mod bench;
pub mod coeff;
pub mod error;
pub mod json;
pub mod nested;
pub mod perm;
pub mod simple;
pub mod tower;
pub mod verify;

pub use coeff::{HeckeRing, IntScalar, OpCounter, OpCounts, Poly, Ring, RingCtx};
pub use error::{Error, Result};
pub use json::HeckeElement;
pub use nested::{basis_times_coset, CosetTerm, NestedElement};
pub use perm::Permutation;
pub use simple::{GeneratorTables, SimpleElement};
pub use tower::{factorial, mu, CosetRep, MuBranch, MuResult, ReducedWord, Tower};

/// `Z[q]` with exact integer coefficients.
pub type PolyZ = Poly<num_bigint::BigInt>;
/// `Z[q]` over `i64`; arithmetic panics on overflow.
pub type PolyI64 = Poly<i64>;
/// `H(A_m)` over [`PolyZ`] as a dense coefficient vector.
pub type SimpleZ = SimpleElement<PolyZ>;
/// `H(A_m)` over [`PolyZ`] as a nested coefficient list.
pub type NestedZ = NestedElement<PolyZ>;
/// An element over [`PolyZ`] in either representation.
pub type HeckeZ = HeckeElement<num_bigint::BigInt>;
