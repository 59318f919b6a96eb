//! The coefficient ring of the Hecke algebra and the instrumentation used to
//! count ring operations.
//!
//! Everything above this module is generic over [`HeckeRing`]: a commutative
//! ring with one together with a distinguished parameter `q`. The concrete
//! ring used throughout is [`Poly`], dense polynomials in `q` over an integer
//! scalar (`BigInt` for the exact default, checked machine integers otherwise).

mod counter;
mod poly;

pub use counter::{OpCounter, OpCounts, RingCtx};
pub use poly::{IntScalar, Poly};

use std::fmt::Debug;

use num_traits::{One, Zero};

/// A commutative ring with one.
///
/// `add_ref`/`mul_ref` exist so that the algorithms can combine borrowed
/// coefficients without cloning both operands first.
pub trait Ring: Clone + PartialEq + Debug + Zero + One {
    fn add_ref(&self, rhs: &Self) -> Self {
        self.clone() + rhs.clone()
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        self.clone() * rhs.clone()
    }
}

/// A coefficient ring for the Hecke algebra: a [`Ring`] with the parameter `q`.
pub trait HeckeRing: Ring {
    fn q() -> Self;

    /// The element `q - 1`, the other constant of the quadratic relation.
    fn q_minus_one() -> Self;
}
