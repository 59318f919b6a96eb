use std::fmt::{self, Debug, Display};
use std::ops::{Add, Mul, Neg};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, One, Zero};
use serde::de::{self, Deserializer, SeqAccess, Visitor};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use super::{HeckeRing, Ring};

/// Integer scalars usable as polynomial coefficients.
///
/// Arithmetic goes through the checked operations, so a fixed-width scalar
/// fails loudly on overflow instead of wrapping.
pub trait IntScalar:
    Clone
    + PartialEq
    + Eq
    + Debug
    + Display
    + FromStr
    + Zero
    + One
    + CheckedAdd
    + CheckedSub
    + CheckedMul
    + Neg<Output = Self>
    + Send
    + Sync
{
}

impl<T> IntScalar for T where
    T: Clone
        + PartialEq
        + Eq
        + Debug
        + Display
        + FromStr
        + Zero
        + One
        + CheckedAdd
        + CheckedSub
        + CheckedMul
        + Neg<Output = T>
        + Send
        + Sync
{
}

/// A dense polynomial in `q`, coefficients in ascending degree.
///
/// Canonical form: no trailing zero coefficients, so zero is the empty list.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

fn checked<T>(v: Option<T>) -> T {
    v.expect("polynomial coefficient overflow")
}

impl<T: IntScalar> Poly<T> {
    /// Builds a polynomial from ascending coefficients, trimming trailing zeros.
    pub fn new(coeffs: Vec<T>) -> Self {
        let mut p = Self { coeffs };
        p.normalize();
        p
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Horner evaluation at `q = v`.
    pub fn eval_at(&self, v: &T) -> T {
        self.coeffs.iter().rev().fold(T::zero(), |acc, c| {
            checked(checked(acc.checked_mul(v)).checked_add(c))
        })
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    fn add_impl(&self, rhs: &Self) -> Self {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (&self.coeffs, &rhs.coeffs)
        } else {
            (&rhs.coeffs, &self.coeffs)
        };
        let mut out = long.clone();
        for (o, s) in out.iter_mut().zip(short) {
            *o = checked(o.checked_add(s));
        }
        Self::new(out)
    }

    fn mul_impl(&self, rhs: &Self) -> Self {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return Self::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let prod = checked(a.checked_mul(b));
                out[i + j] = checked(out[i + j].checked_add(&prod));
            }
        }
        Self::new(out)
    }
}

impl<T: IntScalar> Zero for Poly<T> {
    fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<T: IntScalar> One for Poly<T> {
    fn one() -> Self {
        Self {
            coeffs: vec![T::one()],
        }
    }
}

impl<T: IntScalar> Add for Poly<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.add_impl(&rhs)
    }
}

impl<'a, T: IntScalar> Add<&'a Poly<T>> for &'a Poly<T> {
    type Output = Poly<T>;
    fn add(self, rhs: &'a Poly<T>) -> Poly<T> {
        self.add_impl(rhs)
    }
}

impl<T: IntScalar> Mul for Poly<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.mul_impl(&rhs)
    }
}

impl<'a, T: IntScalar> Mul<&'a Poly<T>> for &'a Poly<T> {
    type Output = Poly<T>;
    fn mul(self, rhs: &'a Poly<T>) -> Poly<T> {
        self.mul_impl(rhs)
    }
}

impl<T: IntScalar> Neg for Poly<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Self {
            coeffs: self.coeffs.into_iter().map(Neg::neg).collect(),
        }
    }
}

impl<T: IntScalar> Ring for Poly<T> {
    fn add_ref(&self, rhs: &Self) -> Self {
        self.add_impl(rhs)
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        self.mul_impl(rhs)
    }
}

impl<T: IntScalar> HeckeRing for Poly<T> {
    fn q() -> Self {
        Self {
            coeffs: vec![T::zero(), T::one()],
        }
    }

    fn q_minus_one() -> Self {
        Self {
            coeffs: vec![-T::one(), T::one()],
        }
    }
}

impl<T: IntScalar> Debug for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.coeffs).finish()
    }
}

/// Human form, highest power first: `q^2 - 1`, `-3q + 2`, `0`.
impl<T: IntScalar> Display for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (deg, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let text = c.to_string();
            let (negative, magnitude) = match text.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, text),
            };
            if first {
                if negative {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if negative { " - " } else { " + " })?;
            }
            first = false;
            let unit = magnitude == "1";
            match deg {
                0 => f.write_str(&magnitude)?,
                _ => {
                    if !unit {
                        f.write_str(&magnitude)?;
                    }
                    f.write_str("q")?;
                    if deg > 1 {
                        write!(f, "^{deg}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Parses the ascending coefficient list form, e.g. `[-1,1]` for `q - 1`.
impl<T: IntScalar> FromStr for Poly<T> {
    type Err = crate::Error;

    fn from_str(s: &str) -> crate::Result<Self> {
        Ok(serde_json::from_str(s)?)
    }
}

// Coefficients travel as JSON numbers of arbitrary size, via their decimal
// rendering.
impl<T: IntScalar> Serialize for Poly<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            let n =
                serde_json::Number::from_str(&c.to_string()).map_err(serde::ser::Error::custom)?;
            seq.serialize_element(&n)?;
        }
        seq.end()
    }
}

impl<'de, T: IntScalar> Deserialize<'de> for Poly<T> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct PolyVisitor<T>(std::marker::PhantomData<T>);

        impl<'de, T: IntScalar> Visitor<'de> for PolyVisitor<T> {
            type Value = Poly<T>;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a list of integer coefficients")
            }

            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<Poly<T>, A::Error> {
                let mut coeffs = Vec::new();
                while let Some(n) = seq.next_element::<serde_json::Number>()? {
                    let text = n.to_string();
                    let c = text
                        .parse::<T>()
                        .map_err(|_| de::Error::custom(format!("not an integer: {text}")))?;
                    coeffs.push(c);
                }
                Ok(Poly::new(coeffs))
            }
        }

        deserializer.deserialize_seq(PolyVisitor(std::marker::PhantomData))
    }
}

impl Poly<BigInt> {
    /// Convenience constructor from small integers.
    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::RingCtx;
    use crate::PolyZ;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> PolyZ {
        PolyZ::from_i64s(c)
    }

    #[test]
    fn ring_add_examples() {
        let ctx = RingCtx::counting();
        assert_eq!(ctx.add(&p(&[]), &p(&[])), p(&[]));
        assert_eq!(ctx.add(&p(&[-1, 1]), &p(&[1])), PolyZ::q());
        let r = ctx.add(&p(&[1, 0, 3]), &p(&[0, 0, -3]));
        assert_eq!(r, PolyZ::one());
        assert_eq!(r.coeffs().len(), 1);
        assert_eq!(ctx.counts().adds, 3);
        assert_eq!(ctx.counts().muls, 0);
    }

    #[test]
    fn ring_mul_examples() {
        let ctx = RingCtx::counting();
        assert_eq!(ctx.mul(&PolyZ::q(), &PolyZ::q()), p(&[0, 0, 1]));
        let x = p(&[4, -2, 7]);
        assert_eq!(ctx.mul(&x, &PolyZ::one()), x);
        assert_eq!(ctx.mul(&p(&[-1, 1]), &p(&[1, 1])), p(&[-1, 0, 1]));
        assert_eq!(ctx.mul(&x, &PolyZ::zero()), PolyZ::zero());
        assert_eq!(ctx.counts().muls, 4);
    }

    #[test]
    fn constants() {
        assert_eq!(PolyZ::q().coeffs(), p(&[0, 1]).coeffs());
        assert_eq!(PolyZ::q_minus_one(), p(&[-1, 1]));
        assert!(PolyZ::zero().coeffs().is_empty());
        assert_eq!(PolyZ::one(), p(&[1]));
    }

    #[test]
    fn eval_examples() {
        let b = BigInt::from;
        assert_eq!(p(&[-1, 0, 1]).eval_at(&b(1)), b(0));
        assert_eq!(PolyZ::q().eval_at(&b(5)), b(5));
        assert_eq!(p(&[3, 2]).eval_at(&b(0)), b(3));
        assert_eq!(PolyZ::zero().eval_at(&b(7)), b(0));
    }

    #[test]
    fn display() {
        assert_eq!(p(&[-1, 0, 1]).to_string(), "q^2 - 1");
        assert_eq!(p(&[2, -3]).to_string(), "-3q + 2");
        assert_eq!(p(&[0, 1]).to_string(), "q");
        assert_eq!(p(&[]).to_string(), "0");
        assert_eq!(p(&[-1]).to_string(), "-1");
        assert_eq!(p(&[0, -1, 5]).to_string(), "5q^2 - q");
    }

    #[test]
    fn json_text_form() {
        let x: PolyZ = "[-1,1]".parse().unwrap();
        assert_eq!(x, PolyZ::q_minus_one());
        assert_eq!(serde_json::to_string(&x).unwrap(), "[-1,1]");
        let big: PolyZ = "[123456789012345678901234567890, 0, 0]".parse().unwrap();
        assert_eq!(big.degree(), Some(0));
        assert_eq!(
            serde_json::to_string(&big).unwrap(),
            "[123456789012345678901234567890]"
        );
        assert!("[1.5]".parse::<PolyZ>().is_err());
        assert!("q+1".parse::<PolyZ>().is_err());
    }

    #[test]
    #[should_panic(expected = "overflow")]
    fn fixed_width_overflow_is_fatal() {
        let x = Poly::<i8>::new(vec![100]);
        let _ = x.mul_ref(&x);
    }

    fn poly_strategy() -> impl Strategy<Value = PolyZ> {
        prop::collection::vec(-20i64..=20, 0..5).prop_map(|c| PolyZ::from_i64s(&c))
    }

    #[test]
    fn ring_axioms_exhaustive_small_grid() {
        // Every polynomial of degree <= 1 with coefficients in -1..=1.
        let mut grid = Vec::new();
        for a in -1..=1 {
            for b in -1..=1 {
                grid.push(p(&[a, b]));
            }
        }
        for x in &grid {
            for y in &grid {
                assert_eq!(x + y, y + x);
                assert_eq!(x * y, y * x);
                for z in &grid {
                    assert_eq!(&(x + y) + z, x + &(y + z));
                    assert_eq!(&(x * y) * z, x * &(y * z));
                    assert_eq!(x * &(y + z), &(x * y) + &(x * z));
                }
            }
        }
    }

    proptest! {
        #[test]
        fn ring_axioms(a in poly_strategy(), b in poly_strategy(), c in poly_strategy()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &(-a.clone()), PolyZ::zero());
        }

        #[test]
        fn outputs_are_canonical(a in poly_strategy(), b in poly_strategy()) {
            for r in [&a + &b, &a * &b, a.clone() + (-b.clone())] {
                prop_assert!(r.coeffs().last().is_none_or(|c| !c.is_zero()));
            }
        }

        #[test]
        fn eval_is_a_ring_homomorphism(a in poly_strategy(), b in poly_strategy(), v in -5i64..=5) {
            let v = BigInt::from(v);
            prop_assert_eq!((&a + &b).eval_at(&v), a.eval_at(&v) + b.eval_at(&v));
            prop_assert_eq!((&a * &b).eval_at(&v), a.eval_at(&v) * b.eval_at(&v));
        }

        #[test]
        fn text_roundtrip(a in poly_strategy()) {
            let s = serde_json::to_string(&a).unwrap();
            prop_assert_eq!(s.parse::<PolyZ>().unwrap(), a);
        }

        /// Counting soundness: a random expression tree evaluated through a
        /// counting context reads exactly its number of add and mul nodes.
        #[test]
        fn counting_matches_expression_tree(
            leaves in prop::collection::vec(poly_strategy(), 1..12),
            ops in prop::collection::vec(any::<bool>(), 0..11),
        ) {
            let ctx = RingCtx::counting();
            let mut stack = leaves.clone();
            let (mut adds, mut muls) = (0u64, 0u64);
            for is_mul in ops.iter().take(leaves.len() - 1) {
                let b = stack.pop().unwrap();
                let a = stack.pop().unwrap();
                stack.push(if *is_mul { muls += 1; ctx.mul(&a, &b) } else { adds += 1; ctx.add(&a, &b) });
            }
            prop_assert_eq!(ctx.counts().adds, adds);
            prop_assert_eq!(ctx.counts().muls, muls);
        }
    }
}
