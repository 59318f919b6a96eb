//! JSON forms of Hecke algebra elements.
//!
//! Simple: `{"repr":"simple","m":3,"coeffs":[{"rank":r,"poly":[..]},..]}`
//! listing nonzero coefficients by ascending tower rank.
//!
//! Nested: `{"repr":"nested","m":2,"tree":[[p00,p01],[p10,p11],[p20,p21]]}`
//! where each `p` is an ascending coefficient list and the outermost array
//! holds the children `h_0, ..., h_m`.

use num_traits::Zero;
use serde_json::{json, Value};

use crate::coeff::{IntScalar, Poly};
use crate::error::{Error, Result};
use crate::nested::NestedElement;
use crate::simple::SimpleElement;
use crate::tower::factorial;

/// Largest rank accepted from external input.
pub const MAX_INPUT_RANK: usize = 8;

/// An element in either representation, as read from JSON.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HeckeElement<T: IntScalar> {
    Simple(SimpleElement<Poly<T>>),
    Nested(NestedElement<Poly<T>>),
}

impl<T: IntScalar> HeckeElement<T> {
    pub fn m(&self) -> usize {
        match self {
            Self::Simple(h) => h.m(),
            Self::Nested(h) => h.m(),
        }
    }

    pub fn to_simple(&self) -> SimpleElement<Poly<T>> {
        match self {
            Self::Simple(h) => h.clone(),
            Self::Nested(h) => h.to_simple(),
        }
    }

    pub fn to_nested(&self) -> NestedElement<Poly<T>> {
        match self {
            Self::Simple(h) => NestedElement::from_simple(h),
            Self::Nested(h) => h.clone(),
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            Self::Simple(h) => simple_to_json(h),
            Self::Nested(h) => nested_to_json(h),
        }
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        match v.get("repr").and_then(Value::as_str) {
            Some("simple") => Ok(Self::Simple(simple_from_json(v)?)),
            Some("nested") => Ok(Self::Nested(nested_from_json(v)?)),
            Some(other) => Err(Error::Json(format!("unknown repr {other:?}"))),
            None => Err(Error::Json("missing \"repr\" field".into())),
        }
    }
}

impl<T: IntScalar> std::str::FromStr for HeckeElement<T> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::from_json(&serde_json::from_str(s)?)
    }
}

fn read_rank(v: &Value) -> Result<usize> {
    let m = v
        .get("m")
        .and_then(Value::as_u64)
        .ok_or_else(|| Error::Json("missing or invalid \"m\"".into()))? as usize;
    if m > MAX_INPUT_RANK {
        return Err(Error::Json(format!(
            "rank {m} exceeds the supported maximum {MAX_INPUT_RANK}"
        )));
    }
    Ok(m)
}

fn read_poly<T: IntScalar>(v: &Value) -> Result<Poly<T>> {
    Ok(serde_json::from_value(v.clone())?)
}

pub fn simple_to_json<T: IntScalar>(h: &SimpleElement<Poly<T>>) -> Value {
    let coeffs: Vec<Value> = h
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(r, c)| json!({"rank": r, "poly": c}))
        .collect();
    json!({"repr": "simple", "m": h.m(), "coeffs": coeffs})
}

pub fn simple_from_json<T: IntScalar>(v: &Value) -> Result<SimpleElement<Poly<T>>> {
    let m = read_rank(v)?;
    let entries = v
        .get("coeffs")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Json("missing \"coeffs\" array".into()))?;
    let order = factorial(m + 1);
    let mut coeffs = vec![Poly::zero(); order];
    let mut seen = vec![false; order];
    for e in entries {
        let r = e
            .get("rank")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::Json(format!("entry without rank: {e}")))?
            as usize;
        if r >= order {
            return Err(Error::Json(format!("rank {r} outside 0..{order}")));
        }
        if std::mem::replace(&mut seen[r], true) {
            return Err(Error::Json(format!("rank {r} listed twice")));
        }
        let poly = e
            .get("poly")
            .ok_or_else(|| Error::Json(format!("entry without poly: {e}")))?;
        coeffs[r] = read_poly(poly)?;
    }
    SimpleElement::from_coeffs(m, coeffs)
}

pub fn nested_to_json<T: IntScalar>(h: &NestedElement<Poly<T>>) -> Value {
    json!({"repr": "nested", "m": h.m(), "tree": tree_value(h.leaves(), h.m())})
}

fn tree_value<T: IntScalar>(leaves: &[Poly<T>], m: usize) -> Value {
    if m == 0 {
        return serde_json::to_value(&leaves[0]).expect("polynomials serialize");
    }
    let block = factorial(m);
    Value::Array(leaves.chunks(block).map(|c| tree_value(c, m - 1)).collect())
}

pub fn nested_from_json<T: IntScalar>(v: &Value) -> Result<NestedElement<Poly<T>>> {
    let m = read_rank(v)?;
    let tree = v
        .get("tree")
        .ok_or_else(|| Error::Json("missing \"tree\"".into()))?;
    let mut leaves = Vec::with_capacity(factorial(m + 1));
    read_tree(tree, m, &mut leaves)?;
    NestedElement::from_leaves(m, leaves)
}

fn read_tree<T: IntScalar>(v: &Value, m: usize, out: &mut Vec<Poly<T>>) -> Result<()> {
    if m == 0 {
        out.push(read_poly(v)?);
        return Ok(());
    }
    let children = v
        .as_array()
        .ok_or_else(|| Error::Json(format!("expected {} children at rank {m}", m + 1)))?;
    if children.len() != m + 1 {
        return Err(Error::Json(format!(
            "rank {m} node has {} children, expected {}",
            children.len(),
            m + 1
        )));
    }
    children.iter().try_for_each(|c| read_tree(c, m - 1, out))
}
