//! Elements of `H(A_m)` as dense coefficient vectors over the group.
//!
//! Entry `r` holds the coefficient of `T_w` where `w` has tower rank `r`.
//! Multiplication reduces to right multiplication by generators `T_s`,
//! applied along a reduced word of each basis element of the right factor.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::coeff::{HeckeRing, RingCtx};
use crate::error::{Error, Result};
use crate::tower::{factorial, Tower};

/// Per-generator lookup tables for `W(A_m)`, indexed by tower rank.
///
/// Building them uses the tower arithmetic and is not counted as ring work.
#[derive(Debug)]
pub struct GeneratorTables {
    m: usize,
    // partner[i - 1][r] = rank of w s_i
    partner: Vec<Vec<usize>>,
    // descent[i - 1][r] = l(w s_i) < l(w)
    descent: Vec<Vec<bool>>,
}

impl GeneratorTables {
    pub fn build(m: usize) -> Self {
        let order = factorial(m + 1);
        let elements: Vec<Tower> = Tower::all(m).collect();
        let mut partner = Vec::with_capacity(m);
        let mut descent = Vec::with_capacity(m);
        for i in 1..=m {
            let mut p = Vec::with_capacity(order);
            let mut d = Vec::with_capacity(order);
            for w in &elements {
                let ws = w
                    .star_coset(i, 1)
                    .expect("s_i is a valid coset representative");
                p.push(ws.rank());
                d.push(ws.length() < w.length());
            }
            partner.push(p);
            descent.push(d);
        }
        Self {
            m,
            partner,
            descent,
        }
    }

    /// Shared tables for rank `m`, built on first use.
    pub fn for_rank(m: usize) -> Arc<Self> {
        static CACHE: OnceLock<Mutex<HashMap<usize, Arc<GeneratorTables>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        let mut guard = cache.lock().unwrap_or_else(|e| e.into_inner());
        guard
            .entry(m)
            .or_insert_with(|| Arc::new(Self::build(m)))
            .clone()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Rank of `w s_i` for `w` of rank `r`.
    pub fn partner(&self, i: usize, r: usize) -> usize {
        self.partner[i - 1][r]
    }

    pub fn is_descent(&self, i: usize, r: usize) -> bool {
        self.descent[i - 1][r]
    }
}

/// A dense coefficient list `(z_w)` of length `(m+1)!`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleElement<R> {
    m: usize,
    coeffs: Vec<R>,
}

impl<R: HeckeRing> SimpleElement<R> {
    pub fn zero(m: usize) -> Self {
        Self {
            m,
            coeffs: vec![R::zero(); factorial(m + 1)],
        }
    }

    /// The unit `T_1`.
    pub fn unit(m: usize) -> Self {
        let mut e = Self::zero(m);
        e.coeffs[0] = R::one();
        e
    }

    /// The basis element `T_w`.
    pub fn basis(m: usize, w: &Tower) -> Result<Self> {
        check_fits(m, w)?;
        let mut e = Self::zero(m);
        e.coeffs[w.rank()] = R::one();
        Ok(e)
    }

    /// The generator `T_{s_i}`.
    pub fn generator(m: usize, i: usize) -> Result<Self> {
        if i == 0 || i > m {
            return Err(Error::ArgumentRange(format!(
                "s_{i} is not a generator of W(A_{m})"
            )));
        }
        let mut digits = vec![0; i];
        digits[i - 1] = 1;
        Self::basis(m, &Tower::new(digits)?)
    }

    pub fn from_coeffs(m: usize, coeffs: Vec<R>) -> Result<Self> {
        let expected = factorial(m + 1);
        if coeffs.len() != expected {
            return Err(Error::ArgumentRange(format!(
                "H(A_{m}) needs {expected} coefficients, got {}",
                coeffs.len()
            )));
        }
        Ok(Self { m, coeffs })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// The dimension `M = (m+1)!`.
    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    /// Coefficient of `T_w`; zero when `w` lies outside `W(A_m)`.
    pub fn coeff(&self, w: &Tower) -> R {
        if w.min_rank() > self.m {
            return R::zero();
        }
        self.coeffs[w.rank()].clone()
    }

    /// The same element viewed in `H(A_n)` for `n >= m`.
    pub fn embed(&self, n: usize) -> Result<Self> {
        if n < self.m {
            return Err(Error::RankMismatch {
                left: n,
                right: self.m,
            });
        }
        // ranks are stable under the embedding
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(factorial(n + 1), R::zero());
        Ok(Self { m: n, coeffs })
    }

    /// Entrywise sum: exactly `M` ring additions.
    pub fn add(&self, other: &Self, ctx: &RingCtx) -> Result<Self> {
        if self.m != other.m {
            return Err(Error::RankMismatch {
                left: self.m,
                right: other.m,
            });
        }
        Ok(Self {
            m: self.m,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| ctx.add(a, b))
                .collect(),
        })
    }

    /// `b (z_w)`: exactly `M` ring multiplications, even for `b = 1`.
    pub fn scale(&self, b: &R, ctx: &RingCtx) -> Self {
        Self {
            m: self.m,
            coeffs: self.coeffs.iter().map(|z| ctx.mul(b, z)).collect(),
        }
    }

    /// `h T_{s_i}`.
    pub fn star_generator(&self, i: usize, ctx: &RingCtx) -> Result<Self> {
        if i == 0 || i > self.m {
            return Err(Error::ArgumentRange(format!(
                "s_{i} is not a generator of W(A_{})",
                self.m
            )));
        }
        let tables = GeneratorTables::for_rank(self.m);
        Ok(self.star_generator_with(&tables, i, ctx))
    }

    fn star_generator_with(&self, tables: &GeneratorTables, i: usize, ctx: &RingCtx) -> Self {
        let q = R::q();
        let q1 = R::q_minus_one();
        let z = &self.coeffs;
        let coeffs = (0..z.len())
            .map(|r| {
                let ws = tables.partner(i, r);
                if tables.is_descent(i, r) {
                    // z'_w = z_{ws} + (q-1) z_w
                    ctx.add(&z[ws], &ctx.mul(&q1, &z[r]))
                } else {
                    // z'_w = q z_{ws}
                    ctx.mul(&q, &z[ws])
                }
            })
            .collect();
        Self { m: self.m, coeffs }
    }

    /// `h T_v`, one generator at a time along the reduced word of `v`.
    pub fn star_basis(&self, v: &Tower, ctx: &RingCtx) -> Result<Self> {
        check_fits(self.m, v)?;
        let tables = GeneratorTables::for_rank(self.m);
        Ok(self.star_basis_with(&tables, v, ctx))
    }

    fn star_basis_with(&self, tables: &GeneratorTables, v: &Tower, ctx: &RingCtx) -> Self {
        let mut letters = v.reduced_word().letters().to_vec().into_iter();
        let Some(first) = letters.next() else {
            return self.clone();
        };
        let mut acc = self.star_generator_with(tables, first, ctx);
        for i in letters {
            acc = acc.star_generator_with(tables, i, ctx);
        }
        acc
    }

    /// `h g = sum_v b_v (h T_v)` over the basis of `g`, in ascending rank.
    ///
    /// `g` may come from a smaller algebra `H(A_j)`, `j <= m`; it is then
    /// read through the embedding `H(A_j) < H(A_m)`. Zero coefficients of
    /// `g` are not skipped, so the operation count is the dense worst case.
    pub fn multiply(&self, g: &Self, ctx: &RingCtx) -> Result<Self> {
        if g.m > self.m {
            return Err(Error::RankMismatch {
                left: self.m,
                right: g.m,
            });
        }
        let tables = GeneratorTables::for_rank(self.m);
        let mut acc: Option<Self> = None;
        for (r, b) in g.coeffs.iter().enumerate() {
            let v = Tower::unrank_unchecked(r, g.m);
            let term = self.star_basis_with(&tables, &v, ctx).scale(b, ctx);
            acc = Some(match acc {
                None => term,
                Some(a) => a.add(&term, ctx)?,
            });
        }
        Ok(acc.unwrap_or_else(|| Self::zero(self.m)))
    }

    pub fn map<S, F: FnMut(&R) -> S>(&self, f: F) -> Vec<S> {
        self.coeffs.iter().map(f).collect()
    }
}

fn check_fits(m: usize, w: &Tower) -> Result<()> {
    if w.min_rank() > m {
        return Err(Error::ArgumentRange(format!(
            "{w} is not an element of W(A_{m})"
        )));
    }
    Ok(())
}
