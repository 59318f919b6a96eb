//! Elements of `H(A_m)` as nested coefficient lists.
//!
//! An element is written `h = sum_k h_k T_{a(m,k)}` with `h_k` in `H(A_{m-1})`,
//! recursively down to `H(A_0) = Z`. The leaves are stored contiguously in
//! depth-first order (child `h_0` first), so child `k` occupies the block
//! `[k * m!, (k+1) * m!)` and the leaf at child path `(k_m, ..., k_1)` sits at
//! index `sum_j k_j j!`, which is exactly the tower rank of `(k_1, ..., k_m)`.
//!
//! Multiplication peels the right factor into `g = sum_l g_l T_{a(j,l)}` and
//! reduces everything to right multiplication by a single `T_{a(j,l)}`,
//! computed childwise by [`NestedElement::mult_by_coset`].

use crate::coeff::{HeckeRing, IntScalar, Poly, RingCtx};
use crate::error::{Error, Result};
use crate::simple::SimpleElement;
use crate::tower::{factorial, mu, CosetRep, MuBranch, Tower};

/// A nested coefficient list for `H(A_m)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NestedElement<R> {
    m: usize,
    leaves: Vec<R>,
}

/// One term `c T_{left} T_{right}` of a rewritten product of coset representatives.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetTerm<R> {
    pub coeff: R,
    pub left: CosetRep,
    pub right: CosetRep,
}

/// Expands `T_{a(m,k)} T_{a(j,l)}` as one or two terms `c T_{a(j',l')} T_{a(m,k')}`.
///
/// In the cancel case the product is not reduced and picks up the quadratic
/// relation, giving `(q-1) T_{a(j-1, j-m+k-1)} T_{a(m, m-j+l)} + q T_{a(j-1,l-1)} T_{a(m,k-1)}`.
pub fn basis_times_coset<R: HeckeRing>(
    m: usize,
    k: usize,
    j: usize,
    l: usize,
) -> Result<Vec<CosetTerm<R>>> {
    let r = mu(m, j, k, l)?;
    let term = |coeff, lj, ll, rk| -> Result<CosetTerm<R>> {
        Ok(CosetTerm {
            coeff,
            left: CosetRep::new(lj, ll)?,
            right: CosetRep::new(m, rk)?,
        })
    };
    Ok(match r.branch {
        MuBranch::Pass | MuBranch::Join | MuBranch::Shift => vec![term(R::one(), r.j, r.l, r.k)?],
        MuBranch::Cancel => vec![
            term(R::q_minus_one(), j - 1, j + k - m - 1, m - j + l)?,
            term(R::q(), j - 1, l - 1, k - 1)?,
        ],
    })
}

impl<R: HeckeRing> NestedElement<R> {
    pub fn zero(m: usize) -> Self {
        Self {
            m,
            leaves: vec![R::zero(); factorial(m + 1)],
        }
    }

    pub fn unit(m: usize) -> Self {
        let mut e = Self::zero(m);
        e.leaves[0] = R::one();
        e
    }

    /// An element of `H(A_0) = Z`.
    pub fn scalar(z: R) -> Self {
        Self {
            m: 0,
            leaves: vec![z],
        }
    }

    pub fn basis(m: usize, w: &Tower) -> Result<Self> {
        if w.min_rank() > m {
            return Err(Error::ArgumentRange(format!(
                "{w} is not an element of W(A_{m})"
            )));
        }
        let mut e = Self::zero(m);
        e.leaves[w.rank()] = R::one();
        Ok(e)
    }

    pub fn generator(m: usize, i: usize) -> Result<Self> {
        if i == 0 || i > m {
            return Err(Error::ArgumentRange(format!(
                "s_{i} is not a generator of W(A_{m})"
            )));
        }
        Self::basis(m, &CosetRep::simple(i)?.tower())
    }

    /// Assembles `(h_0, ..., h_m)` from `m+1` children of rank `m-1`.
    pub fn from_children(children: Vec<NestedElement<R>>) -> Result<Self> {
        let Some(m1) = children.first().map(|c| c.m) else {
            return Err(Error::ArgumentRange(
                "a nested list needs at least one child".into(),
            ));
        };
        let m = children.len() - 1;
        if m == 0 || m1 + 1 != m {
            return Err(Error::ArgumentRange(format!(
                "{} children of rank {m1} do not form an element of H(A_{m})",
                children.len()
            )));
        }
        if let Some(bad) = children.iter().find(|c| c.m != m1) {
            return Err(Error::RankMismatch {
                left: m1,
                right: bad.m,
            });
        }
        Ok(Self {
            m,
            leaves: children.into_iter().flat_map(|c| c.leaves).collect(),
        })
    }

    /// Leaves in depth-first (equivalently tower rank) order.
    pub fn from_leaves(m: usize, leaves: Vec<R>) -> Result<Self> {
        let expected = factorial(m + 1);
        if leaves.len() != expected {
            return Err(Error::ArgumentRange(format!(
                "H(A_{m}) needs {expected} leaves, got {}",
                leaves.len()
            )));
        }
        Ok(Self { m, leaves })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn dim(&self) -> usize {
        self.leaves.len()
    }

    pub fn leaves(&self) -> &[R] {
        &self.leaves
    }

    /// The scalar of an element of `H(A_0)`.
    pub fn as_scalar(&self) -> Option<&R> {
        (self.m == 0).then(|| &self.leaves[0])
    }

    /// Child `h_k` in `H(A_{m-1})`; `None` for `m = 0` or `k > m`.
    pub fn child(&self, k: usize) -> Option<NestedElement<R>> {
        if self.m == 0 || k > self.m {
            return None;
        }
        let block = factorial(self.m);
        Some(Self {
            m: self.m - 1,
            leaves: self.leaves[k * block..(k + 1) * block].to_vec(),
        })
    }

    pub fn children(&self) -> Vec<NestedElement<R>> {
        (0..=self.m).filter_map(|k| self.child(k)).collect()
    }

    /// Coefficient of `T_w`; zero when `w` lies outside `W(A_m)`.
    pub fn coeff(&self, w: &Tower) -> R {
        if w.min_rank() > self.m {
            return R::zero();
        }
        self.leaves[w.rank()].clone()
    }

    /// Childwise sum: exactly `M` ring additions.
    pub fn add(&self, other: &Self, ctx: &RingCtx) -> Result<Self> {
        if self.m != other.m {
            return Err(Error::RankMismatch {
                left: self.m,
                right: other.m,
            });
        }
        Ok(Self {
            m: self.m,
            leaves: add_leaves(&self.leaves, &other.leaves, ctx),
        })
    }

    /// `z h`: exactly `M` ring multiplications, even for `z = 1`.
    pub fn scale(&self, z: &R, ctx: &RingCtx) -> Self {
        Self {
            m: self.m,
            leaves: scale_leaves(&self.leaves, z, ctx),
        }
    }

    /// `h T_{a(j,l)}` for `1 <= j <= m`, `0 <= l <= j`.
    pub fn mult_by_coset(&self, j: usize, l: usize, ctx: &RingCtx) -> Result<Self> {
        if j == 0 || j > self.m || l > j {
            return Err(Error::ArgumentRange(format!(
                "T_a({j},{l}) needs 1 <= j <= {} and l <= j",
                self.m
            )));
        }
        Ok(Self {
            m: self.m,
            leaves: coset_mul(&self.leaves, self.m, j, l, ctx),
        })
    }

    /// `h g` for `g` in `H(A_j)`, `j <= m`.
    ///
    /// Splits `g = sum_l g_l T_{a(j,l)}` and recurses on the `g_l`. Inside a
    /// product with `j >= 2`, the sub-products by elements of `H(A_1)` use the
    /// fused kernel of [`NestedElement::multiply_rank_one`] (`3M + 3`
    /// operations instead of `9M/2`); without it the dense cost exceeds
    /// `(1 + e) M^2` from `m = 3` on. A top-level product by an element of
    /// `H(A_1)` goes through the coset rule like every other level.
    pub fn multiply(&self, g: &Self, ctx: &RingCtx) -> Result<Self> {
        self.multiply_impl(g, g.m >= 2, ctx)
    }

    /// `h g` using only the coset rule at every level, never the fused
    /// rank-one kernel.
    pub fn multiply_via_cosets(&self, g: &Self, ctx: &RingCtx) -> Result<Self> {
        self.multiply_impl(g, false, ctx)
    }

    /// `h (g_0 + g_1 T_{s_1})` for `g` in `H(A_1)`, with the scalars
    /// `q g_1` and `g_0 + (q-1) g_1` formed once up front: `3M + 3` operations.
    pub fn multiply_rank_one(&self, g: &Self, ctx: &RingCtx) -> Result<Self> {
        if g.m != 1 || self.m == 0 {
            return Err(Error::ArgumentRange(format!(
                "the rank-one kernel multiplies H(A_{}) by H(A_1), got H(A_{})",
                self.m, g.m
            )));
        }
        Ok(Self {
            m: self.m,
            leaves: rank_one_product(&self.leaves, self.m, &g.leaves, ctx),
        })
    }

    fn multiply_impl(&self, g: &Self, fuse_rank_one: bool, ctx: &RingCtx) -> Result<Self> {
        if g.m > self.m {
            return Err(Error::RankMismatch {
                left: self.m,
                right: g.m,
            });
        }
        Ok(Self {
            m: self.m,
            leaves: multiply_leaves(&self.leaves, self.m, &g.leaves, g.m, fuse_rank_one, ctx),
        })
    }

    pub fn to_simple(&self) -> SimpleElement<R> {
        SimpleElement::from_coeffs(self.m, self.leaves.clone())
            .expect("leaf count matches the group order")
    }

    pub fn from_simple(h: &SimpleElement<R>) -> Self {
        Self {
            m: h.m(),
            leaves: h.coeffs().to_vec(),
        }
    }
}

impl<T: IntScalar> NestedElement<Poly<T>> {
    /// Evaluates every leaf at `q = v`; the result is indexed by tower rank.
    pub fn specialize(&self, v: &T) -> Vec<T> {
        self.leaves.iter().map(|p| p.eval_at(v)).collect()
    }
}

impl<R: HeckeRing> From<&SimpleElement<R>> for NestedElement<R> {
    fn from(h: &SimpleElement<R>) -> Self {
        Self::from_simple(h)
    }
}

impl<R: HeckeRing> From<&NestedElement<R>> for SimpleElement<R> {
    fn from(h: &NestedElement<R>) -> Self {
        h.to_simple()
    }
}

fn add_leaves<R: HeckeRing>(a: &[R], b: &[R], ctx: &RingCtx) -> Vec<R> {
    a.iter().zip(b).map(|(x, y)| ctx.add(x, y)).collect()
}

fn add_assign_leaves<R: HeckeRing>(acc: &mut [R], b: &[R], ctx: &RingCtx) {
    for (x, y) in acc.iter_mut().zip(b) {
        *x = ctx.add(x, y);
    }
}

fn scale_leaves<R: HeckeRing>(a: &[R], z: &R, ctx: &RingCtx) -> Vec<R> {
    a.iter().map(|x| ctx.mul(z, x)).collect()
}

/// `h T_{a(j,l)}` on the leaves of `h` in `H(A_m)`.
///
/// Writing `h' = sum_k h'_k T_{a(m,k)}`, the children are
///   (a) `h_k T_{a(j,l)}`                                     for `k < m-j`
///   (b) `q h_{k+1} T_{a(j-1,l-1)}`                           for `m-j <= k < m-j+l`
///   (c) `h_{m-j} + (q-1) sum_{i=1..l} h_{m-j+i} T_{a(j-1,i-1)}` for `k = m-j+l`
///   (d) `h_k T_{a(j-1,l)}`                                   for `k > m-j+l`.
/// The partial products of (c) are kept and finished off for (b) via
/// `T_{a(j-1,i-1)} T_{a(j-i,l-i)} = T_{a(j-1,l-1)}`, which is what keeps the
/// total cost within `3/2 l M`.
fn coset_mul<R: HeckeRing>(h: &[R], m: usize, j: usize, l: usize, ctx: &RingCtx) -> Vec<R> {
    if l == 0 {
        return h.to_vec();
    }
    debug_assert!(1 <= j && j <= m && l <= j);
    let block = factorial(m);
    let child = |k: usize| &h[k * block..(k + 1) * block];
    let mut out: Vec<Vec<R>> = vec![Vec::new(); m + 1];

    for (k, slot) in out.iter_mut().enumerate().take(m - j) {
        *slot = coset_mul(child(k), m - 1, j, l, ctx);
    }
    for (k, slot) in out.iter_mut().enumerate().skip(m - j + l + 1) {
        *slot = coset_mul(child(k), m - 1, j - 1, l, ctx);
    }

    // (c)
    let partials: Vec<Vec<R>> = (1..=l)
        .map(|i| coset_mul(child(m - j + i), m - 1, j - 1, i - 1, ctx))
        .collect();
    let mut sum = partials[0].clone();
    for p in &partials[1..] {
        add_assign_leaves(&mut sum, p, ctx);
    }
    let sum = scale_leaves(&sum, &R::q_minus_one(), ctx);
    out[m - j + l] = add_leaves(child(m - j), &sum, ctx);

    // (b), reusing h_{m-j+i} T_{a(j-1,i-1)}
    let q = R::q();
    for (idx, partial) in partials.iter().enumerate() {
        let i = idx + 1;
        let full = coset_mul(partial, m - 1, j - i, l - i, ctx);
        out[m - j + i - 1] = scale_leaves(&full, &q, ctx);
    }

    out.concat()
}

/// `h g` with `h` in `H(A_m)` and `g` in `H(A_j)`: `sum_l (h g_l) T_{a(j,l)}`.
fn multiply_leaves<R: HeckeRing>(
    h: &[R],
    m: usize,
    g: &[R],
    j: usize,
    fuse_rank_one: bool,
    ctx: &RingCtx,
) -> Vec<R> {
    if j == 0 {
        return scale_leaves(h, &g[0], ctx);
    }
    if j == 1 && fuse_rank_one {
        return rank_one_product(h, m, g, ctx);
    }
    let block = factorial(j);
    let mut acc: Option<Vec<R>> = None;
    for l in 0..=j {
        let hg = multiply_leaves(
            h,
            m,
            &g[l * block..(l + 1) * block],
            j - 1,
            fuse_rank_one,
            ctx,
        );
        let term = coset_mul(&hg, m, j, l, ctx);
        match acc.as_mut() {
            None => acc = Some(term),
            Some(a) => add_assign_leaves(a, &term, ctx),
        }
    }
    acc.expect("j >= 1 gives at least two terms")
}

/// `h (g_0 + g_1 T_{s_1})` for `h` in `H(A_m)`, `m >= 1`.
fn rank_one_product<R: HeckeRing>(h: &[R], m: usize, g: &[R], ctx: &RingCtx) -> Vec<R> {
    let (g0, g1) = (&g[0], &g[1]);
    let ascent = ctx.mul(&R::q(), g1);
    let descent = ctx.add(g0, &ctx.mul(&R::q_minus_one(), g1));
    let mut out = Vec::with_capacity(h.len());
    rank_one_fill(h, m, g0, g1, &ascent, &descent, ctx, &mut out);
    out
}

/// Right multiplication by `T_{s_1}` only mixes the children `h_{m-1}` and
/// `h_m` leafwise (`h'_{m-1} = q h_m`, `h'_m = h_{m-1} + (q-1) h_m`); the
/// lower children recurse. Each output leaf is then a two-term combination.
#[allow(clippy::too_many_arguments)]
fn rank_one_fill<R: HeckeRing>(
    h: &[R],
    m: usize,
    g0: &R,
    g1: &R,
    ascent: &R,
    descent: &R,
    ctx: &RingCtx,
    out: &mut Vec<R>,
) {
    let block = factorial(m);
    for k in 0..m - 1 {
        rank_one_fill(
            &h[k * block..(k + 1) * block],
            m - 1,
            g0,
            g1,
            ascent,
            descent,
            ctx,
            out,
        );
    }
    let low = &h[(m - 1) * block..m * block];
    let high = &h[m * block..(m + 1) * block];
    for (x, y) in low.iter().zip(high) {
        out.push(ctx.add(&ctx.mul(x, g0), &ctx.mul(y, ascent)));
    }
    for (x, y) in low.iter().zip(high) {
        out.push(ctx.add(&ctx.mul(x, g1), &ctx.mul(y, descent)));
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::PolyZ;
    use num_traits::{One, Zero};

    type N = NestedElement<PolyZ>;
    type S = SimpleElement<PolyZ>;

    fn p(c: &[i64]) -> PolyZ {
        PolyZ::from_i64s(c)
    }

    fn dense(m: usize, seed: i64) -> N {
        let n = factorial(m + 1) as i64;
        let leaves = (0..n)
            .map(|r| p(&[(r * 5 + seed) % 7 - 3, (r * seed + 1) % 3 - 1, 2]))
            .collect();
        N::from_leaves(m, leaves).unwrap()
    }

    #[test]
    fn layout_matches_tower_rank() {
        let w = Tower::new(vec![1, 2, 1, 3, 1, 3, 0, 1, 7]).unwrap();
        let b = N::basis(9, &w).unwrap();
        let expected = 1 + 2 * 2 + 6 + 3 * 24 + 120 + 3 * 720 + 40320 + 7 * 362880;
        assert_eq!(b.to_simple().coeffs()[expected], PolyZ::one());
        // the path (7, 1, 0, 3, 1, 3, 1, 2, 1) from the top
        let mut node = b.clone();
        for k in [7, 1, 0, 3, 1, 3, 1, 2, 1] {
            node = node.child(k).unwrap();
        }
        assert_eq!(node.as_scalar(), Some(&PolyZ::one()));
    }

    #[test]
    fn conversions() {
        assert_eq!(N::unit(3).to_simple(), S::unit(3));
        assert_eq!(N::from_simple(&S::unit(3)), N::unit(3));
        for seed in 0..100 {
            let h = dense(3, seed);
            assert_eq!(N::from_simple(&h.to_simple()), h);
        }
    }

    #[test]
    fn from_children_checks_shape() {
        let kids = vec![N::unit(1), N::zero(1), N::unit(1)];
        let h = N::from_children(kids.clone()).unwrap();
        assert_eq!(h.m(), 2);
        assert_eq!(h.children(), kids);
        assert!(N::from_children(vec![N::unit(1), N::unit(1)]).is_err());
        assert!(N::from_children(vec![N::unit(0), N::unit(1)]).is_err());
        assert!(N::from_children(Vec::new()).is_err());
        assert!(N::unit(0).child(0).is_none());
    }

    #[test]
    fn add_and_scale_examples() {
        let ctx = RingCtx::counting();
        let h = dense(2, 1);
        assert_eq!(h.add(&N::zero(2), &ctx).unwrap(), h);
        let two = N::unit(2).add(&N::unit(2), &RingCtx::plain()).unwrap();
        assert_eq!(two.leaves()[0], p(&[2]));
        assert!(two.leaves()[1..].iter().all(Zero::is_zero));

        let ctx = RingCtx::counting();
        dense(2, 1).add(&dense(2, 2), &ctx).unwrap();
        assert_eq!((ctx.counts().adds, ctx.counts().muls), (6, 0));

        let ctx = RingCtx::counting();
        assert_eq!(h.scale(&PolyZ::one(), &ctx), h);
        assert_eq!(ctx.counts().muls, 6);
        assert_eq!(
            N::unit(2).scale(&PolyZ::q(), &RingCtx::plain()).leaves()[0],
            PolyZ::q()
        );
        let ctx = RingCtx::counting();
        dense(2, 3).scale(&PolyZ::q_minus_one(), &ctx);
        assert_eq!((ctx.counts().adds, ctx.counts().muls), (0, 6));
    }

    #[test]
    fn basis_times_coset_examples() {
        // pass: k < m - j
        let t = basis_times_coset::<PolyZ>(4, 1, 2, 2).unwrap();
        assert_eq!(t.len(), 1);
        assert_eq!(
            (t[0].left, t[0].right),
            (CosetRep::new(2, 2).unwrap(), CosetRep::new(4, 1).unwrap())
        );
        assert!(t[0].coeff.is_one());
        // join: k = m - j
        let t = basis_times_coset::<PolyZ>(4, 2, 2, 1).unwrap();
        assert_eq!(t.len(), 1);
        assert_eq!(t[0].right, CosetRep::new(4, 3).unwrap());
        assert_eq!(t[0].left.k(), 0);
        // m=2, k=2, j=2, l=1 lies in the shift range (k > m-j+l)
        let t = basis_times_coset::<PolyZ>(2, 2, 2, 1).unwrap();
        assert_eq!(t.len(), 1);
        assert_eq!(
            (t[0].left, t[0].right),
            (CosetRep::new(1, 1).unwrap(), CosetRep::new(2, 2).unwrap())
        );
        // cancel: m=2, k=1, j=2, l=1 is T_{s_2} T_{s_2}
        let t = basis_times_coset::<PolyZ>(2, 1, 2, 1).unwrap();
        assert_eq!(t.len(), 2);
        assert_eq!(t[0].coeff, PolyZ::q_minus_one());
        assert_eq!(
            (t[0].left.k(), t[0].right),
            (0, CosetRep::new(2, 1).unwrap())
        );
        assert_eq!(t[1].coeff, PolyZ::q());
        assert_eq!((t[1].left.k(), t[1].right.k()), (0, 0));
        assert!(basis_times_coset::<PolyZ>(2, 1, 3, 1).is_err());
    }

    /// Evaluates a [`basis_times_coset`] expansion in the simple representation.
    fn expand(m: usize, terms: &[CosetTerm<PolyZ>]) -> S {
        let ctx = RingCtx::plain();
        terms.iter().fold(S::zero(m), |acc, t| {
            let prod = S::basis(m, &t.left.tower())
                .unwrap()
                .star_basis(&t.right.tower(), &ctx)
                .unwrap();
            acc.add(&prod.scale(&t.coeff, &ctx), &ctx).unwrap()
        })
    }

    #[test]
    fn basis_times_coset_agrees_with_simple() {
        let ctx = RingCtx::plain();
        for m in 1..=4 {
            for j in 1..=m {
                for k in 0..=m {
                    for l in 0..=j {
                        let terms = basis_times_coset::<PolyZ>(m, k, j, l).unwrap();
                        let lhs = S::basis(m, &CosetRep::new(m, k).unwrap().tower())
                            .unwrap()
                            .star_basis(&CosetRep::new(j, l).unwrap().tower(), &ctx)
                            .unwrap();
                        assert_eq!(lhs, expand(m, &terms), "m={m} k={k} j={j} l={l}");
                    }
                }
            }
        }
    }

    #[test]
    fn mult_by_coset_identity_and_errors() {
        let ctx = RingCtx::counting();
        let h = dense(3, 2);
        assert_eq!(h.mult_by_coset(2, 0, &ctx).unwrap(), h);
        assert_eq!(ctx.counts().total(), 0);
        assert!(h.mult_by_coset(0, 0, &ctx).is_err());
        assert!(h.mult_by_coset(4, 1, &ctx).is_err());
        assert!(h.mult_by_coset(2, 3, &ctx).is_err());
    }

    #[test]
    fn mult_by_coset_worked_example_costs() {
        // h' in H(A_2), j = l = 1: children cost 3 (case a), 2 (case b), 4 (case c)
        let h = dense(2, 4);
        let ctx = RingCtx::counting();
        let out = h.mult_by_coset(1, 1, &ctx).unwrap();
        assert_eq!(ctx.counts().total(), 9);
        let plain = RingCtx::plain();
        let kids = h.children();
        let expect2 = kids[1]
            .add(&kids[2].scale(&PolyZ::q_minus_one(), &plain), &plain)
            .unwrap();
        let expect1 = kids[2].scale(&PolyZ::q(), &plain);
        let expect0 = kids[0].mult_by_coset(1, 1, &plain).unwrap();
        assert_eq!(out.children(), vec![expect0, expect1, expect2]);
    }

    #[test]
    fn mult_by_coset_matches_simple_on_basis() {
        let ctx = RingCtx::plain();
        for w in Tower::all(3) {
            for j in 1..=3 {
                for l in 0..=j {
                    let v = CosetRep::new(j, l).unwrap().tower();
                    let nested = N::basis(3, &w).unwrap().mult_by_coset(j, l, &ctx).unwrap();
                    let simple = S::basis(3, &w).unwrap().star_basis(&v, &ctx).unwrap();
                    assert_eq!(nested.to_simple(), simple, "w={w} j={j} l={l}");
                }
            }
        }
    }

    #[test]
    fn multiply_examples() {
        let ctx = RingCtx::plain();
        let h = dense(3, 6);
        assert_eq!(h.multiply(&N::unit(3), &ctx).unwrap(), h);
        assert_eq!(h.multiply(&N::unit(0), &ctx).unwrap(), h);
        assert_eq!(N::unit(3).multiply(&h, &ctx).unwrap(), h);
        assert_eq!(
            N::unit(2).multiply(&N::unit(3), &ctx),
            Err(Error::RankMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn worked_example_costs_27() {
        let h = dense(2, 1);
        let g = dense(1, 2);
        let ctx = RingCtx::counting();
        let hg = h.multiply(&g, &ctx).unwrap();
        assert_eq!(ctx.counts().total(), 27);
        let ctx = RingCtx::counting();
        let simple = h.to_simple().multiply(&g.to_simple(), &ctx).unwrap();
        assert_eq!(ctx.counts().total(), 27);
        assert_eq!(hg.to_simple(), simple);
    }

    #[test]
    fn rank_one_kernel_matches_and_costs_3m_plus_3() {
        for m in 1..=4 {
            let h = dense(m, m as i64);
            let g = dense(1, 3);
            let ctx = RingCtx::counting();
            let fused = h.multiply_rank_one(&g, &ctx).unwrap();
            let big_m = factorial(m + 1) as u64;
            assert_eq!(ctx.counts().total(), 3 * big_m + 3);
            let plain = h.multiply_via_cosets(&g, &RingCtx::plain()).unwrap();
            assert_eq!(fused, plain);
        }
        assert!(dense(2, 0)
            .multiply_rank_one(&dense(2, 0), &RingCtx::plain())
            .is_err());
    }

    #[test]
    fn fused_and_coset_products_agree() {
        let ctx = RingCtx::plain();
        for seed in 0..4 {
            let h = dense(3, seed);
            for j in 0..=3 {
                let g = dense(j, seed + 1);
                assert_eq!(
                    h.multiply(&g, &ctx).unwrap(),
                    h.multiply_via_cosets(&g, &ctx).unwrap()
                );
            }
        }
    }

    #[test]
    fn specialize_examples() {
        let ctx = RingCtx::plain();
        let s = N::generator(2, 1).unwrap();
        let sq = s.multiply(&s, &ctx).unwrap();
        let one = num_bigint::BigInt::from(1);
        let v = sq.specialize(&one);
        assert_eq!(v[0], one);
        assert!(v[1..].iter().all(Zero::is_zero));
        assert_eq!(
            N::unit(2).specialize(&num_bigint::BigInt::from(7)),
            S::unit(2).map(|c| c.eval_at(&7.into()))
        );
    }

    #[test]
    fn distributivity() {
        let ctx = RingCtx::plain();
        for seed in 0..5 {
            let h = dense(3, seed);
            let g1 = dense(3, seed + 10);
            let g2 = dense(2, seed + 20);
            let g2e = N::from_simple(&g2.to_simple().embed(3).unwrap());
            let lhs = h.multiply(&g1.add(&g2e, &ctx).unwrap(), &ctx).unwrap();
            let rhs = h
                .multiply(&g1, &ctx)
                .unwrap()
                .add(&h.multiply(&g2, &ctx).unwrap(), &ctx)
                .unwrap();
            assert_eq!(lhs, rhs);
        }
    }
}
