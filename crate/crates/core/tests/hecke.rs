use std::collections::BTreeMap;

use hecke_core::bench::{random_leaves, random_nested, trial_rng};
use hecke_core::{
    basis_times_coset, factorial, HeckeElement, HeckeRing, NestedElement, NestedZ, PolyI64, PolyZ,
    RingCtx, SimpleElement, SimpleZ, Tower,
};
use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn dense_simple(m: usize, seed: u64) -> SimpleZ {
    SimpleZ::from_coeffs(m, random_leaves(m, &mut rng(seed))).unwrap()
}

/// `T_w T_{a(j,l)}` over towers of length `m`, expanded with the two-term
/// rewriting rule only: peel `T_w = T_{w'} T_{a(m,k)}`, rewrite
/// `T_{a(m,k)} T_{a(j,l)}`, recurse on `T_{w'} T_{a(j',l')}` and append `k'`.
fn expand(digits: &[usize], j: usize, l: usize) -> BTreeMap<Vec<usize>, PolyZ> {
    let m = digits.len();
    let mut out = BTreeMap::new();
    if l == 0 || j == 0 {
        out.insert(digits.to_vec(), PolyZ::one());
        return out;
    }
    let (prefix, k) = (&digits[..m - 1], digits[m - 1]);
    for term in basis_times_coset::<PolyZ>(m, k, j, l).unwrap() {
        for (mut u, c) in expand(prefix, term.left.m(), term.left.k()) {
            u.push(term.right.k());
            let e = out.entry(u).or_insert_with(PolyZ::zero);
            *e = &*e + &(&c * &term.coeff);
        }
    }
    out
}

#[test]
fn coset_table_agrees_with_term_expansion() {
    let ctx = RingCtx::plain();
    for m in 1..=4 {
        for w in Tower::all(m) {
            let h = NestedZ::basis(m, &w).unwrap();
            for j in 1..=m {
                for l in 0..=j {
                    let got = h.mult_by_coset(j, l, &ctx).unwrap();
                    let mut want = vec![PolyZ::zero(); factorial(m + 1)];
                    for (u, c) in expand(&w.padded(m), j, l) {
                        want[Tower::new(u).unwrap().rank()] = c;
                    }
                    assert_eq!(got.leaves(), &want[..], "T_{w} T_a({j},{l}) in H(A_{m})");
                }
            }
        }
    }
}

#[test]
fn cancel_and_shift_examples() {
    // T_{s_2} T_{s_2} = (q-1) T_{s_2} + q
    let t = basis_times_coset::<PolyZ>(2, 1, 2, 1).unwrap();
    assert_eq!(t.len(), 2);
    assert_eq!(
        (t[0].coeff.clone(), t[1].coeff.clone()),
        (PolyZ::q_minus_one(), PolyZ::q())
    );
    assert_eq!((t[0].left.m(), t[0].left.k(), t[0].right.k()), (1, 0, 1));
    assert_eq!((t[1].left.m(), t[1].left.k(), t[1].right.k()), (1, 0, 0));
    let s = basis_times_coset::<PolyZ>(2, 2, 2, 1).unwrap();
    assert_eq!(s.len(), 1);
    assert_eq!((s[0].left.m(), s[0].left.k(), s[0].right.k()), (1, 1, 2));
    // both against the simple representation
    let ctx = RingCtx::plain();
    for (k, terms) in [(1, t), (2, s)] {
        let w = Tower::new(vec![0, k]).unwrap();
        let lhs = SimpleZ::basis(2, &w)
            .unwrap()
            .star_basis(&Tower::new(vec![0, 1]).unwrap(), &ctx)
            .unwrap();
        let mut rhs = SimpleZ::zero(2);
        for term in terms {
            let u = term.left.tower().product(&term.right.tower());
            rhs = rhs
                .add(
                    &SimpleZ::basis(2, &u).unwrap().scale(&term.coeff, &ctx),
                    &ctx,
                )
                .unwrap();
        }
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn worked_example_step_costs() {
    // h'' = h' T_{a(1,1)} on dense h' in H(A_2): 9 operations in total
    let h = random_nested(2, &mut rng(3));
    let ctx = RingCtx::counting();
    let out = h.mult_by_coset(1, 1, &ctx).unwrap();
    assert_eq!(ctx.counts().total(), 9);
    let children = h.children();
    let ctx2 = RingCtx::plain();
    let expected_top = children[1]
        .add(&children[2].scale(&PolyZ::q_minus_one(), &ctx2), &ctx2)
        .unwrap();
    assert_eq!(out.child(2).unwrap(), expected_top);
    assert_eq!(out.child(1).unwrap(), children[2].scale(&PolyZ::q(), &ctx2));
    assert_eq!(h.mult_by_coset(2, 0, &ctx2).unwrap(), h);
}

#[test]
fn basis_pairs_h3_agree_across_representations() {
    let ctx = RingCtx::plain();
    for u in Tower::all(3) {
        for v in Tower::all(3) {
            let s = SimpleZ::basis(3, &u)
                .unwrap()
                .multiply(&SimpleZ::basis(3, &v).unwrap(), &ctx)
                .unwrap();
            let n = NestedZ::basis(3, &u)
                .unwrap()
                .multiply(&NestedZ::basis(3, &v).unwrap(), &ctx)
                .unwrap();
            assert_eq!(n.to_simple(), s);
            if u.length() + v.length() == u.product(&v).length() {
                assert_eq!(s, SimpleZ::basis(3, &u.product(&v)).unwrap());
            }
        }
    }
}

#[test]
fn associativity_dense_h3() {
    let ctx = RingCtx::plain();
    for i in 0..100 {
        let mut r = trial_rng(11, 3, i);
        let (h, g, f) = (
            random_nested(3, &mut r),
            random_nested(3, &mut r),
            random_nested(3, &mut r),
        );
        let left = h.multiply(&g, &ctx).unwrap().multiply(&f, &ctx).unwrap();
        let right = h.multiply(&g.multiply(&f, &ctx).unwrap(), &ctx).unwrap();
        assert_eq!(left, right, "triple {i}");
        if i < 10 {
            let (hs, gs, fs) = (h.to_simple(), g.to_simple(), f.to_simple());
            let ls = hs.multiply(&gs, &ctx).unwrap().multiply(&fs, &ctx).unwrap();
            assert_eq!(ls, left.to_simple());
        }
    }
}

#[test]
fn distributivity_and_units() {
    let ctx = RingCtx::plain();
    for m in 0..=3 {
        for i in 0..5 {
            let mut r = trial_rng(12, m, i);
            let (h, g1, g2) = (
                random_nested(m, &mut r),
                random_nested(m, &mut r),
                random_nested(m, &mut r),
            );
            let lhs = h.multiply(&g1.add(&g2, &ctx).unwrap(), &ctx).unwrap();
            let rhs = h
                .multiply(&g1, &ctx)
                .unwrap()
                .add(&h.multiply(&g2, &ctx).unwrap(), &ctx)
                .unwrap();
            assert_eq!(lhs, rhs);
            let unit = NestedZ::unit(m);
            assert_eq!(h.multiply(&unit, &ctx).unwrap(), h);
            assert_eq!(unit.multiply(&h, &ctx).unwrap(), h);
            let hs = h.to_simple();
            assert_eq!(hs.multiply(&SimpleZ::unit(m), &ctx).unwrap(), hs);
        }
    }
}

#[test]
fn representation_roundtrip_and_worked_example_rank() {
    for i in 0..100 {
        let h = random_nested(3, &mut trial_rng(13, 3, i));
        assert_eq!(NestedZ::from_simple(&h.to_simple()), h);
    }
    let w: Tower = "[1,2,1,3,1,3,0,1,7]".parse().unwrap();
    let s = SimpleZ::basis(9, &w).unwrap();
    let rank: usize = [1, 2, 1, 3, 1, 3, 0, 1, 7]
        .iter()
        .enumerate()
        .map(|(i, &a)| a * factorial(i + 1))
        .sum();
    assert!(s.coeffs()[rank].is_one());
    assert_eq!(NestedZ::from_simple(&s).coeff(&w), PolyZ::one());
}

#[test]
fn additions_and_scalings_count_m_operations() {
    let ctx = RingCtx::counting();
    let (a, b) = (dense_simple(3, 1), dense_simple(3, 2));
    a.add(&b, &ctx).unwrap();
    assert_eq!((ctx.counts().adds, ctx.counts().muls), (24, 0));
    let ctx = RingCtx::counting();
    let h = random_nested(2, &mut rng(4));
    h.add(&h, &ctx).unwrap();
    h.scale(&PolyZ::one(), &ctx);
    assert_eq!((ctx.counts().adds, ctx.counts().muls), (6, 6));
    assert!(a.add(&SimpleZ::zero(2), &ctx).is_err());
}

#[test]
fn star_basis_cost_is_at_most_two_length_m() {
    for v in Tower::all(3) {
        let ctx = RingCtx::counting();
        dense_simple(3, 5).star_basis(&v, &ctx).unwrap();
        assert!(ctx.counts().total() <= 2 * v.length() as u64 * 24);
    }
}

#[test]
fn q_equals_one_gives_group_algebra() {
    let ctx = RingCtx::plain();
    let s = NestedZ::generator(3, 2).unwrap();
    let sq = s.multiply(&s, &ctx).unwrap();
    let mut unit = vec![num_bigint::BigInt::zero(); 24];
    unit[0] = num_bigint::BigInt::one();
    assert_eq!(sq.specialize(&num_bigint::BigInt::one()), unit);
    assert_eq!(
        NestedZ::unit(2).specialize(&num_bigint::BigInt::from(7)),
        unit[..6].to_vec()
    );
}

#[test]
fn machine_integer_coefficients_agree_with_bignum() {
    let ctx = RingCtx::plain();
    let to_i64 = |p: &PolyZ| {
        PolyI64::new(
            p.coeffs()
                .iter()
                .map(|c| i64::try_from(c).unwrap())
                .collect(),
        )
    };
    for i in 0..5 {
        let mut r = trial_rng(14, 3, i);
        let (h, g) = (random_nested(3, &mut r), random_nested(3, &mut r));
        let big = h.multiply(&g, &ctx).unwrap();
        let hi = NestedElement::from_leaves(3, h.leaves().iter().map(to_i64).collect()).unwrap();
        let gi = NestedElement::from_leaves(3, g.leaves().iter().map(to_i64).collect()).unwrap();
        let small: NestedElement<PolyI64> = hi.multiply(&gi, &ctx).unwrap();
        let expected: Vec<PolyI64> = big.leaves().iter().map(to_i64).collect();
        assert_eq!(small.leaves(), &expected[..]);
        let ss: SimpleElement<PolyI64> = small.to_simple();
        assert_eq!(ss.coeffs(), &expected[..]);
    }
}

#[test]
fn rank_mismatch_is_an_error() {
    let ctx = RingCtx::plain();
    assert!(NestedZ::unit(1).multiply(&NestedZ::unit(2), &ctx).is_err());
    assert!(SimpleZ::unit(1).multiply(&SimpleZ::unit(2), &ctx).is_err());
    assert!(NestedZ::unit(2).mult_by_coset(3, 1, &ctx).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn json_roundtrip(m in 0usize..4, seed in any::<u64>()) {
        let h = random_nested(m, &mut rng(seed));
        for e in [HeckeElement::Nested(h.clone()), HeckeElement::Simple(h.to_simple())] {
            let text = e.to_json().to_string();
            let back: HeckeElement<num_bigint::BigInt> = text.parse().unwrap();
            prop_assert_eq!(back.to_nested(), h.clone());
        }
    }

    #[test]
    fn dense_equivalence_h4(seed in any::<u64>()) {
        let ctx = RingCtx::plain();
        let mut r = rng(seed);
        let (h, g) = (random_nested(4, &mut r), random_nested(4, &mut r));
        let n = h.multiply(&g, &ctx).unwrap();
        let s = h.to_simple().multiply(&g.to_simple(), &ctx).unwrap();
        prop_assert_eq!(n.to_simple(), s);
    }
}
