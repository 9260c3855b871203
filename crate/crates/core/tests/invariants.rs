//! Cross-module invariants: Sturm counting against brute-force scanning,
//! resultant specialization, arithmetic round-trips, and the bound
//! functions' exact identities on dense grids.

use logconc_core::bipoly::BiPoly;
use logconc_core::bounds::{self, Delta, ShiftPair};
use logconc_core::interval::Interval;
use logconc_core::poly::{Poly, Var};
use logconc_core::rational::{int, one, rat, zero, Rational};
use logconc_core::resultant;
use logconc_core::roots;

use proptest::prelude::*;

const X: Var = Var('x');

#[test]
fn sturm_count_at_least_grid_scan() {
    // grid sign-change scanning is a lower bound on the exact count
    let polys = [
        Poly::from_ints(X, &[-2, 0, 1]),            // x^2 - 2
        Poly::from_ints(X, &[0, -1, 0, 1]),         // x^3 - x
        Poly::from_ints(X, &[-1, 5, -4, -3, 2]),    // mixed quartic
        Poly::from_ints(X, &[1, 0, -7, 0, 1]),      // x^4 - 7x^2 + 1
    ];
    let n: i128 = 20_000;
    for p in &polys {
        let (a, b) = (int(-3), int(3));
        let mut changes = 0usize;
        let mut last = p.eval(&a) > zero();
        for k in 1..=n {
            let x = &a + (&b - &a) * rat(k, n);
            let v = p.eval(&x);
            if v == zero() {
                continue;
            }
            let s = v > zero();
            if s != last {
                changes += 1;
            }
            last = s;
        }
        let iv = Interval::open(a, b).unwrap();
        let exact = roots::count_roots(p, &iv).unwrap();
        assert!(exact >= changes, "{}: {} < {}", p.to_display_string(), exact, changes);
        assert_eq!(exact, roots::isolate_roots(p, &iv, &rat(1, 1000)).unwrap().len());
    }
}

#[test]
fn resultant_specializes() {
    // res_u(p, q)(r) = res(p(.,r), q(.,r)) whenever both keep full u-degree
    let u = Var('u');
    let h = Var('h');
    let p = BiPoly::from_ints((u, h), &[&[1, 0, -3], &[2, 1], &[0, 0, 5]]);
    let q = BiPoly::from_ints((u, h), &[&[-2, 1], &[4, 0, 1]]);
    let res = resultant::resultant(&p, &q, u).unwrap();
    let mut seed = 0x243f6a88u64;
    let mut checked = 0;
    while checked < 20 {
        seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        let num = (seed >> 33) as i128 % 19 - 9;
        let den = ((seed >> 17) % 7 + 1) as i128;
        let r = rat(num, den);
        let pu = specialize(&p, u, h, &r);
        let qu = specialize(&q, u, h, &r);
        if pu.degree() != p.degree_in(u).unwrap() || qu.degree() != q.degree_in(u).unwrap() {
            continue;
        }
        let direct = resultant::resultant_uni(&pu, &qu).unwrap();
        assert_eq!(res.eval(&r), direct, "at h = {r}");
        checked += 1;
    }
}

fn specialize(p: &BiPoly, keep: Var, at: Var, r: &Rational) -> Poly {
    let _ = keep;
    p.substitute(at, r).unwrap()
}

#[test]
fn lemma_maximization_identity_on_dense_grid() {
    // p2(delta, b_star(delta)) = p1(delta) exactly, 10^3 grid points
    for k in 1..=1000i128 {
        let delta = Delta::new(rat(k, 100)).unwrap();
        assert_eq!(
            bounds::p2(&delta, &bounds::b_star(&delta)),
            bounds::p1(&delta),
            "delta = {k}/100"
        );
    }
}

#[test]
fn branch_continuity_at_breakpoints() {
    for (num, den, expect) in [(16i128, 3i128, rat(2, 27)), (64, 9, rat(1, 12))] {
        let bp = rat(num, den);
        let delta = Delta::new(bp.clone()).unwrap();
        assert_eq!(bounds::p1(&delta), expect);
        // middle-branch formula from the other side agrees
        let mid = int(32) * (int(9) * &bp - int(32)) / (int(243) * &bp * &bp);
        assert_eq!(mid, expect);
    }
    // ratio breakpoints agree from both sides too
    let mid_ratio = |d: &Rational| {
        int(256) * (int(9) * d - int(32)) * (one() + bounds::c_const() * d)
            / (int(27) * d * d * d)
    };
    for (num, den) in [(16i128, 3i128), (64, 9)] {
        let bp = rat(num, den);
        let delta = Delta::new(bp.clone()).unwrap();
        assert_eq!(bounds::ratio_r1(&delta), mid_ratio(&bp));
    }
}

#[test]
fn p_u_dominates_p_dense() {
    // 0 < u < delta <= 20 on a quarter-integer grid
    for dq in 1..=80i128 {
        let delta = Delta::new(rat(dq, 4)).unwrap();
        for uq in 1..dq {
            let shift = ShiftPair::new(rat(uq, 4), &delta).unwrap();
            assert!(
                bounds::p_u_bound(&shift) >= bounds::p_bound(&delta),
                "delta={dq}/4 u={uq}/4"
            );
        }
    }
}

#[test]
fn shifted_branches_continuous_at_thresholds() {
    // p1_shifted agrees at h = r2(u) and h = r1(u) computed from both sides
    for un in 1..10i128 {
        let u = rat(un, 40); // u in (0, 1/4)
        let r2 = bounds::threshold_r2(&u).unwrap();
        let r1 = bounds::threshold_r1(&u).unwrap();
        let m = one() - int(4) * &u;
        let cubic_at_r2 = logconc_core::rational::pow(&m, 3) * &r2 / int(72);
        let kink = |h: &Rational| {
            int(128) / (int(27) * h) * (rat(1, 4) - &u - rat(8, 9) / h)
        };
        assert_eq!(cubic_at_r2, kink(&r2), "u = {un}/40 at r2");
        let quad = logconc_core::rational::pow(&m, 2) / int(12);
        assert_eq!(kink(&r1), quad, "u = {un}/40 at r1");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn poly_add_sub_roundtrip(a in small_poly(), b in small_poly()) {
        let sum = &a + &b;
        prop_assert_eq!(&sum - &b, a);
    }

    #[test]
    fn poly_divrem_reconstructs(a in small_poly(), b in small_poly()) {
        prop_assume!(!b.is_zero());
        let (quot, rem) = a.divrem(&b).unwrap();
        prop_assert_eq!(&(&quot * &b) + &rem, a);
    }

    #[test]
    fn gcd_divides_both(a in small_poly(), b in small_poly()) {
        prop_assume!(!a.is_zero() && !b.is_zero());
        let g = a.gcd(&b);
        let (_, ra) = a.divrem(&g).unwrap();
        let (_, rb) = b.divrem(&g).unwrap();
        prop_assert!(ra.is_zero());
        prop_assert!(rb.is_zero());
    }

    #[test]
    fn eval_is_ring_homomorphism(a in small_poly(), b in small_poly(), xn in -9i128..9, xd in 1i128..7) {
        let x = rat(xn, xd);
        prop_assert_eq!((&a * &b).eval(&x), a.eval(&x) * b.eval(&x));
        prop_assert_eq!((&a + &b).eval(&x), a.eval(&x) + b.eval(&x));
    }
}

fn small_poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec(-9i128..=9, 0..6)
        .prop_map(|cs| Poly::from_ints(X, &cs))
}
