//! Certificate for d2 >= 0, the longest chain in the proof: symbolic
//! reconstruction of D2, its printed partial derivatives and resultants,
//! exact isolation of the critical-point candidates, a certified lower
//! bound on D2 over every candidate box, and the boundary sign checks.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::bipoly::BiPoly;
use crate::certify::boxes::{bipoly_range, RBox};
use crate::certify::inputs::{CertifyInputs, H, U, UH};
use crate::certify::{wit, wit_str, CertBuilder, Certificate};
use crate::interval::Interval;
use crate::poly::Poly;
use crate::rational::{self, Rational};
use crate::resultant;
use crate::roots::{self, SignClass};

/// `h^2 (Q + P(h+u)) d2` expanded symbolically from the definition of d2,
/// with `c = P/Q`. The printed D2 is a rational multiple of this.
pub(crate) fn cleared_d2(c: &Rational) -> BiPoly {
    let p = Rational::from_integer(c.numer().clone());
    let q = Rational::from_integer(c.denom().clone());
    let u = BiPoly::monomial(UH, rational::one(), 1, 0);
    let h = BiPoly::monomial(UH, rational::one(), 0, 1);
    let h2 = BiPoly::monomial(UH, rational::one(), 0, 2);
    // Q + P (h + u)
    let mult = &BiPoly::constant(UH, q.clone()) + &(&u + &h).scale(&p);
    // u h^2 / 72 + (128/27)(1/4 - u) h - 1024/243
    let inner = &(&(&u * &h2).scale(&rational::rat(1, 72))
        + &(&(&BiPoly::constant(UH, rational::rat(1, 4)) - &u) * &h)
            .scale(&rational::rat(128, 27)))
        - &BiPoly::constant(UH, rational::rat(1024, 243));
    // subtract Q (u + h) h^2 / 72
    &(&mult * &inner) - &(&(&u + &h) * &h2).scale(&(q / rational::int(72)))
}

fn interval_within(iv: &Interval, target: &Rational, tol: &Rational) -> bool {
    match (iv.lo.finite(), iv.hi.finite()) {
        (Some(lo), Some(hi)) => &(target - tol) <= lo && hi <= &(target + tol),
        _ => false,
    }
}

pub fn certify_lemma2_d2(inputs: &CertifyInputs) -> Certificate {
    let mut cert = CertBuilder::new("d2");

    // (a) the defining scalar: solve s with s * cleared = printed D2.
    // The display "216 9" is ambiguous (2169 vs 216*9); solving for s
    // settles it without guessing.
    let cleared = cleared_d2(&inputs.c);
    let mut s = rational::zero();
    'find: for i in 0..8 {
        for j in 0..8 {
            let e = cleared.coeff(i, j);
            if !e.is_zero() {
                s = inputs.d2.coeff(i, j) / e;
                break 'find;
            }
        }
    }
    let scalar_ok = !s.is_zero() && inputs.d2 == cleared.scale(&s);
    cert.check(
        "defining scalar of D2",
        "s * h^2 (100 + 419(h+u)) d2 = D2 for a unique rational s",
        scalar_ok,
        vec![wit("s", &s)],
    );

    // (b) printed partial derivatives
    let d21 = inputs.d2.partial(U).expect("partial in u");
    let d22 = inputs.d2.partial(H).expect("partial in h");
    cert.check(
        "partial derivatives",
        "d/du D2 and d/dh D2 match the printed D21, D22 coefficient-for-coefficient",
        d21 == inputs.d21 && d22 == inputs.d22,
        vec![
            wit("D21 constant term", &inputs.d21.coeff(0, 0)),
            wit("D22 constant term", &inputs.d22.coeff(0, 0)),
        ],
    );

    // (c) resultants, up to one recorded rational factor each
    let r1_mine = resultant::resultant(&inputs.d21, &inputs.d22, U).ok();
    let r2_mine = resultant::resultant(&inputs.d21, &inputs.d22, H).ok();
    let mut sigma1 = rational::zero();
    let mut sigma2 = rational::zero();
    let res_ok = match (&r1_mine, &r2_mine) {
        (Some(a), Some(b)) if !a.is_zero() && !b.is_zero() => {
            sigma1 = inputs.r1.leading_coeff() / a.leading_coeff();
            sigma2 = inputs.r2.leading_coeff() / b.leading_coeff();
            inputs.r1 == a.scale(&sigma1) && inputs.r2 == b.scale(&sigma2)
        }
        _ => false,
    };
    cert.check(
        "resultants of (D21, D22)",
        "res_u = R1(h) and res_h = R2(u) up to one rational factor each",
        res_ok,
        vec![wit("factor for R1", &sigma1), wit("factor for R2", &sigma2)],
    );

    // (d) three roots of R1 above 16/3, at the printed decimals
    let ray = Interval::above(rational::rat(16, 3));
    let r1_count = roots::count_roots(&inputs.r1, &ray).unwrap_or(usize::MAX);
    let h_ivs = roots::isolate_roots(&inputs.r1, &ray, &rational::rat(1, 100_000))
        .unwrap_or_default();
    let h_targets = [
        rational::rat(255_934, 1000),
        rational::rat(341_325, 1000),
        rational::rat(341_342, 1000),
    ];
    let tol3 = rational::rat(1, 2000); // half of the last shown decimal
    let h_ok = r1_count == 3
        && h_ivs.len() == 3
        && h_ivs
            .iter()
            .zip(&h_targets)
            .all(|(iv, t)| interval_within(iv, t, &tol3));
    let mut h_wit: Vec<(alloc::string::String, alloc::string::String)> = Vec::new();
    for (k, iv) in h_ivs.iter().enumerate() {
        h_wit.push(wit_str(&format!("h{}", k + 1), iv.to_display_string()));
    }
    cert.check(
        "roots of R1 above 16/3",
        "exactly three, isolated at 255.934, 341.325, 341.342 (3 decimals)",
        h_ok,
        h_wit,
    );

    // (e) single root of R2 in (0, 1/4) at 0.218271
    let u_range = Interval::open(rational::zero(), rational::rat(1, 4)).unwrap();
    let r2_count = roots::count_roots(&inputs.r2, &u_range).unwrap_or(usize::MAX);
    let u_ivs = roots::isolate_roots(&inputs.r2, &u_range, &rational::rat(1, 1_000_000_000))
        .unwrap_or_default();
    let u_target = rational::rat(218_271, 1_000_000);
    let tol6 = rational::rat(1, 2_000_000);
    let u_ok = r2_count == 1
        && u_ivs.len() == 1
        && interval_within(&u_ivs[0], &u_target, &tol6);
    cert.check(
        "root of R2 in (0, 1/4)",
        "exactly one, isolated at 0.218271 (6 decimals)",
        u_ok,
        u_ivs
            .iter()
            .map(|iv| wit_str("u1", iv.to_display_string()))
            .collect(),
    );

    // (f) D2 > 3e9 at every candidate critical pair (u-root, h-root),
    // by exact interval evaluation over the isolating boxes
    let floor = rational::int(3_000_000_000);
    let mut pairs_ok = !u_ivs.is_empty() && !h_ivs.is_empty();
    let mut pair_wit = Vec::new();
    for uiv in &u_ivs {
        for (k, hiv) in h_ivs.iter().enumerate() {
            let (Some(ub), Some(hb)) =
                (RBox::from_interval(uiv), RBox::from_interval(hiv))
            else {
                pairs_ok = false;
                continue;
            };
            let range = bipoly_range(&inputs.d2, &ub, &hb);
            pair_wit.push(wit(&format!("lower bound at (u1, h{})", k + 1), &range.lo));
            if range.lo <= floor {
                pairs_ok = false;
            }
        }
    }
    cert.check(
        "critical values of D2",
        "certified lower bound on D2 exceeds 3*10^9 at every candidate pair",
        pairs_ok,
        pair_wit,
    );

    // (g) boundary u = 0: printed cubic, strictly positive on [16/3, 64/9]
    let at_u0 = inputs.d2.substitute(U, &rational::zero()).expect("substitute u");
    let printed_u0 = inputs.d2_boundary_u0.scale(&rational::int(4));
    let seg = Interval::closed(rational::rat(16, 3), rational::rat(64, 9)).unwrap();
    let u0_sign = roots::sign_on_interval(&printed_u0, &seg)
        .map(|s| s == SignClass::NonNegative)
        .unwrap_or(false)
        && roots::count_roots(&printed_u0, &seg).map(|n| n == 0).unwrap_or(false)
        && printed_u0.eval(&rational::rat(16, 3)) > rational::zero()
        && printed_u0.eval(&rational::rat(64, 9)) > rational::zero();
    cert.check(
        "boundary u = 0",
        "D2|_{u=0} = 4(-675h^3+241344h^2-800512h-204800) > 0 on [16/3, 64/9]",
        at_u0 == printed_u0 && u0_sign,
        vec![wit("value at 16/3", &printed_u0.eval(&rational::rat(16, 3)))],
    );

    // (h) boundaries h = r1(u) and h = r2(u): clearing (1-4u)^3 turns each
    // into the printed quartic times a negative constant; the quartics are
    // nonpositive on (0, 1/4), so D2 >= 0 on both boundary curves.
    let a_coeffs = inputs.d2.as_poly_in(H).expect("d2 in h");
    let one_minus_4u = Poly::from_ints(U, &[1, -4]);
    let boundary_poly = |r_num: &Rational| -> Poly {
        // (1-4u)^3 D2(u, r/(1-4u)) = sum_j A_j(u) r^j (1-4u)^{3-j}
        let mut acc = Poly::zero(U);
        for (j, a) in a_coeffs.iter().enumerate() {
            let mut term = a.scale(&rational::pow(r_num, j as u32));
            for _ in 0..(3 - j) {
                term = &term * &one_minus_4u;
            }
            acc = &acc + &term;
        }
        acc
    };
    let at_r1 = boundary_poly(&rational::rat(64, 9));
    let at_r2 = boundary_poly(&rational::rat(16, 3));
    let id_r1 = at_r1 == inputs.d2_boundary_r1.scale(&rational::rat(-4096, 27));
    let id_r2 = at_r2 == inputs.d2_boundary_r2.scale(&rational::rat(-256, 3));
    let sign_r1 = roots::sign_on_interval(&inputs.d2_boundary_r1, &u_range)
        .map(|s| s == SignClass::NonPositive)
        .unwrap_or(false);
    let sign_r2 = roots::sign_on_interval(&inputs.d2_boundary_r2, &u_range)
        .map(|s| s == SignClass::NonPositive)
        .unwrap_or(false);
    cert.check(
        "boundaries h = r1(u), h = r2(u)",
        "printed quartics reconstruct the boundary values and are <= 0 on (0, 1/4)",
        id_r1 && id_r2 && sign_r1 && sign_r2,
        vec![
            wit("quartic at h=r1, value at u=1/8", &inputs.d2_boundary_r1.eval(&rational::rat(1, 8))),
            wit("quartic at h=r2, value at u=1/8", &inputs.d2_boundary_r2.eval(&rational::rat(1, 8))),
        ],
    );

    // (i) the limit argument's algebraic kernel as u -> 1/4:
    // lim min D2/h^3 = 27 (100c/4 - 100) > 0
    let kernel = rational::int(27)
        * (rational::int(100) * &inputs.c / rational::int(4) - rational::int(100));
    cert.check(
        "limit kernel at u = 1/4",
        "27 (419/4 - 100) > 0",
        kernel > rational::zero(),
        vec![wit("kernel", &kernel)],
    );

    cert.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn published_inputs_pass() {
        let cert = certify_lemma2_d2(&CertifyInputs::published());
        assert!(cert.passed(), "{:?}", cert.steps.iter().find(|s| !s.passed));
        // the ambiguous "216 9" scalar resolves to 216 * 9 = 1944
        let s_step = &cert.steps[0];
        assert_eq!(s_step.witnesses[0].1, "1944");
    }

    #[test]
    fn mutated_d21_fails() {
        let mut inputs = CertifyInputs::published();
        inputs.d21 = &inputs.d21 + &BiPoly::monomial(UH, rational::one(), 0, 0);
        assert!(!certify_lemma2_d2(&inputs).passed());
    }

    #[test]
    fn mutated_r2_constant_fails() {
        let mut inputs = CertifyInputs::published();
        let mut coeffs: Vec<Rational> = inputs.r2.coeffs().to_vec();
        coeffs[0] += rational::one();
        inputs.r2 = Poly::new(U, coeffs);
        assert!(!certify_lemma2_d2(&inputs).passed());
    }
}
