//! Certificate for d1 >= 0: D1(h) is strictly convex with nonpositive
//! discriminant for u <= 24/100, and increasing from D1(0) = 419 u^2 for
//! u >= 24/100.

use alloc::vec;

use crate::certify::inputs::{CertifyInputs, H, U};
use crate::certify::{wit, wit_str, CertBuilder, Certificate};
use crate::interval::Interval;
use crate::poly::Poly;
use crate::rational::{self, Rational};
use crate::resultant;
use crate::roots::{self, SignClass};

/// Strict sign on an interval: the stated weak sign holds and the
/// polynomial has no root strictly inside.
fn strictly(p: &Poly, iv: &Interval, want: SignClass) -> bool {
    roots::sign_on_interval(p, iv).map(|s| s == want).unwrap_or(false)
        && roots::count_roots(p, iv).map(|n| n == 0).unwrap_or(false)
}

pub fn certify_lemma1_d1(inputs: &CertifyInputs) -> Certificate {
    let mut cert = CertBuilder::new("d1");
    let zero_quarter = Interval::open(rational::zero(), rational::rat(1, 4)).unwrap();

    // (a) leading coefficient in h is 419 (1-4u)^3 > 0 on (0, 1/4)
    let coeffs = inputs.d1.as_poly_in(H).expect("d1 in (u,h)");
    let lead = coeffs.get(2).cloned().unwrap_or_else(|| Poly::zero(U));
    let m = Poly::from_ints(U, &[1, -4]);
    let expected_lead = (&(&m * &m) * &m).scale(&rational::int(419));
    let lead_matches = lead == expected_lead;
    let lead_positive = strictly(&lead, &zero_quarter, SignClass::NonNegative);
    cert.check(
        "leading coefficient",
        "coefficient of h^2 in D1 equals 419 (1-4u)^3 and is > 0 on (0, 1/4)",
        lead_matches && lead_positive,
        vec![wit_str("lead", lead.to_display_string())],
    );

    // (b) disc_h(D1) equals the printed factorization, expanded
    let disc = match resultant::discriminant_in(&inputs.d1, H) {
        Ok(p) => p,
        Err(_) => Poly::zero(U),
    };
    let printed = &(&Poly::from_ints(U, &[0, 0, 16]) * &inputs.d1_disc_quadratic)
        * &inputs.d1_disc_quartic;
    cert.check(
        "discriminant reconstruction",
        "disc_h(D1) = 16u^2 (16u^2-12u+3) (2808976u^4-765932u^3-318917u^2+131400u-11900)",
        disc == printed,
        vec![wit_str("difference", (&disc - &printed).to_display_string())],
    );

    // (c) sign of the discriminant factors on (0, 24/100]
    let u_small = Interval::open_closed(rational::zero(), rational::rat(24, 100)).unwrap();
    let quartic_sign = roots::sign_on_interval(&inputs.d1_disc_quartic, &u_small)
        .map(|s| s == SignClass::NonPositive)
        .unwrap_or(false);
    let quad_disc = resultant::discriminant(&inputs.d1_disc_quadratic)
        .unwrap_or_else(|_| rational::zero());
    let quad_positive = quad_disc < rational::zero()
        && inputs.d1_disc_quadratic.leading_coeff() > rational::zero();
    cert.check(
        "discriminant sign for u <= 24/100",
        "quartic factor <= 0 on (0, 24/100] and 16u^2-12u+3 > 0 everywhere",
        quartic_sign && quad_positive,
        vec![wit("disc(16u^2-12u+3)", &quad_disc)],
    );

    // (d) for u in [24/100, 1/4): the cubic factor of the critical point is
    // nonpositive, so the critical h is <= 0 and D1(h) >= D1(0) = 419 u^2
    let u_large = Interval::closed(rational::rat(24, 100), rational::rat(1, 4)).unwrap();
    let cubic_sign = roots::sign_on_interval(&inputs.d1_critical_cubic, &u_large)
        .map(|s| s == SignClass::NonPositive)
        .unwrap_or(false);
    let at_h0 = inputs.d1.substitute(H, &rational::zero()).expect("substitute h");
    let expected_h0 = Poly::from_ints(U, &[0, 0, 419]);
    let h0_val: Rational = at_h0.eval(&rational::rat(24, 100));
    cert.check(
        "critical point for u >= 24/100",
        "13408u^3-6856u^2+114u+181 <= 0 on [24/100, 1/4] and D1(0) = 419u^2 >= 0",
        cubic_sign && at_h0 == expected_h0,
        vec![wit("D1(0) at u=24/100", &h0_val)],
    );

    // edge u = 0: D1 reduces to 419 h^2
    let at_u0 = inputs.d1.substitute(U, &rational::zero()).expect("substitute u");
    cert.check(
        "edge u = 0",
        "D1|_{u=0} = 419 h^2",
        at_u0 == Poly::from_ints(H, &[0, 0, 419]),
        vec![wit_str("D1|_{u=0}", at_u0.to_display_string())],
    );

    cert.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certify::inputs::UH;
    use crate::rational::int;

    #[test]
    fn published_inputs_pass() {
        let cert = certify_lemma1_d1(&CertifyInputs::published());
        assert!(cert.passed(), "{:?}", cert.steps.iter().find(|s| !s.passed));
    }

    #[test]
    fn mutated_quartic_fails() {
        let mut inputs = CertifyInputs::published();
        // flip the sign of the quartic's constant term
        inputs.d1_disc_quartic = Poly::from_ints(
            U,
            &[11900, 131400, -318917, -765932, 2808976],
        );
        let cert = certify_lemma1_d1(&inputs);
        assert!(!cert.passed());
    }

    #[test]
    fn mutated_d1_coefficient_fails() {
        let mut inputs = CertifyInputs::published();
        // perturb D1 by adding a stray u*h term
        inputs.d1 = &inputs.d1
            + &crate::bipoly::BiPoly::monomial(UH, int(1), 1, 1);
        let cert = certify_lemma1_d1(&inputs);
        assert!(!cert.passed());
    }
}
