//! Certificate for d3 >= 0: D3 is linear in delta with quadratic
//! coefficients in u that are positive for every real u.

use alloc::vec;

use crate::bipoly::BiPoly;
use crate::certify::inputs::{CertifyInputs, UD};
use crate::certify::{wit, CertBuilder, Certificate};
use crate::rational::{self, Rational};
use crate::resultant;

pub fn certify_lemma3_d3(inputs: &CertifyInputs) -> Certificate {
    let mut cert = CertBuilder::new("d3");
    let (p, q) = inputs.c_parts();

    // (a) symbolic reconstruction: 72 (Q + P delta) d3 expanded from
    // d3 = u/72 + (1-4u)^2/12 - delta/(72 (1 + c delta)) equals the printed
    // D3 = (40224u^2-19693u+2414) delta + 100 (96u^2-47u+6).
    let u = BiPoly::monomial(UD, rational::one(), 1, 0);
    let d = BiPoly::monomial(UD, rational::one(), 0, 1);
    let one_minus_4u = &BiPoly::constant(UD, rational::one()) - &u.scale(&rational::int(4));
    let inner = &u
        + &(&one_minus_4u * &one_minus_4u).scale(&rational::int(6));
    let cleared = &(&(&BiPoly::constant(UD, q.clone()) + &d.scale(&p)) * &inner)
        - &d.scale(&q);
    let printed = &(&BiPoly::from_poly(UD, &inputs.d3_delta_coeff).expect("u poly") * &d)
        + &BiPoly::from_poly(UD, &inputs.d3_const_coeff.scale(&rational::int(100)))
            .expect("u poly");
    cert.check(
        "symbolic reconstruction",
        "72 (100 + 419 delta) d3 = (40224u^2-19693u+2414) delta + 100 (96u^2-47u+6)",
        cleared == printed,
        vec![wit("delta coefficient at u=0", &inputs.d3_delta_coeff.eval(&rational::zero()))],
    );

    // (b) the delta coefficient is positive for all real u
    let disc1 = resultant::discriminant(&inputs.d3_delta_coeff)
        .unwrap_or_else(|_| rational::zero());
    cert.check(
        "delta coefficient positive",
        "disc(40224u^2-19693u+2414) < 0 with positive leading coefficient",
        disc1 < rational::zero() && inputs.d3_delta_coeff.leading_coeff() > rational::zero(),
        vec![wit("discriminant", &disc1)],
    );

    // (c) the constant coefficient is positive for all real u
    let disc2 = resultant::discriminant(&inputs.d3_const_coeff)
        .unwrap_or_else(|_| rational::zero());
    cert.check(
        "constant coefficient positive",
        "disc(96u^2-47u+6) < 0 with positive leading coefficient",
        disc2 < rational::zero() && inputs.d3_const_coeff.leading_coeff() > rational::zero(),
        vec![wit("discriminant", &disc2)],
    );

    // (d) spot value: D3(delta=1) at u=0 is 2414 + 600 = 3014 > 0
    let spot: Rational = printed.eval(&rational::zero(), &rational::one());
    cert.check(
        "spot value",
        "D3(1) at u = 0 equals 3014 > 0",
        spot == rational::int(3014),
        vec![wit("D3(1)|_{u=0}", &spot)],
    );

    cert.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Poly;
    use crate::certify::inputs::U;

    #[test]
    fn published_inputs_pass() {
        let cert = certify_lemma3_d3(&CertifyInputs::published());
        assert!(cert.passed(), "{:?}", cert.steps.iter().find(|s| !s.passed));
        assert_eq!(cert.steps[1].witnesses[0].1, "-588695");
        assert_eq!(cert.steps[2].witnesses[0].1, "-95");
    }

    #[test]
    fn mutated_delta_coefficient_fails() {
        let mut inputs = CertifyInputs::published();
        inputs.d3_delta_coeff = Poly::from_ints(U, &[2414, -19693, -40224]);
        assert!(!certify_lemma3_d3(&inputs).passed());
    }

    #[test]
    fn mutated_constant_coefficient_fails() {
        let mut inputs = CertifyInputs::published();
        // 96u^2 - 40u + 4 has real roots: reconstruction and sign both break
        inputs.d3_const_coeff = Poly::from_ints(U, &[4, -40, 96]);
        assert!(!certify_lemma3_d3(&inputs).passed());
    }

    #[test]
    fn uses_d_variable() {
        // the delta variable tag is 'd' by convention
        assert_eq!(crate::certify::inputs::D, crate::poly::Var('d'));
    }
}
