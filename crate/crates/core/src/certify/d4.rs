//! Certificate for d4 >= 0: the one-line chain for u >= 1/4, which only
//! needs c >= 4.

use alloc::vec;

use crate::bounds::{self, Delta};
use crate::certify::inputs::{CertifyInputs, D};
use crate::certify::{wit, CertBuilder, Certificate, Sampler};
use crate::poly::Poly;
use crate::rational::{self, Rational};

pub fn certify_lemma4_d4(inputs: &CertifyInputs) -> Certificate {
    let mut cert = CertBuilder::new("d4");
    let (p, q) = inputs.c_parts();

    // (a) delta/(72 (1 + c delta)) < 1/(72c) for every delta > 0, via the
    // cleared identity (Q + P delta) - P delta = Q.
    let q_plus = &Poly::constant(D, q.clone()) + &Poly::monomial(D, p.clone(), 1);
    let identity = &q_plus - &Poly::monomial(D, p.clone(), 1) == Poly::constant(D, q.clone());
    cert.check(
        "tail bound identity",
        "1/(72c) - delta/(72 (1 + c delta)) = 1/(72 c (1 + c delta)) identically",
        identity && p > rational::zero(),
        vec![],
    );

    // (b) the floor: for u >= 1/4, d4 >= 1/288 - 1/(72c), nonnegative
    // exactly when c >= 4.
    let margin: Rational =
        rational::rat(1, 288) - rational::one() / (rational::int(72) * &inputs.c);
    cert.check(
        "floor at u = 1/4",
        "1/288 - 1/(72c) >= 0, i.e. c >= 4",
        margin >= rational::zero() && inputs.c >= rational::int(4),
        vec![wit("margin", &margin), wit("c", &inputs.c)],
    );

    // (c) audit: d4 = u/72 - delta/(72 (1 + c delta)) >= margin on random
    // exact points with u >= 1/4.
    let mut s = Sampler::new(0x5eed_d401);
    let mut audit = (true, vec![]);
    for _ in 0..200 {
        let u = rational::rat(1, 4) + s.unit(997) * rational::int(5);
        let d = s.unit(1009) * rational::int(20);
        let delta = Delta::new(d.clone()).unwrap();
        let d4 = &u / rational::int(72)
            - d / (rational::int(72) * (rational::one() + &inputs.c * delta.value()));
        if d4 < margin && audit.0 {
            audit = (false, vec![wit("u", &u), wit("delta", delta.value()), wit("d4", &d4)]);
        }
    }
    // the bounds module agrees: its fourth branch gives p_u = u/72
    let shift = bounds::ShiftPair::from_u_h(rational::rat(1, 4), rational::one()).unwrap();
    let fourth_branch = bounds::p_u_bound(&shift) == rational::rat(1, 288);
    cert.check(
        "audit for u >= 1/4",
        "d4 >= 1/288 - 1/(72c) on 200 random exact points; p_u(1/4 + h) = 1/288 + 0",
        audit.0 && fourth_branch,
        audit.1,
    );

    cert.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn published_inputs_pass() {
        let cert = certify_lemma4_d4(&CertifyInputs::published());
        assert!(cert.passed(), "{:?}", cert.steps.iter().find(|s| !s.passed));
    }

    #[test]
    fn boundary_c_equals_4_passes() {
        let mut inputs = CertifyInputs::published();
        inputs.c = rational::int(4);
        assert!(certify_lemma4_d4(&inputs).passed());
    }

    #[test]
    fn c_below_4_fails() {
        let mut inputs = CertifyInputs::published();
        inputs.c = rational::rat(39, 10);
        let cert = certify_lemma4_d4(&inputs);
        assert!(!cert.passed());
        let bad = cert.steps.iter().find(|s| !s.passed).unwrap();
        assert_eq!(bad.description, "floor at u = 1/4");
    }
}
