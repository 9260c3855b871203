//! Certificate for the theorem's assembly: the four branchwise identities
//! tying p_u - p to d1..d4, the two reduction steps, a sampled glue audit
//! against the bounds module, and the statuses of the six sub-certificates.

use alloc::vec;
use alloc::vec::Vec;

use crate::bipoly::BiPoly;
use crate::bounds::{self, Delta, ShiftBranch, ShiftPair};
use crate::certify::inputs::{CertifyInputs, D, UD, UH};
use crate::certify::{d2, run_one, wit, wit_str, CertBuilder, Certificate, Sampler};
use crate::poly::Poly;
use crate::rational::{self, Rational};

use num_traits::Zero;

/// `(Q + P (u+h))` as a BiPoly over the given pair of variables standing
/// for (u, h) or (u, delta).
fn q_plus_p_delta(vars: (crate::poly::Var, crate::poly::Var), p: &Rational, q: &Rational) -> BiPoly {
    &(&BiPoly::constant(vars, q.clone())
        + &BiPoly::monomial(vars, p.clone(), 1, 0))
        + &BiPoly::monomial(vars, p.clone(), 0, 1)
}

/// The lemma quantity d_i at an exact point, from its defining formula.
fn d_formula(branch: ShiftBranch, shift: &ShiftPair, c: &Rational) -> Rational {
    let delta = shift.delta();
    let p_of_delta = &delta / (rational::int(72) * (rational::one() + c * &delta));
    let one_minus_4u = rational::one() - rational::int(4) * shift.u();
    let head = shift.u() / rational::int(72);
    match branch {
        ShiftBranch::Cubic => {
            head + rational::pow(&one_minus_4u, 3) * shift.h() / rational::int(72) - p_of_delta
        }
        ShiftBranch::Kink => {
            head + rational::int(128) / (rational::int(27) * shift.h())
                * (rational::rat(1, 4) - shift.u() - rational::rat(8, 9) / shift.h())
                - p_of_delta
        }
        ShiftBranch::Quadratic => {
            head + rational::pow(&one_minus_4u, 2) / rational::int(12) - p_of_delta
        }
        ShiftBranch::Zero => head - p_of_delta,
    }
}

pub fn certify_theorem_assembly(inputs: &CertifyInputs) -> Certificate {
    let mut cert = CertBuilder::new("theorem");
    let (p, q) = inputs.c_parts();

    // branch 1: 72 (Q + P(u+h)) d1 = (Q + P(u+h))(u + (1-4u)^3 h) - Q(u+h)
    // equals the printed D1, an exact polynomial identity in (u, h).
    let u = BiPoly::monomial(UH, rational::one(), 1, 0);
    let h = BiPoly::monomial(UH, rational::one(), 0, 1);
    let one_minus_4u =
        &BiPoly::constant(UH, rational::one()) - &u.scale(&rational::int(4));
    let cube = &(&one_minus_4u * &one_minus_4u) * &one_minus_4u;
    let inner1 = &u + &(&cube * &h);
    let lhs1 = &(&q_plus_p_delta(UH, &p, &q) * &inner1) - &(&u + &h).scale(&q);
    cert.check(
        "branch h <= r2(u)",
        "72 (100 + 419 (h+u)) d1 expands to the printed D1",
        lhs1 == inputs.d1,
        vec![wit_str("difference", (&lhs1 - &inputs.d1).to_display_string())],
    );

    // branch 2: s h^2 (Q + P(h+u)) d2 equals the printed D2 for the scalar
    // s solved from the coefficients (the d2 certificate isolates the rest).
    let cleared = d2::cleared_d2(&inputs.c);
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
    cert.check(
        "branch r2(u) <= h <= r1(u)",
        "s h^2 (100 + 419 (h+u)) d2 expands to the printed D2 for one rational s",
        !s.is_zero() && inputs.d2 == cleared.scale(&s),
        vec![wit("s", &s)],
    );

    // branch 3: 72 (Q + P delta) d3 = (Q + P delta)(u + 6 (1-4u)^2) - Q delta
    // equals the printed D3, exact in (u, delta).
    let uu = BiPoly::monomial(UD, rational::one(), 1, 0);
    let dd = BiPoly::monomial(UD, rational::one(), 0, 1);
    let m = &BiPoly::constant(UD, rational::one()) - &uu.scale(&rational::int(4));
    let inner3 = &uu + &(&m * &m).scale(&rational::int(6));
    let q_plus_pd = &BiPoly::constant(UD, q.clone()) + &dd.scale(&p);
    let lhs3 = &(&q_plus_pd * &inner3) - &dd.scale(&q);
    let printed3 = &(&BiPoly::from_poly(UD, &inputs.d3_delta_coeff).expect("u poly") * &dd)
        + &BiPoly::from_poly(UD, &inputs.d3_const_coeff.scale(&rational::int(100)))
            .expect("u poly");
    cert.check(
        "branch h >= r1(u)",
        "72 (100 + 419 delta) d3 expands to the printed D3",
        lhs3 == printed3,
        vec![wit_str("difference", (&lhs3 - &printed3).to_display_string())],
    );

    // branch 4: u >= 1/4 only needs c >= 4
    cert.check(
        "branch u >= 1/4",
        "d4 >= 1/288 - 1/(72c) >= 0, i.e. c >= 4",
        inputs.c >= rational::int(4),
        vec![wit("c", &inputs.c)],
    );

    // reduction u >= delta: P(0<X<delta) >= delta/72 >= p(delta), from the
    // identity delta (Q + P delta) - Q delta = P delta^2 >= 0.
    let dpoly = Poly::monomial(D, rational::one(), 1);
    let qp = &Poly::constant(D, q.clone()) + &Poly::monomial(D, p.clone(), 1);
    let reduction = &(&dpoly * &qp) - &dpoly.scale(&q)
        == Poly::monomial(D, p.clone(), 2);
    cert.check(
        "reduction for u >= delta",
        "delta/72 - p(delta) = c delta^2 / (72 (1 + c delta)) >= 0",
        reduction && p > rational::zero(),
        vec![],
    );

    // reflection step: on the first branch p1(delta) = delta/72 exactly,
    // so p1(delta)/delta = 1/72 and the density floor f(0) >= 1/72 follows.
    let mut reflect = true;
    for (n, den) in [(1i128, 1000i128), (1, 1), (16, 3)] {
        let delta = Delta::new(rational::rat(n, den)).unwrap();
        reflect &= rational::int(72) * bounds::p1(&delta) == rational::rat(n, den);
    }
    cert.check(
        "reflection step",
        "p1(delta)/delta = 1/72 exactly for delta <= 16/3",
        reflect,
        vec![],
    );

    // glue audit: p_u(delta) - p(delta) computed by the bounds module
    // equals the matching d_i formula, exactly, on random points per branch.
    let mut smp = Sampler::new(0x5eed_9107);
    let mut glue = (true, Vec::new());
    for k in 0..200 {
        let u = if k % 4 == 3 {
            rational::rat(1, 4) + smp.unit(997)
        } else {
            smp.unit(1009) * rational::rat(1, 4)
        };
        let h = match k % 4 {
            0 => {
                let r2 = bounds::threshold_r2(&u).unwrap();
                smp.between(&rational::zero(), &r2, 991)
            }
            1 => {
                let r2 = bounds::threshold_r2(&u).unwrap();
                let r1 = bounds::threshold_r1(&u).unwrap();
                smp.between(&r2, &r1, 991)
            }
            _ => bounds::threshold_r1(&rational::rat(6, 25)).unwrap() + smp.unit(991) * rational::int(10),
        };
        let shift = ShiftPair::from_u_h(u.clone(), h.clone()).unwrap();
        let (branch, _) = bounds::shift_branch(&shift);
        let delta = Delta::new(shift.delta()).unwrap();
        let gap = bounds::p_u_bound(&shift) - bounds::p_bound(&delta);
        let di = d_formula(branch, &shift, &inputs.c);
        if (gap != di || di < rational::zero()) && glue.0 {
            glue = (
                false,
                vec![
                    wit("u", &u),
                    wit("h", &h),
                    wit_str("branch", branch.tag()),
                    wit("p_u - p", &gap),
                    wit("d_i", &di),
                ],
            );
        }
    }
    cert.check(
        "glue audit",
        "p_u(delta) - p(delta) equals the branch's d_i and is >= 0 on 200 random exact points",
        glue.0,
        glue.1,
    );

    // sub-certificates: every lemma certificate must pass
    let mut subs_ok = true;
    let mut subs_wit = Vec::new();
    for name in ["lemma-ab", "d1", "d2", "d3", "d4", "ratio"] {
        let sub = run_one(name, inputs).expect("known name");
        subs_ok &= sub.passed();
        subs_wit.push(wit_str(name, sub.status.as_str()));
    }
    cert.check(
        "sub-certificates",
        "all six lemma certificates pass",
        subs_ok,
        subs_wit,
    );

    cert.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn published_inputs_pass() {
        let cert = certify_theorem_assembly(&CertifyInputs::published());
        assert!(cert.passed(), "{:?}", cert.steps.iter().find(|s| !s.passed));
    }

    #[test]
    fn mutated_c_fails_branch_4_and_subs() {
        let mut inputs = CertifyInputs::published();
        inputs.c = rational::rat(39, 10);
        let cert = certify_theorem_assembly(&inputs);
        assert!(!cert.passed());
        assert!(cert
            .steps
            .iter()
            .any(|s| s.description == "branch u >= 1/4" && !s.passed));
    }

    #[test]
    fn mutated_d1_breaks_branch_identity() {
        let mut inputs = CertifyInputs::published();
        inputs.d1 = &inputs.d1 + &BiPoly::monomial(UH, rational::one(), 0, 0);
        let cert = certify_theorem_assembly(&inputs);
        let bad = cert.steps.iter().find(|s| !s.passed).unwrap();
        assert_eq!(bad.description, "branch h <= r2(u)");
    }
}
