//! Certificate for the comparison kernel: the two maximum identities
//! behind `a(delta, b)`, the equality cases, and the domination audit
//! `r_{delta,b}(x) <= min(delta, x)`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::bipoly::BiPoly;
use crate::bounds::{self, Delta};
use crate::certify::inputs::{CertifyInputs, BX};
use crate::certify::{wit, wit_str, CertBuilder, Certificate, Sampler};
use crate::rational;

fn mono(c: i128, i: usize, j: usize) -> BiPoly {
    BiPoly::monomial(BX, rational::int(c), i, j)
}

pub fn certify_lemma_ab(inputs: &CertifyInputs) -> Certificate {
    let mut cert = CertBuilder::new("lemma-ab");

    // (i) max_{x>=0} (x^2/2 - b x^3/3) = 1/(6 b^2), certified by the exact
    // polynomial identity  6b^2 (1/(6b^2) - (x^2/2 - b x^3/3)) = (bx-1)^2 (2bx+1),
    // whose right side is nonnegative for b, x >= 0.
    let lhs1 = &(&mono(1, 0, 0) - &mono(3, 2, 2)) + &mono(2, 3, 3);
    let bx_minus_1 = &mono(1, 1, 1) - &mono(1, 0, 0);
    let rhs1 = &(&bx_minus_1 * &bx_minus_1) * &(&mono(2, 1, 1) + &mono(1, 0, 0));
    let id1 = (&lhs1 - &rhs1).is_zero();
    cert.check(
        "maximum of x^2/2 - b x^3/3 over x >= 0",
        "6b^2 (1/(6b^2) - (x^2/2 - b x^3/3)) = (bx-1)^2 (2bx+1) identically",
        id1,
        vec![wit_str("difference", (&lhs1 - &rhs1).to_display_string())],
    );

    // (ii) max_{x>0} (x/2 - b x^2/3) = 3/(16 b):
    // 48b (3/(16b) - x/2 + b x^2/3) = (4bx-3)^2.
    let lhs2 = &(&mono(9, 0, 0) - &mono(24, 1, 1)) + &mono(16, 2, 2);
    let f = &mono(4, 1, 1) - &mono(3, 0, 0);
    let rhs2 = &f * &f;
    let id2 = (&lhs2 - &rhs2).is_zero();
    cert.check(
        "maximum of x/2 - b x^2/3 over x > 0",
        "48b (3/(16b) - x/2 + b x^2/3) = (4bx-3)^2 identically",
        id2,
        vec![wit_str("difference", (&lhs2 - &rhs2).to_display_string())],
    );

    // case b = 0: the kernel is identically zero.
    let mut b0_ok = true;
    for (dn, dd) in [(1, 2), (1, 1), (7, 1)] {
        let delta = Delta::new(rational::rat(dn, dd)).unwrap();
        for xn in [0, 1, 5] {
            let r = &inputs.kernel_scale
                * bounds::r_kernel(&delta, &rational::zero(), &rational::int(xn));
            b0_ok &= r == rational::zero();
        }
    }
    cert.check(
        "case b = 0",
        "r_{delta,0} vanishes identically",
        b0_ok,
        vec![],
    );

    // equality case (i): b <= 8/(9 delta), x = 1/b gives r = delta exactly.
    let mut s = Sampler::new(0x5eed_ab01);
    let mut eq1 = (true, Vec::new());
    for _ in 0..200 {
        let d = s.unit(1000) * rational::int(10); // delta in (0, 10]
        let delta = Delta::new(d.clone()).unwrap();
        let cap = rational::rat(8, 9) / &d;
        let b = s.between(&rational::zero(), &cap, 997);
        let x = rational::one() / &b;
        let r = &inputs.kernel_scale * bounds::r_kernel(&delta, &b, &x);
        if r != d && eq1.0 {
            eq1 = (false, vec![wit("delta", &d), wit("b", &b), wit("r", &r)]);
        }
    }
    cert.check(
        "equality case b <= 8/(9 delta), x = 1/b",
        "r_{delta,b}(1/b) = delta exactly on 200 random pairs",
        eq1.0,
        eq1.1,
    );

    // equality case (ii): b >= 8/(9 delta), x = 3/(4b) gives r = x exactly.
    let mut eq2 = (true, Vec::new());
    for _ in 0..200 {
        let d = s.unit(1000) * rational::int(10);
        let delta = Delta::new(d.clone()).unwrap();
        let floor = rational::rat(8, 9) / &d;
        let b = &floor + s.unit(997) * rational::int(10);
        let x = rational::rat(3, 4) / &b;
        let r = &inputs.kernel_scale * bounds::r_kernel(&delta, &b, &x);
        if r != x && eq2.0 {
            eq2 = (false, vec![wit("delta", &d), wit("b", &b), wit("r", &r)]);
        }
    }
    cert.check(
        "equality case b >= 8/(9 delta), x = 3/(4b)",
        "r_{delta,b}(3/(4b)) = 3/(4b) exactly on 200 random pairs",
        eq2.0,
        eq2.1,
    );

    // domination audit: r <= min(delta, x) on a rational grid over
    // (0,10] x [0,10] x [0,10], about 10^4 points.
    let mut dom = (true, Vec::new());
    let n = 22i128;
    'grid: for i in 1..=n {
        let d = rational::rat(10 * i, n);
        let delta = Delta::new(d.clone()).unwrap();
        for j in 0..=n {
            let b = rational::rat(10 * j, n);
            for k in 0..=n {
                let x = rational::rat(10 * k, n);
                let r = &inputs.kernel_scale * bounds::r_kernel(&delta, &b, &x);
                let m = if d < x { d.clone() } else { x.clone() };
                if r > m {
                    dom = (
                        false,
                        vec![
                            wit("delta", &d),
                            wit("b", &b),
                            wit("x", &x),
                            wit("r", &r),
                            wit("min", &m),
                        ],
                    );
                    break 'grid;
                }
            }
        }
    }
    cert.check(
        "domination audit",
        "r_{delta,b}(x) <= min(delta, x) on the 22^3 rational grid over (0,10]^3",
        dom.0,
        dom.1,
    );

    let mut c = cert.finish();
    if inputs.kernel_scale != rational::one() {
        // record the mutation so a failing report names its cause
        c.steps.push(crate::certify::Step {
            description: alloc::string::String::from("kernel scale"),
            claim: format!(
                "audit ran with kernel scaled by {}",
                rational::to_fraction_string(&inputs.kernel_scale)
            ),
            witnesses: vec![],
            passed: true,
        });
    }
    c
}
