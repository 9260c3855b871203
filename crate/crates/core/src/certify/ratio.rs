//! Certificate for r1(delta) = p1(delta)/p(delta) >= 1: the middle branch
//! is concave (printed second derivative), so its minimum over
//! [16/3, 64/9] sits at an endpoint, where the value is checked exactly.

use alloc::vec;

use crate::bounds::{self, Delta};
use crate::certify::inputs::{CertifyInputs, D};
use crate::certify::{wit, CertBuilder, Certificate};
use crate::interval::Interval;
use crate::poly::Poly;
use crate::rational::{self, Rational};
use crate::roots::{self, SignClass};

/// One quotient-rule step on a rational function num/den.
fn derivative(num: &Poly, den: &Poly) -> (Poly, Poly) {
    (
        &(&num.derivative() * den) - &(num * &den.derivative()),
        den * den,
    )
}

pub fn certify_ratio(inputs: &CertifyInputs) -> Certificate {
    let mut cert = CertBuilder::new("ratio");
    let (p, q) = inputs.c_parts();

    // (a) second derivative of the middle branch
    // 256 (9 delta - 32)(1 + c delta) / (27 delta^3), computed symbolically,
    // equals the printed 512 (3c delta^2 + (9 - 32c) delta - 64) / (9 delta^5).
    let num0 = &Poly::from_ints(D, &[-32, 9]).scale(&rational::int(256))
        * &(&Poly::constant(D, q.clone()) + &Poly::monomial(D, p.clone(), 1));
    let den0 = Poly::monomial(D, &q * rational::int(27), 3);
    let (num1, den1) = derivative(&num0, &den0);
    let (num2, den2) = derivative(&num1, &den1);
    // printed, cleared of c = P/Q: numerator times Q
    let printed_num = Poly::new(
        D,
        alloc::vec![
            rational::int(-64) * &q,
            rational::int(9) * &q - rational::int(32) * &p,
            rational::int(3) * &p,
        ],
    )
    .scale(&rational::int(512));
    let printed_den = Poly::monomial(D, &q * rational::int(9), 5);
    let second_matches = &num2 * &printed_den == &printed_num * &den2;
    cert.check(
        "second derivative of the middle branch",
        "d^2/d delta^2 [256 (9d-32)(1+cd) / (27 d^3)] = 512 (3c d^2 + (9-32c) d - 64) / (9 d^5)",
        second_matches,
        vec![],
    );

    // (b) the concavity quadratic, cleared to integers, is <= 0 on [16/3, 64/9]
    let cleared = Poly::new(
        D,
        alloc::vec![
            rational::int(-64) * &q,
            rational::int(9) * &q - rational::int(32) * &p,
            rational::int(3) * &p,
        ],
    );
    let seg = Interval::closed(rational::rat(16, 3), rational::rat(64, 9)).unwrap();
    let printed_quad_matches = cleared == inputs.ratio_quadratic;
    let quad_sign = roots::sign_on_interval(&inputs.ratio_quadratic, &seg)
        .map(|s| s == SignClass::NonPositive)
        .unwrap_or(false);
    cert.check(
        "concavity quadratic",
        "100 (3c d^2 + (9-32c) d - 64) = 1257 d^2 - 12508 d - 6400 <= 0 on [16/3, 64/9]",
        printed_quad_matches && quad_sign,
        vec![wit("value at delta=6", &inputs.ratio_quadratic.eval(&rational::int(6)))],
    );

    // (c) endpoint values of r1, exactly, and breakpoint agreement from
    // both sides (middle expression evaluated at each breakpoint)
    let left = Delta::new(rational::rat(16, 3)).unwrap();
    let right = Delta::new(rational::rat(64, 9)).unwrap();
    let r_left = bounds::ratio_r1(&left);
    let r_right = bounds::ratio_r1(&right);
    let middle = |d: &Rational| -> Rational {
        rational::int(256)
            * (rational::int(9) * d - rational::int(32))
            * (rational::one() + &inputs.c * d)
            / (rational::int(27) * rational::pow(d, 3))
    };
    let endpoints_ok = r_left >= rational::one()
        && r_right >= rational::one()
        && r_left == middle(&rational::rat(16, 3))
        && r_right == middle(&rational::rat(64, 9));
    cert.check(
        "endpoint values",
        "r1(16/3) >= 1 and r1(64/9) >= 1 exactly, agreeing from both branches",
        endpoints_ok,
        vec![wit("r1(16/3)", &r_left), wit("r1(64/9)", &r_right)],
    );

    // (d) outer branches are >= 1 trivially: 1 + c delta >= 1 since c > 0,
    // and 6 (c + 1/delta) >= 6c >= 1.
    let six_c = rational::int(6) * &inputs.c;
    cert.check(
        "outer branches",
        "c > 0 makes 1 + c delta >= 1, and 6c >= 1 makes 6 (c + 1/delta) >= 1",
        inputs.c > rational::zero() && six_c >= rational::one(),
        vec![wit("6c", &six_c)],
    );

    cert.finish()
}
