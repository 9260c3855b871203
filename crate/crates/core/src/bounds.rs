//! The closed-form bound functions, evaluated in exact rational arithmetic.
//!
//! Conventions: `delta` is measured in standard deviations, `c = 419/100`
//! throughout, and the proof's two different uses of the symbol r₁ are split
//! into [`ratio_r1`] (the ratio p₁/p) and [`threshold_r1`] (the shifted
//! analysis breakpoint 64/(9(1-4u))).

use alloc::string::String;
use alloc::vec::Vec;

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

/// `c = 419/100`, the constant of the main bound.
pub fn c_const() -> Rational {
    rational::rat(419, 100)
}

/// A positive offset from the mean, in units of the standard deviation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Delta(Rational);

impl Delta {
    pub fn new(value: Rational) -> Result<Self> {
        if value.is_positive() {
            Ok(Delta(value))
        } else {
            Err(Error::Domain("delta must be positive"))
        }
    }

    pub fn value(&self) -> &Rational {
        &self.0
    }
}

/// Peak location `u >= 0` together with `h = delta - u`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftPair {
    u: Rational,
    h: Rational,
}

impl ShiftPair {
    /// From `0 < u < delta`.
    pub fn new(u: Rational, delta: &Delta) -> Result<Self> {
        if u.is_negative() {
            return Err(Error::Domain("u must be nonnegative"));
        }
        let h = delta.value() - &u;
        if !h.is_positive() {
            return Err(Error::Domain("u must be less than delta"));
        }
        Ok(ShiftPair { u, h })
    }

    /// Directly from `(u, h)` with `h > 0`.
    pub fn from_u_h(u: Rational, h: Rational) -> Result<Self> {
        if u.is_negative() {
            return Err(Error::Domain("u must be nonnegative"));
        }
        if !h.is_positive() {
            return Err(Error::Domain("h must be positive"));
        }
        Ok(ShiftPair { u, h })
    }

    pub fn u(&self) -> &Rational {
        &self.u
    }

    pub fn h(&self) -> &Rational {
        &self.h
    }

    pub fn delta(&self) -> Rational {
        &self.u + &self.h
    }
}

/// The theorem's bound `p(delta) = delta / (72 (1 + c delta))`.
pub fn p_bound(delta: &Delta) -> Rational {
    let d = delta.value();
    d / (rational::int(72) * (rational::one() + c_const() * d))
}

/// `a(delta, b) = min(16b/3, 6 b^2 delta)`; the `16b/3` branch is active
/// iff `b >= 8/(9 delta)`.
pub fn a_factor(delta: &Delta, b: &Rational) -> Rational {
    let first = rational::rat(16, 3) * b;
    let second = rational::int(6) * b * b * delta.value();
    first.min(second)
}

/// The comparison kernel `r_{delta,b}(x) = a(delta, b) (x^2/2 - b x^3/3)`,
/// which is dominated by `min(delta, x)` for all `b, x >= 0`.
pub fn r_kernel(delta: &Delta, b: &Rational, x: &Rational) -> Rational {
    let inner = x * x / rational::int(2) - b * x * x * x / rational::int(3);
    a_factor(delta, b) * inner
}

/// `p_2(delta, b) = a(delta, b) (1/4 - b)`; negative for `b > 1/4`.
pub fn p2(delta: &Delta, b: &Rational) -> Rational {
    a_factor(delta, b) * (rational::rat(1, 4) - b)
}

/// The three-branch lower bound for densities nonincreasing on the right.
pub fn p1(delta: &Delta) -> Rational {
    let d = delta.value();
    if d <= &rational::rat(16, 3) {
        d / rational::int(72)
    } else if d <= &rational::rat(64, 9) {
        // 32 (9 delta - 32) / (243 delta^2)
        rational::int(32) * (rational::int(9) * d - rational::int(32))
            / (rational::int(243) * d * d)
    } else {
        rational::rat(1, 12)
    }
}

/// The maximizer `b_delta` with `p_2(delta, b_delta) = p_1(delta)`.
pub fn b_star(delta: &Delta) -> Rational {
    let d = delta.value();
    if d <= &rational::rat(16, 3) {
        rational::rat(1, 6)
    } else if d <= &rational::rat(64, 9) {
        rational::rat(8, 9) / d
    } else {
        rational::rat(1, 8)
    }
}

/// The ratio `r_1(delta) = p_1(delta) / p(delta)`, computed branch by
/// branch; it is at least 1 for every positive `delta`, which is what
/// reduces the monotone case of the theorem to `p_1`.
pub fn ratio_r1(delta: &Delta) -> Rational {
    let d = delta.value();
    let c = c_const();
    if d <= &rational::rat(16, 3) {
        rational::one() + c * d
    } else if d <= &rational::rat(64, 9) {
        // 256 (9 delta - 32)(1 + c delta) / (27 delta^3)
        rational::int(256)
            * (rational::int(9) * d - rational::int(32))
            * (rational::one() + c * d)
            / (rational::int(27) * d * d * d)
    } else {
        rational::int(6) * (c + rational::one() / d)
    }
}

/// Shifted-analysis breakpoint `r_1(u) = (64/9) / (1 - 4u)`, for `u < 1/4`.
pub fn threshold_r1(u: &Rational) -> Result<Rational> {
    let den = rational::one() - rational::int(4) * u;
    if !den.is_positive() {
        return Err(Error::Domain("threshold defined only for u < 1/4"));
    }
    Ok(rational::rat(64, 9) / den)
}

/// Shifted-analysis breakpoint `r_2(u) = (16/3) / (1 - 4u)`, for `u < 1/4`.
pub fn threshold_r2(u: &Rational) -> Result<Rational> {
    let den = rational::one() - rational::int(4) * u;
    if !den.is_positive() {
        return Err(Error::Domain("threshold defined only for u < 1/4"));
    }
    Ok(rational::rat(16, 3) / den)
}

/// `p_{2;u}(delta, b) = a(delta - u, b) (1/4 - u - b)`.
pub fn p2_shifted(shift: &ShiftPair, b: &Rational) -> Rational {
    let h = Delta::new(shift.h().clone()).expect("h > 0 by construction");
    a_factor(&h, b) * (rational::rat(1, 4) - shift.u() - b)
}

/// Branch tag for [`p1_shifted`], matching the four-case maximization.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ShiftBranch {
    /// `u < 1/4`, `h <= r_2(u)`: maximum `(1/72)(1-4u)^3 h` at `b_{2;u}`.
    Cubic,
    /// `u < 1/4`, `r_2(u) <= h <= r_1(u)`: maximum at the kink `b_u`.
    Kink,
    /// `u < 1/4`, `h >= r_1(u)`: maximum `(1/12)(1-4u)^2` at `b_{1;u}`.
    Quadratic,
    /// `u >= 1/4`: the maximum over `b >= 0` is 0.
    Zero,
}

impl ShiftBranch {
    pub fn tag(&self) -> &'static str {
        match self {
            ShiftBranch::Cubic => "h<=r2",
            ShiftBranch::Kink => "r2<=h<=r1",
            ShiftBranch::Quadratic => "h>=r1",
            ShiftBranch::Zero => "u>=1/4",
        }
    }
}

/// Which of the four branches is active, and the maximizer `b` (when the
/// branch value is positive).
pub fn shift_branch(shift: &ShiftPair) -> (ShiftBranch, Option<Rational>) {
    let quarter = rational::rat(1, 4);
    if shift.u() >= &quarter {
        return (ShiftBranch::Zero, None);
    }
    let one_minus_4u = rational::one() - rational::int(4) * shift.u();
    let r2 = rational::rat(16, 3) / &one_minus_4u;
    let r1 = rational::rat(64, 9) / &one_minus_4u;
    let margin = &quarter - shift.u();
    if shift.h() <= &r2 {
        (ShiftBranch::Cubic, Some(rational::rat(2, 3) * margin))
    } else if shift.h() <= &r1 {
        (ShiftBranch::Kink, Some(rational::rat(8, 9) / shift.h()))
    } else {
        (ShiftBranch::Quadratic, Some(rational::rat(1, 2) * margin))
    }
}

/// `p_{1;u}(delta) = max_{b >= 0} p_{2;u}(delta, b)`, by the printed
/// four-branch formula.
pub fn p1_shifted(shift: &ShiftPair) -> Rational {
    let (branch, _) = shift_branch(shift);
    let one_minus_4u = rational::one() - rational::int(4) * shift.u();
    match branch {
        ShiftBranch::Zero => rational::zero(),
        ShiftBranch::Cubic => {
            rational::pow(&one_minus_4u, 3) * shift.h() / rational::int(72)
        }
        ShiftBranch::Kink => {
            // (128 / 27h) (1/4 - u - 8/(9h))
            rational::int(128) / (rational::int(27) * shift.h())
                * (rational::rat(1, 4) - shift.u() - rational::rat(8, 9) / shift.h())
        }
        ShiftBranch::Quadratic => {
            rational::pow(&one_minus_4u, 2) / rational::int(12)
        }
    }
}

/// `p_u(delta) = u/72 + p_{1;u}(delta)`, the bound for a density peaking
/// at `u` with `0 < u < delta`. Dominates `p(delta)` everywhere.
pub fn p_u_bound(shift: &ShiftPair) -> Rational {
    shift.u() / rational::int(72) + p1_shifted(shift)
}

/// All named quantities at one `delta` (and optionally one shift), for
/// reports and the CLI.
#[derive(Debug, Clone)]
pub struct BoundReport {
    pub delta: Rational,
    pub p: Rational,
    pub p1: Rational,
    pub b_star: Rational,
    pub ratio_r1: Rational,
    pub p1_branch: &'static str,
    pub shifted: Option<ShiftedReport>,
}

#[derive(Debug, Clone)]
pub struct ShiftedReport {
    pub u: Rational,
    pub h: Rational,
    pub branch: &'static str,
    pub p1_shifted: Rational,
    pub p_u: Rational,
}

pub fn bound_report(delta: &Delta, u: Option<&Rational>) -> Result<BoundReport> {
    let d = delta.value();
    let p1_branch = if d <= &rational::rat(16, 3) {
        "delta<=16/3"
    } else if d <= &rational::rat(64, 9) {
        "16/3<=delta<=64/9"
    } else {
        "delta>=64/9"
    };
    let shifted = match u {
        None => None,
        Some(u) => {
            let shift = ShiftPair::new(u.clone(), delta)?;
            let (branch, _) = shift_branch(&shift);
            Some(ShiftedReport {
                u: shift.u().clone(),
                h: shift.h().clone(),
                branch: branch.tag(),
                p1_shifted: p1_shifted(&shift),
                p_u: p_u_bound(&shift),
            })
        }
    };
    Ok(BoundReport {
        delta: d.clone(),
        p: p_bound(delta),
        p1: p1(delta),
        b_star: b_star(delta),
        ratio_r1: ratio_r1(delta),
        p1_branch,
        shifted,
    })
}

/// Witness lines for a bound report, as (name, exact fraction) pairs.
pub fn report_witnesses(r: &BoundReport) -> Vec<(String, String)> {
    use alloc::string::ToString;
    let f = rational::to_fraction_string;
    let mut out = alloc::vec![
        ("delta".to_string(), f(&r.delta)),
        ("p".to_string(), f(&r.p)),
        ("p1".to_string(), f(&r.p1)),
        ("b_star".to_string(), f(&r.b_star)),
        ("ratio_r1".to_string(), f(&r.ratio_r1)),
        ("p1_branch".to_string(), r.p1_branch.to_string()),
    ];
    if let Some(s) = &r.shifted {
        out.push(("u".to_string(), f(&s.u)));
        out.push(("h".to_string(), f(&s.h)));
        out.push(("shift_branch".to_string(), s.branch.to_string()));
        out.push(("p1_shifted".to_string(), f(&s.p1_shifted)));
        out.push(("p_u".to_string(), f(&s.p_u)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, one, rat, zero};

    fn d(n: i128, den: i128) -> Delta {
        Delta::new(rat(n, den)).unwrap()
    }

    #[test]
    fn p_bound_examples() {
        // p(1) = 1/(72 (1 + 419/100)) = 25/9342
        assert_eq!(p_bound(&d(1, 1)), rat(25, 9342));
        // p(delta)/delta at tiny delta approaches 1/72 from below
        let tiny = d(1, 1_000_000_000);
        let slope = p_bound(&tiny) / tiny.value();
        assert!(slope < rat(1, 72));
        assert!(slope > rat(1, 72) - rat(1, 100_000_000));
        // large-delta limit 100/(72*419)
        let big = d(1_000_000_000, 1);
        let lim = rat(100, 72 * 419);
        assert!(p_bound(&big) < lim);
        assert!(lim - p_bound(&big) < rat(1, 1_000_000_000));
    }

    #[test]
    fn a_factor_branches() {
        assert_eq!(a_factor(&d(1, 1), &zero()), zero());
        // threshold continuity at b = 8/(9 delta)
        assert_eq!(a_factor(&d(1, 1), &rat(8, 9)), rat(128, 27));
        assert_eq!(
            rat(16, 3) * rat(8, 9),
            int(6) * rat(8, 9) * rat(8, 9) * int(1)
        );
        // below threshold the 6 b^2 delta branch is active
        assert_eq!(a_factor(&d(1, 1), &rat(1, 6)), rat(1, 6));
    }

    #[test]
    fn kernel_equality_cases() {
        // b <= 8/(9 delta), x = 1/b: kernel equals delta
        let delta = d(2, 1);
        let b = rat(1, 3); // 1/3 <= 8/18 = 4/9
        assert_eq!(r_kernel(&delta, &b, &(one() / &b)), int(2));
        // b >= 8/(9 delta), x = 3/(4b): kernel equals x
        let b2 = rat(1, 2); // 1/2 >= 4/9
        let x = rat(3, 4) / &b2;
        assert_eq!(r_kernel(&delta, &b2, &x), x);
        // x = 0 gives 0
        assert_eq!(r_kernel(&delta, &b, &zero()), zero());
    }

    #[test]
    fn p2_examples() {
        assert_eq!(p2(&d(1, 1), &rat(1, 4)), zero());
        assert_eq!(p2(&d(1, 1), &rat(1, 6)), rat(1, 72));
        assert_eq!(p2(&d(1, 1), &zero()), zero());
    }

    #[test]
    fn p1_branches_and_continuity() {
        assert_eq!(p1(&d(1, 1)), rat(1, 72));
        // breakpoint values from both sides
        assert_eq!(p1(&d(16, 3)), rat(2, 27));
        assert_eq!(
            int(32) * (int(9) * rat(16, 3) - int(32)) / (int(243) * rat(16, 3) * rat(16, 3)),
            rat(2, 27)
        );
        assert_eq!(p1(&d(64, 9)), rat(1, 12));
        assert_eq!(
            int(32) * (int(9) * rat(64, 9) - int(32)) / (int(243) * rat(64, 9) * rat(64, 9)),
            rat(1, 12)
        );
        assert_eq!(p1(&d(6, 1)), rat(32 * 22, 243 * 36));
    }

    #[test]
    fn b_star_maximizes_p2() {
        for (n, den) in [(1, 1), (16, 3), (6, 1), (64, 9), (8, 1), (1, 10), (20, 1)] {
            let delta = d(n, den);
            assert_eq!(p2(&delta, &b_star(&delta)), p1(&delta), "delta = {n}/{den}");
        }
        assert_eq!(b_star(&d(1, 1)), rat(1, 6));
        assert_eq!(b_star(&d(6, 1)), rat(4, 27));
        assert_eq!(b_star(&d(8, 1)), rat(1, 8));
    }

    #[test]
    fn ratio_examples() {
        assert_eq!(ratio_r1(&d(1, 1)), rat(519, 100));
        assert_eq!(ratio_r1(&d(64, 9)), int(6) * (rat(419, 100) + rat(9, 64)));
        // breakpoint agreement from both sides at 16/3 and 64/9
        let mid = |dv: Rational| {
            int(256) * (int(9) * &dv - int(32)) * (one() + c_const() * &dv)
                / (int(27) * &dv * &dv * &dv)
        };
        assert_eq!(ratio_r1(&d(16, 3)), mid(rat(16, 3)));
        assert_eq!(mid(rat(64, 9)), ratio_r1(&d(64, 9)));
        // >= 1 on a sample of the first branch
        for k in 1..=16 {
            let delta = d(k, 3);
            assert!(ratio_r1(&delta) >= one());
        }
    }

    #[test]
    fn shifted_consistency() {
        // u = 0 reduces p_{2;u} to p_2
        for (n, den, bn, bd) in [(1, 1, 1, 6), (3, 2, 1, 8), (7, 1, 2, 9), (1, 2, 1, 3)] {
            let delta = d(n, den);
            let shift = ShiftPair::from_u_h(zero(), rat(n, den)).unwrap();
            assert_eq!(p2_shifted(&shift, &rat(bn, bd)), p2(&delta, &rat(bn, bd)));
        }
        // b = 1/4 - u kills the factor
        let shift = ShiftPair::from_u_h(rat(1, 8), int(3)).unwrap();
        assert_eq!(p2_shifted(&shift, &rat(1, 8)), zero());
        // u >= 1/4 makes every value nonpositive
        let shift = ShiftPair::from_u_h(rat(1, 3), int(2)).unwrap();
        for b in [rat(1, 10), rat(1, 4), int(1)] {
            assert!(p2_shifted(&shift, &b) <= zero());
        }
    }

    #[test]
    fn p1_shifted_branches() {
        // u = 0, h = 1: first branch (r_2(0) = 16/3 >= 1)
        let s = ShiftPair::from_u_h(zero(), one()).unwrap();
        assert_eq!(p1_shifted(&s), rat(1, 72));
        // u >= 1/4: zero
        let s = ShiftPair::from_u_h(rat(1, 4), one()).unwrap();
        assert_eq!(p1_shifted(&s), zero());
        // u < 1/4, h >= r_1(u): (1/12)(1-4u)^2
        let u = rat(1, 8);
        let h = int(20); // r_1(1/8) = 128/9 < 20
        let s = ShiftPair::from_u_h(u.clone(), h).unwrap();
        let m = one() - int(4) * &u;
        assert_eq!(p1_shifted(&s), &m * &m / int(12));
    }

    #[test]
    fn p_u_examples() {
        // u -> 0+ at delta = 1 approaches p1(1) = 1/72
        let s = ShiftPair::from_u_h(rat(1, 1_000_000), one() - rat(1, 1_000_000)).unwrap();
        let v = p_u_bound(&s);
        assert!((v - rat(1, 72)).abs() < rat(1, 10_000));
        // u = 1/4, delta = 1: fourth branch, p_u = u/72 = 1/288
        let s = ShiftPair::from_u_h(rat(1, 4), rat(3, 4)).unwrap();
        assert_eq!(p_u_bound(&s), rat(1, 288));
    }

    #[test]
    fn p_u_dominates_p_on_grid() {
        // coarse exactness check; the dense grid lives in the test suite
        for dn in 1..=20 {
            let delta = d(dn, 1);
            for un in 1..(4 * dn).min(40) {
                let u = rat(un, 4);
                if &u >= delta.value() {
                    break;
                }
                let s = ShiftPair::new(u, &delta).unwrap();
                assert!(p_u_bound(&s) >= p_bound(&delta), "delta={dn} u={un}/4");
            }
        }
    }
}
