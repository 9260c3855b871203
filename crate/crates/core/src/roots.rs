//! Sturm sequences, exact real-root counting and isolation, and certified
//! sign classification on intervals.
//!
//! Everything here is exact: root brackets are bisected over the rationals
//! and no floating point enters any decision.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::interval::{Endpoint, Interval};
use crate::poly::Poly;
use crate::rational::{self, Rational};

/// Canonical Sturm chain: `p`, `p'`, then negated Euclidean remainders,
/// ending just before the zero polynomial.
pub fn sturm_sequence(p: &Poly) -> Result<Vec<Poly>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut chain = vec![p.clone()];
    let d = p.derivative();
    if d.is_zero() {
        return Ok(chain);
    }
    chain.push(d);
    loop {
        let n = chain.len();
        let r = chain[n - 2].divrem(&chain[n - 1])?.1;
        if r.is_zero() {
            return Ok(chain);
        }
        chain.push(-&r);
    }
}

fn variations(signs: impl Iterator<Item = i32>) -> usize {
    let mut count = 0;
    let mut last = 0;
    for s in signs {
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

fn variations_at(chain: &[Poly], x: &Endpoint) -> usize {
    match x {
        Endpoint::Finite(r) => variations(chain.iter().map(|p| p.sign_at(r))),
        Endpoint::PosInf => variations(chain.iter().map(|p| p.sign_at_pos_inf())),
        Endpoint::NegInf => variations(chain.iter().map(|p| p.sign_at_neg_inf())),
    }
}

/// Deterministic endpoint perturbation: move the endpoint inward by
/// `1/2^k` for k = 1, 2, … until the polynomial stops vanishing there.
fn perturb(p: &Poly, from: &Rational, toward: &Endpoint) -> Result<Rational> {
    let step_sign = match toward {
        Endpoint::PosInf => 1,
        Endpoint::NegInf => -1,
        Endpoint::Finite(t) => {
            if t > from {
                1
            } else {
                -1
            }
        }
    };
    let mut step = rational::rat(step_sign, 2);
    for _ in 0..64 {
        let cand = from + &step;
        let in_range = match toward {
            Endpoint::Finite(t) => {
                if step_sign > 0 {
                    &cand < t
                } else {
                    &cand > t
                }
            }
            _ => true,
        };
        if in_range && !p.eval(&cand).is_zero() {
            return Ok(cand);
        }
        step /= rational::int(2);
    }
    Err(Error::EndpointRoot)
}

/// Exact number of distinct real roots of `p` strictly between the
/// endpoints of `iv`. Endpoints where `p` vanishes are perturbed inward by
/// the deterministic `1/2^k` rule; 64 failed retries are an error.
pub fn count_roots(p: &Poly, iv: &Interval) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let chain = sturm_sequence(p)?;
    let lo = match &iv.lo {
        Endpoint::Finite(a) if p.eval(a).is_zero() => Endpoint::Finite(perturb(p, a, &iv.hi)?),
        other => other.clone(),
    };
    let hi = match &iv.hi {
        Endpoint::Finite(b) if p.eval(b).is_zero() => Endpoint::Finite(perturb(p, b, &iv.lo)?),
        other => other.clone(),
    };
    if let (Endpoint::Finite(a), Endpoint::Finite(b)) = (&lo, &hi) {
        if a >= b {
            return Ok(0);
        }
    }
    let va = variations_at(&chain, &lo);
    let vb = variations_at(&chain, &hi);
    Ok(va.saturating_sub(vb))
}

/// Finite bracket `[a, b]` covering all roots of `p` inside `iv`; infinite
/// endpoints are replaced by the Cauchy root bound.
fn bracket(p: &Poly, iv: &Interval) -> Option<(Rational, Rational)> {
    let bound = p.root_bound();
    let a = match &iv.lo {
        Endpoint::Finite(a) => a.clone(),
        Endpoint::NegInf => -&bound,
        Endpoint::PosInf => return None,
    };
    let b = match &iv.hi {
        Endpoint::Finite(b) => b.clone(),
        Endpoint::PosInf => {
            if bound > a {
                bound.clone()
            } else {
                &a + rational::one()
            }
        }
        Endpoint::NegInf => return None,
    };
    if a >= b {
        None
    } else {
        Some((a, b))
    }
}

/// Divides out `(x - root)` factors so the bracket endpoints are not roots.
fn deflate_at(mut q: Poly, at: &Rational) -> Poly {
    let factor = Poly::new(q.var(), vec![-at, rational::one()]);
    while !q.is_zero() && q.eval(at).is_zero() {
        q = q.divrem(&factor).expect("nonzero divisor").0;
    }
    q
}

/// Bisection refinement of a bracket `(a, b)` known to contain exactly one
/// simple root of `q`, down to the requested width. Exact throughout.
fn refine(q: &Poly, mut a: Rational, mut b: Rational, width: &Rational) -> (Rational, Rational) {
    debug_assert!(q.sign_at(&a) * q.sign_at(&b) < 0);
    let sa = q.sign_at(&a);
    while &(&b - &a) > width {
        let mid = (&a + &b) / rational::int(2);
        let sm = q.sign_at(&mid);
        if sm == 0 {
            // the midpoint is the root itself; clamp a tiny bracket around it
            let mut w = width / rational::int(4);
            loop {
                let (lo, hi) = (&mid - &w, &mid + &w);
                if lo > a && hi < b && !q.eval(&lo).is_zero() && !q.eval(&hi).is_zero() {
                    return (lo, hi);
                }
                w /= rational::int(2);
            }
        }
        if sm == sa {
            a = mid;
        } else {
            b = mid;
        }
    }
    (a, b)
}

/// Disjoint isolating intervals for the distinct real roots of `p` inside
/// `iv`, each of width at most `width`, in increasing order. The squarefree
/// part of `p` is taken first, so multiple roots are isolated once.
pub fn isolate_roots(p: &Poly, iv: &Interval, width: &Rational) -> Result<Vec<Interval>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let q0 = p.squarefree_part();
    let Some((a, b)) = bracket(&q0, iv) else {
        return Ok(Vec::new());
    };
    let mut out: Vec<Interval> = Vec::new();
    // endpoint roots belong to the output only for closed endpoints
    if !iv.lo_open && q0.eval(&a).is_zero() {
        out.push(Interval::closed(a.clone(), a.clone())?);
    }
    if !iv.hi_open && q0.eval(&b).is_zero() {
        out.push(Interval::closed(b.clone(), b.clone())?);
    }
    let q = deflate_at(deflate_at(q0, &a), &b);
    if q.degree().unwrap_or(0) >= 1 {
        let chain = sturm_sequence(&q)?;
        let count = |x: &Rational, y: &Rational| -> usize {
            variations_at(&chain, &Endpoint::Finite(x.clone()))
                .saturating_sub(variations_at(&chain, &Endpoint::Finite(y.clone())))
        };
        let mut stack = vec![(a, b)];
        while let Some((lo, hi)) = stack.pop() {
            let n = count(&lo, &hi);
            if n == 0 {
                continue;
            }
            if n == 1 && q.sign_at(&lo) * q.sign_at(&hi) < 0 {
                let (rl, rh) = refine(&q, lo, hi, width);
                out.push(Interval::open(rl, rh)?);
                continue;
            }
            let mid = (&lo + &hi) / rational::int(2);
            if q.eval(&mid).is_zero() {
                // exact rational root at the midpoint
                let mut w = width / rational::int(4);
                loop {
                    let (l, h) = (&mid - &w, &mid + &w);
                    if l > lo
                        && h < hi
                        && !q.eval(&l).is_zero()
                        && !q.eval(&h).is_zero()
                        && count(&l, &h) == 1
                    {
                        stack.push((lo, l.clone()));
                        stack.push((h.clone(), hi));
                        out.push(Interval::open(l, h)?);
                        break;
                    }
                    w /= rational::int(2);
                }
            } else {
                stack.push((lo, mid.clone()));
                stack.push((mid, hi));
            }
        }
    }
    out.sort_by(|x, y| {
        let ax = x.lo.finite().expect("finite isolating interval");
        let ay = y.lo.finite().expect("finite isolating interval");
        ax.cmp(ay)
    });
    Ok(out)
}

/// Certified sign classification of `p` on an interval.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SignClass {
    /// `p >= 0` throughout the interval.
    NonNegative,
    /// `p <= 0` throughout the interval.
    NonPositive,
    /// `p` takes both signs.
    Mixed,
}

/// Decides the sign of `p` on `iv` exactly: roots inside the interval are
/// isolated, and `p` is evaluated once in every maximal root-free gap (sign
/// is constant there, since sign changes only happen at roots). Infinite
/// ends contribute the sign of the leading term.
pub fn sign_on_interval(p: &Poly, iv: &Interval) -> Result<SignClass> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut pos = false;
    let mut neg = false;
    let mut note = |s: i32| {
        if s > 0 {
            pos = true;
        } else if s < 0 {
            neg = true;
        }
    };

    if iv.is_degenerate() {
        let x = iv.lo.finite().expect("degenerate interval is finite");
        note(p.sign_at(x));
        return Ok(classify(pos, neg));
    }

    match &iv.lo {
        Endpoint::NegInf => note(p.sign_at_neg_inf()),
        Endpoint::Finite(a) if !iv.lo_open => note(p.sign_at(a)),
        _ => {}
    }
    match &iv.hi {
        Endpoint::PosInf => note(p.sign_at_pos_inf()),
        Endpoint::Finite(b) if !iv.hi_open => note(p.sign_at(b)),
        _ => {}
    }

    let q = p.squarefree_part();
    if let Some((a, b)) = bracket(&q, iv) {
        let span = &b - &a;
        let isolating = isolate_roots(p, &Interval::open(a.clone(), b.clone())?,
            &(&span / rational::int(16)))?;
        // one sample per gap between consecutive roots (and beyond the
        // outermost roots), each strictly inside the bracket
        let mut cuts = vec![a.clone()];
        for r in &isolating {
            cuts.push(r.lo.finite().expect("finite").clone());
            cuts.push(r.hi.finite().expect("finite").clone());
        }
        cuts.push(b.clone());
        for pair in cuts.chunks(2) {
            let (lo, hi) = (&pair[0], &pair[1]);
            if lo >= hi {
                continue;
            }
            let mut sample = (lo + hi) / rational::int(2);
            // a gap sample must not itself be a root (possible when an
            // isolating interval is centred off its root); nudge it
            let mut shift = (hi - lo) / rational::int(4);
            while p.eval(&sample).is_zero() {
                sample += &shift;
                shift /= rational::int(2);
            }
            note(p.sign_at(&sample));
        }
    }
    Ok(classify(pos, neg))
}

fn classify(pos: bool, neg: bool) -> SignClass {
    match (pos, neg) {
        (true, true) => SignClass::Mixed,
        (false, true) => SignClass::NonPositive,
        _ => SignClass::NonNegative,
    }
}
