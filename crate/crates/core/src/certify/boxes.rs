//! Rational interval arithmetic, just enough to bound a bivariate
//! polynomial over a small box. Used for the certified lower bound on D2
//! at its critical points; no floating point anywhere.

use num_traits::Zero;

use crate::bipoly::BiPoly;
use crate::interval::Interval;
use crate::rational::{self, Rational};

/// Closed rational interval `[lo, hi]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RBox {
    pub lo: Rational,
    pub hi: Rational,
}

impl RBox {
    pub fn new(lo: Rational, hi: Rational) -> Self {
        debug_assert!(lo <= hi);
        RBox { lo, hi }
    }

    pub fn point(x: Rational) -> Self {
        RBox { lo: x.clone(), hi: x }
    }

    /// From an isolating interval (endpoint openness is immaterial for a
    /// closed enclosure).
    pub fn from_interval(iv: &Interval) -> Option<Self> {
        let lo = iv.lo.finite()?.clone();
        let hi = iv.hi.finite()?.clone();
        Some(RBox::new(lo, hi))
    }

    pub fn add(&self, other: &RBox) -> RBox {
        RBox::new(&self.lo + &other.lo, &self.hi + &other.hi)
    }

    pub fn mul(&self, other: &RBox) -> RBox {
        let cands = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let lo = cands.iter().min().unwrap().clone();
        let hi = cands.iter().max().unwrap().clone();
        RBox::new(lo, hi)
    }

    pub fn scale(&self, s: &Rational) -> RBox {
        if s.is_zero() || s > &rational::zero() {
            RBox::new(&self.lo * s, &self.hi * s)
        } else {
            RBox::new(&self.hi * s, &self.lo * s)
        }
    }

    pub fn pow(&self, k: usize) -> RBox {
        let mut acc = RBox::point(rational::one());
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }
}

/// Enclosure of `p` over the box `x × y` (first variable × second
/// variable), by summing monomial enclosures.
pub fn bipoly_range(p: &BiPoly, x: &RBox, y: &RBox) -> RBox {
    let di = p.degree_in(p.vars().0).unwrap().map_or(0, |d| d);
    let dj = p.degree_in(p.vars().1).unwrap().map_or(0, |d| d);
    let mut acc = RBox::point(rational::zero());
    for i in 0..=di {
        for j in 0..=dj {
            let c = p.coeff(i, j);
            if c.is_zero() {
                continue;
            }
            acc = acc.add(&x.pow(i).mul(&y.pow(j)).scale(&c));
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bipoly::BiPoly;
    use crate::poly::Var;
    use crate::rational::{int, rat};

    #[test]
    fn monomial_bounds_contain_samples() {
        // p = u h - 3 h^2 + 2 over [1,2] x [-1,1]
        let p = BiPoly::from_ints((Var('u'), Var('h')), &[&[2, 0, -3], &[0, 1]]);
        let bx = RBox::new(int(1), int(2));
        let by = RBox::new(int(-1), int(1));
        let range = bipoly_range(&p, &bx, &by);
        for (u, h) in [(int(1), int(-1)), (int(2), int(1)), (rat(3, 2), rat(1, 3))] {
            let v = p.eval(&u, &h);
            assert!(range.lo <= v && v <= range.hi);
        }
    }
}
