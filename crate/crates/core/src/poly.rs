//! Dense univariate polynomials with exact rational coefficients.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

/// Symbolic variable tag.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Var(pub char);

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Polynomial in one variable. `coeffs[i]` is the coefficient of degree `i`;
/// the leading coefficient is nonzero unless the polynomial is zero (empty
/// coefficient vector).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<Rational>,
    var: Var,
}

impl Poly {
    pub fn new(var: Var, mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs, var }
    }

    /// Coefficients given as integers, index = degree.
    pub fn from_ints(var: Var, coeffs: &[i128]) -> Self {
        Poly::new(var, coeffs.iter().map(|&c| rational::int(c)).collect())
    }

    /// Coefficients given as decimal strings, for constants too large for
    /// `i128`. Panics on malformed input (used only with literal tables).
    pub fn from_strs(var: Var, coeffs: &[&str]) -> Self {
        Poly::new(
            var,
            coeffs
                .iter()
                .map(|s| rational::parse(s).expect("bad coefficient literal"))
                .collect(),
        )
    }

    pub fn zero(var: Var) -> Self {
        Poly { coeffs: Vec::new(), var }
    }

    pub fn constant(var: Var, c: Rational) -> Self {
        Poly::new(var, vec![c])
    }

    /// The monomial `c · x^k`.
    pub fn monomial(var: Var, c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Poly::new(var, coeffs)
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of the zero polynomial is reported as `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn leading_coeff(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    /// Horner evaluation, exact.
    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Exact formal derivative.
    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero(self.var);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * rational::int(k as i128))
            .collect();
        Poly::new(self.var, coeffs)
    }

    pub fn scale(&self, s: &Rational) -> Poly {
        Poly::new(self.var, self.coeffs.iter().map(|c| c * s).collect())
    }

    /// Euclidean division: `self = q·d + r` with `deg r < deg d`.
    pub fn divrem(&self, d: &Poly) -> Result<(Poly, Poly)> {
        if d.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let dd = d.degree().unwrap();
        let lc = d.leading_coeff();
        let mut r = self.coeffs.clone();
        let mut q = vec![Rational::zero(); self.coeffs.len().saturating_sub(dd)];
        while r.len() > dd {
            let k = r.len() - 1 - dd;
            let factor = r.last().unwrap() / &lc;
            for i in 0..=dd {
                let t = &d.coeffs[i] * &factor;
                r[k + i] -= t;
            }
            // leading term cancels exactly
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
            q[k] = factor;
        }
        Ok((Poly::new(self.var, q), Poly::new(self.var, r)))
    }

    /// Monic gcd via the Euclidean algorithm.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.divrem(&b).expect("nonzero divisor").1;
            a = b;
            b = r;
        }
        if a.is_zero() {
            return a;
        }
        let lc = a.leading_coeff();
        a.scale(&(Rational::from_integer(1.into()) / lc))
    }

    /// `self / gcd(self, self')` — same roots, all simple.
    pub fn squarefree_part(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        if g.degree() == Some(0) {
            return self.clone();
        }
        self.divrem(&g).expect("gcd divides").0
    }

    /// Sign of the value at `x`: -1, 0, or 1.
    pub fn sign_at(&self, x: &Rational) -> i32 {
        let v = self.eval(x);
        if v.is_zero() {
            0
        } else if v.is_positive() {
            1
        } else {
            -1
        }
    }

    /// Sign of the limit at +∞.
    pub fn sign_at_pos_inf(&self) -> i32 {
        let lc = self.leading_coeff();
        if lc.is_zero() {
            0
        } else if lc.is_positive() {
            1
        } else {
            -1
        }
    }

    /// Sign of the limit at -∞.
    pub fn sign_at_neg_inf(&self) -> i32 {
        let s = self.sign_at_pos_inf();
        match self.degree() {
            Some(d) if d % 2 == 1 => -s,
            _ => s,
        }
    }

    /// Cauchy bound: every real root lies in `(-B, B)`.
    pub fn root_bound(&self) -> Rational {
        let lc = self.leading_coeff();
        if lc.is_zero() {
            return Rational::from_integer(1.into());
        }
        let mut m = Rational::zero();
        for c in &self.coeffs[..self.coeffs.len() - 1] {
            let q = (c / &lc).abs();
            if q > m {
                m = q;
            }
        }
        m + rational::one()
    }

    /// Render like `-3x^2 + x - 1/2`.
    pub fn to_display_string(&self) -> String {
        use core::fmt::Write;
        if self.is_zero() {
            return String::from("0");
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !out.is_empty() {
                out.push_str(if c.is_positive() { " + " } else { " - " });
            } else if c.is_negative() {
                out.push('-');
            }
            let a = c.abs();
            let unit = a == rational::one();
            if k == 0 || !unit {
                let _ = write!(out, "{}", rational::to_fraction_string(&a));
            }
            if k >= 1 {
                if !unit {
                    out.push('*');
                }
                let _ = write!(out, "{}", self.var);
                if k > 1 {
                    let _ = write!(out, "^{k}");
                }
            }
        }
        out
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect();
        Poly::new(self.var, coeffs)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect();
        Poly::new(self.var, coeffs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.var, self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero(self.var);
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Poly::new(self.var, coeffs)
    }
}
