//! Dense bivariate polynomials with exact rational coefficients.
//!
//! Degrees in this crate's certificates are tiny (at most 3×4), so the
//! coefficient grid is stored densely and every operation is written for
//! clarity rather than asymptotics.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::{Poly, Var};
use crate::rational::{self, Rational};

/// Polynomial in two variables. `coeffs[i][j]` is the coefficient of
/// `vars.0^i · vars.1^j`. The grid is trimmed so its extent matches the
/// nonzero support exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiPoly {
    coeffs: Vec<Vec<Rational>>,
    vars: (Var, Var),
}

impl BiPoly {
    pub fn new(vars: (Var, Var), coeffs: Vec<Vec<Rational>>) -> Self {
        let mut p = BiPoly { coeffs, vars };
        p.trim();
        p
    }

    /// Grid of integer coefficients, `grid[i][j]` = coefficient of
    /// `vars.0^i · vars.1^j`.
    pub fn from_ints(vars: (Var, Var), grid: &[&[i128]]) -> Self {
        BiPoly::new(
            vars,
            grid.iter()
                .map(|row| row.iter().map(|&c| rational::int(c)).collect())
                .collect(),
        )
    }

    pub fn zero(vars: (Var, Var)) -> Self {
        BiPoly { coeffs: Vec::new(), vars }
    }

    pub fn constant(vars: (Var, Var), c: Rational) -> Self {
        BiPoly::new(vars, vec![vec![c]])
    }

    /// `c · a^i · b^j` where `(a, b)` are the two variables.
    pub fn monomial(vars: (Var, Var), c: Rational, i: usize, j: usize) -> Self {
        let mut grid = vec![vec![Rational::zero(); j + 1]; i + 1];
        grid[i][j] = c;
        BiPoly::new(vars, grid)
    }

    /// Embeds a univariate polynomial; its variable must be one of `vars`.
    pub fn from_poly(vars: (Var, Var), p: &Poly) -> Result<Self> {
        if p.var() == vars.0 {
            Ok(BiPoly::new(
                vars,
                p.coeffs().iter().map(|c| vec![c.clone()]).collect(),
            ))
        } else if p.var() == vars.1 {
            Ok(BiPoly::new(vars, vec![p.coeffs().to_vec()]))
        } else {
            Err(Error::UnknownVariable)
        }
    }

    fn trim(&mut self) {
        for row in &mut self.coeffs {
            while row.last().is_some_and(Zero::is_zero) {
                row.pop();
            }
        }
        while self.coeffs.last().is_some_and(|r| r.is_empty()) {
            self.coeffs.pop();
        }
    }

    pub fn vars(&self) -> (Var, Var) {
        self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|r| r.is_empty())
    }

    pub fn coeff(&self, i: usize, j: usize) -> Rational {
        self.coeffs
            .get(i)
            .and_then(|r| r.get(j))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn degree_in(&self, v: Var) -> Result<Option<usize>> {
        if v == self.vars.0 {
            Ok(self.coeffs.len().checked_sub(1))
        } else if v == self.vars.1 {
            Ok(self
                .coeffs
                .iter()
                .filter_map(|r| r.len().checked_sub(1))
                .max())
        } else {
            Err(Error::UnknownVariable)
        }
    }

    /// Exact partial derivative in the given variable.
    pub fn partial(&self, which: Var) -> Result<BiPoly> {
        if which == self.vars.0 {
            let grid = self
                .coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, row)| {
                    row.iter()
                        .map(|c| c * rational::int(i as i128))
                        .collect()
                })
                .collect();
            Ok(BiPoly::new(self.vars, grid))
        } else if which == self.vars.1 {
            let grid = self
                .coeffs
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .skip(1)
                        .map(|(j, c)| c * rational::int(j as i128))
                        .collect()
                })
                .collect();
            Ok(BiPoly::new(self.vars, grid))
        } else {
            Err(Error::UnknownVariable)
        }
    }

    /// Exact value at a rational point `(x, y)` = (first var, second var).
    pub fn eval(&self, x: &Rational, y: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for row in self.coeffs.iter().rev() {
            let mut inner = Rational::zero();
            for c in row.iter().rev() {
                inner = inner * y + c;
            }
            acc = acc * x + inner;
        }
        acc
    }

    /// Substitutes a rational value for one variable; the result is a
    /// univariate polynomial in the other.
    pub fn substitute(&self, which: Var, value: &Rational) -> Result<Poly> {
        if which == self.vars.0 {
            let deg_y = self.degree_in(self.vars.1)?.unwrap_or(0);
            let mut coeffs = vec![Rational::zero(); deg_y + 1];
            let mut xp = rational::one();
            for row in &self.coeffs {
                for (j, c) in row.iter().enumerate() {
                    coeffs[j] += c * &xp;
                }
                xp *= value;
            }
            Ok(Poly::new(self.vars.1, coeffs))
        } else if which == self.vars.1 {
            let coeffs = self
                .coeffs
                .iter()
                .map(|row| {
                    let mut acc = Rational::zero();
                    for c in row.iter().rev() {
                        acc = acc * value + c;
                    }
                    acc
                })
                .collect();
            Ok(Poly::new(self.vars.0, coeffs))
        } else {
            Err(Error::UnknownVariable)
        }
    }

    /// Views the polynomial as univariate in `main` with coefficients that
    /// are polynomials in the other variable; index = degree in `main`.
    pub fn as_poly_in(&self, main: Var) -> Result<Vec<Poly>> {
        if main == self.vars.0 {
            Ok(self
                .coeffs
                .iter()
                .map(|row| Poly::new(self.vars.1, row.clone()))
                .collect())
        } else if main == self.vars.1 {
            let deg = self.degree_in(main)?.map_or(0, |d| d + 1);
            let mut out: Vec<Vec<Rational>> = vec![Vec::new(); deg];
            for row in &self.coeffs {
                for (j, c) in row.iter().enumerate() {
                    out[j].push(c.clone());
                }
                for v in out.iter_mut().skip(row.len()) {
                    v.push(Rational::zero());
                }
            }
            Ok(out.into_iter().map(|v| Poly::new(self.vars.0, v)).collect())
        } else {
            Err(Error::UnknownVariable)
        }
    }

    pub fn scale(&self, s: &Rational) -> BiPoly {
        BiPoly::new(
            self.vars,
            self.coeffs
                .iter()
                .map(|row| row.iter().map(|c| c * s).collect())
                .collect(),
        )
    }

    pub fn to_display_string(&self) -> String {
        use core::fmt::Write;
        if self.is_zero() {
            return String::from("0");
        }
        let mut out = String::new();
        for (i, row) in self.coeffs.iter().enumerate().rev() {
            for (j, c) in row.iter().enumerate().rev() {
                if c.is_zero() {
                    continue;
                }
                if !out.is_empty() {
                    out.push_str(if c.is_positive() { " + " } else { " - " });
                } else if c.is_negative() {
                    out.push('-');
                }
                let a = c.abs();
                let unit = a == rational::one() && (i, j) != (0, 0);
                if !unit {
                    let _ = write!(out, "{}", rational::to_fraction_string(&a));
                }
                let mut star = !unit;
                for (v, k) in [(self.vars.0, i), (self.vars.1, j)] {
                    if k == 0 {
                        continue;
                    }
                    if star {
                        out.push('*');
                    }
                    let _ = write!(out, "{v}");
                    if k > 1 {
                        let _ = write!(out, "^{k}");
                    }
                    star = true;
                }
            }
        }
        out
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let ni = self.coeffs.len().max(rhs.coeffs.len());
        let grid = (0..ni)
            .map(|i| {
                let nj = self
                    .coeffs
                    .get(i)
                    .map_or(0, |r| r.len())
                    .max(rhs.coeffs.get(i).map_or(0, |r| r.len()));
                (0..nj).map(|j| self.coeff(i, j) + rhs.coeff(i, j)).collect()
            })
            .collect();
        BiPoly::new(self.vars, grid)
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        self + &(-rhs)
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        self.scale(&rational::int(-1))
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        if self.is_zero() || rhs.is_zero() {
            return BiPoly::zero(self.vars);
        }
        let di = self.coeffs.len() + rhs.coeffs.len() - 1;
        let dj = self.coeffs.iter().map(|r| r.len()).max().unwrap_or(1)
            + rhs.coeffs.iter().map(|r| r.len()).max().unwrap_or(1);
        let mut grid = vec![vec![Rational::zero(); dj]; di];
        for (i, row) in self.coeffs.iter().enumerate() {
            for (j, a) in row.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (k, brow) in rhs.coeffs.iter().enumerate() {
                    for (l, b) in brow.iter().enumerate() {
                        grid[i + k][j + l] += a * b;
                    }
                }
            }
        }
        BiPoly::new(self.vars, grid)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    const U: Var = Var('u');
    const H: Var = Var('h');

    #[test]
    fn partial_of_product() {
        // d/du (u*h) = h
        let uh = BiPoly::from_ints((U, H), &[&[0, 0], &[0, 1]]);
        let d = uh.partial(U).unwrap();
        assert_eq!(d, BiPoly::from_ints((U, H), &[&[0, 1]]));
        assert!(uh.partial(Var('z')).is_err());
    }

    #[test]
    fn substitute_and_eval_agree() {
        // (u + 2h)^2
        let p = BiPoly::from_ints((U, H), &[&[0, 0, 4], &[0, 4], &[1]]);
        let at_u = p.substitute(U, &int(3)).unwrap();
        assert_eq!(at_u.eval(&int(5)), p.eval(&int(3), &int(5)));
        assert_eq!(p.eval(&int(3), &int(5)), int(169));
    }

    #[test]
    fn poly_view_roundtrip() {
        let p = BiPoly::from_ints((U, H), &[&[1, 2, 3], &[4, 0, 6], &[7]]);
        for main in [U, H] {
            let view = p.as_poly_in(main).unwrap();
            let mut back = BiPoly::zero((U, H));
            for (k, q) in view.iter().enumerate() {
                let qb = BiPoly::from_poly((U, H), q).unwrap();
                let pow = if main == U {
                    BiPoly::monomial((U, H), int(1), k, 0)
                } else {
                    BiPoly::monomial((U, H), int(1), 0, k)
                };
                back = &back + &(&qb * &pow);
            }
            assert_eq!(back, p);
        }
    }
}
