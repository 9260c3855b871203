//! Sylvester resultants and discriminants, exact.
//!
//! The Sylvester matrix is laid out with the first polynomial's coefficient
//! rows on top and the second polynomial's below (see the crate's sign
//! convention note: printed resultants from other systems are accepted up
//! to one global nonzero rational factor, which callers record).

use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::bipoly::BiPoly;
use crate::error::{Error, Result};
use crate::poly::{Poly, Var};
use crate::rational::{self, Rational};

/// Determinant of a square matrix of polynomials by cofactor expansion.
/// Matrix orders here are at most `deg p + deg q` (single digits).
fn det_poly(m: &[Vec<Poly>], var: Var) -> Poly {
    let n = m.len();
    if n == 0 {
        return Poly::constant(var, rational::one());
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = Poly::zero(var);
    for (i, row) in m.iter().enumerate() {
        if row[0].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Poly>> = m
            .iter()
            .enumerate()
            .filter(|(k, _)| *k != i)
            .map(|(_, r)| r[1..].to_vec())
            .collect();
        let term = &row[0] * &det_poly(&minor, var);
        if i % 2 == 0 {
            acc = &acc + &term;
        } else {
            acc = &acc - &term;
        }
    }
    acc
}

fn sylvester_rows(coeffs_desc: &[Poly], copies: usize, size: usize, var: Var) -> Vec<Vec<Poly>> {
    (0..copies)
        .map(|shift| {
            let mut row = vec![Poly::zero(var); size];
            for (k, c) in coeffs_desc.iter().enumerate() {
                row[shift + k] = c.clone();
            }
            row
        })
        .collect()
}

/// Resultant of two bivariate polynomials with respect to `eliminate`:
/// the Sylvester determinant, exact, as a polynomial in the remaining
/// variable.
pub fn resultant(p: &BiPoly, q: &BiPoly, eliminate: Var) -> Result<Poly> {
    if p.vars() != q.vars() {
        return Err(Error::VariableMismatch);
    }
    if p.is_zero() || q.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (v0, v1) = p.vars();
    let keep = if eliminate == v0 {
        v1
    } else if eliminate == v1 {
        v0
    } else {
        return Err(Error::UnknownVariable);
    };
    let mut pc = p.as_poly_in(eliminate)?;
    let mut qc = q.as_poly_in(eliminate)?;
    pc.reverse(); // descending degree
    qc.reverse();
    let m = pc.len() - 1;
    let n = qc.len() - 1;
    if m == 0 || n == 0 {
        return Err(Error::DegreeTooLow);
    }
    let size = m + n;
    let mut rows = sylvester_rows(&pc, n, size, keep);
    rows.extend(sylvester_rows(&qc, m, size, keep));
    Ok(det_poly(&rows, keep))
}

/// Determinant over the rationals by fraction-exact Gaussian elimination.
fn det_rational(mut m: Vec<Vec<Rational>>) -> Rational {
    let n = m.len();
    let mut det = rational::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return rational::zero();
        };
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        let pv = m[col][col].clone();
        det *= &pv;
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let f = &m[r][col] / &pv;
            for c in col..n {
                let t = &m[col][c] * &f;
                m[r][c] -= t;
            }
        }
    }
    det
}

/// Resultant of two univariate polynomials in the same variable.
pub fn resultant_uni(p: &Poly, q: &Poly) -> Result<Rational> {
    if p.var() != q.var() {
        return Err(Error::VariableMismatch);
    }
    if p.is_zero() || q.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let m = p.degree().unwrap();
    let n = q.degree().unwrap();
    if m == 0 || n == 0 {
        return Err(Error::DegreeTooLow);
    }
    let size = m + n;
    let pc: Vec<Rational> = p.coeffs().iter().rev().cloned().collect();
    let qc: Vec<Rational> = q.coeffs().iter().rev().cloned().collect();
    let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(size);
    for shift in 0..n {
        let mut row = vec![Rational::zero(); size];
        row[shift..shift + pc.len()].clone_from_slice(&pc);
        rows.push(row);
    }
    for shift in 0..m {
        let mut row = vec![Rational::zero(); size];
        row[shift..shift + qc.len()].clone_from_slice(&qc);
        rows.push(row);
    }
    Ok(det_rational(rows))
}

/// Discriminant of a univariate polynomial of degree >= 2:
/// `(-1)^{d(d-1)/2} res(p, p') / lc(p)`. For `a x^2 + b x + c` this is
/// exactly `b^2 - 4ac`.
pub fn discriminant(p: &Poly) -> Result<Rational> {
    let d = p.degree().ok_or(Error::ZeroPolynomial)?;
    if d < 2 {
        return Err(Error::DegreeTooLow);
    }
    let r = resultant_uni(p, &p.derivative())?;
    let sign = if (d * (d - 1) / 2) % 2 == 0 {
        rational::one()
    } else {
        rational::int(-1)
    };
    Ok(sign * r / p.leading_coeff())
}

/// Discriminant of a bivariate polynomial viewed as a quadratic in `var`:
/// `b^2 - 4ac` with `a`, `b`, `c` polynomials in the other variable.
pub fn discriminant_in(p: &BiPoly, var: Var) -> Result<Poly> {
    let d = p.degree_in(var)?.ok_or(Error::ZeroPolynomial)?;
    if d != 2 {
        return Err(Error::DegreeTooLow);
    }
    let cs = p.as_poly_in(var)?;
    let (c, b, a) = (&cs[0], &cs[1], &cs[2]);
    Ok(&(b * b) - &(a * c).scale(&rational::int(4)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    const X: Var = Var('x');
    const A: Var = Var('a');

    #[test]
    fn linear_resultant() {
        // res_x(x - a, x - b) with b fixed at 5: a - 5 up to sign
        let vars = (X, A);
        let p = BiPoly::from_ints(vars, &[&[0, -1], &[1]]); // x - a
        let q = BiPoly::from_ints(vars, &[&[-5], &[1]]); // x - 5
        let r = resultant(&p, &q, X).unwrap();
        let expected = Poly::from_ints(A, &[-5, 1]);
        assert!(r == expected || r == -&expected);
    }

    #[test]
    fn resultant_zero_iff_common_root() {
        // p = (x-1)(x-2), q = (x-2)(x-3) share the root 2
        let p = Poly::from_ints(X, &[2, -3, 1]);
        let q = Poly::from_ints(X, &[6, -5, 1]);
        assert_eq!(resultant_uni(&p, &q).unwrap(), int(0));
        let q2 = Poly::from_ints(X, &[12, -7, 1]); // (x-3)(x-4)
        assert_ne!(resultant_uni(&p, &q2).unwrap(), int(0));
    }

    #[test]
    fn quadratic_discriminants() {
        // h^2 - 2h + 1 -> 0 (double root)
        let p = Poly::from_ints(X, &[1, -2, 1]);
        assert_eq!(discriminant(&p).unwrap(), int(0));
        // h^2 + 1 -> -4
        let q = Poly::from_ints(X, &[1, 0, 1]);
        assert_eq!(discriminant(&q).unwrap(), int(-4));
        // degree < 2 is an error
        assert!(discriminant(&Poly::from_ints(X, &[1, 1])).is_err());
    }

    #[test]
    fn cubic_discriminant_known_value() {
        // disc(x^3 + px + q) = -4p^3 - 27q^2; take p = -1, q = -1 -> 4 - 27 = -23
        let p = Poly::from_ints(X, &[-1, -1, 0, 1]);
        assert_eq!(discriminant(&p).unwrap(), int(-23));
    }

    #[test]
    fn errors() {
        let vars = (X, A);
        let z = BiPoly::zero(vars);
        let p = BiPoly::from_ints(vars, &[&[0, 1], &[1]]);
        assert_eq!(resultant(&z, &p, X).unwrap_err(), Error::ZeroPolynomial);
        assert_eq!(resultant(&p, &p, Var('z')).unwrap_err(), Error::UnknownVariable);
    }
}
