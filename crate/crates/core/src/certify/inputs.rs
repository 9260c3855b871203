//! The printed data every certificate is checked against: the constant c,
//! the lemma polynomials, their discriminant/resultant displays, and the
//! boundary specializations. `CertifyInputs::published()` is the published set;
//! tests mutate single coefficients to confirm each certificate notices.

use crate::bipoly::BiPoly;
use crate::poly::{Poly, Var};
use crate::rational::{self, Rational};

pub const U: Var = Var('u');
pub const H: Var = Var('h');
/// Variable tag used for delta in the D3 and ratio polynomials.
pub const D: Var = Var('d');
/// Variable tags for the comparison-kernel identities (b, x).
pub const B: Var = Var('b');
pub const X: Var = Var('x');

pub const UH: (Var, Var) = (U, H);
pub const UD: (Var, Var) = (U, D);
pub const BX: (Var, Var) = (B, X);

#[derive(Debug, Clone)]
pub struct CertifyInputs {
    /// The bound constant, printed as 419/100.
    pub c: Rational,
    /// Scale applied to the comparison kernel in the lemma-ab audit;
    /// 1 for the published proof, a mutation hook for tests.
    pub kernel_scale: Rational,
    /// D1(u, h), the cleared form of d1.
    pub d1: BiPoly,
    /// Quadratic factor of disc_h(D1): 16u^2 - 12u + 3.
    pub d1_disc_quadratic: Poly,
    /// Quartic factor of disc_h(D1).
    pub d1_disc_quartic: Poly,
    /// Cubic factor of D1's critical point in h.
    pub d1_critical_cubic: Poly,
    /// D2(u, h), the cleared form of d2.
    pub d2: BiPoly,
    /// Printed partial derivative of D2 in u.
    pub d21: BiPoly,
    /// Printed partial derivative of D2 in h.
    pub d22: BiPoly,
    /// Printed resultant of (D21, D22) eliminating u, a polynomial in h.
    pub r1: Poly,
    /// Printed resultant of (D21, D22) eliminating h, a polynomial in u.
    pub r2: Poly,
    /// Cubic inside the printed boundary value D2|_{u=0} = 4 (...).
    pub d2_boundary_u0: Poly,
    /// Quartic inside the printed boundary value at h = r1(u).
    pub d2_boundary_r1: Poly,
    /// Quartic inside the printed boundary value at h = r2(u).
    pub d2_boundary_r2: Poly,
    /// Coefficient of delta in D3: 40224u^2 - 19693u + 2414.
    pub d3_delta_coeff: Poly,
    /// Constant (in delta) quadratic of D3: 96u^2 - 47u + 6 (times 100).
    pub d3_const_coeff: Poly,
    /// Printed concavity quadratic of the ratio's middle branch, with
    /// denominators cleared: 1257 d^2 - 12508 d - 6400.
    pub ratio_quadratic: Poly,
}

fn bi(p: &Poly) -> BiPoly {
    BiPoly::from_poly(UH, p).expect("u/h polynomial")
}

impl CertifyInputs {
    /// The polynomials exactly as displayed in the proof.
    pub fn published() -> Self {
        // D1 = 419 (1-4u)^3 h^2 - 2u (13408u^3 - 6856u^2 + 114u + 181) h + 419 u^2
        let one_minus_4u = Poly::from_ints(U, &[1, -4]);
        let cubic = Poly::from_ints(U, &[181, 114, -6856, 13408]);
        let h = BiPoly::monomial(UH, rational::one(), 0, 1);
        let h2 = BiPoly::monomial(UH, rational::one(), 0, 2);
        let lead = &(&one_minus_4u * &one_minus_4u) * &one_minus_4u;
        let d1 = &(&(&bi(&lead).scale(&rational::int(419)) * &h2)
            - &(&bi(&(&Poly::from_ints(U, &[0, 2]) * &cubic)) * &h))
            + &BiPoly::monomial(UH, rational::int(419), 2, 0);

        // D2 = 27h^3 (419u - 100) + 3771h^2 (3u^2 - 1024u + 256)
        //      - 256h (15084u^2 - 171u + 12508) - 8192 (419u + 100)
        let h3 = BiPoly::monomial(UH, rational::one(), 0, 3);
        let d2 = &(&(&(&bi(&Poly::from_ints(U, &[-100, 419])).scale(&rational::int(27)) * &h3)
            + &(&bi(&Poly::from_ints(U, &[256, -1024, 3])).scale(&rational::int(3771)) * &h2))
            - &(&bi(&Poly::from_ints(U, &[12508, -171, 15084])).scale(&rational::int(256)) * &h))
            - &bi(&Poly::from_ints(U, &[100, 419]).scale(&rational::int(8192)));

        // D21 = 11313h^3 + 22626h^2 u - 3861504h^2 - 7723008hu + 43776h - 3432448
        let d21 = BiPoly::from_ints(
            UH,
            &[
                &[-3432448, 43776, -3861504, 11313],
                &[0, -7723008, 22626],
            ],
        );
        // D22 = 33939h^2 u - 8100h^2 + 22626h u^2 - 7723008hu + 1930752h
        //       - 3861504u^2 + 43776u - 3202048
        let d22 = BiPoly::from_ints(
            UH,
            &[
                &[-3202048, 1930752, -8100],
                &[43776, -7723008, 33939],
                &[-3861504, 22626],
            ],
        );

        let r1 = Poly::from_ints(
            H,
            &[
                -3016115013812224,
                17672548909056,
                -5874950492651520,
                7495868032745472,
                11376013014678528,
                -111582387392256,
                360127950804,
                -383951907,
            ],
        );
        let r2 = Poly::from_ints(
            U,
            &[
                -5192266514139579318272,
                29165745137518115033088,
                -35398357322310505259136,
                43252111127403174064608,
                44892310928843299875696,
                -78523365776753581860762,
                -847701988664287064715,
                -1807585595653280832,
            ],
        );

        CertifyInputs {
            c: rational::rat(419, 100),
            kernel_scale: rational::one(),
            d1,
            d1_disc_quadratic: Poly::from_ints(U, &[3, -12, 16]),
            d1_disc_quartic: Poly::from_ints(
                U,
                &[-11900, 131400, -318917, -765932, 2808976],
            ),
            d1_critical_cubic: cubic,
            d2,
            d21,
            d22,
            r1,
            r2,
            d2_boundary_u0: Poly::from_ints(H, &[-204800, -800512, 241344, -675]),
            d2_boundary_r1: Poly::from_ints(
                U,
                &[-159896, 1302526, -2565795, -725364, 1448064],
            ),
            d2_boundary_r2: Poly::from_ints(
                U,
                &[-107264, 875488, -1709051, -643092, 1287168],
            ),
            d3_delta_coeff: Poly::from_ints(U, &[2414, -19693, 40224]),
            d3_const_coeff: Poly::from_ints(U, &[6, -47, 96]),
            ratio_quadratic: Poly::from_ints(D, &[-6400, -12508, 1257]),
        }
    }

    /// Numerator and denominator of c as rationals (both positive).
    pub(crate) fn c_parts(&self) -> (Rational, Rational) {
        (
            Rational::from_integer(self.c.numer().clone()),
            Rational::from_integer(self.c.denom().clone()),
        )
    }
}
