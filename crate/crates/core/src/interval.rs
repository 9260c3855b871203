//! Rational-endpoint intervals, the unit of root isolation and sign
//! certification. Endpoints may be infinite (always open); a degenerate
//! interval `[a, a]` has both endpoints closed.

use alloc::format;
use alloc::string::String;

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Endpoint {
    NegInf,
    Finite(Rational),
    PosInf,
}

impl Endpoint {
    pub fn finite(&self) -> Option<&Rational> {
        match self {
            Endpoint::Finite(r) => Some(r),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    pub lo: Endpoint,
    pub hi: Endpoint,
    pub lo_open: bool,
    pub hi_open: bool,
}

impl Interval {
    /// Open interval `(lo, hi)` with finite endpoints.
    pub fn open(lo: Rational, hi: Rational) -> Result<Self> {
        if lo >= hi {
            return Err(Error::BadInterval);
        }
        Ok(Interval {
            lo: Endpoint::Finite(lo),
            hi: Endpoint::Finite(hi),
            lo_open: true,
            hi_open: true,
        })
    }

    /// Closed interval `[lo, hi]`; `lo == hi` is allowed.
    pub fn closed(lo: Rational, hi: Rational) -> Result<Self> {
        if lo > hi {
            return Err(Error::BadInterval);
        }
        Ok(Interval {
            lo: Endpoint::Finite(lo),
            hi: Endpoint::Finite(hi),
            lo_open: false,
            hi_open: false,
        })
    }

    /// Half-open `(lo, hi]`.
    pub fn open_closed(lo: Rational, hi: Rational) -> Result<Self> {
        if lo >= hi {
            return Err(Error::BadInterval);
        }
        Ok(Interval {
            lo: Endpoint::Finite(lo),
            hi: Endpoint::Finite(hi),
            lo_open: true,
            hi_open: false,
        })
    }

    /// Open ray `(lo, +inf)`.
    pub fn above(lo: Rational) -> Self {
        Interval {
            lo: Endpoint::Finite(lo),
            hi: Endpoint::PosInf,
            lo_open: true,
            hi_open: true,
        }
    }

    /// The whole real line.
    pub fn real_line() -> Self {
        Interval {
            lo: Endpoint::NegInf,
            hi: Endpoint::PosInf,
            lo_open: true,
            hi_open: true,
        }
    }

    pub fn is_degenerate(&self) -> bool {
        match (&self.lo, &self.hi) {
            (Endpoint::Finite(a), Endpoint::Finite(b)) => a == b,
            _ => false,
        }
    }

    /// Width of a finite interval; `None` when unbounded.
    pub fn width(&self) -> Option<Rational> {
        match (&self.lo, &self.hi) {
            (Endpoint::Finite(a), Endpoint::Finite(b)) => Some(b - a),
            _ => None,
        }
    }

    pub fn midpoint(&self) -> Option<Rational> {
        match (&self.lo, &self.hi) {
            (Endpoint::Finite(a), Endpoint::Finite(b)) => Some((a + b) / rational::int(2)),
            _ => None,
        }
    }

    pub fn contains(&self, x: &Rational) -> bool {
        let lo_ok = match &self.lo {
            Endpoint::NegInf => true,
            Endpoint::PosInf => false,
            Endpoint::Finite(a) => {
                if self.lo_open {
                    x > a
                } else {
                    x >= a
                }
            }
        };
        let hi_ok = match &self.hi {
            Endpoint::PosInf => true,
            Endpoint::NegInf => false,
            Endpoint::Finite(b) => {
                if self.hi_open {
                    x < b
                } else {
                    x <= b
                }
            }
        };
        lo_ok && hi_ok
    }

    pub fn to_display_string(&self) -> String {
        let lo = match &self.lo {
            Endpoint::NegInf => String::from("-inf"),
            Endpoint::PosInf => String::from("+inf"),
            Endpoint::Finite(r) => rational::to_fraction_string(r),
        };
        let hi = match &self.hi {
            Endpoint::NegInf => String::from("-inf"),
            Endpoint::PosInf => String::from("+inf"),
            Endpoint::Finite(r) => rational::to_fraction_string(r),
        };
        format!(
            "{}{}, {}{}",
            if self.lo_open { '(' } else { '[' },
            lo,
            hi,
            if self.hi_open { ')' } else { ']' },
        )
    }
}
