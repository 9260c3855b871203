use core::fmt;

/// Errors raised by the exact-arithmetic kernel.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A variable tag was passed that the polynomial does not carry.
    UnknownVariable,
    /// The operation is undefined for the zero polynomial.
    ZeroPolynomial,
    /// Discriminants need degree at least two.
    DegreeTooLow,
    /// An interval endpoint stayed a root of the polynomial after the
    /// deterministic perturbation retries.
    EndpointRoot,
    /// The two polynomials do not share the same pair of variables.
    VariableMismatch,
    /// Root isolation or sign certification was asked for an empty or
    /// inverted interval.
    BadInterval,
    /// A domain precondition of a bound function was violated.
    Domain(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::UnknownVariable => write!(f, "unknown variable tag"),
            Error::ZeroPolynomial => write!(f, "operation undefined for the zero polynomial"),
            Error::DegreeTooLow => write!(f, "polynomial degree too low"),
            Error::EndpointRoot => {
                write!(f, "endpoint remained a root after perturbation retries")
            }
            Error::VariableMismatch => write!(f, "polynomials carry different variable tags"),
            Error::BadInterval => write!(f, "empty or inverted interval"),
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
        }
    }
}

pub type Result<T> = core::result::Result<T, Error>;
