//! Numerical and command-line companions to the exact-arithmetic core:
//! quadrature, the log-concave distribution library, the conjecture
//! explorer, report rendering, and run manifests.

pub mod cli;
pub mod conjecture;
pub mod distributions;
pub mod manifest;
pub mod quadrature;
pub mod report;
