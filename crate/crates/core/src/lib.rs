//! Cantor-integer sequences induced by digit base-conversion maps:
//! exact values, extrema of the normalized ratios, the multiplicatively
//! periodic limit function with its Fourier analysis, self-similar
//! measure densities, and the Mellin-Perron summation audit.

pub mod cli;
pub mod compare;
pub mod digits;
pub mod distribution;
pub mod error;
pub mod expansion;
pub mod extrema;
pub mod fourier;
pub mod hp;
pub mod limit;
pub mod mellin;
pub mod system;
pub mod table;
pub mod verify;
pub mod zeta;

pub use error::{Error, Result};
pub use system::{validate_system, BaseConversionMap, CantorSystem, QuadraticFamily};
