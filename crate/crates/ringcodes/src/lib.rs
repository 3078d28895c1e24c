//! Linear and cyclic codes over the quotient rings
//! `Z_p[u] / ((u^p - u)/(u - s))`.
//!
//! For a prime `p` and a chosen residue `s`, the modulus polynomial
//! splits into `p - 1` distinct linear factors, so the ring is a product
//! of `p - 1` copies of the prime field. This crate builds that
//! decomposition explicitly through orthogonal idempotents and uses it to
//! analyze codes over the ring: a linear code over the ring is equivalent
//! to a tuple of `p - 1` codes over Z_p, and every question about the
//! ring code (cardinality, minimum distance, duality, cyclicity) reduces
//! to the component codes.
//!
//! ```
//! use ringcodes::Ring;
//!
//! let ring = Ring::new(5, 4)?;
//! let x = ring.element(&[1, 2, 3, 1])?;           // u^3 + 3u^2 + 2u + 1
//! assert_eq!(x.to_components().values(), &[1, 2, 0, 1]);
//! assert_eq!(x.to_components().to_element(), x);  // exact roundtrip
//! # Ok::<(), ringcodes::Error>(())
//! ```

pub mod cyclic;
pub mod error;
pub mod json;
pub mod linear;
pub mod matrix;
pub mod poly;
pub mod ring;
pub mod text;
pub mod zp;

pub use error::{Error, Result};
pub use matrix::{RingMatrix, SystematicForm, ZpMatrix};
pub use poly::ZpPoly;
pub use ring::{ComponentVector, Ring, RingElement};
pub use zp::{Prime, MAX_PRIME};

pub use cyclic::{
    cyclic_generator_matrix, divides_xn_minus_1, factor_xn_minus_1, CyclicGenerators, Factor,
    FactorList, RingPolynomial,
};
pub use linear::{ComponentCode, ComponentDistance, DistanceReport, RingCodeword, RingLinearCode};

/// Default cap on exhaustive distance enumeration (number of codewords).
pub const DEFAULT_ENUM_CAP: u64 = 10_000_000;

// Every code block in the guide compiles and runs under `cargo test`, so
// the book cannot drift from the crate.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub struct Introduction;
    #[doc = include_str!("../../../book/src/rings.md")]
    pub struct Rings;
    #[doc = include_str!("../../../book/src/linear-codes.md")]
    pub struct LinearCodes;
    #[doc = include_str!("../../../book/src/cyclic-codes.md")]
    pub struct CyclicCodes;
}
