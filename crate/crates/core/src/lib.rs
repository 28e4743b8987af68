//! Exact computation in Puiseux monoid algebras `Q[S]`.
//!
//! The crate covers the whole pipeline from text to answers:
//!
//! * [`exact`]: big integers, reduced non-negative rationals, small prime fields.
//! * [`qpoly`]: dense polynomials over Q with complete factorization.
//! * [`cyclotomic`]: Φ_n, cyclotomic recognition, elementary symmetric values.
//! * [`poly`]: elements of `Q[Q_+]`, symmetric support, exponent scaling.
//! * [`monoid`]: finitely generated Puiseux monoids and numerical normal forms.
//! * [`factor_engine`]: canonical factorizations and divisor enumeration in `Q[S]`.
//! * [`parser`]: the text format shared by the CLI and the C bindings.
//!
//! ```
//! use puiseux::factor_engine::{canonical_factorization, divisors_in_algebra, DEFAULT_SUBSET_LIMIT};
//! use puiseux::parser::{parse_monoid, parse_poly};
//!
//! let f = parse_poly("X^6 - 1")?;
//! let s = parse_monoid("<2, 3>")?;
//! let set = divisors_in_algebra(&f, &s, DEFAULT_SUBSET_LIMIT)?;
//! assert_eq!(set.len(), 6);
//!
//! let g = parse_poly("X^(3/2) - X^(1/2)")?;
//! let cf = canonical_factorization(&g)?;
//! assert_eq!(cf.clearing_denominator, 2);
//! assert_eq!(cf.recompose()?, g);
//! # Ok::<(), puiseux::Error>(())
//! ```

pub mod cli;
pub mod cyclotomic;
pub mod error;
pub mod exact;
pub mod factor_engine;
pub mod monoid;
pub mod parser;
pub mod poly;
pub mod qpoly;

pub use error::{Error, Result};
pub use exact::{Coeff, PrimeFieldElem, Rat};
pub use factor_engine::{CanonicalFactorization, DivisorSet};
pub use monoid::{NumericalMonoid, PuiseuxMonoid};
pub use poly::PuiseuxPoly;
pub use qpoly::{QFactorization, QPoly};
