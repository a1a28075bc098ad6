//! Exhaustive checks of monomial bent functions over GF(2^n), n = 2k.
//!
//! The crate covers field arithmetic with log/exp tables ([`gf2n`]), the
//! modular weight machinery behind the Langevin–Leander condition
//! ([`weights`]), truth tables and fast Walsh transforms ([`boolfun`]), bent
//! components of vectorial functions and the five monomial families
//! ([`bentcomp`]), Kloosterman sums ([`kloosterman`]) and complex Gauss sums
//! ([`charsums`]). [`cli`] wires them into the `monobent` binary.
//!
//! ```
//! use monobent::{bentcomp, FieldCtx};
//!
//! let ctx = FieldCtx::new(6).unwrap();
//! assert_eq!(bentcomp::open_problem_scan(&ctx).unwrap(), vec![9, 18, 36]);
//! ```

pub mod bentcomp;
pub mod boolfun;
pub mod charsums;
pub mod cli;
pub mod error;
pub mod gf2n;
pub mod kloosterman;
pub mod weights;

pub use boolfun::{is_bent, monomial, walsh, BoolFun, WalshSpectrum};
pub use error::{Error, Result};
pub use gf2n::{Elem, FieldCtx};
