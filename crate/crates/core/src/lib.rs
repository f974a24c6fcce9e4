//! Exact homological algebra for bound quiver algebras.
//!
//! The crate computes projective covers, syzygies, minimal projective
//! resolutions and Ext tables over finite-dimensional monomial path algebras
//! with coefficients in a prime field, and builds Koszul-type cones of
//! syzygy-level maps on top of them. The circular selfinjective Nakayama
//! algebras `kΓ/J^{n+1}` get exact fast paths and a dedicated report that
//! checks Ext-vanishing gaps and (a)symmetry across the family.
//!
//! ```
//! use nakayama_ext::{algebra::nakayama_algebra, homology::ext_table, linalg::FieldSpec, rep::simple};
//!
//! let a = nakayama_algebra(3, 2, FieldSpec::default())?;
//! let s1 = simple(&a, 1)?;
//! let s2 = simple(&a, 2)?;
//! assert_eq!(ext_table(&s1, &s2, 6)?.dims(), &[1, 0, 1, 0, 1, 0]);
//! assert_eq!(ext_table(&s2, &s1, 6)?.dims(), &[0; 6]);
//! # Ok::<(), nakayama_ext::Error>(())
//! ```

pub mod algebra;
pub mod cli;
pub mod error;
pub mod homology;
pub mod koszul;
pub mod linalg;
pub mod rep;

pub use error::{Error, Result};

/// Seed for every randomized fallback. Recorded in all reports.
pub const SEED: u64 = 0x6e61_6b61_7961_6d61;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/linear-algebra.md")]
    mod linear_algebra {}
    #[doc = include_str!("../../../book/src/algebras.md")]
    mod algebras {}
    #[doc = include_str!("../../../book/src/modules.md")]
    mod modules {}
    #[doc = include_str!("../../../book/src/resolutions.md")]
    mod resolutions {}
    #[doc = include_str!("../../../book/src/koszul.md")]
    mod koszul {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
