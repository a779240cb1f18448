//! Exact computation of Kac polynomials of quivers and the quantities they control.
//!
//! For a finite loop-free quiver this crate computes
//!
//! - Kac polynomials `a_α(q)` from Hua's series `r(q)` and the plethystic logarithm,
//! - root multiplicities of the associated Kac–Moody algebra (Peterson recursion),
//! - weight multiplicities of integrable highest-weight modules, both as level-one
//!   root multiplicities of the framed quiver and by Freudenthal's recursion,
//! - Poincaré polynomials of Nakajima quiver varieties, from the framed Kac
//!   polynomial and from the ratio of framed to unframed `r`-series,
//! - brute-force counts of absolutely indecomposable representations over prime
//!   fields, used as an oracle for everything above.
//!
//! All arithmetic is exact. The crate is `no_std` and only needs `alloc`; IO, file
//! formats and the command line live in the `quiverkac` crate.
#![no_std]

extern crate alloc;
#[cfg(feature = "parallel")]
extern crate std;

pub mod error;
pub mod fforacle;
pub mod kac;
pub mod kacmoody;
pub mod partitions;
pub mod poly;
pub mod quiver;
pub mod ratfunc;
pub mod series;
pub mod varieties;

pub use error::{Error, Result};
pub use kac::{a_series, framed_slice, kac_polynomial, r_alpha, r_series, KacPolynomial, SliceKind};
pub use kacmoody::{
    character_level_one, is_real_root, peterson, weight_mult_freudenthal, weight_mult_level_one, HighestWeight,
    RootTable, WeightMultTable,
};
pub use poly::Poly;
pub use quiver::{CartanData, DimVector, Quiver};
pub use ratfunc::RationalFunction;
pub use series::{moebius, DimBox, TruncatedSeries};
pub use varieties::{euler_characteristic, poincare_via_hausel, poincare_via_kac, weight_mult_via_betti, BettiProfile};
