//! Polyhedral realizations of the crystal bases `B(infinity)` and `B(lambda)`
//! for the affine families `A^(1)_{n-1}`, `C^(1)_{n-1}`, `A^(2)_{2n-2}` and
//! `D^(2)_n`.
//!
//! Inequalities come from two independent sources: the rewriting closure of
//! [`inequality`], and the closed forms indexed by diagrams and walls in
//! [`shapes`]. The [`oracle`] module computes the crystal itself by applying
//! Kashiwara operators, which is what both are checked against.

pub mod cartan;
pub mod config;
pub mod crystal;
pub mod error;
pub mod form;
pub mod inequality;
pub mod oracle;
pub mod shapes;

pub use cartan::{AdaptedSequence, AffineType, CartanData, Family, PMatrix, Setting, ShapeClass};
pub use config::Config;
pub use crystal::{Crystal, Weight, WeightSpec};
pub use error::{Error, Result};
pub use form::{LinearForm, ZVector};
