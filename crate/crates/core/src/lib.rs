//! Exact combinatorics of ad-nilpotent ideals of a Borel subalgebra: root
//! posets, affine Weyl group encodings, the Shi-type arrangement, and the
//! duality on ideals in classical types.

pub mod affine;
pub mod arrange;
pub mod bitset;
pub mod duality;
pub mod error;
pub mod ideals;
pub mod linalg;
pub mod record;
pub mod rootsys;
pub mod verify;

pub use affine::{AffineRoot, AffineWeylElement, LatticePoint};
pub use bitset::RootSet;
pub use error::{Error, Result};
pub use ideals::{enumerate_ideals, Antichain, Ideal};
pub use linalg::Q;
pub use rootsys::{CartanType, RootSystem};
