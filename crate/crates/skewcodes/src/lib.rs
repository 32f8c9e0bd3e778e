//! Exact computer algebra for self-dual skew constacyclic codes over the
//! chain ring R = F_q + uF_q (u² = 0): finite fields, the twisted
//! polynomial ring R[x;Θ], central factorizations of xⁿ−1, code
//! construction and verification, and the Gray map to F_q^{2n}.

pub mod chain_ring;
pub mod cli;
pub mod codes;
pub mod constructor;
pub mod error;
pub mod factorize;
pub mod gf;
pub mod gray;
mod linalg;
pub mod skew_poly;

pub use chain_ring::{RElement, RingAutomorphism};
pub use codes::{LinearCode, Metric, ShiftOperator};
pub use constructor::{CodeKind, ConstructOptions, ConstructionReport, Existence};
pub use error::{Error, Result};
pub use gf::{minus_one_is_square, multiplicative_order, FieldElement, FieldSpec};
pub use skew_poly::SkewPoly;
