//! Exact machinery for Kac-module resolutions of the irreducible tensor modules of the
//! general linear superalgebra gl(m|n).
//!
//! The crate is organised bottom-up:
//!  - [`partitions`]: partition arithmetic and the half-integer set identities behind the
//!    Casimir comparison;
//!  - [`weights`]: integral weights of gl(m+n) and gl(m|n), the conjugation map on the
//!    positive block, bilinear forms and Casimir scalars;
//!  - [`weyl_cosets`]: the dot action and the minimal coset representatives indexing the
//!    resolution layers;
//!  - [`bruhat_order`]: ordinary and super Bruhat comparisons;
//!  - [`characters`]: the Laurent character ring, Schur and hook Schur functions, Kac
//!    characters and the Euler characteristic check;
//!  - [`replab`]: explicit finite-dimensional realizations over the rationals (Kac modules,
//!    singular vectors, cohomology of the odd radical, the gl(1|2) Verma module).

pub mod bruhat_order;
pub mod characters;
pub mod error;
pub mod linalg;
pub mod partitions;
pub mod replab;
pub mod weights;
pub mod weyl_cosets;

pub use characters::{G0Decomposition, SparseLaurent};
pub use error::{Error, Result};
pub use partitions::Partition;
pub use weights::{HalfInt, Rank, SuperWeight};
pub use weyl_cosets::CosetElement;
