//! Affine Weyl group computations for the dimension of the minimal-length
//! stratum `X(mu, b_max)` of an affine Deligne-Lusztig variety.
//!
//! The crate is organised bottom-up: [`rootdata`] builds finite root systems
//! and diagram automorphisms, [`weyl`] implements the finite Weyl group,
//! [`qbg`] the quantum Bruhat graph, [`affine`] the extended affine Weyl group
//! with its Demazure product and generic Newton points, and [`newton`] the
//! dimension formula and its cross-checks. [`tables`] holds closed forms
//! written out case by case, and [`suites`] runs the named verification
//! suites over them.

pub mod error;
pub mod linalg;
pub mod rootdata;
pub mod weyl;
pub mod qbg;
pub mod affine;
pub mod newton;
pub mod suites;
pub mod tables;

pub use affine::{AffineElement, AffineWeyl, FrobeniusDatum, GenericNewtonPoint};
pub use error::{Error, Result};
pub use linalg::Q;
pub use rootdata::{
    AffineDiagramAutomorphism, CartanDatum, CoweightVector, DiagramAutomorphism, RootSystem,
    TypeLetter, MAX_RANK,
};
pub use newton::{dim_x_mu_bmax, xi_sigma, Caps, DimensionReport, NewtonPoint, Strategy};
pub use qbg::{IndexedQbg, Qbg};
pub use weyl::{ElementKey, EnumeratedGroup, TwistedClass, Weyl, WeylElement};
