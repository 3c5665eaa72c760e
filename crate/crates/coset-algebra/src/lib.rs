//! Exact measure and function *-algebras on left coset spaces G/H of finite
//! groups.
//!
//! For a finite group G with subgroup H, this crate builds the transfer
//! operators between G and G/H (the fiber average T_H on functions and
//! measures, the lifts ψ_q and λ_q, the left-average J), the convolutions
//! and involutions on L¹(G), M(G), L¹(G/H, μ), and M(G/H), and a verifier
//! that checks every defining identity of those structures over a catalog of
//! small groups — exactly, in rational-complex arithmetic, with
//! counterexample witnesses on failure.
//!
//! The interesting territory is a non-normal H: G/H is then only a
//! homogeneous space, the convolution needs the H-averaged kernel to be
//! well defined, and the involution is isometric exactly on the subalgebra
//! of left-H-invariant measures.

pub mod algebra;
pub mod analysis;
pub mod error;
pub mod group;
pub mod scalar;
pub mod transfer;
pub mod verifier;

pub use analysis::{
    FunctionOn, HaarStructure, MeasureOn, SpaceId, SpaceKind, Weights,
};
pub use error::Error;
pub use group::{
    catalog, is_normal, left_cosets, quotient_group, subgroup_closure, CatalogEntry, CosetSpace,
    FiniteGroup, GroupElement, Subgroup,
};
pub use scalar::{ExactScalar, FloatScalar, RadicalSum, Scalar};
pub use transfer::{SpaceTag, TransferContext};
