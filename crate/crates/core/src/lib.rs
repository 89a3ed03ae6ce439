//! Exact computations with free G-SFTs presented as square matrices over the
//! integral group ring `Z_+[G]` of a finite group.
//!
//! The crate is organised bottom-up:
//!
//! * [`group`]: finite groups as multiplication tables, subgroups, regular
//!   permutation matrices;
//! * [`ring`]: `Z[G]` arithmetic;
//! * [`matrix`], [`poly`]: labelled exact matrices and `det(I - tA)`;
//! * [`gsft`]: augmentation, extension, inertness and quotients of free
//!   graph actions;
//! * [`equivalence`]: shift-equivalence witnesses and their constructions;
//! * [`periodic`]: periodic-point censuses and the Kim–Roush condition;
//! * [`flow`]: weight classes and elementary positive moves;
//! * [`json`]: the JSON interchange formats.

pub mod equivalence;
pub mod error;
pub mod flow;
pub mod group;
pub mod gsft;
pub mod json;
pub mod label;
pub mod matrix;
pub mod periodic;
pub mod poly;
pub mod ring;

pub use error::{Error, Result};
pub use group::{FiniteGroup, GroupElement, GroupSpec, Subgroup};
pub use label::Label;
pub use matrix::{GroupRingMatrix, IntMatrix, Matrix};
pub use poly::{IntPoly, ReciprocalCharPoly};
pub use ring::GroupRingElement;
