//! Crate-wide error type.

use thiserror::Error;

use crate::root_system::{Series, SimpleType};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Rank outside the bounds of the series (A≥1, B≥2, C≥2, D≥4, E∈{6,7,8}, F=4, G=2).
    #[error("invalid simple type: {series:?} of rank {rank}")]
    InvalidType { series: Series, rank: usize },

    /// Vertex index outside 1..=rank.
    #[error("vertex {vertex} out of range for {stype}")]
    InvalidVertex { stype: SimpleType, vertex: usize },

    /// Rank argument outside the supported range.
    #[error("{0}")]
    InvalidRank(String),

    /// The two marked simple roots of a pair must be distinct.
    #[error("alpha and beta must be distinct vertices")]
    EqualVertices,

    /// A coordinate vector that is not a root of the ambient system.
    #[error("not a root of {stype}")]
    NotARoot { stype: SimpleType },

    /// Weyl dimension formula requires a dominant weight.
    #[error("weight is not dominant")]
    NotDominant,

    /// Operation defined only for special pairs.
    #[error("pair ({stype}, alpha={alpha}, beta={beta}) is not special")]
    NotSpecial {
        stype: SimpleType,
        alpha: usize,
        beta: usize,
    },

    /// Automorphism-group dimension is defined only for the non-homogeneous families.
    #[error("pair belongs to a homogeneous family; no nontrivial unipotent part")]
    HomogeneousFamily,

    /// Representation dimension does not fit in the return type.
    #[error("representation dimension exceeds u128")]
    DimensionOverflow,

    /// Structural invariant violated; unreachable from valid inputs.
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
