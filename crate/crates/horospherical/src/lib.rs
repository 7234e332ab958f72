//! Exact combinatorics of rank-one horospherical homogeneous spaces.
//!
//! The crate mechanizes, by integer arithmetic only, the classification of
//! smooth projective horospherical varieties with Picard number one: it
//! enumerates the special pairs of simple roots (eight parametric families),
//! computes their dimensions, Picard data of the four projective embeddings,
//! normal-bundle section modules, and automorphism-group dimensions.
//!
//! Modules, bottom up:
//!
//! - [`root_system`] — Cartan matrices, positive roots, weights, reflections,
//!   parabolic longest words, the Weyl dimension formula;
//! - [`dynkin`] — induced subdiagrams, connected components, component-type
//!   classification, end admissibility, diagram automorphisms;
//! - [`horo`] — rank-one pairs (Γ, α, β), their four colored-fan embeddings,
//!   Picard numbers, the specialness predicate, the dimension formula;
//! - [`classify`] — exhaustive enumeration of the special pairs, family
//!   labeling, marked-diagram decompositions and the projective-space test;
//! - [`geometry`] — section modules of normal bundles by the antidominance
//!   criterion, homogeneity verdicts, automorphism-group data, ambient
//!   projective dimensions;
//! - [`report`] — per-pair reports, classification tables, JSON rendering;
//! - [`selftest`] — named invariant suites behind the `selftest` CLI command.
//!
//! Start with the runnable programs under `examples/`; each demonstrates one
//! capability end to end. The `horoclass` binary exposes the same entry
//! points as `classify`, `inspect` and `selftest` subcommands.

pub mod classify;
pub mod dynkin;
pub mod error;
pub mod geometry;
pub mod horo;
pub mod report;
pub mod root_system;
pub mod selftest;

pub use classify::{
    enumerate_special, match_families, picard_one_shape, projective_space_decomposition,
    record_for, ClassificationRecord, FamilyMatch, MarkedDiagram, PicardOneShape,
};
pub use error::{Error, Result};
pub use geometry::{
    ambient_dim, aut_dim, fiber_lowest_weight, homogeneity, normal_sections, HomogeneityReport,
    OrbitSide, SectionModule,
};
pub use horo::{
    color_images, dimension, embeddings, is_special, picard_number, EmbeddingFan, HoroPair,
    PicardData,
};
pub use report::{report_for, Report};
pub use root_system::{RootSystem, RootVector, Series, SimpleType, Weight, WeylWord};
