//! Homogeneity analysis of the Picard-number-one embeddings: normal-bundle
//! section modules via the antidominance criterion, homogeneous-model naming,
//! automorphism-group description and dimension, ambient projective
//! dimension.
//!
//! A special pair embeds in P(V(ω_β) ⊕ V(ω_α)) with two closed orbits, the
//! flag varieties of the maximal parabolics attached to α (side Y) and β
//! (side Z). The closed orbit on one side is rigid exactly when the normal
//! bundle there has no global sections, which happens iff the lowest weight
//! of the normal fiber module fails to be antidominant. The sections on the
//! flexible side form the unipotent part of the full automorphism group.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::classify::{match_families, FamilyMatch};
use crate::error::{Error, Result};
use crate::horo::{is_special, HoroPair};
use crate::root_system::{RootSystem, Weight};

/// The two closed orbits: Y lives over the parabolic of ω_α, Z over the
/// parabolic of ω_β. Fixed by the pair's stored (α, β) order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum OrbitSide {
    Y,
    Z,
}

impl OrbitSide {
    pub const BOTH: [OrbitSide; 2] = [OrbitSide::Y, OrbitSide::Z];
}

impl fmt::Display for OrbitSide {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrbitSide::Y => write!(f, "Y"),
            OrbitSide::Z => write!(f, "Z"),
        }
    }
}

/// Global sections of the normal bundle of one closed orbit: zero, or a
/// single irreducible module.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SectionModule {
    Zero,
    Irreducible { highest_weight: Weight, dim: u128 },
}

impl SectionModule {
    pub fn is_zero(&self) -> bool {
        matches!(self, SectionModule::Zero)
    }
}

impl fmt::Display for SectionModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SectionModule::Zero => write!(f, "0"),
            SectionModule::Irreducible {
                highest_weight,
                dim,
            } => write!(f, "V({highest_weight}), dim {dim}"),
        }
    }
}

/// Automorphism-group data of a non-homogeneous embedding.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AutData {
    pub description: String,
    pub dim: u128,
}

/// Homogeneity verdict for the Picard-number-one embedding of a special
/// pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomogeneityReport {
    pub homogeneous: bool,
    /// Classical model, when one exists: quadric, Grassmannian, spinor
    /// variety, odd symplectic Grassmannian.
    pub model: Option<String>,
    /// Connected automorphism group of the two-orbit cases; `None` for the
    /// homogeneous families.
    pub aut: Option<AutData>,
    /// Orbits of the full automorphism group.
    pub orbit_count: u32,
}

/// Lowest weight of the fiber module of the open embedding around the given
/// closed orbit: the parabolic longest word applied to the generator of M.
/// Side Z carries V_Z of highest weight ω_α − ω_β, side Y its negative.
pub fn fiber_lowest_weight(pair: &HoroPair, side: OrbitSide) -> Result<Weight> {
    require_special(pair)?;
    let rs = RootSystem::new(pair.stype)?;
    let (removed, generator) = match side {
        OrbitSide::Z => (pair.beta, pair.lattice_generator()),
        OrbitSide::Y => (pair.alpha, -&pair.lattice_generator()),
    };
    let subset: Vec<usize> = (1..=pair.stype.rank).filter(|&v| v != removed).collect();
    let word = rs.longest_word(&subset)?;
    rs.apply_word(&word, &generator)
}

/// Sections of the normal bundle of a closed orbit: zero unless the fiber's
/// lowest weight is antidominant, in which case the sections form the
/// irreducible module generated by the dominant representative of its Weyl
/// orbit.
pub fn normal_sections(pair: &HoroPair, side: OrbitSide) -> Result<SectionModule> {
    let lowest = fiber_lowest_weight(pair, side)?;
    if !lowest.is_antidominant() {
        return Ok(SectionModule::Zero);
    }
    let rs = RootSystem::new(pair.stype)?;
    let highest_weight = rs.dominant_representative(&lowest);
    let dim = rs.weyl_dim(&highest_weight)?;
    Ok(SectionModule::Irreducible {
        highest_weight,
        dim,
    })
}

/// Homogeneity verdict with model name, automorphism data and orbit count.
pub fn homogeneity(pair: &HoroPair) -> Result<HomogeneityReport> {
    let families = require_special(pair)?;
    let homogeneous = families[0].homogeneous();
    if families.iter().any(|f| f.homogeneous() != homogeneous) {
        return Err(Error::Internal(
            "family labels disagree on homogeneity".into(),
        ));
    }

    if homogeneous {
        return Ok(HomogeneityReport {
            homogeneous: true,
            model: model_name(&families),
            aut: None,
            orbit_count: 1,
        });
    }

    let (_, sections) = flexible_side(pair)?;
    let SectionModule::Irreducible {
        highest_weight,
        dim,
    } = sections
    else {
        return Err(Error::Internal("flexible side lost its sections".into()));
    };
    let reductive = reductive_part(&families)?;
    let description = format!("({reductive}) ⋉ V({highest_weight})");
    let aut_dim = pair.stype.group_dim() as u128 + 1 + dim;
    Ok(HomogeneityReport {
        homogeneous: false,
        model: model_name(&families),
        aut: Some(AutData {
            description,
            dim: aut_dim,
        }),
        orbit_count: 2,
    })
}

/// Dimension of the connected automorphism group of a non-homogeneous
/// embedding: dim G + 1 (torus factor) + dim of the unipotent part.
pub fn aut_dim(pair: &HoroPair) -> Result<u128> {
    let families = require_special(pair)?;
    if families[0].homogeneous() {
        return Err(Error::HomogeneousFamily);
    }
    let (_, sections) = flexible_side(pair)?;
    match sections {
        SectionModule::Irreducible { dim, .. } => Ok(pair.stype.group_dim() as u128 + 1 + dim),
        SectionModule::Zero => Err(Error::Internal("no flexible side found".into())),
    }
}

/// Dimension of the ambient projective space P(V(ω_β) ⊕ V(ω_α)).
pub fn ambient_dim(pair: &HoroPair) -> Result<u128> {
    let rs = RootSystem::new(pair.stype)?;
    let dim_alpha = rs.weyl_dim(&Weight::fundamental(pair.stype.rank, pair.alpha))?;
    let dim_beta = rs.weyl_dim(&Weight::fundamental(pair.stype.rank, pair.beta))?;
    Ok(dim_alpha + dim_beta - 1)
}

/// The side whose normal bundle has sections, with the module. For every
/// non-homogeneous pair exactly one side qualifies.
fn flexible_side(pair: &HoroPair) -> Result<(OrbitSide, SectionModule)> {
    let y = normal_sections(pair, OrbitSide::Y)?;
    let z = normal_sections(pair, OrbitSide::Z)?;
    match (y.is_zero(), z.is_zero()) {
        (false, true) => Ok((OrbitSide::Y, y)),
        (true, false) => Ok((OrbitSide::Z, z)),
        _ => Err(Error::Internal(format!(
            "expected exactly one rigid closed orbit for {pair}"
        ))),
    }
}

fn require_special(pair: &HoroPair) -> Result<Vec<FamilyMatch>> {
    if !is_special(pair)? {
        return Err(Error::NotSpecial {
            stype: pair.stype,
            alpha: pair.alpha,
            beta: pair.beta,
        });
    }
    let families = match_families(pair)?;
    if families.is_empty() {
        return Err(Error::Internal("special pair without family labels".into()));
    }
    Ok(families)
}

/// Classical model name, read off the family parameters.
fn model_name(families: &[FamilyMatch]) -> Option<String> {
    for f in families {
        match (f.id, f.i) {
            (1, _) => return Some(format!("quadric Q^{}", 2 * f.m)),
            (2, Some(i)) => return Some(format!("Grassmannian Gr({}, {})", i + 1, f.m + 2)),
            (6, _) => return Some(format!("spinor variety SO({})/P(w{})", 2 * f.m + 1, f.m)),
            _ => {}
        }
    }
    // Among the two-orbit families only the odd symplectic Grassmannian has
    // a classical name.
    families.iter().find(|f| f.id == 5).map(|f| {
        let i = f.i.unwrap_or(1);
        format!("odd symplectic Grassmannian Gr({}, {})", i + 1, 2 * f.m + 1)
    })
}

/// Reductive part of the automorphism group, from the lowest family label.
fn reductive_part(families: &[FamilyMatch]) -> Result<String> {
    let f = families[0];
    Ok(match f.id {
        3 => format!("SO({}) × C*", 2 * f.m + 1),
        4 => "SO(7) × C*".to_string(),
        5 => format!("(Sp({}) × C*)/{{±1}}", 2 * f.m),
        7 => "F4 × C*".to_string(),
        8 => "G2 × C*".to_string(),
        other => {
            return Err(Error::Internal(format!(
                "family {other} has no two-orbit automorphism data"
            )))
        }
    })
}
