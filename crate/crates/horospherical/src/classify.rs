//! Exhaustive enumeration of the special pairs, family labeling, and the
//! marked-diagram decomposition test deciding when the Picard-number-one
//! embedding is a projective space.
//!
//! The special pairs fall into eight parametric families:
//!
//! 1. (A_m, α_1, α_m) — the even quadric Q^{2m}
//! 2. (A_m, α_i, α_{i+1}) — the Grassmannian Gr(i+1, m+2)
//! 3. (B_m, α_{m−1}, α_m)
//! 4. (B_3, α_1, α_3)
//! 5. (C_m, α_i, α_{i+1}) — the odd symplectic Grassmannian Gr(i+1, 2m+1)
//! 6. (D_m, α_{m−1}, α_m) — the spinor variety of SO(2m+1)
//! 7. (F_4, α_2, α_3)
//! 8. (G_2, α_2, α_1)
//!
//! Families 1, 2, 6 are homogeneous; 3, 4, 5, 7, 8 are two-orbit varieties.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::dynkin::{admissible_end, diagram_automorphisms, Component, Diagram};
use crate::error::{Error, Result};
use crate::horo::{dimension, is_special, HoroPair};
use crate::root_system::{Series, SimpleType};

/// One family label with its matched parameters: `m` is the rank of the
/// template instance, `i` the position parameter of families 2 and 5.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FamilyMatch {
    pub id: u8,
    pub m: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub i: Option<usize>,
}

impl FamilyMatch {
    fn new(id: u8, m: usize) -> Self {
        FamilyMatch { id, m, i: None }
    }

    fn with_i(id: u8, m: usize, i: usize) -> Self {
        FamilyMatch { id, m, i: Some(i) }
    }

    /// Whether the family's Picard-one embedding is homogeneous.
    pub fn homogeneous(&self) -> bool {
        matches!(self.id, 1 | 2 | 6)
    }
}

impl fmt::Display for FamilyMatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.i {
            Some(i) => write!(f, "{} (m={}, i={})", self.id, self.m, i),
            None => write!(f, "{} (m={})", self.id, self.m),
        }
    }
}

/// A special pair with its family labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationRecord {
    pub pair: HoroPair,
    pub families: Vec<FamilyMatch>,
    pub dimension: u64,
    /// Whether the pair is the orbit representative under diagram
    /// automorphisms (the one enumeration emits).
    pub canonical: bool,
}

/// Family templates matching the literal (type, unordered pair). A pair may
/// instantiate several templates; B2 ≅ C2 makes families 3 and 5 coincide at
/// rank two, so each letter cross-lists the other's template there.
fn literal_matches(stype: SimpleType, a: usize, b: usize) -> Vec<FamilyMatch> {
    let (lo, hi) = if a < b { (a, b) } else { (b, a) };
    let m = stype.rank;
    let mut out = Vec::new();
    match stype.series {
        Series::A => {
            if m >= 2 && lo == 1 && hi == m {
                out.push(FamilyMatch::new(1, m));
            }
            if hi == lo + 1 {
                out.push(FamilyMatch::with_i(2, m, lo));
            }
        }
        Series::B => {
            if lo == m - 1 && hi == m {
                out.push(FamilyMatch::new(3, m));
            }
            if m == 3 && lo == 1 && hi == 3 {
                out.push(FamilyMatch::new(4, m));
            }
            if m == 2 {
                out.push(FamilyMatch::with_i(5, 2, 1));
            }
        }
        Series::C => {
            if hi == lo + 1 {
                out.push(FamilyMatch::with_i(5, m, lo));
            }
            if m == 2 {
                out.push(FamilyMatch::new(3, 2));
            }
        }
        Series::D => {
            if lo == m - 1 && hi == m {
                out.push(FamilyMatch::new(6, m));
            }
        }
        Series::E => {}
        Series::F => {
            if lo == 2 && hi == 3 {
                out.push(FamilyMatch::new(7, m));
            }
        }
        Series::G => {
            out.push(FamilyMatch::new(8, m));
        }
    }
    out.sort();
    out
}

/// The stored (α, β) order of a record follows the printed order of its
/// lowest-numbered family template.
fn template_order(families: &[FamilyMatch], lo: usize, hi: usize) -> (usize, usize) {
    match families.first().map(|f| f.id) {
        // (G_2, α_2, α_1): the larger index comes first.
        Some(8) => (hi, lo),
        _ => (lo, hi),
    }
}

/// The orbit of an unordered pair under the diagram automorphisms.
fn pair_orbit(stype: SimpleType, a: usize, b: usize) -> BTreeSet<(usize, usize)> {
    let mut orbit = BTreeSet::new();
    for perm in diagram_automorphisms(stype) {
        let (ia, ib) = (perm[a - 1], perm[b - 1]);
        orbit.insert((ia.min(ib), ia.max(ib)));
    }
    orbit
}

/// Orbit representative: the lexicographically smallest orbit element that
/// literally instantiates a template, falling back to the smallest element.
/// For the D4 triality orbit {13, 14, 34} this picks (α_3, α_4).
fn canonical_unordered(stype: SimpleType, a: usize, b: usize) -> (usize, usize) {
    let orbit = pair_orbit(stype, a, b);
    orbit
        .iter()
        .copied()
        .find(|&(x, y)| !literal_matches(stype, x, y).is_empty())
        .unwrap_or_else(|| *orbit.first().expect("orbit is never empty"))
}

/// Every family template the pair instantiates. Literal matches are
/// preferred; a special pair with no literal match (only the exotic D4
/// pairs) reports the templates of its orbit representative.
pub fn match_families(pair: &HoroPair) -> Result<Vec<FamilyMatch>> {
    let literal = literal_matches(pair.stype, pair.alpha, pair.beta);
    if !literal.is_empty() {
        return Ok(literal);
    }
    if !is_special(pair)? {
        return Ok(Vec::new());
    }
    let (a, b) = canonical_unordered(pair.stype, pair.alpha, pair.beta);
    Ok(literal_matches(pair.stype, a, b))
}

/// Full record for one pair: family labels, dimension, canonicity flag.
pub fn record_for(pair: &HoroPair) -> Result<ClassificationRecord> {
    let families = match_families(pair)?;
    let sorted = (pair.alpha.min(pair.beta), pair.alpha.max(pair.beta));
    let canonical = canonical_unordered(pair.stype, pair.alpha, pair.beta) == sorted;
    Ok(ClassificationRecord {
        pair: *pair,
        families,
        dimension: dimension(pair)?,
        canonical,
    })
}

/// Simple types enumerated for the classification. C starts at rank 3: the
/// C2 homogeneous spaces are already covered by B2, whose record carries
/// both family labels.
fn enumeration_types(max_rank: usize) -> Vec<SimpleType> {
    let mut out = Vec::new();
    for rank in 2..=max_rank {
        for (series, min_rank) in [
            (Series::A, 2),
            (Series::B, 2),
            (Series::C, 3),
            (Series::D, 4),
            (Series::E, 6),
            (Series::F, 4),
            (Series::G, 2),
        ] {
            if rank >= min_rank {
                if let Ok(t) = SimpleType::new(series, rank) {
                    out.push(t);
                }
            }
        }
    }
    out
}

/// All special pairs over all simple types of rank ≤ `max_rank`, one record
/// per orbit under diagram automorphisms, each labeled with every matching
/// family and sorted by (lowest family, rank, series, indices).
pub fn enumerate_special(max_rank: usize) -> Result<Vec<ClassificationRecord>> {
    if max_rank < 1 {
        return Err(Error::InvalidRank("max_rank must be at least 1".into()));
    }
    let mut records = Vec::new();
    for stype in enumeration_types(max_rank) {
        for a in 1..=stype.rank {
            for b in (a + 1)..=stype.rank {
                let probe = HoroPair::new(stype, a, b)?;
                if !is_special(&probe)? {
                    continue;
                }
                if canonical_unordered(stype, a, b) != (a, b) {
                    continue;
                }
                let families = literal_matches(stype, a, b);
                if families.is_empty() {
                    return Err(Error::Internal(format!(
                        "special orbit representative {probe} matches no family"
                    )));
                }
                let (alpha, beta) = template_order(&families, a, b);
                let pair = HoroPair::new(stype, alpha, beta)?;
                records.push(ClassificationRecord {
                    pair,
                    families,
                    dimension: dimension(&pair)?,
                    canonical: true,
                });
            }
        }
    }
    records.sort_by_key(|r| {
        (
            r.families.first().map(|f| f.id).unwrap_or(u8::MAX),
            r.pair.stype.rank,
            r.pair.stype.series,
            r.pair.alpha.min(r.pair.beta),
            r.pair.alpha.max(r.pair.beta),
        )
    });
    Ok(records)
}

/// A diagram (possibly disconnected) with a set of marked vertices — the
/// simple roots carrying colors — and the rank `n` of the torus fiber.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkedDiagram {
    pub diagram: Diagram,
    pub marked: Vec<usize>,
    pub n: usize,
}

impl MarkedDiagram {
    pub fn new(diagram: Diagram, marked: Vec<usize>, n: usize) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for &v in &marked {
            if !diagram.vertices.contains(&v) {
                return Err(Error::InvalidVertex {
                    stype: diagram.ambient,
                    vertex: v,
                });
            }
            if !seen.insert(v) {
                return Err(Error::EqualVertices);
            }
        }
        if marked.is_empty() || n < 1 || marked.len() > n + 1 {
            return Err(Error::Internal(format!(
                "marked count {} incompatible with rank {n}",
                marked.len()
            )));
        }
        Ok(MarkedDiagram { diagram, marked, n })
    }
}

/// Assignment of each marked root to its own admissible A- or C-type
/// component, plus the unmarked leftover components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub assigned: Vec<(usize, Component)>,
    pub leftover: Vec<Component>,
}

/// Splits the diagram so that each marked root is an admissible end of its
/// own A- or C-type component; `None` when two marked roots share a
/// component or some component refuses its marked root.
pub fn projective_space_decomposition(md: &MarkedDiagram) -> Result<Option<Decomposition>> {
    let components = md.diagram.components()?;
    let mut assigned = Vec::new();
    let mut leftover = Vec::new();
    for component in components {
        let marked_here: Vec<usize> = md
            .marked
            .iter()
            .copied()
            .filter(|&v| component.contains(v))
            .collect();
        match marked_here.as_slice() {
            [] => leftover.push(component),
            [v] => {
                if !admissible_end(&component, *v) {
                    return Ok(None);
                }
                assigned.push((*v, component));
            }
            _ => return Ok(None),
        }
    }
    Ok(Some(Decomposition { assigned, leftover }))
}

/// Shape of the Picard-number-one embedding determined by a marked diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PicardOneShape {
    /// The embedding is a projective space.
    ProjectiveSpace,
    /// Rank one, both colors in one component, special pair: the genuinely
    /// new varieties.
    SpecialPair(HoroPair),
    /// No smooth projective embedding with Picard number one exists.
    NotSmoothPicardOne,
}

impl fmt::Display for PicardOneShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PicardOneShape::ProjectiveSpace => write!(f, "projective space"),
            PicardOneShape::SpecialPair(pair) => write!(f, "special pair {pair}"),
            PicardOneShape::NotSmoothPicardOne => {
                write!(f, "no smooth Picard-one embedding")
            }
        }
    }
}

/// Decides the shape: fewer colors than rank always gives a projective
/// space; with n+1 colors, a successful decomposition gives a projective
/// space, and the remaining rank-one two-color case reduces to the
/// specialness of the pair inside its component.
pub fn picard_one_shape(md: &MarkedDiagram) -> Result<PicardOneShape> {
    if md.marked.len() <= md.n {
        return Ok(PicardOneShape::ProjectiveSpace);
    }
    if projective_space_decomposition(md)?.is_some() {
        return Ok(PicardOneShape::ProjectiveSpace);
    }
    if md.n == 1 && md.marked.len() == 2 {
        let (a, b) = (md.marked[0], md.marked[1]);
        if let Some(component) = md.diagram.component_of(a)? {
            if component.contains(b) {
                let t = component.classified_type;
                let pa = component
                    .position(a)
                    .ok_or_else(|| Error::Internal("marked vertex lost".into()))?;
                let pb = component
                    .position(b)
                    .ok_or_else(|| Error::Internal("marked vertex lost".into()))?;
                let probe = HoroPair::new(t, pa, pb)?;
                if is_special(&probe)? {
                    let families = match_families(&probe)?;
                    let (lo, hi) = (pa.min(pb), pa.max(pb));
                    let (alpha, beta) = template_order(&families, lo, hi);
                    return Ok(PicardOneShape::SpecialPair(HoroPair::new(t, alpha, beta)?));
                }
            }
        }
    }
    Ok(PicardOneShape::NotSmoothPicardOne)
}
