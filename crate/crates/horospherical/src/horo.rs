//! Rank-one horospherical pairs (Γ, α, β), their four complete colored fans,
//! the Picard-number formula, the specialness predicate and the dimension
//! formula.
//!
//! The homogeneous space attached to a pair is the kernel of ω_α − ω_β inside
//! the intersection of the two maximal parabolics; its weight lattice M is
//! generated by ω_α − ω_β, so N ≅ ℤ and every complete fan has the two rays
//! ±1. The color attached to α sits on +1, the one attached to β on −1.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::dynkin::{admissible_end, subdiagram};
use crate::error::{Error, Result};
use crate::root_system::{RootSystem, RootVector, SimpleType, Weight};

/// An ordered pair of distinct simple roots of one simple type. The order is
/// presentation data (it fixes which closed orbit is called Y and which Z);
/// specialness and classification treat the pair as unordered.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HoroPair {
    pub stype: SimpleType,
    pub alpha: usize,
    pub beta: usize,
}

impl HoroPair {
    pub fn new(stype: SimpleType, alpha: usize, beta: usize) -> Result<Self> {
        for v in [alpha, beta] {
            if v < 1 || v > stype.rank {
                return Err(Error::InvalidVertex { stype, vertex: v });
            }
        }
        if alpha == beta {
            return Err(Error::EqualVertices);
        }
        Ok(HoroPair { stype, alpha, beta })
    }

    /// The same pair with α and β exchanged.
    pub fn swapped(&self) -> HoroPair {
        HoroPair {
            stype: self.stype,
            alpha: self.beta,
            beta: self.alpha,
        }
    }

    /// ω_α − ω_β, the generator of the rank-one lattice M.
    pub fn lattice_generator(&self) -> Weight {
        let a = Weight::fundamental(self.stype.rank, self.alpha);
        let b = Weight::fundamental(self.stype.rank, self.beta);
        &a - &b
    }

    /// The unmarked simple roots I = S ∖ {α, β}.
    pub fn fixed_set(&self) -> Vec<usize> {
        (1..=self.stype.rank)
            .filter(|&v| v != self.alpha && v != self.beta)
            .collect()
    }
}

impl fmt::Display for HoroPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, a{}, a{})", self.stype, self.alpha, self.beta)
    }
}

/// Images of the two colors in N ≅ ℤ: the restrictions of α̌ and β̌ to
/// M = ℤ·(ω_α − ω_β). Always (+1, −1) by the duality of the weight basis;
/// computed honestly from the pairing.
pub fn color_images(pair: &HoroPair) -> Result<(i64, i64)> {
    let rs = RootSystem::new(pair.stype)?;
    let generator = pair.lattice_generator();
    let alpha_image = rs.pairing(&generator, &RootVector::simple(pair.stype.rank, pair.alpha))?;
    let beta_image = rs.pairing(&generator, &RootVector::simple(pair.stype.rank, pair.beta))?;
    Ok((alpha_image, beta_image))
}

/// A complete colored fan in N ≅ ℤ: both rays ±1 plus a subset of the two
/// colors, each sitting on the ray equal to its image (α on +1, β on −1).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbeddingFan {
    pub color_alpha: bool,
    pub color_beta: bool,
}

impl EmbeddingFan {
    pub const RAYS: [i64; 2] = [1, -1];

    pub fn colors_used(&self) -> usize {
        usize::from(self.color_alpha) + usize::from(self.color_beta)
    }

    /// The fan without colors.
    pub fn is_toroidal(&self) -> bool {
        self.colors_used() == 0
    }
}

impl fmt::Display for EmbeddingFan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.color_alpha, self.color_beta) {
            (false, false) => write!(f, "{{}}"),
            (true, false) => write!(f, "{{alpha}}"),
            (false, true) => write!(f, "{{beta}}"),
            (true, true) => write!(f, "{{alpha,beta}}"),
        }
    }
}

/// The four projective embeddings of a rank-one pair: color subsets
/// ∅, {α}, {β}, {α, β}, in that order.
pub fn embeddings(_pair: &HoroPair) -> [EmbeddingFan; 4] {
    [
        EmbeddingFan {
            color_alpha: false,
            color_beta: false,
        },
        EmbeddingFan {
            color_alpha: true,
            color_beta: false,
        },
        EmbeddingFan {
            color_alpha: false,
            color_beta: true,
        },
        EmbeddingFan {
            color_alpha: true,
            color_beta: true,
        },
    ]
}

/// Picard data of one embedding: ρ = r + ♯(S∖I) − ♯colors with r = rays − n.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PicardData {
    pub rho: i64,
    pub r: i64,
    pub colors_used: usize,
}

/// Picard number of a complete rank-one fan: two rays, n = 1, two colors
/// available, so ρ = 3 − ♯colors.
pub fn picard_number(fan: &EmbeddingFan) -> PicardData {
    let r = EmbeddingFan::RAYS.len() as i64 - 1;
    let rho = r + 2 - fan.colors_used() as i64;
    PicardData {
        rho,
        r,
        colors_used: fan.colors_used(),
    }
}

/// The specialness predicate: β must be an admissible end of its component
/// in the diagram with α deleted, and symmetrically for α.
pub fn is_special(pair: &HoroPair) -> Result<bool> {
    let one_side = |removed: usize, probe: usize| -> Result<bool> {
        let d = subdiagram(pair.stype, &[removed])?;
        let component = d
            .component_of(probe)?
            .ok_or_else(|| Error::Internal("probe vertex missing from subdiagram".into()))?;
        Ok(admissible_end(&component, probe))
    };
    Ok(one_side(pair.alpha, pair.beta)? && one_side(pair.beta, pair.alpha)?)
}

/// Dimension of the open orbit and hence of every embedding:
/// 1 + ♯{γ ∈ R⁺ : supp(γ) ⊄ I} with I = S ∖ {α, β}.
pub fn dimension(pair: &HoroPair) -> Result<u64> {
    let rs = RootSystem::new(pair.stype)?;
    let crossing = rs
        .positive_roots()
        .iter()
        .filter(|r| r.coord(pair.alpha) != 0 || r.coord(pair.beta) != 0)
        .count();
    Ok(1 + crossing as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_system::Series;

    fn pair(series: Series, rank: usize, a: usize, b: usize) -> HoroPair {
        HoroPair::new(SimpleType::new(series, rank).unwrap(), a, b).unwrap()
    }

    #[test]
    fn pair_validation() {
        let t = SimpleType::new(Series::B, 3).unwrap();
        assert!(HoroPair::new(t, 1, 3).is_ok());
        assert_eq!(HoroPair::new(t, 2, 2), Err(Error::EqualVertices));
        assert!(matches!(
            HoroPair::new(t, 0, 2),
            Err(Error::InvalidVertex { .. })
        ));
        assert!(matches!(
            HoroPair::new(t, 1, 4),
            Err(Error::InvalidVertex { .. })
        ));
    }

    #[test]
    fn color_images_are_plus_minus_one() {
        for p in [
            pair(Series::A, 4, 1, 4),
            pair(Series::B, 3, 1, 3),
            pair(Series::G, 2, 2, 1),
            pair(Series::F, 4, 2, 3),
            pair(Series::A, 5, 2, 4), // not special; images regardless
        ] {
            assert_eq!(color_images(&p).unwrap(), (1, -1));
        }
    }

    #[test]
    fn four_embeddings() {
        let p = pair(Series::A, 2, 1, 2);
        let fans = embeddings(&p);
        assert_eq!(fans.len(), 4);
        assert!(fans[0].is_toroidal());
        let color_sets: Vec<usize> = fans.iter().map(EmbeddingFan::colors_used).collect();
        assert_eq!(color_sets, vec![0, 1, 1, 2]);
        // The two-color fan is unique.
        assert_eq!(fans.iter().filter(|f| f.colors_used() == 2).count(), 1);
    }

    #[test]
    fn picard_numbers() {
        let p = pair(Series::B, 3, 2, 3);
        let rhos: Vec<i64> = embeddings(&p)
            .iter()
            .map(|f| picard_number(f).rho)
            .collect();
        assert_eq!(rhos, vec![3, 2, 2, 1]);
        for f in embeddings(&p) {
            let pd = picard_number(&f);
            assert_eq!(pd.rho, pd.r + 2 - pd.colors_used as i64);
            assert!(pd.rho >= 1);
        }
    }

    #[test]
    fn specialness_pins() {
        assert!(is_special(&pair(Series::B, 3, 1, 3)).unwrap());
        assert!(!is_special(&pair(Series::A, 4, 1, 3)).unwrap());
        assert!(is_special(&pair(Series::G, 2, 1, 2)).unwrap());
        assert!(is_special(&pair(Series::G, 2, 2, 1)).unwrap());
        assert!(is_special(&pair(Series::A, 4, 1, 4)).unwrap());
        assert!(is_special(&pair(Series::C, 4, 2, 3)).unwrap());
        assert!(!is_special(&pair(Series::C, 4, 1, 4)).unwrap());
        assert!(!is_special(&pair(Series::B, 4, 1, 4)).unwrap());
        assert!(!is_special(&pair(Series::B, 4, 2, 3)).unwrap());
        assert!(is_special(&pair(Series::D, 5, 4, 5)).unwrap());
        assert!(!is_special(&pair(Series::D, 5, 1, 2)).unwrap());
        assert!(is_special(&pair(Series::F, 4, 2, 3)).unwrap());
        assert!(!is_special(&pair(Series::F, 4, 1, 2)).unwrap());
        assert!(!is_special(&pair(Series::F, 4, 3, 4)).unwrap());
        assert!(!is_special(&pair(Series::E, 6, 1, 2)).unwrap());
    }

    #[test]
    fn specialness_is_symmetric() {
        for series in Series::ALL {
            for rank in 2..=8 {
                let Ok(t) = SimpleType::new(series, rank) else {
                    continue;
                };
                for a in 1..=rank {
                    for b in (a + 1)..=rank {
                        let p = HoroPair::new(t, a, b).unwrap();
                        assert_eq!(
                            is_special(&p).unwrap(),
                            is_special(&p.swapped()).unwrap(),
                            "{p}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn dimension_pins() {
        // Quadric family: dim 2m.
        for m in 2..=8 {
            assert_eq!(dimension(&pair(Series::A, m, 1, m)).unwrap(), 2 * m as u64);
        }
        // Spinor family: dim m(m+1)/2.
        for m in 4..=8 {
            assert_eq!(
                dimension(&pair(Series::D, m, m - 1, m)).unwrap(),
                (m * (m + 1) / 2) as u64
            );
        }
        // G2 pair: every positive root leaves I = ∅.
        assert_eq!(dimension(&pair(Series::G, 2, 2, 1)).unwrap(), 7);
    }

    #[test]
    fn dimension_lower_bound() {
        // At least 1 + rank once two vertices are marked.
        for series in Series::ALL {
            for rank in 2..=6 {
                let Ok(t) = SimpleType::new(series, rank) else {
                    continue;
                };
                for a in 1..=rank {
                    for b in (a + 1)..=rank {
                        let p = HoroPair::new(t, a, b).unwrap();
                        assert!(dimension(&p).unwrap() > rank as u64, "{p}");
                    }
                }
            }
        }
    }
}
