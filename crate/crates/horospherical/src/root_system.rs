//! Exact root-system arithmetic for the simple types.
//!
//! Everything here is integer arithmetic in two fixed bases: roots are stored
//! in the simple-root basis, weights in the fundamental-weight basis. The
//! Cartan matrix is the change of basis between them. Vertex numbering is
//! Bourbaki throughout, 1-based in the public API.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The nine families of simple Dynkin diagrams.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Series {
    pub const ALL: [Series; 7] = [
        Series::A,
        Series::B,
        Series::C,
        Series::D,
        Series::E,
        Series::F,
        Series::G,
    ];

    pub fn letter(self) -> char {
        match self {
            Series::A => 'A',
            Series::B => 'B',
            Series::C => 'C',
            Series::D => 'D',
            Series::E => 'E',
            Series::F => 'F',
            Series::G => 'G',
        }
    }
}

impl std::str::FromStr for Series {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.trim() {
            "A" | "a" => Ok(Series::A),
            "B" | "b" => Ok(Series::B),
            "C" | "c" => Ok(Series::C),
            "D" | "d" => Ok(Series::D),
            "E" | "e" => Ok(Series::E),
            "F" | "f" => Ok(Series::F),
            "G" | "g" => Ok(Series::G),
            other => Err(format!("unknown series letter {other:?}")),
        }
    }
}

/// A simple type: series letter plus rank, e.g. `B3`.
///
/// Rank bounds follow the usual conventions (`D` starts at 4; `D3` is
/// rejected rather than aliased to `A3`, so enumerations never double-count).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SimpleType {
    pub series: Series,
    pub rank: usize,
}

impl SimpleType {
    pub fn new(series: Series, rank: usize) -> Result<Self> {
        let ok = match series {
            Series::A => rank >= 1,
            Series::B | Series::C => rank >= 2,
            Series::D => rank >= 4,
            Series::E => (6..=8).contains(&rank),
            Series::F => rank == 4,
            Series::G => rank == 2,
        };
        if ok {
            Ok(SimpleType { series, rank })
        } else {
            Err(Error::InvalidType { series, rank })
        }
    }

    /// Classical count of positive roots for this type.
    pub fn positive_root_count(self) -> usize {
        let m = self.rank;
        match self.series {
            Series::A => m * (m + 1) / 2,
            Series::B | Series::C => m * m,
            Series::D => m * (m - 1),
            Series::E => match m {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            Series::F => 24,
            Series::G => 6,
        }
    }

    /// Dimension of the corresponding simple group: 2·♯R⁺ + rank.
    pub fn group_dim(self) -> usize {
        2 * self.positive_root_count() + self.rank
    }

    fn check_vertex(self, v: usize) -> Result<()> {
        if v >= 1 && v <= self.rank {
            Ok(())
        } else {
            Err(Error::InvalidVertex {
                stype: self,
                vertex: v,
            })
        }
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.series.letter(), self.rank)
    }
}

/// Integer coordinates in the simple-root basis.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RootVector {
    pub coords: Vec<i64>,
}

impl RootVector {
    pub fn simple(rank: usize, v: usize) -> Self {
        let mut coords = vec![0; rank];
        coords[v - 1] = 1;
        RootVector { coords }
    }

    pub fn coord(&self, v: usize) -> i64 {
        self.coords[v - 1]
    }

    /// Sum of the simple-root coefficients.
    pub fn height(&self) -> i64 {
        self.coords.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.coords.iter().all(|&c| c >= 0) && self.coords.iter().any(|&c| c != 0)
    }

    /// Vertices with nonzero coefficient.
    pub fn support(&self) -> Vec<usize> {
        self.coords
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, _)| i + 1)
            .collect()
    }
}

impl fmt::Display for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_combination(f, &self.coords, "a")
    }
}

/// Integer coordinates in the fundamental-weight basis, so the i-th
/// coordinate of λ is ⟨λ, α̌_i⟩.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Weight {
    pub coords: Vec<i64>,
}

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight {
            coords: vec![0; rank],
        }
    }

    pub fn fundamental(rank: usize, v: usize) -> Self {
        let mut coords = vec![0; rank];
        coords[v - 1] = 1;
        Weight { coords }
    }

    /// ρ, the sum of all fundamental weights.
    pub fn rho(rank: usize) -> Self {
        Weight {
            coords: vec![1; rank],
        }
    }

    pub fn coord(&self, v: usize) -> i64 {
        self.coords[v - 1]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    /// All coordinates ≥ 0.
    pub fn is_dominant(&self) -> bool {
        self.coords.iter().all(|&c| c >= 0)
    }

    /// All coordinates ≤ 0.
    pub fn is_antidominant(&self) -> bool {
        self.coords.iter().all(|&c| c <= 0)
    }
}

impl std::ops::Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        Weight {
            coords: self
                .coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl std::ops::Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        Weight {
            coords: self
                .coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl std::ops::Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight {
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_combination(f, &self.coords, "w")
    }
}

/// Renders integer coordinates as a signed linear combination, e.g. `w1 - 2w3`.
fn fmt_combination(f: &mut fmt::Formatter<'_>, coords: &[i64], sym: &str) -> fmt::Result {
    if coords.iter().all(|&c| c == 0) {
        return write!(f, "0");
    }
    let mut first = true;
    for (i, &c) in coords.iter().enumerate() {
        if c == 0 {
            continue;
        }
        if first {
            if c < 0 {
                write!(f, "-")?;
            }
        } else if c < 0 {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        let a = c.unsigned_abs();
        if a != 1 {
            write!(f, "{a}")?;
        }
        write!(f, "{}{}", sym, i + 1)?;
        first = false;
    }
    Ok(())
}

/// Relative root length at a vertex. Simply-laced types are all `Long`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum RootLength {
    Short,
    Long,
}

/// A word in the simple reflections, applied left to right.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylWord {
    pub letters: Vec<usize>,
}

impl WeylWord {
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

/// The full root datum of one simple type: Cartan matrix, positive roots,
/// and the squared-length data needed to pass between roots and coroots.
///
/// Orientation convention: `cartan[i][j] = ⟨α_j, α̌_i⟩` (0-indexed rows are
/// coroots, columns are roots), with the Dynkin arrow pointing toward the
/// short root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystem {
    stype: SimpleType,
    cartan: Vec<Vec<i64>>,
    positive_roots: Vec<RootVector>,
    /// Half squared lengths (α_i, α_i)/2 of the simple roots, scaled so the
    /// shortest is 1. Symmetrizes the Cartan matrix: d_i·C[i][j] = d_j·C[j][i].
    half_norms: Vec<i64>,
}

/// Hard cap on the closure construction; any simple type of rank ≤ 12 stays
/// far below it, so hitting the cap means the Cartan data is corrupt.
const CLOSURE_BOUND: usize = 4096;

impl RootSystem {
    /// Builds the root system, closing the simple roots under all simple
    /// reflections and checking the count against the classical value.
    pub fn new(stype: SimpleType) -> Result<Self> {
        Self::from_cartan(stype, cartan_matrix(stype))
    }

    pub fn new_checked(series: Series, rank: usize) -> Result<Self> {
        Self::new(SimpleType::new(series, rank)?)
    }

    /// Closure construction from an explicit Cartan matrix. Exposed for the
    /// self-test harness, which injects corrupted tables as a negative
    /// control; regular callers use [`RootSystem::new`].
    pub fn from_cartan(stype: SimpleType, cartan: Vec<Vec<i64>>) -> Result<Self> {
        let rank = stype.rank;
        for (i, row) in cartan.iter().enumerate() {
            if row.len() != rank || row[i] != 2 {
                return Err(Error::Internal(format!("malformed Cartan row {i}")));
            }
            for (j, &c) in row.iter().enumerate() {
                if i != j && !(-3..=0).contains(&c) {
                    return Err(Error::Internal(format!(
                        "Cartan entry [{i}][{j}] = {c} out of range"
                    )));
                }
            }
        }

        let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
        let mut queue: Vec<Vec<i64>> = Vec::new();
        for v in 1..=rank {
            let r = RootVector::simple(rank, v).coords;
            seen.insert(r.clone());
            queue.push(r);
        }
        while let Some(r) = queue.pop() {
            let sign_coherent = r.iter().all(|&c| c >= 0) || r.iter().all(|&c| c <= 0);
            if !sign_coherent {
                return Err(Error::Internal(
                    "mixed-sign vector in root closure".to_string(),
                ));
            }
            for i in 0..rank {
                let pairing: i64 = (0..rank).map(|j| cartan[i][j] * r[j]).sum();
                let mut s = r.clone();
                s[i] -= pairing;
                if seen.insert(s.clone()) {
                    if seen.len() > CLOSURE_BOUND {
                        return Err(Error::Internal(
                            "root closure exceeded bound; Cartan data not of finite type"
                                .to_string(),
                        ));
                    }
                    queue.push(s);
                }
            }
        }

        let mut positive_roots: Vec<RootVector> = seen
            .into_iter()
            .map(|coords| RootVector { coords })
            .filter(RootVector::is_positive)
            .collect();
        positive_roots.sort_by_key(|r| (r.height(), r.coords.clone()));

        if positive_roots.len() != stype.positive_root_count() {
            return Err(Error::Internal(format!(
                "{stype}: closure found {} positive roots, expected {}",
                positive_roots.len(),
                stype.positive_root_count()
            )));
        }

        Ok(RootSystem {
            stype,
            cartan,
            positive_roots,
            half_norms: half_norms(stype),
        })
    }

    pub fn stype(&self) -> SimpleType {
        self.stype
    }

    pub fn rank(&self) -> usize {
        self.stype.rank
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn positive_roots(&self) -> &[RootVector] {
        &self.positive_roots
    }

    pub fn root_length(&self, v: usize) -> RootLength {
        let max = self.half_norms.iter().copied().max().unwrap_or(1);
        if self.half_norms[v - 1] < max {
            RootLength::Short
        } else {
            RootLength::Long
        }
    }

    pub fn is_root(&self, r: &RootVector) -> bool {
        self.positive_roots
            .iter()
            .any(|p| p.coords == r.coords || p.coords.iter().zip(&r.coords).all(|(a, b)| *a == -b))
    }

    /// Coordinates of the coroot γ̌ in the simple-coroot basis.
    pub fn coroot(&self, gamma: &RootVector) -> Result<Vec<i64>> {
        if !self.is_root(gamma) {
            return Err(Error::NotARoot { stype: self.stype });
        }
        // (γ, γ) in the scaled metric, via the symmetrized Cartan matrix.
        let n = self.rank();
        let mut sq = 0i64;
        for i in 0..n {
            for j in 0..n {
                sq += gamma.coords[i] * gamma.coords[j] * self.half_norms[i] * self.cartan[i][j];
            }
        }
        let d_gamma = sq / 2;
        let mut coords = Vec::with_capacity(n);
        for i in 0..n {
            let num = gamma.coords[i] * self.half_norms[i];
            if num % d_gamma != 0 {
                return Err(Error::Internal("non-integral coroot coordinate".into()));
            }
            coords.push(num / d_gamma);
        }
        Ok(coords)
    }

    /// ⟨λ, γ̌⟩ for any root γ of the system.
    pub fn pairing(&self, lambda: &Weight, gamma: &RootVector) -> Result<i64> {
        let coroot = self.coroot(gamma)?;
        Ok(coroot.iter().zip(&lambda.coords).map(|(c, l)| c * l).sum())
    }

    /// Simple reflection s_v acting on a weight:
    /// s_v(λ) = λ − ⟨λ, α̌_v⟩ α_v, with α_v read off the Cartan column.
    pub fn reflect(&self, lambda: &Weight, v: usize) -> Result<Weight> {
        self.stype.check_vertex(v)?;
        let c = lambda.coord(v);
        let mut coords = lambda.coords.clone();
        for (j, x) in coords.iter_mut().enumerate() {
            *x -= c * self.cartan[j][v - 1];
        }
        Ok(Weight { coords })
    }

    /// Simple reflection s_v acting on a vector in the root basis; only the
    /// v-th coordinate changes.
    pub fn reflect_root(&self, gamma: &RootVector, v: usize) -> Result<RootVector> {
        self.stype.check_vertex(v)?;
        let pairing: i64 = (0..self.rank())
            .map(|j| self.cartan[v - 1][j] * gamma.coords[j])
            .sum();
        let mut coords = gamma.coords.clone();
        coords[v - 1] -= pairing;
        Ok(RootVector { coords })
    }

    /// Reduced word for the longest element of the parabolic subgroup W_I.
    ///
    /// Greedy descent: repeatedly reflect ρ_I = Σ_{i∈I} ω_i at a vertex of I
    /// where it is still positive. Each step is length-additive, so the word
    /// has exactly ♯R_I⁺ letters and represents w₀^I as a map on all weights.
    pub fn longest_word(&self, subset: &[usize]) -> Result<WeylWord> {
        for &v in subset {
            self.stype.check_vertex(v)?;
        }
        let mut lambda = Weight::zero(self.rank());
        for &v in subset {
            lambda.coords[v - 1] = 1;
        }
        let mut letters = Vec::new();
        while let Some(v) = subset.iter().copied().find(|&v| lambda.coord(v) > 0) {
            lambda = self.reflect(&lambda, v)?;
            letters.push(v);
            if letters.len() > 2 * self.stype.positive_root_count() {
                return Err(Error::Internal("longest-word descent did not stop".into()));
            }
        }
        Ok(WeylWord { letters })
    }

    /// Applies a word letter by letter, first letter first.
    pub fn apply_word(&self, word: &WeylWord, lambda: &Weight) -> Result<Weight> {
        let mut out = lambda.clone();
        for &v in &word.letters {
            out = self.reflect(&out, v)?;
        }
        Ok(out)
    }

    pub fn apply_word_to_root(&self, word: &WeylWord, gamma: &RootVector) -> Result<RootVector> {
        let mut out = gamma.clone();
        for &v in &word.letters {
            out = self.reflect_root(&out, v)?;
        }
        Ok(out)
    }

    /// The dominant representative of the Weyl orbit of λ, by greedy ascent.
    pub fn dominant_representative(&self, lambda: &Weight) -> Weight {
        let mut out = lambda.clone();
        while let Some(v) = (1..=self.rank()).find(|&v| out.coord(v) < 0) {
            out = self.reflect(&out, v).expect("vertex in range");
        }
        out
    }

    /// A root expressed in the fundamental-weight basis (Cartan matrix times
    /// root coordinates).
    pub fn root_to_weight(&self, gamma: &RootVector) -> Weight {
        let n = self.rank();
        let coords = (0..n)
            .map(|j| (0..n).map(|i| self.cartan[j][i] * gamma.coords[i]).sum())
            .collect();
        Weight { coords }
    }

    /// Dimension of the irreducible representation with highest weight λ,
    /// by the Weyl dimension formula Π ⟨λ+ρ, γ̌⟩ / ⟨ρ, γ̌⟩ over γ ∈ R⁺.
    pub fn weyl_dim(&self, lambda: &Weight) -> Result<u128> {
        if !lambda.is_dominant() {
            return Err(Error::NotDominant);
        }
        let rho = Weight::rho(self.rank());
        let shifted = lambda + &rho;
        let mut num = BigUint::one();
        let mut den = BigUint::one();
        for gamma in &self.positive_roots {
            let coroot = self.coroot(gamma)?;
            let top: i64 = coroot.iter().zip(&shifted.coords).map(|(c, l)| c * l).sum();
            let bottom: i64 = coroot.iter().sum();
            let top = u64::try_from(top)
                .map_err(|_| Error::Internal("non-positive numerator in Weyl formula".into()))?;
            let bottom = u64::try_from(bottom)
                .map_err(|_| Error::Internal("non-positive denominator in Weyl formula".into()))?;
            num *= BigUint::from(top);
            den *= BigUint::from(bottom);
        }
        if !(&num % &den).is_zero() {
            return Err(Error::Internal("Weyl dimension is not integral".into()));
        }
        u128::try_from(num / den).map_err(|_| Error::DimensionOverflow)
    }

    /// 2·♯R⁺ + rank.
    pub fn group_dim(&self) -> usize {
        self.stype.group_dim()
    }
}

/// Half squared lengths of the simple roots, shortest scaled to 1.
fn half_norms(stype: SimpleType) -> Vec<i64> {
    let m = stype.rank;
    match stype.series {
        Series::A | Series::D | Series::E => vec![1; m],
        // B: the last simple root is short.
        Series::B => {
            let mut d = vec![2; m];
            d[m - 1] = 1;
            d
        }
        // C: the last simple root is long.
        Series::C => {
            let mut d = vec![1; m];
            d[m - 1] = 2;
            d
        }
        Series::F => vec![2, 2, 1, 1],
        Series::G => vec![1, 3],
    }
}

/// Unordered adjacency of the Bourbaki-numbered diagram, single edges only;
/// multiplicities come from the half-norm data.
fn adjacency(stype: SimpleType) -> Vec<(usize, usize)> {
    let m = stype.rank;
    match stype.series {
        Series::A | Series::B | Series::C | Series::F | Series::G => {
            (1..m).map(|i| (i, i + 1)).collect()
        }
        Series::D => {
            let mut e: Vec<(usize, usize)> = (1..m - 1).map(|i| (i, i + 1)).collect();
            e.push((m - 2, m));
            e
        }
        Series::E => {
            let mut e = vec![(1, 3), (3, 4), (4, 5), (2, 4)];
            for i in 5..m {
                e.push((i, i + 1));
            }
            e
        }
    }
}

/// Cartan matrix with entries C[i][j] = ⟨α_j, α̌_i⟩. For an edge between a
/// short root s and a long root l of relative squared length k, the short
/// coroot row carries −k: C[s][l] = −k, C[l][s] = −1.
fn cartan_matrix(stype: SimpleType) -> Vec<Vec<i64>> {
    let m = stype.rank;
    let d = half_norms(stype);
    let mut c = vec![vec![0i64; m]; m];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    for (a, b) in adjacency(stype) {
        let (i, j) = (a - 1, b - 1);
        // d_i C[i][j] = d_j C[j][i] with entries in {-1, -2, -3}.
        if d[i] == d[j] {
            c[i][j] = -1;
            c[j][i] = -1;
        } else if d[i] < d[j] {
            c[i][j] = -(d[j] / d[i]);
            c[j][i] = -1;
        } else {
            c[i][j] = -1;
            c[j][i] = -(d[i] / d[j]);
        }
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn all_types(max_rank: usize) -> Vec<SimpleType> {
        let mut out = Vec::new();
        for series in Series::ALL {
            for rank in 1..=max_rank {
                if let Ok(t) = SimpleType::new(series, rank) {
                    out.push(t);
                }
            }
        }
        out
    }

    #[test]
    fn rank_bounds() {
        assert!(SimpleType::new(Series::A, 1).is_ok());
        assert!(SimpleType::new(Series::A, 0).is_err());
        assert!(SimpleType::new(Series::B, 2).is_ok());
        assert!(SimpleType::new(Series::C, 2).is_ok());
        assert!(SimpleType::new(Series::D, 4).is_ok());
        assert!(SimpleType::new(Series::D, 3).is_err());
        assert!(SimpleType::new(Series::E, 6).is_ok());
        assert!(SimpleType::new(Series::E, 9).is_err());
        assert!(SimpleType::new(Series::F, 4).is_ok());
        assert!(SimpleType::new(Series::F, 5).is_err());
        assert!(SimpleType::new(Series::G, 2).is_ok());
        assert!(SimpleType::new(Series::G, 3).is_err());
    }

    #[test]
    fn positive_root_counts_match_closure() {
        // Closure construction against the classical count, every type of
        // rank at most 8.
        for t in all_types(8) {
            let rs = RootSystem::new(t).unwrap();
            assert_eq!(
                rs.positive_roots().len(),
                t.positive_root_count(),
                "count mismatch for {t}"
            );
        }
    }

    #[test]
    fn small_closures() {
        let a2 = RootSystem::new_checked(Series::A, 2).unwrap();
        assert_eq!(a2.positive_roots().len(), 3);
        let g2 = RootSystem::new_checked(Series::G, 2).unwrap();
        assert_eq!(g2.positive_roots().len(), 6);
        let b3 = RootSystem::new_checked(Series::B, 3).unwrap();
        assert_eq!(b3.positive_roots().len(), 9);
    }

    #[test]
    fn cartan_invariants() {
        for t in all_types(8) {
            let rs = RootSystem::new(t).unwrap();
            let c = rs.cartan();
            for i in 0..t.rank {
                assert_eq!(c[i][i], 2);
                for j in 0..t.rank {
                    if i != j {
                        assert!((-3..=0).contains(&c[i][j]));
                        assert!([0, 1, 2, 3].contains(&(c[i][j] * c[j][i])));
                        // Symmetrizability.
                        let d = half_norms(t);
                        assert_eq!(d[i] * c[i][j], d[j] * c[j][i]);
                    }
                }
            }
        }
    }

    #[test]
    fn cartan_orientation_pins() {
        // Arrow points at the short root: the short coroot row holds the -k.
        let b3 = RootSystem::new_checked(Series::B, 3).unwrap();
        assert_eq!(b3.cartan()[2][1], -2);
        assert_eq!(b3.cartan()[1][2], -1);
        assert_eq!(b3.root_length(3), RootLength::Short);

        let c3 = RootSystem::new_checked(Series::C, 3).unwrap();
        assert_eq!(c3.cartan()[1][2], -2);
        assert_eq!(c3.cartan()[2][1], -1);
        assert_eq!(c3.root_length(1), RootLength::Short);
        assert_eq!(c3.root_length(3), RootLength::Long);

        let g2 = RootSystem::new_checked(Series::G, 2).unwrap();
        assert_eq!(g2.cartan()[0][1], -3);
        assert_eq!(g2.cartan()[1][0], -1);
        assert_eq!(g2.root_length(1), RootLength::Short);

        let f4 = RootSystem::new_checked(Series::F, 4).unwrap();
        assert_eq!(f4.cartan()[2][1], -2);
        assert_eq!(f4.cartan()[1][2], -1);
    }

    #[test]
    fn pairing_duality() {
        // ⟨ω_i, α̌_j⟩ = δ_ij and ⟨ρ, α̌⟩ = 1 for every simple α.
        for t in all_types(6) {
            let rs = RootSystem::new(t).unwrap();
            let rho = Weight::rho(t.rank);
            for j in 1..=t.rank {
                let alpha_j = RootVector::simple(t.rank, j);
                assert_eq!(rs.pairing(&rho, &alpha_j).unwrap(), 1);
                for i in 1..=t.rank {
                    let omega_i = Weight::fundamental(t.rank, i);
                    let expected = i64::from(i == j);
                    assert_eq!(rs.pairing(&omega_i, &alpha_j).unwrap(), expected);
                }
            }
        }
    }

    #[test]
    fn pairing_rejects_non_roots() {
        let rs = RootSystem::new_checked(Series::A, 2).unwrap();
        let not_a_root = RootVector { coords: vec![2, 0] };
        assert!(matches!(
            rs.pairing(&Weight::rho(2), &not_a_root),
            Err(Error::NotARoot { .. })
        ));
    }

    #[test]
    fn reflection_pins() {
        let a1 = RootSystem::new_checked(Series::A, 1).unwrap();
        let w = a1.reflect(&Weight::fundamental(1, 1), 1).unwrap();
        assert_eq!(w.coords, vec![-1]);

        // A2: s_1(w1) = w2 - w1.
        let a2 = RootSystem::new_checked(Series::A, 2).unwrap();
        let w = a2.reflect(&Weight::fundamental(2, 1), 1).unwrap();
        assert_eq!(w.coords, vec![-1, 1]);

        // Fixed hyperplane: ⟨λ, α̌_i⟩ = 0 means s_i fixes λ.
        let lambda = Weight { coords: vec![0, 5] };
        assert_eq!(a2.reflect(&lambda, 1).unwrap(), lambda);
    }

    #[test]
    fn longest_word_lengths() {
        let a2 = RootSystem::new_checked(Series::A, 2).unwrap();
        assert!(a2.longest_word(&[]).unwrap().is_empty());
        assert_eq!(a2.longest_word(&[1, 2]).unwrap().len(), 3);

        let b3 = RootSystem::new_checked(Series::B, 3).unwrap();
        assert_eq!(b3.longest_word(&[1, 2]).unwrap().len(), 3);
        assert_eq!(b3.longest_word(&[2, 3]).unwrap().len(), 4);
        assert_eq!(b3.longest_word(&[1, 2, 3]).unwrap().len(), 9);
    }

    #[test]
    fn longest_word_properties() {
        // Length ♯R_I⁺, negates R_I⁺, and squares to the identity, for every
        // vertex subset of every type of rank ≤ 5.
        for t in all_types(5) {
            let rs = RootSystem::new(t).unwrap();
            for mask in 0u32..(1 << t.rank) {
                let subset: Vec<usize> = (1..=t.rank)
                    .filter(|v| mask & (1 << (v - 1)) != 0)
                    .collect();
                let word = rs.longest_word(&subset).unwrap();
                let in_subsystem = |r: &RootVector| r.support().iter().all(|v| subset.contains(v));
                let count = rs
                    .positive_roots()
                    .iter()
                    .filter(|r| in_subsystem(r))
                    .count();
                assert_eq!(word.len(), count, "{t}, subset {subset:?}");
                for r in rs.positive_roots() {
                    if in_subsystem(r) {
                        let image = rs.apply_word_to_root(&word, r).unwrap();
                        assert!(
                            image.coords.iter().all(|&c| c <= 0),
                            "{t}: w0^I({r}) not negative"
                        );
                    }
                }
                // Involution on a spanning set.
                for v in 1..=t.rank {
                    let omega = Weight::fundamental(t.rank, v);
                    let twice = rs
                        .apply_word(&word, &rs.apply_word(&word, &omega).unwrap())
                        .unwrap();
                    assert_eq!(twice, omega);
                }
            }
        }
    }

    #[test]
    fn full_longest_word_antidominates() {
        for t in all_types(6) {
            let rs = RootSystem::new(t).unwrap();
            let all: Vec<usize> = (1..=t.rank).collect();
            let w0 = rs.longest_word(&all).unwrap();
            for v in 1..=t.rank {
                let image = rs.apply_word(&w0, &Weight::fundamental(t.rank, v)).unwrap();
                assert!(image.is_antidominant(), "{t}: w0(w{v}) = {image}");
            }
        }
    }

    #[test]
    fn apply_word_pins() {
        let a1 = RootSystem::new_checked(Series::A, 1).unwrap();
        let w0 = a1.longest_word(&[1]).unwrap();
        let img = a1.apply_word(&w0, &Weight::fundamental(1, 1)).unwrap();
        assert_eq!(img.coords, vec![-1]);

        let empty = WeylWord { letters: vec![] };
        let lambda = Weight { coords: vec![3] };
        assert_eq!(a1.apply_word(&empty, &lambda).unwrap(), lambda);
    }

    #[test]
    fn b_series_longest_word_coroot() {
        // In type B_m with β = α_m removed from the fixed set, the longest
        // element of W_{S∖{β}} sends β̌ to 2(α̌_1 + ... + α̌_{m-1}) + α̌_m.
        for m in 2..=8 {
            let rs = RootSystem::new_checked(Series::B, m).unwrap();
            let subset: Vec<usize> = (1..m).collect();
            let word = rs.longest_word(&subset).unwrap();
            let beta = RootVector::simple(m, m);
            let image = rs.apply_word_to_root(&word, &beta).unwrap();
            // w0^β(β) = α_1 + ... + α_m, a short root.
            assert_eq!(image.coords, vec![1; m]);
            let coroot = rs.coroot(&image).unwrap();
            let mut expected = vec![2; m];
            expected[m - 1] = 1;
            assert_eq!(coroot, expected);
        }
    }

    #[test]
    fn dominance_flags() {
        let omega = Weight::fundamental(3, 1);
        assert!(omega.is_dominant() && !omega.is_antidominant());
        let neg = -&omega;
        assert!(neg.is_antidominant() && !neg.is_dominant());
        let zero = Weight::zero(3);
        assert!(zero.is_dominant() && zero.is_antidominant());
    }

    #[test]
    fn weyl_dim_pins() {
        let a1 = RootSystem::new_checked(Series::A, 1).unwrap();
        assert_eq!(a1.weyl_dim(&Weight::zero(1)).unwrap(), 1);
        assert_eq!(a1.weyl_dim(&Weight::fundamental(1, 1)).unwrap(), 2);

        // Standard symplectic module: dim V(w1) = 2m in type C_m.
        for m in 2..=8 {
            let c = RootSystem::new_checked(Series::C, m).unwrap();
            assert_eq!(
                c.weyl_dim(&Weight::fundamental(m, 1)).unwrap(),
                2 * m as u128
            );
        }

        // Values cross-checked against the Freudenthal oracle in the
        // integration suite.
        let g2 = RootSystem::new_checked(Series::G, 2).unwrap();
        assert_eq!(g2.weyl_dim(&Weight::fundamental(2, 1)).unwrap(), 7);
        assert_eq!(g2.weyl_dim(&Weight::fundamental(2, 2)).unwrap(), 14);
        let b3 = RootSystem::new_checked(Series::B, 3).unwrap();
        assert_eq!(b3.weyl_dim(&Weight::fundamental(3, 3)).unwrap(), 8);
        let f4 = RootSystem::new_checked(Series::F, 4).unwrap();
        assert_eq!(f4.weyl_dim(&Weight::fundamental(4, 4)).unwrap(), 26);
    }

    #[test]
    fn weyl_dim_rejects_non_dominant() {
        let a2 = RootSystem::new_checked(Series::A, 2).unwrap();
        let lambda = Weight {
            coords: vec![-1, 0],
        };
        assert_eq!(a2.weyl_dim(&lambda), Err(Error::NotDominant));
    }

    #[test]
    fn group_dims() {
        assert_eq!(SimpleType::new(Series::A, 1).unwrap().group_dim(), 3);
        assert_eq!(SimpleType::new(Series::G, 2).unwrap().group_dim(), 14);
        assert_eq!(SimpleType::new(Series::B, 3).unwrap().group_dim(), 21);
        assert_eq!(SimpleType::new(Series::F, 4).unwrap().group_dim(), 52);
        assert_eq!(SimpleType::new(Series::E, 8).unwrap().group_dim(), 248);
    }

    #[test]
    fn weyl_dim_self_dual() {
        // dim V(λ) = dim V(-w0 λ) for dominant λ over a small lattice box.
        for t in [
            SimpleType::new(Series::A, 3).unwrap(),
            SimpleType::new(Series::B, 3).unwrap(),
            SimpleType::new(Series::C, 3).unwrap(),
            SimpleType::new(Series::D, 4).unwrap(),
            SimpleType::new(Series::G, 2).unwrap(),
        ] {
            let rs = RootSystem::new(t).unwrap();
            let all: Vec<usize> = (1..=t.rank).collect();
            let w0 = rs.longest_word(&all).unwrap();
            for idx in 0..3u32.pow(t.rank as u32) {
                let mut coords = Vec::with_capacity(t.rank);
                let mut k = idx;
                for _ in 0..t.rank {
                    coords.push((k % 3) as i64);
                    k /= 3;
                }
                let lambda = Weight { coords };
                let dual = -&rs.apply_word(&w0, &lambda).unwrap();
                assert!(dual.is_dominant());
                assert_eq!(rs.weyl_dim(&lambda).unwrap(), rs.weyl_dim(&dual).unwrap());
            }
        }
    }

    proptest! {
        #[test]
        fn reflect_is_involution(
            type_idx in 0usize..5,
            vertex in 1usize..=3,
            coords in proptest::collection::vec(-20i64..=20, 3),
        ) {
            let t = [
                SimpleType::new(Series::A, 3).unwrap(),
                SimpleType::new(Series::B, 3).unwrap(),
                SimpleType::new(Series::C, 3).unwrap(),
                SimpleType::new(Series::A, 4).unwrap(),
                SimpleType::new(Series::G, 2).unwrap(),
            ][type_idx];
            let rs = RootSystem::new(t).unwrap();
            let v = 1 + (vertex - 1) % t.rank;
            let mut c = coords;
            c.resize(t.rank, 0);
            let lambda = Weight { coords: c };
            let twice = rs.reflect(&rs.reflect(&lambda, v).unwrap(), v).unwrap();
            prop_assert_eq!(twice, lambda);
        }

        #[test]
        fn pairing_is_additive(
            a in proptest::collection::vec(-15i64..=15, 3),
            b in proptest::collection::vec(-15i64..=15, 3),
            root_idx in 0usize..9,
        ) {
            let rs = RootSystem::new_checked(Series::B, 3).unwrap();
            let gamma = rs.positive_roots()[root_idx].clone();
            let la = Weight { coords: a };
            let lb = Weight { coords: b };
            let sum = &la + &lb;
            prop_assert_eq!(
                rs.pairing(&sum, &gamma).unwrap(),
                rs.pairing(&la, &gamma).unwrap() + rs.pairing(&lb, &gamma).unwrap()
            );
        }
    }
}
