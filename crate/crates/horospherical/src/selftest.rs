//! Named invariant suites behind the `selftest` CLI command.
//!
//! Each suite checks one pillar of the classification at rank ≤ 8 and
//! reports pass/fail with a short detail string. The root-system source is
//! injectable so the harness can verify that corrupted Cartan data is
//! actually caught.

use std::collections::BTreeSet;

use crate::classify::enumerate_special;
use crate::error::Result;
use crate::geometry::{fiber_lowest_weight, normal_sections, OrbitSide, SectionModule};
use crate::horo::{dimension, embeddings, picard_number, HoroPair};
use crate::root_system::{RootSystem, Series, SimpleType, Weight};

/// Provider of root systems; the default builds the honest tables.
pub trait RootSystemSource {
    fn build(&self, stype: SimpleType) -> Result<RootSystem>;
}

/// The production source.
pub struct DefaultSource;

impl RootSystemSource for DefaultSource {
    fn build(&self, stype: SimpleType) -> Result<RootSystem> {
        RootSystem::new(stype)
    }
}

#[derive(Debug, Clone)]
pub struct SuiteResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone)]
pub struct SelftestReport {
    pub suites: Vec<SuiteResult>,
}

impl SelftestReport {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(|s| s.passed)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for s in &self.suites {
            if s.passed {
                out.push_str(&format!("ok   {} ({})\n", s.name, s.detail));
            } else {
                out.push_str(&format!("FAIL {}: {}\n", s.name, s.detail));
            }
        }
        let passed = self.suites.iter().filter(|s| s.passed).count();
        out.push_str(&format!(
            "selftest: {} of {} suites passed\n",
            passed,
            self.suites.len()
        ));
        out
    }
}

/// Runs all suites with the honest tables.
pub fn run_selftest() -> SelftestReport {
    run_selftest_with(&DefaultSource)
}

type Suite = fn(&dyn RootSystemSource) -> Result<String>;

/// Runs all suites against an injectable root-system source.
pub fn run_selftest_with(source: &dyn RootSystemSource) -> SelftestReport {
    let suites: Vec<(&'static str, Suite)> = vec![
        ("positive-root-counts", suite_root_counts),
        ("longest-words", suite_longest_words),
        ("classification-rank-8", suite_classification),
        ("picard-tables", suite_picard),
        ("dimension-identities", suite_dimensions),
        ("pairing-values", suite_pairings),
        ("section-modules", suite_sections),
    ];
    let mut results = Vec::new();
    for (name, run) in suites {
        let result = match run(source) {
            Ok(detail) => SuiteResult {
                name,
                passed: true,
                detail,
            },
            Err(e) => SuiteResult {
                name,
                passed: false,
                detail: e.to_string(),
            },
        };
        results.push(result);
    }
    SelftestReport { suites: results }
}

fn fail(msg: String) -> crate::error::Error {
    crate::error::Error::Internal(msg)
}

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

/// Closure counts against the classical table, all nine letters at rank ≤ 8.
fn suite_root_counts(source: &dyn RootSystemSource) -> Result<String> {
    let mut checked = 0;
    for t in all_types(8) {
        let rs = source.build(t)?;
        if rs.positive_roots().len() != t.positive_root_count() {
            return Err(fail(format!(
                "{t}: {} positive roots, expected {}",
                rs.positive_roots().len(),
                t.positive_root_count()
            )));
        }
        checked += 1;
    }
    Ok(format!("{checked} root systems"))
}

/// Parabolic longest words: length ♯R_I⁺, involution, antidominance.
fn suite_longest_words(source: &dyn RootSystemSource) -> Result<String> {
    let mut checked = 0;
    for t in all_types(6) {
        let rs = source.build(t)?;
        for mask in 0u32..(1 << t.rank) {
            let subset: Vec<usize> = (1..=t.rank)
                .filter(|v| mask & (1 << (v - 1)) != 0)
                .collect();
            let word = rs.longest_word(&subset)?;
            let expected = rs
                .positive_roots()
                .iter()
                .filter(|r| r.support().iter().all(|v| subset.contains(v)))
                .count();
            if word.len() != expected {
                return Err(fail(format!(
                    "{t}, I={subset:?}: word length {} != {expected}",
                    word.len()
                )));
            }
            for v in 1..=t.rank {
                let omega = Weight::fundamental(t.rank, v);
                let once = rs.apply_word(&word, &omega)?;
                if rs.apply_word(&word, &once)? != omega {
                    return Err(fail(format!("{t}, I={subset:?}: not an involution")));
                }
                if subset.len() == t.rank && !once.is_antidominant() {
                    return Err(fail(format!("{t}: w0(w{v}) not antidominant")));
                }
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} parabolic subsets"))
}

/// The eight family templates instantiated at ranks ≤ `max_rank`, with
/// automorphism-orbit representatives, as (series, rank, lo, hi) keys.
pub fn template_pairs(max_rank: usize) -> BTreeSet<(Series, usize, usize, usize)> {
    let mut out = BTreeSet::new();
    for m in 2..=max_rank {
        out.insert((Series::A, m, 1, m));
        // The diagram flip identifies i with m - i.
        for i in 1..m {
            if i <= m - i {
                out.insert((Series::A, m, i, i + 1));
            }
        }
        out.insert((Series::B, m, m - 1, m));
        if m >= 3 {
            for i in 1..m {
                out.insert((Series::C, m, i, i + 1));
            }
        }
        if m >= 4 {
            out.insert((Series::D, m, m - 1, m));
        }
    }
    if max_rank >= 3 {
        out.insert((Series::B, 3, 1, 3));
    }
    if max_rank >= 4 {
        out.insert((Series::F, 4, 2, 3));
    }
    out.insert((Series::G, 2, 1, 2));
    out
}

/// Enumeration against the family templates: exact set equality at rank 8.
fn suite_classification(_source: &dyn RootSystemSource) -> Result<String> {
    let records = enumerate_special(8)?;
    let got: BTreeSet<(Series, usize, usize, usize)> = records
        .iter()
        .map(|r| {
            (
                r.pair.stype.series,
                r.pair.stype.rank,
                r.pair.alpha.min(r.pair.beta),
                r.pair.alpha.max(r.pair.beta),
            )
        })
        .collect();
    let expected = template_pairs(8);
    if got != expected {
        let missing: Vec<_> = expected.difference(&got).collect();
        let extra: Vec<_> = got.difference(&expected).collect();
        return Err(fail(format!("missing {missing:?}, extra {extra:?}")));
    }
    if records.len() != expected.len() {
        return Err(fail("duplicate records".to_string()));
    }
    Ok(format!("{} records", records.len()))
}

/// Each special pair has Picard numbers {1, 2, 2, 3} over its four
/// embeddings, the 1 sitting on the two-color fan.
fn suite_picard(_source: &dyn RootSystemSource) -> Result<String> {
    let records = enumerate_special(8)?;
    for r in &records {
        let fans = embeddings(&r.pair);
        let mut rhos: Vec<i64> = fans.iter().map(|f| picard_number(f).rho).collect();
        for (fan, rho) in fans.iter().zip(&rhos) {
            if (*rho == 1) != (fan.colors_used() == 2) {
                return Err(fail(format!("{}: rho 1 not on the two-color fan", r.pair)));
            }
        }
        rhos.sort_unstable();
        if rhos != vec![1, 2, 2, 3] {
            return Err(fail(format!("{}: rho multiset {rhos:?}", r.pair)));
        }
    }
    Ok(format!("{} pairs × 4 fans", records.len()))
}

/// Closed-form dimensions of families 1, 2, 5, 6 against root counting.
fn suite_dimensions(_source: &dyn RootSystemSource) -> Result<String> {
    let mut checked = 0;
    let mut check = |pair: HoroPair, expected: u64| -> Result<()> {
        let got = dimension(&pair)?;
        if got != expected {
            return Err(fail(format!("{pair}: dim {got} != {expected}")));
        }
        checked += 1;
        Ok(())
    };
    for m in 2..=8usize {
        let a = SimpleType::new(Series::A, m)?;
        check(HoroPair::new(a, 1, m)?, 2 * m as u64)?;
        for i in 1..m {
            check(HoroPair::new(a, i, i + 1)?, ((i + 1) * (m + 1 - i)) as u64)?;
            let c = SimpleType::new(Series::C, m)?;
            check(
                HoroPair::new(c, i, i + 1)?,
                ((i + 1) * (2 * m - i) - i * (i + 1) / 2) as u64,
            )?;
        }
        if m >= 4 {
            let d = SimpleType::new(Series::D, m)?;
            check(HoroPair::new(d, m - 1, m)?, (m * (m + 1) / 2) as u64)?;
        }
    }
    Ok(format!("{checked} closed forms"))
}

/// The fiber lowest weight on side Z: coordinate at β is 1 for families
/// 3, 4, 7 and 2 for family 8; every other coordinate is ≤ 0.
fn suite_pairings(_source: &dyn RootSystemSource) -> Result<String> {
    let mut cases: Vec<(HoroPair, i64)> = Vec::new();
    for m in 2..=8usize {
        let b = SimpleType::new(Series::B, m)?;
        cases.push((HoroPair::new(b, m - 1, m)?, 1));
    }
    cases.push((HoroPair::new(SimpleType::new(Series::B, 3)?, 1, 3)?, 1));
    cases.push((HoroPair::new(SimpleType::new(Series::F, 4)?, 2, 3)?, 1));
    cases.push((HoroPair::new(SimpleType::new(Series::G, 2)?, 2, 1)?, 2));
    for (pair, expected) in &cases {
        let w = fiber_lowest_weight(pair, OrbitSide::Z)?;
        if w.coord(pair.beta) != *expected {
            return Err(fail(format!(
                "{pair}: beta coordinate {} != {expected}",
                w.coord(pair.beta)
            )));
        }
        for v in 1..=pair.stype.rank {
            if v != pair.beta && w.coord(v) > 0 {
                return Err(fail(format!("{pair}: positive coordinate off beta")));
            }
        }
    }
    Ok(format!("{} pairs", cases.len()))
}

/// Section modules of the two-orbit families match the known list:
/// V(ω_β) for families 3, 4, 8; V(ω_4) for family 7; V(ω_1) of dimension
/// 2m on side Z for family 5 — with the opposite side rigid.
fn suite_sections(_source: &dyn RootSystemSource) -> Result<String> {
    let mut checked = 0;
    let mut check = |pair: HoroPair, zero_side: OrbitSide, hw: Weight, dim: u128| -> Result<()> {
        let flexible = match zero_side {
            OrbitSide::Y => OrbitSide::Z,
            OrbitSide::Z => OrbitSide::Y,
        };
        if !normal_sections(&pair, zero_side)?.is_zero() {
            return Err(fail(format!("{pair}: side {zero_side} should be rigid")));
        }
        match normal_sections(&pair, flexible)? {
            SectionModule::Irreducible {
                highest_weight,
                dim: got,
            } if highest_weight == hw && got == dim => {
                checked += 1;
                Ok(())
            }
            other => Err(fail(format!("{pair}: sections {other} on side {flexible}"))),
        }
    };
    for m in 2..=8usize {
        check(
            HoroPair::new(SimpleType::new(Series::B, m)?, m - 1, m)?,
            OrbitSide::Z,
            Weight::fundamental(m, m),
            1 << m,
        )?;
        for i in 1..m {
            check(
                HoroPair::new(SimpleType::new(Series::C, m)?, i, i + 1)?,
                OrbitSide::Y,
                Weight::fundamental(m, 1),
                2 * m as u128,
            )?;
        }
    }
    check(
        HoroPair::new(SimpleType::new(Series::B, 3)?, 1, 3)?,
        OrbitSide::Z,
        Weight::fundamental(3, 3),
        8,
    )?;
    check(
        HoroPair::new(SimpleType::new(Series::F, 4)?, 2, 3)?,
        OrbitSide::Z,
        Weight::fundamental(4, 4),
        26,
    )?;
    check(
        HoroPair::new(SimpleType::new(Series::G, 2)?, 2, 1)?,
        OrbitSide::Z,
        Weight::fundamental(2, 1),
        7,
    )?;
    Ok(format!("{checked} modules"))
}
