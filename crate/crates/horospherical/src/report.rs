//! Per-pair reports, classification tables and the JSON wire format.
//!
//! JSON schema, kept flat and diff-friendly: the classification document is
//! `{"max_rank", "records": [...]}` and every record reads
//! `{"type", "rank", "alpha", "beta", "families": [{"id", "params"}],
//! "dimension", "picard": [...], "homogeneous", "model", "aut", "ambient_dim",
//! "sections": {"Y", "Z"}}`. Vertex indices are 1-based Bourbaki everywhere.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::classify::{enumerate_special, record_for, ClassificationRecord, FamilyMatch};
use crate::error::{Error, Result};
use crate::geometry::{
    ambient_dim, homogeneity, normal_sections, HomogeneityReport, OrbitSide, SectionModule,
};
use crate::horo::{embeddings, picard_number, HoroPair, PicardData};
use crate::root_system::{Series, SimpleType};

/// Everything the library knows about one special pair.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub record: ClassificationRecord,
    pub picard_table: [PicardData; 4],
    pub sections_y: SectionModule,
    pub sections_z: SectionModule,
    pub homogeneity: HomogeneityReport,
    pub ambient_dim: u128,
}

/// Assembles the full report; fails with [`Error::NotSpecial`] otherwise.
pub fn report_for(pair: &HoroPair) -> Result<Report> {
    let record = record_for(pair)?;
    if record.families.is_empty() {
        return Err(Error::NotSpecial {
            stype: pair.stype,
            alpha: pair.alpha,
            beta: pair.beta,
        });
    }
    let picard_table = embeddings(pair).map(|f| picard_number(&f));
    Ok(Report {
        picard_table,
        sections_y: normal_sections(pair, OrbitSide::Y)?,
        sections_z: normal_sections(pair, OrbitSide::Z)?,
        homogeneity: homogeneity(pair)?,
        ambient_dim: ambient_dim(pair)?,
        record,
    })
}

// ---------------------------------------------------------------------------
// JSON documents
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassifyDoc {
    pub max_rank: usize,
    pub records: Vec<RecordJson>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RecordJson {
    #[serde(rename = "type")]
    pub series: String,
    pub rank: usize,
    pub alpha: usize,
    pub beta: usize,
    #[serde(flatten)]
    pub body: RecordBody,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RecordBody {
    pub families: Vec<FamilyJson>,
    pub dimension: u64,
    pub picard: Vec<PicardJson>,
    pub homogeneous: bool,
    pub model: Option<String>,
    pub aut: Option<AutJson>,
    pub ambient_dim: u64,
    pub sections: SectionsJson,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FamilyJson {
    pub id: u8,
    pub params: FamilyParams,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FamilyParams {
    pub m: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub i: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PicardJson {
    pub colors: Vec<String>,
    pub r: i64,
    pub rho: i64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AutJson {
    pub description: String,
    pub dim: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SectionsJson {
    #[serde(rename = "Y")]
    pub y: Option<SectionJson>,
    #[serde(rename = "Z")]
    pub z: Option<SectionJson>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SectionJson {
    pub highest_weight: Vec<i64>,
    pub dim: u64,
}

/// Inspection document: the identifying fields plus `special`, and the full
/// record body when the pair is special.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InspectDoc {
    #[serde(rename = "type")]
    pub series: String,
    pub rank: usize,
    pub alpha: usize,
    pub beta: usize,
    pub special: bool,
    #[serde(flatten)]
    pub body: Option<RecordBody>,
}

/// Report dimensions at rank ≤ 12 sit far below u64::MAX; the JSON layer
/// uses u64 because serde's flatten machinery cannot buffer u128.
fn fit_u64(x: u128) -> u64 {
    u64::try_from(x).expect("report dimension fits in u64")
}

fn family_json(f: &FamilyMatch) -> FamilyJson {
    FamilyJson {
        id: f.id,
        params: FamilyParams { m: f.m, i: f.i },
    }
}

fn section_json(s: &SectionModule) -> Option<SectionJson> {
    match s {
        SectionModule::Zero => None,
        SectionModule::Irreducible {
            highest_weight,
            dim,
        } => Some(SectionJson {
            highest_weight: highest_weight.coords.clone(),
            dim: fit_u64(*dim),
        }),
    }
}

fn picard_json(pair: &HoroPair, table: &[PicardData; 4]) -> Vec<PicardJson> {
    embeddings(pair)
        .iter()
        .zip(table)
        .map(|(fan, pd)| {
            let mut colors = Vec::new();
            if fan.color_alpha {
                colors.push("alpha".to_string());
            }
            if fan.color_beta {
                colors.push("beta".to_string());
            }
            PicardJson {
                colors,
                r: pd.r,
                rho: pd.rho,
            }
        })
        .collect()
}

impl Report {
    pub fn to_record_json(&self) -> RecordJson {
        let pair = &self.record.pair;
        RecordJson {
            series: pair.stype.series.letter().to_string(),
            rank: pair.stype.rank,
            alpha: pair.alpha,
            beta: pair.beta,
            body: self.body_json(),
        }
    }

    fn body_json(&self) -> RecordBody {
        let pair = &self.record.pair;
        RecordBody {
            families: self.record.families.iter().map(family_json).collect(),
            dimension: self.record.dimension,
            picard: picard_json(pair, &self.picard_table),
            homogeneous: self.homogeneity.homogeneous,
            model: self.homogeneity.model.clone(),
            aut: self.homogeneity.aut.as_ref().map(|a| AutJson {
                description: a.description.clone(),
                dim: fit_u64(a.dim),
            }),
            ambient_dim: fit_u64(self.ambient_dim),
            sections: SectionsJson {
                y: section_json(&self.sections_y),
                z: section_json(&self.sections_z),
            },
        }
    }
}

// ---------------------------------------------------------------------------
// Command-level entry points
// ---------------------------------------------------------------------------

/// Reports for every record of the classification up to `max_rank`.
pub fn classification_reports(max_rank: usize) -> Result<Vec<Report>> {
    enumerate_special(max_rank)?
        .iter()
        .map(|r| report_for(&r.pair))
        .collect()
}

/// The `classify` command: table or JSON, deterministic order.
pub fn cmd_classify(max_rank: usize, json: bool) -> Result<String> {
    if !(1..=12).contains(&max_rank) {
        return Err(Error::InvalidRank(format!(
            "--max-rank must be between 1 and 12, got {max_rank}"
        )));
    }
    let reports = classification_reports(max_rank)?;
    if json {
        let doc = ClassifyDoc {
            max_rank,
            records: reports.iter().map(Report::to_record_json).collect(),
        };
        return serde_json::to_string_pretty(&doc)
            .map_err(|e| Error::Internal(format!("JSON rendering failed: {e}")));
    }
    Ok(classify_table(max_rank, &reports))
}

fn families_label(families: &[FamilyMatch]) -> String {
    families
        .iter()
        .map(|f| f.id.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn classify_table(max_rank: usize, reports: &[Report]) -> String {
    let mut rows = Vec::new();
    for rep in reports {
        let p = &rep.record.pair;
        let fams = families_label(&rep.record.families);
        let (model_or_aut, aut_dim) = match (&rep.homogeneity.model, &rep.homogeneity.aut) {
            (_, Some(aut)) => (
                rep.homogeneity
                    .model
                    .clone()
                    .unwrap_or_else(|| aut.description.clone()),
                aut.dim.to_string(),
            ),
            (Some(model), None) => (model.clone(), "-".to_string()),
            (None, None) => ("-".to_string(), "-".to_string()),
        };
        rows.push([
            fams,
            p.stype.to_string(),
            format!("(a{},a{})", p.alpha, p.beta),
            rep.record.dimension.to_string(),
            if rep.homogeneity.homogeneous {
                "yes".to_string()
            } else {
                "no".to_string()
            },
            model_or_aut,
            aut_dim,
            rep.ambient_dim.to_string(),
        ]);
    }
    let header = [
        "FAMILIES",
        "TYPE",
        "PAIR",
        "DIM",
        "HOMOG",
        "MODEL/AUT0",
        "AUT_DIM",
        "AMBIENT",
    ];
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    let write_row = |out: &mut String, cells: &[String]| {
        let mut line = String::new();
        for (w, cell) in widths.iter().zip(cells) {
            let _ = write!(line, "{cell:<w$}  ");
        }
        out.push_str(line.trim_end());
        out.push('\n');
    };
    write_row(
        &mut out,
        &header.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
    );
    for row in &rows {
        write_row(&mut out, row);
    }
    let _ = writeln!(out, "{} records (max rank {max_rank})", rows.len());
    out
}

/// The `inspect` command: full report for one pair, or a negative verdict.
pub fn cmd_inspect(
    series: Series,
    rank: usize,
    alpha: usize,
    beta: usize,
    json: bool,
) -> Result<String> {
    let stype = SimpleType::new(series, rank)?;
    let pair = HoroPair::new(stype, alpha, beta)?;
    let report = match report_for(&pair) {
        Ok(rep) => Some(rep),
        Err(Error::NotSpecial { .. }) => None,
        Err(e) => return Err(e),
    };
    if json {
        let doc = InspectDoc {
            series: series.letter().to_string(),
            rank,
            alpha,
            beta,
            special: report.is_some(),
            body: report.as_ref().map(|r| r.body_json()),
        };
        return serde_json::to_string_pretty(&doc)
            .map_err(|e| Error::Internal(format!("JSON rendering failed: {e}")));
    }
    Ok(inspect_text(&pair, report.as_ref()))
}

fn inspect_text(pair: &HoroPair, report: Option<&Report>) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "pair: {pair}");
    let Some(rep) = report else {
        let _ = writeln!(out, "special: no");
        return out;
    };
    let _ = writeln!(out, "special: yes");
    let fams: Vec<String> = rep.record.families.iter().map(|f| f.to_string()).collect();
    let _ = writeln!(out, "families: {}", fams.join("; "));
    let _ = writeln!(
        out,
        "canonical: {}",
        if rep.record.canonical { "yes" } else { "no" }
    );
    let _ = writeln!(out, "dimension: {}", rep.record.dimension);
    let _ = writeln!(out, "picard table:");
    for (fan, pd) in embeddings(pair).iter().zip(&rep.picard_table) {
        let _ = writeln!(
            out,
            "  colors {:<13} rho {}  (r={})",
            fan.to_string(),
            pd.rho,
            pd.r
        );
    }
    let _ = writeln!(out, "sections:");
    let _ = writeln!(out, "  Y: {}", rep.sections_y);
    let _ = writeln!(out, "  Z: {}", rep.sections_z);
    if rep.homogeneity.homogeneous {
        let _ = writeln!(out, "homogeneous: yes");
    } else {
        let _ = writeln!(
            out,
            "homogeneous: no ({} orbits)",
            rep.homogeneity.orbit_count
        );
    }
    if let Some(model) = &rep.homogeneity.model {
        let _ = writeln!(out, "model: {model}");
    }
    if let Some(aut) = &rep.homogeneity.aut {
        let _ = writeln!(out, "aut0: {}, dim {}", aut.description, aut.dim);
    }
    let _ = writeln!(out, "ambient: P^{}", rep.ambient_dim);
    out
}
