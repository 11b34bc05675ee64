//! Report records and emission: JSON (round-trippable) and CSV with a
//! fixed, versioned header. Rationals serialize as plain numbers when
//! integral and as "p/q" strings otherwise.

use finetope_core::arith::rat_to_string;
use finetope_core::classify::{ClassificationRecord, HollowRecord};
use finetope_core::{Int, LatticeVector, Rat, RationalVector};
use num_traits_shim::ToI64;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::str::FromStr;
use std::time::Duration;

/// Minimal shim so we can downcast BigInt to i64 without pulling the whole
/// num crate into the CLI.
mod num_traits_shim {
    use finetope_core::Int;

    pub trait ToI64 {
        fn to_i64_checked(&self) -> Option<i64>;
    }

    impl ToI64 for Int {
        fn to_i64_checked(&self) -> Option<i64> {
            let s = self.to_string();
            s.parse::<i64>().ok()
        }
    }
}

/// A rational or integer scalar in a report; integers that fit i64 are
/// plain JSON numbers, everything else is a string.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Scalar {
    Num(i64),
    Str(String),
}

impl Scalar {
    pub fn from_rat(r: &Rat) -> Scalar {
        if r.is_integer() {
            if let Some(v) = r.numer().to_i64_checked() {
                return Scalar::Num(v);
            }
        }
        Scalar::Str(rat_to_string(r))
    }

    pub fn from_int(i: &Int) -> Scalar {
        match i.to_i64_checked() {
            Some(v) => Scalar::Num(v),
            None => Scalar::Str(i.to_string()),
        }
    }

    pub fn to_rat(&self) -> Option<Rat> {
        match self {
            Scalar::Num(v) => Some(Rat::from_integer(Int::from(*v))),
            Scalar::Str(s) => {
                if let Some((p, q)) = s.split_once('/') {
                    let p = Int::from_str(p).ok()?;
                    let q = Int::from_str(q).ok()?;
                    Some(Rat::new(p, q))
                } else {
                    Int::from_str(s).ok().map(Rat::from_integer)
                }
            }
        }
    }

    fn render(&self) -> String {
        match self {
            Scalar::Num(v) => v.to_string(),
            Scalar::Str(s) => s.clone(),
        }
    }
}

fn vec_of_lattice(v: &LatticeVector) -> Vec<Scalar> {
    v.0.iter().map(Scalar::from_int).collect()
}

fn vec_of_rational(v: &RationalVector) -> Vec<Scalar> {
    v.0.iter().map(Scalar::from_rat).collect()
}

/// One line of a batch report. Failed records carry only `id` and `error`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportRecord {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub id: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fi_dim: Option<i32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub regime: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fi_vertices: Option<Vec<Vec<Scalar>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub v_delta: Option<Vec<Scalar>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda: Option<Scalar>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub facet_type: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub projection_type: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pi1_order: Option<Scalar>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub supp: Option<Vec<Vec<Scalar>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub canonical_hull_vertices: Option<Vec<Vec<Scalar>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub canonical_hull_integral: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub equals_canonical_hull: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub psi: Option<Vec<Scalar>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub width: Option<Scalar>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl ReportRecord {
    pub fn from_classification(r: &ClassificationRecord) -> ReportRecord {
        ReportRecord {
            id: r.id.clone(),
            fi_dim: Some(r.fi_dim),
            regime: Some(r.regime.label().to_string()),
            fi_vertices: Some(r.fi_vertices.iter().map(vec_of_rational).collect()),
            v_delta: r.v_delta.as_ref().map(vec_of_lattice),
            lambda: r
                .lambda
                .as_ref()
                .or(r.nonstandard_lambda.as_ref())
                .map(Scalar::from_rat),
            facet_type: r.facet_type_plus.map(|t| t.label().to_string()),
            projection_type: r.projection_type.map(|t| t.label().to_string()),
            pi1_order: Some(Scalar::from_int(&r.pi1_order)),
            supp: Some(r.supp.iter().map(vec_of_lattice).collect()),
            canonical_hull_vertices: Some(
                r.canonical_hull_vertices.iter().map(vec_of_rational).collect(),
            ),
            canonical_hull_integral: Some(r.canonical_hull_integral),
            equals_canonical_hull: Some(r.equals_canonical_hull),
            psi: r
                .psi
                .as_ref()
                .map(|p| p.iter().map(Scalar::from_int).collect()),
            width: None,
            error: None,
        }
    }

    pub fn from_hollow(id: Option<String>, r: &HollowRecord) -> ReportRecord {
        ReportRecord {
            id,
            fi_dim: Some(r.fi_dim),
            regime: None,
            fi_vertices: Some(r.fi_vertices.iter().map(vec_of_rational).collect()),
            v_delta: None,
            lambda: None,
            facet_type: None,
            projection_type: None,
            pi1_order: r.pi1_order.as_ref().map(Scalar::from_int),
            supp: r
                .supp
                .as_ref()
                .map(|s| s.iter().map(vec_of_lattice).collect()),
            canonical_hull_vertices: r
                .canonical_hull_vertices
                .as_ref()
                .map(|s| s.iter().map(vec_of_rational).collect()),
            canonical_hull_integral: None,
            equals_canonical_hull: None,
            psi: None,
            width: Some(Scalar::from_int(&r.width)),
            error: None,
        }
    }

    pub fn from_error(id: Option<String>, message: String) -> ReportRecord {
        ReportRecord {
            id,
            fi_dim: None,
            regime: None,
            fi_vertices: None,
            v_delta: None,
            lambda: None,
            facet_type: None,
            projection_type: None,
            pi1_order: None,
            supp: None,
            canonical_hull_vertices: None,
            canonical_hull_integral: None,
            equals_canonical_hull: None,
            psi: None,
            width: None,
            error: Some(message),
        }
    }
}

/// A batch result: records in input order plus a regime histogram. Timing
/// is informational and never serialized, keeping emission deterministic.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BatchReport {
    pub records: Vec<ReportRecord>,
    pub summary: BTreeMap<String, usize>,
    #[serde(skip)]
    pub elapsed: Duration,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

impl std::str::FromStr for Format {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            other => Err(format!("unknown format {other:?} (expected json or csv)")),
        }
    }
}

pub const CSV_HEADER_V1: &str = "id,fi_dim,regime,fi_vertices,v_delta,lambda,facet_type,projection_type,pi1_order,supp,canonical_hull_vertices,canonical_hull_integral,equals_canonical_hull,psi,width,error";

pub fn emit_report(report: &BatchReport, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(report).expect("report serializes") + "\n",
        Format::Csv => emit_csv(report),
    }
}

pub fn parse_report(text: &str) -> Result<BatchReport, serde_json::Error> {
    serde_json::from_str(text)
}

fn csv_cell(s: String) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s
    }
}

fn join_vector(v: &[Scalar]) -> String {
    v.iter().map(|c| c.render()).collect::<Vec<_>>().join(" ")
}

fn join_vectors(vs: &[Vec<Scalar>]) -> String {
    vs.iter().map(|v| join_vector(v)).collect::<Vec<_>>().join("; ")
}

fn emit_csv(report: &BatchReport) -> String {
    let mut out = String::from(CSV_HEADER_V1);
    out.push('\n');
    for r in &report.records {
        let cells = vec![
            r.id.clone().unwrap_or_default(),
            r.fi_dim.map(|d| d.to_string()).unwrap_or_default(),
            r.regime.clone().unwrap_or_default(),
            r.fi_vertices.as_deref().map(join_vectors).unwrap_or_default(),
            r.v_delta.as_deref().map(join_vector).unwrap_or_default(),
            r.lambda.as_ref().map(|l| l.render()).unwrap_or_default(),
            r.facet_type.clone().unwrap_or_default(),
            r.projection_type.clone().unwrap_or_default(),
            r.pi1_order.as_ref().map(|l| l.render()).unwrap_or_default(),
            r.supp.as_deref().map(join_vectors).unwrap_or_default(),
            r.canonical_hull_vertices
                .as_deref()
                .map(join_vectors)
                .unwrap_or_default(),
            r.canonical_hull_integral
                .map(|b| b.to_string())
                .unwrap_or_default(),
            r.equals_canonical_hull
                .map(|b| b.to_string())
                .unwrap_or_default(),
            r.psi.as_deref().map(join_vector).unwrap_or_default(),
            r.width.as_ref().map(|w| w.render()).unwrap_or_default(),
            r.error.clone().unwrap_or_default(),
        ];
        out.push_str(
            &cells
                .into_iter()
                .map(csv_cell)
                .collect::<Vec<_>>()
                .join(","),
        );
        out.push('\n');
    }
    out
}
