//! External formats: JSON schemas for polynomials, forms, matrices, roots,
//! verdicts and projections, plus the CSV trace layout.
//!
//! Polynomial JSON keeps integers as decimal strings and terms in the
//! canonical map order, so emit-parse round trips are bit-exact and repeated
//! runs produce byte-identical output.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::delineability::{
    CellBound, CellInterval, FiniteSetVerdict, ProjectionMode, ProjectionSet, SectionBehavior,
    SectionReport,
};
use crate::forms::{BinaryForm, Matrix2};
use crate::poly::MultiPoly;
use crate::projective::ProjPoint;
use crate::rat::{format_rat, parse_rat, Rat};
use crate::roots::{ProjRootSet, RootLocation};
use crate::tracking::{TrackResult, TrackStatus};
use crate::{Error, Result};

fn bad(msg: impl Into<String>) -> Error {
    Error::BadInput(msg.into())
}

// ---------------------------------------------------------------------------
// Polynomials
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
pub struct TermDto {
    pub exps: Vec<u32>,
    pub num: String,
    pub den: String,
}

#[derive(Serialize, Deserialize)]
pub struct PolyDto {
    pub vars: Vec<String>,
    pub terms: Vec<TermDto>,
}

impl PolyDto {
    pub fn from_poly(p: &MultiPoly) -> Self {
        PolyDto {
            vars: p.vars().to_vec(),
            terms: p
                .terms()
                .map(|(exps, c)| TermDto {
                    exps: exps.clone(),
                    num: c.numer().to_string(),
                    den: c.denom().to_string(),
                })
                .collect(),
        }
    }

    pub fn into_poly(self) -> Result<MultiPoly> {
        let nvars = self.vars.len();
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in self.terms {
            if t.exps.len() != nvars {
                return Err(bad(format!(
                    "term has {} exponents for {} variables",
                    t.exps.len(),
                    nvars
                )));
            }
            let num: BigInt = t.num.parse().map_err(|_| bad("malformed numerator"))?;
            let den: BigInt = t.den.parse().map_err(|_| bad("malformed denominator"))?;
            if den.is_zero() {
                return Err(bad("zero denominator"));
            }
            terms.push((t.exps, Rat::new(num, den)));
        }
        Ok(MultiPoly::from_terms(&self.vars, terms))
    }
}

pub fn poly_to_json(p: &MultiPoly) -> String {
    serde_json::to_string(&PolyDto::from_poly(p)).expect("serialization cannot fail")
}

pub fn poly_from_json(s: &str) -> Result<MultiPoly> {
    let dto: PolyDto = serde_json::from_str(s).map_err(|e| bad(format!("bad polynomial JSON: {e}")))?;
    dto.into_poly()
}

// ---------------------------------------------------------------------------
// Binary forms and matrices
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
pub struct BinaryFormDto {
    pub degree: usize,
    pub coeffs: Vec<PolyDto>,
    /// Name of the homogenized variable, so the pull-back can rebuild the
    /// full ring.
    pub var: String,
}

impl BinaryFormDto {
    pub fn from_form(g: &BinaryForm) -> Self {
        BinaryFormDto {
            degree: g.degree(),
            coeffs: g.coeffs().iter().map(PolyDto::from_poly).collect(),
            var: g.var().to_string(),
        }
    }

    pub fn into_form(self) -> Result<BinaryForm> {
        if self.coeffs.len() != self.degree + 1 {
            return Err(bad("coefficient count must be degree + 1"));
        }
        let coeffs: Vec<MultiPoly> = self
            .coeffs
            .into_iter()
            .map(PolyDto::into_poly)
            .collect::<Result<_>>()?;
        let base = coeffs[0].vars().to_vec();
        if coeffs.iter().any(|c| c.vars() != base) {
            return Err(bad("coefficients use different variable lists"));
        }
        Ok(BinaryForm::new(self.degree, coeffs, self.var))
    }
}

pub fn form_to_json(g: &BinaryForm) -> String {
    serde_json::to_string(&BinaryFormDto::from_form(g)).expect("serialization cannot fail")
}

pub fn form_from_json(s: &str) -> Result<BinaryForm> {
    let dto: BinaryFormDto =
        serde_json::from_str(s).map_err(|e| bad(format!("bad binary form JSON: {e}")))?;
    dto.into_form()
}

#[derive(Serialize, Deserialize)]
pub struct Matrix2Dto {
    pub a: [[String; 2]; 2],
}

impl Matrix2Dto {
    pub fn from_matrix(m: &Matrix2) -> Self {
        Matrix2Dto {
            a: [
                [format_rat(&m.a11), format_rat(&m.a12)],
                [format_rat(&m.a21), format_rat(&m.a22)],
            ],
        }
    }

    pub fn into_matrix(self) -> Result<Matrix2> {
        Matrix2::new(
            parse_rat(&self.a[0][0])?,
            parse_rat(&self.a[0][1])?,
            parse_rat(&self.a[1][0])?,
            parse_rat(&self.a[1][1])?,
        )
    }
}

pub fn matrix_to_json(m: &Matrix2) -> String {
    serde_json::to_string(&Matrix2Dto::from_matrix(m)).expect("serialization cannot fail")
}

pub fn matrix_from_json(s: &str) -> Result<Matrix2> {
    let dto: Matrix2Dto =
        serde_json::from_str(s).map_err(|e| bad(format!("bad matrix JSON: {e}")))?;
    dto.into_matrix()
}

// ---------------------------------------------------------------------------
// Projective points
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
pub struct ProjPointDto {
    pub x: String,
    pub y: String,
}

impl ProjPointDto {
    pub fn from_point(p: &ProjPoint) -> Self {
        let (x, y) = p.coords();
        ProjPointDto {
            x: format_rat(x),
            y: format_rat(y),
        }
    }

    pub fn into_point(self) -> Result<ProjPoint> {
        ProjPoint::new(parse_rat(&self.x)?, parse_rat(&self.y)?)
    }
}

// ---------------------------------------------------------------------------
// Root sets
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
pub struct RootEntryDto {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub point: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub interval: Option<[String; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub infinity: Option<bool>,
    pub multiplicity: u32,
}

#[derive(Serialize, Deserialize)]
pub struct RootSetDto {
    pub reference_degree: usize,
    pub roots: Vec<RootEntryDto>,
}

/// Serializes a projective root set; isolating intervals are refined to
/// width `1e-9` for stable display.
pub fn roots_to_json(set: &ProjRootSet) -> String {
    let eps = Rat::new(BigInt::from(1), BigInt::from(1_000_000_000u64));
    let mut roots: Vec<RootEntryDto> = set
        .real_roots
        .iter()
        .map(|r| {
            let tight = r.refined(&eps);
            match &tight.location {
                RootLocation::Exact(v) => RootEntryDto {
                    point: Some(format_rat(v)),
                    interval: None,
                    infinity: None,
                    multiplicity: r.multiplicity,
                },
                RootLocation::Interval { lo, hi } => RootEntryDto {
                    point: None,
                    interval: Some([format_rat(lo), format_rat(hi)]),
                    infinity: None,
                    multiplicity: r.multiplicity,
                },
            }
        })
        .collect();
    if set.infinity_multiplicity > 0 {
        roots.push(RootEntryDto {
            point: None,
            interval: None,
            infinity: Some(true),
            multiplicity: set.infinity_multiplicity,
        });
    }
    serde_json::to_string(&RootSetDto {
        reference_degree: set.reference_degree,
        roots,
    })
    .expect("serialization cannot fail")
}

// ---------------------------------------------------------------------------
// Verdicts, cells, projections
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
pub struct FiniteVerdictDto {
    pub delineable: bool,
    pub projectively_delineable: bool,
}

pub fn finite_verdict_to_json(v: &FiniteSetVerdict) -> String {
    serde_json::to_string(&FiniteVerdictDto {
        delineable: v.delineable,
        projectively_delineable: v.projectively_delineable,
    })
    .expect("serialization cannot fail")
}

#[derive(Serialize, Deserialize)]
pub struct CellDto {
    pub mode: String,
    pub interval: [String; 2],
}

fn mode_name(mode: ProjectionMode) -> &'static str {
    match mode {
        ProjectionMode::Classical => "classical",
        ProjectionMode::Projective => "projective",
    }
}

pub fn cell_to_json(cell: &CellInterval) -> String {
    let bound = |b: &CellBound, neg: bool| match b {
        CellBound::Unbounded => if neg { "-inf" } else { "inf" }.to_string(),
        CellBound::Exact(v) | CellBound::Approx(v) => format_rat(v),
    };
    serde_json::to_string(&CellDto {
        mode: mode_name(cell.mode).to_string(),
        interval: [bound(&cell.lo, true), bound(&cell.hi, false)],
    })
    .expect("serialization cannot fail")
}

#[derive(Serialize, Deserialize)]
pub struct GeneratorDto {
    pub provenance: String,
    pub poly: PolyDto,
}

#[derive(Serialize, Deserialize)]
pub struct ProjectionDto {
    pub mode: String,
    pub generators: Vec<GeneratorDto>,
}

pub fn projection_to_json(set: &ProjectionSet) -> String {
    serde_json::to_string(&ProjectionDto {
        mode: mode_name(set.mode).to_string(),
        generators: set
            .generators
            .iter()
            .map(|g| GeneratorDto {
                provenance: g.provenance.to_string(),
                poly: PolyDto::from_poly(&g.poly),
            })
            .collect(),
    })
    .expect("serialization cannot fail")
}

#[derive(Serialize, Deserialize)]
pub struct TrackVerdictDto {
    pub status: String,
    pub branch_count: usize,
    pub multiplicities: Vec<u32>,
    pub monodromy: Option<Vec<usize>>,
    pub witness: Option<f64>,
    pub witness_point: Option<Vec<String>>,
    pub reason: Option<String>,
}

pub fn verdict_to_json(result: &TrackResult) -> String {
    let v = &result.verdict;
    serde_json::to_string(&TrackVerdictDto {
        status: match v.status {
            TrackStatus::Consistent => "CONSISTENT".to_string(),
            TrackStatus::Violation => "VIOLATION".to_string(),
        },
        branch_count: v.branch_count,
        multiplicities: v.multiplicities.clone(),
        monodromy: v.monodromy.clone(),
        witness: v.witness,
        witness_point: v
            .witness_point
            .as_ref()
            .map(|p| p.iter().map(format_rat).collect()),
        reason: v.reason.clone(),
    })
    .expect("serialization cannot fail")
}

#[derive(Serialize, Deserialize)]
pub struct SectionReportDto {
    pub branch_id: usize,
    pub behavior: String,
    pub witness: Option<f64>,
}

pub fn section_reports_to_json(reports: &[SectionReport]) -> String {
    let dtos: Vec<SectionReportDto> = reports
        .iter()
        .map(|r| match &r.behavior {
            SectionBehavior::VanishesIdentically => SectionReportDto {
                branch_id: r.branch_id,
                behavior: "vanishes_identically".to_string(),
                witness: None,
            },
            SectionBehavior::NeverVanishes => SectionReportDto {
                branch_id: r.branch_id,
                behavior: "never_vanishes".to_string(),
                witness: None,
            },
            SectionBehavior::Mixed { witness } => SectionReportDto {
                branch_id: r.branch_id,
                behavior: "MIXED".to_string(),
                witness: Some(*witness),
            },
        })
        .collect();
    serde_json::to_string(&dtos).expect("serialization cannot fail")
}

// ---------------------------------------------------------------------------
// CSV traces
// ---------------------------------------------------------------------------

pub const TRACE_CSV_HEADER: &str = "t,branch_id,u,v,multiplicity,is_infinity";

/// Trace CSV: one row per (sample, branch), samples outermost, LF endings.
pub fn track_to_csv(result: &TrackResult) -> String {
    let mut out = String::from(TRACE_CSV_HEADER);
    out.push('\n');
    let rows = result
        .traces
        .iter()
        .map(|tr| tr.points.len())
        .min()
        .unwrap_or(0);
    for idx in 0..rows {
        for trace in &result.traces {
            let (t, root) = &trace.points[idx];
            out.push_str(&format!(
                "{},{},{},{},{},{}\n",
                t,
                trace.branch_id,
                root.embedded.u,
                root.embedded.v,
                root.multiplicity,
                root.is_infinity()
            ));
        }
    }
    out
}

/// Multi-polynomial plot CSV with a leading polynomial index column.
pub fn plot_to_csv(results: &[TrackResult]) -> String {
    let mut out = String::from("poly,t,branch_id,u,v,multiplicity,is_infinity");
    out.push('\n');
    for (pi, result) in results.iter().enumerate() {
        let rows = result
            .traces
            .iter()
            .map(|tr| tr.points.len())
            .min()
            .unwrap_or(0);
        for idx in 0..rows {
            for trace in &result.traces {
                let (t, root) = &trace.points[idx];
                out.push_str(&format!(
                    "{},{},{},{},{},{},{}\n",
                    pi,
                    t,
                    trace.branch_id,
                    root.embedded.u,
                    root.embedded.v,
                    root.multiplicity,
                    root.is_infinity()
                ));
            }
        }
    }
    out
}
