//! Job descriptions, their JSON wire format, and the reports produced by
//! `kzero run`.
//!
//! Integers on the wire are decimal strings. Numbers are accepted on input
//! as well, but reports always emit strings.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Signed, Zero};
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::base::{BaseSpace, K0Class};
use crate::bundle::{GroupStructure, K0Presentation, PnBundleSpec};
use crate::lattice::IntMatrix;
use crate::ruled::{IntersectionLattice, IntersectionTable, RuledSurface};
use crate::series::{series_invert, LaurentPolyK0, TruncatedSeriesK0};

pub const SCHEMA_VERSION: u32 = 1;
pub const DEFAULT_SERIES_ORDER: usize = 32;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum JobError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("validation error: {0}")]
    Validation(String),
}

impl From<crate::Error> for JobError {
    fn from(e: crate::Error) -> Self {
        JobError::Validation(e.to_string())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Ruled,
    PnBundle,
    Point,
}

impl Mode {
    pub fn as_str(&self) -> &'static str {
        match self {
            Mode::Ruled => "ruled",
            Mode::PnBundle => "pnbundle",
            Mode::Point => "point",
        }
    }
}

impl FromStr for Mode {
    type Err = JobError;
    fn from_str(s: &str) -> Result<Self, JobError> {
        match s {
            "ruled" => Ok(Mode::Ruled),
            "pnbundle" => Ok(Mode::PnBundle),
            "point" => Ok(Mode::Point),
            other => Err(JobError::Parse(format!(
                "unknown mode {other:?} (expected ruled, pnbundle or point)"
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum JobParameters {
    Ruled {
        deg_e: BigInt,
        deg_q: BigInt,
    },
    PnBundle {
        n: usize,
        koszul: Vec<K0Class>,
    },
    /// Integer coefficients of the relation, constant term first.
    Point {
        relation: Vec<BigInt>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JobSpec {
    pub base: BaseSpace,
    pub parameters: JobParameters,
    pub series_order: usize,
}

impl JobSpec {
    pub fn mode(&self) -> Mode {
        match self.parameters {
            JobParameters::Ruled { .. } => Mode::Ruled,
            JobParameters::PnBundle { .. } => Mode::PnBundle,
            JobParameters::Point { .. } => Mode::Point,
        }
    }

    pub fn from_json(text: &str) -> Result<Self, JobError> {
        let wire: JobSpecJson =
            serde_json::from_str(text).map_err(|e| JobError::Parse(e.to_string()))?;
        JobSpec::try_from(wire)
    }

    pub fn to_json(&self) -> JobSpecJson {
        let base = Some(BaseJson::from(self.base));
        let parameters = match &self.parameters {
            JobParameters::Ruled { deg_e, deg_q } => ParamsJson {
                deg_e: Some(deg_e.clone().into()),
                deg_q: Some(deg_q.clone().into()),
                ..Default::default()
            },
            JobParameters::PnBundle { n, koszul } => ParamsJson {
                n: Some(BigInt::from(*n).into()),
                koszul: Some(
                    koszul
                        .iter()
                        .map(|c| [c.rank.clone().into(), c.degree.clone().into()])
                        .collect(),
                ),
                ..Default::default()
            },
            JobParameters::Point { relation } => ParamsJson {
                relation: Some(relation.iter().cloned().map(Into::into).collect()),
                ..Default::default()
            },
        };
        JobSpecJson {
            mode: Some(self.mode().as_str().to_string()),
            base,
            parameters: Some(parameters),
            series_order: Some(BigInt::from(self.series_order).into()),
        }
    }
}

/// Arbitrary-precision integer carried as a decimal string.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntStr(pub BigInt);

impl From<BigInt> for IntStr {
    fn from(x: BigInt) -> Self {
        IntStr(x)
    }
}

impl Serialize for IntStr {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.to_string())
    }
}

impl<'de> Deserialize<'de> for IntStr {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct IntVisitor;
        impl Visitor<'_> for IntVisitor {
            type Value = IntStr;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an integer or a decimal string")
            }
            fn visit_str<E: de::Error>(self, v: &str) -> Result<IntStr, E> {
                BigInt::from_str(v.trim())
                    .map(IntStr)
                    .map_err(|_| E::custom(format!("invalid integer {v:?}")))
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> Result<IntStr, E> {
                Ok(IntStr(v.into()))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> Result<IntStr, E> {
                Ok(IntStr(v.into()))
            }
        }
        d.deserialize_any(IntVisitor)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BaseJson {
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub genus: Option<IntStr>,
}

impl From<BaseSpace> for BaseJson {
    fn from(b: BaseSpace) -> Self {
        match b {
            BaseSpace::Point => BaseJson {
                kind: "point".into(),
                genus: None,
            },
            BaseSpace::Curve { genus } => BaseJson {
                kind: "curve".into(),
                genus: Some(BigInt::from(genus).into()),
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ParamsJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub deg_e: Option<IntStr>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub deg_q: Option<IntStr>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<IntStr>,
    /// `[rank, degree]` pairs for `E_0, ..., E_{n+1}`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub koszul: Option<Vec<[IntStr; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub relation: Option<Vec<IntStr>>,
}

/// Wire form of a [`JobSpec`]. Every field is optional so that a document
/// can be layered over command-line flags.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobSpecJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mode: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub base: Option<BaseJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub parameters: Option<ParamsJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub series_order: Option<IntStr>,
}

impl JobSpecJson {
    /// Field-wise merge; fields present in `top` win.
    pub fn overlay(self, top: JobSpecJson) -> JobSpecJson {
        let base = match (self.base, top.base) {
            (Some(lo), Some(hi)) => Some(BaseJson {
                kind: hi.kind,
                genus: hi.genus.or(lo.genus),
            }),
            (lo, hi) => hi.or(lo),
        };
        let parameters = match (self.parameters, top.parameters) {
            (Some(lo), Some(hi)) => Some(ParamsJson {
                deg_e: hi.deg_e.or(lo.deg_e),
                deg_q: hi.deg_q.or(lo.deg_q),
                n: hi.n.or(lo.n),
                koszul: hi.koszul.or(lo.koszul),
                relation: hi.relation.or(lo.relation),
            }),
            (lo, hi) => hi.or(lo),
        };
        JobSpecJson {
            mode: top.mode.or(self.mode),
            base,
            parameters,
            series_order: top.series_order.or(self.series_order),
        }
    }
}

fn to_usize(x: &IntStr, what: &str) -> Result<usize, JobError> {
    usize::try_from(&x.0).map_err(|_| {
        JobError::Validation(format!(
            "{what} must be a non-negative integer, got {}",
            x.0
        ))
    })
}

fn parse_base(b: &BaseJson) -> Result<BaseSpace, JobError> {
    match b.kind.as_str() {
        "point" => match b.genus {
            None => Ok(BaseSpace::Point),
            Some(_) => Err(JobError::Validation("a point base has no genus".into())),
        },
        "curve" => {
            let g = b
                .genus
                .as_ref()
                .ok_or_else(|| JobError::Validation("curve base needs a genus".into()))?;
            let genus = u64::try_from(&g.0).map_err(|_| {
                JobError::Validation(format!("genus must be a non-negative integer, got {}", g.0))
            })?;
            Ok(BaseSpace::curve(genus))
        }
        other => Err(JobError::Parse(format!(
            "unknown base kind {other:?} (expected point or curve)"
        ))),
    }
}

impl TryFrom<JobSpecJson> for JobSpec {
    type Error = JobError;

    fn try_from(w: JobSpecJson) -> Result<Self, JobError> {
        let mode: Mode = w
            .mode
            .as_deref()
            .ok_or_else(|| JobError::Validation("missing mode".into()))?
            .parse()?;
        let series_order = match &w.series_order {
            Some(x) => to_usize(x, "series_order")?,
            None => DEFAULT_SERIES_ORDER,
        };
        let base = match (&w.base, mode) {
            (Some(b), _) => parse_base(b)?,
            (None, Mode::Point) => BaseSpace::Point,
            (None, _) => return Err(JobError::Validation("missing base".into())),
        };
        let p = w.parameters.unwrap_or_default();

        let unused = |names: &[(&str, bool)]| -> Result<(), JobError> {
            match names.iter().find(|(_, present)| *present) {
                Some((name, _)) => Err(JobError::Validation(format!(
                    "parameter {name} is not used in {} mode",
                    mode.as_str()
                ))),
                None => Ok(()),
            }
        };
        let missing = |name: &str| JobError::Validation(format!("missing parameter {name}"));

        let parameters = match mode {
            Mode::Ruled => {
                unused(&[
                    ("n", p.n.is_some()),
                    ("koszul", p.koszul.is_some()),
                    ("relation", p.relation.is_some()),
                ])?;
                if base.is_point() {
                    return Err(JobError::Validation(
                        "a ruled surface needs a curve as base".into(),
                    ));
                }
                JobParameters::Ruled {
                    deg_e: p.deg_e.ok_or_else(|| missing("deg_e"))?.0,
                    deg_q: p.deg_q.ok_or_else(|| missing("deg_q"))?.0,
                }
            }
            Mode::PnBundle => {
                unused(&[
                    ("deg_e", p.deg_e.is_some()),
                    ("deg_q", p.deg_q.is_some()),
                    ("relation", p.relation.is_some()),
                ])?;
                let n = to_usize(p.n.as_ref().ok_or_else(|| missing("n"))?, "n")?;
                let koszul: Vec<K0Class> = p
                    .koszul
                    .ok_or_else(|| missing("koszul"))?
                    .into_iter()
                    .map(|[r, d]| K0Class::new(r.0, d.0))
                    .collect();
                if n == 0 {
                    return Err(JobError::Validation(
                        "fiber dimension n must be positive".into(),
                    ));
                }
                if koszul.len() != n + 2 {
                    return Err(JobError::Validation(format!(
                        "a P^{n}-bundle needs {} Koszul classes, got {}",
                        n + 2,
                        koszul.len()
                    )));
                }
                JobParameters::PnBundle { n, koszul }
            }
            Mode::Point => {
                unused(&[
                    ("deg_e", p.deg_e.is_some()),
                    ("deg_q", p.deg_q.is_some()),
                    ("n", p.n.is_some()),
                    ("koszul", p.koszul.is_some()),
                ])?;
                if !base.is_point() {
                    return Err(JobError::Validation("point mode needs a point base".into()));
                }
                JobParameters::Point {
                    relation: p
                        .relation
                        .ok_or_else(|| missing("relation"))?
                        .into_iter()
                        .map(|x| x.0)
                        .collect(),
                }
            }
        };
        let job = JobSpec {
            base,
            parameters,
            series_order,
        };
        job.presentation()?;
        Ok(job)
    }
}

enum Geometry {
    Bundle(PnBundleSpec),
    Point(K0Presentation),
}

impl JobSpec {
    fn geometry(&self) -> Result<Geometry, JobError> {
        Ok(match &self.parameters {
            JobParameters::Ruled { deg_e, deg_q } => Geometry::Bundle(PnBundleSpec::ruled(
                self.base.genus().unwrap_or(0),
                K0Class::new(2, deg_e.clone()),
                K0Class::new(1, deg_q.clone()),
            )?),
            JobParameters::PnBundle { koszul, .. } => {
                Geometry::Bundle(PnBundleSpec::new(self.base, koszul.clone())?)
            }
            JobParameters::Point { relation } => {
                if relation.first().is_none_or(|c| !c.is_one()) {
                    return Err(JobError::Validation(
                        "relation of a connected graded algebra must have constant term 1".into(),
                    ));
                }
                let coeffs: Vec<K0Class> = relation
                    .iter()
                    .map(|c| K0Class::new(c.clone(), 0))
                    .collect();
                let poly = LaurentPolyK0::from_coeffs(BaseSpace::Point, 0, &coeffs)?;
                Geometry::Point(K0Presentation::new(poly)?)
            }
        })
    }

    pub fn presentation(&self) -> Result<K0Presentation, JobError> {
        Ok(match self.geometry()? {
            Geometry::Bundle(spec) => spec.presentation(),
            Geometry::Point(p) => p,
        })
    }

    /// Expected ranks of the Hilbert coefficients, when the job pins them.
    fn expected_rank(&self, k: usize) -> Option<BigInt> {
        let n = match &self.parameters {
            JobParameters::Ruled { .. } => 1,
            JobParameters::PnBundle { n, .. } => *n,
            JobParameters::Point { relation } => binomial_power(relation)?.checked_sub(1)?,
        };
        Some(binomial(BigInt::from(k + n), BigInt::from(n)))
    }
}

/// `Some(m)` iff the coefficients are those of `(1 - T)^m`.
fn binomial_power(coeffs: &[BigInt]) -> Option<usize> {
    let m = coeffs.len().checked_sub(1)?;
    let matches = coeffs.iter().enumerate().all(|(q, c)| {
        let b = binomial(BigInt::from(m), BigInt::from(q));
        *c == if q % 2 == 0 { b } else { -b }
    });
    matches.then_some(m)
}

fn superscript(n: usize) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    n.to_string()
        .chars()
        .map(|c| DIGITS[c.to_digit(10).unwrap() as usize])
        .collect()
}

fn int_poly_text(coeffs: &[BigInt]) -> String {
    if let Some(m) = binomial_power(coeffs).filter(|&m| m >= 1) {
        return if m == 1 {
            "1−T".to_string()
        } else {
            format!("(1−T){}", superscript(m))
        };
    }
    let mut s = String::new();
    for (i, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let sign = if c.is_negative() { "−" } else { "+" };
        if s.is_empty() {
            if c.is_negative() {
                s.push('−');
            }
        } else {
            let _ = write!(s, " {sign} ");
        }
        let a = c.abs();
        let mono = match i {
            0 => String::new(),
            1 => "T".into(),
            _ => format!("T{}", superscript(i)),
        };
        if i == 0 || !a.is_one() {
            let _ = write!(s, "{a}");
        }
        s.push_str(&mono);
    }
    s
}

#[derive(Debug, Clone)]
pub struct RuledReport {
    pub intersection_table: IntersectionTable,
    pub lattice: IntersectionLattice,
    pub e_invariant: BigInt,
}

#[derive(Debug, Clone)]
pub struct Report {
    pub job: JobSpec,
    pub relation: LaurentPolyK0,
    pub presentation: String,
    pub group_structure: GroupStructure,
    pub hilbert: TruncatedSeriesK0,
    /// `None` when the job does not determine the rank growth.
    pub hilbert_rank_check: Option<bool>,
    pub ruled: Option<RuledReport>,
}

pub fn run(job: &JobSpec) -> Result<Report, JobError> {
    let pres = job.presentation()?;
    let relation = pres.relation().clone();
    let group_structure = pres.group_structure();
    let hilbert = series_invert(&relation, job.series_order)?;
    let hilbert_rank_check = (0..=job.series_order)
        .map(|k| job.expected_rank(k).map(|r| r == hilbert.coeffs()[k].rank))
        .collect::<Option<Vec<bool>>>()
        .map(|v| v.into_iter().all(|ok| ok));

    let presentation = match &job.parameters {
        JobParameters::Point { relation } => format!(
            "K₀ ≅ Z[T]/({}), free abelian rank {}",
            int_poly_text(relation),
            group_structure.point_base_abelian_rank.unwrap_or_default()
        ),
        _ => format!(
            "K₀ ≅ K₀(X)[T,T⁻¹]/({}), free of rank {} over K₀(X){}",
            relation,
            group_structure.free_rank_over_base,
            match group_structure.point_base_abelian_rank {
                Some(r) => format!(", free abelian rank {r}"),
                None => String::new(),
            }
        ),
    };

    let ruled = match &job.parameters {
        JobParameters::Ruled { deg_e, deg_q } => {
            let s = RuledSurface::from_degrees(
                job.base.genus().unwrap_or(0),
                deg_e.clone(),
                deg_q.clone(),
            );
            Some(RuledReport {
                intersection_table: s.intersection_table(),
                lattice: s.neron_severi(),
                e_invariant: s.e_invariant(),
            })
        }
        _ => None,
    };

    Ok(Report {
        job: job.clone(),
        relation,
        presentation,
        group_structure,
        hilbert,
        hilbert_rank_check,
        ruled,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exponent: IntStr,
    pub rank: IntStr,
    pub degree: IntStr,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupStructureJson {
    pub free_rank_over_base: IntStr,
    pub point_base_abelian_rank: Option<IntStr>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntersectionTableJson {
    pub fiber_fiber: IntStr,
    pub fiber_h: IntStr,
    pub h_fiber: IntStr,
    pub h_h: IntStr,
}

/// Machine-readable report, `"schema": 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportJson {
    pub schema: u32,
    pub input: JobSpecJson,
    pub relation: Vec<TermJson>,
    pub presentation: String,
    pub group_structure: GroupStructureJson,
    pub hilbert_series: Vec<[IntStr; 2]>,
    pub hilbert_ranks: Vec<IntStr>,
    pub hilbert_rank_check: Option<bool>,
    pub intersection_table: Option<IntersectionTableJson>,
    pub gram_f1: Option<Vec<Vec<IntStr>>>,
    pub radical_basis: Option<Vec<Vec<IntStr>>>,
    pub gram_ns: Option<Vec<Vec<IntStr>>>,
    pub e_invariant: Option<IntStr>,
}

fn matrix_json(m: &IntMatrix) -> Vec<Vec<IntStr>> {
    m.to_rows()
        .into_iter()
        .map(|r| r.into_iter().map(IntStr).collect())
        .collect()
}

fn int(x: impl Into<BigInt>) -> IntStr {
    IntStr(x.into())
}

impl Report {
    pub fn to_json(&self) -> ReportJson {
        let ruled = self.ruled.as_ref();
        ReportJson {
            schema: SCHEMA_VERSION,
            input: self.job.to_json(),
            relation: self
                .relation
                .terms()
                .map(|(e, c)| TermJson {
                    exponent: int(e),
                    rank: int(c.rank.clone()),
                    degree: int(c.degree.clone()),
                })
                .collect(),
            presentation: self.presentation.clone(),
            group_structure: GroupStructureJson {
                free_rank_over_base: int(self.group_structure.free_rank_over_base),
                point_base_abelian_rank: self.group_structure.point_base_abelian_rank.map(int),
            },
            hilbert_series: self
                .hilbert
                .coeffs()
                .iter()
                .map(|c| [int(c.rank.clone()), int(c.degree.clone())])
                .collect(),
            hilbert_ranks: self.hilbert.ranks().cloned().map(IntStr).collect(),
            hilbert_rank_check: self.hilbert_rank_check,
            intersection_table: ruled.map(|r| {
                let t = &r.intersection_table;
                IntersectionTableJson {
                    fiber_fiber: int(t.fiber_fiber.clone()),
                    fiber_h: int(t.fiber_h.clone()),
                    h_fiber: int(t.h_fiber.clone()),
                    h_h: int(t.h_h.clone()),
                }
            }),
            gram_f1: ruled.map(|r| matrix_json(&r.lattice.euler_gram)),
            radical_basis: ruled.map(|r| {
                r.lattice
                    .radical
                    .iter()
                    .map(|v| v.iter().cloned().map(IntStr).collect())
                    .collect()
            }),
            gram_ns: ruled.map(|r| matrix_json(&r.lattice.quotient_gram)),
            e_invariant: ruled.map(|r| int(r.e_invariant.clone())),
        }
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("report serializes")
    }
}

fn write_matrix(f: &mut fmt::Formatter<'_>, m: &IntMatrix) -> fmt::Result {
    for i in 0..m.rows() {
        let row: Vec<String> = m.row(i).iter().map(|x| format!("{x:>4}")).collect();
        writeln!(f, "    [{} ]", row.join(""))?;
    }
    Ok(())
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "mode:        {}", self.job.mode().as_str())?;
        writeln!(f, "base:        {}", self.job.base)?;
        writeln!(f, "relation:    {}", self.relation)?;
        writeln!(f, "K0:          {}", self.presentation)?;
        let shown = self.hilbert.order().min(10);
        let coeffs: Vec<String> = self.hilbert.coeffs()[..=shown]
            .iter()
            .map(ToString::to_string)
            .collect();
        writeln!(
            f,
            "hilbert:     {}{}",
            coeffs.join(" "),
            if shown < self.hilbert.order() {
                " ..."
            } else {
                ""
            }
        )?;
        writeln!(
            f,
            "rank check:  {} (order {})",
            match self.hilbert_rank_check {
                Some(true) => "ok",
                Some(false) => "FAILED",
                None => "n/a",
            },
            self.hilbert.order()
        )?;
        if let Some(r) = &self.ruled {
            let t = &r.intersection_table;
            writeln!(f, "intersections:")?;
            writeln!(f, "    fiber.fiber = {}", t.fiber_fiber)?;
            writeln!(f, "    fiber.H     = {}", t.fiber_h)?;
            writeln!(f, "    H.fiber     = {}", t.h_fiber)?;
            writeln!(f, "    H.H         = {}", t.h_h)?;
            writeln!(f, "Euler form on (fiber, fiber.H, H):")?;
            write_matrix(f, &r.lattice.euler_gram)?;
            let rad: Vec<String> = r
                .lattice
                .radical_classes()
                .iter()
                .map(|c| c.rep().to_string())
                .collect();
            writeln!(f, "radical:     span{{{}}}", rad.join(", "))?;
            writeln!(f, "Neron-Severi intersection form on (fiber, H):")?;
            write_matrix(f, &r.lattice.quotient_gram)?;
            writeln!(f, "e-invariant: {}", r.e_invariant)?;
        }
        Ok(())
    }
}
