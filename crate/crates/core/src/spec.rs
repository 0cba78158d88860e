//! Specification file parsing, schema validation and cross-field rules.
//!
//! Structural checks (types, enums, ranges) live in `spec.schema.json`;
//! rules the schema language cannot express (mutual exclusion, variant
//! consistency, cubic cells) live in [`validate_spec`].

use std::collections::BTreeSet;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub const SCHEMA_TEXT: &str = include_str!("../../../spec.schema.json");

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SolverKind {
    Aderdg,
    Fv,
    LimitingAderdg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PredictorVariant {
    Picard,
    Ck,
    Otf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Term {
    Flux,
    Ncp,
    Source,
    ViscousFlux,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OutputFormat {
    Csv,
    GridDump,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Optimization {
    pub vector_width: i64,
    pub temp_vars_on_stack: bool,
    pub use_flux_vect: bool,
}

impl Default for Optimization {
    fn default() -> Self {
        Optimization {
            vector_width: 1,
            temp_vars_on_stack: true,
            use_flux_vect: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MeshSpec {
    pub origin: Vec<f64>,
    pub extent: Vec<f64>,
    pub cells_per_dim: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TimeSpec {
    pub end_time: f64,
    pub cfl: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutputSpec {
    pub every_n_steps: i64,
    pub format: OutputFormat,
}

impl Default for OutputSpec {
    fn default() -> Self {
        OutputSpec {
            every_n_steps: 0,
            format: OutputFormat::Csv,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LimiterSpec {
    pub dmp_delta0: f64,
    pub dmp_epsilon: f64,
}

impl Default for LimiterSpec {
    fn default() -> Self {
        LimiterSpec {
            dmp_delta0: 1e-4,
            dmp_epsilon: 1e-3,
        }
    }
}

/// Normalized model of a specification file. All optional blocks carry
/// their documented defaults after parsing.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Specification {
    pub project_name: String,
    pub output_dir: String,
    pub dimension: i64,
    pub solver_kind: SolverKind,
    pub order: i64,
    pub quantities: i64,
    pub terms: BTreeSet<Term>,
    pub linear: bool,
    pub predictor_variant: PredictorVariant,
    pub optimization: Optimization,
    pub mesh: MeshSpec,
    pub time: TimeSpec,
    pub output: OutputSpec,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub limiter: Option<LimiterSpec>,
}

impl Specification {
    /// Degrees of freedom per axis.
    pub fn n_dof(&self) -> usize {
        self.order as usize + 1
    }

    pub fn alignment_bytes(&self) -> i64 {
        8 * self.optimization.vector_width
    }

    /// Cell size; meaningful only after validation (cubic cells).
    pub fn h(&self) -> f64 {
        self.mesh.extent[0] / self.mesh.cells_per_dim[0] as f64
    }

    pub fn uses(&self, term: Term) -> bool {
        self.terms.contains(&term)
    }
}

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("JSON syntax error at line {line}, column {column}: {message}")]
    Json {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("missing required field '{0}'")]
    MissingField(String),
    #[error("invalid specification: {0}")]
    Invalid(String),
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

/// Raw form with optionals; normalized into `Specification` after parsing.
#[derive(Deserialize)]
struct RawSpec {
    project_name: String,
    output_dir: String,
    dimension: i64,
    solver_kind: SolverKind,
    order: i64,
    quantities: i64,
    terms: BTreeSet<Term>,
    linear: bool,
    predictor_variant: Option<PredictorVariant>,
    #[serde(default)]
    optimization: RawOptimization,
    mesh: MeshSpec,
    time: TimeSpec,
    output: Option<RawOutput>,
    limiter: Option<RawLimiter>,
}

#[derive(Deserialize, Default)]
struct RawOptimization {
    vector_width: Option<i64>,
    temp_vars_on_stack: Option<bool>,
    use_flux_vect: Option<bool>,
}

#[derive(Deserialize)]
struct RawOutput {
    every_n_steps: Option<i64>,
    format: Option<OutputFormat>,
}

#[derive(Deserialize)]
struct RawLimiter {
    dmp_delta0: Option<f64>,
    dmp_epsilon: Option<f64>,
}

/// Parse a specification file. Structural only: no cross-field checks here.
pub fn parse_spec(text: &str) -> Result<Specification, ParseError> {
    let raw: RawSpec = serde_json::from_str(text).map_err(classify_json_error)?;
    let defaults = Optimization::default();
    let mut predictor_variant = raw.predictor_variant.unwrap_or(if raw.linear {
        PredictorVariant::Ck
    } else {
        PredictorVariant::Picard
    });
    if raw.solver_kind == SolverKind::Fv {
        // variant is irrelevant for pure FV solves
        predictor_variant = PredictorVariant::Picard;
    }
    let limiter = match (raw.solver_kind, raw.limiter) {
        (_, Some(l)) => Some(LimiterSpec {
            dmp_delta0: l.dmp_delta0.unwrap_or(LimiterSpec::default().dmp_delta0),
            dmp_epsilon: l.dmp_epsilon.unwrap_or(LimiterSpec::default().dmp_epsilon),
        }),
        (SolverKind::LimitingAderdg, None) => Some(LimiterSpec::default()),
        _ => None,
    };
    Ok(Specification {
        project_name: raw.project_name,
        output_dir: raw.output_dir,
        dimension: raw.dimension,
        solver_kind: raw.solver_kind,
        order: raw.order,
        quantities: raw.quantities,
        terms: raw.terms,
        linear: raw.linear,
        predictor_variant,
        optimization: Optimization {
            vector_width: raw.optimization.vector_width.unwrap_or(defaults.vector_width),
            temp_vars_on_stack: raw
                .optimization
                .temp_vars_on_stack
                .unwrap_or(defaults.temp_vars_on_stack),
            use_flux_vect: raw.optimization.use_flux_vect.unwrap_or(defaults.use_flux_vect),
        },
        mesh: raw.mesh,
        time: raw.time,
        output: raw.output.map_or_else(OutputSpec::default, |o| OutputSpec {
            every_n_steps: o.every_n_steps.unwrap_or(0),
            format: o.format.unwrap_or(OutputFormat::Csv),
        }),
        limiter,
    })
}

fn classify_json_error(err: serde_json::Error) -> ParseError {
    let msg = err.to_string();
    if err.is_syntax() || err.is_eof() {
        return ParseError::Json {
            line: err.line(),
            column: err.column(),
            message: msg,
        };
    }
    if let Some(rest) = msg.strip_prefix("missing field `") {
        if let Some(field) = rest.split('`').next() {
            return ParseError::MissingField(field.to_string());
        }
    }
    ParseError::Invalid(msg)
}

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationError {
    /// Slash-separated field path, e.g. "/mesh/extent".
    pub path: String,
    pub message: String,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct ValidationReport {
    pub errors: Vec<ValidationError>,
}

impl ValidationReport {
    pub fn valid(&self) -> bool {
        self.errors.is_empty()
    }

    fn push(&mut self, path: &str, message: impl Into<String>) {
        self.errors.push(ValidationError {
            path: path.to_string(),
            message: message.into(),
        });
    }
}

fn compiled_schema() -> &'static jsonschema::Validator {
    static SCHEMA: OnceLock<jsonschema::Validator> = OnceLock::new();
    SCHEMA.get_or_init(|| {
        let doc: serde_json::Value =
            serde_json::from_str(SCHEMA_TEXT).expect("spec.schema.json is valid JSON");
        jsonschema::validator_for(&doc).expect("spec.schema.json compiles")
    })
}

/// Validate raw JSON text against the shipped schema. Structural checks only.
pub fn validate_json(text: &str) -> Result<ValidationReport, ParseError> {
    let doc: serde_json::Value = serde_json::from_str(text).map_err(classify_json_error)?;
    let mut report = ValidationReport::default();
    for err in compiled_schema().iter_errors(&doc) {
        let path = err.instance_path.to_string();
        let path = if path.is_empty() { "/".to_string() } else { path };
        report.errors.push(ValidationError {
            path,
            message: err.to_string(),
        });
    }
    Ok(report)
}

/// Cross-field validation on a parsed specification. Pure; errors are data.
pub fn validate_spec(s: &Specification) -> ValidationReport {
    let mut r = ValidationReport::default();

    if !(s.dimension == 2 || s.dimension == 3) {
        r.push("/dimension", "dimension must be 2 or 3");
    }
    if !(1..=9).contains(&s.order) {
        r.push("/order", "order must be between 1 and 9");
    }
    if s.quantities < 1 {
        r.push("/quantities", "quantities must be at least 1");
    }
    if s.uses(Term::Flux) && s.uses(Term::ViscousFlux) {
        r.push("/terms", "flux and viscous_flux are mutually exclusive");
    }
    if s.solver_kind != SolverKind::Fv {
        match s.predictor_variant {
            PredictorVariant::Ck | PredictorVariant::Otf if !s.linear => {
                r.push(
                    "/predictor_variant",
                    "ck and otf predictors require a linear PDE",
                );
            }
            PredictorVariant::Picard if s.linear => {
                r.push(
                    "/predictor_variant",
                    "the picard predictor is for nonlinear PDEs; use ck or otf for linear ones",
                );
            }
            _ => {}
        }
    }
    if ![1, 2, 4, 8].contains(&s.optimization.vector_width) {
        r.push("/optimization/vector_width", "vector_width must be 1, 2, 4 or 8");
    }
    if s.optimization.use_flux_vect && !(s.uses(Term::Flux) || s.uses(Term::ViscousFlux)) {
        r.push("/optimization/use_flux_vect", "use_flux_vect requires a flux term");
    }

    let d = s.dimension as usize;
    for (name, len) in [
        ("origin", s.mesh.origin.len()),
        ("extent", s.mesh.extent.len()),
        ("cells_per_dim", s.mesh.cells_per_dim.len()),
    ] {
        if len != d {
            r.push(
                &format!("/mesh/{name}"),
                format!("expected {d} entries, got {len}"),
            );
        }
    }
    if s.mesh.extent.iter().any(|&e| !(e > 0.0)) {
        r.push("/mesh/extent", "extent entries must be positive");
    }
    if s.mesh.cells_per_dim.iter().any(|&c| c < 1) {
        r.push("/mesh/cells_per_dim", "cells_per_dim entries must be at least 1");
    }
    if s.mesh.extent.len() == s.mesh.cells_per_dim.len()
        && !s.mesh.extent.is_empty()
        && s.mesh.extent.iter().all(|&e| e > 0.0)
        && s.mesh.cells_per_dim.iter().all(|&c| c >= 1)
    {
        let h0 = s.mesh.extent[0] / s.mesh.cells_per_dim[0] as f64;
        let cubic = s
            .mesh
            .extent
            .iter()
            .zip(&s.mesh.cells_per_dim)
            .all(|(&e, &c)| {
                let h = e / c as f64;
                (h - h0).abs() <= 1e-12 * h0.abs()
            });
        if !cubic {
            r.push("/mesh", "cells must be cubic: extent_i / cells_per_dim_i must be identical");
        }
    }
    if !(s.time.end_time >= 0.0) {
        r.push("/time/end_time", "end_time must be non-negative");
    }
    if !(s.time.cfl > 0.0 && s.time.cfl <= 1.0) {
        r.push("/time/cfl", "cfl must lie in (0, 1]");
    }
    if s.output.every_n_steps < 0 {
        r.push("/output/every_n_steps", "every_n_steps must be non-negative");
    }
    match (&s.limiter, s.solver_kind) {
        (Some(_), SolverKind::LimitingAderdg) | (None, SolverKind::Aderdg) | (None, SolverKind::Fv) => {}
        (Some(_), _) => r.push("/limiter", "limiter block requires solver_kind limiting_aderdg"),
        (None, SolverKind::LimitingAderdg) => {
            r.push("/limiter", "limiting_aderdg requires a limiter block")
        }
    }
    if let Some(l) = &s.limiter {
        if !(l.dmp_delta0 > 0.0) {
            r.push("/limiter/dmp_delta0", "dmp_delta0 must be positive");
        }
        if !(l.dmp_epsilon > 0.0) {
            r.push("/limiter/dmp_epsilon", "dmp_epsilon must be positive");
        }
    }
    r
}

/// Full pipeline for a raw spec file: schema validation, parse, cross-field rules.
pub fn load_and_validate(text: &str) -> Result<(Specification, ValidationReport), ParseError> {
    let mut report = validate_json(text)?;
    let spec = parse_spec(text)?;
    report.errors.extend(validate_spec(&spec).errors);
    Ok((spec, report))
}
