//! End-to-end analysis of a graph-spec document into a serializable report.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::TailedGraph;
use crate::graph_file::GraphSpec;
use crate::jacobi::FiniteRankJacobi;
use crate::oracle::{compare, OracleOptions, OracleReport};
use crate::reduce::{
    normalize_multiray, reduce_single_tail, sun_decompose_with_bridge, sun_parameters, verify_canonical,
    CanonicalForm, FreeCopies, SingleTail,
};
use crate::scalar::{format_rational, Rational, Scalar};
use crate::spectra::{
    descartes_bound, discrete_spectrum, jost_roots, spectral_measure, sun_spectrum, Band, JostRoots,
    Multiplicity, PointMass, Provenance, SpectralMeasure, Spectrum,
};

pub const SCHEMA: u32 = 1;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    #[default]
    Exact,
    Float,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Route {
    /// All tails at one vertex.
    SingleVertex,
    /// The same rays at every vertex.
    Sun,
    /// No reduction available; truncations only.
    OracleOnly,
}

/// A rational as `"p/q"` or a float.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Number {
    Exact(String),
    Float(f64),
}

impl Number {
    pub fn of<S: Scalar>(x: &S) -> Self {
        if S::EXACT {
            Self::Exact(format_rational(&x.to_rational()))
        } else {
            Self::Float(x.to_f64())
        }
    }

    pub fn to_f64(&self) -> Result<f64> {
        match self {
            Self::Exact(s) => Ok(crate::scalar::parse_rational(s)?.to_f64()),
            Self::Float(x) => Ok(*x),
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct AnalysisOptions {
    pub mode: Mode,
    pub measure: bool,
    /// Tail depth for the truncation check.
    pub oracle: Option<usize>,
    pub oracle_options: OracleOptions,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TraceRow {
    pub y: Number,
    pub z: Option<Number>,
    pub norm_sq: Number,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CanonicalSummary {
    pub vertex: usize,
    pub bridge_sq: String,
    /// Rays split off as detached copies.
    pub detached_rays: usize,
    pub krylov_depth: usize,
    /// Finite block in an orthonormal basis.
    pub finite_block: Vec<Vec<f64>>,
    /// `b_1..b_q` of the Jacobi component; free afterwards.
    pub jacobi_b: Vec<Number>,
    /// `a_1^2..a_q^2`; one afterwards.
    pub jacobi_a_sq: Vec<Number>,
    pub jacobi_scale_sq: String,
    pub trace: Vec<TraceRow>,
    /// Largest residual of the canonical-form identities.
    pub residual: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct JostSummary {
    pub label: String,
    /// Lowest exponent of `coefficients`.
    pub low: i64,
    pub coefficients: Vec<Number>,
    pub rescale_sq: Number,
    pub descartes_bound: usize,
    pub roots: Vec<f64>,
    pub eigenvalues: Vec<f64>,
}

impl JostSummary {
    fn new<S: Scalar>(label: impl Into<String>, jr: &JostRoots<S>) -> Result<Self> {
        Ok(Self {
            label: label.into(),
            low: 0,
            coefficients: jr.jost.poly.coeffs().iter().map(Number::of).collect(),
            rescale_sq: Number::of(&jr.jost.rescale_sq),
            descartes_bound: descartes_bound(&jr.jost.poly)?,
            roots: jr.roots.iter().map(|r| r.value).collect(),
            eigenvalues: jr.eigenvalues.clone(),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MeasureSummary {
    pub point_masses: Vec<PointMass>,
    pub continuous_mass: f64,
    pub total_mass: f64,
}

impl MeasureSummary {
    pub fn new(m: &SpectralMeasure) -> Self {
        Self {
            point_masses: m.point_masses.clone(),
            continuous_mass: m.continuous_mass(),
            total_mass: m.total_mass(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub schema: u32,
    pub input: GraphSpec,
    pub mode: Mode,
    pub route: Route,
    pub notice: Option<String>,
    pub canonical: Option<CanonicalSummary>,
    pub jost: Vec<JostSummary>,
    pub spectrum: Option<Spectrum>,
    pub measure: Option<MeasureSummary>,
    pub oracle: Option<OracleReport>,
}

impl AnalysisReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    /// The oracle ran on a predicted spectrum and disagreed with it.
    pub fn oracle_failed(&self) -> bool {
        self.route != Route::OracleOnly && self.oracle.as_ref().is_some_and(|o| !o.pass)
    }
}

struct Reduced<S> {
    cf: CanonicalForm<S>,
    summary: CanonicalSummary,
    /// The detached ray, when it is not free.
    detached: Option<FiniteRankJacobi<S>>,
}

fn reduce_single<S: Scalar>(single: &SingleTail, copies: usize) -> Result<Reduced<S>> {
    let a = single.adjacency.map(S::from_rational);
    let bridge_sq = S::from_rational(&single.bridge_sq);
    let tail = single.tail.map(S::from_rational);
    let (mut cf, trace) = reduce_single_tail(&a, single.vertex, &bridge_sq, &tail)?;
    cf.free_copies = FreeCopies::finite(copies);
    let residual = verify_canonical(&a, &bridge_sq, &tail, &cf, &trace)?.max();
    let q = cf.jacobi.rank();
    let summary = CanonicalSummary {
        vertex: cf.vertex,
        bridge_sq: format_rational(&single.bridge_sq),
        detached_rays: copies,
        krylov_depth: cf.krylov_depth(),
        finite_block: cf.finite_block.matrix.rows(),
        jacobi_b: (1..=q).map(|j| Number::of(&cf.jacobi.b(j))).collect(),
        jacobi_a_sq: (1..=q).map(|j| Number::of(&cf.jacobi.a_sq(j))).collect(),
        jacobi_scale_sq: format_rational(&cf.jacobi_scale_sq),
        trace: trace
            .steps
            .iter()
            .map(|s| TraceRow {
                y: Number::of(&s.y),
                z: s.z.as_ref().map(Number::of),
                norm_sq: Number::of(&s.norm_sq),
            })
            .collect(),
        residual,
    };
    let detached = (copies > 0 && !tail.is_free()).then_some(tail);
    Ok(Reduced { cf, summary, detached })
}

fn single_vertex<S: Scalar>(
    t: &TailedGraph,
    single: &SingleTail,
    copies: usize,
    opts: &AnalysisOptions,
    report: &mut AnalysisReport,
) -> Result<()> {
    let r = reduce_single::<S>(single, copies)?;
    let mut spectrum = discrete_spectrum(&r.cf)?;
    report.jost.push(JostSummary::new("jacobi", &jost_roots(&r.cf.jacobi)?)?);
    if let Some(ray) = &r.detached {
        let jr = jost_roots(ray)?;
        spectrum.insert(
            jr.eigenvalues
                .iter()
                .flat_map(|&x| std::iter::repeat_n((x, Provenance::JostRoot), copies)),
        );
        report.jost.push(JostSummary::new("detached_ray", &jr)?);
    }
    if opts.measure {
        let m = spectral_measure(&r.cf.jacobi)?.scaled(r.cf.jacobi_scale_sq.to_f64());
        report.measure = Some(MeasureSummary::new(&m));
    }
    if let Some(depth) = opts.oracle {
        report.oracle = Some(compare(&spectrum, t, depth, opts.oracle_options));
    }
    report.canonical = Some(r.summary);
    report.spectrum = Some(spectrum);
    Ok(())
}

fn sun(
    t: &TailedGraph,
    p: usize,
    bridge: &Rational,
    opts: &AnalysisOptions,
    report: &mut AnalysisReport,
) -> Result<()> {
    let dec = sun_decompose_with_bridge(&t.base, p, bridge)?;
    let spectrum = sun_spectrum(&dec)?;
    for (j, block) in dec.blocks.iter().enumerate() {
        report
            .jost
            .push(JostSummary::new(format!("sun_block_{}", j + 1), &jost_roots(block)?)?);
    }
    let mut notes = Vec::new();
    if opts.mode == Mode::Exact {
        notes.push("rays at every vertex are analyzed in floating point");
    }
    if opts.measure {
        notes.push("no single spectral measure for rays at every vertex");
    }
    if !notes.is_empty() {
        report.notice = Some(notes.join("; "));
    }
    if let Some(depth) = opts.oracle {
        report.oracle = Some(compare(&spectrum, t, depth, opts.oracle_options));
    }
    report.spectrum = Some(spectrum);
    Ok(())
}

pub fn analyze(spec: &GraphSpec, opts: &AnalysisOptions) -> Result<AnalysisReport> {
    let t = spec.tailed()?;
    let mut report = AnalysisReport {
        schema: SCHEMA,
        input: spec.canonicalize()?,
        mode: opts.mode,
        route: Route::SingleVertex,
        notice: None,
        canonical: None,
        jost: Vec::new(),
        spectrum: None,
        measure: None,
        oracle: None,
    };
    match normalize_multiray(&t) {
        Ok((single, copies)) => match opts.mode {
            Mode::Exact => single_vertex::<Rational>(&t, &single, copies, opts, &mut report)?,
            Mode::Float => single_vertex::<f64>(&t, &single, copies, opts, &mut report)?,
        },
        Err(Error::OracleOnly(reason)) => match sun_parameters(&t) {
            Some((p, bridge)) => {
                report.route = Route::Sun;
                sun(&t, p, &bridge, opts, &mut report)?;
            }
            None => {
                report.route = Route::OracleOnly;
                report.notice = Some(format!("oracle-only analysis: {reason}"));
                if let Some(depth) = opts.oracle {
                    let band = Band::symmetric(1.0, Multiplicity::Finite(t.total_rays()));
                    let nothing = Spectrum::assemble(vec![band], Vec::new());
                    report.oracle = Some(compare(&nothing, &t, depth, opts.oracle_options));
                }
            }
        },
        Err(e) => return Err(e),
    }
    Ok(report)
}

/// Spectral measure of the Jacobi component for a graph whose tails hang
/// off a single vertex.
pub fn jacobi_measure(spec: &GraphSpec, mode: Mode) -> Result<SpectralMeasure> {
    let (single, copies) = normalize_multiray(&spec.tailed()?)?;
    match mode {
        Mode::Exact => {
            let r = reduce_single::<Rational>(&single, copies)?;
            Ok(spectral_measure(&r.cf.jacobi)?.scaled(r.cf.jacobi_scale_sq.to_f64()))
        }
        Mode::Float => {
            let r = reduce_single::<f64>(&single, copies)?;
            Ok(spectral_measure(&r.cf.jacobi)?.scaled(r.cf.jacobi_scale_sq.to_f64()))
        }
    }
}
