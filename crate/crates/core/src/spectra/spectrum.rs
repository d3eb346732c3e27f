use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Result;
use crate::jacobi::{jost_polynomial, wronskian, FiniteRankJacobi, JostPolynomial, TwoSidedJacobi, Wronskian};
use crate::poly::Polynomial;
use crate::reduce::{CanonicalForm, CopyCount, SunDecomposition};
use crate::scalar::{Rational, Scalar};

use super::roots::{real_roots_unit_interval, zhukovsky, RealRoot};

/// Eigenvalues closer than this are reported once with summed multiplicity.
pub const MERGE_TOL: f64 = 1e-9;
/// Float coefficients below this fraction of the largest one are dropped.
pub const FLUSH_RATIO: f64 = 1e-13;
/// Float-mode roots this close to `±1` are treated as threshold resonances.
pub const THRESHOLD_GAP: f64 = 1e-10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    FiniteBlock,
    JostRoot,
    WronskianRoot,
    SunBlock,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Multiplicity {
    Finite(usize),
    Infinite,
}

impl Serialize for Multiplicity {
    fn serialize<Se: Serializer>(&self, s: Se) -> std::result::Result<Se::Ok, Se::Error> {
        match self {
            Self::Finite(n) => s.serialize_u64(*n as u64),
            Self::Infinite => s.serialize_str("infinite"),
        }
    }
}

impl<'de> Deserialize<'de> for Multiplicity {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Count(usize),
            Word(String),
        }
        match Repr::deserialize(d)? {
            Repr::Count(n) => Ok(Self::Finite(n)),
            Repr::Word(w) if w == "infinite" => Ok(Self::Infinite),
            Repr::Word(w) => Err(serde::de::Error::custom(format!("bad multiplicity {w:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Band {
    pub lower: f64,
    pub upper: f64,
    pub multiplicity: Multiplicity,
}

impl Band {
    /// `[-2s, 2s]` with `s = sqrt(scale_sq)`.
    pub fn symmetric(scale_sq: f64, multiplicity: Multiplicity) -> Self {
        let edge = 2.0 * scale_sq.sqrt();
        Self {
            lower: -edge,
            upper: edge,
            multiplicity,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Eigenvalue {
    pub value: f64,
    pub multiplicity: usize,
    pub provenance: Vec<Provenance>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Spectrum {
    pub ac_bands: Vec<Band>,
    pub discrete: Vec<Eigenvalue>,
}

impl Spectrum {
    /// Sort the contributions and merge those within [`MERGE_TOL`].
    pub fn assemble(ac_bands: Vec<Band>, mut points: Vec<(f64, Provenance)>) -> Self {
        points.sort_by(|a, b| a.0.total_cmp(&b.0));
        let mut discrete: Vec<Eigenvalue> = Vec::new();
        let mut anchor = f64::NAN;
        for (value, prov) in points {
            match discrete.last_mut() {
                Some(last) if (value - anchor).abs() <= MERGE_TOL => {
                    last.multiplicity += 1;
                    if !last.provenance.contains(&prov) {
                        last.provenance.push(prov);
                        last.provenance.sort();
                    }
                }
                _ => {
                    anchor = value;
                    discrete.push(Eigenvalue {
                        value,
                        multiplicity: 1,
                        provenance: vec![prov],
                    });
                }
            }
        }
        Self { ac_bands, discrete }
    }

    /// Largest `|x|` over the absolutely continuous bands.
    pub fn band_edge(&self) -> f64 {
        self.ac_bands
            .iter()
            .map(|b| b.lower.abs().max(b.upper.abs()))
            .fold(0.0, f64::max)
    }

    /// Every eigenvalue repeated according to multiplicity.
    pub fn values(&self) -> Vec<f64> {
        self.discrete
            .iter()
            .flat_map(|e| std::iter::repeat_n(e.value, e.multiplicity))
            .collect()
    }

    /// Add eigenvalues, merging each with an existing one within
    /// [`MERGE_TOL`].
    pub fn insert(&mut self, points: impl IntoIterator<Item = (f64, Provenance)>) {
        for (value, prov) in points {
            if let Some(e) = self.discrete.iter_mut().find(|e| (e.value - value).abs() <= MERGE_TOL) {
                e.multiplicity += 1;
                if !e.provenance.contains(&prov) {
                    e.provenance.push(prov);
                    e.provenance.sort();
                }
                continue;
            }
            let at = self.discrete.partition_point(|e| e.value < value);
            self.discrete.insert(
                at,
                Eigenvalue {
                    value,
                    multiplicity: 1,
                    provenance: vec![prov],
                },
            );
        }
    }

    pub fn total_multiplicity(&self) -> usize {
        self.discrete.iter().map(|e| e.multiplicity).sum()
    }
}

/// Drop float coefficients negligible against the largest one.
pub fn flush_small<S: Scalar>(p: &Polynomial<S>) -> Polynomial<S> {
    if S::EXACT {
        return p.clone();
    }
    let cut = FLUSH_RATIO * crate::scalar::max_abs_f64(p.coeffs());
    p.map(|c| if c.to_f64().abs() < cut { S::zero() } else { c.clone() })
}

fn admissible<S: Scalar>(roots: Vec<RealRoot>) -> Vec<RealRoot> {
    if S::EXACT {
        return roots;
    }
    roots
        .into_iter()
        .filter(|r| 1.0 - r.value.abs() >= THRESHOLD_GAP)
        .collect()
}

#[derive(Clone, Debug, PartialEq)]
pub struct JostRoots<S> {
    pub jost: JostPolynomial<S>,
    pub roots: Vec<RealRoot>,
    /// `z + 1/z` for every root, same order.
    pub eigenvalues: Vec<f64>,
}

pub fn jost_roots<S: Scalar>(j: &FiniteRankJacobi<S>) -> Result<JostRoots<S>> {
    let mut jost = jost_polynomial(j);
    jost.poly = flush_small(&jost.poly);
    let roots = admissible::<S>(real_roots_unit_interval(&jost.poly)?);
    let eigenvalues = roots.iter().map(|r| zhukovsky(r.value)).collect::<Result<_>>()?;
    Ok(JostRoots {
        jost,
        roots,
        eigenvalues,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct WronskianRoots<S> {
    pub wronskian: Wronskian<S>,
    pub roots: Vec<RealRoot>,
    pub eigenvalues: Vec<f64>,
}

/// Zeros of the Wronskian in `(-1, 1) \ {0}` and their Zhukovsky images.
pub fn wronskian_roots<S: Scalar>(j: &TwoSidedJacobi<S>) -> Result<WronskianRoots<S>> {
    let w = wronskian(j);
    let p = flush_small(&w.value.normalized_polynomial());
    let roots = admissible::<S>(real_roots_unit_interval(&p)?);
    let eigenvalues = roots.iter().map(|r| zhukovsky(r.value)).collect::<Result<_>>()?;
    Ok(WronskianRoots {
        wronskian: w,
        roots,
        eigenvalues,
    })
}

/// Finite-block eigenvalues together with the Jost eigenvalues of the
/// Jacobi component.
pub fn discrete_spectrum<S: Scalar>(cf: &CanonicalForm<S>) -> Result<Spectrum> {
    let scale_sq = cf.jacobi_scale_sq.to_f64();
    let scale = scale_sq.sqrt();
    let mut points: Vec<(f64, Provenance)> = cf
        .finite_block
        .eigenvalues()
        .into_iter()
        .map(|x| (x, Provenance::FiniteBlock))
        .collect();
    let jr = jost_roots(&cf.jacobi)?;
    points.extend(jr.eigenvalues.iter().map(|&x| (scale * x, Provenance::JostRoot)));
    let multiplicity = match cf.free_copies.count {
        CopyCount::Finite(k) if cf.free_copies.scale_sq == cf.jacobi_scale_sq => Multiplicity::Finite(1 + k),
        CopyCount::Finite(_) => Multiplicity::Finite(1),
        CopyCount::Unbounded => Multiplicity::Infinite,
    };
    let mut bands = vec![Band::symmetric(scale_sq, multiplicity)];
    if let CopyCount::Finite(k) = cf.free_copies.count {
        if k > 0 && cf.free_copies.scale_sq != cf.jacobi_scale_sq {
            bands.push(Band::symmetric(cf.free_copies.scale_sq.to_f64(), Multiplicity::Finite(k)));
        }
    }
    Ok(Spectrum::assemble(bands, points))
}

/// Spectrum of a graph with the same bundle of rays at every vertex.
pub fn sun_spectrum(dec: &SunDecomposition) -> Result<Spectrum> {
    let mut points = Vec::new();
    for block in &dec.blocks {
        let jr = jost_roots(block)?;
        points.extend(jr.eigenvalues.into_iter().map(|x| (x, Provenance::SunBlock)));
    }
    let bands = vec![Band::symmetric(
        1.0,
        Multiplicity::Finite(dec.blocks.len() + dec.free_copies),
    )];
    Ok(Spectrum::assemble(bands, points))
}

/// Spectrum of `sqrt(scale_sq) J` for a two-sided `J`.
pub fn two_sided_spectrum<S: Scalar>(
    j: &TwoSidedJacobi<S>,
    scale_sq: &Rational,
    band_multiplicity: Multiplicity,
) -> Result<Spectrum> {
    let scale_sq = scale_sq.to_f64();
    let wr = wronskian_roots(j)?;
    let points = wr
        .eigenvalues
        .iter()
        .map(|&x| (scale_sq.sqrt() * x, Provenance::WronskianRoot))
        .collect();
    Ok(Spectrum::assemble(vec![Band::symmetric(scale_sq, band_multiplicity)], points))
}
