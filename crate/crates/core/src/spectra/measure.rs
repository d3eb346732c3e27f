//! Spectral measure of `e_0` for a finite-rank Jacobi matrix.
//!
//! With `x = z + 1/z`, the measure has density
//! `sqrt(4 - x^2) Π^2 / (2π |ũ(e^{it})|^2)` on `[-2, 2]` and a point mass
//! `Π^2 z (1 - z^-2)^2 / (ũ'(z) ũ(1/z))` at every Jost root `z`.

use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::jacobi::FiniteRankJacobi;
use crate::poly::Polynomial;
use crate::scalar::Scalar;

use super::spectrum::jost_roots;

/// Midpoint nodes used for the continuous mass.
pub const MASS_NODES: usize = 2048;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PointMass {
    pub location: f64,
    pub mass: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SpectralMeasure {
    jost: Polynomial<f64>,
    rescale_sq: f64,
    scale: f64,
    pub point_masses: Vec<PointMass>,
}

fn abs_sq_on_circle(p: &Polynomial<f64>, t: f64) -> f64 {
    let (c, s) = (t.cos(), t.sin());
    let (mut re, mut im) = (0.0, 0.0);
    for &a in p.coeffs().iter().rev() {
        let r = re * c - im * s + a;
        im = re * s + im * c;
        re = r;
    }
    re * re + im * im
}

impl SpectralMeasure {
    /// Support edge of the continuous part.
    pub fn edge(&self) -> f64 {
        2.0 * self.scale
    }

    /// Density of the absolutely continuous part at `x`, `|x| < edge`.
    pub fn density(&self, x: f64) -> Result<f64> {
        let u = x / self.scale;
        if u.is_nan() || u.abs() >= 2.0 {
            return Err(Error::InvalidParameter(format!(
                "density is defined on the open band, got {x}"
            )));
        }
        let t = (u / 2.0).acos();
        let w = (4.0 - u * u).sqrt() * self.rescale_sq / (2.0 * PI * abs_sq_on_circle(&self.jost, t));
        Ok(w / self.scale)
    }

    /// Continuous mass by the midpoint rule in `x = 2 cos t`.
    pub fn continuous_mass(&self) -> f64 {
        let h = PI / MASS_NODES as f64;
        (0..MASS_NODES)
            .map(|i| {
                let t = (i as f64 + 0.5) * h;
                2.0 * t.sin().powi(2) * self.rescale_sq / (PI * abs_sq_on_circle(&self.jost, t))
            })
            .sum::<f64>()
            * h
    }

    pub fn discrete_mass(&self) -> f64 {
        self.point_masses.iter().map(|p| p.mass).sum()
    }

    pub fn total_mass(&self) -> f64 {
        self.continuous_mass() + self.discrete_mass()
    }

    /// Image under `x -> sqrt(scale_sq) x`.
    pub fn scaled(mut self, scale_sq: f64) -> Self {
        let s = scale_sq.sqrt();
        self.scale *= s;
        for p in &mut self.point_masses {
            p.location *= s;
        }
        self
    }
}

pub fn spectral_measure<S: Scalar>(j: &FiniteRankJacobi<S>) -> Result<SpectralMeasure> {
    let jr = jost_roots(j)?;
    let jost = jr.jost.poly.to_f64();
    let rescale_sq = jr.jost.rescale_sq.to_f64();
    let deriv = jost.derivative();
    let point_masses = jr
        .roots
        .iter()
        .zip(&jr.eigenvalues)
        .map(|(r, &location)| {
            let z = r.value;
            let k = 1.0 - 1.0 / (z * z);
            let mass = rescale_sq * z * k * k / (deriv.eval(&z) * jost.eval(&(1.0 / z)));
            PointMass { location, mass }
        })
        .collect();
    Ok(SpectralMeasure {
        jost,
        rescale_sq,
        scale: 1.0,
        point_masses,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn free_measure_is_semicircle() {
        let m = spectral_measure(&FiniteRankJacobi::<f64>::free()).unwrap();
        assert!(m.point_masses.is_empty());
        assert!((m.density(0.0).unwrap() - 1.0 / PI).abs() < 1e-15);
        assert!((m.total_mass() - 1.0).abs() < 1e-12);
        assert!(m.density(2.0).is_err());
    }

    #[test]
    fn rank_one_point_mass() {
        let j = FiniteRankJacobi::from_i64(&[2], &[]).unwrap();
        let m = spectral_measure(&j).unwrap();
        assert_eq!(m.point_masses.len(), 1);
        assert!((m.point_masses[0].mass - 0.75).abs() < 1e-14);
        assert!((m.total_mass() - 1.0).abs() < 1e-10);
    }

    #[test]
    fn scaling_preserves_mass() {
        let j = FiniteRankJacobi::from_i64(&[0, 1], &[3]).unwrap();
        let m = spectral_measure(&j).unwrap().scaled(4.0);
        assert_eq!(m.edge(), 4.0);
        assert!((m.total_mass() - 1.0).abs() < 1e-10);
        let h = 8.0 / 4000.0;
        let riemann: f64 = (0..4000).map(|i| m.density(-4.0 + (i as f64 + 0.5) * h).unwrap()).sum::<f64>() * h;
        assert!((riemann - m.continuous_mass()).abs() < 1e-3);
    }
}
