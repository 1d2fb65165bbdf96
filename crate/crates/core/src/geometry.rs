//! Measurement geometry: the circle, its arc partition, the reference point
//! sources and the wavenumber parameter policy.

use serde::{Deserialize, Serialize};
use std::f64::consts::PI;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeometryError {
    #[error("paper policy requires m >= 10 and tau >= 6, got m = {m}, tau = {tau}")]
    PolicyParams { m: usize, tau: f64 },
    #[error("wavenumber {k} is not admissible: must be k* = pi/(30a) or >= pi/a")]
    InadmissibleWavenumber { k: f64 },
    #[error("k* = {k} violates k*R = {kr} < 1")]
    KStarTooLarge { k: f64, kr: f64 },
    #[error(
        "lambda policy violation at arc {j}, ell {ell}, k = {k}: |lambda| = {lambda} \
         outside [sqrt(2) a / R, 1)"
    )]
    LambdaOutOfBand { j: usize, ell: usize, k: f64, lambda: f64 },
    #[error("geometry requires a > 0, m >= 1 and n_per_arc >= 2")]
    InvalidConfig,
}

/// A wavenumber together with the flag marking the small wavenumber k*.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Wavenumber {
    pub k: f64,
    pub is_small: bool,
}

impl Wavenumber {
    pub fn regular(k: f64) -> Self {
        Self { k, is_small: false }
    }

    /// The small wavenumber k* = pi / (30 a).
    pub fn small(a: f64) -> Self {
        Self {
            k: PI / (30.0 * a),
            is_small: true,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PolicyMode {
    /// Enforce the parameter policy (m >= 10, tau >= 6, admissible k).
    Paper,
    /// Arbitrary parameters; violations are recorded as warnings and the
    /// retrieval layer refuses such geometries unless forced.
    Free,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GeometryConfig {
    /// Half-width of the source square.
    pub a: f64,
    /// R / a.
    pub tau: f64,
    /// Number of arcs.
    pub m: usize,
    /// Measurement points per arc.
    pub n_per_arc: usize,
    pub wavenumbers: Vec<Wavenumber>,
    pub policy: PolicyMode,
}

impl GeometryConfig {
    pub fn validate(&self) -> Result<Vec<String>, GeometryError> {
        if !(self.a > 0.0) || self.m == 0 || self.n_per_arc < 2 {
            return Err(GeometryError::InvalidConfig);
        }
        let mut warnings = Vec::new();
        let strict = self.policy == PolicyMode::Paper;
        if self.m < 10 || self.tau < 6.0 {
            if strict {
                return Err(GeometryError::PolicyParams {
                    m: self.m,
                    tau: self.tau,
                });
            }
            warnings.push(format!(
                "free mode: m = {}, tau = {} outside the policy band",
                self.m, self.tau
            ));
        }
        for w in &self.wavenumbers {
            if w.is_small {
                let r = 6.0 * self.a;
                if w.k * r >= 1.0 {
                    return Err(GeometryError::KStarTooLarge { k: w.k, kr: w.k * r });
                }
            } else if w.k < PI / self.a * (1.0 - 1e-12) {
                if strict {
                    return Err(GeometryError::InadmissibleWavenumber { k: w.k });
                }
                warnings.push(format!("free mode: wavenumber {} below pi/a", w.k));
            }
        }
        Ok(warnings)
    }
}

/// One measurement point, in the global arc-major ordering.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MeasPoint {
    /// Arc index, 0-based.
    pub arc: usize,
    pub theta: f64,
    pub xy: [f64; 2],
}

/// Geometry instantiated for one wavenumber. Immutable after construction.
#[derive(Debug, Clone, PartialEq)]
pub struct Geometry {
    pub a: f64,
    pub tau: f64,
    pub m: usize,
    pub n_per_arc: usize,
    pub k: Wavenumber,
    /// Circle radius R.
    pub radius: f64,
    /// Per arc `[nu_{2j-2}, nu_{2j}]`.
    pub arcs: Vec<[f64; 2]>,
    /// Per arc `[lambda_{j,1}, lambda_{j,2}]`.
    pub lambdas: Vec<[f64; 2]>,
    /// Per arc the two reference points `z_{j,ell}`.
    pub ref_points: Vec<[[f64; 2]; 2]>,
    /// All measurement points, arc-major, `n_per_arc` per arc.
    pub points: Vec<MeasPoint>,
    pub policy: PolicyMode,
    pub warnings: Vec<String>,
}

/// Builds the geometry for one wavenumber under the parameter policy:
/// lambda_{j,1} = 1/2 always; for k != k*, R = tau a and
/// lambda_{j,2} = 1/2 + pi/(2kR); for k = k*, R = 6a and lambda_{j,2} = -3/2.
///
/// Measurement points are uniform in angle on each half-open arc (left
/// endpoint included, right excluded), so the m arcs contribute exactly
/// `m * n_per_arc` distinct points.
pub fn build_geometry(cfg: &GeometryConfig, k: Wavenumber) -> Result<Geometry, GeometryError> {
    let mut warnings = cfg.validate()?;
    let (radius, lambda2) = if k.is_small {
        (6.0 * cfg.a, -1.5)
    } else {
        let r = cfg.tau * cfg.a;
        (r, 0.5 + PI / (2.0 * k.k * r))
    };
    let lambda1 = 0.5;

    // |lambda| must lie in [sqrt(2) a / R, 1); the k* branch's
    // lambda_{j,2} = -3/2 is the policy's own documented exception.
    let lo = std::f64::consts::SQRT_2 * cfg.a / radius;
    for (ell, lam) in [lambda1, lambda2].into_iter().enumerate() {
        let exempt = k.is_small && ell == 1;
        if !exempt && !(lam.abs() >= lo && lam.abs() < 1.0) {
            if cfg.policy == PolicyMode::Paper {
                return Err(GeometryError::LambdaOutOfBand {
                    j: 1,
                    ell: ell + 1,
                    k: k.k,
                    lambda: lam,
                });
            }
            warnings.push(format!(
                "free mode: lambda_{{j,{}}} = {lam} outside [{lo}, 1) at k = {}",
                ell + 1,
                k.k
            ));
        }
    }

    let m = cfg.m;
    let arc_span = 2.0 * PI / m as f64;
    let mut arcs = Vec::with_capacity(m);
    let mut lambdas = Vec::with_capacity(m);
    let mut ref_points = Vec::with_capacity(m);
    let mut points = Vec::with_capacity(m * cfg.n_per_arc);
    for j in 0..m {
        let nu_lo = 2.0 * j as f64 * PI / m as f64;
        let nu_mid = (2.0 * j as f64 + 1.0) * PI / m as f64;
        arcs.push([nu_lo, nu_lo + arc_span]);
        lambdas.push([lambda1, lambda2]);
        let (s, c) = nu_mid.sin_cos();
        ref_points.push([
            [lambda1 * radius * c, lambda1 * radius * s],
            [lambda2 * radius * c, lambda2 * radius * s],
        ]);
        for i in 0..cfg.n_per_arc {
            let theta = nu_lo + i as f64 * arc_span / cfg.n_per_arc as f64;
            let (st, ct) = theta.sin_cos();
            points.push(MeasPoint {
                arc: j,
                theta,
                xy: [radius * ct, radius * st],
            });
        }
    }

    Ok(Geometry {
        a: cfg.a,
        tau: cfg.tau,
        m,
        n_per_arc: cfg.n_per_arc,
        k,
        radius,
        arcs,
        lambdas,
        ref_points,
        points,
        policy: cfg.policy,
        warnings,
    })
}

impl Geometry {
    pub fn n_points(&self) -> usize {
        self.points.len()
    }

    /// Angle of the arc midpoint `nu_{2j-1}` (0-based arc index).
    pub fn arc_mid(&self, j: usize) -> f64 {
        (2.0 * j as f64 + 1.0) * PI / self.m as f64
    }

    /// Distance from the circle point at angle `theta` on arc `j` to the
    /// reference point `z_{j,ell}` (`ell` 0-based), evaluated in the radial
    /// closed form `R sqrt(1 + lambda^2 - 2 lambda cos(theta - nu_{2j-1}))`.
    pub fn r_distance(&self, j: usize, ell: usize, theta: f64) -> f64 {
        let lam = self.lambdas[j][ell];
        let d = theta - self.arc_mid(j);
        self.radius * (1.0 + lam * lam - 2.0 * lam * d.cos()).sqrt()
    }

    /// Serializes the geometry provenance record.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "a": self.a,
            "tau": self.tau,
            "m": self.m,
            "n_per_arc": self.n_per_arc,
            "R": self.radius,
            "lambdas": self.lambdas,
            "ref_points": self.ref_points,
            "arcs": self.arcs,
        })
    }
}
