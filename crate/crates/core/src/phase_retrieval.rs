//! Phase retrieval with reference point sources.
//!
//! At each measurement point x on arc j the phaseless statistics of u and of
//! the two reference-augmented fields v_{j,1}, v_{j,2} feed two linear
//! systems: a 2x2 system for E(Re u), E(Im u) and a 3x3 system for
//! Var(Re u), Var(Im u), Cov(Re u, Im u). Both are solved in Cramér closed
//! form; the coefficient matrices satisfy det D = (det A)^3, which doubles as
//! a free structural diagnostic.
//!
//! The matrix entries depend on the point x through the distances r_{j,ℓ},
//! so the systems are built and solved independently at every point.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::forward::{ScalingFactors, StatsBundle};
use crate::geometry::{Geometry, MeasPoint, PolicyMode, Wavenumber};
use crate::specfun;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum PrError {
    #[error("reference field sup-norm vanishes on arc {arc}, ell {ell}")]
    ZeroScalingDenominator { arc: usize, ell: usize },
    #[error("scaling factor c <= 0 on arc {arc}: retrieval refuses degenerate scaling")]
    DegenerateScaling { arc: usize },
    #[error("singular system on arc {arc}, k = {k}: |det| = {det:e} below threshold {threshold:e}")]
    SingularSystem {
        arc: usize,
        k: f64,
        det: f64,
        threshold: f64,
    },
    #[error("free-mode geometry refused; pass allow_free to override")]
    FreeGeometryRefused,
    #[error("bundle was built for k = {bundle_k}, geometry for k = {geom_k}")]
    WavenumberMismatch { bundle_k: f64, geom_k: f64 },
    #[error("bundle has {got} points, geometry {expect}")]
    PointCountMismatch { got: usize, expect: usize },
    #[error("every arc failed to solve")]
    AllArcsFailed,
    #[error("truth has zero norm")]
    ZeroNormTruth,
    #[error("retrieved and truth differ in length: {got} vs {expect}")]
    LengthMismatch { got: usize, expect: usize },
}

/// Scaling-factor policy for the reference sources.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ScalingMode {
    /// c = 1 everywhere; the default for quantitative runs.
    Unit,
    /// c = sup |E(u)| / sup |G_k(., z)| over the arc's measurement points.
    Paper,
}

/// Which phaseless combination feeds the expectation right-hand side.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RhsMode {
    /// f from E(|v|^2) - E(|u|^2).
    SecondMoment,
    /// f from |E(v)|^2 - |E(u)|^2; equal to `SecondMoment` on exact
    /// statistics, different under multiplicative measurement noise.
    FirstMoment,
}

#[derive(Debug, Clone, Copy)]
pub struct PrOptions {
    pub scaling: ScalingMode,
    pub rhs: RhsMode,
    pub allow_free: bool,
}

impl Default for PrOptions {
    fn default() -> Self {
        Self {
            scaling: ScalingMode::Unit,
            rhs: RhsMode::SecondMoment,
            allow_free: false,
        }
    }
}

/// 2x2 coefficient matrix of the expectation system at one point:
/// rows (Y0(k r_ℓ), -J0(k r_ℓ)).
pub fn expectation_matrix(y1: f64, j1: f64, y2: f64, j2: f64) -> [[f64; 2]; 2] {
    [[y1, -j1], [y2, -j2]]
}

/// 3x3 coefficient matrix of the variance/covariance system at one point.
pub fn variance_matrix(y1: f64, j1: f64, y2: f64, j2: f64) -> [[f64; 3]; 3] {
    [
        [y1 * y1, j1 * j1, -2.0 * y1 * j1],
        [y2 * y2, j2 * j2, -2.0 * y2 * j2],
        [y1 * y2, j1 * j2, -(y1 * j2 + y2 * j1)],
    ]
}

pub fn det2(m: &[[f64; 2]; 2]) -> f64 {
    m[0][0] * m[1][1] - m[0][1] * m[1][0]
}

pub fn det3(m: &[[f64; 3]; 3]) -> f64 {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

/// Both retrieval systems assembled at one measurement point.
#[derive(Debug, Clone, PartialEq)]
pub struct RetrievalSystem {
    pub a: [[f64; 2]; 2],
    pub d: [[f64; 3]; 3],
    pub det_a: f64,
    pub det_d: f64,
}

impl RetrievalSystem {
    /// Builds A and D from the Bessel factors at the point's two reference
    /// distances.
    pub fn at_point(geom: &Geometry, arc: usize, theta: f64) -> Self {
        let k = geom.k.k;
        let (j1, y1) = specfun::j0y0_raw(k * geom.r_distance(arc, 0, theta));
        let (j2, y2) = specfun::j0y0_raw(k * geom.r_distance(arc, 1, theta));
        Self::from_factors(y1, j1, y2, j2)
    }

    pub fn from_factors(y1: f64, j1: f64, y2: f64, j2: f64) -> Self {
        let a = expectation_matrix(y1, j1, y2, j2);
        let d = variance_matrix(y1, j1, y2, j2);
        Self {
            a,
            d,
            det_a: det2(&a),
            det_d: det3(&d),
        }
    }
}

/// Theorem floor on |det A| under the parameter policy: M/(kR) with
/// M = (20 tau - 7)/(20 tau) for regular wavenumbers, 4/9 at k*.
pub fn det_floor(geom: &Geometry) -> f64 {
    if geom.k.is_small {
        4.0 / 9.0
    } else {
        let m = (20.0 * geom.tau - 7.0) / (20.0 * geom.tau);
        m / (geom.k.k * geom.radius)
    }
}

/// Safety factor applied to the theorem floor before declaring a system
/// singular; tolerates floating error while still catching mis-built
/// geometry.
pub const SINGULARITY_SAFETY: f64 = 1e-3;

/// Scaling factors per arc. `Paper` mode takes the ratio of the sup of
/// |E(u)| over the arc's measurement points to the sup of |G_k(., z_ℓ)|.
pub fn scaling_factors(
    stats: &StatsBundle,
    geom: &Geometry,
    mode: ScalingMode,
) -> Result<ScalingFactors, PrError> {
    match mode {
        ScalingMode::Unit => Ok(ScalingFactors::unit(geom.m)),
        ScalingMode::Paper => {
            let mut per_arc = vec![[0.0; 2]; geom.m];
            for arc in 0..geom.m {
                let idx = arc * geom.n_per_arc..(arc + 1) * geom.n_per_arc;
                let sup_e = idx
                    .clone()
                    .map(|p| stats.stats[p].abs_e_u)
                    .fold(0.0_f64, f64::max);
                for ell in 0..2 {
                    let z = geom.ref_points[arc][ell];
                    let sup_g = idx
                        .clone()
                        .map(|p| {
                            specfun::green(geom.k.k, geom.points[p].xy, z)
                                .map(|g| g.norm())
                                .unwrap_or(f64::NAN)
                        })
                        .fold(0.0_f64, f64::max);
                    if !(sup_g > 0.0) {
                        return Err(PrError::ZeroScalingDenominator { arc, ell });
                    }
                    per_arc[arc][ell] = sup_e / sup_g;
                }
            }
            Ok(ScalingFactors { per_arc })
        }
    }
}

fn check_compat(stats: &StatsBundle, geom: &Geometry) -> Result<(), PrError> {
    if stats.k.k != geom.k.k {
        return Err(PrError::WavenumberMismatch {
            bundle_k: stats.k.k,
            geom_k: geom.k.k,
        });
    }
    if stats.points.len() != geom.n_points() {
        return Err(PrError::PointCountMismatch {
            got: stats.points.len(),
            expect: geom.n_points(),
        });
    }
    Ok(())
}

fn rhs_expectation_point(
    stats: &StatsBundle,
    c: &ScalingFactors,
    geom: &Geometry,
    p: usize,
    mode: RhsMode,
) -> Result<[f64; 2], PrError> {
    let pt = &stats.points[p];
    let ps = &stats.stats[p];
    let mut f = [0.0; 2];
    for ell in 0..2 {
        let cl = c.per_arc[pt.arc][ell];
        if !(cl > 0.0) {
            return Err(PrError::DegenerateScaling { arc: pt.arc });
        }
        let t = geom.k.k * geom.r_distance(pt.arc, ell, pt.theta);
        let (j0, y0) = specfun::j0y0_raw(t);
        let h_sq = j0 * j0 + y0 * y0;
        let diff = match mode {
            RhsMode::SecondMoment => ps.e_abs_v_sq[ell] - ps.e_abs_u_sq,
            RhsMode::FirstMoment => {
                ps.abs_e_v[ell] * ps.abs_e_v[ell] - ps.abs_e_u * ps.abs_e_u
            }
        };
        f[ell] = 2.0 / cl * diff - cl / 8.0 * h_sq;
    }
    Ok(f)
}

/// Right-hand sides f_{j,ℓ,k} of the expectation system, one pair per point.
pub fn rhs_expectation(
    stats: &StatsBundle,
    c: &ScalingFactors,
    geom: &Geometry,
    mode: RhsMode,
) -> Result<Vec<[f64; 2]>, PrError> {
    check_compat(stats, geom)?;
    (0..stats.points.len())
        .map(|p| rhs_expectation_point(stats, c, geom, p, mode))
        .collect()
}

fn rhs_variance_point(
    stats: &StatsBundle,
    c: &ScalingFactors,
    p: usize,
) -> Result<[f64; 3], PrError> {
    let pt = &stats.points[p];
    let ps = &stats.stats[p];
    let [c1, c2] = c.per_arc[pt.arc];
    if !(c1 > 0.0 && c2 > 0.0) {
        return Err(PrError::DegenerateScaling { arc: pt.arc });
    }
    // Diagonal entries use Var(|v_ℓ|^2) as the first covariance.
    let f11 = 4.0 / (c1 * c1)
        * (ps.var_abs_v_sq[0] - 2.0 * ps.cov_u_v[0] + ps.var_abs_u_sq);
    let f22 = 4.0 / (c2 * c2)
        * (ps.var_abs_v_sq[1] - 2.0 * ps.cov_u_v[1] + ps.var_abs_u_sq);
    let f12 = 4.0 / (c1 * c2)
        * (ps.cov_v1_v2 - ps.cov_u_v[0] - ps.cov_u_v[1] + ps.var_abs_u_sq);
    Ok([f11, f22, f12])
}

/// Right-hand sides F_{j,k,ℓ1,ℓ2} of the variance system for
/// (1,1), (2,2), (1,2), one triple per point.
pub fn rhs_variance(
    stats: &StatsBundle,
    c: &ScalingFactors,
    geom: &Geometry,
) -> Result<Vec<[f64; 3]>, PrError> {
    check_compat(stats, geom)?;
    (0..stats.points.len())
        .map(|p| rhs_variance_point(stats, c, p))
        .collect()
}

/// Monte Carlo standard errors of the expectation-channel data f_{j,ℓ,k}.
///
/// With unit scaling, f is 2 mean(q_ℓ) - const for the per-sample functional
/// q_ℓ = |v_ℓ|^2 - |u|^2, so Var(f̂) = 4 Var(q_ℓ)/n with
/// Var(q_ℓ) = Var(|v_ℓ|^2) + Var(|u|^2) - 2 Cov(|u|^2, |v_ℓ|^2) — phaseless
/// statistics the bundle already carries. Synthetic bundles (n = 0) report
/// zero error.
pub fn data_se_expectation(stats: &StatsBundle, ell: usize) -> Vec<f64> {
    if stats.n_samples == 0 {
        return vec![0.0; stats.stats.len()];
    }
    let n = stats.n_samples as f64;
    stats
        .stats
        .iter()
        .map(|ps| {
            let var_q =
                (ps.var_abs_v_sq[ell] + ps.var_abs_u_sq - 2.0 * ps.cov_u_v[ell]).max(0.0);
            (4.0 * var_q / n).sqrt()
        })
        .collect()
}

/// Monte Carlo standard errors of the variance-channel data F_{j,k,ℓ1,ℓ2}
/// (pair index 0 for (1,1), 1 for (2,2), 2 for (1,2)).
///
/// F is 4 SampleCov(q_ℓ1, q_ℓ2); for Gaussian fields
/// Var(Cov-hat) ~ (Var(q_1) Var(q_2) + Cov(q_1, q_2)^2)/n with
/// Cov(q_1, q_2) = F/4.
pub fn data_se_variance(stats: &StatsBundle, pair: usize) -> Vec<f64> {
    if stats.n_samples == 0 {
        return vec![0.0; stats.stats.len()];
    }
    let n = stats.n_samples as f64;
    stats
        .stats
        .iter()
        .map(|ps| {
            let var_q = |ell: usize| -> f64 {
                (ps.var_abs_v_sq[ell] + ps.var_abs_u_sq - 2.0 * ps.cov_u_v[ell]).max(0.0)
            };
            let (l1, l2) = [(0, 0), (1, 1), (0, 1)][pair];
            let cov_q = match pair {
                0 => var_q(0),
                1 => var_q(1),
                _ => ps.cov_v1_v2 - ps.cov_u_v[0] - ps.cov_u_v[1] + ps.var_abs_u_sq,
            };
            (16.0 * (var_q(l1) * var_q(l2) + cov_q * cov_q) / n).sqrt()
        })
        .collect()
}

/// Cramér solve of the 2x2 expectation system.
pub fn solve_expectation(
    sys: &RetrievalSystem,
    f: [f64; 2],
    arc: usize,
    k: f64,
    threshold: f64,
) -> Result<(f64, f64), PrError> {
    if sys.det_a.abs() < threshold {
        return Err(PrError::SingularSystem {
            arc,
            k,
            det: sys.det_a,
            threshold,
        });
    }
    let a = &sys.a;
    let e_re = (f[0] * a[1][1] - a[0][1] * f[1]) / sys.det_a;
    let e_im = (a[0][0] * f[1] - f[0] * a[1][0]) / sys.det_a;
    Ok((e_re, e_im))
}

/// Cramér solve of the 3x3 variance/covariance system.
pub fn solve_variance(
    sys: &RetrievalSystem,
    f: [f64; 3],
    arc: usize,
    k: f64,
    threshold: f64,
) -> Result<(f64, f64, f64), PrError> {
    if sys.det_d.abs() < threshold {
        return Err(PrError::SingularSystem {
            arc,
            k,
            det: sys.det_d,
            threshold,
        });
    }
    let mut out = [0.0; 3];
    for col in 0..3 {
        let mut dm = sys.d;
        for row in 0..3 {
            dm[row][col] = f[row];
        }
        out[col] = det3(&dm) / sys.det_d;
    }
    Ok((out[0], out[1], out[2]))
}

/// Recovered statistics at one measurement point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RetrievedPoint {
    pub e_re: f64,
    pub e_im: f64,
    pub var_re: f64,
    pub var_im: f64,
    pub cov_re_im: f64,
    pub det_a: f64,
    pub det_d: f64,
}

impl RetrievedPoint {
    /// Recovered Var(u) = Var(Re u) + Var(Im u).
    pub fn var_u(&self) -> f64 {
        self.var_re + self.var_im
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ArcFailure {
    pub arc: usize,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RetrievedStats {
    pub k: Wavenumber,
    pub m: usize,
    pub n_per_arc: usize,
    pub points: Vec<MeasPoint>,
    /// One entry per measurement point; `None` on failed arcs.
    pub rows: Vec<Option<RetrievedPoint>>,
    pub failures: Vec<ArcFailure>,
}

impl RetrievedStats {
    /// Truth-shaped container from per-point maps
    /// `(j, theta) -> (E_re, E_im, Var_re, Var_im, Cov)`, with determinant
    /// diagnostics left at zero.
    pub fn from_maps(
        geom: &Geometry,
        maps: impl Fn(usize, f64) -> (f64, f64, f64, f64, f64),
    ) -> Self {
        let rows = geom
            .points
            .iter()
            .map(|pt| {
                let (e_re, e_im, var_re, var_im, cov_re_im) = maps(pt.arc, pt.theta);
                Some(RetrievedPoint {
                    e_re,
                    e_im,
                    var_re,
                    var_im,
                    cov_re_im,
                    det_a: 0.0,
                    det_d: 0.0,
                })
            })
            .collect();
        Self {
            k: geom.k,
            m: geom.m,
            n_per_arc: geom.n_per_arc,
            points: geom.points.clone(),
            rows,
            failures: Vec::new(),
        }
    }
}

/// Executes the retrieval algorithm over every arc: scaling factors, both
/// right-hand sides, both Cramér solves. A solver error aborts its arc and
/// is recorded; the run succeeds if at least one arc succeeds.
pub fn run_pr(
    stats: &StatsBundle,
    geom: &Geometry,
    opts: PrOptions,
) -> Result<RetrievedStats, PrError> {
    check_compat(stats, geom)?;
    if geom.policy == PolicyMode::Free && !opts.allow_free {
        return Err(PrError::FreeGeometryRefused);
    }
    let c = scaling_factors(stats, geom, opts.scaling)?;
    let floor = det_floor(geom);
    let threshold_a = floor * SINGULARITY_SAFETY;
    let threshold_d = floor.powi(3) * SINGULARITY_SAFETY;

    let mut rows: Vec<Option<RetrievedPoint>> = vec![None; geom.n_points()];
    let mut failures = Vec::new();
    for arc in 0..geom.m {
        let span = arc * geom.n_per_arc..(arc + 1) * geom.n_per_arc;
        let solved: Result<Vec<RetrievedPoint>, PrError> = span
            .clone()
            .map(|p| {
                let pt = &stats.points[p];
                let sys = RetrievalSystem::at_point(geom, pt.arc, pt.theta);
                let f = rhs_expectation_point(stats, &c, geom, p, opts.rhs)?;
                let (e_re, e_im) =
                    solve_expectation(&sys, f, arc, geom.k.k, threshold_a)?;
                let big_f = rhs_variance_point(stats, &c, p)?;
                let (var_re, var_im, cov_re_im) =
                    solve_variance(&sys, big_f, arc, geom.k.k, threshold_d)?;
                Ok(RetrievedPoint {
                    e_re,
                    e_im,
                    var_re,
                    var_im,
                    cov_re_im,
                    det_a: sys.det_a,
                    det_d: sys.det_d,
                })
            })
            .collect();
        match solved {
            Ok(points) => {
                for (p, row) in span.zip(points) {
                    rows[p] = Some(row);
                }
            }
            Err(e) => failures.push(ArcFailure {
                arc,
                reason: e.to_string(),
            }),
        }
    }
    if rows.iter().all(Option::is_none) {
        return Err(PrError::AllArcsFailed);
    }
    Ok(RetrievedStats {
        k: stats.k,
        m: geom.m,
        n_per_arc: geom.n_per_arc,
        points: stats.points.clone(),
        rows,
        failures,
    })
}

/// Global discrete relative L2 errors of the retrieved mean and variance
/// against truth, summed over all arcs and measurement points:
/// sqrt(sum |E - E^t|^2) / sqrt(sum |E^t|^2) and the same for
/// Var(u) = Var(Re u) + Var(Im u).
pub fn relative_errors(
    retrieved: &RetrievedStats,
    truth: &RetrievedStats,
) -> Result<(f64, f64), PrError> {
    if retrieved.rows.len() != truth.rows.len() {
        return Err(PrError::LengthMismatch {
            got: retrieved.rows.len(),
            expect: truth.rows.len(),
        });
    }
    let mut num_e = 0.0;
    let mut den_e = 0.0;
    let mut num_v = 0.0;
    let mut den_v = 0.0;
    for (r, t) in retrieved.rows.iter().zip(&truth.rows) {
        let (Some(r), Some(t)) = (r, t) else { continue };
        let dre = r.e_re - t.e_re;
        let dim = r.e_im - t.e_im;
        num_e += dre * dre + dim * dim;
        den_e += t.e_re * t.e_re + t.e_im * t.e_im;
        let dv = r.var_u() - t.var_u();
        num_v += dv * dv;
        den_v += t.var_u() * t.var_u();
    }
    if den_e == 0.0 || den_v == 0.0 {
        return Err(PrError::ZeroNormTruth);
    }
    Ok(((num_e / den_e).sqrt(), (num_v / den_v).sqrt()))
}
