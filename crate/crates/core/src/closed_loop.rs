//! Exact-synthetic statistics bundles.
//!
//! Given ground-truth per-point moment maps, every phaseless statistic the
//! retrieval layer consumes is produced by forward evaluation of the
//! identities that relate |v|^2 = |u + w|^2 to the moments of u (with
//! w = c G_k(., z) deterministic). Running the retrieval on such a bundle is
//! the primary Monte-Carlo-free correctness oracle: the five recovered maps
//! must match the inputs to solver precision.

use num_complex::Complex64;

use crate::forward::{PointStats, ScalingFactors, StatsBundle};
use crate::fredholm;
use crate::geometry::Geometry;
use crate::grid::SourceField;
use crate::phase_retrieval::RetrievedStats;
use crate::specfun;

/// Ground-truth first and second moments of the field at one point, plus the
/// three nuisance moments of the |u|^2 stream that the variance right-hand
/// sides consume.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PointMoments {
    pub e_re: f64,
    pub e_im: f64,
    pub var_re: f64,
    pub var_im: f64,
    pub cov_re_im: f64,
    /// Var(|u|^2).
    pub var_abs_u_sq: f64,
    /// Cov(|u|^2, Re u).
    pub cov_x_re: f64,
    /// Cov(|u|^2, Im u).
    pub cov_x_im: f64,
}

impl PointMoments {
    /// Closes the |u|^2 moments under the Gaussian law of the mild solution:
    /// for u = mu + zeta with (Re zeta, Im zeta) centered jointly Gaussian,
    ///   Cov(|u|^2, Re u) = 2 (mu_r v_r + mu_i c),
    ///   Cov(|u|^2, Im u) = 2 (mu_i v_i + mu_r c),
    ///   Var(|u|^2) = 4 (mu_r^2 v_r + mu_i^2 v_i + 2 mu_r mu_i c)
    ///              + 2 (v_r^2 + v_i^2 + 2 c^2).
    pub fn gaussian(e_re: f64, e_im: f64, var_re: f64, var_im: f64, cov_re_im: f64) -> Self {
        let (mr, mi, vr, vi, c) = (e_re, e_im, var_re, var_im, cov_re_im);
        Self {
            e_re,
            e_im,
            var_re,
            var_im,
            cov_re_im,
            var_abs_u_sq: 4.0 * (mr * mr * vr + mi * mi * vi + 2.0 * mr * mi * c)
                + 2.0 * (vr * vr + vi * vi + 2.0 * c * c),
            cov_x_re: 2.0 * (mr * vr + mi * c),
            cov_x_im: 2.0 * (mi * vi + mr * c),
        }
    }
}

/// Builds the exact bundle implied by the moment maps under scaling factors
/// `c`. `n_samples` is zero to mark the synthetic provenance.
pub fn synthetic_bundle(
    geom: &Geometry,
    c: &ScalingFactors,
    moments: impl Fn(usize, f64) -> PointMoments,
) -> StatsBundle {
    let k = geom.k.k;
    let stats = geom
        .points
        .iter()
        .map(|pt| {
            let mm = moments(pt.arc, pt.theta);
            let e_u = Complex64::new(mm.e_re, mm.e_im);
            let var_u = mm.var_re + mm.var_im;
            let e_abs_u_sq = e_u.norm_sqr() + var_u;

            // w_l = c_l G(x, z_l); |v|^2 = |u|^2 + alpha Re u + beta Im u + |w|^2
            // with alpha = 2 w_re = (c/2) Y0(kr), beta = 2 w_im = -(c/2) J0(kr).
            let mut w = [Complex64::default(); 2];
            let mut e_abs_v_sq = [0.0; 2];
            let mut abs_e_v = [0.0; 2];
            let mut var_abs_v_sq = [0.0; 2];
            let mut cov_u_v = [0.0; 2];
            let mut alpha = [0.0; 2];
            let mut beta = [0.0; 2];
            for ell in 0..2 {
                let z = geom.ref_points[pt.arc][ell];
                w[ell] = c.per_arc[pt.arc][ell] * specfun::green(k, pt.xy, z).unwrap();
                let e_v = e_u + w[ell];
                abs_e_v[ell] = e_v.norm();
                e_abs_v_sq[ell] = e_v.norm_sqr() + var_u;
                alpha[ell] = 2.0 * w[ell].re;
                beta[ell] = 2.0 * w[ell].im;
                cov_u_v[ell] =
                    mm.var_abs_u_sq + alpha[ell] * mm.cov_x_re + beta[ell] * mm.cov_x_im;
                var_abs_v_sq[ell] = mm.var_abs_u_sq
                    + alpha[ell] * alpha[ell] * mm.var_re
                    + beta[ell] * beta[ell] * mm.var_im
                    + 2.0 * alpha[ell] * mm.cov_x_re
                    + 2.0 * beta[ell] * mm.cov_x_im
                    + 2.0 * alpha[ell] * beta[ell] * mm.cov_re_im;
            }
            let cov_v1_v2 = mm.var_abs_u_sq
                + (alpha[0] + alpha[1]) * mm.cov_x_re
                + (beta[0] + beta[1]) * mm.cov_x_im
                + alpha[0] * alpha[1] * mm.var_re
                + beta[0] * beta[1] * mm.var_im
                + (alpha[0] * beta[1] + alpha[1] * beta[0]) * mm.cov_re_im;

            PointStats {
                e_u: [mm.e_re, mm.e_im],
                abs_e_u: e_u.norm(),
                e_abs_u_sq,
                var_abs_u_sq: mm.var_abs_u_sq,
                e_abs_v_sq,
                var_abs_v_sq,
                cov_u_v,
                cov_v1_v2,
                abs_e_v,
                var_re_u: mm.var_re,
                var_im_u: mm.var_im,
                cov_re_im_u: mm.cov_re_im,
            }
        })
        .collect();
    StatsBundle {
        k: geom.k,
        m: geom.m,
        n_per_arc: geom.n_per_arc,
        points: geom.points.clone(),
        n_samples: 0,
        stats,
    }
}

/// Ground-truth moment maps from source fields via the Fredholm kernels:
/// E(u) from the mean rows applied to g, the second moments from the raw
/// variance rows applied to sigma^2, and the |u|^2 moments by Gaussian
/// closure.
pub fn moments_from_sources(
    g: &SourceField,
    sigma_sq: &SourceField,
    geom: &Geometry,
) -> Result<Vec<PointMoments>, fredholm::FredholmError> {
    let k = geom.k.k;
    let grid = &g.grid;
    geom.points
        .iter()
        .map(|pt| {
            let (re_row, im_row) = fredholm::kernel_row_mean(grid, pt.xy, k)?;
            let dot = |row: &[f64], f: &SourceField| -> f64 {
                row.iter().zip(f.values()).map(|(a, b)| a * b).sum()
            };
            let e_re = dot(&re_row, g);
            let e_im = dot(&im_row, g);
            let (re2, im2, cross) = fredholm::kernel_rows_variance(grid, pt.xy, k)?;
            let var_re = dot(&re2, sigma_sq);
            let var_im = dot(&im2, sigma_sq);
            let cov = dot(&cross, sigma_sq);
            Ok(PointMoments::gaussian(e_re, e_im, var_re, var_im, cov))
        })
        .collect()
}

/// Exact bundle for given source fields (Gaussian closure).
pub fn bundle_from_sources(
    g: &SourceField,
    sigma_sq: &SourceField,
    geom: &Geometry,
    c: &ScalingFactors,
) -> Result<StatsBundle, fredholm::FredholmError> {
    let moments = moments_from_sources(g, sigma_sq, geom)?;
    Ok(synthetic_bundle(geom, c, |arc, theta| {
        // identify the point by (arc, theta) in the geometry's ordering
        let idx = geom
            .points
            .iter()
            .position(|p| p.arc == arc && p.theta == theta)
            .expect("moment map queried off the measurement grid");
        moments[idx]
    }))
}

/// Truth rows (mean and variance maps) for given sources, for error metrics.
pub fn truth_from_sources(
    g: &SourceField,
    sigma_sq: &SourceField,
    geom: &Geometry,
) -> Result<RetrievedStats, fredholm::FredholmError> {
    let moments = moments_from_sources(g, sigma_sq, geom)?;
    let mut truth = RetrievedStats::from_maps(geom, |_, _| (0.0, 0.0, 0.0, 0.0, 0.0));
    for (row, mm) in truth.rows.iter_mut().zip(moments) {
        let r = row.as_mut().unwrap();
        r.e_re = mm.e_re;
        r.e_im = mm.e_im;
        r.var_re = mm.var_re;
        r.var_im = mm.var_im;
        r.cov_re_im = mm.cov_re_im;
    }
    Ok(truth)
}
