//! Monte Carlo simulation of the mild solution
//! `u(x,k) = ∫ G_k(x,y) g(y) dy + ∫ G_k(x,y) σ(y) dW_y`,
//! the reference-augmented fields `v_{j,ℓ} = u + c_{j,ℓ,k} G_k(·, z_{j,ℓ})`,
//! and estimation of the phaseless statistics the retrieval layer consumes.

use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geometry::{Geometry, MeasPoint, Wavenumber};
use crate::grid::{GridError, GridSpec, SourceField};
use crate::rng::{stream_rng, DOMAIN_NOISE, DOMAIN_SIM};
use crate::specfun::{self, SpecFunError};

/// Fixed block length of the statistics reduction. Partial sums are always
/// accumulated per block and merged in block order, so serial and parallel
/// runs produce bit-identical bundles.
pub const STATS_BLOCK: usize = 256;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ForwardError {
    #[error("kernel value not finite at grid node {node}")]
    NonFiniteKernel { node: usize },
    #[error("noise array has {got} values, grid has {expect} nodes")]
    NoiseLength { got: usize, expect: usize },
    #[error("statistics need at least 2 samples, got {got}")]
    TooFewSamples { got: usize },
    #[error("mean and sigma fields must share one grid")]
    GridMismatch,
    #[error("sample has wrong point count: {got} vs geometry {expect}")]
    PointCountMismatch { got: usize, expect: usize },
    #[error(transparent)]
    Grid(#[from] GridError),
    #[error(transparent)]
    SpecFun(#[from] SpecFunError),
}

/// Scaling factors `c_{j,ℓ,k}`, one pair per arc.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScalingFactors {
    pub per_arc: Vec<[f64; 2]>,
}

impl ScalingFactors {
    pub fn unit(m: usize) -> Self {
        Self {
            per_arc: vec![[1.0, 1.0]; m],
        }
    }
}

/// Tensor trapezoid rule for `∫ field(y) kernel(y) dy` over the field's grid.
pub fn deterministic_integral(
    field: &SourceField,
    kernel: impl Fn([f64; 2]) -> Complex64,
) -> Result<Complex64, ForwardError> {
    let grid = &field.grid;
    let mut acc = Complex64::new(0.0, 0.0);
    for (n, w) in grid.weights().into_iter().enumerate() {
        let kv = kernel(grid.node_flat(n));
        if !kv.re.is_finite() || !kv.im.is_finite() {
            return Err(ForwardError::NonFiniteKernel { node: n });
        }
        acc += w * field.value_flat(n) * kv;
    }
    Ok(acc)
}

/// One white-noise realization: i.i.d. centered Gaussians with variance `dt`,
/// one value per grid node. A single array must drive every kernel
/// evaluation within one field sample.
pub fn draw_white_noise(grid: &GridSpec, dt: f64, rng: &mut impl Rng) -> Vec<f64> {
    let sd = dt.sqrt();
    (0..grid.n_nodes())
        .map(|_| sd * rng.sample::<f64, _>(StandardNormal))
        .collect()
}

/// Discrete stochastic integral `∫ field(y) kernel(y) dW_y` against the given
/// noise realization, with the same node weights as the deterministic rule.
pub fn stochastic_integral(
    field: &SourceField,
    kernel: impl Fn([f64; 2]) -> Complex64,
    noise: &[f64],
) -> Result<Complex64, ForwardError> {
    let grid = &field.grid;
    if noise.len() != grid.n_nodes() {
        return Err(ForwardError::NoiseLength {
            got: noise.len(),
            expect: grid.n_nodes(),
        });
    }
    let mut acc = Complex64::new(0.0, 0.0);
    for (n, w) in grid.weights().into_iter().enumerate() {
        let kv = kernel(grid.node_flat(n));
        if !kv.re.is_finite() || !kv.im.is_finite() {
            return Err(ForwardError::NonFiniteKernel { node: n });
        }
        acc += w * field.value_flat(n) * noise[n] * kv;
    }
    Ok(acc)
}

/// One realization of the radiated and reference-augmented fields at every
/// measurement point.
#[derive(Debug, Clone, PartialEq)]
pub struct FieldSample {
    pub u: Vec<Complex64>,
    /// `v_{j,ℓ}` restricted to each point's own arc, `ℓ = 1, 2`.
    pub v: [Vec<Complex64>; 2],
}

/// Precomputed kernels for repeated sampling of one `(sources, geometry, k)`
/// configuration. The Green's matrix is evaluated once; each sample is a
/// fresh white-noise draw pushed through it.
pub struct SamplerSetup {
    pub grid: GridSpec,
    pub k: Wavenumber,
    pub dt: f64,
    pub points: Vec<MeasPoint>,
    det_u: Vec<Complex64>,
    /// Row-major `n_points x n_nodes`: weight * sigma * Re G and Im G.
    stoch_re: Vec<f64>,
    stoch_im: Vec<f64>,
    /// `c_{j,ℓ,k} G_k(x_p, z_{j,ℓ})` per point, `ℓ = 1, 2`.
    shift: [Vec<Complex64>; 2],
}

impl SamplerSetup {
    pub fn new(
        g: &SourceField,
        sigma: &SourceField,
        geom: &Geometry,
        c: &ScalingFactors,
        dt: f64,
    ) -> Result<Self, ForwardError> {
        if g.grid != sigma.grid {
            return Err(ForwardError::GridMismatch);
        }
        let grid = g.grid;
        let nn = grid.n_nodes();
        let np = geom.n_points();
        let weights = grid.weights();
        let nodes = grid.nodes();
        let k = geom.k.k;

        let mut det_u = vec![Complex64::new(0.0, 0.0); np];
        let mut stoch_re = vec![0.0; np * nn];
        let mut stoch_im = vec![0.0; np * nn];
        let mut shift = [
            vec![Complex64::new(0.0, 0.0); np],
            vec![Complex64::new(0.0, 0.0); np],
        ];
        for (p, pt) in geom.points.iter().enumerate() {
            let row = p * nn;
            let mut acc = Complex64::new(0.0, 0.0);
            for n in 0..nn {
                let gr = specfun::green(k, pt.xy, nodes[n])?;
                acc += weights[n] * g.value_flat(n) * gr;
                let ws = weights[n] * sigma.value_flat(n);
                stoch_re[row + n] = ws * gr.re;
                stoch_im[row + n] = ws * gr.im;
            }
            det_u[p] = acc;
            for ell in 0..2 {
                let z = geom.ref_points[pt.arc][ell];
                shift[ell][p] = c.per_arc[pt.arc][ell] * specfun::green(k, pt.xy, z)?;
            }
        }
        Ok(Self {
            grid,
            k: geom.k,
            dt,
            points: geom.points.clone(),
            det_u,
            stoch_re,
            stoch_im,
            shift,
        })
    }

    pub fn n_points(&self) -> usize {
        self.points.len()
    }

    /// Field sample for a given white-noise realization.
    pub fn sample_with_noise(&self, noise: &[f64]) -> Result<FieldSample, ForwardError> {
        let nn = self.grid.n_nodes();
        if noise.len() != nn {
            return Err(ForwardError::NoiseLength {
                got: noise.len(),
                expect: nn,
            });
        }
        let np = self.n_points();
        let mut u = Vec::with_capacity(np);
        let mut v1 = Vec::with_capacity(np);
        let mut v2 = Vec::with_capacity(np);
        for p in 0..np {
            let row = &self.stoch_re[p * nn..(p + 1) * nn];
            let row_im = &self.stoch_im[p * nn..(p + 1) * nn];
            let mut sr = 0.0;
            let mut si = 0.0;
            for n in 0..nn {
                sr += row[n] * noise[n];
                si += row_im[n] * noise[n];
            }
            let up = self.det_u[p] + Complex64::new(sr, si);
            u.push(up);
            v1.push(up + self.shift[0][p]);
            v2.push(up + self.shift[1][p]);
        }
        Ok(FieldSample { u, v: [v1, v2] })
    }

    /// Draws one white-noise realization from `rng` and produces the sample.
    pub fn sample(&self, rng: &mut impl Rng) -> FieldSample {
        let noise = draw_white_noise(&self.grid, self.dt, rng);
        self.sample_with_noise(&noise).expect("noise length matches grid")
    }
}

/// Convenience one-shot sampler matching the per-operation contract; bulk
/// simulation goes through [`SamplerSetup`] + [`simulate_bundle`].
pub fn sample_field(
    g: &SourceField,
    sigma: &SourceField,
    geom: &Geometry,
    c: &ScalingFactors,
    dt: f64,
    rng: &mut impl Rng,
) -> Result<FieldSample, ForwardError> {
    Ok(SamplerSetup::new(g, sigma, geom, c, dt)?.sample(rng))
}

/// Phaseless statistics at one measurement point.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PointStats {
    /// Complex sample mean of u (diagnostic; never consumed by retrieval).
    pub e_u: [f64; 2],
    pub abs_e_u: f64,
    pub e_abs_u_sq: f64,
    pub var_abs_u_sq: f64,
    pub e_abs_v_sq: [f64; 2],
    pub var_abs_v_sq: [f64; 2],
    /// Cov(|u|^2, |v_ℓ|^2).
    pub cov_u_v: [f64; 2],
    pub cov_v1_v2: f64,
    pub abs_e_v: [f64; 2],
    /// Per-sample Re/Im second moments; kept for the decomposition and
    /// duality diagnostics, never perturbed, never consumed by retrieval.
    pub var_re_u: f64,
    pub var_im_u: f64,
    pub cov_re_im_u: f64,
}

/// Per-arc, per-wavenumber phaseless statistics over all measurement points.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StatsBundle {
    pub k: Wavenumber,
    pub m: usize,
    pub n_per_arc: usize,
    pub points: Vec<MeasPoint>,
    /// Zero marks an exact-synthetic bundle.
    pub n_samples: usize,
    pub stats: Vec<PointStats>,
}

#[derive(Clone)]
struct MomentSums {
    n: usize,
    s: Vec<[f64; 18]>,
}

impl MomentSums {
    fn new(n_points: usize) -> Self {
        Self {
            n: 0,
            s: vec![[0.0; 18]; n_points],
        }
    }

    fn add(&mut self, sample: &FieldSample) {
        for (p, acc) in self.s.iter_mut().enumerate() {
            let u = sample.u[p];
            let w1 = sample.v[0][p];
            let w2 = sample.v[1][p];
            let x = u.norm_sqr();
            let a1 = w1.norm_sqr();
            let a2 = w2.norm_sqr();
            acc[0] += u.re;
            acc[1] += u.im;
            acc[2] += w1.re;
            acc[3] += w1.im;
            acc[4] += w2.re;
            acc[5] += w2.im;
            acc[6] += x;
            acc[7] += a1;
            acc[8] += a2;
            acc[9] += u.re * u.re;
            acc[10] += u.im * u.im;
            acc[11] += u.re * u.im;
            acc[12] += x * x;
            acc[13] += a1 * a1;
            acc[14] += a2 * a2;
            acc[15] += x * a1;
            acc[16] += x * a2;
            acc[17] += a1 * a2;
        }
        self.n += 1;
    }

    fn merge(&mut self, other: &MomentSums) {
        for (a, b) in self.s.iter_mut().zip(&other.s) {
            for i in 0..18 {
                a[i] += b[i];
            }
        }
        self.n += other.n;
    }

    fn finalize(&self, geom_points: &[MeasPoint], k: Wavenumber, m: usize, n_per_arc: usize) -> StatsBundle {
        let n = self.n as f64;
        let cov = |sxy: f64, sx: f64, sy: f64| (sxy - sx * sy / n) / (n - 1.0);
        let stats = self
            .s
            .iter()
            .map(|a| {
                let e_u = [a[0] / n, a[1] / n];
                let e_v1 = [a[2] / n, a[3] / n];
                let e_v2 = [a[4] / n, a[5] / n];
                PointStats {
                    e_u,
                    abs_e_u: e_u[0].hypot(e_u[1]),
                    e_abs_u_sq: a[6] / n,
                    var_abs_u_sq: cov(a[12], a[6], a[6]),
                    e_abs_v_sq: [a[7] / n, a[8] / n],
                    var_abs_v_sq: [cov(a[13], a[7], a[7]), cov(a[14], a[8], a[8])],
                    cov_u_v: [cov(a[15], a[6], a[7]), cov(a[16], a[6], a[8])],
                    cov_v1_v2: cov(a[17], a[7], a[8]),
                    abs_e_v: [e_v1[0].hypot(e_v1[1]), e_v2[0].hypot(e_v2[1])],
                    var_re_u: cov(a[9], a[0], a[0]),
                    var_im_u: cov(a[10], a[1], a[1]),
                    cov_re_im_u: cov(a[11], a[0], a[1]),
                }
            })
            .collect();
        StatsBundle {
            k,
            m,
            n_per_arc,
            points: geom_points.to_vec(),
            n_samples: self.n,
            stats,
        }
    }
}

/// Sample means, variances and covariances (divisor n-1) of the phaseless
/// functionals over an explicit sample list.
pub fn estimate_statistics(
    geom: &Geometry,
    samples: &[FieldSample],
) -> Result<StatsBundle, ForwardError> {
    if samples.len() < 2 {
        return Err(ForwardError::TooFewSamples { got: samples.len() });
    }
    let np = geom.n_points();
    for s in samples {
        if s.u.len() != np {
            return Err(ForwardError::PointCountMismatch {
                got: s.u.len(),
                expect: np,
            });
        }
    }
    let mut total = MomentSums::new(np);
    for chunk in samples.chunks(STATS_BLOCK) {
        let mut block = MomentSums::new(np);
        for s in chunk {
            block.add(s);
        }
        total.merge(&block);
    }
    Ok(total.finalize(&geom.points, geom.k, geom.m, geom.n_per_arc))
}

/// Runs `n_mc` independent field samples and reduces them into a bundle.
/// Sample `i` always draws from substream `i` of `(seed, key)`, and partial
/// sums are merged per [`STATS_BLOCK`], so the result is bit-identical for
/// any rayon thread count.
pub fn simulate_bundle(
    setup: &SamplerSetup,
    geom: &Geometry,
    n_mc: usize,
    seed: u64,
    key: u64,
) -> Result<StatsBundle, ForwardError> {
    if n_mc < 2 {
        return Err(ForwardError::TooFewSamples { got: n_mc });
    }
    let np = setup.n_points();
    if np != geom.n_points() {
        return Err(ForwardError::PointCountMismatch {
            got: np,
            expect: geom.n_points(),
        });
    }
    let n_blocks = n_mc.div_ceil(STATS_BLOCK);
    let partials: Vec<MomentSums> = (0..n_blocks)
        .into_par_iter()
        .map(|b| {
            let mut acc = MomentSums::new(np);
            let lo = b * STATS_BLOCK;
            let hi = ((b + 1) * STATS_BLOCK).min(n_mc);
            for i in lo..hi {
                let mut rng = stream_rng(seed, DOMAIN_SIM, key, i as u64);
                let sample = setup.sample(&mut rng);
                acc.add(&sample);
            }
            acc
        })
        .collect();
    let mut total = MomentSums::new(np);
    for p in &partials {
        total.merge(p);
    }
    Ok(total.finalize(&geom.points, geom.k, geom.m, geom.n_per_arc))
}

/// Multiplicative measurement noise: every scalar phaseless statistic `s`
/// becomes `(1 + eps r) s` with an independent standard Gaussian `r` per
/// statistic per point. Internal phase data (the complex mean, the Re/Im
/// moment diagnostics) is never perturbed. Perturbed variances may go
/// negative; downstream consumers must tolerate that.
pub fn perturb(stats: &StatsBundle, epsilon: f64, rng: &mut impl Rng) -> StatsBundle {
    if epsilon == 0.0 {
        return stats.clone();
    }
    let mut out = stats.clone();
    for ps in &mut out.stats {
        let mut bump = |s: &mut f64| {
            let r: f64 = rng.sample(StandardNormal);
            *s *= 1.0 + epsilon * r;
        };
        bump(&mut ps.abs_e_u);
        bump(&mut ps.e_abs_u_sq);
        bump(&mut ps.var_abs_u_sq);
        for ell in 0..2 {
            bump(&mut ps.e_abs_v_sq[ell]);
            bump(&mut ps.var_abs_v_sq[ell]);
            bump(&mut ps.cov_u_v[ell]);
        }
        bump(&mut ps.cov_v1_v2);
        bump(&mut ps.abs_e_v[0]);
        bump(&mut ps.abs_e_v[1]);
    }
    out
}

/// Noise stream for perturbing the bundle of wavenumber index `k_idx` at
/// noise-level index `eps_idx`, draw `draw`.
pub fn noise_rng(seed: u64, k_idx: usize, eps_idx: usize, draw: usize) -> rand_chacha::ChaCha8Rng {
    stream_rng(
        seed,
        DOMAIN_NOISE,
        (k_idx as u64) << 32 | eps_idx as u64,
        draw as u64,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{build_geometry, GeometryConfig, PolicyMode};
    use crate::grid::FieldRole;
    use crate::rng::DOMAIN_TEST;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::PI;

    fn small_geom() -> Geometry {
        let cfg = GeometryConfig {
            a: 1.0,
            tau: 6.0,
            m: 10,
            n_per_arc: 3,
            wavenumbers: vec![],
            policy: PolicyMode::Paper,
        };
        build_geometry(&cfg, Wavenumber::regular(PI)).unwrap()
    }

    fn bump_field(grid: GridSpec, role: FieldRole) -> SourceField {
        SourceField::from_fn(grid, role, |y| {
            let r2 = y[0] * y[0] + y[1] * y[1];
            0.5 * (-3.0 * r2).exp() * (1.0 - y[0] * y[0]) * (1.0 - y[1] * y[1])
        })
        .unwrap()
    }

    #[test]
    fn deterministic_integral_constants() {
        let grid = GridSpec::new(1.0, 8, 8).unwrap();
        let zero = SourceField::zeros(grid, FieldRole::G);
        let one = SourceField::from_fn(grid, FieldRole::G, |_| 1.0).unwrap();
        let unit_kernel = |_y: [f64; 2]| Complex64::new(1.0, 0.0);
        assert_eq!(deterministic_integral(&zero, unit_kernel).unwrap().re, 0.0);
        assert_abs_diff_eq!(
            deterministic_integral(&one, unit_kernel).unwrap().re,
            4.0,
            epsilon = 1e-13
        );
    }

    #[test]
    fn deterministic_integral_quadratic_error_bound() {
        let grid = GridSpec::new(1.0, 30, 30).unwrap();
        let f = SourceField::from_fn(grid, FieldRole::G, |y| y[0] * y[0]).unwrap();
        let val = deterministic_integral(&f, |_| Complex64::new(1.0, 0.0))
            .unwrap()
            .re;
        let (d1, _) = grid.spacing();
        assert!((val - 4.0 / 3.0).abs() <= 4.0 * d1 * d1);
    }

    #[test]
    fn deterministic_integral_rejects_nonfinite_kernel() {
        let grid = GridSpec::new(1.0, 4, 4).unwrap();
        let one = SourceField::from_fn(grid, FieldRole::G, |_| 1.0).unwrap();
        let err = deterministic_integral(&one, |y| {
            if y[0] == 0.0 && y[1] == 0.0 {
                Complex64::new(f64::INFINITY, 0.0)
            } else {
                Complex64::new(1.0, 0.0)
            }
        })
        .unwrap_err();
        assert!(matches!(err, ForwardError::NonFiniteKernel { .. }));
    }

    #[test]
    fn stochastic_integral_zero_sigma() {
        let grid = GridSpec::new(1.0, 6, 6).unwrap();
        let zero = SourceField::zeros(grid, FieldRole::Sigma);
        let mut rng = stream_rng(1, DOMAIN_TEST, 0, 0);
        let z = draw_white_noise(&grid, grid.isometry_dt(), &mut rng);
        let v = stochastic_integral(&zero, |_| Complex64::new(1.0, 0.0), &z).unwrap();
        assert_eq!(v, Complex64::new(0.0, 0.0));
    }

    /// Monte Carlo moments of the stochastic integral against the
    /// discrete-exact quadratic form of the node-weight formula:
    /// E = 0 and E|I|^2 = dt * sum w_n^2 f_n^2.
    #[test]
    fn white_noise_discrete_isometry() {
        let grid = GridSpec::new(1.0, 10, 10).unwrap();
        let f = bump_field(grid, FieldRole::Sigma);
        let dt = grid.isometry_dt();
        let unit = |_y: [f64; 2]| Complex64::new(1.0, 0.0);
        let n = 4000;
        let mut sum = 0.0;
        let mut sum_sq = 0.0;
        for i in 0..n {
            let mut rng = stream_rng(11, DOMAIN_TEST, 1, i);
            let z = draw_white_noise(&grid, dt, &mut rng);
            let v = stochastic_integral(&f, unit, &z).unwrap().re;
            sum += v;
            sum_sq += v * v;
        }
        let nf = n as f64;
        let exact: f64 = grid
            .weights()
            .iter()
            .enumerate()
            .map(|(i, w)| dt * w * w * f.value_flat(i) * f.value_flat(i))
            .sum();
        let mean = sum / nf;
        let second = sum_sq / nf;
        let se_mean = (exact / nf).sqrt();
        assert!(mean.abs() <= 3.0 * se_mean, "mean {mean} vs se {se_mean}");
        let se_second = exact * (2.0 / nf).sqrt();
        assert!(
            (second - exact).abs() <= 3.0 * se_second,
            "second {second} vs exact {exact}"
        );
    }

    #[test]
    fn sample_field_zero_source_gives_reference_only() {
        let geom = small_geom();
        let grid = GridSpec::new(1.0, 8, 8).unwrap();
        let g = SourceField::zeros(grid, FieldRole::G);
        let sigma = SourceField::zeros(grid, FieldRole::Sigma);
        let c = ScalingFactors::unit(geom.m);
        let mut rng = stream_rng(3, DOMAIN_TEST, 2, 0);
        let s = sample_field(&g, &sigma, &geom, &c, grid.isometry_dt(), &mut rng).unwrap();
        for (p, pt) in geom.points.iter().enumerate() {
            assert_eq!(s.u[p], Complex64::new(0.0, 0.0));
            for ell in 0..2 {
                let z = geom.ref_points[pt.arc][ell];
                let g_ref = specfun::green(geom.k.k, pt.xy, z).unwrap();
                assert_eq!(s.v[ell][p], g_ref);
            }
        }
    }

    #[test]
    fn construction_identity_is_bit_exact() {
        let geom = small_geom();
        let grid = GridSpec::new(1.0, 10, 10).unwrap();
        let g = SourceField::from_fn(grid, FieldRole::G, crate::sources::mean_g1).unwrap();
        let sigma = SourceField::from_fn(grid, FieldRole::Sigma, crate::sources::std_sigma).unwrap();
        let c = ScalingFactors::unit(geom.m);
        let setup = SamplerSetup::new(&g, &sigma, &geom, &c, grid.isometry_dt()).unwrap();
        let mut rng = stream_rng(4, DOMAIN_TEST, 3, 0);
        let s = setup.sample(&mut rng);
        for (p, pt) in geom.points.iter().enumerate() {
            for ell in 0..2 {
                let z = geom.ref_points[pt.arc][ell];
                let g_ref = specfun::green(geom.k.k, pt.xy, z).unwrap();
                // v == u + cG exactly, by construction (c = 1 here)
                assert_eq!(s.v[ell][p], s.u[p] + g_ref);
            }
        }
    }

    #[test]
    fn degenerate_ensemble_has_zero_variances() {
        let geom = small_geom();
        let grid = GridSpec::new(1.0, 6, 6).unwrap();
        let g = bump_field(grid, FieldRole::G);
        let sigma = SourceField::zeros(grid, FieldRole::Sigma);
        let c = ScalingFactors::unit(geom.m);
        let setup = SamplerSetup::new(&g, &sigma, &geom, &c, grid.isometry_dt()).unwrap();
        let mut rng = stream_rng(5, DOMAIN_TEST, 4, 0);
        let samples: Vec<_> = (0..5).map(|_| setup.sample(&mut rng)).collect();
        let bundle = estimate_statistics(&geom, &samples).unwrap();
        for ps in &bundle.stats {
            assert_abs_diff_eq!(ps.var_abs_u_sq, 0.0, epsilon = 1e-18);
            assert_abs_diff_eq!(ps.var_abs_v_sq[0], 0.0, epsilon = 1e-18);
            assert_abs_diff_eq!(ps.cov_v1_v2, 0.0, epsilon = 1e-18);
        }
        assert!(estimate_statistics(&geom, &samples[..1]).is_err());
    }

    #[test]
    fn variance_expansion_identity_on_one_ensemble() {
        // Var(|v|^2) expansion against covariances computed from the same
        // ensemble, v = u + w with deterministic w.
        let geom = small_geom();
        let grid = GridSpec::new(1.0, 10, 10).unwrap();
        let g = bump_field(grid, FieldRole::G);
        let sigma = SourceField::from_fn(grid, FieldRole::Sigma, crate::sources::std_sigma).unwrap();
        let c = ScalingFactors::unit(geom.m);
        let setup = SamplerSetup::new(&g, &sigma, &geom, &c, grid.isometry_dt()).unwrap();
        let n = 2000;
        let samples: Vec<_> = (0..n)
            .map(|i| {
                let mut rng = stream_rng(6, DOMAIN_TEST, 5, i);
                setup.sample(&mut rng)
            })
            .collect();
        let bundle = estimate_statistics(&geom, &samples).unwrap();

        // Recompute Var(|v1|^2) from the raw streams of the same ensemble:
        // |v|^2 = |u|^2 + 2 w.u + |w|^2.
        for (p, ps) in bundle.stats.iter().enumerate() {
            let w = setup.shift[0][p];
            let vals: Vec<f64> = samples
                .iter()
                .map(|s| {
                    let u = s.u[p];
                    u.norm_sqr() + 2.0 * (w.re * u.re + w.im * u.im) + w.norm_sqr()
                })
                .collect();
            let mean = vals.iter().sum::<f64>() / n as f64;
            let var =
                vals.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / (n as f64 - 1.0);
            let scale = ps.var_abs_v_sq[0].abs().max(1e-12);
            assert!(
                ((ps.var_abs_v_sq[0] - var) / scale).abs() < 1e-10,
                "point {p}"
            );
        }
    }

    #[test]
    fn covariance_diagonal_is_variance() {
        // Cov(x, x) for the |u|^2 stream appears as var_abs_u_sq; check the
        // accumulator algebra reproduces a direct two-pass estimate.
        let geom = small_geom();
        let grid = GridSpec::new(1.0, 8, 8).unwrap();
        let g = bump_field(grid, FieldRole::G);
        let sigma = SourceField::from_fn(grid, FieldRole::Sigma, crate::sources::std_sigma).unwrap();
        let c = ScalingFactors::unit(geom.m);
        let setup = SamplerSetup::new(&g, &sigma, &geom, &c, grid.isometry_dt()).unwrap();
        let samples: Vec<_> = (0..500)
            .map(|i| {
                let mut rng = stream_rng(7, DOMAIN_TEST, 6, i);
                setup.sample(&mut rng)
            })
            .collect();
        let bundle = estimate_statistics(&geom, &samples).unwrap();
        let p = 13;
        let xs: Vec<f64> = samples.iter().map(|s| s.u[p].norm_sqr()).collect();
        let mean = xs.iter().sum::<f64>() / xs.len() as f64;
        let var = xs.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (xs.len() as f64 - 1.0);
        assert_abs_diff_eq!(bundle.stats[p].var_abs_u_sq, var, epsilon = 1e-13 * var.abs());
    }

    #[test]
    fn moment_decomposition_holds() {
        // E(|u|^2) = Var(Re u) + Var(Im u) + |E u|^2 up to the n vs n-1
        // divisor difference.
        let geom = small_geom();
        let grid = GridSpec::new(1.0, 8, 8).unwrap();
        let g = bump_field(grid, FieldRole::G);
        let sigma = SourceField::from_fn(grid, FieldRole::Sigma, crate::sources::std_sigma).unwrap();
        let c = ScalingFactors::unit(geom.m);
        let setup = SamplerSetup::new(&g, &sigma, &geom, &c, grid.isometry_dt()).unwrap();
        let n = 3000;
        let samples: Vec<_> = (0..n)
            .map(|i| {
                let mut rng = stream_rng(8, DOMAIN_TEST, 7, i);
                setup.sample(&mut rng)
            })
            .collect();
        let bundle = estimate_statistics(&geom, &samples).unwrap();
        for ps in &bundle.stats {
            let lhs = ps.e_abs_u_sq;
            let rhs = ps.var_re_u + ps.var_im_u + ps.e_u[0] * ps.e_u[0] + ps.e_u[1] * ps.e_u[1];
            assert!(
                (lhs - rhs).abs() <= 3.0 * lhs / (n as f64).sqrt(),
                "{lhs} vs {rhs}"
            );
        }
    }

    #[test]
    fn identical_seed_gives_bit_identical_bundle() {
        let geom = small_geom();
        let grid = GridSpec::new(1.0, 8, 8).unwrap();
        let g = bump_field(grid, FieldRole::G);
        let sigma = SourceField::from_fn(grid, FieldRole::Sigma, crate::sources::std_sigma).unwrap();
        let c = ScalingFactors::unit(geom.m);
        let setup = SamplerSetup::new(&g, &sigma, &geom, &c, grid.isometry_dt()).unwrap();
        let b1 = simulate_bundle(&setup, &geom, 700, 99, 1).unwrap();
        let b2 = simulate_bundle(&setup, &geom, 700, 99, 1).unwrap();
        assert_eq!(b1, b2);

        // serial result equals the pooled result for any thread count
        let pool = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
        let b3 = pool.install(|| simulate_bundle(&setup, &geom, 700, 99, 1).unwrap());
        assert_eq!(b1, b3);
    }

    #[test]
    fn perturb_identity_and_law() {
        let geom = small_geom();
        let grid = GridSpec::new(1.0, 8, 8).unwrap();
        let g = bump_field(grid, FieldRole::G);
        let sigma = SourceField::from_fn(grid, FieldRole::Sigma, crate::sources::std_sigma).unwrap();
        let c = ScalingFactors::unit(geom.m);
        let setup = SamplerSetup::new(&g, &sigma, &geom, &c, grid.isometry_dt()).unwrap();
        let bundle = simulate_bundle(&setup, &geom, 200, 1, 2).unwrap();

        let mut rng = noise_rng(1, 0, 0, 0);
        let same = perturb(&bundle, 0.0, &mut rng);
        assert_eq!(same, bundle);

        // Relative deviations of E|u|^2 follow N(0, eps^2): mean and sd checks
        // over many draws at one point.
        let eps = 0.01;
        let p = 7;
        let devs: Vec<f64> = (0..2000)
            .map(|d| {
                let mut rng = noise_rng(2, 0, 1, d);
                let pb = perturb(&bundle, eps, &mut rng);
                (pb.stats[p].e_abs_u_sq - bundle.stats[p].e_abs_u_sq)
                    / bundle.stats[p].e_abs_u_sq
                    / eps
            })
            .collect();
        let mean = devs.iter().sum::<f64>() / devs.len() as f64;
        let var = devs.iter().map(|d| (d - mean) * (d - mean)).sum::<f64>()
            / (devs.len() as f64 - 1.0);
        assert!(mean.abs() < 3.0 / (devs.len() as f64).sqrt());
        assert!((var - 1.0).abs() < 0.12, "normalized variance {var}");

        // e_u (internal phase data) must never be perturbed
        let mut rng = noise_rng(3, 0, 2, 0);
        let pb = perturb(&bundle, 0.5, &mut rng);
        for (a, b) in pb.stats.iter().zip(&bundle.stats) {
            assert_eq!(a.e_u, b.e_u);
            assert_eq!(a.var_re_u, b.var_re_u);
        }
    }
}
