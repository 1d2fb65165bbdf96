//! Self-check suite: structural identities, policy bound scans, white-noise
//! quadrature laws, closed-loop retrieval, pCN sanity and operator/simulator
//! duality. Each check returns a machine-readable result; the CLI `verify`
//! subcommand aggregates them into a report.

use rand::Rng;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;
use std::time::Instant;

use crate::bayes::{self, ChainState, PriorSpec};
use crate::closed_loop::{self, PointMoments};
use crate::forward::{self, ScalingFactors, SamplerSetup};
use crate::fredholm;
use crate::geometry::{build_geometry, Geometry, GeometryConfig, PolicyMode, Wavenumber};
use crate::grid::{FieldRole, GridSpec, SourceField};
use crate::phase_retrieval::{self, PrOptions, RetrievalSystem};
use crate::rng::{stream_rng, DOMAIN_TEST};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    /// Worst observed value of the check's metric.
    pub metric: f64,
    /// Threshold the metric is compared against.
    pub threshold: f64,
    pub seconds: f64,
    pub detail: String,
}

impl CheckResult {
    fn finish(
        name: &str,
        start: Instant,
        passed: bool,
        metric: f64,
        threshold: f64,
        detail: String,
    ) -> Self {
        Self {
            name: name.into(),
            passed,
            metric,
            threshold,
            seconds: start.elapsed().as_secs_f64(),
            detail,
        }
    }
}

fn policy_geometry(k: Wavenumber, n_per_arc: usize) -> Geometry {
    let cfg = GeometryConfig {
        a: 1.0,
        tau: 6.0,
        m: 10,
        n_per_arc,
        wavenumbers: vec![],
        policy: PolicyMode::Paper,
    };
    build_geometry(&cfg, k).expect("policy geometry")
}

/// det D = (det A)^3 as a polynomial identity in the four matrix factors,
/// over random entry draws.
pub fn det_identity(n_draws: usize, seed: u64) -> CheckResult {
    let start = Instant::now();
    let mut rng = stream_rng(seed, DOMAIN_TEST, 0xD1, 0);
    let mut worst = 0.0f64;
    for _ in 0..n_draws {
        let y1 = rng.gen_range(-2.0..2.0);
        let j1 = rng.gen_range(-2.0..2.0);
        let y2 = rng.gen_range(-2.0..2.0);
        let j2 = rng.gen_range(-2.0..2.0);
        let sys = RetrievalSystem::from_factors(y1, j1, y2, j2);
        let cube = sys.det_a.powi(3);
        let err = (sys.det_d - cube).abs() / cube.abs().max(1.0);
        worst = worst.max(err);
    }
    CheckResult::finish(
        "det_identity",
        start,
        worst <= 1e-10,
        worst,
        1e-10,
        format!("{n_draws} random draws"),
    )
}

/// Scans |det A| over every arc and `angles_per_arc` angles for the policy
/// geometries; the theorem floor is 113/(120 kR) for the regular wavenumbers
/// and 4/9 - 1e-9 at k*.
pub fn det_bound_scan(angles_per_arc: usize) -> CheckResult {
    let ks = [
        Wavenumber::regular(PI),
        Wavenumber::regular(60.5 * PI),
        Wavenumber::regular(84.5 * PI),
        Wavenumber::small(1.0),
    ];
    let geoms: Vec<Geometry> = ks.iter().map(|k| policy_geometry(*k, 2)).collect();
    det_bound_scan_over(&geoms, angles_per_arc)
}

/// Bound scan over explicit geometries (lets tests inject corrupted ones).
pub fn det_bound_scan_over(geoms: &[Geometry], angles_per_arc: usize) -> CheckResult {
    let start = Instant::now();
    let mut passed = true;
    let mut worst_margin = f64::INFINITY;
    let mut detail = String::new();
    for geom in geoms {
        let floor = if geom.k.is_small {
            4.0 / 9.0 - 1e-9
        } else {
            113.0 / (120.0 * geom.k.k * geom.radius)
        };
        let mut min_det = f64::INFINITY;
        let mut min_at = (0usize, 0.0f64);
        for arc in 0..geom.m {
            let lo = geom.arcs[arc][0];
            let span = geom.arcs[arc][1] - lo;
            for i in 0..angles_per_arc {
                let theta = lo + span * i as f64 / angles_per_arc as f64;
                let sys = RetrievalSystem::at_point(geom, arc, theta);
                if sys.det_a.abs() < min_det {
                    min_det = sys.det_a.abs();
                    min_at = (arc, theta);
                }
            }
        }
        let margin = min_det - floor;
        worst_margin = worst_margin.min(margin);
        if margin < 0.0 {
            passed = false;
            detail.push_str(&format!(
                "violation at arc {} (j = {}), k = {}: |det A| = {min_det:.6e} < floor {floor:.6e}; ",
                min_at.0,
                min_at.0 + 1,
                geom.k.k
            ));
        }
    }
    if detail.is_empty() {
        detail = format!(
            "{} geometries, {} angles per arc",
            geoms.len(),
            angles_per_arc
        );
    }
    CheckResult::finish(
        "det_bound_scan",
        start,
        passed,
        worst_margin,
        0.0,
        detail,
    )
}

/// Monte Carlo moments of the discrete stochastic integral against the exact
/// quadratic form implied by the node-weight formula: E(I_f) = 0,
/// E(I_f^2) = dt sum w^2 f^2, E(I_f I_h) = dt sum w^2 f h, within 3 standard
/// errors at `n_samples`.
pub fn white_noise_identities(n_samples: usize, seed: u64) -> CheckResult {
    let start = Instant::now();
    let grid = GridSpec::new(1.0, 20, 20).unwrap();
    let dt = grid.isometry_dt();
    let f = SourceField::from_fn(grid, FieldRole::G, |y| {
        (1.0 - y[0] * y[0]) * (1.0 - y[1] * y[1]) * (0.7 + (2.0 * y[0] + y[1]).sin())
    })
    .unwrap();
    let h = SourceField::from_fn(grid, FieldRole::G, |y| {
        (1.0 - y[0] * y[0]) * (1.0 - y[1] * y[1]) * (y[0] - 0.3 * y[1]).cos()
    })
    .unwrap();
    let unit = |_: [f64; 2]| num_complex::Complex64::new(1.0, 0.0);

    let weights = grid.weights();
    let exact_ff: f64 = (0..grid.n_nodes())
        .map(|n| dt * weights[n] * weights[n] * f.value_flat(n) * f.value_flat(n))
        .sum();
    let exact_fh: f64 = (0..grid.n_nodes())
        .map(|n| dt * weights[n] * weights[n] * f.value_flat(n) * h.value_flat(n))
        .sum();
    let exact_hh: f64 = (0..grid.n_nodes())
        .map(|n| dt * weights[n] * weights[n] * h.value_flat(n) * h.value_flat(n))
        .sum();

    let mut s_f = 0.0;
    let mut s_ff = 0.0;
    let mut s_fh = 0.0;
    for i in 0..n_samples {
        let mut rng = stream_rng(seed, DOMAIN_TEST, 0xA11, i as u64);
        let z = forward::draw_white_noise(&grid, dt, &mut rng);
        let i_f = forward::stochastic_integral(&f, unit, &z).unwrap().re;
        let i_h = forward::stochastic_integral(&h, unit, &z).unwrap().re;
        s_f += i_f;
        s_ff += i_f * i_f;
        s_fh += i_f * i_h;
    }
    let nf = n_samples as f64;
    let mean = s_f / nf;
    let second = s_ff / nf;
    let cross = s_fh / nf;

    let se_mean = (exact_ff / nf).sqrt();
    let se_second = exact_ff * (2.0 / nf).sqrt();
    let se_cross = ((exact_ff * exact_hh + exact_fh * exact_fh) / nf).sqrt();

    let z_mean = mean.abs() / se_mean;
    let z_second = (second - exact_ff).abs() / se_second;
    let z_cross = (cross - exact_fh).abs() / se_cross;
    let worst = z_mean.max(z_second).max(z_cross);
    CheckResult::finish(
        "white_noise_identities",
        start,
        worst <= 3.0,
        worst,
        3.0,
        format!(
            "z-scores: mean {z_mean:.2}, isometry {z_second:.2}, cross {z_cross:.2} at n = {n_samples}"
        ),
    )
}

fn smooth_maps(arc: usize, theta: f64) -> PointMoments {
    let a = arc as f64;
    PointMoments {
        e_re: 0.3 * theta.cos() + 0.04 * a,
        e_im: -0.4 * (2.0 * theta).sin() + 0.02,
        var_re: 0.02 + 0.005 * theta.sin().powi(2),
        var_im: 0.03 + 0.004 * theta.cos().powi(2),
        cov_re_im: 0.006 * (theta + a).sin(),
        var_abs_u_sq: 0.07 + 0.01 * theta.cos(),
        cov_x_re: 0.013 * theta.sin(),
        cov_x_im: -0.009 * theta.cos(),
    }
}

/// Exact-synthetic statistics round-trip through the retrieval layer: all
/// five recovered maps match the ground truth in sup norm at every
/// configured wavenumber.
pub fn closed_loop_pr(ks: &[Wavenumber]) -> CheckResult {
    let start = Instant::now();
    let mut worst = 0.0f64;
    let mut detail = String::new();
    for k in ks {
        let geom = policy_geometry(*k, 16);
        let c = ScalingFactors::unit(geom.m);
        let bundle = closed_loop::synthetic_bundle(&geom, &c, smooth_maps);
        match phase_retrieval::run_pr(&bundle, &geom, PrOptions::default()) {
            Ok(out) => {
                for (pt, row) in geom.points.iter().zip(&out.rows) {
                    let mm = smooth_maps(pt.arc, pt.theta);
                    let r = row.as_ref().expect("no arc failures on exact input");
                    let sup = (r.e_re - mm.e_re)
                        .abs()
                        .max((r.e_im - mm.e_im).abs())
                        .max((r.var_re - mm.var_re).abs())
                        .max((r.var_im - mm.var_im).abs())
                        .max((r.cov_re_im - mm.cov_re_im).abs());
                    worst = worst.max(sup);
                }
            }
            Err(e) => {
                worst = f64::INFINITY;
                detail = format!("k = {}: {e}", k.k);
            }
        }
    }
    if detail.is_empty() {
        detail = format!("{} wavenumbers", ks.len());
    }
    CheckResult::finish("closed_loop_pr", start, worst <= 1e-8, worst, 1e-8, detail)
}

/// pCN with a flat potential leaves the prior invariant: empirical node
/// variances and the two-node covariance stay within 5% of the prior's after
/// `n_steps` at beta = 0.5, and every proposal is accepted.
pub fn prior_invariance(n_steps: usize, seed: u64) -> CheckResult {
    let start = Instant::now();
    let spec = PriorSpec {
        gamma: 0.8,
        d: 0.25,
        jitter: None,
        nodes: vec![[0.0, 0.0], [0.2, 0.1]],
    };
    let prior = bayes::build_prior(&spec).expect("toy prior factorizes");
    let flat = |_: &[f64]| 0.0;
    let mut rng = stream_rng(seed, DOMAIN_TEST, 0xAC, 0);
    let mut state = ChainState {
        field: vec![0.0; 2],
        psi: 0.0,
    };
    let mut accepted = 0usize;
    let mut s = [0.0f64; 2];
    let mut ss = [0.0f64; 2];
    let mut cross = 0.0f64;
    for _ in 0..n_steps {
        let (next, acc) = bayes::pcn_step(&state, &prior, 0.5, &flat, &mut rng);
        state = next;
        accepted += acc as usize;
        for d in 0..2 {
            s[d] += state.field[d];
            ss[d] += state.field[d] * state.field[d];
        }
        cross += state.field[0] * state.field[1];
    }
    let nf = n_steps as f64;
    let mut worst = 0.0f64;
    for d in 0..2 {
        let var = (ss[d] - s[d] * s[d] / nf) / (nf - 1.0);
        worst = worst.max((var - prior.covariance(d, d)).abs() / prior.covariance(d, d));
    }
    let cov = (cross - s[0] * s[1] / nf) / (nf - 1.0);
    worst = worst.max((cov - prior.covariance(0, 1)).abs() / prior.covariance(0, 1).abs());
    let all_accepted = accepted == n_steps;
    CheckResult::finish(
        "prior_invariance",
        start,
        worst <= 0.05 && all_accepted,
        worst,
        0.05,
        format!(
            "acceptance {} / {n_steps}, worst relative moment error {worst:.4}",
            accepted
        ),
    )
}

/// 2-node conjugate-Gaussian check: the chain's stationary mean and
/// covariance match the closed-form posterior within 5%.
pub fn conjugate_gaussian(n_steps: usize, seed: u64) -> CheckResult {
    let start = Instant::now();
    let spec = PriorSpec {
        gamma: 1.0,
        d: 0.3,
        jitter: Some(1e-12),
        nodes: vec![[0.0, 0.0], [0.25, 0.0]],
    };
    let prior = bayes::build_prior(&spec).expect("toy prior");
    let c0 = [
        [prior.covariance(0, 0), prior.covariance(0, 1)],
        [prior.covariance(1, 0), prior.covariance(1, 1)],
    ];
    // chosen so every compared posterior moment is O(1) away from zero
    let data = [1.2, 0.9];
    let noise = [0.5, 0.8];

    // closed-form posterior for T = I: C_post = (C0^-1 + Sigma^-1)^-1,
    // m_post = C_post Sigma^-1 psi
    let det = c0[0][0] * c0[1][1] - c0[0][1] * c0[1][0];
    let c0_inv = [
        [c0[1][1] / det, -c0[0][1] / det],
        [-c0[1][0] / det, c0[0][0] / det],
    ];
    let prec = [
        [c0_inv[0][0] + 1.0 / noise[0], c0_inv[0][1]],
        [c0_inv[1][0], c0_inv[1][1] + 1.0 / noise[1]],
    ];
    let pdet = prec[0][0] * prec[1][1] - prec[0][1] * prec[1][0];
    let c_post = [
        [prec[1][1] / pdet, -prec[0][1] / pdet],
        [-prec[1][0] / pdet, prec[0][0] / pdet],
    ];
    let rhs = [data[0] / noise[0], data[1] / noise[1]];
    let m_post = [
        c_post[0][0] * rhs[0] + c_post[0][1] * rhs[1],
        c_post[1][0] * rhs[0] + c_post[1][1] * rhs[1],
    ];

    let psi = |phi: &[f64]| {
        0.5 * ((phi[0] - data[0]).powi(2) / noise[0] + (phi[1] - data[1]).powi(2) / noise[1])
    };
    let mut rng = stream_rng(seed, DOMAIN_TEST, 0xCB, 0);
    let mut state = ChainState {
        field: vec![0.0; 2],
        psi: psi(&[0.0, 0.0]),
    };
    let beta = 0.35;
    let burn = n_steps / 10;
    let mut s = [0.0f64; 2];
    let mut ss = [0.0f64; 2];
    let mut cross = 0.0f64;
    let mut kept = 0usize;
    for step in 0..n_steps {
        let (next, _) = bayes::pcn_step(&state, &prior, 0.3, &psi, &mut rng);
        state = next;
        if step >= burn {
            kept += 1;
            for d in 0..2 {
                s[d] += state.field[d];
                ss[d] += state.field[d] * state.field[d];
            }
            cross += state.field[0] * state.field[1];
        }
    }
    let nf = kept as f64;
    let mean = [s[0] / nf, s[1] / nf];
    let var = [
        (ss[0] - s[0] * s[0] / nf) / (nf - 1.0),
        (ss[1] - s[1] * s[1] / nf) / (nf - 1.0),
    ];
    let cov = (cross - s[0] * s[1] / nf) / (nf - 1.0);
    let mut worst = 0.0f64;
    for d in 0..2 {
        worst = worst.max((mean[d] - m_post[d]).abs() / m_post[d].abs());
        worst = worst.max((var[d] - c_post[d][d]).abs() / c_post[d][d]);
    }
    worst = worst.max((cov - c_post[0][1]).abs() / c_post[0][1].abs());
    CheckResult::finish(
        "conjugate_gaussian",
        start,
        worst <= 0.05,
        worst,
        0.05,
        format!("worst relative moment error over mean/cov at {n_steps} steps"),
    )
}

/// Operator/simulator duality. Mean channel: with sigma = 0 the sampler is
/// deterministic and must match the kernel rows to 1e-12. Variance channel:
/// ensemble Var(Re u), Var(Im u), Cov(Re u, Im u) match the raw kernel rows
/// applied to sigma^2 within 3 standard errors at `n_samples`.
pub fn duality(n_samples: usize, seed: u64) -> CheckResult {
    let start = Instant::now();
    let geom = policy_geometry(Wavenumber::regular(PI), 4);
    let grid = GridSpec::new(1.0, 24, 24).unwrap();
    let g = SourceField::from_fn(grid, FieldRole::G, crate::sources::mean_g1).unwrap();
    // boundary-vanishing sigma keeps the trapezoid's edge-weight deficit out
    // of the discrete variance
    let sigma = SourceField::from_fn(grid, FieldRole::Sigma, |y| {
        crate::sources::std_sigma(y) * (1.0 - (y[0] / grid.a).powi(2)) * (1.0 - (y[1] / grid.a).powi(2))
    })
    .unwrap();
    let sigma_sq =
        SourceField::from_fn(grid, FieldRole::SigmaSq, |y| {
            let s = crate::sources::std_sigma(y)
                * (1.0 - (y[0] / grid.a).powi(2))
                * (1.0 - (y[1] / grid.a).powi(2));
            s * s
        })
        .unwrap();
    let c = ScalingFactors::unit(geom.m);
    let dt = grid.isometry_dt();

    // mean channel, deterministic
    let zero_sigma = SourceField::zeros(grid, FieldRole::Sigma);
    let setup0 = SamplerSetup::new(&g, &zero_sigma, &geom, &c, dt).unwrap();
    let z0 = vec![0.0; grid.n_nodes()];
    let det_sample = setup0.sample_with_noise(&z0).unwrap();
    let mut worst_mean = 0.0f64;
    for (p, pt) in geom.points.iter().enumerate() {
        let (re_row, im_row) = fredholm::kernel_row_mean(&grid, pt.xy, geom.k.k).unwrap();
        let dot = |row: &[f64]| -> f64 { row.iter().zip(g.values()).map(|(a, b)| a * b).sum() };
        worst_mean = worst_mean
            .max((det_sample.u[p].re - dot(&re_row)).abs())
            .max((det_sample.u[p].im - dot(&im_row)).abs());
    }

    // variance channel, Monte Carlo
    let setup = SamplerSetup::new(&g, &sigma, &geom, &c, dt).unwrap();
    let bundle = forward::simulate_bundle(&setup, &geom, n_samples, seed, 0xDA).unwrap();
    let nf = n_samples as f64;
    let mut worst_z = 0.0f64;
    for (p, pt) in geom.points.iter().enumerate() {
        let (re2, im2, cross) = fredholm::kernel_rows_variance(&grid, pt.xy, geom.k.k).unwrap();
        let dot = |row: &[f64]| -> f64 {
            row.iter().zip(sigma_sq.values()).map(|(a, b)| a * b).sum()
        };
        let (vr, vi, cv) = (dot(&re2), dot(&im2), dot(&cross));
        let s = &bundle.stats[p];
        // SEs of Gaussian moment estimators
        let se_vr = vr * (2.0 / nf).sqrt();
        let se_vi = vi * (2.0 / nf).sqrt();
        let se_cv = ((vr * vi + cv * cv) / nf).sqrt();
        worst_z = worst_z
            .max((s.var_re_u - vr).abs() / se_vr)
            .max((s.var_im_u - vi).abs() / se_vi)
            .max((s.cov_re_im_u - cv).abs() / se_cv);
    }
    let passed = worst_mean <= 1e-12 && worst_z <= 3.0;
    CheckResult::finish(
        "duality",
        start,
        passed,
        worst_z,
        3.0,
        format!("mean-channel sup {worst_mean:.2e} (<= 1e-12), worst variance z {worst_z:.2}"),
    )
}

/// The full suite in report order.
pub fn full_suite(seed: u64) -> Vec<CheckResult> {
    let ks = [
        Wavenumber::small(1.0),
        Wavenumber::regular(PI),
        Wavenumber::regular(60.5 * PI),
        Wavenumber::regular(84.5 * PI),
    ];
    vec![
        det_identity(10_000, seed),
        det_bound_scan(1000),
        white_noise_identities(10_000, seed),
        closed_loop_pr(&ks),
        prior_invariance(50_000, seed),
        conjugate_gaussian(100_000, seed),
        duality(10_000, seed),
    ]
}
