//! Gaussian-random-field prior, pCN sampling of the posterior over source
//! grids, and the reconstruction drivers for the mean g and variance sigma^2.
//!
//! The posterior density against the prior is exp(-Psi) with the data
//! fidelity Psi(phi) = 1/2 || Sigma^{-1/2} (T(phi) - psi) ||^2; the pCN
//! proposal phi' = sqrt(1 - beta^2) phi + beta xi (xi a prior draw) is
//! accepted with probability min(1, exp(Psi(phi) - Psi(phi'))).

use nalgebra::{DMatrix, DVector};
use rand::Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};
use std::io::Write;
use thiserror::Error;

use crate::forward::StatsBundle;
use crate::fredholm::{self, DiscreteOperator};
use crate::geometry::Geometry;
use crate::grid::GridSpec;
use crate::phase_retrieval::{self, RhsMode};
use crate::rng::{stream_rng, DOMAIN_CHAIN};

/// Hard ceiling of the jitter escalation.
pub const JITTER_CAP: f64 = 1e-8;

/// Near-zero data entries get their noise variance floored at this fraction
/// of the largest datum's noise scale. An absolute floor would have to know
/// the data's magnitude, which varies by orders of magnitude between the
/// mean and variance channels.
pub const NOISE_FLOOR_FRACTION: f64 = 1e-3;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum BayesError {
    #[error("prior covariance failed to factorize even at jitter {jitter:e}")]
    FactorizationFailed { jitter: f64 },
    #[error("noise covariance entry {index} is not positive")]
    NonPositiveNoiseCov { index: usize },
    #[error("dimension mismatch: {what}")]
    DimMismatch { what: String },
    #[error("chain config invalid: need 0 < beta <= 1 and burn_in < n_samples")]
    InvalidChainConfig,
    #[error(transparent)]
    Fredholm(#[from] fredholm::FredholmError),
    #[error(transparent)]
    Pr(#[from] phase_retrieval::PrError),
    #[error("trace stream: {0}")]
    Trace(String),
}

/// Squared-exponential prior specification on an explicit node set.
#[derive(Debug, Clone, PartialEq)]
pub struct PriorSpec {
    /// Marginal variance scale gamma.
    pub gamma: f64,
    /// Correlation length d.
    pub d: f64,
    /// Initial diagonal regularizer; defaults to 1e-10 * gamma.
    pub jitter: Option<f64>,
    pub nodes: Vec<[f64; 2]>,
}

impl PriorSpec {
    pub fn on_grid(gamma: f64, d: f64, grid: &GridSpec) -> Self {
        Self {
            gamma,
            d,
            jitter: None,
            nodes: grid.nodes(),
        }
    }
}

/// Factored prior: lower Cholesky factor of
/// C0 + jitter I, c0(x1, x2) = gamma exp(-1/2 (||x1 - x2|| / d)^2).
pub struct FactoredPrior {
    pub gamma: f64,
    pub d: f64,
    pub jitter: f64,
    pub nodes: Vec<[f64; 2]>,
    l: DMatrix<f64>,
}

impl FactoredPrior {
    pub fn dim(&self) -> usize {
        self.nodes.len()
    }

    /// Covariance entry (including the jitter on the diagonal).
    pub fn covariance(&self, i: usize, j: usize) -> f64 {
        let base = cov_entry(self.gamma, self.d, self.nodes[i], self.nodes[j]);
        if i == j {
            base + self.jitter
        } else {
            base
        }
    }
}

fn cov_entry(gamma: f64, d: f64, a: [f64; 2], b: [f64; 2]) -> f64 {
    let r = (a[0] - b[0]).hypot(a[1] - b[1]);
    gamma * (-0.5 * (r / d) * (r / d)).exp()
}

/// Assembles and factorizes the prior covariance, escalating the jitter by
/// 100x per failed attempt up to [`JITTER_CAP`].
pub fn build_prior(spec: &PriorSpec) -> Result<FactoredPrior, BayesError> {
    let n = spec.nodes.len();
    let mut jitter = spec.jitter.unwrap_or(1e-10 * spec.gamma);
    loop {
        let c = DMatrix::from_fn(n, n, |i, j| {
            let base = cov_entry(spec.gamma, spec.d, spec.nodes[i], spec.nodes[j]);
            if i == j {
                base + jitter
            } else {
                base
            }
        });
        if let Some(chol) = c.cholesky() {
            return Ok(FactoredPrior {
                gamma: spec.gamma,
                d: spec.d,
                jitter,
                nodes: spec.nodes.clone(),
                l: chol.l(),
            });
        }
        if jitter >= JITTER_CAP {
            return Err(BayesError::FactorizationFailed { jitter });
        }
        jitter = if jitter > 0.0 {
            (jitter * 100.0).min(JITTER_CAP)
        } else {
            // explicit zero jitter: restart the escalation from the cap's
            // scale ladder
            (1e-10 * spec.gamma).max(1e-16).min(JITTER_CAP)
        };
    }
}

/// Zero-mean draw: L * xi with xi standard normal.
pub fn sample_prior(prior: &FactoredPrior, rng: &mut impl Rng) -> Vec<f64> {
    let xi = DVector::from_fn(prior.dim(), |_, _| rng.sample::<f64, _>(StandardNormal));
    (&prior.l * xi).data.into()
}

/// Data fidelity Psi = 1/2 sum ((T(phi) - data)_i^2 / noise_cov_i).
pub fn potential(
    candidate: &[f64],
    op: &DiscreteOperator,
    data: &[f64],
    noise_cov: &[f64],
) -> Result<f64, BayesError> {
    if data.len() != op.n_rows || noise_cov.len() != op.n_rows {
        return Err(BayesError::DimMismatch {
            what: format!(
                "operator {} rows, data {}, noise_cov {}",
                op.n_rows,
                data.len(),
                noise_cov.len()
            ),
        });
    }
    for (i, &nc) in noise_cov.iter().enumerate() {
        if !(nc > 0.0) {
            return Err(BayesError::NonPositiveNoiseCov { index: i });
        }
    }
    let t = fredholm::apply(op, candidate)?;
    Ok(0.5
        * t.iter()
            .zip(data)
            .zip(noise_cov)
            .map(|((ti, di), nc)| (ti - di) * (ti - di) / nc)
            .sum::<f64>())
}

/// Relative-error diagonal covariance: (eps |d_i|)^2 per datum plus the
/// datum's own sampling variance `se_i^2` (zero for exact-synthetic data),
/// floored at ([`NOISE_FLOOR_FRACTION`] * eps * max_j |d_j|)^2 so zero-valued
/// entries cannot produce a singular weight. A tiny effective eps stands in
/// when the caller passes exactly zero.
pub fn noise_cov_from_data(data: &[f64], se: &[f64], eps: f64) -> Vec<f64> {
    let eps_eff = eps.max(1e-9);
    let max_abs = data.iter().fold(0.0_f64, |m, d| m.max(d.abs()));
    let floor = (eps_eff * NOISE_FLOOR_FRACTION * max_abs)
        .powi(2)
        .max(f64::MIN_POSITIVE);
    data.iter()
        .zip(se)
        .map(|(d, s)| ((eps_eff * d.abs()).powi(2) + s * s).max(floor))
        .collect()
}

/// Current chain position with its cached potential value.
#[derive(Debug, Clone, PartialEq)]
pub struct ChainState {
    pub field: Vec<f64>,
    pub psi: f64,
}

/// One pCN transition. Returns the next state and whether the proposal was
/// accepted.
pub fn pcn_step(
    state: &ChainState,
    prior: &FactoredPrior,
    beta: f64,
    potential_fn: &dyn Fn(&[f64]) -> f64,
    rng: &mut impl Rng,
) -> (ChainState, bool) {
    let contraction = (1.0 - beta * beta).sqrt();
    let xi = sample_prior(prior, rng);
    let proposal: Vec<f64> = state
        .field
        .iter()
        .zip(&xi)
        .map(|(phi, x)| contraction * phi + beta * x)
        .collect();
    let psi_new = potential_fn(&proposal);
    let log_alpha = state.psi - psi_new;
    let u: f64 = rng.gen();
    if log_alpha >= 0.0 || u < log_alpha.exp() {
        (
            ChainState {
                field: proposal,
                psi: psi_new,
            },
            true,
        )
    } else {
        (state.clone(), false)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ChainConfig {
    /// pCN step size in (0, 1].
    pub beta: f64,
    pub n_samples: usize,
    pub burn_in: usize,
    pub seed: u64,
    /// Substream key separating concurrent chains.
    pub chain_key: u64,
    /// Per-datum variance of the diagonal noise covariance in Psi.
    pub noise_cov: Vec<f64>,
}

/// Posterior summary over the retained draws: node-wise mean and spread,
/// overall acceptance rate, and the relative L2 error against the supplied
/// truth. Negative cells of a variance reconstruction are counted, not
/// clipped.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PosteriorSummary {
    pub grid: Option<GridSpec>,
    pub mean: Vec<f64>,
    pub pointwise_sd: Vec<f64>,
    pub acceptance_rate: f64,
    pub rel_l2_error: Option<f64>,
    pub n_negative_cells: usize,
}

/// Relative L2 error of an estimate against truth on a shared grid.
pub fn rel_l2_error(estimate: &[f64], truth: &[f64]) -> f64 {
    let num: f64 = estimate
        .iter()
        .zip(truth)
        .map(|(e, t)| (e - t) * (e - t))
        .sum();
    let den: f64 = truth.iter().map(|t| t * t).sum();
    (num / den).sqrt()
}

/// Runs the pCN chain from a zero-field start, discards the burn-in prefix
/// and averages the rest.
pub fn run_chain(
    cfg: &ChainConfig,
    prior: &FactoredPrior,
    op: &DiscreteOperator,
    data: &[f64],
    truth: Option<&[f64]>,
    grid: Option<GridSpec>,
    mut trace: Option<&mut dyn Write>,
) -> Result<PosteriorSummary, BayesError> {
    if !(cfg.beta > 0.0 && cfg.beta <= 1.0) || cfg.burn_in >= cfg.n_samples {
        return Err(BayesError::InvalidChainConfig);
    }
    let dim = prior.dim();
    if op.n_cols != dim {
        return Err(BayesError::DimMismatch {
            what: format!("operator {} cols, prior dim {}", op.n_cols, dim),
        });
    }
    // validate data/noise once; the closure then treats Psi as infallible
    potential(&vec![0.0; dim], op, data, &cfg.noise_cov)?;
    let potential_fn =
        |phi: &[f64]| potential(phi, op, data, &cfg.noise_cov).expect("validated dims");

    if let Some(w) = trace.as_deref_mut() {
        let kept = (cfg.n_samples - cfg.burn_in) as u64;
        w.write_all(b"PCNTRACE")
            .and_then(|_| w.write_all(&kept.to_le_bytes()))
            .and_then(|_| w.write_all(&(dim as u64).to_le_bytes()))
            .map_err(|e| BayesError::Trace(e.to_string()))?;
    }

    let mut rng = stream_rng(cfg.seed, DOMAIN_CHAIN, cfg.chain_key, 0);
    let mut state = ChainState {
        field: vec![0.0; dim],
        psi: potential_fn(&vec![0.0; dim]),
    };
    let mut accepted = 0usize;
    let mut sum = vec![0.0; dim];
    let mut sum_sq = vec![0.0; dim];
    for step in 0..cfg.n_samples {
        let (next, acc) = pcn_step(&state, prior, cfg.beta, &potential_fn, &mut rng);
        state = next;
        if acc {
            accepted += 1;
        }
        if step >= cfg.burn_in {
            for (i, v) in state.field.iter().enumerate() {
                sum[i] += v;
                sum_sq[i] += v * v;
            }
            if let Some(w) = trace.as_deref_mut() {
                for v in &state.field {
                    w.write_all(&v.to_le_bytes())
                        .map_err(|e| BayesError::Trace(e.to_string()))?;
                }
            }
        }
    }
    let kept = (cfg.n_samples - cfg.burn_in) as f64;
    let mean: Vec<f64> = sum.iter().map(|s| s / kept).collect();
    let pointwise_sd: Vec<f64> = sum
        .iter()
        .zip(&sum_sq)
        .map(|(s, ss)| ((ss - s * s / kept) / (kept - 1.0)).max(0.0).sqrt())
        .collect();
    let n_negative_cells = mean.iter().filter(|v| **v < 0.0).count();
    Ok(PosteriorSummary {
        grid,
        mean: mean.clone(),
        pointwise_sd,
        acceptance_rate: accepted as f64 / cfg.n_samples as f64,
        rel_l2_error: truth.map(|t| rel_l2_error(&mean, t)),
        n_negative_cells,
    })
}

/// Reconstruction parameters for one inversion target.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReconstructSpec {
    pub gamma: f64,
    pub d: f64,
    pub beta: f64,
    pub n_samples: usize,
    pub burn_in: usize,
    pub seed: u64,
    pub chain_key: u64,
    /// Noise level entering the relative-error covariance.
    pub eps: f64,
}

/// Reconstructs the source mean g from stacked mean-channel data
/// f_{ℓ,k} over the supplied wavenumber bundles (unit scaling factors).
pub fn reconstruct_g(
    bundles: &[(Geometry, StatsBundle)],
    inv_grid: GridSpec,
    ell: usize,
    spec: &ReconstructSpec,
    truth: Option<&[f64]>,
) -> Result<PosteriorSummary, BayesError> {
    let mut ops = Vec::new();
    let mut data = Vec::new();
    let mut se = Vec::new();
    for (geom, bundle) in bundles {
        let c = crate::forward::ScalingFactors::unit(geom.m);
        let f = phase_retrieval::rhs_expectation(bundle, &c, geom, RhsMode::SecondMoment)?;
        data.extend(f.iter().map(|pair| pair[ell]));
        se.extend(phase_retrieval::data_se_expectation(bundle, ell));
        ops.push(fredholm::assemble_mean_operator(geom, &inv_grid, ell)?);
    }
    let op = fredholm::stack(&ops)?;
    run_target(&op, &data, &se, inv_grid, spec, truth)
}

/// Reconstructs the source variance sigma^2 from stacked variance-channel
/// data F_{k,ℓ1,ℓ2} for the chosen reference pair (0-based).
pub fn reconstruct_sigma(
    bundles: &[(Geometry, StatsBundle)],
    inv_grid: GridSpec,
    which: (usize, usize),
    spec: &ReconstructSpec,
    truth: Option<&[f64]>,
) -> Result<PosteriorSummary, BayesError> {
    let pair_index = match which {
        (0, 0) => 0,
        (1, 1) => 1,
        (0, 1) | (1, 0) => 2,
        other => {
            return Err(BayesError::DimMismatch {
                what: format!("reference pair {other:?} out of range"),
            })
        }
    };
    let mut ops = Vec::new();
    let mut data = Vec::new();
    let mut se = Vec::new();
    for (geom, bundle) in bundles {
        let c = crate::forward::ScalingFactors::unit(geom.m);
        let f = phase_retrieval::rhs_variance(bundle, &c, geom)?;
        data.extend(f.iter().map(|tri| tri[pair_index]));
        se.extend(phase_retrieval::data_se_variance(bundle, pair_index));
        ops.push(fredholm::assemble_variance_operator(
            geom, &inv_grid, which.0, which.1,
        )?);
    }
    let op = fredholm::stack(&ops)?;
    run_target(&op, &data, &se, inv_grid, spec, truth)
}

fn run_target(
    op: &DiscreteOperator,
    data: &[f64],
    se: &[f64],
    inv_grid: GridSpec,
    spec: &ReconstructSpec,
    truth: Option<&[f64]>,
) -> Result<PosteriorSummary, BayesError> {
    let prior = build_prior(&PriorSpec::on_grid(spec.gamma, spec.d, &inv_grid))?;
    let cfg = ChainConfig {
        beta: spec.beta,
        n_samples: spec.n_samples,
        burn_in: spec.burn_in,
        seed: spec.seed,
        chain_key: spec.chain_key,
        noise_cov: noise_cov_from_data(data, se, spec.eps),
    };
    run_chain(&cfg, &prior, op, data, truth, Some(inv_grid), None)
}
