//! Experiment driver behind the CLI subcommands: simulate | retrieve |
//! invert | verify. All outputs land under the configured output directory
//! with fixed names and provenance headers.

use std::path::{Path, PathBuf};
use thiserror::Error;

use crate::bayes::{self, ReconstructSpec};
use crate::closed_loop;
use crate::config::ExperimentConfig;
use crate::forward::{self, ScalingFactors, SamplerSetup, StatsBundle};
use crate::geometry::{build_geometry, Geometry, Wavenumber};
use crate::grid::{FieldRole, SourceField};
use crate::io::{self, Provenance};
use crate::phase_retrieval::{self, PrOptions};
use crate::sources;
use crate::verify;

#[derive(Debug, Error)]
pub enum DriverError {
    #[error("validation: {0}")]
    Validation(String),
    #[error("verification suite failed: {0}")]
    Suite(String),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
}

impl DriverError {
    pub fn exit_code(&self) -> i32 {
        match self {
            DriverError::Validation(_) => 1,
            DriverError::Suite(_) => 2,
            DriverError::Io(_) => 3,
        }
    }
}

macro_rules! validation_from {
    ($($ty:ty),*) => {$(
        impl From<$ty> for DriverError {
            fn from(e: $ty) -> Self {
                DriverError::Validation(e.to_string())
            }
        }
    )*};
}
validation_from!(
    crate::config::ConfigError,
    crate::geometry::GeometryError,
    crate::grid::GridError,
    crate::forward::ForwardError,
    crate::phase_retrieval::PrError,
    crate::fredholm::FredholmError,
    crate::bayes::BayesError
);

/// Wavenumber keys separate the RNG substreams of the two bundle families.
const TABLE_KEY_BASE: u64 = 0;
const INV_KEY_BASE: u64 = 1000;

pub struct Driver {
    pub cfg: ExperimentConfig,
    pub prov: Provenance,
    out: PathBuf,
}

impl Driver {
    pub fn new(cfg: ExperimentConfig) -> Result<Self, DriverError> {
        cfg.validate()?;
        let prov = Provenance::new(cfg.hash(), cfg.run.seed);
        let out = cfg.run.output_dir.clone();
        Ok(Self { cfg, prov, out })
    }

    fn path(&self, rel: impl AsRef<Path>) -> PathBuf {
        self.out.join(rel)
    }

    pub fn table_geometries(&self) -> Result<Vec<Geometry>, DriverError> {
        self.cfg
            .geometry
            .wavenumbers()
            .into_iter()
            .map(|k| Ok(build_geometry(&self.cfg.geometry.geometry_config(), k)?))
            .collect()
    }

    pub fn inv_geometries(&self) -> Result<Vec<Geometry>, DriverError> {
        let gcfg = self
            .cfg
            .geometry
            .with_n_per_arc(self.cfg.inversion.n_per_arc);
        self.cfg
            .inversion
            .wavenumbers_x
            .iter()
            .map(|x| {
                let k = Wavenumber::regular(x * std::f64::consts::PI / self.cfg.geometry.a);
                Ok(build_geometry(&gcfg, k)?)
            })
            .collect()
    }

    pub fn source_fields(&self) -> Result<(SourceField, SourceField, SourceField), DriverError> {
        let grid = self.cfg.sim_grid();
        let g = SourceField::from_fn(grid, FieldRole::G, sources::mean_g1)?;
        let sigma = SourceField::from_fn(grid, FieldRole::Sigma, sources::std_sigma)?;
        let sigma_sq = SourceField::from_fn(grid, FieldRole::SigmaSq, sources::variance_sigma1)?;
        Ok((g, sigma, sigma_sq))
    }

    /// Noiseless bundle for one geometry: Monte Carlo by default,
    /// exact-synthetic in closed-loop mode.
    pub fn make_bundle(&self, geom: &Geometry, key: u64) -> Result<StatsBundle, DriverError> {
        let (g, sigma, sigma_sq) = self.source_fields()?;
        let c = ScalingFactors::unit(geom.m);
        if self.cfg.run.closed_loop {
            Ok(closed_loop::bundle_from_sources(&g, &sigma_sq, geom, &c)?)
        } else {
            let setup = SamplerSetup::new(&g, &sigma, geom, &c, self.cfg.dt())?;
            Ok(forward::simulate_bundle(
                &setup,
                geom,
                self.cfg.simulation.n_mc,
                self.cfg.run.seed,
                key,
            )?)
        }
    }

    fn eps_list(base: &[f64]) -> Vec<f64> {
        let mut eps = vec![0.0];
        eps.extend(base.iter().copied().filter(|e| *e != 0.0));
        eps
    }

    fn bundle_path(&self, family: &str, k_idx: usize, eps: f64, ext: &str) -> PathBuf {
        self.path(format!("bundles/{family}_k{k_idx}_eps{eps}.{ext}"))
    }

    /// `simulate`: forward Monte Carlo for every wavenumber and noise level,
    /// noiseless and perturbed bundles for both the retrieval-table and the
    /// inversion wavenumber families.
    pub fn cmd_simulate(&self) -> Result<(), DriverError> {
        self.write_config_mirror()?;
        let families: [(&str, Vec<Geometry>, &[f64], u64); 2] = [
            (
                "table",
                self.table_geometries()?,
                &self.cfg.simulation.epsilons,
                TABLE_KEY_BASE,
            ),
            (
                "inv",
                self.inv_geometries()?,
                &self.cfg.inversion.epsilons,
                INV_KEY_BASE,
            ),
        ];
        for (family, geoms, epsilons, key_base) in families {
            for (k_idx, geom) in geoms.iter().enumerate() {
                io::write_json(
                    &self.path(format!("geometry/{family}_k{k_idx}.json")),
                    &self.prov,
                    &geom.to_json(),
                )?;
                let base = self.make_bundle(geom, key_base + k_idx as u64)?;
                for (eps_idx, eps) in Self::eps_list(epsilons).into_iter().enumerate() {
                    let bundle = if eps == 0.0 {
                        base.clone()
                    } else {
                        let mut rng = forward::noise_rng(
                            self.cfg.run.seed,
                            key_base as usize + k_idx,
                            eps_idx,
                            0,
                        );
                        forward::perturb(&base, eps, &mut rng)
                    };
                    io::write_json(
                        &self.bundle_path(family, k_idx, eps, "json"),
                        &self.prov,
                        &bundle,
                    )?;
                    io::write_bundle_csv(
                        &self.bundle_path(family, k_idx, eps, "csv"),
                        &self.prov,
                        &bundle,
                    )?;
                }
            }
        }
        Ok(())
    }

    fn k_label(k: Wavenumber, a: f64) -> String {
        if k.is_small {
            "k_star".into()
        } else {
            format!("{}pi", k.k * a / std::f64::consts::PI)
        }
    }

    /// `retrieve`: runs the retrieval per (wavenumber, noise level) from the
    /// simulated bundles and emits the two error tables (rows: noise levels,
    /// columns: wavenumbers).
    pub fn cmd_retrieve(&self) -> Result<(), DriverError> {
        let geoms = self.table_geometries()?;
        let (g, _, sigma_sq) = self.source_fields()?;
        let eps_list = Self::eps_list(&self.cfg.simulation.epsilons);
        let k_labels: Vec<String> = geoms
            .iter()
            .map(|geom| Self::k_label(geom.k, self.cfg.geometry.a))
            .collect();
        let mut e_rows: Vec<(f64, Vec<f64>)> =
            eps_list.iter().map(|e| (*e, Vec::new())).collect();
        let mut v_rows = e_rows.clone();
        for (k_idx, geom) in geoms.iter().enumerate() {
            let truth = closed_loop::truth_from_sources(&g, &sigma_sq, geom)?;
            for (eps_idx, eps) in eps_list.iter().enumerate() {
                let bundle = io::read_bundle(&self.bundle_path("table", k_idx, *eps, "json"))?;
                let retrieved = phase_retrieval::run_pr(&bundle, geom, PrOptions::default())?;
                io::write_retrieved_csv(
                    &self.path(format!("retrieved/table_k{k_idx}_eps{eps}.csv")),
                    &self.prov,
                    &retrieved,
                )?;
                let (e_err, v_err) = phase_retrieval::relative_errors(&retrieved, &truth)?;
                e_rows[eps_idx].1.push(e_err);
                v_rows[eps_idx].1.push(v_err);
            }
        }
        io::write_error_table(
            &self.path("tables/expectation_errors.csv"),
            &self.prov,
            &k_labels,
            &e_rows,
        )?;
        io::write_error_table(
            &self.path("tables/variance_errors.csv"),
            &self.prov,
            &k_labels,
            &v_rows,
        )?;
        Ok(())
    }

    /// The five reconstruction rows: label, target settings, and how to run.
    fn targets(&self) -> [(&'static str, &'static str, crate::config::TargetSection); 5] {
        [
            ("f^ε_{1,k}", "f_eps_1", self.cfg.inversion.g.clone()),
            ("f^ε_{2,k}", "f_eps_2", self.cfg.inversion.g.clone()),
            ("F^ε_{k,1,1}", "F_eps_11", self.cfg.inversion.sigma_diag.clone()),
            ("F^ε_{k,2,2}", "F_eps_22", self.cfg.inversion.sigma_diag.clone()),
            ("F^ε_{k,1,2}", "F_eps_12", self.cfg.inversion.sigma_cross.clone()),
        ]
    }

    /// `invert`: Bayesian reconstruction of g from the two mean channels and
    /// of sigma^2 from the three variance channels, across the configured
    /// noise levels; emits posterior grids and the five-row error table.
    pub fn cmd_invert(&self) -> Result<(), DriverError> {
        let geoms = self.inv_geometries()?;
        let inv_grid = self.cfg.inv_grid();
        let truth_g: Vec<f64> = inv_grid.nodes().iter().map(|y| sources::mean_g1(*y)).collect();
        let truth_s: Vec<f64> = inv_grid
            .nodes()
            .iter()
            .map(|y| sources::variance_sigma1(*y))
            .collect();
        let epsilons = self.cfg.inversion.epsilons.clone();
        let mut table: Vec<(String, Vec<f64>)> = self
            .targets()
            .iter()
            .map(|(label, _, _)| (label.to_string(), Vec::new()))
            .collect();
        for (eps_idx, eps) in epsilons.iter().enumerate() {
            let bundles: Vec<(Geometry, StatsBundle)> = geoms
                .iter()
                .enumerate()
                .map(|(k_idx, geom)| {
                    Ok((
                        geom.clone(),
                        io::read_bundle(&self.bundle_path("inv", k_idx, *eps, "json"))?,
                    ))
                })
                .collect::<Result<_, DriverError>>()?;
            for (t_idx, (label, file_label, section)) in self.targets().into_iter().enumerate() {
                let spec = ReconstructSpec {
                    gamma: section.gamma,
                    d: section.d,
                    beta: section.beta,
                    n_samples: section.n_samples,
                    burn_in: section.burn_in,
                    seed: self.cfg.run.seed,
                    chain_key: (t_idx as u64) * 100 + eps_idx as u64,
                    eps: *eps,
                };
                let summary = match t_idx {
                    0 => bayes::reconstruct_g(&bundles, inv_grid, 0, &spec, Some(&truth_g))?,
                    1 => bayes::reconstruct_g(&bundles, inv_grid, 1, &spec, Some(&truth_g))?,
                    2 => bayes::reconstruct_sigma(&bundles, inv_grid, (0, 0), &spec, Some(&truth_s))?,
                    3 => bayes::reconstruct_sigma(&bundles, inv_grid, (1, 1), &spec, Some(&truth_s))?,
                    _ => bayes::reconstruct_sigma(&bundles, inv_grid, (0, 1), &spec, Some(&truth_s))?,
                };
                io::write_posterior_csv(
                    &self.path(format!("posterior/{file_label}_eps{eps}.csv")),
                    &self.prov,
                    &summary,
                )?;
                io::write_json(
                    &self.path(format!("posterior/{file_label}_eps{eps}.json")),
                    &self.prov,
                    &serde_json::json!({
                        "label": label,
                        "epsilon": eps,
                        "acceptance_rate": summary.acceptance_rate,
                        "rel_l2_error": summary.rel_l2_error,
                        "n_negative_cells": summary.n_negative_cells,
                        "grid": summary.grid,
                    }),
                )?;
                table[t_idx].1.push(summary.rel_l2_error.unwrap_or(f64::NAN));
            }
        }
        io::write_recon_table(
            &self.path("tables/reconstruction_errors.csv"),
            &self.prov,
            &epsilons,
            &table,
        )?;
        Ok(())
    }

    /// `verify`: the full property suite with a machine-readable report.
    /// Returns `Suite` if any check fails.
    pub fn cmd_verify(&self) -> Result<(), DriverError> {
        let checks = verify::full_suite(self.cfg.run.seed);
        let passed = checks.iter().all(|c| c.passed);
        io::write_json(
            &self.path("verify/report.json"),
            &self.prov,
            &serde_json::json!({
                "passed": passed,
                "checks": checks,
            }),
        )?;
        for c in &checks {
            println!(
                "{} {:<24} metric {:<12.4e} threshold {:<10.4e} [{:.2}s] {}",
                if c.passed { "PASS" } else { "FAIL" },
                c.name,
                c.metric,
                c.threshold,
                c.seconds,
                c.detail
            );
        }
        if passed {
            Ok(())
        } else {
            let failing: Vec<&str> = checks
                .iter()
                .filter(|c| !c.passed)
                .map(|c| c.name.as_str())
                .collect();
            Err(DriverError::Suite(failing.join(", ")))
        }
    }

    fn write_config_mirror(&self) -> Result<(), DriverError> {
        io::write_json(&self.path("config.json"), &self.prov, &self.cfg)?;
        let toml_text =
            toml::to_string_pretty(&self.cfg).map_err(|e| DriverError::Validation(e.to_string()))?;
        io::write_text(&self.path("config.toml"), &toml_text)?;
        Ok(())
    }
}
