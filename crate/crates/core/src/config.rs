//! Experiment configuration: TOML files (with a JSON mirror), shipped
//! presets, validation, and the config hash stamped into every output file.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::f64::consts::PI;
use std::path::{Path, PathBuf};
use thiserror::Error;

use crate::geometry::{GeometryConfig, PolicyMode, Wavenumber};
use crate::grid::GridSpec;

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("cannot read config {path}: {source}")]
    Read {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("cannot parse config {path}: {message}")]
    Parse { path: PathBuf, message: String },
    #[error("config invalid: {0}")]
    Invalid(String),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GeometrySection {
    pub a: f64,
    pub tau: f64,
    pub m: usize,
    pub n_per_arc: usize,
    /// Wavenumbers as multiples x of pi/a (k = x pi / a, x >= 1).
    pub wavenumbers_x: Vec<f64>,
    /// Add the small wavenumber k* = pi/(30 a) to the set.
    pub include_k_star: bool,
    pub policy: PolicyMode,
}

impl GeometrySection {
    pub fn wavenumbers(&self) -> Vec<Wavenumber> {
        let mut ks = Vec::new();
        if self.include_k_star {
            ks.push(Wavenumber::small(self.a));
        }
        ks.extend(
            self.wavenumbers_x
                .iter()
                .map(|x| Wavenumber::regular(x * PI / self.a)),
        );
        ks
    }

    pub fn geometry_config(&self) -> GeometryConfig {
        GeometryConfig {
            a: self.a,
            tau: self.tau,
            m: self.m,
            n_per_arc: self.n_per_arc,
            wavenumbers: self.wavenumbers(),
            policy: self.policy,
        }
    }

    pub fn with_n_per_arc(&self, n_per_arc: usize) -> GeometryConfig {
        GeometryConfig {
            n_per_arc,
            ..self.geometry_config()
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SimulationSection {
    /// Simulation grid cells per direction (N_y1, N_y2).
    pub sim_grid: [usize; 2],
    /// Monte Carlo sample count.
    pub n_mc: usize,
    /// White-noise variance per node; omitted means the isometry-consistent
    /// 1/(dy1 dy2) implied by the simulation grid.
    pub dt: Option<f64>,
    /// Noise levels for the retrieval tables (a noiseless entry is always
    /// produced as well).
    pub epsilons: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TargetSection {
    pub gamma: f64,
    pub d: f64,
    pub beta: f64,
    pub n_samples: usize,
    pub burn_in: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InversionSection {
    /// Inversion grid cells per direction; strictly coarser than the
    /// simulation grid under the paper policy to avoid inverse crimes.
    pub inv_grid: [usize; 2],
    /// Measurement count per arc for the inversion data.
    pub n_per_arc: usize,
    /// Wavenumbers as multiples of pi/a for the multi-frequency stack.
    pub wavenumbers_x: Vec<f64>,
    pub epsilons: Vec<f64>,
    /// Prior/chain settings for the mean reconstruction rows.
    pub g: TargetSection,
    /// Settings for the diagonal variance rows F_{k,1,1}, F_{k,2,2}.
    pub sigma_diag: TargetSection,
    /// Settings for the cross row F_{k,1,2}.
    pub sigma_cross: TargetSection,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunSection {
    pub seed: u64,
    pub output_dir: PathBuf,
    /// Replace Monte Carlo bundles by exact-synthetic statistics.
    #[serde(default)]
    pub closed_loop: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentConfig {
    pub geometry: GeometrySection,
    pub simulation: SimulationSection,
    pub inversion: InversionSection,
    pub run: RunSection,
}

impl ExperimentConfig {
    pub fn load(path: &Path) -> Result<Self, ConfigError> {
        let text = std::fs::read_to_string(path).map_err(|source| ConfigError::Read {
            path: path.to_path_buf(),
            source,
        })?;
        let cfg: Self = if path.extension().is_some_and(|e| e == "json") {
            serde_json::from_str(&text).map_err(|e| ConfigError::Parse {
                path: path.to_path_buf(),
                message: e.to_string(),
            })?
        } else {
            toml::from_str(&text).map_err(|e| ConfigError::Parse {
                path: path.to_path_buf(),
                message: e.to_string(),
            })?
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn preset(mode: Preset) -> Self {
        let text = match mode {
            Preset::Paper => include_str!("../../../configs/paper.toml"),
            Preset::Desk | Preset::ClosedLoop => include_str!("../../../configs/desk.toml"),
        };
        let mut cfg: Self = toml::from_str(text).expect("shipped preset parses");
        if mode == Preset::ClosedLoop {
            cfg.run.closed_loop = true;
        }
        cfg.validate().expect("shipped preset validates");
        cfg
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        self.geometry
            .geometry_config()
            .validate()
            .map_err(|e| ConfigError::Invalid(e.to_string()))?;
        if self.simulation.n_mc < 2 {
            return Err(ConfigError::Invalid("n_mc must be at least 2".into()));
        }
        for eps in self
            .simulation
            .epsilons
            .iter()
            .chain(&self.inversion.epsilons)
        {
            if !(*eps >= 0.0) {
                return Err(ConfigError::Invalid(format!("negative epsilon {eps}")));
            }
        }
        if self.geometry.policy == PolicyMode::Paper
            && (self.inversion.inv_grid[0] >= self.simulation.sim_grid[0]
                || self.inversion.inv_grid[1] >= self.simulation.sim_grid[1])
        {
            return Err(ConfigError::Invalid(
                "inversion grid must be strictly coarser than the simulation grid".into(),
            ));
        }
        for x in &self.inversion.wavenumbers_x {
            if *x < 1.0 {
                return Err(ConfigError::Invalid(format!(
                    "inversion wavenumber multiple {x} below 1"
                )));
            }
        }
        for t in [
            &self.inversion.g,
            &self.inversion.sigma_diag,
            &self.inversion.sigma_cross,
        ] {
            if !(t.beta > 0.0 && t.beta <= 1.0) || t.burn_in >= t.n_samples {
                return Err(ConfigError::Invalid(
                    "chain sections need 0 < beta <= 1 and burn_in < n_samples".into(),
                ));
            }
        }
        Ok(())
    }

    pub fn sim_grid(&self) -> GridSpec {
        GridSpec::new(
            self.geometry.a,
            self.simulation.sim_grid[0],
            self.simulation.sim_grid[1],
        )
        .expect("validated")
    }

    pub fn inv_grid(&self) -> GridSpec {
        GridSpec::new(
            self.geometry.a,
            self.inversion.inv_grid[0],
            self.inversion.inv_grid[1],
        )
        .expect("validated")
    }

    pub fn dt(&self) -> f64 {
        self.simulation
            .dt
            .unwrap_or_else(|| self.sim_grid().isometry_dt())
    }

    /// SHA-256 over the canonical JSON form, hex-encoded.
    pub fn hash(&self) -> String {
        let canon = serde_json::to_string(self).expect("config serializes");
        let mut h = Sha256::new();
        h.update(canon.as_bytes());
        let out = h.finalize();
        out.iter().map(|b| format!("{b:02x}")).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Preset {
    Paper,
    Desk,
    ClosedLoop,
}

impl std::str::FromStr for Preset {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "paper" => Ok(Self::Paper),
            "desk" => Ok(Self::Desk),
            "closed-loop" => Ok(Self::ClosedLoop),
            other => Err(format!("unknown mode {other}; use paper|desk|closed-loop")),
        }
    }
}
