//! File emitters and loaders. Every emitted file opens with a provenance
//! record (config hash, seed, artifact version); none carries a timestamp,
//! so fixed-seed reruns are byte-identical.

use serde::{Deserialize, Serialize};
use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::Path;

use crate::bayes::PosteriorSummary;
use crate::forward::StatsBundle;
use crate::phase_retrieval::RetrievedStats;

pub const ARTIFACT_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Provenance {
    pub config_hash: String,
    pub seed: u64,
    pub version: String,
}

impl Provenance {
    pub fn new(config_hash: impl Into<String>, seed: u64) -> Self {
        Self {
            config_hash: config_hash.into(),
            seed,
            version: ARTIFACT_VERSION.to_string(),
        }
    }

    fn csv_header(&self) -> String {
        format!(
            "# config_hash={}\n# seed={}\n# version={}\n",
            self.config_hash, self.seed, self.version
        )
    }
}

fn write_atomic(path: &Path, bytes: &[u8]) -> std::io::Result<()> {
    if let Some(parent) = path.parent() {
        fs::create_dir_all(parent)?;
    }
    let mut f = fs::File::create(path)?;
    f.write_all(bytes)?;
    f.flush()
}

/// JSON envelope shared by all JSON artifacts.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Envelope<T> {
    pub provenance: Provenance,
    pub payload: T,
}

pub fn write_json<T: Serialize>(
    path: &Path,
    prov: &Provenance,
    payload: &T,
) -> std::io::Result<()> {
    let env = Envelope {
        provenance: prov.clone(),
        payload,
    };
    let mut text = serde_json::to_string_pretty(&env).expect("payload serializes");
    text.push('\n');
    write_atomic(path, text.as_bytes())
}

pub fn read_bundle(path: &Path) -> std::io::Result<StatsBundle> {
    let text = fs::read_to_string(path)?;
    let env: Envelope<StatsBundle> = serde_json::from_str(&text)
        .map_err(|e| std::io::Error::new(std::io::ErrorKind::InvalidData, e))?;
    Ok(env.payload)
}

/// Fixed column schema of the statistics CSV, one row per measurement point.
pub const BUNDLE_CSV_COLUMNS: &str = "j,theta,k,e_re_u,e_im_u,abs_e_u,e_abs_u_sq,var_abs_u_sq,\
e_abs_v1_sq,var_abs_v1_sq,cov_u_v1,e_abs_v2_sq,var_abs_v2_sq,cov_u_v2,cov_v1_v2,\
abs_e_v1,abs_e_v2,var_re_u,var_im_u,cov_re_im_u";

pub fn write_bundle_csv(
    path: &Path,
    prov: &Provenance,
    bundle: &StatsBundle,
) -> std::io::Result<()> {
    let mut out = prov.csv_header();
    let _ = writeln!(out, "{BUNDLE_CSV_COLUMNS}");
    for (pt, s) in bundle.points.iter().zip(&bundle.stats) {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
            pt.arc + 1,
            pt.theta,
            bundle.k.k,
            s.e_u[0],
            s.e_u[1],
            s.abs_e_u,
            s.e_abs_u_sq,
            s.var_abs_u_sq,
            s.e_abs_v_sq[0],
            s.var_abs_v_sq[0],
            s.cov_u_v[0],
            s.e_abs_v_sq[1],
            s.var_abs_v_sq[1],
            s.cov_u_v[1],
            s.cov_v1_v2,
            s.abs_e_v[0],
            s.abs_e_v[1],
            s.var_re_u,
            s.var_im_u,
            s.cov_re_im_u
        );
    }
    write_atomic(path, out.as_bytes())
}

pub const RETRIEVED_CSV_COLUMNS: &str =
    "j,theta,k,e_re,e_im,var_re,var_im,cov_re_im,det_a,det_d";

pub fn write_retrieved_csv(
    path: &Path,
    prov: &Provenance,
    retrieved: &RetrievedStats,
) -> std::io::Result<()> {
    let mut out = prov.csv_header();
    let _ = writeln!(out, "{RETRIEVED_CSV_COLUMNS}");
    for (pt, row) in retrieved.points.iter().zip(&retrieved.rows) {
        match row {
            Some(r) => {
                let _ = writeln!(
                    out,
                    "{},{},{},{},{},{},{},{},{},{}",
                    pt.arc + 1,
                    pt.theta,
                    retrieved.k.k,
                    r.e_re,
                    r.e_im,
                    r.var_re,
                    r.var_im,
                    r.cov_re_im,
                    r.det_a,
                    r.det_d
                );
            }
            None => {
                let _ = writeln!(
                    out,
                    "{},{},{},NaN,NaN,NaN,NaN,NaN,NaN,NaN",
                    pt.arc + 1,
                    pt.theta,
                    retrieved.k.k
                );
            }
        }
    }
    write_atomic(path, out.as_bytes())
}

/// Error table shaped like the retrieval-error tables: one row per noise
/// level, one column per wavenumber label.
pub fn write_error_table(
    path: &Path,
    prov: &Provenance,
    k_labels: &[String],
    rows: &[(f64, Vec<f64>)],
) -> std::io::Result<()> {
    let mut out = prov.csv_header();
    let _ = writeln!(out, "epsilon,{}", k_labels.join(","));
    for (eps, vals) in rows {
        let cells: Vec<String> = vals.iter().map(|v| format!("{v}")).collect();
        let _ = writeln!(out, "{},{}", eps, cells.join(","));
    }
    write_atomic(path, out.as_bytes())
}

/// Reconstruction error table: five labeled rows, one column per noise level.
pub fn write_recon_table(
    path: &Path,
    prov: &Provenance,
    epsilons: &[f64],
    rows: &[(String, Vec<f64>)],
) -> std::io::Result<()> {
    let mut out = prov.csv_header();
    let eps_cols: Vec<String> = epsilons.iter().map(|e| format!("eps={e}")).collect();
    let _ = writeln!(out, "data,{}", eps_cols.join(","));
    for (label, vals) in rows {
        let cells: Vec<String> = vals.iter().map(|v| format!("{v}")).collect();
        let _ = writeln!(out, "{},{}", label, cells.join(","));
    }
    write_atomic(path, out.as_bytes())
}

/// Posterior summary CSV: grid of mean and grid of standard deviation, one
/// row per node.
pub fn write_posterior_csv(
    path: &Path,
    prov: &Provenance,
    summary: &PosteriorSummary,
) -> std::io::Result<()> {
    let mut out = prov.csv_header();
    let _ = writeln!(out, "node,y1,y2,mean,sd");
    let grid = summary.grid.expect("posterior written with grid info");
    for (n, (m, sd)) in summary.mean.iter().zip(&summary.pointwise_sd).enumerate() {
        let y = grid.node_flat(n);
        let _ = writeln!(out, "{},{},{},{},{}", n, y[0], y[1], m, sd);
    }
    write_atomic(path, out.as_bytes())
}

pub fn write_text(path: &Path, text: &str) -> std::io::Result<()> {
    write_atomic(path, text.as_bytes())
}
