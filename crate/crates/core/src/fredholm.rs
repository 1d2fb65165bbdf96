//! Dense discrete forward operators mapping source grids to retrieval-layer
//! data vectors, plus the raw statistical kernel rows they are built from.
//!
//! Mean channel, per measurement point x and reference index ℓ:
//!   T(g) = Y0(k r_ℓ) * (1/4)∫ Y0(k|x-y|) g dy - J0(k r_ℓ) * (-1/4)∫ J0(k|x-y|) g dy.
//! Variance channel, per point and reference pair (ℓ1, ℓ2):
//!   T(σ²) combines the raw kernels (1/16) Y0², (1/16) J0², -(1/16) Y0 J0
//!   with the same Bessel coefficients as the 3x3 retrieval matrix rows.

use serde::{Deserialize, Serialize};
use std::io::Write;
use thiserror::Error;

use crate::geometry::Geometry;
use crate::grid::GridSpec;
use crate::specfun;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FredholmError {
    #[error("evaluation point ({0}, {1}) lies inside the closed source square")]
    PointInsideSupport(f64, f64),
    #[error("operator has {cols} columns, field vector has {got}")]
    DimensionMismatch { cols: usize, got: usize },
    #[error("operators disagree in column count: {0} vs {1}")]
    StackMismatch(usize, usize),
    #[error(transparent)]
    SpecFun(#[from] crate::specfun::SpecFunError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OperatorKind {
    Mean,
    Variance,
}

/// Row provenance: which point and reference indices produced the row.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RowMeta {
    pub arc: usize,
    pub point: usize,
    pub theta: f64,
    pub k: f64,
    /// Reference indices, 1-based; mean rows carry (ℓ, ℓ).
    pub ells: (usize, usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ColMeta {
    pub node: usize,
    pub weight: f64,
}

/// Dense row-major operator with trapezoid weights folded into the entries.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DiscreteOperator {
    pub kind: OperatorKind,
    pub n_rows: usize,
    pub n_cols: usize,
    pub matrix: Vec<f64>,
    pub row_meta: Vec<RowMeta>,
    pub col_meta: Vec<ColMeta>,
}

fn check_outside(grid: &GridSpec, x: [f64; 2]) -> Result<(), FredholmError> {
    if x[0].abs().max(x[1].abs()) <= grid.a {
        return Err(FredholmError::PointInsideSupport(x[0], x[1]));
    }
    Ok(())
}

/// Grid-weighted kernel rows of the mean channel at point x:
/// (Re G row, Im G row) with Re G = Y0/4 and Im G = -J0/4.
pub fn kernel_row_mean(
    grid: &GridSpec,
    x: [f64; 2],
    k: f64,
) -> Result<(Vec<f64>, Vec<f64>), FredholmError> {
    check_outside(grid, x)?;
    let nn = grid.n_nodes();
    let mut re = Vec::with_capacity(nn);
    let mut im = Vec::with_capacity(nn);
    for n in 0..nn {
        let y = grid.node_flat(n);
        let w = grid.weight(n / (grid.n2 + 1), n % (grid.n2 + 1));
        let t = k * (x[0] - y[0]).hypot(x[1] - y[1]);
        let (j0, y0) = specfun::j0y0_raw(t);
        re.push(w * 0.25 * y0);
        im.push(w * -0.25 * j0);
    }
    Ok((re, im))
}

/// Grid-weighted raw kernel rows of the variance channel at point x:
/// (variance-of-Re (1/16) Y0², variance-of-Im (1/16) J0²,
///  covariance -(1/16) Y0 J0).
pub fn kernel_rows_variance(
    grid: &GridSpec,
    x: [f64; 2],
    k: f64,
) -> Result<(Vec<f64>, Vec<f64>, Vec<f64>), FredholmError> {
    check_outside(grid, x)?;
    let nn = grid.n_nodes();
    let mut re2 = Vec::with_capacity(nn);
    let mut im2 = Vec::with_capacity(nn);
    let mut cross = Vec::with_capacity(nn);
    for n in 0..nn {
        let y = grid.node_flat(n);
        let w = grid.weight(n / (grid.n2 + 1), n % (grid.n2 + 1));
        let t = k * (x[0] - y[0]).hypot(x[1] - y[1]);
        let (j0, y0) = specfun::j0y0_raw(t);
        re2.push(w * y0 * y0 / 16.0);
        im2.push(w * j0 * j0 / 16.0);
        cross.push(w * -y0 * j0 / 16.0);
    }
    Ok((re2, im2, cross))
}

/// Mean-channel operator for reference index `ell` (0-based): one row per
/// measurement point, T row = Y0(k r_ℓ) ReG-row - J0(k r_ℓ) ImG-row.
pub fn assemble_mean_operator(
    geom: &Geometry,
    grid: &GridSpec,
    ell: usize,
) -> Result<DiscreteOperator, FredholmError> {
    let k = geom.k.k;
    let nn = grid.n_nodes();
    let mut matrix = Vec::with_capacity(geom.n_points() * nn);
    let mut row_meta = Vec::with_capacity(geom.n_points());
    for (p, pt) in geom.points.iter().enumerate() {
        let (re_row, im_row) = kernel_row_mean(grid, pt.xy, k)?;
        let (j0, y0) = specfun::j0y0_raw(k * geom.r_distance(pt.arc, ell, pt.theta));
        for n in 0..nn {
            matrix.push(y0 * re_row[n] - j0 * im_row[n]);
        }
        row_meta.push(RowMeta {
            arc: pt.arc,
            point: p,
            theta: pt.theta,
            k,
            ells: (ell + 1, ell + 1),
        });
    }
    Ok(DiscreteOperator {
        kind: OperatorKind::Mean,
        n_rows: geom.n_points(),
        n_cols: nn,
        matrix,
        row_meta,
        col_meta: col_meta(grid),
    })
}

/// Variance-channel operator for the reference pair `(ell1, ell2)` (0-based):
/// row = Y0(kr_1)Y0(kr_2) * re2 + J0(kr_1)J0(kr_2) * im2
///     - (Y0(kr_1)J0(kr_2) + Y0(kr_2)J0(kr_1)) * cross,
/// where the cross row already carries the -1/16 sign of Re G Im G, i.e. it
/// evaluates Cov(Re u, Im u) when applied to sigma^2.
pub fn assemble_variance_operator(
    geom: &Geometry,
    grid: &GridSpec,
    ell1: usize,
    ell2: usize,
) -> Result<DiscreteOperator, FredholmError> {
    let k = geom.k.k;
    let nn = grid.n_nodes();
    let mut matrix = Vec::with_capacity(geom.n_points() * nn);
    let mut row_meta = Vec::with_capacity(geom.n_points());
    for (p, pt) in geom.points.iter().enumerate() {
        let (re2, im2, cross) = kernel_rows_variance(grid, pt.xy, k)?;
        let (ja, ya) = specfun::j0y0_raw(k * geom.r_distance(pt.arc, ell1, pt.theta));
        let (jb, yb) = specfun::j0y0_raw(k * geom.r_distance(pt.arc, ell2, pt.theta));
        let cyy = ya * yb;
        let cjj = ja * jb;
        let cyj = ya * jb + yb * ja;
        for n in 0..nn {
            matrix.push(cyy * re2[n] + cjj * im2[n] - cyj * cross[n]);
        }
        row_meta.push(RowMeta {
            arc: pt.arc,
            point: p,
            theta: pt.theta,
            k,
            ells: (ell1 + 1, ell2 + 1),
        });
    }
    Ok(DiscreteOperator {
        kind: OperatorKind::Variance,
        n_rows: geom.n_points(),
        n_cols: nn,
        matrix,
        row_meta,
        col_meta: col_meta(grid),
    })
}

fn col_meta(grid: &GridSpec) -> Vec<ColMeta> {
    grid.weights()
        .into_iter()
        .enumerate()
        .map(|(node, weight)| ColMeta { node, weight })
        .collect()
}

/// Matrix-vector product of the operator with a flat grid field.
pub fn apply(op: &DiscreteOperator, field: &[f64]) -> Result<Vec<f64>, FredholmError> {
    if field.len() != op.n_cols {
        return Err(FredholmError::DimensionMismatch {
            cols: op.n_cols,
            got: field.len(),
        });
    }
    let mut out = Vec::with_capacity(op.n_rows);
    for r in 0..op.n_rows {
        let row = &op.matrix[r * op.n_cols..(r + 1) * op.n_cols];
        out.push(row.iter().zip(field).map(|(a, b)| a * b).sum());
    }
    Ok(out)
}

/// Row-wise stack of operators sharing a column space (multi-frequency
/// systems are stacked in the listed order).
pub fn stack(ops: &[DiscreteOperator]) -> Result<DiscreteOperator, FredholmError> {
    let first = &ops[0];
    let mut out = DiscreteOperator {
        kind: first.kind,
        n_rows: 0,
        n_cols: first.n_cols,
        matrix: Vec::new(),
        row_meta: Vec::new(),
        col_meta: first.col_meta.clone(),
    };
    for op in ops {
        if op.n_cols != first.n_cols {
            return Err(FredholmError::StackMismatch(first.n_cols, op.n_cols));
        }
        out.n_rows += op.n_rows;
        out.matrix.extend_from_slice(&op.matrix);
        out.row_meta.extend_from_slice(&op.row_meta);
    }
    Ok(out)
}

/// Binary export: row-major little-endian f64 entries plus a JSON sidecar
/// describing the layout.
pub fn export(
    op: &DiscreteOperator,
    mut bin: impl Write,
    mut sidecar: impl Write,
) -> std::io::Result<()> {
    for v in &op.matrix {
        bin.write_all(&v.to_le_bytes())?;
    }
    let meta = serde_json::json!({
        "kind": op.kind,
        "n_rows": op.n_rows,
        "n_cols": op.n_cols,
        "layout": "row-major f64 little-endian",
        "row_meta": op.row_meta,
        "col_meta": op.col_meta,
    });
    sidecar.write_all(serde_json::to_string_pretty(&meta).unwrap().as_bytes())
}
