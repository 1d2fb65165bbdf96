//! Uniform tensor grids over the source square and scalar fields sampled on
//! them.

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GridError {
    #[error("grid must have a > 0 and at least one cell per direction")]
    InvalidSpec,
    #[error("{role:?} field must be nonnegative, found {value} at node {node}")]
    NegativeSigma {
        role: FieldRole,
        node: usize,
        value: f64,
    },
    #[error("field has {got} values, grid has {expect} nodes")]
    LengthMismatch { got: usize, expect: usize },
}

/// Uniform `(n1+1) x (n2+1)` tensor grid on the closed square `[-a, a]^2`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GridSpec {
    pub a: f64,
    pub n1: usize,
    pub n2: usize,
}

impl GridSpec {
    pub fn new(a: f64, n1: usize, n2: usize) -> Result<Self, GridError> {
        if !(a > 0.0) || n1 == 0 || n2 == 0 {
            return Err(GridError::InvalidSpec);
        }
        Ok(Self { a, n1, n2 })
    }

    pub fn n_nodes(&self) -> usize {
        (self.n1 + 1) * (self.n2 + 1)
    }

    /// Grid spacings `(dy1, dy2)` with `dy = 2a/n`.
    pub fn spacing(&self) -> (f64, f64) {
        (2.0 * self.a / self.n1 as f64, 2.0 * self.a / self.n2 as f64)
    }

    pub fn node(&self, i: usize, j: usize) -> [f64; 2] {
        let (d1, d2) = self.spacing();
        [-self.a + i as f64 * d1, -self.a + j as f64 * d2]
    }

    /// Flat index layout: `idx = i * (n2 + 1) + j`.
    pub fn node_flat(&self, idx: usize) -> [f64; 2] {
        self.node(idx / (self.n2 + 1), idx % (self.n2 + 1))
    }

    /// Tensor trapezoid weight of node `(i, j)`: `(dy1 dy2 / 4) * mult` with
    /// corner/edge/interior multiplicity 1/2/4. Summing `w_n f_n` over nodes
    /// reproduces the cell-corner form of the trapezoid rule.
    pub fn weight(&self, i: usize, j: usize) -> f64 {
        let (d1, d2) = self.spacing();
        let mi = if i == 0 || i == self.n1 { 1.0 } else { 2.0 };
        let mj = if j == 0 || j == self.n2 { 1.0 } else { 2.0 };
        0.25 * d1 * d2 * mi * mj
    }

    pub fn weights(&self) -> Vec<f64> {
        let mut w = Vec::with_capacity(self.n_nodes());
        for i in 0..=self.n1 {
            for j in 0..=self.n2 {
                w.push(self.weight(i, j));
            }
        }
        w
    }

    pub fn nodes(&self) -> Vec<[f64; 2]> {
        (0..self.n_nodes()).map(|p| self.node_flat(p)).collect()
    }

    /// White-noise variance per node that makes the discrete stochastic
    /// integral reproduce the continuum isometry `E|∫ f dW|^2 = ∫ f^2`
    /// (interior nodes exactly; boundary nodes carry the usual trapezoid
    /// deficit).
    pub fn isometry_dt(&self) -> f64 {
        let (d1, d2) = self.spacing();
        1.0 / (d1 * d2)
    }
}

/// What a scalar grid field represents.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FieldRole {
    /// Source mean g.
    G,
    /// Source standard deviation sigma (>= 0).
    Sigma,
    /// Source variance sigma^2 (>= 0).
    SigmaSq,
}

/// Real scalar field sampled on the nodes of a [`GridSpec`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SourceField {
    pub grid: GridSpec,
    pub role: FieldRole,
    values: Vec<f64>,
}

impl SourceField {
    pub fn new(grid: GridSpec, role: FieldRole, values: Vec<f64>) -> Result<Self, GridError> {
        if values.len() != grid.n_nodes() {
            return Err(GridError::LengthMismatch {
                got: values.len(),
                expect: grid.n_nodes(),
            });
        }
        if matches!(role, FieldRole::Sigma | FieldRole::SigmaSq) {
            for (node, &v) in values.iter().enumerate() {
                if !(v >= 0.0) {
                    return Err(GridError::NegativeSigma {
                        role,
                        node,
                        value: v,
                    });
                }
            }
        }
        Ok(Self { grid, role, values })
    }

    pub fn from_fn(
        grid: GridSpec,
        role: FieldRole,
        f: impl Fn([f64; 2]) -> f64,
    ) -> Result<Self, GridError> {
        let values = (0..grid.n_nodes()).map(|p| f(grid.node_flat(p))).collect();
        Self::new(grid, role, values)
    }

    pub fn zeros(grid: GridSpec, role: FieldRole) -> Self {
        Self {
            grid,
            role,
            values: vec![0.0; grid.n_nodes()],
        }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn value_flat(&self, idx: usize) -> f64 {
        self.values[idx]
    }
}
