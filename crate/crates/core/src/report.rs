//! Sampling configurations and residual reports shared by the identity
//! suites and the command-line front end.

use serde::{Deserialize, Serialize};
use serde_json::Value;

/// Relative residual |lhs - rhs| / (1 + max(|lhs|, |rhs|)).
///
/// This is the single residual convention used by every identity suite.
pub fn residual(lhs_minus_rhs_abs: f64, lhs_abs: f64, rhs_abs: f64) -> f64 {
    lhs_minus_rhs_abs / (1.0 + lhs_abs.max(rhs_abs))
}

/// Sampling plan for the Coxeter identity suite.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SampleSpec {
    /// Seed of the counter-based generator; sub-streams are derived from it.
    pub seed: u64,
    /// Samples drawn per (multiplicity, time) pair.
    pub samples: usize,
    /// Multiplicities to sweep. Positive entries require `dim == 1`.
    pub mu_list: Vec<f64>,
    /// Time parameters to sweep.
    pub t_list: Vec<f64>,
    /// Dimension of the argument points.
    pub dim: usize,
    /// Half-width of the box the complex coordinates of z are drawn from.
    pub z_box: f64,
    /// Half-width of the interval the real coordinates of q are drawn from.
    pub q_box: f64,
}

impl Default for SampleSpec {
    fn default() -> Self {
        SampleSpec {
            seed: 42,
            samples: 500,
            mu_list: vec![0.0, 0.5, 1.0, 2.3],
            t_list: vec![0.25, 1.0, 4.0],
            dim: 1,
            z_box: 0.7,
            q_box: 1.2,
        }
    }
}

/// Sampling plan for the SU(2) identity suite.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LieSampleSpec {
    /// Seed of the counter-based generator; sub-streams are derived from it.
    pub seed: u64,
    /// Samples drawn per time parameter.
    pub samples: usize,
    /// Time parameters to sweep.
    pub t_list: Vec<f64>,
    /// Half-width of the box the entries of the traceless exponent of the
    /// SL(2, C) argument are drawn from.
    pub g_scale: f64,
    /// Absolute tail-bound target for every heat-kernel evaluation.
    pub truncation_tol: f64,
}

impl Default for LieSampleSpec {
    fn default() -> Self {
        LieSampleSpec {
            seed: 42,
            samples: 200,
            t_list: vec![0.5, 1.0, 2.0],
            g_scale: 1.0,
            truncation_tol: 1e-13,
        }
    }
}

/// Residual statistics for one verified identity.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct IdentityStat {
    /// Short stable identifier, e.g. `"b-from-a"`.
    pub id: String,
    /// The relation in formula form, so reports are self-documenting.
    pub eq_ref: String,
    /// Largest residual over the sweep.
    pub max_residual: f64,
    /// Mean residual over the sweep.
    pub mean_residual: f64,
    /// The sample realizing `max_residual`.
    pub worst_point: Value,
}

/// Outcome of an identity sweep: one entry per verified relation.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct IdentityReport {
    /// What was verified, e.g. `"coxeter-kernel-identities"`.
    pub label: String,
    /// Residual statistics per identity.
    pub entries: Vec<IdentityStat>,
}

impl IdentityReport {
    /// Largest residual across all entries.
    pub fn max_residual(&self) -> f64 {
        self.entries.iter().map(|e| e.max_residual).fold(0.0, f64::max)
    }

    /// True when every entry stays at or below `tol`.
    pub fn passes(&self, tol: f64) -> bool {
        self.entries.iter().all(|e| e.max_residual <= tol)
    }
}

/// Accumulates residuals for one identity and remembers the worst sample.
#[derive(Debug, Clone)]
pub struct ResidualTracker {
    id: String,
    eq_ref: String,
    max: f64,
    sum: f64,
    count: usize,
    worst: Value,
}

impl ResidualTracker {
    pub fn new(id: &str, eq_ref: &str) -> Self {
        ResidualTracker {
            id: id.to_string(),
            eq_ref: eq_ref.to_string(),
            max: 0.0,
            sum: 0.0,
            count: 0,
            worst: Value::Null,
        }
    }

    /// Records one residual; `point` describes the sample it came from.
    pub fn record(&mut self, residual: f64, point: impl FnOnce() -> Value) {
        self.sum += residual;
        self.count += 1;
        if residual >= self.max {
            self.max = residual;
            self.worst = point();
        }
    }

    pub fn into_stat(self) -> IdentityStat {
        IdentityStat {
            id: self.id,
            eq_ref: self.eq_ref,
            max_residual: self.max,
            mean_residual: if self.count == 0 { 0.0 } else { self.sum / self.count as f64 },
            worst_point: self.worst,
        }
    }
}
