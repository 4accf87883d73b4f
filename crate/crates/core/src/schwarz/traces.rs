use rand::distr::Open01;
use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::geometry::Layout;

/// Interface values indexed `[level][subdomain][slot]`.
///
/// Per-step drivers use a single level; waveform relaxation uses one level
/// per time node `t_0..t_M`.
#[derive(Debug, Clone, PartialEq)]
pub struct TraceSet {
    pub levels: Vec<Vec<Vec<f64>>>,
}

impl TraceSet {
    pub fn zeros(levels: usize, counts: &[usize]) -> Self {
        Self {
            levels: vec![counts.iter().map(|&c| vec![0.0; c]).collect(); levels],
        }
    }

    pub fn from_level(level: Vec<Vec<f64>>) -> Self {
        Self {
            levels: vec![level],
        }
    }

    pub fn len(&self) -> usize {
        self.levels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }

    pub fn level(&self, m: usize) -> &[Vec<f64>] {
        &self.levels[m]
    }

    pub fn counts(&self) -> Vec<usize> {
        self.levels
            .first()
            .map(|l| l.iter().map(Vec::len).collect())
            .unwrap_or_default()
    }

    pub fn max_abs(&self) -> f64 {
        self.levels
            .iter()
            .flatten()
            .flatten()
            .fold(0.0, |m, &x| m.max(x.abs()))
    }
}

/// Traces drawn uniformly from the open interval `(0, 1)`.
///
/// Entries are drawn level by level, subdomain by subdomain, slot by slot,
/// from a ChaCha8 stream seeded with `seed`.
pub fn random_trace_guess(layout: &Layout, levels: usize, seed: u64) -> TraceSet {
    let counts: Vec<usize> = layout.boxes.iter().map(|b| b.reads.len()).collect();
    random_traces(&counts, levels, seed)
}

pub fn random_traces(counts: &[usize], levels: usize, seed: u64) -> TraceSet {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    TraceSet {
        levels: (0..levels)
            .map(|_| {
                counts
                    .iter()
                    .map(|&c| (0..c).map(|_| rng.sample::<f64, _>(Open01)).collect())
                    .collect()
            })
            .collect(),
    }
}
