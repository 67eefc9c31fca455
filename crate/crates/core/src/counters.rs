//! Exact operation accounting and the analytical energy model.
//!
//! Counting convention: every min-sum kernel evaluation costs one
//! comparison and every real-field addition of two messages costs one
//! addition; sign and magnitude manipulation inside the kernel is free.
//! Output extraction (summing `L_0 + Re_0`), hard-decision thresholding,
//! frozen-prior assignments, and the GF(2) validity check are not message
//! arithmetic and are never counted. Decoders route all counted operations
//! through [`Kernel`], so the tallies are exact by construction.

use serde::Serialize;
use thiserror::Error;

use crate::llr::LlrArith;
use crate::memory::MemoryModel;

/// Operation tallies for one decode: totals plus per-iteration snapshots.
///
/// All counts are monotone while a decode runs; per-iteration entries are
/// the deltas between consecutive [`mark_iteration`](Self::mark_iteration)
/// calls.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct OpCounters {
    /// Real-field additions across all iterations.
    pub additions: u64,
    /// Min-sum kernel evaluations across all iterations.
    pub comparisons: u64,
    /// Tree nodes entered across all iterations (tree-traversal decoder
    /// only; zero for the flat schedules).
    pub node_visits: u64,
    /// Per-iteration deltas, one entry per executed iteration.
    pub per_iteration: Vec<IterationOps>,
}

/// Operation deltas of a single iteration.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct IterationOps {
    /// Real-field additions in this iteration.
    pub additions: u64,
    /// Min-sum kernel evaluations in this iteration.
    pub comparisons: u64,
    /// Tree nodes entered in this iteration.
    pub node_visits: u64,
}

impl OpCounters {
    /// Closes the current iteration, recording the tally delta since the
    /// previous mark.
    pub fn mark_iteration(&mut self) {
        let done: IterationOps = self
            .per_iteration
            .iter()
            .fold(IterationOps::default(), |acc, it| IterationOps {
                additions: acc.additions + it.additions,
                comparisons: acc.comparisons + it.comparisons,
                node_visits: acc.node_visits + it.node_visits,
            });
        self.per_iteration.push(IterationOps {
            additions: self.additions - done.additions,
            comparisons: self.comparisons - done.comparisons,
            node_visits: self.node_visits - done.node_visits,
        });
    }
}

/// Counting wrapper over an [`LlrArith`]: each call performs the operation
/// and charges it to the borrowed counters.
pub struct Kernel<'a, A: LlrArith> {
    arith: &'a A,
    counts: &'a mut OpCounters,
}

impl<'a, A: LlrArith> Kernel<'a, A> {
    /// Wraps `arith` so that operations accumulate into `counts`.
    pub fn new(arith: &'a A, counts: &'a mut OpCounters) -> Self {
        Kernel { arith, counts }
    }

    /// Counted min-sum kernel (one comparison).
    #[inline]
    pub fn f(&mut self, a: A::Llr, b: A::Llr) -> A::Llr {
        self.counts.comparisons += 1;
        self.arith.f_minsum(a, b)
    }

    /// Counted addition (one addition).
    #[inline]
    pub fn add(&mut self, a: A::Llr, b: A::Llr) -> A::Llr {
        self.counts.additions += 1;
        self.arith.add(a, b)
    }

    /// Records entering one tree node.
    #[inline]
    pub fn visit_node(&mut self) {
        self.counts.node_visits += 1;
    }

    /// The wrapped arithmetic, for uncounted helpers (priors, extraction).
    #[inline]
    pub fn arith(&self) -> &A {
        self.arith
    }
}

/// Closed-form per-iteration operation counts of the full (unpruned)
/// schedules for block length `2^n`: `(additions, comparisons)`.
pub fn predicted_iteration_ops(model: MemoryModel, n: usize) -> (u64, u64) {
    let len = 1u64 << n;
    let n = n as u64;
    match model {
        // Each of the Nn/2 unit graphs is updated by two left-pass and two
        // right-pass equations, each one addition and one comparison.
        MemoryModel::Bp | MemoryModel::Scan => (2 * len * n, 2 * len * n),
        // The left sweep adds a right message only at the first recomputed
        // stage, saving Nn/2 - N/2 additions per iteration over SCAN.
        MemoryModel::Rcsc => (3 * len * n / 2 + len / 2, 2 * len * n),
    }
}

/// Errors from evaluating the energy model.
#[derive(Debug, Error)]
pub enum EnergyError {
    /// Per-operation energies must be positive.
    #[error("per-operation energies must be positive, got e_add={e_add}, e_cmp={e_cmp}")]
    BadWeights { e_add: f64, e_cmp: f64 },
    /// Average iteration counts must be at least 1.
    #[error("average iteration counts must be >= 1, got i_av={i_av}, i_av_bp={i_av_bp}")]
    BadIterations { i_av: f64, i_av_bp: f64 },
    /// The reduced decoder performs no operations, so the ratio diverges.
    #[error("reduced-decoder operation counts are zero")]
    ZeroWork,
}

/// Abstract-unit energy model comparing BP against a reduced decoder.
///
/// The reduced decoder spends `i_av * (n_add * e_add + n_cmp * e_cmp)` where
/// `n_add`/`n_cmp` are its measured per-iteration counts; BP spends
/// `2Nn * (e_add + e_cmp) * i_av_bp`. Per-operation energies default to 1
/// since any real weighting is hardware-specific.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct EnergyModel {
    /// Energy per addition (abstract units).
    pub e_add: f64,
    /// Energy per comparison (abstract units).
    pub e_cmp: f64,
}

impl Default for EnergyModel {
    fn default() -> Self {
        EnergyModel {
            e_add: 1.0,
            e_cmp: 1.0,
        }
    }
}

impl EnergyModel {
    /// Energy of one decode averaging `i_av` iterations that each perform
    /// `n_add` additions and `n_cmp` comparisons.
    pub fn energy(&self, n_add: u64, n_cmp: u64, i_av: f64) -> f64 {
        i_av * (n_add as f64 * self.e_add + n_cmp as f64 * self.e_cmp)
    }

    /// Ratio of BP energy to a reduced decoder's energy for block length
    /// `2^n`, with measured per-iteration counts `(n_add, n_cmp)` for the
    /// reduced decoder and average iteration counts for both.
    pub fn energy_ratio(
        &self,
        n: usize,
        n_add: u64,
        n_cmp: u64,
        i_av: f64,
        i_av_bp: f64,
    ) -> Result<f64, EnergyError> {
        if !(self.e_add > 0.0 && self.e_cmp > 0.0) {
            return Err(EnergyError::BadWeights {
                e_add: self.e_add,
                e_cmp: self.e_cmp,
            });
        }
        if !(i_av >= 1.0 && i_av_bp >= 1.0) {
            return Err(EnergyError::BadIterations { i_av, i_av_bp });
        }
        if n_add == 0 && n_cmp == 0 {
            return Err(EnergyError::ZeroWork);
        }
        let (bp_add, bp_cmp) = predicted_iteration_ops(MemoryModel::Bp, n);
        Ok(self.energy(bp_add, bp_cmp, i_av_bp) / self.energy(n_add, n_cmp, i_av))
    }
}
