//! The four soft-output decoding algorithms and their shared iteration
//! driver.
//!
//! All decoders consume real channel LLRs, run up to `i_max` full
//! iterations of their message-passing schedule, and extract the same
//! outputs: per-bit soft LLRs `L_0 + Re_0` (channel belief plus extrinsic
//! refinement), the hard codeword estimate `x_hat` (ties decide 0), its
//! u-domain image `u_hat = x_hat * G`, and a validity flag (all frozen
//! positions of `u_hat` zero). With early stopping enabled a decode returns
//! after the first iteration whose hard estimate is a valid codeword;
//! validity is only ever checked between full iterations.
//!
//! The schedules:
//!
//! * [`Algorithm::Bp`]: flooding belief propagation — per iteration one
//!   left-to-right column sweep then one right-to-left sweep over the whole
//!   factor graph.
//! * [`Algorithm::Scan`]: the serial successive-cancellation traversal,
//!   keeping every right-going message (`Nn/2` of them) so each left update
//!   can use it.
//! * [`Algorithm::Rcsc`]: the same serial traversal, but inner-stage left
//!   updates omit the right-message term; only the root-level feedback
//!   survives between iterations, shrinking memory to `5N - 3` LLRs.
//! * [`Algorithm::SRcsc`]: RCSC on the code's binary tree with all-frozen
//!   subtrees returning certainty and all-information subtrees returning
//!   neutral belief immediately, without visiting their interiors.

mod bp;
mod rcsc;
mod scan;
mod srcsc;

use serde::Serialize;
use thiserror::Error;

use crate::code::PolarCode;
use crate::counters::{Kernel, OpCounters};
use crate::llr::{FixedArith, FloatArith, LlrArith, QuantError, QuantSpec};
use crate::memory::MemoryModel;

/// The decoding algorithm to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Algorithm {
    /// Flooding belief propagation.
    Bp,
    /// Serial soft cancelation with full right-message storage.
    Scan,
    /// Reduced-complexity soft cancelation (right messages dropped from
    /// inner-stage left updates).
    Rcsc,
    /// RCSC over the pruned code tree.
    SRcsc,
}

impl Algorithm {
    /// Every supported algorithm.
    pub const ALL: [Algorithm; 4] = [
        Algorithm::Bp,
        Algorithm::Scan,
        Algorithm::Rcsc,
        Algorithm::SRcsc,
    ];

    /// The stored-LLR accounting family this algorithm reports under.
    pub fn memory_model(self) -> MemoryModel {
        match self {
            Algorithm::Bp => MemoryModel::Bp,
            Algorithm::Scan => MemoryModel::Scan,
            Algorithm::Rcsc | Algorithm::SRcsc => MemoryModel::Rcsc,
        }
    }
}

impl std::fmt::Display for Algorithm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            Algorithm::Bp => "bp",
            Algorithm::Scan => "scan",
            Algorithm::Rcsc => "rcsc",
            Algorithm::SRcsc => "srcsc",
        };
        f.write_str(name)
    }
}

impl std::str::FromStr for Algorithm {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "bp" => Ok(Algorithm::Bp),
            "scan" => Ok(Algorithm::Scan),
            "rcsc" => Ok(Algorithm::Rcsc),
            "srcsc" => Ok(Algorithm::SRcsc),
            other => Err(format!(
                "unknown algorithm {other:?} (expected bp, scan, rcsc, or srcsc)"
            )),
        }
    }
}

/// Which LLR arithmetic the decoder runs in.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
#[serde(tag = "mode", rename_all = "lowercase")]
pub enum ArithMode {
    /// Double-precision floating point.
    Float,
    /// Saturating fixed point with the given quantization.
    Fixed(QuantSpec),
}

/// Full decoder configuration.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct DecoderConfig {
    /// Which algorithm to run.
    pub algorithm: Algorithm,
    /// Maximum number of iterations (at least 1).
    pub i_max: u32,
    /// LLR representation.
    pub arithmetic: ArithMode,
    /// Stop after the first iteration whose hard estimate is a valid
    /// codeword.
    pub early_stop: bool,
}

impl DecoderConfig {
    /// A floating-point configuration with early stopping enabled.
    pub fn new(algorithm: Algorithm, i_max: u32) -> Self {
        DecoderConfig {
            algorithm,
            i_max,
            arithmetic: ArithMode::Float,
            early_stop: true,
        }
    }

    /// Replaces the arithmetic mode.
    pub fn with_arithmetic(mut self, arithmetic: ArithMode) -> Self {
        self.arithmetic = arithmetic;
        self
    }

    /// Enables or disables early stopping.
    pub fn with_early_stop(mut self, early_stop: bool) -> Self {
        self.early_stop = early_stop;
        self
    }
}

/// Everything a decode produces.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DecodeResult {
    /// Hard codeword estimate.
    pub x_hat: Vec<u8>,
    /// u-domain image `x_hat * G`; information bits live at the code's
    /// information indices.
    pub u_hat: Vec<u8>,
    /// Per-bit soft LLRs (`L_0 + Re_0`) as real values.
    pub soft_out: Vec<f64>,
    /// Iterations actually executed.
    pub iterations_used: u32,
    /// Whether `x_hat` is a valid codeword.
    pub valid: bool,
    /// Exact operation tallies (totals and per iteration).
    pub ops: OpCounters,
    /// LLR slots this decode actually allocated.
    pub allocated_llrs: usize,
}

/// Errors from running a decoder.
#[derive(Debug, Error)]
pub enum DecodeError {
    /// The channel LLR vector does not have length `N`.
    #[error("channel LLRs: expected {expected} values, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    /// `i_max` is zero.
    #[error("decoder config: i_max must be at least 1")]
    BadIterationLimit,
    /// The fixed-point quantization spec is invalid.
    #[error(transparent)]
    Quant(#[from] QuantError),
}

/// LLR slots each algorithm truly allocates for block length `2^n`.
///
/// This equals the accounted convention for the serial decoders; BP keeps
/// distinct left and right matrices and therefore allocates `2N(n+1)` while
/// being conventionally accounted at `N(n+1)`.
pub fn allocated_llrs(algorithm: Algorithm, n: usize) -> usize {
    match algorithm {
        Algorithm::Bp => 2 * (1usize << n) * (n + 1),
        other => crate::memory::accounted_llrs(other.memory_model(), n),
    }
}

/// Decodes one frame of channel LLRs under the given configuration.
pub fn decode(
    code: &PolarCode,
    cfg: &DecoderConfig,
    channel_llrs: &[f64],
) -> Result<DecodeResult, DecodeError> {
    if channel_llrs.len() != code.len() {
        return Err(DecodeError::LengthMismatch {
            expected: code.len(),
            got: channel_llrs.len(),
        });
    }
    if cfg.i_max == 0 {
        return Err(DecodeError::BadIterationLimit);
    }
    match cfg.arithmetic {
        ArithMode::Float => Ok(decode_with(code, &FloatArith, cfg, channel_llrs)),
        ArithMode::Fixed(spec) => {
            let arith = FixedArith::new(spec)?;
            Ok(decode_with(code, &arith, cfg, channel_llrs))
        }
    }
}

/// Decodes with an explicit arithmetic implementation. The channel LLRs are
/// quantized through [`LlrArith::from_channel`] first.
pub fn decode_with<A: LlrArith>(
    code: &PolarCode,
    arith: &A,
    cfg: &DecoderConfig,
    channel_llrs: &[f64],
) -> DecodeResult {
    assert_eq!(channel_llrs.len(), code.len());
    let ch: Vec<A::Llr> = channel_llrs
        .iter()
        .map(|&y| arith.from_channel(y))
        .collect();
    match cfg.algorithm {
        Algorithm::Bp => drive(code, arith, cfg, &mut bp::BpEngine::new(code, arith, &ch)),
        Algorithm::Scan => drive(
            code,
            arith,
            cfg,
            &mut scan::ScanEngine::new(code, arith, &ch),
        ),
        Algorithm::Rcsc => drive(
            code,
            arith,
            cfg,
            &mut rcsc::RcscEngine::new(code, arith, &ch),
        ),
        Algorithm::SRcsc => drive(
            code,
            arith,
            cfg,
            &mut srcsc::SrcscEngine::new(code, arith, &ch),
        ),
    }
}

/// One decoding schedule, iterated by [`drive`].
pub(crate) trait Engine<A: LlrArith> {
    /// Runs one full message-passing iteration, charging all arithmetic to
    /// the kernel.
    fn run_iteration(&mut self, kernel: &mut Kernel<'_, A>);

    /// Writes the current soft outputs (`L_0 + Re_0`). Extraction is not
    /// message arithmetic and is not counted.
    fn write_soft(&self, arith: &A, out: &mut [A::Llr]);

    /// LLR slots this engine allocated.
    fn allocated_llrs(&self) -> usize;
}

fn drive<A: LlrArith, E: Engine<A>>(
    code: &PolarCode,
    arith: &A,
    cfg: &DecoderConfig,
    engine: &mut E,
) -> DecodeResult {
    let len = code.len();
    let mut counters = OpCounters::default();
    let mut soft = vec![arith.zero(); len];
    let mut x_hat = vec![0u8; len];
    let mut u_hat = vec![0u8; len];
    let mut valid = false;
    let mut iterations_used = 0;
    for _ in 0..cfg.i_max {
        let mut kernel = Kernel::new(arith, &mut counters);
        engine.run_iteration(&mut kernel);
        counters.mark_iteration();
        iterations_used += 1;
        engine.write_soft(arith, &mut soft);
        for (bit, &llr) in x_hat.iter_mut().zip(&soft) {
            *bit = u8::from(!arith.decide_zero(llr));
        }
        u_hat = code.transform(&x_hat).expect("x_hat has length N");
        valid = code.check_frozen_zero(&u_hat);
        if cfg.early_stop && valid {
            break;
        }
    }
    DecodeResult {
        soft_out: soft.iter().map(|&l| arith.to_f64(l)).collect(),
        x_hat,
        u_hat,
        iterations_used,
        valid,
        ops: counters,
        allocated_llrs: engine.allocated_llrs(),
    }
}
