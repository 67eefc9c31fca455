//! LLR value semantics: the min-sum kernel, saturating additions, and
//! channel quantization.
//!
//! Decoders are generic over an [`LlrArith`] implementation so the same
//! message-passing code runs in floating point ([`FloatArith`]) or in
//! two's-complement fixed point with symmetric saturation ([`FixedArith`]).
//! The sign convention is positive-favors-zero: an LLR `l >= 0` means bit 0
//! is at least as likely as bit 1.
//!
//! In fixed point the saturation bound `S = 2^(q_internal-1) - 1` doubles as
//! the representation of certainty (`+/-infinity`, used for frozen-bit
//! priors). Saturated values are absorbing under addition, mirroring how
//! IEEE-754 infinities propagate in the floating pipeline. When the two bounds meet,
//! `+S` wins: frozen-bit certainty (always positive) must survive any
//! addition, or the pruned tree decoder would diverge from its unpruned
//! schedule. Floating point instead cancels `+inf + (-inf)` to 0, which is
//! unreachable from finite channel inputs.

use serde::Serialize;
use thiserror::Error;

/// Errors from constructing quantized arithmetic.
#[derive(Debug, Error)]
pub enum QuantError {
    /// Bit widths must satisfy `2 <= q_channel <= q_internal <= 31`.
    #[error("bit widths must satisfy 2 <= q_channel <= q_internal <= 31, got ({q_channel}, {q_internal})")]
    BadWidths { q_channel: u32, q_internal: u32 },
    /// The quantization step must be a positive finite number.
    #[error("quantization scale must be positive and finite, got {0}")]
    BadScale(f64),
}

/// Fixed-point quantization parameters.
///
/// `q_channel` bits quantize channel LLRs, which are then widened to
/// `q_internal` bits for decoding. `scale` is the LLR value of one code step:
/// a channel LLR `y` maps to `round(y / scale)` clamped to the symmetric
/// `q_channel`-bit range.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct QuantSpec {
    /// Channel quantizer width in bits (default 5, giving codes in ±15).
    pub q_channel: u32,
    /// Internal datapath width in bits (default 7, giving values in ±63).
    pub q_internal: u32,
    /// LLR units per quantization step (default 0.25).
    pub scale: f64,
}

impl Default for QuantSpec {
    fn default() -> Self {
        QuantSpec {
            q_channel: 5,
            q_internal: 7,
            scale: 0.25,
        }
    }
}

impl QuantSpec {
    /// Checks widths and scale, returning the spec unchanged if valid.
    pub fn validate(self) -> Result<Self, QuantError> {
        if self.q_channel < 2 || self.q_channel > self.q_internal || self.q_internal > 31 {
            return Err(QuantError::BadWidths {
                q_channel: self.q_channel,
                q_internal: self.q_internal,
            });
        }
        if !(self.scale.is_finite() && self.scale > 0.0) {
            return Err(QuantError::BadScale(self.scale));
        }
        Ok(self)
    }
}

/// Arithmetic over one LLR representation.
///
/// All operations are pure; implementations are cheap to clone and safe to
/// share across threads.
pub trait LlrArith: Clone + Send + Sync {
    /// The stored LLR value type.
    type Llr: Copy + PartialEq + std::fmt::Debug + Send + Sync;

    /// The neutral belief (bit 0 and 1 equally likely).
    fn zero(&self) -> Self::Llr;

    /// Certainty that the bit is 0: `+infinity` in floating point, the
    /// saturation bound in fixed point. Frozen-bit priors use this value.
    fn infinity(&self) -> Self::Llr;

    /// The min-sum kernel `f(a, b) = sign(a) * sign(b) * min(|a|, |b|)`,
    /// with `sign(0) = +`.
    fn f_minsum(&self, a: Self::Llr, b: Self::Llr) -> Self::Llr;

    /// Addition of beliefs. Floating point adds plainly with infinities
    /// propagating (opposing infinities cancel to 0); fixed point clamps to
    /// the symmetric range, with values already at a bound absorbing and the
    /// positive bound dominating the negative one.
    fn add(&self, a: Self::Llr, b: Self::Llr) -> Self::Llr;

    /// Maps a real channel LLR into the decoder's representation.
    #[allow(clippy::wrong_self_convention)] // conversion depends on the backend's quantizer state
    fn from_channel(&self, llr: f64) -> Self::Llr;

    /// Hard decision: `true` selects bit 0. Ties (`l = 0`) go to 0.
    fn decide_zero(&self, l: Self::Llr) -> bool;

    /// The real value of an LLR, for reporting soft outputs.
    fn to_f64(&self, l: Self::Llr) -> f64;
}

/// Double-precision LLR arithmetic.
#[derive(Clone, Copy, Debug, Default)]
pub struct FloatArith;

impl LlrArith for FloatArith {
    type Llr = f64;

    fn zero(&self) -> f64 {
        0.0
    }

    fn infinity(&self) -> f64 {
        f64::INFINITY
    }

    fn f_minsum(&self, a: f64, b: f64) -> f64 {
        let mag = a.abs().min(b.abs());
        if (a < 0.0) != (b < 0.0) {
            -mag
        } else {
            mag
        }
    }

    fn add(&self, a: f64, b: f64) -> f64 {
        if a.is_infinite() && b.is_infinite() && a != b {
            // Conflicting certainties cancel to neutral belief instead of
            // producing a NaN that would poison every downstream message.
            0.0
        } else {
            a + b
        }
    }

    fn from_channel(&self, llr: f64) -> f64 {
        llr
    }

    fn decide_zero(&self, l: f64) -> bool {
        l >= 0.0
    }

    fn to_f64(&self, l: f64) -> f64 {
        l
    }
}

/// Two's-complement fixed-point LLR arithmetic with symmetric saturation.
///
/// Values live in `[-S, S]` with `S = 2^(q_internal-1) - 1`; the most
/// negative two's-complement code is unused. `+/-S` represents certainty, so
/// an operand at a bound absorbs additions, and when the two bounds conflict
/// the positive one wins. Frozen-bit priors are `+S` and must dominate every
/// message they touch; unlike floating point, clamping lets ordinary sums
/// reach `-S`, so a cancel-to-zero rule here would let such a sum erase a
/// frozen certainty. Absorption with positive dominance keeps that certainty
/// lossless, which is what makes the tree-pruned decoder bit-identical to its
/// unpruned schedule in fixed point.
#[derive(Clone, Copy, Debug)]
pub struct FixedArith {
    spec: QuantSpec,
    sat: i32,
    chan_max: i32,
}

impl FixedArith {
    /// Builds arithmetic for a validated quantization spec.
    pub fn new(spec: QuantSpec) -> Result<Self, QuantError> {
        let spec = spec.validate()?;
        Ok(FixedArith {
            spec,
            sat: (1i32 << (spec.q_internal - 1)) - 1,
            chan_max: (1i32 << (spec.q_channel - 1)) - 1,
        })
    }

    /// The saturation bound `S` (also the representation of certainty).
    pub fn saturation(&self) -> i32 {
        self.sat
    }

    /// The quantization spec this arithmetic was built from.
    pub fn spec(&self) -> QuantSpec {
        self.spec
    }
}

impl LlrArith for FixedArith {
    type Llr = i32;

    fn zero(&self) -> i32 {
        0
    }

    fn infinity(&self) -> i32 {
        self.sat
    }

    fn f_minsum(&self, a: i32, b: i32) -> i32 {
        let mag = a.abs().min(b.abs());
        if (a < 0) != (b < 0) {
            -mag
        } else {
            mag
        }
    }

    fn add(&self, a: i32, b: i32) -> i32 {
        let s = self.sat;
        if a == s || b == s {
            s
        } else if a == -s || b == -s {
            -s
        } else {
            (a + b).clamp(-s, s)
        }
    }

    fn from_channel(&self, llr: f64) -> i32 {
        let max = self.chan_max as f64;
        (llr / self.spec.scale).round().clamp(-max, max) as i32
    }

    fn decide_zero(&self, l: i32) -> bool {
        l >= 0
    }

    fn to_f64(&self, l: i32) -> f64 {
        l as f64 * self.spec.scale
    }
}
