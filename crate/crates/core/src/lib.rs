//! Soft-output decoding of polar codes with exact memory and operation
//! accounting.
//!
//! The crate implements four iterative soft-output decoders over the polar
//! code factor graph:
//!
//! * [`decoder::Algorithm::Bp`] — belief propagation with a flooding
//!   schedule over the full factor graph.
//! * [`decoder::Algorithm::Scan`] — soft cancelation with the serial
//!   successive-cancellation traversal order.
//! * [`decoder::Algorithm::Rcsc`] — a reduced-complexity variant of SCAN
//!   that drops right-message terms from inner-stage left updates, shrinking
//!   working memory to `5N - 3` LLRs.
//! * [`decoder::Algorithm::SRcsc`] — RCSC run on the code's binary-tree
//!   form, short-circuiting all-frozen and all-information subtrees.
//!
//! All decoders share one LLR arithmetic abstraction ([`llr::LlrArith`])
//! with a floating-point and a saturating fixed-point implementation, and
//! count every real-field addition and min-sum comparison they perform
//! ([`counters::OpCounters`]). A BPSK/AWGN Monte Carlo harness ([`sim`])
//! produces frame/bit error rates and average iteration counts from
//! seed-reproducible frame streams.

pub mod code;
pub mod counters;
pub mod decoder;
pub mod llr;
pub mod memory;
pub mod sim;

pub use code::{NodeClass, PolarCode};
pub use counters::OpCounters;
pub use decoder::{Algorithm, ArithMode, DecodeResult, DecoderConfig};
pub use llr::{FixedArith, FloatArith, LlrArith, QuantSpec};
pub use memory::MessageMemory;
pub use sim::{FerPoint, SimConfig};
