//! Polar code representation: construction, encoding, codeword validity,
//! and decode-tree node classification.
//!
//! A polar code of length `N = 2^n` is defined by its frozen set: the
//! `N - K` u-domain positions pinned to zero. Encoding multiplies the
//! u-vector by `G = B_N * F^(x)n` over GF(2), where `B_N` is the
//! bit-reversal permutation and `F = [[1, 0], [1, 1]]`; frozen indices refer
//! to u *before* bit reversal. Both factors of `G` are involutions and
//! commute, so `G` is self-inverse — codeword validity reduces to one more
//! transform and a frozen-position zero test.

use std::fmt::Write as _;
use std::path::Path;

use thiserror::Error;

/// Largest supported block-length exponent (`N = 2^20`).
pub const MAX_N_LOG2: usize = 20;

/// Errors from code construction, encoding, and frozen-set file handling.
#[derive(Debug, Error)]
pub enum CodeError {
    /// The block-length exponent is outside `1..=MAX_N_LOG2`.
    #[error("block length exponent must be in 1..={MAX_N_LOG2}, got {0}")]
    BadBlockExp(usize),
    /// The information length is larger than the block length.
    #[error("information length must be at most {block_len}, got {k}")]
    BadInfoLen { k: usize, block_len: usize },
    /// The design erasure probability is outside the open interval (0, 1).
    #[error("design erasure probability must lie strictly between 0 and 1, got {0}")]
    BadDesignProb(f64),
    /// An explicit frozen set is malformed (out of range, unsorted, or
    /// duplicated indices).
    #[error("frozen set: {0}")]
    BadFrozenSet(String),
    /// A frozen-set file does not match the documented format.
    #[error("frozen-set file: {0}")]
    FileFormat(String),
    /// Reading or writing a frozen-set file failed.
    #[error(transparent)]
    Io(#[from] std::io::Error),
    /// An encode input carries a nonzero value at a frozen position.
    #[error("encode: nonzero value at frozen index {0}")]
    FrozenViolation(usize),
    /// A bit or LLR vector does not have length `N`.
    #[error("expected a vector of length {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
}

/// Classification of a decode-tree node by the bits beneath it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NodeClass {
    /// Every leaf below the node is frozen.
    Rate0,
    /// Every leaf below the node is an information bit.
    Rate1,
    /// The node covers both frozen and information leaves.
    Mixed,
}

/// A polar code: block length, frozen mask, and the derived classification
/// of all `2N - 1` decode-tree nodes.
///
/// Immutable after construction and safe to share across concurrent decoder
/// instances.
#[derive(Clone, Debug)]
pub struct PolarCode {
    n: usize,
    len: usize,
    k: usize,
    frozen: Vec<bool>,
    classes: Vec<NodeClass>,
}

impl PolarCode {
    /// Constructs a code by the Bhattacharyya-parameter recursion over a
    /// design erasure probability.
    ///
    /// Each u-domain index is scored by iterating `z <- 2z - z^2` (bit 0) or
    /// `z <- z^2` (bit 1) over its binary expansion from the most significant
    /// bit down, starting from `design_erasure_prob`. The `N - K` highest
    /// scores are frozen; ties freeze the lower index.
    pub fn bhattacharyya(n: usize, k: usize, design_erasure_prob: f64) -> Result<Self, CodeError> {
        let len = checked_len(n)?;
        if k > len {
            return Err(CodeError::BadInfoLen { k, block_len: len });
        }
        if !(design_erasure_prob > 0.0 && design_erasure_prob < 1.0) {
            return Err(CodeError::BadDesignProb(design_erasure_prob));
        }
        let z = bhattacharyya_params(n, design_erasure_prob);
        let mut order: Vec<usize> = (0..len).collect();
        order.sort_by(|&a, &b| z[b].partial_cmp(&z[a]).unwrap().then(a.cmp(&b)));
        let mut frozen = vec![false; len];
        for &i in order.iter().take(len - k) {
            frozen[i] = true;
        }
        Ok(Self::from_mask(n, frozen))
    }

    /// Constructs a code from an explicit frozen set given as strictly
    /// ascending u-domain indices.
    pub fn with_frozen_indices(n: usize, frozen_indices: &[usize]) -> Result<Self, CodeError> {
        let len = checked_len(n)?;
        if frozen_indices.len() > len {
            return Err(CodeError::BadFrozenSet(format!(
                "{} indices exceed block length {len}",
                frozen_indices.len()
            )));
        }
        let mut frozen = vec![false; len];
        let mut prev: Option<usize> = None;
        for &i in frozen_indices {
            if i >= len {
                return Err(CodeError::BadFrozenSet(format!(
                    "index {i} out of range for block length {len}"
                )));
            }
            if prev.is_some_and(|p| p >= i) {
                return Err(CodeError::BadFrozenSet(
                    "indices must be strictly ascending".into(),
                ));
            }
            prev = Some(i);
            frozen[i] = true;
        }
        Ok(Self::from_mask(n, frozen))
    }

    /// Loads a code from a frozen-set file (see [`write_frozen_file`]).
    pub fn from_frozen_file(path: impl AsRef<Path>) -> Result<Self, CodeError> {
        read_frozen_file(path)
    }

    fn from_mask(n: usize, frozen: Vec<bool>) -> Self {
        let len = frozen.len();
        let k = len - frozen.iter().filter(|&&f| f).count();
        let classes = classify_tree(&frozen);
        PolarCode {
            n,
            len,
            k,
            frozen,
            classes,
        }
    }

    /// Log2 of the block length.
    pub fn n_log2(&self) -> usize {
        self.n
    }

    /// Block length `N`.
    pub fn len(&self) -> usize {
        self.len
    }

    /// Never true: `N >= 2` always.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// Number of information bits `K`.
    pub fn dimension(&self) -> usize {
        self.k
    }

    /// Code rate `K / N`.
    pub fn rate(&self) -> f64 {
        self.k as f64 / self.len as f64
    }

    /// Whether u-domain position `j` is frozen.
    pub fn is_frozen(&self, j: usize) -> bool {
        self.frozen[j]
    }

    /// Frozen u-domain indices in ascending order.
    pub fn frozen_indices(&self) -> Vec<usize> {
        (0..self.len).filter(|&j| self.frozen[j]).collect()
    }

    /// Information u-domain indices in ascending order.
    pub fn info_indices(&self) -> Vec<usize> {
        (0..self.len).filter(|&j| !self.frozen[j]).collect()
    }

    /// Class of decode-tree node `v` in level order (root is node 0, the
    /// children of `v` are `2v + 1` and `2v + 2`, and leaf `N - 1 + j`
    /// corresponds to `u_j`).
    pub fn node_class(&self, v: usize) -> NodeClass {
        self.classes[v]
    }

    /// Classes of all `2N - 1` decode-tree nodes in level order.
    pub fn node_classes(&self) -> &[NodeClass] {
        &self.classes
    }

    /// Applies the self-inverse transform `G = B_N * F^(x)n`: bit-reversal
    /// permutation followed by the GF(2) butterfly network.
    pub fn transform(&self, bits: &[u8]) -> Result<Vec<u8>, CodeError> {
        if bits.len() != self.len {
            return Err(CodeError::LengthMismatch {
                expected: self.len,
                got: bits.len(),
            });
        }
        let mut x: Vec<u8> = (0..self.len).map(|j| bits[bit_reverse(j, self.n)]).collect();
        let mut h = 1;
        while h < self.len {
            for base in (0..self.len).step_by(2 * h) {
                for j in 0..h {
                    x[base + j] ^= x[base + j + h];
                }
            }
            h *= 2;
        }
        Ok(x)
    }

    /// Encodes a full u-vector (frozen positions must be zero) into a
    /// codeword `x = u * G`.
    pub fn encode(&self, u: &[u8]) -> Result<Vec<u8>, CodeError> {
        if u.len() != self.len {
            return Err(CodeError::LengthMismatch {
                expected: self.len,
                got: u.len(),
            });
        }
        for (j, &bit) in u.iter().enumerate() {
            if self.frozen[j] && bit != 0 {
                return Err(CodeError::FrozenViolation(j));
            }
        }
        self.transform(u)
    }

    /// Builds the u-vector for `K` information bits (in ascending index
    /// order) and encodes it.
    pub fn encode_info(&self, info_bits: &[u8]) -> Result<Vec<u8>, CodeError> {
        if info_bits.len() != self.k {
            return Err(CodeError::LengthMismatch {
                expected: self.k,
                got: info_bits.len(),
            });
        }
        let mut u = vec![0u8; self.len];
        let mut next = info_bits.iter();
        for (slot, &frozen) in u.iter_mut().zip(&self.frozen) {
            if !frozen {
                *slot = *next.next().expect("info bit count was checked");
            }
        }
        self.transform(&u)
    }

    /// Whether `x` is a codeword: `x * G` must be zero at every frozen
    /// position (valid because `G` is self-inverse).
    pub fn is_valid_codeword(&self, x: &[u8]) -> Result<bool, CodeError> {
        let u = self.transform(x)?;
        Ok(self.check_frozen_zero(&u))
    }

    /// Whether a u-domain vector is zero at every frozen position.
    pub fn check_frozen_zero(&self, u: &[u8]) -> bool {
        u.iter()
            .zip(&self.frozen)
            .all(|(&bit, &frozen)| !frozen || bit == 0)
    }

    /// Writes the frozen set to `path` in the plain-text exchange format.
    pub fn write_frozen_file(&self, path: impl AsRef<Path>) -> Result<(), CodeError> {
        let mut text = format!("{} {}\n", self.len, self.k);
        let mut first = true;
        for j in self.frozen_indices() {
            if !first {
                text.push(' ');
            }
            let _ = write!(text, "{j}");
            first = false;
        }
        text.push('\n');
        std::fs::write(path, text)?;
        Ok(())
    }
}

fn checked_len(n: usize) -> Result<usize, CodeError> {
    if n == 0 || n > MAX_N_LOG2 {
        return Err(CodeError::BadBlockExp(n));
    }
    Ok(1 << n)
}

/// Reverses the low `n` bits of `j`.
pub fn bit_reverse(j: usize, n: usize) -> usize {
    j.reverse_bits() >> (usize::BITS as usize - n)
}

/// Bhattacharyya parameters of all `2^n` synthetic channels for a design
/// erasure probability, in natural u-domain order.
pub fn bhattacharyya_params(n: usize, design_erasure_prob: f64) -> Vec<f64> {
    let len = 1usize << n;
    (0..len)
        .map(|i| {
            let mut z = design_erasure_prob;
            for bit_pos in (0..n).rev() {
                if (i >> bit_pos) & 1 == 0 {
                    z = 2.0 * z - z * z;
                } else {
                    z = z * z;
                }
            }
            z
        })
        .collect()
}

/// Bottom-up classification of the `2N - 1` decode-tree nodes in level
/// order: a node is [`NodeClass::Rate0`] iff all leaves beneath it are
/// frozen and [`NodeClass::Rate1`] iff all carry information.
pub fn classify_tree(frozen: &[bool]) -> Vec<NodeClass> {
    let len = frozen.len();
    let mut classes = vec![NodeClass::Mixed; 2 * len - 1];
    for (j, &f) in frozen.iter().enumerate() {
        classes[len - 1 + j] = if f { NodeClass::Rate0 } else { NodeClass::Rate1 };
    }
    for v in (0..len - 1).rev() {
        classes[v] = match (classes[2 * v + 1], classes[2 * v + 2]) {
            (NodeClass::Rate0, NodeClass::Rate0) => NodeClass::Rate0,
            (NodeClass::Rate1, NodeClass::Rate1) => NodeClass::Rate1,
            _ => NodeClass::Mixed,
        };
    }
    classes
}

/// Reads a frozen-set file: line 1 holds `N K`, line 2 the space-separated
/// ascending frozen indices (empty when `K = N`). The index count must equal
/// `N - K`.
pub fn read_frozen_file(path: impl AsRef<Path>) -> Result<PolarCode, CodeError> {
    let text = std::fs::read_to_string(&path)?;
    let mut lines = text.lines();
    let header = lines
        .next()
        .ok_or_else(|| CodeError::FileFormat("missing header line".into()))?;
    let mut fields = header.split_whitespace();
    let len: usize = fields
        .next()
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| CodeError::FileFormat("header must be \"N K\"".into()))?;
    let k: usize = fields
        .next()
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| CodeError::FileFormat("header must be \"N K\"".into()))?;
    if fields.next().is_some() {
        return Err(CodeError::FileFormat("header must be \"N K\"".into()));
    }
    if !len.is_power_of_two() {
        return Err(CodeError::FileFormat(format!(
            "block length {len} is not a power of two"
        )));
    }
    let n = len.trailing_zeros() as usize;
    checked_len(n)?;
    if k > len {
        return Err(CodeError::BadInfoLen { k, block_len: len });
    }
    let indices: Vec<usize> = lines
        .next()
        .unwrap_or("")
        .split_whitespace()
        .map(|s| {
            s.parse::<usize>()
                .map_err(|_| CodeError::FileFormat(format!("bad frozen index {s:?}")))
        })
        .collect::<Result<_, _>>()?;
    if let Some(extra) = lines.find(|l| !l.trim().is_empty()) {
        return Err(CodeError::FileFormat(format!(
            "unexpected extra line {extra:?}"
        )));
    }
    if indices.len() != len - k {
        return Err(CodeError::FileFormat(format!(
            "expected {} frozen indices, got {}",
            len - k,
            indices.len()
        )));
    }
    PolarCode::with_frozen_indices(n, &indices)
}
