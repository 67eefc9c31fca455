//! Working memory of the serial soft decoders and the per-step index
//! schedules.
//!
//! The serial decoders keep three sets of LLR arrays, all indexed by stage
//! `i` (stage 0 is the channel side, stage `n` the u side):
//!
//! * `L`: `n + 1` arrays, `L_i` holding `2^(n-i)` left-to-right messages;
//!   `L_0` is loaded with the channel LLRs and never overwritten.
//! * `Ro`: `n` arrays (`i = 1..=n`), the odd/right-child return messages.
//! * `Re`: `n + 1` arrays, the even/left-child return messages; `Re_0`
//!   accumulates the `N` soft extrinsic outputs.
//!
//! Every array holds the message vector of the *currently active* tree node
//! at its stage, which is what shrinks storage to `5N - 3` LLR slots in
//! total. The schedule that makes this sharing sound is captured by
//! [`s_index`] (first stage recomputed by the left sweep at step `j`) and
//! [`e_index`] (last stage written by the right sweep after an odd step).

use crate::code::PolarCode;

/// Which stored-LLR accounting convention to report.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MemoryModel {
    /// Full factor-graph storage, `N(n+1)` by the customary convention.
    Bp,
    /// Serial schedule with all right messages retained: `4N - 2 + Nn/2`.
    Scan,
    /// Reduced right-message storage: `5N - 3`.
    Rcsc,
}

/// The three LLR array sets used by the serial decoders.
///
/// One instance belongs to exactly one in-flight decode; allocate (or
/// [`reset`](Self::reset)) per frame so no state leaks between codewords.
#[derive(Clone, Debug)]
pub struct MessageMemory<V> {
    n: usize,
    /// `l[i]`, `i = 0..=n`: left-to-right messages, `2^(n-i)` entries.
    pub(crate) l: Vec<Vec<V>>,
    /// `ro[i]`, `i = 1..=n`: right-child return messages (`ro[0]` unused).
    pub(crate) ro: Vec<Vec<V>>,
    /// `re[i]`, `i = 0..=n`: left-child return messages.
    pub(crate) re: Vec<Vec<V>>,
}

impl<V: Copy> MessageMemory<V> {
    /// Allocates memory for a length-`2^n` code with every slot set to
    /// `zero` (the neutral belief). `L_0` is overwritten with channel LLRs
    /// when a decode starts; zero-initialized `Ro`/`Re` are what the first
    /// iteration's reads expect.
    pub fn alloc(code: &PolarCode, zero: V) -> Self {
        let n = code.n_log2();
        let l = (0..=n).map(|i| vec![zero; 1 << (n - i)]).collect();
        let mut ro: Vec<Vec<V>> = (0..=n).map(|i| vec![zero; 1 << (n - i)]).collect();
        ro[0] = Vec::new();
        let re = (0..=n).map(|i| vec![zero; 1 << (n - i)]).collect();
        MessageMemory { n, l, ro, re }
    }

    /// Resets every slot to `zero`, making the memory ready for a new frame.
    pub fn reset(&mut self, zero: V) {
        for arr in self.l.iter_mut().chain(&mut self.ro).chain(&mut self.re) {
            arr.fill(zero);
        }
    }

    /// Log2 of the block length this memory serves.
    pub fn n_log2(&self) -> usize {
        self.n
    }

    /// Total number of LLR slots actually allocated (`5N - 3`).
    pub fn total_llrs(&self) -> usize {
        self.l.iter().map(Vec::len).sum::<usize>()
            + self.ro.iter().map(Vec::len).sum::<usize>()
            + self.re.iter().map(Vec::len).sum::<usize>()
    }
}

/// Stored-LLR count of each decoder family for block length `2^n`, by the
/// customary accounting convention: `N(n+1)` for BP, `4N - 2 + Nn/2` for
/// SCAN, `5N - 3` for RCSC (which the RCSC allocation meets exactly; our BP
/// implementation's true allocation is reported separately by the decoders).
pub fn accounted_llrs(model: MemoryModel, n: usize) -> usize {
    let len = 1usize << n;
    match model {
        MemoryModel::Bp => len * (n + 1),
        MemoryModel::Scan => 4 * len - 2 + len * n / 2,
        MemoryModel::Rcsc => 5 * len - 3,
    }
}

/// First stage whose `L` array the left sweep recomputes at step `j`:
/// 1 when `j = 0`, `n` for odd `j`, and `n - p` for even `j` whose lowest
/// set bit sits at position `p`.
pub fn s_index(j: usize, n: usize) -> usize {
    if j == 0 {
        1
    } else if j % 2 == 1 {
        n
    } else {
        n - j.trailing_zeros() as usize
    }
}

/// Last stage the right sweep writes after odd step `j`: `n - k` where `k`
/// is the position of the lowest zero bit of `j`, or 0 when `j = 2^n - 1`
/// (all ones), which is the single step per iteration that completes the
/// soft outputs in `Re_0`.
pub fn e_index(j: usize, n: usize) -> usize {
    debug_assert!(j % 2 == 1, "only odd steps run the right sweep");
    let k = (!j).trailing_zeros() as usize;
    n.saturating_sub(k)
}
