//! The flooding schedule over the full factor graph.
//!
//! The graph has `n+1` columns of `N` values each, for both left-going and
//! right-going messages: column 0 faces the channel, column `n` faces the
//! source bits. Column 0 left messages hold the channel LLRs and column `n`
//! right messages hold the bit priors; neither is ever rewritten. One
//! iteration updates every left-going column from the channel side inward,
//! then every right-going column from the source side outward, each butterfly
//! using the same four-message min-sum rules as the serial schedules. Soft
//! outputs are the sum of the two messages at column 0.
//!
//! Unlike the serial schedules, all `2^(i-1)` subtrees at each depth hold
//! their messages simultaneously, which is where the factor-graph memory
//! footprint of `2N(n+1)` values comes from.

use crate::code::PolarCode;
use crate::counters::Kernel;
use crate::llr::LlrArith;

use super::Engine;

pub(super) struct BpEngine<'c, A: LlrArith> {
    code: &'c PolarCode,
    /// Left-going messages, `n+1` columns by `N`; row 0 is the channel.
    l: Vec<Vec<A::Llr>>,
    /// Right-going messages, `n+1` columns by `N`; row `n` holds priors.
    r: Vec<Vec<A::Llr>>,
}

impl<'c, A: LlrArith> BpEngine<'c, A> {
    pub(super) fn new(code: &'c PolarCode, arith: &A, channel: &[A::Llr]) -> Self {
        let n = code.n_log2();
        let len = code.len();
        let zero = arith.zero();
        let mut l = vec![vec![zero; len]; n + 1];
        let mut r = vec![vec![zero; len]; n + 1];
        l[0].copy_from_slice(channel);
        for (j, prior) in r[n].iter_mut().enumerate() {
            if code.is_frozen(j) {
                *prior = arith.infinity();
            }
        }
        BpEngine { code, l, r }
    }
}

impl<A: LlrArith> Engine<A> for BpEngine<'_, A> {
    fn run_iteration(&mut self, k: &mut Kernel<'_, A>) {
        let n = self.code.n_log2();
        for i in 1..=n {
            // Each column-(i-1) subtree spans 2*half positions; its butterfly
            // pairs adjacent entries (a0, a1) and feeds the two column-i
            // subtrees at (c2, c3).
            let half = 1usize << (n - i);
            let (shallow, deep) = self.l.split_at_mut(i);
            let prev = &shallow[i - 1];
            let cur = &mut deep[0];
            let right = &self.r[i];
            for g in 0..1usize << (i - 1) {
                let base = g * (half << 1);
                for t in 0..half {
                    let a0 = base + 2 * t;
                    let a1 = a0 + 1;
                    let c2 = base + t;
                    let c3 = base + half + t;
                    let with_feedback = k.add(prev[a1], right[c3]);
                    cur[c2] = k.f(prev[a0], with_feedback);
                    let folded = k.f(prev[a0], right[c2]);
                    cur[c3] = k.add(prev[a1], folded);
                }
            }
        }
        for i in (1..=n).rev() {
            let half = 1usize << (n - i);
            let (shallow, deep) = self.r.split_at_mut(i);
            let next = &deep[0];
            let out = &mut shallow[i - 1];
            let left = &self.l[i - 1];
            for g in 0..1usize << (i - 1) {
                let base = g * (half << 1);
                for t in 0..half {
                    let a0 = base + 2 * t;
                    let a1 = a0 + 1;
                    let c2 = base + t;
                    let c3 = base + half + t;
                    let with_l = k.add(next[c3], left[a1]);
                    out[a0] = k.f(next[c2], with_l);
                    let folded = k.f(next[c2], left[a0]);
                    out[a1] = k.add(next[c3], folded);
                }
            }
        }
    }

    fn write_soft(&self, arith: &A, out: &mut [A::Llr]) {
        for (t, slot) in out.iter_mut().enumerate() {
            *slot = arith.add(self.l[0][t], self.r[0][t]);
        }
    }

    fn allocated_llrs(&self) -> usize {
        let l: usize = self.l.iter().map(Vec::len).sum();
        let r: usize = self.r.iter().map(Vec::len).sum();
        l + r
    }
}
