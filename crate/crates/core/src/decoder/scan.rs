//! Serial soft cancelation with full right-message storage.
//!
//! Identical traversal order to the reduced schedule, but every stage of the
//! left sweep adds the stored right-going message of the node it descends
//! into, so those messages must survive a whole iteration. The engine keeps
//! one right-going vector per tree node: layer `i` holds `2^(i-1)` groups of
//! `2^(n-i)` LLRs, `Nn/2` in total, giving the `4N - 2 + Nn/2` storage
//! footprint together with the `L` and `Re` arrays.
//!
//! On iteration 1 every stored right message is still zero, so the left
//! sweep degenerates to the reduced rule — the two schedules produce
//! bit-identical first iterations by construction.

use crate::code::PolarCode;
use crate::counters::Kernel;
use crate::llr::LlrArith;
use crate::memory::{e_index, s_index};

use super::Engine;

pub(super) struct ScanEngine<'c, A: LlrArith> {
    code: &'c PolarCode,
    /// `l[i]`: left-going messages of the active node at stage `i`.
    l: Vec<Vec<A::Llr>>,
    /// `re[i]`: return message of the last completed left child at stage
    /// `i`; `re[0]` accumulates the soft extrinsic outputs.
    re: Vec<Vec<A::Llr>>,
    /// `ro[i][g]`: right-going message into the stage-`i` node whose parent
    /// is the `g`-th node at stage `i - 1` (`ro[0]` unused).
    ro: Vec<Vec<Vec<A::Llr>>>,
}

impl<'c, A: LlrArith> ScanEngine<'c, A> {
    pub(super) fn new(code: &'c PolarCode, arith: &A, channel: &[A::Llr]) -> Self {
        let n = code.n_log2();
        let zero = arith.zero();
        let mut l: Vec<Vec<A::Llr>> = (0..=n).map(|i| vec![zero; 1 << (n - i)]).collect();
        l[0].copy_from_slice(channel);
        let re = (0..=n).map(|i| vec![zero; 1 << (n - i)]).collect();
        let mut ro: Vec<Vec<Vec<A::Llr>>> = (0..=n)
            .map(|i| vec![vec![zero; 1 << (n - i)]; 1 << (i.max(1) - 1)])
            .collect();
        ro[0] = Vec::new();
        ScanEngine { code, l, re, ro }
    }

    fn left_sweep(&mut self, j: usize, k: &mut Kernel<'_, A>) {
        let n = self.code.n_log2();
        let s = s_index(j, n);
        if j != 0 {
            let (shallow, deep) = self.l.split_at_mut(s);
            let prev = &shallow[s - 1];
            let cur = &mut deep[0];
            let re = &self.re[s];
            for t in 0..cur.len() {
                let folded = k.f(prev[2 * t], re[t]);
                cur[t] = k.add(prev[2 * t + 1], folded);
            }
        }
        let first_plain = if j == 0 { 1 } else { s + 1 };
        for i in first_plain..=n {
            let (shallow, deep) = self.l.split_at_mut(i);
            let prev = &shallow[i - 1];
            let cur = &mut deep[0];
            // Unlike the reduced sweep, descend-left updates keep the stored
            // right message of the node being entered.
            let ro = &self.ro[i][j >> (n - i + 1)];
            for t in 0..cur.len() {
                let with_feedback = k.add(prev[2 * t + 1], ro[t]);
                cur[t] = k.f(prev[2 * t], with_feedback);
            }
        }
    }

    fn right_sweep(&mut self, j: usize, k: &mut Kernel<'_, A>) {
        let n = self.code.n_log2();
        let e = e_index(j, n);
        for i in (e..n).rev() {
            let half = 1usize << (n - i - 1);
            // Move the target vector out so its source arrays can be read
            // through shared borrows, then put it back.
            let mut out = if i == e {
                std::mem::take(&mut self.re[i])
            } else {
                std::mem::take(&mut self.ro[i][j >> (n - i + 1)])
            };
            let ro_next = &self.ro[i + 1][j >> (n - i)];
            let re_next = &self.re[i + 1];
            let l_i = &self.l[i];
            for t in 0..half {
                let with_l = k.add(ro_next[t], l_i[2 * t + 1]);
                out[2 * t] = k.f(re_next[t], with_l);
                let folded = k.f(re_next[t], l_i[2 * t]);
                out[2 * t + 1] = k.add(ro_next[t], folded);
            }
            if i == e {
                self.re[i] = out;
            } else {
                self.ro[i][j >> (n - i + 1)] = out;
            }
        }
    }
}

impl<A: LlrArith> Engine<A> for ScanEngine<'_, A> {
    fn run_iteration(&mut self, k: &mut Kernel<'_, A>) {
        let n = self.code.n_log2();
        for j in 0..self.code.len() {
            self.left_sweep(j, k);
            let prior = if self.code.is_frozen(j) {
                k.arith().infinity()
            } else {
                k.arith().zero()
            };
            if j % 2 == 0 {
                self.re[n][0] = prior;
            } else {
                self.ro[n][j >> 1][0] = prior;
                self.right_sweep(j, k);
            }
        }
    }

    fn write_soft(&self, arith: &A, out: &mut [A::Llr]) {
        for (t, slot) in out.iter_mut().enumerate() {
            *slot = arith.add(self.l[0][t], self.re[0][t]);
        }
    }

    fn allocated_llrs(&self) -> usize {
        let l: usize = self.l.iter().map(Vec::len).sum();
        let re: usize = self.re.iter().map(Vec::len).sum();
        let ro: usize = self.ro.iter().flatten().map(Vec::len).sum();
        l + re + ro
    }
}
