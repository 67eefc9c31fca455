//! The reduced-complexity serial schedule.
//!
//! One iteration walks the leaf steps `j = 0..N-1`. Each step first runs the
//! left sweep ([`RcscEngine::left_sweep`]): stage `s_j` combines the parent
//! messages with the return message deposited by the previous step, and
//! every deeper stage applies the plain min-sum pair rule — the right-going
//! term is dropped there, which is what distinguishes this schedule from
//! SCAN. The step then installs the leaf prior (certainty for frozen bits,
//! neutral for information bits), and after each odd step the right sweep
//! ([`RcscEngine::right_sweep`]) folds completed subtrees back toward the
//! channel, writing `Ro` arrays on the way down to stage `e_j + 1` and the
//! `Re` array at stage `e_j`. The final odd step (`e_j = 0`) completes the
//! soft extrinsic outputs in `Re_0`.
//!
//! Only `Ro_1` carries information between iterations (the root-level
//! feedback read by step 0); everything else is rewritten before reuse.

use crate::code::PolarCode;
use crate::counters::Kernel;
use crate::llr::LlrArith;
use crate::memory::{e_index, s_index, MessageMemory};

use super::Engine;

pub(super) struct RcscEngine<'c, A: LlrArith> {
    code: &'c PolarCode,
    mem: MessageMemory<A::Llr>,
}

impl<'c, A: LlrArith> RcscEngine<'c, A> {
    pub(super) fn new(code: &'c PolarCode, arith: &A, channel: &[A::Llr]) -> Self {
        let mut mem = MessageMemory::alloc(code, arith.zero());
        mem.l[0].copy_from_slice(channel);
        RcscEngine { code, mem }
    }

    fn left_sweep(&mut self, j: usize, k: &mut Kernel<'_, A>) {
        let n = self.code.n_log2();
        let s = s_index(j, n);
        let mem = &mut self.mem;
        {
            let (shallow, deep) = mem.l.split_at_mut(s);
            let prev = &shallow[s - 1];
            let cur = &mut deep[0];
            if j == 0 {
                // Step 0 re-enters the root's left half using the feedback
                // stored by the previous iteration (zeros on iteration 1).
                let ro = &mem.ro[s];
                for t in 0..cur.len() {
                    let with_feedback = k.add(prev[2 * t + 1], ro[t]);
                    cur[t] = k.f(prev[2 * t], with_feedback);
                }
            } else {
                // Descend right past the just-completed left sibling.
                let re = &mem.re[s];
                for t in 0..cur.len() {
                    let folded = k.f(prev[2 * t], re[t]);
                    cur[t] = k.add(prev[2 * t + 1], folded);
                }
            }
        }
        // Deeper stages drop the right-going term entirely.
        for i in s + 1..=n {
            let (shallow, deep) = mem.l.split_at_mut(i);
            let prev = &shallow[i - 1];
            let cur = &mut deep[0];
            for t in 0..cur.len() {
                cur[t] = k.f(prev[2 * t], prev[2 * t + 1]);
            }
        }
    }

    fn right_sweep(&mut self, j: usize, k: &mut Kernel<'_, A>) {
        let n = self.code.n_log2();
        let e = e_index(j, n);
        let mem = &mut self.mem;
        for i in (e..n).rev() {
            let half = 1usize << (n - i - 1);
            // Stages above e_j stash partial folds in Ro for the next level
            // down; stage e_j itself deposits into Re, where the following
            // even step's left sweep (or the soft output) reads it.
            if i == e {
                let (target, deeper) = mem.re.split_at_mut(i + 1);
                let re_next = &deeper[0];
                let ro_next = &mem.ro[i + 1];
                let l_i = &mem.l[i];
                let out = &mut target[i];
                for t in 0..half {
                    let with_l = k.add(ro_next[t], l_i[2 * t + 1]);
                    out[2 * t] = k.f(re_next[t], with_l);
                    let folded = k.f(re_next[t], l_i[2 * t]);
                    out[2 * t + 1] = k.add(ro_next[t], folded);
                }
            } else {
                let (target, deeper) = mem.ro.split_at_mut(i + 1);
                let ro_next = &deeper[0];
                let re_next = &mem.re[i + 1];
                let l_i = &mem.l[i];
                let out = &mut target[i];
                for t in 0..half {
                    let with_l = k.add(ro_next[t], l_i[2 * t + 1]);
                    out[2 * t] = k.f(re_next[t], with_l);
                    let folded = k.f(re_next[t], l_i[2 * t]);
                    out[2 * t + 1] = k.add(ro_next[t], folded);
                }
            }
        }
    }
}

impl<A: LlrArith> Engine<A> for RcscEngine<'_, A> {
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
                self.mem.re[n][0] = prior;
            } else {
                self.mem.ro[n][0] = prior;
                self.right_sweep(j, k);
            }
        }
    }

    fn write_soft(&self, arith: &A, out: &mut [A::Llr]) {
        for (t, slot) in out.iter_mut().enumerate() {
            *slot = arith.add(self.mem.l[0][t], self.mem.re[0][t]);
        }
    }

    fn allocated_llrs(&self) -> usize {
        self.mem.total_llrs()
    }
}
