//! The tree-pruned serial schedule.
//!
//! Where the flat serial schedule walks all `N` leaf steps, this engine walks
//! the code tree depth-first and stops at rate-0 (all-frozen) and rate-1
//! (all-information) subtrees: their upward messages are known constants —
//! certainty for rate-0, neutral belief for rate-1 — regardless of the
//! downward input, so they are written directly without arithmetic or
//! deeper visits. Mixed subtrees are computed with the exact formulas and
//! operand order of the flat schedule, which makes the two engines
//! bit-identical on every input while this one visits fewer nodes and
//! performs fewer operations.
//!
//! The engine shares the flat schedule's message memory: one downward array
//! per depth plus the even/odd upward arrays. Only one node per depth is ever
//! in flight during the depth-first walk, so each array holds exactly that
//! node's span. As in the flat schedule, the odd upward array at depth 1 is
//! the only state carried between iterations: the root reads it as feedback
//! before its right half has been recomputed.

use crate::code::{NodeClass, PolarCode};
use crate::counters::Kernel;
use crate::llr::LlrArith;
use crate::memory::MessageMemory;

use super::Engine;

/// Which upward array a node writes: left children deposit into the even
/// set, right children into the odd set.
#[derive(Clone, Copy)]
enum Slot {
    Even,
    Odd,
}

pub(super) struct SrcscEngine<'c, A: LlrArith> {
    code: &'c PolarCode,
    mem: MessageMemory<A::Llr>,
}

impl<'c, A: LlrArith> SrcscEngine<'c, A> {
    pub(super) fn new(code: &'c PolarCode, arith: &A, channel: &[A::Llr]) -> Self {
        let mut mem = MessageMemory::alloc(code, arith.zero());
        mem.l[0].copy_from_slice(channel);
        SrcscEngine { code, mem }
    }

    /// Processes tree node `v` at `depth`, leaving its upward messages in the
    /// even or odd array at `depth` according to `slot`.
    fn node(&mut self, v: usize, depth: usize, slot: Slot, k: &mut Kernel<'_, A>) {
        k.visit_node();
        match self.code.node_class(v) {
            NodeClass::Rate0 => {
                let certainty = k.arith().infinity();
                self.fill(depth, slot, certainty);
            }
            NodeClass::Rate1 => {
                let neutral = k.arith().zero();
                self.fill(depth, slot, neutral);
            }
            NodeClass::Mixed => {
                let half = self.mem.l[depth].len() / 2;
                {
                    let (shallow, deep) = self.mem.l.split_at_mut(depth + 1);
                    let av = &shallow[depth];
                    let down = &mut deep[0];
                    if depth == 0 {
                        // The root's left descent folds in the right half's
                        // upward messages from the previous iteration
                        // (zeros on iteration 1).
                        let feedback = &self.mem.ro[1];
                        for t in 0..half {
                            let with_feedback = k.add(av[2 * t + 1], feedback[t]);
                            down[t] = k.f(av[2 * t], with_feedback);
                        }
                    } else {
                        // Deeper left descents drop the right-going term,
                        // exactly like the flat schedule's plain stages.
                        for t in 0..half {
                            down[t] = k.f(av[2 * t], av[2 * t + 1]);
                        }
                    }
                }
                self.node(2 * v + 1, depth + 1, Slot::Even, k);
                {
                    let (shallow, deep) = self.mem.l.split_at_mut(depth + 1);
                    let av = &shallow[depth];
                    let down = &mut deep[0];
                    let left_up = &self.mem.re[depth + 1];
                    for t in 0..half {
                        let folded = k.f(av[2 * t], left_up[t]);
                        down[t] = k.add(av[2 * t + 1], folded);
                    }
                }
                self.node(2 * v + 2, depth + 1, Slot::Odd, k);
                match slot {
                    Slot::Even => {
                        let (target, deeper) = self.mem.re.split_at_mut(depth + 1);
                        beta_combine(k, &deeper[0], &self.mem.ro[depth + 1], &self.mem.l[depth], &mut target[depth]);
                    }
                    Slot::Odd => {
                        let (target, deeper) = self.mem.ro.split_at_mut(depth + 1);
                        beta_combine(k, &self.mem.re[depth + 1], &deeper[0], &self.mem.l[depth], &mut target[depth]);
                    }
                }
            }
        }
    }

    /// Writes a pruned subtree's constant upward messages.
    fn fill(&mut self, depth: usize, slot: Slot, value: A::Llr) {
        let target = match slot {
            Slot::Even => &mut self.mem.re[depth],
            Slot::Odd => &mut self.mem.ro[depth],
        };
        target.fill(value);
    }
}

/// Combines a node's two upward halves with its downward messages, exactly
/// as the flat schedule's right sweep does.
fn beta_combine<A: LlrArith>(
    k: &mut Kernel<'_, A>,
    left_up: &[A::Llr],
    right_up: &[A::Llr],
    av: &[A::Llr],
    out: &mut [A::Llr],
) {
    for t in 0..left_up.len() {
        let with_l = k.add(right_up[t], av[2 * t + 1]);
        out[2 * t] = k.f(left_up[t], with_l);
        let folded = k.f(left_up[t], av[2 * t]);
        out[2 * t + 1] = k.add(right_up[t], folded);
    }
}

impl<A: LlrArith> Engine<A> for SrcscEngine<'_, A> {
    fn run_iteration(&mut self, k: &mut Kernel<'_, A>) {
        // The root deposits into the even array at depth 0, completing the
        // extrinsic outputs read by write_soft.
        self.node(0, 0, Slot::Even, k);
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
