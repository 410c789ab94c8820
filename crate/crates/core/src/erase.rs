//! Backspace evaluation of finite and ultimately periodic words.
//!
//! An eraser deletes the nearest surviving symbol to its left. Evaluation runs
//! left to right as a stack machine: ordinary symbols are pushed, an eraser
//! pops. An eraser that meets an empty stack makes the whole evaluation
//! undefined.
//!
//! Staged evaluation with erasers `↞_1 … ↞_k` runs `k` passes in increasing
//! index order. Pass `j` uses `↞_j` as its eraser and treats letters and every
//! `↞_i` with `i > j` as erasable symbols.

use std::fmt;

use crate::error::Error;
use crate::word::{Alphabet, StagedSymbol, StagedWord, UpWord, Word};

/// Result of evaluating a word.
#[derive(Clone)]
pub enum EvalOutcome<S> {
    Undefined,
    Finite(Word<S>),
    /// Always normalized.
    Infinite(UpWord<S>),
}

impl<S: Copy + Eq> EvalOutcome<S> {
    pub fn is_undefined(&self) -> bool {
        matches!(self, EvalOutcome::Undefined)
    }

    /// True for `Finite(λ)`.
    pub fn is_empty_word(&self) -> bool {
        matches!(self, EvalOutcome::Finite(w) if w.is_empty())
    }
}

impl<S: Copy + Eq> PartialEq for EvalOutcome<S> {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (EvalOutcome::Undefined, EvalOutcome::Undefined) => true,
            (EvalOutcome::Finite(a), EvalOutcome::Finite(b)) => a == b,
            (EvalOutcome::Infinite(a), EvalOutcome::Infinite(b)) => a == b,
            _ => false,
        }
    }
}

impl<S: Copy + Eq> Eq for EvalOutcome<S> {}

impl<S: Alphabet> fmt::Display for EvalOutcome<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EvalOutcome::Undefined => f.write_str("undefined"),
            EvalOutcome::Finite(w) => write!(f, "finite: {w}"),
            EvalOutcome::Infinite(x) => write!(f, "infinite: {x}"),
        }
    }
}

impl<S: Alphabet> fmt::Debug for EvalOutcome<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Witness that the evaluation of `u · v^ω` has reached its loop.
///
/// Starting from the stack left after `u` and `warmup_periods` copies of `v`,
/// each further block of `loop_periods` copies of `v` digs exactly `popped`
/// symbols below the current top and leaves `pushed` on top.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LoopCertificate<S> {
    pub warmup_periods: usize,
    pub loop_periods: usize,
    pub popped: usize,
    pub pushed: Vec<S>,
}

#[derive(Clone)]
pub struct UpEvaluation<S> {
    pub outcome: EvalOutcome<S>,
    /// Present whenever the outcome is `Finite` or `Infinite`.
    pub certificate: Option<LoopCertificate<S>>,
}

impl<S: Alphabet> fmt::Debug for UpEvaluation<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("UpEvaluation")
            .field("outcome", &self.outcome)
            .field("certificate", &self.certificate)
            .finish()
    }
}

/// Runs one backspace pass of `input` on top of `stack`.
///
/// Returns `false` as soon as an eraser meets an empty stack; `stack` is then
/// left in an unspecified state.
pub fn backspace_into<S: Copy>(stack: &mut Vec<S>, input: &[S], is_eraser: impl Fn(S) -> bool) -> bool {
    for &s in input {
        if is_eraser(s) {
            if stack.pop().is_none() {
                return false;
            }
        } else {
            stack.push(s);
        }
    }
    true
}

/// One backspace pass over a finite word. `None` means undefined.
pub fn backspace<S: Copy>(input: &[S], is_eraser: impl Fn(S) -> bool) -> Option<Vec<S>> {
    let mut stack = Vec::with_capacity(input.len());
    backspace_into(&mut stack, input, is_eraser).then_some(stack)
}

/// Effect of one pass over `block` relative to the stack top it starts on:
/// how many pre-existing symbols it pops and what it leaves above them.
fn block_effect<S: Copy>(block: &[S], is_eraser: impl Fn(S) -> bool) -> (usize, Vec<S>) {
    let mut popped = 0;
    let mut local = Vec::new();
    for &s in block {
        if is_eraser(s) {
            if local.pop().is_none() {
                popped += 1;
            }
        } else {
            local.push(s);
        }
    }
    (popped, local)
}

/// One backspace pass over `u · v^ω`.
///
/// The effect of a period on the stack depends on the period's content alone,
/// so the loop closes after a single period: with `d` popped and `w` pushed
/// per period, the stack shrinks (`|w| < d`, eventually stuck), stays level
/// (`|w| = d`, everything above the bottom is rewritten forever) or grows
/// (`|w| > d`, the first `|w| - d` symbols of each `w` are permanent).
pub fn backspace_up<S: Copy + Eq>(x: &UpWord<S>, is_eraser: impl Fn(S) -> bool + Copy) -> UpEvaluation<S> {
    let undefined = UpEvaluation {
        outcome: EvalOutcome::Undefined,
        certificate: None,
    };
    let mut stack = Vec::new();
    if !backspace_into(&mut stack, x.prefix(), is_eraser) {
        return undefined;
    }
    let (popped, pushed) = block_effect(x.period(), is_eraser);
    if stack.len() < popped || pushed.len() < popped {
        return undefined;
    }
    stack.truncate(stack.len() - popped);
    let outcome = if pushed.len() == popped {
        EvalOutcome::Finite(Word::new(stack))
    } else {
        let permanent = pushed[..pushed.len() - popped].to_vec();
        let limit = UpWord::new(Word::new(stack), Word::new(permanent)).expect("nonempty period");
        EvalOutcome::Infinite(limit.normalize())
    };
    UpEvaluation {
        outcome,
        certificate: Some(LoopCertificate {
            warmup_periods: 0,
            loop_periods: 1,
            popped,
            pushed,
        }),
    }
}

fn is_any_eraser(s: StagedSymbol) -> bool {
    s.eraser_index().is_some()
}

/// Single-eraser evaluation: every eraser symbol acts as `↞`, whatever its
/// index. Yields `Finite` or `Undefined`.
pub fn erase_finite(w: &StagedWord) -> EvalOutcome<StagedSymbol> {
    match backspace(w, is_any_eraser) {
        Some(stack) => EvalOutcome::Finite(Word::new(stack)),
        None => EvalOutcome::Undefined,
    }
}

/// Single-eraser evaluation of an ultimately periodic word.
pub fn erase_up(x: &UpWord<StagedSymbol>) -> UpEvaluation<StagedSymbol> {
    backspace_up(x, is_any_eraser)
}

/// Stage `j` alone: `↞_j` erases, everything else is pushed.
pub fn erase_stage(w: &[StagedSymbol], j: u32) -> Option<Vec<StagedSymbol>> {
    backspace(w, |s| s == StagedSymbol::Eraser(j))
}

fn check_indices<'a>(symbols: impl IntoIterator<Item = &'a StagedSymbol>, k: u32) -> Result<(), Error> {
    match symbols.into_iter().filter_map(|s| s.eraser_index()).find(|&j| j > k) {
        Some(index) => Err(Error::IndexOutOfRange { index, stages: k }),
        None => Ok(()),
    }
}

/// Runs stages `1..=k` over a word whose indices are known to be at most `k`.
pub(crate) fn run_stages(w: &[StagedSymbol], k: u32) -> Option<Vec<StagedSymbol>> {
    let mut current = w.to_vec();
    for j in 1..=k {
        if !current.contains(&StagedSymbol::Eraser(j)) {
            continue;
        }
        current = erase_stage(&current, j)?;
    }
    Some(current)
}

/// Staged evaluation with erasers `↞_1 … ↞_k` applied in that order.
///
/// A `Finite` result contains letters only.
pub fn staged_erase_finite(w: &StagedWord, k: u32) -> Result<EvalOutcome<StagedSymbol>, Error> {
    check_indices(w, k)?;
    Ok(match run_stages(w, k) {
        Some(r) => EvalOutcome::Finite(Word::new(r)),
        None => EvalOutcome::Undefined,
    })
}

/// Staged evaluation of an ultimately periodic word; each stage consumes the
/// previous stage's outcome.
pub fn staged_erase_up(x: &UpWord<StagedSymbol>, k: u32) -> Result<EvalOutcome<StagedSymbol>, Error> {
    check_indices(x.prefix().iter().chain(x.period().iter()), k)?;
    let mut current = x.clone();
    for j in 1..=k {
        let eraser = StagedSymbol::Eraser(j);
        match backspace_up(&current, |s| s == eraser).outcome {
            EvalOutcome::Undefined => return Ok(EvalOutcome::Undefined),
            EvalOutcome::Infinite(next) => current = next,
            EvalOutcome::Finite(w) => {
                // Remaining stages are finite passes.
                let rest = (j + 1..=k).try_fold(w.into_symbols(), |acc, i| {
                    if acc.contains(&StagedSymbol::Eraser(i)) {
                        erase_stage(&acc, i)
                    } else {
                        Some(acc)
                    }
                });
                return Ok(match rest {
                    Some(r) => EvalOutcome::Finite(Word::new(r)),
                    None => EvalOutcome::Undefined,
                });
            }
        }
    }
    Ok(EvalOutcome::Infinite(current.normalize()))
}
