//! Exact decision of the braid word problem by Dehornoy handle reduction,
//! plus machine-checkable rewrite certificates.
//!
//! A σ_i-handle is a factor σ_i^e · u · σ_i^{−e} whose interior u only uses
//! generators with index > i. Reducing the handle deletes the two σ_i letters
//! and conjugates every σ_{i+1}^{±1} in u to σ_{i+1}^{−e} σ_i^{±1} σ_{i+1}^{e}.
//! Iterated reduction of permitted handles terminates, and a fully reduced
//! nonempty word is σ-positive or σ-negative in its main generator, hence not
//! the identity. We always reduce the handle that closes first (leftmost end
//! position); that handle can contain no nested one, so it is permitted, and
//! the strategy is deterministic.

pub mod certificate;

pub use certificate::{
    apply_step, Certificate, CertificateError, CertificateKind, RewriteStep,
};

use crate::braid::{BraidWord, Letter};
use crate::config::DEFAULT_WORD_PROBLEM_CAP;

/// Errors distinct from a `false` answer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WordProblemError {
    /// Inconclusive: the configured step cap was exhausted.
    StepLimitExceeded { limit: u64 },
    StrandMismatch { left: usize, right: usize },
}

impl std::fmt::Display for WordProblemError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            WordProblemError::StepLimitExceeded { limit } => {
                write!(f, "Inconclusive: cap of {limit} reduction steps exceeded")
            }
            WordProblemError::StrandMismatch { left, right } => {
                write!(f, "strand count mismatch: {left} vs {right}")
            }
        }
    }
}

impl std::error::Error for WordProblemError {}

/// True iff `w` represents the identity of the braid group on `w.strands()`
/// strands. Exact; uses the default step cap.
pub fn is_identity(w: &BraidWord) -> Result<bool, WordProblemError> {
    is_identity_with_cap(w, DEFAULT_WORD_PROBLEM_CAP)
}

/// As `is_identity`, with an explicit cap on elementary reduction steps.
pub fn is_identity_with_cap(w: &BraidWord, cap: u64) -> Result<bool, WordProblemError> {
    // cheap necessary screens
    if w.exponent_sum() != 0 {
        return Ok(false);
    }
    if !w.underlying_permutation().is_identity() {
        return Ok(false);
    }

    let mut letters: Vec<Letter> = w.free_reduce().letters().to_vec();
    let mut steps: u64 = 0;
    loop {
        if letters.is_empty() {
            return Ok(true);
        }
        match leftmost_closing_handle(&letters) {
            None => return Ok(false),
            Some((s, t)) => {
                steps += 1;
                if steps > cap {
                    return Err(WordProblemError::StepLimitExceeded { limit: cap });
                }
                reduce_handle(&mut letters, s, t);
                free_reduce_in_place(&mut letters);
            }
        }
    }
}

/// True iff `w1` and `w2` represent the same group element.
pub fn are_equal(w1: &BraidWord, w2: &BraidWord) -> Result<bool, WordProblemError> {
    are_equal_with_cap(w1, w2, DEFAULT_WORD_PROBLEM_CAP)
}

pub fn are_equal_with_cap(
    w1: &BraidWord,
    w2: &BraidWord,
    cap: u64,
) -> Result<bool, WordProblemError> {
    if w1.strands() != w2.strands() {
        return Err(WordProblemError::StrandMismatch { left: w1.strands(), right: w2.strands() });
    }
    let prod = w1.concat(&w2.inverse()).expect("strand counts checked");
    is_identity_with_cap(&prod, cap)
}

/// Finds the handle with the smallest end position: scan each position t and
/// look back for the nearest letter with index ≤ index(t); a handle ends at t
/// exactly when that letter has equal index and opposite sign.
fn leftmost_closing_handle(letters: &[Letter]) -> Option<(usize, usize)> {
    for t in 1..letters.len() {
        let lt = letters[t];
        for s in (0..t).rev() {
            let ls = letters[s];
            if ls.index < lt.index {
                break;
            }
            if ls.index == lt.index {
                if ls.sign == -lt.sign {
                    return Some((s, t));
                }
                break;
            }
        }
    }
    None
}

/// Replaces σ_i^e u σ_i^{−e} (positions s..t) by u with each σ_{i+1}^{±1}
/// rewritten to σ_{i+1}^{−e} σ_i^{±1} σ_{i+1}^{e}.
fn reduce_handle(letters: &mut Vec<Letter>, s: usize, t: usize) {
    let i = letters[s].index;
    let e = letters[s].sign;
    debug_assert_eq!(letters[t].index, i);
    debug_assert_eq!(letters[t].sign, -e);
    let mut replacement = Vec::with_capacity(3 * (t - s));
    for &l in &letters[s + 1..t] {
        debug_assert!(l.index > i);
        if l.index == i + 1 {
            replacement.push(Letter::new(i + 1, -e));
            replacement.push(Letter::new(i, l.sign));
            replacement.push(Letter::new(i + 1, e));
        } else {
            replacement.push(l);
        }
    }
    letters.splice(s..=t, replacement);
}

fn free_reduce_in_place(letters: &mut Vec<Letter>) {
    let mut stack: Vec<Letter> = Vec::with_capacity(letters.len());
    for &l in letters.iter() {
        match stack.last() {
            Some(top) if top.index == l.index && top.sign == -l.sign => {
                stack.pop();
            }
            _ => stack.push(l),
        }
    }
    *letters = stack;
}
