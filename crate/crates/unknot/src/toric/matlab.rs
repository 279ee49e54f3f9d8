//! Faithful re-computation of the companion MATLAB program's two outputs.
//!
//! MUKD1 is the vector W: the step-1 set first, then for each later odd step
//! the union of the adjacent even/odd pair of sets, shifted by the
//! accumulated odd-step offset — each block sorted ascending (the program
//! builds blocks with `union`, which sorts), but blocks concatenated in step
//! order, so W need not be globally sorted.
//!
//! MUKD2 is printed as ((p−1)(q−1)/2) + 1 − W, which already goes negative
//! for K(7,4); the corrected variant uses the reversal map (p−1)q + 1 − W
//! and is valid for the reversed braid. Both are exposed so verification can
//! adjudicate.

use num_integer::Integer;
use std::collections::BTreeSet;

use crate::braid::BraidError;

use super::{euclid_trace, step_positions, StepParity};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatlabParity {
    pub p: usize,
    pub q: usize,
    /// W in the program's element order.
    pub mukd1: Vec<usize>,
    /// ((p−1)(q−1)/2) + 1 − W, verbatim; may contain out-of-range entries.
    pub mukd2_as_printed: Vec<i64>,
    /// (p−1)q + 1 − W: positions for the reversed braid.
    pub mukd2_corrected: Vec<i64>,
}

impl MatlabParity {
    pub fn mukd1_set(&self) -> BTreeSet<usize> {
        self.mukd1.iter().copied().collect()
    }

    fn in_range(values: &[i64], total: i64) -> bool {
        values.iter().all(|&v| v >= 1 && v <= total)
    }

    /// True when every as-printed MUKD2 entry is a legal crossing position.
    pub fn as_printed_in_range(&self) -> bool {
        Self::in_range(&self.mukd2_as_printed, (self.q * (self.p - 1)) as i64)
    }

    pub fn corrected_in_range(&self) -> bool {
        Self::in_range(&self.mukd2_corrected, (self.q * (self.p - 1)) as i64)
    }

    /// Corrected MUKD2 as sorted positions; only valid when in range.
    pub fn corrected_positions(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.mukd2_corrected.iter().map(|&x| x as usize).collect();
        v.sort_unstable();
        v
    }
}

/// Runs the companion program's computation for a torus knot (gcd(p,q) = 1 required).
pub fn matlab_parity(p: usize, q: usize) -> Result<MatlabParity, BraidError> {
    if p < 2 || q < 1 {
        return Err(BraidError::InvalidTorusParams { p, q });
    }
    if p.gcd(&q) != 1 {
        return Err(BraidError::InvalidTorusParams { p, q });
    }
    let trace = euclid_trace(p, q)?;
    let row = p - 1;

    // sorted per-step sets, index 0 = step 1
    let sets: Vec<Vec<usize>> = trace
        .steps
        .iter()
        .map(|s| {
            let mut v: Vec<usize> = step_positions(s, row).into_iter().map(|(x, _)| x).collect();
            v.sort_unstable();
            v
        })
        .collect();

    let mut w: Vec<usize> = sets[0].clone();
    let mut offset_rows = 0usize;
    let mut s = 0usize; // index of the odd step whose offset applies next
    while s < trace.steps.len() {
        let step = &trace.steps[s];
        if step.parity == StepParity::Odd {
            offset_rows += step.m * step.p;
            let mut block: Vec<usize> = Vec::new();
            if let Some(even) = sets.get(s + 1) {
                block.extend(even);
            }
            if let Some(odd) = sets.get(s + 2) {
                block.extend(odd);
            }
            block.sort_unstable();
            w.extend(block.into_iter().map(|x| x + offset_rows * row));
        }
        s += 2;
    }

    let half = ((p - 1) * (q - 1) / 2) as i64;
    let full = ((p - 1) * q) as i64;
    let mukd2_as_printed = w.iter().map(|&x| half + 1 - x as i64).collect();
    let mukd2_corrected = w.iter().map(|&x| full + 1 - x as i64).collect();
    Ok(MatlabParity { p, q, mukd1: w, mukd2_as_printed, mukd2_corrected })
}
