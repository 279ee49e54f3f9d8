//! Minimal unknotting crossing data for toric braids.
//!
//! `u_crossing_data` is the direct position set read off the q-factor
//! representation of B(p,q): in factor k the last k−1 crossings are selected
//! (with the p < q case tiling that pattern m times and finishing with the
//! a-row remainder). `minimal_ucd` runs the alternating Euclid recursion:
//! odd steps divide q_i = m_i·p_i + a_i and contribute m_i full blocks plus a
//! remainder block, even steps divide p_i = m_i·q_i + a_i and contribute the
//! m_i−1 intermediate reduction sets; offsets from odd steps shift everything
//! produced later. Flipping the resulting positions turns the closure into
//! the gcd(p,q)-component unlink.

pub mod certify;
pub mod matlab;
pub mod reduction_pattern;
pub mod verify;

pub use certify::{certify_plan, certify_unknot, CertifyError, CertifyOutcome};
pub use matlab::{matlab_parity, MatlabParity};
pub use reduction_pattern::signed_reduction_pair;
pub use verify::{verify_plan, verify_plan_mirrored, verify_positions};

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::braid::{BraidError, BraidWord, CrossingPosition};

/// Torus parameters with their gcd; d = 1 is a knot, d > 1 a link.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ToricParams {
    pub p: usize,
    pub q: usize,
    pub d: usize,
}

impl ToricParams {
    pub fn new(p: usize, q: usize) -> Result<Self, BraidError> {
        if p < 2 || q < 1 {
            return Err(BraidError::InvalidTorusParams { p, q });
        }
        Ok(ToricParams { p, q, d: p.gcd(&q) })
    }
}

/// Unknotting number ((p−1)(q−1) + gcd(p,q) − 1)/2 of the torus knot or link.
pub fn unknotting_number(p: usize, q: usize) -> usize {
    ((p - 1) * (q - 1) + p.gcd(&q) - 1) / 2
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StepParity {
    Odd,
    Even,
}

/// One recursion step: the pair (p_i, q_i) and its division.
///
/// Odd steps divide q_i = m_i·p_i + a_i, even steps divide p_i = m_i·q_i + a_i;
/// in both cases the previous two remainders supply the pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EuclidStep {
    pub index: usize,
    pub p: usize,
    pub q: usize,
    pub m: usize,
    pub a: usize,
    pub parity: StepParity,
}

/// Which stopping rule fired.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TerminalRule {
    /// Knot branch: remainder 1 (odd q_n ≡ 1 mod p_n, even p_n ≡ 1 mod q_n).
    RemainderOne,
    /// Knot branch, odd steps only: q_n ≡ p_n − 1 (mod p_n).
    RemainderPMinusOne,
    /// Link branch: the remainder reached 0.
    RemainderZero,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EuclidTrace {
    pub steps: Vec<EuclidStep>,
    pub terminal: TerminalRule,
}

/// Runs the alternating division scheme until a stopping rule fires.
pub fn euclid_trace(p: usize, q: usize) -> Result<EuclidTrace, BraidError> {
    if p < 2 || q < 1 {
        return Err(BraidError::InvalidTorusParams { p, q });
    }
    let mut steps = Vec::new();
    let mut dividend = q; // a_{i−2}, starting from a_{−1} = q
    let mut divisor = p; // a_{i−1}, starting from a_0 = p
    let mut index = 1;
    loop {
        let a = dividend % divisor;
        let m = dividend / divisor;
        let parity = if index % 2 == 1 { StepParity::Odd } else { StepParity::Even };
        let (pi, qi) = match parity {
            StepParity::Odd => (divisor, dividend),
            StepParity::Even => (dividend, divisor),
        };
        steps.push(EuclidStep { index, p: pi, q: qi, m, a, parity });
        let done = match parity {
            StepParity::Odd => a == 0 || a == 1 || a + 1 == pi,
            StepParity::Even => a == 0 || a == 1,
        };
        if done {
            let terminal = if a == 0 {
                TerminalRule::RemainderZero
            } else if a == 1 {
                TerminalRule::RemainderOne
            } else {
                TerminalRule::RemainderPMinusOne
            };
            return Ok(EuclidTrace { steps, terminal });
        }
        dividend = divisor;
        divisor = a;
        index += 1;
    }
}

/// Strictly increasing 1-based crossing positions into B(p,q).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UCrossingData(Vec<CrossingPosition>);

impl UCrossingData {
    /// Sorts and validates: positions in 1..=max, duplicates rejected.
    pub fn new(mut positions: Vec<CrossingPosition>, max: usize) -> Result<Self, BraidError> {
        positions.sort_unstable();
        for pair in positions.windows(2) {
            assert!(pair[0] != pair[1], "duplicate crossing position {}", pair[0]);
        }
        for &pos in &positions {
            if pos < 1 || pos > max {
                return Err(BraidError::PositionOutOfRange { position: pos, len: max });
            }
        }
        Ok(UCrossingData(positions))
    }

    pub fn as_slice(&self) -> &[CrossingPosition] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, pos: CrossingPosition) -> bool {
        self.0.binary_search(&pos).is_ok()
    }
}

/// The direct u-crossing data of B(p,q). Purely arithmetic; coprimality
/// is not required (the link branch reuses the same formulas).
pub fn u_crossing_data(p: usize, q: usize) -> Result<UCrossingData, BraidError> {
    if p < 2 || q < 1 {
        return Err(BraidError::InvalidTorusParams { p, q });
    }
    let row = p - 1;
    let mut positions = Vec::new();
    // last k−1 crossings of factor k, for factors 2..=limit
    let tail_pattern = |limit: usize, base: usize, out: &mut Vec<usize>| {
        for k in 2..=limit {
            for j in 0..=k - 2 {
                out.push(base + k * row - j);
            }
        }
    };
    if q <= p {
        tail_pattern(q, 0, &mut positions);
    } else {
        let m = q / p;
        let a = q % p;
        for b in 0..m {
            tail_pattern(p, b * p * row, &mut positions);
        }
        if a >= 2 {
            tail_pattern(a, m * p * row, &mut positions);
        }
    }
    UCrossingData::new(positions, q * row)
}

/// Which formula produced a position.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "set", rename_all = "kebab-case")]
pub enum ProvenanceSet {
    /// Odd step, full block copy j (0-based), the X_i pattern with l = p_i.
    X { copy: usize },
    /// Odd step, remainder block (l = a_i), the Y pattern.
    Y,
    /// Even step, intermediate reduction j (the X_{i,j} pattern).
    Xij { j: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PositionProvenance {
    pub position: CrossingPosition,
    pub step: usize,
    #[serde(flatten)]
    pub set: ProvenanceSet,
}

/// A complete unknotting plan: positions into B(p,q), where each one came
/// from, and the recursion trace that produced them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnknottingPlan {
    pub params: ToricParams,
    pub positions: UCrossingData,
    pub provenance: Vec<PositionProvenance>,
    pub trace: EuclidTrace,
}

impl UnknottingPlan {
    /// B(p,q) with the plan's crossings flipped.
    pub fn flipped_word(&self) -> BraidWord {
        BraidWord::toric(self.params.p, self.params.q)
            .expect("validated parameters")
            .apply_crossing_changes(self.positions.as_slice())
            .expect("validated positions")
    }

    /// JSON rendering: {p, q, d, unknotting_number, positions, provenance, trace}.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "p": self.params.p,
            "q": self.params.q,
            "d": self.params.d,
            "unknotting_number": unknotting_number(self.params.p, self.params.q),
            "positions": self.positions.as_slice(),
            "provenance": self.provenance,
            "trace": self.trace,
        })
    }
}

/// Raw positions contributed by one step, without cross-step offsets.
fn step_positions(step: &EuclidStep, row: usize) -> Vec<(CrossingPosition, ProvenanceSet)> {
    let mut out = Vec::new();
    match step.parity {
        StepParity::Odd => {
            for copy in 0..=step.m {
                let (l, set) = if copy < step.m {
                    (step.p, ProvenanceSet::X { copy })
                } else {
                    (step.a, ProvenanceSet::Y)
                };
                let base = copy * step.p * row;
                for k in 1..l {
                    for g in 1..=k {
                        out.push((base + k * row + step.p - g, set));
                    }
                }
            }
        }
        StepParity::Even => {
            for j in 1..step.m {
                let base = step.p - j * step.q;
                for k in 1..step.q {
                    for g in 1..=k {
                        out.push((k * row + base - g, ProvenanceSet::Xij { j }));
                    }
                }
            }
        }
    }
    out
}

/// Minimal unknotting crossing data for B(p,q): the nested combination of the
/// per-step sets, with every odd step's m_i·p_i consumed rows shifting all
/// later contributions.
pub fn minimal_ucd(p: usize, q: usize) -> Result<UnknottingPlan, BraidError> {
    let params = ToricParams::new(p, q)?;
    let trace = euclid_trace(p, q)?;
    let row = p - 1;
    let mut offset = 0usize;
    let mut entries: Vec<PositionProvenance> = Vec::new();
    for step in &trace.steps {
        for (pos, set) in step_positions(step, row) {
            entries.push(PositionProvenance { position: offset + pos, step: step.index, set });
        }
        if step.parity == StepParity::Odd {
            offset += step.m * step.p * row;
        }
    }
    entries.sort_by_key(|e| e.position);
    let positions =
        UCrossingData::new(entries.iter().map(|e| e.position).collect(), q * row)?;
    Ok(UnknottingPlan { params, positions, provenance: entries, trace })
}

/// Positions for the reversed braid B̄(p,q): x ↦ q(p−1) + 1 − x.
pub fn mirrored_ucd(plan: &UnknottingPlan) -> UCrossingData {
    let total = plan.params.q * (plan.params.p - 1);
    let mirrored = plan.positions.as_slice().iter().map(|&x| total + 1 - x).collect();
    UCrossingData::new(mirrored, total).expect("mirror of valid positions is valid")
}
