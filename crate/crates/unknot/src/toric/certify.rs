//! Markov-equivalence certificates for flipped toric braids.
//!
//! The plan's recursion trace is replayed as recorded rewrite steps, so every
//! certificate can be checked independently of this module:
//!
//! - An odd step's m_i leading blocks are flipped B(p_i,p_i) words. Each one
//!   is eliminated level by level: the first row's top letter is pushed
//!   through the following rows with long-run braid-relation steps (growing a
//!   descending block by one letter per row), the block then cancels against
//!   the all-negative last row, and the residue is the same pattern one level
//!   down.
//! - An even step peels strands in rounds: one push pass per round leaves the
//!   top generator with a single occurrence, a rotation brings it to the end,
//!   and a destabilization removes it; the leftover descending block cancels
//!   against the tail of the bottom-most still-active row at the start of the
//!   next round. Q rounds reduce flipped B(P,Q) to flipped B(P−Q,Q), the
//!   deeper flips riding along untouched in the low-index region.
//! - Terminal steps finish with plain destabilization runs (remainder 1 and
//!   p−1 cases) or end at the empty word on gcd(p,q) strands (remainder 0).

use crate::braid::BraidWord;
use crate::word_problem::{apply_step, Certificate, CertificateKind, RewriteStep};

use super::{minimal_ucd, StepParity, TerminalRule, UnknottingPlan};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CertifyError {
    BudgetExceeded { budget: usize },
    /// The word did not have the expected shape; certificates are never
    /// emitted from a partial reduction.
    Internal(String),
}

impl std::fmt::Display for CertifyError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CertifyError::BudgetExceeded { budget } => {
                write!(f, "certificate step budget of {budget} exhausted")
            }
            CertifyError::Internal(msg) => write!(f, "certificate construction failed: {msg}"),
        }
    }
}

impl std::error::Error for CertifyError {}

/// Result of the certificate search.
#[derive(Debug, Clone)]
pub enum CertifyOutcome {
    Proved(Certificate),
    Inconclusive { reason: String },
}

impl CertifyOutcome {
    pub fn certificate(&self) -> Option<&Certificate> {
        match self {
            CertifyOutcome::Proved(c) => Some(c),
            CertifyOutcome::Inconclusive { .. } => None,
        }
    }
}

/// Word wrapper that applies and records steps, so the emitted chain is
/// exactly what was executed.
struct Builder {
    start: BraidWord,
    word: BraidWord,
    steps: Vec<RewriteStep>,
    budget: usize,
}

impl Builder {
    fn new(start: BraidWord, budget: usize) -> Self {
        let word = start.clone();
        Builder { start, word, steps: Vec::new(), budget }
    }

    fn apply(&mut self, step: RewriteStep) -> Result<(), CertifyError> {
        if self.steps.len() >= self.budget {
            return Err(CertifyError::BudgetExceeded { budget: self.budget });
        }
        self.word = apply_step(&self.word, &step).map_err(CertifyError::Internal)?;
        self.steps.push(step);
        Ok(())
    }

    /// Cancels the inverse pair at 0-based positions (site, site+1).
    fn free_cancel(&mut self, site: usize) -> Result<(), CertifyError> {
        self.apply(RewriteStep::FreeCancel { site: site + 1 })
    }

    /// Braid-relation rewrite with the lead letter at 0-based `site`.
    fn braid_fwd(&mut self, site: usize, i: usize, j: usize, n: usize) -> Result<(), CertifyError> {
        self.apply(RewriteStep::BraidRelation { site: site + 1, i, j, n, reversed: false })
    }

    /// Cyclic rotation w = u·v ↦ v·u via one conjugation and |u| cancels.
    fn rotate_left(&mut self, k: usize) -> Result<(), CertifyError> {
        let len = self.word.len();
        if len == 0 {
            return Ok(());
        }
        let k = k % len;
        if k == 0 {
            return Ok(());
        }
        let prefix =
            BraidWord::new(self.word.strands(), self.word.letters()[..k].to_vec())
                .map_err(|e| CertifyError::Internal(e.to_string()))?;
        self.apply(RewriteStep::M1Conjugate { conjugator: prefix.inverse() })?;
        for site in (1..=k).rev() {
            self.apply(RewriteStep::FreeCancel { site })?;
        }
        Ok(())
    }

    fn destabilize(&mut self) -> Result<(), CertifyError> {
        self.apply(RewriteStep::M2Destabilize)
    }

    fn finish(self, kind: CertificateKind) -> Certificate {
        Certificate { kind, start: self.start, steps: self.steps, end: self.word }
    }
}

/// Pushes the first row's top letter through rows 2..=rows of full ascending
/// width-`width` runs starting at `at`; returns the final (block_start,
/// block_len) of the descending block left behind, 0-based.
fn push_rows(
    b: &mut Builder,
    at: usize,
    width: usize,
    rows: usize,
) -> Result<(usize, usize), CertifyError> {
    let mut bs = at + width - 1;
    let mut bl = 1usize;
    for _ in 2..=rows {
        for t in 0..bl {
            let site = bs + bl - 1 - t;
            let i = b.word.letters()[site].index;
            b.braid_fwd(site, i, 1, width)?;
        }
        bs += width - 1;
        bl += 1;
    }
    Ok((bs, bl))
}

/// Eliminates a flipped B(p,p) block sitting at `at`.
fn cancel_alpha_block(b: &mut Builder, at: usize, p: usize) -> Result<(), CertifyError> {
    let mut lvl = p;
    loop {
        if lvl < 2 {
            return Err(CertifyError::Internal(format!("alpha block of degenerate size {lvl}")));
        }
        if lvl == 2 {
            return b.free_cancel(at);
        }
        let width = lvl - 1;
        let (bs, bl) = push_rows(b, at, width, lvl - 1)?;
        for t in 0..bl {
            b.free_cancel(bs + bl - 1 - t)?;
        }
        lvl -= 1;
    }
}

/// Rewrites the chain η₁…η_{p−1} at `at` into σ_{p−1}σ_{p−2}…σ₁.
fn reduce_eta_chain(b: &mut Builder, at: usize, p: usize) -> Result<(), CertifyError> {
    if p == 2 {
        return Ok(()); // the chain is the single letter σ₁
    }
    push_rows(b, at, p - 1, p - 1)?;
    cancel_alpha_block(b, at, p - 1)
}

/// Destabilizes the whole word σ₁σ₂…σ_k away.
fn destab_ascending(b: &mut Builder, k: usize) -> Result<(), CertifyError> {
    for _ in 0..k {
        b.destabilize()?;
    }
    Ok(())
}

/// Destabilizes the whole word σ_kσ_{k−1}…σ₁ away.
fn destab_descending(b: &mut Builder, k: usize) -> Result<(), CertifyError> {
    for _ in 0..k {
        b.rotate_left(1)?;
        b.destabilize()?;
    }
    Ok(())
}

/// One strand-reduction pass: flipped B(P,Q) with arbitrary low-region signs, on
/// P = strands, becomes the corresponding flipped B(P−Q,Q) on P−Q strands.
fn reduce_even_type_once(b: &mut Builder, q: usize) -> Result<(), CertifyError> {
    let p_cur = b.word.strands();
    if p_cur <= q {
        return Err(CertifyError::Internal(format!(
            "even-type reduction needs strands > q, got {p_cur} <= {q}"
        )));
    }
    let c = p_cur - q;
    if b.word.len() != q * (p_cur - 1) {
        return Err(CertifyError::Internal(format!(
            "even-type word has length {}, expected {}",
            b.word.len(),
            q * (p_cur - 1)
        )));
    }
    for round in 1..=q {
        let t_top = b.word.strands() - 1;
        if round >= 2 {
            let f_len = q - round + 1;
            let bare_len = (round - 2) * (c - 1);
            b.rotate_left(f_len + bare_len)?;
            let rows_len = b.word.len() - f_len - bare_len;
            for t in 0..f_len {
                b.free_cancel(rows_len - 1 - t)?;
            }
        }
        let a_rows = q - round + 1;
        let (bs, _bl) = push_rows(b, 0, t_top, a_rows)?;
        b.rotate_left(bs + 1)?;
        b.destabilize()?;
    }
    if c > 1 && q > 1 {
        b.rotate_left((q - 1) * (c - 1))?;
    }
    Ok(())
}

/// Builds a checkable Markov-equivalence chain from the plan's flipped word
/// down to the empty word on gcd(p,q) strands, following the recursion trace.
pub fn certify_plan(plan: &UnknottingPlan, step_budget: usize) -> Result<Certificate, CertifyError> {
    let start = plan.flipped_word();
    let mut b = Builder::new(start, step_budget);
    let n_steps = plan.trace.steps.len();
    for (idx, step) in plan.trace.steps.iter().enumerate() {
        let last = idx + 1 == n_steps;
        match step.parity {
            StepParity::Odd => {
                for _ in 0..step.m {
                    cancel_alpha_block(&mut b, 0, step.p)?;
                }
                if last {
                    match plan.trace.terminal {
                        TerminalRule::RemainderZero => {}
                        TerminalRule::RemainderOne => destab_ascending(&mut b, step.p - 1)?,
                        TerminalRule::RemainderPMinusOne => {
                            reduce_eta_chain(&mut b, 0, step.p)?;
                            destab_descending(&mut b, step.p - 1)?;
                        }
                    }
                }
            }
            StepParity::Even => {
                while b.word.strands() > step.q {
                    reduce_even_type_once(&mut b, step.q)?;
                }
                if last && plan.trace.terminal == TerminalRule::RemainderZero {
                    cancel_alpha_block(&mut b, 0, step.q)?;
                }
            }
        }
    }
    let target = BraidWord::identity(plan.params.d);
    if b.word != target {
        return Err(CertifyError::Internal(format!(
            "reduction ended at `{}` on {} strands, expected the empty word on {} strands",
            b.word,
            b.word.strands(),
            plan.params.d
        )));
    }
    Ok(b.finish(CertificateKind::MarkovEquivalence))
}

/// Recognizes B(p,q) flipped exactly at its minimal unknotting crossing data.
fn detect_flipped_toric(w: &BraidWord) -> Option<UnknottingPlan> {
    let n = w.strands();
    if n < 2 {
        return None;
    }
    let row = n - 1;
    if w.is_empty() || !w.len().is_multiple_of(row) {
        return None;
    }
    let q = w.len() / row;
    let mut flips = Vec::new();
    for (pos, l) in w.letters().iter().enumerate() {
        if l.index != pos % row + 1 {
            return None;
        }
        if l.sign < 0 {
            flips.push(pos + 1);
        }
    }
    let plan = minimal_ucd(n, q).ok()?;
    if plan.positions.as_slice() == flips.as_slice() {
        Some(plan)
    } else {
        None
    }
}

/// Certificate search: the structured reduction for canonical flipped toric
/// words, then a greedy strategy (free reduction, unique-top destabilization
/// after rotation, leading trivial-block cancellation) for everything else.
pub fn certify_unknot(w: &BraidWord, step_budget: usize) -> CertifyOutcome {
    if let Some(plan) = detect_flipped_toric(w) {
        match certify_plan(&plan, step_budget) {
            Ok(cert) => return CertifyOutcome::Proved(cert),
            Err(CertifyError::BudgetExceeded { budget }) => {
                return CertifyOutcome::Inconclusive {
                    reason: format!("step budget {budget} exhausted"),
                }
            }
            Err(CertifyError::Internal(_)) => {} // fall through to the greedy path
        }
    }
    greedy_certify(w, step_budget)
}

fn greedy_certify(w: &BraidWord, step_budget: usize) -> CertifyOutcome {
    let mut b = Builder::new(w.clone(), step_budget);
    let run = (|b: &mut Builder| -> Result<bool, CertifyError> {
        loop {
            record_free_reduce(b)?;
            if b.word.is_empty() {
                return Ok(true);
            }
            if b.word.strands() < 2 {
                return Ok(false);
            }
            let top = b.word.strands() - 1;
            let occurrences: Vec<usize> = b
                .word
                .letters()
                .iter()
                .enumerate()
                .filter(|(_, l)| l.index == top)
                .map(|(i, _)| i)
                .collect();
            if occurrences.len() == 1 {
                b.rotate_left(occurrences[0] + 1)?;
                b.destabilize()?;
                continue;
            }
            match leading_alpha_block(&b.word) {
                Some(k) => cancel_alpha_block(b, 0, k)?,
                None => return Ok(false),
            }
        }
    })(&mut b);
    match run {
        Ok(true) => CertifyOutcome::Proved(b.finish(CertificateKind::MarkovEquivalence)),
        Ok(false) => CertifyOutcome::Inconclusive { reason: "no applicable move".into() },
        Err(CertifyError::BudgetExceeded { budget }) => {
            CertifyOutcome::Inconclusive { reason: format!("step budget {budget} exhausted") }
        }
        Err(CertifyError::Internal(reason)) => CertifyOutcome::Inconclusive { reason },
    }
}

fn record_free_reduce(b: &mut Builder) -> Result<(), CertifyError> {
    loop {
        let letters = b.word.letters();
        let pair = (0..letters.len().saturating_sub(1))
            .find(|&i| letters[i].index == letters[i + 1].index && letters[i].sign == -letters[i + 1].sign);
        match pair {
            Some(i) => b.free_cancel(i)?,
            None => return Ok(()),
        }
    }
}

/// Largest k such that the word starts with a flipped B(k,k) block.
fn leading_alpha_block(w: &BraidWord) -> Option<usize> {
    for k in (2..=w.strands()).rev() {
        let block_len = k * (k - 1);
        if w.len() < block_len {
            continue;
        }
        let width = k - 1;
        let matches = w.letters()[..block_len].iter().enumerate().all(|(pos, l)| {
            let row = pos / width + 1;
            let col = pos % width + 1;
            l.index == col && (l.sign < 0) == (col > k - row)
        });
        if matches {
            return Some(k);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::BraidWord;
    use crate::config::DEFAULT_CERT_STEP_BUDGET;

    fn w(strands: usize, ints: &[i64]) -> BraidWord {
        BraidWord::from_ints(strands, ints).unwrap()
    }

    #[test]
    fn alpha_block_cancellation() {
        // flipped B(p,p) reduces to the empty word on p strands
        for p in 2..=6usize {
            let plan = minimal_ucd(p, p).unwrap();
            let word = plan.flipped_word();
            let mut b = Builder::new(word, DEFAULT_CERT_STEP_BUDGET);
            cancel_alpha_block(&mut b, 0, p).unwrap();
            assert!(b.word.is_empty(), "alpha block p = {p}");
            assert_eq!(b.word.strands(), p);
        }
    }

    #[test]
    fn certify_golden_plans() {
        for (p, q) in [(7usize, 4usize), (13, 3), (6, 4), (3, 4), (3, 2), (2, 2), (5, 1)] {
            let plan = minimal_ucd(p, q).unwrap();
            let cert = certify_plan(&plan, DEFAULT_CERT_STEP_BUDGET).unwrap();
            assert_eq!(cert.start, plan.flipped_word(), "start for ({p},{q})");
            assert_eq!(cert.end, BraidWord::identity(plan.params.d), "end for ({p},{q})");
            cert.check().unwrap_or_else(|e| panic!("replay failed for ({p},{q}): {e}"));
        }
    }

    #[test]
    fn certify_full_grid_to_8() {
        for p in 2..=8usize {
            for q in 1..=8usize {
                let plan = minimal_ucd(p, q).unwrap();
                let cert = certify_plan(&plan, DEFAULT_CERT_STEP_BUDGET)
                    .unwrap_or_else(|e| panic!("({p},{q}): {e}"));
                assert_eq!(cert.end, BraidWord::identity(plan.params.d), "({p},{q})");
                cert.check().unwrap_or_else(|e| panic!("replay failed for ({p},{q}): {e}"));
            }
        }
    }

    #[test]
    fn certify_unknot_detects_flipped_words() {
        let word = BraidWord::toric(3, 4).unwrap().apply_crossing_changes(&[4, 5, 6]).unwrap();
        match certify_unknot(&word, DEFAULT_CERT_STEP_BUDGET) {
            CertifyOutcome::Proved(cert) => {
                assert_eq!(cert.end, BraidWord::identity(1));
                assert!(cert.is_valid());
            }
            CertifyOutcome::Inconclusive { reason } => panic!("expected proof, got: {reason}"),
        }
    }

    #[test]
    fn certify_unknot_greedy_handles_stabilized_words() {
        // σ₁σ₂ on 3 strands: two destabilizations
        match certify_unknot(&w(3, &[1, 2]), DEFAULT_CERT_STEP_BUDGET) {
            CertifyOutcome::Proved(cert) => {
                assert_eq!(cert.end, BraidWord::identity(1));
                assert!(cert.is_valid());
            }
            CertifyOutcome::Inconclusive { reason } => panic!("{reason}"),
        }
        // σ₂σ₁ needs the rotation first
        assert!(matches!(
            certify_unknot(&w(3, &[2, 1]), DEFAULT_CERT_STEP_BUDGET),
            CertifyOutcome::Proved(_)
        ));
    }

    #[test]
    fn near_multiple_family_certifies() {
        // q = mp ± 1 terminates at the first step, so the u-crossing data is
        // already minimal; each flipped word certifies down to one strand
        for p in 2..=6usize {
            for m in 1..=2usize {
                for q in [m * p + 1, m * p - 1] {
                    if q < 1 {
                        continue;
                    }
                    let ucd = crate::toric::u_crossing_data(p, q).unwrap();
                    let word = BraidWord::toric(p, q)
                        .unwrap()
                        .apply_crossing_changes(ucd.as_slice())
                        .unwrap();
                    match certify_unknot(&word, DEFAULT_CERT_STEP_BUDGET) {
                        CertifyOutcome::Proved(cert) => {
                            assert_eq!(cert.end, BraidWord::identity(1), "({p},{q})");
                            cert.check().unwrap_or_else(|e| panic!("({p},{q}): {e}"));
                        }
                        CertifyOutcome::Inconclusive { reason } => {
                            panic!("({p},{q}): no certificate: {reason}")
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn trefoil_is_inconclusive() {
        match certify_unknot(&BraidWord::toric(3, 2).unwrap(), DEFAULT_CERT_STEP_BUDGET) {
            CertifyOutcome::Inconclusive { .. } => {}
            CertifyOutcome::Proved(_) => panic!("no unknotting certificate can exist for B(3,2)"),
        }
    }

    #[test]
    fn tiny_budget_is_reported() {
        let plan = minimal_ucd(9, 7).unwrap();
        match certify_plan(&plan, 10) {
            Err(CertifyError::BudgetExceeded { budget: 10 }) => {}
            other => panic!("expected budget error, got {other:?}"),
        }
    }
}
