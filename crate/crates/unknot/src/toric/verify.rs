//! End-to-end plan verification: flip, screen with exact invariants, and
//! attach a destabilization certificate when the search finds one.

use num_integer::Integer;

use crate::braid::{BraidError, BraidWord, CrossingPosition};
use crate::config::RunConfig;
use crate::invariants::{triviality_verdict, TrivialityVerdict};

use super::{certify_unknot, minimal_ucd, mirrored_ucd, CertifyOutcome, UnknottingPlan};

/// Verifies an arbitrary position set against B(p,q): flips the crossings,
/// checks the component count and the invariant screens, and upgrades to a
/// certified verdict when an unknotting certificate is found and replays.
pub fn verify_positions(
    p: usize,
    q: usize,
    positions: &[CrossingPosition],
    cfg: &RunConfig,
) -> Result<TrivialityVerdict, BraidError> {
    let word = BraidWord::toric(p, q)?.apply_crossing_changes(positions)?;
    let d = p.gcd(&q);
    let certificate = match certify_unknot(&word, cfg.cert_step_budget) {
        CertifyOutcome::Proved(cert) => Some(cert),
        CertifyOutcome::Inconclusive { .. } => None,
    };
    Ok(triviality_verdict(&word, d, cfg.crossing_budget, certificate.as_ref()))
}

/// Verifies a complete plan.
pub fn verify_plan(plan: &UnknottingPlan, cfg: &RunConfig) -> TrivialityVerdict {
    let word = plan.flipped_word();
    debug_assert_eq!(word.component_count_of_closure(), plan.params.d);
    verify_positions(plan.params.p, plan.params.q, plan.positions.as_slice(), cfg)
        .expect("plan positions are valid for B(p,q)")
}

/// Verifies the mirrored data against the reversed braid B̄(p,q): flips
/// reverse(B(p,q)) at q(p−1)+1−x and screens the result. No structured
/// certificate is attempted on the reversed word; the invariant checks carry
/// the verdict (raise the crossing budget to cover q(p−1) when exactness of
/// the Jones check is wanted).
pub fn verify_plan_mirrored(plan: &UnknottingPlan, cfg: &RunConfig) -> TrivialityVerdict {
    let mirrored = mirrored_ucd(plan);
    let word = BraidWord::toric(plan.params.p, plan.params.q)
        .expect("validated parameters")
        .reverse()
        .apply_crossing_changes(mirrored.as_slice())
        .expect("mirrored positions are valid");
    triviality_verdict(&word, plan.params.d, cfg.crossing_budget, None)
}

/// Convenience: verify minimal_ucd(p,q) end to end.
pub fn verify_minimal(p: usize, q: usize, cfg: &RunConfig) -> Result<TrivialityVerdict, BraidError> {
    Ok(verify_plan(&minimal_ucd(p, q)?, cfg))
}
