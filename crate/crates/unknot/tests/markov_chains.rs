//! Replayable Markov chains: the worked B(5,4) reduction to the braid
//! product B(4,4) * reverse(B(4,1)), and plan certificates end to end.

use unknot::braid::BraidWord;
use unknot::config::RunConfig;
use unknot::invariants::{alexander_of_closure, jones_of_closure};
use unknot::toric::{certify_plan, minimal_ucd, signed_reduction_pair};
use unknot::word_problem::{Certificate, CertificateKind, RewriteStep};

fn b54_chain() -> Certificate {
    let start = BraidWord::toric(5, 4).unwrap();
    let end = BraidWord::toric(4, 4)
        .unwrap()
        .concat(&BraidWord::toric(4, 1).unwrap().reverse())
        .unwrap();
    let steps = vec![
        RewriteStep::BraidRelation { site: 4, i: 4, j: 1, n: 4, reversed: false },
        RewriteStep::BraidRelation { site: 8, i: 3, j: 1, n: 4, reversed: false },
        RewriteStep::BraidRelation { site: 7, i: 4, j: 1, n: 4, reversed: false },
        RewriteStep::BraidRelation { site: 12, i: 2, j: 1, n: 4, reversed: false },
        RewriteStep::BraidRelation { site: 11, i: 3, j: 1, n: 4, reversed: false },
        RewriteStep::BraidRelation { site: 10, i: 4, j: 1, n: 4, reversed: false },
        RewriteStep::M1Conjugate { conjugator: BraidWord::from_ints(5, &[3, 2, 1]).unwrap() },
        RewriteStep::FreeCancel { site: 19 },
        RewriteStep::FreeCancel { site: 18 },
        RewriteStep::FreeCancel { site: 17 },
        RewriteStep::M2Destabilize,
        RewriteStep::M1Conjugate { conjugator: BraidWord::from_ints(4, &[-1, -2, -3]).unwrap() },
        RewriteStep::FreeCancel { site: 3 },
        RewriteStep::FreeCancel { site: 2 },
        RewriteStep::FreeCancel { site: 1 },
    ];
    Certificate { kind: CertificateKind::MarkovEquivalence, start, steps, end }
}

#[test]
fn b54_reduces_to_the_braid_product() {
    let cert = b54_chain();
    assert_eq!(cert.end.len(), 15);
    cert.check().expect("the six-stage chain replays");
}

#[test]
fn corrupting_one_site_is_rejected_with_its_index() {
    let mut cert = b54_chain();
    cert.steps[4] = RewriteStep::BraidRelation { site: 2, i: 3, j: 1, n: 4, reversed: false };
    let err = cert.check().unwrap_err();
    assert_eq!(err.step_index, Some(4));
}

#[test]
fn b54_chain_survives_serialization() {
    let cert = b54_chain();
    let parsed = Certificate::from_text(&cert.to_text()).unwrap();
    assert_eq!(parsed, cert);
    parsed.check().unwrap();
}

#[test]
fn plan_certificates_replay_and_serialize() {
    let cfg = RunConfig::default();
    for (p, q) in [(7usize, 4usize), (6, 4), (5, 3), (8, 3)] {
        let plan = minimal_ucd(p, q).unwrap();
        let cert = certify_plan(&plan, cfg.cert_step_budget).unwrap();
        cert.check().unwrap();
        let parsed = Certificate::from_text(&cert.to_text()).unwrap();
        assert_eq!(parsed, cert, "({p},{q})");
        parsed.check().unwrap();
    }
}

#[test]
fn deep_recursions_certify_and_replay() {
    // traces with four or five steps, both knot and link terminals
    let cfg = RunConfig::default();
    for (p, q, expected_steps, expected_d) in
        [(13usize, 8usize, 5usize, 1usize), (30, 17, 4, 1), (12, 8, 3, 4), (11, 7, 3, 1)]
    {
        let plan = minimal_ucd(p, q).unwrap();
        assert_eq!(plan.trace.steps.len(), expected_steps, "({p},{q}) trace length");
        assert_eq!(plan.params.d, expected_d, "({p},{q}) gcd");
        let cert = certify_plan(&plan, cfg.cert_step_budget).unwrap();
        assert_eq!(cert.end, BraidWord::identity(expected_d), "({p},{q})");
        cert.check().unwrap_or_else(|e| panic!("({p},{q}): {e}"));
    }
}

#[test]
fn signed_reduction_sides_share_their_closure_invariants() {
    // random-ish sign matrices for (p, a) = (5, 2); both sides close to the
    // same link, so the exact invariants must agree
    let budget = 40;
    for bits in 0..8u32 {
        let signs: Vec<Vec<i8>> = (0..2)
            .map(|i| {
                (0..2).map(|j| if bits >> (2 * i + j) & 1 == 1 { 1 } else { -1 }).collect()
            })
            .collect();
        let (lhs, rhs) = signed_reduction_pair(5, 2, &signs).unwrap();
        assert_eq!(
            lhs.component_count_of_closure(),
            rhs.component_count_of_closure(),
            "signs {signs:?}"
        );
        assert_eq!(
            alexander_of_closure(&lhs),
            alexander_of_closure(&rhs),
            "signs {signs:?}"
        );
        assert_eq!(
            jones_of_closure(&lhs, budget).unwrap(),
            jones_of_closure(&rhs, budget).unwrap(),
            "signs {signs:?}"
        );
    }
}
