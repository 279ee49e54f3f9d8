//! Builds and checks a Markov-equivalence chain by hand: B(5,4) is carried to
//! the braid product B(4,4) * reverse(B(4,1)) by long-run braid relations,
//! one conjugation, one destabilization, and a final conjugation. The chain
//! is then serialized, re-parsed and replayed.

use unknot::braid::BraidWord;
use unknot::word_problem::{Certificate, CertificateKind, RewriteStep};

fn main() {
    let start = BraidWord::toric(5, 4).unwrap();
    let gamma = BraidWord::from_ints(5, &[3, 2, 1]).unwrap();
    let gamma_inv_4 = BraidWord::from_ints(4, &[-1, -2, -3]).unwrap();

    let steps = vec![
        // slide the first row's top crossing down one row
        RewriteStep::BraidRelation { site: 4, i: 4, j: 1, n: 4, reversed: false },
        // and through the next row (two letters to move now)
        RewriteStep::BraidRelation { site: 8, i: 3, j: 1, n: 4, reversed: false },
        RewriteStep::BraidRelation { site: 7, i: 4, j: 1, n: 4, reversed: false },
        // third row: three letters to move
        RewriteStep::BraidRelation { site: 12, i: 2, j: 1, n: 4, reversed: false },
        RewriteStep::BraidRelation { site: 11, i: 3, j: 1, n: 4, reversed: false },
        RewriteStep::BraidRelation { site: 10, i: 4, j: 1, n: 4, reversed: false },
        // rotate the trailing descending run to the front
        RewriteStep::M1Conjugate { conjugator: gamma },
        RewriteStep::FreeCancel { site: 19 },
        RewriteStep::FreeCancel { site: 18 },
        RewriteStep::FreeCancel { site: 17 },
        // the top generator now occurs once, at the end
        RewriteStep::M2Destabilize,
        // undo the rotation on 4 strands
        RewriteStep::M1Conjugate { conjugator: gamma_inv_4 },
        RewriteStep::FreeCancel { site: 3 },
        RewriteStep::FreeCancel { site: 2 },
        RewriteStep::FreeCancel { site: 1 },
    ];

    let end = BraidWord::toric(4, 4)
        .unwrap()
        .concat(&BraidWord::toric(4, 1).unwrap().reverse())
        .unwrap();

    let cert = Certificate { kind: CertificateKind::MarkovEquivalence, start, steps, end };
    println!("chain from B(5,4) to B(4,4) * reverse(B(4,1)):");
    match cert.check() {
        Ok(()) => println!("  replay: ok ({} steps)", cert.steps.len()),
        Err(e) => println!("  replay FAILED: {e}"),
    }

    println!("\nserialized form:\n{}", cert.to_text());

    let reparsed = Certificate::from_text(&cert.to_text()).unwrap();
    println!("round-trip parse equal: {}", reparsed == cert);

    // corrupting one site is caught with the step index
    let mut bad = cert.clone();
    bad.steps[7] = RewriteStep::FreeCancel { site: 2 };
    match bad.check() {
        Err(e) => println!("corrupted chain rejected: {e}"),
        Ok(()) => println!("corrupted chain unexpectedly accepted"),
    }
}
