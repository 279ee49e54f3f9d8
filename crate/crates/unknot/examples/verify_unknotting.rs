//! Runs the full verification pipeline: flip the computed crossings, screen
//! with exact invariants, and replay the Markov-equivalence certificate.

use unknot::config::RunConfig;
use unknot::toric::{certify_plan, minimal_ucd, verify_plan};

fn main() {
    let cfg = RunConfig::default();
    for (p, q) in [(7usize, 4usize), (6, 4), (3, 2), (9, 5)] {
        let plan = minimal_ucd(p, q).unwrap();
        let word = plan.flipped_word();
        println!("B({p},{q}) flipped at {:?}", plan.positions.as_slice());
        println!("  word: {word}");
        println!("  closure components: {}", word.component_count_of_closure());

        let verdict = verify_plan(&plan, &cfg);
        println!("  verdict: {}", verdict.status);
        if let Some(a) = &verdict.evidence.alexander {
            println!("  alexander: {}", a.render("t", false));
        }
        match (&verdict.evidence.jones, verdict.evidence.jones_refused) {
            (Some(j), _) => println!("  jones: {}", j.render("t", true)),
            (None, true) => println!("  jones: refused (over crossing budget)"),
            _ => {}
        }

        match certify_plan(&plan, cfg.cert_step_budget) {
            Ok(cert) => {
                println!(
                    "  certificate: {} steps, ends at the empty word on {} strands, replay: {}",
                    cert.steps.len(),
                    cert.end.strands(),
                    if cert.is_valid() { "ok" } else { "FAILED" }
                );
            }
            Err(e) => println!("  certificate: {e}"),
        }
        println!();
    }
}
