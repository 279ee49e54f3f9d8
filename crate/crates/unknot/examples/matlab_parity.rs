//! Reproduces both outputs of the legacy numeric program and adjudicates the
//! second one by verification: the as-printed mirror formula leaves the valid
//! position range, while the reversal-map variant verifies on the reversed
//! braid.

use unknot::config::RunConfig;
use unknot::toric::{matlab_parity, minimal_ucd, verify_plan_mirrored};

fn main() {
    for (p, q) in [(7usize, 4usize), (13, 3)] {
        let parity = matlab_parity(p, q).unwrap();
        let plan = minimal_ucd(p, q).unwrap();
        println!("K({p},{q})");
        println!("  MUKD1 (program order): {:?}", parity.mukd1);
        let mut s: Vec<usize> = parity.mukd1_set().into_iter().collect();
        s.sort_unstable();
        println!(
            "  as a set = minimal data: {}",
            s.as_slice() == plan.positions.as_slice()
        );
        println!("  MUKD2 as printed: {:?}", parity.mukd2_as_printed);
        println!("    in range: {}", parity.as_printed_in_range());
        println!("  MUKD2 corrected:  {:?}", parity.mukd2_corrected);
        println!("    in range: {}", parity.corrected_in_range());

        let mut cfg = RunConfig::default();
        cfg.crossing_budget = cfg.crossing_budget.max(q * (p - 1));
        let verdict = verify_plan_mirrored(&plan, &cfg);
        println!("    verdict on the reversed braid: {}", verdict.status);
        println!();
    }
}
