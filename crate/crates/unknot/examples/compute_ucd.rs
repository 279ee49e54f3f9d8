//! Computes minimal unknotting crossing data for a handful of torus knots
//! and links, showing the recursion trace and per-position provenance.

use unknot::toric::{minimal_ucd, u_crossing_data, unknotting_number};

fn main() {
    for (p, q) in [(7usize, 4usize), (13, 3), (6, 4), (5, 3), (8, 5)] {
        let plan = minimal_ucd(p, q).unwrap();
        println!("B({p},{q})  d = {}", plan.params.d);
        println!("  unknotting number: {}", unknotting_number(p, q));
        println!("  u-crossing data:   {:?}", u_crossing_data(p, q).unwrap().as_slice());
        println!("  minimal data:      {:?}", plan.positions.as_slice());
        for step in &plan.trace.steps {
            let from_step: Vec<usize> = plan
                .provenance
                .iter()
                .filter(|e| e.step == step.index)
                .map(|e| e.position)
                .collect();
            println!(
                "  step {} ({:?}): (p, q) = ({}, {}), m = {}, a = {} -> {:?}",
                step.index, step.parity, step.p, step.q, step.m, step.a, from_step
            );
        }
        println!("  terminal: {:?}", plan.trace.terminal);
        println!();
    }
}
