//! Shows the alternating division scheme behind the minimal data: odd steps
//! divide q_i by p_i, even steps divide p_i by q_i, and the recursion stops
//! when the remainder hits 1, p_i − 1 (odd steps), or 0 (links).

use unknot::toric::euclid_trace;

fn main() {
    for (p, q) in [(7usize, 4usize), (13, 3), (6, 4), (30, 17), (12, 9)] {
        let trace = euclid_trace(p, q).unwrap();
        println!("({p},{q}):");
        for s in &trace.steps {
            let eq = match s.parity {
                unknot::toric::StepParity::Odd => format!("{} = {}*{} + {}", s.q, s.m, s.p, s.a),
                unknot::toric::StepParity::Even => format!("{} = {}*{} + {}", s.p, s.m, s.q, s.a),
            };
            println!("  step {} ({:?}): (p,q) = ({},{})  {eq}", s.index, s.parity, s.p, s.q);
        }
        println!("  terminal: {:?}\n", trace.terminal);
    }
}
