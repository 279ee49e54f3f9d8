//! Closure-level symmetry checks: K(p,q) and K(q,p) share their invariants,
//! and the braid product B(a,a) * reverse(B(a,n)) has the same closure as
//! B(a+n, a).

use unknot::braid::BraidWord;
use unknot::invariants::{alexander_of_closure, jones_of_closure};

fn main() {
    let budget = 64;

    println!("symmetry of p and q:");
    for (p, q) in [(3usize, 5usize), (4, 7), (5, 6)] {
        let a = BraidWord::toric(p, q).unwrap();
        let b = BraidWord::toric(q, p).unwrap();
        let alex_equal = alexander_of_closure(&a) == alexander_of_closure(&b);
        let jones_equal =
            jones_of_closure(&a, budget).unwrap() == jones_of_closure(&b, budget).unwrap();
        println!("  B({p},{q}) vs B({q},{p}): alexander {alex_equal}, jones {jones_equal}");
    }

    println!("\nbraid product against the larger toric braid:");
    for (a, n) in [(3usize, 2usize), (4, 1), (2, 5), (4, 4)] {
        let product = BraidWord::toric(a, a)
            .unwrap()
            .concat(&BraidWord::toric(a, n).unwrap().reverse())
            .unwrap();
        let target = BraidWord::toric(a + n, a).unwrap();
        let comps = product.component_count_of_closure() == target.component_count_of_closure();
        let alex = alexander_of_closure(&product) == alexander_of_closure(&target);
        let jones = jones_of_closure(&product, budget).unwrap()
            == jones_of_closure(&target, budget).unwrap();
        println!(
            "  B({a},{a}) * reverse(B({a},{n})) vs B({},{a}): components {comps}, alexander {alex}, jones {jones}",
            a + n
        );
    }
}
