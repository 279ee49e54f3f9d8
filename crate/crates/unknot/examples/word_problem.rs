//! Exact word-problem decisions by handle reduction.

use unknot::braid::BraidWord;
use unknot::word_problem::{are_equal, is_identity};

fn main() {
    let w = |strands, ints: &[i64]| BraidWord::from_ints(strands, ints).unwrap();

    // the fundamental relation
    println!(
        "sigma1 sigma2 sigma1 = sigma2 sigma1 sigma2: {:?}",
        are_equal(&w(3, &[1, 2, 1]), &w(3, &[2, 1, 2]))
    );

    // eta-chain identity: eta_1 eta_2 eta_3 = sigma_3 sigma_2 sigma_1
    println!(
        "eta chain (n = 3): {:?}",
        are_equal(&w(4, &[1, 2, 3, 1, 2, -3, 1, -2, -3]), &w(4, &[3, 2, 1]))
    );

    // the trivial (n+1)-braid built from a fully flipped block, n = 4
    let mut ints = Vec::new();
    let n = 4usize;
    for row in 1..=n + 1 {
        for idx in 1..=n {
            let sign = if idx > n + 1 - row { -1i64 } else { 1 };
            ints.push(sign * idx as i64);
        }
    }
    println!("flipped B(5,5) block is trivial: {:?}", is_identity(&w(n + 1, &ints)));

    // and a pair that is genuinely different
    println!("sigma1 vs sigma2 on 3 strands: {:?}", are_equal(&w(3, &[1]), &w(3, &[2])));
}
