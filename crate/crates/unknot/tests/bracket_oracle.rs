//! Independent oracle for the Kauffman bracket: a naive 2^c state sum with
//! union-find loop counting over the closed diagram's strand segments. The
//! production path contracts Temperley-Lieb diagrams incrementally and never
//! enumerates states, so agreement here checks the whole convention chain
//! (smoothing weights, loop factor, closure) by a disjoint route.

use unknot::braid::BraidWord;
use unknot::invariants::{jones_of_closure, kauffman_bracket, unlink_jones};
use unknot::laurent::LaurentPolynomial;

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }
    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }
}

/// Brute-force bracket: sum over all smoothing choices, counting loops on the
/// grid of (time slice, strand position) nodes.
fn naive_bracket(word: &BraidWord) -> LaurentPolynomial {
    let n = word.strands();
    let c = word.len();
    let node = |t: usize, k: usize| t * n + k; // 0 ≤ t ≤ c, 0 ≤ k < n
    let delta = LaurentPolynomial::from_terms([(2i64, -1i64), (-2, -1)]);
    let mut total = LaurentPolynomial::zero();
    for state in 0u64..(1 << c) {
        let mut uf = UnionFind::new((c + 1) * n);
        let mut a_exponent = 0i64;
        for (t, letter) in word.letters().iter().enumerate() {
            let i = letter.index - 1; // 0-based strand pair (i, i+1)
            let id_smoothing = state >> t & 1 == 0;
            a_exponent += match (letter.sign > 0, id_smoothing) {
                (true, true) => 1,
                (true, false) => -1,
                (false, true) => -1,
                (false, false) => 1,
            };
            for k in 0..n {
                if k != i && k != i + 1 {
                    uf.union(node(t, k), node(t + 1, k));
                }
            }
            if id_smoothing {
                uf.union(node(t, i), node(t + 1, i));
                uf.union(node(t, i + 1), node(t + 1, i + 1));
            } else {
                uf.union(node(t, i), node(t, i + 1));
                uf.union(node(t + 1, i), node(t + 1, i + 1));
            }
        }
        for k in 0..n {
            uf.union(node(c, k), node(0, k)); // trace closure
        }
        let mut roots: Vec<usize> = (0..(c + 1) * n).map(|x| uf.find(x)).collect();
        roots.sort_unstable();
        roots.dedup();
        let loops = roots.len();
        let term = delta.pow(loops - 1).mul_monomial(a_exponent, &1.into());
        total = &total + &term;
    }
    total
}

#[test]
fn contraction_matches_the_naive_state_sum() {
    let cases: Vec<BraidWord> = vec![
        BraidWord::identity(1),
        BraidWord::identity(3),
        BraidWord::from_ints(2, &[1]).unwrap(),
        BraidWord::from_ints(2, &[1, 1]).unwrap(),
        BraidWord::from_ints(2, &[1, 1, 1]).unwrap(),
        BraidWord::from_ints(3, &[1, -2, 1, -2]).unwrap(),
        BraidWord::from_ints(3, &[1, 2, 1, 2]).unwrap(),
        BraidWord::from_ints(4, &[1, 2, 3, -1, 2, -3]).unwrap(),
        BraidWord::toric(3, 3).unwrap(),
        BraidWord::toric(4, 2).unwrap(),
        BraidWord::toric(5, 2).unwrap(),
        BraidWord::toric(4, 4)
            .unwrap()
            .apply_crossing_changes(&[4, 7, 8, 10, 11, 12])
            .unwrap()
            .apply_crossing_changes(&[1])
            .unwrap(),
    ];
    for word in &cases {
        assert_eq!(
            kauffman_bracket(word, 20).unwrap(),
            naive_bracket(word),
            "word {word} on {} strands",
            word.strands()
        );
    }

    // plus a deterministic pseudo-random batch
    let mut state: u64 = 0xabcdef12345;
    let mut next = move || {
        state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        (state >> 33) as usize
    };
    for _ in 0..30 {
        let strands = 2 + next() % 3;
        let len = 1 + next() % 9;
        let ints: Vec<i64> = (0..len)
            .map(|_| {
                let idx = 1 + next() % (strands - 1);
                if next() % 2 == 0 {
                    idx as i64
                } else {
                    -(idx as i64)
                }
            })
            .collect();
        let word = BraidWord::from_ints(strands, &ints).unwrap();
        assert_eq!(kauffman_bracket(&word, 20).unwrap(), naive_bracket(&word), "word {word}");
    }
}

#[test]
fn jones_of_torus_knots_matches_the_closed_form() {
    // V of the (p,q) torus knot (positive braid closure, coprime p,q):
    //   t^{(p−1)(q−1)/2} (1 − t^{p+1} − t^{q+1} + t^{p+q}) / (1 − t²),
    // evaluated here with exact half-step Laurent arithmetic.
    let budget = 60;
    for (p, q) in [(2usize, 3usize), (2, 5), (2, 7), (3, 4), (3, 5), (4, 5), (5, 6), (3, 7)] {
        let num = LaurentPolynomial::from_terms([
            (0i64, 1i64),
            (2 * (p as i64 + 1), -1),
            (2 * (q as i64 + 1), -1),
            (2 * (p as i64 + q as i64), 1),
        ]);
        let den = LaurentPolynomial::from_terms([(0i64, 1i64), (4, -1)]);
        let expected = num
            .div_exact(&den)
            .unwrap()
            .mul_monomial(((p - 1) * (q - 1)) as i64, &1.into());
        let got = jones_of_closure(&BraidWord::toric(p, q).unwrap(), budget).unwrap();
        assert_eq!(got, expected, "T({p},{q})");
    }

    // links: the flipped words land exactly on the unlink series
    for d in 1..=4usize {
        assert_eq!(
            jones_of_closure(&BraidWord::identity(d), budget).unwrap(),
            unlink_jones(d)
        );
    }
}
