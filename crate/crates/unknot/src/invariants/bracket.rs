//! Kauffman bracket and Jones polynomial of a braid closure.
//!
//! The word is expanded crossing by crossing inside the Temperley–Lieb
//! algebra: ⟨σ_i⟩ = A·1 + A⁻¹·e_i and ⟨σ_i⁻¹⟩ = A⁻¹·1 + A·e_i, with each
//! closed loop contributing δ = −A² − A⁻². The running state is a map from
//! planar matchings to bracket coefficients, so the cost is bounded by the
//! Catalan number of the strand count rather than 2^crossings; the crossing
//! budget is still enforced as the configured refusal point.
//!
//! Conventions: the bracket of a single unknotted loop is 1 (δ applies to
//! additional loops only); Jones is the writhe-corrected bracket
//! f = (−A³)^{−w}·⟨L⟩ under A = t^{−1/4}, stored with half-step exponents.

use std::collections::HashMap;

use crate::braid::BraidWord;
use crate::laurent::LaurentPolynomial;

/// Refusal for words longer than the configured crossing budget.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossingBudgetExceeded {
    pub len: usize,
    pub budget: usize,
}

impl std::fmt::Display for CrossingBudgetExceeded {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "word has {} crossings, over the budget of {}", self.len, self.budget)
    }
}

impl std::error::Error for CrossingBudgetExceeded {}

/// Planar matching on 2n points: 0..n are top endpoints, n..2n bottom.
type Matching = Vec<usize>;

fn identity_matching(n: usize) -> Matching {
    let mut pair = vec![0; 2 * n];
    for k in 0..n {
        pair[k] = n + k;
        pair[n + k] = k;
    }
    pair
}

/// Composes a matching with the TL generator e_i (1-based i) acting below;
/// returns the new matching and the number of closed loops produced (0 or 1).
fn compose_with_e(d: &Matching, n: usize, i: usize) -> (Matching, usize) {
    let a = n + (i - 1);
    let b = n + i;
    let x = d[a];
    let y = d[b];
    let mut out = d.clone();
    if x == b {
        // bottom points a,b were already paired: the cup closes a loop and
        // the cap re-creates the same pairing
        (out, 1)
    } else {
        out[x] = y;
        out[y] = x;
        out[a] = b;
        out[b] = a;
        (out, 0)
    }
}

/// Loops of the trace closure of a matching (top k joined to bottom k).
fn closure_loops(d: &Matching, n: usize) -> usize {
    let mut seen = vec![false; 2 * n];
    let mut loops = 0;
    for start in 0..2 * n {
        if seen[start] {
            continue;
        }
        loops += 1;
        let mut p = start;
        loop {
            seen[p] = true;
            let q = d[p]; // travel through the tangle
            seen[q] = true;
            let r = if q < n { q + n } else { q - n }; // travel through the closure arc
            if r == start {
                break;
            }
            p = r;
        }
    }
    loops
}

fn delta() -> LaurentPolynomial {
    LaurentPolynomial::from_terms([(2i64, -1i64), (-2, -1)])
}

/// Bracket polynomial of the closure diagram induced by `w`, in the variable A.
pub fn kauffman_bracket(
    w: &BraidWord,
    crossing_budget: usize,
) -> Result<LaurentPolynomial, CrossingBudgetExceeded> {
    if w.len() > crossing_budget {
        return Err(CrossingBudgetExceeded { len: w.len(), budget: crossing_budget });
    }
    let n = w.strands();
    let mut state: HashMap<Matching, LaurentPolynomial> = HashMap::new();
    state.insert(identity_matching(n), LaurentPolynomial::one());
    let d = delta();
    for l in w.letters() {
        let (id_exp, e_exp) = if l.sign > 0 { (1i64, -1i64) } else { (-1, 1) };
        let mut next: HashMap<Matching, LaurentPolynomial> = HashMap::new();
        for (m, coeff) in &state {
            // identity smoothing
            let c_id = coeff.mul_monomial(id_exp, &1.into());
            next.entry(m.clone())
                .and_modify(|acc| *acc = &*acc + &c_id)
                .or_insert(c_id);
            // e_i smoothing
            let (me, loops) = compose_with_e(m, n, l.index);
            let mut c_e = coeff.mul_monomial(e_exp, &1.into());
            for _ in 0..loops {
                c_e = &c_e * &d;
            }
            next.entry(me)
                .and_modify(|acc| *acc = &*acc + &c_e)
                .or_insert(c_e);
        }
        next.retain(|_, c| !c.is_zero());
        state = next;
    }
    let mut bracket = LaurentPolynomial::zero();
    for (m, coeff) in &state {
        let loops = closure_loops(m, n);
        let weight = d.pow(loops - 1);
        bracket = &bracket + &(coeff * &weight);
    }
    Ok(bracket)
}

/// Jones polynomial of the closure, exponents stored in half-steps of t.
pub fn jones_of_closure(
    w: &BraidWord,
    crossing_budget: usize,
) -> Result<LaurentPolynomial, CrossingBudgetExceeded> {
    let bracket = kauffman_bracket(w, crossing_budget)?;
    let e = w.exponent_sum();
    // f = (−A³)^{−e} ⟨L⟩ = (−1)^e A^{−3e} ⟨L⟩
    let sign = if e % 2 == 0 { 1 } else { -1 };
    let f = bracket.mul_monomial(-3 * e, &sign.into());
    // A = t^{−1/4}: an A-exponent a becomes the t-exponent −a/4, i.e. −a/2
    // half-steps; writhe correction makes every a even.
    let jones = LaurentPolynomial::from_terms(f.terms().map(|(a, c)| {
        debug_assert!(a % 2 == 0, "writhe-corrected bracket has even exponents");
        (-a / 2, c.clone())
    }));
    Ok(jones)
}

/// Jones polynomial of the d-component unlink: (−t^{1/2} − t^{−1/2})^{d−1}.
pub fn unlink_jones(d: usize) -> LaurentPolynomial {
    assert!(d >= 1);
    LaurentPolynomial::from_terms([(1i64, -1i64), (-1, -1)]).pow(d - 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(strands: usize, ints: &[i64]) -> BraidWord {
        BraidWord::from_ints(strands, ints).unwrap()
    }

    fn poly(pairs: &[(i64, i64)]) -> LaurentPolynomial {
        LaurentPolynomial::from_terms(pairs.iter().copied())
    }

    const BUDGET: usize = 20;

    #[test]
    fn bracket_normalization() {
        // single loop: 1
        assert_eq!(kauffman_bracket(&BraidWord::identity(1), BUDGET).unwrap(), poly(&[(0, 1)]));
        // two loops: one extra δ factor
        assert_eq!(
            kauffman_bracket(&BraidWord::identity(2), BUDGET).unwrap(),
            poly(&[(-2, -1), (2, -1)])
        );
        // positive kink: −A³ (hand two-state sum: A·δ + A⁻¹·1)
        assert_eq!(kauffman_bracket(&w(2, &[1]), BUDGET).unwrap(), poly(&[(3, -1)]));
        assert_eq!(kauffman_bracket(&w(2, &[-1]), BUDGET).unwrap(), poly(&[(-3, -1)]));
    }

    #[test]
    fn jones_of_unknots() {
        assert_eq!(jones_of_closure(&w(2, &[1]), BUDGET).unwrap(), LaurentPolynomial::one());
        assert_eq!(jones_of_closure(&w(2, &[-1]), BUDGET).unwrap(), LaurentPolynomial::one());
        // Markov-moved unknots
        let word = w(2, &[1]);
        assert_eq!(jones_of_closure(&word.stabilize(-1), BUDGET).unwrap(), LaurentPolynomial::one());
        let conj = word.conjugate(&w(2, &[1])).unwrap();
        assert_eq!(jones_of_closure(&conj, BUDGET).unwrap(), LaurentPolynomial::one());
    }

    #[test]
    fn jones_of_trefoil() {
        // right-handed trefoil: V(t) = −t⁴ + t³ + t (half-step exponents 8, 6, 2)
        assert_eq!(
            jones_of_closure(&w(2, &[1, 1, 1]), BUDGET).unwrap(),
            poly(&[(2, 1), (6, 1), (8, -1)])
        );
    }

    #[test]
    fn jones_of_hopf_link() {
        // positive Hopf link: V = −t^{1/2} − t^{5/2}; a four-state hand sum
        // gives the bracket −A⁴ − A⁻⁴ first
        assert_eq!(
            kauffman_bracket(&w(2, &[1, 1]), BUDGET).unwrap(),
            poly(&[(4, -1), (-4, -1)])
        );
        let hopf = jones_of_closure(&w(2, &[1, 1]), BUDGET).unwrap();
        assert_eq!(hopf, poly(&[(1, -1), (5, -1)]));
        assert_ne!(hopf, unlink_jones(2));
    }

    #[test]
    fn unlink_values() {
        assert_eq!(unlink_jones(1), LaurentPolynomial::one());
        assert_eq!(unlink_jones(2), poly(&[(-1, -1), (1, -1)]));
        // trivial 2-braid closes to the 2-unlink
        assert_eq!(jones_of_closure(&BraidWord::identity(2), BUDGET).unwrap(), unlink_jones(2));
        assert_eq!(jones_of_closure(&w(2, &[1, -1]), BUDGET).unwrap(), unlink_jones(2));
    }

    #[test]
    fn flipped_b64_is_the_two_unlink() {
        let b = BraidWord::toric(6, 4).unwrap();
        let f = b.apply_crossing_changes(&[6, 10, 14, 15, 16, 18, 19, 20]).unwrap();
        assert_eq!(jones_of_closure(&f, BUDGET).unwrap(), unlink_jones(2));
    }

    #[test]
    fn budget_refusal() {
        let b = BraidWord::toric(7, 5).unwrap(); // 30 crossings
        match kauffman_bracket(&b, BUDGET) {
            Err(CrossingBudgetExceeded { len: 30, budget: 20 }) => {}
            other => panic!("expected budget refusal, got {other:?}"),
        }
        assert!(jones_of_closure(&b, 30).is_ok());
    }

    #[test]
    fn markov_invariance_of_jones() {
        let words = [w(3, &[1, 2, 1, 2]), w(3, &[1, -2, 1, -2]), w(2, &[1, 1])];
        for word in &words {
            let base = jones_of_closure(word, BUDGET).unwrap();
            assert_eq!(jones_of_closure(&word.stabilize(1), BUDGET).unwrap(), base);
            assert_eq!(jones_of_closure(&word.stabilize(-1), BUDGET).unwrap(), base);
            let g = w(word.strands(), &[-1]);
            assert_eq!(jones_of_closure(&word.conjugate(&g).unwrap(), BUDGET).unwrap(), base);
        }
    }
}
