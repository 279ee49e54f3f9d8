//! Constructs both sides of the general signed reduction pattern: the p-braid
//!   η₁ κ_{p−1} η₂ κ_{p−2} σ_{p−1}⁻¹ ⋯ η_a κ_{p−a} σ_{p−a+1}⁻¹ ⋯ σ_{p−1}⁻¹
//! (Markov equivalent to η₁η₂⋯η_a on p−a strands), where
//! η_i = σ₁^{g_{i,1}} ⋯ σ_{p−a−1}^{g_{i,p−a−1}} and κ_j = σ_{p−a} σ_{p−a+1} ⋯ σ_j.
//!
//! With all signs +1 the left side is B(p,a) flipped at its u-crossing data
//! and the right side is B(p−a, a).

use crate::braid::{BraidError, BraidWord, Letter};

/// Returns (lhs on p strands, rhs on p−a strands). `signs` must be an
/// a × (p−a−1) matrix of ±1.
pub fn signed_reduction_pair(
    p: usize,
    a: usize,
    signs: &[Vec<i8>],
) -> Result<(BraidWord, BraidWord), BraidError> {
    if a < 1 || a >= p {
        return Err(BraidError::InvalidTorusParams { p, q: a });
    }
    let eta_len = p - a - 1;
    if signs.len() != a || signs.iter().any(|row| row.len() != eta_len) {
        return Err(BraidError::Parse(format!(
            "sign matrix must be {a} x {eta_len} for (p, a) = ({p}, {a})"
        )));
    }
    for row in signs {
        for &s in row {
            if s != 1 && s != -1 {
                return Err(BraidError::Parse("sign entries must be ±1".into()));
            }
        }
    }

    let mut lhs = Vec::new();
    for (i, row) in signs.iter().enumerate() {
        let i = i + 1; // 1-based factor number
        for (k, &s) in row.iter().enumerate() {
            lhs.push(Letter::new(k + 1, s));
        }
        for j in p - a..=p - i {
            lhs.push(Letter::new(j, 1));
        }
        for j in p - i + 1..p {
            lhs.push(Letter::new(j, -1));
        }
    }
    let lhs = BraidWord::new(p, lhs)?;

    let mut rhs = Vec::new();
    for row in signs {
        for (k, &s) in row.iter().enumerate() {
            rhs.push(Letter::new(k + 1, s));
        }
    }
    let rhs = BraidWord::new((p - a).max(1), rhs)?;
    Ok((lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::toric::u_crossing_data;

    #[test]
    fn all_positive_is_flipped_toric() {
        // all g = +1: lhs = B(p,a) flipped at u-crossing data, rhs = B(p−a, a)
        for (p, a) in [(5usize, 2usize), (7, 4), (6, 2), (4, 3)] {
            let signs = vec![vec![1i8; p - a - 1]; a];
            let (lhs, rhs) = signed_reduction_pair(p, a, &signs).unwrap();
            let flipped = BraidWord::toric(p, a)
                .unwrap()
                .apply_crossing_changes(u_crossing_data(p, a).unwrap().as_slice())
                .unwrap();
            assert_eq!(lhs, flipped, "({p},{a})");
            if p - a >= 2 {
                assert_eq!(rhs, BraidWord::toric(p - a, a).unwrap(), "({p},{a})");
            } else {
                assert!(rhs.is_empty());
            }
        }
    }

    #[test]
    fn rows_have_full_width() {
        let signs = vec![vec![1, -1], vec![-1, 1], vec![1, 1]];
        let (lhs, rhs) = signed_reduction_pair(6, 3, &signs).unwrap();
        assert_eq!(lhs.len(), 3 * 5);
        assert_eq!(rhs.strands(), 3);
        assert_eq!(rhs.len(), 6);
    }

    #[test]
    fn a_equals_p_minus_one_gives_empty_rhs() {
        let signs = vec![vec![]; 4];
        let (lhs, rhs) = signed_reduction_pair(5, 4, &signs).unwrap();
        assert_eq!(rhs.strands(), 1);
        assert!(rhs.is_empty());
        assert_eq!(lhs.len(), 4 * 4);
    }

    #[test]
    fn bad_shapes_rejected() {
        assert!(signed_reduction_pair(5, 5, &[]).is_err());
        assert!(signed_reduction_pair(5, 2, &[vec![1, 1]]).is_err()); // wrong row count
        assert!(signed_reduction_pair(5, 2, &[vec![1], vec![1]]).is_err()); // wrong width
        assert!(signed_reduction_pair(5, 2, &[vec![1, 2], vec![1, 1]]).is_err()); // bad sign
    }
}
