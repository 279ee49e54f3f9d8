//! Alexander polynomial of a braid closure via the reduced Burau
//! representation.
//!
//! The unreduced Burau matrix of σ_i acts by e_i ↦ (1−t)e_i + e_{i+1},
//! e_{i+1} ↦ t·e_i and fixes the vector e₁+…+e_n, so it descends to the
//! quotient module on ē₁..ē_{n−1} (with ē_n ≡ −ē₁−…−ē_{n−1}); that quotient
//! action is the reduced Burau representation ψ. For a braid β on n strands,
//!   det(ψ(β) − I) = ±t^k · Δ(t) · (1 + t + … + t^{n−1}),
//! where Δ is the one-variable Alexander polynomial of the closure. Split
//! links (in particular unlinks with d ≥ 2 components) give Δ = 0.

use num_bigint::BigInt;
use num_traits::One;

use crate::braid::{BraidWord, Letter};
use crate::laurent::LaurentPolynomial;

type Matrix = Vec<Vec<LaurentPolynomial>>;

fn identity_matrix(n: usize) -> Matrix {
    (0..n)
        .map(|r| {
            (0..n)
                .map(|c| if r == c { LaurentPolynomial::one() } else { LaurentPolynomial::zero() })
                .collect()
        })
        .collect()
}

fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    let mut out = vec![vec![LaurentPolynomial::zero(); n]; n];
    for r in 0..n {
        for (k, ark) in a[r].iter().enumerate() {
            if ark.is_zero() {
                continue;
            }
            for c in 0..n {
                if b[k][c].is_zero() {
                    continue;
                }
                let prod = ark * &b[k][c];
                out[r][c] = &out[r][c] + &prod;
            }
        }
    }
    out
}

/// ψ(σ_i^{±1}) on n strands as an (n−1)×(n−1) matrix; columns are images.
fn reduced_burau_letter(n: usize, l: Letter) -> Matrix {
    let dim = n - 1;
    let mut m = identity_matrix(dim);
    let i = l.index; // 1-based
    let col = |m: &mut Matrix, c: usize, entries: Vec<(usize, LaurentPolynomial)>| {
        for row in m.iter_mut() {
            row[c] = LaurentPolynomial::zero();
        }
        for (row, v) in entries {
            m[row][c] = v;
        }
    };
    let t = || LaurentPolynomial::monomial(1, 1);
    let t_inv = || LaurentPolynomial::monomial(-1, 1);
    let one_minus_t = || LaurentPolynomial::from_terms([(0i64, 1i64), (1, -1)]);
    let one_minus_tinv = || LaurentPolynomial::from_terms([(0i64, 1i64), (-1, -1)]);

    if l.sign > 0 {
        if i < n - 1 {
            // ē_i ↦ (1−t)ē_i + ē_{i+1}, ē_{i+1} ↦ t·ē_i
            col(&mut m, i - 1, vec![(i - 1, one_minus_t()), (i, LaurentPolynomial::one())]);
            col(&mut m, i, vec![(i - 1, t())]);
        } else {
            // ē_{n−1} ↦ (1−t)ē_{n−1} + ē_n ≡ −ē₁ − … − ē_{n−2} − t·ē_{n−1}
            let mut entries = Vec::new();
            for row in 0..dim - 1 {
                entries.push((row, LaurentPolynomial::monomial(0, -1)));
            }
            entries.push((dim - 1, LaurentPolynomial::monomial(1, -1)));
            col(&mut m, dim - 1, entries);
        }
    } else if i < n - 1 {
        // ē_i ↦ t⁻¹·ē_{i+1}, ē_{i+1} ↦ ē_i + (1−t⁻¹)ē_{i+1}
        col(&mut m, i - 1, vec![(i, t_inv())]);
        col(&mut m, i, vec![(i - 1, LaurentPolynomial::one()), (i, one_minus_tinv())]);
    } else {
        // ē_{n−1} ↦ t⁻¹·ē_n ≡ −t⁻¹(ē₁ + … + ē_{n−1})
        let entries = (0..dim).map(|row| (row, LaurentPolynomial::monomial(-1, -1))).collect();
        col(&mut m, dim - 1, entries);
    }
    m
}

/// Product of reduced Burau matrices along the word, left to right.
pub fn reduced_burau_matrix(w: &BraidWord) -> Matrix {
    assert!(w.strands() >= 2, "reduced Burau needs at least two strands");
    let mut acc = identity_matrix(w.strands() - 1);
    for &l in w.letters() {
        let m = reduced_burau_letter(w.strands(), l);
        acc = mat_mul(&acc, &m);
    }
    acc
}

/// Unreduced n×n Burau matrix; faithful for n = 3, used as an independent
/// equality oracle on 3-strand words.
pub fn unreduced_burau_matrix(w: &BraidWord) -> Matrix {
    let n = w.strands();
    let mut acc = identity_matrix(n);
    for &l in w.letters() {
        let mut m = identity_matrix(n);
        let i = l.index - 1; // 0-based row/col of the 2×2 block
        if l.sign > 0 {
            // e_i ↦ (1−t)e_i + e_{i+1}, e_{i+1} ↦ t·e_i
            m[i][i] = LaurentPolynomial::from_terms([(0i64, 1i64), (1, -1)]);
            m[i + 1][i] = LaurentPolynomial::one();
            m[i][i + 1] = LaurentPolynomial::monomial(1, 1);
            m[i + 1][i + 1] = LaurentPolynomial::zero();
        } else {
            m[i][i] = LaurentPolynomial::zero();
            m[i + 1][i] = LaurentPolynomial::monomial(-1, 1);
            m[i][i + 1] = LaurentPolynomial::one();
            m[i + 1][i + 1] = LaurentPolynomial::from_terms([(0i64, 1i64), (-1, -1)]);
        }
        acc = mat_mul(&acc, &m);
    }
    acc
}

/// Fraction-free determinant (Bareiss). Divisions are exact by construction.
fn determinant(mut m: Matrix) -> LaurentPolynomial {
    let n = m.len();
    if n == 0 {
        return LaurentPolynomial::one();
    }
    let mut sign = 1i64;
    let mut prev = LaurentPolynomial::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return LaurentPolynomial::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num
                    .div_exact(&prev)
                    .expect("Bareiss division is exact over an integral domain");
            }
            m[i][k] = LaurentPolynomial::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign < 0 {
        -&det
    } else {
        det
    }
}

/// One-variable Alexander polynomial of the closure, normalized to lowest
/// exponent 0 with positive lowest coefficient. 1 for the unknot, 0 for
/// split links (hence for unlinks with d ≥ 2).
pub fn alexander_of_closure(w: &BraidWord) -> LaurentPolynomial {
    let n = w.strands();
    if n == 1 {
        return LaurentPolynomial::one(); // closure of the empty 1-braid is the unknot
    }
    let psi = reduced_burau_matrix(w);
    let mut m = psi;
    for (r, row) in m.iter_mut().enumerate() {
        for (c, entry) in row.iter_mut().enumerate() {
            if r == c {
                *entry = &*entry - &LaurentPolynomial::one();
            }
        }
    }
    let det = determinant(m);
    let quantum = LaurentPolynomial::from_terms((0..n as i64).map(|e| (e, BigInt::one())));
    let delta = det
        .div_exact(&quantum)
        .expect("det(psi - I) is divisible by 1 + t + ... + t^{n-1}");
    delta.normalize_alexander()
}
