//! Braid words on a fixed strand count, with the elementary operations used
//! everywhere else: crossing changes, concatenation, inversion, reversal,
//! free reduction, closure permutations and Markov moves.
//!
//! Letters are the Artin generators: `Letter { index: i, sign: +1 }` is σ_i
//! (strand i crosses over strand i+1), sign −1 is σ_i⁻¹. Words read top to
//! bottom; crossing positions are 1-based into the letter sequence.

use std::fmt;

use serde::{Deserialize, Serialize};

/// 1-based index into a braid word's letter sequence.
pub type CrossingPosition = usize;

/// A single Artin generator σ_i (sign +1) or its inverse σ_i⁻¹ (sign −1).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Letter {
    /// Generator subscript, 1 ≤ index ≤ strands−1.
    pub index: usize,
    /// +1 for σ_i, −1 for σ_i⁻¹.
    pub sign: i8,
}

impl<'de> Deserialize<'de> for Letter {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            index: usize,
            sign: i8,
        }
        let raw = Raw::deserialize(deserializer)?;
        if raw.index < 1 {
            return Err(serde::de::Error::custom("generator index is 1-based"));
        }
        if raw.sign != 1 && raw.sign != -1 {
            return Err(serde::de::Error::custom("letter sign must be ±1"));
        }
        Ok(Letter { index: raw.index, sign: raw.sign })
    }
}

impl Letter {
    pub fn new(index: usize, sign: i8) -> Self {
        assert!(sign == 1 || sign == -1, "letter sign must be ±1");
        assert!(index >= 1, "generator index is 1-based");
        Letter { index, sign }
    }

    pub fn inverse(self) -> Self {
        Letter { index: self.index, sign: -self.sign }
    }

    /// Signed-integer form: k > 0 is σ_k, k < 0 is σ_|k|⁻¹.
    pub fn to_int(self) -> i64 {
        self.index as i64 * self.sign as i64
    }

    pub fn from_int(k: i64) -> Result<Self, BraidError> {
        if k == 0 {
            return Err(BraidError::ZeroLetter);
        }
        Ok(Letter { index: k.unsigned_abs() as usize, sign: if k > 0 { 1 } else { -1 } })
    }
}

/// Errors from braid word construction and operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BraidError {
    InvalidStrands(usize),
    InvalidTorusParams { p: usize, q: usize },
    LetterOutOfRange { index: usize, strands: usize },
    PositionOutOfRange { position: usize, len: usize },
    StrandMismatch { left: usize, right: usize },
    ZeroLetter,
    CannotDestabilize(String),
    Parse(String),
}

impl fmt::Display for BraidError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BraidError::InvalidStrands(n) => write!(f, "invalid strand count {n}"),
            BraidError::InvalidTorusParams { p, q } => {
                write!(f, "invalid torus parameters (p, q) = ({p}, {q}); need p >= 2, q >= 1")
            }
            BraidError::LetterOutOfRange { index, strands } => {
                write!(f, "generator index {index} out of range for {strands} strands")
            }
            BraidError::PositionOutOfRange { position, len } => {
                write!(f, "crossing position {position} out of range 1..={len}")
            }
            BraidError::StrandMismatch { left, right } => {
                write!(f, "strand count mismatch: {left} vs {right}")
            }
            BraidError::ZeroLetter => write!(f, "0 is not a valid braid letter"),
            BraidError::CannotDestabilize(why) => write!(f, "cannot destabilize: {why}"),
            BraidError::Parse(msg) => write!(f, "braid parse error: {msg}"),
        }
    }
}

impl std::error::Error for BraidError {}

/// A braid word: an explicit strand count plus an ordered letter sequence.
///
/// The empty sequence is the trivial braid on `strands` strands. The strand
/// count is never inferred from the letters, so stabilization moves stay
/// unambiguous.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<Letter>,
}

impl<'de> Deserialize<'de> for BraidWord {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            strands: usize,
            letters: Vec<Letter>,
        }
        let raw = Raw::deserialize(deserializer)?;
        BraidWord::new(raw.strands, raw.letters).map_err(serde::de::Error::custom)
    }
}

impl BraidWord {
    /// Trivial braid on `strands` strands.
    pub fn identity(strands: usize) -> Self {
        assert!(strands >= 1, "need at least one strand");
        BraidWord { strands, letters: Vec::new() }
    }

    pub fn new(strands: usize, letters: Vec<Letter>) -> Result<Self, BraidError> {
        if strands < 1 {
            return Err(BraidError::InvalidStrands(strands));
        }
        for l in &letters {
            if l.index < 1 || l.index >= strands {
                return Err(BraidError::LetterOutOfRange { index: l.index, strands });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    /// Builds a word from signed integers: k > 0 means σ_k, k < 0 means σ_|k|⁻¹.
    pub fn from_ints(strands: usize, ints: &[i64]) -> Result<Self, BraidError> {
        let letters = ints.iter().map(|&k| Letter::from_int(k)).collect::<Result<Vec<_>, _>>()?;
        BraidWord::new(strands, letters)
    }

    /// Parses the shared text format: whitespace-separated nonzero integers.
    pub fn parse(strands: usize, text: &str) -> Result<Self, BraidError> {
        let mut ints = Vec::new();
        for tok in text.split_whitespace() {
            let k: i64 = tok.parse().map_err(|_| BraidError::Parse(format!("bad letter {tok:?}")))?;
            ints.push(k);
        }
        BraidWord::from_ints(strands, &ints)
    }

    /// The toric braid B(p,q) = (σ₁σ₂…σ_{p−1})^q on p strands.
    pub fn toric(p: usize, q: usize) -> Result<Self, BraidError> {
        if p < 2 || q < 1 {
            return Err(BraidError::InvalidTorusParams { p, q });
        }
        let mut letters = Vec::with_capacity(q * (p - 1));
        for _ in 0..q {
            for i in 1..p {
                letters.push(Letter::new(i, 1));
            }
        }
        Ok(BraidWord { strands: p, letters })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn to_ints(&self) -> Vec<i64> {
        self.letters.iter().map(|l| l.to_int()).collect()
    }

    /// Negates the sign of every listed letter; 1-based positions, set semantics.
    ///
    /// Applying the same set twice returns the original word.
    pub fn apply_crossing_changes(&self, positions: &[CrossingPosition]) -> Result<Self, BraidError> {
        let mut letters = self.letters.clone();
        for &pos in positions {
            if pos < 1 || pos > letters.len() {
                return Err(BraidError::PositionOutOfRange { position: pos, len: letters.len() });
            }
        }
        let mut seen = std::collections::BTreeSet::new();
        for &pos in positions {
            if seen.insert(pos) {
                letters[pos - 1].sign = -letters[pos - 1].sign;
            }
        }
        Ok(BraidWord { strands: self.strands, letters })
    }

    pub fn concat(&self, other: &Self) -> Result<Self, BraidError> {
        if self.strands != other.strands {
            return Err(BraidError::StrandMismatch { left: self.strands, right: other.strands });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { strands: self.strands, letters })
    }

    /// Group inverse: reversed letter order with all signs negated.
    pub fn inverse(&self) -> Self {
        let letters = self.letters.iter().rev().map(|l| l.inverse()).collect();
        BraidWord { strands: self.strands, letters }
    }

    /// Letter order reversed, indices and signs unchanged.
    ///
    /// For the toric braid this realizes B̄(p,q) = (σ_{p−1}…σ₁)^q.
    pub fn reverse(&self) -> Self {
        let letters = self.letters.iter().rev().copied().collect();
        BraidWord { strands: self.strands, letters }
    }

    /// Cancels adjacent σ_iσ_i⁻¹ pairs until none remain.
    pub fn free_reduce(&self) -> Self {
        let mut stack: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            match stack.last() {
                Some(top) if top.index == l.index && top.sign == -l.sign => {
                    stack.pop();
                }
                _ => stack.push(l),
            }
        }
        BraidWord { strands: self.strands, letters: stack }
    }

    /// Image of each strand under the word, ignoring crossing signs.
    pub fn underlying_permutation(&self) -> Permutation {
        let mut map: Vec<usize> = (0..self.strands).collect();
        for l in &self.letters {
            map.swap(l.index - 1, l.index);
        }
        // map[pos] = strand that ends at position pos; invert to strand -> endpoint
        let mut image = vec![0usize; self.strands];
        for (pos, &strand) in map.iter().enumerate() {
            image[strand] = pos;
        }
        Permutation { image }
    }

    /// Number of components of the trace closure; equals gcd(p,q) for B(p,q).
    pub fn component_count_of_closure(&self) -> usize {
        self.underlying_permutation().cycle_count()
    }

    /// Sum of letter signs (the writhe of the closure diagram).
    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| l.sign as i64).sum()
    }

    /// Markov move M₁: returns g·w·g⁻¹ (letters concatenated, unreduced).
    pub fn conjugate(&self, g: &Self) -> Result<Self, BraidError> {
        if self.strands != g.strands {
            return Err(BraidError::StrandMismatch { left: self.strands, right: g.strands });
        }
        g.concat(self)?.concat(&g.inverse())
    }

    /// Markov move M₂: appends σ_n^{sign} on n+1 strands.
    pub fn stabilize(&self, sign: i8) -> Self {
        assert!(sign == 1 || sign == -1);
        let mut letters = self.letters.clone();
        letters.push(Letter::new(self.strands, sign));
        BraidWord { strands: self.strands + 1, letters }
    }

    /// Inverse of `stabilize`: removes a final σ_{n−1}^{±1} that is the only
    /// occurrence of the top generator, dropping to n−1 strands.
    pub fn destabilize(&self) -> Result<Self, BraidError> {
        if self.strands < 2 {
            return Err(BraidError::CannotDestabilize("already on one strand".into()));
        }
        let top = self.strands - 1;
        let occurrences = self.letters.iter().filter(|l| l.index == top).count();
        if occurrences != 1 {
            return Err(BraidError::CannotDestabilize(format!(
                "top generator σ_{top} occurs {occurrences} times, need exactly one"
            )));
        }
        match self.letters.last() {
            Some(l) if l.index == top => {
                let letters = self.letters[..self.letters.len() - 1].to_vec();
                Ok(BraidWord { strands: self.strands - 1, letters })
            }
            _ => Err(BraidError::CannotDestabilize(format!(
                "the occurrence of σ_{top} is not the final letter"
            ))),
        }
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "(empty on {} strands)", self.strands);
        }
        let body = self
            .letters
            .iter()
            .map(|l| l.to_int().to_string())
            .collect::<Vec<_>>()
            .join(" ");
        write!(f, "{body}")
    }
}

/// A bijection on {1..n}: `image_of(s)` is the endpoint of strand s.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation {
    image: Vec<usize>, // 0-based internally
}

impl Permutation {
    pub fn degree(&self) -> usize {
        self.image.len()
    }

    /// Endpoint (1-based) of the 1-based strand `s`.
    pub fn image_of(&self, s: usize) -> usize {
        self.image[s - 1] + 1
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn cycle_count(&self) -> usize {
        let n = self.image.len();
        let mut seen = vec![false; n];
        let mut cycles = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.image[x];
            }
        }
        cycles
    }
}
