//! Machine-checkable rewrite certificates.
//!
//! A certificate is a start word, a step list, and an end word. Replaying the
//! steps must transport start to end, each step being a legal instance of its
//! rule. Group-equality certificates may not contain Markov moves; the two
//! M-rules are closure-only (they change the group element but not the
//! closure's isotopy class).
//!
//! The braid-relation rule is the general signed pattern
//!   σ_i^g σ_j^{g_j} … σ_{i−1}^{g_{i−1}} σ_i^{g_i} … σ_n^{g_n}
//!     = σ_j^{g_j} … σ_{i−1}^{g_i} σ_i^{g_{i−1}} … σ_n^{g_n} σ_{i−1}^g
//! valid when g = g_{i−1} or g_{i−1} = g_i, for 1 ≤ j < i ≤ n. With j = i−1,
//! n = i it degenerates to the signed three-letter braid relation.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::braid::{BraidError, BraidWord, Letter};

/// One rewrite step. Sites are 1-based letter positions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum RewriteStep {
    /// Remove the adjacent pair σ_k^e σ_k^{−e} at positions site, site+1.
    FreeCancel { site: usize },
    /// Swap adjacent letters with |index difference| ≥ 2.
    FarCommute { site: usize },
    /// The signed pattern above, applied left-to-right (`reversed = false`)
    /// at `site` = position of σ_i^g, or right-to-left (`reversed = true`)
    /// at `site` = first position of the ascending run.
    BraidRelation { site: usize, i: usize, j: usize, n: usize, reversed: bool },
    /// Markov move M₁: w ↦ g·w·g⁻¹, letters concatenated without reduction.
    M1Conjugate { conjugator: BraidWord },
    /// Markov move M₂: remove a final σ_{n−1}^{±1} that is the unique
    /// occurrence of the top generator; strand count drops by one.
    M2Destabilize,
    /// Inverse of M₂: append σ_n^{sign} on n+1 strands.
    M2Stabilize { sign: i8 },
}

impl RewriteStep {
    /// Closure-only steps preserve the closure's type but not the group element.
    pub fn is_closure_move(&self) -> bool {
        matches!(
            self,
            RewriteStep::M1Conjugate { .. } | RewriteStep::M2Destabilize | RewriteStep::M2Stabilize { .. }
        )
    }
}

/// What a certificate claims about its endpoints.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CertificateKind {
    /// start = end in the braid group (no M-moves allowed).
    GroupEquality,
    /// Closures of start and end are isotopic links.
    MarkovEquivalence,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub kind: CertificateKind,
    pub start: BraidWord,
    pub steps: Vec<RewriteStep>,
    pub end: BraidWord,
}

/// Why a certificate failed, with the first offending step index (0-based).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertificateError {
    pub step_index: Option<usize>,
    pub reason: String,
}

impl fmt::Display for CertificateError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.step_index {
            Some(i) => write!(f, "illegal certificate step {i}: {}", self.reason),
            None => write!(f, "certificate invalid: {}", self.reason),
        }
    }
}

impl std::error::Error for CertificateError {}

/// Applies a single step, validating that it is a legal rule instance.
pub fn apply_step(word: &BraidWord, step: &RewriteStep) -> Result<BraidWord, String> {
    let letters = word.letters();
    let len = letters.len();
    match step {
        RewriteStep::FreeCancel { site } => {
            let s = check_site(*site, len, 2)?;
            let (a, b) = (letters[s], letters[s + 1]);
            if a.index != b.index || a.sign != -b.sign {
                return Err(format!(
                    "letters at site {site} are not an inverse pair: {} {}",
                    a.to_int(),
                    b.to_int()
                ));
            }
            let mut v = letters.to_vec();
            v.drain(s..=s + 1);
            BraidWord::new(word.strands(), v).map_err(|e| e.to_string())
        }
        RewriteStep::FarCommute { site } => {
            let s = check_site(*site, len, 2)?;
            let (a, b) = (letters[s], letters[s + 1]);
            let lo = a.index.min(b.index);
            let hi = a.index.max(b.index);
            if hi - lo < 2 {
                return Err(format!(
                    "letters at site {site} have adjacent indices {} and {}",
                    a.index, b.index
                ));
            }
            let mut v = letters.to_vec();
            v.swap(s, s + 1);
            BraidWord::new(word.strands(), v).map_err(|e| e.to_string())
        }
        RewriteStep::BraidRelation { site, i, j, n, reversed } => {
            apply_braid_relation(word, *site, *i, *j, *n, *reversed)
        }
        RewriteStep::M1Conjugate { conjugator } => {
            word.conjugate(conjugator).map_err(|e: BraidError| e.to_string())
        }
        RewriteStep::M2Destabilize => word.destabilize().map_err(|e| e.to_string()),
        RewriteStep::M2Stabilize { sign } => {
            if *sign != 1 && *sign != -1 {
                return Err("stabilization sign must be ±1".into());
            }
            Ok(word.stabilize(*sign))
        }
    }
}

fn check_site(site: usize, len: usize, span: usize) -> Result<usize, String> {
    // site ≥ 1 and site + span − 1 ≤ len, without overflow on hostile input
    if site < 1 || span > len || site - 1 > len - span {
        return Err(format!("site {site} (span {span}) out of range for word of length {len}"));
    }
    Ok(site - 1)
}

fn apply_braid_relation(
    word: &BraidWord,
    site: usize,
    i: usize,
    j: usize,
    n: usize,
    reversed: bool,
) -> Result<BraidWord, String> {
    if !(1 <= j && j < i && i <= n) {
        return Err(format!("need 1 ≤ j < i ≤ n, got i = {i}, j = {j}, n = {n}"));
    }
    if n >= word.strands() {
        return Err(format!("run top index {n} exceeds the generator range on {} strands", word.strands()));
    }
    let run_len = n - j + 1;
    let letters = word.letters();
    let len = letters.len();

    if !reversed {
        // σ_i^g at `site`, ascending run j..n right after
        let s = check_site(site, len, 1 + run_len)?;
        let lead = letters[s];
        if lead.index != i {
            return Err(format!("letter at site {site} has index {}, expected σ_{i}", lead.index));
        }
        let run = &letters[s + 1..s + 1 + run_len];
        check_run(run, j, n)?;
        let g = lead.sign;
        let g_im1 = run[i - 1 - j].sign;
        let g_i = run[i - j].sign;
        if g != g_im1 && g_im1 != g_i {
            return Err(format!(
                "sign condition fails: g = {g}, g_(i-1) = {g_im1}, g_i = {g_i}"
            ));
        }
        let mut v = letters.to_vec();
        v.remove(s);
        // run now occupies s..s+run_len; swap the signs at indices i−1, i
        let a = s + (i - 1 - j);
        let b = s + (i - j);
        let (sa, sb) = (v[a].sign, v[b].sign);
        v[a].sign = sb;
        v[b].sign = sa;
        v.insert(s + run_len, Letter::new(i - 1, g));
        BraidWord::new(word.strands(), v).map_err(|e| e.to_string())
    } else {
        // ascending run j..n at `site`, σ_{i−1}^g right after
        let s = check_site(site, len, run_len + 1)?;
        let run = &letters[s..s + run_len];
        check_run(run, j, n)?;
        let trail = letters[s + run_len];
        if trail.index != i - 1 {
            return Err(format!(
                "letter after the run has index {}, expected σ_{}",
                trail.index,
                i - 1
            ));
        }
        let g = trail.sign;
        // the forward direction produced run signs with positions i−1, i swapped
        let g_i = run[i - 1 - j].sign; // original g_i sits at position i−1
        let g_im1 = run[i - j].sign; // original g_{i−1} sits at position i
        if g != g_im1 && g_im1 != g_i {
            return Err(format!(
                "sign condition fails: g = {g}, g_(i-1) = {g_im1}, g_i = {g_i}"
            ));
        }
        let mut v = letters.to_vec();
        v.remove(s + run_len);
        let a = s + (i - 1 - j);
        let b = s + (i - j);
        let (sa, sb) = (v[a].sign, v[b].sign);
        v[a].sign = sb;
        v[b].sign = sa;
        v.insert(s, Letter::new(i, g));
        BraidWord::new(word.strands(), v).map_err(|e| e.to_string())
    }
}

fn check_run(run: &[Letter], j: usize, n: usize) -> Result<(), String> {
    for (off, l) in run.iter().enumerate() {
        if l.index != j + off {
            return Err(format!(
                "run letter {} has index {}, expected σ_{} (ascending {j}..{n})",
                off,
                l.index,
                j + off
            ));
        }
    }
    Ok(())
}

impl Certificate {
    /// Replays every step; Ok means the chain is legal and transports
    /// start to end. The first illegal step is reported by index.
    pub fn check(&self) -> Result<(), CertificateError> {
        let mut word = self.start.clone();
        for (idx, step) in self.steps.iter().enumerate() {
            if self.kind == CertificateKind::GroupEquality && step.is_closure_move() {
                return Err(CertificateError {
                    step_index: Some(idx),
                    reason: "Markov move inside a group-equality certificate".into(),
                });
            }
            word = apply_step(&word, step)
                .map_err(|reason| CertificateError { step_index: Some(idx), reason })?;
        }
        if word != self.end {
            return Err(CertificateError {
                step_index: None,
                reason: format!(
                    "replay ends at `{}` on {} strands, certificate claims `{}` on {} strands",
                    word,
                    word.strands(),
                    self.end,
                    self.end.strands()
                ),
            });
        }
        Ok(())
    }

    pub fn is_valid(&self) -> bool {
        self.check().is_ok()
    }

    /// Line-oriented text format, one step per line.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(match self.kind {
            CertificateKind::GroupEquality => "kind group-equality\n",
            CertificateKind::MarkovEquivalence => "kind markov-equivalence\n",
        });
        out.push_str(&format!("strands {}\n", self.start.strands()));
        out.push_str(&format!("start {}\n", word_field(&self.start)));
        for step in &self.steps {
            match step {
                RewriteStep::FreeCancel { site } => out.push_str(&format!("free-cancel {site}\n")),
                RewriteStep::FarCommute { site } => out.push_str(&format!("far-commute {site}\n")),
                RewriteStep::BraidRelation { site, i, j, n, reversed } => {
                    let dir = if *reversed { "rev" } else { "fwd" };
                    out.push_str(&format!("braid-relation {site} {i} {j} {n} {dir}\n"));
                }
                RewriteStep::M1Conjugate { conjugator } => {
                    out.push_str(&format!(
                        "m1-conjugate {} {}\n",
                        conjugator.strands(),
                        word_field(conjugator)
                    ));
                }
                RewriteStep::M2Destabilize => out.push_str("m2-destabilize\n"),
                RewriteStep::M2Stabilize { sign } => {
                    out.push_str(&format!("m2-stabilize {}\n", if *sign > 0 { "+" } else { "-" }));
                }
            }
        }
        out.push_str(&format!("end-strands {}\n", self.end.strands()));
        out.push_str(&format!("end {}\n", word_field(&self.end)));
        out
    }

    pub fn from_text(text: &str) -> Result<Self, CertificateError> {
        let bad = |reason: String| CertificateError { step_index: None, reason };
        let mut kind = None;
        let mut strands = None;
        let mut start = None;
        let mut end_strands = None;
        let mut end = None;
        let mut steps = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (head, rest) = match line.split_once(' ') {
                Some((h, r)) => (h, r.trim()),
                None => (line, ""),
            };
            let ctx = |msg: &str| bad(format!("line {}: {msg}", lineno + 1));
            match head {
                "kind" => {
                    kind = Some(match rest {
                        "group-equality" => CertificateKind::GroupEquality,
                        "markov-equivalence" => CertificateKind::MarkovEquivalence,
                        other => return Err(ctx(&format!("unknown kind {other:?}"))),
                    })
                }
                "strands" => strands = Some(parse_num(rest).map_err(|e| ctx(&e))?),
                "end-strands" => end_strands = Some(parse_num(rest).map_err(|e| ctx(&e))?),
                "start" => {
                    let n = strands.ok_or_else(|| ctx("start before strands"))?;
                    start = Some(parse_word_field(n, rest).map_err(|e| ctx(&e))?);
                }
                "end" => {
                    let n = end_strands.ok_or_else(|| ctx("end before end-strands"))?;
                    end = Some(parse_word_field(n, rest).map_err(|e| ctx(&e))?);
                }
                "free-cancel" => {
                    steps.push(RewriteStep::FreeCancel { site: parse_num(rest).map_err(|e| ctx(&e))? })
                }
                "far-commute" => {
                    steps.push(RewriteStep::FarCommute { site: parse_num(rest).map_err(|e| ctx(&e))? })
                }
                "braid-relation" => {
                    let parts: Vec<&str> = rest.split_whitespace().collect();
                    if parts.len() != 5 {
                        return Err(ctx("braid-relation needs: site i j n fwd|rev"));
                    }
                    let site = parse_num(parts[0]).map_err(|e| ctx(&e))?;
                    let i = parse_num(parts[1]).map_err(|e| ctx(&e))?;
                    let j = parse_num(parts[2]).map_err(|e| ctx(&e))?;
                    let n = parse_num(parts[3]).map_err(|e| ctx(&e))?;
                    let reversed = match parts[4] {
                        "fwd" => false,
                        "rev" => true,
                        other => return Err(ctx(&format!("unknown direction {other:?}"))),
                    };
                    steps.push(RewriteStep::BraidRelation { site, i, j, n, reversed });
                }
                "m1-conjugate" => {
                    let (n_field, body) = rest
                        .split_once(' ')
                        .ok_or_else(|| ctx("m1-conjugate needs: strands letters|-"))?;
                    let n = parse_num(n_field).map_err(|e| ctx(&e))?;
                    steps.push(RewriteStep::M1Conjugate {
                        conjugator: parse_word_field(n, body.trim()).map_err(|e| ctx(&e))?,
                    });
                }
                "m2-destabilize" => steps.push(RewriteStep::M2Destabilize),
                "m2-stabilize" => {
                    let sign = match rest {
                        "+" => 1,
                        "-" => -1,
                        other => return Err(ctx(&format!("bad stabilize sign {other:?}"))),
                    };
                    steps.push(RewriteStep::M2Stabilize { sign });
                }
                other => return Err(ctx(&format!("unknown directive {other:?}"))),
            }
        }
        let kind = kind.ok_or_else(|| bad("missing kind".into()))?;
        let start = start.ok_or_else(|| bad("missing start".into()))?;
        let end = end.ok_or_else(|| bad("missing end".into()))?;
        Ok(Certificate { kind, start, steps, end })
    }
}

fn parse_word_field(strands: usize, field: &str) -> Result<BraidWord, String> {
    if field == "-" {
        return Ok(BraidWord::identity(strands));
    }
    BraidWord::parse(strands, field).map_err(|e| e.to_string())
}

fn word_field(w: &BraidWord) -> String {
    if w.is_empty() {
        "-".to_string()
    } else {
        w.to_ints().iter().map(|k| k.to_string()).collect::<Vec<_>>().join(" ")
    }
}

fn parse_num(s: &str) -> Result<usize, String> {
    s.trim().parse::<usize>().map_err(|_| format!("expected a number, got {s:?}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(strands: usize, ints: &[i64]) -> BraidWord {
        BraidWord::from_ints(strands, ints).unwrap()
    }

    #[test]
    fn free_cancel_and_far_commute() {
        let word = w(4, &[1, 3, -3, 2]);
        let after = apply_step(&word, &RewriteStep::FreeCancel { site: 2 }).unwrap();
        assert_eq!(after.to_ints(), vec![1, 2]);
        assert!(apply_step(&word, &RewriteStep::FreeCancel { site: 1 }).is_err());

        let word = w(4, &[1, 3]);
        let after = apply_step(&word, &RewriteStep::FarCommute { site: 1 }).unwrap();
        assert_eq!(after.to_ints(), vec![3, 1]);
        assert!(apply_step(&w(4, &[1, 2]), &RewriteStep::FarCommute { site: 1 }).is_err());
    }

    #[test]
    fn braid_relation_three_letter() {
        // σ₂σ₁σ₂ → σ₁σ₂σ₁ is the all-positive pattern with i = n = 2, j = 1
        let word = w(3, &[2, 1, 2]);
        let step = RewriteStep::BraidRelation { site: 1, i: 2, j: 1, n: 2, reversed: false };
        let after = apply_step(&word, &step).unwrap();
        assert_eq!(after.to_ints(), vec![1, 2, 1]);

        // signed variant σ₂σ₁σ₂⁻¹ → σ₁⁻¹σ₂σ₁ (g = g_{i−1} branch)
        let word = w(3, &[2, 1, -2]);
        let after = apply_step(&word, &step).unwrap();
        assert_eq!(after.to_ints(), vec![-1, 2, 1]);

        // illegal sign pattern σ₂σ₁⁻¹σ₂
        let word = w(3, &[2, -1, 2]);
        assert!(apply_step(&word, &step).is_err());
    }

    #[test]
    fn braid_relation_long_run() {
        // σ₄ σ₁σ₂σ₃σ₄ → σ₁σ₂σ₃σ₄ σ₃ (used in the B(5,4) derivation)
        let word = w(5, &[4, 1, 2, 3, 4]);
        let step = RewriteStep::BraidRelation { site: 1, i: 4, j: 1, n: 4, reversed: false };
        let after = apply_step(&word, &step).unwrap();
        assert_eq!(after.to_ints(), vec![1, 2, 3, 4, 3]);

        // and back
        let back = apply_step(
            &after,
            &RewriteStep::BraidRelation { site: 1, i: 4, j: 1, n: 4, reversed: true },
        )
        .unwrap();
        assert_eq!(back, word);
    }

    #[test]
    fn markov_steps() {
        let word = w(3, &[1, 2]);
        let conj = apply_step(
            &word,
            &RewriteStep::M1Conjugate { conjugator: w(3, &[2]) },
        )
        .unwrap();
        assert_eq!(conj.to_ints(), vec![2, 1, 2, -2]);

        let stab = apply_step(&word, &RewriteStep::M2Stabilize { sign: -1 }).unwrap();
        assert_eq!(stab.strands(), 4);
        assert_eq!(stab.to_ints(), vec![1, 2, -3]);
        let destab = apply_step(&stab, &RewriteStep::M2Destabilize).unwrap();
        assert_eq!(destab, word);
    }

    #[test]
    fn empty_chain_checks_when_start_is_end() {
        let word = w(3, &[1, 2]);
        let cert = Certificate {
            kind: CertificateKind::GroupEquality,
            start: word.clone(),
            steps: vec![],
            end: word,
        };
        assert!(cert.check().is_ok());
    }

    #[test]
    fn corrupted_chain_reports_step_index() {
        let start = w(3, &[1, -1, 2, -2]);
        let cert = Certificate {
            kind: CertificateKind::GroupEquality,
            start: start.clone(),
            steps: vec![
                RewriteStep::FreeCancel { site: 1 },
                RewriteStep::FreeCancel { site: 2 }, // corrupted site: pair is at 1
            ],
            end: BraidWord::identity(3),
        };
        let err = cert.check().unwrap_err();
        assert_eq!(err.step_index, Some(1));
    }

    #[test]
    fn group_equality_rejects_markov_moves() {
        let start = w(2, &[1]);
        let cert = Certificate {
            kind: CertificateKind::GroupEquality,
            start: start.clone(),
            steps: vec![RewriteStep::M2Stabilize { sign: 1 }],
            end: start.stabilize(1),
        };
        let err = cert.check().unwrap_err();
        assert_eq!(err.step_index, Some(0));
    }

    #[test]
    fn hostile_step_parameters_error_without_panicking() {
        let word = w(3, &[1, 2]);
        let huge = usize::MAX;
        for step in [
            RewriteStep::FreeCancel { site: huge },
            RewriteStep::FarCommute { site: huge },
            RewriteStep::FreeCancel { site: 0 },
            RewriteStep::BraidRelation { site: huge, i: 2, j: 1, n: 2, reversed: false },
            RewriteStep::BraidRelation { site: 1, i: huge - 1, j: 1, n: huge, reversed: false },
            RewriteStep::BraidRelation { site: 1, i: 2, j: 2, n: 2, reversed: true },
        ] {
            assert!(apply_step(&word, &step).is_err(), "{step:?}");
        }
        // garbage text errors rather than panicking
        for text in [
            "kind group-equality\nstrands 3\nstart 1\nfree-cancel\nend-strands 3\nend -\n",
            "kind nonsense\n",
            "strands 3\nstart 1\n",
            "kind group-equality\nstrands 3\nstart 1 2\nbraid-relation 1 2 1\nend-strands 3\nend -\n",
            "kind group-equality\nstrands 3\nm1-conjugate 3\nstart 1\nend-strands 3\nend 1\n",
        ] {
            assert!(Certificate::from_text(text).is_err(), "{text:?}");
        }
    }

    #[test]
    fn text_round_trip() {
        let cert = Certificate {
            kind: CertificateKind::MarkovEquivalence,
            start: w(3, &[1, 2, 1, -2]),
            steps: vec![
                RewriteStep::BraidRelation { site: 1, i: 2, j: 1, n: 2, reversed: false },
                RewriteStep::FreeCancel { site: 3 },
                RewriteStep::M1Conjugate { conjugator: w(3, &[-1]) },
                RewriteStep::M2Destabilize,
            ],
            end: w(2, &[-1, 1, 1]),
        };
        let text = cert.to_text();
        let parsed = Certificate::from_text(&text).unwrap();
        assert_eq!(parsed, cert);
    }
}
