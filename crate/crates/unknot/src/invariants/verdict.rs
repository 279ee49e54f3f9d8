//! Combined triviality screen: component count, Alexander, Jones, and an
//! optional unknotting certificate.
//!
//! Alexander = 1 alone does not certify unknottedness, so the trivial-unlink
//! status is only reported when the Jones check or a replayed certificate
//! corroborates; everything else that matches degrades to Inconclusive. A
//! single invariant differing from the d-component unlink's value is enough
//! for CertifiedNontrivial.

use crate::braid::BraidWord;
use crate::laurent::LaurentPolynomial;
use crate::word_problem::{Certificate, CertificateKind};

use super::bracket::{jones_of_closure, unlink_jones};
use super::burau::alexander_of_closure;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TrivialityStatus {
    CertifiedTrivialUnlink,
    CertifiedNontrivial,
    Inconclusive,
}

impl std::fmt::Display for TrivialityStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            TrivialityStatus::CertifiedTrivialUnlink => "CertifiedTrivialUnlink",
            TrivialityStatus::CertifiedNontrivial => "CertifiedNontrivial",
            TrivialityStatus::Inconclusive => "Inconclusive",
        };
        write!(f, "{s}")
    }
}

/// Which checks ran and what they produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrivialityEvidence {
    pub expected_components: usize,
    pub component_count: usize,
    pub alexander: Option<LaurentPolynomial>,
    pub alexander_matches_unlink: Option<bool>,
    pub jones: Option<LaurentPolynomial>,
    pub jones_matches_unlink: Option<bool>,
    pub jones_refused: bool,
    pub certificate_valid: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrivialityVerdict {
    pub status: TrivialityStatus,
    pub evidence: TrivialityEvidence,
}

/// Decides whether the closure of `w` is the `d`-component unlink, running the
/// screens in increasing cost order. `certificate`, when given, must be a
/// Markov-equivalence chain from `w` to the empty word on `d` strands; it is
/// replayed, never trusted.
pub fn triviality_verdict(
    w: &BraidWord,
    d: usize,
    crossing_budget: usize,
    certificate: Option<&Certificate>,
) -> TrivialityVerdict {
    let component_count = w.component_count_of_closure();
    let mut evidence = TrivialityEvidence {
        expected_components: d,
        component_count,
        alexander: None,
        alexander_matches_unlink: None,
        jones: None,
        jones_matches_unlink: None,
        jones_refused: false,
        certificate_valid: None,
    };
    if component_count != d {
        return TrivialityVerdict { status: TrivialityStatus::CertifiedNontrivial, evidence };
    }

    let alexander = alexander_of_closure(w);
    let alexander_target =
        if d == 1 { LaurentPolynomial::one() } else { LaurentPolynomial::zero() };
    let alexander_ok = alexander == alexander_target;
    evidence.alexander = Some(alexander);
    evidence.alexander_matches_unlink = Some(alexander_ok);

    let jones_ok = match jones_of_closure(w, crossing_budget) {
        Ok(jones) => {
            let ok = jones == unlink_jones(d);
            evidence.jones = Some(jones);
            evidence.jones_matches_unlink = Some(ok);
            Some(ok)
        }
        Err(_) => {
            evidence.jones_refused = true;
            None
        }
    };

    let cert_ok = certificate.map(|cert| {
        cert.kind == CertificateKind::MarkovEquivalence
            && cert.start == *w
            && cert.end == BraidWord::identity(d)
            && cert.is_valid()
    });
    evidence.certificate_valid = cert_ok;

    let status = if !alexander_ok || jones_ok == Some(false) {
        TrivialityStatus::CertifiedNontrivial
    } else if cert_ok == Some(true) || jones_ok == Some(true) {
        TrivialityStatus::CertifiedTrivialUnlink
    } else {
        TrivialityStatus::Inconclusive
    };
    TrivialityVerdict { status, evidence }
}
