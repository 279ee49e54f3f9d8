//! Exact link-invariant oracles for braid closures: Alexander via reduced
//! Burau, Jones via the Kauffman bracket, and the combined triviality screen.

pub mod bracket;
pub mod burau;
pub mod verdict;

pub use bracket::{jones_of_closure, kauffman_bracket, unlink_jones, CrossingBudgetExceeded};
pub use burau::{alexander_of_closure, reduced_burau_matrix, unreduced_burau_matrix};
pub use verdict::{triviality_verdict, TrivialityEvidence, TrivialityStatus, TrivialityVerdict};
