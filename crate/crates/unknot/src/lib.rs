//! Unknotting toric braids with certified crossing changes.
//!
//! The library computes, for the toric braid B(p,q) = (σ₁σ₂…σ_{p−1})^q,
//! a minimal set of crossing positions whose sign flips turn the closure
//! into the gcd(p,q)-component unlink, and then proves it did:
//!
//! - [`toric::u_crossing_data`] — the direct position set read off the
//!   q-factor representation, and [`toric::minimal_ucd`] — the Euclid-style
//!   recursion producing minimal unknotting crossing data with provenance.
//! - [`word_problem`] — exact braid word-problem decisions (handle
//!   reduction) and replayable rewrite certificates.
//! - [`invariants`] — exact Alexander (reduced Burau) and Jones (Kauffman
//!   bracket) polynomials of closures, combined into a triviality verdict.
//! - [`toric::certify_unknot`] / [`toric::verify_plan`] — Markov-equivalence
//!   certificates down to the empty word on gcd(p,q) strands, plus the
//!   end-to-end verification pipeline.
//! - [`render`] — deterministic SVG diagrams of braid words with highlighted
//!   crossing data.
//!
//! Run the examples for a tour: `cargo run --example compute_ucd`, or use the
//! `unknot` binary (`unknot ucd 7 4 --minimal`).

pub mod braid;
pub mod config;
pub mod invariants;
pub mod laurent;
pub mod render;
pub mod toric;
pub mod word_problem;

pub use braid::{BraidError, BraidWord, CrossingPosition, Letter, Permutation};
pub use config::RunConfig;
pub use laurent::LaurentPolynomial;
