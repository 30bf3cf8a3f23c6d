//! Exact verification and search toolkit for Barker sequences.
//!
//! A Barker sequence is a ±1 sequence whose aperiodic autocorrelation
//! `c_k = Σ a_j a_{j+k}` stays within ±1 at every positive lag. Only nine are
//! known (up to symmetry), the longest of length 13, and no odd length above
//! 13 admits one. This crate makes that circle of facts executable:
//!
//! * [`seq`] — sequences, autocorrelation, the unconditional parity/fold
//!   identities, and the structure identities of odd-length Barker sequences.
//! * [`poly`] — integer polynomials, the correlation polynomial `p·p*`, and
//!   its skew-symmetry factorization.
//! * [`newton`] — Newton power sums over exact big integers and the `−2 / −1`
//!   patterns the Barker property forces on them.
//! * [`cert`] — machine-checkable nonexistence certificates for every odd
//!   length above 13, via a five-case analysis of the leading run, plus a
//!   from-scratch verifier.
//! * [`search`] — bit-packed exhaustive search and a skew-pruned
//!   depth-first search with deterministic parallel sharding.
//! * [`manifest`] — reproducibility sidecars with SHA-256 digests.
//! * [`cli`] — the `barker` binary's command front end.
//!
//! The `examples/` directory exercises each capability end to end; start with
//! `cargo run --example barker_census`.

// Parity tests and index bounds are written to mirror the derivations
// (`n % 2 == 1`, `mu + p + 1 <= 2m - 2`) rather than clippy's preferred forms.
#![allow(clippy::manual_is_multiple_of, clippy::int_plus_one)]

pub mod cert;
pub mod cli;
pub mod manifest;
pub mod newton;
pub mod poly;
pub mod search;
pub mod seq;

pub use cert::{nonexistence_certificate, verify_certificate, NonexistenceCertificate};
pub use poly::{autocorrelation_polynomial, IntPolynomial};
pub use search::{exhaustive_search, pruned_search, SearchOptions};
pub use seq::{AutocorrProfile, LittlewoodSeq};
