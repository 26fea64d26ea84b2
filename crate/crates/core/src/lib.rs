//! Classification of translationally invariant same-gate Floquet circuits on
//! periodic chains, their space-time symmetries, and the resulting
//! level-spacing statistics.
//!
//! The crate is split into three layers:
//!
//! - [`circuit`] — pure combinatorics of gate sequences: equivalence moves,
//!   the conserved invariant `C`, the canonical families `F_{q,r}` and `F_p`,
//!   classification, reduction with move traces, a brute-force class oracle,
//!   and layer compression.
//! - [`engine`] — dense unitaries: Haar gates, Floquet and root operators,
//!   translation operators, momentum-sector bases, operator-identity checks,
//!   and eigenphase extraction.
//! - [`stats`] — level-spacing statistics: normalized spacings, reference
//!   densities (CUE Wigner surmise, Poisson, direct-sum superpositions),
//!   Kolmogorov–Smirnov distances, and Monte Carlo spectra of powers of Haar
//!   unitaries.

pub mod circuit;
pub mod engine;
pub mod seeding;
pub mod stats;

pub use circuit::{invariant_c, CircuitError, GateSequence};
