//! Combinatorics of simple circuits on a periodic chain.
//!
//! A *simple circuit* applies one fixed two-site gate once on every
//! nearest-neighbor pair of an `N`-site ring, in some time order. The order is
//! encoded as a permutation of the gate numbers `1..=N`, where gate `i` acts
//! on sites `(i, i+1 mod N)`. This module handles everything that does not
//! touch a Hilbert space: the equivalence moves (commuting non-overlapping
//! gates in time, cyclically rotating the period), the conserved invariant
//! `C`, the two canonical families `F_{q,r}` and `F_p`, classification,
//! reduction to canonical form with an explicit move trace, a brute-force
//! class oracle, and time compression into commuting layers.

mod bruteforce;
mod classes;
mod compress;
mod moves;
mod reduce;

pub use bruteforce::equivalence_classes_bruteforce;
pub use classes::{allowed_qr, c_of_class, canonical_fp, canonical_fqr, classify, CanonicalClass};
pub use compress::{compress, stable_filling, CompressionReport, Fraction};
pub use moves::{apply_move, EquivalenceMove};
pub use reduce::reduce_to_fp;

use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

/// Largest chain size accepted by the brute-force class oracle.
pub const BRUTEFORCE_MAX_SITES: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CircuitError {
    #[error("gate {0} appears more than once")]
    DuplicateGate(u32),
    #[error("gate {0} is missing from the sequence")]
    MissingGate(u32),
    #[error("gate number {0} is outside 1..=N")]
    OutOfRange(i64),
    #[error("a circuit needs at least 2 sites, got {0}")]
    TooFewSites(usize),
    #[error("cannot parse `{0}` as a gate sequence")]
    Malformed(String),
    #[error("(q, r) = ({q}, {r}) is not an allowed class for N = {n}")]
    InvalidClassParameters { n: usize, q: u32, r: u32 },
    #[error("p = {p} is outside 1..=N-1 for N = {n}")]
    InvalidP { n: usize, p: u32 },
    #[error("gates {left} and {right} act on overlapping sites and cannot be swapped")]
    IllegalSwap { left: u32, right: u32 },
    #[error("swap index {index} is outside 1..=N-1 for N = {n}")]
    BadMoveIndex { index: usize, n: usize },
    #[error("brute-force enumeration is capped at N = {max}, got {n}")]
    TooLarge { n: usize, max: usize },
    #[error("no canonical class matches invariant C = {c} at N = {n}; this is a bug")]
    InternalInvariantViolation { n: usize, c: u32 },
}

/// A simple circuit: the time order in which the `N` nearest-neighbor gates
/// of an `N`-site ring are applied. `order[l]` is the gate applied at time
/// step `l`; the earliest gate is `order[0]`.
///
/// Invariant: `order` is a permutation of `1..=N` with `N >= 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GateSequence {
    n_sites: usize,
    order: Vec<u32>,
}

impl GateSequence {
    /// Validates `order` as a permutation of `1..=n_sites`.
    pub fn with_sites(order: Vec<u32>, n_sites: usize) -> Result<Self, CircuitError> {
        if n_sites < 2 {
            return Err(CircuitError::TooFewSites(n_sites));
        }
        let mut seen = vec![false; n_sites + 1];
        for &g in &order {
            if g == 0 || g as usize > n_sites {
                return Err(CircuitError::OutOfRange(g as i64));
            }
            if seen[g as usize] {
                return Err(CircuitError::DuplicateGate(g));
            }
            seen[g as usize] = true;
        }
        if let Some(missing) = (1..=n_sites).find(|&g| !seen[g]) {
            return Err(CircuitError::MissingGate(missing as u32));
        }
        Ok(Self { n_sites, order })
    }

    /// Validates `order` as a permutation of `1..=order.len()`.
    pub fn new(order: Vec<u32>) -> Result<Self, CircuitError> {
        let n = order.len();
        Self::with_sites(order, n)
    }

    pub fn n_sites(&self) -> usize {
        self.n_sites
    }

    /// Gate numbers in time order (earliest first).
    pub fn order(&self) -> &[u32] {
        &self.order
    }

    /// Position (0-based time index) of each gate: `positions()[g-1]` is the
    /// time at which gate `g` is applied.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0usize; self.n_sites];
        for (l, &g) in self.order.iter().enumerate() {
            pos[g as usize - 1] = l;
        }
        pos
    }

    pub(crate) fn from_order_unchecked(order: Vec<u32>) -> Self {
        debug_assert!(Self::new(order.clone()).is_ok());
        Self { n_sites: order.len(), order }
    }
}

/// Number of gates counted by the invariant `C`: gates whose right spatial
/// neighbor (gate `i+1`, cyclically) is applied at an earlier time.
///
/// `C` is conserved by both equivalence moves and equals `p` on the canonical
/// double staircase `F_p`, so it labels the `N-1` equivalence classes. Runs in
/// linear time.
pub fn invariant_c(seq: &GateSequence) -> u32 {
    let n = seq.n_sites();
    let pos = seq.positions();
    let mut count = 0;
    for g in 1..=n {
        let right = g % n + 1;
        if pos[right - 1] < pos[g - 1] {
            count += 1;
        }
    }
    count
}

impl fmt::Display for GateSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, g) in self.order.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

impl FromStr for GateSequence {
    type Err = CircuitError;

    /// Parses the comma-separated form, e.g. `"1,4,3,6,5,2"`.
    fn from_str(s: &str) -> Result<Self, CircuitError> {
        let mut order = Vec::new();
        for tok in s.split(',') {
            let tok = tok.trim();
            let v: i64 = tok
                .parse()
                .map_err(|_| CircuitError::Malformed(tok.to_string()))?;
            if v < 1 || v > u32::MAX as i64 {
                return Err(CircuitError::OutOfRange(v));
            }
            order.push(v as u32);
        }
        Self::new(order)
    }
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validates_permutations() {
        assert!(GateSequence::with_sites(vec![1, 2, 3], 3).is_ok());
        assert!(GateSequence::with_sites(vec![1, 4, 3, 6, 5, 2], 6).is_ok());
        assert_eq!(
            GateSequence::with_sites(vec![1, 1, 2], 3),
            Err(CircuitError::DuplicateGate(1))
        );
        assert_eq!(
            GateSequence::with_sites(vec![1, 2], 3),
            Err(CircuitError::MissingGate(3))
        );
        assert_eq!(
            GateSequence::with_sites(vec![1, 2, 4], 3),
            Err(CircuitError::OutOfRange(4))
        );
        assert_eq!(
            GateSequence::with_sites(vec![0, 1], 2),
            Err(CircuitError::OutOfRange(0))
        );
        assert_eq!(
            GateSequence::with_sites(vec![1], 1),
            Err(CircuitError::TooFewSites(1))
        );
    }

    #[test]
    fn invariant_counts_predecessor_right_neighbors() {
        let staircase = GateSequence::new((1..=7).collect()).unwrap();
        assert_eq!(invariant_c(&staircase), 1);
        let seq = GateSequence::new(vec![1, 3, 2, 4]).unwrap();
        assert_eq!(invariant_c(&seq), 2);
    }

    #[test]
    fn roundtrips_comma_separated_form() {
        let seq: GateSequence = "1,4,3,6,5,2".parse().unwrap();
        assert_eq!(seq.order(), &[1, 4, 3, 6, 5, 2]);
        assert_eq!(seq.to_string(), "1,4,3,6,5,2");
        assert!(matches!(
            "1,x,3".parse::<GateSequence>(),
            Err(CircuitError::Malformed(_))
        ));
        assert!(matches!(
            "1,1,2".parse::<GateSequence>(),
            Err(CircuitError::DuplicateGate(1))
        ));
    }
}
