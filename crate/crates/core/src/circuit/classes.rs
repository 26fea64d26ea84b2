//! Canonical circuit families and classification via the invariant `C`.

use super::{gcd, invariant_c, CircuitError, GateSequence};
use serde::{Deserialize, Serialize};

/// One of the `N-1` spectral equivalence classes of simple circuits on `n`
/// sites. `q` divides `n` and is the translation step of one layer, `r` is the
/// offset between successive layers (coprime with `q`), and `p` is the class
/// invariant `C`, which is also the length of the reversed staircase in the
/// equivalent double-staircase form `F_p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CanonicalClass {
    pub n: usize,
    pub q: u32,
    pub r: u32,
    pub p: u32,
}

impl CanonicalClass {
    /// Generalized staircase classes have `q = N`; everything else is a
    /// generalized brick-wall.
    pub fn is_staircase(&self) -> bool {
        self.q as usize == self.n
    }
}

fn qr_allowed(n: usize, q: u32, r: u32) -> bool {
    let q = q as usize;
    q >= 2 && q <= n && n % q == 0 && r >= 1 && (r as usize) < q && gcd(q as u64, r as u64) == 1
}

/// The set `Q_N` of allowed `(q, r)` pairs: `q >= 2` dividing `N`, and
/// `1 <= r < q` coprime with `q`. Contains exactly `N - 1` pairs. Sorted by
/// `(q, r)`.
pub fn allowed_qr(n: usize) -> Vec<(u32, u32)> {
    let mut out = Vec::with_capacity(n.saturating_sub(1));
    for q in 2..=n {
        if n % q != 0 {
            continue;
        }
        for r in 1..q {
            if gcd(q as u64, r as u64) == 1 {
                out.push((q as u32, r as u32));
            }
        }
    }
    out
}

/// The canonical generalized S/BW circuit `F_{q,r}`: `q` layers of `N/q`
/// gates, layer `j` holding gates `1 + j*r + i*q (mod N)` for
/// `i = 0..N/q - 1`, applied layer by layer.
pub fn canonical_fqr(n: usize, q: u32, r: u32) -> Result<GateSequence, CircuitError> {
    if !qr_allowed(n, q, r) {
        return Err(CircuitError::InvalidClassParameters { n, q, r });
    }
    let (q, r) = (q as usize, r as usize);
    let per_layer = n / q;
    let mut order = Vec::with_capacity(n);
    for j in 0..q {
        for i in 0..per_layer {
            order.push((((j * r + i * q) % n) + 1) as u32);
        }
    }
    debug_assert!(GateSequence::new(order.clone()).is_ok());
    Ok(GateSequence::from_order_unchecked(order))
}

/// The canonical double staircase `F_p`: an ascending staircase of length
/// `N - p` followed by a descending one of length `p`,
/// `(1, 2, ..., N-p, N, N-1, ..., N-p+1)`.
pub fn canonical_fp(n: usize, p: u32) -> Result<GateSequence, CircuitError> {
    if p < 1 || p as usize > n - 1 {
        return Err(CircuitError::InvalidP { n, p });
    }
    let p = p as usize;
    let mut order: Vec<u32> = (1..=(n - p) as u32).collect();
    order.extend(((n - p + 1) as u32..=n as u32).rev());
    debug_assert!(GateSequence::new(order.clone()).is_ok());
    Ok(GateSequence::from_order_unchecked(order))
}

/// Invariant `C` of the canonical circuit `F_{q,r}`.
///
/// Injective over `Q_N`: staircase classes (`q = N`) take the values coprime
/// with `N`, brick-wall classes with a given `q` take the multiples
/// `(N/q)*p` with `gcd(p, q) = 1`.
pub fn c_of_class(n: usize, q: u32, r: u32) -> Result<u32, CircuitError> {
    Ok(invariant_c(&canonical_fqr(n, q, r)?))
}

/// Finds the unique class with the same invariant `C` as `seq`.
pub fn classify(seq: &GateSequence) -> Result<CanonicalClass, CircuitError> {
    let n = seq.n_sites();
    let c = invariant_c(seq);
    for (q, r) in allowed_qr(n) {
        if c_of_class(n, q, r)? == c {
            return Ok(CanonicalClass { n, q, r, p: c });
        }
    }
    Err(CircuitError::InternalInvariantViolation { n, c })
}
