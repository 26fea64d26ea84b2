//! The two spectrum-preserving rewrite moves on gate sequences.

use super::{CircuitError, GateSequence};
use serde::{Deserialize, Serialize};

/// An elementary equivalence move.
///
/// `SwapAdjacentTimes(l)` exchanges the gates at time steps `l` and `l + 1`
/// (1-based); it is legal only when the two gates act on disjoint site pairs,
/// i.e. their numbers differ by more than 1 mod `N`, in which case the Floquet
/// operator is unchanged. `CyclicRotate` moves the earliest gate to the end of
/// the period, which conjugates the Floquet operator and preserves its
/// spectrum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum EquivalenceMove {
    SwapAdjacentTimes(usize),
    CyclicRotate,
}

/// Whether gates `a` and `b` act on disjoint site pairs (distance > 1 mod N).
pub(crate) fn gates_commute(a: u32, b: u32, n: usize) -> bool {
    let diff = (a as usize + n - b as usize) % n;
    diff != 0 && diff != 1 && diff != n - 1
}

/// Applies one move, returning the rewritten sequence. The invariant `C` is
/// unchanged by construction.
pub fn apply_move(seq: &GateSequence, mv: EquivalenceMove) -> Result<GateSequence, CircuitError> {
    let n = seq.n_sites();
    let mut order = seq.order().to_vec();
    match mv {
        EquivalenceMove::CyclicRotate => {
            order.rotate_left(1);
        }
        EquivalenceMove::SwapAdjacentTimes(l) => {
            if l < 1 || l >= n {
                return Err(CircuitError::BadMoveIndex { index: l, n });
            }
            let (a, b) = (order[l - 1], order[l]);
            if !gates_commute(a, b, n) {
                return Err(CircuitError::IllegalSwap { left: a, right: b });
            }
            order.swap(l - 1, l);
        }
    }
    Ok(GateSequence::from_order_unchecked(order))
}
