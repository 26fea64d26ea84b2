//! Constructive reduction of any sequence to its double-staircase form `F_p`.

use super::moves::{gates_commute, EquivalenceMove};
use super::GateSequence;

/// Recorder for the working sequence plus the move trace.
struct Tape {
    n: usize,
    order: Vec<u32>,
    moves: Vec<EquivalenceMove>,
}

impl Tape {
    fn rotate(&mut self) {
        self.order.rotate_left(1);
        self.moves.push(EquivalenceMove::CyclicRotate);
    }

    /// Swaps 0-based positions `pos` and `pos + 1`.
    fn swap(&mut self, pos: usize) {
        debug_assert!(gates_commute(self.order[pos], self.order[pos + 1], self.n));
        self.order.swap(pos, pos + 1);
        self.moves.push(EquivalenceMove::SwapAdjacentTimes(pos + 1));
    }

    fn position_of(&self, gate: u32) -> usize {
        self.order.iter().position(|&g| g == gate).unwrap()
    }

    /// Moves the contiguous block at `[start, start + len)` one position to
    /// the left by commuting the gate in front of it through the block.
    fn slide_block_left(&mut self, start: usize, len: usize) {
        for j in 0..len {
            self.swap(start - 1 + j);
        }
    }
}

/// Rewrites `seq` into the canonical double staircase `F_p` and returns `p`
/// together with the move trace; replaying the trace on `seq` reproduces
/// `canonical_fp(N, p)` exactly.
///
/// The procedure grows the ascending prefix `(1, 2, ..., k)` one gate at a
/// time. To place gate `k+1` it walks a descending block `(m, ..., k+1)`
/// backwards in time: whenever gate `m+1` sits before the block, the block is
/// slid next to it and absorbs it; once `m+1` sits behind the block, the block
/// is slid up to the prefix and all gates above `k+1` are rotated to the end
/// of the period. If the block swallows gate `N` the sequence is already
/// `F_{N-k}` and the reduction stops.
pub fn reduce_to_fp(seq: &GateSequence) -> (u32, Vec<EquivalenceMove>) {
    let n = seq.n_sites();
    let mut tape = Tape { n, order: seq.order().to_vec(), moves: Vec::new() };

    // Bring gate 1 to the front by rotations.
    let first = tape.position_of(1);
    for _ in 0..first {
        tape.rotate();
    }

    let mut k = 1usize;
    while k < n {
        // Block of gates (m, m-1, ..., k+1), initially just gate k+1.
        let mut start = tape.position_of(k as u32 + 1);
        let mut len = 1usize;
        let mut m = k + 1;

        let p = loop {
            if m == n {
                // Block is (N, ..., k+1) and fills the whole tail: the
                // sequence is F_{N-k}.
                debug_assert_eq!(start, k);
                debug_assert_eq!(len, n - k);
                break Some((n - k) as u32);
            }
            let next = tape.position_of(m as u32 + 1);
            if next > start {
                // Gate m+1 comes later: slide the block up to the prefix.
                while start > k {
                    tape.slide_block_left(start, len);
                    start -= 1;
                }
                // Rotate the gates above k+1 (they commute with the whole
                // prefix) to the end of the period, one at a time.
                for _ in 0..len - 1 {
                    for pos in (0..k).rev() {
                        tape.swap(pos);
                    }
                    tape.rotate();
                }
                break None;
            }
            // Gate m+1 comes earlier: slide the block next to it and absorb.
            while start > next + 1 {
                tape.slide_block_left(start, len);
                start -= 1;
            }
            start -= 1;
            len += 1;
            m += 1;
        };

        match p {
            Some(p) => {
                debug_assert_eq!(tape.order, super::canonical_fp(n, p).unwrap().order());
                return (p, tape.moves);
            }
            None => k += 1,
        }
    }
    // Full ascending staircase (1, 2, ..., N) = F_1.
    debug_assert_eq!(tape.order, super::canonical_fp(n, 1).unwrap().order());
    (1, tape.moves)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::{apply_move, canonical_fp, canonical_fqr, invariant_c};
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn replay(seq: &GateSequence, moves: &[EquivalenceMove]) -> GateSequence {
        let mut cur = seq.clone();
        for &mv in moves {
            cur = apply_move(&cur, mv).expect("recorded move must be legal");
        }
        cur
    }

    #[test]
    fn already_canonical_inputs_stay_put() {
        let seq = canonical_fp(6, 3).unwrap();
        let (p, moves) = reduce_to_fp(&seq);
        assert_eq!(p, 3);
        assert_eq!(replay(&seq, &moves), seq);
    }

    #[test]
    fn full_reverse_staircase_is_f_n_minus_1() {
        let seq = GateSequence::new(vec![1, 6, 5, 4, 3, 2]).unwrap();
        let (p, moves) = reduce_to_fp(&seq);
        assert_eq!(p, 5);
        assert_eq!(replay(&seq, &moves), canonical_fp(6, 5).unwrap());
    }

    #[test]
    fn reduces_canonical_fqr_representatives() {
        for n in [4usize, 6, 8, 10] {
            for (q, r) in crate::circuit::allowed_qr(n) {
                let seq = canonical_fqr(n, q, r).unwrap();
                let (p, moves) = reduce_to_fp(&seq);
                assert_eq!(p, invariant_c(&seq));
                assert_eq!(replay(&seq, &moves), canonical_fp(n, p).unwrap());
            }
        }
    }

    #[test]
    fn random_sequences_replay_to_fp() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for n in 2..=10usize {
            for _ in 0..200 {
                let mut order: Vec<u32> = (1..=n as u32).collect();
                order.shuffle(&mut rng);
                let seq = GateSequence::new(order).unwrap();
                let (p, moves) = reduce_to_fp(&seq);
                assert_eq!(p, invariant_c(&seq), "p must equal C for {seq}");
                assert_eq!(
                    replay(&seq, &moves),
                    canonical_fp(n, p).unwrap(),
                    "replay mismatch for {seq}"
                );
            }
        }
    }
}
