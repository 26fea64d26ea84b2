//! Exhaustive class oracle: closes all N! sequences under the legal moves.

use super::moves::gates_commute;
use super::{CircuitError, GateSequence, BRUTEFORCE_MAX_SITES};
use std::collections::VecDeque;

/// Lehmer rank of a permutation of `1..=n` (lexicographic index in `0..n!`).
fn rank(order: &[u32]) -> usize {
    let n = order.len();
    let mut rank = 0usize;
    let mut factorial = 1usize;
    for i in (0..n).rev() {
        let smaller = order[i + 1..].iter().filter(|&&g| g < order[i]).count();
        rank += smaller * factorial;
        factorial *= n - i;
    }
    rank
}

fn unrank(mut index: usize, n: usize) -> Vec<u32> {
    let mut pool: Vec<u32> = (1..=n as u32).collect();
    let mut factorials = vec![1usize; n];
    for i in 1..n {
        factorials[i] = factorials[i - 1] * i;
    }
    let mut order = Vec::with_capacity(n);
    for i in (0..n).rev() {
        let digit = index / factorials[i];
        index %= factorials[i];
        order.push(pool.remove(digit));
    }
    order
}

/// Partitions all `N!` gate sequences into equivalence classes by
/// breadth-first closure under legal swaps and cyclic rotation.
///
/// Classes are returned in order of their lexicographically smallest member,
/// with members sorted lexicographically, so the partition is deterministic.
/// Capped at `N = 8` (40320 sequences).
pub fn equivalence_classes_bruteforce(n: usize) -> Result<Vec<Vec<GateSequence>>, CircuitError> {
    if n < 2 {
        return Err(CircuitError::TooFewSites(n));
    }
    if n > BRUTEFORCE_MAX_SITES {
        return Err(CircuitError::TooLarge { n, max: BRUTEFORCE_MAX_SITES });
    }
    let total: usize = (1..=n).product();
    let mut class_of: Vec<usize> = vec![usize::MAX; total];
    let mut classes: Vec<Vec<usize>> = Vec::new();

    for start in 0..total {
        if class_of[start] != usize::MAX {
            continue;
        }
        let id = classes.len();
        let mut members = Vec::new();
        let mut queue = VecDeque::from([start]);
        class_of[start] = id;
        while let Some(cur) = queue.pop_front() {
            members.push(cur);
            let order = unrank(cur, n);
            let mut visit = |next: &[u32]| {
                let idx = rank(next);
                if class_of[idx] == usize::MAX {
                    class_of[idx] = id;
                    queue.push_back(idx);
                }
            };
            let mut rotated = order.clone();
            rotated.rotate_left(1);
            visit(&rotated);
            for l in 0..n - 1 {
                if gates_commute(order[l], order[l + 1], n) {
                    let mut swapped = order.clone();
                    swapped.swap(l, l + 1);
                    visit(&swapped);
                }
            }
        }
        members.sort_unstable();
        classes.push(members);
    }

    Ok(classes
        .into_iter()
        .map(|members| {
            members
                .into_iter()
                .map(|idx| GateSequence::from_order_unchecked(unrank(idx, n)))
                .collect()
        })
        .collect())
}
