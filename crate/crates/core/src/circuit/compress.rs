//! Time compression of repeated circuits into layers of commuting gates.

use super::{gcd, GateSequence};
use serde::{Deserialize, Serialize};
use std::fmt;

/// A reduced non-negative fraction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Fraction {
    pub num: u64,
    pub den: u64,
}

impl Fraction {
    pub fn new(num: u64, den: u64) -> Self {
        assert!(den != 0);
        let g = gcd(num, den).max(1);
        Self { num: num / g, den: den / g }
    }

    pub fn value(&self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// Result of packing `t` periods of a circuit into commuting layers.
///
/// Each layer is a set of gates on pairwise disjoint site pairs, listed in
/// placement order; playing the layers back in order is related to the
/// original gate stream only by legal commutations. The filling fraction is
/// `2 t N / (N * layers)`: the share of site-slots that are covered by a gate.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CompressionReport {
    pub layers: Vec<Vec<u32>>,
    pub periods_used: usize,
    pub filling: Fraction,
}

/// Greedy earliest-fit layering of `t` periods of `seq`.
///
/// Gates are taken in time order; each goes into the layer right after the
/// last earlier layer holding a gate that shares one of its sites (two gates
/// conflict when their numbers differ by at most 1 mod `N`, or are equal).
pub fn compress(seq: &GateSequence, t: usize) -> CompressionReport {
    assert!(t >= 1, "need at least one period");
    let n = seq.n_sites();
    let mut layers: Vec<Vec<u32>> = Vec::new();
    // Last layer (1-based; 0 = none) that touched each site.
    let mut site_layer = vec![0usize; n];
    for _ in 0..t {
        for &g in seq.order() {
            let left = g as usize - 1;
            let right = g as usize % n;
            let layer = site_layer[left].max(site_layer[right]) + 1;
            if layer > layers.len() {
                layers.push(Vec::new());
            }
            layers[layer - 1].push(g);
            site_layer[left] = layer;
            site_layer[right] = layer;
        }
    }
    let filling = Fraction::new(2 * (t * n) as u64, (n * layers.len()) as u64);
    CompressionReport { layers, periods_used: t, filling }
}

/// Filling fraction of the maximally compressed repeated circuit, reported at
/// the smallest period count where it stops changing.
///
/// The layer pattern of `F^t` can alternate with period 2 in `t`, so a value
/// counts as stable once it reappears at `t + 1` or `t + 2`; period counts up
/// to `max_t` are tried.
pub fn stable_filling(seq: &GateSequence, max_t: usize) -> (usize, Fraction) {
    let fillings: Vec<Fraction> = (1..=max_t + 2).map(|t| compress(seq, t).filling).collect();
    for t in 1..=max_t {
        let f = fillings[t - 1];
        if f == fillings[t] || f == fillings[t + 1] {
            return (t, f);
        }
    }
    (max_t, fillings[max_t - 1])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::{canonical_fqr, moves::gates_commute};

    #[test]
    fn brick_wall_fills_completely() {
        for n in [4usize, 6, 10] {
            let seq = canonical_fqr(n, 2, 1).unwrap();
            let report = compress(&seq, 1);
            assert_eq!(report.layers.len(), 2);
            assert_eq!(report.filling, Fraction::new(1, 1));
        }
    }

    #[test]
    fn published_fillings_at_n_10() {
        let f52 = canonical_fqr(10, 5, 2).unwrap();
        let report = compress(&f52, 2);
        assert_eq!(report.layers.len(), 5);
        assert_eq!(report.filling, Fraction::new(8, 10));

        let f51 = canonical_fqr(10, 5, 1).unwrap();
        assert_eq!(compress(&f51, 1).filling, Fraction::new(4, 10));
    }

    #[test]
    fn layers_hold_disjoint_gates_and_preserve_conflict_order() {
        let seq = canonical_fqr(10, 5, 2).unwrap();
        let t = 3;
        let report = compress(&seq, t);
        let n = seq.n_sites();
        for layer in &report.layers {
            for (i, &a) in layer.iter().enumerate() {
                for &b in &layer[i + 1..] {
                    assert!(gates_commute(a, b, n), "{a} and {b} share a site");
                }
            }
        }
        // Conflicting gates must keep their original time order.
        let stream: Vec<u32> = (0..t).flat_map(|_| seq.order().iter().copied()).collect();
        let layered: Vec<(u32, usize)> = report
            .layers
            .iter()
            .enumerate()
            .flat_map(|(l, layer)| layer.iter().map(move |&g| (g, l)))
            .collect();
        // Count per-gate occurrences to map stream entries to layered entries.
        let mut seen = vec![0usize; n];
        let mut layer_of_stream = Vec::new();
        for &g in &stream {
            let occurrence = seen[g as usize - 1];
            seen[g as usize - 1] += 1;
            let (_, l) = layered
                .iter()
                .filter(|&&(h, _)| h == g)
                .nth(occurrence)
                .copied()
                .unwrap();
            layer_of_stream.push(l);
        }
        for i in 0..stream.len() {
            for j in i + 1..stream.len() {
                if !gates_commute(stream[i], stream[j], n) {
                    assert!(layer_of_stream[i] < layer_of_stream[j]);
                }
            }
        }
    }

    #[test]
    fn stable_filling_matches_published_values() {
        let f52 = canonical_fqr(10, 5, 2).unwrap();
        assert_eq!(stable_filling(&f52, 10), (2, Fraction::new(4, 5)));
        let f51 = canonical_fqr(10, 5, 1).unwrap();
        assert_eq!(stable_filling(&f51, 10), (1, Fraction::new(2, 5)));
        let bw = canonical_fqr(6, 2, 1).unwrap();
        assert_eq!(stable_filling(&bw, 4), (1, Fraction::new(1, 1)));
    }
}
