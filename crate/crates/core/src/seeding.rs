//! Counter-based derivation of per-sample RNG seeds.

/// SplitMix64 finalizer; bijective on `u64`.
fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Derives the RNG seed for sample `index` from a master seed.
///
/// A pure function of `(master, index)`, so parallel and serial sweeps see
/// identical streams regardless of scheduling.
pub fn split_seed(master: u64, index: u64) -> u64 {
    splitmix64(master ^ splitmix64(index.wrapping_add(1)))
}
