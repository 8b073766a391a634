//! Seed derivation for reproducible, independently seeded subtasks.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// splitmix64 finalizer; spreads low-entropy inputs over the full word.
fn mix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// A child seed for subtask `idx` of stream `tag` under a master seed.
/// Platform-independent and stable across runs.
pub(crate) fn derive_seed(seed: u64, tag: u64, idx: u64) -> u64 {
    mix(mix(seed ^ mix(tag)) ^ idx)
}

/// A generator for subtask `idx` of stream `tag`.
pub(crate) fn derive_rng(seed: u64, tag: u64, idx: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(derive_seed(seed, tag, idx))
}

/// A reproducible generator for a named stream of a master seed. Front ends
/// derive their ring-modulus and per-command generators through this.
pub fn seeded_rng(seed: u64, label: &str) -> ChaCha8Rng {
    let tag = label
        .bytes()
        .fold(0u64, |acc, b| acc.wrapping_mul(131).wrapping_add(b as u64));
    derive_rng(seed, tag, 0)
}

/// Stream tags; distinct per call site so streams never collide.
pub(crate) mod stream {
    pub const BRUTE_ATTEMPT: u64 = 1;
    pub const LINEAR_FAMILY: u64 = 2;
    pub const DIM_ESTIMATE: u64 = 3;
    pub const MINOR_POINT: u64 = 4;
    pub const COORD_CHANGE: u64 = 7;
    pub const LINE_PROBE: u64 = 8;
    pub const DIM_EXTENSION: u64 = 9;
}
