//! Seeded randomness.
//!
//! Every random experiment draws from a ChaCha8 stream keyed by the run seed.
//! Trial `i` uses stream number `i`, so per-trial results do not depend on
//! how trials are scheduled across threads.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type TrialRng = ChaCha8Rng;

/// Generator for trial `index` of the run seeded with `seed`.
pub fn substream(seed: u64, index: u64) -> TrialRng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}
