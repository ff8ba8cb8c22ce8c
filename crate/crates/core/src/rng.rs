//! Reproducible random streams.
//!
//! All Monte Carlo work keys off `(seed, stream_id)`: ChaCha8 gives each
//! stream id its own non-overlapping counter sequence, so parallel batches
//! can draw from disjoint streams and any batch can be regenerated bit-for-bit
//! on any platform.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// The stream family used by every sampler in this crate.
pub type StreamRng = ChaCha8Rng;

/// Build the RNG for a given `(seed, stream_id)` pair.
pub fn stream_rng(seed: u64, stream_id: u64) -> StreamRng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream_id);
    rng
}
