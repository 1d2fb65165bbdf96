//! Deterministic RNG substream derivation.
//!
//! Every random draw in the artifact comes from a ChaCha8 stream addressed by
//! `(master seed, domain, key, stream)`. The map is pure, so parallel and
//! serial runs consume identical randomness per logical unit of work.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const DOMAIN_SIM: u64 = 0x01;
pub const DOMAIN_NOISE: u64 = 0x02;
pub const DOMAIN_CHAIN: u64 = 0x03;
pub const DOMAIN_TEST: u64 = 0x7f;

fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9e3779b97f4a7c15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
    z ^ (z >> 31)
}

/// ChaCha8 generator for the addressed substream.
pub fn stream_rng(seed: u64, domain: u64, key: u64, stream: u64) -> ChaCha8Rng {
    let mut state = seed ^ domain.rotate_left(17) ^ key.rotate_left(41);
    let mut bytes = [0u8; 32];
    for chunk in bytes.chunks_exact_mut(8) {
        chunk.copy_from_slice(&splitmix64(&mut state).to_le_bytes());
    }
    let mut rng = ChaCha8Rng::from_seed(bytes);
    rng.set_stream(stream);
    rng
}
