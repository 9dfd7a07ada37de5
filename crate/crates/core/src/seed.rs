//! Seed handling.
//!
//! Every random quantity in the crate is a pure function of an [`RngSeed`].
//! Independent sub-streams (per replicate, per grid cell) are obtained with
//! [`RngSeed::derive`], which mixes the parent seed with a stream index so
//! results do not depend on the order in which jobs are scheduled.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

/// The generator used throughout. ChaCha output is specified by the algorithm,
/// so a seed reproduces the same stream on every platform and crate release.
pub type Rng = ChaCha8Rng;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RngSeed(pub u64);

impl RngSeed {
    pub const fn new(seed: u64) -> Self {
        RngSeed(seed)
    }

    pub fn rng(self) -> Rng {
        Rng::seed_from_u64(self.0)
    }

    /// Child seed for sub-stream `stream`.
    pub fn derive(self, stream: u64) -> RngSeed {
        RngSeed(splitmix64(
            self.0 ^ splitmix64(stream.wrapping_add(0x9e37_79b9_7f4a_7c15)),
        ))
    }

    /// Child seed addressed by a path of indices, e.g. `[cell, replication]`.
    pub fn derive_path(self, path: &[u64]) -> RngSeed {
        path.iter().fold(self, |seed, &i| seed.derive(i))
    }
}

impl From<u64> for RngSeed {
    fn from(seed: u64) -> Self {
        RngSeed(seed)
    }
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}
