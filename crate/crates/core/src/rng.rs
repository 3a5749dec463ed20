// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! Seeded random streams.
//!
//! Every random source is a PCG32 (64-bit state, 64-bit stream selector).
//! `stream(seed, id)` starts at state `seed` on stream `id`, so distinct
//! ids give independent sequences for the same seed. Stream ids in use:
//!
//! * [`RUN_STREAM`]: the coloring algorithm itself.
//! * [`GRAPH_STREAM`]: graph generation.
//!
//! Derived seeds (benchmark trial `t`, retry attempt `r`) come from
//! [`derive_seed`], a SplitMix64 finalizer over `(seed, index)`.

use rand::SeedableRng;
use rand_pcg::Pcg32;

pub type StreamRng = Pcg32;

pub const RUN_STREAM: u64 = 0;
pub const GRAPH_STREAM: u64 = 1;

pub fn stream(seed: u64, id: u64) -> StreamRng {
    Pcg32::new(seed, id)
}

/// Seed for the `index`-th trial or retry under `seed`. Index 0 is `seed`.
pub fn derive_seed(seed: u64, index: u64) -> u64 {
    if index == 0 {
        return seed;
    }
    let mut z = seed ^ index.wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Convenience for tests and examples.
pub fn seeded(seed: u64) -> StreamRng {
    Pcg32::seed_from_u64(seed)
}
