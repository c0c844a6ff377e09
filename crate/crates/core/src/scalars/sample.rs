use alloc::vec::Vec;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use super::{Field, ScalarError};

/// PRNG identifier recorded in reports: ChaCha8 seeded through
/// `seed_from_u64`, with per-trial streams derived by [`derive_seed`].
pub const RNG_ALGORITHM: &str = "chacha8rng/seed_from_u64; trial streams via splitmix64";

/// Derives an independent stream seed from a base seed and stream index.
/// This is one SplitMix64 step applied to `base ^ golden·(stream+1)`.
pub fn derive_seed(base: u64, stream: u64) -> u64 {
    let mut z = base ^ stream.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Seeded source of field elements. Single-owner: give each task its own.
pub struct Sampler<'f, F: Field> {
    field: &'f F,
    rng: ChaCha8Rng,
    budget: usize,
}

impl<'f, F: Field> Sampler<'f, F> {
    pub fn new(field: &'f F, seed: u64) -> Self {
        Sampler { field, rng: ChaCha8Rng::seed_from_u64(seed), budget: 10_000 }
    }

    pub fn field(&self) -> &'f F {
        self.field
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn sample(&mut self) -> F::Elem {
        self.field.random(&mut self.rng)
    }

    pub fn sample_nonzero(&mut self) -> Result<F::Elem, ScalarError> {
        for _ in 0..self.budget {
            let x = self.sample();
            if !self.field.is_zero(&x) {
                return Ok(x);
            }
        }
        Err(ScalarError::BudgetExhausted(self.budget))
    }

    /// `n` pairwise-distinct elements, none of them in `forbidden`.
    pub fn sample_distinct(
        &mut self,
        n: usize,
        forbidden: &[F::Elem],
    ) -> Result<Vec<F::Elem>, ScalarError> {
        if let Some(size) = self.field.sample_space() {
            let needed = n as u64 + forbidden.len() as u64;
            if size <= needed {
                return Err(ScalarError::FieldTooSmall { needed, available: size });
            }
        }
        let mut out: Vec<F::Elem> = Vec::with_capacity(n);
        let mut draws = 0;
        while out.len() < n {
            if draws == self.budget {
                return Err(ScalarError::BudgetExhausted(self.budget));
            }
            draws += 1;
            let x = self.sample();
            if !forbidden.contains(&x) && !out.contains(&x) {
                out.push(x);
            }
        }
        Ok(out)
    }

    /// Raw 64-bit draw, for callers that need integer randomness.
    pub fn next_u64(&mut self) -> u64 {
        self.rng.next_u64()
    }
}
