//! Seeded sampling of admissible evaluation points.
//!
//! Points are drawn from the complex box [-1,1] x [-1,1] per coordinate and
//! rejected until every relevant kernel denominator stays a fixed margin away
//! from its poles: the origin for rational kernels, the whole integer lattice
//! for trigonometric ones (which also covers the odd-integer poles of the
//! diagonal correction scalar).

use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::families::PoleKind;

const MAX_ATTEMPTS: u32 = 100_000;

pub struct Sampler {
    rng: ChaCha8Rng,
    rejected: u64,
}

impl Sampler {
    /// Independent deterministic streams for the same seed.
    pub fn new(seed: u64, stream: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream);
        Sampler { rng, rejected: 0 }
    }

    pub fn rejected(&self) -> u64 {
        self.rejected
    }

    pub fn draw_box(&mut self) -> Complex64 {
        let re = self.rng.gen_range(-1.0..1.0);
        let im = self.rng.gen_range(-1.0..1.0);
        Complex64::new(re, im)
    }

    pub fn draw_index(&mut self, bound: u32) -> u32 {
        self.rng.gen_range(0..bound)
    }

    /// Draws `count` coordinates until `denoms` of the drawn vector all stay
    /// `margin` away from the poles described by `kind`.
    pub fn draw_admissible<D>(
        &mut self,
        count: usize,
        kind: PoleKind,
        margin: f64,
        denoms: D,
    ) -> Result<Vec<Complex64>>
    where
        D: Fn(&[Complex64]) -> Vec<Complex64>,
    {
        for _ in 0..MAX_ATTEMPTS {
            let vals: Vec<Complex64> = (0..count).map(|_| self.draw_box()).collect();
            let ok = denoms(&vals)
                .into_iter()
                .all(|d| pole_distance(d, kind) >= margin);
            if ok {
                return Ok(vals);
            }
            self.rejected += 1;
        }
        Err(Error::SamplingExhausted {
            attempts: MAX_ATTEMPTS,
            margin,
        })
    }
}

/// Distance from z to the nearest pole of the kernel class.
pub fn pole_distance(z: Complex64, kind: PoleKind) -> f64 {
    match kind {
        PoleKind::Origin => z.norm(),
        PoleKind::Integers => {
            let nearest = z.re.round();
            Complex64::new(z.re - nearest, z.im).norm()
        }
    }
}
