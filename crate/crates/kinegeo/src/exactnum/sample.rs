//! Deterministic pseudo-random sample points.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::point::Point;
use super::ratfn::RationalFn;
use super::rational::{qf, Rational};
use super::var::Var;

/// Default seed for every sampling decision ("KIN").
pub const DEFAULT_SEED: u64 = 0x4B49_4E;

/// Seeded source of small exact rationals.
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Sampler {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    /// A nonzero rational `n/d` with `|n| ≤ bound`, `1 ≤ d ≤ bound`.
    pub fn rational(&mut self, bound: i64) -> Rational {
        loop {
            let n = self.rng.gen_range(-bound..=bound);
            let d = self.rng.gen_range(1..=bound);
            if n != 0 {
                return qf(n, d);
            }
        }
    }

    /// A positive rational with numerator and denominator in `1..=bound`.
    pub fn positive(&mut self, bound: i64) -> Rational {
        qf(self.rng.gen_range(1..=bound), self.rng.gen_range(1..=bound))
    }

    pub fn index(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }

    /// A point binding all seven variables; `c` and `l` are positive.
    pub fn point(&mut self, bound: i64) -> Point {
        let mut p = Point::new();
        for v in Var::ALL {
            let r = match v {
                Var::C | Var::L => self.positive(bound),
                _ => self.rational(bound),
            };
            p.set(v, r);
        }
        p
    }
}

/// Randomized identity test: `false` means `f` is certainly nonzero; `true`
/// means `f` vanished at every sampled point (not a proof).
pub fn probably_zero(f: &RationalFn, seed: u64, trials: usize) -> bool {
    let mut s = Sampler::new(seed);
    let mut tested = 0;
    let mut attempts = 0;
    while tested < trials && attempts < trials * 8 {
        attempts += 1;
        let p = s.point(97);
        match f.numer().eval(&p) {
            Ok(v) => {
                tested += 1;
                if !v.is_zero() {
                    return false;
                }
            }
            Err(_) => continue,
        }
    }
    true
}
