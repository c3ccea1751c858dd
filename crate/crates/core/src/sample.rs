//! Seeded random braids and diagrams for property tests.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::braid::{BraidWord, Letter};
use crate::diagram::{circular_plat_diagram, closure_diagram, LinkDiagram};

pub const DEFAULT_SEED: u64 = 20_240_917;

pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Sampler {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    /// Uniform integer in `lo..=hi`.
    pub fn rng_range(&mut self, lo: usize, hi: usize) -> usize {
        self.rng.gen_range(lo..=hi)
    }

    /// A random letter of `B_n`, `n >= 2`.
    pub fn letter(&mut self, n: usize) -> Letter {
        let i = self.rng.gen_range(1..n);
        if self.rng.gen_bool(0.5) {
            Letter::pos(i)
        } else {
            Letter::neg(i)
        }
    }

    /// Up to `max_len` random letters, freely reduced.
    pub fn braid(&mut self, n: usize, max_len: usize) -> BraidWord {
        let len = self.rng.gen_range(0..=max_len);
        let letters: Vec<Letter> = (0..len).map(|_| self.letter(n)).collect();
        BraidWord::new(n, letters).expect("indices in range")
    }

    /// A braid on between `min_n` and `max_n` strands.
    pub fn braid_in(&mut self, min_n: usize, max_n: usize, max_len: usize) -> BraidWord {
        let n = self.rng.gen_range(min_n..=max_n);
        self.braid(n, max_len)
    }

    /// A standard closure on 2 to 4 strands or a circular plat closure on 4
    /// or 6 strands, with at most `max_crossings` crossings.
    pub fn diagram(&mut self, max_crossings: usize) -> LinkDiagram {
        if self.rng.gen_bool(0.5) {
            closure_diagram(&self.braid_in(2, 4, max_crossings))
        } else {
            let n = 2 * self.rng.gen_range(2..=3);
            circular_plat_diagram(&self.braid(n, max_crossings)).expect("even strand count")
        }
    }
}

impl Default for Sampler {
    fn default() -> Self {
        Sampler::new(DEFAULT_SEED)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reproducible() {
        let a: Vec<String> = {
            let mut s = Sampler::new(7);
            (0..20).map(|_| s.braid_in(2, 12, 40).to_string()).collect()
        };
        let mut s = Sampler::new(7);
        let b: Vec<String> = (0..20).map(|_| s.braid_in(2, 12, 40).to_string()).collect();
        assert_eq!(a, b);
    }

    #[test]
    fn bounds() {
        let mut s = Sampler::default();
        for _ in 0..200 {
            let b = s.braid_in(2, 6, 15);
            assert!((2..=6).contains(&b.strands()) && b.len() <= 15);
            assert!(s.diagram(10).crossing_count() <= 10);
        }
    }
}
