//! Shared test helpers: a deterministic RNG and random configuration
//! generators.

use bubblegrid_core::lattice::{Configuration, LatticePoint, Phase};

/// SplitMix64: deterministic across platforms and toolchain versions.
pub struct Rng(u64);

impl Rng {
    pub fn new(seed: u64) -> Rng {
        Rng(seed)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, n: u64) -> u64 {
        self.next_u64() % n.max(1)
    }

    pub fn coord(&mut self, span: i64) -> i64 {
        (self.below((2 * span + 1) as u64) as i64) - span
    }
}

/// Up to `max_points` random points with random phases inside
/// `[-span, span]^2`; duplicates collapse, so the count may be smaller.
pub fn random_config(rng: &mut Rng, max_points: u64, span: i64) -> Configuration {
    let n = rng.below(max_points + 1);
    let mut points = std::collections::BTreeMap::new();
    for _ in 0..n {
        let p = LatticePoint::new(rng.coord(span), rng.coord(span));
        let phase = if rng.below(2) == 0 { Phase::A } else { Phase::B };
        points.entry(p).or_insert(phase);
    }
    Configuration::from_points(points).expect("map keys are unique")
}
