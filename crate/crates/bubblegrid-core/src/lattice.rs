//! Two-phase point configurations on Z^2 and their exact energy/perimeter
//! algebra.
//!
//! A configuration assigns one of two phases to finitely many lattice
//! points. With `Q(C,D)` the number of unit-distance pairs between `C` and
//! `D`, the lattice perimeter is
//!
//! ```text
//! P(A,B) = Q(A,A^c) + Q(B,B^c) - 2*beta*Q(A,B)
//!        = Q(A,A^c\B) + Q(B,B^c\A) + (2-2*beta)*Q(A,B)
//! ```
//!
//! and the sticky-potential energy is `E(A,B) = -(#AA bonds + #BB bonds)
//! - beta * #AB bonds`, tied to `P` by `E + 2(N_A+N_B) = P/2`.
//!
//! Coordinate convention: `y` increases upward, so the paper's "row 1"
//! (topmost) is the maximal occupied `y`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::beta::AffineInBeta;

/// A point of Z^2. Ordering is lexicographic in `(x, y)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticePoint {
    pub x: i64,
    pub y: i64,
}

impl LatticePoint {
    pub fn new(x: i64, y: i64) -> LatticePoint {
        LatticePoint { x, y }
    }

    /// The four lattice neighbours, skipping any that would overflow i64.
    pub fn neighbors(&self) -> impl Iterator<Item = LatticePoint> + '_ {
        [(1, 0), (-1, 0), (0, 1), (0, -1)]
            .into_iter()
            .filter_map(move |(dx, dy)| self.translated(dx, dy))
    }

    pub fn translated(&self, dx: i64, dy: i64) -> Option<LatticePoint> {
        Some(LatticePoint { x: self.x.checked_add(dx)?, y: self.y.checked_add(dy)? })
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Phase {
    A,
    B,
}

impl Phase {
    pub fn opposite(self) -> Phase {
        match self {
            Phase::A => Phase::B,
            Phase::B => Phase::A,
        }
    }
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Phase::A => write!(f, "A"),
            Phase::B => write!(f, "B"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DuplicatePointError {
    pub point: LatticePoint,
}

impl fmt::Display for DuplicatePointError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "duplicate lattice point {}", self.point)
    }
}

/// Axis-aligned bounding box of a nonempty configuration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoundingBox {
    pub min_x: i64,
    pub min_y: i64,
    pub max_x: i64,
    pub max_y: i64,
}

impl BoundingBox {
    pub fn width(&self) -> i64 {
        self.max_x - self.min_x + 1
    }

    pub fn height(&self) -> i64 {
        self.max_y - self.min_y + 1
    }
}

/// A finite map from lattice points to phases. Each point carries exactly
/// one phase, so `A` and `B` are disjoint by construction. Equality is set
/// equality of `(point, phase)` pairs; no canonical translation is baked in
/// (canonicalization lives in [`crate::geometry`]).
///
/// Immutable after construction; safe to share between threads.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Configuration {
    points: BTreeMap<LatticePoint, Phase>,
}

impl Configuration {
    pub fn empty() -> Configuration {
        Configuration { points: BTreeMap::new() }
    }

    /// Build from `(point, phase)` pairs, rejecting duplicate coordinates.
    pub fn from_points<I>(iter: I) -> Result<Configuration, DuplicatePointError>
    where
        I: IntoIterator<Item = (LatticePoint, Phase)>,
    {
        let mut points = BTreeMap::new();
        for (p, phase) in iter {
            if points.insert(p, phase).is_some() {
                return Err(DuplicatePointError { point: p });
            }
        }
        Ok(Configuration { points })
    }

    /// Convenience constructor from `(x, y)` tuples per phase. Panics on
    /// duplicates; intended for literals in tests and builders.
    pub fn from_coords(a: &[(i64, i64)], b: &[(i64, i64)]) -> Configuration {
        Configuration::from_points(
            a.iter()
                .map(|&(x, y)| (LatticePoint::new(x, y), Phase::A))
                .chain(b.iter().map(|&(x, y)| (LatticePoint::new(x, y), Phase::B))),
        )
        .expect("duplicate coordinates")
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn phase_at(&self, p: &LatticePoint) -> Option<Phase> {
        self.points.get(p).copied()
    }

    pub fn contains(&self, p: &LatticePoint) -> bool {
        self.points.contains_key(p)
    }

    pub fn count(&self, phase: Phase) -> usize {
        self.points.values().filter(|&&ph| ph == phase).count()
    }

    pub fn n_a(&self) -> usize {
        self.count(Phase::A)
    }

    pub fn n_b(&self) -> usize {
        self.count(Phase::B)
    }

    pub fn iter(&self) -> impl Iterator<Item = (LatticePoint, Phase)> + '_ {
        self.points.iter().map(|(&p, &ph)| (p, ph))
    }

    pub fn phase_points(&self, phase: Phase) -> impl Iterator<Item = LatticePoint> + '_ {
        self.points.iter().filter(move |(_, &ph)| ph == phase).map(|(&p, _)| p)
    }

    pub fn bounding_box(&self) -> Option<BoundingBox> {
        let mut it = self.points.keys();
        let first = it.next()?;
        let mut bb = BoundingBox { min_x: first.x, min_y: first.y, max_x: first.x, max_y: first.y };
        for p in it {
            bb.min_x = bb.min_x.min(p.x);
            bb.max_x = bb.max_x.max(p.x);
            bb.min_y = bb.min_y.min(p.y);
            bb.max_y = bb.max_y.max(p.y);
        }
        Some(bb)
    }

    /// The configuration with phase labels exchanged.
    pub fn swap_phases(&self) -> Configuration {
        Configuration {
            points: self.points.iter().map(|(&p, &ph)| (p, ph.opposite())).collect(),
        }
    }

    pub fn translated(&self, dx: i64, dy: i64) -> Option<Configuration> {
        let mut points = BTreeMap::new();
        for (&p, &ph) in &self.points {
            points.insert(p.translated(dx, dy)?, ph);
        }
        Some(Configuration { points })
    }

    /// All points in row `y`, sorted by `x`, with their phases.
    pub fn row_slice(&self, y: i64) -> Vec<(i64, Phase)> {
        self.points
            .iter()
            .filter(|(p, _)| p.y == y)
            .map(|(p, &ph)| (p.x, ph))
            .collect()
    }

    /// All points in column `x`, sorted by `y`, with their phases.
    pub fn col_slice(&self, x: i64) -> Vec<(i64, Phase)> {
        let mut v: Vec<(i64, Phase)> = self
            .points
            .iter()
            .filter(|(p, _)| p.x == x)
            .map(|(p, &ph)| (p.y, ph))
            .collect();
        v.sort_unstable_by_key(|&(y, _)| y);
        v
    }

    /// Occupied row coordinates, topmost first (the paper counts rows from
    /// the top).
    pub fn occupied_rows_desc(&self) -> Vec<i64> {
        let mut ys: Vec<i64> = self.points.keys().map(|p| p.y).collect();
        ys.sort_unstable();
        ys.dedup();
        ys.reverse();
        ys
    }

    /// Occupied column coordinates, leftmost first.
    pub fn occupied_cols_asc(&self) -> Vec<i64> {
        let mut xs: Vec<i64> = self.points.keys().map(|p| p.x).collect();
        xs.sort_unstable();
        xs.dedup();
        xs
    }
}

/// Exact counts of all unit-distance pairs by phase combination, plus the
/// directly counted phase-to-void boundaries.
///
/// Invariants (asserted by [`bond_counts`] and exercised by tests):
/// `boundary_a = 4*N_A - 2*intra_a - cross` and likewise for `B`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct BondCounts {
    /// Unit-distance A–A pairs.
    pub intra_a: u64,
    /// Unit-distance B–B pairs.
    pub intra_b: u64,
    /// Unit-distance A–B pairs, `Q(A,B)`.
    pub cross: u64,
    /// `Q(A, A^c \ B)`: bonds from A into unoccupied sites.
    pub boundary_a: u64,
    /// `Q(B, B^c \ A)`.
    pub boundary_b: u64,
}

/// Count every unit-distance pair of `config` by phase combination.
///
/// Intra/cross bonds are found by scanning the `+x` and `+y` neighbour of
/// each point (each unordered pair once); the boundary fields are counted
/// directly by scanning all four neighbours for absence, which keeps the
/// two perimeter expansions independent.
pub fn bond_counts(config: &Configuration) -> BondCounts {
    let mut c = BondCounts::default();
    for (p, ph) in config.iter() {
        for (dx, dy) in [(1i64, 0i64), (0, 1)] {
            let Some(q) = p.translated(dx, dy) else { continue };
            match config.phase_at(&q) {
                Some(qph) if qph == ph => match ph {
                    Phase::A => c.intra_a += 1,
                    Phase::B => c.intra_b += 1,
                },
                Some(_) => c.cross += 1,
                None => {}
            }
        }
        // Sites beyond the i64 range cannot be occupied, so every point has
        // exactly 4 bonds, occupied or vacant.
        let occupied = p.neighbors().filter(|q| config.contains(q)).count() as u64;
        let vacant = 4 - occupied;
        match ph {
            Phase::A => c.boundary_a += vacant,
            Phase::B => c.boundary_b += vacant,
        }
    }
    debug_assert_eq!(
        c.boundary_a + 2 * c.intra_a + c.cross,
        4 * config.n_a() as u64
    );
    debug_assert_eq!(
        c.boundary_b + 2 * c.intra_b + c.cross,
        4 * config.n_b() as u64
    );
    c
}

/// The lattice perimeter `P(A,B)` as an exact affine value.
///
/// Both expansions are evaluated — `Q(A,A^c) + Q(B,B^c) - 2*beta*Q(A,B)`
/// with `Q(X,X^c) = 4*N_X - 2*intra_X`, and `boundary_a + boundary_b +
/// (2-2*beta)*cross` from the directly counted boundaries — and asserted to
/// agree.
pub fn perimeter(config: &Configuration) -> AffineInBeta {
    let c = bond_counts(config);
    let n_a = config.n_a() as i64;
    let n_b = config.n_b() as i64;
    let q_a_total = 4 * n_a - 2 * c.intra_a as i64;
    let q_b_total = 4 * n_b - 2 * c.intra_b as i64;
    let first = AffineInBeta::new(q_a_total + q_b_total, -2 * c.cross as i64);
    let second = AffineInBeta::new(
        (c.boundary_a + c.boundary_b + 2 * c.cross) as i64,
        -2 * c.cross as i64,
    );
    assert_eq!(first, second, "the two perimeter expansions disagree");
    first
}

/// The sticky-potential configurational energy
/// `E(A,B) = -(intra_a + intra_b) - cross*beta`.
pub fn energy(config: &Configuration) -> AffineInBeta {
    let c = bond_counts(config);
    AffineInBeta::new(-((c.intra_a + c.intra_b) as i64), -(c.cross as i64))
}

/// The finite-Ising energy `F(C,u)` with `C = A ∪ B`, `u = +1` on A and
/// `-1` on B:
///
/// ```text
/// F(C,u) = -(1-beta)/4 * sum u(x)u(y)  -  (1+beta)/4 * sum |u(x)u(y)|
/// ```
///
/// with both sums over ordered pairs at distance 1. The sums are computed
/// literally by a pair scan and the quarter weights folded symbolically
/// (both combinations are divisible by 4), so the result is exact and must
/// equal [`energy`].
pub fn ising_energy(config: &Configuration) -> AffineInBeta {
    let pts: Vec<(LatticePoint, i64)> = config
        .iter()
        .map(|(p, ph)| (p, if ph == Phase::A { 1i64 } else { -1 }))
        .collect();
    let mut s_ferro: i64 = 0; // sum of u(x)u(y)
    let mut s_count: i64 = 0; // sum of |u(x)u(y)|
    for &(p, up) in &pts {
        for &(q, uq) in &pts {
            if (p.x - q.x).abs() + (p.y - q.y).abs() == 1 {
                s_ferro += up * uq;
                s_count += 1;
            }
        }
    }
    // F = -(s_ferro + s_count)/4 + beta * (s_ferro - s_count)/4
    assert!((s_ferro + s_count) % 4 == 0 && (s_ferro - s_count) % 4 == 0);
    AffineInBeta::new(-(s_ferro + s_count) / 4, (s_ferro - s_count) / 4)
}
