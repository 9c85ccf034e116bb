//! Connectivity, the A–B interface, lattice isometries, canonical forms,
//! and the isometry-minimised symmetric difference between configurations.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::fmt;

use crate::lattice::{BoundingBox, Configuration, LatticePoint, Phase};

/// A midpoint of a unit edge joining an A-point to a B-point, stored in
/// doubled coordinates: the midpoint `(k + 1/2, l)` becomes `(2k+1, 2l)`.
/// Exactly one of `x2`, `y2` is odd.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct InterfacePoint {
    pub x2: i64,
    pub y2: i64,
}

/// One of the 8 elements of the lattice point group (rotations by pi/2 and
/// the axis/diagonal reflections), stored as a signed 2x2 matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PointGroup {
    /// Row-major `[a, b, c, d]`: `(x, y) -> (a x + b y, c x + d y)`.
    m: [i8; 4],
}

impl PointGroup {
    pub const IDENTITY: PointGroup = PointGroup { m: [1, 0, 0, 1] };
    /// `(x, y) -> (-y, x)`.
    pub const ROT90: PointGroup = PointGroup { m: [0, -1, 1, 0] };
    pub const ROT180: PointGroup = PointGroup { m: [-1, 0, 0, -1] };
    pub const ROT270: PointGroup = PointGroup { m: [0, 1, -1, 0] };
    /// `x -> -x`.
    pub const MIRROR_X: PointGroup = PointGroup { m: [-1, 0, 0, 1] };
    /// `y -> -y`.
    pub const MIRROR_Y: PointGroup = PointGroup { m: [1, 0, 0, -1] };
    /// `(x, y) -> (y, x)`.
    pub const DIAGONAL: PointGroup = PointGroup { m: [0, 1, 1, 0] };
    pub const ANTIDIAGONAL: PointGroup = PointGroup { m: [0, -1, -1, 0] };

    /// All 8 elements in the fixed search order used across the crate.
    pub const ALL: [PointGroup; 8] = [
        PointGroup::IDENTITY,
        PointGroup::ROT90,
        PointGroup::ROT180,
        PointGroup::ROT270,
        PointGroup::MIRROR_X,
        PointGroup::MIRROR_Y,
        PointGroup::DIAGONAL,
        PointGroup::ANTIDIAGONAL,
    ];

    pub fn apply(&self, p: LatticePoint) -> LatticePoint {
        let [a, b, c, d] = self.m;
        LatticePoint::new(
            a as i64 * p.x + b as i64 * p.y,
            c as i64 * p.x + d as i64 * p.y,
        )
    }

    pub fn apply_pair(&self, (x, y): (i64, i64)) -> (i64, i64) {
        let [a, b, c, d] = self.m;
        (a as i64 * x + b as i64 * y, c as i64 * x + d as i64 * y)
    }

    /// Composition: `(self.compose(other)).apply(p) == self.apply(other.apply(p))`.
    pub fn compose(&self, other: &PointGroup) -> PointGroup {
        let [a, b, c, d] = self.m;
        let [e, f, g, h] = other.m;
        PointGroup { m: [a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h] }
    }

    /// All 8 elements are orthogonal, so the inverse is the transpose.
    pub fn inverse(&self) -> PointGroup {
        let [a, b, c, d] = self.m;
        PointGroup { m: [a, c, b, d] }
    }
}

/// A lattice isometry `p -> g(p) + t` with `g` in the point group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Isometry {
    pub point_group: PointGroup,
    pub translation: (i64, i64),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OverflowError;

impl fmt::Display for OverflowError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "isometry application overflows 64-bit coordinates")
    }
}

impl Isometry {
    pub fn identity() -> Isometry {
        Isometry { point_group: PointGroup::IDENTITY, translation: (0, 0) }
    }

    pub fn new(point_group: PointGroup, translation: (i64, i64)) -> Isometry {
        Isometry { point_group, translation }
    }

    pub fn apply(&self, p: LatticePoint) -> Result<LatticePoint, OverflowError> {
        let q = self.point_group.apply(p);
        q.translated(self.translation.0, self.translation.1).ok_or(OverflowError)
    }

    /// `(self.compose(other)).apply(p) == self.apply(other.apply(p))`.
    pub fn compose(&self, other: &Isometry) -> Isometry {
        let g = self.point_group.compose(&other.point_group);
        let rt = self.point_group.apply_pair(other.translation);
        Isometry {
            point_group: g,
            translation: (rt.0 + self.translation.0, rt.1 + self.translation.1),
        }
    }

    pub fn inverse(&self) -> Isometry {
        let inv = self.point_group.inverse();
        let t = inv.apply_pair(self.translation);
        Isometry { point_group: inv, translation: (-t.0, -t.1) }
    }
}

/// True iff the unit-distance graph on `points` is connected. The empty set
/// and singletons count as connected.
pub fn is_connected(points: &BTreeSet<LatticePoint>) -> bool {
    let Some(&start) = points.iter().next() else { return true };
    let mut seen = BTreeSet::new();
    let mut stack = alloc::vec![start];
    seen.insert(start);
    while let Some(p) = stack.pop() {
        for q in p.neighbors() {
            if points.contains(&q) && seen.insert(q) {
                stack.push(q);
            }
        }
    }
    seen.len() == points.len()
}

pub fn phase_point_set(config: &Configuration, phase: Phase) -> BTreeSet<LatticePoint> {
    config.phase_points(phase).collect()
}

pub fn all_point_set(config: &Configuration) -> BTreeSet<LatticePoint> {
    config.iter().map(|(p, _)| p).collect()
}

/// The interface `I_AB`: one point per unit-distance A–B pair, in doubled
/// coordinates. Its cardinality equals `bond_counts(config).cross`.
pub fn interface(config: &Configuration) -> BTreeSet<InterfacePoint> {
    let mut out = BTreeSet::new();
    for (p, ph) in config.iter() {
        for (dx, dy) in [(1i64, 0i64), (0, 1)] {
            let Some(q) = p.translated(dx, dy) else { continue };
            if let Some(qph) = config.phase_at(&q) {
                if qph != ph {
                    out.insert(InterfacePoint { x2: p.x + q.x, y2: p.y + q.y });
                }
            }
        }
    }
    out
}

/// Interface adjacency: two interface points are joined iff their distance
/// is `1/sqrt(2)` or `1` and the open segment between them contains no
/// lattice point. In doubled coordinates the squared distance is 2 or 4,
/// and in the distance-4 case the segment midpoint must not be a lattice
/// point (both coordinates even).
pub fn interface_adjacent(p: &InterfacePoint, q: &InterfacePoint) -> bool {
    let dx = p.x2 - q.x2;
    let dy = p.y2 - q.y2;
    match dx * dx + dy * dy {
        2 => true,
        4 => {
            let mx = (p.x2 + q.x2) / 2;
            let my = (p.y2 + q.y2) / 2;
            mx % 2 != 0 || my % 2 != 0
        }
        _ => false,
    }
}

fn interface_connected(points: &[InterfacePoint]) -> bool {
    if points.len() <= 1 {
        return true;
    }
    let mut seen = alloc::vec![false; points.len()];
    let mut stack = alloc::vec![0usize];
    seen[0] = true;
    let mut count = 1;
    while let Some(i) = stack.pop() {
        for j in 0..points.len() {
            if !seen[j] && interface_adjacent(&points[i], &points[j]) {
                seen[j] = true;
                count += 1;
                stack.push(j);
            }
        }
    }
    count == points.len()
}

fn monotone_up_right(points: &[InterfacePoint]) -> bool {
    // p.x2 > q.x2 must imply p.y2 >= q.y2: group by x2 ascending and demand
    // that each group's minimum y2 is at least the running maximum so far.
    let mut sorted: Vec<&InterfacePoint> = points.iter().collect();
    sorted.sort_unstable_by_key(|p| (p.x2, p.y2));
    let mut prev_max: Option<i64> = None;
    let mut i = 0;
    while i < sorted.len() {
        let x = sorted[i].x2;
        let mut group_min = i64::MAX;
        let mut group_max = i64::MIN;
        while i < sorted.len() && sorted[i].x2 == x {
            group_min = group_min.min(sorted[i].y2);
            group_max = group_max.max(sorted[i].y2);
            i += 1;
        }
        if let Some(m) = prev_max {
            if group_min < m {
                return false;
            }
        }
        prev_max = Some(prev_max.unwrap_or(i64::MIN).max(group_max));
    }
    true
}

/// True iff the interface graph is connected and, after the best of the 8
/// point-group elements, goes only upwards and to the right.
pub fn interface_is_monotone_connected(config: &Configuration) -> bool {
    let pts: Vec<InterfacePoint> = interface(config).into_iter().collect();
    if !interface_connected(&pts) {
        return false;
    }
    PointGroup::ALL.iter().any(|g| {
        let image: Vec<InterfacePoint> = pts
            .iter()
            .map(|p| {
                let (x2, y2) = g.apply_pair((p.x2, p.y2));
                InterfacePoint { x2, y2 }
            })
            .collect();
        monotone_up_right(&image)
    })
}

/// Apply an isometry to every point, keeping phases.
pub fn apply_isometry(config: &Configuration, iso: &Isometry) -> Result<Configuration, OverflowError> {
    let mut points = BTreeMap::new();
    for (p, ph) in config.iter() {
        points.insert(iso.apply(p)?, ph);
    }
    Ok(Configuration::from_points(points).expect("isometries are injective"))
}

fn point_group_image(config: &Configuration, g: &PointGroup, swap: bool) -> Configuration {
    Configuration::from_points(config.iter().map(|(p, ph)| {
        (g.apply(p), if swap { ph.opposite() } else { ph })
    }))
    .expect("point-group maps are injective")
}

/// Translation-normalized encoding used for canonical comparison: points
/// sorted by `(x, y)` with the bounding-box minimum at the origin, phases
/// as a trailing byte.
fn encoding(config: &Configuration) -> Vec<(i64, i64, u8)> {
    let Some(bb) = config.bounding_box() else { return Vec::new() };
    config
        .iter()
        .map(|(p, ph)| (p.x - bb.min_x, p.y - bb.min_y, if ph == Phase::A { 0u8 } else { 1 }))
        .collect()
}

fn config_from_encoding(enc: &[(i64, i64, u8)]) -> Configuration {
    Configuration::from_points(enc.iter().map(|&(x, y, ph)| {
        (LatticePoint::new(x, y), if ph == 0 { Phase::A } else { Phase::B })
    }))
    .expect("encoding has unique coordinates")
}

/// Canonical representative of the isometry orbit of `config`: among the 8
/// point-group images (16 with phase labels swapped, when
/// `identify_phase_swap` holds and `N_A = N_B`), each translated so the
/// bounding-box minimum is the origin, the one with lexicographically
/// smallest sorted `(x, y, phase)` encoding. Idempotent and constant on
/// orbits.
pub fn canonical_form(config: &Configuration, identify_phase_swap: bool) -> Configuration {
    config_from_encoding(&canonical_encoding(config, identify_phase_swap))
}

pub(crate) fn canonical_encoding(
    config: &Configuration,
    identify_phase_swap: bool,
) -> Vec<(i64, i64, u8)> {
    let swaps: &[bool] = if identify_phase_swap && config.n_a() == config.n_b() {
        &[false, true]
    } else {
        &[false]
    };
    let mut best: Option<Vec<(i64, i64, u8)>> = None;
    for &swap in swaps {
        for g in &PointGroup::ALL {
            let enc = encoding(&point_group_image(config, g, swap));
            if best.as_ref().is_none_or(|b| enc < *b) {
                best = Some(enc);
            }
        }
    }
    best.unwrap_or_default()
}

struct PhaseGeometry {
    points: BTreeSet<(i64, i64)>,
    bbox: Option<BoundingBox>,
}

impl PhaseGeometry {
    fn of(config: &Configuration, phase: Phase, g: Option<&PointGroup>) -> PhaseGeometry {
        let points: BTreeSet<(i64, i64)> = config
            .phase_points(phase)
            .map(|p| {
                let q = g.map_or(p, |g| g.apply(p));
                (q.x, q.y)
            })
            .collect();
        let bbox = points.iter().next().map(|&(x0, y0)| {
            let mut bb = BoundingBox { min_x: x0, min_y: y0, max_x: x0, max_y: y0 };
            for &(x, y) in &points {
                bb.min_x = bb.min_x.min(x);
                bb.max_x = bb.max_x.max(x);
                bb.min_y = bb.min_y.min(y);
                bb.max_y = bb.max_y.max(y);
            }
            bb
        });
        PhaseGeometry { points, bbox }
    }

    fn len(&self) -> u64 {
        self.points.len() as u64
    }
}

/// Number of lattice cells in the intersection of `a` with `b` shifted by
/// `(dx, dy)`; an upper bound on how many points can coincide.
fn box_cap(a: &Option<BoundingBox>, b: &Option<BoundingBox>, dx: i64, dy: i64) -> u64 {
    let (Some(a), Some(b)) = (a, b) else { return 0 };
    let w = (a.max_x.min(b.max_x + dx) - a.min_x.max(b.min_x + dx) + 1).max(0);
    let h = (a.max_y.min(b.max_y + dy) - a.min_y.max(b.min_y + dy) + 1).max(0);
    (w * h) as u64
}

fn overlap(fixed: &PhaseGeometry, moved: &PhaseGeometry, dx: i64, dy: i64) -> u64 {
    moved
        .points
        .iter()
        .filter(|&&(x, y)| fixed.points.contains(&(x + dx, y + dy)))
        .count() as u64
}

/// `min over isometries T of #(A1 △ T(A2)) + #(B1 △ T(B2))`.
///
/// The search covers the 8 point-group elements and every translation for
/// which the configurations' bounding boxes intersect; any translation
/// placing them disjoint yields exactly `|c1| + |c2|`, which seeds the
/// incumbent, so the restriction loses nothing. A per-translation lower
/// bound from bounding-box intersection capacities prunes the scan without
/// affecting exactness.
pub fn min_symmetric_difference(c1: &Configuration, c2: &Configuration) -> u64 {
    let total = (c1.len() + c2.len()) as u64;
    if c1.is_empty() || c2.is_empty() {
        return total;
    }
    let a1 = PhaseGeometry::of(c1, Phase::A, None);
    let b1 = PhaseGeometry::of(c1, Phase::B, None);
    let u1 = c1.bounding_box().expect("nonempty");

    // Any fully separated placement scores `total`; every evaluated
    // translation scores at most that, so `total` is a valid upper bound.
    let mut best = total;

    for g in &PointGroup::ALL {
        let a2 = PhaseGeometry::of(c2, Phase::A, Some(g));
        let b2 = PhaseGeometry::of(c2, Phase::B, Some(g));
        let img = apply_isometry(c2, &Isometry::new(*g, (0, 0))).expect("small coords");
        let u2 = img.bounding_box().expect("nonempty");

        let eval = |dx: i64, dy: i64| -> u64 {
            let ov_a = overlap(&a1, &a2, dx, dy);
            let ov_b = overlap(&b1, &b2, dx, dy);
            a1.len() + a2.len() - 2 * ov_a + b1.len() + b2.len() - 2 * ov_b
        };

        // Seed with centroid alignment (sum coordinates, rounded) and the
        // four corner alignments so pruning has a tight incumbent early.
        let (s1x, s1y) = c1.iter().fold((0i64, 0i64), |(sx, sy), (p, _)| (sx + p.x, sy + p.y));
        let (s2x, s2y) = img.iter().fold((0i64, 0i64), |(sx, sy), (p, _)| (sx + p.x, sy + p.y));
        let n1 = c1.len() as i64;
        let n2 = img.len() as i64;
        let cdx = (s1x * n2 - s2x * n1).div_euclid(n1 * n2);
        let cdy = (s1y * n2 - s2y * n1).div_euclid(n1 * n2);
        let seeds = [
            (cdx, cdy),
            (cdx + 1, cdy),
            (cdx, cdy + 1),
            (cdx + 1, cdy + 1),
            (u1.min_x - u2.min_x, u1.min_y - u2.min_y),
            (u1.max_x - u2.max_x, u1.max_y - u2.max_y),
            (u1.min_x - u2.min_x, u1.max_y - u2.max_y),
            (u1.max_x - u2.max_x, u1.min_y - u2.min_y),
        ];
        for (dx, dy) in seeds {
            best = best.min(eval(dx, dy));
        }

        for dx in (u1.min_x - u2.max_x)..=(u1.max_x - u2.min_x) {
            for dy in (u1.min_y - u2.max_y)..=(u1.max_y - u2.min_y) {
                let cap_a = box_cap(&a1.bbox, &a2.bbox, dx, dy).min(a1.len()).min(a2.len());
                let cap_b = box_cap(&b1.bbox, &b2.bbox, dx, dy).min(b1.len()).min(b2.len());
                let lb = a1.len() + a2.len() - 2 * cap_a + b1.len() + b2.len() - 2 * cap_b;
                if lb >= best {
                    continue;
                }
                let d = eval(dx, dy);
                if d < best {
                    best = d;
                }
            }
        }
    }
    best
}
