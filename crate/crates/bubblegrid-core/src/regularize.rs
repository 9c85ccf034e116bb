//! Row and inter-row energy decomposition, the two lower-bound lemmas with
//! their equality characterizations, the Step-0/Step-k Case 1..4
//! rearrangement procedure, and admissibility checking.
//!
//! Rows are indexed 1-based from the top (maximal `y` first). The total
//! energy decomposes exactly as `sum_k E_row(k) + sum_k E_inter(k)` because
//! only unit-distance pairs interact.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use crate::beta::AffineInBeta;
use crate::geometry::{all_point_set, interface_is_monotone_connected, is_connected, phase_point_set};
use crate::lattice::{Configuration, LatticePoint, Phase};

/// Per-row phase counts, top row first.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RowProfile {
    /// `(n_k, m_k)`: number of A-points and B-points in row `k`.
    pub rows: Vec<(u64, u64)>,
}

impl RowProfile {
    pub fn n_a(&self) -> u64 {
        self.rows.iter().map(|&(n, _)| n).sum()
    }

    pub fn n_b(&self) -> u64 {
        self.rows.iter().map(|&(_, m)| m).sum()
    }
}

/// Recomputed from the configuration at hand, never cached across
/// modifications.
pub fn row_profile(config: &Configuration) -> RowProfile {
    let rows = config
        .occupied_rows_desc()
        .into_iter()
        .map(|y| {
            let slice = config.row_slice(y);
            let n = slice.iter().filter(|&&(_, ph)| ph == Phase::A).count() as u64;
            (n, slice.len() as u64 - n)
        })
        .collect();
    RowProfile { rows }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RowIndexError {
    pub index: usize,
    pub rows: usize,
}

impl fmt::Display for RowIndexError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "row index {} out of range (1..={})", self.index, self.rows)
    }
}

fn sticky_pairs(points: &[(i64, i64, Phase)], other: &[(i64, i64, Phase)]) -> AffineInBeta {
    let mut intra = 0i64;
    let mut cross = 0i64;
    for &(x1, y1, p1) in points {
        for &(x2, y2, p2) in other {
            if (x1 - x2).abs() + (y1 - y2).abs() == 1 {
                if p1 == p2 {
                    intra += 1;
                } else {
                    cross += 1;
                }
            }
        }
    }
    AffineInBeta::new(-intra, -cross)
}

fn row_points(config: &Configuration, y: i64) -> Vec<(i64, i64, Phase)> {
    config.row_slice(y).into_iter().map(|(x, ph)| (x, y, ph)).collect()
}

/// `E_row(k)`: sticky energy of pairs within the `k`-th occupied row from
/// the top (`1 <= k <= N_row`).
pub fn row_energy(config: &Configuration, k: usize) -> Result<AffineInBeta, RowIndexError> {
    let rows = config.occupied_rows_desc();
    if k == 0 || k > rows.len() {
        return Err(RowIndexError { index: k, rows: rows.len() });
    }
    let pts = row_points(config, rows[k - 1]);
    // Within one row each unordered pair would be counted twice by the
    // symmetric scan; scan ordered pairs once instead.
    let mut intra = 0i64;
    let mut cross = 0i64;
    for (i, &(x1, _, p1)) in pts.iter().enumerate() {
        for &(x2, _, p2) in &pts[i + 1..] {
            if (x1 - x2).abs() == 1 {
                if p1 == p2 {
                    intra += 1;
                } else {
                    cross += 1;
                }
            }
        }
    }
    Ok(AffineInBeta::new(-intra, -cross))
}

/// `E_inter(k)`: sticky energy between occupied rows `k` and `k+1`
/// (`1 <= k <= N_row - 1`). Zero when the two rows are not vertically
/// adjacent.
pub fn inter_row_energy(config: &Configuration, k: usize) -> Result<AffineInBeta, RowIndexError> {
    let rows = config.occupied_rows_desc();
    if k == 0 || k + 1 > rows.len() {
        return Err(RowIndexError { index: k, rows: rows.len() });
    }
    Ok(sticky_pairs(
        &row_points(config, rows[k - 1]),
        &row_points(config, rows[k]),
    ))
}

/// Lower bound on the energy of a row holding `n` A-points and `m`
/// B-points: `-(n+m)+2-beta` when both phases are present, `-(n+m)+1` for a
/// nonempty single-phase row, `0` for an empty one. Attained exactly when
/// the row's A-set, B-set, and their union are connected.
pub fn row_energy_bound(n: u64, m: u64) -> AffineInBeta {
    let total = (n + m) as i64;
    if n > 0 && m > 0 {
        AffineInBeta::new(-total + 2, -1)
    } else if total > 0 {
        AffineInBeta::new(-total + 1, 0)
    } else {
        AffineInBeta::ZERO
    }
}

/// Lower bound on the energy between adjacent rows with phase counts
/// `(n_k, m_k)` and `(n_k1, m_k1)`:
///
/// ```text
/// -(1-beta) * (min(n_k,n_k1) + min(m_k,m_k1)) - beta * min(n_k+m_k, n_k1+m_k1)
/// ```
pub fn inter_row_energy_bound(n_k: u64, m_k: u64, n_k1: u64, m_k1: u64) -> AffineInBeta {
    let same = (n_k.min(n_k1) + m_k.min(m_k1)) as i64;
    let total = (n_k + m_k).min(n_k1 + m_k1) as i64;
    // -(1-b)*same - b*total = -same + (same - total)*b
    AffineInBeta::new(-same, same - total)
}

/// Test helper for the horizontal lemma's equality characterization: the
/// row's A-set, B-set, and union are each connected (i.e. contiguous).
pub fn row_equality_conditions(config: &Configuration, y: i64) -> bool {
    let slice = config.row_slice(y);
    let contiguous = |xs: &[i64]| xs.windows(2).all(|w| w[1] - w[0] == 1);
    let a: Vec<i64> = slice.iter().filter(|&&(_, p)| p == Phase::A).map(|&(x, _)| x).collect();
    let b: Vec<i64> = slice.iter().filter(|&&(_, p)| p == Phase::B).map(|&(x, _)| x).collect();
    let all: Vec<i64> = slice.iter().map(|&(x, _)| x).collect();
    contiguous(&a) && contiguous(&b) && contiguous(&all)
}

/// Test helper for the vertical lemma's equality conditions between
/// occupied rows at `y_top` and `y_bot`:
/// (1) `min(n_k, n_k1)` A-points of the upper row sit directly above
/// A-points of the lower row, (2) likewise for B, (3) the row with fewer
/// points is completely covered by the other.
pub fn inter_row_equality_conditions(config: &Configuration, y_top: i64, y_bot: i64) -> bool {
    let top = config.row_slice(y_top);
    let bot = config.row_slice(y_bot);
    let adjacent = y_top - y_bot == 1;
    let cols = |s: &[(i64, Phase)], ph: Option<Phase>| -> BTreeSet<i64> {
        s.iter()
            .filter(|&&(_, p)| ph.is_none_or(|want| p == want))
            .map(|&(x, _)| x)
            .collect()
    };
    let (ta, tb, tu) = (cols(&top, Some(Phase::A)), cols(&top, Some(Phase::B)), cols(&top, None));
    let (ba, bb, bu) = (cols(&bot, Some(Phase::A)), cols(&bot, Some(Phase::B)), cols(&bot, None));
    let stacked = |u: &BTreeSet<i64>, v: &BTreeSet<i64>| -> usize {
        if adjacent { u.intersection(v).count() } else { 0 }
    };
    let cond1 = stacked(&ta, &ba) == ta.len().min(ba.len());
    let cond2 = stacked(&tb, &bb) == tb.len().min(bb.len());
    let shorter_covered = if tu.len() >= bu.len() { bu.is_subset(&tu) } else { tu.is_subset(&bu) };
    cond1 && cond2 && adjacent && shorter_covered
}

/// Delete empty rows/columns by translating the separated blocks back into
/// contact; when a closed junction carries no bond, shift the upper (or
/// left) block to create at least one. Never increases the energy, and
/// strictly decreases it whenever an empty interior line existed.
pub fn remove_empty_lines(config: &Configuration) -> Configuration {
    let mut cur = config.clone();
    loop {
        if let Some(next) = close_one_row_gap(&cur) {
            cur = next;
            continue;
        }
        if let Some(next) = close_one_col_gap(&cur) {
            cur = next;
            continue;
        }
        return cur;
    }
}

fn close_one_row_gap(config: &Configuration) -> Option<Configuration> {
    let rows = config.occupied_rows_desc();
    let gap_at = rows.windows(2).position(|w| w[0] - w[1] > 1)?;
    let y_top_block_bottom = rows[gap_at];
    let gap = y_top_block_bottom - rows[gap_at + 1] - 1;
    // Lift everything at or below the gap; equivalently drop the top block
    // onto the bottom one.
    let lifted = Configuration::from_points(config.iter().map(|(p, ph)| {
        if p.y < y_top_block_bottom {
            (LatticePoint::new(p.x, p.y + gap), ph)
        } else {
            (p, ph)
        }
    }))
    .expect("vertical shift keeps blocks disjoint");
    Some(ensure_row_junction_bond(&lifted, y_top_block_bottom))
}

fn ensure_row_junction_bond(config: &Configuration, y_top: i64) -> Configuration {
    let top_xs: Vec<i64> = config.row_slice(y_top).iter().map(|&(x, _)| x).collect();
    let bot_xs: Vec<i64> = config.row_slice(y_top - 1).iter().map(|&(x, _)| x).collect();
    if top_xs.iter().any(|x| bot_xs.binary_search(x).is_ok()) {
        return config.clone();
    }
    // No vertical bond across the junction: shift the whole upper block
    // horizontally by the smallest displacement creating one.
    let mut shift: Option<i64> = None;
    for &tx in &top_xs {
        for &bx in &bot_xs {
            let s = bx - tx;
            if shift.is_none_or(|cur| (s.abs(), s) < (cur.abs(), cur)) {
                shift = Some(s);
            }
        }
    }
    let s = shift.expect("both junction rows are occupied");
    Configuration::from_points(config.iter().map(|(p, ph)| {
        if p.y >= y_top {
            (LatticePoint::new(p.x + s, p.y), ph)
        } else {
            (p, ph)
        }
    }))
    .expect("blocks live in disjoint row ranges")
}

fn transpose(config: &Configuration) -> Configuration {
    Configuration::from_points(config.iter().map(|(p, ph)| (LatticePoint::new(p.y, p.x), ph)))
        .expect("transposition is injective")
}

fn close_one_col_gap(config: &Configuration) -> Option<Configuration> {
    // Columns are rows of the transposed configuration.
    close_one_row_gap(&transpose(config)).map(|c| transpose(&c))
}

/// The Step-0 / Step-k rearrangement: keep every row's `(n_k, m_k)` profile
/// but make each row a contiguous A-block followed by a contiguous B-block,
/// stacked according to Cases 1–4 so that every row and inter-row lower
/// bound is attained. The energy never increases, and strictly decreases
/// whenever the input violates any equality condition of the two lemmas.
///
/// The first row's leftmost A-point is anchored at `x = 0` (for a row
/// without A-points the block itself starts at 0). Rows are restacked at
/// consecutive `y` below the original top row, so any empty interior rows
/// of the input are closed.
pub fn regularize_rows(config: &Configuration) -> Configuration {
    let rows = config.occupied_rows_desc();
    if rows.is_empty() {
        return Configuration::empty();
    }
    let profile = row_profile(config);
    let y_top = rows[0];
    let mut starts: Vec<i64> = Vec::with_capacity(profile.rows.len());
    starts.push(0);
    for k in 0..profile.rows.len() - 1 {
        let (n0, m0) = profile.rows[k];
        let (n1, m1) = profile.rows[k + 1];
        let (n0, m0, n1, m1) = (n0 as i64, m0 as i64, n1 as i64, m1 as i64);
        let s0 = starts[k];
        let s1 = if (n0 <= n1) == (m0 <= m1) {
            // Cases 1 and 2: both phases grow (A leftward, B rightward) or
            // both shrink onto the A/B boundary; the boundary column stays
            // fixed either way.
            s0 + n0 - n1
        } else if n0 <= n1 {
            // Case 3: A grows, B shrinks.
            if n0 + m0 >= n1 + m1 {
                s0 // extra A-points continue under the old B-block
            } else {
                s0 + (n0 + m0) - (n1 + m1) // right ends aligned
            }
        } else {
            // Case 4: mirror of Case 3.
            if n0 + m0 >= n1 + m1 {
                s0 + (n0 + m0) - (n1 + m1) // right ends aligned
            } else {
                s0 // left ends aligned
            }
        };
        starts.push(s1);
    }
    let mut points = Vec::new();
    for (k, (&s, &(n, m))) in starts.iter().zip(profile.rows.iter()).enumerate() {
        let y = y_top - k as i64;
        for i in 0..n as i64 {
            points.push((LatticePoint::new(s + i, y), Phase::A));
        }
        for i in 0..m as i64 {
            points.push((LatticePoint::new(s + n as i64 + i, y), Phase::B));
        }
    }
    Configuration::from_points(points).expect("one point per cell by construction")
}

/// `regularize_rows` conjugated by the diagonal reflection `(x,y) -> (y,x)`.
pub fn regularize_columns(config: &Configuration) -> Configuration {
    transpose(&regularize_rows(&transpose(config)))
}

/// A clause of admissibility violated by a configuration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AdmissibilityViolation {
    ADisconnected,
    BDisconnected,
    UnionDisconnected,
    RowNotInterval(Phase),
    UnionRowNotInterval,
    ColNotInterval(Phase),
    UnionColNotInterval,
    MissingRows(Phase),
    MissingCols(Phase),
    MixedRowSides,
    MixedColSides,
    InterfaceNotMonotoneConnected,
}

impl fmt::Display for AdmissibilityViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use AdmissibilityViolation::*;
        match self {
            ADisconnected => write!(f, "A is disconnected"),
            BDisconnected => write!(f, "B is disconnected"),
            UnionDisconnected => write!(f, "A ∪ B is disconnected"),
            RowNotInterval(p) => write!(f, "a row slice of {p} is not an interval"),
            UnionRowNotInterval => write!(f, "a row slice of A ∪ B is not an interval"),
            ColNotInterval(p) => write!(f, "a column slice of {p} is not an interval"),
            UnionColNotInterval => write!(f, "a column slice of A ∪ B is not an interval"),
            MissingRows(p) => write!(f, "{p} skips an occupied row"),
            MissingCols(p) => write!(f, "{p} skips an occupied column"),
            MixedRowSides => write!(f, "A is not on one consistent side of B across rows"),
            MixedColSides => write!(f, "A is not on one consistent side of B across columns"),
            InterfaceNotMonotoneConnected => {
                write!(f, "the interface is not monotone-connected")
            }
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AdmissibilityReport {
    pub violations: Vec<AdmissibilityViolation>,
}

impl AdmissibilityReport {
    pub fn is_admissible(&self) -> bool {
        self.violations.is_empty()
    }
}

fn interval(xs: &[i64]) -> bool {
    xs.windows(2).all(|w| w[1] - w[0] == 1)
}

/// One-sidedness along one axis: in every line where both phases appear,
/// A's coordinates must lie entirely on the same side of B's.
fn consistent_sides(lines: &[Vec<(i64, Phase)>]) -> bool {
    let mut side: Option<bool> = None; // true: A before B in coordinate order
    for slice in lines {
        let a_max = slice.iter().filter(|&&(_, p)| p == Phase::A).map(|&(c, _)| c).max();
        let a_min = slice.iter().filter(|&&(_, p)| p == Phase::A).map(|&(c, _)| c).min();
        let b_max = slice.iter().filter(|&&(_, p)| p == Phase::B).map(|&(c, _)| c).max();
        let b_min = slice.iter().filter(|&&(_, p)| p == Phase::B).map(|&(c, _)| c).min();
        if let (Some(a_max), Some(a_min), Some(b_max), Some(b_min)) = (a_max, a_min, b_max, b_min) {
            let this = if a_max < b_min {
                true
            } else if b_max < a_min {
                false
            } else {
                return false; // interleaved
            };
            match side {
                None => side = Some(this),
                Some(s) if s != this => return false,
                _ => {}
            }
        }
    }
    true
}

fn occupancy_contiguous(coords: &mut Vec<i64>) -> bool {
    coords.sort_unstable();
    coords.dedup();
    interval(coords)
}

/// Check every structural conclusion of the connectivity theorem and its
/// corollaries: connectivity of A, B, and A ∪ B; interval row/column
/// slices; no skipped rows/columns per phase; one-sidedness; and a
/// monotone-connected interface. Returns all violated clauses.
pub fn check_admissible(config: &Configuration) -> AdmissibilityReport {
    let mut v = Vec::new();
    if !is_connected(&phase_point_set(config, Phase::A)) {
        v.push(AdmissibilityViolation::ADisconnected);
    }
    if !is_connected(&phase_point_set(config, Phase::B)) {
        v.push(AdmissibilityViolation::BDisconnected);
    }
    if !is_connected(&all_point_set(config)) {
        v.push(AdmissibilityViolation::UnionDisconnected);
    }

    let rows: Vec<Vec<(i64, Phase)>> =
        config.occupied_rows_desc().into_iter().map(|y| config.row_slice(y)).collect();
    let cols: Vec<Vec<(i64, Phase)>> =
        config.occupied_cols_asc().into_iter().map(|x| config.col_slice(x)).collect();

    for (lines, union_violation, phase_violation) in [
        (
            &rows,
            AdmissibilityViolation::UnionRowNotInterval,
            AdmissibilityViolation::RowNotInterval as fn(Phase) -> AdmissibilityViolation,
        ),
        (
            &cols,
            AdmissibilityViolation::UnionColNotInterval,
            AdmissibilityViolation::ColNotInterval as fn(Phase) -> AdmissibilityViolation,
        ),
    ] {
        for phase in [Phase::A, Phase::B] {
            if lines.iter().any(|s| {
                let xs: Vec<i64> =
                    s.iter().filter(|&&(_, p)| p == phase).map(|&(c, _)| c).collect();
                !interval(&xs)
            }) {
                v.push(phase_violation(phase));
                break;
            }
        }
        if lines.iter().any(|s| {
            let xs: Vec<i64> = s.iter().map(|&(c, _)| c).collect();
            !interval(&xs)
        }) {
            v.push(union_violation);
        }
    }

    for phase in [Phase::A, Phase::B] {
        let mut ys: Vec<i64> = config.phase_points(phase).map(|p| p.y).collect();
        if !occupancy_contiguous(&mut ys) {
            v.push(AdmissibilityViolation::MissingRows(phase));
        }
        let mut xs: Vec<i64> = config.phase_points(phase).map(|p| p.x).collect();
        if !occupancy_contiguous(&mut xs) {
            v.push(AdmissibilityViolation::MissingCols(phase));
        }
    }

    if !consistent_sides(&rows) {
        v.push(AdmissibilityViolation::MixedRowSides);
    }
    if !consistent_sides(&cols) {
        v.push(AdmissibilityViolation::MixedColSides);
    }
    if !interface_is_monotone_connected(config) {
        v.push(AdmissibilityViolation::InterfaceNotMonotoneConnected);
    }
    AdmissibilityReport { violations: v }
}

/// Decomposition check used by tests: `energy == sum of row and inter-row
/// energies`.
pub fn decomposed_energy(config: &Configuration) -> AffineInBeta {
    let n_rows = config.occupied_rows_desc().len();
    let mut total = AffineInBeta::ZERO;
    for k in 1..=n_rows {
        total += row_energy(config, k).expect("in range");
        if k < n_rows {
            total += inter_row_energy(config, k).expect("in range");
        }
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::beta::AffineInBeta;
    use crate::lattice::energy;

    fn fig7() -> Configuration {
        Configuration::from_coords(
            &[(0, 0), (0, 1), (1, 0), (1, 1)],
            &[(2, 0), (2, 1), (3, 0), (3, 1)],
        )
    }

    #[test]
    fn row_energy_examples() {
        // Row "A A B" contiguous: one A-A bond, one A-B bond.
        let cfg = Configuration::from_coords(&[(0, 0), (1, 0)], &[(2, 0)]);
        assert_eq!(row_energy(&cfg, 1).unwrap(), AffineInBeta::new(-1, -1));
        let single = Configuration::from_coords(&[(0, 0)], &[]);
        assert_eq!(row_energy(&single, 1).unwrap(), AffineInBeta::ZERO);
        let gap = Configuration::from_coords(&[(0, 0), (2, 0)], &[]);
        assert_eq!(row_energy(&gap, 1).unwrap(), AffineInBeta::ZERO);
        assert!(row_energy(&gap, 2).is_err());
    }

    #[test]
    fn inter_row_energy_examples() {
        let stacked = Configuration::from_coords(&[(0, 0), (0, 1)], &[]);
        assert_eq!(inter_row_energy(&stacked, 1).unwrap(), AffineInBeta::new(-1, 0));
        let ab = Configuration::from_coords(&[(0, 1)], &[(0, 0)]);
        assert_eq!(inter_row_energy(&ab, 1).unwrap(), AffineInBeta::new(0, -1));
        let offset = Configuration::from_coords(&[(0, 1)], &[(5, 0)]);
        assert_eq!(inter_row_energy(&offset, 1).unwrap(), AffineInBeta::ZERO);
    }

    #[test]
    fn bound_examples() {
        assert_eq!(row_energy_bound(3, 3), AffineInBeta::new(-4, -1));
        assert_eq!(row_energy_bound(2, 0), AffineInBeta::new(-1, 0));
        assert_eq!(row_energy_bound(0, 0), AffineInBeta::ZERO);
        assert_eq!(inter_row_energy_bound(2, 3, 3, 2), AffineInBeta::new(-4, -1));
        assert_eq!(inter_row_energy_bound(4, 0, 0, 4), AffineInBeta::new(0, -4));
        assert_eq!(inter_row_energy_bound(0, 0, 3, 5), AffineInBeta::ZERO);
    }

    #[test]
    fn remove_empty_lines_examples() {
        let split = Configuration::from_coords(&[(0, 3)], &[(0, 0)]);
        let merged = remove_empty_lines(&split);
        assert_eq!(
            crate::lattice::bond_counts(&merged).cross
                + crate::lattice::bond_counts(&merged).intra_a
                + crate::lattice::bond_counts(&merged).intra_b,
            1
        );
        let gapless = fig7();
        assert_eq!(remove_empty_lines(&gapless), gapless);
        assert_eq!(remove_empty_lines(&Configuration::empty()), Configuration::empty());
    }

    #[test]
    fn remove_empty_lines_shifts_for_contact() {
        // Two singletons two rows apart and far apart horizontally: after
        // closing the row gap there is no vertical bond, so the upper block
        // shifts sideways to create one.
        let cfg = Configuration::from_coords(&[(10, 2)], &[(0, 0)]);
        let merged = remove_empty_lines(&cfg);
        let bc = crate::lattice::bond_counts(&merged);
        assert_eq!(bc.cross, 1);
    }

    #[test]
    fn regularize_rows_misaligned_rows() {
        // Rows (2,3) and (3,2), maximally misaligned: energy strictly drops
        // to the sum of the bounds.
        let cfg = Configuration::from_coords(
            &[(0, 1), (1, 1), (10, 0), (11, 0), (12, 0)],
            &[(2, 1), (3, 1), (4, 1), (13, 0), (14, 0)],
        );
        let reg = regularize_rows(&cfg);
        assert_eq!(row_profile(&reg), row_profile(&cfg));
        let expected = row_energy_bound(2, 3)
            + row_energy_bound(3, 2)
            + inter_row_energy_bound(2, 3, 3, 2);
        assert_eq!(energy(&reg), expected);
        assert_eq!(regularize_rows(&reg), reg);
    }

    #[test]
    fn regularize_rows_idempotent_on_fig7() {
        let reg = regularize_rows(&fig7());
        assert_eq!(energy(&reg), energy(&fig7()));
        assert_eq!(regularize_rows(&reg), reg);
    }

    #[test]
    fn regularize_columns_is_conjugated() {
        let cfg = Configuration::from_coords(&[(0, 0), (0, 2), (1, 1)], &[(2, 1), (2, 2)]);
        assert_eq!(
            regularize_columns(&cfg),
            transpose(&regularize_rows(&transpose(&cfg)))
        );
    }

    #[test]
    fn admissibility_examples() {
        assert!(check_admissible(&fig7()).is_admissible());
        // A with a hole in a row.
        let holed = Configuration::from_coords(&[(0, 0), (2, 0)], &[]);
        let rep = check_admissible(&holed);
        assert!(rep.violations.contains(&AdmissibilityViolation::RowNotInterval(Phase::A)));
        // Two components.
        let two = Configuration::from_coords(&[(0, 0)], &[(5, 5)]);
        assert!(!check_admissible(&two).is_admissible());
    }

    #[test]
    fn decomposition_matches_energy() {
        for cfg in [
            fig7(),
            Configuration::from_coords(&[(0, 0), (1, 2), (1, 1)], &[(2, 1), (0, 1)]),
        ] {
            assert_eq!(decomposed_energy(&cfg), energy(&cfg));
        }
    }
}
