//! Ground-truth brute force: enumerate every configuration with connected
//! union for given `(N_A, N_B)`, find the exact minimal energy, and list
//! all minimisers up to isometry.
//!
//! The restriction to connected unions is globally exact: a configuration
//! with disconnected union is strictly improvable by translating one
//! component into contact, which adds at least one bond of value at least
//! `beta > 0`. The search therefore enumerates the fixed polyominoes of
//! size `N_A + N_B` (Redelmeier-style leftmost-cell growth, each shape
//! once up to translation) and scans every phase assignment with the
//! required counts, comparing energies exactly.
//!
//! [`enumerate_shapes`] plus [`scan_shapes`]/[`merge_scans`] expose the
//! partitionable kernel so a driver may split the shape list across
//! workers; the merge is exact and order-preserving, making parallel runs
//! byte-identical to sequential ones.

use alloc::vec::Vec;
use core::fmt;

use num_rational::Rational64;

use crate::beta::{AffineInBeta, Beta, BetaValue, APPROX_TIE_EPS};
use crate::geometry::canonical_encoding;
use crate::lattice::{Configuration, LatticePoint, Phase};
use crate::solver::{min_perimeter, SolverError};

/// Default cap on `N_A + N_B` for full minimiser reports.
pub const DEFAULT_BUDGET: u32 = 11;
/// Default cap for formula-verification sweeps (10 points at `N = 5`).
pub const VERIFY_BUDGET: u32 = 10;
/// Above this size the CLI warns about runtime before running.
pub const WARN_THRESHOLD: u32 = 12;

/// Justification recorded in every report for the connected-union
/// restriction of the search space.
pub const CONNECTED_UNION_NOTE: &str = "search restricted to connected unions: a configuration \
with disconnected union is strictly improvable by translating one component into contact \
(gaining at least one bond worth at least beta), so the restricted minimum is the global one";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OracleError {
    EmptyConfiguration,
    BudgetExceeded { total: u32, budget: u32 },
    /// `verify_formula` needs an exact rational `beta <= 1/2`.
    BetaNotExactAtMostHalf,
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleError::EmptyConfiguration => write!(f, "N_A + N_B must be at least 1"),
            OracleError::BudgetExceeded { total, budget } => {
                write!(f, "{total} points exceed the search budget of {budget}")
            }
            OracleError::BetaNotExactAtMostHalf => {
                write!(f, "formula verification needs an exact rational beta <= 1/2")
            }
        }
    }
}

/// A fixed polyomino: cells relative to the growth origin, plus the list of
/// unit-distance cell pairs.
#[derive(Clone, Debug)]
pub struct Shape {
    pub cells: Vec<(i8, i8)>,
    pub bonds: Vec<(u8, u8)>,
}

const MAX_SHAPE: usize = 16;

struct Board {
    // x in [-(n-1), n-1], y in [0, n-1]; origin at (n-1, 0).
    state: Vec<u8>, // 0 free, 1 frontier/used, 2 occupied
    n: usize,
    width: usize,
}

impl Board {
    fn new(n: usize) -> Board {
        Board { state: alloc::vec![0u8; (2 * n - 1) * n], n, width: 2 * n - 1 }
    }

    fn idx(&self, x: i32, y: i32) -> usize {
        (y as usize) * self.width + (x + self.n as i32 - 1) as usize
    }

    /// Cells eligible for growth: the half-plane `y > 0` plus `y = 0, x >= 0`,
    /// clipped to the board. This pins the origin as the leftmost cell of
    /// the bottom row, so each fixed polyomino is produced exactly once.
    fn allowed(&self, x: i32, y: i32) -> bool {
        let n = self.n as i32;
        if y < 0 || y >= n || x <= -(n) || x >= n {
            return false;
        }
        y > 0 || x >= 0
    }
}

fn grow(
    board: &mut Board,
    untried: &mut Vec<(i32, i32)>,
    current: &mut Vec<(i32, i32)>,
    size: usize,
    out: &mut Vec<Shape>,
) {
    while let Some((x, y)) = untried.pop() {
        let id = board.idx(x, y);
        board.state[id] = 2;
        current.push((x, y));
        if current.len() == size {
            out.push(shape_of(current));
        } else {
            let mut added: Vec<(i32, i32)> = Vec::with_capacity(4);
            for (dx, dy) in [(1, 0), (-1, 0), (0, 1), (0, -1)] {
                let (nx, ny) = (x + dx, y + dy);
                if board.allowed(nx, ny) {
                    let nid = board.idx(nx, ny);
                    if board.state[nid] == 0 {
                        board.state[nid] = 1;
                        added.push((nx, ny));
                    }
                }
            }
            let mut next = untried.clone();
            next.extend(added.iter().copied());
            grow(board, &mut next, current, size, out);
            for &(nx, ny) in &added {
                let nid = board.idx(nx, ny);
                board.state[nid] = 0;
            }
        }
        current.pop();
        // Stays blocked for the remainder of this level; the frontier flag
        // is cleared by whoever discovered the cell.
        board.state[id] = 1;
    }
}

fn shape_of(cells: &[(i32, i32)]) -> Shape {
    let cs: Vec<(i8, i8)> = cells.iter().map(|&(x, y)| (x as i8, y as i8)).collect();
    let mut bonds = Vec::new();
    for i in 0..cs.len() {
        for j in (i + 1)..cs.len() {
            let dx = (cs[i].0 - cs[j].0) as i32;
            let dy = (cs[i].1 - cs[j].1) as i32;
            if dx.abs() + dy.abs() == 1 {
                bonds.push((i as u8, j as u8));
            }
        }
    }
    Shape { cells: cs, bonds }
}

/// Every fixed polyomino of `size` cells, each exactly once up to
/// translation, in a deterministic order.
pub fn enumerate_shapes(size: u32) -> Vec<Shape> {
    assert!(size >= 1 && size as usize <= MAX_SHAPE, "shape size out of range");
    let mut board = Board::new(size as usize);
    let mut out = Vec::new();
    let mut untried = alloc::vec![(0, 0)];
    let origin = board.idx(0, 0);
    board.state[origin] = 1;
    let mut current = Vec::new();
    grow(&mut board, &mut untried, &mut current, size as usize, &mut out);
    out
}

/// Exactly comparable energy key; larger is lower energy. For exact
/// `beta = p/q` the key is `intra*q + cross*p` (so `E = -key/q`); float
/// mode carries `intra + cross*beta` with the tie threshold.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum EnergyKey {
    Exact(i64),
    Approx(f64),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum KeyOrd {
    Better,
    Tie,
    Worse,
}

fn key_cmp(candidate: &EnergyKey, incumbent: &EnergyKey) -> KeyOrd {
    match (candidate, incumbent) {
        (EnergyKey::Exact(a), EnergyKey::Exact(b)) => match a.cmp(b) {
            core::cmp::Ordering::Greater => KeyOrd::Better,
            core::cmp::Ordering::Equal => KeyOrd::Tie,
            core::cmp::Ordering::Less => KeyOrd::Worse,
        },
        (EnergyKey::Approx(a), EnergyKey::Approx(b)) => {
            if (a - b).abs() < APPROX_TIE_EPS {
                KeyOrd::Tie
            } else if a > b {
                KeyOrd::Better
            } else {
                KeyOrd::Worse
            }
        }
        _ => unreachable!("mixed key modes"),
    }
}

/// Best assignments over a slice of shapes. `shape` indices are relative to
/// the slice given to [`scan_shapes`]; [`merge_scans`] rebases them.
#[derive(Clone, Debug)]
pub struct ScanResult {
    pub best: Option<EnergyKey>,
    /// `(shape index, assignment mask, intra bonds, cross bonds)` of every
    /// optimum found.
    pub hits: Vec<(usize, u32, u32, u32)>,
}

/// Scan every phase assignment with `n_a` A-points over `shapes`,
/// tracking the exact minimum energy.
pub fn scan_shapes(shapes: &[Shape], n_a: u32, beta: &Beta) -> ScanResult {
    let mut best: Option<EnergyKey> = None;
    let mut hits: Vec<(usize, u32, u32, u32)> = Vec::new();
    for (si, shape) in shapes.iter().enumerate() {
        let n = shape.cells.len() as u32;
        debug_assert!(n_a <= n);
        // Gosper's hack over n_a-subsets of n bits; mask bit set = phase A.
        let mut mask: u32 = if n_a == 0 { 0 } else { (1u32 << n_a) - 1 };
        let last: u32 = if n_a == 0 { 0 } else { ((1u32 << n_a) - 1) << (n - n_a) };
        loop {
            let mut intra = 0u32;
            let mut cross = 0u32;
            for &(i, j) in &shape.bonds {
                if ((mask >> i) ^ (mask >> j)) & 1 == 0 {
                    intra += 1;
                } else {
                    cross += 1;
                }
            }
            let key = match *beta {
                Beta::Exact { num, den } => {
                    EnergyKey::Exact(intra as i64 * den + cross as i64 * num)
                }
                Beta::Approx(v) => EnergyKey::Approx(intra as f64 + cross as f64 * v),
            };
            let ord = match &best {
                None => KeyOrd::Better,
                Some(b) => key_cmp(&key, b),
            };
            match ord {
                KeyOrd::Better => {
                    best = Some(key);
                    hits.clear();
                    hits.push((si, mask, intra, cross));
                }
                KeyOrd::Tie => hits.push((si, mask, intra, cross)),
                KeyOrd::Worse => {}
            }
            if mask == last || n_a == 0 {
                break;
            }
            // Next subset with the same popcount.
            let c = mask & mask.wrapping_neg();
            let r = mask + c;
            mask = (((r ^ mask) >> 2) / c) | r;
        }
    }
    ScanResult { best, hits }
}

/// Merge two scan results whose shape indices are relative to consecutive
/// slices; `offset` is the global index of the second slice's first shape.
pub fn merge_scans(mut acc: ScanResult, mut next: ScanResult, offset: usize) -> ScanResult {
    for hit in &mut next.hits {
        hit.0 += offset;
    }
    match (&acc.best, &next.best) {
        (_, None) => acc,
        (None, _) => next,
        (Some(a), Some(b)) => match key_cmp(b, a) {
            KeyOrd::Better => next,
            KeyOrd::Worse => acc,
            KeyOrd::Tie => {
                acc.hits.extend(next.hits);
                acc
            }
        },
    }
}

fn config_of(shape: &Shape, mask: u32) -> Configuration {
    Configuration::from_points(shape.cells.iter().enumerate().map(|(i, &(x, y))| {
        let phase = if (mask >> i) & 1 == 1 { Phase::A } else { Phase::B };
        (LatticePoint::new(x as i64, y as i64), phase)
    }))
    .expect("shape cells are distinct")
}

/// Oracle output: minimal energy plus all minimisers up to isometry, under
/// both phase-swap conventions.
#[derive(Clone, Debug)]
pub struct MinimiserReport {
    /// The minimum evaluated at `beta`.
    pub min_energy: BetaValue,
    /// Affine form of one optimal configuration's energy (distinct optima
    /// may have different affine forms that coincide at this `beta`).
    pub min_energy_affine: AffineInBeta,
    /// Minimisers deduplicated by canonical form without phase-swap
    /// identification, sorted canonically.
    pub minimisers_no_swap: Vec<Configuration>,
    /// Minimisers deduplicated with A/B relabeling identified
    /// (when `N_A = N_B`).
    pub minimisers_with_swap: Vec<Configuration>,
    /// Number of connected-union shapes enumerated.
    pub shapes_searched: u64,
    /// Why the connected-union restriction is globally exact.
    pub soundness_note: &'static str,
    /// Float-approx mode only: near-ties were folded into the minimum.
    pub approx_tie: bool,
}

fn check_budget(n_a: u32, n_b: u32, budget: u32) -> Result<u32, OracleError> {
    let total = n_a + n_b;
    if total == 0 {
        return Err(OracleError::EmptyConfiguration);
    }
    if total > budget || total as usize > MAX_SHAPE {
        return Err(OracleError::BudgetExceeded { total, budget: budget.min(MAX_SHAPE as u32) });
    }
    Ok(total)
}

/// Assemble the report from scan hits: build each optimal configuration,
/// deduplicate by canonical form under both conventions, sort.
pub fn report_from_scan(
    shapes: &[Shape],
    scan: &ScanResult,
    beta: &Beta,
) -> MinimiserReport {
    type Encoding = Vec<(i64, i64, u8)>;
    let mut reps_no_swap: Vec<(Encoding, Configuration)> = Vec::new();
    let mut reps_with_swap: Vec<Encoding> = Vec::new();
    let mut min_affine = AffineInBeta::ZERO;
    for &(si, mask, intra, cross) in &scan.hits {
        let cfg = config_of(&shapes[si], mask);
        min_affine = AffineInBeta::new(-(intra as i64), -(cross as i64));
        let enc = canonical_encoding(&cfg, false);
        if reps_no_swap.iter().all(|(e, _)| *e != enc) {
            let canon = crate::geometry::canonical_form(&cfg, false);
            reps_no_swap.push((enc, canon));
        }
        let enc_swap = canonical_encoding(&cfg, true);
        if !reps_with_swap.contains(&enc_swap) {
            reps_with_swap.push(enc_swap);
        }
    }
    reps_no_swap.sort_by(|(a, _), (b, _)| a.cmp(b));
    reps_with_swap.sort();
    let minimisers_no_swap: Vec<Configuration> =
        reps_no_swap.into_iter().map(|(_, c)| c).collect();
    // Canonical forms under the swap convention, rebuilt from encodings.
    let minimisers_with_swap: Vec<Configuration> = reps_with_swap
        .iter()
        .map(|enc| {
            Configuration::from_points(enc.iter().map(|&(x, y, ph)| {
                (LatticePoint::new(x, y), if ph == 0 { Phase::A } else { Phase::B })
            }))
            .expect("encodings are duplicate-free")
        })
        .collect();
    let approx_tie = matches!(beta, Beta::Approx(_))
        && scan.hits.windows(2).any(|w| (w[0].2, w[0].3) != (w[1].2, w[1].3));
    MinimiserReport {
        min_energy: min_affine.eval(beta),
        min_energy_affine: min_affine,
        minimisers_no_swap,
        minimisers_with_swap,
        shapes_searched: shapes.len() as u64,
        soundness_note: CONNECTED_UNION_NOTE,
        approx_tie,
    }
}

/// Exhaustively enumerate all `(N_A, N_B)` configurations with connected
/// union and return the exact global minimisers. `budget` caps
/// `N_A + N_B` (default [`DEFAULT_BUDGET`]).
pub fn enumerate_minimisers(
    n_a: u32,
    n_b: u32,
    beta: &Beta,
    budget: u32,
) -> Result<MinimiserReport, OracleError> {
    let total = check_budget(n_a, n_b, budget)?;
    let shapes = enumerate_shapes(total);
    let scan = scan_shapes(&shapes, n_a, beta);
    Ok(report_from_scan(&shapes, &scan, beta))
}

/// The oracle's fast path: the exact minimal energy only, no minimiser
/// list (capped only by the hard shape-size limit).
pub fn min_energy_only(n_a: u32, n_b: u32, beta: &Beta) -> Result<BetaValue, OracleError> {
    let total = check_budget(n_a, n_b, MAX_SHAPE as u32)?;
    let shapes = enumerate_shapes(total);
    let scan = scan_shapes(&shapes, n_a, beta);
    let &(_, _, intra, cross) = scan.hits.first().expect("every size has a configuration");
    Ok(AffineInBeta::new(-(intra as i64), -(cross as i64)).eval(beta))
}

/// One line of a formula-verification sweep.
#[derive(Clone, Debug, PartialEq)]
pub struct FormulaCheck {
    pub n: u64,
    /// `2*E_min + 8N` from the oracle.
    pub oracle_perimeter: Rational64,
    /// `min_h 4*ceil(N/h) + 2h(2-beta)`.
    pub formula_perimeter: Rational64,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct FormulaReport {
    pub checks: Vec<FormulaCheck>,
}

impl FormulaReport {
    pub fn all_ok(&self) -> bool {
        self.checks.iter().all(|c| c.ok)
    }
}

/// For each `N <= n_max` assert `2*E_min(N,N) + 8N` equals the closed-form
/// minimal perimeter, bit-exactly. Needs an exact rational `beta <= 1/2`;
/// `budget` caps `2N` (default [`VERIFY_BUDGET`]).
pub fn verify_formula(n_max: u32, beta: &Beta, budget: u32) -> Result<FormulaReport, OracleError> {
    if !beta.is_exact() || !beta.at_most_half() {
        return Err(OracleError::BetaNotExactAtMostHalf);
    }
    let mut checks = Vec::new();
    for n in 1..=n_max {
        check_budget(n, n, budget)?;
        let e_min = match min_energy_only(n, n, beta)? {
            BetaValue::Exact(r) => r,
            BetaValue::Approx(_) => unreachable!("beta is exact"),
        };
        let oracle_perimeter = e_min * 2 + Rational64::from_integer(8 * n as i64);
        let formula = min_perimeter(n as u64, beta).map_err(|e| match e {
            SolverError::ZeroSize => OracleError::EmptyConfiguration,
            _ => OracleError::BetaNotExactAtMostHalf,
        })?;
        let formula_perimeter = match formula.min_perimeter {
            BetaValue::Exact(r) => r,
            BetaValue::Approx(_) => unreachable!("beta is exact"),
        };
        checks.push(FormulaCheck {
            n: n as u64,
            oracle_perimeter,
            formula_perimeter,
            ok: oracle_perimeter == formula_perimeter,
        });
    }
    Ok(FormulaReport { checks })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixed_polyomino_counts() {
        // A001168: fixed polyominoes by cell count.
        let expected = [1usize, 2, 6, 19, 63, 216, 760];
        for (i, &want) in expected.iter().enumerate() {
            assert_eq!(enumerate_shapes(i as u32 + 1).len(), want, "size {}", i + 1);
        }
    }

    #[test]
    fn small_catalogs() {
        let half = Beta::half();
        let r21 = enumerate_minimisers(2, 1, &half, DEFAULT_BUDGET).unwrap();
        assert_eq!(r21.minimisers_no_swap.len(), 2);

        let r11 = enumerate_minimisers(1, 1, &half, DEFAULT_BUDGET).unwrap();
        assert_eq!(r11.min_energy_affine, AffineInBeta::new(0, -1));
        assert_eq!(r11.minimisers_no_swap.len(), 1);

        let r33 = enumerate_minimisers(3, 3, &half, DEFAULT_BUDGET).unwrap();
        assert_eq!(r33.minimisers_no_swap.len(), 2);
    }

    #[test]
    fn min_energy_examples() {
        let half = Beta::half();
        let e11 = min_energy_only(1, 1, &half).unwrap();
        assert_eq!(e11, BetaValue::Exact(Rational64::new(-1, 2)));
        let e33 = min_energy_only(3, 3, &half).unwrap();
        assert_eq!(e33, BetaValue::Exact(Rational64::new(-11, 2)));
    }

    #[test]
    fn formula_matches_oracle_to_three() {
        for beta in [Beta::half(), Beta::exact(1, 4).unwrap()] {
            let report = verify_formula(3, &beta, VERIFY_BUDGET).unwrap();
            assert!(report.all_ok(), "{report:?}");
        }
    }

    #[test]
    fn budget_is_enforced() {
        let half = Beta::half();
        assert!(matches!(
            enumerate_minimisers(0, 0, &half, DEFAULT_BUDGET),
            Err(OracleError::EmptyConfiguration)
        ));
        assert!(matches!(
            enumerate_minimisers(8, 8, &half, DEFAULT_BUDGET),
            Err(OracleError::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn parallel_kernel_matches_sequential() {
        let half = Beta::half();
        let shapes = enumerate_shapes(6);
        let whole = scan_shapes(&shapes, 3, &half);
        let (left, right) = shapes.split_at(shapes.len() / 2);
        let merged = merge_scans(
            scan_shapes(left, 3, &half),
            scan_shapes(right, 3, &half),
            left.len(),
        );
        assert_eq!(whole.best, merged.best);
        assert_eq!(whole.hits, merged.hits);
    }
}
