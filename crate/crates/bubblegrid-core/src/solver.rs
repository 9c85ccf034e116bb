//! Closed-form optimization for equal phase sizes: the minimal-perimeter
//! formula `min_h 4*ceil(N/h) + 2h(2-beta)`, the explicit two-rectangle
//! builder attaining it, the optimal Class IV family, and continuum/Wulff
//! diagnostics.

use alloc::vec::Vec;
use core::fmt;

use crate::beta::{AffineInBeta, AffineOrd, Beta, BetaValue};
use crate::lattice::{Configuration, LatticePoint, Phase};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SolverError {
    ZeroSize,
    ZeroHeight,
    /// The Class IV family needs an exact rational `beta <= 1/2`.
    BetaNotExactAtMostHalf,
    /// Wulff discrepancy is defined for `N_A = N_B >= 1`.
    UnbalancedPhases,
}

impl fmt::Display for SolverError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SolverError::ZeroSize => write!(f, "N must be at least 1"),
            SolverError::ZeroHeight => write!(f, "h must be at least 1"),
            SolverError::BetaNotExactAtMostHalf => {
                write!(f, "requires an exact rational beta with beta <= 1/2")
            }
            SolverError::UnbalancedPhases => {
                write!(f, "requires N_A = N_B >= 1")
            }
        }
    }
}

/// Result of the closed-form minimal-perimeter search.
#[derive(Clone, Debug, PartialEq)]
pub struct SolveResult {
    /// `min_h 4*ceil(N/h) + 2h(2-beta)` as the affine form of the best `h`
    /// (the smallest optimal one).
    pub min_perimeter_affine: AffineInBeta,
    /// The same minimum evaluated at `beta`.
    pub min_perimeter: BetaValue,
    /// Every `h` attaining the minimum, ascending. A singleton for
    /// irrational `beta`.
    pub optimal_heights: Vec<u64>,
    /// The real minimiser `sqrt(2N/(2-beta))` of the relaxed objective.
    pub hbar: f64,
    /// Closed integer hull of the proof's search interval, clamped to
    /// `[1, N]`; every optimal `h` lies inside.
    pub search_window: (u64, u64),
    /// True when `beta <= 1/2`, the regime in which the formula is proven
    /// to be the global optimum (the value is still computed otherwise).
    pub certified_optimal: bool,
    /// Float-approx mode only: some comparison in the scan was closer than
    /// the tie threshold, so `optimal_heights` may list near-ties.
    pub approx_tie: bool,
}

fn ceil_div(n: u64, h: u64) -> u64 {
    n.div_ceil(h)
}

/// The objective `4*ceil(N/h) + 2h(2-beta)` as an affine value.
pub fn height_perimeter(n: u64, h: u64) -> AffineInBeta {
    AffineInBeta::new(4 * (ceil_div(n, h) + h) as i64, -2 * h as i64)
}

/// The search interval from the height-localization argument:
/// `2/(2-b) + sqrt(2N/(2-b)) +- 2/(2-b) * sqrt(1 + sqrt(2N(2-b)))`.
fn search_window(n: u64, beta_value: f64) -> (u64, u64) {
    let two_minus = 2.0 - beta_value;
    let c = 2.0 / two_minus;
    let m = libm::sqrt(2.0 * n as f64 / two_minus);
    let w = libm::sqrt(1.0 + libm::sqrt(2.0 * n as f64 * two_minus));
    // One unit of slack on each side guards the float rounding of the hull.
    let lo = libm::floor(c + m - c * w) - 1.0;
    let hi = libm::ceil(c + m + c * w) + 1.0;
    let lo = if lo < 1.0 { 1 } else { lo as u64 };
    let hi = if hi >= n as f64 { n } else { hi as u64 };
    (lo, hi.max(lo))
}

/// Minimal lattice perimeter for `N_A = N_B = N`: scans the localized
/// integer window of the objective and compares exactly at `beta`.
/// For `beta > 1/2` the value is the formula's minimum but is not certified
/// to be the global configuration optimum.
pub fn min_perimeter(n: u64, beta: &Beta) -> Result<SolveResult, SolverError> {
    if n == 0 {
        return Err(SolverError::ZeroSize);
    }
    let (lo, hi) = search_window(n, beta.as_f64());
    let mut best: Option<AffineInBeta> = None;
    let mut heights: Vec<u64> = Vec::new();
    let mut approx_tie = false;
    for h in lo..=hi {
        let p = height_perimeter(n, h);
        match best {
            None => {
                best = Some(p);
                heights.push(h);
            }
            Some(b) => match p.cmp_at(&b, beta) {
                AffineOrd::Less => {
                    best = Some(p);
                    heights.clear();
                    heights.push(h);
                }
                AffineOrd::Equal => heights.push(h),
                AffineOrd::ApproxTie => {
                    approx_tie = true;
                    heights.push(h);
                }
                AffineOrd::Greater => {}
            },
        }
    }
    let best_affine = height_perimeter(n, heights[0]);
    Ok(SolveResult {
        min_perimeter_affine: best_affine,
        min_perimeter: best_affine.eval(beta),
        optimal_heights: heights,
        hbar: libm::sqrt(2.0 * n as f64 / (2.0 - beta.as_f64())),
        search_window: (lo, hi),
        certified_optimal: beta.at_most_half(),
        approx_tie,
    })
}

/// Exhaustive scan over every `h` in `[1, N]`; the window-correctness
/// oracle for [`min_perimeter`].
pub fn min_perimeter_full_scan(n: u64, beta: &Beta) -> Result<AffineInBeta, SolverError> {
    if n == 0 {
        return Err(SolverError::ZeroSize);
    }
    let mut best = height_perimeter(n, 1);
    for h in 2..=n {
        let p = height_perimeter(n, h);
        if p.cmp_at(&best, beta) == AffineOrd::Less {
            best = p;
        }
    }
    Ok(best)
}

/// The explicit equal-size solution at height `h`: with `N = h*l + r`,
/// phase A fills columns `[-l+1, 0]` over rows `[1, h]` plus a partial
/// column `x = -l`, `y` in `[1, r]`; phase B is the mirror image on the
/// right. Its perimeter is exactly `4*ceil(N/h) + 2h(2-beta)`.
pub fn build_explicit(n: u64, h: u64) -> Result<Configuration, SolverError> {
    if n == 0 {
        return Err(SolverError::ZeroSize);
    }
    if h == 0 {
        return Err(SolverError::ZeroHeight);
    }
    let l = (n / h) as i64;
    let r = (n % h) as i64;
    let h = h as i64;
    let mut pts = Vec::with_capacity(2 * n as usize);
    for x in (1 - l)..=0 {
        for y in 1..=h {
            pts.push((LatticePoint::new(x, y), Phase::A));
        }
    }
    for y in 1..=r {
        pts.push((LatticePoint::new(-l, y), Phase::A));
    }
    for x in 1..=l {
        for y in 1..=h {
            pts.push((LatticePoint::new(x, y), Phase::B));
        }
    }
    for y in 1..=r {
        pts.push((LatticePoint::new(l + 1, y), Phase::B));
    }
    Ok(Configuration::from_points(pts).expect("cells are disjoint"))
}

/// An optimal Class IV family member.
#[derive(Clone, Debug, PartialEq)]
pub struct Class4Build {
    pub config: Configuration,
    /// Reduced integers with `r/s = 1 - beta/2`.
    pub r: u64,
    pub s: u64,
    /// `N_A = N_B = k^2 r s + 1`.
    pub n: u64,
}

/// The optimal Class IV configuration at scale `k` for exact rational
/// `beta <= 1/2`: with `r/s = 1 - beta/2` reduced, phase A is the rectangle
/// `[-kr+1, 0] x [1, ks]` plus the point `(1, ks)` and phase B the
/// rectangle `[1, kr] x [0, ks-1]` plus `(0, 0)`. Its perimeter equals
/// `min_perimeter(k^2 rs + 1, beta)`.
pub fn build_class4_family(beta: &Beta, k: u64) -> Result<Class4Build, SolverError> {
    let Beta::Exact { num, den } = *beta else {
        return Err(SolverError::BetaNotExactAtMostHalf);
    };
    if 2 * num > den {
        return Err(SolverError::BetaNotExactAtMostHalf);
    }
    if k == 0 {
        return Err(SolverError::ZeroSize);
    }
    // 1 - beta/2 = (2q - p) / (2q), reduced.
    let raw_r = (2 * den - num) as u64;
    let raw_s = (2 * den) as u64;
    let g = {
        let (mut a, mut b) = (raw_r, raw_s);
        while b != 0 {
            let t = a % b;
            a = b;
            b = t;
        }
        a
    };
    let (r, s) = (raw_r / g, raw_s / g);
    let (kr, ks) = ((k * r) as i64, (k * s) as i64);
    let mut pts = Vec::new();
    for x in (1 - kr)..=0 {
        for y in 1..=ks {
            pts.push((LatticePoint::new(x, y), Phase::A));
        }
    }
    pts.push((LatticePoint::new(1, ks), Phase::A));
    for x in 1..=kr {
        for y in 0..=(ks - 1) {
            pts.push((LatticePoint::new(x, y), Phase::B));
        }
    }
    pts.push((LatticePoint::new(0, 0), Phase::B));
    let config = Configuration::from_points(pts).expect("cells are disjoint");
    Ok(Class4Build { config, r, s, n: k * k * r * s + 1 })
}

/// An axis-aligned real rectangle `(x0, x1) x (y0, y1)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Rect {
    pub x0: f64,
    pub x1: f64,
    pub y0: f64,
    pub y1: f64,
}

impl Rect {
    pub fn area(&self) -> f64 {
        (self.x1 - self.x0) * (self.y1 - self.y0)
    }

    fn contains(&self, x: f64, y: f64, margin: f64) -> bool {
        x >= self.x0 - margin && x <= self.x1 + margin && y >= self.y0 - margin && y <= self.y1 + margin
    }
}

/// The continuum Wulff shapes: two abutting rectangles of unit area,
/// `rect_a = (-sqrt((2-b)/2), 0) x (0, sqrt(2/(2-b)))` and its mirror.
pub fn wulff_rectangles(beta: &Beta) -> (Rect, Rect) {
    let b = beta.as_f64();
    let w = libm::sqrt((2.0 - b) / 2.0);
    let h = libm::sqrt(2.0 / (2.0 - b));
    (
        Rect { x0: -w, x1: 0.0, y0: 0.0, y1: h },
        Rect { x0: 0.0, x1: w, y0: 0.0, y1: h },
    )
}

/// The minimal continuum double-bubble energy `4*sqrt(4 - 2*beta)`
/// (valid as the optimum for `beta <= 1/2`).
pub fn continuum_energy(beta: &Beta) -> f64 {
    4.0 * libm::sqrt(4.0 - 2.0 * beta.as_f64())
}

/// Fraction of points falling outside the Wulff rectangles after rescaling
/// by `1/sqrt(N)` and centroid alignment, with the rectangles dilated by
/// the margin `N^(-1/4)`; the maximum over the two phases is returned.
/// The margin and this diagnostic are artifact choices, not paper values.
pub fn wulff_discrepancy(config: &Configuration, beta: &Beta) -> Result<f64, SolverError> {
    let n = config.n_a();
    if n == 0 || n != config.n_b() {
        return Err(SolverError::UnbalancedPhases);
    }
    let n = n as f64;
    let scale = 1.0 / libm::sqrt(n);
    let margin = 1.0 / libm::sqrt(libm::sqrt(n));
    let (rect_a, rect_b) = wulff_rectangles(beta);

    let total = config.len() as f64;
    let (sx, sy) = config
        .iter()
        .fold((0.0f64, 0.0f64), |(sx, sy), (p, _)| (sx + p.x as f64, sy + p.y as f64));
    let (cx, cy) = (sx * scale / total, sy * scale / total);
    // Target centroid of the union of the two rectangles.
    let (tx, ty) = (0.0, rect_a.y1 / 2.0);
    let (dx, dy) = (tx - cx, ty - cy);

    let mut outside_a = 0usize;
    let mut outside_b = 0usize;
    for (p, ph) in config.iter() {
        let x = p.x as f64 * scale + dx;
        let y = p.y as f64 * scale + dy;
        match ph {
            Phase::A => {
                if !rect_a.contains(x, y, margin) {
                    outside_a += 1;
                }
            }
            Phase::B => {
                if !rect_b.contains(x, y, margin) {
                    outside_b += 1;
                }
            }
        }
    }
    Ok((outside_a.max(outside_b)) as f64 / n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::perimeter;
    use num_rational::Rational64;

    #[test]
    fn min_perimeter_small_cases() {
        let half = Beta::half();
        let r = min_perimeter(4, &half).unwrap();
        assert_eq!(r.min_perimeter, BetaValue::Exact(Rational64::new(14, 1)));
        assert_eq!(r.optimal_heights, alloc::vec![2]);
        assert!(r.certified_optimal);

        let r1 = min_perimeter(1, &half).unwrap();
        assert_eq!(r1.min_perimeter_affine, AffineInBeta::new(8, -2));
        assert_eq!(r1.optimal_heights, alloc::vec![1]);

        let r13 = min_perimeter(13, &half).unwrap();
        assert_eq!(r13.min_perimeter, BetaValue::Exact(Rational64::new(27, 1)));
        assert_eq!(r13.optimal_heights, alloc::vec![5]);
    }

    #[test]
    fn window_agrees_with_full_scan() {
        for beta in [Beta::half(), Beta::exact(1, 4).unwrap(), Beta::exact(1, 3).unwrap()] {
            for n in 1..=400u64 {
                let windowed = min_perimeter(n, &beta).unwrap().min_perimeter_affine;
                let full = min_perimeter_full_scan(n, &beta).unwrap();
                assert_eq!(windowed.eval(&beta), full.eval(&beta), "n = {n}");
            }
        }
    }

    #[test]
    fn optimal_heights_lie_in_window() {
        let beta = Beta::exact(2, 5).unwrap();
        for n in [1u64, 2, 7, 36, 100, 9999] {
            let r = min_perimeter(n, &beta).unwrap();
            for &h in &r.optimal_heights {
                assert!(r.search_window.0 <= h && h <= r.search_window.1);
                assert!((h as f64 - r.hbar).abs() <= 4.0 * (n as f64).powf(0.25) + 2.0);
            }
        }
    }

    #[test]
    fn build_explicit_examples() {
        let c = build_explicit(5, 3).unwrap();
        assert_eq!(c.n_a(), 5);
        assert_eq!(c.n_b(), 5);
        assert_eq!(perimeter(&c), AffineInBeta::new(20, -6));

        // N = 4, h = 2 reproduces the unique 4+4 minimiser up to isometry.
        let c4 = build_explicit(4, 2).unwrap();
        let fig7 = Configuration::from_coords(
            &[(0, 0), (0, 1), (1, 0), (1, 1)],
            &[(2, 0), (2, 1), (3, 0), (3, 1)],
        );
        assert_eq!(
            crate::geometry::canonical_form(&c4, false),
            crate::geometry::canonical_form(&fig7, false)
        );

        // N = h: two columns side by side.
        let cc = build_explicit(3, 3).unwrap();
        assert_eq!(cc.bounding_box().unwrap().width(), 2);
        assert!(build_explicit(0, 1).is_err());
        assert!(build_explicit(1, 0).is_err());
    }

    #[test]
    fn explicit_builder_identity_sample() {
        for n in [1u64, 2, 3, 7, 12, 40] {
            for h in 1..=n {
                assert_eq!(
                    perimeter(&build_explicit(n, h).unwrap()),
                    height_perimeter(n, h),
                    "n = {n}, h = {h}"
                );
            }
        }
    }

    #[test]
    fn class4_family_examples() {
        let half = Beta::half();
        let b1 = build_class4_family(&half, 1).unwrap();
        assert_eq!((b1.r, b1.s, b1.n), (3, 4, 13));
        assert_eq!(b1.config.n_a(), 13);
        assert_eq!(b1.config.n_b(), 13);
        assert_eq!(
            perimeter(&b1.config).eval(&half),
            BetaValue::Exact(Rational64::new(27, 1))
        );

        let b2 = build_class4_family(&half, 2).unwrap();
        assert_eq!(b2.n, 49);
        assert_eq!(
            perimeter(&b2.config).eval(&half),
            BetaValue::Exact(Rational64::new(51, 1))
        );

        let two_fifths = Beta::exact(2, 5).unwrap();
        let b3 = build_class4_family(&two_fifths, 1).unwrap();
        assert_eq!((b3.r, b3.s, b3.n), (4, 5, 21));

        assert!(build_class4_family(&Beta::exact(3, 4).unwrap(), 1).is_err());
        assert!(build_class4_family(&Beta::approx(0.3).unwrap(), 1).is_err());
    }

    #[test]
    fn wulff_rectangle_values() {
        let (a, b) = wulff_rectangles(&Beta::half());
        assert!((a.x1 - a.x0 - 0.8660254).abs() < 1e-6);
        assert!((a.y1 - a.y0 - 1.1547005).abs() < 1e-6);
        assert!((a.area() - 1.0).abs() < 1e-12);
        assert!((b.area() - 1.0).abs() < 1e-12);
        let (a0, _) = wulff_rectangles(&Beta::approx(1e-9).unwrap());
        assert!((a0.x1 - a0.x0 - 1.0).abs() < 1e-6);
    }

    #[test]
    fn continuum_energy_values() {
        assert!((continuum_energy(&Beta::half()) - 4.0 * libm::sqrt(3.0)).abs() < 1e-12);
        assert!((continuum_energy(&Beta::approx(1e-12).unwrap()) - 8.0).abs() < 1e-9);
    }

    #[test]
    fn discrepancy_zero_for_wulff_proportioned_pair() {
        // At beta = 1/2 and N = 12, a 3-wide 4-tall pair scales exactly to
        // the Wulff proportions.
        let mut a = alloc::vec![];
        let mut b = alloc::vec![];
        for x in -2..=0i64 {
            for y in 1..=4i64 {
                a.push((x, y));
                b.push((x + 3, y));
            }
        }
        let cfg = Configuration::from_coords(&a, &b);
        let d = wulff_discrepancy(&cfg, &Beta::half()).unwrap();
        assert_eq!(d, 0.0);
    }

    #[test]
    fn discrepancy_large_for_degenerate_bar() {
        let n = 60i64;
        let a: Vec<(i64, i64)> = (0..n).map(|x| (x, 0)).collect();
        let b: Vec<(i64, i64)> = (0..n).map(|x| (x + n, 0)).collect();
        let cfg = Configuration::from_coords(&a, &b);
        let d = wulff_discrepancy(&cfg, &Beta::half()).unwrap();
        assert!(d >= 0.5, "got {d}");
    }
}
