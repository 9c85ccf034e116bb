//! The interaction parameter `beta` and exact affine values `c0 + c1*beta`.
//!
//! Every energy and perimeter in this model is integer-affine in `beta`, so
//! values are kept symbolic and only evaluated or compared once a concrete
//! `beta` is supplied. At an exact rational `beta = p/q` the comparison
//! `c0 + c1 p/q <=> d0 + d1 p/q` reduces to integers; in float-approx mode
//! (irrational `beta`) any comparison closer than [`APPROX_TIE_EPS`] is
//! reported as a tie instead of being resolved silently.

use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_rational::Rational64;

/// Comparisons in float-approx mode closer than this are ties.
pub const APPROX_TIE_EPS: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BetaError {
    /// `beta` must lie strictly between 0 and 1.
    OutOfRange,
    ZeroDenominator,
    NotFinite,
}

impl fmt::Display for BetaError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BetaError::OutOfRange => write!(f, "beta must lie strictly between 0 and 1"),
            BetaError::ZeroDenominator => write!(f, "beta denominator must be nonzero"),
            BetaError::NotFinite => write!(f, "beta must be a finite number"),
        }
    }
}

/// The interface weight parameter `beta` in (0,1).
///
/// `Exact` keeps a reduced fraction `num/den` with `0 < num < den`, the
/// default mode; `Approx` is the float escape hatch for irrational `beta`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Beta {
    Exact { num: i64, den: i64 },
    Approx(f64),
}

fn gcd(mut a: i64, mut b: i64) -> i64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a.abs()
}

impl Beta {
    pub fn exact(num: i64, den: i64) -> Result<Beta, BetaError> {
        if den == 0 {
            return Err(BetaError::ZeroDenominator);
        }
        let (num, den) = if den < 0 { (-num, -den) } else { (num, den) };
        if num <= 0 || num >= den {
            return Err(BetaError::OutOfRange);
        }
        let g = gcd(num, den);
        Ok(Beta::Exact { num: num / g, den: den / g })
    }

    pub fn approx(value: f64) -> Result<Beta, BetaError> {
        if !value.is_finite() {
            return Err(BetaError::NotFinite);
        }
        if value <= 0.0 || value >= 1.0 {
            return Err(BetaError::OutOfRange);
        }
        Ok(Beta::Approx(value))
    }

    /// The reference value `beta = 1/2` of the classical double bubble.
    pub fn half() -> Beta {
        Beta::Exact { num: 1, den: 2 }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Beta::Exact { .. })
    }

    pub fn as_f64(&self) -> f64 {
        match *self {
            Beta::Exact { num, den } => num as f64 / den as f64,
            Beta::Approx(v) => v,
        }
    }

    /// True when `beta <= 1/2`, the regime in which the closed-form minimal
    /// perimeter is proven optimal.
    pub fn at_most_half(&self) -> bool {
        match *self {
            Beta::Exact { num, den } => 2 * num <= den,
            Beta::Approx(v) => v <= 0.5,
        }
    }
}

impl fmt::Display for Beta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Beta::Exact { num, den } => write!(f, "{num}/{den}"),
            Beta::Approx(v) => write!(f, "~{v}"),
        }
    }
}

/// Outcome of comparing two affine values at a concrete `beta`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AffineOrd {
    Less,
    Equal,
    Greater,
    /// Float-approx mode only: the values differ by less than
    /// [`APPROX_TIE_EPS`] and the comparison is not resolved.
    ApproxTie,
}

/// An exact value `c0 + c1*beta` with integer coefficients.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineInBeta {
    pub c0: i64,
    pub c1: i64,
}

impl AffineInBeta {
    pub const ZERO: AffineInBeta = AffineInBeta { c0: 0, c1: 0 };

    pub fn new(c0: i64, c1: i64) -> AffineInBeta {
        AffineInBeta { c0, c1 }
    }

    pub fn constant(c0: i64) -> AffineInBeta {
        AffineInBeta { c0, c1: 0 }
    }

    /// Evaluate at `beta`: an exact rational in exact mode, a float otherwise.
    pub fn eval(&self, beta: &Beta) -> BetaValue {
        match *beta {
            Beta::Exact { num, den } => {
                let numer = self
                    .c0
                    .checked_mul(den)
                    .and_then(|t| t.checked_add(self.c1.checked_mul(num)?))
                    .expect("affine value overflows i64 at this beta");
                BetaValue::Exact(Rational64::new(numer, den))
            }
            Beta::Approx(v) => BetaValue::Approx(self.c0 as f64 + self.c1 as f64 * v),
        }
    }

    /// Compare `self` against `other` at `beta`.
    ///
    /// Exact mode is pure integer arithmetic; float mode reports a tie when
    /// the difference is below [`APPROX_TIE_EPS`] (unless the coefficients
    /// are identical, which is an exact equality in any mode).
    pub fn cmp_at(&self, other: &AffineInBeta, beta: &Beta) -> AffineOrd {
        if self == other {
            return AffineOrd::Equal;
        }
        match *beta {
            Beta::Exact { num, den } => {
                let d = (self.c0 as i128 - other.c0 as i128) * den as i128
                    + (self.c1 as i128 - other.c1 as i128) * num as i128;
                match d.cmp(&0) {
                    core::cmp::Ordering::Less => AffineOrd::Less,
                    core::cmp::Ordering::Equal => AffineOrd::Equal,
                    core::cmp::Ordering::Greater => AffineOrd::Greater,
                }
            }
            Beta::Approx(v) => {
                let d = (self.c0 - other.c0) as f64 + (self.c1 - other.c1) as f64 * v;
                if d.abs() < APPROX_TIE_EPS {
                    AffineOrd::ApproxTie
                } else if d < 0.0 {
                    AffineOrd::Less
                } else {
                    AffineOrd::Greater
                }
            }
        }
    }

    /// True when `self <= other` for every `beta` in the closed interval
    /// [0, 1]; affine functions make this an endpoint test.
    pub fn le_for_all_beta(&self, other: &AffineInBeta) -> bool {
        self.c0 <= other.c0 && self.c0 + self.c1 <= other.c0 + other.c1
    }
}

impl Add for AffineInBeta {
    type Output = AffineInBeta;
    fn add(self, rhs: AffineInBeta) -> AffineInBeta {
        AffineInBeta { c0: self.c0 + rhs.c0, c1: self.c1 + rhs.c1 }
    }
}

impl AddAssign for AffineInBeta {
    fn add_assign(&mut self, rhs: AffineInBeta) {
        self.c0 += rhs.c0;
        self.c1 += rhs.c1;
    }
}

impl Sub for AffineInBeta {
    type Output = AffineInBeta;
    fn sub(self, rhs: AffineInBeta) -> AffineInBeta {
        AffineInBeta { c0: self.c0 - rhs.c0, c1: self.c1 - rhs.c1 }
    }
}

impl Neg for AffineInBeta {
    type Output = AffineInBeta;
    fn neg(self) -> AffineInBeta {
        AffineInBeta { c0: -self.c0, c1: -self.c1 }
    }
}

impl Mul<i64> for AffineInBeta {
    type Output = AffineInBeta;
    fn mul(self, rhs: i64) -> AffineInBeta {
        AffineInBeta { c0: self.c0 * rhs, c1: self.c1 * rhs }
    }
}

impl core::iter::Sum for AffineInBeta {
    fn sum<I: Iterator<Item = AffineInBeta>>(iter: I) -> AffineInBeta {
        iter.fold(AffineInBeta::ZERO, |a, b| a + b)
    }
}

/// Prints `c0+c1b` with normalized signs, e.g. `-8-2b`, `16-4b`, `4+0b`.
impl fmt::Display for AffineInBeta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.c1 < 0 { '-' } else { '+' };
        write!(f, "{}{}{}b", self.c0, sign, self.c1.abs())
    }
}

/// An affine value evaluated at a concrete `beta`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum BetaValue {
    Exact(Rational64),
    Approx(f64),
}

impl BetaValue {
    pub fn as_f64(&self) -> f64 {
        match *self {
            BetaValue::Exact(r) => *r.numer() as f64 / *r.denom() as f64,
            BetaValue::Approx(v) => v,
        }
    }
}

impl fmt::Display for BetaValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            BetaValue::Exact(r) => write!(f, "{r}"),
            BetaValue::Approx(v) => write!(f, "{v}"),
        }
    }
}
