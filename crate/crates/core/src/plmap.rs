//! Piecewise-linear lifts of circle homeomorphisms.
//!
//! A [`PlLift`] stores breakpoints `(x, y)` for `x` in `[0, 1)` and stands for
//! the map `F: R -> R` obtained by affine interpolation, extended by
//! `F(x + 1) = F(x) + 1`. The segment after the last breakpoint runs to
//! `(1, y_0 + 1)`.
//!
//! Breakpoint lists always start at `x = 0` and are pruned of interior points
//! that sit on a straight line, so two lifts are equal as maps exactly when
//! their breakpoint lists are equal.

use std::fmt;
use std::ops::Deref;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::numeric::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PlError {
    #[error("breakpoint list is empty")]
    Empty,
    #[error("first breakpoint must have x = 0, found x = {0}")]
    FirstNotAtZero(Rational),
    #[error("breakpoint {index}: x = {x} is outside [0, 1)")]
    XOutOfRange { index: usize, x: Rational },
    #[error("breakpoint {index}: x-coordinates must be strictly increasing")]
    XNotIncreasing { index: usize },
    #[error("breakpoint {index}: y-values must be strictly increasing")]
    YNotIncreasing { index: usize },
    #[error(
        "last y-value {last} must be below y_0 + 1 = {bound} for the map to be a homeomorphism"
    )]
    WrapNotIncreasing {
        last: Box<Rational>,
        bound: Box<Rational>,
    },
    #[error("not a canonical lift: F(0) = {0} is outside [0, 1)")]
    NotCanonical(Rational),
    #[error("malformed element JSON: {0}")]
    Json(String),
}

/// A strictly increasing PL map of the line commuting with `x -> x + 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PlLift {
    points: Vec<(Rational, Rational)>,
}

impl PlLift {
    /// Validates the breakpoint data and prunes collinear interior points.
    pub fn new(points: Vec<(Rational, Rational)>) -> Result<Self, PlError> {
        let first = points.first().ok_or(PlError::Empty)?;
        if !first.0.is_zero() {
            return Err(PlError::FirstNotAtZero(first.0.clone()));
        }
        let one = Rational::one();
        for (index, (x, _)) in points.iter().enumerate() {
            if x.is_negative() || *x >= one {
                return Err(PlError::XOutOfRange {
                    index,
                    x: x.clone(),
                });
            }
        }
        for (index, pair) in points.windows(2).enumerate() {
            if pair[1].0 <= pair[0].0 {
                return Err(PlError::XNotIncreasing { index: index + 1 });
            }
            if pair[1].1 <= pair[0].1 {
                return Err(PlError::YNotIncreasing { index: index + 1 });
            }
        }
        let bound = &points[0].1 + &one;
        let last = &points[points.len() - 1].1;
        if *last >= bound {
            return Err(PlError::WrapNotIncreasing {
                last: Box::new(last.clone()),
                bound: Box::new(bound),
            });
        }
        Ok(Self::from_valid(points))
    }

    // Callers guarantee the invariants; only pruning happens here.
    fn from_valid(points: Vec<(Rational, Rational)>) -> Self {
        let wrap = (Rational::one(), &points[0].1 + &Rational::one());
        let mut kept: Vec<(Rational, Rational)> = Vec::with_capacity(points.len());
        for (i, p) in points.iter().enumerate() {
            if i > 0 {
                let prev = kept.last().expect("first point is always kept");
                let next = points.get(i + 1).unwrap_or(&wrap);
                if collinear(prev, p, next) {
                    continue;
                }
            }
            kept.push(p.clone());
        }
        PlLift { points: kept }
    }

    pub fn identity() -> Self {
        Self::translation(Rational::zero())
    }

    /// The lift `x -> x + c`.
    pub fn translation(c: Rational) -> Self {
        PlLift {
            points: vec![(Rational::zero(), c)],
        }
    }

    pub fn breakpoints(&self) -> &[(Rational, Rational)] {
        &self.points
    }

    pub fn piece_count(&self) -> usize {
        self.points.len()
    }

    pub fn is_identity(&self) -> bool {
        self.points.len() == 1 && self.points[0].1.is_zero()
    }

    /// Breakpoint `i`, where index `len` is the wrap point `(1, y_0 + 1)`.
    fn node(&self, i: usize) -> (Rational, Rational) {
        if i < self.points.len() {
            self.points[i].clone()
        } else {
            (Rational::one(), &self.points[0].1 + &Rational::one())
        }
    }

    fn segment_slope(&self, i: usize) -> Rational {
        let (x0, y0) = &self.points[i];
        let (x1, y1) = self.node(i + 1);
        (y1 - y0) / (x1 - x0)
    }

    /// Slopes of every piece, the wrap piece last.
    pub fn slopes(&self) -> Vec<Rational> {
        (0..self.points.len())
            .map(|i| self.segment_slope(i))
            .collect()
    }

    pub fn evaluate(&self, x: &Rational) -> Rational {
        let shift = x.floor();
        let r = x - &Rational::from_integer(shift.clone());
        let i = self.points.partition_point(|(bx, _)| *bx <= r) - 1;
        let (x0, y0) = &self.points[i];
        let (x1, y1) = self.node(i + 1);
        let y = y0 + &((&r - x0) * (y1 - y0) / (x1 - x0));
        y + Rational::from_integer(shift)
    }

    /// `F^{-1}(y)`.
    pub fn evaluate_inverse(&self, y: &Rational) -> Rational {
        let y_start = &self.points[0].1;
        let shift = (y - y_start).floor();
        let r = y - &Rational::from_integer(shift.clone());
        let i = self.points.partition_point(|(_, by)| *by <= r) - 1;
        let (x0, y0) = &self.points[i];
        let (x1, y1) = self.node(i + 1);
        let x = x0 + &((&r - y0) * (x1 - x0) / (y1 - y0));
        x + Rational::from_integer(shift)
    }

    // Builds a lift from its values at sorted sample points in [0, 1) that
    // include 0 and every corner of the target map.
    fn sampled(mut xs: Vec<Rational>, f: impl Fn(&Rational) -> Rational) -> Self {
        xs.sort();
        xs.dedup();
        debug_assert!(xs.first().is_some_and(Rational::is_zero));
        let points = xs
            .into_iter()
            .map(|x| {
                let y = f(&x);
                (x, y)
            })
            .collect();
        Self::from_valid(points)
    }

    /// `self ∘ inner`, i.e. apply `inner` first.
    pub fn compose(&self, inner: &PlLift) -> PlLift {
        let mut xs: Vec<Rational> = inner.points.iter().map(|(x, _)| x.clone()).collect();
        xs.extend(
            self.points
                .iter()
                .map(|(x, _)| inner.evaluate_inverse(x).fract()),
        );
        Self::sampled(xs, |x| self.evaluate(&inner.evaluate(x)))
    }

    pub fn invert(&self) -> PlLift {
        let mut xs: Vec<Rational> = self.points.iter().map(|(_, y)| y.fract()).collect();
        xs.push(Rational::zero());
        Self::sampled(xs, |y| self.evaluate_inverse(y))
    }

    /// `F^k` for any integer `k`, by repeated squaring.
    pub fn pow(&self, k: i64) -> PlLift {
        let mut base = if k < 0 { self.invert() } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = PlLift::identity();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.compose(&base);
            }
        }
        acc
    }

    /// `F + c` for an integer `c`.
    pub fn shift(&self, c: &BigInt) -> PlLift {
        let c = Rational::from_integer(c.clone());
        PlLift {
            points: self
                .points
                .iter()
                .map(|(x, y)| (x.clone(), y + &c))
                .collect(),
        }
    }

    /// Splits `F` into `F - k` with `(F - k)(0)` in `[0, 1)` and the integer `k`.
    pub fn canonicalize(&self) -> (CanonicalLift, BigInt) {
        let k = self.points[0].1.floor();
        (CanonicalLift(self.shift(&-k.clone())), k)
    }

    /// Exact minimum and maximum of `F(x) - x - p` over one period.
    pub fn extremes(&self, p: &BigInt) -> (Rational, Rational) {
        let p = Rational::from_integer(p.clone());
        let mut values = self.points.iter().map(|(x, y)| y - x - &p);
        let first = values.next().expect("lifts have at least one breakpoint");
        values.fold((first.clone(), first), |(lo, hi), d| {
            if d < lo {
                (d, hi)
            } else if d > hi {
                (lo, d)
            } else {
                (lo, hi)
            }
        })
    }

    /// Smallest `x` in `[0, 1)` with `F(x) = x + p`, if any.
    pub fn displacement_zero(&self, p: &BigInt) -> Option<Rational> {
        let p = Rational::from_integer(p.clone());
        let n = self.points.len();
        for i in 0..n {
            let (x0, y0) = &self.points[i];
            let (x1, y1) = self.node(i + 1);
            let d0 = y0 - x0 - &p;
            if d0.is_zero() {
                return Some(x0.clone());
            }
            let d1 = &y1 - &x1 - &p;
            if d0.is_positive() != d1.is_positive() && !d1.is_zero() {
                // linear on the piece: d(x) = d0 + (x - x0) * (d1 - d0) / (x1 - x0)
                let x = x0 + &(-&d0 * (&x1 - x0) / (d1 - &d0));
                return Some(x);
            }
        }
        None
    }

    /// Membership in Thompson's group T: dyadic breakpoints and values, slopes powers of two.
    pub fn validate_thompson(&self) -> bool {
        self.points
            .iter()
            .all(|(x, y)| x.is_dyadic() && y.is_dyadic())
            && self.slopes().iter().all(Rational::is_power_of_two)
    }
}

fn collinear(a: &(Rational, Rational), b: &(Rational, Rational), c: &(Rational, Rational)) -> bool {
    (&b.1 - &a.1) * (&c.0 - &b.0) == (&c.1 - &b.1) * (&b.0 - &a.0)
}

impl fmt::Debug for PlLift {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("PlLift[")?;
        for (i, (x, y)) in self.points.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{x} -> {y}")?;
        }
        f.write_str("]")
    }
}

/// The lift of a circle homeomorphism normalized so that `F(0)` lies in `[0, 1)`.
///
/// Every circle homeomorphism has exactly one such lift, so this type doubles
/// as the representation of a circle map; equality is circle-map equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CanonicalLift(PlLift);

impl CanonicalLift {
    pub fn new(lift: PlLift) -> Result<Self, PlError> {
        let f0 = &lift.points[0].1;
        if f0.is_negative() || *f0 >= Rational::one() {
            return Err(PlError::NotCanonical(f0.clone()));
        }
        Ok(CanonicalLift(lift))
    }

    pub fn identity() -> Self {
        CanonicalLift(PlLift::identity())
    }

    pub fn lift(&self) -> &PlLift {
        &self.0
    }

    pub fn into_lift(self) -> PlLift {
        self.0
    }

    /// Circle-level product `self ∘ inner`, canonicalized.
    pub fn then_after(&self, inner: &CanonicalLift) -> CanonicalLift {
        self.0.compose(&inner.0).canonicalize().0
    }

    /// Circle-level inverse, canonicalized.
    pub fn inverse(&self) -> CanonicalLift {
        self.0.invert().canonicalize().0
    }

    /// Circle-level power, canonicalized.
    pub fn circle_pow(&self, k: i64) -> CanonicalLift {
        self.0.pow(k).canonicalize().0
    }
}

impl Deref for CanonicalLift {
    type Target = PlLift;
    fn deref(&self) -> &PlLift {
        &self.0
    }
}

impl fmt::Debug for CanonicalLift {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(&self.0, f)
    }
}

/// On-disk element format: `{"breakpoints": [["x", "y"], ...]}` with `p/q` strings.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ElementFile {
    pub breakpoints: Vec<(Rational, Rational)>,
}

impl ElementFile {
    pub fn into_lift(self) -> Result<CanonicalLift, PlError> {
        CanonicalLift::new(PlLift::new(self.breakpoints)?)
    }

    pub fn from_json(text: &str) -> Result<CanonicalLift, PlError> {
        let file: ElementFile =
            serde_json::from_str(text).map_err(|e| PlError::Json(e.to_string()))?;
        file.into_lift()
    }
}

impl From<&PlLift> for ElementFile {
    fn from(lift: &PlLift) -> Self {
        ElementFile {
            breakpoints: lift.points.clone(),
        }
    }
}
