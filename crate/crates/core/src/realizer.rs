//! Elements with a prescribed rotation number, and elements of `T_n` with a
//! prescribed scl.
//!
//! [`partition_cycler`] cuts the circle at `a_0 = 0` and `a_i = 1 - 2^{-i}`
//! (`1 <= i < q`) and shifts the pieces `p` places to the right. The cut points
//! form one periodic orbit, so the translation number is `p/q`. Any dyadic
//! partition would do; this one has a closed form for every `q`.

use num_bigint::BigInt;
use num_integer::Integer;
use thiserror::Error;

use crate::dynamics::{DynamicsError, SearchBudget};
use crate::extension::{ExtensionError, TnElement};
use crate::numeric::Rational;
use crate::plmap::{CanonicalLift, PlLift};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RealizeError {
    #[error("invalid rotation p/q = {p}/{q}: need q >= 1, 0 <= p < q and gcd(p, q) = 1")]
    InvalidRotation { p: u64, q: u64 },
    #[error("scl target must be non-negative, got {0}")]
    NegativeTarget(Rational),
    #[error("rotation denominator {0} is too large")]
    TooLarge(BigInt),
    #[error("realized element has scl {got}, expected {target}")]
    Mismatch {
        target: Box<Rational>,
        got: Box<Rational>,
    },
    #[error(transparent)]
    Extension(#[from] ExtensionError),
}

impl From<DynamicsError> for RealizeError {
    fn from(e: DynamicsError) -> Self {
        RealizeError::Extension(e.into())
    }
}

/// `a_0, ..., a_q` with `a_0 = 0`, `a_i = 1 - 2^{-i}` for `0 < i < q`, `a_q = 1`.
pub fn cycler_partition(q: u64) -> Vec<Rational> {
    let mut points: Vec<Rational> = (0..q)
        .map(|i| Rational::one() - Rational::pow2(-(i as i64)))
        .collect();
    points.push(Rational::one());
    points
}

/// The element of T that moves partition interval `i` affinely onto interval `i + p (mod q)`.
pub fn partition_cycler(p: u64, q: u64) -> Result<CanonicalLift, RealizeError> {
    if q == 0 || p >= q || p.gcd(&q) != 1 {
        return Err(RealizeError::InvalidRotation { p, q });
    }
    let a = cycler_partition(q);
    let image = |i: u64| {
        let j = i + p;
        if j >= q {
            &a[(j - q) as usize] + &Rational::one()
        } else {
            a[j as usize].clone()
        }
    };
    let points = (0..q).map(|i| (a[i as usize].clone(), image(i))).collect();
    let lift = PlLift::new(points).expect("cycler images are increasing");
    Ok(CanonicalLift::new(lift).expect("a_p lies in [0, 1)"))
}

/// An element realizing a target scl, with values recomputed through the scl pipeline.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealizationCertificate {
    pub target: Rational,
    pub element: TnElement,
    pub verified_phi: Rational,
    pub verified_scl: Rational,
}

/// Builds `(t, j)` in `T_n` with `scl = target`.
///
/// With `v = 2|n|·target`, take `j = sign(n)·floor(v)` and a cycler with
/// rotation number `frac(v)/|n|`, so that `φ_n = sign(n)·v`.
pub fn realize_scl(
    target: &Rational,
    n: i64,
    budget: &SearchBudget,
) -> Result<RealizationCertificate, RealizeError> {
    if target.is_negative() {
        return Err(RealizeError::NegativeTarget(target.clone()));
    }
    if n == 0 {
        return Err(ExtensionError::ZeroLevel.into());
    }
    let v = target * &Rational::from(2 * n.abs());
    let floor = v.floor();
    let tau = v.fract() / Rational::from(n.abs());
    let too_large = || RealizeError::TooLarge(tau.denom().clone());
    let p: u64 = tau.numer().try_into().map_err(|_| too_large())?;
    let q: u64 = tau.denom().try_into().map_err(|_| too_large())?;
    let t = partition_cycler(p, q)?;
    let j = if n < 0 { -floor } else { floor };
    let element = TnElement::new(n, t, j)?;
    let verified_phi = element.phi(budget)?;
    let verified_scl = element.scl(budget)?;
    if verified_scl != *target {
        return Err(RealizeError::Mismatch {
            target: Box::new(target.clone()),
            got: Box::new(verified_scl),
        });
    }
    Ok(RealizationCertificate {
        target: target.clone(),
        element,
        verified_phi,
        verified_scl,
    })
}

/// An element `(t, J)` of `T_n` with `φ_n(t, J) = value`: `J = n·floor(value/n)` and
/// `t` a cycler with rotation number `frac(value/n)`.
pub fn realize_phi(value: &Rational, n: i64) -> Result<TnElement, RealizeError> {
    if n == 0 {
        return Err(ExtensionError::ZeroLevel.into());
    }
    let scaled = value / &Rational::from(n);
    let tau = scaled.fract();
    let too_large = || RealizeError::TooLarge(tau.denom().clone());
    let p: u64 = tau.numer().try_into().map_err(|_| too_large())?;
    let q: u64 = tau.denom().try_into().map_err(|_| too_large())?;
    let j = scaled.floor() * BigInt::from(n);
    Ok(TnElement::new(n, partition_cycler(p, q)?, j)?)
}
