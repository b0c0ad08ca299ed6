//! Translation numbers, the Euler cocycle and the quasimorphism `φ_n`.
//!
//! The translation number `τ(F) = lim F^k(x)/k` of a lift is computed exactly
//! by a Stern–Brocot search: for a candidate `p/q`, the sign of
//! `F^q(x) - x - p` over one period decides whether `τ` lies above, below or
//! at `p/q`. Because `F` is piecewise linear the extremes of that displacement
//! sit at breakpoints, so each test is an exact finite scan. Runs of moves in
//! the same direction are taken by galloping, so a denominator `q` costs
//! `O(log q)` tests per continued-fraction term rather than `O(q)`.
//!
//! The Euler cocycle uses the section `t -> t̃` with `t̃(0) ∈ [0, 1)`:
//! `χ(s, t) = s̃(t̃(0)) - (st)~(0)`, which takes values in `{0, 1}` and
//! vanishes whenever either argument is the identity.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use thiserror::Error;

use crate::numeric::Rational;
use crate::plmap::{CanonicalLift, PlLift};

pub const DEFAULT_MAX_PROBES: u32 = 64;
pub const DEFAULT_DENOM_CAP: u64 = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DynamicsError {
    #[error(
        "rotation-number search exhausted its budget of {probes} tests; translation number lies in ({lower}, {upper})"
    )]
    BudgetExhausted {
        probes: u32,
        lower: Box<Rational>,
        upper: Box<Rational>,
    },
    #[error(
        "rotation-number search exceeded the denominator cap {cap}; translation number lies in ({lower}, {upper})"
    )]
    DenominatorCap {
        cap: u64,
        lower: Box<Rational>,
        upper: Box<Rational>,
    },
}

/// Limits for the Stern–Brocot search.
///
/// `max_probes` counts sign tests (each one builds an iterate `F^q`);
/// `denom_cap` bounds the denominators that may be tested.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_probes: u32,
    pub denom_cap: u64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_probes: DEFAULT_MAX_PROBES,
            denom_cap: DEFAULT_DENOM_CAP,
        }
    }
}

/// An exact translation number `p/q` with a point `x` such that `F^q(x) = x + p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RotationCertificate {
    pub value: Rational,
    pub witness: Rational,
    pub iterations: u32,
}

impl RotationCertificate {
    /// Re-checks the periodic-point equation on `f`.
    pub fn verify(&self, f: &PlLift) -> bool {
        let Some(q) = self.value.denom().to_i64() else {
            return false;
        };
        let p = Rational::from_integer(self.value.numer().clone());
        f.pow(q).evaluate(&self.witness) == &self.witness + &p
    }
}

struct Search<'a> {
    f: &'a PlLift,
    budget: SearchBudget,
    probes: u32,
    lower: (BigInt, BigInt),
    upper: (BigInt, BigInt),
}

enum Probe {
    Above,
    Below,
    At(Rational),
}

enum Gallop {
    Reached(BigInt),
    Hit(BigInt, BigInt, Rational),
}

impl Search<'_> {
    fn bracket(&self) -> (Box<Rational>, Box<Rational>) {
        let r = |(p, q): &(BigInt, BigInt)| {
            Box::new(Rational::new(p.clone(), q.clone()).expect("q > 0"))
        };
        (r(&self.lower), r(&self.upper))
    }

    fn exhausted(&self) -> DynamicsError {
        let (lower, upper) = self.bracket();
        DynamicsError::BudgetExhausted {
            probes: self.probes,
            lower,
            upper,
        }
    }

    fn capped(&self) -> DynamicsError {
        let (lower, upper) = self.bracket();
        DynamicsError::DenominatorCap {
            cap: self.budget.denom_cap,
            lower,
            upper,
        }
    }

    /// Where `τ` sits relative to `p/q`.
    fn probe(&mut self, p: &BigInt, q: &BigInt) -> Result<Probe, DynamicsError> {
        if self.probes >= self.budget.max_probes {
            return Err(self.exhausted());
        }
        let qi = q
            .to_u64()
            .filter(|&q| q <= self.budget.denom_cap)
            .ok_or_else(|| self.capped())?;
        self.probes += 1;
        let g = self.f.pow(qi as i64);
        let (lo, hi) = g.extremes(p);
        Ok(if lo.is_positive() {
            Probe::Above
        } else if hi.is_negative() {
            Probe::Below
        } else {
            Probe::At(
                g.displacement_zero(p)
                    .expect("a continuous displacement with min <= 0 <= max has a zero"),
            )
        })
    }

    // Largest k >= 1 such that τ stays above (or below) the fraction
    // `base + k * step`; k = 1 is already known to qualify.
    fn gallop(
        &mut self,
        base: &(BigInt, BigInt),
        step: &(BigInt, BigInt),
        above: bool,
    ) -> Result<Gallop, DynamicsError> {
        let at = |k: &BigInt| (&base.0 + k * &step.0, &base.1 + k * &step.1);
        let cap = BigInt::from(self.budget.denom_cap);
        let k_max = if cap >= base.1 {
            (&cap - &base.1) / &step.1
        } else {
            BigInt::zero()
        };
        let mut lo = BigInt::from(1);
        let mut hi: Option<BigInt> = None;
        loop {
            let next = match &hi {
                None => {
                    let doubled = &lo * 2;
                    if doubled > k_max {
                        if lo >= k_max {
                            break;
                        }
                        k_max.clone()
                    } else {
                        doubled
                    }
                }
                Some(h) => {
                    if h - &lo <= BigInt::from(1) {
                        break;
                    }
                    (&lo + h) / 2
                }
            };
            let (p, q) = at(&next);
            match self.probe(&p, &q)? {
                Probe::At(w) => return Ok(Gallop::Hit(p, q, w)),
                Probe::Above if above => lo = next,
                Probe::Below if !above => lo = next,
                _ => hi = Some(next),
            }
        }
        Ok(Gallop::Reached(lo))
    }
}

/// Exact translation number of a lift, with a periodic-point witness.
pub fn translation_number(
    f: &PlLift,
    budget: &SearchBudget,
) -> Result<RotationCertificate, DynamicsError> {
    let (emin, emax) = f.extremes(&BigInt::zero());
    let m = emin.ceil();
    if Rational::from_integer(m.clone()) <= emax {
        let witness = f
            .displacement_zero(&m)
            .expect("integer inside the displacement range");
        return Ok(RotationCertificate {
            value: Rational::from_integer(m),
            witness,
            iterations: 0,
        });
    }
    let m = emin.floor();
    let one = BigInt::from(1);
    let mut search = Search {
        f,
        budget: *budget,
        probes: 0,
        lower: (m.clone(), one.clone()),
        upper: (m + &one, one),
    };
    loop {
        let p = &search.lower.0 + &search.upper.0;
        let q = &search.lower.1 + &search.upper.1;
        let found = match search.probe(&p, &q)? {
            Probe::At(w) => Some((p, q, w)),
            Probe::Above => {
                let (base, step) = (search.lower.clone(), search.upper.clone());
                match search.gallop(&base, &step, true)? {
                    Gallop::Reached(k) => {
                        search.lower = (&base.0 + &k * &step.0, &base.1 + &k * &step.1);
                        None
                    }
                    Gallop::Hit(p, q, w) => Some((p, q, w)),
                }
            }
            Probe::Below => {
                let (base, step) = (search.upper.clone(), search.lower.clone());
                match search.gallop(&base, &step, false)? {
                    Gallop::Reached(k) => {
                        search.upper = (&base.0 + &k * &step.0, &base.1 + &k * &step.1);
                        None
                    }
                    Gallop::Hit(p, q, w) => Some((p, q, w)),
                }
            }
        };
        if let Some((p, q, witness)) = found {
            return Ok(RotationCertificate {
                value: Rational::new(p, q).expect("q > 0"),
                witness,
                iterations: search.probes,
            });
        }
    }
}

/// The orbit estimate `F^k(0) / k`, within `1/k` of the translation number.
pub fn translation_estimate(f: &PlLift, k: u32) -> Rational {
    assert!(k >= 1, "translation_estimate needs k >= 1");
    let mut x = Rational::zero();
    for _ in 0..k {
        x = f.evaluate(&x);
    }
    x / Rational::from(i64::from(k))
}

/// `χ(s, t) = s̃(t̃(0)) - (st)~(0)`, always 0 or 1.
pub fn euler_cocycle(s: &CanonicalLift, t: &CanonicalLift) -> i64 {
    let lifted = s.evaluate(&t.evaluate(&Rational::zero()));
    let composite = s.then_after(t).evaluate(&Rational::zero());
    let diff = lifted - composite;
    debug_assert!(diff.is_integer());
    diff.numer().to_i64().expect("cocycle values are 0 or 1")
}

/// `a(t, k) = χ(t, t) + χ(t², t) + ... + χ(t^{k-1}, t)`, summed term by term.
pub fn partial_sum_a(t: &CanonicalLift, k: u32) -> BigInt {
    assert!(k >= 1, "partial_sum_a needs k >= 1");
    let mut sum = BigInt::zero();
    let mut power = t.clone();
    for _ in 1..k {
        sum += euler_cocycle(&power, t);
        power = power.then_after(t);
    }
    sum
}

/// `floor(t̃^k(0))`, which equals [`partial_sum_a`] for the canonical section.
pub fn partial_sum_floor(t: &CanonicalLift, k: u32) -> BigInt {
    let mut x = Rational::zero();
    for _ in 0..k {
        x = t.evaluate(&x);
    }
    x.floor()
}

/// `φ_n(t, j) = j + n·τ(t̃)`.
pub fn phi(
    n: i64,
    t: &CanonicalLift,
    j: &BigInt,
    budget: &SearchBudget,
) -> Result<Rational, DynamicsError> {
    let tau = translation_number(t, budget)?.value;
    Ok(Rational::from_integer(j.clone()) + Rational::from(n) * tau)
}

/// `χ(s, t) + τ((st)~) - τ(s̃) - τ(t̃)`: the `φ_1` defect of the pair, so that
/// the `φ_n` defect of `((s, i), (t, j))` is `n` times this.
pub fn cocycle_defect(
    s: &CanonicalLift,
    t: &CanonicalLift,
    budget: &SearchBudget,
) -> Result<Rational, DynamicsError> {
    let st = s.then_after(t);
    let tau = |f: &CanonicalLift| translation_number(f, budget).map(|c| c.value);
    Ok(Rational::from(euler_cocycle(s, t)) + tau(&st)? - tau(s)? - tau(t)?)
}

/// Compares `τ(f)` with `x` using one sign test; `None` when a single test cannot tell.
pub fn compare_translation(f: &PlLift, x: &Rational) -> Option<Ordering> {
    let q = x.denom().to_i64()?;
    let (lo, hi) = f.pow(q).extremes(x.numer());
    if lo.is_positive() {
        Some(Ordering::Greater)
    } else if hi.is_negative() {
        Some(Ordering::Less)
    } else {
        Some(Ordering::Equal)
    }
}
