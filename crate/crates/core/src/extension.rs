//! The central extensions `T_n = T ×_χ Z`.
//!
//! An element is a pair `(t, j)` of a circle map in T (stored as its canonical
//! lift) and an integer, at a fixed non-zero level `n`. The product is
//! `(s, i)·(t, j) = (st, i + j + n·χ(s, t))`.
//!
//! `φ_n(t, j) = j + n·τ(t̃)` is the homogeneous quasimorphism with defect `n`,
//! and every element has `scl = |φ_n| / 2|n|`. That closed form needs some
//! power of the element to be a product of commutators; the abelianization
//! of `T_n` is finite, so this always holds and no membership test is made.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

use crate::dynamics::{self, DynamicsError, SearchBudget};
use crate::numeric::Rational;
use crate::plmap::{CanonicalLift, ElementFile, PlError};
use crate::tree_pair::{TreeError, TreePair};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtensionError {
    #[error("level mismatch: cannot combine elements of T_{left} and T_{right}")]
    LevelMismatch { left: i64, right: i64 },
    #[error("extension level n must be non-zero")]
    ZeroLevel,
    #[error("circle part is not an element of Thompson's group T")]
    NotThompson,
    #[error(transparent)]
    Dynamics(#[from] DynamicsError),
    #[error(transparent)]
    Element(#[from] PlError),
    #[error(transparent)]
    Tree(#[from] TreeError),
    #[error("malformed T_n element JSON: {0}")]
    Json(String),
}

/// An element `(t, j)` of `T_n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TnElement {
    t: CanonicalLift,
    j: BigInt,
    n: i64,
}

impl TnElement {
    pub fn new(n: i64, t: CanonicalLift, j: impl Into<BigInt>) -> Result<Self, ExtensionError> {
        if n == 0 {
            return Err(ExtensionError::ZeroLevel);
        }
        if !t.validate_thompson() {
            return Err(ExtensionError::NotThompson);
        }
        Ok(TnElement { t, j: j.into(), n })
    }

    pub fn identity(n: i64) -> Result<Self, ExtensionError> {
        Self::central(n, 0)
    }

    /// `(id, j)`.
    pub fn central(n: i64, j: impl Into<BigInt>) -> Result<Self, ExtensionError> {
        Self::new(n, CanonicalLift::identity(), j)
    }

    pub fn circle(&self) -> &CanonicalLift {
        &self.t
    }

    pub fn central_part(&self) -> &BigInt {
        &self.j
    }

    pub fn level(&self) -> i64 {
        self.n
    }

    pub fn is_identity(&self) -> bool {
        self.t.is_identity() && self.j.is_zero()
    }

    fn check_level(&self, other: &TnElement) -> Result<(), ExtensionError> {
        if self.n != other.n {
            return Err(ExtensionError::LevelMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    pub fn multiply(&self, other: &TnElement) -> Result<TnElement, ExtensionError> {
        self.check_level(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &TnElement) -> TnElement {
        let chi = dynamics::euler_cocycle(&self.t, &other.t);
        TnElement {
            t: self.t.then_after(&other.t),
            j: &self.j + &other.j + BigInt::from(self.n * chi),
            n: self.n,
        }
    }

    /// `(t, j)^{-1} = (t^{-1}, -j - n·χ(t^{-1}, t))`.
    pub fn inverse(&self) -> TnElement {
        let t_inv = self.t.inverse();
        let chi = dynamics::euler_cocycle(&t_inv, &self.t);
        TnElement {
            j: -&self.j - BigInt::from(self.n * chi),
            t: t_inv,
            n: self.n,
        }
    }

    pub fn power(&self, k: i64) -> TnElement {
        let mut base = if k < 0 { self.inverse() } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = TnElement {
            t: CanonicalLift::identity(),
            j: BigInt::zero(),
            n: self.n,
        };
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        acc
    }

    /// `h g h^{-1}` with `self = g`.
    pub fn conjugate_by(&self, h: &TnElement) -> Result<TnElement, ExtensionError> {
        h.multiply(self)?.multiply(&h.inverse())
    }

    /// `φ_n(t, j)`.
    pub fn phi(&self, budget: &SearchBudget) -> Result<Rational, DynamicsError> {
        dynamics::phi(self.n, &self.t, &self.j, budget)
    }

    /// `|φ_n(g)| / 2|n|`.
    pub fn scl(&self, budget: &SearchBudget) -> Result<Rational, DynamicsError> {
        let phi = self.phi(budget)?;
        Ok(phi.abs() / Rational::from(2 * self.n.abs()))
    }

    /// Parses the `{"n": .., "j": .., "t": ..}` JSON form.
    pub fn from_json(text: &str) -> Result<Self, ExtensionError> {
        let file: TnElementFile =
            serde_json::from_str(text).map_err(|e| ExtensionError::Json(e.to_string()))?;
        file.into_element()
    }

    pub fn to_file(&self) -> TnElementFile {
        let j = match self.j.to_i64() {
            Some(v) => Value::from(v),
            None => Value::String(self.j.to_string()),
        };
        TnElementFile {
            n: self.n,
            j,
            t: CircleSpec::Breakpoints(ElementFile::from(self.t.lift())),
        }
    }
}

impl fmt::Debug for TnElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T_{}({:?}, {})", self.n, self.t, self.j)
    }
}

/// `|φ_n(gh) - φ_n(g) - φ_n(h)|` maximized over the sample.
pub fn defect_sample(
    n: i64,
    pairs: &[(TnElement, TnElement)],
    budget: &SearchBudget,
) -> Result<Rational, ExtensionError> {
    let mut worst = Rational::zero();
    for (g, h) in pairs {
        for x in [g, h] {
            if x.n != n {
                return Err(ExtensionError::LevelMismatch {
                    left: n,
                    right: x.n,
                });
            }
        }
        let d = pair_defect(g, h, budget)?.abs();
        if d > worst {
            worst = d;
        }
    }
    Ok(worst)
}

/// `φ_n(gh) - φ_n(g) - φ_n(h)` for one pair (signed).
pub fn pair_defect(
    g: &TnElement,
    h: &TnElement,
    budget: &SearchBudget,
) -> Result<Rational, ExtensionError> {
    let gh = g.multiply(h)?;
    Ok(gh.phi(budget)? - g.phi(budget)? - h.phi(budget)?)
}

/// The circle part in a file: a breakpoint object, or a string holding a
/// tree pair `"bits | bits | r"` or a word over the builtins `id, A, B, R`.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CircleSpec {
    Breakpoints(ElementFile),
    Text(String),
}

impl CircleSpec {
    pub fn resolve(self) -> Result<CanonicalLift, ExtensionError> {
        match self {
            CircleSpec::Breakpoints(file) => Ok(file.into_lift()?),
            CircleSpec::Text(text) => resolve_circle_text(&text),
        }
    }
}

/// A tree pair if the text contains `|`, otherwise a word over `id, A, B, R`.
pub fn resolve_circle_text(text: &str) -> Result<CanonicalLift, ExtensionError> {
    if text.contains('|') {
        Ok(text.parse::<TreePair>()?.to_plmap())
    } else {
        crate::word::evaluate_builtin_expr(text).map_err(|e| ExtensionError::Json(e.to_string()))
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TnElementFile {
    pub n: i64,
    /// An integer, or a decimal string for values outside the 64-bit range.
    pub j: Value,
    pub t: CircleSpec,
}

impl TnElementFile {
    pub fn into_element(self) -> Result<TnElement, ExtensionError> {
        let j = match &self.j {
            Value::Number(num) => num
                .as_i64()
                .map(BigInt::from)
                .ok_or_else(|| ExtensionError::Json(format!("j must be an integer, got {num}")))?,
            Value::String(s) => s
                .parse::<BigInt>()
                .map_err(|_| ExtensionError::Json(format!("j must be an integer, got {s:?}")))?,
            other => {
                return Err(ExtensionError::Json(format!(
                    "j must be an integer, got {other}"
                )))
            }
        };
        TnElement::new(self.n, self.t.resolve()?, j)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::q;
    use crate::tree_pair::builtin;

    fn b() -> SearchBudget {
        SearchBudget::default()
    }

    fn el(n: i64, name: &str, j: i64) -> TnElement {
        TnElement::new(n, builtin(name).unwrap(), j).unwrap()
    }

    #[test]
    fn multiply_examples() {
        let c = |j| TnElement::central(12, j).unwrap();
        assert_eq!(c(3).multiply(&c(4)).unwrap(), c(7));
        assert_eq!(el(12, "R", 0).multiply(&el(12, "R", 0)).unwrap(), c(12));
        let g = el(12, "A", 5);
        assert_eq!(g.multiply(&c(0)).unwrap(), g);
        assert_eq!(c(0).multiply(&g).unwrap(), g);
    }

    #[test]
    fn level_mismatch() {
        let err = el(12, "R", 0).multiply(&el(21, "R", 0)).unwrap_err();
        assert_eq!(
            err,
            ExtensionError::LevelMismatch {
                left: 12,
                right: 21
            }
        );
        assert_eq!(
            TnElement::central(0, 1).unwrap_err(),
            ExtensionError::ZeroLevel
        );
    }

    #[test]
    fn non_thompson_circle_part_is_rejected() {
        let t = CanonicalLift::new(
            crate::plmap::PlLift::new(vec![(q("0"), q("0")), (q("1/3"), q("1/2"))]).unwrap(),
        )
        .unwrap();
        assert_eq!(
            TnElement::new(1, t, 0).unwrap_err(),
            ExtensionError::NotThompson
        );
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(
            TnElement::central(12, 5).unwrap().inverse(),
            TnElement::central(12, -5).unwrap()
        );
        assert_eq!(el(12, "R", 0).inverse(), el(12, "R", -12));
        for name in ["A", "B", "R"] {
            let g = el(12, name, 3);
            assert!(g.multiply(&g.inverse()).unwrap().is_identity());
            assert!(g.inverse().multiply(&g).unwrap().is_identity());
        }
    }

    #[test]
    fn power_examples() {
        assert_eq!(
            TnElement::central(12, 1).unwrap().power(12),
            TnElement::central(12, 12).unwrap()
        );
        assert_eq!(el(12, "R", 0).power(2), TnElement::central(12, 12).unwrap());
        let g = el(12, "B", -2);
        assert_eq!(g.power(-1), g.inverse());
        assert!(g.power(0).is_identity());
        assert_eq!(g.power(3), g.multiply(&g).unwrap().multiply(&g).unwrap());
    }

    #[test]
    fn phi_and_scl_examples() {
        assert_eq!(
            TnElement::central(21, 7).unwrap().phi(&b()).unwrap(),
            q("7")
        );
        assert_eq!(el(12, "R", 0).phi(&b()).unwrap(), q("6"));
        assert_eq!(el(12, "R", -6).phi(&b()).unwrap(), q("0"));
        assert_eq!(
            TnElement::central(12, 1).unwrap().scl(&b()).unwrap(),
            q("1/24")
        );
        assert_eq!(
            TnElement::central(12, 0).unwrap().scl(&b()).unwrap(),
            q("0")
        );
        assert_eq!(el(12, "R", 0).scl(&b()).unwrap(), q("1/4"));
        let g = el(12, "R", 1);
        for k in 1..5 {
            assert_eq!(
                g.power(k).scl(&b()).unwrap(),
                Rational::from(k) * g.scl(&b()).unwrap()
            );
        }
    }

    #[test]
    fn defect_examples() {
        let central: Vec<_> = (-2..3)
            .map(|i| {
                (
                    TnElement::central(12, i).unwrap(),
                    TnElement::central(12, 2 * i).unwrap(),
                )
            })
            .collect();
        assert_eq!(defect_sample(12, &central, &b()).unwrap(), q("0"));
        let r = el(12, "R", 0);
        assert_eq!(
            defect_sample(12, &[(r.clone(), r.clone())], &b()).unwrap(),
            q("0")
        );
        let mixed = vec![
            (el(12, "A", 0), el(12, "B", 1)),
            (el(12, "R", 0), el(12, "A", 0)),
            (el(12, "A", 0).inverse(), el(12, "R", 2)),
        ];
        assert!(defect_sample(12, &mixed, &b()).unwrap() <= q("12"));
        assert!(matches!(
            defect_sample(21, &mixed, &b()),
            Err(ExtensionError::LevelMismatch { .. })
        ));
    }

    #[test]
    fn element_json() {
        let g = TnElement::from_json(r#"{"n": 12, "j": -3, "t": "100 | 100 | 1"}"#).unwrap();
        assert_eq!(g, el(12, "R", -3));
        let g = TnElement::from_json(r#"{"n": 12, "j": "4", "t": {"breakpoints": [["0","1/2"]]}}"#)
            .unwrap();
        assert_eq!(g, el(12, "R", 4));
        let g = TnElement::from_json(r#"{"n": 1, "j": 0, "t": "A A^-1"}"#).unwrap();
        assert!(g.is_identity());
        let text = serde_json::to_string(&el(21, "R", 2).to_file()).unwrap();
        assert_eq!(text, r#"{"n":21,"j":2,"t":{"breakpoints":[["0","1/2"]]}}"#);
        assert_eq!(TnElement::from_json(&text).unwrap(), el(21, "R", 2));
        assert!(matches!(
            TnElement::from_json(r#"{"n": 12, "j": 1.5, "t": "id"}"#),
            Err(ExtensionError::Json(_))
        ));
        assert!(matches!(
            TnElement::from_json(r#"{"n": 12, "j": 0, "t": "100 | 0 | 0"}"#),
            Err(ExtensionError::Tree(TreeError::LeafMismatch { .. }))
        ));
    }
}
