//! Exact stable commutator length in the central extensions `T_n` of
//! Thompson's group T, and through them in the braided Ptolemy–Thompson
//! groups T* (`n = 12`) and T♯ (`n = 21`).
//!
//! Everything is exact rational arithmetic:
//!
//! * [`numeric`]: arbitrary-precision rationals with dyadic predicates.
//! * [`plmap`]: piecewise-linear lifts of circle homeomorphisms.
//! * [`tree_pair`]: tree-pair diagrams and the generators `A`, `B`, `R` of T.
//! * [`dynamics`]: exact translation numbers, the Euler cocycle, `φ_n`.
//! * [`extension`]: the groups `T_n`, `φ_n` and `scl = |φ_n| / 2|n|`.
//! * [`word`]: words over generator tables, mapped into `T_n`.
//! * [`realizer`]: explicit elements with any prescribed non-negative rational scl.
//!
//! ```
//! use thompson_scl::{numeric::q, word::{parse_word, GeneratorTable}, dynamics::SearchBudget};
//!
//! let word = parse_word("sigma_1").unwrap();
//! let scl = GeneratorTable::t_star().scl_of_word(&word, &SearchBudget::default()).unwrap();
//! assert_eq!(scl, q("1/24"));
//! ```

pub mod dynamics;
pub mod error;
pub mod extension;
pub mod numeric;
pub mod plmap;
pub mod realizer;
pub mod sample;
pub mod tree_pair;
pub mod verify;
pub mod word;

pub use dynamics::{RotationCertificate, SearchBudget};
pub use error::Error;
pub use extension::TnElement;
pub use numeric::Rational;
pub use plmap::{CanonicalLift, PlLift};
pub use tree_pair::TreePair;
pub use word::{GeneratorTable, Word};
