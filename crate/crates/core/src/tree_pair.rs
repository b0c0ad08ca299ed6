//! Tree-pair diagrams for elements of Thompson's group T, and the built-in generators.
//!
//! Trees are written in preorder as bitstrings, `1` for a caret and `0` for a
//! leaf. A pair is written `"domainBits | rangeBits | r"`: leaf `i` of the
//! domain tree maps affinely onto leaf `(i + r) mod N` of the range tree.
//! Tree pairs are only constructors; the working form of an element is its
//! [`CanonicalLift`].

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::numeric::{q, Rational};
use crate::plmap::{CanonicalLift, PlLift};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("expected \"domainBits | rangeBits | r\", got {0:?}")]
    Format(String),
    #[error("malformed tree bitstring {bits:?}: {reason}")]
    BadTree { bits: String, reason: &'static str },
    #[error("leaf-count mismatch: domain has {domain} leaves, range has {range}")]
    LeafMismatch { domain: usize, range: usize },
    #[error("rotation {rotation} out of range for {leaves} leaves (need 0 <= r < {leaves})")]
    RotationOutOfRange { rotation: String, leaves: usize },
    #[error("unknown builtin element {0:?} (expected id, A, B or R)")]
    UnknownBuiltin(String),
}

/// Shape of a finite rooted binary tree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum BinTree {
    Leaf,
    Node(Box<BinTree>, Box<BinTree>),
}

impl BinTree {
    pub fn caret() -> Self {
        BinTree::Node(Box::new(BinTree::Leaf), Box::new(BinTree::Leaf))
    }

    pub fn leaf_count(&self) -> usize {
        match self {
            BinTree::Leaf => 1,
            BinTree::Node(l, r) => l.leaf_count() + r.leaf_count(),
        }
    }

    /// Left endpoints of the standard dyadic intervals at the leaves, left to right,
    /// followed by the final endpoint 1.
    pub fn leaf_endpoints(&self) -> Vec<Rational> {
        fn walk(t: &BinTree, start: Rational, width: Rational, out: &mut Vec<Rational>) {
            match t {
                BinTree::Leaf => out.push(start),
                BinTree::Node(l, r) => {
                    let half = &width * &q("1/2");
                    walk(l, start.clone(), half.clone(), out);
                    walk(r, start + &half, half, out);
                }
            }
        }
        let mut out = Vec::with_capacity(self.leaf_count() + 1);
        walk(self, Rational::zero(), Rational::one(), &mut out);
        out.push(Rational::one());
        out
    }

    /// Replaces leaf `index` (left to right) by a caret.
    pub fn expand_leaf(&self, index: usize) -> BinTree {
        fn walk(t: &BinTree, index: &mut usize) -> BinTree {
            match t {
                BinTree::Leaf => {
                    let hit = *index == 0;
                    *index = index.wrapping_sub(1);
                    if hit {
                        BinTree::caret()
                    } else {
                        BinTree::Leaf
                    }
                }
                BinTree::Node(l, r) => {
                    let l = walk(l, index);
                    let r = walk(r, index);
                    BinTree::Node(Box::new(l), Box::new(r))
                }
            }
        }
        let mut i = index;
        walk(self, &mut i)
    }

    pub fn to_bits(&self) -> String {
        fn walk(t: &BinTree, out: &mut String) {
            match t {
                BinTree::Leaf => out.push('0'),
                BinTree::Node(l, r) => {
                    out.push('1');
                    walk(l, out);
                    walk(r, out);
                }
            }
        }
        let mut s = String::new();
        walk(self, &mut s);
        s
    }
}

impl FromStr for BinTree {
    type Err = TreeError;

    fn from_str(bits: &str) -> Result<Self, Self::Err> {
        let bad = |reason| TreeError::BadTree {
            bits: bits.to_string(),
            reason,
        };
        if bits.is_empty() {
            return Err(bad("empty"));
        }
        if bits.bytes().any(|b| b != b'0' && b != b'1') {
            return Err(bad("only the characters 0 and 1 are allowed"));
        }
        fn parse(bytes: &[u8], pos: &mut usize) -> Option<BinTree> {
            let b = *bytes.get(*pos)?;
            *pos += 1;
            if b == b'0' {
                Some(BinTree::Leaf)
            } else {
                let l = parse(bytes, pos)?;
                let r = parse(bytes, pos)?;
                Some(BinTree::Node(Box::new(l), Box::new(r)))
            }
        }
        let mut pos = 0;
        let tree = parse(bits.as_bytes(), &mut pos).ok_or_else(|| bad("too few leaves"))?;
        if pos != bits.len() {
            return Err(bad("trailing bits after a complete tree"));
        }
        Ok(tree)
    }
}

impl fmt::Display for BinTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_bits())
    }
}

/// A (possibly unreduced) tree-pair diagram with a cyclic leaf shift.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreePair {
    domain: BinTree,
    range: BinTree,
    rotation: usize,
}

impl TreePair {
    pub fn new(domain: BinTree, range: BinTree, rotation: usize) -> Result<Self, TreeError> {
        let (d, r) = (domain.leaf_count(), range.leaf_count());
        if d != r {
            return Err(TreeError::LeafMismatch {
                domain: d,
                range: r,
            });
        }
        if rotation >= d {
            return Err(TreeError::RotationOutOfRange {
                rotation: rotation.to_string(),
                leaves: d,
            });
        }
        Ok(TreePair {
            domain,
            range,
            rotation,
        })
    }

    pub fn domain(&self) -> &BinTree {
        &self.domain
    }

    pub fn range(&self) -> &BinTree {
        &self.range
    }

    pub fn rotation(&self) -> usize {
        self.rotation
    }

    pub fn leaf_count(&self) -> usize {
        self.domain.leaf_count()
    }

    /// Adds a caret under domain leaf `i` and under its image leaf. The
    /// result describes the same element.
    pub fn expand(&self, i: usize) -> TreePair {
        let n = self.leaf_count();
        let image = (i + self.rotation) % n;
        let domain = self.domain.expand_leaf(i);
        let range = self.range.expand_leaf(image);
        // range leaves after the split point shift right by one
        let rotation = if image < self.rotation {
            self.rotation + 1
        } else {
            self.rotation
        };
        TreePair {
            domain,
            range,
            rotation,
        }
    }

    /// The canonical lift of the PL map this diagram describes.
    pub fn to_plmap(&self) -> CanonicalLift {
        let n = self.leaf_count();
        let dom = self.domain.leaf_endpoints();
        let ran = self.range.leaf_endpoints();
        let points = (0..n)
            .map(|i| {
                let j = i + self.rotation;
                let y = if j >= n {
                    &ran[j - n] + &Rational::one()
                } else {
                    ran[j].clone()
                };
                (dom[i].clone(), y)
            })
            .collect();
        let lift = PlLift::new(points).expect("tree-pair data defines an increasing lift");
        CanonicalLift::new(lift).expect("leaf images start inside [0, 1)")
    }
}

impl FromStr for TreePair {
    type Err = TreeError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = text.split('|').map(str::trim).collect();
        let [d, r, rot] = parts.as_slice() else {
            return Err(TreeError::Format(text.to_string()));
        };
        let domain: BinTree = d.parse()?;
        let range: BinTree = r.parse()?;
        let leaves = domain.leaf_count();
        let rotation = rot
            .parse::<usize>()
            .ok()
            .filter(|_| rot.bytes().all(|b| b.is_ascii_digit()))
            .ok_or_else(|| TreeError::RotationOutOfRange {
                rotation: rot.to_string(),
                leaves,
            })?;
        TreePair::new(domain, range, rotation)
    }
}

impl fmt::Display for TreePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} | {} | {}", self.domain, self.range, self.rotation)
    }
}

/// Built-in elements of T: `id`, `A` (= x_0), `B` (= x_1) and `R` (rotation by 1/2).
pub fn builtin(name: &str) -> Result<CanonicalLift, TreeError> {
    let text = match name {
        "id" => "0 | 0 | 0",
        "A" => "10100 | 11000 | 0",
        "B" => "1010100 | 1011000 | 0",
        "R" => "100 | 100 | 1",
        _ => return Err(TreeError::UnknownBuiltin(name.to_string())),
    };
    Ok(text
        .parse::<TreePair>()
        .expect("builtin tree pairs are well formed")
        .to_plmap())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::q;

    fn lift(pts: &[(&str, &str)]) -> PlLift {
        PlLift::new(pts.iter().map(|(x, y)| (q(x), q(y))).collect()).unwrap()
    }

    #[test]
    fn parse_examples() {
        let id: TreePair = "0 | 0 | 0".parse().unwrap();
        assert!(id.to_plmap().is_identity());
        let r: TreePair = "100 | 100 | 1".parse().unwrap();
        assert_eq!(r.to_plmap().lift(), &PlLift::translation(q("1/2")));
        let a: TreePair = "10100 | 11000 | 0".parse().unwrap();
        assert_eq!(
            a.to_plmap().lift(),
            &lift(&[("0", "0"), ("1/2", "1/4"), ("3/4", "1/2")])
        );
        assert_eq!(a.to_string(), "10100 | 11000 | 0");
    }

    #[test]
    fn parse_errors_are_distinct() {
        assert!(matches!(
            "10 | 0 | 0".parse::<TreePair>(),
            Err(TreeError::BadTree { .. })
        ));
        assert!(matches!(
            "000 | 0 | 0".parse::<TreePair>(),
            Err(TreeError::BadTree { .. })
        ));
        assert!(matches!(
            "1x0 | 0 | 0".parse::<TreePair>(),
            Err(TreeError::BadTree { .. })
        ));
        assert!(matches!(
            "100 | 0 | 0".parse::<TreePair>(),
            Err(TreeError::LeafMismatch {
                domain: 2,
                range: 1
            })
        ));
        assert!(matches!(
            "100 | 100 | 2".parse::<TreePair>(),
            Err(TreeError::RotationOutOfRange { .. })
        ));
        assert!(matches!(
            "100 | 100 | -1".parse::<TreePair>(),
            Err(TreeError::RotationOutOfRange { .. })
        ));
        assert!(matches!(
            "100 | 100".parse::<TreePair>(),
            Err(TreeError::Format(_))
        ));
    }

    #[test]
    fn builtins() {
        assert!(builtin("id").unwrap().is_identity());
        assert_eq!(builtin("A").unwrap().evaluate(&q("3/4")), q("1/2"));
        let b = builtin("B").unwrap();
        assert_eq!(b.evaluate(&q("1/4")), q("1/4"));
        // half-scale copy of A on [1/2, 1]
        assert_eq!(
            b.lift(),
            &lift(&[("0", "0"), ("1/2", "1/2"), ("3/4", "5/8"), ("7/8", "3/4")])
        );
        assert_eq!(builtin("R").unwrap().evaluate(&q("1/4")), q("3/4"));
        assert!(matches!(builtin("C"), Err(TreeError::UnknownBuiltin(_))));
        for name in ["id", "A", "B", "R"] {
            assert!(builtin(name).unwrap().validate_thompson());
        }
    }

    #[test]
    fn expansion_preserves_the_map() {
        for text in [
            "100 | 100 | 1",
            "10100 | 11000 | 0",
            "10100 | 11000 | 2",
            "1100100 | 1011000 | 3",
        ] {
            let tp: TreePair = text.parse().unwrap();
            for i in 0..tp.leaf_count() {
                let e = tp.expand(i);
                assert_eq!(e.to_plmap(), tp.to_plmap(), "{text} expanded at {i} -> {e}");
            }
        }
    }
}
