//! Seeded random elements for property checks.
//!
//! A random element of T is drawn as follows: a leaf count `N` uniform in
//! `1..=max_leaves`, two binary trees with `N` leaves each drawn uniformly
//! among all tree shapes, and a rotation uniform in `0..N`. Central
//! coordinates are uniform in `[-5, 5]`. The stream is fully determined by the
//! seed (ChaCha8).

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::extension::TnElement;
use crate::numeric::Rational;
use crate::plmap::CanonicalLift;
use crate::tree_pair::{BinTree, TreePair};

pub const DEFAULT_MAX_LEAVES: usize = 8;
pub const CENTRAL_RANGE: i64 = 5;

pub struct Sampler {
    rng: ChaCha8Rng,
    max_leaves: usize,
    catalan: Vec<u64>,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Self::with_max_leaves(seed, DEFAULT_MAX_LEAVES)
    }

    pub fn with_max_leaves(seed: u64, max_leaves: usize) -> Self {
        assert!((1..=30).contains(&max_leaves));
        // catalan[k] = number of binary trees with k + 1 leaves
        let mut catalan = vec![1u64];
        for k in 1..max_leaves {
            let c = (0..k).map(|i| catalan[i] * catalan[k - 1 - i]).sum();
            catalan.push(c);
        }
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
            max_leaves,
            catalan,
        }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    /// Uniform over the shapes with `leaves` leaves.
    pub fn tree(&mut self, leaves: usize) -> BinTree {
        if leaves == 1 {
            return BinTree::Leaf;
        }
        let total = self.catalan[leaves - 1];
        let mut pick = self.rng.gen_range(0..total);
        for left in 1..leaves {
            let count = self.catalan[left - 1] * self.catalan[leaves - left - 1];
            if pick < count {
                let l = self.tree(left);
                let r = self.tree(leaves - left);
                return BinTree::Node(Box::new(l), Box::new(r));
            }
            pick -= count;
        }
        unreachable!("split counts sum to the Catalan number")
    }

    pub fn tree_pair(&mut self) -> TreePair {
        let leaves = self.rng.gen_range(1..=self.max_leaves);
        let domain = self.tree(leaves);
        let range = self.tree(leaves);
        let rotation = self.rng.gen_range(0..leaves);
        TreePair::new(domain, range, rotation).expect("matching leaf counts")
    }

    pub fn element(&mut self) -> CanonicalLift {
        self.tree_pair().to_plmap()
    }

    pub fn central(&mut self) -> i64 {
        self.rng.gen_range(-CENTRAL_RANGE..=CENTRAL_RANGE)
    }

    pub fn tn_element(&mut self, n: i64) -> TnElement {
        let t = self.element();
        let j = self.central();
        TnElement::new(n, t, j).expect("tree pairs give Thompson elements")
    }

    /// A rational `a/b` with `|a| <= 1000`, `1 <= b <= 200`.
    pub fn rational(&mut self) -> Rational {
        let a = self.rng.gen_range(-1000i64..=1000);
        let b = self.rng.gen_range(1i64..=200);
        Rational::new(a, b).expect("b > 0")
    }

    /// A point in `[-2, 2)` with a small dyadic or non-dyadic denominator.
    pub fn point(&mut self) -> Rational {
        let b = self.rng.gen_range(1i64..=64);
        let a = self.rng.gen_range(-2 * b..2 * b);
        Rational::new(a, b).expect("b > 0")
    }
}
