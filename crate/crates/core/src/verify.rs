//! Seeded property suites behind `tscl verify`.
//!
//! Each property draws from its own [`Sampler`], seeded from the run seed and
//! the property name, so a property's samples do not depend on which other
//! suites ran.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;

use crate::dynamics::{self, SearchBudget};
use crate::extension::{pair_defect, TnElement};
use crate::numeric::Rational;
use crate::plmap::PlLift;
use crate::realizer::{cycler_partition, partition_cycler, realize_phi, realize_scl};
use crate::sample::Sampler;
use crate::word::{GeneratorTable, Letter, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Suite {
    Arith,
    Plmap,
    Dynamics,
    Extension,
    Word,
    Realizer,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Arith,
        Suite::Plmap,
        Suite::Dynamics,
        Suite::Extension,
        Suite::Word,
        Suite::Realizer,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Arith => "arith",
            Suite::Plmap => "plmap",
            Suite::Dynamics => "dynamics",
            Suite::Extension => "extension",
            Suite::Word => "word",
            Suite::Realizer => "realizer",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A suite name or `all`.
pub fn parse_suites(text: &str) -> Result<Vec<Suite>, String> {
    if text == "all" {
        return Ok(Suite::ALL.to_vec());
    }
    text.parse().map(|s| vec![s])
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| {
                format!("unknown suite {s:?} (expected arith, plmap, dynamics, extension, word, realizer or all)")
            })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyOutcome {
    pub suite: Suite,
    pub name: &'static str,
    pub checked: usize,
    pub failure: Option<String>,
}

impl PropertyOutcome {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

impl fmt::Display for PropertyOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.failure {
            None => write!(
                f,
                "PASS {}/{} ({} cases)",
                self.suite, self.name, self.checked
            ),
            Some(why) => write!(f, "FAIL {}/{}: {}", self.suite, self.name, why),
        }
    }
}

type Check = fn(&mut Sampler, usize, &SearchBudget) -> Result<usize, String>;

macro_rules! ensure {
    ($cond:expr, $($arg:tt)+) => {
        if !$cond {
            return Err(format!($($arg)+));
        }
    };
}

fn err(e: impl fmt::Display) -> String {
    e.to_string()
}

fn property_seed(seed: u64, name: &str) -> u64 {
    // FNV-1a over the name, mixed with the run seed
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in name.bytes() {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h ^ seed.wrapping_mul(0x9e37_79b9_7f4a_7c15)
}

fn properties(suite: Suite) -> Vec<(&'static str, Check)> {
    match suite {
        Suite::Arith => vec![
            ("floor_brackets", arith_floor),
            ("mediant_between", arith_mediant),
            ("add_sub_round_trip", arith_round_trip),
        ],
        Suite::Plmap => vec![
            ("compose_associative", pl_associative),
            ("invert_two_sided", pl_invert),
            ("evaluate_compose", pl_evaluate_compose),
            ("extremes_bracket", pl_extremes),
            ("thompson_closed", pl_thompson_closed),
            ("tree_pair_validates", tp_validates),
            ("tree_pair_expansion_invariant", tp_expansion),
            ("tree_pair_inverse_round_trip", tp_round_trip),
        ],
        Suite::Dynamics => vec![
            ("cocycle_identity", dyn_cocycle_identity),
            ("cocycle_values", dyn_cocycle_values),
            ("floor_identity", dyn_floor_identity),
            ("translation_homogeneity", dyn_homogeneity),
            ("conjugation_invariance", dyn_conjugation),
            ("oracle_consistency", dyn_oracle),
            ("certificate_valid", dyn_certificate),
            ("phi_homogeneity", dyn_phi_homogeneity),
            ("defect_scaling", dyn_defect_scaling),
            ("defect_bound", dyn_defect_bound),
        ],
        Suite::Extension => vec![
            ("associativity", ext_associative),
            ("identity", ext_identity),
            ("inverses", ext_inverses),
            ("centrality", ext_centrality),
            ("phi_class_function", ext_phi_class),
            ("level_scaling", ext_level_scaling),
            ("scl_conjugation_and_powers", ext_scl),
        ],
        Suite::Word => vec![
            ("evaluate_homomorphism", word_homomorphism),
            ("scl_power", word_power),
            ("scl_conjugation", word_conjugation),
        ],
        Suite::Realizer => vec![
            ("round_trip_grid", real_grid),
            ("cycler_permutes_partition", real_permutes),
            ("cycler_in_thompson", real_thompson),
            ("phi_image_grid", real_phi_grid),
        ],
    }
}

/// Runs the named suites; grid-based realizer checks ignore `samples`.
pub fn run(
    suites: &[Suite],
    samples: usize,
    seed: u64,
    budget: &SearchBudget,
) -> Vec<PropertyOutcome> {
    let mut out = Vec::new();
    for &suite in suites {
        for (name, check) in properties(suite) {
            let mut sampler = Sampler::new(property_seed(seed, name));
            let (checked, failure) = match check(&mut sampler, samples, budget) {
                Ok(n) => (n, None),
                Err(why) => (0, Some(why)),
            };
            out.push(PropertyOutcome {
                suite,
                name,
                checked,
                failure,
            });
        }
    }
    out
}

fn arith_floor(s: &mut Sampler, n: usize, _: &SearchBudget) -> Result<usize, String> {
    for _ in 0..n {
        let a = s.rational();
        let f = Rational::from_integer(a.floor());
        ensure!(f <= a && a < &f + &Rational::one(), "floor({a}) = {f}");
    }
    Ok(n)
}

fn arith_mediant(s: &mut Sampler, n: usize, _: &SearchBudget) -> Result<usize, String> {
    let mut checked = 0;
    for _ in 0..n {
        let (a, b) = (s.rational(), s.rational());
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        if lo == hi {
            continue;
        }
        let m = lo.mediant(&hi);
        ensure!(lo < m && m < hi, "mediant({lo}, {hi}) = {m}");
        checked += 1;
    }
    Ok(checked)
}

fn arith_round_trip(s: &mut Sampler, n: usize, _: &SearchBudget) -> Result<usize, String> {
    for _ in 0..n {
        let (a, b) = (s.rational(), s.rational());
        ensure!(&(&a + &b) - &b == a, "({a} + {b}) - {b} != {a}");
    }
    Ok(n)
}

fn lift(s: &mut Sampler) -> PlLift {
    s.element().into_lift()
}

fn pl_associative(s: &mut Sampler, n: usize, _: &SearchBudget) -> Result<usize, String> {
    for _ in 0..n {
        let (f, g, h) = (lift(s), lift(s), lift(s));
        ensure!(
            f.compose(&g).compose(&h) == f.compose(&g.compose(&h)),
            "(fg)h != f(gh) for {f:?}, {g:?}, {h:?}"
        );
    }
    Ok(n)
}

fn pl_invert(s: &mut Sampler, n: usize, _: &SearchBudget) -> Result<usize, String> {
    for _ in 0..n {
        let f = lift(s);
        let inv = f.invert();
        ensure!(
            f.compose(&inv).is_identity() && inv.compose(&f).is_identity(),
            "inverse fails for {f:?}"
        );
    }
    Ok(n)
}

fn pl_evaluate_compose(s: &mut Sampler, n: usize, _: &SearchBudget) -> Result<usize, String> {
    for _ in 0..n {
        let (f, g) = (lift(s), lift(s));
        let fg = f.compose(&g);
        for _ in 0..4 {
            let x = s.point();
            ensure!(
                fg.evaluate(&x) == f.evaluate(&g.evaluate(&x)),
                "(fg)({x}) mismatch for {f:?}, {g:?}"
            );
        }
    }
    Ok(n)
}

fn pl_extremes(s: &mut Sampler, n: usize, _: &SearchBudget) -> Result<usize, String> {
    for _ in 0..n {
        let f = lift(s);
        let p = BigInt::from(s.central());
        let (lo, hi) = f.extremes(&p);
        for _ in 0..4 {
            let x = s.point();
            let d = f.evaluate(&x) - &x - Rational::from_integer(p.clone());
            ensure!(
                lo <= d && d <= hi,
                "displacement {d} at {x} outside [{lo}, {hi}]"
            );
        }
    }
    Ok(n)
}

fn pl_thompson_closed(s: &mut Sampler, n: usize, _: &SearchBudget) -> Result<usize, String> {
    for _ in 0..n {
        let (f, g) = (lift(s), lift(s));
        ensure!(f.compose(&g).validate_thompson(), "composite left T");
        ensure!(f.invert().validate_thompson(), "inverse left T");
    }
    Ok(n)
}

fn tp_validates(s: &mut Sampler, n: usize, _: &SearchBudget) -> Result<usize, String> {
    for _ in 0..n {
        let tp = s.tree_pair();
        ensure!(tp.to_plmap().validate_thompson(), "{tp} is not in T");
    }
    Ok(n)
}

fn tp_expansion(s: &mut Sampler, n: usize, _: &SearchBudget) -> Result<usize, String> {
    use rand::Rng;
    for _ in 0..n {
        let tp = s.tree_pair();
        let leaf = s.rng().gen_range(0..tp.leaf_count());
        let expanded = tp.expand(leaf);
        ensure!(
            expanded.to_plmap() == tp.to_plmap(),
            "expanding {tp} at leaf {leaf} changed the map"
        );
    }
    Ok(n)
}

fn tp_round_trip(s: &mut Sampler, n: usize, _: &SearchBudget) -> Result<usize, String> {
    for _ in 0..n {
        let t = s.element();
        ensure!(t.then_after(&t.inverse()).is_identity(), "t t^-1 != id");
    }
    Ok(n)
}

fn dyn_cocycle_identity(s: &mut Sampler, n: usize, _: &SearchBudget) -> Result<usize, String> {
    use dynamics::euler_cocycle as chi;
    for _ in 0..n {
        let (a, b, c) = (s.element(), s.element(), s.element());
        let left = chi(&a, &b) + chi(&a.then_after(&b), &c);
        let right = chi(&b, &c) + chi(&a, &b.then_after(&c));
        ensure!(left == right, "δχ != 0 on {a:?}, {b:?}, {c:?}");
    }
    Ok(n)
}

fn dyn_cocycle_values(s: &mut Sampler, n: usize, _: &SearchBudget) -> Result<usize, String> {
    for _ in 0..n {
        let (a, b) = (s.element(), s.element());
        let v = dynamics::euler_cocycle(&a, &b);
        ensure!(v == 0 || v == 1, "χ = {v}");
    }
    Ok(n)
}

fn dyn_floor_identity(s: &mut Sampler, n: usize, _: &SearchBudget) -> Result<usize, String> {
    for _ in 0..n {
        let t = s.element();
        for k in 1..=32 {
            let a = dynamics::partial_sum_a(&t, k);
            let f = dynamics::partial_sum_floor(&t, k);
            ensure!(
                a == f,
                "a(t, {k}) = {a} but floor(t^{k}(0)) = {f} for {t:?}"
            );
        }
    }
    Ok(n)
}

fn dyn_homogeneity(s: &mut Sampler, n: usize, b: &SearchBudget) -> Result<usize, String> {
    for _ in 0..n {
        let f = lift(s);
        let tau = dynamics::translation_number(&f, b).map_err(err)?.value;
        for k in 1..=8 {
            let tk = dynamics::translation_number(&f.pow(k), b)
                .map_err(err)?
                .value;
            ensure!(
                tk == Rational::from(k) * tau.clone(),
                "τ(F^{k}) = {tk}, τ(F) = {tau}"
            );
        }
    }
    Ok(n)
}

fn dyn_conjugation(s: &mut Sampler, n: usize, b: &SearchBudget) -> Result<usize, String> {
    for _ in 0..n {
        let (f, g) = (lift(s), lift(s));
        let tau = dynamics::translation_number(&f, b).map_err(err)?.value;
        let conj = g.compose(&f).compose(&g.invert());
        let c = dynamics::translation_number(&conj, b).map_err(err)?.value;
        ensure!(c == tau, "τ(GFG^-1) = {c} but τ(F) = {tau}");
        let (canon, k) = conj.canonicalize();
        let cc = dynamics::translation_number(&canon, b).map_err(err)?.value;
        ensure!(
            cc + Rational::from_integer(k) == tau,
            "canonicalized conjugate disagrees modulo 1"
        );
    }
    Ok(n)
}

fn dyn_oracle(s: &mut Sampler, n: usize, b: &SearchBudget) -> Result<usize, String> {
    for _ in 0..n {
        let f = lift(s);
        let tau = dynamics::translation_number(&f, b).map_err(err)?.value;
        for k in [10u32, 100] {
            let est = dynamics::translation_estimate(&f, k);
            let bound = Rational::new(1, k).expect("k > 0");
            ensure!((&est - &tau).abs() <= bound, "|{est} - {tau}| > 1/{k}");
        }
    }
    Ok(n)
}

fn dyn_certificate(s: &mut Sampler, n: usize, b: &SearchBudget) -> Result<usize, String> {
    for _ in 0..n {
        let f = lift(s);
        let cert = dynamics::translation_number(&f, b).map_err(err)?;
        ensure!(
            cert.verify(&f),
            "witness {} fails for τ = {}",
            cert.witness,
            cert.value
        );
    }
    Ok(n)
}

const LEVELS: [i64; 3] = [1, 12, 21];

fn dyn_phi_homogeneity(s: &mut Sampler, n: usize, b: &SearchBudget) -> Result<usize, String> {
    for i in 0..n {
        let g = s.tn_element(LEVELS[i % 3]);
        let phi = g.phi(b).map_err(err)?;
        for k in 1..=8 {
            let pk = g.power(k).phi(b).map_err(err)?;
            ensure!(
                pk == Rational::from(k) * phi.clone(),
                "φ(g^{k}) = {pk}, φ(g) = {phi}"
            );
        }
    }
    Ok(n)
}

fn dyn_defect_scaling(s: &mut Sampler, n: usize, b: &SearchBudget) -> Result<usize, String> {
    for i in 0..n {
        let level = LEVELS[i % 3];
        let (g, h) = (s.tn_element(level), s.tn_element(level));
        let d = pair_defect(&g, &h, b).map_err(err)?;
        let base = dynamics::cocycle_defect(g.circle(), h.circle(), b).map_err(err)?;
        ensure!(
            d == Rational::from(level) * base.clone(),
            "δφ_{level} = {d}, δφ_1 = {base}"
        );
    }
    Ok(n)
}

fn dyn_defect_bound(s: &mut Sampler, n: usize, b: &SearchBudget) -> Result<usize, String> {
    for i in 0..n {
        let level = LEVELS[i % 3];
        let (g, h) = (s.tn_element(level), s.tn_element(level));
        let d = pair_defect(&g, &h, b).map_err(err)?;
        ensure!(d.abs() <= level, "|δφ_{level}| = {} > {level}", d.abs());
    }
    Ok(n)
}

fn ext_associative(s: &mut Sampler, n: usize, _: &SearchBudget) -> Result<usize, String> {
    for i in 0..n {
        let level = LEVELS[i % 3];
        let (a, b, c) = (
            s.tn_element(level),
            s.tn_element(level),
            s.tn_element(level),
        );
        let left = a.multiply(&b).and_then(|ab| ab.multiply(&c)).map_err(err)?;
        let right = b.multiply(&c).and_then(|bc| a.multiply(&bc)).map_err(err)?;
        ensure!(left == right, "(ab)c != a(bc) for {a:?}, {b:?}, {c:?}");
    }
    Ok(n)
}

fn ext_identity(s: &mut Sampler, n: usize, _: &SearchBudget) -> Result<usize, String> {
    for i in 0..n {
        let level = LEVELS[i % 3];
        let g = s.tn_element(level);
        let e = TnElement::identity(level).map_err(err)?;
        ensure!(
            g.multiply(&e).map_err(err)? == g && e.multiply(&g).map_err(err)? == g,
            "identity fails for {g:?}"
        );
    }
    Ok(n)
}

fn ext_inverses(s: &mut Sampler, n: usize, _: &SearchBudget) -> Result<usize, String> {
    for i in 0..n {
        let g = s.tn_element(LEVELS[i % 3]);
        let inv = g.inverse();
        ensure!(
            g.multiply(&inv).map_err(err)?.is_identity()
                && inv.multiply(&g).map_err(err)?.is_identity(),
            "inverse fails for {g:?}"
        );
    }
    Ok(n)
}

fn ext_centrality(s: &mut Sampler, n: usize, _: &SearchBudget) -> Result<usize, String> {
    for i in 0..n {
        let level = LEVELS[i % 3];
        let g = s.tn_element(level);
        let z = TnElement::central(level, s.central()).map_err(err)?;
        ensure!(
            g.multiply(&z).map_err(err)? == z.multiply(&g).map_err(err)?,
            "{z:?} does not commute with {g:?}"
        );
    }
    Ok(n)
}

fn ext_phi_class(s: &mut Sampler, n: usize, b: &SearchBudget) -> Result<usize, String> {
    for i in 0..n {
        let level = LEVELS[i % 3];
        let (g, h) = (s.tn_element(level), s.tn_element(level));
        let conj = g.conjugate_by(&h).map_err(err)?;
        let (p, pc) = (g.phi(b).map_err(err)?, conj.phi(b).map_err(err)?);
        ensure!(p == pc, "φ(hgh^-1) = {pc} but φ(g) = {p}");
    }
    Ok(n)
}

fn ext_level_scaling(s: &mut Sampler, n: usize, b: &SearchBudget) -> Result<usize, String> {
    for i in 0..n {
        let level = LEVELS[1 + i % 2];
        let t = s.element();
        let j = s.central();
        let at_level = TnElement::new(level, t.clone(), level * j).map_err(err)?;
        let at_one = TnElement::new(1, t, j).map_err(err)?;
        let (pn, p1) = (at_level.phi(b).map_err(err)?, at_one.phi(b).map_err(err)?);
        ensure!(
            pn == Rational::from(level) * p1.clone(),
            "φ_{level}(t, {level}j) = {pn}, φ_1(t, j) = {p1}"
        );
    }
    Ok(n)
}

fn ext_scl(s: &mut Sampler, n: usize, b: &SearchBudget) -> Result<usize, String> {
    for i in 0..n {
        let level = LEVELS[i % 3];
        let (g, h) = (s.tn_element(level), s.tn_element(level));
        let scl = g.scl(b).map_err(err)?;
        let conj = g.conjugate_by(&h).map_err(err)?.scl(b).map_err(err)?;
        ensure!(conj == scl, "scl(hgh^-1) = {conj}, scl(g) = {scl}");
        for k in 1..=4 {
            let sk = g.power(k).scl(b).map_err(err)?;
            ensure!(
                sk == Rational::from(k) * scl.clone(),
                "scl(g^{k}) = {sk}, scl(g) = {scl}"
            );
        }
    }
    Ok(n)
}

const WORD_NAMES: [&str; 5] = ["g0", "g1", "g2", "sigma_1", "sigma_2"];

fn random_table(s: &mut Sampler) -> GeneratorTable {
    let level = LEVELS[usize::try_from(s.central().rem_euclid(3)).expect("non-negative")];
    let mut table = GeneratorTable::braided(level).expect("non-zero level");
    for name in &WORD_NAMES[..3] {
        table.insert(name, s.tn_element(level)).expect("same level");
    }
    table
}

fn random_word(s: &mut Sampler) -> Word {
    use rand::Rng;
    let len = s.rng().gen_range(0..=5);
    Word::from_letters(
        (0..len)
            .map(|_| {
                let name = WORD_NAMES[s.rng().gen_range(0..WORD_NAMES.len())];
                let exp = s.rng().gen_range(-2i64..=2);
                Letter::new(name, exp)
            })
            .collect(),
    )
}

fn word_homomorphism(s: &mut Sampler, n: usize, _: &SearchBudget) -> Result<usize, String> {
    for _ in 0..n {
        let table = random_table(s);
        let (u, v) = (random_word(s), random_word(s));
        let uv = table.evaluate(&u.concat(&v)).map_err(err)?;
        let prod = table
            .evaluate(&u)
            .and_then(|a| Ok(a.multiply(&table.evaluate(&v)?)?))
            .map_err(err)?;
        ensure!(uv == prod, "eval({u} {v}) != eval({u}) eval({v})");
    }
    Ok(n)
}

fn word_power(s: &mut Sampler, n: usize, b: &SearchBudget) -> Result<usize, String> {
    for _ in 0..n {
        let table = random_table(s);
        let w = random_word(s);
        let scl = table.scl_of_word(&w, b).map_err(err)?;
        for k in 1..=4usize {
            let sk = table.scl_of_word(&w.repeat(k), b).map_err(err)?;
            ensure!(
                sk == Rational::from(k as i64) * scl.clone(),
                "scl(({w})^{k}) = {sk}, scl = {scl}"
            );
        }
    }
    Ok(n)
}

fn word_conjugation(s: &mut Sampler, n: usize, b: &SearchBudget) -> Result<usize, String> {
    for _ in 0..n {
        let table = random_table(s);
        let (w, u) = (random_word(s), random_word(s));
        let conj = u.concat(&w).concat(&u.inverse());
        let (a, c) = (
            table.scl_of_word(&w, b).map_err(err)?,
            table.scl_of_word(&conj, b).map_err(err)?,
        );
        ensure!(a == c, "scl({conj}) = {c} but scl({w}) = {a}");
    }
    Ok(n)
}

fn real_grid(_: &mut Sampler, _: usize, b: &SearchBudget) -> Result<usize, String> {
    let mut checked = 0;
    for level in LEVELS {
        for num in 0..=10i64 {
            for den in 1..=10i64 {
                if num.gcd(&den) != 1 {
                    continue;
                }
                let target = Rational::new(num, den).expect("den > 0");
                let cert = realize_scl(&target, level, b).map_err(err)?;
                let scl = cert.element.scl(b).map_err(err)?;
                ensure!(
                    scl == target,
                    "realize_scl({target}, {level}) has scl {scl}"
                );
                checked += 1;
            }
        }
    }
    Ok(checked)
}

fn real_permutes(_: &mut Sampler, _: usize, _: &SearchBudget) -> Result<usize, String> {
    let mut checked = 0;
    for q in 1..=12u64 {
        let a = cycler_partition(q);
        for p in (0..q).filter(|p| p.gcd(&q) == 1) {
            let f = partition_cycler(p, q).map_err(err)?;
            for i in 0..q {
                let j = i + p;
                let expected = if j >= q {
                    &a[(j - q) as usize] + &Rational::one()
                } else {
                    a[j as usize].clone()
                };
                ensure!(
                    f.evaluate(&a[i as usize]) == expected,
                    "cycler({p}, {q}) moves a_{i} wrongly"
                );
            }
            checked += 1;
        }
    }
    Ok(checked)
}

fn real_thompson(_: &mut Sampler, _: usize, _: &SearchBudget) -> Result<usize, String> {
    let mut checked = 0;
    for q in 1..=24u64 {
        for p in (0..q).filter(|p| p.gcd(&q) == 1) {
            ensure!(
                partition_cycler(p, q).map_err(err)?.validate_thompson(),
                "cycler({p}, {q}) not in T"
            );
            checked += 1;
        }
    }
    Ok(checked)
}

fn real_phi_grid(_: &mut Sampler, _: usize, b: &SearchBudget) -> Result<usize, String> {
    let mut checked = 0;
    for level in LEVELS {
        for num in -10..=10i64 {
            for den in 1..=10i64 {
                if num.gcd(&den) != 1 {
                    continue;
                }
                let value = Rational::new(num, den).expect("den > 0");
                let g = realize_phi(&value, level).map_err(err)?;
                let phi = g.phi(b).map_err(err)?;
                ensure!(
                    phi == value,
                    "no element with φ_{level} = {value} (got {phi})"
                );
                checked += 1;
            }
        }
    }
    Ok(checked)
}
