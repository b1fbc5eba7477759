//! Residue classes `a(n)`, finite systems of them, covering functions and
//! the derived notions (multiplicity, m-covers, essential classes, duals).

use std::collections::BTreeSet;
use std::fmt;
use std::hash::{Hash, Hasher};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::arith::numtheory::checked_lcm;
use crate::error::{Error, Result};

/// Largest period `N_A` any system may have.
pub const PERIOD_CAP: u64 = 1_000_000;

/// `a(n) = a + nℤ`. Equality and hashing use the canonical residue in
/// `[0, n)`; the residue as written is kept for display.
#[derive(Clone, Copy)]
pub struct ResidueClass {
    residue: u64,
    presented: i64,
    modulus: u64,
}

impl ResidueClass {
    pub fn new(a: i64, n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid("modulus must be positive"));
        }
        if n > PERIOD_CAP {
            return Err(Error::Cap { what: "modulus", cap: PERIOD_CAP, got: n });
        }
        Ok(ResidueClass { residue: a.rem_euclid(n as i64) as u64, presented: a, modulus: n })
    }

    /// Canonical residue in `[0, n)`.
    pub fn residue(&self) -> u64 {
        self.residue
    }

    /// Residue as originally written.
    pub fn presented(&self) -> i64 {
        self.presented
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn contains(&self, x: i64) -> bool {
        x.rem_euclid(self.modulus as i64) as u64 == self.residue
    }
}

impl PartialEq for ResidueClass {
    fn eq(&self, other: &Self) -> bool {
        self.residue == other.residue && self.modulus == other.modulus
    }
}

impl Eq for ResidueClass {}

impl Hash for ResidueClass {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.residue.hash(state);
        self.modulus.hash(state);
    }
}

impl fmt::Debug for ResidueClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.presented, self.modulus)
    }
}

impl fmt::Display for ResidueClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Serialize, Deserialize)]
struct ClassRepr {
    a: i64,
    n: u64,
}

impl Serialize for ResidueClass {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        ClassRepr { a: self.presented, n: self.modulus }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for ResidueClass {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let r = ClassRepr::deserialize(d)?;
        ResidueClass::new(r.a, r.n).map_err(serde::de::Error::custom)
    }
}

/// A finite system `{a_s(n_s)}`, duplicates allowed. Indices are 0-based.
#[derive(Clone, PartialEq, Eq)]
pub struct CoverSystem {
    classes: Vec<ResidueClass>,
    period: u64,
}

impl fmt::Debug for CoverSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(&self.classes).finish()
    }
}

impl CoverSystem {
    pub fn new(classes: Vec<ResidueClass>) -> Result<Self> {
        let mut period = 1u64;
        for c in &classes {
            period = checked_lcm(period, c.modulus)
                .filter(|&l| l <= PERIOD_CAP)
                .ok_or(Error::Cap { what: "period N_A", cap: PERIOD_CAP, got: u64::MAX })?;
        }
        Ok(CoverSystem { classes, period })
    }

    pub fn from_pairs(pairs: &[(i64, u64)]) -> Result<Self> {
        let classes = pairs.iter().map(|&(a, n)| ResidueClass::new(a, n)).collect::<Result<_>>()?;
        Self::new(classes)
    }

    pub fn classes(&self) -> &[ResidueClass] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// `N_A = lcm(n_1, …, n_k)`, the period of the covering function.
    pub fn period(&self) -> u64 {
        self.period
    }

    pub fn moduli(&self) -> Vec<u64> {
        self.classes.iter().map(|c| c.modulus).collect()
    }

    /// `w_A(x)` for `x` in `[0, N_A)`, by stepping through each class.
    pub fn coverage_table(&self) -> Vec<u32> {
        let n = self.period as usize;
        let mut table = vec![0u32; n];
        for c in &self.classes {
            let mut x = c.residue as usize;
            while x < n {
                table[x] += 1;
                x += c.modulus as usize;
            }
        }
        table
    }

    pub fn covering_function(&self, x: i64) -> usize {
        self.classes.iter().filter(|c| c.contains(x)).count()
    }

    /// `I_x = {s : x ∈ a_s(n_s)}`.
    pub fn covering_indices(&self, x: i64) -> Vec<usize> {
        (0..self.len()).filter(|&s| self.classes[s].contains(x)).collect()
    }

    pub fn covering_multiplicity(&self) -> u64 {
        self.coverage_table().into_iter().min().unwrap_or(0) as u64
    }

    pub fn max_coverage(&self) -> u64 {
        self.coverage_table().into_iter().max().unwrap_or(0) as u64
    }

    pub fn is_m_cover(&self, m: u64) -> bool {
        self.covering_multiplicity() >= m
    }

    pub fn is_m_system(&self, m: u64) -> bool {
        self.max_coverage() <= m
    }

    /// Indices `t` such that dropping class `t` leaves something covered
    /// fewer than `m` times.
    pub fn essential_classes(&self, m: u64) -> Result<BTreeSet<usize>> {
        let table = self.coverage_table();
        let actual = table.iter().copied().min().unwrap_or(0) as u64;
        if actual < m {
            return Err(Error::NotMCover { m, actual });
        }
        let n = self.period as usize;
        let mut out = BTreeSet::new();
        for (t, c) in self.classes.iter().enumerate() {
            let mut x = c.residue as usize;
            while x < n {
                if table[x] as u64 == m {
                    out.insert(t);
                    break;
                }
                x += c.modulus as usize;
            }
        }
        Ok(out)
    }

    pub fn is_essential(&self, t: usize, m: u64) -> Result<bool> {
        Ok(self.essential_classes(m)?.contains(&t))
    }

    /// The system with class `t` removed.
    pub fn without(&self, t: usize) -> CoverSystem {
        let mut classes = self.classes.clone();
        classes.remove(t);
        CoverSystem::new(classes).expect("a subsystem has a smaller period")
    }

    /// `A* = {a_s + r (n_s) : 1 ≤ r < n_s}`.
    pub fn dual_system(&self) -> CoverSystem {
        let mut classes = Vec::new();
        for c in &self.classes {
            for r in 1..c.modulus {
                classes.push(ResidueClass::new(c.presented + r as i64, c.modulus).expect("same modulus"));
            }
        }
        CoverSystem::new(classes).expect("dual moduli are unchanged")
    }

    /// Replaces `a(n)` at `index` by `{a + i n (d n)}` for `i < d`.
    pub fn split_class(&self, index: usize, d: u64) -> Result<CoverSystem> {
        let c = *self
            .classes
            .get(index)
            .ok_or_else(|| Error::invalid(format!("class index {index} out of range")))?;
        if d == 0 {
            return Err(Error::invalid("split factor must be positive"));
        }
        let modulus = c.modulus.checked_mul(d).ok_or_else(|| Error::invalid("modulus overflow"))?;
        let mut classes = Vec::with_capacity(self.len() + d as usize - 1);
        classes.extend_from_slice(&self.classes[..index]);
        for i in 0..d {
            classes.push(ResidueClass::new(c.presented + (i * c.modulus) as i64, modulus)?);
        }
        classes.extend_from_slice(&self.classes[index + 1..]);
        CoverSystem::new(classes)
    }

    pub fn push(&self, class: ResidueClass) -> Result<CoverSystem> {
        let mut classes = self.classes.clone();
        classes.push(class);
        CoverSystem::new(classes)
    }
}

pub fn covering_function(a: &CoverSystem, x: i64) -> usize {
    a.covering_function(x)
}

pub fn covering_multiplicity(a: &CoverSystem) -> u64 {
    a.covering_multiplicity()
}

pub fn is_m_cover(a: &CoverSystem, m: u64) -> bool {
    a.is_m_cover(m)
}

pub fn essential_classes(a: &CoverSystem, m: u64) -> Result<BTreeSet<usize>> {
    a.essential_classes(m)
}

pub fn dual_system(a: &CoverSystem) -> CoverSystem {
    a.dual_system()
}

pub fn is_m_system(a: &CoverSystem, m: u64) -> bool {
    a.is_m_system(m)
}

/// `A_0 = {a_0(n_0)} ∪ {a_s(n_s)}_{s=1}^k`, with the distinguished class kept
/// apart from the tail.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AugmentedSystem {
    pub a0: ResidueClass,
    pub tail: CoverSystem,
}

impl AugmentedSystem {
    pub fn new(a0: ResidueClass, tail: CoverSystem) -> Self {
        AugmentedSystem { a0, tail }
    }

    /// The whole system with `a_0(n_0)` at index 0 and tail class `s` at
    /// index `s + 1`.
    pub fn full(&self) -> Result<CoverSystem> {
        let mut classes = Vec::with_capacity(self.tail.len() + 1);
        classes.push(self.a0);
        classes.extend_from_slice(self.tail.classes());
        CoverSystem::new(classes)
    }

    /// The integer `a_0` as written.
    pub fn a0_point(&self) -> i64 {
        self.a0.presented
    }

    /// Tail indices whose class contains `a_0`.
    pub fn tail_indices_containing_a0(&self) -> Vec<usize> {
        self.tail.covering_indices(self.a0_point())
    }
}

/// Knobs for the refinement generator.
#[derive(Clone, Debug)]
pub struct SplitOptions {
    pub factors: Vec<u64>,
    /// Every modulus must divide this, when set.
    pub modulus_budget: Option<u64>,
    pub max_classes: Option<usize>,
}

impl Default for SplitOptions {
    fn default() -> Self {
        SplitOptions { factors: vec![2, 3], modulus_budget: None, max_classes: None }
    }
}

/// `steps` random refinements of `base` with a ChaCha stream seeded by
/// `seed`. The covering function is unchanged.
pub fn split_class_generator(base: &CoverSystem, seed: u64, steps: usize) -> Result<CoverSystem> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    split_with(base, &mut rng, steps, &SplitOptions::default())
}

pub fn split_with<R: Rng>(base: &CoverSystem, rng: &mut R, steps: usize, opts: &SplitOptions) -> Result<CoverSystem> {
    let mut sys = base.clone();
    for _ in 0..steps {
        let mut moves = Vec::new();
        for (i, c) in sys.classes().iter().enumerate() {
            for &d in &opts.factors {
                let Some(n) = c.modulus.checked_mul(d) else { continue };
                if opts.modulus_budget.is_some_and(|b| b % n != 0) {
                    continue;
                }
                if opts.max_classes.is_some_and(|m| sys.len() + d as usize - 1 > m) {
                    continue;
                }
                if checked_lcm(sys.period(), n).is_none_or(|l| l > PERIOD_CAP) {
                    continue;
                }
                moves.push((i, d));
            }
        }
        if moves.is_empty() {
            break;
        }
        let (i, d) = moves[rng.gen_range(0..moves.len())];
        sys = sys.split_class(i, d)?;
    }
    Ok(sys)
}

/// JSON system file: `{"classes":[{"a":0,"n":2},...]}`, optionally with
/// `"a0"`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SystemFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a0: Option<ResidueClass>,
    pub classes: Vec<ResidueClass>,
}

impl SystemFile {
    pub fn system(&self) -> Result<CoverSystem> {
        CoverSystem::new(self.classes.clone())
    }

    pub fn augmented(&self) -> Result<AugmentedSystem> {
        let a0 = self.a0.ok_or_else(|| Error::parse("missing \"a0\" class"))?;
        Ok(AugmentedSystem::new(a0, self.system()?))
    }
}
