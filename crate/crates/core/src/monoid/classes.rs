//! InDegIso classes: orbits of `Z_n^Z_n` under `f ↦ γ f σ^{-1}`.
//!
//! Two functions are equivalent exactly when their sorted fiber sizes agree:
//! relabelling the domain (σ) can realise any assignment of points to fibers
//! of the right sizes and relabelling the codomain (γ) any assignment of
//! fibers to targets. [`fiber_partition`] is therefore a complete invariant,
//! and classes are indexed by the partitions of `n`.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{PermError, Result};
use crate::limits::{guard, Limits};
use crate::monoid::function::{all_permutations, factorial, FunctionTable};
use crate::monoid::partition::{partitions, Partition};

pub fn fiber_partition(f: &FunctionTable) -> Partition {
    Partition::from_sizes(f.fiber_sizes()).expect("n >= 1 so some fiber is nonempty")
}

/// `|Aut(f)| = (∏_j |f^{-1}(j)|!) · (∏_s m_s!)`, where `m_s` is the number of
/// codomain values whose fiber has size `s` (including `s = 0`).
///
/// The first factor permutes the domain inside each fiber; the second lets
/// γ shuffle equally sized fibers, with σ following along.
pub fn stabilizer_order(f: &FunctionTable) -> u128 {
    let sizes = f.fiber_sizes();
    let within: u128 = sizes.iter().map(|&s| factorial(s)).product();
    let mut multiplicity: BTreeMap<usize, usize> = BTreeMap::new();
    for &s in &sizes {
        *multiplicity.entry(s).or_default() += 1;
    }
    let across: u128 = multiplicity.values().map(|&m| factorial(m)).product();
    within * across
}

/// Counts `(σ, γ)` with `γ f σ^{-1} = f` directly. Guarded by
/// [`Limits::orbit`].
pub fn stabilizer_order_brute_force(f: &FunctionTable) -> Result<u128> {
    guard("stabilizer_order_brute_force", f.n(), Limits::current().orbit)?;
    let perms = all_permutations(f.n());
    let mut count = 0u128;
    for sigma in &perms {
        let sigma_inv = sigma.inverse()?;
        for gamma in &perms {
            if f.act_with_inverse(sigma_inv.values(), gamma.values()) == *f {
                count += 1;
            }
        }
    }
    Ok(count)
}

/// `{γ f σ^{-1} : (σ, γ) ∈ S_n × S_n}`, by applying every pair. Guarded by
/// [`Limits::orbit`].
pub fn orbit(f: &FunctionTable) -> Result<BTreeSet<FunctionTable>> {
    guard("orbit", f.n(), Limits::current().orbit)?;
    let perms = all_permutations(f.n());
    let inverses: Vec<FunctionTable> = perms.iter().map(|p| p.inverse()).collect::<Result<_>>()?;
    let mut out = BTreeSet::new();
    for sigma_inv in &inverses {
        for gamma in &perms {
            out.insert(f.act_with_inverse(sigma_inv.values(), gamma.values()));
        }
    }
    Ok(out)
}

/// Fills the domain left to right with blocks of sizes `λ_1 ≥ λ_2 ≥ …`
/// mapped to targets `0, 1, 2, …`. Every representative has `g(0) = 0`.
pub fn canonical_representative(partition: &Partition) -> FunctionTable {
    let values = partition
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(target, &size)| std::iter::repeat_n(target, size))
        .collect();
    FunctionTable::new(values).expect("parts sum to n and there are at most n of them")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassRecord {
    pub partition: Partition,
    pub representative: FunctionTable,
    pub orbit_size: u128,
    pub stabilizer_order: u128,
}

/// One record per partition of `n`, ascending. Guarded by
/// [`Limits::classes`].
pub fn enumerate_classes(n: usize) -> Result<Vec<ClassRecord>> {
    if n == 0 {
        return Err(PermError::EmptyDimension);
    }
    guard("enumerate_classes", n, Limits::current().classes)?;
    let group_order = factorial(n) * factorial(n);
    Ok(partitions(n)
        .into_iter()
        .map(|partition| {
            let representative = canonical_representative(&partition);
            let stabilizer_order = stabilizer_order(&representative);
            ClassRecord {
                partition,
                representative,
                orbit_size: group_order / stabilizer_order,
                stabilizer_order,
            }
        })
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "i8", into = "i8")]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl TryFrom<i8> for Sign {
    type Error = PermError;

    fn try_from(v: i8) -> Result<Self> {
        match v {
            1 => Ok(Sign::Plus),
            -1 => Ok(Sign::Minus),
            other => Err(PermError::Malformed(format!("sign must be ±1, got {other}"))),
        }
    }
}

impl From<Sign> for i8 {
    fn from(s: Sign) -> i8 {
        s.value() as i8
    }
}

/// An assignment `ω` of ±1 to every class of `Z_n^Z_n`, describing the
/// polynomial `Σ_[f] ω_[f] Σ_{g ∈ [f]} ∏_i a_{i,g(i)}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignPattern {
    n: usize,
    omega: BTreeMap<Partition, Sign>,
}

#[derive(Serialize, Deserialize)]
struct SignEntry {
    partition: Partition,
    sign: Sign,
}

#[derive(Serialize, Deserialize)]
struct SignPatternFile {
    n: usize,
    omega: Vec<SignEntry>,
}

impl SignPattern {
    /// Fails unless `omega` covers exactly the partitions of `n`.
    pub fn new(n: usize, omega: BTreeMap<Partition, Sign>) -> Result<Self> {
        if n == 0 {
            return Err(PermError::EmptyDimension);
        }
        let expected = partitions(n);
        if omega.len() != expected.len() || !expected.iter().all(|p| omega.contains_key(p)) {
            return Err(PermError::Malformed(format!(
                "sign pattern must cover exactly the {} partitions of {n}",
                expected.len()
            )));
        }
        Ok(SignPattern { n, omega })
    }

    pub fn from_fn(n: usize, f: impl Fn(&Partition) -> Sign) -> Self {
        SignPattern {
            n,
            omega: partitions(n).into_iter().map(|p| {
                let s = f(&p);
                (p, s)
            }).collect(),
        }
    }

    pub fn all_plus(n: usize) -> Self {
        Self::from_fn(n, |_| Sign::Plus)
    }

    /// `+1` on the bijections, `-1` elsewhere: the pattern of
    /// `2·Per(A) - ∏_i (Σ_j a_ij)`.
    pub fn signed_default(n: usize) -> Self {
        Self::from_fn(n, |p| if p.is_all_ones() { Sign::Plus } else { Sign::Minus })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn sign(&self, partition: &Partition) -> Sign {
        self.omega[partition]
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, Sign)> {
        self.omega.iter().map(|(p, &s)| (p, s))
    }

    pub fn from_json_str(text: &str) -> Result<Self> {
        let file: SignPatternFile = serde_json::from_str(text)
            .map_err(|e| PermError::Malformed(format!("sign pattern file: {e}")))?;
        let mut omega = BTreeMap::new();
        for entry in file.omega {
            if entry.partition.total() != file.n {
                return Err(PermError::Malformed(format!(
                    "partition {} does not sum to {}",
                    entry.partition, file.n
                )));
            }
            if omega.insert(entry.partition.clone(), entry.sign).is_some() {
                return Err(PermError::Malformed(format!("duplicate partition {}", entry.partition)));
            }
        }
        SignPattern::new(file.n, omega)
    }

    pub fn to_json_string(&self) -> String {
        let file = SignPatternFile {
            n: self.n,
            omega: self
                .omega
                .iter()
                .map(|(p, &sign)| SignEntry { partition: p.clone(), sign })
                .collect(),
        };
        serde_json::to_string_pretty(&file).expect("sign pattern serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid::function::all_functions;

    fn ft(v: &[usize]) -> FunctionTable {
        FunctionTable::new(v.to_vec()).unwrap()
    }

    #[test]
    fn fiber_partition_examples() {
        assert_eq!(fiber_partition(&ft(&[2, 0, 1, 3])).parts(), &[1, 1, 1, 1]);
        assert_eq!(fiber_partition(&FunctionTable::constant(4, 2)).parts(), &[4]);
        assert_eq!(fiber_partition(&ft(&[1, 1, 0])).parts(), &[2, 1]);
    }

    #[test]
    fn stabilizer_examples() {
        assert_eq!(stabilizer_order(&FunctionTable::identity(3)), 6);
        assert_eq!(stabilizer_order(&FunctionTable::constant(3, 1)), 12);
        assert_eq!(stabilizer_order(&ft(&[1, 1, 0])), 2);
        assert_eq!(stabilizer_order_brute_force(&FunctionTable::identity(3)).unwrap(), 6);
        assert_eq!(stabilizer_order_brute_force(&FunctionTable::constant(3, 0)).unwrap(), 12);
        assert_eq!(stabilizer_order_brute_force(&ft(&[1, 1, 0])).unwrap(), 2);
    }

    #[test]
    fn orbit_examples() {
        let o = orbit(&FunctionTable::identity(2)).unwrap();
        assert_eq!(o.into_iter().collect::<Vec<_>>(), vec![ft(&[0, 1]), ft(&[1, 0])]);
        let constants = orbit(&FunctionTable::constant(3, 0)).unwrap();
        assert_eq!(constants.len(), 3);
        assert!(constants.iter().all(|g| fiber_partition(g).parts() == [3]));
        assert_eq!(orbit(&ft(&[1, 1, 0])).unwrap().len(), 18);
        assert!(orbit(&FunctionTable::identity(6)).unwrap_err().is_guard());
    }

    #[test]
    fn canonical_representatives() {
        let rep = |parts: &[usize]| canonical_representative(&Partition::new(parts.to_vec()).unwrap());
        assert_eq!(rep(&[1, 1, 1]), ft(&[0, 1, 2]));
        assert_eq!(rep(&[3]), ft(&[0, 0, 0]));
        assert_eq!(rep(&[2, 1]), ft(&[0, 0, 1]));
    }

    #[test]
    fn class_tables() {
        let two = enumerate_classes(2).unwrap();
        let summary: Vec<_> = two
            .iter()
            .map(|c| (c.partition.to_string(), c.orbit_size, c.stabilizer_order))
            .collect();
        assert_eq!(summary, [("[1,1]".to_string(), 2, 2), ("[2]".to_string(), 2, 2)]);

        let three: Vec<u128> = enumerate_classes(3).unwrap().iter().map(|c| c.orbit_size).collect();
        assert_eq!(three, [6, 18, 3]);

        // Independent tally: bucket every function of Z_3^Z_3 by fiber partition.
        let mut tally: BTreeMap<Partition, u128> = BTreeMap::new();
        for f in all_functions(3) {
            *tally.entry(fiber_partition(&f)).or_default() += 1;
        }
        assert_eq!(tally.values().copied().collect::<Vec<_>>(), three);

        assert!(enumerate_classes(7).unwrap_err().is_guard());
    }

    #[test]
    fn sign_pattern_files() {
        let p = SignPattern::signed_default(3);
        assert_eq!(SignPattern::from_json_str(&p.to_json_string()).unwrap(), p);
        let missing = r#"{"n": 2, "omega": [{"partition": [2], "sign": 1}]}"#;
        assert!(SignPattern::from_json_str(missing).is_err());
        let bad_sign = r#"{"n": 1, "omega": [{"partition": [1], "sign": 0}]}"#;
        assert!(SignPattern::from_json_str(bad_sign).is_err());
        let dup = r#"{"n": 1, "omega": [{"partition": [1], "sign": 1}, {"partition": [1], "sign": -1}]}"#;
        assert!(SignPattern::from_json_str(dup).is_err());
    }
}
