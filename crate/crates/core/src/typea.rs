//! Partitions and their dictionary with dominant weights of types A and C.
//!
//! A partition with at most `n` parts is the weight `sum a_i ϖ_i` of
//! `A_{n-1}` with `a_i = λ_i - λ_{i+1}`; for `C_n` the last coordinate is
//! `a_n = λ_n`. Every predicate that has a weight-level counterpart is
//! computed both ways and the two answers compared.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::affine;
use crate::error::{Error, Result};
use crate::rootsys::{CartanType, Family, RootSystem};
use crate::weight::Weight;

/// A weakly decreasing sequence of nonnegative integers, stored without
/// trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct Partition {
    parts: Vec<i64>,
}

impl Partition {
    pub fn new(mut parts: Vec<i64>) -> Result<Self> {
        if parts.iter().any(|&x| x < 0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a negative part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// Nonzero parts.
    pub fn parts(&self) -> &[i64] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `|λ|`.
    pub fn size(&self) -> i64 {
        self.parts.iter().sum()
    }

    /// `λ_i` for 1-based `i`, zero past the end.
    pub fn part(&self, i: usize) -> i64 {
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// The parts padded with zeros to length `n`.
    pub fn padded(&self, n: usize) -> Result<Vec<i64>> {
        if self.len() > n {
            return Err(Error::TooManyParts { parts: self.len(), n });
        }
        let mut v = self.parts.clone();
        v.resize(n, 0);
        Ok(v)
    }

    /// `|λ^{[d]}| = λ_1 + ... + λ_d`.
    pub fn prefix_size(&self, d: usize) -> i64 {
        self.parts.iter().take(d).sum()
    }
}

impl TryFrom<Vec<i64>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<i64>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<i64> {
    fn from(p: Partition) -> Vec<i64> {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// Accepts `6,2,1`, `(6,2,1)` or `6 2 1`; the empty string and `()` are
/// the empty partition.
impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts = body
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<i64>().map_err(|e| Error::Parse(format!("bad part {t:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

fn cached_system(family: Family, rank: usize) -> Result<Arc<RootSystem>> {
    static CACHE: OnceLock<Mutex<HashMap<CartanType, Arc<RootSystem>>>> = OnceLock::new();
    let ct = CartanType::new(family, rank)?;
    let cache = CACHE.get_or_init(Default::default);
    if let Some(rs) = cache.lock().expect("root system cache").get(&ct) {
        return Ok(Arc::clone(rs));
    }
    let rs = Arc::new(RootSystem::new(ct));
    cache.lock().expect("root system cache").insert(ct, Arc::clone(&rs));
    Ok(rs)
}

/// The root system `A_{n-1}`.
pub fn type_a(n: usize) -> Result<Arc<RootSystem>> {
    if n < 2 {
        return Err(Error::InvalidCartanType(format!("A{}", n as i64 - 1)));
    }
    cached_system(Family::A, n - 1)
}

/// The root system `C_n`.
pub fn type_c(n: usize) -> Result<Arc<RootSystem>> {
    cached_system(Family::C, n)
}

/// Dominant weight of `A_{n-1}` for a partition with at most `n` parts.
pub fn partition_to_weight(lambda: &Partition, n: usize) -> Result<Weight> {
    type_a(n)?;
    let v = lambda.padded(n)?;
    Ok(Weight::new((0..n - 1).map(|i| v[i] - v[i + 1]).collect()))
}

/// Dominant weight of `C_n` for a partition with at most `n` parts.
pub fn partition_to_weight_c(lambda: &Partition, n: usize) -> Result<Weight> {
    type_c(n)?;
    let v = lambda.padded(n)?;
    Ok(Weight::new((0..n).map(|i| v[i] - v.get(i + 1).copied().unwrap_or(0)).collect()))
}

/// `λ ⊴ μ`: equal sizes and every prefix sum of `λ` at most that of `μ`.
/// Partitions of different sizes are incomparable.
pub fn dominance_leq(lambda: &Partition, mu: &Partition) -> bool {
    if lambda.size() != mu.size() {
        return false;
    }
    let n = lambda.len().max(mu.len());
    (1..=n).all(|d| lambda.prefix_size(d) <= mu.prefix_size(d))
}

/// `λ'_i = #{j : λ_j >= i}`.
pub fn dual_partition(lambda: &Partition) -> Partition {
    let top = lambda.part(1);
    let parts = (1..=top).map(|i| lambda.parts.iter().filter(|&&x| x >= i).count() as i64).collect();
    Partition::new(parts).expect("column lengths are weakly decreasing")
}

/// `(λ^{[d]}, λ \ λ^{[d]})` for `1 <= d <= len(λ)`.
pub fn prefix_split(lambda: &Partition, d: usize) -> Result<(Partition, Partition)> {
    if d < 1 || d > lambda.len() {
        return Err(Error::IndexOutOfRange { d, lo: 1, hi: lambda.len() });
    }
    let (a, b) = lambda.parts.split_at(d);
    Ok((Partition::new(a.to_vec())?, Partition::new(b.to_vec())?))
}

/// Whether `diff`, in simple-root coordinates, lies in the lattice of the
/// subsystem without the 0-based simple root `drop`.
fn in_lattice_without(rs: &RootSystem, diff: &Weight, drop: usize) -> bool {
    match rs.root_coords(diff) {
        Some(c) => c[drop] == 0,
        None => false,
    }
}

fn check_d(d: usize, lo: usize, hi: usize) -> Result<()> {
    if d < lo || d > hi {
        return Err(Error::IndexOutOfRange { d, lo, hi });
    }
    Ok(())
}

/// `λ =_d μ` in `Λ⁺(n, r)`: `λ - μ` lies in the root lattice of the
/// subsystem of `A_{n-1}` without `α_d`. Computed as `|λ^{[d]}| = |μ^{[d]}|`
/// and checked against the lattice.
pub fn coset_eq_d(lambda: &Partition, mu: &Partition, n: usize, d: usize) -> Result<bool> {
    check_d(d, 1, n.saturating_sub(1))?;
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch { left: lambda.size(), right: mu.size() });
    }
    let rs = type_a(n)?;
    let diff = &partition_to_weight(lambda, n)? - &partition_to_weight(mu, n)?;
    let by_prefix = lambda.prefix_size(d) == mu.prefix_size(d);
    let by_lattice = in_lattice_without(&rs, &diff, d - 1);
    if by_prefix != by_lattice {
        return Err(Error::Disagreement(format!(
            "{lambda} =_{d} {mu} in A{}: prefix criterion {by_prefix}, lattice {by_lattice}",
            n - 1
        )));
    }
    Ok(by_prefix)
}

/// The type `C_n` analogue: `|λ^{[d]}| = |μ^{[d]}|` and `|λ| ≡ |μ| (mod 2)`,
/// checked against the lattice of `C_n` without `α_d`.
pub fn coset_eq_d_type_c(lambda: &Partition, mu: &Partition, n: usize, d: usize) -> Result<bool> {
    check_d(d, 1, n)?;
    let rs = type_c(n)?;
    let diff = &partition_to_weight_c(lambda, n)? - &partition_to_weight_c(mu, n)?;
    let by_prefix = lambda.prefix_size(d) == mu.prefix_size(d) && (lambda.size() - mu.size()) % 2 == 0;
    let by_lattice = in_lattice_without(&rs, &diff, d - 1);
    if by_prefix != by_lattice {
        return Err(Error::Disagreement(format!(
            "{lambda} =_{d} {mu} in C{n}: prefix criterion {by_prefix}, lattice {by_lattice}"
        )));
    }
    Ok(by_prefix)
}

/// `λ_i - λ_j ≢ i - j (mod p)` for all `i < j <= n`, checked against
/// regularity of the corresponding weight.
pub fn is_regular_partition(lambda: &Partition, n: usize, p: i64) -> Result<bool> {
    if p < 2 {
        return Err(Error::InvalidPrime(p));
    }
    let v = lambda.padded(n)?;
    let direct = (0..n).all(|i| (i + 1..n).all(|j| (v[i] - v[j] - (i as i64 - j as i64)).rem_euclid(p) != 0));
    let rs = type_a(n)?;
    let by_weight = affine::is_regular(&rs, &partition_to_weight(lambda, n)?, p);
    if direct != by_weight {
        return Err(Error::Disagreement(format!("regularity of {lambda} (n = {n}, p = {p})")));
    }
    Ok(direct)
}

/// `μ_1 - μ_n + n - 1 <= p(p - n + 2)`, checked against the Jantzen region
/// of `A_{n-1}`.
pub fn in_jantzen_partition(mu: &Partition, n: usize, p: i64) -> Result<bool> {
    if p < 2 {
        return Err(Error::InvalidPrime(p));
    }
    let v = mu.padded(n)?;
    let n_i = n as i64;
    let direct = v[0] - v[n - 1] + n_i - 1 <= p * (p - n_i + 2);
    let rs = type_a(n)?;
    let by_weight = affine::in_jantzen_region(&rs, &partition_to_weight(mu, n)?, p)?;
    if direct != by_weight {
        return Err(Error::Disagreement(format!("Jantzen region membership of {mu} (n = {n}, p = {p})")));
    }
    Ok(direct)
}

/// A pair of rows `i < j` (1-based) and an amount `m > 0` moved from row
/// `j` of `ω` to row `i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReflectionWitness {
    pub i: usize,
    pub j: usize,
    pub m: i64,
}

/// Looks for `i < j` and `m > 0` with `ν_i = ω_i + m`, `ν_j = ω_j - m`, all
/// other rows equal, and `ν_i - ν_j + j - i ≡ m (mod p)`.
pub fn reflection_related(nu: &Partition, omega: &Partition, n: usize, p: i64) -> Result<Option<ReflectionWitness>> {
    if nu.size() != omega.size() {
        return Err(Error::SizeMismatch { left: nu.size(), right: omega.size() });
    }
    if p < 2 {
        return Err(Error::InvalidPrime(p));
    }
    let (a, b) = (nu.padded(n)?, omega.padded(n)?);
    let differing: Vec<usize> = (0..n).filter(|&k| a[k] != b[k]).collect();
    let &[i, j] = differing.as_slice() else {
        return Ok(None);
    };
    let m = a[i] - b[i];
    if m <= 0 || a[j] != b[j] - m {
        return Ok(None);
    }
    let lhs = a[i] - a[j] + (j - i) as i64;
    if (lhs - m).rem_euclid(p) != 0 {
        return Ok(None);
    }
    Ok(Some(ReflectionWitness { i: i + 1, j: j + 1, m }))
}

/// All partitions of `r` with at most `max_parts` parts, in reverse
/// lexicographic order.
pub fn partitions_of(r: i64, max_parts: usize) -> Vec<Partition> {
    fn go(r: i64, cap: i64, slots: usize, cur: &mut Vec<i64>, out: &mut Vec<Partition>) {
        if r == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        if slots == 0 {
            return;
        }
        for x in (1..=cap.min(r)).rev() {
            cur.push(x);
            go(r - x, x, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if r >= 0 {
        go(r, r, max_parts, &mut Vec::new(), &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn parsing_and_normal_form() {
        assert_eq!(part("6,3,0").parts(), &[6, 3]);
        assert_eq!(part("(6, 2, 1)").to_string(), "(6,2,1)");
        assert!(part("").is_empty());
        assert!("1,2".parse::<Partition>().is_err());
        assert!("3,-1".parse::<Partition>().is_err());
        assert_eq!(serde_json::to_string(&part("6,2,1")).unwrap(), "[6,2,1]");
        assert!(serde_json::from_str::<Partition>("[1,2]").is_err());
    }

    #[test]
    fn weights() {
        assert_eq!(partition_to_weight(&part("6,2,1"), 3).unwrap(), Weight::from([4, 1]));
        assert_eq!(partition_to_weight(&part("6,3,0"), 3).unwrap(), Weight::from([3, 3]));
        assert_eq!(partition_to_weight(&part("5,5,5,5"), 4).unwrap(), Weight::from([0, 0, 0]));
        assert!(matches!(partition_to_weight(&part("1,1,1,1"), 3), Err(Error::TooManyParts { .. })));
        assert_eq!(partition_to_weight_c(&part("2,1"), 2).unwrap(), Weight::from([1, 1]));
    }

    #[test]
    fn dominance_examples() {
        assert!(dominance_leq(&part("6,2,1"), &part("6,3")));
        assert!(!dominance_leq(&part("6,3"), &part("6,2,1")));
        assert!(dominance_leq(&part("1,1,1,1"), &part("4")));
        assert!(!dominance_leq(&part("2"), &part("3")));
    }

    #[test]
    fn dual_examples() {
        assert_eq!(dual_partition(&part("6,2,1")), part("3,2,1,1,1,1"));
        assert_eq!(dual_partition(&part("4")), part("1,1,1,1"));
        assert_eq!(dual_partition(&part("")), part(""));
    }

    #[test]
    fn coset_examples() {
        assert!(coset_eq_d(&part("6,2,1"), &part("6,3"), 3, 1).unwrap());
        assert!(!coset_eq_d(&part("5,3,1"), &part("6,3"), 3, 1).unwrap());
        assert!(coset_eq_d(&part("5,3,1"), &part("5,3,1"), 3, 2).unwrap());
        assert!(matches!(coset_eq_d(&part("2"), &part("1,1"), 3, 3), Err(Error::IndexOutOfRange { .. })));
        assert!(matches!(coset_eq_d(&part("2"), &part("1"), 3, 1), Err(Error::SizeMismatch { .. })));

        assert!(!coset_eq_d_type_c(&part("2"), &part("1,1"), 2, 1).unwrap());
        assert!(!coset_eq_d_type_c(&part("3"), &part("2"), 2, 2).unwrap());
        assert!(coset_eq_d_type_c(&part("2,1"), &part("2,1"), 2, 2).unwrap());
    }

    #[test]
    fn regularity_examples() {
        assert!(is_regular_partition(&part("6,2,1"), 3, 3).unwrap());
        for p in [2, 3, 5, 7] {
            assert!(is_regular_partition(&Partition::new(vec![p, 0]).unwrap(), 2, p).unwrap());
        }
        assert!(!is_regular_partition(&part("2"), 3, 3).unwrap());
    }

    #[test]
    fn jantzen_examples() {
        // 6 - 1 + 2 = 7 against p(p - n + 2) = 6 at p = 3, and 20 at p = 5.
        assert!(!in_jantzen_partition(&part("6,2,1"), 3, 3).unwrap());
        assert!(in_jantzen_partition(&part("6,2,1"), 3, 5).unwrap());
        assert!(!in_jantzen_partition(&part("12"), 3, 3).unwrap());
        assert!(in_jantzen_partition(&part("4,4,4"), 3, 3).unwrap());
    }

    #[test]
    fn reflection_examples() {
        let w = reflection_related(&part("6,3"), &part("6,2,1"), 3, 3).unwrap();
        assert_eq!(w, Some(ReflectionWitness { i: 2, j: 3, m: 1 }));
        assert_eq!(reflection_related(&part("6,3"), &part("6,3"), 3, 3).unwrap(), None);
        assert!(matches!(reflection_related(&part("6,3"), &part("6,2"), 3, 3), Err(Error::SizeMismatch { .. })));
    }

    #[test]
    fn split_examples() {
        assert_eq!(prefix_split(&part("6,2,1"), 1).unwrap(), (part("6"), part("2,1")));
        assert_eq!(prefix_split(&part("6,2,1"), 3).unwrap(), (part("6,2,1"), part("")));
        assert_eq!(prefix_split(&part("10,5,5,5"), 2).unwrap(), (part("10,5"), part("5,5")));
        assert!(prefix_split(&part("6,2,1"), 4).is_err());
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..8).map(|r| partitions_of(r, r as usize).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15]);
        assert_eq!(partitions_of(6, 2).len(), 4);
    }

    fn arb_partition() -> impl Strategy<Value = Partition> {
        prop::collection::vec(0i64..8, 0..6).prop_map(|mut v| {
            v.sort_unstable_by(|a, b| b.cmp(a));
            Partition::new(v).unwrap()
        })
    }

    proptest! {
        #[test]
        fn dual_is_an_antitone_involution(a in arb_partition(), b in arb_partition()) {
            prop_assert_eq!(dual_partition(&dual_partition(&a)), a.clone());
            prop_assert_eq!(dual_partition(&a).size(), a.size());
            if dominance_leq(&a, &b) {
                prop_assert!(dominance_leq(&dual_partition(&b), &dual_partition(&a)));
            }
        }

        #[test]
        fn split_restores(a in arb_partition(), d in 1usize..6) {
            if d <= a.len() {
                let (x, y) = prefix_split(&a, d).unwrap();
                prop_assert_eq!(x.size() + y.size(), a.size());
                let mut joined = x.parts().to_vec();
                joined.extend_from_slice(y.parts());
                prop_assert_eq!(joined, a.parts().to_vec());
            }
        }

        #[test]
        fn predicates_agree_with_weights(a in arb_partition(), p in prop::sample::select(vec![2i64, 3, 5, 7])) {
            // Both functions raise Disagreement if the two computations differ.
            let n = a.len().max(2);
            is_regular_partition(&a, n, p).unwrap();
            in_jantzen_partition(&a, n, p).unwrap();
        }
    }
}
