//! Formal characters over the weight lattice: Weyl characters, products,
//! the Frobenius twist, decomposition into Weyl characters, and the
//! Lusztig character formula evaluated from Kazhdan-Lusztig polynomials.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::affine::{is_regular, AffineWeylGroup};
use crate::error::{Error, Result};
use crate::klpoly::{deserialize_bigint, serialize_bigint, KlTable};
use crate::rootsys::{Family, RootSubsystem, RootSystem};
use crate::weight::Weight;

/// A finitely supported map from weights to integers. Zero entries are
/// never stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct FormalCharacter {
    mult: BTreeMap<Weight, BigInt>,
}

#[derive(Serialize, Deserialize)]
struct MultEntry {
    weight: Weight,
    #[serde(serialize_with = "serialize_bigint", deserialize_with = "deserialize_bigint")]
    mult: BigInt,
}

impl Serialize for FormalCharacter {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.mult.iter().map(|(w, m)| MultEntry { weight: w.clone(), mult: m.clone() }))
    }
}

impl<'de> Deserialize<'de> for FormalCharacter {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let entries = Vec::<MultEntry>::deserialize(d)?;
        Ok(entries.into_iter().map(|e| (e.weight, e.mult)).collect())
    }
}

impl FromIterator<(Weight, BigInt)> for FormalCharacter {
    fn from_iter<I: IntoIterator<Item = (Weight, BigInt)>>(iter: I) -> Self {
        let mut chi = FormalCharacter::zero();
        for (w, m) in iter {
            chi.add_term(w, m);
        }
        chi
    }
}

impl FormalCharacter {
    pub fn zero() -> Self {
        FormalCharacter::default()
    }

    /// `e^lambda`.
    pub fn exp(lambda: Weight) -> Self {
        FormalCharacter::from_iter([(lambda, BigInt::one())])
    }

    pub fn from_pairs(pairs: &[(Weight, i64)]) -> Self {
        pairs.iter().map(|(w, m)| (w.clone(), BigInt::from(*m))).collect()
    }

    pub fn add_term(&mut self, w: Weight, m: BigInt) {
        if m.is_zero() {
            return;
        }
        let entry = self.mult.entry(w.clone()).or_insert_with(BigInt::zero);
        *entry += m;
        if entry.is_zero() {
            self.mult.remove(&w);
        }
    }

    pub fn mult(&self, w: &Weight) -> BigInt {
        self.mult.get(w).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, &BigInt)> {
        self.mult.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Weight> {
        self.mult.keys()
    }

    pub fn len(&self) -> usize {
        self.mult.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mult.is_empty()
    }

    /// Sum of all multiplicities.
    pub fn dimension(&self) -> BigInt {
        self.mult.values().sum()
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        self.mult.iter().map(|(w, m)| (w.clone(), m * k)).collect()
    }

    pub fn add(&self, other: &FormalCharacter) -> Self {
        let mut out = self.clone();
        for (w, m) in &other.mult {
            out.add_term(w.clone(), m.clone());
        }
        out
    }

    pub fn sub(&self, other: &FormalCharacter) -> Self {
        self.add(&other.scale(&-BigInt::one()))
    }

    /// Restriction of the multiplicity map to weights satisfying `keep`.
    pub fn filter(&self, mut keep: impl FnMut(&Weight) -> bool) -> Self {
        FormalCharacter {
            mult: self.mult.iter().filter(|(w, _)| keep(w)).map(|(w, m)| (w.clone(), m.clone())).collect(),
        }
    }

    /// First weight with a negative multiplicity, if any.
    pub fn first_negative(&self) -> Option<(&Weight, &BigInt)> {
        self.mult.iter().find(|(_, m)| m.is_negative())
    }

    /// Constant multiplicity along every finite Weyl orbit.
    pub fn is_w_invariant(&self, rs: &RootSystem) -> bool {
        self.mult.iter().all(|(w, m)| (0..rs.rank()).all(|i| self.mult(&rs.simple_reflection(i, w)) == *m))
    }
}

impl fmt::Debug for FormalCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.mult.iter().map(|(w, m)| (w.to_string(), m.to_string()))).finish()
    }
}

/// Coefficients of a character in the basis of Weyl characters
/// `ch Δ(mu)`, `mu` dominant.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct DeltaVector {
    coeffs: BTreeMap<Weight, BigInt>,
}

#[derive(Serialize, Deserialize)]
struct CoeffEntry {
    weight: Weight,
    #[serde(serialize_with = "serialize_bigint", deserialize_with = "deserialize_bigint")]
    coeff: BigInt,
}

impl Serialize for DeltaVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.coeffs.iter().map(|(w, c)| CoeffEntry { weight: w.clone(), coeff: c.clone() }))
    }
}

impl<'de> Deserialize<'de> for DeltaVector {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let entries = Vec::<CoeffEntry>::deserialize(d)?;
        let mut v = DeltaVector::default();
        for e in entries {
            v.add_term(e.weight, e.coeff);
        }
        Ok(v)
    }
}

impl DeltaVector {
    pub fn new() -> Self {
        DeltaVector::default()
    }

    pub fn from_pairs(pairs: &[(Weight, i64)]) -> Self {
        let mut v = DeltaVector::new();
        for (w, c) in pairs {
            v.add_term(w.clone(), BigInt::from(*c));
        }
        v
    }

    pub fn add_term(&mut self, w: Weight, c: BigInt) {
        let entry = self.coeffs.entry(w.clone()).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&w);
        }
    }

    pub fn coeff(&self, w: &Weight) -> BigInt {
        self.coeffs.get(w).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, &BigInt)> {
        self.coeffs.iter()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `sum_mu c_mu ch Δ(mu)`.
    pub fn expand(&self, rs: &RootSystem) -> Result<FormalCharacter> {
        let mut out = FormalCharacter::zero();
        for (w, c) in &self.coeffs {
            out = out.add(&weyl_character(rs, w)?.scale(c));
        }
        Ok(out)
    }

    /// `sum_mu c_mu dim Δ(mu)`.
    pub fn dimension(&self, rs: &RootSystem) -> Result<BigInt> {
        self.coeffs.iter().try_fold(BigInt::zero(), |acc, (w, c)| Ok(acc + c * weyl_dimension(rs, w)?))
    }
}

impl fmt::Debug for DeltaVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.coeffs.iter().map(|(w, c)| (w.to_string(), c.to_string()))).finish()
    }
}

impl fmt::Display for DeltaVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        // Reverse lexicographic order, so the top weight usually leads.
        for (i, (w, c)) in self.coeffs.iter().rev().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            match (i, c.abs().is_one()) {
                (0, true) if sign == "+" => write!(f, "Δ{w}")?,
                (0, true) => write!(f, "-Δ{w}")?,
                (0, false) => write!(f, "{c}Δ{w}")?,
                (_, true) => write!(f, " {sign} Δ{w}")?,
                (_, false) => write!(f, " {sign} {}Δ{w}", c.abs())?,
            }
        }
        Ok(())
    }
}

fn check_dominant(rs: &RootSystem, lambda: &Weight) -> Result<()> {
    rs.check_rank(lambda)?;
    if !rs.is_dominant(lambda) {
        return Err(Error::NotDominant(lambda.clone()));
    }
    Ok(())
}

/// Reflect by simple reflections of the subsystem until dominant for it.
fn subsystem_dominant(rs: &RootSystem, sub: &RootSubsystem, w: &Weight) -> Weight {
    let mut v = w.clone();
    while let Some(&i) = sub.simple.iter().find(|&&i| v.coords()[i] < 0) {
        v = rs.simple_reflection(i, &v);
    }
    v
}

/// Character of the Weyl module of highest weight `lambda` for the
/// subsystem `sub`, computed inside the ambient weight lattice by
/// Freudenthal's recursion
///
/// `(lambda - mu, lambda + mu + 2rho) m(mu) = 2 sum_{alpha > 0} sum_{k >= 1} m(mu + k alpha) (mu + k alpha, alpha)`
///
/// with roots and `rho` those of the subsystem.
pub fn subsystem_weyl_character(rs: &RootSystem, sub: &RootSubsystem, lambda: &Weight) -> Result<FormalCharacter> {
    rs.check_rank(lambda)?;
    if sub.simple.iter().any(|&i| lambda.coords()[i] < 0) {
        return Err(Error::NotDominant(lambda.clone()));
    }
    let dominant = rs.dominant_below_in(lambda, &sub.positive, &sub.simple);
    let depth = |mu: &Weight| -> i64 { rs.root_coords(&(lambda - mu)).expect("difference of roots").iter().sum() };
    let mut order: Vec<(i64, &Weight)> = dominant.iter().map(|mu| (depth(mu), mu)).collect();
    order.sort();

    let mut mults: HashMap<Weight, BigInt> = HashMap::new();
    mults.insert(lambda.clone(), BigInt::one());
    let shifted = lambda + &sub.two_rho;
    for &(d, mu) in order.iter().skip(1) {
        debug_assert!(d > 0);
        let diff = rs.root_coords(&(lambda - mu)).expect("difference of roots");
        let denom = rs.form_root_weight(&diff, &(&shifted + mu));
        let mut total = BigInt::zero();
        for &a in &sub.positive {
            let root = rs.root(a);
            let mut nu = mu + &root.weight;
            loop {
                let rep = subsystem_dominant(rs, sub, &nu);
                if !dominant.contains(&rep) {
                    break;
                }
                let m = mults.get(&rep).expect("higher weights are done first");
                total += m * (root.half_norm * rs.pair_index(&nu, a));
                nu = &nu + &root.weight;
            }
        }
        total *= 2;
        assert!(denom > 0, "Freudenthal denominator must be positive");
        let (q, r) = (&total / denom, &total % denom);
        assert!(r.is_zero(), "Freudenthal recursion produced a non-integer multiplicity at {mu}");
        mults.insert(mu.clone(), q);
    }

    let mut out = FormalCharacter::zero();
    for (mu, m) in mults {
        if m.is_zero() {
            continue;
        }
        let mut seen = BTreeSet::from([mu.clone()]);
        let mut queue = VecDeque::from([mu]);
        while let Some(v) = queue.pop_front() {
            for &i in &sub.simple {
                let u = rs.simple_reflection(i, &v);
                if seen.insert(u.clone()) {
                    queue.push_back(u);
                }
            }
            out.add_term(v, m.clone());
        }
    }
    Ok(out)
}

/// `ch Δ(lambda)` for dominant `lambda`.
pub fn weyl_character(rs: &RootSystem, lambda: &Weight) -> Result<FormalCharacter> {
    check_dominant(rs, lambda)?;
    subsystem_weyl_character(rs, &rs.full_subsystem(), lambda)
}

/// `prod_{alpha > 0} <lambda + rho, alpha^vee> / <rho, alpha^vee>`.
pub fn weyl_dimension(rs: &RootSystem, lambda: &Weight) -> Result<BigInt> {
    check_dominant(rs, lambda)?;
    let v = lambda + rs.rho();
    let (mut num, mut den) = (BigInt::one(), BigInt::one());
    for a in 0..rs.positive_roots().len() {
        num *= rs.pair_index(&v, a);
        den *= rs.pair_index(rs.rho(), a);
    }
    debug_assert!((&num % &den).is_zero());
    Ok(num / den)
}

pub fn char_mul(a: &FormalCharacter, b: &FormalCharacter) -> FormalCharacter {
    let mut out = FormalCharacter::zero();
    for (x, m) in a.iter() {
        for (y, n) in b.iter() {
            out.add_term(x + y, m * n);
        }
    }
    out
}

/// Scales the support by `p`.
pub fn frobenius_twist(chi: &FormalCharacter, p: i64) -> FormalCharacter {
    chi.iter().map(|(w, m)| (w.scaled(p), m.clone())).collect()
}

/// Writes a W-invariant character as an integer combination of Weyl
/// characters by repeatedly removing the support weight of largest
/// `rho^vee`-height (ties broken by the larger coordinate vector).
pub fn brauer_decompose(rs: &RootSystem, chi: &FormalCharacter) -> Result<DeltaVector> {
    for w in chi.support() {
        rs.check_rank(w)?;
    }
    let mut rest = chi.clone();
    let mut out = DeltaVector::new();
    let mut cache: HashMap<Weight, FormalCharacter> = HashMap::new();
    while let Some(top) = rest.support().max_by_key(|w| (rs.scaled_height(w), (*w).clone())).cloned() {
        if !rs.is_dominant(&top) {
            return Err(Error::NotWInvariant(top));
        }
        let c = rest.mult(&top);
        let delta = match cache.get(&top) {
            Some(d) => d,
            None => cache.entry(top.clone()).or_insert(weyl_character(rs, &top)?),
        };
        rest = rest.sub(&delta.scale(&c));
        out.add_term(top, c);
    }
    Ok(out)
}

/// The Δ-expansion `sum_{y <= x, y·lambda_0 dominant} (-1)^{l(x)-l(y)} P_{y,x}(1) Δ(y·lambda_0)`
/// where `x·lambda_0 = lambda` with `lambda_0 ∈ C⁻`.
pub fn lusztig_delta_vector(group: &AffineWeylGroup, table: &KlTable, lambda: &Weight) -> Result<DeltaVector> {
    let rs = group.root_system();
    check_dominant(rs, lambda)?;
    if !is_regular(rs, lambda, group.p()) {
        return Err(Error::Singular { weight: lambda.clone(), p: group.p() });
    }
    let (x, base) = group.element_for_weight(lambda)?;
    let lx = group.length(&x);
    let mut out = DeltaVector::new();
    for y in group.interval_below(&x).iter() {
        let mu = group.dot(y, &base);
        if !rs.is_dominant(&mu) {
            continue;
        }
        let value = table.kl_polynomial(y, &x).eval_at_one();
        let sign = if (lx - group.length(y)).is_multiple_of(2) { value } else { -value };
        out.add_term(mu, sign);
    }
    Ok(out)
}

/// The Lusztig character formula at `lambda`, both as a Δ-expansion and as
/// a formal character. Fails with [`Error::NotACharacter`] when some
/// multiplicity of the expansion is negative.
pub fn lusztig_character(
    group: &AffineWeylGroup,
    table: &KlTable,
    lambda: &Weight,
) -> Result<(DeltaVector, FormalCharacter)> {
    let rs = group.root_system();
    let dv = lusztig_delta_vector(group, table, lambda)?;
    assert!(dv.coeff(lambda).is_one(), "coefficient of the top term must be 1");
    let chi = dv.expand(rs)?;
    if let Some((at, m)) = chi.first_negative() {
        return Err(Error::NotACharacter { weight: lambda.clone(), at: at.clone(), mult: m.clone() });
    }
    assert!(chi.mult(lambda).is_one(), "highest weight must have multiplicity 1");
    Ok((dv, chi))
}

/// Both sides of the twist identity `ch Δ(lambda)^{(1)} = (formula at p lambda)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwistReport {
    pub weight: Weight,
    pub p: i64,
    /// `brauer_decompose` of the twisted Weyl character.
    pub twisted: DeltaVector,
    /// The formula's Δ-expansion at `p lambda`.
    pub formula: DeltaVector,
    #[serde(serialize_with = "serialize_bigint", deserialize_with = "deserialize_bigint")]
    pub dimension: BigInt,
    pub verdict: bool,
    /// False for non-simply-laced types, and for type E with `p <= h + 1`.
    pub within_hypotheses: bool,
}

pub fn twist_identity_hypotheses(rs: &RootSystem, p: i64) -> bool {
    let ct = rs.cartan_type();
    let h = rs.coxeter_number();
    ct.is_simply_laced() && p >= h && (ct.family() != Family::E || p > h + 1)
}

pub fn verify_twist_identity(group: &AffineWeylGroup, table: &KlTable, lambda: &Weight) -> Result<TwistReport> {
    let rs = group.root_system();
    let p = group.p();
    check_dominant(rs, lambda)?;
    let twisted_char = frobenius_twist(&weyl_character(rs, lambda)?, p);
    let twisted = brauer_decompose(rs, &twisted_char)?;
    let formula = lusztig_delta_vector(group, table, &lambda.scaled(p))?;
    Ok(TwistReport {
        weight: lambda.clone(),
        p,
        verdict: twisted == formula,
        dimension: twisted_char.dimension(),
        twisted,
        formula,
        within_hypotheses: twist_identity_hypotheses(rs, p),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::Arc;

    fn rs(t: &str) -> RootSystem {
        RootSystem::new(t.parse().unwrap())
    }

    fn w(c: &[i64]) -> Weight {
        Weight::new(c.to_vec())
    }

    fn setup(t: &str, p: i64) -> (Arc<AffineWeylGroup>, KlTable) {
        let g = Arc::new(AffineWeylGroup::new(Arc::new(rs(t)), p).unwrap());
        let table = KlTable::new(Arc::clone(&g));
        (g, table)
    }

    #[test]
    fn rank_one_strings() {
        let r = rs("A1");
        assert_eq!(weyl_character(&r, &w(&[1])).unwrap(), FormalCharacter::from_pairs(&[(w(&[1]), 1), (w(&[-1]), 1)]));
        let chi = weyl_character(&r, &w(&[3])).unwrap();
        assert_eq!(chi.len(), 4);
        assert!([3, 1, -1, -3].iter().all(|&k| chi.mult(&w(&[k])).is_one()));
    }

    #[test]
    fn adjoint_a2() {
        let r = rs("A2");
        let chi = weyl_character(&r, &w(&[1, 1])).unwrap();
        assert_eq!(chi.len(), 7);
        assert_eq!(chi.mult(&w(&[0, 0])), BigInt::from(2));
        assert_eq!(chi.dimension(), BigInt::from(8));
    }

    #[test]
    fn dimensions_match_weyl_formula() {
        for t in ["A2", "B2", "C3", "G2", "A3", "D4"] {
            let r = rs(t);
            for lam in r.dominant_weights_below(&r.rho().scaled(2)).unwrap() {
                let chi = weyl_character(&r, &lam).unwrap();
                assert_eq!(chi.dimension(), weyl_dimension(&r, &lam).unwrap(), "{t} {lam}");
                assert!(chi.is_w_invariant(&r));
                assert!(chi.mult(&lam).is_one());
            }
        }
    }

    #[test]
    fn non_dominant_is_rejected() {
        let r = rs("A2");
        assert!(matches!(weyl_character(&r, &w(&[-1, 2])), Err(Error::NotDominant(_))));
    }

    #[test]
    fn products_and_decomposition() {
        let r = rs("A1");
        let v = weyl_character(&r, &w(&[1])).unwrap();
        assert!(char_mul(&v, &FormalCharacter::zero()).is_empty());
        let sq = char_mul(&v, &v);
        assert_eq!(sq, FormalCharacter::from_pairs(&[(w(&[2]), 1), (w(&[0]), 2), (w(&[-2]), 1)]));
        assert_eq!(brauer_decompose(&r, &sq).unwrap(), DeltaVector::from_pairs(&[(w(&[2]), 1), (w(&[0]), 1)]));
        let e3 = FormalCharacter::from_pairs(&[(w(&[3]), 1), (w(&[-3]), 1)]);
        assert_eq!(brauer_decompose(&r, &e3).unwrap(), DeltaVector::from_pairs(&[(w(&[3]), 1), (w(&[1]), -1)]));
        assert_eq!(frobenius_twist(&v, 3), e3);
    }

    #[test]
    fn decomposition_detects_non_invariance() {
        let r = rs("A1");
        let chi = FormalCharacter::exp(w(&[1]));
        assert!(matches!(brauer_decompose(&r, &chi), Err(Error::NotWInvariant(_))));
    }

    #[test]
    fn brauer_round_trip_small_ranks() {
        for t in ["A1", "A2", "B2", "C2", "G2", "A3", "B3", "C3"] {
            let r = rs(t);
            let a0 = r.highest_short_root_index();
            let mut top = r.rho().clone();
            // Grow a dominant weight until <lambda + rho, alpha_0^vee> passes the bound.
            while r.pair_index(&(&top + r.rho()), a0) <= 12 {
                top = &top + r.rho();
            }
            for lam in r.dominant_weights_below(&top).unwrap() {
                if r.pair_index(&(&lam + r.rho()), a0) > 12 {
                    continue;
                }
                let chi = weyl_character(&r, &lam).unwrap();
                assert_eq!(
                    brauer_decompose(&r, &chi).unwrap(),
                    DeltaVector::from_pairs(&[(lam.clone(), 1)]),
                    "{t} {lam}"
                );
            }
        }
    }

    #[test]
    fn lusztig_examples() {
        let (g, table) = setup("A1", 3);
        let (dv, chi) = lusztig_character(&g, &table, &w(&[3])).unwrap();
        assert_eq!(dv, DeltaVector::from_pairs(&[(w(&[3]), 1), (w(&[1]), -1)]));
        assert_eq!(chi, FormalCharacter::from_pairs(&[(w(&[3]), 1), (w(&[-3]), 1)]));

        let (dv, _) = lusztig_character(&g, &table, &w(&[1])).unwrap();
        assert_eq!(dv, DeltaVector::from_pairs(&[(w(&[1]), 1)]));

        let (g, table) = setup("A2", 3);
        let (dv, chi) = lusztig_character(&g, &table, &w(&[1, 1])).unwrap();
        assert_eq!(dv, DeltaVector::from_pairs(&[(w(&[1, 1]), 1), (w(&[0, 0]), -1)]));
        assert_eq!(chi.dimension(), BigInt::from(7));
        assert!(chi.mult(&w(&[0, 0])).is_one());
    }

    #[test]
    fn lusztig_rejects_bad_input() {
        let (g, table) = setup("A1", 3);
        assert!(matches!(lusztig_character(&g, &table, &w(&[2])), Err(Error::Singular { .. })));
        assert!(matches!(lusztig_character(&g, &table, &w(&[-3])), Err(Error::NotDominant(_))));
    }

    #[test]
    fn twist_identity_examples() {
        let (g, table) = setup("A1", 3);
        let rep = verify_twist_identity(&g, &table, &w(&[1])).unwrap();
        assert!(rep.verdict && rep.within_hypotheses);
        assert_eq!(rep.formula, DeltaVector::from_pairs(&[(w(&[3]), 1), (w(&[1]), -1)]));

        let (g, table) = setup("A1", 2);
        let rep = verify_twist_identity(&g, &table, &w(&[1])).unwrap();
        assert!(rep.verdict);
        assert_eq!(rep.twisted, DeltaVector::from_pairs(&[(w(&[2]), 1), (w(&[0]), -1)]));

        let (g, table) = setup("A2", 3);
        let rep = verify_twist_identity(&g, &table, &w(&[0, 0])).unwrap();
        assert!(rep.verdict);
        assert_eq!(rep.formula, DeltaVector::from_pairs(&[(w(&[0, 0]), 1)]));
    }

    #[test]
    fn outside_hypotheses_is_flagged() {
        let (g, _) = setup("C2", 5);
        assert!(!twist_identity_hypotheses(g.root_system(), 5));
        assert!(!twist_identity_hypotheses(&rs("E6"), 13));
        assert!(twist_identity_hypotheses(&rs("E6"), 17));
    }

    #[test]
    fn json_shapes() {
        let dv = DeltaVector::from_pairs(&[(w(&[3]), 1), (w(&[1]), -1)]);
        let s = serde_json::to_string(&dv).unwrap();
        assert_eq!(s, r#"[{"weight":[1],"coeff":-1},{"weight":[3],"coeff":1}]"#);
        assert_eq!(serde_json::from_str::<DeltaVector>(&s).unwrap(), dv);
        assert_eq!(dv.to_string(), "Δ(3) - Δ(1)");
        let chi = FormalCharacter::from_pairs(&[(w(&[1]), 2)]);
        let s = serde_json::to_string(&chi).unwrap();
        assert_eq!(s, r#"[{"weight":[1],"mult":2}]"#);
        assert_eq!(serde_json::from_str::<FormalCharacter>(&s).unwrap(), chi);
    }
}
