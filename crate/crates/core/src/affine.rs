//! The affine Weyl group `W_p = W ⋉ pZΦ` under the dot action
//! `w·u = w(u + rho) - rho`, and the alcove geometry it acts on.
//!
//! Lengths and the Bruhat order are taken with respect to the generators
//! `S_p = {s_alpha : alpha simple} ∪ {s_{alpha_0,-p}}`, so the base alcove is
//! `C⁻`, the alcove containing `-2rho`. An element `x` has length equal to the
//! number of walls `H_{alpha,np}` separating `C⁻` from `x·C⁻`.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, RwLock};

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsys::{RootSystem, WeylElement};
use crate::weight::Weight;

/// `u - (<u, alpha^vee> - n p) alpha`: the linear reflection in the
/// hyperplane `<u, alpha^vee> = np`. `alpha` is a positive root in
/// simple-root coordinates.
pub fn reflect(rs: &RootSystem, alpha: &[i64], n: i64, p: i64, u: &Weight) -> Result<Weight> {
    rs.check_rank(u)?;
    let idx = rs.positive_root_index(alpha)?;
    let k = rs.pair_index(u, idx) - n * p;
    Ok(u - &rs.root(idx).weight.scaled(k))
}

/// The alcove containing `lambda`, as the vector of wall indices
/// `n_alpha = floor(<lambda + rho, alpha^vee> / p)` over the positive roots.
/// Returns `None` when `lambda` lies on a wall.
pub fn alcove_of(rs: &RootSystem, lambda: &Weight, p: i64) -> Option<Alcove> {
    let v = lambda + rs.rho();
    let mut walls = Vec::with_capacity(rs.positive_roots().len());
    for idx in 0..rs.positive_roots().len() {
        let (q, r) = rs.pair_index(&v, idx).div_mod_floor(&p);
        if r == 0 {
            return None;
        }
        walls.push(q);
    }
    Some(Alcove { walls })
}

/// `<lambda + rho, alpha^vee> ≢ 0 (mod p)` for every root.
pub fn is_regular(rs: &RootSystem, lambda: &Weight, p: i64) -> bool {
    alcove_of(rs, lambda, p).is_some()
}

/// Membership in the Jantzen region `<lambda + rho, alpha_0^vee> <= p(p - h + 2)`.
pub fn in_jantzen_region(rs: &RootSystem, lambda: &Weight, p: i64) -> Result<bool> {
    rs.check_rank(lambda)?;
    if !rs.is_dominant(lambda) {
        return Err(Error::NotDominant(lambda.clone()));
    }
    let v = lambda + rs.rho();
    let lhs = rs.pair_index(&v, rs.highest_short_root_index());
    Ok(lhs <= p * (p - rs.coxeter_number() + 2))
}

/// `0 <= <lambda, alpha^vee> < p` for every simple root.
pub fn is_restricted(rs: &RootSystem, lambda: &Weight, p: i64) -> Result<bool> {
    rs.check_rank(lambda)?;
    if !rs.is_dominant(lambda) {
        return Err(Error::NotDominant(lambda.clone()));
    }
    Ok(lambda.coords().iter().all(|&c| c < p))
}

/// A Coxeter generator of `W_p`: `s0` is `s_{alpha_0,-p}`, `si` (1-based,
/// Bourbaki numbering) is the simple reflection `s_{alpha_i}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct Generator(usize);

impl Generator {
    pub const AFFINE: Generator = Generator(0);

    /// The simple reflection `s_{alpha_i}`, `i` 1-based.
    pub fn simple(i: usize) -> Self {
        assert!(i >= 1, "simple reflections are numbered from 1");
        Generator(i)
    }

    pub fn index(self) -> usize {
        self.0
    }

    pub fn is_affine(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s{}", self.0)
    }
}

impl FromStr for Generator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        t.strip_prefix('s')
            .and_then(|d| d.parse::<usize>().ok())
            .map(Generator)
            .ok_or_else(|| Error::Parse(format!("bad generator {s:?}; expected s0, s1, ...")))
    }
}

impl From<Generator> for String {
    fn from(g: Generator) -> String {
        g.to_string()
    }
}

impl TryFrom<String> for Generator {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

/// Parses a word such as `"s1 s2 s0"` (separators: whitespace or commas).
/// `""`, `"e"` and `"id"` denote the empty word.
pub fn parse_word(s: &str) -> Result<Vec<Generator>> {
    let t = s.trim();
    if t.is_empty() || t == "e" || t == "id" {
        return Ok(Vec::new());
    }
    t.split(|c: char| c.is_whitespace() || c == ',').filter(|x| !x.is_empty()).map(str::parse).collect()
}

pub fn word_to_string(word: &[Generator]) -> String {
    if word.is_empty() {
        return "e".to_string();
    }
    word.iter().map(Generator::to_string).collect::<Vec<_>>().join(" ")
}

/// An element `u ↦ w(u) + p·nu` of `W_p`, with `nu` in the root lattice.
/// The pair is a canonical form: equal elements have equal fields.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineElement {
    linear: WeylElement,
    translation: Weight,
}

impl AffineElement {
    pub fn new(linear: WeylElement, translation: Weight) -> Self {
        AffineElement { linear, translation }
    }

    pub fn linear(&self) -> &WeylElement {
        &self.linear
    }

    pub fn translation(&self) -> &Weight {
        &self.translation
    }
}

/// An alcove, recorded by its wall indices: `n_alpha p < <u + rho, alpha^vee> < (n_alpha + 1) p`
/// for interior points `u`, over the positive roots in the root system's
/// enumeration order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Alcove {
    walls: Vec<i64>,
}

impl Alcove {
    pub fn walls(&self) -> &[i64] {
        &self.walls
    }

    /// Every wall index nonnegative, i.e. the alcove lies in the dominant chamber.
    pub fn is_dominant(&self) -> bool {
        self.walls.iter().all(|&n| n >= 0)
    }
}

/// A pair `lambda < lambda s` of adjacent dominant weights.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AdjacentPair {
    pub lower: Weight,
    pub upper: Weight,
    pub generator: Generator,
}

/// `W_p` for a fixed root system and `p >= h`, with memo tables for the
/// Bruhat order and Bruhat intervals.
#[derive(Debug)]
pub struct AffineWeylGroup {
    rs: Arc<RootSystem>,
    p: i64,
    bruhat: RwLock<HashMap<(AffineElement, AffineElement), bool>>,
    intervals: RwLock<HashMap<AffineElement, Arc<Vec<AffineElement>>>>,
}

impl AffineWeylGroup {
    /// Fails when `p < h`: alcove machinery needs `-2rho` to be regular.
    pub fn new(rs: Arc<RootSystem>, p: i64) -> Result<Self> {
        if p < 2 {
            return Err(Error::InvalidPrime(p));
        }
        let h = rs.coxeter_number();
        if p < h {
            return Err(Error::PrimeBelowCoxeter { p, h });
        }
        Ok(AffineWeylGroup { rs, p, bruhat: RwLock::new(HashMap::new()), intervals: RwLock::new(HashMap::new()) })
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn root_system_arc(&self) -> &Arc<RootSystem> {
        &self.rs
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    pub fn identity(&self) -> AffineElement {
        AffineElement::new(WeylElement::identity(self.rank()), Weight::zero(self.rank()))
    }

    /// `s0, s1, ..., sn`.
    pub fn generators(&self) -> Vec<Generator> {
        (0..=self.rank()).map(Generator).collect()
    }

    pub fn check_generator(&self, s: Generator) -> Result<()> {
        if s.0 <= self.rank() {
            Ok(())
        } else {
            Err(Error::SimpleIndexOutOfRange { index: s.0, rank: self.rank() })
        }
    }

    pub fn generator_element(&self, s: Generator) -> AffineElement {
        if s.is_affine() {
            let a0 = self.rs.highest_short_root_index();
            AffineElement::new(self.rs.root_reflection_element(a0), -&self.rs.root(a0).weight)
        } else {
            AffineElement::new(self.rs.simple_reflection_element(s.0 - 1), Weight::zero(self.rank()))
        }
    }

    /// `x * y`: apply `y` first.
    pub fn compose(&self, x: &AffineElement, y: &AffineElement) -> AffineElement {
        let linear = x.linear.compose(&y.linear);
        let translation = &x.linear.apply(&y.translation) + &x.translation;
        AffineElement::new(linear, translation)
    }

    pub fn inverse(&self, x: &AffineElement) -> AffineElement {
        let inv = self.rs.weyl_inverse(&x.linear);
        let translation = -&inv.apply(&x.translation);
        AffineElement::new(inv, translation)
    }

    pub fn from_word(&self, word: &[Generator]) -> Result<AffineElement> {
        let mut x = self.identity();
        for &s in word {
            self.check_generator(s)?;
            x = self.compose(&x, &self.generator_element(s));
        }
        Ok(x)
    }

    pub fn times_generator(&self, x: &AffineElement, s: Generator) -> AffineElement {
        self.compose(x, &self.generator_element(s))
    }

    pub fn generator_times(&self, s: Generator, x: &AffineElement) -> AffineElement {
        self.compose(&self.generator_element(s), x)
    }

    /// Linear action `u ↦ w(u) + p nu`.
    pub fn apply(&self, x: &AffineElement, u: &Weight) -> Weight {
        &x.linear.apply(u) + &x.translation.scaled(self.p)
    }

    /// Dot action `x·u = x(u + rho) - rho`.
    pub fn dot(&self, x: &AffineElement, u: &Weight) -> Weight {
        &self.apply(x, &(u + self.rs.rho())) - self.rs.rho()
    }

    pub fn minus_two_rho(&self) -> Weight {
        self.rs.rho().scaled(-2)
    }

    /// `C⁻`, all wall indices `-1`.
    pub fn base_alcove(&self) -> Alcove {
        Alcove { walls: vec![-1; self.rs.positive_roots().len()] }
    }

    /// `C⁺`, all wall indices `0`.
    pub fn fundamental_alcove(&self) -> Alcove {
        Alcove { walls: vec![0; self.rs.positive_roots().len()] }
    }

    /// `x·C⁻`. Since `p >= h`, `-2rho` is an interior point of `C⁻`.
    pub fn alcove_of_element(&self, x: &AffineElement) -> Alcove {
        alcove_of(&self.rs, &self.dot(x, &self.minus_two_rho()), self.p)
            .expect("image of an interior point is interior")
    }

    pub fn length(&self, x: &AffineElement) -> usize {
        self.alcove_length(&self.alcove_of_element(x))
    }

    fn alcove_length(&self, c: &Alcove) -> usize {
        c.walls.iter().map(|n| (n + 1).unsigned_abs() as usize).sum()
    }

    fn is_left_descent_of_alcove(&self, s: Generator, c: &Alcove) -> bool {
        if s.is_affine() {
            c.walls[self.rs.highest_short_root_index()] <= -2
        } else {
            c.walls[s.0 - 1] >= 0
        }
    }

    /// Some `s` with `l(s x) < l(x)`, if `x` is not the identity.
    pub fn left_descent(&self, x: &AffineElement) -> Option<Generator> {
        let c = self.alcove_of_element(x);
        self.generators().into_iter().find(|&s| self.is_left_descent_of_alcove(s, &c))
    }

    pub fn right_descents(&self, x: &AffineElement) -> Vec<Generator> {
        let lx = self.length(x);
        self.generators().into_iter().filter(|&s| self.length(&self.times_generator(x, s)) < lx).collect()
    }

    /// A reduced word for `x`, read off the wall-crossing walk from `x·C⁻`
    /// back to `C⁻`.
    pub fn reduced_word(&self, x: &AffineElement) -> Vec<Generator> {
        let mut word = Vec::new();
        let mut cur = x.clone();
        while let Some(s) = self.left_descent(&cur) {
            word.push(s);
            cur = self.generator_times(s, &cur);
        }
        word
    }

    /// Walk `lambda + rho` toward `C⁻`. Returns `x` and the base point
    /// `lambda_0` in the closure of `C⁻` with `x·lambda_0 = lambda`; the word
    /// produced is reduced.
    pub fn walk_to_base(&self, lambda: &Weight) -> Result<(AffineElement, Weight)> {
        self.rs.check_rank(lambda)?;
        let rho = self.rs.rho();
        let a0 = self.rs.highest_short_root_index();
        let mut v = lambda + rho;
        let mut word = Vec::new();
        loop {
            if let Some(i) = v.coords().iter().position(|&c| c > 0) {
                v = self.rs.simple_reflection(i, &v);
                word.push(Generator(i + 1));
                continue;
            }
            let k = self.rs.pair_index(&v, a0);
            if k < -self.p {
                v = &v - &self.rs.root(a0).weight.scaled(k + self.p);
                word.push(Generator::AFFINE);
                continue;
            }
            break;
        }
        Ok((self.from_word(&word)?, &v - rho))
    }

    /// For regular `lambda`: the unique `x` and `lambda_0 ∈ C⁻` with
    /// `x·lambda_0 = lambda`.
    pub fn element_for_weight(&self, lambda: &Weight) -> Result<(AffineElement, Weight)> {
        self.rs.check_rank(lambda)?;
        if !is_regular(&self.rs, lambda, self.p) {
            return Err(Error::Singular { weight: lambda.clone(), p: self.p });
        }
        self.walk_to_base(lambda)
    }

    /// Whether `lambda` lies in `W_p·0 = W_p·(-2rho)`.
    pub fn in_principal_orbit(&self, lambda: &Weight) -> Result<bool> {
        if !is_regular(&self.rs, lambda, self.p) {
            return Ok(false);
        }
        let (_, base) = self.walk_to_base(lambda)?;
        Ok(base == self.minus_two_rho())
    }

    fn act_on_walls(&self, s: Generator, walls: &[i64]) -> Vec<i64> {
        // In v = u + rho coordinates s acts by v ↦ w v + p nu, so
        // <s v, beta^vee> = <v, (w^{-1} beta)^vee> + p <nu, beta^vee>.
        let a0 = self.rs.highest_short_root_index();
        let roots = self.rs.positive_roots();
        (0..roots.len())
            .map(|b| {
                let beta = &roots[b].weight;
                let (image, shift) = if s.is_affine() {
                    let nu = -&roots[a0].weight;
                    (self.rs.root_reflection(a0, beta), self.rs.pair_index(&nu, b))
                } else {
                    (self.rs.simple_reflection(s.0 - 1, beta), 0)
                };
                let (g, positive) = self.rs.lookup_root(&image).expect("reflections permute roots");
                let n = if positive { walls[g] } else { -walls[g] - 1 };
                n + shift
            })
            .collect()
    }

    /// Validates a wall-index vector, returning it as an alcove.
    pub fn alcove(&self, walls: Vec<i64>) -> Result<Alcove> {
        self.element_for_alcove(&Alcove { walls: walls.clone() })?;
        Ok(Alcove { walls })
    }

    /// The unique `x` with `x·C⁻ = c`. Fails if `c` is not realizable.
    pub fn element_for_alcove(&self, c: &Alcove) -> Result<AffineElement> {
        let unrealizable = || Error::UnrealizableAlcove(c.walls.clone());
        if c.walls.len() != self.rs.positive_roots().len() {
            return Err(unrealizable());
        }
        let budget = self.alcove_length(c);
        let mut cur = c.walls.clone();
        let mut word = Vec::new();
        for _ in 0..=budget {
            let here = Alcove { walls: cur.clone() };
            match self.generators().into_iter().find(|&s| self.is_left_descent_of_alcove(s, &here)) {
                Some(s) => {
                    cur = self.act_on_walls(s, &cur);
                    word.push(s);
                }
                None => break,
            }
        }
        let x = self.from_word(&word)?;
        if self.alcove_of_element(&x) == *c {
            Ok(x)
        } else {
            Err(unrealizable())
        }
    }

    /// Bruhat order `y <= x`, by the descent recursion: for `s x < x`,
    /// `y <= x` iff `min(y, s y) <= s x`.
    pub fn bruhat_leq(&self, y: &AffineElement, x: &AffineElement) -> bool {
        let (ly, lx) = (self.length(y), self.length(x));
        self.bruhat_leq_with_lengths(y, ly, x, lx)
    }

    fn bruhat_leq_with_lengths(&self, y: &AffineElement, ly: usize, x: &AffineElement, lx: usize) -> bool {
        if ly > lx {
            return false;
        }
        if ly == lx {
            return y == x;
        }
        if ly == 0 {
            return true;
        }
        let key = (y.clone(), x.clone());
        if let Some(&v) = self.bruhat.read().expect("bruhat memo").get(&key) {
            return v;
        }
        let s = self.left_descent(x).expect("x is not the identity");
        let sx = self.generator_times(s, x);
        let sy = self.generator_times(s, y);
        let lsy = self.length(&sy);
        let result = if lsy < ly {
            self.bruhat_leq_with_lengths(&sy, lsy, &sx, lx - 1)
        } else {
            self.bruhat_leq_with_lengths(y, ly, &sx, lx - 1)
        };
        self.bruhat.write().expect("bruhat memo").insert(key, result);
        result
    }

    /// All `y <= x`, sorted by length and then canonical form. Uses
    /// `[e, x] = [e, s x] ∪ s[e, s x]` for a left descent `s`.
    pub fn interval_below(&self, x: &AffineElement) -> Arc<Vec<AffineElement>> {
        if let Some(v) = self.intervals.read().expect("interval memo").get(x) {
            return Arc::clone(v);
        }
        let result = match self.left_descent(x) {
            None => vec![x.clone()],
            Some(s) => {
                let lower = self.interval_below(&self.generator_times(s, x));
                let mut set: HashSet<AffineElement> = lower.iter().cloned().collect();
                for z in lower.iter() {
                    set.insert(self.generator_times(s, z));
                }
                let mut v: Vec<(usize, AffineElement)> = set.into_iter().map(|z| (self.length(&z), z)).collect();
                v.sort();
                v.into_iter().map(|(_, z)| z).collect()
            }
        };
        let result = Arc::new(result);
        self.intervals.write().expect("interval memo").insert(x.clone(), Arc::clone(&result));
        result
    }

    /// The label `s` of the common face of two adjacent alcoves, or `None`
    /// if they are not adjacent.
    pub fn face_label(&self, c: &Alcove, d: &Alcove) -> Result<Option<Generator>> {
        let x = self.element_for_alcove(c)?;
        let y = self.element_for_alcove(d)?;
        let diff = self.compose(&self.inverse(&x), &y);
        Ok(self.generators().into_iter().find(|&s| self.generator_element(s) == diff))
    }

    /// `lambda s`: if `lambda = x·lambda_0` with `lambda_0 ∈ C⁻`, then
    /// `lambda s = (x s)·lambda_0`, the reflection of `lambda` through the
    /// `s`-face of its alcove.
    pub fn adjacent_weight(&self, lambda: &Weight, s: Generator) -> Result<Weight> {
        self.check_generator(s)?;
        let (x, base) = self.element_for_weight(lambda)?;
        Ok(self.dot(&self.times_generator(&x, s), &base))
    }

    fn check_principal_dominant(&self, lambda: &Weight) -> Result<AffineElement> {
        self.rs.check_rank(lambda)?;
        if !self.rs.is_dominant(lambda) {
            return Err(Error::NotDominant(lambda.clone()));
        }
        let (x, base) = self.element_for_weight(lambda)?;
        if base != self.minus_two_rho() {
            return Err(Error::NotInPrincipalOrbit(lambda.clone()));
        }
        Ok(x)
    }

    /// Steps `x ↦ x s` that lower the length and keep `x s·(-2rho)` dominant.
    fn downward_steps(&self, x: &AffineElement) -> Vec<(AffineElement, Weight)> {
        let lx = self.length(x);
        self.generators()
            .into_iter()
            .filter_map(|s| {
                let xs = self.times_generator(x, s);
                let w = self.dot(&xs, &self.minus_two_rho());
                (self.length(&xs) + 1 == lx && self.rs.is_dominant(&w)).then_some((xs, w))
            })
            .collect()
    }

    /// A chain `0 = xi_0 < xi_1 < ... < xi_m = lambda` of adjacent dominant
    /// regular weights in `W_p·0`, with `m = l(x) - l(w_0)`.
    pub fn adjacent_path_from_zero(&self, lambda: &Weight) -> Result<Vec<Weight>> {
        let mut x = self.check_principal_dominant(lambda)?;
        let zero = Weight::zero(self.rank());
        let mut path = vec![lambda.clone()];
        while path.last() != Some(&zero) {
            let (xs, w) = self
                .downward_steps(&x)
                .into_iter()
                .next()
                .expect("a dominant alcove other than C+ has a lower wall off the origin");
            x = xs;
            path.push(w);
        }
        path.reverse();
        Ok(path)
    }

    /// Every chain of the kind returned by [`Self::adjacent_path_from_zero`].
    /// The number of chains grows quickly; intended for small weights.
    pub fn adjacent_paths_from_zero(&self, lambda: &Weight) -> Result<Vec<Vec<Weight>>> {
        let x = self.check_principal_dominant(lambda)?;
        let zero = Weight::zero(self.rank());
        let mut out = BTreeSet::new();
        let mut stack = vec![(x, vec![lambda.clone()])];
        while let Some((x, path)) = stack.pop() {
            if path.last() == Some(&zero) {
                let mut p = path;
                p.reverse();
                out.insert(p);
                continue;
            }
            for (xs, w) in self.downward_steps(&x) {
                let mut next = path.clone();
                next.push(w);
                stack.push((xs, next));
            }
        }
        Ok(out.into_iter().collect())
    }

    /// All `(lambda, lambda s, s)` with `lambda < lambda s` both in
    /// `ideal ∩ W_p·0`. The input must be a finite ideal of dominant weights.
    pub fn adjacent_pairs_in_ideal(&self, ideal: &BTreeSet<Weight>) -> Result<Vec<AdjacentPair>> {
        for member in ideal {
            for below in self.rs.dominant_weights_below(member)? {
                if !ideal.contains(&below) {
                    return Err(Error::NotAnIdeal { member: member.clone(), missing: below });
                }
            }
        }
        let mut pairs = Vec::new();
        for lambda in ideal {
            if !self.in_principal_orbit(lambda)? {
                continue;
            }
            for s in self.generators() {
                let mu = self.adjacent_weight(lambda, s)?;
                if mu != *lambda && ideal.contains(&mu) && self.rs.dominance_leq(lambda, &mu) {
                    pairs.push(AdjacentPair { lower: lambda.clone(), upper: mu, generator: s });
                }
            }
        }
        pairs.sort();
        Ok(pairs)
    }
}
