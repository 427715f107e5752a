//! Crystallographic root systems built from a Cartan type.
//!
//! Conventions:
//! - simple roots are numbered as in Bourbaki; internally indices are 0-based;
//! - the Cartan matrix stores `a[i][j] = <alpha_i, alpha_j^vee>`, so row `i`
//!   is the simple root `alpha_i` written in fundamental-weight coordinates;
//! - weights are stored in fundamental-weight coordinates, roots in
//!   simple-root coordinates;
//! - finite Weyl group elements are integer matrices acting on weight
//!   coordinates.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::weight::Weight;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }
}

/// A Cartan type such as `A2` or `C3`. Only valid family/rank combinations
/// can be constructed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CartanType {
    family: Family,
    rank: usize,
}

impl CartanType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(CartanType { family, rank })
        } else {
            Err(Error::InvalidCartanType(format!("{}{}", family.letter(), rank)))
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_simply_laced(&self) -> bool {
        matches!(self.family, Family::A | Family::D | Family::E)
    }

    /// Cartan matrix in the Bourbaki numbering, `a[i][j] = <alpha_i, alpha_j^vee>`.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut a = vec![vec![0i64; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |i: usize, j: usize, aij: i64, aji: i64| {
            a[i][j] = aij;
            a[j][i] = aji;
        };
        match self.family {
            Family::A => (0..n - 1).for_each(|i| link(i, i + 1, -1, -1)),
            Family::B => {
                (0..n - 2).for_each(|i| link(i, i + 1, -1, -1));
                // alpha_n short
                link(n - 2, n - 1, -2, -1);
            }
            Family::C => {
                (0..n - 2).for_each(|i| link(i, i + 1, -1, -1));
                // alpha_n long
                link(n - 2, n - 1, -1, -2);
            }
            Family::D => {
                (0..n - 2).for_each(|i| link(i, i + 1, -1, -1));
                link(n - 3, n - 1, -1, -1);
            }
            Family::E => {
                link(0, 2, -1, -1);
                link(1, 3, -1, -1);
                (2..n - 1).for_each(|i| link(i, i + 1, -1, -1));
            }
            Family::F => {
                link(0, 1, -1, -1);
                link(1, 2, -2, -1);
                link(2, 3, -1, -1);
            }
            Family::G => link(0, 1, -1, -3),
        }
        a
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => return Err(Error::InvalidCartanType(s.to_string())),
        };
        let rank = chars.as_str().parse::<usize>().map_err(|_| Error::InvalidCartanType(s.to_string()))?;
        CartanType::new(family, rank)
    }
}

impl Serialize for CartanType {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for CartanType {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A positive root together with the data needed for pairings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Root {
    /// Coordinates in the basis of simple roots.
    pub simple_coords: Vec<i64>,
    /// The same root in fundamental-weight coordinates.
    pub weight: Weight,
    /// Coordinates of the coroot in the basis of simple coroots.
    pub coroot_coords: Vec<i64>,
    /// `(alpha, alpha) / 2`, normalized so that short roots have 1.
    pub half_norm: i64,
}

impl Root {
    pub fn height(&self) -> i64 {
        self.simple_coords.iter().sum()
    }
}

/// An element of the finite Weyl group, stored as its matrix on
/// fundamental-weight coordinates: `(w lambda)_i = sum_j m[i][j] lambda_j`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElement {
    rank: usize,
    matrix: Vec<i64>,
}

impl WeylElement {
    pub fn identity(rank: usize) -> Self {
        let mut matrix = vec![0; rank * rank];
        for i in 0..rank {
            matrix[i * rank + i] = 1;
        }
        WeylElement { rank, matrix }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_identity(&self) -> bool {
        *self == WeylElement::identity(self.rank)
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.matrix[i * self.rank + j]
    }

    pub fn apply(&self, lambda: &Weight) -> Weight {
        let n = self.rank;
        let c = lambda.coords();
        Weight::new((0..n).map(|i| (0..n).map(|j| self.matrix[i * n + j] * c[j]).sum()).collect())
    }

    /// `self * other`, i.e. apply `other` first.
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        let n = self.rank;
        let mut matrix = vec![0; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.matrix[i * n + k];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    matrix[i * n + j] += a * other.matrix[k * n + j];
                }
            }
        }
        WeylElement { rank: n, matrix }
    }
}

impl fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<&[i64]> = self.matrix.chunks(self.rank.max(1)).collect();
        write!(f, "WeylElement{rows:?}")
    }
}

/// The orbit of a weight under the finite Weyl group.
#[derive(Debug, Clone)]
pub struct WeylOrbit {
    pub weights: BTreeSet<Weight>,
    /// The unique dominant member.
    pub dominant: Weight,
    /// An element taking the input weight to `dominant`.
    pub element: WeylElement,
}

/// A subsystem spanned by a subset of the simple roots (a Levi subsystem),
/// living in the ambient weight lattice. The full system is the case where
/// every simple root is kept.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSubsystem {
    /// 0-based indices of the kept simple roots, sorted.
    pub simple: Vec<usize>,
    /// Indices into the parent's positive roots of the roots in the span.
    pub positive: Vec<usize>,
    /// Sum of the positive roots of the subsystem (twice its rho), as a weight.
    pub two_rho: Weight,
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    cartan: CartanType,
    cartan_matrix: Vec<Vec<i64>>,
    simple_half_norms: Vec<i64>,
    positive_roots: Vec<Root>,
    rho: Weight,
    coxeter_number: i64,
    highest_short_root: usize,
    longest_element: WeylElement,
    /// Weight coordinates of every root (both signs) -> (positive index, sign).
    root_lookup: HashMap<Weight, (usize, bool)>,
    simple_lookup: HashMap<Vec<i64>, usize>,
    cartan_inverse: Vec<Vec<Ratio<i64>>>,
}

impl RootSystem {
    pub fn new(cartan: CartanType) -> Self {
        let n = cartan.rank();
        let a = cartan.cartan_matrix();
        let simple_half_norms = half_norms(&a);

        // Positive roots in simple-root coordinates, generated height by
        // height with root strings.
        let mut roots: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
        let mut seen: BTreeSet<Vec<i64>> = roots.iter().cloned().collect();
        let mut next = 0;
        while next < roots.len() {
            let beta = roots[next].clone();
            next += 1;
            for i in 0..n {
                let pairing: i64 = (0..n).map(|j| beta[j] * a[j][i]).sum();
                // How far down the alpha_i string through beta goes.
                let mut down = 0;
                let mut probe = beta.clone();
                loop {
                    probe[i] -= 1;
                    if seen.contains(&probe) {
                        down += 1;
                    } else {
                        break;
                    }
                }
                if down - pairing > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if seen.insert(up.clone()) {
                        roots.push(up);
                    }
                }
            }
        }
        roots.sort_by(|x, y| {
            let hx: i64 = x.iter().sum();
            let hy: i64 = y.iter().sum();
            hx.cmp(&hy).then_with(|| y.cmp(x))
        });

        let positive_roots: Vec<Root> = roots
            .into_iter()
            .map(|c| {
                let weight = Weight::new((0..n).map(|k| (0..n).map(|j| c[j] * a[j][k]).sum()).collect());
                let mut norm2 = 0i64; // (beta, beta)
                for i in 0..n {
                    for j in 0..n {
                        norm2 += c[i] * c[j] * a[i][j] * simple_half_norms[j];
                    }
                }
                let half_norm = norm2 / 2;
                let coroot_coords = (0..n)
                    .map(|j| {
                        let num = c[j] * simple_half_norms[j];
                        debug_assert_eq!(num % half_norm, 0);
                        num / half_norm
                    })
                    .collect();
                Root { simple_coords: c, weight, coroot_coords, half_norm }
            })
            .collect();

        let mut root_lookup = HashMap::new();
        for (idx, r) in positive_roots.iter().enumerate() {
            root_lookup.insert(r.weight.clone(), (idx, true));
            root_lookup.insert(-&r.weight, (idx, false));
        }
        let simple_lookup = positive_roots.iter().enumerate().map(|(i, r)| (r.simple_coords.clone(), i)).collect();

        let short = positive_roots.iter().map(|r| r.half_norm).min().unwrap_or(1);
        let highest_short_root = positive_roots
            .iter()
            .enumerate()
            .filter(|(_, r)| r.half_norm == short)
            .max_by_key(|(_, r)| r.height())
            .map(|(i, _)| i)
            .expect("root system has roots");

        let coxeter_number = (2 * positive_roots.len() / n) as i64;
        let rho = Weight::new(vec![1; n]);
        let cartan_inverse = rational_inverse(&a);

        let mut rs = RootSystem {
            cartan,
            cartan_matrix: a,
            simple_half_norms,
            positive_roots,
            rho,
            coxeter_number,
            highest_short_root,
            longest_element: WeylElement::identity(n),
            root_lookup,
            simple_lookup,
            cartan_inverse,
        };
        // w0 sends rho to -rho.
        let (_, w0) = rs.antidominant_representative(&rs.rho.clone());
        rs.longest_element = w0;
        rs
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan
    }

    pub fn rank(&self) -> usize {
        self.cartan.rank()
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan_matrix
    }

    /// `(alpha_i, alpha_i) / 2` for the simple roots, short roots normalized to 1.
    pub fn simple_half_norms(&self) -> &[i64] {
        &self.simple_half_norms
    }

    /// Positive roots ordered by height, then reverse-lexicographically on
    /// simple-root coordinates. The simple roots come first, in order.
    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    pub fn root(&self, index: usize) -> &Root {
        &self.positive_roots[index]
    }

    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    pub fn coxeter_number(&self) -> i64 {
        self.coxeter_number
    }

    pub fn highest_short_root_index(&self) -> usize {
        self.highest_short_root
    }

    pub fn highest_short_root(&self) -> &Root {
        &self.positive_roots[self.highest_short_root]
    }

    pub fn longest_element(&self) -> &WeylElement {
        &self.longest_element
    }

    /// Simple root `alpha_i` (0-based) as a weight.
    pub fn simple_root(&self, i: usize) -> &Weight {
        &self.positive_roots[i].weight
    }

    pub fn check_rank(&self, lambda: &Weight) -> Result<()> {
        if lambda.rank() == self.rank() {
            Ok(())
        } else {
            Err(Error::RankMismatch { expected: self.rank(), got: lambda.rank() })
        }
    }

    /// Index of the positive root with the given simple-root coordinates.
    pub fn positive_root_index(&self, simple_coords: &[i64]) -> Result<usize> {
        self.simple_lookup.get(simple_coords).copied().ok_or_else(|| Error::NotARoot(simple_coords.to_vec()))
    }

    /// Looks up a root (of either sign) from its weight coordinates.
    pub fn lookup_root(&self, weight: &Weight) -> Option<(usize, bool)> {
        self.root_lookup.get(weight).copied()
    }

    /// `<lambda, alpha^vee>` for the positive root with the given index.
    pub fn pair_index(&self, lambda: &Weight, index: usize) -> i64 {
        let coroot = &self.positive_roots[index].coroot_coords;
        lambda.coords().iter().zip(coroot).map(|(l, c)| l * c).sum()
    }

    /// `<lambda, alpha^vee>` for a positive root given in simple-root
    /// coordinates.
    pub fn pair(&self, lambda: &Weight, alpha: &[i64]) -> Result<i64> {
        self.check_rank(lambda)?;
        let idx = self.positive_root_index(alpha)?;
        Ok(self.pair_index(lambda, idx))
    }

    pub fn is_dominant(&self, lambda: &Weight) -> bool {
        lambda.coords().iter().all(|&c| c >= 0)
    }

    pub fn simple_reflection(&self, i: usize, lambda: &Weight) -> Weight {
        let k = lambda.coords()[i];
        if k == 0 {
            return lambda.clone();
        }
        let row = &self.cartan_matrix[i];
        Weight::new(lambda.coords().iter().zip(row).map(|(l, a)| l - k * a).collect())
    }

    /// Reflection in the positive root with index `index`: `u - <u, alpha^vee> alpha`.
    pub fn root_reflection(&self, index: usize, lambda: &Weight) -> Weight {
        let k = self.pair_index(lambda, index);
        let alpha = &self.positive_roots[index].weight;
        Weight::new(lambda.coords().iter().zip(alpha.coords()).map(|(l, a)| l - k * a).collect())
    }

    pub fn simple_reflection_element(&self, i: usize) -> WeylElement {
        let n = self.rank();
        let mut w = WeylElement::identity(n);
        // (s_i lambda)_r = lambda_r - lambda_i a[i][r]
        for r in 0..n {
            w.matrix[r * n + i] -= self.cartan_matrix[i][r];
        }
        w
    }

    /// The reflection `s_alpha` for the positive root with index `index`.
    pub fn root_reflection_element(&self, index: usize) -> WeylElement {
        let n = self.rank();
        let mut w = WeylElement::identity(n);
        for j in 0..n {
            let mut e = vec![0; n];
            e[j] = 1;
            let col = self.root_reflection(index, &Weight::new(e));
            for (i, c) in col.coords().iter().enumerate() {
                w.matrix[i * n + j] = *c;
            }
        }
        w
    }

    pub fn element_from_word(&self, word: &[usize]) -> WeylElement {
        word.iter().fold(WeylElement::identity(self.rank()), |acc, &i| acc.compose(&self.simple_reflection_element(i)))
    }

    /// Reduced word `[i_1, ..., i_k]` with `w = s_{i_1} ... s_{i_k}`.
    pub fn reduced_word(&self, w: &WeylElement) -> Vec<usize> {
        // w is determined by w(rho); reflect w(rho) back to rho.
        let mut v = w.apply(&self.rho);
        let mut word = Vec::new();
        while let Some(i) = v.coords().iter().position(|&c| c < 0) {
            v = self.simple_reflection(i, &v);
            word.push(i);
        }
        word
    }

    pub fn weyl_length(&self, w: &WeylElement) -> usize {
        self.reduced_word(w).len()
    }

    pub fn weyl_inverse(&self, w: &WeylElement) -> WeylElement {
        let mut word = self.reduced_word(w);
        word.reverse();
        self.element_from_word(&word)
    }

    /// The dominant member of the orbit of `lambda`, and an element taking
    /// `lambda` to it.
    pub fn dominant_representative(&self, lambda: &Weight) -> (Weight, WeylElement) {
        let mut v = lambda.clone();
        let mut w = WeylElement::identity(self.rank());
        while let Some(i) = v.coords().iter().position(|&c| c < 0) {
            v = self.simple_reflection(i, &v);
            w = self.simple_reflection_element(i).compose(&w);
        }
        (v, w)
    }

    fn antidominant_representative(&self, lambda: &Weight) -> (Weight, WeylElement) {
        let mut v = lambda.clone();
        let mut w = WeylElement::identity(self.rank());
        while let Some(i) = v.coords().iter().position(|&c| c > 0) {
            v = self.simple_reflection(i, &v);
            w = self.simple_reflection_element(i).compose(&w);
        }
        (v, w)
    }

    pub fn finite_weyl_orbit(&self, lambda: &Weight) -> WeylOrbit {
        let mut weights = BTreeSet::new();
        let mut queue = VecDeque::from([lambda.clone()]);
        weights.insert(lambda.clone());
        while let Some(v) = queue.pop_front() {
            for i in 0..self.rank() {
                let u = self.simple_reflection(i, &v);
                if weights.insert(u.clone()) {
                    queue.push_back(u);
                }
            }
        }
        let (dominant, element) = self.dominant_representative(lambda);
        WeylOrbit { weights, dominant, element }
    }

    /// All elements of the finite Weyl group. Intended for small types.
    pub fn weyl_group_elements(&self) -> Vec<WeylElement> {
        let mut seen: HashMap<Weight, WeylElement> = HashMap::new();
        let id = WeylElement::identity(self.rank());
        seen.insert(self.rho.clone(), id.clone());
        let mut queue = VecDeque::from([id]);
        let mut out = Vec::new();
        while let Some(w) = queue.pop_front() {
            for i in 0..self.rank() {
                let sw = self.simple_reflection_element(i).compose(&w);
                let key = sw.apply(&self.rho);
                if let std::collections::hash_map::Entry::Vacant(e) = seen.entry(key) {
                    e.insert(sw.clone());
                    queue.push_back(sw);
                }
            }
            out.push(w);
        }
        out
    }

    /// Coordinates of `lambda` in the basis of simple roots (rational).
    pub fn root_coords_rational(&self, lambda: &Weight) -> Vec<Ratio<i64>> {
        let n = self.rank();
        (0..n)
            .map(|i| {
                (0..n).fold(Ratio::zero(), |acc, k| {
                    acc + self.cartan_inverse[k][i] * Ratio::from_integer(lambda.coords()[k])
                })
            })
            .collect()
    }

    /// Coordinates of `lambda` in the basis of simple roots, if `lambda`
    /// lies in the root lattice.
    pub fn root_coords(&self, lambda: &Weight) -> Option<Vec<i64>> {
        self.root_coords_rational(lambda).into_iter().map(|q| q.is_integer().then(|| q.to_integer())).collect()
    }

    pub fn in_root_lattice(&self, lambda: &Weight) -> bool {
        self.root_coords(lambda).is_some()
    }

    /// Weight from simple-root coordinates.
    pub fn weight_from_root_coords(&self, c: &[i64]) -> Weight {
        let n = self.rank();
        Weight::new((0..n).map(|k| (0..n).map(|j| c[j] * self.cartan_matrix[j][k]).sum()).collect())
    }

    /// `lambda <= mu` in the dominance order: `mu - lambda` is a
    /// nonnegative integral combination of positive roots.
    pub fn dominance_leq(&self, lambda: &Weight, mu: &Weight) -> bool {
        match self.root_coords(&(mu - lambda)) {
            Some(c) => c.iter().all(|&x| x >= 0),
            None => false,
        }
    }

    /// `<lambda, rho^vee>` scaled to an integer: a strictly monotone height
    /// function for the dominance order, comparable within a coset of the
    /// root lattice.
    pub fn scaled_height(&self, lambda: &Weight) -> i64 {
        let q = self.root_coords_rational(lambda).into_iter().fold(Ratio::<i64>::zero(), |a, b| a + b);
        let den = self.cartan_denominator();
        (q * Ratio::from_integer(den)).to_integer()
    }

    /// A common denominator for `root_coords_rational`.
    pub fn cartan_denominator(&self) -> i64 {
        self.cartan_inverse.iter().flatten().fold(1i64, |acc, q| acc.lcm(q.denom()))
    }

    /// All dominant weights `mu <= lambda`, for dominant `lambda`.
    ///
    /// Covering relations among dominant weights are differences of positive
    /// roots, so a search that subtracts positive roots and stays dominant
    /// reaches every one of them.
    pub fn dominant_weights_below(&self, lambda: &Weight) -> Result<BTreeSet<Weight>> {
        self.check_rank(lambda)?;
        if !self.is_dominant(lambda) {
            return Err(Error::NotDominant(lambda.clone()));
        }
        Ok(self.dominant_below_in(
            lambda,
            &(0..self.positive_roots.len()).collect::<Vec<_>>(),
            &(0..self.rank()).collect::<Vec<_>>(),
        ))
    }

    /// Weights `mu <= lambda` (difference in the cone of `roots`) that are
    /// dominant for the simple roots `simple`, reached by subtracting roots.
    pub(crate) fn dominant_below_in(&self, lambda: &Weight, roots: &[usize], simple: &[usize]) -> BTreeSet<Weight> {
        let dominant = |w: &Weight| simple.iter().all(|&i| w.coords()[i] >= 0);
        let mut found = BTreeSet::from([lambda.clone()]);
        let mut queue = VecDeque::from([lambda.clone()]);
        while let Some(v) = queue.pop_front() {
            for &r in roots {
                let u = &v - &self.positive_roots[r].weight;
                if dominant(&u) && !found.contains(&u) {
                    found.insert(u.clone());
                    queue.push_back(u);
                }
            }
        }
        found
    }

    /// The subsystem spanned by the simple roots with 0-based indices `simple`.
    pub fn subsystem(&self, simple: &[usize]) -> Result<RootSubsystem> {
        let mut simple: Vec<usize> = simple.to_vec();
        simple.sort_unstable();
        simple.dedup();
        if let Some(&bad) = simple.iter().find(|&&i| i >= self.rank()) {
            return Err(Error::SimpleIndexOutOfRange { index: bad + 1, rank: self.rank() });
        }
        let positive: Vec<usize> = self
            .positive_roots
            .iter()
            .enumerate()
            .filter(|(_, r)| r.simple_coords.iter().enumerate().all(|(j, &c)| c == 0 || simple.contains(&j)))
            .map(|(i, _)| i)
            .collect();
        let two_rho = positive.iter().fold(Weight::zero(self.rank()), |acc, &i| &acc + &self.positive_roots[i].weight);
        Ok(RootSubsystem { simple, positive, two_rho })
    }

    pub fn full_subsystem(&self) -> RootSubsystem {
        self.subsystem(&(0..self.rank()).collect::<Vec<_>>()).expect("all indices valid")
    }

    /// Symmetric form `(x, lambda)` for `x` given in simple-root coordinates.
    pub fn form_root_weight(&self, x: &[i64], lambda: &Weight) -> i64 {
        x.iter().zip(&self.simple_half_norms).zip(lambda.coords()).map(|((c, d), l)| c * d * l).sum()
    }
}

/// `(alpha_i, alpha_i)/2` from a Cartan matrix, as the smallest positive
/// integers making `a[i][j] d[j]` symmetric.
fn half_norms(a: &[Vec<i64>]) -> Vec<i64> {
    let n = a.len();
    let mut d: Vec<Option<Ratio<i64>>> = vec![None; n];
    d[0] = Some(Ratio::one());
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        let di = d[i].expect("visited");
        for j in 0..n {
            if j != i && a[i][j] != 0 && d[j].is_none() {
                // a[i][j] d[j] = a[j][i] d[i]
                d[j] = Some(di * Ratio::new(a[j][i], a[i][j]));
                queue.push_back(j);
            }
        }
    }
    let d: Vec<Ratio<i64>> = d.into_iter().map(|x| x.expect("connected Dynkin diagram")).collect();
    let den = d.iter().fold(1i64, |acc, q| acc.lcm(q.denom()));
    let ints: Vec<i64> = d.iter().map(|q| (q * Ratio::from_integer(den)).to_integer()).collect();
    let g = ints.iter().fold(0i64, |acc, &x| acc.gcd(&x));
    ints.into_iter().map(|x| x / g).collect()
}

fn rational_inverse(a: &[Vec<i64>]) -> Vec<Vec<Ratio<i64>>> {
    let n = a.len();
    let mut m: Vec<Vec<Ratio<i64>>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .map(|&x| Ratio::from_integer(x))
                .chain((0..n).map(|j| if i == j { Ratio::one() } else { Ratio::zero() }))
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero()).expect("Cartan matrix is invertible");
        m.swap(col, pivot);
        let inv = m[col][col].recip();
        for x in m[col].iter_mut() {
            *x *= inv;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col];
                let pivot_row = m[col].clone();
                for (x, p) in m[r].iter_mut().zip(pivot_row) {
                    *x -= f * p;
                }
            }
        }
    }
    m.into_iter().map(|row| row[n..].to_vec()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::new(s.parse().unwrap())
    }

    #[test]
    fn invalid_types_rejected() {
        for s in ["A0", "B1", "C1", "D2", "E5", "E9", "F3", "G3", "X2", "A"] {
            assert!(s.parse::<CartanType>().is_err(), "{s}");
        }
        assert_eq!("c3".parse::<CartanType>().unwrap().to_string(), "C3");
    }

    #[test]
    fn small_systems() {
        let a1 = rs("A1");
        assert_eq!(a1.positive_roots().len(), 1);
        assert_eq!(a1.coxeter_number(), 2);
        assert_eq!(a1.rho(), &Weight::from([1]));

        let a2 = rs("A2");
        assert_eq!(a2.positive_roots().len(), 3);
        assert_eq!(a2.coxeter_number(), 3);
        assert_eq!(a2.rho(), &Weight::from([1, 1]));
        // <rho, alpha_0^vee> = 2
        assert_eq!(a2.pair(a2.rho(), &[1, 1]).unwrap(), 2);

        let c3 = rs("C3");
        assert_eq!(c3.positive_roots().len(), 9);
        assert_eq!(c3.coxeter_number(), 6);
        let a0 = c3.highest_short_root();
        assert_eq!(a0.half_norm, 1);
        assert_eq!(a0.simple_coords, vec![1, 2, 1]);
    }

    #[test]
    fn expected_root_counts() {
        let expected = [
            ("A1", 1),
            ("A4", 10),
            ("B2", 4),
            ("B3", 9),
            ("C2", 4),
            ("C4", 16),
            ("D4", 12),
            ("D5", 20),
            ("E6", 36),
            ("E7", 63),
            ("E8", 120),
            ("F4", 24),
            ("G2", 6),
        ];
        for (t, n) in expected {
            assert_eq!(rs(t).positive_roots().len(), n, "{t}");
        }
    }

    #[test]
    fn pairings() {
        let a1 = rs("A1");
        for m in -3..=5 {
            assert_eq!(a1.pair(&Weight::from([m]), &[1]).unwrap(), m);
        }
        let c2 = rs("C2");
        // long root alpha_2 = 2 eps_2, coroot eps_2; varpi_2 = eps_1 + eps_2.
        assert_eq!(c2.pair(&Weight::from([0, 1]), &[0, 1]).unwrap(), 1);
        // long root 2 alpha_1 + alpha_2 = 2 eps_1, coroot eps_1
        assert_eq!(c2.pair(&Weight::from([0, 1]), &[2, 1]).unwrap(), 1);
        // short root alpha_1 + alpha_2 = eps_1 + eps_2, coroot eps_1 + eps_2
        assert_eq!(c2.pair(&Weight::from([0, 1]), &[1, 1]).unwrap(), 2);
        assert!(c2.pair(&Weight::from([0, 1]), &[1, 2]).is_err());
    }

    #[test]
    fn dominance_predicate() {
        let a2 = rs("A2");
        assert!(a2.is_dominant(&Weight::from([4, 1])));
        assert!(!a2.is_dominant(&Weight::from([-2, 1])));
        assert!(a2.is_dominant(&Weight::zero(2)));
    }

    #[test]
    fn orbits() {
        let a1 = rs("A1");
        let o = a1.finite_weyl_orbit(&Weight::from([3]));
        assert_eq!(o.weights, BTreeSet::from([Weight::from([3]), Weight::from([-3])]));
        let a2 = rs("A2");
        let o = a2.finite_weyl_orbit(&Weight::from([1, 1]));
        assert_eq!(o.weights.len(), 6);
        assert_eq!(o.dominant, Weight::from([1, 1]));
        assert!(o.element.is_identity());
        let o = a2.finite_weyl_orbit(&Weight::from([-2, 1]));
        assert_eq!(o.dominant, Weight::from([1, 1]));
        assert_eq!(o.element.apply(&Weight::from([-2, 1])), o.dominant);
    }

    #[test]
    fn longest_element_properties() {
        for t in ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D4", "F4", "G2"] {
            let r = rs(t);
            let w0 = r.longest_element();
            assert_eq!(w0.apply(r.rho()), -r.rho(), "{t}");
            assert!(w0.compose(w0).is_identity(), "{t}");
            assert_eq!(r.weyl_length(w0), r.positive_roots().len(), "{t}");
            // h = <rho, alpha_0^vee> + 1
            assert_eq!(r.pair_index(r.rho(), r.highest_short_root_index()) + 1, r.coxeter_number(), "{t}");
        }
    }

    #[test]
    fn weyl_group_orders() {
        for (t, order) in [("A1", 2), ("A2", 6), ("A3", 24), ("B2", 8), ("C3", 48), ("G2", 12), ("D4", 192)] {
            assert_eq!(rs(t).weyl_group_elements().len(), order, "{t}");
        }
    }

    #[test]
    fn reflection_closure_and_cartan_consistency() {
        for t in ["A3", "B3", "C3", "D4", "F4", "G2", "E6"] {
            let r = rs(t);
            for root in r.positive_roots() {
                for i in 0..r.rank() {
                    let img = r.simple_reflection(i, &root.weight);
                    assert!(r.lookup_root(&img).is_some(), "{t}: s_{i} {:?}", root.simple_coords);
                }
            }
            for i in 0..r.rank() {
                for j in 0..r.rank() {
                    // a[i][j] = <alpha_i, alpha_j^vee>
                    assert_eq!(r.pair_index(r.simple_root(i), j), r.cartan_matrix()[i][j]);
                }
            }
        }
    }

    #[test]
    fn root_coordinates() {
        let a2 = rs("A2");
        assert_eq!(a2.root_coords(&Weight::from([3, 0])), Some(vec![2, 1]));
        assert_eq!(a2.root_coords(&Weight::from([1, 0])), None);
        assert!(a2.dominance_leq(&Weight::zero(2), &Weight::from([3, 0])));
        assert!(!a2.dominance_leq(&Weight::from([3, 0]), &Weight::zero(2)));
    }

    #[test]
    fn dominant_weights_below_matches_box_search() {
        for (t, lam) in [("A2", vec![3, 2]), ("B2", vec![2, 3]), ("G2", vec![2, 1]), ("A3", vec![2, 1, 2])] {
            let r = rs(t);
            let lam = Weight::new(lam);
            let got = r.dominant_weights_below(&lam).unwrap();
            let lc = r.root_coords_rational(&lam);
            let bound: i64 = lc.iter().map(|q| q.ceil().to_integer()).max().unwrap();
            let mut expect = BTreeSet::new();
            let n = r.rank();
            let mut c = vec![0i64; n];
            loop {
                let mu = &lam - &r.weight_from_root_coords(&c);
                if r.is_dominant(&mu) {
                    expect.insert(mu);
                }
                let mut k = 0;
                while k < n {
                    c[k] += 1;
                    if c[k] <= bound {
                        break;
                    }
                    c[k] = 0;
                    k += 1;
                }
                if k == n {
                    break;
                }
            }
            assert_eq!(got, expect, "{t}");
        }
    }
}
