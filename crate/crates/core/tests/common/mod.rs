//! Independent reference computations used by the integration tests.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::Arc;

use alcove_core::affine::AffineWeylGroup;
use alcove_core::{AffineElement, FormalCharacter, Generator, LaurentPoly, RootSystem, Weight};
use num_bigint::BigInt;
use num_traits::{One, Zero};

pub fn rs(t: &str) -> Arc<RootSystem> {
    Arc::new(RootSystem::new(t.parse().unwrap()))
}

pub fn group(t: &str, p: i64) -> Arc<AffineWeylGroup> {
    Arc::new(AffineWeylGroup::new(rs(t), p).unwrap())
}

pub fn w(c: &[i64]) -> Weight {
    Weight::new(c.to_vec())
}

/// Dominant weights with `<lambda + rho, alpha_0^vee> <= bound`, by a box search.
pub fn dominant_weights_up_to(rs: &RootSystem, bound: i64) -> Vec<Weight> {
    let a0 = rs.highest_short_root_index();
    let n = rs.rank();
    let mut out = Vec::new();
    let mut cur = vec![0i64; n];
    loop {
        let lam = Weight::new(cur.clone());
        if rs.pair_index(&(&lam + rs.rho()), a0) <= bound {
            out.push(lam);
        }
        // Odometer over [0, bound]^n.
        let mut i = 0;
        loop {
            if i == n {
                return out;
            }
            cur[i] += 1;
            if cur[i] <= bound {
                break;
            }
            cur[i] = 0;
            i += 1;
        }
    }
}

fn det(m: &[Vec<i64>]) -> i64 {
    // Integer Bareiss elimination.
    let n = m.len();
    let mut a: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&r| a[r][k] != 0) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    (sign * a[n - 1][n - 1]) as i64
}

/// `sum_w det(w) e^{w(mu)}` over the finite Weyl group.
fn alternant(rs: &RootSystem, mu: &Weight) -> HashMap<Weight, i64> {
    let n = rs.rank();
    let mut out: HashMap<Weight, i64> = HashMap::new();
    for el in rs.weyl_group_elements() {
        let m: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| el.entry(i, j)).collect()).collect();
        *out.entry(el.apply(mu)).or_insert(0) += det(&m);
    }
    out.retain(|_, v| *v != 0);
    out
}

/// Exact division of a finitely supported function by `1 - e^{-alpha}`:
/// `g(mu) = sum_{k >= 0} f(mu + k alpha)`.
fn divide_by_one_minus(rs: &RootSystem, f: &HashMap<Weight, i64>, root: usize) -> HashMap<Weight, i64> {
    let alpha = &rs.root(root).weight;
    let pair = |x: &Weight| rs.pair_index(x, root);
    let lo = f.keys().map(pair).min().unwrap_or(0);
    let hi = f.keys().map(pair).max().unwrap_or(0);
    let mut candidates = BTreeSet::new();
    for nu in f.keys() {
        let mut mu = nu.clone();
        while pair(&mu) >= lo {
            candidates.insert(mu.clone());
            mu = &mu - alpha;
        }
        // One step past the bottom must vanish for exact division.
        assert_eq!(line_sum(f, &mu, alpha, hi, &pair), 0, "alternant not divisible");
    }
    let mut g = HashMap::new();
    for mu in candidates {
        let v = line_sum(f, &mu, alpha, hi, &pair);
        if v != 0 {
            g.insert(mu, v);
        }
    }
    g
}

fn line_sum(f: &HashMap<Weight, i64>, mu: &Weight, alpha: &Weight, hi: i64, pair: &dyn Fn(&Weight) -> i64) -> i64 {
    let mut s = 0;
    let mut x = mu.clone();
    while pair(&x) <= hi {
        s += f.get(&x).copied().unwrap_or(0);
        x = &x + alpha;
    }
    s
}

/// Weyl's character as the quotient `A_{lambda + rho} / A_rho`, with
/// `A_rho = e^rho prod_{alpha > 0} (1 - e^{-alpha})`.
pub fn alternating_sum_character(rs: &RootSystem, lambda: &Weight) -> FormalCharacter {
    let mut f = alternant(rs, &(lambda + rs.rho()));
    for r in 0..rs.positive_roots().len() {
        f = divide_by_one_minus(rs, &f, r);
    }
    f.into_iter().map(|(mu, m)| (&mu - rs.rho(), BigInt::from(m))).collect()
}

/// Rank-one simple characters from base-p digits:
/// `ch L(sum l_i p^i) = prod_i (e^{l_i p^i} + e^{(l_i - 2) p^i} + ... + e^{-l_i p^i})`.
pub fn steinberg_a1(lambda: i64, p: i64) -> FormalCharacter {
    let mut out = FormalCharacter::exp(w(&[0]));
    let (mut rest, mut scale) = (lambda, 1);
    while rest > 0 {
        let digit = rest % p;
        let string: FormalCharacter = (0..=digit).map(|k| (w(&[(digit - 2 * k) * scale]), BigInt::one())).collect();
        out = alcove_core::charring::char_mul(&out, &string);
        rest /= p;
        scale *= p;
    }
    out
}

/// All elements of length at most `max_len`, grouped by length.
pub fn elements_by_length(g: &AffineWeylGroup, max_len: usize) -> Vec<Vec<AffineElement>> {
    let mut levels = vec![vec![g.identity()]];
    for l in 1..=max_len {
        let mut next = BTreeSet::new();
        for x in &levels[l - 1] {
            for s in g.generators() {
                let xs = g.times_generator(x, s);
                if g.length(&xs) == l {
                    next.insert(xs);
                }
            }
        }
        levels.push(next.into_iter().collect());
    }
    levels
}

/// The lower Bruhat interval of `x` by the subword property: products of
/// all subwords of one reduced word.
pub fn subword_interval(g: &AffineWeylGroup, x: &AffineElement) -> BTreeSet<AffineElement> {
    let word: Vec<Generator> = g.reduced_word(x);
    let mut out = BTreeSet::new();
    for mask in 0u32..(1 << word.len()) {
        let sub: Vec<Generator> =
            word.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &s)| s).collect();
        out.insert(g.from_word(&sub).unwrap());
    }
    out
}

/// Kazhdan-Lusztig polynomials of `x` by bar-invariance: with
/// `d = l(x) - l(y)`, `u^d P̄_{y,x} - P_{y,x} = sum_{y < z <= x} R_{y,z} P_{z,x}`,
/// and `P_{y,x}` is minus the part of the right side of degree below `d/2`.
/// R-polynomials come from right descents.
pub struct KlOracle {
    g: Arc<AffineWeylGroup>,
    intervals: HashMap<AffineElement, BTreeSet<AffineElement>>,
    r: HashMap<(AffineElement, AffineElement), LaurentPoly>,
}

impl KlOracle {
    pub fn new(g: Arc<AffineWeylGroup>) -> Self {
        KlOracle { g, intervals: HashMap::new(), r: HashMap::new() }
    }

    fn interval(&mut self, x: &AffineElement) -> BTreeSet<AffineElement> {
        if let Some(i) = self.intervals.get(x) {
            return i.clone();
        }
        let i = subword_interval(&self.g, x);
        self.intervals.insert(x.clone(), i.clone());
        i
    }

    fn leq(&mut self, y: &AffineElement, x: &AffineElement) -> bool {
        self.interval(x).contains(y)
    }

    pub fn r(&mut self, y: &AffineElement, x: &AffineElement) -> LaurentPoly {
        if y == x {
            return LaurentPoly::one();
        }
        if !self.leq(y, x) {
            return LaurentPoly::zero();
        }
        if let Some(v) = self.r.get(&(y.clone(), x.clone())) {
            return v.clone();
        }
        let g = Arc::clone(&self.g);
        let s = *g.right_descents(x).first().expect("x > y");
        let xs = g.times_generator(x, s);
        let ys = g.times_generator(y, s);
        let v = if g.length(&ys) < g.length(y) {
            self.r(&ys, &xs)
        } else {
            let q1 = &LaurentPoly::u() - &LaurentPoly::one();
            &(&q1 * &self.r(y, &xs)) + &self.r(&ys, &xs).shift(1)
        };
        self.r.insert((y.clone(), x.clone()), v.clone());
        v
    }

    /// `P_{y,x}` for every `y <= x`.
    pub fn kl_column(&mut self, x: &AffineElement) -> BTreeMap<AffineElement, LaurentPoly> {
        let g = Arc::clone(&self.g);
        let lx = g.length(x) as i64;
        let mut below: Vec<AffineElement> = self.interval(x).into_iter().collect();
        below.sort_by_key(|z| std::cmp::Reverse(g.length(z)));
        let mut p: BTreeMap<AffineElement, LaurentPoly> = BTreeMap::new();
        for y in below {
            if y == *x {
                p.insert(y, LaurentPoly::one());
                continue;
            }
            let d = lx - g.length(&y) as i64;
            let mut rhs = LaurentPoly::zero();
            for (z, pz) in p.clone() {
                if z != y && self.leq(&y, &z) {
                    rhs = &rhs + &(&self.r(&y, &z) * &pz);
                }
            }
            let mut pyx = LaurentPoly::zero();
            for (e, c) in rhs.terms() {
                if 2 * e < d {
                    pyx.add_term(e, -c.clone());
                }
            }
            // The remaining part must be u^d times the bar of P.
            let check = &(&pyx.bar().shift(d) - &pyx) - &rhs;
            assert!(check.is_zero(), "bar-invariance system inconsistent at length {d}");
            p.insert(y, pyx);
        }
        p
    }
}

pub fn is_zero_or_positive(c: &BigInt) -> bool {
    *c >= BigInt::zero()
}
