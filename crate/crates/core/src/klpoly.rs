//! Laurent polynomials in `u = t^2` over big integers, Hecke algebra
//! R-polynomials, and Kazhdan-Lusztig polynomials of `W_p`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, MapAccess, Visitor};
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::affine::{AffineElement, AffineWeylGroup};

/// A Laurent polynomial in one variable with big-integer coefficients.
/// Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(BigInt::one(), 0)
    }

    /// The variable `u`.
    pub fn u() -> Self {
        LaurentPoly::monomial(BigInt::one(), 1)
    }

    pub fn monomial(c: impl Into<BigInt>, exp: i64) -> Self {
        let mut p = LaurentPoly::zero();
        p.add_term(exp, c.into());
        p
    }

    /// From coefficients of `u^0, u^1, ...`.
    pub fn from_coeffs<C: Into<BigInt> + Clone>(coeffs: &[C]) -> Self {
        let mut p = LaurentPoly::zero();
        for (e, c) in coeffs.iter().enumerate() {
            p.add_term(e as i64, c.clone().into());
        }
        p
    }

    pub fn add_term(&mut self, exp: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(exp).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.coeffs.get(&exp).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    /// No negative exponents.
    pub fn is_polynomial(&self) -> bool {
        self.min_degree().is_none_or(|e| e >= 0)
    }

    /// Multiply by `u^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly { coeffs: self.coeffs.iter().map(|(&e, c)| (e + k, c.clone())).collect() }
    }

    /// The bar involution `u ↦ u^{-1}`.
    pub fn bar(&self) -> Self {
        LaurentPoly { coeffs: self.coeffs.iter().map(|(&e, c)| (-e, c.clone())).collect() }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly { coeffs: self.coeffs.iter().map(|(&e, c)| (e, c * k)).collect() }
    }

    /// Specialization at `u = 1`: the sum of the coefficients.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.values().sum()
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.coeffs {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.coeffs {
            out.add_term(e, -c);
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&a, x) in &self.coeffs {
            for (&b, y) in &rhs.coeffs {
                out.add_term(a + b, x * y);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { coeffs: self.coeffs.iter().map(|(&e, c)| (e, -c)).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// Renders as `c0 + c1*u + c2*u^2`, e.g. `1 - u^2` or `2 + 3*u`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (&e, c)) in self.coeffs.iter().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match e {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if e == 1 {
                        write!(f, "u")?;
                    } else {
                        write!(f, "u^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

/// Serialize a big integer as a JSON number when it fits in `i64`, and as a
/// decimal string otherwise.
pub fn serialize_bigint<S: Serializer>(c: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    match c.to_i64() {
        Some(v) => s.serialize_i64(v),
        None => s.collect_str(c),
    }
}

pub fn deserialize_bigint<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Repr {
        Int(i64),
        Str(String),
    }
    match Repr::deserialize(d)? {
        Repr::Int(v) => Ok(BigInt::from(v)),
        Repr::Str(s) => s.parse().map_err(de::Error::custom),
    }
}

struct BigIntRef<'a>(&'a BigInt);

impl Serialize for BigIntRef<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        serialize_bigint(self.0, s)
    }
}

struct BigIntOwned(BigInt);

impl<'de> Deserialize<'de> for BigIntOwned {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        deserialize_bigint(d).map(BigIntOwned)
    }
}

/// JSON form: an object mapping exponent (as a string key) to coefficient.
impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.coeffs.len()))?;
        for (e, c) in &self.coeffs {
            map.serialize_entry(&e.to_string(), &BigIntRef(c))?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct PolyVisitor;
        impl<'de> Visitor<'de> for PolyVisitor {
            type Value = LaurentPoly;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "an object mapping exponents to coefficients")
            }
            fn visit_map<A: MapAccess<'de>>(self, mut map: A) -> Result<LaurentPoly, A::Error> {
                let mut p = LaurentPoly::zero();
                while let Some((k, BigIntOwned(c))) = map.next_entry::<String, BigIntOwned>()? {
                    let e: i64 = k.parse().map_err(de::Error::custom)?;
                    p.add_term(e, c);
                }
                Ok(p)
            }
        }
        d.deserialize_map(PolyVisitor)
    }
}

type PairMemo = RwLock<HashMap<(AffineElement, AffineElement), LaurentPoly>>;

/// Memoized R-polynomials `R_{y,x}` of the Hecke algebra of `(W_p, S_p)`.
#[derive(Debug)]
pub struct RTable {
    group: Arc<AffineWeylGroup>,
    memo: PairMemo,
}

impl RTable {
    pub fn new(group: Arc<AffineWeylGroup>) -> Self {
        RTable { group, memo: RwLock::new(HashMap::new()) }
    }

    /// For `s x < x`: `R_{y,x} = R_{sy,sx}` if `s y < y`, and
    /// `(u - 1) R_{y,sx} + u R_{sy,sx}` otherwise.
    pub fn r_polynomial(&self, y: &AffineElement, x: &AffineElement) -> LaurentPoly {
        if y == x {
            return LaurentPoly::one();
        }
        let g = &self.group;
        if !g.bruhat_leq(y, x) {
            return LaurentPoly::zero();
        }
        let key = (y.clone(), x.clone());
        if let Some(p) = self.memo.read().expect("r memo").get(&key) {
            return p.clone();
        }
        let s = g.left_descent(x).expect("y < x so x is not the identity");
        let sx = g.generator_times(s, x);
        let sy = g.generator_times(s, y);
        let result = if g.length(&sy) < g.length(y) {
            self.r_polynomial(&sy, &sx)
        } else {
            let u_minus_one = &LaurentPoly::u() - &LaurentPoly::one();
            &(&u_minus_one * &self.r_polynomial(y, &sx)) + &self.r_polynomial(&sy, &sx).shift(1)
        };
        self.memo.write().expect("r memo").insert(key, result.clone());
        result
    }
}

/// `R_{y,x}` without keeping a table around.
pub fn r_polynomial(group: &Arc<AffineWeylGroup>, y: &AffineElement, x: &AffineElement) -> LaurentPoly {
    RTable::new(Arc::clone(group)).r_polynomial(y, x)
}

/// `(z, l(z), mu(z, x))` for the `z` below one `x`.
type MuList = Arc<Vec<(AffineElement, usize, BigInt)>>;

/// Memo table of Kazhdan-Lusztig polynomials `P_{y,x}` for one `W_p`.
///
/// Lookups and insertions may race between threads; the same key always
/// maps to the same polynomial, so a duplicate insertion is harmless.
#[derive(Debug)]
pub struct KlTable {
    group: Arc<AffineWeylGroup>,
    memo: PairMemo,
    mu_lists: RwLock<HashMap<AffineElement, MuList>>,
}

impl KlTable {
    pub fn new(group: Arc<AffineWeylGroup>) -> Self {
        KlTable { group, memo: RwLock::new(HashMap::new()), mu_lists: RwLock::new(HashMap::new()) }
    }

    pub fn group(&self) -> &Arc<AffineWeylGroup> {
        &self.group
    }

    /// Number of cached pairs.
    pub fn len(&self) -> usize {
        self.memo.read().expect("kl memo").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// The leading coefficient `mu(z, x)`: the coefficient of
    /// `u^{(l(x) - l(z) - 1)/2}` in `P_{z,x}`, zero unless the length
    /// difference is odd.
    pub fn mu(&self, z: &AffineElement, x: &AffineElement) -> BigInt {
        let (lz, lx) = (self.group.length(z), self.group.length(x));
        if lz >= lx || (lx - lz) % 2 == 0 {
            return BigInt::zero();
        }
        self.kl_polynomial(z, x).coeff(((lx - lz - 1) / 2) as i64)
    }

    /// `(z, l(z), mu(z, x))` for every `z < x` with `mu(z, x) != 0`.
    fn mu_list(&self, x: &AffineElement) -> MuList {
        if let Some(v) = self.mu_lists.read().expect("mu memo").get(x) {
            return Arc::clone(v);
        }
        let lx = self.group.length(x);
        let list: Vec<_> = self
            .group
            .interval_below(x)
            .iter()
            .filter(|z| *z != x)
            .filter_map(|z| {
                let lz = self.group.length(z);
                if (lx - lz).is_multiple_of(2) {
                    return None;
                }
                let m = self.mu(z, x);
                (!m.is_zero()).then(|| (z.clone(), lz, m))
            })
            .collect();
        let list = Arc::new(list);
        self.mu_lists.write().expect("mu memo").insert(x.clone(), Arc::clone(&list));
        list
    }

    /// `P_{y,x}` by the descent recursion: with `s x < x` and `v = s x`,
    ///
    /// `P_{y,x} = u^{1-c} P_{sy,v} + u^c P_{y,v} - sum_{z < v, sz < z} mu(z,v) u^{(l(x)-l(z))/2} P_{y,z}`
    ///
    /// where `c = 1` if `s y < y` and `c = 0` otherwise.
    pub fn kl_polynomial(&self, y: &AffineElement, x: &AffineElement) -> LaurentPoly {
        if y == x {
            return LaurentPoly::one();
        }
        let g = &self.group;
        let (ly, lx) = (g.length(y), g.length(x));
        if ly >= lx || !g.bruhat_leq(y, x) {
            return LaurentPoly::zero();
        }
        let key = (y.clone(), x.clone());
        if let Some(p) = self.memo.read().expect("kl memo").get(&key) {
            return p.clone();
        }

        let s = g.left_descent(x).expect("x is not the identity");
        let v = g.generator_times(s, x);
        let sy = g.generator_times(s, y);
        let c = g.length(&sy) < ly;
        let mut result = if c {
            &self.kl_polynomial(&sy, &v) + &self.kl_polynomial(y, &v).shift(1)
        } else {
            &self.kl_polynomial(&sy, &v).shift(1) + &self.kl_polynomial(y, &v)
        };
        for (z, lz, m) in self.mu_list(&v).iter() {
            if *lz < ly || g.length(&g.generator_times(s, z)) > *lz {
                continue;
            }
            let pyz = self.kl_polynomial(y, z);
            if pyz.is_zero() {
                continue;
            }
            result = &result - &pyz.scale(m).shift(((lx - lz) / 2) as i64);
        }

        assert_kl_invariants(&result, ly, lx);
        self.memo.write().expect("kl memo").insert(key, result.clone());
        result
    }
}

/// Constant term 1, degree at most `(l(x) - l(y) - 1)/2`, nonnegative
/// coefficients. A failure here is a bug, not a property of the input.
fn assert_kl_invariants(p: &LaurentPoly, ly: usize, lx: usize) {
    assert!(p.coeff(0).is_one(), "KL polynomial with constant term != 1: {p}");
    assert!(p.is_polynomial(), "KL polynomial with negative exponent: {p}");
    let bound = ((lx - ly - 1) / 2) as i64;
    assert!(p.degree().unwrap_or(0) <= bound, "KL polynomial {p} exceeds degree bound {bound}");
    assert!(p.terms().all(|(_, c)| !c.is_negative()), "KL polynomial with negative coefficient: {p}");
}
