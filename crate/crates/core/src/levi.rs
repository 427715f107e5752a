//! Levi subsystems spanned by subsets of the simple roots, the orders
//! `<=` and `<=_H` on weights, cosets of the Levi root lattice, and
//! truncation of characters to a coset.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::charring::{subsystem_weyl_character, weyl_character, FormalCharacter};
use crate::error::{Error, Result};
use crate::rootsys::{CartanType, Family, RootSubsystem, RootSystem};
use crate::weight::Weight;

/// A Levi subsystem `Φ_H` of a root system, given by the simple roots it
/// keeps.
#[derive(Debug, Clone)]
pub struct LeviDatum {
    parent: Arc<RootSystem>,
    sub: RootSubsystem,
    components: Vec<(CartanType, Vec<usize>)>,
}

impl LeviDatum {
    /// `kept` holds 0-based simple-root indices.
    pub fn new(parent: Arc<RootSystem>, kept: &[usize]) -> Result<Self> {
        let sub = parent.subsystem(kept)?;
        let components = connected_components(&parent, &sub.simple)
            .into_iter()
            .map(|c| (component_type(&parent, &c, sub_roots_in(&parent, &sub, &c)), c))
            .collect();
        Ok(LeviDatum { parent, sub, components })
    }

    pub fn full(parent: Arc<RootSystem>) -> Self {
        let all: Vec<usize> = (0..parent.rank()).collect();
        LeviDatum::new(parent, &all).expect("all indices valid")
    }

    pub fn parent(&self) -> &RootSystem {
        &self.parent
    }

    pub fn subsystem(&self) -> &RootSubsystem {
        &self.sub
    }

    /// 0-based indices of the kept simple roots.
    pub fn simple(&self) -> &[usize] {
        &self.sub.simple
    }

    /// Irreducible components with their types and 0-based simple indices.
    pub fn components(&self) -> &[(CartanType, Vec<usize>)] {
        &self.components
    }

    /// Product of the component types, e.g. `A1xA1`; `1` for the empty set.
    pub fn type_label(&self) -> String {
        if self.components.is_empty() {
            return "1".to_string();
        }
        self.components.iter().map(|(t, _)| t.to_string()).collect::<Vec<_>>().join("x")
    }

    /// `mu - lambda ∈ Z⁺Φ_H⁺`.
    pub fn leq(&self, lambda: &Weight, mu: &Weight) -> bool {
        match self.parent.root_coords(&(mu - lambda)) {
            Some(c) => c.iter().enumerate().all(|(i, &x)| x >= 0 && (x == 0 || self.sub.simple.contains(&i))),
            None => false,
        }
    }

    /// `gamma ∈ omega + ZΦ_H`.
    pub fn in_coset(&self, omega: &Weight, gamma: &Weight) -> bool {
        match self.parent.root_coords(&(gamma - omega)) {
            Some(c) => c.iter().enumerate().all(|(i, &x)| x == 0 || self.sub.simple.contains(&i)),
            None => false,
        }
    }

    /// Dominant for the kept simple roots.
    pub fn is_levi_dominant(&self, lambda: &Weight) -> bool {
        self.sub.simple.iter().all(|&i| lambda.coords()[i] >= 0)
    }
}

impl fmt::Display for LeviDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kept: Vec<String> = self.sub.simple.iter().map(|i| (i + 1).to_string()).collect();
        write!(f, "{} ⊃ {} (J = {{{}}})", self.parent.cartan_type(), self.type_label(), kept.join(","))
    }
}

fn connected_components(rs: &RootSystem, simple: &[usize]) -> Vec<Vec<usize>> {
    let a = rs.cartan_matrix();
    let mut left: BTreeSet<usize> = simple.iter().copied().collect();
    let mut out = Vec::new();
    while let Some(&start) = left.iter().next() {
        left.remove(&start);
        let mut comp = vec![start];
        let mut k = 0;
        while k < comp.len() {
            let i = comp[k];
            let next: Vec<usize> = left.iter().copied().filter(|&j| a[i][j] != 0).collect();
            for j in next {
                left.remove(&j);
                comp.push(j);
            }
            k += 1;
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

fn sub_roots_in(rs: &RootSystem, sub: &RootSubsystem, comp: &[usize]) -> usize {
    sub.positive
        .iter()
        .filter(|&&r| rs.root(r).simple_coords.iter().enumerate().all(|(j, &c)| c == 0 || comp.contains(&j)))
        .count()
}

/// Type of an irreducible component from its rank, root count and the
/// lengths of its simple roots.
fn component_type(rs: &RootSystem, comp: &[usize], roots: usize) -> CartanType {
    let r = comp.len();
    let a = rs.cartan_matrix();
    let max_bond =
        comp.iter().flat_map(|&i| comp.iter().map(move |&j| a[i][j] * a[j][i])).filter(|&b| b < 4).max().unwrap_or(0);
    let ct = |f, n| CartanType::new(f, n).expect("valid component type");
    if max_bond <= 1 {
        return match roots {
            n if n == r * (r + 1) / 2 => ct(Family::A, r),
            36 if r == 6 => ct(Family::E, 6),
            63 if r == 7 => ct(Family::E, 7),
            120 if r == 8 => ct(Family::E, 8),
            _ => ct(Family::D, r),
        };
    }
    if max_bond == 3 {
        return ct(Family::G, 2);
    }
    if r == 4 && roots == 24 {
        return ct(Family::F, 4);
    }
    let d = rs.simple_half_norms();
    let long = comp.iter().map(|&i| d[i]).max().unwrap_or(1);
    let n_long = comp.iter().filter(|&&i| d[i] == long).count();
    let n_short = r - n_long;
    if n_long > n_short || (n_long == n_short && rs.cartan_type().family() == Family::B) {
        ct(Family::B, r)
    } else {
        ct(Family::C, r)
    }
}

/// Which order a [`WeightPoset`] carries.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PosetOrder {
    /// `<=`: differences in the cone of all positive roots.
    Dominance,
    /// `<=_H` for the Levi subsystem keeping these 0-based simple indices.
    Levi(Vec<usize>),
}

/// A finite set of weights with one of the two orders.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightPoset {
    pub elements: BTreeSet<Weight>,
    pub order: PosetOrder,
}

impl WeightPoset {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, w: &Weight) -> bool {
        self.elements.contains(w)
    }

    /// Maximal elements under the dominance order.
    pub fn maximal(&self, rs: &RootSystem) -> Vec<Weight> {
        self.elements
            .iter()
            .filter(|a| !self.elements.iter().any(|b| b != *a && rs.dominance_leq(a, b)))
            .cloned()
            .collect()
    }

    /// Downward closed in `(X⁺, <=)`.
    pub fn is_ideal(&self, rs: &RootSystem) -> bool {
        self.elements.iter().all(|m| {
            rs.positive_roots().iter().all(|r| {
                let v = m - &r.weight;
                !rs.is_dominant(&v) || self.elements.contains(&v)
            })
        })
    }
}

/// `lambda <= mu`, or `lambda <=_H mu` when a Levi datum is given.
pub fn order_leq(rs: &RootSystem, levi: Option<&LeviDatum>, lambda: &Weight, mu: &Weight) -> bool {
    match levi {
        Some(h) => h.leq(lambda, mu),
        None => rs.dominance_leq(lambda, mu),
    }
}

/// The ideal of `(X⁺, <=)` generated by dominant weights `gens`.
pub fn ideal_generated(rs: &RootSystem, gens: &[Weight]) -> Result<WeightPoset> {
    let mut elements = BTreeSet::new();
    for f in gens {
        elements.extend(rs.dominant_weights_below(f)?);
    }
    Ok(WeightPoset { elements, order: PosetOrder::Dominance })
}

/// Result of intersecting a poset of dominant weights with a coset
/// `omega + ZΦ_H`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CosetMembers {
    pub members: WeightPoset,
    /// Upward closed inside `(Γ, <=)`. Holds when `Γ` is generated by
    /// weights of the coset.
    pub coideal_in_gamma: bool,
    /// Downward closed among `H`-dominant weights under `<=_H`. Holds
    /// whenever `Γ` is an ideal.
    pub ideal_in_levi: bool,
}

pub fn coset_members(h: &LeviDatum, omega: &Weight, gamma: &WeightPoset) -> Result<CosetMembers> {
    let rs = h.parent();
    rs.check_rank(omega)?;
    let elements: BTreeSet<Weight> = gamma.elements.iter().filter(|g| h.in_coset(omega, g)).cloned().collect();
    let coideal_in_gamma =
        elements.iter().all(|m| gamma.elements.iter().all(|g| !rs.dominance_leq(m, g) || elements.contains(g)));
    let ideal_in_levi = elements.iter().all(|m| {
        h.subsystem().positive.iter().all(|&r| {
            let v = m - &rs.root(r).weight;
            !h.is_levi_dominant(&v) || elements.contains(&v)
        })
    });
    Ok(CosetMembers {
        members: WeightPoset { elements, order: PosetOrder::Levi(h.simple().to_vec()) },
        coideal_in_gamma,
        ideal_in_levi,
    })
}

/// Keeps the weight spaces in `omega + ZΦ_H`.
pub fn truncate_character(chi: &FormalCharacter, h: &LeviDatum, omega: &Weight) -> FormalCharacter {
    chi.filter(|w| h.in_coset(omega, w))
}

/// Weyl character of the Levi subsystem, in the ambient weight lattice.
pub fn levi_weyl_character(h: &LeviDatum, lambda: &Weight) -> Result<FormalCharacter> {
    subsystem_weyl_character(h.parent(), h.subsystem(), lambda)
}

/// Whether truncating `ch Δ(lambda)` to the coset of `lambda` gives the
/// Levi Weyl character of `lambda`.
pub fn donkin_check(h: &LeviDatum, lambda: &Weight) -> Result<bool> {
    let rs = h.parent();
    rs.check_rank(lambda)?;
    if !rs.is_dominant(lambda) {
        return Err(Error::NotDominant(lambda.clone()));
    }
    let full = weyl_character(rs, lambda)?;
    Ok(truncate_character(&full, h, lambda) == levi_weyl_character(h, lambda)?)
}
