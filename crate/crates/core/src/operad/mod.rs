//! The categorical operad `Y` whose algebras are symmetric monoidal categories.
//!
//! An object of `Y(n)` is a [`ZObject`] of arity `n` together with a
//! permutation in `Σ_n` saying which marked slot each of the `n` variables is
//! placed in: variable `v` goes to the marked slot `σ(v)`. Between any two
//! objects of the same arity there is exactly one morphism.
//!
//! With this placement convention the right action is `(z, σ)·s = (z, σ∘s)`
//! and evaluation satisfies `(y·s)(s⁻¹x) = y(x)`.

pub mod laws;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::shapes::{Paren, ZObject};
use crate::symgrp::Permutation;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct YObject {
    z: ZObject,
    sigma: Permutation,
}

impl YObject {
    pub fn new(z: ZObject, sigma: Permutation) -> Result<Self> {
        if z.arity() != sigma.degree() {
            return Err(Error::ArityMismatch {
                expected: z.arity(),
                found: sigma.degree(),
            });
        }
        Ok(YObject { z, sigma })
    }

    /// A shape with the identity placement.
    pub fn plain(z: ZObject) -> Self {
        let sigma = Permutation::identity(z.arity());
        YObject { z, sigma }
    }

    pub fn z(&self) -> &ZObject {
        &self.z
    }

    pub fn sigma(&self) -> &Permutation {
        &self.sigma
    }

    pub fn arity(&self) -> usize {
        self.z.arity()
    }

    pub fn width(&self) -> usize {
        self.z.width()
    }

    /// The generator `0 ∈ Y(0)`, acting as the unit object.
    pub fn zero() -> Self {
        YObject::plain(ZObject::unit())
    }

    /// The identity `1 ∈ Y(1)`.
    pub fn one() -> Self {
        YObject::plain(ZObject::generator())
    }

    /// The generator `m ∈ Y(2)`, acting as the monoidal product.
    pub fn m() -> Self {
        YObject::plain(ZObject::fully_marked(Paren::node(Paren::Leaf, Paren::Leaf)))
    }

    /// Operadic composition `γ(b; y_1, …, y_n)`.
    pub fn gamma(&self, parts: &[YObject]) -> Result<YObject> {
        if parts.len() != self.arity() {
            return Err(Error::ArityMismatch {
                expected: self.arity(),
                found: parts.len(),
            });
        }
        // variable p of `self` sits in marked slot σ(p), so that slot receives part p
        let placed = self.sigma.act(parts)?;
        let shapes: Vec<ZObject> = placed.iter().map(|y| y.z.clone()).collect();
        let z = self.z.gamma(&shapes)?;
        let arities: Vec<usize> = parts.iter().map(YObject::arity).collect();
        let inner = Permutation::block_sum(parts.iter().map(|y| &y.sigma));
        let sigma = self.sigma.block_perm(&arities)?.compose(&inner)?;
        Ok(YObject { z, sigma })
    }

    /// Right action `y·s`.
    pub fn act(&self, s: &Permutation) -> Result<YObject> {
        Ok(YObject {
            z: self.z.clone(),
            sigma: self.sigma.compose(s)?,
        })
    }

    /// Every object of `Y(n)` whose shape has width at most `max_width`.
    pub fn enumerate(n: usize, max_width: usize) -> Vec<YObject> {
        let perms: Vec<Permutation> = Permutation::all(n).collect();
        ZObject::enumerate_up_to(n, max_width)
            .into_iter()
            .flat_map(|z| {
                perms.iter().map(move |s| YObject {
                    z: z.clone(),
                    sigma: s.clone(),
                })
            })
            .collect()
    }
}

impl fmt::Debug for YObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}·{:?}", self.z, self.sigma)
    }
}

impl<'de> Deserialize<'de> for YObject {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            z: ZObject,
            sigma: Permutation,
        }
        let repr = Repr::deserialize(deserializer)?;
        YObject::new(repr.z, repr.sigma).map_err(serde::de::Error::custom)
    }
}

/// The unique morphism between two objects of `Y(n)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct YMorphism {
    source: YObject,
    target: YObject,
}

impl YMorphism {
    pub fn new(source: YObject, target: YObject) -> Result<Self> {
        if source.arity() != target.arity() {
            return Err(Error::ArityMismatch {
                expected: source.arity(),
                found: target.arity(),
            });
        }
        Ok(YMorphism { source, target })
    }

    pub fn source(&self) -> &YObject {
        &self.source
    }

    pub fn target(&self) -> &YObject {
        &self.target
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &YMorphism) -> Result<YMorphism> {
        if first.target != self.source {
            return Err(Error::EndpointMismatch("Y-morphism composition".into()));
        }
        Ok(YMorphism {
            source: first.source.clone(),
            target: self.target.clone(),
        })
    }

    pub fn inverse(&self) -> YMorphism {
        YMorphism {
            source: self.target.clone(),
            target: self.source.clone(),
        }
    }
}

/// `κ_0 = 0`, `κ_1 = 1`, `κ_n = γ(m; κ_{n−1}, 1)`: left-nested products.
pub fn default_kappa(n: usize) -> YObject {
    match Paren::left_nested(n) {
        None => YObject::zero(),
        Some(tree) => YObject::plain(ZObject::fully_marked(tree)),
    }
}

/// `κ_0 = 0`, `κ_1 = 1`, `κ_n = γ(m; 1, κ_{n−1})`: right-nested products.
pub fn right_nested_kappa(n: usize) -> YObject {
    match Paren::right_nested(n) {
        None => YObject::zero(),
        Some(tree) => YObject::plain(ZObject::fully_marked(tree)),
    }
}

/// A choice, for every tuple of objects, of an object of `Y(n)` saying how
/// to combine the tuple. No compatibility between choices is required.
pub trait KappaFamily<O>: Send + Sync {
    fn choose(&self, xs: &[O]) -> YObject;

    fn name(&self) -> String;
}

impl<O, K: KappaFamily<O> + ?Sized> KappaFamily<O> for Arc<K> {
    fn choose(&self, xs: &[O]) -> YObject {
        (**self).choose(xs)
    }

    fn name(&self) -> String {
        (**self).name()
    }
}

impl<O, K: KappaFamily<O> + ?Sized> KappaFamily<O> for Box<K> {
    fn choose(&self, xs: &[O]) -> YObject {
        (**self).choose(xs)
    }

    fn name(&self) -> String {
        (**self).name()
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct DefaultKappa;

impl<O> KappaFamily<O> for DefaultKappa {
    fn choose(&self, xs: &[O]) -> YObject {
        default_kappa(xs.len())
    }

    fn name(&self) -> String {
        "default".into()
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct RightNestedKappa;

impl<O> KappaFamily<O> for RightNestedKappa {
    fn choose(&self, xs: &[O]) -> YObject {
        right_nested_kappa(xs.len())
    }

    fn name(&self) -> String {
        "right-nested".into()
    }
}

/// A constant family given by a table of arities; arities missing from the
/// table fall back to the left-nested choice.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TableKappa {
    table: BTreeMap<usize, YObject>,
}

impl TableKappa {
    pub fn new(table: BTreeMap<usize, YObject>) -> Result<Self> {
        for (&n, y) in &table {
            if y.arity() != n {
                return Err(Error::ArityMismatch {
                    expected: n,
                    found: y.arity(),
                });
            }
        }
        Ok(TableKappa { table })
    }

    /// Parses `{"2": {"z": …, "sigma": […]}, …}`.
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: BTreeMap<String, YObject> =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let table = raw
            .into_iter()
            .map(|(k, v)| {
                k.parse::<usize>()
                    .map(|n| (n, v))
                    .map_err(|e| Error::Parse(format!("arity key {k:?}: {e}")))
            })
            .collect::<Result<_>>()?;
        TableKappa::new(table)
    }
}

impl<O> KappaFamily<O> for TableKappa {
    fn choose(&self, xs: &[O]) -> YObject {
        self.table
            .get(&xs.len())
            .cloned()
            .unwrap_or_else(|| default_kappa(xs.len()))
    }

    fn name(&self) -> String {
        "table".into()
    }
}

/// A deliberately irregular family on objects of the free symmetric monoidal
/// category `H`, whose objects are [`ZObject`]s.
///
/// For `x = ((a_1,R_1), …, (a_n,R_n))` with `a_i` of width `j_i`, the shape
/// is `δ = γ(β_n; a_1, …, a_n)` for a fixed `β_n ∈ Z(n)`, the marked slots
/// are `S = {1, j_1+1, …, j_1+⋯+j_{n−1}+1}` (the first leaf of each inserted
/// tree), and the placement transposes the first two variables when `n` is
/// odd and the last two when `n` is even.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ExoticKappa;

impl ExoticKappa {
    /// The fixed `β_n`: a right-nested tree on `n` marked leaves followed by
    /// one unmarked leaf, or `((1·1), ∅)` when `n = 0`.
    pub fn beta(n: usize) -> ZObject {
        match Paren::right_nested(n) {
            None => ZObject::new(Paren::node(Paren::Leaf, Paren::Leaf), vec![])
                .expect("valid unit shape"),
            Some(tree) => ZObject::new(Paren::node(tree, Paren::Leaf), (1..=n).collect())
                .expect("marks inside the tree"),
        }
    }

    pub fn placement(n: usize) -> Permutation {
        match n {
            0 | 1 => Permutation::identity(n),
            n if n % 2 == 1 => Permutation::transposition(n, 1, 2).expect("n ≥ 2"),
            n => Permutation::transposition(n, n - 1, n).expect("n ≥ 2"),
        }
    }

    /// `S` for the given widths, 1-based.
    pub fn slots(widths: &[usize]) -> Vec<usize> {
        widths
            .iter()
            .scan(1, |next, &w| {
                let here = *next;
                *next += w;
                Some(here)
            })
            .collect()
    }
}

impl KappaFamily<ZObject> for ExoticKappa {
    fn choose(&self, xs: &[ZObject]) -> YObject {
        let n = xs.len();
        let parts: Vec<ZObject> = xs
            .iter()
            .map(|x| ZObject::fully_marked(x.tree().clone()))
            .collect();
        let delta = Self::beta(n).gamma(&parts).expect("β_n has arity n");
        let widths: Vec<usize> = xs.iter().map(ZObject::width).collect();
        let z = delta
            .with_marks(Self::slots(&widths))
            .expect("first leaves of the inserted trees");
        YObject::new(z, Self::placement(n)).expect("placement has degree n")
    }

    fn name(&self) -> String {
        "exotic".into()
    }
}
