//! The free permutative category `L M` on a multicategory.
//!
//! Objects are finite lists of objects of `M`. A morphism `x⃗ → y⃗` is a
//! function `f: {1..j} → {1..n}` together with one multimorphism
//! `φ_s: ⟨x_r⟩_{f(r)=s} → y_s` per target slot, each fiber read in
//! increasing order. The tensor product is concatenation and the unit is
//! the empty list; the associator and unitors are identities.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::functor::{LaxFunctor, Multifunctor};
use crate::multicat::{FiniteMulticategory, Multicategory};
use crate::smc::{FiniteSmc, Smc};
use crate::symgrp::Permutation;

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LObject<O>(pub Vec<O>);

impl<O> LObject<O> {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl<O: fmt::Debug> fmt::Debug for LObject<O> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.0).finish()
    }
}

/// Every list of at most `max_len` entries drawn from `objects`, shortest
/// first and lexicographic within a length.
pub fn lists<O: Clone>(objects: &[O], max_len: usize) -> Vec<LObject<O>> {
    let mut out = vec![LObject(Vec::new())];
    let mut layer = vec![Vec::new()];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|xs: &Vec<O>| {
                objects.iter().map(move |a| {
                    let mut next = xs.clone();
                    next.push(a.clone());
                    next
                })
            })
            .collect();
        out.extend(layer.iter().cloned().map(LObject));
    }
    out
}

/// `(f, ⟨φ_s⟩)`. `f` is stored 0-based and written 1-based.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LMorphism<A> {
    pub(crate) f: Vec<usize>,
    pub(crate) components: Vec<A>,
}

impl<A> LMorphism<A> {
    /// `f` is 0-based; every value must index a component.
    pub fn new(f: Vec<usize>, components: Vec<A>) -> Result<Self> {
        if let Some(&bad) = f.iter().find(|&&s| s >= components.len()) {
            return Err(Error::Parse(format!(
                "f sends an index to slot {} of {}",
                bad + 1,
                components.len()
            )));
        }
        Ok(LMorphism { f, components })
    }

    pub fn f(&self) -> &[usize] {
        &self.f
    }

    pub fn components(&self) -> &[A] {
        &self.components
    }

    pub fn source_len(&self) -> usize {
        self.f.len()
    }

    pub fn target_len(&self) -> usize {
        self.components.len()
    }

    /// `f⁻¹(s)` for every `s`, each in increasing order.
    pub fn fibers(&self) -> Vec<Vec<usize>> {
        fibers(&self.f, self.components.len())
    }

    pub fn is_bijection(&self) -> bool {
        self.f.len() == self.components.len() && self.fibers().iter().all(|r| r.len() == 1)
    }
}

fn fibers(f: &[usize], n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new(); n];
    for (r, &s) in f.iter().enumerate() {
        out[s].push(r);
    }
    out
}

impl<A: fmt::Debug> fmt::Debug for LMorphism<A> {
    fn fmt(&self, fmt: &mut fmt::Formatter<'_>) -> fmt::Result {
        let images: Vec<usize> = self.f.iter().map(|s| s + 1).collect();
        fmt.debug_struct("LMorphism")
            .field("f", &images)
            .field("components", &self.components)
            .finish()
    }
}

#[derive(Serialize, Deserialize)]
struct Repr<A> {
    f: Vec<usize>,
    components: Vec<A>,
}

impl<A: Serialize + Clone> Serialize for LMorphism<A> {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        Repr {
            f: self.f.iter().map(|s| s + 1).collect(),
            components: self.components.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de, A: Deserialize<'de>> Deserialize<'de> for LMorphism<A> {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let r = Repr::<A>::deserialize(deserializer)?;
        let f =
            r.f.into_iter()
                .map(|s| s.checked_sub(1).ok_or("f uses 1-based slots"))
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(serde::de::Error::custom)?;
        LMorphism::new(f, r.components).map_err(serde::de::Error::custom)
    }
}

/// `L M` for a borrowed multicategory.
pub struct FreePermutative<'a, M> {
    m: &'a M,
}

impl<M> Clone for FreePermutative<'_, M> {
    fn clone(&self) -> Self {
        *self
    }
}

impl<M> Copy for FreePermutative<'_, M> {}

impl<'a, M: Multicategory> FreePermutative<'a, M> {
    pub fn new(m: &'a M) -> Self {
        FreePermutative { m }
    }

    pub fn multicat(&self) -> &'a M {
        self.m
    }

    /// Builds a morphism after checking each component against `M`.
    pub fn morphism(
        &self,
        f: Vec<usize>,
        components: Vec<M::Arrow>,
    ) -> Result<LMorphism<M::Arrow>> {
        let g = LMorphism::new(f, components)?;
        self.validate(&g)?;
        Ok(g)
    }

    pub fn validate(&self, g: &LMorphism<M::Arrow>) -> Result<()> {
        for (s, (fiber, phi)) in g.fibers().iter().zip(&g.components).enumerate() {
            self.m.validate(phi)?;
            let arity = self.m.sources(phi).len();
            if arity != fiber.len() {
                return Err(Error::EndpointMismatch(format!(
                    "component {} has {arity} sources over a fiber of {}",
                    s + 1,
                    fiber.len()
                )));
            }
        }
        Ok(())
    }

    /// The `σ` whose action turns sources listed chunk by chunk, as in
    /// `order`, into sources listed in increasing index order.
    fn unchunk(order: &[usize]) -> Permutation {
        let mut position = vec![0; order.len()];
        let mut sorted: Vec<(usize, usize)> = order.iter().copied().zip(0..).collect();
        sorted.sort_unstable();
        for (i, &(_, k)) in sorted.iter().enumerate() {
            position[i] = k;
        }
        Permutation::from_zero_based(position).expect("positions form a bijection")
    }

    /// A morphism whose components are identities and whose function is
    /// the bijection `f`.
    fn rearrangement(&self, f: Vec<usize>, target: &[M::Obj]) -> LMorphism<M::Arrow> {
        LMorphism {
            f,
            components: target.iter().map(|y| self.m.identity(y)).collect(),
        }
    }
}

impl<M: Multicategory> Smc for FreePermutative<'_, M> {
    type Obj = LObject<M::Obj>;
    type Mor = LMorphism<M::Arrow>;

    fn dom(&self, g: &Self::Mor) -> Self::Obj {
        let mut x: Vec<Option<M::Obj>> = vec![None; g.f.len()];
        for (fiber, phi) in g.fibers().iter().zip(&g.components) {
            for (&r, a) in fiber.iter().zip(self.m.sources(phi)) {
                x[r] = Some(a);
            }
        }
        LObject(
            x.into_iter()
                .map(|a| a.expect("component arity matches fiber"))
                .collect(),
        )
    }

    fn cod(&self, g: &Self::Mor) -> Self::Obj {
        LObject(g.components.iter().map(|phi| self.m.target(phi)).collect())
    }

    fn id(&self, a: &Self::Obj) -> Self::Mor {
        self.rearrangement((0..a.len()).collect(), &a.0)
    }

    fn compose(&self, g: &Self::Mor, f: &Self::Mor) -> Result<Self::Mor> {
        let (middle, start) = (self.cod(f), self.dom(g));
        if middle != start {
            return Err(Error::EndpointMismatch(format!(
                "cannot compose out of {start:?} after into {middle:?}"
            )));
        }
        let f_fibers = f.fibers();
        let g_fibers = g.fibers();
        let components = g_fibers
            .iter()
            .zip(&g.components)
            .map(|(over, psi)| {
                let inner: Vec<M::Arrow> = over.iter().map(|&s| f.components[s].clone()).collect();
                let order: Vec<usize> = over
                    .iter()
                    .flat_map(|&s| f_fibers[s].iter().copied())
                    .collect();
                let chi = self.m.compose(psi, &inner)?;
                let sigma = Self::unchunk(&order);
                if sigma.is_identity() {
                    Ok(chi)
                } else {
                    self.m.act(&chi, &sigma)
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(LMorphism {
            f: f.f.iter().map(|&s| g.f[s]).collect(),
            components,
        })
    }

    fn unit(&self) -> Self::Obj {
        LObject(Vec::new())
    }

    fn tensor(&self, a: &Self::Obj, b: &Self::Obj) -> Self::Obj {
        LObject(a.0.iter().chain(&b.0).cloned().collect())
    }

    fn tensor_mor(&self, f: &Self::Mor, g: &Self::Mor) -> Self::Mor {
        let shift = f.components.len();
        LMorphism {
            f: f.f
                .iter()
                .copied()
                .chain(g.f.iter().map(|s| s + shift))
                .collect(),
            components: f.components.iter().chain(&g.components).cloned().collect(),
        }
    }

    fn associator(&self, a: &Self::Obj, b: &Self::Obj, c: &Self::Obj) -> Self::Mor {
        self.id(&self.tensor(&self.tensor(a, b), c))
    }

    fn associator_inv(&self, a: &Self::Obj, b: &Self::Obj, c: &Self::Obj) -> Self::Mor {
        self.associator(a, b, c)
    }

    fn braid(&self, a: &Self::Obj, b: &Self::Obj) -> Self::Mor {
        let (j, n) = (a.len(), b.len());
        let f = (0..j).map(|r| r + n).chain(0..n).collect();
        self.rearrangement(f, &self.tensor(b, a).0)
    }

    fn right_unitor(&self, a: &Self::Obj) -> Self::Mor {
        self.id(a)
    }

    fn right_unitor_inv(&self, a: &Self::Obj) -> Self::Mor {
        self.id(a)
    }
}

/// Functions `{0..j} → {0..n}` in lexicographic order.
fn functions(j: usize, n: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = if j == 0 {
        1
    } else {
        n.checked_pow(j as u32).unwrap_or(0)
    };
    (0..total).map(move |mut code| {
        let mut f = vec![0; j];
        for slot in f.iter_mut().rev() {
            *slot = code % n;
            code /= n;
        }
        f
    })
}

impl<M: FiniteMulticategory> FreePermutative<'_, M> {
    fn fiber_sizes(&self, a: &[M::Obj], b: &[M::Obj], f: &[usize]) -> Vec<(Vec<M::Obj>, u64)> {
        fibers(f, b.len())
            .into_iter()
            .zip(b)
            .map(|(fiber, y)| {
                let xs: Vec<M::Obj> = fiber.iter().map(|&r| a[r].clone()).collect();
                let len = self.m.hom_len(&xs, y);
                (xs, len)
            })
            .collect()
    }
}

impl<M: FiniteMulticategory> FiniteSmc for FreePermutative<'_, M> {
    fn hom(&self, a: &Self::Obj, b: &Self::Obj) -> Vec<Self::Mor> {
        (0..self.hom_len(a, b))
            .map(|i| self.hom_nth(a, b, i).expect("index below the count"))
            .collect()
    }

    fn hom_len(&self, a: &Self::Obj, b: &Self::Obj) -> u64 {
        functions(a.len(), b.len())
            .map(|f| {
                self.fiber_sizes(&a.0, &b.0, &f)
                    .iter()
                    .map(|(_, k)| k)
                    .product::<u64>()
            })
            .sum()
    }

    fn hom_nth(&self, a: &Self::Obj, b: &Self::Obj, mut i: u64) -> Option<Self::Mor> {
        for f in functions(a.len(), b.len()) {
            let parts = self.fiber_sizes(&a.0, &b.0, &f);
            let count: u64 = parts.iter().map(|(_, k)| k).product();
            if i >= count {
                i -= count;
                continue;
            }
            let mut components = Vec::with_capacity(parts.len());
            for ((xs, k), y) in parts.iter().zip(&b.0).rev() {
                components.push(self.m.hom_nth(xs, y, i % k)?);
                i /= k;
            }
            components.reverse();
            return Some(LMorphism { f, components });
        }
        None
    }

    fn size(&self, a: &Self::Obj) -> usize {
        a.len()
    }
}

/// `L F: L M → L N` for a multifunctor `F`, strict monoidal:
/// `(f, ⟨φ_s⟩) ↦ (f, ⟨Fφ_s⟩)`.
pub struct Lifted<'a, F: Multifunctor> {
    functor: &'a F,
    source: FreePermutative<'a, F::Source>,
    target: FreePermutative<'a, F::Target>,
}

impl<'a, F: Multifunctor> Lifted<'a, F> {
    pub fn new(functor: &'a F) -> Self {
        Lifted {
            functor,
            source: FreePermutative::new(functor.source()),
            target: FreePermutative::new(functor.target()),
        }
    }
}

impl<'a, F: Multifunctor> LaxFunctor for Lifted<'a, F> {
    type Source = FreePermutative<'a, F::Source>;
    type Target = FreePermutative<'a, F::Target>;

    fn source(&self) -> &Self::Source {
        &self.source
    }

    fn target(&self) -> &Self::Target {
        &self.target
    }

    fn obj(
        &self,
        a: &LObject<<F::Source as Multicategory>::Obj>,
    ) -> LObject<<F::Target as Multicategory>::Obj> {
        LObject(a.0.iter().map(|x| self.functor.obj(x)).collect())
    }

    fn mor(
        &self,
        g: &LMorphism<<F::Source as Multicategory>::Arrow>,
    ) -> Result<LMorphism<<F::Target as Multicategory>::Arrow>> {
        let components = g
            .components
            .iter()
            .map(|phi| self.functor.arrow(phi))
            .collect::<Result<Vec<_>>>()?;
        Ok(LMorphism {
            f: g.f.clone(),
            components,
        })
    }

    fn eta(&self) -> Result<LMorphism<<F::Target as Multicategory>::Arrow>> {
        Ok(self.target.id(&self.target.unit()))
    }

    fn xi(
        &self,
        a: &LObject<<F::Source as Multicategory>::Obj>,
        b: &LObject<<F::Source as Multicategory>::Obj>,
    ) -> Result<LMorphism<<F::Target as Multicategory>::Arrow>> {
        Ok(self.target.id(&self.obj(&self.source.tensor(a, b))))
    }
}
