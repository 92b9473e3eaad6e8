//! Multicategories and the underlying multicategory of a symmetric monoidal
//! category.

mod iso;
pub mod laws;
mod underlying;

use std::fmt::Debug;
use std::hash::Hash;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::symgrp::Permutation;

pub use iso::CanonicalIso;
pub use underlying::Underlying;

pub trait Multicategory: Send + Sync {
    type Obj: Clone + Eq + Hash + Debug + Serialize + Send + Sync;
    type Arrow: Clone + Eq + Hash + Debug + Serialize + Send + Sync;

    fn sources(&self, f: &Self::Arrow) -> Vec<Self::Obj>;
    fn target(&self, f: &Self::Arrow) -> Self::Obj;
    fn identity(&self, a: &Self::Obj) -> Self::Arrow;
    /// `Γ(outer; inners)`.
    fn compose(&self, outer: &Self::Arrow, inners: &[Self::Arrow]) -> Result<Self::Arrow>;
    /// The right action `f ↦ σ*f`, whose sources are `σ⁻¹` of those of `f`.
    fn act(&self, f: &Self::Arrow, s: &Permutation) -> Result<Self::Arrow>;

    /// Checks internal consistency of an arrow value.
    fn validate(&self, _f: &Self::Arrow) -> Result<()> {
        Ok(())
    }
}

pub trait FiniteMulticategory: Multicategory {
    fn hom(&self, sources: &[Self::Obj], target: &Self::Obj) -> Vec<Self::Arrow>;

    fn hom_len(&self, sources: &[Self::Obj], target: &Self::Obj) -> u64 {
        self.hom(sources, target).len() as u64
    }

    /// The `i`-th element of the hom-set, in the order `hom` lists them.
    fn hom_nth(&self, sources: &[Self::Obj], target: &Self::Obj, i: u64) -> Option<Self::Arrow> {
        self.hom(sources, target).into_iter().nth(i as usize)
    }
}

impl<M: Multicategory + ?Sized> Multicategory for &M {
    type Obj = M::Obj;
    type Arrow = M::Arrow;

    fn sources(&self, f: &M::Arrow) -> Vec<M::Obj> {
        (**self).sources(f)
    }

    fn target(&self, f: &M::Arrow) -> M::Obj {
        (**self).target(f)
    }

    fn identity(&self, a: &M::Obj) -> M::Arrow {
        (**self).identity(a)
    }

    fn compose(&self, outer: &M::Arrow, inners: &[M::Arrow]) -> Result<M::Arrow> {
        (**self).compose(outer, inners)
    }

    fn act(&self, f: &M::Arrow, s: &Permutation) -> Result<M::Arrow> {
        (**self).act(f, s)
    }

    fn validate(&self, f: &M::Arrow) -> Result<()> {
        (**self).validate(f)
    }
}

impl<M: FiniteMulticategory + ?Sized> FiniteMulticategory for &M {
    fn hom(&self, sources: &[M::Obj], target: &M::Obj) -> Vec<M::Arrow> {
        (**self).hom(sources, target)
    }

    fn hom_len(&self, sources: &[M::Obj], target: &M::Obj) -> u64 {
        (**self).hom_len(sources, target)
    }

    fn hom_nth(&self, sources: &[M::Obj], target: &M::Obj, i: u64) -> Option<M::Arrow> {
        (**self).hom_nth(sources, target, i)
    }
}

/// An arrow of an underlying multicategory: a morphism of the ambient
/// category tagged with the tuple it is a multimorphism out of. Two arrows
/// with equal payloads but different source tuples are different arrows.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MultiArrow<O, M> {
    pub source: Vec<O>,
    pub target: O,
    pub payload: M,
}

impl<O, M> MultiArrow<O, M> {
    pub fn arity(&self) -> usize {
        self.source.len()
    }
}
