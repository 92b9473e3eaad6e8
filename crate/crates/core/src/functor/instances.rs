use crate::error::Result;
use crate::operad::YObject;
use crate::shapes::ZObject;
use crate::smc::h::{square, FreeSmc, HMorphism, HObject};
use crate::smc::{eval_can_iso, Smc};
use crate::symgrp::Permutation;

use super::{LaxFunctor, MorOf, ObjOf};

fn m_of(left: YObject, right: YObject) -> YObject {
    YObject::m().gamma(&[left, right]).expect("m is binary")
}

/// The identity functor, strict monoidal.
#[derive(Clone, Copy, Debug, Default)]
pub struct IdentityFunctor<C>(pub C);

impl<C: Smc> LaxFunctor for IdentityFunctor<C> {
    type Source = C;
    type Target = C;

    fn source(&self) -> &C {
        &self.0
    }

    fn target(&self) -> &C {
        &self.0
    }

    fn obj(&self, a: &C::Obj) -> C::Obj {
        a.clone()
    }

    fn mor(&self, f: &C::Mor) -> Result<C::Mor> {
        Ok(f.clone())
    }

    fn eta(&self) -> Result<C::Mor> {
        Ok(self.0.id(&self.0.unit()))
    }

    fn xi(&self, a: &C::Obj, b: &C::Obj) -> Result<C::Mor> {
        Ok(self.0.id(&self.0.tensor(a, b)))
    }
}

/// `x ↦ x⊕e`. Strong monoidal; its structure maps are the canonical
/// isomorphisms `e → e⊕e` and `(a⊕e)⊕(b⊕e) → (a⊕b)⊕e`.
#[derive(Clone, Copy, Debug, Default)]
pub struct PadUnit<C>(pub C);

impl<C: Smc> LaxFunctor for PadUnit<C> {
    type Source = C;
    type Target = C;

    fn source(&self) -> &C {
        &self.0
    }

    fn target(&self) -> &C {
        &self.0
    }

    fn obj(&self, a: &C::Obj) -> C::Obj {
        self.0.tensor(a, &self.0.unit())
    }

    fn mor(&self, f: &C::Mor) -> Result<C::Mor> {
        Ok(self.0.tensor_mor(f, &self.0.id(&self.0.unit())))
    }

    fn eta(&self) -> Result<C::Mor> {
        let e = YObject::zero();
        eval_can_iso(&self.0, &e, &m_of(e.clone(), e.clone()), &[])
    }

    fn xi(&self, a: &C::Obj, b: &C::Obj) -> Result<C::Mor> {
        let padded = m_of(YObject::one(), YObject::zero());
        let source = m_of(padded.clone(), padded);
        let target = m_of(YObject::m(), YObject::zero());
        eval_can_iso(&self.0, &source, &target, &[a.clone(), b.clone()])
    }
}

/// `x ↦ x⊕x`, strong monoidal with the middle interchange
/// `(a⊕a)⊕(b⊕b) → (a⊕b)⊕(a⊕b)` as `ξ`.
#[derive(Clone, Copy, Debug, Default)]
pub struct Square<C>(pub C);

impl<C: Smc> LaxFunctor for Square<C> {
    type Source = C;
    type Target = C;

    fn source(&self) -> &C {
        &self.0
    }

    fn target(&self) -> &C {
        &self.0
    }

    fn obj(&self, a: &C::Obj) -> C::Obj {
        self.0.tensor(a, a)
    }

    fn mor(&self, f: &C::Mor) -> Result<C::Mor> {
        Ok(self.0.tensor_mor(f, f))
    }

    fn eta(&self) -> Result<C::Mor> {
        let e = YObject::zero();
        eval_can_iso(&self.0, &e, &m_of(e.clone(), e.clone()), &[])
    }

    fn xi(&self, a: &C::Obj, b: &C::Obj) -> Result<C::Mor> {
        let pairs = m_of(YObject::m(), YObject::m());
        let middle = Permutation::transposition(4, 2, 3)?;
        let xs = [a.clone(), a.clone(), b.clone(), b.clone()];
        eval_can_iso(&self.0, &pairs, &pairs.act(&middle)?, &xs)
    }
}

/// The endofunctor of `H` that replaces every variable leaf by two.
/// Strict monoidal: `F(a⊕b) = F(a)⊕F(b)` and `F(e) = e`.
#[derive(Clone, Copy, Debug, Default)]
pub struct LeafDoubling;

impl LaxFunctor for LeafDoubling {
    type Source = FreeSmc;
    type Target = FreeSmc;

    fn source(&self) -> &FreeSmc {
        &FreeSmc
    }

    fn target(&self) -> &FreeSmc {
        &FreeSmc
    }

    fn obj(&self, a: &HObject) -> HObject {
        a.gamma(&vec![square(); a.arity()])
            .expect("one part per marked leaf")
    }

    fn mor(&self, f: &HMorphism) -> Result<HMorphism> {
        let n = f.perm().degree();
        let perm = f.perm().block_perm(&vec![2; n])?;
        HMorphism::new(self.obj(f.source()), self.obj(f.target()), perm)
    }

    fn eta(&self) -> Result<HMorphism> {
        Ok(FreeSmc.id(&ZObject::unit()))
    }

    fn xi(&self, a: &HObject, b: &HObject) -> Result<HMorphism> {
        Ok(FreeSmc.id(&self.obj(&a.tensor(b))))
    }
}

/// `G ∘ F`, with `η = G(η_F) ∘ η_G` and `ξ = G(ξ_F) ∘ ξ_G`.
#[derive(Clone, Copy, Debug)]
pub struct Composite<F, G> {
    pub first: F,
    pub second: G,
}

impl<F, G> LaxFunctor for Composite<F, G>
where
    F: LaxFunctor,
    G: LaxFunctor<Source = F::Target>,
{
    type Source = F::Source;
    type Target = G::Target;

    fn source(&self) -> &F::Source {
        self.first.source()
    }

    fn target(&self) -> &G::Target {
        self.second.target()
    }

    fn obj(&self, a: &ObjOf<F::Source>) -> ObjOf<G::Target> {
        self.second.obj(&self.first.obj(a))
    }

    fn mor(&self, f: &MorOf<F::Source>) -> Result<MorOf<G::Target>> {
        self.second.mor(&self.first.mor(f)?)
    }

    fn eta(&self) -> Result<MorOf<G::Target>> {
        let lifted = self.second.mor(&self.first.eta()?)?;
        self.target().compose(&lifted, &self.second.eta()?)
    }

    fn xi(&self, a: &ObjOf<F::Source>, b: &ObjOf<F::Source>) -> Result<MorOf<G::Target>> {
        let lifted = self.second.mor(&self.first.xi(a, b)?)?;
        let inner = self.second.xi(&self.first.obj(a), &self.first.obj(b))?;
        self.target().compose(&lifted, &inner)
    }
}
