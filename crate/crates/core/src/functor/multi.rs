use crate::error::{Error, Result};
use crate::multicat::{MultiArrow, Multicategory, Underlying};
use crate::operad::DefaultKappa;
use crate::smc::Smc;

use super::laws::coherence_failures;
use super::{xi_tower, LaxFunctor, ObjOf};

/// `U_κC` for the left-nested family, the convention under which lax
/// functors and multifunctors correspond.
pub type DefaultUnderlying<C> = Underlying<C, DefaultKappa>;

pub type MultiObj<M> = <M as Multicategory>::Obj;
pub type ArrowOf<M> = <M as Multicategory>::Arrow;

/// A map of multicategories.
pub trait Multifunctor: Send + Sync {
    type Source: Multicategory;
    type Target: Multicategory;

    fn source(&self) -> &Self::Source;
    fn target(&self) -> &Self::Target;

    fn obj(&self, a: &MultiObj<Self::Source>) -> MultiObj<Self::Target>;
    fn arrow(&self, f: &ArrowOf<Self::Source>) -> Result<ArrowOf<Self::Target>>;
}

impl<F: Multifunctor + ?Sized> Multifunctor for &F {
    type Source = F::Source;
    type Target = F::Target;

    fn source(&self) -> &F::Source {
        (**self).source()
    }

    fn target(&self) -> &F::Target {
        (**self).target()
    }

    fn obj(&self, a: &MultiObj<F::Source>) -> MultiObj<F::Target> {
        (**self).obj(a)
    }

    fn arrow(&self, f: &ArrowOf<F::Source>) -> Result<ArrowOf<F::Target>> {
        (**self).arrow(f)
    }
}

pub struct IdentityMultifunctor<M>(pub M);

impl<M: Multicategory> Multifunctor for IdentityMultifunctor<M> {
    type Source = M;
    type Target = M;

    fn source(&self) -> &M {
        &self.0
    }

    fn target(&self) -> &M {
        &self.0
    }

    fn obj(&self, a: &M::Obj) -> M::Obj {
        a.clone()
    }

    fn arrow(&self, f: &M::Arrow) -> Result<M::Arrow> {
        Ok(f.clone())
    }
}

/// The multifunctor `U_κF` of a lax functor: `F_n(f) = F(f) ∘ ξ_n`.
pub struct LaxToMulti<'a, F: LaxFunctor> {
    lax: &'a F,
    source: DefaultUnderlying<F::Source>,
    target: DefaultUnderlying<F::Target>,
}

impl<'a, F> LaxToMulti<'a, F>
where
    F: LaxFunctor,
    F::Source: Clone,
    F::Target: Clone,
{
    /// Checks the unit, associativity and transposition diagrams of `lax`
    /// on every pair and triple drawn from `witnesses` first.
    pub fn new(lax: &'a F, witnesses: &[ObjOf<F::Source>]) -> Result<Self> {
        if let Some(law) = coherence_failures(lax, witnesses).first() {
            return Err(Error::Incoherent(law.clone()));
        }
        Ok(Self::unchecked(lax))
    }

    pub fn unchecked(lax: &'a F) -> Self {
        LaxToMulti {
            lax,
            source: Underlying::new(lax.source().clone(), DefaultKappa),
            target: Underlying::new(lax.target().clone(), DefaultKappa),
        }
    }

    pub fn lax(&self) -> &F {
        self.lax
    }
}

impl<F> Multifunctor for LaxToMulti<'_, F>
where
    F: LaxFunctor,
{
    type Source = DefaultUnderlying<F::Source>;
    type Target = DefaultUnderlying<F::Target>;

    fn source(&self) -> &Self::Source {
        &self.source
    }

    fn target(&self) -> &Self::Target {
        &self.target
    }

    fn obj(&self, a: &ObjOf<F::Source>) -> ObjOf<F::Target> {
        self.lax.obj(a)
    }

    fn arrow(&self, f: &ArrowOf<Self::Source>) -> Result<ArrowOf<Self::Target>> {
        let payload = self.lax.mor(&f.payload)?;
        let xi = xi_tower(self.lax, &f.source)?;
        Ok(MultiArrow {
            source: f.source.iter().map(|a| self.lax.obj(a)).collect(),
            target: self.lax.obj(&f.target),
            payload: self.lax.target().compose(&payload, &xi)?,
        })
    }
}

/// The lax functor of a multifunctor between left-nested underlying
/// multicategories: `F` on unary arrows, `η = F_0(id⁰_e)` and
/// `ξ = F_2(id²_{a⊕b})`.
pub struct MultiToLax<'a, M>(pub &'a M);

impl<C, D, M> LaxFunctor for MultiToLax<'_, M>
where
    C: Smc,
    D: Smc,
    M: Multifunctor<Source = DefaultUnderlying<C>, Target = DefaultUnderlying<D>>,
{
    type Source = C;
    type Target = D;

    fn source(&self) -> &C {
        self.0.source().smc()
    }

    fn target(&self) -> &D {
        self.0.target().smc()
    }

    fn obj(&self, a: &C::Obj) -> D::Obj {
        self.0.obj(a)
    }

    fn mor(&self, f: &C::Mor) -> Result<D::Mor> {
        let c = self.source();
        let arrow = MultiArrow {
            source: vec![c.dom(f)],
            target: c.cod(f),
            payload: f.clone(),
        };
        Ok(self.0.arrow(&arrow)?.payload)
    }

    fn eta(&self) -> Result<D::Mor> {
        let e = self.source().unit();
        let id0 = MultiArrow {
            source: vec![],
            target: e.clone(),
            payload: self.source().id(&e),
        };
        Ok(self.0.arrow(&id0)?.payload)
    }

    fn xi(&self, a: &C::Obj, b: &C::Obj) -> Result<D::Mor> {
        let c = self.source();
        let ab = c.tensor(a, b);
        let id2 = MultiArrow {
            source: vec![a.clone(), b.clone()],
            target: ab.clone(),
            payload: c.id(&ab),
        };
        Ok(self.0.arrow(&id2)?.payload)
    }
}
