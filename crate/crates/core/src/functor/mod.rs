//! Lax symmetric monoidal functors, multifunctors, and the correspondence
//! between them on underlying multicategories with the left-nested `κ`.

mod instances;
pub mod laws;
mod multi;

use crate::error::Result;
use crate::operad::{default_kappa, YObject};
use crate::smc::{eval_can_iso, eval_obj, Smc};

pub use instances::{Composite, IdentityFunctor, LeafDoubling, PadUnit, Square};
pub use multi::{
    ArrowOf, DefaultUnderlying, IdentityMultifunctor, LaxToMulti, MultiObj, MultiToLax,
    Multifunctor,
};

pub type ObjOf<C> = <C as Smc>::Obj;
pub type MorOf<C> = <C as Smc>::Mor;

/// A lax symmetric monoidal functor `F: C → D`.
pub trait LaxFunctor: Send + Sync {
    type Source: Smc;
    type Target: Smc;

    fn source(&self) -> &Self::Source;
    fn target(&self) -> &Self::Target;

    fn obj(&self, a: &ObjOf<Self::Source>) -> ObjOf<Self::Target>;
    fn mor(&self, f: &MorOf<Self::Source>) -> Result<MorOf<Self::Target>>;
    /// `η: e → F(e)`.
    fn eta(&self) -> Result<MorOf<Self::Target>>;
    /// `ξ: F(a)⊕F(b) → F(a⊕b)`.
    fn xi(&self, a: &ObjOf<Self::Source>, b: &ObjOf<Self::Source>) -> Result<MorOf<Self::Target>>;
}

impl<F: LaxFunctor + ?Sized> LaxFunctor for &F {
    type Source = F::Source;
    type Target = F::Target;

    fn source(&self) -> &F::Source {
        (**self).source()
    }

    fn target(&self) -> &F::Target {
        (**self).target()
    }

    fn obj(&self, a: &ObjOf<F::Source>) -> ObjOf<F::Target> {
        (**self).obj(a)
    }

    fn mor(&self, f: &MorOf<F::Source>) -> Result<MorOf<F::Target>> {
        (**self).mor(f)
    }

    fn eta(&self) -> Result<MorOf<F::Target>> {
        (**self).eta()
    }

    fn xi(&self, a: &ObjOf<F::Source>, b: &ObjOf<F::Source>) -> Result<MorOf<F::Target>> {
        (**self).xi(a, b)
    }
}

/// `κ̄x⃗` for the left-nested family.
pub fn kappa_bar<C: Smc>(c: &C, xs: &[C::Obj]) -> C::Obj {
    eval_obj(c, &default_kappa(xs.len()), xs).expect("κ_n has arity n")
}

/// The canonical isomorphism `κ_j(x⃗) → y(x⃗)`.
pub fn from_kappa<C: Smc>(c: &C, y: &YObject, xs: &[C::Obj]) -> Result<C::Mor> {
    eval_can_iso(c, &default_kappa(xs.len()), y, xs)
}

/// `ξ_n: κ̄F(x⃗) → F(κ̄x⃗)`, with `ξ_0 = η`, `ξ_1 = id` and
/// `ξ_n = ξ(κ̄x̂, x_n) ∘ (ξ_{n−1} ⊕ id)` where `x̂` drops the last entry.
pub fn xi_tower<F: LaxFunctor>(f: &F, xs: &[ObjOf<F::Source>]) -> Result<MorOf<F::Target>> {
    let d = f.target();
    match xs.len() {
        0 => f.eta(),
        1 => Ok(d.id(&f.obj(&xs[0]))),
        n => {
            let (head, last) = xs.split_at(n - 1);
            let below = d.tensor_mor(&xi_tower(f, head)?, &d.id(&f.obj(&last[0])));
            let xi = f.xi(&kappa_bar(f.source(), head), &last[0])?;
            d.compose(&xi, &below)
        }
    }
}
