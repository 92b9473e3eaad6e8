//! Symmetric monoidal categories and the action of `Y` on them.

mod coherence;
pub mod h;
pub mod laws;

use std::fmt::Debug;
use std::hash::Hash;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::operad::YObject;

pub use coherence::{Coh, Term};

/// A symmetric monoidal category with decidable equality.
///
/// The associator goes `(a⊕b)⊕c → a⊕(b⊕c)`, the braiding `a⊕b → b⊕a` and
/// the right unitor `a⊕e → a`. The left unitor is derived.
pub trait Smc: Send + Sync {
    type Obj: Clone + Eq + Hash + Debug + Serialize + Send + Sync;
    type Mor: Clone + Eq + Hash + Debug + Serialize + Send + Sync;

    fn dom(&self, f: &Self::Mor) -> Self::Obj;
    fn cod(&self, f: &Self::Mor) -> Self::Obj;
    fn id(&self, a: &Self::Obj) -> Self::Mor;
    /// `g ∘ f`.
    fn compose(&self, g: &Self::Mor, f: &Self::Mor) -> Result<Self::Mor>;

    fn unit(&self) -> Self::Obj;
    fn tensor(&self, a: &Self::Obj, b: &Self::Obj) -> Self::Obj;
    fn tensor_mor(&self, f: &Self::Mor, g: &Self::Mor) -> Self::Mor;

    fn associator(&self, a: &Self::Obj, b: &Self::Obj, c: &Self::Obj) -> Self::Mor;
    fn associator_inv(&self, a: &Self::Obj, b: &Self::Obj, c: &Self::Obj) -> Self::Mor;
    fn braid(&self, a: &Self::Obj, b: &Self::Obj) -> Self::Mor;
    fn right_unitor(&self, a: &Self::Obj) -> Self::Mor;
    fn right_unitor_inv(&self, a: &Self::Obj) -> Self::Mor;

    /// `e⊕a → a`, as `c_a ∘ τ_{e,a}`.
    fn left_unitor(&self, a: &Self::Obj) -> Result<Self::Mor> {
        self.compose(&self.right_unitor(a), &self.braid(&self.unit(), a))
    }

    /// An inverse of `f`, when the instance can produce one.
    fn inverse(&self, _f: &Self::Mor) -> Option<Self::Mor> {
        None
    }

    /// The canonical isomorphism `a(x⃗) → b(x⃗)`. Instances with a direct
    /// description may override the generic coherence evaluation.
    fn canonical_iso(&self, a: &YObject, b: &YObject, xs: &[Self::Obj]) -> Result<Self::Mor> {
        eval_can_iso(self, a, b, xs)
    }

    /// Composes a path given in the order the arrows are traversed.
    fn compose_path(&self, path: &[Self::Mor]) -> Result<Self::Mor> {
        let (first, rest) = path
            .split_first()
            .ok_or_else(|| Error::EndpointMismatch("empty path".into()))?;
        rest.iter()
            .try_fold(first.clone(), |acc, next| self.compose(next, &acc))
    }
}

/// An instance whose hom-sets can be listed.
pub trait FiniteSmc: Smc {
    fn hom(&self, a: &Self::Obj, b: &Self::Obj) -> Vec<Self::Mor>;

    fn hom_len(&self, a: &Self::Obj, b: &Self::Obj) -> u64 {
        self.hom(a, b).len() as u64
    }

    /// The `i`-th element of `hom(a, b)`, in the order `hom` lists them.
    fn hom_nth(&self, a: &Self::Obj, b: &Self::Obj, i: u64) -> Option<Self::Mor> {
        self.hom(a, b).into_iter().nth(i as usize)
    }

    /// A size used to bound enumerations.
    fn size(&self, a: &Self::Obj) -> usize;
}

fn check_arity(y: &YObject, n: usize) -> Result<()> {
    if y.arity() == n {
        Ok(())
    } else {
        Err(Error::ArityMismatch {
            expected: y.arity(),
            found: n,
        })
    }
}

/// The object `y(x_1, …, x_n)`.
pub fn eval_obj<C: Smc>(c: &C, y: &YObject, xs: &[C::Obj]) -> Result<C::Obj> {
    check_arity(y, xs.len())?;
    Ok(Term::of(y).eval_obj(c, xs))
}

/// The morphism `y(f_1, …, f_n)` of the functor `Cⁿ → C` induced by `y`.
pub fn eval_obj_mor<C: Smc>(c: &C, y: &YObject, fs: &[C::Mor]) -> Result<C::Mor> {
    check_arity(y, fs.len())?;
    Ok(Term::of(y).eval_mor(c, fs))
}

/// The canonical isomorphism `a(x) → b(x)` induced by the unique morphism
/// `a → b` in `Y(n)`.
pub fn eval_can_iso<C: Smc + ?Sized>(
    c: &C,
    a: &YObject,
    b: &YObject,
    xs: &[C::Obj],
) -> Result<C::Mor> {
    check_arity(a, xs.len())?;
    check_arity(b, xs.len())?;
    Coh::between(&Term::of(a), &Term::of(b)).eval(c, xs)
}

impl<C: Smc + ?Sized> Smc for &C {
    type Obj = C::Obj;
    type Mor = C::Mor;

    fn dom(&self, f: &C::Mor) -> C::Obj {
        (**self).dom(f)
    }

    fn cod(&self, f: &C::Mor) -> C::Obj {
        (**self).cod(f)
    }

    fn id(&self, a: &C::Obj) -> C::Mor {
        (**self).id(a)
    }

    fn compose(&self, g: &C::Mor, f: &C::Mor) -> Result<C::Mor> {
        (**self).compose(g, f)
    }

    fn unit(&self) -> C::Obj {
        (**self).unit()
    }

    fn tensor(&self, a: &C::Obj, b: &C::Obj) -> C::Obj {
        (**self).tensor(a, b)
    }

    fn tensor_mor(&self, f: &C::Mor, g: &C::Mor) -> C::Mor {
        (**self).tensor_mor(f, g)
    }

    fn associator(&self, a: &C::Obj, b: &C::Obj, c: &C::Obj) -> C::Mor {
        (**self).associator(a, b, c)
    }

    fn associator_inv(&self, a: &C::Obj, b: &C::Obj, c: &C::Obj) -> C::Mor {
        (**self).associator_inv(a, b, c)
    }

    fn braid(&self, a: &C::Obj, b: &C::Obj) -> C::Mor {
        (**self).braid(a, b)
    }

    fn right_unitor(&self, a: &C::Obj) -> C::Mor {
        (**self).right_unitor(a)
    }

    fn right_unitor_inv(&self, a: &C::Obj) -> C::Mor {
        (**self).right_unitor_inv(a)
    }

    fn left_unitor(&self, a: &C::Obj) -> Result<C::Mor> {
        (**self).left_unitor(a)
    }

    fn inverse(&self, f: &C::Mor) -> Option<C::Mor> {
        (**self).inverse(f)
    }

    fn canonical_iso(&self, a: &YObject, b: &YObject, xs: &[C::Obj]) -> Result<C::Mor> {
        (**self).canonical_iso(a, b, xs)
    }
}

impl<C: FiniteSmc + ?Sized> FiniteSmc for &C {
    fn hom(&self, a: &C::Obj, b: &C::Obj) -> Vec<C::Mor> {
        (**self).hom(a, b)
    }

    fn hom_len(&self, a: &C::Obj, b: &C::Obj) -> u64 {
        (**self).hom_len(a, b)
    }

    fn hom_nth(&self, a: &C::Obj, b: &C::Obj, i: u64) -> Option<C::Mor> {
        (**self).hom_nth(a, b, i)
    }

    fn size(&self, a: &C::Obj) -> usize {
        (**self).size(a)
    }
}
