use crate::error::Result;
use crate::operad::KappaFamily;
use crate::smc::Smc;

use super::{MultiArrow, Multicategory, Underlying};

/// The isomorphism `U_κC → U_λC` that is the identity on objects and
/// precomposes each payload with the canonical map `λ̄x⃗ → κ̄x⃗`.
pub struct CanonicalIso<'a, C: Smc, K, L> {
    from: &'a Underlying<C, K>,
    to: &'a Underlying<C, L>,
}

impl<'a, C, K, L> CanonicalIso<'a, C, K, L>
where
    C: Smc,
    K: KappaFamily<C::Obj>,
    L: KappaFamily<C::Obj>,
{
    /// Both multicategories must be built over the same instance.
    pub fn new(from: &'a Underlying<C, K>, to: &'a Underlying<C, L>) -> Self {
        CanonicalIso { from, to }
    }

    pub fn from(&self) -> &Underlying<C, K> {
        self.from
    }

    pub fn to(&self) -> &Underlying<C, L> {
        self.to
    }

    pub fn apply(&self, f: &MultiArrow<C::Obj, C::Mor>) -> Result<MultiArrow<C::Obj, C::Mor>> {
        let xs = &f.source;
        let alpha = self
            .to
            .can_iso(&self.to.kappa_of(xs), &self.from.kappa_of(xs), xs)?;
        let payload = self.to.smc().compose(&f.payload, &alpha)?;
        let image = MultiArrow {
            source: xs.clone(),
            target: f.target.clone(),
            payload,
        };
        self.to.validate(&image)?;
        Ok(image)
    }
}
