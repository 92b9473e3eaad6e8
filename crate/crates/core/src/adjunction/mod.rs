//! The adjunction between `L` and `U`: the unit `η: M → U L M`, the counit
//! `ε: L U C → C`, the comparison `ν: id → η_C ε` on `L U C` and the cells
//! `ξ_F` that fill the naturality squares of `ε` for lax functors.

pub mod laws;

use crate::error::Result;
use crate::free::{FreePermutative, LMorphism, LObject};
use crate::functor::{DefaultUnderlying, LaxFunctor, Multifunctor};
use crate::multicat::{MultiArrow, Multicategory, Underlying};
use crate::mutation::Mutation;
use crate::operad::{DefaultKappa, KappaFamily, YObject};
use crate::smc::{eval_obj_mor, Smc};
use crate::symgrp::Permutation;

type UArrow<C> = MultiArrow<<C as Smc>::Obj, <C as Smc>::Mor>;

/// `η_M: M → U L M`, sending `x` to `(x)` and `φ` to `(p, ⟨φ⟩)` with `p`
/// the unique map to a point.
pub struct UnitMap<'a, M: Multicategory> {
    m: &'a M,
    target: DefaultUnderlying<FreePermutative<'a, M>>,
}

impl<'a, M: Multicategory> UnitMap<'a, M> {
    pub fn new(m: &'a M) -> Self {
        UnitMap {
            m,
            target: Underlying::new(FreePermutative::new(m), DefaultKappa),
        }
    }
}

impl<'a, M: Multicategory> Multifunctor for UnitMap<'a, M> {
    type Source = M;
    type Target = DefaultUnderlying<FreePermutative<'a, M>>;

    fn source(&self) -> &M {
        self.m
    }

    fn target(&self) -> &Self::Target {
        &self.target
    }

    fn obj(&self, a: &M::Obj) -> LObject<M::Obj> {
        LObject(vec![a.clone()])
    }

    fn arrow(&self, phi: &M::Arrow) -> Result<UArrow<FreePermutative<'a, M>>> {
        let source = self.m.sources(phi);
        let payload = LMorphism::new(vec![0; source.len()], vec![phi.clone()])?;
        Ok(MultiArrow {
            source: source.into_iter().map(|a| LObject(vec![a])).collect(),
            target: LObject(vec![self.m.target(phi)]),
            payload,
        })
    }
}

/// `ε_C: L U_κC → C`. On objects `x⃗ ↦ κ̄x⃗`; a morphism `(f, ⟨φ_s⟩)` goes
/// to `κ(y⃗)(φ_1, …, φ_n)` after the canonical isomorphism that sorts `x⃗`
/// into the fibers of `f`.
pub struct Counit<'a, C: Smc, K> {
    source: FreePermutative<'a, Underlying<C, K>>,
    mutation: Option<Mutation>,
}

impl<'a, C: Smc, K: KappaFamily<C::Obj>> Counit<'a, C, K> {
    pub fn new(u: &'a Underlying<C, K>) -> Self {
        Counit {
            source: FreePermutative::new(u),
            mutation: None,
        }
    }

    /// Only [`Mutation::DropSigmaF`] changes the counit.
    pub fn with_mutation(mut self, mutation: Option<Mutation>) -> Self {
        self.mutation = mutation;
        self
    }

    pub fn underlying(&self) -> &'a Underlying<C, K> {
        self.source.multicat()
    }

    /// `σ_f`: position `i` of the fiber-sorted list holds `x_{σ_f(i)}`.
    pub fn sigma(f: &[usize]) -> Permutation {
        let order: Vec<usize> = {
            let mut idx: Vec<usize> = (0..f.len()).collect();
            idx.sort_by_key(|&r| f[r]);
            idx
        };
        Permutation::from_zero_based(order).expect("a sort order is a bijection")
    }
}

impl<'a, C: Smc, K: KappaFamily<C::Obj>> LaxFunctor for Counit<'a, C, K> {
    type Source = FreePermutative<'a, Underlying<C, K>>;
    type Target = C;

    fn source(&self) -> &Self::Source {
        &self.source
    }

    fn target(&self) -> &C {
        self.underlying().smc()
    }

    fn obj(&self, a: &LObject<C::Obj>) -> C::Obj {
        self.underlying().kappa_bar(&a.0)
    }

    fn mor(&self, g: &LMorphism<UArrow<C>>) -> Result<C::Mor> {
        let u = self.underlying();
        let xs = self.source.dom(g).0;
        let ys = self.source.cod(g).0;
        let parts: Vec<YObject> = g
            .fibers()
            .iter()
            .map(|fiber| {
                let chunk: Vec<C::Obj> = fiber.iter().map(|&r| xs[r].clone()).collect();
                u.kappa_of(&chunk)
            })
            .collect();
        let outer = u.kappa_of(&ys);
        let nested = outer.gamma(&parts)?;
        let sorted = match self.mutation {
            Some(Mutation::DropSigmaF) => nested,
            _ => nested.act(&Self::sigma(g.f()).inverse())?,
        };
        let iso = u.can_iso(&u.kappa_of(&xs), &sorted, &xs)?;
        let payloads: Vec<C::Mor> = g
            .components()
            .iter()
            .map(|phi| phi.payload.clone())
            .collect();
        let applied = eval_obj_mor(u.smc(), &outer, &payloads)?;
        u.smc().compose(&applied, &iso)
    }

    fn eta(&self) -> Result<C::Mor> {
        let u = self.underlying();
        u.can_iso(&YObject::zero(), &u.kappa_of(&[]), &[])
    }

    /// Induced by the unique isomorphism `γ(m; κ_j, κ_n) → κ_{j+n}`.
    fn xi(&self, a: &LObject<C::Obj>, b: &LObject<C::Obj>) -> Result<C::Mor> {
        let u = self.underlying();
        let both = self.source.tensor(a, b);
        let split = YObject::m().gamma(&[u.kappa_of(&a.0), u.kappa_of(&b.0)])?;
        u.can_iso(&split, &u.kappa_of(&both.0), &both.0)
    }
}

/// `ν_{x⃗}: x⃗ → (κ̄x⃗)`, the unique map to a point with `id_{κ̄x⃗}`.
pub fn nu<C: Smc, K: KappaFamily<C::Obj>>(
    u: &Underlying<C, K>,
    xs: &LObject<C::Obj>,
) -> LMorphism<UArrow<C>> {
    let target = u.kappa_bar(&xs.0);
    let component = MultiArrow {
        source: xs.0.clone(),
        payload: u.smc().id(&target),
        target,
    };
    LMorphism {
        f: vec![0; xs.len()],
        components: vec![component],
    }
}

/// `η_C ε_C (g)`: the one-component morphism `(κ̄x⃗) → (κ̄y⃗)` carrying `ε(g)`.
pub fn unit_after_counit<C: Smc, K: KappaFamily<C::Obj>>(
    counit: &Counit<'_, C, K>,
    g: &LMorphism<UArrow<C>>,
) -> Result<LMorphism<UArrow<C>>> {
    let u = counit.underlying();
    let (a, b) = (
        counit.obj(&counit.source.dom(g)),
        counit.obj(&counit.source.cod(g)),
    );
    let payload = u.smc().compose(&counit.mor(g)?, &u.omega(&a))?;
    Ok(LMorphism {
        f: vec![0],
        components: vec![MultiArrow {
            source: vec![a],
            target: b,
            payload,
        }],
    })
}

/// The component of `ξ_F` at `x⃗`: `κ̄F(x⃗) → F(κ̄x⃗)`.
pub fn cell_component<F: LaxFunctor>(
    f: &F,
    xs: &LObject<<F::Source as Smc>::Obj>,
) -> Result<<F::Target as Smc>::Mor> {
    crate::functor::xi_tower(f, &xs.0)
}
