use std::collections::HashMap;
use std::sync::RwLock;

use crate::error::{Error, Result};
use crate::mutation::Mutation;
use crate::operad::{KappaFamily, YObject};
use crate::smc::{eval_obj, eval_obj_mor, FiniteSmc, Smc};
use crate::symgrp::Permutation;

use super::{FiniteMulticategory, MultiArrow, Multicategory};

type IsoKey<O> = (YObject, YObject, Vec<O>);

/// `U_κC`: the objects of `C`, with multimorphisms `x⃗ → y` the morphisms
/// `κ̄x⃗ → y` of `C`, where `κ̄x⃗ = κ(x⃗)(x⃗)`.
pub struct Underlying<C: Smc, K> {
    smc: C,
    kappa: K,
    mutation: Option<Mutation>,
    isos: RwLock<HashMap<IsoKey<C::Obj>, C::Mor>>,
    choices: RwLock<HashMap<Vec<C::Obj>, YObject>>,
}

impl<C: Smc, K: KappaFamily<C::Obj>> Underlying<C, K> {
    pub fn new(smc: C, kappa: K) -> Self {
        Underlying {
            smc,
            kappa,
            mutation: None,
            isos: RwLock::new(HashMap::new()),
            choices: RwLock::new(HashMap::new()),
        }
    }

    /// Only [`Mutation::DropPhi`] changes this construction.
    pub fn with_mutation(mut self, mutation: Option<Mutation>) -> Self {
        self.mutation = mutation;
        self
    }

    pub fn smc(&self) -> &C {
        &self.smc
    }

    pub fn kappa(&self) -> &K {
        &self.kappa
    }

    pub fn kappa_of(&self, xs: &[C::Obj]) -> YObject {
        if let Some(found) = self.choices.read().expect("κ cache poisoned").get(xs) {
            return found.clone();
        }
        let y = self.kappa.choose(xs);
        debug_assert_eq!(y.arity(), xs.len(), "κ family returned the wrong arity");
        self.choices
            .write()
            .expect("κ cache poisoned")
            .insert(xs.to_vec(), y.clone());
        y
    }

    /// `κ̄x⃗`.
    pub fn kappa_bar(&self, xs: &[C::Obj]) -> C::Obj {
        eval_obj(&self.smc, &self.kappa_of(xs), xs).expect("κ has the arity of its input")
    }

    /// The canonical isomorphism `a(x⃗) → b(x⃗)`, memoised.
    pub fn can_iso(&self, a: &YObject, b: &YObject, xs: &[C::Obj]) -> Result<C::Mor> {
        let key = (a.clone(), b.clone(), xs.to_vec());
        if let Some(found) = self.isos.read().expect("iso cache poisoned").get(&key) {
            return Ok(found.clone());
        }
        let iso = self.smc.canonical_iso(a, b, xs)?;
        self.isos
            .write()
            .expect("iso cache poisoned")
            .insert(key, iso.clone());
        Ok(iso)
    }

    /// `ω(a): κ̄(a) → a`, the payload of the identity on `a`.
    pub fn omega(&self, a: &C::Obj) -> C::Mor {
        let xs = std::slice::from_ref(a);
        self.can_iso(&self.kappa_of(xs), &YObject::one(), xs)
            .expect("unary κ")
    }

    /// `θ(x⃗, σ): κ̄(σ⁻¹x⃗) → κ̄x⃗`.
    pub fn theta(&self, xs: &[C::Obj], s: &Permutation) -> Result<C::Mor> {
        let moved = s.act_inverse(xs)?;
        let acted = self.kappa_of(xs).act(s)?;
        self.can_iso(&self.kappa_of(&moved), &acted, &moved)
    }

    /// `φ(y⃗, ⟨x⃗_s⟩): κ̄(⊙x⃗_s) → κ(y⃗)(κ̄x⃗_1, …, κ̄x⃗_n)`.
    pub fn phi(&self, ys: &[C::Obj], xss: &[Vec<C::Obj>]) -> Result<C::Mor> {
        let parts: Vec<YObject> = xss.iter().map(|xs| self.kappa_of(xs)).collect();
        let nested = self.kappa_of(ys).gamma(&parts)?;
        let flat: Vec<C::Obj> = xss.concat();
        self.can_iso(&self.kappa_of(&flat), &nested, &flat)
    }

    /// Builds an arrow after checking that the payload has the right ends.
    pub fn arrow(
        &self,
        source: Vec<C::Obj>,
        target: C::Obj,
        payload: C::Mor,
    ) -> Result<MultiArrow<C::Obj, C::Mor>> {
        let arrow = MultiArrow {
            source,
            target,
            payload,
        };
        self.validate(&arrow)?;
        Ok(arrow)
    }
}

impl<C: Smc, K: KappaFamily<C::Obj>> Multicategory for Underlying<C, K> {
    type Obj = C::Obj;
    type Arrow = MultiArrow<C::Obj, C::Mor>;

    fn sources(&self, f: &Self::Arrow) -> Vec<C::Obj> {
        f.source.clone()
    }

    fn target(&self, f: &Self::Arrow) -> C::Obj {
        f.target.clone()
    }

    fn identity(&self, a: &C::Obj) -> Self::Arrow {
        MultiArrow {
            source: vec![a.clone()],
            target: a.clone(),
            payload: self.omega(a),
        }
    }

    fn compose(&self, outer: &Self::Arrow, inners: &[Self::Arrow]) -> Result<Self::Arrow> {
        if inners.len() != outer.arity() {
            return Err(Error::ArityMismatch {
                expected: outer.arity(),
                found: inners.len(),
            });
        }
        if let Some(s) = (0..inners.len()).find(|&s| inners[s].target != outer.source[s]) {
            return Err(Error::EndpointMismatch(format!(
                "inner arrow {s} ends at {:?}, outer expects {:?}",
                inners[s].target, outer.source[s]
            )));
        }
        let payloads: Vec<C::Mor> = inners.iter().map(|g| g.payload.clone()).collect();
        let lifted = eval_obj_mor(&self.smc, &self.kappa_of(&outer.source), &payloads)?;
        let body = self.smc.compose(&outer.payload, &lifted)?;
        let xss: Vec<Vec<C::Obj>> = inners.iter().map(|g| g.source.clone()).collect();
        let payload = if self.mutation == Some(Mutation::DropPhi) {
            body
        } else {
            let phi = self.phi(&outer.source, &xss)?;
            self.smc.compose(&body, &phi)?
        };
        Ok(MultiArrow {
            source: xss.concat(),
            target: outer.target.clone(),
            payload,
        })
    }

    fn act(&self, f: &Self::Arrow, s: &Permutation) -> Result<Self::Arrow> {
        let theta = self.theta(&f.source, s)?;
        Ok(MultiArrow {
            source: s.act_inverse(&f.source)?,
            target: f.target.clone(),
            payload: self.smc.compose(&f.payload, &theta)?,
        })
    }

    fn validate(&self, f: &Self::Arrow) -> Result<()> {
        let expected = self.kappa_bar(&f.source);
        let dom = self.smc.dom(&f.payload);
        let cod = self.smc.cod(&f.payload);
        if dom != expected || cod != f.target {
            return Err(Error::EndpointMismatch(format!(
                "payload {dom:?} -> {cod:?} does not match {expected:?} -> {:?}",
                f.target
            )));
        }
        Ok(())
    }
}

impl<C: FiniteSmc, K: KappaFamily<C::Obj>> FiniteMulticategory for Underlying<C, K> {
    fn hom(&self, sources: &[C::Obj], target: &C::Obj) -> Vec<Self::Arrow> {
        self.smc
            .hom(&self.kappa_bar(sources), target)
            .into_iter()
            .map(|payload| MultiArrow {
                source: sources.to_vec(),
                target: target.clone(),
                payload,
            })
            .collect()
    }

    fn hom_len(&self, sources: &[C::Obj], target: &C::Obj) -> u64 {
        self.smc.hom_len(&self.kappa_bar(sources), target)
    }

    fn hom_nth(&self, sources: &[C::Obj], target: &C::Obj, i: u64) -> Option<Self::Arrow> {
        let payload = self.smc.hom_nth(&self.kappa_bar(sources), target, i)?;
        Some(MultiArrow {
            source: sources.to_vec(),
            target: target.clone(),
            payload,
        })
    }
}
