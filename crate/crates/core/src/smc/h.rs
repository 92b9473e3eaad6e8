//! `H`, the free symmetric monoidal category on one object.
//!
//! Objects are the shapes of [`ZObject`]; a morphism between two objects of
//! the same arity `n` is an element of `Σ_n`, read as a wiring that sends the
//! `i`-th marked leaf of the source to the `p(i)`-th marked leaf of the
//! target. There are no morphisms between different arities. The associator
//! and unitors are identity permutations and the braiding is `τ⟨n,m⟩`.

use std::fmt::{self, Write as _};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::operad::YObject;
use crate::shapes::{Paren, ZObject};
use crate::symgrp::Permutation;

use super::{eval_obj, FiniteSmc, Smc};

pub type HObject = ZObject;

#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct HMorphism {
    source: HObject,
    target: HObject,
    perm: Permutation,
}

impl HMorphism {
    pub fn new(source: HObject, target: HObject, perm: Permutation) -> Result<Self> {
        if source.arity() != perm.degree() || target.arity() != perm.degree() {
            return Err(Error::ArityMismatch {
                expected: perm.degree(),
                found: if source.arity() != perm.degree() {
                    source.arity()
                } else {
                    target.arity()
                },
            });
        }
        Ok(HMorphism {
            source,
            target,
            perm,
        })
    }

    pub fn source(&self) -> &HObject {
        &self.source
    }

    pub fn target(&self) -> &HObject {
        &self.target
    }

    pub fn perm(&self) -> &Permutation {
        &self.perm
    }

    fn structural(source: HObject, target: HObject, perm: Permutation) -> Self {
        debug_assert_eq!(source.arity(), perm.degree());
        debug_assert_eq!(target.arity(), perm.degree());
        HMorphism {
            source,
            target,
            perm,
        }
    }
}

impl fmt::Debug for HMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:?} --{:?}--> {:?}",
            self.source, self.perm, self.target
        )
    }
}

impl<'de> Deserialize<'de> for HMorphism {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            source: HObject,
            target: HObject,
            perm: Permutation,
        }
        let r = Repr::deserialize(deserializer)?;
        HMorphism::new(r.source, r.target, r.perm).map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct FreeSmc;

impl Smc for FreeSmc {
    type Obj = HObject;
    type Mor = HMorphism;

    fn dom(&self, f: &HMorphism) -> HObject {
        f.source.clone()
    }

    fn cod(&self, f: &HMorphism) -> HObject {
        f.target.clone()
    }

    fn id(&self, a: &HObject) -> HMorphism {
        HMorphism::structural(a.clone(), a.clone(), Permutation::identity(a.arity()))
    }

    fn compose(&self, g: &HMorphism, f: &HMorphism) -> Result<HMorphism> {
        if f.target != g.source {
            return Err(Error::EndpointMismatch(format!(
                "cannot compose {g:?} after {f:?}"
            )));
        }
        Ok(HMorphism::structural(
            f.source.clone(),
            g.target.clone(),
            g.perm.compose(&f.perm)?,
        ))
    }

    fn unit(&self) -> HObject {
        ZObject::unit()
    }

    fn tensor(&self, a: &HObject, b: &HObject) -> HObject {
        a.tensor(b)
    }

    fn tensor_mor(&self, f: &HMorphism, g: &HMorphism) -> HMorphism {
        HMorphism::structural(
            f.source.tensor(&g.source),
            f.target.tensor(&g.target),
            Permutation::block_sum([&f.perm, &g.perm]),
        )
    }

    fn associator(&self, a: &HObject, b: &HObject, c: &HObject) -> HMorphism {
        let n = a.arity() + b.arity() + c.arity();
        HMorphism::structural(
            a.tensor(b).tensor(c),
            a.tensor(&b.tensor(c)),
            Permutation::identity(n),
        )
    }

    fn associator_inv(&self, a: &HObject, b: &HObject, c: &HObject) -> HMorphism {
        let n = a.arity() + b.arity() + c.arity();
        HMorphism::structural(
            a.tensor(&b.tensor(c)),
            a.tensor(b).tensor(c),
            Permutation::identity(n),
        )
    }

    fn braid(&self, a: &HObject, b: &HObject) -> HMorphism {
        HMorphism::structural(
            a.tensor(b),
            b.tensor(a),
            Permutation::block_transposition(a.arity(), b.arity()),
        )
    }

    fn right_unitor(&self, a: &HObject) -> HMorphism {
        HMorphism::structural(
            a.tensor(&self.unit()),
            a.clone(),
            Permutation::identity(a.arity()),
        )
    }

    fn right_unitor_inv(&self, a: &HObject) -> HMorphism {
        HMorphism::structural(
            a.clone(),
            a.tensor(&self.unit()),
            Permutation::identity(a.arity()),
        )
    }

    fn inverse(&self, f: &HMorphism) -> Option<HMorphism> {
        Some(HMorphism::structural(
            f.target.clone(),
            f.source.clone(),
            f.perm.inverse(),
        ))
    }

    fn canonical_iso(&self, a: &YObject, b: &YObject, xs: &[HObject]) -> Result<HMorphism> {
        wire_can_iso(a, b, xs)
    }
}

impl FiniteSmc for FreeSmc {
    fn hom(&self, a: &HObject, b: &HObject) -> Vec<HMorphism> {
        if a.arity() != b.arity() {
            return Vec::new();
        }
        Permutation::all(a.arity())
            .map(|p| HMorphism::structural(a.clone(), b.clone(), p))
            .collect()
    }

    fn hom_len(&self, a: &HObject, b: &HObject) -> u64 {
        if a.arity() == b.arity() {
            Permutation::count(a.arity())
        } else {
            0
        }
    }

    fn hom_nth(&self, a: &HObject, b: &HObject, i: u64) -> Option<HMorphism> {
        (i < self.hom_len(a, b))
            .then(|| HMorphism::structural(a.clone(), b.clone(), Permutation::nth(a.arity(), i)))
    }

    fn size(&self, a: &HObject) -> usize {
        a.width()
    }
}

/// Labels the marked leaves of `y(xs)` by `(variable, marked leaf of x_v)`.
fn wire_labels(y: &YObject, xs: &[HObject]) -> Vec<(usize, usize)> {
    let slot_to_var = y.sigma().inverse();
    let marks = y.z().marks();
    let mut labels = Vec::new();
    let mut marked = 0;
    for leaf in 0..y.width() {
        if marks.contains_zero_based(leaf) {
            let v = slot_to_var.map(marked);
            marked += 1;
            labels.extend((0..xs[v].arity()).map(|r| (v, r)));
        }
    }
    labels
}

/// The canonical isomorphism `a(xs) → b(xs)` computed directly by following
/// each marked leaf of each `x_v` from its position in `a(xs)` to its
/// position in `b(xs)`.
pub fn wire_can_iso(a: &YObject, b: &YObject, xs: &[HObject]) -> Result<HMorphism> {
    let source = eval_obj(&FreeSmc, a, xs)?;
    let target = eval_obj(&FreeSmc, b, xs)?;
    let from = wire_labels(a, xs);
    let to = wire_labels(b, xs);
    let images = from
        .iter()
        .map(|l| {
            to.iter()
                .position(|m| m == l)
                .expect("same labels on both sides")
        })
        .collect();
    HMorphism::new(source, target, Permutation::from_zero_based(images)?)
}

/// A Graphviz digraph of all morphisms between the given objects.
pub fn hom_dot(objects: &[HObject]) -> String {
    let mut out = String::from("digraph H {\n  rankdir=LR;\n");
    for (i, a) in objects.iter().enumerate() {
        let _ = writeln!(out, "  n{i} [label=\"{a:?}\"];");
    }
    for (i, a) in objects.iter().enumerate() {
        for (j, b) in objects.iter().enumerate() {
            for f in FreeSmc.hom(a, b) {
                let _ = writeln!(out, "  n{i} -> n{j} [label=\"{:?}\"];", f.perm);
            }
        }
    }
    out.push_str("}\n");
    out
}

/// Candidate targets for multimorphisms out of `xs`: the objects of
/// `universe` whose arity is the total arity of `xs`, or the left-nested
/// fully marked shape of that arity when the universe has none.
pub fn arity_targets(universe: Vec<HObject>) -> impl Fn(&[HObject]) -> Vec<HObject> + Sync {
    move |xs| {
        let n: usize = xs.iter().map(ZObject::arity).sum();
        let found: Vec<HObject> = universe
            .iter()
            .filter(|o| o.arity() == n)
            .cloned()
            .collect();
        if !found.is_empty() {
            return found;
        }
        match Paren::left_nested(n) {
            Some(tree) => vec![ZObject::fully_marked(tree)],
            None => vec![ZObject::unit()],
        }
    }
}

/// The generating object `(1, {1})`.
pub fn generator() -> HObject {
    ZObject::generator()
}

/// `(1·1, {1,2})`, the tensor square of the generator.
pub fn square() -> HObject {
    ZObject::fully_marked(Paren::node(Paren::Leaf, Paren::Leaf))
}
