//! Checks for lax functors, multifunctors and the passage between them.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::multicat::laws::Universe;
use crate::multicat::{FiniteMulticategory, Multicategory};
use crate::operad::{default_kappa, YObject};
use crate::report::{check_law, expect, expect_eq, index_tuples, Check, LawReport, SuiteReport};
use crate::smc::{eval_obj_mor, FiniteSmc, Smc};

use super::multi::{ArrowOf, Multifunctor};
use super::{from_kappa, kappa_bar, xi_tower, LaxFunctor, MorOf, ObjOf};

fn rng(seed: u64, law: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ law.wrapping_mul(0xD6E8_FEB8_6659_FD93))
}

/// `F(c_a) ∘ ξ ∘ (1 ⊕ η) = c_{Fa}`.
pub fn unit_coherence<F: LaxFunctor>(f: &F, a: &ObjOf<F::Source>) -> Check {
    let (c, d) = (f.source(), f.target());
    let fa = f.obj(a);
    let lhs = d.compose_path(&[
        d.tensor_mor(&d.id(&fa), &f.eta()?),
        f.xi(a, &c.unit())?,
        f.mor(&c.right_unitor(a))?,
    ])?;
    expect_eq(&lhs, &d.right_unitor(&fa))
}

/// `F(α) ∘ ξ ∘ (ξ ⊕ 1) = ξ ∘ (1 ⊕ ξ) ∘ α`.
pub fn associativity_coherence<F: LaxFunctor>(
    f: &F,
    a: &ObjOf<F::Source>,
    b: &ObjOf<F::Source>,
    x: &ObjOf<F::Source>,
) -> Check {
    let (c, d) = (f.source(), f.target());
    let (fa, fb, fx) = (f.obj(a), f.obj(b), f.obj(x));
    let lhs = d.compose_path(&[
        d.tensor_mor(&f.xi(a, b)?, &d.id(&fx)),
        f.xi(&c.tensor(a, b), x)?,
        f.mor(&c.associator(a, b, x))?,
    ])?;
    let rhs = d.compose_path(&[
        d.associator(&fa, &fb, &fx),
        d.tensor_mor(&d.id(&fa), &f.xi(b, x)?),
        f.xi(a, &c.tensor(b, x))?,
    ])?;
    expect_eq(&lhs, &rhs)
}

/// `F(τ) ∘ ξ = ξ ∘ τ`.
pub fn transposition_coherence<F: LaxFunctor>(
    f: &F,
    a: &ObjOf<F::Source>,
    b: &ObjOf<F::Source>,
) -> Check {
    let (c, d) = (f.source(), f.target());
    let lhs = d.compose(&f.mor(&c.braid(a, b))?, &f.xi(a, b)?)?;
    let rhs = d.compose(&f.xi(b, a)?, &d.braid(&f.obj(a), &f.obj(b)))?;
    expect_eq(&lhs, &rhs)
}

/// The names of the coherence diagrams that fail somewhere on `witnesses`.
pub fn coherence_failures<F: LaxFunctor>(f: &F, witnesses: &[ObjOf<F::Source>]) -> Vec<String> {
    let mut failed = Vec::new();
    if witnesses.iter().any(|a| unit_coherence(f, a).is_err()) {
        failed.push("unit-coherence".to_string());
    }
    let pairs = || {
        witnesses
            .iter()
            .flat_map(|a| witnesses.iter().map(move |b| (a, b)))
    };
    if pairs().any(|(a, b)| {
        witnesses
            .iter()
            .any(|x| associativity_coherence(f, a, b, x).is_err())
    }) {
        failed.push("associativity-coherence".to_string());
    }
    if pairs().any(|(a, b)| transposition_coherence(f, a, b).is_err()) {
        failed.push("transposition-coherence".to_string());
    }
    failed
}

/// A seeded morphism out of `a` into one of `objects`, if there is one.
fn draw<C: FiniteSmc>(
    c: &C,
    a: &C::Obj,
    objects: &[C::Obj],
    rng: &mut ChaCha8Rng,
) -> Option<C::Mor> {
    let mut order: Vec<&C::Obj> = objects.iter().collect();
    order.shuffle(rng);
    order.into_iter().find_map(|b| match c.hom_len(a, b) {
        0 => None,
        n => c.hom_nth(a, b, rng.gen_range(0..n)),
    })
}

#[derive(Serialize)]
struct Square<M> {
    f: M,
    g: M,
}

/// Functoriality, naturality of `ξ`, and the three coherence diagrams of
/// `f` on tuples drawn from `objects`. Morphisms are seeded draws.
pub fn lax_functor_suite<F>(f: &F, objects: &[ObjOf<F::Source>], seed: u64) -> SuiteReport
where
    F: LaxFunctor,
    F::Source: FiniteSmc,
{
    let (c, d) = (f.source(), f.target());
    let pairs: Vec<(_, _)> = objects
        .iter()
        .flat_map(|a| objects.iter().map(move |b| (a.clone(), b.clone())))
        .collect();
    let triples: Vec<[ObjOf<F::Source>; 3]> = pairs
        .iter()
        .flat_map(|(a, b)| {
            objects
                .iter()
                .map(move |x| [a.clone(), b.clone(), x.clone()])
        })
        .collect();

    let endpoints = check_law("structure-endpoints", pairs.clone(), |(a, b)| {
        let eta = f.eta()?;
        expect_eq(&(d.dom(&eta), d.cod(&eta)), &(d.unit(), f.obj(&c.unit())))?;
        let xi = f.xi(a, b)?;
        let expected = (d.tensor(&f.obj(a), &f.obj(b)), f.obj(&c.tensor(a, b)));
        expect_eq(&(d.dom(&xi), d.cod(&xi)), &expected)
    });
    let identities = check_law("functor-identity", objects.to_vec(), |a| {
        expect_eq(&f.mor(&c.id(a))?, &d.id(&f.obj(a)))
    });
    let mut r = rng(seed, 1);
    let chains: Vec<Square<MorOf<F::Source>>> = objects
        .iter()
        .filter_map(|a| {
            let g = draw(c, a, objects, &mut r)?;
            let h = draw(c, &c.cod(&g), objects, &mut r)?;
            Some(Square { f: g, g: h })
        })
        .collect();
    let composition = check_law("functor-composition", chains, |s| {
        let lhs = f.mor(&c.compose(&s.g, &s.f)?)?;
        expect_eq(&lhs, &d.compose(&f.mor(&s.g)?, &f.mor(&s.f)?)?)
    });
    let mut r = rng(seed, 2);
    let squares: Vec<Square<MorOf<F::Source>>> = pairs
        .iter()
        .filter_map(|(a, b)| {
            Some(Square {
                f: draw(c, a, objects, &mut r)?,
                g: draw(c, b, objects, &mut r)?,
            })
        })
        .collect();
    let natural = check_law("xi-natural", squares, |s| {
        let (a, b) = (c.dom(&s.f), c.dom(&s.g));
        let (a2, b2) = (c.cod(&s.f), c.cod(&s.g));
        let lhs = d.compose(&f.mor(&c.tensor_mor(&s.f, &s.g))?, &f.xi(&a, &b)?)?;
        let rhs = d.compose(
            &f.xi(&a2, &b2)?,
            &d.tensor_mor(&f.mor(&s.f)?, &f.mor(&s.g)?),
        )?;
        expect_eq(&lhs, &rhs)
    });
    let unit = check_law("unit-coherence", objects.to_vec(), |a| unit_coherence(f, a));
    let assoc = check_law("associativity-coherence", triples, |[a, b, x]| {
        associativity_coherence(f, a, b, x)
    });
    let braid = check_law("transposition-coherence", pairs, |(a, b)| {
        transposition_coherence(f, a, b)
    });
    SuiteReport::new(
        "lax-functor",
        vec![
            endpoints,
            identities,
            composition,
            natural,
            unit,
            assoc,
            braid,
        ],
    )
}

#[derive(Clone, Serialize)]
struct Split<O> {
    xs: Vec<O>,
    sizes: Vec<usize>,
}

/// `φ⟨j_s⟩: κ_j → γ(κ_n; κ_{j_1}, …, κ_{j_n})` evaluated at `xs`.
fn regroup<C: Smc>(c: &C, xs: &[C::Obj], sizes: &[usize]) -> crate::Result<C::Mor> {
    let parts: Vec<YObject> = sizes.iter().map(|&k| default_kappa(k)).collect();
    from_kappa(c, &default_kappa(sizes.len()).gamma(&parts)?, xs)
}

fn chunks<'x, O>(xs: &'x [O], sizes: &[usize]) -> Vec<&'x [O]> {
    let mut rest = xs;
    sizes
        .iter()
        .map(|&k| {
            let (here, tail) = rest.split_at(k);
            rest = tail;
            here
        })
        .collect()
}

/// `F(φ) ∘ ξ_j = ξ ∘ (ξ_q ⊕ ξ_r) ∘ φ` for `φ = φ_{qr}`.
pub fn xi_split_square<F: LaxFunctor>(f: &F, xs: &[ObjOf<F::Source>], q: usize) -> Check {
    let (c, d) = (f.source(), f.target());
    let (left, right) = xs.split_at(q);
    let sizes = [q, xs.len() - q];
    let fx: Vec<_> = xs.iter().map(|x| f.obj(x)).collect();
    let lhs = d.compose(&f.mor(&regroup(c, xs, &sizes)?)?, &xi_tower(f, xs)?)?;
    let rhs = d.compose_path(&[
        regroup(d, &fx, &sizes)?,
        d.tensor_mor(&xi_tower(f, left)?, &xi_tower(f, right)?),
        f.xi(&kappa_bar(c, left), &kappa_bar(c, right))?,
    ])?;
    expect_eq(&lhs, &rhs)
}

/// `F(φ⟨j_s⟩) ∘ ξ_j = ξ_n ∘ κ_n⟨ξ_{j_s}⟩ ∘ φ⟨j_s⟩`.
pub fn xi_regroup_square<F: LaxFunctor>(f: &F, xs: &[ObjOf<F::Source>], sizes: &[usize]) -> Check {
    let (c, d) = (f.source(), f.target());
    let parts = chunks(xs, sizes);
    let fx: Vec<_> = xs.iter().map(|x| f.obj(x)).collect();
    let lhs = d.compose(&f.mor(&regroup(c, xs, sizes)?)?, &xi_tower(f, xs)?)?;
    let inner = parts
        .iter()
        .map(|p| xi_tower(f, p))
        .collect::<crate::Result<Vec<_>>>()?;
    let outer: Vec<_> = parts.iter().map(|p| kappa_bar(c, p)).collect();
    let rhs = d.compose_path(&[
        regroup(d, &fx, sizes)?,
        eval_obj_mor(d, &default_kappa(sizes.len()), &inner)?,
        xi_tower(f, &outer)?,
    ])?;
    expect_eq(&lhs, &rhs)
}

/// Sequences of `n` non-negative integers summing to `total`.
fn compositions_of(total: usize, n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    (0..=total)
        .flat_map(|k| {
            compositions_of(total - k, n - 1)
                .into_iter()
                .map(move |mut rest| {
                    rest.insert(0, k);
                    rest
                })
        })
        .collect()
}

/// The `ξ_n` tower on every tuple of `objects` with at most `max_j` entries:
/// its endpoints, the binary splitting square for every split, and the
/// `n`-fold regrouping square for every decomposition into `1..=max_n`
/// consecutive blocks.
pub fn xi_tower_suite<F: LaxFunctor>(
    f: &F,
    objects: &[ObjOf<F::Source>],
    max_j: usize,
    max_n: usize,
) -> SuiteReport {
    let (c, d) = (f.source(), f.target());
    let tuples: Vec<Vec<ObjOf<F::Source>>> = (0..=max_j)
        .flat_map(|j| index_tuples(&vec![0; objects.len()], j, 0))
        .map(|t| t.into_iter().map(|i| objects[i].clone()).collect())
        .collect();
    let endpoints = check_law("xi-endpoints", tuples.clone(), |xs| {
        let xi = xi_tower(f, xs)?;
        let fx: Vec<_> = xs.iter().map(|x| f.obj(x)).collect();
        expect_eq(&d.dom(&xi), &kappa_bar(d, &fx))?;
        expect_eq(&d.cod(&xi), &f.obj(&kappa_bar(c, xs)))?;
        if xs.len() == 1 {
            expect_eq(&xi, &d.id(&fx[0]))?;
        }
        if xs.len() == 2 {
            expect_eq(&xi, &f.xi(&xs[0], &xs[1])?)?;
        }
        Ok(())
    });
    let splits: Vec<Split<ObjOf<F::Source>>> = tuples
        .iter()
        .flat_map(|xs| {
            compositions_of(xs.len(), 2).into_iter().map(|sizes| Split {
                xs: xs.clone(),
                sizes,
            })
        })
        .collect();
    let binary = check_law("xi-split", splits, |s| {
        xi_split_square(f, &s.xs, s.sizes[0])
    });
    let regroupings: Vec<Split<ObjOf<F::Source>>> = tuples
        .iter()
        .flat_map(|xs| {
            (1..=max_n).flat_map(move |n| {
                compositions_of(xs.len(), n)
                    .into_iter()
                    .map(move |sizes| Split {
                        xs: xs.clone(),
                        sizes,
                    })
            })
        })
        .collect();
    let nfold = check_law("xi-regroup", regroupings, |s| {
        xi_regroup_square(f, &s.xs, &s.sizes)
    });
    SuiteReport::new("xi-tower", vec![endpoints, binary, nfold])
}

#[derive(Serialize)]
struct Acted<A> {
    f: A,
    s: crate::symgrp::Permutation,
}

/// Preservation of identities, composition and the symmetric group action,
/// on arrows of the source drawn from `u`.
pub fn multifunctor_suite<F>(f: &F, u: &Universe<F::Source>) -> SuiteReport
where
    F: Multifunctor,
    F::Source: FiniteMulticategory,
{
    let (m, n) = (f.source(), f.target());
    let identities = check_law("preserves-identity", u.objects.clone(), |a| {
        expect_eq(&f.arrow(&m.identity(a))?, &n.identity(&f.obj(a)))
    });
    let arrows = u.arrows(401);
    let valid = check_law("lands-in-target", arrows.clone(), |g| {
        let image = f.arrow(g)?;
        n.validate(&image)?;
        let sources: Vec<_> = m.sources(g).iter().map(|a| f.obj(a)).collect();
        expect_eq(&n.sources(&image), &sources)?;
        expect_eq(&n.target(&image), &f.obj(&m.target(g)))
    });
    let composites = check_law("preserves-composition", u.compositions(402), |(g, hs)| {
        let lhs = f.arrow(&m.compose(g, hs)?)?;
        let images = hs
            .iter()
            .map(|h| f.arrow(h))
            .collect::<crate::Result<Vec<_>>>()?;
        expect_eq(&lhs, &n.compose(&f.arrow(g)?, &images)?)
    });
    let mut r = u.rng(403);
    let acted: Vec<Acted<ArrowOf<F::Source>>> = arrows
        .into_iter()
        .flat_map(|g| {
            u.perms(m.sources(&g).len(), &mut r)
                .into_iter()
                .map(|s| Acted { f: g.clone(), s })
                .collect::<Vec<_>>()
        })
        .collect();
    let actions = check_law("preserves-action", acted, |i| {
        expect_eq(
            &f.arrow(&m.act(&i.f, &i.s)?)?,
            &n.act(&f.arrow(&i.f)?, &i.s)?,
        )
    });
    SuiteReport::new("multifunctor", vec![identities, valid, composites, actions])
}

#[derive(Serialize)]
struct Probe<O, M> {
    a: O,
    b: O,
    f: Option<M>,
}

/// `f` and `g` have the same object map, morphism map, `η` and `ξ` on
/// `objects` and on seeded morphisms out of them.
pub fn same_lax_data<F, G>(f: &F, g: &G, objects: &[ObjOf<F::Source>], seed: u64) -> LawReport
where
    F: LaxFunctor,
    F::Source: FiniteSmc,
    G: LaxFunctor<Source = F::Source, Target = F::Target>,
{
    let c = f.source();
    let mut r = rng(seed, 3);
    let probes: Vec<Probe<_, _>> = objects
        .iter()
        .flat_map(|a| objects.iter().map(move |b| (a, b)))
        .map(|(a, b)| Probe {
            a: a.clone(),
            b: b.clone(),
            f: draw(c, a, objects, &mut r),
        })
        .collect();
    check_law("lax-data", probes, |p| {
        expect_eq(&f.eta()?, &g.eta()?)?;
        expect_eq(&f.obj(&p.a), &g.obj(&p.a))?;
        expect_eq(&f.xi(&p.a, &p.b)?, &g.xi(&p.a, &p.b)?)?;
        match &p.f {
            Some(m) => expect_eq(&f.mor(m)?, &g.mor(m)?),
            None => Ok(()),
        }
    })
}

/// `f` and `g` agree on the objects and arrows of `u`.
pub fn same_multifunctor<F, G>(f: &F, g: &G, u: &Universe<F::Source>) -> LawReport
where
    F: Multifunctor,
    F::Source: FiniteMulticategory,
    G: Multifunctor<Source = F::Source, Target = F::Target>,
{
    let objects = u.objects.clone();
    let arrows = u.arrows(404);
    let mut report = check_law("multifunctor-data", arrows, |a| {
        expect_eq(&f.arrow(a)?, &g.arrow(a)?)
    });
    let objs = check_law("multifunctor-objects", objects, |a| {
        expect(f.obj(a) == g.obj(a), "object map")
    });
    report.checked += objs.checked;
    report.failed += objs.failed;
    report.counterexample = report.counterexample.or(objs.counterexample);
    report
}
