//! The multicategory axioms and the properties of canonical isomorphisms,
//! checked on a finite universe of objects.
//!
//! Every composition shape within the length bound is visited. For each
//! shape the tuples of objects are enumerated exhaustively when there are at
//! most `per_shape` of them and sampled (without repetition) from a seeded
//! generator otherwise; each hom-set contributes one seeded arrow. Group
//! elements are exhaustive up to `Σ_3` and sampled above.

use rand::seq::{index, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::Result;
use crate::mutation::Mutation;
use crate::operad::laws::perm_tuples;
use crate::operad::KappaFamily;
use crate::report::{check_law, expect, expect_eq, Check, LawReport, SuiteReport};
use crate::smc::{FiniteSmc, Smc};
use crate::symgrp::Permutation;

use super::{CanonicalIso, FiniteMulticategory, MultiArrow, Underlying};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct MultiBounds {
    /// Longest source tuple of any arrow in a diagram.
    pub max_len: usize,
    /// Object tuples visited per composition shape before sampling.
    pub per_shape: usize,
    /// Group elements (or tuples of them) visited per diagram above `Σ_3`.
    pub max_perms: usize,
    pub seed: u64,
}

impl Default for MultiBounds {
    fn default() -> Self {
        MultiBounds {
            max_len: 4,
            per_shape: 36,
            max_perms: 6,
            seed: 0,
        }
    }
}

pub type Targets<'a, O> = dyn Fn(&[O]) -> Vec<O> + Sync + 'a;

/// The objects arrows are drawn between.
pub struct Universe<'a, M: FiniteMulticategory> {
    pub m: &'a M,
    pub objects: Vec<M::Obj>,
    /// Candidate targets for a source tuple.
    pub targets: &'a Targets<'a, M::Obj>,
    pub bounds: MultiBounds,
}

impl<'a, M: FiniteMulticategory> Universe<'a, M> {
    pub fn rng(&self, law: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.bounds.seed ^ law.wrapping_mul(0xA24B_AED4_963E_E407))
    }

    /// Object tuples of the given length.
    fn tuples(&self, len: usize, rng: &mut ChaCha8Rng) -> Vec<Vec<M::Obj>> {
        let k = self.objects.len();
        let decode = |mut code: usize| {
            let mut t = Vec::with_capacity(len);
            for _ in 0..len {
                t.push(self.objects[code % k].clone());
                code /= k;
            }
            t
        };
        if len == 0 {
            return vec![Vec::new()];
        }
        if k == 0 {
            return Vec::new();
        }
        match k.checked_pow(len as u32) {
            Some(total) if total <= self.bounds.per_shape => (0..total).map(decode).collect(),
            Some(total) => index::sample(rng, total, self.bounds.per_shape)
                .into_iter()
                .map(decode)
                .collect(),
            None => (0..self.bounds.per_shape)
                .map(|_| {
                    (0..len)
                        .map(|_| self.objects[rng.gen_range(0..k)].clone())
                        .collect()
                })
                .collect(),
        }
    }

    /// One arrow out of `sources`, if any candidate target admits one.
    fn draw(&self, sources: &[M::Obj], rng: &mut ChaCha8Rng) -> Option<M::Arrow> {
        let mut targets = (self.targets)(sources);
        targets.shuffle(rng);
        targets
            .iter()
            .find_map(|t| match self.m.hom_len(sources, t) {
                0 => None,
                len => self.m.hom_nth(sources, t, rng.gen_range(0..len)),
            })
    }

    /// Arrows out of consecutive chunks of `sources`.
    fn draw_chunks(
        &self,
        sources: &[M::Obj],
        sizes: &[usize],
        rng: &mut ChaCha8Rng,
    ) -> Option<Vec<M::Arrow>> {
        let mut rest = sources;
        let mut out = Vec::with_capacity(sizes.len());
        for &k in sizes {
            let (chunk, tail) = rest.split_at(k);
            out.push(self.draw(chunk, rng)?);
            rest = tail;
        }
        Some(out)
    }

    /// Elements of `Σ_n`: all of them up to `Σ_3`, a seeded sample above.
    pub fn perms(&self, n: usize, rng: &mut ChaCha8Rng) -> Vec<Permutation> {
        if n <= 3 {
            Permutation::all(n).collect()
        } else {
            let total = Permutation::count(n) as usize;
            index::sample(rng, total, self.bounds.max_perms.min(total))
                .into_iter()
                .map(|i| Permutation::nth(n, i as u64))
                .collect()
        }
    }

    fn perm_tuples(&self, sizes: &[usize], rng: &mut ChaCha8Rng) -> Vec<Vec<Permutation>> {
        let all = perm_tuples(sizes);
        if sizes.iter().all(|&k| k <= 3) && all.len() <= 36 {
            return all;
        }
        all.choose_multiple(rng, self.bounds.max_perms)
            .cloned()
            .collect()
    }

    /// Single arrows with sources of every length up to the bound.
    pub fn arrows(&self, law: u64) -> Vec<M::Arrow> {
        let mut rng = self.rng(law);
        let mut out = Vec::new();
        for n in 0..=self.bounds.max_len {
            for xs in self.tuples(n, &mut rng) {
                out.extend(self.draw(&xs, &mut rng));
            }
        }
        out
    }

    /// Composable pairs `(f; g_1, …, g_n)`.
    pub fn compositions(&self, law: u64) -> Vec<(M::Arrow, Vec<M::Arrow>)> {
        let mut rng = self.rng(law);
        let mut out = Vec::new();
        let l = self.bounds.max_len;
        for n in 0..=l {
            for sizes in bounded_compositions(n, l) {
                let total: usize = sizes.iter().sum();
                for xs in self.tuples(total, &mut rng) {
                    let Some(gs) = self.draw_chunks(&xs, &sizes, &mut rng) else {
                        continue;
                    };
                    let ys: Vec<M::Obj> = gs.iter().map(|g| self.m.target(g)).collect();
                    if let Some(f) = self.draw(&ys, &mut rng) {
                        out.push((f, gs));
                    }
                }
            }
        }
        out
    }

    /// Composable triples `(f; g⃗; h⃗)`.
    pub fn triples(&self, law: u64) -> Vec<Triple<M::Arrow>> {
        let mut rng = self.rng(law);
        let mut out = Vec::new();
        let l = self.bounds.max_len;
        for n in 0..=l {
            for middle in bounded_compositions(n, l) {
                let j: usize = middle.iter().sum();
                for inner in bounded_compositions(j, l) {
                    let k: usize = inner.iter().sum();
                    for ws in self.tuples(k, &mut rng) {
                        let Some(hs) = self.draw_chunks(&ws, &inner, &mut rng) else {
                            continue;
                        };
                        let xs: Vec<M::Obj> = hs.iter().map(|h| self.m.target(h)).collect();
                        let Some(gs) = self.draw_chunks(&xs, &middle, &mut rng) else {
                            continue;
                        };
                        let ys: Vec<M::Obj> = gs.iter().map(|g| self.m.target(g)).collect();
                        if let Some(f) = self.draw(&ys, &mut rng) {
                            out.push(Triple { f, gs, hs });
                        }
                    }
                }
            }
        }
        out
    }
}

/// Sequences of `n` non-negative integers with sum at most `max`.
fn bounded_compositions(n: usize, max: usize) -> Vec<Vec<usize>> {
    (0..n).fold(vec![Vec::new()], |acc, _| {
        acc.into_iter()
            .flat_map(|prefix: Vec<usize>| {
                let used: usize = prefix.iter().sum();
                (0..=max - used).map(move |k| {
                    let mut next = prefix.clone();
                    next.push(k);
                    next
                })
            })
            .collect()
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct Triple<A> {
    pub f: A,
    pub gs: Vec<A>,
    pub hs: Vec<A>,
}

#[derive(Serialize)]
struct Acted<A> {
    f: A,
    s: Permutation,
    t: Permutation,
}

#[derive(Serialize)]
struct Equivariance<A> {
    f: A,
    gs: Vec<A>,
    perms: Vec<Permutation>,
}

fn valid<M: FiniteMulticategory>(m: &M, f: &M::Arrow) -> Check {
    m.validate(f)?;
    Ok(())
}

/// Runs the five law families on `u`.
pub fn multicat_law_suite<M: FiniteMulticategory>(
    u: &Universe<M>,
    mutation: Option<Mutation>,
) -> SuiteReport {
    let laws = vec![
        right_action(u),
        unit(u),
        associativity(u),
        first_equivariance(u, mutation == Some(Mutation::DropBlockPerm)),
        second_equivariance(u),
    ];
    SuiteReport::new("multicategory", laws)
}

fn right_action<M: FiniteMulticategory>(u: &Universe<M>) -> LawReport {
    let m = u.m;
    let mut rng = u.rng(101);
    let instances: Vec<Acted<M::Arrow>> = u
        .arrows(1)
        .into_iter()
        .flat_map(|f| {
            let n = m.sources(&f).len();
            let ss = u.perms(n, &mut rng);
            let ts = u.perms(n, &mut rng);
            ss.iter()
                .flat_map(|s| {
                    ts.iter().map(|t| Acted {
                        f: f.clone(),
                        s: s.clone(),
                        t: t.clone(),
                    })
                })
                .collect::<Vec<_>>()
        })
        .collect();
    check_law("right-action", instances, |i| {
        let n = m.sources(&i.f).len();
        expect_eq(&m.act(&i.f, &Permutation::identity(n))?, &i.f)?;
        let stepwise = m.act(&m.act(&i.f, &i.s)?, &i.t)?;
        valid(m, &stepwise)?;
        expect_eq(&stepwise, &m.act(&i.f, &i.s.compose(&i.t)?)?)
    })
}

fn unit<M: FiniteMulticategory>(u: &Universe<M>) -> LawReport {
    let m = u.m;
    check_law("unit", u.arrows(2), |f| {
        let ids: Vec<M::Arrow> = m.sources(f).iter().map(|a| m.identity(a)).collect();
        let right = m.compose(f, &ids)?;
        valid(m, &right)?;
        expect_eq(&right, f)?;
        let left = m.compose(&m.identity(&m.target(f)), std::slice::from_ref(f))?;
        valid(m, &left)?;
        expect_eq(&left, f)
    })
}

fn associativity<M: FiniteMulticategory>(u: &Universe<M>) -> LawReport {
    let m = u.m;
    check_law("associativity", u.triples(3), |t| {
        let lhs = m.compose(&m.compose(&t.f, &t.gs)?, &t.hs)?;
        valid(m, &lhs)?;
        let mut rest = t.hs.as_slice();
        let mut grouped = Vec::with_capacity(t.gs.len());
        for g in &t.gs {
            let (chunk, tail) = rest.split_at(m.sources(g).len());
            grouped.push(m.compose(g, chunk)?);
            rest = tail;
        }
        let rhs = m.compose(&t.f, &grouped)?;
        valid(m, &rhs)?;
        expect_eq(&lhs, &rhs)
    })
}

fn first_equivariance<M: FiniteMulticategory>(u: &Universe<M>, drop_block_perm: bool) -> LawReport {
    let m = u.m;
    let mut rng = u.rng(104);
    let instances: Vec<Equivariance<M::Arrow>> = u
        .compositions(4)
        .into_iter()
        .flat_map(|(f, gs)| {
            u.perms(gs.len(), &mut rng)
                .into_iter()
                .map(|s| Equivariance {
                    f: f.clone(),
                    gs: gs.clone(),
                    perms: vec![s],
                })
                .collect::<Vec<_>>()
        })
        .collect();
    check_law("equivariance-1", instances, |i| {
        let s = &i.perms[0];
        let moved = s.act_inverse(&i.gs)?;
        let lhs = m.compose(&m.act(&i.f, s)?, &moved)?;
        valid(m, &lhs)?;
        let plain = m.compose(&i.f, &i.gs)?;
        let rhs = if drop_block_perm {
            plain
        } else {
            let sizes: Vec<usize> = moved.iter().map(|g| m.sources(g).len()).collect();
            m.act(&plain, &s.block_perm(&sizes)?)?
        };
        expect_eq(&lhs, &rhs)
    })
}

fn second_equivariance<M: FiniteMulticategory>(u: &Universe<M>) -> LawReport {
    let m = u.m;
    let mut rng = u.rng(105);
    let instances: Vec<Equivariance<M::Arrow>> = u
        .compositions(5)
        .into_iter()
        .flat_map(|(f, gs)| {
            let sizes: Vec<usize> = gs.iter().map(|g| m.sources(g).len()).collect();
            u.perm_tuples(&sizes, &mut rng)
                .into_iter()
                .map(|perms| Equivariance {
                    f: f.clone(),
                    gs: gs.clone(),
                    perms,
                })
                .collect::<Vec<_>>()
        })
        .collect();
    check_law("equivariance-2", instances, |i| {
        let acted =
            i.gs.iter()
                .zip(&i.perms)
                .map(|(g, t)| m.act(g, t))
                .collect::<Result<Vec<_>>>()?;
        let lhs = m.compose(&i.f, &acted)?;
        valid(m, &lhs)?;
        let rhs = m.act(&m.compose(&i.f, &i.gs)?, &Permutation::block_sum(&i.perms))?;
        expect_eq(&lhs, &rhs)
    })
}

type Arrow<C> = MultiArrow<<C as Smc>::Obj, <C as Smc>::Mor>;

/// Checks that `iso` is a multifunctor and a bijection on hom-sets.
///
/// The arrows are drawn from `u`, which must be built on the source of the
/// isomorphism.
pub fn canonical_iso_suite<C, K, L>(
    iso: &CanonicalIso<C, K, L>,
    u: &Universe<Underlying<C, K>>,
) -> SuiteReport
where
    C: FiniteSmc,
    K: KappaFamily<C::Obj>,
    L: KappaFamily<C::Obj>,
{
    use super::Multicategory;
    let (from, to) = (iso.from(), iso.to());
    let mut rng = u.rng(201);
    let identities = check_law("preserves-identity", u.objects.clone(), |a| {
        expect_eq(&iso.apply(&from.identity(a))?, &to.identity(a))
    });
    let acted: Vec<(Arrow<C>, Permutation)> = u
        .arrows(202)
        .into_iter()
        .flat_map(|f| {
            u.perms(f.arity(), &mut rng)
                .into_iter()
                .map(|s| (f.clone(), s))
                .collect::<Vec<_>>()
        })
        .collect();
    let actions = check_law("preserves-action", acted, |(f, s)| {
        let lhs = iso.apply(&from.act(f, s)?)?;
        let rhs = to.act(&iso.apply(f)?, s)?;
        expect_eq(&lhs, &rhs)
    });
    let composites = check_law("preserves-composition", u.compositions(203), |(f, gs)| {
        let lhs = iso.apply(&from.compose(f, gs)?)?;
        let images = gs
            .iter()
            .map(|g| iso.apply(g))
            .collect::<Result<Vec<_>>>()?;
        let rhs = to.compose(&iso.apply(f)?, &images)?;
        expect_eq(&lhs, &rhs)
    });
    let homs: Vec<(Vec<C::Obj>, C::Obj)> = u
        .arrows(204)
        .into_iter()
        .map(|f| (f.source, f.target))
        .collect();
    let bijective = check_law("hom-bijection", homs, |(xs, y)| {
        let domain = from.hom(xs, y);
        let mut image = domain
            .iter()
            .map(|f| iso.apply(f))
            .collect::<Result<Vec<_>>>()?;
        let mut codomain = to.hom(xs, y);
        let key = |f: &Arrow<C>| format!("{:?}", f.payload);
        image.sort_by_key(key);
        codomain.sort_by_key(key);
        expect(image.len() == domain.len(), "image size")?;
        expect_eq(&image, &codomain)
    });
    SuiteReport::new(
        "canonical-iso",
        vec![identities, actions, composites, bijective],
    )
}

/// `κ → λ → μ` agrees with `κ → μ`, on arrows of `U_κC` drawn from `u`.
pub fn iso_triangle<C, K, L, N>(
    kl: &CanonicalIso<C, K, L>,
    lm: &CanonicalIso<C, L, N>,
    km: &CanonicalIso<C, K, N>,
    u: &Universe<Underlying<C, K>>,
) -> LawReport
where
    C: FiniteSmc,
    K: KappaFamily<C::Obj>,
    L: KappaFamily<C::Obj>,
    N: KappaFamily<C::Obj>,
{
    check_law("iso-triangle", u.arrows(301), |f| {
        expect_eq(&lm.apply(&kl.apply(f)?)?, &km.apply(f)?)
    })
}

/// The self-isomorphism of `U_κC` fixes every arrow.
pub fn iso_is_identity<C, K, L>(
    iso: &CanonicalIso<C, K, L>,
    u: &Universe<Underlying<C, K>>,
) -> LawReport
where
    C: FiniteSmc,
    K: KappaFamily<C::Obj>,
    L: KappaFamily<C::Obj>,
{
    check_law("self-iso-identity", u.arrows(302), |f| {
        expect_eq(&iso.apply(f)?, f)
    })
}
