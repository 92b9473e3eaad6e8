//! Checks for the adjunction `L ⊣ U`: both triangle identities, the
//! comonad laws of `LU`, naturality of `η` and `ν`, and the `ξ_F` cells.

use crate::free::{FreePermutative, LObject, Lifted};
use crate::functor::laws::lax_functor_suite;
use crate::functor::{
    xi_tower, Composite, DefaultUnderlying, IdentityFunctor, LaxFunctor, LaxToMulti, Multifunctor,
};
use crate::multicat::laws::Universe;
use crate::multicat::FiniteMulticategory;
use crate::mutation::Mutation;
use crate::report::{check_law, expect, expect_eq, Check, LawReport, SuiteReport};
use crate::smc::{FiniteSmc, Smc};

use super::{cell_component, nu, unit_after_counit, Counit, UnitMap};

/// Every morphism between two of the given objects.
pub fn all_morphisms<'l, S: FiniteSmc>(
    c: &'l S,
    objects: &'l [S::Obj],
) -> impl Iterator<Item = S::Mor> + Send + 'l {
    objects.iter().flat_map(move |a| {
        objects.iter().flat_map(move |b| {
            (0..c.hom_len(a, b)).map(move |i| c.hom_nth(a, b, i).expect("index below the count"))
        })
    })
}

/// Whether `ν_{x⃗}` has a two-sided inverse in `L U C`.
pub fn nu_is_invertible<C: FiniteSmc>(u: &DefaultUnderlying<C>, xs: &LObject<C::Obj>) -> bool {
    let l = FreePermutative::new(u);
    let n = nu(u, xs);
    let point = l.cod(&n);
    let (id_x, id_p) = (l.id(xs), l.id(&point));
    (0..l.hom_len(&point, xs)).any(|i| {
        let back = l.hom_nth(&point, xs, i).expect("index below the count");
        l.compose(&back, &n).ok() == Some(id_x.clone())
            && l.compose(&n, &back).ok() == Some(id_p.clone())
    })
}

/// Triangle identities and `ν` for `C`: every arrow of `U C` whose source
/// is a list of at most `max_len` objects of `u` and whose target is one of
/// `u`'s candidates, and every `L U C`-morphism between such lists.
pub fn adjunction_suite<C>(
    u: &Universe<DefaultUnderlying<C>>,
    max_len: usize,
    mutation: Option<Mutation>,
) -> SuiteReport
where
    C: FiniteSmc + Clone,
{
    let uc = u.m;
    let l = FreePermutative::new(uc);
    let lists = crate::free::lists(&u.objects, max_len);
    let counit = Counit::new(uc).with_mutation(mutation);
    let u_counit = LaxToMulti::unchecked(&counit);
    let unit = UnitMap::new(uc);
    let l_unit = Lifted::new(&unit);
    let outer = Counit::new(unit.target()).with_mutation(mutation);
    let smc = uc.smc();

    let mut laws = Vec::new();
    laws.push(check_law("counit-unital", [()], |_| {
        expect_eq(&counit.obj(&LObject(Vec::new())), &smc.unit())?;
        expect_eq(&counit.eta()?, &smc.id(&smc.unit()))
    }));
    laws.push(check_law("counit-singletons", u.objects.iter(), |a| {
        expect_eq(&counit.obj(&LObject(vec![(*a).clone()])), a)
    }));
    let arrows = lists.iter().flat_map(|xs| {
        (u.targets)(&xs.0).into_iter().flat_map(move |y| {
            (0..uc.hom_len(&xs.0, &y))
                .map(move |i| uc.hom_nth(&xs.0, &y, i).expect("index below the count"))
        })
    });
    laws.push(check_law("first-triangle", arrows, |phi| {
        expect_eq(&u_counit.arrow(&unit.arrow(phi)?)?, phi)
    }));
    laws.push(check_law(
        "second-triangle",
        all_morphisms(&l, &lists),
        |g| expect_eq(&outer.mor(&l_unit.mor(g)?)?, g),
    ));
    laws.push(check_law("second-triangle-objects", lists.iter(), |xs| {
        expect_eq(&outer.obj(&l_unit.obj(xs)), *xs)
    }));
    laws.push(check_law("nu-singletons", u.objects.iter(), |a| {
        let xs = LObject(vec![(*a).clone()]);
        expect_eq(&nu(uc, &xs), &l.id(&xs))
    }));
    laws.push(check_law("nu-natural", all_morphisms(&l, &lists), |g| {
        let lhs = l.compose(&nu(uc, &l.cod(g)), g)?;
        let rhs = l.compose(&unit_after_counit(&counit, g)?, &nu(uc, &l.dom(g)))?;
        expect_eq(&lhs, &rhs)
    }));
    SuiteReport::new("adjunction", laws)
}

/// `ε` as a strong monoidal functor: functoriality and the three
/// coherence diagrams, on lists of at most `max_len` objects.
pub fn counit_functor_suite<C: FiniteSmc>(
    uc: &DefaultUnderlying<C>,
    objects: &[C::Obj],
    max_len: usize,
    seed: u64,
) -> SuiteReport {
    let lists = crate::free::lists(objects, max_len);
    let mut report = lax_functor_suite(&Counit::new(uc), &lists, seed);
    report.suite = "counit".into();
    report
}

/// `ε_{LU} ∘ Lη_U = id` and `LU(ε) ∘ Lη_U = id` on `L U C`.
pub fn comonad_suite<C>(
    uc: &DefaultUnderlying<C>,
    objects: &[C::Obj],
    max_len: usize,
) -> SuiteReport
where
    C: FiniteSmc + Clone,
{
    let l = FreePermutative::new(uc);
    let lists = crate::free::lists(objects, max_len);
    let unit = UnitMap::new(uc);
    let delta = Lifted::new(&unit);
    let counit = Counit::new(uc);
    let u_counit = LaxToMulti::unchecked(&counit);
    let lu_counit = Lifted::new(&u_counit);
    let outer = Counit::new(unit.target());
    let laws = vec![
        check_law(
            "counit-after-comultiplication",
            all_morphisms(&l, &lists),
            |g| expect_eq(&outer.mor(&delta.mor(g)?)?, g),
        ),
        check_law(
            "lifted-counit-after-comultiplication",
            all_morphisms(&l, &lists),
            |g| expect_eq(&lu_counit.mor(&delta.mor(g)?)?, g),
        ),
    ];
    SuiteReport::new("comonad", laws)
}

/// `U L F ∘ η_M = η_N ∘ F` on the arrows of `u`.
pub fn unit_naturality<F>(f: &F, u: &Universe<F::Source>) -> LawReport
where
    F: Multifunctor,
    F::Source: FiniteMulticategory,
{
    let lifted = Lifted::new(f);
    let ulf = LaxToMulti::unchecked(&lifted);
    let (unit_m, unit_n) = (UnitMap::new(f.source()), UnitMap::new(f.target()));
    check_law("unit-natural", u.arrows(73), |phi| {
        let lhs = ulf.arrow(&unit_m.arrow(phi)?)?;
        let rhs = unit_n.arrow(&f.arrow(phi)?)?;
        expect_eq(&lhs, &rhs)
    })
}

/// What the components of `ξ_F` are expected to be.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CellKind {
    Strict,
    Strong,
    Lax,
}

fn invertible<D: Smc>(d: &D, m: &D::Mor) -> Check {
    let inv = d
        .inverse(m)
        .ok_or_else(|| crate::report::Mismatch::note("no inverse"))?;
    expect_eq(&d.compose(&inv, m)?, &d.id(&d.dom(m)))?;
    expect_eq(&d.compose(m, &inv)?, &d.id(&d.cod(m)))
}

/// The cell `ξ_F: ε_D ∘ L U F ⇒ F ∘ ε_C`: naturality on every `L U C`
/// morphism between lists, and the shape of its components.
pub fn cell_suite<F>(
    f: &F,
    objects: &[<F::Source as Smc>::Obj],
    max_len: usize,
    kind: CellKind,
) -> SuiteReport
where
    F: LaxFunctor,
    F::Source: FiniteSmc + Clone,
    F::Target: Clone,
{
    let multi = LaxToMulti::unchecked(f);
    let luf = Lifted::new(&multi);
    let (eps_c, eps_d) = (Counit::new(multi.source()), Counit::new(multi.target()));
    let l = FreePermutative::new(multi.source());
    let lists = crate::free::lists(objects, max_len);
    let d = f.target();

    let mut laws = vec![
        check_law("cell-natural", all_morphisms(&l, &lists), |g| {
            let (xs, ys) = (l.dom(g), l.cod(g));
            let lhs = d.compose(&f.mor(&eps_c.mor(g)?)?, &cell_component(f, &xs)?)?;
            let rhs = d.compose(&cell_component(f, &ys)?, &eps_d.mor(&luf.mor(g)?)?)?;
            expect_eq(&lhs, &rhs)
        }),
        check_law(
            "cell-binary",
            lists.iter().filter(|xs| xs.len() == 2),
            |xs| expect_eq(&cell_component(f, xs)?, &f.xi(&xs.0[0], &xs.0[1])?),
        ),
    ];
    match kind {
        CellKind::Strict => laws.push(check_law("cell-identity", lists.iter(), |xs| {
            let c = cell_component(f, xs)?;
            expect(c == d.id(&d.dom(&c)), "component is not an identity")
        })),
        CellKind::Strong => laws.push(check_law("cell-invertible", lists.iter(), |xs| {
            invertible(d, &cell_component(f, xs)?)
        })),
        CellKind::Lax => {}
    }
    SuiteReport::new("lax-cell", laws)
}

/// `ξ_{G∘F} = G(ξ_F) ∘ ξ_G F` and `ξ_id = id` on lists.
pub fn pasting_suite<F, G>(
    f: &F,
    g: &G,
    objects: &[<F::Source as Smc>::Obj],
    max_len: usize,
) -> SuiteReport
where
    F: LaxFunctor,
    G: LaxFunctor<Source = F::Target>,
    F::Source: Clone,
{
    let composite = Composite {
        first: f,
        second: g,
    };
    let identity = IdentityFunctor(f.source().clone());
    let lists = crate::free::lists(objects, max_len);
    let e = g.target();
    let laws = vec![
        check_law("pasting", lists.iter(), |xs| {
            let lhs = xi_tower(&composite, &xs.0)?;
            let fx: Vec<_> = xs.0.iter().map(|a| f.obj(a)).collect();
            let rhs = e.compose(&g.mor(&xi_tower(f, &xs.0)?)?, &xi_tower(g, &fx)?)?;
            expect_eq(&lhs, &rhs)
        }),
        check_law("identity-cell", lists.iter(), |xs| {
            let c = xi_tower(&identity, &xs.0)?;
            expect(
                c == identity.0.id(&identity.0.dom(&c)),
                "component is not an identity",
            )
        }),
    ];
    SuiteReport::new("pasting", laws)
}
