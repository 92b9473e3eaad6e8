use opal_core::adjunction::laws::{
    adjunction_suite, all_morphisms, cell_suite, comonad_suite, counit_functor_suite,
    nu_is_invertible, pasting_suite, unit_naturality, CellKind,
};
use opal_core::adjunction::{nu, Counit, UnitMap};
use opal_core::free::{lists, FreePermutative, LMorphism, LObject, Lifted};
use opal_core::functor::laws::lax_functor_suite;
use opal_core::functor::{
    Composite, DefaultUnderlying, IdentityFunctor, IdentityMultifunctor, LaxFunctor, LaxToMulti,
    LeafDoubling, Multifunctor, PadUnit, Square,
};
use opal_core::multicat::laws::{MultiBounds, Universe};
use opal_core::multicat::{MultiArrow, Multicategory, Underlying};
use opal_core::mutation::Mutation;
use opal_core::operad::{DefaultKappa, ExoticKappa};
use opal_core::shapes::ZObject;
use opal_core::smc::h::{arity_targets, generator, square, FreeSmc, HMorphism};
use opal_core::smc::laws::{smc_law_suite, SmcBounds};
use opal_core::smc::Smc;
use opal_core::symgrp::Permutation;

type UH = DefaultUnderlying<FreeSmc>;

fn small() -> Vec<ZObject> {
    vec![ZObject::unit(), generator(), square()]
}

fn uh() -> UH {
    Underlying::new(FreeSmc, DefaultKappa)
}

fn universe<'a, M: opal_core::multicat::FiniteMulticategory<Obj = ZObject>>(
    m: &'a M,
    targets: &'a (dyn Fn(&[ZObject]) -> Vec<ZObject> + Sync),
) -> Universe<'a, M> {
    Universe {
        m,
        objects: ZObject::enumerate_up_to_width(2),
        targets,
        bounds: MultiBounds {
            max_len: 3,
            per_shape: 6,
            max_perms: 4,
            seed: 11,
        },
    }
}

fn h_arrow(
    source: Vec<ZObject>,
    target: ZObject,
    images: Vec<usize>,
) -> MultiArrow<ZObject, HMorphism> {
    let m = uh();
    let perm = Permutation::from_images(images).unwrap();
    let payload = HMorphism::new(m.kappa_bar(&source), target.clone(), perm).unwrap();
    m.arrow(source, target, payload).unwrap()
}

#[test]
fn composition_rearranges_fibers_into_chunks() {
    let m = uh();
    let l = FreePermutative::new(&m);
    let x = generator();
    let pair = x.tensor(&x);
    // f = (2, 1, 2): the middle entry alone, the outer two crossed
    let phi = vec![
        m.identity(&x),
        h_arrow(vec![x.clone(), x.clone()], pair.clone(), vec![2, 1]),
    ];
    let f = l.morphism(vec![1, 0, 1], phi).unwrap();
    let z = x.tensor(&pair);
    let psi = h_arrow(vec![x.clone(), pair.clone()], z.clone(), vec![1, 2, 3]);
    let g = l.morphism(vec![0, 0], vec![psi]).unwrap();
    let gf = l.compose(&g, &f).unwrap();
    assert_eq!(gf.f(), &[0, 0, 0]);
    // wire a lands third, b first, c second
    let expected = h_arrow(vec![x.clone(), x.clone(), x.clone()], z, vec![3, 1, 2]);
    assert_eq!(gf.components(), &[expected]);
    assert_eq!(l.dom(&gf), LObject(vec![x.clone(), x.clone(), x]));
}

#[test]
fn morphisms_serialize_with_one_based_functions() {
    let m = uh();
    let l = FreePermutative::new(&m);
    let x = generator();
    let g = l.braid(
        &LObject(vec![x.clone()]),
        &LObject(vec![x.clone(), ZObject::unit()]),
    );
    let text = serde_json::to_string(&g).unwrap();
    assert!(text.starts_with(r#"{"f":[3,1,2],"components":"#), "{text}");
    let back: LMorphism<MultiArrow<ZObject, HMorphism>> = serde_json::from_str(&text).unwrap();
    assert_eq!(back, g);
    let zero = r#"{"f":[0],"components":[]}"#;
    assert!(serde_json::from_str::<LMorphism<MultiArrow<ZObject, HMorphism>>>(zero).is_err());
    let beyond = r#"{"f":[2],"components":[]}"#;
    assert!(serde_json::from_str::<LMorphism<MultiArrow<ZObject, HMorphism>>>(beyond).is_err());
    assert!(l.morphism(vec![0, 0], vec![m.identity(&x)]).is_err());
}

#[test]
fn free_permutative_category_satisfies_the_laws() {
    let m = uh();
    let l = FreePermutative::new(&m);
    let objects = lists(&small(), 2);
    let report = smc_law_suite(
        &l,
        &objects,
        SmcBounds {
            max_size: 2,
            max_total: 4,
            seed: 3,
        },
    );
    assert!(
        report.passed,
        "{}",
        serde_json::to_string_pretty(&report).unwrap()
    );
    for a in &objects {
        for b in &objects {
            assert_eq!(l.associator(a, b, a), l.id(&l.tensor(&l.tensor(a, b), a)));
            let twice = l.compose(&l.braid(b, a), &l.braid(a, b)).unwrap();
            assert_eq!(twice, l.id(&l.tensor(a, b)));
        }
    }
}

#[test]
fn lists_are_enumerated_shortest_first() {
    let all = lists(&small(), 3);
    assert_eq!(all.len(), 1 + 3 + 9 + 27);
    assert!(all[0].is_empty());
    assert!(all.windows(2).all(|w| w[0].len() <= w[1].len()));
}

#[test]
fn lifted_functors_are_strict() {
    let sq = Square(FreeSmc);
    let multi = LaxToMulti::unchecked(&sq);
    let lifted = Lifted::new(&multi);
    let report = lax_functor_suite(&lifted, &lists(&small(), 2), 4);
    assert!(
        report.passed,
        "{}",
        serde_json::to_string_pretty(&report).unwrap()
    );
    let l = FreePermutative::new(multi.source());
    for g in all_morphisms(&l, &lists(&small(), 2)).take(200) {
        let image = lifted.mor(&g).unwrap();
        assert_eq!(image.f(), g.f());
    }
    assert_eq!(
        lifted.eta().unwrap(),
        FreePermutative::new(multi.target()).id(&LObject(vec![]))
    );
}

#[test]
fn counit_on_objects() {
    let m = uh();
    let eps = Counit::new(&m);
    let (a, b) = (generator(), square());
    assert_eq!(eps.obj(&LObject(vec![])), ZObject::unit());
    assert_eq!(eps.obj(&LObject(vec![a.clone(), b.clone()])), a.tensor(&b));
    assert_eq!(eps.obj(&LObject(vec![b.clone()])), b);
    let three = eps.obj(&LObject(vec![a.clone(), b.clone(), a.clone()]));
    assert_eq!(three, a.tensor(&b).tensor(&a));
    assert_eq!(eps.eta().unwrap(), FreeSmc.id(&ZObject::unit()));
}

#[test]
fn counit_sorting_permutation_groups_fibers() {
    let s = Counit::<FreeSmc, DefaultKappa>::sigma(&[1, 0, 1, 0]);
    assert_eq!(s.images(), vec![2, 4, 1, 3]);
}

#[test]
fn unit_map_sends_identities_to_identities() {
    let m = uh();
    let unit = UnitMap::new(&m);
    let l = FreePermutative::new(&m);
    for a in small() {
        let image = unit.arrow(&m.identity(&a)).unwrap();
        assert_eq!(image, unit.target().identity(&LObject(vec![a.clone()])));
        assert_eq!(image.payload, l.id(&LObject(vec![a.clone()])));
        assert_eq!(unit.obj(&a), LObject(vec![a]));
    }
    assert_ne!(unit.obj(&generator()), unit.obj(&square()));
}

#[test]
fn triangles_and_nu_hold() {
    let m = uh();
    let targets = arity_targets(ZObject::enumerate_up_to_width(2));
    let mut u = universe(&m, &targets);
    u.objects = small();
    let report = adjunction_suite(&u, 3, None);
    assert!(
        report.passed,
        "{}",
        serde_json::to_string_pretty(&report).unwrap()
    );
    for law in ["first-triangle", "second-triangle", "nu-natural"] {
        assert!(report.law(law).unwrap().checked > 20, "{law}");
    }
}

#[test]
fn dropping_the_sorting_permutation_is_detected() {
    let m = uh();
    let targets = arity_targets(ZObject::enumerate_up_to_width(2));
    let mut u = universe(&m, &targets);
    u.objects = small();
    let report = adjunction_suite(&u, 3, Some(Mutation::DropSigmaF));
    assert!(!report.passed);
    assert!(!report.law("second-triangle").unwrap().passed());
    assert!(!report.law("nu-natural").unwrap().passed());
    // η sends every arrow to a morphism over a single fiber
    assert!(report.law("first-triangle").unwrap().passed());
}

#[test]
fn nu_is_not_invertible_beyond_singletons() {
    let m = uh();
    let x = generator();
    let pair = LObject(vec![x.clone(), x.clone()]);
    let n = nu(&m, &pair);
    assert!(!n.is_bijection());
    assert!(!nu_is_invertible(&m, &pair));
    assert!(nu_is_invertible(&m, &LObject(vec![x])));
    assert!(!nu_is_invertible(&m, &LObject(vec![])));
}

#[test]
fn counit_is_strong_monoidal() {
    let m = uh();
    let report = counit_functor_suite(&m, &small(), 2, 5);
    assert!(
        report.passed,
        "{}",
        serde_json::to_string_pretty(&report).unwrap()
    );
}

#[test]
fn counit_of_a_permutative_category_is_strict() {
    let m = uh();
    let l = FreePermutative::new(&m);
    let unit = UnitMap::new(&m);
    let eps = Counit::new(unit.target());
    let nested = lists(&lists(&small(), 2), 2);
    for a in &nested {
        for b in &nested {
            let ab = l.tensor(&eps.obj(a), &eps.obj(b));
            assert_eq!(eps.xi(a, b).unwrap(), l.id(&ab));
        }
    }
    assert_eq!(eps.eta().unwrap(), l.id(&l.unit()));
}

#[test]
fn comonad_laws_hold() {
    let m = uh();
    let report = comonad_suite(&m, &small(), 2);
    assert!(
        report.passed,
        "{}",
        serde_json::to_string_pretty(&report).unwrap()
    );
}

#[test]
fn unit_is_natural() {
    let targets = arity_targets(ZObject::enumerate_up_to_width(2));
    let sq = Square(FreeSmc);
    let multi = LaxToMulti::unchecked(&sq);
    let report = unit_naturality(&multi, &universe(multi.source(), &targets));
    assert!(report.passed() && report.checked > 0, "{report:?}");
    let id = IdentityMultifunctor(uh());
    let report = unit_naturality(&id, &universe(id.source(), &targets));
    assert!(report.passed() && report.checked > 0, "{report:?}");
}

#[test]
fn second_triangle_for_an_exotic_multicategory() {
    let exotic = Underlying::new(FreeSmc, ExoticKappa);
    let unit = UnitMap::new(&exotic);
    let lifted = Lifted::new(&unit);
    let eps = Counit::new(unit.target());
    let l = FreePermutative::new(&exotic);
    let objects = lists(&[generator(), square()], 2);
    let mut checked = 0;
    for g in all_morphisms(&l, &objects) {
        assert_eq!(eps.mor(&lifted.mor(&g).unwrap()).unwrap(), g);
        checked += 1;
    }
    assert!(checked > 0);
}

#[test]
fn cells_of_strict_and_strong_functors() {
    let objs = small();
    let strict = [
        cell_suite(&IdentityFunctor(FreeSmc), &objs, 2, CellKind::Strict),
        cell_suite(&LeafDoubling, &objs, 2, CellKind::Strict),
    ];
    let strong = [
        cell_suite(&PadUnit(FreeSmc), &objs, 2, CellKind::Strong),
        cell_suite(&Square(FreeSmc), &objs, 2, CellKind::Strong),
    ];
    for r in strict.iter().chain(&strong) {
        assert!(r.passed, "{}", serde_json::to_string_pretty(r).unwrap());
        assert!(r.laws.iter().all(|l| l.checked > 0));
    }
    // a strong functor whose cell is not an identity
    assert!(!cell_suite(&Square(FreeSmc), &objs, 2, CellKind::Strict).passed);
}

#[test]
fn cells_paste() {
    let objs = small();
    let reports = [
        pasting_suite(&LeafDoubling, &LeafDoubling, &objs, 3),
        pasting_suite(&Square(FreeSmc), &PadUnit(FreeSmc), &objs, 3),
        pasting_suite(&PadUnit(FreeSmc), &LeafDoubling, &objs, 3),
    ];
    for r in reports {
        assert!(r.passed, "{}", serde_json::to_string_pretty(&r).unwrap());
    }
    let both = Composite {
        first: LeafDoubling,
        second: LeafDoubling,
    };
    let c = opal_core::functor::xi_tower(&both, &[generator(), square(), generator()]).unwrap();
    assert!(c.perm().is_identity());
}
