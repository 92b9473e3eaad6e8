use opal_core::multicat::laws::{
    canonical_iso_suite, iso_is_identity, iso_triangle, multicat_law_suite, MultiBounds, Universe,
};
use opal_core::multicat::{
    CanonicalIso, FiniteMulticategory, MultiArrow, Multicategory, Underlying,
};
use opal_core::mutation::Mutation;
use opal_core::operad::{DefaultKappa, ExoticKappa, KappaFamily, RightNestedKappa, YObject};
use opal_core::shapes::{Paren, ZObject};
use opal_core::smc::h::{arity_targets, generator, square, FreeSmc, HMorphism};
use opal_core::smc::{eval_obj, FiniteSmc, Smc};
use opal_core::symgrp::Permutation;

fn bounds() -> MultiBounds {
    MultiBounds {
        max_len: 3,
        per_shape: 4,
        max_perms: 4,
        seed: 11,
    }
}

fn objects() -> Vec<ZObject> {
    ZObject::enumerate_up_to_width(2)
}

fn universe<'a, K: KappaFamily<ZObject>>(
    m: &'a Underlying<FreeSmc, K>,
    targets: &'a (dyn Fn(&[ZObject]) -> Vec<ZObject> + Sync),
) -> Universe<'a, Underlying<FreeSmc, K>> {
    Universe {
        m,
        objects: objects(),
        targets,
        bounds: bounds(),
    }
}

fn payloads<K: KappaFamily<ZObject>>(
    u: &Underlying<FreeSmc, K>,
    xs: &[ZObject],
    y: &ZObject,
) -> Vec<HMorphism> {
    u.hom(xs, y).into_iter().map(|f| f.payload).collect()
}

#[test]
fn unary_and_nullary_homs_are_ambient_homs() {
    let u = Underlying::new(FreeSmc, DefaultKappa);
    for a in objects() {
        for b in objects() {
            assert_eq!(
                payloads(&u, std::slice::from_ref(&a), &b),
                FreeSmc.hom(&a, &b)
            );
        }
        assert_eq!(payloads(&u, &[], &a), FreeSmc.hom(&FreeSmc.unit(), &a));
    }
}

#[test]
fn hom_sizes_do_not_depend_on_kappa() {
    let d = Underlying::new(FreeSmc, DefaultKappa);
    let x = Underlying::new(FreeSmc, ExoticKappa);
    let xs = vec![generator(), square(), ZObject::unit()];
    for y in [square().tensor(&generator()), generator().tensor(&square())] {
        assert_eq!(d.hom_len(&xs, &y), 6);
        assert_eq!(x.hom_len(&xs, &y), 6);
        assert_eq!(d.hom(&xs, &y).len(), 6);
        assert!(x.hom(&xs, &y).iter().all(|f| x.validate(f).is_ok()));
    }
}

#[test]
fn binary_identity_differs_from_unary_identity() {
    let u = Underlying::new(FreeSmc, DefaultKappa);
    let (a, b) = (generator(), square());
    let ab = a.tensor(&b);
    let id2 = u
        .arrow(vec![a.clone(), b.clone()], ab.clone(), FreeSmc.id(&ab))
        .unwrap();
    let id1 = u.identity(&ab);
    assert_eq!(id1.payload, id2.payload);
    assert_ne!(id1, id2);
}

#[test]
fn unit_composite_is_inverse_unitor() {
    let u = Underlying::new(FreeSmc, DefaultKappa);
    let e = FreeSmc.unit();
    for a in objects() {
        let ae = a.tensor(&e);
        let id2 = u
            .arrow(vec![a.clone(), e.clone()], ae.clone(), FreeSmc.id(&ae))
            .unwrap();
        let id0 = u.arrow(vec![], e.clone(), FreeSmc.id(&e)).unwrap();
        let composite = u.compose(&id2, &[u.identity(&a), id0]).unwrap();
        assert_eq!(composite.source, vec![a.clone()]);
        assert_eq!(composite.payload, FreeSmc.right_unitor_inv(&a));
    }
}

#[test]
fn exotic_identity_carries_a_unitor() {
    let u = Underlying::new(FreeSmc, ExoticKappa);
    let a = square();
    let id = u.identity(&a);
    // κ(a) is the shape of a plus one leaf, with only the first leaf marked
    assert_eq!(id.payload.source().width(), 2 * a.width());
    assert_eq!(id.payload.target(), &a);
    let twice = u.compose(&id, std::slice::from_ref(&id)).unwrap();
    assert_eq!(twice, id);
}

#[test]
fn action_by_transposition_swaps_sources() {
    let u = Underlying::new(FreeSmc, DefaultKappa);
    let (a, b) = (generator(), square());
    let ab = a.tensor(&b);
    let f = u
        .arrow(vec![a.clone(), b.clone()], ab.clone(), FreeSmc.id(&ab))
        .unwrap();
    let s = Permutation::transposition(2, 1, 2).unwrap();
    let g = u.act(&f, &s).unwrap();
    assert_eq!(g.source, vec![b.clone(), a.clone()]);
    assert_eq!(g.payload, FreeSmc.braid(&b, &a));
    assert_eq!(u.act(&g, &s).unwrap(), f);
}

#[test]
fn operad_action_respects_substitution() {
    let xs_pool = objects();
    for n in 0..=2 {
        for b in YObject::enumerate(n, 3) {
            for arities in [vec![0, 1, 2], vec![2, 1], vec![1], vec![]] {
                if arities.len() != n {
                    continue;
                }
                let parts: Vec<YObject> = arities
                    .iter()
                    .map(|&k| YObject::enumerate(k, k + 1).pop().unwrap())
                    .collect();
                let total: usize = arities.iter().sum();
                let xs: Vec<ZObject> = (0..total)
                    .map(|i| xs_pool[i % xs_pool.len()].clone())
                    .collect();
                let composite = b.gamma(&parts).unwrap();
                let mut rest = &xs[..];
                let inner: Vec<ZObject> = parts
                    .iter()
                    .map(|p| {
                        let (here, tail) = rest.split_at(p.arity());
                        rest = tail;
                        eval_obj(&FreeSmc, p, here).unwrap()
                    })
                    .collect();
                assert_eq!(
                    eval_obj(&FreeSmc, &composite, &xs).unwrap(),
                    eval_obj(&FreeSmc, &b, &inner).unwrap()
                );
            }
        }
    }
}

#[test]
fn law_suite_passes_for_each_kappa() {
    let targets = arity_targets(objects());
    let d = Underlying::new(FreeSmc, DefaultKappa);
    let x = Underlying::new(FreeSmc, ExoticKappa);
    let r = Underlying::new(FreeSmc, RightNestedKappa);
    for report in [
        multicat_law_suite(&universe(&d, &targets), None),
        multicat_law_suite(&universe(&x, &targets), None),
        multicat_law_suite(&universe(&r, &targets), None),
    ] {
        assert!(
            report.passed,
            "{}",
            serde_json::to_string_pretty(&report).unwrap()
        );
        assert!(report.laws.iter().all(|l| l.checked > 0));
    }
}

#[test]
fn dropping_phi_is_detected() {
    let targets = arity_targets(objects());
    let x = Underlying::new(FreeSmc, ExoticKappa).with_mutation(Some(Mutation::DropPhi));
    let report = multicat_law_suite(&universe(&x, &targets), None);
    assert!(!report.passed);
    let bad = report.failures().next().unwrap();
    assert!(bad.counterexample.is_some());
}

#[test]
fn dropping_block_permutation_is_detected() {
    let targets = arity_targets(objects());
    let d = Underlying::new(FreeSmc, DefaultKappa);
    let report = multicat_law_suite(&universe(&d, &targets), Some(Mutation::DropBlockPerm));
    assert!(!report.law("equivariance-1").unwrap().passed());
    assert!(report.law("associativity").unwrap().passed());
}

#[test]
fn canonical_isomorphisms_are_multifunctors() {
    let targets = arity_targets(objects());
    let d = Underlying::new(FreeSmc, DefaultKappa);
    let x = Underlying::new(FreeSmc, ExoticKappa);
    let r = Underlying::new(FreeSmc, RightNestedKappa);
    for report in [
        canonical_iso_suite(&CanonicalIso::new(&d, &x), &universe(&d, &targets)),
        canonical_iso_suite(&CanonicalIso::new(&x, &r), &universe(&x, &targets)),
        canonical_iso_suite(&CanonicalIso::new(&r, &d), &universe(&r, &targets)),
    ] {
        assert!(
            report.passed,
            "{}",
            serde_json::to_string_pretty(&report).unwrap()
        );
    }
    let triangle = iso_triangle(
        &CanonicalIso::new(&d, &x),
        &CanonicalIso::new(&x, &r),
        &CanonicalIso::new(&d, &r),
        &universe(&d, &targets),
    );
    assert!(triangle.passed() && triangle.checked > 0);
    for own in [
        iso_is_identity(&CanonicalIso::new(&x, &x), &universe(&x, &targets)),
        iso_is_identity(&CanonicalIso::new(&d, &d), &universe(&d, &targets)),
    ] {
        assert!(own.passed() && own.checked > 0);
    }
}

#[test]
fn canonical_isomorphisms_round_trip() {
    let d = Underlying::new(FreeSmc, DefaultKappa);
    let x = Underlying::new(FreeSmc, ExoticKappa);
    let there = CanonicalIso::new(&d, &x);
    let back = CanonicalIso::new(&x, &d);
    let xs = vec![generator(), ZObject::unit(), square()];
    let y = ZObject::fully_marked(Paren::left_nested(3).unwrap());
    for f in d.hom(&xs, &y) {
        let g: MultiArrow<_, _> = there.apply(&f).unwrap();
        assert!(x.validate(&g).is_ok());
        assert_eq!(back.apply(&g).unwrap(), f);
    }
}
