//! The axioms of a symmetric monoidal category, checked on a finite universe.
//!
//! Object tuples are enumerated exhaustively within the size bounds. Laws
//! that quantify over morphisms draw them from the hom-sets with a seeded
//! generator, one draw per object tuple, so a run is reproducible from the
//! seed alone.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::report::{check_law, expect_eq, index_tuples, Check, LawReport, SuiteReport};

use super::FiniteSmc;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SmcBounds {
    /// Largest size of a single object.
    pub max_size: usize,
    /// Largest total size of the objects in one diagram.
    pub max_total: usize,
    pub seed: u64,
}

struct Universe<'a, C: FiniteSmc> {
    c: &'a C,
    objects: Vec<C::Obj>,
    sizes: Vec<usize>,
    reachable: Vec<Vec<usize>>,
    bounds: SmcBounds,
}

impl<'a, C: FiniteSmc> Universe<'a, C> {
    fn new(c: &'a C, objects: &[C::Obj], bounds: SmcBounds) -> Self {
        let objects: Vec<C::Obj> = objects
            .iter()
            .filter(|a| c.size(a) <= bounds.max_size)
            .cloned()
            .collect();
        let sizes = objects.iter().map(|a| c.size(a)).collect();
        let reachable = objects
            .iter()
            .map(|a| {
                (0..objects.len())
                    .filter(|&j| c.hom_len(a, &objects[j]) > 0)
                    .collect()
            })
            .collect();
        Universe {
            c,
            objects,
            sizes,
            reachable,
            bounds,
        }
    }

    fn tuples(&self, k: usize) -> Vec<Vec<usize>> {
        index_tuples(&self.sizes, k, self.bounds.max_total)
    }

    fn rng(&self, law: u64, idx: usize) -> ChaCha8Rng {
        let mix = self.bounds.seed ^ law.wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ (idx as u64);
        ChaCha8Rng::seed_from_u64(mix)
    }

    /// A random morphism out of object `i`, and the index of its target.
    fn draw(&self, rng: &mut ChaCha8Rng, i: usize) -> (C::Mor, usize) {
        let j = *self.reachable[i]
            .choose(rng)
            .expect("identity is always available");
        let (a, b) = (&self.objects[i], &self.objects[j]);
        let k = rng.gen_range(0..self.c.hom_len(a, b));
        (self.c.hom_nth(a, b, k).expect("index below the count"), j)
    }

    fn objs(&self, t: &[usize]) -> Vec<C::Obj> {
        t.iter().map(|&i| self.objects[i].clone()).collect()
    }
}

#[derive(Serialize)]
struct Instance<O, M> {
    objects: Vec<O>,
    morphisms: Vec<M>,
}

/// Instances of a law on `k` objects, each carrying `chains` composable
/// morphisms drawn out of every object (`chains` consecutive draws).
fn instances<'u, C: FiniteSmc>(
    u: &'u Universe<'u, C>,
    law: u64,
    k: usize,
    chain: usize,
) -> impl Iterator<Item = Instance<C::Obj, C::Mor>> + Send + 'u {
    u.tuples(k).into_iter().enumerate().map(move |(idx, t)| {
        let mut rng = u.rng(law, idx);
        let mut morphisms = Vec::new();
        for &start in &t {
            let mut at = start;
            for _ in 0..chain {
                let (f, next) = u.draw(&mut rng, at);
                morphisms.push(f);
                at = next;
            }
        }
        Instance {
            objects: u.objs(&t),
            morphisms,
        }
    })
}

/// Runs every axiom on the objects of size at most `bounds.max_size`.
pub fn smc_law_suite<C: FiniteSmc>(c: &C, objects: &[C::Obj], bounds: SmcBounds) -> SuiteReport {
    let u = Universe::new(c, objects, bounds);
    let laws = vec![
        identity_law(&u),
        composition_associative(&u),
        tensor_functorial(&u),
        associator_natural(&u),
        associator_invertible(&u),
        braid_natural(&u),
        unitor_natural(&u),
        unitor_invertible(&u),
        pentagon(&u),
        unit_triangle(&u),
        right_unit_triangle(&u),
        hexagon(&u),
        hexagon_inverse(&u),
        symmetry(&u),
    ];
    SuiteReport::new("smc-laws", laws)
}

type Inst<C> = Instance<<C as super::Smc>::Obj, <C as super::Smc>::Mor>;

fn identity_law<C: FiniteSmc>(u: &Universe<C>) -> LawReport {
    let c = u.c;
    check_law("identity", instances(u, 1, 1, 1), |i: &Inst<C>| {
        let f = &i.morphisms[0];
        expect_eq(&c.compose(&c.id(&c.cod(f)), f)?, f)?;
        expect_eq(&c.compose(f, &c.id(&c.dom(f)))?, f)
    })
}

fn composition_associative<C: FiniteSmc>(u: &Universe<C>) -> LawReport {
    let c = u.c;
    check_law(
        "composition-associative",
        instances(u, 2, 1, 3),
        |i: &Inst<C>| {
            let (f, g, h) = (&i.morphisms[0], &i.morphisms[1], &i.morphisms[2]);
            let lhs = c.compose(&c.compose(h, g)?, f)?;
            let rhs = c.compose(h, &c.compose(g, f)?)?;
            expect_eq(&lhs, &rhs)
        },
    )
}

fn tensor_functorial<C: FiniteSmc>(u: &Universe<C>) -> LawReport {
    let c = u.c;
    check_law("tensor-functorial", instances(u, 3, 2, 2), |i: &Inst<C>| {
        let (a, b) = (&i.objects[0], &i.objects[1]);
        expect_eq(&c.tensor_mor(&c.id(a), &c.id(b)), &c.id(&c.tensor(a, b)))?;
        let (f, g, f2, g2) = (
            &i.morphisms[0],
            &i.morphisms[1],
            &i.morphisms[2],
            &i.morphisms[3],
        );
        let lhs = c.tensor_mor(&c.compose(g, f)?, &c.compose(g2, f2)?);
        let rhs = c.compose(&c.tensor_mor(g, g2), &c.tensor_mor(f, f2))?;
        expect_eq(&lhs, &rhs)
    })
}

fn associator_natural<C: FiniteSmc>(u: &Universe<C>) -> LawReport {
    let c = u.c;
    check_law(
        "associator-natural",
        instances(u, 4, 3, 1),
        |i: &Inst<C>| {
            let (f, g, h) = (&i.morphisms[0], &i.morphisms[1], &i.morphisms[2]);
            let lhs = c.compose(
                &c.associator(&c.cod(f), &c.cod(g), &c.cod(h)),
                &c.tensor_mor(&c.tensor_mor(f, g), h),
            )?;
            let rhs = c.compose(
                &c.tensor_mor(f, &c.tensor_mor(g, h)),
                &c.associator(&c.dom(f), &c.dom(g), &c.dom(h)),
            )?;
            expect_eq(&lhs, &rhs)
        },
    )
}

fn associator_invertible<C: FiniteSmc>(u: &Universe<C>) -> LawReport {
    let c = u.c;
    check_law(
        "associator-invertible",
        instances(u, 5, 3, 0),
        |i: &Inst<C>| {
            let (a, b, d) = (&i.objects[0], &i.objects[1], &i.objects[2]);
            let fwd = c.associator(a, b, d);
            let back = c.associator_inv(a, b, d);
            expect_eq(&c.compose(&back, &fwd)?, &c.id(&c.dom(&fwd)))?;
            expect_eq(&c.compose(&fwd, &back)?, &c.id(&c.dom(&back)))
        },
    )
}

fn braid_natural<C: FiniteSmc>(u: &Universe<C>) -> LawReport {
    let c = u.c;
    check_law("braid-natural", instances(u, 6, 2, 1), |i: &Inst<C>| {
        let (f, g) = (&i.morphisms[0], &i.morphisms[1]);
        let lhs = c.compose(&c.braid(&c.cod(f), &c.cod(g)), &c.tensor_mor(f, g))?;
        let rhs = c.compose(&c.tensor_mor(g, f), &c.braid(&c.dom(f), &c.dom(g)))?;
        expect_eq(&lhs, &rhs)
    })
}

fn unitor_natural<C: FiniteSmc>(u: &Universe<C>) -> LawReport {
    let c = u.c;
    check_law("unitor-natural", instances(u, 7, 1, 1), |i: &Inst<C>| {
        let f = &i.morphisms[0];
        let e = c.id(&c.unit());
        let lhs = c.compose(&c.right_unitor(&c.cod(f)), &c.tensor_mor(f, &e))?;
        let rhs = c.compose(f, &c.right_unitor(&c.dom(f)))?;
        expect_eq(&lhs, &rhs)?;
        let lhs = c.compose(&c.left_unitor(&c.cod(f))?, &c.tensor_mor(&e, f))?;
        let rhs = c.compose(f, &c.left_unitor(&c.dom(f))?)?;
        expect_eq(&lhs, &rhs)
    })
}

fn unitor_invertible<C: FiniteSmc>(u: &Universe<C>) -> LawReport {
    let c = u.c;
    check_law("unitor-invertible", instances(u, 8, 1, 0), |i: &Inst<C>| {
        let a = &i.objects[0];
        let fwd = c.right_unitor(a);
        let back = c.right_unitor_inv(a);
        expect_eq(&c.compose(&fwd, &back)?, &c.id(a))?;
        expect_eq(&c.compose(&back, &fwd)?, &c.id(&c.dom(&fwd)))
    })
}

fn pentagon<C: FiniteSmc>(u: &Universe<C>) -> LawReport {
    let c = u.c;
    check_law("pentagon", instances(u, 9, 4, 0), |i: &Inst<C>| {
        let (a, b, d, e) = (&i.objects[0], &i.objects[1], &i.objects[2], &i.objects[3]);
        let lhs = c.compose(
            &c.associator(a, b, &c.tensor(d, e)),
            &c.associator(&c.tensor(a, b), d, e),
        )?;
        let rhs = c.compose_path(&[
            c.tensor_mor(&c.associator(a, b, d), &c.id(e)),
            c.associator(a, &c.tensor(b, d), e),
            c.tensor_mor(&c.id(a), &c.associator(b, d, e)),
        ])?;
        expect_eq(&lhs, &rhs)
    })
}

fn unit_triangle<C: FiniteSmc>(u: &Universe<C>) -> LawReport {
    let c = u.c;
    check_law("unit-triangle", instances(u, 10, 2, 0), |i: &Inst<C>| {
        let (a, b) = (&i.objects[0], &i.objects[1]);
        let lhs = c.compose(
            &c.tensor_mor(&c.id(a), &c.left_unitor(b)?),
            &c.associator(a, &c.unit(), b),
        )?;
        let rhs = c.tensor_mor(&c.right_unitor(a), &c.id(b));
        expect_eq(&lhs, &rhs)
    })
}

fn right_unit_triangle<C: FiniteSmc>(u: &Universe<C>) -> LawReport {
    let c = u.c;
    check_law(
        "right-unit-triangle",
        instances(u, 11, 2, 0),
        |i: &Inst<C>| {
            let (a, b) = (&i.objects[0], &i.objects[1]);
            let lhs = c.right_unitor(&c.tensor(a, b));
            let rhs = c.compose(
                &c.tensor_mor(&c.id(a), &c.right_unitor(b)),
                &c.associator(a, b, &c.unit()),
            )?;
            expect_eq(&lhs, &rhs)
        },
    )
}

fn hexagon<C: FiniteSmc>(u: &Universe<C>) -> LawReport {
    let c = u.c;
    check_law("hexagon", instances(u, 12, 3, 0), |i: &Inst<C>| {
        let (a, b, d) = (&i.objects[0], &i.objects[1], &i.objects[2]);
        let lhs = c.compose_path(&[
            c.associator(a, b, d),
            c.braid(a, &c.tensor(b, d)),
            c.associator(b, d, a),
        ])?;
        let rhs = c.compose_path(&[
            c.tensor_mor(&c.braid(a, b), &c.id(d)),
            c.associator(b, a, d),
            c.tensor_mor(&c.id(b), &c.braid(a, d)),
        ])?;
        expect_eq(&lhs, &rhs)
    })
}

fn hexagon_inverse<C: FiniteSmc>(u: &Universe<C>) -> LawReport {
    let c = u.c;
    check_law("hexagon-inverse", instances(u, 13, 3, 0), |i: &Inst<C>| {
        let (a, b, d) = (&i.objects[0], &i.objects[1], &i.objects[2]);
        let lhs = c.compose_path(&[
            c.associator_inv(a, b, d),
            c.braid(&c.tensor(a, b), d),
            c.associator_inv(d, a, b),
        ])?;
        let rhs = c.compose_path(&[
            c.tensor_mor(&c.id(a), &c.braid(b, d)),
            c.associator_inv(a, d, b),
            c.tensor_mor(&c.braid(a, d), &c.id(b)),
        ])?;
        expect_eq(&lhs, &rhs)
    })
}

fn symmetry<C: FiniteSmc>(u: &Universe<C>) -> LawReport {
    let c = u.c;
    check_law("symmetry", instances(u, 14, 2, 0), |i: &Inst<C>| -> Check {
        let (a, b) = (&i.objects[0], &i.objects[1]);
        let round = c.compose(&c.braid(b, a), &c.braid(a, b))?;
        expect_eq(&round, &c.id(&c.tensor(a, b)))
    })
}
