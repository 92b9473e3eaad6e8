use opal_core::adjunction::laws::{
    adjunction_suite, cell_suite, comonad_suite, counit_functor_suite, pasting_suite,
    unit_naturality, CellKind,
};
use opal_core::free::{lists, FreePermutative};
use opal_core::functor::laws::{
    lax_functor_suite, multifunctor_suite, same_lax_data, same_multifunctor, xi_tower_suite,
};
use opal_core::functor::{
    IdentityFunctor, LaxFunctor, LaxToMulti, LeafDoubling, MultiToLax, Multifunctor, PadUnit,
    Square,
};
use opal_core::multicat::laws::{
    canonical_iso_suite, iso_is_identity, iso_triangle, multicat_law_suite, MultiBounds, Universe,
};
use opal_core::multicat::{CanonicalIso, FiniteMulticategory, Underlying};
use opal_core::mutation::Mutation;
use opal_core::operad::laws::{y_law_suite, YBounds};
use opal_core::operad::{DefaultKappa, ExoticKappa, RightNestedKappa};
use opal_core::report::{LawReport, SuiteReport};
use opal_core::shapes::ZObject;
use opal_core::smc::h::{arity_targets, generator, square, FreeSmc};
use opal_core::smc::laws::{smc_law_suite, SmcBounds};
use serde::Serialize;

use crate::config::SuiteConfig;

#[derive(Serialize)]
pub struct Report {
    pub config: SuiteConfig,
    pub mutation: Option<Mutation>,
    pub passed: bool,
    pub suites: Vec<SuiteReport>,
}

type Targets = dyn Fn(&[ZObject]) -> Vec<ZObject> + Sync;

struct Setup {
    config: SuiteConfig,
    mutation: Option<Mutation>,
    objects: Vec<ZObject>,
    targets: Box<Targets>,
}

impl Setup {
    fn bounds(&self) -> MultiBounds {
        MultiBounds {
            max_len: self.config.max_tuple_length,
            per_shape: self.config.per_shape,
            max_perms: 6,
            seed: self.config.seed,
        }
    }

    fn universe<'a, M: FiniteMulticategory<Obj = ZObject>>(&'a self, m: &'a M) -> Universe<'a, M> {
        Universe {
            m,
            objects: self.objects.clone(),
            targets: &*self.targets,
            bounds: self.bounds(),
        }
    }

    /// Lists of at most `cap` entries, never longer than the tuple bound.
    fn list_len(&self, cap: usize) -> usize {
        self.config.max_tuple_length.min(cap)
    }
}

fn nested(name: &str, parts: Vec<SuiteReport>, extra: Vec<LawReport>) -> SuiteReport {
    let mut laws: Vec<LawReport> = parts
        .into_iter()
        .flat_map(|part| {
            let prefix = part.suite;
            part.laws.into_iter().map(move |mut law| {
                law.law = format!("{prefix}/{}", law.law);
                law
            })
        })
        .collect();
    laws.extend(extra);
    SuiteReport::new(name, laws)
}

fn renamed(mut report: SuiteReport, name: impl Into<String>) -> SuiteReport {
    report.suite = name.into();
    report
}

fn failed(law: &str, message: String) -> LawReport {
    LawReport {
        law: law.to_string(),
        checked: 1,
        failed: 1,
        counterexample: Some(opal_core::report::Counterexample {
            instance: serde_json::Value::Null,
            lhs: serde_json::Value::String(message),
            rhs: serde_json::Value::Null,
        }),
    }
}

/// Runs every suite in a fixed order.
pub fn run(config: SuiteConfig, mutation: Option<Mutation>) -> anyhow::Result<Report> {
    let objects = ZObject::enumerate_up_to_width(config.max_width.min(2));
    let setup = Setup {
        targets: Box::new(arity_targets(objects.clone())),
        objects,
        config,
        mutation,
    };
    let mut suites = vec![h_laws(&setup), renamed(y_laws(&setup), "operad-Y")];
    for kappa in &setup.config.kappa {
        let m = Underlying::new(FreeSmc, kappa.build()?).with_mutation(mutation);
        let report = multicat_law_suite(&setup.universe(&m), mutation);
        suites.push(renamed(report, format!("multicategory/{kappa}")));
    }
    suites.push(canonical_isos(&setup));
    suites.push(round_trip(
        "lax-multi/identity",
        &IdentityFunctor(FreeSmc),
        &setup,
    ));
    suites.push(round_trip("lax-multi/leaf-doubling", &LeafDoubling, &setup));
    suites.push(round_trip("lax-multi/pad-unit", &PadUnit(FreeSmc), &setup));
    suites.push(round_trip("lax-multi/square", &Square(FreeSmc), &setup));
    suites.push(adjunction(&setup));
    suites.push(cells(&setup));
    let passed = suites.iter().all(|s| s.passed);
    Ok(Report {
        config: setup.config,
        mutation,
        passed,
        suites,
    })
}

fn h_laws(s: &Setup) -> SuiteReport {
    let w = s.config.max_width;
    let objects = ZObject::enumerate_up_to_width(w);
    let bounds = SmcBounds {
        max_size: w,
        max_total: 2 * w,
        seed: s.config.seed,
    };
    renamed(smc_law_suite(&FreeSmc, &objects, bounds), "smc-H")
}

fn y_laws(s: &Setup) -> SuiteReport {
    let bounds = YBounds {
        max_arity: s.config.max_arity,
        max_width: s.config.max_width,
    };
    y_law_suite(bounds, s.mutation)
}

fn canonical_isos(s: &Setup) -> SuiteReport {
    let d = Underlying::new(FreeSmc, DefaultKappa);
    let e = Underlying::new(FreeSmc, ExoticKappa);
    let r = Underlying::new(FreeSmc, RightNestedKappa);
    let (de, er, dr, dd) = (
        CanonicalIso::new(&d, &e),
        CanonicalIso::new(&e, &r),
        CanonicalIso::new(&d, &r),
        CanonicalIso::new(&d, &d),
    );
    let re = CanonicalIso::new(&r, &e);
    let parts = vec![
        renamed(canonical_iso_suite(&de, &s.universe(&d)), "default-exotic"),
        renamed(
            canonical_iso_suite(&er, &s.universe(&e)),
            "exotic-right-nested",
        ),
        renamed(
            canonical_iso_suite(&re, &s.universe(&r)),
            "right-nested-exotic",
        ),
    ];
    let extra = vec![
        iso_triangle(&de, &er, &dr, &s.universe(&d)),
        iso_is_identity(&dd, &s.universe(&d)),
    ];
    nested("canonical-iso", parts, extra)
}

fn round_trip<F>(name: &str, f: &F, s: &Setup) -> SuiteReport
where
    F: LaxFunctor<Source = FreeSmc, Target = FreeSmc>,
{
    let seed = s.config.seed;
    let witnesses = vec![ZObject::unit(), generator(), square()];
    let mut parts = vec![
        lax_functor_suite(f, &s.objects, seed),
        xi_tower_suite(f, &witnesses, s.config.max_tuple_length, 3),
    ];
    let mut extra = Vec::new();
    match LaxToMulti::new(f, &s.objects) {
        Err(e) => extra.push(failed("coherent", e.to_string())),
        Ok(multi) => {
            let u = s.universe(multi.source());
            parts.push(multifunctor_suite(&multi, &u));
            let lax = MultiToLax(&multi);
            extra.push(same_lax_data(f, &lax, &s.objects, seed));
            match LaxToMulti::new(&lax, &s.objects) {
                Err(e) => extra.push(failed("extracted-coherent", e.to_string())),
                Ok(back) => extra.push(same_multifunctor(&multi, &back, &u)),
            }
        }
    }
    nested(name, parts, extra)
}

fn adjunction(s: &Setup) -> SuiteReport {
    let uh = Underlying::new(FreeSmc, DefaultKappa);
    let small = vec![ZObject::unit(), generator(), square()];
    let mut u = s.universe(&uh);
    u.objects = small.clone();
    let l = FreePermutative::new(&uh);
    let pair = s.list_len(2);
    let sq = Square(FreeSmc);
    let sq_multi = LaxToMulti::unchecked(&sq);
    let lh_bounds = SmcBounds {
        max_size: pair,
        max_total: 2 * pair,
        seed: s.config.seed,
    };
    let parts = vec![
        adjunction_suite(&u, s.list_len(3), s.mutation),
        counit_functor_suite(&uh, &small, pair, s.config.seed),
        comonad_suite(&uh, &small, pair),
        renamed(
            smc_law_suite(&l, &lists(&small, pair), lh_bounds),
            "free-permutative",
        ),
    ];
    let extra = vec![unit_naturality(&sq_multi, &s.universe(sq_multi.source()))];
    nested("adjunction", parts, extra)
}

fn cells(s: &Setup) -> SuiteReport {
    let small = vec![ZObject::unit(), generator(), square()];
    let pair = s.list_len(2);
    let triple = s.list_len(3);
    let parts = vec![
        renamed(
            cell_suite(&IdentityFunctor(FreeSmc), &small, pair, CellKind::Strict),
            "identity",
        ),
        renamed(
            cell_suite(&LeafDoubling, &small, pair, CellKind::Strict),
            "leaf-doubling",
        ),
        renamed(
            cell_suite(&PadUnit(FreeSmc), &small, pair, CellKind::Strong),
            "pad-unit",
        ),
        renamed(
            cell_suite(&Square(FreeSmc), &small, pair, CellKind::Strong),
            "square",
        ),
        renamed(
            pasting_suite(&LeafDoubling, &LeafDoubling, &small, triple),
            "pasting-strict",
        ),
        renamed(
            pasting_suite(&Square(FreeSmc), &PadUnit(FreeSmc), &small, triple),
            "pasting-strong",
        ),
    ];
    nested("lax-cells", parts, Vec::new())
}
