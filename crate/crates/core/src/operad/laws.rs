//! The operad axioms for `Y`, checked exhaustively.
//!
//! The bounds apply to every element of `Y` in a diagram, composites
//! included. Inserting a tree never lowers the width, so bounding the final
//! composite bounds every intermediate one as well.

use serde::Serialize;

use crate::mutation::Mutation;
use crate::report::{check_law, expect_eq, LawReport, SuiteReport};
use crate::symgrp::Permutation;

use super::YObject;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct YBounds {
    pub max_arity: usize,
    pub max_width: usize,
}

struct Pool {
    by_arity: Vec<Vec<YObject>>,
    bounds: YBounds,
}

impl Pool {
    fn new(bounds: YBounds) -> Self {
        let by_arity = (0..=bounds.max_arity)
            .map(|n| YObject::enumerate(n, bounds.max_width))
            .collect();
        Pool { by_arity, bounds }
    }

    fn all(&self) -> impl Iterator<Item = &YObject> {
        self.by_arity.iter().flatten()
    }

    /// Sequences of `len` elements whose widths sum to at most `width` and
    /// arities to at most `arity`.
    fn sequences(&self, len: usize, width: usize, arity: usize) -> Vec<Vec<YObject>> {
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(len);
        self.extend(len, width, arity, &mut current, &mut out);
        out
    }

    fn extend(
        &self,
        len: usize,
        width: usize,
        arity: usize,
        current: &mut Vec<YObject>,
        out: &mut Vec<Vec<YObject>>,
    ) {
        if current.len() == len {
            out.push(current.clone());
            return;
        }
        // every remaining element needs width at least one
        let reserve = len - current.len() - 1;
        for n in 0..=arity {
            for y in &self.by_arity[n] {
                if y.width() + reserve <= width {
                    current.push(y.clone());
                    self.extend(len, width - y.width(), arity - n, current, out);
                    current.pop();
                }
            }
        }
    }

    /// Width left for the parts inserted into `b` so that the composite stays
    /// within bounds.
    fn room(&self, b: &YObject) -> Option<usize> {
        (self.bounds.max_width + b.arity()).checked_sub(b.width())
    }

    fn compositions(&self) -> impl Iterator<Item = (YObject, Vec<YObject>)> + '_ {
        self.all().flat_map(move |b| {
            let room = self.room(b).unwrap_or(0);
            self.sequences(b.arity(), room, self.bounds.max_arity)
                .into_iter()
                .map(move |parts| (b.clone(), parts))
        })
    }
}

#[derive(Serialize)]
struct Triple {
    outer: YObject,
    middle: Vec<YObject>,
    inner: Vec<YObject>,
}

#[derive(Serialize)]
struct Acted {
    y: YObject,
    s: Permutation,
    t: Permutation,
}

#[derive(Serialize)]
struct Equivariance {
    outer: YObject,
    parts: Vec<YObject>,
    perms: Vec<Permutation>,
}

pub fn y_law_suite(bounds: YBounds, mutation: Option<Mutation>) -> SuiteReport {
    let pool = Pool::new(bounds);
    let laws = vec![
        unit_laws(&pool),
        right_action(&pool),
        associativity(&pool),
        first_equivariance(&pool, mutation == Some(Mutation::DropBlockPerm)),
        second_equivariance(&pool),
    ];
    SuiteReport::new("y-operad", laws)
}

fn unit_laws(pool: &Pool) -> LawReport {
    let ys: Vec<YObject> = pool.all().cloned().collect();
    check_law("unit", ys, |y| {
        expect_eq(&YObject::one().gamma(std::slice::from_ref(y))?, y)?;
        expect_eq(&y.gamma(&vec![YObject::one(); y.arity()])?, y)
    })
}

fn right_action(pool: &Pool) -> LawReport {
    let instances = pool.all().flat_map(|y| {
        let n = y.arity();
        Permutation::all(n).flat_map(move |s| {
            Permutation::all(n).map(move |t| Acted {
                y: y.clone(),
                s: s.clone(),
                t,
            })
        })
    });
    check_law("right-action", instances, |i| {
        expect_eq(&i.y.act(&Permutation::identity(i.y.arity()))?, &i.y)?;
        let stepwise = i.y.act(&i.s)?.act(&i.t)?;
        expect_eq(&stepwise, &i.y.act(&i.s.compose(&i.t)?)?)
    })
}

fn associativity(pool: &Pool) -> LawReport {
    let instances = pool.compositions().flat_map(|(outer, middle)| {
        let mid = outer.gamma(&middle).expect("arities match");
        let room = pool.room(&mid).unwrap_or(0);
        pool.sequences(mid.arity(), room, pool.bounds.max_arity)
            .into_iter()
            .map(move |inner| Triple {
                outer: outer.clone(),
                middle: middle.clone(),
                inner,
            })
    });
    check_law("associativity", instances, |i| {
        let lhs = i.outer.gamma(&i.middle)?.gamma(&i.inner)?;
        let mut rest = i.inner.as_slice();
        let mut grouped = Vec::with_capacity(i.middle.len());
        for b in &i.middle {
            let (chunk, tail) = rest.split_at(b.arity());
            grouped.push(b.gamma(chunk)?);
            rest = tail;
        }
        let rhs = i.outer.gamma(&grouped)?;
        expect_eq(&lhs, &rhs)
    })
}

fn first_equivariance(pool: &Pool, drop_block_perm: bool) -> LawReport {
    let instances = pool.compositions().flat_map(|(outer, parts)| {
        Permutation::all(outer.arity()).map(move |s| Equivariance {
            outer: outer.clone(),
            parts: parts.clone(),
            perms: vec![s],
        })
    });
    check_law("equivariance-1", instances, |i| {
        let s = &i.perms[0];
        let moved = s.act_inverse(&i.parts)?;
        let lhs = i.outer.act(s)?.gamma(&moved)?;
        let plain = i.outer.gamma(&i.parts)?;
        let rhs = if drop_block_perm {
            plain
        } else {
            let sizes: Vec<usize> = moved.iter().map(YObject::arity).collect();
            plain.act(&s.block_perm(&sizes)?)?
        };
        expect_eq(&lhs, &rhs)
    })
}

/// Every tuple `(t_1, …, t_n)` with `t_i ∈ Σ_{sizes[i]}`.
pub(crate) fn perm_tuples(sizes: &[usize]) -> Vec<Vec<Permutation>> {
    sizes.iter().fold(vec![Vec::new()], |acc, &k| {
        acc.into_iter()
            .flat_map(|prefix| {
                Permutation::all(k).map(move |t| {
                    let mut next = prefix.clone();
                    next.push(t);
                    next
                })
            })
            .collect()
    })
}

fn second_equivariance(pool: &Pool) -> LawReport {
    let instances = pool.compositions().flat_map(|(outer, parts)| {
        let sizes: Vec<usize> = parts.iter().map(YObject::arity).collect();
        perm_tuples(&sizes)
            .into_iter()
            .map(move |perms| Equivariance {
                outer: outer.clone(),
                parts: parts.clone(),
                perms,
            })
    });
    check_law("equivariance-2", instances, |i| {
        let acted = i
            .parts
            .iter()
            .zip(&i.perms)
            .map(|(p, t)| p.act(t))
            .collect::<Result<Vec<_>, _>>()?;
        let lhs = i.outer.gamma(&acted)?;
        let rhs = i
            .outer
            .gamma(&i.parts)?
            .act(&Permutation::block_sum(&i.perms))?;
        expect_eq(&lhs, &rhs)
    })
}
