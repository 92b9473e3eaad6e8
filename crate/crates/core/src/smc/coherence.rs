//! Symbolic tensor expressions and coherence morphisms between them.
//!
//! A [`Term`] is a `Y`-object read as an expression in variables and the
//! unit. [`Coh::between`] builds the canonical isomorphism between two terms
//! in the same variables by rewriting each into the left-nested form with the
//! variables in increasing order, using associators, right unitors and
//! adjacent braidings, and composing one rewrite with the inverse of the
//! other. Evaluating the result in an instance gives the canonical
//! isomorphism there.

use crate::error::Result;
use crate::operad::YObject;
use crate::shapes::Paren;

use super::Smc;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Term {
    Unit,
    Var(usize),
    Tensor(Box<Term>, Box<Term>),
}

impl Term {
    pub fn tensor(a: Term, b: Term) -> Term {
        Term::Tensor(Box::new(a), Box::new(b))
    }

    /// Reads `y` as an expression: the `k`-th marked leaf holds the variable
    /// placed there, every unmarked leaf holds the unit.
    pub fn of(y: &YObject) -> Term {
        let slot_to_var = y.sigma().inverse();
        let marks = y.z().marks();
        let mut leaf = 0;
        let mut marked = 0;
        fn go(
            tree: &Paren,
            leaf: &mut usize,
            marked: &mut usize,
            is_marked: &dyn Fn(usize) -> bool,
            var: &dyn Fn(usize) -> usize,
        ) -> Term {
            match tree {
                Paren::Leaf => {
                    let here = *leaf;
                    *leaf += 1;
                    if is_marked(here) {
                        let k = *marked;
                        *marked += 1;
                        Term::Var(var(k))
                    } else {
                        Term::Unit
                    }
                }
                Paren::Node(l, r) => {
                    let l = go(l, leaf, marked, is_marked, var);
                    let r = go(r, leaf, marked, is_marked, var);
                    Term::tensor(l, r)
                }
            }
        }
        go(
            y.z().tree(),
            &mut leaf,
            &mut marked,
            &|i| marks.contains_zero_based(i),
            &|k| slot_to_var.map(k),
        )
    }

    /// `((v_1 ⊕ v_2) ⊕ …) ⊕ v_k`, or the unit when `vars` is empty.
    pub fn left_nested(vars: &[usize]) -> Term {
        match vars.split_last() {
            None => Term::Unit,
            Some((&last, [])) => Term::Var(last),
            Some((&last, front)) => Term::tensor(Term::left_nested(front), Term::Var(last)),
        }
    }

    /// Variables in left-to-right order.
    pub fn vars(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut Vec<usize>) {
        match self {
            Term::Unit => {}
            Term::Var(v) => out.push(*v),
            Term::Tensor(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
        }
    }

    pub fn eval_obj<C: Smc + ?Sized>(&self, c: &C, xs: &[C::Obj]) -> C::Obj {
        match self {
            Term::Unit => c.unit(),
            Term::Var(v) => xs[*v].clone(),
            Term::Tensor(a, b) => c.tensor(&a.eval_obj(c, xs), &b.eval_obj(c, xs)),
        }
    }

    pub fn eval_mor<C: Smc + ?Sized>(&self, c: &C, fs: &[C::Mor]) -> C::Mor {
        match self {
            Term::Unit => c.id(&c.unit()),
            Term::Var(v) => fs[*v].clone(),
            Term::Tensor(a, b) => c.tensor_mor(&a.eval_mor(c, fs), &b.eval_mor(c, fs)),
        }
    }
}

/// A formal composite of structure maps.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Coh {
    Id(Term),
    /// `(a⊕b)⊕c → a⊕(b⊕c)`
    Assoc(Term, Term, Term),
    AssocInv(Term, Term, Term),
    /// `a⊕b → b⊕a`
    Braid(Term, Term),
    /// `a⊕e → a`
    RightUnit(Term),
    RightUnitInv(Term),
    Tensor(Box<Coh>, Box<Coh>),
    /// `first` followed by `second`.
    Then(Box<Coh>, Box<Coh>),
}

impl Coh {
    fn then(self, next: Coh) -> Coh {
        match (&self, &next) {
            (Coh::Id(_), _) => next,
            (_, Coh::Id(_)) => self,
            _ => Coh::Then(Box::new(self), Box::new(next)),
        }
    }

    fn tensor(a: Coh, b: Coh) -> Coh {
        match (a, b) {
            (Coh::Id(x), Coh::Id(y)) => Coh::Id(Term::tensor(x, y)),
            (a, b) => Coh::Tensor(Box::new(a), Box::new(b)),
        }
    }

    pub fn source(&self) -> Term {
        match self {
            Coh::Id(t) => t.clone(),
            Coh::Assoc(a, b, c) => Term::tensor(Term::tensor(a.clone(), b.clone()), c.clone()),
            Coh::AssocInv(a, b, c) => Term::tensor(a.clone(), Term::tensor(b.clone(), c.clone())),
            Coh::Braid(a, b) => Term::tensor(a.clone(), b.clone()),
            Coh::RightUnit(a) => Term::tensor(a.clone(), Term::Unit),
            Coh::RightUnitInv(a) => a.clone(),
            Coh::Tensor(f, g) => Term::tensor(f.source(), g.source()),
            Coh::Then(f, _) => f.source(),
        }
    }

    pub fn target(&self) -> Term {
        self.inverse().source()
    }

    pub fn inverse(&self) -> Coh {
        match self {
            Coh::Id(t) => Coh::Id(t.clone()),
            Coh::Assoc(a, b, c) => Coh::AssocInv(a.clone(), b.clone(), c.clone()),
            Coh::AssocInv(a, b, c) => Coh::Assoc(a.clone(), b.clone(), c.clone()),
            Coh::Braid(a, b) => Coh::Braid(b.clone(), a.clone()),
            Coh::RightUnit(a) => Coh::RightUnitInv(a.clone()),
            Coh::RightUnitInv(a) => Coh::RightUnit(a.clone()),
            Coh::Tensor(f, g) => Coh::Tensor(Box::new(f.inverse()), Box::new(g.inverse())),
            Coh::Then(f, g) => Coh::Then(Box::new(g.inverse()), Box::new(f.inverse())),
        }
    }

    pub fn eval<C: Smc + ?Sized>(&self, c: &C, xs: &[C::Obj]) -> Result<C::Mor> {
        let obj = |t: &Term| t.eval_obj(c, xs);
        Ok(match self {
            Coh::Id(t) => c.id(&obj(t)),
            Coh::Assoc(a, b, d) => c.associator(&obj(a), &obj(b), &obj(d)),
            Coh::AssocInv(a, b, d) => c.associator_inv(&obj(a), &obj(b), &obj(d)),
            Coh::Braid(a, b) => c.braid(&obj(a), &obj(b)),
            Coh::RightUnit(a) => c.right_unitor(&obj(a)),
            Coh::RightUnitInv(a) => c.right_unitor_inv(&obj(a)),
            Coh::Tensor(f, g) => c.tensor_mor(&f.eval(c, xs)?, &g.eval(c, xs)?),
            Coh::Then(f, g) => c.compose(&g.eval(c, xs)?, &f.eval(c, xs)?)?,
        })
    }

    /// `e⊕a → a` as `c_a ∘ τ_{e,a}`.
    pub fn left_unit(a: Term) -> Coh {
        Coh::Braid(Term::Unit, a.clone()).then(Coh::RightUnit(a))
    }

    /// Rewrites `t` into `Term::left_nested(&t.vars())`.
    pub fn flatten(t: &Term) -> Coh {
        match t {
            Term::Unit | Term::Var(_) => Coh::Id(t.clone()),
            Term::Tensor(a, b) => {
                let (left, right) = (a.vars(), b.vars());
                Coh::tensor(Coh::flatten(a), Coh::flatten(b)).then(Coh::merge(&left, &right))
            }
        }
    }

    /// `ln(left) ⊕ ln(right) → ln(left ⊙ right)`.
    fn merge(left: &[usize], right: &[usize]) -> Coh {
        let ln_left = Term::left_nested(left);
        match right.split_last() {
            None => Coh::RightUnit(ln_left),
            Some(_) if left.is_empty() => Coh::left_unit(Term::left_nested(right)),
            Some((_, [])) => Coh::Id(Term::tensor(ln_left, Term::left_nested(right))),
            Some((&last, front)) => {
                let rebracket = Coh::AssocInv(ln_left, Term::left_nested(front), Term::Var(last));
                let inner = Coh::merge(left, front);
                rebracket.then(Coh::tensor(inner, Coh::Id(Term::Var(last))))
            }
        }
    }

    /// `ln(vars) → ln(vars with positions i and i+1 exchanged)`.
    fn swap(vars: &[usize], i: usize) -> Coh {
        let (&last, front) = vars.split_last().expect("at least two variables");
        if i + 2 < vars.len() {
            return Coh::tensor(Coh::swap(front, i), Coh::Id(Term::Var(last)));
        }
        let a = Term::Var(vars[i]);
        let b = Term::Var(vars[i + 1]);
        if i == 0 {
            return Coh::Braid(a, b);
        }
        let prefix = Term::left_nested(&vars[..i]);
        Coh::Assoc(prefix.clone(), a.clone(), b.clone())
            .then(Coh::tensor(
                Coh::Id(prefix.clone()),
                Coh::Braid(a.clone(), b.clone()),
            ))
            .then(Coh::AssocInv(prefix, b, a))
    }

    /// Bubble-sorts a left-nested term into increasing variable order.
    pub fn sort(vars: &[usize]) -> Coh {
        let mut current = vars.to_vec();
        let mut path = Coh::Id(Term::left_nested(vars));
        let n = current.len();
        for pass in 0..n {
            for i in 0..n.saturating_sub(pass + 1) {
                if current[i] > current[i + 1] {
                    path = path.then(Coh::swap(&current, i));
                    current.swap(i, i + 1);
                }
            }
        }
        path
    }

    /// `t → ln(0, 1, …, n−1)`.
    pub fn normalize(t: &Term) -> Coh {
        Coh::flatten(t).then(Coh::sort(&t.vars()))
    }

    /// The canonical map between two terms in the same variables.
    pub fn between(a: &Term, b: &Term) -> Coh {
        if a == b {
            return Coh::Id(a.clone());
        }
        Coh::normalize(a).then(Coh::normalize(b).inverse())
    }
}
