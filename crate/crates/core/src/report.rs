//! Pass/fail bookkeeping shared by every law suite.
//!
//! A law is checked on a stream of instances; the report keeps the number of
//! instances checked, the number that failed and the first failing instance
//! in enumeration order, so reports do not depend on scheduling.

use rayon::iter::{ParallelBridge, ParallelIterator};
use serde::Serialize;
use serde_json::Value;

use crate::error::Error;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Counterexample {
    pub instance: Value,
    pub lhs: Value,
    pub rhs: Value,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LawReport {
    pub law: String,
    pub checked: u64,
    pub failed: u64,
    pub counterexample: Option<Counterexample>,
}

impl LawReport {
    pub fn passed(&self) -> bool {
        self.failed == 0
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub passed: bool,
    pub laws: Vec<LawReport>,
}

impl SuiteReport {
    pub fn new(suite: impl Into<String>, laws: Vec<LawReport>) -> Self {
        let passed = laws.iter().all(LawReport::passed);
        SuiteReport {
            suite: suite.into(),
            passed,
            laws,
        }
    }

    pub fn law(&self, name: &str) -> Option<&LawReport> {
        self.laws.iter().find(|l| l.law == name)
    }

    pub fn checked(&self) -> u64 {
        self.laws.iter().map(|l| l.checked).sum()
    }

    pub fn failures(&self) -> impl Iterator<Item = &LawReport> {
        self.laws.iter().filter(|l| !l.passed())
    }
}

/// The two sides of a diagram that failed to commute, or the error raised
/// while evaluating one of them.
#[derive(Clone, Debug, PartialEq)]
pub struct Mismatch {
    pub lhs: Value,
    pub rhs: Value,
}

impl Mismatch {
    pub fn new<L: Serialize, R: Serialize>(lhs: &L, rhs: &R) -> Self {
        Mismatch {
            lhs: to_value(lhs),
            rhs: to_value(rhs),
        }
    }

    pub fn note(message: impl Into<String>) -> Self {
        Mismatch {
            lhs: Value::String(message.into()),
            rhs: Value::Null,
        }
    }
}

impl From<Error> for Mismatch {
    fn from(e: Error) -> Self {
        Mismatch::note(format!("error: {e}"))
    }
}

pub type Check = Result<(), Mismatch>;

pub fn expect_eq<T: PartialEq + Serialize>(lhs: &T, rhs: &T) -> Check {
    if lhs == rhs {
        Ok(())
    } else {
        Err(Mismatch::new(lhs, rhs))
    }
}

pub fn expect(holds: bool, message: &str) -> Check {
    if holds {
        Ok(())
    } else {
        Err(Mismatch::note(message))
    }
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).unwrap_or_else(|e| Value::String(format!("unserializable: {e}")))
}

/// Runs `check` on every instance, in parallel, and summarises the results.
pub fn check_law<I, T, F>(law: &str, instances: I, check: F) -> LawReport
where
    I: IntoIterator<Item = T>,
    I::IntoIter: Send,
    T: Serialize + Send,
    F: Fn(&T) -> Check + Sync + Send,
{
    let (checked, failed, first) = instances
        .into_iter()
        .enumerate()
        .par_bridge()
        .map(|(idx, instance)| match check(&instance) {
            Ok(()) => (1u64, 0u64, None),
            Err(m) => (1, 1, Some((idx, to_value(&instance), m))),
        })
        .reduce(
            || (0, 0, None),
            |a, b| {
                let first = match (a.2, b.2) {
                    (Some(x), Some(y)) => Some(if x.0 <= y.0 { x } else { y }),
                    (x, y) => x.or(y),
                };
                (a.0 + b.0, a.1 + b.1, first)
            },
        );
    LawReport {
        law: law.to_string(),
        checked,
        failed,
        counterexample: first.map(|(_, instance, m)| Counterexample {
            instance,
            lhs: m.lhs,
            rhs: m.rhs,
        }),
    }
}

/// Every tuple of indices into a universe of `sizes.len()` objects with at
/// most `max_len` entries and total size at most `max_total`, shortest first.
pub fn index_tuples(sizes: &[usize], len: usize, max_total: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(len);
    fn go(
        sizes: &[usize],
        len: usize,
        budget: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if current.len() == len {
            out.push(current.clone());
            return;
        }
        for (i, &s) in sizes.iter().enumerate() {
            if s <= budget {
                current.push(i);
                go(sizes, len, budget - s, current, out);
                current.pop();
            }
        }
    }
    go(sizes, len, max_total, &mut current, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_failure_is_by_enumeration_order() {
        let report = check_law("even", 0..100u32, |&n| expect(n % 7 != 3, "hit"));
        assert_eq!(report.checked, 100);
        assert_eq!(report.failed, 14);
        assert_eq!(
            report.counterexample.unwrap().instance,
            serde_json::json!(3)
        );
    }

    #[test]
    fn empty_law_passes() {
        let report = check_law("none", Vec::<u8>::new(), |_| Err(Mismatch::note("x")));
        assert!(report.passed());
        assert_eq!(report.checked, 0);
    }

    #[test]
    fn tuples_respect_budget() {
        let sizes = [1, 2, 3];
        assert_eq!(index_tuples(&sizes, 2, 3).len(), 3);
        assert_eq!(index_tuples(&sizes, 0, 0), vec![Vec::<usize>::new()]);
        // brute-force count
        let count = (0..3)
            .flat_map(|a| (0..3).map(move |b| (a, b)))
            .flat_map(|(a, b)| (0..3).map(move |c| (a, b, c)))
            .filter(|&(a, b, c)| sizes[a] + sizes[b] + sizes[c] <= 6)
            .count();
        assert_eq!(index_tuples(&sizes, 3, 6).len(), count);
    }
}
