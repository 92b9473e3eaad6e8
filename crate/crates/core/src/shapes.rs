//! Parenthesizations `V(k)`, slot subsets `𝒫_n(k)` and the pairs `Z(n)`.
//!
//! A [`ZObject`] is a complete binary parenthesization of `k` letters together
//! with `n ≤ k` marked leaves. These are the objects of the free symmetric
//! monoidal category on one generator and the first component of every
//! object of the operad `Y`.

use std::fmt;
use std::sync::Arc;

use serde::de::{self, Deserializer};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A complete binary parenthesization; `V(0)` is empty, so there is no tree
/// without leaves.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Paren {
    Leaf,
    Node(Arc<Paren>, Arc<Paren>),
}

impl Paren {
    pub fn node(left: Paren, right: Paren) -> Paren {
        Paren::Node(Arc::new(left), Arc::new(right))
    }

    pub fn leaf_count(&self) -> usize {
        match self {
            Paren::Leaf => 1,
            Paren::Node(l, r) => l.leaf_count() + r.leaf_count(),
        }
    }

    /// `((1·1)·1)·…`, the left-nested tree on `k ≥ 1` leaves.
    pub fn left_nested(k: usize) -> Option<Paren> {
        (k >= 1).then(|| (1..k).fold(Paren::Leaf, |acc, _| Paren::node(acc, Paren::Leaf)))
    }

    /// `1·(1·(1·…))`, the right-nested tree on `k ≥ 1` leaves.
    pub fn right_nested(k: usize) -> Option<Paren> {
        (k >= 1).then(|| (1..k).fold(Paren::Leaf, |acc, _| Paren::node(Paren::Leaf, acc)))
    }

    /// Replaces the leaves, in left-to-right order, by the given trees.
    fn graft(&self, next: &mut dyn FnMut() -> Paren) -> Paren {
        match self {
            Paren::Leaf => next(),
            Paren::Node(l, r) => {
                let l = l.graft(next);
                let r = r.graft(next);
                Paren::node(l, r)
            }
        }
    }
}

impl fmt::Debug for Paren {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Paren::Leaf => write!(f, "1"),
            Paren::Node(l, r) => write!(f, "({l:?}·{r:?})"),
        }
    }
}

impl Serialize for Paren {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Paren::Leaf => serializer.serialize_str("leaf"),
            Paren::Node(l, r) => (l.as_ref(), r.as_ref()).serialize(serializer),
        }
    }
}

impl<'de> Deserialize<'de> for Paren {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let value = serde_json::Value::deserialize(deserializer)?;
        paren_from_value(&value).map_err(de::Error::custom)
    }
}

fn paren_from_value(value: &serde_json::Value) -> Result<Paren> {
    match value {
        serde_json::Value::String(s) if s == "leaf" => Ok(Paren::Leaf),
        serde_json::Value::Array(items) if items.len() == 2 => Ok(Paren::node(
            paren_from_value(&items[0])?,
            paren_from_value(&items[1])?,
        )),
        other => Err(Error::Parse(format!("not a parenthesization: {other}"))),
    }
}

/// All of `V(k)`. `V(0)` is empty.
pub fn enumerate_parens(k: usize) -> Vec<Paren> {
    let mut table: Vec<Vec<Paren>> = vec![Vec::new(), vec![Paren::Leaf]];
    for size in 2..=k {
        let mut level = Vec::new();
        for i in 1..size {
            for l in &table[i] {
                for r in &table[size - i] {
                    level.push(Paren::node(l.clone(), r.clone()));
                }
            }
        }
        table.push(level);
    }
    if k < table.len() {
        std::mem::take(&mut table[k])
    } else {
        Vec::new()
    }
}

/// A strictly increasing set of leaf positions inside `{1, …, ambient}`.
///
/// Stored 0-based.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SlotSet {
    elements: Vec<usize>,
    ambient: usize,
}

impl SlotSet {
    /// Builds a slot set from 1-based positions.
    pub fn new(elements: Vec<usize>, ambient: usize) -> Result<Self> {
        let ok = elements.windows(2).all(|w| w[0] < w[1])
            && elements.iter().all(|&e| e >= 1 && e <= ambient);
        if !ok {
            return Err(Error::InvalidSlotSet { elements, ambient });
        }
        Ok(SlotSet {
            elements: elements.into_iter().map(|e| e - 1).collect(),
            ambient,
        })
    }

    pub(crate) fn from_zero_based(elements: Vec<usize>, ambient: usize) -> Self {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(elements.iter().all(|&e| e < ambient));
        SlotSet { elements, ambient }
    }

    pub fn full(ambient: usize) -> Self {
        SlotSet {
            elements: (0..ambient).collect(),
            ambient,
        }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    /// 1-based elements.
    pub fn elements(&self) -> Vec<usize> {
        self.elements.iter().map(|e| e + 1).collect()
    }

    pub fn zero_based(&self) -> &[usize] {
        &self.elements
    }

    pub fn contains_zero_based(&self, i: usize) -> bool {
        self.elements.binary_search(&i).is_ok()
    }

    /// All of `𝒫_n(k)` in lexicographic order.
    pub fn enumerate(n: usize, k: usize) -> Vec<SlotSet> {
        fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<SlotSet>) {
            if cur.len() == n {
                out.push(SlotSet::from_zero_based(cur.clone(), k));
                return;
            }
            for i in start..k {
                if k - i < n - cur.len() {
                    break;
                }
                cur.push(i);
                go(i + 1, n, k, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if n <= k {
            go(0, n, k, &mut Vec::new(), &mut out);
        }
        out
    }
}

impl fmt::Debug for SlotSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}/{}", self.elements(), self.ambient)
    }
}

/// An element `(a, R)` of `Z(n) = ∐_{k≥n} V(k) × 𝒫_n(k)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ZObject {
    tree: Paren,
    marks: SlotSet,
}

impl ZObject {
    /// Pairs a tree with 1-based marked positions.
    pub fn new(tree: Paren, marks: Vec<usize>) -> Result<Self> {
        let width = tree.leaf_count();
        Ok(ZObject {
            marks: SlotSet::new(marks, width)?,
            tree,
        })
    }

    pub(crate) fn from_parts(tree: Paren, marks: SlotSet) -> Self {
        debug_assert_eq!(tree.leaf_count(), marks.ambient());
        ZObject { tree, marks }
    }

    /// `(1, ∅) ∈ Z(0)`.
    pub fn unit() -> Self {
        ZObject::from_parts(Paren::Leaf, SlotSet::from_zero_based(vec![], 1))
    }

    /// `(1, {1}) ∈ Z(1)`, the free generator and the operadic unit.
    pub fn generator() -> Self {
        ZObject::from_parts(Paren::Leaf, SlotSet::full(1))
    }

    /// A tree with every leaf marked.
    pub fn fully_marked(tree: Paren) -> Self {
        let width = tree.leaf_count();
        ZObject::from_parts(tree, SlotSet::full(width))
    }

    pub fn tree(&self) -> &Paren {
        &self.tree
    }

    pub fn marks(&self) -> &SlotSet {
        &self.marks
    }

    pub fn arity(&self) -> usize {
        self.marks.len()
    }

    pub fn width(&self) -> usize {
        self.marks.ambient()
    }

    /// Replaces the marked set, keeping the tree.
    pub fn with_marks(&self, marks: Vec<usize>) -> Result<Self> {
        ZObject::new(self.tree.clone(), marks)
    }

    /// `(a,R) ⊕ (b,S) = ((a,b), R ∐ k+S)`.
    pub fn tensor(&self, other: &ZObject) -> ZObject {
        let k = self.width();
        let elements = self
            .marks
            .elements
            .iter()
            .copied()
            .chain(other.marks.elements.iter().map(|e| e + k))
            .collect();
        ZObject {
            tree: Paren::node(self.tree.clone(), other.tree.clone()),
            marks: SlotSet::from_zero_based(elements, k + other.width()),
        }
    }

    /// Non-symmetric operadic substitution: the `i`-th marked leaf (in
    /// increasing position order) is replaced by `parts[i]`; unmarked leaves
    /// stay unmarked leaves.
    pub fn gamma(&self, parts: &[ZObject]) -> Result<ZObject> {
        if parts.len() != self.arity() {
            return Err(Error::ArityMismatch {
                expected: self.arity(),
                found: parts.len(),
            });
        }
        let mut marks = Vec::new();
        let mut pieces = Vec::with_capacity(self.width());
        let mut offset = 0;
        let mut next_part = 0;
        for leaf in 0..self.width() {
            if self.marks.contains_zero_based(leaf) {
                let part = &parts[next_part];
                next_part += 1;
                marks.extend(part.marks.elements.iter().map(|e| e + offset));
                offset += part.width();
                pieces.push(part.tree.clone());
            } else {
                offset += 1;
                pieces.push(Paren::Leaf);
            }
        }
        let mut pieces = pieces.into_iter();
        let tree = self
            .tree
            .graft(&mut || pieces.next().expect("one piece per leaf"));
        Ok(ZObject {
            tree,
            marks: SlotSet::from_zero_based(marks, offset),
        })
    }

    /// All elements of `Z(n)` with width exactly `k`.
    pub fn enumerate(n: usize, k: usize) -> Vec<ZObject> {
        let slots = SlotSet::enumerate(n, k);
        enumerate_parens(k)
            .into_iter()
            .flat_map(|tree| {
                slots
                    .iter()
                    .map(move |marks| ZObject::from_parts(tree.clone(), marks.clone()))
            })
            .collect()
    }

    /// All elements of `Z(n)` with width at most `max_width`.
    pub fn enumerate_up_to(n: usize, max_width: usize) -> Vec<ZObject> {
        (n.max(1)..=max_width)
            .flat_map(|k| ZObject::enumerate(n, k))
            .collect()
    }

    /// All shapes of any arity with width at most `max_width`, by width and
    /// then by arity.
    pub fn enumerate_up_to_width(max_width: usize) -> Vec<ZObject> {
        (1..=max_width)
            .flat_map(|k| (0..=k).flat_map(move |n| ZObject::enumerate(n, k)))
            .collect()
    }
}

impl fmt::Debug for ZObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{:?}", self.tree, self.marks.elements())
    }
}

#[derive(Serialize, Deserialize)]
struct ZObjectRepr {
    tree: Paren,
    marks: Vec<usize>,
    width: usize,
}

impl Serialize for ZObject {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        ZObjectRepr {
            tree: self.tree.clone(),
            marks: self.marks.elements(),
            width: self.width(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ZObject {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = ZObjectRepr::deserialize(deserializer)?;
        let z = ZObject::new(repr.tree, repr.marks).map_err(de::Error::custom)?;
        if z.width() != repr.width {
            return Err(de::Error::custom(format!(
                "width {} does not match tree with {} leaves",
                repr.width,
                z.width()
            )));
        }
        Ok(z)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Catalan numbers by the closed form, independent of the recursion.
    fn catalan(n: u64) -> u64 {
        let mut c = 1u64;
        for i in 0..n {
            c = c * 2 * (2 * i + 1) / (i + 2);
        }
        c
    }

    #[test]
    fn paren_counts() {
        assert!(enumerate_parens(0).is_empty());
        assert_eq!(enumerate_parens(1), vec![Paren::Leaf]);
        assert_eq!(enumerate_parens(2).len(), 1);
        assert_eq!(enumerate_parens(4).len(), 5);
        for k in 1..=9 {
            assert_eq!(
                enumerate_parens(k).len() as u64,
                catalan(k as u64 - 1),
                "k={k}"
            );
        }
    }

    #[test]
    fn parens_are_distinct_with_right_leaf_count() {
        for k in 1..=7 {
            let all = enumerate_parens(k);
            assert!(all.iter().all(|t| t.leaf_count() == k));
            let mut sorted = all.clone();
            sorted.sort();
            sorted.dedup();
            assert_eq!(sorted.len(), all.len());
        }
    }

    #[test]
    fn tensor_examples() {
        let g = ZObject::generator();
        let z = g.tensor(&g);
        assert_eq!(z.tree(), &Paren::node(Paren::Leaf, Paren::Leaf));
        assert_eq!(z.marks().elements(), vec![1, 2]);

        let with_unit = z.tensor(&ZObject::unit());
        assert_eq!(with_unit.marks().elements(), z.marks().elements());
        assert_eq!(with_unit.width(), z.width() + 1);

        let left = z.tensor(&g);
        let right = g.tensor(&z);
        assert_ne!(left, right, "no implicit reassociation");
    }

    #[test]
    fn gamma_unit_and_bookkeeping() {
        for z in ZObject::enumerate_up_to(2, 4) {
            assert_eq!(
                ZObject::generator()
                    .gamma(std::slice::from_ref(&z))
                    .unwrap(),
                z
            );
            let ones = vec![ZObject::generator(); z.arity()];
            assert_eq!(z.gamma(&ones).unwrap(), z);
        }
        // 2-ary b of width 3, parts of widths 1 and 2
        let b = ZObject::new(
            Paren::node(Paren::node(Paren::Leaf, Paren::Leaf), Paren::Leaf),
            vec![1, 3],
        )
        .unwrap();
        let p1 = ZObject::generator();
        let p2 = ZObject::new(Paren::node(Paren::Leaf, Paren::Leaf), vec![1, 2]).unwrap();
        let d = b.gamma(&[p1, p2]).unwrap();
        assert_eq!(d.width(), 4);
        assert_eq!(d.arity(), 3);
        assert_eq!(d.marks().elements(), vec![1, 3, 4]);
        assert!(b.gamma(&[]).is_err());
    }

    #[test]
    fn gamma_arity_adds() {
        let parts_pool = ZObject::enumerate_up_to(1, 2)
            .into_iter()
            .chain(ZObject::enumerate_up_to(0, 2))
            .chain(ZObject::enumerate_up_to(2, 2))
            .collect::<Vec<_>>();
        for b in ZObject::enumerate_up_to(2, 3) {
            for p in &parts_pool {
                for q in &parts_pool {
                    let d = b.gamma(&[p.clone(), q.clone()]).unwrap();
                    assert_eq!(d.arity(), p.arity() + q.arity());
                    assert_eq!(d.width(), b.width() - 2 + p.width() + q.width());
                }
            }
        }
    }

    /// Operadic associativity and interchange with `⊕`, checked over all
    /// objects with widths ≤ 4 and arities ≤ 3 whose composites stay within
    /// width 6.
    #[test]
    fn gamma_is_associative_exhaustively() {
        let by_arity: Vec<Vec<ZObject>> = (0..=3).map(|n| ZObject::enumerate_up_to(n, 4)).collect();
        let small: Vec<Vec<ZObject>> = (0..=3).map(|n| ZObject::enumerate_up_to(n, 2)).collect();
        let mut checked = 0usize;
        for outer in by_arity.iter().take(3).flatten() {
            let n = outer.arity();
            // parts drawn from small pools to keep the enumeration bounded
            let mut stack: Vec<Vec<ZObject>> = vec![vec![]];
            for _ in 0..n {
                stack = stack
                    .into_iter()
                    .flat_map(|prefix| {
                        small.iter().take(3).flatten().map(move |p| {
                            let mut v = prefix.clone();
                            v.push(p.clone());
                            v
                        })
                    })
                    .collect();
            }
            for parts in stack {
                let inner = outer.gamma(&parts).unwrap();
                let leaves: Vec<ZObject> = (0..inner.arity())
                    .map(|i| small[i % 2 + 1][i % small[i % 2 + 1].len()].clone())
                    .collect();
                let left = inner.gamma(&leaves).unwrap();
                let mut rest = leaves.as_slice();
                let grouped: Vec<ZObject> = parts
                    .iter()
                    .map(|p| {
                        let (mine, tail) = rest.split_at(p.arity());
                        rest = tail;
                        p.gamma(mine).unwrap()
                    })
                    .collect();
                let right = outer.gamma(&grouped).unwrap();
                assert_eq!(left, right);
                checked += 1;
            }
        }
        assert!(checked > 1000, "only {checked} instances");
    }

    #[test]
    fn tensor_gamma_interchange() {
        let pool = ZObject::enumerate_up_to(1, 2);
        for b1 in ZObject::enumerate_up_to(1, 3) {
            for b2 in ZObject::enumerate_up_to(1, 2) {
                for p in &pool {
                    for q in &pool {
                        let left = b1
                            .gamma(std::slice::from_ref(p))
                            .unwrap()
                            .tensor(&b2.gamma(std::slice::from_ref(q)).unwrap());
                        let right = b1.tensor(&b2).gamma(&[p.clone(), q.clone()]).unwrap();
                        assert_eq!(left, right);
                    }
                }
            }
        }
    }

    #[test]
    fn json_shapes() {
        let z = ZObject::new(
            Paren::node(Paren::node(Paren::Leaf, Paren::Leaf), Paren::Leaf),
            vec![1, 3],
        )
        .unwrap();
        let json = serde_json::to_string(&z).unwrap();
        assert_eq!(
            json,
            r#"{"tree":[["leaf","leaf"],"leaf"],"marks":[1,3],"width":3}"#
        );
        let back: ZObject = serde_json::from_str(&json).unwrap();
        assert_eq!(back, z);
        assert!(serde_json::from_str::<ZObject>(
            r#"{"tree":["leaf","leaf"],"marks":[1,3],"width":2}"#
        )
        .is_err());
        assert!(
            serde_json::from_str::<ZObject>(r#"{"tree":"leaf","marks":[],"width":2}"#).is_err()
        );
    }

    #[test]
    fn slot_sets() {
        assert_eq!(SlotSet::enumerate(2, 4).len(), 6);
        assert_eq!(SlotSet::enumerate(0, 3).len(), 1);
        assert!(SlotSet::enumerate(3, 2).is_empty());
        assert!(SlotSet::new(vec![2, 1], 3).is_err());
        assert!(SlotSet::new(vec![4], 3).is_err());
        assert!(SlotSet::new(vec![1, 1], 3).is_err());
    }
}
