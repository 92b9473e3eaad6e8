//! Finite permutations and block operations.
//!
//! A [`Permutation`] of degree `n` is stored as its image sequence. Externally
//! (JSON, [`Permutation::from_images`], [`Permutation::images`]) indices are
//! 1-based; internally they are 0-based.
//!
//! Two readings of a permutation appear throughout the crate:
//!
//! * as a *wire map*: position `i` is sent to position `σ(i)`; this is how
//!   morphisms of the free symmetric monoidal category compose, and
//!   `compose(s, t)(i) = s(t(i))`;
//! * as an action on tuples: [`Permutation::act_inverse`] computes
//!   `σ⁻¹x = (x_{σ(1)}, …, x_{σ(n)})`, which is the normative convention every
//!   other action is defined from. [`Permutation::act`] is the left action
//!   `σx`, placing `x_i` at position `σ(i)`.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// Builds a permutation from 1-based images.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let zero_based = images
            .iter()
            .map(|&i| {
                i.checked_sub(1)
                    .ok_or_else(|| Error::NotABijection(images.clone()))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_zero_based(zero_based).map_err(|_| Error::NotABijection(images))
    }

    /// Builds a permutation from 0-based images.
    pub fn from_zero_based(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::NotABijection(images.iter().map(|i| i + 1).collect()));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    /// The transposition of two 1-based indices in `Σ_n`.
    pub fn transposition(n: usize, i: usize, j: usize) -> Result<Self> {
        if i == 0 || j == 0 || i > n || j > n {
            return Err(Error::NotABijection(vec![i, j]));
        }
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(i - 1, j - 1);
        Ok(Permutation { images })
    }

    /// `τ⟨n,m⟩`: moves a leading block of length `n` past a block of length `m`.
    pub fn block_transposition(n: usize, m: usize) -> Self {
        let images = (0..n).map(|i| m + i).chain(0..m).collect();
        Permutation { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// 1-based image sequence.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|i| i + 1).collect()
    }

    /// 0-based image sequence.
    pub fn zero_based(&self) -> &[usize] {
        &self.images
    }

    /// Image of a 0-based index.
    pub fn map(&self, i: usize) -> usize {
        self.images[i]
    }

    /// `self ∘ other`, i.e. `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(Permutation {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        Permutation { images }
    }

    /// `σ⁻¹x = (x_{σ(1)}, …, x_{σ(n)})`.
    ///
    /// This is a right action: `act_inverse(s∘t, x) = act_inverse(t, act_inverse(s, x))`.
    pub fn act_inverse<T: Clone>(&self, xs: &[T]) -> Result<Vec<T>> {
        self.check_len(xs.len())?;
        Ok(self.images.iter().map(|&i| xs[i].clone()).collect())
    }

    /// `σx`, the left action placing `x_i` at position `σ(i)`.
    pub fn act<T: Clone>(&self, xs: &[T]) -> Result<Vec<T>> {
        self.inverse().act_inverse(xs)
    }

    fn check_len(&self, len: usize) -> Result<()> {
        if len != self.degree() {
            return Err(Error::LengthMismatch {
                expected: self.degree(),
                found: len,
            });
        }
        Ok(())
    }

    /// Block sum `σ_1 ⊕ ⋯ ⊕ σ_k`: each part acts on its own contiguous block.
    pub fn block_sum<'a, I>(parts: I) -> Permutation
    where
        I: IntoIterator<Item = &'a Permutation>,
    {
        let mut images = Vec::new();
        for part in parts {
            let offset = images.len();
            images.extend(part.images.iter().map(|i| i + offset));
        }
        Permutation { images }
    }

    /// Block permutation `σ⟨k_1, …, k_n⟩`.
    ///
    /// `sizes[i]` is the length of the `i`-th block of the sequence being
    /// rearranged. As a wire map the result sends block `i` to block slot
    /// `σ(i)`, preserving order inside each block. Equivalently,
    /// `act_inverse(block_perm(σ, (|b_{σ(1)}|, …, |b_{σ(n)}|)), b_1 ⊙ ⋯ ⊙ b_n)`
    /// equals `b_{σ(1)} ⊙ ⋯ ⊙ b_{σ(n)}`.
    pub fn block_perm(&self, sizes: &[usize]) -> Result<Permutation> {
        self.check_len(sizes.len())?;
        let n = self.degree();
        let inv = self.inverse();
        // offset of each target block slot
        let mut slot_offset = vec![0; n];
        let mut acc = 0;
        for (slot, offset) in slot_offset.iter_mut().enumerate() {
            *offset = acc;
            acc += sizes[inv.images[slot]];
        }
        let mut images = Vec::with_capacity(acc);
        for (block, &size) in sizes.iter().enumerate() {
            let base = slot_offset[self.images[block]];
            images.extend(base..base + size);
        }
        Ok(Permutation { images })
    }

    /// Sizes of the blocks after rearrangement: `(k_{σ⁻¹(1)}, …)`.
    pub fn permuted_sizes(&self, sizes: &[usize]) -> Result<Vec<usize>> {
        self.act(sizes)
    }

    /// `n!`, saturating.
    pub fn count(n: usize) -> u64 {
        (1..=n as u64).fold(1u64, |acc, k| acc.saturating_mul(k))
    }

    /// The `index`-th permutation of `Σ_n` in lexicographic order of images.
    pub fn nth(n: usize, mut index: u64) -> Permutation {
        let mut pool: Vec<usize> = (0..n).collect();
        let mut images = Vec::with_capacity(n);
        for k in (0..n).rev() {
            let f = Self::count(k);
            let pick = (index / f) as usize;
            index %= f;
            images.push(pool.remove(pick));
        }
        Permutation { images }
    }

    /// All of `Σ_n` in lexicographic order.
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        (0..Self::count(n)).map(move |i| Self::nth(n, i))
    }

    /// Stable sort permutation: the `σ` with `σx` sorted by `key`, keeping
    /// the relative order of equal keys.
    pub fn sorting<K: Ord>(keys: &[K]) -> Permutation {
        let mut order: Vec<usize> = (0..keys.len()).collect();
        order.sort_by(|&a, &b| keys[a].cmp(&keys[b]));
        // order[p] = index placed at position p; σ(index) = p
        let mut images = vec![0; keys.len()];
        for (p, &i) in order.iter().enumerate() {
            images[i] = p;
        }
        Permutation { images }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.images())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.images())
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.images().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let images = Vec::<usize>::deserialize(deserializer)?;
        Permutation::from_images(images).map_err(serde::de::Error::custom)
    }
}
