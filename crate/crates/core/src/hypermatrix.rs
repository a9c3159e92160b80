//! Symmetric hypermatrices stored by index multiset.
//!
//! An order-`k`, dimension-`n` symmetric hypermatrix has one free entry per
//! multiset of `k` indices drawn from `1..=n`, i.e. `C(n+k-1, k)` entries.
//! Multisets are kept as sorted 0-based tuples and ranked in colex order.

use std::collections::HashMap;
use std::ops::{Add, Mul};
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graphs::{steiner_distance, Graph, Permutation, VertexSet};

/// Numeric kinds accepted by [`SymmetricHypermatrix::contract`].
pub trait Scalar: Clone + Zero + One + Add<Output = Self> + Mul<Output = Self> {
    fn from_i64(v: i64) -> Self;
}

impl Scalar for f64 {
    fn from_i64(v: i64) -> Self {
        v as f64
    }
}

impl Scalar for i64 {
    fn from_i64(v: i64) -> Self {
        v
    }
}

impl Scalar for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
}

impl Scalar for BigRational {
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
}

pub(crate) fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// `C(n + k - 1, k)`: number of size-`k` multisets over `n` symbols.
pub fn multiset_count(n: usize, k: usize) -> usize {
    if n == 0 {
        return usize::from(k == 0);
    }
    binomial(n + k - 1, k)
}

/// Colex rank of a sorted 0-based multiset.
pub(crate) fn multiset_rank(sorted: &[usize]) -> usize {
    sorted
        .iter()
        .enumerate()
        .map(|(j, &i)| binomial(i + j, j + 1))
        .sum()
}

/// Sorted 0-based multisets of size `k` over `0..n`, in colex order.
pub(crate) fn multisets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let total = multiset_count(n, k);
    let mut out = Vec::with_capacity(total);
    if total == 0 {
        return out;
    }
    let mut cur = vec![0usize; k];
    out.push(cur.clone());
    while out.len() < total {
        let j = (0..k)
            .find(|&j| if j + 1 < k { cur[j] < cur[j + 1] } else { cur[j] + 1 < n })
            .expect("successor exists before the last multiset");
        cur[j] += 1;
        for slot in cur.iter_mut().take(j) {
            *slot = 0;
        }
        out.push(cur.clone());
    }
    out
}

/// Number of distinct orderings of a sorted multiset.
pub(crate) fn multinomial_weight(sorted: &[usize]) -> u64 {
    let mut weight = 1u64;
    let mut run = 0u64;
    let mut placed = 0u64;
    for (idx, &v) in sorted.iter().enumerate() {
        run = if idx > 0 && sorted[idx - 1] == v { run + 1 } else { 1 };
        placed += 1;
        // running multinomial: multiply by placed / run
        weight = weight * placed / run;
    }
    weight
}

/// Order-`k`, dimension-`n` symmetric hypermatrix with integer entries.
#[derive(Debug)]
pub struct SymmetricHypermatrix {
    order: usize,
    dim: usize,
    entries: Vec<i64>,
    plan: OnceLock<ContractionPlan>,
}

impl Clone for SymmetricHypermatrix {
    fn clone(&self) -> Self {
        SymmetricHypermatrix {
            order: self.order,
            dim: self.dim,
            entries: self.entries.clone(),
            plan: OnceLock::new(),
        }
    }
}

impl PartialEq for SymmetricHypermatrix {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.dim == other.dim && self.entries == other.entries
    }
}

impl Eq for SymmetricHypermatrix {}

impl SymmetricHypermatrix {
    /// Fills entries from a function of the sorted 1-based index tuple.
    pub fn from_fn(order: usize, dim: usize, mut f: impl FnMut(&[usize]) -> i64) -> Result<Self> {
        Self::try_from_fn(order, dim, |t| Ok(f(t)))
    }

    pub fn try_from_fn(
        order: usize,
        dim: usize,
        mut f: impl FnMut(&[usize]) -> Result<i64>,
    ) -> Result<Self> {
        if order < 2 {
            return Err(Error::InvalidOrder(order));
        }
        if dim == 0 {
            return Err(Error::TooFewVertices { n: 0, min: 1 });
        }
        let mut one_based = vec![0usize; order];
        let entries = multisets(dim, order)
            .into_iter()
            .map(|m| {
                for (dst, src) in one_based.iter_mut().zip(&m) {
                    *dst = src + 1;
                }
                f(&one_based)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_parts(order, dim, entries))
    }

    fn from_parts(order: usize, dim: usize, entries: Vec<i64>) -> Self {
        SymmetricHypermatrix {
            order,
            dim,
            entries,
            plan: OnceLock::new(),
        }
    }

    /// The all-ones hypermatrix `J_n^k`.
    pub fn all_ones(dim: usize, order: usize) -> Result<Self> {
        Self::from_fn(order, dim, |_| 1)
    }

    /// The unit hypermatrix: 1 on the diagonal `(i, …, i)`, 0 elsewhere.
    pub fn identity(dim: usize, order: usize) -> Result<Self> {
        Self::from_fn(order, dim, |t| i64::from(t[0] == t[t.len() - 1]))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Stored representatives in colex order.
    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    /// Entry at an arbitrary (unsorted) 1-based index tuple.
    pub fn entry(&self, index: &[usize]) -> Result<i64> {
        if index.len() != self.order {
            return Err(Error::DimensionMismatch {
                expected: self.order,
                found: index.len(),
            });
        }
        let mut sorted = Vec::with_capacity(index.len());
        for &i in index {
            if i == 0 || i > self.dim {
                return Err(Error::VertexOutOfRange {
                    vertex: i,
                    n: self.dim,
                });
            }
            sorted.push(i - 1);
        }
        sorted.sort_unstable();
        Ok(self.entries[multiset_rank(&sorted)])
    }

    /// Sorted 1-based index tuples paired with their entries, in storage order.
    pub fn iter(&self) -> impl Iterator<Item = (Vec<usize>, i64)> + '_ {
        multisets(self.dim, self.order)
            .into_iter()
            .zip(self.entries.iter().copied())
            .map(|(m, v)| (m.into_iter().map(|i| i + 1).collect(), v))
    }

    pub fn scaled(&self, c: i64) -> Self {
        Self::from_parts(self.order, self.dim, self.entries.iter().map(|v| v * c).collect())
    }

    /// Entrywise `self - c * identity`.
    pub fn minus_identity(&self, c: i64) -> Self {
        let mut out = self.clone();
        for i in 0..self.dim {
            let idx = multiset_rank(&vec![i; self.order]);
            out.entries[idx] -= c;
        }
        out
    }

    pub fn is_nonnegative(&self) -> bool {
        self.entries.iter().all(|&v| v >= 0)
    }

    /// `(a_0, …, a_k)` where `a_t` is the entry with `t` copies of vertex 2.
    pub fn dim2_profile(&self) -> Result<SliceProfile> {
        if self.dim != 2 {
            return Err(Error::DimensionMismatch {
                expected: 2,
                found: self.dim,
            });
        }
        let k = self.order;
        let profile = (0..=k)
            .map(|t| {
                let sorted: Vec<usize> = std::iter::repeat_n(0, k - t).chain(std::iter::repeat_n(1, t)).collect();
                self.entries[multiset_rank(&sorted)]
            })
            .collect();
        Ok(SliceProfile(profile))
    }

    /// Hypermatrix whose entry at `M` is this one's entry at `perm⁻¹(M)`.
    pub fn relabel(&self, perm: &Permutation) -> Result<Self> {
        if perm.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: perm.len(),
            });
        }
        let inv = perm.inverse();
        Self::from_fn(self.order, self.dim, |t| {
            let mut pre: Vec<usize> = t.iter().map(|&v| inv.apply(v) - 1).collect();
            pre.sort_unstable();
            self.entries[multiset_rank(&pre)]
        })
    }

    /// Per-hypermatrix contraction tables, built on first use.
    pub fn plan(&self) -> &ContractionPlan {
        self.plan.get_or_init(|| ContractionPlan::new(self))
    }

    /// The vector `A x^{k-1}`: coordinate `i` sums
    /// `a(i, i_2, …, i_k) x_{i_2} ⋯ x_{i_k}` over all tuples.
    pub fn contract<T: Scalar>(&self, x: &[T]) -> Result<Vec<T>> {
        if x.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: x.len(),
            });
        }
        Ok(self.plan().apply(x))
    }
}

/// Contraction tables: the `(k-1)`-multisets with their multinomial weights,
/// and for each coordinate the weighted entry of `{i} ∪ M`.
#[derive(Clone, Debug)]
pub struct ContractionPlan {
    monomials: Vec<Vec<usize>>,
    coefficients: Vec<Vec<i64>>,
}

impl ContractionPlan {
    fn new(a: &SymmetricHypermatrix) -> Self {
        let monomials = multisets(a.dim, a.order - 1);
        let weights: Vec<i64> = monomials
            .iter()
            .map(|m| multinomial_weight(m) as i64)
            .collect();
        let mut merged = Vec::with_capacity(a.order);
        let coefficients = (0..a.dim)
            .map(|i| {
                monomials
                    .iter()
                    .zip(&weights)
                    .map(|(m, &w)| {
                        merged.clear();
                        merged.extend_from_slice(m);
                        let pos = merged.partition_point(|&v| v < i);
                        merged.insert(pos, i);
                        a.entries[multiset_rank(&merged)] * w
                    })
                    .collect()
            })
            .collect();
        ContractionPlan {
            monomials,
            coefficients,
        }
    }

    /// Sorted 0-based variable multisets, one per monomial of degree `k-1`.
    pub fn monomials(&self) -> &[Vec<usize>] {
        &self.monomials
    }

    /// `coefficients()[i][m]`: coefficient of monomial `m` in coordinate `i`.
    pub fn coefficients(&self) -> &[Vec<i64>] {
        &self.coefficients
    }

    fn apply<T: Scalar>(&self, x: &[T]) -> Vec<T> {
        let values: Vec<T> = self
            .monomials
            .iter()
            .map(|m| m.iter().fold(T::one(), |acc, &v| acc * x[v].clone()))
            .collect();
        self.coefficients
            .iter()
            .map(|row| {
                row.iter()
                    .zip(&values)
                    .filter(|(&c, _)| c != 0)
                    .fold(T::zero(), |acc, (&c, v)| acc + T::from_i64(c) * v.clone())
            })
            .collect()
    }
}

/// Entry profile `(a_0, …, a_k)` of a dimension-2 symmetric hypermatrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SliceProfile(pub Vec<i64>);

impl SliceProfile {
    pub fn values(&self) -> &[i64] {
        &self.0
    }

    pub fn scaled(&self, c: i64) -> SliceProfile {
        SliceProfile(self.0.iter().map(|v| v * c).collect())
    }
}

/// `D_k(G)`: entry at multiset `M` is the Steiner distance of its support.
pub fn build_steiner_hypermatrix(g: &Graph, k: usize) -> Result<SymmetricHypermatrix> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut cache: HashMap<u64, i64> = HashMap::new();
    SymmetricHypermatrix::try_from_fn(k, g.n(), |t| {
        let support = VertexSet::new(t.iter().copied())?;
        if let Some(&d) = cache.get(&support.mask()) {
            return Ok(d);
        }
        let d = steiner_distance(g, &support)? as i64;
        cache.insert(support.mask(), d);
        Ok(d)
    })
}

#[derive(Serialize, Deserialize)]
struct HypermatrixJson {
    order: usize,
    dim: usize,
    entries: Vec<(Vec<usize>, i64)>,
}

impl Serialize for SymmetricHypermatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        HypermatrixJson {
            order: self.order,
            dim: self.dim,
            entries: self.iter().collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SymmetricHypermatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = HypermatrixJson::deserialize(d)?;
        if raw.order < 2 || raw.dim == 0 {
            return Err(D::Error::custom("order must be >= 2 and dim >= 1"));
        }
        let total = multiset_count(raw.dim, raw.order);
        if raw.entries.len() != total {
            return Err(D::Error::custom(format!(
                "expected {total} entries, found {}",
                raw.entries.len()
            )));
        }
        let mut entries = vec![None; total];
        for (tuple, value) in raw.entries {
            if tuple.len() != raw.order || tuple.iter().any(|&i| i == 0 || i > raw.dim) {
                return Err(D::Error::custom(format!("bad index tuple {tuple:?}")));
            }
            let mut sorted: Vec<usize> = tuple.iter().map(|i| i - 1).collect();
            sorted.sort_unstable();
            let slot = &mut entries[multiset_rank(&sorted)];
            if slot.replace(value).is_some() {
                return Err(D::Error::custom(format!("duplicate index tuple {tuple:?}")));
            }
        }
        let entries = entries.into_iter().map(|v| v.expect("all slots filled")).collect();
        Ok(SymmetricHypermatrix::from_parts(raw.order, raw.dim, entries))
    }
}
