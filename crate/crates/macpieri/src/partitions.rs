//! Partitions, integer sequences, compositions and θ-indices.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::BTreeMap;
use std::fmt;

/// Weakly decreasing sequence of positive parts (zeros are stripped).
///
/// `Ord` is plain lexicographic order on the parts; enumeration and JSON
/// output use the reverse of it.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!("{parts:?} is not weakly decreasing")));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    /// Sort arbitrary nonnegative parts into a partition.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn row(k: usize) -> Self {
        Self::from_unsorted(vec![k])
    }

    pub fn column(k: usize) -> Self {
        Partition(vec![1; k])
    }

    pub fn hook(r: usize, s: usize) -> Self {
        let mut v = vec![r];
        v.extend(std::iter::repeat(1).take(s));
        Self::from_unsorted(v)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Part `i` (0-based), zero beyond the length.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn largest(&self) -> usize {
        self.part(0)
    }

    /// `m_i(λ)`.
    pub fn multiplicity(&self, i: usize) -> usize {
        self.0.iter().filter(|&&p| p == i).count()
    }

    /// `[m_1, m_2, …, m_{λ_1}]`.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.largest()];
        for &p in &self.0 {
            m[p - 1] += 1;
        }
        m
    }

    /// Build `(1^{m_1}, 2^{m_2}, …)`.
    pub fn from_multiplicities(m: &[usize]) -> Self {
        let mut parts = Vec::new();
        for (i, &c) in m.iter().enumerate().rev() {
            parts.extend(std::iter::repeat(i + 1).take(c));
        }
        Partition(parts)
    }

    pub fn conjugate(&self) -> Self {
        let mut c = Vec::with_capacity(self.largest());
        for i in 1..=self.largest() {
            c.push(self.0.iter().filter(|&&p| p >= i).count());
        }
        Partition(c)
    }

    /// `z_λ = ∏ i^{m_i} m_i!`.
    pub fn z_factor(&self) -> BigInt {
        let mut z = BigInt::one();
        for (i, &m) in self.multiplicities().iter().enumerate() {
            for k in 1..=m {
                z *= BigInt::from((i + 1) * k);
            }
        }
        z
    }

    /// Parts padded with zeros to length `n` (`n` must be at least the length).
    pub fn padded(&self, n: usize) -> Vec<usize> {
        assert!(n >= self.len(), "padding {self} to length {n}");
        let mut v = self.0.clone();
        v.resize(n, 0);
        v
    }

    pub fn dominates(&self, other: &Partition) -> bool {
        if self.weight() != other.weight() {
            return false;
        }
        let (mut a, mut b) = (0, 0);
        for i in 0..self.len().max(other.len()) {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return false;
            }
        }
        true
    }

    /// Young diagram inclusion `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && (0..other.len()).all(|i| self.part(i) >= other.part(i))
    }

    /// `self − inner` has at most one cell per column.
    pub fn is_horizontal_strip_over(&self, inner: &Partition) -> bool {
        self.contains(inner) && (0..self.len()).all(|i| i + 1 >= self.len() || self.part(i + 1) <= inner.part(i))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(d)?;
        Partition::new(v).map_err(serde::de::Error::custom)
    }
}

/// Finite sequence of integers, any sign, any order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IntSeq(pub Vec<i64>);

impl IntSeq {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Weakly decreasing with nonnegative entries.
    pub fn is_partition(&self) -> bool {
        self.0.iter().all(|&x| x >= 0) && self.0.windows(2).all(|w| w[0] >= w[1])
    }

    pub fn to_partition(&self) -> Option<Partition> {
        if self.is_partition() {
            Some(Partition::from_unsorted(self.0.iter().map(|&x| x as usize).collect()))
        } else {
            None
        }
    }

    pub fn from_partition(p: &Partition, n: usize) -> Self {
        IntSeq(p.padded(n).into_iter().map(|x| x as i64).collect())
    }
}

impl fmt::Display for IntSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// Sequence of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::Parse(format!("{parts:?} has a zero part")));
        }
        Ok(Composition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    /// `[c_i] = c_1 + … + c_i`; index 0 gives 0.
    pub fn partial_sum(&self, i: usize) -> usize {
        self.0[..i].iter().sum()
    }
}

impl<'de> Deserialize<'de> for Composition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(d)?;
        Composition::new(v).map_err(serde::de::Error::custom)
    }
}

/// `θ ∈ N^n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ThetaVector(pub Vec<usize>);

impl ThetaVector {
    pub fn zero(n: usize) -> Self {
        ThetaVector(vec![0; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    /// `T = {k : θ_k ≠ 0}` (0-based).
    pub fn support(&self) -> Vec<usize> {
        (0..self.len()).filter(|&k| self.0[k] != 0).collect()
    }

    /// Every vector of length `n` with `|θ| ≤ max_weight`, lexicographic.
    pub fn all_bounded(n: usize, max_weight: usize) -> Vec<ThetaVector> {
        fn rec(n: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<ThetaVector>) {
            if cur.len() == n {
                out.push(ThetaVector(cur.clone()));
                return;
            }
            for x in 0..=left {
                cur.push(x);
                rec(n, left - x, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, max_weight, &mut Vec::with_capacity(n), &mut out);
        out
    }

    /// Every vector of length `n` with entries in `0..=max_entry`.
    pub fn all_boxed(n: usize, max_entry: usize) -> Vec<ThetaVector> {
        let mut out = vec![ThetaVector(Vec::new())];
        for _ in 0..n {
            out = out
                .into_iter()
                .flat_map(|v| {
                    (0..=max_entry).map(move |x| {
                        let mut w = v.0.clone();
                        w.push(x);
                        ThetaVector(w)
                    })
                })
                .collect();
        }
        out
    }
}

/// Strictly upper triangular `n × n` matrix of nonnegative integers.
/// Indices are 1-based as in `θ_{ij}`, `1 ≤ i < j ≤ n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ThetaMatrix {
    n: usize,
    entries: BTreeMap<(usize, usize), usize>,
}

impl ThetaMatrix {
    pub fn zero(n: usize) -> Self {
        ThetaMatrix { n, entries: BTreeMap::new() }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> usize {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn set(&mut self, i: usize, j: usize, v: usize) -> Result<()> {
        if !(1 <= i && i < j && j <= self.n) {
            return Err(Error::Parameter(format!("θ index ({i},{j}) outside the strict upper triangle of size {}", self.n)));
        }
        if v == 0 {
            self.entries.remove(&(i, j));
        } else {
            self.entries.insert((i, j), v);
        }
        Ok(())
    }

    /// Grow to size `n`, keeping the entries.
    pub fn resized(&self, n: usize) -> Self {
        assert!(n >= self.n);
        ThetaMatrix { n, entries: self.entries.clone() }
    }

    /// Nonzero entries `(i, j, v)` in row-major order.
    pub fn nonzero(&self) -> Vec<(usize, usize, usize)> {
        self.entries.iter().map(|(&(i, j), &v)| (i, j, v)).collect()
    }
}

#[derive(Serialize, Deserialize)]
struct ThetaMatrixWire {
    n: usize,
    entries: Vec<(usize, usize, usize)>,
}

impl Serialize for ThetaMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ThetaMatrixWire { n: self.n, entries: self.nonzero() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for ThetaMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let w = ThetaMatrixWire::deserialize(d)?;
        let mut m = ThetaMatrix::zero(w.n);
        for (i, j, v) in w.entries {
            m.set(i, j, v).map_err(serde::de::Error::custom)?;
        }
        Ok(m)
    }
}

/// Partitions of `n` in reverse-lexicographic order.
pub fn enumerate_partitions(n: usize, max_len: Option<usize>, max_part: Option<usize>) -> Vec<Partition> {
    fn rec(left: usize, cap: usize, slots: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if left == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        if slots == 0 {
            return;
        }
        for p in (1..=cap.min(left)).rev() {
            cur.push(p);
            rec(left - p, p, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, max_part.unwrap_or(n), max_len.unwrap_or(n.max(1)), &mut Vec::new(), &mut out);
    out
}

/// All partitions of weight at most `n`, by weight then reverse-lex.
pub fn partitions_up_to(n: usize) -> Vec<Partition> {
    (0..=n).flat_map(|k| enumerate_partitions(k, None, None)).collect()
}

/// The `2^{n−1}` compositions of `n`, in decreasing lexicographic order.
pub fn enumerate_compositions(n: usize) -> Vec<Composition> {
    fn rec(left: usize, cur: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if left == 0 {
            out.push(Composition(cur.clone()));
            return;
        }
        for p in (1..=left).rev() {
            cur.push(p);
            rec(left - p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(n, &mut Vec::new(), &mut out);
    }
    out
}

/// Distinct rearrangements of the parts of `λ` that are not weakly decreasing.
pub fn non_partition_rearrangements(lambda: &Partition) -> Vec<IntSeq> {
    let mut v: Vec<i64> = lambda.parts().iter().map(|&p| p as i64).collect();
    v.sort_unstable();
    let mut out = Vec::new();
    loop {
        let s = IntSeq(v.clone());
        if !s.is_partition() {
            out.push(s);
        }
        // next lexicographic permutation
        let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else { break };
        let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
        v.swap(i - 1, j);
        v[i..].reverse();
    }
    out
}
