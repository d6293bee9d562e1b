//! Ordered partitions, unordered partitions (Arthur-SL₂ types) and ordered
//! bipartitions of a signature (p,q).

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize};

use crate::error::{Error, Result};

/// A composition of `rank` into positive parts, order significant.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct OrderedPartition(Vec<u32>);

impl OrderedPartition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidPartition("empty ordered partition".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("zero part in {parts:?}")));
        }
        Ok(Self(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn rank(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn to_unordered(&self) -> UnorderedPartition {
        UnorderedPartition::new(self.0.clone()).expect("parts are positive")
    }
}

impl<'de> Deserialize<'de> for OrderedPartition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Self::new(Vec::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}

/// A multiset of positive integers, stored as a non-increasing sequence.
///
/// The derived order is lexicographic on that sequence; every set-valued
/// result in the crate uses it.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct UnorderedPartition(Vec<u32>);

impl UnorderedPartition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("zero part in {parts:?}")));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self(parts))
    }

    /// Builds a partition from `(part, multiplicity)` pairs; zero multiplicities are ignored.
    pub fn from_counts(counts: impl IntoIterator<Item = (u32, u32)>) -> Result<Self> {
        let mut parts = Vec::new();
        for (part, mult) in counts {
            parts.extend(std::iter::repeat_n(part, mult as usize));
        }
        Self::new(parts)
    }

    pub fn ones(n: u32) -> Self {
        Self(vec![1; n as usize])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn rank(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Part → multiplicity, parts in increasing order.
    pub fn counts(&self) -> BTreeMap<u32, u32> {
        let mut m = BTreeMap::new();
        for &p in &self.0 {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    /// Multiset union (sum of multiplicities).
    pub fn union(&self, other: &Self) -> Self {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Self::new(v).expect("parts are positive")
    }

    /// Multiset union taking the larger multiplicity of each part.
    pub fn max_union(&self, other: &Self) -> Self {
        let mut m = self.counts();
        for (p, c) in other.counts() {
            let e = m.entry(p).or_insert(0);
            *e = (*e).max(c);
        }
        Self::from_counts(m).expect("parts are positive")
    }

    /// Whether `sub` is a sub-multiset of `self`.
    pub fn contains(&self, sub: &Self) -> bool {
        let mine = self.counts();
        sub.counts()
            .into_iter()
            .all(|(p, c)| mine.get(&p).copied().unwrap_or(0) >= c)
    }

    /// The parts strictly greater than one.
    pub fn without_ones(&self) -> Self {
        Self(self.0.iter().copied().filter(|&p| p > 1).collect())
    }

    pub fn count_of(&self, part: u32) -> u32 {
        self.0.iter().filter(|&&p| p == part).count() as u32
    }
}

impl<'de> Deserialize<'de> for UnorderedPartition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Self::new(Vec::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for UnorderedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl std::str::FromStr for UnorderedPartition {
    type Err = Error;

    /// Accepts `"(2,2,1)"`, `"2,2,1"` or `"()"`.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if inner.is_empty() {
            return Ok(Self::default());
        }
        let parts = inner
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad partition {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }
}

/// An ordered bipartition ((p₁,q₁),…,(p_r,q_r)) of a signature (p,q).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Bipartition(Vec<(u32, u32)>);

impl Bipartition {
    pub fn new(pairs: Vec<(u32, u32)>) -> Result<Self> {
        if pairs.is_empty() {
            return Err(Error::InvalidBipartition("empty bipartition".into()));
        }
        if let Some(i) = pairs.iter().position(|&(p, q)| p == 0 && q == 0) {
            return Err(Error::InvalidBipartition(format!("block {i} is (0,0)")));
        }
        Ok(Self(pairs))
    }

    pub fn pairs(&self) -> &[(u32, u32)] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn totals(&self) -> (u32, u32) {
        self.0.iter().fold((0, 0), |(a, b), &(p, q)| (a + p, b + q))
    }

    pub fn rank(&self) -> u32 {
        let (p, q) = self.totals();
        p + q
    }

    /// Every degenerate block (pᵢqᵢ = 0) is (1,0) or (0,1).
    pub fn is_in_p1(&self) -> bool {
        self.0.iter().all(|&(p, q)| p * q > 0 || p + q == 1)
    }

    /// Swaps every pair (pᵢ,qᵢ) ↦ (qᵢ,pᵢ).
    pub fn swapped(&self) -> Self {
        Self(self.0.iter().map(|&(p, q)| (q, p)).collect())
    }
}

impl<'de> Deserialize<'de> for Bipartition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Self::new(Vec::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(p, q)| format!("({p},{q})")).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// The ordered partition of pair sums.
pub fn beta(b: &Bipartition) -> OrderedPartition {
    OrderedPartition(b.0.iter().map(|&(p, q)| p + q).collect())
}

/// Splits (n,0) into n copies of (1,0) and (0,m) into m copies of (0,1).
pub fn gamma(b: &Bipartition) -> Bipartition {
    let mut out = Vec::with_capacity(b.len());
    for &(p, q) in &b.0 {
        match (p, q) {
            (n, 0) => out.extend(std::iter::repeat_n((1, 0), n as usize)),
            (0, m) => out.extend(std::iter::repeat_n((0, 1), m as usize)),
            pair => out.push(pair),
        }
    }
    Bipartition(out)
}

/// All bipartitions B with β(B) = `parts` and totals (p,q), in increasing
/// lexicographic order of the pair sequence (equivalently, decreasing order of
/// the qᵢ sequence).
pub fn fibers_beta(parts: &OrderedPartition, p: u32, q: u32) -> Vec<Bipartition> {
    fn go(parts: &[u32], p: u32, q: u32, acc: &mut Vec<(u32, u32)>, out: &mut Vec<Bipartition>) {
        let Some((&n, rest)) = parts.split_first() else {
            if p == 0 && q == 0 {
                out.push(Bipartition(acc.clone()));
            }
            return;
        };
        for a in 0..=n.min(p) {
            let b = n - a;
            if b > q {
                continue;
            }
            acc.push((a, b));
            go(rest, p - a, q - b, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    if parts.rank() == p + q {
        go(parts.parts(), p, q, &mut Vec::new(), &mut out);
    }
    out
}

/// Whether the parts of `x` can be grouped so that the group sums are exactly
/// the parts of `q`.
pub fn refines(x: &UnorderedPartition, q: &UnorderedPartition) -> bool {
    fn place(parts: &[u32], caps: &mut [u32]) -> bool {
        let Some((&first, rest)) = parts.split_first() else {
            return caps.iter().all(|&c| c == 0);
        };
        let mut tried = BTreeSet::new();
        for i in 0..caps.len() {
            if caps[i] >= first && tried.insert(caps[i]) {
                caps[i] -= first;
                if place(rest, caps) {
                    return true;
                }
                caps[i] += first;
            }
        }
        false
    }
    if x.rank() != q.rank() || x.len() < q.len() {
        return false;
    }
    place(x.parts(), &mut q.0.clone())
}

/// pᵢ = ⌈nᵢ/2⌉, qᵢ = ⌊nᵢ/2⌋ for each part nᵢ, in the stored (descending) order.
pub fn balanced_bipartition(q: &UnorderedPartition) -> Bipartition {
    Bipartition(q.0.iter().map(|&n| (n - n / 2, n / 2)).collect())
}

/// All unordered partitions of `n` in decreasing lexicographic order.
pub fn partitions_of(n: u32) -> Vec<UnorderedPartition> {
    fn go(n: u32, max: u32, acc: &mut Vec<u32>, out: &mut Vec<UnorderedPartition>) {
        if n == 0 {
            out.push(UnorderedPartition(acc.clone()));
            return;
        }
        for k in (1..=n.min(max)).rev() {
            acc.push(k);
            go(n - k, k, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Every unordered partition refining `q`.
pub fn refinements(q: &UnorderedPartition) -> BTreeSet<UnorderedPartition> {
    let mut acc: BTreeSet<UnorderedPartition> = BTreeSet::from([UnorderedPartition::default()]);
    for &n in q.parts() {
        let pieces = partitions_of(n);
        acc = acc
            .iter()
            .flat_map(|a| pieces.iter().map(move |x| a.union(x)))
            .collect();
    }
    acc
}

/// All compositions (ordered partitions) of `n`.
pub fn compositions_of(n: u32) -> Vec<OrderedPartition> {
    fn go(n: u32, acc: &mut Vec<u32>, out: &mut Vec<OrderedPartition>) {
        if n == 0 {
            out.push(OrderedPartition(acc.clone()));
            return;
        }
        for k in 1..=n {
            acc.push(k);
            go(n - k, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        go(n, &mut Vec::new(), &mut out);
    }
    out
}
