//! Growth exponents R̄, R and R₀ of refined shapes and Arthur-SL₂ types.
//!
//! A block is a pair (T, d): T copies of the d-dimensional representation of
//! the Arthur SL₂.

use std::cmp::Ordering;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::cohomology::{reps_in_degree, reps_in_hodge, LocalCohRep};
use crate::error::{Error, Result};
use crate::partitions::{partitions_of, UnorderedPartition};
use crate::rational::{self, half, int, Rational};
use crate::shapes::{enumerate_q, GlobalCohRep};

/// An exact rational plus an integer multiple of a formal positive
/// infinitesimal ε; ordered lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GrowthValue {
    pub main: Rational,
    pub eps: i64,
}

impl GrowthValue {
    pub fn new(main: Rational, eps: i64) -> Self {
        Self { main, eps }
    }

    pub fn int(n: i64) -> Self {
        Self::new(int(n), 0)
    }

    pub fn minus_one(&self) -> Self {
        Self::new(&self.main - Rational::one(), self.eps)
    }
}

impl Ord for GrowthValue {
    fn cmp(&self, other: &Self) -> Ordering {
        self.main.cmp(&other.main).then(self.eps.cmp(&other.eps))
    }
}

impl PartialOrd for GrowthValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for GrowthValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = rational::to_string(&self.main);
        match self.eps {
            0 => write!(f, "{m}"),
            e if e > 0 => write!(f, "{m}+{e}ε"),
            e => write!(f, "{m}{e}ε"),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct RawGrowth {
    main: String,
    eps: i64,
}

impl Serialize for GrowthValue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RawGrowth {
            main: rational::to_string(&self.main),
            eps: self.eps,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for GrowthValue {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RawGrowth::deserialize(d)?;
        let main = rational::parse(&raw.main).map_err(serde::de::Error::custom)?;
        Ok(Self::new(main, raw.eps))
    }
}

fn rank(blocks: &[(u32, u32)]) -> i64 {
    blocks.iter().map(|&(t, d)| t as i64 * d as i64).sum()
}

/// ½(N² + Σ Tᵢ²dᵢ).
pub fn bar_r(blocks: &[(u32, u32)]) -> GrowthValue {
    let n = rank(blocks);
    let s: i64 = blocks.iter().map(|&(t, d)| (t as i64).pow(2) * d as i64).sum();
    GrowthValue::new(int(n * n + s) * half(), 0)
}

/// R̄ with the corrections for blocks with T = 1, 2, 3:
/// −(½(d²+d)−1) for T = 1, −(3d−3) for T = 2 and −((5−ε)d−5) for T = 3, d > 1.
pub fn r_value(blocks: &[(u32, u32)]) -> GrowthValue {
    let mut v = bar_r(blocks);
    for &(t, d) in blocks {
        let d = d as i64;
        match t {
            1 => v.main -= int(d * d + d) * half() - int(1),
            2 => v.main -= int(3 * d - 3),
            3 if d > 1 => {
                v.main -= int(5 * d - 5);
                v.eps += d;
            }
            _ => {}
        }
    }
    v
}

/// ½(N² − Σ Tᵢ²dᵢ²) + Σ (Tᵢ² + ½Tᵢ(Tᵢ−1)(dᵢ²−1)).
pub fn r0(blocks: &[(u32, u32)]) -> GrowthValue {
    let n = rank(blocks);
    let mut twice = n * n;
    for &(t, d) in blocks {
        let (t, d) = (t as i64, d as i64);
        twice -= t * t * d * d;
        twice += 2 * t * t + t * (t - 1) * (d * d - 1);
    }
    GrowthValue::new(int(twice) * half(), 0)
}

/// Groups equal parts: part d with multiplicity T becomes the block (T, d).
pub fn blocks_of_q(q: &UnorderedPartition) -> Vec<(u32, u32)> {
    q.counts().into_iter().rev().map(|(d, t)| (t, d)).collect()
}

/// R of the shape that groups all equal parts of `q` into one block.
pub fn r_of_q(q: &UnorderedPartition) -> GrowthValue {
    r_value(&blocks_of_q(q))
}

pub fn r0_of_q(q: &UnorderedPartition) -> GrowthValue {
    r0(&blocks_of_q(q))
}

/// Brute-force maximum of R over every block decomposition with Arthur-SL₂ `q`
/// (every way of splitting each multiplicity into block sizes).
pub fn bf_r_of_q(q: &UnorderedPartition, max_rank: u32) -> Result<GrowthValue> {
    if q.rank() > max_rank {
        return Err(Error::OutOfRange(format!("rank {} exceeds {max_rank}", q.rank())));
    }
    let mut decomps: Vec<Vec<(u32, u32)>> = vec![Vec::new()];
    for (d, m) in q.counts() {
        let splits = partitions_of(m);
        decomps = decomps
            .iter()
            .flat_map(|acc| {
                splits.iter().map(move |s| {
                    let mut v = acc.clone();
                    v.extend(s.parts().iter().map(|&t| (t, d)));
                    v
                })
            })
            .collect();
    }
    Ok(decomps
        .iter()
        .map(|b| r_value(b))
        .max()
        .expect("at least one decomposition"))
}

/// R(π₀): the maximum of R over the Arthur-SL₂ types compatible with the
/// representation, and the types attaining it (in increasing order).
pub fn r_pi0(rep: &GlobalCohRep) -> Result<(GrowthValue, Vec<UnorderedPartition>)> {
    let qs = enumerate_q(rep);
    argmax_r(qs.iter())
}

pub(crate) fn argmax_r<'a>(
    qs: impl Iterator<Item = &'a UnorderedPartition>,
) -> Result<(GrowthValue, Vec<UnorderedPartition>)> {
    let mut best: Option<GrowthValue> = None;
    let mut arg = Vec::new();
    for q in qs {
        let r = r_of_q(q);
        match best.as_ref().map(|b| r.cmp(b)) {
            None | Some(Ordering::Greater) => {
                best = Some(r);
                arg = vec![q.clone()];
            }
            Some(Ordering::Equal) => arg.push(q.clone()),
            Some(Ordering::Less) => {}
        }
    }
    best.map(|b| (b, arg)).ok_or(Error::EmptyDelta)
}

/// The closed form (k−1) + ½(N² + T₁² − Σ_{i≥2} dᵢ²) for the odd GSK pattern
/// (T₁,1), (1,d₂), …, (1,d_k).
pub fn odd_gsk_closed_form(t1: u32, ds: &[u32]) -> GrowthValue {
    let n = t1 as i64 + ds.iter().map(|&d| d as i64).sum::<i64>();
    let sq: i64 = ds.iter().map(|&d| (d as i64).pow(2)).sum();
    let twice = n * n + (t1 as i64).pow(2) - sq;
    GrowthValue::new(int(ds.len() as i64) + int(twice) * half(), 0)
}

/// Which cohomology is being bounded.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CohQuery {
    Degree(u64),
    Hodge(u64, u64),
}

/// One representation contributing to the queried cohomology, with its
/// growth exponent.
#[derive(Debug, Clone, Serialize)]
pub struct Contributor {
    pub rep: LocalCohRep,
    pub r: GrowthValue,
    pub q_max: Vec<UnorderedPartition>,
}

/// The contributors to a cohomology group and the largest exponent among them.
#[derive(Debug, Clone, Serialize)]
pub struct CohBound {
    pub contributors: Vec<Contributor>,
    pub bound: Option<GrowthValue>,
}

/// Exponent bound for the queried cohomology of U(p,q) with infinitesimal
/// character `lambda`, taken over every contributing representation.
pub fn coh_bound(p: u32, q: u32, lambda: &[Rational], query: CohQuery) -> Result<CohBound> {
    let reps = match query {
        CohQuery::Degree(i) => reps_in_degree(p, q, lambda, i),
        CohQuery::Hodge(a, b) => reps_in_hodge(p, q, lambda, a, b),
    };
    let mut contributors = Vec::with_capacity(reps.len());
    for rep in reps {
        let global = GlobalCohRep::new(vec![rep.clone()], None)?;
        let (r, q_max) = r_pi0(&global)?;
        contributors.push(Contributor { rep, r, q_max });
    }
    let bound = contributors.iter().map(|c| c.r.clone()).max();
    Ok(CohBound { contributors, bound })
}

impl Default for GrowthValue {
    fn default() -> Self {
        Self::new(Rational::zero(), 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn up(v: &[u32]) -> UnorderedPartition {
        UnorderedPartition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn bar_r_examples() {
        for n in 1..10 {
            assert_eq!(bar_r(&[(n, 1)]), GrowthValue::int((n * n) as i64));
        }
        assert_eq!(bar_r(&[(2, 2)]), GrowthValue::int(12));
        assert_eq!(bar_r(&[(1, 3), (3, 2)]), GrowthValue::int(51));
    }

    #[test]
    fn r_examples() {
        assert_eq!(r_value(&[(2, 2)]), GrowthValue::int(9));
        assert_eq!(r_value(&[(1, 3), (3, 2)]), GrowthValue::new(int(41), 2));
        for n in 3..15u32 {
            for d in 2..n {
                let q = UnorderedPartition::from_counts([(d, 1), (1, n - d)]).unwrap();
                assert_eq!(r_of_q(&q), GrowthValue::int((n * (n - d) + 1) as i64));
            }
        }
    }

    #[test]
    fn r0_examples() {
        assert_eq!(r0(&[(2, 2)]), GrowthValue::int(7));
        assert_eq!(r0(&[(5, 2)]), GrowthValue::int(55));
        for n in 1..10 {
            assert_eq!(r0(&[(n, 1)]), GrowthValue::int((n * n) as i64));
        }
    }

    #[test]
    fn r_of_q_examples() {
        assert_eq!(r_of_q(&up(&[2, 2, 1, 1])), GrowthValue::int(21));
        assert_eq!(r_of_q(&up(&[2, 2, 2])), GrowthValue::new(int(22), 2));
        assert_eq!(r_of_q(&up(&[2, 2, 2, 2, 1, 1])), GrowthValue::int(68));
        assert_eq!(r_of_q(&up(&[2, 2, 2, 2, 2])), GrowthValue::int(75));
        for n in 1..10 {
            assert_eq!(r_of_q(&UnorderedPartition::ones(n)), GrowthValue::int((n * n) as i64));
        }
    }

    #[test]
    fn brute_force_examples() {
        assert_eq!(bf_r_of_q(&up(&[2, 2]), 12).unwrap(), GrowthValue::int(9));
        assert_eq!(bf_r_of_q(&up(&[3, 1]), 12).unwrap(), r_value(&[(1, 3), (1, 1)]));
        assert!(bf_r_of_q(&UnorderedPartition::ones(13), 12).is_err());
    }

    #[test]
    fn ordering() {
        let a = GrowthValue::new(int(21), 2);
        let b = GrowthValue::int(21);
        let c = GrowthValue::new(int(22), -5);
        assert!(a > b && c > a);
        assert_eq!(a.to_string(), "21+2ε");
        assert_eq!(serde_json::to_string(&a).unwrap(), r#"{"main":"21","eps":2}"#);
    }

    #[test]
    fn closed_form_matches_general() {
        assert_eq!(odd_gsk_closed_form(4, &[3]), r_value(&[(4, 1), (1, 3)]));
        assert_eq!(odd_gsk_closed_form(5, &[]), GrowthValue::int(25));
    }
}
