//! Infinitesimal characters: strictly decreasing rational sequences, one per
//! infinite place.

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partitions::OrderedPartition;
use crate::rational::{self, frac, int, Rational};
use crate::shapes::RefinedShape;

/// A regular infinitesimal character at each of an ordered list of places.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct InfChar {
    rank: usize,
    places: Vec<Vec<Rational>>,
}

impl InfChar {
    /// The rank is read off the first place; with no places it is zero.
    pub fn new(places: Vec<Vec<Rational>>) -> Result<Self> {
        let n = places.first().map_or(0, Vec::len);
        Self::with_rank(n, places)
    }

    /// Like `new`, with the rank given explicitly so that zero places are allowed.
    pub fn with_rank(n: usize, places: Vec<Vec<Rational>>) -> Result<Self> {
        for seq in &places {
            if seq.len() != n {
                return Err(Error::LengthMismatch {
                    expected: n,
                    got: seq.len(),
                });
            }
            check_decreasing(seq)?;
        }
        Ok(Self { rank: n, places })
    }

    pub fn single(seq: Vec<Rational>) -> Result<Self> {
        Self::new(vec![seq])
    }

    pub fn places(&self) -> &[Vec<Rational>] {
        &self.places
    }

    pub fn place(&self, v: usize) -> &[Rational] {
        &self.places[v]
    }

    pub fn num_places(&self) -> usize {
        self.places.len()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Regular and integral at every place.
    pub fn is_regular_integral(&self) -> bool {
        let n = self.rank() as u32;
        self.places.iter().all(|s| is_regular_integral(s, n))
    }
}

impl Serialize for InfChar {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<Vec<String>> = self
            .places
            .iter()
            .map(|p| p.iter().map(rational::to_string).collect())
            .collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for InfChar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<Vec<String>>::deserialize(d)?;
        let places = v
            .iter()
            .map(|p| p.iter().map(|s| rational::parse(s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()
            .map_err(serde::de::Error::custom)?;
        Self::new(places).map_err(serde::de::Error::custom)
    }
}

fn check_decreasing(seq: &[Rational]) -> Result<()> {
    if seq.windows(2).all(|w| w[0] > w[1]) {
        Ok(())
    } else {
        Err(Error::NotRegular(format_seq(seq)))
    }
}

pub fn format_seq(seq: &[Rational]) -> String {
    let v: Vec<String> = seq.iter().map(rational::to_string).collect();
    format!("({})", v.join(","))
}

/// ρ_N = ((N−1)/2, (N−3)/2, …, −(N−1)/2).
pub fn rho(n: u32) -> Vec<Rational> {
    (0..n as i64).map(|i| frac(n as i64 - 1 - 2 * i, 2)).collect()
}

/// Strictly decreasing, all integers when N is odd and all half-integers
/// when N is even.
pub fn is_regular_integral(lambda: &[Rational], n: u32) -> bool {
    if lambda.len() != n as usize || check_decreasing(lambda).is_err() {
        return false;
    }
    if n % 2 == 1 {
        lambda.iter().all(Rational::is_integer)
    } else {
        lambda.iter().all(rational::is_half_integer)
    }
}

/// Cuts `lambda` into contiguous segments whose lengths are the parts of `p`.
pub fn p_parts(lambda: &[Rational], p: &OrderedPartition) -> Result<Vec<Vec<Rational>>> {
    if lambda.len() != p.rank() as usize {
        return Err(Error::LengthMismatch {
            expected: p.rank() as usize,
            got: lambda.len(),
        });
    }
    let mut out = Vec::with_capacity(p.len());
    let mut start = 0;
    for &n in p.parts() {
        let end = start + n as usize;
        out.push(lambda[start..end].to_vec());
        start = end;
    }
    Ok(out)
}

/// Whether every segment is a progression with step −1.
pub fn is_step_one(seg: &[Rational]) -> bool {
    let one = int(1);
    seg.windows(2).all(|w| &w[0] - &w[1] == one)
}

/// Whether each P-part of `lambda` is an arithmetic progression of step −1.
pub fn is_adapted(lambda: &[Rational], p: &OrderedPartition) -> bool {
    p_parts(lambda, p).is_ok_and(|segs| segs.iter().all(|s| is_step_one(s)))
}

/// The multiset {ξ + (d+1)/2 − l : ξ ∈ xi, 1 ≤ l ≤ d}, sorted decreasingly.
pub fn block_expansion(xi: &[Rational], d: u32) -> Vec<Rational> {
    let mut out: Vec<Rational> = xi.iter().flat_map(|x| segment(x, d)).collect();
    out.sort_by(|a, b| b.cmp(a));
    out
}

/// The step −1 progression of length `d` centred at `centre`.
pub fn segment(centre: &Rational, d: u32) -> Vec<Rational> {
    let top = centre + frac(d as i64 - 1, 2);
    (0..d as i64).map(|l| &top - int(l)).collect()
}

/// Per place, the union of the block expansions of all blocks of the shape.
pub fn total_infchar(shape: &RefinedShape) -> Result<InfChar> {
    let mut places = Vec::with_capacity(shape.num_places());
    for v in 0..shape.num_places() {
        let mut all: Vec<Rational> = shape
            .blocks()
            .iter()
            .flat_map(|b| block_expansion(b.infchar().place(v), b.d))
            .collect();
        all.sort_by(|a, b| b.cmp(a));
        if all.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::IrregularTotalCharacter);
        }
        places.push(all);
    }
    InfChar::with_rank(shape.rank() as usize, places)
}

/// ∏_{i<j} (λᵢ−λⱼ)/(j−i): the dimension of the irreducible representation of
/// the rank-n general linear group with infinitesimal character λ.
pub fn weyl_dim(lambda: &[Rational]) -> Result<BigInt> {
    check_decreasing(lambda)?;
    let mut acc = Rational::one();
    for i in 0..lambda.len() {
        for j in i + 1..lambda.len() {
            acc *= (&lambda[i] - &lambda[j]) / int((j - i) as i64);
        }
    }
    debug_assert!(acc.is_integer());
    Ok(acc.to_integer())
}
