//! Adams–Johnson packets as β-fibers, and the characters of their component
//! groups.

use std::collections::BTreeSet;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::infchar::{self, is_adapted};
use crate::partitions::{beta, fibers_beta, Bipartition, OrderedPartition};
use crate::rational::Rational;

/// An ordered partition with a signature and an adapted infinitesimal character.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PacketParam {
    partition: OrderedPartition,
    signature: (u32, u32),
    infchar: Vec<Rational>,
}

impl PacketParam {
    pub fn new(partition: OrderedPartition, signature: (u32, u32), infchar: Vec<Rational>) -> Result<Self> {
        if partition.rank() != signature.0 + signature.1 {
            return Err(Error::LengthMismatch {
                expected: (signature.0 + signature.1) as usize,
                got: partition.rank() as usize,
            });
        }
        if !is_adapted(&infchar, &partition) {
            return Err(Error::InvalidRep(format!(
                "{} is not adapted to {:?}",
                infchar::format_seq(&infchar),
                partition.parts()
            )));
        }
        Ok(Self {
            partition,
            signature,
            infchar,
        })
    }

    pub fn partition(&self) -> &OrderedPartition {
        &self.partition
    }

    pub fn signature(&self) -> (u32, u32) {
        self.signature
    }

    pub fn infchar(&self) -> &[Rational] {
        &self.infchar
    }
}

/// Values ±1 of a character on the generators εᵢ of (ℤ/2)^I.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignVector(pub Vec<i8>);

impl SignVector {
    pub fn product(&self) -> i8 {
        self.0.iter().product()
    }

    pub fn is_trivial(&self) -> bool {
        self.0.iter().all(|&s| s == 1)
    }
}

impl Serialize for SignVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

/// The members of the packet: every bipartition over the ordered partition.
pub fn packet_members(param: &PacketParam) -> Vec<Bipartition> {
    fibers_beta(&param.partition, param.signature.0, param.signature.1)
}

/// 0 if a ≡ 0,1 (mod 4), 1 if a ≡ 2,3 (mod 4); equals a(a−1)/2 mod 2.
pub fn chi4(a: u32) -> u32 {
    u32::from(a % 4 >= 2)
}

fn sign(exponent: u64) -> i8 {
    if exponent.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// The character with value (−1)^{aᵢa_{<i} + qᵢ + χ₄(aᵢ)} on εᵢ, where
/// aᵢ = pᵢ + qᵢ and a_{<i} = Σ_{j<i} aⱼ.
pub fn eta_char(b: &Bipartition, p: &OrderedPartition) -> Result<SignVector> {
    if &beta(b) != p {
        return Err(Error::InvalidBipartition(format!("β({b}) ≠ {:?}", p.parts())));
    }
    let mut before = 0u64;
    let mut out = Vec::with_capacity(b.len());
    for &(pi, qi) in b.pairs() {
        let a = (pi + qi) as u64;
        out.push(sign(a * before + qi as u64 + chi4(a as u32) as u64));
        before += a;
    }
    Ok(SignVector(out))
}

/// The simplified form (−1)^{(i−1) + qᵢ + χ₄(aᵢ)}, valid when every part is odd.
pub fn eta_char_odd(b: &Bipartition, p: &OrderedPartition) -> Result<SignVector> {
    if &beta(b) != p {
        return Err(Error::InvalidBipartition(format!("β({b}) ≠ {:?}", p.parts())));
    }
    if p.parts().iter().any(|a| a % 2 == 0) {
        return Err(Error::InvalidPartition("the odd form needs odd parts".into()));
    }
    Ok(SignVector(
        b.pairs()
            .iter()
            .enumerate()
            .map(|(i, &(pi, qi))| sign(i as u64 + qi as u64 + chi4(pi + qi) as u64))
            .collect(),
    ))
}

/// Indices of the blocks with even SL₂ dimension.
pub fn s_psi(ds: &[u32]) -> BTreeSet<usize> {
    ds.iter()
        .enumerate()
        .filter(|(_, d)| *d % 2 == 0)
        .map(|(i, _)| i)
        .collect()
}

/// Whether s_ψ is trivial in the quotient by the diagonal element.
pub fn s_psi_is_trivial(ds: &[u32]) -> bool {
    let s = s_psi(ds);
    s.is_empty() || s.len() == ds.len()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Triviality {
    True,
    Unknown,
}

/// ε_ψ is trivial when all dᵢ have the same parity; otherwise the answer
/// depends on root numbers and is reported as unknown.
pub fn epsilon_is_trivial(ds: &[u32]) -> Triviality {
    if ds.windows(2).all(|w| w[0] % 2 == w[1] % 2) {
        Triviality::True
    } else {
        Triviality::Unknown
    }
}
