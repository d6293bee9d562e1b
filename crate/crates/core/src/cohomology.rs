//! Cohomological representations A_q(λ) of U(p,q), indexed by bipartitions in
//! 𝒫₁(p,q), and their cohomological degrees and Hodge weights.

use serde::{Deserialize, Deserializer, Serialize};

use crate::error::{Error, Result};
use crate::infchar::{self, is_adapted, is_regular_integral, is_step_one};
use crate::partitions::{beta, Bipartition};
use crate::rational::{self, Rational};

/// A cohomological representation at one real place.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct LocalCohRep {
    signature: (u32, u32),
    bipartition: Bipartition,
    #[serde(with = "rational::serde_vec")]
    infchar: Vec<Rational>,
}

#[derive(Deserialize)]
struct RawLocal {
    signature: (u32, u32),
    bipartition: Bipartition,
    #[serde(with = "rational::serde_vec")]
    infchar: Vec<Rational>,
}

impl<'de> Deserialize<'de> for LocalCohRep {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RawLocal::deserialize(d)?;
        Self::new(raw.signature, raw.bipartition, raw.infchar).map_err(serde::de::Error::custom)
    }
}

impl LocalCohRep {
    pub fn new(signature: (u32, u32), bipartition: Bipartition, infchar: Vec<Rational>) -> Result<Self> {
        if bipartition.totals() != signature {
            return Err(Error::InvalidRep(format!(
                "bipartition {bipartition} does not have totals {signature:?}"
            )));
        }
        if !bipartition.is_in_p1() {
            return Err(Error::InvalidRep(format!("{bipartition} is not in P1")));
        }
        let n = signature.0 + signature.1;
        if !is_regular_integral(&infchar, n) {
            return Err(Error::InvalidRep(format!(
                "{} is not regular integral of rank {n}",
                infchar::format_seq(&infchar)
            )));
        }
        if !is_adapted(&infchar, &beta(&bipartition)) {
            return Err(Error::InvalidRep(format!(
                "{} is not adapted to {bipartition}",
                infchar::format_seq(&infchar)
            )));
        }
        Ok(Self {
            signature,
            bipartition,
            infchar,
        })
    }

    /// The representation with trivial coefficients (λ = ρ).
    pub fn with_rho(bipartition: Bipartition) -> Result<Self> {
        let sig = bipartition.totals();
        let rho = infchar::rho(sig.0 + sig.1);
        Self::new(sig, bipartition, rho)
    }

    pub fn signature(&self) -> (u32, u32) {
        self.signature
    }

    pub fn bipartition(&self) -> &Bipartition {
        &self.bipartition
    }

    pub fn infchar(&self) -> &[Rational] {
        &self.infchar
    }

    pub fn rank(&self) -> u32 {
        self.signature.0 + self.signature.1
    }
}

/// Lowest degree, Hodge weights and range of a cohomological representation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct HodgeProfile {
    pub r: u64,
    pub r_plus: u64,
    pub r_minus: u64,
    pub max_shift: u64,
}

impl HodgeProfile {
    /// Degrees R, R+2, …, R+2·max_shift.
    pub fn degrees(&self) -> impl Iterator<Item = u64> + '_ {
        (0..=self.max_shift).map(move |t| self.r + 2 * t)
    }

    pub fn top_degree(&self) -> u64 {
        self.r + 2 * self.max_shift
    }

    /// The Hodge weight (R⁺+t, R⁻+t) in degree R+2t.
    pub fn weight_in_degree(&self, degree: u64) -> Option<(u64, u64)> {
        if degree < self.r || (degree - self.r) % 2 == 1 {
            return None;
        }
        let t = (degree - self.r) / 2;
        (t <= self.max_shift).then_some((self.r_plus + t, self.r_minus + t))
    }

    pub fn contains_weight(&self, a: u64, b: u64) -> bool {
        self.weight_in_degree(a + b) == Some((a, b))
    }
}

/// The closed-form profile of any bipartition.
pub fn profile_of(b: &Bipartition) -> HodgeProfile {
    let pairs = b.pairs();
    let (p, q) = b.totals();
    let diag: u64 = pairs.iter().map(|&(a, c)| a as u64 * c as u64).sum();
    let mut r_plus = 0u64;
    let mut r_minus = 0u64;
    let mut p_before = 0u64;
    let mut q_before = 0u64;
    for &(a, c) in pairs {
        r_plus += p_before * c as u64;
        r_minus += a as u64 * q_before;
        p_before += a as u64;
        q_before += c as u64;
    }
    HodgeProfile {
        r: p as u64 * q as u64 - diag,
        r_plus,
        r_minus,
        max_shift: diag,
    }
}

pub fn coh_profile(rep: &LocalCohRep) -> HodgeProfile {
    profile_of(rep.bipartition())
}

/// Lowest degree of cohomology of the packet with Arthur-SL₂ (d, 1^{(N−d)}) on
/// a group with split rank r = min(p,q).
pub fn lowest_degree(d: u32, n: u32, r: u32) -> Result<i64> {
    if d.is_multiple_of(2) || d <= 1 || d > n || 2 * r > n {
        return Err(Error::OutOfRange(format!("lowest_degree(d={d}, N={n}, r={r})")));
    }
    let (d, n, r) = (d as i64, n as i64, r as i64);
    Ok(if 2 * r >= d - 1 {
        r * (n - r) - (d * d - 1) / 4
    } else {
        r * (n - d)
    })
}

/// Every bipartition in 𝒫₁(p,q), in increasing lexicographic order.
pub fn p1_bipartitions(p: u32, q: u32) -> Vec<Bipartition> {
    p1_filtered(p, q, None)
}

/// Every bipartition in 𝒫₁(p,q) to which `lambda` is adapted, in increasing
/// lexicographic order.
pub fn adapted_p1(p: u32, q: u32, lambda: &[Rational]) -> Vec<Bipartition> {
    if lambda.len() != (p + q) as usize {
        return Vec::new();
    }
    p1_filtered(p, q, Some(lambda))
}

fn p1_filtered(p: u32, q: u32, lambda: Option<&[Rational]>) -> Vec<Bipartition> {
    fn go(
        p: u32,
        q: u32,
        pos: usize,
        lambda: Option<&[Rational]>,
        acc: &mut Vec<(u32, u32)>,
        out: &mut Vec<Bipartition>,
    ) {
        if p == 0 && q == 0 {
            out.push(Bipartition::new(acc.clone()).expect("blocks are nonzero"));
            return;
        }
        // Candidate blocks in increasing lexicographic order.
        let mut cands = Vec::new();
        if q >= 1 {
            cands.push((0, 1));
        }
        if p >= 1 {
            cands.push((1, 0));
        }
        for a in 1..=p {
            for b in 1..=q {
                cands.push((a, b));
            }
        }
        cands.sort_unstable();
        for (a, b) in cands {
            let n = (a + b) as usize;
            if let Some(l) = lambda {
                if !is_step_one(&l[pos..pos + n]) {
                    continue;
                }
            }
            acc.push((a, b));
            go(p - a, q - b, pos + n, lambda, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    if p + q > 0 {
        go(p, q, 0, lambda, &mut Vec::new(), &mut out);
    }
    out
}

/// All representations of U(p,q) with infinitesimal character `lambda` that
/// contribute to Hodge weight (a,b).
pub fn reps_in_hodge(p: u32, q: u32, lambda: &[Rational], a: u64, b: u64) -> Vec<LocalCohRep> {
    collect_reps(p, q, lambda, |h| h.contains_weight(a, b))
}

/// All representations of U(p,q) with infinitesimal character `lambda` that
/// have cohomology in degree `i`.
pub fn reps_in_degree(p: u32, q: u32, lambda: &[Rational], i: u64) -> Vec<LocalCohRep> {
    collect_reps(p, q, lambda, |h| h.weight_in_degree(i).is_some())
}

fn collect_reps(p: u32, q: u32, lambda: &[Rational], keep: impl Fn(&HodgeProfile) -> bool) -> Vec<LocalCohRep> {
    if !is_regular_integral(lambda, p + q) {
        return Vec::new();
    }
    adapted_p1(p, q, lambda)
        .into_iter()
        .filter(|b| keep(&profile_of(b)))
        .map(|b| LocalCohRep::new((p, q), b, lambda.to_vec()).expect("enumerated reps are valid"))
        .collect()
}
