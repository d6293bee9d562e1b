//! Ideal norms, Euler factors Γₙ(𝔫), congruence-subgroup indices and the
//! symbolic leading term of the limit multiplicity formula for odd GSK-maxed
//! representations.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::growth::{r_pi0, GrowthValue};
use crate::infchar::weyl_dim;
use crate::rational::{self, Rational};
use crate::shapes::{
    delta_max, first_block_infchar, h_of_shape, is_odd_gsk, odd_gsk_parity_test, pattern_is_odd_gsk, q_pq_local,
    GlobalCohRep, RefinedShape,
};

/// The factorisation ∏ q_v^{e_v} of an integral ideal, by residue field size.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct IdealFactorization(Vec<(u64, u32)>);

fn is_prime_power(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    let p = (2..=q)
        .find(|p| q.is_multiple_of(*p))
        .expect("q ≥ 2 has a prime factor");
    let mut r = q;
    while r.is_multiple_of(p) {
        r /= p;
    }
    r == 1
}

impl IdealFactorization {
    pub fn new(factors: Vec<(u64, u32)>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for &(q, e) in &factors {
            if !is_prime_power(q) {
                return Err(Error::OutOfRange(format!("{q} is not a prime power")));
            }
            if e == 0 {
                return Err(Error::OutOfRange(format!("exponent of {q} is zero")));
            }
            if !seen.insert(q) {
                return Err(Error::OutOfRange(format!("{q} repeated")));
            }
        }
        Ok(Self(factors))
    }

    pub fn unit() -> Self {
        Self::default()
    }

    pub fn factors(&self) -> &[(u64, u32)] {
        &self.0
    }
}

impl std::str::FromStr for IdealFactorization {
    type Err = Error;

    /// Parses `"q^e,q,…"`; the empty string is the unit ideal.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Self::unit());
        }
        let bad = || Error::Parse(format!("bad ideal factorisation {s:?}"));
        let factors = s
            .split(',')
            .map(|t| {
                let (q, e) = t.trim().split_once('^').unwrap_or((t.trim(), "1"));
                Ok((
                    q.trim().parse().map_err(|_| bad())?,
                    e.trim().parse().map_err(|_| bad())?,
                ))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(factors)
    }
}

/// |𝔫| = ∏ q_v^{e_v}.
pub fn ideal_norm(n: &IdealFactorization) -> BigInt {
    n.0.iter().map(|&(q, e)| BigInt::from(q).pow(e)).product()
}

/// ∏_{v|𝔫} ∏_{k ∈ ns} ∏_{i=1}^{|k|} (1 − sgn(k)·q_v^{−i}): positive k gives
/// Γ_k, negative k gives Γ_{−|k|} with factors (1 + q_v^{−i}).
pub fn gamma_factor(ns: &[i64], n: &IdealFactorization) -> Result<Rational> {
    if ns.contains(&0) {
        return Err(Error::OutOfRange("Γ_0 is not defined".into()));
    }
    let mut acc = Rational::one();
    for &(q, _) in &n.0 {
        for &k in ns {
            for i in 1..=k.unsigned_abs() {
                let t = Rational::new(BigInt::one(), BigInt::from(q).pow(i as u32));
                if k > 0 {
                    acc *= Rational::one() - t;
                } else {
                    acc *= Rational::one() + t;
                }
            }
        }
    }
    Ok(acc)
}

/// [K : K(𝔫)] = |𝔫|^{N²} Γ_N(𝔫).
pub fn index_congruence(rank: u32, n: &IdealFactorization) -> BigInt {
    if rank == 0 {
        return BigInt::one();
    }
    let norm = Rational::from_integer(ideal_norm(n)).pow(rank as i32 * rank as i32);
    let v = norm * gamma_factor(&[rank as i64], n).expect("rank is positive");
    debug_assert!(v.is_integer());
    v.to_integer()
}

/// L(Δ) = (T₁, 1^{(k−1)}, −1^{(k−1)}) for an odd GSK pattern with k blocks.
pub fn l_of_pattern(pattern: &[(u32, u32)]) -> Result<Vec<i64>> {
    if !pattern_is_odd_gsk(pattern) {
        return Err(Error::NotGsk("odd GSK"));
    }
    let t1 = pattern.iter().find(|b| b.1 == 1).expect("GSK has a d = 1 block").0;
    let k = pattern.len();
    let mut out = vec![t1 as i64];
    out.extend(std::iter::repeat_n(1, k - 1));
    out.extend(std::iter::repeat_n(-1, k - 1));
    Ok(out)
}

pub fn l_of_delta(shape: &RefinedShape) -> Result<Vec<i64>> {
    l_of_pattern(&shape.pattern())
}

/// How the size of the discrete series packet at λ₁ is counted.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum PacketConvention {
    /// binomial(T₁, ⌊T₁/2⌋) per place.
    #[default]
    Binomial,
    /// N per place.
    RankPerPlace,
}

impl std::str::FromStr for PacketConvention {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "binom" | "binomial" => Ok(Self::Binomial),
            "rank" | "example1" => Ok(Self::RankPerPlace),
            _ => Err(Error::Parse(format!("unknown packet convention {s:?}"))),
        }
    }
}

fn binomial(n: u32, k: u32) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

fn factorial(n: u32) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

/// The combinatorial part of the leading term: |𝔫|-exponent, Euler-factor
/// index list, rational coefficient and opaque symbolic factors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LeadingTerm {
    pub exponent: GrowthValue,
    #[serde(rename = "L")]
    pub index_list: Vec<i64>,
    #[serde(with = "rational::serde_str")]
    pub coeff: Rational,
    pub symbols: Vec<String>,
    pub zero: bool,
}

/// Every place has β₊(B_v) with distinct odd parts.
pub fn is_odd_gsk_maxed_locally(rep: &GlobalCohRep) -> bool {
    rep.places().iter().all(|p| {
        let bp = q_pq_local(p).beta_plus;
        bp.parts().iter().all(|d| d % 2 == 1) && bp.parts().windows(2).all(|w| w[0] != w[1])
    })
}

/// Assembles the leading term for an odd GSK-maxed representation: the
/// coefficient sums, over the maximal shapes passing the parity test, the
/// product over places of dim λ₁ / |Π_disc(λ₁)|.
pub fn leading_term(rep: &GlobalCohRep, convention: PacketConvention) -> Result<LeadingTerm> {
    if !is_odd_gsk_maxed_locally(rep) {
        return Err(Error::NotGsk("odd GSK-maxed"));
    }
    let (exponent, _) = r_pi0(rep)?;
    let shapes = delta_max(rep);
    if shapes.is_empty() {
        return Err(Error::EmptyDelta);
    }
    if !shapes.iter().all(is_odd_gsk) {
        return Err(Error::NotGsk("odd GSK-maxed"));
    }
    let index_list = l_of_delta(&shapes[0])?;
    let n = rep.rank();
    let mut coeff = Rational::zero();
    for shape in &shapes {
        if !odd_gsk_parity_test(rep, shape)? {
            continue;
        }
        let lambda1 = first_block_infchar(shape).expect("GSK has a d = 1 block");
        let t1 = lambda1.rank() as u32;
        let size = match convention {
            PacketConvention::Binomial => binomial(t1, t1 / 2),
            PacketConvention::RankPerPlace => BigInt::from(n),
        };
        let mut term = Rational::one();
        for v in 0..rep.places().len() {
            term *= Rational::new(weyl_dim(lambda1.place(v))?, size.clone());
        }
        coeff += term;
    }
    let k = shapes[0].blocks().len();
    let symbols = vec![
        format!("TWO_POW({})", 1 - k as i64),
        format!("VOL_RATIO({})", h_of_shape(&shapes[0])),
        "TAU(G)".to_string(),
        "L_MOT(G)".to_string(),
    ];
    Ok(LeadingTerm {
        exponent,
        index_list,
        zero: coeff.is_zero(),
        coeff,
        symbols,
    })
}

/// 2^{−(N−1)deg F} · N!^{deg F} / ∏_v p_v! q_v!, with the symbolic factors
/// τ(G) and L(Mot_G).
pub fn tamagawa_elementary(rank: u32, deg_f: u32, signatures: &[(u32, u32)]) -> Result<(Rational, Vec<String>)> {
    if signatures.len() != deg_f as usize {
        return Err(Error::OutOfRange(format!(
            "{} signatures for degree {deg_f}",
            signatures.len()
        )));
    }
    if let Some(s) = signatures.iter().find(|(p, q)| p + q != rank) {
        return Err(Error::OutOfRange(format!("signature {s:?} does not have rank {rank}")));
    }
    let two = BigInt::from(2).pow(rank.saturating_sub(1) * deg_f);
    let num = factorial(rank).pow(deg_f);
    let den: BigInt = signatures
        .iter()
        .map(|&(p, q)| factorial(p) * factorial(q))
        .product::<BigInt>()
        * two;
    let g = num.gcd(&den);
    Ok((
        Rational::new(num / &g, den / g),
        vec!["TAU(G)".to_string(), "L_MOT(G)".to_string()],
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    fn ideal(v: &[(u64, u32)]) -> IdealFactorization {
        IdealFactorization::new(v.to_vec()).unwrap()
    }

    #[test]
    fn norms() {
        assert_eq!(ideal_norm(&ideal(&[(5, 2)])), BigInt::from(25));
        assert_eq!(ideal_norm(&ideal(&[(2, 1), (3, 1)])), BigInt::from(6));
        assert_eq!(ideal_norm(&IdealFactorization::unit()), BigInt::from(1));
        assert!(IdealFactorization::new(vec![(6, 1)]).is_err());
        assert!(IdealFactorization::new(vec![(4, 1), (4, 2)]).is_err());
        assert_eq!("5^2,3".parse::<IdealFactorization>().unwrap(), ideal(&[(5, 2), (3, 1)]));
    }

    #[test]
    fn gamma_examples() {
        assert_eq!(gamma_factor(&[1], &ideal(&[(5, 2)])).unwrap(), frac(4, 5));
        assert_eq!(gamma_factor(&[2], &ideal(&[(2, 1), (3, 1)])).unwrap(), frac(2, 9));
        assert_eq!(gamma_factor(&[-1], &ideal(&[(3, 1)])).unwrap(), frac(4, 3));
        assert!(gamma_factor(&[0], &ideal(&[(3, 1)])).is_err());
    }

    #[test]
    fn index_examples() {
        assert_eq!(index_congruence(2, &ideal(&[(3, 1)])), BigInt::from(48));
        for (q, e) in [(2u64, 1u32), (3, 2), (7, 3)] {
            let want = BigInt::from(q).pow(e - 1) * BigInt::from(q - 1);
            assert_eq!(index_congruence(1, &ideal(&[(q, e)])), want);
        }
        assert_eq!(index_congruence(4, &IdealFactorization::unit()), BigInt::from(1));
    }

    #[test]
    fn l_examples() {
        assert_eq!(l_of_pattern(&[(4, 1), (1, 3)]).unwrap(), vec![4, 1, -1]);
        assert_eq!(l_of_pattern(&[(2, 1), (1, 3), (1, 5)]).unwrap(), vec![2, 1, 1, -1, -1]);
        assert_eq!(l_of_pattern(&[(6, 1)]).unwrap(), vec![6]);
        assert!(l_of_pattern(&[(2, 2)]).is_err());
    }

    #[test]
    fn tamagawa_examples() {
        let (r, s) = tamagawa_elementary(1, 1, &[(1, 0)]).unwrap();
        assert_eq!(r, Rational::one());
        assert_eq!(s, vec!["TAU(G)", "L_MOT(G)"]);
        assert_eq!(tamagawa_elementary(2, 1, &[(1, 1)]).unwrap().0, Rational::one());
        assert_eq!(tamagawa_elementary(3, 1, &[(2, 1)]).unwrap().0, frac(3, 4));
        assert!(tamagawa_elementary(3, 2, &[(2, 1)]).is_err());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(6, 3), BigInt::from(20));
        assert_eq!(binomial(0, 0), BigInt::from(1));
        assert_eq!(binomial(5, 2), BigInt::from(10));
    }
}
