//! Sarnak–Xue density quantities: the σ-sums of a bipartition, the resulting
//! lower bound for 2/p(π₀), and their comparison with the growth exponents.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::growth::{bar_r, blocks_of_q, r0_of_q, r_of_q, r_value, GrowthValue};
use crate::partitions::{balanced_bipartition, partitions_of, Bipartition, UnorderedPartition};
use crate::rational::{self, frac, int, Rational};

/// (nᵢ−1, nᵢ−3, …, nᵢ−2mᵢ+1) over the blocks, mᵢ = min(pᵢ,qᵢ), nᵢ = pᵢ+qᵢ,
/// concatenated and sorted decreasingly.
pub fn xi_list(b: &Bipartition) -> Vec<u32> {
    let mut out: Vec<u32> = b
        .pairs()
        .iter()
        .flat_map(|&(p, q)| {
            let n = p + q;
            (0..p.min(q)).map(move |k| n - 1 - 2 * k)
        })
        .collect();
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

/// σⱼ(B): the sum of the first j entries of `xi_list`, missing entries counting as 0.
pub fn sigma(b: &Bipartition, j: usize) -> u64 {
    xi_list(b).iter().take(j).map(|&x| x as u64).sum()
}

fn max_ratio_of_xi(xi: &[u32], n: u32) -> Rational {
    let mut best = Rational::zero();
    let mut s = 0u64;
    for i in 1..=(n / 2) as usize {
        s += xi.get(i - 1).copied().unwrap_or(0) as u64;
        let r = Rational::new(s.into(), ((i as u64) * (n as u64 - i as u64)).into());
        if r > best {
            best = r;
        }
    }
    best
}

/// max over 1 ≤ i ≤ ⌊N/2⌋ of σᵢ(B)/(i(N−i)), with N the rank of B.
pub fn max_ratio(b: &Bipartition) -> Rational {
    max_ratio_of_xi(&xi_list(b), b.rank())
}

/// `max_ratio` of the balanced bipartition over `q`.
pub fn max_ratio_q(q: &UnorderedPartition) -> Rational {
    if q.is_empty() {
        return Rational::zero();
    }
    max_ratio(&balanced_bipartition(q))
}

/// 1 − max_ratio(B): a lower bound for 2/p(π₀).
pub fn p_bound(b: &Bipartition) -> Rational {
    Rational::one() - max_ratio(b)
}

/// Q_d = (d^{(⌊N/d⌋)}, N − d⌊N/d⌋), zero part dropped.
pub fn qd(n: u32, d: u32) -> Result<UnorderedPartition> {
    if d < 2 || d >= n {
        return Err(Error::OutOfRange(format!("Q_d needs 1 < d < N, got N={n}, d={d}")));
    }
    let k = n / d;
    let mut parts = vec![d; k as usize];
    if n > d * k {
        parts.push(n - d * k);
    }
    UnorderedPartition::new(parts)
}

/// Q′_d = (d^{(⌊N/d⌋−1)}, d−1, N − d⌊N/d⌋ + 1), or (d^{(⌊N/d⌋−1)}, d−1, d−1, 1)
/// when N ≡ −1 (mod d).
pub fn qd_prime(n: u32, d: u32) -> Result<UnorderedPartition> {
    if d < 2 || n < 2 * d {
        return Err(Error::OutOfRange(format!(
            "Q'_d needs d ≥ 2 and N ≥ 2d, got N={n}, d={d}"
        )));
    }
    let k = n / d;
    let mut parts = vec![d; (k - 1) as usize];
    parts.push(d - 1);
    if n % d == d - 1 {
        parts.extend([d - 1, 1]);
    } else {
        parts.push(n - d * k + 1);
    }
    UnorderedPartition::new(parts.into_iter().filter(|&x| x > 0).collect())
}

/// The Arthur-SL₂ types obtained from `q` by regrouping its parts equal to 1
/// into arbitrary parts.
pub fn coarsenings(q: &UnorderedPartition) -> Vec<UnorderedPartition> {
    let ones = q.count_of(1);
    let big = q.without_ones();
    partitions_of(ones).iter().map(|x| big.union(x)).collect()
}

/// One row of the comparison between growth exponents and the density goal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DensityRow {
    pub q: UnorderedPartition,
    /// max R(Q′) − 1 over the coarsenings Q′ of Q.
    pub provable: GrowthValue,
    /// max R₀(Q′) − 1 over the coarsenings Q′ of Q.
    pub conjectural: GrowthValue,
    #[serde(with = "rational::serde_str")]
    pub sx_goal: Rational,
    pub trivial: i64,
    /// The coarsenings attaining the provable maximum.
    pub provable_argmax: Vec<UnorderedPartition>,
    /// Set when the provable maximum is not attained at Q itself.
    pub maxsl2_failure: bool,
}

pub fn sx_row(q: &UnorderedPartition) -> DensityRow {
    let n = q.rank() as i64;
    let cands = coarsenings(q);
    let provable = cands.iter().map(r_of_q).max().expect("nonempty");
    let conjectural = cands.iter().map(r0_of_q).max().expect("nonempty");
    let mut provable_argmax: Vec<UnorderedPartition> =
        cands.iter().filter(|c| r_of_q(c) == provable).cloned().collect();
    provable_argmax.sort();
    let trivial = n * n - 1;
    DensityRow {
        q: q.clone(),
        maxsl2_failure: !provable_argmax.contains(q),
        provable: provable.minus_one(),
        conjectural: conjectural.minus_one(),
        sx_goal: int(trivial) * (Rational::one() - max_ratio_q(q)),
        trivial,
        provable_argmax,
    }
}

/// A reference row of the growth-rate comparison table.
#[derive(Debug, Clone, Copy)]
pub struct ReferenceRow {
    pub q: &'static [u32],
    pub provable: i64,
    pub conjectural: i64,
    pub sx_goal: (i64, i64),
    pub trivial: i64,
}

const fn row(q: &'static [u32], provable: i64, conjectural: i64, sx_goal: (i64, i64), trivial: i64) -> ReferenceRow {
    ReferenceRow {
        q,
        provable,
        conjectural,
        sx_goal,
        trivial,
    }
}

/// The published comparison of growth rates for sixteen Arthur-SL₂ types.
pub const REFERENCE_TABLE: [ReferenceRow; 16] = [
    row(&[2, 2], 8, 6, (15, 2), 15),
    row(&[2, 2, 1], 13, 11, (16, 1), 24),
    row(&[2, 2, 2], 21, 17, (70, 3), 35),
    row(&[2, 2, 1, 1], 21, 18, (105, 4), 35),
    row(&[3, 3], 17, 11, (35, 2), 35),
    row(&[2, 2, 2, 1], 28, 24, (36, 1), 48),
    row(&[3, 3, 1], 24, 18, (144, 5), 48),
    row(&[3, 2, 2], 21, 19, (32, 1), 48),
    row(&[2, 2, 2, 2], 47, 33, (189, 4), 63),
    row(&[2, 2, 2, 1, 1], 47, 33, (252, 5), 63),
    row(&[4, 4], 30, 18, (63, 2), 63),
    row(&[3, 3, 3], 43, 32, (160, 3), 80),
    row(&[3, 2, 2, 2], 40, 36, (60, 1), 80),
    row(&[5, 5], 47, 27, (99, 2), 99),
    row(&[2, 2, 2, 2, 2], 74, 54, (396, 5), 99),
    row(&[2, 2, 2, 2, 1, 1], 74, 54, (165, 2), 99),
];

impl ReferenceRow {
    pub fn partition(&self) -> UnorderedPartition {
        UnorderedPartition::new(self.q.to_vec()).expect("positive parts")
    }

    /// Differences between this row and a computed row (main parts only).
    pub fn mismatches(&self, got: &DensityRow) -> Vec<String> {
        let mut out = Vec::new();
        if got.provable.main != int(self.provable) {
            out.push(format!("provable {} ≠ {}", got.provable, self.provable));
        }
        if got.conjectural.main != int(self.conjectural) {
            out.push(format!("conjectural {} ≠ {}", got.conjectural, self.conjectural));
        }
        if got.sx_goal != frac(self.sx_goal.0, self.sx_goal.1) {
            out.push(format!(
                "sx goal {} ≠ {}/{}",
                rational::to_string(&got.sx_goal),
                self.sx_goal.0,
                self.sx_goal.1
            ));
        }
        if got.trivial != self.trivial {
            out.push(format!("trivial {} ≠ {}", got.trivial, self.trivial));
        }
        out
    }
}

/// The (inclusive) rank range swept by a certificate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CertRange {
    pub min_n: u32,
    pub max_n: u32,
}

/// The outcome of an exhaustive check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub target: String,
    pub range: CertRange,
    pub checked_count: u64,
    pub violations: Vec<String>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub findings: BTreeMap<String, Vec<String>>,
}

impl Certificate {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

fn pairs(max_n: u32, keep: impl Fn(u32, u32) -> bool + Sync) -> Vec<(u32, u32)> {
    (2..=max_n)
        .flat_map(|n| (2..n).map(move |d| (n, d)))
        .filter(|&(n, d)| keep(n, d))
        .collect()
}

/// Checks max_ratio(Q_d) = (d−1)/(N−⌊N/d⌋) for 2 ≤ d < N ≤ `max_n`, and
/// max_ratio(Q′_d) = (d−1)/(N−⌊N/d⌋+1) whenever N ≥ 2d.
pub fn verify_qd_bound(max_n: u32) -> Certificate {
    let results: Vec<(u64, Vec<String>)> = pairs(max_n, |_, _| true)
        .par_iter()
        .map(|&(n, d)| {
            let mut bad = Vec::new();
            let mut count = 1;
            let k = (n / d) as i64;
            let q = qd(n, d).expect("in range");
            let want = frac(d as i64 - 1, n as i64 - k);
            let got = max_ratio_q(&q);
            if got != want {
                bad.push(format!(
                    "N={n} d={d} Q_d={q}: {} ≠ {}",
                    rational::to_string(&got),
                    rational::to_string(&want)
                ));
            }
            if n >= 2 * d {
                count += 1;
                let q = qd_prime(n, d).expect("in range");
                let want = frac(d as i64 - 1, n as i64 - k + 1);
                let got = max_ratio_q(&q);
                if got != want {
                    bad.push(format!(
                        "N={n} d={d} Q'_d={q}: {} ≠ {}",
                        rational::to_string(&got),
                        rational::to_string(&want)
                    ));
                }
            }
            (count, bad)
        })
        .collect();
    Certificate {
        target: "qd-bound".into(),
        range: CertRange { min_n: 3, max_n },
        checked_count: results.iter().map(|r| r.0).sum(),
        violations: results.into_iter().flat_map(|r| r.1).collect(),
        findings: BTreeMap::new(),
    }
}

/// The exceptional Q_d of the R̄-based density inequality expected for ranks up to `max_n`:
/// (d,d), (d,d,1) and (2,2,2).
pub fn expected_rbar_exceptions(max_n: u32) -> BTreeSet<UnorderedPartition> {
    let mut out = BTreeSet::new();
    for d in 2..=max_n / 2 {
        out.insert(UnorderedPartition::new(vec![d, d]).unwrap());
        if 2 * d < max_n {
            out.insert(UnorderedPartition::new(vec![d, d, 1]).unwrap());
        }
    }
    if max_n >= 6 {
        out.insert(UnorderedPartition::new(vec![2, 2, 2]).unwrap());
    }
    out
}

/// Certifies the comparison (N²−1)(1 − max ratio) ≥ R(Q) − 1 along the three
/// cases of its proof, for 2 ≤ d < N ≤ `max_n`:
///
/// * N < 2d: 1 − (d−1)/(N−1) > N(N−d)/(N²−1);
/// * N ≥ 2d: 1 − (d−1)/(N−⌊N/d⌋+1) > N(N−d)/(N²−1);
/// * N ≥ 2d, Q = Q_d: 1 − (d−1)/(N−⌊N/d⌋) > (R̄(Q_d) − 1)/(N²−1), except on a
///   set that must be exactly {(d,d), (d,d,1), (2,2,2)}; on that set the
///   same inequality with R in place of R̄ must hold except at (2,2).
pub fn verify_density(max_n: u32) -> Certificate {
    struct Outcome {
        count: u64,
        bad: Vec<String>,
        exception: Option<UnorderedPartition>,
    }
    let results: Vec<Outcome> = pairs(max_n, |_, _| true)
        .par_iter()
        .map(|&(n, d)| {
            let (ni, di) = (n as i64, d as i64);
            let k = (n / d) as i64;
            let trivial = int(ni * ni - 1);
            let target = int(ni * (ni - di)) / &trivial;
            let mut out = Outcome {
                count: 1,
                bad: Vec::new(),
                exception: None,
            };
            if n < 2 * d {
                if Rational::one() - frac(di - 1, ni - 1) <= target {
                    out.bad.push(format!("N={n} d={d}: first case fails"));
                }
                return out;
            }
            if Rational::one() - frac(di - 1, ni - k + 1) <= target {
                out.bad.push(format!("N={n} d={d}: Q'_d case fails"));
            }
            out.count += 1;
            let q = qd(n, d).expect("in range");
            let lhs = Rational::one() - frac(di - 1, ni - k);
            let rbar = bar_r(&blocks_of_q(&q)).main;
            if lhs <= (rbar - Rational::one()) / &trivial {
                out.exception = Some(q);
            }
            out
        })
        .collect();

    let mut violations: Vec<String> = Vec::new();
    let mut count = 0;
    let mut exceptions = BTreeSet::new();
    for r in results {
        count += r.count;
        violations.extend(r.bad);
        exceptions.extend(r.exception);
    }
    let expected = expected_rbar_exceptions(max_n);
    for q in exceptions.symmetric_difference(&expected) {
        violations.push(format!("R̄ exceptional set differs at {q}"));
    }
    let mut r_failures = Vec::new();
    for q in &exceptions {
        count += 1;
        let n = q.rank() as i64;
        let lhs = int(n * n - 1) * (Rational::one() - max_ratio_q(q));
        let r = r_value(&blocks_of_q(q)).minus_one();
        if GrowthValue::new(lhs, 0) < r {
            r_failures.push(q.clone());
        }
    }
    let two_two = UnorderedPartition::new(vec![2, 2]).unwrap();
    if max_n >= 4 && r_failures != [two_two] {
        violations.push(format!(
            "R-based failures are {:?}, expected only (2,2)",
            r_failures.iter().map(ToString::to_string).collect::<Vec<_>>()
        ));
    }
    let mut findings = BTreeMap::new();
    findings.insert(
        "rbar_exceptions".into(),
        exceptions.iter().map(ToString::to_string).collect(),
    );
    findings.insert(
        "r_failures".into(),
        r_failures.iter().map(ToString::to_string).collect(),
    );
    Certificate {
        target: "density".into(),
        range: CertRange { min_n: 3, max_n },
        checked_count: count,
        violations,
        findings,
    }
}

/// For every Q₀ with distinct parts ≥ 2 and every N ≤ `max_n` with
/// |Q₀| ≤ N, the maximum of R over all block decompositions of all
/// Q = Q₀ ∪ X (X a partition of r = N − |Q₀|) is attained at (1^{(r)}, Q₀),
/// and uniquely unless r = 2 and 2 ∈ Q₀.
pub fn verify_maxsl2(max_n: u32) -> Certificate {
    let cases: Vec<(u32, UnorderedPartition)> = (2..=max_n)
        .flat_map(|n| {
            (2..=n).flat_map(move |size| {
                partitions_of(size)
                    .into_iter()
                    .filter(|q0| q0.parts().iter().all(|&p| p >= 2) && q0.parts().windows(2).all(|w| w[0] != w[1]))
                    .map(move |q0| (n, q0))
            })
        })
        .collect();
    let bad: Vec<Vec<String>> = cases
        .par_iter()
        .map(|(n, q0)| {
            let r = n - q0.rank();
            let mut best: Option<GrowthValue> = None;
            let mut arg: Vec<UnorderedPartition> = Vec::new();
            for x in partitions_of(r) {
                let q = q0.union(&x);
                let v = crate::growth::bf_r_of_q(&q, u32::MAX).expect("no bound");
                match best.as_ref().map(|b| v.cmp(b)) {
                    None | Some(std::cmp::Ordering::Greater) => {
                        best = Some(v);
                        arg = vec![q];
                    }
                    Some(std::cmp::Ordering::Equal) => arg.push(q),
                    _ => {}
                }
            }
            let can = q0.union(&UnorderedPartition::ones(r));
            let mut out = Vec::new();
            if !arg.contains(&can) {
                out.push(format!("N={n} Q0={q0}: maximum not at {can}"));
            } else if r_of_q(&can) != *best.as_ref().unwrap() {
                out.push(format!("N={n} Q0={q0}: grouped formula differs from brute force"));
            }
            let exception = r == 2 && q0.parts().contains(&2);
            if exception == (arg.len() == 1) {
                out.push(format!("N={n} Q0={q0}: argmax {} has unexpected size", arg.len()));
            }
            out
        })
        .collect();
    Certificate {
        target: "maxsl2".into(),
        range: CertRange { min_n: 2, max_n },
        checked_count: cases.len() as u64,
        violations: bad.into_iter().flatten().collect(),
        findings: BTreeMap::new(),
    }
}

/// Recomputes the sixteen reference rows.
pub fn verify_table1() -> Certificate {
    let mut violations = Vec::new();
    for r in &REFERENCE_TABLE {
        let got = sx_row(&r.partition());
        for m in r.mismatches(&got) {
            violations.push(format!("{}: {m}", r.partition()));
        }
    }
    Certificate {
        target: "table1".into(),
        range: CertRange { min_n: 4, max_n: 10 },
        checked_count: REFERENCE_TABLE.len() as u64,
        violations,
        findings: BTreeMap::new(),
    }
}
