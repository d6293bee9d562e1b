//! Oracles and fixtures shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;

use aqshape::cohomology::LocalCohRep;
use aqshape::growth::GrowthValue;
use aqshape::infchar::is_adapted;
use aqshape::partitions::{compositions_of, fibers_beta, Bipartition, OrderedPartition, UnorderedPartition};
use aqshape::rational::{frac, int, Rational};
use aqshape::shapes::GlobalCohRep;
use num_bigint::BigInt;
use num_traits::Pow;

pub fn rep(pairs: Vec<(u32, u32)>) -> LocalCohRep {
    LocalCohRep::with_rho(Bipartition::new(pairs).unwrap()).unwrap()
}

/// Every bipartition of every signature with p + q = n (including non-𝒫₁ ones).
pub fn all_bipartitions(n: u32) -> Vec<Bipartition> {
    let mut out = Vec::new();
    for comp in compositions_of(n) {
        for p in 0..=n {
            out.extend(fibers_beta(&comp, p, n - p));
        }
    }
    out
}

pub fn expand_degenerate(b: &Bipartition) -> Vec<u32> {
    b.pairs()
        .iter()
        .flat_map(|&(p, q)| {
            if p * q == 0 {
                vec![1; (p + q) as usize]
            } else {
                vec![p + q]
            }
        })
        .collect()
}

/// Contiguous subdivisions of an ordered partition: each part split into a composition.
pub fn subdivisions(p: &OrderedPartition) -> Vec<OrderedPartition> {
    let mut acc: Vec<Vec<u32>> = vec![Vec::new()];
    for &n in p.parts() {
        let comps = compositions_of(n);
        acc = acc
            .iter()
            .flat_map(|a| {
                comps.iter().map(move |c| {
                    let mut v = a.clone();
                    v.extend_from_slice(c.parts());
                    v
                })
            })
            .collect();
    }
    acc.into_iter().map(|v| OrderedPartition::new(v).unwrap()).collect()
}

/// Arthur-SL₂ types reachable by merging consecutive degenerate blocks of
/// one kind into a single part, keeping only coarsenings to which the
/// character stays adapted.
pub fn merge_runs_oracle(rep: &LocalCohRep) -> BTreeSet<UnorderedPartition> {
    fn go(pairs: &[(u32, u32)], lam: &[Rational], acc: &mut Vec<u32>, out: &mut BTreeSet<UnorderedPartition>) {
        if pairs.is_empty() {
            let op = OrderedPartition::new(acc.clone()).unwrap();
            if is_adapted(lam, &op) {
                out.insert(op.to_unordered());
            }
            return;
        }
        let (p0, q0) = pairs[0];
        let mut take = 1;
        loop {
            acc.push(pairs[..take].iter().map(|&(a, b)| a + b).sum());
            go(&pairs[take..], lam, acc, out);
            acc.pop();
            if p0 * q0 > 0 || take == pairs.len() || pairs[take] != (p0, q0) {
                break;
            }
            take += 1;
        }
    }
    let mut out = BTreeSet::new();
    go(rep.bipartition().pairs(), rep.infchar(), &mut Vec::new(), &mut out);
    out
}

/// A character adapted to β(B) whose consecutive blocks are separated by
/// the given gaps (cycled).
pub fn gapped_infchar(b: &Bipartition, gaps: &[i64]) -> Vec<Rational> {
    let mut out = Vec::new();
    let mut x = 0i64;
    for (i, &(p, q)) in b.pairs().iter().enumerate() {
        if i > 0 {
            x -= gaps[(i - 1) % gaps.len()];
        }
        for k in 0..(p + q) {
            if k > 0 {
                x -= 1;
            }
            out.push(int(x));
        }
    }
    let n = out.len() as i64;
    let shift: Rational = out.iter().sum::<Rational>() / int(n);
    let half = Rational::new(1.into(), 2.into());
    // Re-centre onto the integral/half-integral lattice of rank n.
    let target = if n % 2 == 0 { half } else { int(0) };
    let delta = (&shift - &target).floor() + target;
    out.into_iter().map(|v| v - &delta).collect()
}

pub fn example_rep(n: u32, k: u32, r: u32, places: usize, flip: bool) -> GlobalCohRep {
    let (one, big) = if flip {
        ((0, 1), (1, k - 1))
    } else {
        ((1, 0), (k - 1, 1))
    };
    let mut v = vec![one; r as usize];
    v.push(big);
    v.extend(vec![one; (n - k - r) as usize]);
    GlobalCohRep::new(vec![rep(v); places], None).unwrap()
}

/// Addition and multiplication tables of the q-element field, q ≤ 9.
pub struct Field {
    pub q: usize,
    pub add: Vec<Vec<usize>>,
    pub mul: Vec<Vec<usize>>,
}

impl Field {
    pub fn new(q: usize) -> Self {
        // (characteristic, degree, low coefficients of a monic irreducible)
        let (p, k, modulus): (usize, usize, &[usize]) = match q {
            2 | 3 | 5 | 7 => (q, 1, &[0]),
            4 => (2, 2, &[1, 1]),
            8 => (2, 3, &[1, 1, 0]),
            9 => (3, 2, &[1, 0]),
            _ => panic!("unsupported field size {q}"),
        };
        let digits = |mut x: usize| -> Vec<usize> {
            (0..k)
                .map(|_| {
                    let d = x % p;
                    x /= p;
                    d
                })
                .collect()
        };
        let pack = |v: &[usize]| v.iter().rev().fold(0, |acc, &d| acc * p + d);
        let add = (0..q)
            .map(|a| {
                (0..q)
                    .map(|b| {
                        let (x, y) = (digits(a), digits(b));
                        pack(&x.iter().zip(&y).map(|(s, t)| (s + t) % p).collect::<Vec<_>>())
                    })
                    .collect()
            })
            .collect();
        let mul = (0..q)
            .map(|a| {
                (0..q)
                    .map(|b| {
                        let (x, y) = (digits(a), digits(b));
                        let mut prod = vec![0usize; 2 * k];
                        for i in 0..k {
                            for j in 0..k {
                                prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
                            }
                        }
                        // Reduce using x^k = −(modulus).
                        for deg in (k..2 * k).rev() {
                            let c = prod[deg];
                            if c == 0 {
                                continue;
                            }
                            prod[deg] = 0;
                            for (i, &m) in modulus.iter().enumerate() {
                                prod[deg - k + i] = (prod[deg - k + i] + (p - c) * m % p) % p;
                            }
                        }
                        pack(&prod[..k])
                    })
                    .collect()
            })
            .collect();
        Field { q, add, mul }
    }

    pub fn neg(&self, a: usize) -> usize {
        (0..self.q).find(|&b| self.add[a][b] == 0).unwrap()
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add[a][self.neg(b)]
    }
}

/// Counts invertible n×n matrices over the field (n ≤ 3). The first n−1 rows
/// are enumerated; the determinant is linear in the last row, so it has
/// q^n − q^{n−1} nonsingular completions when the cofactor vector is nonzero.
pub fn count_gl(f: &Field, n: usize) -> u64 {
    let q = f.q as u64;
    if n == 1 {
        return q - 1;
    }
    let rows = (f.q as u64).pow(((n - 1) * n) as u32);
    let mut count = 0u64;
    for code in 0..rows {
        let mut m = vec![0usize; (n - 1) * n];
        let mut c = code;
        for e in m.iter_mut() {
            *e = (c % q) as usize;
            c /= q;
        }
        let at = |i: usize, j: usize| m[i * n + j];
        let cofactor_nonzero = match n {
            2 => at(0, 0) != 0 || at(0, 1) != 0,
            3 => (0..3).any(|j| {
                let (a, b) = ((j + 1) % 3, (j + 2) % 3);
                f.sub(f.mul[at(0, a)][at(1, b)], f.mul[at(0, b)][at(1, a)]) != 0
            }),
            _ => unreachable!(),
        };
        if cofactor_nonzero {
            count += q.pow(n as u32) - q.pow(n as u32 - 1);
        }
    }
    count
}

pub fn gl_order_formula(q: u64, n: u32) -> BigInt {
    let qn = BigInt::from(q).pow(n);
    (0..n).map(|i| &qn - BigInt::from(q).pow(i)).product()
}

/// Sets of distinct odd integers > 1 with sum at most `budget`.
pub fn odd_sets(budget: u32, min: u32) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    let mut d = min;
    while d <= budget {
        for rest in odd_sets(budget - d, d + 2) {
            let mut v = vec![d];
            v.extend(rest);
            out.push(v);
        }
        d += 2;
    }
    out
}

/// Growth exponents of the dominant shapes for degree-i cohomology of
/// U(N−2,2), with the closed forms they should equal.
pub fn dominant_u_n2(n: i64, i: i64) -> Vec<(Vec<(u32, u32)>, GrowthValue)> {
    let j = 2 * (n - 2) - i;
    let mut out = Vec::new();
    let push = |blocks: Vec<(i64, i64)>, v: GrowthValue, out: &mut Vec<_>| {
        let b: Vec<(u32, u32)> = blocks
            .into_iter()
            .filter(|b| b.0 > 0)
            .map(|(t, d)| (t as u32, d as u32))
            .collect();
        out.push((b, v));
    };
    let q = frac;
    if i % 2 == 0 {
        push(
            vec![(1, j / 2 + 2), (n - j / 2 - 2, 1)],
            GrowthValue::int(n * i / 2 + 1),
            &mut out,
        );
        if i >= n - 2 {
            // ½(i + 5/2)² + N(N − i − 3) + 23/8
            let v = q((2 * i + 5) * (2 * i + 5), 8) + int(n * (n - i - 3)) + q(23, 8);
            push(vec![(2, j / 2 + 1), (n - j - 2, 1)], GrowthValue::new(v, 0), &mut out);
        }
    } else if i >= n - 2 {
        let v = q((i + 2) * (i + 2), 4) + q(7, 4);
        push(
            vec![(1, (j - 1) / 2 + 1), (1, (j + 1) / 2 + 1), (n - j - 2, 1)],
            GrowthValue::new(v, 0),
            &mut out,
        );
    }
    out
}

/// Every bipartition with β(B) = q, up to reordering blocks (σ ignores order).
pub fn fiber_multisets(q: &UnorderedPartition) -> Vec<Bipartition> {
    let mut out: Vec<Vec<(u32, u32)>> = vec![Vec::new()];
    for &n in q.parts() {
        out = out
            .into_iter()
            .flat_map(|acc| {
                (0..=n / 2).map(move |m| {
                    let mut v = acc.clone();
                    v.push((n - m, m));
                    v
                })
            })
            .collect();
    }
    out.into_iter().map(|v| Bipartition::new(v).unwrap()).collect()
}
