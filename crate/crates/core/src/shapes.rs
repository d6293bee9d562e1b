//! Refined shapes, their endoscopic groups, and the Arthur-SL₂ types and
//! maximal shapes compatible with a cohomological representation.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::cohomology::LocalCohRep;
use crate::error::{Error, Result};
use crate::growth::{argmax_r, GrowthValue};
use crate::infchar::{segment, total_infchar, InfChar};
use crate::packets::chi4;
use crate::partitions::{refinements, Bipartition, OrderedPartition, UnorderedPartition};
use crate::rational::{self, frac, int, Rational};

/// One block (T, d, λ, η): T copies of the d-dimensional Arthur SL₂ with
/// rank-T infinitesimal character λ at each place and sign η.
///
/// Blocks order by d first, then T, then λ.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ShapeBlock {
    pub d: u32,
    pub t: u32,
    infchar: InfChar,
    pub eta: i8,
}

impl ShapeBlock {
    pub fn new(t: u32, d: u32, infchar: InfChar, eta: i8) -> Result<Self> {
        if t == 0 || d == 0 {
            return Err(Error::InvalidShape(format!("block ({t},{d}) has a zero entry")));
        }
        if infchar.rank() != t as usize {
            return Err(Error::InvalidShape(format!(
                "block ({t},{d}) carries a character of rank {}",
                infchar.rank()
            )));
        }
        if eta != 1 && eta != -1 {
            return Err(Error::InvalidShape(format!("sign {eta} is not ±1")));
        }
        Ok(Self { d, t, infchar, eta })
    }

    pub fn infchar(&self) -> &InfChar {
        &self.infchar
    }
}

impl Serialize for ShapeBlock {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        (self.t, self.d, &self.infchar, self.eta).serialize(s)
    }
}

impl<'de> Deserialize<'de> for ShapeBlock {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let (t, dd, places, eta) = <(u32, u32, Vec<Vec<String>>, i8)>::deserialize(d)?;
        let places = places
            .iter()
            .map(|p| p.iter().map(|s| rational::parse(s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()
            .map_err(serde::de::Error::custom)?;
        let ic = InfChar::with_rank(t as usize, places).map_err(serde::de::Error::custom)?;
        Self::new(t, dd, ic, eta).map_err(serde::de::Error::custom)
    }
}

/// A refined shape: a multiset of blocks whose total infinitesimal character
/// is regular at every place.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct RefinedShape {
    blocks: Vec<ShapeBlock>,
}

impl RefinedShape {
    pub fn new(mut blocks: Vec<ShapeBlock>) -> Result<Self> {
        if blocks.is_empty() {
            return Err(Error::InvalidShape("no blocks".into()));
        }
        let places = blocks[0].infchar.num_places();
        if blocks.iter().any(|b| b.infchar.num_places() != places) {
            return Err(Error::InvalidShape("blocks disagree on the number of places".into()));
        }
        blocks.sort();
        let shape = Self { blocks };
        total_infchar(&shape)?;
        Ok(shape)
    }

    /// A shape with the given (T, d) blocks and no places, with signs from the
    /// orthogonal-type group assignment.
    pub fn from_pattern(pattern: &[(u32, u32)]) -> Result<Self> {
        let blocks = pattern
            .iter()
            .map(|&(t, d)| ShapeBlock::new(t, d, InfChar::with_rank(t as usize, vec![])?, eta_for(d, true)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(blocks)
    }

    pub fn blocks(&self) -> &[ShapeBlock] {
        &self.blocks
    }

    pub fn num_places(&self) -> usize {
        self.blocks[0].infchar.num_places()
    }

    /// N = Σ Tᵢdᵢ.
    pub fn rank(&self) -> u32 {
        self.blocks.iter().map(|b| b.t * b.d).sum()
    }

    /// The (T, d) pairs in canonical order.
    pub fn pattern(&self) -> Vec<(u32, u32)> {
        self.blocks.iter().map(|b| (b.t, b.d)).collect()
    }

    pub fn ds(&self) -> Vec<u32> {
        self.blocks.iter().map(|b| b.d).collect()
    }
}

/// The multiset with dᵢ repeated Tᵢ times.
pub fn arthur_sl2(shape: &RefinedShape) -> UnorderedPartition {
    UnorderedPartition::from_counts(shape.blocks.iter().map(|b| (b.d, b.t))).expect("positive parts")
}

/// One block with d = 1 and all other blocks of rank one with distinct d.
pub fn pattern_is_gsk(pattern: &[(u32, u32)]) -> bool {
    let ones = pattern.iter().filter(|&&(_, d)| d == 1).count();
    let others: Vec<u32> = pattern.iter().filter(|&&(_, d)| d != 1).map(|&(_, d)| d).collect();
    let distinct: BTreeSet<u32> = others.iter().copied().collect();
    ones == 1 && distinct.len() == others.len() && pattern.iter().all(|&(t, d)| d == 1 || t == 1)
}

pub fn pattern_is_odd_gsk(pattern: &[(u32, u32)]) -> bool {
    pattern_is_gsk(pattern) && pattern.iter().all(|&(_, d)| d % 2 == 1)
}

pub fn is_gsk(shape: &RefinedShape) -> bool {
    pattern_is_gsk(&shape.pattern())
}

pub fn is_odd_gsk(shape: &RefinedShape) -> bool {
    pattern_is_odd_gsk(&shape.pattern())
}

/// A quasi-split unitary group U_κ(n).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct UnitaryFactor {
    pub rank: u32,
    pub kappa: i8,
}

/// Either a product of quasi-split unitary groups (an endoscopic group
/// H(Δ)), or the Sato–Tate descriptor ∏ᵢ (U(Tᵢ) × U(1)).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GroupDescriptor {
    Unitary(Vec<UnitaryFactor>),
    SatoTate(Vec<u32>),
}

impl fmt::Display for GroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupDescriptor::Unitary(fs) => {
                let v: Vec<String> = fs
                    .iter()
                    .map(|u| format!("U_{}({})", if u.kappa > 0 { "+" } else { "-" }, u.rank))
                    .collect();
                write!(f, "{}", v.join("×"))
            }
            GroupDescriptor::SatoTate(ts) if ts.len() == 1 => write!(f, "U({})×U(1)", ts[0]),
            GroupDescriptor::SatoTate(ts) => {
                let v: Vec<String> = ts.iter().map(|t| format!("(U({t})×U(1))")).collect();
                write!(f, "{}", v.join("×"))
            }
        }
    }
}

fn pm(e: u64) -> i8 {
    if e.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// κ = δ(−1)^{(T−1)(d−1)} for the factor U_κ(Td) attached to a block.
pub fn block_kappa(t: u32, d: u32, delta: i8) -> i8 {
    delta * pm((t as u64 - 1) * (d as u64 - 1))
}

/// The conjugate-duality sign δ = η(−1)^{T−1} of a block.
pub fn block_delta(t: u32, eta: i8) -> i8 {
    eta * pm(t as u64 - 1)
}

/// Whether a block is of orthogonal type: δ(−1)^{T+d} = 1.
pub fn block_is_orthogonal(t: u32, d: u32, eta: i8) -> bool {
    block_delta(t, eta) * pm((t + d) as u64) == 1
}

/// The sign η making a block with SL₂ dimension d of the requested type.
pub fn eta_for(d: u32, orthogonal: bool) -> i8 {
    let e = pm(d as u64 - 1);
    if orthogonal {
        e
    } else {
        -e
    }
}

/// H(Δ) = U_{(−1)^{N_O−1}}(N_O) × U_{(−1)^{N_S}}(N_S), omitting empty factors.
pub fn h_of_shape(shape: &RefinedShape) -> GroupDescriptor {
    let (mut n_o, mut n_s) = (0u32, 0u32);
    for b in &shape.blocks {
        if block_is_orthogonal(b.t, b.d, b.eta) {
            n_o += b.t * b.d;
        } else {
            n_s += b.t * b.d;
        }
    }
    let mut fs = Vec::new();
    if n_o > 0 {
        fs.push(UnitaryFactor {
            rank: n_o,
            kappa: pm(n_o as u64 - 1),
        });
    }
    if n_s > 0 {
        fs.push(UnitaryFactor {
            rank: n_s,
            kappa: pm(n_s as u64),
        });
    }
    GroupDescriptor::Unitary(fs)
}

pub fn sato_tate_group(shape: &RefinedShape) -> GroupDescriptor {
    GroupDescriptor::SatoTate(shape.blocks.iter().map(|b| b.t).collect())
}

/// Cohomological representations of a common rank at each infinite place,
/// together with the sign κ of the quasi-split inner form U_κ(N).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GlobalCohRep {
    places: Vec<LocalCohRep>,
    #[serde(skip_serializing_if = "Option::is_none")]
    kappa: Option<i8>,
}

#[derive(Deserialize)]
struct RawGlobal {
    places: Vec<LocalCohRep>,
    #[serde(default)]
    kappa: Option<i8>,
}

impl<'de> Deserialize<'de> for GlobalCohRep {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RawGlobal::deserialize(d)?;
        Self::new(raw.places, raw.kappa).map_err(serde::de::Error::custom)
    }
}

impl GlobalCohRep {
    /// `kappa` defaults to (−1)^{N−1}, the group whose parameters are all of
    /// orthogonal type.
    pub fn new(places: Vec<LocalCohRep>, kappa: Option<i8>) -> Result<Self> {
        let Some(first) = places.first() else {
            return Err(Error::InvalidRep("no places".into()));
        };
        let n = first.rank();
        if places.iter().any(|p| p.rank() != n) {
            return Err(Error::InvalidRep("places have different ranks".into()));
        }
        if let Some(k) = kappa {
            if k != 1 && k != -1 {
                return Err(Error::InvalidRep(format!("kappa {k} is not ±1")));
            }
        }
        Ok(Self { places, kappa })
    }

    pub fn places(&self) -> &[LocalCohRep] {
        &self.places
    }

    pub fn rank(&self) -> u32 {
        self.places[0].rank()
    }

    pub fn kappa(&self) -> i8 {
        self.kappa.unwrap_or(pm(self.rank() as u64 - 1))
    }

    /// Whether every block of a compatible shape is of orthogonal type.
    pub fn is_orthogonal_type(&self) -> bool {
        self.kappa() == pm(self.rank() as u64 - 1)
    }
}

/// A contiguous piece of a bipartition: either a block with pᵢqᵢ > 0, or a
/// maximal run of (1,0) or (0,1) blocks whose characters form one step −1
/// progression.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Piece {
    Fixed { start: usize, p: u32, q: u32 },
    Run { start: usize, len: u32, compact_p: bool },
}

fn pieces(rep: &LocalCohRep) -> Vec<Piece> {
    let lam = rep.infchar();
    let one = int(1);
    let mut out: Vec<Piece> = Vec::new();
    let mut pos = 0usize;
    for &(p, q) in rep.bipartition().pairs() {
        if p * q > 0 {
            out.push(Piece::Fixed { start: pos, p, q });
        } else {
            let compact_p = p == 1;
            match out.last_mut() {
                Some(Piece::Run {
                    start,
                    len,
                    compact_p: kind,
                }) if *kind == compact_p && *start + *len as usize == pos && &lam[pos - 1] - &lam[pos] == one => {
                    *len += 1;
                }
                _ => out.push(Piece::Run {
                    start: pos,
                    len: 1,
                    compact_p,
                }),
            }
        }
        pos += (p + q) as usize;
    }
    out
}

/// The invariants of one place: β₊ (parts of β(B) greater than one) and the
/// lengths of the maximal (1,0) and (0,1) runs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LocalRunData {
    pub q_p: UnorderedPartition,
    pub q_q: UnorderedPartition,
    pub beta_plus: UnorderedPartition,
}

pub fn q_pq_local(rep: &LocalCohRep) -> LocalRunData {
    let (mut qp, mut qq, mut bp) = (Vec::new(), Vec::new(), Vec::new());
    for piece in pieces(rep) {
        match piece {
            Piece::Fixed { p, q, .. } => bp.push(p + q),
            Piece::Run {
                len, compact_p: true, ..
            } => qp.push(len),
            Piece::Run {
                len, compact_p: false, ..
            } => qq.push(len),
        }
    }
    LocalRunData {
        q_p: UnorderedPartition::new(qp).expect("positive"),
        q_q: UnorderedPartition::new(qq).expect("positive"),
        beta_plus: UnorderedPartition::new(bp).expect("positive"),
    }
}

/// The Arthur-SL₂ types compatible with one place.
pub fn enumerate_q_local(rep: &LocalCohRep) -> BTreeSet<UnorderedPartition> {
    let data = q_pq_local(rep);
    let xs = refinements(&data.q_p);
    let ys = refinements(&data.q_q);
    let mut out = BTreeSet::new();
    for x in &xs {
        let base = x.union(&data.beta_plus);
        for y in &ys {
            out.insert(base.union(y));
        }
    }
    out
}

/// The Arthur-SL₂ types compatible with every place.
pub fn enumerate_q(rep: &GlobalCohRep) -> BTreeSet<UnorderedPartition> {
    let mut it = rep.places.iter();
    let mut acc = enumerate_q_local(it.next().expect("at least one place"));
    for place in it {
        if acc.is_empty() {
            break;
        }
        let here = enumerate_q_local(place);
        acc = acc.intersection(&here).cloned().collect();
    }
    acc
}

/// β₊(π₀): the smallest multiset containing β₊(B_v) for every place.
pub fn beta_plus_global(rep: &GlobalCohRep) -> UnorderedPartition {
    rep.places
        .iter()
        .map(|p| q_pq_local(p).beta_plus)
        .fold(UnorderedPartition::default(), |a, b| a.max_union(&b))
}

/// (1^{(r)}, β₊(π₀)), or `None` if β₊(π₀) already exceeds the rank.
pub fn q_can(rep: &GlobalCohRep) -> Option<UnorderedPartition> {
    let bp = beta_plus_global(rep);
    let n = rep.rank();
    (bp.rank() <= n).then(|| bp.union(&UnorderedPartition::ones(n - bp.rank())))
}

/// A coarsening of β(B_v) at one place: the merged ordered partition, the
/// merged bipartition, and the centre of each part's character segment.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Layout {
    pub partition: OrderedPartition,
    pub bipartition: Bipartition,
    pub centres: Vec<Rational>,
}

fn centre(seg: &[Rational]) -> Rational {
    (&seg[0] + &seg[seg.len() - 1]) * frac(1, 2)
}

/// Every coarsening of β(B) at one place obtained by merging within runs of
/// (1,0) or (0,1) blocks, whose parts form the multiset `q`.
pub fn place_layouts(rep: &LocalCohRep, q: &UnorderedPartition) -> Vec<Layout> {
    type Part = (u32, u32, u32, Rational);
    fn go(
        pieces: &[Piece],
        lam: &[Rational],
        budget: &mut BTreeMap<u32, u32>,
        acc: &mut Vec<Part>,
        out: &mut Vec<Vec<Part>>,
    ) {
        let Some((&piece, rest)) = pieces.split_first() else {
            if budget.values().all(|&c| c == 0) {
                out.push(acc.clone());
            }
            return;
        };
        match piece {
            Piece::Fixed { start, p, q } => {
                let n = p + q;
                if take(budget, n) {
                    acc.push((n, p, q, centre(&lam[start..start + n as usize])));
                    go(rest, lam, budget, acc, out);
                    acc.pop();
                    *budget.get_mut(&n).unwrap() += 1;
                }
            }
            Piece::Run { start, len, compact_p } => {
                split_run(start, len, compact_p, rest, lam, budget, acc, out);
            }
        }
    }
    #[allow(clippy::too_many_arguments)]
    fn split_run(
        start: usize,
        len: u32,
        compact_p: bool,
        rest: &[Piece],
        lam: &[Rational],
        budget: &mut BTreeMap<u32, u32>,
        acc: &mut Vec<Part>,
        out: &mut Vec<Vec<Part>>,
    ) {
        if len == 0 {
            go(rest, lam, budget, acc, out);
            return;
        }
        for n in 1..=len {
            if take(budget, n) {
                let (p, q) = if compact_p { (n, 0) } else { (0, n) };
                acc.push((n, p, q, centre(&lam[start..start + n as usize])));
                split_run(start + n as usize, len - n, compact_p, rest, lam, budget, acc, out);
                acc.pop();
                *budget.get_mut(&n).unwrap() += 1;
            }
        }
    }
    fn take(budget: &mut BTreeMap<u32, u32>, n: u32) -> bool {
        match budget.get_mut(&n) {
            Some(c) if *c > 0 => {
                *c -= 1;
                true
            }
            _ => false,
        }
    }

    if q.rank() != rep.rank() {
        return Vec::new();
    }
    let mut budget = q.counts();
    let mut raw = Vec::new();
    go(&pieces(rep), rep.infchar(), &mut budget, &mut Vec::new(), &mut raw);
    raw.into_iter()
        .map(|parts| Layout {
            partition: OrderedPartition::new(parts.iter().map(|x| x.0).collect()).expect("positive"),
            bipartition: Bipartition::new(parts.iter().map(|x| (x.1, x.2)).collect()).expect("nonzero"),
            centres: parts.into_iter().map(|x| x.3).collect(),
        })
        .collect()
}

/// For each SL₂ dimension d, the decreasing list of centres of the parts of
/// size d.
fn centres_by_d(layout: &Layout) -> BTreeMap<u32, Vec<Rational>> {
    let mut m: BTreeMap<u32, Vec<Rational>> = BTreeMap::new();
    for (&d, c) in layout.partition.parts().iter().zip(&layout.centres) {
        m.entry(d).or_default().push(c.clone());
    }
    for v in m.values_mut() {
        v.sort_by(|a, b| b.cmp(a));
    }
    m
}

/// The shapes with maximal R compatible with the representation, in
/// canonical order. Block signs follow the group assignment of the
/// representation's inner form.
pub fn delta_max(rep: &GlobalCohRep) -> Vec<RefinedShape> {
    let qs = enumerate_q(rep);
    let Ok((_, argmax)) = argmax_r(qs.iter()) else {
        return Vec::new();
    };
    let orthogonal = rep.is_orthogonal_type();
    let mut shapes = BTreeSet::new();
    for q in &argmax {
        let per_place: Vec<BTreeSet<BTreeMap<u32, Vec<Rational>>>> = rep
            .places
            .iter()
            .map(|p| place_layouts(p, q).iter().map(centres_by_d).collect())
            .collect();
        if per_place.iter().any(BTreeSet::is_empty) {
            continue;
        }
        let mut combos: Vec<Vec<&BTreeMap<u32, Vec<Rational>>>> = vec![Vec::new()];
        for options in &per_place {
            combos = combos
                .into_iter()
                .flat_map(|c| {
                    options.iter().map(move |o| {
                        let mut c = c.clone();
                        c.push(o);
                        c
                    })
                })
                .collect();
        }
        for combo in combos {
            let blocks = q
                .counts()
                .into_iter()
                .map(|(d, t)| {
                    let places = combo.iter().map(|m| m[&d].clone()).collect();
                    let ic = InfChar::with_rank(t as usize, places)?;
                    ShapeBlock::new(t, d, ic, eta_for(d, orthogonal))
                })
                .collect::<Result<Vec<_>>>();
            if let Ok(shape) = blocks.and_then(RefinedShape::new) {
                shapes.insert(shape);
            }
        }
    }
    shapes.into_iter().collect()
}

/// Reconstructs the coarsening of β(B_v) realised by `shape` at place `v`.
pub fn place_layout(rep: &GlobalCohRep, shape: &RefinedShape, v: usize) -> Result<Layout> {
    let local = &rep.places[v];
    let lam = local.infchar();
    let bad = |why: &str| Error::InvalidShape(format!("place {v}: {why}"));
    let mut segs: Vec<(usize, u32, Rational)> = Vec::new();
    for b in shape.blocks() {
        for c in b.infchar().place(v) {
            let seg = segment(c, b.d);
            let start = lam
                .iter()
                .position(|x| x == &seg[0])
                .ok_or_else(|| bad("segment outside the character"))?;
            if start + seg.len() > lam.len() || lam[start..start + seg.len()] != seg[..] {
                return Err(bad("segment is not contiguous in the character"));
            }
            segs.push((start, b.d, c.clone()));
        }
    }
    segs.sort_by_key(|s| s.0);
    let mut pos = 0usize;
    for s in &segs {
        if s.0 != pos {
            return Err(bad("segments do not tile the character"));
        }
        pos += s.1 as usize;
    }
    if pos != lam.len() {
        return Err(bad("segments do not tile the character"));
    }
    // Merge the blocks of B_v lying inside each segment.
    let pairs = local.bipartition().pairs();
    let mut merged = Vec::with_capacity(segs.len());
    let mut i = 0usize;
    let mut at = 0usize;
    for s in &segs {
        let end = s.0 + s.1 as usize;
        let (mut p, mut q, mut count) = (0u32, 0u32, 0usize);
        while at < end {
            let (a, b) = *pairs.get(i).ok_or_else(|| bad("ran out of blocks"))?;
            p += a;
            q += b;
            at += (a + b) as usize;
            i += 1;
            count += 1;
        }
        if at != end {
            return Err(bad("segment cuts through a block"));
        }
        if count > 1 && p * q > 0 {
            return Err(bad("segment merges blocks of both kinds or a nondegenerate block"));
        }
        merged.push((p, q));
    }
    Ok(Layout {
        partition: OrderedPartition::new(segs.iter().map(|s| s.1).collect())?,
        bipartition: Bipartition::new(merged)?,
        centres: segs.into_iter().map(|s| s.2).collect(),
    })
}

/// The sign condition for an odd GSK shape to occur: for every block with
/// d_j > 1, t_j = Σ_v (i_v(d_j) − 1 + q_{i_v(d_j),v} + χ₄(d_j)) is even, where
/// i_v(d_j) is the (1-based) position of the part d_j in the coarsening at v
/// and q_{i,v} the second entry of the merged block there; and the inner-form
/// condition N(N−1)/2 · #places + Σ_v q_v ≡ 0 (mod 2) holds.
pub fn odd_gsk_parity_test(rep: &GlobalCohRep, shape: &RefinedShape) -> Result<bool> {
    if !is_odd_gsk(shape) {
        return Err(Error::NotGsk("odd GSK"));
    }
    if shape.num_places() != rep.places.len() || shape.rank() != rep.rank() {
        return Err(Error::InvalidShape("shape does not match the representation".into()));
    }
    let layouts = (0..rep.places.len())
        .map(|v| place_layout(rep, shape, v))
        .collect::<Result<Vec<_>>>()?;
    for b in shape.blocks().iter().filter(|b| b.d > 1) {
        let mut t = 0u64;
        for layout in &layouts {
            let i = layout
                .partition
                .parts()
                .iter()
                .position(|&a| a == b.d)
                .expect("every part of the shape occurs in the layout");
            t += i as u64 + layout.bipartition.pairs()[i].1 as u64 + chi4(b.d) as u64;
        }
        if t % 2 == 1 {
            return Ok(false);
        }
    }
    let n = rep.rank() as u64;
    let sum_q: u64 = rep.places.iter().map(|p| p.signature().1 as u64).sum();
    Ok((n * (n - 1) / 2 * rep.places.len() as u64 + sum_q).is_multiple_of(2))
}

/// The growth exponent and the maximal shapes of a representation together.
#[derive(Debug, Clone, Serialize)]
pub struct DeltaMaxReport {
    pub q_can: Option<UnorderedPartition>,
    pub q_max: Vec<UnorderedPartition>,
    pub r_pi0: GrowthValue,
    pub delta_max: Vec<RefinedShape>,
    pub groups: Vec<String>,
    /// `None` where the shape is not odd GSK and the test does not apply.
    pub parity: Vec<Option<bool>>,
}

pub fn delta_max_report(rep: &GlobalCohRep) -> Result<DeltaMaxReport> {
    let (r, q_max) = crate::growth::r_pi0(rep)?;
    let shapes = delta_max(rep);
    let parity = shapes
        .iter()
        .map(|s| is_odd_gsk(s).then(|| odd_gsk_parity_test(rep, s)).transpose())
        .collect::<Result<Vec<_>>>()?;
    Ok(DeltaMaxReport {
        q_can: q_can(rep),
        q_max,
        r_pi0: r,
        groups: shapes.iter().map(|s| h_of_shape(s).to_string()).collect(),
        delta_max: shapes,
        parity,
    })
}

/// The shape's λ₁: the character of its d = 1 block at each place.
pub fn first_block_infchar(shape: &RefinedShape) -> Option<&InfChar> {
    shape.blocks().iter().find(|b| b.d == 1).map(ShapeBlock::infchar)
}

impl RefinedShape {
    /// Σ_{λ,η}: the single block (N, 1, λ, η).
    pub fn sigma(lambda: InfChar, eta: i8) -> Result<Self> {
        let n = lambda.rank() as u32;
        Self::new(vec![ShapeBlock::new(n, 1, lambda, eta)?])
    }
}
