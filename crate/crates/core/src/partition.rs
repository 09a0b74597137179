//! Two-row set partitions with even blocks.
//!
//! A partition in `P_even(k, l)` lives on `k` upper legs `u1..uk` and `l`
//! lower legs `d1..dl`. Internally the legs are numbered `0..k+l`, upper row
//! first, and the partition is stored as a restricted growth string over that
//! numbering. This string is the canonical form: blocks are numbered in order
//! of their first leg, and two partitions are equal iff their strings are.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest total leg count accepted by enumeration unless a caller overrides it.
pub const DEFAULT_POINT_BOUND: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Row {
    Upper,
    Lower,
}

/// A leg, identified by its row and 1-based position in that row.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Leg {
    pub row: Row,
    pub pos: usize,
}

impl Leg {
    pub fn upper(pos: usize) -> Self {
        Leg { row: Row::Upper, pos }
    }

    pub fn lower(pos: usize) -> Self {
        Leg { row: Row::Lower, pos }
    }
}

impl fmt::Display for Leg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.row {
            Row::Upper => write!(f, "u{}", self.pos),
            Row::Lower => write!(f, "d{}", self.pos),
        }
    }
}

impl FromStr for Leg {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidInput(format!("bad leg name {s:?}"));
        let (row, rest) = match s.as_bytes().first() {
            Some(b'u') => (Row::Upper, &s[1..]),
            Some(b'd') => (Row::Lower, &s[1..]),
            _ => return Err(bad()),
        };
        let pos: usize = rest.parse().map_err(|_| bad())?;
        if pos == 0 {
            return Err(bad());
        }
        Ok(Leg { row, pos })
    }
}

/// The four named partition families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PartitionClass {
    PEven,
    P2,
    NcEven,
    Nc2,
}

impl PartitionClass {
    pub const ALL: [PartitionClass; 4] =
        [PartitionClass::PEven, PartitionClass::P2, PartitionClass::NcEven, PartitionClass::Nc2];

    pub fn pairings_only(self) -> bool {
        matches!(self, PartitionClass::P2 | PartitionClass::Nc2)
    }

    pub fn noncrossing_only(self) -> bool {
        matches!(self, PartitionClass::NcEven | PartitionClass::Nc2)
    }

    /// Direct structural membership test.
    pub fn contains(self, pi: &Partition) -> bool {
        (!self.pairings_only() || pi.is_pairing()) && (!self.noncrossing_only() || pi.is_noncrossing())
    }

    pub fn name(self) -> &'static str {
        match self {
            PartitionClass::PEven => "p_even",
            PartitionClass::P2 => "p2",
            PartitionClass::NcEven => "nc_even",
            PartitionClass::Nc2 => "nc2",
        }
    }
}

impl fmt::Display for PartitionClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PartitionClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace('-', "_").as_str() {
            "p_even" | "peven" => Ok(PartitionClass::PEven),
            "p2" | "p_2" => Ok(PartitionClass::P2),
            "nc_even" | "nceven" => Ok(PartitionClass::NcEven),
            "nc2" | "nc_2" => Ok(PartitionClass::Nc2),
            other => Err(Error::InvalidInput(format!("unknown partition class {other:?}"))),
        }
    }
}

/// Bookkeeping for a vertical concatenation: the components that lie
/// entirely in the glued middle row and disappear from the result.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MiddleStats {
    pub removed_components: usize,
    /// Number of middle-row points in each removed component.
    pub component_sizes: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "PartitionJson", into = "PartitionJson")]
pub struct Partition {
    k: usize,
    l: usize,
    labels: Vec<u8>,
}

impl Partition {
    /// Builds a partition from explicit blocks of legs.
    pub fn new(k: usize, l: usize, blocks: &[Vec<Leg>]) -> Result<Self> {
        let mut labels = vec![usize::MAX; k + l];
        for (b, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::NotAPartition("empty block".into()));
            }
            for leg in block {
                let idx = leg_index(k, l, *leg)
                    .ok_or_else(|| Error::NotAPartition(format!("leg {leg} out of range for ({k},{l})")))?;
                if labels[idx] != usize::MAX {
                    return Err(Error::NotAPartition(format!("leg {leg} appears twice")));
                }
                labels[idx] = b;
            }
        }
        if let Some(idx) = labels.iter().position(|&x| x == usize::MAX) {
            let leg = index_leg(k, idx);
            return Err(Error::NotAPartition(format!("leg {leg} is not covered")));
        }
        Self::from_labels(k, l, &labels)
    }

    /// Builds a partition from an arbitrary labelling of the legs
    /// `u1..uk, d1..dl` (equal labels share a block).
    pub fn from_labels(k: usize, l: usize, labels: &[usize]) -> Result<Self> {
        if labels.len() != k + l {
            return Err(Error::ArityMismatch { expected: k + l, found: labels.len() });
        }
        let p = Self::canonical(k, l, labels);
        if let Some(block) = p.block_indices().into_iter().find(|b| b.len() % 2 == 1) {
            return Err(Error::OddBlock(p.describe_block(&block)));
        }
        Ok(p)
    }

    fn canonical(k: usize, l: usize, labels: &[usize]) -> Self {
        let mut relabel: BTreeMap<usize, u8> = BTreeMap::new();
        let mut out = Vec::with_capacity(labels.len());
        for &x in labels {
            let next = relabel.len() as u8;
            out.push(*relabel.entry(x).or_insert(next));
        }
        Partition { k, l, labels: out }
    }

    /// The vertical string `|` on one upper and one lower leg.
    pub fn identity() -> Self {
        Partition { k: 1, l: 1, labels: vec![0, 0] }
    }

    /// `m` parallel vertical strings.
    pub fn identity_pairing(m: usize) -> Self {
        let labels: Vec<usize> = (0..m).chain(0..m).collect();
        Self::canonical(m, m, &labels)
    }

    /// The lower pairing `∪` in `P(0, 2)`.
    pub fn cup() -> Self {
        Partition { k: 0, l: 2, labels: vec![0, 0] }
    }

    /// The upper pairing `∩` in `P(2, 0)`.
    pub fn cap() -> Self {
        Partition { k: 2, l: 0, labels: vec![0, 0] }
    }

    /// The one-block partition `1_{k,l}`.
    pub fn one_block(k: usize, l: usize) -> Result<Self> {
        Self::from_labels(k, l, &vec![0; k + l])
    }

    /// The empty partition on `(0, 0)`.
    pub fn empty() -> Self {
        Partition { k: 0, l: 0, labels: Vec::new() }
    }

    /// The standard crossing `{u1,d2},{u2,d1}`.
    pub fn crossing() -> Self {
        Self::canonical(2, 2, &[0, 1, 1, 0])
    }

    /// The three-string crossing `{u1,d3},{u2,d2},{u3,d1}` that implements
    /// half-commutation.
    pub fn half_commutation() -> Self {
        Self::canonical(3, 3, &[0, 1, 2, 2, 1, 0])
    }

    /// Looks up one of the stable generator aliases.
    pub fn named(name: &str) -> Result<Self> {
        match name {
            "identity" => Ok(Self::identity()),
            "cup" => Ok(Self::cup()),
            "cap" => Ok(Self::cap()),
            "onethreeblock" => Self::one_block(1, 3),
            "crossing" => Ok(Self::crossing()),
            "halfcommutation" => Ok(Self::half_commutation()),
            other => Err(Error::InvalidInput(format!("unknown partition alias {other:?}"))),
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn points(&self) -> usize {
        self.k + self.l
    }

    /// Canonical block label of every leg, upper row first.
    pub fn labels(&self) -> &[u8] {
        &self.labels
    }

    pub fn num_blocks(&self) -> usize {
        self.labels.iter().map(|&x| x as usize + 1).max().unwrap_or(0)
    }

    /// Blocks as sorted lists of leg indices (`0..k` upper, `k..k+l` lower),
    /// in canonical block order.
    pub fn block_indices(&self) -> Vec<Vec<usize>> {
        let mut blocks = vec![Vec::new(); self.num_blocks()];
        for (idx, &b) in self.labels.iter().enumerate() {
            blocks[b as usize].push(idx);
        }
        blocks
    }

    pub fn blocks(&self) -> Vec<Vec<Leg>> {
        self.block_indices()
            .into_iter()
            .map(|b| b.into_iter().map(|i| index_leg(self.k, i)).collect())
            .collect()
    }

    /// For each block, the 0-based positions of its upper legs and of its
    /// lower legs, each left to right.
    pub fn block_rows(&self) -> Vec<(Vec<usize>, Vec<usize>)> {
        self.block_indices()
            .into_iter()
            .map(|b| {
                let (up, down): (Vec<usize>, Vec<usize>) = b.into_iter().partition(|&i| i < self.k);
                (up, down.into_iter().map(|i| i - self.k).collect())
            })
            .collect()
    }

    pub fn is_pairing(&self) -> bool {
        self.block_indices().iter().all(|b| b.len() == 2)
    }

    /// No two blocks cross when the legs are read around the boundary of the
    /// diagram: upper row left to right, then lower row right to left.
    pub fn is_noncrossing(&self) -> bool {
        let m = self.points();
        let boundary: Vec<u8> = (0..self.k)
            .map(|i| self.labels[i])
            .chain((0..self.l).rev().map(|j| self.labels[self.k + j]))
            .collect();
        debug_assert_eq!(boundary.len(), m);
        let nb = self.num_blocks() as u8;
        for a in 0..nb {
            for b in (a + 1)..nb {
                let mut runs = 0;
                let mut last = None;
                for &x in boundary.iter().filter(|&&x| x == a || x == b) {
                    if last != Some(x) {
                        runs += 1;
                        last = Some(x);
                    }
                }
                // ABAB read cyclically has at least four runs
                if runs >= 4 {
                    return false;
                }
            }
        }
        true
    }

    /// Horizontal concatenation: `other` is placed to the right of `self`.
    pub fn tensor(&self, other: &Partition) -> Partition {
        let off = self.num_blocks();
        let mut labels = Vec::with_capacity(self.points() + other.points());
        labels.extend(self.labels[..self.k].iter().map(|&x| x as usize));
        labels.extend(other.labels[..other.k].iter().map(|&x| x as usize + off));
        labels.extend(self.labels[self.k..].iter().map(|&x| x as usize));
        labels.extend(other.labels[other.k..].iter().map(|&x| x as usize + off));
        Self::canonical(self.k + other.k, self.l + other.l, &labels)
    }

    /// Upside-down turning: rows are exchanged, positions kept.
    pub fn involution(&self) -> Partition {
        let labels: Vec<usize> =
            self.labels[self.k..].iter().chain(&self.labels[..self.k]).map(|&x| x as usize).collect();
        Self::canonical(self.l, self.k, &labels)
    }

    /// Vertical concatenation with `self` on top: the lower row of `self` is
    /// glued to the upper row of `below`.
    pub fn compose(&self, below: &Partition) -> Result<(Partition, MiddleStats)> {
        if self.l != below.k {
            return Err(Error::ArityMismatch { expected: self.l, found: below.k });
        }
        let (k, mid, big_l) = (self.k, self.l, below.l);
        // nodes: top 0..k, middle k..k+mid, bottom k+mid..k+mid+big_l
        let total = k + mid + big_l;
        let mut uf = UnionFind::new(total);
        let mut first_of_label = vec![usize::MAX; self.num_blocks()];
        for (idx, &b) in self.labels.iter().enumerate() {
            let node = idx;
            let slot = &mut first_of_label[b as usize];
            if *slot == usize::MAX {
                *slot = node;
            } else {
                uf.union(*slot, node);
            }
        }
        let mut first_of_label = vec![usize::MAX; below.num_blocks()];
        for (idx, &b) in below.labels.iter().enumerate() {
            let node = k + idx;
            let slot = &mut first_of_label[b as usize];
            if *slot == usize::MAX {
                *slot = node;
            } else {
                uf.union(*slot, node);
            }
        }
        let outer: Vec<usize> = (0..k).chain(k + mid..total).collect();
        let labels: Vec<usize> = outer.iter().map(|&v| uf.find(v)).collect();
        let mut middle_only: BTreeMap<usize, usize> = BTreeMap::new();
        for v in k..k + mid {
            let root = uf.find(v);
            if !labels.contains(&root) {
                *middle_only.entry(root).or_default() += 1;
            }
        }
        let result = Self::canonical(k, big_l, &labels);
        if let Some(block) = result.block_indices().into_iter().find(|b| b.len() % 2 == 1) {
            return Err(Error::OddResultBlock(result.describe_block(&block)));
        }
        let component_sizes: Vec<usize> = middle_only.into_values().collect();
        Ok((result, MiddleStats { removed_components: component_sizes.len(), component_sizes }))
    }

    fn describe_block(&self, block: &[usize]) -> String {
        let legs: Vec<String> = block.iter().map(|&i| index_leg(self.k, i).to_string()).collect();
        format!("{{{}}}", legs.join(","))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let blocks: Vec<String> = self.block_indices().iter().map(|b| self.describe_block(b)).collect();
        write!(f, "({},{})[{}]", self.k, self.l, blocks.join(""))
    }
}

fn leg_index(k: usize, l: usize, leg: Leg) -> Option<usize> {
    match leg.row {
        Row::Upper if (1..=k).contains(&leg.pos) => Some(leg.pos - 1),
        Row::Lower if (1..=l).contains(&leg.pos) => Some(k + leg.pos - 1),
        _ => None,
    }
}

fn index_leg(k: usize, idx: usize) -> Leg {
    if idx < k {
        Leg::upper(idx + 1)
    } else {
        Leg::lower(idx - k + 1)
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Wire format: `{"k":1,"l":3,"blocks":[["u1","d1","d2","d3"]]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
struct PartitionJson {
    k: usize,
    l: usize,
    blocks: Vec<Vec<String>>,
}

impl From<Partition> for PartitionJson {
    fn from(p: Partition) -> Self {
        let blocks = p.blocks().iter().map(|b| b.iter().map(Leg::to_string).collect()).collect();
        PartitionJson { k: p.k, l: p.l, blocks }
    }
}

impl TryFrom<PartitionJson> for Partition {
    type Error = Error;

    fn try_from(j: PartitionJson) -> Result<Self> {
        let blocks = j
            .blocks
            .iter()
            .map(|b| b.iter().map(|s| s.parse()).collect::<Result<Vec<Leg>>>())
            .collect::<Result<Vec<_>>>()?;
        Partition::new(j.k, j.l, &blocks)
    }
}

/// All members of `class` on `(k, l)`, canonical and sorted, using the
/// default point bound.
pub fn enumerate_partitions(k: usize, l: usize, class: PartitionClass) -> Result<Vec<Partition>> {
    enumerate_partitions_bounded(k, l, class, DEFAULT_POINT_BOUND)
}

pub fn enumerate_partitions_bounded(
    k: usize,
    l: usize,
    class: PartitionClass,
    bound: usize,
) -> Result<Vec<Partition>> {
    let m = k + l;
    if m > bound {
        return Err(Error::BoundExceeded { points: m, bound });
    }
    if m % 2 == 1 {
        return Ok(Vec::new());
    }
    let max_block = if class.pairings_only() { 2 } else { m };
    let mut out = Vec::new();
    let mut labels = Vec::with_capacity(m);
    let mut sizes = Vec::new();
    grow(m, max_block, &mut labels, &mut sizes, &mut |labels| {
        let p = Partition { k, l, labels: labels.to_vec() };
        if !class.noncrossing_only() || p.is_noncrossing() {
            out.push(p);
        }
    });
    Ok(out)
}

/// Restricted growth strings with every block even and at most `max_block`
/// legs, produced in lexicographic order.
fn grow(m: usize, max_block: usize, labels: &mut Vec<u8>, sizes: &mut Vec<usize>, emit: &mut impl FnMut(&[u8])) {
    let remaining = m - labels.len();
    let odd = sizes.iter().filter(|&&s| s % 2 == 1).count();
    if odd > remaining {
        return;
    }
    if remaining == 0 {
        emit(labels);
        return;
    }
    for b in 0..=sizes.len() {
        if b == sizes.len() {
            sizes.push(0);
        }
        if sizes[b] < max_block {
            sizes[b] += 1;
            labels.push(b as u8);
            grow(m, max_block, labels, sizes, emit);
            labels.pop();
            sizes[b] -= 1;
        }
        if sizes[b] == 0 {
            sizes.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lower(k: usize, l: usize, blocks: &[&[usize]]) -> Partition {
        let blocks: Vec<Vec<Leg>> = blocks.iter().map(|b| b.iter().map(|&p| Leg::lower(p)).collect()).collect();
        Partition::new(k, l, &blocks).unwrap()
    }

    #[test]
    fn make_partition_examples() {
        let cup = Partition::new(0, 2, &[vec![Leg::lower(1), Leg::lower(2)]]).unwrap();
        assert_eq!(cup, Partition::cup());
        let one = Partition::new(1, 3, &[vec![Leg::upper(1), Leg::lower(1), Leg::lower(2), Leg::lower(3)]]).unwrap();
        assert_eq!(one, Partition::one_block(1, 3).unwrap());
        assert!(matches!(
            Partition::new(1, 1, &[vec![Leg::upper(1)], vec![Leg::lower(1)]]),
            Err(Error::OddBlock(_))
        ));
    }

    #[test]
    fn make_partition_rejects_overlap_and_gaps() {
        let overlap = Partition::new(0, 2, &[vec![Leg::lower(1), Leg::lower(2)], vec![Leg::lower(2), Leg::lower(1)]]);
        assert!(matches!(overlap, Err(Error::NotAPartition(_))));
        let gap = Partition::new(0, 4, &[vec![Leg::lower(1), Leg::lower(2)]]);
        assert!(matches!(gap, Err(Error::NotAPartition(_))));
        let range = Partition::new(0, 2, &[vec![Leg::lower(1), Leg::lower(3)]]);
        assert!(matches!(range, Err(Error::NotAPartition(_))));
    }

    #[test]
    fn canonical_form_ignores_block_order() {
        let a = lower(0, 4, &[&[1, 4], &[2, 3]]);
        let b = lower(0, 4, &[&[3, 2], &[4, 1]]);
        assert_eq!(a, b);
        assert_eq!(a.blocks()[0], vec![Leg::lower(1), Leg::lower(4)]);
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(enumerate_partitions(0, 2, PartitionClass::PEven).unwrap().len(), 1);
        assert_eq!(enumerate_partitions(0, 4, PartitionClass::P2).unwrap().len(), 3);
        let nc = enumerate_partitions(0, 4, PartitionClass::NcEven).unwrap();
        let expected = vec![lower(0, 4, &[&[1, 2, 3, 4]]), lower(0, 4, &[&[1, 2], &[3, 4]]), lower(0, 4, &[&[1, 4], &[2, 3]])];
        let mut sorted = expected.clone();
        sorted.sort();
        assert_eq!(nc, sorted);
        assert!(enumerate_partitions(1, 2, PartitionClass::PEven).unwrap().is_empty());
        assert_eq!(enumerate_partitions(0, 0, PartitionClass::Nc2).unwrap(), vec![Partition::empty()]);
        assert!(matches!(
            enumerate_partitions(7, 7, PartitionClass::P2),
            Err(Error::BoundExceeded { points: 14, bound: 12 })
        ));
    }

    #[test]
    fn noncrossing_examples() {
        assert!(!lower(0, 4, &[&[1, 3], &[2, 4]]).is_noncrossing());
        assert!(Partition::identity_pairing(2).is_noncrossing());
        assert!(Partition::one_block(1, 3).unwrap().is_noncrossing());
        assert!(!Partition::crossing().is_noncrossing());
        assert!(!Partition::half_commutation().is_noncrossing());
        // nested strings are fine: {u1,d1} around {u2,u3}
        let nested = Partition::from_labels(3, 1, &[0, 1, 1, 0]).unwrap();
        assert!(nested.is_noncrossing());
    }

    #[test]
    fn tensor_examples() {
        assert_eq!(Partition::identity().tensor(&Partition::identity()), Partition::identity_pairing(2));
        let capcup = Partition::cap().tensor(&Partition::cup());
        assert_eq!(capcup, Partition::new(2, 2, &[vec![Leg::upper(1), Leg::upper(2)], vec![Leg::lower(1), Leg::lower(2)]]).unwrap());
        let t = Partition::one_block(1, 3).unwrap().tensor(&Partition::cup());
        assert_eq!((t.k(), t.l()), (1, 5));
        assert_eq!(
            t.blocks(),
            vec![vec![Leg::upper(1), Leg::lower(1), Leg::lower(2), Leg::lower(3)], vec![Leg::lower(4), Leg::lower(5)]]
        );
    }

    #[test]
    fn involution_examples() {
        assert_eq!(Partition::cap().involution(), Partition::cup());
        assert_eq!(Partition::one_block(1, 3).unwrap().involution(), Partition::one_block(3, 1).unwrap());
        assert_eq!(Partition::identity_pairing(2).involution(), Partition::identity_pairing(2));
        let h = Partition::half_commutation();
        assert_eq!(h.involution(), h);
    }

    #[test]
    fn compose_examples() {
        let (p, stats) = Partition::cup().compose(&Partition::cap()).unwrap();
        assert_eq!(p, Partition::empty());
        assert_eq!(stats, MiddleStats { removed_components: 1, component_sizes: vec![2] });

        let pi = Partition::one_block(2, 2).unwrap();
        let (p, stats) = pi.compose(&Partition::identity_pairing(2)).unwrap();
        assert_eq!(p, pi);
        assert_eq!(stats.removed_components, 0);

        let capcap = Partition::cap().tensor(&Partition::cap());
        let (p, stats) = Partition::one_block(0, 4).unwrap().compose(&capcap).unwrap();
        assert_eq!(p, Partition::empty());
        assert_eq!(stats.removed_components, 1);
        assert_eq!(stats.component_sizes, vec![4]);

        assert!(matches!(Partition::cup().compose(&Partition::identity()), Err(Error::ArityMismatch { .. })));
    }

    #[test]
    fn compose_merges_through_the_middle() {
        // 1_{1,3} followed by cap on the last two legs gives the string
        let cap_right = Partition::identity().tensor(&Partition::cap());
        let (p, stats) = Partition::one_block(1, 3).unwrap().compose(&cap_right).unwrap();
        assert_eq!(p, Partition::identity());
        assert_eq!(stats.removed_components, 0);
    }

    #[test]
    fn json_round_trip_and_format() {
        let one = Partition::one_block(1, 3).unwrap();
        let s = serde_json::to_string(&one).unwrap();
        assert_eq!(s, r#"{"k":1,"l":3,"blocks":[["u1","d1","d2","d3"]]}"#);
        let back: Partition = serde_json::from_str(&s).unwrap();
        assert_eq!(back, one);
        let odd: std::result::Result<Partition, _> = serde_json::from_str(r#"{"k":1,"l":1,"blocks":[["u1"],["d1"]]}"#);
        assert!(odd.is_err());
    }

    #[test]
    fn class_names_parse() {
        for c in PartitionClass::ALL {
            assert_eq!(c.name().parse::<PartitionClass>().unwrap(), c);
        }
        assert!("q2".parse::<PartitionClass>().is_err());
    }
}
