//! Bounded closure of partition sets under tensor product, composition and
//! involution.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::{enumerate_partitions_bounded, Partition, PartitionClass, DEFAULT_POINT_BOUND};

/// The slice of a category of partitions with at most `point_bound` legs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PartitionCategory {
    pub members: BTreeSet<Partition>,
    pub generators: Vec<Partition>,
    pub point_bound: usize,
    pub base_included: bool,
    /// Worklist rounds until the fixed point was reached.
    pub rounds: usize,
}

impl PartitionCategory {
    pub fn contains(&self, pi: &Partition) -> bool {
        self.members.contains(pi)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Member counts per `(k, l)`.
    pub fn counts(&self) -> BTreeMap<(usize, usize), usize> {
        let mut out = BTreeMap::new();
        for m in &self.members {
            *out.entry((m.k(), m.l())).or_insert(0) += 1;
        }
        out
    }

    pub fn is_subset_of(&self, other: &PartitionCategory) -> bool {
        self.members.is_subset(&other.members)
    }
}

/// The seed every category contains: `|`, `∩`, `∪`.
pub fn base_partitions() -> Vec<Partition> {
    vec![Partition::identity(), Partition::cap(), Partition::cup()]
}

fn products(x: &Partition, members: &BTreeSet<Partition>, bound: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    if x.points() <= bound {
        out.push(x.involution());
    }
    for y in members {
        if x.points() + y.points() <= bound {
            out.push(x.tensor(y));
            out.push(y.tensor(x));
        }
        for (top, bottom) in [(x, y), (y, x)] {
            if top.l() == bottom.k() && top.k() + bottom.l() <= bound {
                // gluing two even partitions never leaves an odd block
                if let Ok((c, _)) = top.compose(bottom) {
                    out.push(c);
                }
            }
        }
    }
    out
}

/// Extra legs allowed for intermediate results. With none, rotations of
/// `point_bound`-leg partitions are out of reach: the nested pairing in
/// `P(0, 6)` needs an 8-leg partition to produce.
pub const CLOSURE_MARGIN: usize = 2;

/// Least set containing `generators` and `|, ∩, ∪` that is closed under
/// the three operations, restricted to at most `point_bound` legs.
/// Intermediate results may use [`CLOSURE_MARGIN`] extra legs.
pub fn closure(generators: &[Partition], point_bound: usize) -> Result<PartitionCategory> {
    closure_with_margin(generators, point_bound, CLOSURE_MARGIN)
}

/// As [`closure`], with any result over `point_bound + margin` legs dropped.
pub fn closure_with_margin(generators: &[Partition], point_bound: usize, margin: usize) -> Result<PartitionCategory> {
    if point_bound > DEFAULT_POINT_BOUND {
        return Err(Error::BoundExceeded { points: point_bound, bound: DEFAULT_POINT_BOUND });
    }
    let work_bound = point_bound + margin;
    let mut members: BTreeSet<Partition> = BTreeSet::new();
    for g in base_partitions().iter().chain(generators) {
        if g.points() <= work_bound {
            members.insert(g.clone());
        }
    }
    let mut frontier: Vec<Partition> = members.iter().cloned().collect();
    let mut rounds = 0;
    while !frontier.is_empty() {
        rounds += 1;
        let found: BTreeSet<Partition> = frontier
            .par_iter()
            .flat_map_iter(|x| products(x, &members, work_bound))
            .filter(|c| !members.contains(c))
            .collect();
        members.extend(found.iter().cloned());
        frontier = found.into_iter().collect();
    }
    members.retain(|m| m.points() <= point_bound);
    Ok(PartitionCategory {
        members,
        generators: generators.to_vec(),
        point_bound,
        base_included: true,
        rounds,
    })
}

/// Structural membership in one of the four named categories.
pub fn membership_named(pi: &Partition, class: PartitionClass) -> bool {
    class.contains(pi)
}

/// All partitions of `class` with `k + l <= point_bound` as a set.
pub fn enumerate_class_bounded(class: PartitionClass, point_bound: usize) -> Result<BTreeSet<Partition>> {
    let mut out = BTreeSet::new();
    for total in 0..=point_bound {
        for k in 0..=total {
            out.extend(enumerate_partitions_bounded(k, total - k, class, point_bound)?);
        }
    }
    Ok(out)
}

/// Outcome of comparing a closure with an enumerated class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClosureComparison {
    pub class: PartitionClass,
    pub closure_size: usize,
    pub class_size: usize,
    pub missing: Vec<Partition>,
    pub extra: Vec<Partition>,
}

impl ClosureComparison {
    pub fn equal(&self) -> bool {
        self.missing.is_empty() && self.extra.is_empty()
    }
}

pub fn compare_with_class(cat: &PartitionCategory, class: PartitionClass) -> Result<ClosureComparison> {
    let expected = enumerate_class_bounded(class, cat.point_bound)?;
    Ok(ClosureComparison {
        class,
        closure_size: cat.members.len(),
        class_size: expected.len(),
        missing: expected.difference(&cat.members).cloned().collect(),
        extra: cat.members.difference(&expected).cloned().collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_membership() {
        let crossing = Partition::crossing();
        assert!(membership_named(&crossing, PartitionClass::P2));
        assert!(!membership_named(&crossing, PartitionClass::Nc2));
        let block = Partition::one_block(1, 3).unwrap();
        assert!(membership_named(&block, PartitionClass::NcEven));
        assert!(!membership_named(&block, PartitionClass::Nc2));
        let half = Partition::half_commutation();
        assert!(membership_named(&half, PartitionClass::P2));
        assert!(!membership_named(&half, PartitionClass::Nc2));
    }

    #[test]
    fn generation_claims_at_six() {
        let cases = [
            (vec![], PartitionClass::Nc2),
            (vec![Partition::one_block(1, 3).unwrap()], PartitionClass::NcEven),
            (vec![Partition::crossing()], PartitionClass::P2),
        ];
        for (gens, class) in cases {
            let cat = closure(&gens, 6).unwrap();
            let cmp = compare_with_class(&cat, class).unwrap();
            assert!(cmp.equal(), "{class}: missing {:?} extra {:?}", cmp.missing, cmp.extra);
        }
    }

    #[test]
    fn crossing_and_block_give_p_even() {
        let gens = vec![Partition::crossing(), Partition::one_block(1, 3).unwrap()];
        let cat = closure(&gens, 6).unwrap();
        assert!(compare_with_class(&cat, PartitionClass::PEven).unwrap().equal());
    }

    #[test]
    fn monotone_idempotent_and_sandwiched() {
        let small = closure(&[], 6).unwrap();
        let half = closure(&[Partition::half_commutation()], 6).unwrap();
        let big = closure(&[Partition::half_commutation(), Partition::one_block(1, 3).unwrap()], 6).unwrap();
        assert!(small.is_subset_of(&half) && half.is_subset_of(&big));
        let again = closure(&half.members.iter().cloned().collect::<Vec<_>>(), 6).unwrap();
        assert_eq!(again.members, half.members);
        let p_even = enumerate_class_bounded(PartitionClass::PEven, 6).unwrap();
        for cat in [&small, &half, &big] {
            assert!(cat.members.is_subset(&p_even));
            assert!(small.members.is_subset(&cat.members));
        }
    }

    #[test]
    fn strict_truncation_misses_rotations() {
        let cat = closure_with_margin(&[], 6, 0).unwrap();
        let nested = Partition::from_labels(0, 6, &[0, 1, 2, 2, 1, 0]).unwrap();
        assert!(!cat.contains(&nested));
        assert!(closure(&[], 6).unwrap().contains(&nested));
    }

    #[test]
    fn bound_is_checked() {
        assert!(matches!(closure(&[], 13), Err(Error::BoundExceeded { .. })));
    }
}
