//! Slow, independent reference computations used to cross-check the fast
//! paths: brute-force partition listing, entrywise dense `T_π`, dense
//! products, and closed-form counts.

use std::collections::BTreeSet;

use crate::intertwiner::{decode, delta};
use crate::linalg::Matrix;
use crate::partition::{Partition, PartitionClass};
use crate::superspace::{Sign, SuperSpace};

/// Every set partition of `m` points as a block list, built by inserting
/// the points one at a time into an existing block or a new one.
pub fn set_partitions(m: usize) -> Vec<Vec<Vec<usize>>> {
    let mut out: Vec<Vec<Vec<usize>>> = vec![Vec::new()];
    for point in 0..m {
        let mut next = Vec::new();
        for blocks in &out {
            for b in 0..blocks.len() {
                let mut grown = blocks.clone();
                grown[b].push(point);
                next.push(grown);
            }
            let mut fresh = blocks.clone();
            fresh.push(vec![point]);
            next.push(fresh);
        }
        out = next;
    }
    out
}

/// Crossing test on positions of a boundary word: some `a < b < c < d` with
/// `a, c` in one block and `b, d` in another.
pub fn blocks_cross(blocks: &[Vec<usize>]) -> bool {
    for (x, p) in blocks.iter().enumerate() {
        for q in blocks.iter().skip(x + 1) {
            for &a in p {
                for &c in p {
                    for &b in q {
                        for &d in q {
                            if (a < b && b < c && c < d) || (b < a && a < d && d < c) {
                                return true;
                            }
                        }
                    }
                }
            }
        }
    }
    false
}

/// Brute-force members of `class` on `(k, l)`. Boundary position `t < k`
/// is upper leg `t`, position `k + s` is lower leg `l - 1 - s`.
pub fn brute_force_class(k: usize, l: usize, class: PartitionClass) -> BTreeSet<Partition> {
    let m = k + l;
    let mut out = BTreeSet::new();
    for blocks in set_partitions(m) {
        if blocks.iter().any(|b| b.len() % 2 == 1) {
            continue;
        }
        if matches!(class, PartitionClass::P2 | PartitionClass::Nc2) && blocks.iter().any(|b| b.len() != 2) {
            continue;
        }
        if matches!(class, PartitionClass::NcEven | PartitionClass::Nc2) && blocks_cross(&blocks) {
            continue;
        }
        let mut labels = vec![0usize; m];
        for (b, block) in blocks.iter().enumerate() {
            for &pos in block {
                let leg = if pos < k { pos } else { k + (l - 1 - (pos - k)) };
                labels[leg] = b;
            }
        }
        out.insert(Partition::from_labels(k, l, &labels).expect("even blocks"));
    }
    out
}

/// `(2m − 1)!! = |P_2(0, 2m)|`.
pub fn double_factorial_odd(m: usize) -> u64 {
    (1..=m as u64).map(|i| 2 * i - 1).product()
}

/// `C_m = |NC_2(0, 2m)|`.
pub fn catalan(m: usize) -> u64 {
    let mut c = 1u64;
    for i in 0..m as u64 {
        c = c * 2 * (2 * i + 1) / (i + 2);
    }
    c
}

fn factorial(m: usize) -> u64 {
    (1..=m as u64).product()
}

/// Order of `S̄_n`: `2^p p! q!` at `ε = +1`, `p!` at `ε = −1`.
pub fn sbar_order(space: &SuperSpace) -> u64 {
    match space.epsilon() {
        Sign::Plus => (1u64 << space.p()) * factorial(space.p()) * factorial(space.q()),
        Sign::Minus => factorial(space.p()),
    }
}

/// `dim O_n = n(n−1)/2` and `dim Sp_n = p(2p+1)`.
pub fn obar_lie_dimension(space: &SuperSpace) -> usize {
    match space.epsilon() {
        Sign::Plus => space.n() * (space.n() - 1) / 2,
        Sign::Minus => space.p() * (2 * space.p() + 1),
    }
}

/// `dim Sp_{n−2} = (p−1)(2p−1)` at `ε = −1`.
pub fn bbar_minus_lie_dimension(space: &SuperSpace) -> usize {
    let p = space.p();
    if p == 0 { 0 } else { (p - 1) * (2 * p - 1) }
}

/// Dense `T_π` filled entry by entry from the defining `δ_π` symbol.
pub fn dense_t(pi: &Partition, space: &SuperSpace) -> Matrix<i64> {
    let n = space.n();
    let rows = n.pow(pi.l() as u32);
    let cols = n.pow(pi.k() as u32);
    Matrix::from_fn(rows, cols, |r, c| {
        let lower = decode(r as u64, n, pi.l());
        let upper = decode(c as u64, n, pi.k());
        delta(pi, space, &upper, &lower).expect("arities match") as i64
    })
}
