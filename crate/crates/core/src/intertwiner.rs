//! The signed Kronecker calculus: `δ_alt`, one-block symbols, the product
//! rule over blocks, and the maps `T_π` as exact sparse matrices.
//!
//! A multi-index `(i_1, …, i_m)` over `{0..n}` is encoded as the base-`n`
//! integer with `i_1` most significant, so the dense realization of a map
//! `(ℂⁿ)^{⊗k} → (ℂⁿ)^{⊗l}` is an `n^l × n^k` matrix with rows indexed by
//! output codes.

use std::collections::{BTreeMap, HashMap};
use std::ops::AddAssign;

use num_traits::{Num, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::partition::{MiddleStats, Partition};
use crate::superspace::{Sign, SuperSpace};

pub fn encode(indices: &[usize], n: usize) -> u64 {
    indices.iter().fold(0u64, |acc, &i| acc * n as u64 + i as u64)
}

pub fn decode(mut code: u64, n: usize, len: usize) -> Vec<usize> {
    let mut out = vec![0; len];
    for slot in out.iter_mut().rev() {
        *slot = (code % n as u64) as usize;
        code /= n as u64;
    }
    out
}

/// A sparse linear map `(ℂⁿ)^{⊗k} → (ℂⁿ)^{⊗l}`; absent entries are zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseMap<T> {
    n: usize,
    k: usize,
    l: usize,
    entries: BTreeMap<(u64, u64), T>,
}

impl<T> SparseMap<T> {
    pub fn new(n: usize, k: usize, l: usize) -> Self {
        SparseMap { n, k, l, entries: BTreeMap::new() }
    }

    pub fn dimension(&self) -> usize {
        self.n
    }

    pub fn domain_arity(&self) -> usize {
        self.k
    }

    pub fn codomain_arity(&self) -> usize {
        self.l
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, out: u64, inp: u64) -> Option<&T> {
        self.entries.get(&(out, inp))
    }

    /// Entries as `((output code, input code), value)` in key order.
    pub fn iter(&self) -> impl Iterator<Item = (&(u64, u64), &T)> {
        self.entries.iter()
    }

    pub fn rows(&self) -> usize {
        self.n.pow(self.l as u32)
    }

    pub fn cols(&self) -> usize {
        self.n.pow(self.k as u32)
    }

    /// Swaps domain and codomain. Entries here are real, so this is the adjoint.
    pub fn transpose(&self) -> SparseMap<T>
    where
        T: Clone,
    {
        SparseMap {
            n: self.n,
            k: self.l,
            l: self.k,
            entries: self.entries.iter().map(|(&(o, i), v)| ((i, o), v.clone())).collect(),
        }
    }

    pub fn cast<U: From<T>>(&self) -> SparseMap<U>
    where
        T: Clone,
    {
        SparseMap {
            n: self.n,
            k: self.k,
            l: self.l,
            entries: self.entries.iter().map(|(&key, v)| (key, U::from(v.clone()))).collect(),
        }
    }
}

impl<T: Copy + Num + AddAssign> SparseMap<T> {
    /// Adds `value` at `(out, inp)`, dropping the entry if it cancels.
    pub fn accumulate(&mut self, out: u64, inp: u64, value: T) {
        if value.is_zero() {
            return;
        }
        let slot = self.entries.entry((out, inp)).or_insert_with(T::zero);
        *slot += value;
        if slot.is_zero() {
            self.entries.remove(&(out, inp));
        }
    }

    /// `self ⊗ other`, with `self` on the leftmost legs.
    pub fn kron(&self, other: &SparseMap<T>) -> SparseMap<T> {
        assert_eq!(self.n, other.n, "tensor factors over different dimensions");
        let rows2 = other.rows() as u64;
        let cols2 = other.cols() as u64;
        let mut out = SparseMap::new(self.n, self.k + other.k, self.l + other.l);
        for (&(o1, i1), &a) in &self.entries {
            for (&(o2, i2), &b) in &other.entries {
                out.entries.insert((o1 * rows2 + o2, i1 * cols2 + i2), a * b);
            }
        }
        out
    }

    /// The composite `next ∘ self`.
    pub fn then(&self, next: &SparseMap<T>) -> Result<SparseMap<T>> {
        if self.l != next.k || self.n != next.n {
            return Err(Error::ArityMismatch { expected: self.l, found: next.k });
        }
        let mut by_input: HashMap<u64, Vec<(u64, T)>> = HashMap::new();
        for (&(o, i), &v) in &next.entries {
            by_input.entry(i).or_default().push((o, v));
        }
        let mut acc: HashMap<(u64, u64), T> = HashMap::new();
        for (&(mid, inp), &a) in &self.entries {
            if let Some(col) = by_input.get(&mid) {
                for &(out, b) in col {
                    *acc.entry((out, inp)).or_insert_with(T::zero) += b * a;
                }
            }
        }
        let entries = acc.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        Ok(SparseMap { n: self.n, k: self.k, l: next.l, entries })
    }

    pub fn to_dense<U: Clone + Zero + From<T>>(&self) -> Matrix<U> {
        let mut m = Matrix::zeros(self.rows(), self.cols());
        for (&(o, i), &v) in &self.entries {
            m[(o as usize, i as usize)] = U::from(v);
        }
        m
    }
}

/// `T_π`: every stored entry is `±1`.
pub type SignedSparseMap = SparseMap<i8>;

/// Wire format: header `(k, l, n)` plus 1-based multi-indices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SparseMapJson {
    pub k: usize,
    pub l: usize,
    pub n: usize,
    pub entries: Vec<EntryJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryJson {
    pub out: Vec<usize>,
    #[serde(rename = "in")]
    pub inp: Vec<usize>,
    pub val: i64,
}

impl<T: Copy + Into<i64>> From<&SparseMap<T>> for SparseMapJson {
    fn from(m: &SparseMap<T>) -> Self {
        let entries = m
            .entries
            .iter()
            .map(|(&(o, i), &v)| EntryJson {
                out: decode(o, m.n, m.l).into_iter().map(|x| x + 1).collect(),
                inp: decode(i, m.n, m.k).into_iter().map(|x| x + 1).collect(),
                val: v.into(),
            })
            .collect();
        SparseMapJson { k: m.k, l: m.l, n: m.n, entries }
    }
}

/// `δ_alt(s) = 1` iff `s_1 = s̄_2 = s_3 = s̄_4 = …`; vacuously true when empty.
pub fn delta_alt(space: &SuperSpace, seq: &[usize]) -> bool {
    let Some(&x) = seq.first() else { return true };
    let xb = space.bar(x);
    seq.iter().enumerate().all(|(r, &s)| s == if r % 2 == 0 { x } else { xb })
}

fn odd_position_sign(space: &SuperSpace, indices: &[usize]) -> i8 {
    indices.iter().step_by(2).map(|&i| space.sign_of(i)).product()
}

/// The one-block symbol `δ_{1_{k,l}}(i; j)`: odd-position signs of both rows
/// times `δ_alt(j_1, …, j_l, ī_k, …, ī_1)`.
pub fn block_delta(space: &SuperSpace, upper: &[usize], lower: &[usize]) -> Result<i8> {
    if (upper.len() + lower.len()) % 2 == 1 {
        return Err(Error::OddBlock(format!("({} upper, {} lower legs)", upper.len(), lower.len())));
    }
    let chain: Vec<usize> = lower.iter().copied().chain(upper.iter().rev().map(|&i| space.bar(i))).collect();
    if !delta_alt(space, &chain) {
        return Ok(0);
    }
    Ok(odd_position_sign(space, upper) * odd_position_sign(space, lower))
}

/// `δ_π = ∏_b δ_b`, each block reading its legs left to right within each row.
pub fn delta(pi: &Partition, space: &SuperSpace, upper: &[usize], lower: &[usize]) -> Result<i8> {
    if upper.len() != pi.k() {
        return Err(Error::ArityMismatch { expected: pi.k(), found: upper.len() });
    }
    if lower.len() != pi.l() {
        return Err(Error::ArityMismatch { expected: pi.l(), found: lower.len() });
    }
    let mut value = 1i8;
    for (ups, downs) in pi.block_rows() {
        let i: Vec<usize> = ups.iter().map(|&u| upper[u]).collect();
        let j: Vec<usize> = downs.iter().map(|&d| lower[d]).collect();
        value *= block_delta(space, &i, &j)?;
        if value == 0 {
            break;
        }
    }
    Ok(value)
}

/// Local solutions of one block: for every free index `x` the chain is
/// `x, x̄, x, …`, which fixes all legs of the block.
fn block_solutions(space: &SuperSpace, ups: &[usize], downs: &[usize]) -> Vec<(Vec<usize>, Vec<usize>, i8)> {
    let (kb, lb) = (ups.len(), downs.len());
    (0..space.n())
        .map(|x| {
            let chain = |r: usize| if r.is_multiple_of(2) { x } else { space.bar(x) };
            let j: Vec<usize> = (0..lb).map(chain).collect();
            // chain position lb + t carries ī_{kb-1-t}
            let i: Vec<usize> = (0..kb).map(|s| space.bar(chain(lb + kb - 1 - s))).collect();
            let sign = odd_position_sign(space, &i) * odd_position_sign(space, &j);
            (i, j, sign)
        })
        .collect()
}

/// Builds `T_π` by choosing one free index per block.
pub fn build_t(pi: &Partition, space: &SuperSpace) -> SignedSparseMap {
    let n = space.n();
    let rows = pi.block_rows();
    let local: Vec<_> = rows.iter().map(|(u, d)| block_solutions(space, u, d)).collect();
    let mut map = SparseMap::new(n, pi.k(), pi.l());
    if n == 0 && !rows.is_empty() {
        return map;
    }
    let mut choice = vec![0usize; rows.len()];
    let mut upper = vec![0usize; pi.k()];
    let mut lower = vec![0usize; pi.l()];
    loop {
        let mut sign = 1i8;
        for (b, ((ups, downs), sols)) in rows.iter().zip(&local).enumerate() {
            let (i, j, s) = &sols[choice[b]];
            for (&pos, &v) in ups.iter().zip(i) {
                upper[pos] = v;
            }
            for (&pos, &v) in downs.iter().zip(j) {
                lower[pos] = v;
            }
            sign *= s;
        }
        map.entries.insert((encode(&lower, n), encode(&upper, n)), sign);
        // odometer over block choices
        let mut b = 0;
        while b < choice.len() {
            choice[b] += 1;
            if choice[b] < n {
                break;
            }
            choice[b] = 0;
            b += 1;
        }
        if b == choice.len() {
            break;
        }
    }
    map
}

/// Measured scalar in `T_π T_σ = s · T_{[σ/π]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompositionScalar {
    pub n: usize,
    pub p: usize,
    pub q: usize,
    pub eps: Sign,
    pub scalar: i64,
    /// `ε^c`, the sign of the scalar.
    pub sign_part: i8,
    /// `d` with `|s| = n^d`, when `|s|` is a power of `n`.
    pub power_part: Option<u32>,
    pub composite: Partition,
    pub middle: MiddleStats,
}

/// Exact power `d` with `n^d = value`, if any.
pub fn exact_power(value: u64, n: usize) -> Option<u32> {
    if value == 0 {
        return None;
    }
    if n == 1 {
        return (value == 1).then_some(0);
    }
    let mut d = 0;
    let mut acc = 1u64;
    while acc < value {
        acc = acc.checked_mul(n as u64)?;
        d += 1;
    }
    (acc == value).then_some(d)
}

/// Checks `product = s · target` at every index and returns `s`.
pub fn proportionality(product: &SparseMap<i64>, target: &SignedSparseMap) -> Result<i64> {
    let Some((&key, &t)) = target.iter().next() else {
        return Err(Error::ZeroTarget);
    };
    let s = product.get(key.0, key.1).copied().unwrap_or(0) * t as i64;
    if s == 0 {
        return Err(Error::NotProportional(format!("product vanishes at target entry {key:?}")));
    }
    for (&(o, i), &v) in target.iter() {
        let got = product.get(o, i).copied().unwrap_or(0);
        if got != s * v as i64 {
            return Err(Error::NotProportional(format!("entry ({o},{i}): expected {}, found {got}", s * v as i64)));
        }
    }
    if let Some((key, v)) = product.iter().find(|(&(o, i), _)| target.get(o, i).is_none()) {
        return Err(Error::NotProportional(format!("product has {v} at {key:?} outside the target support")));
    }
    Ok(s)
}

/// Computes `T_π T_σ` exactly, checks it against `T_{[σ/π]}` entrywise and
/// splits the scalar into its sign and its power of `n`.
pub fn measure_composition_scalar(sigma: &Partition, pi: &Partition, space: &SuperSpace) -> Result<CompositionScalar> {
    let (composite, middle) = sigma.compose(pi)?;
    let t_sigma = build_t(sigma, space).cast::<i64>();
    let t_pi = build_t(pi, space).cast::<i64>();
    let product = t_sigma.then(&t_pi)?;
    let target = build_t(&composite, space);
    let scalar = proportionality(&product, &target)?;
    Ok(CompositionScalar {
        n: space.n(),
        p: space.p(),
        q: space.q(),
        eps: space.epsilon(),
        scalar,
        sign_part: scalar.signum() as i8,
        power_part: exact_power(scalar.unsigned_abs(), space.n()),
        composite,
        middle,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{enumerate_partitions, PartitionClass};

    fn sp(p: usize, q: usize, eps: Sign) -> SuperSpace {
        SuperSpace::new(p, q, eps).unwrap()
    }

    #[test]
    fn delta_alt_examples() {
        let s = sp(1, 0, Sign::Minus);
        assert!(delta_alt(&s, &[0, 1]));
        assert!(!delta_alt(&s, &[0, 0]));
        assert!(delta_alt(&s, &[]));
        assert!(delta_alt(&s, &[1, 0, 1, 0]));
    }

    #[test]
    fn string_symbol_is_kronecker_delta() {
        for s in SuperSpace::all_up_to(5) {
            for i in 0..s.n() {
                for j in 0..s.n() {
                    assert_eq!(block_delta(&s, &[i], &[j]).unwrap(), (i == j) as i8);
                }
            }
        }
    }

    #[test]
    fn symplectic_cup_values() {
        let s = sp(1, 0, Sign::Minus);
        assert_eq!(block_delta(&s, &[], &[0, 1]).unwrap(), -1);
        assert_eq!(block_delta(&s, &[], &[1, 0]).unwrap(), 1);
        assert_eq!(block_delta(&s, &[], &[0, 0]).unwrap(), 0);
        assert!(matches!(block_delta(&s, &[0], &[0, 1]), Err(Error::OddBlock(_))));
    }

    #[test]
    fn one_three_block_values() {
        for s in SuperSpace::all_up_to(4) {
            let n = s.n();
            for i in 0..n {
                for code in 0..n.pow(3) {
                    let j = decode(code as u64, n, 3);
                    let expect = if j == [i, s.bar(i), i] { s.sign_of(i) } else { 0 };
                    assert_eq!(block_delta(&s, &[i], &j).unwrap(), expect, "{s} i={i} j={j:?}");
                }
            }
        }
    }

    #[test]
    fn delta_product_rule() {
        let s = sp(2, 0, Sign::Minus);
        let cupcup = Partition::cup().tensor(&Partition::cup());
        assert_eq!(delta(&cupcup, &s, &[], &[0, 1, 2, 3]).unwrap(), 1);
        assert_eq!(delta(&cupcup, &s, &[], &[0, 1, 3, 2]).unwrap(), -1);
        assert!(matches!(delta(&cupcup, &s, &[0], &[0, 1, 2, 3]), Err(Error::ArityMismatch { .. })));

        let h = Partition::half_commutation();
        for (a, b, c) in [(0, 1, 2), (3, 3, 0), (1, 0, 1)] {
            for (i, j, k) in [(2, 1, 0), (0, 3, 3), (1, 0, 1), (0, 1, 2)] {
                let expect = (a == k && b == j && c == i) as i8;
                assert_eq!(delta(&h, &s, &[a, b, c], &[i, j, k]).unwrap(), expect);
            }
        }
        let id2 = Partition::identity_pairing(2);
        assert_eq!(delta(&id2, &s, &[1, 2], &[1, 2]).unwrap(), 1);
        assert_eq!(delta(&id2, &s, &[1, 2], &[2, 1]).unwrap(), 0);
    }

    #[test]
    fn build_t_examples() {
        for s in SuperSpace::all_up_to(4) {
            let id = build_t(&Partition::identity(), &s);
            assert_eq!(id.to_dense::<i64>(), Matrix::identity(s.n()));
            let t = build_t(&Partition::one_block(1, 3).unwrap(), &s);
            assert_eq!(t.nnz(), s.n());
            for i in 0..s.n() {
                let out = encode(&[i, s.bar(i), i], s.n());
                assert_eq!(t.get(out, i as u64), Some(&s.sign_of(i)));
            }
        }
        let s = sp(1, 0, Sign::Minus);
        let cup = build_t(&Partition::cup(), &s);
        assert_eq!(cup.get(encode(&[0, 1], 2), 0), Some(&-1));
        assert_eq!(cup.get(encode(&[1, 0], 2), 0), Some(&1));
        assert_eq!(cup.nnz(), 2);
    }

    #[test]
    fn build_t_matches_pointwise_delta() {
        for s in [sp(1, 0, Sign::Minus), sp(1, 1, Sign::Plus), sp(0, 2, Sign::Plus), sp(0, 3, Sign::Plus)] {
            let n = s.n();
            for (k, l) in [(0, 2), (1, 1), (2, 2), (1, 3), (0, 4), (3, 1)] {
                for pi in enumerate_partitions(k, l, PartitionClass::PEven).unwrap() {
                    let t = build_t(&pi, &s);
                    let mut nnz = 0;
                    for o in 0..n.pow(l as u32) {
                        for i in 0..n.pow(k as u32) {
                            let d = delta(&pi, &s, &decode(i as u64, n, k), &decode(o as u64, n, l)).unwrap();
                            assert_eq!(t.get(o as u64, i as u64).copied().unwrap_or(0), d, "{pi} {s}");
                            nnz += (d != 0) as usize;
                        }
                    }
                    assert_eq!(nnz, n.pow(pi.num_blocks() as u32));
                }
            }
        }
    }

    #[test]
    fn composition_scalar_examples() {
        for s in [sp(1, 0, Sign::Minus), sp(2, 0, Sign::Minus), sp(0, 2, Sign::Plus), sp(2, 0, Sign::Plus)] {
            let c = measure_composition_scalar(&Partition::cup(), &Partition::cap(), &s).unwrap();
            assert_eq!(c.scalar, s.n() as i64);
            assert_eq!((c.sign_part, c.power_part), (1, Some(1)));
            let id2 = Partition::identity_pairing(2);
            let c = measure_composition_scalar(&id2, &id2, &s).unwrap();
            assert_eq!((c.scalar, c.power_part), (1, Some(0)));
        }
        let s = sp(1, 0, Sign::Minus);
        let capcap = Partition::cap().tensor(&Partition::cap());
        let c = measure_composition_scalar(&Partition::one_block(0, 4).unwrap(), &capcap, &s).unwrap();
        assert_eq!((c.scalar, c.power_part), (2, Some(1)));
        assert_eq!(c.middle.removed_components, 1);
    }

    #[test]
    fn crossing_after_one_block_is_not_proportional_with_pairs() {
        // flipping the middle legs of 1_{0,4} yields Σ e_x e_x e_x̄ e_x̄
        let flip = Partition::identity().tensor(&Partition::crossing()).tensor(&Partition::identity());
        let sigma = Partition::one_block(0, 4).unwrap();
        for s in [sp(1, 0, Sign::Minus), sp(1, 0, Sign::Plus)] {
            assert!(matches!(measure_composition_scalar(&sigma, &flip, &s), Err(Error::NotProportional(_))));
        }
        let c = measure_composition_scalar(&sigma, &flip, &SuperSpace::classical(3)).unwrap();
        assert_eq!(c.scalar, 1);
    }

    #[test]
    fn exact_powers() {
        assert_eq!(exact_power(1, 4), Some(0));
        assert_eq!(exact_power(16, 4), Some(2));
        assert_eq!(exact_power(8, 4), None);
        assert_eq!(exact_power(0, 2), None);
        assert_eq!(exact_power(1, 1), Some(0));
    }

    #[test]
    fn json_uses_one_based_indices() {
        let s = sp(1, 0, Sign::Minus);
        let j = SparseMapJson::from(&build_t(&Partition::cup(), &s));
        let text = serde_json::to_string(&j).unwrap();
        assert_eq!(text, r#"{"k":0,"l":2,"n":2,"entries":[{"out":[1,2],"in":[],"val":-1},{"out":[2,1],"in":[],"val":1}]}"#);
    }
}
