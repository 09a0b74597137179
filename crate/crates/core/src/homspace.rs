//! Both sides of the Schur–Weyl comparison: the exact span of
//! `{T_π : π ∈ D(k,l)}` and the numerically computed commutant of a
//! sampled group.

use std::fmt;
use std::str::FromStr;

use nalgebra::{convert, Complex, ComplexField, DVector, RealField};
use num_bigint::BigInt;
use num_traits::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::groups::{sample_with, CMatrix, Family};
use crate::intertwiner::{build_t, decode, SignedSparseMap};
use crate::linalg::{rank_fraction_free, Matrix};
use crate::partition::{enumerate_partitions, Partition, PartitionClass};
use crate::superspace::SuperSpace;

/// Largest `n^(k+l)` accepted by [`commutant_dimension`].
pub const COMMUTANT_SIZE_LIMIT: usize = 5000;
pub const MIN_SAMPLES: usize = 8;
/// Singular values below this count as zero in the commutant solve.
pub const SINGULAR_GAP: f64 = 1e-8;
pub const CONTAINMENT_TOL: f64 = 1e-10;
/// Eigenvalue products this close to 1 keep a product vector in the
/// pivot weight space.
const WEIGHT_TOL: f64 = 1e-7;

/// `G_{πσ} = trace(T_π* T_σ)`.
pub fn gram_matrix(partitions: &[Partition], space: &SuperSpace, k: usize, l: usize) -> Result<Matrix<i64>> {
    for pi in partitions {
        if pi.k() != k || pi.l() != l {
            return Err(Error::ArityMismatch { expected: k + l, found: pi.points() });
        }
    }
    let maps: Vec<SignedSparseMap> = partitions.par_iter().map(|pi| build_t(pi, space)).collect();
    let m = maps.len();
    let entries: Vec<i64> = (0..m * m)
        .into_par_iter()
        .map(|idx| {
            let (a, b) = (&maps[idx / m], &maps[idx % m]);
            a.iter()
                .filter_map(|(key, &x)| b.get(key.0, key.1).map(|&y| x as i64 * y as i64))
                .sum()
        })
        .collect();
    Ok(Matrix::from_vec(m, m, entries))
}

/// Exact rank of the Gram matrix of `D(k,l)`, which equals the dimension
/// of the real span of the maps.
pub fn span_dimension(class: PartitionClass, k: usize, l: usize, space: &SuperSpace) -> Result<usize> {
    if k + l > 8 {
        return Err(Error::BoundExceeded { points: k + l, bound: 8 });
    }
    if space.n() > 6 {
        return Err(Error::BoundExceeded { points: space.n(), bound: 6 });
    }
    let parts = enumerate_partitions(k, l, class)?;
    span_rank_of(&parts, space, k, l)
}

pub fn span_rank_of(parts: &[Partition], space: &SuperSpace, k: usize, l: usize) -> Result<usize> {
    let g = gram_matrix(parts, space, k, l)?;
    Ok(rank_fraction_free(&g.map(|&x| BigInt::from(x))))
}

/// The classes whose maps intertwine every element of `family`.
pub fn supported(family: Family, class: PartitionClass) -> bool {
    match family {
        Family::Obar => matches!(class, PartitionClass::P2 | PartitionClass::Nc2),
        Family::Hbar => true,
        _ => false,
    }
}

fn draw<T: RealField + Copy>(family: Family, space: &SuperSpace, rng: &mut ChaCha8Rng, count: usize) -> Result<Vec<CMatrix<T>>> {
    (0..count).map(|_| sample_with::<T>(family, space, rng).map(|g| g.matrix)).collect()
}

/// `max |U^{⊗l} T − T U^{⊗k}|` for one matrix and one map.
pub fn commutation_residual<T: RealField + Copy>(u: &CMatrix<T>, t: &SignedSparseMap) -> T {
    let n = t.dimension();
    let (k, l) = (t.domain_arity(), t.codomain_arity());
    let (rows, cols) = (n.pow(l as u32), n.pow(k as u32));
    let mut dense = CMatrix::<T>::zeros(rows, cols);
    for (&(o, i), &v) in t.iter() {
        dense[(o as usize, i as usize)] = Complex::new(convert(v as f64), T::zero());
    }
    // U^{⊗l} T column by column, and (T U^{⊗k})^T = (U^T)^{⊗k} T^T likewise
    let left: Vec<DVector<Complex<T>>> = (0..cols)
        .map(|c| apply_legs(&vec![u.clone(); l], &dense.column(c).into_owned(), n))
        .collect();
    let ut = u.transpose();
    let right: Vec<DVector<Complex<T>>> = (0..rows)
        .map(|r| apply_legs(&vec![ut.clone(); k], &dense.row(r).transpose(), n))
        .collect();
    let mut worst = T::zero();
    for (c, col) in left.iter().enumerate() {
        for (r, row) in right.iter().enumerate() {
            let d = col[r] - row[c];
            worst = worst.max(d.modulus());
        }
    }
    worst
}

/// Largest commutation residual over sampled elements and all `π ∈ D(k,l)`.
pub fn containment_check<T: RealField + Copy>(
    class: PartitionClass,
    k: usize,
    l: usize,
    family: Family,
    space: &SuperSpace,
    samples: usize,
    seed: u64,
) -> Result<T> {
    if !supported(family, class) {
        return Err(Error::Unsupported(format!("{family} with {class}")));
    }
    let parts = enumerate_partitions(k, l, class)?;
    let maps: Vec<SignedSparseMap> = parts.iter().map(|pi| build_t(pi, space)).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let us = draw::<T>(family, space, &mut rng, samples)?;
    let worst = us
        .par_iter()
        .map(|u| maps.iter().fold(T::zero(), |acc, t| acc.max(commutation_residual(u, t))))
        .reduce(T::zero, |a, b| a.max(b));
    Ok(worst)
}

/// Applies `A_0 ⊗ A_1 ⊗ … ⊗ A_{m-1}` to a vector, first leg most significant.
fn apply_legs<T: RealField + Copy>(legs: &[CMatrix<T>], x: &DVector<Complex<T>>, n: usize) -> DVector<Complex<T>> {
    let m = legs.len();
    let mut cur = x.clone();
    let mut next = DVector::<Complex<T>>::zeros(x.len());
    for (t, a) in legs.iter().enumerate() {
        let stride = n.pow((m - 1 - t) as u32);
        let span = stride * n;
        next.fill(Complex::new(T::zero(), T::zero()));
        for base in (0..x.len()).step_by(span) {
            for off in 0..stride {
                for r in 0..n {
                    let mut acc = Complex::new(T::zero(), T::zero());
                    for c in 0..n {
                        acc += a[(r, c)] * cur[base + c * stride + off];
                    }
                    next[base + r * stride + off] = acc;
                }
            }
        }
        std::mem::swap(&mut cur, &mut next);
    }
    cur
}

/// Leg matrices of `U^{⊗l} ⊗ Ū^{⊗k}`, whose fixed vectors are the
/// vectorised solutions of `U^{⊗l} T = T U^{⊗k}`.
fn legs_of<T: RealField + Copy>(u: &CMatrix<T>, k: usize, l: usize) -> Vec<CMatrix<T>> {
    let bar = u.map(|z| z.conj());
    std::iter::repeat_n(u.clone(), l).chain(std::iter::repeat_n(bar, k)).collect()
}

/// `tol`, raised to a thousand ulps for scalars too coarse to resolve it.
fn working_tol<T: RealField + Copy>(tol: f64) -> T {
    let floor = T::default_epsilon() * convert(1000.0);
    floor.max(convert(tol))
}

fn null_space<T: RealField + Copy>(m: CMatrix<T>) -> CMatrix<T> {
    let cols = m.ncols();
    if cols == 0 {
        return m;
    }
    // the full right-singular basis is needed, so pad to a square system
    let r = if m.nrows() >= cols { m.qr().r() } else { m };
    let mut square = CMatrix::<T>::zeros(cols, cols);
    let take = r.nrows().min(cols);
    square.view_mut((0, 0), (take, cols)).copy_from(&r.rows(0, take));
    let svd = square.svd(false, true);
    let v_t = svd.v_t.expect("requested V^T");
    let gap = working_tol::<T>(SINGULAR_GAP);
    let zero_rows: Vec<usize> = (0..cols).filter(|&i| svd.singular_values[i] < gap).collect();
    CMatrix::<T>::from_fn(cols, zero_rows.len(), |r, c| v_t[(zero_rows[c], r)].conj())
}

/// Eigenvalue-1 product eigenvectors of the pivot `U^{⊗l} ⊗ Ū^{⊗k}`: the
/// Schur basis `Q` of `U` and the multi-indices of the chosen products.
/// Every invariant vector lies in their span.
struct WeightSpace<T: RealField> {
    q: CMatrix<T>,
    chosen: Vec<Vec<usize>>,
}

fn weight_space<T: RealField + Copy>(u: &CMatrix<T>, k: usize, l: usize) -> WeightSpace<T> {
    let n = u.nrows();
    let (q, tri) = u.clone().schur().unpack();
    let lambda: Vec<Complex<T>> = (0..n).map(|i| tri[(i, i)]).collect();
    let m = k + l;
    let wtol = working_tol::<T>(WEIGHT_TOL);
    let one = Complex::new(T::one(), T::zero());
    let chosen = (0..n.pow(m as u32) as u64)
        .map(|code| decode(code, n, m))
        .filter(|idx| {
            let prod = idx.iter().enumerate().fold(one, |acc, (t, &j)| {
                if t < l { acc * lambda[j] } else { acc * lambda[j].conj() }
            });
            (prod - one).modulus() < wtol
        })
        .collect();
    WeightSpace { q, chosen }
}

/// `B* (A^{⊗l} ⊗ Ā^{⊗k}) B` for the product basis `B` of `w`; each entry is
/// a product of entries of `Q* A Q`.
fn compressed<T: RealField + Copy>(w: &WeightSpace<T>, a: &CMatrix<T>, l: usize) -> CMatrix<T> {
    let p = w.q.adjoint() * a * &w.q;
    let pbar = p.map(|z| z.conj());
    let dim = w.chosen.len();
    let one = Complex::new(T::one(), T::zero());
    let entries: Vec<Complex<T>> = (0..dim * dim)
        .into_par_iter()
        .map(|idx| {
            let (r, c) = (idx / dim, idx % dim);
            w.chosen[r].iter().zip(&w.chosen[c]).enumerate().fold(one, |acc, (t, (&i, &j))| {
                acc * if t < l { p[(i, j)] } else { pbar[(i, j)] }
            })
        })
        .collect();
    CMatrix::<T>::from_row_slice(dim, dim, &entries)
}

/// Cuts the orthonormal columns of `x` (weight-space coordinates) down to
/// the vectors fixed by every element. For `x = Bc` with `B` orthonormal
/// and `A` unitary, `Ax = x` holds exactly when `(B*AB − 1)c = 0`.
fn restrict_weight<T: RealField + Copy>(w: &WeightSpace<T>, mut x: CMatrix<T>, elements: &[CMatrix<T>], l: usize) -> CMatrix<T> {
    let dim = w.chosen.len();
    for a in elements {
        if x.ncols() == 0 {
            break;
        }
        let m = (compressed(w, a, l) - CMatrix::<T>::identity(dim, dim)) * &x;
        x = &x * null_space(m);
    }
    x
}

fn weight_count<T: RealField + Copy>(u: &CMatrix<T>, k: usize, l: usize) -> usize {
    weight_space(u, k, l).chosen.len()
}

/// Cuts the orthonormal columns of `x` down to those fixed by every element.
fn restrict<T: RealField + Copy>(mut x: CMatrix<T>, elements: &[CMatrix<T>], k: usize, l: usize) -> CMatrix<T> {
    for u in elements {
        if x.ncols() == 0 {
            break;
        }
        let n = u.nrows();
        let legs = legs_of(u, k, l);
        let cols: Vec<DVector<Complex<T>>> = (0..x.ncols())
            .into_par_iter()
            .map(|c| {
                let col: DVector<Complex<T>> = x.column(c).into_owned();
                apply_legs(&legs, &col, n) - col
            })
            .collect();
        let m = CMatrix::<T>::from_columns(&cols);
        let kernel = null_space(m);
        x = &x * kernel;
    }
    x
}

/// Words of length up to 3 in the given elements.
fn with_words<T: RealField + Copy>(base: &[CMatrix<T>]) -> Vec<CMatrix<T>> {
    let mut out = base.to_vec();
    for w in base.windows(2) {
        out.push(&w[0] * &w[1]);
    }
    for w in base.windows(3) {
        out.push(&w[0] * &w[1] * &w[2]);
    }
    out
}

/// Dimension of `{T : U^{⊗l} T = T U^{⊗k}}` over `samples` sampled
/// elements and their short words, checked against twice as many samples.
pub fn commutant_dimension<T: RealField + Copy>(
    family: Family,
    k: usize,
    l: usize,
    space: &SuperSpace,
    samples: usize,
    seed: u64,
) -> Result<usize> {
    let n = space.n();
    let size = n.checked_pow((k + l) as u32).unwrap_or(usize::MAX);
    if size > COMMUTANT_SIZE_LIMIT {
        return Err(Error::BoundExceeded { points: size, bound: COMMUTANT_SIZE_LIMIT });
    }
    if samples < MIN_SAMPLES {
        return Err(Error::InvalidInput(format!("at least {MIN_SAMPLES} samples are needed, got {samples}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let first = with_words(&draw::<T>(family, space, &mut rng, samples)?);
    let second = with_words(&draw::<T>(family, space, &mut rng, samples)?);
    if k + l == 0 {
        return Ok(1);
    }
    let (dim_first, dim_second) = if first.iter().chain(&second).all(|u| monomial_form(u).is_some()) {
        let all: Vec<CMatrix<T>> = first.iter().chain(&second).cloned().collect();
        (commutant_dimension_monomial(&first, k, l), commutant_dimension_monomial(&all, k, l))
    } else {
        // the pivot with the smallest weight space keeps the solve small; it
        // fixes its whole weight space, so it goes last
        let pivot = (0..samples).min_by_key(|&i| (weight_count(&first[i], k, l), i)).unwrap_or(0);
        let w = weight_space(&first[pivot], k, l);
        let mut ordered = first.clone();
        let p = ordered.remove(pivot);
        ordered.push(p);
        let start = CMatrix::<T>::identity(w.chosen.len(), w.chosen.len());
        let x = restrict_weight(&w, start, &ordered, l);
        let dim_first = x.ncols();
        (dim_first, restrict_weight(&w, x, &second, l).ncols())
    };
    if dim_first != dim_second {
        return Err(Error::StabilityFailure { first: dim_first, second: dim_second });
    }
    Ok(dim_second)
}

/// For a matrix with one nonzero entry per column, the row and value of
/// that entry in each column.
fn monomial_form<T: RealField + Copy>(u: &CMatrix<T>) -> Option<Vec<(usize, Complex<T>)>> {
    let n = u.nrows();
    let mut seen = vec![false; n];
    let mut out = Vec::with_capacity(n);
    for c in 0..n {
        let mut hits = (0..n).filter(|&r| !u[(r, c)].is_zero());
        let r = hits.next()?;
        if hits.next().is_some() || seen[r] {
            return None;
        }
        seen[r] = true;
        out.push((r, u[(r, c)]));
    }
    Some(out)
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Commutant dimension for monomial elements. Each `U^{⊗l} ⊗ Ū^{⊗k}` then
/// permutes product basis vectors up to phases, so the stacked system is
/// block diagonal over the orbits of multi-indices and each block is
/// solved on its own.
pub fn commutant_dimension_monomial<T: RealField + Copy>(elements: &[CMatrix<T>], k: usize, l: usize) -> usize {
    let Some(first) = elements.first() else { return 0 };
    let n = first.nrows();
    let m = k + l;
    let total = n.pow(m as u32);
    let forms: Vec<Vec<(usize, Complex<T>)>> =
        elements.iter().map(|u| monomial_form(u).expect("monomial element")).collect();
    // image index and phase of every basis vector under every element
    let images: Vec<Vec<(usize, Complex<T>)>> = forms
        .iter()
        .map(|form| {
            (0..total as u64)
                .map(|code| {
                    let idx = decode(code, n, m);
                    let mut phase = Complex::new(T::one(), T::zero());
                    let mut image = 0usize;
                    for (t, &j) in idx.iter().enumerate() {
                        let (r, v) = form[j];
                        phase *= if t < l { v } else { v.conj() };
                        image = image * n + r;
                    }
                    (image, phase)
                })
                .collect()
        })
        .collect();
    let mut parent: Vec<usize> = (0..total).collect();
    for image in &images {
        for (i, &(j, _)) in image.iter().enumerate() {
            let (a, b) = (find(&mut parent, i), find(&mut parent, j));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut orbits: Vec<Vec<usize>> = vec![Vec::new(); total];
    for i in 0..total {
        let root = find(&mut parent, i);
        orbits[root].push(i);
    }
    orbits
        .par_iter()
        .filter(|orbit| !orbit.is_empty())
        .map(|orbit| {
            let size = orbit.len();
            let local = |i: usize| orbit.binary_search(&i).expect("orbit is closed");
            let mut stacked = CMatrix::<T>::zeros(size * images.len(), size);
            for (e, image) in images.iter().enumerate() {
                for (c, &i) in orbit.iter().enumerate() {
                    let (j, phase) = image[i];
                    stacked[(e * size + local(j), c)] += phase;
                    stacked[(e * size + c, c)] -= Complex::new(T::one(), T::zero());
                }
            }
            null_space(stacked).ncols()
        })
        .sum()
}

/// A direct nullspace solve of the stacked system, kept as an oracle for
/// the weight-space reduction.
pub fn commutant_dimension_dense<T: RealField + Copy>(elements: &[CMatrix<T>], k: usize, l: usize) -> usize {
    let n = elements[0].nrows();
    let total = n.pow((k + l) as u32);
    restrict(CMatrix::<T>::identity(total, total), elements, k, l).ncols()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Equal,
    SpanDeficient,
    Mismatch,
}

impl Verdict {
    pub fn name(self) -> &'static str {
        match self {
            Verdict::Equal => "equal",
            Verdict::SpanDeficient => "span-deficient",
            Verdict::Mismatch => "mismatch",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Verdict {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "equal" => Ok(Verdict::Equal),
            "span-deficient" => Ok(Verdict::SpanDeficient),
            "mismatch" => Ok(Verdict::Mismatch),
            other => Err(Error::InvalidInput(format!("unknown verdict {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HomReport {
    pub family: Family,
    pub space: SuperSpace,
    pub class: PartitionClass,
    pub k: usize,
    pub l: usize,
    pub partitions: Vec<Partition>,
    pub span_rank: usize,
    pub commutant_dim: usize,
    pub containment_max_residual: f64,
    pub verdict: Verdict,
}

impl HomReport {
    pub const CSV_HEADER: &'static str = "family,class,k,l,p,q,eps,span_rank,commutant_dim,residual,verdict";

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{},{:.3e},{}",
            self.family,
            self.class,
            self.k,
            self.l,
            self.space.p(),
            self.space.q(),
            self.space.epsilon(),
            self.span_rank,
            self.commutant_dim,
            self.containment_max_residual,
            self.verdict
        )
    }
}

/// Runs containment, span rank and commutant dimension for one
/// `(family, class, k, l, space)`; only `Ō` with `P_2` and `H̄` with
/// `P_even` are compared.
pub fn hom_report(
    family: Family,
    class: PartitionClass,
    k: usize,
    l: usize,
    space: &SuperSpace,
    samples: usize,
    seed: u64,
) -> Result<HomReport> {
    hom_report_with_tol(family, class, k, l, space, samples, seed, CONTAINMENT_TOL)
}

/// As [`hom_report`], with containment judged at `tol`.
#[allow(clippy::too_many_arguments)]
pub fn hom_report_with_tol(
    family: Family,
    class: PartitionClass,
    k: usize,
    l: usize,
    space: &SuperSpace,
    samples: usize,
    seed: u64,
    tol: f64,
) -> Result<HomReport> {
    if !matches!((family, class), (Family::Obar, PartitionClass::P2) | (Family::Hbar, PartitionClass::PEven)) {
        return Err(Error::Unsupported(format!("hom report for {family} with {class}")));
    }
    let partitions = enumerate_partitions(k, l, class)?;
    let residual: f64 = containment_check::<f64>(class, k, l, family, space, samples, seed)?;
    let span_rank = span_rank_of(&partitions, space, k, l)?;
    let commutant_dim = commutant_dimension::<f64>(family, k, l, space, samples, seed.wrapping_add(1))?;
    let verdict = if residual > tol {
        Verdict::Mismatch
    } else if span_rank == commutant_dim {
        Verdict::Equal
    } else if span_rank < commutant_dim {
        Verdict::SpanDeficient
    } else {
        Verdict::Mismatch
    };
    Ok(HomReport {
        family,
        space: space.clone(),
        class,
        k,
        l,
        partitions,
        span_rank,
        commutant_dim,
        containment_max_residual: residual,
        verdict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::superspace::Sign;

    fn sp(p: usize, q: usize, eps: Sign) -> SuperSpace {
        SuperSpace::new(p, q, eps).unwrap()
    }

    #[test]
    fn gram_examples() {
        for s in SuperSpace::all_up_to(4) {
            let g = gram_matrix(&[Partition::identity()], &s, 1, 1).unwrap();
            assert_eq!(g[(0, 0)], s.n() as i64);
        }
        let g = gram_matrix(&[Partition::cup()], &sp(1, 0, Sign::Minus), 0, 2).unwrap();
        assert_eq!(g[(0, 0)], 2);
        for n in [2usize, 3] {
            let parts = enumerate_partitions(0, 4, PartitionClass::P2).unwrap();
            let g = gram_matrix(&parts, &SuperSpace::classical(n), 0, 4).unwrap();
            for i in 0..3 {
                for j in 0..3 {
                    let n = n as i64;
                    assert_eq!(g[(i, j)], if i == j { n * n } else { n });
                }
            }
        }
    }

    #[test]
    fn span_examples() {
        for s in SuperSpace::all_up_to(4) {
            assert_eq!(span_dimension(PartitionClass::P2, 0, 2, &s).unwrap(), 1);
        }
        assert_eq!(span_dimension(PartitionClass::P2, 0, 4, &sp(1, 0, Sign::Minus)).unwrap(), 2);
        assert_eq!(span_dimension(PartitionClass::P2, 0, 4, &sp(2, 0, Sign::Minus)).unwrap(), 3);
        assert!(matches!(span_dimension(PartitionClass::P2, 5, 5, &sp(1, 0, Sign::Minus)), Err(Error::BoundExceeded { .. })));
    }

    #[test]
    fn containment_examples() {
        let r: f64 = containment_check(PartitionClass::P2, 1, 1, Family::Obar, &sp(2, 1, Sign::Plus), 20, 1).unwrap();
        assert!(r <= 1e-10);
        let r: f64 = containment_check(PartitionClass::P2, 0, 2, Family::Obar, &sp(2, 0, Sign::Minus), 20, 2).unwrap();
        assert!(r <= 1e-10);
        let r: f64 = containment_check(PartitionClass::PEven, 1, 3, Family::Hbar, &sp(2, 0, Sign::Minus), 20, 3).unwrap();
        assert!(r <= 1e-10);
        assert!(matches!(
            containment_check::<f64>(PartitionClass::PEven, 1, 3, Family::Obar, &sp(2, 0, Sign::Minus), 4, 3),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn block_map_does_not_commute_with_generic_obar() {
        let s = sp(2, 0, Sign::Minus);
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let u = draw::<f64>(Family::Obar, &s, &mut rng, 1).unwrap().remove(0);
        let t = build_t(&Partition::one_block(1, 3).unwrap(), &s);
        assert!(commutation_residual(&u, &t) > 1e-3);
    }

    #[test]
    fn commutant_examples() {
        assert_eq!(commutant_dimension::<f64>(Family::Obar, 0, 2, &sp(1, 0, Sign::Minus), 8, 1).unwrap(), 1);
        assert_eq!(commutant_dimension::<f64>(Family::Obar, 0, 4, &sp(1, 0, Sign::Minus), 8, 2).unwrap(), 2);
        assert_eq!(commutant_dimension::<f64>(Family::Hbar, 0, 2, &sp(2, 0, Sign::Minus), 8, 3).unwrap(), 1);
        assert!(matches!(
            commutant_dimension::<f64>(Family::Obar, 3, 4, &SuperSpace::classical(4), 8, 1),
            Err(Error::BoundExceeded { .. })
        ));
    }

    #[test]
    fn weight_reduction_matches_dense_solve() {
        for (family, s, k, l) in [
            (Family::Obar, SuperSpace::classical(3), 2, 2),
            (Family::Hbar, sp(1, 1, Sign::Plus), 1, 3),
            (Family::Obar, sp(1, 0, Sign::Minus), 2, 2),
        ] {
            let mut rng = ChaCha8Rng::seed_from_u64(4);
            let us = with_words(&draw::<f64>(family, &s, &mut rng, 8).unwrap());
            let dense = commutant_dimension_dense(&us, k, l);
            assert_eq!(commutant_dimension::<f64>(family, k, l, &s, 8, 4).unwrap(), dense, "{family} {s}");
        }
    }

    #[test]
    fn orbit_blocks_match_dense_solve() {
        for (family, s, k, l) in [
            (Family::Hbar, sp(1, 1, Sign::Plus), 2, 2),
            (Family::Hbar, sp(1, 0, Sign::Minus), 1, 3),
            (Family::Sbar, sp(1, 1, Sign::Plus), 0, 4),
            (Family::Hbar, SuperSpace::classical(3), 2, 2),
        ] {
            let mut rng = ChaCha8Rng::seed_from_u64(5);
            let us = with_words(&draw::<f64>(family, &s, &mut rng, 8).unwrap());
            assert!(monomial_form(&us[0]).is_some());
            assert_eq!(commutant_dimension_monomial(&us, k, l), commutant_dimension_dense(&us, k, l), "{family} {s}");
        }
    }

    #[test]
    fn report_examples() {
        let r = hom_report(Family::Obar, PartitionClass::P2, 0, 4, &sp(1, 0, Sign::Minus), 16, 7).unwrap();
        assert_eq!((r.span_rank, r.commutant_dim, r.verdict), (2, 2, Verdict::Equal));
        let r = hom_report(Family::Obar, PartitionClass::P2, 2, 2, &SuperSpace::classical(3), 16, 7).unwrap();
        assert_eq!((r.span_rank, r.commutant_dim, r.verdict), (3, 3, Verdict::Equal));
        // the four maps of P_even(1,3) cannot fill the six-dimensional
        // commutant of T^2 ≀ H_2; a direct numpy solve gives 6 as well
        let r = hom_report(Family::Hbar, PartitionClass::PEven, 1, 3, &sp(2, 0, Sign::Plus), 16, 7).unwrap();
        assert_eq!((r.span_rank, r.commutant_dim, r.verdict), (4, 6, Verdict::SpanDeficient));
        assert!(r.csv_row().starts_with("hbar,p_even,1,3,2,0,+1,4,6,"));
    }
}
