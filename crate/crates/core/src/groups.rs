//! The classical super-groups `Ō_n`, `S̄_n`, `H̄_n`, `B̄_n`: membership
//! residuals, seeded samplers, exact Lie-algebra dimensions, the `Γ`
//! conjugator for `ε = +1`, and exhaustive enumeration of `S̄_n`.
//!
//! All floating-point code is generic over `T: RealField`; the usual
//! instantiation is `f64` (see the aliases at the crate root).

use std::fmt;
use std::str::FromStr;

use nalgebra::{convert, Complex, ComplexField, DMatrix, DVector, RealField};
use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{rank_fraction_free, Matrix};
use crate::superspace::{Sign, SuperSpace};

pub type CMatrix<T> = DMatrix<Complex<T>>;

/// Membership tolerance for sampled elements.
pub const MEMBERSHIP_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Obar,
    Sbar,
    Hbar,
    Bbar,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::Obar, Family::Sbar, Family::Hbar, Family::Bbar];

    pub fn name(self) -> &'static str {
        match self {
            Family::Obar => "obar",
            Family::Sbar => "sbar",
            Family::Hbar => "hbar",
            Family::Bbar => "bbar",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "obar" | "o" => Ok(Family::Obar),
            "sbar" | "s" => Ok(Family::Sbar),
            "hbar" | "h" => Ok(Family::Hbar),
            "bbar" | "b" => Ok(Family::Bbar),
            other => Err(Error::InvalidInput(format!("unknown group family {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GroupElement<T: RealField> {
    pub matrix: CMatrix<T>,
    pub family: Family,
    pub space: SuperSpace,
}

/// Per-constraint maximal deviations of a candidate matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ResidualReport<T> {
    pub unitarity: T,
    pub super_relation: T,
    /// Entry or sum constraint of the family; zero for `Ō`.
    pub family_constraint: T,
    pub tolerance: T,
    pub member: bool,
}

impl<T: RealField + Copy + fmt::LowerExp> fmt::Display for ResidualReport<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "unitarity={:e}", self.unitarity)?;
        writeln!(f, "super_relation={:e}", self.super_relation)?;
        writeln!(f, "family_constraint={:e}", self.family_constraint)?;
        writeln!(f, "tolerance={:e}", self.tolerance)?;
        write!(f, "member={}", self.member)
    }
}

fn c<T: RealField>(re: f64, im: f64) -> Complex<T> {
    Complex::new(convert(re), convert(im))
}

fn to_complex<T: RealField>(m: &Matrix<i64>) -> CMatrix<T> {
    CMatrix::from_fn(m.rows(), m.cols(), |r, col| c(m[(r, col)] as f64, 0.0))
}

pub fn super_identity_c<T: RealField>(space: &SuperSpace) -> CMatrix<T> {
    to_complex(&space.super_identity::<i64>())
}

fn max_abs<T: RealField + Copy>(m: &CMatrix<T>) -> T {
    m.iter().fold(T::zero(), |acc, z| acc.max(z.modulus()))
}

fn conj_matrix<T: RealField + Copy>(m: &CMatrix<T>) -> CMatrix<T> {
    m.map(|z| z.conj())
}

/// `J Ū J^{-1}`; `J` is a real signed permutation, so `J^{-1} = Jᵗ`.
pub fn super_conjugate<T: RealField + Copy>(u: &CMatrix<T>, space: &SuperSpace) -> CMatrix<T> {
    let j = super_identity_c::<T>(space);
    &j * conj_matrix(u) * j.transpose()
}

pub fn membership_residual<T: RealField + Copy>(
    u: &CMatrix<T>,
    family: Family,
    space: &SuperSpace,
    tol: T,
) -> Result<ResidualReport<T>> {
    let n = space.n();
    if u.nrows() != n || u.ncols() != n {
        return Err(Error::DimensionMismatch { expected: n, found: u.nrows().max(u.ncols()) });
    }
    let id = CMatrix::<T>::identity(n, n);
    let unitarity = max_abs(&(u.adjoint() * u - &id));
    let super_relation = max_abs(&(u - super_conjugate(u, space)));
    let one = T::one();
    let family_constraint = match family {
        Family::Obar => T::zero(),
        Family::Sbar => u.iter().fold(T::zero(), |acc, z| acc.max(z.modulus().min((*z - Complex::new(one, T::zero())).modulus()))),
        Family::Hbar => u.iter().fold(T::zero(), |acc, z| {
            let r = z.modulus();
            acc.max(r.min((r - one).abs()))
        }),
        Family::Bbar => {
            let mut worst = T::zero();
            for i in 0..n {
                let row: Complex<T> = u.row(i).iter().copied().sum();
                let col: Complex<T> = u.column(i).iter().copied().sum();
                worst = worst.max((row - Complex::new(one, T::zero())).modulus());
                worst = worst.max((col - Complex::new(one, T::zero())).modulus());
            }
            worst
        }
    };
    let member = unitarity <= tol && super_relation <= tol && family_constraint <= tol;
    Ok(ResidualReport { unitarity, super_relation, family_constraint, tolerance: tol, member })
}

/// `max |conj(U_ij) − ε(i)ε(j) U_{ī j̄}|`.
pub fn conjugate_entry_residual<T: RealField + Copy>(u: &CMatrix<T>, space: &SuperSpace) -> T {
    let n = space.n();
    let mut worst = T::zero();
    for i in 0..n {
        for j in 0..n {
            let s: T = convert((space.sign_of(i) * space.sign_of(j)) as f64);
            let rhs = u[(space.bar(i), space.bar(j))].scale(s);
            worst = worst.max((u[(i, j)].conj() - rhs).modulus());
        }
    }
    worst
}

fn gaussian_complex<T: RealField>(rng: &mut impl Rng, rows: usize, cols: usize) -> CMatrix<T> {
    CMatrix::from_fn(rows, cols, |_, _| {
        let re: f64 = rng.sample(StandardNormal);
        let im: f64 = rng.sample(StandardNormal);
        c(re, im)
    })
}

fn unit_phase<T: RealField>(rng: &mut impl Rng) -> Complex<T> {
    let theta = rng.random::<f64>() * std::f64::consts::TAU;
    c(theta.cos(), theta.sin())
}

/// Exponential of a random element of the Lie algebra
/// `{X = −X*, X = J X̄ J^{-1}}`.
fn sample_connected_obar<T: RealField + Copy>(space: &SuperSpace, rng: &mut impl Rng) -> CMatrix<T> {
    let n = space.n();
    let g = gaussian_complex::<T>(rng, n, n);
    let half: T = convert(0.5);
    let y = (&g - g.adjoint()).scale(half);
    let x = (&y + super_conjugate(&y, space)).scale(half);
    x.exp()
}

/// A determinant `−1` element of `Ō_n` at `ε = +1`.
fn obar_reflection<T: RealField + Copy>(space: &SuperSpace) -> CMatrix<T> {
    let n = space.n();
    let mut r = CMatrix::<T>::identity(n, n);
    if space.q() > 0 {
        r[(n - 1, n - 1)] = c(-1.0, 0.0);
    } else if space.p() > 0 {
        r[(0, 0)] = c(0.0, 0.0);
        r[(1, 1)] = c(0.0, 0.0);
        r[(0, 1)] = c(1.0, 0.0);
        r[(1, 0)] = c(1.0, 0.0);
    }
    r
}

fn sample_obar<T: RealField + Copy>(space: &SuperSpace, rng: &mut impl Rng) -> CMatrix<T> {
    let u = sample_connected_obar::<T>(space, rng);
    // Ō_n ≅ O_n has two components at ε = +1; Sp_n is connected
    if space.epsilon() == Sign::Plus && space.n() > 0 && rng.random::<bool>() {
        u * obar_reflection::<T>(space)
    } else {
        u
    }
}

/// Places the 2×2 blocks `blocks[m]` at pair rows `perm[m]`, pair columns `m`,
/// and the `q × q` corner `corner` on the fixed points.
fn assemble_blocks<T: RealField + Copy>(
    space: &SuperSpace,
    perm: &[usize],
    blocks: &[[[Complex<T>; 2]; 2]],
    corner: &CMatrix<T>,
) -> CMatrix<T> {
    let n = space.n();
    let two_p = 2 * space.p();
    let mut u = CMatrix::<T>::zeros(n, n);
    for (m, block) in blocks.iter().enumerate() {
        let (r0, c0) = (2 * perm[m], 2 * m);
        for a in 0..2 {
            for b in 0..2 {
                u[(r0 + a, c0 + b)] = block[a][b];
            }
        }
    }
    for a in 0..space.q() {
        for b in 0..space.q() {
            u[(two_p + a, two_p + b)] = corner[(a, b)];
        }
    }
    u
}

fn random_signed_permutation<T: RealField + Copy>(q: usize, rng: &mut impl Rng, signed: bool) -> CMatrix<T> {
    let mut perm: Vec<usize> = (0..q).collect();
    perm.shuffle(rng);
    let mut m = CMatrix::<T>::zeros(q, q);
    for (col, &row) in perm.iter().enumerate() {
        let s = if signed && rng.random::<bool>() { -1.0 } else { 1.0 };
        m[(row, col)] = c(s, 0.0);
    }
    m
}

fn sample_hbar<T: RealField + Copy>(space: &SuperSpace, rng: &mut impl Rng) -> CMatrix<T> {
    let p = space.p();
    let mut perm: Vec<usize> = (0..p).collect();
    perm.shuffle(rng);
    let zero = c::<T>(0.0, 0.0);
    let blocks: Vec<[[Complex<T>; 2]; 2]> = (0..p)
        .map(|_| {
            let z = unit_phase::<T>(rng);
            let diagonal = rng.random::<bool>();
            match (space.epsilon(), diagonal) {
                (_, true) => [[z, zero], [zero, z.conj()]],
                (Sign::Plus, false) => [[zero, z], [z.conj(), zero]],
                (Sign::Minus, false) => [[zero, z], [-z.conj(), zero]],
            }
        })
        .collect();
    let corner = random_signed_permutation::<T>(space.q(), rng, true);
    assemble_blocks(space, &perm, &blocks, &corner)
}

fn sample_sbar<T: RealField + Copy>(space: &SuperSpace, rng: &mut impl Rng) -> CMatrix<T> {
    let p = space.p();
    let mut perm: Vec<usize> = (0..p).collect();
    perm.shuffle(rng);
    let (zero, one) = (c::<T>(0.0, 0.0), c::<T>(1.0, 0.0));
    let blocks: Vec<[[Complex<T>; 2]; 2]> = (0..p)
        .map(|_| {
            if space.epsilon() == Sign::Plus && rng.random::<bool>() {
                [[zero, one], [one, zero]]
            } else {
                [[one, zero], [zero, one]]
            }
        })
        .collect();
    let corner = random_signed_permutation::<T>(space.q(), rng, false);
    assemble_blocks(space, &perm, &blocks, &corner)
}

/// Haar-distributed real orthogonal matrix (QR of a Gaussian matrix with
/// the signs of `R`'s diagonal absorbed).
fn random_orthogonal<T: RealField + Copy>(m: usize, rng: &mut impl Rng) -> DMatrix<T> {
    if m == 0 {
        return DMatrix::zeros(0, 0);
    }
    let g = DMatrix::<T>::from_fn(m, m, |_, _| convert(rng.sample::<f64, _>(StandardNormal)));
    let qr = g.qr();
    let (mut q, r) = (qr.q(), qr.r());
    for j in 0..m {
        if r[(j, j)] < T::zero() {
            q.column_mut(j).neg_mut();
        }
    }
    q
}

fn sample_bbar<T: RealField + Copy>(space: &SuperSpace, rng: &mut impl Rng) -> Result<CMatrix<T>> {
    let n = space.n();
    match space.epsilon() {
        Sign::Plus => {
            // V = C U C* is real orthogonal and must fix η = Cξ, which is real
            let gamma = gamma_conjugator::<T>(space)?;
            let xi = CMatrix::<T>::from_element(n, 1, c(1.0, 0.0));
            let eta_c = &gamma.c * xi;
            let eta = DVector::<T>::from_fn(n, |i, _| eta_c[(i, 0)].re);
            let eta_hat = eta.normalize();
            // Householder reflection exchanging e_1 and η̂
            let mut v = -eta_hat.clone();
            v[0] += T::one();
            let h = if v.norm() <= convert(1e-14) {
                DMatrix::<T>::identity(n, n)
            } else {
                let two: T = convert(2.0);
                DMatrix::<T>::identity(n, n) - (&v * v.transpose()).scale(two / v.norm_squared())
            };
            let w = random_orthogonal::<T>(n - 1, rng);
            let mut inner = DMatrix::<T>::identity(n, n);
            inner.view_mut((1, 1), (n - 1, n - 1)).copy_from(&w);
            let real = &h * inner * &h;
            let vmat = real.map(|x| Complex::new(x, T::zero()));
            Ok(gamma.c.adjoint() * vmat * &gamma.c)
        }
        Sign::Minus => {
            let p = space.p();
            if p < 2 {
                // ξ and Jξ span ℂ², so B̄_2 = Sp_0 is trivial
                return Ok(CMatrix::<T>::identity(n, n));
            }
            let j = super_identity_c::<T>(space);
            let sigma = |v: &CMatrix<T>| &j * conj_matrix(v);
            let root_n: T = convert((n as f64).sqrt());
            let xi = CMatrix::<T>::from_element(n, 1, c(1.0, 0.0)).unscale(root_n);
            // basis with Q J = J Q̄: columns come in pairs (b, −σ(b))
            let mut cols: Vec<CMatrix<T>> = vec![xi.clone(), -sigma(&xi)];
            while cols.len() < n {
                let mut v = gaussian_complex::<T>(rng, n, 1);
                for b in &cols {
                    let proj = (b.adjoint() * &v)[(0, 0)];
                    v -= b * proj;
                }
                let norm = v.norm();
                if norm < convert(1e-6) {
                    continue;
                }
                let v = v.unscale(norm);
                let partner = -sigma(&v);
                cols.push(v);
                cols.push(partner);
            }
            let q = CMatrix::<T>::from_fn(n, n, |r, col| cols[col][(r, 0)]);
            let inner_space = SuperSpace::new(p - 1, 0, Sign::Minus)?;
            let w = sample_connected_obar::<T>(&inner_space, rng);
            let mut inner = CMatrix::<T>::identity(n, n);
            inner.view_mut((2, 2), (n - 2, n - 2)).copy_from(&w);
            Ok(&q * inner * q.adjoint())
        }
    }
}

/// Draws one element of `family` with a seeded generator.
///
/// `Ō` elements are exponentials of random Lie-algebra elements (times a
/// reflection half of the time at `ε = +1`); `S̄`, `H̄` use the block
/// structure of these groups; `B̄` embeds a smaller orthogonal or symplectic
/// element in a basis adapted to the all-ones vector. None of these are Haar.
pub fn sample_element<T: RealField + Copy>(family: Family, space: &SuperSpace, seed: u64) -> Result<GroupElement<T>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    sample_with::<T>(family, space, &mut rng)
}

pub fn sample_with<T: RealField + Copy>(
    family: Family,
    space: &SuperSpace,
    rng: &mut impl Rng,
) -> Result<GroupElement<T>> {
    let matrix = match family {
        Family::Obar => sample_obar::<T>(space, rng),
        Family::Sbar => sample_sbar::<T>(space, rng),
        Family::Hbar => sample_hbar::<T>(space, rng),
        Family::Bbar => sample_bbar::<T>(space, rng)?,
    };
    Ok(GroupElement { matrix, family, space: space.clone() })
}

/// Real dimension of the Lie algebra `{X = −X*, X = J X̄ J^{-1}}`, with
/// `Xξ = X(Jξ) = 0` added for `B̄`, as the exact nullity of the real linear
/// constraint system on `X = A + iB`.
pub fn lie_algebra_dimension(family: Family, space: &SuperSpace) -> Result<usize> {
    if !matches!(family, Family::Obar | Family::Bbar) {
        return Err(Error::Unsupported(format!("{family} is not a connected Lie family")));
    }
    let n = space.n();
    let vars = 2 * n * n;
    let a = |i: usize, j: usize| i * n + j;
    let b = |i: usize, j: usize| n * n + i * n + j;
    let mut rows: Vec<Vec<(usize, i64)>> = Vec::new();
    for i in 0..n {
        for j in i..n {
            // A antisymmetric, B symmetric
            rows.push(vec![(a(i, j), 1), (a(j, i), 1)]);
            if i != j {
                rows.push(vec![(b(i, j), 1), (b(j, i), -1)]);
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            let s = (space.sign_of(space.bar(i)) * space.sign_of(space.bar(j))) as i64;
            let (bi, bj) = (space.bar(i), space.bar(j));
            rows.push(vec![(a(i, j), 1), (a(bi, bj), -s)]);
            rows.push(vec![(b(i, j), 1), (b(bi, bj), s)]);
        }
    }
    if family == Family::Bbar {
        let xi = vec![1i64; n];
        let j_xi = space.j_xi();
        for v in [xi, j_xi] {
            for i in 0..n {
                rows.push((0..n).map(|j| (a(i, j), v[j])).collect());
                rows.push((0..n).map(|j| (b(i, j), v[j])).collect());
            }
        }
    }
    let mut m = Matrix::<BigInt>::zeros(rows.len(), vars);
    for (r, row) in rows.iter().enumerate() {
        for &(col, v) in row {
            m[(r, col)] += BigInt::from(v);
        }
    }
    Ok(vars - rank_fraction_free(&m))
}

/// `Γ = (1/√2)((ρ, ρ⁷), (ρ³, ρ⁵))` with `ρ = e^{2πi/8}`, and
/// `C = diag(Γ, …, Γ, 1_q)`.
#[derive(Debug, Clone, PartialEq)]
pub struct GammaConjugator<T: RealField> {
    pub gamma: CMatrix<T>,
    pub c: CMatrix<T>,
}

pub fn gamma_conjugator<T: RealField + Copy>(space: &SuperSpace) -> Result<GammaConjugator<T>> {
    if space.epsilon() != Sign::Plus {
        return Err(Error::WrongSign);
    }
    let rho = |k: u32| {
        let theta = std::f64::consts::TAU * k as f64 / 8.0;
        c::<T>(theta.cos() / 2f64.sqrt(), theta.sin() / 2f64.sqrt())
    };
    let gamma = CMatrix::<T>::from_row_slice(2, 2, &[rho(1), rho(7), rho(3), rho(5)]);
    let n = space.n();
    let mut cm = CMatrix::<T>::identity(n, n);
    for m in 0..space.p() {
        cm.view_mut((2 * m, 2 * m), (2, 2)).copy_from(&gamma);
    }
    Ok(GammaConjugator { gamma, c: cm })
}

/// All permutation matrices `U` with `U = J U J^{-1}`, by exhaustive search
/// over the `n!` permutations.
pub fn enumerate_super_symmetric(space: &SuperSpace) -> Result<Vec<Matrix<i64>>> {
    let n = space.n();
    if n > 8 {
        return Err(Error::BoundExceeded { points: n, bound: 8 });
    }
    let j = space.super_identity::<i64>();
    let jt = j.transpose();
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..n).collect();
    for_each_permutation(&mut perm, 0, &mut |perm| {
        let u = Matrix::from_fn(n, n, |r, col| (perm[col] == r) as i64);
        if &(&j * &u) * &jt == u {
            out.push(u);
        }
    });
    Ok(out)
}

fn for_each_permutation(perm: &mut Vec<usize>, start: usize, f: &mut impl FnMut(&[usize])) {
    if start == perm.len() {
        f(perm);
        return;
    }
    for i in start..perm.len() {
        perm.swap(start, i);
        for_each_permutation(perm, start + 1, f);
        perm.swap(start, i);
    }
}

/// Checks the block shape of an `H̄` element: every pair-row of 2×2 blocks
/// holds exactly one nonzero block of an admissible shape, pairs and fixed
/// points do not mix, and the fixed-point corner is a signed permutation.
pub fn check_hbar_blocks<T: RealField + Copy>(u: &CMatrix<T>, space: &SuperSpace, tol: T) -> std::result::Result<(), String> {
    let (p, q) = (space.p(), space.q());
    let two_p = 2 * p;
    let small = |z: Complex<T>| z.modulus() <= tol;
    let close = |a: Complex<T>, b: Complex<T>| (a - b).modulus() <= tol;
    let unimodular = |z: Complex<T>| (z.modulus() - T::one()).abs() <= tol;
    for r in 0..p {
        let mut nonzero = 0;
        for col in 0..p {
            let (a, b) = (u[(2 * r, 2 * col)], u[(2 * r, 2 * col + 1)]);
            let (cc, d) = (u[(2 * r + 1, 2 * col)], u[(2 * r + 1, 2 * col + 1)]);
            if [a, b, cc, d].into_iter().all(small) {
                continue;
            }
            nonzero += 1;
            let ok = match space.epsilon() {
                Sign::Plus => {
                    (unimodular(a) && small(b) && small(cc) && close(d, a.conj()))
                        || (small(a) && unimodular(b) && close(cc, b.conj()) && small(d))
                }
                Sign::Minus => {
                    (unimodular(a) && small(b) && small(cc) && close(d, a.conj()))
                        || (small(a) && unimodular(b) && close(cc, -b.conj()) && small(d))
                }
            };
            if !ok {
                return Err(format!("block ({r},{col}) has an inadmissible shape"));
            }
        }
        if nonzero != 1 {
            return Err(format!("block row {r} has {nonzero} nonzero blocks"));
        }
        for f in 0..q {
            if !small(u[(2 * r, two_p + f)]) || !small(u[(2 * r + 1, two_p + f)]) {
                return Err(format!("pair row {r} reaches fixed point {f}"));
            }
            if !small(u[(two_p + f, 2 * r)]) || !small(u[(two_p + f, 2 * r + 1)]) {
                return Err(format!("fixed point {f} reaches pair column {r}"));
            }
        }
    }
    for f in 0..q {
        let row: Vec<Complex<T>> = (0..q).map(|g| u[(two_p + f, two_p + g)]).collect();
        let big: Vec<&Complex<T>> = row.iter().filter(|z| !small(**z)).collect();
        let real_sign = |z: &Complex<T>| close(*z, Complex::new(T::one(), T::zero())) || close(*z, Complex::new(-T::one(), T::zero()));
        if big.len() != 1 || !real_sign(big[0]) {
            return Err(format!("fixed-point row {f} is not a signed permutation row"));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(p: usize, q: usize, eps: Sign) -> SuperSpace {
        SuperSpace::new(p, q, eps).unwrap()
    }

    #[test]
    fn identity_is_in_obar() {
        for s in SuperSpace::all_up_to(5) {
            let id = CMatrix::<f64>::identity(s.n(), s.n());
            assert!(membership_residual(&id, Family::Obar, &s, 1e-10).unwrap().member);
        }
    }

    #[test]
    fn scalar_i_is_not_symplectic() {
        let s = sp(1, 0, Sign::Minus);
        let u = CMatrix::<f64>::identity(2, 2) * Complex::new(0.0, 1.0);
        let r = membership_residual(&u, Family::Obar, &s, 1e-10).unwrap();
        assert!(!r.member);
        assert!((r.super_relation - 2.0).abs() < 1e-12);
        assert!(r.unitarity < 1e-12);
    }

    #[test]
    fn antidiagonal_phase_block_is_in_hbar() {
        let s = sp(1, 0, Sign::Minus);
        let z = Complex::new(0.3f64.cos(), 0.3f64.sin());
        let u = CMatrix::from_row_slice(2, 2, &[Complex::new(0.0, 0.0), z, -z.conj(), Complex::new(0.0, 0.0)]);
        assert!(membership_residual(&u, Family::Hbar, &s, 1e-10).unwrap().member);
        // the diagonal block needs the conjugate phase in its second slot
        let bad = CMatrix::from_row_slice(2, 2, &[z, Complex::new(0.0, 0.0), Complex::new(0.0, 0.0), z]);
        assert!(!membership_residual(&bad, Family::Hbar, &s, 1e-10).unwrap().member);
        let good = CMatrix::from_row_slice(2, 2, &[z, Complex::new(0.0, 0.0), Complex::new(0.0, 0.0), z.conj()]);
        assert!(membership_residual(&good, Family::Hbar, &s, 1e-10).unwrap().member);
    }

    #[test]
    fn dimension_mismatch_is_reported() {
        let s = sp(1, 0, Sign::Minus);
        let u = CMatrix::<f64>::identity(3, 3);
        assert!(matches!(membership_residual(&u, Family::Obar, &s, 1e-10), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn classical_obar_samples_are_real_orthogonal() {
        let s = SuperSpace::classical(3);
        for seed in 0..10 {
            let u = sample_element::<f64>(Family::Obar, &s, seed).unwrap().matrix;
            assert!(u.iter().all(|z| z.im.abs() < 1e-12));
            assert!(membership_residual(&u, Family::Obar, &s, 1e-10).unwrap().member);
        }
    }

    #[test]
    fn sp2_samples_have_quaternion_shape() {
        let s = sp(1, 0, Sign::Minus);
        for seed in 0..10 {
            let u = sample_element::<f64>(Family::Obar, &s, seed).unwrap().matrix;
            let (a, b) = (u[(0, 0)], u[(0, 1)]);
            assert!((u[(1, 0)] + b.conj()).norm() < 1e-12);
            assert!((u[(1, 1)] - a.conj()).norm() < 1e-12);
            assert!((a.norm_sqr() + b.norm_sqr() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn samplers_produce_members() {
        for s in SuperSpace::all_up_to(6) {
            for family in Family::ALL {
                for seed in 0..5 {
                    match sample_element::<f64>(family, &s, seed) {
                        Ok(g) => {
                            let r = membership_residual(&g.matrix, family, &s, MEMBERSHIP_TOL).unwrap();
                            assert!(r.member, "{family} {s} seed {seed}: {r:?}");
                            assert!(conjugate_entry_residual(&g.matrix, &s) < 1e-10);
                        }
                        Err(e) => panic!("{family} {s}: {e}"),
                    }
                }
            }
        }
    }

    #[test]
    fn hbar_samples_have_block_form() {
        for s in [sp(2, 0, Sign::Minus), sp(2, 1, Sign::Plus), sp(1, 2, Sign::Plus), sp(3, 0, Sign::Minus)] {
            for seed in 0..20 {
                let u = sample_element::<f64>(Family::Hbar, &s, seed).unwrap().matrix;
                check_hbar_blocks(&u, &s, 1e-10).unwrap();
            }
        }
        // a generic orthogonal element is rejected
        let s = sp(2, 0, Sign::Minus);
        let u = sample_element::<f64>(Family::Obar, &s, 3).unwrap().matrix;
        assert!(check_hbar_blocks(&u, &s, 1e-10).is_err());
    }

    #[test]
    fn bbar_fixes_xi_and_j_xi() {
        for s in [sp(1, 0, Sign::Minus), sp(2, 0, Sign::Minus), sp(3, 0, Sign::Minus), sp(1, 1, Sign::Plus), sp(2, 0, Sign::Plus)] {
            let xi = CMatrix::<f64>::from_element(s.n(), 1, Complex::new(1.0, 0.0));
            let jxi = CMatrix::<f64>::from_fn(s.n(), 1, |i, _| Complex::new(s.j_xi()[i] as f64, 0.0));
            for seed in 0..10 {
                let u = sample_element::<f64>(Family::Bbar, &s, seed).unwrap().matrix;
                assert!(max_abs(&(&u * &xi - &xi)) < 1e-10);
                assert!(max_abs(&(&u * &jxi - &jxi)) < 1e-10);
            }
        }
    }

    #[test]
    fn lie_dimensions() {
        assert_eq!(lie_algebra_dimension(Family::Obar, &SuperSpace::classical(4)).unwrap(), 6);
        assert_eq!(lie_algebra_dimension(Family::Obar, &sp(2, 0, Sign::Minus)).unwrap(), 10);
        assert_eq!(lie_algebra_dimension(Family::Bbar, &sp(2, 0, Sign::Minus)).unwrap(), 3);
        assert_eq!(lie_algebra_dimension(Family::Bbar, &sp(1, 0, Sign::Minus)).unwrap(), 0);
        assert!(matches!(lie_algebra_dimension(Family::Hbar, &sp(1, 0, Sign::Minus)), Err(Error::Unsupported(_))));
    }

    #[test]
    fn bbar_plus_is_the_stabiliser_of_one_real_vector() {
        // Jξ = ξ at eps = +1, so only one vector is fixed: dim O_{n-1}
        for (p, q) in [(0, 4), (2, 0), (1, 2), (2, 1), (1, 1)] {
            let s = sp(p, q, Sign::Plus);
            let n = s.n();
            assert_eq!(lie_algebra_dimension(Family::Bbar, &s).unwrap(), (n - 1) * (n - 2) / 2, "{s}");
        }
    }

    #[test]
    fn gamma_properties() {
        let s = sp(2, 1, Sign::Plus);
        let g = gamma_conjugator::<f64>(&s).unwrap();
        let id2 = CMatrix::<f64>::identity(2, 2);
        assert!(max_abs(&(&g.gamma * g.gamma.adjoint() - &id2)) < 1e-12);
        let k = CMatrix::<f64>::from_row_slice(2, 2, &[Complex::new(0.0, 0.0), Complex::new(1.0, 0.0), Complex::new(1.0, 0.0), Complex::new(0.0, 0.0)]);
        assert!(max_abs(&(&g.gamma * k * g.gamma.transpose() - &id2)) < 1e-12);
        let j = super_identity_c::<f64>(&s);
        assert!(max_abs(&(&g.c * j * g.c.transpose() - CMatrix::identity(5, 5))) < 1e-12);
        for seed in 0..50 {
            let u = sample_element::<f64>(Family::Obar, &s, seed).unwrap().matrix;
            let v = &g.c * u * g.c.adjoint();
            assert!(v.iter().all(|z| z.im.abs() < 1e-10));
        }
        assert!(matches!(gamma_conjugator::<f64>(&sp(1, 0, Sign::Minus)), Err(Error::WrongSign)));
    }

    #[test]
    fn sbar_enumeration_counts() {
        assert_eq!(enumerate_super_symmetric(&sp(2, 0, Sign::Plus)).unwrap().len(), 8);
        assert_eq!(enumerate_super_symmetric(&sp(2, 0, Sign::Minus)).unwrap().len(), 2);
        assert_eq!(enumerate_super_symmetric(&sp(0, 3, Sign::Plus)).unwrap().len(), 6);
        assert!(matches!(enumerate_super_symmetric(&SuperSpace::classical(9)), Err(Error::BoundExceeded { .. })));
    }

    #[test]
    fn samplers_are_seed_deterministic() {
        let s = sp(2, 1, Sign::Plus);
        for family in Family::ALL {
            let a = sample_element::<f64>(family, &s, 11).unwrap();
            let b = sample_element::<f64>(family, &s, 11).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn f32_instantiation_compiles_and_is_close() {
        let s = sp(1, 1, Sign::Plus);
        let g = sample_element::<f32>(Family::Hbar, &s, 5).unwrap();
        assert!(membership_residual(&g.matrix, Family::Hbar, &s, 1e-5f32).unwrap().member);
    }
}
