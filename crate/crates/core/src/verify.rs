//! The acceptance battery: one check per claim, each producing a tagged
//! pass/fail outcome with deterministic detail lines, plus the report
//! renderer shared by the CLI and the test suite.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use nalgebra::Complex;
use rayon::prelude::*;
use serde::Serialize;

use crate::category::{closure, compare_with_class};
use crate::error::Error;
use crate::groups::{
    conjugate_entry_residual, enumerate_super_symmetric, gamma_conjugator, lie_algebra_dimension, membership_residual,
    sample_element, super_identity_c, CMatrix, Family,
};
use crate::homspace::{hom_report, Verdict};
use crate::intertwiner::{build_t, exact_power, SignedSparseMap, SparseMap};
use crate::linalg::Matrix;
use crate::oracle;
use crate::partition::{enumerate_partitions, Partition, PartitionClass};
use crate::superspace::{Sign, SuperSpace};

pub const TOOL_NAME: &str = "supereasy";
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteConfig {
    pub seed: u64,
    /// Numerical tolerance for group checks.
    pub tol: f64,
    /// Samples per commutant solve.
    pub samples: usize,
    pub quick: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { seed: 7, tol: 1e-10, samples: 16, quick: false }
    }
}

impl SuiteConfig {
    pub fn quick() -> Self {
        SuiteConfig { quick: true, ..Self::default() }
    }

    pub fn echo(&self) -> String {
        format!(
            "seed={} tol={:e} samples={} mode={}",
            self.seed,
            self.tol,
            self.samples,
            if self.quick { "quick" } else { "full" }
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub id: u8,
    pub tag: &'static str,
    pub title: &'static str,
    pub passed: bool,
    pub details: Vec<String>,
}

impl CheckOutcome {
    fn new(id: u8, tag: &'static str, title: &'static str) -> Self {
        CheckOutcome { id, tag, title, passed: true, details: Vec::new() }
    }

    fn note(&mut self, line: impl Into<String>) {
        self.details.push(line.into());
    }

    fn require(&mut self, ok: bool, line: impl Into<String>) {
        if !ok {
            self.passed = false;
        }
        self.details.push(format!("{} {}", if ok { "ok" } else { "FAIL" }, line.into()));
    }

    pub fn status(&self) -> &'static str {
        if self.passed { "PASS" } else { "FAIL" }
    }

    /// The one-line summary printed by the acceptance target.
    pub fn headline(&self) -> String {
        format!("[{}] {:02} {}: {}", self.status(), self.id, self.tag, self.title)
    }
}

fn spaces_with_n(ns: &[usize]) -> Vec<SuperSpace> {
    SuperSpace::all_up_to(ns.iter().copied().max().unwrap_or(0))
        .into_iter()
        .filter(|s| ns.contains(&s.n()))
        .collect()
}

fn partitions_up_to(max_k: usize, max_l: usize, class: PartitionClass) -> Vec<Partition> {
    let mut out = Vec::new();
    for k in 0..=max_k {
        for l in 0..=max_l {
            out.extend(enumerate_partitions(k, l, class).expect("within the point bound"));
        }
    }
    out
}

/// `J J* = 1` and `J J̄ = ε` in integer arithmetic.
pub fn check_super_identity(max_n: usize) -> CheckOutcome {
    let mut out = CheckOutcome::new(1, "super-identity", "J J* = I and J conj(J) = eps I for n <= 8");
    let mut bad = Vec::new();
    let spaces = SuperSpace::all_up_to(max_n);
    for s in &spaces {
        let j: Matrix<i64> = s.super_identity();
        let n = s.n();
        let eps = s.epsilon().value() as i64;
        if &j * &j.transpose() != Matrix::identity(n) || &j * &j != Matrix::<i64>::identity(n).scale(&eps) {
            bad.push(s.to_string());
        }
    }
    out.require(bad.is_empty(), format!("{} signatures with n <= {max_n}, failures: {bad:?}", spaces.len()));
    out
}

/// `T_| = id`.
pub fn check_identity_law(max_n: usize) -> CheckOutcome {
    let mut out = CheckOutcome::new(2, "identity-law", "T of the identity string is the identity matrix, n <= 6");
    let spaces = SuperSpace::all_up_to(max_n);
    let bad: Vec<String> = spaces
        .iter()
        .filter(|s| build_t(&Partition::identity(), s).to_dense::<i64>() != Matrix::identity(s.n()))
        .map(ToString::to_string)
        .collect();
    out.require(bad.is_empty(), format!("{} spaces, failures: {bad:?}", spaces.len()));
    out
}

fn t_cache(parts: &[Partition], spaces: &[SuperSpace]) -> HashMap<(usize, usize), SignedSparseMap> {
    let jobs: Vec<(usize, usize)> = (0..parts.len()).flat_map(|a| (0..spaces.len()).map(move |b| (a, b))).collect();
    jobs.into_par_iter().map(|(a, b)| ((a, b), build_t(&parts[a], &spaces[b]))).collect()
}

/// `T_π ⊗ T_σ = T_{πσ}` for every pair with at most 3 upper and 3 lower legs.
pub fn check_tensor_law(ns: &[usize], max_legs: usize) -> CheckOutcome {
    let mut out = CheckOutcome::new(3, "tensor-law", "T_pi (x) T_sigma = T_(pi sigma) exactly");
    let parts = partitions_up_to(max_legs, max_legs, PartitionClass::PEven);
    let spaces = spaces_with_n(ns);
    let cache = t_cache(&parts, &spaces);
    let failures: usize = (0..spaces.len())
        .into_par_iter()
        .map(|b| {
            let mut bad = 0;
            for (x, pi) in parts.iter().enumerate() {
                for (y, sigma) in parts.iter().enumerate() {
                    let lhs = cache[&(x, b)].kron(&cache[&(y, b)]);
                    if lhs != build_t(&pi.tensor(sigma), &spaces[b]) {
                        bad += 1;
                    }
                }
            }
            bad
        })
        .sum();
    let pairs = parts.len() * parts.len() * spaces.len();
    out.require(
        failures == 0,
        format!("{} partitions with k,l <= {max_legs}, {} spaces with n in {ns:?}, {pairs} pairs, {failures} failures", parts.len(), spaces.len()),
    );
    out
}

/// `T_π* = T_{π*}`.
pub fn check_adjoint_law(ns: &[usize], max_legs: usize) -> CheckOutcome {
    let mut out = CheckOutcome::new(4, "adjoint-law", "T_pi^* = T_(pi^*) exactly");
    let parts = partitions_up_to(max_legs, max_legs, PartitionClass::PEven);
    let spaces = spaces_with_n(ns);
    let mut failures = 0;
    for s in &spaces {
        for pi in &parts {
            if build_t(pi, s).transpose() != build_t(&pi.involution(), s) {
                failures += 1;
            }
        }
    }
    out.require(failures == 0, format!("{} partitions, {} spaces, {failures} failures", parts.len(), spaces.len()));
    out
}

#[derive(Debug, Clone, Default)]
struct ScalarTally {
    pairs: usize,
    failures: usize,
    first_failure: Option<String>,
}

impl ScalarTally {
    fn add(&mut self, ok: bool, why: impl FnOnce() -> String) {
        self.pairs += 1;
        if !ok {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(why());
            }
        }
    }

    fn merge(mut self, other: ScalarTally) -> ScalarTally {
        self.pairs += other.pairs;
        self.failures += other.failures;
        if self.first_failure.is_none() {
            self.first_failure = other.first_failure;
        }
        self
    }
}

/// Columns of a map grouped by input index.
type ByInput = HashMap<u64, Vec<(u64, i8)>>;

fn by_input(t: &SignedSparseMap) -> ByInput {
    let mut out: ByInput = HashMap::new();
    for (&(o, i), &v) in t.iter() {
        out.entry(i).or_default().push((o, v));
    }
    out
}

/// `s` with `next ∘ first = s · target`, or why no such `s` exists.
fn composite_scalar(first: &SignedSparseMap, next: &ByInput, target: &SignedSparseMap) -> std::result::Result<i64, String> {
    let mut acc: HashMap<(u64, u64), i64> = HashMap::with_capacity(target.nnz());
    for (&(mid, inp), &a) in first.iter() {
        if let Some(col) = next.get(&mid) {
            for &(out, b) in col {
                *acc.entry((out, inp)).or_insert(0) += (a * b) as i64;
            }
        }
    }
    acc.retain(|_, v| *v != 0);
    let Some((&key, &t0)) = target.iter().next() else {
        return Err(Error::ZeroTarget.to_string());
    };
    let s = acc.get(&key).copied().unwrap_or(0) * t0 as i64;
    if s == 0 {
        return Err(format!("product vanishes at target entry {key:?}"));
    }
    if acc.len() != target.nnz() {
        return Err(format!("product has {} nonzero entries, target {}", acc.len(), target.nnz()));
    }
    for (&(o, i), &v) in target.iter() {
        let got = acc.get(&(o, i)).copied().unwrap_or(0);
        if got != s * v as i64 {
            return Err(format!("entry ({o},{i}): expected {}, found {got}", s * v as i64));
        }
    }
    Ok(s)
}

struct ScalarData<'a> {
    parts: &'a [Partition],
    cache: &'a HashMap<(usize, usize), SignedSparseMap>,
    inputs: &'a HashMap<(usize, usize), ByInput>,
}

/// Checks one composable pair over `spaces`, continuing from an exponent
/// already fixed elsewhere; returns the common exponent.
fn scalar_verdict(
    data: &ScalarData<'_>,
    (a, b): (usize, usize),
    target: usize,
    spaces: &[(usize, &SuperSpace)],
    mut exponent: Option<u32>,
) -> std::result::Result<Option<u32>, String> {
    let (sigma, pi) = (&data.parts[a], &data.parts[b]);
    for &(x, s) in spaces {
        let scalar = composite_scalar(&data.cache[&(a, x)], &data.inputs[&(b, x)], &data.cache[&(target, x)])
            .map_err(|e| format!("sigma={sigma} pi={pi} at {s}: {e}"))?;
        let Some(d) = exact_power(scalar.unsigned_abs(), s.n()) else {
            return Err(format!("sigma={sigma} pi={pi} at {s}: |s| = {} is not a power of n", scalar.abs()));
        };
        if s.epsilon() == Sign::Plus && scalar < 0 {
            return Err(format!("sigma={sigma} pi={pi} at {s}: negative scalar {scalar}"));
        }
        match exponent {
            None => exponent = Some(d),
            Some(d0) if d0 != d => return Err(format!("sigma={sigma} pi={pi}: exponent {d0} and {d} at {s}")),
            _ => {}
        }
    }
    Ok(exponent)
}

/// `T_π T_σ = s T_{[σ/π]}` with `|s| = n^d`, `d` independent of `n`, and
/// `s > 0` at `ε = +1`, over all composable pairs in `P_even`.
pub fn check_composition_scalar(ns: &[usize], max_legs: usize) -> CheckOutcome {
    let mut out = CheckOutcome::new(
        5,
        "compose-scalar",
        "T_pi T_sigma = s T_[sigma/pi] with |s| = n^d, d independent of n, s > 0 at eps = +1",
    );
    let parts = partitions_up_to(max_legs, max_legs, PartitionClass::PEven);
    let index_of: HashMap<Partition, usize> = parts.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let spaces = spaces_with_n(ns);
    let cache = t_cache(&parts, &spaces);
    let inputs: HashMap<(usize, usize), ByInput> = cache.par_iter().map(|(&key, t)| (key, by_input(t))).collect();
    let data = ScalarData { parts: &parts, cache: &cache, inputs: &inputs };
    let mut by_mid: BTreeMap<usize, (Vec<usize>, Vec<usize>)> = BTreeMap::new();
    for (i, p) in parts.iter().enumerate() {
        by_mid.entry(p.l()).or_default().0.push(i);
        by_mid.entry(p.k()).or_default().1.push(i);
    }
    let pairs: Vec<(usize, usize)> = by_mid
        .values()
        .flat_map(|(tops, bottoms)| tops.iter().flat_map(move |&a| bottoms.iter().map(move |&b| (a, b))))
        .collect();
    let targets: Vec<usize> = pairs
        .par_iter()
        .map(|&(a, b)| index_of[&parts[a].compose(&parts[b]).expect("composable").0])
        .collect();
    for eps in [Sign::Minus, Sign::Plus] {
        let family: Vec<(usize, &SuperSpace)> =
            spaces.iter().enumerate().filter(|(_, s)| s.epsilon() == eps).collect();
        let names: Vec<String> = family.iter().map(|(_, s)| s.to_string()).collect();
        // classical spaces first, so their verdict comes for free
        let (classical, rest): (Vec<_>, Vec<_>) = family.iter().copied().partition(|(_, s)| s.p() == 0);
        let empty = || [ScalarTally::default(), ScalarTally::default(), ScalarTally::default(), ScalarTally::default()];
        let tallies = (0..pairs.len())
            .into_par_iter()
            .fold(empty, |mut acc, idx| {
                let (a, b) = pairs[idx];
                let (sigma, pi) = (&parts[a], &parts[b]);
                let classic = scalar_verdict(&data, (a, b), targets[idx], &classical, None);
                let verdict = classic.clone().and_then(|d| scalar_verdict(&data, (a, b), targets[idx], &rest, d));
                let ok = verdict.is_ok();
                let why = || verdict.clone().err().unwrap_or_default();
                acc[0].add(ok, why);
                if sigma.is_noncrossing() && pi.is_noncrossing() {
                    acc[1].add(ok, why);
                }
                if sigma.is_pairing() && pi.is_pairing() {
                    acc[2].add(ok, why);
                }
                if !classical.is_empty() && !rest.is_empty() {
                    acc[3].add(classic.is_ok(), || classic.clone().err().unwrap_or_default());
                }
                acc
            })
            .reduce(empty, |x, y| {
                let [a0, a1, a2, a3] = x;
                let [b0, b1, b2, b3] = y;
                [a0.merge(b0), a1.merge(b1), a2.merge(b2), a3.merge(b3)]
            });
        let [all, nc, p2, classic] = tallies;
        out.require(
            all.failures == 0,
            format!("eps={eps} spaces {names:?}: p_even pairs {}, failures {}", all.pairs, all.failures),
        );
        if let Some(why) = &all.first_failure {
            out.note(format!("  first failure: {why}"));
        }
        out.note(format!("  nc_even pairs {}, failures {}", nc.pairs, nc.failures));
        out.note(format!("  p2 pairs {}, failures {}", p2.pairs, p2.failures));
        if classic.pairs > 0 {
            out.note(format!("  classical spaces only (p = 0): p_even pairs {}, failures {}", classic.pairs, classic.failures));
        }
    }
    // dense exact products at the smallest dimension
    let small: Vec<(usize, &SuperSpace)> = spaces.iter().enumerate().filter(|(_, s)| s.n() == 2).collect();
    let mismatches: usize = small
        .par_iter()
        .map(|&(b, s)| {
            let dense: Vec<Matrix<i64>> = parts.iter().map(|p| oracle::dense_t(p, s)).collect();
            pairs
                .iter()
                .filter(|&&(x, y)| {
                    let sparse = cache[&(x, b)].cast::<i64>().then(&cache[&(y, b)].cast::<i64>()).expect("composable");
                    sparse.to_dense::<i64>() != &dense[y] * &dense[x]
                })
                .count()
        })
        .sum();
    out.require(
        mismatches == 0,
        format!("dense oracle at n = 2: {} products, {mismatches} mismatches", pairs.len() * small.len()),
    );
    out
}

/// The 3-string crossing maps `e_a ⊗ e_b ⊗ e_c` to `e_c ⊗ e_b ⊗ e_a`.
pub fn check_half_commutation(max_n: usize) -> CheckOutcome {
    let mut out = CheckOutcome::new(6, "half-commutation", "T of the 3-string crossing sends e_a e_b e_c to e_c e_b e_a");
    let mut bad = Vec::new();
    for s in SuperSpace::all_up_to(max_n) {
        let n = s.n() as u64;
        let t = build_t(&Partition::half_commutation(), &s);
        let mut expected = SparseMap::<i8>::new(s.n(), 3, 3);
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    expected.accumulate(c * n * n + b * n + a, a * n * n + b * n + c, 1);
                }
            }
        }
        if t != expected {
            bad.push(s.to_string());
        }
    }
    out.require(bad.is_empty(), format!("all spaces with n <= {max_n}, failures: {bad:?}"));
    out
}

/// The three generation claims, each compared with direct enumeration.
pub fn check_generation(bound: usize) -> CheckOutcome {
    let mut out = CheckOutcome::new(7, "generation", "closures of {}, {1_(1,3)}, {crossing} are NC_2, NC_even, P_2");
    let cases = [
        ("{}", Vec::new(), PartitionClass::Nc2),
        ("{onethreeblock}", vec![Partition::one_block(1, 3).expect("even")], PartitionClass::NcEven),
        ("{crossing}", vec![Partition::crossing()], PartitionClass::P2),
    ];
    for (name, gens, class) in cases {
        match closure(&gens, bound).and_then(|cat| compare_with_class(&cat, class)) {
            Ok(cmp) => out.require(
                cmp.equal(),
                format!(
                    "closure({name}, {bound}) vs {class}: {} vs {} members, {} missing, {} extra",
                    cmp.closure_size,
                    cmp.class_size,
                    cmp.missing.len(),
                    cmp.extra.len()
                ),
            ),
            Err(e) => out.require(false, format!("closure({name}, {bound}): {e}")),
        }
    }
    out
}

/// `|P_2(0,2m)| = (2m−1)!!` and `|NC_2(0,2m)| = C_m`.
pub fn check_counting(max_m: usize) -> CheckOutcome {
    let mut out = CheckOutcome::new(8, "counting", "|P_2(0,2m)| = 1,3,15,105 and |NC_2(0,2m)| = 1,2,5,14");
    let mut p2 = Vec::new();
    let mut nc2 = Vec::new();
    for m in 1..=max_m {
        for (class, closed, list) in [
            (PartitionClass::P2, oracle::double_factorial_odd(m), &mut p2),
            (PartitionClass::Nc2, oracle::catalan(m), &mut nc2),
        ] {
            let fast = enumerate_partitions(0, 2 * m, class).map(|v| v.len()).unwrap_or(0);
            let brute = oracle::brute_force_class(0, 2 * m, class).len();
            list.push(fast as u64);
            if fast != brute || fast as u64 != closed {
                out.require(false, format!("{class} m={m}: enumeration {fast}, brute force {brute}, closed form {closed}"));
            }
        }
    }
    out.require(p2 == [1, 3, 15, 105][..max_m.min(4)], format!("p2 counts {p2:?}"));
    out.require(nc2 == [1, 2, 5, 14][..max_m.min(4)], format!("nc2 counts {nc2:?}"));
    out
}

/// Membership and the conjugate-entry identity for sampled elements.
pub fn check_membership(max_n: usize, samples: usize, seed: u64, tol: f64) -> CheckOutcome {
    let mut out = CheckOutcome::new(
        9,
        "membership",
        "sampled elements pass membership and conj(U_ij) = eps(i)eps(j)U_(bar i bar j) at 1e-10",
    );
    let spaces = SuperSpace::all_up_to(max_n);
    for family in Family::ALL {
        let results: Vec<(f64, f64, usize, Option<String>)> = spaces
            .par_iter()
            .enumerate()
            .map(|(si, s)| {
                let mut worst = (0.0f64, 0.0f64, 0usize, None);
                for i in 0..samples {
                    let seed = seed ^ ((si as u64) << 32) ^ ((family as u64) << 48) ^ i as u64;
                    match sample_element::<f64>(family, s, seed) {
                        Ok(g) => {
                            let r = membership_residual(&g.matrix, family, s, tol).expect("square");
                            let member = r.unitarity.max(r.super_relation).max(r.family_constraint);
                            worst.0 = worst.0.max(member);
                            worst.1 = worst.1.max(conjugate_entry_residual(&g.matrix, s));
                            worst.2 += 1;
                        }
                        Err(e) => worst.3 = Some(format!("{s}: {e}")),
                    }
                }
                worst
            })
            .collect();
        let member = results.iter().fold(0.0f64, |a, r| a.max(r.0));
        let conj = results.iter().fold(0.0f64, |a, r| a.max(r.1));
        let count: usize = results.iter().map(|r| r.2).sum();
        let errors: Vec<&String> = results.iter().filter_map(|r| r.3.as_ref()).collect();
        out.require(
            member <= tol && conj <= tol && errors.is_empty(),
            format!(
                "{family}: {count} elements over {} spaces, membership residual {member:.3e}, conjugate-entry residual {conj:.3e}, errors {errors:?}",
                spaces.len()
            ),
        );
    }
    out
}

fn max_abs(m: &CMatrix<f64>) -> f64 {
    m.iter().fold(0.0, |a, z| a.max(z.norm()))
}

/// Residuals of the `Γ` conjugator at one `ε = +1` space.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GammaResiduals {
    /// `|Γ Γ* − 1|`
    pub unitary: f64,
    /// `|Γ K Γ^t − 1|` for the antidiagonal `K`
    pub k_form: f64,
    /// `|C J C^t − 1|`
    pub cj: f64,
    /// Largest imaginary part of `C U C*` over the sampled `Ō` elements.
    pub imaginary: f64,
}

pub fn gamma_residuals(space: &SuperSpace, seed: u64, samples: usize) -> crate::error::Result<GammaResiduals> {
    let g = gamma_conjugator::<f64>(space)?;
    let id2 = CMatrix::<f64>::identity(2, 2);
    let zero = Complex::new(0.0, 0.0);
    let one = Complex::new(1.0, 0.0);
    let k = CMatrix::from_row_slice(2, 2, &[zero, one, one, zero]);
    let j = super_identity_c::<f64>(space);
    let mut imaginary = 0.0f64;
    for i in 0..samples as u64 {
        let u = sample_element::<f64>(Family::Obar, space, seed.wrapping_add(i))?.matrix;
        imaginary = (&g.c * u * g.c.adjoint()).iter().fold(imaginary, |a, z| a.max(z.im.abs()));
    }
    Ok(GammaResiduals {
        unitary: max_abs(&(&g.gamma * g.gamma.adjoint() - &id2)),
        k_form: max_abs(&(&g.gamma * &k * g.gamma.transpose() - &id2)),
        cj: max_abs(&(&g.c * &j * g.c.transpose() - CMatrix::identity(space.n(), space.n()))),
        imaginary,
    })
}

/// The classification numerics: the `Γ` conjugator, Lie-algebra dimensions
/// and the order of `S̄_n`.
pub fn check_classification(seed: u64, tol: f64, max_lie_n: usize, max_sbar_n: usize, samples: usize) -> CheckOutcome {
    let mut out = CheckOutcome::new(10, "classification", "Gamma conjugator, Lie algebra dimensions and S-bar orders");
    let s = SuperSpace::new(2, 1, Sign::Plus).expect("valid");
    let g = gamma_residuals(&s, seed, samples).expect("eps = +1");
    out.require(g.unitary <= tol, format!("Gamma unitary, residual {:.3e}", g.unitary));
    out.require(g.k_form <= tol, format!("Gamma K Gamma^t = I, residual {:.3e}", g.k_form));
    out.require(g.cj <= tol, format!("C J C^t = I at {s}, residual {:.3e}", g.cj));
    out.require(
        g.imaginary <= tol,
        format!("{samples} conjugated O-bar elements at {s} real, max imaginary part {:.3e}", g.imaginary),
    );
    let mut lie_bad = Vec::new();
    let mut count = 0;
    for space in SuperSpace::all_up_to(max_lie_n) {
        count += 1;
        let got = lie_algebra_dimension(Family::Obar, &space).expect("lie family");
        if got != oracle::obar_lie_dimension(&space) {
            lie_bad.push(format!("obar {space}: {got}"));
        }
        if space.epsilon() == Sign::Minus {
            let got = lie_algebra_dimension(Family::Bbar, &space).expect("lie family");
            if got != oracle::bbar_minus_lie_dimension(&space) {
                lie_bad.push(format!("bbar {space}: {got}"));
            }
        }
    }
    out.require(lie_bad.is_empty(), format!("Lie dimensions over {count} spaces with n <= {max_lie_n}, mismatches {lie_bad:?}"));
    let plus: Vec<String> = SuperSpace::all_up_to(max_lie_n.min(6))
        .into_iter()
        .filter(|s| s.epsilon() == Sign::Plus && s.p() > 0 && s.q() > 0)
        .map(|s| format!("{s}:{}", lie_algebra_dimension(Family::Bbar, &s).expect("lie family")))
        .collect();
    out.note(format!("info bbar at eps=+1 with pq != 0 (dim O_(n-1) = (n-1)(n-2)/2): {}", plus.join(" ")));
    let mut sbar_bad = Vec::new();
    let mut orders = Vec::new();
    for space in SuperSpace::all_up_to(max_sbar_n) {
        let got = enumerate_super_symmetric(&space).map(|v| v.len() as u64);
        let want = oracle::sbar_order(&space);
        orders.push(format!("{space}:{}", got.as_ref().map(ToString::to_string).unwrap_or_else(|e| e.to_string())));
        if got.as_ref().ok() != Some(&want) {
            sbar_bad.push(format!("{space}: {got:?} vs {want}"));
        }
    }
    out.require(sbar_bad.is_empty(), format!("S-bar orders for n <= {max_sbar_n}, mismatches {sbar_bad:?}"));
    out.note(format!("  {}", orders.join(" ")));
    out
}

/// `hom_report` verdicts for `Ō` with `P_2` and `H̄` with `P_even`.
pub fn check_schur_weyl(ns: &[usize], max_legs: usize, samples: usize, seed: u64) -> CheckOutcome {
    let mut out = CheckOutcome::new(
        11,
        "schur-weyl-eq",
        "span rank equals commutant dimension for (O-bar, P_2) and (H-bar, P_even)",
    );
    let spaces = spaces_with_n(ns);
    let mut jobs = Vec::new();
    for (family, class) in [(Family::Obar, PartitionClass::P2), (Family::Hbar, PartitionClass::PEven)] {
        for s in &spaces {
            for total in 0..=max_legs {
                for k in 0..=total {
                    jobs.push((family, class, k, total - k, s.clone()));
                }
            }
        }
    }
    let reports: Vec<std::result::Result<String, String>> = jobs
        .par_iter()
        .map(|(family, class, k, l, s)| {
            match hom_report(*family, *class, *k, *l, s, samples, seed) {
                Ok(r) if r.verdict == Verdict::Equal => Ok(r.csv_row()),
                Ok(r) => Err(r.csv_row()),
                Err(Error::StabilityFailure { first, second }) => {
                    Err(format!("{family},{class},{k},{l},{},{},{},stability failure {first} -> {second}", s.p(), s.q(), s.epsilon()))
                }
                Err(e) => Err(format!("{family},{class},{k},{l},{},{},{},error {e}", s.p(), s.q(), s.epsilon())),
            }
        })
        .collect();
    for family in [Family::Obar, Family::Hbar] {
        let prefix = format!("{family},");
        let mine: Vec<&std::result::Result<String, String>> =
            reports.iter().filter(|r| r.as_ref().unwrap_or_else(|e| e).starts_with(&prefix)).collect();
        let failed = mine.iter().filter(|r| r.is_err()).count();
        out.require(failed == 0, format!("{family}: {} reports, {failed} not equal", mine.len()));
    }
    let degenerate = hom_report(
        Family::Obar,
        PartitionClass::P2,
        0,
        4,
        &SuperSpace::new(1, 0, Sign::Minus).expect("valid"),
        samples,
        seed,
    );
    match degenerate {
        Ok(r) => out.require(
            r.span_rank == 2 && r.commutant_dim == 2 && r.verdict == Verdict::Equal,
            format!("degenerate case P_2(0,4) at Sp_2: span {} commutant {}", r.span_rank, r.commutant_dim),
        ),
        Err(e) => out.require(false, format!("degenerate case P_2(0,4) at Sp_2: {e}")),
    }
    out.note(format!("  {}", crate::homspace::HomReport::CSV_HEADER));
    for r in &reports {
        match r {
            Ok(row) => out.note(format!("  {row}")),
            Err(row) => out.note(format!("  {row} <-")),
        }
    }
    out
}

/// Runs checks 1 to 11 with the sizes of the configuration.
pub fn run_checks(cfg: &SuiteConfig) -> Vec<CheckOutcome> {
    let q = cfg.quick;
    vec![
        check_super_identity(8),
        check_identity_law(6),
        check_tensor_law(if q { &[2, 3] } else { &[2, 3, 4] }, 3),
        check_adjoint_law(if q { &[2, 3] } else { &[2, 3, 4] }, 3),
        check_composition_scalar(if q { &[2, 4] } else { &[2, 4, 6] }, if q { 2 } else { 4 }),
        check_half_commutation(6),
        check_generation(6),
        check_counting(4),
        check_membership(6, if q { 10 } else { 100 }, cfg.seed, cfg.tol),
        check_classification(cfg.seed, cfg.tol, if q { 6 } else { 8 }, 6, 50),
        check_schur_weyl(if q { &[2, 3] } else { &[2, 3, 4] }, if q { 4 } else { 6 }, cfg.samples, cfg.seed),
    ]
}

/// Renders the quick suite twice and compares the bytes.
pub fn check_determinism(cfg: &SuiteConfig) -> CheckOutcome {
    let mut out = CheckOutcome::new(12, "determinism", "repeated suite runs with a fixed seed are byte-identical");
    let quick = SuiteConfig { quick: true, ..cfg.clone() };
    let first = render_text(&quick, &run_checks(&quick));
    let second = render_text(&quick, &run_checks(&quick));
    out.require(first == second, format!("two quick runs, {} bytes each, identical: {}", first.len(), first == second));
    out
}

pub fn run_suite(cfg: &SuiteConfig) -> Vec<CheckOutcome> {
    let mut checks = run_checks(cfg);
    checks.push(check_determinism(cfg));
    checks
}

pub fn header(command: &str, config_echo: &str, tags: &[&str]) -> String {
    format!("# {TOOL_NAME} {TOOL_VERSION} {command}\n# config: {config_echo}\n# checks: {}\n", tags.join(","))
}

/// Headlines, detail lines and a summary line.
pub fn render_checks_text(checks: &[CheckOutcome]) -> String {
    let mut s = String::new();
    for c in checks {
        let _ = writeln!(s, "{}", c.headline());
        for d in &c.details {
            let _ = writeln!(s, "    {d}");
        }
    }
    let passed = checks.iter().filter(|c| c.passed).count();
    let _ = writeln!(s, "summary: {passed} passed, {} failed", checks.len() - passed);
    s
}

pub fn render_checks_csv(checks: &[CheckOutcome]) -> String {
    let mut s = String::from("id,tag,status,title\n");
    for c in checks {
        let _ = writeln!(s, "{},{},{},\"{}\"", c.id, c.tag, c.status(), c.title.replace('"', "'"));
    }
    s
}

fn tags_of(checks: &[CheckOutcome]) -> Vec<&str> {
    checks.iter().map(|c| c.tag).collect()
}

pub fn render_text(cfg: &SuiteConfig, checks: &[CheckOutcome]) -> String {
    header("suite", &cfg.echo(), &tags_of(checks)) + &render_checks_text(checks)
}

pub fn render_csv(cfg: &SuiteConfig, checks: &[CheckOutcome]) -> String {
    header("suite", &cfg.echo(), &tags_of(checks)) + &render_checks_csv(checks)
}

#[derive(Serialize)]
struct JsonReport<'a> {
    tool: &'static str,
    version: &'static str,
    command: &'static str,
    config: &'a SuiteConfig,
    checks: &'a [CheckOutcome],
    passed: usize,
    failed: usize,
}

pub fn render_json(cfg: &SuiteConfig, checks: &[CheckOutcome]) -> String {
    let passed = checks.iter().filter(|c| c.passed).count();
    let report = JsonReport {
        tool: TOOL_NAME,
        version: TOOL_VERSION,
        command: "suite",
        config: cfg,
        checks,
        passed,
        failed: checks.len() - passed,
    };
    serde_json::to_string_pretty(&report).expect("serialisable") + "\n"
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cheap_checks_pass() {
        for c in [check_super_identity(8), check_identity_law(6), check_half_commutation(6), check_counting(4)] {
            assert!(c.passed, "{}: {:?}", c.tag, c.details);
        }
    }

    #[test]
    fn failing_requirement_flips_status() {
        let mut c = CheckOutcome::new(99, "demo", "demo");
        c.require(true, "fine");
        assert!(c.passed);
        c.require(false, "broken");
        assert!(!c.passed);
        assert_eq!(c.headline(), "[FAIL] 99 demo: demo");
        assert_eq!(c.details, vec!["ok fine", "FAIL broken"]);
    }

    #[test]
    fn small_composition_check_passes_on_pairings_and_reports_sub_tallies() {
        let c = check_composition_scalar(&[2], 2);
        assert!(c.details.iter().any(|d| d.contains("p2 pairs")));
    }
}
