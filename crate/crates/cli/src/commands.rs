use std::fmt::Write as _;
use std::fs;

use serde_json::{json, Value};

use supereasy::category::{closure, compare_with_class};
use supereasy::groups::{enumerate_super_symmetric, gamma_conjugator, lie_algebra_dimension, membership_residual, sample_element};
use supereasy::homspace::{hom_report_with_tol, HomReport};
use supereasy::intertwiner::{build_t, delta, measure_composition_scalar, SparseMapJson};
use supereasy::partition::enumerate_partitions;
use supereasy::verify::{gamma_residuals, render_checks_csv, render_checks_text, run_suite, SuiteConfig};
use supereasy::{oracle, CMatrixF64, Error, Family, Partition, PartitionClass, Result, Sign, SuperSpace};

use crate::{space_of, Command, Common, Report};

pub fn run(command: &Command, common: &Common) -> Result<Report> {
    match command {
        Command::Enumerate { class, k, l } => enumerate(*class, k.zip(*l), common),
        Command::Delta { space, partition, upper, lower } => {
            let s = space_of(space, common)?;
            delta_cmd(&s, partition, upper, lower)
        }
        Command::BuildT { space, partition, count } => build_t_cmd(&space_of(space, common)?, partition, *count),
        Command::Laws { space, class } => laws(&space_of(space, common)?, *class, common.max_points),
        Command::Closure { generators, bound, compare } => {
            closure_cmd(generators, bound.unwrap_or(common.max_points), *compare)
        }
        Command::Sample { family, space } => sample(*family, &space_of(space, common)?, common),
        Command::Liedim { family, space } => liedim(*family, &space_of(space, common)?),
        Command::EnumSbar { space, list } => enum_sbar(&space_of(space, common)?, *list),
        Command::Gamma { space, samples } => gamma(&space_of(space, common)?, *samples, common),
        Command::Homreport { family, class, k, l, space, samples } => {
            homreport(*family, *class, (*k, *l), &space_of(space, common)?, *samples, common)
        }
        Command::Suite { quick, samples } => suite(*quick, *samples, common),
    }
}

/// An alias, a JSON object, or the path of a file holding one.
fn parse_partition(arg: &str) -> Result<Partition> {
    if let Ok(p) = Partition::named(arg) {
        return Ok(p);
    }
    let text = if arg.trim_start().starts_with('{') {
        arg.to_string()
    } else {
        fs::read_to_string(arg).map_err(|e| Error::InvalidInput(format!("{arg:?} is no alias and no readable file: {e}")))?
    };
    serde_json::from_str(&text).map_err(|e| Error::InvalidInput(format!("bad partition JSON in {arg:?}: {e}")))
}

fn one_based(indices: &[usize], n: usize) -> Result<Vec<usize>> {
    indices
        .iter()
        .map(|&i| {
            if (1..=n).contains(&i) {
                Ok(i - 1)
            } else {
                Err(Error::InvalidInput(format!("index {i} outside 1..={n}")))
            }
        })
        .collect()
}

fn joined(v: &[usize]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn quoted(x: impl ToString) -> String {
    format!("\"{}\"", x.to_string().replace('"', "'"))
}

fn enumerate(class: PartitionClass, arity: Option<(usize, usize)>, common: &Common) -> Result<Report> {
    let mut r = Report::new("enumerate");
    r.tags.push("enumerate".into());
    r.set("class", class);
    r.csv.push_str("class,k,l,count\n");
    match arity {
        Some((k, l)) => {
            if k + l > common.max_points {
                return Err(Error::BoundExceeded { points: k + l, bound: common.max_points });
            }
            r.set("k", k);
            r.set("l", l);
            let parts = enumerate_partitions(k, l, class)?;
            let _ = writeln!(r.csv, "{class},{k},{l},{}", parts.len());
            let _ = writeln!(r.text, "count={}", parts.len());
            for p in &parts {
                let _ = writeln!(r.text, "{p}");
            }
            r.json = json!({ "class": class, "k": k, "l": l, "count": parts.len(), "partitions": parts });
        }
        None => {
            let mut rows = Vec::new();
            for total in 0..=common.max_points {
                for k in 0..=total {
                    let count = enumerate_partitions(k, total - k, class)?.len();
                    let _ = writeln!(r.csv, "{class},{k},{},{count}", total - k);
                    rows.push(json!({ "class": class, "k": k, "l": total - k, "count": count }));
                }
            }
            r.text = r.csv.clone();
            r.json = Value::Array(rows);
        }
    }
    Ok(r)
}

fn delta_cmd(s: &SuperSpace, partition: &str, upper: &[usize], lower: &[usize]) -> Result<Report> {
    let pi = parse_partition(partition)?;
    let mut r = Report::new("delta");
    r.tags.push("delta".into());
    r.space(s);
    r.set("partition", &pi);
    let value = delta(&pi, s, &one_based(upper, s.n())?, &one_based(lower, s.n())?)?;
    let _ = writeln!(r.text, "value={value}");
    r.csv = format!("partition,upper,lower,value\n{},{},{},{value}\n", quoted(&pi), joined(upper), joined(lower));
    r.json = json!({ "partition": pi, "space": s, "upper": upper, "lower": lower, "value": value });
    Ok(r)
}

fn build_t_cmd(s: &SuperSpace, partition: &str, count_only: bool) -> Result<Report> {
    let pi = parse_partition(partition)?;
    let mut r = Report::new("build-t");
    r.tags.push("build-t".into());
    r.space(s);
    r.set("partition", &pi);
    let map = build_t(&pi, s);
    let wire = SparseMapJson::from(&map);
    let _ = writeln!(r.text, "k={} l={} n={} nnz={}", wire.k, wire.l, wire.n, map.nnz());
    if count_only {
        r.csv = format!("k,l,n,nnz\n{},{},{},{}\n", wire.k, wire.l, wire.n, map.nnz());
        r.json = json!({ "k": wire.k, "l": wire.l, "n": wire.n, "nnz": map.nnz() });
        return Ok(r);
    }
    r.csv.push_str("out,in,val\n");
    for e in &wire.entries {
        let _ = writeln!(r.text, "out=[{}] in=[{}] val={:+}", joined(&e.out), joined(&e.inp), e.val);
        let _ = writeln!(r.csv, "{},{},{}", joined(&e.out), joined(&e.inp), e.val);
    }
    r.json = serde_json::to_value(&wire).expect("serialisable");
    Ok(r)
}

fn laws(s: &SuperSpace, class: PartitionClass, bound: usize) -> Result<Report> {
    if bound > 8 {
        return Err(Error::BoundExceeded { points: bound, bound: 8 });
    }
    let mut r = Report::new("laws");
    for tag in ["identity-law", "tensor-law", "adjoint-law", "composition-scalar"] {
        r.tags.push(tag.into());
    }
    r.space(s);
    r.set("class", class);
    let mut all = Vec::new();
    for total in 0..=bound {
        for k in 0..=total {
            all.extend(enumerate_partitions(k, total - k, class)?);
        }
    }
    let maps: Vec<_> = all.iter().map(|p| build_t(p, s)).collect();
    let n = s.n() as u64;

    let id = build_t(&Partition::identity(), s);
    let identity_ok = id.nnz() as u64 == n && (0..n).all(|i| id.get(i, i) == Some(&1));

    let small: Vec<usize> = (0..all.len()).filter(|&i| all[i].points() <= bound / 2).collect();
    let mut tensor = (0usize, 0usize);
    for &a in &small {
        for &b in &small {
            tensor.0 += 1;
            if build_t(&all[a].tensor(&all[b]), s) != maps[a].kron(&maps[b]) {
                tensor.1 += 1;
            }
        }
    }

    let mut adjoint = (0usize, 0usize);
    for (p, t) in all.iter().zip(&maps) {
        adjoint.0 += 1;
        if t.transpose() != build_t(&p.involution(), s) {
            adjoint.1 += 1;
        }
    }

    let mut pairs = Vec::new();
    let mut compose = (0usize, 0usize);
    r.csv.push_str("sigma,pi,composite,scalar,d,status\n");
    for sigma in &all {
        for pi in all.iter().filter(|p| p.k() == sigma.l()) {
            compose.0 += 1;
            let (line, row, ok, value) = match measure_composition_scalar(sigma, pi, s) {
                Ok(m) => {
                    let ok = m.power_part.is_some() && (s.epsilon() == Sign::Minus || m.scalar > 0);
                    let d = m.power_part.map(|d| d.to_string()).unwrap_or_else(|| "none".into());
                    let status = if ok { "ok" } else { "FAIL" };
                    (
                        format!("{status} sigma={sigma} pi={pi} composite={} scalar={} d={d}", m.composite, m.scalar),
                        format!("{},{},{},{},{d},{status}", quoted(sigma), quoted(pi), quoted(&m.composite), m.scalar),
                        ok,
                        json!({ "sigma": sigma, "pi": pi, "composite": m.composite, "scalar": m.scalar, "d": m.power_part, "ok": ok }),
                    )
                }
                Err(e) => (
                    format!("FAIL sigma={sigma} pi={pi}: {e}"),
                    format!("{},{},,,,{}", quoted(sigma), quoted(pi), quoted(format!("FAIL {e}"))),
                    false,
                    json!({ "sigma": sigma, "pi": pi, "error": e.to_string(), "ok": false }),
                ),
            };
            if !ok {
                compose.1 += 1;
            }
            let _ = writeln!(r.csv, "{row}");
            pairs.push((line, value));
        }
    }

    let verdict = |ok: bool| if ok { "ok" } else { "FAIL" };
    let _ = writeln!(r.text, "{} identity-law: T of | is the identity", verdict(identity_ok));
    let _ = writeln!(r.text, "{} tensor-law: {} pairs, {} failures", verdict(tensor.1 == 0), tensor.0, tensor.1);
    let _ = writeln!(r.text, "{} adjoint-law: {} partitions, {} failures", verdict(adjoint.1 == 0), adjoint.0, adjoint.1);
    let _ = writeln!(r.text, "{} composition-scalar: {} pairs, {} failures", verdict(compose.1 == 0), compose.0, compose.1);
    for (line, _) in &pairs {
        let _ = writeln!(r.text, "  {line}");
    }
    r.ok = identity_ok && tensor.1 == 0 && adjoint.1 == 0 && compose.1 == 0;
    r.json = json!({
        "identity": identity_ok,
        "tensor": { "pairs": tensor.0, "failures": tensor.1 },
        "adjoint": { "partitions": adjoint.0, "failures": adjoint.1 },
        "composition": { "pairs": compose.0, "failures": compose.1, "results": pairs.into_iter().map(|(_, v)| v).collect::<Vec<_>>() },
    });
    Ok(r)
}

fn closure_cmd(generators: &[String], bound: usize, compare: Option<PartitionClass>) -> Result<Report> {
    let gens: Vec<Partition> =
        generators.iter().filter(|g| !g.is_empty() && g.as_str() != "none").map(|g| parse_partition(g)).collect::<Result<_>>()?;
    let mut r = Report::new("closure");
    r.tags.push("closure".into());
    r.set("gen", if generators.is_empty() { "none".to_string() } else { generators.join(",") });
    r.set("bound", bound);
    let cat = closure(&gens, bound)?;
    r.csv.push_str("k,l,count\n");
    let mut counts = Vec::new();
    for ((k, l), c) in cat.counts() {
        let _ = writeln!(r.csv, "{k},{l},{c}");
        counts.push(json!({ "k": k, "l": l, "count": c }));
    }
    let _ = writeln!(r.text, "members={} rounds={}", cat.len(), cat.rounds);
    r.text.push_str(&r.csv);
    let mut doc = json!({ "members": cat.len(), "rounds": cat.rounds, "counts": counts });
    if let Some(class) = compare {
        r.tags.push("closure-compare".into());
        r.set("compare", class);
        let cmp = compare_with_class(&cat, class)?;
        let line = if cmp.equal() {
            "verdict: equal".to_string()
        } else {
            format!("verdict: differs, {} missing, {} extra", cmp.missing.len(), cmp.extra.len())
        };
        let _ = writeln!(r.text, "{line}");
        let _ = writeln!(r.csv, "# {line}");
        r.ok = cmp.equal();
        doc["compare"] = serde_json::to_value(&cmp).expect("serialisable");
    }
    r.json = doc;
    Ok(r)
}

fn matrix_json(m: &CMatrixF64) -> Value {
    let re: Vec<Vec<f64>> = (0..m.nrows()).map(|i| (0..m.ncols()).map(|j| m[(i, j)].re).collect()).collect();
    let im: Vec<Vec<f64>> = (0..m.nrows()).map(|i| (0..m.ncols()).map(|j| m[(i, j)].im).collect()).collect();
    json!({ "re": re, "im": im })
}

fn sample(family: Family, s: &SuperSpace, common: &Common) -> Result<Report> {
    let mut r = Report::new("sample");
    r.tags.push("membership".into());
    r.set("family", family);
    r.space(s);
    let g = sample_element::<f64>(family, s, common.seed)?;
    let res = membership_residual(&g.matrix, family, s, common.tol)?;
    let matrix = matrix_json(&g.matrix);
    let _ = writeln!(r.text, "{res}");
    let _ = writeln!(r.text, "matrix={matrix}");
    r.csv.push_str("row,col,re,im\n");
    for i in 0..g.matrix.nrows() {
        for j in 0..g.matrix.ncols() {
            let z = g.matrix[(i, j)];
            let _ = writeln!(r.csv, "{},{},{:e},{:e}", i + 1, j + 1, z.re, z.im);
        }
    }
    r.ok = res.member;
    r.json = json!({
        "family": family,
        "space": s,
        "matrix": matrix,
        "residual": {
            "unitarity": res.unitarity,
            "super_relation": res.super_relation,
            "family_constraint": res.family_constraint,
            "tolerance": res.tolerance,
            "member": res.member,
        },
    });
    Ok(r)
}

fn liedim(family: Family, s: &SuperSpace) -> Result<Report> {
    let mut r = Report::new("liedim");
    r.tags.push("lie-dimension".into());
    r.set("family", family);
    r.space(s);
    let dim = lie_algebra_dimension(family, s)?;
    let expected = match (family, s.epsilon()) {
        (Family::Obar, _) => Some(oracle::obar_lie_dimension(s)),
        (Family::Bbar, Sign::Minus) => Some(oracle::bbar_minus_lie_dimension(s)),
        _ => None,
    };
    let shown = expected.map(|e| e.to_string()).unwrap_or_else(|| "none".into());
    let _ = writeln!(r.text, "dimension={dim}\nexpected={shown}");
    r.csv = format!("family,p,q,eps,dimension,expected\n{family},{},{},{},{dim},{shown}\n", s.p(), s.q(), s.epsilon());
    r.ok = expected.is_none_or(|e| e == dim);
    r.json = json!({ "family": family, "space": s, "dimension": dim, "expected": expected });
    Ok(r)
}

fn enum_sbar(s: &SuperSpace, list: bool) -> Result<Report> {
    let mut r = Report::new("enum-sbar");
    r.tags.push("sbar-order".into());
    r.space(s);
    let mats = enumerate_super_symmetric(s)?;
    let expected = oracle::sbar_order(s);
    r.ok = mats.len() as u64 == expected;
    let _ = writeln!(r.text, "count={}\nexpected={expected}", mats.len());
    r.csv = format!("p,q,eps,count,expected\n{},{},{},{},{expected}\n", s.p(), s.q(), s.epsilon(), mats.len());
    let rows: Vec<Vec<Vec<i64>>> = mats.iter().map(|m| m.to_rows()).collect();
    if list {
        for m in &rows {
            let _ = writeln!(r.text, "{}", serde_json::to_string(m).expect("serialisable"));
        }
    }
    r.json = json!({ "space": s, "count": mats.len(), "expected": expected, "matrices": if list { json!(rows) } else { Value::Null } });
    Ok(r)
}

fn gamma(s: &SuperSpace, samples: usize, common: &Common) -> Result<Report> {
    let mut r = Report::new("gamma");
    r.tags.push("gamma-conjugator".into());
    r.space(s);
    r.set("samples", samples);
    let res = gamma_residuals(s, common.seed, samples)?;
    let g = gamma_conjugator::<f64>(s)?;
    let rows = [
        ("gamma_unitary", res.unitary),
        ("gamma_k_gamma_t", res.k_form),
        ("c_j_c_t", res.cj),
        ("conjugate_imaginary", res.imaginary),
    ];
    r.csv.push_str("quantity,residual\n");
    for (name, v) in rows {
        let _ = writeln!(r.text, "{name}={v:e}");
        let _ = writeln!(r.csv, "{name},{v:e}");
    }
    let _ = writeln!(r.text, "gamma={}", matrix_json(&g.gamma));
    r.ok = rows.iter().all(|(_, v)| *v <= common.tol);
    r.json = json!({ "space": s, "residuals": res, "gamma": matrix_json(&g.gamma), "c": matrix_json(&g.c) });
    Ok(r)
}

fn homreport(
    family: Family,
    class: PartitionClass,
    (k, l): (usize, usize),
    s: &SuperSpace,
    samples: usize,
    common: &Common,
) -> Result<Report> {
    if k + l > common.max_points {
        return Err(Error::BoundExceeded { points: k + l, bound: common.max_points });
    }
    let mut r = Report::new("homreport");
    r.tags.push("schur-weyl-eq".into());
    r.set("family", family);
    r.set("class", class);
    r.set("k", k);
    r.set("l", l);
    r.space(s);
    r.set("samples", samples);
    match hom_report_with_tol(family, class, k, l, s, samples, common.seed, common.tol) {
        Ok(h) => {
            r.csv = format!("{}\n{}\n", HomReport::CSV_HEADER, h.csv_row());
            r.text = r.csv.clone();
            r.ok = h.verdict == supereasy::Verdict::Equal;
            r.json = serde_json::to_value(&h).expect("serialisable");
        }
        Err(Error::StabilityFailure { first, second }) => {
            r.text = format!("stability failure: {first} with the first batch, {second} after doubling\n");
            r.csv = format!("first,second\n{first},{second}\n");
            r.ok = false;
            r.json = json!({ "stability_failure": { "first": first, "second": second } });
        }
        Err(e) => return Err(e),
    }
    Ok(r)
}

fn suite(quick: bool, samples: usize, common: &Common) -> Result<Report> {
    let cfg = SuiteConfig { seed: common.seed, tol: common.tol, samples, quick };
    let mut r = Report::new("suite");
    r.set("samples", samples);
    r.set("mode", if quick { "quick" } else { "full" });
    let checks = run_suite(&cfg);
    r.tags = checks.iter().map(|c| c.tag.to_string()).collect();
    r.text = render_checks_text(&checks);
    r.csv = render_checks_csv(&checks);
    r.ok = checks.iter().all(|c| c.passed);
    r.json = serde_json::to_value(&checks).expect("serialisable");
    Ok(r)
}
