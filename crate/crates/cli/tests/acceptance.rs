//! Acceptance criteria, one line per criterion.
//!
//! Runs without the libtest harness so the report is always printed. Exits
//! nonzero when any criterion fails.

use std::cmp::Ordering;
use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Zero};

use fusion_core::catalog::{get_builtin, list_builtins};
use fusion_core::deligne::{tensor_types, verify_cc_idempotents, DivisionType};
use fusion_core::format::{emit, FusionFile};
use fusion_core::galois::center_fpdim_prediction;
use fusion_core::morphisms::{morita_ratio_equal, relative_tensor_fpdim};
use fusion_core::regular::{certify_integrality, fpdim_category, tolerance, verify_regular_eigenproperty};
use fusion_core::validate::{check_all, check_eps_consistency, search_idempotents_above_unit, DEFAULT_SEARCH_CUTOFF};
use fusion_core::{AlgebraicNumber, FpEngine, FpOptions, FusionData, RationalPolynomial};

type Check = Result<(), String>;
type Criterion = (&'static str, &'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn q(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

fn poly(c: &[i64]) -> RationalPolynomial {
    RationalPolynomial::from_ints(c.iter().copied())
}

fn data(name: &str) -> FusionData {
    get_builtin(name).unwrap().data
}

fn opts() -> FpOptions {
    FpOptions::default()
}

fn is_exactly(a: &AlgebraicNumber, n: i64) -> bool {
    a.as_rational() == Some(q(n)) && a.min_poly() == &poly(&[-n, 1])
}

fn fusion_fixtures() -> Vec<(&'static str, FusionData)> {
    list_builtins()
        .into_iter()
        .filter(|&n| n != "m2_vec")
        .map(|n| (n, data(n)))
        .collect()
}

fn criterion_1() -> Check {
    let d = data("rep_r_q8");
    let e = FpEngine::new(&d, opts()).map_err(|e| e.to_string())?;
    let c = fpdim_category(&e).map_err(|e| e.to_string())?;
    ensure(is_exactly(&c, 8), || format!("FPdim(C) = {c}"))?;
    let dims = e.fpdims().map_err(|e| e.to_string())?;
    for (a, n) in dims.iter().zip([1, 1, 1, 1, 4]) {
        ensure(is_exactly(a, n), || format!("simple FPdim {a}, expected {n}"))?;
    }
    Ok(())
}

fn criterion_2() -> Check {
    let d = data("rep_f2_z3");
    let e = FpEngine::new(&d, opts()).map_err(|e| e.to_string())?;
    let c = fpdim_category(&e).map_err(|e| e.to_string())?;
    ensure(is_exactly(&c, 3), || format!("FPdim(C) = {c}"))?;
    let v = d.simple_by_label("v").unwrap();
    let fv = e.fpdim_element(&v).map_err(|e| e.to_string())?;
    ensure(is_exactly(&fv, 2), || format!("FPdim(V) = {fv}"))?;
    let cp = e.left_mult_matrix(&v).char_poly();
    ensure(cp == poly(&[-2, -1, 1]), || format!("char poly {cp}"))?;
    let cert = certify_integrality(&e).map_err(|e| e.to_string())?;
    ensure(cert.min_poly == poly(&[-3, 1]), || {
        format!("min poly {}", cert.min_poly)
    })?;
    ensure(cert.min_poly.has_integer_coeffs() && cert.is_algebraic_integer, || {
        "not integral".into()
    })
}

fn criterion_3() -> Check {
    let d = data("cc_bim");
    ensure(d.endo_degree() == 2, || format!("d = {}", d.endo_degree()))?;
    let e = FpEngine::new(&d, opts()).map_err(|e| e.to_string())?;
    let c = fpdim_category(&e).map_err(|e| e.to_string())?;
    ensure(is_exactly(&c, 2), || format!("FPdim(C) = {c}"))?;
    let m = morita_ratio_equal(&d, &data("vec_r"), &opts()).map_err(|e| e.to_string())?;
    ensure(
        is_exactly(&m.ratio_a, 1) && is_exactly(&m.ratio_b, 1) && m.equal,
        || format!("ratios {} and {}", m.ratio_a, m.ratio_b),
    )
}

fn criterion_4() -> Check {
    let f = get_builtin("gal7").unwrap();
    let p = center_fpdim_prediction(&f.data, &f.galois_or_default(), &opts()).map_err(|e| e.to_string())?;
    ensure(p.center_degree == 2 && f.data.endo_degree() == 6, || {
        format!("d_Z = {}, d = {}", p.center_degree, f.data.endo_degree())
    })?;
    ensure(is_exactly(&p.fpdim_image, 1), || {
        format!("FPdim(image) = {}", p.fpdim_image)
    })?;
    ensure(is_exactly(&p.fpdim_category, 3), || {
        format!("FPdim(C) = {}", p.fpdim_category)
    })?;
    ensure(is_exactly(&p.predicted, 1), || format!("prediction {}", p.predicted))?;
    ensure(is_exactly(&p.fpdim_squared, 9), || {
        format!("FPdim(C)^2 = {}", p.fpdim_squared)
    })?;
    ensure(p.predicted.compare(&p.fpdim_squared) == Ordering::Less, || {
        "1 < 9 fails".into()
    })?;
    ensure(p.bound_ok && !p.equality, || "bound flags wrong".into())
}

fn criterion_5() -> Check {
    let v = relative_tensor_fpdim(&q(6), &q(6), &q(3)).map_err(|e| e.to_string())?;
    ensure(v == q(12), || format!("got {v}"))
}

fn criterion_6() -> Check {
    use DivisionType::*;
    let expected = [
        ((Real, Real), (Real, 1, 1)),
        ((Real, Complex), (Complex, 1, 1)),
        ((Real, Quaternion), (Quaternion, 1, 1)),
        ((Complex, Complex), (Complex, 1, 2)),
        ((Complex, Quaternion), (Complex, 2, 1)),
        ((Quaternion, Quaternion), (Real, 4, 1)),
    ];
    for ((a, b), (ty, mult, count)) in expected {
        for (x, y) in [(a, b), (b, a)] {
            let cells = tensor_types(x, y);
            ensure(
                cells.len() == 1 && cells[0].ty == ty && cells[0].multiplicity == mult && cells[0].count == count,
                || format!("{x}⊗{y} gives {cells:?}"),
            )?;
        }
    }
    let report = verify_cc_idempotents();
    ensure(report.passed(), || report.to_string())
}

fn criterion_7() -> Check {
    let d = data("fib");
    let e = FpEngine::new(&d, opts()).map_err(|e| e.to_string())?;
    let x = e.fpdim_simple(d.index_of("x").unwrap()).map_err(|e| e.to_string())?;
    ensure(x.min_poly() == &poly(&[-1, -1, 1]), || {
        format!("min poly {}", x.min_poly())
    })?;
    let tol = BigRational::new(1.into(), 1_000_000_000_000u64.into());
    let enc = x.enclosure(&tol);
    let target = BigRational::new(1_618_033_988_749_894u64.into(), 1_000_000_000_000_000u64.into());
    ensure(enc.width() <= tol, || format!("enclosure {enc} too wide"))?;
    ensure(enc.lo() >= &(&target - &tol) && enc.hi() <= &(&target + &tol), || {
        format!("enclosure {enc} not within 1e-12 of 1.618033988749894")
    })?;
    let cert = certify_integrality(&e).map_err(|e| e.to_string())?;
    ensure(cert.min_poly == poly(&[5, -5, 1]), || {
        format!("FPdim(C) min poly {}", cert.min_poly)
    })?;
    ensure(cert.is_algebraic_integer, || "integrality flag false".into())
}

fn criterion_8a() -> Check {
    for (n, d) in fusion_fixtures() {
        let r = check_eps_consistency(&d).map_err(|e| e.to_string())?;
        ensure(r.passed(), || format!("{n}: {r}"))?;
        for a in 0..d.rank() {
            let unit = d.unit_index().unwrap();
            ensure(*d.n(a, d.dual(a), unit) == BigUint::from(d.eps(a)), || {
                format!("{n}: N[a][ā][1] at {a}")
            })?;
        }
    }
    Ok(())
}

fn criterion_8b() -> Check {
    for (n, d) in fusion_fixtures() {
        let e = FpEngine::new(&d, opts()).map_err(|e| e.to_string())?;
        let r = verify_regular_eigenproperty(&e).map_err(|e| e.to_string())?;
        ensure(r.passed(), || format!("{n}: {r}"))?;
    }
    Ok(())
}

fn criterion_8c() -> Check {
    for (n, d) in fusion_fixtures() {
        let e = FpEngine::new(&d, opts()).map_err(|e| e.to_string())?;
        for i in 0..d.rank() {
            let a = e.fpdim_simple(i).map_err(|e| e.to_string())?;
            let b = e.fpdim_simple(d.dual(i)).map_err(|e| e.to_string())?;
            ensure(a == b, || format!("{n}: FPdim({i}) = {a} but dual gives {b}"))?;
        }
    }
    Ok(())
}

fn criterion_8d() -> Check {
    let tol = tolerance();
    let w = &tol / q(4);
    for (n, d) in fusion_fixtures() {
        let e = FpEngine::new(&d, opts()).map_err(|e| e.to_string())?;
        let dims = e.fpdims().map_err(|e| e.to_string())?;
        for i in 0..d.rank() {
            for j in 0..d.rank() {
                let xy = e.fpdim_element(&d.multiply_simples(i, j)).map_err(|e| e.to_string())?;
                let lhs = xy.enclosure(&w);
                let rhs = dims[i].enclosure(&w).mul(&dims[j].enclosure(&w));
                ensure(lhs.distance_bound(&rhs) <= tol, || {
                    format!("{n}: ({i},{j}) {lhs} vs {rhs}")
                })?;
            }
        }
    }
    Ok(())
}

fn criterion_8e() -> Check {
    for (n, d) in fusion_fixtures() {
        let e = FpEngine::new(&d, opts()).map_err(|e| e.to_string())?;
        for (i, a) in e.fpdims().map_err(|e| e.to_string())?.iter().enumerate() {
            ensure(a.compare_rational(&BigRational::one()) != Ordering::Less, || {
                format!("{n}: FPdim({i}) = {a}")
            })?;
        }
    }
    Ok(())
}

fn criterion_8f() -> Check {
    for (n, d) in fusion_fixtures() {
        let e = FpEngine::new(&d, opts()).map_err(|e| e.to_string())?;
        for (i, a) in e.fpdims().map_err(|e| e.to_string())?.iter().enumerate() {
            let m = a.max_conjugate_modulus();
            ensure(m <= a.to_f64() + 1e-9, || {
                format!("{n}: conjugate modulus {m} exceeds FPdim({i}) = {a}")
            })?;
        }
    }
    Ok(())
}

fn criterion_8g() -> Check {
    for (n, d) in fusion_fixtures().into_iter().filter(|(_, d)| d.rank() <= 3) {
        let found = search_idempotents_above_unit(&d, 4, DEFAULT_SEARCH_CUTOFF).map_err(|e| e.to_string())?;
        ensure(found == vec![d.unit_element()], || format!("{n}: found {found:?}"))?;
    }
    Ok(())
}

/// Every fusion coefficient of every rank-2 fixture is moved by +1 and, when
/// positive, by -1. A mutation is detected when the full validator rejects it.
fn mutation_sweep() -> (usize, usize, Vec<String>) {
    let (mut total, mut detected) = (0, 0);
    let mut missed = Vec::new();
    for (n, d) in fusion_fixtures().into_iter().filter(|(_, d)| d.rank() == 2) {
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    let v = d.n(i, j, k).clone();
                    let mut values = vec![&v + 1u32];
                    if !v.is_zero() {
                        values.push(&v - 1u32);
                    }
                    for m in values {
                        total += 1;
                        let mutated = d.with_coefficient(i, j, k, m.clone());
                        if check_all(&mutated).passed() {
                            missed.push(format!("{n}: N[{i}][{j}][{k}] {v}→{m}"));
                        } else {
                            detected += 1;
                        }
                    }
                }
            }
        }
    }
    (detected, total, missed)
}

fn criterion_8h() -> Check {
    let (detected, total, missed) = mutation_sweep();
    let rate = detected as f64 / total as f64;
    ensure(rate >= 0.95, || {
        format!(
            "detected {detected}/{total} = {:.1}%; accepted: {}",
            100.0 * rate,
            missed.join(", ")
        )
    })
}

fn run_cli(args: &[&str]) -> Result<Vec<u8>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_fusion"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    let mut bytes = out.stdout;
    bytes.extend(format!("\nexit {}\n", out.status.code().unwrap_or(-1)).bytes());
    Ok(bytes)
}

fn pipeline(dir: &Path) -> Result<Vec<u8>, String> {
    let mut transcript = Vec::new();
    let mut files = Vec::new();
    for name in list_builtins() {
        let emitted = run_cli(&["catalog", "emit", name])?;
        let text = String::from_utf8(emitted.clone()).map_err(|e| e.to_string())?;
        let json = text.rsplit_once("\nexit ").map(|(a, _)| a).unwrap_or(&text);
        let path = dir.join(format!("{name}.json"));
        std::fs::write(&path, json).map_err(|e| e.to_string())?;
        transcript.extend(emitted);
        files.push((name, path.to_string_lossy().into_owned()));
    }
    transcript.extend(run_cli(&["catalog", "list"])?);
    for (name, path) in &files {
        for cmd in [
            vec!["validate", path],
            vec!["fpdim", path],
            vec!["fpdim", path, "--category"],
            vec!["regular", path],
            vec!["integrality", path],
            vec!["center", path],
            vec!["--format", "text", "fpdim", path],
        ] {
            transcript.extend(run_cli(&cmd)?);
        }
        transcript.extend(run_cli(&["morita", path, &files[0].1])?);
        if *name == "rep_r_q8" {
            transcript.extend(run_cli(&["deligne", path, path])?);
        }
    }
    Ok(transcript)
}

fn criterion_9() -> Check {
    let a = tempfile::tempdir().map_err(|e| e.to_string())?;
    let b = tempfile::tempdir().map_err(|e| e.to_string())?;
    let first = pipeline(a.path())?;
    let second = pipeline(b.path())?;
    ensure(first == second, || "two pipeline runs differ".into())?;
    for name in list_builtins() {
        let emitted = std::fs::read_to_string(a.path().join(format!("{name}.json"))).map_err(|e| e.to_string())?;
        let canonical = emit(&FusionFile::from(get_builtin(name).unwrap()));
        ensure(emitted == canonical, || {
            format!("{name}: emitted JSON differs from the library")
        })?;
    }
    let fpdim = String::from_utf8(run_cli(&["fpdim", "builtin:rep_f2_z3", "--category"])?).unwrap();
    ensure(
        fpdim.contains("\"value\": \"3\"") && fpdim.contains("\"algebraic_integer\": true"),
        || fpdim.clone(),
    )?;
    let center = String::from_utf8(run_cli(&["center", "builtin:gal7"])?).unwrap();
    ensure(
        center.contains("\"predicted\": \"1\"") && center.contains("\"bound\": \"strict\""),
        || center.clone(),
    )
}

fn main() {
    let criteria: [Criterion; 17] = [
        ("1", "FPdim(Rep_R(Q8)) = 8 with simples (1,1,1,1,4)", criterion_1),
        (
            "2",
            "Rep_F2(Z/3): FPdim 3, FPdim(V) = 2, char poly t^2-t-2, certificate t-3",
            criterion_2,
        ),
        ("3", "cc_bim: FPdim 2, d = 2, Morita ratio 1 = 1", criterion_3),
        ("4", "gal7 center prediction 1 = (2/6)·1·3, 1 < 9 strict", criterion_4),
        ("5", "relative tensor FPdim(6,6,3) = 12", criterion_5),
        (
            "6",
            "real division-algebra tensor table and C⊗C idempotents",
            criterion_6,
        ),
        (
            "7",
            "fib: FPdim(x) within 1e-12 of 1.618033988749894, t^2-5t+5 integral",
            criterion_7,
        ),
        ("8a", "eps cyclic relations and N[a][ā][1] = eps_a", criterion_8a),
        ("8b", "regular eigen-property x·R = FPdim(x)·R", criterion_8b),
        ("8c", "FPdim(x) = FPdim(dual x)", criterion_8c),
        ("8d", "FPdim(xy) = FPdim(x)FPdim(y) within 1e-9", criterion_8d),
        ("8e", "FPdim(x) >= 1", criterion_8e),
        ("8f", "conjugate moduli <= FPdim + 1e-9", criterion_8f),
        (
            "8g",
            "idempotents above the unit, bound 4, rank <= 3: only the unit",
            criterion_8g,
        ),
        (
            "8h",
            "single-entry mutation sweep on rank-2 fixtures detected >= 95%",
            criterion_8h,
        ),
        (
            "9",
            "catalog emit and command pipeline byte-identical across two runs",
            criterion_9,
        ),
        ("T", "all criteria within 5 seconds", || Ok(())),
    ];
    let start = Instant::now();
    let mut failures = 0;
    for (id, desc, check) in &criteria[..criteria.len() - 1] {
        let t = Instant::now();
        let result = check();
        let ms = t.elapsed().as_millis();
        match result {
            Ok(()) => println!("PASS  {id:<3} {desc} ({ms} ms)"),
            Err(e) => {
                failures += 1;
                println!("FAIL  {id:<3} {desc} ({ms} ms): {e}");
            }
        }
    }
    let elapsed = start.elapsed();
    let (id, desc, _) = criteria[criteria.len() - 1];
    if elapsed < Duration::from_secs(5) {
        println!("PASS  {id:<3} {desc} ({} ms)", elapsed.as_millis());
    } else {
        failures += 1;
        println!("FAIL  {id:<3} {desc} ({} ms)", elapsed.as_millis());
    }
    println!("{} criteria, {failures} failed", criteria.len());
    if failures > 0 {
        std::process::exit(1);
    }
}
