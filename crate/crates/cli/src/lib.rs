//! The `fusion` command-line tool.
//!
//! [`run`] parses arguments, executes one command and returns the exit code
//! together with everything that would be written to stdout and stderr.

use std::io::Read;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use num_rational::BigRational;
use serde_json::{json, Map, Value};

use fusion_core::catalog::{get_builtin, list_builtins};
use fusion_core::deligne::{check_dimension, deligne_product, verify_cc_idempotents, SemisimpleDesc};
use fusion_core::format::{emit, parse_document, parse_fusion_file, parse_value, FusionFile};
use fusion_core::galois::center_fpdim_prediction;
use fusion_core::morphisms::{
    check_dominant, check_homomorphism, morita_ratio_equal, verify_fpdim_transport, SemiringMorphism,
};
use fusion_core::regular::{
    certify_integrality, check_width, enclosures_agree, fpdim_category, fpdim_category_by_summation, regular_element,
    verify_regular_eigenproperty,
};
use fusion_core::validate::{check_eps_consistency, check_structural, check_transitivity, ValidationReport};
use fusion_core::{AlgebraicNumber, Element, FpEngine, FpOptions, FusionData, FusionError, RationalPolynomial};

#[derive(Parser, Debug)]
#[command(
    name = "fusion",
    version,
    about = "Exact Frobenius-Perron computations for fusion semirings"
)]
struct Cli {
    /// Certified intervals have width 2^-PRECISION.
    #[arg(long, global = true, default_value_t = 64, value_parser = clap::value_parser!(u32).range(1..=4096))]
    precision: u32,

    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Json)]
    format: OutputFormat,

    /// Compute FP dimensions even when the data is not transitive.
    #[arg(long, global = true)]
    waive_transitivity: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the structural axioms, eps-consistency and transitivity.
    Validate { file: String },
    /// FP dimensions of all simples, of one element, or of the category.
    Fpdim {
        file: String,
        /// An element such as `v` or `1+2*v`.
        #[arg(long, conflicts_with = "category")]
        element: Option<String>,
        #[arg(long)]
        category: bool,
    },
    /// The regular element and its eigen-property.
    Regular { file: String },
    /// Minimal polynomial of FPdim of the category and its integrality.
    Integrality { file: String },
    /// Predicted FP dimension of the Drinfeld center.
    Center {
        file: String,
        /// Degree of the center's endomorphism field.
        #[arg(long)]
        dz: Option<u64>,
    },
    /// Compare the Morita invariant FPdim/d of two fusion data.
    Morita { a: String, b: String },
    /// Simples of the real Deligne product.
    Deligne { a: String, b: String },
    /// Built-in fixtures.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Check a (possibly twisted) semiring morphism.
    Morphism { file: String },
}

#[derive(Subcommand, Debug)]
enum CatalogAction {
    List,
    Emit { name: String },
}

/// Result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Usage(String),
    Property(String),
}

impl From<FusionError> for Failure {
    fn from(e: FusionError) -> Self {
        match e {
            FusionError::Schema { .. }
            | FusionError::UnknownFixture(_)
            | FusionError::UnknownLabel(_)
            | FusionError::UnsupportedField(_) => Failure::Usage(e.to_string()),
            _ => Failure::Property(e.to_string()),
        }
    }
}

type CmdResult = Result<(Value, bool), Failure>;

struct Context<'a> {
    options: FpOptions,
    stdin: &'a mut dyn Read,
    stdin_used: bool,
}

impl Context<'_> {
    fn read(&mut self, source: &str) -> Result<String, Failure> {
        if source == "-" {
            if self.stdin_used {
                return Err(Failure::Usage("stdin can only be read once".into()));
            }
            self.stdin_used = true;
            let mut s = String::new();
            self.stdin
                .read_to_string(&mut s)
                .map_err(|e| Failure::Usage(format!("reading stdin: {e}")))?;
            Ok(s)
        } else {
            std::fs::read_to_string(source).map_err(|e| Failure::Usage(format!("reading {source}: {e}")))
        }
    }

    fn builtin(source: &str) -> Option<Result<FusionFile, Failure>> {
        source
            .strip_prefix("builtin:")
            .map(|name| get_builtin(name).map(FusionFile::from).map_err(Failure::from))
    }

    /// Loads and requires the structural axioms.
    fn load(&mut self, source: &str) -> Result<FusionFile, Failure> {
        if let Some(f) = Self::builtin(source) {
            return f;
        }
        let text = self.read(source)?;
        Ok(parse_fusion_file(&text)?)
    }

    /// Loads checking the schema only.
    fn load_unchecked(&mut self, source: &str) -> Result<FusionFile, Failure> {
        if let Some(f) = Self::builtin(source) {
            return f;
        }
        let text = self.read(source)?;
        Ok(parse_document(&text)?)
    }
}

/// Runs the tool on `args` (including the program name).
pub fn run<I, T>(args: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    let mut options = FpOptions::with_precision_bits(cli.precision);
    options.waive_transitivity = cli.waive_transitivity;
    let mut ctx = Context {
        options,
        stdin,
        stdin_used: false,
    };

    if let Command::Catalog {
        action: CatalogAction::Emit { name },
    } = &cli.command
    {
        return match get_builtin(name) {
            Ok(e) => Outcome {
                code: 0,
                stdout: emit(&FusionFile::from(e)),
                stderr: String::new(),
            },
            Err(e) => Outcome {
                code: 2,
                stdout: String::new(),
                stderr: format!("error: {e}\n"),
            },
        };
    }

    let result = match &cli.command {
        Command::Validate { file } => cmd_validate(&mut ctx, file),
        Command::Fpdim {
            file,
            element,
            category,
        } => cmd_fpdim(&mut ctx, file, element.as_deref(), *category),
        Command::Regular { file } => cmd_regular(&mut ctx, file),
        Command::Integrality { file } => cmd_integrality(&mut ctx, file),
        Command::Center { file, dz } => cmd_center(&mut ctx, file, *dz),
        Command::Morita { a, b } => cmd_morita(&mut ctx, a, b),
        Command::Deligne { a, b } => cmd_deligne(&mut ctx, a, b),
        Command::Catalog {
            action: CatalogAction::List,
        } => cmd_catalog_list(),
        Command::Catalog {
            action: CatalogAction::Emit { .. },
        } => unreachable!(),
        Command::Morphism { file } => cmd_morphism(&mut ctx, file),
    };
    match result {
        Ok((value, ok)) => {
            let stdout = match cli.format {
                OutputFormat::Json => {
                    let mut s = serde_json::to_string_pretty(&value).expect("serializable");
                    s.push('\n');
                    s
                }
                OutputFormat::Text => render_text(&value),
            };
            Outcome {
                code: if ok { 0 } else { 1 },
                stdout,
                stderr: String::new(),
            }
        }
        Err(Failure::Usage(m)) => Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {m}\n"),
        },
        Err(Failure::Property(m)) => Outcome {
            code: 1,
            stdout: String::new(),
            stderr: format!("error: {m}\n"),
        },
    }
}

fn rational(q: &BigRational) -> Value {
    json!(q.to_string())
}

fn poly_json(p: &RationalPolynomial) -> Value {
    Value::Array(p.coeffs().iter().map(rational).collect())
}

/// JSON form of an algebraic number with its interval refined to `width`.
pub fn algebraic_json(a: &AlgebraicNumber, width: &BigRational) -> Value {
    let r = a.refined(width);
    let mut m = Map::new();
    if let Some(q) = r.as_rational() {
        m.insert("value".into(), rational(&q));
    }
    m.insert("min_poly".into(), poly_json(r.min_poly()));
    m.insert(
        "interval".into(),
        json!([r.interval().lo().to_string(), r.interval().hi().to_string()]),
    );
    m.insert("approx".into(), json!(format!("{:.12}", r.to_f64())));
    m.insert("algebraic_integer".into(), json!(r.is_algebraic_integer()));
    Value::Object(m)
}

fn short_value(a: &AlgebraicNumber) -> Value {
    match a.as_rational() {
        Some(q) => rational(&q),
        None => json!(format!("{:.12}", a.to_f64())),
    }
}

fn report_json(data: &FusionData, report: &ValidationReport) -> Value {
    let violations: Vec<Value> = report
        .violations
        .iter()
        .map(|v| {
            let witness: Vec<&str> = v.witness.iter().map(|&i| data.label(i)).collect();
            json!({ "rule": v.rule, "witness": witness, "message": v.message })
        })
        .collect();
    json!({ "passed": report.passed(), "violations": violations })
}

fn header(file: &FusionFile) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("name".into(), json!(file.name));
    if let Some(p) = &file.provenance {
        m.insert("provenance".into(), json!(p));
    }
    m
}

fn cmd_validate(ctx: &mut Context, source: &str) -> CmdResult {
    let file = ctx.load_unchecked(source)?;
    let data = &file.data;
    let structural = check_structural(data);
    let transitivity = check_transitivity(data);
    let mut out = header(&file);
    let mut all = structural.clone();
    out.insert("structural".into(), report_json(data, &structural));
    match check_eps_consistency(data) {
        Ok(eps) => {
            out.insert("eps_consistency".into(), report_json(data, &eps));
            all = all.merge(eps);
        }
        Err(e) => {
            out.insert("eps_consistency".into(), json!({ "skipped": e.to_string() }));
        }
    }
    out.insert("transitivity".into(), report_json(data, &transitivity));
    all = all.merge(transitivity);
    out.insert("fusion".into(), json!(data.is_fusion()));
    out.insert("passed".into(), json!(all.passed()));
    Ok((Value::Object(out), all.passed()))
}

fn parse_element(data: &FusionData, text: &str) -> Result<Element, Failure> {
    let mut e = data.zero();
    for term in text.split('+') {
        let term = term.trim();
        let (coeff, label) = match term.split_once('*') {
            Some((c, l)) => (
                c.trim()
                    .parse::<u64>()
                    .map_err(|_| Failure::Usage(format!("bad coefficient in `{term}`")))?,
                l.trim(),
            ),
            None => (1, term),
        };
        let i = data.index_of(label)?;
        e = e.add(&data.simple(i).scale(&BigUint::from(coeff)))?;
    }
    Ok(e)
}

fn cmd_fpdim(ctx: &mut Context, source: &str, element: Option<&str>, category: bool) -> CmdResult {
    let file = ctx.load(source)?;
    let engine = FpEngine::new(&file.data, ctx.options.clone())?;
    let w = &ctx.options.width;
    let mut out = header(&file);
    if category {
        let c = fpdim_category(&engine)?;
        out.insert("category".into(), algebraic_json(&c, w));
    } else if let Some(text) = element {
        let e = parse_element(&file.data, text)?;
        out.insert("element".into(), json!(e.display(&file.data)));
        out.insert("fpdim".into(), algebraic_json(&engine.fpdim_element(&e)?, w));
        out.insert("char_poly".into(), poly_json(&engine.left_mult_matrix(&e).char_poly()));
    } else {
        let mut simples = Map::new();
        for (i, a) in engine.fpdims()?.iter().enumerate() {
            let mut s = algebraic_json(a, w).as_object().unwrap().clone();
            s.insert(
                "char_poly".into(),
                poly_json(&engine.left_mult_matrix(&file.data.simple(i)).char_poly()),
            );
            simples.insert(file.data.label(i).to_string(), Value::Object(s));
        }
        out.insert("simples".into(), Value::Object(simples));
    }
    Ok((Value::Object(out), true))
}

fn cmd_regular(ctx: &mut Context, source: &str) -> CmdResult {
    let file = ctx.load(source)?;
    let engine = FpEngine::new(&file.data, ctx.options.clone())?;
    let w = &ctx.options.width;
    let reg = regular_element(&engine)?;
    let cat = fpdim_category(&engine)?;
    let eigen = verify_regular_eigenproperty(&engine)?;
    let sum = fpdim_category_by_summation(&engine, &check_width())?;
    let two_route = enclosures_agree(&sum, &cat.enclosure(&check_width()));
    let mut coeffs = Map::new();
    for (i, a) in reg.iter().enumerate() {
        coeffs.insert(file.data.label(i).to_string(), algebraic_json(a, w));
    }
    let mut out = header(&file);
    out.insert("regular_element".into(), Value::Object(coeffs));
    out.insert("fpdim_category".into(), algebraic_json(&cat, w));
    out.insert("eigenproperty".into(), report_json(&file.data, &eigen));
    out.insert("summation_agrees".into(), json!(two_route));
    let ok = eigen.passed() && two_route;
    Ok((Value::Object(out), ok))
}

fn cmd_integrality(ctx: &mut Context, source: &str) -> CmdResult {
    let file = ctx.load(source)?;
    let engine = FpEngine::new(&file.data, ctx.options.clone())?;
    let cert = certify_integrality(&engine)?;
    let mut out = header(&file);
    out.insert("fpdim".into(), algebraic_json(&cert.fpdim, &ctx.options.width));
    out.insert("min_poly".into(), poly_json(&cert.min_poly));
    out.insert("algebraic_integer".into(), json!(cert.is_algebraic_integer));
    Ok((Value::Object(out), cert.is_algebraic_integer))
}

fn cmd_center(ctx: &mut Context, source: &str, dz: Option<u64>) -> CmdResult {
    let file = ctx.load(source)?;
    let mut ann = file.galois_or_default();
    if dz.is_some() {
        ann.center_degree = dz;
    }
    let p = center_fpdim_prediction(&file.data, &ann, &ctx.options)?;
    let w = &ctx.options.width;
    let bound = if !p.bound_ok {
        "violated"
    } else if p.equality {
        "equality"
    } else {
        "strict"
    };
    let image: Vec<&str> = p.image.labels().iter().map(String::as_str).collect();
    let mut out = header(&file);
    out.insert("center_degree".into(), json!(p.center_degree));
    out.insert("endo_degree".into(), json!(file.data.endo_degree()));
    out.insert("image".into(), json!(image));
    out.insert("fpdim_image".into(), algebraic_json(&p.fpdim_image, w));
    out.insert("fpdim_category".into(), algebraic_json(&p.fpdim_category, w));
    out.insert("predicted".into(), short_value(&p.predicted));
    out.insert("predicted_exact".into(), algebraic_json(&p.predicted, w));
    out.insert("fpdim_squared".into(), short_value(&p.fpdim_squared));
    out.insert("bound".into(), json!(bound));
    out.insert("all_trivial".into(), json!(p.all_trivial));
    out.insert("consistent".into(), json!(p.consistent()));
    Ok((Value::Object(out), p.consistent()))
}

fn cmd_morita(ctx: &mut Context, a: &str, b: &str) -> CmdResult {
    let fa = ctx.load(a)?;
    let fb = ctx.load(b)?;
    let m = morita_ratio_equal(&fa.data, &fb.data, &ctx.options)?;
    let w = &ctx.options.width;
    let side = |f: &FusionFile, r: &AlgebraicNumber| {
        let mut h = header(f);
        h.insert("endo_degree".into(), json!(f.data.endo_degree()));
        h.insert("ratio".into(), algebraic_json(r, w));
        Value::Object(h)
    };
    let out = json!({ "a": side(&fa, &m.ratio_a), "b": side(&fb, &m.ratio_b), "equal": m.equal });
    Ok((out, true))
}

fn semisimple(file: &FusionFile) -> Result<SemisimpleDesc, Failure> {
    let field = file.base_field.as_deref().unwrap_or("unspecified");
    Ok(SemisimpleDesc::from_fusion_data(&file.data, field)?)
}

fn cmd_deligne(ctx: &mut Context, a: &str, b: &str) -> CmdResult {
    let fa = ctx.load(a)?;
    let fb = ctx.load(b)?;
    let (da, db) = (semisimple(&fa)?, semisimple(&fb)?);
    let product = deligne_product(&da, &db);
    let simples: Vec<Value> = product
        .iter()
        .map(|s| {
            json!({
                "label": s.label,
                "type": s.ty.symbol(),
                "multiplicity": s.multiplicity,
                "factors": [da.simples()[s.factors.0].0, db.simples()[s.factors.1].0],
            })
        })
        .collect();
    let dims_ok = da
        .simples()
        .iter()
        .all(|(_, ta)| db.simples().iter().all(|(_, tb)| check_dimension(*ta, *tb)));
    let idempotents = verify_cc_idempotents();
    let out = json!({
        "a": fa.name,
        "b": fb.name,
        "rank": product.len(),
        "simples": simples,
        "dimension_check": dims_ok,
        "cc_idempotents": idempotents.passed(),
    });
    Ok((out, dims_ok && idempotents.passed()))
}

fn cmd_catalog_list() -> CmdResult {
    let fixtures: Vec<Value> = list_builtins()
        .into_iter()
        .map(|n| {
            let e = get_builtin(n).expect("listed fixture exists");
            json!({
                "name": n,
                "rank": e.data.rank(),
                "endo_degree": e.data.endo_degree(),
                "base_field": e.base_field,
                "provenance": e.provenance,
            })
        })
        .collect();
    Ok((json!({ "fixtures": fixtures }), true))
}

fn parse_combination(data: &FusionData, v: &Value, path: &str) -> Result<Element, Failure> {
    let obj = v
        .as_object()
        .ok_or_else(|| Failure::Usage(format!("{path}: expected an object of label multiplicities")))?;
    let mut e = data.zero();
    for (label, m) in obj {
        let m = m
            .as_u64()
            .ok_or_else(|| Failure::Usage(format!("{path}.{label}: expected a nonnegative integer")))?;
        e = e.add(&data.simple(data.index_of(label)?).scale(&BigUint::from(m)))?;
    }
    Ok(e)
}

fn load_side(ctx: &mut Context, v: Option<&Value>, path: &str) -> Result<FusionFile, Failure> {
    match v {
        Some(Value::String(s)) => ctx.load(s),
        Some(obj @ Value::Object(_)) => {
            let f = parse_value(obj)?;
            let report = check_structural(&f.data);
            if !report.passed() {
                return Err(FusionError::Structural(report.to_string()).into());
            }
            Ok(f)
        }
        _ => Err(Failure::Usage(format!(
            "{path}: expected a fusion document or a file reference"
        ))),
    }
}

fn cmd_morphism(ctx: &mut Context, source: &str) -> CmdResult {
    let text = ctx.read(source)?;
    let doc: Value = serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("morphism file: {e}")))?;
    let src = load_side(ctx, doc.get("source"), "source")?;
    let tgt = load_side(ctx, doc.get("target"), "target")?;
    let images_obj = doc
        .get("images")
        .and_then(Value::as_object)
        .ok_or_else(|| Failure::Usage("images: expected an object keyed by source labels".into()))?;
    let mut images = Vec::with_capacity(src.data.rank());
    for i in 0..src.data.rank() {
        let label = src.data.label(i);
        let v = images_obj
            .get(label)
            .ok_or_else(|| Failure::Usage(format!("images: missing image of `{label}`")))?;
        images.push(parse_combination(&tgt.data, v, &format!("images.{label}"))?);
    }
    let twist = match doc.get("twist") {
        None | Some(Value::Null) => None,
        Some(v) => Some(parse_combination(&src.data, v, "twist")?),
    };
    let f = SemiringMorphism::from_images(src.data.clone(), tgt.data.clone(), &images, twist)?;
    let hom = check_homomorphism(&f)?;
    let dominant = check_dominant(&f)?;
    let mut out = Map::new();
    out.insert("source".into(), json!(src.name));
    out.insert("target".into(), json!(tgt.name));
    out.insert("homomorphism".into(), report_json(&src.data, &hom));
    out.insert("dominant".into(), json!(dominant));
    let mut ok = hom.passed();
    if ok {
        let t = verify_fpdim_transport(&f, &ctx.options)?;
        out.insert("fpdim_twist".into(), algebraic_json(&t.fpdim_twist, &ctx.options.width));
        out.insert("transport".into(), json!({
            "passed": t.report.passed(),
            "regular_equation_checked": t.regular_equation_checked,
            "violations": t.report.violations.iter().map(|v| json!({ "rule": v.rule, "message": v.message })).collect::<Vec<_>>(),
        }));
        ok = t.report.passed();
    }
    Ok((Value::Object(out), ok))
}

/// Indented `key: value` rendering of a JSON value.
fn render_text(v: &Value) -> String {
    fn scalar(v: &Value) -> String {
        match v {
            Value::String(s) => s.clone(),
            other => other.to_string(),
        }
    }
    fn is_scalar_list(v: &Value) -> bool {
        v.as_array()
            .is_some_and(|a| a.iter().all(|x| !x.is_object() && !x.is_array()))
    }
    fn walk(v: &Value, indent: usize, out: &mut String) {
        let pad = "  ".repeat(indent);
        match v {
            Value::Object(m) => {
                for (k, x) in m {
                    match x {
                        Value::Object(_) => {
                            out.push_str(&format!("{pad}{k}:\n"));
                            walk(x, indent + 1, out);
                        }
                        Value::Array(a) if is_scalar_list(x) => {
                            let items: Vec<String> = a.iter().map(scalar).collect();
                            out.push_str(&format!("{pad}{k}: [{}]\n", items.join(", ")));
                        }
                        Value::Array(_) => {
                            out.push_str(&format!("{pad}{k}:\n"));
                            walk(x, indent + 1, out);
                        }
                        _ => out.push_str(&format!("{pad}{k}: {}\n", scalar(x))),
                    }
                }
            }
            Value::Array(a) => {
                for x in a {
                    if x.is_object() || x.is_array() {
                        out.push_str(&format!("{pad}-\n"));
                        walk(x, indent + 1, out);
                    } else {
                        out.push_str(&format!("{pad}- {}\n", scalar(x)));
                    }
                }
            }
            other => out.push_str(&format!("{pad}{}\n", scalar(other))),
        }
    }
    let mut out = String::new();
    walk(v, 0, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Outcome {
        let mut empty: &[u8] = &[];
        run(std::iter::once("fusion").chain(args.iter().copied()), &mut empty)
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(run_args(&["frobnicate"]).code, 2);
        assert_eq!(run_args(&["fpdim", "builtin:nope"]).code, 2);
        assert_eq!(run_args(&["fpdim", "builtin:fib", "--element", "zz"]).code, 2);
    }

    #[test]
    fn element_parsing() {
        let out = run_args(&["fpdim", "builtin:rep_f2_z3", "--element", "1+2*v"]);
        assert_eq!(out.code, 0, "{}", out.stderr);
        let v: Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v["fpdim"]["value"], "5");
    }

    #[test]
    fn text_output() {
        let out = run_args(&["--format", "text", "integrality", "builtin:fib"]);
        assert_eq!(out.code, 0);
        assert!(out.stdout.contains("algebraic_integer: true"), "{}", out.stdout);
        assert!(out.stdout.contains("min_poly: [5, -5, 1]"), "{}", out.stdout);
    }

    #[test]
    fn stdin_input() {
        let text = emit(&FusionFile::from(get_builtin("vec_z3").unwrap()));
        let mut input = text.as_bytes();
        let out = run(["fusion", "fpdim", "-", "--category"], &mut input);
        assert_eq!(out.code, 0, "{}", out.stderr);
        let v: Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v["category"]["value"], "3");
    }

    #[test]
    fn multifusion_refused() {
        let out = run_args(&["fpdim", "builtin:m2_vec"]);
        assert_eq!(out.code, 1);
        let out = run_args(&["validate", "builtin:m2_vec"]);
        assert_eq!(out.code, 1);
        assert!(out.stdout.contains("skipped"));
    }
}
