//! JSON interchange format.
//!
//! ```json
//! {
//!   "name": "rep_f2_z3",
//!   "endo_degree": 1,
//!   "unit": ["1"],
//!   "simples": [
//!     {"label": "1", "endo_dim": 1, "dual": "1", "galois": null},
//!     {"label": "v", "endo_dim": 2, "dual": "v", "galois": null}
//!   ],
//!   "fusion": {"1|1": {"1": 1}, "1|v": {"v": 1}, "v|1": {"v": 1}, "v|v": {"1": 2, "v": 1}}
//! }
//! ```
//!
//! Omitted products are zero. Repeated unit labels express multiplicity.
//! Optional keys: `group` (`elements` and a `table` of element labels),
//! `center_degree`, `base_field` and `provenance`. Emission sorts keys and
//! simples by label, so canonical documents round-trip byte for byte.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use serde_json::{json, Map, Value};

use crate::catalog::FixtureEntry;
use crate::galois::{FiniteGroup, GaloisAnnotation, GaloisTag};
use crate::semiring::FusionData;
use crate::validate::check_structural;
use crate::{FusionError, Result};

/// A parsed document.
#[derive(Clone, Debug)]
pub struct FusionFile {
    pub name: String,
    pub data: FusionData,
    pub galois: Option<GaloisAnnotation>,
    pub base_field: Option<String>,
    pub provenance: Option<String>,
}

impl FusionFile {
    pub fn galois_or_default(&self) -> GaloisAnnotation {
        self.galois
            .clone()
            .unwrap_or_else(|| GaloisAnnotation::default_for(&self.data))
    }
}

impl From<FixtureEntry> for FusionFile {
    fn from(e: FixtureEntry) -> Self {
        Self {
            name: e.name,
            data: e.data,
            galois: e.galois,
            base_field: e.base_field,
            provenance: Some(e.provenance),
        }
    }
}

fn schema(path: impl Into<String>, message: impl Into<String>) -> FusionError {
    FusionError::Schema {
        path: path.into(),
        message: message.into(),
    }
}

fn get_object<'a>(v: &'a Value, path: &str) -> Result<&'a Map<String, Value>> {
    v.as_object().ok_or_else(|| schema(path, "expected an object"))
}

fn get_str<'a>(v: &'a Value, path: &str) -> Result<&'a str> {
    v.as_str().ok_or_else(|| schema(path, "expected a string"))
}

fn get_positive(v: &Value, path: &str) -> Result<u64> {
    match v.as_u64() {
        Some(0) => Err(schema(path, "must be a positive integer, got 0")),
        Some(n) => Ok(n),
        None if v.as_i64().is_some() => Err(schema(path, "must be a positive integer, got a negative value")),
        None => Err(schema(path, "expected a positive integer")),
    }
}

fn get_multiplicity(v: &Value, path: &str) -> Result<BigUint> {
    if let Some(n) = v.as_u64() {
        return Ok(BigUint::from(n));
    }
    if v.as_i64().is_some() {
        return Err(schema(path, "negative multiplicity"));
    }
    if let Some(s) = v.as_str() {
        if !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit()) {
            return Ok(s.parse().expect("digits"));
        }
    }
    Err(schema(path, "expected a nonnegative integer"))
}

fn check_keys(obj: &Map<String, Value>, allowed: &[&str], path: &str) -> Result<()> {
    match obj.keys().find(|k| !allowed.contains(&k.as_str())) {
        Some(k) => Err(schema(format!("{path}.{k}"), "unknown key")),
        None => Ok(()),
    }
}

/// Parses a document, checking the schema only.
pub fn parse_document(text: &str) -> Result<FusionFile> {
    let root: Value = serde_json::from_str(text)
        .map_err(|e| schema(format!("line {}, column {}", e.line(), e.column()), e.to_string()))?;
    parse_value(&root)
}

pub fn parse_value(root: &Value) -> Result<FusionFile> {
    let obj = get_object(root, "$")?;
    check_keys(
        obj,
        &[
            "name",
            "endo_degree",
            "unit",
            "simples",
            "group",
            "fusion",
            "center_degree",
            "base_field",
            "provenance",
        ],
        "$",
    )?;
    let name = match obj.get("name") {
        Some(v) => get_str(v, "$.name")?.to_string(),
        None => String::new(),
    };
    let endo_degree = match obj.get("endo_degree") {
        Some(v) => get_positive(v, "$.endo_degree")?,
        None => 1,
    };

    let simples = obj
        .get("simples")
        .ok_or_else(|| schema("$.simples", "missing"))?
        .as_array()
        .ok_or_else(|| schema("$.simples", "expected an array"))?;
    if simples.is_empty() {
        return Err(schema("$.simples", "at least one simple is required"));
    }
    let mut labels = Vec::with_capacity(simples.len());
    let mut index = BTreeMap::new();
    for (i, s) in simples.iter().enumerate() {
        let path = format!("$.simples[{i}]");
        let so = get_object(s, &path)?;
        check_keys(so, &["label", "endo_dim", "dual", "galois"], &path)?;
        let label = get_str(
            so.get("label")
                .ok_or_else(|| schema(format!("{path}.label"), "missing"))?,
            &format!("{path}.label"),
        )?;
        if label.is_empty() || label.contains('|') {
            return Err(schema(
                format!("{path}.label"),
                "labels must be nonempty and must not contain `|`",
            ));
        }
        if index.insert(label.to_string(), i).is_some() {
            return Err(schema(format!("{path}.label"), format!("duplicate label `{label}`")));
        }
        labels.push(label.to_string());
    }
    let lookup = |label: &str, path: &str| -> Result<usize> {
        index
            .get(label)
            .copied()
            .ok_or_else(|| schema(path, format!("unknown label `{label}`")))
    };

    let group = match obj.get("group") {
        None | Some(Value::Null) => None,
        Some(g) => Some(parse_group(g)?),
    };

    let r = labels.len();
    let mut eps = Vec::with_capacity(r);
    let mut dual = Vec::with_capacity(r);
    let mut tags = Vec::with_capacity(r);
    let mut any_tag = false;
    for (i, s) in simples.iter().enumerate() {
        let path = format!("$.simples[{i}]");
        let so = s.as_object().unwrap();
        eps.push(match so.get("endo_dim") {
            Some(v) => get_positive(v, &format!("{path}.endo_dim"))?,
            None => 1,
        });
        dual.push(match so.get("dual") {
            Some(v) => {
                let p = format!("{path}.dual");
                lookup(get_str(v, &p)?, &p)?
            }
            None => i,
        });
        let p = format!("{path}.galois");
        let tag = match so.get("galois") {
            None | Some(Value::Null) => GaloisTag::Unknown,
            Some(Value::String(s)) if s == "trivial" => GaloisTag::Trivial,
            Some(Value::String(s)) if s == "nontrivial" => GaloisTag::Nontrivial,
            Some(Value::Object(o)) => {
                check_keys(o, &["group_element"], &p)?;
                let gp = format!("{p}.group_element");
                let label = get_str(o.get("group_element").ok_or_else(|| schema(&gp, "missing"))?, &gp)?;
                let group = group.as_ref().ok_or_else(|| schema(&gp, "no group is declared"))?;
                GaloisTag::Element(
                    group
                        .index_of(label)
                        .map_err(|_| schema(&gp, format!("unknown group element `{label}`")))?,
                )
            }
            Some(_) => {
                return Err(schema(
                    &p,
                    "expected null, \"trivial\", \"nontrivial\" or {\"group_element\": label}",
                ))
            }
        };
        any_tag |= tag != GaloisTag::Unknown;
        tags.push(tag);
    }

    let mut unit = BTreeMap::new();
    match obj.get("unit") {
        None => {
            *unit.entry(lookup("1", "$.unit")?).or_insert(0) += 1;
        }
        Some(v) => {
            let arr = v
                .as_array()
                .ok_or_else(|| schema("$.unit", "expected an array of labels"))?;
            if arr.is_empty() {
                return Err(schema("$.unit", "must name at least one simple"));
            }
            for (k, u) in arr.iter().enumerate() {
                let p = format!("$.unit[{k}]");
                *unit.entry(lookup(get_str(u, &p)?, &p)?).or_insert(0u64) += 1;
            }
        }
    }

    let mut coefficients = vec![BigUint::zero(); r * r * r];
    if let Some(f) = obj.get("fusion") {
        for (key, terms) in get_object(f, "$.fusion")? {
            let p = format!("$.fusion.{key}");
            let (a, b) = key
                .split_once('|')
                .ok_or_else(|| schema(&p, "keys have the form \"left|right\""))?;
            let (a, b) = (lookup(a, &p)?, lookup(b, &p)?);
            for (c, m) in get_object(terms, &p)? {
                let pc = format!("{p}.{c}");
                let k = lookup(c, &pc)?;
                coefficients[(a * r + b) * r + k] = get_multiplicity(m, &pc)?;
            }
        }
    }

    let center_degree = match obj.get("center_degree") {
        None | Some(Value::Null) => None,
        Some(v) => Some(get_positive(v, "$.center_degree")?),
    };
    let base_field = match obj.get("base_field") {
        None | Some(Value::Null) => None,
        Some(v) => Some(get_str(v, "$.base_field")?.to_string()),
    };
    let provenance = match obj.get("provenance") {
        None | Some(Value::Null) => None,
        Some(v) => Some(get_str(v, "$.provenance")?.to_string()),
    };

    let data =
        FusionData::new(labels, coefficients, dual, eps, endo_degree, unit).map_err(|e| schema("$", e.to_string()))?;
    let galois = (any_tag || group.is_some() || center_degree.is_some()).then_some(GaloisAnnotation {
        tags,
        group,
        center_degree,
    });
    Ok(FusionFile {
        name,
        data,
        galois,
        base_field,
        provenance,
    })
}

fn parse_group(g: &Value) -> Result<FiniteGroup> {
    let go = get_object(g, "$.group")?;
    check_keys(go, &["elements", "table"], "$.group")?;
    let elements: Vec<String> = go
        .get("elements")
        .and_then(Value::as_array)
        .ok_or_else(|| schema("$.group.elements", "expected an array of labels"))?
        .iter()
        .enumerate()
        .map(|(i, e)| get_str(e, &format!("$.group.elements[{i}]")).map(String::from))
        .collect::<Result<_>>()?;
    let rows = go
        .get("table")
        .and_then(Value::as_array)
        .ok_or_else(|| schema("$.group.table", "expected an array of rows"))?;
    let mut table = Vec::with_capacity(rows.len());
    for (i, row) in rows.iter().enumerate() {
        let p = format!("$.group.table[{i}]");
        let row = row.as_array().ok_or_else(|| schema(&p, "expected an array"))?;
        let mut out = Vec::with_capacity(row.len());
        for (j, e) in row.iter().enumerate() {
            let pj = format!("{p}[{j}]");
            let l = get_str(e, &pj)?;
            out.push(
                elements
                    .iter()
                    .position(|x| x == l)
                    .ok_or_else(|| schema(&pj, format!("unknown group element `{l}`")))?,
            );
        }
        table.push(out);
    }
    FiniteGroup::new(elements, table).map_err(|e| schema("$.group", e.to_string()))
}

/// Parses a document and requires the structural axioms.
pub fn parse_fusion_file(text: &str) -> Result<FusionFile> {
    let file = parse_document(text)?;
    let report = check_structural(&file.data);
    if !report.passed() {
        return Err(FusionError::Structural(report.to_string()));
    }
    Ok(file)
}

fn multiplicity_value(m: &BigUint) -> Value {
    match m.to_u64() {
        Some(n) => json!(n),
        None => json!(m.to_string()),
    }
}

pub fn to_value(file: &FusionFile) -> Value {
    let data = &file.data;
    let r = data.rank();
    let mut order: Vec<usize> = (0..r).collect();
    order.sort_by(|&a, &b| data.label(a).cmp(data.label(b)));

    let simples: Vec<Value> = order
        .iter()
        .map(|&i| {
            let galois = match file.galois.as_ref().map(|g| &g.tags[i]) {
                None | Some(GaloisTag::Unknown) => Value::Null,
                Some(GaloisTag::Trivial) => json!("trivial"),
                Some(GaloisTag::Nontrivial) => json!("nontrivial"),
                Some(GaloisTag::Element(g)) => {
                    let group = file.galois.as_ref().unwrap().group.as_ref().unwrap();
                    json!({ "group_element": group.labels()[*g] })
                }
            };
            json!({
                "label": data.label(i),
                "endo_dim": data.eps(i),
                "dual": data.label(data.dual(i)),
                "galois": galois,
            })
        })
        .collect();

    let mut fusion = Map::new();
    for a in 0..r {
        for b in 0..r {
            let mut terms = Map::new();
            for c in 0..r {
                let m = data.n(a, b, c);
                if !m.is_zero() {
                    terms.insert(data.label(c).to_string(), multiplicity_value(m));
                }
            }
            if !terms.is_empty() {
                fusion.insert(format!("{}|{}", data.label(a), data.label(b)), Value::Object(terms));
            }
        }
    }

    let mut unit = Vec::new();
    for (&u, &m) in data.unit_multiset() {
        for _ in 0..m {
            unit.push(data.label(u).to_string());
        }
    }
    unit.sort();

    let mut obj = Map::new();
    obj.insert("name".into(), json!(file.name));
    obj.insert("endo_degree".into(), json!(data.endo_degree()));
    obj.insert("unit".into(), json!(unit));
    obj.insert("simples".into(), Value::Array(simples));
    obj.insert("fusion".into(), Value::Object(fusion));
    if let Some(g) = file.galois.as_ref().and_then(|g| g.group.as_ref()) {
        let table: Vec<Vec<&str>> = g
            .table()
            .iter()
            .map(|row| row.iter().map(|&c| g.labels()[c].as_str()).collect())
            .collect();
        obj.insert("group".into(), json!({ "elements": g.labels(), "table": table }));
    }
    if let Some(c) = file.galois.as_ref().and_then(|g| g.center_degree) {
        obj.insert("center_degree".into(), json!(c));
    }
    if let Some(f) = &file.base_field {
        obj.insert("base_field".into(), json!(f));
    }
    if let Some(p) = &file.provenance {
        obj.insert("provenance".into(), json!(p));
    }
    Value::Object(obj)
}

/// Canonical pretty-printed JSON with a trailing newline.
pub fn emit(file: &FusionFile) -> String {
    let mut s = serde_json::to_string_pretty(&to_value(file)).expect("serializable");
    s.push('\n');
    s
}
