//! Built-in fixtures.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::deligne::SemisimpleDesc;
use crate::galois::{from_galois_group, FiniteGroup, GaloisAnnotation, GaloisTag};
use crate::semiring::{FusionBuilder, FusionData};
use crate::{FusionError, Result};

#[derive(Clone, Debug)]
pub struct FixtureEntry {
    pub name: String,
    pub data: FusionData,
    pub galois: Option<GaloisAnnotation>,
    pub semisimple: Option<SemisimpleDesc>,
    /// Base field, when the fixture comes from a concrete category.
    pub base_field: Option<String>,
    pub provenance: String,
}

impl FixtureEntry {
    fn new(name: &str, data: FusionData, provenance: &str) -> Self {
        Self {
            name: name.to_string(),
            data,
            galois: None,
            semisimple: None,
            base_field: None,
            provenance: provenance.to_string(),
        }
    }

    fn over(mut self, field: &str) -> Self {
        if field == "R" {
            self.semisimple = SemisimpleDesc::from_fusion_data(&self.data, field).ok();
        }
        self.base_field = Some(field.to_string());
        self
    }

    fn with_galois(mut self, ann: GaloisAnnotation) -> Self {
        self.galois = Some(ann);
        self
    }

    /// The attached annotation, or the default one for the data.
    pub fn galois_or_default(&self) -> GaloisAnnotation {
        self.galois
            .clone()
            .unwrap_or_else(|| GaloisAnnotation::default_for(&self.data))
    }
}

const NAMES: [&str; 13] = [
    "vec_z2",
    "vec_z3",
    "vec_s3",
    "vec_r",
    "vec_q",
    "vec_c",
    "rep_r_q8",
    "rep_f2_z3",
    "fib",
    "cc_bim",
    "gal7",
    "jj_bim",
    "m2_vec",
];

/// Names of all built-in fixtures, in a fixed order.
pub fn list_builtins() -> Vec<&'static str> {
    NAMES.to_vec()
}

pub fn get_builtin(name: &str) -> Result<FixtureEntry> {
    let entry = match name {
        "vec_z2" => vec_group("vec_z2", &FiniteGroup::cyclic(2, "g")),
        "vec_z3" => vec_group("vec_z3", &FiniteGroup::cyclic(3, "g")),
        "vec_s3" => vec_group("vec_s3", &symmetric_group_3()),
        "vec_r" => rank_one("vec_r", 1, "Real vector spaces.").over("R"),
        "vec_q" => rank_one("vec_q", 1, "Rational vector spaces.").over("Q"),
        "vec_c" => rank_one("vec_c", 2, "Complex vector spaces regarded over the reals.")
            .over("R")
            .with_galois(GaloisAnnotation::all_trivial(1)),
        "rep_r_q8" => rep_r_q8(),
        "rep_f2_z3" => rep_f2_z3(),
        "fib" => fib(),
        "cc_bim" => cc_bim(),
        "gal7" => gal7(),
        "jj_bim" => jj_bim(),
        "m2_vec" => m2_vec(),
        other => return Err(FusionError::UnknownFixture(other.to_string())),
    };
    Ok(entry)
}

/// Pointed data of a finite group: one invertible simple per element.
pub fn vec_group(name: &str, group: &FiniteGroup) -> FixtureEntry {
    let all: Vec<usize> = (0..group.order()).collect();
    let (mut data, _) = from_galois_group(group, &all).expect("a group is closed in itself");
    data = data.with_endo_degree(1).expect("positive degree");
    FixtureEntry::new(
        name,
        data,
        "Group-graded vector spaces; fusion rules are the group law.",
    )
    .with_galois(GaloisAnnotation::all_trivial(group.order()))
}

fn symmetric_group_3() -> FiniteGroup {
    // permutations of {0,1,2} in one-line notation
    let perms: [[usize; 3]; 6] = [[0, 1, 2], [1, 2, 0], [2, 0, 1], [0, 2, 1], [2, 1, 0], [1, 0, 2]];
    let labels = ["1", "r", "r2", "s", "sr", "sr2"].map(String::from).to_vec();
    let compose = |a: &[usize; 3], b: &[usize; 3]| [a[b[0]], a[b[1]], a[b[2]]];
    let table = perms
        .iter()
        .map(|a| {
            perms
                .iter()
                .map(|b| perms.iter().position(|p| *p == compose(a, b)).unwrap())
                .collect()
        })
        .collect();
    FiniteGroup::new(labels, table).expect("valid group table")
}

fn rank_one(name: &str, d: u64, provenance: &str) -> FixtureEntry {
    let data = FusionBuilder::new(&["1"])
        .endo_degree(d)
        .build()
        .expect("rank one data");
    FixtureEntry::new(name, data, provenance)
}

fn rep_r_q8() -> FixtureEntry {
    let klein = [("a", "b", "c"), ("b", "c", "a"), ("c", "a", "b")];
    let mut b = FusionBuilder::new(&["1", "a", "b", "c", "h"]).eps("h", 4);
    for (x, y, z) in klein {
        b = b
            .product(x, x, &[("1", 1)])
            .product(x, y, &[(z, 1)])
            .product(y, x, &[(z, 1)]);
        b = b.product(x, "h", &[("h", 1)]).product("h", x, &[("h", 1)]);
    }
    let data = b
        .product("h", "h", &[("1", 4), ("a", 4), ("b", 4), ("c", 4)])
        .build()
        .expect("valid fixture");
    FixtureEntry::new(
        "rep_r_q8",
        data,
        "Real representations of the quaternion group: four one-dimensional characters through the Klein quotient and one four-dimensional representation with quaternionic endomorphisms. Products follow from complexification.",
    )
    .over("R")
}

fn two_one_x(x: &str) -> FusionData {
    FusionBuilder::new(&["1", x])
        .eps(x, 2)
        .product(x, x, &[("1", 2), (x, 1)])
        .build()
        .expect("valid fixture")
}

fn rep_f2_z3() -> FixtureEntry {
    FixtureEntry::new(
        "rep_f2_z3",
        two_one_x("v"),
        "Representations of Z/3 over the field with two elements: the trivial representation and a two-dimensional one with endomorphism field of order four.",
    )
    .over("F2")
}

fn fib() -> FixtureEntry {
    let data = FusionBuilder::new(&["1", "x"])
        .product("x", "x", &[("1", 1), ("x", 1)])
        .build()
        .expect("valid fixture");
    FixtureEntry::new("fib", data, "Fibonacci fusion rules x² = 1 + x, all simples split.")
}

fn cc_bim() -> FixtureEntry {
    let (data, ann) = from_galois_group(&FiniteGroup::cyclic(2, "C"), &[0, 1]).expect("closed subset");
    FixtureEntry::new(
        "cc_bim",
        data,
        "Bimodules over the complex numbers in real vector spaces: the trivial bimodule and the conjugating bimodule.",
    )
    .over("R")
    .with_galois(ann)
}

fn gal7() -> FixtureEntry {
    let (data, ann) = from_galois_group(&FiniteGroup::cyclic(6, "s"), &[0, 2, 4]).expect("closed subset");
    FixtureEntry::new(
        "gal7",
        data,
        "Bimodules over the seventh cyclotomic field twisted by the squares of a Galois generator; the center has the quadratic fixed field as endomorphisms.",
    )
    .over("Q")
    .with_galois(ann)
}

fn jj_bim() -> FixtureEntry {
    let ann = GaloisAnnotation {
        tags: vec![GaloisTag::Trivial, GaloisTag::Nontrivial],
        group: None,
        center_degree: Some(1),
    };
    FixtureEntry::new(
        "jj_bim",
        two_one_x("x").with_endo_degree(3).expect("positive degree"),
        "Bimodules over the real cube-root-of-two field: the unit and its normal closure X with X ⊗ X = 1 + 1 + X. The center is Morita equivalent to rational vector spaces.",
    )
    .over("Q")
    .with_galois(ann)
}

fn m2_vec() -> FixtureEntry {
    let labels: Vec<String> = ["E11", "E12", "E21", "E22"].map(String::from).to_vec();
    let idx = |i: usize, j: usize| 2 * i + j;
    let r = 4;
    let mut coefficients = vec![BigUint::zero(); r * r * r];
    for i in 0..2 {
        for j in 0..2 {
            for l in 0..2 {
                coefficients[(idx(i, j) * r + idx(j, l)) * r + idx(i, l)] = BigUint::one();
            }
        }
    }
    let dual = vec![idx(0, 0), idx(1, 0), idx(0, 1), idx(1, 1)];
    let unit = BTreeMap::from([(idx(0, 0), 1), (idx(1, 1), 1)]);
    let data = FusionData::new(labels, coefficients, dual, vec![1; 4], 1, unit).expect("valid shapes");
    FixtureEntry::new(
        "m2_vec",
        data,
        "Two-by-two matrices of vector spaces, a multifusion category whose unit E11 + E22 is not simple.",
    )
}
