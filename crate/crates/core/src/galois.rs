//! Galois annotations on fusion data and the Drinfeld-center dimension
//! prediction.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::fpengine::{AlgebraicNumber, FpEngine, FpOptions};
use crate::regular::fpdim_category;
use crate::semiring::FusionData;
use crate::{FusionError, Result};

/// A finite group given by its multiplication table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    labels: Vec<String>,
    table: Vec<Vec<usize>>,
    identity: usize,
}

impl FiniteGroup {
    /// `table[a][b]` is the index of `a·b`. The group axioms are checked.
    pub fn new(labels: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        let n = labels.len();
        if n == 0 {
            return Err(FusionError::InvalidData("a group has at least one element".into()));
        }
        if table.len() != n || table.iter().any(|row| row.len() != n || row.iter().any(|&c| c >= n)) {
            return Err(FusionError::InvalidData(format!(
                "group table must be {n}x{n} with entries below {n}"
            )));
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(FusionError::InvalidData(format!(
                            "group table is not associative at ({}, {}, {})",
                            labels[a], labels[b], labels[c]
                        )));
                    }
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| table[e][a] == a && table[a][e] == a))
            .ok_or_else(|| FusionError::InvalidData("group table has no identity".into()))?;
        for a in 0..n {
            if !(0..n).any(|b| table[a][b] == identity) {
                return Err(FusionError::InvalidData(format!("`{}` has no inverse", labels[a])));
            }
        }
        Ok(Self {
            labels,
            table,
            identity,
        })
    }

    /// `Z/n` with elements `1, s, s^2, ...`.
    pub fn cyclic(n: usize, generator: &str) -> Self {
        let labels = (0..n)
            .map(|k| match k {
                0 => "1".to_string(),
                1 => generator.to_string(),
                _ => format!("{generator}^{k}"),
            })
            .collect();
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        Self {
            labels,
            table,
            identity: 0,
        }
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| FusionError::UnknownLabel(label.to_string()))
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        (0..self.order()).find(|&b| self.table[a][b] == self.identity).unwrap()
    }

    /// The subgroup generated by `gens`, as sorted indices.
    pub fn generated_subgroup(&self, gens: &[usize]) -> Vec<usize> {
        let mut members = vec![false; self.order()];
        members[self.identity] = true;
        let mut frontier = vec![self.identity];
        while let Some(h) = frontier.pop() {
            for &g in gens {
                let p = self.mul(h, g);
                if !members[p] {
                    members[p] = true;
                    frontier.push(p);
                }
            }
        }
        (0..self.order()).filter(|&i| members[i]).collect()
    }
}

/// How the two embeddings of the endomorphism field into `End(X)` relate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GaloisTag {
    Trivial,
    Nontrivial,
    /// The twisting automorphism, as an element of the attached group.
    Element(usize),
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaloisAnnotation {
    pub tags: Vec<GaloisTag>,
    pub group: Option<FiniteGroup>,
    /// User-supplied degree of the center's endomorphism field.
    pub center_degree: Option<u64>,
}

impl GaloisAnnotation {
    pub fn all_trivial(rank: usize) -> Self {
        Self {
            tags: vec![GaloisTag::Trivial; rank],
            group: None,
            center_degree: None,
        }
    }

    /// All simples are trivial when the endomorphism field is the base field;
    /// otherwise nothing is known.
    pub fn default_for(data: &FusionData) -> Self {
        if data.endo_degree() == 1 {
            Self::all_trivial(data.rank())
        } else {
            Self {
                tags: vec![GaloisTag::Unknown; data.rank()],
                group: None,
                center_degree: None,
            }
        }
    }

    /// `Some(true)` for Galois trivial, `Some(false)` for nontrivial, `None`
    /// when unknown.
    pub fn is_trivial(&self, i: usize) -> Option<bool> {
        match &self.tags[i] {
            GaloisTag::Trivial => Some(true),
            GaloisTag::Nontrivial => Some(false),
            GaloisTag::Element(g) => Some(self.group.as_ref().is_some_and(|gr| gr.identity() == *g)),
            GaloisTag::Unknown => None,
        }
    }

    pub fn validate(&self, data: &FusionData) -> Result<()> {
        if self.tags.len() != data.rank() {
            return Err(FusionError::InvalidData("one Galois tag per simple is required".into()));
        }
        for (i, t) in self.tags.iter().enumerate() {
            if let GaloisTag::Element(g) = t {
                match &self.group {
                    None => {
                        return Err(FusionError::InvalidData(format!(
                            "`{}` names a group element but no group is attached",
                            data.label(i)
                        )))
                    }
                    Some(gr) if *g >= gr.order() => {
                        return Err(FusionError::InvalidData(format!(
                            "group element of `{}` out of range",
                            data.label(i)
                        )))
                    }
                    _ => {}
                }
            }
        }
        for u in data.unit_set() {
            if self.is_trivial(u) == Some(false) {
                return Err(FusionError::Structural(format!(
                    "unit summand `{}` must be Galois trivial",
                    data.label(u)
                )));
            }
        }
        if self.center_degree == Some(0) {
            return Err(FusionError::InvalidData("center degree must be positive".into()));
        }
        Ok(())
    }
}

/// Group-ring data on a closed subset of a Galois group: the simple
/// bimodules `L_g` with `L_g ⊗ L_h = L_{gh}`.
pub fn from_galois_group(group: &FiniteGroup, subset: &[usize]) -> Result<(FusionData, GaloisAnnotation)> {
    let mut subset = subset.to_vec();
    subset.sort_unstable();
    subset.dedup();
    if subset.iter().any(|&g| g >= group.order()) {
        return Err(FusionError::InvalidData("subset element out of range".into()));
    }
    let pos: BTreeMap<usize, usize> = subset.iter().enumerate().map(|(i, &g)| (g, i)).collect();
    if !pos.contains_key(&group.identity()) {
        return Err(FusionError::InvalidData("subset must contain the identity".into()));
    }
    for &g in &subset {
        if !pos.contains_key(&group.inverse(g)) {
            return Err(FusionError::InvalidData(format!(
                "subset is not closed under inverses at `{}`",
                group.labels()[g]
            )));
        }
        for &h in &subset {
            if !pos.contains_key(&group.mul(g, h)) {
                return Err(FusionError::InvalidData(format!(
                    "subset is not closed under products at (`{}`, `{}`)",
                    group.labels()[g],
                    group.labels()[h]
                )));
            }
        }
    }
    let r = subset.len();
    let mut coefficients = vec![BigUint::zero(); r * r * r];
    for (i, &g) in subset.iter().enumerate() {
        for (j, &h) in subset.iter().enumerate() {
            coefficients[(i * r + j) * r + pos[&group.mul(g, h)]] = BigUint::one();
        }
    }
    let labels = subset.iter().map(|&g| group.labels()[g].clone()).collect();
    let dual = subset.iter().map(|&g| pos[&group.inverse(g)]).collect();
    let unit = BTreeMap::from([(pos[&group.identity()], 1)]);
    let data = FusionData::new(labels, coefficients, dual, vec![1; r], group.order() as u64, unit)?;
    let ann = GaloisAnnotation {
        tags: subset.iter().map(|&g| GaloisTag::Element(g)).collect(),
        group: Some(group.clone()),
        center_degree: None,
    };
    Ok((data, ann))
}

fn restrict(data: &FusionData, keep: &[usize]) -> Result<FusionData> {
    let pos: BTreeMap<usize, usize> = keep.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    let r = keep.len();
    let mut coefficients = vec![BigUint::zero(); r * r * r];
    for (i, &x) in keep.iter().enumerate() {
        for (j, &y) in keep.iter().enumerate() {
            for (k, &z) in keep.iter().enumerate() {
                coefficients[(i * r + j) * r + k] = data.n(x, y, z).clone();
            }
        }
    }
    let labels = keep.iter().map(|&x| data.label(x).to_string()).collect();
    let dual = keep.iter().map(|&x| pos[&data.dual(x)]).collect();
    let eps = keep.iter().map(|&x| data.eps(x)).collect();
    let unit = data.unit_multiset().iter().map(|(u, m)| (pos[u], *m)).collect();
    FusionData::new(labels, coefficients, dual, eps, data.endo_degree(), unit)
}

/// The full subring on the Galois trivial simples.
pub fn galois_trivial_subring(data: &FusionData, ann: &GaloisAnnotation) -> Result<FusionData> {
    ann.validate(data)?;
    let mut keep = Vec::new();
    for i in 0..data.rank() {
        match ann.is_trivial(i) {
            Some(true) => keep.push(i),
            Some(false) => {}
            None => {
                return Err(FusionError::InsufficientData(format!(
                    "Galois triviality of `{}` is not known",
                    data.label(i)
                )))
            }
        }
    }
    for &x in &keep {
        if !keep.contains(&data.dual(x)) {
            return Err(FusionError::Structural(format!(
                "inconsistent annotation: `{}` is trivial but its dual `{}` is not",
                data.label(x),
                data.label(data.dual(x))
            )));
        }
        for &y in &keep {
            if let Some(z) = data.multiply_simples(x, y).support().find(|z| !keep.contains(z)) {
                return Err(FusionError::Structural(format!(
                    "inconsistent annotation: `{}`·`{}` contains the nontrivial simple `{}`",
                    data.label(x),
                    data.label(y),
                    data.label(z)
                )));
            }
        }
    }
    restrict(data, &keep)
}

/// Degree of the endomorphism field of the Drinfeld center: `d/|H|` for the
/// subgroup `H` generated by the twisting automorphisms, or the user value.
pub fn center_endo_degree(data: &FusionData, ann: &GaloisAnnotation) -> Result<u64> {
    ann.validate(data)?;
    let d = data.endo_degree();
    let computed = if (0..data.rank()).all(|i| ann.is_trivial(i) == Some(true)) {
        Some(d)
    } else if let (Some(group), true) = (
        &ann.group,
        ann.tags
            .iter()
            .all(|t| matches!(t, GaloisTag::Element(_) | GaloisTag::Trivial)),
    ) {
        let gens: Vec<usize> = ann
            .tags
            .iter()
            .filter_map(|t| if let GaloisTag::Element(g) = t { Some(*g) } else { None })
            .collect();
        let h = group.generated_subgroup(&gens).len() as u64;
        if !d.is_multiple_of(h) {
            return Err(FusionError::Structural(format!(
                "generated subgroup has order {h}, which does not divide the endomorphism degree {d}"
            )));
        }
        Some(d / h)
    } else {
        None
    };
    match (computed, ann.center_degree) {
        (Some(c), Some(u)) if c != u => Err(FusionError::Structural(format!(
            "supplied center degree {u} contradicts the value {c} determined by the annotation"
        ))),
        (Some(c), _) => Ok(c),
        (None, Some(u)) => Ok(u),
        (None, None) => Err(FusionError::InsufficientData(
            "the center degree needs group-valued Galois data or a supplied value".into(),
        )),
    }
}

#[derive(Clone, Debug)]
pub struct CenterPrediction {
    pub center_degree: u64,
    pub image: FusionData,
    pub fpdim_image: AlgebraicNumber,
    pub fpdim_category: AlgebraicNumber,
    /// `(d_Z/d)·FPdim(im F)·FPdim(C)`.
    pub predicted: AlgebraicNumber,
    pub fpdim_squared: AlgebraicNumber,
    pub bound_ok: bool,
    pub equality: bool,
    pub all_trivial: bool,
}

impl CenterPrediction {
    /// Equality in the bound holds exactly when every simple is trivial.
    pub fn consistent(&self) -> bool {
        self.bound_ok && self.equality == self.all_trivial
    }
}

pub fn center_fpdim_prediction(
    data: &FusionData,
    ann: &GaloisAnnotation,
    options: &FpOptions,
) -> Result<CenterPrediction> {
    let center_degree = center_endo_degree(data, ann)?;
    let image = galois_trivial_subring(data, ann)?;
    let fpdim_category = fpdim_category(&FpEngine::new(data, options.clone())?)?;
    let fpdim_image = fpdim_category_of(&image, options)?;
    let ratio = BigRational::new(center_degree.into(), data.endo_degree().into());
    let predicted = fpdim_image.mul(&fpdim_category).scale(&ratio);
    let fpdim_squared = fpdim_category.mul(&fpdim_category);
    let order = predicted.compare(&fpdim_squared);
    let all_trivial = image.rank() == data.rank();
    Ok(CenterPrediction {
        center_degree,
        image,
        fpdim_image,
        fpdim_category,
        predicted,
        fpdim_squared,
        bound_ok: order.is_le(),
        equality: order.is_eq(),
        all_trivial,
    })
}

fn fpdim_category_of(data: &FusionData, options: &FpOptions) -> Result<AlgebraicNumber> {
    fpdim_category(&FpEngine::new(data, options.clone())?)
}

/// Compares the prediction with supplied fusion data for the center.
pub fn compare_with_center(prediction: &CenterPrediction, center: &FusionData, options: &FpOptions) -> Result<bool> {
    let actual = fpdim_category_of(center, options)?;
    Ok(actual == prediction.predicted && center.endo_degree() == prediction.center_degree)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::validate::check_all;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn group_axioms() {
        let g = FiniteGroup::cyclic(6, "s");
        assert_eq!(g.generated_subgroup(&[2]), vec![0, 2, 4]);
        assert_eq!(g.generated_subgroup(&[1]).len(), 6);
        assert_eq!(g.inverse(2), 4);
        let bad = FiniteGroup::new(vec!["a".into(), "b".into()], vec![vec![0, 0], vec![0, 0]]);
        assert!(bad.is_err());
    }

    #[test]
    fn cc_bim_like() {
        let g = FiniteGroup::cyclic(2, "c");
        let (data, ann) = from_galois_group(&g, &[0, 1]).unwrap();
        assert!(check_all(&data).passed());
        assert_eq!(data.endo_degree(), 2);
        assert_eq!(galois_trivial_subring(&data, &ann).unwrap().rank(), 1);
        assert_eq!(center_endo_degree(&data, &ann).unwrap(), 1);
        let p = center_fpdim_prediction(&data, &ann, &FpOptions::default()).unwrap();
        assert_eq!(p.predicted.as_rational(), Some(q(1, 1)));
        assert!(p.bound_ok && !p.equality && p.consistent());
    }

    #[test]
    fn seventh_roots() {
        let g = FiniteGroup::cyclic(6, "s");
        let (data, ann) = from_galois_group(&g, &[0, 2, 4]).unwrap();
        assert_eq!(data.rank(), 3);
        assert_eq!(center_endo_degree(&data, &ann).unwrap(), 2);
        let p = center_fpdim_prediction(&data, &ann, &FpOptions::default()).unwrap();
        assert_eq!(p.predicted.as_rational(), Some(q(1, 1)));
        assert_eq!(p.fpdim_squared.as_rational(), Some(q(9, 1)));
        assert!(!p.equality);
        assert!(from_galois_group(&g, &[0, 2]).is_err());
    }

    #[test]
    fn all_trivial_reaches_bound() {
        let g = FiniteGroup::cyclic(3, "g");
        let (data, _) = from_galois_group(&g, &[0, 1, 2]).unwrap();
        let ann = GaloisAnnotation::all_trivial(3);
        assert_eq!(center_endo_degree(&data, &ann).unwrap(), 3);
        assert_eq!(galois_trivial_subring(&data, &ann).unwrap(), data);
        let p = center_fpdim_prediction(&data, &ann, &FpOptions::default()).unwrap();
        assert!(p.equality && p.all_trivial && p.consistent());
        assert_eq!(p.predicted.as_rational(), Some(q(9, 1)));
    }

    #[test]
    fn insufficient_and_inconsistent() {
        let g = FiniteGroup::cyclic(2, "c");
        let (data, _) = from_galois_group(&g, &[0, 1]).unwrap();
        let ann = GaloisAnnotation {
            tags: vec![GaloisTag::Trivial, GaloisTag::Nontrivial],
            group: None,
            center_degree: None,
        };
        assert!(matches!(
            center_endo_degree(&data, &ann),
            Err(FusionError::InsufficientData(_))
        ));
        let with_user = GaloisAnnotation {
            center_degree: Some(1),
            ..ann
        };
        assert_eq!(center_endo_degree(&data, &with_user).unwrap(), 1);
        let bad_unit = GaloisAnnotation {
            tags: vec![GaloisTag::Nontrivial, GaloisTag::Trivial],
            group: None,
            center_degree: Some(1),
        };
        assert!(bad_unit.validate(&data).is_err());
    }
}
