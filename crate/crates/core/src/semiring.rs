//! Fusion data and multiset arithmetic.
//!
//! Simples are indexed `0..rank` in order of declaration. Fusion coefficients
//! are stored densely as `N[i][j][k]`, the multiplicity of simple `k` in the
//! product `i * j`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::hash::{DefaultHasher, Hash, Hasher};

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::{FusionError, Result};

/// Immutable fusion-semiring data: basis labels, fusion tensor, duality,
/// endomorphism dimensions and the declared decomposition of the unit.
#[derive(Clone, PartialEq, Eq)]
pub struct FusionData {
    labels: Vec<String>,
    coefficients: Vec<BigUint>,
    dual: Vec<usize>,
    eps: Vec<u64>,
    endo_degree: u64,
    unit: BTreeMap<usize, u64>,
    fingerprint: u64,
}

impl fmt::Debug for FusionData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FusionData")
            .field("labels", &self.labels)
            .field("dual", &self.dual)
            .field("eps", &self.eps)
            .field("endo_degree", &self.endo_degree)
            .field("unit", &self.unit)
            .finish_non_exhaustive()
    }
}

impl FusionData {
    /// Builds fusion data from raw parts. Only shapes and ranges are checked
    /// here; the algebraic axioms are the job of [`crate::validate`].
    ///
    /// `coefficients` is indexed `[i][j][k]` with `k` fastest. `unit` maps
    /// each declared unit summand to its declared multiplicity.
    pub fn new(
        labels: Vec<String>,
        coefficients: Vec<BigUint>,
        dual: Vec<usize>,
        eps: Vec<u64>,
        endo_degree: u64,
        unit: BTreeMap<usize, u64>,
    ) -> Result<Self> {
        let r = labels.len();
        if r == 0 {
            return Err(FusionError::InvalidData("rank must be positive".into()));
        }
        let mut seen = HashMap::new();
        for (i, l) in labels.iter().enumerate() {
            if l.is_empty() {
                return Err(FusionError::InvalidData("empty label".into()));
            }
            if let Some(prev) = seen.insert(l.as_str(), i) {
                return Err(FusionError::InvalidData(format!(
                    "duplicate label `{l}` at positions {prev} and {i}"
                )));
            }
        }
        if coefficients.len() != r * r * r {
            return Err(FusionError::InvalidData(format!(
                "fusion tensor has {} entries, expected {}",
                coefficients.len(),
                r * r * r
            )));
        }
        if dual.len() != r || dual.iter().any(|&d| d >= r) {
            return Err(FusionError::InvalidData("dual map out of range".into()));
        }
        if eps.len() != r {
            return Err(FusionError::InvalidData("eps has wrong length".into()));
        }
        if let Some(i) = eps.iter().position(|&e| e == 0) {
            return Err(FusionError::InvalidData(format!(
                "endomorphism dimension of `{}` must be positive",
                labels[i]
            )));
        }
        if endo_degree == 0 {
            return Err(FusionError::InvalidData("endomorphism degree must be positive".into()));
        }
        if unit.is_empty() || unit.keys().any(|&u| u >= r) || unit.values().any(|&m| m == 0) {
            return Err(FusionError::InvalidData(
                "unit must be a nonempty set of simples".into(),
            ));
        }

        let mut hasher = DefaultHasher::new();
        labels.hash(&mut hasher);
        coefficients.hash(&mut hasher);
        dual.hash(&mut hasher);
        eps.hash(&mut hasher);
        endo_degree.hash(&mut hasher);
        unit.hash(&mut hasher);
        let fingerprint = hasher.finish();

        Ok(Self {
            labels,
            coefficients,
            dual,
            eps,
            endo_degree,
            unit,
            fingerprint,
        })
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| FusionError::UnknownLabel(label.to_string()))
    }

    /// Multiplicity of simple `k` in the product `i * j`.
    pub fn n(&self, i: usize, j: usize, k: usize) -> &BigUint {
        let r = self.rank();
        &self.coefficients[(i * r + j) * r + k]
    }

    pub fn dual(&self, i: usize) -> usize {
        self.dual[i]
    }

    pub fn dual_map(&self) -> &[usize] {
        &self.dual
    }

    /// `dim_E End(X_i)`.
    pub fn eps(&self, i: usize) -> u64 {
        self.eps[i]
    }

    pub fn eps_all(&self) -> &[u64] {
        &self.eps
    }

    /// `[E : K]` where `E = End(1)`.
    pub fn endo_degree(&self) -> u64 {
        self.endo_degree
    }

    /// Declared unit summands with their declared multiplicities.
    pub fn unit_multiset(&self) -> &BTreeMap<usize, u64> {
        &self.unit
    }

    /// The index set `O_0` of unit summands.
    pub fn unit_set(&self) -> Vec<usize> {
        self.unit.keys().copied().collect()
    }

    pub fn is_fusion(&self) -> bool {
        self.unit.len() == 1
    }

    /// The unit simple, or a `NotFusion` error for strictly multifusion data.
    pub fn unit_index(&self) -> Result<usize> {
        if self.is_fusion() {
            Ok(*self.unit.keys().next().expect("unit is nonempty"))
        } else {
            Err(FusionError::NotFusion(self.unit.len()))
        }
    }

    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    /// A copy with one fusion coefficient replaced.
    pub fn with_coefficient(&self, i: usize, j: usize, k: usize, value: BigUint) -> Self {
        let mut coefficients = self.coefficients.clone();
        let r = self.rank();
        coefficients[(i * r + j) * r + k] = value;
        Self::new(
            self.labels.clone(),
            coefficients,
            self.dual.clone(),
            self.eps.clone(),
            self.endo_degree,
            self.unit.clone(),
        )
        .expect("shape unchanged")
    }

    /// A copy with a different endomorphism dimension vector.
    pub fn with_eps(&self, eps: Vec<u64>) -> Result<Self> {
        Self::new(
            self.labels.clone(),
            self.coefficients.clone(),
            self.dual.clone(),
            eps,
            self.endo_degree,
            self.unit.clone(),
        )
    }

    /// A copy with a different endomorphism degree.
    pub fn with_endo_degree(&self, endo_degree: u64) -> Result<Self> {
        Self::new(
            self.labels.clone(),
            self.coefficients.clone(),
            self.dual.clone(),
            self.eps.clone(),
            endo_degree,
            self.unit.clone(),
        )
    }

    /// A copy with a different dual map.
    pub fn with_dual(&self, dual: Vec<usize>) -> Result<Self> {
        Self::new(
            self.labels.clone(),
            self.coefficients.clone(),
            dual,
            self.eps.clone(),
            self.endo_degree,
            self.unit.clone(),
        )
    }

    /// A copy with a different declared unit.
    pub fn with_unit(&self, unit: BTreeMap<usize, u64>) -> Result<Self> {
        Self::new(
            self.labels.clone(),
            self.coefficients.clone(),
            self.dual.clone(),
            self.eps.clone(),
            self.endo_degree,
            unit,
        )
    }

    pub fn zero(&self) -> Element {
        Element {
            ctx: self.fingerprint,
            coeffs: vec![BigUint::zero(); self.rank()],
        }
    }

    pub fn simple(&self, i: usize) -> Element {
        let mut e = self.zero();
        e.coeffs[i] = BigUint::one();
        e
    }

    pub fn simple_by_label(&self, label: &str) -> Result<Element> {
        Ok(self.simple(self.index_of(label)?))
    }

    pub fn element<I, T>(&self, coeffs: I) -> Result<Element>
    where
        I: IntoIterator<Item = T>,
        T: Into<BigUint>,
    {
        let coeffs: Vec<BigUint> = coeffs.into_iter().map(Into::into).collect();
        if coeffs.len() != self.rank() {
            return Err(FusionError::InvalidData(format!(
                "element has {} coefficients, rank is {}",
                coeffs.len(),
                self.rank()
            )));
        }
        Ok(Element {
            ctx: self.fingerprint,
            coeffs,
        })
    }

    /// Element from `(label, multiplicity)` pairs.
    pub fn element_from_labels(&self, terms: &[(&str, u64)]) -> Result<Element> {
        let mut e = self.zero();
        for &(l, m) in terms {
            e.coeffs[self.index_of(l)?] += m;
        }
        Ok(e)
    }

    /// The declared unit as an element, multiplicities included.
    pub fn unit_element(&self) -> Element {
        let mut e = self.zero();
        for (&i, &m) in &self.unit {
            e.coeffs[i] = BigUint::from(m);
        }
        e
    }

    /// Sum of all simples.
    pub fn sum_of_simples(&self) -> Element {
        Element {
            ctx: self.fingerprint,
            coeffs: vec![BigUint::one(); self.rank()],
        }
    }

    fn check_ctx(&self, e: &Element) -> Result<()> {
        if e.ctx == self.fingerprint && e.coeffs.len() == self.rank() {
            Ok(())
        } else {
            Err(FusionError::MismatchedContext)
        }
    }

    /// Product of two basis elements as an element.
    pub fn multiply_simples(&self, i: usize, j: usize) -> Element {
        let r = self.rank();
        let start = (i * r + j) * r;
        Element {
            ctx: self.fingerprint,
            coeffs: self.coefficients[start..start + r].to_vec(),
        }
    }

    /// Bilinear extension of the fusion tensor.
    pub fn multiply(&self, a: &Element, b: &Element) -> Result<Element> {
        self.check_ctx(a)?;
        self.check_ctx(b)?;
        let r = self.rank();
        let mut out = vec![BigUint::zero(); r];
        for (i, ai) in a.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (j, bj) in b.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                let w = ai * bj;
                let start = (i * r + j) * r;
                for (k, n) in self.coefficients[start..start + r].iter().enumerate() {
                    if !n.is_zero() {
                        out[k] += &w * n;
                    }
                }
            }
        }
        Ok(Element {
            ctx: self.fingerprint,
            coeffs: out,
        })
    }

    pub fn compare(&self, a: &Element, b: &Element) -> Result<Comparison> {
        self.check_ctx(a)?;
        self.check_ctx(b)?;
        let leq = a.coeffs.iter().zip(&b.coeffs).all(|(x, y)| x <= y);
        let geq = a.coeffs.iter().zip(&b.coeffs).all(|(x, y)| x >= y);
        let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x.min(y).clone()).collect();
        Ok(Comparison {
            leq,
            geq,
            intersection: Element {
                ctx: self.fingerprint,
                coeffs,
            },
        })
    }

    pub fn dual_element(&self, a: &Element) -> Result<Element> {
        self.check_ctx(a)?;
        let mut out = self.zero();
        for (i, c) in a.coeffs.iter().enumerate() {
            out.coeffs[self.dual[i]] += c;
        }
        Ok(out)
    }

    /// Verifies the declared unit: each summand has multiplicity one, the
    /// summands are orthogonal idempotents, and their sum is a two-sided
    /// identity. Returns `O_0` on success.
    pub fn unit_decomposition(&self) -> Result<Vec<usize>> {
        for (&b, &m) in &self.unit {
            if m != 1 {
                return Err(FusionError::Structural(format!(
                    "unit summand `{}` declared with multiplicity {m}, expected 1",
                    self.labels[b]
                )));
            }
        }
        let units = self.unit_set();
        for &a in &units {
            for &b in &units {
                let prod = self.multiply_simples(a, b);
                let expected = if a == b { self.simple(a) } else { self.zero() };
                if prod != expected {
                    return Err(FusionError::Structural(format!(
                        "unit summands `{}`·`{}` = {} but expected {}",
                        self.labels[a],
                        self.labels[b],
                        prod.display(self),
                        expected.display(self)
                    )));
                }
            }
        }
        let one = self.unit_element();
        for x in 0..self.rank() {
            let sx = self.simple(x);
            let left = self.multiply(&one, &sx)?;
            let right = self.multiply(&sx, &one)?;
            if left != sx || right != sx {
                return Err(FusionError::Structural(format!(
                    "declared unit does not act as identity on `{}`",
                    self.labels[x]
                )));
            }
        }
        Ok(units)
    }

    /// `dim_K Hom(a, b) = sum_i a_i b_i d eps_i`. Fusion data only.
    pub fn pairing(&self, a: &Element, b: &Element) -> Result<BigUint> {
        self.check_ctx(a)?;
        self.check_ctx(b)?;
        self.unit_index()?;
        let d = BigUint::from(self.endo_degree);
        Ok(a.coeffs
            .iter()
            .zip(&b.coeffs)
            .zip(&self.eps)
            .map(|((x, y), &e)| x * y * BigUint::from(e) * &d)
            .sum())
    }
}

/// Result of comparing two multisets in the partial order `a <= b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comparison {
    pub leq: bool,
    pub geq: bool,
    pub intersection: Element,
}

/// A finitely supported nonnegative combination of simples.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Element {
    ctx: u64,
    coeffs: Vec<BigUint>,
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| format!("{i}:{c}"))
            .collect();
        write!(f, "{{{}}}", terms.join(", "))
    }
}

impl Element {
    pub fn coeffs(&self) -> &[BigUint] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &BigUint {
        &self.coeffs[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, _)| i)
    }

    pub fn add(&self, other: &Element) -> Result<Element> {
        if self.ctx != other.ctx {
            return Err(FusionError::MismatchedContext);
        }
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(Element { ctx: self.ctx, coeffs })
    }

    pub fn scale(&self, k: &BigUint) -> Element {
        Element {
            ctx: self.ctx,
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    /// Whether `self <= other` coordinatewise. Panics on mismatched rank.
    pub fn leq(&self, other: &Element) -> bool {
        assert_eq!(self.coeffs.len(), other.coeffs.len());
        self.coeffs.iter().zip(&other.coeffs).all(|(a, b)| a <= b)
    }

    /// `{label:coeff, ...}` in basis order.
    pub fn display(&self, data: &FusionData) -> String {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| format!("{}:{c}", data.label(i)))
            .collect();
        format!("{{{}}}", terms.join(", "))
    }
}

/// Incremental construction of fusion data from labelled product rules.
pub struct FusionBuilder {
    labels: Vec<String>,
    rules: BTreeMap<(usize, usize), Vec<(usize, u64)>>,
    dual: Vec<Option<usize>>,
    eps: Vec<u64>,
    endo_degree: u64,
    unit: Vec<String>,
    error: Option<FusionError>,
}

impl FusionBuilder {
    pub fn new<S: AsRef<str>>(labels: &[S]) -> Self {
        let labels: Vec<String> = labels.iter().map(|s| s.as_ref().to_string()).collect();
        let r = labels.len();
        Self {
            unit: labels.first().cloned().into_iter().collect(),
            labels,
            rules: BTreeMap::new(),
            dual: vec![None; r],
            eps: vec![1; r],
            endo_degree: 1,
            error: None,
        }
    }

    fn idx(&mut self, label: &str) -> usize {
        match self.labels.iter().position(|l| l == label) {
            Some(i) => i,
            None => {
                self.error.get_or_insert(FusionError::UnknownLabel(label.to_string()));
                0
            }
        }
    }

    pub fn endo_degree(mut self, d: u64) -> Self {
        self.endo_degree = d;
        self
    }

    pub fn eps(mut self, label: &str, e: u64) -> Self {
        let i = self.idx(label);
        self.eps[i] = e;
        self
    }

    /// Declares `a` and `b` dual to each other.
    pub fn dual(mut self, a: &str, b: &str) -> Self {
        let (i, j) = (self.idx(a), self.idx(b));
        self.dual[i] = Some(j);
        self.dual[j] = Some(i);
        self
    }

    pub fn unit(mut self, labels: &[&str]) -> Self {
        self.unit = labels.iter().map(|s| s.to_string()).collect();
        self
    }

    /// Sets `a * b` to the given combination.
    pub fn product(mut self, a: &str, b: &str, result: &[(&str, u64)]) -> Self {
        let key = (self.idx(a), self.idx(b));
        let terms = result.iter().map(|&(l, m)| (self.idx(l), m)).collect();
        self.rules.insert(key, terms);
        self
    }

    /// Finishes the data. When the unit is a single simple, products with it
    /// that were not given explicitly default to the unit law. Simples with
    /// no declared dual are self-dual.
    pub fn build(self) -> Result<FusionData> {
        if let Some(e) = self.error {
            return Err(e);
        }
        let r = self.labels.len();
        let mut unit = BTreeMap::new();
        for l in &self.unit {
            let i = self
                .labels
                .iter()
                .position(|x| x == l)
                .ok_or_else(|| FusionError::UnknownLabel(l.clone()))?;
            *unit.entry(i).or_insert(0) += 1;
        }
        let mut coefficients = vec![BigUint::zero(); r * r * r];
        if unit.len() == 1 {
            let u = *unit.keys().next().unwrap();
            for x in 0..r {
                coefficients[(u * r + x) * r + x] = BigUint::one();
                coefficients[(x * r + u) * r + x] = BigUint::one();
            }
        }
        for (&(a, b), terms) in &self.rules {
            let start = (a * r + b) * r;
            for c in &mut coefficients[start..start + r] {
                *c = BigUint::zero();
            }
            for &(k, m) in terms {
                coefficients[start + k] += m;
            }
        }
        let dual = self.dual.iter().enumerate().map(|(i, d)| d.unwrap_or(i)).collect();
        FusionData::new(self.labels, coefficients, dual, self.eps, self.endo_degree, unit)
    }
}
