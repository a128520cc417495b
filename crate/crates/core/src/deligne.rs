//! Real Deligne products at the level of simple objects.
//!
//! Over the reals every simple has endomorphism algebra `R`, `C` or `H`, and
//! the simples of a Deligne product are read off from how these algebras
//! tensor together.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::semiring::FusionData;
use crate::validate::ValidationReport;
use crate::{FusionError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DivisionType {
    Real,
    Complex,
    Quaternion,
}

impl DivisionType {
    pub const ALL: [DivisionType; 3] = [DivisionType::Real, DivisionType::Complex, DivisionType::Quaternion];

    /// Real dimension.
    pub fn dim(self) -> u64 {
        match self {
            DivisionType::Real => 1,
            DivisionType::Complex => 2,
            DivisionType::Quaternion => 4,
        }
    }

    pub fn from_dim(dim: u64) -> Option<Self> {
        match dim {
            1 => Some(DivisionType::Real),
            2 => Some(DivisionType::Complex),
            4 => Some(DivisionType::Quaternion),
            _ => None,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            DivisionType::Real => "R",
            DivisionType::Complex => "C",
            DivisionType::Quaternion => "H",
        }
    }
}

impl fmt::Display for DivisionType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl FromStr for DivisionType {
    type Err = FusionError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "R" | "REAL" | "real" => Ok(DivisionType::Real),
            "C" | "COMPLEX" | "complex" => Ok(DivisionType::Complex),
            "H" | "QUATERNION" | "quaternion" => Ok(DivisionType::Quaternion),
            other => Err(FusionError::InvalidData(format!("unknown division type `{other}`"))),
        }
    }
}

/// One block of `A ⊗_R B`: `count` distinct simple summands of type `ty`,
/// each occurring `multiplicity` times.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TensorCell {
    pub ty: DivisionType,
    pub multiplicity: u64,
    pub count: u64,
}

/// Decomposition of the tensor product of two real division algebras.
pub fn tensor_types(a: DivisionType, b: DivisionType) -> Vec<TensorCell> {
    use DivisionType::*;
    let cell = |ty, multiplicity, count| {
        vec![TensorCell {
            ty,
            multiplicity,
            count,
        }]
    };
    match (a, b) {
        (Real, t) | (t, Real) => cell(t, 1, 1),
        (Complex, Complex) => cell(Complex, 1, 2),
        (Complex, Quaternion) | (Quaternion, Complex) => cell(Complex, 2, 1),
        (Quaternion, Quaternion) => cell(Real, 4, 1),
    }
}

/// `dim A · dim B` equals the dimension of the algebra described by the
/// table cell, a product of `count` copies of `M_multiplicity(ty)`.
pub fn check_dimension(a: DivisionType, b: DivisionType) -> bool {
    let total: u64 = tensor_types(a, b)
        .iter()
        .map(|c| c.count * c.multiplicity * c.multiplicity * c.ty.dim())
        .sum();
    total == a.dim() * b.dim()
}

/// Simple objects of a semisimple real category with their division types.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemisimpleDesc {
    simples: Vec<(String, DivisionType)>,
}

impl SemisimpleDesc {
    pub fn new(simples: Vec<(String, DivisionType)>) -> Result<Self> {
        let mut seen = HashSet::new();
        for (l, _) in &simples {
            if !seen.insert(l.as_str()) {
                return Err(FusionError::InvalidData(format!("duplicate label `{l}`")));
            }
        }
        Ok(Self { simples })
    }

    /// Division types from `d·eps`, the real dimension of each endomorphism
    /// algebra. Only the base field of real numbers is supported.
    pub fn from_fusion_data(data: &FusionData, base_field: &str) -> Result<Self> {
        if !matches!(base_field, "R" | "real" | "reals") {
            return Err(FusionError::UnsupportedField(format!(
                "division types are only classified over the reals, not `{base_field}`"
            )));
        }
        let simples = (0..data.rank())
            .map(|i| {
                let dim = data.endo_degree() * data.eps(i);
                DivisionType::from_dim(dim)
                    .map(|t| (data.label(i).to_string(), t))
                    .ok_or_else(|| {
                        FusionError::InvalidData(format!(
                            "`{}` has a {dim}-dimensional endomorphism algebra, which is not a real division algebra",
                            data.label(i)
                        ))
                    })
            })
            .collect::<Result<_>>()?;
        Self::new(simples)
    }

    pub fn simples(&self) -> &[(String, DivisionType)] {
        &self.simples
    }

    pub fn len(&self) -> usize {
        self.simples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.simples.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductSimple {
    pub label: String,
    pub ty: DivisionType,
    /// How often this simple occurs in the naive product of the factors.
    pub multiplicity: u64,
    pub factors: (usize, usize),
}

/// Simples of `A ⊠ B`, pair by pair in order. Pairs that split into several
/// simples get labels `(x,y)[1]`, `(x,y)[2]`, ...
pub fn deligne_product(a: &SemisimpleDesc, b: &SemisimpleDesc) -> Vec<ProductSimple> {
    let mut out = Vec::new();
    for (i, (la, ta)) in a.simples.iter().enumerate() {
        for (j, (lb, tb)) in b.simples.iter().enumerate() {
            for cell in tensor_types(*ta, *tb) {
                for k in 0..cell.count {
                    let label = if cell.count == 1 {
                        format!("({la},{lb})")
                    } else {
                        format!("({la},{lb})[{}]", k + 1)
                    };
                    out.push(ProductSimple {
                        label,
                        ty: cell.ty,
                        multiplicity: cell.multiplicity,
                        factors: (i, j),
                    });
                }
            }
        }
    }
    out
}

/// A finite-dimensional algebra over the rationals given by structure
/// constants: `table[i][j]` is the product of basis elements `i` and `j`.
#[derive(Clone, Debug)]
pub struct StructureAlgebra {
    table: Vec<Vec<Vec<BigRational>>>,
}

impl StructureAlgebra {
    /// The complex numbers with basis `1, i`.
    pub fn complex() -> Self {
        let q = |n: i64| BigRational::from_integer(n.into());
        Self {
            table: vec![
                vec![vec![q(1), q(0)], vec![q(0), q(1)]],
                vec![vec![q(0), q(1)], vec![q(-1), q(0)]],
            ],
        }
    }

    pub fn dim(&self) -> usize {
        self.table.len()
    }

    /// Tensor product; basis element `a ⊗ b` has index `a + dim(self)·b`.
    pub fn tensor(&self, other: &Self) -> Self {
        let (n, m) = (self.dim(), other.dim());
        let idx = |a: usize, b: usize| a + n * b;
        let mut table = vec![vec![vec![BigRational::zero(); n * m]; n * m]; n * m];
        for a in 0..n {
            for b in 0..m {
                for c in 0..n {
                    for d in 0..m {
                        let out = &mut table[idx(a, b)][idx(c, d)];
                        for (e, x) in self.table[a][c].iter().enumerate() {
                            for (f, y) in other.table[b][d].iter().enumerate() {
                                if !x.is_zero() && !y.is_zero() {
                                    out[idx(e, f)] += x * y;
                                }
                            }
                        }
                    }
                }
            }
        }
        Self { table }
    }

    pub fn one(&self) -> Vec<BigRational> {
        let mut v = vec![BigRational::zero(); self.dim()];
        v[0] = BigRational::one();
        v
    }

    pub fn mul(&self, x: &[BigRational], y: &[BigRational]) -> Vec<BigRational> {
        let mut out = vec![BigRational::zero(); self.dim()];
        for (i, xi) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (j, yj) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                for (k, c) in self.table[i][j].iter().enumerate() {
                    if !c.is_zero() {
                        out[k] += xi * yj * c;
                    }
                }
            }
        }
        out
    }
}

/// `p = (1⊗1 - i⊗i)/2` and `q = (1⊗1 + i⊗i)/2` in `C ⊗_R C`.
pub fn cc_idempotents() -> (StructureAlgebra, Vec<BigRational>, Vec<BigRational>) {
    let alg = StructureAlgebra::complex().tensor(&StructureAlgebra::complex());
    let half = BigRational::new(1.into(), 2.into());
    let z = BigRational::zero();
    let p = vec![half.clone(), z.clone(), z.clone(), -half.clone()];
    let q = vec![half.clone(), z.clone(), z, half];
    (alg, p, q)
}

/// Checks `p² = p`, `q² = q`, `pq = qp = 0` and `p + q = 1` exactly.
pub fn verify_cc_idempotents() -> ValidationReport {
    let (alg, p, q) = cc_idempotents();
    let zero = vec![BigRational::zero(); alg.dim()];
    let sum: Vec<BigRational> = p.iter().zip(&q).map(|(a, b)| a + b).collect();
    let checks = [
        ("p^2 = p", alg.mul(&p, &p) == p),
        ("q^2 = q", alg.mul(&q, &q) == q),
        ("pq = 0", alg.mul(&p, &q) == zero),
        ("qp = 0", alg.mul(&q, &p) == zero),
        ("p + q = 1", sum == alg.one()),
    ];
    let mut report = ValidationReport::default();
    for (name, ok) in checks {
        if !ok {
            report.push("idempotent", vec![], format!("{name} fails"));
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use DivisionType::*;

    fn desc(items: &[(&str, DivisionType)]) -> SemisimpleDesc {
        SemisimpleDesc::new(items.iter().map(|(l, t)| (l.to_string(), *t)).collect()).unwrap()
    }

    #[test]
    fn table_cells() {
        assert_eq!(
            tensor_types(Complex, Complex),
            vec![TensorCell {
                ty: Complex,
                multiplicity: 1,
                count: 2
            }]
        );
        assert_eq!(
            tensor_types(Quaternion, Quaternion),
            vec![TensorCell {
                ty: Real,
                multiplicity: 4,
                count: 1
            }]
        );
        assert_eq!(
            tensor_types(Real, Quaternion),
            vec![TensorCell {
                ty: Quaternion,
                multiplicity: 1,
                count: 1
            }]
        );
        for a in DivisionType::ALL {
            for b in DivisionType::ALL {
                assert_eq!(tensor_types(a, b), tensor_types(b, a));
                assert!(check_dimension(a, b));
            }
        }
    }

    #[test]
    fn products() {
        let c = desc(&[("1", Complex)]);
        let cc = deligne_product(&c, &c);
        assert_eq!(cc.len(), 2);
        assert!(cc.iter().all(|s| s.ty == Complex));
        assert_eq!(cc[1].label, "(1,1)[2]");

        let r = desc(&[("1", Real)]);
        let x = desc(&[("1", Real), ("v", Quaternion)]);
        let rx: Vec<_> = deligne_product(&r, &x).iter().map(|s| s.ty).collect();
        assert_eq!(rx, vec![Real, Quaternion]);

        let q8 = desc(&[("1", Real), ("a", Real), ("b", Real), ("c", Real), ("h", Quaternion)]);
        let prod = deligne_product(&q8, &c);
        assert_eq!(prod.len(), 5);
        assert!(prod.iter().all(|s| s.ty == Complex));
        assert_eq!(prod[4].multiplicity, 2);
    }

    #[test]
    fn idempotents() {
        assert!(verify_cc_idempotents().passed());
        let (alg, _, _) = cc_idempotents();
        // (i⊗i)^2 = 1⊗1
        let ii = vec![
            BigRational::zero(),
            BigRational::zero(),
            BigRational::zero(),
            BigRational::one(),
        ];
        assert_eq!(alg.mul(&ii, &ii), alg.one());
    }

    #[test]
    fn duplicate_labels_and_fields() {
        assert!(SemisimpleDesc::new(vec![("x".into(), Real), ("x".into(), Complex)]).is_err());
        let d = crate::semiring::FusionBuilder::new(&["1"])
            .endo_degree(2)
            .build()
            .unwrap();
        assert_eq!(
            SemisimpleDesc::from_fusion_data(&d, "R").unwrap().simples()[0].1,
            Complex
        );
        assert!(matches!(
            SemisimpleDesc::from_fusion_data(&d, "Q"),
            Err(FusionError::UnsupportedField(_))
        ));
    }
}
