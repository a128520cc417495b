//! Semiring morphisms, possibly twisted by an element `D` of the source, and
//! the dimension formulas attached to them.

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::fpengine::{AlgebraicNumber, FpEngine, FpOptions, Interval};
use crate::regular::{check_width, enclosures_agree, fpdim_category, regular_element};
use crate::semiring::{Element, FusionData};
use crate::validate::ValidationReport;
use crate::{FusionError, Result};

/// A map of based semirings given by its matrix: column `a` holds the image
/// of source simple `a` in the target basis. With a twist `D` the defining
/// identity is `f(x)f(y) = f(xDy)`.
#[derive(Clone, Debug)]
pub struct SemiringMorphism {
    source: FusionData,
    target: FusionData,
    matrix: Vec<Vec<BigUint>>,
    twist: Option<Element>,
}

impl SemiringMorphism {
    pub fn new(
        source: FusionData,
        target: FusionData,
        matrix: Vec<Vec<BigUint>>,
        twist: Option<Element>,
    ) -> Result<Self> {
        if matrix.len() != target.rank() || matrix.iter().any(|row| row.len() != source.rank()) {
            return Err(FusionError::InvalidData(format!(
                "morphism matrix must be {}x{}",
                target.rank(),
                source.rank()
            )));
        }
        if let Some(d) = &twist {
            // rejects elements of other data
            source.multiply(d, &source.unit_element())?;
        }
        Ok(Self {
            source,
            target,
            matrix,
            twist,
        })
    }

    /// Builds the matrix from the images of the source simples.
    pub fn from_images(
        source: FusionData,
        target: FusionData,
        images: &[Element],
        twist: Option<Element>,
    ) -> Result<Self> {
        if images.len() != source.rank() {
            return Err(FusionError::InvalidData(
                "one image per source simple is required".into(),
            ));
        }
        let matrix = (0..target.rank())
            .map(|b| images.iter().map(|img| img.coeff(b).clone()).collect())
            .collect();
        Self::new(source, target, matrix, twist)
    }

    pub fn identity(data: FusionData) -> Self {
        let r = data.rank();
        let matrix = (0..r)
            .map(|b| (0..r).map(|a| BigUint::from(u8::from(a == b))).collect())
            .collect();
        Self {
            source: data.clone(),
            target: data,
            matrix,
            twist: None,
        }
    }

    pub fn source(&self) -> &FusionData {
        &self.source
    }

    pub fn target(&self) -> &FusionData {
        &self.target
    }

    pub fn matrix(&self) -> &[Vec<BigUint>] {
        &self.matrix
    }

    pub fn twist(&self) -> Option<&Element> {
        self.twist.as_ref()
    }

    fn twist_or_unit(&self) -> Element {
        self.twist.clone().unwrap_or_else(|| self.source.unit_element())
    }

    pub fn apply(&self, x: &Element) -> Result<Element> {
        self.source.multiply(x, &self.source.unit_element())?;
        let coeffs = (0..self.target.rank()).map(|b| {
            self.matrix[b]
                .iter()
                .zip(x.coeffs())
                .map(|(m, c)| m * c)
                .sum::<BigUint>()
        });
        self.target.element(coeffs)
    }
}

/// Checks `f(x)f(y) = f(xDy)` on all pairs of simples, and `f(1) = 1` when
/// there is no twist.
pub fn check_homomorphism(f: &SemiringMorphism) -> Result<ValidationReport> {
    let src = &f.source;
    let tgt = &f.target;
    let d = f.twist_or_unit();
    let mut report = ValidationReport::default();
    if f.twist.is_none() {
        let one = f.apply(&src.unit_element())?;
        if one != tgt.unit_element() {
            report.push("unit", vec![], format!("f(1) = {} is not the unit", one.display(tgt)));
        }
    }
    let images: Vec<Element> = (0..src.rank())
        .map(|a| f.apply(&src.simple(a)))
        .collect::<Result<_>>()?;
    for x in 0..src.rank() {
        let xd = src.multiply(&src.simple(x), &d)?;
        for y in 0..src.rank() {
            let lhs = tgt.multiply(&images[x], &images[y])?;
            let rhs = f.apply(&src.multiply(&xd, &src.simple(y))?)?;
            if lhs != rhs {
                report.push(
                    "homomorphism",
                    vec![x, y],
                    format!(
                        "f(`{}`)f(`{}`) = {} but f(`{}`·D·`{}`) = {}",
                        src.label(x),
                        src.label(y),
                        lhs.display(tgt),
                        src.label(x),
                        src.label(y),
                        rhs.display(tgt)
                    ),
                );
            }
        }
    }
    Ok(report)
}

/// Every target simple appears in the image of the sum of all source simples.
pub fn check_dominant(f: &SemiringMorphism) -> Result<bool> {
    let img = f.apply(&f.source.sum_of_simples())?;
    Ok(img.coeffs().iter().all(|c| !c.is_zero()))
}

#[derive(Clone, Debug)]
pub struct TransportReport {
    pub report: ValidationReport,
    pub fpdim_twist: AlgebraicNumber,
    /// The regular-element equation is only meaningful for dominant maps.
    pub regular_equation_checked: bool,
}

/// Certifies `FPdim(f(x)) = FPdim(D)·FPdim(x)` on simples and, for dominant
/// maps, `f(R_A) = FPdim(D)·(FPdim(A)/FPdim(B))·R_B`.
pub fn verify_fpdim_transport(f: &SemiringMorphism, options: &FpOptions) -> Result<TransportReport> {
    let ea = FpEngine::new(&f.source, options.clone())?;
    let eb = FpEngine::new(&f.target, options.clone())?;
    let fpdim_twist = ea.fpdim_element(&f.twist_or_unit())?;
    let mut report = ValidationReport::default();

    for (x, dim) in ea.fpdims()?.iter().enumerate() {
        let image = eb.fpdim_element(&f.apply(&f.source.simple(x))?)?;
        let expected = fpdim_twist.mul(dim);
        if image != expected {
            report.push(
                "transport",
                vec![x],
                format!(
                    "FPdim(f(`{}`)) = {image} but FPdim(D)·FPdim(`{}`) = {expected}",
                    f.source.label(x),
                    f.source.label(x)
                ),
            );
        }
    }

    let regular_equation_checked = check_dominant(f)?;
    if regular_equation_checked {
        let w = check_width();
        let reg_a: Vec<Interval> = regular_element(&ea)?.iter().map(|a| a.enclosure(&w)).collect();
        let reg_b: Vec<Interval> = regular_element(&eb)?.iter().map(|a| a.enclosure(&w)).collect();
        let cat_a = fpdim_category(&ea)?.enclosure(&w);
        let cat_b = fpdim_category(&eb)?.enclosure(&w);
        let factor = fpdim_twist.enclosure(&w).mul(&cat_a);
        for (b, rb) in reg_b.iter().enumerate() {
            let mut image = Interval::point(BigRational::zero());
            for (a, ra) in reg_a.iter().enumerate() {
                let m = &f.matrix[b][a];
                if !m.is_zero() {
                    image = image.add(&ra.scale(&BigRational::from_integer(m.clone().into())));
                }
            }
            // compare after clearing the denominator FPdim(B)
            let lhs = image.mul(&cat_b);
            let rhs = factor.mul(rb);
            if !enclosures_agree(&lhs, &rhs) {
                report.push(
                    "regular-transport",
                    vec![b],
                    format!(
                        "coordinate `{}`: FPdim(B)·f(R_A) encloses {lhs}, FPdim(D)·FPdim(A)·R_B encloses {rhs}",
                        f.target.label(b)
                    ),
                );
            }
        }
    }
    Ok(TransportReport {
        report,
        fpdim_twist,
        regular_equation_checked,
    })
}

/// `FPdim(D)·(d_B/d_A)·(FPdim(A)/FPdim(B))·FPdim(X)`, the FP dimension of the
/// image of `X` under an adjoint.
pub fn adjoint_fpdim(
    fpdim_d: &BigRational,
    d_a: &BigRational,
    d_b: &BigRational,
    fpdim_a: &BigRational,
    fpdim_b: &BigRational,
    fpdim_x: &BigRational,
) -> Result<BigRational> {
    for (name, v) in [
        ("FPdim(D)", fpdim_d),
        ("d_A", d_a),
        ("d_B", d_b),
        ("FPdim(A)", fpdim_a),
        ("FPdim(B)", fpdim_b),
        ("FPdim(X)", fpdim_x),
    ] {
        if !v.is_positive() {
            return Err(FusionError::Domain(format!("{name} must be positive, got {v}")));
        }
    }
    Ok(fpdim_d * d_b / d_a * fpdim_a / fpdim_b * fpdim_x)
}

/// `m·n/dD`: FP dimension of a relative tensor product over `D`.
pub fn relative_tensor_fpdim(m: &BigRational, n: &BigRational, d_d: &BigRational) -> Result<BigRational> {
    if !d_d.is_positive() {
        return Err(FusionError::Domain(format!("FPdim(D) must be positive, got {d_d}")));
    }
    Ok(m * n / d_d)
}

/// Checks a supplied adjoint `G: B -> A` against [`adjoint_fpdim`] on every
/// simple `y` of `b`. Column `y` of `adjoint` is `G(y)` in the basis of `a`.
/// The comparison is exact: `d_A·FPdim(B)·FPdim(G y)` against
/// `d_B·FPdim(D)·FPdim(A)·FPdim(y)`.
pub fn check_adjoint_matrix(
    a: &FusionData,
    b: &FusionData,
    adjoint: &[Vec<BigUint>],
    fpdim_d: &AlgebraicNumber,
    options: &FpOptions,
) -> Result<ValidationReport> {
    if adjoint.len() != a.rank() || adjoint.iter().any(|row| row.len() != b.rank()) {
        return Err(FusionError::InvalidData(format!(
            "adjoint matrix must be {}x{}",
            a.rank(),
            b.rank()
        )));
    }
    if fpdim_d.compare_rational(&BigRational::zero()) != std::cmp::Ordering::Greater {
        return Err(FusionError::Domain(format!("FPdim(D) must be positive, got {fpdim_d}")));
    }
    let ea = FpEngine::new(a, options.clone())?;
    let eb = FpEngine::new(b, options.clone())?;
    let cat_a = fpdim_category(&ea)?;
    let cat_b = fpdim_category(&eb)?;
    let da = BigRational::from_integer(a.endo_degree().into());
    let db = BigRational::from_integer(b.endo_degree().into());
    let factor = fpdim_d.mul(&cat_a).scale(&db);
    let mut report = ValidationReport::default();
    for (y, fy) in eb.fpdims()?.iter().enumerate() {
        let image = a.element(adjoint.iter().map(|row| row[y].clone()))?;
        if image.is_zero() {
            report.push("adjoint", vec![y], format!("G(`{}`) is zero", b.label(y)));
            continue;
        }
        let lhs = ea.fpdim_element(&image)?.mul(&cat_b).scale(&da);
        let rhs = factor.mul(fy);
        if lhs != rhs {
            report.push(
                "adjoint",
                vec![y],
                format!(
                    "`{}`: d_A·FPdim(B)·FPdim(G y) = {lhs} but d_B·FPdim(D)·FPdim(A)·FPdim(y) = {rhs}",
                    b.label(y)
                ),
            );
        }
    }
    Ok(report)
}

#[derive(Clone, Debug)]
pub struct MoritaComparison {
    pub ratio_a: AlgebraicNumber,
    pub ratio_b: AlgebraicNumber,
    pub equal: bool,
}

/// Compares `FPdim/d`, a Morita invariant, exactly.
pub fn morita_ratio_equal(a: &FusionData, b: &FusionData, options: &FpOptions) -> Result<MoritaComparison> {
    let ratio = |data: &FusionData| -> Result<AlgebraicNumber> {
        let e = FpEngine::new(data, options.clone())?;
        let c = fpdim_category(&e)?;
        Ok(c.scale(&BigRational::new(1.into(), data.endo_degree().into())))
    };
    let ratio_a = ratio(a)?;
    let ratio_b = ratio(b)?;
    let equal = ratio_a == ratio_b;
    Ok(MoritaComparison {
        ratio_a,
        ratio_b,
        equal,
    })
}
