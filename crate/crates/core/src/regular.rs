//! The regular element and the Frobenius-Perron dimension of a category.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::fpengine::{
    isolate_max_real_root, left_mult_matrix_rational, AlgebraicNumber, FpEngine, Interval, RationalPolynomial,
};
use crate::semiring::FusionData;
use crate::validate::{check_eps_consistency, ValidationReport};
use crate::{FusionError, Result};

/// Interval width used for inexact comparisons, `10^-12`.
pub fn check_width() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(10u64.pow(12)))
}

/// Pass threshold for inexact comparisons, `10^-9`.
pub fn tolerance() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(10u64.pow(9)))
}

/// Two enclosures agree: exactly when both are points, otherwise when every
/// pair of enclosed values is within [`tolerance`].
pub fn enclosures_agree(a: &Interval, b: &Interval) -> bool {
    if a.is_point() && b.is_point() {
        a == b
    } else {
        a.distance_bound(b) < tolerance()
    }
}

fn rational(n: u64) -> BigRational {
    BigRational::from_integer(n.into())
}

fn require_eps_consistent(data: &FusionData) -> Result<()> {
    let report = check_eps_consistency(data)?;
    if report.passed() {
        Ok(())
    } else {
        Err(FusionError::Structural(report.to_string()))
    }
}

/// Coefficient of `X` is `FPdim(X)/eps[X]`.
pub fn regular_element(engine: &FpEngine) -> Result<Vec<AlgebraicNumber>> {
    let data = engine.data();
    require_eps_consistent(data)?;
    let dims = engine.fpdims()?;
    Ok(dims
        .iter()
        .enumerate()
        .map(|(i, a)| a.scale(&BigRational::new(1.into(), data.eps(i).into())))
        .collect())
}

/// The rational element `s = sum_x x·dual(x)/eps[x]`, whose left
/// multiplication matrix has the regular element as Perron eigenvector.
pub fn regular_generator(data: &FusionData) -> Vec<BigRational> {
    let r = data.rank();
    let mut s = vec![BigRational::zero(); r];
    for x in 0..r {
        let w = BigRational::new(1.into(), data.eps(x).into());
        let prod = data.multiply_simples(x, data.dual(x));
        for (k, c) in prod.coeffs().iter().enumerate() {
            if !c.is_zero() {
                s[k] += &w * BigRational::from_integer(c.clone().into());
            }
        }
    }
    s
}

/// `sum_x FPdim(x)^2/eps[x]`, as the Perron root of `L_s`.
pub fn fpdim_category(engine: &FpEngine) -> Result<AlgebraicNumber> {
    let data = engine.data();
    require_eps_consistent(data)?;
    let m = left_mult_matrix_rational(data, &regular_generator(data));
    isolate_max_real_root(&m.char_poly(), &engine.options().width)
}

/// The same quantity summed term by term over certified enclosures.
pub fn fpdim_category_by_summation(engine: &FpEngine, width: &BigRational) -> Result<Interval> {
    let data = engine.data();
    let mut total = Interval::point(BigRational::zero());
    for (i, a) in engine.fpdims()?.iter().enumerate() {
        let e = a.enclosure(width);
        total = total.add(&e.mul(&e).scale(&BigRational::new(1.into(), data.eps(i).into())));
    }
    Ok(total)
}

/// Checks `x·R = FPdim(x)·R` coordinatewise for every simple `x`.
pub fn verify_regular_eigenproperty(engine: &FpEngine) -> Result<ValidationReport> {
    let data = engine.data();
    let reg = regular_element(engine)?;
    let dims = engine.fpdims()?;
    let width = check_width();
    let reg_i: Vec<Interval> = reg.iter().map(|a| a.enclosure(&width)).collect();
    let r = data.rank();
    let mut report = ValidationReport::default();
    for (x, dim) in dims.iter().enumerate() {
        let dim_i = dim.enclosure(&width);
        for k in 0..r {
            let mut lhs = Interval::point(BigRational::zero());
            for (j, rj) in reg_i.iter().enumerate() {
                let n = data.n(x, j, k);
                if !n.is_zero() {
                    lhs = lhs.add(&rj.scale(&BigRational::from_integer(n.clone().into())));
                }
            }
            let rhs = dim_i.mul(&reg_i[k]);
            if !enclosures_agree(&lhs, &rhs) {
                report.push(
                    "eigen",
                    vec![x, k],
                    format!(
                        "coordinate `{}` of `{}`·R is {lhs} but FPdim(`{}`)·R gives {rhs}",
                        data.label(k),
                        data.label(x),
                        data.label(x)
                    ),
                );
            }
        }
    }
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegralityCertificate {
    pub fpdim: AlgebraicNumber,
    pub min_poly: RationalPolynomial,
    pub is_algebraic_integer: bool,
}

pub fn certify_integrality(engine: &FpEngine) -> Result<IntegralityCertificate> {
    let fpdim = fpdim_category(engine)?;
    let min_poly = fpdim.min_poly().clone();
    let is_algebraic_integer = min_poly.has_integer_coeffs();
    Ok(IntegralityCertificate {
        fpdim,
        min_poly,
        is_algebraic_integer,
    })
}

/// `x·dual(x)` is exactly the unit.
pub fn is_invertible(data: &FusionData, x: usize) -> bool {
    data.multiply_simples(x, data.dual(x)) == data.unit_element()
}

/// Cross-checks invertibility against `FPdim(x) = 1` for every simple.
pub fn check_invertibility(engine: &FpEngine) -> Result<ValidationReport> {
    let data = engine.data();
    let mut report = ValidationReport::default();
    for (x, dim) in engine.fpdims()?.iter().enumerate() {
        let inv = is_invertible(data, x);
        let unit_dim = dim.as_rational() == Some(rational(1));
        if inv != unit_dim {
            report.push(
                "invertibility",
                vec![x],
                format!("`{}` is invertible: {inv}, but FPdim is {dim}", data.label(x)),
            );
        }
    }
    Ok(report)
}
