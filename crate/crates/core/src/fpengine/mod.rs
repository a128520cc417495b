//! Exact Frobenius-Perron machinery.
//!
//! Characteristic polynomials are computed over the rationals, the largest
//! real root is isolated with Sturm sequences and bisection, and the result is
//! reported as an [`AlgebraicNumber`] carrying its minimal polynomial.

mod algebraic;
mod factor;
mod interval;
mod matrix;
mod poly;
mod sturm;

pub use algebraic::{default_width, AlgebraicNumber};
pub use factor::factor_rational;
pub use interval::Interval;
pub use matrix::RationalMatrix;
pub use poly::RationalPolynomial;
pub use sturm::SturmSequence;

use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::semiring::{Element, FusionData};
use crate::validate::{check_structural, check_transitivity};
use crate::{FusionError, Result};

pub(crate) fn rational_to_f64(q: &BigRational) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}

#[derive(Clone, Debug)]
pub struct FpOptions {
    /// Width of the certified interval reported for irrational values.
    pub width: BigRational,
    /// Skip the transitivity precondition.
    pub waive_transitivity: bool,
}

impl Default for FpOptions {
    fn default() -> Self {
        Self {
            width: default_width(),
            waive_transitivity: false,
        }
    }
}

impl FpOptions {
    /// Interval width `2^-bits`.
    pub fn with_precision_bits(bits: u32) -> Self {
        let width = BigRational::new(1.into(), num_bigint::BigInt::from(1) << bits);
        Self {
            width,
            ..Self::default()
        }
    }
}

/// Column `j` holds the coordinates of `x·b_j`.
pub fn left_mult_matrix(data: &FusionData, x: &Element) -> RationalMatrix {
    let coeffs: Vec<BigRational> = x
        .coeffs()
        .iter()
        .map(|c| BigRational::from_integer(c.clone().into()))
        .collect();
    left_mult_matrix_rational(data, &coeffs)
}

/// Left multiplication by a rational combination of simples.
pub fn left_mult_matrix_rational(data: &FusionData, x: &[BigRational]) -> RationalMatrix {
    let r = data.rank();
    let mut m = RationalMatrix::zeros(r);
    for (i, xi) in x.iter().enumerate() {
        if xi.is_zero() {
            continue;
        }
        for j in 0..r {
            for k in 0..r {
                let n = data.n(i, j, k);
                if !n.is_zero() {
                    let v = m.get(k, j) + xi * BigRational::from_integer(n.clone().into());
                    m.set(k, j, v);
                }
            }
        }
    }
    m
}

pub fn char_poly(m: &RationalMatrix) -> RationalPolynomial {
    m.char_poly()
}

/// The largest real root of `p`, certified by a Sturm count of one and
/// refined to `width`. Rational roots come back as exact points.
pub fn isolate_max_real_root(p: &RationalPolynomial, width: &BigRational) -> Result<AlgebraicNumber> {
    if p.degree().unwrap_or(0) == 0 {
        return Err(FusionError::Domain(format!("constant polynomial {p} has no roots")));
    }
    let sf = p.squarefree_part();
    let sturm = SturmSequence::new(&sf);
    if sturm.count_real() == 0 {
        return Err(FusionError::Domain(format!("{p} has no real root")));
    }
    let bound = sf.root_bound();
    let mut lo = -bound.clone();
    let mut hi = bound;
    let two = BigRational::from_integer(2.into());
    while sturm.count_half_open(&lo, &hi) > 1 {
        let mid = (&lo + &hi) / &two;
        if sturm.count_half_open(&mid, &hi) >= 1 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    // the largest root lies in (lo, hi]; make sure lo itself is not a root
    while sf.eval(&lo).is_zero() {
        let mid = (&lo + &hi) / &two;
        if sturm.count_half_open(&mid, &hi) == 1 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let mut alpha = AlgebraicNumber::from_isolating(&sf, lo, hi)?;
    alpha.refine(width);
    Ok(alpha)
}

pub fn min_poly(alpha: &AlgebraicNumber) -> RationalPolynomial {
    alpha.min_poly().clone()
}

pub fn refine(alpha: &AlgebraicNumber, width: &BigRational) -> AlgebraicNumber {
    alpha.refined(width)
}

/// FP dimensions of elements of validated fusion data.
#[derive(Clone, Debug)]
pub struct FpEngine<'a> {
    data: &'a FusionData,
    options: FpOptions,
}

impl<'a> FpEngine<'a> {
    /// Requires fusion data passing the structural checks, and transitivity
    /// unless waived.
    pub fn new(data: &'a FusionData, options: FpOptions) -> Result<Self> {
        data.unit_index()?;
        let structural = check_structural(data);
        if !structural.passed() {
            return Err(FusionError::Structural(structural.to_string()));
        }
        if !options.waive_transitivity {
            let t = check_transitivity(data);
            if !t.passed() {
                return Err(FusionError::NotTransitive(t.to_string()));
            }
        }
        Ok(Self { data, options })
    }

    pub fn data(&self) -> &'a FusionData {
        self.data
    }

    pub fn options(&self) -> &FpOptions {
        &self.options
    }

    pub fn left_mult_matrix(&self, x: &Element) -> RationalMatrix {
        left_mult_matrix(self.data, x)
    }

    /// Perron root of the left multiplication matrix of `x`.
    pub fn fpdim_element(&self, x: &Element) -> Result<AlgebraicNumber> {
        if x.coeffs().len() != self.data.rank() {
            return Err(FusionError::MismatchedContext);
        }
        let p = self.left_mult_matrix(x).char_poly();
        isolate_max_real_root(&p, &self.options.width)
    }

    pub fn fpdim_simple(&self, i: usize) -> Result<AlgebraicNumber> {
        self.fpdim_element(&self.data.simple(i))
    }

    pub fn fpdims(&self) -> Result<Vec<AlgebraicNumber>> {
        (0..self.data.rank()).map(|i| self.fpdim_simple(i)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semiring::FusionBuilder;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn rep_f2_z3() -> FusionData {
        FusionBuilder::new(&["1", "v"])
            .eps("v", 2)
            .product("v", "v", &[("1", 2), ("v", 1)])
            .build()
            .unwrap()
    }

    fn fib() -> FusionData {
        FusionBuilder::new(&["1", "x"])
            .product("x", "x", &[("1", 1), ("x", 1)])
            .build()
            .unwrap()
    }

    #[test]
    fn left_multiplication() {
        let d = rep_f2_z3();
        assert_eq!(
            left_mult_matrix(&d, &d.simple(1)),
            RationalMatrix::from_int_rows(&[vec![0, 2], vec![1, 1]])
        );
        assert_eq!(left_mult_matrix(&d, &d.simple(0)), RationalMatrix::identity(2));
        let f = fib();
        assert_eq!(
            left_mult_matrix(&f, &f.simple(1)),
            RationalMatrix::from_int_rows(&[vec![0, 1], vec![1, 1]])
        );
    }

    #[test]
    fn max_roots() {
        let w = default_width();
        let two = isolate_max_real_root(&RationalPolynomial::from_ints([-2, -1, 1]), &w).unwrap();
        assert_eq!(two.as_rational(), Some(q(2, 1)));
        let one = isolate_max_real_root(&RationalPolynomial::from_ints([-1, 1]), &w).unwrap();
        assert_eq!(one.as_rational(), Some(q(1, 1)));
        let phi = isolate_max_real_root(&RationalPolynomial::from_ints([-1, -1, 1]), &w).unwrap();
        assert!(phi.interval().width() <= w);
        assert!(phi.interval().lo() >= &q(1_618_033_988_749_894, 1_000_000_000_000_000));
        assert!(phi.interval().hi() <= &q(1_618_033_988_749_895, 1_000_000_000_000_000));
        assert!(isolate_max_real_root(&RationalPolynomial::from_ints([1, 0, 1]), &w).is_err());
        // repeated roots: (t-1)^2 (t-3)^3
        let p = &(&RationalPolynomial::from_ints([-1, 1]) * &RationalPolynomial::from_ints([-1, 1]))
            * &(&RationalPolynomial::from_ints([-3, 1])
                * &(&RationalPolynomial::from_ints([-3, 1]) * &RationalPolynomial::from_ints([-3, 1])));
        assert_eq!(isolate_max_real_root(&p, &w).unwrap().as_rational(), Some(q(3, 1)));
    }

    #[test]
    fn engine_fpdims() {
        let d = rep_f2_z3();
        let e = FpEngine::new(&d, FpOptions::default()).unwrap();
        assert_eq!(e.fpdim_simple(1).unwrap().as_rational(), Some(q(2, 1)));
        assert_eq!(e.fpdim_simple(0).unwrap().as_rational(), Some(q(1, 1)));
    }

    #[test]
    fn engine_refuses_non_transitive() {
        let d = FusionBuilder::new(&["1", "e"])
            .product("e", "e", &[("e", 1)])
            .build()
            .unwrap();
        assert!(matches!(
            FpEngine::new(&d, FpOptions::default()),
            Err(FusionError::Structural(_) | FusionError::NotTransitive(_))
        ));
    }
}
