use std::cmp::Ordering;
use std::fmt;

use nalgebra::DMatrix;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::factor::factor_rational;
use super::interval::Interval;
use super::matrix::RationalMatrix;
use super::poly::RationalPolynomial;
use super::sturm::SturmSequence;
use crate::{FusionError, Result};

/// A real algebraic number: its minimal polynomial together with an
/// isolating interval.
///
/// Rational values carry a linear polynomial and a point interval. Otherwise
/// the polynomial is irreducible of degree at least two, so it has no roots
/// at the (rational) endpoints and exactly one root strictly between them.
#[derive(Clone, Debug)]
pub struct AlgebraicNumber {
    min_poly: RationalPolynomial,
    interval: Interval,
}

impl AlgebraicNumber {
    pub fn from_rational(q: BigRational) -> Self {
        Self {
            min_poly: RationalPolynomial::linear_root(&q),
            interval: Interval::point(q),
        }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(n.into()))
    }

    /// The unique root of `p` in `[lo, hi]`. Fails unless `p` has exactly one
    /// distinct real root there.
    pub fn from_isolating(p: &RationalPolynomial, lo: BigRational, hi: BigRational) -> Result<Self> {
        if p.is_zero() || lo > hi {
            return Err(FusionError::Domain("invalid isolating data".into()));
        }
        let sf = p.squarefree_part();
        let roots = SturmSequence::new(&sf).count_closed(&lo, &hi);
        if roots != 1 {
            return Err(FusionError::Domain(format!(
                "{p} has {roots} distinct roots in [{lo}, {hi}], expected 1"
            )));
        }
        for f in factor_rational(&sf) {
            if f.degree() == Some(1) {
                let r = -f.coeff(0);
                if lo <= r && r <= hi {
                    return Ok(Self::from_rational(r));
                }
            } else if SturmSequence::new(&f).count_closed(&lo, &hi) == 1 {
                return Ok(Self {
                    min_poly: f,
                    interval: Interval::new(lo, hi),
                });
            }
        }
        unreachable!("the root lies on one irreducible factor")
    }

    pub fn min_poly(&self) -> &RationalPolynomial {
        &self.min_poly
    }

    pub fn degree(&self) -> usize {
        self.min_poly.degree().unwrap()
    }

    pub fn interval(&self) -> &Interval {
        &self.interval
    }

    pub fn is_rational(&self) -> bool {
        self.degree() == 1
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        self.is_rational().then(|| self.interval.lo().clone())
    }

    pub fn is_algebraic_integer(&self) -> bool {
        self.min_poly.has_integer_coeffs()
    }

    fn bisect(&mut self) {
        if self.interval.is_point() {
            return;
        }
        let mid = self.interval.mid();
        let s_lo = self.min_poly.sign_at(self.interval.lo());
        let s_mid = self.min_poly.sign_at(&mid);
        debug_assert!(s_mid != 0);
        self.interval = if s_mid == s_lo {
            Interval::new(mid, self.interval.hi().clone())
        } else {
            Interval::new(self.interval.lo().clone(), mid)
        };
    }

    /// Shrinks the interval to width at most `width`. Point intervals are
    /// left unchanged.
    pub fn refine(&mut self, width: &BigRational) {
        assert!(width.is_positive(), "refinement width must be positive");
        while &self.interval.width() > width {
            self.bisect();
        }
    }

    pub fn refined(&self, width: &BigRational) -> Self {
        let mut out = self.clone();
        out.refine(width);
        out
    }

    /// Multiplication by a rational.
    pub fn scale(&self, k: &BigRational) -> Self {
        if k.is_zero() {
            return Self::from_rational(BigRational::zero());
        }
        if let Some(q) = self.as_rational() {
            return Self::from_rational(q * k);
        }
        let min_poly = self.min_poly.compose_scale(&k.recip()).monic();
        Self {
            min_poly,
            interval: self.interval.scale(k),
        }
    }

    /// Exact product. The minimal polynomial is extracted from the
    /// characteristic polynomial of the Kronecker product of the two
    /// companion matrices, whose roots are all products of conjugates.
    pub fn mul(&self, other: &Self) -> Self {
        if let Some(q) = self.as_rational() {
            return other.scale(&q);
        }
        if let Some(q) = other.as_rational() {
            return self.scale(&q);
        }
        let ca = RationalMatrix::companion(&self.min_poly);
        let cb = RationalMatrix::companion(&other.min_poly);
        let p = ca.kronecker(&cb).char_poly().squarefree_part();
        let sturm = SturmSequence::new(&p);
        let mut a = self.clone();
        let mut b = other.clone();
        loop {
            let i = a.interval.mul(&b.interval);
            if sturm.count_closed(i.lo(), i.hi()) == 1 {
                return Self::from_isolating(&p, i.lo().clone(), i.hi().clone())
                    .expect("isolating interval certified above");
            }
            a.bisect();
            b.bisect();
        }
    }

    /// Approximation with relative error near machine precision.
    pub fn to_f64(&self) -> f64 {
        let mut a = self.clone();
        let target = a.interval.magnitude().max(BigRational::one()) * BigRational::new(1.into(), (1u64 << 60).into());
        a.refine(&target);
        super::rational_to_f64(&a.interval.mid())
    }

    /// All complex roots of the minimal polynomial, numerically, from the
    /// eigenvalues of its companion matrix.
    pub fn conjugates_f64(&self) -> Vec<(f64, f64)> {
        let c = RationalMatrix::companion(&self.min_poly);
        let n = c.dim();
        let m = DMatrix::from_row_slice(n, n, &c.to_f64());
        m.complex_eigenvalues().iter().map(|z| (z.re, z.im)).collect()
    }

    /// Largest modulus among the conjugates.
    pub fn max_conjugate_modulus(&self) -> f64 {
        self.conjugates_f64()
            .into_iter()
            .map(|(re, im)| re.hypot(im))
            .fold(0.0, f64::max)
    }

    fn same_root(&self, other: &Self) -> bool {
        if self.min_poly != other.min_poly || !self.interval.overlaps(&other.interval) {
            return false;
        }
        let hull = self.interval.hull(&other.interval);
        SturmSequence::new(&self.min_poly).count_closed(hull.lo(), hull.hi()) == 1
    }

    /// Exact comparison. Terminates because distinct algebraic numbers are
    /// eventually separated by refinement.
    pub fn compare(&self, other: &Self) -> Ordering {
        if let (Some(a), Some(b)) = (self.as_rational(), other.as_rational()) {
            return a.cmp(&b);
        }
        let mut a = self.clone();
        let mut b = other.clone();
        loop {
            if a.interval.hi() <= b.interval.lo() {
                return Ordering::Less;
            }
            if b.interval.hi() <= a.interval.lo() {
                return Ordering::Greater;
            }
            if a.same_root(&b) {
                return Ordering::Equal;
            }
            a.bisect();
            b.bisect();
        }
    }

    /// Comparison with a rational.
    pub fn compare_rational(&self, q: &BigRational) -> Ordering {
        self.compare(&Self::from_rational(q.clone()))
    }

    /// Interval of half-width at most `width / 2` around the value.
    pub fn enclosure(&self, width: &BigRational) -> Interval {
        self.refined(width).interval
    }
}

impl PartialEq for AlgebraicNumber {
    fn eq(&self, other: &Self) -> bool {
        self.min_poly == other.min_poly && self.compare(other) == Ordering::Equal
    }
}

impl Eq for AlgebraicNumber {}

impl PartialOrd for AlgebraicNumber {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for AlgebraicNumber {
    fn cmp(&self, other: &Self) -> Ordering {
        self.compare(other)
    }
}

impl fmt::Display for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_rational() {
            Some(q) => write!(f, "{q}"),
            None => write!(f, "{:.12} (root of {})", self.to_f64(), self.min_poly),
        }
    }
}

/// Default interval width, `2^-64`.
pub fn default_width() -> BigRational {
    BigRational::new(1.into(), num_bigint::BigInt::one() << 64)
}
