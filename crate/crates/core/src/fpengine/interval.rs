use std::fmt;

use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// Closed interval with rational endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    lo: BigRational,
    hi: BigRational,
}

impl Interval {
    pub fn new(lo: BigRational, hi: BigRational) -> Self {
        assert!(lo <= hi, "empty interval");
        Self { lo, hi }
    }

    pub fn point(x: BigRational) -> Self {
        Self { lo: x.clone(), hi: x }
    }

    pub fn lo(&self) -> &BigRational {
        &self.lo
    }

    pub fn hi(&self) -> &BigRational {
        &self.hi
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn mid(&self) -> BigRational {
        (&self.lo + &self.hi) / BigRational::from_integer(2.into())
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn overlaps(&self, other: &Self) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    pub fn hull(&self, other: &Self) -> Self {
        Self {
            lo: (&self.lo).min(&other.lo).clone(),
            hi: (&self.hi).max(&other.hi).clone(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        Self {
            lo: &self.lo + &other.lo,
            hi: &self.hi + &other.hi,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self {
            lo: &self.lo - &other.hi,
            hi: &self.hi - &other.lo,
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let c = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let lo = c.iter().min().unwrap().clone();
        let hi = c.iter().max().unwrap().clone();
        Self { lo, hi }
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        let (a, b) = (&self.lo * k, &self.hi * k);
        if k.is_negative() {
            Self { lo: b, hi: a }
        } else {
            Self { lo: a, hi: b }
        }
    }

    /// Largest absolute value of a point in the interval.
    pub fn magnitude(&self) -> BigRational {
        self.lo.abs().max(self.hi.abs())
    }

    /// Distance bound: every `x` in `self` and `y` in `other` satisfy
    /// `|x - y| <= self.distance_bound(other)`.
    pub fn distance_bound(&self, other: &Self) -> BigRational {
        self.sub(other).magnitude()
    }

    pub fn is_point(&self) -> bool {
        self.width().is_zero()
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn arithmetic_encloses() {
        let a = Interval::new(q(-1, 1), q(2, 1));
        let b = Interval::new(q(3, 1), q(4, 1));
        assert_eq!(a.mul(&b), Interval::new(q(-4, 1), q(8, 1)));
        assert_eq!(a.add(&b), Interval::new(q(2, 1), q(6, 1)));
        assert_eq!(a.sub(&b), Interval::new(q(-5, 1), q(-1, 1)));
        assert_eq!(a.scale(&q(-1, 2)), Interval::new(q(-1, 1), q(1, 2)));
        assert_eq!(a.magnitude(), q(2, 1));
        assert!(a.contains(&q(0, 1)));
        assert!(!a.overlaps(&b));
        assert_eq!(a.mid(), q(1, 2));
    }
}
