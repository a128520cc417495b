use num_rational::BigRational;
use num_traits::Zero;

use super::poly::RationalPolynomial;

/// Sturm chain `p, p', -rem(p, p'), ...` of a squarefree polynomial.
#[derive(Clone, Debug)]
pub struct SturmSequence {
    chain: Vec<RationalPolynomial>,
}

impl SturmSequence {
    pub fn new(p: &RationalPolynomial) -> Self {
        let mut chain = vec![p.clone()];
        if p.degree().unwrap_or(0) == 0 {
            return Self { chain };
        }
        chain.push(p.derivative());
        loop {
            let n = chain.len();
            let r = chain[n - 2].rem(&chain[n - 1]);
            if r.is_zero() {
                break;
            }
            chain.push(-&r);
        }
        Self { chain }
    }

    pub fn polynomial(&self) -> &RationalPolynomial {
        &self.chain[0]
    }

    fn variations<I: Iterator<Item = i8>>(signs: I) -> usize {
        let mut last = 0i8;
        let mut count = 0;
        for s in signs.filter(|&s| s != 0) {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    pub fn variations_at(&self, x: &BigRational) -> usize {
        Self::variations(self.chain.iter().map(|p| p.sign_at(x)))
    }

    pub fn variations_at_infinity(&self, negative: bool) -> usize {
        Self::variations(self.chain.iter().map(|p| p.sign_at_infinity(negative)))
    }

    /// Number of distinct real roots in the half-open interval `(a, b]`.
    pub fn count_half_open(&self, a: &BigRational, b: &BigRational) -> usize {
        if a >= b {
            return 0;
        }
        self.variations_at(a).saturating_sub(self.variations_at(b))
    }

    /// Number of distinct real roots in the closed interval `[a, b]`.
    pub fn count_closed(&self, a: &BigRational, b: &BigRational) -> usize {
        if a > b {
            return 0;
        }
        let at_a = usize::from(self.chain[0].eval(a).is_zero());
        if a == b {
            return at_a;
        }
        self.count_half_open(a, b) + at_a
    }

    /// Number of distinct real roots.
    pub fn count_real(&self) -> usize {
        self.variations_at_infinity(true)
            .saturating_sub(self.variations_at_infinity(false))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn counts() {
        // (t-2)(t+1)
        let s = SturmSequence::new(&RationalPolynomial::from_ints([-2, -1, 1]));
        assert_eq!(s.count_real(), 2);
        assert_eq!(s.count_half_open(&q(0), &q(2)), 1);
        assert_eq!(s.count_half_open(&q(-1), &q(0)), 0);
        assert_eq!(s.count_closed(&q(-1), &q(0)), 1);
        assert_eq!(s.count_closed(&q(2), &q(2)), 1);
        // t^2 + 1
        let s = SturmSequence::new(&RationalPolynomial::from_ints([1, 0, 1]));
        assert_eq!(s.count_real(), 0);
        // t
        let s = SturmSequence::new(&RationalPolynomial::x());
        assert_eq!(s.count_half_open(&q(-1), &BigRational::zero()), 1);
        assert_eq!(s.count_half_open(&BigRational::zero(), &BigRational::one()), 0);
    }
}
