use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::poly::RationalPolynomial;

/// Square matrix of exact rationals, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    n: usize,
    entries: Vec<BigRational>,
}

impl RationalMatrix {
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            entries: vec![BigRational::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.set(i, i, BigRational::one());
        }
        m
    }

    /// From rows; panics when not square.
    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        Self {
            n,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_int_rows(rows: &[Vec<i64>]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect())
                .collect(),
        )
    }

    /// Companion matrix of a monic polynomial: ones on the subdiagonal and
    /// `-a_i` in the last column.
    pub fn companion(p: &RationalPolynomial) -> Self {
        let p = p.monic();
        let n = p.degree().expect("companion of zero polynomial");
        let mut m = Self::zeros(n);
        for i in 1..n {
            m.set(i, i - 1, BigRational::one());
        }
        for i in 0..n {
            m.set(i, n - 1, -p.coeff(i));
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigRational) {
        self.entries[i * self.n + j] = v;
    }

    pub fn entries(&self) -> &[BigRational] {
        &self.entries
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        Self {
            n: self.n,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        Self {
            n: self.n,
            entries: self.entries.iter().map(|a| a * k).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.entries[i * n + j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[BigRational]) -> Vec<BigRational> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j) * &v[j]).sum())
            .collect()
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kronecker(&self, other: &Self) -> Self {
        let (a, b) = (self.n, other.n);
        let mut out = Self::zeros(a * b);
        for i in 0..a {
            for j in 0..a {
                let x = self.get(i, j);
                if x.is_zero() {
                    continue;
                }
                for k in 0..b {
                    for l in 0..b {
                        out.set(i * b + k, j * b + l, x * other.get(k, l));
                    }
                }
            }
        }
        out
    }

    pub fn is_nonnegative(&self) -> bool {
        self.entries.iter().all(|e| !num_traits::Signed::is_negative(e))
    }

    /// Monic characteristic polynomial `det(tI - M)`.
    ///
    /// The denominators are cleared first so that the division-free Berkowitz
    /// recurrence runs over the integers: if `M = A / D` then
    /// `det(tI - M) = D^-n det(D t I - A)`.
    pub fn char_poly(&self) -> RationalPolynomial {
        let n = self.n;
        let d = self.entries.iter().fold(BigInt::one(), |acc, e| acc.lcm(e.denom()));
        let a: Vec<BigInt> = self
            .entries
            .iter()
            .map(|e| (e * BigRational::from_integer(d.clone())).to_integer())
            .collect();
        let desc = berkowitz(n, &a);
        // desc[k] is the coefficient of t^(n-k) in det(tI - A)
        let mut coeffs = vec![BigRational::zero(); n + 1];
        let mut dpow = BigInt::one();
        for (k, c) in desc.iter().enumerate() {
            // coefficient of t^(n-k) in char(M) is c / D^k
            coeffs[n - k] = BigRational::new(c.clone(), dpow.clone());
            dpow *= &d;
        }
        RationalPolynomial::new(coeffs)
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.entries.iter().map(super::rational_to_f64).collect()
    }
}

/// Berkowitz's division-free characteristic polynomial over the integers.
/// Returns `[1, c_1, ..., c_n]` with `det(tI - A) = sum c_k t^(n-k)`.
fn berkowitz(n: usize, a: &[BigInt]) -> Vec<BigInt> {
    let at = |i: usize, j: usize| &a[i * n + j];
    let mut poly = vec![BigInt::one()];
    for k in 0..n {
        // leading block S = A[0..k][0..k], row R = A[k][0..k], column C = A[0..k][k]
        let mut toeplitz = Vec::with_capacity(k + 2);
        toeplitz.push(BigInt::one());
        toeplitz.push(-at(k, k).clone());
        let mut v: Vec<BigInt> = (0..k).map(|i| at(i, k).clone()).collect();
        for _ in 0..k {
            let rv: BigInt = (0..k).map(|j| at(k, j) * &v[j]).sum();
            toeplitz.push(-rv);
            v = (0..k).map(|i| (0..k).map(|j| at(i, j) * &v[j]).sum()).collect();
        }
        let mut next = vec![BigInt::zero(); k + 2];
        for (i, slot) in next.iter_mut().enumerate() {
            for (j, p) in poly.iter().enumerate().take(i + 1) {
                if i - j < toeplitz.len() {
                    *slot += &toeplitz[i - j] * p;
                }
            }
        }
        poly = next;
    }
    poly
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.n {
            if i > 0 {
                write!(f, ", ")?;
            }
            let row: Vec<String> = (0..self.n).map(|j| self.get(i, j).to_string()).collect();
            write!(f, "[{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn char_poly_small() {
        let lv = RationalMatrix::from_int_rows(&[vec![0, 2], vec![1, 1]]);
        assert_eq!(lv.char_poly(), RationalPolynomial::from_ints([-2, -1, 1]));
        assert_eq!(
            RationalMatrix::identity(2).char_poly(),
            RationalPolynomial::from_ints([1, -2, 1])
        );
        let lx = RationalMatrix::from_int_rows(&[vec![0, 1], vec![1, 1]]);
        assert_eq!(lx.char_poly(), RationalPolynomial::from_ints([-1, -1, 1]));
    }

    #[test]
    fn char_poly_with_denominators() {
        let h = BigRational::new(1.into(), 2.into());
        let two = BigRational::from_integer(2.into());
        let m = RationalMatrix::from_rows(vec![
            vec![two.clone(), BigRational::one()],
            vec![h.clone(), BigRational::new(5.into(), 2.into())],
        ]);
        // t^2 - 9/2 t + 9/2
        let expect = RationalPolynomial::new(vec![
            BigRational::new(9.into(), 2.into()),
            BigRational::new((-9).into(), 2.into()),
            BigRational::one(),
        ]);
        assert_eq!(m.char_poly(), expect);
    }

    #[test]
    fn companion_round_trip() {
        let p = RationalPolynomial::from_ints([5, -5, 1]);
        assert_eq!(RationalMatrix::companion(&p).char_poly(), p);
    }

    #[test]
    fn empty_matrix() {
        assert_eq!(RationalMatrix::zeros(0).char_poly(), RationalPolynomial::one());
    }
}
