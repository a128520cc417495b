use num_bigint::BigInt;
use num_integer::Roots;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use fusion_core::catalog::{get_builtin, list_builtins};
use fusion_core::fpengine::{factor_rational, left_mult_matrix};
use fusion_core::{RationalMatrix, RationalPolynomial};

/// Fraction-free Gaussian elimination.
fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(i, k);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// `det(tI - A)` sampled at `t = 0..=n` and interpolated.
fn char_poly_oracle(a: &[Vec<i64>]) -> Vec<BigRational> {
    let n = a.len();
    let xs: Vec<i64> = (0..=n as i64).collect();
    let ys: Vec<BigRational> = xs
        .iter()
        .map(|&t| {
            let m = (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| BigInt::from(if i == j { t } else { 0 } - a[i][j]))
                        .collect()
                })
                .collect();
            BigRational::from_integer(bareiss_det(m))
        })
        .collect();
    let mut out = vec![BigRational::zero(); n + 1];
    for (i, yi) in ys.iter().enumerate() {
        // basis polynomial prod_{j != i} (t - x_j)/(x_i - x_j)
        let mut basis = vec![BigRational::one()];
        let mut denom = BigRational::one();
        for (j, &xj) in xs.iter().enumerate() {
            if j == i {
                continue;
            }
            let mut next = vec![BigRational::zero(); basis.len() + 1];
            for (k, c) in basis.iter().enumerate() {
                next[k + 1] += c;
                next[k] -= c * BigRational::from_integer(xj.into());
            }
            basis = next;
            denom *= BigRational::from_integer((xs[i] - xj).into());
        }
        for (k, c) in basis.iter().enumerate() {
            out[k] += c * yi / &denom;
        }
    }
    out
}

fn to_int_rows(m: &RationalMatrix) -> Vec<Vec<i64>> {
    let n = m.dim();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let v = m.get(i, j);
                    assert!(v.is_integer());
                    i64::try_from(v.to_integer()).unwrap()
                })
                .collect()
        })
        .collect()
}

#[test]
fn char_poly_matches_oracle_on_fixture_matrices() {
    for name in list_builtins() {
        let d = get_builtin(name).unwrap().data;
        for i in 0..d.rank() {
            let m = left_mult_matrix(&d, &d.simple(i));
            let expected = char_poly_oracle(&to_int_rows(&m));
            assert_eq!(m.char_poly().coeffs(), expected.as_slice(), "{name} simple {i}");
        }
        let all = left_mult_matrix(&d, &d.sum_of_simples());
        let expected = char_poly_oracle(&to_int_rows(&all));
        assert_eq!(all.char_poly().coeffs(), expected.as_slice(), "{name} sum");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn char_poly_matches_oracle_on_random_matrices(n in 1usize..7, entries in prop::collection::vec(-9i64..10, 36)) {
        let rows: Vec<Vec<i64>> = (0..n).map(|i| entries[i * 6..i * 6 + n].to_vec()).collect();
        let m = RationalMatrix::from_int_rows(&rows);
        prop_assert_eq!(m.char_poly().coeffs().to_vec(), char_poly_oracle(&rows));
    }

    #[test]
    fn factoring_products_of_irreducible_quadratics(qs in prop::collection::vec((-12i64..13, -12i64..13), 1..4)) {
        // t^2 + b t + c is irreducible over Q iff its discriminant is not a square
        let mut factors: Vec<RationalPolynomial> = qs
            .iter()
            .filter(|&&(b, c)| {
                let disc = b * b - 4 * c;
                disc < 0 || disc.sqrt() * disc.sqrt() != disc
            })
            .map(|&(b, c)| RationalPolynomial::from_ints([c, b, 1]))
            .collect();
        factors.sort_by(|a, b| a.coeffs().cmp(b.coeffs()));
        factors.dedup();
        prop_assume!(!factors.is_empty());
        let product = factors.iter().fold(RationalPolynomial::one(), |acc, f| poly_mul(&acc, f));
        let mut got = factor_rational(&product);
        got.sort_by(|a, b| a.coeffs().cmp(b.coeffs()));
        prop_assert_eq!(got, factors);
    }
}

fn poly_mul(a: &RationalPolynomial, b: &RationalPolynomial) -> RationalPolynomial {
    let mut out = vec![BigRational::zero(); a.coeffs().len() + b.coeffs().len() - 1];
    for (i, x) in a.coeffs().iter().enumerate() {
        for (j, y) in b.coeffs().iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    RationalPolynomial::new(out)
}

#[test]
fn factoring_products_of_known_irreducibles() {
    let known = [
        RationalPolynomial::from_ints([1, 1, 1]),             // cyclotomic 3
        RationalPolynomial::from_ints([1, 1, 1, 1, 1]),       // cyclotomic 5
        RationalPolynomial::from_ints([1, 1, 1, 1, 1, 1, 1]), // cyclotomic 7
        RationalPolynomial::from_ints([1, -1, 1, -1, 1]),     // cyclotomic 10
        RationalPolynomial::from_ints([-2, 0, 0, 1]),         // cube root of two
        RationalPolynomial::from_ints([1, 0, -10, 0, 1]),     // sqrt 2 + sqrt 3
        RationalPolynomial::from_ints([-1, -1, 1]),           // golden ratio
        RationalPolynomial::from_ints([5, -5, 1]),
        RationalPolynomial::from_ints([-2, 0, 0, 0, 0, 0, 1]), // Eisenstein at 2
    ];
    for mask in 1u32..(1 << known.len()) {
        let chosen: Vec<&RationalPolynomial> = known
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, p)| p)
            .collect();
        if chosen.len() > 4 {
            continue;
        }
        let product = chosen
            .iter()
            .fold(RationalPolynomial::one(), |acc, f| poly_mul(&acc, f));
        let got = factor_rational(&product);
        assert_eq!(got.len(), chosen.len(), "mask {mask:b}");
        for f in chosen {
            assert!(got.contains(f), "mask {mask:b}: missing {f}");
        }
        let back = got.iter().fold(RationalPolynomial::one(), |acc, f| poly_mul(&acc, f));
        assert_eq!(back, product);
    }
}

#[test]
fn factors_have_no_rational_roots_unless_linear() {
    // rational root theorem on the primitive integer form
    for name in list_builtins() {
        let d = get_builtin(name).unwrap().data;
        let p = left_mult_matrix(&d, &d.sum_of_simples()).char_poly();
        for f in factor_rational(&p) {
            if f.degree() == Some(1) {
                continue;
            }
            let ints = f.primitive_integer();
            let (a0, an) = (ints[0].abs(), ints[ints.len() - 1].abs());
            for num in divisors(&a0) {
                for den in divisors(&an) {
                    for s in [1, -1] {
                        let r = BigRational::new(BigInt::from(s) * &num, den.clone());
                        assert!(!f.eval(&r).is_zero(), "{name}: {f} has root {r}");
                    }
                }
            }
        }
    }
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    if n.is_zero() {
        return vec![BigInt::zero()];
    }
    let n = i64::try_from(n).unwrap();
    (1..=n).filter(|d| n % d == 0).map(BigInt::from).collect()
}
