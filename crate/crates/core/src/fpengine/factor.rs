//! Factorization of polynomials over the rationals.
//!
//! Monic squarefree integer polynomials are factored modulo a small prime
//! (distinct-degree then equal-degree splitting), the factorization is
//! Hensel-lifted past twice the Mignotte bound, and true factors are
//! recovered by trial division over subsets of the lifted factors.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use super::poly::RationalPolynomial;

/// Irreducible monic factors over the rationals of the squarefree part of
/// `p`, sorted by degree then coefficients.
pub fn factor_rational(p: &RationalPolynomial) -> Vec<RationalPolynomial> {
    let Some(deg) = p.degree() else { return Vec::new() };
    if deg == 0 {
        return Vec::new();
    }
    let sf = p.squarefree_part();
    if sf.degree() == Some(1) {
        return vec![sf];
    }
    let (d, ints) = sf.to_monic_integer();
    let scale = BigRational::from_integer(d);
    let mut out: Vec<RationalPolynomial> = factor_monic_squarefree(&ints)
        .into_iter()
        .map(|g| RationalPolynomial::from_bigints(&g).compose_scale(&scale).monic())
        .collect();
    out.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.coeffs().cmp(b.coeffs())));
    out
}

/// Factors a monic squarefree integer polynomial into monic irreducibles.
pub fn factor_monic_squarefree(f: &[BigInt]) -> Vec<Vec<BigInt>> {
    let f = trim_int(f.to_vec());
    let n = f.len().saturating_sub(1);
    if n == 0 {
        return Vec::new();
    }
    debug_assert!(f[n].is_one());
    if n == 1 {
        return vec![f];
    }

    let Some((p, modular)) = choose_prime(&f) else {
        // no suitable prime below the search limit; treat as irreducible
        return vec![f];
    };
    if modular.len() == 1 {
        return vec![f];
    }

    let bound = mignotte_bound(&f);
    let mut k = 1u32;
    let mut modulus = BigInt::from(p);
    while modulus <= &bound * 2 {
        modulus *= p;
        k += 1;
    }

    let lifted = hensel_multi(&f, &modular, p, k);
    recombine(f, lifted, &modulus)
}

fn trim_int(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

fn mignotte_bound(f: &[BigInt]) -> BigInt {
    let n = f.len() - 1;
    let norm2: BigInt = f.iter().map(|c| c * c).sum();
    let norm = norm2.sqrt() + BigInt::one();
    norm << n
}

const PRIMES_TO_TRY: usize = 6;
const PRIME_LIMIT: u64 = 50_000;

fn small_primes() -> impl Iterator<Item = u64> {
    (3..PRIME_LIMIT)
        .step_by(2)
        .filter(|&n| (3..).step_by(2).take_while(|d| d * d <= n).all(|d| n % d != 0))
}

/// Picks a prime modulo which `f` stays squarefree, preferring the fewest
/// modular factors among the first few candidates.
fn choose_prime(f: &[BigInt]) -> Option<(u64, Vec<Vec<u64>>)> {
    type Candidate = (u64, Vec<(Vec<u64>, usize)>);
    let mut best: Option<Candidate> = None;
    let mut tried = 0;
    for p in small_primes() {
        let fp = zp::from_int(f, p);
        if zp::deg(&fp) != Some(f.len() - 1) {
            continue;
        }
        let g = zp::gcd(&fp, &zp::derivative(&fp, p), p);
        if zp::deg(&g) != Some(0) {
            continue;
        }
        let ddf = zp::distinct_degree(&fp, p);
        let count: usize = ddf.iter().map(|(g, d)| zp::deg(g).unwrap() / d).sum();
        let better = best
            .as_ref()
            .is_none_or(|(_, b)| count < b.iter().map(|(g, d)| zp::deg(g).unwrap() / d).sum::<usize>());
        if better {
            best = Some((p, ddf));
        }
        tried += 1;
        if tried >= PRIMES_TO_TRY || count == 1 {
            break;
        }
    }
    let (p, ddf) = best?;
    let mut factors = Vec::new();
    for (g, d) in ddf {
        factors.extend(zp::equal_degree(&g, d, p));
    }
    factors.sort();
    Some((p, factors))
}

fn int_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim_int(out)
}

/// Exact quotient `f / g` for monic `g`, or `None` when `g` does not divide.
fn int_exact_div(f: &[BigInt], g: &[BigInt]) -> Option<Vec<BigInt>> {
    let dg = g.len() - 1;
    if f.len() < g.len() {
        return None;
    }
    let mut rem = f.to_vec();
    let mut quot = vec![BigInt::zero(); f.len() - dg];
    for i in (0..quot.len()).rev() {
        let q = rem[i + dg].clone();
        if !q.is_zero() {
            for (j, c) in g.iter().enumerate() {
                rem[i + j] -= &q * c;
            }
        }
        quot[i] = q;
    }
    if rem[..dg].iter().all(Zero::is_zero) {
        Some(trim_int(quot))
    } else {
        None
    }
}

/// Lifts `f ≡ g0·h0 (mod p)` to a factorization modulo `p^k`. Both factors
/// are monic.
fn hensel_pair(f: &[BigInt], g0: &[u64], h0: &[u64], p: u64, k: u32) -> (Vec<BigInt>, Vec<BigInt>) {
    let (_, s, t) = zp::ext_gcd(g0, h0, p);
    let mut g = zp::to_int(g0);
    let mut h = zp::to_int(h0);
    let mut pj = BigInt::from(p);
    for _ in 1..k {
        let gh = int_mul(&g, &h);
        let n = f.len().max(gh.len());
        let e: Vec<u64> = (0..n)
            .map(|i| {
                let a = f.get(i).cloned().unwrap_or_default();
                let b = gh.get(i).cloned().unwrap_or_default();
                let diff = a - b;
                debug_assert!((&diff % &pj).is_zero());
                (diff / &pj).mod_floor(&BigInt::from(p)).to_u64().unwrap()
            })
            .collect();
        let e = zp::trim(e);
        let (q, r) = zp::div_rem(&zp::mul(&s, &e, p), h0, p);
        let dg = zp::add(&zp::mul(&t, &e, p), &zp::mul(&q, g0, p), p);
        add_scaled(&mut g, &dg, &pj);
        add_scaled(&mut h, &r, &pj);
        pj *= p;
    }
    (g, h)
}

fn add_scaled(target: &mut Vec<BigInt>, delta: &[u64], scale: &BigInt) {
    if target.len() < delta.len() {
        target.resize(delta.len(), BigInt::zero());
    }
    for (t, &d) in target.iter_mut().zip(delta) {
        if d != 0 {
            *t += scale * d;
        }
    }
}

fn hensel_multi(f: &[BigInt], factors: &[Vec<u64>], p: u64, k: u32) -> Vec<Vec<BigInt>> {
    if factors.len() == 1 {
        let m = num_traits::pow(BigInt::from(p), k as usize);
        return vec![f.iter().map(|c| c.mod_floor(&m)).collect()];
    }
    let rest = factors[1..].iter().fold(vec![1u64], |acc, g| zp::mul(&acc, g, p));
    let (g, h) = hensel_pair(f, &factors[0], &rest, p, k);
    let mut out = vec![g];
    out.extend(hensel_multi(&h, &factors[1..], p, k));
    out
}

fn symmetric_mod(c: &BigInt, m: &BigInt) -> BigInt {
    let r = c.mod_floor(m);
    if &r * 2 > *m {
        r - m
    } else {
        r
    }
}

fn recombine(mut f: Vec<BigInt>, mut lifted: Vec<Vec<BigInt>>, m: &BigInt) -> Vec<Vec<BigInt>> {
    let mut result = Vec::new();
    let mut s = 1;
    while 2 * s <= lifted.len() {
        let mut hit = None;
        for subset in Combinations::new(lifted.len(), s) {
            let prod = subset.iter().fold(vec![BigInt::one()], |acc, &i| {
                int_mul(&acc, &lifted[i]).iter().map(|c| c.mod_floor(m)).collect()
            });
            let g: Vec<BigInt> = prod.iter().map(|c| symmetric_mod(c, m)).collect();
            let g = trim_int(g);
            if !f[0].is_zero() && !g[0].is_zero() && !(&f[0] % &g[0]).is_zero() {
                continue;
            }
            if let Some(q) = int_exact_div(&f, &g) {
                hit = Some((subset, g, q));
                break;
            }
        }
        match hit {
            Some((subset, g, q)) => {
                result.push(g);
                f = q;
                for &i in subset.iter().rev() {
                    lifted.remove(i);
                }
            }
            None => s += 1,
        }
    }
    if f.len() > 1 {
        result.push(f);
    }
    result
}

/// Lexicographic `k`-subsets of `0..n`.
struct Combinations {
    n: usize,
    current: Option<Vec<usize>>,
}

impl Combinations {
    fn new(n: usize, k: usize) -> Self {
        let current = if k <= n { Some((0..k).collect()) } else { None };
        Self { n, current }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.clone()?;
        let k = out.len();
        let mut next = out.clone();
        let mut i = k;
        loop {
            if i == 0 {
                self.current = None;
                break;
            }
            i -= 1;
            if next[i] < self.n - k + i {
                next[i] += 1;
                for j in i + 1..k {
                    next[j] = next[j - 1] + 1;
                }
                self.current = Some(next);
                break;
            }
        }
        Some(out)
    }
}

/// Dense polynomials over `F_p` for odd primes below `2^31`.
mod zp {
    use super::*;

    pub type Poly = Vec<u64>;

    pub fn trim(mut v: Poly) -> Poly {
        while v.last() == Some(&0) {
            v.pop();
        }
        v
    }

    pub fn deg(a: &[u64]) -> Option<usize> {
        a.len().checked_sub(1)
    }

    pub fn from_int(f: &[BigInt], p: u64) -> Poly {
        let m = BigInt::from(p);
        trim(f.iter().map(|c| c.mod_floor(&m).to_u64().unwrap()).collect())
    }

    pub fn to_int(a: &[u64]) -> Vec<BigInt> {
        a.iter().map(|&c| BigInt::from(c)).collect()
    }

    fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
        let mut r = 1u64;
        b %= p;
        while e > 0 {
            if e & 1 == 1 {
                r = r * b % p;
            }
            b = b * b % p;
            e >>= 1;
        }
        r
    }

    pub fn inv(a: u64, p: u64) -> u64 {
        pow_mod(a, p - 2, p)
    }

    pub fn add(a: &[u64], b: &[u64], p: u64) -> Poly {
        let n = a.len().max(b.len());
        trim(
            (0..n)
                .map(|i| (a.get(i).unwrap_or(&0) + b.get(i).unwrap_or(&0)) % p)
                .collect(),
        )
    }

    pub fn sub(a: &[u64], b: &[u64], p: u64) -> Poly {
        let n = a.len().max(b.len());
        trim(
            (0..n)
                .map(|i| (a.get(i).unwrap_or(&0) + p - b.get(i).unwrap_or(&0)) % p)
                .collect(),
        )
    }

    pub fn mul(a: &[u64], b: &[u64], p: u64) -> Poly {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % p;
            }
        }
        trim(out)
    }

    fn scale(a: &[u64], k: u64, p: u64) -> Poly {
        trim(a.iter().map(|&c| c * k % p).collect())
    }

    pub fn monic(a: &[u64], p: u64) -> Poly {
        match a.last() {
            None => Vec::new(),
            Some(&lc) => scale(a, inv(lc, p), p),
        }
    }

    pub fn div_rem(a: &[u64], b: &[u64], p: u64) -> (Poly, Poly) {
        let db = deg(b).expect("division by zero");
        if a.len() <= db {
            return (Vec::new(), a.to_vec());
        }
        let li = inv(b[db], p);
        let mut rem = a.to_vec();
        let mut quot = vec![0u64; a.len() - db];
        for i in (0..quot.len()).rev() {
            let q = rem[i + db] * li % p;
            if q != 0 {
                for (j, &c) in b.iter().enumerate() {
                    rem[i + j] = (rem[i + j] + p - q * c % p) % p;
                }
            }
            quot[i] = q;
        }
        rem.truncate(db);
        (trim(quot), trim(rem))
    }

    pub fn rem(a: &[u64], b: &[u64], p: u64) -> Poly {
        div_rem(a, b, p).1
    }

    pub fn gcd(a: &[u64], b: &[u64], p: u64) -> Poly {
        let (mut a, mut b) = (a.to_vec(), b.to_vec());
        while !b.is_empty() {
            let r = rem(&a, &b, p);
            a = b;
            b = r;
        }
        monic(&a, p)
    }

    /// Returns `(g, s, t)` with `s·a + t·b = g` and `g` monic.
    pub fn ext_gcd(a: &[u64], b: &[u64], p: u64) -> (Poly, Poly, Poly) {
        let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
        let (mut s0, mut s1) = (vec![1u64], Vec::new());
        let (mut t0, mut t1) = (Vec::new(), vec![1u64]);
        while !r1.is_empty() {
            let (q, r) = div_rem(&r0, &r1, p);
            let s2 = sub(&s0, &mul(&q, &s1, p), p);
            let t2 = sub(&t0, &mul(&q, &t1, p), p);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        let li = inv(*r0.last().unwrap(), p);
        (scale(&r0, li, p), scale(&s0, li, p), scale(&t0, li, p))
    }

    pub fn derivative(a: &[u64], p: u64) -> Poly {
        trim(
            a.iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| c * (i as u64 % p) % p)
                .collect(),
        )
    }

    fn mul_mod(a: &[u64], b: &[u64], m: &[u64], p: u64) -> Poly {
        rem(&mul(a, b, p), m, p)
    }

    fn pow_poly_mod(base: &[u64], e: &BigUint, m: &[u64], p: u64) -> Poly {
        let mut result = vec![1u64];
        let mut b = rem(base, m, p);
        for i in 0..e.bits() {
            if e.bit(i) {
                result = mul_mod(&result, &b, m, p);
            }
            b = mul_mod(&b, &b, m, p);
        }
        rem(&result, m, p)
    }

    /// Distinct-degree factorization of a monic squarefree polynomial:
    /// pairs `(g, d)` where `g` is the product of all irreducible factors of
    /// degree `d`.
    pub fn distinct_degree(f: &[u64], p: u64) -> Vec<(Poly, usize)> {
        let mut out = Vec::new();
        let mut f = f.to_vec();
        let x = vec![0u64, 1];
        let mut h = x.clone();
        let pe = BigUint::from(p);
        let mut d = 1;
        while deg(&f).unwrap_or(0) >= 2 * d {
            h = pow_poly_mod(&h, &pe, &f, p);
            let g = gcd(&f, &sub(&h, &x, p), p);
            if deg(&g).unwrap_or(0) > 0 {
                f = div_rem(&f, &g, p).0;
                h = rem(&h, &f, p);
                out.push((g, d));
            }
            d += 1;
        }
        if deg(&f).unwrap_or(0) > 0 {
            let df = deg(&f).unwrap();
            out.push((monic(&f, p), df));
        }
        out
    }

    /// Splits a product of distinct irreducibles of degree `d` (Cantor-Zassenhaus,
    /// with a fixed pseudo-random sequence so results are reproducible).
    pub fn equal_degree(g: &[u64], d: usize, p: u64) -> Vec<Poly> {
        let n = deg(g).unwrap();
        if n == d {
            return vec![monic(g, p)];
        }
        let exp = (num_traits::pow(BigUint::from(p), d) - 1u32) / 2u32;
        let mut state = 0x9e37_79b9_7f4a_7c15u64 ^ (p << 17) ^ (n as u64);
        loop {
            let candidate: Poly = trim(
                (0..n)
                    .map(|_| {
                        state ^= state << 13;
                        state ^= state >> 7;
                        state ^= state << 17;
                        state % p
                    })
                    .collect(),
            );
            if deg(&candidate).unwrap_or(0) == 0 {
                continue;
            }
            let w = sub(&pow_poly_mod(&candidate, &exp, g, p), &[1], p);
            let h = gcd(g, &w, p);
            let dh = deg(&h).unwrap_or(0);
            if dh > 0 && dh < n {
                let other = div_rem(g, &h, p).0;
                let mut out = equal_degree(&h, d, p);
                out.extend(equal_degree(&other, d, p));
                return out;
            }
        }
    }
}
