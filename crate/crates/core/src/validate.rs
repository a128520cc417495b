//! Axiom checks for fusion data.
//!
//! Every check is total: it walks the whole search space and collects all
//! violations instead of stopping at the first one.

use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::semiring::{Element, FusionData};
use crate::{FusionError, Result};

/// Default cap on the number of candidates enumerated by
/// [`search_idempotents_above_unit`].
pub const DEFAULT_SEARCH_CUTOFF: u64 = 2_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub rule: &'static str,
    pub witness: Vec<usize>,
    pub message: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub(crate) fn push(&mut self, rule: &'static str, witness: Vec<usize>, message: String) {
        self.violations.push(Violation { rule, witness, message });
    }

    pub fn merge(mut self, other: ValidationReport) -> Self {
        self.violations.extend(other.violations);
        self
    }

    pub fn has_rule(&self, rule: &str) -> bool {
        self.violations.iter().any(|v| v.rule == rule)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            return write!(f, "ok");
        }
        for (n, v) in self.violations.iter().enumerate() {
            if n > 0 {
                writeln!(f)?;
            }
            write!(f, "[{}] {}", v.rule, v.message)?;
        }
        Ok(())
    }
}

fn units_in(data: &FusionData, a: usize, b: usize) -> usize {
    data.unit_multiset()
        .keys()
        .filter(|&&u| !data.n(a, b, u).is_zero())
        .count()
}

/// Associativity, unit laws, involutivity of the dual and the duality axiom.
pub fn check_structural(data: &FusionData) -> ValidationReport {
    let mut report = ValidationReport::default();
    let r = data.rank();
    let l = |i: usize| data.label(i).to_string();

    if let Err(e) = data.unit_decomposition() {
        let msg = match e {
            FusionError::Structural(m) => m,
            other => other.to_string(),
        };
        report.push("unit", data.unit_set(), msg);
    }

    for i in 0..r {
        if data.dual(data.dual(i)) != i {
            report.push(
                "involution",
                vec![i],
                format!(
                    "dual of `{}` is `{}`, whose dual is `{}`",
                    l(i),
                    l(data.dual(i)),
                    l(data.dual(data.dual(i)))
                ),
            );
        }
    }

    for i in 0..r {
        for j in 0..r {
            for k in 0..r {
                for t in 0..r {
                    let left: BigUint = (0..r).map(|m| data.n(i, j, m) * data.n(m, k, t)).sum();
                    let right: BigUint = (0..r).map(|m| data.n(j, k, m) * data.n(i, m, t)).sum();
                    if left != right {
                        report.push(
                            "associativity",
                            vec![i, j, k, t],
                            format!(
                                "coefficient of `{}` in (`{}`·`{}`)·`{}` is {left} but in `{}`·(`{}`·`{}`) is {right}",
                                l(t),
                                l(i),
                                l(j),
                                l(k),
                                l(i),
                                l(j),
                                l(k)
                            ),
                        );
                    }
                }
            }
        }
    }

    for a in 0..r {
        for b in 0..r {
            let is_dual = b == data.dual(a);
            let left = units_in(data, a, b) == 1;
            let right = units_in(data, b, a) == 1;
            if left != is_dual || right != is_dual {
                let message = if is_dual {
                    format!(
                        "`{}` is declared dual to `{}` but their products do not contain exactly one unit summand",
                        l(b),
                        l(a)
                    )
                } else {
                    format!(
                        "products of `{}` and `{}` contain exactly one unit summand but `{}` is not declared dual to `{}`",
                        l(a),
                        l(b),
                        l(b),
                        l(a)
                    )
                };
                report.push("duality", vec![a, b], message);
            }
        }
    }
    report
}

/// Cyclic relations between endomorphism dimensions and fusion coefficients,
/// plus `N[a][dual a][1] = eps[a]`. Fusion data only.
pub fn check_eps_consistency(data: &FusionData) -> Result<ValidationReport> {
    let unit = data.unit_index()?;
    let mut report = ValidationReport::default();
    let r = data.rank();
    let e = |i: usize| BigUint::from(data.eps(i));
    let d = |i: usize| data.dual(i);
    let l = |i: usize| data.label(i).to_string();

    for x in 0..r {
        for y in 0..r {
            for z in 0..r {
                let base = e(z) * data.n(x, y, d(z));
                let rot1 = e(y) * data.n(z, x, d(y));
                let rot2 = e(x) * data.n(y, z, d(x));
                let flip = e(z) * data.n(d(y), d(x), z);
                if base != rot1 || base != rot2 || base != flip {
                    report.push(
                        "cyclic",
                        vec![x, y, z],
                        format!(
                            "(x,y,z)=(`{}`,`{}`,`{}`): eps·N values {base}, {rot1}, {rot2}, {flip} are not all equal",
                            l(x),
                            l(y),
                            l(z)
                        ),
                    );
                }
            }
        }
    }
    for a in 0..r {
        let n = data.n(a, d(a), unit);
        if *n != e(a) {
            report.push(
                "unit-multiplicity",
                vec![a],
                format!(
                    "`{}`·`{}` contains the unit {n} times but eps[`{}`] = {}",
                    l(a),
                    l(d(a)),
                    l(a),
                    data.eps(a)
                ),
            );
        }
    }
    Ok(report)
}

/// For every pair of simples `(x, y)` looks for simples `u, v` with
/// `y <= u·x` and `y <= x·v`.
pub fn check_transitivity(data: &FusionData) -> ValidationReport {
    let mut report = ValidationReport::default();
    let r = data.rank();
    for x in 0..r {
        for y in 0..r {
            let left = (0..r).any(|u| !data.n(u, x, y).is_zero());
            let right = (0..r).any(|v| !data.n(x, v, y).is_zero());
            if !left || !right {
                let side = match (left, right) {
                    (false, false) => "u·x nor x·v",
                    (false, true) => "u·x",
                    _ => "x·v",
                };
                report.push(
                    "transitivity",
                    vec![x, y],
                    format!(
                        "`{}` does not appear in any {side} with x = `{}`",
                        data.label(y),
                        data.label(x)
                    ),
                );
            }
        }
    }
    report
}

/// Enumerates all idempotents `p` with `1 <= p` and every coefficient at
/// most `coeff_bound`. For valid data the answer is exactly the unit.
pub fn search_idempotents_above_unit(data: &FusionData, coeff_bound: u64, cutoff: u64) -> Result<Vec<Element>> {
    let r = data.rank();
    let units = data.unit_set();
    let choices = coeff_bound.saturating_add(1);
    let total = (0..r).try_fold(1u64, |acc, i| {
        let c = if units.contains(&i) { coeff_bound } else { choices };
        acc.checked_mul(c)
    });
    match total {
        Some(t) if t <= cutoff => {}
        _ => {
            return Err(FusionError::Resource(format!(
                "{choices}^{r} candidates exceed the cutoff of {cutoff}"
            )))
        }
    }
    if coeff_bound == 0 {
        return Ok(Vec::new());
    }

    let lower: Vec<u64> = (0..r).map(|i| u64::from(units.contains(&i))).collect();
    let mut current = lower.clone();
    let mut found = Vec::new();
    loop {
        let p = data.element(current.iter().map(|&c| BigUint::from(c)))?;
        if data.multiply(&p, &p)? == p {
            found.push(p);
        }
        // odometer increment
        let mut pos = 0;
        loop {
            if pos == r {
                return Ok(found);
            }
            if current[pos] < coeff_bound {
                current[pos] += 1;
                break;
            }
            current[pos] = lower[pos];
            pos += 1;
        }
    }
}

/// Convenience: is `p` an idempotent dominating the unit.
pub fn is_idempotent_above_unit(data: &FusionData, p: &Element) -> Result<bool> {
    let one = data.unit_element();
    Ok(data.compare(&one, p)?.leq && data.multiply(p, p)? == *p)
}

/// All three report-based checks in sequence. The ε check is skipped for
/// strictly multifusion data.
pub fn check_all(data: &FusionData) -> ValidationReport {
    let mut report = check_structural(data);
    if let Ok(eps) = check_eps_consistency(data) {
        report = report.merge(eps);
    }
    report.merge(check_transitivity(data))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semiring::FusionBuilder;

    fn rep_f2_z3() -> FusionData {
        FusionBuilder::new(&["1", "v"])
            .eps("v", 2)
            .product("v", "v", &[("1", 2), ("v", 1)])
            .build()
            .unwrap()
    }

    fn vec_z2() -> FusionData {
        FusionBuilder::new(&["1", "g"])
            .product("g", "g", &[("1", 1)])
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
    fn fixtures_pass_structural() {
        for d in [rep_f2_z3(), vec_z2(), fib()] {
            assert!(check_structural(&d).passed(), "{}", check_structural(&d));
            assert!(check_eps_consistency(&d).unwrap().passed());
            assert!(check_transitivity(&d).passed());
        }
    }

    #[test]
    fn duality_violation_detected() {
        let d = rep_f2_z3().with_coefficient(1, 1, 0, BigUint::zero());
        let report = check_structural(&d);
        assert!(report.has_rule("duality"), "{report}");
    }

    #[test]
    fn eps_mismatch_detected() {
        let d = rep_f2_z3().with_eps(vec![1, 1]).unwrap();
        assert!(check_structural(&d).passed());
        let report = check_eps_consistency(&d).unwrap();
        assert!(report.has_rule("unit-multiplicity"));
    }

    #[test]
    fn non_involutive_dual_names_label() {
        let d = FusionBuilder::new(&["1", "a", "b"])
            .product("a", "a", &[("1", 1)])
            .product("b", "b", &[("1", 1)])
            .product("a", "b", &[("b", 1)])
            .build()
            .unwrap();
        let d = d.with_dual(vec![0, 2, 2]).unwrap();
        let report = check_structural(&d);
        assert!(report.has_rule("involution"));
        assert!(report.to_string().contains("`a`"));
    }

    #[test]
    fn non_transitive_detected() {
        // e·e = e and 1 never appears in a product with e
        let d = FusionBuilder::new(&["1", "e"])
            .product("e", "e", &[("e", 1)])
            .build()
            .unwrap();
        let report = check_transitivity(&d);
        assert!(!report.passed());
        assert!(report.violations.iter().any(|v| v.witness == vec![1, 0]));
    }

    #[test]
    fn idempotent_search() {
        let z2 = vec_z2();
        let found = search_idempotents_above_unit(&z2, 3, DEFAULT_SEARCH_CUTOFF).unwrap();
        assert_eq!(found, vec![z2.simple(0)]);
        let f = fib();
        let found = search_idempotents_above_unit(&f, 2, DEFAULT_SEARCH_CUTOFF).unwrap();
        assert_eq!(found, vec![f.simple(0)]);
        let cand = z2.element([1u32, 1]).unwrap();
        assert_eq!(z2.multiply(&cand, &cand).unwrap(), z2.element([2u32, 2]).unwrap());
        assert!(!is_idempotent_above_unit(&z2, &cand).unwrap());
    }

    #[test]
    fn idempotent_search_cutoff() {
        let z2 = vec_z2();
        assert!(matches!(
            search_idempotents_above_unit(&z2, 10_000, 1000),
            Err(FusionError::Resource(_))
        ));
    }
}
