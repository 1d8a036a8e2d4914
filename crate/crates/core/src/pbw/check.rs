//! Presentation consistency checking.
//!
//! Verifies the presentation axioms (nonzero pair constants, flag
//! consistency) and rewriting consistency: both reduction orders of
//! every generator triple agree, and pushing a pair of generators past a
//! ring generator is associative. This is a consistency heuristic over
//! bounded degrees, not a completeness proof; the default bound 3 covers
//! exactly the generator triples, which is the diamond-lemma overlap set
//! for these relations.

use crate::error::Result;

use super::monomial::Monomial;
use super::presentation::Presentation;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub location: String,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CheckReport {
    pub violations: Vec<Violation>,
}

impl CheckReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// All monomials in `n` generators of total degree exactly `d`.
fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    fn go(n: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if prefix.len() == n - 1 {
            prefix.push(d);
            out.push(Monomial::new(prefix.clone()));
            prefix.pop();
            return;
        }
        for e in 0..=d {
            prefix.push(e);
            go(n, d - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, d, &mut Vec::new(), &mut out);
    out
}

/// Runs the axiom and rewriting-consistency checks up to the given total
/// degree bound (default 3 covers all generator triples). Violations are
/// data, not errors.
pub fn check_presentation(p: &Presentation, degree_bound: u32) -> Result<CheckReport> {
    let mut report = CheckReport::default();
    let n = p.generator_count();
    let ring = p.ring();

    for i in 0..n {
        for j in (i + 1)..n {
            if p.c(i, j).is_zero() {
                report.violations.push(Violation {
                    location: format!("c[{},{}]", i + 1, j + 1),
                    detail: "pair constant must be nonzero".to_string(),
                });
            }
        }
    }

    if p.is_quasi_commutative() {
        for i in 0..n {
            if !p.delta(i).is_zero() {
                report.violations.push(Violation {
                    location: format!("delta[{}]", i + 1),
                    detail: "quasi-commutative presentations have zero derivations".to_string(),
                });
            }
        }
        for i in 0..n {
            for j in (i + 1)..n {
                if !p.tail(i, j).is_zero() {
                    report.violations.push(Violation {
                        location: format!("tail[{},{}]", i + 1, j + 1),
                        detail: "quasi-commutative presentations have zero tails".to_string(),
                    });
                }
            }
        }
    }

    if p.is_bijective() {
        for i in 0..n {
            if !p.sigma(i).is_invertible() {
                report.violations.push(Violation {
                    location: format!("sigma[{}]", i + 1),
                    detail: "bijective presentations need invertible sigma data".to_string(),
                });
            }
        }
        for i in 0..n {
            for j in (i + 1)..n {
                if !p.c(i, j).is_unit() {
                    report.violations.push(Violation {
                        location: format!("c[{},{}]", i + 1, j + 1),
                        detail: "bijective presentations need unit pair constants".to_string(),
                    });
                }
            }
        }
    }

    // Rewriting consistency: mixed associativity over all monomial
    // triples within the degree bound. The deterministic normal form
    // makes (uv)w = u(vw) fail exactly where reduction orders disagree.
    let bound = degree_bound.max(3);
    let mut monos: Vec<Monomial> = Vec::new();
    for d in 1..=bound.saturating_sub(2) {
        monos.extend(monomials_of_degree(n, d));
    }
    for u in &monos {
        for v in &monos {
            for w in &monos {
                if u.degree() + v.degree() + w.degree() > bound {
                    continue;
                }
                let eu = p.monomial_element(u.clone());
                let ev = p.monomial_element(v.clone());
                let ew = p.monomial_element(w.clone());
                let left = p.mul(&p.mul(&eu, &ev)?, &ew)?;
                let right = p.mul(&eu, &p.mul(&ev, &ew)?)?;
                if left != right {
                    report.violations.push(Violation {
                        location: format!(
                            "overlap {} * {} * {}",
                            mono_label(u),
                            mono_label(v),
                            mono_label(w)
                        ),
                        detail: "reduction orders disagree".to_string(),
                    });
                }
            }
        }
    }

    // Both reductions of x_a x_b r for every ring generator r.
    for a in 0..n {
        for b in 0..n {
            for g in 0..ring.generator_count() {
                let r = p.constant_element(ring.generator(g));
                let ea = p.generator_element(a);
                let eb = p.generator_element(b);
                let left = p.mul(&p.mul(&ea, &eb)?, &r)?;
                let right = p.mul(&ea, &p.mul(&eb, &r)?)?;
                if left != right {
                    report.violations.push(Violation {
                        location: format!(
                            "overlap x{} * x{} * {}",
                            a + 1,
                            b + 1,
                            ring.generator_names()[g]
                        ),
                        detail: "reduction orders disagree".to_string(),
                    });
                }
            }
        }
    }

    Ok(report)
}

fn mono_label(m: &Monomial) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.exponents().iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(format!("x{}", i + 1)),
            _ => parts.push(format!("x{}^{}", i + 1, e)),
        }
    }
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_enumeration() {
        assert_eq!(monomials_of_degree(2, 2).len(), 3);
        assert_eq!(monomials_of_degree(3, 1).len(), 3);
        assert_eq!(monomials_of_degree(1, 4).len(), 1);
    }
}
