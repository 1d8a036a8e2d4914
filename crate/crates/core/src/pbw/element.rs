//! Canonical elements: coefficient-monomial sums in strictly descending
//! monomial order with no zero coefficients. The zero element is the
//! empty sum.

use std::cmp::Ordering;

use crate::coeff::{self, CoeffValue};
use crate::error::{Error, Result};

use super::monomial::{cmp_graded_lex, Monomial};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Element {
    terms: Vec<(Monomial, CoeffValue)>,
}

impl Element {
    pub fn zero() -> Self {
        Element { terms: Vec::new() }
    }

    /// Builds the canonical element from arbitrary raw terms: merges
    /// duplicate monomials, drops zero coefficients, sorts descending.
    pub fn normalize(raw: Vec<(Monomial, CoeffValue)>) -> Result<Element> {
        let mut terms = raw;
        terms.sort_by(|(a, _), (b, _)| cmp_graded_lex(b.exponents(), a.exponents()));
        let mut out: Vec<(Monomial, CoeffValue)> = Vec::with_capacity(terms.len());
        for (mono, c) in terms {
            match out.last_mut() {
                Some((last, acc)) if *last == mono => {
                    *acc = coeff::add(acc, &c)?;
                }
                _ => out.push((mono, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Ok(Element { terms: out })
    }

    pub fn from_term(mono: Monomial, c: CoeffValue) -> Element {
        if c.is_zero() {
            Element::zero()
        } else {
            Element {
                terms: vec![(mono, c)],
            }
        }
    }

    pub fn constant(n: usize, c: CoeffValue) -> Element {
        Element::from_term(Monomial::unit(n), c)
    }

    pub fn generator(n: usize, i: usize, one: CoeffValue) -> Element {
        Element::from_term(Monomial::generator(n, i), one)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(Monomial, CoeffValue)] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Total degree, or None for the zero element.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    /// Leader monomial, leader coefficient, and degree of a nonzero
    /// element.
    pub fn leading_data(&self) -> Result<(&Monomial, &CoeffValue, u32)> {
        let (m, c) = self.terms.first().ok_or(Error::UndefinedLeader)?;
        Ok((m, c, self.degree().expect("nonzero element")))
    }

    /// Coefficient of a specific monomial (zero if absent); linear scan is
    /// fine at the element sizes used here.
    pub fn coeff_of(&self, mono: &Monomial) -> Option<&CoeffValue> {
        self.terms.iter().find(|(m, _)| m == mono).map(|(_, c)| c)
    }

    pub fn add(&self, other: &Element) -> Result<Element> {
        // Merge two already-sorted term lists.
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut i = 0;
        let mut j = 0;
        while i < self.terms.len() && j < other.terms.len() {
            let (ma, ca) = &self.terms[i];
            let (mb, cb) = &other.terms[j];
            if ma.len() != mb.len() {
                return Err(Error::LengthMismatch(ma.len(), mb.len()));
            }
            match cmp_graded_lex(ma.exponents(), mb.exponents()) {
                Ordering::Greater => {
                    out.push((ma.clone(), ca.clone()));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((mb.clone(), cb.clone()));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = coeff::add(ca, cb)?;
                    if !c.is_zero() {
                        out.push((ma.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend(other.terms[j..].iter().cloned());
        Ok(Element { terms: out })
    }

    pub fn neg(&self) -> Element {
        Element {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Element) -> Result<Element> {
        self.add(&other.neg())
    }

    /// Left R-module scaling `r * f`; coefficients multiply on the left.
    pub fn scale_left(&self, r: &CoeffValue) -> Result<Element> {
        if r.is_zero() {
            return Ok(Element::zero());
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let rc = coeff::mul(r, c)?;
            if !rc.is_zero() {
                terms.push((m.clone(), rc));
            }
        }
        Ok(Element { terms })
    }

    /// The sub-sum of terms of maximal total degree.
    pub fn top_degree_part(&self) -> Element {
        let Some(d) = self.degree() else {
            return Element::zero();
        };
        Element {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .cloned()
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::CoeffRingSpec;

    fn ring() -> CoeffRingSpec {
        CoeffRingSpec::rational()
    }

    #[test]
    fn normalize_cancels() {
        let a = Monomial::new(vec![1, 0]);
        let raw = vec![
            (a.clone(), ring().from_int(1)),
            (a.clone(), ring().from_int(-1)),
        ];
        assert!(Element::normalize(raw).unwrap().is_zero());
    }

    #[test]
    fn normalize_orders_terms() {
        let x1 = Monomial::generator(2, 0);
        let x2 = Monomial::generator(2, 1);
        let f = Element::normalize(vec![
            (x2.clone(), ring().from_int(1)),
            (x1.clone(), ring().from_int(1)),
        ])
        .unwrap();
        assert_eq!(f.terms()[0].0, x1);
        assert_eq!(f.terms()[1].0, x2);
    }

    #[test]
    fn constant_element() {
        let f = Element::normalize(vec![(Monomial::unit(2), ring().from_rat(crate::coeff::rat(2, 3)))]).unwrap();
        assert_eq!(f.num_terms(), 1);
        assert_eq!(f.degree(), Some(0));
    }

    #[test]
    fn add_and_cancel() {
        let x1 = Element::generator(2, 0, ring().one());
        let sum = x1.add(&x1.neg()).unwrap();
        assert!(sum.is_zero());
        let f = x1.add(&Element::constant(2, ring().from_int(1))).unwrap();
        let g = x1.sub(&Element::constant(2, ring().from_int(1))).unwrap();
        let two_x1 = f.add(&g).unwrap();
        assert_eq!(two_x1, x1.scale_left(&ring().from_int(2)).unwrap());
    }

    #[test]
    fn leading_data_of_zero_errors() {
        assert!(Element::zero().leading_data().is_err());
    }

    #[test]
    fn leading_data_examples() {
        let x1 = Monomial::generator(2, 0);
        let x2 = Monomial::generator(2, 1);
        let f = Element::normalize(vec![
            (x1.clone(), ring().from_int(2)),
            (x2.clone(), ring().from_int(1)),
        ])
        .unwrap();
        let (lm, lc, deg) = f.leading_data().unwrap();
        assert_eq!(lm, &x1);
        assert_eq!(lc, &ring().from_int(2));
        assert_eq!(deg, 1);

        let x2sq = Monomial::new(vec![0, 2]);
        let g = Element::normalize(vec![
            (x1.clone(), ring().from_int(1)),
            (x2sq.clone(), ring().from_int(1)),
        ])
        .unwrap();
        let (lm, _, deg) = g.leading_data().unwrap();
        assert_eq!(lm, &x2sq);
        assert_eq!(deg, 2);
    }
}
