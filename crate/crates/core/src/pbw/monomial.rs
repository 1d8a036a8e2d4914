//! Standard monomials and the graded lexicographic order.

use std::cmp::Ordering;

use crate::error::{Error, Result};

/// A standard monomial `x_1^{a_1} ... x_n^{a_n}`, stored as its exponent
/// vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    exponents: Vec<u32>,
}

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial { exponents }
    }

    /// The monomial 1.
    pub fn unit(n: usize) -> Self {
        Monomial {
            exponents: vec![0; n],
        }
    }

    /// The generator `x_i` (0-based index).
    pub fn generator(n: usize, i: usize) -> Self {
        assert!(i < n);
        let mut exponents = vec![0; n];
        exponents[i] = 1;
        Monomial { exponents }
    }

    pub fn len(&self) -> usize {
        self.exponents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exponents.is_empty()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.exponents[i]
    }

    /// Total degree `|alpha|`.
    pub fn degree(&self) -> u32 {
        self.exponents.iter().sum()
    }

    pub fn is_unit(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch(self.len(), other.len()));
        }
        Ok(Monomial {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    /// Removes one factor of `x_i`; panics if the exponent is zero.
    pub fn strip_generator(&self, i: usize) -> Monomial {
        assert!(self.exponents[i] > 0);
        let mut exponents = self.exponents.clone();
        exponents[i] -= 1;
        Monomial { exponents }
    }

    /// Index of the first (heaviest) generator with nonzero exponent.
    pub fn first_generator(&self) -> Option<usize> {
        self.exponents.iter().position(|&e| e > 0)
    }
}

/// Total order on monomials: compare total degree first, then the first
/// differing exponent, with `x_1` the heaviest generator.
pub fn compare_monomials(a: &Monomial, b: &Monomial) -> Result<Ordering> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch(a.len(), b.len()));
    }
    Ok(cmp_graded_lex(a.exponents(), b.exponents()))
}

pub(crate) fn cmp_graded_lex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().zip(b) {
            match x.cmp(y) {
                Ordering::Equal => continue,
                other => return other,
            }
        }
        Ordering::Equal
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn first_variable_heaviest() {
        assert_eq!(
            compare_monomials(&m(&[1, 0]), &m(&[0, 1])).unwrap(),
            Ordering::Greater
        );
    }

    #[test]
    fn degree_dominates() {
        assert_eq!(
            compare_monomials(&m(&[0, 2]), &m(&[1, 0])).unwrap(),
            Ordering::Greater
        );
    }

    #[test]
    fn equal_monomials() {
        assert_eq!(
            compare_monomials(&m(&[1, 1]), &m(&[1, 1])).unwrap(),
            Ordering::Equal
        );
    }

    #[test]
    fn length_mismatch_is_an_error() {
        assert!(compare_monomials(&m(&[1]), &m(&[1, 0])).is_err());
    }
}
