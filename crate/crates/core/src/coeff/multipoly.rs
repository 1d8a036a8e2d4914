//! Sparse multivariate polynomials over arbitrary-precision rationals.
//!
//! Terms map a dense exponent vector (fixed length = number of ring
//! variables) to a nonzero rational. The `BTreeMap` keeps exponent vectors
//! in lexicographic order, which is the internal canonical order.

use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};

use super::unipoly::{format_rat, Rat, UniPoly};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Rat>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rat) -> Self {
        let mut p = MultiPoly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        MultiPoly::constant(nvars, Rat::one())
    }

    /// The i-th ring variable (0-based).
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars);
        let mut exp = vec![0; nvars];
        exp[i] = 1;
        let mut terms = BTreeMap::new();
        terms.insert(exp, Rat::one());
        MultiPoly { nvars, terms }
    }

    pub fn from_terms(nvars: usize, raw: impl IntoIterator<Item = (Vec<u32>, Rat)>) -> Self {
        let mut p = MultiPoly::zero(nvars);
        for (exp, c) in raw {
            assert_eq!(exp.len(), nvars, "exponent vector length");
            p.add_term(exp, c);
        }
        p
    }

    fn add_term(&mut self, exp: Vec<u32>, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.keys().next().unwrap().iter().all(|&e| e == 0))
    }

    /// The constant value if this polynomial is constant.
    pub fn as_constant(&self) -> Option<Rat> {
        if self.is_zero() {
            Some(Rat::zero())
        } else if self.is_constant() {
            self.terms.values().next().cloned()
        } else {
            None
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rat)> {
        self.terms.iter()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (exp, c) in &other.terms {
            out.add_term(exp.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut out = MultiPoly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exp: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(exp, ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return MultiPoly::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, a)| (e.clone(), a * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = MultiPoly::one(self.nvars);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Exact division: `self = q * divisor` with zero remainder, else an
    /// error. Division runs against the lexicographically leading term.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(c) = divisor.as_constant() {
            return Ok(self.scale(&(Rat::one() / c)));
        }
        let (dexp, dcoef) = divisor.terms.iter().next_back().map(|(e, c)| (e.clone(), c.clone())).unwrap();
        let mut rem = self.clone();
        let mut quot = MultiPoly::zero(self.nvars);
        while !rem.is_zero() {
            let (rexp, rcoef) = rem.terms.iter().next_back().map(|(e, c)| (e.clone(), c.clone())).unwrap();
            let mut qexp = vec![0u32; self.nvars];
            for i in 0..self.nvars {
                if rexp[i] < dexp[i] {
                    return Err(Error::NotAUnit(format!(
                        "polynomial division leaves a remainder"
                    )));
                }
                qexp[i] = rexp[i] - dexp[i];
            }
            let qcoef = rcoef / &dcoef;
            let t = MultiPoly::from_terms(self.nvars, [(qexp, qcoef)]);
            rem = rem.sub(&t.mul(divisor));
            quot = quot.add(&t);
        }
        Ok(quot)
    }

    /// Substitutes `images[i]` for the i-th variable (a ring homomorphism
    /// fixing the rationals).
    pub fn substitute(&self, images: &[MultiPoly]) -> Self {
        assert_eq!(images.len(), self.nvars);
        let nvars = images.first().map_or(self.nvars, MultiPoly::nvars);
        let mut out = MultiPoly::zero(nvars);
        for (exp, c) in &self.terms {
            let mut term = MultiPoly::constant(nvars, c.clone());
            for (i, &e) in exp.iter().enumerate() {
                if e > 0 {
                    term = term.mul(&images[i].pow(e));
                }
            }
            out = out.add(&term);
        }
        out
    }

    /// View as a univariate polynomial; only valid when `nvars == 1`.
    pub fn to_unipoly(&self) -> UniPoly {
        assert_eq!(self.nvars, 1, "univariate view of a multivariate polynomial");
        let deg = self.terms.keys().map(|e| e[0]).max().unwrap_or(0) as usize;
        let mut coeffs = vec![Rat::zero(); deg + 1];
        for (exp, c) in &self.terms {
            coeffs[exp[0] as usize] = c.clone();
        }
        UniPoly::from_coeffs(coeffs)
    }

    pub fn from_unipoly(p: &UniPoly) -> Self {
        MultiPoly::from_terms(
            1,
            p.coeffs()
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (vec![i as u32], c.clone())),
        )
    }
}

/// Formats with terms in descending lexicographic exponent order,
/// e.g. `3*t1^2 - 1/2`.
pub fn format_multipoly(p: &MultiPoly, names: &[String]) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    let mut first = true;
    for (exp, c) in p.terms.iter().rev() {
        let mag = c.abs();
        let neg = c.is_negative();
        if first {
            if neg {
                out.push('-');
            }
            first = false;
        } else if neg {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let mut parts: Vec<String> = Vec::new();
        if !mag.is_one() || exp.iter().all(|&e| e == 0) {
            parts.push(format_rat(&mag));
        }
        for (i, &e) in exp.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(names[i].clone()),
                _ => parts.push(format!("{}^{}", names[i], e)),
            }
        }
        out.push_str(&parts.join("*"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::unipoly::rat_int;

    fn t(i: usize) -> MultiPoly {
        MultiPoly::var(2, i)
    }

    #[test]
    fn difference_of_squares() {
        let sum = t(0).add(&t(1));
        let diff = t(0).sub(&t(1));
        let prod = sum.mul(&diff);
        let expected = t(0).mul(&t(0)).sub(&t(1).mul(&t(1)));
        assert_eq!(prod, expected);
    }

    #[test]
    fn exact_div_roundtrip() {
        let a = t(0).add(&t(1));
        let b = t(0).mul(&t(0)).sub(&t(1).mul(&t(1)));
        let q = b.exact_div(&a).unwrap();
        assert_eq!(q.mul(&a), b);
        assert!(t(0).exact_div(&a).is_err());
    }

    #[test]
    fn substitute_is_homomorphic() {
        // t1 -> t1 + 1, t2 -> 2*t2 applied to t1*t2
        let images = vec![
            t(0).add(&MultiPoly::one(2)),
            t(1).scale(&rat_int(2)),
        ];
        let p = t(0).mul(&t(1));
        let img = p.substitute(&images);
        let expected = t(0).add(&MultiPoly::one(2)).mul(&t(1).scale(&rat_int(2)));
        assert_eq!(img, expected);
    }

    #[test]
    fn format_examples() {
        let p = t(0).mul(&t(0)).scale(&rat_int(3)).sub(&MultiPoly::constant(2, rat_int(1) / rat_int(2)));
        assert_eq!(
            format_multipoly(&p, &["t1".into(), "t2".into()]),
            "3*t1^2 - 1/2"
        );
    }
}
