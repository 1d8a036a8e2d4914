//! Dense univariate polynomials over arbitrary-precision rationals.
//!
//! Coefficients are stored in ascending degree order. Invariant: the
//! vector is empty (zero polynomial) or its last entry is nonzero.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rat = BigRational;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from(BigInt::from(n))
}

/// A univariate polynomial with rational coefficients, `coeffs[i]` the
/// coefficient of the i-th power of the variable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<Rat>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UniPoly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        if c.is_zero() {
            UniPoly::zero()
        } else {
            UniPoly { coeffs: vec![c] }
        }
    }

    /// The variable itself.
    pub fn var() -> Self {
        UniPoly {
            coeffs: vec![Rat::zero(), Rat::one()],
        }
    }

    pub fn from_coeffs(coeffs: Vec<Rat>) -> Self {
        let mut p = UniPoly { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn leading_coeff(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + other.coeff(i));
        }
        UniPoly::from_coeffs(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::from_coeffs(out)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return UniPoly::zero();
        }
        UniPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Euclidean division; panics if `divisor` is zero.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let dlen = divisor.coeffs.len();
        let dlead = divisor.leading_coeff();
        let mut rem = self.coeffs.clone();
        if rem.len() < dlen {
            return (UniPoly::zero(), self.clone());
        }
        let mut quot = vec![Rat::zero(); rem.len() - dlen + 1];
        for k in (0..quot.len()).rev() {
            let top = rem[k + dlen - 1].clone();
            if top.is_zero() {
                continue;
            }
            let q = top / &dlead;
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &q * d;
            }
            quot[k] = q;
        }
        (UniPoly::from_coeffs(quot), UniPoly::from_coeffs(rem))
    }

    /// Monic GCD computed by the Euclidean algorithm; gcd(0, 0) = 0.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.into_monic()
    }

    /// Divides by the leading coefficient; zero stays zero.
    pub fn into_monic(self) -> Self {
        if self.is_zero() {
            return self;
        }
        let lead = self.leading_coeff();
        if lead.is_one() {
            self
        } else {
            UniPoly {
                coeffs: self.coeffs.iter().map(|c| c / &lead).collect(),
            }
        }
    }

    /// Evaluates at another polynomial by Horner's rule.
    pub fn compose(&self, arg: &Self) -> Self {
        let mut acc = UniPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(arg).add(&UniPoly::constant(c.clone()));
        }
        acc
    }

    /// Formal derivative with respect to the variable.
    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return UniPoly::zero();
        }
        let out = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * Rat::from(BigInt::from(i)))
            .collect();
        UniPoly::from_coeffs(out)
    }
}

/// Renders a rational without sign handling surprises: `5`, `-5`, `5/6`.
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Formats as `a*x^k + ...` in descending degree with the given variable
/// name; the zero polynomial prints as `0`.
pub fn format_unipoly(p: &UniPoly, var: &str) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    let mut first = true;
    for i in (0..p.coeffs().len()).rev() {
        let c = p.coeff(i);
        if c.is_zero() {
            continue;
        }
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
        let coeff_part = if mag.is_one() && i > 0 {
            None
        } else {
            Some(format_rat(&mag))
        };
        let var_part = match i {
            0 => None,
            1 => Some(var.to_string()),
            _ => Some(format!("{var}^{i}")),
        };
        match (coeff_part, var_part) {
            (Some(c), Some(v)) => {
                out.push_str(&c);
                out.push('*');
                out.push_str(&v);
            }
            (Some(c), None) => out.push_str(&c),
            (None, Some(v)) => out.push_str(&v),
            (None, None) => unreachable!(),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(cs: &[i64]) -> UniPoly {
        UniPoly::from_coeffs(cs.iter().map(|&c| rat_int(c)).collect())
    }

    #[test]
    fn div_rem_recombines() {
        let a = poly(&[1, 0, 3, 2]); // 2t^3 + 3t^2 + 1
        let b = poly(&[-1, 1]); // t - 1
        let (q, r) = a.div_rem(&b);
        assert_eq!(q.mul(&b).add(&r), a);
        assert!(r.degree() < b.degree());
    }

    #[test]
    fn gcd_of_common_factor() {
        let f = poly(&[-1, 0, 1]); // t^2 - 1
        let g = poly(&[1, 1]); // t + 1
        assert_eq!(f.gcd(&g), g.clone().into_monic());
    }

    #[test]
    fn gcd_is_monic() {
        let f = poly(&[0, 2]); // 2t
        let g = poly(&[0, 0, 4]); // 4t^2
        assert_eq!(f.gcd(&g), poly(&[0, 1]));
    }

    #[test]
    fn compose_shift() {
        // (t^2)(t+1) = t^2 + 2t + 1
        let sq = poly(&[0, 0, 1]);
        let shift = poly(&[1, 1]);
        assert_eq!(sq.compose(&shift), poly(&[1, 2, 1]));
    }

    #[test]
    fn format_descending() {
        let p = poly(&[1, -2, 3]);
        assert_eq!(format_unipoly(&p, "t"), "3*t^2 - 2*t + 1");
        assert_eq!(format_unipoly(&UniPoly::zero(), "t"), "0");
        assert_eq!(format_unipoly(&poly(&[0, 1]), "t"), "t");
    }
}
