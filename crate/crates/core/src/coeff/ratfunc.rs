//! Univariate rational functions in canonical form.
//!
//! Canonical form: numerator and denominator are coprime and the
//! denominator is monic (and nonzero). Zero is `0/1`, so equality of
//! values is equality of representations.

use num_traits::One;

use super::unipoly::{format_unipoly, Rat, UniPoly};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatFunc {
    num: UniPoly,
    den: UniPoly,
}

impl RatFunc {
    pub fn new(num: UniPoly, den: UniPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduced(num, den))
    }

    fn reduced(num: UniPoly, den: UniPoly) -> Self {
        if num.is_zero() {
            return RatFunc {
                num: UniPoly::zero(),
                den: UniPoly::one(),
            };
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_constant() {
            (num, den)
        } else {
            (num.div_rem(&g).0, den.div_rem(&g).0)
        };
        let lead = den.leading_coeff();
        let num = num.scale(&(Rat::one() / &lead));
        let den = den.scale(&(Rat::one() / lead));
        RatFunc { num, den }
    }

    pub fn from_poly(p: UniPoly) -> Self {
        RatFunc {
            num: p,
            den: UniPoly::one(),
        }
    }

    pub fn constant(c: Rat) -> Self {
        RatFunc::from_poly(UniPoly::constant(c))
    }

    pub fn zero() -> Self {
        RatFunc::from_poly(UniPoly::zero())
    }

    pub fn one() -> Self {
        RatFunc::from_poly(UniPoly::one())
    }

    pub fn var() -> Self {
        RatFunc::from_poly(UniPoly::var())
    }

    pub fn num(&self) -> &UniPoly {
        &self.num
    }

    pub fn den(&self) -> &UniPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    pub fn as_constant(&self) -> Option<Rat> {
        if self.is_constant() {
            Some(self.num.coeff(0))
        } else {
            None
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        RatFunc::reduced(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn neg(&self) -> Self {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        RatFunc::reduced(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn invert(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(RatFunc::reduced(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.invert()?))
    }

    /// Substitutes `arg` for the variable; `arg` must be nonconstant so
    /// the denominator cannot collapse to zero.
    pub fn compose(&self, arg: &RatFunc) -> Result<Self> {
        if arg.is_constant() {
            return Err(Error::InvalidMap(
                "substitution image must be nonconstant".to_string(),
            ));
        }
        let eval = |p: &UniPoly| -> RatFunc {
            let mut acc = RatFunc::zero();
            for c in p.coeffs().iter().rev() {
                acc = acc.mul(arg).add(&RatFunc::constant(c.clone()));
            }
            acc
        };
        let n = eval(&self.num);
        let d = eval(&self.den);
        n.div(&d)
    }
}

/// Formats as `num`, or `num/den` with parentheses around composite parts,
/// e.g. `(q^2+1)/(q-1)`, `q`, `-1/2`.
pub fn format_ratfunc(f: &RatFunc, var: &str) -> String {
    let num = format_unipoly(&f.num, var);
    if f.den.is_one_poly() {
        return num;
    }
    let den = format_unipoly(&f.den, var);
    let wrap = |s: String| {
        if s.contains(['+', '-', '*', '/']) || s.contains(' ') {
            format!("({s})")
        } else {
            s
        }
    };
    format!("{}/{}", wrap(num), wrap(den))
}

impl UniPoly {
    fn is_one_poly(&self) -> bool {
        self.degree() == Some(0) && self.coeff(0).is_one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::unipoly::rat_int;

    fn q() -> RatFunc {
        RatFunc::var()
    }

    #[test]
    fn reduction_is_canonical() {
        // (2q + 2) / (2q^2 - 2) = 1/(q - 1)
        let num = UniPoly::from_coeffs(vec![rat_int(2), rat_int(2)]);
        let den = UniPoly::from_coeffs(vec![rat_int(-2), rat_int(0), rat_int(2)]);
        let f = RatFunc::new(num, den).unwrap();
        let expected = RatFunc::one()
            .div(&q().sub(&RatFunc::one()))
            .unwrap();
        assert_eq!(f, expected);
    }

    #[test]
    fn field_inverse() {
        let f = q();
        let inv = f.invert().unwrap();
        assert_eq!(f.mul(&inv), RatFunc::one());
        assert!(RatFunc::zero().invert().is_err());
    }

    #[test]
    fn compose_shift() {
        // 1/q at q -> q + 1 gives 1/(q + 1)
        let f = RatFunc::one().div(&q()).unwrap();
        let shifted = f.compose(&q().add(&RatFunc::one())).unwrap();
        assert_eq!(shifted, RatFunc::one().div(&q().add(&RatFunc::one())).unwrap());
        assert!(f.compose(&RatFunc::one()).is_err());
    }

    #[test]
    fn format_examples() {
        let f = q().mul(&q()).add(&RatFunc::one());
        let g = q().sub(&RatFunc::one());
        assert_eq!(format_ratfunc(&f.div(&g).unwrap(), "q"), "(q^2 + 1)/(q - 1)");
        assert_eq!(format_ratfunc(&q(), "q"), "q");
    }
}
