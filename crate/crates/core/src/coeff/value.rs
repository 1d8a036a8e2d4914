//! Coefficient rings and their values.
//!
//! Three exact coefficient rings are supported: the rational field, a
//! univariate rational function field, and multivariate polynomial rings
//! over the rationals. Values are canonical, so `==` decides ring
//! equality. Every value carries the representation of exactly one ring
//! kind; mixing kinds (or polynomial rings of different arity) is a ring
//! mismatch.

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::multipoly::MultiPoly;
use super::ratfunc::RatFunc;
use super::unipoly::Rat;
use crate::error::{Error, Result};

/// Description of a coefficient ring.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CoeffRingSpec {
    Rational,
    RationalFunction { parameter: String },
    Polynomial { variables: Vec<String> },
}

impl CoeffRingSpec {
    pub fn rational() -> Self {
        CoeffRingSpec::Rational
    }

    pub fn rational_function(parameter: impl Into<String>) -> Self {
        CoeffRingSpec::RationalFunction {
            parameter: parameter.into(),
        }
    }

    pub fn polynomial<S: Into<String>>(variables: impl IntoIterator<Item = S>) -> Self {
        CoeffRingSpec::Polynomial {
            variables: variables.into_iter().map(Into::into).collect(),
        }
    }

    /// Structural sanity: nonempty, pairwise distinct variable names.
    pub fn validate(&self) -> Result<()> {
        if let CoeffRingSpec::Polynomial { variables } = self {
            if variables.is_empty() {
                return Err(Error::InvalidPresentation(
                    "polynomial ring needs at least one variable".to_string(),
                ));
            }
            for (i, v) in variables.iter().enumerate() {
                if variables[..i].contains(v) {
                    return Err(Error::InvalidPresentation(format!(
                        "duplicate ring variable `{v}`"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Number of ring generators carrying endomorphism/derivation images:
    /// the variables of a polynomial ring, or the single parameter of a
    /// rational function field.
    pub fn generator_count(&self) -> usize {
        match self {
            CoeffRingSpec::Rational => 0,
            CoeffRingSpec::RationalFunction { .. } => 1,
            CoeffRingSpec::Polynomial { variables } => variables.len(),
        }
    }

    pub fn generator_names(&self) -> Vec<String> {
        match self {
            CoeffRingSpec::Rational => Vec::new(),
            CoeffRingSpec::RationalFunction { parameter } => vec![parameter.clone()],
            CoeffRingSpec::Polynomial { variables } => variables.clone(),
        }
    }

    /// Whether the ring is a field.
    pub fn is_field(&self) -> bool {
        !matches!(self, CoeffRingSpec::Polynomial { .. })
    }

    pub fn zero(&self) -> CoeffValue {
        match self {
            CoeffRingSpec::Rational => CoeffValue::Rational(Rat::zero()),
            CoeffRingSpec::RationalFunction { .. } => CoeffValue::RationalFunction(RatFunc::zero()),
            CoeffRingSpec::Polynomial { variables } => {
                CoeffValue::Polynomial(MultiPoly::zero(variables.len()))
            }
        }
    }

    pub fn one(&self) -> CoeffValue {
        self.from_rat(Rat::one())
    }

    pub fn from_rat(&self, r: Rat) -> CoeffValue {
        match self {
            CoeffRingSpec::Rational => CoeffValue::Rational(r),
            CoeffRingSpec::RationalFunction { .. } => {
                CoeffValue::RationalFunction(RatFunc::constant(r))
            }
            CoeffRingSpec::Polynomial { variables } => {
                CoeffValue::Polynomial(MultiPoly::constant(variables.len(), r))
            }
        }
    }

    pub fn from_int(&self, n: i64) -> CoeffValue {
        self.from_rat(Rat::from(num_bigint::BigInt::from(n)))
    }

    /// The i-th ring generator (0-based): a polynomial variable or the
    /// function-field parameter.
    pub fn generator(&self, i: usize) -> CoeffValue {
        match self {
            CoeffRingSpec::Rational => panic!("rational field has no ring generators"),
            CoeffRingSpec::RationalFunction { .. } => {
                assert_eq!(i, 0);
                CoeffValue::RationalFunction(RatFunc::var())
            }
            CoeffRingSpec::Polynomial { variables } => {
                CoeffValue::Polynomial(MultiPoly::var(variables.len(), i))
            }
        }
    }

    /// Checks that a value is represented in this ring.
    pub fn contains(&self, v: &CoeffValue) -> bool {
        match (self, v) {
            (CoeffRingSpec::Rational, CoeffValue::Rational(_)) => true,
            (CoeffRingSpec::RationalFunction { .. }, CoeffValue::RationalFunction(_)) => true,
            (CoeffRingSpec::Polynomial { variables }, CoeffValue::Polynomial(p)) => {
                p.nvars() == variables.len()
            }
            _ => false,
        }
    }

    pub fn check_member(&self, v: &CoeffValue) -> Result<()> {
        if self.contains(v) {
            Ok(())
        } else {
            Err(Error::RingMismatch(format!(
                "value {v:?} is not a member of {self:?}"
            )))
        }
    }

    /// The corresponding fraction field: fields map to themselves, a
    /// univariate polynomial ring maps to the rational function field in
    /// its variable. Multivariate fraction fields are unsupported.
    pub fn fraction_field(&self) -> Result<CoeffRingSpec> {
        match self {
            CoeffRingSpec::Rational => Ok(CoeffRingSpec::Rational),
            CoeffRingSpec::RationalFunction { parameter } => {
                Ok(CoeffRingSpec::rational_function(parameter.clone()))
            }
            CoeffRingSpec::Polynomial { variables } => {
                if variables.len() == 1 {
                    Ok(CoeffRingSpec::rational_function(variables[0].clone()))
                } else {
                    Err(Error::UnsupportedFractionField(format!(
                        "{} polynomial variables",
                        variables.len()
                    )))
                }
            }
        }
    }

    /// Embeds a value of this ring into its fraction field.
    pub fn to_fraction_field(&self, v: &CoeffValue) -> Result<CoeffValue> {
        self.check_member(v)?;
        match v {
            CoeffValue::Rational(_) | CoeffValue::RationalFunction(_) => Ok(v.clone()),
            CoeffValue::Polynomial(p) => {
                self.fraction_field()?;
                Ok(CoeffValue::RationalFunction(RatFunc::from_poly(
                    p.to_unipoly(),
                )))
            }
        }
    }
}

/// Binary operation selector for [`arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

/// An exact, canonical coefficient value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoeffValue {
    Rational(Rat),
    RationalFunction(RatFunc),
    Polynomial(MultiPoly),
}

impl CoeffValue {
    pub fn is_zero(&self) -> bool {
        match self {
            CoeffValue::Rational(r) => r.is_zero(),
            CoeffValue::RationalFunction(f) => f.is_zero(),
            CoeffValue::Polynomial(p) => p.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            CoeffValue::Rational(r) => r.is_one(),
            CoeffValue::RationalFunction(f) => f.as_constant().is_some_and(|c| c.is_one()),
            CoeffValue::Polynomial(p) => p.as_constant().is_some_and(|c| c.is_one()),
        }
    }

    /// Units: nonzero field elements, nonzero constant polynomials.
    pub fn is_unit(&self) -> bool {
        match self {
            CoeffValue::Rational(r) => !r.is_zero(),
            CoeffValue::RationalFunction(f) => !f.is_zero(),
            CoeffValue::Polynomial(p) => p.as_constant().is_some_and(|c| !c.is_zero()),
        }
    }

    pub fn as_rat(&self) -> Option<Rat> {
        match self {
            CoeffValue::Rational(r) => Some(r.clone()),
            CoeffValue::RationalFunction(f) => f.as_constant(),
            CoeffValue::Polynomial(p) => p.as_constant(),
        }
    }

    fn mismatch(a: &CoeffValue, b: &CoeffValue) -> Error {
        Error::RingMismatch(format!("operands {a:?} and {b:?}"))
    }

    pub fn neg(&self) -> CoeffValue {
        match self {
            CoeffValue::Rational(r) => CoeffValue::Rational(-r),
            CoeffValue::RationalFunction(f) => CoeffValue::RationalFunction(f.neg()),
            CoeffValue::Polynomial(p) => CoeffValue::Polynomial(p.neg()),
        }
    }
}

pub fn add(a: &CoeffValue, b: &CoeffValue) -> Result<CoeffValue> {
    match (a, b) {
        (CoeffValue::Rational(x), CoeffValue::Rational(y)) => Ok(CoeffValue::Rational(x + y)),
        (CoeffValue::RationalFunction(x), CoeffValue::RationalFunction(y)) => {
            Ok(CoeffValue::RationalFunction(x.add(y)))
        }
        (CoeffValue::Polynomial(x), CoeffValue::Polynomial(y)) if x.nvars() == y.nvars() => {
            Ok(CoeffValue::Polynomial(x.add(y)))
        }
        _ => Err(CoeffValue::mismatch(a, b)),
    }
}

pub fn sub(a: &CoeffValue, b: &CoeffValue) -> Result<CoeffValue> {
    add(a, &b.neg())
}

pub fn mul(a: &CoeffValue, b: &CoeffValue) -> Result<CoeffValue> {
    match (a, b) {
        (CoeffValue::Rational(x), CoeffValue::Rational(y)) => Ok(CoeffValue::Rational(x * y)),
        (CoeffValue::RationalFunction(x), CoeffValue::RationalFunction(y)) => {
            Ok(CoeffValue::RationalFunction(x.mul(y)))
        }
        (CoeffValue::Polynomial(x), CoeffValue::Polynomial(y)) if x.nvars() == y.nvars() => {
            Ok(CoeffValue::Polynomial(x.mul(y)))
        }
        _ => Err(CoeffValue::mismatch(a, b)),
    }
}

/// Exact arithmetic on two same-ring values.
pub fn arith(a: &CoeffValue, b: &CoeffValue, op: ArithOp) -> Result<CoeffValue> {
    match op {
        ArithOp::Add => add(a, b),
        ArithOp::Sub => sub(a, b),
        ArithOp::Mul => mul(a, b),
    }
}

/// Multiplicative inverse of a unit.
pub fn invert(a: &CoeffValue) -> Result<CoeffValue> {
    if a.is_zero() {
        return Err(Error::DivisionByZero);
    }
    match a {
        CoeffValue::Rational(r) => Ok(CoeffValue::Rational(Rat::one() / r)),
        CoeffValue::RationalFunction(f) => Ok(CoeffValue::RationalFunction(f.invert()?)),
        CoeffValue::Polynomial(p) => match p.as_constant() {
            Some(c) if !c.is_zero() => Ok(CoeffValue::Polynomial(MultiPoly::constant(
                p.nvars(),
                Rat::one() / c,
            ))),
            _ => Err(Error::NotAUnit(format!("{a:?}"))),
        },
    }
}

/// Exact division `a / b`; in a polynomial ring the division must leave no
/// remainder.
pub fn div(a: &CoeffValue, b: &CoeffValue) -> Result<CoeffValue> {
    if b.is_zero() {
        return Err(Error::DivisionByZero);
    }
    match (a, b) {
        (CoeffValue::Polynomial(x), CoeffValue::Polynomial(y)) if x.nvars() == y.nvars() => {
            Ok(CoeffValue::Polynomial(x.exact_div(y)?))
        }
        (CoeffValue::Polynomial(_), CoeffValue::Polynomial(_)) => Err(CoeffValue::mismatch(a, b)),
        _ => mul(a, &invert(b)?),
    }
}

/// Integer power; negative exponents require a unit base.
pub fn pow_int(a: &CoeffValue, e: i64, ring: &CoeffRingSpec) -> Result<CoeffValue> {
    let base = if e < 0 { invert(a)? } else { a.clone() };
    let mut acc = ring.one();
    for _ in 0..e.unsigned_abs() {
        acc = mul(&acc, &base)?;
    }
    Ok(acc)
}

/// Total degree used by samplers and display heuristics: 0 for field
/// elements, total degree for polynomials.
pub fn poly_degree(a: &CoeffValue) -> u32 {
    match a {
        CoeffValue::Polynomial(p) => p.total_degree().unwrap_or(0),
        _ => 0,
    }
}

/// True when the leading rendered sign of the value is negative; used by
/// element formatting.
pub fn is_display_negative(a: &CoeffValue) -> bool {
    match a {
        CoeffValue::Rational(r) => r.is_negative(),
        CoeffValue::RationalFunction(f) => {
            !f.is_zero() && f.num().leading_coeff().is_negative() && f.num().is_constant() && f.den().is_constant()
        }
        CoeffValue::Polynomial(p) => p
            .as_constant()
            .map(|c| c.is_negative())
            .unwrap_or(false),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::unipoly::rat;

    #[test]
    fn rational_arith() {
        let r = CoeffRingSpec::rational();
        let a = r.from_rat(rat(1, 2));
        let b = r.from_rat(rat(1, 3));
        assert_eq!(arith(&a, &b, ArithOp::Add).unwrap(), r.from_rat(rat(5, 6)));
    }

    #[test]
    fn absorbing_zero_in_function_field() {
        let r = CoeffRingSpec::rational_function("q");
        let q = r.generator(0);
        let qp1 = add(&q, &r.one()).unwrap();
        let f = div(&q, &qp1).unwrap();
        assert_eq!(mul(&f, &r.zero()).unwrap(), r.zero());
    }

    #[test]
    fn polynomial_product_expands() {
        let r = CoeffRingSpec::polynomial(["t1", "t2"]);
        let t1 = r.generator(0);
        let t2 = r.generator(1);
        let prod = mul(&add(&t1, &t2).unwrap(), &sub(&t1, &t2).unwrap()).unwrap();
        let expected = sub(&mul(&t1, &t1).unwrap(), &mul(&t2, &t2).unwrap()).unwrap();
        assert_eq!(prod, expected);
    }

    #[test]
    fn mixed_rings_error() {
        let q = CoeffRingSpec::rational().one();
        let t = CoeffRingSpec::polynomial(["t"]).one();
        assert!(matches!(add(&q, &t), Err(Error::RingMismatch(_))));
    }

    #[test]
    fn invert_cases() {
        let r = CoeffRingSpec::rational();
        assert_eq!(
            invert(&r.from_rat(rat(2, 3))).unwrap(),
            r.from_rat(rat(3, 2))
        );
        let qring = CoeffRingSpec::rational_function("q");
        let q = qring.generator(0);
        assert_eq!(mul(&q, &invert(&q).unwrap()).unwrap(), qring.one());
        let tring = CoeffRingSpec::polynomial(["t"]);
        assert!(matches!(
            invert(&tring.generator(0)),
            Err(Error::NotAUnit(_))
        ));
        assert!(matches!(invert(&tring.zero()), Err(Error::DivisionByZero)));
    }

    #[test]
    fn ring_validation() {
        assert!(CoeffRingSpec::polynomial(Vec::<String>::new()).validate().is_err());
        assert!(CoeffRingSpec::polynomial(["t", "t"]).validate().is_err());
        assert!(CoeffRingSpec::polynomial(["t1", "t2"]).validate().is_ok());
    }
}
