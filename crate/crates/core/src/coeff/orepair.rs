//! Coefficient-level Ore pairs.
//!
//! All shipped coefficient rings are commutative domains, so the Ore
//! condition is immediate: fields return the trivial pair, polynomial
//! rings swap the operands. Each pair is re-verified by multiplication
//! before it is returned.

use super::value::{self, CoeffRingSpec, CoeffValue};
use crate::error::{Error, Result};

/// Left Ore pair: `u != 0` with `u * a = r * s`.
pub fn ore_pair_left(
    a: &CoeffValue,
    s: &CoeffValue,
    ring: &CoeffRingSpec,
) -> Result<(CoeffValue, CoeffValue)> {
    if s.is_zero() {
        return Err(Error::InvalidDenominator("zero".to_string()));
    }
    ring.check_member(a)?;
    ring.check_member(s)?;
    let (u, r) = if ring.is_field() {
        (ring.one(), value::mul(a, &value::invert(s)?)?)
    } else {
        (s.clone(), a.clone())
    };
    debug_assert!(!u.is_zero());
    let lhs = value::mul(&u, a)?;
    let rhs = value::mul(&r, s)?;
    if lhs != rhs {
        return Err(Error::InvalidPresentation(
            "ore pair postcondition failed".to_string(),
        ));
    }
    Ok((u, r))
}

/// Right Ore pair: `u != 0` with `a * u = s * r`.
pub fn ore_pair_right(
    a: &CoeffValue,
    s: &CoeffValue,
    ring: &CoeffRingSpec,
) -> Result<(CoeffValue, CoeffValue)> {
    if s.is_zero() {
        return Err(Error::InvalidDenominator("zero".to_string()));
    }
    ring.check_member(a)?;
    ring.check_member(s)?;
    let (u, r) = if ring.is_field() {
        (ring.one(), value::mul(&value::invert(s)?, a)?)
    } else {
        (s.clone(), a.clone())
    };
    let lhs = value::mul(a, &u)?;
    let rhs = value::mul(s, &r)?;
    if lhs != rhs {
        return Err(Error::InvalidPresentation(
            "ore pair postcondition failed".to_string(),
        ));
    }
    Ok((u, r))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::unipoly::rat;

    #[test]
    fn field_pair_is_trivial() {
        let ring = CoeffRingSpec::rational();
        let (u, r) = ore_pair_left(&ring.from_rat(rat(3, 4)), &ring.from_int(2), &ring).unwrap();
        assert_eq!(u, ring.one());
        assert_eq!(r, ring.from_rat(rat(3, 8)));
    }

    #[test]
    fn polynomial_pair_swaps() {
        let ring = CoeffRingSpec::polynomial(["t"]);
        let t = ring.generator(0);
        let a = value::add(&value::mul(&t, &t).unwrap(), &ring.one()).unwrap();
        let (u, r) = ore_pair_left(&a, &t, &ring).unwrap();
        assert_eq!(u, t);
        assert_eq!(r, a);
        let (u2, r2) = ore_pair_right(&value::add(&t, &ring.from_int(2)).unwrap(), &t, &ring).unwrap();
        assert_eq!(u2, t);
        assert_eq!(r2, value::add(&t, &ring.from_int(2)).unwrap());
    }

    #[test]
    fn zero_denominator_rejected() {
        let ring = CoeffRingSpec::rational();
        assert!(matches!(
            ore_pair_left(&ring.one(), &ring.zero(), &ring),
            Err(Error::InvalidDenominator(_))
        ));
    }
}
