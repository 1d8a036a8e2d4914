//! Ring endomorphisms and sigma-derivations of coefficient rings.
//!
//! Both are given by generator images: polynomial-ring variables, or the
//! single parameter of a rational function field (where the data extends
//! to the whole field by substitution and the quotient rule). The
//! rational field admits only the identity and the zero derivation.

use num_traits::Zero;

use super::multipoly::MultiPoly;
use super::ratfunc::RatFunc;
use super::unipoly::UniPoly;
use super::value::{self, CoeffRingSpec, CoeffValue};
use crate::error::{Error, Result};

/// An injective ring endomorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EndoSpec {
    Identity,
    GeneratorImages {
        images: Vec<CoeffValue>,
        inverse_images: Option<Vec<CoeffValue>>,
    },
}

impl EndoSpec {
    pub fn identity() -> Self {
        EndoSpec::Identity
    }

    /// Builds and validates a generator-image endomorphism; inverse
    /// images, when given, are verified to compose to the identity on
    /// every ring generator.
    pub fn generator_images(
        ring: &CoeffRingSpec,
        images: Vec<CoeffValue>,
        inverse_images: Option<Vec<CoeffValue>>,
    ) -> Result<Self> {
        let spec = EndoSpec::GeneratorImages {
            images,
            inverse_images,
        };
        spec.validate(ring)?;
        Ok(spec)
    }

    pub fn is_identity(&self) -> bool {
        matches!(self, EndoSpec::Identity)
    }

    /// Whether the inverse action is available.
    pub fn is_invertible(&self) -> bool {
        match self {
            EndoSpec::Identity => true,
            EndoSpec::GeneratorImages { inverse_images, .. } => inverse_images.is_some(),
        }
    }

    pub fn validate(&self, ring: &CoeffRingSpec) -> Result<()> {
        let EndoSpec::GeneratorImages {
            images,
            inverse_images,
        } = self
        else {
            return Ok(());
        };
        if matches!(ring, CoeffRingSpec::Rational) {
            return Err(Error::InvalidMap(
                "the rational field admits only the identity endomorphism".to_string(),
            ));
        }
        let gens = ring.generator_count();
        if images.len() != gens {
            return Err(Error::InvalidMap(format!(
                "expected {gens} generator images, got {}",
                images.len()
            )));
        }
        for img in images {
            ring.check_member(img)?;
        }
        if let CoeffRingSpec::RationalFunction { .. } = ring {
            // The substitution must be nonconstant to land in the field.
            if let CoeffValue::RationalFunction(f) = &images[0] {
                if f.is_constant() {
                    return Err(Error::InvalidMap(
                        "parameter image must be nonconstant".to_string(),
                    ));
                }
            }
        }
        if let Some(inv) = inverse_images {
            if inv.len() != gens {
                return Err(Error::InvalidMap(format!(
                    "expected {gens} inverse images, got {}",
                    inv.len()
                )));
            }
            for img in inv {
                ring.check_member(img)?;
            }
            let inverse = EndoSpec::GeneratorImages {
                images: inv.clone(),
                inverse_images: None,
            };
            for i in 0..gens {
                let t = ring.generator(i);
                let round1 = apply_endo(self, &apply_endo(&inverse, &t, ring)?, ring)?;
                let round2 = apply_endo(&inverse, &apply_endo(self, &t, ring)?, ring)?;
                if round1 != t || round2 != t {
                    return Err(Error::InvalidMap(format!(
                        "inverse images do not invert the endomorphism on generator {i}"
                    )));
                }
            }
        }
        Ok(())
    }

    /// The inverse endomorphism; requires inverse data.
    pub fn inverse(&self) -> Result<EndoSpec> {
        match self {
            EndoSpec::Identity => Ok(EndoSpec::Identity),
            EndoSpec::GeneratorImages {
                images,
                inverse_images: Some(inv),
            } => Ok(EndoSpec::GeneratorImages {
                images: inv.clone(),
                inverse_images: Some(images.clone()),
            }),
            EndoSpec::GeneratorImages {
                inverse_images: None,
                ..
            } => Err(Error::MissingInverse(0)),
        }
    }
}

/// A sigma-derivation: additive, kills the base rationals, and satisfies
/// `delta(ab) = sigma(a) delta(b) + delta(a) b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DerivSpec {
    Zero,
    GeneratorImages { images: Vec<CoeffValue> },
}

impl DerivSpec {
    pub fn zero() -> Self {
        DerivSpec::Zero
    }

    pub fn generator_images(
        ring: &CoeffRingSpec,
        sigma: &EndoSpec,
        images: Vec<CoeffValue>,
    ) -> Result<Self> {
        let spec = DerivSpec::GeneratorImages { images };
        spec.validate(ring, sigma)?;
        Ok(spec)
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, DerivSpec::Zero)
    }

    pub fn validate(&self, ring: &CoeffRingSpec, sigma: &EndoSpec) -> Result<()> {
        let DerivSpec::GeneratorImages { images } = self else {
            return Ok(());
        };
        if matches!(ring, CoeffRingSpec::Rational) {
            return Err(Error::InvalidMap(
                "the rational field admits only the zero derivation".to_string(),
            ));
        }
        let gens = ring.generator_count();
        if images.len() != gens {
            return Err(Error::InvalidMap(format!(
                "expected {gens} derivation images, got {}",
                images.len()
            )));
        }
        for img in images {
            ring.check_member(img)?;
        }
        // Commutativity of the ring forces
        //   delta(t_j) (sigma(t_i) - t_i) = delta(t_i) (sigma(t_j) - t_j)
        // for all generator pairs; arbitrary images break this once sigma
        // moves more than one variable.
        for i in 0..gens {
            for j in (i + 1)..gens {
                let ti = ring.generator(i);
                let tj = ring.generator(j);
                let si = value::sub(&apply_endo(sigma, &ti, ring)?, &ti)?;
                let sj = value::sub(&apply_endo(sigma, &tj, ring)?, &tj)?;
                let lhs = value::mul(&images[j], &si)?;
                let rhs = value::mul(&images[i], &sj)?;
                if lhs != rhs {
                    return Err(Error::InvalidMap(format!(
                        "generator images are not a sigma-derivation (pair {i},{j})"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Applies an endomorphism to a ring value.
pub fn apply_endo(sigma: &EndoSpec, a: &CoeffValue, ring: &CoeffRingSpec) -> Result<CoeffValue> {
    ring.check_member(a)?;
    let EndoSpec::GeneratorImages { images, .. } = sigma else {
        return Ok(a.clone());
    };
    match a {
        CoeffValue::Rational(_) => Ok(a.clone()),
        CoeffValue::Polynomial(p) => {
            let imgs: Vec<MultiPoly> = images
                .iter()
                .map(|v| match v {
                    CoeffValue::Polynomial(m) => m.clone(),
                    _ => unreachable!("validated polynomial images"),
                })
                .collect();
            Ok(CoeffValue::Polynomial(p.substitute(&imgs)))
        }
        CoeffValue::RationalFunction(f) => {
            let CoeffValue::RationalFunction(img) = &images[0] else {
                unreachable!("validated function-field image")
            };
            Ok(CoeffValue::RationalFunction(f.compose(img)?))
        }
    }
}

/// Applies the inverse endomorphism; requires inverse data.
pub fn apply_endo_inv(
    sigma: &EndoSpec,
    a: &CoeffValue,
    ring: &CoeffRingSpec,
) -> Result<CoeffValue> {
    apply_endo(&sigma.inverse()?, a, ring)
}

/// Applies a sigma-derivation to a ring value.
pub fn apply_deriv(
    delta: &DerivSpec,
    sigma: &EndoSpec,
    a: &CoeffValue,
    ring: &CoeffRingSpec,
) -> Result<CoeffValue> {
    ring.check_member(a)?;
    let DerivSpec::GeneratorImages { images } = delta else {
        return Ok(ring.zero());
    };
    match a {
        CoeffValue::Rational(_) => Ok(a.clone()).map(|_| ring.zero()),
        CoeffValue::Polynomial(p) => {
            let sigma_imgs: Vec<MultiPoly> = (0..p.nvars())
                .map(|i| match apply_endo(sigma, &ring.generator(i), ring) {
                    Ok(CoeffValue::Polynomial(m)) => m,
                    _ => unreachable!("validated endomorphism"),
                })
                .collect();
            let delta_imgs: Vec<MultiPoly> = images
                .iter()
                .map(|v| match v {
                    CoeffValue::Polynomial(m) => m.clone(),
                    _ => unreachable!("validated derivation images"),
                })
                .collect();
            Ok(CoeffValue::Polynomial(deriv_multipoly(
                p,
                &sigma_imgs,
                &delta_imgs,
            )))
        }
        CoeffValue::RationalFunction(f) => {
            let CoeffValue::RationalFunction(dimg) = &images[0] else {
                unreachable!("validated derivation image")
            };
            let simg = match sigma {
                EndoSpec::Identity => RatFunc::var(),
                EndoSpec::GeneratorImages { images, .. } => match &images[0] {
                    CoeffValue::RationalFunction(s) => s.clone(),
                    _ => unreachable!("validated endomorphism image"),
                },
            };
            Ok(CoeffValue::RationalFunction(deriv_ratfunc(
                f, &simg, dimg,
            )?))
        }
    }
}

/// Derivation of a multivariate polynomial by structural recursion on
/// monomials: peel the first variable with nonzero exponent and apply
/// `delta(t m) = sigma(t) delta(m) + delta(t) m`.
fn deriv_multipoly(
    p: &MultiPoly,
    sigma_imgs: &[MultiPoly],
    delta_imgs: &[MultiPoly],
) -> MultiPoly {
    let nvars = p.nvars();

    fn mono_deriv(
        exp: &[u32],
        nvars: usize,
        sigma_imgs: &[MultiPoly],
        delta_imgs: &[MultiPoly],
    ) -> MultiPoly {
        let Some(i) = exp.iter().position(|&e| e > 0) else {
            return MultiPoly::zero(nvars);
        };
        let mut rest = exp.to_vec();
        rest[i] -= 1;
        let rest_mono = MultiPoly::from_terms(
            nvars,
            [(rest.clone(), num_rational::BigRational::from_integer(1.into()))],
        );
        let inner = mono_deriv(&rest, nvars, sigma_imgs, delta_imgs);
        sigma_imgs[i]
            .mul(&inner)
            .add(&delta_imgs[i].mul(&rest_mono))
    }

    let mut out = MultiPoly::zero(nvars);
    for (exp, c) in p.terms() {
        out = out.add(&mono_deriv(exp, nvars, sigma_imgs, delta_imgs).scale(c));
    }
    out
}

/// Derivation of a rational function: derive numerator and denominator as
/// polynomials, then apply the localized quotient rule
/// `delta(a/s) = -(delta(s)/sigma(s)) (a/s) + delta(a)/sigma(s)`.
fn deriv_ratfunc(f: &RatFunc, sigma_img: &RatFunc, delta_img: &RatFunc) -> Result<RatFunc> {
    let dpoly = |p: &UniPoly| -> RatFunc {
        // delta(t^k) = sigma(t) delta(t^{k-1}) + delta(t) t^{k-1}
        let mut power_deriv = RatFunc::zero();
        let mut power = RatFunc::one(); // t^{k-1} as k grows
        let mut acc = RatFunc::zero();
        for (k, c) in p.coeffs().iter().enumerate() {
            if k > 0 {
                power_deriv = sigma_img.mul(&power_deriv).add(&delta_img.mul(&power));
                power = power.mul(&RatFunc::var());
            }
            if !c.is_zero() {
                acc = acc.add(&power_deriv.mul(&RatFunc::constant(c.clone())));
            }
        }
        acc
    };
    let a = RatFunc::from_poly(f.num().clone());
    let s = RatFunc::from_poly(f.den().clone());
    let da = dpoly(f.num());
    let ds = dpoly(f.den());
    let sigma_s = sigma_of_poly(f.den(), sigma_img)?;
    let lhs = ds.div(&sigma_s)?.mul(&a.div(&s)?).neg();
    Ok(lhs.add(&da.div(&sigma_s)?))
}

fn sigma_of_poly(p: &UniPoly, sigma_img: &RatFunc) -> Result<RatFunc> {
    let mut acc = RatFunc::zero();
    let mut power = RatFunc::one();
    for c in p.coeffs() {
        if !c.is_zero() {
            acc = acc.add(&power.mul(&RatFunc::constant(c.clone())));
        }
        power = power.mul(sigma_img);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::unipoly::rat_int;

    fn poly_ring() -> CoeffRingSpec {
        CoeffRingSpec::polynomial(["t"])
    }

    #[test]
    fn identity_fixes_everything() {
        let ring = CoeffRingSpec::rational_function("q");
        let q = ring.generator(0);
        let v = value::add(&value::mul(&q, &q).unwrap(), &ring.one()).unwrap();
        assert_eq!(apply_endo(&EndoSpec::Identity, &v, &ring).unwrap(), v);
    }

    #[test]
    fn shift_endo_squares() {
        let ring = poly_ring();
        let t = ring.generator(0);
        let shift = EndoSpec::generator_images(
            &ring,
            vec![value::add(&t, &ring.one()).unwrap()],
            None,
        )
        .unwrap();
        let t2 = value::mul(&t, &t).unwrap();
        // (t+1)^2 = t^2 + 2t + 1
        let expected = value::add(
            &value::add(&t2, &value::mul(&ring.from_int(2), &t).unwrap()).unwrap(),
            &ring.one(),
        )
        .unwrap();
        assert_eq!(apply_endo(&shift, &t2, &ring).unwrap(), expected);
    }

    #[test]
    fn scaling_endo_on_cube() {
        // sigma(t) = 2t: sigma(3 t^2) = 12 t^2
        let ring = poly_ring();
        let t = ring.generator(0);
        let double = EndoSpec::generator_images(
            &ring,
            vec![value::mul(&ring.from_int(2), &t).unwrap()],
            Some(vec![value::mul(&ring.from_rat(crate::coeff::unipoly::rat(1, 2)), &t).unwrap()]),
        )
        .unwrap();
        let v = value::mul(&ring.from_int(3), &value::mul(&t, &t).unwrap()).unwrap();
        let expected = value::mul(&ring.from_int(12), &value::mul(&t, &t).unwrap()).unwrap();
        assert_eq!(apply_endo(&double, &v, &ring).unwrap(), expected);
    }

    #[test]
    fn bad_inverse_rejected() {
        let ring = poly_ring();
        let t = ring.generator(0);
        let shift_img = value::add(&t, &ring.one()).unwrap();
        assert!(EndoSpec::generator_images(&ring, vec![shift_img.clone()], Some(vec![t.clone()])).is_err());
        let good = EndoSpec::generator_images(
            &ring,
            vec![shift_img],
            Some(vec![value::sub(&t, &ring.one()).unwrap()]),
        );
        assert!(good.is_ok());
    }

    #[test]
    fn derivation_product_rule() {
        // delta(t) = 1, sigma = id: delta(t^2) = 2t
        let ring = poly_ring();
        let t = ring.generator(0);
        let d = DerivSpec::generator_images(&ring, &EndoSpec::Identity, vec![ring.one()]).unwrap();
        let t2 = value::mul(&t, &t).unwrap();
        assert_eq!(
            apply_deriv(&d, &EndoSpec::Identity, &t2, &ring).unwrap(),
            value::mul(&ring.from_int(2), &t).unwrap()
        );
    }

    #[test]
    fn sigma_leibniz_with_scaling() {
        // delta(t) = 1, sigma(t) = 2t: delta(t^2) = sigma(t) + t = 3t
        let ring = poly_ring();
        let t = ring.generator(0);
        let sigma = EndoSpec::generator_images(
            &ring,
            vec![value::mul(&ring.from_int(2), &t).unwrap()],
            None,
        )
        .unwrap();
        let d = DerivSpec::generator_images(&ring, &sigma, vec![ring.one()]).unwrap();
        let t2 = value::mul(&t, &t).unwrap();
        assert_eq!(
            apply_deriv(&d, &sigma, &t2, &ring).unwrap(),
            value::mul(&ring.from_int(3), &t).unwrap()
        );
    }

    #[test]
    fn zero_derivation() {
        let ring = poly_ring();
        let t = ring.generator(0);
        assert_eq!(
            apply_deriv(&DerivSpec::Zero, &EndoSpec::Identity, &t, &ring).unwrap(),
            ring.zero()
        );
    }

    #[test]
    fn inconsistent_multivariate_derivation_rejected() {
        let ring = CoeffRingSpec::polynomial(["t1", "t2"]);
        let t1 = ring.generator(0);
        let t2 = ring.generator(1);
        let sigma = EndoSpec::generator_images(
            &ring,
            vec![value::mul(&ring.from_int(2), &t1).unwrap(), t2.clone()],
            None,
        )
        .unwrap();
        // delta(t1) = 0 but delta(t2) = 1 clashes with sigma moving t1.
        let bad = DerivSpec::generator_images(&ring, &sigma, vec![ring.zero(), ring.one()]);
        assert!(bad.is_err());
    }

    #[test]
    fn field_derivation_quotient_rule() {
        // Weyl data on the fraction field: delta = d/dt, delta(1/t) = -1/t^2
        let ring = CoeffRingSpec::rational_function("t");
        let t = ring.generator(0);
        let d = DerivSpec::generator_images(&ring, &EndoSpec::Identity, vec![ring.one()]).unwrap();
        let inv_t = value::invert(&t).unwrap();
        let got = apply_deriv(&d, &EndoSpec::Identity, &inv_t, &ring).unwrap();
        let expected = value::invert(&value::mul(&t, &t).unwrap()).unwrap().neg();
        assert_eq!(got, expected);
        let _ = rat_int(0);
    }
}
