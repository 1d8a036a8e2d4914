//! The normal-form rewriting engine.
//!
//! Products are computed by left-multiplying canonical elements one
//! generator at a time. The two primitive moves are the defining
//! relations: a generator past a coefficient,
//! `x_i r = sigma_i(r) x_i + delta_i(r)`, and a generator past a smaller
//! generator, `x_i x_m = c_mi x_m x_i + tail` for `m < i`. Every rewrite
//! either lowers the total degree of the monomial being reduced or lowers
//! the index of the generator being pushed, so the recursion terminates
//! unconditionally; a step counter asserts a coarse bound as a guard
//! against regressions.

use crate::coeff::{self, apply_endo, apply_endo_inv, apply_deriv, CoeffValue};
use crate::error::{Error, Result};

use super::element::Element;
use super::monomial::Monomial;
use super::presentation::Presentation;

struct Engine<'p> {
    p: &'p Presentation,
    steps: usize,
    cap: usize,
}

impl<'p> Engine<'p> {
    fn new(p: &'p Presentation, cap: usize) -> Self {
        Engine { p, steps: 0, cap }
    }

    fn count_step(&mut self) {
        self.steps += 1;
        assert!(
            self.steps <= self.cap,
            "rewrite step bound exceeded ({} steps): non-terminating reduction",
            self.steps
        );
    }

    /// Normal form of `x_i * x^beta`.
    fn gen_times_monomial(&mut self, i: usize, beta: &Monomial) -> Result<Element> {
        let sorted = beta.exponents()[..i].iter().all(|&e| e == 0);
        if sorted {
            let mono = Monomial::generator(self.p.generator_count(), i).mul(beta)?;
            return Ok(self.p.monomial_element(mono));
        }
        self.count_step();
        let m = beta.first_generator().expect("nonzero exponent exists");
        debug_assert!(m < i);
        let rest = beta.strip_generator(m);

        // x_i x^beta = (x_i x_m) x^rest
        //            = c_mi x_m (x_i x^rest) + sum_k d^k (x_k x^rest) + d0 x^rest
        let rel = self.p.pair(m, i).clone();
        let inner = self.gen_times_monomial(i, &rest)?;
        let mut acc = self
            .gen_times_element(m, &inner)?
            .scale_left(&rel.c)?;
        for (k, d) in rel.tail.linear.iter().enumerate() {
            if d.is_zero() {
                continue;
            }
            let part = self.gen_times_monomial(k, &rest)?.scale_left(d)?;
            acc = acc.add(&part)?;
        }
        if !rel.tail.constant.is_zero() {
            acc = acc.add(&Element::from_term(rest, rel.tail.constant.clone()))?;
        }
        Ok(acc)
    }

    /// Normal form of `x_i * f`.
    fn gen_times_element(&mut self, i: usize, f: &Element) -> Result<Element> {
        let ring = self.p.ring();
        let sigma = self.p.sigma(i);
        let delta = self.p.delta(i);
        let mut acc = Element::zero();
        for (beta, c) in f.terms() {
            let moved = apply_endo(sigma, c, ring)?;
            if !moved.is_zero() {
                let part = self.gen_times_monomial(i, beta)?.scale_left(&moved)?;
                acc = acc.add(&part)?;
            }
            let lowered = apply_deriv(delta, sigma, c, ring)?;
            if !lowered.is_zero() {
                acc = acc.add(&Element::from_term(beta.clone(), lowered))?;
            }
        }
        Ok(acc)
    }

    /// Normal form of `x^alpha * f`, applying generators innermost-first.
    fn monomial_times_element(&mut self, alpha: &Monomial, f: &Element) -> Result<Element> {
        let mut acc = f.clone();
        for i in (0..alpha.len()).rev() {
            for _ in 0..alpha.exponent(i) {
                if acc.is_zero() {
                    return Ok(acc);
                }
                acc = self.gen_times_element(i, &acc)?;
            }
        }
        Ok(acc)
    }
}

fn step_cap(p: &Presentation, f: &Element, g: &Element) -> usize {
    let d = f.degree().unwrap_or(0) + g.degree().unwrap_or(0);
    let base = (d as usize + 2)
        .saturating_pow(p.generator_count() as u32 + 2)
        .saturating_mul(f.num_terms().max(1))
        .saturating_mul(g.num_terms().max(1));
    base.max(10_000)
}

impl Presentation {
    /// Canonical normal form of the product `f * g`.
    pub fn mul(&self, f: &Element, g: &Element) -> Result<Element> {
        self.check_element(f)?;
        self.check_element(g)?;
        let mut engine = Engine::new(self, step_cap(self, f, g));
        let mut acc = Element::zero();
        for (alpha, a) in f.terms() {
            let part = engine
                .monomial_times_element(alpha, g)?
                .scale_left(a)?;
            acc = acc.add(&part)?;
        }
        Ok(acc)
    }

    /// Canonical sum `f + g` (free-module addition).
    pub fn add(&self, f: &Element, g: &Element) -> Result<Element> {
        self.check_element(f)?;
        self.check_element(g)?;
        f.add(g)
    }

    /// `sigma^alpha(r) = sigma_1^{a_1}(... sigma_n^{a_n}(r) ...)`:
    /// the innermost factor `sigma_n^{a_n}` applies first, so the result
    /// matches the leading coefficient of `x^alpha * r`.
    pub fn sigma_alpha(&self, alpha: &Monomial, r: &CoeffValue) -> Result<CoeffValue> {
        let mut acc = r.clone();
        for i in (0..alpha.len()).rev() {
            for _ in 0..alpha.exponent(i) {
                acc = apply_endo(self.sigma(i), &acc, self.ring())?;
            }
        }
        Ok(acc)
    }

    /// `sigma^{-alpha}(r)`, the inverse of [`Presentation::sigma_alpha`];
    /// requires inverse data on every sigma it touches.
    pub fn sigma_alpha_inv(&self, alpha: &Monomial, r: &CoeffValue) -> Result<CoeffValue> {
        let mut acc = r.clone();
        for i in 0..alpha.len() {
            for _ in 0..alpha.exponent(i) {
                acc = apply_endo_inv(self.sigma(i), &acc, self.ring())
                    .map_err(|_| Error::MissingInverse(i + 1))?;
            }
        }
        Ok(acc)
    }

    /// Splits `x^alpha * r` as `r_alpha x^alpha + p` with
    /// `deg p < |alpha|`; `r` must be nonzero.
    pub fn monomial_times_coeff(
        &self,
        alpha: &Monomial,
        r: &CoeffValue,
    ) -> Result<(CoeffValue, Element)> {
        if r.is_zero() {
            return Err(Error::ZeroCoefficient);
        }
        let prod = self.mul(
            &self.monomial_element(alpha.clone()),
            &self.constant_element(r.clone()),
        )?;
        let r_alpha = prod
            .coeff_of(alpha)
            .cloned()
            .ok_or_else(|| Error::InvalidPresentation("leading coefficient vanished".into()))?;
        let p = prod.sub(&Element::from_term(alpha.clone(), r_alpha.clone()))?;
        Ok((r_alpha, p))
    }

    /// Splits `x^alpha * x^beta` as `c_{alpha,beta} x^{alpha+beta} + p`
    /// with `deg p < |alpha + beta|`.
    pub fn monomial_times_monomial(
        &self,
        alpha: &Monomial,
        beta: &Monomial,
    ) -> Result<(CoeffValue, Element)> {
        let prod = self.mul(
            &self.monomial_element(alpha.clone()),
            &self.monomial_element(beta.clone()),
        )?;
        let target = alpha.mul(beta)?;
        let c = prod
            .coeff_of(&target)
            .cloned()
            .unwrap_or_else(|| self.ring().zero());
        let p = prod.sub(&Element::from_term(target, c.clone()))?;
        Ok((c, p))
    }

    /// Left-multiplies a canonical term-list product without the
    /// element-shape checks; used internally by the Ore solvers.
    pub(crate) fn mul_unchecked(&self, f: &Element, g: &Element) -> Result<Element> {
        let mut engine = Engine::new(self, step_cap(self, f, g));
        let mut acc = Element::zero();
        for (alpha, a) in f.terms() {
            let part = engine.monomial_times_element(alpha, g)?.scale_left(a)?;
            acc = acc.add(&part)?;
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{CoeffRingSpec, DerivSpec, EndoSpec};
    use crate::pbw::presentation::{PairRelation, Tail};

    /// Weyl algebra A_1 over Q[t]: x t = t x + 1.
    fn weyl1() -> Presentation {
        let ring = CoeffRingSpec::polynomial(["t"]);
        let delta = DerivSpec::generator_images(&ring, &EndoSpec::Identity, vec![ring.one()]).unwrap();
        Presentation::new(
            ring,
            1,
            vec![(EndoSpec::Identity, delta)],
            vec![],
            false,
            true,
        )
        .unwrap()
    }

    /// Quantum plane over Q(q): x2 x1 = q x1 x2.
    fn quantum_plane() -> Presentation {
        let ring = CoeffRingSpec::rational_function("q");
        let q = ring.generator(0);
        Presentation::new(
            ring.clone(),
            2,
            vec![
                (EndoSpec::Identity, DerivSpec::Zero),
                (EndoSpec::Identity, DerivSpec::Zero),
            ],
            vec![PairRelation {
                c: q,
                tail: Tail::zero(&ring, 2),
            }],
            true,
            true,
        )
        .unwrap()
    }

    fn t_elem(p: &Presentation) -> Element {
        p.constant_element(p.ring().generator(0))
    }

    #[test]
    fn weyl_defining_relation() {
        let p = weyl1();
        let x = p.generator_element(0);
        let t = t_elem(&p);
        // x t = t x + 1
        let prod = p.mul(&x, &t).unwrap();
        let expected = Element::normalize(vec![
            (Monomial::new(vec![1]), p.ring().generator(0)),
            (Monomial::new(vec![0]), p.ring().one()),
        ])
        .unwrap();
        assert_eq!(prod, expected);
    }

    #[test]
    fn weyl_second_power() {
        let p = weyl1();
        let x2 = p.monomial_element(Monomial::new(vec![2]));
        let t = t_elem(&p);
        // x^2 t = t x^2 + 2x
        let prod = p.mul(&x2, &t).unwrap();
        let expected = Element::normalize(vec![
            (Monomial::new(vec![2]), p.ring().generator(0)),
            (Monomial::new(vec![1]), p.ring().from_int(2)),
        ])
        .unwrap();
        assert_eq!(prod, expected);
    }

    #[test]
    fn quantum_plane_power_swap() {
        let p = quantum_plane();
        let x2sq = p.monomial_element(Monomial::new(vec![0, 2]));
        let x1sq = p.monomial_element(Monomial::new(vec![2, 0]));
        // x2^2 x1^2 = q^4 x1^2 x2^2
        let prod = p.mul(&x2sq, &x1sq).unwrap();
        let q = p.ring().generator(0);
        let q4 = coeff::pow_int(&q, 4, p.ring()).unwrap();
        let expected = Element::from_term(Monomial::new(vec![2, 2]), q4);
        assert_eq!(prod, expected);
    }

    #[test]
    fn sigma_alpha_composes() {
        // shift algebra: sigma(t) = t + 1, alpha = (3): sigma^alpha(t) = t + 3
        let ring = CoeffRingSpec::polynomial(["t"]);
        let t = ring.generator(0);
        let shift = EndoSpec::generator_images(
            &ring,
            vec![coeff::add(&t, &ring.one()).unwrap()],
            Some(vec![coeff::sub(&t, &ring.one()).unwrap()]),
        )
        .unwrap();
        let p = Presentation::new(ring.clone(), 1, vec![(shift, DerivSpec::Zero)], vec![], true, true).unwrap();
        let got = p.sigma_alpha(&Monomial::new(vec![3]), &t).unwrap();
        assert_eq!(got, coeff::add(&t, &ring.from_int(3)).unwrap());
        // round-trip through the inverse
        assert_eq!(p.sigma_alpha_inv(&Monomial::new(vec![3]), &got).unwrap(), t);
    }

    #[test]
    fn monomial_times_coeff_weyl() {
        let p = weyl1();
        let (r_alpha, tail) = p
            .monomial_times_coeff(&Monomial::new(vec![1]), &p.ring().generator(0))
            .unwrap();
        assert_eq!(r_alpha, p.ring().generator(0));
        assert_eq!(tail, p.one_element());
        // alpha = 0 returns (r, 0)
        let (r0, p0) = p
            .monomial_times_coeff(&Monomial::new(vec![0]), &p.ring().generator(0))
            .unwrap();
        assert_eq!(r0, p.ring().generator(0));
        assert!(p0.is_zero());
        assert!(p
            .monomial_times_coeff(&Monomial::new(vec![1]), &p.ring().zero())
            .is_err());
    }

    #[test]
    fn monomial_times_monomial_quantum() {
        let p = quantum_plane();
        let (c, tail) = p
            .monomial_times_monomial(&Monomial::new(vec![0, 2]), &Monomial::new(vec![2, 0]))
            .unwrap();
        let q = p.ring().generator(0);
        assert_eq!(c, coeff::pow_int(&q, 4, p.ring()).unwrap());
        assert!(tail.is_zero());
        // beta = 0 gives (1, 0)
        let (c0, t0) = p
            .monomial_times_monomial(&Monomial::new(vec![1, 1]), &Monomial::new(vec![0, 0]))
            .unwrap();
        assert!(c0.is_one());
        assert!(t0.is_zero());
    }
}
