//! The standard degree filtration, principal symbols, and the associated
//! graded presentation.
//!
//! `F_m` consists of the elements of degree at most `m`. Passing to the
//! associated graded ring forgets the derivations and the relation tails
//! but keeps every `sigma_i` and every pair constant, which yields a
//! quasi-commutative presentation over the same coefficient ring;
//! bijectivity is preserved.

use crate::coeff::{CoeffValue, DerivSpec, EndoSpec};
use crate::error::{Error, Result};
use crate::pbw::{Element, PairRelation, Presentation, Tail};

/// Index of a filtration component `F_m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct FiltrationDegree(pub u32);

impl FiltrationDegree {
    /// Membership `f` in `F_m`: degree at most `m` (zero lies in every
    /// component).
    pub fn contains(&self, f: &Element) -> bool {
        f.degree().is_none_or(|d| d <= self.0)
    }
}

/// The smallest filtration component containing a nonzero element.
pub fn filtration_degree(f: &Element) -> Result<FiltrationDegree> {
    f.degree().map(FiltrationDegree).ok_or(Error::UndefinedLeader)
}

/// The associated graded presentation: same ring, generators, sigmas, and
/// pair constants; zero derivations and tails; quasi-commutative, with
/// bijectivity carried over.
pub fn associated_graded_presentation(p: &Presentation) -> Result<Presentation> {
    let n = p.generator_count();
    let ring = p.ring().clone();
    let per_generator = (0..n)
        .map(|i| (p.sigma(i).clone(), DerivSpec::Zero))
        .collect();
    let mut pairs = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in (i + 1)..n {
            pairs.push(PairRelation {
                c: p.c(i, j).clone(),
                tail: Tail::zero(&ring, n),
            });
        }
    }
    Presentation::new(ring, n, per_generator, pairs, true, p.is_bijective())
}

/// The image of a nonzero `f` in `F_m / F_{m-1}` for `m = deg f`: the
/// sub-sum of top-degree terms, read in the graded presentation.
pub fn principal_symbol(f: &Element) -> Result<Element> {
    if f.is_zero() {
        return Err(Error::UndefinedLeader);
    }
    Ok(f.top_degree_part())
}

/// Endomorphism data of one step of the iterated skew polynomial view:
/// the action on ring generators and the scaling of each earlier
/// extension generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaAction {
    pub ring_action: EndoSpec,
    /// `theta_i(x_m) = gen_coeffs[m] * x_m` for `m < i`.
    pub gen_coeffs: Vec<CoeffValue>,
}

/// The iterated skew polynomial view of a quasi-commutative presentation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IteratedView {
    pub theta: Vec<ThetaAction>,
    pub bijective: bool,
}

/// Reads the iterated skew polynomial structure off a quasi-commutative
/// presentation: `theta_i` acts as `sigma_i` on the ring and scales each
/// earlier generator by the pair constant.
pub fn iterated_skew_view(p: &Presentation) -> Result<IteratedView> {
    if !p.is_quasi_commutative() {
        return Err(Error::NotQuasiCommutative(
            "iterated skew view needs zero derivations and tails".to_string(),
        ));
    }
    let mut theta = Vec::with_capacity(p.generator_count());
    for i in 0..p.generator_count() {
        let mut gen_coeffs = Vec::with_capacity(i);
        for m in 0..i {
            let c = p.c(m, i).clone();
            if c.is_zero() {
                return Err(Error::InvalidPresentation(format!(
                    "zero action coefficient at ({}, {})",
                    m + 1,
                    i + 1
                )));
            }
            gen_coeffs.push(c);
        }
        theta.push(ThetaAction {
            ring_action: p.sigma(i).clone(),
            gen_coeffs,
        });
    }
    Ok(IteratedView {
        theta,
        bijective: p.is_bijective(),
    })
}

impl IteratedView {
    /// Rebuilds the quasi-commutative presentation; round-trips with
    /// [`iterated_skew_view`].
    pub fn to_presentation(&self, ring: crate::coeff::CoeffRingSpec) -> Result<Presentation> {
        let n = self.theta.len();
        let per_generator = self
            .theta
            .iter()
            .map(|t| (t.ring_action.clone(), DerivSpec::Zero))
            .collect();
        let mut pairs = Vec::with_capacity(n * (n - 1) / 2);
        for i in 0..n {
            for j in (i + 1)..n {
                pairs.push(PairRelation {
                    c: self.theta[j].gen_coeffs[i].clone(),
                    tail: Tail::zero(&ring, n),
                });
            }
        }
        Presentation::new(ring, n, per_generator, pairs, true, self.bijective)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{self, CoeffRingSpec};
    use crate::pbw::Monomial;

    fn weyl1() -> Presentation {
        let ring = CoeffRingSpec::polynomial(["t"]);
        let delta =
            DerivSpec::generator_images(&ring, &EndoSpec::Identity, vec![ring.one()]).unwrap();
        Presentation::new(ring, 1, vec![(EndoSpec::Identity, delta)], vec![], false, true).unwrap()
    }

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

    #[test]
    fn weyl_grades_to_commutative() {
        let p = weyl1();
        let gr = associated_graded_presentation(&p).unwrap();
        assert!(gr.is_quasi_commutative());
        assert!(gr.is_bijective());
        assert!(gr.delta(0).is_zero());
        // x t = t x in the graded ring
        let x = gr.generator_element(0);
        let t = gr.constant_element(gr.ring().generator(0));
        let prod = gr.mul(&x, &t).unwrap();
        assert_eq!(
            prod,
            Element::from_term(Monomial::new(vec![1]), gr.ring().generator(0))
        );
    }

    #[test]
    fn quantum_plane_is_a_fixpoint() {
        let p = quantum_plane();
        let gr = associated_graded_presentation(&p).unwrap();
        assert_eq!(gr, p);
    }

    #[test]
    fn symbol_drops_lower_terms() {
        let p = weyl1();
        let x = p.generator_element(0);
        let t = p.constant_element(p.ring().generator(0));
        let f = p.mul(&x, &t).unwrap(); // t x + 1
        let sym = principal_symbol(&f).unwrap();
        assert_eq!(
            sym,
            Element::from_term(Monomial::new(vec![1]), p.ring().generator(0))
        );
        assert!(principal_symbol(&Element::zero()).is_err());
    }

    #[test]
    fn homogeneous_symbol_is_identity() {
        let p = quantum_plane();
        let f = p
            .mul(
                &p.generator_element(0),
                &p.generator_element(1),
            )
            .unwrap();
        assert_eq!(principal_symbol(&f).unwrap(), f);
    }

    #[test]
    fn iterated_view_of_quantum_plane() {
        let p = quantum_plane();
        let view = iterated_skew_view(&p).unwrap();
        let q = p.ring().generator(0);
        assert_eq!(view.theta[1].gen_coeffs[0], q);
        assert!(view.theta[0].gen_coeffs.is_empty());
        let rebuilt = view.to_presentation(p.ring().clone()).unwrap();
        assert_eq!(rebuilt, p);
    }

    #[test]
    fn iterated_view_rejects_weyl() {
        assert!(matches!(
            iterated_skew_view(&weyl1()),
            Err(Error::NotQuasiCommutative(_))
        ));
    }

    #[test]
    fn filtration_membership() {
        let p = weyl1();
        let x = p.generator_element(0);
        assert!(FiltrationDegree(1).contains(&x));
        assert!(!FiltrationDegree(0).contains(&x));
        assert!(FiltrationDegree(0).contains(&Element::zero()));
        let _ = coeff::rat_int(0);
    }
}
