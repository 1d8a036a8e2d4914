//! Finite presentations of skew PBW extensions.
//!
//! A presentation fixes the coefficient ring `R`, the generator count
//! `n`, per-generator data `(sigma_i, delta_i)` realizing
//! `x_i r = sigma_i(r) x_i + delta_i(r)`, and for each pair `i < j` a
//! nonzero constant and a degree-at-most-one tail realizing
//! `x_j x_i = c_ij x_i x_j + d^1 x_1 + ... + d^n x_n + d^0`.
//!
//! Construction validates the structure and, unless deferred, runs the
//! rewriting consistency check.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::coeff::{self, text, CoeffRingSpec, CoeffValue, DerivSpec, EndoSpec};
use crate::error::{Error, Result};

use super::check::check_presentation;
use super::element::Element;
use super::monomial::Monomial;

/// The degree-at-most-one tail of a pair relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tail {
    pub constant: CoeffValue,
    /// Coefficient of `x_k` at index `k` (0-based), length `n`.
    pub linear: Vec<CoeffValue>,
}

impl Tail {
    pub fn zero(ring: &CoeffRingSpec, n: usize) -> Self {
        Tail {
            constant: ring.zero(),
            linear: vec![ring.zero(); n],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.constant.is_zero() && self.linear.iter().all(CoeffValue::is_zero)
    }
}

/// Relation data for a generator pair `i < j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairRelation {
    pub c: CoeffValue,
    pub tail: Tail,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    ring: CoeffRingSpec,
    n: usize,
    per_generator: Vec<(EndoSpec, DerivSpec)>,
    /// Row-major upper triangle: entry for (i, j), i < j, at index
    /// `i * n - i*(i+1)/2 + (j - i - 1)`.
    pairs: Vec<PairRelation>,
    quasi_commutative: bool,
    bijective: bool,
}

fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

impl Presentation {
    /// Builds a presentation and checks it: structural validation, the
    /// presentation axioms, and the rewriting consistency check at the
    /// default degree bound. Violations are returned as errors.
    pub fn new(
        ring: CoeffRingSpec,
        n: usize,
        per_generator: Vec<(EndoSpec, DerivSpec)>,
        pairs: Vec<PairRelation>,
        quasi_commutative: bool,
        bijective: bool,
    ) -> Result<Presentation> {
        let p = Presentation::new_deferred(
            ring,
            n,
            per_generator,
            pairs,
            quasi_commutative,
            bijective,
        )?;
        let report = check_presentation(&p, 3)?;
        if let Some(first) = report.violations.first() {
            return Err(Error::InconsistentPresentation(
                report.violations.len(),
                format!("{}: {}", first.location, first.detail),
            ));
        }
        Ok(p)
    }

    /// Builds a presentation with only structural validation, deferring
    /// the axiom and consistency checks to an explicit
    /// [`check_presentation`] call. Needed to represent broken
    /// presentations so the checker can report their violations.
    pub fn new_deferred(
        ring: CoeffRingSpec,
        n: usize,
        per_generator: Vec<(EndoSpec, DerivSpec)>,
        pairs: Vec<PairRelation>,
        quasi_commutative: bool,
        bijective: bool,
    ) -> Result<Presentation> {
        ring.validate()?;
        if n == 0 {
            return Err(Error::InvalidPresentation(
                "at least one generator required".to_string(),
            ));
        }
        if per_generator.len() != n {
            return Err(Error::InvalidPresentation(format!(
                "expected {n} (sigma, delta) pairs, got {}",
                per_generator.len()
            )));
        }
        for (sigma, delta) in &per_generator {
            sigma.validate(&ring)?;
            delta.validate(&ring, sigma)?;
        }
        let expected_pairs = n * (n - 1) / 2;
        if pairs.len() != expected_pairs {
            return Err(Error::InvalidPresentation(format!(
                "expected {expected_pairs} pair relations, got {}",
                pairs.len()
            )));
        }
        for rel in &pairs {
            ring.check_member(&rel.c)?;
            ring.check_member(&rel.tail.constant)?;
            if rel.tail.linear.len() != n {
                return Err(Error::InvalidPresentation(format!(
                    "tail linear part must have length {n}"
                )));
            }
            for d in &rel.tail.linear {
                ring.check_member(d)?;
            }
        }
        Ok(Presentation {
            ring,
            n,
            per_generator,
            pairs,
            quasi_commutative,
            bijective,
        })
    }

    pub fn ring(&self) -> &CoeffRingSpec {
        &self.ring
    }

    pub fn generator_count(&self) -> usize {
        self.n
    }

    pub fn is_quasi_commutative(&self) -> bool {
        self.quasi_commutative
    }

    pub fn is_bijective(&self) -> bool {
        self.bijective
    }

    pub fn sigma(&self, i: usize) -> &EndoSpec {
        &self.per_generator[i].0
    }

    pub fn delta(&self, i: usize) -> &DerivSpec {
        &self.per_generator[i].1
    }

    pub fn per_generator(&self) -> &[(EndoSpec, DerivSpec)] {
        &self.per_generator
    }

    /// The constant of the relation for `i < j` (0-based).
    pub fn c(&self, i: usize, j: usize) -> &CoeffValue {
        &self.pairs[pair_index(self.n, i, j)].c
    }

    pub fn tail(&self, i: usize, j: usize) -> &Tail {
        &self.pairs[pair_index(self.n, i, j)].tail
    }

    pub fn pair(&self, i: usize, j: usize) -> &PairRelation {
        &self.pairs[pair_index(self.n, i, j)]
    }

    /// The normal form of `x_j x_i` for `i < j`:
    /// `c_ij x_i x_j + tail`.
    pub fn relation_element(&self, i: usize, j: usize) -> Element {
        let rel = self.pair(i, j);
        let mut raw = vec![(
            Monomial::generator(self.n, i)
                .mul(&Monomial::generator(self.n, j))
                .expect("same n"),
            rel.c.clone(),
        )];
        for (k, d) in rel.tail.linear.iter().enumerate() {
            if !d.is_zero() {
                raw.push((Monomial::generator(self.n, k), d.clone()));
            }
        }
        if !rel.tail.constant.is_zero() {
            raw.push((Monomial::unit(self.n), rel.tail.constant.clone()));
        }
        Element::normalize(raw).expect("canonical relation")
    }

    /// Element constructors bound to this presentation's shape.
    pub fn zero_element(&self) -> Element {
        Element::zero()
    }

    pub fn one_element(&self) -> Element {
        Element::constant(self.n, self.ring.one())
    }

    pub fn constant_element(&self, c: CoeffValue) -> Element {
        Element::constant(self.n, c)
    }

    pub fn generator_element(&self, i: usize) -> Element {
        Element::generator(self.n, i, self.ring.one())
    }

    pub fn monomial_element(&self, m: Monomial) -> Element {
        Element::from_term(m, self.ring.one())
    }

    /// Validates that an element fits this presentation: monomial length
    /// and coefficient membership.
    pub fn check_element(&self, f: &Element) -> Result<()> {
        for (m, c) in f.terms() {
            if m.len() != self.n {
                return Err(Error::PresentationMismatch(format!(
                    "monomial arity {} vs {} generators",
                    m.len(),
                    self.n
                )));
            }
            self.ring.check_member(c).map_err(|e| {
                Error::PresentationMismatch(format!("coefficient not in ring: {e}"))
            })?;
        }
        Ok(())
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(PresentationFile::from_presentation(self)).expect("serializable")
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&PresentationFile::from_presentation(self))
            .expect("serializable")
    }

    /// Parses a presentation document and runs the full construction
    /// checks.
    pub fn from_json_str(s: &str) -> Result<Presentation> {
        let file: PresentationFile =
            serde_json::from_str(s).map_err(|e| Error::FileFormat(e.to_string()))?;
        file.into_presentation(false)
    }

    /// Parses a presentation document with checks deferred (used by the
    /// `check` command so broken files can be loaded and reported on).
    pub fn from_json_str_deferred(s: &str) -> Result<Presentation> {
        let file: PresentationFile =
            serde_json::from_str(s).map_err(|e| Error::FileFormat(e.to_string()))?;
        file.into_presentation(true)
    }
}

// ---------------------------------------------------------------------
// File format
// ---------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum MapFile {
    Name(String),
    Images {
        images: BTreeMap<String, String>,
        #[serde(skip_serializing_if = "Option::is_none")]
        inverse_images: Option<BTreeMap<String, String>>,
    },
}

#[derive(Serialize, Deserialize)]
struct TailFile {
    i: usize,
    j: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    constant: Option<String>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    linear: BTreeMap<String, String>,
}

#[derive(Serialize, Deserialize)]
struct FlagsFile {
    quasi_commutative: bool,
    bijective: bool,
}

/// On-disk presentation document. Coefficients are canonical strings in
/// the coefficient text syntax; pair indices are 1-based.
#[derive(Serialize, Deserialize)]
struct PresentationFile {
    ring: CoeffRingSpec,
    n: usize,
    sigma: Vec<MapFile>,
    delta: Vec<MapFile>,
    /// Upper-triangular rows: row `i` holds `c_{i,j}` for `j = i+1..n`.
    c: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    tails: Vec<TailFile>,
    flags: FlagsFile,
}

impl PresentationFile {
    fn from_presentation(p: &Presentation) -> PresentationFile {
        let ring = p.ring();
        let names = ring.generator_names();
        let coeff_str = |v: &CoeffValue| text::format_coeff(ring, v);
        let map_images = |images: &[CoeffValue]| -> BTreeMap<String, String> {
            names
                .iter()
                .cloned()
                .zip(images.iter().map(coeff_str))
                .collect()
        };
        let sigma = p
            .per_generator
            .iter()
            .map(|(s, _)| match s {
                EndoSpec::Identity => MapFile::Name("identity".to_string()),
                EndoSpec::GeneratorImages {
                    images,
                    inverse_images,
                } => MapFile::Images {
                    images: map_images(images),
                    inverse_images: inverse_images.as_deref().map(map_images),
                },
            })
            .collect();
        let delta = p
            .per_generator
            .iter()
            .map(|(_, d)| match d {
                DerivSpec::Zero => MapFile::Name("zero".to_string()),
                DerivSpec::GeneratorImages { images } => MapFile::Images {
                    images: map_images(images),
                    inverse_images: None,
                },
            })
            .collect();
        let mut c = Vec::new();
        let mut tails = Vec::new();
        for i in 0..p.n {
            let mut row = Vec::new();
            for j in (i + 1)..p.n {
                let rel = p.pair(i, j);
                row.push(coeff_str(&rel.c));
                if !rel.tail.is_zero() {
                    tails.push(TailFile {
                        i: i + 1,
                        j: j + 1,
                        constant: if rel.tail.constant.is_zero() {
                            None
                        } else {
                            Some(coeff_str(&rel.tail.constant))
                        },
                        linear: rel
                            .tail
                            .linear
                            .iter()
                            .enumerate()
                            .filter(|(_, d)| !d.is_zero())
                            .map(|(k, d)| ((k + 1).to_string(), coeff_str(d)))
                            .collect(),
                    });
                }
            }
            if !row.is_empty() {
                c.push(row);
            }
        }
        PresentationFile {
            ring: ring.clone(),
            n: p.n,
            sigma,
            delta,
            c,
            tails,
            flags: FlagsFile {
                quasi_commutative: p.quasi_commutative,
                bijective: p.bijective,
            },
        }
    }

    fn into_presentation(self, deferred: bool) -> Result<Presentation> {
        let ring = self.ring;
        ring.validate()?;
        let n = self.n;
        let names = ring.generator_names();
        let parse = |s: &str| text::parse_coeff(&ring, s);
        let parse_images = |m: &BTreeMap<String, String>| -> Result<Vec<CoeffValue>> {
            names
                .iter()
                .map(|name| {
                    let s = m.get(name).ok_or_else(|| {
                        Error::FileFormat(format!("missing image for ring generator `{name}`"))
                    })?;
                    parse(s)
                })
                .collect()
        };
        if self.sigma.len() != n || self.delta.len() != n {
            return Err(Error::FileFormat(format!(
                "expected {n} sigma and delta entries"
            )));
        }
        let mut per_generator = Vec::with_capacity(n);
        for (s, d) in self.sigma.iter().zip(&self.delta) {
            let sigma = match s {
                MapFile::Name(name) if name == "identity" => EndoSpec::Identity,
                MapFile::Name(name) => {
                    return Err(Error::FileFormat(format!("unknown sigma kind `{name}`")))
                }
                MapFile::Images {
                    images,
                    inverse_images,
                } => EndoSpec::GeneratorImages {
                    images: parse_images(images)?,
                    inverse_images: inverse_images.as_ref().map(|m| parse_images(m)).transpose()?,
                },
            };
            let delta = match d {
                MapFile::Name(name) if name == "zero" => DerivSpec::Zero,
                MapFile::Name(name) => {
                    return Err(Error::FileFormat(format!("unknown delta kind `{name}`")))
                }
                MapFile::Images { images, .. } => DerivSpec::GeneratorImages {
                    images: parse_images(images)?,
                },
            };
            per_generator.push((sigma, delta));
        }
        let expected_rows: usize = if n > 1 { n - 1 } else { 0 };
        if self.c.len() != expected_rows {
            return Err(Error::FileFormat(format!(
                "expected {expected_rows} rows in the c table"
            )));
        }
        let mut pairs = Vec::with_capacity(n * (n - 1) / 2);
        for (i, row) in self.c.iter().enumerate() {
            if row.len() != n - 1 - i {
                return Err(Error::FileFormat(format!(
                    "row {i} of the c table must have {} entries",
                    n - 1 - i
                )));
            }
            for s in row {
                pairs.push(PairRelation {
                    c: parse(s)?,
                    tail: Tail::zero(&ring, n),
                });
            }
        }
        for t in &self.tails {
            if t.i == 0 || t.j == 0 || t.i >= t.j || t.j > n {
                return Err(Error::FileFormat(format!(
                    "tail indices ({}, {}) out of range",
                    t.i, t.j
                )));
            }
            let idx = pair_index(n, t.i - 1, t.j - 1);
            let tail = &mut pairs[idx].tail;
            if let Some(c) = &t.constant {
                tail.constant = parse(c)?;
            }
            for (k, v) in &t.linear {
                let k: usize = k
                    .parse()
                    .map_err(|_| Error::FileFormat(format!("bad tail index `{k}`")))?;
                if k == 0 || k > n {
                    return Err(Error::FileFormat(format!("tail index {k} out of range")));
                }
                tail.linear[k - 1] = parse(v)?;
            }
        }
        let build = if deferred {
            Presentation::new_deferred
        } else {
            Presentation::new
        };
        build(
            ring,
            n,
            per_generator,
            pairs,
            self.flags.quasi_commutative,
            self.flags.bijective,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_index_layout() {
        // n = 4: (0,1) (0,2) (0,3) (1,2) (1,3) (2,3)
        let expected = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        for (idx, (i, j)) in expected.iter().enumerate() {
            assert_eq!(pair_index(4, *i, *j), idx);
        }
    }
}
