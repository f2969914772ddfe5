//! Sparse multivariate polynomials `R[x1, ..., xn]` in canonical form.
//!
//! A polynomial is a map from monomials to nonzero canonical coefficients
//! over a fixed [`RingSpec`] and variable count, so two polynomials are
//! mathematically equal exactly when the values are equal. The canonical
//! term order is graded lexicographic: higher total degree first, ties
//! broken on the exponent vector with `x1` most significant. Formatting and
//! term iteration both follow that order, leading term first.

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::parse;
use crate::ring::RingSpec;

/// Exponent vector over `x1..xn`; its length is the ambient variable count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    /// The constant monomial 1 (all exponents zero).
    pub fn constant(nvars: usize) -> Self {
        Monomial {
            exps: vec![0; nvars],
        }
    }

    /// The monomial `x_index` with a 1-based index.
    pub fn variable(nvars: usize, index: usize) -> Result<Self> {
        if index == 0 || index > nvars {
            return Err(Error::VariableOutOfRange { var: index, nvars });
        }
        let mut exps = vec![0; nvars];
        exps[index - 1] = 1;
        Ok(Monomial { exps })
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn is_constant(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u64 {
        self.exps.iter().map(|&e| u64::from(e)).sum()
    }

    /// Weighted degree `sum(exps[i] * weights[i])`; `weights` must have one
    /// entry per variable.
    pub fn weighted_degree(&self, weights: &[u64]) -> Result<u64> {
        if weights.len() != self.exps.len() {
            return Err(Error::LengthMismatch {
                expected: self.exps.len(),
                got: weights.len(),
            });
        }
        Ok(self
            .exps
            .iter()
            .zip(weights)
            .map(|(&e, &w)| u64::from(e) * w)
            .sum())
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a.checked_add(*b).expect("monomial exponent overflow"))
                .collect(),
        }
    }
}

impl Ord for Monomial {
    /// Graded lexicographic order, `x1` most significant.
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A canonical sparse polynomial: no stored coefficient is zero, every
/// coefficient is a canonical representative of the same ring, and every
/// monomial has exactly `nvars` exponents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    ring: RingSpec,
    nvars: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

impl Polynomial {
    pub fn zero(ring: &RingSpec, nvars: usize) -> Self {
        Polynomial {
            ring: ring.clone(),
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ring: &RingSpec, nvars: usize) -> Self {
        Self::constant(ring, nvars, BigInt::one())
    }

    pub fn constant(ring: &RingSpec, nvars: usize, value: BigInt) -> Self {
        let mut p = Self::zero(ring, nvars);
        p.accumulate(Monomial::constant(nvars), ring.canonical(value));
        p
    }

    /// The generator `x_index` (1-based).
    pub fn variable(ring: &RingSpec, nvars: usize, index: usize) -> Result<Self> {
        let m = Monomial::variable(nvars, index)?;
        let mut p = Self::zero(ring, nvars);
        p.accumulate(m, BigInt::one());
        Ok(p)
    }

    /// Builds a polynomial from arbitrary (monomial, coefficient) pairs:
    /// coefficients are canonicalized, equal monomials merged, zeros pruned.
    pub fn from_terms<I>(ring: &RingSpec, nvars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Monomial, BigInt)>,
    {
        let mut p = Self::zero(ring, nvars);
        for (m, c) in terms {
            if m.nvars() != nvars {
                return Err(Error::LengthMismatch {
                    expected: nvars,
                    got: m.nvars(),
                });
            }
            p.accumulate(m, ring.canonical(c));
        }
        Ok(p)
    }

    /// Parses the ASCII polynomial grammar (`x1^2 - 3*x1*x2 + 7`, ...).
    pub fn parse(ring: &RingSpec, nvars: usize, text: &str) -> Result<Self> {
        parse::polynomial(ring, nvars, text)
    }

    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical order, leading term first.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter().rev()
    }

    /// Canonical coefficient of `m`; zero when the monomial is absent.
    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compat(other)?;
        Ok(self.add_raw(other))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_compat(other)?;
        Ok(self.sub_raw(other))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_compat(other)?;
        Ok(self.mul_raw(other))
    }

    /// Additive inverse.
    pub fn neg(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), self.ring.neg_raw(c)))
            .collect();
        Polynomial {
            ring: self.ring.clone(),
            nvars: self.nvars,
            terms,
        }
    }

    /// `self` raised to a nonnegative power.
    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one(&self.ring, self.nvars);
        for _ in 0..exp {
            acc = acc.mul_raw(self);
        }
        acc
    }

    /// Image of `self` under the substitution homomorphism `h`: the unique
    /// ring map fixing the coefficient ring and sending `x_k` to
    /// `h.images()[k-1]`. Powers of each image are memoized per call.
    pub fn substitute(&self, h: &Homomorphism) -> Result<Self> {
        if self.ring != *h.ring() || self.nvars != h.nvars() {
            return Err(Error::SpecMismatch(format!(
                "polynomial over {} in {} variable(s) vs homomorphism over {} in {} variable(s)",
                self.ring,
                self.nvars,
                h.ring(),
                h.nvars()
            )));
        }
        let mut pows: Vec<Vec<Polynomial>> = (0..self.nvars)
            .map(|_| vec![Self::one(&self.ring, self.nvars)])
            .collect();
        let mut acc = Self::zero(&self.ring, self.nvars);
        for (mono, coeff) in &self.terms {
            let mut term = Self::constant(&self.ring, self.nvars, coeff.clone());
            for (i, &e) in mono.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let e = e as usize;
                while pows[i].len() <= e {
                    let next = pows[i].last().unwrap().mul_raw(&h.images()[i]);
                    pows[i].push(next);
                }
                term = term.mul_raw(&pows[i][e]);
            }
            acc = acc.add_raw(&term);
        }
        Ok(acc)
    }

    /// JSON form: `{"ring": "...", "nvars": n, "terms": [{"coeff": "...",
    /// "exps": [...]}, ...]}` with terms in canonical order.
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms()
            .map(|(m, c)| {
                json!({
                    "coeff": c.to_string(),
                    "exps": m.exps().to_vec(),
                })
            })
            .collect();
        json!({
            "ring": self.ring.to_string(),
            "nvars": self.nvars,
            "terms": terms,
        })
    }

    /// Single-term constructor used by the parser; canonicalizes.
    pub(crate) fn single(ring: &RingSpec, nvars: usize, m: Monomial, c: BigInt) -> Self {
        let mut p = Self::zero(ring, nvars);
        p.accumulate(m, ring.canonical(c));
        p
    }

    pub(crate) fn add_raw(&self, other: &Self) -> Self {
        debug_assert!(self.ring == other.ring && self.nvars == other.nvars);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.accumulate(m.clone(), c.clone());
        }
        out
    }

    pub(crate) fn sub_raw(&self, other: &Self) -> Self {
        self.add_raw(&other.neg())
    }

    pub(crate) fn mul_raw(&self, other: &Self) -> Self {
        debug_assert!(self.ring == other.ring && self.nvars == other.nvars);
        let mut out = Self::zero(&self.ring, self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let c = self.ring.mul_raw(ca, cb);
                if c.is_zero() {
                    // zero-divisor product, e.g. 2 * 3 over Z/6
                    continue;
                }
                out.accumulate(ma.mul(mb), c);
            }
        }
        out
    }

    /// Merges one canonical term into the map, pruning zeros.
    fn accumulate(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = self.ring.add_raw(o.get(), &c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    fn check_compat(&self, other: &Self) -> Result<()> {
        if self.ring != other.ring || self.nvars != other.nvars {
            return Err(Error::SpecMismatch(format!(
                "cannot combine a polynomial over {} in {} variable(s) with one over {} in {} variable(s)",
                self.ring, self.nvars, other.ring, other.nvars
            )));
        }
        Ok(())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms() {
            let negative = c.is_negative();
            if first {
                if negative {
                    write!(f, "-")?;
                }
                first = false;
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.magnitude();
            if m.is_constant() {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                write_monomial(f, m)?;
            }
        }
        Ok(())
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, m: &Monomial) -> fmt::Result {
    let mut first = true;
    for (i, &e) in m.exps().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        write!(f, "x{}", i + 1)?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}

/// An assignment of a polynomial image to each generator `x1..xn`. It induces
/// the unique substitution ring homomorphism fixing the coefficient ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Homomorphism {
    ring: RingSpec,
    nvars: usize,
    images: Vec<Polynomial>,
}

impl Homomorphism {
    pub fn new(ring: &RingSpec, nvars: usize, images: Vec<Polynomial>) -> Result<Self> {
        if images.len() != nvars {
            return Err(Error::LengthMismatch {
                expected: nvars,
                got: images.len(),
            });
        }
        for img in &images {
            if img.ring() != ring || img.nvars() != nvars {
                return Err(Error::SpecMismatch(format!(
                    "image over {} in {} variable(s) does not match homomorphism over {} in {} variable(s)",
                    img.ring(),
                    img.nvars(),
                    ring,
                    nvars
                )));
            }
        }
        Ok(Homomorphism {
            ring: ring.clone(),
            nvars,
            images,
        })
    }

    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Image polynomials; entry `k - 1` is the image of `x_k`.
    pub fn images(&self) -> &[Polynomial] {
        &self.images
    }

    /// Image of `x_index` (1-based).
    pub fn image_of(&self, index: usize) -> Option<&Polynomial> {
        if index == 0 {
            return None;
        }
        self.images.get(index - 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z() -> RingSpec {
        RingSpec::integers()
    }

    fn zmod(m: u32) -> RingSpec {
        RingSpec::integers_mod(num_bigint::BigUint::from(m)).unwrap()
    }

    fn p(ring: &RingSpec, nvars: usize, text: &str) -> Polynomial {
        Polynomial::parse(ring, nvars, text).unwrap()
    }

    #[test]
    fn addition_cancels() {
        let a = p(&z(), 1, "x1");
        let b = p(&z(), 1, "-x1");
        let sum = a.add(&b).unwrap();
        assert!(sum.is_zero());
        assert_eq!(sum.num_terms(), 0);
    }

    #[test]
    fn addition_merges() {
        let a = p(&z(), 2, "x1^2 - x2");
        let b = p(&z(), 2, "x2");
        assert_eq!(a.add(&b).unwrap(), p(&z(), 2, "x1^2"));
    }

    #[test]
    fn characteristic_two_addition() {
        let a = p(&zmod(2), 1, "x1");
        assert!(a.add(&a).unwrap().is_zero());
    }

    #[test]
    fn multiplication_adds_exponents() {
        let a = p(&z(), 1, "x1");
        assert_eq!(a.mul(&a).unwrap(), p(&z(), 1, "x1^2"));
    }

    #[test]
    fn difference_of_squares() {
        let a = p(&z(), 2, "x1 - x2");
        let b = p(&z(), 2, "x1 + x2");
        assert_eq!(a.mul(&b).unwrap(), p(&z(), 2, "x1^2 - x2^2"));
    }

    #[test]
    fn zero_divisor_product_vanishes() {
        let a = p(&zmod(6), 1, "2*x1");
        let b = p(&zmod(6), 1, "3*x1");
        assert!(a.mul(&b).unwrap().is_zero());
    }

    #[test]
    fn substitute_generator_image() {
        let images = vec![p(&z(), 2, "x1"), p(&z(), 2, "x1^2 - x2")];
        let h = Homomorphism::new(&z(), 2, images).unwrap();
        let x2 = p(&z(), 2, "x2");
        assert_eq!(x2.substitute(&h).unwrap(), p(&z(), 2, "x1^2 - x2"));
    }

    #[test]
    fn substitute_fixes_constants() {
        let images = vec![p(&z(), 2, "x2 + 5"), p(&z(), 2, "x1*x2")];
        let h = Homomorphism::new(&z(), 2, images).unwrap();
        let c = p(&z(), 2, "-17");
        assert_eq!(c.substitute(&h).unwrap(), c);
    }

    #[test]
    fn substitute_is_multiplicative() {
        let images = vec![p(&z(), 2, "x1 + x2"), p(&z(), 2, "x2^2 - 3")];
        let h = Homomorphism::new(&z(), 2, images).unwrap();
        let a = p(&z(), 2, "x1");
        let b = p(&z(), 2, "x2");
        let prod = a.mul(&b).unwrap();
        let lhs = prod.substitute(&h).unwrap();
        let rhs = a
            .substitute(&h)
            .unwrap()
            .mul(&b.substitute(&h).unwrap())
            .unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn weighted_degree_examples() {
        let weights = [1u64, 2, 3];
        let m = Monomial::new(vec![3, 0, 0]);
        assert_eq!(m.weighted_degree(&weights).unwrap(), 3);
        let m = Monomial::new(vec![1, 1, 0]);
        assert_eq!(m.weighted_degree(&weights).unwrap(), 3);
        let m = Monomial::constant(3);
        assert_eq!(m.weighted_degree(&weights).unwrap(), 0);
        assert!(m.weighted_degree(&[1, 2]).is_err());
    }

    #[test]
    fn format_canonical_order() {
        let q = p(&z(), 4, "x2^2 - x4 + x1^4 + 2*x1*x3 - 3*x1^2*x2");
        assert_eq!(q.to_string(), "x1^4 - 3*x1^2*x2 + 2*x1*x3 + x2^2 - x4");
    }

    #[test]
    fn parse_zero() {
        assert!(p(&z(), 3, "0").is_zero());
        assert_eq!(p(&z(), 3, "0").to_string(), "0");
    }

    #[test]
    fn parse_merges_terms() {
        assert_eq!(p(&z(), 2, "2*x1*x2 + 2*x1*x2"), p(&z(), 2, "4*x1*x2"));
    }

    #[test]
    fn parse_rejects_out_of_range_variable() {
        let err = Polynomial::parse(&z(), 2, "x3").unwrap_err();
        assert_eq!(err, Error::VariableOutOfRange { var: 3, nvars: 2 });
    }

    #[test]
    fn parse_reports_position() {
        match Polynomial::parse(&z(), 2, "x1 + ?").unwrap_err() {
            Error::Parse { pos, .. } => assert_eq!(pos, 5),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn mod_ring_formats_canonical_representatives() {
        let q = p(&zmod(6), 2, "x1^2 - x2");
        assert_eq!(q.to_string(), "x1^2 + 5*x2");
    }

    #[test]
    fn json_shape() {
        let q = p(&z(), 2, "x1^2 - x2");
        let v = q.to_json();
        assert_eq!(
            v,
            serde_json::json!({
                "ring": "z",
                "nvars": 2,
                "terms": [
                    {"coeff": "1", "exps": [2, 0]},
                    {"coeff": "-1", "exps": [0, 1]},
                ],
            })
        );
    }

    #[test]
    fn zero_variable_ring_holds_constants() {
        let c = p(&z(), 0, "42");
        assert_eq!(c.to_string(), "42");
        assert_eq!(c.mul(&c).unwrap(), p(&z(), 0, "1764"));
        let h = Homomorphism::new(&z(), 0, vec![]).unwrap();
        assert_eq!(c.substitute(&h).unwrap(), c);
    }

    #[test]
    fn spec_mismatch_on_mixed_rings() {
        let a = p(&z(), 1, "x1");
        let b = p(&zmod(6), 1, "x1");
        assert!(matches!(a.add(&b), Err(Error::SpecMismatch(_))));
        let c = p(&z(), 2, "x1");
        assert!(matches!(a.add(&c), Err(Error::SpecMismatch(_))));
    }
}
