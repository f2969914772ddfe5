//! Commutative coefficient rings with exact arithmetic.
//!
//! Two families are available at runtime: the ring of integers `Z` and the
//! residue rings `Z/m` for any modulus `m >= 2`. Composite moduli are
//! deliberately allowed, so the residue rings may contain zero divisors.
//! Values are arbitrary-precision integers kept in canonical form (the least
//! nonnegative residue for `Z/m`), and the interface has no division.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A runtime-selected commutative ring with 1.
///
/// Equality is structural: two specs denote the same ring exactly when they
/// are the same family with the same modulus.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RingSpec(Kind);

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum Kind {
    Integers,
    IntegersMod(BigUint),
}

impl RingSpec {
    /// The ring of integers.
    pub fn integers() -> Self {
        RingSpec(Kind::Integers)
    }

    /// The residue ring `Z/modulus`. The modulus must be at least 2.
    pub fn integers_mod(modulus: BigUint) -> Result<Self> {
        if modulus < BigUint::from(2u32) {
            return Err(Error::Range(format!("modulus must be >= 2, got {modulus}")));
        }
        Ok(RingSpec(Kind::IntegersMod(modulus)))
    }

    pub fn is_integers(&self) -> bool {
        matches!(self.0, Kind::Integers)
    }

    /// The modulus for `Z/m`; `None` for the integers.
    pub fn modulus(&self) -> Option<&BigUint> {
        match &self.0 {
            Kind::Integers => None,
            Kind::IntegersMod(m) => Some(m),
        }
    }

    /// Parses the spec grammar `z | zmod:M` with decimal `M >= 2`.
    pub fn parse(text: &str) -> Result<Self> {
        let t = text.trim();
        if t == "z" {
            return Ok(Self::integers());
        }
        if let Some(rest) = t.strip_prefix("zmod:") {
            let modulus = BigUint::from_str(rest).map_err(|_| Error::Parse {
                pos: 5,
                msg: format!("invalid modulus '{rest}'"),
            })?;
            return Self::integers_mod(modulus);
        }
        Err(Error::Parse {
            pos: 0,
            msg: format!("unknown ring spec '{t}' (expected 'z' or 'zmod:M')"),
        })
    }

    /// Canonical representative of `v`: the least nonnegative residue for
    /// `Z/m`, the value itself for `Z`.
    pub(crate) fn canonical(&self, v: BigInt) -> BigInt {
        match &self.0 {
            Kind::Integers => v,
            Kind::IntegersMod(m) => {
                let m = BigInt::from(m.clone());
                let r = v % &m;
                if r.is_negative() {
                    r + m
                } else {
                    r
                }
            }
        }
    }

    pub(crate) fn add_raw(&self, a: &BigInt, b: &BigInt) -> BigInt {
        self.canonical(a + b)
    }

    pub(crate) fn sub_raw(&self, a: &BigInt, b: &BigInt) -> BigInt {
        self.canonical(a - b)
    }

    pub(crate) fn mul_raw(&self, a: &BigInt, b: &BigInt) -> BigInt {
        self.canonical(a * b)
    }

    pub(crate) fn neg_raw(&self, a: &BigInt) -> BigInt {
        self.canonical(-a)
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Kind::Integers => write!(f, "z"),
            Kind::IntegersMod(m) => write!(f, "zmod:{m}"),
        }
    }
}

impl FromStr for RingSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

/// An exact element of a [`RingSpec`], always stored in canonical form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingElement {
    spec: RingSpec,
    value: BigInt,
}

impl RingElement {
    /// Wraps `value`, reducing it to canonical form for the target ring.
    pub fn new(spec: RingSpec, value: BigInt) -> Self {
        let value = spec.canonical(value);
        RingElement { spec, value }
    }

    pub fn zero(spec: &RingSpec) -> Self {
        Self::new(spec.clone(), BigInt::zero())
    }

    pub fn one(spec: &RingSpec) -> Self {
        Self::new(spec.clone(), BigInt::one())
    }

    /// Parses an optionally signed decimal integer and canonicalizes it.
    pub fn parse(spec: &RingSpec, text: &str) -> Result<Self> {
        let t = text.trim();
        let value = BigInt::from_str(t).map_err(|_| Error::Parse {
            pos: 0,
            msg: format!("invalid integer '{t}'"),
        })?;
        Ok(Self::new(spec.clone(), value))
    }

    pub fn spec(&self) -> &RingSpec {
        &self.spec
    }

    /// Canonical integer representative.
    pub fn value(&self) -> &BigInt {
        &self.value
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_spec(other)?;
        Ok(RingElement {
            spec: self.spec.clone(),
            value: self.spec.add_raw(&self.value, &other.value),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_spec(other)?;
        Ok(RingElement {
            spec: self.spec.clone(),
            value: self.spec.sub_raw(&self.value, &other.value),
        })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_spec(other)?;
        Ok(RingElement {
            spec: self.spec.clone(),
            value: self.spec.mul_raw(&self.value, &other.value),
        })
    }

    /// Additive inverse; always defined.
    pub fn neg(&self) -> Self {
        RingElement {
            spec: self.spec.clone(),
            value: self.spec.neg_raw(&self.value),
        }
    }

    fn check_spec(&self, other: &Self) -> Result<()> {
        if self.spec == other.spec {
            Ok(())
        } else {
            Err(Error::SpecMismatch(format!(
                "cannot combine elements of {} and {}",
                self.spec, other.spec
            )))
        }
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z() -> RingSpec {
        RingSpec::integers()
    }

    fn zmod(m: u32) -> RingSpec {
        RingSpec::integers_mod(BigUint::from(m)).unwrap()
    }

    fn el(spec: &RingSpec, v: i64) -> RingElement {
        RingElement::new(spec.clone(), BigInt::from(v))
    }

    #[test]
    fn add_integers() {
        assert_eq!(el(&z(), 2).add(&el(&z(), 3)).unwrap(), el(&z(), 5));
    }

    #[test]
    fn add_wraps_mod_6() {
        let r = zmod(6);
        assert_eq!(el(&r, 4).add(&el(&r, 5)).unwrap(), el(&r, 3));
    }

    #[test]
    fn add_zero_is_identity() {
        for v in [-17, 0, 3, 123456] {
            let a = el(&z(), v);
            assert_eq!(a.add(&RingElement::zero(&z())).unwrap(), a);
        }
    }

    #[test]
    fn zero_divisors_mod_6() {
        let r = zmod(6);
        assert!(el(&r, 4).mul(&el(&r, 3)).unwrap().is_zero());
    }

    #[test]
    fn one_is_multiplicative_identity() {
        let a = el(&z(), -42);
        assert_eq!(RingElement::one(&z()).mul(&a).unwrap(), a);
    }

    #[test]
    fn mul_integers() {
        assert_eq!(el(&z(), -2).mul(&el(&z(), 3)).unwrap(), el(&z(), -6));
    }

    #[test]
    fn neg_integers() {
        assert_eq!(el(&z(), 5).neg(), el(&z(), -5));
    }

    #[test]
    fn neg_mod_6() {
        let r = zmod(6);
        assert_eq!(el(&r, 2).neg(), el(&r, 4));
        assert!(el(&r, 2).neg().add(&el(&r, 2)).unwrap().is_zero());
    }

    #[test]
    fn neg_zero_is_zero() {
        for spec in [z(), zmod(2), zmod(6)] {
            assert!(RingElement::zero(&spec).neg().is_zero());
        }
    }

    #[test]
    fn parse_canonicalizes() {
        assert_eq!(RingElement::parse(&zmod(6), "10").unwrap(), el(&zmod(6), 4));
        assert_eq!(RingElement::parse(&z(), "-3").unwrap(), el(&z(), -3));
    }

    #[test]
    fn format_normalizes() {
        assert_eq!(RingElement::parse(&z(), "+0007").unwrap().to_string(), "7");
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(matches!(
            RingElement::parse(&z(), "abc"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            RingElement::parse(&z(), ""),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn spec_mismatch_is_rejected() {
        let err = el(&z(), 1).add(&el(&zmod(6), 1)).unwrap_err();
        assert!(matches!(err, Error::SpecMismatch(_)));
    }

    #[test]
    fn modulus_below_two_is_rejected() {
        assert!(RingSpec::integers_mod(BigUint::from(1u32)).is_err());
        assert!(RingSpec::integers_mod(BigUint::from(0u32)).is_err());
    }

    #[test]
    fn spec_grammar_round_trip() {
        for s in ["z", "zmod:2", "zmod:97"] {
            assert_eq!(RingSpec::parse(s).unwrap().to_string(), s);
        }
        assert!(RingSpec::parse("q").is_err());
        assert!(RingSpec::parse("zmod:1").is_err());
        assert!(RingSpec::parse("zmod:x").is_err());
    }

    #[test]
    fn canonical_form_is_idempotent() {
        let r = zmod(6);
        for v in -20i64..20 {
            let once = r.canonical(BigInt::from(v));
            let twice = r.canonical(once.clone());
            assert_eq!(once, twice);
            assert!(once >= BigInt::zero() && once < BigInt::from(6));
        }
    }
}
