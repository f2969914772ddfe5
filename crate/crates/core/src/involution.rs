//! The substitution endomorphism `phi: x_k -> m_k` and its verification.
//!
//! Substituting the principal Toeplitz minors for the generators defines a
//! ring endomorphism of `R[x1..xn]` over any commutative ring `R`, and that
//! endomorphism is an involution: applying it twice is the identity.
//! [`verify_involution`] checks this on every generator and reports the
//! outcome as data rather than asserting, so inconsistent minor tables can
//! be fed in as negative controls.

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::poly::{Homomorphism, Polynomial};
use crate::ring::RingSpec;
use crate::toeplitz::{minor_table, MinorTable};

/// Outcome of checking one generator: its image under phi, the image of the
/// image, and whether the double image equals the generator again.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorCheck {
    pub k: usize,
    pub pass: bool,
    pub image: Polynomial,
    pub double_image: Polynomial,
}

/// Result of verifying `phi(phi(x_k)) = x_k` for every generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvolutionReport {
    pub ring: RingSpec,
    pub n: usize,
    pub per_generator: Vec<GeneratorCheck>,
    pub overall: bool,
}

impl InvolutionReport {
    pub fn to_json(&self) -> Value {
        let generators: Vec<Value> = self
            .per_generator
            .iter()
            .map(|g| {
                json!({
                    "k": g.k,
                    "pass": g.pass,
                    "image": g.image.to_json(),
                    "double_image": g.double_image.to_json(),
                })
            })
            .collect();
        json!({
            "ring": self.ring.to_string(),
            "n": self.n,
            "overall": self.overall,
            "generators": generators,
        })
    }
}

/// The substitution homomorphism sending each `x_k` to the minor `m_k`,
/// built from the minor recurrence (never from a determinant routine, which
/// stay free to act as independent oracles).
pub fn phi_homomorphism(ring: &RingSpec, n: usize) -> Homomorphism {
    phi_from_table(&minor_table(ring, n))
}

/// The substitution homomorphism induced by an explicit minor table.
pub fn phi_from_table(table: &MinorTable) -> Homomorphism {
    let images = table.minors()[1..].to_vec();
    Homomorphism::new(table.ring(), table.nvars(), images)
        .expect("table invariants guarantee a valid homomorphism")
}

/// Applies phi to a polynomial over the given ring and variable count.
pub fn apply_phi(p: &Polynomial, ring: &RingSpec, n: usize) -> Result<Polynomial> {
    check_compat(p, ring, n)?;
    p.substitute(&phi_homomorphism(ring, n))
}

/// Applies phi twice; by the involution identity the result equals `p`.
pub fn apply_phi_twice(p: &Polynomial, ring: &RingSpec, n: usize) -> Result<Polynomial> {
    check_compat(p, ring, n)?;
    let phi = phi_homomorphism(ring, n);
    p.substitute(&phi)?.substitute(&phi)
}

fn check_compat(p: &Polynomial, ring: &RingSpec, n: usize) -> Result<()> {
    if p.ring() != ring || p.nvars() != n {
        return Err(Error::SpecMismatch(format!(
            "polynomial over {} in {} variable(s) does not match {} in {} variable(s)",
            p.ring(),
            p.nvars(),
            ring,
            n
        )));
    }
    Ok(())
}

/// Checks `phi(phi(x_k)) = x_k` for every generator of `R[x1..xn]`.
pub fn verify_involution(ring: &RingSpec, n: usize) -> InvolutionReport {
    verify_involution_with_table(&minor_table(ring, n))
}

/// Same check, but against an explicit (possibly corrupted) minor table.
/// A mathematical failure is recorded in the report, never raised.
pub fn verify_involution_with_table(table: &MinorTable) -> InvolutionReport {
    let ring = table.ring().clone();
    let n = table.nvars();
    let phi = phi_from_table(table);
    let mut per_generator = Vec::with_capacity(n);
    for k in 1..=n {
        let generator = Polynomial::variable(&ring, n, k).expect("k <= n");
        let image = phi.image_of(k).expect("table covers x1..xn").clone();
        let double_image = image
            .substitute(&phi)
            .expect("image shares the table's ring and variable count");
        per_generator.push(GeneratorCheck {
            k,
            pass: double_image == generator,
            image,
            double_image,
        });
    }
    let overall = per_generator.iter().all(|g| g.pass);
    InvolutionReport {
        ring,
        n,
        per_generator,
        overall,
    }
}
