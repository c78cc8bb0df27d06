//! Membership of `c` in the images of the three rational functions
//!
//! ```text
//! λ(z) = (z² + 2z − 4) / (8z)
//! η(z) = (4 − 3z − z³) / (4z)
//! ρ(z) = (1 + 4z³ − z⁶) / (4z²(z² − 1))
//! ```
//!
//! over `z ∈ ℚ` away from the poles. Each test clears denominators in
//! `f(z) = c` and looks for a rational root.

use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::factorizer::rational_roots;
use crate::polyring::{height, rat_int, Rat, UPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ImageFn {
    Lambda,
    Eta,
    Rho,
}

impl ImageFn {
    pub fn eval(self, z: &Rat) -> Result<Rat, PoleError> {
        match self {
            ImageFn::Lambda => eval_lambda(z),
            ImageFn::Eta => eval_eta(z),
            ImageFn::Rho => eval_rho(z),
        }
    }

    /// Polynomial in `z` whose rational roots are exactly the preimages of
    /// `c`.
    pub fn preimage_polynomial(self, c: &Rat) -> UPoly {
        let four_c = rat_int(4) * c;
        let coeffs = match self {
            // z² + (2 − 8c)z − 4
            ImageFn::Lambda => vec![rat_int(-4), rat_int(2) - rat_int(8) * c, rat_int(1)],
            // z³ + (4c + 3)z − 4
            ImageFn::Eta => vec![rat_int(-4), &four_c + rat_int(3), Rat::zero(), rat_int(1)],
            // z⁶ + 4cz⁴ − 4z³ − 4cz² − 1
            ImageFn::Rho => vec![
                rat_int(-1),
                Rat::zero(),
                -four_c.clone(),
                rat_int(-4),
                four_c,
                Rat::zero(),
                rat_int(1),
            ],
        };
        UPoly::new(coeffs)
    }

    pub fn symbol(self) -> &'static str {
        match self {
            ImageFn::Lambda => "lambda",
            ImageFn::Eta => "eta",
            ImageFn::Rho => "rho",
        }
    }
}

impl fmt::Display for ImageFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{function} has a pole at {at}")]
pub struct PoleError {
    pub function: ImageFn,
    pub at: Rat,
}

/// A preimage `z` with `function(z) = c`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MembershipWitness {
    pub function: ImageFn,
    #[serde(with = "crate::serde_rat")]
    pub preimage: Rat,
}

impl fmt::Display for MembershipWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.function, self.preimage)
    }
}

pub fn eval_lambda(z: &Rat) -> Result<Rat, PoleError> {
    if z.is_zero() {
        return Err(PoleError { function: ImageFn::Lambda, at: z.clone() });
    }
    Ok((z * z + rat_int(2) * z - rat_int(4)) / (rat_int(8) * z))
}

pub fn eval_eta(z: &Rat) -> Result<Rat, PoleError> {
    if z.is_zero() {
        return Err(PoleError { function: ImageFn::Eta, at: z.clone() });
    }
    Ok((rat_int(4) - rat_int(3) * z - z * z * z) / (rat_int(4) * z))
}

pub fn eval_rho(z: &Rat) -> Result<Rat, PoleError> {
    let z2 = z * z;
    if z.is_zero() || z2.is_one() {
        return Err(PoleError { function: ImageFn::Rho, at: z.clone() });
    }
    let z3 = &z2 * z;
    Ok((Rat::one() + rat_int(4) * &z3 - &z3 * &z3) / (rat_int(4) * &z2 * (&z2 - Rat::one())))
}

/// Smallest height first; among equal heights the positive value.
fn canonical_order(a: &Rat, b: &Rat) -> std::cmp::Ordering {
    height(a)
        .cmp(&height(b))
        .then_with(|| b.is_positive().cmp(&a.is_positive()))
        .then_with(|| a.cmp(b))
}

fn witness(function: ImageFn, c: &Rat) -> Option<MembershipWitness> {
    let mut roots = rational_roots(&function.preimage_polynomial(c));
    roots.dedup();
    // the constant terms −4, −4, −1 rule out z = 0, and ρ's relation is
    // nonzero at z = ±1, but poles are filtered regardless
    roots.retain(|z| function.eval(z).is_ok());
    roots.sort_by(canonical_order);
    let preimage = roots.into_iter().next()?;
    let value = function.eval(&preimage).expect("poles were filtered");
    assert_eq!(&value, c, "{function}({preimage}) does not reproduce {c}");
    Some(MembershipWitness { function, preimage })
}

pub fn in_image_lambda(c: &Rat) -> Option<MembershipWitness> {
    witness(ImageFn::Lambda, c)
}

pub fn in_image_eta(c: &Rat) -> Option<MembershipWitness> {
    witness(ImageFn::Eta, c)
}

pub fn in_image_rho(c: &Rat) -> Option<MembershipWitness> {
    witness(ImageFn::Rho, c)
}
