//! Factorization over ℚ and over prime fields, rational roots, and
//! factorization types.

mod fp;
mod multiset;
mod roots;
mod zassenhaus;

pub use fp::FpPoly;
pub use multiset::DegreeMultiset;
pub use roots::{is_rational_square, rational_roots};

use num_traits::{One, Signed};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::polyring::{to_primitive_integer, Rat, UPoly};

/// Seed for the randomized equal-degree splitting when none is given.
pub const DEFAULT_SEED: u64 = 0x0d1a_70f1_c5ee_d004;

/// `f = unit · ∏ factor^multiplicity` over 𝔽_p, factors monic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FpFactorization {
    pub unit: u64,
    pub factors: Vec<(FpPoly, usize)>,
}

impl FpFactorization {
    pub fn degrees(&self) -> DegreeMultiset {
        self.factors
            .iter()
            .flat_map(|(g, m)| std::iter::repeat(g.degree().unwrap_or(0)).take(*m))
            .collect()
    }
}

/// `f = unit · ∏ factor^multiplicity` over ℚ. Factors are primitive integer
/// polynomials with positive leading coefficient, ordered by descending
/// degree and then by coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub unit: Rat,
    pub factors: Vec<(UPoly, usize)>,
}

impl Factorization {
    pub fn degrees(&self) -> DegreeMultiset {
        self.factors
            .iter()
            .flat_map(|(g, m)| std::iter::repeat(g.degree().unwrap_or(0)).take(*m))
            .collect()
    }

    pub fn expand(&self) -> UPoly {
        self.factors
            .iter()
            .fold(UPoly::constant(self.unit.clone()), |acc, (g, m)| {
                &acc * &g.pow(*m as u32)
            })
    }
}

/// Complete factorization over 𝔽_p with the default seed. Panics on the zero
/// polynomial.
pub fn factor_mod_p(f: &FpPoly) -> FpFactorization {
    factor_mod_p_seeded(f, DEFAULT_SEED)
}

pub fn factor_mod_p_seeded(f: &FpPoly, seed: u64) -> FpFactorization {
    assert!(!f.is_zero(), "cannot factor the zero polynomial");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut factors = Vec::new();
    for (part, m) in f.squarefree_decomposition() {
        for g in part.factor_squarefree(&mut rng) {
            factors.push((g, m));
        }
    }
    factors.sort_by(|(a, ma), (b, mb)| {
        b.degree().cmp(&a.degree()).then_with(|| a.cmp(b)).then(ma.cmp(mb))
    });
    let out = FpFactorization {
        unit: f.leading(),
        factors,
    };
    let back = out
        .factors
        .iter()
        .fold(FpPoly::new(f.modulus(), vec![out.unit]), |acc, (g, m)| {
            (0..*m).fold(acc, |acc, _| acc.mul(g))
        });
    assert_eq!(&back, f, "modular factorization does not multiply back");
    out
}

/// Complete factorization over ℚ with the default seed. Panics on the zero
/// polynomial.
pub fn factor_q(f: &UPoly) -> Factorization {
    factor_q_seeded(f, DEFAULT_SEED)
}

pub fn factor_q_seeded(f: &UPoly, seed: u64) -> Factorization {
    assert!(!f.is_zero(), "cannot factor the zero polynomial");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (_, primitive) = to_primitive_integer(f);
    let mut factors: Vec<(UPoly, usize)> = Vec::new();
    for (part, m) in primitive.to_rat().squarefree_decomposition() {
        let (_, part) = to_primitive_integer(&part);
        for g in zassenhaus::factor_squarefree_integer(&part, &mut rng) {
            factors.push((g.to_rat(), m));
        }
    }
    factors.sort_by(|(a, ma), (b, mb)| {
        b.degree()
            .cmp(&a.degree())
            .then_with(|| a.coeffs().cmp(b.coeffs()))
            .then(ma.cmp(mb))
    });
    let lc_product = factors.iter().fold(Rat::one(), |acc, (g, m)| {
        let lc = g.leading().expect("nonzero");
        (0..*m).fold(acc, |acc, _| acc * lc)
    });
    let out = Factorization {
        unit: f.leading().expect("nonzero") / lc_product,
        factors,
    };
    assert_eq!(&out.expand(), f, "factorization does not multiply back");
    debug_assert!(out
        .factors
        .iter()
        .all(|(g, _)| g.leading().is_some_and(|c| c.is_positive())));
    out
}

/// Degrees of the irreducible factors over ℚ, with multiplicity.
pub fn factorization_type(f: &UPoly) -> DegreeMultiset {
    factor_q(f).degrees()
}

/// `true` when `f` is irreducible over ℚ (constants and zero are not).
pub fn is_irreducible(f: &UPoly) -> bool {
    if f.degree().unwrap_or(0) == 0 || f.is_zero() {
        return false;
    }
    let fac = factor_q(f);
    fac.factors.len() == 1 && fac.factors[0].1 == 1
}
