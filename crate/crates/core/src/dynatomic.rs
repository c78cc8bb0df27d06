//! Dynatomic polynomials, the fixed table for `Φ₄(t, x)`, and conjugation of
//! quadratics to the `x² + c` normal form.

use num_traits::{One, Zero};
use thiserror::Error;

use crate::polyring::{
    parse_bpoly, BPoly, Poly, PolyError, Rat, Ring, UPoly, DEFAULT_DEGREE_BOUND,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DynatomicError {
    /// A Möbius division left a remainder. Never caused by valid input.
    #[error("dynatomic division left a remainder")]
    NonExactDivision,
    #[error("input polynomial is degenerate: {0}")]
    DegenerateInput(&'static str),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Möbius function by trial division.
pub fn mobius(n: u32) -> i8 {
    assert!(n >= 1, "mobius is defined on positive integers");
    let mut n = n;
    let mut sign = 1i8;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

/// `∏_{d | n} (f^d(x) − x)^{μ(n/d)}`, as the product over `μ = +1` divided
/// exactly by the product over `μ = −1`.
///
/// Works over any coefficient ring, so the same code handles `x² + c` over ℚ
/// and the generic `x² + t` over ℚ[t]. `f` must be monic of degree at least 2.
pub fn dynatomic<R: Ring>(f: &Poly<R>, n: u32) -> Result<Poly<R>, DynatomicError> {
    match f.degree() {
        Some(d) if d >= 2 => {}
        _ => return Err(DynatomicError::DegenerateInput("degree below 2")),
    }
    // validates n ≥ 1 and the degree bound before any work is done
    f.iterate(n, DEFAULT_DEGREE_BOUND)?;
    let x = Poly::<R>::x();
    let mut num = Poly::<R>::one();
    let mut den = Poly::<R>::one();
    let mut iterate = f.clone();
    for d in 1..=n {
        if d > 1 {
            iterate = f.compose(&iterate);
        }
        if n % d != 0 {
            continue;
        }
        match mobius(n / d) {
            1 => num = &num * &(&iterate - &x),
            -1 => den = &den * &(&iterate - &x),
            _ => {}
        }
    }
    num.div_exact(&den)
        .map_err(|_| DynatomicError::NonExactDivision)
}

/// `Φ_n(t, x)` for the family `x² + t`.
pub fn dynatomic_generic(n: u32) -> Result<BPoly, DynatomicError> {
    let f = &(&BPoly::x() * &BPoly::x()) + &BPoly::t();
    dynatomic(&f, n)
}

/// `Φ_n(c, x)` for `x² + c`.
pub fn dynatomic_at(c: &Rat, n: u32) -> Result<UPoly, DynatomicError> {
    let f = UPoly::new(vec![c.clone(), Rat::zero(), Rat::one()]);
    dynatomic(&f, n)
}

/// Coefficients of `Φ₄(t, x)` by descending power of `x`, as stored literally.
const PHI4_TABLE: [(usize, &str); 12] = [
    (12, "1"),
    (10, "6t"),
    (9, "1"),
    (8, "15t^2 + 3t"),
    (7, "4t"),
    (6, "20t^3 + 12t^2 + 1"),
    (5, "6t^2 + 2t"),
    (4, "15t^4 + 18t^3 + 3t^2 + 4t"),
    (3, "4t^3 + 4t^2 + 1"),
    (2, "6t^5 + 12t^4 + 6t^3 + 5t^2 + t"),
    (1, "t^4 + 2t^3 + t^2 + 2t"),
    (0, "t^6 + 3t^5 + 3t^4 + 3t^3 + 2t^2 + 1"),
];

/// The literal coefficient table of `Φ₄(t, x)`, independent of [`dynatomic`].
pub fn phi4_reference() -> BPoly {
    let mut coeffs = vec![UPoly::zero(); 13];
    for (k, text) in PHI4_TABLE {
        let c = parse_bpoly(text).expect("table entries parse");
        coeffs[k] = c.coeff(0);
    }
    Poly::new(coeffs)
}

/// A quadratic `f` together with `c` and the affine `l(x) = αx + β` such that
/// `l ∘ f ∘ l⁻¹ = x² + c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalizedQuadratic {
    pub c: Rat,
    pub alpha: Rat,
    pub beta: Rat,
}

impl NormalizedQuadratic {
    pub fn conjugator(&self) -> UPoly {
        UPoly::new(vec![self.beta.clone(), self.alpha.clone()])
    }

    pub fn conjugator_inverse(&self) -> UPoly {
        let inv = self.alpha.recip();
        UPoly::new(vec![-&self.beta * &inv, inv])
    }

    /// `x² + c`.
    pub fn normal_form(&self) -> UPoly {
        UPoly::new(vec![self.c.clone(), Rat::zero(), Rat::one()])
    }
}

/// Conjugates `f = ax² + bx + d` to `x² + c` using `l(x) = ax + b/2`, and
/// confirms the identity by composing before returning.
pub fn normalize_quadratic(f: &UPoly) -> Result<NormalizedQuadratic, DynatomicError> {
    if f.degree() != Some(2) {
        return Err(DynatomicError::DegenerateInput("expected a quadratic"));
    }
    let (d, b, a) = (f.coeff(0), f.coeff(1), f.coeff(2));
    let half_b = &b / Rat::from_i64(2);
    let c = &a * &d + &half_b - &half_b * &half_b;
    let out = NormalizedQuadratic {
        c,
        alpha: a,
        beta: half_b,
    };
    let conjugated = out
        .conjugator()
        .compose(&f.compose(&out.conjugator_inverse()));
    assert_eq!(conjugated, out.normal_form(), "conjugation identity failed");
    Ok(out)
}
