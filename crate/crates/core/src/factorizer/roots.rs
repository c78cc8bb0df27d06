use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::factor_q;
use crate::polyring::{to_primitive_integer, Rat, UPoly, ZPoly};

/// Above this many candidate fractions, divisor enumeration gives way to the
/// linear factors of a full factorization.
const MAX_CANDIDATES: usize = 50_000;
/// Integers above this are not trial-factored.
const MAX_TRIAL: u64 = 1_000_000_000_000;

fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.abs().to_u64().filter(|&n| n <= MAX_TRIAL)?;
    let mut primes: Vec<(u64, u32)> = Vec::new();
    let mut rest = n;
    let mut d = 2u64;
    while d * d <= rest {
        let mut e = 0;
        while rest % d == 0 {
            rest /= d;
            e += 1;
        }
        if e > 0 {
            primes.push((d, e));
        }
        d += 1;
    }
    if rest > 1 {
        primes.push((rest, 1));
    }
    let mut out = vec![1u64];
    for (p, e) in primes {
        let mut next = Vec::with_capacity(out.len() * (e as usize + 1));
        for &base in &out {
            let mut q = base;
            for _ in 0..=e {
                next.push(q);
                q *= p;
            }
        }
        out = next;
    }
    Some(out.into_iter().map(BigInt::from).collect())
}

/// `F(u/v)·v^n` for integer `F`; zero exactly when `u/v` is a root.
fn homogeneous_eval(f: &ZPoly, u: &BigInt, v: &BigInt) -> BigInt {
    let n = f.degree().unwrap_or(0);
    let mut acc = BigInt::zero();
    let mut vpow = BigInt::one();
    let mut terms = Vec::with_capacity(n + 1);
    for _ in 0..=n {
        terms.push(vpow.clone());
        vpow *= v;
    }
    for (i, c) in f.coeffs().iter().enumerate().rev() {
        acc = acc * u + c * &terms[n - i];
    }
    acc
}

fn distinct_roots_by_divisors(f: &ZPoly) -> Option<Vec<Rat>> {
    let lead = f.leading().expect("nonzero");
    let constant = f.coeff(0);
    let nums = divisors(&constant)?;
    let dens = divisors(lead)?;
    if nums.len() * dens.len() * 2 > MAX_CANDIDATES {
        return None;
    }
    // Cauchy: every root satisfies |r| ≤ 1 + max |a_i / a_n|
    let cauchy = f
        .coeffs()
        .iter()
        .map(|c| Rat::new(c.abs(), lead.abs()))
        .max()
        .expect("nonzero")
        + Rat::one();
    let mut out = Vec::new();
    for u in &nums {
        for v in &dens {
            if !u.gcd(v).is_one() {
                continue;
            }
            let r = Rat::new(u.clone(), v.clone());
            if r > cauchy {
                continue;
            }
            for u in [u.clone(), -u.clone()] {
                if homogeneous_eval(f, &u, v).is_zero() {
                    out.push(Rat::new(u, v.clone()));
                }
            }
        }
    }
    Some(out)
}

/// All rational roots with multiplicity, ascending.
///
/// Candidates `±u/v` with `u | a₀`, `v | a_n` inside the Cauchy bound are
/// tested exactly; when the coefficients are too large to enumerate divisors
/// the linear factors of the full factorization are used instead.
pub fn rational_roots(f: &UPoly) -> Vec<Rat> {
    assert!(!f.is_zero(), "the zero polynomial has every root");
    let mut out = Vec::new();
    let mut g = f.clone();
    while g.degree().unwrap_or(0) > 0 && Zero::is_zero(&g.coeff(0)) {
        out.push(Rat::zero());
        g = g.div_exact(&UPoly::x()).expect("x divides");
    }
    if g.degree().unwrap_or(0) == 0 {
        out.sort();
        return out;
    }
    let (_, primitive) = to_primitive_integer(&g);
    let distinct = distinct_roots_by_divisors(&primitive).unwrap_or_else(|| {
        factor_q(&g)
            .factors
            .iter()
            .filter(|(h, _)| h.degree() == Some(1))
            .map(|(h, _)| -(h.coeff(0) / h.coeff(1)))
            .collect()
    });
    for r in distinct {
        let linear = UPoly::new(vec![-r.clone(), Rat::one()]);
        while let Ok(q) = g.div_exact(&linear) {
            out.push(r.clone());
            g = q;
        }
    }
    out.sort();
    out
}

/// Nonnegative square root of `q` when `q` is the square of a rational.
pub fn is_rational_square(q: &Rat) -> Option<Rat> {
    if q.is_negative() {
        return None;
    }
    let (n, d) = (q.numer(), q.denom());
    let (rn, rd) = (n.sqrt(), d.sqrt());
    (&rn * &rn == *n && &rd * &rd == *d).then(|| Rat::new(rn, rd))
}
