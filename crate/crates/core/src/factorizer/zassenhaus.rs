//! Factorization of squarefree primitive integer polynomials: factor modulo a
//! good prime, lift the modular factors p-adically, recombine.

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand_chacha::ChaCha8Rng;

use super::fp::FpPoly;
use crate::polyring::{Poly, ZPoly};

/// Polynomial over ℤ/m, coefficients in `[0, m)`, trimmed.
type ModPoly = Vec<BigInt>;

fn trim(mut v: ModPoly) -> ModPoly {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

fn reduce(v: &[BigInt], m: &BigInt) -> ModPoly {
    trim(v.iter().map(|c| c.mod_floor(m)).collect())
}

fn add(a: &[BigInt], b: &[BigInt], m: &BigInt) -> ModPoly {
    let n = a.len().max(b.len());
    let zero = BigInt::zero();
    trim(
        (0..n)
            .map(|i| (a.get(i).unwrap_or(&zero) + b.get(i).unwrap_or(&zero)).mod_floor(m))
            .collect(),
    )
}

fn sub(a: &[BigInt], b: &[BigInt], m: &BigInt) -> ModPoly {
    let n = a.len().max(b.len());
    let zero = BigInt::zero();
    trim(
        (0..n)
            .map(|i| (a.get(i).unwrap_or(&zero) - b.get(i).unwrap_or(&zero)).mod_floor(m))
            .collect(),
    )
}

fn mul(a: &[BigInt], b: &[BigInt], m: &BigInt) -> ModPoly {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    reduce(&out, m)
}

/// Division by a monic polynomial over ℤ/m.
fn divrem_monic(a: &[BigInt], b: &[BigInt], m: &BigInt) -> (ModPoly, ModPoly) {
    let db = b.len() - 1;
    debug_assert!(b[db].is_one());
    if a.len() <= db {
        return (vec![], a.to_vec());
    }
    let mut rem = a.to_vec();
    let mut quot = vec![BigInt::zero(); a.len() - db];
    for k in (0..quot.len()).rev() {
        let q = rem[k + db].clone();
        if q.is_zero() {
            continue;
        }
        for (j, c) in b.iter().enumerate() {
            rem[k + j] = (&rem[k + j] - &q * c).mod_floor(m);
        }
        quot[k] = q;
    }
    rem.truncate(db);
    (trim(quot), trim(rem))
}

fn from_fp(f: &FpPoly) -> ModPoly {
    f.coeffs().iter().map(|&c| BigInt::from(c)).collect()
}

/// Lifts a factorization `f ≡ g·h (mod p)`, `h` monic and coprime to `g`, to
/// the unique monic `H ≡ h` dividing `f` modulo `target`.
///
/// Quadratic Hensel steps; each step goes from modulus `m` to
/// `min(m², target)`, which stays valid because every correction term is
/// computed modulo a divisor of `m²`.
fn hensel_lift(f: &ZPoly, g0: &FpPoly, h0: &FpPoly, target: &BigInt) -> ModPoly {
    let p = BigInt::from(g0.modulus());
    let (one, s0, t0) = g0.xgcd(h0);
    assert!(one.is_one(), "modular factors must be coprime");
    let (mut g, mut h, mut s, mut t) = (from_fp(g0), from_fp(h0), from_fp(&s0), from_fp(&t0));
    let mut m = p;
    while &m < target {
        let next = (&m * &m).min(target.clone());
        let fm = reduce(f.coeffs(), &next);
        let e = sub(&fm, &mul(&g, &h, &next), &next);
        let (q, r) = divrem_monic(&mul(&s, &e, &next), &h, &next);
        let g_new = add(&add(&g, &mul(&t, &e, &next), &next), &mul(&q, &g, &next), &next);
        let h_new = add(&h, &r, &next);
        let b = sub(
            &add(&mul(&s, &g_new, &next), &mul(&t, &h_new, &next), &next),
            &[BigInt::one()],
            &next,
        );
        let (c, d) = divrem_monic(&mul(&s, &b, &next), &h_new, &next);
        s = sub(&s, &d, &next);
        t = sub(&sub(&t, &mul(&t, &b, &next), &next), &mul(&c, &g_new, &next), &next);
        g = g_new;
        h = h_new;
        m = next;
    }
    h
}

fn symmetric(v: &[BigInt], m: &BigInt) -> ZPoly {
    let half = m >> 1;
    Poly::new(
        v.iter()
            .map(|c| {
                let c = c.mod_floor(m);
                if c > half {
                    c - m
                } else {
                    c
                }
            })
            .collect(),
    )
}

fn primitive_part(f: &ZPoly) -> ZPoly {
    let mut g = f.content();
    if f.leading().is_some_and(Signed::is_negative) {
        g = -g;
    }
    f.map(|c| c / &g)
}

/// Smallest prime `p ≥ 5` not dividing the leading coefficient for which `f`
/// stays squarefree modulo `p`; equivalently `p ∤ lc(f)·disc(f)`.
fn good_prime(f: &ZPoly) -> FpPoly {
    for p in primal::Primes::all().skip_while(|&p| p < 5) {
        let fp = FpPoly::from_zpoly(f, p as u64);
        if fp.degree() != f.degree() {
            continue;
        }
        if fp.gcd(&fp.derivative()).is_one() {
            return fp;
        }
    }
    unreachable!("a squarefree polynomial has finitely many bad primes")
}

/// `2·|lc|·2^n·‖f‖₂`, rounded up: any factor of `f` scaled to leading
/// coefficient `lc(f)` has coefficients strictly inside half of this.
fn coefficient_bound(f: &ZPoly) -> BigInt {
    let norm2: BigInt = f.coeffs().iter().map(|c| c * c).sum();
    let norm = norm2.sqrt() + BigInt::one();
    let lc = f.leading().expect("nonzero").abs();
    BigInt::from(2) * lc * (BigInt::one() << f.degree().unwrap_or(0)) * norm
}

/// Irreducible factors of a squarefree primitive `f ∈ ℤ[x]` with positive
/// leading coefficient. Factors come back primitive with positive leading
/// coefficients; their product is `f`.
pub(crate) fn factor_squarefree_integer(f: &ZPoly, rng: &mut ChaCha8Rng) -> Vec<ZPoly> {
    if f.degree().unwrap_or(0) <= 1 {
        return vec![f.clone()];
    }
    let fp = good_prime(f);
    let p = BigInt::from(fp.modulus());
    let mut modular = fp.monic().factor_squarefree(rng);
    if modular.len() == 1 {
        return vec![f.clone()];
    }
    modular.sort();

    let bound = coefficient_bound(f);
    let mut modulus = p.clone();
    while modulus <= bound {
        modulus *= &p;
    }
    let lc_p = fp.leading();
    let lifted: Vec<ModPoly> = (0..modular.len())
        .map(|i| {
            let cofactor = modular
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .fold(FpPoly::new(fp.modulus(), vec![lc_p]), |acc, (_, u)| acc.mul(u));
            hensel_lift(f, &cofactor, &modular[i], &modulus)
        })
        .collect();

    recombine(f.clone(), lifted, &modulus)
}

fn recombine(mut f: ZPoly, mut lifted: Vec<ModPoly>, modulus: &BigInt) -> Vec<ZPoly> {
    let mut out = Vec::new();
    let mut size = 1;
    'outer: while 2 * size <= lifted.len() {
        for subset in (0..lifted.len()).combinations(size) {
            let lc = f.leading().expect("nonzero").clone();
            let product = subset
                .iter()
                .fold(vec![lc.mod_floor(modulus)], |acc, &i| mul(&acc, &lifted[i], modulus));
            let candidate = primitive_part(&symmetric(&product, modulus));
            let (c0, f0) = (candidate.coeff(0), f.coeff(0));
            if !c0.is_zero() && !(&f0 % &c0).is_zero() {
                continue;
            }
            if let Ok(quotient) = f.div_exact(&candidate) {
                out.push(candidate);
                f = quotient;
                for &i in subset.iter().rev() {
                    lifted.remove(i);
                }
                continue 'outer;
            }
        }
        size += 1;
    }
    out.push(f);
    out
}
