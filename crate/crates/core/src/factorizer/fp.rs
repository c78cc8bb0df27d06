use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use rand::Rng as _;
use rand_chacha::ChaCha8Rng;

use crate::polyring::{UPoly, ZPoly};

/// Polynomial over the prime field 𝔽_p with `p < 2⁶³`; `coeffs[i]` is the
/// coefficient of `x^i`, every entry reduced to `[0, p)`, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FpPoly {
    p: u64,
    coeffs: Vec<u64>,
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn pow_mod(mut base: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        e >>= 1;
    }
    acc
}

/// Inverse of a nonzero residue; `p` must be prime.
pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(a % p != 0);
    pow_mod(a, p - 2, p)
}

fn reduce_bigint(n: &BigInt, p: u64) -> u64 {
    n.mod_floor(&BigInt::from(p)).to_u64().expect("residue fits")
}

impl FpPoly {
    pub fn new(p: u64, coeffs: Vec<u64>) -> Self {
        let mut coeffs: Vec<u64> = coeffs.into_iter().map(|c| c % p).collect();
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        FpPoly { p, coeffs }
    }

    pub fn zero(p: u64) -> Self {
        FpPoly { p, coeffs: vec![] }
    }

    pub fn one(p: u64) -> Self {
        FpPoly::new(p, vec![1])
    }

    pub fn x(p: u64) -> Self {
        FpPoly::new(p, vec![0, 1])
    }

    pub fn from_zpoly(f: &ZPoly, p: u64) -> Self {
        FpPoly::new(p, f.coeffs().iter().map(|c| reduce_bigint(c, p)).collect())
    }

    /// Reduction of a rational polynomial; `None` if `p` divides a
    /// denominator.
    pub fn from_upoly(f: &UPoly, p: u64) -> Option<Self> {
        let mut out = Vec::with_capacity(f.coeffs().len());
        for c in f.coeffs() {
            let den = reduce_bigint(c.denom(), p);
            if den == 0 {
                return None;
            }
            out.push(mul_mod(reduce_bigint(c.numer(), p), inv_mod(den, p), p));
        }
        Some(FpPoly::new(p, out))
    }

    /// Symmetric lift to ℤ[x], coefficients in `(−p/2, p/2]`.
    pub fn to_zpoly(&self) -> ZPoly {
        ZPoly::new(
            self.coeffs
                .iter()
                .map(|&c| {
                    if c > self.p / 2 {
                        BigInt::from(c) - BigInt::from(self.p)
                    } else {
                        BigInt::from(c)
                    }
                })
                .collect(),
        )
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let p = self.p;
        FpPoly::new(p, (0..n).map(|i| (self.coeff(i) + rhs.coeff(i)) % p).collect())
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let p = self.p;
        FpPoly::new(
            p,
            (0..n).map(|i| (self.coeff(i) + p - rhs.coeff(i)) % p).collect(),
        )
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return FpPoly::zero(self.p);
        }
        let p = self.p;
        let mut out = vec![0u128; self.coeffs.len() + rhs.coeffs.len() - 1];
        let small = p < (1 << 31);
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                if small {
                    out[i + j] += a as u128 * b as u128;
                } else {
                    out[i + j] = (out[i + j] + a as u128 * b as u128) % p as u128;
                }
            }
        }
        FpPoly::new(p, out.into_iter().map(|c| (c % p as u128) as u64).collect())
    }

    pub fn scale(&self, k: u64) -> Self {
        FpPoly::new(self.p, self.coeffs.iter().map(|&c| mul_mod(c, k, self.p)).collect())
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(inv_mod(self.leading(), self.p))
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn divrem(&self, divisor: &Self) -> (Self, Self) {
        let p = self.p;
        let db = divisor.degree().expect("division by zero polynomial");
        if self.coeffs.len() <= db {
            return (FpPoly::zero(p), self.clone());
        }
        let inv = inv_mod(divisor.leading(), p);
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0; rem.len() - db];
        for k in (0..quot.len()).rev() {
            let top = rem[k + db];
            if top == 0 {
                continue;
            }
            let q = mul_mod(top, inv, p);
            for (j, &b) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = (rem[k + j] + p - mul_mod(q, b, p)) % p;
            }
            quot[k] = q;
        }
        rem.truncate(db);
        (FpPoly::new(p, quot), FpPoly::new(p, rem))
    }

    pub fn rem(&self, divisor: &Self) -> Self {
        self.divrem(divisor).1
    }

    /// Quotient, asserting the division is exact.
    pub fn div_exact(&self, divisor: &Self) -> Self {
        let (q, r) = self.divrem(divisor);
        assert!(r.is_zero(), "inexact division over F_p");
        q
    }

    /// Monic gcd; zero only if both inputs are zero.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `(g, s, t)` with `s·self + t·other = g`, `g` the monic gcd.
    pub fn xgcd(&self, other: &Self) -> (Self, Self, Self) {
        let p = self.p;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (FpPoly::one(p), FpPoly::zero(p));
        let (mut t0, mut t1) = (FpPoly::zero(p), FpPoly::one(p));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            let s = s0.sub(&q.mul(&s1));
            let t = t0.sub(&q.mul(&t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let k = inv_mod(r0.leading(), p);
        (r0.scale(k), s0.scale(k), t0.scale(k))
    }

    pub fn derivative(&self) -> Self {
        let p = self.p;
        FpPoly::new(
            p,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| mul_mod(c, i as u64 % p, p))
                .collect(),
        )
    }

    pub fn eval(&self, at: u64) -> u64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| (mul_mod(acc, at, self.p) + c) % self.p)
    }

    /// `self^e mod modulus`.
    pub fn pow_mod(&self, mut e: u64, modulus: &Self) -> Self {
        let mut base = self.rem(modulus);
        let mut acc = FpPoly::one(self.p).rem(modulus);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(modulus);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).rem(modulus);
            }
        }
        acc
    }

    /// For `f = g(x^p)`, returns `g` (the `p`-th root, since Frobenius fixes
    /// 𝔽_p).
    fn pth_root(&self) -> Self {
        let p = self.p as usize;
        FpPoly::new(self.p, self.coeffs.iter().step_by(p).copied().collect())
    }

    /// Squarefree decomposition of a monic polynomial: pairwise coprime
    /// squarefree parts `a_i` with `self = ∏ a_i^{m_i}`.
    pub fn squarefree_decomposition(&self) -> Vec<(FpPoly, usize)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let f = self.monic();
        let df = f.derivative();
        if df.is_zero() {
            for (g, m) in f.pth_root().squarefree_decomposition() {
                out.push((g, m * self.p as usize));
            }
            return out;
        }
        let mut c = f.gcd(&df);
        let mut w = f.div_exact(&c);
        let mut i = 1;
        while !w.is_one() {
            let y = w.gcd(&c);
            let fac = w.div_exact(&y);
            if fac.degree().unwrap_or(0) > 0 {
                out.push((fac, i));
            }
            i += 1;
            c = c.div_exact(&y);
            w = y;
        }
        if !c.is_one() {
            for (g, m) in c.pth_root().squarefree_decomposition() {
                out.push((g, m * self.p as usize));
            }
        }
        out
    }

    /// Distinct-degree factorization of a monic squarefree polynomial:
    /// `(g_d, d)` where `g_d` is the product of all irreducible factors of
    /// degree `d`.
    pub fn distinct_degree(&self) -> Vec<(FpPoly, usize)> {
        let p = self.p;
        let mut out = Vec::new();
        let mut rest = self.monic();
        let x = FpPoly::x(p);
        let mut h = x.clone();
        let mut d = 1;
        while rest.degree().unwrap_or(0) >= 2 * d {
            h = h.pow_mod(p, &rest);
            let g = rest.gcd(&h.sub(&x));
            if !g.is_one() {
                rest = rest.div_exact(&g);
                h = h.rem(&rest);
                out.push((g, d));
            }
            d += 1;
        }
        if let Some(deg) = rest.degree() {
            if deg > 0 {
                out.push((rest, deg));
            }
        }
        out
    }

    /// Degrees of the irreducible factors of a squarefree polynomial, read off
    /// from the distinct-degree split alone.
    pub fn factor_degrees_squarefree(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for (g, d) in self.distinct_degree() {
            let count = g.degree().expect("nonzero") / d;
            out.extend(std::iter::repeat(d).take(count));
        }
        out
    }

    /// Splits a monic squarefree product of irreducibles of degree `d`.
    fn equal_degree(&self, d: usize, rng: &mut ChaCha8Rng, out: &mut Vec<FpPoly>) {
        let n = self.degree().expect("nonzero");
        if n == d {
            out.push(self.clone());
            return;
        }
        let p = self.p;
        let mut candidate = 1u64;
        loop {
            let a = if p == 2 {
                // deterministic sweep over all nonconstant polynomials of
                // degree < n; some trace image must split
                candidate += 1;
                assert!(
                    n >= 64 || candidate < (1u64 << n),
                    "exhausted splitting candidates"
                );
                FpPoly::new(2, (0..n).map(|i| (candidate >> i) & 1).collect())
            } else {
                FpPoly::new(p, (0..n).map(|_| rng.gen_range(0..p)).collect())
            };
            if a.degree().unwrap_or(0) == 0 {
                continue;
            }
            let g = self.gcd(&a);
            if !g.is_one() {
                g.equal_degree(d, rng, out);
                self.div_exact(&g).equal_degree(d, rng, out);
                return;
            }
            let b = if p == 2 {
                // absolute trace a + a² + … + a^{2^{d−1}}
                let mut term = a.rem(self);
                let mut acc = term.clone();
                for _ in 1..d {
                    term = term.mul(&term).rem(self);
                    acc = acc.add(&term);
                }
                acc
            } else {
                // a^{(p^d − 1)/2} = (a^{1 + p + … + p^{d−1}})^{(p−1)/2}
                let mut term = a.rem(self);
                let mut norm = term.clone();
                for _ in 1..d {
                    term = term.pow_mod(p, self);
                    norm = norm.mul(&term).rem(self);
                }
                norm.pow_mod((p - 1) / 2, self).sub(&FpPoly::one(p))
            };
            let g = self.gcd(&b);
            if let Some(deg) = g.degree() {
                if deg > 0 && deg < n {
                    g.equal_degree(d, rng, out);
                    self.div_exact(&g).equal_degree(d, rng, out);
                    return;
                }
            }
        }
    }

    /// Irreducible factors of a monic squarefree polynomial.
    pub(crate) fn factor_squarefree(&self, rng: &mut ChaCha8Rng) -> Vec<FpPoly> {
        let mut out = Vec::new();
        for (g, d) in self.distinct_degree() {
            g.equal_degree(d, rng, &mut out);
        }
        out
    }
}
