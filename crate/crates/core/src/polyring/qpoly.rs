use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::poly::Poly;
use super::ring::Rat;
use super::{UPoly, ZPoly};

/// `ord_p(n)` for nonzero `n`; `None` for zero.
pub fn integer_valuation(n: &BigInt, p: &BigInt) -> Option<u32> {
    if n.is_zero() {
        return None;
    }
    let mut n = n.clone();
    let mut v = 0;
    loop {
        let (q, r) = n.div_rem(p);
        if !r.is_zero() {
            return Some(v);
        }
        n = q;
        v += 1;
    }
}

/// Splits `f = content · g` with `g ∈ ℤ[x]` primitive and `lc(g) > 0`.
/// The zero polynomial maps to `(0, 0)`.
pub fn to_primitive_integer(f: &UPoly) -> (Rat, ZPoly) {
    if f.is_zero() {
        return (Rat::zero(), Poly::zero());
    }
    let den = f
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = f
        .coeffs()
        .iter()
        .map(|c| (c * Rat::from_integer(den.clone())).to_integer())
        .collect();
    let mut g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if ints.last().expect("nonzero").is_negative() {
        g = -g;
    }
    let prim = Poly::new(ints.iter().map(|c| c / &g).collect());
    (Rat::new(g, den), prim)
}

impl ZPoly {
    pub fn to_rat(&self) -> UPoly {
        self.map(|c| Rat::from_integer(c.clone()))
    }

    pub fn content(&self) -> BigInt {
        self.coeffs()
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }
}

impl UPoly {
    /// Divides by the leading coefficient; the zero polynomial is returned as is.
    pub fn monic(&self) -> UPoly {
        match self.leading() {
            Some(lc) => self.scale(&lc.recip()),
            None => self.clone(),
        }
    }

    /// Monic gcd (zero if both inputs are zero).
    pub fn gcd(&self, other: &UPoly) -> UPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.divrem(&b).expect("b is nonzero");
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn is_squarefree(&self) -> bool {
        match self.degree() {
            None => false,
            Some(0) => true,
            Some(_) => self.gcd(&self.derivative()).degree() == Some(0),
        }
    }

    /// Yun's squarefree decomposition over ℚ: monic, pairwise coprime
    /// squarefree `a_i` with `f = lc(f) ∏ a_i^i`. Only nonconstant parts are
    /// returned.
    pub fn squarefree_decomposition(&self) -> Vec<(UPoly, usize)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let f = self.monic();
        let df = f.derivative();
        let a0 = f.gcd(&df);
        let mut b = f.div_exact(&a0).expect("gcd divides");
        let mut c = df.div_exact(&a0).expect("gcd divides");
        let mut d = &c - &b.derivative();
        let mut i = 1;
        loop {
            let a = b.gcd(&d);
            if a.degree().unwrap_or(0) > 0 {
                out.push((a.clone(), i));
            }
            b = b.div_exact(&a).expect("gcd divides");
            if b.degree().unwrap_or(0) == 0 {
                break;
            }
            c = d.div_exact(&a).expect("gcd divides");
            d = &c - &b.derivative();
            i += 1;
        }
        out
    }

    /// Number of distinct real roots, by Sturm's theorem with the sign
    /// variations read off at ±∞.
    pub fn real_root_count(&self) -> usize {
        if self.degree().unwrap_or(0) == 0 {
            return 0;
        }
        let mut seq = vec![self.clone(), self.derivative()];
        loop {
            let n = seq.len();
            let (_, r) = seq[n - 2].divrem(&seq[n - 1]).expect("nonzero");
            if r.is_zero() {
                break;
            }
            seq.push(-&r);
        }
        let sign_at = |p: &UPoly, plus_infinity: bool| -> i32 {
            let lc = p.leading().expect("nonzero");
            let s = if lc.is_positive() { 1 } else { -1 };
            let odd = p.degree().expect("nonzero") % 2 == 1;
            if !plus_infinity && odd {
                -s
            } else {
                s
            }
        };
        let variations = |plus: bool| {
            seq.windows(2)
                .filter(|w| sign_at(&w[0], plus) != sign_at(&w[1], plus))
                .count()
        };
        variations(false) - variations(true)
    }
}
