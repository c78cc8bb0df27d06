use super::poly::Poly;
use super::ring::Ring;
use super::PolyError;

/// Sylvester matrix of `f` (degree m) and `g` (degree n): `n` shifted rows of
/// `f` followed by `m` shifted rows of `g`, coefficients in descending powers.
pub fn sylvester_matrix<R: Ring>(f: &Poly<R>, g: &Poly<R>) -> Vec<Vec<R>> {
    let m = f.degree().unwrap_or(0);
    let n = g.degree().unwrap_or(0);
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for (p, shifts) in [(f, n), (g, m)] {
        let desc: Vec<R> = p.coeffs().iter().rev().cloned().collect();
        for s in 0..shifts {
            let mut row = vec![R::zero(); size];
            for (j, c) in desc.iter().enumerate() {
                row[s + j] = c.clone();
            }
            rows.push(row);
        }
    }
    rows
}

/// Fraction-free (Bareiss) determinant. Every division is exact in an
/// integral domain, so this works over ℤ, ℚ and ℚ[t] alike.
pub fn determinant<R: Ring>(mut m: Vec<Vec<R>>) -> R {
    let n = m.len();
    if n == 0 {
        return R::one();
    }
    let mut negate = false;
    let mut prev = R::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(i, k);
                    negate = !negate;
                }
                None => return R::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[i][j].times(&m[k][k]).minus(&m[i][k].times(&m[k][j]));
                m[i][j] = num
                    .div_exact(&prev)
                    .expect("Bareiss step divides exactly in an integral domain");
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        det.negated()
    } else {
        det
    }
}

/// Resultant as the Sylvester determinant with `f`'s rows first, so
/// `Res(x − a, x − b) = a − b` and `Res(f, g) = lc(f)^n ∏ g(α)` over the roots
/// α of `f`.
pub fn resultant<R: Ring>(f: &Poly<R>, g: &Poly<R>) -> R {
    if f.is_zero() || g.is_zero() {
        return R::zero();
    }
    determinant(sylvester_matrix(f, g))
}

/// `disc(f) = (−1)^{d(d−1)/2} Res(f, f′) / lc(f)` for `deg f = d ≥ 1`.
pub fn discriminant<R: Ring>(f: &Poly<R>) -> Result<R, PolyError> {
    let d = match f.degree() {
        Some(d) if d >= 1 => d,
        got => return Err(PolyError::DegreeTooSmall { needed: 1, got }),
    };
    let res = resultant(f, &f.derivative());
    let q = res
        .div_exact(f.leading().expect("nonzero"))
        .ok_or(PolyError::NotExact)?;
    Ok(if (d * (d - 1) / 2) % 2 == 1 {
        q.negated()
    } else {
        q
    })
}
