use super::poly::Poly;
use super::resultant::{determinant, sylvester_matrix};
use super::ring::{Rat, Ring};
use super::{PolyError, UPoly};

/// Element of ℚ[t][x]: a polynomial in `x` whose coefficients are polynomials
/// in `t`.
pub type BPoly = Poly<UPoly>;

impl BPoly {
    /// The parameter `t` as a constant-in-`x` polynomial.
    pub fn t() -> BPoly {
        Poly::constant(UPoly::x())
    }

    /// Lifts a polynomial in `x` with rational coefficients.
    pub fn from_x_poly(f: &UPoly) -> BPoly {
        f.map(|c| UPoly::constant(c.clone()))
    }

    /// Substitutes `t = c`.
    pub fn specialize(&self, c: &Rat) -> UPoly {
        self.map(|coeff| coeff.eval(c))
    }

    pub fn t_degree(&self) -> usize {
        self.coeffs()
            .iter()
            .filter_map(|c| c.degree())
            .max()
            .unwrap_or(0)
    }

    /// `den(t)^k · P(num(t)/den(t), x)`; `k` must be at least the `t`-degree
    /// of every coefficient, otherwise the result would not be polynomial.
    pub fn substitute_t(&self, num: &UPoly, den: &UPoly, k: usize) -> Result<BPoly, PolyError> {
        if self.t_degree() > k {
            return Err(PolyError::NotExact);
        }
        let num_pows: Vec<UPoly> = (0..=k).map(|j| num.pow(j as u32)).collect();
        let den_pows: Vec<UPoly> = (0..=k).map(|j| den.pow(j as u32)).collect();
        Ok(self.map(|coeff| {
            coeff
                .coeffs()
                .iter()
                .enumerate()
                .fold(UPoly::zero(), |acc, (j, a)| {
                    &acc + &(&num_pows[j] * &den_pows[k - j]).scale(a)
                })
        }))
    }

    /// `Res_x(self, other)` as a polynomial in `t`, computed by evaluating the
    /// Sylvester matrix entrywise at `t = 0, 1, …, D` and interpolating, where
    /// `D` is the row-sum bound on the determinant's `t`-degree.
    pub fn resultant_x(&self, other: &BPoly) -> UPoly {
        if self.is_zero() || other.is_zero() {
            return UPoly::zero();
        }
        let matrix = sylvester_matrix(self, other);
        let bound: usize = matrix
            .iter()
            .map(|row| row.iter().filter_map(|e| e.degree()).max().unwrap_or(0))
            .sum();
        let nodes: Vec<Rat> = (0..=bound as i64).map(Rat::from_i64).collect();
        let values: Vec<Rat> = nodes
            .iter()
            .map(|t| {
                let m = matrix
                    .iter()
                    .map(|row| row.iter().map(|e| e.eval(t)).collect())
                    .collect();
                determinant(m)
            })
            .collect();
        interpolate(&nodes, &values)
    }

    /// `disc_x` as a polynomial in `t`.
    pub fn discriminant_x(&self) -> Result<UPoly, PolyError> {
        let d = match self.degree() {
            Some(d) if d >= 1 => d,
            got => return Err(PolyError::DegreeTooSmall { needed: 1, got }),
        };
        let res = self.resultant_x(&self.derivative());
        let q = res.div_exact(self.leading().expect("nonzero"))?;
        Ok(if (d * (d - 1) / 2) % 2 == 1 { -q } else { q })
    }
}

/// Newton interpolation through `(nodes[i], values[i])`, returned in the
/// monomial basis.
fn interpolate(nodes: &[Rat], values: &[Rat]) -> UPoly {
    let n = nodes.len();
    let mut dd = values.to_vec();
    for level in 1..n {
        for i in (level..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&nodes[i] - &nodes[i - level]);
        }
    }
    let mut acc = UPoly::zero();
    for i in (0..n).rev() {
        let shift = Poly::new(vec![-nodes[i].clone(), <Rat as num_traits::One>::one()]);
        acc = &(&acc * &shift) + &UPoly::constant(dd[i].clone());
    }
    acc
}
