//! Local solvability of `y² = f(x)` over ℚ_p and ℝ, and the Straßmann bound.
//!
//! ℚ_p-points are found by refining residue classes. A class `x = a + p^k·s`
//! (`s ∈ ℤ_p`) is settled as soon as one of three local tests applies to
//! `h(s) = f(a + p^k·s)`:
//!
//! * `h(0) = 0`, or Hensel's lemma gives a root of `h` (a point with `y = 0`);
//! * every non-constant coefficient is divisible by `p^e·h(0)` (`e = 1` for
//!   odd `p`, `3` for `p = 2`), so all values share the square class of `h(0)`.
//!
//! Points with `|x|_p > 1` are covered by the reversed model
//! `v² = u^{2⌈deg f/2⌉}·f(1/u)` on `u ∈ pℤ_p`, including `u = 0`.

use std::fmt::{self, Write as _};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::polyring::{discriminant, integer_valuation, Poly, Rat, UPoly, ZPoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LocalError {
    #[error("curve polynomial must be nonzero")]
    ZeroPolynomial,
    #[error("curve polynomial must be squarefree")]
    NotSquarefree,
    #[error("curve polynomial must have integer coefficients")]
    NonIntegral,
    #[error("twist parameter {0} must be a nonzero squarefree integer")]
    BadTwist(BigInt),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("residue refinement at p = {p} passed the depth cap {cap}")]
    DepthExceeded { p: u64, cap: u32 },
}

/// `true` iff `q` is a square in ℚ_p. Zero counts as a square.
pub fn is_square_qp(q: &Rat, p: u64) -> bool {
    if q.is_zero() {
        return true;
    }
    let pb = BigInt::from(p);
    let vn = integer_valuation(q.numer(), &pb).expect("nonzero");
    let vd = integer_valuation(q.denom(), &pb).expect("nonzero");
    if (vn + vd) % 2 == 1 {
        return false;
    }
    let unit = q.numer() / pb.pow(vn) * (q.denom() / pb.pow(vd));
    if p == 2 {
        unit.mod_floor(&BigInt::from(8)) == BigInt::one()
    } else {
        let r = unit.mod_floor(&pb);
        // Euler's criterion
        r.modpow(&BigInt::from((p - 1) / 2), &pb).is_one()
    }
}

/// Hyperelliptic model `y² = f(x)` with integer, squarefree `f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveModel {
    f: ZPoly,
}

impl CurveModel {
    pub fn new(f: ZPoly) -> Result<CurveModel, LocalError> {
        if f.is_zero() {
            return Err(LocalError::ZeroPolynomial);
        }
        if !f.to_rat().is_squarefree() {
            return Err(LocalError::NotSquarefree);
        }
        Ok(CurveModel { f })
    }

    /// From a rational polynomial whose coefficients are all integers.
    pub fn from_upoly(f: &UPoly) -> Result<CurveModel, LocalError> {
        if !f.coeffs().iter().all(|c| c.is_integer()) {
            return Err(LocalError::NonIntegral);
        }
        CurveModel::new(f.map(|c| c.to_integer()))
    }

    /// Integer coefficients, constant term first.
    pub fn from_coefficients(coeffs: &[i64]) -> Result<CurveModel, LocalError> {
        CurveModel::new(Poly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect()))
    }

    pub fn polynomial(&self) -> &ZPoly {
        &self.f
    }

    /// `⌈deg f / 2⌉ − 1`; zero for degree at most 2.
    pub fn genus(&self) -> usize {
        let d = self.f.degree().unwrap_or(0);
        d.div_ceil(2).saturating_sub(1)
    }

    /// `y² = d·f(x)`, equivalent to `d·y² = f(x)` via `y ↦ d·y`.
    pub fn quadratic_twist(&self, d: &BigInt) -> Result<CurveModel, LocalError> {
        if !is_squarefree_integer(d) {
            return Err(LocalError::BadTwist(d.clone()));
        }
        Ok(CurveModel {
            f: self.f.map(|c| c * d),
        })
    }

    /// `true` iff `f` takes a nonnegative value somewhere on ℝ (points at
    /// infinity of even-degree models need `lc > 0`, which is implied).
    pub fn has_real_points(&self) -> bool {
        let f = self.f.to_rat();
        f.real_root_count() > 0 || f.leading().is_some_and(Signed::is_positive)
    }

    /// Default cap: `ord_p(disc f) + 2·ord_p(content f) + 4`, plus 3 at `p = 2`.
    pub fn default_depth_cap(&self, p: u64) -> u32 {
        depth_cap_for(&self.f, p)
    }

    pub fn has_qp_points(&self, p: u64) -> Result<bool, LocalError> {
        Ok(self.local_report(p, None)?.solvable)
    }

    /// Decision with the residue trees as a certificate. An empty verdict
    /// carries complete trees for both patches.
    pub fn local_report(&self, p: u64, depth_cap: Option<u32>) -> Result<LocalReport, LocalError> {
        if !primal::is_prime(p) {
            return Err(LocalError::NotPrime(p));
        }
        let cap = depth_cap.unwrap_or_else(|| self.default_depth_cap(p));
        let pb = BigInt::from(p);
        let affine = explore(&Patch::new(self.f.clone()), &self.f, &pb, BigInt::zero(), 0, cap)?;
        if affine.found {
            return Ok(LocalReport {
                p,
                solvable: true,
                depth_cap: cap,
                affine: affine.trace,
                infinity: None,
            });
        }
        let reversed = self.reversed_model();
        let cap_inf = depth_cap.unwrap_or_else(|| depth_cap_for(&reversed, p));
        let at_infinity = reversed.compose(&Poly::new(vec![BigInt::zero(), pb.clone()]));
        let inf = explore(&Patch::new(reversed), &at_infinity, &pb, BigInt::zero(), 1, cap_inf + 1)?;
        Ok(LocalReport {
            p,
            solvable: inf.found,
            depth_cap: cap,
            affine: affine.trace,
            infinity: Some(inf.trace),
        })
    }

    /// `u^{2⌈d/2⌉}·f(1/u)`.
    fn reversed_model(&self) -> ZPoly {
        let d = self.f.degree().expect("nonzero");
        let e = 2 * d.div_ceil(2);
        let mut coeffs = vec![BigInt::zero(); e + 1];
        for (i, c) in self.f.coeffs().iter().enumerate() {
            coeffs[e - i] = c.clone();
        }
        Poly::new(coeffs)
    }
}

fn is_squarefree_integer(d: &BigInt) -> bool {
    if d.is_zero() {
        return false;
    }
    let n = d.abs();
    let mut k = BigInt::from(2);
    while &k * &k <= n {
        if (&n % (&k * &k)).is_zero() {
            return false;
        }
        k += 1;
    }
    true
}

fn depth_cap_for(f: &ZPoly, p: u64) -> u32 {
    let pb = BigInt::from(p);
    let content_val = integer_valuation(&f.content(), &pb).unwrap_or(0);
    let disc_val = if f.degree().unwrap_or(0) >= 1 {
        let disc = discriminant(&f.to_rat()).expect("positive degree");
        integer_valuation(disc.numer(), &pb).unwrap_or(0)
    } else {
        0
    };
    disc_val + 2 * content_val + 4 + if p == 2 { 3 } else { 0 }
}

/// How a residue class was settled.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BranchVerdict {
    /// The polynomial vanishes at the class center.
    ZeroValue,
    /// Hensel's lemma lifts a root from the class center.
    HenselRoot,
    /// All values lie in the square class of a square.
    SquareClass,
    /// All values lie in the square class of a non-square.
    NonSquareClass,
    /// Undecided at this level; the children decide.
    Split,
}

/// One residue class `x ≡ center (mod p^level)` of a patch coordinate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BranchTrace {
    pub center: String,
    pub level: u32,
    pub verdict: BranchVerdict,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub children: Vec<BranchTrace>,
}

impl BranchTrace {
    pub fn node_count(&self) -> usize {
        1 + self.children.iter().map(BranchTrace::node_count).sum::<usize>()
    }

    fn render(&self, out: &mut String, indent: usize) {
        let _ = writeln!(
            out,
            "{:indent$}x = {} mod p^{}: {:?}",
            "",
            self.center,
            self.level,
            self.verdict,
            indent = indent
        );
        for c in &self.children {
            c.render(out, indent + 2);
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalReport {
    pub p: u64,
    pub solvable: bool,
    pub depth_cap: u32,
    /// Residue tree over `x ∈ ℤ_p`.
    pub affine: BranchTrace,
    /// Residue tree over `u = 1/x ∈ pℤ_p`; absent when the affine patch
    /// already has a point.
    pub infinity: Option<BranchTrace>,
}

impl fmt::Display for LocalReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        let verdict = if self.solvable { "points" } else { "empty" };
        let _ = writeln!(out, "p = {}: {verdict} (depth cap {})", self.p, self.depth_cap);
        out.push_str("affine patch\n");
        self.affine.render(&mut out, 2);
        if let Some(inf) = &self.infinity {
            out.push_str("patch at infinity (u = 1/x)\n");
            inf.render(&mut out, 2);
        }
        f.write_str(out.trim_end())
    }
}

struct Explored {
    found: bool,
    trace: BranchTrace,
}

fn valuation_or_max(n: &BigInt, p: &BigInt) -> u32 {
    integer_valuation(n, p).unwrap_or(u32::MAX)
}

/// The polynomial of a patch and its derivative, in the patch coordinate.
struct Patch {
    poly: ZPoly,
    derivative: ZPoly,
}

impl Patch {
    fn new(poly: ZPoly) -> Patch {
        let derivative = poly.derivative();
        Patch { poly, derivative }
    }

    /// Hensel: `ord F(a) > 2·ord F'(a)` yields a root of `F` in ℤ_p.
    fn hensel_root_near(&self, a: &BigInt, p: &BigInt) -> bool {
        let v = valuation_or_max(&self.poly.eval(a), p);
        let w = valuation_or_max(&self.derivative.eval(a), p);
        w != u32::MAX && v != u32::MAX && v > 2 * w
    }
}

/// Decides whether `h(s) = F(center + p^level·s)` is a square in ℚ_p for some
/// `s ∈ ℤ_p`.
fn explore(
    patch: &Patch,
    h: &ZPoly,
    p: &BigInt,
    center: BigInt,
    level: u32,
    cap: u32,
) -> Result<Explored, LocalError> {
    let leaf = |verdict: BranchVerdict, found: bool| {
        Ok(Explored {
            found,
            trace: BranchTrace {
                center: center.to_string(),
                level,
                verdict,
                children: vec![],
            },
        })
    };
    if h.is_zero() {
        return leaf(BranchVerdict::ZeroValue, true);
    }
    // dividing by p² does not change square classes
    let content_val = valuation_or_max(&h.content(), p);
    let h = if content_val >= 2 {
        let scale = p.pow(content_val - content_val % 2);
        h.map(|c| c / &scale)
    } else {
        h.clone()
    };
    let h0 = h.coeff(0);
    if h0.is_zero() {
        return leaf(BranchVerdict::ZeroValue, true);
    }
    let v0 = valuation_or_max(&h0, p);
    let margin = if *p == BigInt::from(2) { 3 } else { 1 };
    let dominated = h
        .coeffs()
        .iter()
        .skip(1)
        .all(|c| valuation_or_max(c, p) >= v0 + margin);
    if dominated {
        let square = is_square_qp(&Rat::from_integer(h0), p.to_u64().expect("small prime"));
        return if square {
            leaf(BranchVerdict::SquareClass, true)
        } else {
            leaf(BranchVerdict::NonSquareClass, false)
        };
    }
    if patch.hensel_root_near(&center, p) {
        return leaf(BranchVerdict::HenselRoot, true);
    }
    if level >= cap {
        return Err(LocalError::DepthExceeded {
            p: p.to_u64().expect("small prime"),
            cap,
        });
    }
    let p_level = p.pow(level);
    let mut children = Vec::new();
    let mut found = false;
    let pu = p.to_u64().expect("small prime");
    for r in 0..pu {
        let r = BigInt::from(r);
        let shifted = h.compose(&Poly::new(vec![r.clone(), p.clone()]));
        let child = explore(patch, &shifted, p, &center + &r * &p_level, level + 1, cap)?;
        children.push(child.trace);
        if child.found {
            found = true;
            break;
        }
    }
    Ok(Explored {
        found,
        trace: BranchTrace {
            center: center.to_string(),
            level,
            verdict: BranchVerdict::Split,
            children,
        },
    })
}

/// A p-adic number known modulo `p^precision`: `p^valuation · unit`, or
/// indistinguishable from zero when `is_zero_approx` is set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PadicApprox {
    pub p: u64,
    pub valuation: u32,
    pub unit: BigInt,
    pub precision: u32,
    pub is_zero_approx: bool,
}

impl PadicApprox {
    /// From an integer known modulo `p^precision`.
    pub fn from_integer(p: u64, n: &BigInt, precision: u32) -> PadicApprox {
        assert!(precision >= 1, "precision must be positive");
        let pb = BigInt::from(p);
        let modulus = pb.pow(precision);
        let r = n.mod_floor(&modulus);
        match integer_valuation(&r, &pb) {
            None => PadicApprox {
                p,
                valuation: precision,
                unit: BigInt::zero(),
                precision,
                is_zero_approx: true,
            },
            Some(v) => PadicApprox {
                p,
                valuation: v,
                unit: (&r / pb.pow(v)).mod_floor(&pb.pow(precision - v)),
                precision,
                is_zero_approx: false,
            },
        }
    }

    /// From base-`p` digits `d₀ + d₁p + d₂p² + …` with `O(p^precision)`.
    pub fn from_digits(p: u64, digits: &[u64], precision: u32) -> PadicApprox {
        let pb = BigInt::from(p);
        let n = digits
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, &d| acc * &pb + BigInt::from(d));
        PadicApprox::from_integer(p, &n, precision)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StrassmannError {
    #[error("no coefficients supplied")]
    Empty,
    #[error("coefficients use different primes")]
    MixedPrimes,
    #[error("coefficient {index} is only known to O(p^{precision}), not past the minimal valuation {minimum}")]
    InsufficientPrecision { index: usize, precision: u32, minimum: u32 },
    #[error("{len} coefficients do not control the tail: need (n+1) − ⌊log_p(n+1)⌋ > {minimum}")]
    InsufficientLength { len: usize, minimum: u32 },
}

/// `⌊log_p(n)⌋` for `n ≥ 1`.
fn floor_log(p: u64, n: u64) -> u32 {
    let mut k = 0;
    let mut acc = p;
    while acc <= n {
        k += 1;
        acc = acc.saturating_mul(p);
    }
    k
}

/// Number of zeros in ℤ_p of `Σ bᵢ tⁱ`, bounded by the largest index
/// attaining the minimal valuation.
///
/// The series is assumed to have the integrated shape where the unsupplied
/// coefficients satisfy `ord bᵢ ≥ i − ⌊log_p i⌋`. Because that bound is
/// nondecreasing in `i`, the tail stays strictly above the minimum as soon
/// as `(n+1) − ⌊log_p(n+1)⌋` exceeds it.
pub fn strassmann_bound(coeffs: &[PadicApprox]) -> Result<usize, StrassmannError> {
    let first = coeffs.first().ok_or(StrassmannError::Empty)?;
    let p = first.p;
    if coeffs.iter().any(|c| c.p != p) {
        return Err(StrassmannError::MixedPrimes);
    }
    let minimum = coeffs
        .iter()
        .filter(|c| !c.is_zero_approx)
        .map(|c| c.valuation)
        .min();
    let Some(minimum) = minimum else {
        let c = coeffs.iter().min_by_key(|c| c.precision).expect("nonempty");
        return Err(StrassmannError::InsufficientPrecision {
            index: 0,
            precision: c.precision,
            minimum: c.precision,
        });
    };
    for (index, c) in coeffs.iter().enumerate() {
        if c.is_zero_approx && c.precision <= minimum {
            return Err(StrassmannError::InsufficientPrecision {
                index,
                precision: c.precision,
                minimum,
            });
        }
    }
    let next = coeffs.len() as u64;
    if next as i64 - floor_log(p, next) as i64 <= minimum as i64 {
        return Err(StrassmannError::InsufficientLength {
            len: coeffs.len(),
            minimum,
        });
    }
    Ok(coeffs
        .iter()
        .rposition(|c| !c.is_zero_approx && c.valuation == minimum)
        .expect("minimum is attained"))
}
