//! Frobenius cycle types of `Φ₄(c, x)` and the empirical natural density of
//! primes at which it has a root.
//!
//! At a good prime the factor degrees mod `p` are the cycle type of the
//! Frobenius element on the twelve roots, and a root mod `p` lifts to `ℚ_p`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::classifier::{classify, predicted_distribution, ClassifyError};
use crate::dynatomic::dynatomic_at;
use crate::factorizer::{DegreeMultiset, FpPoly};
use crate::polyring::{discriminant, Rat, UPoly};

pub const MIN_BOUND: u64 = 100;
const CHUNK: usize = 256;

/// Wording used for the estimator in reports.
pub const ESTIMATOR: &str = "empirical natural density";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FrobeniusError {
    #[error("prime bound {0} is below the minimum of {MIN_BOUND}")]
    BoundTooSmall(u64),
    /// A sampled cycle type is impossible for the predicted group.
    #[error("cycle type {observed} at p = {p} is outside the predicted support")]
    SupportViolation { p: u64, observed: DegreeMultiset },
    #[error(transparent)]
    Classify(#[from] ClassifyError),
}

/// `Φ₄(c, x)` prepared for repeated reduction.
///
/// Stored as its squarefree decomposition over ℚ so that parameters with a
/// repeated factor still yield multisets of total degree 12. A prime is bad
/// when it divides a coefficient denominator of a part or the discriminant
/// numerator of the squarefree part.
struct Reduction {
    parts: Vec<(UPoly, usize)>,
    bad: BigInt,
}

impl Reduction {
    fn new(c: &Rat) -> Self {
        let f = dynatomic_at(c, 4).expect("degree 12 for every c");
        let parts = f.squarefree_decomposition();
        let radical = parts.iter().fold(UPoly::one(), |acc, (g, _)| &acc * g);
        let disc = discriminant(&radical).expect("degree at least 1");
        debug_assert!(!disc.is_zero());
        let mut bad = disc.numer().abs();
        for coeff in f.coeffs().iter().chain(parts.iter().flat_map(|(g, _)| g.coeffs())) {
            bad *= coeff.denom();
        }
        Reduction { parts, bad }
    }

    fn is_good(&self, p: u64) -> bool {
        !(&self.bad % BigInt::from(p)).is_zero()
    }

    fn multiset(&self, p: u64) -> Option<DegreeMultiset> {
        if !self.is_good(p) {
            return None;
        }
        let mut degrees = Vec::with_capacity(12);
        for (g, mult) in &self.parts {
            let reduced = FpPoly::from_upoly(g, p)?;
            for d in reduced.factor_degrees_squarefree() {
                degrees.extend(std::iter::repeat(d).take(*mult));
            }
        }
        debug_assert_eq!(degrees.iter().sum::<usize>(), 12);
        Some(DegreeMultiset::new(degrees))
    }
}

/// Factor degrees of `Φ₄(c, x)` mod `p`, or `None` when `p` is not prime or
/// is bad for `c`.
pub fn degree_multiset_mod_p(c: &Rat, p: u64) -> Option<DegreeMultiset> {
    if !primal::is_prime(p) {
        return None;
    }
    Reduction::new(c).multiset(p)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HistogramEntry {
    pub factorization_type: DegreeMultiset,
    pub count: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PredictedEntry {
    pub factorization_type: DegreeMultiset,
    #[serde(with = "crate::serde_rat")]
    pub probability: Rat,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SampleReport {
    #[serde(with = "crate::serde_rat")]
    pub c: Rat,
    pub bound: u64,
    pub primes_used: u64,
    pub primes_skipped: u64,
    pub estimator: String,
    /// Fraction of good primes `p ≤ bound` at which `Φ₄(c, x)` has a root.
    #[serde(with = "crate::serde_rat")]
    pub empirical_fraction: Rat,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub approx: Option<f64>,
    /// Sorted by cycle type, largest parts first.
    pub histogram: Vec<HistogramEntry>,
    #[serde(with = "crate::serde_rat")]
    pub predicted_density: Rat,
    /// Absent for tabulated parameters.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub predicted_distribution: Option<Vec<PredictedEntry>>,
    #[serde(default, with = "crate::serde_rat::option", skip_serializing_if = "Option::is_none")]
    pub total_variation: Option<Rat>,
}

impl SampleReport {
    pub fn with_approx(mut self) -> Self {
        self.approx = self.empirical_fraction.to_f64();
        self
    }

    pub fn histogram_map(&self) -> BTreeMap<DegreeMultiset, u64> {
        self.histogram
            .iter()
            .map(|e| (e.factorization_type.clone(), e.count))
            .collect()
    }
}

/// `½ Σ |empirical − predicted|` over the union of both supports.
pub fn total_variation(
    histogram: &BTreeMap<DegreeMultiset, u64>,
    predicted: &BTreeMap<DegreeMultiset, Rat>,
) -> Rat {
    let total: u64 = histogram.values().sum();
    if total == 0 {
        return Rat::one();
    }
    let keys: std::collections::BTreeSet<&DegreeMultiset> =
        histogram.keys().chain(predicted.keys()).collect();
    let sum = keys.into_iter().fold(Rat::zero(), |acc, k| {
        let emp = Rat::new(BigInt::from(histogram.get(k).copied().unwrap_or(0)), BigInt::from(total));
        let pred = predicted.get(k).cloned().unwrap_or_else(Rat::zero);
        acc + (emp - pred).abs()
    });
    sum / BigInt::from(2)
}

/// Samples every prime up to `bound` and compares the root frequency and
/// cycle-type histogram with the group attached to `classify(c)`.
///
/// Primes are processed in parallel chunks; the merge is in ascending prime
/// order, so the report does not depend on scheduling.
pub fn sample_density(c: &Rat, bound: u64) -> Result<SampleReport, FrobeniusError> {
    if bound < MIN_BOUND {
        return Err(FrobeniusError::BoundTooSmall(bound));
    }
    let report = classify(c)?;
    let predicted = predicted_distribution(report.case);
    let reduction = Reduction::new(c);
    let primes: Vec<u64> = primal::Primes::all()
        .take_while(|&p| p as u64 <= bound)
        .map(|p| p as u64)
        .collect();
    let per_chunk: Vec<Vec<(u64, Option<DegreeMultiset>)>> = primes
        .par_chunks(CHUNK)
        .map(|chunk| chunk.iter().map(|&p| (p, reduction.multiset(p))).collect())
        .collect();

    let mut histogram: BTreeMap<DegreeMultiset, u64> = BTreeMap::new();
    let (mut used, mut skipped, mut with_root) = (0u64, 0u64, 0u64);
    for (p, multiset) in per_chunk.into_iter().flatten() {
        let Some(m) = multiset else {
            skipped += 1;
            continue;
        };
        if let Some(dist) = &predicted {
            if !dist.contains_key(&m) {
                return Err(FrobeniusError::SupportViolation { p, observed: m });
            }
        }
        used += 1;
        if m.contains(1) {
            with_root += 1;
        }
        *histogram.entry(m).or_default() += 1;
    }
    let empirical_fraction = if used == 0 {
        Rat::zero()
    } else {
        Rat::new(BigInt::from(with_root), BigInt::from(used))
    };
    let total_variation = predicted.as_ref().map(|d| total_variation(&histogram, d));
    Ok(SampleReport {
        c: c.clone(),
        bound,
        primes_used: used,
        primes_skipped: skipped,
        estimator: ESTIMATOR.into(),
        empirical_fraction,
        approx: None,
        histogram: histogram
            .into_iter()
            .rev()
            .map(|(factorization_type, count)| HistogramEntry { factorization_type, count })
            .collect(),
        predicted_density: report.density,
        predicted_distribution: predicted.map(|d| {
            d.into_iter()
                .rev()
                .map(|(factorization_type, probability)| PredictedEntry {
                    factorization_type,
                    probability,
                })
                .collect()
        }),
        total_variation,
    })
}

/// `|a − b|` for exact fractions.
pub fn distance(a: &Rat, b: &Rat) -> Rat {
    (a - b).abs()
}

/// Order of `a` in `(ℤ/m)^×`; used by tests that predict cyclotomic
/// splitting.
pub fn multiplicative_order(a: u64, m: u64) -> Option<u64> {
    if a.gcd(&m) != 1 {
        return None;
    }
    let mut x = a % m;
    let mut k = 1;
    while x != 1 % m {
        x = x * a % m;
        k += 1;
    }
    Some(k)
}
