//! Galois-group case, factorization type and root density of `Φ₄(c, x)` for
//! rational `c`.
//!
//! Seven parameters are special and read from a fixed table. Every other `c`
//! falls into exactly one of four cases, decided by membership in the images
//! of λ, η and ρ (checked in that order).

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::dynatomic::{
    dynatomic_at, dynatomic_generic, normalize_quadratic, phi4_reference, DynatomicError,
};
use crate::factorizer::{factor_q_seeded, DegreeMultiset, DEFAULT_SEED};
use crate::imagesets::{in_image_eta, in_image_lambda, in_image_rho, MembershipWitness};
use crate::permgroup::CaseGroup;
use crate::polyring::{rat, Rat, UPoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    /// `c` lies in both Im λ and Im η without being tabulated.
    #[error("{c} lies in the images of both lambda and eta but is not tabulated")]
    InconsistentMembership { c: Rat },
    /// Direct factorization contradicts the classification.
    #[error("classification of {c} predicts {predicted}, direct factorization gives {direct}")]
    Mismatch {
        c: Rat,
        predicted: DegreeMultiset,
        direct: DegreeMultiset,
    },
    /// Built-in constants disagree with what they are recomputed from.
    #[error("built-in data failed verification: {0}")]
    Catalog(String),
    #[error(transparent)]
    Dynatomic(#[from] DynatomicError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Case {
    /// Outside every image: the full wreath group.
    GenericW,
    /// In Im λ.
    LambdaG,
    /// In Im η but not Im ρ.
    EtaH,
    /// In Im ρ.
    RhoI,
    /// One of the seven tabulated parameters.
    ExcludedTable,
}

impl Case {
    pub fn group(self) -> Option<CaseGroup> {
        match self {
            Case::GenericW => Some(CaseGroup::Wreath),
            Case::LambdaG => Some(CaseGroup::Lambda),
            Case::EtaH => Some(CaseGroup::Eta),
            Case::RhoI => Some(CaseGroup::Rho),
            Case::ExcludedTable => None,
        }
    }

    pub fn factorization_type(self) -> Option<DegreeMultiset> {
        let parts = match self {
            Case::GenericW | Case::LambdaG => vec![12],
            Case::EtaH => vec![8, 4],
            Case::RhoI => vec![8, 2, 2],
            Case::ExcludedTable => return None,
        };
        Some(DegreeMultiset::new(parts))
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// A tabulated parameter with its published data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExcludedRow {
    pub c: Rat,
    pub factorization_type: DegreeMultiset,
    pub small_group_id: (u32, u32),
    pub density: Rat,
}

/// `(c, factor degrees, Small-Groups id, density)`.
type RawRow = ((i64, i64), &'static [usize], (u32, u32), (i64, i64));

/// The seven parameters where the generic description fails.
const EXCLUDED: [RawRow; 7] = [
    ((-5, 1), &[8, 4], (64, 20), (23, 64)),
    ((-5, 2), &[12], (24, 5), (1, 6)),
    ((-155, 72), &[8, 2, 2], (32, 11), (1, 2)),
    ((-2, 1), &[8, 4], (32, 3), (11, 32)),
    ((-5, 4), &[8, 2, 2], (64, 101), (39, 64)),
    ((0, 1), &[8, 4], (8, 2), (1, 4)),
    ((19, 16), &[8, 4], (64, 101), (27, 64)),
];

pub fn excluded_table() -> Vec<ExcludedRow> {
    EXCLUDED
        .iter()
        .map(|&((n, d), ty, id, (dn, dd))| ExcludedRow {
            c: rat(n, d),
            factorization_type: DegreeMultiset::new(ty.to_vec()),
            small_group_id: id,
            density: rat(dn, dd),
        })
        .collect()
}

pub fn excluded_row(c: &Rat) -> Option<ExcludedRow> {
    excluded_table().into_iter().find(|row| &row.c == c)
}

/// Which group a report names and where its identifier comes from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupInfo {
    /// `W`, `G`, `H`, `I`, or `table` for tabulated parameters.
    pub label: String,
    pub small_group_id: (u32, u32),
    /// `computed` when the density was recomputed from explicit
    /// generators, `paper-sourced` when it is a tabulated constant.
    pub source: String,
}

/// The affine change of variable used for a general quadratic.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjugatorInfo {
    /// The input quadratic, in canonical text form.
    pub input: String,
    #[serde(with = "crate::serde_rat")]
    pub alpha: Rat,
    #[serde(with = "crate::serde_rat")]
    pub beta: Rat,
}

/// Result of comparing a classification with direct factorization.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossCheck {
    pub direct_type: DegreeMultiset,
    pub types_agree: bool,
    #[serde(with = "crate::serde_rat")]
    pub complement_density: Rat,
    /// `1 − density ≥ 25/64`.
    pub complement_bound_holds: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClassificationReport {
    #[serde(with = "crate::serde_rat")]
    pub c: Rat,
    pub case: Case,
    pub group: GroupInfo,
    pub factorization_type: DegreeMultiset,
    #[serde(with = "crate::serde_rat")]
    pub density: Rat,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub approx: Option<f64>,
    pub witnesses: Vec<MembershipWitness>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub conjugator: Option<ConjugatorInfo>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cross_check: Option<CrossCheck>,
}

impl ClassificationReport {
    /// Adds a floating-point rendering of the density.
    pub fn with_approx(mut self) -> Self {
        self.approx = self.density.to_f64();
        self
    }
}

/// Smallest possible `1 − density` over all outcomes.
pub fn min_complement_density() -> Rat {
    all_outcome_densities()
        .into_iter()
        .map(|d| Rat::one() - d)
        .min()
        .expect("nonempty")
}

/// Densities of the four generic cases followed by the seven tabulated ones.
pub fn all_outcome_densities() -> Vec<Rat> {
    CaseGroup::ALL
        .iter()
        .map(|g| g.group().point_density())
        .chain(excluded_table().into_iter().map(|r| r.density))
        .collect()
}

/// Recomputes the built-in constants once per process: the literal `Φ₄`
/// table against the Möbius construction, and every case density against
/// its permutation group.
pub fn verify_catalog() -> Result<(), ClassifyError> {
    static VERDICT: OnceLock<Result<(), ClassifyError>> = OnceLock::new();
    VERDICT
        .get_or_init(|| {
            let built = dynatomic_generic(4)?;
            if built != phi4_reference() {
                return Err(ClassifyError::Catalog(
                    "tabulated quartic dynatomic polynomial differs from the Möbius product".into(),
                ));
            }
            for g in CaseGroup::ALL {
                let group = g.group();
                if group.order() as u32 != g.small_group_id().0 {
                    return Err(ClassifyError::Catalog(format!("order of group {g}")));
                }
                if group.point_density() != g.published_density() {
                    return Err(ClassifyError::Catalog(format!("density of group {g}")));
                }
            }
            Ok(())
        })
        .clone()
}

fn memberships(c: &Rat) -> Vec<MembershipWitness> {
    let mut out = Vec::new();
    if let Some(w) = in_image_lambda(c) {
        out.push(w);
    }
    if let Some(w) = in_image_eta(c) {
        out.push(w);
        if let Some(w) = in_image_rho(c) {
            out.push(w);
        }
    }
    out
}

pub fn classify(c: &Rat) -> Result<ClassificationReport, ClassifyError> {
    verify_catalog()?;
    let witnesses = memberships(c);
    if let Some(row) = excluded_row(c) {
        return Ok(ClassificationReport {
            c: c.clone(),
            case: Case::ExcludedTable,
            group: GroupInfo {
                label: "table".into(),
                small_group_id: row.small_group_id,
                source: "paper-sourced".into(),
            },
            factorization_type: row.factorization_type,
            density: row.density,
            approx: None,
            witnesses,
            conjugator: None,
            cross_check: None,
        });
    }
    use crate::imagesets::ImageFn;
    let has = |f: ImageFn| witnesses.iter().any(|w| w.function == f);
    let case = match (has(ImageFn::Lambda), has(ImageFn::Eta), has(ImageFn::Rho)) {
        (true, true, _) => return Err(ClassifyError::InconsistentMembership { c: c.clone() }),
        (true, false, _) => Case::LambdaG,
        (false, true, true) => Case::RhoI,
        (false, true, false) => Case::EtaH,
        (false, false, _) => Case::GenericW,
    };
    let group = case.group().expect("generic case");
    Ok(ClassificationReport {
        c: c.clone(),
        case,
        group: GroupInfo {
            label: group.label().into(),
            small_group_id: group.small_group_id(),
            source: "computed".into(),
        },
        factorization_type: case.factorization_type().expect("generic case"),
        density: group.group().point_density(),
        approx: None,
        witnesses,
        conjugator: None,
        cross_check: None,
    })
}

/// Classifies an arbitrary rational quadratic through its normal form.
pub fn classify_quadratic(f: &UPoly) -> Result<ClassificationReport, ClassifyError> {
    let n = normalize_quadratic(f)?;
    let mut report = classify(&n.c)?;
    report.conjugator = Some(ConjugatorInfo {
        input: crate::polyring::format_upoly(f, "x"),
        alpha: n.alpha,
        beta: n.beta,
    });
    Ok(report)
}

/// `c ∈ Im λ ∪ Im η ∪ {−5/2}`: the parameters where specializing changes
/// the Galois group or the factorization type.
pub fn exceptional_set_test(c: &Rat) -> bool {
    *c == rat(-5, 2) || in_image_lambda(c).is_some() || in_image_eta(c).is_some()
}

/// Classifies `c`, factors `Φ₄(c, x)` directly, and fails with
/// [`ClassifyError::Mismatch`] if the two disagree.
pub fn consistency_check(c: &Rat) -> Result<ClassificationReport, ClassifyError> {
    consistency_check_seeded(c, DEFAULT_SEED)
}

pub fn consistency_check_seeded(c: &Rat, seed: u64) -> Result<ClassificationReport, ClassifyError> {
    let mut report = classify(c)?;
    let direct = factor_q_seeded(&dynatomic_at(c, 4)?, seed).degrees();
    if direct != report.factorization_type {
        return Err(ClassifyError::Mismatch {
            c: c.clone(),
            predicted: report.factorization_type.clone(),
            direct,
        });
    }
    let complement = Rat::one() - &report.density;
    report.cross_check = Some(CrossCheck {
        direct_type: direct,
        types_agree: true,
        complement_bound_holds: complement >= rat(25, 64),
        complement_density: complement,
    });
    Ok(report)
}

/// Cycle-type distribution predicted for the Frobenius elements of `c`;
/// `None` for tabulated parameters, whose groups are not available as
/// permutations.
pub fn predicted_distribution(case: Case) -> Option<BTreeMap<DegreeMultiset, Rat>> {
    case.group().map(|g| g.group().cycle_type_distribution())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::imagesets::ImageFn;
    use crate::polyring::{parse_upoly, rat_int};

    #[test]
    fn catalog_verifies() {
        verify_catalog().unwrap();
    }

    #[test]
    fn tabulated_parameter() {
        let r = classify(&rat(19, 16)).unwrap();
        assert_eq!(r.case, Case::ExcludedTable);
        assert_eq!(r.factorization_type, DegreeMultiset::new(vec![8, 4]));
        assert_eq!(r.group.small_group_id, (64, 101));
        assert_eq!(r.density, rat(27, 64));
        assert_eq!(r.group.source, "paper-sourced");
        let fns: Vec<ImageFn> = r.witnesses.iter().map(|w| w.function).collect();
        assert_eq!(fns, vec![ImageFn::Lambda, ImageFn::Eta]);
    }

    #[test]
    fn generic_cases() {
        let r = classify(&rat(-1, 8)).unwrap();
        assert_eq!((r.case, r.density.clone()), (Case::LambdaG, rat(43, 192)));
        let r = classify(&rat(-31, 48)).unwrap();
        assert_eq!((r.case, r.density.clone()), (Case::RhoI, rat(39, 64)));
        assert_eq!(r.factorization_type, DegreeMultiset::new(vec![8, 2, 2]));
        let r = classify(&rat(-8, 3)).unwrap();
        assert_eq!((r.case, r.density.clone()), (Case::EtaH, rat(53, 128)));
        let r = classify(&rat_int(1)).unwrap();
        assert_eq!((r.case, r.density.clone()), (Case::GenericW, rat(85, 384)));
        assert!(r.witnesses.is_empty());
    }

    #[test]
    fn quadratics() {
        let r = classify_quadratic(&parse_upoly("x^2 + 1").unwrap()).unwrap();
        assert_eq!(r.case, Case::GenericW);
        let r = classify_quadratic(&parse_upoly("x^2 + 2x").unwrap()).unwrap();
        assert_eq!((r.case, r.c.clone()), (Case::ExcludedTable, rat_int(0)));
        let conj = r.conjugator.unwrap();
        assert_eq!((conj.alpha, conj.beta), (rat_int(1), rat_int(1)));
        let r = classify_quadratic(&parse_upoly("x^2 - 5/4").unwrap()).unwrap();
        assert_eq!(r.density, rat(39, 64));
        assert!(matches!(
            classify_quadratic(&parse_upoly("x + 1").unwrap()),
            Err(ClassifyError::Dynatomic(DynatomicError::DegenerateInput(_)))
        ));
    }

    #[test]
    fn exceptional_set() {
        assert!(exceptional_set_test(&rat(-5, 2)));
        assert!(exceptional_set_test(&rat_int(0)));
        assert!(!exceptional_set_test(&rat_int(1)));
    }

    #[test]
    fn consistency_examples() {
        for (c, ty) in [(rat_int(-2), vec![8, 4]), (rat(-5, 2), vec![12]), (rat(-8, 3), vec![8, 4])] {
            let r = consistency_check(&c).unwrap();
            let check = r.cross_check.unwrap();
            assert_eq!(check.direct_type, DegreeMultiset::new(ty));
            assert!(check.complement_bound_holds);
        }
    }

    #[test]
    fn complement_bound() {
        assert_eq!(min_complement_density(), rat(25, 64));
        assert!(rat(25, 64) > rat(39, 100));
        assert_eq!(all_outcome_densities().len(), 11);
    }

    #[test]
    fn report_json_round_trip() {
        let r = consistency_check(&rat(-155, 72)).unwrap().with_approx();
        let text = serde_json::to_string(&r).unwrap();
        assert!(text.contains(r#""density":"1/2""#));
        assert!(text.contains(r#""factorization_type":[8,2,2]"#));
        let back: ClassificationReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn predicted_distributions() {
        let d = predicted_distribution(Case::GenericW).unwrap();
        assert_eq!(crate::permgroup::fixed_point_mass(&d), rat(85, 384));
        assert!(predicted_distribution(Case::ExcludedTable).is_none());
    }
}
