use num_traits::{One, Zero};
use proptest::prelude::*;

use phi4_core::classifier::{
    all_outcome_densities, classify, classify_quadratic, consistency_check, excluded_row, Case,
    ClassificationReport,
};
use phi4_core::dynatomic::{dynatomic, dynatomic_at, normalize_quadratic};
use phi4_core::factorizer::{factor_q, factorization_type, rational_roots};
use phi4_core::polyring::{rat, Rat, UPoly};

fn small_rat(h: i64) -> impl Strategy<Value = Rat> {
    (-h..=h, 1..=h).prop_map(|(a, b)| rat(a, b))
}

#[test]
fn largest_density_is_rho_case() {
    let max = all_outcome_densities().into_iter().max().unwrap();
    assert_eq!(max, rat(39, 64));
}

#[test]
fn every_case_reachable() {
    let cases: Vec<Case> = [rat(1, 1), rat(-1, 8), rat(-8, 3), rat(-31, 48), rat(0, 1)]
        .iter()
        .map(|c| classify(c).unwrap().case)
        .collect();
    assert_eq!(
        cases,
        vec![Case::GenericW, Case::LambdaG, Case::EtaH, Case::RhoI, Case::ExcludedTable]
    );
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn no_linear_factor_and_few_quadratics(c in small_rat(50)) {
        prop_assume!(excluded_row(&c).is_none());
        let ty = factorization_type(&dynatomic_at(&c, 4).unwrap());
        prop_assert!(!ty.contains(1), "{c}: {ty}");
        prop_assert!(ty.count(2) <= 3, "{c}: {ty}");
        prop_assert_eq!(ty.total(), 12);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn rational_factors_pass_independent_checks(c in small_rat(20)) {
        let f = dynatomic_at(&c, 4).unwrap();
        let fac = factor_q(&f);
        prop_assert_eq!(fac.expand(), f);
        for (g, _) in &fac.factors {
            prop_assert!(g.is_squarefree());
            if g.degree().unwrap() <= 3 {
                prop_assert!(g.degree() == Some(1) || rational_roots(g).is_empty());
            }
        }
    }

    #[test]
    fn classification_matches_factorization(c in small_rat(40)) {
        let report = consistency_check(&c).unwrap();
        let check = report.cross_check.unwrap();
        prop_assert!(check.types_agree);
        prop_assert!(check.complement_bound_holds);
    }

    // conjugate quadratics have dynatomic polynomials of the same shape
    #[test]
    fn normal_form_preserves_factorization_type(
        a in small_rat(4).prop_filter("nonzero", |a| !a.is_zero()),
        b in small_rat(4),
        d in small_rat(4),
        n in 1u32..=3,
    ) {
        let f = UPoly::new(vec![d, b, a]);
        let normal = normalize_quadratic(&f).unwrap().normal_form();
        let lhs = factorization_type(&dynatomic(&f, n).unwrap());
        let rhs = factorization_type(&dynatomic(&normal, n).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn quadratic_and_parameter_agree(c in small_rat(12), shift in small_rat(3)) {
        // x ↦ x + s conjugates x² + c into a quadratic with the same invariant
        let s = shift;
        let f = UPoly::new(vec![&s * &s + &c - &s, &s * Rat::from_integer(2.into()), Rat::one()]);
        let via_f = classify_quadratic(&f).unwrap();
        let direct = classify(&c).unwrap();
        prop_assert_eq!(via_f.c, c);
        prop_assert_eq!(via_f.case, direct.case);
        prop_assert_eq!(via_f.density, direct.density);
    }

    #[test]
    fn reports_round_trip_through_json(c in small_rat(30)) {
        let report = classify(&c).unwrap().with_approx();
        let text = serde_json::to_string(&report).unwrap();
        let back: ClassificationReport = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, report);
    }
}
