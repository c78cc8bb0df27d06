//! Recomputes every published constant the library relies on.

use std::panic::{catch_unwind, AssertUnwindSafe};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use phi4_core::classifier::{classify, classify_quadratic, excluded_table, min_complement_density, verify_catalog};
use phi4_core::dynatomic::dynatomic_at;
use phi4_core::factorizer::factor_q_seeded;
use phi4_core::imagesets::{eval_eta, eval_lambda, eval_rho, ImageFn};
use phi4_core::padic_local::{strassmann_bound, CurveModel, PadicApprox};
use phi4_core::permgroup::CaseGroup;
use phi4_core::polyring::{parse_upoly, rat, rat_int, resultant};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

type Check = fn(u64) -> Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn catalog(_: u64) -> Result<String, String> {
    verify_catalog().map_err(|e| e.to_string())?;
    Ok("quartic dynatomic table and case densities recomputed".into())
}

fn group_densities(_: u64) -> Result<String, String> {
    let expected = [(384, rat(85, 384)), (192, rat(43, 192)), (128, rat(53, 128)), (64, rat(39, 64))];
    for (g, (order, d)) in CaseGroup::ALL.into_iter().zip(expected) {
        let group = g.group();
        ensure(group.order() == order && group.point_density() == d, || format!("group {g}"))?;
    }
    Ok("85/384, 43/192, 53/128, 39/64".into())
}

fn table_types(seed: u64) -> Result<String, String> {
    for row in excluded_table() {
        let f = dynatomic_at(&row.c, 4).map_err(|e| e.to_string())?;
        let got = factor_q_seeded(&f, seed).degrees();
        ensure(got == row.factorization_type, || format!("c = {}: {got}", row.c))?;
        let report = classify(&row.c).map_err(|e| e.to_string())?;
        ensure(report.density == row.density, || format!("c = {}: density {}", row.c, report.density))?;
    }
    Ok("seven tabulated parameters".into())
}

fn quadratic_input(_: u64) -> Result<String, String> {
    let f = parse_upoly("x^2+2*x").map_err(|e| e.to_string())?;
    let r = classify_quadratic(&f).map_err(|e| e.to_string())?;
    ensure(r.c.is_zero() && r.density == rat(1, 4), || format!("reduced to {}", r.c))?;
    Ok("x^2 + 2x reduces to c = 0".into())
}

fn image_values(_: u64) -> Result<String, String> {
    let cases = [
        (ImageFn::Lambda, rat_int(8), rat(19, 16)),
        (ImageFn::Eta, rat(1, 2), rat(19, 16)),
        (ImageFn::Eta, rat_int(2), rat(-5, 4)),
        (ImageFn::Eta, rat_int(1), rat_int(0)),
        (ImageFn::Rho, rat_int(3), rat(-155, 72)),
        (ImageFn::Rho, rat(-1, 3), rat(-155, 72)),
    ];
    for (f, z, c) in cases {
        let v = f.eval(&z).map_err(|e| e.to_string())?;
        ensure(v == c, || format!("{f}({z}) = {v}"))?;
    }
    let z = rat_int(5);
    let via = (&z * &z - rat_int(1)) / &z;
    ensure(
        eval_rho(&z).ok() == eval_eta(&via).ok() && eval_lambda(&z).is_ok(),
        || "rho does not factor through eta".into(),
    )?;
    Ok("lambda, eta and rho at the tabulated preimages".into())
}

fn local_facts(_: u64) -> Result<String, String> {
    let g = "x^8 - 8x^5 + 2x^4 + 8x^3 + 1";
    let cases: [(&str, &[i64], u64); 6] = [
        ("43x^6 + 48x^5 - 81x^4 - 80x^3 + 81x^2 + 48x - 43", &[17, -17], 17),
        ("(x^2 + 1)(3x^2 + 2x - 3)", &[2, -2, 10, -10, 34, -34, 170, -170], 2),
        (g, &[2, 5, 10, 34, 85, 170], 2),
        (g, &[17], 3),
        ("(x^2 + 1)(x^8 - 8x^5 + 2x^4 + 8x^3 + 1)", &[5, 10, 17, 34], 7),
        ("(x^2 - 2x - 1)(x^6 - 3x^4 - 16x^3 + 3x^2 - 1)", &[170], 5),
    ];
    let mut count = 0;
    for (f, twists, p) in cases {
        let curve = CurveModel::from_upoly(&parse_upoly(f).map_err(|e| e.to_string())?)
            .map_err(|e| e.to_string())?;
        for &d in twists {
            let solvable = curve
                .quadratic_twist(&BigInt::from(d))
                .and_then(|c| c.has_qp_points(p))
                .map_err(|e| e.to_string())?;
            ensure(!solvable, || format!("twist {d} of {f} has points at {p}"))?;
            count += 1;
        }
    }
    Ok(format!("{count} twisted curves without p-adic points"))
}

fn strassmann(_: u64) -> Result<String, String> {
    let coeffs: Vec<PadicApprox> = [77, 363, 605]
        .iter()
        .map(|&n| PadicApprox::from_integer(11, &BigInt::from(n), 8))
        .collect();
    let n = strassmann_bound(&coeffs).map_err(|e| e.to_string())?;
    ensure(n == 0, || format!("bound {n}"))?;
    Ok("valuations (1,2,2) at p = 11 give 0".into())
}

fn complement(_: u64) -> Result<String, String> {
    let m = min_complement_density();
    ensure(m == rat(25, 64), || format!("minimum {m}"))?;
    Ok("1 - density >= 25/64 in every case".into())
}

fn resultant_primes(_: u64) -> Result<String, String> {
    let pairs = [
        ("(x^2 + 1)(3x^2 + 2x - 3)", "43x^6 + 48x^5 - 81x^4 - 80x^3 + 81x^2 + 48x - 43"),
        ("(x^4 - 1)(x^2 - 2x - 1)", "x^8 - 8x^5 + 2x^4 + 8x^3 + 1"),
        ("(x^2 + 1)(x^8 - 8x^5 + 2x^4 + 8x^3 + 1)", "(x^2 - 2x - 1)(x^6 - 3x^4 - 16x^3 + 3x^2 - 1)"),
    ];
    for (f, g) in pairs {
        let r = resultant(&parse_upoly(f).unwrap(), &parse_upoly(g).unwrap());
        ensure(r.is_integer() && !r.is_zero(), || format!("Res = {r}"))?;
        let mut rest = r.to_integer().abs();
        for p in [2u32, 5, 17] {
            let p = BigInt::from(p);
            ensure((&rest % &p).is_zero(), || format!("{p} does not divide Res for {f}"))?;
            while (&rest % &p).is_zero() {
                rest /= &p;
            }
        }
        ensure(rest.is_one(), || format!("cofactor {rest} for {f}"))?;
    }
    Ok("prime divisors {2, 5, 17} for all three pairs".into())
}

const CHECKS: [(&str, Check); 9] = [
    ("catalog", catalog),
    ("group densities", group_densities),
    ("tabulated parameters", table_types),
    ("quadratic input", quadratic_input),
    ("image values", image_values),
    ("local emptiness", local_facts),
    ("strassmann", strassmann),
    ("complement bound", complement),
    ("resultant primes", resultant_primes),
];

pub fn run_all(seed: u64) -> Vec<CheckResult> {
    CHECKS
        .iter()
        .map(|(name, check)| {
            let outcome = catch_unwind(AssertUnwindSafe(|| check(seed)))
                .unwrap_or_else(|_| Err("panicked".into()));
            let (passed, detail) = match outcome {
                Ok(d) => (true, d),
                Err(e) => (false, e),
            };
            CheckResult { name: (*name).into(), passed, detail }
        })
        .collect()
}
