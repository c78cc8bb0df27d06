//! Output in the three supported formats. JSON goes through
//! `serde_json::Value`, whose maps are ordered, so keys come out sorted.

use std::fmt::Write;

use clap::ValueEnum;
use num_bigint::BigInt;
use serde::Serialize;
use serde_json::json;

use phi4_core::classifier::ClassificationReport;
use phi4_core::frobenius::SampleReport;
use phi4_core::padic_local::LocalReport;
use phi4_core::permgroup::CaseGroup;
use phi4_core::polyring::{format_upoly, Rat, UPoly};

use crate::selfcheck::CheckResult;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
    Text,
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let value = serde_json::to_value(value).expect("reports serialize");
    let mut out = serde_json::to_string_pretty(&value).expect("values serialize");
    out.push('\n');
    out
}

fn tsv(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = header.join("\t");
    out.push('\n');
    for row in rows {
        out.push_str(&row.join("\t"));
        out.push('\n');
    }
    out
}

fn list<T: ToString>(items: &[T]) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

pub fn classification(r: &ClassificationReport, format: Format) -> String {
    let witnesses = list(&r.witnesses);
    let (n, k) = r.group.small_group_id;
    match format {
        Format::Json => to_json(r),
        Format::Tsv => tsv(
            &["c", "case", "group", "small_group_id", "source", "factorization_type", "density", "witnesses", "cross_check"],
            &[vec![
                r.c.to_string(),
                r.case.to_string(),
                r.group.label.clone(),
                format!("{n},{k}"),
                r.group.source.clone(),
                list(r.factorization_type.parts()),
                r.density.to_string(),
                witnesses,
                match &r.cross_check {
                    Some(c) if c.types_agree => "agrees".into(),
                    Some(_) => "disagrees".into(),
                    None => "not run".into(),
                },
            ]],
        ),
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "c: {}", r.c);
            if let Some(conj) = &r.conjugator {
                let map = UPoly::new(vec![conj.beta.clone(), conj.alpha.clone()]);
                let _ = writeln!(out, "input: {} (conjugated by x -> {})", conj.input, format_upoly(&map, "x"));
            }
            let _ = writeln!(out, "case: {}", r.case);
            let _ = writeln!(out, "group: {} SmallGroup({n},{k}) [{}]", r.group.label, r.group.source);
            let _ = writeln!(out, "factorization type: {}", r.factorization_type);
            let _ = writeln!(out, "density: {} (~{:.6})", r.density, r.approx.unwrap_or(f64::NAN));
            if !r.witnesses.is_empty() {
                let _ = writeln!(out, "witnesses: {}", witnesses);
            }
            if let Some(c) = &r.cross_check {
                let _ = writeln!(
                    out,
                    "cross-check: direct factorization {} {}, 1 - density = {}",
                    c.direct_type,
                    if c.types_agree { "agrees" } else { "disagrees" },
                    c.complement_density
                );
            }
            out
        }
    }
}

pub fn dynatomic(n: u32, c: Option<&Rat>, text: &str, format: Format) -> String {
    let at = c.map(Rat::to_string).unwrap_or_else(|| "t".into());
    match format {
        Format::Json => to_json(&json!({ "n": n, "c": at, "polynomial": text })),
        Format::Tsv => tsv(&["n", "c", "polynomial"], &[vec![n.to_string(), at, text.into()]]),
        Format::Text => format!("{text}\n"),
    }
}

pub fn sample(r: &SampleReport, format: Format) -> String {
    let tv = r.total_variation.as_ref().map(Rat::to_string).unwrap_or_else(|| "n/a".into());
    match format {
        Format::Json => to_json(r),
        Format::Tsv => {
            let mut out = tsv(
                &["c", "bound", "primes_used", "empirical_fraction", "predicted_density", "total_variation"],
                &[vec![
                    r.c.to_string(),
                    r.bound.to_string(),
                    r.primes_used.to_string(),
                    r.empirical_fraction.to_string(),
                    r.predicted_density.to_string(),
                    tv,
                ]],
            );
            out.push_str("\nfactorization_type\tcount\n");
            for e in &r.histogram {
                let _ = writeln!(out, "{}\t{}", list(e.factorization_type.parts()), e.count);
            }
            out
        }
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "c: {}  primes <= {}: {} used, {} skipped", r.c, r.bound, r.primes_used, r.primes_skipped);
            let _ = writeln!(
                out,
                "{}: {} (~{:.4})",
                r.estimator,
                r.empirical_fraction,
                r.approx.unwrap_or(f64::NAN)
            );
            let _ = writeln!(out, "predicted density: {}", r.predicted_density);
            let _ = writeln!(out, "total variation: {tv}");
            for e in &r.histogram {
                let _ = writeln!(out, "  {:<16} {}", e.factorization_type.to_string(), e.count);
            }
            out
        }
    }
}

pub fn local(r: &LocalReport, twist: &BigInt, format: Format) -> String {
    let verdict = if r.solvable { "points" } else { "empty" };
    match format {
        Format::Json => to_json(&json!({ "twist": twist.to_string(), "verdict": verdict, "certificate": r })),
        Format::Tsv => tsv(
            &["p", "twist", "verdict", "depth_cap", "nodes"],
            &[vec![
                r.p.to_string(),
                twist.to_string(),
                verdict.into(),
                r.depth_cap.to_string(),
                (r.affine.node_count() + r.infinity.as_ref().map_or(0, |t| t.node_count())).to_string(),
            ]],
        ),
        Format::Text => format!("{verdict}\n{r}\n"),
    }
}

pub fn density(g: CaseGroup, format: Format) -> String {
    let group = g.group();
    let d = group.point_density();
    match format {
        Format::Json => to_json(&json!({
            "group": g.label(),
            "order": group.order(),
            "with_fixed_point": group.stabilizer_union_size(),
            "density": d.to_string(),
        })),
        Format::Tsv => tsv(
            &["group", "order", "with_fixed_point", "density"],
            &[vec![g.label().into(), group.order().to_string(), group.stabilizer_union_size().to_string(), d.to_string()]],
        ),
        Format::Text => format!("{d}\n"),
    }
}

pub fn selfcheck(results: &[CheckResult], format: Format) -> String {
    match format {
        Format::Json => to_json(&results),
        Format::Tsv => tsv(
            &["check", "passed", "detail"],
            &results
                .iter()
                .map(|r| vec![r.name.clone(), r.passed.to_string(), r.detail.clone()])
                .collect::<Vec<_>>(),
        ),
        Format::Text => {
            let mut out = String::new();
            for r in results {
                let _ = writeln!(out, "{} {}: {}", if r.passed { "ok  " } else { "FAIL" }, r.name, r.detail);
            }
            let passed = results.iter().filter(|r| r.passed).count();
            let _ = writeln!(out, "{passed}/{} checks passed", results.len());
            out
        }
    }
}
