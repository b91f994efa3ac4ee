//! Text, JSON, and CSV renderings of pipeline results.

use std::fmt::Write;

use infbranch_core::json::{branch_record, point_record, report_record, to_json};
use infbranch_core::puiseux::format_exponent;
use infbranch_core::{BehaviorReport, Complex64, InfinityBranch, InfinityPoint, Verdict};
use serde_json::json;

use crate::Format;

/// `x` with 12 significant digits, trailing zeros removed.
pub fn num(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return if x == 0.0 { "0".into() } else { x.to_string() };
    }
    let exp = x.abs().log10().floor() as i32;
    if !(-5..12).contains(&exp) {
        let s = format!("{x:.11e}");
        let (mantissa, e) = s.split_once('e').unwrap();
        let mantissa = mantissa.trim_end_matches('0').trim_end_matches('.');
        return format!("{mantissa}e{e}");
    }
    let decimals = (11 - exp).max(0) as usize;
    let s = format!("{x:.decimals$}");
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

pub fn complex(c: Complex64) -> String {
    match (c.re == 0.0, c.im == 0.0) {
        (_, true) => num(c.re),
        (true, false) => format!("{}i", num(c.im)),
        _ if c.im < 0.0 => format!("{} - {}i", num(c.re), num(-c.im)),
        _ => format!("{} + {}i", num(c.re), num(c.im)),
    }
}

fn point_label(m: Complex64) -> String {
    format!("(1:{}:0)", complex(m))
}

pub fn points(points: &[InfinityPoint], lambda: u32, format: Format) -> String {
    match format {
        Format::Json => {
            let records: Vec<_> = points.iter().map(point_record).collect();
            to_json(&json!({ "lambda": lambda, "points": records })) + "\n"
        }
        Format::Csv => {
            let mut out = String::from("re,im,mult\n");
            for p in points {
                writeln!(out, "{},{},{}", p.m.re, p.m.im, p.multiplicity).unwrap();
            }
            out
        }
        Format::Text => {
            let mut out = format!("shear lambda = {lambda}\n");
            for p in points {
                writeln!(out, "point {}  multiplicity {}", point_label(p.m), p.multiplicity).unwrap();
            }
            if points.is_empty() {
                out.push_str("no points at infinity besides (0:1:0)\n");
            }
            out
        }
    }
}

fn branch_text(out: &mut String, label: &str, b: &InfinityBranch) {
    let degree = b.degree().map_or_else(|_| "unknown".to_string(), |d| d.to_string());
    writeln!(
        out,
        "branch {label} at {}: N = {}, degree {degree}, terms down to z^{}",
        point_label(b.point().m),
        b.ramification_index(),
        format_exponent(&b.watermark())
    )
    .unwrap();
    for (e, a) in b.r_terms() {
        writeln!(out, "  z^{:<8} {}", format_exponent(&e), complex(a)).unwrap();
    }
}

pub fn branches(branches: &[InfinityBranch], lambda: u32, format: Format) -> String {
    match format {
        Format::Json => {
            let records: Vec<_> = branches.iter().map(branch_record).collect();
            to_json(&json!({ "lambda": lambda, "branches": records })) + "\n"
        }
        Format::Csv => {
            let mut out = String::from("branch,re_m,im_m,N,exponent,re,im\n");
            for (i, b) in branches.iter().enumerate() {
                for (e, a) in b.r_terms() {
                    writeln!(
                        out,
                        "{i},{},{},{},{},{},{}",
                        b.point().m.re,
                        b.point().m.im,
                        b.ramification_index(),
                        format_exponent(&e),
                        a.re,
                        a.im
                    )
                    .unwrap();
                }
            }
            out
        }
        Format::Text => {
            let mut out = format!("shear lambda = {lambda}\n");
            for (i, b) in branches.iter().enumerate() {
                branch_text(&mut out, &i.to_string(), b);
            }
            out
        }
    }
}

pub fn report(r: &BehaviorReport, format: Format) -> String {
    if format != Format::Text {
        return to_json(&report_record(r)) + "\n";
    }
    let mut out = String::new();
    let verdict = match r.verdict {
        Verdict::Same => "same asymptotic behavior",
        Verdict::Different => "different asymptotic behavior",
    };
    writeln!(out, "verdict: {verdict}").unwrap();
    if let Some(stage) = r.failure_stage {
        writeln!(out, "failed at: {}", stage.as_str()).unwrap();
    }
    writeln!(out, "shear lambda = {}", r.lambda).unwrap();
    for (name, pts) in [("a", &r.points_a), ("b", &r.points_b)] {
        let list: Vec<String> = pts
            .iter()
            .map(|p| format!("{} x{}", point_label(p.m), p.multiplicity))
            .collect();
        writeln!(out, "points {name}: {}", list.join(", ")).unwrap();
    }
    for p in &r.pairing {
        writeln!(
            out,
            "pair at {}: a{} <-> b{}, c = {}, deviation {}",
            point_label(p.point),
            p.branch_a,
            p.branch_b,
            complex(p.witness.conjugation_root),
            num(p.witness.max_coefficient_deviation)
        )
        .unwrap();
    }
    let list = |v: &[usize], side: &str| {
        if v.is_empty() {
            "none".to_string()
        } else {
            v.iter().map(|i| format!("{side}{i}")).collect::<Vec<_>>().join(", ")
        }
    };
    writeln!(out, "unmatched a: {}", list(&r.unmatched_a, "a")).unwrap();
    writeln!(out, "unmatched b: {}", list(&r.unmatched_b, "b")).unwrap();
    for (name, bs) in [("a", &r.branches_a), ("b", &r.branches_b)] {
        for (i, b) in bs.iter().enumerate() {
            branch_text(&mut out, &format!("{name}{i}"), b);
        }
    }
    out
}

pub fn samples(rows: &[(Complex64, Complex64)], leaf: u32, format: Format) -> String {
    if format == Format::Json {
        let records: Vec<_> = rows
            .iter()
            .map(|(z, y)| json!({ "z_re": z.re, "z_im": z.im, "y_re": y.re, "y_im": y.im, "leaf": leaf }))
            .collect();
        return to_json(&records) + "\n";
    }
    let mut out = String::from("z_re,z_im,y_re,y_im,leaf\n");
    for (z, y) in rows {
        writeln!(out, "{},{},{},{},{leaf}", z.re, z.im, y.re, y.im).unwrap();
    }
    out
}

const HAUSDORFF_NOTE: &str = "discrete estimate over a finite window; shows trends only and cannot certify finiteness";

pub fn hausdorff(estimates: &[(f64, f64)], grid: usize, format: Format) -> String {
    match format {
        Format::Json => {
            let records: Vec<_> = estimates
                .iter()
                .map(|(r, h)| json!({ "window": r, "estimate": h }))
                .collect();
            to_json(&json!({ "grid": grid, "note": HAUSDORFF_NOTE, "estimates": records })) + "\n"
        }
        Format::Csv => {
            let mut out = String::from("window,estimate\n");
            for (r, h) in estimates {
                writeln!(out, "{r},{h}").unwrap();
            }
            out
        }
        Format::Text => {
            let mut out = format!("# {HAUSDORFF_NOTE} ({grid} grid points)\n");
            for (r, h) in estimates {
                writeln!(out, "R = {}: {}", num(*r), num(*h)).unwrap();
            }
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twelve_significant_digits() {
        assert_eq!(num(0.0), "0");
        assert_eq!(num(2.0), "2");
        assert_eq!(num(-1.0 / 3.0), "-0.333333333333");
        assert_eq!(num(2.0f64.sqrt() / 2.0), "0.707106781187");
        assert_eq!(num(123456.789), "123456.789");
        assert_eq!(num(1.5e-9), "1.5e-9");
        assert_eq!(num(6.02214076e23), "6.02214076e23");
    }

    #[test]
    fn complex_text() {
        assert_eq!(complex(Complex64::new(0.125, -1.5)), "0.125 - 1.5i");
        assert_eq!(complex(Complex64::new(0.0, 0.5)), "0.5i");
        assert_eq!(complex(Complex64::new(-2.0, 0.0)), "-2");
    }
}
