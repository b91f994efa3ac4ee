//! Serializable records for series, branches, and comparison reports.
//!
//! Field order is fixed by the struct definitions, so the same input always
//! yields the same bytes.

use serde::Serialize;

use crate::branches::{InfinityBranch, InfinityPoint};
use crate::compare::{BehaviorReport, Verdict};
use crate::puiseux::{format_exponent, PuiseuxSeries};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TermRecord {
    pub exponent: String,
    pub re: f64,
    pub im: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SeriesRecord {
    #[serde(rename = "N")]
    pub ramification: u32,
    pub watermark: String,
    /// Ascending exponents.
    pub terms: Vec<TermRecord>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PointRecord {
    pub re: f64,
    pub im: f64,
    pub mult: u32,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BranchRecord {
    pub point: PointRecord,
    #[serde(rename = "N")]
    pub ramification: u32,
    /// `None` when the truncation does not reach exponent 0.
    pub degree: Option<u32>,
    pub watermark: String,
    /// Descending exponents.
    pub terms: Vec<TermRecord>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ComplexRecord {
    pub re: f64,
    pub im: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct WitnessRecord {
    pub c_re: f64,
    pub c_im: f64,
    pub deviation: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PairingRecord {
    pub point: ComplexRecord,
    pub branch_a: usize,
    pub branch_b: usize,
    pub witness: WitnessRecord,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct UnmatchedRecord {
    pub a: Vec<usize>,
    pub b: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CurvePointsRecord {
    pub a: Vec<PointRecord>,
    pub b: Vec<PointRecord>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CurveBranchesRecord {
    pub a: Vec<BranchRecord>,
    pub b: Vec<BranchRecord>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReportRecord {
    pub verdict: &'static str,
    pub failure_stage: Option<&'static str>,
    pub lambda: u32,
    pub points: CurvePointsRecord,
    pub pairing: Vec<PairingRecord>,
    pub unmatched: UnmatchedRecord,
    pub branches: CurveBranchesRecord,
}

fn term(e: &crate::puiseux::Exponent, c: &num_complex::Complex64) -> TermRecord {
    TermRecord {
        exponent: format_exponent(e),
        re: c.re,
        im: c.im,
    }
}

pub fn series_record(s: &PuiseuxSeries) -> SeriesRecord {
    SeriesRecord {
        ramification: s.ramification_index(),
        watermark: format_exponent(&s.watermark()),
        terms: s.terms().iter().map(|(e, c)| term(e, c)).collect(),
    }
}

pub fn point_record(p: &InfinityPoint) -> PointRecord {
    PointRecord {
        re: p.m.re,
        im: p.m.im,
        mult: p.multiplicity,
    }
}

pub fn branch_record(b: &InfinityBranch) -> BranchRecord {
    BranchRecord {
        point: point_record(b.point()),
        ramification: b.ramification_index(),
        degree: b.degree().ok(),
        watermark: format_exponent(&b.watermark()),
        terms: b.r_terms().iter().map(|(e, c)| term(e, c)).collect(),
    }
}

pub fn report_record(r: &BehaviorReport) -> ReportRecord {
    ReportRecord {
        verdict: match r.verdict {
            Verdict::Same => "same",
            Verdict::Different => "different",
        },
        failure_stage: r.failure_stage.map(|s| s.as_str()),
        lambda: r.lambda,
        points: CurvePointsRecord {
            a: r.points_a.iter().map(point_record).collect(),
            b: r.points_b.iter().map(point_record).collect(),
        },
        pairing: r
            .pairing
            .iter()
            .map(|p| PairingRecord {
                point: ComplexRecord {
                    re: p.point.re,
                    im: p.point.im,
                },
                branch_a: p.branch_a,
                branch_b: p.branch_b,
                witness: WitnessRecord {
                    c_re: p.witness.conjugation_root.re,
                    c_im: p.witness.conjugation_root.im,
                    deviation: p.witness.max_coefficient_deviation,
                },
            })
            .collect(),
        unmatched: UnmatchedRecord {
            a: r.unmatched_a.clone(),
            b: r.unmatched_b.clone(),
        },
        branches: CurveBranchesRecord {
            a: r.branches_a.iter().map(branch_record).collect(),
            b: r.branches_b.iter().map(branch_record).collect(),
        },
    }
}

/// Pretty-printed JSON for any record above.
pub fn to_json<T: Serialize>(record: &T) -> String {
    serde_json::to_string_pretty(record).expect("records contain only finite numbers and strings")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_polynomial;
    use crate::branches::{infinity_branches, BranchOptions};
    use crate::compare::{same_asymptotic_behavior, CompareConfig};

    #[test]
    fn branch_record_shape() {
        let f = parse_polynomial("y - 3*x - 1").unwrap();
        let b = &infinity_branches(&f, &BranchOptions::default()).unwrap()[0];
        let v: serde_json::Value = serde_json::from_str(&to_json(&branch_record(b))).unwrap();
        assert_eq!(v["N"], 1);
        assert_eq!(v["degree"], 1);
        assert_eq!(v["watermark"], "-2");
        assert_eq!(v["point"]["re"], 3.0);
        assert_eq!(v["terms"][0]["exponent"], "1");
        assert_eq!(v["terms"][1]["exponent"], "0");
    }

    #[test]
    fn report_is_deterministic() {
        let f = parse_polynomial("x*y - 1").unwrap();
        let g = parse_polynomial("x*y - 2").unwrap();
        let cfg = CompareConfig::default();
        let a = to_json(&report_record(&same_asymptotic_behavior(&f, &g, &cfg).unwrap()));
        let b = to_json(&report_record(&same_asymptotic_behavior(&f, &g, &cfg).unwrap()));
        assert_eq!(a, b);
        let v: serde_json::Value = serde_json::from_str(&a).unwrap();
        assert_eq!(v["verdict"], "same");
        assert!(v["failure_stage"].is_null());
    }
}
