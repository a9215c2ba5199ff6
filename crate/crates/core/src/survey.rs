//! Per-k survey table written as CSV with the fixed header
//! `k,n,edges,sizeF,sizeAlt,erdosBound,strict,solverOptimum,verdict`.

use serde::Serialize;

use crate::andrasfai;
use crate::bipartify::{cardinality, Rational};
use crate::error::{invalid, Result};
use crate::solver::{check_conjecture, SolverConfig, Verdict};

pub const CSV_HEADER: [&str; 9] = [
    "k",
    "n",
    "edges",
    "sizeF",
    "sizeAlt",
    "erdosBound",
    "strict",
    "solverOptimum",
    "verdict",
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurveyRow {
    pub k: usize,
    pub n: usize,
    pub edge_count: usize,
    pub size_f: usize,
    pub size_alt: usize,
    pub erdos_bound: Rational,
    pub strict: bool,
    pub solver_optimum: Option<usize>,
    pub verdict: Option<Verdict>,
}

#[derive(Serialize)]
struct CsvRecord<'a> {
    k: usize,
    n: usize,
    edges: usize,
    #[serde(rename = "sizeF")]
    size_f: usize,
    #[serde(rename = "sizeAlt")]
    size_alt: usize,
    #[serde(rename = "erdosBound")]
    erdos_bound: String,
    strict: bool,
    #[serde(rename = "solverOptimum")]
    solver_optimum: Option<usize>,
    verdict: Option<&'a str>,
}

/// Rounds a non-negative rational half-up to `places` decimals.
pub fn render_decimal(x: &Rational, places: u32) -> String {
    let (p, q) = (*x.numer(), *x.denom());
    assert!(p >= 0 && q > 0, "only non-negative values are rendered");
    let scale = 10i64.pow(places);
    let scaled = (2 * p * scale + q) / (2 * q);
    if places == 0 {
        return scaled.to_string();
    }
    format!(
        "{}.{:0width$}",
        scaled / scale,
        scaled % scale,
        width = places as usize
    )
}

/// One row per k in `kmin..=kmax`; solver columns for `k <= solve_upto`.
pub fn survey(
    kmin: usize,
    kmax: usize,
    solve_upto: Option<usize>,
    config: &SolverConfig,
) -> Result<Vec<SurveyRow>> {
    if kmin < 2 {
        return Err(invalid("kmin", kmin as i64, "must be at least 2"));
    }
    if kmax < kmin {
        return Err(invalid("kmax", kmax as i64, format!("must be at least kmin={kmin}")));
    }
    (kmin..=kmax)
        .map(|k| {
            let c = cardinality(k)?;
            let (solver_optimum, verdict) = match solve_upto {
                Some(s) if k <= s => {
                    let r = check_conjecture(k, config)?;
                    (r.solved_optimum, Some(r.verdict))
                }
                _ => (None, None),
            };
            Ok(SurveyRow {
                k,
                n: c.n,
                edge_count: andrasfai::edge_count(k),
                size_f: c.count_f,
                size_alt: c.count_alt,
                erdos_bound: c.erdos_bound,
                strict: c.strict,
                solver_optimum,
                verdict,
            })
        })
        .collect()
}

pub fn to_csv(rows: &[SurveyRow]) -> String {
    let mut w = csv::WriterBuilder::new()
        .has_headers(false)
        .from_writer(Vec::new());
    w.write_record(CSV_HEADER).expect("in-memory write");
    for r in rows {
        w.serialize(CsvRecord {
            k: r.k,
            n: r.n,
            edges: r.edge_count,
            size_f: r.size_f,
            size_alt: r.size_alt,
            erdos_bound: render_decimal(&r.erdos_bound, 6),
            strict: r.strict,
            solver_optimum: r.solver_optimum,
            verdict: r.verdict.as_ref().map(Verdict::as_str),
        })
        .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("CSV is UTF-8")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decimals() {
        assert_eq!(render_decimal(&Rational::new(196, 25), 6), "7.840000");
        assert_eq!(render_decimal(&Rational::new(1, 1), 6), "1.000000");
        assert_eq!(render_decimal(&Rational::new(2, 3), 6), "0.666667");
        assert_eq!(render_decimal(&Rational::new(1, 3), 2), "0.33");
        assert_eq!(render_decimal(&Rational::new(5, 2), 0), "3");
    }

    #[test]
    fn range_errors() {
        let cfg = SolverConfig::default();
        assert!(survey(3, 2, None, &cfg).is_err());
        assert!(survey(1, 2, None, &cfg).is_err());
    }

    #[test]
    fn single_row_at_k2() {
        let rows = survey(2, 2, None, &SolverConfig::default()).unwrap();
        assert_eq!(
            to_csv(&rows),
            "k,n,edges,sizeF,sizeAlt,erdosBound,strict,solverOptimum,verdict\n\
             2,5,5,1,1,1.000000,false,,\n"
        );
    }

    #[test]
    fn rows_with_solver_columns() {
        let rows = survey(2, 10, Some(5), &SolverConfig::default()).unwrap();
        assert_eq!(rows.len(), 9);
        let r5 = &rows[3];
        assert_eq!((r5.k, r5.size_f), (5, 6));
        assert_eq!(r5.erdos_bound, Rational::new(196, 25));
        assert!(r5.strict);
        assert_eq!(r5.solver_optimum, Some(6));
        assert!(rows[4].solver_optimum.is_none());
        let csv = to_csv(&rows);
        assert!(csv.contains("\n5,14,35,6,10,7.840000,true,6,confirmed\n"), "{csv}");
        assert!(csv.contains("\n6,17,51,9,15,11.560000,true,,\n"), "{csv}");
    }
}
