use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::path::Path;
use std::time::Instant;

use andrasfai_core::certificate::{certify_range, CertifyOptions};
use andrasfai_core::solver::DEFAULT_VERTEX_CAP;
use andrasfai_core::{
    alternative_bipartification, andrasfai_graph, cardinality, certify_edge_set,
    check_conjecture, enumerate_minimum_deletions, f, min_bipartization, read_dimacs,
    survey as run_survey, verify_minimal_bipartification, write_dimacs, BipartificationCertificate,
    Counterexample, Edge, EdgeSet, Error, Graph, SolverConfig, SolverResult, Verdict,
    VerificationReport,
};
use anyhow::Context as _;
use serde::Serialize;

use crate::{ConstructArgs, Format, GenArgs, SolveArgs, SurveyArgs, VerifyArgs, CAP_ENV};

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILED: u8 = 1;
pub const EXIT_REFUTED: u8 = 2;
pub const EXIT_SKIPPED: u8 = 3;
pub const EXIT_USAGE: u8 = 64;

pub enum Failure {
    Usage(String),
    Skipped(String),
    Other(anyhow::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidParameter { .. } => Failure::Usage(e.to_string()),
            Error::OverCap { .. } => Failure::Skipped(e.to_string()),
            other => Failure::Other(other.into()),
        }
    }
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Other(e)
    }
}

type CmdResult = Result<u8, Failure>;

fn emit(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text)
            .with_context(|| format!("writing {}", path.display()))
            .map_err(Failure::Other),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .context("writing to stdout")
                .map_err(Failure::Other)
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("documents serialize");
    s.push('\n');
    s
}

pub fn gen(args: &GenArgs) -> CmdResult {
    let g = andrasfai_graph(args.k)?;
    emit(args.out.as_deref(), &write_dimacs(&g))?;
    Ok(EXIT_OK)
}

pub fn construct(args: &ConstructArgs) -> CmdResult {
    let cert = BipartificationCertificate::build(args.k)?;
    let text = match args.format {
        Format::Json => to_json(&cert.to_document()),
        Format::Edgelist => cert.to_edgelist(),
    };
    emit(args.out.as_deref(), &text)?;
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct KReport<'a> {
    k: usize,
    passed: bool,
    #[serde(flatten)]
    report: &'a VerificationReport,
}

fn verify_alternative(k: usize, strong: bool) -> Result<VerificationReport, Failure> {
    let g = andrasfai_graph(k)?;
    let alt = alternative_bipartification(k)?;
    let c = cardinality(k)?;
    let mut r = VerificationReport::new();
    r.check(
        "size is k(k-1)/2",
        if alt.len() == c.count_alt {
            Ok(())
        } else {
            Err(Counterexample::Note(format!("size {}", alt.len())))
        },
    );
    r.check(
        "|F_k| / |alt| < 1/2 + (k+1)/((k-1)k)",
        if c.alt_ratio < c.alt_ratio_bound {
            Ok(())
        } else {
            Err(Counterexample::Note(format!("{} vs {}", c.alt_ratio, c.alt_ratio_bound)))
        },
    );
    r.absorb("minimality: ", verify_minimal_bipartification(&g, &alt, strong)?);
    Ok(r)
}

fn parse_dropped(k: usize, drops: &[String]) -> Result<EdgeSet, Failure> {
    let mut fset = f(k)?;
    for d in drops {
        let e = Edge::parse_key(d)
            .ok_or_else(|| Failure::Usage(format!("--drop expects \"u-v\", got {d:?}")))?;
        if !fset.remove(&e) {
            return Err(Failure::Usage(format!("{e} is not in F_{k}")));
        }
    }
    Ok(fset)
}

pub fn verify(args: &VerifyArgs) -> CmdResult {
    let ks: Vec<usize> = match (args.k, args.all) {
        (Some(k), _) => vec![k],
        (None, Some(all)) if all >= 2 => (2..=all).collect(),
        (None, Some(all)) => return Err(Failure::Usage(format!("--all {all}: need at least 2"))),
        (None, None) => unreachable!("clap requires --k or --all"),
    };
    let opts = CertifyOptions {
        strong: args.strong,
    };

    let reports: Vec<(usize, VerificationReport)> = if args.alternative {
        ks.iter()
            .map(|&k| verify_alternative(k, args.strong).map(|r| (k, r)))
            .collect::<Result<_, _>>()?
    } else if !args.drop.is_empty() {
        ks.iter()
            .map(|&k| {
                let fset = parse_dropped(k, &args.drop)?;
                Ok((k, certify_edge_set(k, &fset, opts)?))
            })
            .collect::<Result<_, Failure>>()?
    } else {
        certify_range(&ks, opts)?
    };

    let all_passed = reports.iter().all(|(_, r)| r.passed());
    let text = if args.json {
        let docs: Vec<KReport<'_>> = reports
            .iter()
            .map(|(k, r)| KReport {
                k: *k,
                passed: r.passed(),
                report: r,
            })
            .collect();
        to_json(&docs)
    } else {
        let mut s = String::new();
        for (k, r) in &reports {
            let status = if r.passed() { "PASS" } else { "FAIL" };
            writeln!(s, "k={k}: {status} ({} claims)", r.claims.len()).unwrap();
            for c in r.failures() {
                write!(s, "  FAIL {}", c.name).unwrap();
                if let Some(cx) = &c.counterexample {
                    write!(s, ": {cx}").unwrap();
                }
                s.push('\n');
            }
        }
        writeln!(
            s,
            "{}",
            if all_passed { "all claims pass" } else { "verification FAILED" }
        )
        .unwrap();
        s
    };
    emit(None, &text)?;
    Ok(if all_passed { EXIT_OK } else { EXIT_FAILED })
}

fn solver_config(cap: Option<usize>, budget: Option<u64>, parallel: bool) -> Result<SolverConfig, Failure> {
    let vertex_cap = match cap {
        Some(c) => c,
        None => match std::env::var(CAP_ENV) {
            Ok(v) => v
                .trim()
                .parse()
                .map_err(|_| Failure::Usage(format!("{CAP_ENV}={v:?} is not a vertex count")))?,
            Err(_) => DEFAULT_VERTEX_CAP,
        },
    };
    Ok(SolverConfig {
        vertex_cap,
        budget,
        parallel,
        ..SolverConfig::default()
    })
}

#[derive(Serialize)]
struct InstanceDoc {
    source: String,
    n: usize,
    edges: usize,
}

#[derive(Serialize)]
struct ConjectureDoc {
    k: usize,
    constructed_size: usize,
    verdict: Verdict,
}

#[derive(Serialize)]
struct EnumerationDoc {
    optimum: usize,
    count: usize,
    truncated: bool,
    has_disjoint_pair: bool,
    sets: Vec<EdgeSet>,
}

#[derive(Serialize)]
struct MetadataDoc {
    wall_time_ms: f64,
}

#[derive(Serialize)]
struct SolveDoc {
    instance: InstanceDoc,
    #[serde(flatten)]
    result: SolverResult,
    #[serde(skip_serializing_if = "Option::is_none")]
    conjecture: Option<ConjectureDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    enumeration: Option<EnumerationDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    metadata: Option<MetadataDoc>,
}

fn render_solve_text(doc: &SolveDoc) -> String {
    let mut s = String::new();
    let r = &doc.result;
    writeln!(
        s,
        "instance: {} (n={}, m={})",
        doc.instance.source, doc.instance.n, doc.instance.edges
    )
    .unwrap();
    writeln!(s, "optimum: {}", r.optimum).unwrap();
    writeln!(s, "cut value: {}", r.cut_value).unwrap();
    writeln!(s, "deletion: {}", r.witness_deletion).unwrap();
    let class = |set: &std::collections::BTreeSet<usize>| {
        set.iter().map(|v| format!("v{v}")).collect::<Vec<_>>().join(" ")
    };
    writeln!(s, "class A: {}", class(r.witness_partition.class_a())).unwrap();
    writeln!(s, "class B: {}", class(r.witness_partition.class_b())).unwrap();
    writeln!(s, "nodes explored: {}", r.nodes_explored).unwrap();
    if let Some(c) = &doc.conjecture {
        writeln!(s, "|F_{}| = {}", c.k, c.constructed_size).unwrap();
        writeln!(s, "verdict: {}", c.verdict.as_str()).unwrap();
    }
    if let Some(e) = &doc.enumeration {
        writeln!(
            s,
            "minimum deletion sets: {}{} (edge-disjoint pair: {})",
            e.count,
            if e.truncated { "+ (truncated)" } else { "" },
            if e.has_disjoint_pair { "yes" } else { "no" }
        )
        .unwrap();
        for set in &e.sets {
            writeln!(s, "  {set}").unwrap();
        }
    }
    if let Some(m) = &doc.metadata {
        writeln!(s, "wall time: {:.3} ms", m.wall_time_ms).unwrap();
    }
    s
}

pub fn solve(args: &SolveArgs) -> CmdResult {
    let config = solver_config(args.cap, args.budget, !args.sequential)?;
    let started = Instant::now();

    let (graph, source, conjecture, result): (Graph, String, _, SolverResult) = match (args.k, &args.dimacs) {
        (Some(k), _) => {
            let report = check_conjecture(k, &config)?;
            if report.verdict == Verdict::SkippedTooLarge {
                return Err(Failure::Skipped(format!(
                    "And_{k} has {} vertices, above the solver cap of {}",
                    3 * k - 1,
                    config.vertex_cap
                )));
            }
            let result = report.result.clone().expect("solved reports carry a result");
            let doc = ConjectureDoc {
                k,
                constructed_size: report.constructed_size,
                verdict: report.verdict,
            };
            (andrasfai_graph(k)?, format!("And_{k}"), Some(doc), result)
        }
        (None, Some(path)) => {
            let text = fs::read_to_string(path)
                .with_context(|| format!("reading {}", path.display()))?;
            let g = read_dimacs(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            let result = min_bipartization(&g, &config)?;
            (g, path.display().to_string(), None, result)
        }
        (None, None) => unreachable!("clap requires --k or --dimacs"),
    };

    let enumeration = match args.enumerate {
        Some(cap) => {
            let e = enumerate_minimum_deletions(&graph, cap, &config)?;
            Some(EnumerationDoc {
                optimum: e.optimum,
                count: e.sets.len(),
                truncated: e.truncated,
                has_disjoint_pair: e.has_disjoint_pair(),
                sets: e.sets,
            })
        }
        None => None,
    };

    let code = match conjecture.as_ref().map(|c| c.verdict) {
        Some(Verdict::Refuted) => EXIT_REFUTED,
        Some(Verdict::Inconsistent) => EXIT_FAILED,
        _ => EXIT_OK,
    };
    let doc = SolveDoc {
        instance: InstanceDoc {
            source,
            n: graph.n(),
            edges: graph.edge_count(),
        },
        result,
        conjecture,
        enumeration,
        metadata: args.with_metadata.then(|| MetadataDoc {
            wall_time_ms: started.elapsed().as_secs_f64() * 1e3,
        }),
    };
    let text = if args.json {
        to_json(&doc)
    } else {
        render_solve_text(&doc)
    };
    emit(None, &text)?;
    Ok(code)
}

pub fn survey(args: &SurveyArgs) -> CmdResult {
    let config = solver_config(args.cap, None, true)?;
    let rows = run_survey(args.kmin, args.kmax, args.solve_upto, &config)?;
    emit(args.out.as_deref(), &andrasfai_core::survey::to_csv(&rows))?;
    Ok(EXIT_OK)
}
