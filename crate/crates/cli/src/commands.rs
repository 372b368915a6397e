use std::io::Write;
use std::path::{Path, PathBuf};

use ordersize::binom::c3;
use ordersize::constructions::{
    base_sparse_graph, blowup, canonical_plus_with, construct_hn, construct_hn_iterated, g_construction,
    hn_iterated_edge_count, is_hn_order, is_m_sparse, m_sparse_random, seed_h, CanonicalParams, CrossingSet,
    SparseCertificate, SparseCheck,
};
use ordersize::diophantine::{search_range, SearchOptions};
use ordersize::forcing::{
    arrow_exhaustive, arrow_search, scan_forced_set, size_histogram, tetrahedral_filter, zero_density_certificate,
    ArrowVerdict, OrderSizePair, ENUM_MAX_N,
};
use ordersize::{Hypergraph3, SCAN_MAX_N};
use serde_json::json;

use crate::args::*;
use crate::{repro, resolve_workers, Outcome, RunReport, EXIT_ERROR, EXIT_OK, EXIT_UNKNOWN};

type CmdResult = Result<Outcome, Box<dyn std::error::Error + Send + Sync>>;

/// Proposal budget for `check-arrow --search` when `--budget` is absent.
pub const DEFAULT_SEARCH_BUDGET: u64 = 2_000_000;

/// Limit of `|E(H_n^it)| / C(n,3)`.
pub fn density_limit() -> f64 {
    4.0 / (3.0 + 7.0 * 3f64.sqrt())
}

pub(crate) fn report_path(cli: &Cli) -> Option<&Path> {
    match &cli.command {
        Command::Construct(_) => None,
        Command::CheckArrow(a) => a.out.as_deref(),
        Command::Scan(a) => a.out.as_deref(),
        Command::Histogram(a) => a.out.as_deref(),
        Command::CertifyZero(a) => a.out.as_deref(),
        Command::FilterTetra(a) => a.out.as_deref(),
        Command::SearchDio(a) => a.out.as_deref(),
        Command::Density(a) => a.out.as_deref().filter(|_| !a.csv),
        Command::Repro(a) => a.out.as_deref(),
    }
}

fn workers_flag(cli: &Cli) -> Option<usize> {
    match &cli.command {
        Command::CheckArrow(a) => a.workers,
        Command::Scan(a) => a.workers,
        Command::Histogram(a) => a.workers,
        Command::SearchDio(a) => a.workers,
        Command::Repro(a) => a.workers,
        _ => None,
    }
}

pub(crate) fn run(cli: &Cli, err: &mut dyn Write) -> CmdResult {
    let workers = resolve_workers(workers_flag(cli));
    let pool = rayon::ThreadPoolBuilder::new().num_threads(workers).build()?;
    let mut notes = Vec::new();
    let result = pool.install(|| {
        let note: &mut dyn Write = &mut notes;
        match &cli.command {
            Command::Construct(a) => construct(a, note),
            Command::CheckArrow(a) => check_arrow(a, note),
            Command::Scan(a) => scan(a, note),
            Command::Histogram(a) => histogram(a, note),
            Command::CertifyZero(a) => certify_zero(a, note),
            Command::FilterTetra(a) => filter(a, note),
            Command::SearchDio(a) => search_dio(a, workers, note),
            Command::Density(a) => density(a, note),
            Command::Repro(a) => run_repro(a, note),
        }
    });
    let _ = err.write_all(&notes);
    result
}

fn done(report: RunReport, status: i32) -> CmdResult {
    Ok(Outcome { status, report: Some(report), stdout: String::new() })
}

fn read_graph(path: &Path) -> Result<Hypergraph3, Box<dyn std::error::Error + Send + Sync>> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    Ok(Hypergraph3::from_text(&text)?)
}

fn need<T: Copy>(v: Option<T>, flag: &str, kind: Kind) -> Result<T, String> {
    v.ok_or_else(|| format!("construct {} requires --{flag}", kind_name(kind)))
}

fn kind_name(kind: Kind) -> &'static str {
    match kind {
        Kind::SeedH => "seed-h",
        Kind::Hn => "hn",
        Kind::Hnit => "hnit",
        Kind::Gsnk => "gsnk",
        Kind::CanonicalPlus => "canonical-plus",
        Kind::CanonicalMinus => "canonical-minus",
        Kind::Sparse => "sparse",
        Kind::Blowup => "blowup",
    }
}

fn construct(a: &ConstructArgs, err: &mut dyn Write) -> CmdResult {
    let kind = a.kind;
    let mut seed = None;
    let mut sparse_cert: Option<SparseCertificate> = None;
    let (graph, params) = match kind {
        Kind::SeedH => (seed_h(), json!({})),
        Kind::Hn => {
            let n = need(a.n, "n", kind)?;
            (construct_hn(n)?, json!({ "n": n }))
        }
        Kind::Hnit => {
            let n = need(a.n, "n", kind)?;
            (construct_hn_iterated(n, a.cutoff)?, json!({ "n": n, "cutoff": a.cutoff }))
        }
        Kind::Gsnk | Kind::CanonicalPlus | Kind::CanonicalMinus => {
            let s: CrossingSet = a.s.as_deref().ok_or("this construction requires --s")?.parse()?;
            let p = CanonicalParams::new(s, need(a.n, "n", kind)?, need(a.k, "k", kind)?)?;
            let mut params = json!({ "s": s, "n": p.n, "k": p.k });
            let g = if kind == Kind::Gsnk {
                g_construction(p)?
            } else {
                let m = need(a.m, "m", kind)?;
                let s0 = a.seed.value();
                seed = Some(s0);
                params["m"] = json!(m);
                let base = if kind == Kind::CanonicalPlus { p } else { p.complement() };
                let sparse = base_sparse_graph(base.n - base.k, m, s0)?;
                if let SparseCheck::Certified(c) = is_m_sparse(&sparse, m)? {
                    sparse_cert = Some(c);
                }
                let plus = canonical_plus_with(base, m, &sparse)?;
                if kind == Kind::CanonicalPlus {
                    plus
                } else {
                    plus.complement()
                }
            };
            (g, params)
        }
        Kind::Sparse => {
            let (n, m) = (need(a.n, "n", kind)?, need(a.m, "m", kind)?);
            let s0 = a.seed.value();
            seed = Some(s0);
            let (g, cert) = m_sparse_random(n, m, s0)?;
            sparse_cert = Some(cert);
            (g, json!({ "n": n, "m": m }))
        }
        Kind::Blowup => {
            let t = need(a.t, "t", kind)?;
            let h = match &a.graph {
                Some(path) => read_graph(path)?,
                None => seed_h(),
            };
            let source = a.graph.as_ref().map(|p| p.display().to_string());
            (blowup(&h, t)?, json!({ "t": t, "graph": source }))
        }
    };
    let _ = writeln!(err, "{}: n = {}, {} edges", kind_name(kind), graph.n(), graph.edge_count());

    let mut stdout = String::new();
    let text = graph.to_text();
    match &a.out {
        Some(path) => std::fs::write(path, &text).map_err(|e| format!("cannot write {}: {e}", path.display()))?,
        None => stdout.push_str(&text),
    }
    if a.certify {
        let max_six = if (6..=SCAN_MAX_N).contains(&graph.n()) {
            size_histogram(&graph, 6)?.max_size()
        } else {
            None
        };
        let sidecar = json!({
            "construction": kind_name(kind),
            "parameters": params,
            "seed": seed,
            "edge_count": graph.edge_count(),
            "sparse_certificate": sparse_cert,
            "max_six_set": max_six,
        });
        match &a.out {
            Some(path) => {
                let side = sidecar_path(path);
                std::fs::write(&side, serde_json::to_string_pretty(&sidecar)? + "\n")
                    .map_err(|e| format!("cannot write {}: {e}", side.display()))?;
            }
            None => stdout.push_str(&format!("# certificate: {sidecar}\n")),
        }
    }
    Ok(Outcome { status: EXIT_OK, report: None, stdout })
}

/// `<out>.json`, appended to the full file name.
pub fn sidecar_path(out: &Path) -> PathBuf {
    let mut s = out.as_os_str().to_owned();
    s.push(".json");
    PathBuf::from(s)
}

fn check_arrow(a: &CheckArrowArgs, err: &mut dyn Write) -> CmdResult {
    let pair = OrderSizePair::new(a.m, a.f)?;
    let exact = a.exact || (!a.search && a.n <= ENUM_MAX_N);
    let mode = if exact { "exact" } else { "search" };
    let mut report = RunReport::new(
        "check-arrow",
        json!({ "n": a.n, "e": a.e, "m": a.m, "f": a.f, "mode": mode, "budget": a.budget,
                "start": a.start.as_ref().map(|p| p.display().to_string()) }),
    );
    let verdict = if exact {
        arrow_exhaustive(a.n, a.e, pair, a.budget.unwrap_or(u64::MAX))?
    } else {
        let seed = a.seed.value();
        report.seed = Some(seed);
        let start = a.start.as_deref().map(read_graph).transpose()?;
        arrow_search(a.n, a.e, pair, a.budget.unwrap_or(DEFAULT_SEARCH_BUDGET), seed, start.as_ref())?
    };
    let (name, status) = match &verdict {
        ArrowVerdict::Forced { graphs_examined } => {
            report.count("graphs_enumerated", *graphs_examined);
            ("forced", EXIT_OK)
        }
        ArrowVerdict::NotForced { .. } => ("not_forced", EXIT_OK),
        ArrowVerdict::Unknown { budget_spent } => {
            report.count("budget_spent", *budget_spent);
            ("unknown", EXIT_UNKNOWN)
        }
    };
    let _ = writeln!(err, "({}, {}) -> ({}, {}): {name} [{mode}]", a.n, a.e, a.m, a.f);
    report.verdict = name.into();
    report.payload = json!({ "witness": verdict.counterexample().map(|g| g.to_text()) });
    done(report, status)
}

fn scan(a: &ScanArgs, err: &mut dyn Write) -> CmdResult {
    let pair = OrderSizePair::new(a.m, a.f)?;
    let mut report = RunReport::new("scan", json!({ "n": a.n, "m": a.m, "f": a.f }));
    let s = scan_forced_set(a.n, pair)?;
    let _ = writeln!(err, "forced edge counts: {:?}", s.forced);
    report.count("graphs_enumerated", s.classes_visited);
    report.payload = serde_json::to_value(&s)?;
    done(report, EXIT_OK)
}

fn histogram(a: &HistogramArgs, err: &mut dyn Write) -> CmdResult {
    let g = read_graph(&a.graph)?;
    let mut report = RunReport::new("histogram", json!({ "graph": a.graph.display().to_string(), "m": a.m }));
    let h = size_histogram(&g, a.m)?;
    let _ = writeln!(err, "max induced size over {}-sets: {:?}", a.m, h.max_size());
    report.count("subsets_scanned", h.total());
    report.payload = json!({ "n": g.n(), "edge_count": g.edge_count(), "counts": h.counts, "max_size": h.max_size() });
    done(report, EXIT_OK)
}

fn certify_zero(a: &CertifyZeroArgs, err: &mut dyn Write) -> CmdResult {
    let pair = OrderSizePair::new(a.m, a.f)?;
    let mut report = RunReport::new("certify-zero", json!({ "m": a.m, "f": a.f }));
    match zero_density_certificate(pair)? {
        Some(c) => {
            let _ = writeln!(err, "certified by S = {} with gap [{}, {}]", c.s, c.gap.0, c.gap.1);
            report.verdict = "certified".into();
            report.payload = json!({ "certificate": c, "verified": c.verify() });
        }
        None => {
            let _ = writeln!(err, "no certificate: f lies in F(S, m) for every S");
            report.verdict = "uncertified".into();
        }
    }
    done(report, EXIT_OK)
}

fn filter(a: &FilterArgs, err: &mut dyn Write) -> CmdResult {
    if a.m_lo > a.m_hi {
        return Err(format!("empty range [{}, {}]", a.m_lo, a.m_hi).into());
    }
    let mut report = RunReport::new("filter-tetra", json!({ "m_lo": a.m_lo, "m_hi": a.m_hi }));
    let mut hits = Vec::new();
    for m in a.m_lo..=a.m_hi {
        let values = tetrahedral_filter(m)?;
        if !values.is_empty() {
            hits.push(json!({ "m": m, "values": values }));
        }
    }
    let _ = writeln!(err, "{} of {} orders have surviving values", hits.len(), a.m_hi - a.m_lo + 1);
    report.count("orders_checked", (a.m_hi - a.m_lo + 1) as u64);
    report.payload = json!({ "survivors": hits });
    done(report, EXIT_OK)
}

fn search_dio(a: &SearchDioArgs, workers: usize, err: &mut dyn Write) -> CmdResult {
    let opts = SearchOptions { checkpoint: a.checkpoint.clone(), workers, chunk: a.chunk, stop_after: None };
    let mut report = RunReport::new("search-dio", json!({ "m_lo": a.m_lo, "m_hi": a.m_hi, "chunk": a.chunk }));
    let out = search_range(a.m_lo, a.m_hi, &opts)?;
    let _ = writeln!(err, "{} solution(s) in [{}, {}]", out.solutions.len(), a.m_lo, a.m_hi);
    report.count("chunks_done", out.chunks_done);
    report.count("orders_checked", a.m_hi - a.m_lo + 1);
    report.payload = json!({
        "range": [a.m_lo, a.m_hi],
        "solutions": out.solutions,
        "chunks_done": out.chunks_done,
        "complete": out.complete(),
    });
    done(report, EXIT_OK)
}

fn density(a: &DensityArgs, err: &mut dyn Write) -> CmdResult {
    if a.step == 0 || a.from > a.to {
        return Err("need --step >= 1 and --from <= --to".into());
    }
    let mut rows = Vec::new();
    for n in (a.from..=a.to).step_by(a.step).filter(|&n| is_hn_order(n)) {
        let edges = hn_iterated_edge_count(n, a.cutoff)?;
        let d = edges as f64 / c3(n as u128) as f64;
        rows.push((n, edges, d, 1.0 - 2.0 * d));
    }
    let _ = writeln!(err, "{} orders, limit {:.5}", rows.len(), density_limit());
    if a.csv {
        let mut csv = String::from("n,edges,density,open_fraction\n");
        for (n, e, d, o) in &rows {
            csv.push_str(&format!("{n},{e},{d:.8},{o:.8}\n"));
        }
        return Ok(match &a.out {
            Some(path) => {
                std::fs::write(path, csv).map_err(|e| format!("cannot write {}: {e}", path.display()))?;
                Outcome { status: EXIT_OK, report: None, stdout: String::new() }
            }
            None => Outcome { status: EXIT_OK, report: None, stdout: csv },
        });
    }
    let mut report = RunReport::new(
        "density",
        json!({ "from": a.from, "to": a.to, "step": a.step, "cutoff": a.cutoff }),
    );
    report.payload = json!({
        "limit": density_limit(),
        "rows": rows.iter().map(|(n, e, d, o)| json!({ "n": n, "edges": e, "density": d, "open_fraction": o }))
            .collect::<Vec<_>>(),
    });
    done(report, EXIT_OK)
}

fn run_repro(a: &ReproArgs, err: &mut dyn Write) -> CmdResult {
    if a.list {
        let mut report = RunReport::new("repro", json!({ "list": true }));
        report.payload = json!(repro::REGISTRY
            .iter()
            .map(|c| json!({ "name": c.name, "about": c.about }))
            .collect::<Vec<_>>());
        return done(report, EXIT_OK);
    }
    let name = a.name.as_deref().unwrap_or_default();
    let check = repro::find(name).ok_or_else(|| {
        format!("unknown check `{name}`; run `repro --list` for the registered names")
    })?;
    let mut report = RunReport::new("repro", json!({ "name": name }));
    let result = (check.run)();
    let _ = writeln!(err, "{name}: {}", if result.pass { "pass" } else { "FAIL" });
    report.verdict = if result.pass { "pass" } else { "fail" }.into();
    report.payload = result.detail;
    done(report, if result.pass { EXIT_OK } else { EXIT_ERROR })
}
