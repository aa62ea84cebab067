use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use anyhow::Context;
use serde_json::{json, Value};

use gicc_core::bounds::{
    self, BoundsError, BoundsOptions, BoundsReport, SCHEME_CLIQUE, SCHEME_CYCLE, SCHEME_GICC,
};
use gicc_core::codec::{self, format_messages, parse_messages};
use gicc_core::cover::{
    gicc_cover_exact, gicc_cover_heuristic, savings, CoverError, CoverPlan, Effort,
};
use gicc_core::generators;
use gicc_core::{parse_digraph, serialize_digraph, Digraph, GicError, GicStructure, VertexSet};

use crate::report::{CliError, CliResult, RunReport, Status};
use crate::{
    BoundsArgs, CompareArgs, CoverArgs, EncodeArgs, GenerateArgs, GenerateKind, LimitArgs,
    StructureArgs,
    SweepArgs, VerifyArgs,
};

/// Largest vertex count for `verify --exhaustive-t1`.
const EXHAUSTIVE_T1_LIMIT: usize = 20;
/// Largest order accepted by the exhaustive conjecture sweep.
const SWEEP_EXHAUSTIVE_LIMIT: usize = 5;

fn read_digraph(path: &Path) -> Result<Digraph, CliError> {
    let text = fs::read_to_string(path)
        .with_context(|| format!("cannot read {}", path.display()))?;
    parse_digraph(&text).map_err(|e| CliError::input(format!("{}: {e}", path.display())))
}

fn parse_inner(list: &str) -> Result<VertexSet, CliError> {
    list.parse::<VertexSet>()
        .map_err(|_| CliError::input(format!("bad inner vertex list {list:?}")))
}

/// Validates `(d, inner)`. Violations are returned as `Ok(Err(_))` so
/// callers can report them with exit status 1.
fn structure(d: &Digraph, inner: &VertexSet) -> Result<Result<GicStructure, GicError>, CliError> {
    match gicc_core::validate_gic(d, inner) {
        Ok(g) => Ok(Ok(g)),
        Err(e @ GicError::Violation(_)) => Ok(Err(e)),
        Err(e) => Err(CliError::input(e)),
    }
}

fn structure_inputs(a: &StructureArgs) -> Value {
    json!({ "graph": a.graph.display().to_string(), "inner": a.inner })
}

fn violation_report(mut report: RunReport, err: &GicError) -> RunReport {
    let v = err.violation().expect("violation error");
    report.status = Status::Fail;
    report.results = json!({ "valid": false, "violation": v });
    let mut text = format!("invalid: {}\n{}", v.kind, v.detail);
    for w in &v.witness {
        write!(text, "\nwitness {w}").unwrap();
    }
    if v.overflow {
        text.push_str("\npath count overflowed the enumeration cap");
    }
    report.text = text;
    report
}

fn load_structure(
    a: &StructureArgs,
    report: RunReport,
) -> Result<Result<(GicStructure, RunReport), RunReport>, CliError> {
    let d = read_digraph(&a.graph)?;
    let inner = parse_inner(&a.inner)?;
    Ok(match structure(&d, &inner)? {
        Ok(g) => Ok((g, report)),
        Err(e) => Err(violation_report(report, &e)),
    })
}

pub fn validate(a: &StructureArgs) -> CliResult {
    let report = RunReport::new("validate", structure_inputs(a));
    let (g, mut report) = match load_structure(a, report)? {
        Ok(ok) => ok,
        Err(failed) => return Ok(failed),
    };
    let trees: serde_json::Map<String, Value> = g
        .trees()
        .iter()
        .map(|(root, t)| (root.to_string(), json!(t)))
        .collect();
    report.results = json!({
        "valid": true,
        "n": g.n(),
        "k": g.k(),
        "code_length": codec::code_length(&g),
        "trees": trees,
    });
    let mut text = format!("valid {}-GIC (N={}, code length {})", g.k(), g.n(), codec::code_length(&g));
    for (root, t) in g.trees() {
        let arcs: Vec<String> = t.arcs().map(|(p, c)| format!("{p}->{c}")).collect();
        write!(text, "\ntree {root}: height {} arcs {}", t.height(), arcs.join(" ")).unwrap();
    }
    report.text = text;
    Ok(report)
}

pub fn encode(a: &EncodeArgs) -> CliResult {
    let mut inputs = structure_inputs(&a.structure);
    if let Some(m) = &a.messages {
        inputs["messages"] = json!(m.display().to_string());
    } else {
        inputs["random"] = json!({ "t": a.t, "seed": a.seed });
    }
    let report = RunReport::new("encode", inputs);
    let (g, mut report) = match load_structure(&a.structure, report)? {
        Ok(ok) => ok,
        Err(failed) => return Ok(failed),
    };
    let (m, generated) = match &a.messages {
        Some(path) => {
            let text = fs::read_to_string(path)
                .with_context(|| format!("cannot read {}", path.display()))?;
            let m = parse_messages(&text)
                .map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
            (m, false)
        }
        None => {
            let t = a.t.expect("clap requires --t");
            if t == 0 {
                return Err(CliError::input("--t must be at least 1"));
            }
            (codec::MessageVector::random(g.n(), t, a.seed.expect("clap requires --seed")), true)
        }
    };
    let code = codec::encode(&g, &m).map_err(CliError::input)?;
    report.results = json!({
        "t": code.t,
        "length": code.rate(),
        "symbols": code.symbols,
    });
    let mut text = String::new();
    if generated {
        report.results["messages"] = json!(format_messages(&m));
        write!(text, "messages:\n{}\ncode:\n", format_messages(&m)).unwrap();
    }
    text.push_str(&code.to_string());
    report.text = text;
    Ok(report)
}

pub fn verify(a: &VerifyArgs) -> CliResult {
    let mut inputs = structure_inputs(&a.structure);
    inputs["mode"] = if a.exhaustive_t1 {
        json!("exhaustive-t1")
    } else {
        json!({ "trials": a.trials, "t": a.t, "seed": a.seed })
    };
    let report = RunReport::new("verify", inputs);
    let (g, mut report) = match load_structure(&a.structure, report)? {
        Ok(ok) => ok,
        Err(failed) => return Ok(failed),
    };
    let n = g.n();
    let symbolic = codec::symbolic_decode_check(&g);
    let (vectors, passed) = if a.exhaustive_t1 {
        if n > EXHAUSTIVE_T1_LIMIT {
            return Err(CliError::size_gate(format!(
                "exhaustive t=1 verification supports at most {EXHAUSTIVE_T1_LIMIT} vertices, got {n}"
            )));
        }
        let total = 1u64 << n;
        let ok = (0..total)
            .filter(|&idx| codec::round_trip(&g, &codec::MessageVector::from_index_t1(n, idx)))
            .count() as u64;
        (total, ok)
    } else {
        let trials = a.trials.unwrap_or(0);
        let (t, seed) = match (a.t, a.seed) {
            (Some(t), Some(seed)) if t > 0 => (t, seed),
            (Some(0), _) => return Err(CliError::input("--t must be at least 1")),
            _ if trials == 0 => (1, 0),
            _ => unreachable!("clap requires --t and --seed with --trials"),
        };
        let ok = (0..trials as u64)
            .filter(|&k| codec::round_trip(&g, &codec::MessageVector::random(n, t, seed.wrapping_add(k))))
            .count() as u64;
        (trials as u64, ok)
    };
    let pass = symbolic && passed == vectors;
    report.status = if pass { Status::Pass } else { Status::Fail };
    report.results = json!({
        "symbolic": symbolic,
        "vectors": vectors,
        "passed": passed,
        "pass": pass,
    });
    report.text = format!(
        "symbolic decode: {}\nround trips: {passed}/{vectors}\n{}",
        if symbolic { "pass" } else { "fail" },
        if pass { "pass" } else { "fail" }
    );
    Ok(report)
}

fn plan_json(plan: &CoverPlan) -> Value {
    let parts: Vec<Value> = plan
        .parts()
        .iter()
        .map(|p| {
            json!({
                "vertices": p.vertices(),
                "inner": p.inner(),
                "k": p.k(),
                "length": p.length(),
            })
        })
        .collect();
    json!({
        "n": plan.vertex_count(),
        "length": plan.length(),
        "savings": savings(plan),
        "parts": parts,
        "uncoded": plan.uncoded(),
    })
}

pub fn cover(a: &CoverArgs) -> CliResult {
    let d = read_digraph(&a.graph)?;
    let (effort, seed) = match a.budget {
        Some(b) => (Effort::Budget(b), a.seed.expect("clap requires --seed")),
        None => (Effort::Exhaustive, 0),
    };
    let mut report = RunReport::new(
        "cover",
        json!({
            "graph": a.graph.display().to_string(),
            "effort": effort,
            "seed": a.seed,
            "exact_limit": a.exact_limit,
        }),
    );
    let plan = match effort {
        Effort::Exhaustive => gicc_cover_exact(&d, a.exact_limit).map_err(|e| match e {
            CoverError::TooLarge { .. } => CliError::size_gate(e),
        })?,
        Effort::Budget(b) => gicc_cover_heuristic(&d, b, seed),
    };
    if let Err(msg) = plan.check(&d) {
        report.status = Status::Fail;
        report.text = format!("internal cover check failed: {msg}");
        report.results = json!({ "error": msg });
        return Ok(report);
    }
    report.results = plan_json(&plan);
    report.text = plan.to_string();
    Ok(report)
}

fn bounds_error(e: BoundsError) -> CliError {
    CliError::size_gate(e)
}

fn report_for(
    graph: &Path,
    inner: Option<&str>,
    seed: u64,
    minrank: bool,
    limits: &LimitArgs,
) -> Result<Result<(Digraph, BoundsReport), RunReport>, CliError> {
    let d = read_digraph(graph)?;
    let structure = match inner {
        Some(list) => match self::structure(&d, &parse_inner(list)?)? {
            Ok(g) => Some(g),
            Err(e) => {
                let r = RunReport::new("bounds", json!({ "graph": graph.display().to_string(), "inner": list }));
                return Ok(Err(violation_report(r, &e)));
            }
        },
        None => None,
    };
    let opts = BoundsOptions {
        minrank,
        effort: Effort::Exhaustive,
        seed,
        structure,
        cover_limit: limits.exact_limit,
        baseline_limit: limits.baseline_limit,
    };
    let r = bounds::bounds_report(&d, &opts).map_err(bounds_error)?;
    Ok(Ok((d, r)))
}

fn bounds_json(r: &BoundsReport) -> Value {
    let mut v = json!(r);
    v["beta_bracket"] = json!({
        "lower": r.mais,
        "upper": r.scheme_lengths.values().min().map(|l| l.to_string()),
    });
    v
}

pub fn bounds(a: &BoundsArgs) -> CliResult {
    let inputs = json!({
        "graph": a.graph.display().to_string(),
        "inner": a.inner,
        "minrank": a.minrank,
        "seed": a.seed,
        "exact_limit": a.limits.exact_limit,
        "baseline_limit": a.limits.baseline_limit,
    });
    let (_, r) = match report_for(&a.graph, a.inner.as_deref(), a.seed, a.minrank, &a.limits)? {
        Ok(ok) => ok,
        Err(mut failed) => {
            failed.command = "bounds";
            return Ok(failed);
        }
    };
    let mut report = RunReport::new("bounds", inputs);
    report.status = if r.sandwich_ok { Status::Pass } else { Status::Fail };
    report.results = bounds_json(&r);
    let best = r.scheme_lengths.values().min().expect("schemes");
    report.text = format!("{r}\nbroadcast rate lies in [{}, {best}]", r.mais);
    Ok(report)
}

pub fn compare(a: &CompareArgs) -> CliResult {
    let inputs = json!({
        "graph": a.graph.display().to_string(),
        "inner": a.inner,
        "seed": a.seed,
        "exact_limit": a.limits.exact_limit,
        "baseline_limit": a.limits.baseline_limit,
    });
    let (_, r) = match report_for(&a.graph, a.inner.as_deref(), a.seed, false, &a.limits)? {
        Ok(ok) => ok,
        Err(mut failed) => {
            failed.command = "compare";
            return Ok(failed);
        }
    };
    let mut report = RunReport::new("compare", inputs);
    report.status = if r.sandwich_ok { Status::Pass } else { Status::Fail };
    let row = |name: &str| r.scheme_lengths[name].to_string();
    report.results = json!({
        "gicc": row(SCHEME_GICC),
        "cycle_cover": row(SCHEME_CYCLE),
        "clique_cover": row(SCHEME_CLIQUE),
        "mais": r.mais,
        "sandwich_ok": r.sandwich_ok,
        "optimality": r.optimality,
    });
    let mut text = format!("{:<14} {:>6}\n", "scheme", "length");
    for (label, value) in [
        ("gicc", row(SCHEME_GICC)),
        ("cycle-cover", row(SCHEME_CYCLE)),
        ("clique-cover", row(SCHEME_CLIQUE)),
        ("mais", r.mais.to_string()),
    ] {
        writeln!(text, "{label:<14} {value:>6}").unwrap();
    }
    write!(text, "verdict: {}", r.optimality).unwrap();
    report.text = text;
    Ok(report)
}

fn parse_list(list: &str, what: &str) -> Result<Vec<usize>, CliError> {
    list.split(',')
        .map(|s| s.trim().parse::<usize>())
        .collect::<Result<_, _>>()
        .map_err(|_| CliError::input(format!("bad {what} list {list:?}")))
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, format!("{text}\n"))
        .with_context(|| format!("cannot write {}", path.display()))
        .map_err(CliError::from)
}

pub fn generate(a: &GenerateArgs) -> CliResult {
    let mut extra = json!({});
    let (kind, d, inner): (&str, Digraph, Option<VertexSet>) = match &a.kind {
        GenerateKind::FamilyVb { k } => {
            let (d, inner) = generators::gen_family_vb(*k).map_err(CliError::input)?;
            ("family-vb", d, Some(inner))
        }
        GenerateKind::Fig4a => {
            let (d, inner) = generators::gen_fig4a_equivalent();
            ("fig4a", d, Some(inner))
        }
        GenerateKind::Clique { n } => ("clique", generators::gen_clique(*n).map_err(CliError::input)?, None),
        GenerateKind::Cycle { n } => ("cycle", generators::gen_cycle(*n).map_err(CliError::input)?, None),
        GenerateKind::Random { n, p, seed } => {
            ("random", generators::gen_random(*n, *p, *seed).map_err(CliError::input)?, None)
        }
        GenerateKind::Icc {
            k,
            paths,
            connectors,
            seed,
            description_out,
        } => {
            let paths = match paths {
                Some(list) => parse_list(list, "path length")?,
                None => vec![1; *k],
            };
            let connectors = match connectors {
                Some(list) => parse_list(list, "connector length")?,
                None => vec![0; k * k.saturating_sub(1)],
            };
            let desc = generators::gen_icc(*k, &paths, &connectors, *seed).map_err(CliError::input)?;
            let (d, inner) = desc.assemble().map_err(CliError::input)?;
            if let Some(path) = description_out {
                write_file(path, &desc.to_string())?;
            }
            extra = json!({ "description": desc, "description_text": desc.to_string() });
            ("icc", d, Some(inner))
        }
    };
    let arc_list = serialize_digraph(&d);
    let mut report = RunReport::new(
        "generate",
        json!({ "kind": kind, "out": a.out.as_ref().map(|p| p.display().to_string()) }),
    );
    report.results = json!({
        "n": d.vertex_count(),
        "arcs": d.arc_count(),
        "inner": inner,
        "digraph": arc_list,
    });
    if let Value::Object(more) = extra {
        for (key, value) in more {
            report.results[key] = value;
        }
    }
    let mut text = String::new();
    if let Some(path) = &a.out {
        write_file(path, &arc_list)?;
        if let Some(inner) = &inner {
            write!(text, "inner={inner}").unwrap();
        }
    } else {
        if let Some(inner) = &inner {
            writeln!(text, "# inner={inner}").unwrap();
        }
        text.push_str(&arc_list);
    }
    report.text = text;
    Ok(report)
}

pub fn conjecture_sweep(a: &SweepArgs) -> CliResult {
    if a.exhaustive_max_n > SWEEP_EXHAUSTIVE_LIMIT {
        return Err(CliError::size_gate(format!(
            "exhaustive sweep supports orders up to {SWEEP_EXHAUSTIVE_LIMIT}, got {}",
            a.exhaustive_max_n
        )));
    }
    if a.max_n > bounds::MAIS_LIMIT {
        return Err(CliError::size_gate(format!(
            "sampled orders are limited to {}, got {}",
            bounds::MAIS_LIMIT,
            a.max_n
        )));
    }
    if a.samples > 0 && a.max_n > 12 {
        return Err(CliError::size_gate("inner-set enumeration is limited to 12 vertices"));
    }
    let mut digraphs: Vec<Digraph> = (1..=a.exhaustive_max_n)
        .flat_map(generators::gen_all_digraphs)
        .collect();
    let mut seed = a.seed;
    for n in a.exhaustive_max_n + 1..=a.max_n {
        for _ in 0..a.samples {
            digraphs.push(generators::gen_random(n, a.p, seed).map_err(CliError::input)?);
            seed = seed.wrapping_add(1);
        }
    }
    let sweep = bounds::conjecture_sweep(digraphs, a.max_n.max(a.exhaustive_max_n));
    let mut report = RunReport::new(
        "conjecture-sweep",
        json!({
            "exhaustive_max_n": a.exhaustive_max_n,
            "samples": a.samples,
            "max_n": a.max_n,
            "p": a.p,
            "seed": a.seed,
        }),
    );
    report.results = json!(sweep);
    let mut text = format!(
        "digraphs: {}\nvalidated structures: {}\nstructures with mais < code length: {}",
        sweep.digraphs,
        sweep.structures,
        sweep.findings.len()
    );
    for f in &sweep.findings {
        write!(
            text,
            "\n  inner={} mais={} length={}\n{}",
            f.inner, f.mais, f.code_length, f.digraph
        )
        .unwrap();
    }
    report.text = text;
    Ok(report)
}
