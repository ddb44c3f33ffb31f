use std::fs::{self, File};
use std::io::{BufReader, Read, Write};
use std::path::{Path, PathBuf};

use anyhow::{anyhow, Context as _};
use serde_json::{json, Value};
use setgame_core::apg::{bisim_quotient, is_sigma_node, pattern_report, sigma_witness, solve};
use setgame_core::census::{
    census_formula, census_of_level, dyadic_string, prob_table, write_csv, CensusTable, RatioTable,
};
use setgame_core::game::{self, classify_code, classify_level, LevelTable};
use setgame_core::hf::{parse_braces, MAX_ENUMERATE_RANK};
use setgame_core::model::{
    build, check_end_extension, check_extensionality, check_reflection, check_seed,
    check_thickness, classify_model, preset, Model,
};
use setgame_core::verify::{check_ids, run_suite, Status};
use setgame_core::{Apg, Classification, Error, SetCode};

use crate::{CensusMethod, Format, GraphFile, ModelArgs, SetInput};

pub enum Failure {
    /// Bad invocation; exit code 2.
    Usage(String),
    /// Domain error; exit code 1.
    Domain(anyhow::Error),
    /// The command ran and printed its report, but something it checked
    /// failed; exit code 1.
    Checks(String),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Domain(e)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e.into())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Domain(e.into())
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Domain(e.into())
    }
}

type Outcome = Result<(), Failure>;

pub struct Context {
    pub format: Format,
    pub cache: Option<PathBuf>,
}

fn hint(e: &Error) -> Option<&'static str> {
    Some(match e {
        Error::EnumerationInfeasible { .. } => {
            "enumeration stops at rank 5; use `census --method formula` for rank 6"
        }
        Error::LevelNotRepresentable { .. } => "level sizes are representable up to rank 6",
        Error::CapExceeded { .. } => "lower --stages or raise --cap",
        Error::Parse(_) => "write sets in braces, e.g. {{},{{}}}",
        Error::Graph(_) => "graph lines look like `node x: y z` and `point x`",
        Error::SeedRejected(_) => "a seed needs exactly one empty node and distinct member lists",
        Error::WitnessBound { .. } => "smaller indices are supported",
        _ => return None,
    })
}

/// The error chain on a single line, with a hint when one applies.
pub fn one_line(e: &anyhow::Error) -> String {
    let mut msg = format!("{e:#}").replace('\n', " ");
    if let Some(h) = e
        .chain()
        .find_map(|c| c.downcast_ref::<Error>())
        .and_then(hint)
    {
        msg.push_str(&format!(" (hint: {h})"));
    }
    msg
}

fn no_csv(what: &str) -> Failure {
    Failure::Usage(format!(
        "--format csv is not available for {what}; use text or json"
    ))
}

fn write_json(out: &mut dyn Write, value: &Value) -> Outcome {
    serde_json::to_writer_pretty(&mut *out, value).map_err(|e| Failure::Domain(e.into()))?;
    writeln!(out)?;
    Ok(())
}

fn read_input(path: &Path) -> anyhow::Result<String> {
    let mut text = String::new();
    if path == Path::new("-") {
        std::io::stdin()
            .read_to_string(&mut text)
            .context("reading stdin")?;
    } else {
        text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    }
    Ok(text)
}

pub fn read_graph(path: &Path) -> anyhow::Result<Apg> {
    let text = read_input(path)?;
    Apg::parse(&text)
        .map_err(Error::from)
        .with_context(|| format!("parsing graph {}", path.display()))
}

/// Classified level `m`, through the cache file when one is configured.
fn level_table(ctx: &Context, m: usize) -> anyhow::Result<LevelTable> {
    let Some(path) = ctx.cache.as_ref().filter(|_| m <= MAX_ENUMERATE_RANK) else {
        return Ok(classify_level(m)?);
    };
    if path.exists() {
        let file = File::open(path).with_context(|| format!("opening cache {}", path.display()))?;
        match LevelTable::read_from(BufReader::new(file)) {
            Some(t) if t.m >= m => return Ok(t.restrict(m).expect("rank checked")),
            Some(_) => {}
            None => {
                return Err(anyhow!(
                    "cache file {} is not a level table; remove it or choose another --cache path",
                    path.display()
                ))
            }
        }
    }
    let table = classify_level(m)?;
    let file = File::create(path).with_context(|| format!("writing cache {}", path.display()))?;
    let mut w = std::io::BufWriter::new(file);
    table.write_to(&mut w)?;
    w.flush()?;
    Ok(table)
}

pub fn enumerate(ctx: &Context, rank: usize, out: &mut dyn Write) -> Outcome {
    let table = level_table(ctx, rank)?;
    let rows = table
        .classes
        .iter()
        .enumerate()
        .map(|(code, c)| (code, SetCode::from(code as u64).to_braces(), *c));
    match ctx.format {
        Format::Text => {
            for (code, set, c) in rows {
                writeln!(out, "{code}\t{set}\t{c}")?;
            }
        }
        Format::Json => {
            let sets: Vec<Value> = rows
                .map(|(code, set, c)| json!({"code": code, "set": set, "winner": c.winner, "w": c.w}))
                .collect();
            write_json(out, &json!({"m": rank, "sets": sets}))?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["code", "set", "winner", "w"])?;
            for (code, set, c) in rows {
                w.write_record([code.to_string(), set, c.winner.to_string(), c.w.to_string()])?;
            }
            w.flush()?;
        }
    }
    Ok(())
}

fn classify_input(input: &SetInput) -> anyhow::Result<(String, Option<SetCode>, Classification)> {
    if let Some(text) = &input.set {
        let x = parse_braces(text).map_err(Error::from)?;
        let c = game::classify(&x);
        return Ok((x.to_braces(), x.code().ok(), c));
    }
    let raw = input
        .code
        .as_deref()
        .expect("clap requires --set or --code");
    let code: SetCode = raw.parse().map_err(|e| {
        anyhow!("invalid set code `{raw}`: {e}; codes are non-negative decimal integers")
    })?;
    let c = classify_code(&code);
    Ok((code.to_braces(), Some(code), c))
}

pub fn classify(ctx: &Context, input: &SetInput, out: &mut dyn Write) -> Outcome {
    let (set, code, c) = classify_input(input)?;
    match ctx.format {
        Format::Text => writeln!(out, "{c}")?,
        Format::Json => write_json(
            out,
            &json!({
                "set": set,
                "code": code.map(|c| c.to_string()),
                "winner": c.winner,
                "w": c.w,
            }),
        )?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["set", "winner", "w"])?;
            w.write_record([set, c.winner.to_string(), c.w.to_string()])?;
            w.flush()?;
        }
    }
    Ok(())
}

fn census_text(out: &mut dyn Write, t: &CensusTable) -> Outcome {
    let method = match t.method {
        setgame_core::census::Method::Brute => "brute",
        setgame_core::census::Method::Formula => "formula",
    };
    writeln!(out, "m={} method={} total={}", t.m, method, t.total())?;
    writeln!(out, "nu\tcount")?;
    for (nu, c) in t.counts.iter().enumerate() {
        writeln!(out, "{nu}\t{c}")?;
    }
    Ok(())
}

pub fn census(ctx: &Context, rank: usize, method: CensusMethod, out: &mut dyn Write) -> Outcome {
    if rank == 0 {
        return Err(Error::RankOutOfRange {
            m: 0,
            min: 1,
            max: 6,
        }
        .into());
    }
    let mut tables = Vec::new();
    if method != CensusMethod::Formula {
        tables.push(census_of_level(&level_table(ctx, rank)?));
    }
    if method != CensusMethod::Brute {
        tables.push(census_formula(rank)?);
    }
    let agree = tables.windows(2).all(|w| w[0].same_counts(&w[1]));
    match ctx.format {
        Format::Text => {
            for (i, t) in tables.iter().enumerate() {
                if i > 0 {
                    writeln!(out)?;
                }
                census_text(out, t)?;
            }
            if tables.len() == 2 {
                writeln!(out, "\nmatch: {}", if agree { "yes" } else { "no" })?;
            }
        }
        Format::Json => {
            let value = if tables.len() == 2 {
                json!({"m": rank, "tables": tables.iter().map(CensusTable::to_json).collect::<Vec<_>>(), "match": agree})
            } else {
                tables[0].to_json()
            };
            write_json(out, &value)?;
        }
        Format::Csv => {
            let shown = if agree { &tables[..1] } else { &tables[..] };
            write_csv(shown, out)?;
        }
    }
    if agree {
        Ok(())
    } else {
        Err(Failure::Checks(format!(
            "census tables differ at rank {rank}"
        )))
    }
}

pub fn prob(ctx: &Context, max_rank: usize, out: &mut dyn Write) -> Outcome {
    if max_rank == 0 {
        return Err(Error::RankOutOfRange {
            m: 0,
            min: 1,
            max: 6,
        }
        .into());
    }
    let tables: Vec<RatioTable> = (1..=max_rank).map(prob_table).collect::<Result<_, _>>()?;
    match ctx.format {
        Format::Text => {
            for t in &tables {
                writeln!(out, "m={}", t.m)?;
                writeln!(out, "nu\tratio\tdistance")?;
                for (nu, (r, d)) in t.ratios.iter().zip(&t.distances).enumerate() {
                    writeln!(out, "{nu}\t{}\t{}", dyadic_string(r), dyadic_string(d))?;
                }
            }
        }
        Format::Json => {
            let value: Vec<Value> = tables.iter().map(RatioTable::to_json).collect();
            write_json(out, &json!({"max_rank": max_rank, "tables": value}))?;
        }
        Format::Csv => {
            let counts: Vec<CensusTable> = (1..=max_rank)
                .map(census_formula)
                .collect::<Result<_, _>>()?;
            write_csv(&counts, out)?;
        }
    }
    Ok(())
}

pub fn graph_solve(ctx: &Context, file: &GraphFile, out: &mut dyn Write) -> Outcome {
    let g = read_graph(&file.file)?;
    let outcomes = solve(&g);
    match ctx.format {
        Format::Text => {
            for v in g.nodes() {
                writeln!(out, "{}: {}", g.name(v), outcomes[v])?;
            }
            if let Some(p) = g.point() {
                writeln!(out, "point {}: {}", g.name(p), outcomes[p])?;
            }
        }
        Format::Json => {
            let nodes: Vec<Value> = g
                .nodes()
                .map(|v| json!({"id": g.name(v), "kind": outcomes[v].kind(), "w": outcomes[v].w()}))
                .collect();
            let point = g.point().map(
                |p| json!({"id": g.name(p), "kind": outcomes[p].kind(), "w": outcomes[p].w()}),
            );
            write_json(out, &json!({"nodes": nodes, "point": point}))?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["id", "kind", "w"])?;
            for v in g.nodes() {
                let o = outcomes[v];
                let kind = serde_json::to_value(o.kind()).map_err(anyhow::Error::from)?;
                let kind = kind.as_str().unwrap_or_default().to_string();
                w.write_record([
                    g.name(v).to_string(),
                    kind,
                    o.w().map(|x| x.to_string()).unwrap_or_default(),
                ])?;
            }
            w.flush()?;
        }
    }
    Ok(())
}

pub fn graph_quotient(ctx: &Context, file: &GraphFile, out: &mut dyn Write) -> Outcome {
    let g = read_graph(&file.file)?;
    let q = bisim_quotient(&g);
    match ctx.format {
        Format::Text => {
            write!(out, "{}", q.graph.to_text())?;
            for v in g.nodes() {
                writeln!(out, "# class {} {}", g.name(v), q.graph.name(q.map[v]))?;
            }
        }
        Format::Json => {
            let map: serde_json::Map<String, Value> = g
                .nodes()
                .map(|v| (g.name(v).to_string(), json!(q.graph.name(q.map[v]))))
                .collect();
            write_json(out, &json!({"graph": q.graph.to_json(), "classes": map}))?;
        }
        Format::Csv => return Err(no_csv("graph quotient")),
    }
    Ok(())
}

pub fn graph_sigma(ctx: &Context, file: &GraphFile, out: &mut dyn Write) -> Outcome {
    let g = read_graph(&file.file)?;
    let outcomes = solve(&g);
    let nodes: Vec<usize> = g.nodes().filter(|&v| is_sigma_node(&g, v)).collect();
    let mut spectrum: Vec<usize> = nodes.iter().filter_map(|&v| outcomes[v].w()).collect();
    spectrum.sort_unstable();
    spectrum.dedup();
    match ctx.format {
        Format::Text => {
            for &v in &nodes {
                writeln!(out, "{}: {}", g.name(v), outcomes[v])?;
            }
            let s: Vec<String> = spectrum.iter().map(usize::to_string).collect();
            writeln!(out, "spectrum: {{{}}}", s.join(", "))?;
        }
        Format::Json => {
            let list: Vec<Value> = nodes
                .iter()
                .map(
                    |&v| json!({"id": g.name(v), "kind": outcomes[v].kind(), "w": outcomes[v].w()}),
                )
                .collect();
            write_json(out, &json!({"sigma_nodes": list, "spectrum": spectrum}))?;
        }
        Format::Csv => return Err(no_csv("graph sigma")),
    }
    Ok(())
}

pub fn graph_pattern(ctx: &Context, file: &GraphFile, out: &mut dyn Write) -> Outcome {
    let g = read_graph(&file.file)?;
    let report = pattern_report(&g);
    match ctx.format {
        Format::Text => writeln!(out, "{report}")?,
        Format::Json => write_json(
            out,
            &serde_json::to_value(&report).map_err(anyhow::Error::from)?,
        )?,
        Format::Csv => return Err(no_csv("graph pattern")),
    }
    Ok(())
}

pub fn graph_witness(ctx: &Context, nu: usize, out: &mut dyn Write) -> Outcome {
    let g = sigma_witness(nu)?;
    match ctx.format {
        Format::Text => write!(out, "{}", g.to_text())?,
        Format::Json => write_json(
            out,
            &serde_json::to_value(g.to_json()).map_err(anyhow::Error::from)?,
        )?,
        Format::Csv => return Err(no_csv("graph witness")),
    }
    Ok(())
}

fn model_seed(args: &ModelArgs) -> anyhow::Result<Apg> {
    match (&args.seed, &args.file) {
        (Some(name), _) => preset(name).ok_or_else(|| anyhow!("unknown seed preset `{name}`")),
        (None, Some(path)) => read_graph(path),
        (None, None) => Err(anyhow!("model needs --seed NAME or --file FILE")),
    }
}

fn build_model(args: &ModelArgs) -> anyhow::Result<(Apg, Model)> {
    let seed = model_seed(args)?;
    let model = build(&seed, args.stages, args.cap)?;
    Ok((seed, model))
}

pub fn model_build(ctx: &Context, args: &ModelArgs, out: &mut dyn Write) -> Outcome {
    let (_, model) = build_model(args)?;
    match ctx.format {
        Format::Text => write!(out, "{}", model.to_text())?,
        Format::Json => write_json(out, &model.to_json())?,
        Format::Csv => return Err(no_csv("model build")),
    }
    Ok(())
}

pub fn model_check(ctx: &Context, args: &ModelArgs, out: &mut dyn Write) -> Outcome {
    let (seed, model) = build_model(args)?;
    let seed_report = check_seed(&seed);
    let end = check_end_extension(&model);
    let ext = check_extensionality(&model);
    let thick: Vec<bool> = (0..model.stages())
        .map(|a| check_thickness(&model, a))
        .collect::<Result<_, _>>()?;
    let reflection = if model.stages() >= 1 {
        Some(check_reflection(&model)?)
    } else {
        None
    };
    let pattern = classify_model(&model);
    let sizes: Vec<usize> = (0..=model.stages()).map(|a| model.stage_size(a)).collect();
    let passed = seed_report.passed() && end && ext && thick.iter().all(|&t| t);
    let word = |b: bool| if b { "pass" } else { "fail" };
    match ctx.format {
        Format::Text => {
            writeln!(out, "stage sizes: {sizes:?}")?;
            for c in &seed_report.conditions {
                let status = serde_json::to_value(c.status).map_err(anyhow::Error::from)?;
                writeln!(
                    out,
                    "seed {}: {} ({})",
                    c.id,
                    status.as_str().unwrap_or("?"),
                    c.detail
                )?;
            }
            writeln!(out, "end-extension: {}", word(end))?;
            writeln!(out, "extensionality: {}", word(ext))?;
            for (a, t) in thick.iter().enumerate() {
                writeln!(out, "thickness({a}): {}", word(*t))?;
            }
            if let Some(r) = &reflection {
                writeln!(out, "reflection ({}):", r.scope)?;
                for s in &r.statements {
                    writeln!(
                        out,
                        "  {}: M_{}={} M_{}={}",
                        s.statement, r.first_stage, s.first_stage, r.last_stage, s.last_stage
                    )?;
                }
            }
            writeln!(out, "{pattern}")?;
        }
        Format::Json => write_json(
            out,
            &json!({
                "stage_sizes": sizes,
                "seed": seed_report,
                "end_extension": end,
                "extensionality": ext,
                "thickness": thick,
                "reflection": reflection,
                "pattern": pattern,
                "passed": passed,
            }),
        )?,
        Format::Csv => return Err(no_csv("model check")),
    }
    if passed {
        Ok(())
    } else {
        Err(Failure::Checks("model check failed".into()))
    }
}

pub fn verify(ctx: &Context, suite: &[String], list: bool, out: &mut dyn Write) -> Outcome {
    if list {
        for id in check_ids() {
            writeln!(out, "{id}")?;
        }
        return Ok(());
    }
    let names: Vec<&str> = suite.iter().map(String::as_str).collect();
    let results = run_suite(&names).map_err(|e| match e {
        Error::UnknownCheck(id) => Failure::Usage(format!(
            "unknown check id `{id}`; run `setgame verify --list` for the ids"
        )),
        other => other.into(),
    })?;
    let label = |s: Status| match s {
        Status::Pass => "PASS",
        Status::Fail => "FAIL",
        Status::ReportOnly => "REPORT",
    };
    match ctx.format {
        Format::Text => {
            for r in &results {
                writeln!(out, "{}: {}", r.check, label(r.status))?;
                if r.status != Status::Pass {
                    writeln!(out, "  evidence: {}", r.evidence)?;
                }
            }
        }
        Format::Json => write_json(
            out,
            &serde_json::to_value(&results).map_err(anyhow::Error::from)?,
        )?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["check", "status", "runtime_ms"])?;
            for r in &results {
                w.write_record([
                    r.check.clone(),
                    label(r.status).to_lowercase(),
                    r.runtime_ms.to_string(),
                ])?;
            }
            w.flush()?;
        }
    }
    let failed = results.iter().filter(|r| r.status == Status::Fail).count();
    if failed == 0 {
        Ok(())
    } else {
        Err(Failure::Checks(format!("{failed} check(s) failed")))
    }
}
