mod cli;

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::error::ErrorKind;
use clap::Parser;
use serde_json::json;

use cli::{CaseArg, Cli, Command, ModeArg, ParamArgs, ProfileArg, SearchArgs};
use kpartite::expansion::DEFAULT_EXACT_CAP;
use kpartite::hamiltonicity::extremal_construct_cycle;
use kpartite::partition::profile;
use kpartite::rational::{ceil_to_i64, format_rational, from_usize};
use kpartite::{
    build_tightness, build_tightness_with_case, classify, find_hamiltonian_cycle,
    is_robust_expander, nu_extremal_witness, perfect_fractional_matching, sweep,
    weak_expansion_audit, ClassifyOptions, Error, ExpanderParams, ExtremalSearch,
    HamiltonOutcome, Outcome, PartiteGraph, Partition, ProfileMode, Rational, RobustVerdict,
    SearchMode, SweepOptions, TightnessCase, VertexSet,
};

/// Exit status of a completed command.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Status {
    Pass,
    Fail,
    Unknown,
}

impl From<Status> for ExitCode {
    fn from(s: Status) -> Self {
        ExitCode::from(match s {
            Status::Pass => 0,
            Status::Fail => 2,
            Status::Unknown => 3,
        })
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    match run(&cli) {
        Ok(status) => status.into(),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(error_code(&e))
        }
    }
}

fn error_code(e: &anyhow::Error) -> u8 {
    match e.downcast_ref::<Error>() {
        Some(Error::ResourceLimit { .. }) => 3,
        Some(Error::ConstructionFailed { .. }) => 2,
        _ => 1,
    }
}

fn run(cli: &Cli) -> anyhow::Result<Status> {
    let out = Output { json: cli.json };
    match &cli.command {
        Command::Phi { partition, mode } => cmd_phi(&out, partition, *mode),
        Command::Construct {
            partition,
            case,
            output,
        } => cmd_construct(&out, partition, *case, output),
        Command::Check { file, slack, gamma } => {
            let g = load(file)?;
            let slack = match (slack, gamma) {
                (Some(s), _) => *s,
                (None, Some(gamma)) => ceil_to_i64(&(*gamma * from_usize(g.n()))),
                (None, None) => 0,
            };
            let report = g.check_degree_condition(&g.partition().exact_profile(), slack)?;
            out.emit(&report, || {
                let mut t = format!("slack {}\n", report.slack);
                t += "part  min-degree  threshold  margin\n";
                for i in 0..report.min_degrees.len() {
                    t += &format!(
                        "V_{:<3} {:>10} {:>10} {:>7}\n",
                        i + 1,
                        report.min_degrees[i],
                        report.thresholds[i],
                        report.slack_per_part[i]
                    );
                }
                t + if report.pass { "pass" } else { "fail" }
            })?;
            Ok(if report.pass { Status::Pass } else { Status::Fail })
        }
        Command::Hamilton { file, budget } => {
            let g = load(file)?;
            let verdict = find_hamiltonian_cycle(&g, *budget);
            let status = match &verdict.outcome {
                HamiltonOutcome::Cycle { .. } => Status::Pass,
                HamiltonOutcome::NoCycle => Status::Fail,
                HamiltonOutcome::Unknown => Status::Unknown,
            };
            out.emit(&verdict, || {
                let head = match &verdict.outcome {
                    HamiltonOutcome::Cycle { cycle } => format!("cycle {}", join(cycle)),
                    HamiltonOutcome::NoCycle => "none".to_string(),
                    HamiltonOutcome::Unknown => "unknown (budget exhausted)".to_string(),
                };
                format!(
                    "{head}\nmethod {}\nexpansions {}",
                    json_str(&verdict.method),
                    verdict.expansions
                )
            })?;
            Ok(status)
        }
        Command::Matching { file } => {
            let g = load(file)?;
            match perfect_fractional_matching(&g) {
                Ok(m) => {
                    out.emit(&json!({ "status": "found", "matching": m }), || {
                        let mut t = String::from("perfect fractional matching\n");
                        for [u, v] in &m.edges {
                            t += &format!("edge {u}-{v}\n");
                        }
                        for c in &m.odd_cycles {
                            t += &format!("odd cycle {}\n", join(c));
                        }
                        t.trim_end().to_string()
                    })?;
                    Ok(Status::Pass)
                }
                Err(v) => {
                    out.emit(&json!({ "status": "violation", "violation": v }), || {
                        format!(
                            "no perfect fractional matching\nT {} (|T| = {})\nN(T) {} (|N(T)| = {})",
                            v.t,
                            v.t.len(),
                            v.neighborhood,
                            v.neighborhood.len()
                        )
                    })?;
                    Ok(Status::Fail)
                }
            }
        }
        Command::WeakExpansion { file, limit } => {
            let g = load(file)?;
            match weak_expansion_audit(&g, *limit)? {
                None => {
                    out.emit(&json!({ "status": "ok" }), || "ok".to_string())?;
                    Ok(Status::Pass)
                }
                Some(v) => {
                    out.emit(&json!({ "status": "violation", "violation": v }), || {
                        format!(
                            "violation\nS {} (|S| = {})\nN(S) {} (|N(S)| = {})",
                            v.t,
                            v.t.len(),
                            v.neighborhood,
                            v.neighborhood.len()
                        )
                    })?;
                    Ok(Status::Fail)
                }
            }
        }
        Command::Expander {
            file,
            params,
            search,
        } => {
            let g = load(file)?;
            let report = is_robust_expander(&g, &expander_params(params)?, search_mode(search, cli.seed))?;
            out.emit(&report, || {
                let mut t = format!(
                    "verdict {}\nsets checked {}",
                    json_str(&report.verdict),
                    report.sets_checked
                );
                if let Some(w) = report.witness {
                    t += &format!("\nwitness {w}");
                }
                t
            })?;
            Ok(match report.verdict {
                RobustVerdict::Expander => Status::Pass,
                RobustVerdict::NotExpander => Status::Fail,
                RobustVerdict::Inconclusive => Status::Unknown,
            })
        }
        Command::Classify {
            file,
            params,
            search,
            heuristic_extremal,
        } => {
            let g = load(file)?;
            let options = ClassifyOptions {
                mode: search_mode(search, cli.seed),
                extremal: if *heuristic_extremal {
                    ExtremalSearch::Heuristic
                } else {
                    ExtremalSearch::Exact { cap: search.cap }
                },
                cross_check_cap: search.cap,
            };
            let verdict = classify(&g, &expander_params(params)?, &options)?;
            out.emit(&verdict, || {
                let mut t = String::new();
                for e in &verdict.trace {
                    t += &format!("{:<16} {}\n", e.stage, e.result);
                }
                let head = match &verdict.outcome {
                    Outcome::RobustExpander { nu, tau } => format!(
                        "robust expander (nu = {}, tau = {})",
                        format_rational(nu),
                        format_rational(tau)
                    ),
                    Outcome::NuExtremal { witness } => format!("nu-extremal, witness {witness}"),
                    Outcome::DegreeViolation { report } => format!(
                        "degree violation in V_{} (margin {})",
                        report.worst_part + 1,
                        report.min_slack()
                    ),
                    Outcome::Unresolved { reason, .. } => format!("unresolved: {reason}"),
                };
                t + &head
            })?;
            Ok(match verdict.outcome {
                Outcome::DegreeViolation { .. } => Status::Fail,
                Outcome::Unresolved { .. } => Status::Unknown,
                _ if !verdict.exhaustive => Status::Unknown,
                _ => Status::Pass,
            })
        }
        Command::ExtremalCycle {
            file,
            params,
            witness,
            budget,
        } => cmd_extremal_cycle(&out, file, params, witness.as_deref(), *budget),
        Command::Sweep {
            n,
            k,
            max_n_solver,
            budget,
            report,
        } => {
            let options = SweepOptions {
                max_n_solver: *max_n_solver,
                budget: *budget,
            };
            let rows = sweep(*n, *k, &options)?;
            let sink: Box<dyn Write> = match report {
                Some(path) => Box::new(
                    fs::File::create(path).with_context(|| format!("cannot create {}", path.display()))?,
                ),
                None => Box::new(io::stdout().lock()),
            };
            let mut w = csv::WriterBuilder::new()
                .terminator(csv::Terminator::Any(b'\n'))
                .from_writer(sink);
            if rows.is_empty() {
                w.write_record([
                    "partition",
                    "lambda",
                    "mu",
                    "f",
                    "g",
                    "h1",
                    "h2",
                    "phi",
                    "case",
                    "min_slack",
                    "certificate_ok",
                    "hamiltonian",
                ])?;
            }
            for row in &rows {
                w.serialize(row)?;
            }
            w.flush()?;
            if report.is_some() {
                eprintln!("{} rows", rows.len());
            }
            Ok(Status::Pass)
        }
    }
}

fn cmd_phi(out: &Output, text: &str, mode: ProfileArg) -> anyhow::Result<Status> {
    let p: Partition = text.parse()?;
    let (mode, mode_name) = match mode {
        ProfileArg::Exact => (ProfileMode::Exact, "exact"),
        ProfileArg::Asymptotic => (ProfileMode::Asymptotic, "asymptotic"),
    };
    let prof = profile(&p, mode);
    if prof.lambda == 1 {
        eprintln!(
            "warning: lambda = 1 because the largest part {} exceeds n/2 = {}; the threshold is only meaningful when every part has at most n/2 vertices",
            p.size(1),
            format_rational(&(from_usize(p.n()) / 2))
        );
    }
    let r = format_rational;
    let thresholds: Vec<String> = (1..=p.k()).map(|i| r(&prof.threshold(i))).collect();
    let num = |x: &Rational| {
        if x.is_integer() {
            json!(x.to_integer())
        } else {
            json!(r(x))
        }
    };
    let value = json!({
        "partition": p.to_string(),
        "n": p.n(),
        "k": p.k(),
        "mode": mode_name,
        "lambda": prof.lambda,
        "mu": prof.mu,
        "f_values": prof.f_values.iter().map(num).collect::<Vec<_>>(),
        "f": num(&prof.f),
        "g": num(&prof.g),
        "h1": num(&prof.h1),
        "h2": num(&prof.h2),
        "h": num(&prof.h),
        "phi": num(&prof.phi),
        "thresholds": (1..=p.k()).map(|i| num(&prof.threshold(i))).collect::<Vec<_>>(),
    });
    out.emit(&value, || {
        let mut t = format!("partition {} (n = {}, k = {}, {mode_name})\n", p, p.n(), p.k());
        t += &format!("lambda    {}\nmu        {}\n", prof.lambda, prof.mu);
        let fs: Vec<String> = prof
            .f_values
            .iter()
            .enumerate()
            .map(|(i, f)| format!("f_{} = {}", i + 1, r(f)))
            .collect();
        if fs.is_empty() {
            t += &format!("f         {}\n", r(&prof.f));
        } else {
            t += &format!("f         {}  ({})\n", r(&prof.f), fs.join(", "));
        }
        t += &format!("g         {}\nh1        {}\nh2        {}\n", r(&prof.g), r(&prof.h1), r(&prof.h2));
        t += &format!("h         {}\nphi       {}\n", r(&prof.h), r(&prof.phi));
        for (i, th) in thresholds.iter().enumerate() {
            t += &format!("V_{:<7} phi - n_{} = {th}\n", i + 1, i + 1);
        }
        t.trim_end().to_string()
    })?;
    Ok(Status::Pass)
}

fn cmd_construct(out: &Output, text: &str, case: CaseArg, output: &Path) -> anyhow::Result<Status> {
    let p: Partition = text.parse()?;
    let built = match case {
        CaseArg::Auto => build_tightness(&p)?,
        forced => build_tightness_with_case(&p, forced_case(&p, forced))?,
    };
    let cert_path = certificate_path(output);
    fs::write(output, built.graph.to_json()).with_context(|| format!("cannot write {}", output.display()))?;
    fs::write(&cert_path, built.certificate.to_json())
        .with_context(|| format!("cannot write {}", cert_path.display()))?;
    let value = json!({
        "partition": p.to_string(),
        "case": built.case.to_string(),
        "certificate": built.certificate.kind.to_string(),
        "graph": output.display().to_string(),
        "certificate_file": cert_path.display().to_string(),
    });
    out.emit(&value, || {
        format!(
            "case {}\ncertificate {} (|S| = {})\nwrote {} and {}",
            built.case,
            built.certificate.kind,
            built.certificate.s.len(),
            output.display(),
            cert_path.display()
        )
    })?;
    Ok(Status::Pass)
}

/// The construction family named on the command line. For `f` an index
/// with `f_i = Φ` is used when there is one, otherwise the largest `f_i`, so
/// the error names the closest candidate.
fn forced_case(p: &Partition, case: CaseArg) -> TightnessCase {
    let prof = p.exact_profile();
    match case {
        CaseArg::F => {
            let index = prof.maximizing_f_index().unwrap_or_else(|| {
                let best = prof.f_values.iter().max().copied();
                prof.f_values.iter().position(|&f| Some(f) == best).map_or(1, |i| i + 1)
            });
            TightnessCase::F1 { index }
        }
        CaseArg::G => TightnessCase::F2,
        CaseArg::H1 => TightnessCase::F3,
        CaseArg::H2 | CaseArg::Auto => TightnessCase::F4,
    }
}

fn certificate_path(graph: &Path) -> PathBuf {
    let stem = graph.file_stem().map_or_else(|| "graph".into(), |s| s.to_string_lossy().into_owned());
    graph.with_file_name(format!("{stem}.cert.json"))
}

fn cmd_extremal_cycle(
    out: &Output,
    file: &Path,
    params: &ParamArgs,
    witness: Option<&str>,
    budget: u64,
) -> anyhow::Result<Status> {
    let g = load(file)?;
    let params = expander_params(params)?;
    let witness = match witness {
        Some(text) => parse_vertex_set(text, g.n())?,
        None => {
            let search = if g.n() <= DEFAULT_EXACT_CAP {
                ExtremalSearch::Exact { cap: DEFAULT_EXACT_CAP }
            } else {
                ExtremalSearch::Heuristic
            };
            match nu_extremal_witness(&g, params.nu, search)? {
                Some(w) => w,
                None => {
                    out.emit(&json!({ "status": "no-witness" }), || {
                        format!("no {}-extremal set found", format_rational(&params.nu))
                    })?;
                    return Ok(Status::Fail);
                }
            }
        }
    };
    match extremal_construct_cycle(&g, witness, &params, budget) {
        Ok(found) => {
            let status = match found.verdict.outcome {
                HamiltonOutcome::Cycle { .. } => Status::Pass,
                HamiltonOutcome::NoCycle => Status::Fail,
                HamiltonOutcome::Unknown => Status::Unknown,
            };
            out.emit(&found, || match found.verdict.cycle() {
                Some(c) => format!("witness {witness}\ncycle {}", join(c)),
                None => format!("witness {witness}\nno cycle"),
            })?;
            Ok(status)
        }
        Err(Error::ConstructionFailed { step, trace }) => {
            out.emit(&json!({ "status": "failed", "step": step, "trace": trace }), || {
                format!(
                    "construction failed at {step}\nwitness {}\nA {}\nB {}\nt {}\npath {}",
                    trace.witness,
                    trace.a_side,
                    trace.b_side,
                    trace.t,
                    join(&trace.path)
                )
            })?;
            Ok(if step == kpartite::StitchStep::Budget {
                Status::Unknown
            } else {
                Status::Fail
            })
        }
        Err(e) => Err(e.into()),
    }
}

fn parse_vertex_set(text: &str, n: usize) -> anyhow::Result<VertexSet> {
    let mut s = VertexSet::EMPTY;
    for tok in text.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let v: usize = tok.parse().with_context(|| format!("`{tok}` is not a vertex"))?;
        if v >= n {
            bail!("vertex {v} is out of range 0..{n}");
        }
        s.insert(v);
    }
    Ok(s)
}

fn expander_params(a: &ParamArgs) -> anyhow::Result<ExpanderParams> {
    let p = ExpanderParams::new(a.nu, a.tau, a.gamma)?;
    Ok(match a.eta {
        Some(eta) => p.with_eta(eta),
        None => p,
    })
}

fn search_mode(a: &SearchArgs, seed: u64) -> SearchMode {
    match a.mode {
        ModeArg::Exact => SearchMode::Exact { cap: a.cap },
        ModeArg::Sampled => SearchMode::Sampled {
            seed,
            samples: a.samples,
        },
    }
}

fn load(path: &Path) -> anyhow::Result<PartiteGraph> {
    let text = fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    PartiteGraph::from_json(&text).with_context(|| path.display().to_string())
}

struct Output {
    json: bool,
}

impl Output {
    fn emit<T: serde::Serialize>(&self, value: &T, human: impl FnOnce() -> String) -> anyhow::Result<()> {
        let mut stdout = io::stdout().lock();
        if self.json {
            serde_json::to_writer_pretty(&mut stdout, value)?;
            writeln!(stdout)?;
        } else {
            writeln!(stdout, "{}", human())?;
        }
        Ok(())
    }
}

fn join(vs: &[usize]) -> String {
    vs.iter().map(usize::to_string).collect::<Vec<_>>().join("-")
}

/// A unit enum's serde name.
fn json_str<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_value(v)
        .ok()
        .and_then(|v| v.as_str().map(str::to_string))
        .unwrap_or_default()
}
