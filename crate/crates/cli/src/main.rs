//! `qprime`: list, construct and verify the torus-invariant prime ideals of
//! quantum matrices.
//!
//! Exit codes: 0 all checks passed, 1 a check failed, 2 invalid usage,
//! 3 the degree guard was exhausted.

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use qprime_core::certificate::{Certificate, Status};
use qprime_core::exterior::verify_exterior;
use qprime_core::groebner::default_degree_guard;
use qprime_core::parallel::Jobs;
use qprime_core::polynormal::{
    generating_sequence, list_primes, poset_dot, predicted_scalar, upsilon, verify_heights, verify_polynormal,
    verify_poset, verify_separation, VerifyOptions,
};
use qprime_core::qmatrix::Shape;
use qprime_core::weyl::{bruhat_interval_with, bruhat_leq, coxeter_cm, cover_relations, explain_not_below, Permutation};
use serde_json::json;

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_GUARD: u8 = 3;

#[derive(Parser, Debug)]
#[command(name = "qprime", version, about = "Torus-invariant prime ideals of quantum matrices")]
struct Cli {
    /// Number of rows.
    #[arg(long, global = true, default_value_t = 2)]
    m: usize,
    /// Number of columns.
    #[arg(long, global = true, default_value_t = 2)]
    n: usize,
    /// Permutation in one-line notation (e.g. 3,1,2,4), or "top" for c^m.
    #[arg(long, global = true)]
    y: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Maximum degree reached during Groebner completion [default: 2(m+n)].
    #[arg(long, global = true)]
    degree_guard: Option<u32>,
    /// Drop repeated minors from generating sequences.
    #[arg(long, global = true)]
    dedup: bool,
    /// Worker threads across independent permutations (0 = all cores).
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    /// Report elapsed_ms as 0, making output byte-reproducible.
    #[arg(long, global = true)]
    no_timing: bool,
    /// Refuse sizes with m*n above this.
    #[arg(long, global = true, default_value_t = 16)]
    max_vars: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// All y <= c^m with l(y), |Υ(y)| and the generating minors.
    ListPrimes,
    /// The ordered generating sequence of I(y) with predicted q-exponents.
    Generators,
    /// Run a verification suite.
    Verify {
        #[arg(value_enum)]
        kind: Kind,
    },
    /// The poset of primes (Bruhat covers) as DOT or JSON.
    ExportPoset,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Kind {
    Polynormal,
    Poset,
    Heights,
    Separation,
    Exterior,
    All,
}

struct Ctx {
    m: usize,
    n: usize,
    top: Permutation,
    y: Option<Permutation>,
    format: Format,
    opts: VerifyOptions,
    jobs: Jobs,
    no_timing: bool,
}

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(EXIT_USAGE)
}

fn setup(cli: &Cli) -> Result<Ctx, String> {
    let (m, n) = (cli.m, cli.n);
    let shape = Shape::new(m, n).map_err(|e| e.to_string())?;
    if m * n > cli.max_vars {
        return Err(format!("m*n = {} exceeds the cap of {}", m * n, cli.max_vars));
    }
    let (top, _) = coxeter_cm(m, n).map_err(|e| e.to_string())?;
    let y = match cli.y.as_deref() {
        None => None,
        Some("top") => Some(top.clone()),
        Some(s) => {
            let y: Permutation = s.parse().map_err(|e: qprime_core::Error| e.to_string())?;
            if y.size() != m + n {
                return Err(format!("y = {y} is not in S_{}", m + n));
            }
            if !bruhat_leq(&y, &top).map_err(|e| e.to_string())? {
                return Err(format!(
                    "y = {y} is not below c^m = {top}: {}",
                    explain_not_below(&y, &top).unwrap_or_default()
                ));
            }
            Some(y)
        }
    };
    let degree_guard = cli.degree_guard.unwrap_or_else(|| default_degree_guard(shape));
    if degree_guard == 0 {
        return Err("--degree-guard must be positive".into());
    }
    Ok(Ctx {
        m,
        n,
        top,
        y,
        format: cli.format,
        opts: VerifyOptions {
            degree_guard,
            dedup: cli.dedup,
        },
        jobs: Jobs::from_count(cli.jobs),
        no_timing: cli.no_timing,
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let ctx = match setup(&cli) {
        Ok(c) => c,
        Err(e) => return usage(e),
    };
    let mut out = io::stdout().lock();
    let res = match cli.command {
        Command::ListPrimes => cmd_list_primes(&ctx, &mut out),
        Command::Generators => cmd_generators(&ctx, &mut out),
        Command::Verify { kind } => cmd_verify(&ctx, kind, &mut out),
        Command::ExportPoset => cmd_export_poset(&ctx, &mut out),
    };
    match res {
        Ok(code) => code,
        Err(Failure::Usage(e)) => usage(e),
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_FAIL)
        }
    }
}

enum Failure {
    Usage(String),
    Io(io::Error),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<qprime_core::Error> for Failure {
    fn from(e: qprime_core::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type CmdResult = Result<ExitCode, Failure>;

fn no_dot(ctx: &Ctx, what: &str) -> Result<(), Failure> {
    if ctx.format == Format::Dot {
        return Err(Failure::Usage(format!("--format dot is only available for export-poset, not {what}")));
    }
    Ok(())
}

fn cmd_list_primes(ctx: &Ctx, out: &mut impl Write) -> CmdResult {
    no_dot(ctx, "list-primes")?;
    let rows = list_primes(ctx.m, ctx.n, ctx.jobs)?;
    match ctx.format {
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&rows).unwrap())?,
        _ => {
            writeln!(out, "{} torus-invariant primes of R_q[M_{},{}]", rows.len(), ctx.m, ctx.n)?;
            let width = rows.iter().map(|r| r.y.len()).max().unwrap_or(1).max(1);
            writeln!(out, "{:<width$}  l(y)  |Υ(y)|  minors", "y")?;
            for r in &rows {
                let minors = if r.minors.is_empty() {
                    "(zero ideal)".to_string()
                } else {
                    r.minors.join("; ")
                };
                writeln!(out, "{:<width$}  {:>4}  {:>6}  {minors}", r.y, r.length, r.upsilon_size)?;
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_generators(ctx: &Ctx, out: &mut impl Write) -> CmdResult {
    no_dot(ctx, "generators")?;
    let y = ctx
        .y
        .as_ref()
        .ok_or_else(|| Failure::Usage("generators needs --y".into()))?;
    let shape = Shape::new(ctx.m, ctx.n)?;
    let seq = generating_sequence(y, ctx.m, ctx.n, ctx.opts.dedup)?;
    let mut items = Vec::new();
    for (idx, u) in &seq {
        let mut scalars = serde_json::Map::new();
        for a in 1..=ctx.m {
            for b in 1..=ctx.n {
                let name = shape.var_name(shape.var(a, b)?);
                scalars.insert(name, json!(predicted_scalar(&idx.set, a, b, ctx.m, ctx.n)?));
            }
        }
        items.push(json!({
            "J": idx.set,
            "rows": idx.rows,
            "cols": idx.cols,
            "element": u.to_string(),
            "predicted_scalars": scalars,
        }));
    }
    match ctx.format {
        Format::Json => {
            let doc = json!({"m": ctx.m, "n": ctx.n, "y": y.one_line(), "generators": items});
            writeln!(out, "{}", serde_json::to_string_pretty(&doc).unwrap())?;
        }
        _ => {
            writeln!(out, "I({y}) in R_q[M_{},{}], l(y) = {}", ctx.m, ctx.n, y.length())?;
            if seq.is_empty() {
                writeln!(out, "empty sequence: zero ideal")?;
            }
            for (pos, ((idx, u), item)) in seq.iter().zip(&items).enumerate() {
                let scalars = item["predicted_scalars"]
                    .as_object()
                    .unwrap()
                    .iter()
                    .map(|(k, v)| format!("{k}:{v}"))
                    .collect::<Vec<_>>()
                    .join(" ");
                writeln!(out, "u{:<3} Δ{:<12} = {u}", pos + 1, idx.set_string())?;
                writeln!(out, "     q-exponents  {scalars}")?;
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn emit(ctx: &Ctx, out: &mut impl Write, mut cert: Certificate) -> io::Result<Status> {
    if ctx.no_timing {
        cert.elapsed_ms = 0;
    }
    match ctx.format {
        Format::Json => writeln!(out, "{}", cert.to_json())?,
        _ => {
            let status = match cert.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::GuardExceeded => "GUARD",
            };
            let y = cert.y.as_deref().map(|y| format!(" y={y}")).unwrap_or_default();
            writeln!(out, "{status} {} m={} n={}{y} ({} ms)", cert.claim, cert.m, cert.n, cert.elapsed_ms)?;
            if cert.status != Status::Pass || ctx.y.is_some() {
                for w in &cert.witnesses {
                    writeln!(out, "    {}: {}", w.label, w.value)?;
                }
                for s in cert.predicted_vs_observed_scalars.iter().filter(|s| !s.matches()) {
                    writeln!(
                        out,
                        "    {} vs {}: predicted q^{}, observed {:?}",
                        s.element, s.generator, s.predicted, s.observed
                    )?;
                }
            }
        }
    }
    Ok(cert.status)
}

fn cmd_verify(ctx: &Ctx, kind: Kind, out: &mut impl Write) -> CmdResult {
    no_dot(ctx, "verify")?;
    let (m, n) = (ctx.m, ctx.n);
    let mut certs: Vec<Certificate> = Vec::new();
    let all = kind == Kind::All;
    if all || kind == Kind::Polynormal {
        let ys = match &ctx.y {
            Some(y) => vec![y.clone()],
            None => bruhat_interval_with(&ctx.top, ctx.jobs),
        };
        let res = qprime_core::parallel::par_map(&ys, ctx.jobs, |y| verify_polynormal(y, m, n, ctx.opts));
        for c in res {
            certs.push(c?);
        }
    }
    if all || kind == Kind::Poset {
        certs.push(verify_poset(m, n, ctx.opts, ctx.jobs)?);
    }
    if all || kind == Kind::Heights {
        certs.push(verify_heights(m, n, ctx.opts, ctx.jobs)?);
    }
    if all || kind == Kind::Separation {
        let mut sep = verify_separation(m, n, ctx.opts, ctx.jobs)?;
        if let Some(y) = &ctx.y {
            sep.retain(|c| c.y.as_deref().is_some_and(|s| s.ends_with(&format!("<{y}"))));
        }
        certs.extend(sep);
    }
    if all || kind == Kind::Exterior {
        certs.push(verify_exterior(m, n)?);
    }
    let mut worst = Status::Pass;
    for c in certs {
        match emit(ctx, out, c)? {
            Status::Pass => {}
            Status::Fail => worst = Status::Fail,
            Status::GuardExceeded if worst == Status::Pass => worst = Status::GuardExceeded,
            Status::GuardExceeded => {}
        }
    }
    Ok(match worst {
        Status::Pass => ExitCode::SUCCESS,
        Status::Fail => ExitCode::from(EXIT_FAIL),
        Status::GuardExceeded => ExitCode::from(EXIT_GUARD),
    })
}

fn cmd_export_poset(ctx: &Ctx, out: &mut impl Write) -> CmdResult {
    match ctx.format {
        Format::Json => {
            let interval = bruhat_interval_with(&ctx.top, ctx.jobs);
            let mut nodes = Vec::new();
            for y in &interval {
                nodes.push(json!({
                    "y": y.one_line(),
                    "length": y.length(),
                    "upsilon_size": upsilon(y, ctx.m, ctx.n)?.len(),
                }));
            }
            let edges: Vec<[usize; 2]> = cover_relations(&interval).into_iter().map(|(a, b)| [a, b]).collect();
            let doc = json!({"m": ctx.m, "n": ctx.n, "nodes": nodes, "edges": edges});
            writeln!(out, "{}", serde_json::to_string_pretty(&doc).unwrap())?;
        }
        _ => write!(out, "{}", poset_dot(ctx.m, ctx.n)?)?,
    }
    Ok(ExitCode::SUCCESS)
}
