//! `ginbetti` command-line front end.
mod input;
mod output;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use ginbetti::exactla::FieldSpec;
use ginbetti::gin::{generic_initial_ideal_with, GinOptions};
use ginbetti::koszul::{annihilator_numbers, graded_betti};
use ginbetti::monideal::{ek_graded_betti, BettiTable, MonomialIdeal};
use ginbetti::ring::{RingCtx, TermOrder};
use ginbetti::verifier::{self, CheckConfig, Comparand, Status, TheoremReport};
use ginbetti::Error;

use input::{read_ideal_file, IdealFile, InputError, Overrides};
use output::{Document, Format, Rendered};

#[derive(Parser, Debug)]
#[command(
    name = "ginbetti",
    version,
    about = "Betti numbers, generic initial ideals and Koszul homology of graded ideals"
)]
struct Cli {
    /// Seed for every random choice; required by gin, alpha and check.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Coefficient field overriding the file header (Q or Fp:<prime>).
    #[arg(long, global = true)]
    field: Option<FieldSpec>,
    /// Independent coordinate changes that must agree on Gin.
    #[arg(long, global = true, default_value_t = GinOptions::default().trials)]
    trials: usize,
    /// Entries of random coordinate changes are drawn from [-bound, bound].
    #[arg(long, global = true, default_value_t = GinOptions::default().bound)]
    bound: i64,
    /// Largest degree any computation may reach.
    #[arg(long, global = true, env = "GINBETTI_DEGREE_GUARD")]
    degree_guard: Option<u32>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    output: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Graded Betti numbers of I.
    Betti {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
    },
    /// Generic initial ideal of I.
    Gin {
        file: PathBuf,
        /// Term order of the gin; defaults to the file's order.
        #[arg(long)]
        order: Option<TermOrder>,
    },
    /// Lex-segment ideal with the Hilbert function of S/I.
    Lex { file: PathBuf },
    /// Generic annihilator numbers of S/I.
    Alpha { file: PathBuf },
    /// Run one statement check and report its verdicts.
    Check {
        #[arg(value_enum)]
        theorem: Theorem,
        files: Vec<PathBuf>,
        /// Degree d for `strange` (I inside m^d) and `ci`.
        #[arg(long, short = 'd')]
        degree: Option<u32>,
        /// Comparison ideal for `lex`: lex, gin:degrevlex, gin:deglex or gin:lex.
        #[arg(long, default_value = "lex")]
        against: String,
        /// Number of variables for `ci`.
        #[arg(long)]
        n: Option<usize>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Auto,
    Ek,
    Koszul,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Theorem {
    Bound,
    Identity,
    Maximal,
    Rigidity,
    Lex,
    Lowerbound,
    Strange,
    Ci,
    Propagation,
    AlphaInvariance,
}

/// A failed run together with its exit code.
#[derive(Debug)]
enum Failure {
    Input(String),
    Compute(Error),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => 2,
            Failure::Compute(e) if e.is_resource_guard() => 3,
            Failure::Compute(
                Error::Parse(_)
                | Error::Field(_)
                | Error::NotHomogeneous { .. }
                | Error::RingMismatch(_)
                | Error::NotStable
                | Error::Precondition(_)
                | Error::ImpossibleDimension { .. }
                | Error::NotOSequence { .. },
            ) => 2,
            Failure::Compute(_) => 1,
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Input(m) => m.clone(),
            Failure::Compute(e) => e.to_string(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Compute(e)
    }
}

impl From<InputError> for Failure {
    fn from(e: InputError) -> Self {
        Failure::Input(e.to_string())
    }
}

struct Run<'a> {
    cli: &'a Cli,
}

impl Run<'_> {
    fn overrides(&self) -> Overrides {
        Overrides {
            field: self.cli.field,
            degree_guard: self.cli.degree_guard,
        }
    }

    fn read(&self, path: &Path) -> Result<IdealFile, Failure> {
        Ok(read_ideal_file(path, self.overrides())?)
    }

    fn seed(&self, what: &str) -> Result<u64, Failure> {
        self.cli.seed.ok_or_else(|| {
            Failure::Input(format!("{what} makes random choices; pass --seed <u64>"))
        })
    }

    fn gin_options(&self) -> Result<GinOptions, Failure> {
        if self.cli.trials == 0 {
            return Err(Failure::Input("--trials must be at least 1".into()));
        }
        if self.cli.bound < 1 {
            return Err(Failure::Input("--bound must be at least 1".into()));
        }
        Ok(GinOptions {
            trials: self.cli.trials,
            bound: self.cli.bound,
        })
    }

    fn document(&self, command: &str, files: &[IdealFile], ctx: &RingCtx) -> Document {
        Document::new(command, files, ctx, self.cli)
    }
}

fn betti_of_monomial(m: &MonomialIdeal) -> Result<BettiTable, Error> {
    if m.is_stable() {
        ek_graded_betti(m)
    } else {
        graded_betti(&m.to_graded())
    }
}

fn cmd_betti(run: &Run, file: &Path, method: Method) -> Result<Rendered, Failure> {
    let f = run.read(file)?;
    let stable = MonomialIdeal::from_graded(&f.ideal).filter(MonomialIdeal::is_stable);
    let (used, table) = match (method, stable) {
        (Method::Ek, None) => {
            return Err(Failure::Input(
                "--method ek needs a stable monomial ideal".into(),
            ))
        }
        (Method::Ek | Method::Auto, Some(m)) => ("ek", ek_graded_betti(&m)?),
        (Method::Koszul, _) | (Method::Auto, None) => ("koszul", graded_betti(&f.ideal)?),
    };
    let table = table.to_ideal();
    let mut doc = run.document("betti", std::slice::from_ref(&f), &f.ctx);
    doc.result = json!({ "method": used, "betti": table });
    let text = format!("method: {used}\n{}", table.render());
    Ok(Rendered::ok(doc, text))
}

fn cmd_gin(run: &Run, file: &Path, order: Option<TermOrder>) -> Result<Rendered, Failure> {
    let f = run.read(file)?;
    let seed = run.seed("gin")?;
    let order = order.unwrap_or(f.order);
    let g = generic_initial_ideal_with(&f.ideal, order, seed, &run.gin_options()?)?;
    let gens = g.ideal.fmt_gens();
    let mut doc = run.document("gin", std::slice::from_ref(&f), &f.ctx);
    doc.result = json!({
        "order": order.name(),
        "gens": gens,
        "agreed": g.agreed,
        "strongly_stable": g.ideal.is_strongly_stable(),
        "warnings": g.warnings,
    });
    let mut text = format!("Gin_{}(I) = ({})\n", order.name(), gens.join(", "));
    for w in &g.warnings {
        text.push_str(&format!("warning: {w}\n"));
    }
    Ok(Rendered::ok(doc, text))
}

fn cmd_lex(run: &Run, file: &Path) -> Result<Rendered, Failure> {
    let f = run.read(file)?;
    let lex = verifier::lex_ideal_of(&f.ideal)?;
    let table = betti_of_monomial(&lex)?.to_ideal();
    let gens = lex.fmt_gens();
    let mut doc = run.document("lex", std::slice::from_ref(&f), &f.ctx);
    doc.result = json!({ "gens": gens, "betti": table });
    let text = format!("Lex(I) = ({})\n{}", gens.join(", "), table.render());
    Ok(Rendered::ok(doc, text))
}

fn cmd_alpha(run: &Run, file: &Path) -> Result<Rendered, Failure> {
    let f = run.read(file)?;
    let seed = run.seed("alpha")?;
    let a = annihilator_numbers(&f.ideal, seed)?;
    let mut doc = run.document("alpha", std::slice::from_ref(&f), &f.ctx);
    doc.result = serde_json::to_value(&a).unwrap_or(Value::Null);
    let shown: Vec<String> = a.alpha.iter().map(u64::to_string).collect();
    let text = format!(
        "alpha = ({})\nwindow = 0..={} ({})\n",
        shown.join(", "),
        a.window,
        if a.certified {
            "certified"
        } else {
            "not certified"
        }
    );
    Ok(Rendered::ok(doc, text))
}

fn parse_comparand(s: &str) -> Result<Comparand, Failure> {
    match s.split_once(':') {
        None if s == "lex" => Ok(Comparand::Lex),
        Some(("gin", order)) => order
            .parse()
            .map(Comparand::Gin)
            .map_err(|e: Error| Failure::Input(e.to_string())),
        _ => Err(Failure::Input(format!(
            "--against expects lex or gin:<order>, got {s:?}"
        ))),
    }
}

fn cmd_check(
    run: &Run,
    theorem: Theorem,
    paths: &[PathBuf],
    degree: Option<u32>,
    against: &str,
    n: Option<usize>,
) -> Result<Rendered, Failure> {
    let name = theorem
        .to_possible_value()
        .map(|v| v.get_name().to_string())
        .unwrap_or_default();
    let cfg = CheckConfig::new(run.seed("check")?).with_gin(run.gin_options()?);
    let want = match theorem {
        Theorem::Ci => 0,
        Theorem::Lowerbound => 2,
        _ => 1,
    };
    if paths.len() != want {
        return Err(Failure::Input(format!(
            "check {name} takes {want} ideal file(s), got {}",
            paths.len()
        )));
    }
    let files = paths
        .iter()
        .map(|p| run.read(p))
        .collect::<Result<Vec<_>, _>>()?;
    let need_degree =
        || degree.ok_or_else(|| Failure::Input(format!("check {name} needs --degree <d>")));
    let report: TheoremReport = match theorem {
        Theorem::Bound => verifier::bound_check(&files[0].ideal, &cfg)?,
        Theorem::Identity => verifier::homology_identity_check(&files[0].ideal, &cfg)?,
        Theorem::Maximal => verifier::maximal_equivalences(&files[0].ideal, &cfg)?,
        Theorem::Rigidity => verifier::rigidity_check(&files[0].ideal, &cfg)?,
        Theorem::Lex => verifier::lex_comparison(&files[0].ideal, parse_comparand(against)?, &cfg)?,
        Theorem::Lowerbound => {
            if !files[0].ctx.compatible(&files[1].ctx) {
                return Err(Failure::Input(
                    "both ideals must live in the same ring".into(),
                ));
            }
            let big = files[1].ideal.with_ctx(files[0].ctx.clone())?;
            verifier::lowerbound_check(&files[0].ideal, &big, &cfg)?
        }
        Theorem::Strange => verifier::strange_check(&files[0].ideal, need_degree()?, &cfg)?,
        Theorem::Ci => {
            let n = n.ok_or_else(|| Failure::Input("check ci needs --n <vars>".into()))?;
            let mut ctx = RingCtx::new(n, run.cli.field.unwrap_or_default())?;
            if let Some(g) = run.cli.degree_guard {
                ctx = ctx.with_degree_guard(g);
            }
            let report = verifier::ci_experiment(&ctx, need_degree()?, &cfg)?;
            return Ok(render_report(run, &name, &files, &ctx, report));
        }
        Theorem::Propagation => verifier::propagation_check(&files[0].ideal, &cfg)?,
        Theorem::AlphaInvariance => verifier::alpha_invariance_check(&files[0].ideal, &cfg)?,
    };
    Ok(render_report(
        run,
        &name,
        &files,
        &files[0].ctx.clone(),
        report,
    ))
}

fn render_report(
    run: &Run,
    name: &str,
    files: &[IdealFile],
    ctx: &RingCtx,
    report: TheoremReport,
) -> Rendered {
    let mut doc = run.document(&format!("check {name}"), files, ctx);
    let text = output::report_text(&report);
    let passed = report.status == Status::Pass;
    doc.result = serde_json::to_value(&report).unwrap_or(Value::Null);
    Rendered { doc, text, passed }
}

fn dispatch(cli: &Cli) -> Result<Rendered, Failure> {
    let run = Run { cli };
    match &cli.command {
        Command::Betti { file, method } => cmd_betti(&run, file, *method),
        Command::Gin { file, order } => cmd_gin(&run, file, *order),
        Command::Lex { file } => cmd_lex(&run, file),
        Command::Alpha { file } => cmd_alpha(&run, file),
        Command::Check {
            theorem,
            files,
            degree,
            against,
            n,
        } => cmd_check(&run, *theorem, files, *degree, against, *n),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(r) => {
            print!("{}", r.emit(cli.output));
            ExitCode::from(if r.passed { 0 } else { 1 })
        }
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
