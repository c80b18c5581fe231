use clap::ValueEnum;
use serde::Serialize;
use serde_json::Value;

use ginbetti::ring::RingCtx;
use ginbetti::verifier::{Status, TheoremReport};

use crate::input::IdealFile;
use crate::Cli;

pub const CHAR0_CAVEAT: &str =
    "computed over a prime field; characteristic-0 statements are used at your own risk";

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Serialize)]
pub struct RingDoc {
    pub n: usize,
    pub field: String,
    pub vars: Vec<String>,
}

impl RingDoc {
    fn of(ctx: &RingCtx) -> Self {
        RingDoc {
            n: ctx.n(),
            field: ctx.field().to_string(),
            vars: ctx.names().to_vec(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct InputDoc {
    pub file: String,
    pub ring: RingDoc,
    pub order: String,
    pub gens: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct ConfigDoc {
    pub seed: Option<u64>,
    pub field: String,
    pub trials: usize,
    pub bound: i64,
    pub degree_guard: u32,
}

/// The single structured document a run emits.
#[derive(Debug, Serialize)]
pub struct Document {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: String,
    pub inputs: Vec<InputDoc>,
    pub config: ConfigDoc,
    pub char0_caveat: bool,
    pub result: Value,
}

impl Document {
    pub fn new(command: &str, files: &[IdealFile], ctx: &RingCtx, cli: &Cli) -> Self {
        Document {
            tool: "ginbetti",
            version: env!("CARGO_PKG_VERSION"),
            command: command.to_string(),
            inputs: files
                .iter()
                .map(|f| InputDoc {
                    file: f.path.clone(),
                    ring: RingDoc::of(&f.ctx),
                    order: f.order.name().to_string(),
                    gens: f.gens.clone(),
                })
                .collect(),
            config: ConfigDoc {
                seed: cli.seed,
                field: ctx.field().to_string(),
                trials: cli.trials,
                bound: cli.bound,
                degree_guard: ctx.degree_guard(),
            },
            char0_caveat: !ctx.field().is_char_zero(),
            result: Value::Null,
        }
    }

    fn header(&self) -> String {
        let mut h = format!("ginbetti {}  field={}", self.command, self.config.field);
        if let Some(s) = self.config.seed {
            h.push_str(&format!(
                "  seed={s}  trials={}  bound={}",
                self.config.trials, self.config.bound
            ));
        }
        for i in &self.inputs {
            h.push_str(&format!("\ninput: {} ({} vars)", i.file, i.ring.n));
        }
        h.push('\n');
        if self.char0_caveat {
            h.push_str(&format!("warning: {CHAR0_CAVEAT}\n"));
        }
        h
    }
}

pub struct Rendered {
    pub doc: Document,
    pub text: String,
    pub passed: bool,
}

impl Rendered {
    pub fn ok(doc: Document, text: String) -> Self {
        Rendered {
            doc,
            text,
            passed: true,
        }
    }

    pub fn emit(&self, format: Format) -> String {
        match format {
            Format::Text => format!("{}{}", self.doc.header(), self.text),
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.doc).unwrap_or_default();
                s.push('\n');
                s
            }
        }
    }
}

pub fn report_text(r: &TheoremReport) -> String {
    let status = match r.status {
        Status::Pass => "PASS",
        Status::Fail => "FAIL",
        Status::NotApplicable => "NOT APPLICABLE",
    };
    let mut out = format!("{}: {status}\n", r.theorem);
    for v in &r.verdicts {
        let mark = if v.holds { "ok  " } else { "FAIL" };
        out.push_str(&format!("  [{mark}] {}  (via {})\n", v.name, v.via));
    }
    for f in &r.facts {
        out.push_str(&format!("  fact: {} = {}\n", f.name, f.value));
    }
    for n in &r.notes {
        out.push_str(&format!("  note: {n}\n"));
    }
    for (k, v) in &r.witness {
        out.push_str(&format!("  {k} = {v}\n"));
    }
    out
}
