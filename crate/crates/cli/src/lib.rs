//! The `udrs` command: build, inspect and disambiguate UDRSs, enumerate
//! readings, and run golden corpora.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use udrs_core::corpus::{parse_corpus, run_corpus};
use udrs_core::render::{drs_box, drs_json, to_dot, udrs_text};
use udrs_core::serial::to_value;
use udrs_core::{enumerate_with, EnumOptions, Error, Interpretation, Interpreter, Knowledge, Lexicon, Naming};

#[derive(Parser, Debug)]
#[command(name = "udrs", version, about = "Underspecified DRS construction and scope enumeration")]
struct Cli {
    /// Lexicon file replacing the built-in vocabulary.
    #[arg(long, global = true, value_name = "FILE")]
    lexicon: Option<PathBuf>,
    /// Plural disambiguation rules file.
    #[arg(long, global = true, value_name = "FILE")]
    rules: Option<PathBuf>,
    /// Run a golden corpus file and report mismatches.
    #[arg(long, value_name = "FILE")]
    corpus: Option<PathBuf>,
    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Interpret a sentence or discourse.
    Parse(ParseArgs),
    /// Run a golden corpus file.
    Corpus { file: PathBuf },
}

#[derive(Args, Debug)]
struct ParseArgs {
    text: String,
    /// Print the UDRS as canonical JSON.
    #[arg(long)]
    json: bool,
    /// Print the UDRS as a Graphviz digraph.
    #[arg(long)]
    dot: bool,
    /// Enumerate the fully scoped readings.
    #[arg(long)]
    readings: bool,
    /// Branch pending plurals both ways when enumerating.
    #[arg(long)]
    expand_plurals: bool,
    /// Print the derivation tree.
    #[arg(long)]
    trace_syntax: bool,
    /// Print the constraints each node adds.
    #[arg(long)]
    trace_semantics: bool,
    /// Force a plural reading: np<k>=collective|distributive.
    #[arg(long, value_name = "NP=READING")]
    disambiguate: Vec<String>,
}

struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure { code: 1, message: e.to_string() }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: 2, message: message.into() }
}

fn io(e: std::io::Error) -> Failure {
    Failure { code: 1, message: e.to_string() }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure {
        code: 1,
        message: format!("{}: {e}", path.display()),
    })
}

/// Runs the command line `args` (program name first) and returns the exit
/// status: 0 on success, 1 on semantic errors or corpus mismatches, 2 on
/// usage errors.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    match execute(cli, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn execute(cli: Cli, out: &mut dyn Write) -> Result<i32, Failure> {
    let lexicon = match &cli.lexicon {
        Some(p) => Lexicon::parse(&read(p)?)?,
        None => Lexicon::builtin(),
    };
    let mut knowledge = Knowledge::from_lexicon(&lexicon);
    if let Some(p) = &cli.rules {
        knowledge.add_rules(&read(p)?)?;
    }
    match (cli.command, cli.corpus) {
        (Some(Command::Corpus { file }), None) | (None, Some(file)) => corpus(&file, &lexicon, &knowledge, out),
        (Some(Command::Parse(args)), None) => parse(&args, &lexicon, knowledge, out),
        (Some(_), Some(_)) => Err(usage("--corpus cannot be combined with a subcommand")),
        (None, None) => Err(usage("nothing to do; use `parse <TEXT>`, `corpus <FILE>` or --corpus <FILE>")),
    }
}

fn corpus(file: &Path, lexicon: &Lexicon, knowledge: &Knowledge, out: &mut dyn Write) -> Result<i32, Failure> {
    let cases = parse_corpus(&read(file)?)?;
    let base = file.parent().unwrap_or(Path::new("."));
    let reports = run_corpus(&cases, lexicon, knowledge, base);
    let mut failed = 0;
    for r in &reports {
        let status = if r.passed() { "ok  " } else { "FAIL" };
        writeln!(out, "{status} line {:>3}: {}", r.case.line, r.case.text).map_err(io)?;
        for f in &r.failures {
            writeln!(out, "       {f}").map_err(io)?;
        }
        failed += usize::from(!r.passed());
    }
    writeln!(out, "{} cases, {} failed", reports.len(), failed).map_err(io)?;
    Ok(i32::from(failed > 0))
}

fn parse(args: &ParseArgs, lexicon: &Lexicon, mut knowledge: Knowledge, out: &mut dyn Write) -> Result<i32, Failure> {
    for d in &args.disambiguate {
        let (target, reading) = Knowledge::parse_override(d).map_err(usage)?;
        knowledge.add_override(target, reading);
    }
    let interp = Interpreter::new(lexicon, &knowledge).interpret_first(&args.text)?;
    if args.trace_syntax {
        writeln!(out, "{}", interp.tree.bracketed()).map_err(io)?;
    }
    if args.trace_semantics {
        trace_semantics(&interp, out)?;
    }
    let u = interp.udrs();
    let naming = Naming::new(u);
    let readings = if args.readings {
        let opts = EnumOptions { expand_plurals: args.expand_plurals };
        Some(enumerate_with(u, opts)?)
    } else {
        None
    };
    if args.json {
        let doc = to_value(u);
        let text = match &readings {
            None => serde_json::to_string_pretty(&doc),
            Some(rs) => {
                let mut n = naming.clone();
                rs.iter().for_each(|d| n.extend_referents(d.referents()));
                let name = |r| n.r(r);
                let rs: Vec<_> = rs.iter().map(|d| drs_json(d, &name)).collect();
                serde_json::to_string_pretty(&json!({"udrs": doc, "readings": rs}))
            }
        }
        .expect("JSON values always serialize");
        writeln!(out, "{text}").map_err(io)?;
    } else if args.dot {
        write!(out, "{}", to_dot(u)).map_err(io)?;
    } else {
        write!(out, "{}", udrs_text(u)).map_err(io)?;
    }
    if let (Some(rs), false) = (&readings, args.json) {
        let mut n = naming.clone();
        rs.iter().for_each(|d| n.extend_referents(d.referents()));
        let name = |r| n.r(r);
        writeln!(out, "{} reading{}", rs.len(), if rs.len() == 1 { "" } else { "s" }).map_err(io)?;
        for (i, d) in rs.iter().enumerate() {
            writeln!(out, "reading {}:", i + 1).map_err(io)?;
            write!(out, "{}", drs_box(d, &name)).map_err(io)?;
        }
    }
    Ok(0)
}

fn trace_semantics(interp: &Interpretation, out: &mut dyn Write) -> Result<(), Failure> {
    let naming = Naming::new(interp.udrs());
    for node in interp.tree.walk() {
        if node.is_leaf() {
            continue;
        }
        let words: Vec<String> = node.yield_tokens().iter().map(|t| t.to_string()).collect();
        let added: Vec<String> = node.introduced.iter().map(|c| naming.constraint_text(c)).collect();
        writeln!(
            out,
            "{:<10} {:<3} [{}] +{{{}}}",
            node.construction.to_string(),
            node.cat.to_string(),
            words.join(" "),
            added.join(", ")
        )
        .map_err(io)?;
    }
    for step in &interp.steps {
        let key = step.decision.target.key;
        writeln!(
            out,
            "pl_dis     <{}, {}> {:?}",
            naming.l(key.max),
            naming.l(key.min),
            step.decision.verdict
        )
        .map_err(io)?;
    }
    Ok(())
}
