//! `arthur`: one JSON document in, one JSON document out.
//!
//! Exit codes: 0 computed, 1 input error, 2 internal assertion, 3 cap exceeded.

use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use arthur_core::glconstraints::check_constraint;
use arthur_core::induction::{induce, is_reducible, sign_counts};
use arthur_core::multisegment::{character, pi_nonzero, Cuspidal, CuspidalRegistry};
use arthur_core::oracle::{exhaustive_interval_census, packet_sweep};
use arthur_core::schema::{CensusDoc, GLDoc, MultiSegmentBody, MultiSegmentDoc, ParameterDoc, SequenceDoc, UnitaryDoc};
use arthur_core::sequences::{canonical_p2, nv_seq, orbit};
use arthur_core::unitarity::is_unitary;
use arthur_core::{ArthurError, ErrorFamily, DEFAULT_CAP};
use clap::{Args, Parser, Subcommand};
use serde::de::DeserializeOwned;
use serde_json::{json, Map, Value};

const ENGINE_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Parser, Debug)]
#[command(name = "arthur", version, about = "Local Arthur packet computations over JSON documents")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Orbit cap for row-exchange walks.
    #[arg(long, global = true, env = "ARTHUR_CAP", default_value_t = DEFAULT_CAP)]
    cap: usize,
    /// Indent the output document.
    #[arg(long, global = true)]
    pretty: bool,
}

#[derive(Args, Debug)]
struct Input {
    /// Path to the input document, or `-` for standard input.
    input: PathBuf,
}

#[derive(Args, Debug)]
struct Triple {
    /// Path to the input document, or `-` for standard input.
    input: PathBuf,
    /// Name of the cuspidal of the inserted summand.
    #[arg(long)]
    rho: String,
    #[arg(long)]
    a: i64,
    #[arg(long)]
    b: i64,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Whether pi(E) is nonzero (multi-segment document).
    Nonvanishing(Input),
    /// Character of pi(E) on the component group (multi-segment document).
    Character(Input),
    /// Row-exchange orbit of a sequence (sequence document).
    Orbit(Input),
    /// Constituents of u_rho(a,b) ⋊ pi(E) (multi-segment document).
    Induce(Triple),
    /// Whether u_rho(a,b) ⋊ pi(E) is reducible (multi-segment document).
    Reducible(Triple),
    /// Constituent counts by character value (multi-segment document).
    SignCounts(Triple),
    /// Hermitian and unitarity verdicts (unitary document).
    Unitary(Input),
    /// Parity constraint on a GL local component (GL document).
    GlConstraint(Input),
    /// Intervals and adjacency over one segment (census document).
    Census(Input),
    /// Packet sweep for an Arthur parameter (parameter document).
    Sweep {
        #[command(flatten)]
        input: Input,
        /// Largest number of segments per row tried by the sweep.
        #[arg(long, default_value_t = 4)]
        max_rows: usize,
    },
}

/// A failure carried to the error document.
struct Failure {
    kind: String,
    path: String,
    message: String,
    code: u8,
}

impl Failure {
    fn input(kind: &str, path: String, message: String) -> Self {
        Failure {
            kind: kind.to_string(),
            path,
            message,
            code: 1,
        }
    }
}

impl From<ArthurError> for Failure {
    fn from(e: ArthurError) -> Self {
        let code = match e.family() {
            ErrorFamily::Input => 1,
            ErrorFamily::Internal => 2,
            ErrorFamily::Cap => 3,
        };
        Failure {
            kind: e.kind().to_string(),
            path: String::new(),
            message: e.to_string(),
            code,
        }
    }
}

type Outcome = Result<Value, Failure>;

fn read_doc<T: DeserializeOwned>(path: &PathBuf) -> Result<T, Failure> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::input("Io", String::new(), e.to_string()))?;
        s
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| Failure::input("Io", String::new(), format!("{}: {e}", path.display())))?
    };
    let de = &mut serde_json::Deserializer::from_str(&text);
    let doc = serde_path_to_error::deserialize(de).map_err(|e| {
        // Syntax errors carry no usable path; the library renders it as `?`.
        let path = match e.path().to_string() {
            p if p == "?" => String::new(),
            p => p,
        };
        let inner = e.into_inner();
        let kind = if inner.is_syntax() || inner.is_eof() { "Syntax" } else { "Schema" };
        Failure::input(kind, path, inner.to_string())
    })?;
    Ok(doc)
}

fn cuspidal<'a>(reg: &'a CuspidalRegistry, name: &str) -> Result<&'a Cuspidal, Failure> {
    reg.get(name).map_err(|e| {
        let mut f = Failure::from(e);
        f.path = "--rho".to_string();
        f
    })
}

fn run(cli: &Cli) -> Outcome {
    let cap = cli.cap;
    match &cli.command {
        Command::Nonvanishing(i) => {
            let (_, e) = read_doc::<MultiSegmentDoc>(&i.input)?.resolve()?;
            Ok(json!({ "nonzero": pi_nonzero(&e, cap)? }))
        }
        Command::Character(i) => {
            let (_, e) = read_doc::<MultiSegmentDoc>(&i.input)?.resolve()?;
            if !pi_nonzero(&e, cap)? {
                return Ok(json!({ "nonzero": false, "character": null }));
            }
            Ok(json!({ "nonzero": true, "character": character(&e, cap)? }))
        }
        Command::Orbit(i) => {
            let s = read_doc::<SequenceDoc>(&i.input)?.sequence;
            let o = orbit(&s, cap)?;
            let nonvanishing = nv_seq(&s, cap)?;
            let p2 = if nonvanishing { Some(canonical_p2(&s, cap)?) } else { None };
            Ok(json!({
                "size": o.members.len(),
                "members": o.members,
                "nonvanishing": nonvanishing,
                "p2": p2,
            }))
        }
        Command::Induce(t) => {
            let (reg, e) = read_doc::<MultiSegmentDoc>(&t.input)?.resolve()?;
            let r = induce(&e, cuspidal(&reg, &t.rho)?, t.a, t.b, cap)?;
            let constituents = r
                .components
                .iter()
                .map(|c| {
                    Ok(json!({
                        "inserted": c.inserted,
                        "multisegment": MultiSegmentBody::from_domain(&c.multisegment),
                        "character": character(&c.multisegment, cap)?,
                    }))
                })
                .collect::<Result<Vec<Value>, ArthurError>>()?;
            Ok(json!({
                "rho": r.rho,
                "a": r.a,
                "b": r.b,
                "inserted_support": r.inserted_support,
                "components": r.components.len(),
                "constituents": constituents,
            }))
        }
        Command::Reducible(t) => {
            let (reg, e) = read_doc::<MultiSegmentDoc>(&t.input)?.resolve()?;
            Ok(json!({ "reducible": is_reducible(&e, cuspidal(&reg, &t.rho)?, t.a, t.b, cap)? }))
        }
        Command::SignCounts(t) => {
            let (reg, e) = read_doc::<MultiSegmentDoc>(&t.input)?.resolve()?;
            let (plus, minus) = sign_counts(&e, cuspidal(&reg, &t.rho)?, t.a, t.b, cap)?;
            Ok(json!({ "plus": plus, "minus": minus }))
        }
        Command::Unitary(i) => {
            let (_, pi) = read_doc::<UnitaryDoc>(&i.input)?.resolve()?;
            Ok(to_value(is_unitary(&pi, cap)?))
        }
        Command::GlConstraint(i) => {
            let (_, c) = read_doc::<GLDoc>(&i.input)?.resolve()?;
            Ok(to_value(check_constraint(&c)))
        }
        Command::Census(i) => {
            let doc = read_doc::<CensusDoc>(&i.input)?;
            Ok(to_value(exhaustive_interval_census(doc.delta)?))
        }
        Command::Sweep { input, max_rows } => {
            let (_, psi) = read_doc::<ParameterDoc>(&input.input)?.resolve()?;
            let r = packet_sweep(&psi, *max_rows, cap)?;
            let members: Vec<MultiSegmentBody> = r.members.iter().map(MultiSegmentBody::from_domain).collect();
            let mut out = to_value(&r);
            out["members"] = to_value(members);
            Ok(out)
        }
    }
}

fn to_value<T: serde::Serialize>(v: T) -> Value {
    serde_json::to_value(v).expect("output types serialize to JSON")
}

fn render(mut body: Value, pretty: bool) -> String {
    if let Value::Object(map) = &mut body {
        map.insert("engine_version".to_string(), Value::String(ENGINE_VERSION.to_string()));
    }
    let mut text = if pretty {
        serde_json::to_string_pretty(&body)
    } else {
        serde_json::to_string(&body)
    }
    .expect("JSON values serialize");
    text.push('\n');
    text
}

fn error_doc(f: &Failure) -> Value {
    let mut error = Map::new();
    error.insert("kind".to_string(), Value::String(f.kind.clone()));
    error.insert("path".to_string(), Value::String(f.path.clone()));
    error.insert("message".to_string(), Value::String(f.message.clone()));
    json!({ "error": error })
}

fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    // A closed pipe leaves nothing to report to.
    let _ = out.write_all(text.as_bytes()).and_then(|_| out.flush());
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let f = Failure::input("Usage", String::new(), e.render().to_string());
            emit(&render(error_doc(&f), false));
            return ExitCode::from(f.code);
        }
    };
    std::panic::set_hook(Box::new(|_| {}));
    let outcome = std::panic::catch_unwind(|| run(&cli)).unwrap_or_else(|payload| {
        let message = payload
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| payload.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_else(|| "panic".to_string());
        Err(Failure {
            kind: "Panic".to_string(),
            path: String::new(),
            message,
            code: 2,
        })
    });
    match outcome {
        Ok(body) => {
            emit(&render(body, cli.pretty));
            ExitCode::SUCCESS
        }
        Err(f) => {
            emit(&render(error_doc(&f), cli.pretty));
            ExitCode::from(f.code)
        }
    }
}
