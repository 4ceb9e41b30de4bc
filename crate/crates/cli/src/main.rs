use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};
use yblie_cli::commands::{self, ConstructError, Construction, VerifiedFile};
use yblie_cli::manifest::MatrixSpec;
use yblie_cli::{bundled, convert, render, CliError, Manifest};
use yblie_core::RatMatrix;

/// Check and build Lie algebras, Yang-Baxter operators and YB-Lie algebras
/// described in JSON manifests. All output is JSON.
#[derive(Parser)]
#[command(name = "yblie", version)]
struct Cli {
    /// Accepted for compatibility; JSON is the only output mode.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the axiom battery of one entry. Exit 0 if every required axiom
    /// holds, 1 if one fails, 2 on input errors.
    Check { manifest: PathBuf, entry: String },
    /// Build a new structure from an entry and check it.
    Construct {
        manifest: PathBuf,
        /// commutator, hom-deform, primitives, dualize, transport,
        /// hom-iso-functor or forgetful-functor
        kind: String,
        #[arg(long)]
        from: String,
        /// JSON matrix (list of rows of rational strings), or a
        /// comma-separated diagonal such as `4,1,1/4`
        #[arg(long)]
        alpha: Option<String>,
        #[arg(long)]
        name: Option<String>,
        /// Write the resulting manifest here instead of embedding it in the report.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check every entry of the bundled corpus (or of every `*.json` in
    /// `--dir`) against its expected failures.
    CorpusVerify {
        #[arg(long)]
        dir: Option<PathBuf>,
    },
}

fn emit(v: &Value) {
    print!("{}", render::to_text(v));
}

fn input_error(e: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {e}");
    emit(&json!({ "error": e.to_string() }));
    ExitCode::from(2)
}

fn parse_alpha(s: &str) -> Result<RatMatrix, CliError> {
    let t = s.trim();
    if t.starts_with('[') || t.starts_with('{') {
        let spec: MatrixSpec =
            serde_json::from_str(t).map_err(|e| CliError::Parse(format!("--alpha: {e}")))?;
        return convert::matrix(&spec);
    }
    let diag: Vec<String> = t.split(',').map(|x| x.trim().to_string()).collect();
    Ok(RatMatrix::diag(&convert::vector(&diag)?))
}

fn run_check(path: &Path, entry: &str) -> ExitCode {
    let result = Manifest::load(path).and_then(|m| commands::check(&m, entry));
    match result {
        Ok(report) => {
            emit(&serde_json::to_value(&report).expect("report serializes"));
            ExitCode::from(report.exit_code() as u8)
        }
        Err(e) => input_error(e),
    }
}

fn run_construct(
    path: &Path,
    kind: &str,
    from: &str,
    alpha: Option<&str>,
    name: Option<&str>,
    out: Option<&Path>,
) -> ExitCode {
    let Some(construction) = Construction::parse(kind) else {
        let known: Vec<_> = Construction::ALL.iter().map(|c| c.name()).collect();
        return input_error(format!("unknown construction {kind:?}; expected one of {known:?}"));
    };
    let manifest = match Manifest::load(path) {
        Ok(m) => m,
        Err(e) => return input_error(e),
    };
    let alpha = match alpha.map(parse_alpha).transpose() {
        Ok(a) => a,
        Err(e) => return input_error(e),
    };
    match commands::construct(&manifest, construction, from, alpha.as_ref(), name) {
        Ok(c) => {
            let mut v = json!({ "construction": construction.name() });
            let map = v.as_object_mut().expect("object");
            let report = serde_json::to_value(&c.report).expect("report serializes");
            map.extend(report.as_object().expect("object").clone());
            if let Some(b) = &c.basis {
                map.insert("basis".into(), json!(b));
            }
            match out {
                Some(p) => {
                    if let Err(e) = std::fs::write(p, c.manifest.to_json()) {
                        return input_error(format!("cannot write {}: {e}", p.display()));
                    }
                    map.insert("output".into(), json!(p.display().to_string()));
                }
                None => {
                    let m = serde_json::to_value(&c.manifest).expect("manifest serializes");
                    map.insert("manifest".into(), m);
                }
            }
            emit(&v);
            ExitCode::from(c.report.exit_code() as u8)
        }
        Err(ConstructError::Precondition { reason, message }) => {
            eprintln!("{message}");
            emit(&json!({
                "construction": construction.name(),
                "reason": reason,
                "error": message,
            }));
            ExitCode::from(1)
        }
        Err(ConstructError::Input(e)) => input_error(e),
    }
}

fn run_corpus_verify(dir: Option<&Path>) -> ExitCode {
    let files: Vec<VerifiedFile> = match dir {
        None => bundled::FILES
            .iter()
            .map(|(name, text)| commands::verify_text(name, text))
            .collect(),
        Some(d) => {
            let mut paths: Vec<PathBuf> = match std::fs::read_dir(d) {
                Ok(rd) => rd
                    .filter_map(|e| e.ok().map(|e| e.path()))
                    .filter(|p| p.extension().is_some_and(|x| x == "json"))
                    .collect(),
                Err(e) => return input_error(format!("cannot read {}: {e}", d.display())),
            };
            paths.sort();
            let mut out = Vec::new();
            for p in paths {
                match std::fs::read_to_string(&p) {
                    Ok(text) => out.push(commands::verify_text(&p.display().to_string(), &text)),
                    Err(e) => return input_error(format!("cannot read {}: {e}", p.display())),
                }
            }
            out
        }
    };
    let ok = files.iter().all(VerifiedFile::ok);
    let input_failure = files.iter().any(|f| f.error.is_some());
    emit(&json!({ "ok": ok, "files": files }));
    ExitCode::from(match (ok, input_failure) {
        (true, _) => 0,
        (false, true) => 2,
        (false, false) => 1,
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let _ = cli.json;
    match &cli.command {
        Command::Check { manifest, entry } => run_check(manifest, entry),
        Command::Construct {
            manifest,
            kind,
            from,
            alpha,
            name,
            out,
        } => run_construct(
            manifest,
            kind,
            from,
            alpha.as_deref(),
            name.as_deref(),
            out.as_deref(),
        ),
        Command::CorpusVerify { dir } => run_corpus_verify(dir.as_deref()),
    }
}
