//! `g2lf`: verify twist factorizations, run the (4,3) → (14,13) doubling,
//! and print geography certificates.
//!
//! Exit codes
//!
//! | code | meaning |
//! |------|---------|
//! | 0 | success: Identity, Proved, or file written |
//! | 1 | verify: verdict is NotIdentity or HyperellipticInvolution |
//! | 2 | input could not be read or parsed, or is inadmissible |
//! | 3 | certify: verdict Unknown |
//! | 4 | derive/moves: input factorization does not verify |
//! | 5 | derive: seed is not a 7-letter type-(4,3) word |
//! | 6 | derive/moves: lantern configuration fails its checks |
//! | 7 | derive: φ, the lantern boundary and the seed do not fit together |
//! | 8 | derive/moves: result does not verify, or a move is invalid |
//! | 9 | output file could not be written |
//!
//! `G2LF_THREADS` sets the size of the worker pool.

mod manifest;
mod render;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::json;

use g2lf::analysis::{self, AnalysisError, CertVerdict};
use g2lf::artifact::{self, FactorizationFile, LanternFile};
use g2lf::factorization::{
    self as fz, FactorizationError, HurwitzDirection, PositiveFactorization,
};
use g2lf::mcg::{standard_transporter, MappingClassWord, Verdict};

use manifest::Manifest;

pub const EXIT_NOT_IDENTITY: u8 = 1;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_UNKNOWN: u8 = 3;
pub const EXIT_SEED_UNVERIFIED: u8 = 4;
pub const EXIT_SEED_TYPE: u8 = 5;
pub const EXIT_LANTERN: u8 = 6;
pub const EXIT_MISMATCH: u8 = 7;
pub const EXIT_RESULT: u8 = 8;
pub const EXIT_WRITE: u8 = 9;

#[derive(Parser)]
#[command(name = "g2lf", version, about = "Genus-2 Lefschetz fibration toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check that a factorization file multiplies to the identity.
    Verify { path: PathBuf },
    /// Build the type-(14,13) factorization from a (4,3) seed and a lantern.
    Derive {
        #[arg(long)]
        seed: Option<PathBuf>,
        #[arg(long)]
        lantern: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print a minimality, indecomposability or case-analysis certificate.
    Certify {
        n: Option<u64>,
        s: Option<u64>,
        #[arg(long, value_enum)]
        kind: Kind,
    },
    /// List admissible types up to n+2s = 10·max_k.
    Geography {
        #[arg(long = "max-k")]
        max_k: u64,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Apply a scripted list of moves to a factorization file.
    Moves {
        path: PathBuf,
        #[arg(long)]
        script: PathBuf,
        #[arg(long)]
        lantern: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Minimal,
    Indecomposable,
    Theorem1,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum Format {
    Table,
    Json,
}

#[derive(Debug, Deserialize, Serialize)]
#[serde(tag = "op", rename_all = "snake_case", deny_unknown_fields)]
pub enum Move {
    CyclicPermute {
        k: usize,
    },
    Hurwitz {
        index: usize,
        direction: HurwitzDirection,
    },
    Conjugate {
        word: MappingClassWord,
    },
    SquareSwap {
        take: Take,
    },
    Lantern {
        position: usize,
    },
}

#[derive(Debug, Deserialize, Serialize, Clone, Copy)]
#[serde(rename_all = "snake_case")]
pub enum Take {
    First,
    Second,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct Script {
    moves: Vec<Move>,
}

struct Failure {
    code: u8,
    body: serde_json::Value,
}

type Outcome = Result<(u8, serde_json::Value), Failure>;

fn fail(code: u8, message: impl ToString) -> Failure {
    Failure {
        code,
        body: json!({ "error": message.to_string() }),
    }
}

fn read_json<T: for<'de> Deserialize<'de>>(
    path: &Path,
    manifest: &mut Manifest,
) -> Result<T, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| fail(EXIT_INPUT, format!("{}: {e}", path.display())))?;
    manifest.input(path.display().to_string(), text.as_bytes());
    serde_json::from_str(&text)
        .map_err(|e| fail(EXIT_INPUT, format!("{}: schema error: {e}", path.display())))
}

fn load_seed(path: Option<&Path>, manifest: &mut Manifest) -> Result<FactorizationFile, Failure> {
    match path {
        Some(p) => read_json(p, manifest),
        None => {
            manifest.input("bundled:seed_4_3.json", artifact::SEED_4_3_JSON.as_bytes());
            Ok(artifact::bundled_seed())
        }
    }
}

fn load_lantern(path: Option<&Path>, manifest: &mut Manifest) -> Result<LanternFile, Failure> {
    match path {
        Some(p) => read_json(p, manifest),
        None => {
            manifest.input("bundled:lantern.json", artifact::LANTERN_JSON.as_bytes());
            Ok(artifact::bundled_lantern())
        }
    }
}

fn write_output(out: Option<&Path>, file: &FactorizationFile) -> Result<Option<String>, Failure> {
    let text = serde_json::to_string_pretty(file).expect("serializable") + "\n";
    match out {
        Some(p) => {
            std::fs::write(p, &text)
                .map_err(|e| fail(EXIT_WRITE, format!("{}: {e}", p.display())))?;
            Ok(None)
        }
        None => Ok(Some(text)),
    }
}

fn stamp_status(file: &FactorizationFile) -> &'static str {
    match &file.verified_by {
        None => "missing",
        Some(_) if file.stamp_matches() => "valid",
        Some(_) => "mismatch",
    }
}

fn cmd_verify(path: &Path) -> Outcome {
    let mut manifest = Manifest::start("verify");
    let file: FactorizationFile = read_json(path, &mut manifest)?;
    let pf = file.factorization();
    let cert = fz::verify(&pf);
    manifest.verdict("verify", format!("{:?}", cert.verdict));
    let code = if cert.verdict == Verdict::Identity {
        0
    } else {
        EXIT_NOT_IDENTITY
    };
    Ok((
        code,
        json!({
            "certificate": cert,
            "type": fz::type_of(&pf),
            "letters": pf.len(),
            "stamp": stamp_status(&file),
            "manifest": manifest.finish(),
        }),
    ))
}

fn map_derive_error(e: FactorizationError) -> Failure {
    let code = match e {
        FactorizationError::NotIdentity(_) => EXIT_SEED_UNVERIFIED,
        FactorizationError::WrongSeedType { .. } | FactorizationError::NoNonseparatingLetter => {
            EXIT_SEED_TYPE
        }
        FactorizationError::InvalidLantern(_) => EXIT_LANTERN,
        FactorizationError::PhiMismatch
        | FactorizationError::NotDisjoint
        | FactorizationError::BoundaryMismatch(_) => EXIT_MISMATCH,
        FactorizationError::DerivedInvalid(_) | FactorizationError::IndexOutOfRange { .. } => {
            EXIT_RESULT
        }
    };
    fail(code, e)
}

fn cmd_derive(seed: Option<&Path>, lantern: Option<&Path>, out: Option<&Path>) -> Outcome {
    let mut manifest = Manifest::start("derive");
    let seed = load_seed(seed, &mut manifest)?.factorization();
    let cfg = load_lantern(lantern, &mut manifest)?.config();
    let phi = standard_transporter(1, 5).expect("valid chain indices");
    let derived = fz::derive_14_13(&seed, &phi, &cfg).map_err(map_derive_error)?;
    let ty = fz::type_of(&derived);
    let sig = analysis::signature(ty.n, ty.s).map_err(|e| fail(EXIT_RESULT, e))?;
    manifest.verdict("seed", "Identity");
    manifest.verdict("lantern", "passes");
    manifest.verdict("derived", "Identity");
    let mut file = FactorizationFile::stamped(&derived).map_err(|e| fail(EXIT_RESULT, e))?;
    let manifest = manifest.finish();
    file.manifest = Some(manifest.clone());
    let printed = write_output(out, &file)?;
    let summary = json!({
        "type": ty,
        "letters": derived.len(),
        "signature": sig,
        "euler": analysis::euler(ty.n, ty.s),
        "verified_by": file.verified_by,
        "out": out.map(|p| p.display().to_string()),
        "manifest": manifest,
    });
    Ok((
        0,
        printed
            .map(|t| serde_json::from_str(&t).unwrap())
            .unwrap_or(summary),
    ))
}

fn cmd_certify(n: Option<u64>, s: Option<u64>, kind: Kind) -> Outcome {
    let verdict_code = |v: CertVerdict| {
        if v == CertVerdict::Proved {
            0
        } else {
            EXIT_UNKNOWN
        }
    };
    let pair = || match (n, s) {
        (Some(n), Some(s)) => Ok((n, s)),
        _ => Err(fail(EXIT_INPUT, "n and s are required for this kind")),
    };
    let to_failure = |e: AnalysisError| match e {
        AnalysisError::Inadmissible(report) => Failure {
            code: EXIT_INPUT,
            body: json!({ "error": "inadmissible type", "admissibility": report }),
        },
        other => fail(EXIT_INPUT, other),
    };
    match kind {
        Kind::Minimal => {
            let (n, s) = pair()?;
            let cert = analysis::certify_minimal(n, s).map_err(to_failure)?;
            Ok((verdict_code(cert.verdict), json!(cert)))
        }
        Kind::Indecomposable => {
            let (n, s) = pair()?;
            let cert = analysis::certify_indecomposable(n, s).map_err(to_failure)?;
            let parts = analysis::decompositions(n, s);
            Ok((
                verdict_code(cert.verdict),
                json!({ "certificate": cert, "decompositions": parts }),
            ))
        }
        Kind::Theorem1 => {
            let report = analysis::theorem1_report();
            Ok((verdict_code(report.verdict), json!(report)))
        }
    }
}

fn apply_move(
    pf: &PositiveFactorization,
    mv: &Move,
    lantern: &dyn Fn() -> Result<fz::LanternConfig, Failure>,
) -> Result<PositiveFactorization, Failure> {
    let invalid = |e: FactorizationError| fail(EXIT_RESULT, e);
    Ok(match mv {
        Move::CyclicPermute { k } => fz::cyclic_permute(pf, *k),
        Move::Hurwitz { index, direction } => {
            fz::hurwitz_move(pf, *index, *direction).map_err(invalid)?
        }
        Move::Conjugate { word } => fz::global_conjugate(pf, word),
        Move::SquareSwap { take } => {
            let (a, b) = fz::square_swap(pf).map_err(invalid)?;
            match take {
                Take::First => a,
                Take::Second => b,
            }
        }
        Move::Lantern { position } => {
            let cfg = lantern()?;
            fz::lantern_substitute(pf, *position, &cfg).map_err(|e| match e {
                FactorizationError::InvalidLantern(_) => fail(EXIT_LANTERN, e),
                e => fail(EXIT_RESULT, e),
            })?
        }
    })
}

fn cmd_moves(path: &Path, script: &Path, lantern: Option<&Path>, out: Option<&Path>) -> Outcome {
    let mut manifest = Manifest::start("moves");
    let file: FactorizationFile = read_json(path, &mut manifest)?;
    let script: Script = read_json(script, &mut manifest)?;
    let cfg = match lantern {
        Some(p) => Some(read_json::<LanternFile>(p, &mut manifest)?.config()),
        None => None,
    };
    let get_lantern = || -> Result<fz::LanternConfig, Failure> {
        Ok(cfg
            .clone()
            .unwrap_or_else(|| artifact::bundled_lantern().config()))
    };
    let mut pf = file.factorization();
    if fz::verify(&pf).verdict != Verdict::Identity {
        return Err(fail(
            EXIT_SEED_UNVERIFIED,
            "input factorization does not verify",
        ));
    }
    let before = fz::type_of(&pf);
    for mv in &script.moves {
        pf = apply_move(&pf, mv, &get_lantern)?;
    }
    let cert = fz::verify(&pf);
    if cert.verdict != Verdict::Identity {
        return Err(fail(
            EXIT_RESULT,
            format!("result verdict {:?}", cert.verdict),
        ));
    }
    manifest.verdict("result", "Identity");
    let mut stamped = FactorizationFile::stamped(&pf).map_err(|e| fail(EXIT_RESULT, e))?;
    let manifest = manifest.finish();
    stamped.manifest = Some(manifest.clone());
    let printed = write_output(out, &stamped)?;
    let summary = json!({
        "type_before": before,
        "type_after": fz::type_of(&pf),
        "letters": pf.len(),
        "verified_by": stamped.verified_by,
        "manifest": manifest,
    });
    Ok((
        0,
        printed
            .map(|t| serde_json::from_str(&t).unwrap())
            .unwrap_or(summary),
    ))
}

fn emit(text: &str) {
    use std::io::Write;
    let _ = std::io::stdout().write_all(text.as_bytes());
}

fn configure_threads() {
    if let Some(n) = std::env::var("G2LF_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
    {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global();
    }
}

fn main() -> ExitCode {
    configure_threads();
    let cli = Cli::parse();
    if let Command::Geography { max_k, format } = cli.command {
        if max_k == 0 {
            eprintln!("{}", json!({ "error": "max-k must be at least 1" }));
            return ExitCode::from(EXIT_INPUT);
        }
        emit(&render::geography(max_k, format));
        return ExitCode::SUCCESS;
    }
    let outcome = match &cli.command {
        Command::Verify { path } => cmd_verify(path),
        Command::Derive { seed, lantern, out } => {
            cmd_derive(seed.as_deref(), lantern.as_deref(), out.as_deref())
        }
        Command::Certify { n, s, kind } => cmd_certify(*n, *s, *kind),
        Command::Moves {
            path,
            script,
            lantern,
            out,
        } => cmd_moves(path, script, lantern.as_deref(), out.as_deref()),
        Command::Geography { .. } => unreachable!(),
    };
    match outcome {
        Ok((code, body)) => {
            emit(&(serde_json::to_string_pretty(&body).unwrap() + "\n"));
            ExitCode::from(code)
        }
        Err(Failure { code, body }) => {
            eprintln!("{}", serde_json::to_string_pretty(&body).unwrap());
            ExitCode::from(code)
        }
    }
}
