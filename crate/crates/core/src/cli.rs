//! The `sl2hat` command line.
//!
//! Exit codes: 0 success, 1 failed verification or oracle disagreement,
//! 2 malformed or invalid input, 3 unwritable output path.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Read;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::iso::{psi_inverse, to_path};
use crate::kk::{decomposition, decomposition_via_crystal, dominant_set, KkSpec};
use crate::partition::{enumerate_regular, ChargedPartition};
use crate::path::LsPath;
use crate::tensor::crystal_graph;
use crate::verify::{self, Limits, Suite};
use crate::weight::Fundamental;

#[derive(Debug, Parser)]
#[command(name = "sl2hat", version, about = "Level-1 crystals of affine sl2 and their tensor products")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Map a charged partition to its LS path, or an LS path back.
    Convert(ConvertArgs),
    /// Multiplicity table of a Kostant-Kumar crystal.
    Decompose(DecomposeArgs),
    /// Truncated crystal graph of a Kostant-Kumar crystal.
    Graph(GraphArgs),
    /// Run an exhaustive consistency suite.
    Verify(VerifyArgs),
    /// List regular charged partitions.
    Enumerate(EnumerateArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Tsv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Tsv,
    Json,
    /// One `V(weight) × multiplicity` line per summand.
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GraphFormat {
    Dot,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    Iso,
    Signatures,
    Bruhat,
    Kk,
    Tensor,
    All,
}

#[derive(Debug, Args)]
struct ConvertArgs {
    /// JSON text; read from standard input when absent.
    input: Option<String>,
    /// Print paths with explicit directions and turning times.
    #[arg(long)]
    verbose: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct DecomposeArgs {
    #[arg(long, value_parser = clap::value_parser!(u8).range(0..=1))]
    lambda: u8,
    #[arg(long)]
    p: u32,
    #[arg(long, default_value_t = 6)]
    cutoff: u32,
    #[arg(long, value_enum, default_value_t = TableFormat::Tsv)]
    format: TableFormat,
    /// Also count highest weight elements of the crystal and compare.
    #[arg(long)]
    oracle: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct GraphArgs {
    #[arg(long, value_parser = clap::value_parser!(u8).range(0..=1))]
    lambda: u8,
    #[arg(long)]
    p: u32,
    #[arg(long, default_value_t = 12)]
    max_boxes: u32,
    #[arg(long, value_enum, default_value_t = GraphFormat::Dot)]
    format: GraphFormat,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(value_enum)]
    suite: SuiteArg,
    #[arg(long, default_value_t = 12)]
    max_boxes: u32,
    #[arg(long, default_value_t = 7)]
    p_max: u32,
    #[arg(long, default_value_t = 8)]
    len_max: u32,
    #[arg(long, default_value_t = 6)]
    cutoff: u32,
    /// Emit a JSON report instead of text.
    #[arg(long)]
    json: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct EnumerateArgs {
    /// Charge of the partitions.
    #[arg(long, value_parser = clap::value_parser!(u8).range(0..=1), default_value_t = 0)]
    lambda: u8,
    #[arg(long, default_value_t = 12)]
    max_boxes: u32,
    /// Charge-0 right factors `b2` with `∅ ⊗ b2` highest weight in
    /// `B(Λ_lambda) ⊗ B(Λ0)`: distinct odd (λ = 0) or even (λ = 1) parts.
    #[arg(long)]
    dominant: bool,
    #[arg(long, value_enum, default_value_t = Format::Tsv)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug)]
enum Failure {
    Input(String),
    Write(PathBuf, std::io::Error),
    Check(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Check(_) => 1,
            Failure::Input(_) => 2,
            Failure::Write(..) => 3,
        }
    }
}

impl From<crate::Error> for Failure {
    fn from(e: crate::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

fn fundamental(flag: u8) -> Fundamental {
    if flag == 0 {
        Fundamental::L0
    } else {
        Fundamental::L1
    }
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| Failure::Write(path.to_path_buf(), e)),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

/// Parses arguments and runs; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    let result = match cli.command {
        Command::Convert(a) => convert(a),
        Command::Decompose(a) => decompose(a),
        Command::Graph(a) => graph(a),
        Command::Verify(a) => verify_cmd(a),
        Command::Enumerate(a) => enumerate(a),
    };
    match result {
        Ok(()) => 0,
        Err(f) => {
            match &f {
                Failure::Input(msg) => eprintln!("error: {msg}"),
                Failure::Write(path, e) => eprintln!("error: cannot write {}: {e}", path.display()),
                Failure::Check(msg) => eprintln!("{msg}"),
            }
            f.code()
        }
    }
}

fn convert(a: ConvertArgs) -> Result<(), Failure> {
    let text = match a.input {
        Some(t) => t,
        None => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| Failure::Input(format!("cannot read standard input: {e}")))?;
            buf
        }
    };
    let value: Value =
        serde_json::from_str(&text).map_err(|e| Failure::Input(format!("malformed JSON: {e}")))?;
    let output = if value.get("parts").is_some() {
        let cp: ChargedPartition = serde_json::from_value(value)
            .map_err(|e| Failure::Input(format!("invalid charged partition: {e}")))?;
        let path = to_path(&cp)?;
        if a.verbose {
            serde_json::to_value(path.verbose())
        } else {
            serde_json::to_value(&path)
        }
    } else if value.get("shape").is_some() {
        let path: LsPath = serde_json::from_value(value)
            .map_err(|e| Failure::Input(format!("invalid LS path: {e}")))?;
        serde_json::to_value(psi_inverse(&path))
    } else {
        return Err(Failure::Input(
            "expected an object with \"parts\" or \"shape\"".into(),
        ));
    }
    .expect("serializes");
    let mut s = serde_json::to_string(&output).expect("serializes");
    s.push('\n');
    emit(a.out.as_deref(), &s)
}

fn decompose(a: DecomposeArgs) -> Result<(), Failure> {
    let spec = KkSpec::new(fundamental(a.lambda), a.p)?;
    let table = decomposition(&spec, a.cutoff);
    let agrees = a.oracle.then(|| decomposition_via_crystal(&spec, a.cutoff) == table);
    let text = match a.format {
        TableFormat::Tsv => table.to_tsv(),
        TableFormat::Text => table.summand_lines(),
        TableFormat::Json => {
            let mut v = table.to_json_value();
            v["p"] = json!(a.p);
            if let Some(ok) = agrees {
                v["oracle_agrees"] = json!(ok);
            }
            pretty(&v)
        }
    };
    emit(a.out.as_deref(), &text)?;
    match agrees {
        Some(true) => {
            eprintln!("oracle: crystal count agrees");
            Ok(())
        }
        Some(false) => Err(Failure::Check(
            "oracle: crystal count disagrees with the generating function".into(),
        )),
        None => Ok(()),
    }
}

fn graph(a: GraphArgs) -> Result<(), Failure> {
    let spec = KkSpec::new(fundamental(a.lambda), a.p)?;
    let g = crystal_graph(&spec.members(a.max_boxes), a.max_boxes);
    let text = match a.format {
        GraphFormat::Dot => g.to_dot(),
        GraphFormat::Json => {
            let mut s = g.to_json();
            s.push('\n');
            s
        }
    };
    emit(a.out.as_deref(), &text)?;
    let counts = format!("vertices\t{}\nedges\t{}", g.vertex_count(), g.edge_count());
    if a.out.is_some() {
        println!("{counts}");
    } else {
        eprintln!("{counts}");
    }
    Ok(())
}

fn verify_cmd(a: VerifyArgs) -> Result<(), Failure> {
    let suites: Vec<Suite> = match a.suite {
        SuiteArg::Iso => vec![Suite::Iso],
        SuiteArg::Signatures => vec![Suite::Signatures],
        SuiteArg::Bruhat => vec![Suite::Bruhat],
        SuiteArg::Kk => vec![Suite::Kk],
        SuiteArg::Tensor => vec![Suite::Tensor],
        SuiteArg::All => Suite::ALL.to_vec(),
    };
    let limits = Limits {
        max_boxes: a.max_boxes,
        p_max: a.p_max,
        len_max: a.len_max,
        cutoff: a.cutoff,
    };
    let reports: Vec<verify::Report> = suites.iter().map(|&s| verify::run(s, &limits)).collect();
    let text = if a.json {
        pretty(&serde_json::to_value(&reports).expect("serializes"))
    } else {
        let mut s = String::new();
        for r in &reports {
            let _ = writeln!(s, "{r}");
        }
        s
    };
    emit(a.out.as_deref(), &text)?;
    let failed: Vec<&str> = reports.iter().filter(|r| !r.passed()).map(|r| r.suite).collect();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Failure::Check(format!("verification failed: {}", failed.join(", "))))
    }
}

fn enumerate(a: EnumerateArgs) -> Result<(), Failure> {
    let lambda = fundamental(a.lambda);
    let items = if a.dominant {
        // dominant partitions live in the charge-0 crystal
        dominant_set(lambda, a.max_boxes, a.max_boxes)
    } else {
        enumerate_regular(lambda.node(), a.max_boxes)
    };
    let text = match a.format {
        Format::Tsv => {
            let mut s = String::from("parts\tcharge\tsize\tweight\tpath_n\tpath_steps\n");
            for b in &items {
                let path = to_path(b)?;
                let parts: Vec<String> = b.parts().iter().map(u32::to_string).collect();
                let steps: Vec<String> = path.steps().iter().map(u32::to_string).collect();
                let _ = writeln!(
                    s,
                    "{}\t{}\t{}\t{}\t{}\t{}",
                    parts.join(","),
                    b.charge(),
                    b.size(),
                    b.weight(),
                    path.n(),
                    steps.join(",")
                );
            }
            s
        }
        Format::Json => {
            let rows: Result<Vec<Value>, Failure> = items
                .iter()
                .map(|b| {
                    Ok(json!({
                        "partition": b,
                        "size": b.size(),
                        "weight": b.weight(),
                        "path": to_path(b)?,
                    }))
                })
                .collect();
            pretty(&Value::Array(rows?))
        }
    };
    emit(a.out.as_deref(), &text)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_errors_exit_with_two() {
        assert_eq!(run(["sl2hat", "decompose", "--lambda", "3", "--p", "1"]), 2);
        assert_eq!(run(["sl2hat", "nonsense"]), 2);
    }

    #[test]
    fn parity_violation_exits_with_two() {
        assert_eq!(run(["sl2hat", "decompose", "--lambda", "1", "--p", "1"]), 2);
    }

    #[test]
    fn malformed_json_exits_with_two() {
        assert_eq!(run(["sl2hat", "convert", "{not json"]), 2);
        assert_eq!(run(["sl2hat", "convert", r#"{"parts":[2,2],"charge":0}"#]), 2);
        assert_eq!(run(["sl2hat", "convert", r#"{"x":1}"#]), 2);
    }
}
