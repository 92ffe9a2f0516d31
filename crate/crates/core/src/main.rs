//! Command-line surface over the library: build catalog algebras, analyze
//! invariants and cohomology, verify deformations and degenerations, and
//! run the full claim-verification suite.
//!
//! Exit codes: 0 success, 1 verification failure (verify-paper), 2 bad
//! input or parameters, 3 cohomology requested for a non-Leibniz algebra.

use std::fs;
use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use filiform::algebra::Algebra;
use filiform::catalog::{build, FamilySpec};
use filiform::cohomology::{bl2, derivation_space, hl2_dim, zl2, CohomologyError};
use filiform::deformation::{deform, integrable_linear, Integrability, LinearDeformation};
use filiform::degeneration::{conjugate_family, limit_at_zero, DegenerationError};
use filiform::io::{
    algebra_to_doc, doc_to_algebra, doc_to_cochain, doc_to_witness, parse_rational,
    AlgebraDocument, CochainDocument, WitnessDocument,
};

#[derive(Parser)]
#[command(
    name = "filiform",
    about = "Exact computations with finite-dimensional Leibniz algebras",
    version
)]
struct Cli {
    /// Emit machine-readable JSON instead of text
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a catalog algebra and print its JSON document
    Build(BuildArgs),
    /// Structural invariants (and cohomology dimensions, when defined)
    Analyze(InputArg),
    /// Cohomology dimensions; fails on non-Leibniz input
    Cohomology(InputArg),
    /// The linear deformation mu + t*phi as an algebra document
    Deform(DeformArgs),
    /// Decide linear integrability of a deformation direction
    Integrable(IntegrableArgs),
    /// Check a degeneration witness g_t against a target algebra
    Degenerate(DegenerateArgs),
    /// Recompute every in-scope claim and report pass/fail per claim
    VerifyPaper(VerifyArgs),
}

#[derive(Args)]
struct BuildArgs {
    /// Family identifier, e.g. NF, F1graded, R, mu_tilde, nu1
    family: String,
    /// Dimension n
    n: usize,
    /// Family parameters as trailing `--name value` pairs, values "p/q"
    #[arg(trailing_var_arg = true, allow_hyphen_values = true)]
    params: Vec<String>,
}

#[derive(Args)]
struct InputArg {
    /// Path to an algebra document; "-" or absent reads standard input
    input: Option<String>,
}

#[derive(Args)]
struct DeformArgs {
    /// Path to the base algebra document; "-" or absent reads stdin
    input: Option<String>,
    /// Path to the degree-2 cochain document (the direction phi)
    #[arg(long)]
    direction: String,
    /// Deformation parameter as a rational "p/q"
    #[arg(long, default_value = "1")]
    t: String,
}

#[derive(Args)]
struct IntegrableArgs {
    /// Path to the base algebra document; "-" or absent reads stdin
    input: Option<String>,
    /// Path to the degree-2 cochain document (the direction phi)
    #[arg(long)]
    direction: String,
}

#[derive(Args)]
struct DegenerateArgs {
    /// Path to the source algebra document; "-" or absent reads stdin
    input: Option<String>,
    /// Path to the witness document (matrix of rational functions in t)
    #[arg(long)]
    witness: String,
    /// Path to the target algebra document
    #[arg(long)]
    target: String,
}

#[derive(Args)]
struct VerifyArgs {
    /// Dimension range "A..B" (inclusive), within 3..12
    #[arg(long, default_value = "3..8")]
    n_range: String,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Build(a) => cmd_build(a),
        Command::Analyze(a) => cmd_analyze(a, cli.json),
        Command::Cohomology(a) => cmd_cohomology(a, cli.json),
        Command::Deform(a) => cmd_deform(a),
        Command::Integrable(a) => cmd_integrable(a, cli.json),
        Command::Degenerate(a) => cmd_degenerate(a, cli.json),
        Command::VerifyPaper(a) => cmd_verify_paper(a, cli.json),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

struct CmdError {
    code: u8,
    message: String,
}

fn bad_input(msg: impl std::fmt::Display) -> CmdError {
    CmdError {
        code: 2,
        message: msg.to_string(),
    }
}

fn non_leibniz() -> CmdError {
    CmdError {
        code: 3,
        message: "cohomology requires a Leibniz algebra (the defect is nonempty)".into(),
    }
}

fn read_input(path: &Option<String>) -> Result<String, CmdError> {
    match path.as_deref() {
        None | Some("-") => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(bad_input)?;
            Ok(buf)
        }
        Some(p) => fs::read_to_string(p).map_err(|e| bad_input(format!("{p}: {e}"))),
    }
}

fn load_algebra(path: &Option<String>) -> Result<Algebra, CmdError> {
    let text = read_input(path)?;
    let doc: AlgebraDocument = serde_json::from_str(&text).map_err(bad_input)?;
    doc_to_algebra(&doc).map_err(bad_input)
}

fn load_algebra_file(path: &str) -> Result<Algebra, CmdError> {
    load_algebra(&Some(path.to_string()))
}

fn cmd_build(args: &BuildArgs) -> Result<ExitCode, CmdError> {
    let mut params = Vec::new();
    let mut it = args.params.iter();
    while let Some(flag) = it.next() {
        let name = flag
            .strip_prefix("--")
            .ok_or_else(|| bad_input(format!("expected --name value pairs, got `{flag}`")))?;
        let value = it
            .next()
            .ok_or_else(|| bad_input(format!("missing value for --{name}")))?;
        params.push((name.to_string(), parse_rational(value).map_err(bad_input)?));
    }
    let spec = FamilySpec {
        family_id: args.family.clone(),
        n: args.n,
        params,
    };
    let a = build(&spec).map_err(bad_input)?;
    println!("{}", serde_json::to_string_pretty(&algebra_to_doc(&a)).unwrap());
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct CohomologyReport {
    dim_der: usize,
    dim_zl2: usize,
    dim_bl2: usize,
    dim_hl2: usize,
}

#[derive(Serialize)]
struct AnalyzeReport {
    dim: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    label: Option<String>,
    is_leibniz: bool,
    series_dims: Vec<usize>,
    nilpotent: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    nilindex: Option<usize>,
    filiform: bool,
    dim_ann_r: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    cohomology: Option<CohomologyReport>,
}

fn cohomology_report(a: &Algebra) -> Result<CohomologyReport, CmdError> {
    let map_err = |e: CohomologyError| match e {
        CohomologyError::NotLeibniz => non_leibniz(),
        other => bad_input(other),
    };
    Ok(CohomologyReport {
        dim_der: derivation_space(a).dim(),
        dim_zl2: zl2(a).map_err(map_err)?.dim(),
        dim_bl2: bl2(a).map_err(map_err)?.dim(),
        dim_hl2: hl2_dim(a).map_err(map_err)?,
    })
}

fn cmd_analyze(args: &InputArg, json: bool) -> Result<ExitCode, CmdError> {
    let a = load_algebra(&args.input)?;
    let leibniz = a.is_leibniz();
    let report = AnalyzeReport {
        dim: a.dim(),
        label: a.label().map(str::to_string),
        is_leibniz: leibniz,
        series_dims: a.series_dims(),
        nilpotent: a.is_nilpotent(),
        nilindex: a.nilindex(),
        filiform: a.is_filiform(),
        dim_ann_r: a.right_annihilator().dim(),
        cohomology: if leibniz {
            Some(cohomology_report(&a)?)
        } else {
            None
        },
    };
    if json {
        println!("{}", serde_json::to_string_pretty(&report).unwrap());
    } else {
        if let Some(l) = &report.label {
            println!("label: {l}");
        }
        println!("dim: {}", report.dim);
        println!("is_leibniz: {}", report.is_leibniz);
        println!(
            "lower central series dims: {}",
            report
                .series_dims
                .iter()
                .map(|d| d.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        );
        match report.nilindex {
            Some(k) => println!("nilpotent: true (nilindex {k})"),
            None => println!("nilpotent: false"),
        }
        println!("filiform: {}", report.filiform);
        println!("dim Ann_r: {}", report.dim_ann_r);
        match &report.cohomology {
            Some(c) => {
                println!(
                    "Der={} ZL2={} BL2={} HL2={}",
                    c.dim_der, c.dim_zl2, c.dim_bl2, c.dim_hl2
                );
                if c.dim_hl2 == 0 {
                    println!("HL2=0 (rigid criterion met)");
                }
            }
            None => println!("cohomology: skipped (not a Leibniz algebra)"),
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_cohomology(args: &InputArg, json: bool) -> Result<ExitCode, CmdError> {
    let a = load_algebra(&args.input)?;
    if !a.is_leibniz() {
        return Err(non_leibniz());
    }
    let c = cohomology_report(&a)?;
    if json {
        println!("{}", serde_json::to_string_pretty(&c).unwrap());
    } else {
        println!(
            "Der={} ZL2={} BL2={} HL2={}",
            c.dim_der, c.dim_zl2, c.dim_bl2, c.dim_hl2
        );
    }
    Ok(ExitCode::SUCCESS)
}

fn load_direction(path: &str, n: usize) -> Result<filiform::cohomology::Cochain, CmdError> {
    let text = fs::read_to_string(path).map_err(|e| bad_input(format!("{path}: {e}")))?;
    let doc: CochainDocument = serde_json::from_str(&text).map_err(bad_input)?;
    let c = doc_to_cochain(&doc).map_err(bad_input)?;
    if c.degree() != 2 || c.dim() != n {
        return Err(bad_input(format!(
            "direction must be a degree-2 cochain on dimension {n}"
        )));
    }
    Ok(c)
}

fn cmd_deform(args: &DeformArgs) -> Result<ExitCode, CmdError> {
    let base = load_algebra(&args.input)?;
    let direction = load_direction(&args.direction, base.dim())?;
    let t = parse_rational(&args.t).map_err(bad_input)?;
    let deformed = deform(&LinearDeformation { base, direction, t });
    println!(
        "{}",
        serde_json::to_string_pretty(&algebra_to_doc(&deformed)).unwrap()
    );
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct IntegrableReport {
    integrable: bool,
    verdict: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<Vec<usize>>,
}

fn cmd_integrable(args: &IntegrableArgs, json: bool) -> Result<ExitCode, CmdError> {
    let base = load_algebra(&args.input)?;
    let direction = load_direction(&args.direction, base.dim())?;
    let verdict = integrable_linear(&base, &direction).map_err(|e| match e {
        CohomologyError::NotLeibniz => non_leibniz(),
        other => bad_input(other),
    })?;
    let report = match &verdict {
        Integrability::Integrable => IntegrableReport {
            integrable: true,
            verdict: "integrable".into(),
            witness: None,
        },
        Integrability::NotACocycle { witness } => IntegrableReport {
            integrable: false,
            verdict: "not a cocycle".into(),
            witness: Some(vec![witness.0 + 1, witness.1 + 1, witness.2 + 1]),
        },
        Integrability::QuadraticFailure { witness } => IntegrableReport {
            integrable: false,
            verdict: "quadratic condition fails".into(),
            witness: Some(vec![witness.0 + 1, witness.1 + 1, witness.2 + 1]),
        },
    };
    if json {
        println!("{}", serde_json::to_string_pretty(&report).unwrap());
    } else {
        match &report.witness {
            Some(w) => println!(
                "{} at basis triple (x{}, x{}, x{})",
                report.verdict, w[0], w[1], w[2]
            ),
            None => println!("{}", report.verdict),
        }
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct DegenerateReport {
    degenerates: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    poles: Vec<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    mismatch: Option<String>,
}

fn cmd_degenerate(args: &DegenerateArgs, json: bool) -> Result<ExitCode, CmdError> {
    let source = load_algebra(&args.input)?;
    let target = load_algebra_file(&args.target)?;
    let text =
        fs::read_to_string(&args.witness).map_err(|e| bad_input(format!("{}: {e}", args.witness)))?;
    let doc: WitnessDocument = serde_json::from_str(&text).map_err(bad_input)?;
    let g = doc_to_witness(&doc).map_err(bad_input)?;
    if g.nrows() != source.dim() || target.dim() != source.dim() {
        return Err(bad_input("witness/target dimension mismatch with source"));
    }
    let fam = conjugate_family(&source, &g).map_err(bad_input)?;
    let report = match limit_at_zero(&fam) {
        Ok(lim) => {
            let ok = lim.same_table(&target);
            DegenerateReport {
                degenerates: ok,
                poles: Vec::new(),
                mismatch: if ok {
                    None
                } else {
                    Some("limit exists but differs from the target".into())
                },
            }
        }
        Err(DegenerationError::PoleAtZero(entries)) => DegenerateReport {
            degenerates: false,
            poles: entries
                .iter()
                .map(|(i, j, k)| vec![i + 1, j + 1, k + 1])
                .collect(),
            mismatch: Some("structure constants have poles at t = 0".into()),
        },
        Err(e) => return Err(bad_input(e)),
    };
    if json {
        println!("{}", serde_json::to_string_pretty(&report).unwrap());
    } else if report.degenerates {
        println!("PASS");
    } else {
        println!("FAIL: {}", report.mismatch.as_deref().unwrap_or(""));
        for p in &report.poles {
            println!("  pole at entry (x{}, x{}) -> x{}", p[0], p[1], p[2]);
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify_paper(args: &VerifyArgs, json: bool) -> Result<ExitCode, CmdError> {
    let (lo, hi) = args
        .n_range
        .split_once("..")
        .and_then(|(a, b)| Some((a.parse().ok()?, b.parse().ok()?)))
        .ok_or_else(|| bad_input(format!("cannot parse range `{}` (use A..B)", args.n_range)))?;
    let report = filiform::report::run_verification(lo, hi).map_err(bad_input)?;
    if json {
        println!("{}", serde_json::to_string_pretty(&report).unwrap());
    } else {
        print!("{}", report.render_text());
    }
    if report.has_failures() {
        Ok(ExitCode::FAILURE)
    } else {
        Ok(ExitCode::SUCCESS)
    }
}
