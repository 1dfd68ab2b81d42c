//! `leibcap` — exact invariants and capability decisions for
//! finite-dimensional Leibniz algebras given by structure constants.
//!
//! Exit codes: 0 success, 1 mathematical failure (invalid algebra or failed
//! invariant), 2 usage or I/O error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use leibcap_core::catalog;
use leibcap_core::error::Error;
use leibcap_core::field::FieldSpec;
use leibcap_core::format::AlgebraFile;
use leibcap_core::leibniz::LeibnizAlgebra;
use leibcap_core::lie;
use leibcap_core::report::{analyze, Report};
use leibcap_core::suite::{self, SuiteConfig};
use leibcap_core::tensor;

#[derive(Parser)]
#[command(
    name = "leibcap",
    version,
    about = "Exact tensor/exterior squares, centers, and capability of Leibniz algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct FormatArg {
    /// Output format
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Validate an algebra file (Leibniz identity on all basis triples)
    Check { path: PathBuf },
    /// Full invariant report and the capability verdict
    Capability {
        path: PathBuf,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Non-abelian tensor square: dimension, class labels, bracket table
    Tensor {
        path: PathBuf,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Non-abelian exterior square
    Exterior {
        path: PathBuf,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Center, tensor center, and exterior center
    Centers {
        path: PathBuf,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Biderivation algebra and inner biderivations
    Bider {
        path: PathBuf,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Run the invariant suite on the catalog plus seeded random algebras
    Suite {
        /// Largest random-algebra dimension (0 = no random corpus)
        #[arg(long, default_value_t = 3)]
        dim_max: usize,
        /// Ground field: `rational` or `prime:p`
        #[arg(long, default_value = "rational", value_parser = parse_field)]
        field: FieldSpec,
        /// Seed of the random corpus
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Built-in algebra catalog
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    /// List entry names
    List,
    /// Print one entry in the JSON algebra format
    Export {
        name: String,
        /// Ground field: `rational` or `prime:p`
        #[arg(long, default_value = "rational", value_parser = parse_field)]
        field: FieldSpec,
    },
}

fn parse_field(text: &str) -> Result<FieldSpec, String> {
    let spec = if text == "rational" {
        FieldSpec::Rational
    } else if let Some(p) = text.strip_prefix("prime:") {
        let p: u64 = p.parse().map_err(|_| format!("bad prime modulus {p:?}"))?;
        FieldSpec::Prime { p }
    } else {
        return Err(format!("expected `rational` or `prime:p`, got {text:?}"));
    };
    spec.validate().map_err(|e| e.to_string())?;
    Ok(spec)
}

/// 1 for mathematical failures, 2 for usage and I/O problems.
fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::LeibnizIdentityViolation { .. }
        | Error::NotAnIdeal { .. }
        | Error::NotALieAlgebra
        | Error::WellDefinedness(_) => 1,
        _ => 2,
    }
}

fn load_algebra(path: &PathBuf) -> Result<(String, LeibnizAlgebra), (u8, String)> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| (2u8, format!("cannot read {}: {e}", path.display())))?;
    let file =
        AlgebraFile::from_json(&text).map_err(|e| (2u8, format!("{}: {e}", path.display())))?;
    let name = file.name.clone();
    let alg = file
        .to_algebra()
        .map_err(|e| (exit_code_for(&e), format!("{}: {e}", path.display())))?;
    Ok((name, alg))
}

fn full_report(name: &str, g: &LeibnizAlgebra) -> Result<Report, (u8, String)> {
    // catalog exports get their golden values re-checked on the way through
    let golden = catalog::names()
        .iter()
        .find(|&&n| n == name)
        .and_then(|n| catalog::get(n, g.field()).ok())
        .filter(|e| e.algebra == *g)
        .map(|e| e.golden);
    analyze(name, g, golden.as_ref())
        .map(|a| a.report)
        .map_err(|e| (exit_code_for(&e), e.to_string()))
}

fn render_report_text(r: &Report) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "algebra {} over {} (dim {})\n",
        r.name, r.field, r.dim
    ));
    out.push_str(&format!(
        "  [g,g]={} Z={} g*g={} g^g={} nabla={} ker_theta={}\n",
        r.dims.commutator,
        r.dims.center,
        r.dims.tensor_square,
        r.dims.exterior_square,
        r.dims.nabla,
        r.dims.ker_theta
    ));
    out.push_str(&format!(
        "  Z^*={} Z^wedge={} bider={} inner={}\n",
        r.dims.tensor_center, r.dims.exterior_center, r.dims.bider, r.dims.inner_bider
    ));
    out.push_str(&format!(
        "  capable: {}\n",
        if r.capable { "yes" } else { "no" }
    ));
    match r.lie_capable {
        Some(v) => out.push_str(&format!(
            "  lie_capable: {} (L^L dim {}, Z^wedge_Lie dim {})\n",
            if v { "yes" } else { "no" },
            r.lie_squares.as_ref().unwrap().exterior_square,
            r.lie_squares.as_ref().unwrap().exterior_center,
        )),
        None => out.push_str("  lie_capable: n/a (not a Lie algebra)\n"),
    }
    let failed: Vec<&str> = r
        .invariants
        .iter()
        .filter(|i| !i.pass)
        .map(|i| i.id.as_str())
        .collect();
    if failed.is_empty() {
        out.push_str(&format!(
            "  invariants: {} checked, all pass\n",
            r.invariants.len()
        ));
    } else {
        out.push_str(&format!("  invariants FAILED: {}\n", failed.join(", ")));
    }
    out
}

fn render_square_text(sq: &tensor::PresentedSquare) -> String {
    let mut out = String::new();
    let kind = match sq.kind() {
        tensor::SquareKind::Tensor => "tensor",
        tensor::SquareKind::Exterior => "exterior",
    };
    out.push_str(&format!(
        "{kind} square: dim {} (generator space {}, relations {})\n",
        sq.dim(),
        sq.ambient_dim(),
        sq.relations().dim()
    ));
    out.push_str(&format!("  classes: [{}]\n", sq.class_labels().join(", ")));
    let labels = sq.class_labels();
    let mut nonzero = Vec::new();
    for k in 0..sq.dim() {
        for l in 0..sq.dim() {
            let v = &sq.bracket_table()[k][l];
            if v.iter().any(|x| !x.is_zero()) {
                let terms: Vec<String> = v
                    .iter()
                    .enumerate()
                    .filter(|(_, x)| !x.is_zero())
                    .map(|(t, x)| {
                        if x.is_one() {
                            labels[t].clone()
                        } else {
                            format!("{x}·{}", labels[t])
                        }
                    })
                    .collect();
                nonzero.push(format!(
                    "  [{}, {}] = {}",
                    labels[k],
                    labels[l],
                    terms.join(" + ")
                ));
            }
        }
    }
    if nonzero.is_empty() {
        out.push_str("  bracket: zero\n");
    } else {
        out.push_str(&format!("{}\n", nonzero.join("\n")));
    }
    out.push_str(&format!(
        "  saturation added {} dimension(s)\n",
        sq.saturation_added_dim()
    ));
    out
}

fn print_square(name: &str, sq: &tensor::PresentedSquare, format: Format) {
    match format {
        Format::Json => {
            let value = serde_json::json!({
                "name": name,
                "kind": match sq.kind() {
                    tensor::SquareKind::Tensor => "tensor",
                    tensor::SquareKind::Exterior => "exterior",
                },
                "dim": sq.dim(),
                "generator_space_dim": sq.ambient_dim(),
                "relation_dim": sq.relations().dim(),
                "class_labels": sq.class_labels(),
                "saturation_added_dim": sq.saturation_added_dim(),
            });
            println!("{}", serde_json::to_string_pretty(&value).unwrap());
        }
        Format::Text => {
            print!("algebra {name}: {}", render_square_text(sq));
        }
    }
}

fn run() -> Result<(), (u8, String)> {
    let cli = Cli::parse();
    match cli.command {
        Command::Check { path } => {
            let (name, alg) = load_algebra(&path)?;
            println!(
                "ok: {name} is a Leibniz algebra of dimension {} over {}",
                alg.dim(),
                alg.field()
            );
            Ok(())
        }
        Command::Capability { path, format } => {
            let (name, alg) = load_algebra(&path)?;
            let report = full_report(&name, &alg)?;
            match format.format {
                Format::Json => print!("{}", report.to_json()),
                Format::Text => print!("{}", render_report_text(&report)),
            }
            if report.all_invariants_pass() {
                Ok(())
            } else {
                Err((1, "invariant failures".into()))
            }
        }
        Command::Tensor { path, format } => {
            let (name, alg) = load_algebra(&path)?;
            let sq =
                tensor::tensor_square(&alg).map_err(|e| (exit_code_for(&e), e.to_string()))?;
            print_square(&name, &sq, format.format);
            Ok(())
        }
        Command::Exterior { path, format } => {
            let (name, alg) = load_algebra(&path)?;
            let sq =
                tensor::exterior_square(&alg).map_err(|e| (exit_code_for(&e), e.to_string()))?;
            print_square(&name, &sq, format.format);
            Ok(())
        }
        Command::Centers { path, format } => {
            let (name, alg) = load_algebra(&path)?;
            let z = alg.center();
            let zs =
                tensor::tensor_center(&alg).map_err(|e| (exit_code_for(&e), e.to_string()))?;
            let zw =
                tensor::exterior_center(&alg).map_err(|e| (exit_code_for(&e), e.to_string()))?;
            let lie_zw = if alg.is_lie() {
                Some(lie::lie_exterior_center(&alg).map_err(|e| (exit_code_for(&e), e.to_string()))?)
            } else {
                None
            };
            match format.format {
                Format::Json => {
                    let value = serde_json::json!({
                        "name": name,
                        "dim_center": z.dim(),
                        "dim_tensor_center": zs.dim(),
                        "dim_exterior_center": zw.dim(),
                        "dim_lie_exterior_center": lie_zw.as_ref().map(|s| s.dim()),
                        "capable": zw.is_zero(),
                    });
                    println!("{}", serde_json::to_string_pretty(&value).unwrap());
                }
                Format::Text => {
                    println!("algebra {name}: Z dim {}", z.dim());
                    println!("  tensor center dim {}", zs.dim());
                    println!("  exterior center dim {}", zw.dim());
                    if let Some(s) = &lie_zw {
                        println!("  Lie exterior center dim {}", s.dim());
                    }
                    println!("  capable: {}", if zw.is_zero() { "yes" } else { "no" });
                }
            }
            Ok(())
        }
        Command::Bider { path, format } => {
            let (name, alg) = load_algebra(&path)?;
            let b = alg.biderivations();
            let inner = alg.inner_biderivations();
            match format.format {
                Format::Json => {
                    let value = serde_json::json!({
                        "name": name,
                        "dim_bider": b.dim(),
                        "dim_inner_bider": inner.dim(),
                        "dim_center": alg.center().dim(),
                    });
                    println!("{}", serde_json::to_string_pretty(&value).unwrap());
                }
                Format::Text => {
                    println!(
                        "algebra {name}: BiDer dim {}, InnBiDer dim {} (= dim - dim Z = {})",
                        b.dim(),
                        inner.dim(),
                        alg.dim() - alg.center().dim()
                    );
                }
            }
            Ok(())
        }
        Command::Suite {
            dim_max,
            field,
            seed,
            format,
        } => {
            let threads = std::env::var("LEIBCAP_THREADS")
                .ok()
                .and_then(|v| v.parse::<usize>().ok())
                .unwrap_or(1)
                .max(1);
            let cfg = SuiteConfig {
                field,
                dim_max,
                seed,
                threads,
                ..SuiteConfig::default()
            };
            let outcome = suite::run(&cfg).map_err(|e| (exit_code_for(&e), e.to_string()))?;
            match format.format {
                Format::Json => print!("{}", outcome.to_json()),
                Format::Text => print!("{}", outcome.render_text()),
            }
            if outcome.pass {
                Ok(())
            } else {
                Err((1, "suite failures".into()))
            }
        }
        Command::Catalog { action } => match action {
            CatalogAction::List => {
                for name in catalog::names() {
                    println!("{name}");
                }
                Ok(())
            }
            CatalogAction::Export { name, field } => {
                let entry =
                    catalog::get(&name, field).map_err(|e| (exit_code_for(&e), e.to_string()))?;
                print!(
                    "{}",
                    AlgebraFile::from_algebra(entry.name, &entry.algebra).to_json()
                );
                Ok(())
            }
        },
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(()) => ExitCode::SUCCESS,
        Err((code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
