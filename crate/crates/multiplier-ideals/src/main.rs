use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::builder::ArgGroup;
use clap::{Parser, Subcommand};
use serde_json::json;

use multiplier_ideals::format::{parse_divisor_arg, parse_resolution, support_sum, ResolutionDoc};
use multiplier_ideals::{contribution, jumping, unloading};
use multiplier_ideals::{Error, Rational, ResolutionData, Result};

/// Environment variable that switches the unloading trace on (any value
/// other than `0` or empty); equivalent to `closure --trace`.
const TRACE_ENV: &str = "MULTIPLIER_IDEALS_TRACE";

#[derive(Parser)]
#[command(
    name = "multiplier-ideals",
    version,
    about = "Jumping numbers, multiplier ideals and jumping divisors from log-resolution data"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Emit machine-readable JSON instead of tables
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Check the structural hypotheses of an input resolution
    Validate { input: Option<PathBuf> },
    /// Relative canonical divisor (exact rational values)
    Kpi { input: Option<PathBuf> },
    /// Antinef closure of a divisor by unloading
    Closure {
        input: Option<PathBuf>,
        /// Divisor: 0/1 mask, component labels, or comma-separated values
        #[arg(long, allow_hyphen_values = true)]
        divisor: String,
        /// Log every unloading step as a JSON line
        #[arg(long)]
        trace: bool,
    },
    /// Fundamental cycle and its arithmetic genus
    FundamentalCycle { input: Option<PathBuf> },
    /// Log-canonical threshold
    Lct { input: Option<PathBuf> },
    /// Jumping numbers with multiplier and minimal jumping divisors in (from, to]
    JumpingChain {
        input: Option<PathBuf>,
        #[arg(long, allow_hyphen_values = true)]
        from: Rational,
        #[arg(long, allow_hyphen_values = true)]
        to: Rational,
    },
    /// Jumping numbers in (from, to] found by filtering candidates through critical divisors
    Tucker {
        input: Option<PathBuf>,
        #[arg(long, allow_hyphen_values = true)]
        from: Rational,
        #[arg(long, allow_hyphen_values = true)]
        to: Rational,
    },
    /// Run both jumping-number algorithms and compare their output
    Compare {
        input: Option<PathBuf>,
        #[arg(long, allow_hyphen_values = true)]
        from: Rational,
        #[arg(long, allow_hyphen_values = true)]
        to: Rational,
    },
    /// Candidate/contribution/criticality report for a divisor at an exponent
    Analyze {
        input: Option<PathBuf>,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Rational,
        /// Divisor to analyze; defaults to the minimal jumping divisor of lambda
        #[arg(long, allow_hyphen_values = true)]
        divisor: Option<String>,
    },
    /// Critical divisors for every jumping number in (from, to]
    Critical {
        input: Option<PathBuf>,
        #[arg(long, allow_hyphen_values = true)]
        from: Rational,
        #[arg(long, allow_hyphen_values = true)]
        to: Rational,
    },
    /// Blow up a free or satellite point and print the new resolution document
    #[command(group(ArgGroup::new("center").required(true).args(["free", "intersection"])))]
    Blowup {
        input: Option<PathBuf>,
        /// Blow up a free point on this component (label, e.g. E3)
        #[arg(long)]
        free: Option<String>,
        /// Blow up the intersection of two adjacent components (e.g. E1,E3)
        #[arg(long)]
        intersection: Option<String>,
    },
    /// GraphViz rendering of the dual graph
    Dot { input: Option<PathBuf> },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 64,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}

fn read_input(path: Option<&Path>) -> Result<String> {
    match path {
        Some(p) if p != Path::new("-") => fs::read_to_string(p)
            .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", p.display()))),
        _ => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| Error::InvalidInput(format!("cannot read stdin: {e}")))?;
            Ok(buf)
        }
    }
}

fn load(input: Option<&Path>) -> Result<(ResolutionData, ResolutionDoc)> {
    parse_resolution(&read_input(input)?)
}

fn trace_env_enabled() -> bool {
    std::env::var(TRACE_ENV).map(|v| !v.is_empty() && v != "0").unwrap_or(false)
}

fn run(cli: Cli) -> Result<u8> {
    let json = cli.json;
    match cli.command {
        Command::Validate { input } => {
            let doc = ResolutionDoc::parse(&read_input(input.as_deref())?)?;
            let data = doc.to_resolution()?;
            let report = data.validate();
            if json {
                println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
            } else {
                print!("{report}");
            }
            Ok(if report.is_valid() { 0 } else { 2 })
        }
        Command::Kpi { input } => {
            let (data, _) = load(input.as_deref())?;
            let k = data.relative_canonical()?;
            if json {
                println!("{}", json!({ "k_pi": k }));
            } else {
                println!("K_pi = {k}");
            }
            Ok(0)
        }
        Command::Closure { input, divisor, trace } => {
            let (data, _) = load(input.as_deref())?;
            let d = parse_divisor_arg(&data, &divisor)?;
            if trace || trace_env_enabled() {
                let (closed, steps) = unloading::antinef_closure_traced(&data, &d)?;
                for (i, step) in steps.iter().enumerate() {
                    println!(
                        "{}",
                        json!({ "step": i, "divisor": step.divisor, "theta": step.theta })
                    );
                }
                println!("{}", json!({ "closure": closed }));
            } else {
                let closed = unloading::antinef_closure(&data, &d)?;
                if json {
                    println!("{}", json!({ "closure": closed }));
                } else {
                    println!("closure = {closed}");
                }
            }
            Ok(0)
        }
        Command::FundamentalCycle { input } => {
            let (data, _) = load(input.as_deref())?;
            let z = data.fundamental_cycle()?;
            let genus = data.arithmetic_genus(&z)?;
            if json {
                println!("{}", json!({ "fundamental_cycle": z, "arithmetic_genus": genus }));
            } else {
                println!("Z = {z}");
                println!("p_a(Z) = {genus}");
            }
            Ok(0)
        }
        Command::Lct { input } => {
            let (data, _) = load(input.as_deref())?;
            let lct = jumping::log_canonical_threshold(&data)?;
            if json {
                println!("{}", json!({ "lct": lct }));
            } else {
                println!("lct = {lct}");
            }
            Ok(0)
        }
        Command::JumpingChain { input, from, to } => {
            let (data, _) = load(input.as_deref())?;
            let records = jumping::jumping_chain(&data, &from, &to)?;
            if json {
                println!("{}", serde_json::to_string(&records).expect("records serialize"));
            } else {
                println!("{:<12} {:<32} minimal jumping divisor", "lambda", "multiplier divisor");
                for r in &records {
                    println!(
                        "{:<12} {:<32} {}",
                        r.lambda.to_string(),
                        r.d_lambda.to_string(),
                        support_sum(&data, &r.g_lambda)
                    );
                }
            }
            Ok(0)
        }
        Command::Tucker { input, from, to } => {
            let (data, _) = load(input.as_deref())?;
            let numbers = contribution::jumping_numbers_by_critical_divisors(&data, &from, &to)?;
            if json {
                println!("{}", serde_json::to_string(&numbers).expect("numbers serialize"));
            } else {
                let shown: Vec<String> = numbers.iter().map(Rational::to_string).collect();
                println!("{}", shown.join(", "));
            }
            Ok(0)
        }
        Command::Compare { input, from, to } => {
            let (data, _) = load(input.as_deref())?;
            let chain = jumping::jumping_chain(&data, &from, &to)?;
            let sequential: Vec<Rational> = chain.into_iter().map(|r| r.lambda).collect();
            let filtered = contribution::jumping_numbers_by_critical_divisors(&data, &from, &to)?;
            if sequential == filtered {
                if json {
                    println!("{}", json!({ "agree": true, "count": sequential.len() }));
                } else {
                    println!(
                        "algorithms agree: {} jumping numbers in ({from}, {to}]",
                        sequential.len()
                    );
                }
                Ok(0)
            } else {
                let divergence = sequential
                    .iter()
                    .zip(&filtered)
                    .position(|(a, b)| a != b)
                    .unwrap_or_else(|| sequential.len().min(filtered.len()));
                let left = sequential.get(divergence).map(Rational::to_string);
                let right = filtered.get(divergence).map(Rational::to_string);
                if json {
                    println!(
                        "{}",
                        json!({ "agree": false, "index": divergence, "sequential": left, "critical": right })
                    );
                } else {
                    println!(
                        "MISMATCH at position {divergence}: sequential {} vs critical-divisor {}",
                        left.unwrap_or_else(|| "<none>".into()),
                        right.unwrap_or_else(|| "<none>".into())
                    );
                }
                Ok(1)
            }
        }
        Command::Analyze { input, lambda, divisor } => {
            let (data, _) = load(input.as_deref())?;
            let g = match divisor {
                Some(arg) => parse_divisor_arg(&data, &arg)?,
                None => contribution::minimal_jumping_divisor(&data, &lambda)?,
            };
            let report = contribution::analyze(&data, &lambda, &g)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
            } else {
                println!("lambda = {}  divisor = {}", report.lambda, support_sum(&data, &report.divisor));
                println!("candidate:        {}", report.is_candidate);
                println!("jumping number:   {}", report.is_jumping_number);
                println!("contributes:      {}", report.contributes);
                println!("critical:         {}", report.is_critical);
                println!("jumping divisor:  {}", report.is_jumping_divisor);
                if let Some(nested) = &report.nested_divisor {
                    println!("nested ideal:     {nested}");
                }
                if let Some(min) = &report.minimal_contributing {
                    println!("minimal contrib.: {}", support_sum(&data, min));
                }
            }
            Ok(0)
        }
        Command::Critical { input, from, to } => {
            let (data, _) = load(input.as_deref())?;
            let records = jumping::jumping_chain(&data, &from, &to)?;
            let mut rows = Vec::new();
            for r in &records {
                let criticals = contribution::enumerate_critical_divisors(&data, &r.lambda)?;
                rows.push((r.lambda.clone(), criticals));
            }
            if json {
                let body: Vec<_> = rows
                    .iter()
                    .map(|(l, gs)| json!({ "lambda": l, "critical": gs }))
                    .collect();
                println!("{}", serde_json::to_string(&body).expect("rows serialize"));
            } else {
                for (l, gs) in &rows {
                    let shown: Vec<String> = gs.iter().map(|g| support_sum(&data, g)).collect();
                    println!("{l}: {}", if shown.is_empty() { "-".into() } else { shown.join("; ") });
                }
            }
            Ok(0)
        }
        Command::Blowup { input, free, intersection } => {
            let (data, _) = load(input.as_deref())?;
            let blown = if let Some(label) = free {
                data.blowup_free_point(component(&data, &label)?)?
            } else {
                let arg = intersection.expect("clap enforces the center group");
                let (a, b) = arg
                    .split_once(',')
                    .ok_or_else(|| Error::InvalidInput("expected two labels, e.g. E1,E3".into()))?;
                data.blowup_intersection(component(&data, a.trim())?, component(&data, b.trim())?)?
            };
            let doc = ResolutionDoc::from_resolution(&blown)?;
            println!("{}", serde_json::to_string_pretty(&doc).expect("document serializes"));
            Ok(0)
        }
        Command::Dot { input } => {
            let (data, _) = load(input.as_deref())?;
            print!("{}", data.to_dot());
            Ok(0)
        }
    }
}

fn component(data: &ResolutionData, label: &str) -> Result<usize> {
    data.label_index(label).ok_or_else(|| {
        Error::InvalidInput(format!(
            "unknown component {label:?}; available: {}",
            data.labels().join(", ")
        ))
    })
}
