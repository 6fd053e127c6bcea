//! `ordmeans`: exact element-order means of finite groups from the command line.
//!
//! Groups are given as specs such as `C12`, `D18`, `S3xC3`, `F(7,3)`.
//! `Dn` is the dihedral group of order `n`, not degree `n`.

use std::cmp::Ordering;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use ordmeans::closed_forms::{l_dihedral_2p, psi_dd_dihedral_2p};
use ordmeans::dsl::parse_spec;
use ordmeans::exact::{is_prime, Rounding};
use ordmeans::group::PermGroup;
use ordmeans::invariants::{relation_symbol, InvariantBundle, Mean, MeanValue};
use ordmeans::structure::{self, StructureProfile};
use ordmeans::tables::{table_one, table_two};
use ordmeans::verifier::{run_suite, Corpus, CorpusParams, Families, Suite, SuiteParams};

#[derive(Parser)]
#[command(
    name = "ordmeans",
    version,
    about = "Exact element-order means psi'' and l of finite groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Decimal places in approximations.
    #[arg(long, global = true, default_value_t = 3)]
    digits: u32,

    /// Round to nearest instead of truncating.
    #[arg(long, global = true)]
    nearest: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Invariants and structure of one group.
    Info { spec: String },
    /// Exact relation between f(A) and f(B).
    Compare {
        a: String,
        b: String,
        #[arg(long = "f", default_value = "ell")]
        mean: Mean,
    },
    /// Relation of f(G) to f(D_2p), with the structure it predicts.
    Threshold {
        spec: String,
        #[arg(long)]
        p: u64,
        #[arg(long = "f", default_value = "ell")]
        mean: Mean,
    },
    /// Reference tables: 1 for five small groups, 2 for l(D_2p).
    Table {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
        which: u8,
    },
    /// Run a verification suite over the corpus.
    Verify {
        /// Suite name, or `all`.
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 360)]
        max_order: u64,
        /// Comma-separated odd primes.
        #[arg(long, value_delimiter = ',')]
        primes: Option<Vec<u64>>,
        /// List every group, not only failures.
        #[arg(long)]
        verbose: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn build(spec: &str) -> Result<PermGroup> {
    let expr = parse_spec(spec).with_context(|| format!("cannot parse `{spec}`"))?;
    expr.build()
        .with_context(|| format!("cannot build `{spec}`"))
}

fn rounding(cli: &Cli) -> Rounding {
    if cli.nearest {
        Rounding::Nearest
    } else {
        Rounding::Truncate
    }
}

fn decimal(cli: &Cli, v: &MeanValue) -> Result<String> {
    Ok(v.to_decimal_with(cli.digits, rounding(cli))?.text)
}

/// Returns whether the command succeeded in its own terms.
fn run(cli: &Cli) -> Result<bool> {
    match &cli.command {
        Command::Info { spec } => info(cli, spec),
        Command::Compare { a, b, mean } => compare(cli, a, b, *mean),
        Command::Threshold { spec, p, mean } => threshold(cli, spec, *p, *mean),
        Command::Table { which } => table(cli, *which),
        Command::Verify {
            suite,
            max_order,
            primes,
            verbose,
        } => verify(cli, suite, *max_order, primes.clone(), *verbose),
    }
}

fn info(cli: &Cli, spec: &str) -> Result<bool> {
    let g = build(spec)?;
    let bundle = InvariantBundle::of(&g);
    let profile = StructureProfile::of(&g)?;
    let canonical = parse_spec(spec)?.to_string();
    match cli.format {
        Format::Json => {
            let out = json!({
                "spec": canonical,
                "invariants": bundle.to_json(cli.digits)?,
                "structure": profile.to_json(),
            });
            println!("{}", serde_json::to_string_pretty(&out)?);
        }
        Format::Csv => {
            println!("spec,order,psi,rho,psi_dd,ell,cyclic,abelian,nilpotent,supersoluble,soluble");
            println!(
                "{canonical},{},{},\"{}\",{},\"{}\",{},{},{},{},{}",
                g.order(),
                bundle.psi,
                bundle.rho,
                MeanValue::Rational(bundle.psi_dd.clone()),
                bundle.ell,
                profile.cyclic,
                profile.abelian,
                profile.nilpotent,
                profile.supersoluble,
                profile.soluble
            );
        }
        Format::Text => {
            let psi_dd = MeanValue::Rational(bundle.psi_dd.clone());
            let ell = MeanValue::Real(bundle.ell.clone());
            println!("group        {canonical}");
            println!("order        {}", g.order());
            println!("psi          {}", bundle.psi);
            println!("rho          {}", bundle.rho);
            println!("psi''        {psi_dd} ~ {}", decimal(cli, &psi_dd)?);
            println!("l            {ell} ~ {}", decimal(cli, &ell)?);
            println!("cyclic       {}", profile.cyclic);
            println!("abelian      {}", profile.abelian);
            println!("nilpotent    {}", profile.nilpotent);
            println!("supersoluble {}", profile.supersoluble);
            println!("soluble      {}", profile.soluble);
            for r in &profile.primes {
                println!(
                    "p = {:<4} Sylow order {} (normal {}, cyclic {}), |O_p| = {}, |O_p'| = {}, p-nilpotent {}",
                    r.p, r.sylow_order, r.sylow_normal, r.sylow_cyclic, r.op_order, r.op_prime_order, r.p_nilpotent
                );
            }
        }
    }
    Ok(true)
}

fn compare(cli: &Cli, a: &str, b: &str, f: Mean) -> Result<bool> {
    let (va, vb) = (f.of(&build(a)?), f.of(&build(b)?));
    let rel = relation_symbol(va.try_cmp(&vb)?);
    match cli.format {
        Format::Json => {
            let out = json!({
                "mean": f.key(),
                "relation": rel,
                "lhs": {"spec": a, "exact": va.to_string(), "value": va.to_json(), "decimal": decimal(cli, &va)?},
                "rhs": {"spec": b, "exact": vb.to_string(), "value": vb.to_json(), "decimal": decimal(cli, &vb)?},
            });
            println!("{}", serde_json::to_string_pretty(&out)?);
        }
        Format::Csv => {
            println!("lhs,relation,rhs,mean");
            println!("{a},{rel},{b},{}", f.key());
        }
        Format::Text => {
            println!("{rel}");
            println!("{}({a}) = {va} ~ {}", f.symbol(), decimal(cli, &va)?);
            println!("{}({b}) = {vb} ~ {}", f.symbol(), decimal(cli, &vb)?);
        }
    }
    Ok(true)
}

/// The structure the threshold statements predict from `f(G)` against
/// `f(D_2p)`, each paired with whether it holds.
fn predictions(g: &PermGroup, p: u64, f: Mean, ord: Ordering) -> Result<Vec<(String, bool)>> {
    let mut out = Vec::new();
    if !(g.order() as u64).is_multiple_of(p) {
        return Ok(out);
    }
    let profile = StructureProfile::of(g)?;
    if f == Mean::Ell && ord == Ordering::Equal {
        let holds = g.order() as u64 == 2 * p && !g.is_cyclic();
        out.push((format!("isomorphic to D{}", 2 * p), holds));
        return Ok(out);
    }
    if ord != Ordering::Greater {
        return Ok(out);
    }
    if f == Mean::Ell {
        let d = structure::decomposes_as_op_times_opprime(g, p)?;
        out.push((format!("{p}-nilpotent"), profile.p_nilpotent(p)));
        out.push((format!("O_{p} x O_{p}'"), d.holds));
        out.push((format!("O_{p} cyclic"), d.op_cyclic));
    }
    if p == 3 {
        out.push(("cyclic".into(), profile.cyclic));
    }
    if p <= 5 {
        out.push(("nilpotent".into(), profile.nilpotent));
    }
    if p <= 13 {
        out.push(("supersoluble".into(), profile.supersoluble));
    }
    Ok(out)
}

fn threshold(cli: &Cli, spec: &str, p: u64, f: Mean) -> Result<bool> {
    if p == 2 || !is_prime(p) {
        bail!("--p must be an odd prime, got {p}");
    }
    let g = build(spec)?;
    let value = f.of(&g);
    let bound = match f {
        Mean::PsiDd => MeanValue::Rational(psi_dd_dihedral_2p(p)?),
        Mean::Ell => MeanValue::Real(l_dihedral_2p(p)?),
    };
    let ord = value.try_cmp(&bound)?;
    let rel = relation_symbol(ord);
    let predicted = predictions(&g, p, f, ord)?;
    let confirmed = predicted.iter().all(|(_, holds)| *holds);
    match cli.format {
        Format::Json => {
            let out = json!({
                "spec": spec,
                "p": p,
                "mean": f.key(),
                "relation": rel,
                "value": value.to_string(),
                "threshold": bound.to_string(),
                "divides_order": (g.order() as u64).is_multiple_of(p),
                "predicted": predicted.iter().map(|(k, v)| json!({"property": k, "holds": v})).collect::<Vec<_>>(),
                "confirmed": confirmed,
            });
            println!("{}", serde_json::to_string_pretty(&out)?);
        }
        Format::Csv => {
            println!("spec,p,mean,relation,predicted,confirmed");
            let names: Vec<&str> = predicted.iter().map(|(k, _)| k.as_str()).collect();
            println!(
                "{spec},{p},{},{rel},\"{}\",{confirmed}",
                f.key(),
                names.join("; ")
            );
        }
        Format::Text => {
            println!("{rel}");
            println!(
                "{}({spec}) = {value} ~ {}",
                f.symbol(),
                decimal(cli, &value)?
            );
            println!(
                "{}(D{}) = {bound} ~ {}",
                f.symbol(),
                2 * p,
                decimal(cli, &bound)?
            );
            if !(g.order() as u64).is_multiple_of(p) {
                println!(
                    "predicted: nothing ({p} does not divide |G| = {})",
                    g.order()
                );
            } else if predicted.is_empty() {
                println!("predicted: nothing (hypothesis does not hold)");
            } else {
                let names: Vec<&str> = predicted.iter().map(|(k, _)| k.as_str()).collect();
                println!("predicted: {}", names.join(", "));
                if confirmed {
                    println!("actual: confirmed");
                } else {
                    let failed: Vec<&str> = predicted
                        .iter()
                        .filter(|(_, h)| !h)
                        .map(|(k, _)| k.as_str())
                        .collect();
                    println!("actual: not confirmed, fails {}", failed.join(", "));
                }
            }
        }
    }
    Ok(confirmed)
}

fn table(cli: &Cli, which: u8) -> Result<bool> {
    let t = match which {
        1 => table_one(cli.digits, rounding(cli))?,
        _ => table_two(cli.digits, rounding(cli))?,
    };
    match cli.format {
        Format::Text => print!("{}", t.to_text()),
        Format::Csv => print!("{}", t.to_csv()),
        Format::Json => println!("{}", serde_json::to_string_pretty(&t.to_json())?),
    }
    Ok(true)
}

fn verify(
    cli: &Cli,
    suite: &str,
    max_order: u64,
    primes: Option<Vec<u64>>,
    verbose: bool,
) -> Result<bool> {
    let suites: Vec<Suite> = if suite == "all" {
        Suite::ALL.to_vec()
    } else {
        vec![suite.parse()?]
    };
    let corpus = Corpus::build(CorpusParams {
        max_order,
        families: Families::ALL,
    })?;
    let mut params = SuiteParams::default();
    if let Some(primes) = primes {
        params.primes = primes;
    }
    let mut passed = true;
    let mut reports = Vec::new();
    for s in suites {
        let report = run_suite(s, &corpus, &params)?;
        passed &= report.passed();
        reports.push(report);
    }
    match cli.format {
        Format::Text => {
            for r in &reports {
                println!("{}", r.to_text(verbose));
            }
        }
        Format::Csv => {
            for r in &reports {
                print!("{}", r.to_csv());
            }
        }
        Format::Json => {
            let out: Vec<_> = reports.iter().map(|r| r.to_json()).collect();
            let out = if out.len() == 1 {
                out.into_iter().next().unwrap()
            } else {
                json!(out)
            };
            println!("{}", serde_json::to_string_pretty(&out)?);
        }
    }
    Ok(passed)
}
