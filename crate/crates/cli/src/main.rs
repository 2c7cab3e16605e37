use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use axial_core::catalog::{ns_algebra, FusionLaw, NsType};
use axial_core::engine::{construct, Caps, Record};
use axial_core::fpgrp::{group_order, EnumOptions, Presentation, DEFAULT_COSET_CAP};
use axial_core::golden::{self, Outcome, RowReport, Tally};
use axial_core::shapes::enumerate_shapes;
use axial_core::shapes::library::standard_action;
use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

/// Axial algebras of Monster type generated by three axes.
#[derive(Parser, Debug)]
#[command(name = "axial", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// worker threads; 0 uses every core
    #[arg(long, short = 'j', global = true, default_value_t = 0, env = "AXIAL_JOBS")]
    jobs: usize,
    #[command(flatten)]
    caps: CapArgs,
}

#[derive(Args, Debug, Clone, Copy)]
struct CapArgs {
    /// cosets a single enumeration may define
    #[arg(long, global = true, env = "AXIAL_COSET_CAP", default_value_t = DEFAULT_COSET_CAP,
          value_parser = positive)]
    coset_cap: usize,
    /// largest dimension an expansion may reach
    #[arg(long, global = true, env = "AXIAL_MAX_DIM", default_value_t = Caps::default().max_dim,
          value_parser = positive)]
    max_dim: usize,
    /// number of expansion rounds
    #[arg(long, global = true, env = "AXIAL_MAX_ROUNDS", default_value_t = Caps::default().max_rounds,
          value_parser = positive)]
    max_rounds: usize,
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be positive".into()),
        Ok(n) => Ok(n),
        Err(e) => Err(e.to_string()),
    }
}

impl CapArgs {
    fn engine(&self) -> Caps {
        Caps { max_dim: self.max_dim, max_rounds: self.max_rounds, ..Caps::default() }
    }

    fn cosets(&self) -> EnumOptions {
        EnumOptions { cap: self.coset_cap, ..EnumOptions::default() }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// The eight Norton-Sakuma algebras
    #[command(subcommand)]
    Catalog(CatalogCmd),
    /// Finitely presented groups
    #[command(subcommand)]
    Groups(GroupsCmd),
    /// Shapes of a named axis action
    #[command(subcommand)]
    Shapes(ShapesCmd),
    /// Build the algebra of one shape
    Construct {
        #[arg(long)]
        group: String,
        #[arg(long)]
        axes: String,
        #[arg(long)]
        shape: String,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Recompute a results table and compare with the bundled copy
    Reproduce {
        #[arg(long, value_parser = ["1", "3", "4"])]
        table: String,
        /// include the slow rows
        #[arg(long)]
        extended: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Subcommand, Debug)]
enum CatalogCmd {
    /// Check every axis, the form and the dihedral symmetry
    Verify {
        #[arg(long)]
        tag: Option<NsType>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Structure constants and form as JSON
    Dump {
        #[arg(long)]
        tag: Option<NsType>,
    },
}

#[derive(Subcommand, Debug)]
enum GroupsCmd {
    /// Orders and 4-transposition flags of the cover groups and quotients
    Table1,
    /// Order of the group presented in a file, e.g. `<x,y | x^2, y^3, (x*y)^5>`
    Order { file: PathBuf },
}

#[derive(Subcommand, Debug)]
enum ShapesCmd {
    /// List the shapes as CSV
    Enumerate {
        #[arg(long)]
        group: String,
        #[arg(long)]
        axes: String,
    },
}

/// Mismatches outrank inconclusive rows.
fn exit_for(t: Tally) -> ExitCode {
    if t.mismatched > 0 {
        ExitCode::from(1)
    } else if t.inconclusive > 0 {
        ExitCode::from(2)
    } else {
        ExitCode::SUCCESS
    }
}

fn tags(tag: Option<NsType>) -> Vec<NsType> {
    tag.map_or(NsType::ALL.to_vec(), |t| vec![t])
}

fn catalog_verify(tag: Option<NsType>, format: Format) -> Result<ExitCode> {
    let law = FusionLaw::monster();
    let reports: Vec<_> = tags(tag).par_iter().map(|&t| ns_algebra(t).verify(&law)).collect();
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&reports)?),
        _ => {
            for r in &reports {
                let verdict = if r.ok() { "pass" } else { "FAIL" };
                println!("{} dim {} {}", r.kind.tag(), r.dim, verdict);
                for (label, a) in r.axes.iter().filter(|(_, a)| !a.ok()) {
                    println!("  axis {}: {:?}", label, a);
                }
            }
        }
    }
    Ok(if reports.iter().all(|r| r.ok()) { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn catalog_dump(tag: Option<NsType>) -> Result<ExitCode> {
    let dumps: Vec<_> = tags(tag).into_iter().map(|t| ns_algebra(t).dump()).collect();
    println!("{}", serde_json::to_string_pretty(&dumps)?);
    Ok(ExitCode::SUCCESS)
}

fn groups_table1(caps: CapArgs) -> Result<ExitCode> {
    let rows = golden::table1();
    let values: Vec<_> = rows.par_iter().map(|r| golden::group_values(&r.kind, &r.name, caps.cosets())).collect();
    println!("name,order,4trans");
    let mut failed = false;
    for (row, v) in rows.iter().zip(values) {
        match v {
            Ok((order, flag)) => println!("{},{},{}", row.name, order, if flag { "y" } else { "n" }),
            Err(e) => {
                failed = true;
                println!("{},?,?", row.name);
                eprintln!("{}: {}", row.name, e);
            }
        }
    }
    Ok(if failed { ExitCode::from(2) } else { ExitCode::SUCCESS })
}

fn groups_order(file: &PathBuf, caps: CapArgs) -> Result<ExitCode> {
    let text = std::fs::read_to_string(file).with_context(|| format!("reading {}", file.display()))?;
    let p = Presentation::parse(&text)?;
    match group_order(&p, caps.cosets()) {
        Ok(n) => {
            println!("{}", n);
            Ok(ExitCode::SUCCESS)
        }
        Err(e) => {
            eprintln!("{}", e);
            Ok(ExitCode::from(2))
        }
    }
}

fn shapes_enumerate(group: &str, axes: &str) -> Result<ExitCode> {
    let act = standard_action(group, axes).ok_or_else(|| anyhow!("no action {} on {}", group, axes))?;
    let list = enumerate_shapes(&act, 4);
    let sizes: Vec<String> = act.orbit_sizes().iter().map(|s| s.to_string()).collect();
    println!("group,orbits,shape,forbidden");
    for s in &list.shapes {
        let forbidden = if s.forbidden().is_some() { "y" } else { "n" };
        println!("{},{},{},{}", group, sizes.join("+"), s, forbidden);
    }
    if list.upper_bound {
        eprintln!("normalizer out of reach: {} is an upper bound", list.shapes.len());
    }
    Ok(ExitCode::SUCCESS)
}

fn construct_one(group: &str, axes: &str, text: &str, format: Format, caps: CapArgs) -> Result<ExitCode> {
    let act = standard_action(group, axes).ok_or_else(|| anyhow!("no action {} on {}", group, axes))?;
    let list = enumerate_shapes(&act, 4);
    let shape = list
        .shapes
        .iter()
        .find(|s| s.to_string() == text || s.matches(text))
        .ok_or_else(|| anyhow!("no shape {:?} for {} on {}", text, group, axes))?;
    let result = construct(shape, caps.engine())?;
    let rec = Record::new(shape, &result);
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&rec)?),
        Format::Text | Format::Csv => {
            let show = |x: Option<String>| x.unwrap_or_else(|| "?".into());
            println!(
                "{} {} {}: {:?} dim {} m {} form {}",
                group,
                axes,
                rec.shape,
                rec.status,
                show(rec.dim.map(|d| d.to_string())),
                show(rec.m.map(|d| d.to_string())),
                show(rec.form.map(|f| f.to_string()))
            );
        }
    }
    Ok(if rec.dim.is_some() { ExitCode::SUCCESS } else { ExitCode::from(2) })
}

fn reproduce(table: &str, extended: bool, format: Format, caps: CapArgs) -> Result<ExitCode> {
    let reports: Vec<RowReport> = match table {
        "1" => golden::reproduce_table1(&golden::table1(), caps.cosets()),
        "3" => golden::reproduce_table3(&golden::table3()),
        "4" => {
            let rows: Vec<_> = golden::table4().into_iter().filter(|r| extended || !r.is_extended()).collect();
            golden::reproduce_table4(&rows, caps.engine())
        }
        other => bail!("no table {}", other),
    };
    let tally = Tally::of(&reports);
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&reports)?),
        Format::Csv => {
            println!("row,outcome,detail");
            for r in &reports {
                let (kind, detail) = match &r.outcome {
                    Outcome::Match => ("match", String::new()),
                    Outcome::Mismatch { cells } => (
                        "mismatch",
                        cells.iter().map(|c| format!("{} {}!={}", c.column, c.expected, c.got)).collect::<Vec<_>>().join("; "),
                    ),
                    Outcome::Inconclusive { reason } => ("inconclusive", reason.clone()),
                    Outcome::Skipped { got } => ("skipped", got.clone()),
                };
                println!("\"{}\",{},\"{}\"", r.row, kind, detail.replace('"', "'"));
            }
        }
        Format::Text => {
            for r in &reports {
                println!("{}", r);
            }
            println!(
                "{} match, {} mismatch, {} inconclusive, {} skipped",
                tally.matched, tally.mismatched, tally.inconclusive, tally.skipped
            );
        }
    }
    Ok(exit_for(tally))
}

fn run(cli: Cli) -> Result<ExitCode> {
    let caps = cli.caps;
    match &cli.command {
        Command::Catalog(CatalogCmd::Verify { tag, format }) => catalog_verify(*tag, *format),
        Command::Catalog(CatalogCmd::Dump { tag }) => catalog_dump(*tag),
        Command::Groups(GroupsCmd::Table1) => groups_table1(caps),
        Command::Groups(GroupsCmd::Order { file }) => groups_order(file, caps),
        Command::Shapes(ShapesCmd::Enumerate { group, axes }) => shapes_enumerate(group, axes),
        Command::Construct { group, axes, shape, format } => construct_one(group, axes, shape, *format, caps),
        Command::Reproduce { table, extended, format } => reproduce(table, *extended, *format, caps),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(cli.jobs).build_global() {
        eprintln!("error: {}", e);
        return ExitCode::from(3);
    }
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {:#}", e);
            ExitCode::from(3)
        }
    }
}
