//! Batch front end for the divergence catalog: compute single measures,
//! regenerate the reference tables, sweep the inequality chains, audit
//! generators, and report the non-comparability crossings.
//!
//! Exit codes: 0 success, 1 chain violation (the known-broken
//! `eq56-printed` chain does not fail a run), 2 parse error, 3 distribution
//! validation error.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use meandiv::csiszar::{audit_generator, default_audit_grid};
use meandiv::distributions::{random_pair, Distribution};
use meandiv::divergences::{divergence, generator_catalog, generator_of, MeasureId};
use meandiv::inequalities::{builtin_chains, crossing_scan, parse_chains, sigma_sg_i, ChainSpec};
use meandiv::refinement::{refinement_divergence, RefinementId};
use meandiv::sweep::{sweep_chains, SweepConfig};
use meandiv::tables::{binary_family_value, section_value, Section, TABLE1_X, TABLE2_T};

#[derive(Parser)]
#[command(
    name = "meandiv",
    version,
    about = "Mean-divergence measures, tables and chain audits"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute one measure on a pair of distribution files.
    ///
    /// Files hold one positive real per line, or comma/whitespace-separated
    /// values. Measures: sa sg sh ag ah gh hellinger triangular
    /// jensen_shannon j_divergence taneja_t bhattacharyya harmonic_w, or a
    /// refinement divergence f1..f10.
    Compute {
        measure: String,
        p_file: PathBuf,
        q_file: PathBuf,
        /// Rescale each input to unit mass instead of requiring it.
        #[arg(long)]
        normalize: bool,
    },
    /// Print the generator-section table a(x)..f(x) on the reference grid.
    Table1 {
        /// Decimal places (round-half-even).
        #[arg(long, default_value_t = 4)]
        precision: usize,
        /// Also write the table as CSV to this path.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Print the binary-family table a(t)..f(t), including the zero row at
    /// t = 1/2.
    Table2 {
        #[arg(long, default_value_t = 4)]
        precision: usize,
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Sweep inequality chains over seeded random pairs and report worst
    /// slacks.
    VerifyChains {
        /// Number of seeded pairs.
        #[arg(long, default_value_t = 100_000)]
        seeds: u64,
        #[arg(long = "n-min", default_value_t = 2)]
        n_min: usize,
        #[arg(long = "n-max", default_value_t = 32)]
        n_max: usize,
        /// Per-link slack tolerance.
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
        /// Audit chains from this file instead of the builtin catalog.
        /// Grammar, one chain per line:
        /// `name : coeff*MEASURE [+ coeff*MEASURE] <= ... <= term`
        /// with rational coefficients like `1/3`.
        #[arg(long)]
        chains: Option<PathBuf>,
        /// Write per-chain results as CSV to this path.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Report the sign-change brackets separating the square-root/geometric
    /// and Jensen-Shannon measures, plus the sigma witness values.
    Crossings,
    /// Audit every catalog generator on the default grid.
    AuditGenerators {
        /// Absolute floor of the finite-difference tolerance.
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn parse(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }

    fn validation(message: impl Into<String>) -> Self {
        Failure {
            code: 3,
            message: message.into(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn run(command: Command) -> Result<ExitCode, Failure> {
    match command {
        Command::Compute {
            measure,
            p_file,
            q_file,
            normalize,
        } => cmd_compute(&measure, &p_file, &q_file, normalize),
        Command::Table1 { precision, csv } => cmd_table(TableKind::Sections, precision, csv),
        Command::Table2 { precision, csv } => cmd_table(TableKind::BinaryFamily, precision, csv),
        Command::VerifyChains {
            seeds,
            n_min,
            n_max,
            tol,
            chains,
            csv,
        } => cmd_verify_chains(seeds, n_min, n_max, tol, chains, csv),
        Command::Crossings => cmd_crossings(),
        Command::AuditGenerators { tol } => cmd_audit_generators(tol),
    }
}

fn parse_reals(path: &Path) -> Result<Vec<f64>, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::parse(format!("{}: {e}", path.display())))?;
    let mut values = Vec::new();
    for token in text.split(|c: char| c.is_whitespace() || c == ',') {
        if token.is_empty() {
            continue;
        }
        let v: f64 = token
            .parse()
            .map_err(|_| Failure::parse(format!("{}: invalid number `{token}`", path.display())))?;
        values.push(v);
    }
    if values.is_empty() {
        return Err(Failure::parse(format!("{}: no values", path.display())));
    }
    Ok(values)
}

fn cmd_compute(
    measure: &str,
    p_file: &Path,
    q_file: &Path,
    normalize: bool,
) -> Result<ExitCode, Failure> {
    let p_raw = parse_reals(p_file)?;
    let q_raw = parse_reals(q_file)?;
    if p_raw.len() != q_raw.len() {
        return Err(Failure::parse(format!(
            "distribution files have different lengths: {} vs {}",
            p_raw.len(),
            q_raw.len()
        )));
    }
    let build = |raw: &[f64], path: &Path| {
        let built = if normalize {
            Distribution::normalize(raw)
        } else {
            Distribution::validate(raw)
        };
        built.map_err(|e| Failure::validation(format!("{}: {e}", path.display())))
    };
    let p = build(&p_raw, p_file)?;
    let q = build(&q_raw, q_file)?;

    let value = if let Ok(k) = measure.parse::<RefinementId>() {
        refinement_divergence(k, &p, &q)
    } else {
        let id: MeasureId = measure
            .parse()
            .map_err(|_| Failure::parse(format!("unknown measure `{measure}`")))?;
        divergence(id, &p, &q)
    }
    .map_err(|e| Failure::validation(e.to_string()))?;

    println!("{value:.11e}");
    Ok(ExitCode::SUCCESS)
}

enum TableKind {
    Sections,
    BinaryFamily,
}

fn cmd_table(kind: TableKind, precision: usize, csv: Option<PathBuf>) -> Result<ExitCode, Failure> {
    let (first_header, abscissae): (&str, Vec<f64>) = match kind {
        TableKind::Sections => ("x", TABLE1_X.to_vec()),
        // the published rows plus the all-zero verification row at 1/2
        TableKind::BinaryFamily => {
            let mut t = TABLE2_T.to_vec();
            t.push(0.5);
            ("t", t)
        }
    };
    let mut headers = vec![first_header.to_string()];
    headers.extend(Section::ALL.iter().map(|s| s.label().to_string()));

    let rows: Vec<Vec<f64>> = abscissae
        .iter()
        .map(|&x| {
            let mut row = vec![x];
            for col in Section::ALL {
                row.push(match kind {
                    TableKind::Sections => section_value(col, x),
                    TableKind::BinaryFamily => binary_family_value(col, x),
                });
            }
            row
        })
        .collect();

    print!("{}", render_aligned(&headers, &rows, precision));
    if let Some(path) = csv {
        write_file(&path, &render_csv(&headers, &rows, precision))?;
    }
    Ok(ExitCode::SUCCESS)
}

fn render_csv(headers: &[String], rows: &[Vec<f64>], precision: usize) -> String {
    let mut out = headers.join(",");
    out.push('\n');
    for row in rows {
        let cells: Vec<String> = row.iter().map(|v| format!("{v:.precision$}")).collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

fn render_aligned(headers: &[String], rows: &[Vec<f64>], precision: usize) -> String {
    let mut cells: Vec<Vec<String>> = vec![headers.to_vec()];
    for row in rows {
        cells.push(row.iter().map(|v| format!("{v:.precision$}")).collect());
    }
    let widths: Vec<usize> = (0..headers.len())
        .map(|c| cells.iter().map(|r| r[c].len()).max().unwrap())
        .collect();
    let mut out = String::new();
    for row in &cells {
        for (c, cell) in row.iter().enumerate() {
            if c > 0 {
                out.push_str("  ");
            }
            let _ = write!(out, "{cell:>width$}", width = widths[c]);
        }
        out.push('\n');
    }
    out
}

fn write_file(path: &Path, contents: &str) -> Result<(), Failure> {
    std::fs::write(path, contents).map_err(|e| Failure::parse(format!("{}: {e}", path.display())))
}

fn cmd_verify_chains(
    seeds: u64,
    n_min: usize,
    n_max: usize,
    tol: f64,
    chains_file: Option<PathBuf>,
    csv: Option<PathBuf>,
) -> Result<ExitCode, Failure> {
    if seeds == 0 || n_min < 2 || n_max < n_min {
        return Err(Failure::parse("need seeds >= 1 and 2 <= n-min <= n-max"));
    }
    let chains: Vec<ChainSpec> = match &chains_file {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::parse(format!("{}: {e}", path.display())))?;
            parse_chains(&text).map_err(|e| Failure::parse(e.to_string()))?
        }
        None => builtin_chains(),
    };
    if chains.is_empty() {
        return Err(Failure::parse("no chains to audit"));
    }

    let cfg = SweepConfig {
        seeds,
        n_min,
        n_max,
        min_mass: 1e-3,
        tol,
    };
    let outcomes = sweep_chains(&chains, &cfg).map_err(|e| Failure::validation(e.to_string()))?;

    let mut failing = false;
    for outcome in &outcomes {
        if outcome.holds {
            println!(
                "{}: holds   (links {}, worst slack {:.3e} at seed {} n {} link {})",
                outcome.chain,
                outcome.links,
                outcome.worst_slack,
                outcome.worst_seed,
                outcome.worst_n,
                outcome.worst_link
            );
        } else {
            println!(
                "{}: VIOLATED on {}/{} pairs (worst slack {:.3e} at seed {} n {} link {})",
                outcome.chain,
                outcome.violations,
                outcome.seeds,
                outcome.worst_slack,
                outcome.worst_seed,
                outcome.worst_n,
                outcome.worst_link
            );
            let (p, q) = random_pair(outcome.worst_n, outcome.worst_seed, cfg.min_mass)
                .map_err(|e| Failure::validation(e.to_string()))?;
            println!("  witness P = {:?}", p.weights());
            println!("  witness Q = {:?}", q.weights());
            let chain = chains.iter().find(|c| c.name() == outcome.chain).unwrap();
            let report = chain
                .evaluate(&p, &q, tol)
                .map_err(|e| Failure::validation(e.to_string()))?;
            println!("  terms = {:?}", report.values);
            if outcome.chain != "eq56-printed" {
                failing = true;
            }
        }
    }

    if let Some(path) = csv {
        let mut out = String::from(
            "chain,links,seeds,violations,worst_slack,worst_link,worst_seed,worst_n,holds\n",
        );
        for o in &outcomes {
            let _ = writeln!(
                out,
                "{},{},{},{},{:e},{},{},{},{}",
                o.chain,
                o.links,
                o.seeds,
                o.violations,
                o.worst_slack,
                o.worst_link,
                o.worst_seed,
                o.worst_n,
                o.holds
            );
        }
        write_file(&path, &out)?;
    }

    Ok(if failing {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}

fn cmd_crossings() -> Result<ExitCode, Failure> {
    let to_failure = |e: meandiv::Error| Failure::validation(e.to_string());

    println!("sigma(1)    = {:.10}", sigma_sg_i(1.0));
    println!("sigma(4.25) = {:.10}", sigma_sg_i(4.25));
    let sigma_flips = crossing_scan(sigma_sg_i, |_| 0.0, 1.0, 4.25, 10_000).map_err(to_failure)?;
    for (a, b) in &sigma_flips {
        println!("sigma sign change bracketed in [{a:.6}, {b:.6}]");
    }

    let sg = generator_of(MeasureId::SG).unwrap();
    let fi = generator_of(MeasureId::JensenShannonI).unwrap();
    let section_flips =
        crossing_scan(|x| 0.5 * sg.f(x), |x| fi.f(x), 0.1, 3900.0, 10_000).map_err(to_failure)?;
    println!("generator sections d(x) = 1/2 f_sg vs e(x) = f_i on [0.1, 3900]:");
    for (a, b) in &section_flips {
        println!("  sign change bracketed in [{a:.4}, {b:.4}]");
    }

    let family_flips = crossing_scan(
        |t| binary_family_value(Section::D, t),
        |t| binary_family_value(Section::E, t),
        1e-5,
        0.4999,
        10_000,
    )
    .map_err(to_failure)?;
    println!("binary family d(t) = M_sg/2 vs e(t) = I on [1e-5, 0.4999]:");
    for (a, b) in &family_flips {
        println!("  sign change bracketed in [{a:.6}, {b:.6}]");
    }
    let d0 = binary_family_value(Section::D, 0.0001);
    let e0 = binary_family_value(Section::E, 0.0001);
    println!("  d(0.0001) = {d0:.4}, e(0.0001) = {e0:.4}");

    Ok(ExitCode::SUCCESS)
}

fn cmd_audit_generators(tol: f64) -> Result<ExitCode, Failure> {
    let grid = default_audit_grid();
    let mut all_upheld = true;
    println!(
        "{:<8}  {:<11}  {:>10}  {:>13}  {:>13}  {:>13}  verdict",
        "name", "claims", "|f(1)|", "min f''", "err f'", "err f''"
    );
    for gen in generator_catalog() {
        let audit = audit_generator(gen, &grid, tol);
        let upheld = audit.claims_upheld();
        all_upheld &= upheld;
        println!(
            "{:<8}  {:<11}  {:>10.1e}  {:>13.4e}  {:>13.1e}  {:>13.1e}  {}{}",
            audit.name,
            if audit.claims_convex {
                "convex"
            } else {
                "non-convex"
            },
            audit.normalization.worst_value,
            audit.convexity.worst_value,
            audit.first_derivative.worst_value,
            audit.second_derivative.worst_value,
            if upheld { "ok" } else { "CLAIMS NOT UPHELD" },
            if !audit.convexity.passed {
                format!(" (f'' < 0 at x = {:.4e})", audit.convexity.worst_x)
            } else {
                String::new()
            }
        );
    }
    Ok(if all_upheld {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
