//! `lattice-energy`: generate lattices, spectra, energy reports, bound
//! verification sweeps and asymptotic constants from the command line.
//!
//! Data goes to stdout (or `--output`), diagnostics to stderr. Exit status is
//! 0 on success, 1 on a computation error or a failed check, 2 on a usage
//! error.

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use lattice_energy::format::serialize_sig15;
use lattice_energy::quadrature::MIN_TOLERANCE;
use lattice_energy::{
    asymptotic_constant, build_lattice, closed_form_spectrum, energy, energy_report, numeric_spectrum_with_cap,
    verify_family, Boundary, Error, Family, IntegrandId, LatticeSpec, Spectrum, SweepOptions, DEFAULT_SIZE_CAP,
};

#[derive(Debug, Parser)]
#[command(name = "lattice-energy", version, about = "Graph energy of planar lattices")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Write the result to this file instead of stdout.
    #[arg(long, short = 'o', global = true)]
    output: Option<PathBuf>,

    /// Largest vertex count handed to the dense eigensolver.
    #[arg(long, global = true, default_value_t = DEFAULT_SIZE_CAP)]
    size_cap: usize,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Edge list of a lattice.
    Lattice(LatticeArgs),
    /// Adjacency eigenvalues, closed form when available.
    Spectrum {
        #[command(flatten)]
        lattice: LatticeArgs,
        /// Always use the dense eigensolver.
        #[arg(long)]
        numeric: bool,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Energy report with its upper bounds.
    Energy {
        #[command(flatten)]
        lattice: LatticeArgs,
        #[arg(long)]
        numeric: bool,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Check every energy inequality across all five boundary conditions.
    Verify {
        #[arg(long, value_parser = parse_family)]
        family: Family,
        #[arg(long, short = 'n', alias = "n")]
        rows: usize,
        #[arg(long, short = 'm', alias = "m")]
        cols: usize,
    },
    /// Limiting energy per vertex by quadrature.
    Constant {
        #[arg(long, value_enum)]
        family: ConstantFamily,
        /// Dimension of the hypercubic lattice.
        #[arg(long, default_value_t = 2)]
        dim: u32,
        #[arg(long, default_value_t = 1e-4, value_parser = parse_tol)]
        tol: f64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Energy per vertex of n x n lattices for doubling n, against the limit.
    Converge {
        #[arg(long, value_parser = parse_family)]
        family: Family,
        /// Use this boundary with numeric spectra instead of the closed-form
        /// torus.
        #[arg(long, value_parser = parse_boundary)]
        boundary: Option<Boundary>,
        #[arg(long, default_value_t = 16)]
        start: usize,
        #[arg(long, default_value_t = 128)]
        max_n: usize,
        #[arg(long, default_value_t = 1e-4, value_parser = parse_tol)]
        tol: f64,
    },
}

#[derive(Debug, Args)]
struct LatticeArgs {
    #[arg(long, value_parser = parse_family)]
    family: Family,
    #[arg(long, value_parser = parse_boundary, default_value = "toroidal")]
    boundary: Boundary,
    #[arg(long, short = 'n', alias = "n")]
    rows: usize,
    #[arg(long, short = 'm', alias = "m")]
    cols: usize,
}

impl LatticeArgs {
    fn spec(&self) -> Result<LatticeSpec, Failure> {
        LatticeSpec::new(self.family, self.boundary, self.rows, self.cols).map_err(Failure::usage)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ConstantFamily {
    Square,
    Triangular,
    Trisquare,
    Hexagonal,
    Hypercubic,
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse()
}

fn parse_boundary(s: &str) -> Result<Boundary, String> {
    s.parse()
}

fn parse_tol(s: &str) -> Result<f64, String> {
    let tol: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if tol >= MIN_TOLERANCE {
        Ok(tol)
    } else {
        Err(format!("tolerance must be at least {MIN_TOLERANCE:e}"))
    }
}

enum Failure {
    Usage(String),
    Compute(anyhow::Error),
    /// Output was written but at least one check failed.
    ChecksFailed(usize),
}

impl Failure {
    fn usage(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Compute(e)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Compute(e.into())
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Compute(e.into())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Compute(e.into())
    }
}

fn check_cap(vertices: usize, cap: usize) -> Result<(), Failure> {
    if vertices > cap {
        return Err(Failure::usage(Error::TooLarge { vertices, cap }));
    }
    Ok(())
}

fn spectrum_for(spec: &LatticeSpec, numeric: bool, cap: usize) -> Result<Spectrum, Failure> {
    if !numeric {
        match closed_form_spectrum(spec) {
            Err(Error::NoClosedForm(_)) => {}
            other => return Ok(other?),
        }
    }
    check_cap(spec.vertex_count(), cap)?;
    Ok(numeric_spectrum_with_cap(&build_lattice(spec), cap)?)
}

fn json_line<T: Serialize>(value: &T) -> Result<String, Failure> {
    Ok(serde_json::to_string(value)? + "\n")
}

fn csv_table<T: Serialize>(rows: &[T]) -> Result<String, Failure> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in rows {
        w.serialize(row)?;
    }
    let bytes = w.into_inner().map_err(|e| anyhow!("{e}"))?;
    Ok(String::from_utf8(bytes).map_err(|e| anyhow!("{e}"))?)
}

fn emit<T: Serialize>(value: &T, format: Format) -> Result<String, Failure> {
    match format {
        Format::Json => json_line(value),
        Format::Csv => csv_table(std::slice::from_ref(value)),
    }
}

#[derive(Serialize)]
struct SpectrumJson {
    provenance: lattice_energy::Provenance,
    source_vertex_count: usize,
    eigenvalues: Vec<f64>,
}

#[derive(Serialize)]
struct ConvergeRow {
    n: usize,
    #[serde(serialize_with = "serialize_sig15")]
    energy_per_vertex: f64,
    #[serde(serialize_with = "serialize_sig15")]
    deviation: f64,
}

fn run(cli: &Cli) -> Result<(String, Option<Failure>), Failure> {
    let cap = cli.size_cap;
    let out = match &cli.command {
        Command::Lattice(args) => build_lattice(&args.spec()?).to_edge_list(),
        Command::Spectrum { lattice, numeric, format } => {
            let s = spectrum_for(&lattice.spec()?, *numeric, cap)?;
            match format {
                Format::Csv => s.to_csv(),
                Format::Json => json_line(&SpectrumJson {
                    provenance: s.provenance(),
                    source_vertex_count: s.source_vertex_count(),
                    eigenvalues: s.eigenvalues().iter().map(|&v| lattice_energy::format::round_sig15(v)).collect(),
                })?,
            }
        }
        Command::Energy { lattice, numeric, format } => {
            let spec = lattice.spec()?;
            let s = spectrum_for(&spec, *numeric, cap)?;
            emit(&energy_report(&build_lattice(&spec), &s)?, *format)?
        }
        Command::Verify { family, rows, cols } => {
            let spec = LatticeSpec::new(*family, Boundary::Toroidal, *rows, *cols).map_err(Failure::usage)?;
            check_cap(spec.vertex_count(), cap)?;
            let checks = verify_family(*family, *rows, *cols, SweepOptions { size_cap: cap })?;
            let mut out = String::new();
            for c in &checks {
                out.push_str(&json_line(c)?);
            }
            let failed = checks.iter().filter(|c| !c.passed()).count();
            return Ok((out, (failed > 0).then_some(Failure::ChecksFailed(failed))));
        }
        Command::Constant { family, dim, tol, format } => {
            let id = match family {
                ConstantFamily::Square => IntegrandId::Square,
                ConstantFamily::Triangular => IntegrandId::Triangular,
                ConstantFamily::Trisquare => IntegrandId::TriSquare,
                ConstantFamily::Hexagonal => IntegrandId::Hexagonal,
                ConstantFamily::Hypercubic => IntegrandId::Hypercubic(*dim),
            };
            let r = asymptotic_constant(id, *tol).map_err(Failure::usage)?;
            emit(&r, *format)?
        }
        Command::Converge { family, boundary, start, max_n, tol } => {
            let limit = asymptotic_constant((*family).into(), *tol)?.value;
            let mut rows = Vec::new();
            let mut n = *start;
            while n <= *max_n {
                let b = boundary.unwrap_or(Boundary::Toroidal);
                let spec = LatticeSpec::new(*family, b, n, n).map_err(Failure::usage)?;
                let s = match boundary {
                    None => closed_form_spectrum(&spec)?,
                    Some(_) if spec.vertex_count() > cap => break,
                    Some(_) => numeric_spectrum_with_cap(&build_lattice(&spec), cap)?,
                };
                let epv = energy(&s) / spec.vertex_count() as f64;
                rows.push(ConvergeRow { n, energy_per_vertex: epv, deviation: (epv - limit).abs() });
                n *= 2;
            }
            if rows.is_empty() {
                // still emit the header
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(["n", "energy_per_vertex", "deviation"])?;
                String::from_utf8(w.into_inner().map_err(|e| anyhow!("{e}"))?).map_err(|e| anyhow!("{e}"))?
            } else {
                csv_table(&rows)?
            }
        }
    };
    Ok((out, None))
}

fn write_output(path: Option<&PathBuf>, data: &str) -> anyhow::Result<()> {
    match path {
        Some(p) => fs::write(p, data).with_context(|| format!("writing {}", p.display())),
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(data.as_bytes())?;
            stdout.flush()?;
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli).and_then(|(data, pending)| {
        write_output(cli.output.as_ref(), &data)?;
        pending.map_or(Ok(()), Err)
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Compute(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
        Err(Failure::ChecksFailed(n)) => {
            eprintln!("{n} check(s) failed");
            ExitCode::from(1)
        }
    }
}
