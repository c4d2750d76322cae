//! Command implementations behind the `xorclique` binary.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use xorclique_core::bounds::{report, BoundReport, ReportOptions};
use xorclique_core::constructions::{
    affine_construction, best_known_lower, big_n_construction, stacked_affine,
    weighted_pk_construction,
};
use xorclique_core::latin_squares::{latin_family_from_mols, parse_squares};
use xorclique_core::set_family::{trivial_construction, verify_semiintersecting, FamilyParams};
use xorclique_core::solver::{
    build_xor_product, family_to_clique, solve_f, write_dimacs, Method, SolveOptions,
    SolverOptions, DEFAULT_VERTEX_CAP,
};
use xorclique_core::{Error, SetFamily, SolveStatus};

/// Environment variable overriding the solver's vertex cap.
pub const VERTEX_CAP_VAR: &str = "XORCLIQUE_VERTEX_CAP";

#[derive(Debug, Parser)]
#[command(
    name = "xorclique",
    version,
    about = "Semiintersecting families and Xor-product cliques"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ConstructMethod {
    Trivial,
    Affine,
    Stacked,
    Bign,
    Weighted,
    Latin,
    Best,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a family and print it as JSON.
    Construct {
        #[arg(long, value_enum)]
        method: ConstructMethod,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        p: Option<usize>,
        #[arg(long)]
        l: Option<usize>,
        #[arg(long = "N")]
        n: Option<usize>,
        /// Whitespace-separated squares, blank line between squares.
        #[arg(long)]
        mols_file: Option<PathBuf>,
        /// Output file; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a family; exits 1 when it is not semiintersecting.
    Verify {
        /// Input file; stdin when absent or `-`.
        #[arg(long = "in")]
        input: Option<PathBuf>,
    },
    /// Report lower and upper bounds on f(k, N).
    Bounds {
        #[arg(long)]
        k: usize,
        #[arg(long = "N")]
        n: usize,
        #[arg(long)]
        ramsey_threshold: Option<u64>,
    },
    /// Compute f(k, N) with the clique solver when the graph is small enough.
    Solve {
        #[arg(long)]
        k: usize,
        #[arg(long = "N")]
        n: usize,
        /// For example `60s`, `500ms`, `2m`.
        #[arg(long, value_parser = humantime::parse_duration)]
        time_limit: Option<Duration>,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        /// Write the Xor product in DIMACS format before solving.
        #[arg(long)]
        export_dimacs: Option<PathBuf>,
    },
    /// Bound reports for every 1 <= k <= k-max, k <= N <= N-max, as CSV.
    Table {
        #[arg(long)]
        k_max: usize,
        #[arg(long = "N-max")]
        n_max: usize,
        #[arg(long)]
        out_csv: Option<PathBuf>,
        #[arg(long)]
        ramsey_threshold: Option<u64>,
    },
}

/// A failed command: process exit code plus the message for stderr.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn params(e: Error) -> Self {
        Failure {
            code: 2,
            message: format!("{}: {}", e.name(), e),
        }
    }

    fn input(e: Error) -> Self {
        Failure {
            code: 3,
            message: format!("{}: {}", e.name(), e),
        }
    }

    fn io(path: &Path, e: io::Error) -> Self {
        Failure {
            code: 3,
            message: format!("Io: {}: {e}", path.display()),
        }
    }
}

fn missing(flag: &str, method: &str) -> Failure {
    Failure::params(Error::InvalidParams(format!(
        "--{flag} is required for method {method}"
    )))
}

/// Runs a command, writing its primary output to `out`. `Ok(code)` is the
/// exit code of a command that ran to completion.
pub fn run(cli: Cli, out: &mut dyn Write) -> Result<i32, Failure> {
    match cli.command {
        Command::Construct {
            method,
            k,
            p,
            l,
            n,
            mols_file,
            out: path,
        } => {
            let fam = construct(method, k, p, l, n, mols_file.as_deref())?;
            let text = fam.to_json_pretty() + "\n";
            emit(out, path.as_deref(), &text)?;
            Ok(0)
        }
        Command::Verify { input } => {
            let text = read_input(input.as_deref())?;
            let fam = SetFamily::from_json(&text).map_err(Failure::input)?;
            let rep = verify_semiintersecting(&fam);
            emit(out, None, &(to_json(&rep) + "\n"))?;
            Ok(if rep.valid { 0 } else { 1 })
        }
        Command::Bounds {
            k,
            n,
            ramsey_threshold,
        } => {
            let rep = report(k, n, &report_options(ramsey_threshold)).map_err(Failure::params)?;
            emit(out, None, &(to_json(&rep) + "\n"))?;
            Ok(0)
        }
        Command::Solve {
            k,
            n,
            time_limit,
            threads,
            export_dimacs,
        } => {
            let cap = vertex_cap()?;
            if let Some(path) = export_dimacs {
                let g = build_xor_product(n, k, cap).map_err(Failure::params)?;
                let file = fs::File::create(&path).map_err(|e| Failure::io(&path, e))?;
                write_dimacs(&g, io::BufWriter::new(file)).map_err(|e| Failure::io(&path, e))?;
            }
            let opts = SolveOptions {
                solver: SolverOptions {
                    time_limit,
                    threads,
                    ..Default::default()
                },
                vertex_cap: cap,
                report: ReportOptions::default(),
            };
            let outcome = solve_f(k, n, &opts).map_err(Failure::params)?;
            let json = SolveJson::from_outcome(&outcome).map_err(Failure::params)?;
            emit(out, None, &(to_json(&json) + "\n"))?;
            Ok(0)
        }
        Command::Table {
            k_max,
            n_max,
            out_csv,
            ramsey_threshold,
        } => {
            let opts = report_options(ramsey_threshold);
            let mut buf = Vec::new();
            write_table(k_max, n_max, &opts, &mut buf).map_err(Failure::params)?;
            let text = String::from_utf8(buf).expect("csv is utf-8");
            emit(out, out_csv.as_deref(), &text)?;
            Ok(0)
        }
    }
}

fn construct(
    method: ConstructMethod,
    k: Option<usize>,
    p: Option<usize>,
    l: Option<usize>,
    n: Option<usize>,
    mols_file: Option<&Path>,
) -> Result<SetFamily, Failure> {
    use ConstructMethod::*;
    let name = format!("{method:?}").to_lowercase();
    let need = |v: Option<usize>, flag: &str| v.ok_or_else(|| missing(flag, &name));
    let fam = match method {
        Trivial => {
            let params =
                FamilyParams::new(need(k, "k")?, need(n, "N")?).map_err(Failure::params)?;
            Ok(trivial_construction(params))
        }
        Affine => affine_construction(need(p, "p")?),
        Stacked => stacked_affine(need(p, "p")?, need(l, "l")?),
        Bign => big_n_construction(need(p, "p")?, need(n, "N")?),
        Weighted => weighted_pk_construction(need(k, "k")?, need(p, "p")?),
        Latin => {
            let path = mols_file.ok_or_else(|| missing("mols-file", &name))?;
            let text = fs::read_to_string(path).map_err(|e| Failure::io(path, e))?;
            let squares = parse_squares(&text).map_err(Failure::input)?;
            let order = squares.first().map(|s| s.order()).unwrap_or(0);
            latin_family_from_mols(&squares, k.unwrap_or(order))
        }
        Best => {
            let (k, n) = (need(k, "k")?, need(n, "N")?);
            best_known_lower(k, n).and_then(|lb| {
                lb.witness.ok_or_else(|| {
                    Error::InvalidParams(format!(
                        "best family for k={k}, N={n} has {} members, too large to write out",
                        lb.value
                    ))
                })
            })
        }
    };
    fam.map_err(Failure::params)
}

fn report_options(ramsey_threshold: Option<u64>) -> ReportOptions {
    let mut opts = ReportOptions::default();
    if let Some(t) = ramsey_threshold {
        opts.ramsey_threshold = t;
    }
    opts
}

fn vertex_cap() -> Result<usize, Failure> {
    match std::env::var(VERTEX_CAP_VAR) {
        Ok(v) => v.trim().parse().map_err(|_| {
            Failure::params(Error::InvalidParams(format!(
                "{VERTEX_CAP_VAR} must be a non-negative integer, got {v:?}"
            )))
        }),
        Err(_) => Ok(DEFAULT_VERTEX_CAP),
    }
}

fn read_input(path: Option<&Path>) -> Result<String, Failure> {
    match path {
        Some(p) if p != Path::new("-") => fs::read_to_string(p).map_err(|e| Failure::io(p, e)),
        _ => {
            let mut s = String::new();
            io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Failure::io(Path::new("<stdin>"), e))?;
            Ok(s)
        }
    }
}

fn emit(out: &mut dyn Write, path: Option<&Path>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Failure::io(p, e)),
        None => out
            .write_all(text.as_bytes())
            .map_err(|e| Failure::io(Path::new("<stdout>"), e)),
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("output serializes")
}

/// Output of `solve`.
#[derive(Debug, Serialize)]
pub struct SolveJson {
    pub k: usize,
    #[serde(rename = "N")]
    pub n: usize,
    pub size: u64,
    pub status: SolveStatus,
    pub method: Method,
    /// Vertex ids in the Xor product, empty when the family is unavailable.
    pub witness: Vec<usize>,
    pub family: Option<serde_json::Value>,
    pub lower: u64,
    pub upper: Option<u64>,
    pub nodes: u64,
    pub ms: u64,
}

impl SolveJson {
    pub fn from_outcome(o: &xorclique_core::SolveOutcome) -> Result<Self, Error> {
        let rep = &o.report;
        let witness = match (&o.clique, &o.family) {
            (Some(c), _) => c.witness.clone(),
            (None, Some(f)) => family_to_clique(f).unwrap_or_default(),
            (None, None) => Vec::new(),
        };
        let family = o
            .family
            .as_ref()
            .map(|f| serde_json::from_str(&f.to_json()).expect("family JSON round-trips"));
        Ok(SolveJson {
            k: rep.k as usize,
            n: rep.n as usize,
            size: o.size(),
            status: o.status(),
            method: o.method,
            witness,
            family,
            lower: rep.lower.value,
            upper: rep.min_upper().map(|u| u.value),
            nodes: o.clique.as_ref().map_or(0, |c| c.nodes),
            ms: o.clique.as_ref().map_or(0, |c| c.elapsed_ms),
        })
    }
}

#[derive(Debug, Serialize)]
struct TableRow<'a> {
    k: u64,
    #[serde(rename = "N")]
    n: u64,
    lower: u64,
    lower_provenance: &'a str,
    upper_min: Option<u64>,
    upper_rule: Option<&'a str>,
    exact: Option<u64>,
}

/// Writes one CSV row per `(k, N)` with `1 <= k <= k_max`, `k <= N <= n_max`.
pub fn write_table<W: Write>(
    k_max: usize,
    n_max: usize,
    opts: &ReportOptions,
    out: W,
) -> Result<(), Error> {
    let mut w = csv::Writer::from_writer(out);
    for k in 1..=k_max {
        for n in k..=n_max {
            let rep: BoundReport = report(k, n, opts)?;
            let up = rep.min_upper();
            w.serialize(TableRow {
                k: rep.k,
                n: rep.n,
                lower: rep.lower.value,
                lower_provenance: &rep.lower.provenance,
                upper_min: up.map(|u| u.value),
                upper_rule: up.map(|u| u.rule.as_str()),
                exact: rep.exact,
            })
            .map_err(|e| Error::Malformed(e.to_string()))?;
        }
    }
    w.flush().map_err(|e| Error::Malformed(e.to_string()))
}
