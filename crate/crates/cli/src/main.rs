//! `topo-index`: exact degree-based indices of k-th subdivision and k-th
//! semi-total point graphs, and an audit of their closed forms.
//!
//! Exit codes: 0 when every comparison matched, 1 on any mismatch, 2 on a
//! usage or input error.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use topo_index::report::{
    render_catalog, render_indices, render_record, render_report, render_summary_table, IndexReport,
};
use topo_index::verify::{default_families, DEFAULT_KMAX, DEFAULT_SEED};
use topo_index::{
    catalog, compute_all, generate, parse_formula_list, run_audit, verify_formula, Error, Family,
    FormulaId, Graph, OutputFormat, SuiteSpec, Transform,
};

#[derive(Parser)]
#[command(
    name = "topo-index",
    version,
    about = "Degree-based topological indices of derived graphs"
)]
struct Cli {
    /// Increase log verbosity (-v, -vv).
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    verbose: u8,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute M1, M2, F, Π1, Π2, HM and SDD of a graph or of its S_k / R_k.
    Indices {
        #[command(flatten)]
        graph: GraphArgs,
        /// Apply this transform first (sk or rk).
        #[arg(long)]
        kind: Option<Transform>,
        #[arg(long, default_value_t = 0, requires = "kind")]
        k: usize,
        #[arg(long, default_value = "json")]
        format: OutputFormat,
    },
    /// Write S_k(G) or R_k(G) as an edge list.
    Transform {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        kind: Transform,
        #[arg(long)]
        k: usize,
        /// Output file; standard output when omitted.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Check one closed form on one graph at one k.
    Verify {
        /// Formula id such as T2.14 or CR_REC_7.
        #[arg(long)]
        formula: String,
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        k: u32,
        #[arg(long, default_value = "json")]
        format: OutputFormat,
    },
    /// Check a set of closed forms over a suite of graphs.
    Audit {
        #[command(flatten)]
        suite: SuiteArgs,
        /// Write the full report here; otherwise it goes to standard output
        /// and the summary table to standard error.
        #[arg(long)]
        report: Option<PathBuf>,
        #[arg(long, default_value = "json")]
        format: OutputFormat,
    },
    /// List every formula with its transform, index, k_min and inputs.
    Catalog {
        #[arg(long, default_value = "markdown")]
        format: OutputFormat,
    },
}

#[derive(Args)]
struct GraphArgs {
    /// Edge-list file.
    #[arg(long, conflicts_with = "family", required_unless_present = "family")]
    input: Option<PathBuf>,
    /// path, cycle, complete, star, complete_bipartite, random_regular or erdos_renyi.
    #[arg(long)]
    family: Option<String>,
    #[arg(long)]
    size: Option<usize>,
    #[arg(long)]
    size2: Option<usize>,
    /// Degree for random_regular.
    #[arg(long)]
    r: Option<usize>,
    /// Edge probability for erdos_renyi.
    #[arg(long)]
    p: Option<f64>,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
}

impl GraphArgs {
    fn family(&self) -> Result<Family, Error> {
        match (&self.input, &self.family) {
            (Some(path), _) => Ok(Family::FromFile { path: path.clone() }),
            (None, Some(name)) => {
                Family::from_parts(name, self.size, self.size2, self.r, self.p, self.seed)
            }
            (None, None) => Err(Error::InvalidFamily("give --input or --family".into())),
        }
    }

    fn load(&self) -> Result<(String, Graph), Error> {
        let family = self.family()?;
        let graph = generate(&family)?;
        Ok((family.to_string(), graph))
    }
}

#[derive(Args)]
struct SuiteArgs {
    /// Restrict the default suite to these family names (comma separated).
    #[arg(long, conflicts_with_all = ["input", "family"])]
    families: Option<String>,
    /// Audit a single edge-list file instead of the default suite.
    #[arg(long, conflicts_with = "family")]
    input: Option<PathBuf>,
    /// Audit a single generated graph instead of the default suite.
    #[arg(long)]
    family: Option<String>,
    #[arg(long)]
    size: Option<usize>,
    #[arg(long)]
    size2: Option<usize>,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long)]
    p: Option<f64>,
    #[arg(long, default_value_t = DEFAULT_KMAX)]
    kmax: u32,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// List or range of formula ids, e.g. `T2.1..T2.13,CS_REG_2`; default all.
    #[arg(long, default_value = "all")]
    formulas: String,
    /// Also evaluate k below each formula's k_min (flagged, not counted).
    #[arg(long)]
    below_kmin: bool,
}

impl SuiteArgs {
    fn spec(&self) -> Result<SuiteSpec, CliError> {
        let formulas = parse_formula_list(&self.formulas).map_err(formula_error)?;
        if formulas.is_empty() {
            return Err(CliError::usage("--formulas selected nothing"));
        }
        let families = if let Some(path) = &self.input {
            vec![Family::FromFile { path: path.clone() }]
        } else if let Some(name) = &self.family {
            vec![Family::from_parts(
                name, self.size, self.size2, self.r, self.p, self.seed,
            )?]
        } else {
            let all = default_families(self.seed);
            match &self.families {
                None => all,
                Some(list) => {
                    let wanted: Vec<String> = list
                        .split(',')
                        .map(|s| s.trim().to_ascii_lowercase().replace('-', "_"))
                        .filter(|s| !s.is_empty())
                        .collect();
                    if let Some(bad) = wanted
                        .iter()
                        .find(|w| !all.iter().any(|f| f.name() == w.as_str()))
                    {
                        return Err(Error::UnknownFamily(bad.clone()).into());
                    }
                    all.into_iter()
                        .filter(|f| wanted.iter().any(|w| w == f.name()))
                        .collect()
                }
            }
        };
        Ok(SuiteSpec {
            families,
            kmax: self.kmax,
            seed: self.seed,
            formulas,
            include_below_kmin: self.below_kmin,
        })
    }
}

#[derive(Debug)]
struct CliError(String);

impl CliError {
    fn usage(msg: impl Into<String>) -> CliError {
        CliError(msg.into())
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError(e.to_string())
    }
}

fn formula_error(e: Error) -> CliError {
    let valid: Vec<String> = FormulaId::all().map(|f| f.to_string()).collect();
    CliError(format!("{e}\nvalid formula ids: {}", valid.join(", ")))
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|source| {
        Error::Io {
            path: path.to_path_buf(),
            source,
        }
        .into()
    })
}

fn run(command: Command) -> Result<ExitCode, CliError> {
    match command {
        Command::Indices {
            graph,
            kind,
            k,
            format,
        } => {
            let (mut name, mut g) = graph.load()?;
            if let Some(t) = kind {
                g = t.apply(&g, k);
                name = format!("{}({name}, k={k})", t.short());
            }
            let report = IndexReport::new(&name, &compute_all(&g));
            print!("{}", render_indices(&report, format));
            Ok(ExitCode::SUCCESS)
        }
        Command::Transform {
            graph,
            kind,
            k,
            output,
        } => {
            let (_, g) = graph.load()?;
            let text = kind.apply(&g, k).to_edge_list();
            match output {
                Some(path) => write_file(&path, &text)?,
                None => print!("{text}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            formula,
            graph,
            k,
            format,
        } => {
            let id: FormulaId = formula.parse().map_err(formula_error)?;
            let (name, g) = graph.load()?;
            let record = verify_formula(id, &g, &name, k).map_err(|skip| CliError(skip.reason))?;
            print!("{}", render_record(&record, format));
            log::info!(
                "{id} on {name} at k={k}: predicted {}, actual {}, residual {}",
                record.predicted,
                record.actual,
                record.residual
            );
            Ok(if record.matched {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Audit {
            suite,
            report,
            format,
        } => {
            let spec = suite.spec()?;
            let audit = run_audit(&spec)?;
            let rendered = render_report(&audit, format);
            let table = render_summary_table(&audit);
            match report {
                Some(path) => {
                    write_file(&path, &rendered)?;
                    print!("{table}");
                }
                None => {
                    print!("{rendered}");
                    eprint!("{table}");
                }
            }
            for skip in &audit.skipped {
                log::warn!("skipped {}: {}", skip.graph, skip.reason);
            }
            Ok(if audit.all_matched() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Catalog { format } => {
            print!("{}", render_catalog(&catalog(), format));
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let level = match cli.verbose {
        0 => "warn",
        1 => "info",
        _ => "debug",
    };
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or(level)).init();
    match run(cli.command) {
        Ok(code) => code,
        Err(CliError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
