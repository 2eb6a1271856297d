//! `spart`: command-line runs over spectral partitions of planar domains.

mod commands;
mod output;
mod svg;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use output::Format;

#[derive(Parser, Debug)]
#[command(name = "spart", version, about = "Spectra, nodal domains, minimal partitions and spectral bounds for planar domains")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

/// Flags shared by every command. A command ignores the ones it has no use
/// for, and records the ones it used in the config header of each table.
#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Domain: `square`, `unit-square`, `unit-hexagon`, `unit-triangle`,
    /// `unit-disk`, or a key-value spec such as `rectangle a=1 b=2`.
    #[arg(long, global = true)]
    pub domain: Option<String>,
    /// Grid spacing.
    #[arg(long, global = true)]
    pub h: Option<f64>,
    /// Number of cells, or the eigenvalue rank to draw.
    #[arg(long, global = true)]
    pub k: Option<usize>,
    /// Final exponent of the annealing schedule (partition).
    #[arg(long, global = true)]
    pub p: Option<f64>,
    /// Uniform θ samples per sweep.
    #[arg(long, global = true)]
    pub theta_count: Option<usize>,
    /// Number of eigenvalues to compute or list.
    #[arg(long, global = true)]
    pub n_max: Option<usize>,
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Output directory, created if missing.
    #[arg(long, global = true, default_value = "out")]
    pub out: PathBuf,
    #[arg(long, global = true, value_enum, default_value_t = Format::Both)]
    pub format: Format,
    /// Do not echo tables to stdout.
    #[arg(long, global = true)]
    pub quiet: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Pleijel-type constants and the break-even values of the bounds.
    Constants,
    /// Exact spectrum of a rectangle, optionally with Courant-sharp ranks.
    Spectrum {
        /// Classify every rank with eigenvalue up to this value.
        #[arg(long)]
        courant: Option<f64>,
    },
    /// Lowest Dirichlet eigenpairs of a domain on a grid.
    Solve {
        /// Also run the Richardson-extrapolated ground energy.
        #[arg(long)]
        extrapolate: bool,
    },
    /// θ-sweep of nodal counts in a two-dimensional rectangle eigenspace.
    Nodal {
        #[arg(long, default_value_t = 1)]
        m: u32,
        #[arg(long, default_value_t = 3)]
        n: u32,
        /// Second pair; defaults to `(n, m)`.
        #[arg(long, requires = "n2")]
        m2: Option<u32>,
        #[arg(long, requires = "m2")]
        n2: Option<u32>,
    },
    /// Search for a minimal k-partition.
    Partition {
        #[arg(long)]
        restarts: Option<usize>,
        /// Stage iteration cap.
        #[arg(long)]
        max_iter: Option<usize>,
    },
    /// Bipartite approximation of a checkpointed partition.
    Bipartite {
        #[arg(long)]
        checkpoint: PathBuf,
        /// Tube width in units of h (at least 2).
        #[arg(long, default_value_t = 2.0)]
        eps: f64,
    },
    /// Upper bound on the minimal k-partition energy from a tiling.
    TilingBound {
        /// `hexagon` or `square`.
        #[arg(long, default_value = "hexagon")]
        cell: String,
    },
    /// Aharonov-Bohm spectrum with a nodal-count scan, or a characterization
    /// check of a checkpointed partition.
    Ab {
        /// Poles as `x,y;x,y`. Defaults to the domain centroid.
        #[arg(long)]
        poles: Option<String>,
        /// Move poles to the nearest plaquette centers.
        #[arg(long)]
        snap: bool,
        /// Check a checkpointed partition instead of scanning.
        #[arg(long)]
        check: Option<PathBuf>,
    },
    /// Every bound report for a domain.
    Bounds {
        /// Constant of the quantitative Faber-Krahn inequality.
        #[arg(long, default_value_t = 1.0)]
        c: f64,
        /// Constant of the uncertainty principle, for the Pleijel factor.
        #[arg(long, default_value_t = 0.1)]
        c_up: f64,
        /// Eigenvalue at which to compare the counting function with Weyl's
        /// law; defaults to the value where Weyl predicts 40 eigenvalues.
        #[arg(long)]
        lambda: Option<f64>,
        /// Also audit and check a checkpointed partition.
        #[arg(long)]
        checkpoint: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let c = &cli.common;
    let result = match &cli.command {
        Command::Constants => commands::constants(c),
        Command::Spectrum { courant } => commands::spectrum(c, *courant),
        Command::Solve { extrapolate } => commands::solve(c, *extrapolate),
        Command::Nodal { m, n, m2, n2 } => {
            let q = match (m2, n2) {
                (Some(a), Some(b)) => (*a, *b),
                _ => (*n, *m),
            };
            commands::nodal(c, (*m, *n), q)
        }
        Command::Partition { restarts, max_iter } => commands::partition(c, *restarts, *max_iter),
        Command::Bipartite { checkpoint, eps } => commands::bipartite(c, checkpoint, *eps),
        Command::TilingBound { cell } => commands::tiling_bound(c, cell),
        Command::Ab { poles, snap, check } => commands::ab(c, poles.as_deref(), *snap, check.as_deref()),
        Command::Bounds { c: big_c, c_up, lambda, checkpoint } => commands::bounds(c, *big_c, *c_up, *lambda, checkpoint.as_deref()),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("spart: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
