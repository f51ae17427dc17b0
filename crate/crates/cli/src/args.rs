use std::path::PathBuf;

use aqsc_core::{Orientability, SchlafliSymbol};
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// Markdown table.
    Table,
    Csv,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "aqsc",
    version,
    about = "Asymmetric surface codes on {p,q}-tessellated surfaces"
)]
pub struct Cli {
    /// Output format.
    #[arg(
        long,
        short = 'f',
        global = true,
        value_enum,
        env = "AQSC_FORMAT",
        default_value = "table"
    )]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
#[group(required = true, multiple = false)]
pub struct Orientation {
    #[arg(long)]
    pub orientable: bool,
    #[arg(long)]
    pub non_orientable: bool,
}

impl Orientation {
    pub fn value(&self) -> Orientability {
        if self.orientable {
            Orientability::Orientable
        } else {
            Orientability::NonOrientable
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Parameters of one tessellated surface.
    Params {
        #[command(flatten)]
        orientation: Orientation,
        /// Genus (h for orientable, g for non-orientable surfaces).
        #[arg(short = 'g', long)]
        genus: u32,
        #[arg(short = 'p')]
        p: u32,
        #[arg(short = 'q')]
        q: u32,
        /// Confirm `n_f = 1` records on the explicit complex.
        #[arg(long)]
        confirm: bool,
    },
    /// Reproduce a published table (1-4) or the closed-form families (5).
    Tables {
        #[arg(value_parser = clap::value_parser!(u8).range(1..=5))]
        which: u8,
        /// Evaluate the families of table 5 at this genus.
        #[arg(long)]
        genus: Option<u32>,
    },
    /// Data series behind the rate-comparison (5) and asymmetry (6) plots.
    Figures {
        #[arg(value_parser = clap::value_parser!(u8).range(5..=6))]
        which: u8,
        /// First odd genus.
        #[arg(long, default_value_t = 5)]
        g_min: u32,
        #[arg(long, default_value_t = 31)]
        g_max: u32,
        /// Tessellation for the asymmetry series.
        #[arg(long, default_value = "{3,7}")]
        symbol: SchlafliSymbol,
    },
    /// Run a verification suite.
    Verify {
        #[command(subcommand)]
        suite: Suite,
    },
    /// All admissible tessellations of a surface.
    Enumerate {
        #[command(flatten)]
        orientation: Orientation,
        #[arg(short = 'g', long)]
        genus: u32,
        /// Bound for both p and q.
        #[arg(long, default_value_t = 20)]
        max: u32,
        #[arg(long)]
        p_max: Option<u32>,
        #[arg(long)]
        q_max: Option<u32>,
        /// Keep records with k/n at least this.
        #[arg(long)]
        min_rate: Option<f64>,
    },
    /// Exact k and distances on an explicit complex.
    Oracle {
        #[command(subcommand)]
        source: Source,
        /// Print the complex in the text format instead of analysing it.
        #[arg(long, global = true)]
        dump: bool,
    },
}

#[derive(Debug, Clone, Subcommand)]
pub enum Suite {
    /// Orientable h against non-orientable 2h, and the non-orientable rate gain.
    Theorems {
        #[arg(long, default_value_t = 10)]
        h_max: u32,
        #[arg(long, default_value_t = 20)]
        pq_max: u32,
        #[arg(long, default_value_t = 50)]
        g_max: u32,
    },
    /// Toric law, logical counts and fundamental-polygon confirmation.
    Oracle {
        #[arg(long, default_value_t = 4)]
        toric_max: usize,
    },
    /// Every published table row and the closed-form families.
    Tables,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Source {
    /// `l × l` square lattice on the torus.
    Toric { l: usize },
    /// `l × l` square lattice on the Klein bottle.
    Klein { l: usize },
    /// `l × l` square lattice on the projective plane.
    Projective { l: usize },
    /// Single-face fundamental polygon.
    Polygon {
        #[command(flatten)]
        orientation: Orientation,
        #[arg(short = 'g', long)]
        genus: u32,
    },
    /// Complex in the text format.
    File { path: PathBuf },
}
