use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::checks::Check;

#[derive(Debug, Parser)]
#[command(
    name = "emdpoly",
    version,
    about = "Exact EMD numerator polynomials, symmetric-difference sums and Wiener indices"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalOpts {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Plain, global = true)]
    pub format: Format,

    /// Largest number of ordered pairs a brute-force sum may visit.
    #[arg(long, default_value_t = emdpoly::DEFAULT_MAX_PAIRS, global = true)]
    pub max_pairs: u64,

    /// Largest Hasse diagram (vertex count) that may be built.
    #[arg(long, default_value_t = emdpoly::DEFAULT_MAX_VERTICES, global = true)]
    pub max_vertices: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Recursive,
    Closed,
    Symdiff,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Recursive => "recursive",
            Method::Closed => "closed",
            Method::Symdiff => "symdiff",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SeriesKind {
    /// `N_pq(t) / (1-t)^(p+q)`: summed EMD over composition pairs.
    N,
    /// `W_pq(t) / (1-t)^(p+q-1)`: number of composition pairs.
    W,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print N_n(t), or N_pq(t) with --p/--q.
    Npoly(NpolyArgs),
    /// Print W_pq(t).
    Wpoly { p: u64, q: u64 },
    /// Expected EMD between two uniformly random compositions of s into n parts.
    Expect {
        s: u64,
        n: u64,
        /// Also print a decimal rounded to this many digits.
        #[arg(long)]
        decimal: Option<usize>,
    },
    /// Limit of E[EMD]/s as s grows, for n bins.
    Limit {
        n: u64,
        #[arg(long)]
        decimal: Option<usize>,
    },
    /// Wiener index of the lattice Par(a×b).
    Wiener {
        a: u64,
        b: u64,
        /// Also compute it by BFS on the Hasse diagram and compare.
        #[arg(long)]
        brute: bool,
    },
    /// Series coefficients of a rational generating function.
    Series(SeriesArgs),
    /// Run verification sweeps; exit code 0 iff every check passes.
    Verify(VerifyArgs),
    /// EMD between two compositions given as comma-separated bins.
    Emd {
        /// First histogram, e.g. `3,0,0`.
        alpha: String,
        /// Second histogram with the same bin count and total.
        beta: String,
        /// Also compute it through the partition bijection and compare.
        #[arg(long)]
        bijection: bool,
    },
}

#[derive(Debug, Args)]
pub struct NpolyArgs {
    /// Diagonal index n (N_n = N_nn).
    #[arg(conflicts_with_all = ["p", "q"], required_unless_present_all = ["p", "q"])]
    pub n: Option<u64>,
    #[arg(long, requires = "q")]
    pub p: Option<u64>,
    #[arg(long, requires = "p")]
    pub q: Option<u64>,
    #[arg(long, value_enum, default_value_t = Method::Recursive)]
    pub method: Method,
}

impl NpolyArgs {
    pub fn shape(&self) -> (u64, u64) {
        match self.n {
            Some(n) => (n, n),
            None => (self.p.unwrap_or(0), self.q.unwrap_or(0)),
        }
    }
}

#[derive(Debug, Args)]
pub struct SeriesArgs {
    /// Diagonal index n, shorthand for --p n --q n.
    #[arg(conflicts_with_all = ["p", "q", "numer"])]
    pub n: Option<u64>,
    #[arg(long, requires = "q", conflicts_with = "numer")]
    pub p: Option<u64>,
    #[arg(long, requires = "p", conflicts_with = "numer")]
    pub q: Option<u64>,
    #[arg(long, value_enum, default_value_t = SeriesKind::N)]
    pub kind: SeriesKind,
    /// Explicit numerator coefficients, lowest degree first.
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true, requires = "pole")]
    pub numer: Option<Vec<i64>>,
    /// Pole order k of the denominator (1-t)^k; used with --numer.
    #[arg(long, requires = "numer")]
    pub pole: Option<u64>,
    #[arg(long, default_value_t = 8)]
    pub terms: usize,
    /// Compare every coefficient against brute-force enumeration.
    #[arg(long, conflicts_with = "numer")]
    pub brute: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Largest polynomial index n (and p, q).
    #[arg(long, default_value_t = 8)]
    pub max_n: u64,
    /// Largest composition size s.
    #[arg(long, default_value_t = 5)]
    pub max_s: u64,
    /// Largest rectangle side for the Wiener checks.
    #[arg(long, default_value_t = 4)]
    pub max_side: u64,
    /// Checks to run (comma-separated); all when omitted.
    #[arg(long, value_enum, value_delimiter = ',')]
    pub checks: Vec<Check>,
}
