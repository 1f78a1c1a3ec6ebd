use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Construct, realize and classify ideal right-angled hyperbolic polyhedra
/// and hybrid Coxeter gluings.
#[derive(Parser, Debug)]
#[command(name = "rapoly", version, about)]
pub struct Cli {
    /// Seed for the realization solver's restart jitter.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Realization residual tolerance.
    #[arg(long, global = true, env = "RAPOLY_TOL", default_value_t = 1e-10)]
    pub tol: f64,

    /// Longest cycle enumerated by the arithmeticity test (default: number
    /// of faces).
    #[arg(long, global = true)]
    pub max_cycle_len: Option<usize>,

    /// Node budget for cycle enumeration.
    #[arg(long, global = true, default_value_t = 10_000_000)]
    pub budget: u64,

    /// Output format.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Shorthand for `--format json`.
    #[arg(long, global = true)]
    pub json: bool,

    /// Shorthand for `--format csv`.
    #[arg(long, global = true)]
    pub csv: bool,

    /// Shorthand for `--format text`.
    #[arg(long, global = true)]
    pub text: bool,

    /// Shorthand for `--format svg`.
    #[arg(long, global = true)]
    pub svg: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
    Svg,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print a polytope in the `polytope v1` format.
    Gen {
        #[command(subcommand)]
        shape: Shape,
    },
    /// The antiprism `A_n` with two edges of its top face twisted, `k - 2`
    /// edges apart.
    Twist { n: usize, k: usize },
    /// Glue `A_k` and `A_m` along a triangle.
    Glue {
        k: usize,
        m: usize,
        /// Also report whether the result is isomorphic to the twisted
        /// antiprism `A_{k+m-2,k}`.
        #[arg(long)]
        check_iso: bool,
    },
    /// Check Andreev's conditions; exits with status 2 on a violation.
    Andreev(Input),
    /// Solve for the face normals.
    Realize(Input),
    /// Gram matrix of the realized face normals.
    Gram(Input),
    /// Hyperbolic volume.
    Volume {
        #[command(flatten)]
        input: Input,
        /// Ideal vertex to cone from.
        #[arg(long)]
        apex: Option<usize>,
    },
    /// Arithmeticity of the reflection group.
    Arith(Input),
    /// Minimal polynomials of the short cycle products.
    Fingerprint(Input),
    /// Glue two Coxeter polygons, or combine two right-angled pieces into a
    /// nonarithmeticity verdict.
    Hybrid(HybridArgs),
    /// Link complements built from antiprisms.
    Links {
        #[command(subcommand)]
        action: LinksAction,
    },
    /// Regenerate a classification table.
    Table {
        #[command(subcommand)]
        which: Table,
    },
}

#[derive(Subcommand, Debug)]
pub enum Shape {
    Antiprism { n: usize },
    Tetrahedron,
    Cube,
    TriangularPrism,
    Prism { n: usize },
    Pyramid { n: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Antiprism,
    Twist,
}

/// Where a polytope comes from: a file, standard input or a family.
#[derive(Args, Debug)]
pub struct Input {
    /// Polytope file.
    #[arg(value_name = "FILE", conflicts_with_all = ["stdin", "family"])]
    pub path: Option<PathBuf>,
    /// Read the polytope from standard input.
    #[arg(long, conflicts_with = "family")]
    pub stdin: bool,
    /// Build the polytope instead of reading it.
    #[arg(long, value_enum, requires = "n")]
    pub family: Option<Family>,
    #[arg(long)]
    pub n: Option<usize>,
    /// Twist spacing, for `--family twist`.
    #[arg(long)]
    pub k: Option<usize>,
}

#[derive(Args, Debug)]
pub struct HybridArgs {
    /// A Coxeter polygon as comma-separated angles, e.g. `pi/4,pi/8,pi/2,pi/2`.
    /// Give exactly two.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "piece")]
    pub polygon: Vec<String>,
    /// Interface side of each polygon; side `i` joins vertices `i` and `i+1`.
    #[arg(long)]
    pub side: Vec<usize>,
    /// A right-angled piece: `antiprism:N`, `twist:N:K` or a polytope file.
    /// Give exactly two.
    #[arg(long)]
    pub piece: Vec<String>,
    /// Interface face of each piece (default 2, a triangle).
    #[arg(long)]
    pub face: Vec<usize>,
}

#[derive(Subcommand, Debug)]
pub enum LinksAction {
    /// Volume, arithmeticity and class label of a link complement.
    Classify {
        n: usize,
        /// `c` for `C_{4n+1}`, `d` for the chain link `D_{2n}`.
        #[arg(long, value_enum, default_value_t = LinkFamilyArg::C)]
        family: LinkFamilyArg,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum LinkFamilyArg {
    C,
    D,
}

#[derive(Subcommand, Debug)]
pub enum Table {
    /// Twisted antiprisms: decomposition, volume additivity, arithmeticity.
    Theorem3 {
        #[arg(long, default_value_t = 8)]
        max_n: usize,
    },
    /// The `C_{4n+1}` link family: volume, arithmeticity, class labels.
    Theorem4 {
        #[arg(long, default_value_t = 6)]
        max_n: usize,
    },
}
