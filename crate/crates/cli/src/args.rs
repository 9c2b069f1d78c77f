use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "ulrich", version, about = "Exact computations for matrix factorizations on cyclic covers")]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Seed for randomized commands.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Coefficient domain: q, z or fp:<prime>.
    #[arg(long, global = true)]
    pub field: Option<String>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Hilbert function of R/I in one degree.
    Hilb(IdealArgs),
    /// Free rank and torsion of a degree piece of Z[x]/I.
    QuotientZ(IdealArgs),
    /// Build A with A^d = b I from p0 and products of forms.
    Factorize(FactorizeArgs),
    /// Check A^d = b I for a matrix read from JSON.
    Verify(VerifyArgs),
    /// Skew-symmetrize t I - A for a 4x4 doubling matrix and report its Pfaffian.
    Pfaffian(PfaffianArgs),
    /// Deformation table of a rank-two sheaf on a double solid.
    ExtTable(ExtArgs),
    /// h^j(P^n, O(i)).
    Bott(BottArgs),
    /// Cohomology of an (m, m) complete intersection.
    Ci(CiArgs),
    /// Randomized surjectivity check of the sum-of-products map.
    GenericCheck(GenericArgs),
    /// Parameter counts behind the nonexistence bounds.
    Counts(CountsArgs),
    /// Run the built-in golden checks.
    Selftest,
}

#[derive(Debug, Args)]
pub struct VarArgs {
    /// Comma-separated variable names.
    #[arg(long, conflicts_with = "nvars")]
    pub vars: Option<String>,

    /// Number of variables, named x0, x1, ...
    #[arg(long)]
    pub nvars: Option<usize>,
}

#[derive(Debug, Args)]
pub struct PolyInput {
    /// A generator; repeatable.
    #[arg(short = 'e', long = "expr")]
    pub exprs: Vec<String>,

    /// File with one generator per line; `#` starts a comment.
    #[arg(long)]
    pub gens: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct IdealArgs {
    #[command(flatten)]
    pub vars: VarArgs,

    #[command(flatten)]
    pub input: PolyInput,

    /// Degree of the graded piece.
    #[arg(long)]
    pub deg: u32,

    /// Also list a monomial basis of the quotient piece (fields only).
    #[arg(long)]
    pub basis: bool,
}

#[derive(Debug, Args)]
pub struct FactorizeArgs {
    #[command(flatten)]
    pub vars: VarArgs,

    /// Covering degree.
    #[arg(long)]
    pub d: u32,

    /// The form whose d-th power enters b.
    #[arg(long)]
    pub p0: Option<String>,

    /// Comma-separated factors of one product; repeatable.
    #[arg(long = "prod")]
    pub prods: Vec<String>,

    /// Primitive d-th root of unity in the prime field.
    #[arg(long)]
    pub zeta: Option<u64>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub vars: VarArgs,

    #[arg(long)]
    pub d: u32,

    /// The branch polynomial.
    #[arg(short = 'b', long = "branch")]
    pub b: String,

    /// JSON file: rows of strings, or a certificate (possibly wrapped by --json) with an "A" field.
    #[arg(long)]
    pub matrix: PathBuf,
}

#[derive(Debug, Args)]
pub struct PfaffianArgs {
    #[command(flatten)]
    pub vars: VarArgs,

    #[arg(long)]
    pub matrix: PathBuf,

    /// Optional branch polynomial; checks pf = +-(t^2 - b).
    #[arg(short = 'b', long = "branch")]
    pub b: Option<String>,
}

#[derive(Debug, Args)]
pub struct ExtArgs {
    #[command(flatten)]
    pub vars: VarArgs,

    #[command(flatten)]
    pub input: PolyInput,

    #[arg(long)]
    pub m: u32,
}

#[derive(Debug, Args)]
pub struct BottArgs {
    #[arg(long)]
    pub n: u32,

    #[arg(long, allow_hyphen_values = true)]
    pub i: i64,

    /// Cohomological degree; all of 0..=n when omitted.
    #[arg(long)]
    pub j: Option<u32>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum SheafArg {
    Ideal,
    Structure,
}

#[derive(Debug, Args)]
pub struct CiArgs {
    #[arg(long)]
    pub n: u32,

    #[arg(long)]
    pub m: u32,

    #[arg(long, value_enum, default_value = "ideal")]
    pub sheaf: SheafArg,

    /// Twist; defaults to m.
    #[arg(long, allow_hyphen_values = true)]
    pub i: Option<i64>,
}

#[derive(Debug, Args)]
pub struct GenericArgs {
    #[arg(long, default_value_t = 4)]
    pub nvars: usize,

    #[arg(long)]
    pub m: u32,

    #[arg(long, default_value_t = 10)]
    pub trials: usize,

    /// Run trials on the calling thread only.
    #[arg(long)]
    pub sequential: bool,
}

#[derive(Debug, Args)]
pub struct CountsArgs {
    #[arg(long, default_value_t = 3)]
    pub n: u32,

    #[arg(long)]
    pub m: u32,
}
