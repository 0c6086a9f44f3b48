use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "schubert", version, about = "Exact equivariant Schubert calculus on flag manifolds")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Export a family of classes: fixed-point restrictions and Schubert expansions.
    Classes(ClassesArgs),
    /// Run verification suites; exit 1 if any identity fails.
    Verify(VerifyArgs),
    /// Pairing matrix between two families on one space.
    Pair(PairArgs),
    /// The quantum formal derivations and fixture-table products.
    Quantum(QuantumArgs),
}

#[derive(Debug, Clone, Args)]
pub struct SpaceArgs {
    /// Root system type letter (A, B, C, D, G).
    #[arg(long = "type", default_value = "A")]
    pub ty: String,
    #[arg(long, default_value_t = 1)]
    pub rank: usize,
    /// 1-based simple indices generating the parabolic, e.g. `1,3`.
    #[arg(long, value_delimiter = ',')]
    pub parabolic: Vec<usize>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Csm,
    Sm,
    Mc,
    Smc,
    Schubert,
    Fixedpoint,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum SideArg {
    B,
    Bminus,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum TheoryArg {
    H,
    K,
}

#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Csv,
    Latex,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Operators,
    Schubert,
    Csm,
    Motivic,
    Gkm,
    Localization,
    Quantum,
    All,
}

#[derive(Debug, Args)]
pub struct ClassesArgs {
    #[command(flatten)]
    pub space: SpaceArgs,
    #[arg(long, value_enum)]
    pub family: FamilyArg,
    #[arg(long, value_enum, default_value = "b")]
    pub side: SideArg,
    /// Theory for the schubert and fixedpoint families.
    #[arg(long, value_enum, default_value = "h")]
    pub theory: TheoryArg,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub space: SpaceArgs,
    #[arg(long, value_enum)]
    pub suite: Suite,
    /// Structure-table fixture; a bare name is looked up in the fixture directory.
    #[arg(long)]
    pub fixtures: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct PairArgs {
    #[command(flatten)]
    pub space: SpaceArgs,
    /// Two families, e.g. `csm,sm` or `schubert_b,schubert_bminus`. Without
    /// a `_b`/`_bminus` suffix the first is taken on the B side and the
    /// second on the B⁻ side.
    #[arg(long, value_delimiter = ',', num_args = 1..)]
    pub family: Vec<String>,
    #[arg(long, value_enum, default_value = "h")]
    pub theory: TheoryArg,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct QuantumArgs {
    #[arg(long)]
    pub fixtures: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}
