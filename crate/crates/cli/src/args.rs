use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qschur::Partition;

#[derive(Parser, Debug)]
#[command(name = "qschur", version, about = "Exact Schur Q-function and Stembridge coefficient toolkit")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Directory holding the coefficient cache; no cache when unset.
    #[arg(long, global = true, env = "QSCHUR_CACHE_DIR")]
    pub cache_dir: Option<PathBuf>,
    /// Worker threads for verification runs.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// A single coefficient: g, f, e, restriction or pushforward.
    Coeff(CoeffArgs),
    /// A whole expansion.
    Expand(ExpandArgs),
    /// Check an identity over a range of inputs.
    Verify(VerifyArgs),
    /// Hook lengths of an ordinary or shifted diagram.
    Hooks(ShapeArgs),
    /// Number of standard (or shifted standard) tableaux.
    Degree(ShapeArgs),
    /// Frobenius coordinates and the A, B, C, D sequences.
    Frobenius(FrobeniusArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum CoeffKind {
    G,
    F,
    E,
    Restrict,
    Pushforward,
}

#[derive(Args, Debug)]
pub struct CoeffArgs {
    #[arg(value_enum)]
    pub kind: CoeffKind,
    #[arg(long)]
    pub lambda: Option<Partition>,
    #[arg(long)]
    pub mu: Option<Partition>,
    #[arg(long)]
    pub nu: Option<Partition>,
    #[arg(long)]
    pub n: Option<usize>,
    /// Require agreement of every available route before printing.
    #[arg(long)]
    pub cross_check: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum ExpandWhat {
    /// η(s_μ) in the Q basis.
    Eta,
    /// The Macdonald–You sum in the Q basis.
    My,
    /// i^*(σ_μ) in Schubert classes of the Lagrangian Grassmannian.
    Restrict,
    /// i_*(σ'_λ) in Schubert classes of the Grassmannian.
    Pushforward,
    /// Q_λ in the monomial basis.
    Q,
    /// P_λ in the Schur basis.
    P,
    /// Q_μ · Q_ν in the Q basis.
    Product,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum VariantArg {
    Ab,
    Cd,
}

#[derive(Args, Debug)]
pub struct ExpandArgs {
    #[arg(value_enum)]
    pub what: ExpandWhat,
    #[arg(long)]
    pub mu: Option<Partition>,
    #[arg(long)]
    pub nu: Option<Partition>,
    #[arg(long)]
    pub lambda: Option<Partition>,
    #[arg(long, value_enum, default_value_t = VariantArg::Ab)]
    pub variant: VariantArg,
    #[arg(long)]
    pub n: Option<usize>,
    /// List the signed summands instead of their sum (`my` only).
    #[arg(long)]
    pub terms: bool,
    #[arg(long)]
    pub cross_check: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, ValueEnum, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Identity {
    Eq12,
    Eq16,
    Eq20,
    Eq24,
    Eq30,
    Lemma3,
    Nonneg,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub identity: Option<Identity>,
    /// Select the identity by proposition number (3, 4, 5 or 6).
    #[arg(long)]
    pub prop: Option<u8>,
    #[arg(long)]
    pub mu: Option<Partition>,
    #[arg(long)]
    pub max_weight: Option<usize>,
    #[arg(long)]
    pub n: Option<usize>,
    /// Stop starting new instances after this many seconds.
    #[arg(long)]
    pub budget_secs: Option<u64>,
}

#[derive(Args, Debug)]
pub struct ShapeArgs {
    #[arg(long)]
    pub shape: Partition,
    #[arg(long)]
    pub shifted: bool,
    #[arg(long)]
    pub cross_check: bool,
}

#[derive(Args, Debug)]
pub struct FrobeniusArgs {
    #[arg(long)]
    pub mu: Partition,
}
