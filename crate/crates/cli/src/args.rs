use clap::{Args, Parser, Subcommand};

/// Normal forms, equivalence and axiom checking for short-circuit logic.
///
/// Expressions use `T F U`, lowercase atoms, `!`, `&&`, `||`, `<->`, `^^`,
/// `~&`, `~|`, postfix `'` and the conditional `x <| y |> z`. Pass `-` to
/// read an expression from stdin.
#[derive(Debug, Parser)]
#[command(name = "sclc", version)]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Global {
    /// Free valuation congruence (basic forms).
    #[arg(long, global = true, conflicts_with = "mem")]
    pub free: bool,
    /// Memorising valuation congruence (mem-basic forms); the default.
    #[arg(long, global = true)]
    pub mem: bool,
    /// Allow `U` in schema instances and enumerations.
    #[arg(long, global = true)]
    pub three_valued: bool,
    #[arg(long, global = true, conflicts_with_all = ["text", "dot"])]
    pub json: bool,
    #[arg(long, global = true, conflicts_with = "dot")]
    pub text: bool,
    /// Graphviz output (`norm` and `tree` only).
    #[arg(long, global = true)]
    pub dot: bool,
    /// Print with ASCII operators instead of Unicode.
    #[arg(long, global = true)]
    pub ascii: bool,
    /// Abbreviate `x ~& T` as `x'`.
    #[arg(long, global = true)]
    pub primes: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the normal form of EXPR.
    Norm { expr: String },
    /// Decide whether two expressions are congruent (exit 0) or not (exit 1).
    Eq { lhs: String, rhs: String },
    /// Print the dual of EXPR.
    Dual { expr: String },
    /// Evaluate EXPR left to right under a valuation.
    Eval {
        expr: String,
        /// Comma-separated `atom=0|1` pairs.
        #[arg(long = "val", value_name = "VALUATION")]
        valuation: String,
        /// Also print the atoms in the order they were first inspected.
        #[arg(long)]
        trace: bool,
    },
    /// Translate a `!`, `&&`, `||` expression into sequential NAND.
    ToNand { expr: String },
    /// Translate a NAND expression back into `!` and `&&`.
    FromNand { expr: String },
    /// Print the NAND normal form of EXPR, or with `--enumerate`, of every
    /// mem-basic form over the given atoms.
    Munbf {
        #[arg(required_unless_present = "enumerate")]
        expr: Option<String>,
        /// Comma-separated atoms.
        #[arg(long, value_name = "ATOMS", conflicts_with = "expr")]
        enumerate: Option<String>,
    },
    /// Print the evaluation tree of EXPR's normal form (DOT by default).
    Tree { expr: String },
    /// Builtin axiom tables.
    Axioms {
        #[command(subcommand)]
        command: AxiomsCommand,
    },
}

#[derive(Debug, Subcommand)]
pub enum AxiomsCommand {
    /// Check every schema of TABLE.
    Check {
        table: String,
        /// Also try all instances over mem-basic forms with K atoms.
        #[arg(long, value_name = "K")]
        exhaustive: Option<usize>,
        /// Maximum number of exhaustive instances per schema.
        #[arg(long, value_name = "N", default_value_t = sclc_core::axioms::DEFAULT_INSTANTIATION_CAP)]
        cap: u64,
        /// Print one line per schema.
        #[arg(short, long)]
        verbose: bool,
    },
    /// List the tables, or the schemas of TABLE.
    List { table: Option<String> },
}
