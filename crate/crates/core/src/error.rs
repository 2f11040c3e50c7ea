use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{line}:{column}: expected {}, found {found}", expected.join(" or "))]
    Parse {
        line: usize,
        column: usize,
        expected: Vec<String>,
        found: String,
    },

    #[error("{line}:{column}: `{ident}` is neither an atom ([a-z][a-z0-9_]*) nor a variable ([A-Z][A-Za-z0-9_]*)")]
    AtomCase {
        line: usize,
        column: usize,
        ident: String,
    },

    #[error("invalid atom name `{0}`")]
    InvalidAtom(String),

    #[error("invalid variable name `{0}`")]
    InvalidVar(String),

    #[error("term is not closed: contains variable `{0}`")]
    OpenTerm(String),

    #[error("term depth {depth} exceeds the limit of {limit}")]
    DepthLimit { depth: usize, limit: usize },

    #[error("{operation} does not accept the connective {connective}")]
    UnsupportedConnective {
        operation: &'static str,
        connective: &'static str,
    },

    #[error("valuation does not assign atom `{0}`")]
    UnboundAtom(String),

    #[error("malformed valuation `{0}`: expected atom=0|1 pairs separated by commas")]
    Valuation(String),

    #[error("no binding for variable `{0}`")]
    MissingBinding(String),

    #[error("signature error in `{schema}`: {reason}")]
    Signature { schema: String, reason: String },

    #[error("not a mem-basic form: atom `{0}` repeats on a path")]
    NotMemBasic(String),

    #[error("not a valid mUNBF: atom `{0}` occurs below its own node")]
    InvalidMunbf(String),

    #[error("unknown schema table `{0}`")]
    UnknownTable(String),
}
