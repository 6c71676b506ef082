use thiserror::Error;

/// Errors raised by the computations in this crate.
///
/// The variants split into two families: invalid input (a caller asked for
/// something outside an operation's domain) and internal inconsistency (an
/// identity that must hold failed). [`Error::is_inconsistency`] tells them
/// apart; the command-line front end maps them to distinct exit codes.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("moduli space is empty: Mukai square {square} < -2")]
    NonexistentModuli { square: String },
    #[error("divisibility must be 1 or 2, got {0}")]
    InvalidDivisibility(i64),
    #[error("strata bound violated: ell = {ell} exceeds floor(g/2) - 2 = {bound}")]
    StrataBound { ell: i64, bound: i64 },
    #[error("Beauville-Bogomolov square must be even, got {0}")]
    OddSquare(String),
    #[error("weight is not dominant: {0}")]
    NotDominant(String),
    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),
    #[error("duality fixpoint did not converge within {0} rounds")]
    NonConvergence(usize),
    #[error("spectral sequence does not provably degenerate: {0}")]
    NotDegenerate(String),
    #[error("expected an integer, got {0}")]
    NonIntegral(String),
    #[error("Riemann-Roch system is inconsistent: {0}")]
    InconsistentHrr(String),
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}

impl Error {
    /// True for failures of a mathematical identity, as opposed to misuse.
    pub fn is_inconsistency(&self) -> bool {
        matches!(
            self,
            Error::NonConvergence(_)
                | Error::NonIntegral(_)
                | Error::InconsistentHrr(_)
                | Error::Inconsistent(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
