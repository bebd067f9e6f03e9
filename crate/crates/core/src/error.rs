use thiserror::Error;

/// Errors raised by the lattice, representation and certificate layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid genus {0}: at least 1 is required")]
    InvalidGenus(usize),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("degenerate twist: the twist class is zero")]
    DegenerateTwist,

    #[error("no completion: {0}")]
    NoCompletion(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("no lantern fits in genus {0} (genus 3 or more required)")]
    NoLantern(usize),

    #[error("lattice mismatch: ({0}, {1}) vs ({2}, {3})")]
    LatticeMismatch(usize, usize, usize, usize),

    #[error("branch not available: {0}")]
    BranchNotAvailable(String),

    #[error("construction failed for {generator}: {reason}")]
    ConstructionFailed { generator: String, reason: String },

    #[error("unbound letter {0}")]
    UnboundLetter(String),

    #[error("word verification failed: {0}")]
    VerificationFailed(String),

    #[error("coverage gap: no word reaches {0}")]
    CoverageGap(String),

    #[error("search budget exceeded: {0}")]
    SearchBudgetExceeded(String),

    #[error("genus {0} mapping class groups are not generated by involutions")]
    NotGeneratedByInvolutions(usize),

    #[error("matrix is not symplectic modulo {0}")]
    NonSymplectic(u64),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
