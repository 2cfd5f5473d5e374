use thiserror::Error;

/// Every failure the toolkit can report. The CLI turns these into
/// `{stage, kind, detail}` objects via [`Error::kind`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed rotation system: {0}")]
    MalformedRotation(String),
    #[error("map is disconnected")]
    Disconnected,
    #[error("Euler relation violated: v - e + f = {v} - {e} + {f}")]
    EulerViolation { v: usize, e: usize, f: usize },
    #[error("map has no cycle")]
    Acyclic,
    #[error("face {face} has degree {degree}, expected {d}")]
    NotDAngulation { face: usize, degree: usize, d: usize },
    #[error("outer face vertices are not distinct")]
    ExternalVerticesNotDistinct,
    #[error("vertex {vertex} has degree {degree}, expected {d}")]
    NotDRegular { vertex: usize, degree: usize, d: usize },
    #[error("no orientation with the prescribed outdegrees: {0}")]
    NoSolution(crate::orientation::Infeasible),
    #[error("girth {girth} is smaller than {d}")]
    GirthTooSmall { girth: usize, d: usize, cycle: Vec<usize> },
    #[error("d = {0} is odd")]
    OddD(usize),
    #[error("not a counterclockwise circuit: {0}")]
    NotACircuit(String),
    #[error("lattice enumeration exceeded {0} elements")]
    ExplosionGuard(usize),
    #[error("invalid labelling: {0}")]
    InvalidLabelling(String),
    #[error("invalid decomposition: {0}")]
    InvalidDecomposition(String),
    #[error("conflicting colors while propagating at corner {0}")]
    PropagationConflict(usize),
    #[error("cycle is not admissible: {0}")]
    NotAdmissible(String),
    #[error("structure is not even: {0}")]
    NotEven(String),
    #[error("mincut is smaller than {0}")]
    MincutTooSmall(usize),
    #[error("internal invariant violated: {0}")]
    InternalInvariantViolation(String),
    #[error("triple rejected at {0:?}")]
    Invalid(DecodeStage),
    #[error("no sample accepted within {0} attempts")]
    RejectionLimitExceeded(u64),
    #[error("enumeration cap exceeded: {0}")]
    CapExceeded(String),
    #[error("bad input: {0}")]
    Format(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum DecodeStage {
    TreeReconstructionFailed,
    ClosureFailed,
    ValidationFailed,
}

impl Error {
    pub fn kind(&self) -> &'static str {
        match self {
            Error::MalformedRotation(_) => "MalformedRotation",
            Error::Disconnected => "Disconnected",
            Error::EulerViolation { .. } => "EulerViolation",
            Error::Acyclic => "Acyclic",
            Error::NotDAngulation { .. } => "NotDAngulation",
            Error::ExternalVerticesNotDistinct => "ExternalVerticesNotDistinct",
            Error::NotDRegular { .. } => "NotDRegular",
            Error::NoSolution(_) => "NoSolution",
            Error::GirthTooSmall { .. } => "GirthTooSmall",
            Error::OddD(_) => "OddD",
            Error::NotACircuit(_) => "NotACircuit",
            Error::ExplosionGuard(_) => "ExplosionGuard",
            Error::InvalidLabelling(_) => "InvalidLabelling",
            Error::InvalidDecomposition(_) => "InvalidDecomposition",
            Error::PropagationConflict(_) => "PropagationConflict",
            Error::NotAdmissible(_) => "NotAdmissible",
            Error::NotEven(_) => "NotEven",
            Error::MincutTooSmall(_) => "MincutTooSmall",
            Error::InternalInvariantViolation(_) => "InternalInvariantViolation",
            Error::Invalid(_) => "Invalid",
            Error::RejectionLimitExceeded(_) => "RejectionLimitExceeded",
            Error::CapExceeded(_) => "CapExceeded",
            Error::Format(_) => "Format",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
