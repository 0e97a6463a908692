use thiserror::Error;

/// Coarse classification used by front ends to pick exit statuses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ErrorKind {
    /// The input itself is malformed or violates a structural invariant.
    Invalid,
    /// The input is valid but the requested computation is not offered for it.
    Refused,
    /// A check that theory guarantees to succeed has failed.
    ContractViolation,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RootError {
    #[error("invalid Cartan matrix: {0}")]
    InvalidCartan(String),
    #[error("Cartan matrix is not of finite type: {0}")]
    NotFiniteType(String),
    #[error("unknown Cartan type {0:?}")]
    UnknownType(String),
    #[error("weight {0:?} is not dominant")]
    NotDominant(Vec<String>),
    #[error("node index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("expected a vector of length {expected}, got {got}")]
    WrongLength { expected: usize, got: usize },
    #[error("reflection group enumeration exceeded the limit of {limit} elements")]
    EnumerationLimit { limit: usize },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InvolutionError {
    #[error("invalid involution: {0}")]
    Invalid(String),
    #[error("no simple root is moved by the involution (restricted rank 0)")]
    TrivialRestriction,
    #[error("restricted roots do not form a root system: {0}")]
    NotARootSystem(String),
    #[error("lattice sandwich violated: {0}")]
    Sandwich(String),
    #[error(transparent)]
    Root(#[from] RootError),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FanError {
    #[error("ray {0} is zero")]
    ZeroRay(usize),
    #[error("ray {0} lies outside the Weyl cochamber")]
    OutsideCochamber(usize),
    #[error("ray {0} is not integral on the spherical lattice")]
    NotIntegral(usize),
    #[error("rays {0} and {1} coincide after primitivization")]
    DuplicateRay(usize, usize),
    #[error("ray {0} lies in no cone")]
    UnusedRay(usize),
    #[error("cone {0}: {1}")]
    BadCone(usize, String),
    #[error("cones {0} and {1} do not meet in a common face")]
    ImproperIntersection(usize, usize),
    #[error("fan does not cover the Weyl cochamber")]
    Incomplete,
    #[error("fan is not smooth")]
    NotSmooth,
    #[error("face {0:?} is not a face of the fan")]
    UnknownFace(Vec<usize>),
    #[error("expected a vector of length {expected}, got {got}")]
    WrongLength { expected: usize, got: usize },
    #[error(transparent)]
    Root(#[from] RootError),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SectionError {
    #[error("class value on cone {0} is not in the spherical lattice")]
    NotInLattice(usize),
    #[error("class values on cones {0} and {1} disagree on ray {2}")]
    Incompatible(usize, usize, usize),
    #[error("expected {expected} cone values, got {got}")]
    WrongConeCount { expected: usize, got: usize },
    #[error("weight is not in {0}")]
    OutsideLattice(&'static str),
    #[error("class is not globally generated")]
    NotGloballyGenerated,
    #[error("the region bounded by the class is unbounded")]
    Unbounded,
    #[error("ray {0} does not exist")]
    UnknownRay(usize),
    #[error("restricted index {0} out of range")]
    IndexOutOfRange(usize),
    #[error(transparent)]
    Fan(#[from] FanError),
    #[error(transparent)]
    Root(#[from] RootError),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GitError {
    #[error("class is not ample")]
    NotAmple,
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("contract violation: {0}")]
    ContractViolation(String),
    #[error(transparent)]
    Section(#[from] SectionError),
    #[error(transparent)]
    Fan(#[from] FanError),
    #[error(transparent)]
    Root(#[from] RootError),
}

/// Any error produced by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error(transparent)]
    Root(#[from] RootError),
    #[error(transparent)]
    Involution(#[from] InvolutionError),
    #[error(transparent)]
    Fan(#[from] FanError),
    #[error(transparent)]
    Section(#[from] SectionError),
    #[error(transparent)]
    Git(#[from] GitError),
}

impl RootError {
    pub fn kind(&self) -> ErrorKind {
        match self {
            RootError::EnumerationLimit { .. } | RootError::NotDominant(_) => ErrorKind::Refused,
            _ => ErrorKind::Invalid,
        }
    }
}

impl InvolutionError {
    pub fn kind(&self) -> ErrorKind {
        match self {
            InvolutionError::Root(e) => e.kind(),
            InvolutionError::TrivialRestriction => ErrorKind::Refused,
            _ => ErrorKind::Invalid,
        }
    }
}

impl FanError {
    pub fn kind(&self) -> ErrorKind {
        match self {
            FanError::Incomplete | FanError::NotSmooth => ErrorKind::Refused,
            FanError::Root(e) => e.kind(),
            _ => ErrorKind::Invalid,
        }
    }
}

impl SectionError {
    pub fn kind(&self) -> ErrorKind {
        match self {
            SectionError::NotInLattice(_)
            | SectionError::Incompatible(..)
            | SectionError::WrongConeCount { .. }
            | SectionError::UnknownRay(_)
            | SectionError::IndexOutOfRange(_) => ErrorKind::Invalid,
            SectionError::Fan(e) => e.kind(),
            SectionError::Root(e) => e.kind(),
            _ => ErrorKind::Refused,
        }
    }
}

impl GitError {
    pub fn kind(&self) -> ErrorKind {
        match self {
            GitError::ContractViolation(_) => ErrorKind::ContractViolation,
            GitError::NotAmple | GitError::Precondition(_) => ErrorKind::Refused,
            GitError::Section(e) => e.kind(),
            GitError::Fan(e) => e.kind(),
            GitError::Root(e) => e.kind(),
        }
    }
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::Root(e) => e.kind(),
            Error::Involution(e) => e.kind(),
            Error::Fan(e) => e.kind(),
            Error::Section(e) => e.kind(),
            Error::Git(e) => e.kind(),
        }
    }
}
