//! Crate-wide error type.

use core::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A relation that is not a partial order (a cycle through `a` and `b`).
    InvalidOrder { a: usize, b: usize },
    /// An element id at or past the poset size.
    ElementOutOfRange { id: usize, n: usize },
    /// An operation that requires a nonempty set was given the empty set.
    EmptySet,
    /// An operation that requires a nonempty poset was given an empty one.
    EmptyPoset,
    /// A size guard tripped; pass an explicit limit to override.
    SizeGuard { limit: usize, actual: usize },
    /// A claimed elimination order is not a permutation of the elements.
    NotAPermutation,
    /// A face argument that is not a member of the complex.
    FaceNotInComplex,
    /// An operation that requires a nonempty complex was given the complex
    /// with no faces at all.
    EmptyComplex,
    /// A vertex label outside the complex's vertex set.
    LabelNotInComplex { label: u32 },
    /// Too many labels for the bitset representation.
    UniverseTooLarge { max: usize, actual: usize },
    /// A hypothesis-dependent construction was invoked on an instance that
    /// does not satisfy the hypothesis.
    HypothesisNotSatisfied,
    /// `sigma` is not a nonempty chain inside the required subset.
    NotAChainInW,
    /// Unknown named poset family.
    UnknownFamily,
    /// Parameter outside its documented domain.
    BadParameter(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidOrder { a, b } => {
                write!(
                    f,
                    "relation is not a partial order: cycle through {a} and {b}"
                )
            }
            Error::ElementOutOfRange { id, n } => {
                write!(f, "element id {id} out of range for poset of size {n}")
            }
            Error::EmptySet => write!(f, "operation requires a nonempty set"),
            Error::EmptyPoset => write!(f, "operation requires a nonempty poset"),
            Error::SizeGuard { limit, actual } => {
                write!(f, "size guard: {actual} exceeds limit {limit}")
            }
            Error::NotAPermutation => write!(f, "sequence is not a permutation of the elements"),
            Error::FaceNotInComplex => write!(f, "face is not a member of the complex"),
            Error::EmptyComplex => write!(f, "operation requires a nonempty complex"),
            Error::LabelNotInComplex { label } => {
                write!(f, "label {label} is not a vertex of the complex")
            }
            Error::UniverseTooLarge { max, actual } => {
                write!(
                    f,
                    "universe of {actual} labels exceeds the supported maximum {max}"
                )
            }
            Error::HypothesisNotSatisfied => {
                write!(f, "instance does not satisfy the required hypothesis")
            }
            Error::NotAChainInW => {
                write!(f, "sigma must be a nonempty chain inside the no-meet set W")
            }
            Error::UnknownFamily => write!(f, "unknown poset family"),
            Error::BadParameter(what) => write!(f, "bad parameter: {what}"),
        }
    }
}

impl core::error::Error for Error {}
