use alloc::string::String;
use core::fmt;

use crate::partitions::Partition;

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// Everything that can go wrong inside the library.
///
/// The `Violation` variant is reserved for broken internal invariants: a
/// canonical-basis reduction that does not certify, a missing `mu_plus`, a
/// bar-position ambiguity. Callers should treat it as a bug, not bad input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// `h` must be odd and at least 3.
    InvalidH(u32),
    /// Parts were not weakly decreasing or contained a zero.
    MalformedPartition(String),
    /// The partition is not h-strict where an h-strict one is required.
    NotHStrict(Partition),
    /// The partition given as a block core is not an h-bar-core.
    NotACore(Partition),
    /// Residue outside `0..=n`.
    InvalidResidue { residue: u32, n: u32 },
    /// Two partitions of different sizes were compared by dominance.
    SizeMismatch { left: u32, right: u32 },
    /// `subtract` was asked to delete a part that is not there.
    MissingPart(u32),
    /// An operation that only makes sense for one bar-weight got another.
    WrongWeight { expected: u32, found: u32 },
    /// The difference between two partitions is not made of i-nodes.
    NotINodeDifference { residue: u32 },
    /// Laurent division that does not come out exact.
    InexactDivision,
    /// Enumeration would exceed the configured size cap.
    ResourceLimit(String),
    /// Text could not be parsed.
    Parse(String),
    /// The requested operation is outside what is supported.
    Unsupported(String),
    /// A mathematical invariant failed; always an implementation bug.
    Violation(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidH(h) => write!(f, "h must be an odd integer >= 3, got {h}"),
            Error::MalformedPartition(s) => write!(f, "malformed partition: {s}"),
            Error::NotHStrict(p) => write!(f, "{p} is not h-strict"),
            Error::NotACore(p) => write!(f, "{p} is not an h-bar-core"),
            Error::InvalidResidue { residue, n } => {
                write!(f, "residue {residue} out of range 0..={n}")
            }
            Error::SizeMismatch { left, right } => {
                write!(f, "cannot compare partitions of sizes {left} and {right}")
            }
            Error::MissingPart(a) => write!(f, "part {a} not present"),
            Error::WrongWeight { expected, found } => {
                write!(f, "expected bar-weight {expected}, found {found}")
            }
            Error::NotINodeDifference { residue } => {
                write!(f, "difference is not a set of {residue}-nodes")
            }
            Error::InexactDivision => write!(f, "Laurent polynomial division is not exact"),
            Error::ResourceLimit(s) => write!(f, "resource limit exceeded: {s}"),
            Error::Parse(s) => write!(f, "parse error: {s}"),
            Error::Unsupported(s) => write!(f, "unsupported: {s}"),
            Error::Violation(s) => write!(f, "internal invariant violated: {s}"),
        }
    }
}

impl core::error::Error for Error {}

macro_rules! violation {
    ($($arg:tt)*) => {
        $crate::error::Error::Violation(alloc::format!($($arg)*))
    };
}
pub(crate) use violation;
