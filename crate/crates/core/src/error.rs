use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

/// Errors raised by constructors and operations on invalid input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Sieve bound below 2.
    SieveBoundTooSmall(u64),
    /// Integer outside the range an operation accepts.
    OutOfRange { what: &'static str, value: u64 },
    /// A prime factor of `n` exceeds the sieve bound.
    SieveTooSmall { n: u64, bound: u64 },
    /// `m` does not divide `N - 1`.
    ClassCountDoesNotDivide { modulus: u64, m: usize },
    /// `N ≢ 1 (mod 2m)`: classes would have odd size and could not be symmetric.
    OddClassSize { modulus: u64, m: usize },
    /// Class zero came out smaller than `(N - 1) / m`.
    NotAGenerator { modulus: u64, x: u64 },
    /// Two residue sets over different moduli were combined.
    ModulusMismatch { left: u64, right: u64 },
    /// Scaling factor not invertible mod `N`.
    NotAUnit { modulus: u64, c: u64 },
    /// Residue `value` is not below the modulus.
    ResidueOutOfRange { modulus: u64, value: u64 },
    /// Classes do not partition `Z_N ∖ {0}`.
    NotAPartition { modulus: u64, residue: u64 },
    /// Relation-algebra check requested above its size cap.
    AboveCap { modulus: u64, cap: u64 },
    /// Search requires at least two colors.
    TooFewColors(usize),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::SieveBoundTooSmall(b) => write!(f, "sieve bound {b} is below 2"),
            Error::OutOfRange { what, value } => write!(f, "{what} out of range: {value}"),
            Error::SieveTooSmall { n, bound } => {
                write!(f, "cannot factor {n}: prime factors may exceed sieve bound {bound}")
            }
            Error::ClassCountDoesNotDivide { modulus, m } => {
                write!(f, "{m} does not divide {modulus} - 1")
            }
            Error::OddClassSize { modulus, m } => {
                write!(f, "{modulus} is not congruent to 1 mod {}", 2 * *m as u64)
            }
            Error::NotAGenerator { modulus, x } => {
                write!(f, "{x} does not generate the multiplicative group mod {modulus}")
            }
            Error::ModulusMismatch { left, right } => {
                write!(f, "residue sets over different moduli ({left} vs {right})")
            }
            Error::NotAUnit { modulus, c } => write!(f, "{c} is not a unit mod {modulus}"),
            Error::ResidueOutOfRange { modulus, value } => {
                write!(f, "residue {value} out of range for modulus {modulus}")
            }
            Error::NotAPartition { modulus, residue } => {
                write!(f, "classes do not partition the nonzero residues mod {modulus} (residue {residue})")
            }
            Error::AboveCap { modulus, cap } => {
                write!(f, "modulus {modulus} exceeds the relation-algebra cap {cap}")
            }
            Error::TooFewColors(m) => write!(f, "search needs at least 2 colors, got {m}"),
        }
    }
}

impl core::error::Error for Error {}
