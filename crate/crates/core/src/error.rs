use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("unsupported extension degree {0} (expected 1 or 2)")]
    UnsupportedDegree(u32),
    #[error("modulus x^2 + {1}x + {0} is reducible over F_p")]
    ReducibleModulus(u32, u32),
    #[error("truncation mismatch: {0} vs {1}")]
    TruncationMismatch(usize, usize),
    #[error("shape mismatch: {0:?} vs {1:?}")]
    ShapeMismatch(Vec<u32>, Vec<u32>),
    #[error("index {index} out of range 0..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("word length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("grade mismatch: {0} vs {1}")]
    GradeMismatch(usize, usize),
    #[error("matrix is {got:?}, expected {expected:?}")]
    MatrixShape { expected: (usize, usize), got: (usize, usize) },
    #[error("complex is not a complex: d∘d ≠ 0 at degree {0}")]
    NotAComplex(i32),
    #[error("size cap exceeded: {what} has size {size}, cap {cap}")]
    SizeCap { what: &'static str, size: u64, cap: u64 },
    #[error("budget exceeded: {what} needs {needed}, budget {budget}")]
    Budget { what: &'static str, needed: u64, budget: u64 },
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("io: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
