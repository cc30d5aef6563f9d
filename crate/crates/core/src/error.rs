use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid permutation {0:?}: not a bijection on 1..n")]
    InvalidPermutation(Vec<usize>),
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("operands live in different variable spaces")]
    SpaceMismatch,
    #[error("variable {0} does not exist in the target space")]
    UnknownVariable(String),
    #[error("factor {0} is not a linear form")]
    NonLinearForm(String),
    #[error("polynomial involves non-x variable {0}")]
    NonXVariable(String),
    #[error("polynomial is not in the span of x^c with c_i <= {n}-i")]
    NotInGamma { n: usize },
    #[error("residual exponent {0:?} is not a Lehmer code")]
    InvalidCode(Vec<u32>),
    #[error("invalid composition: {0}")]
    InvalidComposition(String),
    #[error("composition {0:?} has an odd part")]
    OddPart(Vec<usize>),
    #[error("expected an even size, got {0}")]
    OddSize(usize),
    #[error("word {word:?} does not use each letter of {letters:?} exactly once")]
    LetterMismatch { word: Vec<usize>, letters: Vec<usize> },
    #[error("size {n} exceeds the limit {max} for this computation")]
    TooLarge { n: usize, max: usize },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
