use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("adder width {0} is not a perfect square >= 4")]
    InvalidWidth(usize),
    #[error("qubit index {index} out of range for {n_qubits} qubits")]
    QubitOutOfRange { index: usize, n_qubits: usize },
    #[error("gate {kind} expects {expected} qubits, got {got}")]
    Arity { kind: String, expected: usize, got: usize },
    #[error("gate {0} repeats a qubit index")]
    RepeatedQubit(String),
    #[error("circuits have mismatched qubit counts ({0} vs {1})")]
    QubitCountMismatch(usize, usize),
    #[error("non-classical gate {0}; use the statevector simulator")]
    NonClassical(String),
    #[error("{n} qubits exceeds the dense limit of {limit}")]
    TooManyQubits { n: usize, limit: usize },
    #[error("operands {0} are not adjacent")]
    NotAdjacent(String),
    #[error("operand {operand} out of range: {value} >= 2^{bits}")]
    OperandRange { operand: &'static str, value: u64, bits: usize },
    #[error("unsupported cost model {0}; supported: t14s1, t14s3, t12s3, t12s1")]
    UnsupportedCostModel(String),
    #[error("block {0} has no {1} form")]
    UnsupportedBlock(String, String),
    #[error("block {block} expects {expected} ports, got {got}")]
    PortCount { block: String, expected: String, got: usize },
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
