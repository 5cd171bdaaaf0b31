//! Error type shared by all modules of the crate.

use thiserror::Error;

use crate::bits::BitString;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// A bit string's length does not match the expected qubit count.
    #[error("bit string `{got}` has length {}, expected {expected}", got.len())]
    BitLengthMismatch { expected: usize, got: BitString },

    /// A register would exceed the supported qubit capacity.
    #[error("{requested} qubits requested, the supported maximum is {max}")]
    CapacityExceeded { requested: usize, max: usize },

    /// A register of zero qubits was requested.
    #[error("a register must hold at least one qubit")]
    EmptyRegister,

    /// A 1-based qubit index fell outside the register.
    #[error("qubit index {index} out of range for a {n_qubits}-qubit register (indices are 1-based)")]
    IndexOutOfRange { index: usize, n_qubits: usize },

    /// A gate's target also appears as a control, or a qubit is listed twice.
    #[error("qubit {index} appears more than once in one gate application")]
    OverlappingIndices { index: usize },

    /// A 2x2 gate matrix failed the unitarity check.
    #[error("gate matrix is not unitary (worst deviation {deviation:.3e})")]
    NonUnitaryMatrix { deviation: f64 },

    /// Two states that must share a register size do not.
    #[error("state dimension mismatch: {left} vs {right} qubits")]
    DimensionMismatch { left: usize, right: usize },

    /// Amplitudes that must form a unit vector do not.
    #[error("state is not normalized (squared norm {norm_sqr:.17})")]
    NotNormalized { norm_sqr: f64 },

    /// A measurement was requested on an empty target list.
    #[error("measurement needs at least one target qubit")]
    NoTargets,

    /// Amplitude weight was found outside the subspace a projection assumed.
    #[error("residual weight {weight:.3e} outside the projected subspace")]
    ResidualWeight { weight: f64 },

    /// A discrimination-table label does not name a row.
    #[error("`{label}` is not a row label of the {family} table")]
    UnknownLabel { family: &'static str, label: BitString },

    /// A text document (state, circuit, or table) failed to parse.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// Discrimination was requested against a basis that is not orthogonal.
    #[error("the verbatim {family} table is not orthogonal and admits no projective discriminator; use the repaired table")]
    NotDiscriminable { family: &'static str },

    /// A table-level contract failed (non-unique repair, generator mismatch).
    #[error("table contract violated: {msg}")]
    TableContract { msg: String },

    /// An encoding produced a non-deterministic discrimination branch.
    #[error("encoding for message `{message}` produced {branches} discrimination branches, expected exactly one")]
    NondeterministicEncoding { message: BitString, branches: usize },

    /// Two encodings map to the same discrimination label, so the codebook
    /// cannot decode. `collisions` lists the colliding message pairs.
    #[error("codebook on qubits {qubits:?} is degenerate: {distinct} distinct labels for 16 messages")]
    DegenerateCodebook {
        qubits: [usize; 2],
        distinct: usize,
        collisions: Vec<(BitString, BitString)>,
    },

    /// A dialogue turn decoded to a different message than was sent.
    #[error("dialogue decoded `{decoded}` for sent message `{sent}`")]
    DecodeMismatch { sent: BitString, decoded: BitString },
}

pub type Result<T> = std::result::Result<T, Error>;
