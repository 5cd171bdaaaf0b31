//! Non-destructive discrimination of table states.
//!
//! Every repaired table is the common eigenbasis of a fixed set of commuting
//! Pauli words, one per label bit: a row with label `l` is the eigenstate
//! with eigenvalue `(-1)^{l_k}` of the k-th word. Coupling each word to its
//! own ancilla and measuring the ancillas therefore reads the whole label
//! off a table state without disturbing it: the post-measurement data
//! register is exactly the input row.
//!
//! Z-only words are read as plain parities (data-controlled CNOTs onto the
//! ancilla); words containing X factors use a Hadamard-framed ancilla that
//! controls the word on the data register. Either block leaves an eigenstate
//! untouched, and the blocks commute, so the assembled circuit measures all
//! label bits at once with gates drawn only from `{H, CNOT, CZ}`.
//!
//! Discrimination is guaranteed only for tables that pass the orthogonality
//! audit. The five-qubit table as printed does not: its defective row is not
//! an eigenstate of two of the words, so requesting verbatim five-qubit
//! discrimination is reported as a configuration error rather than silently
//! returning wrong labels.

use crate::bits::BitString;
use crate::cluster::{table_state, ClusterTable, Family, TableMode, ORTHO_TOL};
use crate::error::{Error, Result};
use crate::gates::{cnot, cz, h, Circuit};
use crate::qstate::StateVector;

/// One single-qubit factor of an observable word.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Axis {
    X,
    Z,
}

/// A Pauli word whose eigenvalue encodes one label bit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Observable {
    /// Which label bit (1-based) this word reads out.
    pub label_bit: usize,
    /// `(qubit, axis)` factors, at most one per qubit.
    pub factors: Vec<(usize, Axis)>,
}

impl Observable {
    fn new(label_bit: usize, factors: &[(usize, Axis)]) -> Self {
        Observable {
            label_bit,
            factors: factors.to_vec(),
        }
    }

    /// Applies the word to a state.
    pub fn apply(&self, state: &StateVector) -> Result<StateVector> {
        let mut out = state.clone();
        for &(q, axis) in &self.factors {
            let gate = match axis {
                Axis::X => crate::gates::x(q),
                Axis::Z => crate::gates::z(q),
            };
            out = out.apply_gate(&gate)?;
        }
        Ok(out)
    }

    /// `Some(+1)` or `Some(-1)` when `state` is an eigenstate (within
    /// numeric tolerance), `None` otherwise. A Pauli word squares to the
    /// identity, so an expectation of `+-1` certifies an eigenstate.
    pub fn eigenvalue(&self, state: &StateVector) -> Result<Option<i8>> {
        let expectation = state.inner_product(&self.apply(state)?)?.re;
        if (expectation - 1.0).abs() < ORTHO_TOL {
            Ok(Some(1))
        } else if (expectation + 1.0).abs() < ORTHO_TOL {
            Ok(Some(-1))
        } else {
            Ok(None)
        }
    }
}

impl std::fmt::Display for Observable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for &(q, axis) in &self.factors {
            let c = match axis {
                Axis::X => 'X',
                Axis::Z => 'Z',
            };
            write!(f, "{c}{q}")?;
        }
        Ok(())
    }
}

/// The discriminating words of a family, ordered by label bit.
pub fn observables(family: Family) -> Vec<Observable> {
    use Axis::{X, Z};
    match family {
        Family::C4 => vec![
            Observable::new(1, &[(1, Z), (2, Z)]),
            Observable::new(2, &[(1, X), (2, X), (4, Z)]),
            Observable::new(3, &[(3, Z), (4, Z)]),
            Observable::new(4, &[(1, Z), (3, X), (4, X)]),
        ],
        Family::C5 => vec![
            Observable::new(1, &[(3, Z), (5, Z)]),
            Observable::new(2, &[(1, Z), (2, Z)]),
            Observable::new(3, &[(1, X), (2, X), (3, X), (5, X)]),
            Observable::new(4, &[(1, Z), (3, Z), (4, Z)]),
            Observable::new(5, &[(3, X), (4, X), (5, X)]),
        ],
    }
}

/// The ancilla-coupled readout circuit of a family. Data qubits come first
/// (`1..=n`), then one ancilla per label bit (`n+1..=2n`); measuring ancilla
/// `k` in the computational basis yields label bit `k` directly.
pub fn build_ndd_circuit(family: Family) -> Circuit {
    let n = family.n_qubits();
    let words = observables(family);
    let mut circuit =
        Circuit::new(n + words.len()).expect("data plus ancilla register fits the cap");
    for word in &words {
        let anc = n + word.label_bit;
        let all_z = word.factors.iter().all(|&(_, axis)| axis == Axis::Z);
        let gates: Vec<_> = if all_z {
            word.factors.iter().map(|&(q, _)| cnot(q, anc)).collect()
        } else {
            let mut block = vec![h(anc)];
            block.extend(word.factors.iter().map(|&(q, axis)| match axis {
                Axis::X => cnot(anc, q),
                Axis::Z => cz(anc, q),
            }));
            block.push(h(anc));
            block
        };
        for gate in gates {
            circuit.push(gate).expect("observable indices fit the register");
        }
    }
    circuit
}

/// Confirms that every row of the requested table is a common eigenstate of
/// the family's words with the eigenvalues its label claims. Holds for both
/// four-qubit modes and the repaired five-qubit table; fails for the
/// five-qubit table as printed.
pub fn check_discriminable(family: Family, mode: TableMode) -> Result<()> {
    let table = match mode {
        TableMode::Verbatim => ClusterTable::verbatim(family),
        TableMode::Repaired => ClusterTable::repaired(family),
    };
    let words = observables(family);
    for row in table.rows() {
        let state = row.state();
        for word in &words {
            let expected: i8 = if row.label.bit(word.label_bit) { -1 } else { 1 };
            match word.eigenvalue(&state)? {
                Some(e) if e == expected => {}
                _ => return Err(Error::NotDiscriminable { family: family.tag() }),
            }
        }
    }
    Ok(())
}

/// One discrimination outcome: the measured label and the data register
/// after the ancillas are measured and traced out.
#[derive(Clone, Debug)]
pub struct NddOutcome {
    pub label: BitString,
    pub probability: f64,
    pub post_state: StateVector,
}

fn ndd_branches(family: Family, state: &StateVector, seed: Option<u64>) -> Result<Vec<NddOutcome>> {
    let n = family.n_qubits();
    if state.n_qubits() != n {
        return Err(Error::DimensionMismatch {
            left: n,
            right: state.n_qubits(),
        });
    }
    let k = observables(family).len();
    let ancillas = StateVector::basis_state(k, &BitString::from_index(0, k))?;
    let joint = state.tensor(&ancillas)?;
    let out = build_ndd_circuit(family).run(&joint)?;
    let targets: Vec<usize> = (n + 1..=n + k).collect();
    let branches = match seed {
        Some(seed) => vec![out.measure(&targets, seed)?],
        None => out.branch_enumerate(&targets)?,
    };
    branches
        .into_iter()
        .map(|b| {
            // The measured ancillas are exactly |label>, so splitting them
            // off is exact, not an approximation.
            let post_state = b.post_state.project_suffix(&b.bits)?;
            Ok(NddOutcome {
                label: b.bits,
                probability: b.probability,
                post_state,
            })
        })
        .collect()
}

/// Discriminates `state`, sampling the ancilla measurement with `seed`.
/// On a table row the outcome is deterministic: the row's own label with
/// probability 1 and the row itself as the post state.
pub fn run_ndd(
    family: Family,
    mode: TableMode,
    state: &StateVector,
    seed: u64,
) -> Result<NddOutcome> {
    check_discriminable(family, mode)?;
    Ok(ndd_branches(family, state, Some(seed))?
        .pop()
        .expect("measurement returns one branch"))
}

/// Every discrimination outcome with nonvanishing probability, in ascending
/// label order.
pub fn branch_ndd(
    family: Family,
    mode: TableMode,
    state: &StateVector,
) -> Result<Vec<NddOutcome>> {
    check_discriminable(family, mode)?;
    ndd_branches(family, state, None)
}

/// Discriminates a table row chosen by label; convenience over
/// [`run_ndd`].
pub fn discriminate_row(
    family: Family,
    mode: TableMode,
    label: &BitString,
    seed: u64,
) -> Result<NddOutcome> {
    let state = table_state(family, mode, label)?;
    run_ndd(family, mode, &state, seed)
}
