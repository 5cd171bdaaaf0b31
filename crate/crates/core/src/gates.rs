//! Gate applications and circuits.
//!
//! Every operation is a single-qubit unitary dressed with any number of
//! positive controls (fire on `|1>`) and negative controls (fire on `|0>`).
//! Multi-qubit staples are spelled in this form: a CNOT is an `X` with one
//! positive control, a CZ is a `Z` with one positive control, a SWAP is
//! three CNOTs.
//!
//! Circuits carry a fixed register width, validate every index on entry,
//! and can be checked for end-to-end unitarity by brute force on the full
//! basis. A plain text form (one gate per line) round-trips through
//! [`Circuit::parse_text`] and [`Circuit::to_text`].

use num_complex::Complex64 as C64;

use crate::error::{Error, Result};
use crate::qstate::StateVector;

/// Maximum entry-wise deviation of `U* U` from the identity for a matrix to
/// count as unitary, and of a Gram matrix from the identity for a circuit to
/// count as unitary.
pub const UNITARY_TOL: f64 = 1e-10;

/// A 2x2 unitary acting on one target, gated by control qubits.
#[derive(Clone, Debug)]
pub struct GateApplication {
    label: String,
    matrix: [[C64; 2]; 2],
    target: usize,
    positive_controls: Vec<usize>,
    negative_controls: Vec<usize>,
}

fn unitary_deviation(m: &[[C64; 2]; 2]) -> f64 {
    // Entries of U*U - I.
    let mut worst = 0.0f64;
    for i in 0..2 {
        for j in 0..2 {
            let mut e = m.iter().fold(C64::new(0.0, 0.0), |acc, row| {
                acc + row[i].conj() * row[j]
            });
            if i == j {
                e -= C64::new(1.0, 0.0);
            }
            worst = worst.max(e.norm());
        }
    }
    worst
}

impl GateApplication {
    /// Wraps a matrix acting on `target` (1-based). Rejects matrices whose
    /// deviation from unitarity exceeds [`UNITARY_TOL`].
    pub fn new(label: &str, matrix: [[C64; 2]; 2], target: usize) -> Result<Self> {
        if target == 0 {
            return Err(Error::IndexOutOfRange {
                index: 0,
                n_qubits: 0,
            });
        }
        let deviation = unitary_deviation(&matrix);
        if deviation > UNITARY_TOL {
            return Err(Error::NonUnitaryMatrix { deviation });
        }
        Ok(GateApplication {
            label: label.to_string(),
            matrix,
            target,
            positive_controls: Vec::new(),
            negative_controls: Vec::new(),
        })
    }

    /// Adds control qubits to a gate. The target may not appear in either
    /// set and the two sets may not overlap.
    pub fn with_controls(
        base: GateApplication,
        positive: Vec<usize>,
        negative: Vec<usize>,
    ) -> Result<Self> {
        let mut gate = base;
        gate.positive_controls.extend(positive);
        gate.negative_controls.extend(negative);
        let mut seen = vec![gate.target];
        for &c in gate
            .positive_controls
            .iter()
            .chain(&gate.negative_controls)
        {
            if c == 0 {
                return Err(Error::IndexOutOfRange {
                    index: 0,
                    n_qubits: 0,
                });
            }
            if seen.contains(&c) {
                return Err(Error::OverlappingIndices { index: c });
            }
            seen.push(c);
        }
        Ok(gate)
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn matrix(&self) -> &[[C64; 2]; 2] {
        &self.matrix
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn positive_controls(&self) -> &[usize] {
        &self.positive_controls
    }

    pub fn negative_controls(&self) -> &[usize] {
        &self.negative_controls
    }

    /// Verifies every index fits a register of `n_qubits`.
    pub fn check_register(&self, n_qubits: usize) -> Result<()> {
        let all = std::iter::once(self.target)
            .chain(self.positive_controls.iter().copied())
            .chain(self.negative_controls.iter().copied());
        for index in all {
            if index == 0 || index > n_qubits {
                return Err(Error::IndexOutOfRange { index, n_qubits });
            }
        }
        Ok(())
    }
}

fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

/// Hadamard on `target`.
pub fn h(target: usize) -> GateApplication {
    let r = std::f64::consts::FRAC_1_SQRT_2;
    GateApplication::new("H", [[c(r, 0.0), c(r, 0.0)], [c(r, 0.0), c(-r, 0.0)]], target)
        .expect("H is unitary")
}

/// Pauli X on `target`.
pub fn x(target: usize) -> GateApplication {
    GateApplication::new(
        "X",
        [[c(0.0, 0.0), c(1.0, 0.0)], [c(1.0, 0.0), c(0.0, 0.0)]],
        target,
    )
    .expect("X is unitary")
}

/// Pauli Y on `target`.
pub fn y(target: usize) -> GateApplication {
    GateApplication::new(
        "Y",
        [[c(0.0, 0.0), c(0.0, -1.0)], [c(0.0, 1.0), c(0.0, 0.0)]],
        target,
    )
    .expect("Y is unitary")
}

/// Pauli Z on `target`.
pub fn z(target: usize) -> GateApplication {
    GateApplication::new(
        "Z",
        [[c(1.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(-1.0, 0.0)]],
        target,
    )
    .expect("Z is unitary")
}

/// X on `target`, controlled on `control` being `|1>`.
pub fn cnot(control: usize, target: usize) -> GateApplication {
    GateApplication::with_controls(x(target), vec![control], vec![])
        .expect("distinct control and target")
}

/// Z between `a` and `b`; symmetric, spelled as Z on `b` controlled on `a`.
pub fn cz(a: usize, b: usize) -> GateApplication {
    GateApplication::with_controls(z(b), vec![a], vec![]).expect("distinct qubit pair")
}

/// SWAP of `a` and `b` as its three-CNOT decomposition.
pub fn swap(a: usize, b: usize) -> [GateApplication; 3] {
    [cnot(a, b), cnot(b, a), cnot(a, b)]
}

/// Worst-case orthonormality defect of a circuit's basis images.
#[derive(Clone, Debug)]
pub struct UnitarityReport {
    /// Number of basis states checked (`2^n`).
    pub dimension: usize,
    /// Largest `|<U e_i | U e_j> - delta_ij|` over all pairs.
    pub worst_deviation: f64,
    /// The `(i, j)` attaining `worst_deviation`.
    pub worst_pair: (usize, usize),
    /// True when `worst_deviation <= UNITARY_TOL`.
    pub unitary: bool,
}

/// An ordered list of gate applications on a fixed register.
#[derive(Clone, Debug)]
pub struct Circuit {
    n_qubits: usize,
    ops: Vec<GateApplication>,
}

impl Circuit {
    pub fn new(n_qubits: usize) -> Result<Self> {
        if n_qubits == 0 {
            return Err(Error::EmptyRegister);
        }
        if n_qubits > crate::qstate::MAX_QUBITS {
            return Err(Error::CapacityExceeded {
                requested: n_qubits,
                max: crate::qstate::MAX_QUBITS,
            });
        }
        Ok(Circuit {
            n_qubits,
            ops: Vec::new(),
        })
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn ops(&self) -> &[GateApplication] {
        &self.ops
    }

    pub fn len(&self) -> usize {
        self.ops.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ops.is_empty()
    }

    /// Appends a gate after validating its indices against this register.
    pub fn push(&mut self, gate: GateApplication) -> Result<()> {
        gate.check_register(self.n_qubits)?;
        self.ops.push(gate);
        Ok(())
    }

    /// Builder form of [`Circuit::push`].
    pub fn then(mut self, gate: GateApplication) -> Result<Self> {
        self.push(gate)?;
        Ok(self)
    }

    pub fn h(self, target: usize) -> Result<Self> {
        self.then(h(target))
    }

    pub fn x(self, target: usize) -> Result<Self> {
        self.then(x(target))
    }

    pub fn y(self, target: usize) -> Result<Self> {
        self.then(y(target))
    }

    pub fn z(self, target: usize) -> Result<Self> {
        self.then(z(target))
    }

    pub fn cnot(self, control: usize, target: usize) -> Result<Self> {
        self.then(cnot(control, target))
    }

    pub fn cz(self, a: usize, b: usize) -> Result<Self> {
        self.then(cz(a, b))
    }

    /// Runs the circuit on `input`, returning the output state.
    pub fn run(&self, input: &StateVector) -> Result<StateVector> {
        if input.n_qubits() != self.n_qubits {
            return Err(Error::DimensionMismatch {
                left: self.n_qubits,
                right: input.n_qubits(),
            });
        }
        let mut state = input.clone();
        for gate in &self.ops {
            state.apply_gate_in_place(gate);
        }
        Ok(state)
    }

    /// Checks end-to-end unitarity by running every basis state through the
    /// circuit and measuring how far the image Gram matrix strays from the
    /// identity. Exponential in width; intended for small registers.
    pub fn verify_unitary(&self) -> Result<UnitarityReport> {
        let dim = 1usize << self.n_qubits;
        let mut images = Vec::with_capacity(dim);
        for k in 0..dim {
            let basis = StateVector::basis_state(
                self.n_qubits,
                &crate::bits::BitString::from_index(k, self.n_qubits),
            )?;
            images.push(self.run(&basis)?);
        }
        let mut worst_deviation = 0.0f64;
        let mut worst_pair = (0, 0);
        for i in 0..dim {
            for j in i..dim {
                let g = images[i].inner_product(&images[j])?;
                let target = if i == j { 1.0 } else { 0.0 };
                let dev = (g - C64::new(target, 0.0)).norm();
                if dev > worst_deviation {
                    worst_deviation = dev;
                    worst_pair = (i, j);
                }
            }
        }
        Ok(UnitarityReport {
            dimension: dim,
            worst_deviation,
            worst_pair,
            unitary: worst_deviation <= UNITARY_TOL,
        })
    }

    /// Parses the plain text form: one gate per line,
    /// `GATE target [+control ..] [-control ..]` with `GATE` one of
    /// `H X Y Z`. Blank lines and `#` comments are skipped.
    pub fn parse_text(n_qubits: usize, text: &str) -> Result<Self> {
        let mut circuit = Circuit::new(n_qubits)?;
        for (lineno, raw) in text.lines().enumerate() {
            let line = lineno + 1;
            let src = raw.trim();
            if src.is_empty() || src.starts_with('#') {
                continue;
            }
            let mut tokens = src.split_whitespace();
            let name = tokens.next().expect("non-empty line has a token");
            let base = |target| match name {
                "H" => Ok(h(target)),
                "X" => Ok(x(target)),
                "Y" => Ok(y(target)),
                "Z" => Ok(z(target)),
                _ => Err(Error::Parse {
                    line,
                    msg: format!("unknown gate {name:?}"),
                }),
            };
            let target: usize = tokens
                .next()
                .ok_or_else(|| Error::Parse {
                    line,
                    msg: "missing target qubit".into(),
                })?
                .parse()
                .map_err(|_| Error::Parse {
                    line,
                    msg: "target is not a number".into(),
                })?;
            let mut positive = Vec::new();
            let mut negative = Vec::new();
            for tok in tokens {
                let (sign, rest) = tok.split_at(1);
                let index: usize = rest.parse().map_err(|_| Error::Parse {
                    line,
                    msg: format!("bad control token {tok:?}"),
                })?;
                match sign {
                    "+" => positive.push(index),
                    "-" => negative.push(index),
                    _ => {
                        return Err(Error::Parse {
                            line,
                            msg: format!("control token {tok:?} must start with + or -"),
                        })
                    }
                }
            }
            let gate = GateApplication::with_controls(base(target)?, positive, negative)
                .map_err(|e| Error::Parse {
                    line,
                    msg: e.to_string(),
                })?;
            circuit.push(gate).map_err(|e| Error::Parse {
                line,
                msg: e.to_string(),
            })?;
        }
        Ok(circuit)
    }

    /// Renders the circuit in the [`Circuit::parse_text`] format. Only gates
    /// labelled `H X Y Z` (which covers everything this crate constructs by
    /// name) can be rendered.
    pub fn to_text(&self) -> Result<String> {
        let mut out = String::new();
        for (pos, gate) in self.ops.iter().enumerate() {
            if !matches!(gate.label(), "H" | "X" | "Y" | "Z") {
                return Err(Error::Parse {
                    line: pos + 1,
                    msg: format!("gate {:?} has no text form", gate.label()),
                });
            }
            out.push_str(gate.label());
            out.push_str(&format!(" {}", gate.target()));
            for &c in gate.positive_controls() {
                out.push_str(&format!(" +{c}"));
            }
            for &c in gate.negative_controls() {
                out.push_str(&format!(" -{c}"));
            }
            out.push('\n');
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bits::bits;

    #[test]
    fn named_gates_are_unitary() {
        for gate in [h(1), x(1), y(1), z(1)] {
            assert!(unitary_deviation(gate.matrix()) < 1e-15, "{}", gate.label());
        }
    }

    #[test]
    fn new_rejects_non_unitary_matrix() {
        let m = [[c(1.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(0.5, 0.0)]];
        match GateApplication::new("BAD", m, 1) {
            Err(Error::NonUnitaryMatrix { deviation }) => assert!(deviation > 0.5),
            other => panic!("expected NonUnitaryMatrix, got {other:?}"),
        }
    }

    #[test]
    fn controls_may_not_touch_the_target() {
        assert!(matches!(
            GateApplication::with_controls(x(2), vec![2], vec![]),
            Err(Error::OverlappingIndices { index: 2 })
        ));
        assert!(matches!(
            GateApplication::with_controls(x(1), vec![3], vec![3]),
            Err(Error::OverlappingIndices { index: 3 })
        ));
    }

    #[test]
    fn circuit_rejects_out_of_range_gates() {
        let mut circuit = Circuit::new(2).unwrap();
        assert!(matches!(
            circuit.push(h(3)),
            Err(Error::IndexOutOfRange {
                index: 3,
                n_qubits: 2
            })
        ));
    }

    #[test]
    fn bell_circuit_runs() {
        let circuit = Circuit::new(2).unwrap().h(1).unwrap().cnot(1, 2).unwrap();
        let out = circuit
            .run(&StateVector::basis_state(2, &bits("00")).unwrap())
            .unwrap();
        let r = std::f64::consts::FRAC_1_SQRT_2;
        assert!((out.amp(0).re - r).abs() < 1e-15);
        assert!((out.amp(3).re - r).abs() < 1e-15);
    }

    #[test]
    fn verify_unitary_accepts_gate_circuits() {
        let circuit = Circuit::new(3)
            .unwrap()
            .h(1)
            .unwrap()
            .cnot(1, 2)
            .unwrap()
            .cz(2, 3)
            .unwrap()
            .y(3)
            .unwrap();
        let report = circuit.verify_unitary().unwrap();
        assert!(report.unitary);
        assert_eq!(report.dimension, 8);
        assert!(report.worst_deviation < 1e-14);
    }

    #[test]
    fn swap_exchanges_basis_labels() {
        let mut circuit = Circuit::new(2).unwrap();
        for gate in swap(1, 2) {
            circuit.push(gate).unwrap();
        }
        let out = circuit
            .run(&StateVector::basis_state(2, &bits("10")).unwrap())
            .unwrap();
        assert_eq!(out.amp(bits("01").to_index()).re, 1.0);
        assert!(circuit.verify_unitary().unwrap().unitary);
    }

    #[test]
    fn text_form_round_trips() {
        let text = "# entangle, then poke the ancilla\nH 1\nX 2 +1\nZ 3 +2\nX 3 +1 -2\n";
        let circuit = Circuit::parse_text(3, text).unwrap();
        assert_eq!(circuit.len(), 4);
        let rendered = circuit.to_text().unwrap();
        assert_eq!(rendered, "H 1\nX 2 +1\nZ 3 +2\nX 3 +1 -2\n");
        let again = Circuit::parse_text(3, &rendered).unwrap();
        assert_eq!(again.to_text().unwrap(), rendered);
    }

    #[test]
    fn parse_reports_line_numbers() {
        match Circuit::parse_text(2, "H 1\nQ 2\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
        match Circuit::parse_text(2, "X 2 +2\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 1),
            other => panic!("expected parse error, got {other:?}"),
        }
        match Circuit::parse_text(2, "\n\nX 9\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn cnot_equals_its_text_spelling() {
        let parsed = Circuit::parse_text(2, "X 2 +1\n").unwrap();
        let built = Circuit::new(2).unwrap().cnot(1, 2).unwrap();
        for k in 0..4 {
            let input =
                StateVector::basis_state(2, &crate::bits::BitString::from_index(k, 2)).unwrap();
            let a = parsed.run(&input).unwrap();
            let b = built.run(&input).unwrap();
            assert!((a.fidelity_up_to_phase(&b).unwrap() - 1.0).abs() < 1e-12);
        }
    }
}
