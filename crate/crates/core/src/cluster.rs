//! The orthogonal cluster-state families and their printed tables.
//!
//! Both families consist of `2^n` labelled states, one per n-bit label, and
//! every state is a uniform four-ket superposition with coefficients
//! `+-1/2`. The embedded tables transcribe the printed source verbatim: the
//! four-qubit table is already orthogonal, while the five-qubit table
//! carries a sign defect in row `00010` that the audit locates and repairs.
//!
//! Each family also has a fixed generator circuit mapping computational
//! basis inputs onto table rows. The input label and the row label disagree
//! in general; [`input_to_row_map`] tabulates the correspondence against the
//! repaired table.

use std::sync::OnceLock;

use num_complex::Complex64 as C64;

use crate::bits::BitString;
use crate::error::{Error, Result};
use crate::gates::Circuit;
use crate::qstate::StateVector;

/// Numeric orthogonality and state-identification tolerance.
pub const ORTHO_TOL: f64 = 1e-10;

const C4_TEXT: &str = include_str!("../data/c4_table.txt");
const C5_TEXT: &str = include_str!("../data/c5_table.txt");

/// Which cluster-state family a table or circuit belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// Four qubits, sixteen states.
    C4,
    /// Five qubits, thirty-two states.
    C5,
}

impl Family {
    pub fn n_qubits(self) -> usize {
        match self {
            Family::C4 => 4,
            Family::C5 => 5,
        }
    }

    pub fn n_states(self) -> usize {
        1 << self.n_qubits()
    }

    pub fn tag(self) -> &'static str {
        match self {
            Family::C4 => "c4",
            Family::C5 => "c5",
        }
    }
}

/// Whether to use the table exactly as printed or with audit repairs applied.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableMode {
    Verbatim,
    Repaired,
}

/// One signed basis ket of a table row; `sign` is `+1` or `-1` and the
/// implied coefficient magnitude is `1/2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub sign: i8,
    pub ket: BitString,
}

/// One labelled table state: four signed kets in printed order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub label: BitString,
    pub terms: Vec<Term>,
}

impl TableRow {
    /// The normalized state `1/2 * sum(sign * |ket>)`.
    pub fn state(&self) -> StateVector {
        let n = self.label.len();
        let mut amps = vec![C64::new(0.0, 0.0); 1 << n];
        for term in &self.terms {
            amps[term.ket.to_index()] = C64::new(0.5 * term.sign as f64, 0.0);
        }
        StateVector::from_amplitudes(n, amps).expect("four signed quarter kets are normalized")
    }

    /// Inner product with another row in units of `1/4`; exact because all
    /// coefficients are `+-1/2`.
    fn overlap_quarters(&self, other: &TableRow) -> i32 {
        let mut q = 0i32;
        for a in &self.terms {
            for b in &other.terms {
                if a.ket == b.ket {
                    q += (a.sign * b.sign) as i32;
                }
            }
        }
        q
    }
}

/// A full labelled family table.
#[derive(Clone, Debug, PartialEq)]
pub struct ClusterTable {
    family: Family,
    rows: Vec<TableRow>,
}

impl ClusterTable {
    /// Parses the table text format: one `label : +ket -ket +ket +ket` line
    /// per state, `#` comments and blank lines skipped. Requires one row per
    /// label, labels and kets of family width, and four distinct kets per
    /// row, so every parsed row is normalized.
    pub fn parse(family: Family, text: &str) -> Result<Self> {
        let n = family.n_qubits();
        let mut rows: Vec<TableRow> = Vec::with_capacity(family.n_states());
        for (lineno, raw) in text.lines().enumerate() {
            let line = lineno + 1;
            let src = raw.trim();
            if src.is_empty() || src.starts_with('#') {
                continue;
            }
            let (label_part, kets_part) = src.split_once(':').ok_or_else(|| Error::Parse {
                line,
                msg: "missing ':' between label and kets".into(),
            })?;
            let label: BitString = label_part.trim().parse().map_err(|e: Error| Error::Parse {
                line,
                msg: e.to_string(),
            })?;
            let mut terms = Vec::with_capacity(4);
            for tok in kets_part.split_whitespace() {
                let (sign_char, ket_part) = tok.split_at(1);
                let sign = match sign_char {
                    "+" => 1i8,
                    "-" => -1i8,
                    _ => {
                        return Err(Error::Parse {
                            line,
                            msg: format!("ket {tok:?} must start with + or -"),
                        })
                    }
                };
                let ket: BitString = ket_part.parse().map_err(|e: Error| Error::Parse {
                    line,
                    msg: e.to_string(),
                })?;
                terms.push(Term { sign, ket });
            }
            if label.len() != n {
                return Err(Error::TableContract {
                    msg: format!("line {line}: label {label} is not {n} bits"),
                });
            }
            if terms.len() != 4 {
                return Err(Error::TableContract {
                    msg: format!("row {label}: expected 4 kets, found {}", terms.len()),
                });
            }
            for t in &terms {
                if t.ket.len() != n {
                    return Err(Error::TableContract {
                        msg: format!("row {label}: ket {} is not {n} bits", t.ket),
                    });
                }
            }
            for (i, a) in terms.iter().enumerate() {
                if terms[..i].iter().any(|b| b.ket == a.ket) {
                    return Err(Error::TableContract {
                        msg: format!("row {label}: ket {} repeats", a.ket),
                    });
                }
            }
            if rows.iter().any(|r| r.label == label) {
                return Err(Error::TableContract {
                    msg: format!("label {label} appears twice"),
                });
            }
            rows.push(TableRow { label, terms });
        }
        if rows.len() != family.n_states() {
            return Err(Error::TableContract {
                msg: format!(
                    "expected {} rows, found {}",
                    family.n_states(),
                    rows.len()
                ),
            });
        }
        Ok(ClusterTable { family, rows })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rows(&self) -> &[TableRow] {
        &self.rows
    }

    pub fn row(&self, label: &BitString) -> Result<&TableRow> {
        self.rows
            .iter()
            .find(|r| &r.label == label)
            .ok_or_else(|| Error::UnknownLabel {
                family: self.family.tag(),
                label: label.clone(),
            })
    }

    /// The state carried by one row.
    pub fn state(&self, label: &BitString) -> Result<StateVector> {
        Ok(self.row(label)?.state())
    }

    /// Returns a copy with one ket's sign replaced.
    pub fn with_sign(&self, label: &BitString, ket: &BitString, sign: i8) -> Result<Self> {
        let mut table = self.clone();
        let row_index = table
            .rows
            .iter()
            .position(|r| &r.label == label)
            .ok_or_else(|| Error::UnknownLabel {
                family: self.family.tag(),
                label: label.clone(),
            })?;
        let term = table.rows[row_index]
            .terms
            .iter_mut()
            .find(|t| &t.ket == ket)
            .ok_or_else(|| Error::TableContract {
                msg: format!("row {label} has no ket {ket}"),
            })?;
        term.sign = sign;
        Ok(table)
    }

    /// The table text embedded in the crate for a family.
    pub fn source_text(family: Family) -> &'static str {
        match family {
            Family::C4 => C4_TEXT,
            Family::C5 => C5_TEXT,
        }
    }

    /// The embedded table exactly as printed.
    pub fn verbatim(family: Family) -> &'static ClusterTable {
        static C4: OnceLock<ClusterTable> = OnceLock::new();
        static C5: OnceLock<ClusterTable> = OnceLock::new();
        let cell = match family {
            Family::C4 => &C4,
            Family::C5 => &C5,
        };
        cell.get_or_init(|| {
            ClusterTable::parse(family, Self::source_text(family))
                .expect("embedded table parses")
        })
    }

    /// The embedded table with the audit's unique sign repair applied (the
    /// verbatim table itself when it is already orthogonal).
    pub fn repaired(family: Family) -> &'static ClusterTable {
        static C4: OnceLock<ClusterTable> = OnceLock::new();
        static C5: OnceLock<ClusterTable> = OnceLock::new();
        let cell = match family {
            Family::C4 => &C4,
            Family::C5 => &C5,
        };
        cell.get_or_init(|| {
            let verbatim = Self::verbatim(family);
            let report = audit(verbatim);
            if report.orthogonal() {
                return verbatim.clone();
            }
            let repair = report
                .unique_repair()
                .expect("embedded table defects have a unique single-sign repair");
            verbatim
                .with_sign(&repair.label, &repair.ket, repair.new_sign)
                .expect("repair refers to an existing ket")
        })
    }
}

/// Looks up one family state by label, verbatim or repaired.
pub fn table_state(family: Family, mode: TableMode, label: &BitString) -> Result<StateVector> {
    let table = match mode {
        TableMode::Verbatim => ClusterTable::verbatim(family),
        TableMode::Repaired => ClusterTable::repaired(family),
    };
    table.state(label)
}

/// A non-orthogonal row pair found by the audit.
#[derive(Clone, Debug, PartialEq)]
pub struct Defect {
    pub left: BitString,
    pub right: BitString,
    /// Real inner product `<left|right>`; always a multiple of `1/4`.
    pub overlap: f64,
}

/// A single sign flip that restores orthogonality of the whole table.
#[derive(Clone, Debug, PartialEq)]
pub struct Repair {
    pub label: BitString,
    pub ket: BitString,
    pub new_sign: i8,
}

/// Outcome of auditing a table for pairwise orthogonality.
#[derive(Clone, Debug)]
pub struct AuditReport {
    pub family: Family,
    /// Every non-orthogonal pair, in label order.
    pub defects: Vec<Defect>,
    /// Every single sign flip that would make the whole table orthogonal.
    pub repair_candidates: Vec<Repair>,
}

impl AuditReport {
    pub fn orthogonal(&self) -> bool {
        self.defects.is_empty()
    }

    /// The repair to apply, when exactly one candidate exists.
    pub fn unique_repair(&self) -> Option<&Repair> {
        match self.repair_candidates.as_slice() {
            [single] => Some(single),
            _ => None,
        }
    }
}

fn defect_pairs(table: &ClusterTable) -> Vec<Defect> {
    let rows = table.rows();
    let mut defects = Vec::new();
    for i in 0..rows.len() {
        for j in i + 1..rows.len() {
            let q = rows[i].overlap_quarters(&rows[j]);
            if q != 0 {
                defects.push(Defect {
                    left: rows[i].label.clone(),
                    right: rows[j].label.clone(),
                    overlap: q as f64 / 4.0,
                });
            }
        }
    }
    defects
}

/// Checks every row pair for orthogonality. When defects exist, searches all
/// single sign flips for ones that fix the entire table; the five-qubit
/// printed table has exactly one such flip.
pub fn audit(table: &ClusterTable) -> AuditReport {
    let defects = defect_pairs(table);
    let mut repair_candidates = Vec::new();
    if !defects.is_empty() {
        for row in table.rows() {
            for term in &row.terms {
                let new_sign = -term.sign;
                let flipped = table
                    .with_sign(&row.label, &term.ket, new_sign)
                    .expect("flipping an existing ket");
                if defect_pairs(&flipped).is_empty() {
                    repair_candidates.push(Repair {
                        label: row.label.clone(),
                        ket: term.ket.clone(),
                        new_sign,
                    });
                }
            }
        }
    }
    AuditReport {
        family: table.family(),
        defects,
        repair_candidates,
    }
}

/// The fixed generator circuit of a family. Inputs are computational basis
/// states; outputs are table rows (up to the label permutation reported by
/// [`input_to_row_map`]).
pub fn generator_circuit(family: Family) -> Circuit {
    let build = || -> Result<Circuit> {
        match family {
            Family::C4 => Circuit::new(4)?
                .h(1)?
                .h(3)?
                .cnot(1, 2)?
                .cnot(3, 4)?
                .cz(2, 3),
            Family::C5 => Circuit::new(5)?
                .h(1)?
                .h(3)?
                .cnot(1, 2)?
                .cnot(3, 4)?
                .cnot(3, 5)?
                .cnot(1, 4),
        }
    };
    build().expect("fixed generator indices are in range")
}

/// Runs the family generator on the basis input `|input>`.
pub fn generate(family: Family, input: &BitString) -> Result<StateVector> {
    let start = StateVector::basis_state(family.n_qubits(), input)?;
    generator_circuit(family).run(&start)
}

/// Identifies the repaired-table row equal to the generator output on
/// `input`. The match is exact (unit fidelity), not merely approximate.
pub fn row_label_for_input(family: Family, input: &BitString) -> Result<BitString> {
    let generated = generate(family, input)?;
    let table = ClusterTable::repaired(family);
    for row in table.rows() {
        let f = generated.fidelity_up_to_phase(&row.state())?;
        if f > 1.0 - ORTHO_TOL {
            return Ok(row.label.clone());
        }
    }
    Err(Error::TableContract {
        msg: format!(
            "generator output for input {input} matches no repaired {} row",
            family.tag()
        ),
    })
}

/// The full input label to row label correspondence, in ascending input
/// order. The map is a bijection on n-bit strings.
pub fn input_to_row_map(family: Family) -> Result<Vec<(BitString, BitString)>> {
    let n = family.n_qubits();
    (0..family.n_states())
        .map(|k| {
            let input = BitString::from_index(k, n);
            let row = row_label_for_input(family, &input)?;
            Ok((input, row))
        })
        .collect()
}
