//! End-to-end verification of every headline property of the crate.
//!
//! Each check here is a self-contained experiment with a one-line verdict:
//! it rebuilds what it needs from scratch, compares against independently
//! constructed expectations, and reports `passed` plus a human-readable
//! summary. The acceptance test suite asserts these verdicts and the CLI
//! `verify` command prints them, so both read from the same source of truth.
//!
//! Two checks fail by design, because the claims they test are false:
//!
//! - [`check_canonical_identity`] compares the all-zero table row against
//!   the literal product-form expansion it is said to equal. The expansion
//!   has full support (sixteen equal-magnitude kets), the row has four, so
//!   no reading of the formula can match it; the fidelity is exactly 0.
//!   The identity does hold after a frozen single-qubit dressing on four
//!   qubits, and provably cannot hold on five even with dressing; the
//!   check verifies that analysis numerically and still reports failure,
//!   because the claim as stated is about the undressed expansion.
//! - [`check_dense_coding_capacity`] tests the dense-coding claim for a
//!   sender holding the adjacent qubit pair (1,2). The pair parity `Z1 Z2`
//!   stabilizes every table row, so the sixteen two-qubit Pauli encodings
//!   collide in pairs and only eight distinct labels can be reached. The
//!   check reports the collision census and verifies that the interleaved
//!   split reaches all sixteen and carries a flawless 100-message dialogue.
//!
//! No implementation choice can fix either claim; the acceptance gate pins
//! both failure signatures so a silent "fix" trips just as loudly as a new
//! breakage.

use num_complex::Complex64 as C64;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bits::BitString;
use crate::cluster::{
    audit, generate, generator_circuit, input_to_row_map, table_state, ClusterTable, Family,
    TableMode, ORTHO_TOL,
};
use crate::error::{Error, Result};
use crate::gates::Circuit;
use crate::ndd::{branch_ndd, build_ndd_circuit, check_discriminable};
use crate::protocols::{
    apply_pauli, build_codebook, build_codebook_on, detect_error, dialogue_run_with,
    syndrome_table, DialogueSplit, Holder,
};
use crate::qstate::{StateVector, NORM_TOL};

/// Verdict of one named verification group.
#[derive(Clone, Debug)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub details: String,
}

fn run_check(name: &'static str, f: impl FnOnce() -> Result<(bool, String)>) -> CheckResult {
    match f() {
        Ok((passed, details)) => CheckResult {
            name,
            passed,
            details,
        },
        Err(e) => CheckResult {
            name,
            passed: false,
            details: format!("aborted: {e}"),
        },
    }
}

/// Runs every verification group in order. The result order and names are
/// stable; callers key off `name`.
pub fn verify_all() -> Vec<CheckResult> {
    vec![
        check_table_c4_reproduction(),
        check_table_c5_repair(),
        check_canonical_identity(),
        check_generator_bijection(),
        check_born_rule(),
        check_dense_coding_capacity(),
        check_error_detection(),
        check_kernel_properties(),
    ]
}

/// Worst orthonormality deviation over all pairs of `states`.
fn gram_worst(states: &[StateVector]) -> Result<f64> {
    let mut worst = 0.0f64;
    for i in 0..states.len() {
        for j in i..states.len() {
            let ip = states[i].inner_product(&states[j])?;
            let target = if i == j { 1.0 } else { 0.0 };
            worst = worst.max((ip - C64::new(target, 0.0)).norm());
        }
    }
    Ok(worst)
}

/// Reads every row of a table through the discriminator and returns the
/// worst probability defect and worst post-readout infidelity, requiring a
/// deterministic correct label everywhere.
fn readout_sweep(family: Family, mode: TableMode) -> Result<(f64, f64)> {
    let table = match mode {
        TableMode::Verbatim => ClusterTable::verbatim(family),
        TableMode::Repaired => ClusterTable::repaired(family),
    };
    let mut worst_p = 0.0f64;
    let mut worst_f = 0.0f64;
    for row in table.rows() {
        let state = row.state();
        let branches = branch_ndd(family, mode, &state)?;
        let [single] = branches.as_slice() else {
            return Err(Error::NondeterministicEncoding {
                message: row.label.clone(),
                branches: branches.len(),
            });
        };
        if single.label != row.label {
            return Err(Error::TableContract {
                msg: format!("row {} read out as {}", row.label, single.label),
            });
        }
        worst_p = worst_p.max((single.probability - 1.0).abs());
        worst_f = worst_f.max(
            (single.post_state.fidelity_up_to_phase(&state)? - 1.0).abs(),
        );
    }
    Ok((worst_p, worst_f))
}

/// The sixteen four-qubit states are pairwise orthonormal as printed, and
/// the readout returns every label with certainty while leaving each state
/// intact.
pub fn check_table_c4_reproduction() -> CheckResult {
    run_check("table-c4-reproduction", || {
        let table = ClusterTable::verbatim(Family::C4);
        let states: Vec<StateVector> = table.rows().iter().map(|r| r.state()).collect();
        let gram = gram_worst(&states)?;
        let (worst_p, worst_f) = readout_sweep(Family::C4, TableMode::Verbatim)?;
        let passed = gram < ORTHO_TOL && worst_p < ORTHO_TOL && worst_f < ORTHO_TOL;
        Ok((passed, format!(
            "16 states orthonormal (worst deviation {gram:.1e}); all labels read out deterministically (probability defect {worst_p:.1e}, post-readout infidelity {worst_f:.1e})"
        )))
    })
}

/// The printed five-qubit table fails orthogonality in exactly the known
/// three pairs, a unique single sign flip repairs it, the repaired table is
/// orthonormal and fully discriminable, and the verbatim table is refused.
pub fn check_table_c5_repair() -> CheckResult {
    run_check("table-c5-repair", || {
        let report = audit(ClusterTable::verbatim(Family::C5));
        let expected = [
            ("00010", "00011", 0.5),
            ("00010", "00110", 0.5),
            ("00010", "00111", -0.5),
        ];
        let defects_match = report.defects.len() == 3
            && report
                .defects
                .iter()
                .zip(&expected)
                .all(|(d, (l, r, o))| {
                    d.left.to_string() == *l && d.right.to_string() == *r && d.overlap == *o
                });
        let repair_match = match report.unique_repair() {
            Some(rep) => {
                rep.label.to_string() == "00010"
                    && rep.ket.to_string() == "11000"
                    && rep.new_sign == 1
            }
            None => false,
        };
        let repaired = ClusterTable::repaired(Family::C5);
        let states: Vec<StateVector> = repaired.rows().iter().map(|r| r.state()).collect();
        let gram = gram_worst(&states)?;
        let (worst_p, worst_f) = readout_sweep(Family::C5, TableMode::Repaired)?;
        let verbatim_refused = matches!(
            check_discriminable(Family::C5, TableMode::Verbatim),
            Err(Error::NotDiscriminable { .. })
        );
        let passed = defects_match
            && repair_match
            && gram < ORTHO_TOL
            && worst_p < ORTHO_TOL
            && worst_f < ORTHO_TOL
            && verbatim_refused;
        Ok((passed, format!(
            "printed table has 3 defective pairs, all in the 00010 block; unique repair flips |11000> in row 00010 to +; repaired 32 states orthonormal (worst {gram:.1e}) and fully discriminable (infidelity {worst_f:.1e}); verbatim five-qubit readout correctly refused"
        )))
    })
}

/// The product-form expansion with per-site sign structure.
///
/// Expanding `prod_a (|0>_a Z_(a+1) + |1>_a) / 2^(n/2)` (with the last Z
/// acting as identity) gives every basis ket with amplitude sign
/// `(-1)^(# of a with b_a = 0 and b_(a+1) = 1)`: a state with full
/// support. It matches no table row directly; see
/// [`check_canonical_identity`].
pub fn product_form_state(n: usize) -> Result<StateVector> {
    if n < 2 {
        return Err(Error::EmptyRegister);
    }
    let coeff = ((1usize << n) as f64).sqrt().recip();
    let mut amps = Vec::with_capacity(1 << n);
    for k in 0..1usize << n {
        let b = BitString::from_index(k, n);
        let falls = (1..n).filter(|&a| !b.bit(a) && b.bit(a + 1)).count();
        let sign = if falls % 2 == 0 { 1.0 } else { -1.0 };
        amps.push(C64::new(sign * coeff, 0.0));
    }
    StateVector::from_amplitudes(n, amps)
}

/// The frozen single-qubit dressing taking the four-qubit product form onto
/// the all-zero table row. Found by exhaustive search over per-qubit
/// Clifford words and pinned here; [`check_canonical_identity`] asserts it
/// still works as part of its analysis.
pub fn product_form_bridge() -> Circuit {
    Circuit::new(4)
        .and_then(|c| c.h(1))
        .and_then(|c| c.x(3))
        .and_then(|c| c.h(4))
        .and_then(|c| c.z(4))
        .expect("fixed dressing indices are in range")
}

/// Rank of the amplitude matrix of `state` reshaped along `cut` vs rest;
/// `2^(entanglement)` for stabilizer states.
fn schmidt_rank(state: &StateVector, cut: &[usize]) -> usize {
    let n = state.n_qubits();
    let rest: Vec<usize> = (1..=n).filter(|q| !cut.contains(q)).collect();
    let rows = 1usize << cut.len();
    let cols = 1usize << rest.len();
    let mut mat = vec![vec![C64::new(0.0, 0.0); cols]; rows];
    for (k, a) in state.amps().iter().enumerate() {
        let r = cut
            .iter()
            .fold(0usize, |acc, &q| (acc << 1) | ((k >> (n - q)) & 1));
        let c = rest
            .iter()
            .fold(0usize, |acc, &q| (acc << 1) | ((k >> (n - q)) & 1));
        mat[r][c] = *a;
    }
    let mut rank = 0;
    let mut row = 0;
    for col in 0..cols {
        if let Some(p) = (row..rows).find(|&r| mat[r][col].norm() > 1e-9) {
            mat.swap(row, p);
            let pivot = mat[row].clone();
            let lead = pivot[col];
            for (r, other) in mat.iter_mut().enumerate() {
                if r != row {
                    let f = other[col] / lead;
                    for (cc, p) in pivot.iter().enumerate().skip(col) {
                        other[cc] -= f * p;
                    }
                }
            }
            rank += 1;
            row += 1;
            if row == rows {
                break;
            }
        }
    }
    rank
}

/// The claimed identity between the generator's all-zero output and the
/// literal product-form expansion, tested at face value. FAILS by design:
/// the expansion has sixteen equal-magnitude kets and the row has four, so
/// the two are orthogonal (fidelity exactly 0) and no reading of the
/// formula can close that gap. The check also verifies the full analysis:
/// the generator does equal the printed row, the frozen dressing H1 X3 H4
/// Z4 maps the expansion onto the row exactly on four qubits, and on five
/// qubits no single-qubit dressing can exist because the entanglement
/// profiles differ.
pub fn check_canonical_identity() -> CheckResult {
    run_check("canonical-identity", || {
        let zero4 = BitString::from_index(0, 4);
        let generated = generate(Family::C4, &zero4)?;
        let row = table_state(Family::C4, TableMode::Verbatim, &zero4)?;
        let ket_form = generated.inner_product(&row)?;
        let ket_form_ok = (ket_form - C64::new(1.0, 0.0)).norm() < ORTHO_TOL;

        let literal = product_form_state(4)?;
        let literal_fidelity = generated.fidelity_up_to_phase(&literal)?;
        let literal_ok = (literal_fidelity - 1.0).abs() < ORTHO_TOL;

        // Analysis, held to the same numeric standard as the claim itself.
        let row_support = row.amps().iter().filter(|a| a.norm() > 1e-12).count();
        let expansion_support = literal.amps().iter().filter(|a| a.norm() > 1e-12).count();
        let bridged = product_form_bridge().run(&literal)?;
        let dressed_fidelity = bridged.fidelity_up_to_phase(&row)?;
        let prod5 = product_form_state(5)?;
        let row5 = table_state(Family::C5, TableMode::Repaired, &BitString::from_index(0, 5))?;
        let obstruction = schmidt_rank(&prod5, &[4, 5]) == 2
            && schmidt_rank(&row5, &[4, 5]) == 4
            && schmidt_rank(&row5, &[3, 5]) == 2
            && schmidt_rank(&prod5, &[3, 5]) == 4;
        let analysis_holds = row_support == 4
            && expansion_support == 16
            && (dressed_fidelity - 1.0).abs() < ORTHO_TOL
            && obstruction;

        let passed = ket_form_ok && literal_ok && analysis_holds;
        Ok((passed, format!(
            "generator output equals the printed all-zero row exactly, but the literal expansion does not: fidelity {literal_fidelity:.1e} (expansion support {expansion_support} kets vs row support {row_support}, so no reading of the formula matches); the identity holds only after the local dressing H1 X3 H4 Z4 (fidelity {dressed_fidelity:.12}) and on five qubits fails even with dressing (rank-2 cuts {{4,5}} vs {{3,5}}); analysis confirmed: {analysis_holds}"
        )))
    })
}

/// The generator circuits map the basis inputs bijectively onto the table
/// rows, hitting pinned entries exactly (with sign).
pub fn check_generator_bijection() -> CheckResult {
    run_check("generator-bijection", || {
        for family in [Family::C4, Family::C5] {
            if !generator_circuit(family).verify_unitary()?.unitary {
                return Ok((false, format!("{} generator not unitary", family.tag())));
            }
            let map = input_to_row_map(family)?;
            let mut rows: Vec<String> = map.iter().map(|(_, r)| r.to_string()).collect();
            rows.sort();
            rows.dedup();
            if rows.len() != family.n_states() {
                return Ok((
                    false,
                    format!("{} map reaches {} of {} rows", family.tag(), rows.len(), family.n_states()),
                ));
            }
        }
        // Pinned correspondences, exact including global sign.
        let pins = [
            (Family::C4, "0000", "0000"),
            (Family::C4, "0100", "1001"),
            (Family::C5, "00000", "00000"),
            (Family::C5, "00010", "00010"),
        ];
        let mut worst = 0.0f64;
        for (family, input, row) in pins {
            let input: BitString = input.parse()?;
            let row: BitString = row.parse()?;
            let generated = generate(family, &input)?;
            let target = table_state(family, TableMode::Repaired, &row)?;
            let ip = generated.inner_product(&target)?;
            worst = worst.max((ip - C64::new(1.0, 0.0)).norm());
        }
        let passed = worst < ORTHO_TOL;
        Ok((passed, format!(
            "both generators are unitary bijections onto their tables (outputs pairwise orthonormal); pinned input/row pairs match exactly (worst sign-sensitive deviation {worst:.1e})"
        )))
    })
}

/// Readout statistics on seeded random superpositions of table rows follow
/// the Born rule: each row label appears with probability equal to the
/// squared coefficient and the post state collapses onto that row.
pub fn check_born_rule() -> CheckResult {
    run_check("born-rule", || {
        let mut rng = ChaCha8Rng::seed_from_u64(2718);
        let mut worst_p = 0.0f64;
        let mut worst_f = 0.0f64;
        let mut trials = 0usize;
        for (family, count) in [(Family::C4, 50usize), (Family::C5, 20)] {
            let table = ClusterTable::repaired(family);
            for _ in 0..count {
                let k = rng.gen_range(2..=4usize);
                let mut indices: Vec<usize> = (0..family.n_states()).collect();
                indices.partial_shuffle(&mut rng, k);
                let picks = &indices[..k];
                let mut coeffs: Vec<C64> = Vec::with_capacity(k);
                while coeffs.len() < k {
                    let c = C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
                    // Keep every branch well above the pruning threshold.
                    if c.norm() >= 0.3 {
                        coeffs.push(c);
                    }
                }
                let total: f64 = coeffs.iter().map(|c| c.norm_sqr()).sum();
                let states: Vec<StateVector> =
                    picks.iter().map(|&i| table.rows()[i].state()).collect();
                let terms: Vec<(C64, &StateVector)> =
                    coeffs.iter().copied().zip(states.iter()).collect();
                let mixed = StateVector::superpose(&terms)?;
                let branches = branch_ndd(family, TableMode::Repaired, &mixed)?;
                if branches.len() != k {
                    return Ok((false, format!(
                        "{}: superposition of {k} rows produced {} branches",
                        family.tag(),
                        branches.len()
                    )));
                }
                for branch in &branches {
                    let Some(pos) = picks
                        .iter()
                        .position(|&i| table.rows()[i].label == branch.label)
                    else {
                        return Ok((false, format!(
                            "{}: readout produced a label outside the superposition: {}",
                            family.tag(),
                            branch.label
                        )));
                    };
                    let expected = coeffs[pos].norm_sqr() / total;
                    worst_p = worst_p.max((branch.probability - expected).abs());
                    let fidelity = branch.post_state.fidelity_up_to_phase(&states[pos])?;
                    worst_f = worst_f.max((fidelity - 1.0).abs());
                }
                trials += 1;
            }
        }
        let passed = worst_p < ORTHO_TOL && worst_f < ORTHO_TOL;
        Ok((passed, format!(
            "{trials} seeded random superpositions of 2 to 4 rows: branch probabilities match squared coefficients (worst deviation {worst_p:.1e}) and every branch collapses onto its row (worst infidelity {worst_f:.1e})"
        )))
    })
}

/// Dense-coding capacity for a sender holding qubits (1,2), as stated for
/// the dialogue protocol. FAILS by design: that pair carries a row
/// stabilizer, so the sixteen encodings reach only eight labels. The check
/// also verifies the interleaved pairs (1,3)/(2,4) reach all sixteen and
/// carry a 100-message seeded dialogue with zero decode errors and unit
/// channel fidelity every turn.
pub fn check_dense_coding_capacity() -> CheckResult {
    run_check("dense-coding-capacity", || {
        let interleaved_ok = [[1usize, 3], [2, 4]].iter().all(|&qubits| {
            build_codebook_on(Family::C4, qubits)
                .map(|book| {
                    let mut labels: Vec<String> =
                        book.entries().iter().map(|e| e.label.to_string()).collect();
                    labels.sort();
                    labels.dedup();
                    labels.len() == 16
                })
                .unwrap_or(false)
        });
        let mut rng = ChaCha8Rng::seed_from_u64(31415);
        let messages: Vec<BitString> = (0..100)
            .map(|_| BitString::new((0..4).map(|_| rng.gen_bool(0.5)).collect()))
            .collect();
        let transcript = dialogue_run_with(DialogueSplit::Interleaved, &messages, 9)?;
        let decode_errors = transcript
            .rounds
            .iter()
            .filter(|r| r.decoded != r.message)
            .count();
        let min_fidelity = transcript
            .rounds
            .iter()
            .map(|r| r.post_fidelity)
            .fold(f64::INFINITY, f64::min);
        let dialogue_ok = transcript.rounds.len() == 100
            && decode_errors == 0
            && (min_fidelity - 1.0).abs() < ORTHO_TOL;
        match build_codebook(Family::C4, Holder::FirstTwo) {
            Ok(book) => {
                let mut labels: Vec<String> =
                    book.entries().iter().map(|e| e.label.to_string()).collect();
                labels.sort();
                labels.dedup();
                let passed = labels.len() == 16 && interleaved_ok && dialogue_ok;
                Ok((passed, format!("sender pair (1,2) reaches {} labels", labels.len())))
            }
            Err(Error::DegenerateCodebook {
                distinct,
                collisions,
                ..
            }) => {
                let sample: Vec<String> = collisions
                    .iter()
                    .take(2)
                    .map(|(a, b)| format!("{a}~{b}"))
                    .collect();
                Ok((false, format!(
                    "sender pair (1,2) reaches only {distinct} of 16 labels: Z1 Z2 stabilizes every row, so encodings differing by Z x Z collide ({} collision pairs, e.g. {}); interleaved pairs (1,3)/(2,4) reach all 16: {interleaved_ok}; 100-message seeded dialogue on the interleaved split: {decode_errors} decode errors, min channel fidelity {min_fidelity:.12}",
                    collisions.len(),
                    sample.join(", ")
                )))
            }
            Err(e) => Err(e),
        }
    })
}

/// Every single-qubit fault on the all-zero row is detected with a
/// deterministic syndrome that names the fault (up to stabilizer partners),
/// without disturbing the state.
pub fn check_error_detection() -> CheckResult {
    run_check("error-detection", || {
        let mut counts = Vec::new();
        for family in [Family::C4, Family::C5] {
            let table = syndrome_table(family)?;
            let n = family.n_qubits();
            if table.entries().len() != 1 + 3 * n {
                return Ok((false, format!("{}: wrong case count", family.tag())));
            }
            for entry in table.entries() {
                // Every fault must shift the label; staying at zero would
                // be an undetected fault.
                let zero = BitString::from_index(0, n);
                if entry.error.is_some() && entry.syndrome == zero {
                    return Ok((false, format!("{}: fault {} invisible", family.tag(), entry.describe())));
                }
                let report = detect_error(family, entry.error, 17)?;
                if report.syndrome != entry.syndrome
                    || !report.candidates.contains(entry)
                    || (report.post_fidelity - 1.0).abs() > ORTHO_TOL
                {
                    return Ok((false, format!("{}: case {} misdiagnosed", family.tag(), entry.describe())));
                }
            }
            // Every injection collapses to a single branch, and shared
            // syndromes are harmless: the candidate corrections differ by
            // a row stabilizer, so each undoes the other's fault.
            let base = ClusterTable::repaired(family).state(&BitString::from_index(0, n))?;
            for entry in table.entries() {
                let Some((pauli, qubit)) = entry.error else { continue };
                let corrupted = apply_pauli(&base, pauli, qubit)?;
                let branches = branch_ndd(family, TableMode::Repaired, &corrupted)?;
                if branches.len() != 1 {
                    return Ok((false, format!(
                        "{}: fault {} is not deterministic ({} branches)",
                        family.tag(),
                        entry.describe(),
                        branches.len()
                    )));
                }
                for candidate in table.diagnose(&entry.syndrome) {
                    let (cp, cq) = candidate.error.expect("fault syndromes are nonzero");
                    let fixed = apply_pauli(&corrupted, cp, cq)?;
                    if (fixed.fidelity_up_to_phase(&base)? - 1.0).abs() > ORTHO_TOL {
                        return Ok((false, format!(
                            "{}: correcting {} with {} fails",
                            family.tag(),
                            entry.describe(),
                            candidate.describe()
                        )));
                    }
                }
            }
            counts.push(format!(
                "{}: {} cases, {} distinct labels",
                family.tag(),
                table.entries().len(),
                table.distinct_syndromes()
            ));
        }
        Ok((true, format!(
            "all single-qubit faults give deterministic single-branch readouts, diagnosis always contains the true fault, and the state survives intact; ambiguous syndromes correct either way; distinct-label counts ({}) sit below the stated sixteen because Z faults on a stabilized pair share a label: the sixteen figure counts the readout alphabet, not distinguishable faults",
            counts.join("; ")
        )))
    })
}

/// Register conventions, validation, round-trip formats, and unitarity of
/// every shipped circuit.
pub fn check_kernel_properties() -> CheckResult {
    run_check("kernel-properties", || {
        let idx = StateVector::basis_state(4, &"1100".parse()?)?;
        let indexing = idx.amp(12).re == 1.0;

        let bad = crate::gates::GateApplication::new(
            "BAD",
            [
                [C64::new(1.0, 0.0), C64::new(0.0, 0.0)],
                [C64::new(0.0, 0.0), C64::new(0.5, 0.0)],
            ],
            1,
        );
        let rejects_nonunitary = matches!(bad, Err(Error::NonUnitaryMatrix { .. }));

        let caps = StateVector::basis_state(25, &BitString::from_index(0, 25)).is_err()
            && Circuit::new(0).is_err();

        let denorm = StateVector::from_amplitudes(1, vec![C64::new(0.9, 0.0), C64::new(0.0, 0.0)]);
        let rejects_denormalized = matches!(denorm, Err(Error::NotNormalized { .. }));

        let state = generate(Family::C5, &"01101".parse()?)?;
        let doc = crate::qstate::write_state_document(&state);
        let back = crate::qstate::read_state_document(&doc)?;
        let doc_exact = back.amps() == state.amps();

        let circuit = build_ndd_circuit(Family::C4);
        let text = circuit.to_text()?;
        let reparsed = Circuit::parse_text(circuit.n_qubits(), &text)?;
        let text_roundtrip = reparsed.to_text()? == text;

        let mut worst_unitary = 0.0f64;
        for shipped in [
            generator_circuit(Family::C4),
            generator_circuit(Family::C5),
            build_ndd_circuit(Family::C4),
            build_ndd_circuit(Family::C5),
            product_form_bridge(),
        ] {
            let report = shipped.verify_unitary()?;
            if !report.unitary {
                return Ok((false, format!(
                    "a shipped circuit fails unitarity: dimension {}, worst deviation {:.1e}",
                    report.dimension, report.worst_deviation
                )));
            }
            worst_unitary = worst_unitary.max(report.worst_deviation);
        }

        let passed = indexing
            && rejects_nonunitary
            && caps
            && rejects_denormalized
            && doc_exact
            && text_roundtrip
            && worst_unitary < NORM_TOL;
        Ok((passed, format!(
            "big-endian indexing pins |1100> at index 12; non-unitary matrices, denormalized amplitudes, and out-of-range registers rejected; state documents round-trip bit for bit: {doc_exact}; circuit text round-trips: {text_roundtrip}; all 5 shipped circuits verify unitary (worst Gram deviation {worst_unitary:.1e})"
        )))
    })
}
