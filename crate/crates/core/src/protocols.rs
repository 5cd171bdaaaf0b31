//! Dense-coding dialogue and error detection on the cluster-state families.
//!
//! Both protocols ride on the same mechanism: applying a Pauli to a table
//! state yields another table state (up to a global phase), so every local
//! Pauli encoding shifts the label by a fixed XOR mask, and the readout
//! circuit recovers the shifted label without consuming the state.
//!
//! A *codebook* fixes one pair of qubits held by a sender and tabulates the
//! label reached from the all-zero row by each of the sixteen two-qubit
//! Pauli encodings. A codebook carries four bits per use exactly when those
//! sixteen labels are distinct. That fails for the adjacent qubit pairs of
//! the four-qubit family: the pair parities `Z1 Z2` and `Z3 Z4` stabilize
//! every row, so encodings that differ by `Z x Z` collide and only eight
//! labels remain. Splitting the qubits between the parties as `(1,3)` and
//! `(2,4)` removes every stabilizer from each party's hands and restores
//! the full sixteen-label capacity; the dialogue defaults are built on that
//! split, while the adjacent split reports its degeneracy as an error.
//!
//! Error detection reuses the readout as a syndrome extractor: a single
//! Pauli fault on a known row shifts the measured label by the fault's
//! mask. Faults whose masks coincide (`Z` on either qubit of a stabilized
//! pair) cannot be told apart, but the ambiguity is harmless: the competing
//! corrections differ by a stabilizer, so either one restores the state.

use crate::bits::BitString;
use crate::cluster::{ClusterTable, Family, TableMode, ORTHO_TOL};
use crate::error::{Error, Result};
use crate::gates::GateApplication;
use crate::ndd::run_ndd;
use crate::qstate::StateVector;

/// A single-qubit Pauli operator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Pauli {
    I,
    X,
    Y,
    Z,
}

impl Pauli {
    pub const ALL: [Pauli; 4] = [Pauli::I, Pauli::X, Pauli::Y, Pauli::Z];

    /// Two-bit encoding used in messages: `00 I`, `01 X`, `10 Y`, `11 Z`.
    pub fn from_bit_pair(hi: bool, lo: bool) -> Pauli {
        match (hi, lo) {
            (false, false) => Pauli::I,
            (false, true) => Pauli::X,
            (true, false) => Pauli::Y,
            (true, true) => Pauli::Z,
        }
    }

    pub fn bit_pair(self) -> (bool, bool) {
        match self {
            Pauli::I => (false, false),
            Pauli::X => (false, true),
            Pauli::Y => (true, false),
            Pauli::Z => (true, true),
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Pauli::I => 'I',
            Pauli::X => 'X',
            Pauli::Y => 'Y',
            Pauli::Z => 'Z',
        }
    }

    /// The gate realizing this Pauli on `qubit`; `None` for the identity.
    pub fn gate(self, qubit: usize) -> Option<GateApplication> {
        match self {
            Pauli::I => None,
            Pauli::X => Some(crate::gates::x(qubit)),
            Pauli::Y => Some(crate::gates::y(qubit)),
            Pauli::Z => Some(crate::gates::z(qubit)),
        }
    }
}

impl std::fmt::Display for Pauli {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// Applies one Pauli to one qubit of a state.
pub fn apply_pauli(state: &StateVector, pauli: Pauli, qubit: usize) -> Result<StateVector> {
    match pauli.gate(qubit) {
        Some(gate) => state.apply_gate(&gate),
        None => {
            if qubit == 0 || qubit > state.n_qubits() {
                return Err(Error::IndexOutOfRange {
                    index: qubit,
                    n_qubits: state.n_qubits(),
                });
            }
            Ok(state.clone())
        }
    }
}

/// Which qubit pair of a family a sender holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Holder {
    /// Qubits 1 and 2.
    FirstTwo,
    /// The last two qubits of the register.
    LastTwo,
}

impl Holder {
    pub fn qubits(self, family: Family) -> [usize; 2] {
        let n = family.n_qubits();
        match self {
            Holder::FirstTwo => [1, 2],
            Holder::LastTwo => [n - 1, n],
        }
    }
}

/// One codebook line: a four-bit message, its Pauli pair, and the table
/// label the encoding reaches from the all-zero row.
#[derive(Clone, Debug, PartialEq)]
pub struct CodebookEntry {
    pub message: BitString,
    pub paulis: (Pauli, Pauli),
    pub label: BitString,
}

/// The dense-coding dictionary of one sender.
#[derive(Clone, Debug)]
pub struct Codebook {
    family: Family,
    qubits: [usize; 2],
    entries: Vec<CodebookEntry>,
}

impl Codebook {
    pub fn family(&self) -> Family {
        self.family
    }

    pub fn qubits(&self) -> [usize; 2] {
        self.qubits
    }

    pub fn entries(&self) -> &[CodebookEntry] {
        &self.entries
    }

    pub fn entry_for_message(&self, message: &BitString) -> Result<&CodebookEntry> {
        if message.len() != 4 {
            return Err(Error::BitLengthMismatch {
                expected: 4,
                got: message.clone(),
            });
        }
        Ok(&self.entries[message.to_index()])
    }

    /// The entry whose encoding shifts the all-zero row to `label`.
    pub fn entry_for_label(&self, label: &BitString) -> Result<&CodebookEntry> {
        self.entries
            .iter()
            .find(|e| &e.label == label)
            .ok_or_else(|| Error::UnknownLabel {
                family: self.family.tag(),
                label: label.clone(),
            })
    }

    /// Applies an entry's Pauli pair to a state.
    pub fn encode(&self, entry: &CodebookEntry, state: &StateVector) -> Result<StateVector> {
        let step = apply_pauli(state, entry.paulis.0, self.qubits[0])?;
        apply_pauli(&step, entry.paulis.1, self.qubits[1])
    }
}

fn message_paulis(message: &BitString) -> (Pauli, Pauli) {
    (
        Pauli::from_bit_pair(message.bit(1), message.bit(2)),
        Pauli::from_bit_pair(message.bit(3), message.bit(4)),
    )
}

/// Simulates all sixteen two-qubit Pauli encodings on `qubits`, reading each
/// reached label off the discrimination circuit. No distinctness check; see
/// [`build_codebook_on`] for the carrying-capacity contract.
pub fn encoding_map(family: Family, qubits: [usize; 2]) -> Result<Vec<CodebookEntry>> {
    let n = family.n_qubits();
    for &q in &qubits {
        if q == 0 || q > n {
            return Err(Error::IndexOutOfRange {
                index: q,
                n_qubits: n,
            });
        }
    }
    if qubits[0] == qubits[1] {
        return Err(Error::OverlappingIndices { index: qubits[0] });
    }
    let base = ClusterTable::repaired(family).state(&BitString::from_index(0, n))?;
    let mut entries = Vec::with_capacity(16);
    for k in 0..16usize {
        let message = BitString::from_index(k, 4);
        let paulis = message_paulis(&message);
        let step = apply_pauli(&base, paulis.0, qubits[0])?;
        let encoded = apply_pauli(&step, paulis.1, qubits[1])?;
        let branches = crate::ndd::branch_ndd(family, TableMode::Repaired, &encoded)?;
        match branches.as_slice() {
            [single] if (single.probability - 1.0).abs() < ORTHO_TOL => {
                entries.push(CodebookEntry {
                    message,
                    paulis,
                    label: single.label.clone(),
                });
            }
            other => {
                return Err(Error::NondeterministicEncoding {
                    message,
                    branches: other.len(),
                })
            }
        }
    }
    Ok(entries)
}

/// Builds the dense-coding codebook for a sender holding `qubits`. Errors
/// with the full collision census when the sixteen encodings do not reach
/// sixteen distinct labels.
pub fn build_codebook_on(family: Family, qubits: [usize; 2]) -> Result<Codebook> {
    let entries = encoding_map(family, qubits)?;
    let mut collisions = Vec::new();
    let mut labels: Vec<&BitString> = Vec::new();
    for entry in &entries {
        if !labels.contains(&&entry.label) {
            labels.push(&entry.label);
        }
    }
    for (i, a) in entries.iter().enumerate() {
        for b in &entries[i + 1..] {
            if a.label == b.label {
                collisions.push((a.message.clone(), b.message.clone()));
            }
        }
    }
    if collisions.is_empty() {
        Ok(Codebook {
            family,
            qubits,
            entries,
        })
    } else {
        Err(Error::DegenerateCodebook {
            qubits,
            distinct: labels.len(),
            collisions,
        })
    }
}

/// Builds the codebook for one of the two named qubit pairs.
pub fn build_codebook(family: Family, holder: Holder) -> Result<Codebook> {
    build_codebook_on(family, holder.qubits(family))
}

/// How the four qubits of the dialogue state are divided between parties.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DialogueSplit {
    /// Party A holds qubits (1,2), party B holds (3,4). Both pairs carry a
    /// row stabilizer, so this split cannot carry four bits per message.
    Adjacent,
    /// Party A holds qubits (1,3), party B holds (2,4). Full capacity.
    Interleaved,
}

impl DialogueSplit {
    pub fn qubit_pairs(self) -> ([usize; 2], [usize; 2]) {
        match self {
            DialogueSplit::Adjacent => ([1, 2], [3, 4]),
            DialogueSplit::Interleaved => ([1, 3], [2, 4]),
        }
    }
}

/// The two conversation parties. A sends on even turns, B on odd turns.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Party {
    A,
    B,
}

/// One dialogue turn: a party encoded `message`, everyone read `label`,
/// and the receiver reconstructed `decoded`.
#[derive(Clone, Debug)]
pub struct DialogueRound {
    pub round: usize,
    pub sender: Party,
    pub message: BitString,
    pub label: BitString,
    pub decoded: BitString,
    /// Fidelity of the post-readout state against the table row named by
    /// `label`; unit fidelity certifies the state survived for reuse.
    pub post_fidelity: f64,
}

/// A full dialogue on one shared four-qubit state.
#[derive(Clone, Debug)]
pub struct DialogueTranscript {
    pub split: DialogueSplit,
    pub rounds: Vec<DialogueRound>,
}

/// Runs a dense-coding dialogue over `messages` on the default qubit
/// assignment (party A on qubits 1,2; party B on 3,4). That assignment is
/// degenerate, so this currently always reports the collision census; it is
/// kept as the named entry point for the stated protocol. Use
/// [`dialogue_run_with`] and [`DialogueSplit::Interleaved`] for a working
/// dialogue.
pub fn dialogue_run(messages: &[BitString], seed: u64) -> Result<DialogueTranscript> {
    dialogue_run_with(DialogueSplit::Adjacent, messages, seed)
}

/// Runs a dense-coding dialogue on the four-qubit family with an explicit
/// split. Parties alternate turns starting with A; each turn encodes four
/// bits, reads the label without consuming the state, and hands the same
/// state to the next turn. The receiver decodes by XOR-ing the previous
/// label out of the measured one.
pub fn dialogue_run_with(
    split: DialogueSplit,
    messages: &[BitString],
    seed: u64,
) -> Result<DialogueTranscript> {
    let family = Family::C4;
    let (qubits_a, qubits_b) = split.qubit_pairs();
    let book_a = build_codebook_on(family, qubits_a)?;
    let book_b = build_codebook_on(family, qubits_b)?;
    let table = ClusterTable::repaired(family);
    let mut current_label = BitString::from_index(0, 4);
    let mut state = table.state(&current_label)?;
    let mut rounds = Vec::with_capacity(messages.len());
    for (i, message) in messages.iter().enumerate() {
        let (sender, book) = match i % 2 {
            0 => (Party::A, &book_a),
            _ => (Party::B, &book_b),
        };
        let entry = book.entry_for_message(message)?;
        let encoded = book.encode(entry, &state)?;
        let outcome = run_ndd(
            family,
            TableMode::Repaired,
            &encoded,
            seed.wrapping_add(i as u64),
        )?;
        // The codebook is anchored at the all-zero row, so an entry's label
        // is exactly its XOR mask.
        let mask = outcome.label.xor(&current_label);
        let decoded = book.entry_for_label(&mask)?.message.clone();
        if &decoded != message {
            return Err(Error::DecodeMismatch {
                sent: message.clone(),
                decoded,
            });
        }
        let post_fidelity = outcome
            .post_state
            .fidelity_up_to_phase(&table.state(&outcome.label)?)?;
        rounds.push(DialogueRound {
            round: i,
            sender,
            message: message.clone(),
            label: outcome.label.clone(),
            decoded,
            post_fidelity,
        });
        current_label = outcome.label;
        state = outcome.post_state;
    }
    Ok(DialogueTranscript { split, rounds })
}

/// One row of a syndrome table: a possible fault and the label it produces
/// on the all-zero row.
#[derive(Clone, Debug, PartialEq)]
pub struct SyndromeEntry {
    /// `None` is the fault-free case.
    pub error: Option<(Pauli, usize)>,
    pub syndrome: BitString,
}

impl SyndromeEntry {
    pub fn describe(&self) -> String {
        match self.error {
            None => "none".to_string(),
            Some((p, q)) => format!("{p}{q}"),
        }
    }
}

/// All single-qubit fault cases of a family and their syndromes.
#[derive(Clone, Debug)]
pub struct SyndromeTable {
    family: Family,
    entries: Vec<SyndromeEntry>,
}

impl SyndromeTable {
    pub fn family(&self) -> Family {
        self.family
    }

    pub fn entries(&self) -> &[SyndromeEntry] {
        &self.entries
    }

    pub fn distinct_syndromes(&self) -> usize {
        let mut seen: Vec<&BitString> = Vec::new();
        for e in &self.entries {
            if !seen.contains(&&e.syndrome) {
                seen.push(&e.syndrome);
            }
        }
        seen.len()
    }

    /// Every fault case consistent with a measured syndrome. Empty means
    /// the syndrome matches no single-qubit fault (a multi-qubit event).
    pub fn diagnose(&self, syndrome: &BitString) -> Vec<&SyndromeEntry> {
        self.entries
            .iter()
            .filter(|e| &e.syndrome == syndrome)
            .collect()
    }
}

/// Simulates every single-qubit fault on the all-zero row and tabulates the
/// label each one produces. The fault-free case is listed first.
pub fn syndrome_table(family: Family) -> Result<SyndromeTable> {
    let n = family.n_qubits();
    let base_label = BitString::from_index(0, n);
    let base = ClusterTable::repaired(family).state(&base_label)?;
    let mut entries = Vec::with_capacity(1 + 3 * n);
    let mut cases: Vec<Option<(Pauli, usize)>> = vec![None];
    for qubit in 1..=n {
        for pauli in [Pauli::X, Pauli::Y, Pauli::Z] {
            cases.push(Some((pauli, qubit)));
        }
    }
    for error in cases {
        let corrupted = match error {
            None => base.clone(),
            Some((pauli, qubit)) => apply_pauli(&base, pauli, qubit)?,
        };
        let branches = crate::ndd::branch_ndd(family, TableMode::Repaired, &corrupted)?;
        let [single] = branches.as_slice() else {
            return Err(Error::NondeterministicEncoding {
                message: base_label.clone(),
                branches: branches.len(),
            });
        };
        entries.push(SyndromeEntry {
            error,
            syndrome: single.label.xor(&base_label),
        });
    }
    Ok(SyndromeTable { family, entries })
}

/// Outcome of one error-detection run.
#[derive(Clone, Debug)]
pub struct ErrorReport {
    pub injected: Option<(Pauli, usize)>,
    pub measured_label: BitString,
    pub syndrome: BitString,
    /// Fault cases consistent with the syndrome.
    pub candidates: Vec<SyndromeEntry>,
    /// Fidelity of the post-readout state against the (possibly corrupted)
    /// input; the readout never disturbs single-fault states.
    pub post_fidelity: f64,
}

/// Prepares the all-zero row, optionally injects one fault, reads the label,
/// and diagnoses the syndrome.
pub fn detect_error(
    family: Family,
    injected: Option<(Pauli, usize)>,
    seed: u64,
) -> Result<ErrorReport> {
    let n = family.n_qubits();
    let base_label = BitString::from_index(0, n);
    let base = ClusterTable::repaired(family).state(&base_label)?;
    let corrupted = match injected {
        None => base.clone(),
        Some((pauli, qubit)) => apply_pauli(&base, pauli, qubit)?,
    };
    let outcome = run_ndd(family, TableMode::Repaired, &corrupted, seed)?;
    let syndrome = outcome.label.xor(&base_label);
    let table = syndrome_table(family)?;
    let candidates = table
        .diagnose(&syndrome)
        .into_iter()
        .cloned()
        .collect::<Vec<_>>();
    let post_fidelity = outcome.post_state.fidelity_up_to_phase(&corrupted)?;
    Ok(ErrorReport {
        injected,
        measured_label: outcome.label,
        syndrome,
        candidates,
        post_fidelity,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bits::bits;

    #[test]
    fn pauli_bit_pairs_round_trip() {
        for p in Pauli::ALL {
            let (hi, lo) = p.bit_pair();
            assert_eq!(Pauli::from_bit_pair(hi, lo), p);
        }
    }

    #[test]
    fn encodings_shift_rows_to_rows() {
        // X on qubit 1 of the all-zero row lands exactly on row 1001.
        let base = ClusterTable::repaired(Family::C4)
            .state(&bits("0000"))
            .unwrap();
        let shifted = apply_pauli(&base, Pauli::X, 1).unwrap();
        let target = ClusterTable::repaired(Family::C4)
            .state(&bits("1001"))
            .unwrap();
        assert!((shifted.fidelity_up_to_phase(&target).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn encoding_map_matches_frozen_entries() {
        let map = encoding_map(Family::C4, [1, 2]).unwrap();
        // Message 0101 is X on qubit 1, X on qubit 2.
        let xx = &map[bits("0101").to_index()];
        assert_eq!(xx.paulis, (Pauli::X, Pauli::X));
        assert_eq!(xx.label, bits("0001"));
        // The all-identity message stays on the all-zero row.
        assert_eq!(map[0].label, bits("0000"));
    }

    #[test]
    fn adjacent_pairs_are_degenerate_with_eight_labels() {
        for holder in [Holder::FirstTwo, Holder::LastTwo] {
            let err = build_codebook(Family::C4, holder).unwrap_err();
            match err {
                Error::DegenerateCodebook {
                    qubits,
                    distinct,
                    collisions,
                } => {
                    assert_eq!(qubits, holder.qubits(Family::C4));
                    assert_eq!(distinct, 8);
                    assert_eq!(collisions.len(), 8);
                    if holder == Holder::FirstTwo {
                        // X x X collides with Y x Y, and Y x I with X x Z.
                        assert!(collisions
                            .contains(&(bits("0101"), bits("1010"))));
                        assert!(collisions
                            .contains(&(bits("0111"), bits("1000"))));
                    }
                }
                other => panic!("expected DegenerateCodebook, got {other:?}"),
            }
        }
    }

    #[test]
    fn interleaved_pairs_reach_all_sixteen_labels() {
        for qubits in [[1, 3], [2, 4]] {
            let book = build_codebook_on(Family::C4, qubits).unwrap();
            let mut labels: Vec<String> =
                book.entries().iter().map(|e| e.label.to_string()).collect();
            labels.sort();
            labels.dedup();
            assert_eq!(labels.len(), 16, "qubits {qubits:?}");
        }
    }

    #[test]
    fn diagonal_pairs_also_carry_full_capacity() {
        for qubits in [[1, 4], [2, 3]] {
            assert!(build_codebook_on(Family::C4, qubits).is_ok(), "{qubits:?}");
        }
    }

    #[test]
    fn stated_dialogue_split_reports_its_degeneracy() {
        let messages = [bits("1010")];
        match dialogue_run(&messages, 1) {
            Err(Error::DegenerateCodebook { distinct: 8, .. }) => {}
            other => panic!("expected DegenerateCodebook, got {other:?}"),
        }
    }

    #[test]
    fn interleaved_dialogue_round_trips_messages() {
        let messages = [bits("1010"), bits("0110"), bits("1111")];
        let transcript =
            dialogue_run_with(DialogueSplit::Interleaved, &messages, 7).unwrap();
        assert_eq!(transcript.rounds.len(), 3);
        let senders: Vec<Party> = transcript.rounds.iter().map(|r| r.sender).collect();
        assert_eq!(senders, [Party::A, Party::B, Party::A]);
        for (round, message) in transcript.rounds.iter().zip(&messages) {
            assert_eq!(&round.message, message);
            assert_eq!(&round.decoded, message);
            assert!((round.post_fidelity - 1.0).abs() < ORTHO_TOL);
        }
        // Labels accumulate by XOR mask; these values pin the mask algebra.
        let labels: Vec<String> = transcript
            .rounds
            .iter()
            .map(|r| r.label.to_string())
            .collect();
        assert_eq!(labels, ["1110", "0001", "0100"]);
    }

    #[test]
    fn dialogue_state_survives_many_rounds() {
        let messages: Vec<BitString> = (0..16).map(|k| BitString::from_index(k, 4)).collect();
        let transcript =
            dialogue_run_with(DialogueSplit::Interleaved, &messages, 3).unwrap();
        assert_eq!(transcript.rounds.len(), 16);
        for round in &transcript.rounds {
            assert_eq!(round.decoded, round.message);
            assert!((round.post_fidelity - 1.0).abs() < ORTHO_TOL);
        }
    }

    #[test]
    fn dialogue_rejects_malformed_messages() {
        let messages = [bits("101")];
        assert!(matches!(
            dialogue_run_with(DialogueSplit::Interleaved, &messages, 0),
            Err(Error::BitLengthMismatch { .. })
        ));
    }

    #[test]
    fn four_qubit_syndromes_match_hand_derived_masks() {
        let table = syndrome_table(Family::C4).unwrap();
        assert_eq!(table.entries().len(), 13);
        assert_eq!(table.distinct_syndromes(), 11);
        let expected = [
            ("none", "0000"),
            ("X1", "1001"),
            ("Y1", "1101"),
            ("Z1", "0100"),
            ("X2", "1000"),
            ("Y2", "1100"),
            ("Z2", "0100"),
            ("X3", "0010"),
            ("Y3", "0011"),
            ("Z3", "0001"),
            ("X4", "0110"),
            ("Y4", "0111"),
            ("Z4", "0001"),
        ];
        for (name, syndrome) in expected {
            let entry = table
                .entries()
                .iter()
                .find(|e| e.describe() == name)
                .unwrap_or_else(|| panic!("missing case {name}"));
            assert_eq!(entry.syndrome, bits(syndrome), "case {name}");
        }
    }

    #[test]
    fn five_qubit_syndromes_collide_only_on_stabilizer_partners() {
        let table = syndrome_table(Family::C5).unwrap();
        assert_eq!(table.entries().len(), 16);
        assert_eq!(table.distinct_syndromes(), 14);
        let z1 = table.entries().iter().find(|e| e.describe() == "Z1").unwrap();
        let z2 = table.entries().iter().find(|e| e.describe() == "Z2").unwrap();
        let z3 = table.entries().iter().find(|e| e.describe() == "Z3").unwrap();
        let z5 = table.entries().iter().find(|e| e.describe() == "Z5").unwrap();
        assert_eq!(z1.syndrome, z2.syndrome);
        assert_eq!(z3.syndrome, z5.syndrome);
        let z4 = table.entries().iter().find(|e| e.describe() == "Z4").unwrap();
        assert_ne!(z4.syndrome, z3.syndrome);
    }

    #[test]
    fn detect_error_diagnoses_unique_faults() {
        let report = detect_error(Family::C4, Some((Pauli::Y, 3)), 5).unwrap();
        assert_eq!(report.syndrome, bits("0011"));
        assert_eq!(report.candidates.len(), 1);
        assert_eq!(report.candidates[0].describe(), "Y3");
        assert!((report.post_fidelity - 1.0).abs() < ORTHO_TOL);

        let clean = detect_error(Family::C4, None, 5).unwrap();
        assert_eq!(clean.syndrome, bits("0000"));
        assert_eq!(clean.candidates.len(), 1);
        assert_eq!(clean.candidates[0].describe(), "none");
    }

    #[test]
    fn ambiguous_syndromes_still_correct_the_state() {
        // Z1 and Z2 share a syndrome because Z1 Z2 stabilizes every row, and
        // for the same reason either correction restores the state.
        let base = ClusterTable::repaired(Family::C4)
            .state(&bits("0000"))
            .unwrap();
        let corrupted = apply_pauli(&base, Pauli::Z, 1).unwrap();
        let report = detect_error(Family::C4, Some((Pauli::Z, 1)), 9).unwrap();
        assert_eq!(report.candidates.len(), 2);
        let names: Vec<String> = report.candidates.iter().map(|c| c.describe()).collect();
        assert_eq!(names, ["Z1", "Z2"]);
        for candidate in &report.candidates {
            let (pauli, qubit) = candidate.error.unwrap();
            let fixed = apply_pauli(&corrupted, pauli, qubit).unwrap();
            assert!((fixed.fidelity_up_to_phase(&base).unwrap() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn unknown_syndromes_diagnose_as_empty() {
        let table = syndrome_table(Family::C4).unwrap();
        assert!(table.diagnose(&bits("1010")).is_empty());
    }

    #[test]
    fn two_faults_can_evade_single_fault_diagnosis() {
        // X2 then Z1 composes masks 1000 and 0100 into 1100, which collides
        // with the single fault Y2; the detector reports that candidate.
        let base = ClusterTable::repaired(Family::C4)
            .state(&bits("0000"))
            .unwrap();
        let hit = apply_pauli(&apply_pauli(&base, Pauli::X, 2).unwrap(), Pauli::Z, 1).unwrap();
        let outcome = run_ndd(Family::C4, TableMode::Repaired, &hit, 0).unwrap();
        let table = syndrome_table(Family::C4).unwrap();
        let candidates = table.diagnose(&outcome.label);
        assert_eq!(candidates.len(), 1);
        assert_eq!(candidates[0].describe(), "Y2");
    }
}
