//! Dense statevector simulation.
//!
//! A register of `n` qubits holds `2^n` complex amplitudes. Qubits are
//! numbered 1 through `n` and qubit 1 is the *most significant* bit of the
//! amplitude index, so the amplitude of `|b1 b2 .. bn>` sits at the index
//! whose binary expansion reads `b1 b2 .. bn` left to right. Printed kets
//! therefore read off directly against bit-string labels.
//!
//! All operations are pure: they borrow the input state and return a new
//! one. Measurement sampling is deterministic given a seed (ChaCha8).

use num_complex::Complex64 as C64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Deserialize;

use crate::bits::BitString;
use crate::error::{Error, Result};
use crate::gates::GateApplication;

/// Hard cap on register width; `2^24` amplitudes is the largest register the
/// crate will allocate.
pub const MAX_QUBITS: usize = 24;

/// Unit-norm tolerance for exposed states and probability sums.
pub const NORM_TOL: f64 = 1e-12;

/// Branches below this probability are dropped by enumeration.
pub const BRANCH_MIN_PROB: f64 = 1e-12;

/// A single complex amplitude.
pub type Amplitude = C64;

/// A normalized pure state of `n_qubits` qubits.
#[derive(Clone, PartialEq)]
pub struct StateVector {
    n_qubits: usize,
    amps: Vec<Amplitude>,
}

/// One outcome of a projective measurement on a set of target qubits.
#[derive(Clone)]
pub struct MeasurementBranch {
    /// Observed bits, ordered like the measured targets.
    pub bits: BitString,
    /// Born-rule probability of this outcome.
    pub probability: f64,
    /// Collapsed, renormalized state. Amplitudes inconsistent with `bits`
    /// are exactly zero.
    pub post_state: StateVector,
}

fn check_capacity(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::EmptyRegister);
    }
    if n > MAX_QUBITS {
        return Err(Error::CapacityExceeded {
            requested: n,
            max: MAX_QUBITS,
        });
    }
    Ok(())
}

impl StateVector {
    /// The computational basis state `|bits>`.
    pub fn basis_state(n: usize, bits: &BitString) -> Result<Self> {
        check_capacity(n)?;
        if bits.len() != n {
            return Err(Error::BitLengthMismatch {
                expected: n,
                got: bits.clone(),
            });
        }
        let mut amps = vec![C64::new(0.0, 0.0); 1 << n];
        amps[bits.to_index()] = C64::new(1.0, 0.0);
        Ok(StateVector { n_qubits: n, amps })
    }

    /// Wraps raw amplitudes; they must already be normalized within
    /// [`NORM_TOL`] and have length `2^n`.
    pub fn from_amplitudes(n: usize, amps: Vec<Amplitude>) -> Result<Self> {
        check_capacity(n)?;
        if amps.len() != 1 << n {
            return Err(Error::DimensionMismatch {
                left: n,
                right: amps.len().max(1).ilog2() as usize,
            });
        }
        let norm_sqr: f64 = amps.iter().map(|a| a.norm_sqr()).sum();
        if (norm_sqr - 1.0).abs() > NORM_TOL {
            return Err(Error::NotNormalized { norm_sqr });
        }
        Ok(StateVector { n_qubits: n, amps })
    }

    /// Normalized linear combination of same-width states.
    pub fn superpose(terms: &[(Amplitude, &StateVector)]) -> Result<Self> {
        let first = terms.first().ok_or(Error::EmptyRegister)?.1;
        let n = first.n_qubits;
        let mut amps = vec![C64::new(0.0, 0.0); 1 << n];
        for (coeff, state) in terms {
            if state.n_qubits != n {
                return Err(Error::DimensionMismatch {
                    left: n,
                    right: state.n_qubits,
                });
            }
            for (a, s) in amps.iter_mut().zip(&state.amps) {
                *a += coeff * s;
            }
        }
        let norm_sqr: f64 = amps.iter().map(|a| a.norm_sqr()).sum();
        if norm_sqr < NORM_TOL {
            return Err(Error::NotNormalized { norm_sqr });
        }
        let scale = norm_sqr.sqrt().recip();
        for a in &mut amps {
            *a *= scale;
        }
        Ok(StateVector { n_qubits: n, amps })
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn amps(&self) -> &[Amplitude] {
        &self.amps
    }

    pub fn amp(&self, index: usize) -> Amplitude {
        self.amps[index]
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum()
    }

    /// Applies one (optionally controlled) single-qubit gate.
    pub fn apply_gate(&self, gate: &GateApplication) -> Result<Self> {
        gate.check_register(self.n_qubits)?;
        let mut out = self.clone();
        out.apply_gate_in_place(gate);
        Ok(out)
    }

    /// Kernel shared by `apply_gate` and circuit execution. Indices must
    /// already be validated against this register.
    pub(crate) fn apply_gate_in_place(&mut self, gate: &GateApplication) {
        let n = self.n_qubits;
        let t_mask = 1usize << (n - gate.target());
        let mut pos_mask = 0usize;
        for &c in gate.positive_controls() {
            pos_mask |= 1 << (n - c);
        }
        let mut neg_mask = 0usize;
        for &c in gate.negative_controls() {
            neg_mask |= 1 << (n - c);
        }
        let m = gate.matrix();
        for k0 in 0..self.amps.len() {
            if k0 & t_mask != 0 {
                continue;
            }
            // Controls never overlap the target, so testing the k0 half of
            // the pair tests both halves.
            if k0 & pos_mask != pos_mask || k0 & neg_mask != 0 {
                continue;
            }
            let k1 = k0 | t_mask;
            let a0 = self.amps[k0];
            let a1 = self.amps[k1];
            self.amps[k0] = m[0][0] * a0 + m[0][1] * a1;
            self.amps[k1] = m[1][0] * a0 + m[1][1] * a1;
        }
    }

    /// `<self|other>`, conjugate-linear in `self`.
    pub fn inner_product(&self, other: &Self) -> Result<Amplitude> {
        if self.n_qubits != other.n_qubits {
            return Err(Error::DimensionMismatch {
                left: self.n_qubits,
                right: other.n_qubits,
            });
        }
        Ok(self
            .amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| a.conj() * b)
            .sum())
    }

    /// `|<self|other>|^2`; 1 exactly when the states differ only by a global
    /// phase.
    pub fn fidelity_up_to_phase(&self, other: &Self) -> Result<f64> {
        Ok(self.inner_product(other)?.norm_sqr())
    }

    /// Tensor product with `other` appended as the least significant qubits:
    /// `self` keeps qubits `1..=n`, `other` becomes `n+1..=n+m`.
    pub fn tensor(&self, other: &Self) -> Result<Self> {
        let n = self.n_qubits + other.n_qubits;
        check_capacity(n)?;
        let mut amps = Vec::with_capacity(1 << n);
        for a in &self.amps {
            for b in &other.amps {
                amps.push(a * b);
            }
        }
        Ok(StateVector { n_qubits: n, amps })
    }

    /// Splits off the leading register when the trailing qubits hold exactly
    /// `|suffix>`. Errors if more than [`NORM_TOL`] amplitude weight lives
    /// outside that subspace.
    pub fn project_suffix(&self, suffix: &BitString) -> Result<Self> {
        let m = suffix.len();
        if m == 0 || m >= self.n_qubits {
            return Err(Error::BitLengthMismatch {
                expected: self.n_qubits.saturating_sub(1),
                got: suffix.clone(),
            });
        }
        let n_front = self.n_qubits - m;
        let s = suffix.to_index();
        let mut amps = Vec::with_capacity(1 << n_front);
        for kf in 0..1usize << n_front {
            amps.push(self.amps[(kf << m) | s]);
        }
        let kept: f64 = amps.iter().map(|a| a.norm_sqr()).sum();
        let residual = self.norm_sqr() - kept;
        if residual > NORM_TOL {
            return Err(Error::ResidualWeight { weight: residual });
        }
        let scale = kept.sqrt().recip();
        for a in &mut amps {
            *a *= scale;
        }
        Ok(StateVector {
            n_qubits: n_front,
            amps,
        })
    }

    fn check_targets(&self, targets: &[usize]) -> Result<()> {
        if targets.is_empty() {
            return Err(Error::NoTargets);
        }
        let mut seen = 0usize;
        for &t in targets {
            if t == 0 || t > self.n_qubits {
                return Err(Error::IndexOutOfRange {
                    index: t,
                    n_qubits: self.n_qubits,
                });
            }
            let mask = 1 << (self.n_qubits - t);
            if seen & mask != 0 {
                return Err(Error::OverlappingIndices { index: t });
            }
            seen |= mask;
        }
        Ok(())
    }

    /// Born-rule probabilities for every outcome pattern on `targets`.
    /// Pattern bit `j` (most significant first) is the value of `targets[j]`.
    fn outcome_probabilities(&self, targets: &[usize]) -> Vec<f64> {
        let t = targets.len();
        let mut probs = vec![0.0f64; 1 << t];
        for (k, a) in self.amps.iter().enumerate() {
            let p = a.norm_sqr();
            if p == 0.0 {
                continue;
            }
            probs[self.pattern_of(k, targets)] += p;
        }
        probs
    }

    fn pattern_of(&self, index: usize, targets: &[usize]) -> usize {
        targets.iter().fold(0usize, |pat, &t| {
            (pat << 1) | ((index >> (self.n_qubits - t)) & 1)
        })
    }

    fn collapse(&self, targets: &[usize], pattern: usize, probability: f64) -> MeasurementBranch {
        let scale = probability.sqrt().recip();
        let amps = self
            .amps
            .iter()
            .enumerate()
            .map(|(k, a)| {
                if self.pattern_of(k, targets) == pattern {
                    a * scale
                } else {
                    C64::new(0.0, 0.0)
                }
            })
            .collect();
        MeasurementBranch {
            bits: BitString::from_index(pattern, targets.len()),
            probability,
            post_state: StateVector {
                n_qubits: self.n_qubits,
                amps,
            },
        }
    }

    /// Projective measurement of `targets`, sampled with a seeded ChaCha8
    /// generator. The same seed on the same state always returns the same
    /// branch.
    pub fn measure(&self, targets: &[usize], seed: u64) -> Result<MeasurementBranch> {
        self.check_targets(targets)?;
        let probs = self.outcome_probabilities(targets);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let u: f64 = rng.gen();
        let mut acc = 0.0;
        let mut chosen = None;
        for (pat, &p) in probs.iter().enumerate() {
            if p <= 0.0 {
                continue;
            }
            acc += p;
            chosen = Some(pat);
            if u < acc {
                break;
            }
        }
        // `chosen` is always set: probabilities sum to 1 over a normalized
        // state, so at least one pattern has positive weight.
        let pattern = chosen.expect("normalized state has a positive branch");
        Ok(self.collapse(targets, pattern, probs[pattern]))
    }

    /// Every measurement branch with probability above [`BRANCH_MIN_PROB`],
    /// in ascending outcome order. Probabilities of the returned branches
    /// sum to 1 within [`NORM_TOL`].
    pub fn branch_enumerate(&self, targets: &[usize]) -> Result<Vec<MeasurementBranch>> {
        self.check_targets(targets)?;
        let probs = self.outcome_probabilities(targets);
        Ok(probs
            .iter()
            .enumerate()
            .filter(|(_, &p)| p > BRANCH_MIN_PROB)
            .map(|(pat, &p)| self.collapse(targets, pat, p))
            .collect())
    }
}

impl std::fmt::Debug for StateVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "StateVector({} qubits)", self.n_qubits)
    }
}

#[derive(Deserialize)]
struct StateDocument {
    n_qubits: usize,
    amps: Vec<[f64; 2]>,
}

/// Renders a state as a JSON document with 17-significant-digit floats, so
/// reading it back reproduces every amplitude bit for bit.
pub fn write_state_document(state: &StateVector) -> String {
    let mut out = String::new();
    out.push_str("{\n");
    out.push_str(&format!("  \"n_qubits\": {},\n", state.n_qubits()));
    out.push_str("  \"amps\": [\n");
    let last = state.amps().len() - 1;
    for (k, a) in state.amps().iter().enumerate() {
        let sep = if k == last { "" } else { "," };
        out.push_str(&format!("    [{:.16e}, {:.16e}]{}\n", a.re, a.im, sep));
    }
    out.push_str("  ]\n}\n");
    out
}

/// Parses a document produced by [`write_state_document`] (or any JSON with
/// the same shape) back into a state.
pub fn read_state_document(text: &str) -> Result<StateVector> {
    let doc: StateDocument = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        msg: e.to_string(),
    })?;
    let amps = doc.amps.iter().map(|[re, im]| C64::new(*re, *im)).collect();
    StateVector::from_amplitudes(doc.n_qubits, amps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bits::bits;
    use crate::gates;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn basis_state_places_single_amplitude() {
        let s = StateVector::basis_state(4, &bits("1100")).unwrap();
        assert_eq!(s.amp(12), c(1.0, 0.0));
        assert_eq!(s.norm_sqr(), 1.0);
        assert_eq!(s.amps().iter().filter(|a| a.norm_sqr() > 0.0).count(), 1);
    }

    #[test]
    fn basis_state_rejects_bad_arguments() {
        assert!(matches!(
            StateVector::basis_state(4, &bits("110")),
            Err(Error::BitLengthMismatch { .. })
        ));
        assert!(matches!(
            StateVector::basis_state(25, &BitString::from_index(0, 25)),
            Err(Error::CapacityExceeded { .. })
        ));
        assert!(matches!(
            StateVector::basis_state(0, &BitString::new(vec![])),
            Err(Error::EmptyRegister)
        ));
    }

    #[test]
    fn from_amplitudes_enforces_normalization() {
        let bad = vec![c(0.9, 0.0), c(0.0, 0.0)];
        assert!(matches!(
            StateVector::from_amplitudes(1, bad),
            Err(Error::NotNormalized { .. })
        ));
        let ok = vec![c(0.6, 0.0), c(0.0, 0.8)];
        assert!(StateVector::from_amplitudes(1, ok).is_ok());
    }

    #[test]
    fn hadamard_on_msb_qubit() {
        let s = StateVector::basis_state(2, &bits("00")).unwrap();
        let s = s.apply_gate(&gates::h(1)).unwrap();
        // |00> -> (|00> + |10>)/sqrt(2): qubit 1 is the high bit.
        let r = std::f64::consts::FRAC_1_SQRT_2;
        assert!((s.amp(0).re - r).abs() < 1e-15);
        assert!((s.amp(2).re - r).abs() < 1e-15);
        assert_eq!(s.amp(1), c(0.0, 0.0));
        assert_eq!(s.amp(3), c(0.0, 0.0));
    }

    #[test]
    fn cnot_flips_target_only_when_control_set() {
        let s = StateVector::basis_state(2, &bits("10")).unwrap();
        let s = s.apply_gate(&gates::cnot(1, 2)).unwrap();
        assert_eq!(s.amp(bits("11").to_index()), c(1.0, 0.0));

        let s = StateVector::basis_state(2, &bits("00")).unwrap();
        let s = s.apply_gate(&gates::cnot(1, 2)).unwrap();
        assert_eq!(s.amp(0), c(1.0, 0.0));
    }

    #[test]
    fn negative_control_fires_on_zero() {
        let x_if_q1_zero =
            GateApplication::with_controls(gates::x(2), vec![], vec![1]).unwrap();
        let s = StateVector::basis_state(2, &bits("00")).unwrap();
        let s = s.apply_gate(&x_if_q1_zero).unwrap();
        assert_eq!(s.amp(bits("01").to_index()), c(1.0, 0.0));

        let s = StateVector::basis_state(2, &bits("10")).unwrap();
        let s = s.apply_gate(&x_if_q1_zero).unwrap();
        assert_eq!(s.amp(bits("10").to_index()), c(1.0, 0.0));
    }

    #[test]
    fn inner_product_is_conjugate_linear_in_self() {
        let plus = StateVector::from_amplitudes(
            1,
            vec![c(std::f64::consts::FRAC_1_SQRT_2, 0.0); 2],
        )
        .unwrap();
        let i_state = StateVector::from_amplitudes(
            1,
            vec![
                c(std::f64::consts::FRAC_1_SQRT_2, 0.0),
                c(0.0, std::f64::consts::FRAC_1_SQRT_2),
            ],
        )
        .unwrap();
        let ip = plus.inner_product(&i_state).unwrap();
        assert!((ip - c(0.5, 0.5)).norm() < 1e-15);
        let ip_rev = i_state.inner_product(&plus).unwrap();
        assert!((ip_rev - c(0.5, -0.5)).norm() < 1e-15);
    }

    #[test]
    fn fidelity_ignores_global_phase() {
        let s = StateVector::basis_state(3, &bits("101")).unwrap();
        let phase = C64::from_polar(1.0, std::f64::consts::PI / 3.0);
        let rotated = StateVector::from_amplitudes(
            3,
            s.amps().iter().map(|a| a * phase).collect(),
        )
        .unwrap();
        let f = s.fidelity_up_to_phase(&rotated).unwrap();
        assert!((f - 1.0).abs() < 1e-12);
    }

    #[test]
    fn measure_is_deterministic_per_seed() {
        let r = std::f64::consts::FRAC_1_SQRT_2;
        let plus = StateVector::from_amplitudes(1, vec![c(r, 0.0), c(r, 0.0)]).unwrap();
        let first = plus.measure(&[1], 7).unwrap();
        for _ in 0..5 {
            let again = plus.measure(&[1], 7).unwrap();
            assert_eq!(again.bits, first.bits);
            assert_eq!(again.probability, first.probability);
        }
        // Different seeds eventually see both outcomes of a fair coin.
        let mut seen = std::collections::BTreeSet::new();
        for seed in 0..32 {
            seen.insert(plus.measure(&[1], seed).unwrap().bits.to_string());
        }
        assert_eq!(seen.len(), 2);
    }

    #[test]
    fn branch_enumerate_on_bell_pair() {
        let bell = StateVector::basis_state(2, &bits("00"))
            .unwrap()
            .apply_gate(&gates::h(1))
            .unwrap()
            .apply_gate(&gates::cnot(1, 2))
            .unwrap();
        let branches = bell.branch_enumerate(&[1, 2]).unwrap();
        assert_eq!(branches.len(), 2);
        assert_eq!(branches[0].bits, bits("00"));
        assert_eq!(branches[1].bits, bits("11"));
        let total: f64 = branches.iter().map(|b| b.probability).sum();
        assert!((total - 1.0).abs() < NORM_TOL);
        for b in &branches {
            assert!((b.probability - 0.5).abs() < 1e-12);
            assert!((b.post_state.norm_sqr() - 1.0).abs() < NORM_TOL);
        }
        // Measuring only qubit 1 of the Bell pair leaves the pair correlated.
        let partial = bell.branch_enumerate(&[1]).unwrap();
        assert_eq!(partial.len(), 2);
        assert_eq!(
            partial[1].post_state.amp(bits("11").to_index()),
            c(1.0, 0.0)
        );
    }

    #[test]
    fn collapsed_amplitudes_are_exactly_zero() {
        let r = 0.5f64;
        let s = StateVector::from_amplitudes(
            2,
            vec![c(r, 0.0), c(r, 0.0), c(r, 0.0), c(r, 0.0)],
        )
        .unwrap();
        let b = s.measure(&[2], 3).unwrap();
        let kept = b.bits.bit(1);
        for k in 0..4usize {
            if (k & 1 == 1) != kept {
                assert_eq!(b.post_state.amp(k), c(0.0, 0.0));
            }
        }
    }

    #[test]
    fn measurement_rejects_bad_targets() {
        let s = StateVector::basis_state(2, &bits("00")).unwrap();
        assert!(matches!(s.measure(&[], 0), Err(Error::NoTargets)));
        assert!(matches!(
            s.measure(&[3], 0),
            Err(Error::IndexOutOfRange { .. })
        ));
        assert!(matches!(
            s.branch_enumerate(&[1, 1]),
            Err(Error::OverlappingIndices { .. })
        ));
    }

    #[test]
    fn tensor_orders_registers_prefix_first() {
        let a = StateVector::basis_state(1, &bits("1")).unwrap();
        let b = StateVector::basis_state(2, &bits("01")).unwrap();
        let t = a.tensor(&b).unwrap();
        assert_eq!(t.n_qubits(), 3);
        assert_eq!(t.amp(bits("101").to_index()), c(1.0, 0.0));
    }

    #[test]
    fn project_suffix_recovers_front_register() {
        let front = StateVector::basis_state(2, &bits("10"))
            .unwrap()
            .apply_gate(&gates::h(1))
            .unwrap();
        let anc = StateVector::basis_state(2, &bits("01")).unwrap();
        let joint = front.tensor(&anc).unwrap();
        let back = joint.project_suffix(&bits("01")).unwrap();
        assert!((back.fidelity_up_to_phase(&front).unwrap() - 1.0).abs() < 1e-12);
        assert!(matches!(
            joint.project_suffix(&bits("11")),
            Err(Error::ResidualWeight { .. })
        ));
    }

    #[test]
    fn state_document_round_trips_exactly() {
        let s = StateVector::basis_state(3, &bits("000"))
            .unwrap()
            .apply_gate(&gates::h(1))
            .unwrap()
            .apply_gate(&gates::h(3))
            .unwrap()
            .apply_gate(&gates::cnot(1, 2))
            .unwrap();
        let doc = write_state_document(&s);
        let back = read_state_document(&doc).unwrap();
        assert_eq!(back.n_qubits(), 3);
        for (a, b) in s.amps().iter().zip(back.amps()) {
            assert_eq!(a, b);
        }
    }

    #[test]
    fn state_document_rejects_malformed_input() {
        assert!(read_state_document("{").is_err());
        assert!(read_state_document("{\"n_qubits\": 2, \"amps\": [[1.0, 0.0]]}").is_err());
    }
}
