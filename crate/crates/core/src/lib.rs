//! Statevector simulation and non-destructive discrimination of the
//! four- and five-qubit orthogonal cluster-state families.
//!
//! The crate builds the sixteen four-qubit (and thirty-two five-qubit)
//! mutually orthogonal cluster states, audits the printed state tables for
//! orthogonality defects, discriminates any table state with ancilla-coupled
//! parity and correlation measurements that leave the state intact, and runs
//! the dense-coding dialogue and error-detection protocols on top of that
//! discrimination.
//!
//! Qubit 1 is the most significant bit of every amplitude index; see
//! [`qstate`] for the register conventions shared by all modules.

pub mod bits;
pub mod cluster;
pub mod error;
pub mod gates;
pub mod ndd;
pub mod protocols;
pub mod qstate;
pub mod verify;

pub use bits::BitString;
pub use cluster::{AuditReport, ClusterTable, Family, TableMode};
pub use error::{Error, Result};
pub use ndd::{NddOutcome, Observable};
pub use gates::{Circuit, GateApplication, UnitarityReport};
pub use protocols::{Codebook, DialogueTranscript, Pauli, SyndromeTable};
pub use qstate::{MeasurementBranch, StateVector};
pub use verify::{verify_all, CheckResult};
