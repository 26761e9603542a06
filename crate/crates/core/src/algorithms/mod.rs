//! Algorithms written against the abstract [`Backend`](crate::device::Backend):
//! quantum coin, repeat-until-success, VQE with Hamiltonian averaging, and
//! QAOA for MAXCUT.

mod maxcut;
mod optimiser;
mod pauli;
mod protocols;
mod qaoa;
mod vqe;

use thiserror::Error;

use crate::circuit::CircuitError;
use crate::device::DeviceError;

pub use maxcut::{best_cut, cut_value, Cut, Graph};
pub use optimiser::{ClassicalOptimiser, HistoryEntry, OptimiserHistory, QaoaRandomSearch, VqeRandomSearch};
pub use pauli::{encoding_unitary, Hamiltonian, PauliOp, PauliString};
pub use protocols::{coin, coin_program, example_u_prime, rus, rus_counted};
pub use qaoa::{qaoa, qaoa_unitary, QaoaParams, QaoaResult, EDGE_PHASE_SCALE};
pub use vqe::{ansatz, compute_energy, compute_energy_pauli, vqe, VqeResult};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AlgorithmError {
    #[error(transparent)]
    Device(#[from] DeviceError),
    #[error(transparent)]
    Circuit(#[from] CircuitError),
    #[error("term is the identity on every qubit")]
    AllIdentityTerm,
    #[error("expected {expected} parameters, found {found}")]
    ParamCountMismatch { expected: usize, found: usize },
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("invalid hamiltonian: {0}")]
    InvalidHamiltonian(String),
    #[error("cut has {found} entries, graph has {expected} vertices")]
    CutLengthMismatch { expected: usize, found: usize },
    #[error("{0} must be at least 1")]
    ZeroCount(&'static str),
}
