//! Linear-typed quantum programming over a small universal gate set.
//!
//! - [`circuit`]: unitary circuits as values, with composition, tensor,
//!   adjoint, control and a peephole optimiser.
//! - [`stdcircuits`]: standard gates and the quantum Fourier transform.
//! - [`device`]: single-use qubit handles and monadic programs run against a
//!   [`Backend`].
//! - [`simulator`]: exact state-vector backend.
//! - [`algorithms`]: coin, repeat-until-success, VQE and QAOA.
//!
//! Every numeric type is generic over a [`Scalar`] (`f32` or `f64`); the
//! aliases below fix the precision.

pub mod algorithms;
pub mod circuit;
pub mod device;
mod scalar;
pub mod simulator;
pub mod stdcircuits;

pub use num_complex::Complex;
pub use scalar::Scalar;

pub use circuit::{Circuit, CircuitError, Gate, UnitaryMatrix};
pub use device::{execute, execute_traced, Backend, DeviceError, QuantumProgram, QubitHandle};
pub use simulator::{QuantumState, RandomSource, SeededRandom, Simulator};

pub type Circuit64 = Circuit<f64>;
pub type Circuit32 = Circuit<f32>;
pub type Gate64 = Gate<f64>;
pub type Gate32 = Gate<f32>;
pub type UnitaryMatrix64 = UnitaryMatrix<f64>;
pub type UnitaryMatrix32 = UnitaryMatrix<f32>;
pub type QuantumState64 = QuantumState<f64>;
pub type QuantumState32 = QuantumState<f32>;
pub type Simulator64 = Simulator<f64>;
pub type Simulator32 = Simulator<f32>;
pub type Hamiltonian64 = algorithms::Hamiltonian<f64>;
pub type Hamiltonian32 = algorithms::Hamiltonian<f32>;
