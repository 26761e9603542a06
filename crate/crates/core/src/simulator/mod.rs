//! Exact state-vector simulation backend.

mod random;
mod state;

use crate::circuit::{Circuit, Gate};
use crate::device::{Backend, DeviceError, QubitId};
use crate::scalar::Scalar;

pub use random::{FixedSequence, RandomSource, SeededRandom};
pub use state::QuantumState;

/// Default qubit limit: 2^24 amplitudes.
pub const DEFAULT_CAPACITY: usize = 24;

/// State-vector [`Backend`]. New qubits become the least significant wires;
/// measured qubits are contracted out of the state.
#[derive(Debug, Clone)]
pub struct Simulator<T = f64, R = SeededRandom> {
    state: QuantumState<T>,
    registry: Vec<QubitId>,
    random: R,
    capacity: usize,
    executions: usize,
}

impl<T: Scalar> Simulator<T, SeededRandom> {
    pub fn with_seed(seed: u64) -> Self {
        Self::new(SeededRandom::new(seed))
    }
}

impl<T: Scalar, R: RandomSource> Simulator<T, R> {
    pub fn new(random: R) -> Self {
        Self {
            state: QuantumState::new(),
            registry: Vec::new(),
            random,
            capacity: DEFAULT_CAPACITY,
            executions: 0,
        }
    }

    pub fn with_capacity(mut self, capacity: usize) -> Self {
        self.capacity = capacity;
        self
    }

    pub fn state(&self) -> &QuantumState<T> {
        &self.state
    }

    /// Number of completed or started executions on this backend.
    pub fn executions(&self) -> usize {
        self.executions
    }

    /// Runs `circuit` on fresh `|0…0⟩` qubits through the backend gate path
    /// and returns the final state vector, leaving the backend empty.
    /// Does not count as an execution.
    pub fn final_state(&mut self, circuit: &Circuit<T>) -> Result<QuantumState<T>, DeviceError> {
        self.reset();
        let qubits: Vec<QubitId> = (0..circuit.arity() as u64).map(QubitId::new).collect();
        for &q in &qubits {
            self.allocate(q)?;
        }
        for g in circuit.gates() {
            match *g {
                Gate::H(w) => self.apply_h(qubits[w])?,
                Gate::P(a, w) => self.apply_p(a, qubits[w])?,
                Gate::Cnot { control, target } => self.apply_cnot(qubits[control], qubits[target])?,
            }
        }
        let state = std::mem::take(&mut self.state);
        self.registry.clear();
        Ok(state)
    }

    fn reset(&mut self) {
        self.state = QuantumState::new();
        self.registry.clear();
    }

    fn wire(&self, qubit: QubitId) -> Result<usize, DeviceError> {
        self.registry
            .iter()
            .position(|&q| q == qubit)
            .ok_or_else(|| DeviceError::Backend(format!("unknown qubit {qubit:?}")))
    }
}

impl<T: Scalar, R: RandomSource> Backend<T> for Simulator<T, R> {
    fn begin(&mut self) {
        self.reset();
        self.executions += 1;
    }

    fn allocate(&mut self, qubit: QubitId) -> Result<(), DeviceError> {
        if self.registry.len() >= self.capacity {
            return Err(DeviceError::CapacityExceeded {
                requested: self.registry.len() + 1,
                limit: self.capacity,
            });
        }
        self.state.extend_with_zeros(1);
        self.registry.push(qubit);
        Ok(())
    }

    fn apply_h(&mut self, qubit: QubitId) -> Result<(), DeviceError> {
        let w = self.wire(qubit)?;
        self.state.apply_gate(&Gate::H(w));
        Ok(())
    }

    fn apply_p(&mut self, alpha: T, qubit: QubitId) -> Result<(), DeviceError> {
        let w = self.wire(qubit)?;
        self.state.apply_gate(&Gate::P(alpha, w));
        Ok(())
    }

    fn apply_cnot(&mut self, control: QubitId, target: QubitId) -> Result<(), DeviceError> {
        let (c, t) = (self.wire(control)?, self.wire(target)?);
        self.state.apply_gate(&Gate::Cnot { control: c, target: t });
        Ok(())
    }

    fn measure(&mut self, qubit: QubitId) -> Result<bool, DeviceError> {
        let w = self.wire(qubit)?;
        let u = self.random.next_uniform();
        let bit = self.state.measure_wire(w, u);
        self.registry.remove(w);
        Ok(bit)
    }

    fn live_qubits(&self) -> usize {
        self.registry.len()
    }
}
