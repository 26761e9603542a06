//! The abstract quantum-device interface.
//!
//! Qubits are named by [`QubitHandle`]s: opaque, non-`Clone` tokens that every
//! device operation takes by value. Move semantics reject most reuse at
//! compile time; the [`Session`] additionally tracks which handles are live
//! so that reuse, duplication and dangling qubits are caught at run time on
//! every path.
//!
//! ```compile_fail
//! use qlin_core::device::{execute, QuantumProgram};
//! use qlin_core::simulator::Simulator;
//!
//! let mut sim = Simulator::<f64>::with_seed(1);
//! let _ = execute(&mut sim, QuantumProgram::new(|s| {
//!     let q = s.new_qubit()?;
//!     let _a = s.apply_h(q)?;
//!     let _b = s.apply_h(q)?; // `q` was moved by the first call
//!     Ok(())
//! }));
//! ```
//!
//! Programs are ordinary values ([`QuantumProgram`]); nothing touches the
//! device until [`execute`] runs one against a [`Backend`].

mod program;

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};

use thiserror::Error;

use crate::circuit::{Circuit, Gate};
use crate::scalar::Scalar;

pub use program::{
    apply_circuit, apply_cnot, apply_h, apply_p, measure, measure_qubit, new_qubit, new_qubits,
    QuantumProgram,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DeviceError {
    #[error("qubit handle used after it was consumed")]
    UseAfterConsume,
    #[error("the same qubit handle was passed twice to one operation")]
    DuplicateHandle,
    #[error("qubit handle does not belong to this execution")]
    ForeignHandle,
    #[error("{count} qubit(s) still live at the end of execution")]
    DanglingQubits { count: usize },
    #[error("circuit of arity {expected} applied to {found} handle(s)")]
    ArityMismatch { expected: usize, found: usize },
    #[error("requested {requested} qubits, backend limit is {limit}")]
    CapacityExceeded { requested: usize, limit: usize },
    #[error("repeat-until-success gave up after {limit} attempts")]
    RusIterationLimit { limit: usize },
    #[error("backend failure: {0}")]
    Backend(String),
}

/// Physical qubit name shared between a session and its backend.
///
/// Only sessions mint these; backends treat them as opaque keys.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QubitId(u64);

impl QubitId {
    pub(crate) fn new(raw: u64) -> Self {
        Self(raw)
    }
}

static NEXT_HANDLE: AtomicU64 = AtomicU64::new(0);

/// Single-use token naming one live qubit.
pub struct QubitHandle {
    id: u64,
}

impl QubitHandle {
    fn fresh() -> Self {
        Self {
            id: NEXT_HANDLE.fetch_add(1, Ordering::Relaxed),
        }
    }

    /// Handle id. Test-only.
    #[cfg(feature = "inspect")]
    pub fn inspect_id(&self) -> u64 {
        self.id
    }

    /// A second handle carrying the same id, for exercising the runtime
    /// linearity checks. Test-only.
    #[cfg(feature = "inspect")]
    pub fn forge_copy(&self) -> Self {
        Self { id: self.id }
    }
}

impl fmt::Debug for QubitHandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("QubitHandle(..)")
    }
}

/// One recorded device operation.
#[derive(Debug, Clone, PartialEq)]
pub enum DeviceOp<T = f64> {
    Alloc(QubitId),
    H(QubitId),
    P(T, QubitId),
    Cnot(QubitId, QubitId),
    Measure(QubitId, bool),
}

/// A concrete device. Sessions validate every argument before calling in,
/// so implementations may assume ids are live and distinct.
pub trait Backend<T: Scalar> {
    /// Called once at the start of every [`execute`]; must leave the device
    /// holding zero qubits.
    fn begin(&mut self);

    /// Adds one qubit in `|0⟩`.
    fn allocate(&mut self, qubit: QubitId) -> Result<(), DeviceError>;

    fn apply_h(&mut self, qubit: QubitId) -> Result<(), DeviceError>;

    fn apply_p(&mut self, alpha: T, qubit: QubitId) -> Result<(), DeviceError>;

    fn apply_cnot(&mut self, control: QubitId, target: QubitId) -> Result<(), DeviceError>;

    /// Measures and destroys one qubit.
    fn measure(&mut self, qubit: QubitId) -> Result<bool, DeviceError>;

    fn live_qubits(&self) -> usize;
}

/// Handle bookkeeping for one execution.
pub struct Session<'d, T: Scalar> {
    backend: &'d mut dyn Backend<T>,
    next_qubit: u64,
    live: HashMap<u64, QubitId>,
    seen: HashSet<u64>,
    issued: Vec<u64>,
    consumed: Vec<u64>,
    trace: Vec<DeviceOp<T>>,
}

impl<'d, T: Scalar> Session<'d, T> {
    fn new(backend: &'d mut dyn Backend<T>) -> Self {
        Self {
            backend,
            next_qubit: 0,
            live: HashMap::new(),
            seen: HashSet::new(),
            issued: Vec::new(),
            consumed: Vec::new(),
            trace: Vec::new(),
        }
    }

    fn issue(&mut self, qubit: QubitId) -> QubitHandle {
        let h = QubitHandle::fresh();
        self.live.insert(h.id, qubit);
        self.seen.insert(h.id);
        self.issued.push(h.id);
        h
    }

    /// Validates and consumes `handles`, returning their qubits in order.
    fn take(&mut self, handles: Vec<QubitHandle>) -> Result<Vec<QubitId>, DeviceError> {
        for (i, h) in handles.iter().enumerate() {
            if handles[..i].iter().any(|o| o.id == h.id) {
                return Err(DeviceError::DuplicateHandle);
            }
            if !self.live.contains_key(&h.id) {
                return Err(if self.seen.contains(&h.id) {
                    DeviceError::UseAfterConsume
                } else {
                    DeviceError::ForeignHandle
                });
            }
        }
        Ok(handles
            .into_iter()
            .map(|h| {
                self.consumed.push(h.id);
                self.live.remove(&h.id).expect("checked live")
            })
            .collect())
    }

    pub fn new_qubits(&mut self, count: usize) -> Result<Vec<QubitHandle>, DeviceError> {
        (0..count)
            .map(|_| {
                let qubit = QubitId(self.next_qubit);
                self.next_qubit += 1;
                self.backend.allocate(qubit)?;
                self.trace.push(DeviceOp::Alloc(qubit));
                Ok(self.issue(qubit))
            })
            .collect()
    }

    pub fn new_qubit(&mut self) -> Result<QubitHandle, DeviceError> {
        Ok(self.new_qubits(1)?.pop().expect("one qubit"))
    }

    fn gate(&mut self, gate: &Gate<T>, qubits: &[QubitId]) -> Result<(), DeviceError> {
        match *gate {
            Gate::H(w) => {
                self.backend.apply_h(qubits[w])?;
                self.trace.push(DeviceOp::H(qubits[w]));
            }
            Gate::P(a, w) => {
                self.backend.apply_p(a, qubits[w])?;
                self.trace.push(DeviceOp::P(a, qubits[w]));
            }
            Gate::Cnot { control, target } => {
                self.backend.apply_cnot(qubits[control], qubits[target])?;
                self.trace.push(DeviceOp::Cnot(qubits[control], qubits[target]));
            }
        }
        Ok(())
    }

    /// Applies `circuit` with its wire `k` on `handles[k]`; returns fresh
    /// handles for the same qubits in the same order.
    pub fn apply_circuit(
        &mut self,
        handles: Vec<QubitHandle>,
        circuit: &Circuit<T>,
    ) -> Result<Vec<QubitHandle>, DeviceError> {
        if circuit.arity() != handles.len() {
            return Err(DeviceError::ArityMismatch {
                expected: circuit.arity(),
                found: handles.len(),
            });
        }
        let qubits = self.take(handles)?;
        for g in circuit.gates() {
            self.gate(g, &qubits)?;
        }
        Ok(qubits.into_iter().map(|q| self.issue(q)).collect())
    }

    pub fn apply_h(&mut self, q: QubitHandle) -> Result<QubitHandle, DeviceError> {
        let qubits = self.take(vec![q])?;
        self.gate(&Gate::H(0), &qubits)?;
        Ok(self.issue(qubits[0]))
    }

    pub fn apply_p(&mut self, alpha: T, q: QubitHandle) -> Result<QubitHandle, DeviceError> {
        let qubits = self.take(vec![q])?;
        self.gate(&Gate::P(alpha, 0), &qubits)?;
        Ok(self.issue(qubits[0]))
    }

    pub fn apply_cnot(
        &mut self,
        control: QubitHandle,
        target: QubitHandle,
    ) -> Result<(QubitHandle, QubitHandle), DeviceError> {
        let qubits = self.take(vec![control, target])?;
        self.gate(&Gate::Cnot { control: 0, target: 1 }, &qubits)?;
        Ok((self.issue(qubits[0]), self.issue(qubits[1])))
    }

    /// Measures and destroys the qubits; bit `k` belongs to `handles[k]`.
    pub fn measure(&mut self, handles: Vec<QubitHandle>) -> Result<Vec<bool>, DeviceError> {
        let qubits = self.take(handles)?;
        qubits
            .into_iter()
            .map(|q| {
                let bit = self.backend.measure(q)?;
                self.trace.push(DeviceOp::Measure(q, bit));
                Ok(bit)
            })
            .collect()
    }

    pub fn measure_qubit(&mut self, q: QubitHandle) -> Result<bool, DeviceError> {
        Ok(self.measure(vec![q])?[0])
    }

    /// Number of handles currently live.
    pub fn live_handles(&self) -> usize {
        self.live.len()
    }
}

/// Outcome of [`execute_traced`].
#[derive(Debug, Clone)]
pub struct Execution<A, T = f64> {
    pub value: A,
    pub trace: Vec<DeviceOp<T>>,
    /// Handle ids in issue order. Test-only.
    #[cfg(feature = "inspect")]
    pub issued: Vec<u64>,
    /// Handle ids in consumption order. Test-only.
    #[cfg(feature = "inspect")]
    pub consumed: Vec<u64>,
}

/// Runs `program` from the empty device state and checks that it leaves no
/// qubit behind.
pub fn execute<T: Scalar, A>(
    backend: &mut dyn Backend<T>,
    program: QuantumProgram<'_, T, A>,
) -> Result<A, DeviceError> {
    execute_traced(backend, program).map(|e| e.value)
}

/// [`execute`], also returning the device-operation trace.
pub fn execute_traced<T: Scalar, A>(
    backend: &mut dyn Backend<T>,
    program: QuantumProgram<'_, T, A>,
) -> Result<Execution<A, T>, DeviceError> {
    backend.begin();
    let mut session = Session::new(backend);
    let value = program.run(&mut session)?;
    let count = session.live.len();
    if count > 0 {
        return Err(DeviceError::DanglingQubits { count });
    }
    debug_assert_eq!(session.backend.live_qubits(), 0);
    Ok(Execution {
        value,
        trace: session.trace,
        #[cfg(feature = "inspect")]
        issued: session.issued,
        #[cfg(feature = "inspect")]
        consumed: session.consumed,
    })
}

#[cfg(test)]
mod tests;
