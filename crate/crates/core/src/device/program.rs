use super::{DeviceError, QubitHandle, Session};
use crate::circuit::Circuit;
use crate::scalar::Scalar;

type Step<'a, T, A> = Box<dyn FnOnce(&mut Session<'_, T>) -> Result<A, DeviceError> + Send + 'a>;

/// A deferred device computation yielding an `A`.
///
/// Sequencing with [`and_then`](Self::and_then) is associative and
/// [`pure`](Self::pure) is its unit; nothing happens until [`super::execute`].
pub struct QuantumProgram<'a, T: Scalar, A> {
    step: Step<'a, T, A>,
}

impl<'a, T: Scalar, A: 'a> QuantumProgram<'a, T, A> {
    /// Wraps a direct-style session function.
    pub fn new(
        f: impl FnOnce(&mut Session<'_, T>) -> Result<A, DeviceError> + Send + 'a,
    ) -> Self {
        Self { step: Box::new(f) }
    }

    pub fn pure(value: A) -> Self
    where
        A: Send,
    {
        Self::new(move |_| Ok(value))
    }

    pub fn and_then<B: 'a>(
        self,
        next: impl FnOnce(A) -> QuantumProgram<'a, T, B> + Send + 'a,
    ) -> QuantumProgram<'a, T, B> {
        QuantumProgram::new(move |s| {
            let a = (self.step)(s)?;
            next(a).run(s)
        })
    }

    pub fn map<B: 'a>(self, f: impl FnOnce(A) -> B + Send + 'a) -> QuantumProgram<'a, T, B> {
        QuantumProgram::new(move |s| (self.step)(s).map(f))
    }

    pub fn run(self, session: &mut Session<'_, T>) -> Result<A, DeviceError> {
        (self.step)(session)
    }
}

pub fn new_qubits<'a, T: Scalar>(count: usize) -> QuantumProgram<'a, T, Vec<QubitHandle>> {
    QuantumProgram::new(move |s| s.new_qubits(count))
}

pub fn new_qubit<'a, T: Scalar>() -> QuantumProgram<'a, T, QubitHandle> {
    QuantumProgram::new(|s| s.new_qubit())
}

pub fn apply_circuit<'a, T: Scalar>(
    handles: Vec<QubitHandle>,
    circuit: Circuit<T>,
) -> QuantumProgram<'a, T, Vec<QubitHandle>> {
    QuantumProgram::new(move |s| s.apply_circuit(handles, &circuit))
}

pub fn apply_h<'a, T: Scalar>(q: QubitHandle) -> QuantumProgram<'a, T, QubitHandle> {
    QuantumProgram::new(move |s| s.apply_h(q))
}

pub fn apply_p<'a, T: Scalar>(alpha: T, q: QubitHandle) -> QuantumProgram<'a, T, QubitHandle> {
    QuantumProgram::new(move |s| s.apply_p(alpha, q))
}

pub fn apply_cnot<'a, T: Scalar>(
    control: QubitHandle,
    target: QubitHandle,
) -> QuantumProgram<'a, T, (QubitHandle, QubitHandle)> {
    QuantumProgram::new(move |s| s.apply_cnot(control, target))
}

pub fn measure<'a, T: Scalar>(handles: Vec<QubitHandle>) -> QuantumProgram<'a, T, Vec<bool>> {
    QuantumProgram::new(move |s| s.measure(handles))
}

pub fn measure_qubit<'a, T: Scalar>(q: QubitHandle) -> QuantumProgram<'a, T, bool> {
    QuantumProgram::new(move |s| s.measure_qubit(q))
}
