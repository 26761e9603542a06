use super::AlgorithmError;
use crate::circuit::Circuit;
use crate::device::{
    apply_circuit, apply_h, execute, measure_qubit, new_qubit, Backend, DeviceError, QuantumProgram,
    QubitHandle,
};
use crate::scalar::Scalar;

/// Prepare `|0⟩`, apply `H`, measure.
pub fn coin_program<'a, T: Scalar>() -> QuantumProgram<'a, T, bool> {
    new_qubit().and_then(apply_h).and_then(measure_qubit)
}

/// One fair coin toss on `backend`.
pub fn coin<T: Scalar>(backend: &mut dyn Backend<T>) -> Result<bool, AlgorithmError> {
    Ok(execute(backend, coin_program())?)
}

/// Two-qubit `U′` with ancilla on wire 0: `H, T, CNOT, H, CNOT, T, H` on wire 0.
pub fn example_u_prime<T: Scalar>() -> Circuit<T> {
    let t = T::FRAC_PI_4();
    Circuit::identity(2)
        .h(0)
        .and_then(|c| c.p(t, 0))
        .and_then(|c| c.cnot(0, 1))
        .and_then(|c| c.h(0))
        .and_then(|c| c.cnot(0, 1))
        .and_then(|c| c.p(t, 0))
        .and_then(|c| c.h(0))
        .expect("wires 0 and 1 of a 2-wire circuit")
}

/// Repeat-until-success on `q`, returning the output qubit and the number of
/// attempts taken.
///
/// Each attempt allocates an ancilla, applies `u_prime` to `[ancilla, q]` and
/// measures the ancilla; outcome 1 applies `e†` to `q` and retries. `limit`
/// bounds the number of attempts.
pub fn rus_counted<'a, T: Scalar>(
    q: QubitHandle,
    u_prime: Circuit<T>,
    e: Circuit<T>,
    limit: Option<usize>,
) -> QuantumProgram<'a, T, (QubitHandle, usize)> {
    attempt(q, u_prime, e.adjoint(), 1, limit)
}

/// [`rus_counted`] without the attempt count and without a limit.
pub fn rus<'a, T: Scalar>(
    q: QubitHandle,
    u_prime: Circuit<T>,
    e: Circuit<T>,
) -> QuantumProgram<'a, T, QubitHandle> {
    rus_counted(q, u_prime, e, None).map(|(q, _)| q)
}

fn attempt<'a, T: Scalar>(
    q: QubitHandle,
    u_prime: Circuit<T>,
    e_adj: Circuit<T>,
    n: usize,
    limit: Option<usize>,
) -> QuantumProgram<'a, T, (QubitHandle, usize)> {
    if let Some(limit) = limit {
        if n > limit {
            return QuantumProgram::new(move |_| {
                let _abandoned = q;
                Err(DeviceError::RusIterationLimit { limit })
            });
        }
    }
    let step = u_prime.clone();
    new_qubit()
        .and_then(move |ancilla| apply_circuit(vec![ancilla, q], step))
        .and_then(move |mut pair| {
            let q = pair.pop().expect("two handles");
            let ancilla = pair.pop().expect("two handles");
            measure_qubit(ancilla).and_then(move |failed| {
                if failed {
                    apply_circuit(vec![q], e_adj.clone()).and_then(move |mut v| {
                        attempt(v.pop().expect("one handle"), u_prime, e_adj, n + 1, limit)
                    })
                } else {
                    QuantumProgram::pure((q, n))
                }
            })
        })
}
