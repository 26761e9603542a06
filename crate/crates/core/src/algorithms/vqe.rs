use serde::Serialize;

use super::optimiser::{ClassicalOptimiser, OptimiserHistory};
use super::pauli::{encoding_unitary, Hamiltonian, PauliString};
use super::AlgorithmError;
use crate::circuit::Circuit;
use crate::device::{apply_circuit, execute, measure, new_qubits, Backend};
use crate::scalar::Scalar;
use crate::simulator::RandomSource;

/// Hardware-efficient ansatz with `2·n·depth` angles.
///
/// Layer `l` applies, on each wire `w`, `P(φ) H P(θ) H` in time order with
/// `θ = params[2(l·n + w)]`, `φ = params[2(l·n + w) + 1]`, followed by a CNOT
/// chain `(0,1), (1,2), …`.
pub fn ansatz<T: Scalar>(n: usize, depth: usize, params: &[T]) -> Result<Circuit<T>, AlgorithmError> {
    let expected = 2 * n * depth;
    if params.len() != expected {
        return Err(AlgorithmError::ParamCountMismatch {
            expected,
            found: params.len(),
        });
    }
    let mut c = Circuit::identity(n);
    for l in 0..depth {
        for w in 0..n {
            let i = 2 * (l * n + w);
            c = c.p(params[i + 1], w)?.h(w)?.p(params[i], w)?.h(w)?;
        }
        for w in 1..n {
            c = c.cnot(w - 1, w)?;
        }
    }
    Ok(c)
}

/// Sample estimate of `⟨ψ|term|ψ⟩` with `ψ = ansatz|0…0⟩`, from
/// `n_samples` independent executions.
pub fn compute_energy_pauli<T: Scalar>(
    backend: &mut dyn Backend<T>,
    ansatz: &Circuit<T>,
    term: &PauliString,
    n_samples: usize,
) -> Result<T, AlgorithmError> {
    if n_samples == 0 {
        return Err(AlgorithmError::ZeroCount("samples"));
    }
    if term.len() != ansatz.arity() {
        return Err(AlgorithmError::InvalidHamiltonian(format!(
            "term {term} has {} qubits, ansatz has {}",
            term.len(),
            ansatz.arity()
        )));
    }
    let encode = encoding_unitary(term)?;
    let first = term.first_active().expect("non-identity");
    let mut zeros = 0usize;
    for _ in 0..n_samples {
        let (prep, enc) = (ansatz.clone(), encode.clone());
        let program = new_qubits(ansatz.arity())
            .and_then(move |qs| apply_circuit(qs, prep))
            .and_then(move |qs| apply_circuit(qs, enc))
            .and_then(measure);
        if !execute(backend, program)?[first] {
            zeros += 1;
        }
    }
    let ones = n_samples - zeros;
    Ok((T::lit(zeros as f64) - T::lit(ones as f64)) / T::lit(n_samples as f64))
}

/// `Σᵢ αᵢ ⟨Hᵢ⟩`. Identity terms contribute `αᵢ` without touching the device.
pub fn compute_energy<T: Scalar>(
    backend: &mut dyn Backend<T>,
    ansatz: &Circuit<T>,
    hamiltonian: &Hamiltonian<T>,
    n_samples: usize,
) -> Result<T, AlgorithmError> {
    let mut total = T::zero();
    for (alpha, term) in hamiltonian.terms() {
        let e = if term.is_identity() {
            T::one()
        } else {
            compute_energy_pauli(backend, ansatz, term, n_samples)?
        };
        total += *alpha * e;
    }
    Ok(total)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VqeResult<T = f64> {
    pub best_energy: T,
    pub best_params: Vec<T>,
    pub history: OptimiserHistory<Vec<T>, T>,
}

/// `k` rounds of propose → estimate energy; keeps the lowest estimate
/// (first occurrence on ties).
pub fn vqe<T: Scalar>(
    backend: &mut dyn Backend<T>,
    hamiltonian: &Hamiltonian<T>,
    depth: usize,
    k: usize,
    n_samples: usize,
    optimiser: &dyn ClassicalOptimiser<Vec<T>, T>,
    random: &mut dyn RandomSource,
) -> Result<VqeResult<T>, AlgorithmError> {
    if k == 0 {
        return Err(AlgorithmError::ZeroCount("iterations"));
    }
    let n = hamiltonian.qubits();
    let mut history = OptimiserHistory::new();
    let mut best: Option<(T, Vec<T>)> = None;
    for _ in 0..k {
        let params = optimiser.propose(&history, random);
        let circuit = ansatz(n, depth, &params)?;
        let energy = compute_energy(backend, &circuit, hamiltonian, n_samples)?;
        if best.as_ref().is_none_or(|(b, _)| energy < *b) {
            best = Some((energy, params.clone()));
        }
        history.push(params, energy);
    }
    let (best_energy, best_params) = best.expect("k >= 1 rounds recorded");
    Ok(VqeResult {
        best_energy,
        best_params,
        history,
    })
}
