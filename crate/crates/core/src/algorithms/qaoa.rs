use serde::Serialize;

use super::maxcut::{best_cut, Cut, Graph};
use super::optimiser::{ClassicalOptimiser, OptimiserHistory};
use super::AlgorithmError;
use crate::circuit::Circuit;
use crate::device::{apply_circuit, execute, measure, new_qubits, Backend};
use crate::scalar::Scalar;
use crate::simulator::RandomSource;

/// Multiplier on `γ` in the edge gadget `CNOT · P(c·γ) · CNOT`.
///
/// With `c = −2` the cost layer multiplies `|x⟩` by `e^{−2iγ·cut(x)}`.
pub const EDGE_PHASE_SCALE: f64 = -2.0;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct QaoaParams<T = f64> {
    pub betas: Vec<T>,
    pub gammas: Vec<T>,
}

/// Uniform superposition followed by `p` alternating cost and mixer layers.
///
/// Cost layer for `γ`: per edge `(u, v)`, `CNOT(u,v) · P(−2γ) on v · CNOT(u,v)`.
/// Mixer layer for `β`: per wire, `H · P(2β) · H`.
pub fn qaoa_unitary<T: Scalar>(
    betas: &[T],
    gammas: &[T],
    graph: &Graph,
) -> Result<Circuit<T>, AlgorithmError> {
    if betas.len() != gammas.len() {
        return Err(AlgorithmError::ParamCountMismatch {
            expected: betas.len(),
            found: gammas.len(),
        });
    }
    let n = graph.vertex_count();
    let mut c = Circuit::identity(n);
    for w in 0..n {
        c = c.h(w)?;
    }
    for (&beta, &gamma) in betas.iter().zip(gammas) {
        c = cost_layer(c, gamma, graph)?;
        for w in 0..n {
            c = c.h(w)?.p(T::lit(2.0) * beta, w)?.h(w)?;
        }
    }
    Ok(c)
}

pub(crate) fn cost_layer<T: Scalar>(
    mut c: Circuit<T>,
    gamma: T,
    graph: &Graph,
) -> Result<Circuit<T>, AlgorithmError> {
    let angle = T::lit(EDGE_PHASE_SCALE) * gamma;
    for &(u, v) in graph.edges() {
        c = c.cnot(u, v)?.p(angle, v)?.cnot(u, v)?;
    }
    Ok(c)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct QaoaResult<T = f64> {
    pub cut: Cut,
    pub value: usize,
    pub history: OptimiserHistory<QaoaParams<T>, Cut>,
}

/// `k` rounds of propose → build circuit → sample one cut; returns the best
/// sampled cut.
pub fn qaoa<T: Scalar>(
    backend: &mut dyn Backend<T>,
    k: usize,
    graph: &Graph,
    optimiser: &dyn ClassicalOptimiser<QaoaParams<T>, Cut>,
    random: &mut dyn RandomSource,
) -> Result<QaoaResult<T>, AlgorithmError> {
    if k == 0 {
        return Err(AlgorithmError::ZeroCount("iterations"));
    }
    let n = graph.vertex_count();
    let mut history = OptimiserHistory::new();
    for _ in 0..k {
        let params = optimiser.propose(&history, random);
        let circuit = qaoa_unitary(&params.betas, &params.gammas, graph)?;
        let program = new_qubits(n)
            .and_then(move |qs| apply_circuit(qs, circuit))
            .and_then(measure);
        let bits = execute(backend, program)?;
        history.push(params, Cut(bits));
    }
    let (cut, value) = best_cut(graph, history.entries().iter().map(|e| &e.observed))?
        .expect("k >= 1 rounds recorded");
    Ok(QaoaResult {
        cut,
        value,
        history,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn depth_zero_is_hadamard_layer() {
        let g = Graph::complete(3);
        let c = qaoa_unitary::<f64>(&[], &[], &g).unwrap();
        assert_eq!(c.gate_counts().h, 3);
        assert_eq!(c.len(), 3);
        assert_eq!(c.depth(), 1);
    }

    #[test]
    fn mismatched_params_rejected() {
        let g = Graph::complete(2);
        assert!(qaoa_unitary::<f64>(&[0.1], &[], &g).is_err());
    }

    #[test]
    fn zero_gamma_cost_layer_is_identity() {
        let g = Graph::new(2, [(0, 1)]).unwrap();
        let c = cost_layer(Circuit::<f64>::identity(2), 0.0, &g).unwrap();
        assert!(c.matrix().unwrap().max_abs_diff(&crate::circuit::UnitaryMatrix::identity(4)) < 1e-12);
    }
}
