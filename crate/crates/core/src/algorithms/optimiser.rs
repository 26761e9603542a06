use serde::Serialize;

use super::maxcut::Cut;
use super::qaoa::QaoaParams;
use crate::scalar::Scalar;
use crate::simulator::RandomSource;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HistoryEntry<P, O> {
    pub params: P,
    pub observed: O,
}

/// Append-only record of `(params, observation)` pairs from one run.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(transparent)]
pub struct OptimiserHistory<P, O> {
    entries: Vec<HistoryEntry<P, O>>,
}

impl<P, O> Default for OptimiserHistory<P, O> {
    fn default() -> Self {
        Self { entries: Vec::new() }
    }
}

impl<P, O> OptimiserHistory<P, O> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, params: P, observed: O) {
        self.entries.push(HistoryEntry { params, observed });
    }

    pub fn entries(&self) -> &[HistoryEntry<P, O>] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Proposes the next parameters from everything observed so far.
///
/// Implementations must be deterministic given `(history, random)`.
pub trait ClassicalOptimiser<P, O> {
    fn propose(&self, history: &OptimiserHistory<P, O>, random: &mut dyn RandomSource) -> P;
}

/// Uniform random QAOA angles: `β ∈ [0, π)`, `γ ∈ [0, 2π)`.
#[derive(Debug, Clone, Copy)]
pub struct QaoaRandomSearch {
    pub depth: usize,
}

impl<T: Scalar> ClassicalOptimiser<QaoaParams<T>, Cut> for QaoaRandomSearch {
    fn propose(
        &self,
        _history: &OptimiserHistory<QaoaParams<T>, Cut>,
        random: &mut dyn RandomSource,
    ) -> QaoaParams<T> {
        let betas = (0..self.depth)
            .map(|_| T::PI() * T::lit(random.next_uniform()))
            .collect();
        let gammas = (0..self.depth)
            .map(|_| T::TAU() * T::lit(random.next_uniform()))
            .collect();
        QaoaParams { betas, gammas }
    }
}

/// Uniform random ansatz angles in `[0, 2π)`.
#[derive(Debug, Clone, Copy)]
pub struct VqeRandomSearch {
    pub count: usize,
}

impl<T: Scalar> ClassicalOptimiser<Vec<T>, T> for VqeRandomSearch {
    fn propose(&self, _history: &OptimiserHistory<Vec<T>, T>, random: &mut dyn RandomSource) -> Vec<T> {
        (0..self.count)
            .map(|_| T::TAU() * T::lit(random.next_uniform()))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simulator::SeededRandom;

    #[test]
    fn empty_history_gives_right_shape() {
        let opt = QaoaRandomSearch { depth: 3 };
        let p: QaoaParams<f64> = opt.propose(&OptimiserHistory::new(), &mut SeededRandom::new(1));
        assert_eq!(p.betas.len(), 3);
        assert_eq!(p.gammas.len(), 3);
    }

    #[test]
    fn deterministic_under_seed() {
        let opt = QaoaRandomSearch { depth: 2 };
        let h = OptimiserHistory::new();
        let a: QaoaParams<f64> = opt.propose(&h, &mut SeededRandom::new(9));
        let b: QaoaParams<f64> = opt.propose(&h, &mut SeededRandom::new(9));
        assert_eq!(a, b);
    }

    #[test]
    fn beta_range() {
        let opt = QaoaRandomSearch { depth: 1 };
        let mut rng = SeededRandom::new(3);
        let h = OptimiserHistory::new();
        for _ in 0..1000 {
            let p: QaoaParams<f64> = opt.propose(&h, &mut rng);
            assert!((0.0..std::f64::consts::PI).contains(&p.betas[0]));
            assert!((0.0..std::f64::consts::TAU).contains(&p.gammas[0]));
        }
    }

    #[test]
    fn vqe_shape() {
        let opt = VqeRandomSearch { count: 4 };
        let p: Vec<f64> = opt.propose(&OptimiserHistory::new(), &mut SeededRandom::new(0));
        assert_eq!(p.len(), 4);
    }
}
