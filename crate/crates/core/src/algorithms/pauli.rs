use std::fmt;
use std::str::FromStr;

use super::AlgorithmError;
use crate::circuit::Circuit;
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PauliOp {
    I,
    X,
    Y,
    Z,
}

impl PauliOp {
    fn from_char(c: char) -> Option<Self> {
        Some(match c {
            'I' => PauliOp::I,
            'X' => PauliOp::X,
            'Y' => PauliOp::Y,
            'Z' => PauliOp::Z,
            _ => return None,
        })
    }

    fn as_char(self) -> char {
        match self {
            PauliOp::I => 'I',
            PauliOp::X => 'X',
            PauliOp::Y => 'Y',
            PauliOp::Z => 'Z',
        }
    }
}

/// Tensor product of Pauli operators, wire 0 first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PauliString(pub Vec<PauliOp>);

impl PauliString {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().all(|&p| p == PauliOp::I)
    }

    /// First wire carrying a non-identity operator.
    pub fn first_active(&self) -> Option<usize> {
        self.0.iter().position(|&p| p != PauliOp::I)
    }
}

impl FromStr for PauliString {
    type Err = AlgorithmError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.chars()
            .map(|c| {
                PauliOp::from_char(c).ok_or_else(|| {
                    AlgorithmError::InvalidHamiltonian(format!("unknown Pauli operator `{c}`"))
                })
            })
            .collect::<Result<Vec<_>, _>>()
            .map(PauliString)
    }
}

impl fmt::Display for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|p| write!(f, "{}", p.as_char()))
    }
}

/// `H = Σᵢ αᵢ Hᵢ` over Pauli strings of a common length.
#[derive(Debug, Clone, PartialEq)]
pub struct Hamiltonian<T = f64> {
    qubits: usize,
    terms: Vec<(T, PauliString)>,
}

impl<T: Scalar> Hamiltonian<T> {
    pub fn new(terms: Vec<(T, PauliString)>) -> Result<Self, AlgorithmError> {
        let qubits = terms
            .first()
            .map(|(_, s)| s.len())
            .ok_or_else(|| AlgorithmError::InvalidHamiltonian("no terms".into()))?;
        if qubits == 0 {
            return Err(AlgorithmError::InvalidHamiltonian("empty Pauli string".into()));
        }
        for (alpha, s) in &terms {
            if s.len() != qubits {
                return Err(AlgorithmError::InvalidHamiltonian(format!(
                    "term {s} has {} qubits, expected {qubits}",
                    s.len()
                )));
            }
            if !alpha.is_finite() {
                return Err(AlgorithmError::InvalidHamiltonian(format!(
                    "non-finite coefficient on {s}"
                )));
            }
        }
        Ok(Self { qubits, terms })
    }

    pub fn qubits(&self) -> usize {
        self.qubits
    }

    pub fn terms(&self) -> &[(T, PauliString)] {
        &self.terms
    }
}

/// Basis change plus parity cascade so that measuring the first active wire
/// gives `p₀ − p₁ = ⟨ψ|term|ψ⟩`.
///
/// X wires get `H`; Y wires get `P(−π/2)` then `H`; every other active wire
/// is then CNOT-ed onto the first active wire.
pub fn encoding_unitary<T: Scalar>(term: &PauliString) -> Result<Circuit<T>, AlgorithmError> {
    let first = term.first_active().ok_or(AlgorithmError::AllIdentityTerm)?;
    let mut c = Circuit::identity(term.len());
    for (w, &op) in term.0.iter().enumerate() {
        match op {
            PauliOp::X => c = c.h(w)?,
            PauliOp::Y => c = c.p(-T::FRAC_PI_2(), w)?.h(w)?,
            PauliOp::Z | PauliOp::I => {}
        }
    }
    for (w, &op) in term.0.iter().enumerate().skip(first + 1) {
        if op != PauliOp::I {
            c = c.cnot(w, first)?;
        }
    }
    Ok(c)
}
