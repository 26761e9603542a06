//! Algebraic unitary circuits over the gate set {H, P(α), CNOT}.
//!
//! A [`Circuit`] is an ordered list of gate applications on a fixed number of
//! wires. Every constructor validates its wire arguments, so a `Circuit` value
//! never holds an out-of-range wire or a CNOT whose control equals its target.
//!
//! Basis ordering: wire 0 is the most significant bit of a basis-state index,
//! so `|10⟩` is index 2.

mod analysis;
mod matrix;
mod optimise;
pub mod qasm;

use std::fmt;

use thiserror::Error;

use crate::scalar::Scalar;

pub use analysis::GateCounts;
pub use matrix::{UnitaryMatrix, MAX_MATRIX_ARITY};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CircuitError {
    #[error("wire {wire} out of range for arity {arity}")]
    WireOutOfRange { wire: usize, arity: usize },
    #[error("control and target are the same wire ({wire})")]
    ControlEqualsTarget { wire: usize },
    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("wire {wire} listed more than once")]
    DuplicateWire { wire: usize },
    #[error("arity {arity} exceeds the dense-matrix limit of {max}")]
    ArityTooLarge { arity: usize, max: usize },
}

/// One atomic gate application.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Gate<T = f64> {
    H(usize),
    /// `diag(1, e^{iα})` on one wire.
    P(T, usize),
    Cnot { control: usize, target: usize },
}

impl<T: Scalar> Gate<T> {
    /// Wires touched by the gate, control first for CNOT.
    pub fn wires(&self) -> GateWires {
        match *self {
            Gate::H(w) | Gate::P(_, w) => GateWires::One(w),
            Gate::Cnot { control, target } => GateWires::Two(control, target),
        }
    }

    /// The inverse gate.
    pub fn inverse(&self) -> Self {
        match *self {
            Gate::P(a, w) => Gate::P(-a, w),
            g => g,
        }
    }

    /// Rewrites wire indices through `f`.
    pub(crate) fn remap(&self, f: impl Fn(usize) -> usize) -> Self {
        match *self {
            Gate::H(w) => Gate::H(f(w)),
            Gate::P(a, w) => Gate::P(a, f(w)),
            Gate::Cnot { control, target } => Gate::Cnot {
                control: f(control),
                target: f(target),
            },
        }
    }

    fn validate(&self, arity: usize) -> Result<(), CircuitError> {
        let check = |wire: usize| {
            if wire < arity {
                Ok(())
            } else {
                Err(CircuitError::WireOutOfRange { wire, arity })
            }
        };
        match *self {
            Gate::H(w) | Gate::P(_, w) => check(w),
            Gate::Cnot { control, target } => {
                check(control)?;
                check(target)?;
                if control == target {
                    return Err(CircuitError::ControlEqualsTarget { wire: control });
                }
                Ok(())
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GateWires {
    One(usize),
    Two(usize, usize),
}

impl GateWires {
    pub fn contains(&self, wire: usize) -> bool {
        match *self {
            GateWires::One(a) => a == wire,
            GateWires::Two(a, b) => a == wire || b == wire,
        }
    }

    pub fn as_slice(&self) -> ArrayWires {
        match *self {
            GateWires::One(a) => ArrayWires { buf: [a, 0], len: 1 },
            GateWires::Two(a, b) => ArrayWires { buf: [a, b], len: 2 },
        }
    }
}

/// Small inline wire list returned by [`GateWires::as_slice`].
#[derive(Debug, Clone, Copy)]
pub struct ArrayWires {
    buf: [usize; 2],
    len: usize,
}

impl std::ops::Deref for ArrayWires {
    type Target = [usize];
    fn deref(&self) -> &[usize] {
        &self.buf[..self.len]
    }
}

/// An `arity`-wire unitary circuit: gates run in list order.
#[derive(Debug, Clone, PartialEq)]
pub struct Circuit<T = f64> {
    arity: usize,
    gates: Vec<Gate<T>>,
}

impl<T: Scalar> Circuit<T> {
    /// The empty circuit on `arity` wires.
    pub fn identity(arity: usize) -> Self {
        Self {
            arity,
            gates: Vec::new(),
        }
    }

    /// Builds a circuit from a gate list, validating every gate.
    pub fn from_gates(
        arity: usize,
        gates: impl IntoIterator<Item = Gate<T>>,
    ) -> Result<Self, CircuitError> {
        let mut c = Self::identity(arity);
        for g in gates {
            c.push(g)?;
        }
        Ok(c)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn gates(&self) -> &[Gate<T>] {
        &self.gates
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    /// Appends a gate after validating it against the arity.
    pub fn push(&mut self, gate: Gate<T>) -> Result<(), CircuitError> {
        gate.validate(self.arity)?;
        self.gates.push(gate);
        Ok(())
    }

    /// Appends a Hadamard on `wire`.
    pub fn h(mut self, wire: usize) -> Result<Self, CircuitError> {
        self.push(Gate::H(wire))?;
        Ok(self)
    }

    /// Appends a phase gate `P(alpha)` on `wire`.
    pub fn p(mut self, alpha: T, wire: usize) -> Result<Self, CircuitError> {
        self.push(Gate::P(alpha, wire))?;
        Ok(self)
    }

    /// Appends a CNOT.
    pub fn cnot(mut self, control: usize, target: usize) -> Result<Self, CircuitError> {
        self.push(Gate::Cnot { control, target })?;
        Ok(self)
    }

    /// Sequential composition `self ∘ first`: `first` runs before `self`.
    pub fn compose(&self, first: &Circuit<T>) -> Result<Self, CircuitError> {
        if self.arity != first.arity {
            return Err(CircuitError::ArityMismatch {
                expected: self.arity,
                found: first.arity,
            });
        }
        let mut gates = Vec::with_capacity(self.len() + first.len());
        gates.extend_from_slice(&first.gates);
        gates.extend_from_slice(&self.gates);
        Ok(Self {
            arity: self.arity,
            gates,
        })
    }

    /// Parallel composition `self ⊗ lower`; `self` keeps the low-indexed wires.
    pub fn tensor(&self, other: &Circuit<T>) -> Self {
        let shift = self.arity;
        let mut gates = self.gates.clone();
        gates.extend(other.gates.iter().map(|g| g.remap(|w| w + shift)));
        Self {
            arity: self.arity + other.arity,
            gates,
        }
    }

    /// Runs `small` after `self`, with wire `k` of `small` placed on `wires[k]`.
    pub fn apply(&self, small: &Circuit<T>, wires: &[usize]) -> Result<Self, CircuitError> {
        if wires.len() != small.arity {
            return Err(CircuitError::ArityMismatch {
                expected: small.arity,
                found: wires.len(),
            });
        }
        for (i, &w) in wires.iter().enumerate() {
            if w >= self.arity {
                return Err(CircuitError::WireOutOfRange {
                    wire: w,
                    arity: self.arity,
                });
            }
            if wires[..i].contains(&w) {
                return Err(CircuitError::DuplicateWire { wire: w });
            }
        }
        let mut gates = self.gates.clone();
        gates.extend(small.gates.iter().map(|g| g.remap(|k| wires[k])));
        Ok(Self {
            arity: self.arity,
            gates,
        })
    }

    /// The inverse circuit: gates reversed, each gate inverted.
    pub fn adjoint(&self) -> Self {
        Self {
            arity: self.arity,
            gates: self.gates.iter().rev().map(Gate::inverse).collect(),
        }
    }

    /// Controlled version with the new control on wire 0 and the original
    /// wires shifted up by one.
    pub fn controlled(&self) -> Self {
        let mut gates = Vec::new();
        for g in &self.gates {
            match g.remap(|w| w + 1) {
                Gate::H(t) => controlled_h(&mut gates, 0, t),
                Gate::P(a, t) => controlled_p(&mut gates, a, 0, t),
                Gate::Cnot { control, target } => toffoli(&mut gates, 0, control, target),
            }
        }
        Self {
            arity: self.arity + 1,
            gates,
        }
    }

    /// Peephole optimisation to a fixpoint.
    ///
    /// Per wire: adjacent `H·H` and identical adjacent CNOTs cancel, adjacent
    /// phases merge, and phases that are a multiple of 2π are dropped. The
    /// matrix is unchanged up to rounding.
    pub fn optimise(&self) -> Self {
        optimise::optimise(self)
    }

    /// Length of the longest dependency chain; a CNOT occupies both wires.
    pub fn depth(&self) -> usize {
        analysis::depth(self)
    }

    pub fn gate_counts(&self) -> GateCounts {
        analysis::gate_counts(self)
    }

    /// Terminal drawing, one row per wire.
    pub fn draw(&self) -> String {
        analysis::draw(self)
    }

    /// OpenQASM 2.0 text.
    pub fn to_qasm(&self) -> String {
        qasm::export(self)
    }

    /// Dense reference matrix; limited to [`MAX_MATRIX_ARITY`] wires.
    pub fn matrix(&self) -> Result<UnitaryMatrix<T>, CircuitError> {
        matrix::matrix_of(self)
    }
}

// Controlled-H: S·H·T·CNOT·T†·H·S† on the target.
fn controlled_h<T: Scalar>(out: &mut Vec<Gate<T>>, c: usize, t: usize) {
    let pi = T::PI();
    let two = T::lit(2.0);
    let four = T::lit(4.0);
    out.extend([
        Gate::P(pi / two, t),
        Gate::H(t),
        Gate::P(pi / four, t),
        Gate::Cnot {
            control: c,
            target: t,
        },
        Gate::P(-pi / four, t),
        Gate::H(t),
        Gate::P(-pi / two, t),
    ]);
}

fn controlled_p<T: Scalar>(out: &mut Vec<Gate<T>>, alpha: T, c: usize, t: usize) {
    let half = alpha / T::lit(2.0);
    out.extend([
        Gate::P(half, c),
        Gate::P(half, t),
        Gate::Cnot {
            control: c,
            target: t,
        },
        Gate::P(-half, t),
        Gate::Cnot {
            control: c,
            target: t,
        },
    ]);
}

// Standard 6-CNOT Toffoli with controls a, b and target t.
fn toffoli<T: Scalar>(out: &mut Vec<Gate<T>>, a: usize, b: usize, t: usize) {
    let q = T::FRAC_PI_4();
    let cx = |control, target| Gate::Cnot { control, target };
    out.extend([
        Gate::H(t),
        cx(b, t),
        Gate::P(-q, t),
        cx(a, t),
        Gate::P(q, t),
        cx(b, t),
        Gate::P(-q, t),
        cx(a, t),
        Gate::P(q, b),
        Gate::P(q, t),
        Gate::H(t),
        cx(a, b),
        Gate::P(q, a),
        Gate::P(-q, b),
        cx(a, b),
    ]);
}

impl<T: Scalar> fmt::Display for Circuit<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.draw())
    }
}

#[cfg(test)]
mod tests;
