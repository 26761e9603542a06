//! Peephole rewriting.
//!
//! Rules, applied between gates that are adjacent on every wire they touch:
//! `H·H → I`, `CNOT·CNOT → I` for identical pairs, `P(a)·P(b) → P(a+b)`,
//! and `P(0) → I` (angles taken modulo 2π).

use super::{Circuit, Gate};
use crate::scalar::Scalar;

pub(super) fn optimise<T: Scalar>(c: &Circuit<T>) -> Circuit<T> {
    let mut gates = c.gates.clone();
    loop {
        let next = pass(&gates, c.arity);
        if next.len() == gates.len() && next == gates {
            break;
        }
        gates = next;
    }
    Circuit {
        arity: c.arity,
        gates,
    }
}

fn is_zero_angle<T: Scalar>(a: T) -> bool {
    let tau = T::TAU();
    let r = a % tau;
    let r = if r < T::zero() { r + tau } else { r };
    let eps = T::epsilon() * T::lit(64.0);
    r <= eps || tau - r <= eps
}

/// One left-to-right sweep. Each wire keeps a stack of indices into `out`
/// of the live gates on it; a new gate only ever meets the stack tops.
fn pass<T: Scalar>(gates: &[Gate<T>], arity: usize) -> Vec<Gate<T>> {
    let mut out: Vec<Option<Gate<T>>> = Vec::with_capacity(gates.len());
    let mut stacks: Vec<Vec<usize>> = vec![Vec::new(); arity];

    for &g in gates {
        match g {
            Gate::H(w) => {
                if let Some(&top) = stacks[w].last() {
                    if matches!(out[top], Some(Gate::H(_))) {
                        out[top] = None;
                        stacks[w].pop();
                        continue;
                    }
                }
            }
            Gate::P(a, w) => {
                if is_zero_angle(a) {
                    continue;
                }
                if let Some(&top) = stacks[w].last() {
                    if let Some(Gate::P(b, _)) = out[top] {
                        let sum = a + b;
                        if is_zero_angle(sum) {
                            out[top] = None;
                            stacks[w].pop();
                        } else {
                            out[top] = Some(Gate::P(sum, w));
                        }
                        continue;
                    }
                }
            }
            Gate::Cnot { control, target } => {
                let (tc, tt) = (stacks[control].last(), stacks[target].last());
                if let (Some(&a), Some(&b)) = (tc, tt) {
                    if a == b && out[a] == Some(g) {
                        out[a] = None;
                        stacks[control].pop();
                        stacks[target].pop();
                        continue;
                    }
                }
            }
        }
        let idx = out.len();
        out.push(Some(g));
        for &w in g.wires().as_slice().iter() {
            stacks[w].push(idx);
        }
    }
    out.into_iter().flatten().collect()
}
