//! Named circuits: standalone gates, Bell-basis preparation and the QFT.

use crate::circuit::Circuit;
use crate::scalar::Scalar;

pub fn h_gate<T: Scalar>() -> Circuit<T> {
    Circuit::identity(1).h(0).expect("wire 0 of 1")
}

pub fn p_gate<T: Scalar>(alpha: T) -> Circuit<T> {
    Circuit::identity(1).p(alpha, 0).expect("wire 0 of 1")
}

pub fn cnot_gate<T: Scalar>() -> Circuit<T> {
    Circuit::identity(2).cnot(0, 1).expect("wires 0,1 of 2")
}

/// `P(π/4)`
pub fn t_gate<T: Scalar>() -> Circuit<T> {
    p_gate(T::FRAC_PI_4())
}

/// `H` on wire 0, then `CNOT 0 → 1`: maps `|00⟩` to the Bell state.
pub fn to_bell_basis<T: Scalar>() -> Circuit<T> {
    cnot_gate().compose(&h_gate().tensor(&Circuit::identity(1))).expect("arity 2")
}

/// `R_m = P(2π / 2^m)`
pub fn rm<T: Scalar>(m: u32) -> Circuit<T> {
    p_gate(T::TAU() / T::lit(2.0).powi(m as i32))
}

/// Controlled `R_m`, control on wire 0.
pub fn c_rm<T: Scalar>(m: u32) -> Circuit<T> {
    rm::<T>(m).controlled()
}

/// First QFT stage on `n` wires: `H` on wire 0, then controlled `R_{j+1}` from
/// wire `j` onto wire 0 for `j = 1..n`.
pub fn qft_rec<T: Scalar>(n: usize) -> Circuit<T> {
    match n {
        0 => Circuit::identity(0),
        1 => h_gate(),
        _ => {
            let k = n - 2;
            let prev = qft_rec::<T>(k + 1).tensor(&Circuit::identity(1));
            // Control sits k+1 wires away from the target, hence R_{k+2}.
            prev.apply(&c_rm(n as u32), &[k + 1, 0])
                .expect("wires k+1 and 0 are distinct and in range")
        }
    }
}

/// Quantum Fourier transform on `n` wires, without the final wire reversal:
/// output qubit `j` carries the bit-reversed DFT component.
pub fn qft<T: Scalar>(n: usize) -> Circuit<T> {
    if n == 0 {
        return Circuit::identity(0);
    }
    let stage = qft_rec::<T>(n);
    let rest = Circuit::identity(1).tensor(&qft::<T>(n - 1));
    rest.compose(&stage).expect("both have arity n")
}
