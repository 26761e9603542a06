//! Brute-force reference semantics for tests.
//!
//! Every gate is expanded into a full 2^n × 2^n matrix by explicit Kronecker
//! products (single-wire gates) or an explicit basis permutation (CNOT), then
//! multiplied in. Independent of `Circuit::matrix` and of the simulator.

#![allow(dead_code)]

use qlin_core::circuit::{Circuit, Gate};
use qlin_core::Complex;

pub type C = Complex<f64>;
pub type Mat = Vec<Vec<C>>;

pub fn c(re: f64, im: f64) -> C {
    Complex::new(re, im)
}

pub fn eye(d: usize) -> Mat {
    (0..d)
        .map(|i| (0..d).map(|j| if i == j { c(1.0, 0.0) } else { c(0.0, 0.0) }).collect())
        .collect()
}

pub fn matmul(a: &Mat, b: &Mat) -> Mat {
    let n = a.len();
    let m = b[0].len();
    let k = b.len();
    (0..n)
        .map(|i| {
            (0..m)
                .map(|j| (0..k).fold(c(0.0, 0.0), |s, l| s + a[i][l] * b[l][j]))
                .collect()
        })
        .collect()
}

pub fn kron(a: &Mat, b: &Mat) -> Mat {
    let (ra, rb) = (a.len(), b.len());
    let mut out = vec![vec![c(0.0, 0.0); ra * rb]; ra * rb];
    for i in 0..ra {
        for j in 0..ra {
            for k in 0..rb {
                for l in 0..rb {
                    out[i * rb + k][j * rb + l] = a[i][j] * b[k][l];
                }
            }
        }
    }
    out
}

pub fn dagger(a: &Mat) -> Mat {
    let n = a.len();
    (0..n).map(|i| (0..n).map(|j| a[j][i].conj()).collect()).collect()
}

pub fn hadamard() -> Mat {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    vec![vec![c(s, 0.0), c(s, 0.0)], vec![c(s, 0.0), c(-s, 0.0)]]
}

pub fn phase_gate(a: f64) -> Mat {
    vec![vec![c(1.0, 0.0), c(0.0, 0.0)], vec![c(0.0, 0.0), C::from_polar(1.0, a)]]
}

/// `I ⊗ … ⊗ g ⊗ … ⊗ I` with `g` on `wire` (wire 0 leftmost).
pub fn embed_single(g: &Mat, wire: usize, n: usize) -> Mat {
    let id = eye(2);
    let mut m = vec![vec![c(1.0, 0.0)]];
    for w in 0..n {
        m = kron(&m, if w == wire { g } else { &id });
    }
    m
}

pub fn cnot_matrix(control: usize, target: usize, n: usize) -> Mat {
    permutation(1 << n, |i| {
        if (i >> (n - 1 - control)) & 1 == 1 {
            i ^ (1 << (n - 1 - target))
        } else {
            i
        }
    })
}

pub fn gate_matrix(g: &Gate<f64>, n: usize) -> Mat {
    match *g {
        Gate::H(w) => embed_single(&hadamard(), w, n),
        Gate::P(a, w) => embed_single(&phase_gate(a), w, n),
        Gate::Cnot { control, target } => cnot_matrix(control, target, n),
    }
}

pub fn circuit_matrix(circ: &Circuit<f64>) -> Mat {
    let n = circ.arity();
    circ.gates()
        .iter()
        .fold(eye(1 << n), |acc, g| matmul(&gate_matrix(g, n), &acc))
}

pub fn apply_mat(m: &Mat, v: &[C]) -> Vec<C> {
    m.iter()
        .map(|row| row.iter().zip(v).fold(c(0.0, 0.0), |s, (a, b)| s + a * b))
        .collect()
}

pub fn basis(n: usize, index: usize) -> Vec<C> {
    let mut v = vec![c(0.0, 0.0); 1 << n];
    v[index] = c(1.0, 0.0);
    v
}

pub fn max_diff(a: &Mat, b: &Mat) -> f64 {
    a.iter()
        .flatten()
        .zip(b.iter().flatten())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

pub fn max_diff_vec(a: &[C], b: &[C]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}

/// Matrix of a qlin `UnitaryMatrix` as nested rows.
pub fn rows(m: &qlin_core::circuit::UnitaryMatrix<f64>) -> Mat {
    let d = m.dim();
    (0..d).map(|i| (0..d).map(|j| m.get(i, j)).collect()).collect()
}

/// Permutation matrix `P` with `P|x⟩ = |perm(x)⟩`.
pub fn permutation(d: usize, perm: impl Fn(usize) -> usize) -> Mat {
    let mut m = vec![vec![c(0.0, 0.0); d]; d];
    for x in 0..d {
        m[perm(x)][x] = c(1.0, 0.0);
    }
    m
}

/// `(1/√d) ω^{jk}` with `ω = e^{2πi/d}`.
pub fn dft(d: usize) -> Mat {
    let s = 1.0 / (d as f64).sqrt();
    (0..d)
        .map(|j| {
            (0..d)
                .map(|k| C::from_polar(s, 2.0 * std::f64::consts::PI * ((j * k) % d) as f64 / d as f64))
                .collect()
        })
        .collect()
}

pub fn bit_reverse(x: usize, n: usize) -> usize {
    (0..n).fold(0, |acc, i| (acc << 1) | ((x >> i) & 1))
}

/// `⟨ψ|P|ψ⟩` for a Pauli string given as chars over {I,X,Y,Z}, wire 0 leftmost.
pub fn pauli_expectation(term: &str, psi: &[C]) -> f64 {
    let n = term.len();
    let mut m = vec![vec![c(1.0, 0.0)]];
    for ch in term.chars() {
        let p = match ch {
            'I' => eye(2),
            'X' => vec![vec![c(0.0, 0.0), c(1.0, 0.0)], vec![c(1.0, 0.0), c(0.0, 0.0)]],
            'Y' => vec![vec![c(0.0, 0.0), c(0.0, -1.0)], vec![c(0.0, 1.0), c(0.0, 0.0)]],
            'Z' => vec![vec![c(1.0, 0.0), c(0.0, 0.0)], vec![c(0.0, 0.0), c(-1.0, 0.0)]],
            _ => panic!("bad pauli {ch}"),
        };
        m = kron(&m, &p);
    }
    assert_eq!(m.len(), 1 << n);
    let mp = apply_mat(&m, psi);
    psi.iter().zip(&mp).fold(c(0.0, 0.0), |s, (a, b)| s + a.conj() * b).re
}

/// Random circuit generator shared by property-style tests.
pub fn random_circuit(rng: &mut impl rand::Rng, arity: usize, gates: usize) -> Circuit<f64> {
    let mut circ = Circuit::identity(arity);
    for _ in 0..gates {
        let kind = if arity >= 2 { rng.gen_range(0..3) } else { rng.gen_range(0..2) };
        let g = match kind {
            0 => Gate::H(rng.gen_range(0..arity)),
            1 => Gate::P(rng.gen_range(-std::f64::consts::PI..std::f64::consts::PI), rng.gen_range(0..arity)),
            _ => {
                let control = rng.gen_range(0..arity);
                let mut target = rng.gen_range(0..arity - 1);
                if target >= control {
                    target += 1;
                }
                Gate::Cnot { control, target }
            }
        };
        circ.push(g).unwrap();
    }
    circ
}
