use num_complex::Complex;

use super::{Circuit, CircuitError, Gate};
use crate::scalar::{frac_1_sqrt_2, phase, Scalar};

/// Largest arity [`Circuit::matrix`] will expand (a 4096×4096 matrix).
pub const MAX_MATRIX_ARITY: usize = 12;

/// Dense square complex matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct UnitaryMatrix<T = f64> {
    dim: usize,
    entries: Vec<Complex<T>>,
}

impl<T: Scalar> UnitaryMatrix<T> {
    pub fn identity(dim: usize) -> Self {
        let mut entries = vec![Complex::new(T::zero(), T::zero()); dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = Complex::new(T::one(), T::zero());
        }
        Self { dim, entries }
    }

    /// Builds a matrix from row-major entries. Panics if the length is not a square.
    pub fn from_rows(dim: usize, entries: Vec<Complex<T>>) -> Self {
        assert_eq!(entries.len(), dim * dim, "entry count must be dim²");
        Self { dim, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[Complex<T>] {
        &self.entries
    }

    pub fn get(&self, row: usize, col: usize) -> Complex<T> {
        self.entries[row * self.dim + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: Complex<T>) {
        self.entries[row * self.dim + col] = value;
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.dim, rhs.dim);
        let n = self.dim;
        let zero = Complex::new(T::zero(), T::zero());
        let mut out = vec![zero; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.entries[i * n + k];
                if a == zero {
                    continue;
                }
                for j in 0..n {
                    out[i * n + j] += a * rhs.entries[k * n + j];
                }
            }
        }
        Self {
            dim: n,
            entries: out,
        }
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let n = self.dim;
        let mut out = self.clone();
        for i in 0..n {
            for j in 0..n {
                out.entries[j * n + i] = self.entries[i * n + j].conj();
            }
        }
        out
    }

    /// Kronecker product `self ⊗ rhs`.
    pub fn kron(&self, rhs: &Self) -> Self {
        let (a, b) = (self.dim, rhs.dim);
        let n = a * b;
        let mut entries = vec![Complex::new(T::zero(), T::zero()); n * n];
        for i in 0..a {
            for j in 0..a {
                let s = self.entries[i * a + j];
                for k in 0..b {
                    for l in 0..b {
                        entries[(i * b + k) * n + (j * b + l)] = s * rhs.entries[k * b + l];
                    }
                }
            }
        }
        Self { dim: n, entries }
    }

    pub fn apply(&self, v: &[Complex<T>]) -> Vec<Complex<T>> {
        assert_eq!(v.len(), self.dim);
        let n = self.dim;
        (0..n)
            .map(|i| {
                self.entries[i * n..(i + 1) * n]
                    .iter()
                    .zip(v)
                    .fold(Complex::new(T::zero(), T::zero()), |acc, (m, x)| acc + m * x)
            })
            .collect()
    }

    /// Largest elementwise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &Self) -> T {
        assert_eq!(self.dim, other.dim);
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a - b).norm())
            .fold(T::zero(), T::max)
    }

    /// Max deviation of `U·U†` from the identity.
    pub fn unitarity_error(&self) -> T {
        self.mul(&self.adjoint())
            .max_abs_diff(&Self::identity(self.dim))
    }

    pub fn is_unitary(&self, tol: T) -> bool {
        self.unitarity_error() <= tol
    }

    /// Distance after removing the global phase: `other` is rotated so that its
    /// largest entry matches the phase of the corresponding entry of `self`.
    pub fn max_abs_diff_up_to_phase(&self, other: &Self) -> T {
        let pivot = self
            .entries
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.norm().partial_cmp(&b.1.norm()).unwrap())
            .map(|(i, _)| i)
            .unwrap_or(0);
        let (a, b) = (self.entries[pivot], other.entries[pivot]);
        if b.norm() == T::zero() {
            return self.max_abs_diff(other);
        }
        let rot = (a / b) / (a / b).norm();
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(x, y)| (x - y * rot).norm())
            .fold(T::zero(), T::max)
    }
}

/// 2×2 (or 4×4 for CNOT) local matrix of a gate, indexed by the local basis
/// formed from the gate's wires in [`Gate::wires`] order.
pub(crate) fn local_matrix<T: Scalar>(g: &Gate<T>) -> Vec<Complex<T>> {
    let z = Complex::new(T::zero(), T::zero());
    let o = Complex::new(T::one(), T::zero());
    match *g {
        Gate::H(_) => {
            let s = Complex::new(frac_1_sqrt_2(), T::zero());
            vec![s, s, s, -s]
        }
        Gate::P(a, _) => vec![o, z, z, phase(a)],
        Gate::Cnot { .. } => vec![
            o, z, z, z, //
            z, o, z, z, //
            z, z, z, o, //
            z, z, o, z,
        ],
    }
}

/// Left-multiplies `m` by the embedding of `g` into an `arity`-wire space.
///
/// Row `r` of the result mixes the rows of `m` that agree with `r` outside
/// the gate's wires, weighted by the gate's local matrix.
fn left_multiply<T: Scalar>(m: &mut UnitaryMatrix<T>, g: &Gate<T>, arity: usize) {
    let dim = m.dim;
    let wires = g.wires().as_slice();
    let k = wires.len();
    let local = local_matrix(g);
    let ldim = 1usize << k;
    let masks: Vec<usize> = wires.iter().map(|&w| 1usize << (arity - 1 - w)).collect();
    let all_mask: usize = masks.iter().sum();
    let sub = |idx: usize| -> usize {
        masks
            .iter()
            .fold(0usize, |acc, &mk| (acc << 1) | usize::from(idx & mk != 0))
    };
    let with_sub = |base: usize, s: usize| -> usize {
        masks.iter().enumerate().fold(base, |acc, (i, &mk)| {
            if (s >> (k - 1 - i)) & 1 == 1 {
                acc | mk
            } else {
                acc
            }
        })
    };
    let zero = Complex::new(T::zero(), T::zero());
    let mut out = vec![zero; dim * dim];
    for r in 0..dim {
        let base = r & !all_mask;
        let rs = sub(r);
        for cs in 0..ldim {
            let w = local[rs * ldim + cs];
            if w == zero {
                continue;
            }
            let c = with_sub(base, cs);
            for j in 0..dim {
                out[r * dim + j] += w * m.entries[c * dim + j];
            }
        }
    }
    m.entries = out;
}

pub(crate) fn matrix_of<T: Scalar>(c: &Circuit<T>) -> Result<UnitaryMatrix<T>, CircuitError> {
    if c.arity > MAX_MATRIX_ARITY {
        return Err(CircuitError::ArityTooLarge {
            arity: c.arity,
            max: MAX_MATRIX_ARITY,
        });
    }
    let mut m = UnitaryMatrix::identity(1 << c.arity);
    for g in &c.gates {
        left_multiply(&mut m, g, c.arity);
    }
    Ok(m)
}
