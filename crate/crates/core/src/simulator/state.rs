use num_complex::Complex;

use crate::circuit::Gate;
use crate::scalar::{frac_1_sqrt_2, phase, Scalar};

/// `2^n` amplitudes over `n` wires, wire 0 the most significant index bit.
#[derive(Debug, Clone, PartialEq)]
pub struct QuantumState<T = f64> {
    amplitudes: Vec<Complex<T>>,
    wires: usize,
}

impl<T: Scalar> Default for QuantumState<T> {
    fn default() -> Self {
        Self::new()
    }
}

impl<T: Scalar> QuantumState<T> {
    /// The zero-qubit state `[1]`.
    pub fn new() -> Self {
        Self {
            amplitudes: vec![Complex::new(T::one(), T::zero())],
            wires: 0,
        }
    }

    /// Wraps raw amplitudes; the length must be a power of two.
    pub fn from_amplitudes(amplitudes: Vec<Complex<T>>) -> Self {
        let len = amplitudes.len();
        assert!(len.is_power_of_two(), "amplitude count must be 2^n");
        Self {
            amplitudes,
            wires: len.trailing_zeros() as usize,
        }
    }

    pub fn wires(&self) -> usize {
        self.wires
    }

    pub fn amplitudes(&self) -> &[Complex<T>] {
        &self.amplitudes
    }

    pub fn norm_sqr(&self) -> T {
        self.amplitudes
            .iter()
            .fold(T::zero(), |acc, a| acc + a.norm_sqr())
    }

    fn mask(&self, wire: usize) -> usize {
        1 << (self.wires - 1 - wire)
    }

    /// `ψ ⊗ |0…0⟩`: `count` new wires appended as the least significant bits.
    pub fn extend_with_zeros(&mut self, count: usize) {
        if count == 0 {
            return;
        }
        let zero = Complex::new(T::zero(), T::zero());
        let mut next = vec![zero; self.amplitudes.len() << count];
        for (i, a) in self.amplitudes.iter().enumerate() {
            next[i << count] = *a;
        }
        self.amplitudes = next;
        self.wires += count;
    }

    /// Applies one gate in place, pairing amplitudes that differ on the
    /// gate's target wire.
    pub fn apply_gate(&mut self, gate: &Gate<T>) {
        match *gate {
            Gate::H(w) => {
                let m = self.mask(w);
                let s = frac_1_sqrt_2::<T>();
                for i in 0..self.amplitudes.len() {
                    if i & m == 0 {
                        let (a, b) = (self.amplitudes[i], self.amplitudes[i | m]);
                        self.amplitudes[i] = (a + b).scale(s);
                        self.amplitudes[i | m] = (a - b).scale(s);
                    }
                }
            }
            Gate::P(alpha, w) => {
                let m = self.mask(w);
                let e = phase(alpha);
                for (i, a) in self.amplitudes.iter_mut().enumerate() {
                    if i & m != 0 {
                        *a *= e;
                    }
                }
            }
            Gate::Cnot { control, target } => {
                let (cm, tm) = (self.mask(control), self.mask(target));
                for i in 0..self.amplitudes.len() {
                    if i & cm != 0 && i & tm == 0 {
                        self.amplitudes.swap(i, i | tm);
                    }
                }
            }
        }
    }

    /// Probability that `wire` reads 1.
    pub fn probability_one(&self, wire: usize) -> T {
        let m = self.mask(wire);
        self.amplitudes
            .iter()
            .enumerate()
            .filter(|(i, _)| i & m != 0)
            .fold(T::zero(), |acc, (_, a)| acc + a.norm_sqr())
    }

    /// Measures `wire` with the rule `bit = u < p₁`, collapses, renormalises
    /// and removes the wire from the state.
    pub fn measure_wire(&mut self, wire: usize, u: f64) -> bool {
        let p1 = self.probability_one(wire);
        let mut bit = u < p1.as_f64();
        // rounding can leave the chosen branch empty
        if bit && p1 == T::zero() {
            bit = false;
        } else if !bit && p1 >= T::one() {
            bit = true;
        }
        let p = if bit { p1 } else { T::one() - p1 };
        let m = self.mask(wire);
        let scale = T::one() / p.sqrt();
        let kept: Vec<Complex<T>> = self
            .amplitudes
            .iter()
            .enumerate()
            .filter(|(i, _)| (i & m != 0) == bit)
            .map(|(_, a)| a.scale(scale))
            .collect();
        // Ascending indices with one bit fixed stay ascending once that bit is dropped.
        debug_assert_eq!(kept.len(), self.amplitudes.len() / 2);
        self.amplitudes = kept;
        self.wires -= 1;
        bit
    }

    /// `[[re, im], …]` JSON dump.
    pub fn to_json(&self) -> String {
        let pairs: Vec<[f64; 2]> = self
            .amplitudes
            .iter()
            .map(|a| [a.re.as_f64(), a.im.as_f64()])
            .collect();
        serde_json::to_string(&pairs).expect("finite amplitudes serialise")
    }
}
