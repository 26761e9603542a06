use std::f64::consts::{FRAC_1_SQRT_2, PI};

use num_complex::Complex;

use super::*;

type C64 = Circuit<f64>;

fn c(re: f64, im: f64) -> Complex<f64> {
    Complex::new(re, im)
}

fn basis(n: usize, i: usize) -> Vec<Complex<f64>> {
    let mut v = vec![c(0.0, 0.0); 1 << n];
    v[i] = c(1.0, 0.0);
    v
}

fn close(a: &[Complex<f64>], b: &[Complex<f64>]) -> bool {
    a.iter().zip(b).all(|(x, y)| (x - y).norm() < 1e-12)
}

fn bell() -> C64 {
    C64::identity(2).h(0).unwrap().cnot(0, 1).unwrap()
}

#[test]
fn identity_matrices() {
    let m0 = C64::identity(0).matrix().unwrap();
    assert_eq!(m0.dim(), 1);
    assert_eq!(m0.get(0, 0), c(1.0, 0.0));
    assert_eq!(C64::identity(1).matrix().unwrap(), UnitaryMatrix::identity(2));
    assert_eq!(C64::identity(2).matrix().unwrap(), UnitaryMatrix::identity(4));
}

#[test]
fn hadamard_action() {
    let m = C64::identity(1).h(0).unwrap().matrix().unwrap();
    let s = FRAC_1_SQRT_2;
    assert!(close(&m.apply(&basis(1, 0)), &[c(s, 0.0), c(s, 0.0)]));
    assert!(close(&m.apply(&basis(1, 1)), &[c(s, 0.0), c(-s, 0.0)]));
    assert_eq!(
        C64::identity(1).h(1),
        Err(CircuitError::WireOutOfRange { wire: 1, arity: 1 })
    );
}

#[test]
fn phase_action() {
    let z = C64::identity(1).p(PI, 0).unwrap().matrix().unwrap();
    assert!(close(&z.apply(&basis(1, 1)), &[c(0.0, 0.0), c(-1.0, 0.0)]));
    let t = C64::identity(1).p(PI / 4.0, 0).unwrap().matrix().unwrap();
    assert!((t.get(1, 1) - c(FRAC_1_SQRT_2, FRAC_1_SQRT_2)).norm() < 1e-12);
    let id = C64::identity(1).p(0.0, 0).unwrap().matrix().unwrap();
    assert!(id.max_abs_diff(&UnitaryMatrix::identity(2)) < 1e-15);
}

#[test]
fn cnot_action() {
    let m = C64::identity(2).cnot(0, 1).unwrap().matrix().unwrap();
    assert!(close(&m.apply(&basis(2, 0b10)), &basis(2, 0b11)));
    assert!(close(&m.apply(&basis(2, 0b01)), &basis(2, 0b01)));
    assert_eq!(
        C64::identity(2).cnot(1, 1),
        Err(CircuitError::ControlEqualsTarget { wire: 1 })
    );
    assert_eq!(
        C64::identity(2).cnot(0, 2),
        Err(CircuitError::WireOutOfRange { wire: 2, arity: 2 })
    );
}

#[test]
fn compose_order_and_errors() {
    let h = C64::identity(1).h(0).unwrap();
    let hh = h.compose(&h).unwrap();
    assert!(hh.matrix().unwrap().max_abs_diff(&UnitaryMatrix::identity(2)) < 1e-9);

    let cnot = C64::identity(2).cnot(0, 1).unwrap();
    let bell2 = cnot.compose(&h.tensor(&C64::identity(1))).unwrap();
    assert_eq!(bell2, bell());

    assert_eq!(
        h.compose(&cnot),
        Err(CircuitError::ArityMismatch { expected: 1, found: 2 })
    );
}

#[test]
fn bell_preparation() {
    let m = bell().matrix().unwrap();
    let s = FRAC_1_SQRT_2;
    let out = m.apply(&basis(2, 0));
    assert!(close(&out, &[c(s, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(s, 0.0)]));
}

#[test]
fn tensor_shifts_second_operand() {
    let h = C64::identity(1).h(0).unwrap();
    let hh = h.tensor(&h);
    assert_eq!(hh.gates(), &[Gate::H(0), Gate::H(1)]);
    assert_eq!(C64::identity(0).tensor(&h), h);
}

#[test]
fn apply_table_rows_structure() {
    let u = C64::identity(1)
        .h(0)
        .unwrap()
        .tensor(&C64::identity(1))
        .tensor(&C64::identity(1).p(PI, 0).unwrap());
    let r1 = u.apply(&bell(), &[0, 1]).unwrap();
    assert_eq!(
        &r1.gates()[2..],
        &[Gate::H(0), Gate::Cnot { control: 0, target: 1 }]
    );
    let r3 = u.apply(&bell(), &[2, 0]).unwrap();
    assert_eq!(
        &r3.gates()[2..],
        &[Gate::H(2), Gate::Cnot { control: 2, target: 0 }]
    );
}

#[test]
fn apply_validation() {
    let u = C64::identity(3);
    assert_eq!(
        u.apply(&bell(), &[0]),
        Err(CircuitError::ArityMismatch { expected: 2, found: 1 })
    );
    assert_eq!(
        u.apply(&bell(), &[0, 3]),
        Err(CircuitError::WireOutOfRange { wire: 3, arity: 3 })
    );
    assert_eq!(
        u.apply(&bell(), &[1, 1]),
        Err(CircuitError::DuplicateWire { wire: 1 })
    );
}

#[test]
fn adjoint_inverts_phases_and_order() {
    let circ = bell().p(0.3, 1).unwrap();
    let adj = circ.adjoint();
    assert_eq!(
        adj.gates(),
        &[
            Gate::P(-0.3, 1),
            Gate::Cnot { control: 0, target: 1 },
            Gate::H(0)
        ]
    );
    assert_eq!(adj.adjoint(), circ);
}

#[test]
fn controlled_identity_is_identity() {
    let ci = C64::identity(1).controlled();
    assert_eq!(ci.arity(), 2);
    assert!(ci.matrix().unwrap().max_abs_diff(&UnitaryMatrix::identity(4)) < 1e-9);
}

#[test]
fn controlled_phase_is_diagonal() {
    let alpha = 0.77;
    let m = C64::identity(1).p(alpha, 0).unwrap().controlled().matrix().unwrap();
    let mut expected = UnitaryMatrix::identity(4);
    expected.set(3, 3, Complex::from_polar(1.0, alpha));
    assert!(m.max_abs_diff(&expected) < 1e-9);
}

#[test]
fn controlled_x_is_cnot() {
    let x = C64::identity(1).h(0).unwrap().p(PI, 0).unwrap().h(0).unwrap();
    let cx = x.controlled().matrix().unwrap();
    let cnot = C64::identity(2).cnot(0, 1).unwrap().matrix().unwrap();
    assert!(cx.max_abs_diff(&cnot) < 1e-9);
}

#[test]
fn optimise_examples() {
    let hh = C64::identity(1).h(0).unwrap().h(0).unwrap();
    assert_eq!(hh.optimise(), C64::identity(1));

    let pp = C64::identity(1).p(0.3, 0).unwrap().p(0.4, 0).unwrap();
    let merged = pp.optimise();
    assert_eq!(merged.len(), 1);
    match merged.gates()[0] {
        Gate::P(a, 0) => assert!((a - 0.7).abs() < 1e-15),
        g => panic!("unexpected {g:?}"),
    }

    assert_eq!(bell().optimise(), bell());
}

#[test]
fn depth_and_counts() {
    assert_eq!(C64::identity(5).depth(), 0);
    assert_eq!(bell().depth(), 2);
    assert_eq!(
        bell().gate_counts(),
        GateCounts {
            h: 1,
            p: 0,
            cnot: 1
        }
    );
    let h = C64::identity(1).h(0).unwrap();
    assert_eq!(h.tensor(&h).depth(), 1);
}

#[test]
fn draw_rows() {
    assert_eq!(C64::identity(2).draw(), "q0: -\nq1: -\n");
    let d = C64::identity(3).h(0).unwrap().cnot(0, 2).unwrap().draw();
    let rows: Vec<&str> = d.lines().collect();
    assert_eq!(rows, ["q0: -H-@-", "q1: ---|-", "q2: ---X-"]);
}

#[test]
fn qasm_export_bell() {
    let text = bell().to_qasm();
    assert_eq!(
        text,
        "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[2];\nh q[0];\ncx q[0],q[1];\n"
    );
    assert_eq!(qasm::import::<f64>(&text).unwrap(), bell());
}

#[test]
fn qasm_export_phase_pi() {
    let text = C64::identity(1).p(PI, 0).unwrap().to_qasm();
    assert!(text.ends_with("u1(pi) q[0];\n"));
}

#[test]
fn matrix_arity_guard() {
    assert_eq!(
        C64::identity(13).matrix(),
        Err(CircuitError::ArityTooLarge { arity: 13, max: 12 })
    );
}

#[test]
fn f32_circuits_work() {
    let m = Circuit::<f32>::identity(2)
        .h(0)
        .unwrap()
        .cnot(0, 1)
        .unwrap()
        .matrix()
        .unwrap();
    assert!(m.is_unitary(1e-6));
}
