use super::*;
use crate::simulator::{FixedSequence, Simulator};

fn sim() -> Simulator<f64, FixedSequence> {
    Simulator::new(FixedSequence::new(vec![0.5; 64]))
}

fn trace<A>(p: QuantumProgram<'_, f64, A>) -> Vec<DeviceOp<f64>> {
    execute_traced(&mut sim(), p).unwrap().trace
}

fn bell<'a>() -> QuantumProgram<'a, f64, Vec<bool>> {
    new_qubits(2)
        .and_then(|mut qs| {
            let b = qs.pop().unwrap();
            let a = qs.pop().unwrap();
            apply_h(a).and_then(move |a| apply_cnot(a, b))
        })
        .and_then(|(a, b)| measure(vec![a, b]))
}

#[test]
fn left_identity() {
    let f = |q: QubitHandle| apply_h(q).and_then(measure_qubit);
    let lhs = trace(new_qubit().and_then(|q| QuantumProgram::pure(q).and_then(f)));
    let rhs = trace(new_qubit().and_then(f));
    assert_eq!(lhs, rhs);
}

#[test]
fn right_identity() {
    let lhs = trace(bell().and_then(QuantumProgram::pure));
    assert_eq!(lhs, trace(bell()));
}

#[test]
fn associativity() {
    let lhs = trace(new_qubit().and_then(apply_h).and_then(apply_h).and_then(measure_qubit));
    let rhs = trace(
        new_qubit().and_then(|q| apply_h(q).and_then(|q| apply_h(q).and_then(measure_qubit))),
    );
    assert_eq!(lhs, rhs);
}

#[test]
fn single_gate_matches_circuit_form() {
    let direct = trace(new_qubit().and_then(apply_h).and_then(measure_qubit));
    let via = trace(
        new_qubit()
            .and_then(|q| apply_circuit(vec![q], Circuit::identity(1).h(0).unwrap()))
            .and_then(measure),
    );
    assert_eq!(direct, via);
}

#[test]
fn bell_trace() {
    let t = trace(bell());
    assert_eq!(t.len(), 6);
    assert!(matches!(t[3], DeviceOp::Cnot(a, b) if a == QubitId(0) && b == QubitId(1)));
}

#[test]
fn duplicate_handle() {
    let p = new_qubit().and_then(|q| {
        QuantumProgram::new(move |s| {
            let copy = q.forge_copy();
            s.apply_cnot(q, copy).map(|_| ())
        })
    });
    assert_eq!(execute(&mut sim(), p), Err(DeviceError::DuplicateHandle));
}

#[test]
fn use_after_consume() {
    let p = new_qubit().and_then(|q| {
        QuantumProgram::new(move |s| {
            let stale = q.forge_copy();
            let q = s.apply_h(q)?;
            let r = s.apply_h(stale);
            s.measure_qubit(q)?;
            r.map(|_| ())
        })
    });
    assert_eq!(execute(&mut sim(), p), Err(DeviceError::UseAfterConsume));
}

#[test]
fn foreign_handle() {
    let leaked = execute(
        &mut sim(),
        new_qubit().and_then(|q| {
            QuantumProgram::new(move |s| {
                let f = q.forge_copy();
                s.measure_qubit(q)?;
                Ok(f)
            })
        }),
    )
    .unwrap();
    let p = QuantumProgram::new(move |s| s.measure_qubit(leaked));
    assert_eq!(execute(&mut sim(), p), Err(DeviceError::ForeignHandle));
}

#[test]
fn dangling_qubits() {
    let p = new_qubits(3).map(drop);
    assert_eq!(execute(&mut sim(), p), Err(DeviceError::DanglingQubits { count: 3 }));
}

#[test]
fn arity_mismatch() {
    let p = new_qubit()
        .and_then(|q| apply_circuit(vec![q], Circuit::identity(2)))
        .and_then(measure);
    assert_eq!(
        execute(&mut sim(), p),
        Err(DeviceError::ArityMismatch { expected: 2, found: 1 })
    );
}

#[test]
fn zero_qubits() {
    let p = new_qubits(0).and_then(measure);
    assert_eq!(execute(&mut sim(), p), Ok(vec![]));
}

#[test]
fn handles_are_renewed() {
    let run = execute_traced(&mut sim(), new_qubit().and_then(apply_h).and_then(measure_qubit)).unwrap();
    assert_eq!(run.issued.len(), 2);
    assert_eq!(run.consumed, run.issued);
}

#[test]
fn capacity_enforced() {
    let mut s = Simulator::<f64>::with_seed(0).with_capacity(2);
    assert_eq!(
        execute(&mut s, new_qubits(3).and_then(measure)),
        Err(DeviceError::CapacityExceeded { requested: 3, limit: 2 })
    );
}
