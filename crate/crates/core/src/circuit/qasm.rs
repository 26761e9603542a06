//! OpenQASM 2.0 export and a matching importer for the subset we emit.
//!
//! Mapping: `H → h`, `P(α) → u1(α)`, `CNOT → cx`. Angles that are exact
//! multiples `k·π/2^m` (with `m ≤ 6`) are written symbolically (`pi`,
//! `-pi/4`, `3*pi/8`); all others use the shortest decimal that parses back
//! to the same value, so export followed by import is lossless.

use std::fmt::Write as _;

use thiserror::Error;

use super::{Circuit, CircuitError, Gate};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QasmError {
    #[error("line {line}: {reason}")]
    Syntax { line: usize, reason: String },
    #[error("line {line}: {source}")]
    Gate {
        line: usize,
        #[source]
        source: CircuitError,
    },
    #[error("missing qreg declaration")]
    MissingRegister,
}

pub fn export<T: Scalar>(c: &Circuit<T>) -> String {
    let mut s = String::new();
    s.push_str("OPENQASM 2.0;\ninclude \"qelib1.inc\";\n");
    let _ = writeln!(s, "qreg q[{}];", c.arity);
    for g in &c.gates {
        let _ = match *g {
            Gate::H(w) => writeln!(s, "h q[{w}];"),
            Gate::P(a, w) => writeln!(s, "u1({}) q[{w}];", format_angle(a)),
            Gate::Cnot { control, target } => writeln!(s, "cx q[{control}],q[{target}];"),
        };
    }
    s
}

const MAX_PI_DENOM_LOG2: u32 = 6;

/// Symbolic `k*pi/2^m` when exact, otherwise the scalar's shortest round-trip decimal.
pub fn format_angle<T: Scalar>(a: T) -> String {
    if a == T::zero() {
        return "0".into();
    }
    for m in 0..=MAX_PI_DENOM_LOG2 {
        let denom = T::lit(f64::from(1u32 << m));
        let k = (a * denom / T::PI()).round();
        if k == T::zero() || k.abs() > T::lit(1024.0) {
            continue;
        }
        if pi_multiple(k, denom) == a {
            let k = k.as_f64() as i64;
            let num = match k {
                1 => "pi".to_string(),
                -1 => "-pi".to_string(),
                _ => format!("{k}*pi"),
            };
            return if m == 0 {
                num
            } else {
                format!("{num}/{}", 1u32 << m)
            };
        }
    }
    format!("{a}")
}

// Evaluation order shared with the parser: (k·π)/d.
fn pi_multiple<T: Scalar>(k: T, denom: T) -> T {
    k * T::PI() / denom
}

/// Parses an angle expression: a decimal, or `[-][k*]pi[/d]`.
pub fn parse_angle<T: Scalar>(text: &str) -> Option<T> {
    let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if !t.contains("pi") {
        return t.parse::<f64>().ok().and_then(T::from_f64);
    }
    let (numer, denom) = match t.split_once('/') {
        Some((n, d)) => (n, d.parse::<f64>().ok()?),
        None => (t.as_str(), 1.0),
    };
    let k = match numer {
        "pi" => 1.0,
        "-pi" => -1.0,
        _ => numer.strip_suffix("*pi")?.parse::<f64>().ok()?,
    };
    Some(pi_multiple(T::lit(k), T::lit(denom)))
}

fn parse_qubit(arg: &str, line: usize) -> Result<usize, QasmError> {
    let syntax = |reason: String| QasmError::Syntax { line, reason };
    let inner = arg
        .trim()
        .strip_prefix("q[")
        .and_then(|r| r.strip_suffix(']'))
        .ok_or_else(|| syntax(format!("expected q[<index>], found `{arg}`")))?;
    inner
        .trim()
        .parse()
        .map_err(|_| syntax(format!("bad qubit index `{inner}`")))
}

/// Imports the OpenQASM subset produced by [`export`]: one `qreg q[n]`, gates
/// `h`, `u1`/`p`, `cx`. `barrier` and `creg` lines are ignored.
pub fn import<T: Scalar>(text: &str) -> Result<Circuit<T>, QasmError> {
    let mut circuit: Option<Circuit<T>> = None;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let code = raw.split("//").next().unwrap_or("").trim();
        if code.is_empty() {
            continue;
        }
        let syntax = |reason: String| QasmError::Syntax { line, reason };
        let stmt = code
            .strip_suffix(';')
            .ok_or_else(|| syntax("missing `;`".into()))?
            .trim();
        if stmt.starts_with("OPENQASM") || stmt.starts_with("include") {
            continue;
        }
        if let Some(rest) = stmt.strip_prefix("qreg") {
            if circuit.is_some() {
                return Err(syntax("only one qreg is supported".into()));
            }
            let n = rest
                .trim()
                .strip_prefix("q[")
                .and_then(|r| r.strip_suffix(']'))
                .and_then(|n| n.trim().parse().ok())
                .ok_or_else(|| syntax(format!("bad qreg declaration `{stmt}`")))?;
            circuit = Some(Circuit::identity(n));
            continue;
        }
        if stmt.starts_with("creg") || stmt.starts_with("barrier") {
            continue;
        }
        let c = circuit.as_mut().ok_or(QasmError::MissingRegister)?;
        let (head, args) = match stmt.find(|ch: char| ch.is_whitespace()) {
            Some(pos) => (stmt[..pos].trim(), stmt[pos..].trim()),
            None => return Err(syntax(format!("malformed statement `{stmt}`"))),
        };
        let gate = if head == "h" {
            Gate::H(parse_qubit(args, line)?)
        } else if head == "cx" {
            let (a, b) = args
                .split_once(',')
                .ok_or_else(|| syntax("cx needs two qubits".into()))?;
            Gate::Cnot {
                control: parse_qubit(a, line)?,
                target: parse_qubit(b, line)?,
            }
        } else if let Some(param) = head
            .strip_prefix("u1(")
            .or_else(|| head.strip_prefix("p("))
            .and_then(|r| r.strip_suffix(')'))
        {
            let angle = parse_angle(param).ok_or_else(|| syntax(format!("bad angle `{param}`")))?;
            Gate::P(angle, parse_qubit(args, line)?)
        } else {
            return Err(syntax(format!("unsupported statement `{head}`")));
        };
        c.push(gate).map_err(|source| QasmError::Gate { line, source })?;
    }
    circuit.ok_or(QasmError::MissingRegister)
}
