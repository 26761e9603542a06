//! Text formats read by the command-line tool.
//!
//! Circuits: `qubits <n>` then one of `H <j>`, `P <angle> <j>`, `CNOT <c> <t>`
//! per line. Angles accept decimals and `k*pi/d` forms. Files whose first
//! statement is `OPENQASM` are read as OpenQASM instead.
//!
//! Graphs: `vertices <n>` then `edge <u> <v>` per line.
//!
//! Hamiltonians: `<coeff> <pauli string>` per line.
//!
//! `#` starts a comment in all three formats.

use std::fmt::Write as _;
use std::str::FromStr;

use qlin_core::algorithms::{Graph, Hamiltonian, PauliString};
use qlin_core::circuit::qasm;
use qlin_core::{Circuit, Gate};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {reason}")]
pub struct ParseError {
    pub line: usize,
    pub reason: String,
}

fn err(line: usize, reason: impl Into<String>) -> ParseError {
    ParseError {
        line,
        reason: reason.into(),
    }
}

/// Non-empty lines with comments stripped, paired with 1-based line numbers.
fn statements(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let code = raw.split('#').next().unwrap_or("");
        let words: Vec<&str> = code.split_whitespace().collect();
        (!words.is_empty()).then_some((i + 1, words))
    })
}

fn number<N: FromStr>(word: &str, line: usize, what: &str) -> Result<N, ParseError> {
    word.parse()
        .map_err(|_| err(line, format!("bad {what} `{word}`")))
}

fn arity(words: &[&str], n: usize, line: usize) -> Result<(), ParseError> {
    if words.len() == n + 1 {
        Ok(())
    } else {
        Err(err(
            line,
            format!("`{}` takes {n} argument(s), found {}", words[0], words.len() - 1),
        ))
    }
}

/// Reads a header line `<keyword> <count>`.
fn header<'a>(
    stmts: &mut impl Iterator<Item = (usize, Vec<&'a str>)>,
    keyword: &str,
) -> Result<usize, ParseError> {
    let (line, words) = stmts
        .next()
        .ok_or_else(|| err(1, format!("missing `{keyword} <n>` header")))?;
    if words[0] != keyword {
        return Err(err(line, format!("expected `{keyword} <n>`, found `{}`", words[0])));
    }
    arity(&words, 1, line)?;
    number(words[1], line, "count")
}

pub fn parse_native_circuit(text: &str) -> Result<Circuit, ParseError> {
    let mut stmts = statements(text);
    let n = header(&mut stmts, "qubits")?;
    let mut c = Circuit::identity(n);
    for (line, w) in stmts {
        let gate = match w[0].to_ascii_uppercase().as_str() {
            "H" => {
                arity(&w, 1, line)?;
                Gate::H(number(w[1], line, "wire")?)
            }
            "P" => {
                arity(&w, 2, line)?;
                let angle =
                    qasm::parse_angle(w[1]).ok_or_else(|| err(line, format!("bad angle `{}`", w[1])))?;
                Gate::P(angle, number(w[2], line, "wire")?)
            }
            "CNOT" => {
                arity(&w, 2, line)?;
                Gate::Cnot {
                    control: number(w[1], line, "wire")?,
                    target: number(w[2], line, "wire")?,
                }
            }
            other => return Err(err(line, format!("unknown gate `{other}`"))),
        };
        c.push(gate).map_err(|e| err(line, e.to_string()))?;
    }
    Ok(c)
}

/// Native or OpenQASM, chosen by the first statement.
pub fn parse_circuit(text: &str) -> Result<Circuit, ParseError> {
    let first = text
        .lines()
        .map(|l| l.split("//").next().unwrap_or("").trim())
        .find(|l| !l.is_empty() && !l.starts_with('#'));
    if first.is_some_and(|l| l.starts_with("OPENQASM")) {
        qasm::import(text).map_err(|e| match e {
            qasm::QasmError::Syntax { line, reason } => err(line, reason),
            qasm::QasmError::Gate { line, source } => err(line, source.to_string()),
            qasm::QasmError::MissingRegister => err(1, "missing qreg declaration"),
        })
    } else {
        parse_native_circuit(text)
    }
}

pub fn gate_line(g: &Gate) -> String {
    match *g {
        Gate::H(w) => format!("H {w}"),
        Gate::P(a, w) => format!("P {} {w}", qasm::format_angle(a)),
        Gate::Cnot { control, target } => format!("CNOT {control} {target}"),
    }
}

/// Inverse of [`parse_native_circuit`].
pub fn write_circuit(c: &Circuit) -> String {
    let mut s = format!("qubits {}\n", c.arity());
    for g in c.gates() {
        let _ = writeln!(s, "{}", gate_line(g));
    }
    s
}

pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut stmts = statements(text);
    let n = header(&mut stmts, "vertices")?;
    let mut graph = Graph::new(n, []).expect("no edges");
    for (line, w) in stmts {
        if w[0] != "edge" {
            return Err(err(line, format!("expected `edge <u> <v>`, found `{}`", w[0])));
        }
        arity(&w, 2, line)?;
        let (u, v) = (number(w[1], line, "vertex")?, number(w[2], line, "vertex")?);
        let edges = graph.edges().iter().copied().chain([(u, v)]);
        graph = Graph::new(n, edges).map_err(|e| err(line, e.to_string()))?;
    }
    Ok(graph)
}

pub fn parse_hamiltonian(text: &str) -> Result<Hamiltonian, ParseError> {
    let mut terms = Vec::new();
    let mut width: Option<usize> = None;
    for (line, w) in statements(text) {
        arity(&w, 1, line).map_err(|_| err(line, "expected `<coeff> <pauli string>`"))?;
        let alpha: f64 = number(w[0], line, "coefficient")?;
        let s: PauliString = w[1].parse().map_err(|e: qlin_core::algorithms::AlgorithmError| err(line, e.to_string()))?;
        match width {
            Some(n) if n != s.len() => {
                return Err(err(line, format!("term has {} qubits, expected {n}", s.len())))
            }
            _ => width = Some(s.len()),
        }
        terms.push((alpha, s));
    }
    Hamiltonian::new(terms).map_err(|e| err(1, e.to_string()))
}
