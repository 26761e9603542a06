use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use qlin_core::algorithms::{
    self, cut_value, example_u_prime, rus_counted, Graph, QaoaRandomSearch, VqeRandomSearch,
};
use qlin_core::circuit::GateCounts;
use qlin_core::device::{apply_circuit, measure, new_qubit, new_qubits};
use qlin_core::stdcircuits::qft;
use qlin_core::{execute, Circuit, SeededRandom, Simulator};
use serde::Serialize;

use crate::formats::{self, gate_line, write_circuit};
use crate::{BackendKind, Cli, CliError, Command, Format, RunConfig};

pub fn dispatch(cli: &Cli) -> Result<String, CliError> {
    let cfg = &cli.config;
    match &cli.command {
        Command::Simulate { circuit } => simulate(cfg, &load_circuit(circuit)?),
        Command::Qft { n } => Ok(circuit_output(cfg, &qft(*n))),
        Command::Draw { circuit } => {
            let drawing = load_circuit(circuit)?.draw();
            Ok(emit(cfg, &drawing, || json(&BTreeMap::from([("drawing", &drawing)]))))
        }
        Command::ExportQasm { circuit } => {
            let text = load_circuit(circuit)?.to_qasm();
            Ok(emit(cfg, &text, || json(&BTreeMap::from([("qasm", &text)]))))
        }
        Command::Optimise { circuit, output } => {
            let before = load_circuit(circuit)?;
            let after = before.optimise();
            if let Some(path) = output {
                std::fs::write(path, write_circuit(&after))
                    .map_err(|e| CliError::runtime(format!("cannot write {}: {e}", path.display())))?;
            }
            optimise_output(cfg, &before, &after)
        }
        Command::Stats { circuit } => Ok(stats_output(cfg, &load_circuit(circuit)?)),
        Command::Coin => coin(cfg),
        Command::Rus { max_iter } => rus(cfg, *max_iter),
        Command::Vqe { ham, depth, k, nsamples } => vqe(cfg, ham, *depth, *k, *nsamples),
        Command::Qaoa { graph, k, p } => qaoa(cfg, graph, *k, *p),
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::runtime(format!("cannot read {}: {e}", path.display())))
}

fn parse_with<T>(
    path: &Path,
    f: impl FnOnce(&str) -> Result<T, formats::ParseError>,
) -> Result<T, CliError> {
    f(&read(path)?).map_err(|e| CliError::parse(format!("{}: {e}", path.display())))
}

fn load_circuit(path: &Path) -> Result<Circuit, CliError> {
    parse_with(path, formats::parse_circuit)
}

fn json<T: Serialize + ?Sized>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("plain data serialises");
    s.push('\n');
    s
}

fn emit(cfg: &RunConfig, text: &str, as_json: impl FnOnce() -> String) -> String {
    match cfg.format {
        Format::Text => text.to_owned(),
        Format::Json => as_json(),
    }
}

fn seed(cfg: &RunConfig) -> Result<u64, CliError> {
    match (cfg.seed, cfg.format) {
        (Some(s), _) => Ok(s),
        (None, Format::Json) => Err(CliError::usage("--seed is required with --format json")),
        (None, Format::Text) => Ok(rand::random()),
    }
}

/// Backend plus an independent stream for classical randomness.
fn backend(cfg: &RunConfig) -> Result<(Simulator, SeededRandom), CliError> {
    let seed = seed(cfg)?;
    match cfg.backend {
        BackendKind::Sim => Ok((
            Simulator::new(SeededRandom::with_stream(seed, 0)),
            SeededRandom::with_stream(seed, 1),
        )),
    }
}

fn bitstring(bits: &[bool]) -> String {
    bits.iter().map(|&b| if b { '1' } else { '0' }).collect()
}

fn simulate(cfg: &RunConfig, circuit: &Circuit) -> Result<String, CliError> {
    let (mut sim, _) = backend(cfg)?;
    let mut counts: BTreeMap<String, u64> = BTreeMap::new();
    for _ in 0..cfg.shots {
        let c = circuit.clone();
        let program = new_qubits(c.arity())
            .and_then(move |qs| apply_circuit(qs, c))
            .and_then(measure);
        *counts.entry(bitstring(&execute(&mut sim, program)?)).or_default() += 1;
    }
    let mut text = String::new();
    for (k, v) in &counts {
        let _ = writeln!(text, "{k} {v} {}", *v as f64 / cfg.shots as f64);
    }
    Ok(emit(cfg, &text, || json(&counts)))
}

#[derive(Serialize)]
struct CircuitJson {
    qubits: usize,
    gates: Vec<String>,
}

impl CircuitJson {
    fn new(c: &Circuit) -> Self {
        Self {
            qubits: c.arity(),
            gates: c.gates().iter().map(gate_line).collect(),
        }
    }
}

fn circuit_output(cfg: &RunConfig, c: &Circuit) -> String {
    emit(cfg, &write_circuit(c), || json(&CircuitJson::new(c)))
}

#[derive(Serialize)]
struct Stats {
    qubits: usize,
    depth: usize,
    counts: GateCounts,
}

impl Stats {
    fn new(c: &Circuit) -> Self {
        Self {
            qubits: c.arity(),
            depth: c.depth(),
            counts: c.gate_counts(),
        }
    }

    fn line(&self) -> String {
        format!(
            "depth {}, H {}, P {}, CNOT {}",
            self.depth, self.counts.h, self.counts.p, self.counts.cnot
        )
    }
}

fn stats_output(cfg: &RunConfig, c: &Circuit) -> String {
    let s = Stats::new(c);
    let text = format!(
        "qubits {}\ndepth {}\nH {}\nP {}\nCNOT {}\n",
        s.qubits, s.depth, s.counts.h, s.counts.p, s.counts.cnot
    );
    emit(cfg, &text, || json(&s))
}

fn optimise_output(cfg: &RunConfig, before: &Circuit, after: &Circuit) -> Result<String, CliError> {
    #[derive(Serialize)]
    struct Out {
        before: Stats,
        after: Stats,
        circuit: CircuitJson,
    }
    let (b, a) = (Stats::new(before), Stats::new(after));
    let text = format!("before: {}\nafter: {}\n", b.line(), a.line());
    Ok(emit(cfg, &text, || {
        json(&Out {
            before: b,
            after: a,
            circuit: CircuitJson::new(after),
        })
    }))
}

fn coin(cfg: &RunConfig) -> Result<String, CliError> {
    let (mut sim, _) = backend(cfg)?;
    let bits = (0..cfg.shots)
        .map(|_| algorithms::coin(&mut sim).map(u8::from))
        .collect::<Result<Vec<_>, _>>()?;
    let text: String = bits.iter().map(|b| format!("{b}\n")).collect();
    Ok(emit(cfg, &text, || json(&BTreeMap::from([("bits", &bits)]))))
}

fn rus(cfg: &RunConfig, max_iter: Option<usize>) -> Result<String, CliError> {
    #[derive(Serialize)]
    struct Run {
        bit: u8,
        attempts: usize,
    }
    if max_iter == Some(0) {
        return Err(CliError::usage("--max-iter must be at least 1"));
    }
    let (mut sim, _) = backend(cfg)?;
    let mut runs = Vec::new();
    for _ in 0..cfg.shots {
        let program = new_qubit().and_then(move |q| {
            rus_counted(q, example_u_prime(), Circuit::identity(1), max_iter)
                .and_then(|(q, n)| measure(vec![q]).map(move |b| (b[0], n)))
        });
        let (bit, attempts) = execute(&mut sim, program)?;
        runs.push(Run { bit: bit.into(), attempts });
    }
    let text: String = runs
        .iter()
        .map(|r| format!("{} (attempts: {})\n", r.bit, r.attempts))
        .collect();
    Ok(emit(cfg, &text, || json(&BTreeMap::from([("runs", &runs)]))))
}

fn vqe(cfg: &RunConfig, ham: &Path, depth: usize, k: usize, nsamples: usize) -> Result<String, CliError> {
    let hamiltonian = parse_with(ham, formats::parse_hamiltonian)?;
    let (mut sim, mut rng) = backend(cfg)?;
    let search = VqeRandomSearch {
        count: 2 * hamiltonian.qubits() * depth,
    };
    let r = algorithms::vqe(&mut sim, &hamiltonian, depth, k, nsamples, &search, &mut rng)?;
    let params: Vec<String> = r.best_params.iter().map(f64::to_string).collect();
    let text = format!("best energy {}\nbest params [{}]\n", r.best_energy, params.join(", "));
    Ok(emit(cfg, &text, || json(&r)))
}

fn qaoa(cfg: &RunConfig, graph: &Path, k: usize, p: usize) -> Result<String, CliError> {
    #[derive(Serialize)]
    struct Round {
        betas: Vec<f64>,
        gammas: Vec<f64>,
        cut: String,
        value: usize,
    }
    #[derive(Serialize)]
    struct Out {
        cut: String,
        value: usize,
        history: Vec<Round>,
    }
    let graph: Graph = parse_with(graph, formats::parse_graph)?;
    let (mut sim, mut rng) = backend(cfg)?;
    let r = algorithms::qaoa(&mut sim, k, &graph, &QaoaRandomSearch { depth: p }, &mut rng)?;
    let text = format!("cut {}\nvalue {}\n", r.cut.to_bitstring(), r.value);
    Ok(emit(cfg, &text, || {
        let history = r
            .history
            .entries()
            .iter()
            .map(|e| Round {
                betas: e.params.betas.clone(),
                gammas: e.params.gammas.clone(),
                cut: e.observed.to_bitstring(),
                value: cut_value(&graph, &e.observed).expect("sampled cut fits graph"),
            })
            .collect();
        json(&Out {
            cut: r.cut.to_bitstring(),
            value: r.value,
            history,
        })
    }))
}
