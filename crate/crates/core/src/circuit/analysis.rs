use std::fmt::Write as _;

use serde::Serialize;

use super::{Circuit, Gate};
use crate::scalar::Scalar;

/// Number of atomic gates of each kind.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct GateCounts {
    #[serde(rename = "H")]
    pub h: usize,
    #[serde(rename = "P")]
    pub p: usize,
    #[serde(rename = "CNOT")]
    pub cnot: usize,
}

impl GateCounts {
    pub fn total(&self) -> usize {
        self.h + self.p + self.cnot
    }
}

pub(super) fn gate_counts<T: Scalar>(c: &Circuit<T>) -> GateCounts {
    let mut counts = GateCounts::default();
    for g in &c.gates {
        match g {
            Gate::H(_) => counts.h += 1,
            Gate::P(..) => counts.p += 1,
            Gate::Cnot { .. } => counts.cnot += 1,
        }
    }
    counts
}

pub(super) fn depth<T: Scalar>(c: &Circuit<T>) -> usize {
    let mut level = vec![0usize; c.arity];
    for g in &c.gates {
        let wires = g.wires().as_slice();
        let step = wires.iter().map(|&w| level[w]).max().unwrap_or(0) + 1;
        for &w in wires.iter() {
            level[w] = step;
        }
    }
    level.into_iter().max().unwrap_or(0)
}

fn glyph<T: Scalar>(g: &Gate<T>, wire: usize) -> Option<String> {
    match *g {
        Gate::H(w) if w == wire => Some("H".into()),
        Gate::P(a, w) if w == wire => Some(format!("P({:.4})", a.as_f64())),
        Gate::Cnot { control, .. } if control == wire => Some("@".into()),
        Gate::Cnot { target, .. } if target == wire => Some("X".into()),
        Gate::Cnot { control, target } if wire > control.min(target) && wire < control.max(target) => {
            Some("|".into())
        }
        _ => None,
    }
}

/// One column per gate so the drawing preserves temporal order exactly.
pub(super) fn draw<T: Scalar>(c: &Circuit<T>) -> String {
    let label_width = format!("q{}", c.arity.saturating_sub(1)).len();
    let mut rows: Vec<String> = (0..c.arity)
        .map(|w| format!("{:<width$}: -", format!("q{w}"), width = label_width))
        .collect();
    for g in &c.gates {
        let cells: Vec<Option<String>> = (0..c.arity).map(|w| glyph(g, w)).collect();
        let width = cells
            .iter()
            .flatten()
            .map(|s| s.chars().count())
            .max()
            .unwrap_or(1);
        for (row, cell) in rows.iter_mut().zip(cells) {
            let text = cell.unwrap_or_default();
            let pad = width - text.chars().count();
            let _ = write!(row, "{}{}-", text, "-".repeat(pad));
        }
    }
    let mut out = rows.join("\n");
    out.push('\n');
    out
}
