use std::collections::BTreeSet;

use serde::Serialize;

use super::AlgorithmError;

/// Undirected simple graph on vertices `0..vertex_count`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Edges are stored as `(min, max)` in insertion order. Self-loops,
    /// out-of-range endpoints and duplicates (in either orientation) are errors.
    pub fn new(
        vertex_count: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, AlgorithmError> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for (u, v) in edges {
            if u == v {
                return Err(AlgorithmError::InvalidGraph(format!("self-loop at vertex {u}")));
            }
            if u >= vertex_count || v >= vertex_count {
                return Err(AlgorithmError::InvalidGraph(format!(
                    "edge ({u}, {v}) outside {vertex_count} vertices"
                )));
            }
            let e = (u.min(v), u.max(v));
            if !seen.insert(e) {
                return Err(AlgorithmError::InvalidGraph(format!("duplicate edge ({u}, {v})")));
            }
            out.push(e);
        }
        Ok(Self {
            vertex_count,
            edges: out,
        })
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Self::new(n, edges).expect("complete graph is simple")
    }

    pub fn path(n: usize) -> Self {
        Self::new(n, (1..n).map(|v| (v - 1, v))).expect("path graph is simple")
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }
}

/// Side assignment for every vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct Cut(pub Vec<bool>);

impl Cut {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Bitstring form, vertex 0 first.
    pub fn to_bitstring(&self) -> String {
        self.0.iter().map(|&b| if b { '1' } else { '0' }).collect()
    }

    /// All `2^n` cuts in ascending binary order (vertex 0 most significant).
    pub fn all(n: usize) -> impl Iterator<Item = Cut> {
        (0..1usize << n).map(move |x| Cut((0..n).map(|v| (x >> (n - 1 - v)) & 1 == 1).collect()))
    }
}

/// Number of edges whose endpoints lie on opposite sides.
pub fn cut_value(graph: &Graph, cut: &Cut) -> Result<usize, AlgorithmError> {
    if cut.len() != graph.vertex_count {
        return Err(AlgorithmError::CutLengthMismatch {
            expected: graph.vertex_count,
            found: cut.len(),
        });
    }
    Ok(graph
        .edges
        .iter()
        .filter(|&&(u, v)| cut.0[u] != cut.0[v])
        .count())
}

/// Highest-value cut, first occurrence on ties; `None` for an empty list.
pub fn best_cut<'c>(
    graph: &Graph,
    cuts: impl IntoIterator<Item = &'c Cut>,
) -> Result<Option<(Cut, usize)>, AlgorithmError> {
    let mut best: Option<(&Cut, usize)> = None;
    for cut in cuts {
        let value = cut_value(graph, cut)?;
        if best.is_none_or(|(_, b)| value > b) {
            best = Some((cut, value));
        }
    }
    Ok(best.map(|(c, v)| (c.clone(), v)))
}
