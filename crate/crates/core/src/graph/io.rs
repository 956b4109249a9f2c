//! JSON graph files: `{"n": int, "parts": [[int,...],...], "edges": [[u,v],...]}`.

use serde::{Deserialize, Serialize};

use super::{PartiteGraph, VertexSet, MAX_VERTICES};
use crate::error::{Error, Result};

/// On-disk form of a [`PartiteGraph`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphFile {
    pub n: usize,
    pub parts: Vec<Vec<usize>>,
    pub edges: Vec<[usize; 2]>,
}

impl GraphFile {
    pub fn from_graph(g: &PartiteGraph) -> Self {
        let mut parts = vec![Vec::new(); g.k()];
        for (sorted, part) in g.parts().iter().enumerate() {
            parts[g.input_label(sorted)] = part.to_vec();
        }
        GraphFile {
            n: g.n(),
            parts,
            edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect(),
        }
    }

    pub fn into_graph(self) -> Result<PartiteGraph> {
        let fail = |msg: String| Error::GraphFormat(msg);
        if self.n > MAX_VERTICES {
            return Err(fail(format!(
                "n: {} exceeds the supported maximum of {MAX_VERTICES}",
                self.n
            )));
        }
        let mut owner = vec![usize::MAX; self.n];
        for (i, part) in self.parts.iter().enumerate() {
            if part.is_empty() {
                return Err(fail(format!("parts[{i}]: empty part")));
            }
            for (j, &v) in part.iter().enumerate() {
                if v >= self.n {
                    return Err(fail(format!(
                        "parts[{i}][{j}]: vertex {v} is out of range 0..{}",
                        self.n
                    )));
                }
                if owner[v] != usize::MAX {
                    return Err(fail(format!(
                        "parts[{i}][{j}]: vertex {v} already belongs to parts[{}]",
                        owner[v]
                    )));
                }
                owner[v] = i;
            }
        }
        if let Some(v) = owner.iter().position(|&o| o == usize::MAX) {
            return Err(fail(format!("parts: vertex {v} is not in any part")));
        }
        let mut g = PartiteGraph::from_parts(self.n, &self.parts)
            .map_err(|e| fail(format!("parts: {e}")))?;
        let mut seen = vec![VertexSet::EMPTY; self.n];
        for (i, &[u, v]) in self.edges.iter().enumerate() {
            if u >= self.n || v >= self.n {
                return Err(fail(format!(
                    "edges[{i}]: [{u},{v}] has an endpoint out of range 0..{}",
                    self.n
                )));
            }
            if u == v {
                return Err(fail(format!("edges[{i}]: [{u},{v}] is a self-loop")));
            }
            if u > v {
                return Err(fail(format!(
                    "edges[{i}]: [{u},{v}] is not canonical (expected u < v)"
                )));
            }
            if owner[u] == owner[v] {
                return Err(fail(format!(
                    "edges[{i}]: [{u},{v}] joins two vertices of parts[{}]",
                    owner[u]
                )));
            }
            if seen[u].contains(v) {
                return Err(fail(format!("edges[{i}]: [{u},{v}] is a duplicate edge")));
            }
            seen[u].insert(v);
            g.add_edge(u, v).map_err(|e| fail(format!("edges[{i}]: {e}")))?;
        }
        Ok(g)
    }
}

impl PartiteGraph {
    /// Compact canonical JSON followed by a newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string(&GraphFile::from_graph(self)).expect("serializable");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: GraphFile = serde_json::from_str(text).map_err(|e| {
            Error::GraphFormat(format!("line {} column {}: {e}", e.line(), e.column()))
        })?;
        file.into_graph()
    }
}
