//! Graph pairs and path pairs on a shared vertex set `1..=n`.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// An unordered edge, stored with `u < v`.
pub type Edge = (usize, usize);

pub fn edge(u: usize, v: usize) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {0} out of range 1..={1}")]
    VertexOutOfRange(usize, usize),
    #[error("duplicate vertex `{0}` in path")]
    DuplicateVertex(String),
    #[error("paths are not over the same vertex set (`{0}` missing from one)")]
    VertexSetMismatch(String),
}

/// A simple undirected graph on vertices `1..=n`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Graph {
    pub n: usize,
    pub edges: BTreeSet<Edge>,
}

impl Graph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Self, GraphError> {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            for w in [u, v] {
                if w == 0 || w > n {
                    return Err(GraphError::VertexOutOfRange(w, n));
                }
            }
            set.insert(edge(u, v));
        }
        Ok(Graph { n, edges: set })
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        self.edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect()
    }

    /// Connected components, optionally excluding one vertex.
    pub fn components_without(&self, excluded: Option<usize>) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n + 1];
        if let Some(x) = excluded {
            seen[x] = true;
        }
        let mut adj: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for &(u, v) in &self.edges {
            if Some(u) != excluded && Some(v) != excluded {
                adj.entry(u).or_default().push(v);
                adj.entry(v).or_default().push(u);
            }
        }
        let mut comps = Vec::new();
        for start in 1..=self.n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for &w in adj.get(&v).into_iter().flatten() {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        self.components_without(None)
    }

    pub fn is_cut_vertex(&self, v: usize) -> bool {
        self.components_without(Some(v)).len() > self.components().len()
    }
}

/// A pair of graphs `⟨G_v, G_H⟩` on the shared vertex set `1..=n`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct GraphPair {
    pub n: usize,
    pub ev: BTreeSet<Edge>,
    pub eh: BTreeSet<Edge>,
}

impl GraphPair {
    pub fn new(
        n: usize,
        ev: impl IntoIterator<Item = Edge>,
        eh: impl IntoIterator<Item = Edge>,
    ) -> Result<Self, GraphError> {
        let gv = Graph::new(n, ev)?;
        let gh = Graph::new(n, eh)?;
        Ok(GraphPair {
            n,
            ev: gv.edges,
            eh: gh.edges,
        })
    }

    pub fn vertical_graph(&self) -> Graph {
        Graph {
            n: self.n,
            edges: self.ev.clone(),
        }
    }

    pub fn horizontal_graph(&self) -> Graph {
        Graph {
            n: self.n,
            edges: self.eh.clone(),
        }
    }
}

/// A pair of paths on a shared vertex set, normalized so that `P_H` is
/// `(1, 2, ..., n)` and `P_v` is the permutation `pi`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct PathPair {
    pub n: usize,
    /// `P_v` as a sequence of canonical vertices.
    pub pi: Vec<usize>,
    /// `labels[v - 1]` is the original label of canonical vertex `v`.
    pub labels: Vec<String>,
}

impl PathPair {
    /// Builds a pair directly from a permutation, using canonical labels.
    pub fn from_permutation(pi: Vec<usize>) -> Self {
        let n = pi.len();
        PathPair {
            n,
            pi,
            labels: (1..=n).map(|v| v.to_string()).collect(),
        }
    }

    /// `positions()[v]` is the 1-based position of vertex `v` along `P_v`.
    pub fn positions(&self) -> Vec<usize> {
        positions_of(&self.pi)
    }

    /// Edges of `P_v`.
    pub fn ev(&self) -> BTreeSet<Edge> {
        self.pi.windows(2).map(|w| edge(w[0], w[1])).collect()
    }

    /// Edges of `P_H = (1..n)`.
    pub fn eh(&self) -> BTreeSet<Edge> {
        (1..self.n).map(|i| (i, i + 1)).collect()
    }

    pub fn to_graph_pair(&self) -> GraphPair {
        GraphPair {
            n: self.n,
            ev: self.ev(),
            eh: self.eh(),
        }
    }

    /// Edges shared by `P_v` and `P_H`.
    pub fn shared_edges(&self) -> Vec<Edge> {
        self.ev().intersection(&self.eh()).copied().collect()
    }
}

/// `positions_of(pi)[v]` is the 1-based position of `v` in `pi`; index 0 unused.
pub fn positions_of(pi: &[usize]) -> Vec<usize> {
    let mut pos = vec![0; pi.len() + 1];
    for (i, &v) in pi.iter().enumerate() {
        pos[v] = i + 1;
    }
    pos
}

/// Relabels two vertex sequences over the same vertex set so that the second
/// (`seq_h`) becomes `(1..n)`; the first becomes the permutation `pi`.
pub fn normalize_path_pair(seq_v: &[String], seq_h: &[String]) -> Result<PathPair, GraphError> {
    let n = seq_h.len();
    let mut index: BTreeMap<&str, usize> = BTreeMap::new();
    for (i, label) in seq_h.iter().enumerate() {
        if index.insert(label.as_str(), i + 1).is_some() {
            return Err(GraphError::DuplicateVertex(label.clone()));
        }
    }
    if seq_v.len() != n {
        let missing = seq_h
            .iter()
            .find(|l| !seq_v.contains(l))
            .cloned()
            .unwrap_or_else(|| seq_v.first().cloned().unwrap_or_default());
        return Err(GraphError::VertexSetMismatch(missing));
    }
    let mut seen = vec![false; n + 1];
    let mut pi = Vec::with_capacity(n);
    for label in seq_v {
        let &v = index
            .get(label.as_str())
            .ok_or_else(|| GraphError::VertexSetMismatch(label.clone()))?;
        if seen[v] {
            return Err(GraphError::DuplicateVertex(label.clone()));
        }
        seen[v] = true;
        pi.push(v);
    }
    Ok(PathPair {
        n,
        pi,
        labels: seq_h.to_vec(),
    })
}
