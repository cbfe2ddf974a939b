//! CPR graphs: vertices are points, and `{i, j}` is an edge of label `k` when `s_k`
//! swaps `i` and `j`.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::cstring::{is_string_group, GeneratorString};
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Edge colours for DOT output, cycled by label.
pub const PALETTE: [&str; 8] = [
    "red", "blue", "darkgreen", "orange", "purple", "brown", "magenta", "cyan",
];

/// An edge-labelled multigraph on vertices `1..=m`. Each edge is `[i, j, k]` with `i < j`
/// and label `k ≥ 1`. JSON form: `{m, edges: [[i, j, k]]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CprGraph {
    pub m: usize,
    pub edges: Vec<[usize; 3]>,
}

impl CprGraph {
    /// Largest label present, `0` for an edgeless graph.
    pub fn max_label(&self) -> usize {
        self.edges.iter().map(|e| e[2]).max().unwrap_or(0)
    }

    pub fn is_connected(&self) -> bool {
        if self.m <= 1 {
            return true;
        }
        let mut parent: Vec<usize> = (0..=self.m).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut components = self.m;
        for &[i, j, _] in &self.edges {
            let (a, b) = (find(&mut parent, i), find(&mut parent, j));
            if a != b {
                parent[a] = b;
                components -= 1;
            }
        }
        components == 1
    }
}

/// The CPR graph of a string group; edges are ordered by label, then by vertex.
pub fn cpr_graph(s: &GeneratorString) -> Result<CprGraph> {
    if !is_string_group(s) {
        return Err(Error::Precondition("CPR graphs are drawn for string groups of involutions".into()));
    }
    let mut edges = Vec::new();
    for (k, g) in s.gens().iter().enumerate() {
        for i in 1..=s.degree() {
            let j = g.image(i);
            if i < j {
                edges.push([i, j, k + 1]);
            }
        }
    }
    Ok(CprGraph { m: s.degree(), edges })
}

/// Rebuilds `(s_1, …, s_r)` on `m` points from a CPR graph. Every label `1..=r` must be a
/// non-empty matching.
pub fn from_cpr(graph: &CprGraph, rank: usize, degree: usize) -> Result<GeneratorString> {
    if graph.m != degree {
        return Err(Error::DegreeMismatch {
            expected: degree,
            found: graph.m,
        });
    }
    let mut pairs: Vec<Vec<(usize, usize)>> = vec![Vec::new(); rank];
    let mut used = vec![vec![false; degree + 1]; rank];
    for &[i, j, k] in &graph.edges {
        if k == 0 || k > rank {
            return Err(Error::InvalidParameter(format!("edge label {k} outside 1..={rank}")));
        }
        for v in [i, j] {
            if v == 0 || v > degree {
                return Err(Error::PointOutOfRange { point: v, degree });
            }
        }
        if i >= j {
            return Err(Error::InvalidParameter(format!("edge [{i}, {j}, {k}] must have i < j")));
        }
        for v in [i, j] {
            if std::mem::replace(&mut used[k - 1][v], true) {
                return Err(Error::NotAMatching { label: k, vertex: v });
            }
        }
        pairs[k - 1].push((i, j));
    }
    if let Some(k) = pairs.iter().position(Vec::is_empty) {
        return Err(Error::InvalidParameter(format!(
            "label {} has no edges, so s_{} would be the identity",
            k + 1,
            k + 1
        )));
    }
    let gens = pairs
        .iter()
        .map(|p| Permutation::from_transpositions(p, degree))
        .collect::<Result<Vec<_>>>()?;
    GeneratorString::new(degree, gens)
}

/// Undirected DOT text: every vertex, then one statement per edge in stored order.
pub fn to_dot(graph: &CprGraph) -> String {
    let mut out = String::from("graph cpr {\n  node [shape=circle];\n");
    for v in 1..=graph.m {
        let _ = writeln!(out, "  {v};");
    }
    for &[i, j, k] in &graph.edges {
        let colour = PALETTE[(k.max(1) - 1) % PALETTE.len()];
        let _ = writeln!(out, "  {i} -- {j} [label={k}, color={colour}];");
    }
    out.push_str("}\n");
    out
}
