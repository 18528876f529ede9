//! Hasse graphs: nodes in canonical order, edges as `(lower, upper)` cover pairs.
//!
//! For `C_n` covers are found by probing: `b` covers `a` exactly when the
//! corner sums of `b` are those of `a` with one interior entry lowered by 1.
//! Arbitrary subsets use the transitive reduction of the comparability relation.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use super::poset::{bfs_depths, longest_path_lengths, topological_order, FinitePoset, LatticeFailure};
use super::ElementKind;
use crate::array::{CornerSumHypermatrix, Hypermatrix, LatinSquare};
use crate::notation::grid_notation;
use crate::rank::rank_of_corner_sum;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HasseGraph {
    pub kind: ElementKind,
    pub n: usize,
    pub nodes: Vec<Hypermatrix>,
    /// Rank of each node, `m(n)` minus its corner-sum total.
    pub ranks: Vec<i64>,
    pub edges: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LatticeCheck {
    pub is_lattice: bool,
    pub witness: Option<LatticeFailure>,
}

fn node_rank(a: &Hypermatrix) -> i64 {
    CornerSumHypermatrix::from_hypermatrix(a).map(|c| rank_of_corner_sum(&c)).unwrap_or(i64::MIN)
}

/// Generic construction: transitive reduction of `leq` over `nodes`.
pub fn build_hasse(kind: ElementKind, nodes: Vec<Hypermatrix>, leq: impl Fn(usize, usize) -> bool) -> HasseGraph {
    let n = nodes.first().map_or(0, Hypermatrix::order);
    let poset = FinitePoset::from_leq(nodes.len(), leq);
    let edges = poset.cover_pairs();
    let ranks = nodes.iter().map(node_rank).collect();
    HasseGraph { kind, n, nodes, ranks, edges }
}

/// Hasse graph of a set of hypermatrices in the preimage of `C_n`, ordered by
/// corner-sum domination.
pub fn build_hasse_by_corner_sums(kind: ElementKind, nodes: Vec<Hypermatrix>) -> HasseGraph {
    let sums: Vec<CornerSumHypermatrix> = nodes
        .iter()
        .map(|a| CornerSumHypermatrix::from_hypermatrix(a).expect("nodes lie in the preimage of C_n"))
        .collect();
    build_hasse(kind, nodes, |a, b| sums[a].as_array().dominates(sums[b].as_array()))
}

/// Hasse graph of the Latin squares, in the given order.
pub fn build_hasse_latin(squares: &[LatinSquare]) -> HasseGraph {
    build_hasse_by_corner_sums(ElementKind::Latin, squares.iter().map(LatinSquare::to_hypermatrix).collect())
}

/// Fast path for the whole lattice `C_n` (or any subset closed under the
/// relevant covers): neighbor probing against a hash index.
pub fn build_hasse_lattice(elements: &[CornerSumHypermatrix]) -> HasseGraph {
    let n = elements.first().map_or(0, CornerSumHypermatrix::order);
    let index: HashMap<&[i32], usize> = elements.iter().enumerate().map(|(i, c)| (c.entries(), i)).collect();
    let mut edges: Vec<(usize, usize)> = elements
        .par_iter()
        .enumerate()
        .flat_map_iter(|(a, c)| {
            let mut probe = c.entries().to_vec();
            let mut found = Vec::new();
            for pos in 0..probe.len() {
                probe[pos] -= 1;
                if let Some(&b) = index.get(probe.as_slice()) {
                    found.push((a, b));
                }
                probe[pos] += 1;
            }
            found
        })
        .collect();
    edges.sort_unstable();
    let nodes = elements.iter().map(CornerSumHypermatrix::to_hypermatrix).collect();
    let ranks = elements.iter().map(rank_of_corner_sum).collect();
    HasseGraph { kind: ElementKind::CornerSum, n, nodes, ranks, edges }
}

impl HasseGraph {
    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn poset(&self) -> FinitePoset {
        FinitePoset::from_edges(self.nodes.len(), &self.edges)
    }

    pub fn is_acyclic(&self) -> bool {
        topological_order(self.nodes.len(), &self.edges).is_some()
    }

    /// Nodes without lower covers.
    pub fn bottoms(&self) -> Vec<usize> {
        let mut has_lower = vec![false; self.nodes.len()];
        for &(_, b) in &self.edges {
            has_lower[b] = true;
        }
        (0..self.nodes.len()).filter(|&v| !has_lower[v]).collect()
    }

    /// Nodes without upper covers.
    pub fn tops(&self) -> Vec<usize> {
        let mut has_upper = vec![false; self.nodes.len()];
        for &(a, _) in &self.edges {
            has_upper[a] = true;
        }
        (0..self.nodes.len()).filter(|&v| !has_upper[v]).collect()
    }

    /// Breadth-first depth of every node above `root`.
    pub fn depths_from(&self, root: usize) -> Vec<Option<usize>> {
        bfs_depths(self.nodes.len(), &self.edges, root)
    }

    /// Longest chain length, in edges.
    pub fn height(&self) -> usize {
        longest_path_lengths(self.nodes.len(), &self.edges).map_or(0, |l| l.into_iter().max().unwrap_or(0))
    }

    /// Every edge joins ranks differing by exactly one.
    pub fn is_graded_by_rank(&self) -> bool {
        self.edges.iter().all(|&(a, b)| self.ranks[b] - self.ranks[a] == 1)
    }

    fn label(&self, v: usize) -> String {
        let a = &self.nodes[v];
        match self.kind {
            ElementKind::Latin => LatinSquare::from_hypermatrix(a)
                .map(|l| l.to_rows().iter().map(|r| r.iter().map(|s| s.to_string()).collect::<String>()).collect::<Vec<_>>().join(" / "))
                .unwrap_or_else(|_| grid_notation(a).compact()),
            _ => grid_notation(a).compact(),
        }
    }

    /// DOT rendering, drawn bottom-up with one layer per rank.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph hasse {\n  rankdir=BT;\n  node [shape=box, fontname=\"monospace\"];\n");
        for v in 0..self.nodes.len() {
            out.push_str(&format!("  n{v} [label=\"{}\", rank_value={}];\n", self.label(v).replace('"', "\\\""), self.ranks[v]));
        }
        let mut by_rank: Vec<(i64, usize)> = self.ranks.iter().copied().zip(0..).collect();
        by_rank.sort_unstable();
        for group in by_rank.chunk_by(|x, y| x.0 == y.0) {
            let ids: Vec<String> = group.iter().map(|&(_, v)| format!("n{v}")).collect();
            out.push_str(&format!("  {{ rank=same; {}; }}\n", ids.join("; ")));
        }
        for &(a, b) in &self.edges {
            out.push_str(&format!("  n{a} -> n{b};\n"));
        }
        out.push_str("}\n");
        out
    }

    /// JSON adjacency form with grid-notation labels.
    pub fn to_json(&self) -> serde_json::Value {
        let nodes: Vec<serde_json::Value> = (0..self.nodes.len())
            .map(|v| {
                serde_json::json!({
                    "id": v,
                    "rank": self.ranks[v],
                    "label": self.label(v),
                    "element": self.nodes[v],
                })
            })
            .collect();
        serde_json::json!({
            "kind": self.kind,
            "n": self.n,
            "nodes": nodes,
            "edges": self.edges,
        })
    }
}

/// Whether every pair has a least upper and greatest lower bound, with the
/// first failing pair otherwise.
pub fn is_lattice(h: &HasseGraph) -> LatticeCheck {
    let witness = h.poset().lattice_failure();
    LatticeCheck { is_lattice: witness.is_none() && !h.nodes.is_empty(), witness }
}
