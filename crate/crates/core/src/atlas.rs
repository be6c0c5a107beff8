//! The poset of decomposition classes, restricted to the closure relations
//! certified by natural slices: if `y ∈ S_x` then `x` lies in the closure
//! of the class of `y`.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde_json::{json, Value};

use crate::classes::{class_dimension, enumerate_classes, ClassLabel};
use crate::error::{LieError, Result};
use crate::io::{emit_algebra, emit_label};
use crate::lie::LieAlgebraSpec;
use crate::slices::natural_slice;

pub const ORDER_NOTE: &str = "partial order (certified subset)";

#[derive(Clone, Debug)]
pub struct Atlas {
    pub algebra: LieAlgebraSpec,
    pub nodes: Vec<ClassLabel>,
    pub dims: Vec<usize>,
    /// `(i, j)`: class `i` lies in the closure of class `j`.
    pub edges: BTreeSet<(usize, usize)>,
    pub hasse: BTreeSet<(usize, usize)>,
}

pub fn build_atlas(algebra: LieAlgebraSpec, bound: usize) -> Result<Atlas> {
    if algebra.n > bound {
        return Err(LieError::BoundExceeded { n: algebra.n, bound });
    }
    let nodes = enumerate_classes(algebra);
    let dims = nodes.iter().map(class_dimension).collect::<Result<Vec<_>>>()?;
    let index = |l: &ClassLabel| nodes.iter().position(|m| m == l);
    let mut edges = BTreeSet::new();
    for (i, label) in nodes.iter().enumerate() {
        let desc = natural_slice(&label.representative())?;
        for tuple in &desc.pairs {
            let pairs = tuple.iter().flat_map(|l| l.pairs().iter().cloned()).collect();
            let global = ClassLabel::new(algebra, pairs)?;
            let j = index(&global).ok_or_else(|| LieError::CrossCheckFailed(format!("{global} not enumerated")))?;
            if j != i {
                if dims[j] <= dims[i] {
                    return Err(LieError::CrossCheckFailed(format!("{} is not above {}", nodes[j], nodes[i])));
                }
                edges.insert((i, j));
            }
        }
    }
    let hasse = transitive_reduction(nodes.len(), &edges);
    Ok(Atlas { algebra, nodes, dims, edges, hasse })
}

/// Edges not implied by a path of length two or more. Edges strictly raise
/// dimension, so the relation is acyclic.
fn transitive_reduction(n: usize, edges: &BTreeSet<(usize, usize)>) -> BTreeSet<(usize, usize)> {
    let mut reach = vec![vec![false; n]; n];
    for &(a, b) in edges {
        reach[a][b] = true;
    }
    for k in 0..n {
        for i in 0..n {
            if reach[i][k] {
                for j in 0..n {
                    if reach[k][j] {
                        reach[i][j] = true;
                    }
                }
            }
        }
    }
    edges
        .iter()
        .copied()
        .filter(|&(a, b)| !(0..n).any(|k| k != a && k != b && reach[a][k] && reach[k][b]))
        .collect()
}

impl Atlas {
    pub fn to_json(&self) -> Value {
        let nodes: Vec<Value> = self
            .nodes
            .iter()
            .zip(&self.dims)
            .enumerate()
            .map(|(i, (l, d))| json!({"id": i, "label": emit_label(l), "display": l.to_string(), "dimension": d}))
            .collect();
        let pairs = |s: &BTreeSet<(usize, usize)>| -> Vec<Value> { s.iter().map(|&(a, b)| json!([a, b])).collect() };
        json!({
            "algebra": emit_algebra(self.algebra),
            "order": ORDER_NOTE,
            "nodes": nodes,
            "edges": pairs(&self.edges),
            "hasse": pairs(&self.hasse),
        })
    }

    /// Hasse diagram, smaller classes at the bottom.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        writeln!(out, "digraph classes {{").unwrap();
        writeln!(out, "  label=\"{} decomposition classes: {}\";", self.algebra, ORDER_NOTE).unwrap();
        writeln!(out, "  rankdir=BT;").unwrap();
        writeln!(out, "  node [shape=box];").unwrap();
        for (i, (l, d)) in self.nodes.iter().zip(&self.dims).enumerate() {
            writeln!(out, "  n{i} [label=\"{l}\\ndim {d}\"];").unwrap();
        }
        for (a, b) in &self.hasse {
            writeln!(out, "  n{a} -> n{b};").unwrap();
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gl2_atlas() {
        let a = build_atlas(LieAlgebraSpec::gl(2), 6).unwrap();
        let mut dims = a.dims.clone();
        dims.sort();
        assert_eq!(dims, vec![1, 3, 4]);
        assert_eq!(a.hasse.len(), 2);
        assert_eq!(a.edges.len(), 3);
        let by_dim = |d: usize| a.dims.iter().position(|&x| x == d).unwrap();
        assert!(a.hasse.contains(&(by_dim(3), by_dim(4))));
        assert!(a.to_dot().contains(ORDER_NOTE));
        assert_eq!(build_atlas(LieAlgebraSpec::gl(1), 6).unwrap().nodes.len(), 1);
        assert!(matches!(build_atlas(LieAlgebraSpec::gl(7), 6), Err(LieError::BoundExceeded { .. })));
    }
}
