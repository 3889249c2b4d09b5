//! Cycle matroids of multigraphs.

use std::collections::HashMap;

use petgraph::unionfind::UnionFind;

use crate::error::{Result, WorkbenchError};
use crate::subset::ElementSet;

/// Edges of a multigraph with vertices `0..vertex_count`; edge `i` is ground
/// set element `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphicRep {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
}

impl GraphicRep {
    /// Accepts arbitrary vertex labels; they are compressed to `0..V` in
    /// order of first appearance.
    pub fn new(edges: &[(usize, usize)]) -> Result<Self> {
        if edges.is_empty() {
            return Err(WorkbenchError::invalid("graph has no edges"));
        }
        let mut label = HashMap::new();
        let mut relabel = |v: usize| {
            let next = label.len();
            *label.entry(v).or_insert(next)
        };
        let edges: Vec<_> = edges.iter().map(|&(u, v)| (relabel(u), relabel(v))).collect();
        Ok(GraphicRep {
            vertex_count: label.len(),
            edges,
        })
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Size of a spanning forest of the chosen edges.
    pub fn rank(&self, edges: ElementSet) -> usize {
        let mut forest = UnionFind::<usize>::new(self.vertex_count);
        edges
            .iter()
            .filter(|&e| {
                let (u, v) = self.edges[e];
                forest.union(u, v)
            })
            .count()
    }

    /// Delete edges, then identify the endpoints of every contracted edge.
    pub fn minor(&self, deleted: ElementSet, contracted: ElementSet) -> GraphicRep {
        let mut classes = UnionFind::<usize>::new(self.vertex_count);
        for e in contracted.iter() {
            let (u, v) = self.edges[e];
            classes.union(u, v);
        }
        let edges: Vec<(usize, usize)> = (0..self.edges.len())
            .filter(|&e| !deleted.contains(e) && !contracted.contains(e))
            .map(|e| {
                let (u, v) = self.edges[e];
                (classes.find_mut(u), classes.find_mut(v))
            })
            .collect();
        let mut label = HashMap::new();
        let mut relabel = |v: usize| {
            let next = label.len();
            *label.entry(v).or_insert(next)
        };
        let edges: Vec<_> = edges.into_iter().map(|(u, v)| (relabel(u), relabel(v))).collect();
        GraphicRep {
            vertex_count: label.len(),
            edges,
        }
    }
}
