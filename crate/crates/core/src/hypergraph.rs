//! Finite hypergraphs with integer vertex ids.
//!
//! A hypergraph is an ordered list of edges. Duplicate edges are legal (some
//! families are multigraphs by construction) and every pairwise predicate
//! ranges over index pairs i < j, so duplicates count. The *order* of a
//! hypergraph is the number of distinct non-isolated vertices, i.e. the size
//! of the union of its edges; vertices never mentioned by an edge do not
//! exist as far as this crate is concerned.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

/// Identifier of a vertex: a plain nonnegative integer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub u64);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl From<u64> for VertexId {
    fn from(id: u64) -> Self {
        VertexId(id)
    }
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum HypergraphError {
    #[error("an edge must contain at least one vertex")]
    EmptyEdge,
    #[error("operation is undefined on a hypergraph with no edges")]
    NoEdges,
    #[error("operation requires at least {required} edges, found {found}")]
    TooFewEdges { required: usize, found: usize },
}

/// A nonempty finite set of vertices, stored sorted and duplicate-free.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge(Vec<VertexId>);

impl Edge {
    /// Builds an edge from any iterator of vertices. Repeated mentions of a
    /// vertex collapse: an edge is a set. Errors on an empty vertex list.
    pub fn new(vertices: impl IntoIterator<Item = VertexId>) -> Result<Self, HypergraphError> {
        let mut v: Vec<VertexId> = vertices.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        if v.is_empty() {
            return Err(HypergraphError::EmptyEdge);
        }
        Ok(Edge(v))
    }

    pub fn from_ids(ids: impl IntoIterator<Item = u64>) -> Result<Self, HypergraphError> {
        Edge::new(ids.into_iter().map(VertexId))
    }

    #[allow(clippy::len_without_is_empty)] // an edge is nonempty by construction
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    /// Vertices in ascending order.
    pub fn vertices(&self) -> &[VertexId] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.0.iter().copied()
    }

    pub fn max_vertex(&self) -> VertexId {
        *self.0.last().expect("edge is nonempty")
    }

    /// |self ∩ other| by a merge walk over the two sorted vertex lists.
    pub fn intersection_size(&self, other: &Edge) -> usize {
        let (mut i, mut j, mut n) = (0, 0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    n += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
        n
    }

    pub fn intersection(&self, other: &Edge) -> Vec<VertexId> {
        let mut out = Vec::new();
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    out.push(self.0[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        out
    }
}

/// An ordered list of edges over integer vertex ids.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Hypergraph {
    edges: Vec<Edge>,
}

impl Hypergraph {
    pub fn new(edges: Vec<Edge>) -> Self {
        Hypergraph { edges }
    }

    pub fn empty() -> Self {
        Hypergraph { edges: Vec::new() }
    }

    /// Convenience constructor from raw id lists, mainly for tests and
    /// parsers. Edge order is preserved.
    pub fn from_edge_ids<I, J>(edges: I) -> Result<Self, HypergraphError>
    where
        I: IntoIterator<Item = J>,
        J: IntoIterator<Item = u64>,
    {
        let edges = edges
            .into_iter()
            .map(Edge::from_ids)
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Hypergraph { edges })
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn push(&mut self, e: Edge) {
        self.edges.push(e);
    }

    /// Union of all edges, i.e. the set of non-isolated vertices.
    pub fn support(&self) -> BTreeSet<VertexId> {
        self.edges.iter().flat_map(|e| e.iter()).collect()
    }

    /// Number of non-isolated vertices.
    pub fn order(&self) -> usize {
        self.support().len()
    }

    /// Largest vertex id mentioned by any edge, if there is one. Fresh
    /// vertices are minted strictly above this.
    pub fn max_vertex_id(&self) -> Option<u64> {
        self.edges.iter().map(|e| e.max_vertex().0).max()
    }

    /// Common edge size when all edges have the same size. `None` for
    /// non-uniform hypergraphs and for the empty hypergraph.
    pub fn uniformity(&self) -> Option<usize> {
        let first = self.edges.first()?.len();
        self.edges.iter().all(|e| e.len() == first).then_some(first)
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.edges.iter().filter(|e| e.contains(v)).count()
    }

    /// Degree of every non-isolated vertex.
    pub fn degrees(&self) -> BTreeMap<VertexId, usize> {
        let mut d = BTreeMap::new();
        for e in &self.edges {
            for v in e.iter() {
                *d.entry(v).or_insert(0) += 1;
            }
        }
        d
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().values().copied().max().unwrap_or(0)
    }

    /// Every pair of edges meets. Vacuously true when m <= 1.
    pub fn is_intersecting(&self) -> bool {
        for (i, a) in self.edges.iter().enumerate() {
            for b in &self.edges[i + 1..] {
                if a.intersection_size(b) == 0 {
                    return false;
                }
            }
        }
        true
    }

    /// Every pair of edges meets in exactly `lambda` vertices. Vacuously
    /// true when m <= 1. `lambda = 0` means pairwise disjoint.
    pub fn is_lambda_intersecting(&self, lambda: usize) -> bool {
        for (i, a) in self.edges.iter().enumerate() {
            for b in &self.edges[i + 1..] {
                if a.intersection_size(b) != lambda {
                    return false;
                }
            }
        }
        true
    }

    /// The common pairwise intersection size, if there is one. Needs at
    /// least two edges to be meaningful and errors below that.
    pub fn infer_lambda(&self) -> Result<Option<usize>, HypergraphError> {
        if self.edges.len() < 2 {
            return Err(HypergraphError::TooFewEdges {
                required: 2,
                found: self.edges.len(),
            });
        }
        let first = self.edges[0].intersection_size(&self.edges[1]);
        Ok(self.is_lambda_intersecting(first).then_some(first))
    }

    /// Intersection of all edges. Errors on the empty hypergraph, where the
    /// intersection over zero edges is not a finite set.
    pub fn core(&self) -> Result<BTreeSet<VertexId>, HypergraphError> {
        let mut it = self.edges.iter();
        let first = it.next().ok_or(HypergraphError::NoEdges)?;
        let mut core: BTreeSet<VertexId> = first.iter().collect();
        for e in it {
            core.retain(|&v| e.contains(v));
        }
        Ok(core)
    }

    /// Every pairwise intersection equals the common core. True by
    /// convention when m <= 2: any two edges form a sunflower.
    pub fn is_sunflower(&self) -> bool {
        if self.edges.len() <= 2 {
            return true;
        }
        let core = self.core().expect("m >= 3").len();
        for (i, a) in self.edges.iter().enumerate() {
            for b in &self.edges[i + 1..] {
                // core ⊆ a ∩ b always, so size equality is set equality
                if a.intersection_size(b) != core {
                    return false;
                }
            }
        }
        true
    }

    /// Some vertex lies in every edge. Vacuously true when m = 0.
    pub fn is_trivial_intersecting(&self) -> bool {
        match self.core() {
            Ok(core) => !core.is_empty(),
            Err(_) => true,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hg(edges: &[&[u64]]) -> Hypergraph {
        Hypergraph::from_edge_ids(edges.iter().map(|e| e.iter().copied())).unwrap()
    }

    #[test]
    fn edge_sorts_and_dedups() {
        let e = Edge::from_ids([3, 1, 2, 1]).unwrap();
        assert_eq!(e.vertices(), &[VertexId(1), VertexId(2), VertexId(3)]);
        assert_eq!(e.len(), 3);
    }

    #[test]
    fn empty_edge_is_an_error() {
        assert_eq!(Edge::from_ids([]), Err(HypergraphError::EmptyEdge));
    }

    #[test]
    fn order_counts_distinct_vertices() {
        let h = hg(&[&[1, 2, 3], &[3, 4, 5]]);
        assert_eq!(h.order(), 5);
        assert_eq!(h.edge_count(), 2);
    }

    #[test]
    fn order_of_empty_hypergraph_is_zero() {
        assert_eq!(Hypergraph::empty().order(), 0);
    }

    #[test]
    fn duplicate_edges_both_count() {
        let h = hg(&[&[1, 2], &[1, 2]]);
        assert_eq!(h.edge_count(), 2);
        assert_eq!(h.order(), 2);
        assert_eq!(h.degree(VertexId(1)), 2);
        assert!(h.is_lambda_intersecting(2));
        assert!(!h.is_lambda_intersecting(1));
    }

    #[test]
    fn uniformity_some_iff_all_edges_same_size() {
        assert_eq!(hg(&[&[1, 2], &[3, 4]]).uniformity(), Some(2));
        assert_eq!(hg(&[&[1, 2], &[3, 4, 5]]).uniformity(), None);
        assert_eq!(Hypergraph::empty().uniformity(), None);
    }

    #[test]
    fn max_degree_examples() {
        let star = hg(&[&[1, 2], &[1, 3], &[1, 4]]);
        assert_eq!(star.max_degree(), 3);
        assert_eq!(Hypergraph::empty().max_degree(), 0);
    }

    #[test]
    fn intersecting_examples() {
        assert!(hg(&[&[1, 2], &[2, 3], &[1, 3]]).is_intersecting());
        assert!(!hg(&[&[1, 2], &[3, 4]]).is_intersecting());
        assert!(hg(&[&[1, 2]]).is_intersecting());
        assert!(Hypergraph::empty().is_intersecting());
    }

    #[test]
    fn lambda_intersecting_examples() {
        let triangle = hg(&[&[1, 2], &[2, 3], &[1, 3]]);
        assert!(triangle.is_lambda_intersecting(1));
        assert!(!triangle.is_lambda_intersecting(2));
        assert!(hg(&[&[1, 2], &[3, 4]]).is_lambda_intersecting(0));
    }

    #[test]
    fn infer_lambda_examples() {
        assert_eq!(
            hg(&[&[1, 2], &[2, 3], &[1, 3]]).infer_lambda(),
            Ok(Some(1))
        );
        assert_eq!(hg(&[&[1, 2], &[3, 4]]).infer_lambda(), Ok(Some(0)));
        assert_eq!(
            hg(&[&[1, 2], &[2, 3], &[4, 5]]).infer_lambda(),
            Ok(None)
        );
        assert_eq!(
            hg(&[&[1, 2]]).infer_lambda(),
            Err(HypergraphError::TooFewEdges { required: 2, found: 1 })
        );
    }

    #[test]
    fn core_examples() {
        let sun = hg(&[&[1, 2, 3], &[1, 4, 5], &[1, 6, 7]]);
        assert_eq!(sun.core(), Ok(BTreeSet::from([VertexId(1)])));
        let triangle = hg(&[&[1, 2], &[2, 3], &[1, 3]]);
        assert_eq!(triangle.core(), Ok(BTreeSet::new()));
        assert_eq!(Hypergraph::empty().core(), Err(HypergraphError::NoEdges));
    }

    #[test]
    fn sunflower_examples() {
        assert!(hg(&[&[1, 2, 3], &[1, 4, 5], &[1, 6, 7]]).is_sunflower());
        assert!(!hg(&[&[1, 2], &[2, 3], &[1, 3]]).is_sunflower());
        // two edges always form a sunflower, whatever they share
        assert!(hg(&[&[1, 2], &[3, 4]]).is_sunflower());
        assert!(hg(&[&[1, 2]]).is_sunflower());
        assert!(Hypergraph::empty().is_sunflower());
        // pairwise disjoint edges form a sunflower with empty core
        assert!(hg(&[&[1, 2], &[3, 4], &[5, 6]]).is_sunflower());
    }

    #[test]
    fn trivial_intersecting_examples() {
        assert!(hg(&[&[1, 2], &[1, 3], &[1, 4]]).is_trivial_intersecting());
        assert!(!hg(&[&[1, 2], &[2, 3], &[1, 3]]).is_trivial_intersecting());
        assert!(Hypergraph::empty().is_trivial_intersecting());
    }
}
