//! Set pair systems: pairs (e_i, f_i) with e_i disjoint from f_i and e_i
//! meeting every other f_j. Includes the tree machinery behind the order
//! bound for (2,n)-bounded 1-cross-intersecting systems: odd-distance sets,
//! the bipartition sum identity, the A-side shape classifier, and a builder
//! that completes a forest to a canonical system of maximal order.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::Deserialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::bounds::{sps_order_bound, sps_size_bound, BoundEntry, BoundStatus, Verdict};
use crate::hypergraph::VertexId;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum SpsError {
    #[error("pair {index}: a-set must have size 2, found {size}")]
    ASetSizeNot2 { index: usize, size: usize },
    #[error("own sets of some pair intersect or a cross pair is disjoint")]
    NotSetPairSystem,
    #[error("system is not ({a},{b})-bounded")]
    NotBounded { a: usize, b: usize },
    #[error("some cross pair shares more than one vertex")]
    NotOneCrossIntersecting,
    #[error("pair {index}: forced b-set already has {size} vertices, limit {limit}")]
    BSetOverflow { index: usize, size: usize, limit: usize },
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum TreeError {
    #[error("a tree needs at least one vertex")]
    Empty,
    #[error("edge {0}-{1} repeats")]
    DuplicateEdge(VertexId, VertexId),
    #[error("loop at vertex {0}")]
    LoopEdge(VertexId),
    #[error("edge endpoint {0} is not a listed vertex")]
    UnknownEndpoint(VertexId),
    #[error("{vertices} vertices need exactly {} edges, found {edges}", vertices - 1)]
    WrongEdgeCount { vertices: usize, edges: usize },
    #[error("not connected")]
    Disconnected,
    #[error("edge index {index} out of range, tree has {count} edges")]
    EdgeIndexOutOfRange { index: usize, count: usize },
}

/// One pair: an A-side set and its paired B-side set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetPair {
    pub a: BTreeSet<VertexId>,
    pub b: BTreeSet<VertexId>,
}

impl SetPair {
    pub fn from_ids(a: impl IntoIterator<Item = u64>, b: impl IntoIterator<Item = u64>) -> Self {
        SetPair {
            a: a.into_iter().map(VertexId).collect(),
            b: b.into_iter().map(VertexId).collect(),
        }
    }
}

/// An indexed list of set pairs; index i links e_i to f_i.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SetPairSystem {
    pairs: Vec<SetPair>,
}

impl SetPairSystem {
    pub fn new(pairs: Vec<SetPair>) -> Self {
        SetPairSystem { pairs }
    }

    pub fn from_id_pairs(pairs: Vec<(Vec<u64>, Vec<u64>)>) -> Self {
        SetPairSystem {
            pairs: pairs
                .into_iter()
                .map(|(a, b)| SetPair::from_ids(a, b))
                .collect(),
        }
    }

    pub fn pairs(&self) -> &[SetPair] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "pairs": self
                .pairs
                .iter()
                .map(|p| {
                    json!({
                        "a": p.a.iter().map(|v| v.0).collect::<Vec<_>>(),
                        "b": p.b.iter().map(|v| v.0).collect::<Vec<_>>(),
                    })
                })
                .collect::<Vec<_>>(),
        })
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        #[derive(Deserialize)]
        struct PairDto {
            a: Vec<u64>,
            b: Vec<u64>,
        }
        #[derive(Deserialize)]
        struct SystemDto {
            pairs: Vec<PairDto>,
        }
        let dto: SystemDto = serde_json::from_str(text)?;
        Ok(SetPairSystem::from_id_pairs(
            dto.pairs.into_iter().map(|p| (p.a, p.b)).collect(),
        ))
    }
}

/// True iff e_i is disjoint from f_i for every i and e_i meets f_j for
/// every i != j.
pub fn verify_sps(s: &SetPairSystem) -> bool {
    let pairs = s.pairs();
    for (i, pi) in pairs.iter().enumerate() {
        for (j, pj) in pairs.iter().enumerate() {
            let shared = pi.a.intersection(&pj.b).count();
            if i == j && shared != 0 {
                return false;
            }
            if i != j && shared == 0 {
                return false;
            }
        }
    }
    true
}

/// True iff every A-set has size at most a and every B-set size at most b.
pub fn is_bounded(s: &SetPairSystem, a: usize, b: usize) -> bool {
    s.pairs().iter().all(|p| p.a.len() <= a && p.b.len() <= b)
}

/// True iff every cross pair shares exactly one vertex. Requires a valid
/// set pair system.
pub fn is_one_cross_intersecting(s: &SetPairSystem) -> Result<bool, SpsError> {
    if !verify_sps(s) {
        return Err(SpsError::NotSetPairSystem);
    }
    let pairs = s.pairs();
    for (i, pi) in pairs.iter().enumerate() {
        for (j, pj) in pairs.iter().enumerate() {
            if i != j && pi.a.intersection(&pj.b).count() != 1 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Number of distinct vertices appearing in any set of the system.
pub fn sps_order(s: &SetPairSystem) -> usize {
    let mut support = BTreeSet::new();
    for p in s.pairs() {
        support.extend(p.a.iter().copied());
        support.extend(p.b.iter().copied());
    }
    support.len()
}

// ---------------------------------------------------------------------------
// trees

/// A finite tree: validated connected and acyclic on construction. Edge
/// indices refer to the order edges were supplied in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tree {
    vertices: BTreeSet<VertexId>,
    edges: Vec<(VertexId, VertexId)>,
}

impl Tree {
    pub fn new(
        vertices: BTreeSet<VertexId>,
        edges: Vec<(VertexId, VertexId)>,
    ) -> Result<Self, TreeError> {
        if vertices.is_empty() {
            return Err(TreeError::Empty);
        }
        let mut normalized = Vec::with_capacity(edges.len());
        let mut seen = BTreeSet::new();
        for (x, y) in edges {
            if x == y {
                return Err(TreeError::LoopEdge(x));
            }
            for v in [x, y] {
                if !vertices.contains(&v) {
                    return Err(TreeError::UnknownEndpoint(v));
                }
            }
            let pair = (x.min(y), x.max(y));
            if !seen.insert(pair) {
                return Err(TreeError::DuplicateEdge(pair.0, pair.1));
            }
            normalized.push(pair);
        }
        if normalized.len() != vertices.len() - 1 {
            return Err(TreeError::WrongEdgeCount {
                vertices: vertices.len(),
                edges: normalized.len(),
            });
        }
        let tree = Tree {
            vertices,
            edges: normalized,
        };
        let start = *tree.vertices.iter().next().expect("nonempty");
        if tree.distances_from(&[start]).len() != tree.vertices.len() {
            return Err(TreeError::Disconnected);
        }
        Ok(tree)
    }

    /// Tree spanned by an edge list; the vertex set is the union of
    /// endpoints.
    pub fn from_edge_ids(edges: Vec<(u64, u64)>) -> Result<Self, TreeError> {
        let edges: Vec<(VertexId, VertexId)> = edges
            .into_iter()
            .map(|(x, y)| (VertexId(x), VertexId(y)))
            .collect();
        let vertices = edges.iter().flat_map(|&(x, y)| [x, y]).collect();
        Tree::new(vertices, edges)
    }

    /// Star with the given center and leaves.
    pub fn star(center: u64, leaves: impl IntoIterator<Item = u64>) -> Result<Self, TreeError> {
        Tree::from_edge_ids(leaves.into_iter().map(|l| (center, l)).collect())
    }

    /// Path along the given vertices in order.
    pub fn path(vertices: &[u64]) -> Result<Self, TreeError> {
        if vertices.len() == 1 {
            let mut set = BTreeSet::new();
            set.insert(VertexId(vertices[0]));
            return Tree::new(set, Vec::new());
        }
        Tree::from_edge_ids(vertices.windows(2).map(|w| (w[0], w[1])).collect())
    }

    pub fn vertices(&self) -> &BTreeSet<VertexId> {
        &self.vertices
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    fn adjacency(&self) -> BTreeMap<VertexId, Vec<VertexId>> {
        let mut adj: BTreeMap<VertexId, Vec<VertexId>> = BTreeMap::new();
        for v in &self.vertices {
            adj.entry(*v).or_default();
        }
        for &(x, y) in &self.edges {
            adj.get_mut(&x).expect("endpoint listed").push(y);
            adj.get_mut(&y).expect("endpoint listed").push(x);
        }
        adj
    }

    /// BFS distances from a set of sources (distance to the nearest one).
    fn distances_from(&self, sources: &[VertexId]) -> BTreeMap<VertexId, usize> {
        let adj = self.adjacency();
        let mut dist = BTreeMap::new();
        let mut queue = VecDeque::new();
        for &s in sources {
            dist.insert(s, 0usize);
            queue.push_back(s);
        }
        while let Some(v) = queue.pop_front() {
            let d = dist[&v];
            for &u in &adj[&v] {
                if let std::collections::btree_map::Entry::Vacant(slot) = dist.entry(u) {
                    slot.insert(d + 1);
                    queue.push_back(u);
                }
            }
        }
        dist
    }

    /// The two color classes; the first contains the least vertex.
    pub fn bipartition(&self) -> (BTreeSet<VertexId>, BTreeSet<VertexId>) {
        let least = *self.vertices.iter().next().expect("nonempty");
        let dist = self.distances_from(&[least]);
        let mut even = BTreeSet::new();
        let mut odd = BTreeSet::new();
        for (&v, &d) in &dist {
            if d % 2 == 0 {
                even.insert(v);
            } else {
                odd.insert(v);
            }
        }
        (even, odd)
    }

    /// The smaller color class; ties go to the class of the least vertex.
    pub fn smaller_class(&self) -> BTreeSet<VertexId> {
        let (b, w) = self.bipartition();
        if w.len() < b.len() {
            w
        } else {
            b
        }
    }
}

/// Vertices whose distance to the edge (the minimum over its endpoints) is
/// odd. The endpoints themselves are at distance zero.
pub fn odd_distance_set(tree: &Tree, edge: usize) -> Result<BTreeSet<VertexId>, TreeError> {
    let &(x, y) = tree
        .edges()
        .get(edge)
        .ok_or(TreeError::EdgeIndexOutOfRange {
            index: edge,
            count: tree.edge_count(),
        })?;
    let dist = tree.distances_from(&[x, y]);
    Ok(dist
        .into_iter()
        .filter(|&(_, d)| d % 2 == 1)
        .map(|(v, _)| v)
        .collect())
}

/// Sums |odd_distance_set| over all edges and returns (sum, b, w) where b
/// and w are the color class sizes, b being the class of the least vertex.
/// The sum always equals b(b-1) + w(w-1), hence is at least floor(t^2/2)
/// for a tree with t edges.
pub fn tree_odd_sum(tree: &Tree) -> (u64, u64, u64) {
    let mut sum = 0u64;
    for i in 0..tree.edge_count() {
        sum += odd_distance_set(tree, i).expect("index in range").len() as u64;
    }
    let (b, w) = tree.bipartition();
    let (b, w) = (b.len() as u64, w.len() as u64);
    debug_assert_eq!(sum, b * b.saturating_sub(1) + w * w.saturating_sub(1));
    (sum, b, w)
}

// ---------------------------------------------------------------------------
// A-side shape

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AGraphClass {
    OddCycle { length: usize },
    Forest { components: usize },
    Other,
}

/// Classifies the graph formed by the A-sets. The whole graph must be a
/// single odd cycle or a forest; anything else is `Other`, which a valid
/// (2,n)-bounded 1-cross-intersecting system never produces.
pub fn classify_a_graph(s: &SetPairSystem) -> Result<AGraphClass, SpsError> {
    let mut edges = Vec::with_capacity(s.len());
    for (index, p) in s.pairs().iter().enumerate() {
        if p.a.len() != 2 {
            return Err(SpsError::ASetSizeNot2 {
                index,
                size: p.a.len(),
            });
        }
        let mut it = p.a.iter();
        edges.push((*it.next().expect("size 2"), *it.next().expect("size 2")));
    }
    let mut adj: BTreeMap<VertexId, Vec<VertexId>> = BTreeMap::new();
    for &(x, y) in &edges {
        adj.entry(x).or_default().push(y);
        adj.entry(y).or_default().push(x);
    }
    let mut seen = BTreeSet::new();
    let mut components = 0usize;
    let mut all_trees = true;
    for &start in adj.keys() {
        if !seen.insert(start) {
            continue;
        }
        components += 1;
        let mut stack = vec![start];
        let mut component = vec![start];
        while let Some(v) = stack.pop() {
            for &u in &adj[&v] {
                if seen.insert(u) {
                    component.push(u);
                    stack.push(u);
                }
            }
        }
        let vertex_count = component.len();
        // degree sum counts parallel A-sets with multiplicity
        let edge_count: usize = component.iter().map(|v| adj[v].len()).sum::<usize>() / 2;
        if edge_count != vertex_count - 1 {
            all_trees = false;
        }
    }
    if all_trees {
        return Ok(AGraphClass::Forest { components });
    }
    if components == 1 {
        let vertex_count = adj.len();
        let degrees_two = adj.values().all(|nb| nb.len() == 2);
        let no_duplicates = {
            let mut seen = BTreeSet::new();
            edges
                .iter()
                .all(|&(x, y)| seen.insert((x.min(y), x.max(y))))
        };
        if degrees_two && no_duplicates && edges.len() == vertex_count && vertex_count % 2 == 1 {
            return Ok(AGraphClass::OddCycle {
                length: vertex_count,
            });
        }
    }
    Ok(AGraphClass::Other)
}

// ---------------------------------------------------------------------------
// report

/// Measurements and bound comparisons for a (2,n)-bounded
/// 1-cross-intersecting system.
#[derive(Clone, Debug)]
pub struct SpsReport {
    pub n: u64,
    pub pair_count: u64,
    pub order: u64,
    /// None when some A-set has size below 2, where the graph view does
    /// not apply. The bounds still do.
    pub a_class: Option<AGraphClass>,
    pub entries: Vec<BoundEntry>,
}

impl SpsReport {
    pub fn all_theorems_hold(&self) -> bool {
        !self.entries.iter().any(|e| {
            e.applicable
                && e.status == BoundStatus::Theorem
                && e.verdict == Some(Verdict::Violated)
        })
    }

    pub fn to_json(&self) -> Value {
        let a_class = match &self.a_class {
            Some(AGraphClass::OddCycle { length }) => {
                json!({"shape": "odd-cycle", "length": length})
            }
            Some(AGraphClass::Forest { components }) => {
                json!({"shape": "forest", "components": components})
            }
            Some(AGraphClass::Other) => json!({"shape": "other"}),
            None => Value::Null,
        };
        json!({
            "stats": {
                "n": self.n,
                "pair_count": self.pair_count,
                "order": self.order,
                "a_graph": a_class,
            },
            "bounds": self.entries.iter().map(|e| e.to_json()).collect::<Vec<_>>(),
        })
    }
}

/// Compares pair count and order of a (2,n)-bounded 1-cross-intersecting
/// system against the closed-form maxima. The pair-count bound only exists
/// for n >= 4 and is listed as not-applicable below that.
pub fn sps_report(s: &SetPairSystem, n: usize) -> Result<SpsReport, SpsError> {
    if !is_bounded(s, 2, n) {
        return Err(SpsError::NotBounded { a: 2, b: n });
    }
    if !is_one_cross_intersecting(s)? {
        return Err(SpsError::NotOneCrossIntersecting);
    }
    let pair_count = s.len() as u64;
    let order = sps_order(s) as u64;
    let a_class = classify_a_graph(s).ok();
    let mut entries = Vec::new();
    let size_value = sps_size_bound(n as u64).ok();
    entries.push(BoundEntry {
        bound: "sps-size",
        status: BoundStatus::Theorem,
        applicable: size_value.is_some(),
        verdict: size_value.as_ref().map(|v| v.verdict(pair_count)),
        value: size_value,
        measured: Some(pair_count),
    });
    let order_value = sps_order_bound(n as u64).ok();
    entries.push(BoundEntry {
        bound: "sps-order",
        status: BoundStatus::Theorem,
        applicable: order_value.is_some(),
        verdict: order_value.as_ref().map(|v| v.verdict(order)),
        value: order_value,
        measured: Some(order),
    });
    Ok(SpsReport {
        n: n as u64,
        pair_count,
        order,
        a_class,
        entries,
    })
}

// ---------------------------------------------------------------------------
// canonical completion of a forest

/// Completes a forest into the canonical (2,n)-bounded 1-cross-intersecting
/// system of maximal order with that A-side: every tree edge becomes an
/// A-set, and its B-set is forced inside the forest (the odd-distance
/// vertices of its own tree plus one color class of every other tree, the
/// smaller one) and padded with fresh vertices to size exactly n.
pub fn canonical_sps_from_forest(
    trees: &[Tree],
    n: usize,
) -> Result<SetPairSystem, SpsError> {
    let mut fresh = trees
        .iter()
        .flat_map(|t| t.vertices().iter())
        .map(|v| v.0 + 1)
        .max()
        .unwrap_or(0);
    let mut pairs = Vec::new();
    let mut index = 0usize;
    for (i, tree) in trees.iter().enumerate() {
        for e in 0..tree.edge_count() {
            let (x, y) = tree.edges()[e];
            let mut b: BTreeSet<VertexId> =
                odd_distance_set(tree, e).expect("index in range");
            for (j, other) in trees.iter().enumerate() {
                if j != i {
                    b.extend(other.smaller_class());
                }
            }
            if b.len() > n {
                return Err(SpsError::BSetOverflow {
                    index,
                    size: b.len(),
                    limit: n,
                });
            }
            while b.len() < n {
                b.insert(VertexId(fresh));
                fresh += 1;
            }
            pairs.push(SetPair {
                a: [x, y].into_iter().collect(),
                b,
            });
            index += 1;
        }
    }
    Ok(SetPairSystem::new(pairs))
}
