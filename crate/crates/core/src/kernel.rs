//! Kernels of intersecting hypergraphs.
//!
//! A kernel of H is a vertex set A that meets every edge and whose traces
//! {A ∩ e : e ∈ E(H)} are pairwise intersecting (over index pairs, so
//! duplicate edges count). Ker(H) is the minimum size of a kernel.
//!
//! Three routes live here and deliberately stay separate: the certificate
//! check [`is_kernel`], the exact search [`min_kernel_exact`] (size-major
//! lexicographic subset search with pruning), and the closed-form
//! [`kernel_degree_rule`] for 1-intersecting hypergraphs, where the minimum
//! kernel is exactly the set of vertices of degree more than one. A fourth,
//! even plainer route lives in [`crate::oracle::min_kernel_brute`].

use std::collections::BTreeSet;

use thiserror::Error;

use crate::hypergraph::{Hypergraph, VertexId};

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum KernelError {
    #[error("vertex {0} is outside the support of the hypergraph")]
    OutsideSupport(VertexId),
    #[error("kernels are only defined for intersecting hypergraphs")]
    NotIntersecting,
    #[error(
        "support size {support} exceeds the search limit {limit}; \
         best upper bound found: {upper_bound} (inexact)"
    )]
    SupportLimitExceeded {
        support: usize,
        limit: usize,
        /// The full support of an intersecting hypergraph is always a
        /// kernel, so its size certifies an upper bound even when the
        /// exact search is out of budget.
        upper_bound: usize,
    },
    #[error("the degree rule needs a 1-intersecting hypergraph")]
    NotOneIntersecting,
    #[error("the degree rule needs at least two edges, found {0}")]
    DegreeRuleTooFewEdges(usize),
}

/// A candidate subset with the two kernel conditions evaluated separately.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelCertificate {
    pub subset: BTreeSet<VertexId>,
    pub is_transversal: bool,
    pub traces_intersecting: bool,
}

impl KernelCertificate {
    pub fn is_valid(&self) -> bool {
        self.is_transversal && self.traces_intersecting
    }
}

/// Evaluates both kernel conditions for A. Errors if A mentions a vertex
/// outside the support of H.
pub fn is_kernel(
    h: &Hypergraph,
    a: &BTreeSet<VertexId>,
) -> Result<KernelCertificate, KernelError> {
    let support = h.support();
    if let Some(&v) = a.iter().find(|v| !support.contains(v)) {
        return Err(KernelError::OutsideSupport(v));
    }
    let traces: Vec<BTreeSet<VertexId>> = h
        .edges()
        .iter()
        .map(|e| e.iter().filter(|v| a.contains(v)).collect())
        .collect();
    let is_transversal = traces.iter().all(|t| !t.is_empty());
    let mut traces_intersecting = true;
    'pairs: for (i, t) in traces.iter().enumerate() {
        for u in &traces[i + 1..] {
            if t.is_disjoint(u) {
                traces_intersecting = false;
                break 'pairs;
            }
        }
    }
    Ok(KernelCertificate {
        subset: a.clone(),
        is_transversal,
        traces_intersecting,
    })
}

/// Limits for the exact search.
#[derive(Clone, Copy, Debug)]
pub struct KernelBudget {
    /// Maximum support size the search will accept (capped at 64).
    pub support_limit: usize,
    /// Worker count for partitioning the subset space. Any value produces
    /// the same result as a single worker.
    pub workers: usize,
}

impl Default for KernelBudget {
    fn default() -> Self {
        KernelBudget { support_limit: 24, workers: 1 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelResult {
    pub size: usize,
    pub witness: BTreeSet<VertexId>,
}

/// Minimum kernel by exhaustive search: increasing subset size, then
/// lexicographic order over the sorted support, so the reported witness is
/// the lexicographically least one of minimum size. A partial subset dies
/// as soon as some edge can no longer be hit or two already-final traces
/// are disjoint.
pub fn min_kernel_exact(
    h: &Hypergraph,
    budget: &KernelBudget,
) -> Result<KernelResult, KernelError> {
    if !h.is_intersecting() {
        return Err(KernelError::NotIntersecting);
    }
    if h.is_empty() {
        return Ok(KernelResult { size: 0, witness: BTreeSet::new() });
    }
    if h.edge_count() == 1 {
        // both conditions reduce to a non-empty trace
        let v = h.edges()[0].vertices()[0];
        return Ok(KernelResult { size: 1, witness: BTreeSet::from([v]) });
    }
    let support: Vec<VertexId> = h.support().into_iter().collect();
    let n = support.len();
    let limit = budget.support_limit.min(64);
    if n > limit {
        return Err(KernelError::SupportLimitExceeded {
            support: n,
            limit,
            upper_bound: n,
        });
    }
    let index_of = |v: VertexId| support.binary_search(&v).expect("vertex in support");
    // edges as bitmasks over support indices, sorted by their last index so
    // the search can finalize traces as the frontier moves past them
    let mut edges_by_max: Vec<(usize, u64)> = h
        .edges()
        .iter()
        .map(|e| {
            let mask = e.iter().fold(0u64, |m, v| m | 1 << index_of(v));
            (index_of(e.max_vertex()), mask)
        })
        .collect();
    edges_by_max.sort_unstable();
    let search = SizeSearch { n, edges_by_max: &edges_by_max };

    for s in 1..=n {
        let found = if budget.workers > 1 {
            search.run_parallel(s, budget.workers)
        } else {
            search.run_serial(s)
        };
        if let Some(mask) = found {
            let witness: BTreeSet<VertexId> = (0..n)
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| support[i])
                .collect();
            debug_assert!(is_kernel(h, &witness).expect("within support").is_valid());
            return Ok(KernelResult { size: s, witness });
        }
    }
    unreachable!("the full support of an intersecting hypergraph is a kernel");
}

struct SizeSearch<'a> {
    n: usize,
    /// (last support index, vertex mask) per edge, ascending by last index.
    edges_by_max: &'a [(usize, u64)],
}

impl SizeSearch<'_> {
    fn run_serial(&self, s: usize) -> Option<u64> {
        (0..=self.n - s).find_map(|first| self.from_first(s, first))
    }

    /// Partitions the space by the first chosen index and merges in index
    /// order, which reproduces the serial result exactly.
    fn run_parallel(&self, s: usize, workers: usize) -> Option<u64> {
        let firsts: Vec<usize> = (0..=self.n - s).collect();
        let chunk = firsts.len().div_ceil(workers);
        let results: Vec<Option<u64>> = std::thread::scope(|scope| {
            let handles: Vec<_> = firsts
                .chunks(chunk)
                .map(|part| {
                    scope.spawn(move || {
                        part.iter().find_map(|&first| self.from_first(s, first))
                    })
                })
                .collect();
            handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
        });
        results.into_iter().flatten().next()
    }

    fn from_first(&self, s: usize, first: usize) -> Option<u64> {
        let mut finals = Vec::new();
        self.dfs(1 << first, 1, first + 1, s, &mut finals)
    }

    /// `chosen` holds `count` support indices, all below `next`; `finals`
    /// holds the traces of edges entirely below the parent frontier.
    fn dfs(
        &self,
        chosen: u64,
        count: usize,
        next: usize,
        s: usize,
        finals: &mut Vec<u64>,
    ) -> Option<u64> {
        let saved = finals.len();
        let mut fin = saved;
        while fin < self.edges_by_max.len() && self.edges_by_max[fin].0 < next {
            let trace = chosen & self.edges_by_max[fin].1;
            if trace == 0 || finals.iter().any(|&f| f & trace == 0) {
                finals.truncate(saved);
                return None;
            }
            finals.push(trace);
            fin += 1;
        }
        if count == s {
            // the subset is complete, so every remaining trace is final too
            let tail_start = fin;
            for (i, &(_, mask)) in self.edges_by_max[tail_start..].iter().enumerate() {
                let trace = chosen & mask;
                if trace == 0
                    || finals.iter().any(|&f| f & trace == 0)
                    || self.edges_by_max[tail_start..tail_start + i]
                        .iter()
                        .any(|&(_, m)| (chosen & m) & trace == 0)
                {
                    finals.truncate(saved);
                    return None;
                }
            }
            finals.truncate(saved);
            return Some(chosen);
        }
        let need = s - count;
        for i in next..=self.n - need {
            if let Some(hit) = self.dfs(chosen | 1 << i, count + 1, i + 1, s, finals) {
                finals.truncate(saved);
                return Some(hit);
            }
        }
        finals.truncate(saved);
        None
    }
}

/// The minimum kernel of a 1-intersecting hypergraph with at least two
/// edges: exactly the vertices of degree more than one. Any two edges meet
/// in a single vertex, which every kernel must therefore contain, and those
/// shared vertices already form a kernel.
pub fn kernel_degree_rule(h: &Hypergraph) -> Result<BTreeSet<VertexId>, KernelError> {
    if h.edge_count() < 2 {
        return Err(KernelError::DegreeRuleTooFewEdges(h.edge_count()));
    }
    if !h.is_lambda_intersecting(1) {
        return Err(KernelError::NotOneIntersecting);
    }
    Ok(h.degrees()
        .into_iter()
        .filter(|&(_, d)| d >= 2)
        .map(|(v, _)| v)
        .collect())
}
