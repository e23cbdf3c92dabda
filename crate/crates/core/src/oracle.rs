//! Brute-force ground truth at desk scale. Everything here is deliberately
//! simple and budgeted: exhaustive enumeration of uniform families on a
//! tiny ground set, a kernel search with no cleverness beyond the
//! definition, and labeled-tree enumeration. The fast paths elsewhere are
//! validated against these, never the other way around.

use itertools::Itertools;

use thiserror::Error;

use crate::hypergraph::{Edge, Hypergraph};
use crate::kernel::is_kernel;
use crate::sps::Tree;

/// Hard cap on the ground set: C(12, 6) = 924 candidate edges.
pub const GROUND_SET_LIMIT: usize = 12;
/// Hard cap for the plain kernel search.
pub const BRUTE_SUPPORT_LIMIT: usize = 20;
/// Hard cap for labeled-tree enumeration (10^8 trees at the top).
pub const TREE_LIMIT: usize = 10;
/// Default node budget for family enumeration.
pub const DEFAULT_NODE_BUDGET: u64 = 1 << 20;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("ground set size {n_max} exceeds the enumeration limit {GROUND_SET_LIMIT}")]
    GroundSetTooLarge { n_max: usize },
    #[error("uniformity must be positive and at most the ground set size {n_max}, got {k}")]
    BadUniformity { k: usize, n_max: usize },
    #[error("search exceeded its budget of {budget} nodes")]
    BudgetExceeded { budget: u64 },
    #[error("support size {support} exceeds the brute-force limit {BRUTE_SUPPORT_LIMIT}")]
    SupportTooLarge { support: usize },
    #[error("input must be intersecting")]
    NotIntersecting,
    #[error("tree enumeration handles 1 to {TREE_LIMIT} vertices, got {n}")]
    TreeCountOutOfRange { n: usize },
}

/// A named filter on families. The first three are checked edge by edge
/// while the search extends a family; `NonSunflower` is not hereditary
/// (sub-families of a non-sunflower can be sunflowers) and is only applied
/// when a family is reported.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Predicate {
    Intersecting,
    LambdaIntersecting(usize),
    MaxDegreeAtMost(usize),
    NonSunflower,
}

/// Enumeration space: families of k-subsets of {1, ..., n_max}.
#[derive(Clone, Debug)]
pub struct SearchSpace {
    pub k: usize,
    pub n_max: usize,
    pub m_max: usize,
    pub predicates: Vec<Predicate>,
    pub budget: u64,
}

impl SearchSpace {
    pub fn new(k: usize, n_max: usize) -> Self {
        SearchSpace {
            k,
            n_max,
            m_max: usize::MAX,
            predicates: Vec::new(),
            budget: DEFAULT_NODE_BUDGET,
        }
    }

    pub fn with_predicate(mut self, p: Predicate) -> Self {
        self.predicates.push(p);
        self
    }

    pub fn with_m_max(mut self, m_max: usize) -> Self {
        self.m_max = m_max;
        self
    }

    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }

    fn validate(&self) -> Result<(), OracleError> {
        if self.n_max > GROUND_SET_LIMIT {
            return Err(OracleError::GroundSetTooLarge { n_max: self.n_max });
        }
        if self.k < 1 || self.k > self.n_max {
            return Err(OracleError::BadUniformity {
                k: self.k,
                n_max: self.n_max,
            });
        }
        Ok(())
    }
}

/// Result of an exhaustive maximum search.
#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub best: usize,
    /// First maximizer in enumeration order, which is the
    /// lexicographically least one. Empty when nothing passes.
    pub witness: Hypergraph,
    pub nodes: u64,
}

struct Engine<'u, F> {
    universe: &'u [Edge],
    masks: &'u [u16],
    hereditary: Vec<Predicate>,
    need_non_sunflower: bool,
    m_max: usize,
    budget: u64,
    nodes: u64,
    chosen: Vec<usize>,
    degrees: [u32; GROUND_SET_LIMIT + 1],
    visit: F,
}

impl<F: FnMut(&Hypergraph)> Engine<'_, F> {
    fn admits(&self, i: usize) -> bool {
        self.hereditary.iter().all(|p| match *p {
            Predicate::Intersecting => self
                .chosen
                .iter()
                .all(|&j| self.masks[i] & self.masks[j] != 0),
            Predicate::LambdaIntersecting(l) => self
                .chosen
                .iter()
                .all(|&j| (self.masks[i] & self.masks[j]).count_ones() as usize == l),
            Predicate::MaxDegreeAtMost(d) => self.universe[i]
                .vertices()
                .iter()
                .all(|v| self.degrees[v.0 as usize] as usize + 1 <= d),
            Predicate::NonSunflower => true,
        })
    }

    fn recurse(&mut self, start: usize) -> Result<(), OracleError> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(OracleError::BudgetExceeded {
                budget: self.budget,
            });
        }
        if !self.chosen.is_empty() {
            let h = Hypergraph::new(
                self.chosen
                    .iter()
                    .map(|&i| self.universe[i].clone())
                    .collect(),
            );
            if !self.need_non_sunflower || !h.is_sunflower() {
                (self.visit)(&h);
            }
        }
        if self.chosen.len() >= self.m_max {
            return Ok(());
        }
        for i in start..self.universe.len() {
            if self.admits(i) {
                self.chosen.push(i);
                for v in self.universe[i].vertices() {
                    self.degrees[v.0 as usize] += 1;
                }
                self.recurse(i + 1)?;
                self.chosen.pop();
                for v in self.universe[i].vertices() {
                    self.degrees[v.0 as usize] -= 1;
                }
            }
        }
        Ok(())
    }
}

/// Runs `visit` on every nonempty family in the space that passes all
/// predicates, in lexicographic order of edge index sets. Returns the
/// number of enumeration nodes.
pub fn for_each_family<F>(space: &SearchSpace, visit: F) -> Result<u64, OracleError>
where
    F: FnMut(&Hypergraph),
{
    space.validate()?;
    let universe: Vec<Edge> = (1..=space.n_max as u64)
        .combinations(space.k)
        .map(|vs| Edge::from_ids(vs).expect("k >= 1"))
        .collect();
    let masks: Vec<u16> = universe
        .iter()
        .map(|e| {
            e.vertices()
                .iter()
                .fold(0u16, |acc, v| acc | 1 << (v.0 - 1))
        })
        .collect();
    let mut engine = Engine {
        universe: &universe,
        masks: &masks,
        hereditary: space
            .predicates
            .iter()
            .copied()
            .filter(|p| *p != Predicate::NonSunflower)
            .collect(),
        need_non_sunflower: space.predicates.contains(&Predicate::NonSunflower),
        m_max: space.m_max,
        budget: space.budget,
        nodes: 0,
        chosen: Vec::new(),
        degrees: [0; GROUND_SET_LIMIT + 1],
        visit,
    };
    engine.recurse(0)?;
    Ok(engine.nodes)
}

fn maximize(
    space: &SearchSpace,
    score: impl Fn(&Hypergraph) -> usize,
) -> Result<SearchOutcome, OracleError> {
    let mut best: Option<(usize, Hypergraph)> = None;
    let nodes = for_each_family(space, |h| {
        let s = score(h);
        if best.as_ref().is_none_or(|(b, _)| s > *b) {
            best = Some((s, h.clone()));
        }
    })?;
    let (best, witness) = best.unwrap_or((0, Hypergraph::empty()));
    Ok(SearchOutcome {
        best,
        witness,
        nodes,
    })
}

/// Maximum edge count over the space.
pub fn max_size(space: &SearchSpace) -> Result<SearchOutcome, OracleError> {
    maximize(space, Hypergraph::edge_count)
}

/// Maximum order (support size) over the space.
pub fn max_order(space: &SearchSpace) -> Result<SearchOutcome, OracleError> {
    maximize(space, Hypergraph::order)
}

/// Minimum kernel size by plain increasing-size subset enumeration against
/// the kernel definition. Intentionally free of the pruning the exact
/// search uses, so the two can check each other.
pub fn min_kernel_brute(h: &Hypergraph) -> Result<usize, OracleError> {
    if !h.is_intersecting() {
        return Err(OracleError::NotIntersecting);
    }
    let support: Vec<_> = h.support().into_iter().collect();
    if support.len() > BRUTE_SUPPORT_LIMIT {
        return Err(OracleError::SupportTooLarge {
            support: support.len(),
        });
    }
    for size in 0..=support.len() {
        for subset in support.iter().copied().combinations(size) {
            let candidate = subset.into_iter().collect();
            if is_kernel(h, &candidate).expect("subset of support").is_valid() {
                return Ok(size);
            }
        }
    }
    unreachable!("the full support of an intersecting hypergraph is a kernel")
}

/// Number of labeled trees on n vertices, n^(n-2).
pub fn labeled_tree_count(n: usize) -> u64 {
    if n <= 2 {
        1
    } else {
        (n as u64).pow(n as u32 - 2)
    }
}

/// Streaming enumeration of all labeled trees on vertices {1, ..., n}, in
/// lexicographic order of their Pruefer sequences.
pub struct TreeEnumeration {
    n: usize,
    seq: Option<Vec<usize>>,
}

impl TreeEnumeration {
    pub fn expected_count(&self) -> u64 {
        labeled_tree_count(self.n)
    }
}

impl Iterator for TreeEnumeration {
    type Item = Tree;

    fn next(&mut self) -> Option<Tree> {
        let seq = self.seq.as_mut()?;
        let tree = decode_pruefer(self.n, seq);
        let mut exhausted = true;
        for slot in seq.iter_mut().rev() {
            *slot += 1;
            if *slot < self.n {
                exhausted = false;
                break;
            }
            *slot = 0;
        }
        if exhausted {
            self.seq = None;
        }
        Some(tree)
    }

    /// Jumps the odometer by base-n addition instead of stepping, so
    /// sampling a sparse subsequence skips the decode of everything in
    /// between.
    fn nth(&mut self, k: usize) -> Option<Tree> {
        let seq = self.seq.as_mut()?;
        let n = self.n as u64;
        let mut carry = k as u64;
        for slot in seq.iter_mut().rev() {
            if carry == 0 {
                break;
            }
            let total = *slot as u64 + carry;
            *slot = (total % n) as usize;
            carry = total / n;
        }
        if carry > 0 {
            self.seq = None;
            return None;
        }
        self.next()
    }
}

pub fn enumerate_trees(n: usize) -> Result<TreeEnumeration, OracleError> {
    if n < 1 || n > TREE_LIMIT {
        return Err(OracleError::TreeCountOutOfRange { n });
    }
    let len = n.saturating_sub(2);
    Ok(TreeEnumeration {
        n,
        seq: Some(vec![0; len]),
    })
}

/// Classic decode: repeatedly join the smallest remaining leaf to the next
/// sequence entry. Entries are 0-based here; vertex labels are 1-based.
fn decode_pruefer(n: usize, seq: &[usize]) -> Tree {
    if n == 1 {
        return Tree::path(&[1]).expect("single vertex");
    }
    let mut degree = vec![1u32; n + 1];
    for &a in seq {
        degree[a + 1] += 1;
    }
    let mut used = vec![false; n + 1];
    let mut edges = Vec::with_capacity(n - 1);
    for &a in seq {
        let a = a + 1;
        let leaf = (1..=n)
            .find(|&v| degree[v] == 1 && !used[v])
            .expect("a leaf always remains");
        edges.push((leaf as u64, a as u64));
        used[leaf] = true;
        degree[a] -= 1;
    }
    let mut last = (1..=n).filter(|&v| !used[v] && degree[v] == 1);
    let x = last.next().expect("two vertices remain");
    let y = last.next().expect("two vertices remain");
    edges.push((x as u64, y as u64));
    Tree::from_edge_ids(edges).expect("a Pruefer sequence decodes to a tree")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::deza_size_bound;
    use crate::hypergraph::VertexId;
    use crate::kernel::{min_kernel_exact, KernelBudget};
    use num_traits::ToPrimitive;

    fn triangle() -> Hypergraph {
        Hypergraph::from_edge_ids(vec![vec![1, 2], vec![1, 3], vec![2, 3]]).unwrap()
    }

    #[test]
    fn bounded_degree_intersecting_pairs() {
        let space = SearchSpace::new(2, 6)
            .with_predicate(Predicate::Intersecting)
            .with_predicate(Predicate::MaxDegreeAtMost(2));
        let out = max_size(&space).unwrap();
        assert_eq!(out.best, 3);
        assert_eq!(out.witness, triangle());
        let order = max_order(&space).unwrap();
        assert_eq!(order.best, 3);
    }

    #[test]
    fn star_beats_triangle_on_order_at_degree_three() {
        let space = SearchSpace::new(2, 6)
            .with_predicate(Predicate::Intersecting)
            .with_predicate(Predicate::MaxDegreeAtMost(3));
        let out = max_order(&space).unwrap();
        assert_eq!(out.best, 4);
    }

    #[test]
    fn non_sunflower_one_intersecting_pairs_match_bound() {
        let space = SearchSpace::new(2, 5)
            .with_predicate(Predicate::LambdaIntersecting(1))
            .with_predicate(Predicate::NonSunflower);
        let out = max_size(&space).unwrap();
        assert_eq!(out.best, 3);
        let bound = deza_size_bound(2, 1).unwrap();
        assert_eq!(
            bound.exact.unwrap().to_integer().to_u64(),
            Some(out.best as u64)
        );
        assert!(!out.witness.is_sunflower());
        assert!(out.witness.is_lambda_intersecting(1));
    }

    #[test]
    fn fano_is_the_small_scale_maximum() {
        let space = SearchSpace::new(3, 7)
            .with_predicate(Predicate::LambdaIntersecting(1))
            .with_predicate(Predicate::NonSunflower);
        let out = max_size(&space).unwrap();
        assert_eq!(out.best, 7);
        assert_eq!(out.witness.order(), 7);
        assert!(out.witness.is_lambda_intersecting(1));
        assert!(!out.witness.is_sunflower());
        let order = max_order(&space).unwrap();
        assert_eq!(order.best, 7);
    }

    #[test]
    fn budget_is_enforced() {
        let space = SearchSpace::new(2, 6)
            .with_predicate(Predicate::Intersecting)
            .with_budget(10);
        assert_eq!(
            max_size(&space).unwrap_err(),
            OracleError::BudgetExceeded { budget: 10 }
        );
    }

    #[test]
    fn space_validation() {
        assert!(matches!(
            max_size(&SearchSpace::new(3, 13)),
            Err(OracleError::GroundSetTooLarge { n_max: 13 })
        ));
        assert!(matches!(
            max_size(&SearchSpace::new(0, 5)),
            Err(OracleError::BadUniformity { k: 0, n_max: 5 })
        ));
        assert!(matches!(
            max_size(&SearchSpace::new(6, 5)),
            Err(OracleError::BadUniformity { k: 6, n_max: 5 })
        ));
    }

    #[test]
    fn brute_kernel_examples() {
        assert_eq!(min_kernel_brute(&triangle()), Ok(3));
        let fano = crate::geometry::ProjectivePlane::new(2)
            .unwrap()
            .to_hypergraph();
        assert_eq!(min_kernel_brute(&fano), Ok(7));
        let sunflower =
            crate::constructions::sunflower_family(4, 2, 3).unwrap();
        assert_eq!(min_kernel_brute(&sunflower), Ok(1));
        let disjoint = Hypergraph::from_edge_ids(vec![vec![1, 2], vec![3, 4]]).unwrap();
        assert_eq!(min_kernel_brute(&disjoint), Err(OracleError::NotIntersecting));
        let wide = crate::constructions::sunflower_family(3, 1, 11).unwrap();
        assert_eq!(
            min_kernel_brute(&wide),
            Err(OracleError::SupportTooLarge { support: 23 })
        );
    }

    #[test]
    fn brute_kernel_matches_exact_search_on_enumerated_families() {
        let space = SearchSpace::new(2, 4).with_predicate(Predicate::Intersecting);
        let budget = KernelBudget::default();
        let mut seen = 0u64;
        for_each_family(&space, |h| {
            seen += 1;
            let brute = min_kernel_brute(h).unwrap();
            let exact = min_kernel_exact(h, &budget).unwrap();
            assert_eq!(brute, exact.size, "family {:?}", h);
        })
        .unwrap();
        assert!(seen > 10);
    }

    #[test]
    fn tree_counts() {
        for (n, count) in [(1usize, 1u64), (2, 1), (3, 3), (4, 16), (5, 125)] {
            let trees: Vec<Tree> = enumerate_trees(n).unwrap().collect();
            assert_eq!(trees.len() as u64, count);
            assert_eq!(labeled_tree_count(n), count);
            for t in &trees {
                assert_eq!(t.vertices().len(), n);
                assert!(t.vertices().contains(&VertexId(1)));
            }
        }
        assert!(enumerate_trees(0).is_err());
        assert!(enumerate_trees(11).is_err());
    }

    #[test]
    fn trees_are_distinct() {
        let trees: Vec<Tree> = enumerate_trees(4).unwrap().collect();
        for (i, a) in trees.iter().enumerate() {
            for b in &trees[i + 1..] {
                let mut ea: Vec<_> = a.edges().to_vec();
                let mut eb: Vec<_> = b.edges().to_vec();
                ea.sort();
                eb.sort();
                assert_ne!(ea, eb);
            }
        }
    }

    #[test]
    fn nth_jump_matches_sequential_stepping() {
        for n in [1usize, 2, 4, 5] {
            for stride in [1usize, 2, 7] {
                let all: Vec<Tree> = enumerate_trees(n).unwrap().collect();
                let jumped: Vec<Tree> =
                    enumerate_trees(n).unwrap().step_by(stride).collect();
                let walked: Vec<&Tree> = all.iter().step_by(stride).collect();
                assert_eq!(jumped.len(), walked.len());
                for (a, b) in jumped.iter().zip(walked) {
                    assert_eq!(a.edges(), b.edges());
                }
            }
        }
    }
}
