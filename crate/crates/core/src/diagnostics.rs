//! Executable structural checks for lambda-intersecting uniform inputs:
//! the per-edge vertex count bound, the degree residual inequality, the
//! low/heavy degree dichotomy, and the bound on edge count in terms of the
//! number of heavy vertices. On any valid input every check passes; a
//! failure indicates a bug in the caller or in this crate, never an
//! acceptable state.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::hypergraph::{Hypergraph, VertexId};

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum DiagnosticsError {
    #[error("lambda must be positive")]
    LambdaNotPositive,
    #[error("at least one edge is required")]
    NoEdges,
    #[error("input must be uniform")]
    NotUniform,
    #[error("lambda {lambda} must be below the uniformity {k}")]
    LambdaNotBelowUniformity { lambda: u64, k: u64 },
    #[error("input is not {lambda}-intersecting")]
    NotLambdaIntersecting { lambda: u64 },
    #[error("vertex {0} is not in the support")]
    VertexNotInSupport(VertexId),
    #[error("the degree dichotomy needs at least {required} edges, found {m}")]
    TooFewEdgesForDichotomy { m: u64, required: u64 },
    #[error("sunflowers are excluded from this check")]
    IsSunflower,
}

/// The shared hypothesis of every check here: a lambda-intersecting
/// k-uniform hypergraph with at least one edge, mu = k - lambda.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LambdaProfile {
    pub lambda: u64,
    pub mu: u64,
    pub k: u64,
    pub m: u64,
}

impl LambdaProfile {
    pub fn new(h: &Hypergraph, lambda: u64) -> Result<Self, DiagnosticsError> {
        if lambda < 1 {
            return Err(DiagnosticsError::LambdaNotPositive);
        }
        if h.is_empty() {
            return Err(DiagnosticsError::NoEdges);
        }
        let k = h.uniformity().ok_or(DiagnosticsError::NotUniform)? as u64;
        if lambda >= k {
            return Err(DiagnosticsError::LambdaNotBelowUniformity { lambda, k });
        }
        if !h.is_lambda_intersecting(lambda as usize) {
            return Err(DiagnosticsError::NotLambdaIntersecting { lambda });
        }
        Ok(LambdaProfile {
            lambda,
            mu: k - lambda,
            k,
            m: h.edge_count() as u64,
        })
    }
}

/// order <= mu*m + lambda: each edge beyond the first contributes at most
/// mu new vertices. Holds for every valid input.
pub fn edge_vertex_bound_check(h: &Hypergraph, lambda: u64) -> Result<bool, DiagnosticsError> {
    let p = LambdaProfile::new(h, lambda)?;
    Ok(h.order() as u64 <= p.mu * p.m + p.lambda)
}

/// The exact residual (d - mu)(mu + lambda*m) - lambda*d^2 for one vertex;
/// nonpositive on every valid input.
pub fn mccarthy_vanstone_residual(
    h: &Hypergraph,
    lambda: u64,
    v: VertexId,
) -> Result<i128, DiagnosticsError> {
    let p = LambdaProfile::new(h, lambda)?;
    let d = h.degree(v) as i128;
    if d == 0 {
        return Err(DiagnosticsError::VertexNotInSupport(v));
    }
    let (mu, lambda, m) = (p.mu as i128, p.lambda as i128, p.m as i128);
    Ok((d - mu) * (mu + lambda * m) - lambda * d * d)
}

/// Largest residual over the support.
pub fn mccarthy_vanstone_max(h: &Hypergraph, lambda: u64) -> Result<i128, DiagnosticsError> {
    LambdaProfile::new(h, lambda)?;
    h.support()
        .into_iter()
        .map(|v| mccarthy_vanstone_residual(h, lambda, v))
        .try_fold(i128::MIN, |acc, r| Ok(acc.max(r?)))
}

/// True iff every vertex has a nonpositive residual.
pub fn mccarthy_vanstone_check(h: &Hypergraph, lambda: u64) -> Result<bool, DiagnosticsError> {
    Ok(mccarthy_vanstone_max(h, lambda)? <= 0)
}

/// Support split by degree: low is 10d <= 11*mu, heavy is
/// 10d >= 10m - 11*mu. With m >= 20*mu the two cannot overlap, and on a
/// valid input nothing falls in between.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeClassification {
    pub low: BTreeSet<VertexId>,
    pub heavy: BTreeSet<VertexId>,
    pub violations: BTreeSet<VertexId>,
}

pub fn classify_degrees(
    h: &Hypergraph,
    lambda: u64,
) -> Result<DegreeClassification, DiagnosticsError> {
    let p = LambdaProfile::new(h, lambda)?;
    if p.m < 20 * p.mu {
        return Err(DiagnosticsError::TooFewEdgesForDichotomy {
            m: p.m,
            required: 20 * p.mu,
        });
    }
    let mut out = DegreeClassification {
        low: BTreeSet::new(),
        heavy: BTreeSet::new(),
        violations: BTreeSet::new(),
    };
    for (v, d) in h.degrees() {
        let d = d as u64;
        if 10 * d <= 11 * p.mu {
            out.low.insert(v);
        } else if 10 * d + 11 * p.mu >= 10 * p.m {
            out.heavy.insert(v);
        } else {
            out.violations.insert(v);
        }
    }
    Ok(out)
}

/// With t = number of heavy vertices: t < lambda forces m <= 2*mu^2, and
/// t >= lambda forces m <= 3*lambda*mu. Requires a non-sunflower input
/// with m >= 20*mu.
pub fn heavy_edge_bound_check(h: &Hypergraph, lambda: u64) -> Result<bool, DiagnosticsError> {
    let p = LambdaProfile::new(h, lambda)?;
    if h.is_sunflower() {
        return Err(DiagnosticsError::IsSunflower);
    }
    let classes = classify_degrees(h, lambda)?;
    let t = classes.heavy.len() as u64;
    Ok(if t < p.lambda {
        p.m <= 2 * p.mu * p.mu
    } else {
        p.m <= 3 * p.lambda * p.mu
    })
}
