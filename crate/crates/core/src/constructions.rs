//! Generators for the extremal families the bounds are tight against,
//! each shipped with a manifest of closed-form predicted statistics so
//! verification never compares a construction against itself.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;
use thiserror::Error;

use crate::geometry::{is_prime, AffinePlane, GeometryError, ProjectivePlane};
use crate::hypergraph::Hypergraph;
use crate::sps::SetPairSystem;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum ConstructionError {
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error("maximum degree {delta} admits no line copies, need at least {required}")]
    DegreeTooSmall { delta: u64, required: u64 },
    #[error("uniformity {k} is below this construction's minimum {required}")]
    UniformityTooSmall { k: u64, required: u64 },
    #[error("cannot split {a} parallel classes, the plane has {limit}")]
    SplitCountTooLarge { a: u64, limit: u64 },
    #[error("no prime q satisfies q + 1 + ceil(q/2) <= {k}")]
    NoSuitablePrime { k: u64 },
    #[error("core size {lambda} must be smaller than uniformity {k}")]
    CoreNotSmaller { lambda: u64, k: u64 },
    #[error("at least one edge is required")]
    NoEdgesRequested,
    #[error("lambda must be positive")]
    LambdaNotPositive,
    #[error("input must be 1-intersecting")]
    NotOneIntersecting,
    #[error("input must be uniform")]
    NotUniform,
    #[error("input must not be a sunflower")]
    IsSunflower,
    #[error("n must be a positive multiple of 3, got {0}")]
    NotPositiveMultipleOfThree(u64),
}

/// Predicted statistics of a construction, recomputed from closed forms,
/// never measured from the generated object.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConstructionManifest {
    pub name: String,
    pub parameters: BTreeMap<String, u64>,
    pub predicted_edge_count: u64,
    pub predicted_order: u64,
    pub predicted_kernel: Option<u64>,
}

impl ConstructionManifest {
    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("manifest serializes")
    }
}

fn params(entries: &[(&str, u64)]) -> BTreeMap<String, u64> {
    entries.iter().map(|&(k, v)| (k.to_string(), v)).collect()
}

/// Intersecting k-graph of near-maximal order for its maximum degree:
/// every line of a projective plane of order q, duplicated
/// floor(delta/(q+1)) times, each copy padded to size k with fresh
/// degree-1 vertices. Defaults to k = 2(q+1).
pub fn furedi_order_family(
    q: u64,
    delta: u64,
    k: Option<u64>,
) -> Result<(Hypergraph, ConstructionManifest), ConstructionError> {
    let k = k.unwrap_or(2 * (q + 1));
    if delta < q + 1 {
        return Err(ConstructionError::DegreeTooSmall {
            delta,
            required: q + 1,
        });
    }
    if k < q + 1 {
        return Err(ConstructionError::UniformityTooSmall { k, required: q + 1 });
    }
    let plane = ProjectivePlane::new(q)?;
    let copies = delta / (q + 1);
    let points = q * q + q + 1;
    let mut fresh = points;
    let mut edges = Vec::with_capacity((points * copies) as usize);
    for line in plane.lines() {
        for _ in 0..copies {
            let mut e: Vec<u64> = line.vertices().iter().map(|v| v.0).collect();
            for _ in 0..k - q - 1 {
                e.push(fresh);
                fresh += 1;
            }
            edges.push(e);
        }
    }
    let h = Hypergraph::from_edge_ids(edges).expect("lines are nonempty");
    let manifest = ConstructionManifest {
        name: "furedi-order-family".into(),
        parameters: params(&[("q", q), ("delta", delta), ("k", k)]),
        predicted_edge_count: points * copies,
        predicted_order: points * copies * (k - q - 1) + points,
        predicted_kernel: None,
    };
    Ok((h, manifest))
}

/// Largest prime q with q + 1 + ceil(q/2) <= k.
fn widest_prime_for(k: u64) -> Result<u64, ConstructionError> {
    (2..=k)
        .rev()
        .filter(|&q| is_prime(q))
        .find(|&q| q + 1 + (q + 1) / 2 <= k)
        .ok_or(ConstructionError::NoSuitablePrime { k })
}

/// Non-sunflower 1-intersecting k-graph with large order and controllable
/// kernel: the lines of an affine plane of order q, where each of the
/// first a parallel classes is split into two groups (sizes floor(q/2) and
/// ceil(q/2)) that receive separate shared vertices plus one fresh
/// degree-2 vertex per cross-group pair, each remaining class receives a
/// single shared vertex, and every edge is padded to size k.
///
/// The predicted kernel is the census of vertices of degree at least two:
/// q^2 affine points, the q+1-a class vertices, each group vertex whose
/// group has at least two lines, and the a*floor(q^2/4) pair vertices.
pub fn one_intersecting_h_a(
    k: u64,
    a: u64,
    q: Option<u64>,
) -> Result<(Hypergraph, ConstructionManifest), ConstructionError> {
    let q = match q {
        Some(q) if !is_prime(q) => return Err(GeometryError::NotPrime(q).into()),
        Some(q) => q,
        None => widest_prime_for(k)?,
    };
    let heaviest = q + 1 + (q + 1) / 2;
    if k < heaviest {
        return Err(ConstructionError::UniformityTooSmall {
            k,
            required: heaviest,
        });
    }
    if a > q + 1 {
        return Err(ConstructionError::SplitCountTooLarge { a, limit: q + 1 });
    }
    let plane = AffinePlane::new(q)?;
    let mut fresh = q * q;
    let mut mint = || {
        let v = fresh;
        fresh += 1;
        v
    };
    let mut edges: Vec<Vec<u64>> = Vec::with_capacity((q * (q + 1)) as usize);
    for class in plane.classes() {
        for line in class {
            edges.push(line.vertices().iter().map(|v| v.0).collect());
        }
    }
    let group1 = (q / 2) as usize;
    for c in 0..=q as usize {
        let base = c * q as usize;
        if (c as u64) < a {
            let g1 = mint();
            for line in &mut edges[base..base + group1] {
                line.push(g1);
            }
            let g2 = mint();
            for line in &mut edges[base + group1..base + q as usize] {
                line.push(g2);
            }
        } else {
            let w = mint();
            for line in &mut edges[base..base + q as usize] {
                line.push(w);
            }
        }
    }
    for c in 0..a as usize {
        let base = c * q as usize;
        for i in 0..group1 {
            for j in group1..q as usize {
                let p = mint();
                edges[base + i].push(p);
                edges[base + j].push(p);
            }
        }
    }
    for e in &mut edges {
        while e.len() < k as usize {
            e.push(mint());
        }
    }
    let h = Hypergraph::from_edge_ids(edges).expect("lines are nonempty");
    let cross_pairs = q * q / 4;
    let group_kernel = (q / 2 >= 2) as u64 + (q - q / 2 >= 2) as u64;
    let manifest = ConstructionManifest {
        name: "one-intersecting-h-a".into(),
        parameters: params(&[("k", k), ("a", a), ("q", q)]),
        predicted_edge_count: q * (q + 1),
        predicted_order: q * q
            + 2 * a
            + (q + 1 - a)
            + a * cross_pairs
            + (q * (q + 1) * (k - q - 1) - 2 * a * cross_pairs),
        predicted_kernel: Some(q * q + (q + 1 - a) + a * group_kernel + a * cross_pairs),
    };
    Ok((h, manifest))
}

/// Adds the same lambda - 1 fresh vertices to every edge of a non-sunflower
/// 1-intersecting uniform hypergraph, making it lambda-intersecting.
/// lambda = 1 returns the input unchanged.
pub fn lambda_lift(h: &Hypergraph, lambda: u64) -> Result<Hypergraph, ConstructionError> {
    if lambda < 1 {
        return Err(ConstructionError::LambdaNotPositive);
    }
    if h.uniformity().is_none() {
        return Err(ConstructionError::NotUniform);
    }
    if !h.is_lambda_intersecting(1) {
        return Err(ConstructionError::NotOneIntersecting);
    }
    if h.is_sunflower() {
        return Err(ConstructionError::IsSunflower);
    }
    let base = h.max_vertex_id().map_or(0, |v| v + 1);
    let shared: Vec<u64> = (base..base + lambda - 1).collect();
    let edges: Vec<Vec<u64>> = h
        .edges()
        .iter()
        .map(|e| {
            e.vertices()
                .iter()
                .map(|v| v.0)
                .chain(shared.iter().copied())
                .collect()
        })
        .collect();
    Ok(Hypergraph::from_edge_ids(edges).expect("edges stay nonempty"))
}

/// m edges of size k sharing a fixed lambda-vertex core, with pairwise
/// disjoint fresh petals. The canonical degenerate family every
/// non-sunflower bound excludes.
pub fn sunflower_family(k: u64, lambda: u64, m: u64) -> Result<Hypergraph, ConstructionError> {
    if lambda >= k {
        return Err(ConstructionError::CoreNotSmaller { lambda, k });
    }
    if m < 1 {
        return Err(ConstructionError::NoEdgesRequested);
    }
    let core: Vec<u64> = (1..=lambda).collect();
    let mut next = lambda + 1;
    let mut edges = Vec::with_capacity(m as usize);
    for _ in 0..m {
        let mut e = core.clone();
        for _ in 0..k - lambda {
            e.push(next);
            next += 1;
        }
        edges.push(e);
    }
    Ok(Hypergraph::from_edge_ids(edges).expect("k >= 1"))
}

/// The order-extremal (2,n)-bounded 1-cross-intersecting system for
/// 3 | n: s = (n+3)/3 stars of s edges each; the B-set of an edge holds
/// the other leaves of its own star, the centers of all other stars, and
/// n/3 fresh vertices of its own.
pub fn sps_star_family(
    n: u64,
) -> Result<(SetPairSystem, ConstructionManifest), ConstructionError> {
    if n < 3 || n % 3 != 0 {
        return Err(ConstructionError::NotPositiveMultipleOfThree(n));
    }
    let s = (n + 3) / 3;
    let center = |i: u64| i * (s + 1);
    let leaf = |i: u64, j: u64| i * (s + 1) + 1 + j;
    let mut fresh = s * (s + 1);
    let mut pairs = Vec::with_capacity((s * s) as usize);
    for i in 0..s {
        for j in 0..s {
            let a = vec![center(i), leaf(i, j)];
            let mut b: Vec<u64> = (0..s).filter(|&j2| j2 != j).map(|j2| leaf(i, j2)).collect();
            b.extend((0..s).filter(|&i2| i2 != i).map(center));
            for _ in 0..n / 3 {
                b.push(fresh);
                fresh += 1;
            }
            pairs.push((a, b));
        }
    }
    let manifest = ConstructionManifest {
        name: "sps-star-family".into(),
        parameters: params(&[("n", n)]),
        predicted_edge_count: s * s,
        predicted_order: s * s * s + s,
        predicted_kernel: None,
    };
    Ok((SetPairSystem::from_id_pairs(pairs), manifest))
}
