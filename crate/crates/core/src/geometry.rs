//! Finite affine and projective planes over prime fields.
//!
//! Only prime orders are supported; primality is checked by trial division.
//! The plane constructors produce deterministic vertex numberings and line
//! orders, and `verify_axioms` re-checks every incidence axiom by plain
//! enumeration, so a tampered plane is always caught.
//!
//! Point numbering. Affine: the point (x, y) of AG(2, q) gets id x*q + y.
//! Projective: points of PG(2, q) are the homogeneous triples normalized so
//! the first nonzero coordinate is 1, listed in lexicographic order and
//! numbered from 0 in that order. Lines use the same triple enumeration:
//! line [l0 : l1 : l2] contains the points with l0*x0 + l1*x1 + l2*x2 = 0.

use thiserror::Error;

use crate::hypergraph::{Edge, Hypergraph, VertexId};

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum GeometryError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("no prime is at most {0}")]
    NoPrimeAtMost(u64),
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Largest prime p with p <= x. Errors when x < 2.
pub fn largest_prime_at_most(x: u64) -> Result<u64, GeometryError> {
    (2..=x)
        .rev()
        .find(|&p| is_prime(p))
        .ok_or(GeometryError::NoPrimeAtMost(x))
}

/// Arithmetic in the field of prime order p.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, GeometryError> {
        if !is_prime(p) {
            return Err(GeometryError::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.p - b % self.p) % self.p
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    pub fn neg(&self, a: u64) -> u64 {
        (self.p - a % self.p) % self.p
    }

    pub fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1 % self.p;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse of a nonzero element, via Fermat.
    pub fn inv(&self, a: u64) -> Option<u64> {
        if a % self.p == 0 {
            return None;
        }
        Some(self.pow(a, self.p - 2))
    }
}

/// The affine plane AG(2, q): q^2 points, q(q+1) lines of q points each,
/// grouped into q+1 parallel classes of q mutually disjoint lines. Classes
/// are ordered slope 0, 1, ..., q-1 (lines y = s*x + c) and the vertical
/// class (lines x = c) last; within a class, lines are ordered by c.
#[derive(Clone, Debug)]
pub struct AffinePlane {
    q: u64,
    classes: Vec<Vec<Edge>>,
}

impl AffinePlane {
    pub fn new(q: u64) -> Result<Self, GeometryError> {
        let f = PrimeField::new(q)?;
        let point = |x: u64, y: u64| VertexId(x * q + y);
        let mut classes = Vec::with_capacity(q as usize + 1);
        for s in 0..q {
            let mut class = Vec::with_capacity(q as usize);
            for c in 0..q {
                let line = (0..q).map(|x| point(x, f.add(f.mul(s, x), c)));
                class.push(Edge::new(line).expect("q >= 2 points per line"));
            }
            classes.push(class);
        }
        let vertical = (0..q)
            .map(|c| Edge::new((0..q).map(|y| point(c, y))).expect("q >= 2 points per line"))
            .collect();
        classes.push(vertical);
        Ok(AffinePlane { q, classes })
    }

    /// Wraps externally supplied classes so they can be run through
    /// `verify_axioms`. Nothing is checked here.
    pub fn from_classes(q: u64, classes: Vec<Vec<Edge>>) -> Self {
        AffinePlane { q, classes }
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn point_count(&self) -> usize {
        (self.q * self.q) as usize
    }

    pub fn point_id(&self, x: u64, y: u64) -> VertexId {
        VertexId(x * self.q + y)
    }

    /// Parallel classes in construction order.
    pub fn classes(&self) -> &[Vec<Edge>] {
        &self.classes
    }

    /// All lines, class-major.
    pub fn lines(&self) -> impl Iterator<Item = &Edge> {
        self.classes.iter().flatten()
    }

    pub fn to_hypergraph(&self) -> Hypergraph {
        Hypergraph::new(self.lines().cloned().collect())
    }

    /// Re-checks every affine plane axiom by enumeration: the expected
    /// counts, that each class partitions the point set into lines of size
    /// q, and that lines from different classes meet in exactly one point.
    pub fn verify_axioms(&self) -> bool {
        let q = self.q as usize;
        if self.classes.len() != q + 1 || self.classes.iter().any(|c| c.len() != q) {
            return false;
        }
        let points: std::collections::BTreeSet<VertexId> =
            self.lines().flat_map(|e| e.iter()).collect();
        if points.len() != q * q {
            return false;
        }
        for class in &self.classes {
            if class.iter().any(|l| l.len() != q) {
                return false;
            }
            let covered: std::collections::BTreeSet<VertexId> =
                class.iter().flat_map(|e| e.iter()).collect();
            let total: usize = class.iter().map(|l| l.len()).sum();
            if covered != points || total != points.len() {
                return false;
            }
        }
        for (i, ci) in self.classes.iter().enumerate() {
            for cj in &self.classes[i + 1..] {
                for a in ci {
                    for b in cj {
                        if a.intersection_size(b) != 1 {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}

/// The projective plane PG(2, q): q^2 + q + 1 points and as many lines,
/// each line carrying q + 1 points, any two lines meeting in exactly one
/// point, any two points joined by exactly one line.
#[derive(Clone, Debug)]
pub struct ProjectivePlane {
    q: u64,
    lines: Vec<Edge>,
}

/// Homogeneous triples over F_q normalized to leading coordinate 1, in
/// lexicographic order. There are q^2 + q + 1 of them.
fn normalized_triples(q: u64) -> Vec<[u64; 3]> {
    let mut out = Vec::with_capacity((q * q + q + 1) as usize);
    out.push([0, 0, 1]);
    for c in 0..q {
        out.push([0, 1, c]);
    }
    for b in 0..q {
        for c in 0..q {
            out.push([1, b, c]);
        }
    }
    out.sort_unstable();
    out
}

impl ProjectivePlane {
    pub fn new(q: u64) -> Result<Self, GeometryError> {
        let f = PrimeField::new(q)?;
        let triples = normalized_triples(q);
        let dot = |a: &[u64; 3], b: &[u64; 3]| {
            let mut acc = 0;
            for i in 0..3 {
                acc = f.add(acc, f.mul(a[i], b[i]));
            }
            acc
        };
        let lines = triples
            .iter()
            .map(|l| {
                let pts = triples
                    .iter()
                    .enumerate()
                    .filter(|(_, p)| dot(l, p) == 0)
                    .map(|(i, _)| VertexId(i as u64));
                Edge::new(pts).expect("every line of PG(2, q) has q + 1 points")
            })
            .collect();
        Ok(ProjectivePlane { q, lines })
    }

    /// Wraps externally supplied lines for `verify_axioms`. Unchecked.
    pub fn from_lines(q: u64, lines: Vec<Edge>) -> Self {
        ProjectivePlane { q, lines }
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn point_count(&self) -> usize {
        (self.q * self.q + self.q + 1) as usize
    }

    pub fn lines(&self) -> &[Edge] {
        &self.lines
    }

    pub fn to_hypergraph(&self) -> Hypergraph {
        Hypergraph::new(self.lines.clone())
    }

    /// Re-checks every projective plane axiom by enumeration.
    pub fn verify_axioms(&self) -> bool {
        let q = self.q as usize;
        let n = q * q + q + 1;
        if self.lines.len() != n {
            return false;
        }
        if self.lines.iter().any(|l| l.len() != q + 1) {
            return false;
        }
        let points: Vec<VertexId> = {
            let set: std::collections::BTreeSet<VertexId> =
                self.lines.iter().flat_map(|e| e.iter()).collect();
            set.into_iter().collect()
        };
        if points.len() != n {
            return false;
        }
        for (i, a) in self.lines.iter().enumerate() {
            for b in &self.lines[i + 1..] {
                if a.intersection_size(b) != 1 {
                    return false;
                }
            }
        }
        for (i, &p) in points.iter().enumerate() {
            let through_p: Vec<&Edge> =
                self.lines.iter().filter(|l| l.contains(p)).collect();
            if through_p.len() != q + 1 {
                return false;
            }
            for &r in &points[i + 1..] {
                let joining = through_p.iter().filter(|l| l.contains(r)).count();
                if joining != 1 {
                    return false;
                }
            }
        }
        true
    }
}
