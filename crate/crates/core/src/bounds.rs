//! Closed-form bound evaluators and the instance report.
//!
//! Every formula is evaluated in exact rational arithmetic. The only
//! irrational ingredient anywhere is a half-integer power x^(5/2) = x^2 * √x;
//! such a value is reported as a certified integer bracket
//! [floor_certified, ceil_certified] derived from the floor integer square
//! root, plus a high-precision decimal display. When x happens to be a
//! perfect square the value is rational after all and `exact` is set.
//!
//! Measured quantities are integers, so satisfaction is decided with a
//! conservative three-way verdict: measured <= floor_certified is satisfied,
//! measured > ceil_certified is violated, and anything strictly inside the
//! bracket of an irrational value is reported indeterminate rather than
//! guessed. Rational values never produce indeterminate.

use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::Signed;
use serde_json::{json, Value};
use thiserror::Error;

use crate::hypergraph::Hypergraph;
use crate::kernel::{kernel_degree_rule, min_kernel_exact, KernelBudget};

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum BoundsError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

/// Decimal places printed in `display` strings.
const DISPLAY_PLACES: usize = 12;
/// Digits of √x used for the display value of irrational bounds. The
/// display is only a label; verdicts never look at it.
const SQRT_DISPLAY_DIGITS: u32 = 40;

fn int(n: u64) -> BigInt {
    BigInt::from(n)
}

fn rat_int(n: u64) -> BigRational {
    BigRational::from_integer(int(n))
}

fn rat(numer: BigInt, denom: u64) -> BigRational {
    BigRational::new(numer, int(denom))
}

/// Fixed-point decimal rendering of a rational, truncated toward zero,
/// trailing zeros trimmed.
fn decimal_string(r: &BigRational, places: usize) -> String {
    let sign = if r.is_negative() { "-" } else { "" };
    let abs = r.abs();
    let whole = abs.trunc().to_integer();
    let scale = BigInt::from(10).pow(places as u32);
    let frac_digits = ((&abs - abs.trunc()) * BigRational::from_integer(scale))
        .trunc()
        .to_integer();
    let padded = format!("{:0>places$}", frac_digits.to_string());
    let trimmed = padded.trim_end_matches('0');
    if trimmed.is_empty() {
        format!("{sign}{whole}")
    } else {
        format!("{sign}{whole}.{trimmed}")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundStatus {
    Theorem,
    Conjecture,
}

impl BoundStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            BoundStatus::Theorem => "theorem",
            BoundStatus::Conjecture => "conjecture",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Satisfied,
    Violated,
    Indeterminate,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Satisfied => "satisfied",
            Verdict::Violated => "violated",
            Verdict::Indeterminate => "indeterminate",
        }
    }
}

/// The value of one closed-form bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundValue {
    /// Present exactly when the formula value is rational.
    pub exact: Option<BigRational>,
    /// Certified integer lower bound on the true value.
    pub floor_certified: BigInt,
    /// Certified integer upper bound on the true value.
    pub ceil_certified: BigInt,
    /// Decimal approximation, for humans only.
    pub display: String,
    pub status: BoundStatus,
}

impl BoundValue {
    fn from_exact(r: BigRational, status: BoundStatus) -> Self {
        BoundValue {
            floor_certified: r.floor().to_integer(),
            ceil_certified: r.ceil().to_integer(),
            display: decimal_string(&r, DISPLAY_PLACES),
            exact: Some(r),
            status,
        }
    }

    /// Value rational + coeff * √x with coeff >= 0. Exact when x is a
    /// perfect square; otherwise bracketed via s = isqrt(x), using
    /// s <= √x < s + 1.
    fn with_sqrt(rational: BigRational, coeff: BigRational, x: u64, status: BoundStatus) -> Self {
        let s = int(x).sqrt();
        if &s * &s == int(x) {
            return Self::from_exact(rational + coeff * BigRational::from_integer(s), status);
        }
        let lo = &rational + &coeff * BigRational::from_integer(s.clone());
        let hi = &rational + &coeff * BigRational::from_integer(&s + 1);
        let scale = BigInt::from(10).pow(SQRT_DISPLAY_DIGITS);
        let scaled_sqrt = (int(x) * &scale * &scale).sqrt();
        let approx = &rational + &coeff * BigRational::new(scaled_sqrt, scale);
        BoundValue {
            exact: None,
            floor_certified: lo.floor().to_integer(),
            ceil_certified: hi.ceil().to_integer(),
            display: decimal_string(&approx, DISPLAY_PLACES),
            status,
        }
    }

    /// Conservative comparison of an integer measurement against the bound.
    pub fn verdict(&self, measured: u64) -> Verdict {
        let m = int(measured);
        if let Some(exact) = &self.exact {
            return if &BigRational::from_integer(m) <= exact {
                Verdict::Satisfied
            } else {
                Verdict::Violated
            };
        }
        if m <= self.floor_certified {
            Verdict::Satisfied
        } else if m > self.ceil_certified {
            Verdict::Violated
        } else {
            Verdict::Indeterminate
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "exact": self.exact.as_ref().map(|r| r.to_string()),
            "floor_certified": self.floor_certified.to_string(),
            "ceil_certified": self.ceil_certified.to_string(),
            "display": self.display,
            "status": self.status.as_str(),
        })
    }
}

/// (k - 1 + 1/k) * Δ: maximum edge count of an intersecting k-graph with
/// maximum degree Δ.
pub fn furedi_size_bound(k: u64, delta: u64) -> Result<BoundValue, BoundsError> {
    if k < 1 {
        return Err(BoundsError::InvalidParameter("k must be at least 1".into()));
    }
    let per_degree = rat(int(k * k - k + 1), k);
    Ok(BoundValue::from_exact(per_degree * rat_int(delta), BoundStatus::Theorem))
}

/// max{λ(λ+1)+1, (k−λ)(k−λ+1)+1}: maximum edge count of a λ-intersecting
/// k-graph that is not a sunflower.
pub fn deza_size_bound(k: u64, lambda: u64) -> Result<BoundValue, BoundsError> {
    if lambda >= k {
        return Err(BoundsError::InvalidParameter(format!(
            "need lambda < k, got lambda={lambda}, k={k}"
        )));
    }
    let mu = k - lambda;
    let v = (lambda * (lambda + 1) + 1).max(mu * (mu + 1) + 1);
    Ok(BoundValue::from_exact(rat_int(v), BoundStatus::Theorem))
}

/// k²Δ/4 + (3/2)·C(2k−2, k−1): maximum order of an intersecting k-graph
/// with maximum degree Δ.
pub fn furedi_order_bound(k: u64, delta: u64) -> Result<BoundValue, BoundsError> {
    if k < 1 {
        return Err(BoundsError::InvalidParameter("k must be at least 1".into()));
    }
    let quadratic = rat(int(k) * int(k) * int(delta), 4);
    let kernel_term = rat(int(3) * binomial(int(2 * k - 2), int(k - 1)), 2);
    Ok(BoundValue::from_exact(quadratic + kernel_term, BoundStatus::Theorem))
}

/// (3/2)·C(2k−2, k−1): maximum kernel size of an intersecting k-graph.
pub fn majumder_kernel_bound(k: u64) -> Result<BoundValue, BoundsError> {
    if k < 1 {
        return Err(BoundsError::InvalidParameter("k must be at least 1".into()));
    }
    Ok(BoundValue::from_exact(
        rat(int(3) * binomial(int(2 * k - 2), int(k - 1)), 2),
        BoundStatus::Theorem,
    ))
}

/// (4/27)k³ + 4k^(5/2): maximum of order + kernel over non-sunflower
/// 1-intersecting k-graphs.
pub fn ord_ker_bound_1_intersecting(k: u64) -> Result<BoundValue, BoundsError> {
    if k < 1 {
        return Err(BoundsError::InvalidParameter("k must be at least 1".into()));
    }
    let cubic = rat(int(4) * int(k).pow(3), 27);
    let coeff = rat_int(4 * k * k);
    Ok(BoundValue::with_sqrt(cubic, coeff, k, BoundStatus::Theorem))
}

/// f(k, λ) = (4/27)μ³ + 4λμ² + 100μ^(5/2) + 1000λμ + 30000μ with μ = k − λ:
/// order bound for non-sunflower λ-intersecting k-graphs.
pub fn deza_order_f(k: u64, lambda: u64) -> Result<BoundValue, BoundsError> {
    if lambda >= k {
        return Err(BoundsError::InvalidParameter(format!(
            "need lambda < k, got lambda={lambda}, k={k}"
        )));
    }
    let mu = k - lambda;
    let rational = rat(int(4) * int(mu).pow(3), 27)
        + rat_int(4 * lambda * mu * mu)
        + rat_int(1000 * lambda * mu)
        + rat_int(30000 * mu);
    let coeff = rat_int(100 * mu * mu);
    Ok(BoundValue::with_sqrt(rational, coeff, mu, BoundStatus::Theorem))
}

/// (⌊n/2⌋+1)(⌈n/2⌉+1): maximum number of pairs in a (2,n)-bounded
/// 1-cross-intersecting set pair system. Stated only for n >= 4.
pub fn sps_size_bound(n: u64) -> Result<BoundValue, BoundsError> {
    if n < 4 {
        return Err(BoundsError::InvalidParameter(format!(
            "the pair-count bound requires n >= 4, got {n}"
        )));
    }
    let v = (n / 2 + 1) * (n.div_ceil(2) + 1);
    Ok(BoundValue::from_exact(rat_int(v), BoundStatus::Theorem))
}

/// (n+3)³/27 + (n+3)/3: maximum order of a (2,n)-bounded
/// 1-cross-intersecting set pair system. An integer whenever 3 | n.
pub fn sps_order_bound(n: u64) -> Result<BoundValue, BoundsError> {
    if n < 1 {
        return Err(BoundsError::InvalidParameter("n must be at least 1".into()));
    }
    let v = rat(int(n + 3).pow(3), 27) + rat(int(n + 3), 3);
    Ok(BoundValue::from_exact(v, BoundStatus::Theorem))
}

/// k(k−1)/λ + 1: conjectured maximum edge count of a non-trivial
/// λ-intersecting k-graph. Never used as a pass/fail check.
pub fn hall_conjecture_bound(k: u64, lambda: u64) -> Result<BoundValue, BoundsError> {
    if lambda < 1 || k <= lambda {
        return Err(BoundsError::InvalidParameter(format!(
            "need 1 <= lambda < k, got lambda={lambda}, k={k}"
        )));
    }
    let v = rat(int(k) * int(k - 1), lambda) + rat_int(1);
    Ok(BoundValue::from_exact(v, BoundStatus::Conjecture))
}

/// 4k³/(27λ): the open-question order expression for non-trivial
/// λ-intersecting k-graphs. Conjectural, evaluation only.
pub fn nontrivial_order_conjecture(k: u64, lambda: u64) -> Result<BoundValue, BoundsError> {
    if lambda < 1 || k <= lambda {
        return Err(BoundsError::InvalidParameter(format!(
            "need 1 <= lambda < k, got lambda={lambda}, k={k}"
        )));
    }
    let v = BigRational::new(int(4) * int(k).pow(3), int(27) * int(lambda));
    Ok(BoundValue::from_exact(v, BoundStatus::Conjecture))
}

// ---------------------------------------------------------------------------
// instance report

/// Measured statistics of one hypergraph instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InstanceStats {
    pub edge_count: u64,
    pub order: u64,
    pub max_degree: u64,
    pub uniformity: Option<u64>,
    pub lambda: Option<u64>,
    pub kernel: Option<u64>,
    pub intersecting: bool,
    pub sunflower: bool,
    pub trivial_intersecting: bool,
}

impl InstanceStats {
    pub fn to_json(&self) -> Value {
        json!({
            "edge_count": self.edge_count,
            "order": self.order,
            "max_degree": self.max_degree,
            "uniformity": self.uniformity,
            "lambda": self.lambda,
            "kernel": self.kernel,
            "intersecting": self.intersecting,
            "sunflower": self.sunflower,
            "trivial_intersecting": self.trivial_intersecting,
        })
    }
}

#[derive(Clone, Debug)]
pub struct BoundEntry {
    pub bound: &'static str,
    pub status: BoundStatus,
    pub applicable: bool,
    pub value: Option<BoundValue>,
    pub measured: Option<u64>,
    pub verdict: Option<Verdict>,
}

impl BoundEntry {
    pub fn to_json(&self) -> Value {
        json!({
            "bound": self.bound,
            "status": self.status.as_str(),
            "applicable": self.applicable,
            "value": self.value.as_ref().map(|v| v.to_json()),
            "measured": self.measured,
            "verdict": self.verdict.map(|v| v.as_str()),
        })
    }
}

#[derive(Clone, Debug)]
pub struct BoundReport {
    pub stats: InstanceStats,
    pub entries: Vec<BoundEntry>,
}

impl BoundReport {
    /// True iff no applicable theorem-status bound is violated.
    /// Indeterminate never counts as a violation, and conjectures never
    /// count at all.
    pub fn all_theorems_hold(&self) -> bool {
        !self.entries.iter().any(|e| {
            e.applicable
                && e.status == BoundStatus::Theorem
                && e.verdict == Some(Verdict::Violated)
        })
    }

    pub fn to_json(&self) -> Value {
        json!({
            "stats": self.stats.to_json(),
            "bounds": self.entries.iter().map(|e| e.to_json()).collect::<Vec<_>>(),
        })
    }
}

/// Externally supplied facts for [`bound_report`]: a λ to prefer and/or an
/// already-computed kernel size.
#[derive(Clone, Copy, Debug, Default)]
pub struct ReportContext {
    pub lambda: Option<u64>,
    pub kernel: Option<u64>,
}

/// Support size up to which the report will run the exact kernel search on
/// its own. Beyond this the kernel is reported only when supplied.
const REPORT_KERNEL_SUPPORT_LIMIT: usize = 16;

/// Measures an instance and compares it against every bound whose
/// hypotheses it satisfies. Bounds whose hypotheses fail are listed as
/// not-applicable rather than dropped, so reports are shape-stable.
pub fn bound_report(h: &Hypergraph, ctx: &ReportContext) -> BoundReport {
    let m = h.edge_count() as u64;
    let order = h.order() as u64;
    let uniformity = h.uniformity().map(|k| k as u64);
    let intersecting = h.is_intersecting();
    let sunflower = h.is_sunflower();
    let trivial = h.is_trivial_intersecting();
    let lambda = ctx
        .lambda
        .filter(|&l| h.is_lambda_intersecting(l as usize))
        .or_else(|| match h.infer_lambda() {
            Ok(l) => l.map(|l| l as u64),
            Err(_) => None,
        });
    let kernel = ctx.kernel.or_else(|| cheap_kernel(h, lambda));
    let stats = InstanceStats {
        edge_count: m,
        order,
        max_degree: h.max_degree() as u64,
        uniformity,
        lambda,
        kernel,
        intersecting,
        sunflower,
        trivial_intersecting: trivial,
    };

    let k = uniformity;
    let positive_lambda = lambda.filter(|&l| l >= 1);
    let proper_lambda = positive_lambda.filter(|&l| Some(l) < k);
    let mut entries = Vec::new();
    let mut entry =
        |bound: &'static str,
         status: BoundStatus,
         applicable: bool,
         value: Option<BoundValue>,
         measured: Option<u64>| {
            let value = value.filter(|_| applicable);
            let verdict = value
                .as_ref()
                .zip(measured)
                .map(|(v, meas)| v.verdict(meas));
            entries.push(BoundEntry {
                bound,
                status,
                applicable,
                value,
                measured,
                verdict,
            });
        };

    entry(
        "furedi-size",
        BoundStatus::Theorem,
        intersecting && k.is_some(),
        k.map(|k| furedi_size_bound(k, stats.max_degree).expect("k >= 1")),
        Some(m),
    );
    entry(
        "deza-size",
        BoundStatus::Theorem,
        !sunflower && k.is_some() && proper_lambda.is_some(),
        k.zip(proper_lambda)
            .map(|(k, l)| deza_size_bound(k, l).expect("lambda < k")),
        Some(m),
    );
    entry(
        "furedi-order",
        BoundStatus::Theorem,
        intersecting && k.is_some(),
        k.map(|k| furedi_order_bound(k, stats.max_degree).expect("k >= 1")),
        Some(order),
    );
    entry(
        "majumder-kernel",
        BoundStatus::Theorem,
        intersecting && k.is_some() && kernel.is_some(),
        k.map(|k| majumder_kernel_bound(k).expect("k >= 1")),
        kernel,
    );
    entry(
        "ord-ker-1-intersecting",
        BoundStatus::Theorem,
        !sunflower && k.is_some() && lambda == Some(1) && kernel.is_some(),
        k.map(|k| ord_ker_bound_1_intersecting(k).expect("k >= 1")),
        kernel.map(|kr| order + kr),
    );
    entry(
        "deza-order-f",
        BoundStatus::Theorem,
        !sunflower && k.is_some() && proper_lambda.is_some(),
        k.zip(proper_lambda)
            .map(|(k, l)| deza_order_f(k, l).expect("lambda < k")),
        Some(order),
    );
    entry(
        "hall-conjecture",
        BoundStatus::Conjecture,
        !trivial && k.is_some() && proper_lambda.is_some(),
        k.zip(proper_lambda)
            .map(|(k, l)| hall_conjecture_bound(k, l).expect("lambda < k")),
        Some(m),
    );
    entry(
        "order-conjecture",
        BoundStatus::Conjecture,
        !trivial && k.is_some() && proper_lambda.is_some(),
        k.zip(proper_lambda)
            .map(|(k, l)| nontrivial_order_conjecture(k, l).expect("lambda < k")),
        Some(order),
    );

    BoundReport { stats, entries }
}

/// Kernel size when it is cheap to settle: the degree rule for
/// 1-intersecting inputs, or the exact search on small supports.
fn cheap_kernel(h: &Hypergraph, lambda: Option<u64>) -> Option<u64> {
    if !h.is_intersecting() {
        return None;
    }
    if h.is_empty() {
        return Some(0);
    }
    if h.edge_count() == 1 {
        return Some(1);
    }
    if lambda == Some(1) {
        return kernel_degree_rule(h).ok().map(|s| s.len() as u64);
    }
    if h.order() <= REPORT_KERNEL_SUPPORT_LIMIT {
        let budget = KernelBudget {
            support_limit: REPORT_KERNEL_SUPPORT_LIMIT,
            workers: 1,
        };
        return min_kernel_exact(h, &budget).ok().map(|r| r.size as u64);
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::ProjectivePlane;

    fn exact_str(v: &BoundValue) -> String {
        v.exact.as_ref().expect("rational value").to_string()
    }

    #[test]
    fn furedi_size_examples() {
        assert_eq!(exact_str(&furedi_size_bound(3, 3).unwrap()), "7");
        assert_eq!(exact_str(&furedi_size_bound(1, 5).unwrap()), "5");
        assert_eq!(exact_str(&furedi_size_bound(4, 4).unwrap()), "13");
        assert!(furedi_size_bound(0, 3).is_err());
    }

    #[test]
    fn deza_size_examples() {
        assert_eq!(exact_str(&deza_size_bound(3, 1).unwrap()), "7");
        assert_eq!(exact_str(&deza_size_bound(2, 1).unwrap()), "3");
        assert_eq!(exact_str(&deza_size_bound(5, 4).unwrap()), "21");
        assert!(deza_size_bound(3, 3).is_err());
    }

    #[test]
    fn furedi_order_examples() {
        assert_eq!(exact_str(&furedi_order_bound(3, 3).unwrap()), "63/4");
        assert_eq!(exact_str(&furedi_order_bound(2, 2).unwrap()), "5");
        assert_eq!(exact_str(&furedi_order_bound(1, 0).unwrap()), "3/2");
    }

    #[test]
    fn majumder_kernel_examples() {
        assert_eq!(exact_str(&majumder_kernel_bound(2).unwrap()), "3");
        assert_eq!(exact_str(&majumder_kernel_bound(3).unwrap()), "9");
        assert_eq!(exact_str(&majumder_kernel_bound(1).unwrap()), "3/2");
    }

    #[test]
    fn ord_ker_bound_exact_on_perfect_squares() {
        let v4 = ord_ker_bound_1_intersecting(4).unwrap();
        assert_eq!(exact_str(&v4), "3712/27"); // 256/27 + 128
        let v9 = ord_ker_bound_1_intersecting(9).unwrap();
        assert_eq!(exact_str(&v9), "1080");
        assert_eq!(v9.verdict(1080), Verdict::Satisfied);
        assert_eq!(v9.verdict(1081), Verdict::Violated);
    }

    #[test]
    fn ord_ker_bound_brackets_k2() {
        let v = ord_ker_bound_1_intersecting(2).unwrap();
        assert!(v.exact.is_none());
        // window [32/27 + 16, 32/27 + 32] = [17.18.., 33.18..]
        assert_eq!(v.floor_certified, BigInt::from(17));
        assert_eq!(v.ceil_certified, BigInt::from(34));
        assert_eq!(v.verdict(17), Verdict::Satisfied);
        assert_eq!(v.verdict(20), Verdict::Indeterminate);
        assert_eq!(v.verdict(35), Verdict::Violated);
        // true value is 32/27 + 16√2 = 23.81: display must start there
        assert!(v.display.starts_with("23.8"), "display = {}", v.display);
    }

    #[test]
    fn deza_order_f_examples() {
        let v = deza_order_f(10, 1).unwrap();
        assert_eq!(exact_str(&v), "303732");
        let v = deza_order_f(5, 4).unwrap();
        // 4/27 + 16 + 100 + 4000 + 30000 = 34116 + 4/27
        assert_eq!(exact_str(&v), "921136/27");
        let v = deza_order_f(2, 1).unwrap();
        assert_eq!(exact_str(&v), "839812/27"); // 4/27 + 31104
        assert!(deza_order_f(3, 3).is_err());
    }

    #[test]
    fn sps_size_examples() {
        assert_eq!(exact_str(&sps_size_bound(4).unwrap()), "9");
        assert_eq!(exact_str(&sps_size_bound(5).unwrap()), "12");
        assert_eq!(exact_str(&sps_size_bound(6).unwrap()), "16");
        assert!(sps_size_bound(3).is_err());
    }

    #[test]
    fn sps_order_examples() {
        assert_eq!(exact_str(&sps_order_bound(3).unwrap()), "10");
        assert_eq!(exact_str(&sps_order_bound(6).unwrap()), "30");
        assert_eq!(exact_str(&sps_order_bound(9).unwrap()), "68");
        assert_eq!(exact_str(&sps_order_bound(12).unwrap()), "130");
    }

    #[test]
    fn hall_conjecture_examples() {
        let v = hall_conjecture_bound(3, 2).unwrap();
        assert_eq!(exact_str(&v), "4");
        assert_eq!(v.status, BoundStatus::Conjecture);
        assert_eq!(exact_str(&hall_conjecture_bound(4, 3).unwrap()), "5");
        assert_eq!(exact_str(&hall_conjecture_bound(2, 1).unwrap()), "3");
    }

    #[test]
    fn order_conjecture_is_flagged() {
        let v = nontrivial_order_conjecture(3, 1).unwrap();
        assert_eq!(exact_str(&v), "4");
        assert_eq!(v.status, BoundStatus::Conjecture);
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(decimal_string(&rat(int(63), 4), 12), "15.75");
        assert_eq!(decimal_string(&rat_int(7), 12), "7");
        assert_eq!(decimal_string(&rat(int(1), 3), 6), "0.333333");
    }

    #[test]
    fn fano_report_hits_equalities() {
        let fano = ProjectivePlane::new(2).unwrap().to_hypergraph();
        let report = bound_report(&fano, &ReportContext::default());
        assert_eq!(report.stats.lambda, Some(1));
        assert_eq!(report.stats.kernel, Some(7));
        let by_name = |n: &str| {
            report
                .entries
                .iter()
                .find(|e| e.bound == n)
                .unwrap()
                .clone()
        };
        let fs = by_name("furedi-size");
        assert!(fs.applicable);
        assert_eq!(fs.measured, Some(7));
        assert_eq!(exact_str(fs.value.as_ref().unwrap()), "7");
        assert_eq!(fs.verdict, Some(Verdict::Satisfied));
        let ds = by_name("deza-size");
        assert!(ds.applicable);
        assert_eq!(exact_str(ds.value.as_ref().unwrap()), "7");
        assert_eq!(ds.verdict, Some(Verdict::Satisfied));
        assert!(report.all_theorems_hold());
    }

    #[test]
    fn sunflower_report_marks_deza_not_applicable() {
        let mut edges = Vec::new();
        for i in 0..100u64 {
            edges.push(vec![1, 2 + 2 * i, 3 + 2 * i]);
        }
        let h = Hypergraph::from_edge_ids(edges).unwrap();
        assert!(h.is_sunflower());
        let report = bound_report(&h, &ReportContext::default());
        let deza_size = report.entries.iter().find(|e| e.bound == "deza-size").unwrap();
        let deza_order = report.entries.iter().find(|e| e.bound == "deza-order-f").unwrap();
        assert!(!deza_size.applicable);
        assert!(!deza_order.applicable);
        // the degree bounds still apply and hold
        assert!(report.all_theorems_hold());
    }
}
