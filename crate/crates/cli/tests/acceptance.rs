//! The acceptance gate. One test per criterion; each prints a single
//! pass line and enforces its stated wall-clock limit.

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::{Command, Output};
use std::time::{Duration, Instant};

use hyperforge::bounds::{
    deza_order_f, deza_size_bound, furedi_size_bound, majumder_kernel_bound,
    ord_ker_bound_1_intersecting, sps_order_bound, Verdict,
};
use hyperforge::constructions::{
    lambda_lift, one_intersecting_h_a, sps_star_family, sunflower_family, furedi_order_family,
};
use hyperforge::diagnostics::{
    classify_degrees, edge_vertex_bound_check, mccarthy_vanstone_max, mccarthy_vanstone_residual,
};
use hyperforge::geometry::ProjectivePlane;
use hyperforge::kernel::{kernel_degree_rule, min_kernel_exact, KernelBudget};
use hyperforge::oracle::{
    enumerate_trees, for_each_family, labeled_tree_count, max_size, min_kernel_brute, Predicate,
    SearchSpace,
};
use hyperforge::sps::{is_bounded, is_one_cross_intersecting, sps_order, tree_odd_sum};
use hyperforge::{Hypergraph, VertexId};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_hyperforge"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

fn tmp(name: &str) -> String {
    PathBuf::from(env!("CARGO_TARGET_TMPDIR"))
        .join(name)
        .to_str()
        .unwrap()
        .to_string()
}

fn within(start: Instant, limit: Duration, what: &str) {
    let elapsed = start.elapsed();
    assert!(elapsed < limit, "{what} took {elapsed:?}, limit {limit:?}");
}

/// The value must equal the integer m: at most m passes, m+1 fails.
fn assert_bound_equals(value: &hyperforge::bounds::BoundValue, m: u64) {
    assert_eq!(value.verdict(m), Verdict::Satisfied);
    assert_eq!(value.verdict(m + 1), Verdict::Violated);
    assert_eq!(value.floor_certified.to_string(), m.to_string());
    assert_eq!(value.ceil_certified.to_string(), m.to_string());
}

#[test]
fn criterion_1_fano_extremality() {
    let start = Instant::now();
    let path = tmp("acc1_fano.txt");
    assert_eq!(code(&run(&["construct", "projective-plane", "--q", "2", "--out", &path])), 0);
    let verify = run(&["verify", "--input", &path, "--lambda", "1", "--format", "json"]);
    assert_eq!(code(&verify), 0);
    let v: serde_json::Value = serde_json::from_slice(&verify.stdout).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["report"]["stats"]["edge_count"], 7);
    for bound in ["furedi-size", "deza-size"] {
        let entry = v["report"]["bounds"]
            .as_array()
            .unwrap()
            .iter()
            .find(|e| e["bound"] == bound)
            .unwrap();
        assert_eq!(entry["measured"], 7, "{bound}");
        assert_eq!(entry["verdict"], "satisfied", "{bound}");
        assert_eq!(entry["value"]["exact"], "7", "{bound}");
    }

    let fano = ProjectivePlane::new(2).unwrap().to_hypergraph();
    assert_eq!(fano.uniformity(), Some(3));
    assert!(fano.is_lambda_intersecting(1));
    assert!(!fano.is_sunflower());
    assert_eq!(fano.edge_count(), 7);
    assert_bound_equals(&deza_size_bound(3, 1).unwrap(), 7);
    assert_bound_equals(&furedi_size_bound(3, 3).unwrap(), 7);

    within(start, Duration::from_secs(1), "criterion 1");
    println!("acceptance criterion 1 (fano extremality): PASS");
}

#[test]
fn criterion_2_order_family_equality() {
    let start = Instant::now();
    // order of the duplicated-and-padded plane family, in closed form
    let plane_order = |q: u64, delta: u64, k: u64| {
        let points = q * q + q + 1;
        points * (delta / (q + 1)) * (k - q - 1) + points
    };
    for (q, delta, k, expected) in [(2u64, 3u64, 6u64, 28u64), (3, 4, 8, 65)] {
        let (h, manifest) = furedi_order_family(q, delta, Some(k)).unwrap();
        let order = h.order() as u64;
        assert_eq!(order, expected);
        assert_eq!(order, plane_order(q, delta, k));
        assert_eq!(order, (k * k / 4 - k / 2 + 1) * (delta + 1));
        assert_eq!(manifest.predicted_order, order);
        assert_eq!(h.max_degree() as u64, delta);
        assert_eq!(h.uniformity(), Some(k as usize));
        assert!(h.is_intersecting());
    }
    within(start, Duration::from_secs(1), "criterion 2");
    println!("acceptance criterion 2 (order family equality): PASS");
}

#[test]
fn criterion_3_one_intersecting_census() {
    let start = Instant::now();
    for q in [2u64, 3, 5] {
        let k = q + 1 + (q + 1) / 2;
        for a in 0..=q + 1 {
            let (h, manifest) = one_intersecting_h_a(k, a, Some(q)).unwrap();
            assert_eq!(h.uniformity(), Some(k as usize), "q={q} a={a}");
            assert!(h.is_lambda_intersecting(1), "q={q} a={a}");
            assert!(!h.is_sunflower(), "q={q} a={a}");
            let kernel = kernel_degree_rule(&h).unwrap();
            if q == 5 {
                assert_eq!(
                    kernel.len() as u64,
                    q * q + q + 1 + a + a * (q * q / 4),
                    "q=5 kernel closed form at a={a}"
                );
            }
            assert_eq!(manifest.predicted_order, h.order() as u64);
            assert_eq!(manifest.predicted_kernel, Some(kernel.len() as u64));
            let measured = (h.order() + kernel.len()) as u64;
            let bound = ord_ker_bound_1_intersecting(k).unwrap();
            assert_ne!(bound.verdict(measured), Verdict::Violated, "q={q} a={a}");
        }
    }
    within(start, Duration::from_secs(30), "criterion 3");
    println!("acceptance criterion 3 (one-intersecting census): PASS");
}

#[test]
fn criterion_4_lambda_lifts() {
    let start = Instant::now();
    for a in 0..=3u64 {
        let (base, _) = one_intersecting_h_a(4, a, Some(2)).unwrap();
        for lambda in [2u64, 3] {
            let lifted = lambda_lift(&base, lambda).unwrap();
            assert!(lifted.is_lambda_intersecting(lambda as usize), "a={a} lambda={lambda}");
            assert_eq!(
                lifted.order() as u64,
                base.order() as u64 + lambda - 1,
                "a={a} lambda={lambda}"
            );
            let k = lifted.uniformity().unwrap() as u64;
            let bound = deza_order_f(k, lambda).unwrap();
            assert_ne!(
                bound.verdict(lifted.order() as u64),
                Verdict::Violated,
                "a={a} lambda={lambda}"
            );
        }
    }
    within(start, Duration::from_secs(5), "criterion 4");
    println!("acceptance criterion 4 (lambda lifts): PASS");
}

#[test]
fn criterion_5_lemma_suite() {
    let start = Instant::now();
    let mut instances: Vec<(Hypergraph, u64)> = Vec::new();
    for q in [2u64, 3, 5] {
        let k = q + 1 + (q + 1) / 2;
        for a in 0..=q + 1 {
            instances.push((one_intersecting_h_a(k, a, Some(q)).unwrap().0, 1));
        }
    }
    for a in 0..=3u64 {
        let (base, _) = one_intersecting_h_a(4, a, Some(2)).unwrap();
        for lambda in [2u64, 3] {
            instances.push((lambda_lift(&base, lambda).unwrap(), lambda));
        }
    }
    let fano = ProjectivePlane::new(2).unwrap().to_hypergraph();
    instances.push((fano.clone(), 1));
    instances.push((sunflower_family(3, 1, 45).unwrap(), 1));
    instances.push((sunflower_family(6, 2, 10).unwrap(), 2));

    for (h, lambda) in &instances {
        assert_eq!(edge_vertex_bound_check(h, *lambda), Ok(true));
        assert!(mccarthy_vanstone_max(h, *lambda).unwrap() <= 0);
    }
    for v in fano.support() {
        assert_eq!(mccarthy_vanstone_residual(&fano, 1, v), Ok(0));
    }

    let sun = sunflower_family(3, 1, 45).unwrap();
    let classes = classify_degrees(&sun, 1).unwrap();
    assert!(classes.violations.is_empty());
    assert_eq!(classes.heavy, BTreeSet::from([VertexId(1)]));
    assert_eq!(classes.low.len(), 90);

    within(start, Duration::from_secs(5), "criterion 5");
    println!("acceptance criterion 5 (lemma suite): PASS");
}

#[test]
fn criterion_6_sps_extremality() {
    let start = Instant::now();
    for (n, expected) in [(3u64, 10u64), (6, 30), (9, 68), (12, 130)] {
        let (s, manifest) = sps_star_family(n).unwrap();
        assert!(is_bounded(&s, 2, n as usize));
        assert_eq!(is_one_cross_intersecting(&s), Ok(true));
        let order = sps_order(&s) as u64;
        assert_eq!(order, (n + 3).pow(3) / 27 + (n + 3) / 3);
        let stars = (n + 3) / 3;
        assert_eq!(order, stars * stars * (n / 3) + stars * stars + stars);
        assert_eq!(order, expected);
        assert_eq!(manifest.predicted_order, order);
        assert_bound_equals(&sps_order_bound(n).unwrap(), order);
    }
    within(start, Duration::from_secs(1), "criterion 6");
    println!("acceptance criterion 6 (sps extremality): PASS");
}

#[test]
fn criterion_7_tree_sum_exhaustive() {
    let start = Instant::now();
    let mut total = 0u64;
    for n in 1..=8usize {
        let mut seen = 0u64;
        for tree in enumerate_trees(n).unwrap() {
            let t = tree.edge_count() as u64;
            let (sum, b, w) = tree_odd_sum(&tree);
            assert_eq!(sum, b * b.saturating_sub(1) + w * w.saturating_sub(1));
            assert!(sum >= t * t / 2);
            assert_eq!(sum == t * t / 2, b.abs_diff(w) <= 1);
            seen += 1;
        }
        assert_eq!(seen, labeled_tree_count(n));
        total += seen;
    }
    assert_eq!(total, 280_393);
    within(start, Duration::from_secs(60), "criterion 7");
    println!("acceptance criterion 7 (tree sum exhaustive): PASS");
}

#[test]
fn criterion_8_oracle_concordance() {
    let start = Instant::now();

    let bounded_pairs = SearchSpace::new(2, 6)
        .with_predicate(Predicate::Intersecting)
        .with_predicate(Predicate::MaxDegreeAtMost(2));
    assert_eq!(max_size(&bounded_pairs).unwrap().best, 3);

    for n_max in [5usize, 6] {
        let space = SearchSpace::new(2, n_max)
            .with_predicate(Predicate::LambdaIntersecting(1))
            .with_predicate(Predicate::NonSunflower);
        assert_eq!(max_size(&space).unwrap().best, 3);
    }
    assert_bound_equals(&deza_size_bound(2, 1).unwrap(), 3);

    let fano_space = SearchSpace::new(3, 7)
        .with_predicate(Predicate::LambdaIntersecting(1))
        .with_predicate(Predicate::NonSunflower);
    assert_eq!(max_size(&fano_space).unwrap().best, 7);

    assert_bound_equals(&majumder_kernel_bound(2).unwrap(), 3);
    assert_bound_equals(&majumder_kernel_bound(3).unwrap(), 9);

    // dual-route kernel agreement over whole enumerated spaces
    let budget = KernelBudget::default();
    let sweep = |space: &SearchSpace, kernel_cap: usize, check_rule: bool| {
        let mut families = 0u64;
        for_each_family(space, |h| {
            families += 1;
            let exact = min_kernel_exact(h, &budget).unwrap();
            let brute = min_kernel_brute(h).unwrap();
            assert_eq!(exact.size, brute, "exact vs brute on {h:?}");
            assert!(exact.size <= kernel_cap, "kernel cap on {h:?}");
            if check_rule && h.edge_count() >= 2 {
                let rule = kernel_degree_rule(h).unwrap();
                assert_eq!(exact.size, rule.len(), "degree rule on {h:?}");
            }
        })
        .unwrap();
        families
    };

    // pair counts by hand: star subsets (5*15 - 10 and 6*31 - 15 after
    // removing single edges counted at both endpoints) plus triangles
    let intersecting_pairs = SearchSpace::new(2, 5).with_predicate(Predicate::Intersecting);
    assert_eq!(sweep(&intersecting_pairs, 3, false), 65 + 10);

    let one_intersecting_pairs =
        SearchSpace::new(2, 6).with_predicate(Predicate::LambdaIntersecting(1));
    assert_eq!(sweep(&one_intersecting_pairs, 3, true), 171 + 20);

    // triple counts are enumeration snapshots
    let intersecting_triples = SearchSpace::new(3, 6)
        .with_predicate(Predicate::Intersecting)
        .with_m_max(4);
    assert_eq!(sweep(&intersecting_triples, 9, false), 4520);

    let one_intersecting_triples =
        SearchSpace::new(3, 7).with_predicate(Predicate::LambdaIntersecting(1));
    assert_eq!(sweep(&one_intersecting_triples, 9, true), 3215);

    within(start, Duration::from_secs(600), "criterion 8");
    println!("acceptance criterion 8 (oracle concordance): PASS");
}

#[test]
fn criterion_9_determinism_and_round_trip() {
    let start = Instant::now();

    // hypergraph generators with the lambda each verifies at
    let mut generators: Vec<(Vec<String>, Option<u64>)> = vec![
        (svec(&["construct", "projective-plane", "--q", "2"]), Some(1)),
        (svec(&["construct", "furedi-order", "--q", "2", "--delta", "3", "--k", "6"]), None),
        (svec(&["construct", "furedi-order", "--q", "3", "--delta", "4", "--k", "8"]), None),
        (svec(&["construct", "sunflower", "--k", "3", "--lambda", "1", "--m", "45"]), Some(1)),
    ];
    for q in [2u64, 3, 5] {
        let k = q + 1 + (q + 1) / 2;
        for a in 0..=q + 1 {
            let args = svec(&[
                "construct", "h-a",
                "--k", &k.to_string(),
                "--a", &a.to_string(),
                "--q", &q.to_string(),
            ]);
            generators.push((args, Some(1)));
        }
    }

    for (i, (args, lambda)) in generators.iter().enumerate() {
        let strs: Vec<&str> = args.iter().map(String::as_str).collect();
        let first = run(&strs);
        let second = run(&strs);
        assert_eq!(code(&first), 0, "{args:?}");
        assert_eq!(first.stdout, second.stdout, "{args:?}");

        // --out writes the same bytes the bare command prints
        let path = tmp(&format!("acc9_gen_{i}.txt"));
        let mut out_args = strs.clone();
        out_args.extend(["--out", &path]);
        assert_eq!(code(&run(&out_args)), 0, "{args:?}");
        assert_eq!(std::fs::read(&path).unwrap(), first.stdout, "{args:?}");

        let mut verify_args = vec!["verify", "--input", &path];
        let lambda_text;
        if let Some(l) = lambda {
            lambda_text = l.to_string();
            verify_args.extend(["--lambda", &lambda_text]);
        }
        assert_eq!(code(&run(&verify_args)), 0, "{args:?}");

        // write(read(file)) reproduces canonical files byte for byte;
        // the identity lift is the echo, so sunflowers sit this one out
        if args[1] != "sunflower" {
            let echoed = run(&["construct", "lambda-lift", "--input", &path, "--lambda", "1"]);
            assert_eq!(code(&echoed), 0, "{args:?}");
            assert_eq!(echoed.stdout, first.stdout, "{args:?}");
        }
    }

    // lifts of every q=2 instance verify at their lambda
    for a in 0..=3u64 {
        let base = tmp(&format!("acc9_base_{a}.txt"));
        let out = run(&[
            "construct", "h-a", "--k", "4", "--a", &a.to_string(), "--q", "2", "--out", &base,
        ]);
        assert_eq!(code(&out), 0);
        for lambda in ["2", "3"] {
            let lifted = tmp(&format!("acc9_lift_{a}_{lambda}.txt"));
            let first = run(&[
                "construct", "lambda-lift", "--input", &base, "--lambda", lambda, "--out", &lifted,
            ]);
            assert_eq!(code(&first), 0);
            assert_eq!(code(&run(&["verify", "--input", &lifted, "--lambda", lambda])), 0);
        }
    }

    // sps generators
    for n in ["3", "6", "9", "12"] {
        let args = ["construct", "sps-star", "--n", n];
        let first = run(&args);
        let second = run(&args);
        assert_eq!(code(&first), 0);
        assert_eq!(first.stdout, second.stdout);
        let path = tmp(&format!("acc9_sps_{n}.json"));
        std::fs::write(&path, &first.stdout).unwrap();
        assert_eq!(code(&run(&["sps", "verify", "--input", &path, "--n", n])), 0);
    }

    // worker counts reproduce the serial kernel byte for byte
    let fano = tmp("acc9_fano.txt");
    run(&["construct", "projective-plane", "--q", "2", "--out", &fano]);
    let serial = run(&["kernel", "exact", "--input", &fano, "--workers", "1"]);
    for workers in ["2", "3", "4"] {
        let par = run(&["kernel", "exact", "--input", &fano, "--workers", workers]);
        assert_eq!(par.stdout, serial.stdout, "workers = {workers}");
    }

    let _ = start;
    println!("acceptance criterion 9 (determinism and round-trip): PASS");
}

fn svec(parts: &[&str]) -> Vec<String> {
    parts.iter().map(|s| s.to_string()).collect()
}
