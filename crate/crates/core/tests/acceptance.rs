//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.

mod common;

use std::path::PathBuf;
use std::time::{Duration, Instant};

use autotower::cli::{read_tau_fixture, GroupSpec};
use autotower::constructions::{alt, cyclic, dihedral, direct_product, quaternion, semidirect, sym};
use autotower::graph::{realize, realize_table, verify_realization, verify_realization_table};
use autotower::tables::{isomorphic, to_table, DEFAULT_NODE_BUDGET};
use autotower::towers::{
    automorphism_tower, tau_report, verify_alt_incompatibility, verify_product_tower,
    verify_psl_correspondence, verify_remark_incompatibility, verify_wreath_tower, SuiteOptions,
    TowerCaps,
};
use autotower::{Permutation, Report};
use common::*;

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        passed,
        detail: detail.into(),
    }
}

fn failures(r: &Report) -> String {
    let failed: Vec<String> = r.failed_checks().map(|c| format!("{}: {}", c.name, c.detail)).collect();
    if failed.is_empty() {
        String::new()
    } else {
        format!(" [{}]", failed.join("; "))
    }
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let v = f();
    (v, start.elapsed())
}

fn wreath_heights() -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    let (small, elapsed) = timed(|| (1..=3).map(|n| (n, verify_wreath_tower(n).unwrap())).collect::<Vec<_>>());
    for (n, r) in &small {
        let h = r.height_or_tau.unwrap_or(0);
        ok &= r.passed && h == *n as u64 + 1;
        parts.push(format!("n={} height {}{}", n, h, failures(r)));
    }
    ok &= elapsed < Duration::from_secs(120);
    parts.push(format!("n≤3 in {:.1}s", elapsed.as_secs_f64()));
    let (r4, e4) = timed(|| verify_wreath_tower(4).unwrap());
    ok &= r4.passed && r4.height_or_tau == Some(5) && e4 < Duration::from_secs(1800);
    parts.push(format!("n=4 height {:?} in {:.1}s{}", r4.height_or_tau, e4.as_secs_f64(), failures(&r4)));
    outcome(ok, parts.join(", "))
}

fn psl_correspondence(o: &SuiteOptions, reports: &mut Vec<Report>) -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for (p, k) in [(2, 2), (2, 3), (3, 2)] {
        for (h, label) in [(1, "1"), (k, "Gal")] {
            let (r, e) = timed(|| verify_psl_correspondence(p, k, h, o).unwrap());
            let tau = r.height_or_tau.unwrap_or(u64::MAX);
            ok &= r.passed && tau <= 1 && e < Duration::from_secs(600);
            parts.push(format!(
                "q={} H={} tau {} in {:.1}s{}",
                p.pow(k),
                label,
                tau,
                e.as_secs_f64(),
                failures(&r)
            ));
            reports.push(r);
        }
    }
    outcome(ok, parts.join(", "))
}

fn fixtures_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

fn tower_fixtures(o: &SuiteOptions, reports: &mut Vec<Report>) -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    let oracle = oracle_tower(&Table::from_elements(5, &d10_generators()), 5);
    for (spec, expected) in [
        (GroupSpec::Sym(3), Some(0)),
        (GroupSpec::Alt(5), Some(1)),
        (GroupSpec::Dihedral(5), None),
    ] {
        let group = spec.build().unwrap();
        let fixture = read_tau_fixture(&fixtures_dir(), &spec).unwrap();
        let r = tau_report(&group, &spec.to_string(), expected, o).unwrap();
        let orders: Vec<u64> = r.per_level.iter().map(|l| l.order).collect();
        let fixture_ok = fixture
            .as_ref()
            .is_some_and(|f| Some(f.tau) == r.height_or_tau && f.orders == orders);
        ok &= r.passed && fixture_ok;
        parts.push(format!("{} tau {:?} (fixture {}){}", spec, r.height_or_tau, fixture_ok, failures(&r)));
        if spec == GroupSpec::Dihedral(5) {
            let oracle_ok = oracle.as_ref().is_some_and(|(tau, os)| {
                Some(*tau as u64) == r.height_or_tau && os.iter().map(|&x| x as u64).collect::<Vec<_>>() == orders
            });
            ok &= oracle_ok && r.height_or_tau == Some(1);
            parts.push(format!("oracle {:?} agrees {}", oracle, oracle_ok));
        }
        reports.push(r);
    }
    let alt5 = automorphism_tower(&alt(5).unwrap(), o.caps).unwrap();
    let s5 = isomorphic(alt5.levels[1].table(), &to_table(&sym(5).unwrap()).unwrap(), DEFAULT_NODE_BUDGET).unwrap();
    ok &= s5.is_some();
    parts.push(format!("Alt(5)_1 ≅ Sym(5) {}", s5.is_some()));
    let times_two = Permutation::from_images(vec![0, 2, 4, 1, 3]).unwrap();
    let frobenius = semidirect(&cyclic(5).unwrap(), &cyclic(4).unwrap(), &[times_two]).unwrap();
    let d5 = automorphism_tower(&dihedral(5).unwrap(), o.caps).unwrap();
    let f20 = isomorphic(d5.levels[1].table(), &to_table(&frobenius).unwrap(), DEFAULT_NODE_BUDGET).unwrap();
    ok &= f20.is_some();
    parts.push(format!("D10_1 ≅ Frobenius(20) {}", f20.is_some()));
    outcome(ok, parts.join(", "))
}

fn alt_example(o: &SuiteOptions) -> Outcome {
    let (r, e) = timed(|| verify_alt_incompatibility(3, 4, o).unwrap());
    let order_ok = r.checks.iter().any(|c| c.name == "join has order 60" && c.passed);
    outcome(
        r.passed && order_ok && e < Duration::from_secs(10),
        format!("join order 60 {}, {} checks in {:.2}s{}", order_ok, r.checks.len(), e.as_secs_f64(), failures(&r)),
    )
}

fn remark(o: &SuiteOptions) -> Outcome {
    let (r, e) = timed(|| verify_remark_incompatibility(4, 0, 2, o).unwrap());
    outcome(
        r.passed && e < Duration::from_secs(60),
        format!("{} checks in {:.2}s{}", r.checks.len(), e.as_secs_f64(), failures(&r)),
    )
}

fn product_tower(o: &SuiteOptions, reports: &mut Vec<Report>) -> Outcome {
    let (r, e) = timed(|| verify_product_tower(&dihedral(5).unwrap(), "dihedral 5", 5, o).unwrap());
    let orders: Vec<u64> = r.per_level.iter().map(|l| l.order).collect();
    let ok = r.passed && orders == [600, 2400] && e < Duration::from_secs(1800);
    let detail = format!(
        "tau {:?}, orders {:?}, {} checks in {:.1}s{}",
        r.height_or_tau,
        orders,
        r.checks.len(),
        e.as_secs_f64(),
        failures(&r)
    );
    reports.push(r);
    outcome(ok, detail)
}

fn oracle_equivalence() -> Outcome {
    let chains = chain_vs_closure(100, 7);
    let autos = aut_vs_bijections();
    let graphs = graphs_vs_brute(200, 11);
    let all: Vec<String> = [chains.clone(), autos.clone(), graphs.clone()].concat();
    outcome(
        all.is_empty(),
        format!(
            "chains {} mismatches / 100, automorphisms {} / 14 groups, graphs {} / 200{}",
            chains.len(),
            autos.len(),
            graphs.len(),
            if all.is_empty() { String::new() } else { format!(" {:?}", all) }
        ),
    )
}

fn tower_invariants(reports: &[Report]) -> Outcome {
    let mut checked = 0;
    let mut violations = 0u64;
    let mut missing = Vec::new();
    for r in reports {
        let counts: Vec<u64> = r
            .results
            .as_object()
            .into_iter()
            .flatten()
            .filter(|(k, _)| k.contains("invariants") && k.ends_with("_violations"))
            .map(|(_, v)| v.as_u64().unwrap_or(u64::MAX))
            .collect();
        if counts.is_empty() {
            missing.push(format!("{} {}", r.suite, r.parameters));
        }
        checked += counts.len();
        violations += counts.iter().sum::<u64>();
    }
    outcome(
        violations == 0 && missing.is_empty() && checked > 0,
        format!("{} towers across {} reports, {} violations, missing {:?}", checked, reports.len(), violations, missing),
    )
}

fn realization() -> Outcome {
    let c = |n| cyclic(n).unwrap();
    let cases = vec![
        ("trivial", autotower::PermGroup::trivial(1)),
        ("C2", c(2)),
        ("C3", c(3)),
        ("C6", c(6)),
        ("Sym(3)", sym(3).unwrap()),
        ("Klein four", direct_product(&c(2), &c(2)).group),
        ("D8", dihedral(4).unwrap()),
    ];
    let mut ok = true;
    let mut parts = Vec::new();
    for (name, g) in cases {
        let (r, e) = timed(|| verify_realization(&g, &realize(&g).unwrap(), DEFAULT_NODE_BUDGET).unwrap());
        ok &= r.passed && e < Duration::from_secs(60);
        parts.push(format!("{} {:.2}s{}", name, e.as_secs_f64(), failures(&r)));
    }
    let q8 = quaternion();
    let (r, e) = timed(|| verify_realization_table(&q8, &realize_table(&q8).unwrap(), DEFAULT_NODE_BUDGET).unwrap());
    ok &= r.passed && e < Duration::from_secs(60);
    parts.push(format!("Q8 {:.2}s{}", e.as_secs_f64(), failures(&r)));
    outcome(ok, parts.join(", "))
}

fn main() {
    let o = SuiteOptions {
        caps: TowerCaps::default(),
        ..SuiteOptions::default()
    };
    let mut reports = Vec::new();
    let criteria: Vec<(&str, Outcome)> = vec![
        ("1 wreath-tower heights", wreath_heights()),
        ("2 PGL correspondence", psl_correspondence(&o, &mut reports)),
        ("3 tower fixtures", tower_fixtures(&o, &mut reports)),
        ("4 alternating incompatibility", alt_example(&o)),
        ("5 wreath incompatibility in W_4", remark(&o)),
        ("6 product tower", product_tower(&o, &mut reports)),
        ("7 oracle equivalence", oracle_equivalence()),
        ("8 tower invariants", tower_invariants(&reports)),
        ("9 realization", realization()),
    ];
    let mut all = true;
    for (name, out) in &criteria {
        println!("{} criterion {}: {}", if out.passed { "PASS" } else { "FAIL" }, name, out.detail);
        all &= out.passed;
    }
    println!("{}/{} criteria passed", criteria.iter().filter(|c| c.1.passed).count(), criteria.len());
    if !all {
        std::process::exit(1);
    }
}
