//! Verification suites. Each returns a [`Report`]; failed checks and cap stops
//! are recorded in the report rather than returned as errors, which are kept
//! for violated preconditions.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use super::automorphism::{automorphism_tower, AutTowerRecord, LevelSummary, TowerCaps};
use super::normaliser::{normaliser_tower, NormaliserTowerRecord};
use crate::constructions::{
    alt, dihedral, direct_product, pgammal2, sym, wreath_tower, DirectProduct, FiniteField,
};
use crate::error::{Error, Result};
use crate::group::{PermGroup, Permutation};
use crate::report::{Report, ReportBuilder};
use crate::tables::{
    hom_search, hom_search_from_perm, isomorphic, to_table_with_cap, CayleyTable,
    EnumeratedGroup, HomConstraints,
};

#[derive(Clone, Copy, Debug)]
pub struct SuiteOptions {
    pub caps: TowerCaps,
    pub seed: u64,
    /// Random elements drawn per automorphism generator in invariant checks.
    pub invariant_samples: usize,
    pub override_n6: bool,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            caps: TowerCaps::default(),
            seed: 0,
            invariant_samples: 16,
            override_n6: false,
        }
    }
}

macro_rules! attempt {
    ($report:expr, $context:expr, $e:expr) => {
        match $e {
            Ok(v) => v,
            Err(err) if err.is_input_error() => return Err(err),
            Err(err) => {
                $report.error($context, &err);
                return Ok($report.finish());
            }
        }
    };
}

fn normaliser_summaries(rec: &NormaliserTowerRecord) -> Vec<LevelSummary> {
    rec.levels
        .iter()
        .map(|l| LevelSummary {
            order: l.order() as u64,
            degree: l.degree(),
            centreless: None,
            complete: None,
        })
        .collect()
}

fn check_tower_invariants(r: &mut ReportBuilder, name: &str, rec: &AutTowerRecord, o: &SuiteOptions) {
    let mut rng = ChaCha8Rng::seed_from_u64(o.seed);
    let violations = rec.check_invariants(&mut rng, o.invariant_samples);
    let detail = if violations.is_empty() {
        format!("{} levels clean", rec.levels.len())
    } else {
        violations.join("; ")
    };
    r.check(name, violations.is_empty(), detail);
    r.result(&format!("{}_violations", name.replace(' ', "_")), violations.len());
}

fn isomorphism_check(
    r: &mut ReportBuilder,
    name: &str,
    a: &CayleyTable,
    b: &CayleyTable,
    budget: u64,
) -> Result<bool> {
    let found = isomorphic(a, b, budget)?;
    let detail = format!(
        "orders {} and {}: {}",
        a.order(),
        b.order(),
        if found.is_some() { "isomorphism found" } else { "no isomorphism" }
    );
    Ok(r.check(name, found.is_some(), detail))
}

/// Height and closed forms of the `W_0`-normaliser tower in `W_n`.
pub fn verify_wreath_tower(n: usize) -> Result<Report> {
    let t = wreath_tower(n)?;
    let mut r = ReportBuilder::new("wreath", json!({ "n": n }));
    let problems = t.check();
    r.check("construction", problems.is_empty(), problems.join("; "));
    let rec = attempt!(r, "normaliser tower", normaliser_tower(&t.groups[0], t.top()));
    r.levels(normaliser_summaries(&rec));
    r.height(rec.height as u64, Some(n as u64 + 1));
    r.check(
        "height",
        rec.height == n + 1,
        format!("height {} for n = {}", rec.height, n),
    );
    let problems = rec.check();
    r.check("tower structure", problems.is_empty(), problems.join("; "));
    let degree = t.degree();
    for l in 0..n {
        let mut gens: Vec<Permutation> = t.groups[l].generators().to_vec();
        for m in l..n {
            gens.extend(t.starred[m].generators().iter().cloned());
        }
        let expected = PermGroup::new(degree, gens)?;
        let name = format!("N_{} closed form", l + 1);
        match rec.levels.get(l + 1) {
            Some(level) => {
                let forward = level.generators().iter().all(|g| expected.has(g));
                let backward = expected.generators().iter().all(|g| level.has(g));
                r.check(
                    &name,
                    forward && backward,
                    format!("order {} vs {}", level.order(), expected.order()),
                );
            }
            None => {
                r.check(&name, false, "tower ended early");
            }
        }
    }
    let top_matches = rec.levels.last().map(|l| l.same_group(t.top())) == Some(true);
    r.check("last level is W_n", top_matches, "");
    r.result(
        "orders",
        rec.orders().iter().map(|o| o.to_string()).collect::<Vec<_>>(),
    );
    Ok(r.finish())
}

/// Compares the automorphism tower of `PGL(2,q) ⋊ H` with the normaliser
/// tower of `H` in the Galois group, for `H` of order `h`.
pub fn verify_psl_correspondence(p: u32, k: u32, h: u32, o: &SuiteOptions) -> Result<Report> {
    let f = FiniteField::new(p, k)?;
    let gal = f.galois_group();
    let sub = f.galois_subgroup(h)?;
    let base = pgammal2(&f, h)?;
    let mut r = ReportBuilder::new("psl", json!({ "p": p, "k": k, "h": h, "q": f.order() }));
    let ntower = normaliser_tower(&sub, &gal)?;
    let rec = attempt!(r, "automorphism tower", automorphism_tower(&base, o.caps));
    r.levels(rec.summaries());
    r.height(rec.tau as u64, Some(ntower.height as u64));
    r.check(
        "tower completes",
        rec.is_complete(),
        format!("{:?} after {} levels", rec.termination, rec.levels.len()),
    );
    if !rec.is_complete() {
        r.stopped_by_cap(format!("{:?} after {} levels", rec.termination, rec.levels.len()));
    }
    r.check(
        "heights match",
        rec.tau == ntower.height,
        format!("tau {} vs normaliser height {}", rec.tau, ntower.height),
    );
    r.check(
        "finite-field heights are at most 1",
        rec.tau <= 1 && ntower.height <= 1 && ntower.terminated_at_full,
        format!("tau {}, normaliser height {}", rec.tau, ntower.height),
    );
    for (alpha, (level, n_alpha)) in rec.levels.iter().zip(&ntower.levels).enumerate() {
        let hn = n_alpha.order() as u32;
        let expected = pgammal2(&f, hn)?;
        let expected = attempt!(r, "tabulating PGL ⋊ N", to_table_with_cap(&expected, o.caps.size_cap));
        let name = format!("G_{} ≅ PGL(2,{}) ⋊ N_{}(H)", alpha, f.order(), alpha);
        attempt!(
            r,
            "isomorphism search",
            isomorphism_check(&mut r, &name, level.table(), &expected, o.caps.node_budget)
        );
    }
    r.result("normaliser_orders", ntower.orders());
    r.result("tower_orders", rec.orders());
    check_tower_invariants(&mut r, "tower invariants", &rec, o);
    Ok(r.finish())
}

/// The centrality and conjugation identities behind the failure of
/// compatibility for wreath towers, and the absence of the forced surjection.
pub fn verify_remark_incompatibility(n: usize, i: usize, j: usize, o: &SuiteOptions) -> Result<Report> {
    if !(i + 2 < j + 1 && j + 2 <= n) {
        return Err(Error::OutOfRange(format!(
            "need i + 2 < j + 1 and j + 2 ≤ n, got n = {}, i = {}, j = {}",
            n, i, j
        )));
    }
    let t = wreath_tower(n)?;
    let degree = t.degree();
    let sigma = |m: usize| t.sigma[m - 1].clone();
    let mut r = ReportBuilder::new("remark", json!({ "n": n, "i": i, "j": j }));
    let hi = PermGroup::new(degree, vec![sigma(i + 1), sigma(i + 2)])?;
    let hj = PermGroup::new(degree, vec![sigma(j + 1), sigma(j + 2)])?;
    let x = &(&(&sigma(j + 1) * &sigma(j + 2)) * &sigma(j + 1)) * &sigma(j + 2);
    let hi_elements = hi.elements()?;
    let hj_elements = hj.elements()?;

    let central = hj.has(&x) && hj_elements.iter().all(|y| y.commutes_with(&x));
    r.check(
        "x is central in H_j",
        central,
        format!("checked against {} elements", hj_elements.len()),
    );
    let s = sigma(j + 1);
    let agree = hi_elements.iter().filter(|y| y.conjugate_by(&s) == y.conjugate_by(&x)).count();
    r.check(
        "σ_{j+1} and x conjugate H_i alike",
        agree == hi_elements.len(),
        format!("{} of {} elements", agree, hi_elements.len()),
    );
    let si = sigma(i + 1);
    let noncentral = hi_elements.iter().any(|y| !y.commutes_with(&si));
    r.check("σ_{i+1} is not central in H_i", noncentral, "");

    let d8 = to_table_with_cap(&dihedral(4)?, 8)?;
    let hi_table = EnumeratedGroup::new(&hi, 8)?;
    let hj_table = EnumeratedGroup::new(&hj, 8)?;
    attempt!(r, "isomorphism search", isomorphism_check(&mut r, "H_i ≅ D_8", hi_table.table(), &d8, o.caps.node_budget));
    attempt!(r, "isomorphism search", isomorphism_check(&mut r, "H_j ≅ D_8", hj_table.table(), &d8, o.caps.node_budget));

    let source = hi.join(&hj)?;
    let idx = |p: &Permutation| hi_table.index_of(p).expect("pinned image lies in H_i");
    let pins = vec![
        (sigma(j + 1), idx(&sigma(i + 1))),
        (sigma(j + 2), idx(&sigma(i + 2))),
        (sigma(i + 1), idx(&sigma(i + 1))),
        (sigma(i + 2), idx(&sigma(i + 2))),
    ];
    let (found, nodes) = attempt!(
        r,
        "homomorphism search",
        hom_search_from_perm(&source, hi_table.table(), &pins, true, o.caps.node_budget)
    );
    r.check(
        "no compatible surjection ⟨H_i, H_j⟩ → H_i",
        found.is_none(),
        format!("source order {}, {} search nodes", source.order(), nodes),
    );
    r.result("source_order", source.order().to_string());
    r.result("search_nodes", nodes);
    Ok(r.finish())
}

/// Alternating groups on `Δ_i = {0,1,2,i}` and `Δ_j = {0,1,2,j}`.
pub fn verify_alt_incompatibility(i: usize, j: usize, o: &SuiteOptions) -> Result<Report> {
    if !(3 <= i && i < j) {
        return Err(Error::OutOfRange(format!("need 3 ≤ i < j, got i = {}, j = {}", i, j)));
    }
    let degree = j + 1;
    let c = |pts: &[usize]| {
        Permutation::from_cycles(degree, &[pts.iter().map(|&x| x as u32).collect()])
    };
    let mut r = ReportBuilder::new("altexample", json!({ "i": i, "j": j }));
    let ai = PermGroup::new(degree, vec![c(&[0, 1, 2])?, c(&[0, 1, i])?])?;
    let aj = PermGroup::new(degree, vec![c(&[0, 1, 2])?, c(&[0, 1, j])?])?;
    r.check("Alt(Δ_i) has order 12", ai.order() == 12, ai.order().to_string());
    let join = ai.join(&aj)?;
    r.check("join has order 60", join.order() == 60, join.order().to_string());
    let support_ok = join.generators().iter().all(|g| {
        g.is_even() && (0..degree as u32).all(|x| g.apply(x) == x || x < 3 || x == i as u32 || x == j as u32)
    });
    r.check("join is Alt(Δ_i ∪ Δ_j)", support_ok && join.order() == 60, "");
    r.check("join is simple", join.is_simple()?, "");

    let src = EnumeratedGroup::new(&join, 60)?;
    let tgt = EnumeratedGroup::new(&ai, 12)?;
    let s = |p: Result<Permutation>| p.map(|p| src.index_of(&p).expect("element of the join"));
    let t = |p: Result<Permutation>| p.map(|p| tgt.index_of(&p).expect("element of Alt(Δ_i)"));
    let pins = vec![
        (s(c(&[0, 1, 2]))?, t(c(&[0, 1, 2]))?),
        (s(c(&[0, 1, i]))?, t(c(&[0, 1, i]))?),
        (s(c(&[0, 1, j]))?, t(c(&[0, 1, i]))?),
    ];
    let constrained = HomConstraints {
        pins,
        surjective: true,
        injective: false,
    };
    let found = attempt!(
        r,
        "homomorphism search",
        hom_search(src.table(), tgt.table(), &constrained, o.caps.node_budget)
    );
    r.check("no compatible surjection onto Alt(Δ_i)", found.is_none(), "exhaustive search");
    let any = HomConstraints {
        surjective: true,
        ..HomConstraints::default()
    };
    let found = attempt!(
        r,
        "homomorphism search",
        hom_search(src.table(), tgt.table(), &any, o.caps.node_budget)
    );
    r.check("no surjection onto Alt(Δ_i) at all", found.is_none(), "exhaustive search");
    Ok(r.finish())
}

/// Each simple minimal normal subgroup of `A × B` lies in one of the factors.
pub fn factor_absorption(p: &DirectProduct) -> Result<(usize, Vec<String>)> {
    let mut simple = 0;
    let mut violations = Vec::new();
    for m in p.group.minimal_normal_subgroups()? {
        if !m.is_simple()? {
            continue;
        }
        simple += 1;
        if !m.is_subgroup_of(&p.left) && !m.is_subgroup_of(&p.right) {
            violations.push(format!("simple normal subgroup of order {} lies in neither factor", m.order()));
        }
    }
    Ok((simple, violations))
}

/// Towers of `H` and of `H × Alt(n)`, compared level by level.
pub fn verify_product_tower(h: &PermGroup, label: &str, n: usize, o: &SuiteOptions) -> Result<Report> {
    if n < 5 {
        return Err(Error::OutOfRange(format!("need n ≥ 5, got {}", n)));
    }
    if n == 6 && !o.override_n6 {
        return Err(Error::OutOfRange(
            "n = 6 needs the override: Aut(Sym(6)) is larger than Sym(6)".into(),
        ));
    }
    let centre = h.center()?.order();
    if centre != 1 {
        return Err(Error::NontrivialCentre { order: centre as usize });
    }
    let half_factorial: u128 = (3..=n as u128).product();
    if h.order() >= half_factorial {
        return Err(Error::OutOfRange(format!(
            "|H| = {} must be below n!/2 = {}",
            h.order(),
            half_factorial
        )));
    }
    let mut r = ReportBuilder::new("product", json!({ "h": label, "n": n, "label": "finite analog" }));
    let prod = direct_product(h, &alt(n)?);
    let htower = attempt!(r, "tower of H", automorphism_tower(h, o.caps));
    let gtower = attempt!(r, "tower of H × Alt(n)", automorphism_tower(&prod.group, o.caps));
    r.levels(gtower.summaries());
    r.height(gtower.tau as u64, Some(htower.tau as u64));
    r.check(
        "both towers complete",
        htower.is_complete() && gtower.is_complete(),
        format!("{:?} and {:?}", htower.termination, gtower.termination),
    );
    if !(htower.is_complete() && gtower.is_complete()) {
        r.stopped_by_cap(format!("{:?} and {:?}", htower.termination, gtower.termination));
    }
    r.check(
        "tau(H × Alt(n)) = tau(H)",
        gtower.tau == htower.tau,
        format!("{} vs {}", gtower.tau, htower.tau),
    );
    let sym_table = to_table_with_cap(&sym(n)?, o.caps.size_cap)?;
    let mut witness = None;
    for beta in 1..=gtower.tau.min(htower.tau) {
        let expected = htower.levels[beta].table().direct_product(&sym_table)?;
        let name = format!("G_{} ≅ H_{} × Sym({})", beta, beta, n);
        let found = attempt!(
            r,
            "isomorphism search",
            isomorphic(&expected, gtower.levels[beta].table(), o.caps.node_budget)
        );
        r.check(
            &name,
            found.is_some(),
            format!("orders {} and {}", expected.order(), gtower.levels[beta].table().order()),
        );
        if beta == gtower.tau {
            witness = found;
        }
    }
    r.result("h_orders", htower.orders());
    r.result("g_orders", gtower.orders());

    let small = direct_product(&sym(3)?, &alt(5)?);
    let (count, violations) = factor_absorption(&small)?;
    let right_is_minimal = small
        .group
        .minimal_normal_subgroups()?
        .iter()
        .any(|m| m.same_group(&small.right));
    r.check(
        "simple normal subgroups of Sym(3) × Alt(5) lie in a factor",
        violations.is_empty() && right_is_minimal,
        format!("{} simple minimal normal subgroups; {}", count, violations.join("; ")),
    );
    let (count, violations) = factor_absorption(&prod)?;
    r.check(
        "simple normal subgroups of H × Alt(n) lie in a factor",
        violations.is_empty() && count > 0,
        format!("{} simple minimal normal subgroups; {}", count, violations.join("; ")),
    );

    if let Some(iso) = witness {
        // Image of H_τ × 1 inside the top level.
        let top = &gtower.levels[gtower.tau];
        let s_order = sym_table.order() as u32;
        let h_top = htower.levels[gtower.tau].table();
        let gens: Vec<Permutation> = h_top
            .generators()
            .iter()
            .map(|&a| top.enumerated.element(iso.map[(a * s_order) as usize]).clone())
            .collect();
        let h_image = PermGroup::new(top.group().degree(), gens)?;
        let mut disjoint = 0;
        let mut bad = Vec::new();
        for a in top.group().minimal_normal_subgroups()? {
            if !a.is_simple()? || a.intersection_order(&h_image)? != 1 {
                continue;
            }
            disjoint += 1;
            if !a.commutes_elementwise(&h_image) {
                bad.push(format!("order {}", a.order()));
            }
        }
        r.check(
            "simple normal A with A ∩ H_τ = 1 centralizes H_τ",
            bad.is_empty() && disjoint > 0,
            format!("{} such subgroups; failures: {}", disjoint, bad.join(", ")),
        );
    }
    check_tower_invariants(&mut r, "invariants of the H tower", &htower, o);
    check_tower_invariants(&mut r, "invariants of the product tower", &gtower, o);
    Ok(r.finish())
}

/// Automorphism tower of one group, with an optional expected height.
pub fn tau_report(g: &PermGroup, label: &str, expected: Option<u64>, o: &SuiteOptions) -> Result<Report> {
    let mut r = ReportBuilder::new("tau", json!({ "group": label }));
    let rec = attempt!(r, "automorphism tower", automorphism_tower(g, o.caps));
    r.levels(rec.summaries());
    r.height(rec.tau as u64, expected);
    r.check(
        "tower completes",
        rec.is_complete(),
        format!("{:?}", rec.termination),
    );
    if !rec.is_complete() {
        r.stopped_by_cap(format!("{:?} after {} steps; tau is at least {}", rec.termination, rec.tau, rec.tau));
    }
    if let Some(e) = expected {
        r.check("tau matches", rec.tau as u64 == e, format!("tau {}", rec.tau));
    }
    r.result("tau", rec.tau);
    r.result("termination", rec.termination);
    r.result("orders", rec.orders());
    if let Some(o) = rec.untabulated_order {
        r.result("untabulated_order", o.to_string());
    }
    check_tower_invariants(&mut r, "tower invariants", &rec, o);
    Ok(r.finish())
}

/// Normaliser tower of `H` in `G`.
pub fn ntower_report(h: &PermGroup, g: &PermGroup, labels: (&str, &str)) -> Result<Report> {
    let mut r = ReportBuilder::new("ntower", json!({ "h": labels.0, "g": labels.1 }));
    let rec = normaliser_tower(h, g)?;
    r.levels(normaliser_summaries(&rec));
    r.height(rec.height as u64, None);
    let problems = rec.check();
    r.check("tower structure", problems.is_empty(), problems.join("; "));
    r.result("height", rec.height);
    r.result("terminated_at_full", rec.terminated_at_full);
    r.result(
        "orders",
        rec.orders().iter().map(|o| o.to_string()).collect::<Vec<_>>(),
    );
    Ok(r.finish())
}
