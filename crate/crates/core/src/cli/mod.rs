//! Command-line front end. Every command produces [`Report`]s; text output is
//! a rendering of the same payload that `--json` prints.

mod spec;

pub use spec::{parse_spec, GroupSpec, MAX_NATURAL_DEGREE};

use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::constructions::{alt, dihedral, pgl2, sym, wreath_tower, FiniteField};
use crate::error::{Error, Result};
use crate::graph::{graph_automorphisms_with_budget, realize, verify_realization};
use crate::report::{Report, ReportBuilder};
use crate::tables::{automorphism_group, to_table};
use crate::towers::{
    ntower_report, tau_report, verify_alt_incompatibility, verify_product_tower,
    verify_psl_correspondence, verify_remark_incompatibility, verify_wreath_tower, SuiteOptions,
    TowerCaps, DEFAULT_SIZE_CAP, DEFAULT_STEP_CAP,
};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "autotower", version, about = "Automorphism and normaliser towers of finite groups")]
pub struct Cli {
    #[command(flatten)]
    pub options: GlobalOptions,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalOptions {
    /// Most automorphism-tower steps.
    #[arg(long, global = true, default_value_t = DEFAULT_STEP_CAP)]
    pub step_cap: usize,
    /// Largest tabulated group order.
    #[arg(long, global = true, default_value_t = DEFAULT_SIZE_CAP)]
    pub size_cap: u128,
    /// Backtracking node budget per search.
    #[arg(long, global = true, default_value_t = crate::tables::DEFAULT_NODE_BUDGET)]
    pub node_budget: u64,
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed for sampled invariant checks.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Allow `verify product` with n = 6.
    #[arg(long, global = true)]
    pub override_n6: bool,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Write computed fixtures rather than comparing against them.
    #[arg(long, global = true)]
    pub record_fixture: bool,
    /// Fixture directory, laid out as `<suite>/<params>.json`.
    #[arg(long, global = true, default_value = "fixtures")]
    pub fixtures_dir: PathBuf,
}

impl GlobalOptions {
    pub fn suite_options(&self) -> SuiteOptions {
        SuiteOptions {
            caps: TowerCaps {
                step_cap: self.step_cap,
                size_cap: self.size_cap,
                node_budget: self.node_budget,
            },
            seed: self.seed,
            override_n6: self.override_n6,
            ..SuiteOptions::default()
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Automorphism tower of a centreless group, level by level.
    Tower { spec: String },
    /// Normaliser tower of H in G.
    Ntower { h: String, g: String },
    /// Automorphism-tower height of a centreless group.
    Tau {
        spec: String,
        /// Expected height.
        #[arg(long)]
        expect: Option<u64>,
    },
    /// Run a verification suite.
    Verify {
        #[command(subcommand)]
        suite: Suite,
    },
    /// Build a graph whose automorphism group is the given group.
    Realize { spec: String },
    /// Time the core algorithms on fixed inputs.
    Bench,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Suite {
    /// Normaliser tower of W_0 in W_n.
    Wreath { n: usize },
    /// Automorphism tower of PGL(2,p^k) ⋊ H against the normaliser tower of H, |H| = h.
    Psl { p: u32, k: u32, h: u32 },
    /// Towers of H and H × Alt(n).
    Product { spec: String, n: usize },
    /// Wreath-tower incompatibility in W_n at indices i, j.
    Remark { n: usize, i: usize, j: usize },
    /// Alternating-group incompatibility for Δ_i, Δ_j.
    Altexample { i: usize, j: usize },
    /// Realize a group as a graph automorphism group and verify it.
    Realize { spec: String },
    /// The whole acceptance corpus, in parallel.
    All,
}

/// The result of one invocation.
pub struct Outcome {
    pub reports: Vec<Report>,
    /// Text for stdout (or `--out`).
    pub output: String,
    /// Text for stderr.
    pub diagnostics: String,
    pub exit_code: i32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TauFixture {
    pub suite: String,
    pub spec: String,
    pub tau: u64,
    pub orders: Vec<u64>,
}

pub fn fixture_path(dir: &Path, suite: &str, params: &str) -> PathBuf {
    dir.join(suite).join(format!("{}.json", params))
}

pub fn read_tau_fixture(dir: &Path, spec: &GroupSpec) -> Result<Option<TauFixture>> {
    let path = fixture_path(dir, "tau", &spec.slug());
    match fs::read_to_string(&path) {
        Ok(text) => serde_json::from_str(&text)
            .map(Some)
            .map_err(|e| Error::Construction(format!("fixture {}: {}", path.display(), e))),
        Err(_) => Ok(None),
    }
}

fn code_for(e: &Error) -> i32 {
    if e.is_resource_cap() {
        EXIT_CAP
    } else {
        EXIT_USAGE
    }
}

fn tau_with_fixture(spec_text: &str, expect: Option<u64>, o: &GlobalOptions) -> Result<Report> {
    let spec = parse_spec(spec_text)?;
    let group = spec.build()?;
    let mut report = tau_report(&group, &spec.to_string(), expect, &o.suite_options())?;
    let Some(tau) = report.height_or_tau else {
        return Ok(report);
    };
    let orders: Vec<u64> = report.per_level.iter().map(|l| l.order).collect();
    if o.record_fixture {
        if report.passed {
            let fixture = TauFixture {
                suite: "tau".into(),
                spec: spec.to_string(),
                tau,
                orders,
            };
            let path = fixture_path(&o.fixtures_dir, "tau", &spec.slug());
            if let Some(parent) = path.parent() {
                fs::create_dir_all(parent)
                    .map_err(|e| Error::Construction(format!("{}: {}", parent.display(), e)))?;
            }
            let body = serde_json::to_string_pretty(&fixture).expect("fixtures serialize");
            fs::write(&path, body + "\n")
                .map_err(|e| Error::Construction(format!("{}: {}", path.display(), e)))?;
        }
    } else if let Some(f) = read_tau_fixture(&o.fixtures_dir, &spec)? {
        report.add_check(
            "matches recorded fixture",
            f.tau == tau && f.orders == orders,
            format!("fixture tau {} orders {:?}", f.tau, f.orders),
        );
    }
    Ok(report)
}

fn realize_report(spec_text: &str, o: &GlobalOptions) -> Result<(Report, String)> {
    let spec = parse_spec(spec_text)?;
    let group = spec.build()?;
    let graph = realize(&group)?;
    let mut report = verify_realization(&group, &graph, o.node_budget)?;
    report.parameters = json!({ "group": spec.to_string(), "vertices": graph.vertex_count(), "edges": graph.edge_count() });
    report.digest = report.compute_digest();
    Ok((report, graph.to_edge_list()))
}

/// The acceptance corpus run by `verify all`.
pub fn corpus() -> Vec<(String, Suite)> {
    let mut out: Vec<(String, Suite)> = Vec::new();
    for n in 1..=4 {
        out.push((format!("wreath {}", n), Suite::Wreath { n }));
    }
    for (p, k) in [(2u32, 2u32), (2, 3), (3, 2)] {
        for h in [1, k] {
            out.push((format!("psl {} {} {}", p, k, h), Suite::Psl { p, k, h }));
        }
    }
    out.push(("altexample 3 4".into(), Suite::Altexample { i: 3, j: 4 }));
    out.push(("altexample 3 5".into(), Suite::Altexample { i: 3, j: 5 }));
    out.push(("remark 4 0 2".into(), Suite::Remark { n: 4, i: 0, j: 2 }));
    out.push((
        "product dihedral 5 5".into(),
        Suite::Product {
            spec: "dihedral 5".into(),
            n: 5,
        },
    ));
    for spec in [
        "cyclic 1",
        "cyclic 2",
        "cyclic 3",
        "cyclic 6",
        "sym 3",
        "product (cyclic 2) (cyclic 2)",
        "dihedral 4",
        "quaternion",
    ] {
        out.push((format!("realize {}", spec), Suite::Realize { spec: spec.into() }));
    }
    out
}

fn run_suite(suite: &Suite, o: &GlobalOptions) -> Result<Report> {
    let so = o.suite_options();
    match suite {
        Suite::Wreath { n } => verify_wreath_tower(*n),
        Suite::Psl { p, k, h } => verify_psl_correspondence(*p, *k, *h, &so),
        Suite::Product { spec, n } => {
            let s = parse_spec(spec)?;
            verify_product_tower(&s.build()?, &s.to_string(), *n, &so)
        }
        Suite::Remark { n, i, j } => verify_remark_incompatibility(*n, *i, *j, &so),
        Suite::Altexample { i, j } => verify_alt_incompatibility(*i, *j, &so),
        Suite::Realize { spec } => realize_report(spec, o).map(|(r, _)| r),
        Suite::All => Err(Error::OutOfRange("'all' cannot be nested".into())),
    }
}

fn run_all(o: &GlobalOptions) -> Vec<(String, Result<Report>)> {
    let corpus = corpus();
    let mut results: Vec<(String, Result<Report>)> = std::thread::scope(|scope| {
        let handles: Vec<_> = corpus
            .iter()
            .map(|(name, suite)| (name.clone(), scope.spawn(move || run_suite(suite, o))))
            .collect();
        handles
            .into_iter()
            .map(|(name, h)| (name, h.join().expect("suite thread panicked")))
            .collect()
    });
    results.sort_by(|a, b| a.0.cmp(&b.0));
    results
}

fn bench(o: &GlobalOptions) -> Result<Report> {
    let mut r = ReportBuilder::new("bench", json!({}));
    let mut time = |name: &str, f: &mut dyn FnMut() -> Result<String>| -> Result<()> {
        let start = Instant::now();
        let detail = f()?;
        r.timing(name, start.elapsed().as_millis() as u64);
        r.check(name, true, detail);
        Ok(())
    };
    time("stabilizer chain of Sym(12)", &mut || Ok(format!("order {}", sym(12)?.order())))?;
    time("wreath tower W_4", &mut || Ok(format!("order {}", wreath_tower(4)?.top().order())))?;
    time("normaliser of Alt(7) in Sym(7)", &mut || {
        Ok(format!("order {}", sym(7)?.normalizer(&alt(7)?)?.order()))
    })?;
    time("Cayley table of PGL(2,9)", &mut || {
        Ok(format!("order {}", to_table(&pgl2(&FiniteField::new(3, 2)?)?)?.order()))
    })?;
    time("Aut PGL(2,9)", &mut || {
        let t = to_table(&pgl2(&FiniteField::new(3, 2)?)?)?;
        Ok(format!("order {}", automorphism_group(&t)?.order()))
    })?;
    time("graph automorphisms of realized D_8", &mut || {
        let g = realize(&dihedral(4)?)?;
        let a = graph_automorphisms_with_budget(&g, o.node_budget)?;
        Ok(format!("{} vertices, order {}", g.vertex_count(), a.order()))
    })?;
    Ok(r.finish())
}

fn render(reports: &[Report], json_out: bool) -> String {
    if json_out {
        let text = if reports.len() == 1 {
            serde_json::to_string_pretty(&reports[0])
        } else {
            serde_json::to_string_pretty(reports)
        };
        text.expect("reports serialize") + "\n"
    } else {
        reports.iter().map(|r| r.render_text()).collect()
    }
}

fn single(result: Result<Report>, o: &GlobalOptions) -> Outcome {
    match result {
        Ok(r) => Outcome {
            output: render(std::slice::from_ref(&r), o.json),
            exit_code: r.exit_code(),
            reports: vec![r],
            diagnostics: String::new(),
        },
        Err(e) => Outcome {
            reports: Vec::new(),
            output: String::new(),
            diagnostics: format!("error: {}\n", e),
            exit_code: code_for(&e),
        },
    }
}

pub fn run(cli: &Cli) -> Outcome {
    let o = &cli.options;
    match &cli.command {
        Command::Tower { spec } => single(
            tau_with_fixture(spec, None, o).map(|mut r| {
                r.suite = "tower".into();
                r.digest = r.compute_digest();
                r
            }),
            o,
        ),
        Command::Tau { spec, expect } => single(tau_with_fixture(spec, *expect, o), o),
        Command::Ntower { h, g } => single(
            (|| {
                let (hs, gs) = (parse_spec(h)?, parse_spec(g)?);
                ntower_report(&hs.build()?, &gs.build()?, (&hs.to_string(), &gs.to_string()))
            })(),
            o,
        ),
        Command::Realize { spec } => match realize_report(spec, o) {
            Ok((r, edges)) => Outcome {
                output: if o.json {
                    let mut v = serde_json::to_value(&r).expect("reports serialize");
                    v["edge_list"] = json!(edges);
                    serde_json::to_string_pretty(&v).expect("reports serialize") + "\n"
                } else {
                    edges
                },
                diagnostics: if o.json { String::new() } else { r.render_text() },
                exit_code: r.exit_code(),
                reports: vec![r],
            },
            Err(e) => single(Err(e), o),
        },
        Command::Bench => single(bench(o), o),
        Command::Verify { suite: Suite::All } => {
            let results = run_all(o);
            let mut reports = Vec::new();
            let mut diagnostics = String::new();
            let mut exit_code = EXIT_PASS;
            for (name, res) in results {
                match res {
                    Ok(r) => {
                        exit_code = exit_code.max(r.exit_code());
                        reports.push(r);
                    }
                    Err(e) => {
                        diagnostics.push_str(&format!("error in {}: {}\n", name, e));
                        exit_code = exit_code.max(code_for(&e));
                    }
                }
            }
            Outcome {
                output: render(&reports, o.json),
                reports,
                diagnostics,
                exit_code,
            }
        }
        Command::Verify { suite } => single(run_suite(suite, o), o),
    }
}

/// Parses arguments, runs, writes output, and returns the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let _ = e.print();
            return code;
        }
    };
    let outcome = run(&cli);
    eprint!("{}", outcome.diagnostics);
    match &cli.options.out {
        Some(path) => {
            if let Err(e) = fs::write(path, &outcome.output) {
                eprintln!("error: cannot write {}: {}", path.display(), e);
                return EXIT_USAGE;
            }
        }
        None => print!("{}", outcome.output),
    }
    outcome.exit_code
}
