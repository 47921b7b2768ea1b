//! `powmap` — construct small finite groups, count subset solutions of
//! `U^n(S) = L`, run the divisibility-claim suite, and sweep the two open
//! questions over the built-in catalog.
//!
//! Exit codes: 0 = success and every check holds; 1 = a genuine failing
//! verdict or an oracle disagreement; 2 = usage, construction, or I/O error.

mod report;
mod resolve;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand};
use powmap::count::BigCount;
use powmap::explorer::{classd, group_digest, op1, Catalog};
use powmap::group::GroupTable;
use powmap::power::{self, ORACLE_PREIMAGE_BOUND};
use powmap::theorems::suite::{run_suite, SuiteConfig, SuiteReport};
use powmap::theorems::{ClaimId, Verdict};
use serde::Serialize;

use report::{Format, Meta};

#[derive(Parser)]
#[command(name = "powmap", version, about = "Finite-group power-map engine", max_term_width = 100)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "table")]
    format: Format,

    /// Write the report to this path instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Worker threads for parallel sweeps (default: all cores).
    #[arg(long, global = true)]
    workers: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Construct a group and emit its multiplication table.
    ///
    /// With --format json the output is a plain group file that `--group
    /// @path` accepts back.
    Construct {
        /// Group spec: constructor pattern (C12, D8, Q16, Dic3, S4, A4,
        /// He3, M27, M16, SD16, C4:C4, C2xC2:C4), products with `x`
        /// (direct) and `o` (central), or @path to a JSON group file.
        #[arg(long)]
        group: String,
    },
    /// Count the non-empty subsets S with U^n(S) = L, exactly.
    Count {
        /// Group spec (see `construct`).
        #[arg(long)]
        group: String,
        /// Power-map exponent, at least 1.
        #[arg(long)]
        n: u64,
        /// Target set L: comma-separated element ids, or one of
        /// all | identity | center | image | class-of:<id> | subgroup:<ids>.
        #[arg(long)]
        set: String,
        /// Cross-check against the independent subset-enumeration oracle.
        #[arg(long)]
        oracle: bool,
    },
    /// Run the divisibility-claim suite over the catalog.
    Verify {
        /// "all", or a comma-separated list of claim tokens
        /// (e.g. THM_1_1,THM_2_3).
        #[arg(long, default_value = "all")]
        suite: String,
        /// Sweep every catalog group up to this order (at most 255).
        #[arg(long, default_value_t = 32)]
        max_order: usize,
        /// Seed for the subset-sampling layer of the suite.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Sweep the normalizer-gcd question over every non-normal subgroup in
    /// the catalog.
    Sweep {
        /// Catalog bound (at most 255).
        #[arg(long, default_value_t = 64)]
        max_order: usize,
        /// Subgroup-lattice bound; groups above it are reported as skipped.
        /// Defaults to --max-order.
        #[arg(long)]
        lattice_bound: Option<usize>,
    },
    /// Class-D membership: one group, or the whole catalog.
    Classd {
        /// Group spec; omit to classify every catalog entry.
        #[arg(long)]
        group: Option<String>,
        /// Catalog bound when no --group is given.
        #[arg(long, default_value_t = 16)]
        max_order: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("powmap: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    if let Some(workers) = cli.workers {
        if workers == 0 {
            bail!("--workers must be at least 1");
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build_global()
            .context("configuring worker threads")?;
    }
    let out = cli.out.as_deref();
    match cli.command {
        Command::Construct { group } => cmd_construct(&group, cli.format, out),
        Command::Count { group, n, set, oracle } => {
            cmd_count(&group, n, &set, oracle, cli.format, out)
        }
        Command::Verify { suite, max_order, seed } => {
            cmd_verify(&suite, max_order, seed, cli.format, out)
        }
        Command::Sweep { max_order, lattice_bound } => {
            cmd_sweep(max_order, lattice_bound, cli.format, out)
        }
        Command::Classd { group, max_order } => {
            cmd_classd(group.as_deref(), max_order, cli.format, out)
        }
    }
}

// ---------------------------------------------------------------- construct

#[derive(Serialize)]
struct MulRow {
    a: usize,
    b: usize,
    product: usize,
}

fn cmd_construct(spec: &str, format: Format, out: Option<&Path>) -> Result<ExitCode> {
    let g = resolve::resolve_group(spec)?;
    let meta = Meta { catalog_hash: group_digest(&g) };
    let text = match format {
        // A bare group file, so the output round-trips through `--group @path`.
        Format::Json => {
            let mut text = serde_json::to_string_pretty(&g).context("serializing group")?;
            text.push('\n');
            text
        }
        Format::Csv => {
            let rows: Vec<MulRow> = (0..g.order())
                .flat_map(|a| {
                    let g = &g;
                    (0..g.order()).map(move |b| MulRow {
                        a,
                        b,
                        product: g
                            .mul(powmap::group::ElementId::new(a), powmap::group::ElementId::new(b))
                            .index(),
                    })
                })
                .collect();
            report::to_csv(&meta, &rows)?
        }
        Format::Table => {
            let mut text = report::table_header(&meta);
            text.push_str(&format!("{} (order {})\n", g.name(), g.order()));
            for x in g.elements() {
                text.push_str(&format!("{:>3}  {}\n", x.index(), g.label(x)));
            }
            text.push('\n');
            for a in g.elements() {
                let row: Vec<String> =
                    g.elements().map(|b| format!("{:>3}", g.mul(a, b).index())).collect();
                text.push_str(&row.join(" "));
                text.push('\n');
            }
            text
        }
    };
    report::emit(out, &text)?;
    Ok(ExitCode::SUCCESS)
}

// -------------------------------------------------------------------- count

#[derive(Serialize)]
struct CountBody {
    group: String,
    order: usize,
    n: u64,
    set: Vec<usize>,
    set_labels: Vec<String>,
    count: BigCount,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle_agrees: Option<bool>,
}

#[derive(Serialize)]
struct CountRow<'a> {
    group: &'a str,
    order: usize,
    n: u64,
    set: String,
    count: String,
    count_factored: String,
    oracle: Option<u64>,
    oracle_agrees: Option<bool>,
}

fn cmd_count(
    spec: &str,
    n: u64,
    set_spec: &str,
    oracle: bool,
    format: Format,
    out: Option<&Path>,
) -> Result<ExitCode> {
    if n == 0 {
        bail!("--n must be at least 1");
    }
    let g = resolve::resolve_group(spec)?;
    let set = resolve::resolve_set(&g, set_spec, Some(n))?;
    let count = power::count_solutions(&g, n, &set)?;
    let (oracle_hits, oracle_agrees) = if oracle {
        let hits = power::brute_force_count(&g, n, &set, ORACLE_PREIMAGE_BOUND)?;
        let agrees = count.to_decimal() == hits.to_string();
        (Some(hits), Some(agrees))
    } else {
        (None, None)
    };

    let meta = Meta { catalog_hash: group_digest(&g) };
    let text = match format {
        Format::Json => {
            let body = CountBody {
                group: g.name().to_string(),
                order: g.order(),
                n,
                set: set.iter().map(|x| x.index()).collect(),
                set_labels: set.iter().map(|x| g.label(x).to_string()).collect(),
                count: count.clone(),
                oracle: oracle_hits,
                oracle_agrees,
            };
            report::to_json(&meta, &body)?
        }
        Format::Csv => {
            let row = CountRow {
                group: g.name(),
                order: g.order(),
                n,
                set: ids_desc(&set),
                count: count.to_decimal(),
                count_factored: count.factored_desc(),
                oracle: oracle_hits,
                oracle_agrees,
            };
            report::to_csv(&meta, &[row])?
        }
        Format::Table => {
            let mut text = format!("{}\n", count.to_decimal());
            if let Some(hits) = oracle_hits {
                text.push_str(&format!(
                    "oracle {hits} ({})\n",
                    if oracle_agrees == Some(true) { "agrees" } else { "DISAGREES" }
                ));
            }
            text
        }
    };
    report::emit(out, &text)?;
    Ok(if oracle_agrees == Some(false) { ExitCode::from(1) } else { ExitCode::SUCCESS })
}

fn ids_desc(set: &powmap::group::SubsetMask) -> String {
    let ids: Vec<String> = set.iter().map(|x| x.index().to_string()).collect();
    ids.join(";")
}

// ------------------------------------------------------------------- verify

#[derive(Serialize)]
struct VerifyBody<'a> {
    suite: &'a str,
    max_order: usize,
    seed: u64,
    #[serde(flatten)]
    report: &'a SuiteReport,
}

#[derive(Serialize)]
struct VerdictRow<'a> {
    status: &'a str,
    claim_id: &'a str,
    group: &'a str,
    n: u64,
    instance: &'a str,
    dividend: String,
    divisor: String,
    holds: bool,
    note: &'a str,
}

fn verdict_row<'a>(status: &'a str, v: &'a Verdict) -> VerdictRow<'a> {
    VerdictRow {
        status,
        claim_id: v.claim.token(),
        group: &v.group,
        n: v.n,
        instance: &v.instance,
        dividend: v.dividend.to_decimal(),
        divisor: v.divisor.to_decimal(),
        holds: v.holds,
        note: &v.note,
    }
}

fn verdict_line(v: &Verdict) -> String {
    format!(
        "  {} {} n={} {}: {} vs {} — {}\n",
        v.claim.token(),
        v.group,
        v.n,
        v.instance,
        v.dividend.to_decimal(),
        v.divisor.to_decimal(),
        v.note
    )
}

fn cmd_verify(
    suite: &str,
    max_order: usize,
    seed: Option<u64>,
    format: Format,
    out: Option<&Path>,
) -> Result<ExitCode> {
    let catalog = Catalog::build(max_order)?;
    let meta = Meta { catalog_hash: catalog.hash() };
    let mut config = SuiteConfig::default().with_max_order(max_order);
    if suite != "all" {
        let claims: Vec<ClaimId> = suite
            .split(',')
            .map(|token| {
                ClaimId::from_token(token.trim())
                    .ok_or_else(|| anyhow!("unknown claim token {token:?}"))
            })
            .collect::<Result<_>>()?;
        config = config.with_claims(claims);
    }
    if let Some(seed) = seed {
        config = config.with_seed(seed);
    }
    let entries = catalog.suite_entries();
    let suite_report = run_suite(&entries, &config)?;

    let text = match format {
        Format::Json => report::to_json(
            &meta,
            &VerifyBody { suite, max_order, seed: config.seed, report: &suite_report },
        )?,
        Format::Csv => {
            let mut rows = Vec::new();
            rows.extend(suite_report.failures.iter().map(|v| verdict_row("failure", v)));
            rows.extend(
                suite_report.informational.iter().map(|v| verdict_row("informational", v)),
            );
            report::to_csv(&meta, &rows)?
        }
        Format::Table => {
            let mut text = report::table_header(&meta);
            text.push_str(&format!(
                "suite {suite} over {} groups (order <= {max_order}), {} instances\n",
                suite_report.entries_run, suite_report.total_instances
            ));
            for (claim, stats) in &suite_report.claim_stats {
                text.push_str(&format!(
                    "  {:<22} instances {:>9}  failures {:>3}  informational {:>3}\n",
                    claim.token(),
                    stats.instances,
                    stats.failures,
                    stats.informational
                ));
            }
            if suite_report.failures.is_empty() {
                text.push_str("no failing verdicts\n");
            } else {
                text.push_str(&format!("FAILURES ({} stored):\n", suite_report.failures.len()));
                for v in &suite_report.failures {
                    text.push_str(&verdict_line(v));
                }
            }
            if !suite_report.informational.is_empty() {
                text.push_str(&format!(
                    "informational (expected non-holding demonstrations, {}):\n",
                    suite_report.informational.len()
                ));
                for v in &suite_report.informational {
                    text.push_str(&verdict_line(v));
                }
            }
            text
        }
    };
    report::emit(out, &text)?;
    Ok(if suite_report.is_clean() { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

// -------------------------------------------------------------------- sweep

#[derive(Serialize)]
struct SweepBody<'a> {
    max_order: usize,
    lattice_bound: usize,
    #[serde(flatten)]
    summary: &'a op1::Op1Summary,
}

fn cmd_sweep(
    max_order: usize,
    lattice_bound: Option<usize>,
    format: Format,
    out: Option<&Path>,
) -> Result<ExitCode> {
    let bound = lattice_bound.unwrap_or(max_order);
    let catalog = Catalog::build(max_order)?;
    let meta = Meta { catalog_hash: catalog.hash() };
    let summary = op1::sweep_catalog_open_problem_1(&catalog, bound)?;

    let text = match format {
        Format::Json => {
            report::to_json(&meta, &SweepBody { max_order, lattice_bound: bound, summary: &summary })?
        }
        Format::Csv => {
            let rows: Vec<VerdictRow> =
                summary.counterexamples.iter().map(|v| verdict_row("counterexample", v)).collect();
            let mut text = report::to_csv(&meta, &rows)?;
            if rows.is_empty() {
                text.push_str("# no counterexamples\n");
            }
            text
        }
        Format::Table => {
            let mut text = report::table_header(&meta);
            text.push_str(&format!(
                "normalizer-gcd sweep: {} groups, {} non-normal subgroups, {} instances\n",
                summary.groups_swept, summary.non_normal_subgroups, summary.instances
            ));
            for skip in &summary.skipped {
                text.push_str(&format!("  skipped {skip}\n"));
            }
            if summary.holds_everywhere() {
                text.push_str("no counterexamples\n");
            } else {
                text.push_str(&format!("COUNTEREXAMPLES ({}):\n", summary.counterexamples.len()));
                for v in &summary.counterexamples {
                    text.push_str(&verdict_line(v));
                }
            }
            text.push_str(&format!("note: {}\n", summary.coverage));
            text
        }
    };
    report::emit(out, &text)?;
    Ok(if summary.holds_everywhere() { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

// ------------------------------------------------------------------- classd

#[derive(Serialize)]
struct ClassDAllBody {
    max_order: usize,
    reports: Vec<classd::ClassDReport>,
}

#[derive(Serialize)]
struct ClassDRow<'a> {
    group: &'a str,
    order: usize,
    member: bool,
    method: String,
    witness_n: Option<u64>,
    witness_element: Option<usize>,
    witness_fiber: Option<u32>,
    witness_count: Option<String>,
    witness_bound: Option<String>,
}

fn classd_row(r: &classd::ClassDReport) -> ClassDRow<'_> {
    ClassDRow {
        group: &r.group,
        order: r.order,
        member: r.member,
        method: r.method.to_string(),
        witness_n: r.witness.as_ref().map(|w| w.n),
        witness_element: r.witness.as_ref().map(|w| w.element),
        witness_fiber: r.witness.as_ref().map(|w| w.fiber_size),
        witness_count: r.witness.as_ref().map(|w| w.count.to_decimal()),
        witness_bound: r.witness.as_ref().map(|w| w.bound.to_decimal()),
    }
}

fn classd_line(r: &classd::ClassDReport) -> String {
    let mut line = format!(
        "  {:<14} order {:>3}  member {:<5}  {}",
        r.group, r.order, r.member, r.method
    );
    if let Some(w) = &r.witness {
        line.push_str(&format!(
            "  witness n={} l={} ({}) fiber {} — {} does not divide {}",
            w.n,
            w.element,
            w.element_label,
            w.fiber_size,
            w.count.factored_desc(),
            w.bound.factored_desc()
        ));
    }
    line.push('\n');
    line
}

fn classd_single(g: &GroupTable) -> Result<classd::ClassDReport> {
    let method = if g.order() <= classd::EXHAUSTIVE_MAX_ORDER {
        classd::ClassDMethod::Exhaustive
    } else {
        classd::ClassDMethod::FiberCriterion
    };
    Ok(classd::class_d_membership_with_method(g, method)?)
}

fn cmd_classd(
    spec: Option<&str>,
    max_order: usize,
    format: Format,
    out: Option<&Path>,
) -> Result<ExitCode> {
    let (meta, reports, single) = match spec {
        Some(spec) => {
            let g = resolve::resolve_group(spec)?;
            let meta = Meta { catalog_hash: group_digest(&g) };
            (meta, vec![classd_single(&g)?], true)
        }
        None => {
            let catalog = Catalog::build(max_order)?;
            let meta = Meta { catalog_hash: catalog.hash() };
            let reports = catalog
                .entries
                .iter()
                .map(classd::class_d_membership)
                .collect::<powmap::Result<Vec<_>>>()?;
            (meta, reports, false)
        }
    };

    let text = match format {
        Format::Json => {
            if single {
                report::to_json(&meta, &reports[0])?
            } else {
                report::to_json(&meta, &ClassDAllBody { max_order, reports })?
            }
        }
        Format::Csv => {
            let rows: Vec<ClassDRow> = reports.iter().map(classd_row).collect();
            report::to_csv(&meta, &rows)?
        }
        Format::Table => {
            let mut text = report::table_header(&meta);
            for r in &reports {
                text.push_str(&classd_line(r));
            }
            let members = reports.iter().filter(|r| r.member).count();
            text.push_str(&format!("{members} of {} in class D\n", reports.len()));
            text
        }
    };
    report::emit(out, &text)?;
    Ok(ExitCode::SUCCESS)
}
