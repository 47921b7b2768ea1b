//! Sweeps of the claim checkers over families of groups.
//!
//! [`run_suite`] runs every enabled claim over every entry — in parallel
//! across entries — and merges the results into a deterministic
//! [`SuiteReport`]: identical inputs produce byte-identical reports
//! regardless of worker count, because per-entry results are collected in
//! entry order and all verdict lists are sorted by [`Verdict::sort_key`].
//! [`run_suite_streaming`] replays the identical verdict stream sequentially
//! for line-oriented sinks.
//!
//! Instance selection is deterministic: exhaustive families below the
//! configured bounds, and seeded sampling (keyed on the suite seed, the
//! group name, and a purpose tag) above them.

use super::checks;
use super::{ClaimId, ExtraspecialFamily, Verdict};
use crate::count::BigCount;
use crate::error::{Error, Result};
use crate::group::constructors::{self, dihedral, symmetric};
use crate::group::{ElementId, GroupTable, SubsetMask};
use crate::power::{self, PowerProfile};
use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};

/// Default seed for the sampled instance families.
pub const DEFAULT_SEED: u64 = 0x9e37_79b9_7f4a_7c15;

/// How many failing verdicts are kept verbatim per claim per group; the
/// full failure counts always live in [`ClaimStats`].
const STORED_FAILURE_CAP: usize = 25;

/// One group to sweep, with its construction-time family tag when it was
/// built as an extraspecial family member.
#[derive(Clone, Copy, Debug)]
pub struct SuiteEntry<'a> {
    pub group: &'a GroupTable,
    pub extraspecial: Option<ExtraspecialFamily>,
}

impl<'a> SuiteEntry<'a> {
    pub fn plain(group: &'a GroupTable) -> Self {
        SuiteEntry { group, extraspecial: None }
    }

    pub fn tagged(group: &'a GroupTable, family: ExtraspecialFamily) -> Self {
        SuiteEntry { group, extraspecial: Some(family) }
    }
}

/// Instance-selection policy for a sweep.
#[derive(Clone, Debug)]
pub struct SuiteConfig {
    /// Entries above this order are skipped (and listed in the report).
    pub max_order: usize,
    /// Bound passed to the subgroup-lattice enumeration.
    pub lattice_bound: usize,
    /// Up to this order, subset families are exhaustive (all `2^|G|-1`
    /// non-empty subsets); above it they are sampled.
    pub exhaustive_subsets_max_order: usize,
    /// Sampled subsets per group (each tested against every `n`).
    pub random_subsets: usize,
    /// Sampled subsets per abelian group for the closed-form claim.
    pub abelian_samples: usize,
    /// Up to this many conjugacy classes, normal subsets are swept
    /// exhaustively (all non-empty class unions); above it they are sampled.
    pub class_union_exhaustive_max_classes: usize,
    /// Seed for all sampled families.
    pub seed: u64,
    /// Restrict the sweep to these claims; `None` means all.
    pub claims: Option<BTreeSet<ClaimId>>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            max_order: 64,
            lattice_bound: 64,
            exhaustive_subsets_max_order: 12,
            random_subsets: 1000,
            abelian_samples: 200,
            class_union_exhaustive_max_classes: 12,
            seed: DEFAULT_SEED,
            claims: None,
        }
    }
}

impl SuiteConfig {
    pub fn with_max_order(mut self, max_order: usize) -> Self {
        self.max_order = max_order;
        self
    }

    pub fn with_claims(mut self, claims: impl IntoIterator<Item = ClaimId>) -> Self {
        self.claims = Some(claims.into_iter().collect());
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    /// A reduced-volume policy for unit tests.
    pub fn quick() -> Self {
        SuiteConfig {
            max_order: 16,
            random_subsets: 64,
            abelian_samples: 32,
            ..SuiteConfig::default()
        }
    }

    fn claim_enabled(&self, claim: ClaimId) -> bool {
        self.claims.as_ref().map_or(true, |s| s.contains(&claim))
    }
}

/// Per-claim instance and failure totals.
#[derive(Clone, Copy, Debug, Default, Serialize, Deserialize)]
pub struct ClaimStats {
    pub instances: u64,
    pub failures: u64,
    /// Expected failures: published counterexamples, and order-statistics
    /// divisibility outside the class where it is claimed.
    pub informational: u64,
}

/// Aggregated result of a sweep.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct SuiteReport {
    pub entries_run: usize,
    /// Entries that were not swept, with the reason.
    pub skipped: Vec<String>,
    pub total_instances: u64,
    pub claim_stats: BTreeMap<ClaimId, ClaimStats>,
    /// Genuine failures, sorted by [`Verdict::sort_key`]. At most
    /// [`STORED_FAILURE_CAP`] are kept per claim per group; `claim_stats`
    /// carries the full counts.
    pub failures: Vec<Verdict>,
    /// Expected non-holding verdicts (see [`ClaimStats::informational`]),
    /// sorted by [`Verdict::sort_key`].
    pub informational: Vec<Verdict>,
}

impl SuiteReport {
    /// Total genuine failures across all claims.
    pub fn failure_count(&self) -> u64 {
        self.claim_stats.values().map(|s| s.failures).sum()
    }

    pub fn is_clean(&self) -> bool {
        self.failure_count() == 0
    }
}

/// Run the sweep in parallel over `entries` and aggregate a report.
pub fn run_suite(entries: &[SuiteEntry<'_>], config: &SuiteConfig) -> Result<SuiteReport> {
    let results: Vec<Result<EntryResult>> =
        entries.par_iter().map(|entry| run_entry(entry, config)).collect();
    let mut report = SuiteReport::default();
    for result in results {
        merge_entry(&mut report, result?);
    }
    append_paper_counterexamples(&mut report, config)?;
    report.failures.sort_by_key(Verdict::sort_key);
    report.informational.sort_by_key(Verdict::sort_key);
    Ok(report)
}

/// Run the sweep sequentially, handing every verdict (in deterministic
/// order) to `sink` before aggregation, and return the same report
/// [`run_suite`] would produce.
pub fn run_suite_streaming(
    entries: &[SuiteEntry<'_>],
    config: &SuiteConfig,
    mut sink: impl FnMut(&Verdict),
) -> Result<SuiteReport> {
    let mut report = SuiteReport::default();
    for entry in entries {
        let result = run_entry_with(entry, config, &mut |v| sink(v))?;
        merge_entry(&mut report, result);
    }
    let extra = append_paper_counterexamples(&mut report, config)?;
    for verdict in &extra {
        sink(verdict);
    }
    report.failures.sort_by_key(Verdict::sort_key);
    report.informational.sort_by_key(Verdict::sort_key);
    Ok(report)
}

/// The two published counterexamples, re-verified on every run: they must
/// still fail, and they land in the informational list, never in failures.
pub fn paper_counterexamples() -> Result<Vec<Verdict>> {
    let mut out = Vec::new();

    // S3, n = 2, L = {e, (1 2 3)}: the count is 15, but the endomorphism
    // divisor pattern [2^gcd(n,|G|)-1]^|L| would demand a multiple of 9.
    // The strengthening genuinely needs the endomorphism hypothesis.
    let s3 = symmetric(3)?;
    let set = SubsetMask::from_ids(
        s3.order(),
        [
            s3.identity(),
            s3.element_by_label("(1 2 3)").expect("3-cycle exists"),
        ],
    );
    let count = power::count_solutions(&s3, 2, &set)?;
    let divisor = BigCount::mersenne_power(2u64.gcd(&(s3.order() as u64)), set.len());
    if count.is_multiple_of(&divisor) {
        return Err(Error::VerificationConflict {
            detail: format!(
                "S3 counterexample unexpectedly holds: {} is a multiple of {}",
                count.to_decimal(),
                divisor.to_decimal()
            ),
        });
    }
    out.push(Verdict::membership(
        ClaimId::EndomorphismDivisor,
        s3.name(),
        2,
        "L={0,3}",
        count,
        divisor,
        false,
        "published counterexample: without the endomorphism hypothesis the \
         gcd(n,|G|) divisor fails (15 is not a multiple of 9)",
    ));

    // D8, n = 2, L = {e}: the count 63 does not divide (2^|G|-1)^|L| = 255.
    // The divisibility consequence of the closed form is abelian-only.
    let d8 = dihedral(8)?;
    let set = SubsetMask::singleton(d8.order(), d8.identity());
    let count = power::count_solutions(&d8, 2, &set)?;
    let bound = BigCount::mersenne_power(d8.order() as u64, set.len());
    if bound.is_multiple_of(&count) {
        return Err(Error::VerificationConflict {
            detail: format!(
                "D8 counterexample unexpectedly holds: {} divides {}",
                count.to_decimal(),
                bound.to_decimal()
            ),
        });
    }
    out.push(Verdict::membership(
        ClaimId::AbelianClosedForm,
        d8.name(),
        2,
        "L={0}",
        bound,
        count,
        false,
        "published counterexample: the count 63 does not divide (2^|G|-1)^|L| \
         = 255, so the divisibility consequence does not extend to D8",
    ));
    Ok(out)
}

struct EntryResult {
    skipped: Option<String>,
    instances: u64,
    stats: BTreeMap<ClaimId, ClaimStats>,
    failures: Vec<Verdict>,
    informational: Vec<Verdict>,
}

fn merge_entry(report: &mut SuiteReport, result: EntryResult) {
    match result.skipped {
        Some(reason) => report.skipped.push(reason),
        None => report.entries_run += 1,
    }
    report.total_instances += result.instances;
    for (claim, stats) in result.stats {
        let slot = report.claim_stats.entry(claim).or_default();
        slot.instances += stats.instances;
        slot.failures += stats.failures;
        slot.informational += stats.informational;
    }
    report.failures.extend(result.failures);
    report.informational.extend(result.informational);
}

fn append_paper_counterexamples(
    report: &mut SuiteReport,
    config: &SuiteConfig,
) -> Result<Vec<Verdict>> {
    let mut kept = Vec::new();
    for verdict in paper_counterexamples()? {
        if !config.claim_enabled(verdict.claim) {
            continue;
        }
        let slot = report.claim_stats.entry(verdict.claim).or_default();
        slot.instances += 1;
        slot.informational += 1;
        report.total_instances += 1;
        report.informational.push(verdict.clone());
        kept.push(verdict);
    }
    Ok(kept)
}

fn run_entry(entry: &SuiteEntry<'_>, config: &SuiteConfig) -> Result<EntryResult> {
    run_entry_with(entry, config, &mut |_| {})
}

fn run_entry_with(
    entry: &SuiteEntry<'_>,
    config: &SuiteConfig,
    observer: &mut dyn FnMut(&Verdict),
) -> Result<EntryResult> {
    let g = entry.group;
    if g.order() > config.max_order {
        return Ok(EntryResult {
            skipped: Some(format!(
                "{} (order {}): above suite order bound {}",
                g.name(),
                g.order(),
                config.max_order
            )),
            instances: 0,
            stats: BTreeMap::new(),
            failures: Vec::new(),
            informational: Vec::new(),
        });
    }

    let mut collector = Collector::new(g);
    entry_verdicts(g, entry.extraspecial.as_ref(), config, &mut |verdict| {
        observer(&verdict);
        collector.record(verdict);
    })?;
    Ok(collector.finish())
}

/// Classifies and tallies the verdicts of one entry.
struct Collector<'a> {
    group: &'a GroupTable,
    /// Lazily computed: whether some power-map fiber size fails to divide
    /// `|G|`. Groups with such a violation are outside the class for which
    /// the order-statistics divisibility is claimed, so their
    /// `OMEGA_DIV` failures are expected and informational.
    fiber_criterion_violated: Option<bool>,
    result: EntryResult,
    stored: BTreeMap<ClaimId, usize>,
}

impl<'a> Collector<'a> {
    fn new(group: &'a GroupTable) -> Self {
        Collector {
            group,
            fiber_criterion_violated: None,
            result: EntryResult {
                skipped: None,
                instances: 0,
                stats: BTreeMap::new(),
                failures: Vec::new(),
                informational: Vec::new(),
            },
            stored: BTreeMap::new(),
        }
    }

    fn record(&mut self, verdict: Verdict) {
        self.result.instances += 1;
        let stats = self.result.stats.entry(verdict.claim).or_default();
        stats.instances += 1;
        if verdict.holds {
            return;
        }
        let informational = verdict.claim == ClaimId::OmegaDivisibility
            && *self
                .fiber_criterion_violated
                .get_or_insert_with(|| power::fiber_criterion_violation(self.group).is_some());
        if informational {
            stats.informational += 1;
        } else {
            stats.failures += 1;
        }
        let stored = self.stored.entry(verdict.claim).or_insert(0);
        if *stored < STORED_FAILURE_CAP {
            *stored += 1;
            if informational {
                self.result.informational.push(verdict);
            } else {
                self.result.failures.push(verdict);
            }
        }
    }

    fn finish(self) -> EntryResult {
        self.result
    }
}

/// Emit every verdict for one group, claim by claim.
fn entry_verdicts(
    g: &GroupTable,
    family: Option<&ExtraspecialFamily>,
    config: &SuiteConfig,
    emit: &mut dyn FnMut(Verdict),
) -> Result<()> {
    let order = g.order();
    let on = |claim: ClaimId| config.claim_enabled(claim);
    let profiles: Vec<PowerProfile> =
        (1..=order as u64).map(|n| PowerProfile::compute(g, n)).collect();

    if on(ClaimId::Frobenius) {
        for profile in &profiles {
            for l in g.elements() {
                emit(checks::check_frobenius_with_profile(g, profile, l));
            }
        }
    }

    if on(ClaimId::SubgroupFiberSum) || on(ClaimId::RelativeOrderCount) {
        for sub in g.all_subgroups(config.lattice_bound)? {
            let orders = power::relative_orders(g, &sub.elements)?;
            for profile in &profiles {
                if on(ClaimId::SubgroupFiberSum) {
                    emit(checks::check_subgroup_fiber_sum_with_profile(g, profile, sub));
                }
                if on(ClaimId::RelativeOrderCount) {
                    emit(checks::check_relative_order_sum_with_orders(g, profile, sub, &orders));
                }
            }
        }
    }

    if on(ClaimId::NormalSubsetFiberSum) || on(ClaimId::ClassPartitionDivisor) {
        for set in normal_subset_family(g, config) {
            for profile in &profiles {
                if on(ClaimId::NormalSubsetFiberSum) {
                    emit(checks::check_normal_subset_fiber_sum_with_profile(g, profile, &set)?);
                }
                if on(ClaimId::ClassPartitionDivisor) {
                    emit(checks::check_class_partition_divisor_with_profile(g, profile, &set)?);
                }
            }
        }
    }

    let count_cases = on(ClaimId::ExponentAnnihilation)
        || on(ClaimId::CoprimeUniqueness)
        || on(ClaimId::CentralizerGcdFiber)
        || on(ClaimId::EndomorphismKernelForm);
    if count_cases || on(ClaimId::ProductFormulaDivisor) || on(ClaimId::EndomorphismDivisor) {
        let endo_kernels: Vec<Option<usize>> =
            profiles.iter().map(|p| power::endomorphism_kernel_order(g, p)).collect();
        for set in subset_family(g, config) {
            for (profile, endo_kernel) in profiles.iter().zip(&endo_kernels) {
                if count_cases {
                    // The dispatcher decides which case applies; keep the
                    // verdict only when its claim is enabled.
                    let verdict =
                        checks::check_count_cases_with_context(g, profile, &set, *endo_kernel)?;
                    if on(verdict.claim) {
                        emit(verdict);
                    }
                }
                if on(ClaimId::ProductFormulaDivisor) {
                    emit(checks::check_product_formula_divisor_with_profile(g, profile, &set)?);
                }
                if on(ClaimId::EndomorphismDivisor) && endo_kernel.is_some() {
                    emit(checks::check_endomorphism_divisor_verified(g, profile, &set)?);
                }
            }
        }
    }

    if on(ClaimId::AbelianClosedForm) && g.is_abelian() {
        for set in abelian_subset_family(g, config) {
            for profile in &profiles {
                emit(checks::check_abelian_closed_form_with_profile(g, profile, &set)?);
            }
        }
    }

    if let Some(family) = family {
        if on(ClaimId::ExtraspecialOrderStatistics) {
            for verdict in checks::check_extraspecial_order_statistics(g, family)? {
                emit(verdict);
            }
        }
        if on(ClaimId::ExtraspecialValueSet) {
            for verdict in checks::check_extraspecial_value_set(g, family)? {
                emit(verdict);
            }
        }
    }

    if on(ClaimId::OmegaDivisibility) {
        if let Some(p) = constructors::prime_power_base(order as u64) {
            for verdict in checks::check_omega_divisibility(g, p)? {
                emit(verdict);
            }
        }
    }
    Ok(())
}

fn seeded_rng(config: &SuiteConfig, group: &GroupTable, tag: &str) -> ChaCha8Rng {
    // FNV-1a over (seed, group name, tag) gives each sampled family its own
    // stable stream.
    let mut hash: u64 = 0xcbf2_9ce4_8422_2325;
    let mut absorb = |bytes: &[u8]| {
        for &b in bytes {
            hash ^= u64::from(b);
            hash = hash.wrapping_mul(0x0000_0100_0000_01b3);
        }
    };
    absorb(&config.seed.to_le_bytes());
    absorb(group.name().as_bytes());
    absorb(&[0xff]);
    absorb(tag.as_bytes());
    ChaCha8Rng::seed_from_u64(hash)
}

/// A uniformly random non-empty subset of `0..order` with size drawn
/// uniformly from `1..=order`, so small and large subsets are equally
/// represented.
fn random_subset(rng: &mut ChaCha8Rng, order: usize) -> SubsetMask {
    let size = rng.gen_range(1..=order);
    let picks = rand::seq::index::sample(rng, order, size);
    SubsetMask::from_ids(order, picks.iter().map(ElementId::new))
}

fn all_nonempty_subsets(order: usize) -> Vec<SubsetMask> {
    let total = (1usize << order) - 1;
    (1..=total)
        .map(|bits| {
            SubsetMask::from_ids(
                order,
                (0..order).filter(|i| bits >> i & 1 == 1).map(ElementId::new),
            )
        })
        .collect()
}

fn subset_family(g: &GroupTable, config: &SuiteConfig) -> Vec<SubsetMask> {
    let order = g.order();
    if order <= config.exhaustive_subsets_max_order {
        all_nonempty_subsets(order)
    } else {
        let mut rng = seeded_rng(config, g, "subsets");
        (0..config.random_subsets).map(|_| random_subset(&mut rng, order)).collect()
    }
}

fn abelian_subset_family(g: &GroupTable, config: &SuiteConfig) -> Vec<SubsetMask> {
    let order = g.order();
    if order <= config.exhaustive_subsets_max_order {
        all_nonempty_subsets(order)
    } else {
        let mut rng = seeded_rng(config, g, "abelian");
        (0..config.abelian_samples).map(|_| random_subset(&mut rng, order)).collect()
    }
}

/// Non-empty normal subsets (class unions): exhaustive when the class count
/// is small, otherwise sampled unions with a uniformly drawn class count.
fn normal_subset_family(g: &GroupTable, config: &SuiteConfig) -> Vec<SubsetMask> {
    let classes = &g.conjugacy_classes().classes;
    let count = classes.len();
    let union_of = |indices: &mut dyn Iterator<Item = usize>| {
        indices.fold(SubsetMask::empty(g.order()), |acc, i| acc.union(&classes[i]))
    };
    if count <= config.class_union_exhaustive_max_classes {
        let total = (1usize << count) - 1;
        (1..=total)
            .map(|bits| union_of(&mut (0..count).filter(|i| bits >> i & 1 == 1)))
            .collect()
    } else {
        let mut rng = seeded_rng(config, g, "classes");
        (0..config.random_subsets)
            .map(|_| {
                let size = rng.gen_range(1..=count);
                let picks = rand::seq::index::sample(&mut rng, count, size);
                union_of(&mut picks.iter())
            })
            .collect()
    }
}
