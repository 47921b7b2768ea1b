//! Acceptance checklist: one test per criterion, each printing a single
//! `PASS criterion N: ...` line on success (run with `--nocapture` to see
//! them; add `--test-threads=1` for ordered output). Assertion messages
//! carry the criterion number so a failure is just as identifiable.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_integer::Integer;
use powmap::count::BigCount;
use powmap::explorer::{classd, op1, Catalog};
use powmap::group::constructors::{dihedral, symmetric};
use powmap::group::{ElementId, GroupTable, SubgroupInfo, SubsetMask};
use powmap::power::{self, PowerProfile, ORACLE_PREIMAGE_BOUND};
use powmap::theorems::suite::{run_suite, SuiteConfig};
use powmap::theorems::{checks, ClaimId};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn pass(criterion: usize, detail: impl std::fmt::Display) {
    println!("PASS criterion {criterion}: {detail}");
}

fn within(criterion: usize, elapsed: Duration, budget: Duration) {
    assert!(
        elapsed <= budget,
        "criterion {criterion}: runtime {elapsed:.2?} exceeds budget {budget:.2?}"
    );
}

/// The subgroup of `g` with exactly these elements, from the full lattice.
fn subgroup_of(g: &GroupTable, ids: &[usize]) -> SubgroupInfo {
    let mask = SubsetMask::from_ids(g.order(), ids.iter().copied().map(ElementId::new));
    g.all_subgroups(g.order())
        .expect("lattice within bound")
        .iter()
        .find(|s| s.elements == mask)
        .unwrap_or_else(|| panic!("{ids:?} is not a subgroup of {}", g.name()))
        .clone()
}

/// Every non-empty subset of a group of order at most 16.
fn all_nonempty_subsets(order: usize) -> Vec<SubsetMask> {
    assert!(order <= 16);
    (1u32..(1u32 << order))
        .map(|bits| {
            SubsetMask::from_ids(
                order,
                (0..order).filter(|i| bits >> i & 1 == 1).map(ElementId::new),
            )
        })
        .collect()
}

/// Deterministic per-group RNG (FNV-1a over the name and a salt).
fn test_rng(name: &str, salt: u64) -> ChaCha8Rng {
    let mut h = 0xcbf2_9ce4_8422_2325u64;
    for b in name.bytes().chain(salt.to_le_bytes())
    {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    ChaCha8Rng::seed_from_u64(h)
}

fn random_subset(rng: &mut ChaCha8Rng, order: usize) -> SubsetMask {
    let size = rng.gen_range(1..=order);
    let picks = rand::seq::index::sample(rng, order, size);
    SubsetMask::from_ids(order, picks.iter().map(ElementId::new))
}

#[test]
fn criterion_01_s3_count_is_fifteen() {
    let started = Instant::now();
    let g = symmetric(3).expect("S3 constructs");
    let three_cycle = g.element_by_label("(1 2 3)").expect("3-cycle present");
    let set = SubsetMask::from_ids(6, [g.identity(), three_cycle]);
    let count = power::count_solutions(&g, 2, &set).expect("non-empty L");
    assert_eq!(
        count.value(),
        &BigUint::from(15u32),
        "criterion 1: S3 n=2 L={{e,(1 2 3)}} must have 15 solutions"
    );
    let oracle = power::brute_force_count(&g, 2, &set, ORACLE_PREIMAGE_BOUND).expect("small");
    assert_eq!(oracle, 15, "criterion 1: oracle disagrees");
    let elapsed = started.elapsed();
    within(1, elapsed, Duration::from_secs(1));
    pass(1, format!("S3, n=2, L={{e, (1 2 3)}} -> 15 solutions, oracle agrees ({elapsed:.2?})"));
}

#[test]
fn criterion_02_d8_count_misses_the_abelian_bound() {
    let started = Instant::now();
    let g = dihedral(8).expect("D8 constructs");
    let set = SubsetMask::singleton(8, g.identity());
    let count = power::count_solutions(&g, 2, &set).expect("non-empty L");
    let bound = BigCount::mersenne_power(8, 1);
    assert_eq!(count.value(), &BigUint::from(63u32), "criterion 2: |N_{{2,{{1}}}}| = 63");
    assert_eq!(bound.value(), &BigUint::from(255u32), "criterion 2: (2^8-1)^1 = 255");
    assert!(
        !bound.is_multiple_of(&count),
        "criterion 2: 63 must NOT divide 255"
    );
    let elapsed = started.elapsed();
    within(2, elapsed, Duration::from_secs(1));
    pass(2, format!("D8, n=2, L={{1}} -> 63 and 63 does not divide 255 ({elapsed:.2?})"));
}

#[test]
fn criterion_03_s3_fiber_sum_over_the_rotation_subgroup() {
    let g = symmetric(3).expect("S3 constructs");
    let sub = subgroup_of(&g, &[0, 3, 4]);
    let profile = PowerProfile::compute(&g, 2);
    let sum: u64 = sub.elements.iter().map(|l| u64::from(profile.fiber(l))).sum();
    assert_eq!(sum, 6, "criterion 3: fiber sum over <(1 2 3)> at n=2");
    assert_eq!(sum % 3, 0, "criterion 3: divisible by |L| = 3");
    assert_eq!(sum % 2u64.gcd(&6), 0, "criterion 3: divisible by gcd(n, |G|) = 2");

    let by_order = checks::check_subgroup_fiber_sum(&g, 2, &sub);
    assert!(by_order.holds, "criterion 3: subgroup fiber-sum checker");
    assert_eq!(by_order.dividend.value(), &BigUint::from(6u32));
    let by_gcd = checks::check_normal_subset_fiber_sum(&g, 2, &sub.elements)
        .expect("<(1 2 3)> is normal in S3");
    assert!(by_gcd.holds, "criterion 3: normal-subset fiber-sum checker");
    pass(3, "S3, L=<(1 2 3)>, n=2: fiber sum 6 is a multiple of 3 and of 2");
}

#[test]
fn criterion_04_s3_coset_solution_count_is_odd_one_out() {
    let g = symmetric(3).expect("S3 constructs");
    let sub = subgroup_of(&g, &[0, 1]); // <(2 3)>, self-normalizing
    let rep = g.element_by_label("(1 3)").expect("transposition present");
    let solutions = op1::coset_solution_count(&g, &sub, 2, rep);
    assert_eq!(solutions, 1, "criterion 4: one solution in the (1 3)-coset");
    let divisor = 2u64.gcd(&2); // gcd(n, |N_G(L)|) with N_G(L) = L
    assert_ne!(solutions % divisor, 0, "criterion 4: 1 is not a multiple of 2");
    pass(4, "S3, L=<(2 3)>, n=2, coset rep (1 3): exactly 1 solution, not a multiple of 2");
}

#[test]
fn criterion_05_oracle_equivalence_up_to_order_ten() {
    let started = Instant::now();
    let catalog = Catalog::build(10).expect("catalog up to order 10");
    let mut instances = 0u64;
    for entry in &catalog.entries {
        let g = &entry.group;
        let subsets = all_nonempty_subsets(g.order());
        for n in 1..=g.order() as u64 {
            let profile = PowerProfile::compute(g, n);
            for set in &subsets {
                let count = power::count_solutions_with_profile(&profile, set)
                    .expect("non-empty L");
                let oracle = power::brute_force_count(g, n, set, ORACLE_PREIMAGE_BOUND)
                    .expect("preimage within oracle bound");
                assert_eq!(
                    count.value(),
                    &BigUint::from(oracle),
                    "criterion 5: mismatch on {} n={n} L={:?}",
                    g.name(),
                    set.ids()
                );
                instances += 1;
            }
        }
    }
    let elapsed = started.elapsed();
    within(5, elapsed, Duration::from_secs(600));
    pass(
        5,
        format!(
            "product formula = oracle on {instances} instances across {} groups ({elapsed:.2?})",
            catalog.entries.len()
        ),
    );
}

#[test]
fn criterion_06_theorem_sweep_is_clean_to_order_sixty_four() {
    let started = Instant::now();
    let catalog = Catalog::build(64).expect("catalog up to order 64");
    let entries = catalog.suite_entries();
    let claims = [
        ClaimId::Frobenius,
        ClaimId::SubgroupFiberSum,
        ClaimId::NormalSubsetFiberSum,
        ClaimId::ExponentAnnihilation,
        ClaimId::CoprimeUniqueness,
        ClaimId::CentralizerGcdFiber,
        ClaimId::EndomorphismKernelForm,
        ClaimId::RelativeOrderCount,
        ClaimId::ProductFormulaDivisor,
        ClaimId::ClassPartitionDivisor,
        ClaimId::EndomorphismDivisor,
    ];
    let config = SuiteConfig::default().with_claims(claims);
    let report = run_suite(&entries, &config).expect("suite run");
    assert!(
        report.failures.is_empty(),
        "criterion 6: {} failing verdicts, first: {:?}",
        report.failures.len(),
        report.failures.first()
    );
    for claim in claims {
        let stats = report
            .claim_stats
            .get(&claim)
            .unwrap_or_else(|| panic!("criterion 6: no instances for {claim}"));
        assert!(stats.instances > 0, "criterion 6: {claim} never exercised");
        assert_eq!(stats.failures, 0, "criterion 6: {claim} has failures");
    }
    // The one informational entry is the published non-endomorphism
    // demonstration on S3, which must still fail.
    assert_eq!(report.informational.len(), 1, "criterion 6: informational entries");
    let demo = &report.informational[0];
    assert_eq!(demo.claim, ClaimId::EndomorphismDivisor);
    assert!(!demo.holds);
    let elapsed = started.elapsed();
    within(6, elapsed, Duration::from_secs(1800));
    pass(
        6,
        format!(
            "eight claim families, {} groups, {} instances, zero failures ({elapsed:.2?})",
            report.entries_run, report.total_instances
        ),
    );
}

#[test]
fn criterion_07_abelian_closed_form_matches_exactly() {
    let started = Instant::now();
    let catalog = Catalog::build(64).expect("catalog up to order 64");
    let mut groups = 0u64;
    let mut instances = 0u64;
    for entry in &catalog.entries {
        if !entry.tags.contains("abelian") {
            continue;
        }
        groups += 1;
        let g = &entry.group;
        let mut rng = test_rng(&entry.name, 0x2606);
        let sets: Vec<SubsetMask> =
            (0..200).map(|_| random_subset(&mut rng, g.order())).collect();
        for n in 1..=g.order() as u64 {
            let profile = PowerProfile::compute(g, n);
            for set in &sets {
                let verdict = checks::check_abelian_closed_form_with_profile(g, &profile, set)
                    .expect("abelian group");
                assert!(
                    verdict.holds,
                    "criterion 7: closed form off on {} n={n} {}: {} vs {}",
                    entry.name,
                    verdict.instance,
                    verdict.dividend.to_decimal(),
                    verdict.divisor.to_decimal()
                );
                instances += 1;
            }
        }
    }
    let elapsed = started.elapsed();
    pass(
        7,
        format!(
            "closed form exact on {instances} instances across {groups} abelian groups ({elapsed:.2?})"
        ),
    );
}

#[test]
fn criterion_08_extraspecial_order_statistics() {
    let catalog = Catalog::build(32).expect("catalog up to order 32");
    let mut families = Vec::new();
    for entry in &catalog.entries {
        let Some(family) = entry.extraspecial else { continue };
        let verdicts = checks::check_extraspecial_order_statistics(&entry.group, &family)
            .expect("tagged family verifies");
        for v in &verdicts {
            assert!(
                v.holds,
                "criterion 8: {} {}: counted {} expected {}",
                entry.name,
                v.instance,
                v.dividend.to_decimal(),
                v.divisor.to_decimal()
            );
        }
        families.push(entry.name.clone());
    }
    assert_eq!(
        families,
        ["D8", "Q8", "He3", "M27", "D8oD8", "Q8oD8"],
        "criterion 8: expected all six families up to order 32"
    );

    // Spot-check the published numbers for the two order-32 products.
    let stats = |name: &str| -> BTreeMap<u64, usize> {
        catalog.get(name).expect("in catalog").group.order_statistics()
    };
    let d8od8 = stats("D8oD8");
    assert_eq!((d8od8[&2], d8od8[&4]), (19, 12), "criterion 8: D8oD8 n_2/n_4");
    let q8od8 = stats("Q8oD8");
    assert_eq!((q8od8[&2], q8od8[&4]), (11, 20), "criterion 8: Q8oD8 n_2/n_4");
    pass(8, "order statistics match closed forms for D8, Q8, He3, M27, D8oD8 (19/12), Q8oD8 (11/20)");
}

#[test]
fn criterion_09_extraspecial_value_sets() {
    let catalog = Catalog::build(32).expect("catalog up to order 32");
    let mut checked = 0usize;
    for entry in &catalog.entries {
        let Some(family) = entry.extraspecial else { continue };
        let verdicts = checks::check_extraspecial_value_set(&entry.group, &family)
            .expect("tagged family verifies");
        for v in &verdicts {
            assert!(v.holds, "criterion 9: {} {}: {}", entry.name, v.instance, v.note);
        }
        checked += 1;

        if entry.name == "M27" {
            let attained: Vec<&BigUint> = verdicts
                .iter()
                .filter(|v| v.n == 0 && v.instance.starts_with("attain"))
                .map(|v| v.divisor.value())
                .collect();
            for expected in [
                BigCount::mersenne_power(9, 1),
                BigCount::mersenne_power(9, 2),
                BigCount::mersenne_power(9, 3),
                BigCount::mersenne(27),
            ] {
                assert!(
                    attained.contains(&expected.value()),
                    "criterion 9: M27 must attain {}",
                    expected.factored_desc()
                );
            }
        }
    }
    assert_eq!(checked, 6, "criterion 9: six extraspecial entries");
    pass(9, "all computed counts sit in the claimed value sets and every claimed value is attained");
}

#[test]
fn criterion_10_class_d_frontier() {
    let catalog = Catalog::build(27).expect("catalog up to order 27");
    let sixteen_members = ["C2xC2:C4", "C4:C4", "M16", "D8oC4"];
    for entry in &catalog.entries {
        let report = classd::class_d_membership(entry).expect("membership decidable");
        let abelian = entry.tags.contains("abelian");
        if abelian {
            assert!(report.member, "criterion 10: abelian {} must be a member", entry.name);
        } else if entry.group.order() < 16 {
            assert!(!report.member, "criterion 10: {} (order < 16) must not be a member", entry.name);
        } else if entry.group.order() == 16 {
            assert_eq!(
                report.member,
                sixteen_members.contains(&entry.name.as_str()),
                "criterion 10: membership frontier at order 16 ({})",
                entry.name
            );
        }
        if entry.group.order() <= classd::EXHAUSTIVE_MAX_ORDER {
            assert!(
                classd::methods_agree(&entry.group).expect("both methods run"),
                "criterion 10: methods disagree on {}",
                entry.name
            );
        }
        if let Some(family) = entry.extraspecial {
            let es = classd::classify_extraspecial_membership(&entry.group, &family)
                .expect("parity pattern");
            assert_eq!(es.member, family.p % 2 == 1, "criterion 10: extraspecial parity");
        }
    }
    pass(
        10,
        "abelian always in, nothing non-abelian below 16, exactly {C2xC2:C4, C4:C4, M16, D8oC4} at 16, \
         extraspecial parity holds, methods agree",
    );
}

#[test]
fn criterion_11_open_problem_sweep_is_counterexample_free() {
    let started = Instant::now();
    let catalog = Catalog::build(64).expect("catalog up to order 64");
    let summary = op1::sweep_catalog_open_problem_1(&catalog, 64).expect("sweep");
    assert!(
        summary.holds_everywhere(),
        "criterion 11: counterexamples found: {:?}",
        summary.counterexamples
    );
    assert!(summary.skipped.is_empty(), "criterion 11: nothing should be skipped");
    assert_eq!(summary.groups_swept, catalog.entries.len());
    assert_eq!(
        summary.coverage,
        op1::COVERAGE_CAVEAT,
        "criterion 11: the report must carry the coverage caveat"
    );
    let elapsed = started.elapsed();
    within(11, elapsed, Duration::from_secs(1200));
    pass(
        11,
        format!(
            "no counterexample over {} groups / {} non-normal subgroups / {} instances ({elapsed:.2?}); \
             note: {}",
            summary.groups_swept, summary.non_normal_subgroups, summary.instances, summary.coverage
        ),
    );
}

#[test]
fn criterion_12_every_nonzero_count_is_odd() {
    let started = Instant::now();
    let mut nonzero = 0u64;

    // Mirror the exhaustive oracle sweep: parity of raw enumeration counts.
    let small = Catalog::build(10).expect("catalog up to order 10");
    for entry in &small.entries {
        let g = &entry.group;
        let subsets = all_nonempty_subsets(g.order());
        for n in 1..=g.order() as u64 {
            let profile = PowerProfile::compute(g, n);
            for set in &subsets {
                let count =
                    power::count_solutions_with_profile(&profile, set).expect("non-empty L");
                let oracle = power::brute_force_count(g, n, set, ORACLE_PREIMAGE_BOUND)
                    .expect("within oracle bound");
                if oracle > 0 {
                    assert_eq!(oracle % 2, 1, "criterion 12: even oracle count on {}", g.name());
                }
                if !count.is_zero() {
                    assert!(count.is_odd(), "criterion 12: even count on {}", g.name());
                    nonzero += 1;
                }
            }
        }
    }

    // Mirror the sampled sweeps: product-formula parity across the catalog.
    let catalog = Catalog::build(64).expect("catalog up to order 64");
    for entry in &catalog.entries {
        let g = &entry.group;
        let mut rng = test_rng(&entry.name, 0x0dd);
        let sets: Vec<SubsetMask> =
            (0..200).map(|_| random_subset(&mut rng, g.order())).collect();
        for n in 1..=g.order() as u64 {
            let profile = PowerProfile::compute(g, n);
            for set in &sets {
                let count =
                    power::count_solutions_with_profile(&profile, set).expect("non-empty L");
                if !count.is_zero() {
                    assert!(
                        count.is_odd(),
                        "criterion 12: even count on {} n={n}",
                        entry.name
                    );
                    nonzero += 1;
                }
            }
        }
    }

    // Mirror the extraspecial value sweeps.
    let extraspecial = Catalog::build(32).expect("catalog up to order 32");
    for entry in &extraspecial.entries {
        let Some(family) = entry.extraspecial else { continue };
        for v in checks::check_extraspecial_value_set(&entry.group, &family).expect("verifies") {
            if v.n > 0 && !v.dividend.is_zero() {
                assert!(v.dividend.is_odd(), "criterion 12: even count on {}", entry.name);
                nonzero += 1;
            }
        }
    }

    let elapsed = started.elapsed();
    pass(12, format!("{nonzero} non-zero counts, all odd ({elapsed:.2?})"));
}
