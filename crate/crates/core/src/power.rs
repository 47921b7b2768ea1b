//! The set-valued power map and exact solution counting.
//!
//! For a subset `S` of a group, `S^{(n)} = {s^n : s ∈ S}` is the set of
//! `n`-th powers. Given a non-empty target set `L`, the subsets with
//! `S^{(n)} = L` are exactly the subsets of the preimage of `L` that meet
//! every fiber, so their number is the product of `2^{|fiber|} - 1` over the
//! elements of `L` — zero as soon as some element of `L` has an empty fiber,
//! and odd otherwise.

use crate::count::BigCount;
use crate::error::{Error, Result};
use crate::group::{ElementId, GroupTable, SubgroupInfo, SubsetMask};
use num_integer::Integer;

/// Everything about the map `x ↦ x^n` on one group: images, the image set,
/// and all fiber sizes.
#[derive(Debug, Clone)]
pub struct PowerProfile {
    pub n: u64,
    order: usize,
    /// `pow[x]` is `x^n`.
    pub pow: Vec<ElementId>,
    pub image: SubsetMask,
    /// `fiber_size[l]` is `|{x : x^n = l}|`.
    pub fiber_size: Vec<u32>,
}

impl PowerProfile {
    pub fn compute(g: &GroupTable, n: u64) -> PowerProfile {
        let order = g.order();
        let mut pow = Vec::with_capacity(order);
        let mut image = SubsetMask::empty(order);
        let mut fiber_size = vec![0u32; order];
        for x in g.elements() {
            let y = g.element_power(x, n);
            pow.push(y);
            image.insert(y);
            fiber_size[y.index()] += 1;
        }
        PowerProfile {
            n,
            order,
            pow,
            image,
            fiber_size,
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn fiber(&self, l: ElementId) -> u32 {
        self.fiber_size[l.index()]
    }

    pub fn is_in_image(&self, l: ElementId) -> bool {
        self.image.contains(l)
    }

    /// The full preimage `{x : x^n ∈ set}`.
    pub fn preimage(&self, set: &SubsetMask) -> SubsetMask {
        let mut mask = SubsetMask::empty(self.order);
        for (x, y) in self.pow.iter().enumerate() {
            if set.contains(*y) {
                mask.insert(ElementId::new(x));
            }
        }
        mask
    }
}

/// Number of subsets `S` with `S^{(n)} = set`, in exactly factored form.
pub fn count_solutions(g: &GroupTable, n: u64, set: &SubsetMask) -> Result<BigCount> {
    count_solutions_with_profile(&PowerProfile::compute(g, n), set)
}

/// As [`count_solutions`], reusing a precomputed profile.
pub fn count_solutions_with_profile(profile: &PowerProfile, set: &SubsetMask) -> Result<BigCount> {
    if set.is_empty() {
        return Err(Error::EmptySubset);
    }
    let count = if set.iter().any(|l| profile.fiber(l) == 0) {
        BigCount::zero()
    } else {
        BigCount::from_mersenne_multiset(set.iter().map(|l| u64::from(profile.fiber(l))))
    };
    // Structural invariant of the counting formula: a non-zero solution
    // count is a product of Mersenne numbers and therefore odd.
    assert!(
        count.is_zero() || count.is_odd(),
        "non-zero solution count must be odd"
    );
    Ok(count)
}

/// Maximum preimage size the subset-enumeration oracle will accept.
pub const ORACLE_PREIMAGE_BOUND: usize = 24;

/// Independent oracle: enumerate every subset of the preimage of `set` and
/// count those whose image is exactly `set`. Walks subsets in Gray-code
/// order, maintaining per-target coverage counts, so each step is `O(1)`.
pub fn brute_force_count(
    g: &GroupTable,
    n: u64,
    set: &SubsetMask,
    bound: usize,
) -> Result<u64> {
    if set.is_empty() {
        return Err(Error::EmptySubset);
    }
    let profile = PowerProfile::compute(g, n);
    let preimage: Vec<ElementId> = profile.preimage(set).ids();
    if preimage.len() > bound {
        return Err(Error::OracleBoundExceeded {
            preimage: preimage.len(),
            bound,
        });
    }
    let targets: Vec<ElementId> = set.ids();
    // target_of[i]: position in `targets` hit by preimage element i.
    let target_of: Vec<usize> = preimage
        .iter()
        .map(|&x| {
            let y = profile.pow[x.index()];
            targets.iter().position(|&t| t == y).expect("preimage maps into set")
        })
        .collect();
    let mut coverage = vec![0u32; targets.len()];
    let mut missing = targets.len();
    let mut hits = 0u64;
    for step in 1u64..(1u64 << preimage.len()) {
        let flipped = step.trailing_zeros() as usize;
        let t = target_of[flipped];
        // Gray code: bit `flipped` toggles between step-1 and step; its new
        // state says whether the element was added or removed.
        let added = (step ^ (step >> 1)) >> flipped & 1 == 1;
        if added {
            if coverage[t] == 0 {
                missing -= 1;
            }
            coverage[t] += 1;
        } else {
            coverage[t] -= 1;
            if coverage[t] == 0 {
                missing += 1;
            }
        }
        if missing == 0 {
            hits += 1;
        }
    }
    Ok(hits)
}

/// Whether `x ↦ x^n` is an endomorphism of `g`.
pub fn is_power_endomorphism(g: &GroupTable, n: u64) -> bool {
    let profile = PowerProfile::compute(g, n);
    is_power_endomorphism_with_profile(g, &profile)
}

/// [`is_power_endomorphism`] against a precomputed profile.
pub fn is_power_endomorphism_with_profile(g: &GroupTable, profile: &PowerProfile) -> bool {
    g.elements().all(|x| {
        g.elements()
            .all(|y| profile.pow[g.mul(x, y).index()] == g.mul(profile.pow[x.index()], profile.pow[y.index()]))
    })
}

/// Kernel of `x ↦ x^n` when that map is an endomorphism.
pub fn kernel_of_power_map(g: &GroupTable, n: u64) -> Result<SubgroupInfo> {
    if !is_power_endomorphism(g, n) {
        return Err(Error::NotEndomorphism {
            group: g.name().to_string(),
            n,
        });
    }
    let profile = PowerProfile::compute(g, n);
    let kernel = profile.preimage(&SubsetMask::singleton(g.order(), g.identity()));
    Ok(g.info_for_mask(kernel))
}

/// The unique solution `S = {l^m : l ∈ L}` when `gcd(n, exp(G)) = 1`, where
/// `m` inverts `n` modulo the exponent.
pub fn unique_coprime_solution(g: &GroupTable, n: u64, set: &SubsetMask) -> Result<SubsetMask> {
    if set.is_empty() {
        return Err(Error::EmptySubset);
    }
    let exponent = g.exponent();
    if n.gcd(&exponent) != 1 {
        return Err(Error::CoprimeRequired { n, exponent });
    }
    let reduced = (n % exponent) as i64;
    let ext = reduced.extended_gcd(&(exponent as i64));
    let m = ext.x.rem_euclid(exponent as i64) as u64;
    let mut out = SubsetMask::empty(g.order());
    for l in set.iter() {
        let s = g.element_power(l, m);
        assert_eq!(g.element_power(s, n), l, "modular inverse must undo the power map");
        out.insert(s);
    }
    Ok(out)
}

/// The relative order `o_L(x)`: the least `k ≥ 1` with `x^k` in the
/// subgroup `L`.
pub fn relative_order(g: &GroupTable, subgroup: &SubsetMask, x: ElementId) -> Result<u64> {
    if !g.is_subgroup(subgroup) {
        return Err(Error::NotSubgroup);
    }
    Ok(relative_order_unchecked(g, subgroup, x))
}

/// Relative orders of every element at once, validating the subgroup once.
pub fn relative_orders(g: &GroupTable, subgroup: &SubsetMask) -> Result<Vec<u64>> {
    if !g.is_subgroup(subgroup) {
        return Err(Error::NotSubgroup);
    }
    Ok(g.elements()
        .map(|x| relative_order_unchecked(g, subgroup, x))
        .collect())
}

fn relative_order_unchecked(g: &GroupTable, subgroup: &SubsetMask, x: ElementId) -> u64 {
    let mut acc = x;
    for k in 1..=g.order_of(x) {
        if subgroup.contains(acc) {
            return k;
        }
        acc = g.mul(acc, x);
    }
    unreachable!("x^o(x) is the identity, which every subgroup contains")
}

/// `Some(|Ker|)` when `x ↦ x^n` is an endomorphism (the kernel is the
/// identity fiber), `None` otherwise.
pub fn endomorphism_kernel_order(g: &GroupTable, profile: &PowerProfile) -> Option<usize> {
    if is_power_endomorphism_with_profile(g, profile) {
        Some(profile.fiber(g.identity()) as usize)
    } else {
        None
    }
}

/// First violation of the fiber-divisibility criterion, if any: a pair
/// `(n, l)` with `l` in the image of `x ↦ x^n` whose fiber size does not
/// divide `|G|`. `None` means every fiber of every power map divides the
/// group order.
pub fn fiber_criterion_violation(g: &GroupTable) -> Option<(u64, ElementId, u32)> {
    let order = g.order() as u64;
    for n in 1..=order {
        let profile = PowerProfile::compute(g, n);
        for l in profile.image.iter() {
            let fiber = profile.fiber(l);
            if order % u64::from(fiber) != 0 {
                return Some((n, l, fiber));
            }
        }
    }
    None
}

/// `Ω_i(G) = {x : x^{p^i} = 1}` for a `p`-group.
pub fn omega_subset(g: &GroupTable, p: u64, i: u32) -> Result<SubsetMask> {
    if !crate::group::constructors::is_prime(p) {
        return Err(Error::Construction(format!("{p} is not prime")));
    }
    let mut rest = g.order() as u64;
    while rest % p == 0 {
        rest /= p;
    }
    if rest != 1 {
        return Err(Error::NotPGroup {
            group: g.name().to_string(),
            p,
            order: g.order(),
        });
    }
    let cap = p.pow(i);
    Ok(SubsetMask::from_ids(
        g.order(),
        g.elements().filter(|&x| cap % g.order_of(x) == 0),
    ))
}
