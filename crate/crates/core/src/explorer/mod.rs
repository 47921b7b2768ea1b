//! A named catalog of constructible groups, and sweeps of the two open
//! divisibility questions over it.
//!
//! The catalog is the ground set for every sweep: a deterministic list of
//! groups assembled from the crate's constructors, deduplicated by
//! [`Fingerprint`] so that construction coincidences (`D6 ≅ S3`,
//! `D12 ≅ S3×C2`, …) appear once under their first name. It is *not* the
//! full small-groups database — any sweep result is relative to the catalog
//! and says nothing about groups outside it.

pub mod classd;
pub mod op1;

use crate::error::{Error, Result};
use crate::group::constructors::{
    central_product_joint, cyclic, dicyclic, dihedral, direct_product, from_permutations,
    heisenberg, modular, prime_power_base, semidirect_cyclic, symmetric,
};
use crate::group::{Fingerprint, GroupTable};
use crate::theorems::suite::SuiteEntry;
use crate::theorems::{ExtraspecialFamily, ExtraspecialKind};
use sha2::{Digest, Sha256};
use std::collections::{BTreeMap, BTreeSet};

/// Largest order the catalog will enumerate.
pub const CATALOG_MAX_ORDER: usize = 255;

/// Non-cyclic abelian types are enumerated exhaustively up to this order;
/// above it only the cyclic groups (and the named families) continue.
const ABELIAN_EXHAUSTIVE_ORDER: usize = 64;

/// One catalog group with its descriptive tags.
#[derive(Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub group: GroupTable,
    pub tags: BTreeSet<String>,
    /// Set when the entry was constructed as an extraspecial family member
    /// (verified against [`GroupTable::is_extraspecial`] at build time).
    pub extraspecial: Option<ExtraspecialFamily>,
}

/// The deterministic ground set for sweeps.
#[derive(Debug)]
pub struct Catalog {
    pub max_order: usize,
    pub entries: Vec<CatalogEntry>,
    /// `(skipped name, kept name)` for every constructed group whose
    /// fingerprint matched an earlier entry.
    pub duplicates: Vec<(String, String)>,
}

impl Catalog {
    /// Build the catalog of all constructible named groups of order at most
    /// `max_order` (which must be at most [`CATALOG_MAX_ORDER`]).
    pub fn build(max_order: usize) -> Result<Catalog> {
        if max_order == 0 {
            return Err(Error::Construction(
                "catalog needs max_order >= 1".to_string(),
            ));
        }
        if max_order > CATALOG_MAX_ORDER {
            return Err(Error::MaxOrderExceeded {
                requested: max_order,
                bound: CATALOG_MAX_ORDER,
            });
        }
        let mut builder = Builder {
            max_order,
            entries: Vec::new(),
            seen: BTreeMap::new(),
            duplicates: Vec::new(),
        };
        builder.assemble()?;
        builder.tag_extraspecial_families()?;
        Ok(Catalog {
            max_order,
            entries: builder.entries,
            duplicates: builder.duplicates,
        })
    }

    pub fn get(&self, name: &str) -> Option<&CatalogEntry> {
        self.entries.iter().find(|e| e.name == name)
    }

    pub fn names(&self) -> Vec<&str> {
        self.entries.iter().map(|e| e.name.as_str()).collect()
    }

    /// Entries as suite inputs, carrying the extraspecial tags through.
    pub fn suite_entries(&self) -> Vec<SuiteEntry<'_>> {
        self.entries
            .iter()
            .map(|e| SuiteEntry {
                group: &e.group,
                extraspecial: e.extraspecial,
            })
            .collect()
    }

    /// SHA-256 over every entry's name, order, and full multiplication
    /// table, in catalog order. Identifies the exact ground set of a sweep.
    pub fn hash(&self) -> String {
        let mut hasher = Sha256::new();
        for entry in &self.entries {
            absorb_group(&mut hasher, &entry.name, &entry.group);
        }
        let digest = hasher.finalize();
        digest.iter().map(|b| format!("{b:02x}")).collect()
    }
}

fn absorb_group(hasher: &mut Sha256, name: &str, g: &GroupTable) {
    hasher.update(name.as_bytes());
    hasher.update([0u8]);
    hasher.update((g.order() as u64).to_le_bytes());
    for a in g.elements() {
        for b in g.elements() {
            hasher.update((g.mul(a, b).index() as u16).to_le_bytes());
        }
    }
    hasher.update([0xff_u8]);
}

/// SHA-256 of a single group's name, order, and multiplication table; the
/// single-group analogue of [`Catalog::hash`] for reports that never build
/// a catalog.
pub fn group_digest(g: &GroupTable) -> String {
    let mut hasher = Sha256::new();
    absorb_group(&mut hasher, g.name(), g);
    let digest = hasher.finalize();
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

struct Builder {
    max_order: usize,
    entries: Vec<CatalogEntry>,
    seen: BTreeMap<Fingerprint, String>,
    duplicates: Vec<(String, String)>,
}

impl Builder {
    fn assemble(&mut self) -> Result<()> {
        let max = self.max_order;

        for k in 1..=max {
            self.add(cyclic(k as u32)?, &["cyclic"])?;
        }

        for order in 4..=max.min(ABELIAN_EXHAUSTIVE_ORDER) {
            for factors in non_cyclic_invariant_factors(order as u64) {
                let mut group = cyclic(factors[0] as u32)?;
                for &d in &factors[1..] {
                    group = direct_product(&group, &cyclic(d as u32)?)?;
                }
                self.add(group, &[])?;
            }
        }

        if max >= 6 {
            self.add(symmetric(3)?, &["symmetric"])?;
        }
        if max >= 12 {
            // Generators (0 1 2) and (0 1)(2 3) of the even permutations.
            let a4 = from_permutations(4, &[vec![1, 2, 0, 3], vec![1, 0, 3, 2]])?;
            self.add(a4.renamed("A4"), &["alternating"])?;
        }
        if max >= 24 {
            self.add(symmetric(4)?, &["symmetric"])?;
        }
        if max >= 120 {
            self.add(symmetric(5)?, &["symmetric"])?;
        }

        for order in (6..=max).step_by(2) {
            self.add(dihedral(order as u32)?, &["dihedral"])?;
        }
        for order in (8..=max).step_by(4) {
            self.add(dicyclic(order as u32)?, &["dicyclic"])?;
        }

        if max >= 16 {
            self.add(modular(2, 4)?, &["modular"])?;
            self.add(semidirect_cyclic(8, 2, 3)?.renamed("SD16"), &["semidihedral"])?;
            self.add(direct_product(&dihedral(8)?, &cyclic(2)?)?, &[])?;
            self.add(direct_product(&dicyclic(8)?, &cyclic(2)?)?, &[])?;
            // The wreath-like (C2xC2):C4: the order-4 generator cycles the
            // four blocks {0,1},{2,3},{4,5},{6,7}; the involution swaps
            // within two opposite blocks.
            let wreath = from_permutations(
                8,
                &[vec![0, 1, 3, 2, 4, 5, 7, 6], vec![2, 3, 4, 5, 6, 7, 0, 1]],
            )?;
            self.add(wreath.renamed("C2xC2:C4"), &["semidirect"])?;
            self.add(semidirect_cyclic(4, 4, 3)?.renamed("C4:C4"), &["semidirect"])?;
            self.add(central_product_joint(&dihedral(8)?, &cyclic(4)?)?, &["central-product"])?;
        }

        if max >= 27 {
            self.add(heisenberg(3)?, &["heisenberg"])?;
            self.add(modular(3, 3)?, &["modular"])?;
        }
        if max >= 125 {
            self.add(heisenberg(5)?, &["heisenberg"])?;
            self.add(modular(5, 3)?, &["modular"])?;
        }

        if max >= 32 {
            let d8 = dihedral(8)?;
            let q8 = dicyclic(8)?;
            self.add(central_product_joint(&d8, &d8)?, &["central-product"])?;
            self.add(central_product_joint(&q8, &d8)?, &["central-product"])?;
        }
        if max >= 243 {
            let he3 = heisenberg(3)?;
            let m27 = modular(3, 3)?;
            self.add(central_product_joint(&he3, &he3)?, &["central-product"])?;
            self.add(central_product_joint(&m27, &m27)?, &["central-product"])?;
        }
        Ok(())
    }

    fn add(&mut self, group: GroupTable, family_tags: &[&str]) -> Result<()> {
        if group.order() > self.max_order {
            return Ok(());
        }
        let name = group.name().to_string();
        let fingerprint = group.fingerprint();
        if let Some(kept) = self.seen.get(&fingerprint) {
            self.duplicates.push((name, kept.clone()));
            return Ok(());
        }
        if self.entries.iter().any(|e| e.name == name) {
            return Err(Error::VerificationConflict {
                detail: format!("two non-isomorphic catalog groups share the name {name}"),
            });
        }
        let mut tags: BTreeSet<String> = family_tags.iter().map(|t| t.to_string()).collect();
        if group.is_abelian() {
            tags.insert("abelian".to_string());
        }
        if prime_power_base(group.order() as u64).is_some() {
            tags.insert("p-group".to_string());
        }
        self.seen.insert(fingerprint, name.clone());
        self.entries.push(CatalogEntry {
            name,
            group,
            tags,
            extraspecial: None,
        });
        Ok(())
    }

    /// Attach family metadata to the extraspecial entries and verify each
    /// really is extraspecial of the right order.
    fn tag_extraspecial_families(&mut self) -> Result<()> {
        use ExtraspecialKind::{Dihedral, Heisenberg, Modular, Quaternion};
        let families: [(&str, ExtraspecialKind, u64, u32); 10] = [
            ("D8", Dihedral, 2, 1),
            ("Q8", Quaternion, 2, 1),
            ("He3", Heisenberg, 3, 1),
            ("M27", Modular, 3, 1),
            ("He5", Heisenberg, 5, 1),
            ("M125", Modular, 5, 1),
            ("D8oD8", Dihedral, 2, 2),
            ("Q8oD8", Quaternion, 2, 2),
            ("He3oHe3", Heisenberg, 3, 2),
            ("M27oM27", Modular, 3, 2),
        ];
        for (name, kind, p, k) in families {
            let Some(entry) = self.entries.iter_mut().find(|e| e.name == name) else {
                continue;
            };
            let family = ExtraspecialFamily { kind, p, k };
            if entry.group.order() as u64 != family.order() || !entry.group.is_extraspecial(p)? {
                return Err(Error::VerificationConflict {
                    detail: format!("catalog entry {name} is not extraspecial as {}", family.describe()),
                });
            }
            entry.extraspecial = Some(family);
            entry.tags.insert("extraspecial".to_string());
        }
        Ok(())
    }
}

/// Invariant-factor lists `d_1 ≥ d_2 ≥ …` (with `d_{i+1} | d_i`) of every
/// non-cyclic abelian group of order `m`, in deterministic order.
fn non_cyclic_invariant_factors(m: u64) -> Vec<Vec<u64>> {
    let factored = factorize(m);
    let per_prime: Vec<Vec<Vec<u32>>> =
        factored.iter().map(|&(_, a)| partitions(a)).collect();
    let mut out = Vec::new();
    let mut choice = vec![0usize; per_prime.len()];
    loop {
        // partitions() lists [a] first, so all-zero choice is the cyclic type.
        if choice.iter().any(|&c| c != 0) {
            let rows = choice
                .iter()
                .zip(&per_prime)
                .map(|(&c, parts)| &parts[c])
                .collect::<Vec<_>>();
            let width = rows.iter().map(|r| r.len()).max().unwrap_or(0);
            let factors: Vec<u64> = (0..width)
                .map(|i| {
                    rows.iter()
                        .zip(&factored)
                        .map(|(row, &(p, _))| p.pow(row.get(i).copied().unwrap_or(0)))
                        .product()
                })
                .collect();
            out.push(factors);
        }
        // Odometer over the per-prime partition choices.
        let mut pos = 0;
        loop {
            if pos == choice.len() {
                return out;
            }
            choice[pos] += 1;
            if choice[pos] < per_prime[pos].len() {
                break;
            }
            choice[pos] = 0;
            pos += 1;
        }
    }
}

fn factorize(mut m: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            let mut a = 0;
            while m % p == 0 {
                m /= p;
                a += 1;
            }
            out.push((p, a));
        }
        p += 1;
    }
    if m > 1 {
        out.push((m, 1));
    }
    out
}

/// Partitions of `n` as descending part lists, largest-first ordering
/// (`[n]` itself comes first).
fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn rec(n: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=max.min(n)).rev() {
            prefix.push(part);
            rec(n - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}
