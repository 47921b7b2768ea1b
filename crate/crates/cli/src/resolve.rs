//! Resolution of `--group` and `--set` command-line specs.
//!
//! Group specs, tried in order:
//! 1. `@path` — a JSON group file ([`GroupTable`]'s serde format); relative
//!    paths also resolve against `$POWMAP_GROUP_DIR`.
//! 2. A handful of named constructions that have no parametric pattern
//!    (`M16`, `SD16`, `C4:C4`, `C2xC2:C4`, `A4`), matching the catalog's
//!    tables exactly.
//! 3. Products: `x` splits into direct factors, `o` into central products
//!    (`x` binds last, so `C2xD8oC4` is `C2 × (D8∘C4)`).
//! 4. Constructor patterns: `C<n>`, `D<order>`, `Q<order>`, `Dic<index>`
//!    (`Dic3` has order 12), `S<n>`, `He<p>`, `M<p^3>`.

use std::env;
use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context, Result};
use powmap::group::constructors::{
    central_product_joint, cyclic, dicyclic, dihedral, direct_product, from_permutations,
    heisenberg, modular, semidirect_cyclic, symmetric,
};
use powmap::group::{ElementId, GroupTable, SubsetMask};
use powmap::power::PowerProfile;

/// Environment variable naming the default directory for `@file` specs.
pub const GROUP_DIR_ENV: &str = "POWMAP_GROUP_DIR";

pub fn resolve_group(spec: &str) -> Result<GroupTable> {
    if let Some(path) = spec.strip_prefix('@') {
        return load_group_file(path);
    }
    if let Some(table) = named_construction(spec)? {
        return Ok(table);
    }
    if spec.contains('/') || spec.ends_with(".json") {
        return load_group_file(spec);
    }
    if let Some((left, right)) = split_product(spec, 'x') {
        let table = direct_product(&resolve_group(left)?, &resolve_group(right)?)?;
        return Ok(table);
    }
    if let Some((left, right)) = split_product(spec, 'o') {
        let table = central_product_joint(&resolve_group(left)?, &resolve_group(right)?)?;
        return Ok(table);
    }
    pattern_construction(spec)?.ok_or_else(|| {
        anyhow!(
            "unknown group spec {spec:?}; expected a constructor pattern (C12, D8, Q16, Dic3, \
             S4, A4, He3, M27, M16, SD16, C4:C4, C2xC2:C4), a product of those with `x` or `o`, \
             or @path to a JSON group file"
        )
    })
}

/// Split at the last occurrence of the operator, so repeated splits fold the
/// product left-associatively — the same shape the catalog builds, giving
/// identical tables (and digests) for names like `C2xC2xC2`.
fn split_product(spec: &str, op: char) -> Option<(&str, &str)> {
    let i = spec.rfind(op)?;
    let (left, right) = (&spec[..i], &spec[i + 1..]);
    if left.is_empty() || right.is_empty() {
        return None;
    }
    // Only split when the operator separates two plausible atoms; `Dic12`
    // must not split at its `c`.
    if !left.chars().next().unwrap_or(' ').is_ascii_uppercase()
        || !right.chars().next().unwrap_or(' ').is_ascii_uppercase()
    {
        return None;
    }
    Some((left, right))
}

/// Named tables without a parametric pattern, matching the catalog exactly.
fn named_construction(spec: &str) -> Result<Option<GroupTable>> {
    Ok(Some(match spec {
        "M16" => modular(2, 4)?,
        "SD16" => semidirect_cyclic(8, 2, 3)?.renamed("SD16"),
        "C4:C4" => semidirect_cyclic(4, 4, 3)?.renamed("C4:C4"),
        "C2xC2:C4" => from_permutations(
            8,
            &[vec![0, 1, 3, 2, 4, 5, 7, 6], vec![2, 3, 4, 5, 6, 7, 0, 1]],
        )?
        .renamed("C2xC2:C4"),
        "A4" => from_permutations(4, &[vec![1, 2, 0, 3], vec![1, 0, 3, 2]])?.renamed("A4"),
        _ => return Ok(None),
    }))
}

fn pattern_construction(spec: &str) -> Result<Option<GroupTable>> {
    let Some((head, digits)) = split_alpha_prefix(spec) else {
        return Ok(None);
    };
    let value: u32 = digits
        .parse()
        .with_context(|| format!("bad parameter in group spec {spec:?}"))?;
    let table = match head {
        "C" => cyclic(value)?,
        "D" => dihedral(value)?,
        // Q names carry the group order, Dic names the standard index
        // (Dic3 has order 12), matching the constructor's own naming.
        "Q" => dicyclic(value)?,
        "Dic" => dicyclic(value.saturating_mul(4))?,
        "S" => symmetric(value)?,
        "He" => heisenberg(value)?,
        "M" => {
            let p = exact_cube_root(value).ok_or_else(|| {
                anyhow!("M{value}: modular groups here are M16 or M(p^3) for an odd prime p")
            })?;
            modular(p, 3)?
        }
        _ => return Ok(None),
    };
    Ok(Some(table))
}

/// Split `"Dic12"` into `("Dic", "12")`; `None` unless the spec is letters
/// followed by digits.
fn split_alpha_prefix(spec: &str) -> Option<(&str, &str)> {
    let i = spec.find(|c: char| c.is_ascii_digit())?;
    let (head, digits) = spec.split_at(i);
    if head.is_empty() || !digits.chars().all(|c| c.is_ascii_digit()) {
        return None;
    }
    Some((head, digits))
}

fn exact_cube_root(v: u32) -> Option<u32> {
    let r = f64::from(v).cbrt().round() as u32;
    (r.saturating_sub(1)..=r + 1).find(|c| c * c * c == v)
}

fn load_group_file(path: &str) -> Result<GroupTable> {
    let direct = Path::new(path);
    let resolved: PathBuf = if direct.exists() {
        direct.to_path_buf()
    } else if let Ok(dir) = env::var(GROUP_DIR_ENV) {
        Path::new(&dir).join(path)
    } else {
        direct.to_path_buf()
    };
    let text = fs::read_to_string(&resolved)
        .with_context(|| format!("cannot read group file {}", resolved.display()))?;
    let table: GroupTable = serde_json::from_str(&text)
        .with_context(|| format!("invalid group file {}", resolved.display()))?;
    Ok(table)
}

/// Resolve a `--set` spec against a group. `n` is needed only for `image`.
pub fn resolve_set(g: &GroupTable, spec: &str, n: Option<u64>) -> Result<SubsetMask> {
    let mask = match spec {
        "all" => g.full_mask(),
        "identity" => SubsetMask::singleton(g.order(), g.identity()),
        "center" => g.center().elements.clone(),
        "image" => {
            let n = n.ok_or_else(|| anyhow!("set spec `image` needs --n"))?;
            PowerProfile::compute(g, n).image
        }
        _ => {
            if let Some(id_list) = spec.strip_prefix("class-of:") {
                let ids = parse_ids(g, id_list)?;
                let [x] = ids[..] else {
                    bail!("class-of takes exactly one element id");
                };
                g.class_of(x).clone()
            } else if let Some(id_list) = spec.strip_prefix("subgroup:") {
                let gens = parse_ids(g, id_list)?;
                g.subgroup_closure(&gens).elements
            } else {
                SubsetMask::from_ids(g.order(), parse_ids(g, spec)?)
            }
        }
    };
    if mask.is_empty() {
        bail!("set spec {spec:?} resolves to the empty set");
    }
    Ok(mask)
}

fn parse_ids(g: &GroupTable, list: &str) -> Result<Vec<ElementId>> {
    list.split(',')
        .map(|token| {
            let index: usize = token
                .trim()
                .parse()
                .with_context(|| format!("bad element id {token:?}"))?;
            if index >= g.order() {
                bail!("element id {index} out of range for {} (order {})", g.name(), g.order());
            }
            Ok(ElementId::new(index))
        })
        .collect()
}
