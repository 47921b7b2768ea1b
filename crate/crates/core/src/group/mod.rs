//! Finite groups as explicit multiplication tables, plus structural queries.

pub mod abelian;
pub mod constructors;
pub mod subgroup;
pub mod subset;

pub use abelian::AbelianDecomposition;
pub use subgroup::SubgroupInfo;
pub use subset::SubsetMask;

use crate::error::{Error, Result};
use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

/// Index of an element within one [`GroupTable`]; index 0 is the identity.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ElementId(u16);

impl ElementId {
    pub const IDENTITY: ElementId = ElementId(0);

    pub fn new(index: usize) -> Self {
        assert!(index < subset::MAX_UNIVERSE, "element index {index} out of range");
        ElementId(index as u16)
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn is_identity(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for ElementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Orders at or below this get a full `O(n^3)` associativity check; larger
/// tables are checked on one million seeded random triples.
const FULL_ASSOC_BOUND: usize = 128;
const SAMPLED_ASSOC_TRIPLES: usize = 1_000_000;
const ASSOC_SAMPLE_SEED: u64 = 0x706f_776d_6170_3031;

/// Isomorphism-invariant signature used to identify catalog groups without a
/// general isomorphism test.
///
/// The first five components (order, abelian flag, order statistics, center
/// size, derived-subgroup size) follow the classical fingerprint. Two
/// refinements separate named groups that agree on all five: the center
/// exponent (`C2xC2:C4` vs the central product `D8oC4`: both have order
/// statistics `{1:1, 2:7, 4:8}`, `|Z|=4`, `|G'|=2`, but centers `C2×C2` vs
/// `C4`) and the power-map image sizes (`Q8xC2` vs `C4:C4`).
///
/// This is not a complete invariant in general; it is verified to separate
/// every distinct pair the catalog constructs.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
pub struct Fingerprint {
    pub order: usize,
    pub abelian: bool,
    /// Sorted `(element order, count)` pairs.
    pub order_statistics: Vec<(u64, usize)>,
    pub center_order: usize,
    pub derived_order: usize,
    pub center_exponent: u64,
    /// `|Im(x ↦ x^n)|` for `n = 1..=|G|`. Separates pairs the classical
    /// invariants conflate, e.g. `Q8xC2` and `C4:C4` (both have order
    /// statistics `{1:1, 2:3, 4:12}`, `|Z|=4` of exponent 2 and `|G'|=2`,
    /// but their squaring maps have images of size 2 and 3).
    pub power_image_sizes: Vec<usize>,
}

#[derive(Default)]
pub(crate) struct Caches {
    pub(crate) abelian: OnceLock<bool>,
    pub(crate) classes: OnceLock<subgroup::ClassData>,
    pub(crate) center: OnceLock<SubgroupInfo>,
    pub(crate) derived: OnceLock<SubgroupInfo>,
    pub(crate) subgroups: OnceLock<Vec<SubgroupInfo>>,
}

/// A finite group as a dense multiplication table.
///
/// Invariants established at construction and re-checked on deserialization:
/// the table is a Latin square, index 0 is a two-sided identity, every element
/// has an inverse, and the operation is associative (fully verified up to
/// order 128, verified on a million seeded random triples above that).
///
/// The table is immutable after construction; every query is read-only, so a
/// `GroupTable` can be shared freely across threads.
pub struct GroupTable {
    name: String,
    order: usize,
    labels: Vec<String>,
    mul: Vec<u16>,
    inv: Vec<u16>,
    elem_order: Vec<u64>,
    exponent: u64,
    caches: Caches,
}

impl GroupTable {
    /// Validates and finishes a multiplication table. `mul` is row-major:
    /// `mul[a * order + b]` is the id of the product `a · b`.
    pub fn from_parts(
        name: impl Into<String>,
        labels: Vec<String>,
        mul: Vec<u16>,
    ) -> Result<GroupTable> {
        let name = name.into();
        let order = labels.len();
        if order == 0 {
            return Err(Error::InvalidTable("a group needs at least one element".into()));
        }
        if order > subset::MAX_UNIVERSE {
            return Err(Error::MaxOrderExceeded {
                requested: order,
                bound: subset::MAX_UNIVERSE,
            });
        }
        if mul.len() != order * order {
            return Err(Error::InvalidTable(format!(
                "table has {} entries, expected {}",
                mul.len(),
                order * order
            )));
        }
        if mul.iter().any(|&e| (e as usize) >= order) {
            return Err(Error::InvalidTable("table entry out of range".into()));
        }
        {
            let mut seen = std::collections::HashSet::new();
            for l in &labels {
                if !seen.insert(l.as_str()) {
                    return Err(Error::InvalidTable(format!("duplicate label {l:?}")));
                }
            }
        }

        let at = |a: usize, b: usize| mul[a * order + b] as usize;

        for x in 0..order {
            if at(0, x) != x || at(x, 0) != x {
                return Err(Error::InvalidTable(format!(
                    "index 0 is not a two-sided identity at element {x}"
                )));
            }
        }
        // Latin square: every row and every column is a permutation.
        let mut seen = vec![false; order];
        for a in 0..order {
            seen.iter_mut().for_each(|s| *s = false);
            for b in 0..order {
                let p = at(a, b);
                if seen[p] {
                    return Err(Error::InvalidTable(format!("row {a} repeats element {p}")));
                }
                seen[p] = true;
            }
        }
        for b in 0..order {
            seen.iter_mut().for_each(|s| *s = false);
            for a in 0..order {
                let p = at(a, b);
                if seen[p] {
                    return Err(Error::InvalidTable(format!(
                        "column {b} repeats element {p}"
                    )));
                }
                seen[p] = true;
            }
        }

        if order <= FULL_ASSOC_BOUND {
            for a in 0..order {
                for b in 0..order {
                    let ab = at(a, b);
                    for c in 0..order {
                        if at(ab, c) != at(a, at(b, c)) {
                            return Err(Error::InvalidTable(format!(
                                "associativity fails on ({a}, {b}, {c})"
                            )));
                        }
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(ASSOC_SAMPLE_SEED);
            for _ in 0..SAMPLED_ASSOC_TRIPLES {
                let a = rng.gen_range(0..order);
                let b = rng.gen_range(0..order);
                let c = rng.gen_range(0..order);
                if at(at(a, b), c) != at(a, at(b, c)) {
                    return Err(Error::InvalidTable(format!(
                        "associativity fails on ({a}, {b}, {c})"
                    )));
                }
            }
        }

        // Right inverses exist because each row is a permutation hitting 0;
        // with associativity they are two-sided.
        let mut inv = vec![0u16; order];
        for a in 0..order {
            let j = (0..order).find(|&b| at(a, b) == 0).expect("row covers identity");
            inv[a] = j as u16;
            debug_assert_eq!(at(j, a), 0);
        }

        let mut elem_order = vec![0u64; order];
        for x in 0..order {
            let mut acc = x;
            let mut k = 1u64;
            while acc != 0 {
                acc = at(acc, x);
                k += 1;
            }
            elem_order[x] = k;
        }
        let exponent = elem_order.iter().fold(1u64, |l, &o| l.lcm(&o));

        Ok(GroupTable {
            name,
            order,
            labels,
            mul,
            inv,
            elem_order,
            exponent,
            caches: Caches::default(),
        })
    }

    /// Same table under a different display name (caches are rebuilt lazily).
    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: ElementId) -> &str {
        &self.labels[x.index()]
    }

    pub fn element_by_label(&self, label: &str) -> Option<ElementId> {
        self.labels
            .iter()
            .position(|l| l == label)
            .map(ElementId::new)
    }

    pub fn elements(&self) -> impl Iterator<Item = ElementId> {
        (0..self.order).map(ElementId::new)
    }

    pub fn identity(&self) -> ElementId {
        ElementId::IDENTITY
    }

    #[inline]
    pub fn mul(&self, a: ElementId, b: ElementId) -> ElementId {
        ElementId(self.mul[a.index() * self.order + b.index()])
    }

    #[inline]
    pub fn inv(&self, a: ElementId) -> ElementId {
        ElementId(self.inv[a.index()])
    }

    /// `g · x · g⁻¹`.
    #[inline]
    pub fn conjugate(&self, g: ElementId, x: ElementId) -> ElementId {
        self.mul(self.mul(g, x), self.inv(g))
    }

    /// `x⁻¹ · y⁻¹ · x · y`.
    pub fn commutator(&self, x: ElementId, y: ElementId) -> ElementId {
        self.mul(self.mul(self.inv(x), self.inv(y)), self.mul(x, y))
    }

    /// `x^n` by binary exponentiation; `n = 0` gives the identity.
    pub fn element_power(&self, x: ElementId, n: u64) -> ElementId {
        let mut e = n % self.elem_order[x.index()];
        let mut base = x;
        let mut acc = ElementId::IDENTITY;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Least `k ≥ 1` with `x^k = 1`; always divides the exponent.
    pub fn order_of(&self, x: ElementId) -> u64 {
        self.elem_order[x.index()]
    }

    /// Least common multiple of all element orders.
    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    /// Map `d ↦ n_d`, the number of elements of order `d`.
    pub fn order_statistics(&self) -> BTreeMap<u64, usize> {
        let mut stats = BTreeMap::new();
        for &o in &self.elem_order {
            *stats.entry(o).or_insert(0) += 1;
        }
        stats
    }

    pub fn is_abelian(&self) -> bool {
        *self.caches.abelian.get_or_init(|| {
            (0..self.order).all(|a| {
                (a + 1..self.order)
                    .all(|b| self.mul[a * self.order + b] == self.mul[b * self.order + a])
            })
        })
    }

    /// The whole element set as a mask.
    pub fn full_mask(&self) -> SubsetMask {
        SubsetMask::full(self.order)
    }

    pub fn fingerprint(&self) -> Fingerprint {
        let center = self.center();
        let center_exponent = center
            .elements
            .iter()
            .fold(1u64, |l, x| l.lcm(&self.order_of(x)));
        let power_image_sizes = (1..=self.order as u64)
            .map(|n| {
                let mut image = SubsetMask::empty(self.order);
                for x in self.elements() {
                    image.insert(self.element_power(x, n));
                }
                image.len()
            })
            .collect();
        Fingerprint {
            order: self.order,
            abelian: self.is_abelian(),
            order_statistics: self.order_statistics().into_iter().collect(),
            center_order: center.order(),
            derived_order: self.derived_subgroup().order(),
            center_exponent,
            power_image_sizes,
        }
    }

    pub(crate) fn caches(&self) -> &Caches {
        &self.caches
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("group serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<GroupTable> {
        let repr: GroupFile = serde_json::from_str(text)?;
        repr.try_into()
    }
}

impl fmt::Debug for GroupTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GroupTable")
            .field("name", &self.name)
            .field("order", &self.order)
            .finish()
    }
}

/// On-disk shape: `{name, order, labels, mul}` with `mul` row-major.
#[derive(Serialize, Deserialize)]
struct GroupFile {
    name: String,
    order: usize,
    labels: Vec<String>,
    mul: Vec<Vec<u16>>,
}

impl TryFrom<GroupFile> for GroupTable {
    type Error = Error;

    fn try_from(repr: GroupFile) -> Result<GroupTable> {
        if repr.order != repr.labels.len() {
            return Err(Error::InvalidTable(format!(
                "declared order {} but {} labels",
                repr.order,
                repr.labels.len()
            )));
        }
        if repr.mul.len() != repr.order || repr.mul.iter().any(|row| row.len() != repr.order) {
            return Err(Error::InvalidTable("table is not square".into()));
        }
        let flat: Vec<u16> = repr.mul.into_iter().flatten().collect();
        GroupTable::from_parts(repr.name, repr.labels, flat)
    }
}

impl Serialize for GroupTable {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<u16>> = (0..self.order)
            .map(|a| self.mul[a * self.order..(a + 1) * self.order].to_vec())
            .collect();
        GroupFile {
            name: self.name.clone(),
            order: self.order,
            labels: self.labels.clone(),
            mul: rows,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for GroupTable {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = GroupFile::deserialize(deserializer)?;
        repr.try_into().map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::constructors;
    use super::*;

    #[test]
    fn cyclic_queries() {
        let c4 = constructors::cyclic(4).unwrap();
        let r = ElementId::new(1);
        assert_eq!(c4.mul(r, r), ElementId::new(2));
        assert_eq!(c4.mul(c4.identity(), r), r);
        assert_eq!(c4.element_power(r, 0), c4.identity());
        assert_eq!(c4.element_power(r, 7), ElementId::new(3));
        assert_eq!(c4.order_of(r), 4);
        assert_eq!(c4.exponent(), 4);
        assert!(c4.is_abelian());
    }

    #[test]
    fn order_statistics_c5() {
        let c5 = constructors::cyclic(5).unwrap();
        let stats = c5.order_statistics();
        assert_eq!(stats, BTreeMap::from([(1, 1), (5, 4)]));
    }

    #[test]
    fn exponent_of_product() {
        let g = constructors::direct_product(
            &constructors::cyclic(2).unwrap(),
            &constructors::cyclic(4).unwrap(),
        )
        .unwrap();
        assert_eq!(g.exponent(), 4);
    }

    #[test]
    fn invalid_tables_are_rejected() {
        // 2x2 table where index 0 is not an identity.
        let err = GroupTable::from_parts("bad", vec!["a".into(), "b".into()], vec![1, 0, 0, 1]);
        assert!(matches!(err, Err(Error::InvalidTable(_))));

        // Right size, identity fine, but row 1 repeats an entry.
        let err = GroupTable::from_parts("bad", vec!["e".into(), "x".into()], vec![0, 1, 1, 1]);
        assert!(matches!(err, Err(Error::InvalidTable(_))));

        // Non-associative Latin square with identity: order-5 loop.
        // Row/col 0 identity; the 4x4 core is a Latin square on {1..4} chosen
        // to break associativity.
        let mul: Vec<u16> = vec![
            0, 1, 2, 3, 4, //
            1, 0, 3, 4, 2, //
            2, 4, 0, 1, 3, //
            3, 2, 4, 0, 1, //
            4, 3, 1, 2, 0,
        ];
        let labels = (0..5).map(|i| format!("x{i}")).collect();
        let err = GroupTable::from_parts("loop", labels, mul);
        assert!(matches!(err, Err(Error::InvalidTable(msg)) if msg.contains("associativity")));
    }

    #[test]
    fn duplicate_labels_rejected() {
        let err = GroupTable::from_parts("bad", vec!["e".into(), "e".into()], vec![0, 1, 1, 0]);
        assert!(matches!(err, Err(Error::InvalidTable(msg)) if msg.contains("duplicate")));
    }

    #[test]
    fn serde_round_trip_revalidates() {
        let d8 = constructors::dihedral(8).unwrap();
        let json = d8.to_json();
        let back = GroupTable::from_json(&json).unwrap();
        assert_eq!(back.name(), "D8");
        assert_eq!(back.order(), 8);
        assert_eq!(back.order_statistics(), d8.order_statistics());

        // Tampering with the table must be caught on load.
        let broken = json.replace("\"order\": 8", "\"order\": 7");
        assert!(GroupTable::from_json(&broken).is_err());
    }

    #[test]
    fn identity_is_index_zero() {
        for g in [
            constructors::cyclic(6).unwrap(),
            constructors::dihedral(8).unwrap(),
            constructors::symmetric(3).unwrap(),
        ] {
            assert_eq!(g.order_of(g.identity()), 1);
            for x in g.elements() {
                assert_eq!(g.mul(g.identity(), x), x);
                assert_eq!(g.mul(x, g.inv(x)), g.identity());
            }
        }
    }
}
