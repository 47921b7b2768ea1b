//! Subsets of a group's element set as fixed-width bit vectors.

use super::ElementId;
use std::fmt;

/// Largest universe (group order) a mask can represent.
pub const MAX_UNIVERSE: usize = 512;
const WORDS: usize = MAX_UNIVERSE / 64;

/// A subset of the elements of one group, as a bit vector.
///
/// A mask is tied to its owning group only through the universe size; all
/// set operations require both operands to share the same universe and all
/// group-aware operations re-check the universe against the table order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SubsetMask {
    universe: u16,
    words: [u64; WORDS],
}

impl SubsetMask {
    pub fn empty(universe: usize) -> Self {
        assert!(universe <= MAX_UNIVERSE, "universe {universe} exceeds {MAX_UNIVERSE}");
        SubsetMask {
            universe: universe as u16,
            words: [0; WORDS],
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut mask = Self::empty(universe);
        for i in 0..universe {
            mask.insert(ElementId::new(i));
        }
        mask
    }

    pub fn singleton(universe: usize, id: ElementId) -> Self {
        let mut mask = Self::empty(universe);
        mask.insert(id);
        mask
    }

    pub fn from_ids(universe: usize, ids: impl IntoIterator<Item = ElementId>) -> Self {
        let mut mask = Self::empty(universe);
        for id in ids {
            mask.insert(id);
        }
        mask
    }

    pub fn universe(&self) -> usize {
        self.universe as usize
    }

    pub fn insert(&mut self, id: ElementId) {
        let i = id.index();
        assert!(i < self.universe(), "element {i} outside universe {}", self.universe);
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn remove(&mut self, id: ElementId) {
        let i = id.index();
        assert!(i < self.universe(), "element {i} outside universe {}", self.universe);
        self.words[i / 64] &= !(1 << (i % 64));
    }

    pub fn contains(&self, id: ElementId) -> bool {
        let i = id.index();
        i < self.universe() && self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    fn check_universe(&self, other: &SubsetMask) {
        assert_eq!(
            self.universe, other.universe,
            "masks belong to different universes"
        );
    }

    pub fn union(&self, other: &SubsetMask) -> SubsetMask {
        self.check_universe(other);
        let mut out = *self;
        for (w, o) in out.words.iter_mut().zip(other.words.iter()) {
            *w |= o;
        }
        out
    }

    pub fn intersection(&self, other: &SubsetMask) -> SubsetMask {
        self.check_universe(other);
        let mut out = *self;
        for (w, o) in out.words.iter_mut().zip(other.words.iter()) {
            *w &= o;
        }
        out
    }

    pub fn difference(&self, other: &SubsetMask) -> SubsetMask {
        self.check_universe(other);
        let mut out = *self;
        for (w, o) in out.words.iter_mut().zip(other.words.iter()) {
            *w &= !o;
        }
        out
    }

    pub fn complement(&self) -> SubsetMask {
        let mut out = Self::full(self.universe());
        for (w, o) in out.words.iter_mut().zip(self.words.iter()) {
            *w &= !o;
        }
        out
    }

    pub fn is_subset_of(&self, other: &SubsetMask) -> bool {
        self.check_universe(other);
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(w, o)| w & !o == 0)
    }

    pub fn is_disjoint(&self, other: &SubsetMask) -> bool {
        self.check_universe(other);
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(w, o)| w & o == 0)
    }

    /// Member ids in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = ElementId> + '_ {
        let universe = self.universe();
        self.words
            .iter()
            .enumerate()
            .flat_map(move |(wi, &w)| {
                let mut bits = w;
                std::iter::from_fn(move || {
                    if bits == 0 {
                        return None;
                    }
                    let b = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    Some(ElementId::new(wi * 64 + b))
                })
            })
            .filter(move |id| id.index() < universe)
    }

    /// Sorted member ids — the canonical form used for deduplication and
    /// deterministic report ordering.
    pub fn ids(&self) -> Vec<ElementId> {
        self.iter().collect()
    }

    pub fn min_element(&self) -> Option<ElementId> {
        self.iter().next()
    }
}

impl fmt::Debug for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SubsetMask{{")?;
        for (i, id) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", id.index())?;
        }
        write!(f, "}}/{}", self.universe)
    }
}

impl fmt::Display for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, id) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", id.index())?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ids(v: &[usize]) -> Vec<ElementId> {
        v.iter().map(|&i| ElementId::new(i)).collect()
    }

    #[test]
    fn basic_set_algebra() {
        let a = SubsetMask::from_ids(10, ids(&[0, 3, 7]));
        let b = SubsetMask::from_ids(10, ids(&[3, 4]));
        assert_eq!(a.len(), 3);
        assert!(a.contains(ElementId::new(7)));
        assert!(!a.contains(ElementId::new(4)));
        assert_eq!(a.union(&b).ids(), ids(&[0, 3, 4, 7]));
        assert_eq!(a.intersection(&b).ids(), ids(&[3]));
        assert_eq!(a.difference(&b).ids(), ids(&[0, 7]));
        assert!(b.is_subset_of(&a.union(&b)));
        assert!(!a.is_subset_of(&b));
        assert_eq!(a.complement().len(), 7);
        assert_eq!(a.min_element(), Some(ElementId::new(0)));
    }

    #[test]
    fn full_and_empty() {
        let f = SubsetMask::full(130);
        assert_eq!(f.len(), 130);
        assert!(SubsetMask::empty(130).is_empty());
        assert_eq!(f.complement().len(), 0);
        assert_eq!(f.iter().count(), 130);
    }

    #[test]
    fn ordering_is_deterministic() {
        let a = SubsetMask::from_ids(6, ids(&[1]));
        let b = SubsetMask::from_ids(6, ids(&[2]));
        assert!(a < b);
        assert_eq!(a.cmp(&a), std::cmp::Ordering::Equal);
    }

    #[test]
    #[should_panic(expected = "different universes")]
    fn universe_mismatch_panics() {
        let a = SubsetMask::empty(4);
        let b = SubsetMask::empty(5);
        let _ = a.union(&b);
    }
}
