//! Subgroup structure: conjugacy classes, center, derived subgroup,
//! centralizers, normalizers, and the full subgroup lattice of small groups.

use super::subset::SubsetMask;
use super::{ElementId, GroupTable};
use crate::error::{Error, Result};

/// Conjugacy classes of a group, ordered by their minimal element.
#[derive(Debug, Clone)]
pub struct ClassData {
    pub classes: Vec<SubsetMask>,
    /// `class_of[x]` is the index into `classes` of the class containing `x`.
    pub class_of: Vec<u16>,
}

/// A subgroup presented as its element set together with a small generating
/// set (chosen greedily by ascending element id, so it is reproducible).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgroupInfo {
    pub elements: SubsetMask,
    pub generators: Vec<ElementId>,
    pub is_normal: bool,
}

impl SubgroupInfo {
    pub fn order(&self) -> usize {
        self.elements.len()
    }
}

impl GroupTable {
    /// Element set generated by `gens`: breadth-first products of generators
    /// starting from the identity (sufficient in a finite group).
    fn closure_mask(&self, gens: &[ElementId]) -> SubsetMask {
        let mut mask = SubsetMask::singleton(self.order(), ElementId::IDENTITY);
        let mut frontier = vec![ElementId::IDENTITY];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if !mask.contains(y) {
                    mask.insert(y);
                    frontier.push(y);
                }
            }
        }
        mask
    }

    /// Greedy generating set for a subgroup given as a mask: walk the
    /// elements in ascending id order and keep those not yet generated.
    fn greedy_generators(&self, mask: &SubsetMask) -> Vec<ElementId> {
        let mut gens = Vec::new();
        let mut generated = SubsetMask::singleton(self.order(), ElementId::IDENTITY);
        for x in mask.iter() {
            if !generated.contains(x) {
                gens.push(x);
                generated = self.closure_mask(&gens);
                if generated.len() == mask.len() {
                    break;
                }
            }
        }
        gens
    }

    fn mask_is_normal(&self, mask: &SubsetMask) -> bool {
        self.elements()
            .all(|g| mask.iter().all(|h| mask.contains(self.conjugate(g, h))))
    }

    pub(crate) fn info_for_mask(&self, elements: SubsetMask) -> SubgroupInfo {
        let generators = self.greedy_generators(&elements);
        let is_normal = self.mask_is_normal(&elements);
        SubgroupInfo {
            elements,
            generators,
            is_normal,
        }
    }

    /// Subgroup generated by the given elements.
    pub fn subgroup_closure(&self, gens: &[ElementId]) -> SubgroupInfo {
        self.info_for_mask(self.closure_mask(gens))
    }

    /// Whether `mask` is the element set of a subgroup.
    pub fn is_subgroup(&self, mask: &SubsetMask) -> bool {
        mask.universe() == self.order()
            && mask.contains(ElementId::IDENTITY)
            && mask
                .iter()
                .all(|a| mask.iter().all(|b| mask.contains(self.mul(a, b))))
    }

    /// Conjugacy classes, computed once and cached.
    pub fn conjugacy_classes(&self) -> &ClassData {
        self.caches().classes.get_or_init(|| {
            let n = self.order();
            let mut class_of = vec![u16::MAX; n];
            let mut classes = Vec::new();
            for x in self.elements() {
                if class_of[x.index()] != u16::MAX {
                    continue;
                }
                let id = classes.len() as u16;
                let mut mask = SubsetMask::empty(n);
                for g in self.elements() {
                    let y = self.conjugate(g, x);
                    if !mask.contains(y) {
                        mask.insert(y);
                        class_of[y.index()] = id;
                    }
                }
                classes.push(mask);
            }
            ClassData { classes, class_of }
        })
    }

    /// Conjugacy class of a single element.
    pub fn class_of(&self, x: ElementId) -> &SubsetMask {
        let data = self.conjugacy_classes();
        &data.classes[data.class_of[x.index()] as usize]
    }

    /// The center `Z(G)`, cached.
    pub fn center(&self) -> &SubgroupInfo {
        self.caches().center.get_or_init(|| {
            let mut mask = SubsetMask::empty(self.order());
            for z in self.elements() {
                if self.elements().all(|x| self.mul(z, x) == self.mul(x, z)) {
                    mask.insert(z);
                }
            }
            self.info_for_mask(mask)
        })
    }

    /// The derived (commutator) subgroup `G'`, cached.
    pub fn derived_subgroup(&self) -> &SubgroupInfo {
        self.caches().derived.get_or_init(|| {
            let mut comms = SubsetMask::empty(self.order());
            for x in self.elements() {
                for y in self.elements() {
                    comms.insert(self.commutator(x, y));
                }
            }
            let gens: Vec<ElementId> = comms.iter().collect();
            self.subgroup_closure(&gens)
        })
    }

    /// Centralizer `C_G(L)` of a non-empty subset: all elements commuting
    /// with every element of `L`.
    pub fn centralizer(&self, set: &SubsetMask) -> Result<SubgroupInfo> {
        if set.is_empty() {
            return Err(Error::EmptySubset);
        }
        let mut mask = SubsetMask::empty(self.order());
        for g in self.elements() {
            if set.iter().all(|l| self.mul(g, l) == self.mul(l, g)) {
                mask.insert(g);
            }
        }
        Ok(self.info_for_mask(mask))
    }

    /// Normalizer `N_G(L)` of a non-empty subset: all `g` with
    /// `g L g⁻¹ = L`.
    pub fn normalizer(&self, set: &SubsetMask) -> Result<SubgroupInfo> {
        if set.is_empty() {
            return Err(Error::EmptySubset);
        }
        let mut mask = SubsetMask::empty(self.order());
        for g in self.elements() {
            // Conjugation by g permutes the group, so preserving the set
            // elementwise-into-itself already forces equality.
            if set.iter().all(|l| set.contains(self.conjugate(g, l))) {
                mask.insert(g);
            }
        }
        Ok(self.info_for_mask(mask))
    }

    /// Whether a non-empty subset is normal, i.e. a union of conjugacy
    /// classes.
    pub fn is_normal_subset(&self, set: &SubsetMask) -> Result<bool> {
        if set.is_empty() {
            return Err(Error::EmptySubset);
        }
        Ok(self
            .elements()
            .all(|g| set.iter().all(|l| set.contains(self.conjugate(g, l)))))
    }

    /// The full subgroup lattice, cached. Starts from all cyclic subgroups
    /// and repeatedly extends each known subgroup by one outside element
    /// until no new subgroup appears. Groups of order above `bound` are
    /// rejected before any work is done.
    pub fn all_subgroups(&self, bound: usize) -> Result<&[SubgroupInfo]> {
        if self.order() > bound {
            return Err(Error::LatticeTooLarge {
                order: self.order(),
                bound,
            });
        }
        Ok(self.caches().subgroups.get_or_init(|| {
            let mut seen = std::collections::BTreeMap::<SubsetMask, Vec<ElementId>>::new();
            let mut queue: Vec<(SubsetMask, Vec<ElementId>)> = Vec::new();
            let trivial = SubsetMask::singleton(self.order(), ElementId::IDENTITY);
            seen.insert(trivial.clone(), Vec::new());
            queue.push((trivial, Vec::new()));
            for x in self.elements().skip(1) {
                let mask = self.closure_mask(&[x]);
                if let std::collections::btree_map::Entry::Vacant(e) = seen.entry(mask.clone()) {
                    e.insert(vec![x]);
                    queue.push((mask, vec![x]));
                }
            }
            while let Some((mask, gens)) = queue.pop() {
                if mask.len() == self.order() {
                    continue;
                }
                for g in mask.complement().iter() {
                    let mut next_gens = gens.clone();
                    next_gens.push(g);
                    let next = self.closure_mask(&next_gens);
                    if let std::collections::btree_map::Entry::Vacant(e) =
                        seen.entry(next.clone())
                    {
                        e.insert(next_gens.clone());
                        queue.push((next, next_gens));
                    }
                }
            }
            let mut subs: Vec<SubgroupInfo> =
                seen.into_keys().map(|m| self.info_for_mask(m)).collect();
            subs.sort_by(|a, b| {
                a.order()
                    .cmp(&b.order())
                    .then_with(|| a.elements.ids().cmp(&b.elements.ids()))
            });
            subs
        }))
    }

    /// Whether the group is extraspecial for the prime `p`: a `p`-group
    /// whose center has order `p` and coincides with the derived subgroup.
    /// (That already forces `G/Z` elementary abelian, hence order
    /// `p^{2k+1}`.)
    pub fn is_extraspecial(&self, p: u64) -> Result<bool> {
        if !super::constructors::is_prime(p) {
            return Err(Error::Construction(format!("{p} is not prime")));
        }
        let mut rest = self.order() as u64;
        while rest % p == 0 {
            rest /= p;
        }
        if rest != 1 {
            return Err(Error::NotPGroup {
                group: self.name().to_string(),
                p,
                order: self.order(),
            });
        }
        let center = self.center();
        Ok(center.order() as u64 == p && center.elements == self.derived_subgroup().elements)
    }
}
