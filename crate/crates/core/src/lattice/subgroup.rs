use std::fmt;

use crate::bitset::BitSet;

/// A subgroup as a member bitset plus its sorted element list and the
/// generators it was built from.
#[derive(Clone)]
pub struct Subgroup {
    members: BitSet,
    elements: Vec<u32>,
    gens: Vec<u32>,
}

impl Subgroup {
    pub fn trivial(n: usize) -> Self {
        Self {
            members: BitSet::from_indices(n, [0]),
            elements: vec![0],
            gens: Vec::new(),
        }
    }

    /// Caller guarantees `members` is closed under multiplication and
    /// `gens` generates it.
    pub fn from_parts(members: BitSet, gens: Vec<u32>) -> Self {
        let elements = members.to_vec();
        Self { members, elements, gens }
    }

    #[inline]
    pub fn contains(&self, x: u32) -> bool {
        self.members.contains(x as usize)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn members(&self) -> &BitSet {
        &self.members
    }

    /// Members in ascending index order.
    pub fn elements(&self) -> &[u32] {
        &self.elements
    }

    pub fn gens(&self) -> &[u32] {
        &self.gens
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.order() <= other.order() && self.gens.iter().all(|&g| other.contains(g))
    }

    pub(crate) fn parts_mut(&mut self) -> (&mut BitSet, &mut Vec<u32>, &mut Vec<u32>) {
        (&mut self.members, &mut self.elements, &mut self.gens)
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members
    }
}

impl Eq for Subgroup {}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subgroup(order {}, gens {:?})", self.order(), self.gens)
    }
}
