use super::SubgroupLattice;
use crate::error::Result;
use crate::isomorph::{find_isomorphism, ColoredDigraph, IsoOutcome};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LatticeIsoOutcome {
    /// `map[i]` is the image of subgroup `i`.
    Found(Vec<u32>),
    Exhausted,
}

/// Hasse diagram with cyclic subgroups marked; cyclicity is a lattice
/// property (distributive lattices of finite groups are exactly the cyclic
/// ones). Orders are added as colours only when indices must be preserved.
fn hasse(l: &SubgroupLattice, with_orders: bool) -> ColoredDigraph {
    let colors = l
        .indices()
        .map(|i| {
            let size = if with_orders { l.subgroup(i).order() as u64 } else { 0 };
            (size << 1) | l.is_cyclic(i) as u64
        })
        .collect();
    let mut g = ColoredDigraph::new(colors);
    for i in l.indices() {
        for &j in l.lower_covers(i) {
            g.add_arc(j, i, 1);
        }
    }
    g
}

pub fn lattice_isomorphism(
    a: &SubgroupLattice,
    b: &SubgroupLattice,
    index_preserving: bool,
    budget: u64,
) -> Result<LatticeIsoOutcome> {
    if a.len() != b.len() || (index_preserving && a.group().order() != b.group().order()) {
        return Ok(LatticeIsoOutcome::Exhausted);
    }
    let ga = hasse(a, index_preserving);
    let gb = hasse(b, index_preserving);
    Ok(match find_isomorphism(&ga, &gb, budget)? {
        IsoOutcome::Found(m) => LatticeIsoOutcome::Found(m),
        IsoOutcome::Exhausted => LatticeIsoOutcome::Exhausted,
    })
}

impl SubgroupLattice {
    /// Checks that `map` is an order isomorphism onto `other`, optionally
    /// preserving subgroup orders.
    pub fn is_lattice_isomorphism(&self, other: &SubgroupLattice, map: &[u32], index_preserving: bool) -> bool {
        if map.len() != self.len() || other.len() != self.len() {
            return false;
        }
        let mut hit = vec![false; map.len()];
        if map.iter().any(|&v| std::mem::replace(&mut hit[v as usize], true)) {
            return false;
        }
        if index_preserving
            && self
                .indices()
                .any(|i| self.subgroup(i).order() != other.subgroup(map[i as usize]).order())
        {
            return false;
        }
        self.indices().all(|i| {
            self.indices()
                .all(|j| self.leq(i, j) == other.leq(map[i as usize], map[j as usize]))
        })
    }
}
