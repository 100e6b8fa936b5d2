//! Subgroup lattices: full enumeration, containment, meets and joins, and
//! generator counts for every subgroup.

mod cache;
mod iso;
mod props;
mod subgroup;

use std::collections::HashMap;
use std::sync::atomic::{AtomicU32, Ordering};
use std::sync::Arc;

use rayon::prelude::*;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::group::{gcd, is_prime, FiniteGroup};

pub use cache::CACHE_VERSION;
pub use iso::{lattice_isomorphism, LatticeIsoOutcome};
pub use props::{CharacteristicKind, IwasawaWitness, StructureReport};
pub use subgroup::Subgroup;

const UNSET: u32 = u32::MAX;

pub struct SubgroupLattice {
    group: Arc<FiniteGroup>,
    subs: Vec<Subgroup>,
    index: HashMap<BitSet, u32>,
    cyclic_of: Vec<u32>,
    cyclics: Vec<u32>,
    cyc_pos: Vec<u32>,
    below: Vec<BitSet>,
    above: Vec<BitSet>,
    lower_covers: Vec<Vec<u32>>,
    upper_covers: Vec<Vec<u32>>,
    normal: BitSet,
    d: Vec<u32>,
    min_d_above: Vec<u32>,
    join_cyc: Vec<AtomicU32>,
}

impl std::fmt::Debug for SubgroupLattice {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SubgroupLattice")
            .field("group_order", &self.group.order())
            .field("subgroups", &self.subs.len())
            .finish()
    }
}

/// All subgroups of `g`, found by prime-index cyclic extension when `g` is
/// solvable and by cyclic seeding plus join closure otherwise.
pub fn enumerate_subgroups(g: &Arc<FiniteGroup>) -> SubgroupLattice {
    let subs = if g.is_solvable() {
        enumerate_solvable(g)
    } else {
        enumerate_by_joins(g)
    };
    SubgroupLattice::from_subgroups(g.clone(), subs)
}

/// Every subgroup of a solvable group has a normal subgroup of prime index,
/// so extending each known subgroup `H` by elements of `N(H)` of prime order
/// modulo `H` reaches all subgroups.
pub(crate) fn enumerate_solvable(g: &FiniteGroup) -> Vec<Subgroup> {
    let n = g.order();
    let mut subs = vec![Subgroup::trivial(n)];
    let mut seen: HashMap<BitSet, usize> = HashMap::from([(subs[0].members().clone(), 0)]);
    let mut i = 0;
    while i < subs.len() {
        let h = subs[i].clone();
        let mut covered = h.members().clone();
        for x in 0..n as u32 {
            if covered.contains(x as usize) {
                continue;
            }
            if !h.gens().iter().all(|&a| h.contains(g.conjugate(a, x))) {
                continue;
            }
            let mut k = 1u64;
            let mut y = x;
            while !h.contains(y) {
                y = g.mul(y, x);
                k += 1;
            }
            if !is_prime(k) {
                continue;
            }
            let mut kk = h.clone();
            g.extend_subgroup(&mut kk, x);
            covered.union_with(kk.members());
            if !seen.contains_key(kk.members()) {
                seen.insert(kk.members().clone(), subs.len());
                subs.push(kk);
            }
        }
        i += 1;
    }
    subs
}

/// Cyclic subgroups closed under joins with cyclic subgroups; valid for any
/// group since every subgroup is generated by its cyclic subgroups.
pub(crate) fn enumerate_by_joins(g: &FiniteGroup) -> Vec<Subgroup> {
    let n = g.order();
    let mut subs: Vec<Subgroup> = Vec::new();
    let mut seen: HashMap<BitSet, usize> = HashMap::new();
    let mut push = |s: Subgroup, subs: &mut Vec<Subgroup>| {
        if !seen.contains_key(s.members()) {
            seen.insert(s.members().clone(), subs.len());
            subs.push(s);
        }
    };
    let mut cyc_gens = Vec::new();
    for x in 0..n as u32 {
        let c = g.generated_subgroup(&[x]);
        let before = subs.len();
        push(c, &mut subs);
        if subs.len() > before {
            cyc_gens.push(x);
        }
    }
    let mut i = 0;
    while i < subs.len() {
        for &x in &cyc_gens {
            if subs[i].contains(x) {
                continue;
            }
            let mut k = subs[i].clone();
            g.extend_subgroup(&mut k, x);
            push(k, &mut subs);
        }
        i += 1;
    }
    subs
}

impl SubgroupLattice {
    pub(crate) fn from_subgroups(group: Arc<FiniteGroup>, mut subs: Vec<Subgroup>) -> Self {
        subs.sort_by(|a, b| {
            a.order()
                .cmp(&b.order())
                .then_with(|| a.members().cmp_members(b.members()))
        });
        let s = subs.len();
        let index: HashMap<BitSet, u32> = subs
            .iter()
            .enumerate()
            .map(|(i, h)| (h.members().clone(), i as u32))
            .collect();
        let below: Vec<BitSet> = (0..s)
            .into_par_iter()
            .map(|i| {
                let k = &subs[i];
                let mut row = BitSet::new(s);
                for (j, h) in subs[..=i].iter().enumerate() {
                    if k.order().is_multiple_of(h.order()) && h.gens().iter().all(|&x| k.contains(x)) {
                        row.insert(j);
                    }
                }
                row
            })
            .collect();
        let lower_covers: Vec<Vec<u32>> = (0..s)
            .into_par_iter()
            .map(|i| {
                let mut dominated = BitSet::new(s);
                let mut covers = Vec::new();
                let mut cand: Vec<usize> = below[i].iter().filter(|&j| j != i).collect();
                cand.reverse();
                for j in cand {
                    if !dominated.contains(j) {
                        covers.push(j as u32);
                        dominated.union_with(&below[j]);
                    }
                }
                covers.reverse();
                covers
            })
            .collect();
        Self::assemble(group, subs, index, below, lower_covers, None, None)
    }

    /// Derived tables from the subgroup list, containment rows and covers.
    fn assemble(
        group: Arc<FiniteGroup>,
        subs: Vec<Subgroup>,
        index: HashMap<BitSet, u32>,
        below: Vec<BitSet>,
        lower_covers: Vec<Vec<u32>>,
        d: Option<Vec<u32>>,
        normal: Option<BitSet>,
    ) -> Self {
        let s = subs.len();
        let above = Self::from_below_rows(s, &below);
        let mut upper_covers = vec![Vec::new(); s];
        for (i, lc) in lower_covers.iter().enumerate() {
            for &j in lc {
                upper_covers[j as usize].push(i as u32);
            }
        }
        let g = &group;
        let n = g.order();
        let mut cyclic_of = vec![UNSET; n];
        for x in 0..n as u32 {
            if cyclic_of[x as usize] != UNSET {
                continue;
            }
            let pw = g.powers(x);
            let idx = index[&BitSet::from_indices(n, pw.iter().map(|&v| v as usize))];
            let o = pw.len() as u64;
            for (k, &y) in pw.iter().enumerate() {
                if gcd(k as u64, o) == 1 {
                    cyclic_of[y as usize] = idx;
                }
            }
        }
        let mut cyclics: Vec<u32> = cyclic_of.clone();
        cyclics.sort_unstable();
        cyclics.dedup();
        let mut cyc_pos = vec![UNSET; s];
        for (p, &c) in cyclics.iter().enumerate() {
            cyc_pos[c as usize] = p as u32;
        }
        let gens = g.generators();
        let normal = normal.unwrap_or_else(|| {
            BitSet::from_indices(s, (0..s).filter(|&i| g.is_normalized_by(&subs[i], gens)))
        });
        let join_cyc = (0..s * cyclics.len()).map(|_| AtomicU32::new(UNSET)).collect();
        let mut lat = Self {
            group,
            subs,
            index,
            cyclic_of,
            cyclics,
            cyc_pos,
            below,
            above,
            lower_covers,
            upper_covers,
            normal,
            d: Vec::new(),
            min_d_above: Vec::new(),
            join_cyc,
        };
        lat.d = d.unwrap_or_else(|| lat.compute_d());
        lat.min_d_above = lat.compute_min_d_above();
        lat
    }

    fn from_below_rows(s: usize, below: &[BitSet]) -> Vec<BitSet> {
        let mut above = vec![BitSet::new(s); s];
        for (i, row) in below.iter().enumerate() {
            for j in row.iter() {
                above[j].insert(i);
            }
        }
        above
    }

    fn compute_d(&self) -> Vec<u32> {
        let s = self.subs.len();
        if let Some(p) = self.group.prime_power_base() {
            // Burnside basis theorem: d = log_p |H : Φ(H)|
            return (0..s)
                .map(|i| {
                    let h = self.subs[i].order();
                    let phi = self.frattini_index(i as u32) as usize;
                    let mut q = h / self.subs[phi].order();
                    let mut k = 0;
                    while q > 1 {
                        q /= p as usize;
                        k += 1;
                    }
                    k
                })
                .collect();
        }
        self.compute_d_by_search()
    }

    /// Breadth-first over "generated by k elements": level k+1 consists of
    /// the joins of level-k subgroups with cyclic subgroups.
    pub(crate) fn compute_d_by_search(&self) -> Vec<u32> {
        let s = self.subs.len();
        let mut d = vec![UNSET; s];
        d[0] = 0;
        let mut frontier = vec![0u32];
        let mut level = 0;
        while !frontier.is_empty() {
            level += 1;
            let mut next = Vec::new();
            for &a in &frontier {
                for &c in &self.cyclics {
                    if self.below[a as usize].contains(c as usize) {
                        continue;
                    }
                    let k = self.join(a, c);
                    if d[k as usize] == UNSET {
                        d[k as usize] = level;
                        next.push(k);
                    }
                }
            }
            frontier = next;
        }
        d
    }

    fn compute_min_d_above(&self) -> Vec<u32> {
        let s = self.subs.len();
        let mut m = self.d.clone();
        for i in (0..s).rev() {
            for &u in &self.upper_covers[i] {
                m[i] = m[i].min(m[u as usize]);
            }
        }
        m
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn group_arc(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn len(&self) -> usize {
        self.subs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subs.is_empty()
    }

    pub fn subgroups(&self) -> &[Subgroup] {
        &self.subs
    }

    pub fn subgroup(&self, i: u32) -> &Subgroup {
        &self.subs[i as usize]
    }

    pub fn bottom(&self) -> u32 {
        0
    }

    pub fn top(&self) -> u32 {
        self.subs.len() as u32 - 1
    }

    pub fn index_of(&self, members: &BitSet) -> Option<u32> {
        self.index.get(members).copied()
    }

    /// Lattice index of an arbitrary subgroup of the parent group.
    pub fn locate(&self, h: &Subgroup) -> u32 {
        self.index[h.members()]
    }

    /// Index of ⟨x⟩.
    #[inline]
    pub fn cyclic_of(&self, x: u32) -> u32 {
        self.cyclic_of[x as usize]
    }

    /// Indices of all cyclic subgroups, ascending.
    pub fn cyclics(&self) -> &[u32] {
        &self.cyclics
    }

    pub fn is_cyclic(&self, i: u32) -> bool {
        self.cyc_pos[i as usize] != UNSET
    }

    #[inline]
    pub fn leq(&self, a: u32, b: u32) -> bool {
        self.below[b as usize].contains(a as usize)
    }

    /// Subgroups contained in `i` (including `i`).
    pub fn below(&self, i: u32) -> &BitSet {
        &self.below[i as usize]
    }

    /// Subgroups containing `i` (including `i`).
    pub fn above(&self, i: u32) -> &BitSet {
        &self.above[i as usize]
    }

    /// Maximal subgroups of `i`.
    pub fn lower_covers(&self, i: u32) -> &[u32] {
        &self.lower_covers[i as usize]
    }

    pub fn upper_covers(&self, i: u32) -> &[u32] {
        &self.upper_covers[i as usize]
    }

    pub fn is_normal(&self, i: u32) -> bool {
        self.normal.contains(i as usize)
    }

    /// Intersection: the largest subgroup below both.
    pub fn meet(&self, a: u32, b: u32) -> u32 {
        self.below[a as usize].last_common(&self.below[b as usize]).unwrap() as u32
    }

    /// Join: the smallest subgroup above both (listing is sorted by order).
    pub fn join(&self, a: u32, b: u32) -> u32 {
        self.above[a as usize].first_common(&self.above[b as usize]).unwrap() as u32
    }

    /// ⟨H, x⟩ for a lattice index `h` and element `x`, memoised.
    pub fn join_element(&self, h: u32, x: u32) -> u32 {
        let c = self.cyclic_of[x as usize];
        if self.below[h as usize].contains(c as usize) {
            return h;
        }
        let slot = &self.join_cyc[h as usize * self.cyclics.len() + self.cyc_pos[c as usize] as usize];
        let v = slot.load(Ordering::Relaxed);
        if v != UNSET {
            return v;
        }
        let j = self.join(h, c);
        slot.store(j, Ordering::Relaxed);
        j
    }

    /// Lattice index of ⟨X⟩.
    pub fn generated_by(&self, xs: &[u32]) -> u32 {
        xs.iter().fold(0, |h, &x| self.join_element(h, x))
    }

    /// Minimum number of generators of subgroup `i`.
    pub fn d(&self, i: u32) -> u32 {
        self.d[i as usize]
    }

    pub fn d_values(&self) -> &[u32] {
        &self.d
    }

    /// Minimum of d over all subgroups containing `i`.
    pub fn min_d_above(&self, i: u32) -> u32 {
        self.min_d_above[i as usize]
    }

    /// Maximum of d over all subgroups.
    pub fn rank(&self) -> u32 {
        self.d.iter().copied().max().unwrap_or(0)
    }

    /// Intersection of the maximal subgroups of subgroup `i`.
    pub fn frattini_index(&self, i: u32) -> u32 {
        let lc = &self.lower_covers[i as usize];
        if lc.is_empty() {
            return i;
        }
        lc[1..].iter().fold(lc[0], |acc, &m| self.meet(acc, m))
    }

    /// Subgroup indices sorted by the given key, for deterministic scans.
    pub fn indices(&self) -> impl Iterator<Item = u32> {
        0..self.subs.len() as u32
    }
}

/// d(H) by literal search over k-subsets, used to cross-check the lattice
/// values on small inputs.
pub fn min_generators_by_search(g: &FiniteGroup, h: &Subgroup) -> u32 {
    if h.order() == 1 {
        return 0;
    }
    let elems: Vec<u32> = h.elements().iter().copied().filter(|&x| x != 0).collect();
    for k in 1..=elems.len() {
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            let xs: Vec<u32> = idx.iter().map(|&i| elems[i]).collect();
            if g.generated_subgroup(&xs).order() == h.order() {
                return k as u32;
            }
            if !next_combination(&mut idx, elems.len()) {
                break;
            }
        }
    }
    unreachable!("a subgroup is generated by its own elements")
}

pub(crate) fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if idx[i] < n - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

pub(crate) fn not_p_group(g: &FiniteGroup, p: u32) -> Result<()> {
    if g.order() > 1 && g.prime_power_base() != Some(p) {
        return Err(Error::NotAPGroup { p });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{make_cyclic, make_direct_product};

    fn arc(g: FiniteGroup) -> Arc<FiniteGroup> {
        Arc::new(g)
    }

    #[test]
    fn klein_four_has_five_subgroups() {
        let v4 = make_direct_product(&make_cyclic(2).unwrap(), &make_cyclic(2).unwrap()).unwrap();
        let l = enumerate_subgroups(&arc(v4));
        assert_eq!(l.len(), 5);
        assert_eq!(l.d(l.top()), 2);
        assert_eq!(l.rank(), 2);
    }

    #[test]
    fn prime_cyclic_two_subgroups() {
        let l = enumerate_subgroups(&arc(make_cyclic(7).unwrap()));
        assert_eq!(l.len(), 2);
        assert_eq!(l.d(1), 1);
    }

    #[test]
    fn c12_lattice_is_divisor_lattice() {
        let l = enumerate_subgroups(&arc(make_cyclic(12).unwrap()));
        assert_eq!(l.len(), 6);
        assert_eq!(l.cyclics().len(), 6);
        let c4 = l.cyclic_of(3);
        let c6 = l.cyclic_of(2);
        assert_eq!(l.subgroup(l.meet(c4, c6)).order(), 2);
        assert_eq!(l.join(c4, c6), l.top());
        assert_eq!(l.d(l.top()), 1);
    }

    #[test]
    fn solvable_and_join_paths_agree() {
        let g = make_direct_product(&make_cyclic(4).unwrap(), &make_cyclic(6).unwrap()).unwrap();
        let mut a: Vec<BitSet> = enumerate_solvable(&g).iter().map(|s| s.members().clone()).collect();
        let mut b: Vec<BitSet> = enumerate_by_joins(&g).iter().map(|s| s.members().clone()).collect();
        a.sort_by(|x, y| x.cmp_members(y));
        b.sort_by(|x, y| x.cmp_members(y));
        assert_eq!(a, b);
    }

    #[test]
    fn d_by_search_matches_frattini_shortcut() {
        let g = make_direct_product(&make_cyclic(9).unwrap(), &make_cyclic(3).unwrap()).unwrap();
        let l = enumerate_subgroups(&arc(g));
        assert_eq!(l.d_values(), l.compute_d_by_search().as_slice());
        assert_eq!(l.d(l.top()), 2);
    }
}
