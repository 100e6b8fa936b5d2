use std::collections::{HashMap, VecDeque};

use super::FiniteGroup;
use crate::bitset::BitSet;
use crate::error::{Error, Result};

/// A map between groups given on every element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupHom {
    pub images: Vec<u32>,
}

impl GroupHom {
    pub fn apply(&self, x: u32) -> u32 {
        self.images[x as usize]
    }

    pub fn is_homomorphism(&self, g: &FiniteGroup, h: &FiniteGroup) -> bool {
        self.images.len() == g.order()
            && g.elements().all(|a| {
                g.elements()
                    .all(|b| self.apply(g.mul(a, b)) == h.mul(self.apply(a), self.apply(b)))
            })
    }

    pub fn is_bijective(&self, h: &FiniteGroup) -> bool {
        let mut hit = BitSet::new(h.order());
        self.images.len() == h.order() && self.images.iter().all(|&v| hit.insert(v as usize))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupIsoOutcome {
    Isomorphic(GroupHom),
    NotIsomorphic,
}

/// Per-element isomorphism invariant: order, centraliser size and number of
/// square roots.
fn element_invariants(g: &FiniteGroup) -> Vec<(u32, u32, u32)> {
    let n = g.order() as u32;
    let mut roots = vec![0u32; n as usize];
    for x in 0..n {
        roots[g.mul(x, x) as usize] += 1;
    }
    (0..n)
        .map(|x| {
            let cent = (0..n).filter(|&y| g.mul(x, y) == g.mul(y, x)).count() as u32;
            (g.element_order(x), cent, roots[x as usize])
        })
        .collect()
}

/// Generating sequence chosen to keep the backtracking narrow: at each step
/// take the element that enlarges the generated subgroup most, breaking ties
/// by the rarity of its invariant.
fn search_generators(g: &FiniteGroup, class_size: &dyn Fn(u32) -> usize) -> Vec<u32> {
    let mut reps: Vec<u32> = Vec::new();
    let mut seen = BitSet::new(g.order());
    for x in g.elements() {
        if seen.contains(x as usize) {
            continue;
        }
        let o = g.element_order(x) as u64;
        for (k, y) in g.powers(x).into_iter().enumerate() {
            if super::gcd(k as u64, o) == 1 {
                seen.insert(y as usize);
            }
        }
        reps.push(x);
    }
    // rarest generator of each cyclic subgroup
    let rare: Vec<u32> = reps
        .iter()
        .map(|&r| {
            let o = g.element_order(r) as u64;
            g.powers(r)
                .into_iter()
                .enumerate()
                .filter(|&(k, _)| super::gcd(k as u64, o) == 1)
                .map(|(_, y)| y)
                .min_by_key(|&y| (class_size(y), y))
                .unwrap()
        })
        .collect();
    if let Some(pair) = cheapest_generating_pair(g, &rare, class_size) {
        return pair;
    }
    let mut gens = Vec::new();
    let mut cur = crate::lattice::Subgroup::trivial(g.order());
    while cur.order() < g.order() {
        let mut best: Option<(usize, std::cmp::Reverse<usize>, u32)> = None;
        for &r in &reps {
            if cur.contains(r) {
                continue;
            }
            // pick the rarest element generating the same cyclic subgroup
            let o = g.element_order(r) as u64;
            let cand = g
                .powers(r)
                .into_iter()
                .enumerate()
                .filter(|&(k, _)| super::gcd(k as u64, o) == 1)
                .map(|(_, y)| y)
                .min_by_key(|&y| (class_size(y), y))
                .unwrap();
            let mut t = cur.clone();
            g.extend_subgroup(&mut t, cand);
            let key = (t.order(), std::cmp::Reverse(class_size(cand)), cand);
            if best.is_none_or(|b| (key.0, key.1) > (b.0, b.1)) {
                best = Some(key);
            }
        }
        let (_, _, x) = best.expect("proper subgroup misses some element");
        g.extend_subgroup(&mut cur, x);
        gens.push(x);
    }
    gens
}

/// Cyclic subgroups beyond which pairs are not scanned.
const PAIR_SCAN_LIMIT: usize = 400;

/// The generating set of at most two elements with the smallest product of
/// candidate counts, when the group has one and few cyclic subgroups.
fn cheapest_generating_pair(g: &FiniteGroup, rare: &[u32], class_size: &dyn Fn(u32) -> usize) -> Option<Vec<u32>> {
    if rare.len() > PAIR_SCAN_LIMIT {
        return None;
    }
    let n = g.order();
    if let Some(&x) = rare.iter().filter(|&&x| g.element_order(x) as usize == n).min_by_key(|&&x| class_size(x)) {
        return Some(if n == 1 { Vec::new() } else { vec![x] });
    }
    let mut pairs: Vec<(usize, u32, u32)> = Vec::new();
    for (i, &a) in rare.iter().enumerate() {
        for &b in &rare[i + 1..] {
            let (a, b) = if class_size(a) <= class_size(b) { (a, b) } else { (b, a) };
            pairs.push((class_size(a) * class_size(b), a, b));
        }
    }
    pairs.sort_unstable();
    pairs
        .into_iter()
        .find(|&(_, a, b)| g.generated_subgroup(&[a, b]).order() == n)
        .map(|(_, a, b)| vec![a, b])
}

/// Decides whether `g ≅ h`, returning an explicit isomorphism when one
/// exists. `budget` bounds the number of search nodes.
pub fn group_isomorphism(g: &FiniteGroup, h: &FiniteGroup, budget: u64) -> Result<GroupIsoOutcome> {
    if g.order() != h.order() || g.order_statistics() != h.order_statistics() {
        return Ok(GroupIsoOutcome::NotIsomorphic);
    }
    if g.is_abelian() != h.is_abelian() {
        return Ok(GroupIsoOutcome::NotIsomorphic);
    }
    let ig = element_invariants(g);
    let ih = element_invariants(h);
    let mut classes_h: HashMap<(u32, u32, u32), Vec<u32>> = HashMap::new();
    for x in h.elements() {
        classes_h.entry(ih[x as usize]).or_default().push(x);
    }
    let mut count_g: HashMap<(u32, u32, u32), usize> = HashMap::new();
    for inv in &ig {
        *count_g.entry(*inv).or_default() += 1;
    }
    if count_g.len() != classes_h.len()
        || count_g
            .iter()
            .any(|(k, &c)| classes_h.get(k).is_none_or(|v| v.len() != c))
    {
        return Ok(GroupIsoOutcome::NotIsomorphic);
    }
    let class_size = |x: u32| count_g[&ig[x as usize]];
    let gens = search_generators(g, &class_size);
    let cands: Vec<&[u32]> = gens
        .iter()
        .map(|&x| classes_h[&ig[x as usize]].as_slice())
        .collect();
    let mut search = Search {
        g,
        h,
        gens: &gens,
        cands: &cands,
        imgs: Vec::with_capacity(gens.len()),
        nodes: 0,
        budget,
        map: vec![u32::MAX; g.order()],
        used: BitSet::new(h.order()),
    };
    match search.run()? {
        true => Ok(GroupIsoOutcome::Isomorphic(GroupHom { images: search.map })),
        false => Ok(GroupIsoOutcome::NotIsomorphic),
    }
}

struct Search<'a> {
    g: &'a FiniteGroup,
    h: &'a FiniteGroup,
    gens: &'a [u32],
    cands: &'a [&'a [u32]],
    imgs: Vec<u32>,
    nodes: u64,
    budget: u64,
    map: Vec<u32>,
    used: BitSet,
}

impl Search<'_> {
    fn run(&mut self) -> Result<bool> {
        let depth = self.imgs.len();
        if depth == self.gens.len() {
            return Ok(self.extend() == Some(self.g.order()));
        }
        for &c in self.cands[depth] {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::SearchBudgetExceeded { budget: self.budget });
            }
            if self.imgs.contains(&c) {
                continue;
            }
            self.imgs.push(c);
            let ok = self.extend().is_some();
            if ok && self.run()? {
                return Ok(true);
            }
            self.imgs.pop();
        }
        Ok(false)
    }

    /// Extends the current generator assignment to the subgroup it
    /// generates; `None` when the assignment is not an injective
    /// homomorphism there.
    fn extend(&mut self) -> Option<usize> {
        let (g, h) = (self.g, self.h);
        let k = self.imgs.len();
        self.map.iter_mut().for_each(|v| *v = u32::MAX);
        self.used.clear();
        self.map[0] = 0;
        self.used.insert(0);
        let mut queue = VecDeque::from([0u32]);
        let mut size = 1;
        while let Some(x) = queue.pop_front() {
            let fx = self.map[x as usize];
            for i in 0..k {
                let y = g.mul(x, self.gens[i]) as usize;
                let v = h.mul(fx, self.imgs[i]);
                if self.map[y] == u32::MAX {
                    if !self.used.insert(v as usize) {
                        return None;
                    }
                    self.map[y] = v;
                    size += 1;
                    queue.push_back(y as u32);
                } else if self.map[y] != v {
                    return None;
                }
            }
        }
        Some(size)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{make_cyclic, make_direct_product, make_semidirect_product, Action};

    #[test]
    fn c6_is_c2_times_c3() {
        let c6 = make_cyclic(6).unwrap();
        let p = make_direct_product(&make_cyclic(2).unwrap(), &make_cyclic(3).unwrap()).unwrap();
        match group_isomorphism(&c6, &p, 1_000_000).unwrap() {
            GroupIsoOutcome::Isomorphic(f) => {
                assert!(f.is_homomorphism(&c6, &p));
                assert!(f.is_bijective(&p));
            }
            other => panic!("expected isomorphism, got {other:?}"),
        }
    }

    #[test]
    fn c4_not_v4() {
        let c4 = make_cyclic(4).unwrap();
        let v4 = make_direct_product(&make_cyclic(2).unwrap(), &make_cyclic(2).unwrap()).unwrap();
        assert_eq!(group_isomorphism(&c4, &v4, 1000).unwrap(), GroupIsoOutcome::NotIsomorphic);
    }

    #[test]
    fn dihedral_8_two_constructions() {
        let c4 = make_cyclic(4).unwrap();
        let c2 = make_cyclic(2).unwrap();
        let d8 = make_semidirect_product(
            &c4,
            &c2,
            &Action { n_gens: vec![1], h_gens: vec![1], images: vec![vec![3]] },
        )
        .unwrap();
        let a = crate::group::perm::parse_cycles(4, "(0 1 2 3)").unwrap();
        let b = crate::group::perm::parse_cycles(4, "(0 2)").unwrap();
        let (d8p, _) = crate::group::group_from_permutations(4, &[a, b], 100).unwrap();
        assert!(matches!(
            group_isomorphism(&d8, &d8p, 1_000_000).unwrap(),
            GroupIsoOutcome::Isomorphic(_)
        ));
    }
}
