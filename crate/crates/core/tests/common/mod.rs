//! Brute-force references that only touch the multiplication table. Subsets
//! are bitmasks, so these apply to groups of order at most 32.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use grpx::group::FiniteGroup;

pub type Mask = u32;

pub fn bits(m: Mask) -> impl Iterator<Item = u32> {
    (0..32).filter(move |i| m >> i & 1 == 1)
}

pub fn mask_of(xs: impl IntoIterator<Item = u32>) -> Mask {
    xs.into_iter().fold(0, |m, x| m | 1 << x)
}

/// Smallest set containing the identity and `xs` closed under products.
pub fn closure(g: &FiniteGroup, xs: Mask) -> Mask {
    let mut s = xs | 1;
    loop {
        let mut t = s;
        for a in bits(s) {
            for b in bits(s) {
                t |= 1 << g.mul(a, b);
            }
        }
        if t == s {
            return s;
        }
        s = t;
    }
}

fn is_closed(g: &FiniteGroup, s: Mask) -> bool {
    bits(s).all(|a| bits(s).all(|b| s >> g.mul(a, b) & 1 == 1))
}

/// Every subset containing the identity that is closed under the product.
pub fn all_subgroups(g: &FiniteGroup) -> BTreeSet<Mask> {
    let n = g.order();
    assert!(n <= 32);
    let rest = (n - 1) as u32;
    (0u64..1 << rest)
        .map(|r| ((r as Mask) << 1) | 1)
        .filter(|&s| is_closed(g, s))
        .collect()
}

fn subsets_of_size(elems: &[u32], k: usize, f: &mut impl FnMut(Mask) -> bool) -> bool {
    fn go(elems: &[u32], k: usize, start: usize, cur: Mask, f: &mut impl FnMut(Mask) -> bool) -> bool {
        if k == 0 {
            return f(cur);
        }
        (start..elems.len()).any(|i| go(elems, k - 1, i + 1, cur | 1 << elems[i], f))
    }
    go(elems, k, 0, 0, f)
}

/// Fewest elements generating `h`, trying subsets by increasing size.
pub fn min_generators(g: &FiniteGroup, h: Mask) -> u32 {
    let elems: Vec<u32> = bits(h).collect();
    (0..=elems.len())
        .find(|&k| subsets_of_size(&elems, k, &mut |s| closure(g, s) == h))
        .unwrap() as u32
}

pub fn is_independent(g: &FiniteGroup, x: Mask) -> bool {
    bits(x).all(|y| closure(g, x & !(1 << y)) >> y & 1 == 0)
}

/// Every independent set, found by extending independent sets with larger
/// elements; subsets of independent sets are independent, so nothing is
/// missed.
pub fn all_independent_sets(g: &FiniteGroup) -> Vec<Mask> {
    fn go(g: &FiniteGroup, cur: Mask, next: u32, out: &mut Vec<Mask>) {
        for y in next..g.order() as u32 {
            let x = cur | 1 << y;
            if is_independent(g, x) {
                out.push(x);
                go(g, x, y + 1, out);
            }
        }
    }
    let mut out = Vec::new();
    go(g, 0, 0, &mut out);
    out
}

pub struct Oracle {
    pub subgroups: BTreeSet<Mask>,
    pub d: BTreeMap<Mask, u32>,
    pub m: BTreeMap<Mask, u32>,
    pub independent: Vec<Mask>,
}

impl Oracle {
    pub fn new(g: &FiniteGroup) -> Self {
        let subgroups = all_subgroups(g);
        let d = subgroups.iter().map(|&h| (h, min_generators(g, h))).collect();
        let independent = all_independent_sets(g);
        let mut m: BTreeMap<Mask, u32> = subgroups.iter().map(|&h| (h, 0)).collect();
        for &x in &independent {
            let e = m.get_mut(&closure(g, x)).unwrap();
            *e = (*e).max(x.count_ones());
        }
        Self { subgroups, d, m, independent }
    }

    /// Every subgroup containing `x` needs at least |x| generators.
    pub fn is_strongly_independent(&self, g: &FiniteGroup, x: Mask) -> bool {
        is_independent(g, x)
            && self
                .subgroups
                .iter()
                .filter(|&&h| h & x == x)
                .all(|h| self.d[h] >= x.count_ones())
    }
}

/// Returns the first disagreement between the library and the oracles, if
/// any.
pub fn oracle_mismatch(g: &std::sync::Arc<FiniteGroup>) -> Option<String> {
    use grpx::complexes::{independence_complex, strong_independence_complex};
    use grpx::lattice::enumerate_subgroups;

    let o = Oracle::new(g);
    let lat = enumerate_subgroups(g);
    let listed: BTreeSet<Mask> = lat.subgroups().iter().map(|h| mask_of(h.elements().iter().copied())).collect();
    if listed != o.subgroups || lat.len() != o.subgroups.len() {
        return Some(format!("subgroups: {} listed, {} expected", lat.len(), o.subgroups.len()));
    }
    let m = grpx::complexes::max_independent_generating(&lat, u64::MAX).ok()?;
    for i in lat.indices() {
        let h = mask_of(lat.subgroup(i).elements().iter().copied());
        if lat.d(i) != o.d[&h] {
            return Some(format!("d of {h:#x}: {} vs {}", lat.d(i), o.d[&h]));
        }
        if m[i as usize] != o.m[&h] {
            return Some(format!("m of {h:#x}: {} vs {}", m[i as usize], o.m[&h]));
        }
    }
    let sigma = independence_complex(&lat).ok()?;
    let tilde = strong_independence_complex(&lat).ok()?;
    let faces = |c: &grpx::complexes::SimplicialComplex| -> BTreeSet<Mask> {
        (1..=c.max_cardinality()).flat_map(|k| c.faces(k)).map(mask_of).collect()
    };
    let strong: BTreeSet<Mask> =
        o.independent.iter().copied().filter(|&x| o.is_strongly_independent(g, x)).collect();
    let independent: BTreeSet<Mask> = o.independent.iter().copied().filter(|&x| x != 1).collect();
    if faces(&sigma) != independent {
        return Some("independence complex faces".into());
    }
    if faces(&tilde) != strong {
        return Some("strong independence complex faces".into());
    }
    // the membership predicates on every set of up to three elements
    let n = g.order() as u32;
    let mut sets: Vec<Vec<u32>> = (0..n).map(|a| vec![a]).collect();
    for a in 0..n {
        for b in a + 1..n {
            sets.push(vec![a, b]);
            for c in b + 1..n {
                sets.push(vec![a, b, c]);
            }
        }
    }
    for xs in sets {
        let x = mask_of(xs.iter().copied());
        let ind = is_independent(g, x);
        if grpx::complexes::is_independent(g, &xs) != ind {
            return Some(format!("is_independent {xs:?}"));
        }
        let st = o.is_strongly_independent(g, x);
        if grpx::complexes::is_strongly_independent(&lat, &xs) != st
            || grpx::complexes::is_strongly_independent_direct(g, &xs) != st
        {
            return Some(format!("is_strongly_independent {xs:?}"));
        }
    }
    None
}

pub fn small_corpus() -> Vec<(&'static str, std::sync::Arc<FiniteGroup>)> {
    grpx::verify::corpus::CORPUS
        .iter()
        .filter(|e| e.order <= 24)
        .map(|e| (e.key, std::sync::Arc::new(e.build().unwrap().group)))
        .collect()
}
