//! Independence and strong-independence complexes.
//!
//! Whether a set of elements is independent only depends on the cyclic
//! subgroups they generate, and two elements generating the same cyclic
//! subgroup never share a face. Faces are therefore enumerated and stored
//! over cyclic subgroups ("classes"); a class face `{C_1, .., C_k}` stands
//! for the `φ(|C_1|)···φ(|C_k|)` element faces obtained by picking one
//! generator of each `C_i`.

mod iso;

use std::collections::BTreeMap;
use std::fmt;
use std::io::{self, Write};
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::lattice::{min_generators_by_search, Subgroup, SubgroupLattice};

pub use iso::{complex_isomorphism, induced_map, ComplexIsoOutcome, Refutation};

pub const DEFAULT_FACE_BUDGET: u64 = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ComplexKind {
    Independence,
    Strong,
}

impl fmt::Display for ComplexKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ComplexKind::Independence => "independence",
            ComplexKind::Strong => "strong",
        })
    }
}

#[derive(Clone, Copy, Debug)]
pub struct ComplexOptions {
    /// Stop after faces of this cardinality.
    pub max_cardinality: Option<usize>,
    /// Maximum number of (element) faces.
    pub face_budget: u64,
}

impl Default for ComplexOptions {
    fn default() -> Self {
        Self {
            max_cardinality: None,
            face_budget: DEFAULT_FACE_BUDGET,
        }
    }
}

/// Face counts by cardinality; `counts[k - 1]` is the number of k-faces.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct FVector(pub Vec<u64>);

impl FVector {
    pub fn get(&self, k: usize) -> u64 {
        if k == 0 {
            return 0;
        }
        self.0.get(k - 1).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.0.iter().sum()
    }
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

#[derive(Clone, Debug)]
pub struct SimplicialComplex {
    kind: ComplexKind,
    n: usize,
    group_hash: String,
    census: BTreeMap<u32, usize>,
    /// Generators of each class; classes sorted by (order, lattice index).
    classes: Vec<Vec<u32>>,
    /// Class of each element; `u32::MAX` for the identity.
    class_of: Vec<u32>,
    /// `levels[k - 1]`: k-faces over classes, flat, lexicographically sorted.
    levels: Vec<Vec<u32>>,
    f: FVector,
    complete: bool,
}

struct Level {
    k: usize,
    faces: Vec<u32>,
    joins: Vec<u32>,
    /// Per face and position, the join of the other members.
    loo: Vec<u32>,
}

impl Level {
    fn len(&self) -> usize {
        self.joins.len()
    }
}

/// Shared enumeration state over the classes of one lattice.
struct Enumerator<'a> {
    lat: &'a SubgroupLattice,
    kind: ComplexKind,
    /// Lattice index of each class.
    class_sub: Vec<u32>,
    /// A generator of each class.
    class_rep: Vec<u32>,
    weight: Vec<u64>,
}

impl<'a> Enumerator<'a> {
    fn new(lat: &'a SubgroupLattice, kind: ComplexKind) -> (Self, Vec<Vec<u32>>) {
        let g = lat.group();
        let mut subs: Vec<u32> = lat.cyclics().iter().copied().filter(|&c| c != lat.bottom()).collect();
        subs.sort_by_key(|&c| (lat.subgroup(c).order(), c));
        let mut pos = vec![u32::MAX; lat.len()];
        for (i, &c) in subs.iter().enumerate() {
            pos[c as usize] = i as u32;
        }
        let mut classes = vec![Vec::new(); subs.len()];
        for x in g.elements().skip(1) {
            classes[pos[lat.cyclic_of(x) as usize] as usize].push(x);
        }
        let e = Self {
            lat,
            kind,
            class_rep: classes.iter().map(|c| c[0]).collect(),
            weight: classes.iter().map(|c| c.len() as u64).collect(),
            class_sub: subs,
        };
        (e, classes)
    }

    fn first_level(&self) -> Level {
        let n = self.class_sub.len();
        Level {
            k: 1,
            faces: (0..n as u32).collect(),
            joins: self.class_sub.clone(),
            loo: vec![self.lat.bottom(); n],
        }
    }

    /// Extensions of face `i` of `level` by higher classes, appended to `out`.
    /// Stops early once `stop` is raised.
    fn extend_face(&self, level: &Level, i: usize, out: &mut Level, stop: &AtomicBool) -> u64 {
        let k = level.k;
        let face = &level.faces[i * k..(i + 1) * k];
        let loo = &level.loo[i * k..(i + 1) * k];
        let join = level.joins[i];
        let lat = self.lat;
        let mut weight = 0;
        let mut new_loo = vec![0u32; k];
        'next: for c in face[k - 1] as usize + 1..self.class_sub.len() {
            if stop.load(Ordering::Relaxed) {
                break;
            }
            let cs = self.class_sub[c];
            if lat.leq(cs, join) {
                continue;
            }
            let rep = self.class_rep[c];
            for j in 0..k {
                let l = lat.join_element(loo[j], rep);
                if lat.leq(self.class_sub[face[j] as usize], l) {
                    continue 'next;
                }
                new_loo[j] = l;
            }
            let nj = lat.join_element(join, rep);
            if self.kind == ComplexKind::Strong && (lat.min_d_above(nj) as usize) < k + 1 {
                continue;
            }
            out.faces.extend_from_slice(face);
            out.faces.push(c as u32);
            out.joins.push(nj);
            out.loo.extend_from_slice(&new_loo);
            out.loo.push(join);
            weight += face.iter().map(|&f| self.weight[f as usize]).product::<u64>() * self.weight[c];
        }
        weight
    }

    /// Next level in lexicographic order; `counter` accumulates element
    /// faces and aborts past `budget`.
    fn next_level(&self, level: &Level, counter: &AtomicU64, budget: u64) -> Result<Level> {
        let stop = AtomicBool::new(false);
        let chunk = 256;
        let parts: Vec<Level> = (0..level.len().div_ceil(chunk))
            .into_par_iter()
            .map(|b| {
                let mut out = Level {
                    k: level.k + 1,
                    faces: Vec::new(),
                    joins: Vec::new(),
                    loo: Vec::new(),
                };
                for i in b * chunk..((b + 1) * chunk).min(level.len()) {
                    let w = self.extend_face(level, i, &mut out, &stop);
                    if counter.fetch_add(w, Ordering::Relaxed).saturating_add(w) > budget {
                        stop.store(true, Ordering::Relaxed);
                    }
                    if stop.load(Ordering::Relaxed) {
                        break;
                    }
                }
                out
            })
            .collect();
        if stop.load(Ordering::Relaxed) {
            return Err(Error::FaceBudgetExceeded { budget });
        }
        let mut out = Level {
            k: level.k + 1,
            faces: Vec::new(),
            joins: Vec::new(),
            loo: Vec::new(),
        };
        for p in parts {
            out.faces.extend(p.faces);
            out.joins.extend(p.joins);
            out.loo.extend(p.loo);
        }
        Ok(out)
    }

    fn has_extension(&self, level: &Level) -> bool {
        let stop = AtomicBool::new(false);
        (0..level.len()).into_par_iter().any(|i| {
            let mut out = Level {
                k: level.k + 1,
                faces: Vec::new(),
                joins: Vec::new(),
                loo: Vec::new(),
            };
            self.extend_face(level, i, &mut out, &stop);
            out.len() > 0
        })
    }
}

impl SimplicialComplex {
    pub fn build(lat: &SubgroupLattice, kind: ComplexKind, opts: ComplexOptions) -> Result<Self> {
        let g = lat.group();
        let (en, classes) = Enumerator::new(lat, kind);
        let mut class_of = vec![u32::MAX; g.order()];
        for (i, c) in classes.iter().enumerate() {
            for &x in c {
                class_of[x as usize] = i as u32;
            }
        }
        let counter = AtomicU64::new(0);
        let mut levels = Vec::new();
        let mut f = Vec::new();
        let mut complete = true;
        if !classes.is_empty() {
            let mut level = en.first_level();
            counter.fetch_add(g.order() as u64 - 1, Ordering::Relaxed);
            loop {
                let w = counter.load(Ordering::Relaxed);
                if w > opts.face_budget {
                    return Err(Error::FaceBudgetExceeded { budget: opts.face_budget });
                }
                f.push(w - f.iter().sum::<u64>());
                if opts.max_cardinality.is_some_and(|m| level.k >= m) {
                    complete = !en.has_extension(&level);
                    levels.push(level.faces);
                    break;
                }
                let next = en.next_level(&level, &counter, opts.face_budget)?;
                levels.push(std::mem::take(&mut level.faces));
                if next.len() == 0 {
                    break;
                }
                level = next;
            }
        }
        Ok(Self {
            kind,
            n: g.order(),
            group_hash: g.fingerprint(),
            census: g.order_statistics(),
            classes,
            class_of,
            levels,
            f: FVector(f),
            complete,
        })
    }

    pub fn kind(&self) -> ComplexKind {
        self.kind
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn group_hash(&self) -> &str {
        &self.group_hash
    }

    /// Element-order census of the underlying group.
    pub fn order_census(&self) -> &BTreeMap<u32, usize> {
        &self.census
    }

    pub fn f_vector(&self) -> &FVector {
        &self.f
    }

    pub fn max_cardinality(&self) -> usize {
        self.f.0.len()
    }

    /// False when enumeration stopped at a cardinality cap while larger
    /// faces exist.
    pub fn is_complete(&self) -> bool {
        self.complete
    }

    /// Sets of elements with the same cyclic subgroup, in enumeration order.
    pub fn classes(&self) -> &[Vec<u32>] {
        &self.classes
    }

    pub fn class_of(&self, x: u32) -> Option<u32> {
        let c = self.class_of[x as usize];
        (c != u32::MAX).then_some(c)
    }

    /// Class-level k-faces as a flat array of k-tuples.
    pub fn class_faces(&self, k: usize) -> &[u32] {
        if k == 0 || k > self.levels.len() {
            return &[];
        }
        &self.levels[k - 1]
    }

    fn class_face_position(&self, face: &[u32]) -> Option<usize> {
        let k = face.len();
        let flat = self.class_faces(k);
        let count = flat.len() / k.max(1);
        let (mut lo, mut hi) = (0, count);
        while lo < hi {
            let mid = (lo + hi) / 2;
            match flat[mid * k..(mid + 1) * k].cmp(face) {
                std::cmp::Ordering::Less => lo = mid + 1,
                std::cmp::Ordering::Greater => hi = mid,
                std::cmp::Ordering::Equal => return Some(mid),
            }
        }
        None
    }

    pub fn contains_class_face(&self, face: &[u32]) -> bool {
        !face.is_empty() && self.class_face_position(face).is_some()
    }

    /// True when the element set (any order, no repeats) is a face.
    pub fn contains_face(&self, xs: &[u32]) -> bool {
        let mut cs = Vec::with_capacity(xs.len());
        for &x in xs {
            match self.class_of.get(x as usize) {
                Some(&c) if c != u32::MAX => cs.push(c),
                _ => return false,
            }
        }
        cs.sort_unstable();
        if cs.windows(2).any(|w| w[0] == w[1]) {
            return false;
        }
        self.contains_class_face(&cs)
    }

    /// Calls `f` on every element k-face, each sorted ascending.
    pub fn for_each_face(&self, k: usize, mut f: impl FnMut(&[u32])) {
        let flat = self.class_faces(k);
        let mut pick = vec![0usize; k];
        let mut buf = vec![0u32; k];
        for face in flat.chunks_exact(k.max(1)) {
            pick.iter_mut().for_each(|p| *p = 0);
            loop {
                for j in 0..k {
                    buf[j] = self.classes[face[j] as usize][pick[j]];
                }
                let mut sorted = buf.clone();
                sorted.sort_unstable();
                f(&sorted);
                let mut done = true;
                let mut j = k;
                while j > 0 {
                    j -= 1;
                    pick[j] += 1;
                    if pick[j] < self.classes[face[j] as usize].len() {
                        done = false;
                        break;
                    }
                    pick[j] = 0;
                }
                if done {
                    break;
                }
            }
        }
    }

    pub fn faces(&self, k: usize) -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        self.for_each_face(k, |f| out.push(f.to_vec()));
        out.sort();
        out
    }

    /// Adjacency rows of the 1-skeleton on all n vertices.
    pub fn skeleton_rows(&self) -> Vec<crate::bitset::BitSet> {
        let mut rows = vec![crate::bitset::BitSet::new(self.n); self.n];
        for pair in self.class_faces(2).chunks_exact(2) {
            for &x in &self.classes[pair[0] as usize] {
                for &y in &self.classes[pair[1] as usize] {
                    rows[x as usize].insert(y as usize);
                    rows[y as usize].insert(x as usize);
                }
            }
        }
        rows
    }

    /// Faces that lie in no larger face, as class-level tuples.
    pub fn class_facets(&self) -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        for k in 1..=self.levels.len() {
            let flat = self.class_faces(k);
            let mut covered = vec![false; flat.len() / k];
            let mut sub = Vec::with_capacity(k);
            for sup in self.class_faces(k + 1).chunks_exact(k + 1) {
                for skip in 0..=k {
                    sub.clear();
                    sub.extend(sup.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &c)| c));
                    if let Some(p) = self.class_face_position(&sub) {
                        covered[p] = true;
                    }
                }
            }
            for (i, face) in flat.chunks_exact(k).enumerate() {
                if !covered[i] {
                    out.push(face.to_vec());
                }
            }
        }
        out
    }

    /// One face per line, sorted indices, after a `#` header.
    pub fn write_faces<W: Write>(&self, mut w: W) -> io::Result<()> {
        writeln!(
            w,
            "# group {} kind {} f_vector {}{}",
            self.group_hash,
            self.kind,
            self.f,
            if self.complete { "" } else { " truncated" }
        )?;
        for k in 1..=self.max_cardinality() {
            let mut line = String::new();
            for face in self.faces(k) {
                line.clear();
                for (i, x) in face.iter().enumerate() {
                    if i > 0 {
                        line.push(' ');
                    }
                    line.push_str(&x.to_string());
                }
                writeln!(w, "{line}")?;
            }
        }
        Ok(())
    }

    pub fn json_report(&self) -> serde_json::Value {
        serde_json::json!({
            "group": self.group_hash,
            "kind": self.kind,
            "f_vector": self.f.0,
            "max_cardinality": self.max_cardinality(),
            "complete": self.complete,
        })
    }
}

pub fn independence_complex(lat: &SubgroupLattice) -> Result<SimplicialComplex> {
    SimplicialComplex::build(lat, ComplexKind::Independence, ComplexOptions::default())
}

pub fn strong_independence_complex(lat: &SubgroupLattice) -> Result<SimplicialComplex> {
    SimplicialComplex::build(lat, ComplexKind::Strong, ComplexOptions::default())
}

/// No element of `xs` lies in the subgroup generated by the others.
pub fn is_independent(g: &FiniteGroup, xs: &[u32]) -> bool {
    (0..xs.len()).all(|i| {
        let rest: Vec<u32> = xs.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &x)| x).collect();
        !g.generated_subgroup(&rest).contains(xs[i])
    })
}

/// Independent, and every subgroup containing `xs` needs at least |xs|
/// generators.
pub fn is_strongly_independent(lat: &SubgroupLattice, xs: &[u32]) -> bool {
    !xs.is_empty()
        && is_independent(lat.group(), xs)
        && lat.min_d_above(lat.generated_by(xs)) as usize >= xs.len()
}

/// Strong independence without a lattice: walks the overgroups of ⟨xs⟩ by
/// adding one element at a time.
pub fn is_strongly_independent_direct(g: &FiniteGroup, xs: &[u32]) -> bool {
    if xs.is_empty() || !is_independent(g, xs) {
        return false;
    }
    let start = g.generated_subgroup(xs);
    let mut seen = std::collections::HashSet::new();
    seen.insert(start.members().clone());
    let mut stack = vec![start];
    while let Some(h) = stack.pop() {
        if (min_generators_by_search(g, &h) as usize) < xs.len() {
            return false;
        }
        for x in g.elements() {
            if h.contains(x) {
                continue;
            }
            let mut k: Subgroup = h.clone();
            g.extend_subgroup(&mut k, x);
            if seen.insert(k.members().clone()) {
                stack.push(k);
            }
        }
    }
    true
}

/// m(H) for every subgroup H: the largest size of an independent generating
/// set. Equal to d for p-groups; otherwise read off the enumeration of
/// independent sets, each of which generates the subgroup recorded with it.
pub fn max_independent_generating(lat: &SubgroupLattice, budget: u64) -> Result<Vec<u32>> {
    if lat.group().prime_power_base().is_some() || lat.group().order() == 1 {
        return Ok(lat.d_values().to_vec());
    }
    let (en, _) = Enumerator::new(lat, ComplexKind::Independence);
    let mut best = vec![0u32; lat.len()];
    let mut level = en.first_level();
    let counter = AtomicU64::new(0);
    loop {
        for &j in &level.joins {
            let b = &mut best[j as usize];
            *b = (*b).max(level.k as u32);
        }
        counter.store(0, Ordering::Relaxed);
        let next = en.next_level(&level, &counter, u64::MAX)?;
        if next.len() as u64 > budget {
            return Err(Error::FaceBudgetExceeded { budget });
        }
        if next.len() == 0 {
            break;
        }
        level = next;
    }
    Ok(best)
}

/// An independent set of `size` elements generating subgroup `h`, if any.
pub fn independent_generating_set(lat: &SubgroupLattice, h: u32, size: usize) -> Option<Vec<u32>> {
    let classes: Vec<(u32, u32)> = lat
        .cyclics()
        .iter()
        .filter(|&&c| c != lat.bottom() && lat.leq(c, h))
        .map(|&c| {
            let rep = lat.subgroup(c).elements().iter().copied().find(|&x| lat.cyclic_of(x) == c).unwrap();
            (c, rep)
        })
        .collect();
    fn dfs(
        lat: &SubgroupLattice,
        classes: &[(u32, u32)],
        start: usize,
        chosen: &mut Vec<(u32, u32, u32)>,
        join: u32,
        target: (u32, usize),
    ) -> bool {
        if chosen.len() == target.1 {
            return join == target.0;
        }
        for i in start..classes.len() {
            let (c, rep) = classes[i];
            if lat.leq(c, join) {
                continue;
            }
            let saved: Vec<(u32, u32, u32)> = chosen.clone();
            let mut ok = true;
            for e in chosen.iter_mut() {
                e.2 = lat.join_element(e.2, rep);
                if lat.leq(e.0, e.2) {
                    ok = false;
                    break;
                }
            }
            if ok {
                chosen.push((c, rep, join));
                if dfs(lat, classes, i + 1, chosen, lat.join_element(join, rep), target) {
                    return true;
                }
            }
            *chosen = saved;
        }
        false
    }
    let mut chosen = Vec::new();
    if size == 0 {
        return (h == lat.bottom()).then(Vec::new);
    }
    dfs(lat, &classes, 0, &mut chosen, lat.bottom(), (h, size)).then(|| chosen.iter().map(|e| e.1).collect())
}

/// ℓ_r = Σ_{d(H) = r} (|H| / p^r)^r for r = 1..rank.
pub fn ell_sequence(lat: &SubgroupLattice, p: u32) -> Result<Vec<u128>> {
    let g = lat.group();
    if g.order() > 1 && g.prime_power_base() != Some(p) {
        return Err(Error::NotAPGroup { p });
    }
    let rank = lat.rank() as usize;
    let mut ell = vec![0u128; rank];
    for h in lat.indices() {
        let r = lat.d(h) as usize;
        if r == 0 {
            continue;
        }
        let q = lat.subgroup(h).order() as u128 / (p as u128).pow(r as u32);
        ell[r - 1] += q.pow(r as u32);
    }
    Ok(ell)
}

/// Closed-form (f_1, f_2) of the strong complex of an order-p⁵ group of
/// exponent p: p⁵ − 1 and C(p⁵−1, 2) − ((p⁵−1)/(p−1))·C(p−1, 2).
pub fn exponent_p_counts(p: u64) -> Result<(u128, u128)> {
    if !crate::group::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p < 5 {
        return Err(Error::InvalidInput(format!("prime {p} is below 5")));
    }
    let p = p as u128;
    let f1 = p.pow(5) - 1;
    let choose2 = |m: u128| m * m.saturating_sub(1) / 2;
    Ok((f1, choose2(f1) - f1 / (p - 1) * choose2(p - 1)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::build_str;
    use crate::lattice::enumerate_subgroups;
    use std::sync::Arc;

    fn lattice(spec: &str) -> SubgroupLattice {
        enumerate_subgroups(&Arc::new(build_str(spec).unwrap().group))
    }

    #[test]
    fn klein_four() {
        let l = lattice("C(2) x C(2)");
        let s = independence_complex(&l).unwrap();
        assert_eq!(s.f_vector().0, vec![3, 3]);
        let t = strong_independence_complex(&l).unwrap();
        assert_eq!(t.f_vector().0, vec![3, 3]);
    }

    #[test]
    fn cyclic_six_strong_drops_pair() {
        let l = lattice("C(6)");
        let s = independence_complex(&l).unwrap();
        let t = strong_independence_complex(&l).unwrap();
        assert_eq!(s.f_vector().get(2), 2);
        assert_eq!(t.f_vector().get(2), 0);
        assert_eq!(max_independent_generating(&l, 1000).unwrap()[l.top() as usize], 2);
    }

    #[test]
    fn cyclic_prime_and_trivial() {
        let l = lattice("C(7)");
        assert_eq!(independence_complex(&l).unwrap().f_vector().0, vec![6]);
        let l = lattice("C(1)");
        assert!(strong_independence_complex(&l).unwrap().f_vector().0.is_empty());
    }

    #[test]
    fn faces_expand_consistently() {
        let l = lattice("S3");
        let s = independence_complex(&l).unwrap();
        for k in 1..=s.max_cardinality() {
            let faces = s.faces(k);
            assert_eq!(faces.len() as u64, s.f_vector().get(k));
            for f in &faces {
                assert!(s.contains_face(f));
                assert!(is_independent(l.group(), f));
            }
        }
        assert!(!s.contains_face(&[0]));
    }

    #[test]
    fn ell_values() {
        assert_eq!(ell_sequence(&lattice("C(4)"), 2).unwrap(), vec![3]);
        assert_eq!(ell_sequence(&lattice("C(2) x C(2)"), 2).unwrap(), vec![3, 1]);
        assert!(ell_sequence(&lattice("C(1)"), 2).unwrap().is_empty());
        assert!(matches!(ell_sequence(&lattice("C(6)"), 2), Err(Error::NotAPGroup { .. })));
    }

    #[test]
    fn closed_form_counts() {
        assert_eq!(exponent_p_counts(5).unwrap(), (3124, 4873440));
        assert!(matches!(exponent_p_counts(6), Err(Error::NotPrime(6))));
    }

    #[test]
    fn budget_and_cap() {
        let l = lattice("C(2) x C(2) x C(2)");
        let err = SimplicialComplex::build(
            &l,
            ComplexKind::Independence,
            ComplexOptions {
                max_cardinality: None,
                face_budget: 10,
            },
        );
        assert!(matches!(err, Err(Error::FaceBudgetExceeded { budget: 10 })));
        let capped = SimplicialComplex::build(
            &l,
            ComplexKind::Independence,
            ComplexOptions {
                max_cardinality: Some(2),
                face_budget: 1000,
            },
        )
        .unwrap();
        assert!(!capped.is_complete());
        assert_eq!(capped.f_vector().0, vec![7, 21]);
    }
}
