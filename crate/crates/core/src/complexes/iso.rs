use std::collections::{BTreeMap, BTreeSet, HashMap};

use super::SimplicialComplex;
use crate::error::{Error, Result};
use crate::isomorph::{find_isomorphism, ColoredDigraph, IsoOutcome};
use crate::lattice::SubgroupLattice;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Refutation {
    VertexCount,
    MaxCardinality,
    FVector,
    OrderCensus,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ComplexIsoOutcome {
    /// `map[x]` is the image of vertex `x`.
    Found(Vec<u32>),
    /// Ruled out by an invariant before any search.
    Refuted(Refutation),
    /// Search completed without finding a map.
    Exhausted,
}

impl ComplexIsoOutcome {
    pub fn map(&self) -> Option<&[u32]> {
        match self {
            ComplexIsoOutcome::Found(m) => Some(m),
            _ => None,
        }
    }
}

fn refute(a: &SimplicialComplex, b: &SimplicialComplex) -> Option<Refutation> {
    if a.vertex_count() != b.vertex_count() {
        Some(Refutation::VertexCount)
    } else if a.max_cardinality() != b.max_cardinality() {
        Some(Refutation::MaxCardinality)
    } else if a.f_vector() != b.f_vector() {
        Some(Refutation::FVector)
    } else if a.order_census() != b.order_census() {
        // isomorphic complexes have isomorphic power graphs, which fix the
        // number of elements of each order
        Some(Refutation::OrderCensus)
    } else {
        None
    }
}

/// Vertex colours: whether the singleton is a face.
fn vertex_colors(c: &SimplicialComplex) -> Vec<u64> {
    (0..c.vertex_count() as u32)
        .map(|x| c.class_of(x).is_some() as u64)
        .collect()
}

/// 1-skeleton, or its complement when that has fewer edges.
fn skeleton_graph(c: &SimplicialComplex, complement: bool) -> ColoredDigraph {
    let n = c.vertex_count();
    let mut g = ColoredDigraph::new(vertex_colors(c));
    let rows = c.skeleton_rows();
    for x in 0..n {
        for y in x + 1..n {
            if rows[x].contains(y) != complement {
                g.add_edge(x as u32, y as u32, 0);
            }
        }
    }
    g
}

/// The complex modulo twins: vertices `u`, `v` are twins when swapping them
/// is an automorphism. Twin classes are canonical, so complexes are
/// isomorphic exactly when their quotients are (matching class sizes).
struct TwinQuotient {
    /// Elements of each twin class.
    members: Vec<Vec<u32>>,
    graph: ColoredDigraph,
}

fn twin_quotient(c: &SimplicialComplex) -> TwinQuotient {
    let classes = c.classes();
    let nc = classes.len();
    let mut incident: Vec<Vec<(usize, usize)>> = vec![Vec::new(); nc];
    for k in 1..=c.max_cardinality() {
        for (i, face) in c.class_faces(k).chunks_exact(k).enumerate() {
            for &x in face {
                incident[x as usize].push((k, i));
            }
        }
    }
    let face = |k: usize, i: usize| &c.class_faces(k)[i * k..(i + 1) * k];
    // number of element faces of each size through one element of the class
    let profile = |x: usize| -> Vec<u64> {
        let mut p = vec![0u64; c.max_cardinality()];
        for &(k, i) in &incident[x] {
            p[k - 1] += face(k, i)
                .iter()
                .filter(|&&y| y as usize != x)
                .map(|&y| classes[y as usize].len() as u64)
                .product::<u64>();
        }
        p
    };
    let swapped_in = |a: usize, b: usize| -> bool {
        let mut buf = Vec::new();
        incident[a].iter().all(|&(k, i)| {
            let f = face(k, i);
            if f.contains(&(b as u32)) {
                return true;
            }
            buf.clear();
            buf.extend(f.iter().map(|&y| if y as usize == a { b as u32 } else { y }));
            buf.sort_unstable();
            c.contains_class_face(&buf)
        })
    };
    let twins = |a: usize, b: usize| -> bool {
        let mut pair = [a as u32, b as u32];
        pair.sort_unstable();
        if c.contains_class_face(&pair) && (classes[a].len() > 1 || classes[b].len() > 1) {
            return false;
        }
        swapped_in(a, b) && swapped_in(b, a)
    };
    let mut buckets: HashMap<Vec<u64>, Vec<usize>> = HashMap::new();
    let mut tc_of = vec![usize::MAX; nc];
    let mut reps: Vec<usize> = Vec::new();
    for x in 0..nc {
        let bucket = buckets.entry(profile(x)).or_default();
        match bucket.iter().find(|&&t| twins(x, reps[t])) {
            Some(&t) => tc_of[x] = t,
            None => {
                tc_of[x] = reps.len();
                bucket.push(reps.len());
                reps.push(x);
            }
        }
    }
    let mut members = vec![Vec::new(); reps.len()];
    let mut clique = vec![false; reps.len()];
    for x in 0..nc {
        let t = tc_of[x];
        if x != reps[t] && classes[x].len() == 1 {
            let mut pair = [x as u32, reps[t] as u32];
            pair.sort_unstable();
            clique[t] |= c.contains_class_face(&pair);
        }
        members[t].extend_from_slice(&classes[x]);
    }
    let mut facets = BTreeSet::new();
    for f in c.class_facets() {
        let mut counts: BTreeMap<usize, u32> = BTreeMap::new();
        for &x in &f {
            *counts.entry(tc_of[x as usize]).or_default() += 1;
        }
        facets.insert(counts.into_iter().collect::<Vec<_>>());
    }
    let mut colors: Vec<u64> = members
        .iter()
        .zip(&clique)
        .map(|(m, &q)| (m.len() as u64) << 1 | q as u64)
        .collect();
    let base = colors.len() as u32;
    colors.extend(facets.iter().map(|f| (1 << 48) | f.iter().map(|&(_, n)| n as u64).sum::<u64>()));
    let mut graph = ColoredDigraph::new(colors);
    for (i, f) in facets.iter().enumerate() {
        for &(t, n) in f {
            graph.add_arc(t as u32, base + i as u32, n);
        }
    }
    TwinQuotient { members, graph }
}

fn lift(a: &TwinQuotient, b: &TwinQuotient, m: &[u32], n: usize) -> Vec<u32> {
    let mut map = vec![0u32; n];
    for (t, xs) in a.members.iter().enumerate() {
        for (x, y) in xs.iter().zip(&b.members[m[t] as usize]) {
            map[*x as usize] = *y;
        }
    }
    map
}

/// Searches for a vertex bijection carrying the faces of `a` onto those of
/// `b`. Complexes with faces of size at most 2 are compared as graphs;
/// larger ones through the facets of their twin quotients.
pub fn complex_isomorphism(a: &SimplicialComplex, b: &SimplicialComplex, budget: u64) -> Result<ComplexIsoOutcome> {
    if !a.is_complete() || !b.is_complete() {
        return Err(Error::InvalidInput("complex enumeration was truncated".into()));
    }
    if let Some(r) = refute(a, b) {
        return Ok(ComplexIsoOutcome::Refuted(r));
    }
    let n = a.vertex_count();
    let found = if a.max_cardinality() <= 2 {
        let pairs = (n * n.saturating_sub(1) / 2) as u64;
        let complement = a.f_vector().get(2) * 2 > pairs;
        let (ga, gb) = (skeleton_graph(a, complement), skeleton_graph(b, complement));
        find_isomorphism(&ga, &gb, budget)?
    } else {
        let (qa, qb) = (twin_quotient(a), twin_quotient(b));
        match find_isomorphism(&qa.graph, &qb.graph, budget)? {
            IsoOutcome::Found(m) => IsoOutcome::Found(lift(&qa, &qb, &m, n)),
            IsoOutcome::Exhausted => IsoOutcome::Exhausted,
        }
    };
    match found {
        IsoOutcome::Found(m) => {
            let map = m[..n].to_vec();
            if !a.is_isomorphism(b, &map) {
                return Err(Error::InvalidInput("graph isomorphism did not carry faces to faces".into()));
            }
            Ok(ComplexIsoOutcome::Found(map))
        }
        IsoOutcome::Exhausted => Ok(ComplexIsoOutcome::Exhausted),
    }
}

/// A vertex bijection compatible with a lattice map `alpha`: each element
/// goes to a generator of the image of its cyclic subgroup. None when
/// `alpha` does not send cyclic subgroups to cyclic subgroups of equal order.
pub fn induced_map(la: &SubgroupLattice, lb: &SubgroupLattice, alpha: &[u32]) -> Option<Vec<u32>> {
    let (ga, gb) = (la.group(), lb.group());
    if ga.order() != gb.order() || alpha.len() != la.len() {
        return None;
    }
    let gens = |l: &SubgroupLattice, c: u32| -> Vec<u32> {
        l.subgroup(c).elements().iter().copied().filter(|&x| l.cyclic_of(x) == c).collect()
    };
    let mut map = vec![u32::MAX; ga.order()];
    for &c in la.cyclics() {
        let t = alpha[c as usize];
        if !lb.is_cyclic(t) || lb.subgroup(t).order() != la.subgroup(c).order() {
            return None;
        }
        let (src, dst) = (gens(la, c), gens(lb, t));
        if src.len() != dst.len() {
            return None;
        }
        for (x, y) in src.into_iter().zip(dst) {
            map[x as usize] = y;
        }
    }
    Some(map)
}

impl SimplicialComplex {
    /// True when `map` is a bijection of vertices sending every face of
    /// `self` to a face of `other` and both have the same face counts.
    pub fn is_isomorphism(&self, other: &SimplicialComplex, map: &[u32]) -> bool {
        let n = self.vertex_count();
        if other.vertex_count() != n || map.len() != n || self.f_vector() != other.f_vector() {
            return false;
        }
        let mut hit = vec![false; n];
        for &y in map {
            if y as usize >= n || std::mem::replace(&mut hit[y as usize], true) {
                return false;
            }
        }
        if (0..n as u32).any(|x| self.class_of(x).is_some() != other.class_of(map[x as usize]).is_some()) {
            return false;
        }
        let mut ok = true;
        let mut buf = Vec::new();
        for k in 2..=self.max_cardinality() {
            self.for_each_face(k, |f| {
                if ok {
                    buf.clear();
                    buf.extend(f.iter().map(|&x| map[x as usize]));
                    ok = other.contains_face(&buf);
                }
            });
            if !ok {
                return false;
            }
        }
        true
    }
}
