//! Power graph, directed power graph and enhanced power graph of a group,
//! the N-class / C-class partition, and graph isomorphism.

use std::collections::HashMap;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::bitset::BitSet;
use crate::complexes::{ComplexKind, ComplexOptions, SimplicialComplex};
use crate::error::Result;
use crate::group::{factorize, FiniteGroup};
use crate::isomorph::{find_isomorphism, ColoredDigraph, IsoOutcome};
use crate::lattice::SubgroupLattice;

/// Undirected simple graph on `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    rows: Vec<BitSet>,
    /// Element orders when the graph was built from a group.
    orders: Option<Vec<u32>>,
}

/// Directed graph on `0..n` without loops.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiGraph {
    out: Vec<BitSet>,
    orders: Option<Vec<u32>>,
}

impl Graph {
    pub fn from_rows(rows: Vec<BitSet>) -> Self {
        Self { rows, orders: None }
    }

    pub fn vertex_count(&self) -> usize {
        self.rows.len()
    }

    pub fn row(&self, x: u32) -> &BitSet {
        &self.rows[x as usize]
    }

    pub fn rows(&self) -> &[BitSet] {
        &self.rows
    }

    pub fn adjacent(&self, x: u32, y: u32) -> bool {
        self.rows[x as usize].contains(y as usize)
    }

    pub fn edges(&self) -> Vec<(u32, u32)> {
        let mut e = Vec::new();
        for (x, r) in self.rows.iter().enumerate() {
            e.extend(r.iter().filter(|&y| y > x).map(|y| (x as u32, y as u32)));
        }
        e
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(BitSet::len).sum::<usize>() / 2
    }

    /// Complement on the same vertex set.
    pub fn complement(&self) -> Graph {
        let rows = self
            .rows
            .iter()
            .enumerate()
            .map(|(x, r)| {
                let mut c = r.complement();
                c.remove(x);
                c
            })
            .collect();
        Graph { rows, orders: self.orders.clone() }
    }

    fn digraph(&self) -> ColoredDigraph {
        let mut g = ColoredDigraph::new(colors(self.rows.len(), &self.orders));
        for (x, y) in self.edges() {
            g.add_edge(x, y, 0);
        }
        g
    }

    pub fn to_dot(&self, stars: &[u32]) -> String {
        dot(self.rows.len(), &self.orders, stars, "graph", "--", self.edges())
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({ "n": self.rows.len(), "edges": self.edges() })
    }
}

impl DiGraph {
    pub fn vertex_count(&self) -> usize {
        self.out.len()
    }

    pub fn out_row(&self, x: u32) -> &BitSet {
        &self.out[x as usize]
    }

    pub fn has_arc(&self, x: u32, y: u32) -> bool {
        self.out[x as usize].contains(y as usize)
    }

    pub fn arcs(&self) -> Vec<(u32, u32)> {
        let mut e = Vec::new();
        for (x, r) in self.out.iter().enumerate() {
            e.extend(r.iter().map(|y| (x as u32, y as u32)));
        }
        e
    }

    fn digraph(&self) -> ColoredDigraph {
        let mut g = ColoredDigraph::new(colors(self.out.len(), &self.orders));
        for (x, y) in self.arcs() {
            g.add_arc(x, y, 0);
        }
        g
    }

    pub fn to_dot(&self, stars: &[u32]) -> String {
        dot(self.out.len(), &self.orders, stars, "digraph", "->", self.arcs())
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({ "n": self.out.len(), "edges": self.arcs() })
    }
}

fn colors(n: usize, orders: &Option<Vec<u32>>) -> Vec<u64> {
    match orders {
        Some(o) => o.iter().map(|&x| x as u64).collect(),
        None => vec![0; n],
    }
}

fn dot(n: usize, orders: &Option<Vec<u32>>, stars: &[u32], kind: &str, arrow: &str, edges: Vec<(u32, u32)>) -> String {
    let mut s = format!("{kind} G {{\n");
    for x in 0..n {
        let label = match orders {
            Some(o) => format!("{x} ({})", o[x]),
            None => x.to_string(),
        };
        let shape = if stars.contains(&(x as u32)) { ", shape=doublecircle" } else { "" };
        let _ = writeln!(s, "  {x} [label=\"{label}\"{shape}];");
    }
    for (x, y) in edges {
        let _ = writeln!(s, "  {x} {arrow} {y};");
    }
    s.push_str("}\n");
    s
}

fn cyclic_sets(g: &FiniteGroup) -> Vec<BitSet> {
    let n = g.order();
    (0..n as u32)
        .into_par_iter()
        .map(|x| BitSet::from_indices(n, g.powers(x).into_iter().map(|y| y as usize)))
        .collect()
}

/// Arc x → y whenever y ≠ x is a power of x.
pub fn directed_power_graph(g: &FiniteGroup) -> DiGraph {
    let mut out = cyclic_sets(g);
    for (x, r) in out.iter_mut().enumerate() {
        r.remove(x);
    }
    DiGraph {
        out,
        orders: Some(g.orders().to_vec()),
    }
}

/// Edge {x, y} when one of them is a power of the other.
pub fn power_graph(g: &FiniteGroup) -> Graph {
    let d = directed_power_graph(g);
    let mut rows = d.out.clone();
    for (x, r) in d.out.iter().enumerate() {
        for y in r.iter() {
            rows[y].insert(x);
        }
    }
    Graph {
        rows,
        orders: d.orders,
    }
}

/// Edge {x, y} when ⟨x, y⟩ is cyclic, i.e. when x and y are powers of a
/// common element.
pub fn enhanced_power_graph(g: &FiniteGroup) -> Graph {
    let n = g.order();
    let cyc = cyclic_sets(g);
    let mut rows = vec![BitSet::new(n); n];
    for c in &cyc {
        for x in c.iter() {
            rows[x].union_with(c);
        }
    }
    for (x, r) in rows.iter_mut().enumerate() {
        r.remove(x);
    }
    Graph {
        rows,
        orders: Some(g.orders().to_vec()),
    }
}

/// The complement of the 1-skeleton of Σ(G) is 𝒫(G) and that of Σ̃(G) is
/// ℰ(G), both on the full vertex set with the identity isolated in the
/// skeletons.
pub fn skeleton_complement_check(lat: &SubgroupLattice) -> Result<bool> {
    let g = lat.group();
    let opts = ComplexOptions {
        max_cardinality: Some(2),
        ..Default::default()
    };
    for (kind, graph) in [
        (ComplexKind::Independence, power_graph(g)),
        (ComplexKind::Strong, enhanced_power_graph(g)),
    ] {
        let c = SimplicialComplex::build(lat, kind, opts)?;
        let skel = Graph::from_rows(c.skeleton_rows()).complement();
        if skel.rows != graph.rows {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ClassKind {
    Plain,
    Compound,
}

#[derive(Clone, Debug, Serialize)]
pub struct NClass {
    pub members: Vec<u32>,
    pub kind: ClassKind,
    pub size: usize,
    /// |N(N(class))|.
    pub hat_size: usize,
    pub is_critical: bool,
    pub is_star: bool,
    /// Plain/compound as read from the graph alone for critical classes;
    /// only defined when the star set is trivial.
    pub plain_by_graph: Option<bool>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassPartition {
    pub classes: Vec<NClass>,
    /// Class index of every vertex.
    pub class_of: Vec<u32>,
    pub star: Vec<u32>,
}

/// Prime p and exponent r with m = p^r, if m is a prime power.
fn prime_power(m: usize) -> Option<(u64, u32)> {
    match factorize(m as u64).as_slice() {
        [(p, r)] => Some((*p, *r)),
        _ => None,
    }
}

/// N-classes of the power graph `pg` of `g`: vertices with equal closed
/// neighbourhoods.
pub fn n_class_partition(g: &FiniteGroup, pg: &Graph) -> ClassPartition {
    let n = g.order();
    let closed: Vec<BitSet> = (0..n)
        .map(|x| {
            let mut r = pg.rows[x].clone();
            r.insert(x);
            r
        })
        .collect();
    let cyc = cyclic_sets(g);
    let mut by_nbhd: HashMap<&BitSet, u32> = HashMap::new();
    let mut class_of = vec![0u32; n];
    let mut members: Vec<Vec<u32>> = Vec::new();
    for x in 0..n {
        let id = *by_nbhd.entry(&closed[x]).or_insert_with(|| {
            members.push(Vec::new());
            members.len() as u32 - 1
        });
        class_of[x] = id;
        members[id as usize].push(x as u32);
    }
    let star = members[class_of[0] as usize].clone();
    let trivial_star = star.len() == 1;
    let hat = |m: &[u32]| -> BitSet {
        let nb = &closed[m[0] as usize];
        let mut h = BitSet::full(n);
        for y in nb.iter() {
            h.intersect_with(&closed[y]);
        }
        h
    };
    let classes = members
        .iter()
        .map(|m| {
            let x = m[0] as usize;
            let plain = m.iter().all(|&y| cyc[y as usize] == cyc[x]);
            let h = hat(m);
            let mut with_one = BitSet::from_indices(n, m.iter().map(|&y| y as usize));
            let is_star = class_of[x] == class_of[0];
            with_one.insert(0);
            let is_critical = h == with_one && prime_power(h.len()).is_some_and(|(_, r)| r >= 2);
            let plain_by_graph = (trivial_star && is_critical).then(|| {
                (0..n).any(|z| !h.contains(z) && pg.adjacent(z as u32, x as u32) && members[class_of[z] as usize].len() <= m.len())
            });
            NClass {
                members: m.clone(),
                kind: if plain { ClassKind::Plain } else { ClassKind::Compound },
                size: m.len(),
                hat_size: h.len(),
                is_critical,
                is_star,
                plain_by_graph,
            }
        })
        .collect();
    ClassPartition { classes, class_of, star }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphIsoOutcome {
    Found(Vec<u32>),
    Exhausted,
}

impl GraphIsoOutcome {
    pub fn map(&self) -> Option<&[u32]> {
        match self {
            GraphIsoOutcome::Found(m) => Some(m),
            GraphIsoOutcome::Exhausted => None,
        }
    }
}

fn outcome(o: IsoOutcome) -> GraphIsoOutcome {
    match o {
        IsoOutcome::Found(m) => GraphIsoOutcome::Found(m),
        IsoOutcome::Exhausted => GraphIsoOutcome::Exhausted,
    }
}

/// Isomorphism between undirected graphs. Graphs built from groups carry
/// element orders as colours: isomorphic power-type graphs of groups always
/// admit an order-preserving isomorphism.
pub fn graph_isomorphism(a: &Graph, b: &Graph, budget: u64) -> Result<GraphIsoOutcome> {
    if a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() {
        return Ok(GraphIsoOutcome::Exhausted);
    }
    let (mut ga, mut gb) = (a.digraph(), b.digraph());
    if a.orders.is_none() || b.orders.is_none() {
        ga.colors.iter_mut().for_each(|c| *c = 0);
        gb.colors.iter_mut().for_each(|c| *c = 0);
    }
    Ok(outcome(find_isomorphism(&ga, &gb, budget)?))
}

/// Isomorphism between digraphs, from arcs alone: element orders are not
/// used, so order preservation of the result can be checked afterwards.
pub fn digraph_isomorphism(a: &DiGraph, b: &DiGraph, budget: u64) -> Result<GraphIsoOutcome> {
    if a.vertex_count() != b.vertex_count() {
        return Ok(GraphIsoOutcome::Exhausted);
    }
    let (mut ga, mut gb) = (a.digraph(), b.digraph());
    ga.colors.iter_mut().for_each(|c| *c = 0);
    gb.colors.iter_mut().for_each(|c| *c = 0);
    Ok(outcome(find_isomorphism(&ga, &gb, budget)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::build_str;

    fn group(spec: &str) -> FiniteGroup {
        build_str(spec).unwrap().group
    }

    #[test]
    fn small_power_graphs() {
        let c4 = power_graph(&group("C(4)"));
        assert_eq!(c4.edge_count(), 6);
        let v4 = power_graph(&group("C(2) x C(2)"));
        assert_eq!(v4.edges(), vec![(0, 1), (0, 2), (0, 3)]);
        assert_eq!(power_graph(&group("C(1)")).edge_count(), 0);
        let d = directed_power_graph(&group("C(4)"));
        assert_eq!(d.arcs().len(), 2 * 3 + 1);
        assert!(d.out_row(0).is_empty());
    }

    #[test]
    fn enhanced_quaternion() {
        let g = group("Q8");
        let e = enhanced_power_graph(&g);
        // three C4 cliques sharing the centre
        assert_eq!(e.edge_count(), 3 * 6 - 2);
        assert_eq!(enhanced_power_graph(&group("C(6)")).edge_count(), 15);
    }

    #[test]
    fn klein_classes_are_plain() {
        let g = group("C(2) x C(2)");
        let p = n_class_partition(&g, &power_graph(&g));
        assert_eq!(p.classes.len(), 4);
        assert!(p.classes.iter().all(|c| c.kind == ClassKind::Plain));
        assert_eq!(p.star, vec![0]);
    }

    #[test]
    fn iso_of_power_graphs() {
        let a = power_graph(&group("C(4)"));
        let b = power_graph(&group("C(2) x C(2)"));
        assert_eq!(graph_isomorphism(&a, &b, 1000).unwrap(), GraphIsoOutcome::Exhausted);
        let m = graph_isomorphism(&b, &b, 1000).unwrap();
        assert!(m.map().is_some());
    }

    #[test]
    fn dot_marks_star_vertices() {
        let g = group("C(2)");
        let s = power_graph(&g).to_dot(&[0]);
        assert!(s.contains("doublecircle"));
        assert!(s.contains("0 -- 1"));
    }
}
