//! Isomorphism search for vertex-coloured, arc-labelled digraphs.
//!
//! Both inputs are first shrunk by repeatedly merging twin classes (vertices
//! that can be swapped by an automorphism), then matched by
//! individualisation-refinement with joint colour refinement on both sides.
//! Any map returned has been checked arc by arc.

mod twins;

use std::collections::HashMap;

use crate::error::{Error, Result};

pub use twins::TwinReduction;

/// Digraph with vertex colours and arc labels. Undirected graphs store both
/// arcs.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ColoredDigraph {
    pub colors: Vec<u64>,
    pub out: Vec<Vec<(u32, u32)>>,
    pub inn: Vec<Vec<(u32, u32)>>,
}

impl ColoredDigraph {
    pub fn new(colors: Vec<u64>) -> Self {
        let n = colors.len();
        Self {
            colors,
            out: vec![Vec::new(); n],
            inn: vec![Vec::new(); n],
        }
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn add_arc(&mut self, a: u32, b: u32, label: u32) {
        self.out[a as usize].push((b, label));
        self.inn[b as usize].push((a, label));
    }

    pub fn add_edge(&mut self, a: u32, b: u32, label: u32) {
        self.add_arc(a, b, label);
        self.add_arc(b, a, label);
    }

    /// Sorts adjacency lists; required before twin detection and checks.
    pub fn normalize(&mut self) {
        for r in self.out.iter_mut().chain(self.inn.iter_mut()) {
            r.sort_unstable();
        }
    }

    /// True when `map` is a colour- and label-preserving isomorphism onto
    /// `other`.
    pub fn is_isomorphism(&self, other: &Self, map: &[u32]) -> bool {
        let n = self.len();
        if other.len() != n || map.len() != n {
            return false;
        }
        let mut hit = vec![false; n];
        for &v in map {
            if v as usize >= n || std::mem::replace(&mut hit[v as usize], true) {
                return false;
            }
        }
        let mut buf = Vec::new();
        for v in 0..n {
            let w = map[v] as usize;
            if self.colors[v] != other.colors[w] || self.out[v].len() != other.out[w].len() {
                return false;
            }
            buf.clear();
            buf.extend(self.out[v].iter().map(|&(t, l)| (map[t as usize], l)));
            buf.sort_unstable();
            let mut theirs = other.out[w].clone();
            theirs.sort_unstable();
            if buf != theirs {
                return false;
            }
        }
        true
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IsoOutcome {
    Found(Vec<u32>),
    /// The search space was exhausted: no isomorphism exists.
    Exhausted,
}

/// Finds an isomorphism `a → b` or proves none exists. `budget` caps the
/// number of search-tree nodes.
pub fn find_isomorphism(a: &ColoredDigraph, b: &ColoredDigraph, budget: u64) -> Result<IsoOutcome> {
    if a.len() != b.len() {
        return Ok(IsoOutcome::Exhausted);
    }
    let mut a = a.clone();
    let mut b = b.clone();
    a.normalize();
    b.normalize();
    let mut interner = twins::Interner::default();
    let ra = TwinReduction::reduce(&a, &mut interner);
    let rb = TwinReduction::reduce(&b, &mut interner);
    if ra.quotient.len() != rb.quotient.len() {
        return Ok(IsoOutcome::Exhausted);
    }
    let mut search = Search {
        a: &ra.quotient,
        b: &rb.quotient,
        nodes: 0,
        budget,
    };
    let (ca, cb) = match joint_initial(&ra.quotient, &rb.quotient) {
        Some(c) => c,
        None => return Ok(IsoOutcome::Exhausted),
    };
    match search.run(ca, cb)? {
        Some(qmap) => {
            let map = ra.expand(&rb, &qmap);
            if a.is_isomorphism(&b, &map) {
                Ok(IsoOutcome::Found(map))
            } else {
                Err(Error::InvalidInput("internal error: expanded map fails verification".into()))
            }
        }
        None => Ok(IsoOutcome::Exhausted),
    }
}

fn mix(mut x: u64) -> u64 {
    x ^= x >> 33;
    x = x.wrapping_mul(0xff51afd7ed558ccd);
    x ^= x >> 33;
    x = x.wrapping_mul(0xc4ceb9fe1a85ec53);
    x ^= x >> 33;
    x
}

/// Relabels two colour vectors jointly into dense ids; `None` when the
/// colour histograms differ.
fn joint_rank(ka: &[(u32, u64)], kb: &[(u32, u64)]) -> Option<(Vec<u32>, Vec<u32>)> {
    let mut keys: Vec<(u32, u64)> = ka.iter().chain(kb).copied().collect();
    keys.sort_unstable();
    keys.dedup();
    let ids: HashMap<(u32, u64), u32> = keys.iter().enumerate().map(|(i, &k)| (k, i as u32)).collect();
    let ca: Vec<u32> = ka.iter().map(|k| ids[k]).collect();
    let cb: Vec<u32> = kb.iter().map(|k| ids[k]).collect();
    let mut ha = vec![0u32; keys.len()];
    let mut hb = vec![0u32; keys.len()];
    ca.iter().for_each(|&c| ha[c as usize] += 1);
    cb.iter().for_each(|&c| hb[c as usize] += 1);
    (ha == hb).then_some((ca, cb))
}

fn joint_initial(a: &ColoredDigraph, b: &ColoredDigraph) -> Option<(Vec<u32>, Vec<u32>)> {
    let ka: Vec<(u32, u64)> = a.colors.iter().map(|&c| (0, c)).collect();
    let kb: Vec<(u32, u64)> = b.colors.iter().map(|&c| (0, c)).collect();
    let (ca, cb) = joint_rank(&ka, &kb)?;
    refine(a, b, ca, cb)
}

fn signatures(g: &ColoredDigraph, col: &[u32]) -> Vec<(u32, u64)> {
    (0..g.len())
        .map(|v| {
            let mut h = 0u64;
            for &(t, l) in &g.out[v] {
                h = h.wrapping_add(mix(((col[t as usize] as u64) << 32) ^ ((l as u64) << 1)));
            }
            for &(t, l) in &g.inn[v] {
                h = h.wrapping_add(mix(((col[t as usize] as u64) << 32) ^ ((l as u64) << 1) ^ 1));
            }
            (col[v], h)
        })
        .collect()
}

/// Joint colour refinement to a stable pair of colourings.
fn refine(
    a: &ColoredDigraph,
    b: &ColoredDigraph,
    mut ca: Vec<u32>,
    mut cb: Vec<u32>,
) -> Option<(Vec<u32>, Vec<u32>)> {
    let mut classes = count_classes(&ca, &cb);
    loop {
        let (na, nb) = joint_rank(&signatures(a, &ca), &signatures(b, &cb))?;
        let c = count_classes(&na, &nb);
        ca = na;
        cb = nb;
        if c == classes {
            return Some((ca, cb));
        }
        classes = c;
    }
}

fn count_classes(a: &[u32], b: &[u32]) -> usize {
    a.iter().chain(b).copied().max().map_or(0, |m| m as usize + 1)
}

struct Search<'a> {
    a: &'a ColoredDigraph,
    b: &'a ColoredDigraph,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    fn run(&mut self, ca: Vec<u32>, cb: Vec<u32>) -> Result<Option<Vec<u32>>> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::SearchBudgetExceeded { budget: self.budget });
        }
        let k = count_classes(&ca, &cb);
        let mut size = vec![0u32; k];
        ca.iter().for_each(|&c| size[c as usize] += 1);
        let target = (0..k as u32)
            .filter(|&c| size[c as usize] > 1)
            .min_by_key(|&c| (size[c as usize], c));
        let Some(cell) = target else {
            // discrete: the colouring itself is the candidate map
            let mut pos = vec![0u32; k];
            for (v, &c) in cb.iter().enumerate() {
                pos[c as usize] = v as u32;
            }
            let map: Vec<u32> = ca.iter().map(|&c| pos[c as usize]).collect();
            return Ok(self.a.is_isomorphism(self.b, &map).then_some(map));
        };
        let v = ca.iter().position(|&c| c == cell).unwrap();
        let fresh = k as u32;
        let mut ia = ca.clone();
        ia[v] = fresh;
        for w in (0..cb.len()).filter(|&w| cb[w] == cell) {
            let mut ib = cb.clone();
            ib[w] = fresh;
            if let Some((ra, rb)) = refine(self.a, self.b, ia.clone(), ib) {
                if let Some(m) = self.run(ra, rb)? {
                    return Ok(Some(m));
                }
            }
        }
        Ok(None)
    }
}
