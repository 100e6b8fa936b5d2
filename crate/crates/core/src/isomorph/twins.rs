use std::collections::HashMap;

use super::ColoredDigraph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Label {
    Base(u64),
    /// `size` copies of a module coloured `inner`; `link` is 0 for
    /// independent copies, otherwise the arc label joining every pair.
    Module { inner: u64, link: u32, size: u32 },
}

/// Shared between the two sides so that equal structure gets equal colours.
#[derive(Default)]
pub(super) struct Interner {
    ids: HashMap<Label, u64>,
}

impl Interner {
    fn intern(&mut self, l: Label) -> u64 {
        let next = self.ids.len() as u64;
        *self.ids.entry(l).or_insert(next)
    }
}

/// A graph with twin classes collapsed repeatedly; each quotient vertex
/// records the original vertices it stands for, in an order such that
/// positional matching between equally coloured quotient vertices is an
/// isomorphism of the pieces.
pub struct TwinReduction {
    pub quotient: ColoredDigraph,
    pub leaves: Vec<Vec<u32>>,
}

type Row = Vec<(u32, u32)>;

impl TwinReduction {
    pub(super) fn reduce(g: &ColoredDigraph, interner: &mut Interner) -> Self {
        let mut cur = ColoredDigraph {
            colors: g.colors.iter().map(|&c| interner.intern(Label::Base(c))).collect(),
            out: g.out.clone(),
            inn: g.inn.clone(),
        };
        let mut leaves: Vec<Vec<u32>> = (0..g.len() as u32).map(|v| vec![v]).collect();
        loop {
            let classes = twin_classes(&cur);
            if classes.iter().all(|(c, _)| c.len() == 1) {
                break;
            }
            let mut node_of = vec![0u32; cur.len()];
            for (i, (c, _)) in classes.iter().enumerate() {
                for &v in c {
                    node_of[v as usize] = i as u32;
                }
            }
            let mut next = ColoredDigraph::new(Vec::with_capacity(classes.len()));
            let mut next_leaves = Vec::with_capacity(classes.len());
            for (c, link) in &classes {
                let rep = c[0] as usize;
                let color = if c.len() == 1 {
                    cur.colors[rep]
                } else {
                    interner.intern(Label::Module {
                        inner: cur.colors[rep],
                        link: *link,
                        size: c.len() as u32,
                    })
                };
                next.colors.push(color);
                next_leaves.push(c.iter().flat_map(|&v| leaves[v as usize].iter().copied()).collect());
            }
            next.out = vec![Vec::new(); classes.len()];
            next.inn = vec![Vec::new(); classes.len()];
            for (i, (c, _)) in classes.iter().enumerate() {
                let rep = c[0] as usize;
                let mut row: Row = cur.out[rep]
                    .iter()
                    .map(|&(t, l)| (node_of[t as usize], l))
                    .filter(|&(t, _)| t != i as u32)
                    .collect();
                row.sort_unstable();
                row.dedup();
                for (t, l) in row {
                    next.add_arc(i as u32, t, l);
                }
            }
            next.normalize();
            cur = next;
            leaves = next_leaves;
        }
        Self { quotient: cur, leaves }
    }

    /// Lifts a quotient isomorphism to the original vertices.
    pub fn expand(&self, other: &TwinReduction, qmap: &[u32]) -> Vec<u32> {
        let n: usize = self.leaves.iter().map(Vec::len).sum();
        let mut map = vec![0u32; n];
        for (x, &y) in qmap.iter().enumerate() {
            for (&a, &b) in self.leaves[x].iter().zip(&other.leaves[y as usize]) {
                map[a as usize] = b;
            }
        }
        map
    }
}

/// Partition into twin classes, each with its internal arc label (0 when
/// the members are pairwise non-adjacent). A vertex joins a class only when
/// the grouping is unambiguous, keeping the result isomorphism-invariant.
fn twin_classes(g: &ColoredDigraph) -> Vec<(Vec<u32>, u32)> {
    let n = g.len();
    let mut groups: HashMap<(u64, u32, Row, Row), Vec<u32>> = HashMap::new();
    for v in 0..n {
        if g.out[v].iter().any(|&(t, _)| t as usize == v) {
            continue;
        }
        groups
            .entry((g.colors[v], 0, g.out[v].clone(), g.inn[v].clone()))
            .or_default()
            .push(v as u32);
        let mut labels: Vec<u32> = g.out[v].iter().map(|&(_, l)| l).collect();
        labels.sort_unstable();
        labels.dedup();
        for l in labels {
            let mut o = g.out[v].clone();
            o.push((v as u32, l));
            o.sort_unstable();
            let mut i = g.inn[v].clone();
            i.push((v as u32, l));
            i.sort_unstable();
            groups.entry((g.colors[v], l, o, i)).or_default().push(v as u32);
        }
    }
    let mut multi: Vec<(Vec<u32>, u32)> = groups
        .into_iter()
        .filter(|(_, m)| m.len() > 1)
        .map(|((_, l, _, _), m)| (m, l))
        .collect();
    let mut memberships = vec![0u32; n];
    for (m, _) in &multi {
        for &v in m {
            memberships[v as usize] += 1;
        }
    }
    multi.retain(|(m, _)| m.iter().all(|&v| memberships[v as usize] == 1));
    let mut assigned = vec![false; n];
    for (m, _) in &multi {
        for &v in m {
            assigned[v as usize] = true;
        }
    }
    let mut classes = multi;
    classes.extend((0..n as u32).filter(|&v| !assigned[v as usize]).map(|v| (vec![v], 0)));
    classes.sort_by_key(|(m, _)| m[0]);
    for (m, _) in classes.iter_mut() {
        m.sort_unstable();
    }
    classes
}
