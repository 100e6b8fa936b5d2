use std::collections::VecDeque;

use super::{FiniteGroup, DEFAULT_ORDER_CAP};
use crate::error::{Error, Result};

/// Action of `H` on `N` by automorphisms, given on generators.
///
/// `images[k][i]` is the image of `n_gens[i]` under `h_gens[k]`. The product
/// uses `(n1, h1)(n2, h2) = (n1 · h1(n2), h1 h2)`, so the extension to all of
/// `H` must satisfy `(h1 h2)(x) = h1(h2(x))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Action {
    pub n_gens: Vec<u32>,
    pub h_gens: Vec<u32>,
    pub images: Vec<Vec<u32>>,
}

pub fn make_cyclic(n: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::InvalidInput("cyclic group of order 0".into()));
    }
    if n > DEFAULT_ORDER_CAP {
        return Err(Error::OrderCapExceeded { cap: DEFAULT_ORDER_CAP });
    }
    let table = (0..n * n).map(|k| ((k / n + k % n) % n) as u32).collect();
    Ok(FiniteGroup::from_valid_table(n, table))
}

/// `A × B` with `(a, b)` stored at index `a·|B| + b`.
pub fn make_direct_product(a: &FiniteGroup, b: &FiniteGroup) -> Result<FiniteGroup> {
    let (na, nb) = (a.order(), b.order());
    let n = na.checked_mul(nb).filter(|&n| n <= DEFAULT_ORDER_CAP);
    let n = n.ok_or(Error::OrderCapExceeded { cap: DEFAULT_ORDER_CAP })?;
    let mut table = vec![0u32; n * n];
    for x in 0..n {
        let (xa, xb) = ((x / nb) as u32, (x % nb) as u32);
        let row = &mut table[x * n..(x + 1) * n];
        for (y, slot) in row.iter_mut().enumerate() {
            let (ya, yb) = ((y / nb) as u32, (y % nb) as u32);
            *slot = a.mul(xa, ya) * nb as u32 + b.mul(xb, yb);
        }
    }
    Ok(FiniteGroup::from_valid_table(n, table))
}

/// `N ⋊ H` with `(n, h)` stored at index `n·|H| + h`.
pub fn make_semidirect_product(
    ng: &FiniteGroup,
    hg: &FiniteGroup,
    action: &Action,
) -> Result<FiniteGroup> {
    let (nn, nh) = (ng.order(), hg.order());
    let n = nn.checked_mul(nh).filter(|&n| n <= DEFAULT_ORDER_CAP);
    let n = n.ok_or(Error::OrderCapExceeded { cap: DEFAULT_ORDER_CAP })?;
    if action.images.len() != action.h_gens.len() {
        return Err(Error::InvalidInput(format!(
            "{} acting generators but {} image lists",
            action.h_gens.len(),
            action.images.len()
        )));
    }
    if ng.generated_subgroup(&action.n_gens).order() != nn {
        return Err(Error::InvalidInput("listed generators do not generate the normal factor".into()));
    }
    if hg.generated_subgroup(&action.h_gens).order() != nh {
        return Err(Error::InvalidInput("listed generators do not generate the acting group".into()));
    }
    let mut autos = Vec::with_capacity(action.h_gens.len());
    for (k, imgs) in action.images.iter().enumerate() {
        if imgs.len() != action.n_gens.len() || imgs.iter().any(|&v| v as usize >= nn) {
            return Err(Error::InvalidInput(format!(
                "image list {k} must name {} elements of the normal factor",
                action.n_gens.len()
            )));
        }
        autos.push(extend_automorphism(ng, &action.n_gens, imgs, k)?);
    }
    // extend h ↦ automorphism over all of H
    let mut act: Vec<Vec<u32>> = vec![Vec::new(); nh];
    act[0] = (0..nn as u32).collect();
    let mut queue = VecDeque::from([0u32]);
    let mut seen = vec![false; nh];
    seen[0] = true;
    while let Some(h) = queue.pop_front() {
        for (k, &hk) in action.h_gens.iter().enumerate() {
            let t = hg.mul(h, hk) as usize;
            let cur = &act[h as usize];
            let composed: Vec<u32> = autos[k].iter().map(|&x| cur[x as usize]).collect();
            if seen[t] {
                if act[t] != composed {
                    return Err(Error::ActionNotHomomorphism(format!(
                        "acting generator {k} gives two different automorphisms for element {t}"
                    )));
                }
            } else {
                seen[t] = true;
                act[t] = composed;
                queue.push_back(t as u32);
            }
        }
    }
    let mut table = vec![0u32; n * n];
    for x in 0..n {
        let (xn, xh) = (x / nh, (x % nh) as u32);
        let ax = &act[xh as usize];
        for y in 0..n {
            let (yn, yh) = (y / nh, (y % nh) as u32);
            let m = ng.mul(xn as u32, ax[yn]);
            table[x * n + y] = m * nh as u32 + hg.mul(xh, yh);
        }
    }
    Ok(FiniteGroup::from_valid_table(n, table))
}

/// Extends generator images to a full map and checks it is an automorphism.
fn extend_automorphism(g: &FiniteGroup, gens: &[u32], imgs: &[u32], k: usize) -> Result<Vec<u32>> {
    let n = g.order();
    let unset = u32::MAX;
    let mut map = vec![unset; n];
    map[0] = 0;
    let mut queue = VecDeque::from([0u32]);
    while let Some(x) = queue.pop_front() {
        let fx = map[x as usize];
        for (&gi, &vi) in gens.iter().zip(imgs) {
            let y = g.mul(x, gi) as usize;
            let v = g.mul(fx, vi);
            if map[y] == unset {
                map[y] = v;
                queue.push_back(y as u32);
            } else if map[y] != v {
                return Err(Error::ActionNotHomomorphism(format!(
                    "images for acting generator {k} do not define a homomorphism"
                )));
            }
        }
    }
    let mut hit = vec![false; n];
    for &v in &map {
        if std::mem::replace(&mut hit[v as usize], true) {
            return Err(Error::ActionNotAutomorphism(format!(
                "acting generator {k} maps two elements to {v}"
            )));
        }
    }
    Ok(map)
}

/// Builds a multiplication table from right-multiplication maps by a set of
/// generators. `right[i][x] = x · gᵢ`; the words reach every element from 0.
pub(crate) fn table_from_right_actions(n: usize, right: &[Vec<u32>]) -> Option<Vec<u32>> {
    // spanning tree: parent[y] = (x, i) with y = x · gᵢ
    let mut parent = vec![(u32::MAX, 0usize); n];
    let mut order = Vec::with_capacity(n);
    parent[0] = (0, usize::MAX);
    order.push(0u32);
    let mut head = 0;
    while head < order.len() {
        let x = order[head];
        head += 1;
        for (i, r) in right.iter().enumerate() {
            let y = r[x as usize];
            if parent[y as usize].0 == u32::MAX {
                parent[y as usize] = (x, i);
                order.push(y);
            }
        }
    }
    if order.len() != n {
        return None;
    }
    let mut cols = vec![0u32; n * n]; // column-major while filling
    for x in 0..n {
        cols[x] = x as u32;
    }
    for &y in &order[1..] {
        let (p, i) = parent[y as usize];
        let r = &right[i];
        let (src, dst) = (p as usize * n, y as usize * n);
        for x in 0..n {
            cols[dst + x] = r[cols[src + x] as usize];
        }
    }
    let mut table = vec![0u32; n * n];
    for y in 0..n {
        for x in 0..n {
            table[x * n + y] = cols[y * n + x];
        }
    }
    Some(table)
}
