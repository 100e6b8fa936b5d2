//! Finite groups as canonical multiplication tables.
//!
//! Every group is stored with the identity at index 0, a dense `n×n` product
//! table, and cached inverses and element orders. Constructors for the other
//! input forms live in the submodules and all funnel through
//! [`FiniteGroup::from_table`], which validates the group axioms.

mod build;
mod iso;
mod pc;
mod perm;

use std::collections::BTreeMap;
use std::fmt;

use sha2::{Digest, Sha256};

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::lattice::Subgroup;

pub use build::{make_cyclic, make_direct_product, make_semidirect_product, Action};
pub use iso::{group_isomorphism, GroupHom, GroupIsoOutcome};
pub use pc::{PcPresentation, PcWord};
pub use perm::{group_from_permutations, parse_cycles, Permutation};

/// Closures and products refuse to build groups larger than this.
pub const DEFAULT_ORDER_CAP: usize = 10_000;

/// Tables up to this order are scanned for associativity exhaustively so the
/// first failing triple is reported; larger tables use Light's test over a
/// generating set.
const FULL_ASSOCIATIVITY_SCAN: usize = 128;

#[derive(Clone)]
pub struct FiniteGroup {
    n: usize,
    table: Vec<u32>,
    inverses: Vec<u32>,
    orders: Vec<u32>,
    gens: Vec<u32>,
    relabeling: Option<Vec<u32>>,
    fingerprint: std::sync::OnceLock<String>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("order", &self.n)
            .field("generators", &self.gens)
            .finish()
    }
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.table == other.table
    }
}

impl Eq for FiniteGroup {}

impl FiniteGroup {
    /// Builds a group from a flat row-major table whose identity is index 0.
    pub fn from_table(n: usize, table: Vec<u32>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidInput("empty table".into()));
        }
        if table.len() != n * n {
            return Err(Error::InvalidInput(format!(
                "table has {} entries, expected {}",
                table.len(),
                n * n
            )));
        }
        check_latin(n, &table)?;
        for i in 0..n {
            if table[i] as usize != i || table[i * n] as usize != i {
                return Err(Error::NoIdentity(format!(
                    "element 0 is not a two-sided identity (row 0 / column 0 differs at {i})"
                )));
            }
        }
        if n <= FULL_ASSOCIATIVITY_SCAN {
            check_associative_full(n, &table)?;
        } else {
            let gens = magma_generators(n, &table);
            check_associative_light(n, &table, &gens)?;
        }
        Ok(Self::from_valid_table(n, table))
    }

    /// Ingests a table in which the identity may sit at any index; rows and
    /// columns are relabelled so the identity becomes 0.
    pub fn from_cayley_table(rows: &[Vec<u32>]) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::InvalidInput("empty table".into()));
        }
        for (i, r) in rows.iter().enumerate() {
            if r.len() != n {
                return Err(Error::InvalidInput(format!(
                    "row {i} has {} entries, expected {n}",
                    r.len()
                )));
            }
            if let Some(j) = r.iter().position(|&v| v as usize >= n) {
                return Err(Error::InvalidInput(format!(
                    "entry ({i},{j}) = {} out of range",
                    r[j]
                )));
            }
        }
        let flat: Vec<u32> = rows.iter().flatten().copied().collect();
        check_latin(n, &flat)?;
        let e = (0..n)
            .find(|&e| (0..n).all(|i| flat[e * n + i] as usize == i && flat[i * n + e] as usize == i))
            .ok_or_else(|| {
                let first = (0..n)
                    .find(|&i| flat[i] as usize != i || flat[i * n] as usize != i)
                    .unwrap_or(0);
                Error::NoIdentity(format!("no two-sided identity; row/column 0 first differs at {first}"))
            })?;
        if e == 0 {
            return Self::from_table(n, flat);
        }
        // swap labels 0 and e
        let relabel = |x: u32| -> u32 {
            if x == 0 {
                e as u32
            } else if x as usize == e {
                0
            } else {
                x
            }
        };
        let mut table = vec![0u32; n * n];
        for i in 0..n {
            for j in 0..n {
                let oi = relabel(i as u32) as usize;
                let oj = relabel(j as u32) as usize;
                table[i * n + j] = relabel(flat[oi * n + oj]);
            }
        }
        let mut g = Self::from_table(n, table)?;
        g.relabeling = Some((0..n as u32).map(relabel).collect());
        Ok(g)
    }

    /// Caller guarantees the table is a group table with identity 0.
    pub(crate) fn from_valid_table(n: usize, table: Vec<u32>) -> Self {
        let mut inverses = vec![0u32; n];
        for i in 0..n {
            let row = &table[i * n..(i + 1) * n];
            inverses[i] = row.iter().position(|&v| v == 0).unwrap() as u32;
        }
        let mut orders = vec![0u32; n];
        for x in 0..n {
            let mut k = 1u32;
            let mut y = x as u32;
            while y != 0 {
                y = table[y as usize * n + x];
                k += 1;
            }
            orders[x] = k;
        }
        let mut g = Self {
            n,
            table,
            inverses,
            orders,
            gens: Vec::new(),
            relabeling: None,
            fingerprint: std::sync::OnceLock::new(),
        };
        g.gens = g.greedy_generators();
        g
    }

    fn greedy_generators(&self) -> Vec<u32> {
        let mut by_order: Vec<u32> = (1..self.n as u32).collect();
        by_order.sort_by_key(|&x| (std::cmp::Reverse(self.orders[x as usize]), x));
        let mut sub = Subgroup::trivial(self.n);
        for x in by_order {
            if sub.order() == self.n {
                break;
            }
            if !sub.contains(x) {
                self.extend_subgroup(&mut sub, x);
            }
        }
        sub.gens().to_vec()
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn identity(&self) -> u32 {
        0
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.table[a as usize * self.n + b as usize]
    }

    #[inline]
    pub fn inv(&self, a: u32) -> u32 {
        self.inverses[a as usize]
    }

    #[inline]
    pub fn element_order(&self, a: u32) -> u32 {
        self.orders[a as usize]
    }

    pub fn orders(&self) -> &[u32] {
        &self.orders
    }

    pub fn inverses(&self) -> &[u32] {
        &self.inverses
    }

    pub fn table(&self) -> &[u32] {
        &self.table
    }

    pub fn row(&self, a: u32) -> &[u32] {
        &self.table[a as usize * self.n..(a as usize + 1) * self.n]
    }

    /// A small generating set (greedy by descending element order).
    pub fn generators(&self) -> &[u32] {
        &self.gens
    }

    /// For tables ingested with a non-zero identity: `relabeling[new] = old`.
    pub fn relabeling(&self) -> Option<&[u32]> {
        self.relabeling.as_deref()
    }

    pub fn pow(&self, a: u32, k: i64) -> u32 {
        let ord = self.orders[a as usize] as i64;
        let mut e = k.rem_euclid(ord);
        let mut base = a;
        let mut acc = 0u32;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// `[a, b] = a⁻¹ b⁻¹ a b`.
    pub fn commutator(&self, a: u32, b: u32) -> u32 {
        let ab = self.mul(a, b);
        let ba = self.mul(b, a);
        self.mul(self.inv(ba), ab)
    }

    /// `a^g = g⁻¹ a g`.
    pub fn conjugate(&self, a: u32, g: u32) -> u32 {
        self.mul(self.mul(self.inv(g), a), g)
    }

    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.n as u32
    }

    pub fn is_abelian(&self) -> bool {
        self.gens
            .iter()
            .enumerate()
            .all(|(i, &a)| self.gens[i + 1..].iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn exponent(&self) -> u64 {
        self.orders.iter().fold(1u64, |acc, &o| lcm(acc, o as u64))
    }

    /// Number of elements of each order.
    pub fn order_statistics(&self) -> BTreeMap<u32, usize> {
        let mut m = BTreeMap::new();
        for &o in &self.orders {
            *m.entry(o).or_insert(0) += 1;
        }
        m
    }

    /// Prime factorisation of the group order.
    pub fn order_factors(&self) -> Vec<(u32, u32)> {
        factorize(self.n as u64)
            .into_iter()
            .map(|(p, e)| (p as u32, e))
            .collect()
    }

    /// `Some(p)` when the order is a positive power of the prime `p`.
    pub fn prime_power_base(&self) -> Option<u32> {
        let f = self.order_factors();
        (f.len() == 1).then(|| f[0].0)
    }

    /// Finite groups are nilpotent exactly when elements of coprime order
    /// commute.
    pub fn is_nilpotent(&self) -> bool {
        let n = self.n as u32;
        for a in 1..n {
            let oa = self.orders[a as usize] as u64;
            for b in a + 1..n {
                let ob = self.orders[b as usize] as u64;
                if gcd(oa, ob) == 1 && self.mul(a, b) != self.mul(b, a) {
                    return false;
                }
            }
        }
        true
    }

    /// SHA-256 of the order and the table, as lowercase hex.
    pub fn fingerprint(&self) -> String {
        self.fingerprint
            .get_or_init(|| {
                let mut h = Sha256::new();
                h.update((self.n as u64).to_le_bytes());
                for &v in &self.table {
                    h.update(v.to_le_bytes());
                }
                h.finalize().iter().map(|b| format!("{b:02x}")).collect()
            })
            .clone()
    }

    /// Members of the cyclic subgroup ⟨a⟩ in power order.
    pub fn powers(&self, a: u32) -> Vec<u32> {
        let mut v = Vec::with_capacity(self.orders[a as usize] as usize);
        let mut y = 0u32;
        loop {
            v.push(y);
            y = self.mul(y, a);
            if y == 0 {
                break;
            }
        }
        v
    }

    /// Subgroup generated by `elems`.
    pub fn generated_subgroup(&self, elems: &[u32]) -> Subgroup {
        let mut sub = Subgroup::trivial(self.n);
        for &x in elems {
            self.extend_subgroup(&mut sub, x);
        }
        sub
    }

    /// Replaces `sub` by ⟨sub, g⟩ (Dimino's coset extension).
    pub fn extend_subgroup(&self, sub: &mut Subgroup, g: u32) {
        if sub.contains(g) {
            return;
        }
        let old: Vec<u32> = sub.elements().to_vec();
        let (members, elements, gens) = sub.parts_mut();
        gens.push(g);
        let mut reps = vec![0u32];
        let mut i = 0;
        while i < reps.len() {
            let r = reps[i];
            i += 1;
            for gi in 0..gens.len() {
                let t = self.mul(r, gens[gi]);
                if !members.contains(t as usize) {
                    for &h in &old {
                        let e = self.mul(h, t);
                        members.insert(e as usize);
                        elements.push(e);
                    }
                    reps.push(t);
                }
            }
        }
        elements.sort_unstable();
    }

    /// Smallest subgroup containing `sub` that is normalised by all of `by`.
    pub fn normal_closure_under(&self, sub: &mut Subgroup, by: &[u32]) {
        loop {
            let mut grew = false;
            let gens = sub.gens().to_vec();
            for g in gens {
                for &b in by {
                    let c = self.conjugate(g, b);
                    if !sub.contains(c) {
                        self.extend_subgroup(sub, c);
                        grew = true;
                    }
                }
            }
            if !grew {
                break;
            }
        }
    }

    /// True when every element of `by` normalises `sub`.
    pub fn is_normalized_by(&self, sub: &Subgroup, by: &[u32]) -> bool {
        sub.gens()
            .iter()
            .all(|&g| by.iter().all(|&b| sub.contains(self.conjugate(g, b))))
    }

    /// Commutator subgroup `[H, H]`.
    pub fn derived_of(&self, h: &Subgroup) -> Subgroup {
        let gens = h.gens();
        let mut comms = Vec::new();
        for (i, &a) in gens.iter().enumerate() {
            for &b in &gens[i + 1..] {
                comms.push(self.commutator(a, b));
            }
        }
        let mut d = self.generated_subgroup(&comms);
        self.normal_closure_under(&mut d, gens);
        d
    }

    pub fn is_solvable(&self) -> bool {
        let mut h = self.whole();
        loop {
            if h.order() == 1 {
                return true;
            }
            let d = self.derived_of(&h);
            if d.order() == h.order() {
                return false;
            }
            h = d;
        }
    }

    pub fn whole(&self) -> Subgroup {
        let mut s = Subgroup::trivial(self.n);
        for &g in &self.gens {
            self.extend_subgroup(&mut s, g);
        }
        s
    }
}

/// Parses the Cayley table text format: first line `n`, then `n` rows of
/// `n` whitespace-separated entries.
pub fn parse_cayley_text(text: &str) -> Result<Vec<Vec<u32>>> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty() && !l.trim_start().starts_with('#'));
    let n: usize = lines
        .next()
        .ok_or_else(|| Error::InvalidInput("missing order line".into()))?
        .trim()
        .parse()
        .map_err(|e| Error::InvalidInput(format!("bad order line: {e}")))?;
    let mut rows = Vec::with_capacity(n);
    for i in 0..n {
        let line = lines
            .next()
            .ok_or_else(|| Error::InvalidInput(format!("missing row {i}")))?;
        let row = line
            .split_whitespace()
            .map(|t| t.parse::<u32>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|e| Error::InvalidInput(format!("row {i}: {e}")))?;
        rows.push(row);
    }
    Ok(rows)
}

pub fn format_cayley_text(g: &FiniteGroup) -> String {
    let n = g.order();
    let mut s = format!("{n}\n");
    for i in 0..n as u32 {
        let row: Vec<String> = g.row(i).iter().map(|v| v.to_string()).collect();
        s.push_str(&row.join(" "));
        s.push('\n');
    }
    s
}

fn check_latin(n: usize, table: &[u32]) -> Result<()> {
    let mut seen = vec![u32::MAX; n];
    for i in 0..n {
        for j in 0..n {
            let v = table[i * n + j] as usize;
            if v >= n {
                return Err(Error::NotLatinSquare(format!("entry ({i},{j}) = {v} out of range")));
            }
            if seen[v] == i as u32 {
                return Err(Error::NotLatinSquare(format!("row {i} repeats {v} at column {j}")));
            }
            seen[v] = i as u32;
        }
    }
    seen.iter_mut().for_each(|s| *s = u32::MAX);
    for j in 0..n {
        for i in 0..n {
            let v = table[i * n + j] as usize;
            if seen[v] == j as u32 {
                return Err(Error::NotLatinSquare(format!("column {j} repeats {v} at row {i}")));
            }
            seen[v] = j as u32;
        }
    }
    Ok(())
}

fn check_associative_full(n: usize, t: &[u32]) -> Result<()> {
    for x in 0..n {
        for y in 0..n {
            let xy = t[x * n + y] as usize;
            for z in 0..n {
                let yz = t[y * n + z] as usize;
                if t[xy * n + z] != t[x * n + yz] {
                    return Err(Error::NotAssociative {
                        x: x as u32,
                        y: y as u32,
                        z: z as u32,
                    });
                }
            }
        }
    }
    Ok(())
}

/// Light's test: associativity holds iff `(x·a)·y = x·(a·y)` for all x, y
/// and every `a` in a generating set of the magma.
fn check_associative_light(n: usize, t: &[u32], gens: &[u32]) -> Result<()> {
    for &a in gens {
        let a = a as usize;
        for x in 0..n {
            let xa = t[x * n + a] as usize;
            for y in 0..n {
                let ay = t[a * n + y] as usize;
                if t[xa * n + y] != t[x * n + ay] {
                    return Err(Error::NotAssociative {
                        x: x as u32,
                        y: a as u32,
                        z: y as u32,
                    });
                }
            }
        }
    }
    Ok(())
}

/// Greedy generating set of a finite magma (closure under products only).
fn magma_generators(n: usize, t: &[u32]) -> Vec<u32> {
    let mut in_set = BitSet::new(n);
    let mut members: Vec<u32> = Vec::new();
    let mut gens = Vec::new();
    for cand in 0..n as u32 {
        if in_set.contains(cand as usize) {
            continue;
        }
        gens.push(cand);
        let mut queue = vec![cand];
        in_set.insert(cand as usize);
        members.push(cand);
        while let Some(a) = queue.pop() {
            let snapshot = members.len();
            for k in 0..snapshot {
                let b = members[k] as usize;
                for v in [t[a as usize * n + b], t[b * n + a as usize]] {
                    if in_set.insert(v as usize) {
                        members.push(v);
                        queue.push(v);
                    }
                }
            }
        }
        if members.len() == n {
            break;
        }
    }
    gens
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// Trial-division factorisation.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n) == vec![(n, 1)]
}

/// Euler's totient.
pub fn totient(n: u64) -> u64 {
    factorize(n)
        .into_iter()
        .fold(n, |acc, (p, _)| acc / p * (p - 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z_n_table(n: usize) -> Vec<Vec<u32>> {
        (0..n)
            .map(|i| (0..n).map(|j| ((i + j) % n) as u32).collect())
            .collect()
    }

    #[test]
    fn trivial_group_from_table() {
        let g = FiniteGroup::from_cayley_table(&[vec![0]]).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.orders(), &[1]);
        assert!(g.generators().is_empty());
    }

    #[test]
    fn z2_table_orders() {
        let g = FiniteGroup::from_cayley_table(&z_n_table(2)).unwrap();
        assert_eq!(g.orders(), &[1, 2]);
    }

    #[test]
    fn non_associative_latin_square_rejected() {
        // a loop of order 5 with an involution cannot be a group
        let rows = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(matches!(
            FiniteGroup::from_cayley_table(&rows),
            Err(Error::NotAssociative { .. })
        ));
    }

    #[test]
    fn identity_relabelled_to_zero() {
        // Z/3 with identity at label 2: a*b = (a + b + 1) mod 3
        let rows: Vec<Vec<u32>> = (0..3)
            .map(|i| (0..3).map(|j| ((i + j + 1) % 3) as u32).collect())
            .collect();
        let g = FiniteGroup::from_cayley_table(&rows).unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.relabeling().unwrap()[0], 2);
        assert_eq!(g.mul(0, 1), 1);
    }

    #[test]
    fn not_latin_square_reported() {
        let rows = vec![vec![0, 1], vec![1, 1]];
        assert!(matches!(
            FiniteGroup::from_cayley_table(&rows),
            Err(Error::NotLatinSquare(_))
        ));
    }

    #[test]
    fn arithmetic_helpers() {
        assert_eq!(totient(9), 6);
        assert_eq!(totient(1), 1);
        assert_eq!(factorize(3125), vec![(5, 5)]);
        assert!(is_prime(11));
        assert!(!is_prime(1));
    }
}
