use serde::Serialize;

use super::{not_p_group, SubgroupLattice};
use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CharacteristicKind {
    Frattini,
    Center,
    Derived,
    /// γᵢ of the lower central series, γ₁ = G.
    Gamma(u32),
    Omega { p: u32, n: u32 },
    Mho { p: u32, n: u32 },
    Sylow(u32),
}

/// `P = A⟨b⟩` with `b⁻¹ a b = a^{1+p^s}` on the abelian normal subgroup `A`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IwasawaWitness {
    pub a: u32,
    pub b: u32,
    pub s: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    pub order: usize,
    pub exponent: u64,
    pub subgroups: usize,
    pub is_abelian: bool,
    pub is_nilpotent: bool,
    pub is_solvable: bool,
    pub is_cyclic: bool,
    pub is_dedekind: bool,
    pub is_hamiltonian: bool,
    pub is_modular_lattice: bool,
    pub is_metacyclic: bool,
    pub is_powerful: Option<bool>,
    pub is_homocyclic: Option<bool>,
    pub d: u32,
    pub m: u32,
    pub rank: u32,
    /// (p, order of a Sylow p-subgroup, its lattice index)
    pub sylow: Vec<(u32, usize, u32)>,
    pub frattini: u32,
    pub center: u32,
    pub derived: u32,
    pub lower_central: Vec<u32>,
}

impl SubgroupLattice {
    fn locate_members(&self, members: BitSet) -> u32 {
        self.index_of(&members).expect("closure of a subgroup is listed")
    }

    fn locate_generated(&self, xs: &[u32]) -> u32 {
        self.generated_by(xs)
    }

    pub fn center_of(&self, h: u32) -> u32 {
        let g = self.group();
        let sub = self.subgroup(h);
        let gens = sub.gens();
        let members = BitSet::from_indices(
            g.order(),
            sub.elements()
                .iter()
                .filter(|&&x| gens.iter().all(|&y| g.mul(x, y) == g.mul(y, x)))
                .map(|&x| x as usize),
        );
        self.locate_members(members)
    }

    pub fn derived_of(&self, h: u32) -> u32 {
        let d = self.group().derived_of(self.subgroup(h));
        self.locate(&d)
    }

    /// γᵢ(H), with γ₁(H) = H and γᵢ₊₁ = [γᵢ, H].
    pub fn gamma_of(&self, h: u32, i: u32) -> u32 {
        let g = self.group();
        let hg = self.subgroup(h).gens().to_vec();
        let mut cur = h;
        for _ in 1..i.max(1) {
            let comms: Vec<u32> = self
                .subgroup(cur)
                .gens()
                .iter()
                .flat_map(|&a| hg.iter().map(move |&b| (a, b)))
                .map(|(a, b)| g.commutator(a, b))
                .collect();
            let mut next = g.generated_subgroup(&comms);
            g.normal_closure_under(&mut next, &hg);
            let idx = self.locate(&next);
            if idx == cur {
                break;
            }
            cur = idx;
        }
        cur
    }

    /// Ωₙ(H) = ⟨x ∈ H : x^{pⁿ} = 1⟩.
    pub fn omega_of(&self, h: u32, p: u32, n: u32) -> u32 {
        let g = self.group();
        let q = (p as u64).pow(n);
        let xs: Vec<u32> = self
            .subgroup(h)
            .elements()
            .iter()
            .copied()
            .filter(|&x| q.is_multiple_of(g.element_order(x) as u64))
            .collect();
        self.locate_generated(&xs)
    }

    /// ℧ₙ(H) = ⟨x^{pⁿ} : x ∈ H⟩.
    pub fn mho_of(&self, h: u32, p: u32, n: u32) -> u32 {
        let g = self.group();
        let q = (p as i64).pow(n);
        let xs: Vec<u32> = self.subgroup(h).elements().iter().map(|&x| g.pow(x, q)).collect();
        self.locate_generated(&xs)
    }

    /// A Sylow p-subgroup of H (the first in lattice order).
    pub fn sylow_of(&self, h: u32, p: u32) -> u32 {
        let mut order = self.subgroup(h).order();
        let mut pp = 1;
        while order.is_multiple_of(p as usize) {
            order /= p as usize;
            pp *= p as usize;
        }
        self.below(h)
            .iter()
            .find(|&j| self.subgroup(j as u32).order() == pp)
            .unwrap() as u32
    }

    pub fn characteristic_subgroup(&self, kind: CharacteristicKind) -> Result<u32> {
        let top = self.top();
        Ok(match kind {
            CharacteristicKind::Frattini => self.frattini_index(top),
            CharacteristicKind::Center => self.center_of(top),
            CharacteristicKind::Derived => self.derived_of(top),
            CharacteristicKind::Gamma(i) => self.gamma_of(top, i),
            CharacteristicKind::Omega { p, n } => {
                not_p_group(self.group(), p)?;
                self.omega_of(top, p, n)
            }
            CharacteristicKind::Mho { p, n } => {
                not_p_group(self.group(), p)?;
                self.mho_of(top, p, n)
            }
            CharacteristicKind::Sylow(p) => self.sylow_of(top, p),
        })
    }

    fn require_p_sub(&self, h: u32, p: u32) -> Result<()> {
        let ho = self.subgroup(h).order() as u64;
        if ho > 1 && crate::group::factorize(ho) != [(p as u64, ho.ilog(p as u64))] {
            return Err(Error::NotAPGroup { p });
        }
        Ok(())
    }

    pub fn is_abelian_sub(&self, h: u32) -> bool {
        let g = self.group();
        let gens = self.subgroup(h).gens();
        gens.iter()
            .enumerate()
            .all(|(i, &a)| gens[i + 1..].iter().all(|&b| g.mul(a, b) == g.mul(b, a)))
    }

    /// True when `k ≤ h` is normal in `h`.
    pub fn is_normal_in(&self, k: u32, h: u32) -> bool {
        self.group()
            .is_normalized_by(self.subgroup(k), self.subgroup(h).gens())
    }

    /// The modular law `(H₁ ∨ H₂) ∧ H₃ = H₁ ∨ (H₂ ∧ H₃)` for all `H₁ ≤ H₃`
    /// inside the interval below `h`; returns the first violating triple.
    pub fn modular_violation_below(&self, h: u32) -> Option<(u32, u32, u32)> {
        let subs: Vec<u32> = self.below(h).iter().map(|i| i as u32).collect();
        for &h3 in &subs {
            for h1 in self.below(h3).iter().map(|i| i as u32) {
                if h1 == h3 {
                    continue;
                }
                for &h2 in &subs {
                    if self.leq(h2, h3) || self.leq(h2, h1) || self.leq(h1, h2) {
                        continue;
                    }
                    let lhs = self.meet(self.join(h1, h2), h3);
                    let rhs = self.join(h1, self.meet(h2, h3));
                    if lhs != rhs {
                        return Some((h1, h2, h3));
                    }
                }
            }
        }
        None
    }

    pub fn is_modular_lattice(&self) -> bool {
        self.modular_violation_below(self.top()).is_none()
    }

    pub fn is_dedekind_sub(&self, h: u32) -> bool {
        self.below(h).iter().all(|k| self.is_normal_in(k as u32, h))
    }

    pub fn is_dedekind(&self) -> bool {
        self.indices().all(|k| self.is_normal(k))
    }

    pub fn is_hamiltonian(&self) -> bool {
        !self.group().is_abelian() && self.is_dedekind()
    }

    pub fn is_hamiltonian_sub(&self, h: u32) -> bool {
        !self.is_abelian_sub(h) && self.is_dedekind_sub(h)
    }

    /// H has a cyclic normal N with H/N cyclic, i.e. H = N⟨x⟩.
    pub fn is_metacyclic_sub(&self, h: u32) -> bool {
        let below = self.below(h);
        let cyc: Vec<u32> = self.cyclics().iter().copied().filter(|&c| below.contains(c as usize)).collect();
        cyc.iter().any(|&n| {
            self.is_normal_in(n, h) && cyc.iter().any(|&c| self.join(n, c) == h)
        })
    }

    pub fn is_metacyclic(&self) -> bool {
        self.is_metacyclic_sub(self.top())
    }

    /// H' ≤ ℧₁(H) for odd p, H' ≤ ℧₂(H) for p = 2.
    pub fn is_powerful_sub(&self, h: u32, p: u32) -> Result<bool> {
        self.require_p_sub(h, p)?;
        let k = if p == 2 { 2 } else { 1 };
        Ok(self.leq(self.derived_of(h), self.mho_of(h, p, k)))
    }

    pub fn is_powerful(&self, p: u32) -> Result<bool> {
        not_p_group(self.group(), p)?;
        self.is_powerful_sub(self.top(), p)
    }

    /// Abelian p-group test for (C_{pⁿ})^d via the ℧-chain: every step
    /// |℧ᵢ : ℧ᵢ₊₁| must be the same until the chain reaches 1.
    pub fn is_homocyclic_sub(&self, h: u32, p: u32) -> Result<bool> {
        if !self.is_abelian_sub(h) {
            return Err(Error::NotAbelian);
        }
        self.require_p_sub(h, p)?;
        let mut prev = h;
        let mut step: Option<usize> = None;
        let mut n = 1;
        while self.subgroup(prev).order() > 1 {
            let next = self.mho_of(h, p, n);
            let q = self.subgroup(prev).order() / self.subgroup(next).order();
            if *step.get_or_insert(q) != q {
                return Ok(false);
            }
            prev = next;
            n += 1;
        }
        Ok(true)
    }

    pub fn is_homocyclic(&self, p: u32) -> Result<bool> {
        self.is_homocyclic_sub(self.top(), p)
    }

    /// Searches for an Iwasawa presentation of the p-group; abelian groups
    /// get `(G, 1, s)` with `s` least such that `pˢ ≥ exp(G)` (at least 2
    /// when p = 2).
    pub fn iwasawa_decomposition(&self, p: u32) -> Result<Option<IwasawaWitness>> {
        let g = self.group();
        not_p_group(g, p)?;
        let top = self.top();
        let min_s = if p == 2 { 2 } else { 1 };
        if g.is_abelian() {
            let exp = g.exponent();
            let mut s = 0;
            while (p as u64).pow(s) < exp {
                s += 1;
            }
            return Ok(Some(IwasawaWitness { a: top, b: 0, s: s.max(min_s) }));
        }
        let mut cands: Vec<u32> = self
            .indices()
            .filter(|&a| a != top && self.is_normal(a) && self.is_abelian_sub(a))
            .collect();
        cands.sort_by_key(|&a| std::cmp::Reverse(self.subgroup(a).order()));
        for a in cands {
            let asub = self.subgroup(a);
            let exp_a = asub
                .elements()
                .iter()
                .fold(1u64, |e, &x| crate::group::lcm(e, g.element_order(x) as u64));
            for b in g.elements() {
                if self.join_element(a, b) != top {
                    continue;
                }
                let mut s = min_s;
                while (p as u64).pow(s) < exp_a {
                    let k = 1 + (p as i64).pow(s);
                    if asub.gens().iter().all(|&x| g.conjugate(x, b) == g.pow(x, k)) {
                        return Ok(Some(IwasawaWitness { a, b, s }));
                    }
                    s += 1;
                }
            }
        }
        Ok(None)
    }

    /// Counts non-Frattini factors in one chief series: each step takes the
    /// smallest normal subgroup properly above the previous term.
    pub fn chief_non_frattini_count(&self) -> Result<u32> {
        if !self.group().is_solvable() {
            return Err(Error::NotSolvable);
        }
        let top = self.top();
        let maximals = self.lower_covers(top).to_vec();
        let mut n = self.bottom();
        let mut count = 0;
        while n != top {
            let m = self
                .above(n)
                .iter()
                .map(|i| i as u32)
                .find(|&i| i != n && self.is_normal(i))
                .unwrap();
            let over: Vec<u32> = maximals.iter().copied().filter(|&k| self.leq(n, k)).collect();
            let phi = over[1..].iter().fold(over[0], |acc, &k| self.meet(acc, k));
            if !self.leq(m, phi) {
                count += 1;
            }
            n = m;
        }
        Ok(count)
    }

    /// Structural summary; `m` is the largest irredundant generating set.
    pub fn structure_report(&self, m: u32) -> StructureReport {
        let g: &FiniteGroup = self.group();
        let top = self.top();
        let pbase = g.prime_power_base();
        let is_abelian = g.is_abelian();
        let mut lower_central = vec![top];
        loop {
            let next = self.gamma_of(top, lower_central.len() as u32 + 1);
            if next == *lower_central.last().unwrap() {
                break;
            }
            lower_central.push(next);
        }
        StructureReport {
            order: g.order(),
            exponent: g.exponent(),
            subgroups: self.len(),
            is_abelian,
            is_nilpotent: g.is_nilpotent(),
            is_solvable: g.is_solvable(),
            is_cyclic: self.is_cyclic(top),
            is_dedekind: self.is_dedekind(),
            is_hamiltonian: self.is_hamiltonian(),
            is_modular_lattice: self.is_modular_lattice(),
            is_metacyclic: self.is_metacyclic(),
            is_powerful: pbase.map(|p| self.is_powerful(p).unwrap()),
            is_homocyclic: pbase
                .filter(|_| is_abelian)
                .map(|p| self.is_homocyclic(p).unwrap()),
            d: self.d(top),
            m,
            rank: self.rank(),
            sylow: g
                .order_factors()
                .into_iter()
                .map(|(p, _)| {
                    let s = self.sylow_of(top, p);
                    (p, self.subgroup(s).order(), s)
                })
                .collect(),
            frattini: self.frattini_index(top),
            center: self.center_of(top),
            derived: self.derived_of(top),
            lower_central,
        }
    }
}
