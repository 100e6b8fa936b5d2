//! Checkers that evaluate structural statements directly on a lattice.

use std::collections::BTreeSet;
use std::sync::Arc;

use serde::Serialize;

use crate::complexes::{
    independent_generating_set, induced_map, is_strongly_independent, ComplexKind, ComplexOptions, SimplicialComplex,
};
use crate::error::Result;
use crate::graphs::{
    digraph_isomorphism, directed_power_graph, enhanced_power_graph, graph_isomorphism, power_graph, GraphIsoOutcome,
};
use crate::group::{factorize, gcd, make_cyclic, make_direct_product, FiniteGroup};
use crate::lattice::{enumerate_subgroups, lattice_isomorphism, LatticeIsoOutcome, SubgroupLattice};

/// A pair H ≤ K with m(H) > d(K), which rules out Σ = Σ̃.
pub fn sigma_tilde_witness(lat: &SubgroupLattice, m: &[u32]) -> Option<(u32, u32)> {
    lat.indices().find(|&h| m[h as usize] > lat.min_d_above(h)).map(|h| {
        let k = lat
            .above(h)
            .iter()
            .map(|k| k as u32)
            .find(|&k| lat.d(k) == lat.min_d_above(h))
            .unwrap();
        (h, k)
    })
}

/// Σ(G) = Σ̃(G), decided as m(H) ≤ d(K) for all H ≤ K.
pub fn sigma_equals_tilde_direct(lat: &SubgroupLattice, m: &[u32]) -> bool {
    sigma_tilde_witness(lat, m).is_none()
}

/// An independent set that is not strongly independent, when Σ ≠ Σ̃.
pub fn independent_not_strong(lat: &SubgroupLattice, m: &[u32]) -> Option<Vec<u32>> {
    let (h, _) = sigma_tilde_witness(lat, m)?;
    independent_generating_set(lat, h, m[h as usize] as usize)
}

/// d(H) = m(H).
pub fn b_group_check(lat: &SubgroupLattice, m: &[u32], h: u32) -> bool {
    lat.d(h) == m[h as usize]
}

/// Every subgroup is a B-group.
pub fn basis_property_check(lat: &SubgroupLattice, m: &[u32]) -> bool {
    lat.indices().all(|h| b_group_check(lat, m, h))
}

/// A pair H ≤ K with d(H) > d(K).
pub fn monotone_witness(lat: &SubgroupLattice) -> Option<(u32, u32)> {
    lat.indices().find(|&h| lat.d(h) > lat.min_d_above(h)).map(|h| {
        let k = lat.above(h).iter().map(|k| k as u32).find(|&k| lat.d(k) < lat.d(h)).unwrap();
        (h, k)
    })
}

pub fn monotone_check(lat: &SubgroupLattice) -> bool {
    monotone_witness(lat).is_none()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum ActionBranch {
    /// Conjugation by the generator of Q is x ↦ x^m on P.
    Power { m: u64 },
    /// P ≅ C_{pⁿ} × C_{pⁿ} and |Q| does not divide p − 1.
    Homocyclic { alpha_order: u32 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NonNilpRecord {
    pub p: u32,
    pub q: u32,
    pub p_sub: u32,
    pub q_sub: u32,
    pub branch: ActionBranch,
}

/// Structure of a non-nilpotent group with Σ = Σ̃: a Frobenius group P⋊Q
/// with P abelian normal Sylow, Q cyclic Sylow, and the generator of Q
/// acting either as a power map or, on a 2-generated homocyclic P, with
/// order not dividing p − 1. None when the group does not have this shape.
pub fn non_nilp_classification(lat: &SubgroupLattice) -> Option<NonNilpRecord> {
    let g = lat.group();
    if g.is_nilpotent() {
        return None;
    }
    let primes = g.order_factors();
    if primes.len() != 2 {
        return None;
    }
    let top = lat.top();
    for (p, q) in [(primes[0].0, primes[1].0), (primes[1].0, primes[0].0)] {
        let ps = lat.sylow_of(top, p);
        let qs = lat.sylow_of(top, q);
        if !lat.is_normal(ps) || !lat.is_abelian_sub(ps) || !lat.is_cyclic(qs) {
            continue;
        }
        let psub = lat.subgroup(ps);
        let y = lat.subgroup(qs).elements().iter().copied().find(|&x| lat.cyclic_of(x) == qs).unwrap();
        let qorder = g.element_order(y);
        let frobenius = (1..qorder as i64).all(|i| {
            let yi = g.pow(y, i);
            psub.elements().iter().all(|&x| x == 0 || g.conjugate(x, yi) != x)
        });
        if !frobenius {
            continue;
        }
        let exp_p = psub.elements().iter().map(|&x| g.element_order(x) as u64).max().unwrap_or(1);
        let power = (1..exp_p.max(2))
            .filter(|&m| gcd(m, p as u64) == 1)
            .find(|&m| psub.gens().iter().all(|&x| g.conjugate(x, y) == g.pow(x, m as i64)));
        let homocyclic = lat.is_homocyclic_sub(ps, p).unwrap_or(false)
            && lat.d(ps) == 2
            && (p - 1) % qorder != 0;
        let branch = match (power, homocyclic) {
            (Some(m), false) => ActionBranch::Power { m },
            (None, true) => ActionBranch::Homocyclic { alpha_order: qorder },
            _ => continue,
        };
        return Some(NonNilpRecord {
            p,
            q,
            p_sub: ps,
            q_sub: qs,
            branch,
        });
    }
    None
}

#[derive(Clone, Debug, Serialize)]
pub struct Q3Report {
    pub direct: bool,
    pub monotone: bool,
    pub basis: bool,
    /// Only for non-nilpotent groups.
    pub structural: Option<bool>,
    pub witness: Option<(u32, u32)>,
}

impl Q3Report {
    pub fn agrees(&self) -> bool {
        self.direct == (self.monotone && self.basis) && self.structural.is_none_or(|s| s == self.direct)
    }
}

pub fn q3_characterization_check(lat: &SubgroupLattice, m: &[u32]) -> Q3Report {
    Q3Report {
        direct: sigma_equals_tilde_direct(lat, m),
        monotone: monotone_check(lat),
        basis: basis_property_check(lat, m),
        structural: (!lat.group().is_nilpotent()).then(|| non_nilp_classification(lat).is_some()),
        witness: sigma_tilde_witness(lat, m),
    }
}

pub struct AbelianPartner {
    pub spec: String,
    pub lattice: SubgroupLattice,
    /// Index-preserving lattice isomorphism from the partner.
    pub lattice_map: Vec<u32>,
    /// Vertex maps partner → group, checked against both complexes.
    pub sigma_map: Vec<u32>,
    pub tilde_map: Vec<u32>,
}

fn partitions(n: u32, max: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in (1..=n.min(max)).rev() {
        for mut rest in partitions(n - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Abelian groups of order `n`, one per choice of partitions of the prime
/// exponents.
fn abelian_candidates(n: usize) -> Result<Vec<(String, FiniteGroup)>> {
    let mut choices: Vec<Vec<u64>> = vec![Vec::new()];
    for (p, k) in factorize(n as u64) {
        let mut next = Vec::new();
        for c in &choices {
            for part in partitions(k, k) {
                let mut c = c.clone();
                c.extend(part.iter().map(|&e| p.pow(e)));
                next.push(c);
            }
        }
        choices = next;
    }
    choices
        .into_iter()
        .map(|c| {
            if c.is_empty() {
                return Ok(("C(1)".to_string(), make_cyclic(1)?));
            }
            let spec = c.iter().map(|m| format!("C({m})")).collect::<Vec<_>>().join(" x ");
            let mut g = make_cyclic(c[0] as usize)?;
            for &m in &c[1..] {
                g = make_direct_product(&g, &make_cyclic(m as usize)?)?;
            }
            Ok((spec, g))
        })
        .collect()
}

/// Every Sylow subgroup has a modular lattice and is not hamiltonian.
pub fn sylows_modular_nonhamiltonian(lat: &SubgroupLattice) -> bool {
    let top = lat.top();
    lat.group().order_factors().iter().all(|&(p, _)| {
        let s = lat.sylow_of(top, p);
        lat.modular_violation_below(s).is_none() && !lat.is_hamiltonian_sub(s)
    })
}

/// For a nilpotent group whose Sylow subgroups are modular and not
/// hamiltonian: an abelian group of the same order with an index-preserving
/// lattice isomorphism, together with the induced complex isomorphisms.
pub fn abelian_partner(lat: &SubgroupLattice, budget: u64) -> Result<Option<AbelianPartner>> {
    let g = lat.group();
    if !g.is_nilpotent() || !sylows_modular_nonhamiltonian(lat) {
        return Ok(None);
    }
    let mut cands = abelian_candidates(g.order())?;
    if g.is_abelian() {
        cands.insert(0, ("self".to_string(), g.clone()));
    }
    let opts = ComplexOptions::default();
    for (spec, h) in cands {
        let pl = enumerate_subgroups(&Arc::new(h));
        if pl.len() != lat.len() {
            continue;
        }
        let LatticeIsoOutcome::Found(alpha) = lattice_isomorphism(&pl, lat, true, budget)? else {
            continue;
        };
        let Some(phi) = induced_map(&pl, lat, &alpha) else {
            continue;
        };
        let mut maps = Vec::new();
        for kind in [ComplexKind::Independence, ComplexKind::Strong] {
            let a = SimplicialComplex::build(&pl, kind, opts)?;
            let b = SimplicialComplex::build(lat, kind, opts)?;
            if !a.is_isomorphism(&b, &phi) {
                return Ok(None);
            }
            maps.push(phi.clone());
        }
        return Ok(Some(AbelianPartner {
            spec,
            lattice: pl,
            lattice_map: alpha,
            sigma_map: maps.remove(0),
            tilde_map: maps.remove(0),
        }));
    }
    Ok(None)
}

#[derive(Clone, Debug, Serialize)]
pub struct EqGraphsReport {
    /// Some(found) per graph kind, None when the budget ran out.
    pub power: Option<bool>,
    pub directed: Option<bool>,
    pub enhanced: Option<bool>,
    /// The directed certificate, if any, maps elements to elements of equal
    /// order.
    pub orders_preserved: bool,
}

impl EqGraphsReport {
    pub fn consistent(&self) -> bool {
        match (self.power, self.directed, self.enhanced) {
            (Some(a), Some(b), Some(c)) => a == b && b == c && self.orders_preserved,
            _ => self.orders_preserved,
        }
    }

    pub fn skipped(&self) -> bool {
        self.power.is_none() || self.directed.is_none() || self.enhanced.is_none()
    }
}

fn found(r: Result<GraphIsoOutcome>) -> Result<Option<GraphIsoOutcome>> {
    match r {
        Ok(o) => Ok(Some(o)),
        Err(crate::Error::SearchBudgetExceeded { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}

/// Runs the three graph isomorphism searches between two groups.
pub fn eq_graphs_consistency(g1: &FiniteGroup, g2: &FiniteGroup, budget: u64) -> Result<EqGraphsReport> {
    let p = found(graph_isomorphism(&power_graph(g1), &power_graph(g2), budget))?;
    let d = found(digraph_isomorphism(&directed_power_graph(g1), &directed_power_graph(g2), budget))?;
    let e = found(graph_isomorphism(&enhanced_power_graph(g1), &enhanced_power_graph(g2), budget))?;
    let orders_preserved = match d.as_ref().and_then(|o| o.map()) {
        Some(m) => (0..g1.order()).all(|x| g1.element_order(x as u32) == g2.element_order(m[x])),
        None => true,
    };
    let is_found = |o: &Option<GraphIsoOutcome>| o.as_ref().map(|o| o.map().is_some());
    Ok(EqGraphsReport {
        power: is_found(&p),
        directed: is_found(&d),
        enhanced: is_found(&e),
        orders_preserved,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct LemmaCheck {
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

/// Q₈ inside the lattice: a noncyclic subgroup of order 8 with a unique
/// involution.
fn quaternion_subgroup(lat: &SubgroupLattice) -> Option<u32> {
    let g = lat.group();
    lat.indices().find(|&h| {
        let s = lat.subgroup(h);
        s.order() == 8 && !lat.is_cyclic(h) && s.elements().iter().filter(|&&x| g.element_order(x) == 2).count() == 1
    })
}

fn pth_powers(g: &FiniteGroup, p: u32) -> usize {
    g.elements().map(|x| g.pow(x, p as i64)).collect::<BTreeSet<_>>().len()
}

/// Consequences of Σ(G₁) ≅ Σ(G₂) (or Σ̃) for an abelian p-group G₁ and a
/// p-group G₂, evaluated on G₂ and on the vertex map `phi: G₁ → G₂`.
pub fn conditional_lemma_suite(l1: &SubgroupLattice, l2: &SubgroupLattice, phi: &[u32]) -> Vec<LemmaCheck> {
    let (g1, g2) = (l1.group(), l2.group());
    let p = g2.prime_power_base().unwrap_or(1);
    let mut out = Vec::new();
    let two_gen: Vec<u32> = l2.indices().filter(|&h| l2.d(h) == 2).collect();

    let bad = two_gen.iter().find(|&&h| l2.subgroup(l2.omega_of(h, p, 1)).order() > (p * p) as usize);
    out.push(LemmaCheck {
        name: "omega1-bound",
        pass: bad.is_none(),
        detail: bad.map_or(format!("{} two-generated subgroups", two_gen.len()), |h| format!("subgroup {h}")),
    });

    let bad = l2.indices().find(|&h| l2.d(h) > l2.d(l2.omega_of(h, p, 1)));
    out.push(LemmaCheck {
        name: "d-below-omega1",
        pass: bad.is_none(),
        detail: bad.map_or(format!("{} subgroups", l2.len()), |h| format!("subgroup {h}")),
    });

    let q8 = quaternion_subgroup(l2);
    out.push(LemmaCheck {
        name: "no-q8",
        pass: q8.is_none(),
        detail: q8.map_or("none".into(), |h| format!("subgroup {h}")),
    });

    let powerful = if p == 2 { None } else { l2.is_powerful(p).ok() };
    out.push(LemmaCheck {
        name: "powerful-odd-p",
        pass: powerful != Some(false),
        detail: match powerful {
            None => "p = 2".into(),
            Some(b) => format!("powerful = {b}"),
        },
    });

    let (a, b) = (pth_powers(g1, p), pth_powers(g2, p));
    out.push(LemmaCheck {
        name: "pth-power-count",
        pass: a == b,
        detail: format!("{a} vs {b}"),
    });

    let bad = (0..g1.order() as u32).find(|&x| g1.element_order(x) != g2.element_order(phi[x as usize]));
    out.push(LemmaCheck {
        name: "map-preserves-orders",
        pass: g1.order() == g2.order() && bad.is_none(),
        detail: bad.map_or("all orders kept".into(), |x| format!("element {x}")),
    });

    let bad = two_gen.iter().find(|&&h| !l2.is_metacyclic_sub(h));
    out.push(LemmaCheck {
        name: "two-generated-metacyclic",
        pass: bad.is_none(),
        detail: bad.map_or(format!("{} two-generated subgroups", two_gen.len()), |h| format!("subgroup {h}")),
    });

    let modular = l2.is_modular_lattice();
    let ham = l2.is_hamiltonian();
    out.push(LemmaCheck {
        name: "modular-nonhamiltonian",
        pass: modular && !ham,
        detail: format!("modular = {modular}, hamiltonian = {ham}"),
    });
    out
}

/// x_p = x^{m_p} with m_p the largest divisor of |x| prime to p.
fn p_part(g: &FiniteGroup, x: u32, p: u64) -> u32 {
    let mut m = g.element_order(x) as u64;
    while m.is_multiple_of(p) {
        m /= p;
    }
    g.pow(x, m as i64)
}

/// For an abelian group: X is strongly independent iff X_p is, with
/// |X_p| = |X|, for some prime p; checked on all subsets up to `cap`
/// elements. Also compares "same maximal cyclic subgroups" with "same
/// strong-independence neighbourhoods" on the non-identity elements.
/// Returns a counterexample.
pub fn strong_to_p_check(lat: &SubgroupLattice, cap: usize) -> Result<Option<String>> {
    let g = lat.group();
    let n = g.order() as u32;
    let primes: Vec<u64> = factorize(n as u64).into_iter().map(|(p, _)| p).collect();
    let mut subset = Vec::new();
    let mut bad = None;
    fn walk(n: u32, start: u32, cap: usize, subset: &mut Vec<u32>, f: &mut dyn FnMut(&[u32]) -> bool) -> bool {
        if !subset.is_empty() && !f(subset) {
            return false;
        }
        if subset.len() == cap {
            return true;
        }
        for x in start..n {
            subset.push(x);
            let ok = walk(n, x + 1, cap, subset, f);
            subset.pop();
            if !ok {
                return false;
            }
        }
        true
    }
    walk(n, 0, cap, &mut subset, &mut |xs| {
        let strong = is_strongly_independent(lat, xs);
        let via_p = primes.iter().any(|&p| {
            let mut xp: Vec<u32> = xs.iter().map(|&x| p_part(g, x, p)).collect();
            xp.sort_unstable();
            xp.dedup();
            xp.len() == xs.len() && is_strongly_independent(lat, &xp)
        });
        if strong != via_p {
            bad = Some(format!("subset {xs:?}"));
            return false;
        }
        true
    });
    if bad.is_some() {
        return Ok(bad);
    }
    let maximal: Vec<u32> = lat
        .cyclics()
        .iter()
        .copied()
        .filter(|&c| !lat.cyclics().iter().any(|&d| d != c && lat.leq(c, d)))
        .collect();
    let by_cyclic: Vec<Vec<u32>> = (0..n)
        .map(|x| maximal.iter().copied().filter(|&c| lat.subgroup(c).contains(x)).collect())
        .collect();
    let tilde = SimplicialComplex::build(lat, ComplexKind::Strong, ComplexOptions::default())?;
    let mut link: Vec<BTreeSet<Vec<u32>>> = vec![BTreeSet::new(); n as usize];
    for k in 1..=tilde.max_cardinality() {
        tilde.for_each_face(k, |f| {
            for (i, &x) in f.iter().enumerate() {
                let mut rest = f.to_vec();
                rest.remove(i);
                link[x as usize].insert(rest);
            }
        });
    }
    // "same neighbours in the complex": equal links, which also rules out
    // a common face
    let interchangeable = |x: usize, y: usize| link[x] == link[y];
    let same_cyclic = |x: usize, y: usize| by_cyclic[x] == by_cyclic[y];
    // the identity is never a face, so it is left out of the comparison
    let same = (1..n as usize).all(|x| (x + 1..n as usize).all(|y| same_cyclic(x, y) == interchangeable(x, y)));
    Ok((!same).then(|| "maximal-cyclic classes differ from strong-independence neighbourhood classes".to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::max_independent_generating;
    use crate::dsl::build_str;

    fn lattice(spec: &str) -> SubgroupLattice {
        enumerate_subgroups(&Arc::new(build_str(spec).unwrap().group))
    }

    fn m(l: &SubgroupLattice) -> Vec<u32> {
        max_independent_generating(l, 1_000_000).unwrap()
    }

    #[test]
    fn small_verdicts() {
        let q8 = lattice("Q8");
        assert!(sigma_equals_tilde_direct(&q8, &m(&q8)));
        let c6 = lattice("C(6)");
        let mc6 = m(&c6);
        assert!(!sigma_equals_tilde_direct(&c6, &mc6));
        assert!(!b_group_check(&c6, &mc6, c6.top()));
        let x = independent_not_strong(&c6, &mc6).unwrap();
        assert_eq!(x.len(), 2);
        let s3 = lattice("S3");
        let r = q3_characterization_check(&s3, &m(&s3));
        assert!(r.direct && r.agrees());
        assert_eq!(
            non_nilp_classification(&s3).map(|r| (r.p, r.q, r.branch)),
            Some((3, 2, ActionBranch::Power { m: 2 }))
        );
    }

    #[test]
    fn abelian_partners() {
        let es = lattice("ES27");
        let p = abelian_partner(&es, 1_000_000).unwrap().unwrap();
        assert_eq!(p.spec, "C(9) x C(3)");
        assert!(abelian_partner(&lattice("D8"), 1_000_000).unwrap().is_none());
        assert_eq!(partitions(3, 3), vec![vec![3], vec![2, 1], vec![1, 1, 1]]);
    }

    #[test]
    fn strong_to_p_small() {
        assert_eq!(strong_to_p_check(&lattice("C(6)"), 3).unwrap(), None);
    }
}
