use std::sync::{Arc, OnceLock};

use proptest::prelude::*;

use grpx::complexes::{
    complex_isomorphism, independence_complex, is_independent, strong_independence_complex, SimplicialComplex,
};
use grpx::dsl::{build_str, parse_construction, ActionItem, ConstructionSpec, PcRelation, Word};
use grpx::graphs::{
    digraph_isomorphism, directed_power_graph, enhanced_power_graph, graph_isomorphism, n_class_partition,
    power_graph, skeleton_complement_check, ClassKind,
};
use grpx::group::{group_isomorphism, totient, FiniteGroup, GroupIsoOutcome};
use grpx::lattice::{enumerate_subgroups, lattice_isomorphism, LatticeIsoOutcome, SubgroupLattice};
use grpx::verify::corpus::CORPUS;
use grpx::DEFAULT_SEARCH_BUDGET as BUDGET;

struct Pooled {
    key: &'static str,
    lat: SubgroupLattice,
    sigma: SimplicialComplex,
    tilde: SimplicialComplex,
}

impl std::fmt::Debug for Pooled {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.key)
    }
}

/// Corpus groups up to order 81 with their lattices and complexes.
fn pool() -> &'static [Pooled] {
    static POOL: OnceLock<Vec<Pooled>> = OnceLock::new();
    POOL.get_or_init(|| {
        CORPUS
            .iter()
            .filter(|e| e.order <= 81)
            .map(|e| {
                let lat = enumerate_subgroups(&Arc::new(e.build().unwrap().group));
                let sigma = independence_complex(&lat).unwrap();
                let tilde = strong_independence_complex(&lat).unwrap();
                Pooled { key: e.key, lat, sigma, tilde }
            })
            .collect()
    })
}

fn pooled() -> impl Strategy<Value = &'static Pooled> {
    (0..pool().len()).prop_map(|i| &pool()[i])
}

fn name() -> impl Strategy<Value = String> {
    "[a-w][a-z0-9]{0,3}"
}

fn word() -> impl Strategy<Value = Word> {
    prop::collection::vec((name(), (-5i64..6).prop_filter("nonzero", |e| *e != 0)), 0..3)
}

fn action_item() -> impl Strategy<Value = ActionItem> {
    prop_oneof![
        (-20i64..20).prop_map(ActionItem::Pow),
        (1usize..4).prop_flat_map(|k| prop::collection::vec(prop::collection::vec(-9i64..10, k), k))
            .prop_map(ActionItem::Mat),
        prop::collection::vec(word(), 1..4).prop_map(ActionItem::Imgs),
    ]
}

fn pc_group() -> impl Strategy<Value = ConstructionSpec> {
    let rel = prop_oneof![
        (name(), word()).prop_map(|(gen, word)| PcRelation::Power { gen, word }),
        (name(), name(), word()).prop_map(|(a, b, word)| PcRelation::Commutator { a, b, word }),
    ];
    (prop::sample::select(vec![2u64, 3, 5, 7]), prop::collection::vec(name(), 1..5), prop::collection::vec(rel, 0..4))
        .prop_map(|(p, gens, relations)| ConstructionSpec::PcGroup { p, gens, relations })
}

fn perm_group() -> impl Strategy<Value = ConstructionSpec> {
    let cycle = prop::collection::vec(0u32..9, 2..5);
    (1u64..10, prop::collection::vec(prop::collection::vec(cycle, 0..3), 1..3))
        .prop_map(|(degree, gens)| ConstructionSpec::PermGroup { degree, gens })
}

fn spec() -> impl Strategy<Value = ConstructionSpec> {
    let leaf = prop_oneof![
        (1u64..100).prop_map(ConstructionSpec::Cyclic),
        "[A-Z][A-Za-z0-9_]{1,6}".prop_filter("keyword", |s| s != "SD" && s != "PC").prop_map(ConstructionSpec::Named),
        pc_group(),
        perm_group(),
    ];
    leaf.prop_recursive(3, 16, 3, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| ConstructionSpec::DirectProduct(Box::new(a), Box::new(b))),
            (inner.clone(), inner, prop::collection::vec(action_item(), 1..3)).prop_map(|(n, h, action)| {
                ConstructionSpec::Semidirect { normal: Box::new(n), acting: Box::new(h), action }
            }),
        ]
    })
}

/// The group with elements renamed by a permutation fixing the identity.
fn relabel(g: &FiniteGroup, perm: &[u32]) -> FiniteGroup {
    let n = g.order();
    let mut table = vec![0u32; n * n];
    for a in 0..n as u32 {
        for b in 0..n as u32 {
            table[perm[a as usize] as usize * n + perm[b as usize] as usize] = perm[g.mul(a, b) as usize];
        }
    }
    FiniteGroup::from_table(n, table).unwrap()
}

fn shuffled(n: usize) -> impl Strategy<Value = Vec<u32>> {
    Just((1..n as u32).collect::<Vec<_>>()).prop_shuffle().prop_map(|mut v| {
        v.insert(0, 0);
        v
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn dsl_print_parse_round_trip(s in spec()) {
        let text = s.to_string();
        let back = parse_construction(&text).unwrap();
        prop_assert_eq!(&back, &s, "{}", text);
        prop_assert_eq!(back.to_string(), text);
    }

    #[test]
    fn meet_and_join_are_lattice_operations(p in pooled(), a in any::<prop::sample::Index>(), b in any::<prop::sample::Index>()) {
        let l = &p.lat;
        let (a, b) = (a.index(l.len()) as u32, b.index(l.len()) as u32);
        prop_assert_eq!(l.meet(a, b), l.meet(b, a));
        prop_assert_eq!(l.join(a, b), l.join(b, a));
        prop_assert_eq!(l.meet(a, a), a);
        prop_assert_eq!(l.join(a, a), a);
        let inter = l.subgroup(a).members().intersection(l.subgroup(b).members());
        prop_assert_eq!(l.subgroup(l.meet(a, b)).members(), &inter);
        let j = l.join(a, b);
        prop_assert!(l.leq(a, j) && l.leq(b, j));
        let union = l.subgroup(a).members().union(l.subgroup(b).members());
        for k in l.indices() {
            if union.is_subset(l.subgroup(k).members()) {
                prop_assert!(l.leq(j, k));
            }
        }
        prop_assert_eq!(l.subgroup(l.bottom()).order(), 1);
        prop_assert_eq!(l.subgroup(l.top()).order(), l.group().order());
    }

    #[test]
    fn faces_are_downward_closed(p in pooled(), pick in any::<prop::sample::Index>(), drop in any::<prop::sample::Index>()) {
        for c in [&p.sigma, &p.tilde] {
            let k = c.max_cardinality();
            if k < 2 {
                continue;
            }
            let faces = c.faces(k);
            let mut f = faces[pick.index(faces.len())].clone();
            f.remove(drop.index(f.len()));
            prop_assert!(c.contains_face(&f));
        }
    }

    #[test]
    fn strong_faces_are_independent_faces(p in pooled()) {
        for k in 1..=p.tilde.max_cardinality() {
            for f in p.tilde.faces(k) {
                prop_assert!(p.sigma.contains_face(&f));
            }
        }
        prop_assert!(!p.sigma.contains_face(&[0]));
        prop_assert_eq!(p.sigma.f_vector().get(1), p.lat.group().order() as u64 - 1);
        // every independent set generates a subgroup it is a minimal
        // generating set of, so the top dimension is the largest m(H); only
        // for p-groups, where m = d, does that reduce to the rank
        let m = grpx::complexes::max_independent_generating(&p.lat, BUDGET).unwrap();
        prop_assert_eq!(p.sigma.max_cardinality() as u32, m.iter().copied().max().unwrap());
        if p.lat.group().prime_power_base().is_some() {
            prop_assert!(p.sigma.max_cardinality() as u32 <= p.lat.rank());
        }
        prop_assert!(p.tilde.max_cardinality() as u32 <= p.lat.d(p.lat.top()));
    }

    #[test]
    fn abelian_p_groups_have_equal_complexes(p in pooled()) {
        let g = p.lat.group();
        if g.is_abelian() && g.prime_power_base().is_some() {
            for k in 1..=p.sigma.max_cardinality().max(p.tilde.max_cardinality()) {
                prop_assert_eq!(p.sigma.faces(k), p.tilde.faces(k));
            }
        }
    }

    #[test]
    fn incremental_independence_matches_scratch(p in pooled(), xs in prop::collection::vec(any::<prop::sample::Index>(), 1..5)) {
        let g = p.lat.group();
        let mut xs: Vec<u32> = xs.iter().map(|i| i.index(g.order()) as u32).collect();
        xs.sort_unstable();
        xs.dedup();
        let scratch = xs.iter().enumerate().all(|(i, &x)| {
            let rest: Vec<u32> = xs.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &y)| y).collect();
            !g.generated_subgroup(&rest).contains(x)
        });
        prop_assert_eq!(is_independent(g, &xs), scratch);
        prop_assert_eq!(p.sigma.contains_face(&xs), scratch);
    }

    #[test]
    fn power_graph_inside_enhanced(p in pooled()) {
        let g = p.lat.group();
        let (pg, eg) = (power_graph(g), enhanced_power_graph(g));
        for (x, y) in pg.edges() {
            prop_assert!(eg.adjacent(x, y));
        }
        prop_assert!(skeleton_complement_check(&p.lat).unwrap());
    }

    #[test]
    fn plain_classes_have_totient_size(p in pooled()) {
        let g = p.lat.group();
        let parts = n_class_partition(g, &power_graph(g));
        let mut seen = vec![false; g.order()];
        for c in &parts.classes {
            for &x in &c.members {
                prop_assert!(!std::mem::replace(&mut seen[x as usize], true));
            }
            if c.kind == ClassKind::Plain && !c.is_star {
                let o = g.element_order(c.members[0]);
                prop_assert!(c.members.iter().all(|&x| g.element_order(x) == o));
                prop_assert_eq!(c.size as u64, totient(o as u64));
            }
        }
        prop_assert!(seen.iter().all(|&s| s));
    }

    #[test]
    fn structure_report_inequalities(p in pooled()) {
        let m = grpx::complexes::max_independent_generating(&p.lat, BUDGET).unwrap();
        let r = p.lat.structure_report(m[p.lat.top() as usize]);
        prop_assert!(r.d <= r.m && r.d <= r.rank);
        if r.is_hamiltonian {
            prop_assert!(r.is_dedekind && !r.is_abelian);
        }
        if let Some(q) = p.lat.group().prime_power_base() {
            for h in p.lat.indices() {
                let phi = p.lat.frattini_index(h);
                let quotient = p.lat.subgroup(h).order() / p.lat.subgroup(phi).order();
                prop_assert_eq!((q as usize).pow(p.lat.d(h)), quotient);
            }
        }
        match lattice_isomorphism(&p.lat, &p.lat, true, BUDGET).unwrap() {
            LatticeIsoOutcome::Found(map) => prop_assert!(p.lat.is_lattice_isomorphism(&p.lat, &map, true)),
            LatticeIsoOutcome::Exhausted => prop_assert!(false, "lattice not isomorphic to itself"),
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn relabelled_groups_are_recognised(
        (key, perm) in (0..CORPUS.iter().filter(|e| e.order <= 48).count())
            .prop_flat_map(|i| {
                let e = CORPUS.iter().filter(|e| e.order <= 48).nth(i).unwrap();
                (Just(e.key), shuffled(e.order))
            })
    ) {
        let g = build_str(key).unwrap().group;
        let h = relabel(&g, &perm);
        match group_isomorphism(&g, &h, BUDGET).unwrap() {
            GroupIsoOutcome::Isomorphic(f) => {
                prop_assert!(f.is_homomorphism(&g, &h) && f.is_bijective(&h));
            }
            GroupIsoOutcome::NotIsomorphic => prop_assert!(false, "{} not recognised", key),
        }
        let (lg, lh) = (enumerate_subgroups(&Arc::new(g.clone())), enumerate_subgroups(&Arc::new(h.clone())));
        prop_assert_eq!(lg.len(), lh.len());
        let (sg, sh) = (independence_complex(&lg).unwrap(), independence_complex(&lh).unwrap());
        prop_assert_eq!(sg.f_vector(), sh.f_vector());
        let map = complex_isomorphism(&sg, &sh, BUDGET).unwrap();
        prop_assert!(sg.is_isomorphism(&sh, map.map().unwrap()));
        let dm = digraph_isomorphism(&directed_power_graph(&g), &directed_power_graph(&h), BUDGET).unwrap();
        let dm = dm.map().unwrap();
        prop_assert!((0..g.order() as u32).all(|x| g.element_order(x) == h.element_order(dm[x as usize])));
        prop_assert!(graph_isomorphism(&enhanced_power_graph(&g), &enhanced_power_graph(&h), BUDGET).unwrap().map().is_some());
    }
}
