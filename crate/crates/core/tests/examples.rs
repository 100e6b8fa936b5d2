use std::collections::BTreeMap;
use std::sync::Arc;

use grpx::complexes::{
    complex_isomorphism, ell_sequence, exponent_p_counts, independence_complex, is_independent,
    is_strongly_independent_direct, strong_independence_complex, ComplexIsoOutcome, Refutation,
};
use grpx::dsl::build_str;
use grpx::graphs::{directed_power_graph, enhanced_power_graph, n_class_partition, power_graph, ClassKind};
use grpx::group::{group_isomorphism, make_cyclic, make_direct_product, FiniteGroup, GroupIsoOutcome};
use grpx::lattice::{enumerate_subgroups, lattice_isomorphism, CharacteristicKind, LatticeIsoOutcome, SubgroupLattice};
use grpx::{Error, DEFAULT_SEARCH_BUDGET as BUDGET};

fn group(s: &str) -> Arc<FiniteGroup> {
    Arc::new(build_str(s).unwrap().group)
}

fn lattice(s: &str) -> SubgroupLattice {
    enumerate_subgroups(&group(s))
}

fn census(g: &FiniteGroup) -> BTreeMap<u32, usize> {
    let mut m = BTreeMap::new();
    for x in 0..g.order() as u32 {
        let mut k = 1;
        let mut y = x;
        while y != 0 {
            y = g.mul(y, x);
            k += 1;
        }
        *m.entry(k).or_default() += 1;
    }
    m
}

#[test]
fn table_errors_name_the_problem() {
    assert_eq!(FiniteGroup::from_cayley_table(&[vec![0]]).unwrap().order(), 1);
    let z2 = FiniteGroup::from_cayley_table(&[vec![0, 1], vec![1, 0]]).unwrap();
    assert_eq!(z2.orders(), &[1, 2]);
    // a Latin square with identity 0 that is not associative
    let loop6: Vec<Vec<u32>> = vec![
        vec![0, 1, 2, 3, 4, 5],
        vec![1, 0, 3, 4, 5, 2],
        vec![2, 4, 0, 5, 1, 3],
        vec![3, 5, 1, 0, 2, 4],
        vec![4, 2, 5, 1, 3, 0],
        vec![5, 3, 4, 2, 0, 1],
    ];
    assert_eq!(
        FiniteGroup::from_cayley_table(&loop6).unwrap_err(),
        Error::NotAssociative { x: 1, y: 1, z: 2 }
    );
    let not_latin = vec![vec![0, 1], vec![1, 1]];
    assert!(matches!(FiniteGroup::from_cayley_table(&not_latin), Err(Error::NotLatinSquare(_))));
}

#[test]
fn constructions() {
    assert_eq!(group("Perm(3; (0 1 2), (0 1))").order(), 6);
    let q = group("Perm(8; (0 1 3 6)(2 5 7 4), (0 2 3 7)(1 4 6 5))");
    assert_eq!(q.order(), 8);
    assert_eq!(census(&q)[&2], 1);
    let c6 = make_cyclic(6).unwrap();
    assert_eq!(census(&c6), BTreeMap::from([(1, 1), (2, 1), (3, 2), (6, 2)]));
    let c93 = group("C(9) x C(3)");
    assert_eq!(census(&c93)[&9], 18);
    assert_eq!(census(&group("C(2) x C(2)"))[&2], 3);
    assert_eq!(census(&group("S3"))[&2], 3);
    assert_eq!(group("PC(3; a; a^3=1)").order(), 3);
    assert_eq!(group("G605_2").order(), 605);
    let trivial = make_cyclic(1).unwrap();
    let d8 = group("D8");
    let copy = make_direct_product(&d8, &trivial).unwrap();
    assert!(matches!(group_isomorphism(&d8, &copy, BUDGET).unwrap(), GroupIsoOutcome::Isomorphic(_)));
    assert_eq!(census(&group("D8")), BTreeMap::from([(1, 1), (2, 5), (4, 2)]));
    assert_eq!(census(&group("C(4) x C(2)")), BTreeMap::from([(1, 1), (2, 3), (4, 4)]));
    for g in [group("BLACKBURN5"), group("FREE3_5")] {
        assert!((1..g.order() as u32).all(|x| g.element_order(x) == 5));
    }
}

#[test]
fn trivial_action_is_direct_product() {
    let sd = group("SD(C(5), C(4), pow(1))");
    let dp = group("C(5) x C(4)");
    assert!(matches!(group_isomorphism(&sd, &dp, BUDGET).unwrap(), GroupIsoOutcome::Isomorphic(_)));
}

#[test]
fn presentations_of_order_32_and_81() {
    let l = lattice("SG32_32");
    assert_eq!(l.group().order(), 32);
    let om = l.characteristic_subgroup(CharacteristicKind::Omega { p: 2, n: 1 }).unwrap();
    assert_eq!(l.subgroup(om).order(), 4);
    let l = lattice("SG81_10");
    assert_eq!((l.group().order(), l.group().exponent(), l.d(l.top())), (81, 9, 2));
}

#[test]
fn group_isomorphism_examples() {
    let iso = |a: &str, b: &str| matches!(group_isomorphism(&group(a), &group(b), BUDGET).unwrap(), GroupIsoOutcome::Isomorphic(_));
    assert!(!iso("C(4)", "V4"));
    assert!(iso("Q8", "Q8"));
    assert!(iso("G605_2", "G605_3"));
    assert!(!iso("G605_2", "G605_4"));
    if let GroupIsoOutcome::Isomorphic(h) = group_isomorphism(&group("G605_2"), &group("G605_3"), BUDGET).unwrap() {
        assert!(h.is_homomorphism(&group("G605_2"), &group("G605_3")));
    }
}

#[test]
fn lattice_examples() {
    let frattini = |s: &str| {
        let l = lattice(s);
        l.subgroup(l.characteristic_subgroup(CharacteristicKind::Frattini).unwrap()).order()
    };
    assert_eq!(frattini("C(9) x C(3)"), 3);
    let s3 = lattice("S3");
    assert_eq!(s3.subgroup(s3.characteristic_subgroup(CharacteristicKind::Center).unwrap()).order(), 1);
    assert!(lattice("Q8").is_modular_lattice());
    assert!(!lattice("D8").is_modular_lattice());
    assert!(lattice("Q8").is_hamiltonian());
    assert!(!lattice("S3").is_hamiltonian());
    assert!(lattice("Q8").is_metacyclic());
    assert!(!lattice("E8").is_metacyclic());
    assert!(!lattice("D8").is_powerful(2).unwrap());
    assert!(lattice("ES27").is_powerful(3).unwrap());
    assert!(lattice("C9xC9").is_homocyclic(3).unwrap());
    assert!(!lattice("C9xC3").is_homocyclic(3).unwrap());
    assert!(lattice("C(11) x C(11)").is_homocyclic(11).unwrap());
    assert!(lattice("S3").is_homocyclic(3).is_err());
    assert_eq!(lattice("BLACKBURN5").rank(), 4);
    assert_eq!(lattice("S3").chief_non_frattini_count().unwrap(), 2);
    assert_eq!(lattice("V4").chief_non_frattini_count().unwrap(), 2);
    assert_eq!(lattice("C(7)").chief_non_frattini_count().unwrap(), 1);
}

#[test]
fn iwasawa_examples() {
    let w = lattice("M16").iwasawa_decomposition(2).unwrap().unwrap();
    let l = lattice("M16");
    assert_eq!(l.subgroup(w.a).order(), 8);
    assert!(l.is_cyclic(w.a));
    assert_eq!(w.s, 2);
    assert!(lattice("D8").iwasawa_decomposition(2).unwrap().is_none());
    let c93 = lattice("C9xC3");
    let w = c93.iwasawa_decomposition(3).unwrap().unwrap();
    assert_eq!((w.a, w.b, w.s), (c93.top(), 0, 2));
}

#[test]
fn lattice_isomorphism_examples() {
    let (a, b) = (lattice("C3xC3"), lattice("S3"));
    assert!(matches!(lattice_isomorphism(&a, &b, false, BUDGET).unwrap(), LatticeIsoOutcome::Found(_)));
    assert_eq!(lattice_isomorphism(&a, &b, true, BUDGET).unwrap(), LatticeIsoOutcome::Exhausted);
    let l = lattice("SL23");
    match lattice_isomorphism(&l, &l, true, BUDGET).unwrap() {
        LatticeIsoOutcome::Found(m) => assert!(l.is_lattice_isomorphism(&l, &m, true)),
        o => panic!("{o:?}"),
    }
}

#[test]
fn graph_examples() {
    let c4 = power_graph(&group("C(4)"));
    assert_eq!(c4.edge_count(), 6);
    let v4 = power_graph(&group("V4"));
    assert_eq!(v4.edges(), vec![(0, 1), (0, 2), (0, 3)]);
    assert_eq!(power_graph(&group("C(1)")).edge_count(), 0);
    assert_eq!(directed_power_graph(&group("C(2)")).arcs(), vec![(1, 0)]);
    let dc4 = directed_power_graph(&group("C(4)"));
    assert_eq!(dc4.arcs().len(), 2 * 3 + 1);
    let q8 = group("Q8");
    let e = enhanced_power_graph(&q8);
    // ±1 joined to everything, plus one edge inside each C4 between ±i
    assert_eq!(e.edge_count(), 7 + 6 + 3);
    let es = enhanced_power_graph(&group("C(5) x C(5) x C(5)"));
    assert_eq!(es.edge_count(), 31 * 10);
}

#[test]
fn class_examples() {
    let g = group("V4");
    let parts = n_class_partition(&g, &power_graph(&g));
    assert_eq!(parts.classes.len(), 4);
    assert!(parts.classes.iter().filter(|c| !c.is_star).all(|c| c.kind == ClassKind::Plain && c.size == 1));
    for s in ["C9xC3", "C(4) x C(4)", "E8"] {
        let g = group(s);
        let parts = n_class_partition(&g, &power_graph(&g));
        assert_eq!(parts.star, vec![0], "{s}");
        assert!(parts.classes.iter().all(|c| c.kind == ClassKind::Plain), "{s}");
    }
}

#[test]
fn complex_examples() {
    let g = group("C(6)");
    assert!(is_independent(&g, &[2, 3]));
    assert!(!is_strongly_independent_direct(&g, &[2, 3]));
    assert!(!is_independent(&g, &[0]));
    let v4 = group("V4");
    assert!(is_strongly_independent_direct(&v4, &[1, 2]));
    let fv = |s: &str| independence_complex(&lattice(s)).unwrap().f_vector().0.clone();
    let ft = |s: &str| strong_independence_complex(&lattice(s)).unwrap().f_vector().0.clone();
    assert_eq!(fv("V4"), vec![3, 3]);
    assert_eq!(fv("C(7)"), vec![6]);
    assert_eq!(fv("C(2)"), vec![1]);
    assert_eq!(ft("C(1)"), Vec::<u64>::new());
    assert_eq!(fv("ES27")[0], 26);
    assert!(ft("C(6)").get(1).copied().unwrap_or(0) < fv("C(6)")[1]);
    for s in ["C9xC3", "C(4) x C(2) x C(2)", "C3xC3"] {
        assert_eq!(fv(s), ft(s), "{s}");
    }
    assert_eq!(exponent_p_counts(5).unwrap(), (3124, 4873440));
    let (f1, f2) = exponent_p_counts(7).unwrap();
    assert_eq!(f1, 16806);
    assert_eq!(f2, 16806 * 16805 / 2 - (16806 / 6) * 15);
    assert!(matches!(exponent_p_counts(6), Err(Error::NotPrime(6))));
}

#[test]
fn complex_isomorphism_examples() {
    let (a, b) = (lattice("C9xC3"), lattice("ES27"));
    let (sa, sb) = (independence_complex(&a).unwrap(), independence_complex(&b).unwrap());
    let m = complex_isomorphism(&sa, &sb, BUDGET).unwrap();
    assert!(sa.is_isomorphism(&sb, m.map().unwrap()));
    let (a, b) = (lattice("G42_1"), lattice("G42_2"));
    let o = complex_isomorphism(&independence_complex(&a).unwrap(), &independence_complex(&b).unwrap(), BUDGET).unwrap();
    assert!(matches!(o, ComplexIsoOutcome::Refuted(Refutation::FVector | Refutation::OrderCensus)));
    let s = independence_complex(&lattice("SL23")).unwrap();
    let m = complex_isomorphism(&s, &s, BUDGET).unwrap();
    assert!(s.is_isomorphism(&s, m.map().unwrap()));
}

#[test]
fn ell_examples() {
    assert_eq!(ell_sequence(&lattice("C(4)"), 2).unwrap(), vec![3]);
    assert_eq!(ell_sequence(&lattice("V4"), 2).unwrap(), vec![3, 1]);
    assert!(ell_sequence(&lattice("C(1)"), 2).unwrap().iter().all(|&x| x == 0));
    assert!(ell_sequence(&lattice("S3"), 2).is_err());
}
