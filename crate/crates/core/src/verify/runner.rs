//! Corpus runner: named checks evaluated over corpus groups and collected
//! into a report.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock};
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use super::checks::*;
use super::corpus::{CorpusEntry, Tag, CORPUS};
use crate::cache::LatticeCache;
use crate::complexes::{
    complex_isomorphism, exponent_p_counts, independent_generating_set, is_independent, max_independent_generating,
    ComplexIsoOutcome, ComplexKind, ComplexOptions, SimplicialComplex, DEFAULT_FACE_BUDGET,
};
use crate::error::{Error, Result};
use crate::graphs::{
    enhanced_power_graph, graph_isomorphism, n_class_partition, power_graph, skeleton_complement_check, ClassKind,
};
use crate::group::{group_isomorphism, GroupIsoOutcome};
use crate::lattice::{enumerate_subgroups, lattice_isomorphism, LatticeIsoOutcome, SubgroupLattice};

pub use crate::DEFAULT_SEARCH_BUDGET;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    SkippedBudget,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::SkippedBudget => "skipped-budget",
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ReportEntry {
    pub check: String,
    pub anchor: String,
    pub groups: Vec<String>,
    pub status: Status,
    pub witness: Value,
    pub millis: u64,
}

#[derive(Clone, Debug, Default, Serialize)]
#[serde(transparent)]
pub struct VerificationReport {
    pub entries: Vec<ReportEntry>,
}

impl VerificationReport {
    pub fn failures(&self) -> impl Iterator<Item = &ReportEntry> {
        self.entries.iter().filter(|e| e.status == Status::Fail)
    }

    pub fn passed(&self) -> bool {
        self.failures().next().is_none()
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("report serialises")
    }

    pub fn to_table(&self) -> String {
        let rows: Vec<[String; 4]> = self
            .entries
            .iter()
            .map(|e| [e.check.clone(), e.groups.join(","), e.status.to_string(), format!("{} ms", e.millis)])
            .collect();
        let header = ["check", "groups", "status", "time"].map(String::from);
        let mut width = header.clone().map(|h| h.len());
        for r in &rows {
            for (w, c) in width.iter_mut().zip(r) {
                *w = (*w).max(c.len());
            }
        }
        let mut out = String::new();
        for r in std::iter::once(&header).chain(&rows) {
            let cells: Vec<String> = r.iter().zip(width).map(|(c, w)| format!("{c:<w$}")).collect();
            out.push_str(cells.join("  ").trim_end());
            out.push('\n');
        }
        let fails = self.failures().count();
        let skipped = self.entries.iter().filter(|e| e.status == Status::SkippedBudget).count();
        out.push_str(&format!(
            "{} checks, {} failed, {} skipped for budget\n",
            self.entries.len(),
            fails,
            skipped
        ));
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Corpus,
    Q3,
    Iwasawa,
    Skeleton,
    Lemmas,
    Examples,
    StrongToP,
    Graphs,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Corpus,
        Suite::Q3,
        Suite::Iwasawa,
        Suite::Skeleton,
        Suite::Lemmas,
        Suite::Examples,
        Suite::StrongToP,
        Suite::Graphs,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Corpus => "corpus",
            Suite::Q3 => "q3",
            Suite::Iwasawa => "iwasawa",
            Suite::Skeleton => "skeleton",
            Suite::Lemmas => "lemmas",
            Suite::Examples => "examples",
            Suite::StrongToP => "strong-to-p",
            Suite::Graphs => "graphs",
        }
    }

    /// Parses a suite name; "all" expands to every suite.
    pub fn parse_list(s: &str) -> Result<Vec<Suite>> {
        if s == "all" {
            return Ok(Suite::ALL.to_vec());
        }
        s.split(',').map(|t| t.trim().parse()).collect()
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::InvalidInput(format!("unknown suite '{s}'")))
    }
}

/// A corpus group with its lattice and m-values.
pub struct Loaded {
    pub entry: &'static CorpusEntry,
    pub lattice: SubgroupLattice,
    m: Result<Vec<u32>>,
}

impl Loaded {
    pub fn key(&self) -> &'static str {
        self.entry.key
    }

    /// m(H) for every subgroup.
    pub fn m(&self) -> Result<&[u32]> {
        self.m.as_deref().map_err(Clone::clone)
    }

    pub fn complex(&self, kind: ComplexKind) -> Result<SimplicialComplex> {
        SimplicialComplex::build(&self.lattice, kind, ComplexOptions::default())
    }
}

#[derive(Clone, Debug)]
pub struct RunOptions {
    pub budget: u64,
    pub cache: Option<LatticeCache>,
}

impl Default for RunOptions {
    fn default() -> Self {
        Self {
            budget: DEFAULT_SEARCH_BUDGET,
            cache: None,
        }
    }
}

/// Corpus groups shared by all checks of one run. Groups are loaded before
/// any job starts: a rayon worker blocked inside a lazy initialiser could
/// otherwise steal a job waiting on the same initialiser.
pub struct Context {
    opts: RunOptions,
    loaded: Vec<OnceLock<Result<Arc<Loaded>>>>,
}

impl Context {
    pub fn new(opts: RunOptions) -> Self {
        Self {
            opts,
            loaded: CORPUS.iter().map(|_| OnceLock::new()).collect(),
        }
    }

    pub fn budget(&self) -> u64 {
        self.opts.budget
    }

    pub fn get(&self, key: &str) -> Result<Arc<Loaded>> {
        let i = CORPUS
            .iter()
            .position(|e| e.key == key)
            .ok_or_else(|| Error::UnknownName(key.to_string()))?;
        self.loaded[i]
            .get_or_init(|| {
                let entry = &CORPUS[i];
                let g = Arc::new(entry.build()?.group);
                let lattice = match &self.opts.cache {
                    Some(c) => c.load_or_compute(&g).0,
                    None => enumerate_subgroups(&g),
                };
                let m = max_independent_generating(&lattice, DEFAULT_FACE_BUDGET);
                Ok(Arc::new(Loaded { entry, lattice, m }))
            })
            .clone()
    }
}

pub enum Verdict {
    Pass(Value),
    Fail(Value),
}

impl Verdict {
    pub fn from_bool(ok: bool, witness: Value) -> Self {
        if ok {
            Verdict::Pass(witness)
        } else {
            Verdict::Fail(witness)
        }
    }
}

type EachFn = Box<dyn Fn(&Context, &Loaded) -> Result<Verdict> + Send + Sync>;
type FixedFn = Box<dyn Fn(&Context, &[Arc<Loaded>]) -> Result<Verdict> + Send + Sync>;

pub enum Scope {
    /// Run once per selected group accepted by the filter.
    Each(fn(&CorpusEntry) -> bool, EachFn),
    /// Run once on the named groups, when any of them is selected.
    Fixed(Vec<&'static str>, FixedFn),
}

pub struct Check {
    pub name: &'static str,
    pub anchor: &'static str,
    pub scope: Scope,
}

impl Check {
    pub fn each(
        name: &'static str,
        anchor: &'static str,
        filter: fn(&CorpusEntry) -> bool,
        f: impl Fn(&Context, &Loaded) -> Result<Verdict> + Send + Sync + 'static,
    ) -> Self {
        Self {
            name,
            anchor,
            scope: Scope::Each(filter, Box::new(f)),
        }
    }

    pub fn fixed(
        name: &'static str,
        anchor: &'static str,
        keys: &[&'static str],
        f: impl Fn(&Context, &[Arc<Loaded>]) -> Result<Verdict> + Send + Sync + 'static,
    ) -> Self {
        Self {
            name,
            anchor,
            scope: Scope::Fixed(keys.to_vec(), Box::new(f)),
        }
    }
}

#[derive(Clone, Debug)]
pub enum Selection {
    All,
    Keys(Vec<String>),
}

impl Selection {
    fn contains(&self, key: &str) -> bool {
        match self {
            Selection::All => true,
            Selection::Keys(ks) => ks.iter().any(|k| k == key),
        }
    }
}

pub fn run_corpus(selection: &Selection, suites: &[Suite], opts: RunOptions) -> Result<VerificationReport> {
    let checks: Vec<Check> = suites.iter().flat_map(|&s| suite_checks(s)).collect();
    run_checks(&Context::new(opts), selection, &checks)
}

/// Executes `checks` over the selection. Jobs run in parallel; entries come
/// back in check order, then corpus order.
pub fn run_checks(ctx: &Context, selection: &Selection, checks: &[Check]) -> Result<VerificationReport> {
    if let Selection::Keys(ks) = selection {
        if let Some(k) = ks.iter().find(|k| !CORPUS.iter().any(|e| &e.key == k)) {
            return Err(Error::UnknownName(k.clone()));
        }
    }
    let mut jobs: Vec<(&Check, Vec<&'static str>)> = Vec::new();
    for c in checks {
        match &c.scope {
            Scope::Each(filter, _) => {
                for e in CORPUS.iter().filter(|e| selection.contains(e.key) && filter(e)) {
                    jobs.push((c, vec![e.key]));
                }
            }
            Scope::Fixed(keys, _) => {
                if keys.iter().any(|k| selection.contains(k)) {
                    jobs.push((c, keys.clone()));
                }
            }
        }
    }
    let mut needed: Vec<&str> = jobs.iter().flat_map(|(_, ks)| ks.iter().copied()).collect();
    needed.sort_unstable();
    needed.dedup();
    needed.par_iter().for_each(|k| {
        let _ = ctx.get(k);
    });
    let entries = jobs
        .into_par_iter()
        .map(|(c, keys)| {
            let t = Instant::now();
            let out = (|| {
                let groups = keys.iter().map(|k| ctx.get(k)).collect::<Result<Vec<_>>>()?;
                match &c.scope {
                    Scope::Each(_, f) => f(ctx, &groups[0]),
                    Scope::Fixed(_, f) => f(ctx, &groups),
                }
            })();
            let (status, witness) = match out {
                Ok(Verdict::Pass(w)) => (Status::Pass, w),
                Ok(Verdict::Fail(w)) => (Status::Fail, w),
                Err(e @ (Error::SearchBudgetExceeded { .. } | Error::FaceBudgetExceeded { .. })) => {
                    (Status::SkippedBudget, json!({ "error": e.to_string() }))
                }
                Err(e) => (Status::Fail, json!({ "error": e.to_string() })),
            };
            ReportEntry {
                check: c.name.to_string(),
                anchor: c.anchor.to_string(),
                groups: keys.iter().map(|k| k.to_string()).collect(),
                status,
                witness,
                millis: t.elapsed().as_millis() as u64,
            }
        })
        .collect();
    Ok(VerificationReport { entries })
}

fn any(_: &CorpusEntry) -> bool {
    true
}

fn not_large(e: &CorpusEntry) -> bool {
    !e.has(Tag::Large)
}

pub fn suite_checks(s: Suite) -> Vec<Check> {
    match s {
        Suite::Corpus => corpus_checks(),
        Suite::Q3 => q3_checks(),
        Suite::Iwasawa => vec![Check::each(
            "iwasawa-decomposition",
            "Iwasawa decomposition exists iff modular lattice and not hamiltonian",
            |e| e.has(Tag::PGroup) && e.order <= 64,
            |_, l| iwasawa_verdict(&l.lattice),
        )],
        Suite::Skeleton => vec![Check::each(
            "skeleton-complements",
            "1-skeleton complements of the two complexes are the power and enhanced power graphs",
            any,
            |_, l| Ok(Verdict::from_bool(skeleton_complement_check(&l.lattice)?, Value::Null)),
        )],
        Suite::Lemmas => lemma_checks(),
        Suite::Examples => example_checks(),
        Suite::StrongToP => vec![Check::each(
            "strong-to-p",
            "strong independence reduces to a single prime in abelian groups",
            |e| e.has(Tag::Abelian) && e.order <= 81,
            |_, l| {
                let bad = strong_to_p_check(&l.lattice, 3)?;
                Ok(Verdict::from_bool(bad.is_none(), json!({ "counterexample": bad })))
            },
        )],
        Suite::Graphs => graph_checks(),
    }
}

fn census(l: &SubgroupLattice) -> Vec<(u32, usize)> {
    let g = l.group();
    let mut m: BTreeMap<u32, usize> = BTreeMap::new();
    for x in g.elements() {
        *m.entry(g.element_order(x)).or_default() += 1;
    }
    m.into_iter().collect()
}

/// Split extension N ⋊ H in which no nontrivial element of H commutes with a
/// nontrivial element of N.
fn is_frobenius(l: &SubgroupLattice) -> bool {
    let g = l.group();
    let n = g.order();
    l.indices().filter(|&k| l.is_normal(k) && k != l.bottom() && k != l.top()).any(|k| {
        let kn = l.subgroup(k);
        l.indices().any(|h| {
            let hs = l.subgroup(h);
            hs.order() * kn.order() == n
                && l.meet(h, k) == l.bottom()
                && hs.elements().iter().all(|&y| {
                    y == 0 || kn.elements().iter().all(|&x| x == 0 || g.mul(x, y) != g.mul(y, x))
                })
        })
    })
}

fn corpus_checks() -> Vec<Check> {
    vec![
        Check::each(
            "corpus-metadata",
            "constructed group matches recorded order, tags and fingerprint",
            any,
            |_, l| {
                let (e, lat) = (l.entry, &l.lattice);
                let g = lat.group();
                let mut bad: Vec<String> = Vec::new();
                if g.order() != e.order {
                    bad.push(format!("order {} != {}", g.order(), e.order));
                }
                let nonabelian_p = !g.is_abelian() && g.prime_power_base().is_some();
                let tags = [
                    (Tag::Abelian, g.is_abelian()),
                    (Tag::Nilpotent, g.is_nilpotent()),
                    (Tag::PGroup, g.prime_power_base().is_some()),
                    (Tag::Frobenius, !g.is_nilpotent() && is_frobenius(lat)),
                    (
                        Tag::ModularNonhamiltonian,
                        nonabelian_p && lat.is_modular_lattice() && !lat.is_hamiltonian(),
                    ),
                    (Tag::Hamiltonian, lat.is_hamiltonian()),
                    (Tag::Large, g.order() >= 1000),
                ];
                for (t, holds) in tags {
                    if holds != e.has(t) {
                        bad.push(format!("tag {t:?} expected {} found {holds}", e.has(t)));
                    }
                }
                let fp = &e.fingerprint;
                let found = (census(lat), lat.len(), lat.d(lat.top()), lat.rank());
                if found != (fp.census.to_vec(), fp.subgroups, fp.d, fp.rank) {
                    bad.push(format!("fingerprint {found:?}"));
                }
                Ok(Verdict::from_bool(bad.is_empty(), json!({ "mismatches": bad })))
            },
        ),
        Check::fixed(
            "exponent-p-rank-four",
            "order p^5, exponent p, maximal class, rank 4, abelian maximal subgroup",
            &["BLACKBURN5"],
            |_, gs| {
                let l = &gs[0].lattice;
                let g = l.group();
                let p = g.prime_power_base().unwrap_or(0);
                let class = nilpotency_class(l);
                let abelian_max = l
                    .indices()
                    .any(|h| l.subgroup(h).order() * p as usize == g.order() && l.is_abelian_sub(h));
                let ok = g.order() == 3125 && g.exponent() == 5 && class == 4 && l.rank() == 4 && abelian_max;
                Ok(Verdict::from_bool(
                    ok,
                    json!({ "order": g.order(), "exponent": g.exponent(), "class": class, "rank": l.rank(), "abelian_maximal": abelian_max }),
                ))
            },
        ),
        Check::fixed(
            "exponent-p-class-three",
            "order p^5, exponent p, two-generated, class 3",
            &["FREE3_5"],
            |_, gs| {
                let l = &gs[0].lattice;
                let g = l.group();
                let class = nilpotency_class(l);
                let ok = g.order() == 3125 && g.exponent() == 5 && class == 3 && l.d(l.top()) == 2;
                Ok(Verdict::from_bool(
                    ok,
                    json!({ "order": g.order(), "exponent": g.exponent(), "class": class, "d": l.d(l.top()) }),
                ))
            },
        ),
    ]
}

fn nilpotency_class(l: &SubgroupLattice) -> u32 {
    let mut c = 0;
    while l.gamma_of(l.top(), c + 1) != l.bottom() {
        c += 1;
        if l.gamma_of(l.top(), c + 1) == l.gamma_of(l.top(), c) {
            return u32::MAX;
        }
    }
    c
}

fn q3_checks() -> Vec<Check> {
    vec![
        Check::each(
            "sigma-tilde-characterization",
            "Σ = Σ̃ iff monotone with the basis property; for non-nilpotent groups iff the Frobenius classification holds",
            any,
            |_, l| {
                let r = q3_characterization_check(&l.lattice, l.m()?);
                Ok(Verdict::from_bool(r.agrees(), serde_json::to_value(&r).unwrap()))
            },
        ),
        Check::each(
            "sigma-tilde-prime-power-orders",
            "Σ = Σ̃ forces every element order to be a prime power",
            any,
            |_, l| {
                let g = l.lattice.group();
                let eq = sigma_equals_tilde_direct(&l.lattice, l.m()?);
                let bad = g.elements().find(|&x| crate::group::factorize(g.element_order(x) as u64).len() > 1);
                Ok(Verdict::from_bool(
                    !eq || bad.is_none(),
                    json!({ "sigma_equals_tilde": eq, "mixed_order_element": bad }),
                ))
            },
        ),
        Check::each(
            "sigma-tilde-subgroups",
            "Σ = Σ̃ passes to every subgroup",
            not_large,
            |_, l| {
                let lat = &l.lattice;
                let m = l.m()?;
                if !sigma_equals_tilde_direct(lat, m) {
                    return Ok(Verdict::Pass(json!({ "sigma_equals_tilde": false })));
                }
                for top in lat.indices() {
                    for h in lat.below(top).iter() {
                        let mut between = lat.above(h as u32).clone();
                        between.intersect_with(lat.below(top));
                        if let Some(k) = between.iter().find(|&k| m[h] > lat.d(k as u32)) {
                            return Ok(Verdict::Fail(json!({ "subgroup": top, "pair": [h, k] })));
                        }
                    }
                }
                Ok(Verdict::Pass(json!({ "sigma_equals_tilde": true })))
            },
        ),
    ]
}

fn iwasawa_verdict(lat: &SubgroupLattice) -> Result<Verdict> {
    let p = lat.group().prime_power_base().unwrap_or(1);
    let w = lat.iwasawa_decomposition(p)?;
    let modular = lat.is_modular_lattice();
    let ham = lat.is_hamiltonian();
    Ok(Verdict::from_bool(
        w.is_some() == (modular && !ham),
        json!({ "decomposition": w.is_some(), "modular": modular, "hamiltonian": ham }),
    ))
}

/// Complex isomorphism between the two complexes of the given kind.
fn complex_pair(a: &Loaded, b: &Loaded, kind: ComplexKind, budget: u64) -> Result<ComplexIsoOutcome> {
    complex_isomorphism(&a.complex(kind)?, &b.complex(kind)?, budget)
}

fn outcome_json(o: &ComplexIsoOutcome) -> Value {
    match o {
        ComplexIsoOutcome::Found(_) => json!("found"),
        ComplexIsoOutcome::Refuted(r) => json!(format!("refuted: {r:?}")),
        ComplexIsoOutcome::Exhausted => json!("exhausted"),
    }
}

fn lemma_checks() -> Vec<Check> {
    let pair = |a: &'static str, b: &'static str| {
        Check::fixed(
            "conditional-lemmas",
            "consequences of a complex isomorphism with an abelian p-group",
            &[a, b],
            |ctx, gs| {
                let o = complex_pair(&gs[0], &gs[1], ComplexKind::Independence, ctx.budget())?;
                let Some(phi) = o.map() else {
                    return Ok(Verdict::Fail(json!({ "complex_isomorphism": outcome_json(&o) })));
                };
                let checks = conditional_lemma_suite(&gs[0].lattice, &gs[1].lattice, phi);
                let ok = checks.iter().all(|c| c.pass);
                Ok(Verdict::from_bool(ok, serde_json::to_value(&checks).unwrap()))
            },
        )
    };
    vec![
        pair("C9xC3", "ES27"),
        pair("C8xC2", "M16"),
        Check::each(
            "abelian-partner",
            "nilpotent with modular nonhamiltonian Sylows has an abelian partner with isomorphic complexes",
            |e| e.has(Tag::Nilpotent) && e.order <= 81,
            |ctx, l| {
                let expected = sylows_modular_nonhamiltonian(&l.lattice);
                let partner = abelian_partner(&l.lattice, ctx.budget())?;
                Ok(Verdict::from_bool(
                    partner.is_some() == expected,
                    json!({ "sylows_modular_nonhamiltonian": expected, "partner": partner.map(|p| p.spec) }),
                ))
            },
        ),
    ]
}

fn example_checks() -> Vec<Check> {
    vec![
        Check::fixed(
            "extraspecial-abelian-pair",
            "both complexes and the index-preserving lattice iso agree for C9 x C3 and the extraspecial group of order 27",
            &["C9xC3", "ES27"],
            |ctx, gs| {
                let s = complex_pair(&gs[0], &gs[1], ComplexKind::Independence, ctx.budget())?;
                let t = complex_pair(&gs[0], &gs[1], ComplexKind::Strong, ctx.budget())?;
                let li = lattice_isomorphism(&gs[0].lattice, &gs[1].lattice, true, ctx.budget())?;
                let ok = s.map().is_some() && t.map().is_some() && matches!(li, LatticeIsoOutcome::Found(_));
                Ok(Verdict::from_bool(
                    ok,
                    json!({ "sigma": outcome_json(&s), "tilde": outcome_json(&t), "lattice": matches!(li, LatticeIsoOutcome::Found(_)) }),
                ))
            },
        ),
        Check::fixed(
            "frobenius-605-triple",
            "isomorphic complexes for all three groups; group isomorphism only when λμ ≡ 1 mod 5",
            &["G605_2", "G605_3", "G605_4"],
            |ctx, gs| {
                let lambda = [2u32, 3, 4];
                let mut rows = Vec::new();
                let mut ok = true;
                for i in 0..3 {
                    for j in i + 1..3 {
                        let s = complex_pair(&gs[i], &gs[j], ComplexKind::Independence, ctx.budget())?;
                        let iso = group_isomorphism(gs[i].lattice.group(), gs[j].lattice.group(), ctx.budget())?;
                        let iso = matches!(iso, GroupIsoOutcome::Isomorphic(_));
                        let expect = lambda[i] * lambda[j] % 5 == 1;
                        ok &= s.map().is_some() && iso == expect;
                        rows.push(json!({ "pair": [lambda[i], lambda[j]], "sigma": outcome_json(&s), "group_isomorphic": iso }));
                    }
                }
                Ok(Verdict::from_bool(ok, Value::Array(rows)))
            },
        ),
        Check::fixed(
            "order-42-pair",
            "lattice isomorphic, not index-preserving, complexes refuted by invariants",
            &["G42_1", "G42_2"],
            |ctx, gs| {
                let (a, b) = (&gs[0].lattice, &gs[1].lattice);
                let li = lattice_isomorphism(a, b, false, ctx.budget())?;
                let ip = lattice_isomorphism(a, b, true, ctx.budget())?;
                let s = complex_pair(&gs[0], &gs[1], ComplexKind::Independence, ctx.budget())?;
                let census_differs = census(a) != census(b);
                let ok = matches!(li, LatticeIsoOutcome::Found(_))
                    && ip == LatticeIsoOutcome::Exhausted
                    && matches!(s, ComplexIsoOutcome::Refuted(_))
                    && census_differs;
                Ok(Verdict::from_bool(
                    ok,
                    json!({
                        "lattice": matches!(li, LatticeIsoOutcome::Found(_)),
                        "index_preserving": matches!(ip, LatticeIsoOutcome::Found(_)),
                        "sigma": outcome_json(&s),
                        "census": [census(a), census(b)],
                    }),
                ))
            },
        ),
        Check::fixed(
            "quaternion-by-c3",
            "Σ ≠ Σ̃ with a witness and no Frobenius classification",
            &["SL23"],
            |_, gs| {
                let l = &gs[0];
                let m = l.m()?;
                let eq = sigma_equals_tilde_direct(&l.lattice, m);
                let pair = sigma_tilde_witness(&l.lattice, m);
                let set = independent_not_strong(&l.lattice, m);
                let class = non_nilp_classification(&l.lattice);
                let ok = !eq && pair.is_some() && set.is_some() && class.is_none();
                Ok(Verdict::from_bool(
                    ok,
                    json!({ "sigma_equals_tilde": eq, "pair": pair, "independent_not_strong": set, "classified": class.is_some() }),
                ))
            },
        ),
        Check::fixed(
            "exponent-five-pair",
            "equal strong complexes with closed-form face counts; ranks 4 and 3 separate the independence complexes",
            &["BLACKBURN5", "FREE3_5"],
            |ctx, gs| exponent_five_verdict(&gs[0], &gs[1], ctx.budget()),
        ),
    ]
}

fn exponent_five_verdict(a: &Loaded, b: &Loaded, budget: u64) -> Result<Verdict> {
    let (f1, f2) = exponent_p_counts(5)?;
    let expect = vec![f1 as u64, f2 as u64];
    let ta = a.complex(ComplexKind::Strong)?;
    let tb = b.complex(ComplexKind::Strong)?;
    let enhanced = graph_isomorphism(
        &enhanced_power_graph(a.lattice.group()),
        &enhanced_power_graph(b.lattice.group()),
        budget,
    )?;
    let la = &a.lattice;
    let four = la
        .indices()
        .find(|&h| la.d(h) == 4)
        .and_then(|h| independent_generating_set(la, h, 4))
        .filter(|xs| is_independent(la.group(), xs));
    let rank_b = b.lattice.rank();
    let ok = ta.f_vector().0 == expect
        && tb.f_vector().0 == expect
        && enhanced.map().is_some()
        && four.is_some()
        && rank_b == 3;
    Ok(Verdict::from_bool(
        ok,
        json!({
            "f_vectors": [ta.f_vector().0, tb.f_vector().0],
            "closed_form": expect,
            "enhanced_isomorphic": enhanced.map().is_some(),
            "independent_four_set": four,
            "rank": [la.rank(), rank_b],
        }),
    ))
}

fn graph_checks() -> Vec<Check> {
    let eq_graphs = |a: &'static str, b: &'static str, expect: Option<bool>| {
        Check::fixed(
            "eq-graphs",
            "power, directed power and enhanced power graph isomorphism agree",
            &[a, b],
            move |ctx, gs| {
                let r = eq_graphs_consistency(gs[0].lattice.group(), gs[1].lattice.group(), ctx.budget())?;
                if r.skipped() {
                    return Err(Error::SearchBudgetExceeded { budget: ctx.budget() });
                }
                let ok = r.consistent() && expect.is_none_or(|e| r.power == Some(e));
                Ok(Verdict::from_bool(ok, serde_json::to_value(&r).unwrap()))
            },
        )
    };
    let transfer = |a: &'static str, b: &'static str| {
        Check::fixed(
            "complex-transfer",
            "isomorphic independence complexes keep nilpotency and, from an abelian side, give isomorphic strong complexes",
            &[a, b],
            |ctx, gs| {
                let s = complex_pair(&gs[0], &gs[1], ComplexKind::Independence, ctx.budget())?;
                let (ga, gb) = (gs[0].lattice.group(), gs[1].lattice.group());
                let mut ok = true;
                let mut tilde = Value::Null;
                if s.map().is_some() {
                    ok &= ga.is_nilpotent() == gb.is_nilpotent();
                    if ga.is_abelian() || gb.is_abelian() {
                        let t = complex_pair(&gs[0], &gs[1], ComplexKind::Strong, ctx.budget())?;
                        ok &= t.map().is_some();
                        tilde = outcome_json(&t);
                    }
                }
                Ok(Verdict::from_bool(ok, json!({ "sigma": outcome_json(&s), "tilde": tilde })))
            },
        )
    };
    vec![
        eq_graphs("C4", "V4", Some(false)),
        eq_graphs("S3", "S3", Some(true)),
        eq_graphs("C9xC3", "ES27", Some(true)),
        eq_graphs("C8xC2", "M16", Some(true)),
        eq_graphs("C9xC9", "SG81_10", None),
        eq_graphs("G605_2", "G605_3", Some(true)),
        eq_graphs("G42_1", "G42_2", Some(false)),
        transfer("C9xC3", "ES27"),
        transfer("C8xC2", "M16"),
        transfer("C4xC2", "D8"),
        transfer("C9xC9", "SG81_10"),
        transfer("G605_2", "G605_4"),
        Check::each(
            "n-classes",
            "closed-neighbourhood classes of the power graph partition the group; critical classes read plain or compound from the graph",
            not_large,
            |_, l| {
                let g = l.lattice.group();
                let cp = n_class_partition(g, &power_graph(g));
                let total: usize = cp.classes.iter().map(|c| c.size).sum();
                let bad: Vec<&Vec<u32>> = cp
                    .classes
                    .iter()
                    .filter(|c| c.plain_by_graph.is_some_and(|p| p != (c.kind == ClassKind::Plain)))
                    .map(|c| &c.members)
                    .collect();
                let star_ok = cp.star.contains(&0);
                Ok(Verdict::from_bool(
                    total == g.order() && bad.is_empty() && star_ok,
                    json!({ "classes": cp.classes.len(), "star": cp.star.len(), "misread": bad }),
                ))
            },
        ),
    ]
}
