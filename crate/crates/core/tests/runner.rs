use serde_json::json;

use grpx::verify::runner::{
    run_checks, run_corpus, Check, Context, RunOptions, Selection, Status, Suite, Verdict,
};
use grpx::Error;

fn keys(ks: &[&str]) -> Selection {
    Selection::Keys(ks.iter().map(|k| k.to_string()).collect())
}

#[test]
fn failing_check_reports_its_witness() {
    let ctx = Context::new(RunOptions::default());
    let checks = [
        Check::each("always-fails", "synthetic", |_| true, |_, l| {
            Ok(Verdict::Fail(json!({ "order": l.lattice.group().order() })))
        }),
        Check::each("never-selected", "synthetic", |e| e.order > 100, |_, _| Ok(Verdict::Pass(json!(null)))),
    ];
    let r = run_checks(&ctx, &keys(&["Q8"]), &checks).unwrap();
    assert_eq!(r.entries.len(), 1);
    let e = &r.entries[0];
    assert_eq!((e.check.as_str(), e.status, e.groups.clone()), ("always-fails", Status::Fail, vec!["Q8".to_string()]));
    assert_eq!(e.witness, json!({ "order": 8 }));
    assert!(!r.passed());
    assert!(r.to_table().ends_with("1 checks, 1 failed, 0 skipped for budget\n"));
    assert_eq!(r.to_json()[0]["status"], "fail");
}

#[test]
fn errors_become_failures_or_skips() {
    let ctx = Context::new(RunOptions::default());
    let checks = [
        Check::fixed("budget", "synthetic", &["C2", "C3"], |_, _| Err(Error::SearchBudgetExceeded { budget: 1 })),
        Check::fixed("broken", "synthetic", &["C2"], |_, _| Err(Error::NotAbelian)),
        Check::fixed("unrelated", "synthetic", &["S3"], |_, _| Ok(Verdict::Pass(json!(null)))),
    ];
    let r = run_checks(&ctx, &keys(&["C3", "C2"]), &checks).unwrap();
    let statuses: Vec<_> = r.entries.iter().map(|e| (e.check.as_str(), e.status)).collect();
    assert_eq!(statuses, [("budget", Status::SkippedBudget), ("broken", Status::Fail)]);
    assert_eq!(r.entries[1].witness, json!({ "error": "group is not abelian" }));
    assert_eq!(r.to_json()[0]["status"], "skipped-budget");
}

#[test]
fn empty_and_unknown_selections() {
    let ctx = Context::new(RunOptions::default());
    let check = [Check::each("x", "synthetic", |_| true, |_, _| Ok(Verdict::Pass(json!(null))))];
    let r = run_checks(&ctx, &Selection::Keys(Vec::new()), &check).unwrap();
    assert!(r.entries.is_empty() && r.passed());
    assert!(matches!(run_checks(&ctx, &keys(&["NOPE"]), &check), Err(Error::UnknownName(_))));
}

#[test]
fn suite_names_parse() {
    assert_eq!(Suite::parse_list("all").unwrap(), Suite::ALL.to_vec());
    assert_eq!(Suite::parse_list("q3,graphs").unwrap(), [Suite::Q3, Suite::Graphs]);
    assert_eq!("strong-to-p".parse::<Suite>().unwrap(), Suite::StrongToP);
    assert!(Suite::parse_list("q3,nope").is_err());
    for s in Suite::ALL {
        assert_eq!(s.name().parse::<Suite>().unwrap(), s);
    }
}

#[test]
fn real_suites_on_small_groups() {
    let r = run_corpus(&keys(&["S3", "Q8", "M16", "SL23"]), &Suite::ALL, RunOptions::default()).unwrap();
    let bad: Vec<_> = r.entries.iter().filter(|e| e.status != Status::Pass).collect();
    assert!(bad.is_empty(), "{bad:#?}");
    assert!(r.entries.iter().any(|e| e.check == "quaternion-by-c3"));
    assert!(r.entries.iter().any(|e| e.check == "iwasawa-decomposition" && e.groups == ["M16"]));
}
