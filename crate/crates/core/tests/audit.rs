mod common;

use std::sync::OnceLock;

use common::{oracle_derived, oracle_indices};
use topo_index::report::{render_report, OutputFormat};
use topo_index::verify::{build_suite_graphs, corrected_prediction, errata, DerivedCache};
use topo_index::{
    generate, run_audit, smallest_counterexample, AuditReport, Family, FormulaId, SuiteSpec,
};

fn id(s: &str) -> FormulaId {
    s.parse().unwrap()
}

fn default_report() -> &'static AuditReport {
    static REPORT: OnceLock<AuditReport> = OnceLock::new();
    REPORT.get_or_init(|| run_audit(&SuiteSpec::default()).unwrap())
}

fn fails(name: &str) -> usize {
    default_report().summary_for(id(name)).unwrap().fails
}

#[test]
fn default_audit_shape() {
    let report = default_report();
    assert_eq!(report.summary.len(), 42);
    assert!(report.skipped.is_empty(), "{:?}", report.skipped);
    for s in &report.summary {
        let n = report.records_for(s.formula).count();
        assert_eq!(s.passes + s.fails, n, "{}", s.formula);
        assert!(n > 0, "{} never evaluated", s.formula);
    }
    // ordering: formula, then suite graph, then k
    let order: Vec<usize> = report.records.iter().map(|r| r.formula.ordinal()).collect();
    assert!(order.windows(2).all(|w| w[0] <= w[1]));
}

#[test]
fn exact_theorems_pass() {
    for t in (1..=11).chain([13]) {
        assert_eq!(fails(&format!("T2.{t}")), 0, "T2.{t}");
    }
}

#[test]
fn printed_t2_12_fails_where_pi1_differs_from_pi2() {
    let report = default_report();
    for r in report.records_for(id("T2.12")) {
        let pi_equal = r.graph.starts_with("path")
            || r.graph.starts_with("cycle")
            || r.graph == "complete(2)"
            || r.graph == "complete(3)"
            || r.graph == "star(2)";
        assert_eq!(r.matched, pi_equal, "{} k={}", r.graph, r.k);
    }
    let cx = smallest_counterexample(report, id("T2.12"))
        .unwrap()
        .unwrap();
    assert_eq!((cx.graph.as_str(), cx.k), ("complete(4)", 1));
}

#[test]
fn subdivision_corollaries_pass() {
    for block in ["CS_REC", "CS_REG"] {
        for i in 1..=7 {
            assert_eq!(fails(&format!("{block}_{i}")), 0, "{block}_{i}");
        }
    }
    // regular corollaries only ran on regular members
    let report = default_report();
    assert!(report
        .records_for(id("CS_REG_1"))
        .all(|r| !r.graph.starts_with("star") && !r.graph.starts_with("complete_bipartite")));
}

#[test]
fn semi_total_corollaries() {
    for i in 1..=4 {
        assert_eq!(fails(&format!("CR_REC_{i}")), 0, "CR_REC_{i}");
    }
    for i in 5..=7 {
        assert!(fails(&format!("CR_REC_{i}")) > 0, "CR_REC_{i}");
    }
    for i in [1, 2, 5] {
        assert_eq!(fails(&format!("CR_REG_{i}")), 0, "CR_REG_{i}");
    }
    for i in [3, 4, 6, 7] {
        assert!(fails(&format!("CR_REG_{i}")) > 0, "CR_REG_{i}");
    }

    let report = default_report();
    let find = |name: &str, graph: &str, k: u32| {
        report
            .records_for(id(name))
            .find(|r| r.graph == graph && r.k == k)
            .unwrap()
            .clone()
    };
    let r = find("CR_REC_6", "cycle(3)", 1);
    assert_eq!(
        (r.predicted.to_string(), r.actual.to_string()),
        ("312".into(), "408".into())
    );
    assert!(!find("CR_REC_5", "cycle(3)", 1).matched);
    // the SDD recurrence is already wrong at k = 1
    let r = find("CR_REC_7", "cycle(3)", 1);
    assert_eq!(
        (r.predicted.to_string(), r.actual.to_string()),
        ("9".into(), "21".into())
    );

    let r = find("CR_REG_6", "complete(4)", 1);
    assert_eq!(
        (r.predicted.to_string(), r.actual.to_string()),
        ("1344".into(), "1632".into())
    );
    for r in report
        .records_for(id("CR_REG_6"))
        .filter(|r| r.graph.starts_with("cycle"))
    {
        assert!(r.matched, "{} k={}", r.graph, r.k);
    }
    for name in ["CR_REG_3", "CR_REG_4", "CR_REG_7"] {
        assert!(!find(name, "cycle(3)", 1).matched, "{name}");
    }
}

#[test]
fn t2_14_counterexample() {
    let report = default_report();
    assert!(report
        .records_for(id("T2.14"))
        .filter(|r| r.k == 1)
        .all(|r| r.matched));
    let cx = smallest_counterexample(report, id("T2.14"))
        .unwrap()
        .unwrap();
    assert_eq!((cx.graph.as_str(), cx.n, cx.k), ("path(2)", 2, 2));
    assert_eq!(cx.predicted.to_string(), "19/3");
    assert_eq!(cx.actual.to_string(), "32/3");
    assert!(smallest_counterexample(report, id("T2.1"))
        .unwrap()
        .is_none());
    let cx = smallest_counterexample(report, id("CR_REG_4"))
        .unwrap()
        .unwrap();
    assert_eq!((cx.graph.as_str(), cx.k), ("cycle(3)", 0));
}

#[test]
fn records_agree_with_oracle() {
    let report = default_report();
    let (graphs, _) = build_suite_graphs(&topo_index::verify::default_families(42)).unwrap();
    for r in &report.records {
        let sg = graphs.iter().find(|g| g.descriptor == r.graph).unwrap();
        let ora = oracle_indices(&oracle_derived(
            &sg.graph,
            r.formula.transform(),
            r.k as usize,
        ));
        assert_eq!(
            r.actual.as_rational(),
            ora.get(r.formula.kind),
            "{} {} k={}",
            r.formula,
            r.graph,
            r.k
        );
        assert_eq!(r.matched, r.residual.is_zero());
        assert_eq!(r.matched, r.predicted == r.actual);
    }
}

#[test]
fn hm_identity_on_every_derived_graph() {
    let (graphs, _) = build_suite_graphs(&topo_index::verify::default_families(42)).unwrap();
    for sg in &graphs {
        for t in [
            topo_index::Transform::SubdivisionK,
            topo_index::Transform::SemiTotalK,
        ] {
            for k in 0..=4 {
                let v = topo_index::compute_all(&t.apply(&sg.graph, k));
                assert_eq!(v.hm, v.f.clone() + v.m2.clone() + v.m2.clone());
            }
        }
    }
}

#[test]
fn corrected_variants_hold_on_the_suite() {
    let (graphs, _) = build_suite_graphs(&topo_index::verify::default_families(42)).unwrap();
    let fixes: Vec<FormulaId> = errata()
        .into_iter()
        .filter(|e| e.corrected.is_some())
        .map(|e| e.formula)
        .collect();
    assert_eq!(fixes.len(), 9);
    for sg in &graphs {
        let mut cache = DerivedCache::new(&sg.graph);
        for &fid in &fixes {
            if fid.is_regular() && sg.graph.regular_degree().is_none() {
                continue;
            }
            let first = if fid.is_recurrence() { 1 } else { 0 };
            for k in first..=4u32 {
                let ctx = cache.context(fid, k).unwrap();
                let fixed = corrected_prediction(fid, &ctx).unwrap().unwrap();
                let actual = cache
                    .level(fid.transform(), k as usize)
                    .get(fid.kind)
                    .clone();
                assert_eq!(fixed, actual, "{fid} on {} k={k}", sg.descriptor);
            }
        }
    }
}

#[test]
fn below_kmin_records_do_not_count() {
    let suite = SuiteSpec {
        include_below_kmin: true,
        ..SuiteSpec::single(
            Family::Complete { a: 4 },
            3,
            vec![id("CS_REC_2"), id("T2.2"), id("T2.14")],
        )
    };
    let report = run_audit(&suite).unwrap();
    let out: Vec<_> = report.records.iter().filter(|r| !r.in_domain).collect();
    assert_eq!(out.len(), 3);
    assert!(out.iter().all(|r| !r.matched));
    let s = report.summary_for(id("CS_REC_2")).unwrap();
    assert_eq!((s.passes, s.fails), (2, 0));
    assert!(report.summary_for(id("T2.2")).unwrap().fails == 0);
}

#[test]
fn audit_is_deterministic() {
    let a = render_report(
        &run_audit(&SuiteSpec::default_with_seed(7)).unwrap(),
        OutputFormat::Json,
    );
    let b = render_report(
        &run_audit(&SuiteSpec::default_with_seed(7)).unwrap(),
        OutputFormat::Json,
    );
    assert_eq!(a, b);
    assert_eq!(
        render_report(default_report(), OutputFormat::Json),
        render_report(
            &run_audit(&SuiteSpec::default()).unwrap(),
            OutputFormat::Json
        )
    );
}

#[test]
fn disconnected_input_is_skipped() {
    let g = generate(&Family::ErdosRenyi {
        n: 8,
        p: 0.0,
        seed: 0,
    })
    .unwrap();
    assert!(!g.is_connected());
    let suite = SuiteSpec::single(
        Family::ErdosRenyi {
            n: 8,
            p: 0.0,
            seed: 0,
        },
        2,
        vec![id("T2.1")],
    );
    let report = run_audit(&suite).unwrap();
    assert!(report.records.is_empty());
    assert_eq!(report.skipped.len(), 1);
}
