use torus_skein::assembly::{verify_theorem, VerifyOptions};
use torus_skein::charvar::TorusKnotConfig;
use torus_skein::trace::NumeratorPairing;

#[test]
fn full_pipeline_on_the_trefoil() {
    let report = verify_theorem(TorusKnotConfig::new(2, 3).unwrap(), &VerifyOptions::default());
    assert!(report.all_pass(), "{:#?}", report.checks.iter().filter(|c| !c.pass).collect::<Vec<_>>());
    let names: std::collections::HashSet<_> = report.checks.iter().map(|c| c.name.as_str()).collect();
    assert_eq!(names.len(), report.checks.len(), "check names repeat");
    assert_eq!(report.notes.len(), 1);
    assert!(!report.notes[0].pass);
}

#[test]
fn four_orbits_for_three_five() {
    let report = verify_theorem(TorusKnotConfig::new(3, 5).unwrap(), &VerifyOptions::default());
    assert!(report.all_pass());
    let count = report.check("degk_orbit_count[k=2]").unwrap();
    assert_eq!(count.witness["orbits"], 4);
    assert_eq!(count.witness["components"], 4);
}

#[test]
fn swapped_numerator_fails_trace_agreement() {
    let opts = VerifyOptions { pairing: NumeratorPairing::Swapped, max_k: 1, ..Default::default() };
    let report = verify_theorem(TorusKnotConfig::new(2, 3).unwrap(), &opts);
    let check = report.check("trace_triple_agreement").unwrap();
    assert!(!check.pass);
    assert!(!report.all_pass());
}
