use gendelta::macdonald::identity_oracle_suite;

#[test]
fn oracle_suite_through_degree_four() {
    let report = identity_oracle_suite(4);
    let failures: Vec<_> = report.iter().filter(|e| !e.passed).collect();
    assert!(failures.is_empty(), "{failures:#?}");
    assert_eq!(report.len(), 4 * gendelta::macdonald::oracle::IDENTITIES.len());
}
