use nakayama::harness::{enumerate_kupisch, verify, Check};
use nakayama::{sweep, AlgebraClass, KupischSeries, NakayamaAlgebra, ProjDim, Relation, SweepConfig};

fn all_checks() -> std::collections::BTreeSet<Check> {
    Check::ALL.into()
}

#[test]
fn worked_example_verdicts() {
    let l1 = NakayamaAlgebra::from_kupisch(&KupischSeries::new(vec![3, 2, 2, 4, 3]).unwrap());
    let v = verify(&l1, &all_checks());
    assert!(v.passed());
    assert_eq!(
        (v.gldim.is_finite(), v.components, v.weights.clone(), v.chi),
        (true, 1, vec![1], 1)
    );

    let rels = [(1, 3), (2, 4), (4, 3), (5, 3)]
        .map(|(s, l)| Relation::new(s, l))
        .to_vec();
    let l2 = NakayamaAlgebra::new(5, rels).unwrap();
    let v = verify(&l2, &all_checks());
    assert!(v.passed());
    assert_eq!((v.gldim, v.weights.clone(), v.chi), (ProjDim::Infinite, vec![2], 0));

    let l3 = NakayamaAlgebra::rad_power(4, 2).unwrap();
    let v = verify(&l3, &all_checks());
    assert!(v.passed());
    assert_eq!((v.gldim, v.weights.clone(), v.chi), (ProjDim::Infinite, vec![1, 1], 2));
}

#[test]
fn same_weight_sweep() {
    let report = sweep(&SweepConfig::new(2, 6, 8).with_checks([Check::SameWeight])).unwrap();
    assert!(report.is_clean());
    assert_eq!(report.total, 3632);
}

#[test]
fn cyclic_acceptance_range_is_clean() {
    let report = sweep(&SweepConfig::new(2, 5, 7).with_classes([AlgebraClass::Cyclic])).unwrap();
    assert!(report.is_clean(), "{:?}", report.counterexamples);
    assert!(report.totals.iter().all(|t| t.class == Some(AlgebraClass::Cyclic)));
}

#[test]
fn enumeration_is_monotone_in_c_max() {
    let count = |c| enumerate_kupisch(&SweepConfig::new(2, 5, c)).count();
    let counts: Vec<usize> = (1..=7).map(count).collect();
    assert!(counts.windows(2).all(|w| w[0] < w[1]), "{counts:?}");
}

#[test]
fn thread_cap_does_not_change_results() {
    let mut config = SweepConfig::new(2, 5, 5);
    let free = sweep(&config).unwrap();
    config.threads = Some(1);
    let capped = sweep(&config).unwrap();
    assert_eq!(free.entries, capped.entries);
}

#[test]
fn counterexamples_carry_the_algebra() {
    let report = sweep(&SweepConfig::new(3, 3, 3)).unwrap();
    assert!(report.is_clean());
    let total: usize = report.totals.iter().map(|t| t.algebras).sum();
    assert_eq!(total, report.total);
}
