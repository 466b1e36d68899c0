use mirrorcheck_core::{
    hochschild_dimensions, qh_dimension, verify, Cache, HHOptions, MonomialOrder, OrderKind,
};

#[test]
fn honest_and_fast_paths_agree_with_hodge_counts() {
    for (n, a) in [(2, 6), (2, 7), (2, 8), (3, 8)] {
        let fast = hochschild_dimensions(n, a, &HHOptions::fast()).unwrap();
        let honest = hochschild_dimensions(n, a, &HHOptions::default()).unwrap();
        assert_eq!(
            (fast.hh_even, fast.hh_odd),
            (honest.hh_even, honest.hh_odd),
            "({n},{a})"
        );
        let q = qh_dimension(n, a).unwrap();
        assert_eq!(
            (honest.hh_even, honest.hh_odd),
            (q.total_even, q.total_odd),
            "({n},{a})"
        );
    }
}

#[test]
fn result_does_not_depend_on_the_order() {
    let base = hochschild_dimensions(2, 6, &HHOptions::default()).unwrap();
    for kind in [OrderKind::DegLex, OrderKind::Lex] {
        let opts = HHOptions {
            order: MonomialOrder::new(kind),
            ..Default::default()
        };
        let r = hochschild_dimensions(2, 6, &opts).unwrap();
        assert_eq!((r.hh_even, r.hh_odd), (base.hh_even, base.hh_odd));
    }
}

#[test]
fn cached_report_is_identical() {
    let dir = tempfile::tempdir().unwrap();
    let opts = HHOptions {
        cache: Some(Cache::open(dir.path()).unwrap()),
        ..Default::default()
    };
    let cold = serde_json::to_string(&verify(2, 7, &opts).unwrap()).unwrap();
    let warm = serde_json::to_string(&verify(2, 7, &opts).unwrap()).unwrap();
    let plain = serde_json::to_string(&verify(2, 7, &HHOptions::default()).unwrap()).unwrap();
    assert_eq!(cold, warm);
    assert_eq!(cold, plain);
}
