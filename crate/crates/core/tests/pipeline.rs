use ringgenus_core::catalog::{
    applicable_cases, builtin_entries, search_witnesses, verify_all, Recipe,
};
use ringgenus_core::finring::DEFAULT_ENUMERATION_BUDGET;
use ringgenus_core::{
    build_from_spec, direct_product, matrix_ring, upper_triangular_ring, validate, Limits,
    RingError, RingSpec,
};

#[test]
fn every_builtin_entry_verifies() {
    let report = verify_all(&builtin_entries()).unwrap();
    assert!(report.passed(), "{}", report.table());
    assert_eq!(report.matched, 9);
    for row in report.rows.iter().filter(|r| r.theorem_case.is_some()) {
        assert!(row.decomposition.all_cliques());
        assert!(row.matched_outcome.is_some(), "{}", row.name);
        assert!(row.hypothesis.as_ref().unwrap().passed());
    }
}

#[test]
fn report_genus_terms_reproduce_the_genus() {
    let report = verify_all(&builtin_entries()).unwrap();
    let json: serde_json::Value = serde_json::from_str(&report.to_json()).unwrap();
    for row in json["rows"].as_array().unwrap() {
        let sum: u64 = row["genus_terms"]
            .as_array()
            .unwrap()
            .iter()
            .map(|t| t[1].as_u64().unwrap() * t[2].as_u64().unwrap())
            .sum();
        assert_eq!(
            sum,
            row["genus"]["value"].as_u64().unwrap(),
            "{}",
            row["name"]
        );
    }
}

#[test]
fn spec_round_trip_through_tables() {
    let limits = Limits::default();
    let recipe = Recipe::product(Recipe::UpperTriangular(2), Recipe::Integers(3));
    let ring = recipe.build(&limits).unwrap();
    let spec = RingSpec::from_table(&ring, recipe.additive_group()).unwrap();
    let back = build_from_spec(&RingSpec::from_json(&spec.to_json()).unwrap(), &limits).unwrap();
    assert_eq!(back.mul_table(), ring.mul_table());
    assert_eq!(back.center().len(), 6);
    assert!(validate(&back).is_ring());
}

#[test]
fn product_centers_multiply() {
    let limits = Limits::default();
    let rings = [
        matrix_ring(2, &limits).unwrap(),
        upper_triangular_ring(2, &limits).unwrap(),
        ringgenus_core::finring::integers_mod(3, &limits).unwrap(),
    ];
    for r in &rings {
        for s in &rings {
            if r.order() * s.order() > limits.max_order {
                continue;
            }
            let rs = direct_product(r, s, &limits).unwrap();
            assert_eq!(rs.center().len(), r.center().len() * s.center().len());
        }
    }
}

#[test]
fn order_twelve_search_is_exhaustive_and_empty() {
    assert_eq!(applicable_cases(12, 1).len(), 2);
    let s = search_witnesses(12, 1, DEFAULT_ENUMERATION_BUDGET).unwrap();
    assert!(s.found_none());
    assert_eq!(s.summary(), "no witness within budget");
    assert_eq!(s.groups.len(), 1);
    assert_eq!(s.vacuous_cases, Vec::<String>::new());
}

#[test]
fn search_over_budget_is_an_error() {
    let err = search_witnesses(16, 2, 10).unwrap_err();
    assert!(matches!(
        err,
        ringgenus_core::CatalogError::Ring(RingError::BudgetExceeded { .. })
    ));
}
