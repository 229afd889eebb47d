use seaweed::enumeration::{
    build_table, census_c21, census_c22, census_cnk, homotopy_census, index_row_from_homotopy,
    CensusLimits,
};
use seaweed::formulas::{c21, c22, c_diag1, c_diag2, c_diag3};
use seaweed::golden;
use seaweed::winding::wind_down;
use seaweed::{HomotopyType, Oracle, SeaweedType, TableKind};

fn limits() -> CensusLimits {
    CensusLimits::default()
}

#[test]
fn diagonals_match_closed_forms() {
    for n in 1..=12u32 {
        let row = census_cnk(n, 4, &limits()).unwrap();
        let last = n as usize - 1;
        assert_eq!(row[last], c_diag1::<u64>(n).unwrap(), "n={n}");
        if n >= 2 {
            assert_eq!(row[last - 1], c_diag2::<u64>(n).unwrap(), "n={n}");
        }
        if n >= 3 {
            assert_eq!(row[last - 2], c_diag3::<u64>(n).unwrap(), "n={n}");
        }
        assert_eq!(row.iter().sum::<u64>(), 1 << (2 * (n - 1)));
    }
}

#[test]
fn worker_count_does_not_change_rows() {
    let reference = census_cnk(10, 1, &limits()).unwrap();
    for workers in [2, 3, 4, 7, 16] {
        assert_eq!(
            census_cnk(10, workers, &limits()).unwrap(),
            reference,
            "workers={workers}"
        );
    }
}

#[test]
fn tables_match_golden() {
    for (kind, max_n) in [
        (TableKind::Cnk, 10),
        (TableKind::C21, 12),
        (TableKind::C22, 11),
    ] {
        let built = build_table(kind, max_n, Oracle::Gcd, 4, &limits()).unwrap();
        assert!(
            built.mismatches_against(&golden::table(kind)).is_empty(),
            "{kind}"
        );
    }
}

#[test]
fn restricted_censuses_match_formulas() {
    for n in 2..=12u32 {
        let row = census_c21(n).unwrap();
        for k in 0..n {
            assert_eq!(row[k as usize], c21::<u64>(n, k).unwrap());
        }
    }
    for n in 2..=14u32 {
        let gcd = census_c22(n, Oracle::Gcd, &limits()).unwrap();
        assert_eq!(
            census_c22(n, Oracle::Meander, &limits()).unwrap(),
            gcd,
            "n={n}"
        );
        for k in 0..n {
            assert_eq!(gcd[k as usize], c22::<u64>(n, k).unwrap());
        }
    }
}

#[test]
fn homotopy_census_collapses_to_index_rows() {
    for n in 1..=10u32 {
        let census = homotopy_census(n, &limits()).unwrap();
        assert_eq!(census.values().sum::<u64>(), 1 << (2 * (n - 1)));
        assert_eq!(
            index_row_from_homotopy(n, &census).unwrap(),
            census_cnk(n, 1, &limits()).unwrap(),
            "n={n}"
        );
    }
}

#[test]
fn equal_index_witnesses_land_in_distinct_classes() {
    let census = homotopy_census(8, &limits()).unwrap();
    let h11: HomotopyType = "H(1,1)".parse().unwrap();
    let h2: HomotopyType = "H(2)".parse().unwrap();
    assert!(census[&h11] > 0 && census[&h2] > 0);
    let witness = |s: &str| wind_down(&s.parse::<SeaweedType>().unwrap()).1.canonical();
    assert_eq!(witness("5|3/3|3|2"), h11);
    assert_eq!(witness("4|4/2|4|2"), h2);
}

#[test]
fn limits_are_enforced() {
    let tight = CensusLimits {
        full_pairs: 5,
        meander_c22: 6,
    };
    assert!(matches!(
        census_cnk(6, 1, &tight),
        Err(seaweed::Error::LimitExceeded { n: 6, limit: 5, .. })
    ));
    assert!(homotopy_census(6, &tight).is_err());
    assert!(census_c22(7, Oracle::Meander, &tight).is_err());
    assert!(census_c22(7, Oracle::Gcd, &tight).is_ok());
}
