use lincover::{
    check_cover, min_cover_search, tight_cover_construct, valid_covers, FieldSpec, EXHAUSTION_CAP,
    SEARCH_BUDGET,
};

#[test]
fn minimum_cover_is_tight() {
    for (q, d) in [
        (2, 2),
        (2, 3),
        (3, 2),
        (2, 4),
        (3, 3),
        (4, 2),
        (5, 2),
        (2, 5),
    ] {
        let f = FieldSpec::new(q).unwrap();
        let m = min_cover_search(&f, d, SEARCH_BUDGET, EXHAUSTION_CAP)
            .unwrap()
            .unwrap();
        let tight = tight_cover_construct(&f, d, EXHAUSTION_CAP).unwrap();
        assert_eq!(m.size, d + q as usize - 1, "q={q} d={d}");
        assert_eq!(tight.len(), m.size);
        assert!(check_cover(&f, &m.witness, EXHAUSTION_CAP)
            .unwrap()
            .is_valid_cover());
    }
}

#[test]
fn every_cover_respects_the_bound() {
    for (q, d) in [(2, 2), (2, 3), (3, 2), (2, 4), (3, 3), (4, 2)] {
        let f = FieldSpec::new(q).unwrap();
        let covers =
            valid_covers(&f, d, d + q as usize + 1, SEARCH_BUDGET, EXHAUSTION_CAP).unwrap();
        assert!(!covers.is_empty());
        for c in &covers {
            let check = check_cover(&f, c, EXHAUSTION_CAP).unwrap();
            assert!(check.is_valid_cover());
            assert!(check.bound_ok);
            assert!(d + q as usize - 1 <= c.len());
        }
    }
}

#[test]
fn three_lines_do_not_cover_the_ternary_plane() {
    let f = FieldSpec::new(3).unwrap();
    assert!(valid_covers(&f, 2, 3, SEARCH_BUDGET, EXHAUSTION_CAP)
        .unwrap()
        .is_empty());
    let four = valid_covers(&f, 2, 4, SEARCH_BUDGET, EXHAUSTION_CAP).unwrap();
    assert_eq!(four.len(), 1);
}
