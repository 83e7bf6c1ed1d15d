mod common;

use common::{conjugate_in, elements, invariant, transitive_by_raw_scan};
use derange_core::blocks::is_primitive;
use derange_core::pipeline::{enumerate_transitive, imprimitive_filter};
use derange_core::PermGroup;

#[test]
fn raw_scan_agrees_with_builtin_enumeration() {
    for n in 2..=5 {
        let sym = elements(&PermGroup::symmetric(n));
        let raw = transitive_by_raw_scan(n);
        let corpus = enumerate_transitive(n).unwrap();
        assert_eq!(raw.len(), corpus.len(), "n = {n}");
        for h in &raw {
            let matches = corpus
                .entries
                .iter()
                .filter(|e| conjugate_in(&sym, h, &e.group))
                .count();
            assert_eq!(matches, 1, "n = {n}, |H| = {}", h.order());
        }
    }
}

#[test]
fn transitive_counts_up_to_degree_seven() {
    let counts: Vec<usize> = (2..=7)
        .map(|n| enumerate_transitive(n).unwrap().len())
        .collect();
    assert_eq!(counts, vec![1, 2, 5, 5, 16, 7]);
}

#[test]
fn degree_six_entries_are_pairwise_non_conjugate() {
    let corpus = enumerate_transitive(6).unwrap();
    let sym = elements(&PermGroup::symmetric(6));
    let keys: Vec<_> = corpus.entries.iter().map(|e| invariant(&e.group)).collect();
    for i in 0..corpus.len() {
        for j in i + 1..corpus.len() {
            if keys[i] == keys[j] {
                assert!(!conjugate_in(
                    &sym,
                    &corpus.entries[i].group,
                    &corpus.entries[j].group
                ));
            }
        }
    }
}

#[test]
fn imprimitive_counts() {
    // degree 6 has 16 transitive groups, of which A5, S5, A6, S6 are primitive
    let counts: Vec<usize> = (2..=7)
        .map(|n| imprimitive_filter(enumerate_transitive(n).unwrap()).len())
        .collect();
    assert_eq!(counts, vec![0, 0, 3, 0, 12, 0]);
    for e in &enumerate_transitive(6).unwrap().entries {
        assert_eq!(
            e.primitive,
            Some(is_primitive(&e.group, &(0..6).collect::<Vec<_>>()).unwrap())
        );
    }
}
