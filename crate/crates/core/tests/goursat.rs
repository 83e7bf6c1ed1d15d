mod common;

use common::{conjugate_in, direct_product, elements, goursat_vs_bruteforce};
use derange_core::pipeline::enumerate_transitive;
use derange_core::subdirect::{goursat_enumerate, subdirect_derangement, subdirect_group, Factor};
use derange_core::{Caps, PermGroup};

fn small_groups() -> Vec<(String, PermGroup)> {
    (2..=4)
        .flat_map(|n| enumerate_transitive(n).unwrap().entries)
        .map(|e| (e.name, e.group))
        .collect()
}

#[test]
fn goursat_matches_bruteforce_on_small_pairs() {
    let groups = small_groups();
    let mut checked = 0;
    for i in 0..groups.len() {
        for j in i..groups.len() {
            let (a, g1) = &groups[i];
            let (b, g2) = &groups[j];
            if g1.order_u64().unwrap() * g2.order_u64().unwrap() > 600 {
                continue;
            }
            goursat_vs_bruteforce(g1, g2).unwrap_or_else(|e| panic!("{a} x {b}: {e}"));
            checked += 1;
        }
    }
    assert!(checked >= 30);
}

#[test]
fn conjugate_descriptors_share_a_verdict() {
    let caps = Caps::default();
    let s3 = PermGroup::symmetric(3);
    let d8 = enumerate_transitive(4)
        .unwrap()
        .entries
        .into_iter()
        .find(|e| e.group.order_u64() == Some(8))
        .unwrap()
        .group;
    for (g1, g2) in [(s3.clone(), s3.clone()), (d8.clone(), d8.clone()), (s3, d8)] {
        let ambient = elements(&direct_product(&g1, &g2));
        let f1 = Factor::new(g1, &caps, 1).unwrap();
        let f2 = Factor::new(g2, &caps, 2).unwrap();
        let all = goursat_enumerate(&f1, &f2, &caps, false).unwrap();
        let groups: Vec<PermGroup> = all.iter().map(|d| subdirect_group(d)).collect();
        let verdicts: Vec<bool> = all
            .iter()
            .map(|d| subdirect_derangement(d, &caps).unwrap().is_some())
            .collect();
        for i in 0..all.len() {
            for j in i + 1..all.len() {
                if conjugate_in(&ambient, &groups[i], &groups[j]) {
                    assert_eq!(verdicts[i], verdicts[j]);
                }
            }
        }
    }
}
