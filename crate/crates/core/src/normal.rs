//! Normal subgroups as joins of normal closures of conjugacy classes.

use std::collections::HashMap;

use crate::caps::Caps;
use crate::classes::{conjugacy_classes, ConjugacyClassTable};
use crate::error::Result;
use crate::group::PermGroup;
use crate::perm::Permutation;

/// A normal subgroup together with the set of classes it contains.
struct Candidate {
    group: PermGroup,
    classes: Vec<u64>,
}

fn class_mask(group: &PermGroup, reps: &[Permutation]) -> Vec<u64> {
    let mut mask = vec![0u64; reps.len().div_ceil(64)];
    for (i, r) in reps.iter().enumerate() {
        if group.contains(r) {
            mask[i / 64] |= 1 << (i % 64);
        }
    }
    mask
}

fn is_subset(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x & !y == 0)
}

/// Every normal subgroup of `group`, sorted by order. The trivial group
/// comes first and `group` itself last.
pub fn normal_subgroups(group: &PermGroup, caps: &Caps, seed: u64) -> Result<Vec<PermGroup>> {
    let table = conjugacy_classes(group, caps, seed)?;
    Ok(normal_subgroups_from_classes(group, &table))
}

/// As [`normal_subgroups`], reusing an existing class table.
pub fn normal_subgroups_from_classes(
    group: &PermGroup,
    table: &ConjugacyClassTable,
) -> Vec<PermGroup> {
    let reps: Vec<Permutation> = table
        .classes
        .iter()
        .map(|c| c.representative.clone())
        .collect();
    let degree = group.degree();
    // A normal subgroup is a union of classes, so its class mask identifies it.
    let mut seen: HashMap<Vec<u64>, usize> = HashMap::new();
    let mut found: Vec<Candidate> = Vec::new();
    let trivial = PermGroup::trivial(degree);
    let mask = class_mask(&trivial, &reps);
    seen.insert(mask.clone(), 0);
    found.push(Candidate {
        group: trivial,
        classes: mask,
    });

    let mut principal: Vec<usize> = Vec::new();
    for r in &reps {
        if r.is_identity() {
            continue;
        }
        let n = group.normal_closure(std::slice::from_ref(r));
        let mask = class_mask(&n, &reps);
        if let Some(&i) = seen.get(&mask) {
            if !principal.contains(&i) {
                principal.push(i);
            }
            continue;
        }
        seen.insert(mask.clone(), found.len());
        principal.push(found.len());
        found.push(Candidate {
            group: n,
            classes: mask,
        });
    }

    let mut i = 0;
    while i < found.len() {
        for &j in &principal {
            if is_subset(&found[j].classes, &found[i].classes)
                || is_subset(&found[i].classes, &found[j].classes)
            {
                continue;
            }
            let join = found[i].group.closure(found[j].group.generators());
            let mask = class_mask(&join, &reps);
            if seen.contains_key(&mask) {
                continue;
            }
            seen.insert(mask.clone(), found.len());
            found.push(Candidate {
                group: join,
                classes: mask,
            });
        }
        i += 1;
    }

    let mut out: Vec<PermGroup> = found.into_iter().map(|c| c.group).collect();
    out.sort_by_cached_key(|g| g.order());
    out
}
