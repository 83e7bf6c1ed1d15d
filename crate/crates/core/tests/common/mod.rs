//! Brute-force oracles shared by the integration tests. The oracles work
//! on explicit element lists and never touch the library's class,
//! normal-subgroup or quotient machinery.
#![allow(dead_code)]

use std::collections::{BTreeMap, HashSet};

use derange_core::group::ElementIndex;
use derange_core::subdirect::{goursat_enumerate, subdirect_group, Factor};
use derange_core::{Caps, PermGroup, Permutation};

/// Every element of `g`.
pub fn elements(g: &PermGroup) -> Vec<Permutation> {
    g.elements(u64::MAX).unwrap().collect()
}

/// `G1 × G2` acting on `Ω1 ⊔ Ω2`.
pub fn direct_product(g1: &PermGroup, g2: &PermGroup) -> PermGroup {
    let id1 = Permutation::identity(g1.degree());
    let id2 = Permutation::identity(g2.degree());
    let mut gens: Vec<Permutation> = g1.generators().iter().map(|g| g.direct_sum(&id2)).collect();
    gens.extend(g2.generators().iter().map(|h| id1.direct_sum(h)));
    PermGroup::new(g1.degree() + g2.degree(), gens).unwrap()
}

/// Both coordinate projections of `h ≤ G1 × G2` are onto.
pub fn is_subdirect(h: &PermGroup, g1: &PermGroup, g2: &PermGroup) -> bool {
    let n1 = g1.degree();
    let left: Vec<usize> = (0..n1).collect();
    let right: Vec<usize> = (n1..n1 + g2.degree()).collect();
    h.induced_action(&left).unwrap().order() == g1.order()
        && h.induced_action(&right).unwrap().order() == g2.order()
}

/// Is `a^σ = b` for some `σ` in `ambient`?
pub fn conjugate_in(ambient: &[Permutation], a: &PermGroup, b: &PermGroup) -> bool {
    a.order() == b.order()
        && ambient.iter().any(|s| {
            a.generators()
                .iter()
                .all(|g| b.contains(&g.conjugate_by(s)))
        })
}

/// Cheap conjugation invariant: order, orbit lengths, cycle-type counts.
pub fn invariant(g: &PermGroup) -> (u64, Vec<usize>, BTreeMap<Vec<usize>, usize>) {
    let mut orbits: Vec<usize> = g.orbits().iter().map(Vec::len).collect();
    orbits.sort_unstable();
    let mut counts = BTreeMap::new();
    for x in g.elements(u64::MAX).unwrap() {
        *counts.entry(x.cycle_type()).or_insert(0) += 1;
    }
    (g.order_u64().unwrap(), orbits, counts)
}

/// Every subgroup of `ambient`, as exact element sets, found by closing
/// each known subgroup under one more element until nothing new appears.
pub fn all_subgroups(ambient: &PermGroup) -> Vec<PermGroup> {
    let index = ElementIndex::new(ambient.chain()).unwrap();
    let all = elements(ambient);
    let key = |g: &PermGroup| -> Vec<u64> {
        let mut r: Vec<u64> = g
            .elements(u64::MAX)
            .unwrap()
            .map(|x| index.rank(&x).unwrap())
            .collect();
        r.sort_unstable();
        r
    };
    let trivial = PermGroup::trivial(ambient.degree());
    let mut seen: HashSet<Vec<u64>> = HashSet::from([key(&trivial)]);
    let mut found = vec![trivial];
    let mut i = 0;
    while i < found.len() {
        let h = found[i].clone();
        for g in &all {
            if h.contains(g) {
                continue;
            }
            let k = h.closure(std::slice::from_ref(g));
            if seen.insert(key(&k)) {
                found.push(k);
            }
        }
        i += 1;
    }
    found
}

/// One subgroup per conjugacy class of subgroups of `ambient`, each with
/// the size of its class.
pub fn subgroup_classes(ambient: &PermGroup) -> Vec<(PermGroup, u64)> {
    let all = elements(ambient);
    let index = ElementIndex::new(ambient.chain()).unwrap();
    let rank = |g: &Permutation| index.rank(g).unwrap() as usize;
    let order = ambient.order_u64().unwrap();
    let mut classes: Vec<(PermGroup, u64)> = Vec::new();
    let mut keys = Vec::new();
    let mut i = 0;
    let trivial = PermGroup::trivial(ambient.degree());
    keys.push(invariant(&trivial));
    classes.push((trivial, 1));
    while i < classes.len() {
        let h = classes[i].0.clone();
        let mut normalizer = h.clone();
        for s in &all {
            if !normalizer.contains(s)
                && h.generators()
                    .iter()
                    .all(|g| h.contains(&g.conjugate_by(s)))
            {
                normalizer = normalizer.closure(std::slice::from_ref(s));
            }
        }
        classes[i].1 = order / normalizer.order_u64().unwrap();
        // <H, g> changes only by conjugation when g moves under N(H)
        // conjugation or left multiplication by H
        let mut covered = vec![false; all.len()];
        for g in &all {
            if covered[rank(g)] {
                continue;
            }
            covered[rank(g)] = true;
            let mut stack = vec![g.clone()];
            while let Some(x) = stack.pop() {
                let next = normalizer
                    .generators()
                    .iter()
                    .map(|s| x.conjugate_by(s))
                    .chain(h.generators().iter().map(|t| t * &x));
                for y in next {
                    if !covered[rank(&y)] {
                        covered[rank(&y)] = true;
                        stack.push(y);
                    }
                }
            }
            if h.contains(g) {
                continue;
            }
            let k = h.closure(std::slice::from_ref(g));
            let key = invariant(&k);
            let known = classes
                .iter()
                .zip(&keys)
                .any(|((c, _), ck)| *ck == key && conjugate_in(&all, &k, c));
            if !known {
                keys.push(key);
                classes.push((k, 0));
            }
        }
        i += 1;
    }
    classes
}

/// Transitive groups of degree `n ≤ 5` straight from the raw subgroup scan
/// of `Sym(n)`, one per conjugacy class.
pub fn transitive_by_raw_scan(n: usize) -> Vec<PermGroup> {
    let sym = PermGroup::symmetric(n);
    let all = elements(&sym);
    let mut reps: Vec<PermGroup> = Vec::new();
    for h in all_subgroups(&sym)
        .into_iter()
        .filter(PermGroup::is_transitive)
    {
        if !reps.iter().any(|r| conjugate_in(&all, &h, r)) {
            reps.push(h);
        }
    }
    reps
}

/// Compares Goursat enumeration for `G1 × G2` with the brute-force scan:
/// with dedup the two lists must match up to conjugacy one for one, and
/// without dedup the number of descriptors must equal the number of
/// subdirect subgroups.
pub fn goursat_vs_bruteforce(g1: &PermGroup, g2: &PermGroup) -> Result<usize, String> {
    let caps = Caps::default();
    let ambient = direct_product(g1, g2);
    let all = elements(&ambient);
    let brute: Vec<(PermGroup, u64)> = subgroup_classes(&ambient)
        .into_iter()
        .filter(|(h, _)| is_subdirect(h, g1, g2))
        .collect();
    let keys: Vec<_> = brute.iter().map(|(h, _)| invariant(h)).collect();
    let f1 = Factor::new(g1.clone(), &caps, 1).map_err(|e| e.to_string())?;
    let f2 = Factor::new(g2.clone(), &caps, 2).map_err(|e| e.to_string())?;
    let dedup = goursat_enumerate(&f1, &f2, &caps, true).map_err(|e| e.to_string())?;
    if dedup.len() != brute.len() {
        return Err(format!(
            "{} classes from Goursat, {} by brute force",
            dedup.len(),
            brute.len()
        ));
    }
    let mut hit = vec![false; brute.len()];
    for d in &dedup {
        let h = subdirect_group(d);
        if !is_subdirect(&h, g1, g2) || !ambient.contains_group(&h) {
            return Err(format!(
                "descriptor of order {} is not a subdirect product",
                h.order()
            ));
        }
        let key = invariant(&h);
        let matches: Vec<usize> = (0..brute.len())
            .filter(|&i| keys[i] == key && conjugate_in(&all, &h, &brute[i].0))
            .collect();
        if matches.len() != 1 || hit[matches[0]] {
            return Err(format!(
                "descriptor of order {} matched classes {matches:?}",
                h.order()
            ));
        }
        hit[matches[0]] = true;
    }
    let full = goursat_enumerate(&f1, &f2, &caps, false).map_err(|e| e.to_string())?;
    let total: u64 = brute.iter().map(|(_, size)| size).sum();
    if full.len() as u64 != total {
        return Err(format!(
            "{} descriptors without dedup, {total} subdirect subgroups",
            full.len()
        ));
    }
    Ok(brute.len())
}
