use std::time::Instant;

use derange_core::derangement::pndr;
use derange_core::pipeline::obtain_corpus;
use derange_core::sylow::{is_prime, p_part, sylow_subgroup};
use derange_core::{Caps, PermGroup, Permutation};
use num_bigint::BigUint;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

fn corpus_groups(n: usize) -> Vec<(String, PermGroup)> {
    obtain_corpus(n, None)
        .unwrap()
        .entries
        .into_iter()
        .map(|e| (e.name, e.group))
        .collect()
}

#[test]
fn orbit_stabilizer() {
    for n in 2..=10 {
        for (name, g) in corpus_groups(n) {
            for x in 0..n {
                let orbit = g.orbit(x).unwrap().len();
                let stab = g.point_stabilizer(x).unwrap();
                assert_eq!(
                    g.order(),
                    stab.order() * BigUint::from(orbit),
                    "{name}, point {x}"
                );
                assert!(stab.generators().iter().all(|s| s.fixes(x)));
            }
        }
    }
}

#[test]
fn sylow_subgroups_have_the_expected_smallest_orbit() {
    let caps = Caps::default();
    let started = Instant::now();
    let cases: Vec<(usize, String, PermGroup)> = (2..=10)
        .flat_map(|n| {
            corpus_groups(n)
                .into_iter()
                .map(move |(name, g)| (n, name, g))
        })
        .collect();
    cases.par_iter().for_each(|(n, name, g)| {
        for p in (2..=*n as u64).filter(|&p| is_prime(p) && *n as u64 % p == 0) {
            let s = sylow_subgroup(g, p, &caps).unwrap_or_else(|e| panic!("{name}, p = {p}: {e}"));
            assert_eq!(s.subgroup.order(), p_part(&g.order(), p), "{name}, p = {p}");
            assert!(g.contains_group(&s.subgroup));
            let smallest = *s.orbit_lengths().first().unwrap() as u64;
            let mut pk = 1;
            while *n as u64 % (pk * p) == 0 {
                pk *= p;
            }
            assert_eq!(smallest, pk, "{name}, p = {p}");
        }
    });
    eprintln!("sylow checks took {:?}", started.elapsed());
}

#[test]
fn pndr_is_a_conjugation_invariant() {
    let caps = Caps::default();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for n in 2..=9 {
        let points: Vec<usize> = (0..n).collect();
        for (name, g) in corpus_groups(n) {
            if g.order() > BigUint::from(100_000u32) {
                continue;
            }
            let mut images = points.clone();
            images.shuffle(&mut rng);
            let sigma = Permutation::from_images(&images).unwrap();
            let conj = PermGroup::new(
                n,
                g.generators()
                    .iter()
                    .map(|x| x.conjugate_by(&sigma))
                    .collect(),
            )
            .unwrap();
            let a = pndr(&g, &points, &caps, 1).unwrap();
            let b = pndr(&conj, &points, &caps, 2).unwrap();
            assert_eq!(a.to_rational(), b.to_rational(), "{name}");
        }
    }
}
