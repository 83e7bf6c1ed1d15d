use lincover::{
    d_sequences, good_count_bruteforce, good_count_formula, FieldSpec, Hyperplane, EXHAUSTION_CAP,
};
use num_bigint::{BigInt, BigUint};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn formula_matches_exhaustive_count() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for q in [2, 3, 4, 5, 7, 8, 9] {
        let f = FieldSpec::new(q).unwrap();
        for d in 1..=5 {
            for k in 1..=d {
                let expected = good_count_formula(q, d, k).unwrap();
                for _ in 0..20 {
                    let a = Hyperplane::random_with_support(&f, d, k, &mut rng).unwrap();
                    let got = good_count_bruteforce(&f, &a, EXHAUSTION_CAP).unwrap();
                    assert_eq!(BigUint::from(got), expected, "q={q} d={d} a={:?}", a.normal);
                }
            }
        }
    }
}

#[test]
fn count_does_not_depend_on_the_modulus() {
    let alternatives: [(u32, &[u32]); 4] = [
        (2, &[1, 0, 1, 1]),
        (3, &[2, 1, 1]),
        (2, &[1, 0, 0, 1, 1]),
        (5, &[2, 1, 1]),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for (p, m) in alternatives {
        let alt = FieldSpec::with_modulus(p, m).unwrap();
        let pinned = FieldSpec::new(alt.q).unwrap();
        assert_ne!(alt.modulus, pinned.modulus);
        for d in 2..=4 {
            for k in 1..=d {
                let a = Hyperplane::random_with_support(&alt, d, k, &mut rng).unwrap();
                assert_eq!(
                    good_count_bruteforce(&alt, &a, EXHAUSTION_CAP).unwrap(),
                    good_count_bruteforce(&pinned, &a, EXHAUSTION_CAP).unwrap()
                );
            }
        }
    }
}

#[test]
fn formula_is_bounded() {
    for q in [
        2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32,
    ] {
        for d in 1..=10 {
            let bound = BigUint::from(q - 1).pow(d as u32 - 1);
            for k in 1..=d {
                assert!(good_count_formula(q, d, k).unwrap() <= bound);
            }
        }
    }
}

#[test]
fn d1_satisfies_the_recurrence() {
    for q in [2, 3, 4, 5, 7, 8, 9, 11, 13, 16] {
        let d1 = |j| d_sequences(q, j).unwrap().1;
        for j in 3..=20 {
            let qq = BigInt::from(q);
            assert_eq!(d1(j), (&qq - 2) * d1(j - 1) + (&qq - 1) * d1(j - 2));
        }
        for j in 2..=20 {
            assert_eq!(
                d_sequences(q, j).unwrap().0,
                BigInt::from(q - 1) * d1(j - 1)
            );
        }
    }
}

/// Direct count of nonzero tuples summing to 0 and to 1.
fn d_by_enumeration(f: &FieldSpec, j: usize) -> (u64, u64) {
    let q = f.q as u64;
    let mut counts = (0, 0);
    for code in 0..(q - 1).pow(j as u32) {
        let mut c = code;
        let mut sum = 0;
        for _ in 0..j {
            sum = f.add(sum, (c % (q - 1) + 1) as u8);
            c /= q - 1;
        }
        match sum {
            0 => counts.0 += 1,
            1 => counts.1 += 1,
            _ => {}
        }
    }
    counts
}

#[test]
fn d_sequences_match_enumeration() {
    for q in [2, 3, 4, 5, 8, 9] {
        let f = FieldSpec::new(q).unwrap();
        for j in 1..=5 {
            let (d0, d1) = d_by_enumeration(&f, j);
            assert_eq!(
                d_sequences(q, j).unwrap(),
                (BigInt::from(d0), BigInt::from(d1)),
                "q={q} j={j}"
            );
        }
    }
}

fn supported_q() -> impl Strategy<Value = u32> {
    prop::sample::select(vec![
        2u32, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32,
    ])
}

proptest! {
    #[test]
    fn field_axioms(q in supported_q(), a in 0u32..32, b in 0u32..32, c in 0u32..32) {
        let f = FieldSpec::new(q).unwrap();
        let (a, b, c) = ((a % q) as u8, (b % q) as u8, (c % q) as u8);
        prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        prop_assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.add(a, f.neg(a)), 0);
        if a != 0 {
            prop_assert_eq!(f.mul(a, f.inv(a)), 1);
        }
    }
}
