//! Vectors with every coordinate nonzero lying on a hyperplane.

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::field::{prime_power, FieldSpec};
use crate::hyperplane::{space_size, Hyperplane};

fn check_q(q: u32) -> Result<BigInt> {
    prime_power(q).ok_or(Error::UnsupportedField(q))?;
    Ok(BigInt::from(q))
}

/// `((q-1)^j - (-1)^j) / q`, exact.
fn d1(q: &BigInt, j: usize) -> BigInt {
    let m = q - 1u32;
    let sign = if j % 2 == 0 {
        BigInt::from(1)
    } else {
        BigInt::from(-1)
    };
    let num = m.pow(j as u32) - sign;
    debug_assert!((&num % q).is_zero());
    num / q
}

/// Closed-form count of vectors with no zero coordinate on a hyperplane of
/// `GF(q)^d` whose normal has `k` nonzero coordinates.
pub fn good_count_formula(q: u32, d: usize, k: usize) -> Result<BigUint> {
    let qb = check_q(q)?;
    if k == 0 || k > d {
        return Err(Error::InvalidArgument(format!(
            "need 1 <= k <= d, got k = {k}, d = {d}"
        )));
    }
    let free = (&qb - 1u32).pow((d - k) as u32);
    let count = free * (&qb - 1u32) * d1(&qb, k - 1);
    debug_assert!(!count.is_negative());
    Ok(count.to_biguint().unwrap())
}

/// The same count by walking all of `GF(q)^d`.
pub fn good_count_bruteforce(field: &FieldSpec, a: &Hyperplane, cap: u64) -> Result<u64> {
    space_size(field.q, a.dimension(), cap)?;
    let mut count = 0;
    crate::hyperplane::for_each_vector(field.q, a.dimension(), |v| {
        if v.iter().all(|&x| x != 0) && a.contains(field, v) {
            count += 1;
        }
    });
    Ok(count)
}

/// `(D0(j), D1(j))`: the number of `(x_1..x_j)` with no zero entry and
/// `Σ x_i = 0`, respectively `= 1`, for `j >= 1`.
pub fn d_sequences(q: u32, j: usize) -> Result<(BigInt, BigInt)> {
    let qb = check_q(q)?;
    if j == 0 {
        return Err(Error::InvalidArgument("j must be at least 1".into()));
    }
    let d0 = (&qb - 1u32) * d1(&qb, j - 1);
    Ok((d0, d1(&qb, j)))
}
