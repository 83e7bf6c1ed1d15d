//! Sylow subgroups.
//!
//! Enumerable groups use greedy normalizer extension. Larger groups are
//! reduced to smaller ones: an intransitive group is split along an orbit,
//! and a transitive group whose degree is prime to `p` is replaced by a
//! point stabilizer.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;

#[derive(Clone, Debug)]
pub struct SylowSubgroup {
    pub prime: u64,
    pub subgroup: PermGroup,
    pub parent_order: BigUint,
}

impl SylowSubgroup {
    /// Orbit lengths of the subgroup on all points, ascending.
    pub fn orbit_lengths(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.subgroup.orbits().iter().map(Vec::len).collect();
        v.sort_unstable();
        v
    }
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// Largest power of `p` dividing `n`.
pub fn p_part(n: &BigUint, p: u64) -> BigUint {
    let p = BigUint::from(p);
    let mut n = n.clone();
    let mut out = BigUint::one();
    loop {
        let (q, r) = n.div_rem(&p);
        if r != BigUint::ZERO {
            return out;
        }
        out *= &p;
        n = q;
    }
}

/// The `p`-part of an element: `g^m` where `m` is the `p'`-part of its order.
fn p_component(g: &Permutation, p: u64) -> Permutation {
    let mut m = g.order();
    while m % p == 0 {
        m /= p;
    }
    g.pow(m)
}

pub fn sylow_subgroup(group: &PermGroup, p: u64, caps: &Caps) -> Result<SylowSubgroup> {
    if !is_prime(p) {
        return Err(Error::InvalidArgument(format!("{p} is not prime")));
    }
    let subgroup = sylow_inner(group, p, caps)?;
    let parent_order = group.order();
    debug_assert_eq!(subgroup.order(), p_part(&parent_order, p));
    Ok(SylowSubgroup {
        prime: p,
        subgroup,
        parent_order,
    })
}

fn sylow_inner(group: &PermGroup, p: u64, caps: &Caps) -> Result<PermGroup> {
    let order = group.order();
    let target = p_part(&order, p);
    if target.is_one() {
        return Ok(PermGroup::trivial(group.degree()));
    }
    if order <= BigUint::from(caps.enumeration) {
        return greedy(group, p, &target, caps);
    }
    let orbits = group.orbits();
    let moved: Vec<&Vec<usize>> = orbits.iter().filter(|o| o.len() > 1).collect();
    if moved.len() > 1 {
        return split_along_orbit(group, moved[0], p, caps);
    }
    if let Some(orbit) = moved.first() {
        if orbit.len() as u64 % p != 0 {
            return sylow_inner(&group.point_stabilizer(orbit[0])?, p, caps);
        }
    }
    Err(Error::cap(
        "group order for Sylow subgroups",
        order,
        caps.enumeration,
    ))
}

/// Grows a `p`-subgroup by adjoining `p`-elements of its normalizer until
/// its order reaches `target`.
fn greedy(group: &PermGroup, p: u64, target: &BigUint, caps: &Caps) -> Result<PermGroup> {
    let mut sylow = PermGroup::trivial(group.degree());
    while &sylow.order() < target {
        let mut grown = false;
        for g in group.elements(caps.enumeration)? {
            if g.order() % p != 0 {
                continue;
            }
            let q = p_component(&g, p);
            if sylow.contains(&q) {
                continue;
            }
            let normalizes = sylow
                .generators()
                .iter()
                .all(|h| sylow.contains(&h.conjugate_by(&q)));
            if normalizes {
                sylow = sylow.closure(&[q]);
                grown = true;
                break;
            }
        }
        // Sylow's theorem guarantees progress while the order is short.
        assert!(grown, "no p-element normalizes a non-Sylow p-subgroup");
    }
    Ok(sylow)
}

/// For `G` with invariant set `Δ` and complement `Γ`: take a Sylow
/// subgroup of `G^Δ`, its full preimage `H`, then a Sylow subgroup of
/// `H^Γ` lifted back into `H`.
fn split_along_orbit(group: &PermGroup, delta: &[usize], p: u64, caps: &Caps) -> Result<PermGroup> {
    let first = group.restriction(delta)?;
    let p1 = sylow_inner(&group.induced_action(delta)?, p, caps)?;
    let mut gens: Vec<Permutation> = p1
        .generators()
        .iter()
        .map(|x| first.lift(x).unwrap())
        .collect();
    gens.extend(first.kernel().generators().iter().cloned());
    let h = PermGroup::new(group.degree(), gens)?;

    let gamma: Vec<usize> = (0..group.degree()).filter(|x| !delta.contains(x)).collect();
    let second = h.restriction(&gamma)?;
    let p2 = sylow_inner(&h.induced_action(&gamma)?, p, caps)?;
    let mut gens: Vec<Permutation> = p2
        .generators()
        .iter()
        .map(|x| second.lift(x).unwrap())
        .collect();
    // The kernel on Γ fixes everything outside Δ and embeds in the p-group H^Δ.
    gens.extend(second.kernel().generators().iter().cloned());
    PermGroup::new(group.degree(), gens)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sylow_subgroups_of_s4() {
        let s4 = PermGroup::symmetric(4);
        let caps = Caps::default();
        let p3 = sylow_subgroup(&s4, 3, &caps).unwrap();
        assert_eq!(p3.subgroup.order(), BigUint::from(3u32));
        let p2 = sylow_subgroup(&s4, 2, &caps).unwrap();
        assert_eq!(p2.subgroup.order(), BigUint::from(8u32));
        assert!(p2
            .subgroup
            .generators()
            .iter()
            .all(|g| g.order().is_power_of_two()));
        assert!(sylow_subgroup(&s4, 5, &caps).unwrap().subgroup.is_trivial());
        assert!(sylow_subgroup(&s4, 4, &caps).is_err());
    }

    #[test]
    fn p_parts() {
        assert_eq!(p_part(&BigUint::from(24u32), 2), BigUint::from(8u32));
        assert_eq!(p_part(&BigUint::from(24u32), 5), BigUint::one());
    }

    #[test]
    fn large_intransitive_group_is_split() {
        let caps = Caps {
            enumeration: 1000,
            ..Caps::default()
        };
        // S6 x S6 acting on 12 points
        let gens = vec![
            Permutation::from_cycles(12, &[&[0, 1, 2, 3, 4, 5]]).unwrap(),
            Permutation::from_cycles(12, &[&[0, 1]]).unwrap(),
            Permutation::from_cycles(12, &[&[6, 7, 8, 9, 10, 11]]).unwrap(),
            Permutation::from_cycles(12, &[&[6, 7]]).unwrap(),
        ];
        let g = PermGroup::new(12, gens).unwrap();
        for p in [2, 3, 5] {
            let s = sylow_subgroup(&g, p, &caps).unwrap();
            assert_eq!(s.subgroup.order(), p_part(&g.order(), p));
            assert!(g.contains_group(&s.subgroup));
        }
        // transitive with p dividing the degree is out of reach under this cap
        assert!(sylow_subgroup(&PermGroup::symmetric(7), 7, &caps)
            .unwrap_err()
            .is_resource_limit());
        let s = sylow_subgroup(&PermGroup::symmetric(7), 2, &caps).unwrap();
        assert_eq!(s.subgroup.order(), BigUint::from(16u32));
    }
}
