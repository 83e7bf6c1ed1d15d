//! Permutations of `{0, .., m-1}` stored as image arrays.
//!
//! Permutations act on the right: `x^g` is `g.image(x)`, and the product
//! `f * g` means "apply `f`, then `g`".

use std::fmt;
use std::ops::Mul;

use num_integer::Integer;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Point index type used inside image arrays.
pub type Point = u16;

/// Largest supported degree for a single permutation.
pub const MAX_DEGREE: usize = Point::MAX as usize;

/// A bijection of `{0, .., degree-1}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<Point>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        assert!(
            degree >= 1 && degree <= MAX_DEGREE,
            "degree {degree} out of range"
        );
        Self {
            images: (0..degree).map(|i| i as Point).collect(),
        }
    }

    /// Builds a permutation from an image array, checking that it is a
    /// bijection.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        if images.is_empty() {
            return Err(Error::NotBijection("empty image array".into()));
        }
        if images.len() > MAX_DEGREE {
            return Err(Error::NotBijection(format!(
                "degree {} too large",
                images.len()
            )));
        }
        let mut seen = vec![false; images.len()];
        for (i, &x) in images.iter().enumerate() {
            if x >= images.len() {
                return Err(Error::NotBijection(format!(
                    "image {x} of point {i} is outside 0..{}",
                    images.len()
                )));
            }
            if std::mem::replace(&mut seen[x], true) {
                return Err(Error::NotBijection(format!("point {x} is hit twice")));
            }
        }
        Ok(Self {
            images: images.iter().map(|&x| x as Point).collect(),
        })
    }

    /// Builds a permutation of the given degree from disjoint cycles.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (i, &x) in cycle.iter().enumerate() {
                if x >= degree {
                    return Err(Error::NotBijection(format!(
                        "cycle point {x} >= degree {degree}"
                    )));
                }
                if std::mem::replace(&mut touched[x], true) {
                    return Err(Error::NotBijection(format!(
                        "point {x} appears in two cycles"
                    )));
                }
                images[x] = cycle[(i + 1) % cycle.len()];
            }
        }
        Self::from_images(&images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn image(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    pub fn images(&self) -> &[Point] {
        &self.images
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize).collect()
    }

    /// `x ↦ g(f(x))`: apply `self` first, then `g`.
    pub fn compose(&self, g: &Permutation) -> Result<Permutation> {
        if self.degree() != g.degree() {
            return Err(Error::DegreeMismatch {
                expected: self.degree(),
                found: g.degree(),
            });
        }
        Ok(self * g)
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as Point;
        }
        Permutation { images: inv }
    }

    pub fn pow(&self, mut e: u64) -> Permutation {
        let mut base = self.clone();
        let mut acc = Permutation::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// `c⁻¹ · self · c`, which maps `x^c ↦ (x^self)^c`.
    pub fn conjugate_by(&self, c: &Permutation) -> Permutation {
        let mut out = vec![0; self.images.len()];
        for (x, &y) in self.images.iter().enumerate() {
            out[c.images[x] as usize] = c.images[y as usize];
        }
        Permutation { images: out }
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &x)| i == x as usize)
    }

    pub fn fixes(&self, x: usize) -> bool {
        self.images[x] as usize == x
    }

    pub fn fixed_points(&self) -> usize {
        self.images
            .iter()
            .enumerate()
            .filter(|&(i, &x)| i == x as usize)
            .count()
    }

    /// Smallest point moved, if any.
    pub fn first_moved(&self) -> Option<usize> {
        self.images
            .iter()
            .enumerate()
            .position(|(i, &x)| i != x as usize)
    }

    /// Cycle lengths, including fixed points, sorted in decreasing order.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut seen = vec![false; self.degree()];
        let mut lengths = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.image(x);
                len += 1;
            }
            lengths.push(len);
        }
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        lengths
    }

    pub fn order(&self) -> u64 {
        self.cycle_type()
            .into_iter()
            .fold(1u64, |acc, l| acc.lcm(&(l as u64)))
    }

    /// Disjoint cycles of length at least two, each starting at its
    /// smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.fixes(start) {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x);
                x = self.image(x);
            }
            out.push(cycle);
        }
        out
    }

    /// Restriction to an invariant point list, relabelled so that
    /// `points[i]` becomes `i`. `position` maps original points to their
    /// index in `points`.
    pub(crate) fn restrict(&self, points: &[usize], position: &[usize]) -> Permutation {
        Permutation {
            images: points
                .iter()
                .map(|&x| position[self.image(x)] as Point)
                .collect(),
        }
    }

    /// Places `self` and `other` side by side on `degree + other.degree`
    /// points; `other` is shifted up by `self.degree()`.
    pub fn direct_sum(&self, other: &Permutation) -> Permutation {
        let shift = self.degree() as Point;
        let mut images = self.images.clone();
        images.extend(other.images.iter().map(|&x| x + shift));
        Permutation { images }
    }
}

impl Mul for &Permutation {
    type Output = Permutation;

    /// Left-to-right product: `(f * g)(x) = g(f(x))`.
    fn mul(self, g: &Permutation) -> Permutation {
        assert_eq!(self.degree(), g.degree(), "degree mismatch in product");
        Permutation {
            images: self.images.iter().map(|&x| g.images[x as usize]).collect(),
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            write!(f, "(")?;
            for (i, x) in c.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{}]{}", self.degree(), self)
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.images.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let images = Vec::<usize>::deserialize(d)?;
        Permutation::from_images(&images).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(images: &[usize]) -> Permutation {
        Permutation::from_images(images).unwrap()
    }

    #[test]
    fn compose_examples() {
        let id = Permutation::identity(3);
        assert_eq!(id.compose(&p(&[1, 2, 0])).unwrap(), p(&[1, 2, 0]));
        let f = p(&[1, 0, 2]);
        assert!(f.compose(&f).unwrap().is_identity());
        // 0 -> 1 -> 0, 1 -> 2 -> 2, 2 -> 0 -> 1
        assert_eq!(
            p(&[1, 2, 0]).compose(&p(&[1, 0, 2])).unwrap(),
            p(&[0, 2, 1])
        );
    }

    #[test]
    fn compose_rejects_mismatched_degrees() {
        let err = p(&[1, 0]).compose(&p(&[0, 1, 2])).unwrap_err();
        assert!(matches!(
            err,
            Error::DegreeMismatch {
                expected: 2,
                found: 3
            }
        ));
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::from_images(&[0, 0, 1]).is_err());
        assert!(Permutation::from_images(&[0, 3, 1]).is_err());
        assert!(Permutation::from_images(&[]).is_err());
    }

    #[test]
    fn cycles_and_order() {
        let g = Permutation::from_cycles(6, &[&[0, 1, 2], &[3, 4]]).unwrap();
        assert_eq!(g.cycle_type(), vec![3, 2, 1]);
        assert_eq!(g.order(), 6);
        assert_eq!(g.to_string(), "(0 1 2)(3 4)");
        assert_eq!(Permutation::identity(4).to_string(), "()");
        assert_eq!(g.pow(6), Permutation::identity(6));
        assert_eq!(g.pow(3).fixed_points(), 4);
    }

    #[test]
    fn conjugation_relabels_cycles() {
        let g = Permutation::from_cycles(4, &[&[0, 1]]).unwrap();
        let c = Permutation::from_cycles(4, &[&[1, 2, 3]]).unwrap();
        let h = g.conjugate_by(&c);
        assert_eq!(h, Permutation::from_cycles(4, &[&[0, 2]]).unwrap());
        assert_eq!(h, &(&c.inverse() * &g) * &c);
    }

    fn arb_perm() -> impl Strategy<Value = Permutation> {
        (1usize..=32)
            .prop_flat_map(|n| Just((0..n).collect::<Vec<usize>>()).prop_shuffle())
            .prop_map(|v| Permutation::from_images(&v).unwrap())
    }

    proptest! {
        #[test]
        fn inverse_round_trip(g in arb_perm()) {
            prop_assert!((&g * &g.inverse()).is_identity());
            prop_assert!((&g.inverse() * &g).is_identity());
        }

        #[test]
        fn serde_round_trip(g in arb_perm()) {
            let text = serde_json::to_string(&g).unwrap();
            let back: Permutation = serde_json::from_str(&text).unwrap();
            prop_assert_eq!(back, g);
        }
    }
}
