//! Permutation groups with a lazily built base and strong generating set.
//!
//! The stabilizer chain is computed by the deterministic Schreier–Sims
//! algorithm with explicit transversals. Base points are chosen in
//! increasing point order unless a prefix is prescribed.

use std::collections::VecDeque;
use std::sync::{Arc, OnceLock};

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use rand::Rng;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// One level of a stabilizer chain.
#[derive(Clone, Debug)]
pub struct Level {
    base: usize,
    /// Strong generators fixing every earlier base point.
    gens: Vec<Permutation>,
    /// Orbit of `base` in discovery order.
    orbit: Vec<usize>,
    /// `transversal[x]` maps `base` to `x`.
    transversal: Vec<Option<Permutation>>,
    inverse: Vec<Option<Permutation>>,
    /// Number of generators already checked for the orbit point at each
    /// position (Schreier generator bookkeeping).
    checked: Vec<usize>,
}

impl Level {
    fn new(base: usize, degree: usize) -> Self {
        let mut transversal = vec![None; degree];
        let mut inverse = vec![None; degree];
        transversal[base] = Some(Permutation::identity(degree));
        inverse[base] = Some(Permutation::identity(degree));
        Self {
            base,
            gens: Vec::new(),
            orbit: vec![base],
            transversal,
            inverse,
            checked: vec![0],
        }
    }

    /// Adds a generator and extends the orbit without touching existing
    /// transversal entries.
    fn add_generator(&mut self, g: Permutation) {
        self.gens.push(g);
        let mut queue: VecDeque<usize> = (0..self.orbit.len()).collect();
        while let Some(pos) = queue.pop_front() {
            let x = self.orbit[pos];
            for s in &self.gens {
                let y = s.image(x);
                if self.transversal[y].is_none() {
                    let u = self.transversal[x].as_ref().unwrap() * s;
                    self.inverse[y] = Some(u.inverse());
                    self.transversal[y] = Some(u);
                    self.orbit.push(y);
                    self.checked.push(0);
                    queue.push_back(self.orbit.len() - 1);
                }
            }
        }
    }

    pub fn base(&self) -> usize {
        self.base
    }

    pub fn orbit(&self) -> &[usize] {
        &self.orbit
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.gens
    }

    /// Coset representative mapping the base point to `x`.
    pub fn representative(&self, x: usize) -> Option<&Permutation> {
        self.transversal[x].as_ref()
    }
}

/// Base and strong generating set.
#[derive(Clone, Debug)]
pub struct StabChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabChain {
    /// Runs Schreier–Sims on `gens`. `prefix` fixes the first base points;
    /// `known_order` allows stopping as soon as the transversal sizes
    /// multiply to the order.
    pub fn build(
        degree: usize,
        gens: &[Permutation],
        prefix: &[usize],
        known_order: Option<&BigUint>,
    ) -> Self {
        let mut chain = StabChain {
            degree,
            levels: prefix.iter().map(|&b| Level::new(b, degree)).collect(),
        };
        let mut gens: Vec<Permutation> =
            gens.iter().filter(|g| !g.is_identity()).cloned().collect();
        gens.sort();
        gens.dedup();
        for g in gens {
            chain.insert(g, 0);
        }
        if chain.is_complete_for(known_order) {
            return chain;
        }
        let mut i = chain.levels.len();
        while i > 0 {
            let level = i - 1;
            match chain.find_unsifted(level) {
                None => i -= 1,
                Some(residue) => {
                    let j = chain.insert(residue, level + 1);
                    if chain.is_complete_for(known_order) {
                        break;
                    }
                    i = j + 1;
                }
            }
        }
        chain
    }

    fn is_complete_for(&self, known_order: Option<&BigUint>) -> bool {
        known_order.is_some_and(|o| &self.order() == o)
    }

    /// Adds `h` (which fixes the base points before `from`) as a strong
    /// generator at every level from `from` down to the level where it
    /// stops sifting. Returns that level.
    fn insert(&mut self, h: Permutation, from: usize) -> usize {
        let (residue, j) = self.sift(&h, from);
        if residue.is_identity() && j == self.levels.len() {
            return from;
        }
        let mut j = j;
        if j == self.levels.len() {
            let b = residue.first_moved().expect("non-identity residue");
            self.levels.push(Level::new(b, self.degree));
            j = self.levels.len() - 1;
        }
        for l in from..=j {
            self.levels[l].add_generator(residue.clone());
        }
        j
    }

    /// Looks for a Schreier generator at `level` that does not sift through
    /// the deeper levels, returning its residue.
    fn find_unsifted(&mut self, level: usize) -> Option<Permutation> {
        let mut pos = 0;
        while pos < self.levels[level].orbit.len() {
            loop {
                let lv = &self.levels[level];
                let k = lv.checked[pos];
                if k >= lv.gens.len() {
                    break;
                }
                let x = lv.orbit[pos];
                let s = &lv.gens[k];
                let y = s.image(x);
                let schreier =
                    &(lv.transversal[x].as_ref().unwrap() * s) * lv.inverse[y].as_ref().unwrap();
                self.levels[level].checked[pos] = k + 1;
                if schreier.is_identity() {
                    continue;
                }
                let (residue, j) = self.sift(&schreier, level + 1);
                if !(residue.is_identity() && j == self.levels.len()) {
                    return Some(residue);
                }
            }
            pos += 1;
        }
        None
    }

    /// Sifts `g` starting at level `from`. Returns the residue and the
    /// level at which sifting stopped (`levels.len()` if it went through).
    pub fn sift(&self, g: &Permutation, from: usize) -> (Permutation, usize) {
        let mut h = g.clone();
        for (l, level) in self.levels.iter().enumerate().skip(from) {
            let x = h.image(level.base);
            match &level.inverse[x] {
                None => return (h, l),
                Some(inv) => {
                    if x != level.base {
                        h = &h * inv;
                    }
                }
            }
        }
        (h, self.levels.len())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn levels(&self) -> &[Level] {
        &self.levels
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub fn order(&self) -> BigUint {
        self.levels
            .iter()
            .fold(BigUint::one(), |acc, l| acc * BigUint::from(l.orbit.len()))
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let (h, j) = self.sift(g, 0);
        j == self.levels.len() && h.is_identity()
    }

    /// All strong generators (the generators of level 0).
    pub fn strong_generators(&self) -> &[Permutation] {
        self.levels
            .first()
            .map(|l| l.gens.as_slice())
            .unwrap_or(&[])
    }

    /// The chain of the stabilizer of the first `depth` base points.
    fn tail(&self, depth: usize) -> StabChain {
        StabChain {
            degree: self.degree,
            levels: self.levels[depth..].to_vec(),
        }
    }

    /// Element with the given transversal choices, one orbit position per
    /// level, multiplied deepest level first.
    fn element_from_positions(&self, positions: &[usize]) -> Permutation {
        let mut acc = Permutation::identity(self.degree);
        for (level, &pos) in self.levels.iter().zip(positions).rev() {
            let u = level.transversal[level.orbit[pos]].as_ref().unwrap();
            acc = &acc * u;
        }
        acc
    }

    pub fn random_element<R: Rng + ?Sized>(&self, rng: &mut R) -> Permutation {
        let positions: Vec<usize> = self
            .levels
            .iter()
            .map(|l| rng.gen_range(0..l.orbit.len()))
            .collect();
        self.element_from_positions(&positions)
    }

    /// Finds an element mapping the base points `b_i` to `targets[i]` for
    /// the first `targets.len()` levels, if one exists.
    pub fn element_with_base_images(&self, targets: &[usize]) -> Option<Permutation> {
        let mut t = Permutation::identity(self.degree);
        let mut t_inv = t.clone();
        for (level, &target) in self.levels.iter().zip(targets) {
            let delta = t_inv.image(target);
            let u = level.transversal[delta].as_ref()?;
            t = u * &t;
            t_inv = t.inverse();
        }
        Some(t)
    }
}

/// Dense indexing of the elements of a group through its stabilizer
/// chain: an element's index is its mixed-radix transversal coordinate,
/// with level 0 as the fastest digit (the order used by [`Elements`]).
pub struct ElementIndex<'a> {
    chain: &'a StabChain,
    positions: Vec<Vec<u32>>,
    strides: Vec<u64>,
    len: u64,
}

impl<'a> ElementIndex<'a> {
    pub fn new(chain: &'a StabChain) -> Option<Self> {
        let mut strides = Vec::with_capacity(chain.levels.len());
        let mut len: u64 = 1;
        for level in &chain.levels {
            strides.push(len);
            len = len.checked_mul(level.orbit.len() as u64)?;
        }
        let positions = chain
            .levels
            .iter()
            .map(|level| {
                let mut pos = vec![u32::MAX; chain.degree];
                for (i, &x) in level.orbit.iter().enumerate() {
                    pos[x] = i as u32;
                }
                pos
            })
            .collect();
        Some(Self {
            chain,
            positions,
            strides,
            len,
        })
    }

    pub fn len(&self) -> u64 {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Index of `g`, or `None` if `g` is not in the group.
    pub fn rank(&self, g: &Permutation) -> Option<u64> {
        let mut h = g.clone();
        let mut idx = 0;
        for (l, level) in self.chain.levels.iter().enumerate() {
            let x = h.image(level.base);
            let pos = self.positions[l][x];
            if pos == u32::MAX {
                return None;
            }
            idx += pos as u64 * self.strides[l];
            if x != level.base {
                h = &h * level.inverse[x].as_ref().unwrap();
            }
        }
        h.is_identity().then_some(idx)
    }

    pub fn unrank(&self, mut idx: u64) -> Permutation {
        let mut digits = Vec::with_capacity(self.chain.levels.len());
        for level in &self.chain.levels {
            let n = level.orbit.len() as u64;
            digits.push((idx % n) as usize);
            idx /= n;
        }
        self.chain.element_from_positions(&digits)
    }
}

/// A permutation group given by generators.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    chain: OnceLock<Arc<StabChain>>,
}

impl PermGroup {
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        if degree == 0 {
            return Err(Error::InvalidArgument("degree must be at least 1".into()));
        }
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        Ok(Self {
            degree,
            generators,
            chain: OnceLock::new(),
        })
    }

    pub fn trivial(degree: usize) -> Self {
        Self::new(degree, Vec::new()).unwrap()
    }

    /// The full symmetric group on `degree` points.
    pub fn symmetric(degree: usize) -> Self {
        let mut gens = Vec::new();
        if degree >= 2 {
            let cycle: Vec<usize> = (0..degree).collect();
            gens.push(Permutation::from_cycles(degree, &[&cycle]).unwrap());
            gens.push(Permutation::from_cycles(degree, &[&[0, 1]]).unwrap());
        }
        Self::new(degree, gens).unwrap()
    }

    pub fn cyclic(degree: usize) -> Self {
        let cycle: Vec<usize> = (0..degree).collect();
        Self::new(
            degree,
            vec![Permutation::from_cycles(degree, &[&cycle]).unwrap()],
        )
        .unwrap()
    }

    /// Convenience constructor from cycle lists.
    pub fn from_cycles(degree: usize, gens: &[&[&[usize]]]) -> Result<Self> {
        let gens = gens
            .iter()
            .map(|c| Permutation::from_cycles(degree, c))
            .collect::<Result<Vec<_>>>()?;
        Self::new(degree, gens)
    }

    pub(crate) fn with_chain(
        degree: usize,
        generators: Vec<Permutation>,
        chain: StabChain,
    ) -> Self {
        let cell = OnceLock::new();
        let _ = cell.set(Arc::new(chain));
        Self {
            degree,
            generators,
            chain: cell,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// The base and strong generating set, built on first use.
    pub fn chain(&self) -> &StabChain {
        self.chain
            .get_or_init(|| Arc::new(StabChain::build(self.degree, &self.generators, &[], None)))
    }

    /// Builds a fresh chain whose base starts with `prefix`.
    pub fn chain_with_prefix(&self, prefix: &[usize]) -> StabChain {
        let chain = self.chain();
        StabChain::build(
            self.degree,
            chain.strong_generators(),
            prefix,
            Some(&chain.order()),
        )
    }

    pub fn order(&self) -> BigUint {
        self.chain().order()
    }

    pub fn order_u64(&self) -> Option<u64> {
        self.order().to_u64()
    }

    pub fn is_trivial(&self) -> bool {
        self.generators.iter().all(Permutation::is_identity)
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        self.chain().contains(g)
    }

    /// True when every generator of `other` lies in `self`.
    pub fn contains_group(&self, other: &PermGroup) -> bool {
        other.generators.iter().all(|g| self.contains(g))
    }

    /// Equality as sets of permutations.
    pub fn same_group(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.order() == other.order() && self.contains_group(other)
    }

    /// True when `self` normalizes `sub` (conjugating each generator of
    /// `sub` by each generator of `self` stays inside `sub`).
    pub fn normalizes(&self, sub: &PermGroup) -> bool {
        self.generators.iter().all(|g| {
            sub.generators
                .iter()
                .all(|h| sub.contains(&h.conjugate_by(g)))
        })
    }

    /// The subgroup generated by `self` and `extra`.
    pub fn closure(&self, extra: &[Permutation]) -> PermGroup {
        let mut gens = self.generators.clone();
        gens.extend(extra.iter().filter(|g| !self.contains(g)).cloned());
        PermGroup::new(self.degree, gens).unwrap()
    }

    /// Smallest normal subgroup of `self` containing `elements`.
    pub fn normal_closure(&self, elements: &[Permutation]) -> PermGroup {
        let mut gens: Vec<Permutation> = Vec::new();
        let mut current = PermGroup::trivial(self.degree);
        let mut queue: VecDeque<Permutation> = elements.iter().cloned().collect();
        while let Some(x) = queue.pop_front() {
            if current.contains(&x) {
                continue;
            }
            gens.push(x.clone());
            current = PermGroup::new(self.degree, gens.clone()).unwrap();
            for g in &self.generators {
                queue.push_back(x.conjugate_by(g));
            }
        }
        current
    }

    pub fn orbit(&self, point: usize) -> Result<Vec<usize>> {
        if point >= self.degree {
            return Err(Error::PointOutOfRange {
                point,
                degree: self.degree,
            });
        }
        let mut seen = vec![false; self.degree];
        seen[point] = true;
        let mut orbit = vec![point];
        let mut i = 0;
        while i < orbit.len() {
            let x = orbit[i];
            for g in &self.generators {
                let y = g.image(x);
                if !seen[y] {
                    seen[y] = true;
                    orbit.push(y);
                }
            }
            i += 1;
        }
        orbit.sort_unstable();
        Ok(orbit)
    }

    /// All orbits, each sorted, ordered by smallest point.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree];
        let mut out = Vec::new();
        for x in 0..self.degree {
            if !seen[x] {
                let orbit = self.orbit(x).unwrap();
                for &y in &orbit {
                    seen[y] = true;
                }
                out.push(orbit);
            }
        }
        out
    }

    pub fn is_transitive(&self) -> bool {
        self.orbit(0)
            .map(|o| o.len() == self.degree)
            .unwrap_or(false)
    }

    /// True when the point set is mapped to itself by every generator.
    pub fn is_invariant(&self, points: &[usize]) -> bool {
        let mut inside = vec![false; self.degree];
        for &x in points {
            if x >= self.degree {
                return false;
            }
            inside[x] = true;
        }
        self.generators
            .iter()
            .all(|g| points.iter().all(|&x| inside[g.image(x)]))
    }

    /// The stabilizer `G_ω`, with its chain carried over from a chain based
    /// at `ω`.
    pub fn point_stabilizer(&self, point: usize) -> Result<PermGroup> {
        if point >= self.degree {
            return Err(Error::PointOutOfRange {
                point,
                degree: self.degree,
            });
        }
        let chain = self.chain_with_prefix(&[point]);
        let tail = chain.tail(1);
        let gens = tail.strong_generators().to_vec();
        Ok(PermGroup::with_chain(self.degree, gens, tail))
    }

    /// The permutation group induced on an invariant point set, relabelled
    /// so that the `i`-th smallest point becomes `i`.
    pub fn induced_action(&self, points: &[usize]) -> Result<PermGroup> {
        let mut sorted = points.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.is_empty() || !self.is_invariant(&sorted) {
            return Err(Error::NotInvariant);
        }
        let mut position = vec![usize::MAX; self.degree];
        for (i, &x) in sorted.iter().enumerate() {
            position[x] = i;
        }
        let gens: Vec<Permutation> = self
            .generators
            .iter()
            .map(|g| g.restrict(&sorted, &position))
            .filter(|g| !g.is_identity())
            .collect();
        PermGroup::new(sorted.len(), gens)
    }

    /// Lists every element, failing if the order exceeds `cap`.
    pub fn elements(&self, cap: u64) -> Result<Elements> {
        let order = self.order();
        if order > BigUint::from(cap) {
            return Err(Error::cap("group order for enumeration", order, cap));
        }
        Ok(Elements::new(self.chain()))
    }

    pub fn random_element<R: Rng + ?Sized>(&self, rng: &mut R) -> Permutation {
        self.chain().random_element(rng)
    }

    /// Restriction map to an invariant point set, for lifting elements of
    /// the induced action back into the group.
    pub fn restriction(&self, points: &[usize]) -> Result<Restriction> {
        let mut sorted = points.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.is_empty() || !self.is_invariant(&sorted) {
            return Err(Error::NotInvariant);
        }
        let chain = self.chain_with_prefix(&sorted);
        Ok(Restriction {
            points: sorted,
            chain,
        })
    }
}

/// A chain of `G` whose base begins with every point of an invariant set
/// `Δ`, giving the projection `G → G^Δ` its kernel and lifts.
#[derive(Clone, Debug)]
pub struct Restriction {
    points: Vec<usize>,
    chain: StabChain,
}

impl Restriction {
    pub fn points(&self) -> &[usize] {
        &self.points
    }

    /// Kernel of the restriction (pointwise stabilizer of the set).
    pub fn kernel(&self) -> PermGroup {
        let tail = self.chain.tail(self.points.len());
        let gens = tail.strong_generators().to_vec();
        PermGroup::with_chain(self.chain.degree(), gens, tail)
    }

    /// An element of the group agreeing with `x` on the set, where `x` is
    /// given in relabelled coordinates (as produced by `induced_action`).
    pub fn lift(&self, x: &Permutation) -> Option<Permutation> {
        let targets: Vec<usize> = (0..self.points.len())
            .map(|i| self.points[x.image(i)])
            .collect();
        let g = self.chain.element_with_base_images(&targets)?;
        debug_assert!(self
            .points
            .iter()
            .zip(&targets)
            .all(|(&p, &t)| g.image(p) == t));
        Some(g)
    }
}

/// Iterator over all elements of a group given by its stabilizer chain.
///
/// Each element is produced exactly once as a product of transversal
/// elements, deepest level first.
pub struct Elements {
    levels: Vec<Vec<Permutation>>,
    positions: Vec<usize>,
    /// `partial[l]` is the product of the chosen representatives of levels
    /// `l..` (applied deepest first).
    partial: Vec<Permutation>,
    degree: usize,
    done: bool,
    remaining: u64,
}

impl Elements {
    fn new(chain: &StabChain) -> Self {
        let levels: Vec<Vec<Permutation>> = chain
            .levels
            .iter()
            .map(|l| {
                l.orbit
                    .iter()
                    .map(|&x| l.transversal[x].clone().unwrap())
                    .collect()
            })
            .collect();
        let degree = chain.degree;
        let k = levels.len();
        let mut partial = vec![Permutation::identity(degree); k + 1];
        for l in (0..k).rev() {
            partial[l] = &partial[l + 1] * &levels[l][0];
        }
        let remaining = chain.order().to_u64().unwrap_or(u64::MAX);
        Self {
            levels,
            positions: vec![0; k],
            partial,
            degree,
            done: false,
            remaining,
        }
    }
}

impl Iterator for Elements {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.done {
            return None;
        }
        let k = self.levels.len();
        let out = if k == 0 {
            Permutation::identity(self.degree)
        } else {
            self.partial[0].clone()
        };
        // advance: level 0 is the fastest digit since it is multiplied last
        let mut l = 0;
        loop {
            if l == k {
                self.done = true;
                break;
            }
            self.positions[l] += 1;
            if self.positions[l] < self.levels[l].len() {
                break;
            }
            self.positions[l] = 0;
            l += 1;
        }
        if !self.done {
            let top = l.min(k - 1);
            for m in (0..=top).rev() {
                self.partial[m] = &self.partial[m + 1] * &self.levels[m][self.positions[m]];
            }
        }
        self.remaining = self.remaining.saturating_sub(1);
        Some(out)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let r = usize::try_from(self.remaining).unwrap_or(usize::MAX);
        (r, Some(r))
    }
}
