//! Sets of hyperplanes that cover `GF(q)^d` and meet only in `0`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{Elem, FieldSpec};
use crate::hyperplane::{for_each_vector, rank, reduce, space_size, Hyperplane};

#[derive(Clone, Debug, Serialize)]
pub struct CoverInstance {
    pub q: u32,
    pub d: usize,
    pub hyperplanes: Vec<Hyperplane>,
    pub covers_all: bool,
    pub trivial_intersection: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CoverCheck {
    pub covers_all: bool,
    pub trivial_intersection: bool,
    /// When both conditions hold, `2 <= d <= |hyperplanes| - q + 1`.
    pub bound_ok: bool,
}

impl CoverCheck {
    pub fn is_valid_cover(&self) -> bool {
        self.covers_all && self.trivial_intersection
    }
}

fn evaluate(
    field: &FieldSpec,
    d: usize,
    hyperplanes: &[Hyperplane],
    cap: u64,
) -> Result<CoverCheck> {
    if let Some(h) = hyperplanes.iter().find(|h| h.dimension() != d) {
        return Err(Error::InvalidArgument(format!(
            "hyperplane of dimension {} in a space of dimension {d}",
            h.dimension()
        )));
    }
    space_size(field.q, d, cap)?;
    let mut covers_all = true;
    for_each_vector(field.q, d, |v| {
        if covers_all && !hyperplanes.iter().any(|h| h.contains(field, v)) {
            covers_all = false;
        }
    });
    let normals: Vec<Vec<Elem>> = hyperplanes.iter().map(|h| h.normal.clone()).collect();
    let trivial_intersection = rank(field, &normals) == d;
    let bound_ok = !(covers_all && trivial_intersection)
        || (2 <= d && d + field.q as usize <= hyperplanes.len() + 1);
    Ok(CoverCheck {
        covers_all,
        trivial_intersection,
        bound_ok,
    })
}

impl CoverInstance {
    pub fn new(
        field: &FieldSpec,
        d: usize,
        hyperplanes: Vec<Hyperplane>,
        cap: u64,
    ) -> Result<Self> {
        let check = evaluate(field, d, &hyperplanes, cap)?;
        Ok(Self {
            q: field.q,
            d,
            hyperplanes,
            covers_all: check.covers_all,
            trivial_intersection: check.trivial_intersection,
        })
    }

    pub fn len(&self) -> usize {
        self.hyperplanes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hyperplanes.is_empty()
    }
}

/// Re-evaluates both conditions from scratch and the size bound.
pub fn check_cover(field: &FieldSpec, c: &CoverInstance, cap: u64) -> Result<CoverCheck> {
    if field.q != c.q {
        return Err(Error::InvalidArgument(format!(
            "instance is over GF({}), not GF({})",
            c.q, field.q
        )));
    }
    evaluate(field, c.d, &c.hyperplanes, cap)
}

#[derive(Clone, Debug, Serialize)]
pub struct MinCover {
    pub size: usize,
    pub witness: CoverInstance,
    /// Subsets visited before the witness was found.
    pub visited: u64,
}

struct Search<'a> {
    field: &'a FieldSpec,
    d: usize,
    hyperplanes: Vec<Hyperplane>,
    /// Per hyperplane, the bitset of nonzero vectors it contains.
    masks: Vec<Vec<u64>>,
    full: Vec<u64>,
    budget: u64,
    visited: u64,
}

impl<'a> Search<'a> {
    fn new(field: &'a FieldSpec, d: usize, budget: u64, cap: u64) -> Result<Self> {
        let size = space_size(field.q, d, cap)? as usize;
        let words = size.div_ceil(64);
        let hyperplanes = Hyperplane::all(field, d);
        let mut masks = vec![vec![0u64; words]; hyperplanes.len()];
        let mut full = vec![0u64; words];
        let mut idx = 0;
        for_each_vector(field.q, d, |v| {
            if idx > 0 {
                full[idx / 64] |= 1 << (idx % 64);
                for (h, m) in hyperplanes.iter().zip(masks.iter_mut()) {
                    if h.contains(field, v) {
                        m[idx / 64] |= 1 << (idx % 64);
                    }
                }
            }
            idx += 1;
        });
        Ok(Self {
            field,
            d,
            hyperplanes,
            masks,
            full,
            budget,
            visited: 0,
        })
    }

    /// Visits every `size`-subset (in lexicographic order) whose normals have
    /// full rank and whose union is everything; `found` returns `false` to
    /// stop.
    fn run(&mut self, size: usize, found: &mut dyn FnMut(&[usize]) -> bool) -> Result<bool> {
        let union = vec![0u64; self.full.len()];
        let mut chosen = Vec::with_capacity(size);
        self.step(size, 0, &mut chosen, &[], &union, found)
    }

    fn step(
        &mut self,
        size: usize,
        start: usize,
        chosen: &mut Vec<usize>,
        basis: &[Vec<Elem>],
        union: &[u64],
        found: &mut dyn FnMut(&[usize]) -> bool,
    ) -> Result<bool> {
        self.visited += 1;
        if self.visited > self.budget {
            return Err(Error::BudgetExhausted(self.budget));
        }
        if chosen.len() == size {
            if basis.len() == self.d && union == self.full.as_slice() {
                return Ok(found(chosen));
            }
            return Ok(true);
        }
        let slots = size - chosen.len();
        // rank can grow by at most one per remaining slot
        if basis.len() + slots < self.d {
            return Ok(true);
        }
        for i in start..=self.hyperplanes.len() - slots {
            let mut next_basis = basis.to_vec();
            if let Some(r) = reduce(self.field, basis, &self.hyperplanes[i].normal) {
                next_basis.push(r);
            }
            let next_union: Vec<u64> = union
                .iter()
                .zip(&self.masks[i])
                .map(|(a, b)| a | b)
                .collect();
            chosen.push(i);
            let go_on = self.step(size, i + 1, chosen, &next_basis, &next_union, found)?;
            chosen.pop();
            if !go_on {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn instance(&self, subset: &[usize]) -> Result<CoverInstance> {
        let hs = subset
            .iter()
            .map(|&i| self.hyperplanes[i].clone())
            .collect();
        CoverInstance::new(self.field, self.d, hs, u64::MAX)
    }
}

/// Smallest set of hyperplanes that covers `GF(q)^d` with trivial
/// intersection, searched by size and then lexicographically by canonical
/// normals. `None` when no such set exists, which happens exactly for
/// `d = 1`.
pub fn min_cover_search(
    field: &FieldSpec,
    d: usize,
    budget: u64,
    cap: u64,
) -> Result<Option<MinCover>> {
    if d == 0 {
        return Err(Error::InvalidArgument(
            "dimension must be at least 1".into(),
        ));
    }
    let mut search = Search::new(field, d, budget, cap)?;
    for size in 1..=search.hyperplanes.len() {
        let mut witness = None;
        search.run(size, &mut |s| {
            witness = Some(s.to_vec());
            false
        })?;
        if let Some(w) = witness {
            return Ok(Some(MinCover {
                size,
                witness: search.instance(&w)?,
                visited: search.visited,
            }));
        }
    }
    Ok(None)
}

/// Every valid cover with at most `max_size` hyperplanes.
pub fn valid_covers(
    field: &FieldSpec,
    d: usize,
    max_size: usize,
    budget: u64,
    cap: u64,
) -> Result<Vec<CoverInstance>> {
    let mut search = Search::new(field, d, budget, cap)?;
    let mut subsets = Vec::new();
    for size in 1..=max_size.min(search.hyperplanes.len()) {
        search.run(size, &mut |s| {
            subsets.push(s.to_vec());
            true
        })?;
    }
    subsets.iter().map(|s| search.instance(s)).collect()
}

/// The coordinate hyperplanes together with every hyperplane through
/// `{x_1 = x_2 = 0}`: `d + q - 1` hyperplanes in all.
pub fn tight_cover_construct(field: &FieldSpec, d: usize, cap: u64) -> Result<CoverInstance> {
    if d < 2 {
        return Err(Error::InvalidArgument(
            "the construction needs d >= 2".into(),
        ));
    }
    let mut hs: Vec<Hyperplane> = (0..d).map(|i| Hyperplane::coordinate(d, i)).collect();
    for c in 1..field.q {
        let mut normal = vec![0; d];
        normal[0] = 1;
        normal[1] = c as Elem;
        hs.push(Hyperplane::new(field, normal)?);
    }
    debug_assert_eq!(hs.len(), d + field.q as usize - 1);
    CoverInstance::new(field, d, hs, cap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{EXHAUSTION_CAP, SEARCH_BUDGET};

    fn hp(f: &FieldSpec, a: &[Elem]) -> Hyperplane {
        Hyperplane::new(f, a.to_vec()).unwrap()
    }

    #[test]
    fn small_examples() {
        let f = FieldSpec::new(2).unwrap();
        let c = CoverInstance::new(
            &f,
            2,
            vec![hp(&f, &[1, 0]), hp(&f, &[0, 1]), hp(&f, &[1, 1])],
            100,
        )
        .unwrap();
        let check = check_cover(&f, &c, 100).unwrap();
        assert!(check.is_valid_cover() && check.bound_ok);
        assert_eq!(c.len(), c.d + f.q as usize - 1);

        let c = CoverInstance::new(&f, 2, vec![hp(&f, &[1, 0]), hp(&f, &[0, 1])], 100).unwrap();
        assert!(!c.covers_all);
        assert!(c.trivial_intersection);

        for q in [2, 3, 5] {
            let f = FieldSpec::new(q).unwrap();
            let c = CoverInstance::new(&f, 1, vec![hp(&f, &[1])], 100).unwrap();
            assert!(!c.covers_all);
            assert!(min_cover_search(&f, 1, 1000, 100).unwrap().is_none());
        }
    }

    #[test]
    fn minimum_sizes() {
        for (q, d, size) in [(2, 2, 3), (3, 2, 4), (2, 3, 4)] {
            let f = FieldSpec::new(q).unwrap();
            let m = min_cover_search(&f, d, SEARCH_BUDGET, EXHAUSTION_CAP)
                .unwrap()
                .unwrap();
            assert_eq!(m.size, size, "q = {q}, d = {d}");
            assert!(m.witness.covers_all && m.witness.trivial_intersection);
        }
    }

    #[test]
    fn tight_construction_examples() {
        for (q, d, size) in [(2, 2, 3), (2, 4, 5), (3, 2, 4)] {
            let f = FieldSpec::new(q).unwrap();
            let c = tight_cover_construct(&f, d, EXHAUSTION_CAP).unwrap();
            assert_eq!(c.len(), size);
            let check = check_cover(&f, &c, EXHAUSTION_CAP).unwrap();
            assert!(check.is_valid_cover() && check.bound_ok);
        }
        let f = FieldSpec::new(3).unwrap();
        assert!(tight_cover_construct(&f, 1, 100).is_err());
    }

    #[test]
    fn budget_and_cap_errors() {
        let f = FieldSpec::new(3).unwrap();
        assert!(matches!(
            min_cover_search(&f, 3, 10, EXHAUSTION_CAP),
            Err(Error::BudgetExhausted(10))
        ));
        assert!(matches!(
            min_cover_search(&f, 3, 10, 20),
            Err(Error::CapExceeded { .. })
        ));
    }
}
