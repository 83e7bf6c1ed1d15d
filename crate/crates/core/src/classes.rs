//! Conjugacy classes, centralizer orders and conjugacy tests.
//!
//! Small groups are handled by listing every element and splitting the
//! list into conjugation orbits. Larger groups use random element
//! discovery: each new class is certified by an exact centralizer order
//! computed by backtracking over base images, and discovery stops once the
//! class equation closes.

use std::time::Instant;

use num_bigint::BigUint;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::group::{ElementIndex, PermGroup, StabChain};
use crate::perm::Permutation;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyClass {
    pub representative: Permutation,
    pub size: BigUint,
    pub centralizer_order: BigUint,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassStrategy {
    Enumeration,
    RandomDiscovery,
}

#[derive(Clone, Debug)]
pub struct ConjugacyClassTable {
    pub classes: Vec<ConjugacyClass>,
    pub group_order: BigUint,
    pub strategy: ClassStrategy,
}

impl ConjugacyClassTable {
    /// Class equation and orbit–stabilizer checks.
    pub fn is_certified(&self) -> bool {
        let total: BigUint = self.classes.iter().map(|c| &c.size).sum();
        total == self.group_order
            && self
                .classes
                .iter()
                .all(|c| &c.size * &c.centralizer_order == self.group_order)
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }
}

/// Computes the class table, choosing the strategy from the caps.
pub fn conjugacy_classes(group: &PermGroup, caps: &Caps, seed: u64) -> Result<ConjugacyClassTable> {
    let order = group.order();
    if order <= BigUint::from(caps.enumeration) {
        classes_by_enumeration(group, caps.enumeration)
    } else if order <= caps.class_order {
        classes_by_random_discovery(group, seed, caps)
    } else {
        Err(Error::cap(
            "group order for conjugacy classes",
            order,
            &caps.class_order,
        ))
    }
}

/// Splits the full element list into conjugation orbits.
pub fn classes_by_enumeration(group: &PermGroup, cap: u64) -> Result<ConjugacyClassTable> {
    let order = group.order();
    if order > BigUint::from(cap) {
        return Err(Error::cap("group order for enumeration", order, cap));
    }
    let index = ElementIndex::new(group.chain()).expect("order fits in u64");
    let n = index.len() as usize;
    let mut seen = vec![false; n];
    let mut classes = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let first = index.unrank(start as u64);
        let mut rep = first.clone();
        let mut stack = vec![first];
        let mut size: u64 = 0;
        while let Some(x) = stack.pop() {
            size += 1;
            if x < rep {
                rep = x.clone();
            }
            for g in group.generators() {
                let y = x.conjugate_by(g);
                let r = index.rank(&y).expect("conjugate stays in the group") as usize;
                if !seen[r] {
                    seen[r] = true;
                    stack.push(y);
                }
            }
        }
        classes.push(ConjugacyClass {
            representative: rep,
            size: BigUint::from(size),
            centralizer_order: &order / size,
        });
    }
    classes.sort_by(|a, b| a.representative.cmp(&b.representative));
    Ok(ConjugacyClassTable {
        classes,
        group_order: order,
        strategy: ClassStrategy::Enumeration,
    })
}

/// Random discovery of classes until the class equation closes.
pub fn classes_by_random_discovery(
    group: &PermGroup,
    seed: u64,
    caps: &Caps,
) -> Result<ConjugacyClassTable> {
    let order = group.order();
    let started = Instant::now();
    let deadline = started + caps.class_budget;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let id = Permutation::identity(group.degree());
    let mut classes = vec![ConjugacyClass {
        representative: id,
        size: BigUint::from(1u32),
        centralizer_order: order.clone(),
    }];
    let mut cycle_types = vec![classes[0].representative.cycle_type()];
    let mut total = BigUint::from(1u32);
    while total < order {
        if Instant::now() > deadline {
            return Err(Error::BudgetExhausted("random class discovery"));
        }
        let x = group.random_element(&mut rng);
        let ct = x.cycle_type();
        let mut known = None;
        for (i, class) in classes.iter().enumerate() {
            if cycle_types[i] == ct
                && conjugacy_search(
                    group,
                    &x,
                    &class.representative,
                    SearchMode::First,
                    Some(deadline),
                )?
                .witness
                .is_some()
            {
                known = Some(i);
                break;
            }
        }
        match known {
            Some(i) => {
                if x < classes[i].representative {
                    classes[i].representative = x;
                }
            }
            None => {
                let centralizer =
                    conjugacy_search(group, &x, &x, SearchMode::Count, Some(deadline))?.count;
                let centralizer = BigUint::from(centralizer);
                let size = &order / &centralizer;
                total += &size;
                cycle_types.push(ct);
                classes.push(ConjugacyClass {
                    representative: x,
                    size,
                    centralizer_order: centralizer,
                });
            }
        }
    }
    if total != order {
        return Err(Error::InvalidArgument(
            "class sizes overshoot the group order".into(),
        ));
    }
    classes.sort_by(|a, b| a.representative.cmp(&b.representative));
    Ok(ConjugacyClassTable {
        classes,
        group_order: order,
        strategy: ClassStrategy::RandomDiscovery,
    })
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum SearchMode {
    First,
    Count,
}

struct SearchOutcome {
    count: u64,
    witness: Option<Permutation>,
}

/// Order of the centralizer of `x` in `group`.
pub fn centralizer_order(group: &PermGroup, x: &Permutation) -> BigUint {
    BigUint::from(
        conjugacy_search(group, x, x, SearchMode::Count, None)
            .unwrap()
            .count,
    )
}

/// An element `g` of `group` with `g⁻¹ x g = y`, if one exists.
pub fn conjugating_element(
    group: &PermGroup,
    x: &Permutation,
    y: &Permutation,
) -> Option<Permutation> {
    if x.cycle_type() != y.cycle_type() {
        return None;
    }
    conjugacy_search(group, x, y, SearchMode::First, None)
        .unwrap()
        .witness
}

/// Backtrack over base images for elements `g` with `x^g = y`. The base
/// follows the cycles of `x`, so once the image of a cycle's first point
/// is chosen the rest of the cycle is forced.
fn conjugacy_search(
    group: &PermGroup,
    x: &Permutation,
    y: &Permutation,
    mode: SearchMode,
    deadline: Option<Instant>,
) -> Result<SearchOutcome> {
    let degree = group.degree();
    let mut cycles = x.cycles();
    for p in 0..degree {
        if x.fixes(p) {
            cycles.push(vec![p]);
        }
    }
    cycles.sort_by(|a, b| b.len().cmp(&a.len()).then(a[0].cmp(&b[0])));
    let base: Vec<usize> = cycles.into_iter().flatten().collect();
    let chain = group.chain_with_prefix(&base);
    let mut state = Search {
        chain: &chain,
        x,
        x_inv: x.inverse(),
        y,
        images: vec![usize::MAX; degree],
        mode,
        count: 0,
        witness: None,
        deadline,
        ticks: 0,
    };
    state.descend(0, &Permutation::identity(degree))?;
    Ok(SearchOutcome {
        count: state.count,
        witness: state.witness,
    })
}

struct Search<'a> {
    chain: &'a StabChain,
    x: &'a Permutation,
    x_inv: Permutation,
    y: &'a Permutation,
    images: Vec<usize>,
    mode: SearchMode,
    count: u64,
    witness: Option<Permutation>,
    deadline: Option<Instant>,
    ticks: u64,
}

impl Search<'_> {
    fn done(&self) -> bool {
        self.mode == SearchMode::First && self.witness.is_some()
    }

    fn descend(&mut self, depth: usize, t: &Permutation) -> Result<()> {
        let levels = self.chain.levels();
        if depth == levels.len() {
            debug_assert_eq!(&self.x.conjugate_by(t), self.y);
            self.count += 1;
            if self.witness.is_none() {
                self.witness = Some(t.clone());
            }
            self.ticks += 1;
            if self.ticks % 4096 == 0 {
                if let Some(d) = self.deadline {
                    if Instant::now() > d {
                        return Err(Error::BudgetExhausted("centralizer backtrack"));
                    }
                }
            }
            return Ok(());
        }
        let level = &levels[depth];
        let p = level.base();
        let pred = self.x_inv.image(p);
        let succ = self.x.image(p);
        for &delta in level.orbit() {
            let gamma = t.image(delta);
            if self.images[pred] != usize::MAX
                && pred != p
                && gamma != self.y.image(self.images[pred])
            {
                continue;
            }
            if self.images[succ] != usize::MAX
                && succ != p
                && self.images[succ] != self.y.image(gamma)
            {
                continue;
            }
            if succ == p && self.y.image(gamma) != gamma {
                continue;
            }
            self.images[p] = gamma;
            let u = level.representative(delta).unwrap();
            let next = u * t;
            self.descend(depth + 1, &next)?;
            self.images[p] = usize::MAX;
            if self.done() {
                break;
            }
        }
        Ok(())
    }
}
