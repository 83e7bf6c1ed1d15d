//! Subdirect products of two groups through Goursat triples.
//!
//! A subdirect product of `G1 × G2` is determined by normal subgroups
//! `N1 ⊴ G1`, `N2 ⊴ G2` and an isomorphism `φ: G1/N1 → G2/N2`; it is the
//! group `{(g1, g2) : φ(g1 N1) = g2 N2}`. Quotients are modelled by
//! canonical coset representatives and a Cayley table over the parent's
//! generators.

use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::{Arc, OnceLock};

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::caps::Caps;
use crate::derangement::{is_derangement, TwoOrbitAction};
use crate::error::{Error, Result};
use crate::group::{PermGroup, StabChain};
use crate::normal::normal_subgroups;
use crate::perm::Permutation;

/// `G/N` with elements indexed `0..order`; index 0 is the identity coset.
pub struct QuotientModel {
    parent: PermGroup,
    kernel: PermGroup,
    kernel_chain: StabChain,
    reps: Vec<Permutation>,
    index: HashMap<Permutation, u32>,
    /// `table[q * ngens + s]` is `q` times the coset of generator `s`.
    table: Vec<u32>,
    ngens: usize,
    /// Each element as a word in the parent's generators.
    words: Vec<Vec<u16>>,
    orders: OnceLock<Vec<u32>>,
    inverses: OnceLock<Vec<u32>>,
    classes: OnceLock<ClassData>,
    small_gens: OnceLock<Vec<u32>>,
    derangements: OnceLock<Vec<Option<Permutation>>>,
}

struct ClassData {
    class_of: Vec<u32>,
    sizes: Vec<u32>,
    /// Representative of each class: the element with the least coset
    /// representative.
    reps: Vec<u32>,
}

impl std::fmt::Debug for QuotientModel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("QuotientModel")
            .field("parent_order", &self.parent.order())
            .field("kernel_order", &self.kernel.order())
            .field("order", &self.reps.len())
            .finish()
    }
}

/// Builds `G/N`. `N` must be a normal subgroup of `G` and the index must
/// fit the quotient cap.
pub fn quotient(group: &PermGroup, kernel: &PermGroup, caps: &Caps) -> Result<QuotientModel> {
    if kernel.degree() != group.degree()
        || !group.contains_group(kernel)
        || !group.normalizes(kernel)
    {
        return Err(Error::NotNormal);
    }
    let index = group.order() / kernel.order();
    let order = match index.to_u64() {
        Some(x) if x <= caps.quotient => x as usize,
        _ => return Err(Error::cap("quotient order", index, caps.quotient)),
    };
    let gens: Vec<Permutation> = group.generators().to_vec();
    assert!(gens.len() < u16::MAX as usize);
    let ngens = gens.len();
    let kernel_chain = kernel.chain().clone();
    let mut model = QuotientModel {
        parent: group.clone(),
        kernel: kernel.clone(),
        kernel_chain,
        reps: Vec::with_capacity(order),
        index: HashMap::with_capacity(order),
        table: Vec::with_capacity(order * ngens),
        ngens,
        words: Vec::with_capacity(order),
        orders: OnceLock::new(),
        inverses: OnceLock::new(),
        classes: OnceLock::new(),
        small_gens: OnceLock::new(),
        derangements: OnceLock::new(),
    };
    let id = model.canonical(&Permutation::identity(group.degree()));
    model.index.insert(id.clone(), 0);
    model.reps.push(id);
    model.words.push(Vec::new());
    let mut i = 0;
    while i < model.reps.len() {
        for (s, g) in gens.iter().enumerate() {
            let y = model.canonical(&(&model.reps[i] * g));
            let j = match model.index.get(&y) {
                Some(&j) => j,
                None => {
                    let j = model.reps.len() as u32;
                    let mut w = model.words[i].clone();
                    w.push(s as u16);
                    model.index.insert(y.clone(), j);
                    model.reps.push(y);
                    model.words.push(w);
                    j
                }
            };
            model.table.push(j);
        }
        i += 1;
    }
    assert_eq!(model.reps.len(), order, "coset count disagrees with |G:N|");
    Ok(model)
}

impl QuotientModel {
    /// Canonical element of the coset `Ng`: level by level through the
    /// kernel's chain, move to the orbit point with the least image.
    fn canonical(&self, g: &Permutation) -> Permutation {
        let mut h = g.clone();
        for level in self.kernel_chain.levels() {
            let best = level
                .orbit()
                .iter()
                .copied()
                .min_by_key(|&d| h.image(d))
                .unwrap();
            if best != level.base() {
                h = level.representative(best).unwrap() * &h;
            }
        }
        h
    }

    pub fn parent(&self) -> &PermGroup {
        &self.parent
    }

    pub fn kernel(&self) -> &PermGroup {
        &self.kernel
    }

    pub fn order(&self) -> usize {
        self.reps.len()
    }

    /// Index of the coset containing `g`.
    pub fn coset_of(&self, g: &Permutation) -> Option<usize> {
        self.index.get(&self.canonical(g)).map(|&i| i as usize)
    }

    /// A parent element in coset `q`.
    pub fn representative(&self, q: usize) -> &Permutation {
        &self.reps[q]
    }

    /// Coset of the parent's generator `s`.
    pub fn generator_coset(&self, s: usize) -> usize {
        self.table[s] as usize
    }

    pub fn mul(&self, u: usize, v: usize) -> usize {
        let mut x = u;
        for &s in &self.words[v] {
            x = self.table[x * self.ngens + s as usize] as usize;
        }
        x
    }

    pub fn element_orders(&self) -> &[u32] {
        self.orders.get_or_init(|| {
            (0..self.order())
                .map(|q| {
                    let mut x = q;
                    let mut m = 1;
                    while x != 0 {
                        x = self.mul(x, q);
                        m += 1;
                    }
                    m
                })
                .collect()
        })
    }

    pub fn inverse(&self, q: usize) -> usize {
        self.inverses.get_or_init(|| {
            self.reps
                .iter()
                .map(|r| self.index[&self.canonical(&r.inverse())])
                .collect()
        })[q] as usize
    }

    /// `c⁻¹ u c`.
    pub fn conjugate(&self, u: usize, c: usize) -> usize {
        self.mul(self.mul(self.inverse(c), u), c)
    }

    fn class_data(&self) -> &ClassData {
        self.classes.get_or_init(|| {
            let n = self.order();
            let gen_cosets: Vec<usize> = (0..self.ngens).map(|s| self.generator_coset(s)).collect();
            let mut class_of = vec![u32::MAX; n];
            let mut sizes = Vec::new();
            let mut reps = Vec::new();
            for start in 0..n {
                if class_of[start] != u32::MAX {
                    continue;
                }
                let id = sizes.len() as u32;
                class_of[start] = id;
                let mut members = vec![start];
                let mut i = 0;
                while i < members.len() {
                    let u = members[i];
                    for &c in &gen_cosets {
                        let v = self.conjugate(u, c);
                        if class_of[v] == u32::MAX {
                            class_of[v] = id;
                            members.push(v);
                        }
                    }
                    i += 1;
                }
                let rep = members
                    .iter()
                    .copied()
                    .min_by(|&a, &b| self.reps[a].cmp(&self.reps[b]))
                    .unwrap();
                sizes.push(members.len() as u32);
                reps.push(rep as u32);
            }
            ClassData {
                class_of,
                sizes,
                reps,
            }
        })
    }

    pub fn class_size(&self, q: usize) -> usize {
        let data = self.class_data();
        data.sizes[data.class_of[q] as usize] as usize
    }

    pub fn is_class_representative(&self, q: usize) -> bool {
        let data = self.class_data();
        data.reps[data.class_of[q] as usize] as usize == q
    }

    pub fn num_classes(&self) -> usize {
        self.class_data().sizes.len()
    }

    pub fn centralizer(&self, x: usize) -> Vec<usize> {
        (0..self.order())
            .filter(|&u| self.mul(u, x) == self.mul(x, u))
            .collect()
    }

    /// Sorted multiset of (element order, class size), an isomorphism
    /// invariant.
    pub fn fingerprint(&self) -> Vec<(u32, usize, usize)> {
        let orders = self.element_orders();
        let mut counts: HashMap<(u32, usize), usize> = HashMap::new();
        for q in 0..self.order() {
            *counts.entry((orders[q], self.class_size(q))).or_default() += 1;
        }
        let mut v: Vec<(u32, usize, usize)> =
            counts.into_iter().map(|((o, c), n)| (o, c, n)).collect();
        v.sort_unstable();
        v
    }

    /// Size of the subgroup generated by `gens`.
    fn generated_size(&self, gens: &[usize]) -> usize {
        let mut seen = vec![false; self.order()];
        seen[0] = true;
        let mut queue = VecDeque::from([0usize]);
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &g in gens {
                let v = self.mul(u, g);
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    queue.push_back(v);
                }
            }
        }
        count
    }

    /// A short generating sequence: one element if the quotient is cyclic,
    /// else a random generating pair when one turns up quickly, else a
    /// greedy set.
    pub fn small_generating_set(&self) -> &[u32] {
        self.small_gens.get_or_init(|| {
            let n = self.order();
            if n == 1 {
                return Vec::new();
            }
            let orders = self.element_orders();
            if let Some(q) = (0..n).find(|&q| orders[q] as usize == n) {
                return vec![q as u32];
            }
            let mut rng = ChaCha8Rng::seed_from_u64(0x9e37_79b9);
            for _ in 0..64 {
                let a = rng.gen_range(1..n);
                let b = rng.gen_range(1..n);
                if self.generated_size(&[a, b]) == n {
                    return vec![a as u32, b as u32];
                }
            }
            let mut by_order: Vec<usize> = (1..n).collect();
            by_order.sort_by_key(|&q| std::cmp::Reverse(orders[q]));
            let mut gens: Vec<usize> = Vec::new();
            let mut inside = vec![false; n];
            inside[0] = true;
            for q in by_order {
                if inside[q] {
                    continue;
                }
                gens.push(q);
                inside = vec![false; n];
                inside[0] = true;
                let mut queue = VecDeque::from([0usize]);
                while let Some(u) = queue.pop_front() {
                    for &g in &gens {
                        let v = self.mul(u, g);
                        if !inside[v] {
                            inside[v] = true;
                            queue.push_back(v);
                        }
                    }
                }
                if inside.iter().all(|&b| b) {
                    break;
                }
            }
            gens.into_iter().map(|q| q as u32).collect()
        })
    }

    /// Regular permutation representation on the `|G:N|` cosets, if it
    /// fits the coset-action cap.
    pub fn coset_action(&self, caps: &Caps) -> Result<PermGroup> {
        let n = self.order();
        if n as u64 > caps.coset_action {
            return Err(Error::cap("coset action degree", n, caps.coset_action));
        }
        let gens = (0..self.ngens)
            .map(|s| {
                let images: Vec<usize> = (0..n)
                    .map(|q| self.table[q * self.ngens + s] as usize)
                    .collect();
                Permutation::from_images(&images).unwrap()
            })
            .filter(|g| !g.is_identity())
            .collect();
        PermGroup::new(n, gens)
    }

    /// For each coset, the first derangement of the parent (on all of its
    /// points) found in it, if any.
    pub fn derangement_cosets(&self, cap: u64) -> Result<&[Option<Permutation>]> {
        if let Some(d) = self.derangements.get() {
            return Ok(d);
        }
        let points: Vec<usize> = (0..self.parent.degree()).collect();
        let mut out: Vec<Option<Permutation>> = vec![None; self.order()];
        for g in self.parent.elements(cap)? {
            if is_derangement(&g, &points) {
                let q = self.coset_of(&g).expect("element lies in a coset");
                if out[q].is_none() {
                    out[q] = Some(g);
                }
            }
        }
        Ok(self.derangements.get_or_init(|| out))
    }
}

/// An isomorphism `G1/N1 → G2/N2`, stored as the image of every element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientIso {
    map: Vec<u32>,
}

impl QuotientIso {
    pub fn image(&self, q: usize) -> usize {
        self.map[q] as usize
    }

    /// Images of the cosets of the parent's generators in `q1`.
    pub fn generator_images(&self, q1: &QuotientModel) -> Vec<usize> {
        (0..q1.ngens)
            .map(|s| self.image(q1.generator_coset(s)))
            .collect()
    }

    /// Checks bijectivity and `φ(q s) = φ(q) φ(s)` on every edge of the
    /// Cayley graph of `q1`, which makes `φ` a homomorphism.
    pub fn verify(&self, q1: &QuotientModel, q2: &QuotientModel) -> bool {
        if q1.order() != q2.order() || self.map.len() != q1.order() {
            return false;
        }
        let mut hit = vec![false; q2.order()];
        for &x in &self.map {
            if std::mem::replace(&mut hit[x as usize], true) {
                return false;
            }
        }
        let images = self.generator_images(q1);
        (0..q1.order()).all(|q| {
            (0..q1.ngens).all(|s| {
                let qs = q1.table[q * q1.ngens + s] as usize;
                self.image(qs) == q2.mul(self.image(q), images[s])
            })
        })
    }
}

/// Extends `a_i ↦ x_i` to a map on all of `q1` along its Cayley graph;
/// `None` unless it is a well-defined bijective homomorphism.
fn extend_to_isomorphism(
    q1: &QuotientModel,
    q2: &QuotientModel,
    right_mult: &[Vec<u32>],
    images: &[usize],
) -> Option<QuotientIso> {
    let n = q1.order();
    let mut map = vec![u32::MAX; n];
    let mut used = vec![false; n];
    map[0] = 0;
    used[0] = true;
    let mut queue = VecDeque::from([0usize]);
    while let Some(q) = queue.pop_front() {
        let fq = map[q] as usize;
        for (i, table) in right_mult.iter().enumerate() {
            let target = table[q] as usize;
            let img = q2.mul(fq, images[i]);
            if map[target] == u32::MAX {
                if std::mem::replace(&mut used[img], true) {
                    return None;
                }
                map[target] = img as u32;
                queue.push_back(target);
            } else if map[target] as usize != img {
                return None;
            }
        }
    }
    Some(QuotientIso { map })
}

/// All isomorphisms `q1 → q2`, or with `dedup` one per class modulo inner
/// automorphisms of `q2`. The search maps a short generating sequence of
/// `q1` to elements of matching order and class size, pruned by the orders
/// of pairwise products.
pub fn quotient_isomorphisms(
    q1: &QuotientModel,
    q2: &QuotientModel,
    dedup: bool,
) -> Vec<QuotientIso> {
    if q1.order() != q2.order() {
        return Vec::new();
    }
    if q1.order() == 1 {
        return vec![QuotientIso { map: vec![0] }];
    }
    if q1.fingerprint() != q2.fingerprint() {
        return Vec::new();
    }
    let gens: Vec<usize> = q1
        .small_generating_set()
        .iter()
        .map(|&g| g as usize)
        .collect();
    let o1 = q1.element_orders();
    let o2 = q2.element_orders();
    let right_mult: Vec<Vec<u32>> = gens
        .iter()
        .map(|&a| (0..q1.order()).map(|q| q1.mul(q, a) as u32).collect())
        .collect();
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .enumerate()
        .map(|(i, &a)| {
            let mut c: Vec<usize> = (0..q2.order())
                .filter(|&u| o2[u] == o1[a] && q2.class_size(u) == q1.class_size(a))
                .filter(|&u| !(dedup && i == 0) || q2.is_class_representative(u))
                .collect();
            c.sort_by(|&u, &v| q2.reps[u].cmp(&q2.reps[v]));
            c
        })
        .collect();
    let mut out = Vec::new();
    let mut chosen: Vec<usize> = Vec::with_capacity(gens.len());
    let mut search = IsoSearch {
        q1,
        q2,
        gens: &gens,
        right_mult: &right_mult,
        candidates: &candidates,
        dedup,
        centralizer: Vec::new(),
        seen: HashSet::new(),
    };
    search.descend(&mut chosen, &mut out);
    out
}

struct IsoSearch<'a> {
    q1: &'a QuotientModel,
    q2: &'a QuotientModel,
    gens: &'a [usize],
    right_mult: &'a [Vec<u32>],
    candidates: &'a [Vec<usize>],
    dedup: bool,
    centralizer: Vec<usize>,
    seen: HashSet<Vec<usize>>,
}

impl IsoSearch<'_> {
    fn descend(&mut self, chosen: &mut Vec<usize>, out: &mut Vec<QuotientIso>) {
        let i = chosen.len();
        if i == self.gens.len() {
            if self.dedup && self.seen.contains(chosen.as_slice()) {
                return;
            }
            if let Some(iso) = extend_to_isomorphism(self.q1, self.q2, self.right_mult, chosen) {
                if self.dedup {
                    for &c in &self.centralizer {
                        let conj: Vec<usize> =
                            chosen.iter().map(|&x| self.q2.conjugate(x, c)).collect();
                        self.seen.insert(conj);
                    }
                }
                out.push(iso);
            }
            return;
        }
        let o1 = self.q1.element_orders();
        let o2 = self.q2.element_orders();
        for &u in &self.candidates[i] {
            let consistent = (0..i).all(|j| {
                o2[self.q2.mul(chosen[j], u)] == o1[self.q1.mul(self.gens[j], self.gens[i])]
                    && o2[self.q2.mul(u, chosen[j])] == o1[self.q1.mul(self.gens[i], self.gens[j])]
            });
            if !consistent {
                continue;
            }
            if i == 0 && self.dedup {
                self.centralizer = self.q2.centralizer(u);
                self.seen.clear();
            }
            chosen.push(u);
            self.descend(chosen, out);
            chosen.pop();
        }
    }
}

/// A group together with its normal subgroups and cached quotients, shared
/// by every pair it takes part in.
pub struct Factor {
    group: PermGroup,
    normals: Vec<PermGroup>,
    quotients: Vec<OnceLock<Arc<QuotientModel>>>,
}

impl Factor {
    pub fn new(group: PermGroup, caps: &Caps, seed: u64) -> Result<Self> {
        let normals = normal_subgroups(&group, caps, seed)?;
        let quotients = normals.iter().map(|_| OnceLock::new()).collect();
        Ok(Self {
            group,
            normals,
            quotients,
        })
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn normal_subgroups(&self) -> &[PermGroup] {
        &self.normals
    }

    pub fn quotient(&self, i: usize, caps: &Caps) -> Result<Arc<QuotientModel>> {
        if let Some(q) = self.quotients[i].get() {
            return Ok(q.clone());
        }
        let q = Arc::new(quotient(&self.group, &self.normals[i], caps)?);
        Ok(self.quotients[i].get_or_init(|| q).clone())
    }

    fn index_of(&self, i: usize) -> BigUint {
        self.group.order() / self.normals[i].order()
    }
}

/// A Goursat triple `(N1, N2, φ)`.
#[derive(Clone, Debug)]
pub struct SubdirectDescriptor {
    pub q1: Arc<QuotientModel>,
    pub q2: Arc<QuotientModel>,
    pub iso: QuotientIso,
}

impl SubdirectDescriptor {
    pub fn n1(&self) -> &PermGroup {
        self.q1.kernel()
    }

    pub fn n2(&self) -> &PermGroup {
        self.q2.kernel()
    }

    pub fn quotient_order(&self) -> usize {
        self.q1.order()
    }

    /// `|G1| · |N2|`.
    pub fn subgroup_order(&self) -> BigUint {
        self.q1.parent().order() * self.n2().order()
    }

    pub fn is_valid(&self) -> bool {
        self.iso.verify(&self.q1, &self.q2)
    }
}

/// Every subdirect product of `G1 × G2`, or with `dedup` one per
/// conjugacy class under `G1 × G2`.
pub fn goursat_enumerate(
    f1: &Factor,
    f2: &Factor,
    caps: &Caps,
    dedup: bool,
) -> Result<Vec<SubdirectDescriptor>> {
    let mut out = Vec::new();
    for i in 0..f1.normals.len() {
        let index = f1.index_of(i);
        for j in 0..f2.normals.len() {
            if f2.index_of(j) != index {
                continue;
            }
            let q1 = f1.quotient(i, caps)?;
            let q2 = f2.quotient(j, caps)?;
            for iso in quotient_isomorphisms(&q1, &q2, dedup) {
                out.push(SubdirectDescriptor {
                    q1: q1.clone(),
                    q2: q2.clone(),
                    iso,
                });
            }
        }
    }
    Ok(out)
}

/// The subdirect product as a group on `Ω1 ⊔ Ω2`, with `Ω2` shifted up by
/// the degree of `G1`.
pub fn subdirect_group(desc: &SubdirectDescriptor) -> PermGroup {
    let g1 = desc.q1.parent();
    let id1 = Permutation::identity(g1.degree());
    let id2 = Permutation::identity(desc.q2.parent().degree());
    let images = desc.iso.generator_images(&desc.q1);
    let mut gens: Vec<Permutation> = g1
        .generators()
        .iter()
        .zip(&images)
        .map(|(g, &q)| g.direct_sum(desc.q2.representative(q)))
        .collect();
    gens.extend(desc.n1().generators().iter().map(|n| n.direct_sum(&id2)));
    gens.extend(desc.n2().generators().iter().map(|n| id1.direct_sum(n)));
    gens.retain(|g| !g.is_identity());
    let degree = g1.degree() + desc.q2.parent().degree();
    let order = desc.subgroup_order();
    let chain = StabChain::build(degree, &gens, &[], Some(&order));
    let group = PermGroup::with_chain(degree, gens, chain);
    debug_assert_eq!(group.order(), order);
    group
}

/// The subdirect product as a two-orbit action; fails unless both factors
/// are transitive of the same degree.
pub fn materialize(desc: &SubdirectDescriptor) -> Result<TwoOrbitAction> {
    TwoOrbitAction::new(subdirect_group(desc))
}

/// A derangement of the subdirect product, or `None` when there is none.
/// A coset pair `(c, φ(c))` yields one exactly when both cosets contain a
/// derangement of their factor.
pub fn subdirect_derangement(
    desc: &SubdirectDescriptor,
    caps: &Caps,
) -> Result<Option<Permutation>> {
    let d1 = desc.q1.derangement_cosets(caps.enumeration)?;
    let d2 = desc.q2.derangement_cosets(caps.enumeration)?;
    for (c, g1) in d1.iter().enumerate() {
        if let (Some(g1), Some(g2)) = (g1, &d2[desc.iso.image(c)]) {
            return Ok(Some(g1.direct_sum(g2)));
        }
    }
    Ok(None)
}
