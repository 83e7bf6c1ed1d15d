//! Block systems of transitive actions.

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;

/// A `G`-invariant partition of one orbit into blocks of equal size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockSystem {
    pub degree: usize,
    /// Block id of each point of the orbit; `None` outside the orbit.
    pub block_of: Vec<Option<usize>>,
    pub num_blocks: usize,
    pub block_size: usize,
}

impl BlockSystem {
    fn from_labels(degree: usize, orbit: &[usize], root: &[usize]) -> Self {
        let mut block_of = vec![None; degree];
        let mut id_of_root = vec![usize::MAX; degree];
        let mut num_blocks = 0;
        for &x in orbit {
            let r = root[x];
            if id_of_root[r] == usize::MAX {
                id_of_root[r] = num_blocks;
                num_blocks += 1;
            }
            block_of[x] = Some(id_of_root[r]);
        }
        Self {
            degree,
            block_of,
            num_blocks,
            block_size: orbit.len() / num_blocks,
        }
    }

    /// Blocks as sorted point lists, ordered by block id.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.num_blocks];
        for (x, b) in self.block_of.iter().enumerate() {
            if let Some(b) = b {
                out[*b].push(x);
            }
        }
        out
    }

    pub fn is_trivial(&self) -> bool {
        self.num_blocks == 1 || self.block_size == 1
    }

    /// True when every generator maps blocks onto blocks.
    pub fn is_invariant_under(&self, gens: &[Permutation]) -> bool {
        let blocks = self.blocks();
        gens.iter().all(|g| {
            blocks.iter().all(|block| {
                let target = self.block_of[g.image(block[0])];
                block.iter().all(|&x| self.block_of[g.image(x)] == target)
            })
        })
    }

    /// `self` is at least as fine as `other`: each block of `self` lies in
    /// a block of `other`.
    pub fn refines(&self, other: &BlockSystem) -> bool {
        self.blocks().iter().all(|block| {
            let b = other.block_of[block[0]];
            block.iter().all(|&x| other.block_of[x] == b)
        })
    }

    /// Action of the group on the blocks.
    pub fn block_action(&self, group: &PermGroup) -> PermGroup {
        let blocks = self.blocks();
        let gens = group
            .generators()
            .iter()
            .map(|g| {
                let images: Vec<usize> = blocks
                    .iter()
                    .map(|b| self.block_of[g.image(b[0])].unwrap())
                    .collect();
                Permutation::from_images(&images).expect("block system is invariant")
            })
            .filter(|g| !g.is_identity())
            .collect();
        PermGroup::new(self.num_blocks, gens).unwrap()
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut y = x;
        while self.parent[y] != r {
            let next = self.parent[y];
            self.parent[y] = r;
            y = next;
        }
        r
    }

    /// Merges the classes of `a` and `b`; keeps the smaller point as root.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }
}

fn check_transitive(group: &PermGroup, orbit: &[usize]) -> Result<Vec<usize>> {
    let mut sorted = orbit.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let first = *sorted.first().ok_or(Error::NotTransitive)?;
    if group.orbit(first)? != sorted {
        return Err(Error::NotTransitive);
    }
    Ok(sorted)
}

/// Finest block system in which `a` and `b` share a block.
fn block_system_joining(group: &PermGroup, orbit: &[usize], a: usize, b: usize) -> BlockSystem {
    let mut uf = UnionFind::new(group.degree());
    let mut queue = vec![(a, b)];
    uf.union(a, b);
    while let Some((x, y)) = queue.pop() {
        for g in group.generators() {
            let (gx, gy) = (g.image(x), g.image(y));
            if uf.union(gx, gy) {
                queue.push((gx, gy));
            }
        }
    }
    let root: Vec<usize> = (0..group.degree()).map(|x| uf.find(x)).collect();
    BlockSystem::from_labels(group.degree(), orbit, &root)
}

/// All minimal nontrivial block systems of `group` on `orbit`. The list is
/// empty exactly when the action on the orbit is primitive.
pub fn minimal_block_systems(group: &PermGroup, orbit: &[usize]) -> Result<Vec<BlockSystem>> {
    let orbit = check_transitive(group, orbit)?;
    let alpha = orbit[0];
    let mut candidates: Vec<BlockSystem> = Vec::new();
    for &beta in &orbit[1..] {
        let sys = block_system_joining(group, &orbit, alpha, beta);
        if sys.num_blocks > 1 && !candidates.contains(&sys) {
            candidates.push(sys);
        }
    }
    let minimal = candidates
        .iter()
        .filter(|s| !candidates.iter().any(|t| t != *s && t.refines(s)))
        .cloned()
        .collect();
    Ok(minimal)
}

pub fn is_primitive(group: &PermGroup, orbit: &[usize]) -> Result<bool> {
    Ok(minimal_block_systems(group, orbit)?.is_empty())
}

/// Every nontrivial block system, obtained by pulling back the block
/// systems of the actions on the blocks of each minimal system.
pub fn all_block_systems(group: &PermGroup, orbit: &[usize]) -> Result<Vec<BlockSystem>> {
    let orbit = check_transitive(group, orbit)?;
    let mut out: Vec<BlockSystem> = Vec::new();
    for sys in minimal_block_systems(group, &orbit)? {
        let blocks = sys.blocks();
        if !out.contains(&sys) {
            out.push(sys.clone());
        }
        let quotient = sys.block_action(group);
        let all_blocks: Vec<usize> = (0..sys.num_blocks).collect();
        for upper in all_block_systems(&quotient, &all_blocks)? {
            let mut block_of = vec![None; group.degree()];
            for (i, block) in blocks.iter().enumerate() {
                for &x in block {
                    block_of[x] = upper.block_of[i];
                }
            }
            let pulled = BlockSystem {
                degree: group.degree(),
                block_of,
                num_blocks: upper.num_blocks,
                block_size: sys.block_size * upper.block_size,
            };
            if !out.contains(&pulled) {
                out.push(pulled);
            }
        }
    }
    Ok(out)
}
