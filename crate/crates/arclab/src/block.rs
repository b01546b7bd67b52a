//! Block systems of transitive groups: Atkinson's minimal-block algorithm
//! and the primitivity test built on it.

use crate::error::{Error, Result};
use crate::group::PermGroup;

/// A group-invariant partition of the domain into equal-size blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockSystem {
    pub partition: Vec<Vec<usize>>,
    pub block_size: usize,
}

impl BlockSystem {
    pub fn is_trivial(&self) -> bool {
        self.partition.len() == 1 || self.block_size == 1
    }

    /// Index of the block containing a point.
    pub fn block_of(&self, point: usize) -> Option<usize> {
        self.partition
            .iter()
            .position(|b| b.contains(&point))
    }

    /// Check the defining invariant against a group: the image of every
    /// block under every generator is again a block.
    pub fn is_invariant_under(&self, group: &PermGroup) -> bool {
        let degree = group.degree();
        let mut index = vec![usize::MAX; degree];
        for (bi, block) in self.partition.iter().enumerate() {
            for &p in block {
                index[p] = bi;
            }
        }
        if index.iter().any(|&b| b == usize::MAX) {
            return false;
        }
        for g in group.generators() {
            for block in &self.partition {
                let target = index[g.apply(block[0])];
                if block.iter().any(|&p| index[g.apply(p)] != target) {
                    return false;
                }
            }
        }
        true
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }
    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        // Keep the smaller point as representative for determinism.
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }
}

/// Atkinson's algorithm: the minimal G-invariant partition in which the two
/// given points share a block.  A single full-domain block signals that no
/// proper system contains the pair.
pub fn minimal_block_system(group: &PermGroup, a: usize, b: usize) -> Result<BlockSystem> {
    let n = group.degree();
    if a >= n || b >= n {
        return Err(Error::PointOutOfRange(a.max(b) + 1, n));
    }
    if !group.is_transitive() {
        return Err(Error::Intransitive);
    }
    if a == b {
        return Err(Error::InvalidArgument("pair must be two distinct points".into()));
    }
    let mut uf = UnionFind::new(n);
    uf.union(a, b);
    let mut queue = vec![b];
    while let Some(gamma) = queue.pop() {
        let delta = uf.find(gamma);
        for g in group.generators() {
            let r1 = uf.find(g.apply(gamma));
            let r2 = uf.find(g.apply(delta));
            if r1 != r2 {
                uf.union(r1, r2);
                // The representative that lost its class must be re-closed.
                let loser = if uf.find(r1) == r1 { r2 } else { r1 };
                queue.push(loser);
            }
        }
    }
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut index = vec![usize::MAX; n];
    for p in 0..n {
        let r = uf.find(p);
        if index[r] == usize::MAX {
            index[r] = blocks.len();
            blocks.push(Vec::new());
        }
        blocks[index[r]].push(p);
    }
    let block_size = blocks[0].len();
    debug_assert!(blocks.iter().all(|b| b.len() == block_size));
    Ok(BlockSystem {
        partition: blocks,
        block_size,
    })
}

/// True iff every pair (0, x) yields only the trivial block system.
pub fn is_primitive(group: &PermGroup) -> Result<bool> {
    if !group.is_transitive() {
        return Err(Error::Intransitive);
    }
    if group.degree() == 1 {
        return Ok(true);
    }
    for x in 1..group.degree() {
        if !minimal_block_system(group, 0, x)?.is_trivial() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Build a block system from an explicit partition, checking invariance.
pub fn block_system_from_partition(
    group: &PermGroup,
    partition: Vec<Vec<usize>>,
) -> Result<BlockSystem> {
    let block_size = partition.first().map(|b| b.len()).unwrap_or(0);
    let system = BlockSystem {
        partition,
        block_size,
    };
    if system.partition.iter().any(|b| b.len() != block_size) {
        return Err(Error::InvalidArgument("blocks have unequal sizes".into()));
    }
    if !system.is_invariant_under(group) {
        return Err(Error::InvalidArgument(
            "partition is not invariant under the group".into(),
        ));
    }
    Ok(system)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Perm;

    fn grp(gens: &[&str], n: usize) -> PermGroup {
        PermGroup::new(
            n,
            gens.iter()
                .map(|s| Perm::parse_cycles(s, n).unwrap())
                .collect(),
        )
        .unwrap()
    }

    /// Brute-force oracle: enumerate all invariant partitions of a small
    /// domain with the pair in one block and return the finest.
    fn oracle_minimal_blocks(group: &PermGroup, a: usize, b: usize) -> Vec<Vec<usize>> {
        let n = group.degree();
        // Enumerate set partitions of {0..n-1} (n small).
        fn partitions(n: usize) -> Vec<Vec<usize>> {
            // Each partition encoded as an assignment point -> class id.
            let mut out = vec![vec![0usize]];
            for _ in 1..n {
                let mut next = Vec::new();
                for p in &out {
                    let max = *p.iter().max().unwrap();
                    for c in 0..=max + 1 {
                        let mut q = p.clone();
                        q.push(c);
                        next.push(q);
                    }
                }
                out = next;
            }
            out
        }
        let mut best: Option<Vec<usize>> = None;
        for assign in partitions(n) {
            if assign[a] != assign[b] {
                continue;
            }
            let sizes: std::collections::HashMap<usize, usize> =
                assign.iter().fold(Default::default(), |mut m, &c| {
                    *m.entry(c).or_insert(0) += 1;
                    m
                });
            if sizes.values().any(|&s| s != sizes[&assign[0]]) {
                continue;
            }
            let invariant = group.generators().iter().all(|g| {
                (0..n).all(|p| {
                    (0..n).all(|q| {
                        assign[p] != assign[q] || assign[g.apply(p)] == assign[g.apply(q)]
                    })
                })
            });
            if invariant {
                let better = match &best {
                    None => true,
                    Some(cur) => {
                        sizes[&assign[a]]
                            < cur.iter().filter(|&&c| c == cur[a]).count()
                    }
                };
                if better {
                    best = Some(assign);
                }
            }
        }
        let assign = best.unwrap();
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        let mut ids: Vec<usize> = Vec::new();
        for p in 0..n {
            match ids.iter().position(|&c| c == assign[p]) {
                Some(i) => blocks[i].push(p),
                None => {
                    ids.push(assign[p]);
                    blocks.push(vec![p]);
                }
            }
        }
        blocks
    }

    #[test]
    fn c4_pair_1_3() {
        let g = grp(&["(1,2,3,4)"], 4);
        let system = minimal_block_system(&g, 0, 2).unwrap();
        assert_eq!(system.partition, vec![vec![0, 2], vec![1, 3]]);
        assert_eq!(oracle_minimal_blocks(&g, 0, 2), system.partition);
        assert!(system.is_invariant_under(&g));
    }

    #[test]
    fn d8_pair_1_3() {
        let g = grp(&["(1,2,3,4)", "(1,3)"], 4);
        let system = minimal_block_system(&g, 0, 2).unwrap();
        assert_eq!(system.partition, vec![vec![0, 2], vec![1, 3]]);
        assert_eq!(oracle_minimal_blocks(&g, 0, 2), system.partition);
    }

    #[test]
    fn s5_is_primitive() {
        let g = grp(&["(1,2)", "(1,2,3,4,5)"], 5);
        assert!(is_primitive(&g).unwrap());
        let system = minimal_block_system(&g, 0, 3).unwrap();
        assert!(system.is_trivial());
        assert_eq!(system.block_size, 5);
    }

    #[test]
    fn c6_is_imprimitive() {
        let g = grp(&["(1,2,3,4,5,6)"], 6);
        assert!(!is_primitive(&g).unwrap());
    }

    #[test]
    fn intransitive_rejected() {
        let g = grp(&["(1,2)"], 4);
        assert!(matches!(is_primitive(&g), Err(Error::Intransitive)));
        assert!(matches!(
            minimal_block_system(&g, 0, 1),
            Err(Error::Intransitive)
        ));
    }
}
