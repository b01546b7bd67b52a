//! Faithful imprimitive realization of subgroups of H Wr K on Δ × {1..k}.
//!
//! Base tuples (h₁,…,h_k) act inside the k coordinate blocks; top elements
//! permute the blocks.  The product action on Δ^k is never materialized;
//! its block structure is recovered analytically by the `pa` module.

use crate::block::BlockSystem;
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Perm;

/// Coordinate frame for permutations on Δ × {1..k}: block `j` (0-based)
/// holds points `j·|Δ| .. (j+1)·|Δ|`.
#[derive(Clone, Debug)]
pub struct WreathFrame {
    pub base_degree: usize,
    pub k: usize,
}

impl WreathFrame {
    pub fn new(base_degree: usize, k: usize) -> Result<Self> {
        if base_degree == 0 || k == 0 {
            return Err(Error::InvalidArgument(
                "wreath frame needs a nonempty base domain and k >= 1".into(),
            ));
        }
        Ok(WreathFrame { base_degree, k })
    }

    pub fn degree(&self) -> usize {
        self.base_degree * self.k
    }

    pub fn point(&self, block: usize, delta: usize) -> usize {
        block * self.base_degree + delta
    }

    pub fn split(&self, point: usize) -> (usize, usize) {
        (point / self.base_degree, point % self.base_degree)
    }

    /// The base element (h₁,…,h_k), acting within blocks.
    pub fn base_element(&self, entries: &[Perm]) -> Result<Perm> {
        if entries.len() != self.k {
            return Err(Error::InvalidArgument(format!(
                "expected {} coordinate entries, got {}",
                self.k,
                entries.len()
            )));
        }
        let mut images = Vec::with_capacity(self.degree());
        for (j, h) in entries.iter().enumerate() {
            if h.degree() != self.base_degree {
                return Err(Error::DegreeMismatch(self.base_degree, h.degree()));
            }
            for delta in 0..self.base_degree {
                images.push(self.point(j, h.apply(delta)) as u32);
            }
        }
        Perm::from_images(images)
    }

    /// The diagonal base element (h,…,h).
    pub fn diagonal(&self, h: &Perm) -> Result<Perm> {
        self.base_element(&vec![h.clone(); self.k])
    }

    /// The top element for a coordinate permutation: (δ, j) ↦ (δ, c(j)).
    pub fn top_element(&self, c: &Perm) -> Result<Perm> {
        if c.degree() != self.k {
            return Err(Error::DegreeMismatch(self.k, c.degree()));
        }
        let mut images = vec![0u32; self.degree()];
        for j in 0..self.k {
            for delta in 0..self.base_degree {
                images[self.point(j, delta)] = self.point(c.apply(j), delta) as u32;
            }
        }
        Perm::from_images(images)
    }

    /// A general wreath element (f; σ): first the base tuple, then the
    /// block permutation.
    pub fn element(&self, entries: &[Perm], c: &Perm) -> Result<Perm> {
        self.base_element(entries)?.compose(&self.top_element(c)?)
    }

    /// The coordinate-block partition.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        (0..self.k)
            .map(|j| (0..self.base_degree).map(|d| self.point(j, d)).collect())
            .collect()
    }

    pub fn block_system(&self) -> BlockSystem {
        BlockSystem {
            partition: self.blocks(),
            block_size: self.base_degree,
        }
    }

    /// The permutation of coordinates induced by `g`; errors if `g` does
    /// not permute the blocks.
    pub fn factor_of(&self, g: &Perm) -> Result<Perm> {
        if g.degree() != self.degree() {
            return Err(Error::DegreeMismatch(self.degree(), g.degree()));
        }
        let mut images = Vec::with_capacity(self.k);
        for j in 0..self.k {
            let (target, _) = self.split(g.apply(self.point(j, 0)));
            for delta in 1..self.base_degree {
                let (t2, _) = self.split(g.apply(self.point(j, delta)));
                if t2 != target {
                    return Err(Error::InvalidArgument(
                        "element does not permute the coordinate blocks".into(),
                    ));
                }
            }
            images.push(target as u32);
        }
        Perm::from_images(images)
    }

    /// The coordinate entries of a block-preserving element.
    pub fn entries_of(&self, g: &Perm) -> Result<Vec<Perm>> {
        let factor = self.factor_of(&g.clone())?;
        if !factor.is_identity() {
            return Err(Error::InvalidArgument(
                "element moves coordinates; it has no plain entry tuple".into(),
            ));
        }
        (0..self.k)
            .map(|j| {
                Perm::from_images(
                    (0..self.base_degree)
                        .map(|d| {
                            let (_, image) = self.split(g.apply(self.point(j, d)));
                            image as u32
                        })
                        .collect(),
                )
            })
            .collect()
    }
}

/// A group of wreath elements together with its frame, as produced by
/// `wreath_embed`.
#[derive(Clone, Debug)]
pub struct WreathEmbedding {
    pub frame: WreathFrame,
    pub group: PermGroup,
}

/// Embed the group generated by the given base tuples and top coordinate
/// permutations into Sym(Δ × {1..k}).  All tuple entries must lie in `base`.
pub fn wreath_embed(
    base: &PermGroup,
    k: usize,
    base_tuples: &[Vec<Perm>],
    top_images: &[Perm],
) -> Result<WreathEmbedding> {
    let frame = WreathFrame::new(base.degree(), k)?;
    let mut gens = Vec::new();
    for tuple in base_tuples {
        for h in tuple {
            if !base.contains(h)? {
                return Err(Error::InvalidArgument(
                    "tuple entry lies outside the base group".into(),
                ));
            }
        }
        gens.push(frame.base_element(tuple)?);
    }
    for c in top_images {
        gens.push(frame.top_element(c)?);
    }
    if gens.is_empty() {
        gens.push(Perm::identity(frame.degree()));
    }
    Ok(WreathEmbedding {
        group: PermGroup::new(frame.degree(), gens)?,
        frame,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{make_standard, StandardKind};
    use num_bigint::BigUint;

    #[test]
    fn diagonal_with_swap() {
        let s3 = make_standard(StandardKind::Symmetric, 3).unwrap();
        let g = Perm::parse_cycles("(1,2,3)", 3).unwrap();
        let swap = Perm::parse_cycles("(1,2)", 2).unwrap();
        let w = wreath_embed(&s3, 2, &[vec![g.clone(), g]], &[swap]).unwrap();
        // ⟨diag(C₃), block swap⟩ ≅ C₃ × C₂, order dividing |S₃ Wr C₂| = 72.
        assert_eq!(w.group.order(), BigUint::from(6u32));
        let top = w.frame.top_element(&Perm::parse_cycles("(1,2)", 2).unwrap()).unwrap();
        assert_eq!(top.order(), 2);
        assert!(w.frame.block_system().is_invariant_under(&w.group));
    }

    #[test]
    fn trivial_input_gives_trivial_group() {
        let s3 = make_standard(StandardKind::Symmetric, 3).unwrap();
        let id3 = Perm::identity(3);
        let w = wreath_embed(&s3, 2, &[vec![id3.clone(), id3]], &[Perm::identity(2)]).unwrap();
        assert!(w.group.is_trivial());
    }

    #[test]
    fn base_elements_stay_in_blocks_and_kernel_is_base() {
        let s3 = make_standard(StandardKind::Symmetric, 3).unwrap();
        let a = Perm::parse_cycles("(1,2)", 3).unwrap();
        let b = Perm::parse_cycles("(1,2,3)", 3).unwrap();
        let c3 = Perm::parse_cycles("(1,2,3)", 3).unwrap();
        let w = wreath_embed(
            &s3,
            3,
            &[vec![a.clone(), b.clone(), a.clone()], vec![b.clone(), a.clone(), a]],
            &[c3],
        )
        .unwrap();
        let system = w.frame.block_system();
        assert!(system.is_invariant_under(&w.group));
        // The factor map is defined on every generator, and kernel elements
        // are exactly the block-preserving ones.
        for g in w.group.generators() {
            let f = w.frame.factor_of(g).unwrap();
            if f.is_identity() {
                assert!(w.frame.entries_of(g).is_ok());
            }
        }
    }

    #[test]
    fn factor_and_entries_round_trip() {
        let s3 = make_standard(StandardKind::Symmetric, 3).unwrap();
        let frame = WreathFrame::new(3, 4).unwrap();
        let a = Perm::parse_cycles("(1,2)", 3).unwrap();
        let b = Perm::parse_cycles("(1,3)", 3).unwrap();
        let entries = vec![a.clone(), b.clone(), a.clone(), Perm::identity(3)];
        let g = frame.base_element(&entries).unwrap();
        assert_eq!(frame.entries_of(&g).unwrap(), entries);
        let c = Perm::parse_cycles("(1,2,3,4)", 4).unwrap();
        let mixed = frame.element(&entries, &c).unwrap();
        assert_eq!(frame.factor_of(&mixed).unwrap(), c);
        let _ = s3;
    }
}
