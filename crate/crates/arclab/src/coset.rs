//! The action of a group on the right cosets of a subgroup, by right
//! multiplication.  Cosets are indexed in breadth-first discovery order
//! starting from U·1, with canonical representatives of least base-image
//! sequence, so coset numbering is reproducible run-to-run.

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Perm;
use num_bigint::BigUint;
use std::collections::HashMap;

pub const DEFAULT_MAX_INDEX: usize = 1_000_000;

#[derive(Clone, Debug)]
pub struct CosetAction {
    pub parent: PermGroup,
    pub subgroup: PermGroup,
    /// Canonical representative of coset i; representatives[0] represents U·1.
    pub representatives: Vec<Perm>,
    index_of: HashMap<Perm, usize>,
    /// Induced coset permutation of each parent generator, in order.
    pub gen_images: Vec<Perm>,
    /// The induced permutation group on {0..index}.
    pub action: PermGroup,
}

impl CosetAction {
    pub fn index(&self) -> usize {
        self.representatives.len()
    }

    /// The coset U·x containing x; x must lie in the parent group.
    pub fn coset_of(&self, x: &Perm) -> Result<usize> {
        let canon = self.subgroup.chain().minimal_coset_rep(x);
        self.index_of.get(&canon).copied().ok_or_else(|| {
            Error::InvalidArgument("element lies outside the parent group".into())
        })
    }

    /// The permutation of cosets induced by g ∈ G.
    pub fn permutation_of(&self, g: &Perm) -> Result<Perm> {
        let images = self
            .representatives
            .iter()
            .map(|r| {
                let prod = r.compose(g)?;
                Ok(self.coset_of(&prod)? as u32)
            })
            .collect::<Result<Vec<u32>>>()?;
        Perm::from_images(images)
    }

    /// True when no nonidentity element acts trivially, i.e. the subgroup
    /// is core-free in the parent.
    pub fn is_faithful(&self) -> bool {
        self.action.order() == self.parent.order()
    }
}

/// Build the right-coset action of `parent` on cosets of `subgroup`.
pub fn coset_action(parent: &PermGroup, subgroup: &PermGroup) -> Result<CosetAction> {
    coset_action_bounded(parent, subgroup, DEFAULT_MAX_INDEX)
}

pub fn coset_action_bounded(
    parent: &PermGroup,
    subgroup: &PermGroup,
    max_index: usize,
) -> Result<CosetAction> {
    if !subgroup.is_subgroup_of(parent)? {
        return Err(Error::NotASubgroup(
            "coset action requires the subgroup to lie in the parent".into(),
        ));
    }
    let expected = parent.order() / subgroup.order();
    if expected > BigUint::from(max_index) {
        return Err(Error::ThresholdExceeded(format!(
            "coset index {expected} exceeds the limit {max_index}"
        )));
    }
    let chain = subgroup.chain();
    let start = chain.minimal_coset_rep(&Perm::identity(parent.degree()));
    let mut representatives = vec![start.clone()];
    let mut index_of = HashMap::new();
    index_of.insert(start, 0usize);
    let n_gens = parent.generators().len();
    let mut images: Vec<Vec<u32>> = vec![Vec::new(); n_gens];
    let mut i = 0;
    while i < representatives.len() {
        for (gi, s) in parent.generators().iter().enumerate() {
            let canon = chain.minimal_coset_rep(&representatives[i].compose(s)?);
            let j = *index_of.entry(canon.clone()).or_insert_with(|| {
                representatives.push(canon);
                representatives.len() - 1
            });
            images[gi].push(j as u32);
        }
        i += 1;
    }
    if BigUint::from(representatives.len()) != expected {
        return Err(Error::InvalidArgument(format!(
            "coset enumeration found {} cosets, index is {expected}",
            representatives.len()
        )));
    }
    let gen_images = images
        .into_iter()
        .map(Perm::from_images)
        .collect::<Result<Vec<Perm>>>()?;
    let action = PermGroup::new(representatives.len(), gen_images.clone())?;
    Ok(CosetAction {
        parent: parent.clone(),
        subgroup: subgroup.clone(),
        representatives,
        index_of,
        gen_images,
        action,
    })
}
