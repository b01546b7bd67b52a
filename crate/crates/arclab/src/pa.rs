//! Product-structure bookkeeping for groups realized inside H Wr S_k on
//! Δ × {1..k}: coordinate projections, the straight / twisted /
//! nondiagonal trichotomy for stabilizers inside the base power, and the
//! imprimitivity report with its block-witness subgroup chain.

use crate::block::BlockSystem;
use crate::coset::CosetAction;
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Perm;
use crate::wreath::WreathFrame;
use num_bigint::BigUint;
use num_traits::One;
use serde::Serialize;

/// A permutation group carried together with its wreath coordinate frame.
/// Every element must permute the k coordinate blocks.
#[derive(Clone, Debug)]
pub struct ProductGroup {
    pub frame: WreathFrame,
    pub group: PermGroup,
}

impl ProductGroup {
    pub fn new(frame: WreathFrame, group: PermGroup) -> Result<Self> {
        if group.degree() != frame.degree() {
            return Err(Error::DegreeMismatch(frame.degree(), group.degree()));
        }
        for g in group.generators() {
            frame.factor_of(g)?;
        }
        Ok(ProductGroup { frame, group })
    }

    pub fn k(&self) -> usize {
        self.frame.k
    }

    pub fn block_system(&self) -> BlockSystem {
        self.frame.block_system()
    }

    /// The induced permutation group of the k coordinates.
    pub fn factor_image(&self) -> Result<PermGroup> {
        let gens = self
            .group
            .generators()
            .iter()
            .map(|g| self.frame.factor_of(g))
            .collect::<Result<Vec<_>>>()?;
        PermGroup::new(self.frame.k, gens)
    }
}

/// The i-th coordinate projection of a subgroup lying in the base part.
pub fn project(pg: &ProductGroup, subgroup: &PermGroup, i: usize) -> Result<PermGroup> {
    if i >= pg.k() {
        return Err(Error::PointOutOfRange(i, pg.k()));
    }
    let mut gens = Vec::new();
    for g in subgroup.generators() {
        let entries = pg.frame.entries_of(g)?;
        gens.push(entries[i].clone());
    }
    if gens.is_empty() {
        gens.push(Perm::identity(pg.frame.base_degree));
    }
    PermGroup::new(pg.frame.base_degree, gens)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum DiagonalVerdict {
    Straight,
    Twisted,
    Nondiagonal,
}

#[derive(Clone, Debug)]
pub struct DiagonalClassification {
    pub verdict: DiagonalVerdict,
    pub projections: Vec<PermGroup>,
    /// For a twisted verdict, a generator whose coordinate entries differ.
    pub witness: Option<Perm>,
    /// For a nondiagonal verdict, (|subgroup|, smallest projection order).
    pub order_ratio: Option<(BigUint, BigUint)>,
}

/// Classify a stabilizer lying in the base part, relative to the given
/// coordinate frame: straight when every generator is a constant tuple,
/// twisted when it is diagonal (order equal to every projection order)
/// but not straight, nondiagonal otherwise.
pub fn classify_diagonal(
    pg: &ProductGroup,
    stabilizer: &PermGroup,
) -> Result<DiagonalClassification> {
    let projections: Vec<PermGroup> = (0..pg.k())
        .map(|i| project(pg, stabilizer, i))
        .collect::<Result<_>>()?;
    let mut witness = None;
    for g in stabilizer.generators() {
        let entries = pg.frame.entries_of(g)?;
        if entries.iter().any(|e| *e != entries[0]) {
            witness = Some(g.clone());
            break;
        }
    }
    if witness.is_none() {
        return Ok(DiagonalClassification {
            verdict: DiagonalVerdict::Straight,
            projections,
            witness: None,
            order_ratio: None,
        });
    }
    let order = stabilizer.order();
    if projections.iter().all(|p| p.order() == order) {
        return Ok(DiagonalClassification {
            verdict: DiagonalVerdict::Twisted,
            projections,
            witness,
            order_ratio: None,
        });
    }
    let least = projections.iter().map(|p| p.order()).min().unwrap();
    Ok(DiagonalClassification {
        verdict: DiagonalVerdict::Nondiagonal,
        projections,
        witness: None,
        order_ratio: Some((order, least)),
    })
}

fn big_to_string<S: serde::Serializer>(x: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

#[derive(Clone, Debug, Serialize)]
pub struct WitnessChain {
    #[serde(serialize_with = "big_to_string")]
    pub stabilizer_order: BigUint,
    #[serde(serialize_with = "big_to_string")]
    pub block_stabilizer_order: BigUint,
    #[serde(serialize_with = "big_to_string")]
    pub group_order: BigUint,
    pub strict: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct PaReport {
    pub k: usize,
    /// |N| = |T|^j.
    pub socle_exponent: u32,
    #[serde(serialize_with = "big_to_string")]
    pub factor_order: BigUint,
    pub factor_transitive: bool,
    /// What N-transitivity was checked against.
    pub transitivity_scope: String,
    pub n_transitive: bool,
    pub witness_chain: WitnessChain,
}

/// The imprimitivity report for a socle candidate N = T^j and a vertex
/// stabilizer.  The block-witness overgroup is generated by the
/// stabilizer together with the coordinate injections of its base-part
/// projections; its orbit through the base vertex is a block, so strict
/// order inequalities certify that the action on the vertex orbit is not
/// primitive.
pub fn pa_report(
    pg: &ProductGroup,
    stabilizer: &PermGroup,
    n_alpha: &PermGroup,
    n: &PermGroup,
    vertex_orbit: Option<&CosetAction>,
) -> Result<PaReport> {
    let factor_order = project(pg, n, 0).map(|p| p.order());
    // |T| is the order of the first coordinate projection of N.
    let t_order = factor_order?;
    let n_order = n.order();
    let mut j = 0u32;
    let mut acc = BigUint::one();
    while acc < n_order {
        acc *= &t_order;
        j += 1;
    }
    if acc != n_order {
        return Err(Error::InvalidArgument(format!(
            "|N| = {n_order} is not a power of |T| = {t_order}"
        )));
    }
    if j < 2 {
        return Err(Error::InvalidArgument(format!(
            "socle exponent {j} is below 2; no product structure"
        )));
    }

    let factor = pg.factor_image()?;
    let factor_transitive = factor.is_transitive();

    let (transitivity_scope, n_transitive) = match vertex_orbit {
        Some(orbit) => {
            let gens = n
                .generators()
                .iter()
                .map(|g| orbit.permutation_of(g))
                .collect::<Result<Vec<_>>>()?;
            let image = PermGroup::new(orbit.index(), gens)?;
            ("vertex-orbit".to_string(), image.is_transitive())
        }
        None => {
            let blocks = pg.block_system();
            let orbits = n.orbits();
            let mut sorted: Vec<Vec<usize>> = orbits;
            sorted.sort();
            let mut expected = blocks.partition.clone();
            expected.sort();
            ("coordinate-blocks".to_string(), sorted == expected)
        }
    };

    // Block witness.  With the vertex orbit in hand, take the setwise
    // stabilizer of a minimal nontrivial block through the base vertex;
    // its order is |G|·(block size)/(orbit size).  Otherwise adjoin each
    // projection of the base stabilizer part as a single-coordinate
    // subgroup; the result sits between G_α and G, and is proper
    // whenever the projections are proper in T.
    let block_stabilizer_order = match vertex_orbit {
        Some(orbit) => {
            let action = &orbit.action;
            let n = orbit.index();
            let mut found = None;
            for b in 1..n {
                let bs = crate::block::minimal_block_system(action, 0, b)?;
                if !bs.is_trivial() {
                    found = Some(bs.block_size);
                    break;
                }
            }
            match found {
                Some(size) => orbit.parent.order() * BigUint::from(size) / BigUint::from(n),
                None => stabilizer.order(),
            }
        }
        None => {
            let mut over_gens: Vec<Perm> = stabilizer.generators().to_vec();
            for i in 0..pg.k() {
                let proj = project(pg, n_alpha, i)?;
                for t in proj.proper_generators() {
                    let mut entries = vec![Perm::identity(pg.frame.base_degree); pg.k()];
                    entries[i] = t.clone();
                    over_gens.push(pg.frame.base_element(&entries)?);
                }
            }
            PermGroup::new(pg.frame.degree(), over_gens)?.order()
        }
    };
    let chain = WitnessChain {
        stabilizer_order: stabilizer.order(),
        block_stabilizer_order: block_stabilizer_order.clone(),
        group_order: pg.group.order(),
        strict: stabilizer.order() < block_stabilizer_order
            && block_stabilizer_order < pg.group.order(),
    };

    Ok(PaReport {
        k: pg.k(),
        socle_exponent: j,
        factor_order: t_order,
        factor_transitive,
        transitivity_scope,
        n_transitive,
        witness_chain: chain,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{make_standard, StandardKind};
    use crate::wreath::WreathFrame;

    fn s3() -> PermGroup {
        make_standard(StandardKind::Symmetric, 3).unwrap()
    }

    fn p(s: &str, n: usize) -> Perm {
        Perm::parse_cycles(s, n).unwrap()
    }

    #[test]
    fn straight_diagonal_detected_and_projections_match() {
        let frame = WreathFrame::new(3, 4).unwrap();
        let g = p("(1,2,3)", 3);
        let diag = frame.diagonal(&g).unwrap();
        let top = frame.top_element(&p("(1,2,3,4)", 4)).unwrap();
        let group = PermGroup::new(12, vec![diag.clone(), top]).unwrap();
        let pg = ProductGroup::new(frame, group).unwrap();
        let stab = PermGroup::new(12, vec![diag]).unwrap();
        let c = classify_diagonal(&pg, &stab).unwrap();
        assert_eq!(c.verdict, DiagonalVerdict::Straight);
        for proj in &c.projections {
            assert_eq!(proj.order(), 3u32.into());
        }
        let _ = s3();
    }

    #[test]
    fn twisted_diagonal_detected_with_witness() {
        let frame = WreathFrame::new(3, 2).unwrap();
        let g = p("(1,2,3)", 3);
        let g2 = p("(1,3,2)", 3);
        let tw = frame.base_element(&[g.clone(), g2]).unwrap();
        let group = PermGroup::new(6, vec![tw.clone()]).unwrap();
        let pg = ProductGroup::new(frame, group.clone()).unwrap();
        let c = classify_diagonal(&pg, &group).unwrap();
        assert_eq!(c.verdict, DiagonalVerdict::Twisted);
        assert!(c.witness.is_some());
        assert_eq!(c.projections[0].order(), group.order());
    }

    #[test]
    fn nondiagonal_detected_with_order_ratio() {
        let frame = WreathFrame::new(3, 2).unwrap();
        let a = frame.base_element(&[p("(1,2,3)", 3), Perm::identity(3)]).unwrap();
        let b = frame.base_element(&[Perm::identity(3), p("(1,2,3)", 3)]).unwrap();
        let group = PermGroup::new(6, vec![a, b]).unwrap();
        let pg = ProductGroup::new(frame, group.clone()).unwrap();
        let c = classify_diagonal(&pg, &group).unwrap();
        assert_eq!(c.verdict, DiagonalVerdict::Nondiagonal);
        let (n, p1) = c.order_ratio.unwrap();
        assert_eq!(n, 9u32.into());
        assert_eq!(p1, 3u32.into());
    }

    #[test]
    fn verdict_invariant_under_coordinate_reordering() {
        let frame = WreathFrame::new(3, 3).unwrap();
        let tw = frame
            .base_element(&[p("(1,2,3)", 3), p("(1,3,2)", 3), p("(1,2,3)", 3)])
            .unwrap();
        let group = PermGroup::new(9, vec![tw]).unwrap();
        let pg = ProductGroup::new(frame.clone(), group.clone()).unwrap();
        let before = classify_diagonal(&pg, &group).unwrap().verdict;
        for c in ["(1,2)", "(1,2,3)", "(2,3)"] {
            let reorder = frame.top_element(&p(c, 3)).unwrap();
            let moved = group.conjugate_by(&reorder).unwrap();
            let pg2 = ProductGroup::new(frame.clone(), moved.clone()).unwrap();
            assert_eq!(classify_diagonal(&pg2, &moved).unwrap().verdict, before);
        }
    }

    #[test]
    fn conjugating_straight_diagonal_by_base_element_twists_it() {
        let frame = WreathFrame::new(3, 2).unwrap();
        let g = p("(1,2,3)", 3);
        let diag = frame.diagonal(&g).unwrap();
        let group = PermGroup::new(6, vec![diag.clone()]).unwrap();
        let shift = frame.base_element(&[p("(1,2)", 3), Perm::identity(3)]).unwrap();
        let moved = group.conjugate_by(&shift).unwrap();
        let pg = ProductGroup::new(frame, moved.clone()).unwrap();
        assert_eq!(
            classify_diagonal(&pg, &moved).unwrap().verdict,
            DiagonalVerdict::Twisted
        );
    }

    #[test]
    fn report_for_straight_wreath_with_diagonal_stabilizer() {
        // S_3 Wr C_2 with N = S_3 × S_3 and the straight diagonal
        // stabilizer ⟨diag(S_3), block swap⟩.
        let frame = WreathFrame::new(3, 2).unwrap();
        let a = frame.diagonal(&p("(1,2)", 3)).unwrap();
        let b = frame.diagonal(&p("(1,2,3)", 3)).unwrap();
        let e1 = frame.base_element(&[p("(1,2)", 3), Perm::identity(3)]).unwrap();
        let e2 = frame.base_element(&[p("(1,2,3)", 3), Perm::identity(3)]).unwrap();
        let swap = frame.top_element(&p("(1,2)", 2)).unwrap();
        let group = PermGroup::new(6, vec![e1.clone(), e2.clone(), swap.clone()]).unwrap();
        let pg = ProductGroup::new(frame, group).unwrap();
        let n = pg
            .group
            .normal_closure(&PermGroup::new(6, vec![e1, e2]).unwrap())
            .unwrap();
        assert_eq!(n.order(), 36u32.into());
        let stab = PermGroup::new(6, vec![a.clone(), b.clone(), swap]).unwrap();
        let n_alpha = PermGroup::new(6, vec![a, b]).unwrap();
        let orbit = crate::coset::coset_action(&pg.group, &stab).unwrap();
        let report = pa_report(&pg, &stab, &n_alpha, &n, Some(&orbit)).unwrap();
        assert_eq!(report.socle_exponent, 2);
        assert_eq!(report.factor_order, 6u32.into());
        assert!(report.factor_transitive);
        assert!(report.n_transitive);
        assert!(report.witness_chain.strict);
        assert_eq!(report.witness_chain.stabilizer_order, 12u32.into());
        assert_eq!(report.witness_chain.group_order, 72u32.into());
    }

    #[test]
    fn non_power_socle_rejected() {
        let frame = WreathFrame::new(3, 2).unwrap();
        let a = frame.base_element(&[p("(1,2)", 3), Perm::identity(3)]).unwrap();
        let b = frame.base_element(&[Perm::identity(3), p("(1,2,3)", 3)]).unwrap();
        let group = PermGroup::new(6, vec![a.clone(), b.clone()]).unwrap();
        let pg = ProductGroup::new(frame, group.clone()).unwrap();
        // |N| = 6 with |T| = 2: not a power.
        let n = group.clone();
        let stab = PermGroup::new(6, vec![a]).unwrap();
        assert!(pa_report(&pg, &stab, &stab, &n, None).is_err());
    }
}
