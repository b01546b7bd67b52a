//! Amalgam builders inside wreath products.
//!
//! Two generic builders produce (G, G_alpha, G_beta) inside H Wr K on
//! Δ × K from a base group H with subgroups L1, R1 and a small acting
//! group K.  Writing F = {f : K → H}, the stabilizer seeds are
//! f_l(κ) = l^κ (a twisted tuple) and, when one side is untwisted,
//! f_r(κ) = r (a constant tuple); K acts on F by f^σ(κ) = f(σκ), which
//! on coordinates is a left translation.  A third builder produces the
//! straight-nondiagonal family over S_{n+2} from the ternary code map.
//!
//! Coordinates are indexed by a fixed enumeration of K: identity first,
//! then breadth-first generator words in length-lexicographic order.
//! Every assembled output re-derives its structural identities (orders,
//! intersections, normalization, the conjugation law for the top copy of
//! K) by explicit computation.

use crate::arcs::is_locally_2at_amalgam;
use crate::error::{Error, Result};
use crate::group::{PermGroup, ENUM_THRESHOLD};
use crate::pa::ProductGroup;
use crate::perm::Perm;
use crate::wreath::WreathFrame;
use num_bigint::BigUint;
use std::collections::HashMap;

/// A group's elements in deterministic breadth-first word order, with an
/// index for constant-time lookup.
pub(crate) struct Enumerated {
    pub elements: Vec<Perm>,
    pub index: HashMap<Perm, usize>,
}

/// Enumerate `src` while extending the map generators → `images` along
/// every product; fails if the map is not a homomorphism.
pub(crate) fn enumerate_with_images(
    src: &PermGroup,
    images: &[Perm],
    threshold: usize,
) -> Result<(Enumerated, Vec<Perm>)> {
    if images.len() != src.generators().len() {
        return Err(Error::InvalidArgument(
            "one image per generator is required".into(),
        ));
    }
    let img_degree = images.first().map_or(1, Perm::degree);
    let mut elements = vec![Perm::identity(src.degree())];
    let mut mapped = vec![Perm::identity(img_degree)];
    let mut index = HashMap::from([(elements[0].clone(), 0usize)]);
    let mut i = 0;
    while i < elements.len() {
        for (s, ims) in src.generators().iter().zip(images) {
            let f = elements[i].compose(s)?;
            let imf = mapped[i].compose(ims)?;
            match index.get(&f) {
                Some(&j) => {
                    if mapped[j] != imf {
                        return Err(Error::InvalidArgument(
                            "generator images do not extend to a homomorphism".into(),
                        ));
                    }
                }
                None => {
                    if elements.len() >= threshold {
                        return Err(Error::ThresholdExceeded(format!(
                            "group enumeration exceeds {threshold} elements"
                        )));
                    }
                    index.insert(f.clone(), elements.len());
                    elements.push(f);
                    mapped.push(imf);
                }
            }
        }
        i += 1;
    }
    Ok((Enumerated { elements, index }, mapped))
}

pub(crate) fn enumerate(src: &PermGroup, threshold: usize) -> Result<Enumerated> {
    let images: Vec<Perm> = src.generators().to_vec();
    Ok(enumerate_with_images(src, &images, threshold)?.0)
}

/// The automorphism of an enumerated group determined by generator
/// images, as a permutation of element indices.
pub(crate) fn automorphism_index_perm(
    group: &PermGroup,
    en: &Enumerated,
    gen_images: &[Perm],
) -> Result<Perm> {
    let (_, mapped) = enumerate_with_images(group, gen_images, en.elements.len() + 1)?;
    let images = mapped
        .iter()
        .map(|img| {
            en.index
                .get(img)
                .map(|&j| j as u32)
                .ok_or_else(|| Error::InvalidArgument("image lies outside the group".into()))
        })
        .collect::<Result<Vec<u32>>>()?;
    // from_images rejects non-bijections, so this also certifies that
    // the endomorphism is an automorphism.
    Perm::from_images(images).map_err(|_| {
        Error::InvalidArgument("generator images do not define an automorphism".into())
    })
}

/// The output of an amalgam builder: everything lives in the wreath
/// realization carried by `product`.
pub struct ConstructionOutput {
    pub product: ProductGroup,
    pub g_alpha: PermGroup,
    pub g_beta: PermGroup,
    pub g_alpha_beta: PermGroup,
    pub n_alpha: PermGroup,
    pub n_beta: PermGroup,
    pub n: PermGroup,
    /// The top copy of K (trivial for the code-based builder, where the
    /// top part is generated by an order-8 element instead).
    pub top_gens: Vec<Perm>,
}

impl ConstructionOutput {
    /// The amalgam-level local 2-arc-transitivity verdict.
    pub fn local_2at(&self) -> Result<bool> {
        is_locally_2at_amalgam(&self.g_alpha, &self.g_beta, &self.g_alpha_beta)
    }
}

struct SideData<'a> {
    subgroup: &'a PermGroup,
    en: Enumerated,
    /// Automorphism (as an element-index permutation) for each K element.
    action: Vec<Perm>,
}

/// Common assembly once the per-element automorphism actions of K on both
/// sides are known.
fn assemble(
    h: &PermGroup,
    left: SideData,
    right: SideData,
    k: &PermGroup,
    k_en: Enumerated,
) -> Result<ConstructionOutput> {
    let kk = k_en.elements.len();
    if kk < 2 {
        return Err(Error::InvalidArgument(
            "the acting group K must be nontrivial".into(),
        ));
    }
    for side in [&left, &right] {
        if !side.subgroup.is_subgroup_of(h)? {
            return Err(Error::NotASubgroup(
                "L1 and R1 must be subgroups of the base group".into(),
            ));
        }
    }
    // The action must fix L1 ∩ R1 elementwise, or the intersection of
    // the twisted stabilizers would shrink.
    let meet = left.subgroup.intersect_small(right.subgroup, ENUM_THRESHOLD)?;
    for m in enumerate(&meet, ENUM_THRESHOLD)?.elements {
        for (side, name) in [(&left, "L1"), (&right, "R1")] {
            if let Some(&i) = side.en.index.get(&m) {
                for a in &side.action {
                    if a.apply(i) != i {
                        return Err(Error::InvalidArgument(format!(
                            "the K-action moves an element of {name} ∩ the other side"
                        )));
                    }
                }
            }
        }
    }

    let frame = WreathFrame::new(h.degree(), kk)?;
    let tuple = |side: &SideData, g: &Perm| -> Result<Perm> {
        let gi = *side
            .en
            .index
            .get(g)
            .ok_or_else(|| Error::InvalidArgument("element outside its subgroup".into()))?;
        let entries: Vec<Perm> = (0..kk)
            .map(|j| side.en.elements[side.action[j].apply(gi)].clone())
            .collect();
        frame.base_element(&entries)
    };
    let n_alpha_gens = left
        .subgroup
        .generators()
        .iter()
        .map(|g| tuple(&left, g))
        .collect::<Result<Vec<_>>>()?;
    let n_beta_gens = right
        .subgroup
        .generators()
        .iter()
        .map(|g| tuple(&right, g))
        .collect::<Result<Vec<_>>>()?;

    // Top copy of K: f^σ(κ) = f(σκ) moves coordinate index(σκ_i) to i,
    // so σ's coordinate permutation sends i to index(σ⁻¹κ_i).
    let mut top_gens = Vec::new();
    for s in k.generators() {
        let s_inv_images = (0..kk)
            .map(|i| {
                let prod = s.inverse().compose(&k_en.elements[i])?;
                Ok(k_en.index[&prod] as u32)
            })
            .collect::<Result<Vec<u32>>>()?;
        top_gens.push(frame.top_element(&Perm::from_images(s_inv_images)?)?);
    }

    // Conjugation law self-check: conjugating f_g by the top element of
    // σ must give f_{g^σ}, on every generator pair.
    for (si, s) in k.generators().iter().enumerate() {
        let t = &top_gens[si];
        let s_idx = k_en.index[s];
        for (side, gens) in [(&left, &n_alpha_gens), (&right, &n_beta_gens)] {
            for (g, fg) in side.subgroup.generators().iter().zip(gens) {
                let gi = side.en.index[g];
                let twisted = side.en.elements[side.action[s_idx].apply(gi)].clone();
                if fg.conjugate(t) != tuple(side, &twisted)? {
                    return Err(Error::InvalidArgument(
                        "coordinate action self-check failed".into(),
                    ));
                }
            }
        }
    }

    let degree = frame.degree();
    let n_alpha = PermGroup::new(degree, n_alpha_gens.clone())?;
    let n_beta = PermGroup::new(degree, n_beta_gens.clone())?;
    let n = PermGroup::new(degree, [n_alpha_gens.clone(), n_beta_gens.clone()].concat())?;
    let g_alpha = PermGroup::new(degree, [n_alpha_gens, top_gens.clone()].concat())?;
    let g_beta = PermGroup::new(degree, [n_beta_gens, top_gens.clone()].concat())?;
    let g = g_alpha.join(&g_beta)?;

    // Structural identities of the construction.
    let kb = BigUint::from(kk);
    if g_alpha.order() != left.subgroup.order() * &kb
        || g_beta.order() != right.subgroup.order() * &kb
    {
        return Err(Error::InvalidArgument(
            "stabilizer orders do not match |L1|·|K| and |R1|·|K|".into(),
        ));
    }
    if n_alpha.intersect_small(&n_beta, ENUM_THRESHOLD)?.order() != meet.order() {
        return Err(Error::InvalidArgument(
            "N_alpha ∩ N_beta does not realize L1 ∩ R1".into(),
        ));
    }
    let g_alpha_beta = g_alpha.intersect_small(&g_beta, ENUM_THRESHOLD)?;
    if g_alpha_beta.order() != meet.order() * &kb {
        return Err(Error::InvalidArgument(
            "G_alpha ∩ G_beta does not have order |L1∩R1|·|K|".into(),
        ));
    }
    // K normalizes both stabilizer seeds.
    for t in &top_gens {
        for ng in n_alpha.generators() {
            if !n_alpha.contains(&ng.conjugate(t))? {
                return Err(Error::InvalidArgument("K does not normalize N_alpha".into()));
            }
        }
        for ng in n_beta.generators() {
            if !n_beta.contains(&ng.conjugate(t))? {
                return Err(Error::InvalidArgument("K does not normalize N_beta".into()));
            }
        }
    }

    Ok(ConstructionOutput {
        product: ProductGroup::new(frame, g)?,
        g_alpha,
        g_beta,
        g_alpha_beta,
        n_alpha,
        n_beta,
        n,
        top_gens,
    })
}

fn side_with_action<'a>(
    subgroup: &'a PermGroup,
    k: &PermGroup,
    k_en: &Enumerated,
    action_gen_images: Option<&[Vec<Perm>]>,
) -> Result<SideData<'a>> {
    let en = enumerate(subgroup, ENUM_THRESHOLD)?;
    let auto_gens: Vec<Perm> = match action_gen_images {
        Some(images) => {
            if images.len() != k.generators().len() {
                return Err(Error::InvalidArgument(
                    "one automorphism per K generator is required".into(),
                ));
            }
            images
                .iter()
                .map(|imgs| automorphism_index_perm(subgroup, &en, imgs))
                .collect::<Result<_>>()?
        }
        None => vec![Perm::identity(en.elements.len()); k.generators().len()],
    };
    let (_, action) = enumerate_with_images(k, &auto_gens, k_en.elements.len() + 1)?;
    Ok(SideData {
        subgroup,
        en,
        action,
    })
}

/// Builder with a twisted left side and a constant right side: K acts on
/// L1 through the given automorphism images and trivially on R1.
pub fn construct_3_1(
    h: &PermGroup,
    l1: &PermGroup,
    r1: &PermGroup,
    k: &PermGroup,
    k_action_on_l1: &[Vec<Perm>],
) -> Result<ConstructionOutput> {
    let k_en = enumerate(k, 10_000)?;
    let left = side_with_action(l1, k, &k_en, Some(k_action_on_l1))?;
    let right = side_with_action(r1, k, &k_en, None)?;
    assemble(h, left, right, k, k_en)
}

/// Builder with both sides twisted: K = K_L × K_R, where K_L acts on L1
/// and trivially on R1, and K_R acts on R1 and trivially on L1.
pub fn construct_3_2(
    h: &PermGroup,
    l1: &PermGroup,
    r1: &PermGroup,
    k_l: &PermGroup,
    k_l_action_on_l1: &[Vec<Perm>],
    k_r: &PermGroup,
    k_r_action_on_r1: &[Vec<Perm>],
) -> Result<ConstructionOutput> {
    // K as the direct product on the disjoint union of the two domains.
    let dl = k_l.degree();
    let dr = k_r.degree();
    let mut k_gens = Vec::new();
    for g in k_l.generators() {
        let mut images: Vec<u32> = (0..dl).map(|x| g.apply(x) as u32).collect();
        images.extend((dl..dl + dr).map(|x| x as u32));
        k_gens.push(Perm::from_images(images)?);
    }
    for g in k_r.generators() {
        let mut images: Vec<u32> = (0..dl).map(|x| x as u32).collect();
        images.extend((0..dr).map(|x| (dl + g.apply(x)) as u32));
        k_gens.push(Perm::from_images(images)?);
    }
    let k = PermGroup::new(dl + dr, k_gens)?;
    let k_en = enumerate(&k, 10_000)?;

    let identity_l1: Vec<Perm> = l1.generators().to_vec();
    let identity_r1: Vec<Perm> = r1.generators().to_vec();
    let mut l1_images: Vec<Vec<Perm>> = k_l_action_on_l1.to_vec();
    l1_images.extend(vec![identity_l1; k_r.generators().len()]);
    let mut r1_images: Vec<Vec<Perm>> = vec![identity_r1; k_l.generators().len()];
    r1_images.extend(k_r_action_on_r1.to_vec());

    let left = side_with_action(l1, &k, &k_en, Some(&l1_images))?;
    let right = side_with_action(r1, &k, &k_en, Some(&r1_images))?;
    assemble(h, left, right, &k, k_en)
}

fn factorial(n: usize) -> BigUint {
    (1..=n).map(BigUint::from).product::<BigUint>().max(BigUint::from(1u32))
}

/// The straight-nondiagonal family over S_{n+2}: the straight diagonal
/// of the {1,2}-set stabilizer against the code-patterned subgroup built
/// from Sym{1,2,3}, glued by the order-8 monomial-style element
/// tau = ((1,2), 1, (1,2), (1,2)) followed by the coordinate 4-cycle.
pub fn construct_straight_nondiagonal(n: usize) -> Result<ConstructionOutput> {
    if n < 3 {
        return Err(Error::InvalidArgument(
            "the family needs n >= 3".into(),
        ));
    }
    let deg = n + 2;
    let pc = |s: &str| Perm::parse_cycles(s, deg);
    let sigma = pc("(1,2)")?;
    let h3 = pc("(1,2,3)")?;
    // L = Sym{1,2} × Sym{3..n+2},  R = Sym{1,2,3} × Sym{4..n+2}.
    let tail = |from: usize| -> Result<Vec<Perm>> {
        let points: Vec<usize> = (from..=deg).collect();
        let mut gens = vec![Perm::parse_cycles(
            &format!("({},{})", points[0], points[1]),
            deg,
        )?];
        if points.len() > 2 {
            let cycle = points
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join(",");
            gens.push(Perm::parse_cycles(&format!("({cycle})"), deg)?);
        }
        Ok(gens)
    };
    let mut l_gens = vec![sigma.clone()];
    l_gens.extend(tail(3)?);
    let l = PermGroup::new(deg, l_gens)?;
    let r2_gens = tail(4)?;

    let frame = WreathFrame::new(deg, 4)?;
    let id = Perm::identity(deg);
    let mut n_alpha_gens = Vec::new();
    for g in l.generators() {
        n_alpha_gens.push(frame.diagonal(g)?);
    }
    let mut n_beta_gens = vec![
        frame.base_element(&[h3.clone(), h3.clone(), h3.clone(), id.clone()])?,
        frame.base_element(&[h3.clone(), h3.inverse(), id.clone(), h3.clone()])?,
        frame.diagonal(&sigma)?,
    ];
    for g in &r2_gens {
        n_beta_gens.push(frame.diagonal(g)?);
    }
    let tau = frame.element(
        &[sigma.clone(), id.clone(), sigma.clone(), sigma.clone()],
        &Perm::parse_cycles("(1,2,3,4)", 4)?,
    )?;
    if tau.order() != 8 {
        return Err(Error::InvalidArgument("tau must have order 8".into()));
    }

    let wdeg = frame.degree();
    let n_alpha = PermGroup::new(wdeg, n_alpha_gens.clone())?;
    let n_beta = PermGroup::new(wdeg, n_beta_gens.clone())?;
    let n_grp = PermGroup::new(wdeg, [n_alpha_gens.clone(), n_beta_gens.clone()].concat())?;
    // tau centralizes N_alpha and normalizes N_beta.
    for g in n_alpha.generators() {
        if g.conjugate(&tau) != *g {
            return Err(Error::InvalidArgument("tau must centralize N_alpha".into()));
        }
    }
    for g in n_beta.generators() {
        if !n_beta.contains(&g.conjugate(&tau))? {
            return Err(Error::InvalidArgument("tau must normalize N_beta".into()));
        }
    }
    let g_alpha = PermGroup::new(wdeg, [n_alpha_gens, vec![tau.clone()]].concat())?;
    let g_beta = PermGroup::new(wdeg, [n_beta_gens, vec![tau.clone()]].concat())?;
    let g = g_alpha.join(&g_beta)?;
    let g_alpha_beta = g_alpha.intersect_small(&g_beta, ENUM_THRESHOLD)?;

    // Expected orders: 8·n!, 72·(n−1)!, 8·(n−1)!.
    let eight = BigUint::from(8u32);
    if g_alpha.order() != &eight * factorial(n)
        || g_beta.order() != BigUint::from(72u32) * factorial(n - 1)
        || g_alpha_beta.order() != &eight * factorial(n - 1)
    {
        return Err(Error::InvalidArgument(
            "amalgam orders do not match 8·n!, 72·(n−1)!, 8·(n−1)!".into(),
        ));
    }
    // |N| is divisible by |A_{n+2}|⁴.
    let a4 = (factorial(deg) / BigUint::from(2u32)).pow(4);
    if &n_grp.order() % &a4 != BigUint::ZERO {
        return Err(Error::InvalidArgument(
            "N does not contain the fourth power of the alternating group".into(),
        ));
    }

    Ok(ConstructionOutput {
        product: ProductGroup::new(frame, g)?,
        g_alpha,
        g_beta,
        g_alpha_beta,
        n_alpha,
        n_beta,
        n: n_grp,
        top_gens: vec![tau],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{make_standard, StandardKind};
    use crate::pa::{classify_diagonal, DiagonalVerdict};

    fn grp(gens: &[&str], n: usize) -> PermGroup {
        let gens = gens
            .iter()
            .map(|s| Perm::parse_cycles(s, n).unwrap())
            .collect();
        PermGroup::new(n, gens).unwrap()
    }

    #[test]
    fn enumeration_is_length_lexicographic() {
        let c4 = grp(&["(1,2,3,4)"], 4);
        let en = enumerate(&c4, 100).unwrap();
        assert!(en.elements[0].is_identity());
        assert_eq!(en.elements.len(), 4);
        assert_eq!(en.elements[1], Perm::parse_cycles("(1,2,3,4)", 4).unwrap());
    }

    #[test]
    fn non_homomorphism_rejected() {
        let c4 = grp(&["(1,2,3,4)"], 4);
        // An order-4 generator cannot map to an order-3 element.
        let bad = vec![Perm::parse_cycles("(1,2,3)", 4).unwrap()];
        assert!(enumerate_with_images(&c4, &bad, 100).is_err());
    }

    #[test]
    fn automorphism_extension_and_rejection() {
        let c5 = grp(&["(1,2,3,4,5)"], 5);
        let en = enumerate(&c5, 100).unwrap();
        let square = c5.generators()[0].compose(&c5.generators()[0]).unwrap();
        let auto = automorphism_index_perm(&c5, &en, &[square]).unwrap();
        assert_eq!(auto.order(), 4);
        // Mapping the generator to the identity is an endomorphism but
        // not an automorphism.
        assert!(automorphism_index_perm(&c5, &en, &[Perm::identity(5)]).is_err());
    }

    #[test]
    fn builder_with_twisted_left_side_over_a5() {
        let a5 = make_standard(StandardKind::Alternating, 5).unwrap();
        let l1 = grp(&["(1,2,3,4,5)"], 5);
        let r1 = grp(&["(1,2,3)", "(1,2)(4,5)"], 5);
        let k = grp(&["(1,2,3,4)"], 4);
        // K = C_4 acts on L1 = C_5 by l ↦ l².
        let square = l1.generators()[0].compose(&l1.generators()[0]).unwrap();
        let out = construct_3_1(&a5, &l1, &r1, &k, &[vec![square]]).unwrap();
        assert_eq!(out.g_alpha.order(), 20u32.into());
        assert_eq!(out.g_beta.order(), 24u32.into());
        assert_eq!(out.g_alpha_beta.order(), 4u32.into());
        assert_eq!(out.n_alpha.order(), 5u32.into());
        let c = classify_diagonal(&out.product, &out.n_alpha).unwrap();
        assert_eq!(c.verdict, DiagonalVerdict::Twisted);
        let c = classify_diagonal(&out.product, &out.n_beta).unwrap();
        assert_eq!(c.verdict, DiagonalVerdict::Straight);
    }

    #[test]
    fn trivial_k_rejected() {
        let a5 = make_standard(StandardKind::Alternating, 5).unwrap();
        let l1 = grp(&["(1,2,3,4,5)"], 5);
        let r1 = grp(&["(1,2,3)"], 5);
        let k = PermGroup::trivial(1);
        assert!(construct_3_1(&a5, &l1, &r1, &k, &[vec![l1.generators()[0].clone()]]).is_err());
    }

    #[test]
    fn action_moving_the_intersection_rejected() {
        let s5 = make_standard(StandardKind::Symmetric, 5).unwrap();
        let l1 = grp(&["(1,2,3,4)"], 5);
        let r1 = grp(&["(1,3)(2,4)", "(1,2)(3,4)"], 5);
        let k = grp(&["(1,2)"], 2);
        // Inverting C_4 moves its square's... the square is fixed by
        // inversion, so use an action moving the shared involution via a
        // non-normalizing image instead: send the generator to a
        // different order-4 element whose square differs.
        let other = grp(&["(1,2,4,3)"], 5).generators()[0].clone();
        let r = construct_3_1(&s5, &l1, &r1, &k, &[vec![other]]);
        assert!(r.is_err());
    }

    #[test]
    fn builder_with_both_sides_twisted_over_s6() {
        let s6 = make_standard(StandardKind::Symmetric, 6).unwrap();
        let l1 = grp(&["(1,2,3,4,5)"], 6);
        let r1 = grp(&["(1,2)(3,4)", "(5,6)"], 6);
        let kl = grp(&["(1,2)"], 2);
        let kr = grp(&["(1,2)"], 2);
        let invert = l1.generators()[0].inverse();
        // K_R swaps the two commuting involutions' product structure by
        // exchanging the generators' images.
        let r1_swap = vec![
            r1.generators()[0]
                .compose(&r1.generators()[1])
                .unwrap(),
            r1.generators()[1].clone(),
        ];
        let out = construct_3_2(&s6, &l1, &r1, &kl, &[vec![invert]], &kr, &[r1_swap]).unwrap();
        assert_eq!(out.g_alpha.order(), 20u32.into());
        assert_eq!(out.g_beta.order(), 16u32.into());
        assert_eq!(out.product.k(), 4);
        // Both twisted sides have differing coordinate entries.
        let ca = classify_diagonal(&out.product, &out.n_alpha).unwrap();
        assert_eq!(ca.verdict, DiagonalVerdict::Twisted);
    }

    #[test]
    fn straight_nondiagonal_family_n3() {
        let out = construct_straight_nondiagonal(3).unwrap();
        assert_eq!(out.g_alpha.order(), 48u32.into());
        assert_eq!(out.g_beta.order(), 144u32.into());
        assert_eq!(out.g_alpha_beta.order(), 16u32.into());
        let ca = classify_diagonal(&out.product, &out.n_alpha).unwrap();
        assert_eq!(ca.verdict, DiagonalVerdict::Straight);
        let cb = classify_diagonal(&out.product, &out.n_beta).unwrap();
        assert_eq!(cb.verdict, DiagonalVerdict::Nondiagonal);
        assert!(out.local_2at().unwrap());
    }

    #[test]
    fn straight_nondiagonal_rejects_small_n() {
        assert!(construct_straight_nondiagonal(2).is_err());
    }
}
