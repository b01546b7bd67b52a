//! Constructors for the concrete groups the graph constructions use:
//! symmetric, alternating, cyclic and dihedral groups, AGL(1,q), PSL(2,q)
//! on the projective line, subfield embeddings and Borel subgroups.

use crate::error::{Error, Result};
use crate::field::FiniteField;
use crate::group::PermGroup;
use crate::perm::Perm;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StandardKind {
    Symmetric,
    Alternating,
    Cyclic,
    Dihedral,
}

/// Symmetric/alternating/cyclic groups on n points; dihedral group of
/// order 2n as polygon symmetries on n vertices (n ≥ 3).
pub fn make_standard(kind: StandardKind, n: usize) -> Result<PermGroup> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    let cycle = |lo: usize, hi: usize| -> Perm {
        // cycle (lo, lo+1, .., hi), 0-based points
        let mut images: Vec<u32> = (0..n as u32).collect();
        for i in lo..hi {
            images[i] = (i + 1) as u32;
        }
        images[hi] = lo as u32;
        Perm::from_images(images).unwrap()
    };
    match kind {
        StandardKind::Symmetric => {
            if n == 1 {
                return Ok(PermGroup::trivial(1));
            }
            let t = Perm::parse_cycles("(1,2)", n)?;
            PermGroup::new(n, vec![t, cycle(0, n - 1)])
        }
        StandardKind::Alternating => {
            if n <= 2 {
                return Ok(PermGroup::trivial(n));
            }
            if n == 3 {
                return PermGroup::new(3, vec![Perm::parse_cycles("(1,2,3)", 3)?]);
            }
            let three = Perm::parse_cycles("(1,2,3)", n)?;
            let c = if n % 2 == 1 {
                cycle(0, n - 1)
            } else {
                cycle(1, n - 1)
            };
            PermGroup::new(n, vec![three, c])
        }
        StandardKind::Cyclic => PermGroup::new(n, vec![cycle(0, n - 1)]),
        StandardKind::Dihedral => {
            if n < 3 {
                return Err(Error::InvalidArgument(
                    "dihedral groups need n >= 3 polygon vertices".into(),
                ));
            }
            let rot = cycle(0, n - 1);
            // Reflection fixing vertex 1: i ↦ n+2-i (1-based).
            let refl = Perm::from_images(
                (0..n as u32).map(|i| if i == 0 { 0 } else { n as u32 - i }).collect(),
            )?;
            PermGroup::new(n, vec![rot, refl])
        }
    }
}

/// AGL(1,q) acting on the q field elements: sharply 2-transitive of order
/// q(q−1).
pub fn make_agl1(q: usize) -> Result<PermGroup> {
    if q > 1 << 16 {
        return Err(Error::InvalidArgument(format!("q = {q} too large")));
    }
    let f = FiniteField::new(q)?;
    let mut gens = Vec::new();
    // Translations by a basis of the additive group.
    for i in 0..f.extension_degree() {
        let b = f.characteristic().pow(i as u32);
        gens.push(Perm::from_images(
            (0..q).map(|x| f.add(x, b) as u32).collect(),
        )?);
    }
    if q > 2 {
        let g = f.multiplicative_generator();
        gens.push(Perm::from_images(
            (0..q).map(|x| f.mul(g, x) as u32).collect(),
        )?);
    }
    PermGroup::new(q, gens)
}

/// The projective line over GF(q): points `0..q` are the field elements,
/// point `q` is ∞.
pub const fn infinity(q: usize) -> usize {
    q
}

/// The permutation of the projective line induced by the Möbius map
/// z ↦ (az+b)/(cz+d), for an invertible matrix over GF(q).
pub fn mobius_perm(f: &FiniteField, a: usize, b: usize, c: usize, d: usize) -> Result<Perm> {
    let q = f.order();
    let det = f.sub(f.mul(a, d), f.mul(b, c));
    if det == 0 {
        return Err(Error::InvalidArgument("singular Möbius matrix".into()));
    }
    let mut images = Vec::with_capacity(q + 1);
    for z in 0..q {
        let num = f.add(f.mul(a, z), b);
        let den = f.add(f.mul(c, z), d);
        images.push(if den == 0 {
            infinity(q) as u32
        } else {
            f.mul(num, f.inv(den)?) as u32
        });
    }
    // Image of ∞ is a/c.
    images.push(if c == 0 {
        infinity(q) as u32
    } else {
        f.mul(a, f.inv(c)?) as u32
    });
    Perm::from_images(images)
}

/// PSL(2,q) on the q+1 projective points, of order q(q²−1)/gcd(2,q−1).
pub fn make_psl2(q: usize) -> Result<PermGroup> {
    if q < 4 {
        return Err(Error::InvalidArgument("make_psl2 requires q >= 4".into()));
    }
    let f = FiniteField::new(q)?;
    psl2_over(&f, &f.subfield_elements(f.extension_degree())?)
}

/// PSL(2) generated by matrices with entries restricted to a given subset
/// of the field (used for the natural group and subfield subgroups alike).
fn psl2_over(f: &FiniteField, entries: &[usize]) -> Result<PermGroup> {
    let q = f.order();
    let mut gens = Vec::new();
    // Unipotents z ↦ z+b for b over an additive basis of the entry set.
    let sub_m = entries.len().checked_ilog(f.characteristic()).unwrap() as usize;
    let sub_field = FiniteField::new(entries.len())?;
    let sub_gen_small = sub_field.multiplicative_generator();
    // Map the abstract subfield into the big field: its generator goes to
    // an element of the same multiplicative order.
    let target_order = entries.len() - 1;
    let big_gen = f.multiplicative_generator();
    let embed_gen = f.pow(big_gen, ((q - 1) / target_order.max(1)) as u64);
    let _ = sub_gen_small;
    // Additive basis of the subfield image: powers of embed_gen's span;
    // for simplicity take all entry elements as translation amounts.
    for i in 0..sub_m {
        let b = if i == 0 { 1 } else { f.pow(embed_gen, i as u64) };
        gens.push(mobius_perm(f, 1, b, 0, 1)?);
    }
    // Torus: z ↦ g²z (squares of the subfield's multiplicative group).
    let g2 = f.mul(embed_gen, embed_gen);
    if g2 != 1 {
        gens.push(mobius_perm(f, g2, 0, 0, 1)?);
    } else if embed_gen != 1 && f.characteristic() == 2 {
        gens.push(mobius_perm(f, embed_gen, 0, 0, 1)?);
    }
    // Weyl element: z ↦ −1/z.
    let minus_one = f.neg(1);
    gens.push(mobius_perm(f, 0, minus_one, 1, 0)?);
    PermGroup::new(q + 1, gens)
}

/// The subgroup of `make_psl2(q)` with matrix entries in GF(p^d), acting
/// on the big projective line.
pub fn subfield_psl2(q: usize, d: usize) -> Result<PermGroup> {
    let f = FiniteField::new(q)?;
    if d == 0 || f.extension_degree() % d != 0 {
        return Err(Error::InvalidArgument(format!(
            "extension degree {d} does not divide {}",
            f.extension_degree()
        )));
    }
    let entries = f.subfield_elements(d)?;
    psl2_over(&f, &entries)
}

/// The stabilizer of ∞ in PSL(2,q) for q = 2^(2n), exposed with its
/// unipotent part and a torus generator.
pub struct BorelSubgroup {
    pub group: PermGroup,
    /// Generators of the elementary-abelian unipotent part (z ↦ z+b).
    pub unipotent_gens: Vec<Perm>,
    /// Torus generator y₁ : z ↦ gz of order q−1.
    pub torus_gen: Perm,
}

pub fn borel_subgroup(q: usize) -> Result<BorelSubgroup> {
    let f = FiniteField::new(q)?;
    if f.characteristic() != 2 || f.extension_degree() % 2 != 0 {
        return Err(Error::InvalidArgument(
            "borel_subgroup expects q = 2^(2n)".into(),
        ));
    }
    let mut unipotent_gens = Vec::new();
    for i in 0..f.extension_degree() {
        let b = 1 << i;
        unipotent_gens.push(mobius_perm(&f, 1, b, 0, 1)?);
    }
    let g = f.multiplicative_generator();
    let torus_gen = mobius_perm(&f, g, 0, 0, 1)?;
    let mut gens = unipotent_gens.clone();
    gens.push(torus_gen.clone());
    Ok(BorelSubgroup {
        group: PermGroup::new(q + 1, gens)?,
        unipotent_gens,
        torus_gen,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn standard_orders() {
        assert_eq!(
            make_standard(StandardKind::Symmetric, 7).unwrap().order(),
            big(5040)
        );
        assert_eq!(
            make_standard(StandardKind::Alternating, 6).unwrap().order(),
            big(360)
        );
        assert_eq!(
            make_standard(StandardKind::Cyclic, 12).unwrap().order(),
            big(12)
        );
        assert_eq!(
            make_standard(StandardKind::Dihedral, 30).unwrap().order(),
            big(60)
        );
        assert!(make_standard(StandardKind::Dihedral, 2).is_err());
    }

    #[test]
    fn alternating_89_order_is_factorial_over_two() {
        let a89 = make_standard(StandardKind::Alternating, 89).unwrap();
        let mut expected = BigUint::from(1u32);
        for i in 2..=89u32 {
            expected *= BigUint::from(i);
        }
        expected /= BigUint::from(2u32);
        assert_eq!(a89.order(), expected);
    }

    #[test]
    fn agl1_orders_and_transitivity() {
        let g5 = make_agl1(5).unwrap();
        assert_eq!(g5.order(), big(20));
        assert!(g5.is_sharply_k_transitive(2).unwrap());
        let g9 = make_agl1(9).unwrap();
        assert_eq!(g9.order(), big(72));
        assert!(g9.is_sharply_k_transitive(2).unwrap());
        assert_eq!(make_agl1(2).unwrap().order(), big(2));
    }

    #[test]
    fn psl2_orders() {
        assert_eq!(make_psl2(4).unwrap().order(), big(60));
        assert_eq!(make_psl2(5).unwrap().order(), big(60));
        assert_eq!(make_psl2(9).unwrap().order(), big(360));
        assert_eq!(make_psl2(16).unwrap().order(), big(4080));
        assert_eq!(make_psl2(61).unwrap().order(), big(113460));
    }

    #[test]
    fn psl2_is_2_transitive() {
        for q in [4, 9, 16] {
            assert!(make_psl2(q).unwrap().is_k_transitive(2).unwrap());
        }
    }

    #[test]
    fn subfield_embeddings_in_psl2_16() {
        let t = make_psl2(16).unwrap();
        let r1 = subfield_psl2(16, 2).unwrap();
        assert_eq!(r1.order(), big(60));
        assert!(r1.is_subgroup_of(&t).unwrap());
        let tiny = subfield_psl2(16, 1).unwrap();
        assert_eq!(tiny.order(), big(6));
        assert!(tiny.is_subgroup_of(&t).unwrap());
        let whole = subfield_psl2(16, 4).unwrap();
        assert_eq!(whole.order(), t.order());
        assert!(subfield_psl2(16, 3).is_err());
    }

    #[test]
    fn borel_structure_for_q16() {
        let b = borel_subgroup(16).unwrap();
        assert_eq!(b.group.order(), big(240));
        assert_eq!(b.torus_gen.order(), 15);
        let unip = PermGroup::new(17, b.unipotent_gens.clone()).unwrap();
        assert_eq!(unip.order(), big(16));
        // Elementary abelian: every non-identity element has order 2.
        for e in unip.elements(100).unwrap() {
            assert!(e.order() <= 2);
        }
        // Y₃ = ⟨y₁⁵⟩ has order 3.
        let y3 = {
            let mut y = b.torus_gen.clone();
            for _ in 0..4 {
                y = y.compose(&b.torus_gen).unwrap();
            }
            y
        };
        assert_eq!(y3.order(), 3);
        // The Borel subgroup stabilizes ∞.
        for g in b.group.generators() {
            assert_eq!(g.apply(infinity(16)), infinity(16));
        }
    }
}
