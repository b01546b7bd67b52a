//! Permutation groups backed by deterministic Schreier–Sims stabilizer
//! chains: membership, order, stabilizers, transitivity degrees, block
//! systems, small-group intersections, centralizer orders, normal closures.

use crate::error::{Error, Result};
use crate::perm::Perm;
use num_bigint::BigUint;
use num_traits::One;
use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::OnceLock;

/// Default element-enumeration threshold for intersections and classes.
pub const ENUM_THRESHOLD: usize = 1_000_000;

/// One level of a stabilizer chain: a base point and the fundamental orbit
/// with its transversal.  The generating set of a level is shared across
/// the chain, see [`StabilizerChain::level_generators`].
#[derive(Clone, Debug)]
pub struct ChainLevel {
    pub base_point: usize,
    /// Orbit of `base_point` in discovery order.
    pub orbit: Vec<usize>,
    /// `transversal[p]` carries `base_point` to `p`.
    transversal: Vec<Option<Perm>>,
    /// Inverses of the transversal entries, filled on the same schedule.
    inv_transversal: Vec<Option<Perm>>,
    /// `done[gi]` = number of orbit points whose Schreier generator with
    /// the level's `gi`-th generator has been verified.
    done: Vec<usize>,
}

impl ChainLevel {
    fn new(base_point: usize, degree: usize) -> Self {
        let mut transversal = vec![None; degree];
        let mut inv_transversal = vec![None; degree];
        transversal[base_point] = Some(Perm::identity(degree));
        inv_transversal[base_point] = Some(Perm::identity(degree));
        ChainLevel {
            base_point,
            orbit: vec![base_point],
            transversal,
            inv_transversal,
            done: Vec::new(),
        }
    }

    pub fn rep(&self, point: usize) -> Option<&Perm> {
        self.transversal[point].as_ref()
    }

    pub fn inv_rep(&self, point: usize) -> Option<&Perm> {
        self.inv_transversal[point].as_ref()
    }

    /// Extend the fundamental orbit under a generating set.  Existing
    /// transversal entries are never overwritten, so representatives are
    /// stable as the set grows.
    fn extend_orbit(&mut self, gens: &[&Perm]) {
        let mut queue: VecDeque<usize> = self.orbit.iter().copied().collect();
        while let Some(p) = queue.pop_front() {
            let rep_p = self.transversal[p].clone().expect("orbit point has rep");
            for s in gens {
                let q = s.apply(p);
                if self.transversal[q].is_none() {
                    let rep_q = rep_p.compose_unchecked(s);
                    self.inv_transversal[q] = Some(rep_q.inverse());
                    self.transversal[q] = Some(rep_q);
                    self.orbit.push(q);
                    queue.push_back(q);
                }
            }
        }
    }
}

/// Base points plus strong generators; answers membership and order exactly.
#[derive(Clone, Debug)]
pub struct StabilizerChain {
    pub degree: usize,
    pub levels: Vec<ChainLevel>,
    /// Strong generators, each tagged with its insertion level `j` (it fixes
    /// the first `j` base points).
    strong_gens: Vec<(usize, Perm)>,
}

impl StabilizerChain {
    /// Deterministic Schreier–Sims.  Base points are the smallest moved
    /// points, taken in increasing order; `forced_base` points, when given,
    /// are installed first (used for pointwise stabilizers and transitivity
    /// tests).
    pub fn build(degree: usize, generators: &[Perm], forced_base: &[usize]) -> Self {
        let mut chain = StabilizerChain {
            degree,
            levels: forced_base
                .iter()
                .map(|&b| ChainLevel::new(b, degree))
                .collect(),
            strong_gens: Vec::new(),
        };
        for g in generators {
            if !g.is_identity() {
                chain.insert_gen(g.clone());
            }
        }
        if !chain.strong_gens.is_empty() {
            chain.verify_from(chain.levels.len() - 1);
        }
        chain
    }

    /// Strong generators of the stabilizer of the first `level` base points.
    pub fn level_generators(&self, level: usize) -> Vec<&Perm> {
        self.strong_gens
            .iter()
            .filter(|(j, _)| *j >= level)
            .map(|(_, g)| g)
            .collect()
    }

    /// Insert a generator at the deepest level whose base prefix it fixes,
    /// creating a new level when it fixes the whole base.  Returns the
    /// insertion level.
    fn insert_gen(&mut self, g: Perm) -> usize {
        let mut j = 0;
        while j < self.levels.len() && g.apply(self.levels[j].base_point) == self.levels[j].base_point
        {
            j += 1;
        }
        if j == self.levels.len() {
            let b = g
                .smallest_moved_point()
                .expect("non-identity generator moves a point");
            self.levels.push(ChainLevel::new(b, self.degree));
        }
        self.strong_gens.push((j, g));
        j
    }

    /// Bottom-up Schreier verification starting at `start` and working back
    /// to the top.  On a sift failure the residue is installed and
    /// verification restarts at its level.  Per-level cursors ensure each
    /// (orbit point, generator) pair is sifted once over the whole run.
    fn verify_from(&mut self, start: usize) {
        let mut i = start as isize;
        while i >= 0 {
            let level = i as usize;
            let gens: Vec<Perm> = self
                .level_generators(level)
                .into_iter()
                .cloned()
                .collect();
            {
                let refs: Vec<&Perm> = gens.iter().collect();
                self.levels[level].extend_orbit(&refs);
            }
            self.levels[level].done.resize(gens.len(), 0);
            let mut failed_at: Option<usize> = None;
            'scan: for (gi, s) in gens.iter().enumerate() {
                while self.levels[level].done[gi] < self.levels[level].orbit.len() {
                    let k = self.levels[level].done[gi];
                    // The pair is considered handled either way: on failure
                    // the residue is installed, after which it sifts.
                    self.levels[level].done[gi] += 1;
                    let p = self.levels[level].orbit[k];
                    let q = s.apply(p);
                    let u = self.levels[level].rep(p).unwrap();
                    let uq_inv = self.levels[level].inv_rep(q).unwrap();
                    let schreier = u.compose_unchecked(s).compose_unchecked(uq_inv);
                    if schreier.is_identity() {
                        continue;
                    }
                    let (residue, _) = self.strip(level + 1, schreier);
                    if !residue.is_identity() {
                        failed_at = Some(self.insert_gen(residue));
                        break 'scan;
                    }
                }
            }
            match failed_at {
                // Resume at the insertion level; levels between it and the
                // current one gained a generator and get fresh pairs.
                Some(at) => i = at as isize,
                None => i -= 1,
            }
        }
    }

    /// Sift `g` through levels `from..`; returns the residue and the level
    /// at which sifting stopped.
    pub fn strip(&self, from: usize, mut g: Perm) -> (Perm, usize) {
        for (i, level) in self.levels.iter().enumerate().skip(from) {
            let p = g.apply(level.base_point);
            match level.rep(p) {
                Some(rep) => g = g.compose_unchecked(&rep.inverse()),
                None => return (g, i),
            }
        }
        (g, self.levels.len())
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base_point).collect()
    }

    pub fn order(&self) -> BigUint {
        let mut order = BigUint::one();
        for level in &self.levels {
            order *= BigUint::from(level.orbit.len());
        }
        order
    }

    pub fn contains(&self, g: &Perm) -> bool {
        let (residue, _) = self.strip(0, g.clone());
        residue.is_identity()
    }

    /// The canonical representative of the right coset U·g, where U is the
    /// group of this chain: the unique coset element whose base-image
    /// sequence is lexicographically least.  Greedy level by level; the
    /// level-l transversal elements fix the earlier base points, so later
    /// choices never disturb earlier minima.
    pub fn minimal_coset_rep(&self, g: &Perm) -> Perm {
        let mut r = g.clone();
        for level in &self.levels {
            let best = level
                .orbit
                .iter()
                .copied()
                .min_by_key(|&o| r.apply(o))
                .expect("orbit contains the base point");
            if best != level.base_point {
                let t = level.rep(best).expect("orbit point has a representative");
                r = t.compose_unchecked(&r);
            }
        }
        r
    }
}

/// A permutation group given by generators, with a lazily built chain.
#[derive(Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Perm>,
    chain: OnceLock<StabilizerChain>,
}

impl Clone for PermGroup {
    fn clone(&self) -> Self {
        let chain = OnceLock::new();
        if let Some(c) = self.chain.get() {
            let _ = chain.set(c.clone());
        }
        PermGroup {
            degree: self.degree,
            generators: self.generators.clone(),
            chain,
        }
    }
}

impl PermGroup {
    /// A group from generators.  The generator list may not be empty; an
    /// all-identity list yields the trivial group.
    pub fn new(degree: usize, generators: Vec<Perm>) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::InvalidArgument(
                "a group needs at least one generator (use the identity for the trivial group)"
                    .into(),
            ));
        }
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch(degree, g.degree()));
            }
        }
        Ok(PermGroup {
            degree,
            generators,
            chain: OnceLock::new(),
        })
    }

    pub fn trivial(degree: usize) -> Self {
        PermGroup::new(degree, vec![Perm::identity(degree)]).unwrap()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    /// Non-identity generators.
    pub fn proper_generators(&self) -> Vec<&Perm> {
        self.generators.iter().filter(|g| !g.is_identity()).collect()
    }

    pub fn chain(&self) -> &StabilizerChain {
        self.chain
            .get_or_init(|| StabilizerChain::build(self.degree, &self.generators, &[]))
    }

    pub fn order(&self) -> BigUint {
        self.chain().order()
    }

    pub fn is_trivial(&self) -> bool {
        self.generators.iter().all(|g| g.is_identity())
    }

    pub fn contains(&self, g: &Perm) -> Result<bool> {
        if g.degree() != self.degree {
            return Err(Error::DegreeMismatch(self.degree, g.degree()));
        }
        Ok(self.chain().contains(g))
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> Result<bool> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch(self.degree, other.degree));
        }
        for g in &self.generators {
            if !other.chain().contains(g) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Orbit of a 0-based point, with a transversal mapping each orbit
    /// element to a group element carrying `point` to it.
    pub fn orbit(&self, point: usize) -> Result<(Vec<usize>, HashMap<usize, Perm>)> {
        if point >= self.degree {
            return Err(Error::PointOutOfRange(point + 1, self.degree));
        }
        let mut orbit = vec![point];
        let mut transversal = HashMap::new();
        transversal.insert(point, Perm::identity(self.degree));
        let mut queue = VecDeque::from([point]);
        while let Some(p) = queue.pop_front() {
            let rep_p = transversal[&p].clone();
            for s in &self.generators {
                let q = s.apply(p);
                if !transversal.contains_key(&q) {
                    transversal.insert(q, rep_p.compose_unchecked(s));
                    orbit.push(q);
                    queue.push_back(q);
                }
            }
        }
        Ok((orbit, transversal))
    }

    /// All orbits, each in discovery order, sorted by smallest element.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree];
        let mut out = Vec::new();
        for p in 0..self.degree {
            if !seen[p] {
                let (orbit, _) = self.orbit(p).unwrap();
                for &q in &orbit {
                    seen[q] = true;
                }
                out.push(orbit);
            }
        }
        out
    }

    pub fn is_transitive(&self) -> bool {
        self.degree == 0 || self.orbit(0).unwrap().0.len() == self.degree
    }

    /// Pointwise stabilizer of the given 0-based points.
    pub fn stabilizer(&self, points: &[usize]) -> Result<PermGroup> {
        for &p in points {
            if p >= self.degree {
                return Err(Error::PointOutOfRange(p + 1, self.degree));
            }
        }
        let chain = StabilizerChain::build(self.degree, &self.generators, points);
        let gens: Vec<Perm> = chain
            .level_generators(points.len())
            .into_iter()
            .cloned()
            .collect();
        if gens.is_empty() {
            Ok(PermGroup::trivial(self.degree))
        } else {
            PermGroup::new(self.degree, gens)
        }
    }

    /// True iff successive point stabilizers act transitively `k` times.
    pub fn is_k_transitive(&self, k: usize) -> Result<bool> {
        if k == 0 || k > self.degree {
            return Err(Error::InvalidArgument(format!(
                "k = {k} out of range for degree {}",
                self.degree
            )));
        }
        if !self.is_transitive() {
            return Err(Error::Intransitive);
        }
        let base: Vec<usize> = (0..k).collect();
        let chain = StabilizerChain::build(self.degree, &self.generators, &base);
        for i in 0..k {
            if chain.levels[i].orbit.len() != self.degree - i {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Sharply k-transitive: k-transitive with order exactly
    /// n(n−1)···(n−k+1).
    pub fn is_sharply_k_transitive(&self, k: usize) -> Result<bool> {
        if !self.is_k_transitive(k)? {
            return Ok(false);
        }
        let mut expected = BigUint::one();
        for i in 0..k {
            expected *= BigUint::from(self.degree - i);
        }
        Ok(self.order() == expected)
    }

    /// Enumerate all elements; errors if the group exceeds `threshold`.
    pub fn elements(&self, threshold: usize) -> Result<Vec<Perm>> {
        let mut seen: HashSet<Perm> = HashSet::new();
        let identity = Perm::identity(self.degree);
        seen.insert(identity.clone());
        let mut order = vec![identity];
        let mut queue = VecDeque::from([0usize]);
        while let Some(idx) = queue.pop_front() {
            let e = order[idx].clone();
            for s in &self.generators {
                let f = e.compose_unchecked(s);
                if !seen.contains(&f) {
                    if order.len() >= threshold {
                        return Err(Error::ThresholdExceeded(format!(
                            "group has more than {threshold} elements"
                        )));
                    }
                    seen.insert(f.clone());
                    order.push(f);
                    queue.push_back(order.len() - 1);
                }
            }
        }
        Ok(order)
    }

    /// Reduce a set of elements known to form a subgroup to a short
    /// generating sequence.
    fn reduce_to_generators(degree: usize, elements: &[Perm]) -> PermGroup {
        let target = BigUint::from(elements.len());
        let mut gens: Vec<Perm> = Vec::new();
        let mut current = PermGroup::trivial(degree);
        for e in elements {
            if e.is_identity() {
                continue;
            }
            if !current.chain().contains(e) {
                gens.push(e.clone());
                current = PermGroup::new(degree, gens.clone()).unwrap();
                if current.order() == target {
                    break;
                }
            }
        }
        if gens.is_empty() {
            PermGroup::trivial(degree)
        } else {
            current
        }
    }

    /// Intersection of two groups, by enumerating the smaller one; at least
    /// one side must be within `threshold`.
    pub fn intersect_small(&self, other: &PermGroup, threshold: usize) -> Result<PermGroup> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch(self.degree, other.degree));
        }
        let (small, large) = if self.order() <= other.order() {
            (self, other)
        } else {
            (other, self)
        };
        let elements = small.elements(threshold).map_err(|_| {
            Error::ThresholdExceeded(format!(
                "both intersection operands exceed {threshold} elements"
            ))
        })?;
        let mut common: Vec<Perm> = elements
            .into_iter()
            .filter(|e| large.chain().contains(e))
            .collect();
        common.sort();
        Ok(Self::reduce_to_generators(self.degree, &common))
    }

    /// `|C_G(x)| = |G| / |x^G|`, with the class computed as the conjugation
    /// orbit of `x` under the generators.
    pub fn centralizer_order(&self, x: &Perm, threshold: usize) -> Result<BigUint> {
        if !self.contains(x)? {
            return Err(Error::InvalidArgument(
                "element is not in the group".into(),
            ));
        }
        let mut class: HashSet<Perm> = HashSet::new();
        class.insert(x.clone());
        let mut queue = VecDeque::from([x.clone()]);
        while let Some(e) = queue.pop_front() {
            for s in &self.generators {
                let c = e.conjugate(s);
                if !class.contains(&c) {
                    if class.len() >= threshold {
                        return Err(Error::ThresholdExceeded(format!(
                            "conjugacy class exceeds {threshold} elements"
                        )));
                    }
                    class.insert(c.clone());
                    queue.push_back(c);
                }
            }
        }
        Ok(self.order() / BigUint::from(class.len()))
    }

    /// Smallest normal subgroup of `self` containing `seed`, by iterated
    /// conjugation of generators.
    pub fn normal_closure(&self, seed: &PermGroup) -> Result<PermGroup> {
        if !seed.is_subgroup_of(self)? {
            return Err(Error::NotASubgroup("normal-closure seed".into()));
        }
        let mut gens: Vec<Perm> = seed
            .generators
            .iter()
            .filter(|g| !g.is_identity())
            .cloned()
            .collect();
        if gens.is_empty() {
            return Ok(PermGroup::trivial(self.degree));
        }
        let mut closure = PermGroup::new(self.degree, gens.clone())?;
        let mut queue: VecDeque<Perm> = gens.iter().cloned().collect();
        while let Some(c) = queue.pop_front() {
            for s in &self.generators {
                let conj = c.conjugate(s);
                if !closure.chain().contains(&conj) {
                    gens.push(conj.clone());
                    closure = PermGroup::new(self.degree, gens.clone())?;
                    queue.push_back(conj);
                }
            }
        }
        Ok(closure)
    }

    /// Conjugate subgroup `self^g`.
    pub fn conjugate_by(&self, g: &Perm) -> Result<PermGroup> {
        if g.degree() != self.degree {
            return Err(Error::DegreeMismatch(self.degree, g.degree()));
        }
        PermGroup::new(
            self.degree,
            self.generators.iter().map(|s| s.conjugate(g)).collect(),
        )
    }

    /// The group generated by the generators of both operands.
    pub fn join(&self, other: &PermGroup) -> Result<PermGroup> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch(self.degree, other.degree));
        }
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().cloned());
        PermGroup::new(self.degree, gens)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grp(gens: &[&str], n: usize) -> PermGroup {
        let gens: Vec<Perm> = gens
            .iter()
            .map(|s| Perm::parse_cycles(s, n).unwrap())
            .collect();
        PermGroup::new(n, gens).unwrap()
    }

    fn symmetric(n: usize) -> PermGroup {
        let cycle: String = format!(
            "({})",
            (1..=n).map(|i| i.to_string()).collect::<Vec<_>>().join(",")
        );
        grp(&["(1,2)", &cycle], n)
    }

    #[test]
    fn orbit_of_cycle() {
        let g = grp(&["(1,2,3)"], 3);
        let (orbit, transversal) = g.orbit(0).unwrap();
        assert_eq!(orbit.len(), 3);
        for (&p, rep) in &transversal {
            assert_eq!(rep.apply(0), p);
        }
    }

    #[test]
    fn orbit_intransitive() {
        let g = grp(&["(1,2)", "(3,4)"], 4);
        let (orbit, _) = g.orbit(0).unwrap();
        assert_eq!(orbit, vec![0, 1]);
        assert!(!g.is_transitive());
    }

    #[test]
    fn s7_order() {
        assert_eq!(symmetric(7).order(), BigUint::from(5040u32));
    }

    #[test]
    fn agl15_c2_subgroup_of_s7_has_order_40() {
        let l = grp(&["(4,5,6,7)", "(3,4,5,7,6)", "(1,2)"], 7);
        assert_eq!(l.order(), BigUint::from(40u32));
    }

    #[test]
    fn trivial_group_order() {
        assert_eq!(PermGroup::trivial(5).order(), BigUint::one());
    }

    #[test]
    fn membership_in_s7_and_a7() {
        let s7 = symmetric(7);
        let a7 = grp(&["(1,2,3)", "(1,2,3,4,5,6,7)"], 7);
        let t = Perm::parse_cycles("(1,2)", 7).unwrap();
        assert!(s7.contains(&t).unwrap());
        assert!(!a7.contains(&t).unwrap());
        assert_eq!(a7.order(), BigUint::from(2520u32));
    }

    #[test]
    fn membership_in_c4() {
        // Oracle: the four elements of <(1,2,3,4)> are the powers of the cycle.
        let c4 = grp(&["(1,2,3,4)"], 4);
        let even = Perm::parse_cycles("(1,3)(2,4)", 4).unwrap();
        let odd = Perm::parse_cycles("(1,2)(3,4)", 4).unwrap();
        assert!(c4.contains(&even).unwrap());
        assert!(!c4.contains(&odd).unwrap());
    }

    #[test]
    fn stabilizer_orders_in_s4() {
        let s4 = symmetric(4);
        let st1 = s4.stabilizer(&[0]).unwrap();
        assert_eq!(st1.order(), BigUint::from(6u32));
        assert!(st1
            .generators()
            .iter()
            .all(|g| g.apply(0) == 0));
        let st12 = s4.stabilizer(&[0, 1]).unwrap();
        assert_eq!(st12.order(), BigUint::from(2u32));
    }

    #[test]
    fn k_transitivity() {
        let s5 = symmetric(5);
        assert!(s5.is_k_transitive(5).unwrap());
        let c5 = grp(&["(1,2,3,4,5)"], 5);
        assert!(!c5.is_k_transitive(2).unwrap());
    }

    #[test]
    fn intersect_a4_v4() {
        let a4 = grp(&["(1,2,3)", "(2,3,4)"], 4);
        let v4 = grp(&["(1,2)(3,4)", "(1,3)(2,4)"], 4);
        let meet = a4.intersect_small(&v4, ENUM_THRESHOLD).unwrap();
        assert_eq!(meet.order(), BigUint::from(4u32));
    }

    #[test]
    fn intersect_two_point_stabilizers_in_s4() {
        // Oracle: full enumeration of S4; elements fixing both 1 and 2 form
        // Sym({3,4}) of order 2.
        let s4 = symmetric(4);
        let st1 = s4.stabilizer(&[0]).unwrap();
        let st2 = s4.stabilizer(&[1]).unwrap();
        let meet = st1.intersect_small(&st2, ENUM_THRESHOLD).unwrap();
        assert_eq!(meet.order(), BigUint::from(2u32));
        let brute: Vec<Perm> = s4
            .elements(100)
            .unwrap()
            .into_iter()
            .filter(|e| e.apply(0) == 0 && e.apply(1) == 1)
            .collect();
        assert_eq!(brute.len(), 2);
    }

    #[test]
    fn centralizer_orders() {
        let s3 = symmetric(3);
        let x = Perm::parse_cycles("(1,2,3)", 3).unwrap();
        assert_eq!(s3.centralizer_order(&x, 100).unwrap(), BigUint::from(3u32));
        let s4 = symmetric(4);
        let t = Perm::parse_cycles("(1,2)", 4).unwrap();
        assert_eq!(s4.centralizer_order(&t, 100).unwrap(), BigUint::from(4u32));
    }

    #[test]
    fn normal_closures_in_s4_and_s3() {
        let s4 = symmetric(4);
        let seed = grp(&["(1,2)"], 4);
        assert_eq!(s4.normal_closure(&seed).unwrap().order(), s4.order());
        let v_seed = grp(&["(1,2)(3,4)"], 4);
        assert_eq!(
            s4.normal_closure(&v_seed).unwrap().order(),
            BigUint::from(4u32)
        );
        let s3 = symmetric(3);
        let a_seed = grp(&["(1,2,3)"], 3);
        assert_eq!(
            s3.normal_closure(&a_seed).unwrap().order(),
            BigUint::from(3u32)
        );
    }

    #[test]
    fn deterministic_chain_rebuild() {
        let gens = ["(4,5,6,7)", "(3,4,5,7,6)", "(1,2)"];
        let a = grp(&gens, 7);
        let b = grp(&gens, 7);
        assert_eq!(a.chain().base(), b.chain().base());
        assert_eq!(a.order(), b.order());
    }

    #[test]
    fn orbit_stabilizer_identity() {
        for (gens, n) in [
            (vec!["(1,2)", "(1,2,3,4,5)"], 5),
            (vec!["(4,5,6,7)", "(3,4,5,7,6)", "(1,2)"], 7),
            (vec!["(1,2,3,4)"], 4),
        ] {
            let g = grp(&gens, n);
            for p in 0..n {
                let (orbit, _) = g.orbit(p).unwrap();
                let stab = g.stabilizer(&[p]).unwrap();
                assert_eq!(BigUint::from(orbit.len()) * stab.order(), g.order());
            }
        }
    }
}
