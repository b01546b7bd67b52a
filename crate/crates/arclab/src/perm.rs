//! Permutations of `{1..n}`, stored as image sequences.
//!
//! The composition convention is left-to-right throughout the crate:
//! `(p * q)(x) = q(p(x))`.  Points are 1-based in all text formats and
//! 0-based internally.

use crate::error::{Error, Result};
use std::fmt;

/// A bijection on `{1..degree}`.  `images[i]` is the 0-based image of the
/// 0-based point `i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<u32>,
}

impl Perm {
    /// Build from 0-based images, checking bijectivity.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            let x = x as usize;
            if x >= n {
                return Err(Error::NotAPermutation(format!(
                    "image {} out of range for degree {}",
                    x + 1,
                    n
                )));
            }
            if seen[x] {
                return Err(Error::NotAPermutation(format!(
                    "point {} appears twice as an image",
                    x + 1
                )));
            }
            seen[x] = true;
        }
        Ok(Perm { images })
    }

    pub fn identity(degree: usize) -> Self {
        Perm {
            images: (0..degree as u32).collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of a 0-based point.
    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// Left-to-right composition: `(self * other)(x) = other(self(x))`.
    pub fn compose(&self, other: &Perm) -> Result<Perm> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(self.compose_unchecked(other))
    }

    #[inline]
    pub(crate) fn compose_unchecked(&self, other: &Perm) -> Perm {
        let images = self
            .images
            .iter()
            .map(|&x| other.images[x as usize])
            .collect();
        Perm { images }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0u32; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize] = i as u32;
        }
        Perm { images }
    }

    /// Conjugate `self^g = g⁻¹ · self · g` (so that `x^(g) ∘ images` tracks
    /// the relabelling of points by `g`).
    pub fn conjugate(&self, g: &Perm) -> Perm {
        g.inverse().compose_unchecked(&self.compose_unchecked(g))
    }

    /// Multiplicative order.
    pub fn order(&self) -> u64 {
        let mut seen = vec![false; self.images.len()];
        let mut order: u64 = 1;
        for start in 0..self.images.len() {
            if seen[start] {
                continue;
            }
            let mut len: u64 = 0;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                p = self.images[p] as usize;
                len += 1;
            }
            order = num_integer::lcm(order, len);
        }
        order
    }

    /// The n-th power (n ≥ 0) by repeated squaring on cycle images.
    pub fn pow(&self, n: u64) -> Perm {
        let mut result = Perm::identity(self.degree());
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = result.compose_unchecked(&base);
            }
            base = base.compose_unchecked(&base);
            n >>= 1;
        }
        result
    }

    /// Smallest moved 0-based point, if any.
    pub fn smallest_moved_point(&self) -> Option<usize> {
        self.images
            .iter()
            .enumerate()
            .find(|(i, &x)| *i as u32 != x)
            .map(|(i, _)| i)
    }

    pub fn moved_points(&self) -> Vec<usize> {
        self.images
            .iter()
            .enumerate()
            .filter(|(i, &x)| *i as u32 != x)
            .map(|(i, _)| i)
            .collect()
    }

    /// Number of fixed points.
    pub fn fixed_point_count(&self) -> usize {
        self.degree() - self.moved_points().len()
    }

    /// Extend to a larger degree, fixing the new points.
    pub fn extended(&self, degree: usize) -> Result<Perm> {
        if degree < self.degree() {
            return Err(Error::InvalidArgument(format!(
                "cannot shrink a degree-{} permutation to degree {}",
                self.degree(),
                degree
            )));
        }
        let mut images = self.images.clone();
        images.extend(self.degree() as u32..degree as u32);
        Ok(Perm { images })
    }

    /// Parse disjoint-cycle notation with 1-based points, e.g. `(1,2,8)(4,5)`.
    /// The identity is written `()`.  `degree` fixes the carrier.
    pub fn parse_cycles(s: &str, degree: usize) -> Result<Perm> {
        let s = s.trim();
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut touched = vec![false; degree];
        let mut rest = s;
        if rest.is_empty() {
            return Err(Error::Parse("empty permutation".into()));
        }
        while !rest.is_empty() {
            if !rest.starts_with('(') {
                return Err(Error::Parse(format!("expected '(' at: {rest:?}")));
            }
            let close = rest
                .find(')')
                .ok_or_else(|| Error::Parse(format!("unclosed cycle in {s:?}")))?;
            let body = &rest[1..close];
            rest = rest[close + 1..].trim_start();
            let body = body.trim();
            if body.is_empty() {
                continue; // "()" — identity cycle
            }
            let pts: Vec<usize> = body
                .split(',')
                .map(|t| {
                    let t = t.trim();
                    t.parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad point {t:?} in {s:?}")))
                })
                .collect::<Result<_>>()?;
            for &p in &pts {
                if p == 0 || p > degree {
                    return Err(Error::PointOutOfRange(p, degree));
                }
                if touched[p - 1] {
                    return Err(Error::Parse(format!(
                        "point {p} appears twice in {s:?}"
                    )));
                }
                touched[p - 1] = true;
            }
            for w in 0..pts.len() {
                let from = pts[w] - 1;
                let to = pts[(w + 1) % pts.len()] - 1;
                images[from] = to as u32;
            }
        }
        Perm::from_images(images)
    }

    /// Disjoint-cycle form with 1-based points; identity prints as `()`.
    pub fn cycle_string(&self) -> String {
        let mut seen = vec![false; self.degree()];
        let mut out = String::new();
        for start in 0..self.degree() {
            if seen[start] || self.apply(start) == start {
                seen[start] = true;
                continue;
            }
            out.push('(');
            let mut p = start;
            let mut first = true;
            while !seen[p] {
                seen[p] = true;
                if !first {
                    out.push(',');
                }
                out.push_str(&(p + 1).to_string());
                first = false;
                p = self.apply(p);
            }
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.cycle_string())
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.cycle_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> Perm {
        Perm::parse_cycles(s, n).unwrap()
    }

    #[test]
    fn compose_is_left_to_right() {
        // (1,2)·(2,3): 1→2 under the first factor, then 2→3, so 1↦3.
        let a = p("(1,2)", 3);
        let b = p("(2,3)", 3);
        let c = a.compose(&b).unwrap();
        assert_eq!(c, p("(1,3,2)", 3));
    }

    #[test]
    fn three_cycle_squared() {
        let a = p("(1,2,3)", 3);
        assert_eq!(a.compose(&a).unwrap(), p("(1,3,2)", 3));
    }

    #[test]
    fn inverse_composes_to_identity() {
        let a = p("(1,2)(3,4,5)", 5);
        assert!(a.compose(&a.inverse()).unwrap().is_identity());
        assert!(a.inverse().compose(&a).unwrap().is_identity());
    }

    #[test]
    fn order_of_mixed_cycles() {
        assert_eq!(p("(1,2)(3,4,5)", 5).order(), 6);
        assert_eq!(Perm::identity(4).order(), 1);
    }

    #[test]
    fn parse_rejects_repeats() {
        assert!(Perm::parse_cycles("(1,2,2)", 3).is_err());
        assert!(Perm::parse_cycles("(1,2)(2,3)", 3).is_err());
        assert!(Perm::parse_cycles("(1,9)", 3).is_err());
    }

    #[test]
    fn identity_round_trip() {
        let e = Perm::parse_cycles("()", 5).unwrap();
        assert!(e.is_identity());
        assert_eq!(e.cycle_string(), "()");
        let a = p("(1,2,8)(4,5)", 8);
        assert_eq!(
            Perm::parse_cycles(&a.cycle_string(), 8).unwrap(),
            a
        );
    }

    #[test]
    fn degree_mismatch_rejected() {
        let a = p("(1,2)", 3);
        let b = p("(1,2)", 4);
        assert!(a.compose(&b).is_err());
    }
}
