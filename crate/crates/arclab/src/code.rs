//! The equidistant ternary (4,2)-code and the monomial map of order 8
//! used by the nondiagonal constructions.
//!
//! A note on the map tau = (s,1,s,s)(1,2,3,4) with s the nontrivial
//! scalar of GF(3): tau scales exactly three coordinates by 2 before
//! rotating, so the entry multiset {0,1,1,1} of (1,1,1,0) can only go to
//! {0,2,2,2} or {0,1,2,2}.  In particular no convention for composing
//! the scalar part with the rotation sends (1,1,1,0) to (1,2,0,1); the
//! single code-preserving convention (scale, then rotate right) cycles
//! the eight nonzero words in the order recorded in TAU_ORBIT below.

use crate::error::{Error, Result};
use crate::perm::Perm;
use serde::Serialize;

pub type Word = [u8; 4];

/// The eight nonzero codewords in their customary printed order.
pub const NONZERO_WORDS: [Word; 8] = [
    [1, 1, 1, 0],
    [1, 2, 0, 1],
    [2, 0, 1, 1],
    [0, 2, 1, 2],
    [2, 2, 2, 0],
    [2, 1, 0, 2],
    [1, 0, 2, 2],
    [0, 1, 2, 1],
];

/// The orbit of tau starting at (1,1,1,0).
pub const TAU_ORBIT: [Word; 8] = [
    [1, 1, 1, 0],
    [0, 2, 1, 2],
    [1, 0, 2, 2],
    [1, 2, 0, 1],
    [2, 2, 2, 0],
    [0, 1, 2, 1],
    [2, 0, 1, 1],
    [2, 1, 0, 2],
];

#[derive(Clone, Debug)]
pub struct TernaryCode {
    pub generators: [Word; 2],
    /// All 9 codewords, the zero word first, then the span in a fixed
    /// scan order.
    pub codewords: Vec<Word>,
}

fn add(a: Word, b: Word) -> Word {
    [
        (a[0] + b[0]) % 3,
        (a[1] + b[1]) % 3,
        (a[2] + b[2]) % 3,
        (a[3] + b[3]) % 3,
    ]
}

fn scale(c: u8, a: Word) -> Word {
    [c * a[0] % 3, c * a[1] % 3, c * a[2] % 3, c * a[3] % 3]
}

pub fn weight(w: Word) -> usize {
    w.iter().filter(|&&x| x != 0).count()
}

/// The span of (1,1,1,0) and (1,2,0,1) in GF(3)^4.
pub fn build_code() -> TernaryCode {
    let g1: Word = [1, 1, 1, 0];
    let g2: Word = [1, 2, 0, 1];
    let mut codewords = Vec::with_capacity(9);
    for i in 0..3u8 {
        for j in 0..3u8 {
            codewords.push(add(scale(i, g1), scale(j, g2)));
        }
    }
    TernaryCode {
        generators: [g1, g2],
        codewords,
    }
}

impl TernaryCode {
    pub fn nonzero(&self) -> Vec<Word> {
        self.codewords
            .iter()
            .copied()
            .filter(|w| *w != [0, 0, 0, 0])
            .collect()
    }

    pub fn contains(&self, w: Word) -> bool {
        self.codewords.contains(&w)
    }
}

/// A monomial linear map of GF(3)^4: scale coordinate i by scalars[i],
/// then move it to position perm(i).
#[derive(Clone, Debug)]
pub struct MonomialMap {
    pub scalars: [u8; 4],
    pub perm: Perm,
}

impl MonomialMap {
    pub fn new(scalars: [u8; 4], perm: Perm) -> Result<Self> {
        if perm.degree() != 4 {
            return Err(Error::DegreeMismatch(4, perm.degree()));
        }
        if scalars.iter().any(|&s| s != 1 && s != 2) {
            return Err(Error::InvalidArgument(
                "scalars must be nonzero elements of GF(3)".into(),
            ));
        }
        Ok(MonomialMap { scalars, perm })
    }

    pub fn apply(&self, v: Word) -> Word {
        let mut out = [0u8; 4];
        for i in 0..4 {
            out[self.perm.apply(i)] = self.scalars[i] * v[i] % 3;
        }
        out
    }

    /// Multiplicative order, computed on the 81 vectors.
    pub fn order(&self) -> u32 {
        let mut all: Vec<Word> = Vec::new();
        for a in 0..3u8 {
            for b in 0..3u8 {
                for c in 0..3u8 {
                    for d in 0..3u8 {
                        all.push([a, b, c, d]);
                    }
                }
            }
        }
        let mut current = all.clone();
        let mut n = 0u32;
        loop {
            current = current.iter().map(|&v| self.apply(v)).collect();
            n += 1;
            if current == all {
                return n;
            }
            assert!(n < 10_000, "monomial maps on GF(3)^4 have small order");
        }
    }
}

/// tau = (s,1,s,s)(1,2,3,4), with s the scalar 2.
pub fn tau() -> MonomialMap {
    MonomialMap::new([2, 1, 2, 2], Perm::parse_cycles("(1,2,3,4)", 4).unwrap()).unwrap()
}

#[derive(Clone, Debug, Serialize)]
pub struct TauCertificate {
    pub order: u32,
    pub fourth_power_is_negation: bool,
    pub preserves_code: bool,
    /// Successive tau-images of (1,1,1,0), covering all 8 nonzero words.
    pub visiting_order: Vec<Word>,
    pub visits_all_nonzero_words: bool,
}

/// Certify the properties of tau on the code: order 8, tau^4 = negation,
/// code preservation, and a single 8-cycle on the nonzero words.
pub fn verify_tau() -> TauCertificate {
    let code = build_code();
    let t = tau();
    let order = t.order();
    let fourth = |v: Word| {
        let mut w = v;
        for _ in 0..4 {
            w = t.apply(w);
        }
        w
    };
    let mut fourth_power_is_negation = true;
    let mut preserves_code = true;
    for &w in &code.codewords {
        if fourth(w) != scale(2, w) {
            fourth_power_is_negation = false;
        }
        if !code.contains(t.apply(w)) {
            preserves_code = false;
        }
    }
    let mut visiting_order = Vec::with_capacity(8);
    let mut v: Word = [1, 1, 1, 0];
    for _ in 0..8 {
        visiting_order.push(v);
        v = t.apply(v);
    }
    let mut seen = visiting_order.clone();
    seen.sort_unstable();
    let mut expected = NONZERO_WORDS.to_vec();
    expected.sort_unstable();
    TauCertificate {
        order,
        fourth_power_is_negation,
        preserves_code,
        visits_all_nonzero_words: v == [1, 1, 1, 0] && seen == expected,
        visiting_order,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn code_matches_printed_set_and_is_equidistant() {
        let code = build_code();
        assert_eq!(code.codewords.len(), 9);
        let nz: HashSet<Word> = code.nonzero().into_iter().collect();
        assert_eq!(nz.len(), 8);
        assert_eq!(nz, NONZERO_WORDS.iter().copied().collect());
        for w in nz {
            assert_eq!(weight(w), 3);
        }
    }

    #[test]
    fn code_is_linear() {
        let code = build_code();
        for &a in &code.codewords {
            for &b in &code.codewords {
                assert!(code.contains(add(a, b)));
            }
            for c in 0..3 {
                assert!(code.contains(scale(c, a)));
            }
        }
    }

    #[test]
    fn weight_enumerator_is_1_plus_8z3() {
        let code = build_code();
        let mut counts = [0usize; 5];
        for &w in &code.codewords {
            counts[weight(w)] += 1;
        }
        assert_eq!(counts, [1, 0, 0, 8, 0]);
    }

    #[test]
    fn tau_has_order_8_and_fourth_power_negates() {
        let cert = verify_tau();
        assert_eq!(cert.order, 8);
        assert!(cert.fourth_power_is_negation);
        assert!(cert.preserves_code);
    }

    #[test]
    fn tau_cycles_all_nonzero_words_from_1110() {
        let cert = verify_tau();
        assert!(cert.visits_all_nonzero_words);
        assert_eq!(cert.visiting_order, TAU_ORBIT.to_vec());
        assert_eq!(cert.visiting_order[1], [0, 2, 1, 2]);
    }

    #[test]
    fn no_convention_sends_1110_to_1201() {
        // Entry-multiset obstruction: three coordinates are scaled by 2,
        // so {0,1,1,1} can only map to {0,2,2,2} or {0,1,2,2}, never to
        // the multiset {0,1,1,2} of (1,2,0,1).
        let target = [1u8, 2, 0, 1];
        let mut tm = target.to_vec();
        tm.sort_unstable();
        for unscaled in 0..4usize {
            let mut image: Vec<u8> = [1u8, 1, 1, 0]
                .iter()
                .enumerate()
                .map(|(i, &x)| if i == unscaled { x } else { 2 * x % 3 })
                .collect();
            image.sort_unstable();
            assert_ne!(image, tm);
        }
    }

    #[test]
    fn invalid_monomial_maps_rejected() {
        assert!(MonomialMap::new([0, 1, 1, 1], Perm::identity(4)).is_err());
        assert!(MonomialMap::new([1, 1, 1, 1], Perm::identity(3)).is_err());
    }
}
