//! Small finite fields GF(p^m), with elements represented as polynomial
//! residues indexed by their base-p digit encoding.

use crate::error::{Error, Result};

/// GF(p^m).  Elements are `usize` indices in `0..q`; the index's base-p
/// digits are the coefficients of the residue polynomial, least degree
/// first.  The modulus is the lexicographically least monic irreducible
/// polynomial of degree m (smallest digit encoding), so a fixed `q` always
/// yields the same field tables.
#[derive(Clone, Debug)]
pub struct FiniteField {
    p: usize,
    m: usize,
    q: usize,
    /// Coefficients of the modulus, degree 0 first, length m+1, monic.
    modulus: Vec<usize>,
}

impl FiniteField {
    pub fn new(q: usize) -> Result<Self> {
        let (p, m) = factor_prime_power(q)
            .ok_or_else(|| Error::InvalidArgument(format!("{q} is not a prime power")))?;
        let modulus = if m == 1 {
            vec![0, 1]
        } else {
            least_irreducible(p, m)
        };
        Ok(FiniteField { p, m, q, modulus })
    }

    pub fn order(&self) -> usize {
        self.q
    }

    pub fn characteristic(&self) -> usize {
        self.p
    }

    pub fn extension_degree(&self) -> usize {
        self.m
    }

    /// Modulus coefficients, degree 0 first.
    pub fn modulus(&self) -> &[usize] {
        &self.modulus
    }

    fn digits(&self, a: usize) -> Vec<usize> {
        let mut a = a;
        let mut out = vec![0; self.m];
        for d in out.iter_mut() {
            *d = a % self.p;
            a /= self.p;
        }
        out
    }

    fn undigits(&self, coeffs: &[usize]) -> usize {
        coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| acc * self.p + c % self.p)
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        let (da, db) = (self.digits(a), self.digits(b));
        let sum: Vec<usize> = da
            .iter()
            .zip(&db)
            .map(|(x, y)| (x + y) % self.p)
            .collect();
        self.undigits(&sum)
    }

    pub fn neg(&self, a: usize) -> usize {
        let da = self.digits(a);
        let neg: Vec<usize> = da.iter().map(|&x| (self.p - x) % self.p).collect();
        self.undigits(&neg)
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        let (da, db) = (self.digits(a), self.digits(b));
        // Schoolbook product, then reduction by the monic modulus.
        let mut prod = vec![0usize; 2 * self.m];
        for (i, &x) in da.iter().enumerate() {
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % self.p;
            }
        }
        for d in (self.m..2 * self.m).rev() {
            let c = prod[d];
            if c == 0 {
                continue;
            }
            prod[d] = 0;
            for k in 0..self.m {
                let sub = (c * self.modulus[k]) % self.p;
                prod[d - self.m + k] = (prod[d - self.m + k] + self.p * self.p - sub) % self.p;
            }
        }
        self.undigits(&prod[..self.m])
    }

    pub fn pow(&self, a: usize, mut e: u64) -> usize {
        let mut base = a;
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: usize) -> Result<usize> {
        if a == 0 {
            return Err(Error::InvalidArgument("division by zero".into()));
        }
        Ok(self.pow(a, (self.q - 2) as u64))
    }

    /// Smallest-index generator of the multiplicative group.
    pub fn multiplicative_generator(&self) -> usize {
        'outer: for g in 2..self.q {
            let mut x = g;
            for _ in 1..self.q - 1 {
                if x == 1 {
                    continue 'outer;
                }
                x = self.mul(x, g);
            }
            if x == 1 {
                return g;
            }
        }
        // q = 2: the unit element generates the trivial group.
        1
    }

    /// Frobenius x ↦ x^p.
    pub fn frobenius(&self, a: usize) -> usize {
        self.pow(a, self.p as u64)
    }

    /// The image of the subfield GF(p^d) inside this field, for d | m:
    /// the solutions of x^(p^d) = x, sorted by index.
    pub fn subfield_elements(&self, d: usize) -> Result<Vec<usize>> {
        if d == 0 || self.m % d != 0 {
            return Err(Error::InvalidArgument(format!(
                "GF({}^{d}) is not a subfield of GF({}^{})",
                self.p, self.p, self.m
            )));
        }
        let sub_order = self.p.pow(d as u32);
        Ok((0..self.q)
            .filter(|&x| self.pow(x, sub_order as u64) == x)
            .collect())
    }
}

fn factor_prime_power(q: usize) -> Option<(usize, usize)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q % d == 0)?;
    let mut m = 0;
    let mut rest = q;
    while rest % p == 0 {
        rest /= p;
        m += 1;
    }
    if rest == 1 {
        Some((p, m))
    } else {
        None
    }
}

/// Lexicographically least monic irreducible polynomial of degree m over
/// GF(p), by brute-force trial division (degrees here are tiny).
fn least_irreducible(p: usize, m: usize) -> Vec<usize> {
    let pm = p.pow(m as u32);
    'cand: for k in 0..pm {
        let mut f = digits_of(k, p, m);
        f.push(1); // monic of degree m
        // Trial-divide by every monic polynomial of degree 1..=m/2.
        for d in 1..=m / 2 {
            let pd = p.pow(d as u32);
            for j in 0..pd {
                let mut g = digits_of(j, p, d);
                g.push(1);
                if poly_divides(&g, &f, p) {
                    continue 'cand;
                }
            }
        }
        return f;
    }
    unreachable!("irreducible polynomials exist in every degree");
}

fn digits_of(mut k: usize, p: usize, len: usize) -> Vec<usize> {
    let mut out = vec![0; len];
    for d in out.iter_mut() {
        *d = k % p;
        k /= p;
    }
    out
}

/// Does monic `g` divide monic `f` over GF(p)?
fn poly_divides(g: &[usize], f: &[usize], p: usize) -> bool {
    let mut rem: Vec<usize> = f.to_vec();
    let dg = g.len() - 1;
    while rem.len() > dg {
        let lead = *rem.last().unwrap();
        if lead != 0 {
            let shift = rem.len() - 1 - dg;
            for (i, &gc) in g.iter().enumerate() {
                rem[shift + i] = (rem[shift + i] + p * p - lead * gc % p) % p;
            }
        }
        rem.pop();
    }
    rem.iter().all(|&c| c == 0)
}
