//! Small finite fields GF(q), q <= 9, with a fixed canonical encoding.
//!
//! Element `i` is the polynomial whose coefficients are the base-`p` digits of
//! `i` (least significant digit = constant term). Extension fields reduce
//! modulo a fixed polynomial: GF(4) by x^2+x+1, GF(8) by x^3+x+1 and GF(9) by
//! x^2+1 over GF(3). Every table is precomputed, so arithmetic is a lookup.

use crate::error::{Error, Result};

pub type Elem = u8;

#[derive(Clone, PartialEq, Eq)]
pub struct FiniteField {
    q: u32,
    p: u32,
    e: u32,
    add: Vec<Elem>,
    mul: Vec<Elem>,
    neg: Vec<Elem>,
    inv: Vec<Elem>,
}

impl std::fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "GF({})", self.q)
    }
}

/// Coefficients (low degree first, monic) of the reduction polynomial.
fn modulus(q: u32) -> Option<(u32, u32, &'static [u32])> {
    match q {
        2 | 3 | 5 | 7 => Some((q, 1, &[])),
        4 => Some((2, 2, &[1, 1, 1])),
        8 => Some((2, 3, &[1, 1, 0, 1])),
        9 => Some((3, 2, &[1, 0, 1])),
        _ => None,
    }
}

fn digits(mut i: u32, p: u32, e: u32) -> Vec<u32> {
    let mut d = Vec::with_capacity(e as usize);
    for _ in 0..e {
        d.push(i % p);
        i /= p;
    }
    d
}

fn undigits(d: &[u32], p: u32) -> u32 {
    d.iter().rev().fold(0, |acc, &x| acc * p + x)
}

impl FiniteField {
    pub fn new(q: u32) -> Result<Self> {
        let (p, e, modpoly) = modulus(q).ok_or(Error::UnsupportedField(q))?;
        let qs = q as usize;
        let mut add = vec![0; qs * qs];
        let mut mul = vec![0; qs * qs];
        for a in 0..q {
            let da = digits(a, p, e);
            for b in 0..q {
                let db = digits(b, p, e);
                let sum: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[(a * q + b) as usize] = undigits(&sum, p) as Elem;

                let prod = if e == 1 {
                    (a * b) % p
                } else {
                    let mut c = vec![0u32; 2 * e as usize - 1];
                    for (i, x) in da.iter().enumerate() {
                        for (j, y) in db.iter().enumerate() {
                            c[i + j] = (c[i + j] + x * y) % p;
                        }
                    }
                    // reduce: x^e = -(lower coefficients of the monic modulus)
                    for deg in (e as usize..c.len()).rev() {
                        let lead = c[deg];
                        if lead == 0 {
                            continue;
                        }
                        c[deg] = 0;
                        for k in 0..e as usize {
                            let sub = lead * modpoly[k] % p;
                            let idx = deg - e as usize + k;
                            c[idx] = (c[idx] + p - sub) % p;
                        }
                    }
                    undigits(&c[..e as usize], p)
                };
                mul[(a * q + b) as usize] = prod as Elem;
            }
        }
        let mut neg = vec![0; qs];
        let mut inv = vec![0; qs];
        for a in 0..q {
            for b in 0..q {
                if add[(a * q + b) as usize] == 0 {
                    neg[a as usize] = b as Elem;
                }
                if mul[(a * q + b) as usize] == 1 {
                    inv[a as usize] = b as Elem;
                }
            }
        }
        Ok(FiniteField { q, p, e, add, mul, neg, inv })
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.e
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.q as Elem
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        self.add[a as usize * self.q as usize + b as usize]
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg[b as usize])
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.mul[a as usize * self.q as usize + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        self.neg[a as usize]
    }

    /// Multiplicative inverse; `None` for zero.
    #[inline]
    pub fn inv(&self, a: Elem) -> Option<Elem> {
        (a != 0).then(|| self.inv[a as usize])
    }

    pub fn is_square(&self, a: Elem) -> bool {
        self.elements().any(|x| self.mul(x, x) == a)
    }

    /// Dot product of two vectors.
    pub fn dot(&self, a: &[Elem], b: &[Elem]) -> Elem {
        a.iter().zip(b).fold(0, |acc, (&x, &y)| self.add(acc, self.mul(x, y)))
    }
}
