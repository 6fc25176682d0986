//! Dense exact rational matrices.
//!
//! Entries are stored as integer numerators over one shared positive
//! denominator, reduced so that the gcd of the denominator and all numerators
//! is 1. That form is unique, so structural equality is value equality.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::rational::Rational;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    den: BigInt,
    num: Vec<BigInt>,
}

impl std::fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "RationalMatrix {}x{} (1/{})", self.rows, self.cols, self.den)?;
        for r in 0..self.rows.min(12) {
            let row: Vec<String> = (0..self.cols.min(12))
                .map(|c| self.num[r * self.cols + c].to_string())
                .collect();
            writeln!(f, "  {}", row.join(" "))?;
        }
        Ok(())
    }
}

impl RationalMatrix {
    fn normalized(rows: usize, cols: usize, mut den: BigInt, mut num: Vec<BigInt>) -> Self {
        debug_assert_eq!(num.len(), rows * cols);
        if den.is_negative() {
            den = -den;
            for x in num.iter_mut() {
                *x = -std::mem::take(x);
            }
        }
        let mut g = den.clone();
        for x in &num {
            if g.is_one() {
                break;
            }
            if !x.is_zero() {
                g = g.gcd(x);
            }
        }
        if num.iter().all(Zero::is_zero) {
            g = den.clone();
        }
        if !g.is_one() {
            den /= &g;
            for x in num.iter_mut() {
                *x /= &g;
            }
        }
        RationalMatrix { rows, cols, den, num }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix { rows, cols, den: BigInt::one(), num: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_integer_fn(n, n, |i, j| i64::from(i == j))
    }

    /// The all-ones matrix J.
    pub fn ones(rows: usize, cols: usize) -> Self {
        Self::from_integer_fn(rows, cols, |_, _| 1)
    }

    pub fn from_integer_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> i64) -> Self {
        let mut num = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                num.push(BigInt::from(f(i, j)));
            }
        }
        RationalMatrix { rows, cols, den: BigInt::one(), num }
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> Rational) -> Self {
        let entries: Vec<Rational> =
            (0..rows * cols).map(|idx| f(idx / cols.max(1), idx % cols.max(1))).collect();
        let den = entries.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
        let num = entries.iter().map(|r| r.numer() * (&den / r.denom())).collect();
        Self::normalized(rows, cols, den, num)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> Rational {
        Rational::new(self.num[i * self.cols + j].clone(), self.den.clone())
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (i + 1..self.cols).all(|j| self.num[i * self.cols + j] == self.num[j * self.cols + i])
            })
    }

    pub fn transpose(&self) -> Self {
        let mut num = Vec::with_capacity(self.num.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                num.push(self.num[i * self.cols + j].clone());
            }
        }
        RationalMatrix { rows: self.cols, cols: self.rows, den: self.den.clone(), num }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let num = self.num.iter().map(|x| x * c.numer()).collect();
        Self::normalized(self.rows, self.cols, &self.den * c.denom(), num)
    }

    fn combine(&self, other: &Self, sign: i32) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Dimension(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let den = self.den.lcm(&other.den);
        let fa = &den / &self.den;
        let fb = &den / &other.den;
        let num = self
            .num
            .iter()
            .zip(&other.num)
            .map(|(a, b)| if sign > 0 { a * &fa + b * &fb } else { a * &fa - b * &fb })
            .collect();
        Ok(Self::normalized(self.rows, self.cols, den, num))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.combine(other, 1)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.combine(other, -1)
    }

    fn small_entries(&self) -> Option<(Vec<i64>, u64)> {
        let mut out = Vec::with_capacity(self.num.len());
        let mut max = 0u64;
        for x in &self.num {
            let v = x.to_i64()?;
            max = max.max(v.unsigned_abs());
            out.push(v);
        }
        Some((out, max))
    }

    /// Exact matrix product.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let (n, m, p) = (self.rows, self.cols, other.cols);
        let den = &self.den * &other.den;
        // i128 fast path whenever every partial sum provably fits
        if let (Some((a, ma)), Some((b, mb))) = (self.small_entries(), other.small_entries()) {
            let bound = (ma as u128) * (mb as u128) * (m.max(1) as u128);
            if bound < (i128::MAX as u128) {
                let mut acc = vec![0i128; n * p];
                for i in 0..n {
                    let row = &mut acc[i * p..(i + 1) * p];
                    for k in 0..m {
                        let x = a[i * m + k] as i128;
                        if x == 0 {
                            continue;
                        }
                        let brow = &b[k * p..(k + 1) * p];
                        for (r, &y) in row.iter_mut().zip(brow) {
                            *r += x * y as i128;
                        }
                    }
                }
                let num = acc.into_iter().map(BigInt::from).collect();
                return Ok(Self::normalized(n, p, den, num));
            }
        }
        let mut num = vec![BigInt::zero(); n * p];
        for i in 0..n {
            for k in 0..m {
                let x = &self.num[i * m + k];
                if x.is_zero() {
                    continue;
                }
                for j in 0..p {
                    let y = &other.num[k * p + j];
                    if !y.is_zero() {
                        num[i * p + j] += x * y;
                    }
                }
            }
        }
        Ok(Self::normalized(n, p, den, num))
    }

    /// Matrix times column vector.
    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if v.len() != self.cols {
            return Err(Error::Dimension(format!("vector of length {} for {} columns", v.len(), self.cols)));
        }
        let col = RationalMatrix::from_fn(self.cols, 1, |i, _| v[i].clone());
        let prod = self.mul(&col)?;
        Ok((0..self.rows).map(|i| prod.get(i, 0)).collect())
    }

    /// Exact inverse by fraction-free (Bareiss) Gauss-Jordan elimination with
    /// pivoting on the first nonzero entry of each column.
    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::Dimension(format!("inverse of non-square {}x{}", self.rows, self.cols)));
        }
        let n = self.rows;
        let w = 2 * n;
        let mut m: Vec<BigInt> = vec![BigInt::zero(); n * w];
        for i in 0..n {
            for j in 0..n {
                m[i * w + j] = self.num[i * n + j].clone();
            }
            m[i * w + n + i] = BigInt::one();
        }
        let mut prev = BigInt::one();
        for k in 0..n {
            let pivot = (k..n).find(|&r| !m[r * w + k].is_zero()).ok_or(Error::Singular)?;
            if pivot != k {
                for j in 0..w {
                    m.swap(pivot * w + j, k * w + j);
                }
            }
            let pk = m[k * w + k].clone();
            let pivot_row: Vec<BigInt> = m[k * w..(k + 1) * w].to_vec();
            for i in 0..n {
                if i == k {
                    continue;
                }
                let f = m[i * w + k].clone();
                for j in 0..w {
                    let val = &pk * &m[i * w + j] - &f * &pivot_row[j];
                    let (q, r) = val.div_rem(&prev);
                    if !r.is_zero() {
                        return Err(Error::InvariantViolation("inexact Bareiss division".into()));
                    }
                    m[i * w + j] = q;
                }
            }
            prev = pk;
        }
        // left block is now prev * I; right block is prev * N^{-1}
        let mut num = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                num.push(&m[i * w + n + j] * &self.den);
            }
        }
        Ok(Self::normalized(n, n, prev, num))
    }

    /// Rows and columns picked by index lists.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut num = Vec::with_capacity(rows.len() * cols.len());
        for &i in rows {
            for &j in cols {
                num.push(self.num[i * self.cols + j].clone());
            }
        }
        Self::normalized(rows.len(), cols.len(), self.den.clone(), num)
    }
}
