//! Dense matrices over a prime field `F_q`.

use crate::arith::is_prime;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    pub q: u32,
    pub rows: usize,
    pub cols: usize,
    data: Vec<u32>,
}

fn inv_mod(a: u32, q: u32) -> u32 {
    // Fermat: a^(q-2).
    let (mut base, mut e, mut acc) = (a as u64 % q as u64, q as u64 - 2, 1u64);
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % q as u64;
        }
        base = base * base % q as u64;
        e >>= 1;
    }
    acc as u32
}

impl Matrix {
    pub fn zeros(q: u32, rows: usize, cols: usize) -> Result<Self> {
        if !is_prime(q as u64) {
            return Err(Error::NotPrime(q as u64));
        }
        Ok(Matrix { q, rows, cols, data: vec![0; rows * cols] })
    }

    pub fn identity(q: u32, n: usize) -> Result<Self> {
        let mut m = Self::zeros(q, n, n)?;
        for i in 0..n {
            m.set(i, i, 1);
        }
        Ok(m)
    }

    pub fn from_rows(q: u32, rows: &[Vec<u32>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(q, rows.len(), cols)?;
        for (i, r) in rows.iter().enumerate() {
            if r.len() != cols {
                return Err(Error::Precondition("ragged matrix rows".into()));
            }
            for (j, &v) in r.iter().enumerate() {
                m.set(i, j, v % q);
            }
        }
        Ok(m)
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        self.data[i * self.cols + j] = v % self.q;
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let q = self.q as u64;
        let mut out = Matrix { q: self.q, rows: self.rows, cols: other.cols, data: vec![0; self.rows * other.cols] };
        for i in 0..self.rows {
            for j in 0..other.cols {
                let s: u64 = (0..self.cols).map(|k| self.get(i, k) as u64 * other.get(k, j) as u64).sum();
                out.data[i * other.cols + j] = (s % q) as u32;
            }
        }
        out
    }

    /// Row echelon form in place; returns the pivot columns.
    fn echelon(&mut self) -> Vec<usize> {
        let q = self.q as u64;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            let Some(p) = (r..self.rows).find(|&i| self.get(i, c) != 0) else { continue };
            for j in 0..self.cols {
                self.data.swap(r * self.cols + j, p * self.cols + j);
            }
            let inv = inv_mod(self.get(r, c), self.q) as u64;
            for j in 0..self.cols {
                let v = self.get(r, j) as u64 * inv % q;
                self.set(r, j, v as u32);
            }
            for i in 0..self.rows {
                let f = self.get(i, c) as u64;
                if i != r && f != 0 {
                    for j in 0..self.cols {
                        let v = (self.get(i, j) as u64 + q * q - f * self.get(r, j) as u64 % q) % q;
                        self.set(i, j, v as u32);
                    }
                }
            }
            pivots.push(c);
            r += 1;
            if r == self.rows {
                break;
            }
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().echelon().len()
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    /// Basis of `{x : self * x = 0}` (column vectors).
    pub fn nullspace(&self) -> Vec<Vec<u32>> {
        let mut m = self.clone();
        let pivots = m.echelon();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![0u32; self.cols];
                v[f] = 1;
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = (self.q - m.get(r, f)) % self.q;
                }
                v
            })
            .collect()
    }
}

/// An invertible `T` with `a * t == t * b`, if the two actions are similar.
/// All combinations of a nullspace basis are tried in lexicographic order.
pub fn intertwiner(a: &Matrix, b: &Matrix) -> Result<Option<Matrix>> {
    let (q, k) = (a.q, a.rows);
    if a.rows != a.cols || b.rows != b.cols || a.rows != b.rows || a.q != b.q {
        return Err(Error::Precondition("intertwiner needs square matrices of equal size over one field".into()));
    }
    // Unknown t_{ij} at index i*k + j; equation (a t - t b)_{rs} = 0.
    let mut sys = Matrix::zeros(q, k * k, k * k)?;
    for r in 0..k {
        for s in 0..k {
            let row = r * k + s;
            for m in 0..k {
                let idx = m * k + s;
                sys.set(row, idx, (sys.get(row, idx) + a.get(r, m)) % q);
                let idx = r * k + m;
                sys.set(row, idx, (sys.get(row, idx) + q - b.get(m, s)) % q);
            }
        }
    }
    let basis = sys.nullspace();
    let dim = basis.len() as u32;
    let total = (q as u64).checked_pow(dim).ok_or_else(|| Error::Precondition("nullspace too large".into()))?;
    for code in 1..total {
        let mut coeffs = Vec::with_capacity(dim as usize);
        let mut c = code;
        for _ in 0..dim {
            coeffs.push((c % q as u64) as u32);
            c /= q as u64;
        }
        let mut t = Matrix::zeros(q, k, k)?;
        for (v, &f) in basis.iter().zip(&coeffs) {
            if f == 0 {
                continue;
            }
            for (slot, &x) in t.data.iter_mut().zip(v.iter()) {
                *slot = ((*slot as u64 + f as u64 * x as u64) % q as u64) as u32;
            }
        }
        if t.is_invertible() {
            return Ok(Some(t));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_and_nullspace() {
        let m = Matrix::from_rows(3, &[vec![1, 2, 0], vec![2, 1, 0]]).unwrap();
        assert_eq!(m.rank(), 1);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 2);
        for v in &ns {
            for i in 0..2 {
                let s: u32 = (0..3).map(|j| m.get(i, j) * v[j]).sum();
                assert_eq!(s % 3, 0);
            }
        }
        assert!(Matrix::zeros(4, 1, 1).is_err());
    }

    #[test]
    fn similar_matrices() {
        // Companion matrix of x^2 + x + 1 over F_2 and a conjugate of it.
        let a = Matrix::from_rows(2, &[vec![0, 1], vec![1, 1]]).unwrap();
        let p = Matrix::from_rows(2, &[vec![1, 1], vec![0, 1]]).unwrap();
        let b = p.mul(&a).mul(&p);
        let t = intertwiner(&a, &b).unwrap().unwrap();
        assert_eq!(a.mul(&t), t.mul(&b));
        let id = Matrix::identity(2, 2).unwrap();
        assert!(intertwiner(&a, &id).unwrap().is_none());
    }
}
