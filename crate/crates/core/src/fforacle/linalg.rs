//! Dense matrices over a prime field `F_p`, with entries stored as residues in `0..p`.

use alloc::vec;
use alloc::vec::Vec;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Mat {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<u32>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn from_entries(rows: usize, cols: usize, data: Vec<u32>) -> Self {
        assert_eq!(data.len(), rows * cols);
        Mat { rows, cols, data }
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn mul(&self, other: &Mat, p: u32) -> Mat {
        assert_eq!(self.cols, other.rows);
        let p = u64::from(p);
        let mut out = Mat::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for c in 0..other.cols {
                let mut acc = 0u64;
                for k in 0..self.cols {
                    acc += u64::from(self.get(r, k)) * u64::from(other.get(k, c));
                }
                out.set(r, c, (acc % p) as u32);
            }
        }
        out
    }

    /// `self − c·I`.
    pub fn minus_scalar(&self, c: u32, p: u32) -> Mat {
        let mut out = self.clone();
        for i in 0..self.rows.min(self.cols) {
            let v = out.get(i, i);
            out.set(i, i, (v + p - c % p) % p);
        }
        out
    }

    pub fn is_nilpotent(&self, p: u32) -> bool {
        assert_eq!(self.rows, self.cols);
        if self.rows == 0 {
            return true;
        }
        let mut power = self.clone();
        for _ in 1..self.rows {
            if power.is_zero() {
                return true;
            }
            power = power.mul(self, p);
        }
        power.is_zero()
    }

    pub fn rank(&self, p: u32) -> usize {
        let mut m = self.clone();
        row_reduce(&mut m, p).len()
    }

    /// Inverse, or `None` for a singular matrix.
    pub fn inverse(&self, p: u32) -> Option<Mat> {
        let n = self.rows;
        assert_eq!(n, self.cols);
        let mut aug = Mat::zeros(n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.get(r, c));
            }
            aug.set(r, n + r, 1);
        }
        let pivots = row_reduce(&mut aug, p);
        if pivots.len() < n || pivots.iter().enumerate().any(|(i, &c)| c != i) {
            return None;
        }
        let mut inv = Mat::zeros(n, n);
        for r in 0..n {
            for c in 0..n {
                inv.set(r, c, aug.get(r, n + c));
            }
        }
        Some(inv)
    }

    /// Basis of `{v : self·v = 0}`.
    pub fn nullspace(&self, p: u32) -> Vec<Vec<u32>> {
        let mut m = self.clone();
        let pivots = row_reduce(&mut m, p);
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![0u32; self.cols];
                v[f] = 1;
                for (row, &pc) in pivots.iter().enumerate() {
                    // pivot variable = −(entry at free column)
                    v[pc] = (p - m.get(row, f)) % p;
                }
                v
            })
            .collect()
    }
}

pub fn inv_mod(a: u32, p: u32) -> u32 {
    assert!(!a.is_multiple_of(p), "zero has no inverse");
    pow_mod(a, p - 2, p)
}

fn pow_mod(a: u32, mut e: u32, p: u32) -> u32 {
    let p64 = u64::from(p);
    let mut base = u64::from(a) % p64;
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p64;
        }
        base = base * base % p64;
        e >>= 1;
    }
    acc as u32
}

/// Reduced row echelon form in place; returns the pivot columns.
fn row_reduce(m: &mut Mat, p: u32) -> Vec<usize> {
    let p64 = u64::from(p);
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..m.cols {
        if row == m.rows {
            break;
        }
        let Some(pr) = (row..m.rows).find(|&r| m.get(r, col) != 0) else { continue };
        if pr != row {
            for c in 0..m.cols {
                let (a, b) = (m.get(row, c), m.get(pr, c));
                m.set(row, c, b);
                m.set(pr, c, a);
            }
        }
        let inv = u64::from(inv_mod(m.get(row, col), p));
        for c in 0..m.cols {
            let v = u64::from(m.get(row, c)) * inv % p64;
            m.set(row, c, v as u32);
        }
        for r in 0..m.rows {
            if r == row {
                continue;
            }
            let factor = u64::from(m.get(r, col));
            if factor == 0 {
                continue;
            }
            for c in 0..m.cols {
                let v = (u64::from(m.get(r, c)) + p64 * p64 - factor * u64::from(m.get(row, c))) % p64;
                m.set(r, c, v as u32);
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}
