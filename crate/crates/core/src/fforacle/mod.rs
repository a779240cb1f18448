//! Brute-force counts of quiver representations over prime fields.
//!
//! Every representation of dimension `α` over `F_p` is enumerated, isomorphism
//! classes are found by sweeping orbits of `Πᵢ GL(αᵢ, F_p)`, and the orbit count
//! is checked against Burnside's lemma. A class is absolutely indecomposable when
//! its endomorphism algebra `E` is local with residue field `F_p`, i.e.
//! `dim E − dim rad E = 1`. The resulting counts equal `a_α(p)`.
//!
//! Only meant for tiny dimension vectors: the search space is capped.

mod linalg;

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

pub use linalg::Mat;

use crate::error::{Error, Result};
use crate::quiver::{DimVector, Quiver};

/// Default cap on the number of representations enumerated.
pub const DEFAULT_CAP: u128 = 1 << 24;

/// A representation over `F_p`: one `α_{t(h)} × α_{s(h)}` matrix per arrow `h`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteFieldRep {
    pub p: u32,
    pub maps: Vec<Mat>,
}

pub fn is_prime(p: u32) -> bool {
    p >= 2 && (2..).take_while(|d: &u32| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// Result of partitioning a representation space into isomorphism classes.
#[derive(Debug, Clone)]
pub struct Classification {
    /// One representative per isomorphism class.
    pub representatives: Vec<FiniteFieldRep>,
    /// Orbit count given by Burnside's lemma; always equals `representatives.len()`.
    pub burnside_count: u64,
}

struct Space {
    p: u32,
    dims: Vec<usize>,
    arrows: Vec<(usize, usize)>,
    /// Offset of each arrow's matrix in the flattened entry list.
    offsets: Vec<usize>,
    entries: usize,
    size: u64,
}

impl Space {
    fn new(quiver: &Quiver, alpha: &DimVector, p: u32, cap: u128) -> Result<Self> {
        quiver.check_dim(alpha)?;
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let dims: Vec<usize> = alpha.entries().iter().map(|&a| a as usize).collect();
        let mut offsets = Vec::with_capacity(quiver.arrows().len());
        let mut entries = 0usize;
        for &(s, t) in quiver.arrows() {
            offsets.push(entries);
            entries += dims[s] * dims[t];
        }
        let size = (0..entries).try_fold(1u128, |acc, _| acc.checked_mul(u128::from(p)).filter(|&v| v <= cap));
        let size =
            size.ok_or(Error::SearchSpaceTooLarge { size: u128::from(p).saturating_pow(entries as u32), cap })?;
        Ok(Space { p, dims, arrows: quiver.arrows().to_vec(), offsets, entries, size: size as u64 })
    }

    fn decode(&self, mut code: u64) -> Vec<u32> {
        let p = u64::from(self.p);
        (0..self.entries)
            .map(|_| {
                let d = code % p;
                code /= p;
                d as u32
            })
            .collect()
    }

    fn encode(&self, entries: &[u32]) -> u64 {
        entries.iter().rev().fold(0u64, |acc, &d| acc * u64::from(self.p) + u64::from(d))
    }

    fn maps(&self, entries: &[u32]) -> Vec<Mat> {
        self.arrows
            .iter()
            .zip(&self.offsets)
            .map(|(&(s, t), &off)| {
                let (rows, cols) = (self.dims[t], self.dims[s]);
                Mat::from_entries(rows, cols, entries[off..off + rows * cols].to_vec())
            })
            .collect()
    }

    /// `x_h ↦ g_t x_h g_s⁻¹` on flattened entries.
    fn act(&self, g: &[Mat], g_inv: &[Mat], entries: &[u32]) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.entries);
        for (map, &(s, t)) in self.maps(entries).iter().zip(&self.arrows) {
            let moved = g[t].mul(map, self.p).mul(&g_inv[s], self.p);
            out.extend_from_slice(&moved.data);
        }
        out
    }

    /// `Πᵢ GL(αᵢ, F_p)` as per-vertex matrices together with their inverses.
    fn group(&self) -> Vec<(Vec<Mat>, Vec<Mat>)> {
        let per_vertex: Vec<Vec<(Mat, Mat)>> = self.dims.iter().map(|&n| general_linear(n, self.p)).collect();
        let mut out: Vec<(Vec<Mat>, Vec<Mat>)> = vec![(Vec::new(), Vec::new())];
        for choices in &per_vertex {
            let mut next = Vec::with_capacity(out.len() * choices.len());
            for (g, gi) in &out {
                for (m, mi) in choices {
                    let (mut g, mut gi) = (g.clone(), gi.clone());
                    g.push(m.clone());
                    gi.push(mi.clone());
                    next.push((g, gi));
                }
            }
            out = next;
        }
        out
    }

    /// Dimension of the fixed space of `g` acting on all representations.
    fn fixed_dimension(&self, g: &[Mat]) -> usize {
        let p = self.p;
        self.arrows
            .iter()
            .map(|&(s, t)| {
                let (m, n) = (self.dims[t], self.dims[s]);
                // X ↦ g_t X − X g_s on m×n matrices, X flattened row-major.
                let mut op = Mat::zeros(m * n, m * n);
                for r in 0..m {
                    for c in 0..n {
                        let row = r * n + c;
                        for k in 0..m {
                            let v = (op.get(row, k * n + c) + g[t].get(r, k)) % p;
                            op.set(row, k * n + c, v);
                        }
                        for k in 0..n {
                            let v = (op.get(row, r * n + k) + p - g[s].get(k, c)) % p;
                            op.set(row, r * n + k, v);
                        }
                    }
                }
                m * n - op.rank(p)
            })
            .sum()
    }
}

/// `GL(n, F_p)` by filtering all `n × n` matrices, paired with inverses.
fn general_linear(n: usize, p: u32) -> Vec<(Mat, Mat)> {
    let total = (p as u64).pow((n * n) as u32);
    let mut out = Vec::new();
    for code in 0..total {
        let mut c = code;
        let data = (0..n * n)
            .map(|_| {
                let d = c % u64::from(p);
                c /= u64::from(p);
                d as u32
            })
            .collect();
        let m = Mat::from_entries(n, n, data);
        if let Some(inv) = m.inverse(p) {
            out.push((m, inv));
        }
    }
    out
}

/// Splits all representations of dimension `α` over `F_p` into isomorphism classes.
pub fn classify(quiver: &Quiver, alpha: &DimVector, p: u32, cap: u128) -> Result<Classification> {
    let space = Space::new(quiver, alpha, p, cap)?;
    let group = space.group();
    let mut seen = vec![false; space.size as usize];
    let mut representatives = Vec::new();
    for code in 0..space.size {
        if seen[code as usize] {
            continue;
        }
        let x = space.decode(code);
        for (g, gi) in &group {
            seen[space.encode(&space.act(g, gi, &x)) as usize] = true;
        }
        representatives.push(FiniteFieldRep { p, maps: space.maps(&x) });
    }

    let fixed_total: u128 = group.iter().map(|(g, _)| u128::from(p).pow(space.fixed_dimension(g) as u32)).sum();
    let order = group.len() as u128;
    if !fixed_total.is_multiple_of(order) {
        return Err(Error::Internal(format!("Burnside sum {fixed_total} is not divisible by |G| = {order}")));
    }
    let burnside_count = (fixed_total / order) as u64;
    if burnside_count != representatives.len() as u64 {
        return Err(Error::Internal(format!(
            "orbit sweep found {} classes but Burnside's lemma gives {burnside_count}",
            representatives.len()
        )));
    }
    Ok(Classification { representatives, burnside_count })
}

/// Number of isomorphism classes of representations of dimension `α` over `F_p`.
pub fn count_all_iso_classes(quiver: &Quiver, alpha: &DimVector, p: u32) -> Result<u64> {
    Ok(classify(quiver, alpha, p, DEFAULT_CAP)?.representatives.len() as u64)
}

/// Number of absolutely indecomposable representations of dimension `α` over `F_p`.
pub fn count_absolutely_indecomposable(quiver: &Quiver, alpha: &DimVector, p: u32) -> Result<u64> {
    count_absolutely_indecomposable_with_cap(quiver, alpha, p, DEFAULT_CAP)
}

pub fn count_absolutely_indecomposable_with_cap(quiver: &Quiver, alpha: &DimVector, p: u32, cap: u128) -> Result<u64> {
    let classes = classify(quiver, alpha, p, cap)?;
    let mut count = 0;
    for rep in &classes.representatives {
        if EndomorphismAlgebra::of(quiver, alpha, rep).is_local_split(cap)? {
            count += 1;
        }
    }
    Ok(count)
}

/// `End(M)` as a subspace of `⊕ᵢ Mat(αᵢ × αᵢ, F_p)`.
#[derive(Debug, Clone)]
pub struct EndomorphismAlgebra {
    p: u32,
    dims: Vec<usize>,
    basis: Vec<Vec<u32>>,
}

impl EndomorphismAlgebra {
    /// Solves `f_{t(h)} x_h = x_h f_{s(h)}` for all arrows `h`.
    pub fn of(quiver: &Quiver, alpha: &DimVector, rep: &FiniteFieldRep) -> Self {
        let p = rep.p;
        let dims: Vec<usize> = alpha.entries().iter().map(|&a| a as usize).collect();
        let mut offsets = Vec::with_capacity(dims.len());
        let mut unknowns = 0;
        for &n in &dims {
            offsets.push(unknowns);
            unknowns += n * n;
        }
        let mut rows: Vec<Vec<u32>> = Vec::new();
        for (x, &(s, t)) in rep.maps.iter().zip(quiver.arrows()) {
            let (m, n) = (dims[t], dims[s]);
            for r in 0..m {
                for c in 0..n {
                    let mut eq = vec![0u32; unknowns];
                    for k in 0..m {
                        let col = offsets[t] + r * m + k;
                        eq[col] = (eq[col] + x.get(k, c)) % p;
                    }
                    for k in 0..n {
                        let col = offsets[s] + k * n + c;
                        eq[col] = (eq[col] + p - x.get(r, k)) % p;
                    }
                    rows.push(eq);
                }
            }
        }
        let system = Mat::from_entries(rows.len(), unknowns, rows.concat());
        EndomorphismAlgebra { p, dims, basis: system.nullspace(p) }
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    fn blocks(&self, v: &[u32]) -> Vec<Mat> {
        let mut off = 0;
        self.dims
            .iter()
            .map(|&n| {
                let m = Mat::from_entries(n, n, v[off..off + n * n].to_vec());
                off += n * n;
                m
            })
            .collect()
    }

    fn element_count(&self, cap: u128) -> Result<u64> {
        let size = u128::from(self.p).checked_pow(self.dimension() as u32).filter(|&s| s <= cap);
        size.map(|s| s as u64)
            .ok_or(Error::SearchSpaceTooLarge { size: u128::from(self.p).saturating_pow(self.dimension() as u32), cap })
    }

    fn element(&self, mut code: u64) -> Vec<Mat> {
        let p = u64::from(self.p);
        let len = self.dims.iter().map(|n| n * n).sum();
        let mut v = vec![0u64; len];
        for b in &self.basis {
            let coeff = code % p;
            code /= p;
            if coeff != 0 {
                for (acc, &x) in v.iter_mut().zip(b) {
                    *acc = (*acc + coeff * u64::from(x)) % p;
                }
            }
        }
        self.blocks(&v.into_iter().map(|x| x as u32).collect::<Vec<_>>())
    }

    fn nilpotent(&self, blocks: &[Mat]) -> bool {
        blocks.iter().all(|b| b.is_nilpotent(self.p))
    }

    /// `E` is local with `E/rad E = F_p`: every element is a scalar plus a nilpotent,
    /// and `E ≠ 0`. Equivalent to `dim E − dim rad E = 1`.
    pub fn is_local_split(&self, cap: u128) -> Result<bool> {
        match self.dimension() {
            0 => return Ok(false),
            // Only scalars.
            1 => return Ok(true),
            _ => {}
        }
        for code in 0..self.element_count(cap)? {
            let e = self.element(code);
            let split =
                (0..self.p).any(|c| self.nilpotent(&e.iter().map(|b| b.minus_scalar(c, self.p)).collect::<Vec<_>>()));
            if !split {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `dim rad E`, with `rad E = {a : y·a is nilpotent for all y ∈ E}`, by enumeration.
    pub fn radical_dimension(&self, cap: u128) -> Result<usize> {
        let n = self.element_count(cap)?;
        if u128::from(n) * u128::from(n) > cap {
            return Err(Error::SearchSpaceTooLarge { size: u128::from(n) * u128::from(n), cap });
        }
        let elements: Vec<Vec<Mat>> = (0..n).map(|c| self.element(c)).collect();
        let members = elements
            .iter()
            .filter(|a| {
                self.nilpotent(a)
                    && elements.iter().all(|y| {
                        let prod: Vec<Mat> = y.iter().zip(a.iter()).map(|(yb, ab)| yb.mul(ab, self.p)).collect();
                        self.nilpotent(&prod)
                    })
            })
            .count() as u64;
        // The radical is a subspace, so it has p^k elements.
        let mut k = 0;
        let mut size = 1u64;
        while size < members {
            size *= u64::from(self.p);
            k += 1;
        }
        if size != members {
            return Err(Error::Internal(format!("radical has {members} elements, not a power of {}", self.p)));
        }
        Ok(k)
    }
}
