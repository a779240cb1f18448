//! Quivers, dimension vectors, Cartan data and the framing construction.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// Name given to the vertex appended by [`Quiver::frame`].
pub const FRAMING_VERTEX: &str = "*";

/// A vector of non-negative integers indexed by the vertices of a quiver.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct DimVector(Vec<u32>);

impl DimVector {
    pub fn new(entries: Vec<u32>) -> Self {
        DimVector(entries)
    }

    pub fn zero(len: usize) -> Self {
        DimVector(vec![0; len])
    }

    /// The `i`-th coordinate vector of length `len`.
    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = vec![0; len];
        v[i] = 1;
        DimVector(v)
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    /// Sum of the entries.
    pub fn height(&self) -> u64 {
        self.0.iter().map(|&x| u64::from(x)).sum()
    }

    pub fn dot(&self, other: &DimVector) -> i64 {
        self.0.iter().zip(&other.0).map(|(&a, &b)| i64::from(a) * i64::from(b)).sum()
    }

    /// Componentwise `self <= other`.
    pub fn le(&self, other: &DimVector) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn add(&self, other: &DimVector) -> DimVector {
        DimVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self - other`, or `None` when some entry would go negative.
    pub fn checked_sub(&self, other: &DimVector) -> Option<DimVector> {
        self.0.iter().zip(&other.0).map(|(a, b)| a.checked_sub(*b)).collect::<Option<Vec<_>>>().map(DimVector)
    }

    pub fn scale(&self, k: u32) -> DimVector {
        DimVector(self.0.iter().map(|a| a * k).collect())
    }

    /// `self / k` when every entry is divisible by `k`.
    pub fn divide(&self, k: u32) -> Option<DimVector> {
        if k == 0 || self.0.iter().any(|a| a % k != 0) {
            return None;
        }
        Some(DimVector(self.0.iter().map(|a| a / k).collect()))
    }

    /// Gcd of the entries; zero for the zero vector.
    pub fn content(&self) -> u32 {
        self.0.iter().fold(0, |g, &a| num_integer::Integer::gcd(&g, &a))
    }

    /// A nonzero vector is indivisible when its entries have gcd 1.
    pub fn is_indivisible(&self) -> bool {
        self.content() == 1
    }

    /// Appends `k` as the coordinate of the framing vertex.
    pub fn framed(&self, k: u32) -> DimVector {
        let mut v = self.0.clone();
        v.push(k);
        DimVector(v)
    }

    /// Drops the last coordinate, returning it alongside the rest.
    pub fn split_last(&self) -> Option<(DimVector, u32)> {
        let (last, rest) = self.0.split_last()?;
        Some((DimVector(rest.to_vec()), *last))
    }
}

impl From<Vec<u32>> for DimVector {
    fn from(v: Vec<u32>) -> Self {
        DimVector(v)
    }
}

impl From<&[u32]> for DimVector {
    fn from(v: &[u32]) -> Self {
        DimVector(v.to_vec())
    }
}

impl fmt::Display for DimVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

/// `(α, k)` as a vector of the framed quiver.
pub fn framed_vector(alpha: &DimVector, k: u32) -> DimVector {
    alpha.framed(k)
}

/// Symmetric generalized Cartan matrix of a loop-free quiver.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanData {
    matrix: Vec<Vec<i64>>,
}

impl CartanData {
    pub fn rows(&self) -> &[Vec<i64>] {
        &self.matrix
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.matrix[i][j]
    }

    pub fn size(&self) -> usize {
        self.matrix.len()
    }

    /// `αᵀ C β`.
    pub fn pair(&self, alpha: &[u32], beta: &[u32]) -> i64 {
        let mut total = 0;
        for (i, &a) in alpha.iter().enumerate() {
            if a == 0 {
                continue;
            }
            let row = &self.matrix[i];
            let s: i64 = beta.iter().zip(row).map(|(&b, &c)| i64::from(b) * c).sum();
            total += i64::from(a) * s;
        }
        total
    }
}

/// A finite quiver without loops.
///
/// Vertices keep their declaration order, which fixes the coordinates of every
/// [`DimVector`] paired with the quiver. Parallel arrows are stored once each.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<(usize, usize)>,
}

impl Quiver {
    /// Builds a quiver from vertex names and arrows given by endpoint names.
    pub fn new<S: AsRef<str>>(vertices: &[S], arrows: &[(S, S)]) -> Result<Self> {
        let names: Vec<String> = vertices.iter().map(|v| v.as_ref().to_string()).collect();
        for (i, v) in names.iter().enumerate() {
            if names[..i].contains(v) {
                return Err(Error::DuplicateVertex { vertex: v.clone() });
            }
        }
        let lookup = |name: &str| {
            names.iter().position(|v| v == name).ok_or_else(|| Error::UnknownVertex { vertex: name.to_string() })
        };
        let mut idx = Vec::with_capacity(arrows.len());
        for (s, t) in arrows {
            let (s, t) = (lookup(s.as_ref())?, lookup(t.as_ref())?);
            idx.push((s, t));
        }
        Self::from_indices(names, idx)
    }

    /// Builds a quiver from arrows given by vertex positions.
    pub fn from_indices(vertices: Vec<String>, arrows: Vec<(usize, usize)>) -> Result<Self> {
        for &(s, t) in &arrows {
            for end in [s, t] {
                if end >= vertices.len() {
                    return Err(Error::UnknownVertex { vertex: end.to_string() });
                }
            }
            if s == t {
                return Err(Error::Loop { vertex: vertices[s].clone() });
            }
        }
        Ok(Quiver { vertices, arrows })
    }

    /// Vertices `1..=n` with the given arrows (1-based endpoints).
    pub fn numbered(n: usize, arrows: &[(usize, usize)]) -> Result<Self> {
        let vertices = (1..=n).map(|i| i.to_string()).collect();
        Self::from_indices(vertices, arrows.iter().map(|&(s, t)| (s - 1, t - 1)).collect())
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[(usize, usize)] {
        &self.arrows
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// Number of arrows from `i` to `j`.
    pub fn arrow_matrix(&self) -> Vec<Vec<u32>> {
        let n = self.vertex_count();
        let mut m = vec![vec![0; n]; n];
        for &(s, t) in &self.arrows {
            m[s][t] += 1;
        }
        m
    }

    /// The same quiver with every arrow reversed.
    pub fn opposite(&self) -> Quiver {
        Quiver { vertices: self.vertices.clone(), arrows: self.arrows.iter().map(|&(s, t)| (t, s)).collect() }
    }

    pub fn check_dim(&self, v: &DimVector) -> Result<()> {
        if v.len() != self.vertex_count() {
            return Err(Error::DimensionMismatch { expected: self.vertex_count(), found: v.len() });
        }
        Ok(())
    }

    pub fn cartan_matrix(&self) -> CartanData {
        let n = self.vertex_count();
        let mut matrix = vec![vec![0i64; n]; n];
        for (i, row) in matrix.iter_mut().enumerate() {
            row[i] = 2;
        }
        for &(s, t) in &self.arrows {
            matrix[s][t] -= 1;
            matrix[t][s] -= 1;
        }
        CartanData { matrix }
    }

    /// Tits form `T(α) = Σ αᵢ² − Σ_{h} α_{s(h)} α_{t(h)}`.
    pub fn tits_form(&self, alpha: &DimVector) -> Result<i64> {
        self.check_dim(alpha)?;
        Ok(self.tits_unchecked(alpha.entries()))
    }

    pub(crate) fn tits_unchecked(&self, alpha: &[u32]) -> i64 {
        let diag: i64 = alpha.iter().map(|&a| i64::from(a) * i64::from(a)).sum();
        let off: i64 = self.arrows.iter().map(|&(s, t)| i64::from(alpha[s]) * i64::from(alpha[t])).sum();
        diag - off
    }

    /// Symmetric bilinear form `αᵀ C β`, the polarization of twice the Tits form.
    pub fn bilinear_form(&self, alpha: &DimVector, beta: &DimVector) -> Result<i64> {
        self.check_dim(alpha)?;
        self.check_dim(beta)?;
        Ok(self.bilinear_unchecked(alpha.entries(), beta.entries()))
    }

    pub(crate) fn bilinear_unchecked(&self, alpha: &[u32], beta: &[u32]) -> i64 {
        let diag: i64 = alpha.iter().zip(beta).map(|(&a, &b)| 2 * i64::from(a) * i64::from(b)).sum();
        let off: i64 = self
            .arrows
            .iter()
            .map(|&(s, t)| i64::from(alpha[s]) * i64::from(beta[t]) + i64::from(alpha[t]) * i64::from(beta[s]))
            .sum();
        diag - off
    }

    /// The framed quiver: a new last vertex `*` with `λᵢ` arrows `* → i`.
    pub fn frame(&self, lambda: &DimVector) -> Result<Quiver> {
        self.check_dim(lambda)?;
        let star = self.vertex_count();
        let mut vertices = self.vertices.clone();
        vertices.push(FRAMING_VERTEX.to_string());
        let mut arrows = self.arrows.clone();
        for (i, &l) in lambda.entries().iter().enumerate() {
            arrows.extend(core::iter::repeat_n((star, i), l as usize));
        }
        Ok(Quiver { vertices, arrows })
    }

    /// Half-dimension `d(α, λ) = α·λ − T(α)` of the quiver variety `M(α, λ)`.
    ///
    /// Also evaluated as `1 − T_*(α, 1)` on the framed quiver; the two must agree.
    pub fn dim_function(&self, alpha: &DimVector, lambda: &DimVector) -> Result<i64> {
        self.check_dim(alpha)?;
        self.check_dim(lambda)?;
        let direct = alpha.dot(lambda) - self.tits_unchecked(alpha.entries());
        let framed = 1 - self.frame(lambda)?.tits_form(&alpha.framed(1))?;
        if direct != framed {
            return Err(Error::Internal(alloc::format!(
                "d(α,λ) = {direct} but 1 − T_*(α,1) = {framed} for α = {alpha}, λ = {lambda}"
            )));
        }
        Ok(direct)
    }
}

/// Named quivers used throughout tests and the command line.
pub mod builtin {
    use super::*;

    /// One vertex, no arrows.
    pub fn a1() -> Quiver {
        Quiver::numbered(1, &[]).unwrap()
    }

    pub fn a2() -> Quiver {
        Quiver::numbered(2, &[(1, 2)]).unwrap()
    }

    pub fn a3() -> Quiver {
        Quiver::numbered(3, &[(1, 2), (2, 3)]).unwrap()
    }

    /// Vertex 2 is the branch point; the highest root is `(1,2,1,1)`.
    pub fn d4() -> Quiver {
        Quiver::numbered(4, &[(1, 2), (3, 2), (4, 2)]).unwrap()
    }

    /// Two vertices joined by `m` parallel arrows.
    pub fn kronecker(m: usize) -> Quiver {
        Quiver::numbered(2, &vec![(1, 2); m]).unwrap()
    }

    /// Oriented 3-cycle; its underlying graph is affine `A₂`.
    pub fn triangle() -> Quiver {
        Quiver::numbered(3, &[(1, 2), (2, 3), (3, 1)]).unwrap()
    }

    /// Resolves the names accepted on the command line.
    pub fn by_name(name: &str) -> Option<Quiver> {
        match name {
            "a1" => Some(a1()),
            "a2" => Some(a2()),
            "a3" => Some(a3()),
            "d4" => Some(d4()),
            "triangle" => Some(triangle()),
            _ => name.strip_prefix("kronecker").and_then(|m| m.parse().ok()).map(kronecker),
        }
    }
}
